//! The irreducible start graphs.
//!
//! Every dual fullerene reduces to C20, the Td isomer of C28, or a member of
//! the (5,0) nanotube series C30, C40, C50, ... The nanotube series is produced
//! from C30 by repeatedly inserting a ring of five 6-vertices with [`apply_f`].

use crate::error::{invalid, Result};
use crate::planar_map::{orient_patch, DualFullerene, Tri};

const C20: [[usize; 5]; 12] = [
    [1, 5, 4, 3, 2],
    [0, 2, 7, 6, 5],
    [0, 3, 8, 7, 1],
    [0, 4, 9, 8, 2],
    [0, 5, 10, 9, 3],
    [0, 1, 6, 10, 4],
    [1, 7, 11, 10, 5],
    [1, 2, 8, 11, 6],
    [2, 3, 9, 11, 7],
    [3, 4, 10, 11, 8],
    [4, 5, 6, 11, 9],
    [6, 7, 8, 9, 10],
];

const C28: [&[usize]; 16] = [
    &[4, 7, 8, 11, 10, 5],
    &[4, 6, 13, 14, 9, 7],
    &[5, 10, 12, 15, 13, 6],
    &[8, 9, 14, 15, 12, 11],
    &[0, 5, 6, 1, 7],
    &[0, 10, 2, 6, 4],
    &[1, 4, 5, 2, 13],
    &[0, 4, 1, 9, 8],
    &[0, 7, 9, 3, 11],
    &[1, 14, 3, 8, 7],
    &[0, 11, 12, 2, 5],
    &[0, 8, 3, 12, 10],
    &[2, 10, 11, 3, 15],
    &[1, 6, 2, 15, 14],
    &[1, 13, 15, 3, 9],
    &[2, 12, 3, 14, 13],
];

const C30: [&[usize]; 17] = [
    &[1, 5, 4, 3, 2],
    &[0, 2, 7, 6, 5],
    &[0, 3, 8, 7, 1],
    &[0, 4, 9, 8, 2],
    &[0, 5, 10, 9, 3],
    &[0, 1, 6, 10, 4],
    &[1, 7, 12, 11, 10, 5],
    &[1, 2, 8, 13, 12, 6],
    &[2, 3, 9, 14, 13, 7],
    &[3, 4, 10, 15, 14, 8],
    &[4, 5, 6, 11, 15, 9],
    &[6, 12, 16, 15, 10],
    &[6, 7, 13, 16, 11],
    &[7, 8, 14, 16, 12],
    &[8, 9, 15, 16, 13],
    &[9, 10, 11, 16, 14],
    &[11, 12, 13, 14, 15],
];

/// Which irreducible graph to build.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum SeedKind {
    C20,
    /// The tetrahedral isomer of C28.
    C28,
    /// The (5,0) nanotube with `30 + 10k` atoms.
    Nanotube(usize),
}

impl SeedKind {
    /// Atom count of the seed.
    pub fn primal_order(self) -> usize {
        match self {
            SeedKind::C20 => 20,
            SeedKind::C28 => 28,
            SeedKind::Nanotube(k) => 30 + 10 * k,
        }
    }
}

pub fn build_seed(kind: SeedKind) -> DualFullerene {
    let rot: Vec<Vec<usize>> = match kind {
        SeedKind::C20 => C20.iter().map(|r| r.to_vec()).collect(),
        SeedKind::C28 => C28.iter().map(|r| r.to_vec()).collect(),
        SeedKind::Nanotube(k) => {
            let mut g = build_seed_c30();
            for _ in 0..k {
                g = apply_f(&g).expect("nanotubes stay nanotubes");
            }
            return g;
        }
    };
    DualFullerene::from_rotations(&rot).expect("seed tables are valid")
}

fn build_seed_c30() -> DualFullerene {
    let rot: Vec<Vec<usize>> = C30.iter().map(|r| r.to_vec()).collect();
    DualFullerene::from_rotations(&rot).expect("seed tables are valid")
}

/// Finds a cap centre of a (5,0) nanotube together with its BFS layers.
fn nanotube_layers(g: &DualFullerene) -> Option<(usize, Vec<Vec<usize>>)> {
    let n = g.nv();
    if n < 17 || (n - 17) % 5 != 0 {
        return None;
    }
    let layers = (n + 8) / 5;
    'centre: for t in g.pentagons() {
        if g.neighbours(t).iter().any(|&u| g.degree(u as usize) != 5) {
            continue;
        }
        let dist = g.bfs_distances(t, usize::MAX);
        let mut by_layer = vec![Vec::new(); layers];
        for (v, &d) in dist.iter().enumerate() {
            if d >= layers {
                continue 'centre;
            }
            by_layer[d].push(v);
        }
        for (i, layer) in by_layer.iter().enumerate() {
            let size = if i == 0 || i == layers - 1 { 1 } else { 5 };
            let degree = if i <= 1 || i >= layers - 2 { 5 } else { 6 };
            if layer.len() != size || layer.iter().any(|&v| g.degree(v) != degree) {
                continue 'centre;
            }
        }
        return Some((t, by_layer));
    }
    None
}

/// Lengthens a (5,0) nanotube by one ring of five hexagons.
pub fn apply_f(g: &DualFullerene) -> Result<DualFullerene> {
    let Some((t, _)) = nanotube_layers(g) else {
        return invalid("graph is not a (5,0) nanotube");
    };
    let r: Vec<usize> = g.neighbours(t).iter().map(|&u| u as usize).collect();
    let mut z = [0usize; 5];
    for i in 0..5 {
        let (a, b) = (r[i], r[(i + 1) % 5]);
        z[i] = g
            .neighbours(a)
            .iter()
            .map(|&x| x as usize)
            .find(|&x| x != t && g.slot_of(b, x).is_some())
            .expect("adjacent vertices share two faces");
    }
    let orient = |a: usize, b: usize, c: usize| -> Tri {
        if g.is_face(a, b, c) {
            [a as u16, b as u16, c as u16]
        } else {
            [a as u16, c as u16, b as u16]
        }
    };
    let nv = g.nv();
    let nn = |i: usize| (nv + i % 5) as u16;
    let mut removed = Vec::new();
    let mut added = Vec::new();
    for i in 0..5 {
        let (ri, rj) = (r[i] as u16, r[(i + 1) % 5] as u16);
        let (zp, zi) = (z[(i + 4) % 5] as u16, z[i] as u16);
        removed.push(orient(r[i], r[(i + 1) % 5], z[i]));
        removed.push(orient(r[i], z[(i + 4) % 5], z[i]));
        added.push([ri, rj, nn(i)]);
        added.push([ri, nn(i + 4), nn(i)]);
        added.push([nn(i), nn(i + 1), zi]);
        added.push([nn(i), zp, zi]);
    }
    let added = orient_patch(&removed, &added).expect("band is a disk");
    let out = g.retriangulate(&removed, &added, nv + 5).expect("band replacement is planar");
    debug_assert_eq!(out.validate(), Ok(()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_have_expected_orders() {
        for kind in [SeedKind::C20, SeedKind::C28, SeedKind::Nanotube(0), SeedKind::Nanotube(3)] {
            let g = build_seed(kind);
            assert_eq!(g.validate(), Ok(()));
            assert_eq!(g.primal_order(), kind.primal_order());
        }
    }

    #[test]
    fn f_preserves_nanotube_shape() {
        let mut g = build_seed(SeedKind::Nanotube(0));
        for k in 1..6 {
            g = apply_f(&g).unwrap();
            assert_eq!(g.validate(), Ok(()));
            assert_eq!(g.primal_order(), 30 + 10 * k);
            assert!(nanotube_layers(&g).is_some());
        }
    }

    #[test]
    fn f_rejects_other_graphs() {
        assert!(apply_f(&build_seed(SeedKind::C20)).is_err());
        assert!(apply_f(&build_seed(SeedKind::C28)).is_err());
    }

    #[test]
    fn nanotube_pentagon_distance() {
        // The caps keep adjacent pentagons however long the tube gets.
        assert_eq!(build_seed(SeedKind::Nanotube(4)).min_pentagon_distance(), 1);
    }
}
