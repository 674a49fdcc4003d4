//! Brute-force reference implementations used to cross-check the generator.
//!
//! Nothing here shares code with the canonicity machinery: isomorphism
//! classes come from a plain minimum over all rooted BFS codes, and the
//! closure generator applies every expansion and deduplicates by that form.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::expansions::{apply_expansion, enumerate_expansion_sites};
use crate::planar_map::{Dart, DualFullerene, PrimalFullerene};
use crate::seeds::{apply_f, build_seed, SeedKind};

/// Largest atom count [`closure_generate`] accepts by default.
pub const CLOSURE_CAP: usize = 44;

/// Largest atom count [`is_hamiltonian`] accepts by default.
pub const HAMILTONIAN_CAP: usize = 100;

/// A complete isomorphism invariant of a dual fullerene, where mirror images
/// count as isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u16>);

impl CanonicalForm {
    pub fn as_slice(&self) -> &[u16] {
        &self.0
    }

    /// Dual order encoded in the form.
    pub fn nv(&self) -> usize {
        self.0.iter().filter(|&&x| x == 0).count()
    }
}

fn rooted_code(g: &DualFullerene, start: Dart, mirrored: bool) -> Vec<u16> {
    let n = g.nv();
    let mut number = vec![0u16; n];
    let mut first = vec![0usize; n];
    let mut code = Vec::with_capacity(7 * n);
    let mut queue = VecDeque::new();
    number[start.origin()] = 1;
    first[start.origin()] = g.head(start);
    queue.push_back(start.origin());
    let mut next = 2;
    while let Some(v) = queue.pop_front() {
        let rot = g.neighbours(v);
        let k = rot.len();
        let s = rot.iter().position(|&u| u as usize == first[v]).unwrap();
        for i in 0..k {
            let u = rot[if mirrored { (s + k - i) % k } else { (s + i) % k }] as usize;
            if number[u] == 0 {
                number[u] = next;
                next += 1;
                first[u] = v;
                queue.push_back(u);
            }
            code.push(number[u]);
        }
        code.push(0);
    }
    code
}

/// Minimum rooted BFS code over every dart and both orientations.
pub fn canonical_form(g: &DualFullerene) -> CanonicalForm {
    let best = g
        .darts()
        .flat_map(|d| [rooted_code(g, d, false), rooted_code(g, d, true)])
        .min()
        .expect("graphs have darts");
    CanonicalForm(best)
}

/// All dual fullerenes up to `n_max` atoms, by closing the seeds under every
/// expansion and nanotube extension, grouped by atom count.
pub fn closure_generate(n_max: usize) -> Result<BTreeMap<usize, BTreeSet<CanonicalForm>>> {
    closure_generate_capped(n_max, CLOSURE_CAP)
}

pub fn closure_generate_capped(n_max: usize, cap: usize) -> Result<BTreeMap<usize, BTreeSet<CanonicalForm>>> {
    if n_max > cap {
        return Err(Error::CapExceeded { what: format!("closure generation up to {n_max} atoms"), cap });
    }
    let mut seen: BTreeSet<CanonicalForm> = BTreeSet::new();
    let mut out: BTreeMap<usize, BTreeSet<CanonicalForm>> = BTreeMap::new();
    let mut stack = Vec::new();
    for kind in [SeedKind::C20, SeedKind::C28, SeedKind::Nanotube(0)] {
        if kind.primal_order() <= n_max {
            stack.push(build_seed(kind));
        }
    }
    while let Some(g) = stack.pop() {
        let form = canonical_form(&g);
        if !seen.insert(form.clone()) {
            continue;
        }
        out.entry(g.primal_order()).or_default().insert(form);
        let room = (n_max / 2 + 2).saturating_sub(g.nv());
        if room < 2 {
            continue;
        }
        for site in enumerate_expansion_sites(&g, room - 1) {
            stack.push(apply_expansion(&g, &site)?.0);
        }
        if room >= 5 {
            if let Ok(h) = apply_f(&g) {
                stack.push(h);
            }
        }
    }
    Ok(out)
}

/// True if no two pentagons share an edge, i.e. no two 5-vertices of the
/// dual are adjacent.
pub fn is_ipr(g: &DualFullerene) -> bool {
    (0..g.nv()).all(|v| g.degree(v) == 6 || g.neighbours(v).iter().all(|&u| g.degree(u as usize) == 6))
}

/// Numbers of pentagonal, hexagonal and other faces.
pub fn face_census(p: &PrimalFullerene) -> (usize, usize, usize) {
    let mut c = (0, 0, 0);
    for f in p.faces() {
        match f.len() {
            5 => c.0 += 1,
            6 => c.1 += 1,
            _ => c.2 += 1,
        }
    }
    c
}

/// True if the graph is simple, connected and 3-regular.
pub fn is_cubic(p: &PrimalFullerene) -> bool {
    let n = p.order();
    for v in 0..n {
        let r = p.neighbours(v);
        if r.iter().any(|&u| u as usize == v || u as usize >= n) || r[0] == r[1] || r[1] == r[2] || r[0] == r[2] {
            return false;
        }
        if r.iter().any(|&u| !p.neighbours(u as usize).contains(&(v as u16))) {
            return false;
        }
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &u in p.neighbours(v) {
            if !std::mem::replace(&mut seen[u as usize], true) {
                stack.push(u as usize);
            }
        }
    }
    seen.iter().all(|&s| s)
}

struct HamSearch<'a> {
    p: &'a PrimalFullerene,
    on_path: Vec<bool>,
    path: Vec<usize>,
}

impl HamSearch<'_> {
    fn free(&self, z: usize, end: usize) -> usize {
        self.p
            .neighbours(z)
            .iter()
            .filter(|&&w| {
                let w = w as usize;
                !self.on_path[w] || w == end || w == self.path[0]
            })
            .count()
    }

    fn extend(&mut self) -> bool {
        let n = self.p.order();
        let end = *self.path.last().unwrap();
        if self.path.len() == n {
            return self.p.neighbours(end).contains(&(self.path[0] as u16));
        }
        for &y in self.p.neighbours(end) {
            let y = y as usize;
            if self.on_path[y] {
                continue;
            }
            self.on_path[y] = true;
            self.path.push(y);
            // `end` is now interior: its other neighbours must still be enterable and leavable.
            let dead = self.p.neighbours(end).iter().any(|&z| {
                let z = z as usize;
                !self.on_path[z] && self.free(z, y) < 2
            });
            if !dead && self.extend() {
                return true;
            }
            self.path.pop();
            self.on_path[y] = false;
        }
        false
    }
}

/// A Hamiltonian cycle, found by backtracking, or `None` if there is none.
pub fn hamiltonian_cycle(p: &PrimalFullerene) -> Result<Option<Vec<usize>>> {
    hamiltonian_cycle_capped(p, HAMILTONIAN_CAP)
}

pub fn hamiltonian_cycle_capped(p: &PrimalFullerene, cap: usize) -> Result<Option<Vec<usize>>> {
    if p.order() > cap {
        return Err(Error::CapExceeded { what: format!("Hamiltonian search on {} vertices", p.order()), cap });
    }
    let mut s = HamSearch { p, on_path: vec![false; p.order()], path: vec![0] };
    s.on_path[0] = true;
    Ok(s.extend().then_some(s.path))
}

pub fn is_hamiltonian(p: &PrimalFullerene) -> Result<bool> {
    Ok(hamiltonian_cycle(p)?.is_some())
}

/// Checks that `cycle` visits every vertex once along edges of `p`.
pub fn is_hamiltonian_cycle(p: &PrimalFullerene, cycle: &[usize]) -> bool {
    let n = p.order();
    if cycle.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for (i, &v) in cycle.iter().enumerate() {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return false;
        }
        let w = cycle[(i + 1) % n];
        if !p.neighbours(v).contains(&(w as u16)) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms_ignore_labels_and_mirroring() {
        let g = build_seed(SeedKind::C28);
        let perm: Vec<usize> = (0..g.nv()).rev().collect();
        assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm).unwrap()));
        assert_eq!(canonical_form(&g), canonical_form(&g.mirror()));
        assert_ne!(canonical_form(&g), canonical_form(&build_seed(SeedKind::C20)));
        assert_eq!(canonical_form(&g).nv(), 16);
    }

    #[test]
    fn random_relabelings_share_one_form() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let g = build_seed(SeedKind::C20);
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let forms: BTreeSet<_> = (0..100)
            .map(|_| {
                let mut perm: Vec<usize> = (0..g.nv()).collect();
                perm.shuffle(&mut rng);
                canonical_form(&g.relabel(&perm).unwrap())
            })
            .collect();
        assert_eq!(forms.len(), 1);
    }

    #[test]
    fn closure_small_counts() {
        let c = closure_generate(32).unwrap();
        let counts: Vec<(usize, usize)> = c.iter().map(|(&n, s)| (n, s.len())).collect();
        assert_eq!(counts, [(20, 1), (24, 1), (26, 1), (28, 2), (30, 3), (32, 6)]);
        assert!(matches!(closure_generate(46), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn ipr_and_census() {
        let c60 = build_seed(SeedKind::C20).leapfrog();
        assert!(is_ipr(&c60));
        assert!(!is_ipr(&build_seed(SeedKind::C20)));
        let c60 = c60.to_primal();
        assert_eq!(face_census(&c60), (12, 20, 0));
        assert!(is_cubic(&c60));
    }

    #[test]
    fn hamiltonian_witness() {
        for kind in [SeedKind::C20, SeedKind::C28, SeedKind::Nanotube(3)] {
            let p = build_seed(kind).to_primal();
            let c = hamiltonian_cycle(&p).unwrap().unwrap();
            assert!(is_hamiltonian_cycle(&p, &c));
        }
        let big = build_seed(SeedKind::Nanotube(8)).to_primal();
        assert!(matches!(is_hamiltonian(&big), Err(Error::CapExceeded { .. })));
    }
}
