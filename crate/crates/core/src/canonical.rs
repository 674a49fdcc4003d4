//! Canonical reductions and automorphism groups.
//!
//! Among all reductions of minimal length, the canonical one minimises the
//! invariant tuple `(x0, ..., x5)` lexicographically, up to automorphisms.
//! The components grow in cost: `x1..x4` are read off the neighbourhoods of
//! the path ends, `x5` is a full BFS code and is only computed for the
//! candidates that survive all earlier components.

use std::collections::{HashMap, VecDeque};

use crate::expansions::{
    is_valid_reduction, reduction_candidates, reduction_infos, site_partner, ExpansionKind, ExpansionSite, ReductionInfo,
    ReductionTriple,
};
use crate::planar_map::{Dart, DualFullerene};

/// Invariant tuple of a reduction. Components are `None` when not computed.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InvariantTuple {
    /// Path length.
    pub x0: u32,
    /// Minus the number of edges on the longest straight segment.
    pub x1: i32,
    /// Degrees around both path ends, packed.
    pub x2: Option<u64>,
    /// Degrees of the second neighbourhood of the first path end, packed.
    pub x3: Option<u64>,
    /// Degrees of the second neighbourhood of the last path end, packed.
    pub x4: Option<u64>,
    /// BFS code from the reduction's dart.
    pub x5: Option<Vec<u16>>,
}

/// Left-aligned 2-bit packing of a degree sequence, so that comparing the
/// packed values compares the sequences lexicographically.
struct Packer {
    value: u64,
    used: u32,
}

impl Packer {
    fn new() -> Self {
        Packer { value: 0, used: 0 }
    }

    fn push(&mut self, degree: usize) {
        debug_assert!(self.used < 32);
        self.value = (self.value << 2) | (degree as u64 - 4);
        self.used += 1;
    }

    fn finish(self) -> u64 {
        self.value << (2 * (32 - self.used))
    }
}

fn x1_of(kind: ExpansionKind) -> i32 {
    -(kind.longest_straight() as i32)
}

/// Degrees of the four non-path neighbours at both ends, read in direction `dir`.
fn x2_of(g: &DualFullerene, r: &ReductionInfo) -> u64 {
    let mut p = Packer::new();
    for d in [r.triple.dart, r.end] {
        for k in 1..=4 {
            p.push(g.degree(g.head(g.rotate(d, k, r.triple.dir))));
        }
    }
    p.finish()
}

/// Degrees of the second neighbourhood of `d`'s origin, neighbour by neighbour.
fn ring2(g: &DualFullerene, d: Dart, dir: u8) -> u64 {
    let v = d.origin();
    let mut p = Packer::new();
    for k in 0..g.degree(v) {
        let y = g.rotate(d, k, dir);
        let back = g.inverse(y);
        for m in 1..g.degree(back.origin()) {
            p.push(g.degree(g.head(g.rotate(back, m, dir))));
        }
    }
    p.finish()
}

/// Computes the invariant tuple of a reduction, up to and including component `upto`.
pub fn invariant_tuple(g: &DualFullerene, t: &ReductionTriple, upto: usize) -> Option<InvariantTuple> {
    let info = reduction_infos_for(g, t)?;
    let mut x = InvariantTuple {
        x0: t.kind.length() as u32,
        x1: x1_of(t.kind),
        x2: None,
        x3: None,
        x4: None,
        x5: None,
    };
    if upto >= 2 {
        x.x2 = Some(x2_of(g, &info));
    }
    if upto >= 3 {
        x.x3 = Some(ring2(g, t.dart, t.dir));
    }
    if upto >= 4 {
        x.x4 = Some(ring2(g, info.end, t.dir));
    }
    if upto >= 5 {
        x.x5 = Some(bfs_code(g, t.dart, t.dir));
    }
    Some(x)
}

fn reduction_infos_for(g: &DualFullerene, t: &ReductionTriple) -> Option<ReductionInfo> {
    reduction_infos(g, t.kind.length()).into_iter().find(|r| r.triple == *t)
}

/// BFS numbering from a dart: vertices are numbered in the order they are
/// reached, neighbours being scanned in direction `dir` starting from the
/// dart each vertex was entered by. Returns the code and the vertex order.
fn bfs_walk(g: &DualFullerene, start: Dart, dir: u8, code: &mut Vec<u16>, order: &mut Vec<u16>, bound: Option<&[u16]>) -> bool {
    let n = g.nv();
    let mut number = vec![0u16; n];
    let mut entry = vec![Dart::new(0, 0); n];
    code.clear();
    order.clear();
    let mut queue = VecDeque::with_capacity(n);
    let v0 = start.origin();
    number[v0] = 1;
    entry[v0] = start;
    order.push(v0 as u16);
    queue.push_back(v0);
    let mut next = 2u16;
    let mut smaller = false;
    while let Some(v) = queue.pop_front() {
        let d0 = entry[v];
        for k in 0..g.degree(v) {
            let d = g.rotate(d0, k, dir);
            let u = g.head(d);
            if number[u] == 0 {
                number[u] = next;
                next += 1;
                entry[u] = g.inverse(d);
                order.push(u as u16);
                queue.push_back(u);
            }
            code.push(number[u]);
            if let (false, Some(b)) = (smaller, bound) {
                let i = code.len() - 1;
                match code[i].cmp(&b[i]) {
                    std::cmp::Ordering::Less => smaller = true,
                    std::cmp::Ordering::Greater => return false,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        code.push(0);
        if let (false, Some(b)) = (smaller, bound) {
            let i = code.len() - 1;
            if b[i] != 0 {
                smaller = true;
            }
        }
    }
    true
}

/// Canonical BFS code of `g` rooted at `start`, reading rotations in direction `dir`.
pub fn bfs_code(g: &DualFullerene, start: Dart, dir: u8) -> Vec<u16> {
    let mut code = Vec::new();
    let mut order = Vec::new();
    bfs_walk(g, start, dir, &mut code, &mut order, None);
    code
}

/// A symmetry of a dual fullerene: a vertex permutation, plus whether it keeps
/// or reverses the orientation of the sphere.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Automorphism {
    pub perm: Vec<u16>,
    pub preserves_orientation: bool,
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Automorphism { perm: (0..n as u16).collect(), preserves_orientation: true }
    }

    pub fn is_identity(&self) -> bool {
        self.preserves_orientation && self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    pub fn map_dart(&self, g: &DualFullerene, d: Dart) -> Dart {
        let v = self.perm[d.origin()] as usize;
        let u = self.perm[g.head(d)] as usize;
        g.dart(v, u).expect("automorphisms map edges to edges")
    }

    pub fn map_site(&self, g: &DualFullerene, s: &ExpansionSite) -> ExpansionSite {
        ExpansionSite {
            start: self.map_dart(g, s.start),
            kind: s.kind,
            dir: if self.preserves_orientation { s.dir } else { 1 - s.dir },
        }
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            perm: other.perm.iter().map(|&x| self.perm[x as usize]).collect(),
            preserves_orientation: self.preserves_orientation == other.preserves_orientation,
        }
    }

    /// True if this really is a symmetry of `g`.
    pub fn is_automorphism_of(&self, g: &DualFullerene) -> bool {
        let n = g.nv();
        if self.perm.len() != n {
            return false;
        }
        (0..n).all(|v| {
            let w = self.perm[v] as usize;
            let k = g.degree(v);
            if g.degree(w) != k {
                return false;
            }
            let a = g.neighbours(v);
            let b = g.neighbours(w);
            let Some(s) = b.iter().position(|&x| x == self.perm[a[0] as usize]) else {
                return false;
            };
            (0..k).all(|i| {
                let j = if self.preserves_orientation { (s + i) % k } else { (s + k - i) % k };
                b[j] == self.perm[a[i] as usize]
            })
        })
    }
}

/// A group of automorphisms, always containing the identity first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutomorphismGroup {
    elements: Vec<Automorphism>,
}

impl AutomorphismGroup {
    pub fn trivial(n: usize) -> Self {
        AutomorphismGroup { elements: vec![Automorphism::identity(n)] }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// Number of orientation-preserving elements.
    pub fn rotation_order(&self) -> usize {
        self.elements.iter().filter(|a| a.preserves_orientation).count()
    }

    /// Builds the group from rooted BFS numberings that all produce the same
    /// minimal code: mapping the `k`-th vertex of the first to the `k`-th
    /// vertex of each other numbering is an automorphism.
    fn from_numberings(n: usize, numberings: &[(Vec<u16>, u8)]) -> Self {
        let (ref0, dir0) = &numberings[0];
        let mut elements = Vec::with_capacity(numberings.len());
        for (order, dir) in numberings {
            let mut perm = vec![0u16; n];
            for (k, &v) in ref0.iter().enumerate() {
                perm[v as usize] = order[k];
            }
            elements.push(Automorphism { perm, preserves_orientation: dir == dir0 });
        }
        if let Some(i) = elements.iter().position(Automorphism::is_identity) {
            elements.swap(0, i);
        }
        AutomorphismGroup { elements }
    }
}

/// Full automorphism group of a dual fullerene, from the minimal BFS code
/// over every dart and both orientations.
pub fn automorphism_group(g: &DualFullerene) -> AutomorphismGroup {
    let mut best: Option<Vec<u16>> = None;
    let mut hits: Vec<(Vec<u16>, u8)> = Vec::new();
    let mut code = Vec::new();
    let mut order = Vec::new();
    for d in g.darts() {
        for dir in 0..2u8 {
            if !bfs_walk(g, d, dir, &mut code, &mut order, best.as_deref()) {
                continue;
            }
            match best.as_ref().map(|b| code.cmp(b)) {
                Some(std::cmp::Ordering::Greater) => {}
                Some(std::cmp::Ordering::Equal) => hits.push((order.clone(), dir)),
                _ => {
                    best = Some(code.clone());
                    hits.clear();
                    hits.push((order.clone(), dir));
                }
            }
        }
    }
    AutomorphismGroup::from_numberings(g.nv(), &hits)
}

/// Outcome of a canonicity test.
#[derive(Clone, Debug)]
pub struct Canonicity {
    pub accepted: bool,
    /// Index of the invariant component that settled the test.
    pub decided_at: usize,
    /// Automorphism group of the graph, available when accepted.
    pub group: Option<AutomorphismGroup>,
}

impl Canonicity {
    fn reject(level: usize) -> Self {
        Canonicity { accepted: false, decided_at: level, group: None }
    }
}

fn key_component(g: &DualFullerene, r: &ReductionInfo, level: usize) -> u64 {
    match level {
        0 => (64 + x1_of(r.triple.kind)) as u64,
        1 => x2_of(g, r),
        2 => ring2(g, r.triple.dart, r.triple.dir),
        _ => ring2(g, r.end, r.triple.dir),
    }
}

/// Compares the `(x1, .., x4)` part of a reduction's tuple with `best`,
/// computing components only as far as needed. Returns the ordering and the
/// 1-based component that decided it (5 for a tie).
fn compare_key(g: &DualFullerene, r: &ReductionInfo, best: &[u64; 4]) -> (std::cmp::Ordering, usize) {
    for (level, &b) in best.iter().enumerate() {
        let c = key_component(g, r, level).cmp(&b);
        if c != std::cmp::Ordering::Equal {
            return (c, level + 1);
        }
    }
    (std::cmp::Ordering::Equal, 5)
}

/// Decides whether `t`, the reduction that undoes the last expansion, is
/// canonical in `g`: no shorter reduction exists and `t` (or the same path
/// read backwards) minimises the invariant tuple up to symmetry.
///
/// Minimising `(x1, .., x4)` level by level over the valid reductions is the
/// same as minimising the packed tuple, so only the reductions whose tuple is
/// at most that of `t` need the expensive validity check.
pub fn is_canonical(g: &DualFullerene, t: &ReductionTriple) -> Canonicity {
    let len = t.kind.length();
    let cands = reduction_candidates(g, len);
    let Some(own) = cands.iter().find(|r| r.triple == *t).copied() else {
        return Canonicity::reject(0);
    };
    if !is_valid_reduction(g, t) {
        return Canonicity::reject(0);
    }
    if cands.iter().any(|r| r.triple.kind.length() < len && is_valid_reduction(g, &r.triple)) {
        return Canonicity::reject(0);
    }
    let partner = own.partner();
    let is_pair = |r: &ReductionInfo| r.triple == *t || r.triple == partner;
    let full = |r: &ReductionInfo| -> [u64; 4] { [0, 1, 2, 3].map(|l| key_component(g, r, l)) };
    let best = full(&own).min(full(&ReductionInfo { triple: partner, end: own.triple.dart }));
    let mut ties: Vec<&ReductionInfo> = Vec::new();
    let mut decided_at = 1;
    for r in cands.iter().filter(|r| r.triple.kind.length() == len) {
        let (ord, level) = compare_key(g, r, &best);
        if is_pair(r) {
            if ord == std::cmp::Ordering::Equal {
                ties.push(r);
            }
            continue;
        }
        match ord {
            std::cmp::Ordering::Greater => decided_at = decided_at.max(level),
            std::cmp::Ordering::Less => {
                if is_valid_reduction(g, &r.triple) {
                    return Canonicity::reject(level);
                }
            }
            std::cmp::Ordering::Equal => {
                if is_valid_reduction(g, &r.triple) {
                    ties.push(r);
                }
            }
        }
    }
    let n = g.nv();
    if ties.iter().all(|r| is_pair(r)) {
        let group = if ties.len() == 1 {
            AutomorphismGroup::trivial(n)
        } else {
            let mut numberings = Vec::with_capacity(2);
            let mut codes = Vec::with_capacity(2);
            for r in &ties {
                let (mut code, mut order) = (Vec::new(), Vec::new());
                bfs_walk(g, r.triple.dart, r.triple.dir, &mut code, &mut order, None);
                codes.push(code);
                numberings.push((order, r.triple.dir));
            }
            if codes[0] == codes[1] {
                AutomorphismGroup::from_numberings(n, &numberings)
            } else {
                AutomorphismGroup::trivial(n)
            }
        };
        return Canonicity { accepted: true, decided_at: decided_at.min(4), group: Some(group) };
    }
    let mut best: Option<Vec<u16>> = None;
    let mut hits: Vec<(Vec<u16>, u8, bool)> = Vec::new();
    let mut code = Vec::new();
    let mut order = Vec::new();
    for r in ties {
        if !bfs_walk(g, r.triple.dart, r.triple.dir, &mut code, &mut order, best.as_deref()) {
            continue;
        }
        match best.as_ref().map(|b| code.cmp(b)) {
            Some(std::cmp::Ordering::Greater) => {}
            Some(std::cmp::Ordering::Equal) => hits.push((order.clone(), r.triple.dir, is_pair(r))),
            _ => {
                best = Some(code.clone());
                hits.clear();
                hits.push((order.clone(), r.triple.dir, is_pair(r)));
            }
        }
    }
    if !hits.iter().any(|h| h.2) {
        return Canonicity::reject(5);
    }
    let numberings: Vec<(Vec<u16>, u8)> = hits.into_iter().map(|(o, d, _)| (o, d)).collect();
    Canonicity { accepted: true, decided_at: 5, group: Some(AutomorphismGroup::from_numberings(n, &numberings)) }
}

/// One representative per orbit of expansion sites under the group, where a
/// site and its partner (the same expansion seen from the other end) count
/// as equivalent. Representatives are the first member of each orbit.
pub fn site_equivalence_classes(g: &DualFullerene, sites: &[ExpansionSite], group: &AutomorphismGroup) -> Vec<ExpansionSite> {
    let partners: Vec<Option<ExpansionSite>> = sites.iter().map(|s| site_partner(g, s)).collect();
    orbit_representatives(g, sites, &partners, group).into_iter().map(|i| sites[i]).collect()
}

/// Indices of the orbit representatives, given each site's partner.
pub(crate) fn orbit_representatives(
    g: &DualFullerene,
    sites: &[ExpansionSite],
    partners: &[Option<ExpansionSite>],
    group: &AutomorphismGroup,
) -> Vec<usize> {
    let index: HashMap<ExpansionSite, usize> = sites.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let mut parent: Vec<usize> = (0..sites.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let union = |parent: &mut Vec<usize>, a: usize, b: usize| {
        let (ra, rb) = (find(parent, a), find(parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    };
    for (i, s) in sites.iter().enumerate() {
        if let Some(j) = partners[i].and_then(|p| index.get(&p).copied()) {
            union(&mut parent, i, j);
        }
        for a in group.elements().iter().skip(1) {
            if let Some(&j) = index.get(&a.map_site(g, s)) {
                union(&mut parent, i, j);
            }
        }
    }
    (0..sites.len()).filter(|&i| find(&mut parent, i) == i).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansions::{apply_expansion, enumerate_expansion_sites};
    use crate::seeds::{build_seed, SeedKind};

    #[test]
    fn seed_group_orders() {
        assert_eq!(automorphism_group(&build_seed(SeedKind::C20)).order(), 120);
        assert_eq!(automorphism_group(&build_seed(SeedKind::C28)).order(), 24);
        assert_eq!(automorphism_group(&build_seed(SeedKind::Nanotube(0))).order(), 20);
        let c60 = build_seed(SeedKind::C20).leapfrog();
        assert_eq!(automorphism_group(&c60).order(), 120);
    }

    #[test]
    fn group_elements_are_automorphisms() {
        let g = build_seed(SeedKind::C28);
        let grp = automorphism_group(&g);
        assert!(grp.elements()[0].is_identity());
        for a in grp.elements() {
            assert!(a.is_automorphism_of(&g));
            for b in grp.elements() {
                assert!(grp.elements().contains(&a.compose(b)));
            }
        }
    }

    #[test]
    fn bfs_code_is_relabelling_invariant() {
        let g = build_seed(SeedKind::Nanotube(1));
        let perm: Vec<usize> = (0..g.nv()).map(|v| (v * 7 + 3) % g.nv()).collect();
        let h = g.relabel(&perm).unwrap();
        let d = Dart::new(0, 2);
        let e = h.dart(perm[0], perm[g.head(d)]).unwrap();
        assert_eq!(bfs_code(&g, d, 1), bfs_code(&h, e, 1));
    }

    #[test]
    fn canonical_group_matches_full_group() {
        let g = build_seed(SeedKind::C20);
        for site in enumerate_expansion_sites(&g, 3) {
            let (h, t) = apply_expansion(&g, &site).unwrap();
            let c = is_canonical(&h, &t);
            if c.accepted {
                assert_eq!(c.group.unwrap().order(), automorphism_group(&h).order(), "{site:?}");
            }
        }
    }

    #[test]
    fn c20_orbits() {
        let g = build_seed(SeedKind::C20);
        let grp = automorphism_group(&g);
        let sites = enumerate_expansion_sites(&g, 1);
        let reps = site_equivalence_classes(&g, &sites, &grp);
        assert_eq!(reps.len(), 1);
    }
}
