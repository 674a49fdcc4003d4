//! Rotation systems for dual fullerenes and their primal cubic graphs.
//!
//! A dual fullerene is stored as a rotation system: every vertex keeps its
//! neighbours in clockwise order as seen from outside the sphere. Faces are
//! the oriented triangles `(v, a, b)` where `b` follows `a` clockwise at `v`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{invalid, Result};

/// Largest dual order the fixed-width storage accepts.
pub const MAX_DUAL_ORDER: usize = u16::MAX as usize;

/// A directed edge, identified by its origin vertex and a slot in the
/// origin's rotation. Ids are `origin * 6 + slot` and need not be dense.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart(u32);

impl Dart {
    pub fn new(origin: usize, slot: usize) -> Self {
        debug_assert!(slot < 6);
        Dart((origin * 6 + slot) as u32)
    }

    pub fn origin(self) -> usize {
        self.0 as usize / 6
    }

    pub fn slot(self) -> usize {
        self.0 as usize % 6
    }

    pub fn id(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.origin(), self.slot())
    }
}

/// Reasons a rotation system fails to describe a dual fullerene.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Violation {
    #[error("{0} vertices is too few")]
    TooSmall(usize),
    #[error("{0} vertices is too many")]
    TooLarge(usize),
    #[error("vertex {vertex} lists invalid neighbour {neighbour}")]
    BadNeighbour { vertex: usize, neighbour: usize },
    #[error("vertex {vertex} lists neighbour {neighbour} twice")]
    RepeatedNeighbour { vertex: usize, neighbour: usize },
    #[error("vertex {vertex} has degree {degree}")]
    Degree { vertex: usize, degree: usize },
    #[error("edge {vertex}-{neighbour} is only listed at {vertex}")]
    Asymmetric { vertex: usize, neighbour: usize },
    #[error("{0} vertices of degree 5, expected 12")]
    PentagonCount(usize),
    #[error("face through dart {vertex}->{neighbour} has length {length}")]
    NonTriangularFace { vertex: usize, neighbour: usize, length: usize },
    #[error("Euler characteristic {vertices} - {edges} + {faces} != 2")]
    Euler { vertices: usize, edges: usize, faces: usize },
}

/// Oriented triangle as three vertex ids.
pub(crate) type Tri = [u16; 3];

/// Rotates a triangle so its smallest vertex comes first, keeping the cyclic order.
pub(crate) fn tri_key(t: Tri) -> Tri {
    if t[0] <= t[1] && t[0] <= t[2] {
        t
    } else if t[1] <= t[2] {
        [t[1], t[2], t[0]]
    } else {
        [t[2], t[0], t[1]]
    }
}

/// Checks the structural conditions on a raw rotation system that do not
/// depend on degrees: neighbour ranges, symmetry and triangular faces.
pub fn validate_rotations(rot: &[Vec<usize>]) -> Result<(), Violation> {
    let n = rot.len();
    for (v, r) in rot.iter().enumerate() {
        for (i, &u) in r.iter().enumerate() {
            if u >= n || u == v {
                return Err(Violation::BadNeighbour { vertex: v, neighbour: u });
            }
            if r[..i].contains(&u) {
                return Err(Violation::RepeatedNeighbour { vertex: v, neighbour: u });
            }
        }
    }
    for (v, r) in rot.iter().enumerate() {
        for &u in r {
            if !rot[u].contains(&v) {
                return Err(Violation::Asymmetric { vertex: v, neighbour: u });
            }
        }
    }
    Ok(())
}

/// Assigns a face id to every dart of a symmetric rotation system.
/// Returns per-vertex face ids (indexed like `rot`) and the darts of each face
/// in walk order.
fn face_orbits(rot: &[Vec<usize>]) -> (Vec<Vec<usize>>, Vec<Vec<(usize, usize)>>) {
    let mut fid: Vec<Vec<usize>> = rot.iter().map(|r| vec![usize::MAX; r.len()]).collect();
    let mut faces = Vec::new();
    for v in 0..rot.len() {
        for s in 0..rot[v].len() {
            if fid[v][s] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let (mut a, mut i) = (v, s);
            while fid[a][i] == usize::MAX {
                fid[a][i] = id;
                walk.push((a, i));
                let b = rot[a][i];
                let back = rot[b].iter().position(|&x| x == a).expect("symmetric");
                a = b;
                i = (back + 1) % rot[b].len();
            }
            faces.push(walk);
        }
    }
    (fid, faces)
}

/// Face-vertex duality on a rotation system whose orientation is clockwise.
/// Each face becomes a vertex whose neighbours are the faces across its
/// edges, again in clockwise order.
fn dual_rotation(rot: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let (fid, faces) = face_orbits(rot);
    faces
        .iter()
        .map(|walk| {
            walk.iter()
                .rev()
                .map(|&(a, i)| {
                    let b = rot[a][i];
                    let back = rot[b].iter().position(|&x| x == a).unwrap();
                    fid[b][back]
                })
                .collect()
        })
        .collect()
}

/// A dual fullerene: a plane triangulation with twelve 5-vertices and the
/// remaining vertices of degree 6.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DualFullerene {
    adj: Vec<[u16; 6]>,
    deg: Vec<u8>,
}

impl fmt::Debug for DualFullerene {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries((0..self.nv()).map(|v| (v, self.neighbours(v)))).finish()
    }
}

impl DualFullerene {
    /// Builds a dual fullerene from clockwise rotations, validating it.
    pub fn from_rotations(rot: &[Vec<usize>]) -> Result<Self, Violation> {
        let n = rot.len();
        if n < 12 {
            return Err(Violation::TooSmall(n));
        }
        if n > MAX_DUAL_ORDER {
            return Err(Violation::TooLarge(n));
        }
        for (v, r) in rot.iter().enumerate() {
            if r.len() != 5 && r.len() != 6 {
                return Err(Violation::Degree { vertex: v, degree: r.len() });
            }
        }
        validate_rotations(rot)?;
        let fives = rot.iter().filter(|r| r.len() == 5).count();
        if fives != 12 {
            return Err(Violation::PentagonCount(fives));
        }
        let (_, faces) = face_orbits(rot);
        for walk in &faces {
            if walk.len() != 3 {
                let (v, s) = walk[0];
                return Err(Violation::NonTriangularFace { vertex: v, neighbour: rot[v][s], length: walk.len() });
            }
        }
        let edges = rot.iter().map(Vec::len).sum::<usize>() / 2;
        if n + faces.len() != edges + 2 {
            return Err(Violation::Euler { vertices: n, edges, faces: faces.len() });
        }
        Ok(Self::from_rotations_unchecked(rot))
    }

    pub(crate) fn from_rotations_unchecked(rot: &[Vec<usize>]) -> Self {
        let mut adj = vec![[0u16; 6]; rot.len()];
        let mut deg = vec![0u8; rot.len()];
        for (v, r) in rot.iter().enumerate() {
            for (i, &u) in r.iter().enumerate() {
                adj[v][i] = u as u16;
            }
            deg[v] = r.len() as u8;
        }
        DualFullerene { adj, deg }
    }

    /// Re-runs the full validation on this graph.
    pub fn validate(&self) -> Result<(), Violation> {
        Self::from_rotations(&self.rotations()).map(|_| ())
    }

    pub fn rotations(&self) -> Vec<Vec<usize>> {
        (0..self.nv()).map(|v| self.neighbours(v).iter().map(|&u| u as usize).collect()).collect()
    }

    /// Number of dual vertices, i.e. faces of the fullerene.
    pub fn nv(&self) -> usize {
        self.deg.len()
    }

    /// Number of atoms of the corresponding fullerene.
    pub fn primal_order(&self) -> usize {
        2 * self.nv() - 4
    }

    pub fn degree(&self, v: usize) -> usize {
        self.deg[v] as usize
    }

    pub fn neighbours(&self, v: usize) -> &[u16] {
        &self.adj[v][..self.deg[v] as usize]
    }

    pub fn pentagons(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nv()).filter(|&v| self.deg[v] == 5)
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        (0..self.nv()).flat_map(move |v| (0..self.degree(v)).map(move |s| Dart::new(v, s)))
    }

    pub fn num_edges(&self) -> usize {
        self.deg.iter().map(|&d| d as usize).sum::<usize>() / 2
    }

    pub fn head(&self, d: Dart) -> usize {
        self.adj[d.origin()][d.slot()] as usize
    }

    /// Slot of `u` in the rotation of `v`.
    pub fn slot_of(&self, v: usize, u: usize) -> Option<usize> {
        self.neighbours(v).iter().position(|&x| x as usize == u)
    }

    pub fn dart(&self, v: usize, u: usize) -> Option<Dart> {
        self.slot_of(v, u).map(|s| Dart::new(v, s))
    }

    /// Next dart clockwise around the same origin.
    pub fn next(&self, d: Dart) -> Dart {
        let v = d.origin();
        Dart::new(v, (d.slot() + 1) % self.degree(v))
    }

    /// Next dart counter-clockwise around the same origin.
    pub fn prev(&self, d: Dart) -> Dart {
        let v = d.origin();
        let k = self.degree(v);
        Dart::new(v, (d.slot() + k - 1) % k)
    }

    pub fn inverse(&self, d: Dart) -> Dart {
        let u = self.head(d);
        let s = self.slot_of(u, d.origin()).expect("rotation system is symmetric");
        Dart::new(u, s)
    }

    /// Rotates `d` by `k` slots, clockwise for `dir == 0`, counter-clockwise otherwise.
    pub fn rotate(&self, d: Dart, k: usize, dir: u8) -> Dart {
        let v = d.origin();
        let n = self.degree(v);
        let s = if dir == 0 { d.slot() + k } else { d.slot() + n * k - k };
        Dart::new(v, s % n)
    }

    /// Walks along `d`, then leaves its head by the dart `k` slots away from the
    /// way back, in direction `dir`.
    pub fn turn(&self, d: Dart, k: usize, dir: u8) -> Dart {
        self.rotate(self.inverse(d), k, dir)
    }

    /// Neighbour of `v` at `k` slots from slot `s` in direction `dir`.
    pub(crate) fn nb(&self, v: usize, s: usize, k: usize, dir: u8) -> usize {
        self.head(self.rotate(Dart::new(v, s), k, dir))
    }

    /// True when `(a, b, c)` is a face with this orientation.
    pub fn is_face(&self, a: usize, b: usize, c: usize) -> bool {
        match self.slot_of(a, b) {
            Some(s) => self.adj[a][(s + 1) % self.degree(a)] as usize == c,
            None => false,
        }
    }

    /// The face to the clockwise side of `d` at its origin.
    pub(crate) fn face_at(&self, v: usize, s: usize) -> Tri {
        [v as u16, self.adj[v][s], self.adj[v][(s + 1) % self.degree(v)]]
    }

    /// The same triangulation with every rotation reversed.
    pub fn mirror(&self) -> Self {
        let rot: Vec<Vec<usize>> =
            self.rotations().into_iter().map(|mut r| { r.reverse(); r }).collect();
        Self::from_rotations_unchecked(&rot)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let n = self.nv();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return invalid("relabelling is not a permutation of the vertex set");
        }
        let mut rot = vec![Vec::new(); n];
        for v in 0..n {
            rot[perm[v]] = self.neighbours(v).iter().map(|&u| perm[u as usize]).collect();
        }
        Ok(Self::from_rotations_unchecked(&rot))
    }

    /// Graph distance between two vertices.
    pub fn distance(&self, u: usize, v: usize) -> Result<usize> {
        let n = self.nv();
        if u >= n || v >= n {
            return invalid(format!("vertex out of range for a graph on {n} vertices"));
        }
        let dist = self.bfs_distances(u, usize::MAX);
        Ok(dist[v])
    }

    /// BFS distances from `src`, exploring no further than `limit`.
    /// Unreached vertices get `usize::MAX`.
    pub(crate) fn bfs_distances(&self, src: usize, limit: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.nv()];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(x) = queue.pop_front() {
            if dist[x] >= limit {
                continue;
            }
            for &y in self.neighbours(x) {
                let y = y as usize;
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Smallest distance between two distinct 5-vertices. A value of at least
    /// 2 means the fullerene has isolated pentagons.
    pub fn min_pentagon_distance(&self) -> usize {
        let fives: Vec<usize> = self.pentagons().collect();
        let mut best = usize::MAX;
        for &p in &fives {
            let dist = self.bfs_distances(p, best);
            for &q in &fives {
                if q != p {
                    best = best.min(dist[q]);
                }
            }
        }
        best
    }

    pub fn is_ipr(&self) -> bool {
        self.pentagons().all(|p| self.neighbours(p).iter().all(|&u| self.deg[u as usize] == 6))
    }

    /// The cubic fullerene graph.
    pub fn to_primal(&self) -> PrimalFullerene {
        let rot = dual_rotation(&self.rotations());
        PrimalFullerene::from_rotations_unchecked(&rot)
    }

    /// Leapfrog transform: the dual of the leapfrog fullerene, with `nv + 2nv - 4`
    /// vertices. The old vertices keep their ids.
    pub fn leapfrog(&self) -> Self {
        let n = self.nv();
        let mut face_id = vec![[0usize; 6]; n];
        let mut next = n;
        for v in 0..n {
            for s in 0..self.degree(v) {
                let t = self.face_at(v, s);
                if tri_key(t) == t {
                    face_id[v][s] = next;
                    next += 1;
                }
            }
        }
        let face_of = |t: Tri| -> usize {
            let k = tri_key(t);
            let s = self.slot_of(k[0] as usize, k[1] as usize).unwrap();
            face_id[k[0] as usize][s]
        };
        let mut rot = vec![Vec::new(); next];
        for v in 0..n {
            for s in 0..self.degree(v) {
                let t = self.face_at(v, s);
                let f = face_of(t);
                rot[v].push(f);
                if tri_key(t) == t {
                    let [a, b, c] = t;
                    let across = |x: u16, y: u16| {
                        let d = self.dart(y as usize, x as usize).unwrap();
                        face_of(self.face_at(d.origin(), d.slot()))
                    };
                    rot[f] = vec![a as usize, across(a, b), b as usize, across(b, c), c as usize, across(c, a)];
                }
            }
        }
        Self::from_rotations_unchecked(&rot)
    }

    /// Replaces a set of faces by another set with the same boundary, then
    /// truncates the vertex set to `new_nv`. Vertices whose rotation becomes
    /// empty get degree 0 and must be removed by [`Self::compact`] afterwards.
    /// Returns `None` if the result is not a valid rotation system.
    pub(crate) fn retriangulate(&self, removed: &[Tri], added: &[Tri], new_nv: usize) -> Option<Self> {
        if new_nv > MAX_DUAL_ORDER {
            return None;
        }
        let removed: Vec<Tri> = removed.iter().map(|&t| tri_key(t)).collect();
        let mut affected: Vec<u16> = removed.iter().chain(added.iter()).flatten().copied().collect();
        affected.sort_unstable();
        affected.dedup();

        let mut out = self.clone();
        out.adj.resize(new_nv, [0; 6]);
        out.deg.resize(new_nv, 0);
        let mut pairs: Vec<(u16, u16)> = Vec::with_capacity(8);
        for &v in &affected {
            let vi = v as usize;
            pairs.clear();
            if vi < self.nv() {
                for s in 0..self.degree(vi) {
                    let t = self.face_at(vi, s);
                    if !removed.contains(&tri_key(t)) {
                        pairs.push((t[1], t[2]));
                    }
                }
            }
            for t in added {
                if let Some(i) = t.iter().position(|&x| x == v) {
                    pairs.push((t[(i + 1) % 3], t[(i + 2) % 3]));
                }
            }
            if pairs.len() > 6 {
                return None;
            }
            for i in 0..pairs.len() {
                if pairs[..i].iter().any(|p| p.0 == pairs[i].0) {
                    return None;
                }
            }
            let mut cycle = [0u16; 6];
            let mut len = 0;
            if let Some(&(start, _)) = pairs.first() {
                let mut cur = start;
                loop {
                    let &(_, nxt) = pairs.iter().find(|p| p.0 == cur)?;
                    cycle[len] = cur;
                    len += 1;
                    cur = nxt;
                    if cur == start {
                        break;
                    }
                    if len == pairs.len() {
                        return None;
                    }
                }
                if len != pairs.len() {
                    return None;
                }
            }
            if vi >= new_nv {
                if len != 0 {
                    return None;
                }
                continue;
            }
            out.adj[vi] = cycle;
            out.deg[vi] = len as u8;
        }
        Some(out)
    }

    /// Removes vertices of degree 0, renumbering the rest in order.
    pub(crate) fn compact(&mut self) {
        let n = self.nv();
        let mut map = vec![u16::MAX; n];
        let mut k = 0u16;
        for v in 0..n {
            if self.deg[v] != 0 {
                map[v] = k;
                k += 1;
            }
        }
        if k as usize == n {
            return;
        }
        let mut w = 0;
        for v in 0..n {
            if self.deg[v] == 0 {
                continue;
            }
            let mut row = self.adj[v];
            for x in row.iter_mut().take(self.deg[v] as usize) {
                *x = map[*x as usize];
            }
            self.adj[w] = row;
            self.deg[w] = self.deg[v];
            w += 1;
        }
        self.adj.truncate(w);
        self.deg.truncate(w);
    }
}

/// Orients replacement triangles so that they agree with the boundary of the
/// removed region and with each other. Returns `None` when some triangle
/// cannot be reached or the orientations conflict.
pub(crate) fn orient_patch(removed: &[Tri], added: &[[u16; 3]]) -> Option<Vec<Tri>> {
    let has_edge = |ts: &[Tri], a: u16, b: u16| {
        ts.iter().any(|t| (0..3).any(|i| t[i] == a && t[(i + 1) % 3] == b))
    };
    let mut required: Vec<(u16, u16)> = Vec::new();
    for t in removed {
        for i in 0..3 {
            let (a, b) = (t[i], t[(i + 1) % 3]);
            if !has_edge(removed, b, a) {
                required.push((a, b));
            }
        }
    }
    let mut out: Vec<Option<Tri>> = vec![None; added.len()];
    let mut done = 0;
    while done < added.len() {
        let mut progress = false;
        for (k, t) in added.iter().enumerate() {
            if out[k].is_some() {
                continue;
            }
            let mut found = None;
            'edges: for i in 0..3 {
                let (a, b, c) = (t[i], t[(i + 1) % 3], t[(i + 2) % 3]);
                for &(x, y) in &required {
                    if x == a && y == b {
                        found = Some([a, b, c]);
                        break 'edges;
                    }
                    if x == b && y == a {
                        found = Some([b, a, c]);
                        break 'edges;
                    }
                }
            }
            if let Some(o) = found {
                out[k] = Some(o);
                done += 1;
                progress = true;
                for i in 0..3 {
                    required.push((o[(i + 1) % 3], o[i]));
                }
            }
        }
        if !progress {
            return None;
        }
    }
    let out: Vec<Tri> = out.into_iter().map(Option::unwrap).collect();
    // Every directed edge may occur at most once.
    for (k, t) in out.iter().enumerate() {
        for i in 0..3 {
            if has_edge(&out[k + 1..], t[i], t[(i + 1) % 3]) {
                return None;
            }
        }
    }
    Some(out)
}

/// A fullerene: a cubic plane graph with only pentagonal and hexagonal faces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimalFullerene {
    adj: Vec<[u16; 3]>,
}

impl fmt::Debug for PrimalFullerene {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries((0..self.order()).map(|v| (v, self.adj[v]))).finish()
    }
}

impl PrimalFullerene {
    fn from_rotations_unchecked(rot: &[Vec<usize>]) -> Self {
        PrimalFullerene { adj: rot.iter().map(|r| [r[0] as u16, r[1] as u16, r[2] as u16]).collect() }
    }

    /// Builds a fullerene from clockwise rotations, checking it is cubic, plane
    /// and has faces of size 5 and 6 only.
    pub fn from_rotations(rot: &[Vec<usize>]) -> Result<Self> {
        if let Some(v) = rot.iter().position(|r| r.len() != 3) {
            return invalid(format!("vertex {v} has degree {}", rot[v].len()));
        }
        validate_rotations(rot)?;
        let p = Self::from_rotations_unchecked(rot);
        p.to_dual()?;
        Ok(p)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbours(&self, v: usize) -> &[u16; 3] {
        &self.adj[v]
    }

    pub fn rotations(&self) -> Vec<Vec<usize>> {
        self.adj.iter().map(|r| r.iter().map(|&u| u as usize).collect()).collect()
    }

    /// Faces as vertex cycles.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let (_, faces) = face_orbits(&self.rotations());
        faces.into_iter().map(|w| w.into_iter().map(|(v, _)| v).collect()).collect()
    }

    pub fn to_dual(&self) -> Result<DualFullerene, Violation> {
        DualFullerene::from_rotations(&dual_rotation(&self.rotations()))
    }

    pub fn is_ipr(&self) -> bool {
        self.to_dual().map(|d| d.is_ipr()).unwrap_or(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeds::{build_seed, SeedKind};

    fn icosahedron() -> DualFullerene {
        build_seed(SeedKind::C20)
    }

    #[test]
    fn icosahedron_is_valid() {
        let g = icosahedron();
        assert_eq!(g.validate(), Ok(()));
        assert_eq!(g.num_edges(), 30);
        assert_eq!(g.primal_order(), 20);
    }

    #[test]
    fn reversed_vertex_is_rejected() {
        let mut rot = icosahedron().rotations();
        rot[3].reverse();
        assert!(matches!(
            DualFullerene::from_rotations(&rot),
            Err(Violation::NonTriangularFace { .. })
        ));
    }

    #[test]
    fn asymmetric_and_degree_violations() {
        let mut rot = icosahedron().rotations();
        rot[0][0] = 11;
        assert!(DualFullerene::from_rotations(&rot).is_err());
        let mut rot = icosahedron().rotations();
        rot[0].push(6);
        assert!(matches!(DualFullerene::from_rotations(&rot), Err(Violation::RepeatedNeighbour { .. }) | Err(Violation::Asymmetric { .. })));
    }

    #[test]
    fn darts_and_turns() {
        let g = icosahedron();
        for d in g.darts() {
            assert_eq!(g.inverse(g.inverse(d)), d);
            assert_eq!(g.prev(g.next(d)), d);
            // walking around a face returns after three steps
            let mut e = d;
            for _ in 0..3 {
                e = g.next(g.inverse(e));
            }
            assert_eq!(e, d);
        }
    }

    #[test]
    fn primal_of_icosahedron_is_dodecahedron() {
        let p = icosahedron().to_primal();
        assert_eq!(p.order(), 20);
        assert!(p.faces().iter().all(|f| f.len() == 5));
        let back = p.to_dual().unwrap();
        assert_eq!(back.nv(), 12);
    }

    #[test]
    fn distance_bounds() {
        let g = icosahedron();
        assert_eq!(g.distance(0, 0).unwrap(), 0);
        assert_eq!(g.distance(0, 11).unwrap(), 3);
        assert!(g.distance(0, 12).is_err());
        assert_eq!(g.min_pentagon_distance(), 1);
    }

    #[test]
    fn leapfrog_of_icosahedron_is_c60() {
        let g = icosahedron().leapfrog();
        assert_eq!(g.validate(), Ok(()));
        assert_eq!(g.nv(), 32);
        assert!(g.is_ipr());
        assert_eq!(g.min_pentagon_distance(), 2);
    }

    #[test]
    fn relabel_and_mirror_preserve_validity() {
        let g = icosahedron();
        let perm: Vec<usize> = (0..12).rev().collect();
        assert_eq!(g.relabel(&perm).unwrap().validate(), Ok(()));
        assert_eq!(g.mirror().validate(), Ok(()));
        assert!(g.relabel(&[0; 12]).is_err());
    }
}
