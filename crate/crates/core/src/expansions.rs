//! `L` and `B` expansions and their inverse reductions.
//!
//! A reduction removes a path of dual vertices that starts and ends at a
//! 5-vertex and otherwise runs through 6-vertices: `L_i` goes straight through
//! `i` interior vertices, `B_{i,j}` goes straight through `i`, bends once at a
//! vertex `w`, then goes straight through `j` more. The path has `i + 1` or
//! `i + j + 2` edges. Removing it leaves a hole bounded by `2 * len + 4`
//! vertices, which is re-triangulated without new vertices so that two of the
//! boundary vertices drop from degree 6 to 5. An expansion is the inverse.

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::planar_map::{orient_patch, tri_key, Dart, DualFullerene, Tri};

pub(crate) type VList = SmallVec<[u16; 24]>;
pub(crate) type TList = SmallVec<[Tri; 24]>;

/// Shape of the path removed by a reduction.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExpansionKind {
    /// Straight path with `i` interior vertices.
    L(u8),
    /// Bent path with `i` interior vertices before the bend and `j` after.
    B(u8, u8),
}

impl ExpansionKind {
    /// Number of edges on the path.
    pub fn length(self) -> usize {
        match self {
            ExpansionKind::L(i) => i as usize + 1,
            ExpansionKind::B(i, j) => i as usize + j as usize + 2,
        }
    }

    /// Number of edges on the longest straight segment.
    pub fn longest_straight(self) -> usize {
        match self {
            ExpansionKind::L(i) => i as usize + 1,
            ExpansionKind::B(i, j) => i.max(j) as usize + 1,
        }
    }

    /// The same path read from the other end.
    pub fn reversed(self) -> Self {
        match self {
            ExpansionKind::L(i) => ExpansionKind::L(i),
            ExpansionKind::B(i, j) => ExpansionKind::B(j, i),
        }
    }

    fn ordinal(self) -> (u8, u8, u8) {
        match self {
            ExpansionKind::L(i) => (0, i, 0),
            ExpansionKind::B(i, j) => (1, i, j),
        }
    }
}

impl fmt::Display for ExpansionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpansionKind::L(i) => write!(f, "L{i}"),
            ExpansionKind::B(i, j) => write!(f, "B{i},{j}"),
        }
    }
}

/// A reduction of a dual fullerene: the first dart of the path, its shape and
/// a handedness bit (`dir`) that fixes which boundary vertices lose degree.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReductionTriple {
    pub dart: Dart,
    pub kind: ExpansionKind,
    pub dir: u8,
}

impl ReductionTriple {
    fn sort_key(&self) -> (usize, Dart, u8, (u8, u8, u8)) {
        (self.kind.length(), self.dart, self.dir, self.kind.ordinal())
    }
}

/// A place where an expansion can be applied: a dart leaving a 5-vertex, the
/// shape of the expansion, and the side (`dir`) the new path is inserted on.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExpansionSite {
    pub start: Dart,
    pub kind: ExpansionKind,
    pub dir: u8,
}

/// Everything a reduction touches.
#[derive(Clone, Debug)]
pub(crate) struct ReductionPatch {
    pub path: VList,
    pub boundary: VList,
    pub disk: TList,
    /// Unoriented replacement triangles.
    pub fill: TList,
}

/// Everything an expansion touches.
#[derive(Clone, Debug)]
pub(crate) struct ExpansionPatch {
    pub trace: VList,
    pub boundary: VList,
    pub strip: TList,
    kind: ExpansionKind,
}

/// Follows the path of a reduction. Returns the path vertices, or `None` if the
/// degrees do not fit or the path meets itself.
fn reduction_path(g: &DualFullerene, t: &ReductionTriple) -> Option<VList> {
    let p0 = t.dart.origin();
    if g.degree(p0) != 5 {
        return None;
    }
    let mut path: VList = SmallVec::new();
    path.push(p0 as u16);
    let mut cur = t.dart;
    let straight = |path: &mut VList, cur: &mut Dart, k: u8| -> Option<()> {
        for _ in 0..k {
            let x = g.head(*cur);
            if g.degree(x) != 6 {
                return None;
            }
            path.push(x as u16);
            *cur = g.turn(*cur, 3, 0);
        }
        Some(())
    };
    match t.kind {
        ExpansionKind::L(i) => straight(&mut path, &mut cur, i)?,
        ExpansionKind::B(i, j) => {
            straight(&mut path, &mut cur, i)?;
            let w = g.head(cur);
            if g.degree(w) != 6 {
                return None;
            }
            path.push(w as u16);
            cur = g.turn(cur, 2, t.dir);
            straight(&mut path, &mut cur, j)?;
        }
    }
    let end = g.head(cur);
    if g.degree(end) != 5 {
        return None;
    }
    path.push(end as u16);
    for k in 1..path.len() {
        if path[..k].contains(&path[k]) {
            return None;
        }
    }
    Some(path)
}

/// The two boundary vertices that drop to degree 5 under a reduction.
fn losers(g: &DualFullerene, t: &ReductionTriple, path: &[u16]) -> [usize; 2] {
    let p0 = path[0] as usize;
    let pe = path[path.len() - 1] as usize;
    let pred = path[path.len() - 2] as usize;
    let s0 = t.dart.slot();
    let se = g.slot_of(pe, pred).unwrap();
    let (a, b) = match (t.kind, t.dir) {
        (ExpansionKind::L(_), 0) => (2, 2),
        (ExpansionKind::L(_), _) => (3, 3),
        (ExpansionKind::B(..), 0) => (2, 3),
        (ExpansionKind::B(..), _) => (3, 2),
    };
    [g.nb(p0, s0, a, 0), g.nb(pe, se, b, 0)]
}

/// Triangulates the polygon `h` so that vertex `h[k]` ends up in
/// `gain[k] + 1` triangles. The result is unique when it exists.
fn clip_ears(g: &DualFullerene, h: &[u16], gain: &[i32]) -> Option<TList> {
    let mut poly: SmallVec<[(u16, i32); 24]> = h.iter().copied().zip(gain.iter().copied()).collect();
    let mut out = SmallVec::new();
    while poly.len() > 3 {
        let n = poly.len();
        let k = poly.iter().position(|&(_, x)| x == 0)?;
        let (p, q) = ((k + n - 1) % n, (k + 1) % n);
        let (a, b) = (poly[p].0, poly[q].0);
        // A diagonal must not duplicate an edge that survives the reduction.
        if g.slot_of(a as usize, b as usize).is_some() {
            return None;
        }
        out.push([a, poly[k].0, b]);
        poly[p].1 -= 1;
        poly[q].1 -= 1;
        if poly[p].1 < 0 || poly[q].1 < 0 {
            return None;
        }
        poly.remove(k);
    }
    if poly.iter().any(|&(_, x)| x != 0) {
        return None;
    }
    out.push([poly[0].0, poly[1].0, poly[2].0]);
    Some(out)
}

/// Builds the full patch of a reduction, or `None` if it is not valid in `g`.
pub(crate) fn reduction_patch(g: &DualFullerene, t: &ReductionTriple) -> Option<ReductionPatch> {
    let path = reduction_path(g, t)?;
    let lose = losers(g, t, &path);
    if lose[0] == lose[1] || lose.iter().any(|&x| g.degree(x) != 6 || path.contains(&(x as u16))) {
        return None;
    }
    let mut disk: TList = SmallVec::new();
    for &x in &path {
        for s in 0..g.degree(x as usize) {
            let f = tri_key(g.face_at(x as usize, s));
            if !disk.contains(&f) {
                disk.push(f);
            }
        }
    }
    let on_path = |x: u16| path.contains(&x);
    let mut edges: SmallVec<[(u16, u16); 24]> = SmallVec::new();
    for f in &disk {
        for i in 0..3 {
            let (a, b) = (f[i], f[(i + 1) % 3]);
            if !on_path(a) && !on_path(b) {
                edges.push((a, b));
            }
        }
    }
    let want = 2 * (path.len() - 1) + 4;
    if edges.len() != want {
        return None;
    }
    let mut boundary: VList = SmallVec::new();
    let mut cur = edges[0].0;
    for _ in 0..want {
        boundary.push(cur);
        let mut it = edges.iter().filter(|e| e.0 == cur);
        let e = it.next()?;
        if it.next().is_some() {
            return None;
        }
        cur = e.1;
    }
    if cur != boundary[0] {
        return None;
    }
    for k in 1..want {
        if boundary[..k].contains(&boundary[k]) {
            return None;
        }
    }
    if lose.iter().any(|&x| !boundary.contains(&(x as u16))) {
        return None;
    }
    let gain: SmallVec<[i32; 24]> = boundary
        .iter()
        .map(|&h| {
            let pc = g.neighbours(h as usize).iter().filter(|&&y| on_path(y)).count() as i32;
            pc - lose.contains(&(h as usize)) as i32
        })
        .collect();
    let fill = clip_ears(g, &boundary, &gain)?;
    Some(ReductionPatch { path, boundary, disk, fill })
}

/// True if the reduction can be applied to `g`.
pub fn is_valid_reduction(g: &DualFullerene, t: &ReductionTriple) -> bool {
    reduction_patch(g, t).is_some()
}

/// The same reduction described from the other end of its path.
pub fn reduction_partner(g: &DualFullerene, t: &ReductionTriple) -> Option<ReductionTriple> {
    let path = reduction_path(g, t)?;
    let k = path.len();
    let dart = g.dart(path[k - 1] as usize, path[k - 2] as usize)?;
    let dir = match t.kind {
        ExpansionKind::L(_) => t.dir,
        ExpansionKind::B(..) => 1 - t.dir,
    };
    Some(ReductionTriple { dart, kind: t.kind.reversed(), dir })
}

/// Calls `f` on every candidate reduction of length at most `max_len` whose
/// path degrees fit, before the full validity check.
fn for_each_candidate(g: &DualFullerene, max_len: usize, mut f: impl FnMut(ReductionTriple, Dart)) {
    for p0 in g.pentagons() {
        for s in 0..5 {
            let dart = Dart::new(p0, s);
            let mut cur = dart;
            for a in 0..max_len {
                let x = g.head(cur);
                if g.degree(x) == 5 {
                    for dir in 0..2 {
                        f(ReductionTriple { dart, kind: ExpansionKind::L(a as u8), dir }, g.inverse(cur));
                    }
                    break;
                }
                if a + 2 <= max_len {
                    for dir in 0..2 {
                        let mut e = g.turn(cur, 2, dir);
                        for b in 0..=(max_len - a - 2) {
                            let y = g.head(e);
                            if g.degree(y) == 5 {
                                f(ReductionTriple { dart, kind: ExpansionKind::B(a as u8, b as u8), dir }, g.inverse(e));
                                break;
                            }
                            e = g.turn(e, 3, 0);
                        }
                    }
                }
                cur = g.turn(cur, 3, 0);
            }
        }
    }
}

/// A reduction together with the dart from its last vertex back along the path.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub(crate) struct ReductionInfo {
    pub triple: ReductionTriple,
    pub end: Dart,
}

impl ReductionInfo {
    /// The same reduction read from the other end.
    pub fn partner(&self) -> ReductionTriple {
        let t = &self.triple;
        let dir = match t.kind {
            ExpansionKind::L(_) => t.dir,
            ExpansionKind::B(..) => 1 - t.dir,
        };
        ReductionTriple { dart: self.end, kind: t.kind.reversed(), dir }
    }
}

/// Reductions of length at most `max_len` whose path has the right degrees,
/// not yet checked for validity.
pub(crate) fn reduction_candidates(g: &DualFullerene, max_len: usize) -> Vec<ReductionInfo> {
    let mut out = Vec::new();
    for_each_candidate(g, max_len, |triple, end| out.push(ReductionInfo { triple, end }));
    out
}

/// Valid reductions of length at most `max_len` with their patches.
pub(crate) fn reduction_patches(g: &DualFullerene, max_len: usize) -> Vec<(ReductionTriple, ReductionPatch)> {
    reduction_candidates(g, max_len)
        .into_iter()
        .filter_map(|r| reduction_patch(g, &r.triple).map(|p| (r.triple, p)))
        .collect()
}

pub(crate) fn reduction_infos(g: &DualFullerene, max_len: usize) -> Vec<ReductionInfo> {
    let mut out = reduction_candidates(g, max_len);
    out.retain(|r| is_valid_reduction(g, &r.triple));
    out
}

/// All valid reductions of length at most `max_len`, sorted by length, dart and direction.
pub fn enumerate_reductions(g: &DualFullerene, max_len: usize) -> Vec<ReductionTriple> {
    let mut out: Vec<ReductionTriple> = reduction_infos(g, max_len).into_iter().map(|r| r.triple).collect();
    out.sort_unstable_by_key(ReductionTriple::sort_key);
    out
}

/// Applies a reduction, producing a dual fullerene with `len + 1` fewer vertices.
pub fn apply_reduction(g: &DualFullerene, t: &ReductionTriple) -> Result<DualFullerene> {
    let p = reduction_patch(g, t).ok_or_else(|| Error::InvalidInput(format!("{t:?} is not a valid reduction")))?;
    let added = orient_patch(&p.disk, &p.fill).ok_or_else(|| internal("reduction fill is not orientable"))?;
    let mut out = g.retriangulate(&p.disk, &added, g.nv()).ok_or_else(|| internal("reduction is not planar"))?;
    out.compact();
    Ok(out)
}

fn internal(msg: &str) -> Error {
    Error::InvalidInput(format!("internal inconsistency: {msg}"))
}

/// Turn counts at the intermediate vertices of an expansion trace.
fn trace_turns(kind: ExpansionKind) -> impl Iterator<Item = usize> {
    let (i, j) = match kind {
        ExpansionKind::L(i) => (i as usize, None),
        ExpansionKind::B(i, j) => (i as usize, Some(j as usize)),
    };
    let tail = j.map_or(0, |j| j + 1);
    std::iter::repeat(3).take(i + 1).chain(std::iter::once(2)).chain(std::iter::repeat(3).take(tail))
}

/// Which path vertex each boundary edge of the expansion disk attaches to.
fn attachment(kind: ExpansionKind) -> SmallVec<[usize; 32]> {
    let len = kind.length();
    let mut pi = SmallVec::new();
    pi.push(0);
    match kind {
        ExpansionKind::L(i) => {
            let i = i as usize;
            pi.extend(1..=i);
            pi.extend([len; 3]);
            pi.extend((1..=i).rev());
        }
        ExpansionKind::B(i, j) => {
            let (i, j) = (i as usize, j as usize);
            let w = i + 1;
            pi.extend(1..=i);
            pi.extend([w, w]);
            pi.extend(w + 1..=w + j);
            pi.extend([len; 3]);
            pi.extend((w + 1..=w + j).rev());
            pi.extend((1..=i).rev());
        }
    }
    pi.extend([0, 0]);
    pi
}

/// Builds the patch of an expansion, or `None` if the site is not valid in `g`.
pub(crate) fn expansion_patch(g: &DualFullerene, site: &ExpansionSite) -> Option<ExpansionPatch> {
    let s0 = site.start.origin();
    if g.degree(s0) != 5 || site.dir > 1 {
        return None;
    }
    let dir = site.dir;
    let mut trace: VList = SmallVec::new();
    trace.push(s0 as u16);
    let mut far: VList = SmallVec::new();
    let mut strip: TList = SmallVec::new();
    let mut cur = site.start;
    for k in trace_turns(site.kind) {
        let back = g.inverse(cur);
        let x = back.origin();
        trace.push(x as u16);
        for step in 1..k {
            let y = g.head(g.rotate(back, step, dir)) as u16;
            if far.last() != Some(&y) {
                far.push(y);
            }
        }
        for step in 0..k {
            let e = if dir == 0 { g.rotate(back, step, 0) } else { g.rotate(back, step + 1, 1) };
            let f = tri_key(g.face_at(x, e.slot()));
            if !strip.contains(&f) {
                strip.push(f);
            }
        }
        cur = g.rotate(back, k, dir);
    }
    let end = g.head(cur);
    if g.degree(end) != 5 {
        return None;
    }
    trace.push(end as u16);
    let len = site.kind.length();
    let mut boundary = trace.clone();
    boundary.extend(far.iter().rev().copied());
    let h = boundary.len();
    if h != 2 * len + 4 || strip.len() != h - 2 {
        return None;
    }
    for k in 1..h {
        if boundary[..k].contains(&boundary[k]) {
            return None;
        }
    }
    // Each boundary vertex trades its strip triangles for new ones: two on its
    // boundary edges plus one per path step where the attachment changes.
    let pi = attachment(site.kind);
    for (t, &x) in boundary.iter().enumerate() {
        let prev = pi[(t + h - 1) % h];
        let new = 2 + prev.abs_diff(pi[t]);
        let old = strip.iter().filter(|f| f.contains(&x)).count();
        let d = g.degree(x as usize) + new - old;
        if d != 5 && d != 6 {
            return None;
        }
    }
    Some(ExpansionPatch { trace, boundary, strip, kind: site.kind })
}

impl ExpansionPatch {
    /// Unoriented triangles filling the hole, new path vertices numbered from `nv`.
    fn fill(&self, nv: usize) -> Vec<[u16; 3]> {
        let pv = |k: usize| (nv + k) as u16;
        let pi = attachment(self.kind);
        let h = self.boundary.len();
        let mut fill = Vec::with_capacity(2 * h);
        for t in 0..h {
            let (a, b) = (self.boundary[t], self.boundary[(t + 1) % h]);
            fill.push([a, b, pv(pi[t])]);
            let (from, to) = (pi[t], pi[(t + 1) % h]);
            let mut k = from;
            while k != to {
                let next = if to > k { k + 1 } else { k - 1 };
                fill.push([pv(k), b, pv(next)]);
                k = next;
            }
        }
        fill
    }
}

/// Valid expansion sites of length at most `max_len` with their patches.
pub(crate) fn site_patches(g: &DualFullerene, max_len: usize) -> Vec<(ExpansionSite, ExpansionPatch)> {
    let mut out = Vec::new();
    for s0 in g.pentagons() {
        for s in 0..5 {
            let start = Dart::new(s0, s);
            for dir in 0..2u8 {
                let mut d = start;
                for a in 1..=max_len {
                    d = g.turn(d, 3, dir);
                    let e = g.turn(d, 2, dir);
                    let mut cand = Vec::new();
                    if g.degree(g.head(e)) == 5 {
                        cand.push(ExpansionKind::L((a - 1) as u8));
                    }
                    let mut f = e;
                    for b in 1..=(max_len - a) {
                        f = g.turn(f, 3, dir);
                        if g.degree(g.head(f)) == 5 {
                            cand.push(ExpansionKind::B((a - 1) as u8, (b - 1) as u8));
                        }
                    }
                    for kind in cand {
                        let site = ExpansionSite { start, kind, dir };
                        if let Some(p) = expansion_patch(g, &site) {
                            out.push((site, p));
                        }
                    }
                }
            }
        }
    }
    out
}

/// All valid expansion sites whose expansions have length at most `max_len`.
pub fn enumerate_expansion_sites(g: &DualFullerene, max_len: usize) -> Vec<ExpansionSite> {
    site_patches(g, max_len).into_iter().map(|(s, _)| s).collect()
}

impl ExpansionPatch {
    /// The same expansion described from the other end of its trace.
    pub fn partner(&self, g: &DualFullerene, site: &ExpansionSite) -> Option<ExpansionSite> {
        let k = self.trace.len();
        let end = self.trace[k - 1] as usize;
        let out = match site.kind {
            ExpansionKind::L(_) => {
                ExpansionSite { start: g.dart(end, self.boundary[k] as usize)?, kind: site.kind, dir: site.dir }
            }
            ExpansionKind::B(..) => ExpansionSite {
                start: g.dart(end, self.trace[k - 2] as usize)?,
                kind: site.kind.reversed(),
                dir: 1 - site.dir,
            },
        };
        Some(out)
    }
}

/// The same expansion described from the other end of its trace.
pub fn site_partner(g: &DualFullerene, site: &ExpansionSite) -> Option<ExpansionSite> {
    expansion_patch(g, site)?.partner(g, site)
}

/// Applies an expansion. Returns the new graph and the reduction that undoes it;
/// the new path vertices are numbered from the old vertex count upwards.
pub fn apply_expansion(g: &DualFullerene, site: &ExpansionSite) -> Result<(DualFullerene, ReductionTriple)> {
    let p = expansion_patch(g, site)
        .ok_or_else(|| Error::InvalidInput(format!("{site:?} is not a valid expansion site")))?;
    apply_expansion_patch(g, site, &p)
}

pub(crate) fn apply_expansion_patch(
    g: &DualFullerene,
    site: &ExpansionSite,
    p: &ExpansionPatch,
) -> Result<(DualFullerene, ReductionTriple)> {
    let nv = g.nv();
    let len = site.kind.length();
    let added = orient_patch(&p.strip, &p.fill(nv)).ok_or_else(|| internal("expansion fill is not orientable"))?;
    let out = g.retriangulate(&p.strip, &added, nv + len + 1).ok_or_else(|| internal("expansion is not planar"))?;
    let dart = out.dart(nv, nv + 1).ok_or_else(|| internal("new path is broken"))?;
    let ends = [p.trace[0] as usize, p.trace[p.trace.len() - 1] as usize];
    for dir in 0..2 {
        let t = ReductionTriple { dart, kind: site.kind, dir };
        if let Some(path) = reduction_path(&out, &t) {
            let l = losers(&out, &t, &path);
            if (l == ends || l == [ends[1], ends[0]]) && is_valid_reduction(&out, &t) {
                return Ok((out, t));
            }
        }
    }
    Err(internal("expansion has no matching reduction"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeds::{build_seed, SeedKind};

    #[test]
    fn attachment_lengths() {
        for kind in [ExpansionKind::L(0), ExpansionKind::L(3), ExpansionKind::B(0, 0), ExpansionKind::B(2, 1)] {
            assert_eq!(attachment(kind).len(), 2 * kind.length() + 4);
        }
    }

    #[test]
    fn seeds_are_irreducible() {
        for kind in [SeedKind::C20, SeedKind::C28, SeedKind::Nanotube(0), SeedKind::Nanotube(2)] {
            let g = build_seed(kind);
            assert!(enumerate_reductions(&g, 8).is_empty(), "{kind:?}");
        }
    }

    #[test]
    fn c20_expands_to_c24() {
        let g = build_seed(SeedKind::C20);
        let sites = enumerate_expansion_sites(&g, 1);
        assert!(!sites.is_empty());
        for site in &sites {
            let (h, t) = apply_expansion(&g, site).unwrap();
            assert_eq!(h.validate(), Ok(()));
            assert_eq!(h.primal_order(), 24);
            let back = apply_reduction(&h, &t).unwrap();
            assert_eq!(back.validate(), Ok(()));
            assert_eq!(back.nv(), 12);
        }
    }

    #[test]
    fn expansions_round_trip_and_partners() {
        let mut frontier = vec![build_seed(SeedKind::C20), build_seed(SeedKind::C28)];
        let mut checked = 0;
        while let Some(g) = frontier.pop() {
            if g.nv() > 22 {
                continue;
            }
            let sites = enumerate_expansion_sites(&g, 4);
            for site in &sites {
                let (h, t) = apply_expansion(&g, site).unwrap();
                assert_eq!(h.validate(), Ok(()), "{site:?}");
                assert_eq!(h.nv(), g.nv() + site.kind.length() + 1);
                let back = apply_reduction(&h, &t).unwrap();
                assert_eq!(back.validate(), Ok(()));
                assert_eq!(back.nv(), g.nv());
                assert!(enumerate_reductions(&h, site.kind.length()).contains(&t));
                let pt = reduction_partner(&h, &t).unwrap();
                assert!(is_valid_reduction(&h, &pt));
                let ps = site_partner(&g, site).unwrap();
                assert!(sites.contains(&ps), "{site:?} -> {ps:?}");
                assert_eq!(site_partner(&g, &ps), Some(*site));
                checked += 1;
            }
            if g.nv() < 18 {
                for site in sites.iter().take(6) {
                    frontier.push(apply_expansion(&g, site).unwrap().0);
                }
            }
        }
        assert!(checked > 50);
    }

    #[test]
    fn reductions_invert_to_sites() {
        // Every reduction of a graph undoes some expansion of its result.
        let g = build_seed(SeedKind::C20);
        let sites = enumerate_expansion_sites(&g, 3);
        for site in sites.iter().take(20) {
            let (h, _) = apply_expansion(&g, site).unwrap();
            for t in enumerate_reductions(&h, 3) {
                let r = apply_reduction(&h, &t).unwrap();
                assert_eq!(r.validate(), Ok(()));
                assert_eq!(r.nv(), h.nv() - t.kind.length() - 1);
            }
        }
    }
}
