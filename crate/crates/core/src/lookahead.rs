//! Bounds on the length of canonical expansions.
//!
//! A canonical expansion must produce a child whose shortest reduction is the
//! one just created. Reductions of the parent that survive the expansion give
//! upper bounds on that length, and short reductions can only exist in small
//! graphs at all. Both facts let the generator skip whole classes of expansions.

use crate::error::{invalid, Result};
use crate::expansions::{expansion_patch, reduction_patch, ExpansionKind, ExpansionSite, ReductionPatch, ReductionTriple};
use crate::planar_map::DualFullerene;

/// Smallest dual order of a graph with no reduction shorter than `d`.
pub fn min_nv_for_length(d: usize) -> Result<usize> {
    if d == 0 {
        return invalid("reduction lengths start at 1");
    }
    let x = (d - 1) / 2;
    Ok(12 * (1 + 5 * x * (x + 1) / 2))
}

/// True if a child of a graph with `parent_nv` vertices, built by an
/// expansion of length `d`, could have `d` as its shortest reduction length.
pub fn length_possible(parent_nv: usize, d: usize) -> bool {
    d >= 1 && min_nv_for_length(d).map_or(false, |m| m <= parent_nv + d + 1)
}

/// Which rule produced a bound.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum BoundSource {
    /// Only the global size bound applies.
    Size,
    /// The parent has an `L0` reduction.
    L0,
    /// Three length-2 reductions with pairwise disjoint ends.
    ThreeDisjointLength2,
    /// Two length-2 reductions with different ends.
    TwoLength2,
    /// A single reduction of length 1 or 2.
    Short,
}

/// Largest useful expansion length at a parent.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct LengthBound {
    pub max_len: usize,
    pub source: BoundSource,
    /// The parent has two `L0` reductions whose 5-vertices are more than four
    /// apart, so every child keeps an `L0` reduction.
    pub far_l0: bool,
}

fn end_pair(p: &ReductionPatch) -> [u16; 2] {
    let (a, b) = (p.path[0], p.path[p.path.len() - 1]);
    [a.min(b), a.max(b)]
}

fn disjoint(a: &[u16; 2], b: &[u16; 2]) -> bool {
    !a.iter().any(|x| b.contains(x))
}

/// Upper bound on the length of canonical expansions at `g`, given its
/// reductions of length at most 2. Lengths above `size_cap` are never useful.
pub fn canonical_length_bound(g: &DualFullerene, reductions: &[ReductionTriple], size_cap: usize) -> LengthBound {
    let patches: Vec<_> = reductions.iter().filter_map(|t| reduction_patch(g, t).map(|p| (*t, p))).collect();
    length_bound_from_patches(g, &patches, size_cap)
}

pub(crate) fn length_bound_from_patches(
    g: &DualFullerene,
    reductions: &[(ReductionTriple, ReductionPatch)],
    size_cap: usize,
) -> LengthBound {
    let mut max_len = (1..=size_cap).filter(|&d| length_possible(g.nv(), d)).max().unwrap_or(0);
    let mut source = BoundSource::Size;
    let mut tighten = |b: usize, s: BoundSource| {
        if b < max_len {
            max_len = b;
            source = s;
        }
    };
    let mut l0: Vec<[u16; 2]> = Vec::new();
    let mut len2: Vec<[u16; 2]> = Vec::new();
    let mut shortest = usize::MAX;
    for (t, p) in reductions {
        let len = t.kind.length();
        if len > 2 {
            continue;
        }
        shortest = shortest.min(len);
        let pair = end_pair(p);
        let list = if t.kind == ExpansionKind::L(0) { &mut l0 } else { &mut len2 };
        if !list.contains(&pair) {
            list.push(pair);
        }
    }
    if shortest <= 2 {
        tighten(shortest + 2, BoundSource::Short);
    }
    if len2.len() >= 2 {
        tighten(3, BoundSource::TwoLength2);
    }
    let three = len2.iter().enumerate().any(|(i, a)| {
        len2[i + 1..].iter().enumerate().any(|(j, b)| {
            disjoint(a, b) && len2[i + j + 2..].iter().any(|c| disjoint(a, c) && disjoint(b, c))
        })
    });
    if three {
        tighten(2, BoundSource::ThreeDisjointLength2);
    }
    if !l0.is_empty() {
        tighten(2, BoundSource::L0);
    }
    let far_l0 = l0.len() >= 2 && far_apart(g, &l0);
    LengthBound { max_len, source, far_l0 }
}

/// True if two of the pairs have all their vertices more than four apart.
fn far_apart(g: &DualFullerene, pairs: &[[u16; 2]]) -> bool {
    let dists: Vec<[Vec<usize>; 2]> =
        pairs.iter().map(|p| [g.bfs_distances(p[0] as usize, 4), g.bfs_distances(p[1] as usize, 4)]).collect();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            let close = dists[i].iter().any(|d| pairs[j].iter().any(|&y| d[y as usize] <= 4));
            if !close {
                return true;
            }
        }
    }
    false
}

/// Vertices touched by each short reduction of a graph, for [`prune_expansion`].
pub(crate) struct ReductionZones {
    zones: Vec<(ExpansionKind, Vec<u16>)>,
    marks: Vec<bool>,
}

impl ReductionZones {
    pub fn new(g: &DualFullerene, reductions: &[(ReductionTriple, ReductionPatch)]) -> Self {
        let zones = reductions
            .iter()
            .map(|(t, p)| {
                let mut v = p.path.to_vec();
                v.extend(&p.boundary);
                (t.kind, v)
            })
            .collect();
        ReductionZones { zones, marks: vec![false; g.nv()] }
    }

    /// True unless some reduction that beats an expansion of `kind` lies
    /// entirely outside `touched`.
    pub fn keep(&mut self, kind: ExpansionKind, touched: &[u16]) -> bool {
        let len = kind.length();
        let straight = kind.longest_straight();
        let beats = |k: ExpansionKind| {
            let l = k.length();
            l < len || (l == len && k.longest_straight() > straight)
        };
        if !self.zones.iter().any(|(k, _)| beats(*k)) {
            return true;
        }
        for &x in touched {
            self.marks[x as usize] = true;
        }
        let survivor = self
            .zones
            .iter()
            .any(|(k, zone)| beats(*k) && !zone.iter().any(|&x| self.marks[x as usize]));
        for &x in touched {
            self.marks[x as usize] = false;
        }
        !survivor
    }
}

/// Decides whether an expansion is worth trying. An expansion is skipped when
/// the parent has a reduction that beats it in the invariant order and lies
/// entirely outside the area the expansion changes, since that reduction
/// then survives in the child.
pub fn prune_expansion(g: &DualFullerene, site: &ExpansionSite, reductions: &[ReductionTriple]) -> bool {
    let Some(sp) = expansion_patch(g, site) else { return false };
    let patches: Vec<_> = reductions.iter().filter_map(|t| reduction_patch(g, t).map(|p| (*t, p))).collect();
    ReductionZones::new(g, &patches).keep(site.kind, &sp.boundary)
}
