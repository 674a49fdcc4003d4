//! The recursive generation of all fullerenes up to a given size.
//!
//! Each seed is the root of a search tree. At a node, one expansion is tried
//! per orbit of expansion sites under the node's automorphism group, and a
//! child is kept only if the new path is its canonical reduction. Every
//! fullerene then appears exactly once.

use std::collections::BTreeMap;

use crate::canonical::{automorphism_group, is_canonical, orbit_representatives, site_equivalence_classes, AutomorphismGroup};
use crate::error::{invalid, Result};
use crate::expansions::{
    apply_expansion, apply_expansion_patch, enumerate_expansion_sites, reduction_patches, site_patches, ExpansionKind,
    ReductionTriple,
};
use crate::lookahead::{length_bound_from_patches, length_possible, ReductionZones};
use crate::planar_map::DualFullerene;
use crate::seeds::{build_seed, SeedKind};

/// Which fullerenes to output.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Mode {
    All,
    /// Only fullerenes with isolated pentagons.
    Ipr,
}

/// Parameters of a generation run. Sizes are atom counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationTask {
    pub n_min: usize,
    pub n_max: usize,
    pub mode: Mode,
    /// Use the expansion-length bounds and the IPR shortcuts.
    pub lookahead: bool,
    /// Split the run into `modulus` parts and only do part `residue`.
    pub residue: usize,
    pub modulus: usize,
    /// Dual order at which the search tree is cut into parts.
    pub split_level: usize,
}

impl GenerationTask {
    pub fn new(n_max: usize) -> Self {
        GenerationTask {
            n_min: n_max,
            n_max,
            mode: Mode::All,
            lookahead: true,
            residue: 0,
            modulus: 1,
            split_level: 16,
        }
    }

    pub fn with_range(n_min: usize, n_max: usize) -> Self {
        GenerationTask { n_min, ..Self::new(n_max) }
    }

    pub fn ipr(mut self) -> Self {
        self.mode = Mode::Ipr;
        self
    }

    pub fn split(mut self, residue: usize, modulus: usize) -> Self {
        self.residue = residue;
        self.modulus = modulus;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_max < 20 || self.n_max % 2 != 0 {
            return invalid(format!("fullerene sizes are even and at least 20, got {}", self.n_max));
        }
        if self.n_min > self.n_max {
            return invalid(format!("lower size {} exceeds upper size {}", self.n_min, self.n_max));
        }
        if self.n_max / 2 + 2 > crate::planar_map::MAX_DUAL_ORDER {
            return invalid(format!("size {} is too large", self.n_max));
        }
        if self.modulus == 0 || self.residue >= self.modulus {
            return invalid(format!("bad split {}/{}", self.residue, self.modulus));
        }
        Ok(())
    }

    fn dual_max(&self) -> usize {
        self.n_max / 2 + 2
    }

    fn dual_min(&self) -> usize {
        self.n_min.div_ceil(2) + 2
    }
}

/// How an emitted graph was obtained.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    /// `C20` or `C28`.
    Seed,
    /// A member of the `C30 + 10k` nanotube series, built by ring insertion.
    Nanotube,
    Expansion(ExpansionKind),
}

/// A fullerene handed to a [`Sink`].
#[derive(Debug)]
pub struct Emitted<'a> {
    pub dual: &'a DualFullerene,
    /// Atom count.
    pub n: usize,
    pub origin: Origin,
    pub ipr: bool,
    pub group: &'a AutomorphismGroup,
}

/// Receives the generated fullerenes.
pub trait Sink {
    fn emit(&mut self, e: &Emitted<'_>) -> Result<()>;
}

impl<F: FnMut(&Emitted<'_>) -> Result<()>> Sink for F {
    fn emit(&mut self, e: &Emitted<'_>) -> Result<()> {
        self(e)
    }
}

/// Counters for one atom count.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SizeStats {
    /// Fullerenes output.
    pub emitted: u64,
    /// Output fullerenes with isolated pentagons.
    pub ipr: u64,
    /// Children built and tested for canonicity.
    pub attempted: u64,
    /// Children that passed the test.
    pub accepted: u64,
    /// Tests settled by each invariant component.
    pub decided_at: [u64; 6],
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GenerationStats {
    pub per_n: BTreeMap<usize, SizeStats>,
}

impl GenerationStats {
    pub fn emitted(&self, n: usize) -> u64 {
        self.per_n.get(&n).map_or(0, |s| s.emitted)
    }

    pub fn total_emitted(&self) -> u64 {
        self.per_n.values().map(|s| s.emitted).sum()
    }
}

/// Whether a node of dual order `size` may still lead to an IPR fullerene in
/// range, given whether it has an `L0` reduction.
pub fn ipr_node_useful(task: &GenerationTask, size: usize, has_l0: bool) -> bool {
    let (lo, hi) = (task.dual_min(), task.dual_max());
    if size + 2 >= hi {
        return false;
    }
    !has_l0 || size + 5 <= hi || size + 3 >= lo
}

/// Whether a child of dual order `child` built by an expansion of length `len`
/// may lead to an IPR fullerene in range. `far_l0` says the parent has two
/// distant `L0` reductions, one of which survives in every child.
pub fn ipr_child_useful(task: &GenerationTask, child: usize, len: usize, far_l0: bool) -> bool {
    let (lo, hi) = (task.dual_min(), task.dual_max());
    if child > hi {
        return false;
    }
    let has_l0 = len == 1 || far_l0;
    if child + 2 >= hi {
        return !has_l0 && child >= lo;
    }
    !has_l0 || child + 5 <= hi || child + 3 >= lo
}

struct Search<'s, S: Sink> {
    task: GenerationTask,
    sink: &'s mut S,
    stats: GenerationStats,
    counter: usize,
}

impl<S: Sink> Search<'_, S> {
    fn visit(&mut self, g: &DualFullerene, group: &AutomorphismGroup, origin: Origin, mut owned: bool) -> Result<()> {
        let size = g.nv();
        let task = &self.task;
        if task.modulus > 1 && !owned && size >= task.split_level {
            self.counter += 1;
            if (self.counter - 1) % task.modulus != task.residue {
                return Ok(());
            }
            owned = true;
        }
        let n = g.primal_order();
        if n >= task.n_min && (owned || task.residue == 0) {
            let ipr = g.is_ipr();
            if task.mode == Mode::All || ipr {
                let s = self.stats.per_n.entry(n).or_default();
                s.emitted += 1;
                s.ipr += ipr as u64;
                self.sink.emit(&Emitted { dual: g, n, origin, ipr, group })?;
            }
        }
        let hi = task.dual_max();
        if size + 2 > hi {
            return Ok(());
        }
        let size_cap = hi - size - 1;
        let ipr_cuts = task.mode == Mode::Ipr && task.lookahead;
        let (max_len, reductions, far_l0) = if task.lookahead {
            let reds = reduction_patches(g, 2);
            let bound = length_bound_from_patches(g, &reds, size_cap);
            (bound.max_len, reds, bound.far_l0)
        } else {
            (size_cap, Vec::new(), false)
        };
        if ipr_cuts {
            let has_l0 = reductions.iter().any(|(t, _)| t.kind == ExpansionKind::L(0));
            if !ipr_node_useful(task, size, has_l0) {
                return Ok(());
            }
        }
        let mut zones = ReductionZones::new(g, &reductions);
        let mut sites = site_patches(g, max_len);
        sites.retain(|(s, p)| {
            let len = s.kind.length();
            if !task.lookahead {
                return true;
            }
            length_possible(size, len)
                && (!ipr_cuts || ipr_child_useful(task, size + len + 1, len, far_l0))
                && zones.keep(s.kind, &p.boundary)
        });
        let partners: Vec<_> = sites.iter().map(|(s, p)| p.partner(g, s)).collect();
        let plain: Vec<_> = sites.iter().map(|(s, _)| *s).collect();
        for i in orbit_representatives(g, &plain, &partners, group) {
            let (site, patch) = &sites[i];
            let (child, t) = apply_expansion_patch(g, site, patch)?;
            let c = is_canonical(&child, &t);
            let s = self.stats.per_n.entry(child.primal_order()).or_default();
            s.attempted += 1;
            s.decided_at[c.decided_at] += 1;
            if c.accepted {
                s.accepted += 1;
                let grp = c.group.unwrap_or_else(|| AutomorphismGroup::trivial(child.nv()));
                self.visit(&child, &grp, Origin::Expansion(site.kind), owned)?;
            }
        }
        Ok(())
    }
}

/// Runs the search and hands every fullerene in the task's range to `sink`.
pub fn generate<S: Sink>(task: &GenerationTask, sink: &mut S) -> Result<GenerationStats> {
    task.validate()?;
    let mut search = Search { task: task.clone(), sink, stats: GenerationStats::default(), counter: 0 };
    let mut roots = vec![(SeedKind::C20, Origin::Seed), (SeedKind::C28, Origin::Seed)];
    let mut k = 0;
    while SeedKind::Nanotube(k).primal_order() <= task.n_max {
        roots.push((SeedKind::Nanotube(k), Origin::Nanotube));
        k += 1;
    }
    for (kind, origin) in roots {
        if kind.primal_order() > task.n_max {
            continue;
        }
        let g = build_seed(kind);
        let group = automorphism_group(&g);
        search.visit(&g, &group, origin, false)?;
    }
    Ok(search.stats)
}

/// Convenience wrapper returning only the per-size output counts.
pub fn count(task: &GenerationTask) -> Result<BTreeMap<usize, u64>> {
    let stats = generate(task, &mut |_: &Emitted<'_>| Ok(()))?;
    Ok(stats.per_n.iter().filter(|(_, s)| s.emitted > 0).map(|(&n, s)| (n, s.emitted)).collect())
}

/// The reduction that the last expansion of a child undoes, exposed for tests.
#[doc(hidden)]
pub fn canonical_children(g: &DualFullerene, group: &AutomorphismGroup, max_len: usize) -> Vec<(DualFullerene, ReductionTriple)> {
    let sites = enumerate_expansion_sites(g, max_len);
    site_equivalence_classes(g, &sites, group)
        .into_iter()
        .filter_map(|s| apply_expansion(g, &s).ok())
        .filter(|(h, t)| is_canonical(h, t).accepted)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const COUNTS: [(usize, u64); 13] = [
        (20, 1), (22, 0), (24, 1), (26, 1), (28, 2), (30, 3), (32, 6),
        (34, 6), (36, 15), (38, 17), (40, 40), (42, 45), (44, 89),
    ];

    #[test]
    fn small_counts_without_lookahead() {
        let mut task = GenerationTask::with_range(20, 44);
        task.lookahead = false;
        let got = count(&task).unwrap();
        for (n, c) in COUNTS {
            assert_eq!(got.get(&n).copied().unwrap_or(0), c, "n = {n}");
        }
    }

    #[test]
    fn small_counts_with_lookahead() {
        let got = count(&GenerationTask::with_range(20, 44)).unwrap();
        for (n, c) in COUNTS {
            assert_eq!(got.get(&n).copied().unwrap_or(0), c, "n = {n}");
        }
    }

    #[test]
    fn rejects_bad_tasks() {
        assert!(GenerationTask::new(21).validate().is_err());
        assert!(GenerationTask::new(18).validate().is_err());
        assert!(GenerationTask::with_range(40, 30).validate().is_err());
        assert!(GenerationTask::new(40).split(3, 3).validate().is_err());
    }
}
