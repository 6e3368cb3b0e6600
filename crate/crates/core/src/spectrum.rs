//! Arc-type counts of a digraph and the extremal arc-type regimes.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

/// Arc-type statistics of a digraph without isolated vertices.
///
/// `a(i, j)` counts arcs `uv` with out-degree(u) = i and in-degree(v) = j.
/// `p(i, j)` folds the two orientations of an unordered type together
/// (`p(i, i) = a(i, i)`). `role_count(i)` counts vertices with out-degree i
/// plus vertices with in-degree i, so a vertex may contribute twice.
/// Absent keys mean zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSpectrum {
    n: usize,
    arc_count: u64,
    a: BTreeMap<(usize, usize), u64>,
    p: BTreeMap<(usize, usize), u64>,
    roles: BTreeMap<usize, u64>,
}

impl DegreeSpectrum {
    pub fn of(d: &Digraph) -> Result<Self> {
        let n = d.order();
        if n < 2 {
            return Err(Error::TooFewVertices(n));
        }
        if let Some(v) = d.isolated_vertex() {
            return Err(Error::IsolatedVertex(v));
        }
        let out = d.out_degrees();
        let inn = d.in_degrees();

        let mut a = BTreeMap::new();
        let mut p = BTreeMap::new();
        let mut arc_count = 0;
        for (u, v) in d.arcs() {
            let (i, j) = (out[u], inn[v]);
            *a.entry((i, j)).or_insert(0) += 1;
            *p.entry((i.min(j), i.max(j))).or_insert(0) += 1;
            arc_count += 1;
        }
        let mut roles = BTreeMap::new();
        for deg in out.iter().chain(inn.iter()) {
            *roles.entry(*deg).or_insert(0) += 1;
        }
        Ok(DegreeSpectrum {
            n,
            arc_count,
            a,
            p,
            roles,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> u64 {
        self.arc_count
    }

    pub fn a(&self, i: usize, j: usize) -> u64 {
        self.a.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Symmetrized count; argument order does not matter.
    pub fn p(&self, i: usize, j: usize) -> u64 {
        self.p.get(&(i.min(j), i.max(j))).copied().unwrap_or(0)
    }

    pub fn role_count(&self, i: usize) -> u64 {
        self.roles.get(&i).copied().unwrap_or(0)
    }

    /// Number of zero-degree roles (`n_0`).
    pub fn zero_roles(&self) -> u64 {
        self.role_count(0)
    }

    /// Nonzero `a` entries in key order.
    pub fn a_entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.a.iter().map(|(&k, &c)| (k, c))
    }

    /// Nonzero `p` entries with `i <= j`, in key order.
    pub fn p_entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.p.iter().map(|(&k, &c)| (k, c))
    }

    pub fn role_entries(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.roles.iter().map(|(&k, &c)| (k, c))
    }

    /// Both sides of the per-class degree sum: `sum_j p(i, j) + p(i, i)`
    /// against `i * role_count(i)`.
    pub fn degree_sum_sides(&self, i: usize) -> (u64, u64) {
        let lhs = (1..self.n).map(|j| self.p(i, j)).sum::<u64>() + self.p(i, i);
        (lhs, i as u64 * self.role_count(i))
    }

    /// Both sides of `sum_{i >= 1} role_count(i) = 2n - role_count(0)`.
    pub fn role_total_sides(&self) -> (u64, u64) {
        let lhs = (1..self.n).map(|i| self.role_count(i)).sum();
        (lhs, 2 * self.n as u64 - self.zero_roles())
    }

    /// Every exact identity the counts must satisfy.
    pub fn identities_hold(&self) -> bool {
        let per_class = (1..self.n).all(|i| {
            let (l, r) = self.degree_sum_sides(i);
            l == r
        });
        let (l, r) = self.role_total_sides();
        let folded = self.p.iter().all(|(&(i, j), &c)| {
            if i == j {
                c == self.a(i, i)
            } else {
                c == self.a(i, j) + self.a(j, i)
            }
        });
        per_class && l == r && folded && self.a.values().sum::<u64>() == self.arc_count
    }

    /// Which of the three extremal regimes the counts fall into.
    pub fn conditions(&self) -> BTreeSet<Condition> {
        let n1 = self.n - 1;
        let zero = self.zero_roles();
        let mut set = BTreeSet::new();
        if self.p.keys().all(|&k| k == (1, n1)) && zero == 0 {
            set.insert(Condition::UnitHubArcs);
        }
        let diagonal = self.p.keys().all(|&(i, j)| i == j);
        if diagonal && zero == self.n as u64 {
            set.insert(Condition::DiagonalSourceSink);
        }
        if diagonal && zero == 0 {
            set.insert(Condition::DiagonalNoZero);
        }
        set
    }
}

/// Shorthand for [`DegreeSpectrum::of`].
pub fn degree_spectrum(d: &Digraph) -> Result<DegreeSpectrum> {
    DegreeSpectrum::of(d)
}

/// Extremal arc-type regimes of a digraph on n vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Condition {
    /// Only (1, n-1)- or (n-1, 1)-arcs, and no vertex with a zero degree.
    #[serde(rename = "cond5")]
    UnitHubArcs,
    /// Only (i, i)-arcs, and every vertex is a source or a sink.
    #[serde(rename = "cond6")]
    DiagonalSourceSink,
    /// Only (i, i)-arcs, and no vertex with a zero degree.
    #[serde(rename = "cond7")]
    DiagonalNoZero,
}

impl Condition {
    pub fn label(self) -> &'static str {
        match self {
            Condition::UnitHubArcs => "cond5",
            Condition::DiagonalSourceSink => "cond6",
            Condition::DiagonalNoZero => "cond7",
        }
    }
}

impl std::fmt::Display for Condition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

pub fn classify_condition(d: &Digraph) -> Result<BTreeSet<Condition>> {
    Ok(DegreeSpectrum::of(d)?.conditions())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(cs: &[Condition]) -> BTreeSet<Condition> {
        cs.iter().copied().collect()
    }

    /// Recount arc types straight from the arc list.
    fn recount(d: &Digraph, i: usize, j: usize) -> u64 {
        d.arcs()
            .filter(|&(u, v)| {
                let t = (d.out_degree(u), d.in_degree(v));
                t == (i, j) || t == (j, i)
            })
            .count() as u64
    }

    fn d3() -> Digraph {
        Digraph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 0), (3, 1)]).unwrap()
    }

    #[test]
    fn d3_spectrum() {
        let d = d3();
        let s = DegreeSpectrum::of(&d).unwrap();
        assert_eq!(s.p(1, 1), 2);
        assert_eq!(s.p(2, 2), 4);
        assert_eq!(s.p_entries().count(), 2);
        assert_eq!(s.zero_roles(), 0);
        for i in 1..4 {
            for j in i..4 {
                assert_eq!(s.p(i, j), recount(&d, i, j));
            }
        }
        assert!(s.identities_hold());
    }

    #[test]
    fn single_arc_spectrum() {
        let s = DegreeSpectrum::of(&Digraph::new(2, [(0, 1)]).unwrap()).unwrap();
        assert_eq!(s.a(1, 1), 1);
        assert_eq!(s.zero_roles(), 2);
        assert_eq!(s.role_count(1), 2);
    }

    #[test]
    fn symmetric_star_spectrum() {
        let d = Digraph::symmetrize(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = DegreeSpectrum::of(&d).unwrap();
        assert_eq!(s.p(1, 3), 6);
        assert_eq!(s.p(3, 1), 6);
        assert_eq!(s.a(3, 1), 3);
        assert_eq!(s.a(1, 3), 3);
        assert_eq!(s.zero_roles(), 0);
        assert_eq!(recount(&d, 1, 3), 6);
    }

    #[test]
    fn spectrum_rejects_isolated_and_trivial() {
        assert_eq!(
            DegreeSpectrum::of(&Digraph::new(3, [(0, 1)]).unwrap()).unwrap_err(),
            Error::IsolatedVertex(2)
        );
        assert_eq!(
            DegreeSpectrum::of(&Digraph::new(1, []).unwrap()).unwrap_err(),
            Error::TooFewVertices(1)
        );
    }

    #[test]
    fn classifier_examples() {
        let sym_star = Digraph::symmetrize(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            classify_condition(&sym_star).unwrap(),
            set(&[Condition::UnitHubArcs])
        );

        let d2 = Digraph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(
            classify_condition(&d2).unwrap(),
            set(&[Condition::DiagonalSourceSink])
        );

        for n in 2..9 {
            let c = Digraph::new(n, (0..n).map(|u| (u, (u + 1) % n))).unwrap();
            let expect = if n == 2 {
                // sym K2: its only arc type (1, 1) is also (1, n-1)
                set(&[Condition::UnitHubArcs, Condition::DiagonalNoZero])
            } else {
                set(&[Condition::DiagonalNoZero])
            };
            assert_eq!(classify_condition(&c).unwrap(), expect, "n = {n}");
        }

        assert_eq!(
            classify_condition(&d3()).unwrap(),
            set(&[Condition::DiagonalNoZero])
        );
    }

    #[test]
    fn d1_is_not_unit_hub() {
        // arcs v1v2, v2v1, v_i v1, v2 v_i
        let d1 = Digraph::new(4, [(0, 1), (1, 0), (2, 0), (3, 0), (1, 2), (1, 3)]).unwrap();
        let s = DegreeSpectrum::of(&d1).unwrap();
        assert_eq!(s.a(1, 1), 1);
        assert_eq!(s.a(3, 3), 1);
        assert!(classify_condition(&d1).unwrap().is_empty());
    }

    #[test]
    fn symmetric_complete_is_diagonal() {
        for n in 3..8 {
            let k = Digraph::symmetrize(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
                .unwrap();
            let s = DegreeSpectrum::of(&k).unwrap();
            assert_eq!(s.p(n - 1, n - 1), (n * (n - 1)) as u64);
            assert_eq!(
                classify_condition(&k).unwrap(),
                set(&[Condition::DiagonalNoZero])
            );
        }
    }
}
