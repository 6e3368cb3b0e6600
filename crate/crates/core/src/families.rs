//! Named digraph families that attain, or illustrate, the extremal bounds.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::phi::PhiSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    /// Every arc points from vertex 0 to a leaf.
    StarOut,
    /// Every arc points from a leaf to vertex 0.
    StarIn,
    /// Star with each edge replaced by two opposite arcs.
    SymStar,
    /// The arc 0 -> 1 (n = 2).
    SingleArc,
    /// `v1v2, v2v1, v_i v1, v2 v_i` for `3 <= i <= n`.
    D1,
    /// `v1v3, v1v4, v2v3, v2v4`.
    D2,
    /// `v1v3, v1v4, v2v3, v2v4, v3v1, v4v2`.
    D3,
    /// `i -> i + 1 mod n`.
    Dicycle,
    /// All n(n-1) arcs.
    SymComplete,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 9] = [
        FamilyKind::StarOut,
        FamilyKind::StarIn,
        FamilyKind::SymStar,
        FamilyKind::SingleArc,
        FamilyKind::D1,
        FamilyKind::D2,
        FamilyKind::D3,
        FamilyKind::Dicycle,
        FamilyKind::SymComplete,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::StarOut => "star-out",
            FamilyKind::StarIn => "star-in",
            FamilyKind::SymStar => "sym-star",
            FamilyKind::SingleArc => "single-arc",
            FamilyKind::D1 => "d1",
            FamilyKind::D2 => "d2",
            FamilyKind::D3 => "d3",
            FamilyKind::Dicycle => "dicycle",
            FamilyKind::SymComplete => "sym-complete",
        }
    }

    fn requirement(self) -> (&'static str, fn(usize) -> bool) {
        match self {
            FamilyKind::SingleArc => ("n = 2", |n| n == 2),
            FamilyKind::D2 | FamilyKind::D3 => ("n = 4", |n| n == 4),
            FamilyKind::D1 => ("n >= 3", |n| n >= 3),
            _ => ("n >= 2", |n| n >= 2),
        }
    }

    /// Orders for which the family is defined, up to `max`.
    pub fn orders(self, max: usize) -> impl Iterator<Item = usize> {
        let (_, ok) = self.requirement();
        (2..=max).filter(move |&n| ok(n))
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A family member of a given order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyId {
    kind: FamilyKind,
    n: usize,
}

impl FamilyId {
    pub fn new(kind: FamilyKind, n: usize) -> Result<Self> {
        let (requirement, ok) = kind.requirement();
        if !ok(n) {
            return Err(Error::FamilyOrder {
                kind: kind.name(),
                requirement,
                n,
            });
        }
        Ok(FamilyId { kind, n })
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        let n = self.n;
        match self.kind {
            FamilyKind::StarOut => (1..n).map(|v| (0, v)).collect(),
            FamilyKind::StarIn => (1..n).map(|v| (v, 0)).collect(),
            FamilyKind::SymStar => (1..n).flat_map(|v| [(0, v), (v, 0)]).collect(),
            FamilyKind::SingleArc => vec![(0, 1)],
            FamilyKind::D1 => {
                let mut arcs = vec![(0, 1), (1, 0)];
                arcs.extend((2..n).flat_map(|i| [(i, 0), (1, i)]));
                arcs
            }
            FamilyKind::D2 => vec![(0, 2), (0, 3), (1, 2), (1, 3)],
            FamilyKind::D3 => vec![(0, 2), (0, 3), (1, 2), (1, 3), (2, 0), (3, 1)],
            FamilyKind::Dicycle => (0..n).map(|u| (u, (u + 1) % n)).collect(),
            FamilyKind::SymComplete => (0..n)
                .flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v)))
                .collect(),
        }
    }

    pub fn construct(&self) -> Digraph {
        Digraph::new(self.n, self.arcs()).expect("family arc lists are valid")
    }

    /// Index value from the family's closed form.
    pub fn index(&self, spec: &PhiSpec) -> f64 {
        let n = self.n;
        let nf = n as f64;
        let phi = |i, j| spec.eval(i, j);
        match self.kind {
            FamilyKind::StarOut | FamilyKind::StarIn => (nf - 1.0) / 2.0 * phi(1, n - 1),
            FamilyKind::SymStar => (nf - 1.0) * phi(1, n - 1),
            FamilyKind::SingleArc => 0.5 * phi(1, 1),
            FamilyKind::D1 => {
                0.5 * (phi(1, 1) + phi(n - 1, n - 1) + 2.0 * (nf - 2.0) * phi(1, n - 1))
            }
            FamilyKind::D2 => 2.0 * phi(2, 2),
            FamilyKind::D3 => phi(1, 1) + 2.0 * phi(2, 2),
            FamilyKind::Dicycle => nf / 2.0 * phi(1, 1),
            FamilyKind::SymComplete => nf * (nf - 1.0) / 2.0 * phi(n - 1, n - 1),
        }
    }
}

/// Shorthand for [`FamilyId::index`].
pub fn family_index(f: &FamilyId, spec: &PhiSpec) -> f64 {
    f.index(spec)
}

/// Every labeled copy of the out-star and in-star on `n` vertices: one per
/// centre and direction, deduplicated (at n = 2 both directions coincide).
pub fn star_orientations(n: usize) -> Result<Vec<Digraph>> {
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    let mut out: Vec<Digraph> = Vec::with_capacity(2 * n);
    for centre in 0..n {
        let leaves = (0..n).filter(move |&v| v != centre);
        for arcs in [
            leaves.clone().map(|v| (centre, v)).collect::<Vec<_>>(),
            leaves.map(|v| (v, centre)).collect(),
        ] {
            let d = Digraph::new(n, arcs)?;
            if !out.contains(&d) {
                out.push(d);
            }
        }
    }
    Ok(out)
}
