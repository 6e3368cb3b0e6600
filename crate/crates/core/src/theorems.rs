//! Hypotheses and bound formulas of the three extremal theorems.
//!
//! Each theorem compares `phi` against a threshold on a finite set of degree
//! pairs `1 <= i <= j <= n - 1`:
//!
//! * theorem 1 anchors at the pair `(1, n-1)` with
//!   `L(i, j) = (n-1)/n * (1/i + 1/j) * phi(1, n-1)` on every other pair;
//! * theorem 2 anchors at `(n-1, n-1)` with
//!   `M(i, j) = (n-1)/2 * (1/i + 1/j) * phi(n-1, n-1)` on every other pair;
//! * theorem 3 uses `M` on the off-diagonal pairs only and additionally
//!   requires `i * phi(i, i) = (n-1) * phi(n-1, n-1)` for `i <= n - 2`.
//!
//! Variant (i) asks `phi > threshold` and yields a lower bound, variant (ii)
//! asks `phi < threshold` and yields an upper bound. Hypotheses are checked by
//! scanning the integer grid directly.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;
use crate::phi::PhiSpec;
use crate::spectrum::DegreeSpectrum;

/// Margin a strict inequality must clear.
pub const STRICT_MARGIN: f64 = 1e-12;
/// Relative tolerance for the diagonal equality of theorem 3.
pub const DIAGONAL_RTOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    One,
    Two,
    Three,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// Variant (i): lower bound.
    Lower,
    /// Variant (ii): upper bound.
    Upper,
}

/// One variant of one theorem, e.g. `T1i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TheoremCase {
    pub theorem: Theorem,
    pub side: Side,
}

impl TheoremCase {
    pub const ALL: [TheoremCase; 6] = [
        TheoremCase::new(Theorem::One, Side::Lower),
        TheoremCase::new(Theorem::One, Side::Upper),
        TheoremCase::new(Theorem::Two, Side::Lower),
        TheoremCase::new(Theorem::Two, Side::Upper),
        TheoremCase::new(Theorem::Three, Side::Lower),
        TheoremCase::new(Theorem::Three, Side::Upper),
    ];

    pub const fn new(theorem: Theorem, side: Side) -> Self {
        TheoremCase { theorem, side }
    }
}

impl fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = match self.theorem {
            Theorem::One => 1,
            Theorem::Two => 2,
            Theorem::Three => 3,
        };
        let s = match self.side {
            Side::Lower => "i",
            Side::Upper => "ii",
        };
        write!(f, "T{t}{s}")
    }
}

impl FromStr for TheoremCase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let body = s.strip_prefix(['T', 't']).unwrap_or(s);
        let theorem = match body.chars().next() {
            Some('1') => Theorem::One,
            Some('2') => Theorem::Two,
            Some('3') => Theorem::Three,
            _ => return Err(Error::UnknownTheorem(s.to_string())),
        };
        let side = match &body[1..] {
            "i" => Side::Lower,
            "ii" => Side::Upper,
            _ => return Err(Error::UnknownTheorem(s.to_string())),
        };
        Ok(TheoremCase { theorem, side })
    }
}

impl Serialize for TheoremCase {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `(n-1)/n * (1/i + 1/j) * phi(1, n-1)`.
///
/// The rational factor is formed from integers so that `(1, n-1)` gives back
/// `phi(1, n-1)` bit for bit.
pub fn threshold_l(i: usize, j: usize, n: usize, spec: &PhiSpec) -> f64 {
    let num = ((n - 1) * (i + j)) as f64;
    let den = (n * i * j) as f64;
    num / den * spec.eval(1, n - 1)
}

/// `(n-1)/2 * (1/i + 1/j) * phi(n-1, n-1)`, exact at `(n-1, n-1)`.
pub fn threshold_m(i: usize, j: usize, n: usize, spec: &PhiSpec) -> f64 {
    let num = ((n - 1) * (i + j)) as f64;
    let den = (2 * i * j) as f64;
    num / den * spec.eval(n - 1, n - 1)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
    pub phi: f64,
    pub threshold: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HypothesisReport {
    pub theorem: TheoremCase,
    pub n: usize,
    pub spec: PhiSpec,
    pub holds: bool,
    /// Sorted by `(i, j)`.
    pub violations: Vec<Violation>,
    /// Only present for theorem 3.
    pub diagonal_ok: Option<bool>,
}

/// Pairs `i <= j` compared against the theorem's threshold.
fn grid(theorem: Theorem, n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n)
        .flat_map(move |i| (i..n).map(move |j| (i, j)))
        .filter(move |&(i, j)| match theorem {
            Theorem::One => (i, j) != (1, n - 1),
            Theorem::Two => (i, j) != (n - 1, n - 1),
            Theorem::Three => i != j,
        })
}

/// Scan the hypothesis grid of `case` at order `n`.
///
/// Panics if `n < 2`. At `n = 2` every grid is empty and the hypothesis holds
/// vacuously.
pub fn check_hypothesis(case: TheoremCase, n: usize, spec: &PhiSpec) -> HypothesisReport {
    assert!(n >= 2, "hypotheses need n >= 2, got {n}");
    let threshold = |i, j| match case.theorem {
        Theorem::One => threshold_l(i, j, n, spec),
        Theorem::Two | Theorem::Three => threshold_m(i, j, n, spec),
    };
    let violations: Vec<Violation> = grid(case.theorem, n)
        .filter_map(|(i, j)| {
            let phi = spec.eval(i, j);
            let t = threshold(i, j);
            let ok = match case.side {
                Side::Lower => phi - t > STRICT_MARGIN,
                Side::Upper => t - phi > STRICT_MARGIN,
            };
            (!ok).then_some(Violation {
                i,
                j,
                phi,
                threshold: t,
            })
        })
        .collect();

    let diagonal_ok = (case.theorem == Theorem::Three).then(|| {
        let target = (n - 1) as f64 * spec.eval(n - 1, n - 1);
        (1..n - 1).all(|i| {
            let lhs = i as f64 * spec.eval(i, i);
            let scale = lhs.abs().max(target.abs());
            (lhs - target).abs() <= DIAGONAL_RTOL * scale
        })
    });

    HypothesisReport {
        theorem: case,
        n,
        spec: *spec,
        holds: violations.is_empty() && diagonal_ok.unwrap_or(true),
        violations,
        diagonal_ok,
    }
}

/// The bound a theorem variant asserts at order `n`.
pub fn bound_value(theorem: Theorem, side: Side, n: usize, spec: &PhiSpec) -> f64 {
    let nf = n as f64;
    match (theorem, side) {
        (Theorem::One, Side::Lower) => (nf - 1.0) / 2.0 * spec.eval(1, n - 1),
        (Theorem::One, Side::Upper) => (nf - 1.0) * spec.eval(1, n - 1),
        (_, Side::Lower) => nf * (nf - 1.0) / 4.0 * spec.eval(n - 1, n - 1),
        (_, Side::Upper) => nf * (nf - 1.0) / 2.0 * spec.eval(n - 1, n - 1),
    }
}

/// Smallest `n` in `3..=n_max` whose grid is non-empty and passes the
/// hypothesis. `n = 2` is skipped because it passes vacuously.
pub fn minimal_n(case: TheoremCase, spec: &PhiSpec, n_max: usize) -> Option<usize> {
    (3..=n_max).find(|&n| check_hypothesis(case, n, spec).holds)
}

/// `2 I(D)` rebuilt around the `(1, n-1)` pair:
/// `[2(n-1) - (n-1)/n n0] phi(1, n-1) + sum over the rest of
/// (phi(i, j) - L(i, j)) p(i, j)`.
pub fn decomposition_unit_hub(s: &DegreeSpectrum, spec: &PhiSpec) -> f64 {
    let n = s.order();
    let nf = n as f64;
    let n0 = s.zero_roles() as f64;
    let head = (2.0 * (nf - 1.0) - (nf - 1.0) / nf * n0) * spec.eval(1, n - 1);
    let rest: f64 = s
        .p_entries()
        .filter(|&((i, j), _)| (i, j) != (1, n - 1))
        .map(|((i, j), c)| (spec.eval(i, j) - threshold_l(i, j, n, spec)) * c as f64)
        .sum();
    head + rest
}

/// `2 I(D)` rebuilt around the `(n-1, n-1)` pair:
/// `1/2 (2n - n0)(n-1) phi(n-1, n-1) + sum over the rest of
/// (phi(i, j) - M(i, j)) p(i, j)`.
pub fn decomposition_complete(s: &DegreeSpectrum, spec: &PhiSpec) -> f64 {
    let n = s.order();
    complete_head(s, spec)
        + s.p_entries()
            .filter(|&((i, j), _)| (i, j) != (n - 1, n - 1))
            .map(|((i, j), c)| (spec.eval(i, j) - threshold_m(i, j, n, spec)) * c as f64)
            .sum::<f64>()
}

/// Same as [`decomposition_complete`] with the diagonal written as
/// `(phi(i, i) - (n-1)/i phi(n-1, n-1)) p(i, i)`.
pub fn decomposition_split_diagonal(s: &DegreeSpectrum, spec: &PhiSpec) -> f64 {
    let n = s.order();
    let top = spec.eval(n - 1, n - 1);
    let mut off = 0.0;
    let mut diag = 0.0;
    for ((i, j), c) in s.p_entries() {
        let c = c as f64;
        if i != j {
            off += (spec.eval(i, j) - threshold_m(i, j, n, spec)) * c;
        } else if i < n - 1 {
            diag += (spec.eval(i, i) - (n - 1) as f64 / i as f64 * top) * c;
        }
    }
    complete_head(s, spec) + off + diag
}

fn complete_head(s: &DegreeSpectrum, spec: &PhiSpec) -> f64 {
    let n = s.order();
    let nf = n as f64;
    0.5 * (2.0 * nf - s.zero_roles() as f64) * (nf - 1.0) * spec.eval(n - 1, n - 1)
}
