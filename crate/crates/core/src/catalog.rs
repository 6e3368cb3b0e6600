//! Corollary bounds for the named indices, as checkable statements.

use serde::Serialize;

use crate::phi::PhiSpec;
use crate::theorems::{check_hypothesis, minimal_n, Side, Theorem, TheoremCase};

/// Largest order scanned when resolving a "for large enough n" statement.
pub const CONDITIONAL_SCAN_MAX: usize = 100;

/// Digraphs a statement says attain its bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EqualityClass {
    #[serde(rename = "star-orientations")]
    StarOrientations,
    #[serde(rename = "cond5")]
    UnitHubArcs,
    #[serde(rename = "cond6")]
    DiagonalSourceSink,
    #[serde(rename = "cond7")]
    DiagonalNoZero,
    #[serde(rename = "single-arc")]
    SingleArc,
    #[serde(rename = "sym-complete")]
    SymComplete,
    #[serde(rename = "none-stated")]
    NoneStated,
}

impl EqualityClass {
    pub fn label(self) -> &'static str {
        match self {
            EqualityClass::StarOrientations => "star-orientations",
            EqualityClass::UnitHubArcs => "cond5",
            EqualityClass::DiagonalSourceSink => "cond6",
            EqualityClass::DiagonalNoZero => "cond7",
            EqualityClass::SingleArc => "single-arc",
            EqualityClass::SymComplete => "sym-complete",
            EqualityClass::NoneStated => "none-stated",
        }
    }
}

/// One corollary instance at a fixed order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundStatement {
    pub id: &'static str,
    pub direction: Side,
    pub spec: PhiSpec,
    pub n: usize,
    pub bound_value: f64,
    pub applicability: String,
    pub equality_class: EqualityClass,
    /// Theorem variant the statement is derived from.
    pub hypothesis: TheoremCase,
    /// Holds only from an empirically found order on, not unconditionally.
    pub conditional: bool,
    pub minimal_n: Option<usize>,
    /// Whether the equality class is non-empty at this order, i.e. whether
    /// the statement claims its bound is attained.
    pub claimed_tight: bool,
}

impl BoundStatement {
    /// The same bound read off the theorem the statement is derived from.
    pub fn theorem_bound(&self) -> f64 {
        crate::theorems::bound_value(
            self.hypothesis.theorem,
            self.hypothesis.side,
            self.n,
            &self.spec,
        )
    }
}

const T1I: TheoremCase = TheoremCase::new(Theorem::One, Side::Lower);
const T2I: TheoremCase = TheoremCase::new(Theorem::Two, Side::Lower);
const T2II: TheoremCase = TheoremCase::new(Theorem::Two, Side::Upper);
const T3II: TheoremCase = TheoremCase::new(Theorem::Three, Side::Upper);

struct Draft {
    id: &'static str,
    spec: PhiSpec,
    hypothesis: TheoremCase,
    class: EqualityClass,
    value: f64,
    applicability: String,
}

impl Draft {
    fn at(self, n: usize, conditional: bool, minimal_n: Option<usize>) -> BoundStatement {
        let claimed_tight = !(self.class == EqualityClass::SingleArc && n != 2);
        BoundStatement {
            id: self.id,
            direction: self.hypothesis.side,
            spec: self.spec,
            n,
            bound_value: self.value,
            applicability: self.applicability,
            equality_class: self.class,
            hypothesis: self.hypothesis,
            conditional,
            minimal_n,
            claimed_tight,
        }
    }
}

/// Empirical order from which a conditional statement is taken to hold, and
/// whether it holds at `n`.
fn conditional_reach(case: TheoremCase, spec: &PhiSpec, n: usize) -> (Option<usize>, bool) {
    let from = minimal_n(case, spec, CONDITIONAL_SCAN_MAX);
    let reached = from.is_some_and(|m| n >= m) && check_hypothesis(case, n, spec).holds;
    (from, reached)
}

/// Every corollary statement applicable at order `n`.
///
/// Statements for fixed indices (harmonic, GA, ABC, Randić, `sumconn:-1`) are
/// always included; the general-exponent statements are added at `alpha`
/// when it is given and falls in their range. The general Randić bound that
/// is attained by the single arc is emitted as a lower bound.
///
/// Panics if `n < 2`.
pub fn corollary_catalog(n: usize, alpha: Option<f64>) -> Vec<BoundStatement> {
    assert!(n >= 2, "catalog needs n >= 2, got {n}");
    let nf = n as f64;
    let n1 = nf - 1.0;
    let mut out = Vec::new();

    out.push(
        Draft {
            id: "COR4b",
            spec: PhiSpec::randic(),
            hypothesis: T3II,
            class: EqualityClass::DiagonalNoZero,
            value: nf / 2.0,
            applicability: "all n".into(),
        }
        .at(n, false, None),
    );
    if n >= 3 {
        out.push(
            Draft {
                id: "COR6a",
                spec: PhiSpec::randic(),
                hypothesis: T1I,
                class: EqualityClass::StarOrientations,
                value: 0.5 * n1.sqrt(),
                applicability: "n >= 3".into(),
            }
            .at(n, false, None),
        );
    }
    out.push(
        Draft {
            id: "COR7b",
            spec: PhiSpec::general_sum_connectivity(-1.0),
            hypothesis: T3II,
            class: EqualityClass::DiagonalNoZero,
            value: nf / 4.0,
            applicability: "all n".into(),
        }
        .at(n, false, None),
    );
    out.push(
        Draft {
            id: "COR9max",
            spec: PhiSpec::geometric_arithmetic(),
            hypothesis: T2II,
            class: EqualityClass::SymComplete,
            value: 0.5 * nf * n1,
            applicability: "all n".into(),
        }
        .at(n, false, None),
    );
    out.push(
        Draft {
            id: "COR9min",
            spec: PhiSpec::geometric_arithmetic(),
            hypothesis: T1I,
            class: EqualityClass::StarOrientations,
            value: n1.powf(1.5) / nf,
            applicability: "all n".into(),
        }
        .at(n, false, None),
    );
    out.push(
        Draft {
            id: "COR10",
            spec: PhiSpec::atom_bond_connectivity(),
            hypothesis: T2II,
            class: EqualityClass::SymComplete,
            value: 0.5 * nf * (2.0 * nf - 4.0).sqrt(),
            applicability: "all n".into(),
        }
        .at(n, false, None),
    );
    out.push(
        Draft {
            id: "COR11max",
            spec: PhiSpec::harmonic(),
            hypothesis: T3II,
            class: EqualityClass::DiagonalNoZero,
            value: nf / 2.0,
            applicability: "all n".into(),
        }
        .at(n, false, None),
    );
    out.push(
        Draft {
            id: "COR11min",
            spec: PhiSpec::harmonic(),
            hypothesis: T1I,
            class: EqualityClass::StarOrientations,
            value: n1 / nf,
            applicability: "all n".into(),
        }
        .at(n, false, None),
    );

    let Some(a) = alpha else {
        return out;
    };

    if a > -0.5 {
        out.push(
            Draft {
                id: "COR4a",
                spec: PhiSpec::general_randic(a),
                hypothesis: T2II,
                class: EqualityClass::SymComplete,
                value: 0.5 * nf * n1.powf(2.0 * a + 1.0),
                applicability: "alpha > -1/2".into(),
            }
            .at(n, false, None),
        );
        out.push(
            Draft {
                id: "COR7a",
                spec: PhiSpec::general_sum_connectivity(a),
                hypothesis: T2II,
                class: EqualityClass::SymComplete,
                value: 2f64.powf(a - 1.0) * nf * n1.powf(a + 1.0),
                applicability: "alpha > -1/2".into(),
            }
            .at(n, false, None),
        );
    }
    if a <= -1.0 {
        out.push(
            Draft {
                id: "COR5",
                spec: PhiSpec::general_randic(a),
                hypothesis: T2I,
                class: EqualityClass::SingleArc,
                value: 0.25 * nf * n1.powf(2.0 * a + 1.0),
                applicability: "alpha <= -1; attained only at n = 2".into(),
            }
            .at(n, false, None),
        );
    }
    if (-0.5..0.0).contains(&a) {
        let spec = PhiSpec::general_randic(a);
        let (from, reached) = conditional_reach(T1I, &spec, n);
        if reached {
            out.push(
                Draft {
                    id: "COR6b",
                    spec,
                    hypothesis: T1I,
                    class: EqualityClass::StarOrientations,
                    value: 0.5 * n1.powf(a + 1.0),
                    applicability: format!(
                        "-1/2 <= alpha < 0 and n large enough (empirically n >= {})",
                        from.unwrap_or(n)
                    ),
                }
                .at(n, true, from),
            );
        }
    }
    if (-1.0..0.0).contains(&a) {
        let spec = PhiSpec::general_sum_connectivity(a);
        let literal = a <= -0.5 && n >= 6;
        let (from, reached) = conditional_reach(T1I, &spec, n);
        if literal || reached {
            out.push(
                Draft {
                    id: "COR8",
                    spec,
                    hypothesis: T1I,
                    class: EqualityClass::StarOrientations,
                    value: 0.5 * n1 * nf.powf(a),
                    applicability: match from {
                        Some(m) => format!(
                            "alpha in [-1, -1/2] and n >= 6, or alpha in [-1, 0) and n large \
                             enough (empirically n >= {m})"
                        ),
                        None => "alpha in [-1, -1/2] and n >= 6".into(),
                    },
                }
                .at(n, !literal, from),
            );
        }
    }
    out
}

/// Catalog entries for one index at order `n`.
pub fn catalog_for(n: usize, spec: &PhiSpec) -> Vec<BoundStatement> {
    corollary_catalog(n, spec.alpha())
        .into_iter()
        .filter(|s| s.spec == *spec)
        .collect()
}
