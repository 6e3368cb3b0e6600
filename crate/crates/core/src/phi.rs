//! Arc weight functions of the supported index families.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `(xy)^alpha`
    GeneralRandic,
    /// `(x + y)^alpha`
    GeneralSumConnectivity,
    /// `sqrt(xy) / ((x + y) / 2)`
    GeometricArithmetic,
    /// `sqrt((x + y - 2) / (xy))`
    AtomBondConnectivity,
    /// `2 / (x + y)`
    Harmonic,
}

/// A weight function `phi(i, j)`, evaluated at (out-degree of the tail,
/// in-degree of the head) and summed over arcs.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhiSpec {
    family: Family,
    alpha: Option<f64>,
}

/// Index names accepted on the command line that need no exponent.
pub const NAMED_INDICES: [&str; 8] = [
    "harmonic", "ga", "abc", "randic", "sumconn", "zagreb1", "zagreb2", "mzagreb2",
];

impl PhiSpec {
    pub fn general_randic(alpha: f64) -> Self {
        PhiSpec {
            family: Family::GeneralRandic,
            alpha: Some(alpha),
        }
    }

    pub fn general_sum_connectivity(alpha: f64) -> Self {
        PhiSpec {
            family: Family::GeneralSumConnectivity,
            alpha: Some(alpha),
        }
    }

    pub fn randic() -> Self {
        Self::general_randic(-0.5)
    }

    pub fn second_zagreb() -> Self {
        Self::general_randic(1.0)
    }

    pub fn modified_second_zagreb() -> Self {
        Self::general_randic(-1.0)
    }

    pub fn sum_connectivity() -> Self {
        Self::general_sum_connectivity(-0.5)
    }

    pub fn first_zagreb() -> Self {
        Self::general_sum_connectivity(1.0)
    }

    pub fn geometric_arithmetic() -> Self {
        PhiSpec {
            family: Family::GeometricArithmetic,
            alpha: None,
        }
    }

    pub fn atom_bond_connectivity() -> Self {
        PhiSpec {
            family: Family::AtomBondConnectivity,
            alpha: None,
        }
    }

    pub fn harmonic() -> Self {
        PhiSpec {
            family: Family::Harmonic,
            alpha: None,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn alpha(&self) -> Option<f64> {
        self.alpha
    }

    /// `phi(i, j)` for degrees `i, j >= 1`.
    #[inline]
    pub fn eval(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i >= 1 && j >= 1);
        let prod = (i * j) as f64;
        let sum = (i + j) as f64;
        match self.family {
            Family::GeneralRandic => prod.powf(self.alpha.unwrap_or(1.0)),
            Family::GeneralSumConnectivity => sum.powf(self.alpha.unwrap_or(1.0)),
            Family::GeometricArithmetic => 2.0 * prod.sqrt() / sum,
            Family::AtomBondConnectivity => ((sum - 2.0) / prod).sqrt(),
            Family::Harmonic => 2.0 / sum,
        }
    }

    /// Integer exponent when every weight of this spec is an integer.
    pub fn integer_exponent(&self) -> Option<u32> {
        match self.family {
            Family::GeneralRandic | Family::GeneralSumConnectivity => {
                let a = self.alpha?;
                (a >= 0.0 && a.fract() == 0.0 && a <= u32::MAX as f64).then_some(a as u32)
            }
            _ => None,
        }
    }

    /// Every index reachable by a bare name.
    pub fn shipped() -> Vec<PhiSpec> {
        NAMED_INDICES
            .iter()
            .map(|s| s.parse().expect("named index"))
            .collect()
    }
}

fn alias(family: Family, alpha: f64) -> Option<&'static str> {
    match family {
        Family::GeneralRandic if alpha == -0.5 => Some("randic"),
        Family::GeneralRandic if alpha == 1.0 => Some("zagreb2"),
        Family::GeneralRandic if alpha == -1.0 => Some("mzagreb2"),
        Family::GeneralSumConnectivity if alpha == -0.5 => Some("sumconn"),
        Family::GeneralSumConnectivity if alpha == 1.0 => Some("zagreb1"),
        _ => None,
    }
}

impl fmt::Display for PhiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.family, self.alpha) {
            (Family::GeometricArithmetic, _) => f.write_str("ga"),
            (Family::AtomBondConnectivity, _) => f.write_str("abc"),
            (Family::Harmonic, _) => f.write_str("harmonic"),
            (fam, alpha) => {
                let alpha = alpha.unwrap_or(1.0);
                if let Some(name) = alias(fam, alpha) {
                    return f.write_str(name);
                }
                let base = if fam == Family::GeneralRandic {
                    "randic"
                } else {
                    "sumconn"
                };
                write!(f, "{base}:{alpha}")
            }
        }
    }
}

impl FromStr for PhiSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some((base, exp)) = s.split_once(':') {
            let alpha: f64 = exp
                .trim()
                .parse()
                .map_err(|_| Error::InvalidExponent(exp.to_string()))?;
            if !alpha.is_finite() {
                return Err(Error::InvalidExponent(exp.to_string()));
            }
            return match base {
                "randic" => Ok(Self::general_randic(alpha)),
                "sumconn" => Ok(Self::general_sum_connectivity(alpha)),
                _ => Err(Error::UnknownIndex(s.to_string())),
            };
        }
        match s {
            "harmonic" => Ok(Self::harmonic()),
            "ga" => Ok(Self::geometric_arithmetic()),
            "abc" => Ok(Self::atom_bond_connectivity()),
            "randic" => Ok(Self::randic()),
            "sumconn" => Ok(Self::sum_connectivity()),
            "zagreb1" => Ok(Self::first_zagreb()),
            "zagreb2" => Ok(Self::second_zagreb()),
            "mzagreb2" => Ok(Self::modified_second_zagreb()),
            _ => Err(Error::UnknownIndex(s.to_string())),
        }
    }
}

impl Serialize for PhiSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
