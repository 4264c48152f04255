//! Multiplicities of irreducible characters in `Ind_K^G(1)` for the ten
//! symmetric spaces, and of the basic characters `B_ν̲` by two routes.

mod basic;
mod theorem;
mod unipotent;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::orbit::{OrbitTable, OrbitTag, Twist};
use crate::partition::Partition;

pub use basic::{basic_character_multiplicity, crosscheck_routes, Route, RouteComparison};
pub use theorem::{multiplicity, so_multiplicity};
pub use unipotent::unipotent_multiplicity;

/// Largest `n` accepted by the basic-character routes.
pub const DEFAULT_BASIC_BOUND: usize = 8;

/// One partition per Frobenius orbit, finitely supported.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MultiPartition {
    assignments: BTreeMap<usize, Partition>,
    n: usize,
}

impl MultiPartition {
    /// Drops empty partitions; `n = Σ m_ξ |ρ_ξ|`.
    pub fn new(table: &OrbitTable, assignments: BTreeMap<usize, Partition>) -> Result<Self> {
        let mut n = 0;
        let mut kept = BTreeMap::new();
        for (id, p) in assignments {
            let orbit = table.orbit(id)?;
            if !p.is_empty() {
                n += orbit.m * p.size();
                kept.insert(id, p);
            }
        }
        Ok(MultiPartition { assignments: kept, n })
    }

    /// `ρ` placed on the orbit of 1.
    pub fn unipotent(table: &OrbitTable, rho: Partition) -> Result<Self> {
        let one = table
            .find(OrbitTag::One)
            .ok_or_else(|| Error::InvalidOrbits("table has no orbit of 1".into()))?;
        MultiPartition::new(table, BTreeMap::from([(one.id, rho)]))
    }

    pub fn assignments(&self) -> &BTreeMap<usize, Partition> {
        &self.assignments
    }

    pub fn get(&self, id: usize) -> Option<&Partition> {
        self.assignments.get(&id)
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymmetricSpaceKind {
    /// `GL_n / Sp_n`
    GlSp,
    /// `U_n / Sp_n`
    USp,
    /// `GL_n / (GL_{n⁺} × GL_{n⁻})`
    GlGlGl,
    /// `GL_n / GL_{n/2}(q²)`
    GlGlQ2,
    /// `U_n / (U_{n⁺} × U_{n⁻})`
    UUU,
    /// `U_n / U_{n/2}(q⁴)`
    UUQ4,
    /// `GL_n / O_n`, `n` odd
    GlO,
    /// `GL_n / O_n^ε`, `n` even
    GlOEps,
    /// `U_n / O_n`, `n` odd
    UO,
    /// `U_n / O_n^ε`, `n` even
    UOEps,
}

impl SymmetricSpaceKind {
    pub const ALL: [SymmetricSpaceKind; 10] = [
        SymmetricSpaceKind::GlSp,
        SymmetricSpaceKind::USp,
        SymmetricSpaceKind::GlGlGl,
        SymmetricSpaceKind::GlGlQ2,
        SymmetricSpaceKind::UUU,
        SymmetricSpaceKind::UUQ4,
        SymmetricSpaceKind::GlO,
        SymmetricSpaceKind::GlOEps,
        SymmetricSpaceKind::UO,
        SymmetricSpaceKind::UOEps,
    ];

    pub fn key(self) -> &'static str {
        use SymmetricSpaceKind::*;
        match self {
            GlSp => "gl-sp",
            USp => "u-sp",
            GlGlGl => "gl-glxgl",
            GlGlQ2 => "gl-glq2",
            UUU => "u-uxu",
            UUQ4 => "u-uq4",
            GlO => "gl-o",
            GlOEps => "gl-o-eps",
            UO => "u-o",
            UOEps => "u-o-eps",
        }
    }

    pub fn twist(self) -> Twist {
        use SymmetricSpaceKind::*;
        match self {
            GlSp | GlGlGl | GlGlQ2 | GlO | GlOEps => Twist::Split,
            USp | UUU | UUQ4 | UO | UOEps => Twist::Nonsplit,
        }
    }

    pub fn takes_signature(self) -> bool {
        matches!(self, SymmetricSpaceKind::GlGlGl | SymmetricSpaceKind::UUU)
    }

    pub fn takes_epsilon(self) -> bool {
        matches!(self, SymmetricSpaceKind::GlOEps | SymmetricSpaceKind::UOEps)
    }

    pub fn is_orthogonal(self) -> bool {
        use SymmetricSpaceKind::*;
        matches!(self, GlO | GlOEps | UO | UOEps)
    }

    /// `Some(p)` when `n` must have parity `p`.
    pub fn required_parity(self) -> Option<usize> {
        use SymmetricSpaceKind::*;
        match self {
            GlSp | USp | GlGlQ2 | UUQ4 | GlOEps | UOEps => Some(0),
            GlO | UO => Some(1),
            GlGlGl | UUU => None,
        }
    }
}

impl fmt::Display for SymmetricSpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

impl FromStr for SymmetricSpaceKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SymmetricSpaceKind::ALL
            .into_iter()
            .find(|k| k.key() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "symmetric space",
                name: s.to_string(),
            })
    }
}

/// A symmetric space at a fixed rank `n`, with its parameters checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CaseSpec", into = "CaseSpec")]
pub struct SymmetricSpaceCase {
    kind: SymmetricSpaceKind,
    n: usize,
    n_plus: usize,
    n_minus: usize,
    epsilon: i32,
}

impl SymmetricSpaceCase {
    /// `signature` is `(n⁺, n⁻)` for the two inner cases with a Levi
    /// subgroup; `epsilon` is the Witt-index sign for the `O^ε` cases.
    pub fn new(
        kind: SymmetricSpaceKind,
        n: usize,
        signature: Option<(usize, usize)>,
        epsilon: Option<i32>,
    ) -> Result<Self> {
        let bad = |why: String| Err(Error::Incompatible(format!("{kind} at n = {n}: {why}")));
        if let Some(p) = kind.required_parity() {
            if n % 2 != p {
                return bad(format!("n must be {}", if p == 0 { "even" } else { "odd" }));
            }
        }
        let (n_plus, n_minus) = match (kind.takes_signature(), signature) {
            (true, Some((a, b))) if a + b == n => (a, b),
            (true, Some((a, b))) => return bad(format!("n⁺ + n⁻ = {} ≠ n", a + b)),
            (true, None) => return bad("needs (n⁺, n⁻)".into()),
            (false, Some(_)) => return bad("takes no (n⁺, n⁻)".into()),
            (false, None) if matches!(kind, SymmetricSpaceKind::GlGlQ2 | SymmetricSpaceKind::UUQ4) => (n / 2, n / 2),
            (false, None) => (0, 0),
        };
        let epsilon = match (kind.takes_epsilon(), epsilon) {
            (true, Some(e)) if e == 1 || e == -1 => e,
            (true, Some(e)) => return bad(format!("ε = {e} must be ±1")),
            (true, None) => return bad("needs ε".into()),
            (false, Some(_)) => return bad("takes no ε".into()),
            (false, None) => 0,
        };
        Ok(SymmetricSpaceCase {
            kind,
            n,
            n_plus,
            n_minus,
            epsilon,
        })
    }

    /// Every valid case of rank `n`: all `(n⁺, n⁻)` and both `ε`.
    pub fn all_for_size(n: usize) -> Vec<SymmetricSpaceCase> {
        let mut out = Vec::new();
        for kind in SymmetricSpaceKind::ALL {
            if kind.required_parity().is_some_and(|p| n % 2 != p) {
                continue;
            }
            if kind.takes_signature() {
                for a in (0..=n).rev() {
                    out.extend(SymmetricSpaceCase::new(kind, n, Some((a, n - a)), None));
                }
            } else if kind.takes_epsilon() {
                for e in [1, -1] {
                    out.extend(SymmetricSpaceCase::new(kind, n, None, Some(e)));
                }
            } else {
                out.extend(SymmetricSpaceCase::new(kind, n, None, None));
            }
        }
        out
    }

    pub fn kind(&self) -> SymmetricSpaceKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn signature(&self) -> (usize, usize) {
        (self.n_plus, self.n_minus)
    }

    /// `n⁺ - n⁻`; zero for the cases without a signature.
    pub fn signature_difference(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    /// `ε`, or 0 when the case has none.
    pub fn epsilon(&self) -> i32 {
        self.epsilon
    }

    pub fn twist(&self) -> Twist {
        self.kind.twist()
    }

    pub(crate) fn check(&self, table: &OrbitTable, rho: &MultiPartition) -> Result<()> {
        if table.twist != self.twist() {
            return Err(Error::Incompatible(format!(
                "{} needs a {} orbit table, got {}",
                self.kind,
                self.twist(),
                table.twist
            )));
        }
        if rho.n() != self.n {
            return Err(Error::SizeMismatch {
                left: rho.n(),
                right: self.n,
            });
        }
        Ok(())
    }
}

impl fmt::Display for SymmetricSpaceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={}", self.kind, self.n)?;
        if self.kind.takes_signature() {
            write!(f, " ({},{})", self.n_plus, self.n_minus)?;
        }
        if self.kind.takes_epsilon() {
            write!(f, " ε={}", if self.epsilon > 0 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

/// Wire form of [`SymmetricSpaceCase`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CaseSpec {
    pub case: String,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_plus: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n_minus: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<i32>,
}

impl TryFrom<CaseSpec> for SymmetricSpaceCase {
    type Error = Error;
    fn try_from(s: CaseSpec) -> Result<Self> {
        let kind: SymmetricSpaceKind = s.case.parse()?;
        let signature = match (s.n_plus, s.n_minus) {
            (None, None) => None,
            (Some(a), Some(b)) => Some((a, b)),
            (Some(a), None) if a <= s.n => Some((a, s.n - a)),
            (None, Some(b)) if b <= s.n => Some((s.n - b, b)),
            _ => return Err(Error::Incompatible("n⁺ or n⁻ exceeds n".into())),
        };
        SymmetricSpaceCase::new(kind, s.n, signature, s.epsilon)
    }
}

impl From<SymmetricSpaceCase> for CaseSpec {
    fn from(c: SymmetricSpaceCase) -> Self {
        CaseSpec {
            case: c.kind.key().to_string(),
            n: c.n,
            n_plus: c.kind.takes_signature().then_some(c.n_plus),
            n_minus: c.kind.takes_signature().then_some(c.n_minus),
            epsilon: c.kind.takes_epsilon().then_some(c.epsilon),
        }
    }
}

pub(crate) fn sign(negative: bool) -> i64 {
    if negative {
        -1
    } else {
        1
    }
}
