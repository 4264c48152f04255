//! Weights on involutions: products of `(-1)^{statistic}` and `(±2)^{ℓ¹}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use super::InvolutionStats;
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    L1,
    L2,
    L3,
    L1Even,
    L1Odd,
    L2ZeroMod4,
    L2TwoMod4,
    L3Even,
    L3Odd,
    /// `ℓ³₁ / 2`; always an integer since odd paired cycles come in pairs.
    HalfL3Odd,
}

impl Statistic {
    pub const ALL: [Statistic; 10] = [
        Statistic::L1,
        Statistic::L2,
        Statistic::L3,
        Statistic::L1Even,
        Statistic::L1Odd,
        Statistic::L2ZeroMod4,
        Statistic::L2TwoMod4,
        Statistic::L3Even,
        Statistic::L3Odd,
        Statistic::HalfL3Odd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::L1 => "l1",
            Statistic::L2 => "l2",
            Statistic::L3 => "l3",
            Statistic::L1Even => "l1_0",
            Statistic::L1Odd => "l1_1",
            Statistic::L2ZeroMod4 => "l2_0mod4",
            Statistic::L2TwoMod4 => "l2_2mod4",
            Statistic::L3Even => "l3_0",
            Statistic::L3Odd => "l3_1",
            Statistic::HalfL3Odd => "l3_1/2",
        }
    }

    pub fn of(self, s: &InvolutionStats) -> usize {
        match self {
            Statistic::L1 => s.l1,
            Statistic::L2 => s.l2,
            Statistic::L3 => s.l3,
            Statistic::L1Even => s.l1_even,
            Statistic::L1Odd => s.l1_odd,
            Statistic::L2ZeroMod4 => s.l2_zero_mod_4,
            Statistic::L2TwoMod4 => s.l2_two_mod_4,
            Statistic::L3Even => s.l3_even,
            Statistic::L3Odd => s.l3_odd,
            Statistic::HalfL3Odd => s.l3_odd / 2,
        }
    }
}

impl FromStr for Statistic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::MalformedWeight(s.to_string()))
    }
}

/// `(-1)^{Σ signs} · base^{ℓ¹}` with `base ∈ {1, 2, -2}`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Weight {
    pub signs: Vec<Statistic>,
    pub base: i64,
}

impl Weight {
    pub fn one() -> Self {
        Weight { signs: Vec::new(), base: 1 }
    }

    pub fn sign(stats: &[Statistic]) -> Self {
        Weight { signs: stats.to_vec(), base: 1 }
    }

    pub fn with_base(mut self, base: i64) -> Self {
        self.base = base;
        self
    }

    pub fn eval(&self, s: &InvolutionStats) -> BigInt {
        let exponent: usize = self.signs.iter().map(|st| st.of(s)).sum();
        let magnitude = BigInt::from(self.base.abs()).pow(s.l1 as u32);
        let negative = (exponent + if self.base < 0 { s.l1 } else { 0 }) % 2 == 1;
        if negative {
            -magnitude
        } else {
            magnitude
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        match self.signs.as_slice() {
            [] => {}
            [one] => factors.push(format!("(-1)^{}", one.name())),
            many => {
                let names: Vec<_> = many.iter().map(|s| s.name()).collect();
                factors.push(format!("(-1)^({})", names.join("+")));
            }
        }
        match self.base {
            1 => {}
            2 => factors.push("2^l1".into()),
            _ => factors.push("(-2)^l1".into()),
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// Grammar: factors joined by `*`; a factor is `1`, `2^l1`, `(-2)^l1`,
/// `(-1)^stat` or `(-1)^(stat+stat+...)`.
impl FromStr for Weight {
    type Err = Error;
    fn from_str(input: &str) -> Result<Self, Error> {
        let bad = || Error::MalformedWeight(input.to_string());
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        let mut w = Weight::one();
        for factor in compact.split('*') {
            match factor {
                "1" => {}
                "2^l1" if w.base == 1 => w.base = 2,
                "(-2)^l1" if w.base == 1 => w.base = -2,
                _ => {
                    let exp = factor.strip_prefix("(-1)^").ok_or_else(bad)?;
                    let exp = match exp.strip_prefix('(') {
                        Some(inner) => inner.strip_suffix(')').ok_or_else(bad)?,
                        None => exp,
                    };
                    for name in exp.split('+') {
                        w.signs.push(name.parse().map_err(|_| bad())?);
                    }
                }
            }
        }
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let w: Weight = "(-1)^(l1_0+l2_2mod4+l3_1/2)*2^l1".parse().unwrap();
        assert_eq!(w.base, 2);
        assert_eq!(w.signs.len(), 3);
        assert_eq!(w.to_string().parse::<Weight>().unwrap(), w);
        assert_eq!("1".parse::<Weight>().unwrap(), Weight::one());
        for bad in ["", "(-1)^", "(-1)^(l1", "3^l1", "2^l1*2^l1", "(-1)^l9"] {
            assert!(bad.parse::<Weight>().is_err(), "{bad}");
        }
    }
}
