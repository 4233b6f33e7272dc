use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient field for homology and Betti computations.
///
/// Serialises as its display form, `"QQ"` or `"GF(p)"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

/// Primes are kept below 2^31 so that products of residues fit in a `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::PrimeField(2);

    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) && p <= MAX_PRIME {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::NotPrime { value: p })
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => f.write_str("QQ"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// Accepts `QQ`, `Q`, `q`, `GF(p)`, `p:<p>` and a bare prime.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "QQ" | "Q" | "q") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| s.strip_prefix("p:"))
            .unwrap_or(s);
        let p = digits.parse().map_err(|_| Error::precondition(format!("unknown field {s:?}")))?;
        FieldSpec::prime(p)
    }
}

impl From<FieldSpec> for String {
    fn from(f: FieldSpec) -> String {
        f.to_string()
    }
}

impl TryFrom<String> for FieldSpec {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_check() {
        assert_eq!(FieldSpec::prime(2), Ok(FieldSpec::GF2));
        assert!(FieldSpec::prime(32003).is_ok());
        assert_eq!(FieldSpec::prime(1), Err(Error::NotPrime { value: 1 }));
        assert!(FieldSpec::prime(32001).is_err());
        assert!(FieldSpec::prime((1 << 31) + 11).is_err());
    }

    #[test]
    fn parses_its_display_form() {
        for f in [FieldSpec::Rationals, FieldSpec::GF2, FieldSpec::PrimeField(32003)] {
            assert_eq!(f.to_string().parse::<FieldSpec>(), Ok(f));
            assert_eq!(serde_json::from_str::<FieldSpec>(&serde_json::to_string(&f).unwrap()).unwrap(), f);
        }
        assert_eq!("p:3".parse::<FieldSpec>(), Ok(FieldSpec::PrimeField(3)));
        assert!("GF(4)".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
    }
}
