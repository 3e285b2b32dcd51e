use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignatureError {
    #[error("a spherical signature needs at least 3 branch points, got {0}")]
    TooFewBranchPoints(usize),
    #[error("multiplicity {0} is below 2")]
    BadMultiplicity(u32),
    #[error("cannot parse signature '{0}'")]
    Syntax(String),
}

/// Branching orders `[m_1, ..., m_r]` over a rational base. The order given
/// by the user is kept for reporting; equality ignores it.
#[derive(Debug, Clone)]
pub struct Signature {
    given: Vec<u32>,
}

impl Signature {
    pub fn new(multiplicities: Vec<u32>) -> Result<Self, SignatureError> {
        if let Some(&m) = multiplicities.iter().find(|&&m| m < 2) {
            return Err(SignatureError::BadMultiplicity(m));
        }
        if multiplicities.len() < 3 {
            return Err(SignatureError::TooFewBranchPoints(multiplicities.len()));
        }
        Ok(Signature { given: multiplicities })
    }

    /// Multiplicities in the order they were given.
    pub fn given(&self) -> &[u32] {
        &self.given
    }

    pub fn sorted(&self) -> Vec<u32> {
        let mut v = self.given.clone();
        v.sort_unstable();
        v
    }

    /// Number of branch points.
    pub fn len(&self) -> usize {
        self.given.len()
    }

    pub fn is_empty(&self) -> bool {
        self.given.is_empty()
    }

    pub fn lcm(&self) -> u64 {
        self.given.iter().fold(1u64, |acc, &m| num_integer::lcm(acc, m as u64))
    }

    /// `-2 + Σ (1 - 1/m_i)`
    pub fn orbifold_excess(&self) -> Ratio<i64> {
        self.given.iter().fold(Ratio::from_integer(-2), |acc, &m| acc + Ratio::new(m as i64 - 1, m as i64))
    }

    /// Dimension contribution `r - 3` of this side to the moduli space.
    pub fn moduli_contribution(&self) -> usize {
        self.given.len() - 3
    }
}

impl PartialEq for Signature {
    fn eq(&self, other: &Self) -> bool {
        self.sorted() == other.sorted()
    }
}

impl Eq for Signature {}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.given.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl Serialize for Signature {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.given.serialize(s)
    }
}

/// Parses `[2,5,5]`; `[2^5]` abbreviates five 2's.
impl FromStr for Signature {
    type Err = SignatureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = compact
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| SignatureError::Syntax(s.to_string()))?;
        let mut out = Vec::new();
        for part in inner.split(',').filter(|p| !p.is_empty()) {
            let (m, k) = match part.split_once('^') {
                Some((m, k)) => (m, k.parse::<usize>().map_err(|_| SignatureError::Syntax(s.to_string()))?),
                None => (part, 1),
            };
            let m: u32 = m.parse().map_err(|_| SignatureError::Syntax(s.to_string()))?;
            out.extend(std::iter::repeat_n(m, k));
        }
        Signature::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_compare() {
        let a: Signature = "[5,2,5]".parse().unwrap();
        let b: Signature = "[2, 5, 5]".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "[5,2,5]");
        let c: Signature = "[2^5]".parse().unwrap();
        assert_eq!(c.given(), &[2, 2, 2, 2, 2]);
        assert_eq!("[3,3]".parse::<Signature>().unwrap_err(), SignatureError::TooFewBranchPoints(2));
        assert_eq!("[1,3,3]".parse::<Signature>().unwrap_err(), SignatureError::BadMultiplicity(1));
        assert!("2,5,5".parse::<Signature>().is_err());
    }

    #[test]
    fn excess_and_lcm() {
        let s: Signature = "[2,5,5]".parse().unwrap();
        assert_eq!(s.orbifold_excess(), Ratio::new(1, 10));
        assert_eq!(s.lcm(), 10);
        let t: Signature = "[3,3,3,3]".parse().unwrap();
        assert_eq!(t.orbifold_excess(), Ratio::new(2, 3));
        assert_eq!(t.moduli_contribution(), 1);
    }
}
