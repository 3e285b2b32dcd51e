use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::smith::to_u64;
use crate::permgroup::prime_factors;

/// A finitely generated abelian group `Z^free_rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k`
/// with `d_1 | d_2 | ... | d_k` and every `d_i ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse abelian group '{text}': {reason}")]
pub struct AbelianParseError {
    pub text: String,
    pub reason: String,
}

impl AbelianInvariants {
    pub fn trivial() -> Self {
        AbelianInvariants { free_rank: 0, torsion: Vec::new() }
    }

    /// From the nonzero Smith diagonal of a relation matrix on `generators`
    /// columns.
    pub fn from_diagonal(generators: usize, diagonal: &[BigInt]) -> Self {
        let torsion = diagonal.iter().filter(|d| !d.is_one()).map(to_u64).collect();
        AbelianInvariants { free_rank: generators - diagonal.len(), torsion }
    }

    /// Normalizes a product of finite cyclic groups `Z_{n_1} × ... ` to
    /// invariant factors via the primary decomposition.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let mut primary: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for &n in orders {
            let mut rest = n;
            for p in prime_factors(n) {
                let mut q = 1;
                while rest % p == 0 {
                    rest /= p;
                    q *= p;
                }
                primary.entry(p).or_default().push(q);
            }
        }
        let len = primary.values().map(Vec::len).max().unwrap_or(0);
        let mut torsion = vec![1u64; len];
        for powers in primary.values_mut() {
            powers.sort_unstable();
            // the largest powers go to the largest factors
            for (k, &q) in powers.iter().rev().enumerate() {
                torsion[len - 1 - k] *= q;
            }
        }
        torsion.retain(|&d| d > 1);
        AbelianInvariants { free_rank: 0, torsion }
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> u128 {
        self.torsion.iter().map(|&d| d as u128).product()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn satisfies_divisibility_chain(&self) -> bool {
        self.torsion.iter().all(|&d| d >= 2) && self.torsion.windows(2).all(|w| w[1] % w[0] == 0)
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.free_rank == 1 {
            parts.push("Z".into());
        } else if self.free_rank > 1 {
            parts.push(format!("Z^{}", self.free_rank));
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let mut j = i;
            while j < self.torsion.len() && self.torsion[j] == self.torsion[i] {
                j += 1;
            }
            if j - i == 1 {
                parts.push(format!("Z{}", self.torsion[i]));
            } else {
                parts.push(format!("(Z{})^{}", self.torsion[i], j - i));
            }
            i = j;
        }
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" x "))
        }
    }
}

/// Parses product forms such as `(Z3)^2 x Z15`, `Z2^3 x Z6` or `0`.
impl FromStr for AbelianInvariants {
    type Err = AbelianParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| AbelianParseError { text: s.to_string(), reason: reason.to_string() };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "0" || compact == "1" {
            return Ok(AbelianInvariants::trivial());
        }
        let mut free_rank = 0;
        let mut orders = Vec::new();
        for factor in compact.split(['x', '×', '*']) {
            let (base, exp) = match factor.rsplit_once('^') {
                Some((b, e)) => (b, e.parse::<usize>().map_err(|_| err("bad exponent"))?),
                None => (factor, 1),
            };
            let base = base.strip_prefix('(').and_then(|b| b.strip_suffix(')')).unwrap_or(base);
            let body = base.strip_prefix('Z').ok_or_else(|| err("factor must start with Z"))?;
            let body = body.strip_prefix('_').unwrap_or(body);
            if body.is_empty() {
                free_rank += exp;
                continue;
            }
            let n: u64 = body.parse().map_err(|_| err("bad cyclic order"))?;
            if n < 1 {
                return Err(err("cyclic order must be positive"));
            }
            orders.extend(std::iter::repeat_n(n, exp));
        }
        let mut inv = AbelianInvariants::from_cyclic_orders(&orders);
        inv.free_rank = free_rank;
        Ok(inv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_printed_forms() {
        let cases: &[(&str, &[u64])] = &[
            ("(Z3)^2 x (Z15)", &[3, 3, 15]),
            ("(Z10)^2", &[10, 10]),
            ("(Z2)^3 x Z6", &[2, 2, 2, 6]),
            ("(Z2)^4 x Z4", &[2, 2, 2, 2, 4]),
            ("(Z2)^2 x Z4 x Z8", &[2, 2, 4, 8]),
            ("(Z5)^3", &[5, 5, 5]),
            ("(Z2)^4 x Z8", &[2, 2, 2, 2, 8]),
            ("(Z2)^3 x (Z4)^2", &[2, 2, 2, 4, 4]),
            ("(Z4)^4", &[4, 4, 4, 4]),
            ("(Z3)^5", &[3, 3, 3, 3, 3]),
            ("Z2 x Z3", &[6]),
            ("Z6 x Z4", &[2, 12]),
        ];
        for (text, expected) in cases {
            let inv: AbelianInvariants = text.parse().unwrap();
            assert_eq!(inv.torsion, *expected, "{text}");
            assert!(inv.satisfies_divisibility_chain());
        }
    }

    #[test]
    fn display_and_order() {
        let inv = AbelianInvariants { free_rank: 0, torsion: vec![3, 3, 15] };
        assert_eq!(inv.to_string(), "(Z3)^2 x Z15");
        assert_eq!(inv.torsion_order(), 135);
        assert_eq!(inv.to_string().parse::<AbelianInvariants>().unwrap(), inv);
        assert_eq!(AbelianInvariants::trivial().to_string(), "0");
        let free: AbelianInvariants = "Z^2 x Z4".parse().unwrap();
        assert_eq!(free.free_rank, 2);
    }
}
