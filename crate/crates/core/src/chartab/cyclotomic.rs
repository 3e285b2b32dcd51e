//! Exact arithmetic in `Q(ζ_e)`, coordinates in the power basis
//! `1, ζ, ..., ζ^{φ(e)-1}` (reduction modulo the cyclotomic polynomial).

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A cyclotomic number of a fixed [`CyclotomicField`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_algebraic_integer_form(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
}

impl PartialOrd for Cyclotomic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on coordinates; only used to make orderings deterministic.
impl Ord for Cyclotomic {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

/// `Q(ζ_e)` with its cyclotomic polynomial.
#[derive(Debug, Clone)]
pub struct CyclotomicField {
    order: usize,
    /// Monic `Φ_e`, low degree first.
    modulus: Vec<BigInt>,
}

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let mut q = vec![BigInt::zero(); num.len() - dn];
    for k in (0..q.len()).rev() {
        let c = rem[k + dn].clone();
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
        q[k] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact polynomial division");
    q
}

/// Coefficients of the `n`-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_polynomial(n: usize) -> Vec<BigInt> {
    fn go(n: usize, memo: &mut BTreeMap<usize, Vec<BigInt>>) -> Vec<BigInt> {
        if let Some(p) = memo.get(&n) {
            return p.clone();
        }
        let mut num = vec![BigInt::zero(); n + 1];
        num[0] = -BigInt::one();
        num[n] = BigInt::one();
        for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
            let phi_d = go(d, memo);
            num = poly_div_exact(&num, &phi_d);
        }
        memo.insert(n, num.clone());
        num
    }
    go(n, &mut BTreeMap::new())
}

impl CyclotomicField {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1);
        CyclotomicField { order, modulus: cyclotomic_polynomial(order) }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `φ(e)`
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    /// Reduces `Σ c_k ζ^k` (any exponents) to the power basis.
    fn reduce(&self, mut exps: Vec<BigRational>) -> Cyclotomic {
        let e = self.order;
        if exps.len() > e {
            for k in e..exps.len() {
                let c = std::mem::take(&mut exps[k]);
                exps[k % e] += c;
            }
            exps.truncate(e);
        }
        let deg = self.degree();
        for k in (deg..exps.len()).rev() {
            let c = std::mem::take(&mut exps[k]);
            if c.is_zero() {
                continue;
            }
            for (i, m) in self.modulus.iter().enumerate().take(deg) {
                exps[k - deg + i] -= &c * BigRational::from_integer(m.clone());
            }
        }
        exps.resize(deg, BigRational::zero());
        Cyclotomic { coeffs: exps }
    }

    pub fn zero(&self) -> Cyclotomic {
        Cyclotomic { coeffs: vec![BigRational::zero(); self.degree()] }
    }

    pub fn rational(&self, r: BigRational) -> Cyclotomic {
        let mut z = self.zero();
        z.coeffs[0] = r;
        z
    }

    pub fn integer(&self, n: i64) -> Cyclotomic {
        self.rational(BigRational::from_integer(n.into()))
    }

    pub fn one(&self) -> Cyclotomic {
        self.integer(1)
    }

    /// `ζ^k`
    pub fn zeta_power(&self, k: i64) -> Cyclotomic {
        let e = self.order as i64;
        let mut v = vec![BigRational::zero(); self.order];
        v[k.rem_euclid(e) as usize] = BigRational::one();
        self.reduce(v)
    }

    /// `Σ m_k ζ^{exps_k}` with integer multiplicities.
    pub fn from_exponent_multiplicities(&self, terms: &[(usize, u64)]) -> Cyclotomic {
        let mut v = vec![BigRational::zero(); self.order];
        for &(k, m) in terms {
            v[k % self.order] += BigRational::from_integer(m.into());
        }
        self.reduce(v)
    }

    pub fn add(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        Cyclotomic { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect() }
    }

    pub fn sub(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        Cyclotomic { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect() }
    }

    pub fn scale(&self, a: &Cyclotomic, r: &BigRational) -> Cyclotomic {
        Cyclotomic { coeffs: a.coeffs.iter().map(|x| x * r).collect() }
    }

    pub fn mul(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        let deg = self.degree();
        let mut prod = vec![BigRational::zero(); (2 * deg).saturating_sub(1).max(1)];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(prod)
    }

    /// Galois automorphism `ζ ↦ ζ^j`.
    pub fn galois(&self, a: &Cyclotomic, j: i64) -> Cyclotomic {
        let e = self.order as i64;
        let mut v = vec![BigRational::zero(); self.order];
        for (k, c) in a.coeffs.iter().enumerate() {
            if !c.is_zero() {
                v[(k as i64 * j).rem_euclid(e) as usize] += c;
            }
        }
        self.reduce(v)
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self, a: &Cyclotomic) -> Cyclotomic {
        self.galois(a, -1)
    }

    pub fn as_rational(&self, a: &Cyclotomic) -> Option<BigRational> {
        if a.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(a.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn to_complex(&self, a: &Cyclotomic) -> (f64, f64) {
        let e = self.order as f64;
        a.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, c)| {
            let c = c.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * k as f64 / e;
            (re + c * t.cos(), im + c * t.sin())
        })
    }

    /// Renders as an integer combination of powers of `z = ζ_e`.
    pub fn format(&self, a: &Cyclotomic) -> String {
        let mut out = String::new();
        for (k, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mon = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if mon.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mon);
            } else {
                out.push_str(&format!("{abs}*{mon}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(5), ints(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(30).len() - 1, 8);
        assert_eq!(cyclotomic_polynomial(60).len() - 1, 16);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        let f = CyclotomicField::new(5);
        let mut s = f.zero();
        for k in 0..5 {
            s = f.add(&s, &f.zeta_power(k));
        }
        assert!(s.is_zero());
        let z = f.zeta_power(2);
        assert_eq!(f.mul(&z, &f.conj(&z)), f.one());
    }

    #[test]
    fn golden_ratio_values() {
        // ζ5 + ζ5^4 = (-1 + √5)/2 satisfies x² + x - 1 = 0
        let f = CyclotomicField::new(30);
        let x = f.add(&f.zeta_power(6), &f.zeta_power(24));
        let lhs = f.add(&f.mul(&x, &x), &x);
        assert_eq!(f.as_rational(&lhs), Some(BigRational::from_integer(1.into())));
        let (re, im) = f.to_complex(&x);
        assert!((re - 0.618_033_988_749_895).abs() < 1e-12 && im.abs() < 1e-12);
    }

    #[test]
    fn formatting() {
        let f = CyclotomicField::new(3);
        assert_eq!(f.format(&f.zeta_power(2)), "-1 - z");
        assert_eq!(f.format(&f.zero()), "0");
        let f1 = CyclotomicField::new(1);
        assert_eq!(f1.format(&f1.integer(-4)), "-4");
    }
}
