use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use super::genvec::{is_free_unmixed, GenVector, UnmixedPair};
use super::signature::Signature;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("2g-2 = {0} is not an even integer")]
    NonIntegralGenus(String),
    #[error("genus {0} is below 2")]
    GenusTooSmall(i64),
    #[error("diagonal action is not free")]
    NotFree,
    #[error("not a valid unmixed family: (g1-1)(g2-1) = {numerator} is not divisible by |G| = {order}")]
    NonIntegralChi { numerator: u64, order: u64 },
}

/// Riemann–Hurwitz over a rational base:
/// `2g - 2 = |G| (-2 + Σ (1 - 1/m_i))`.
pub fn genus_from_signature(order: u64, sig: &Signature) -> Result<u64, InvariantError> {
    let two_g_minus_two = sig.orbifold_excess() * Ratio::from_integer(order as i64);
    if !two_g_minus_two.is_integer() || two_g_minus_two.to_integer() % 2 != 0 {
        return Err(InvariantError::NonIntegralGenus(two_g_minus_two.to_string()));
    }
    let g = two_g_minus_two.to_integer() / 2 + 1;
    if g < 2 {
        return Err(InvariantError::GenusTooSmall(g));
    }
    Ok(g as u64)
}

/// Genus from the Euler characteristic of the `|G|`-sheeted cover: the
/// branch point of `v_i` has as many preimages as `v_i` has cycles in the
/// right regular action.
pub fn sheet_count_genus(gv: &GenVector) -> i64 {
    let group = gv.group();
    let n = group.order() as i64;
    let mut euler = 2 * n;
    for &v in gv.elements() {
        let cycles = group.right_regular(v).cycle_count() as i64;
        euler -= n - cycles;
    }
    (2 - euler) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurfaceInvariants {
    pub g1: u64,
    pub g2: u64,
    pub chi: u64,
    pub k_squared: u64,
    pub c2: u64,
    pub q: u64,
    pub pg: u64,
    pub moduli_dimension: usize,
}

/// Numerical invariants of `S = (C1 × C2)/G` for a free pair.
pub fn surface_invariants(pair: &UnmixedPair) -> Result<SurfaceInvariants, InvariantError> {
    if !is_free_unmixed(pair).free {
        return Err(InvariantError::NotFree);
    }
    let order = pair.group().order() as u64;
    let g1 = genus_from_signature(order, pair.gv1.signature())?;
    let g2 = genus_from_signature(order, pair.gv2.signature())?;
    let numerator = (g1 - 1) * (g2 - 1);
    if numerator % order != 0 {
        return Err(InvariantError::NonIntegralChi { numerator, order });
    }
    let chi = numerator / order;
    let q = 0;
    Ok(SurfaceInvariants {
        g1,
        g2,
        chi,
        k_squared: 8 * chi,
        c2: 4 * chi,
        q,
        pg: chi + q - 1,
        moduli_dimension: pair.gv1.signature().moduli_contribution() + pair.gv2.signature().moduli_contribution(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    #[test]
    fn riemann_hurwitz_values() {
        assert_eq!(genus_from_signature(60, &sig("[2,5,5]")).unwrap(), 4);
        assert_eq!(genus_from_signature(60, &sig("[3,3,3,3]")).unwrap(), 21);
        assert_eq!(genus_from_signature(25, &sig("[5,5,5]")).unwrap(), 6);
    }

    #[test]
    fn rejects_small_or_fractional() {
        assert!(matches!(genus_from_signature(60, &sig("[2,2,2]")), Err(InvariantError::GenusTooSmall(_))));
        assert!(matches!(genus_from_signature(7, &sig("[2,5,5]")), Err(InvariantError::NonIntegralGenus(_))));
        // genus 1: [3,3,3] over Z3
        assert_eq!(genus_from_signature(3, &sig("[3,3,3]")).unwrap_err(), InvariantError::GenusTooSmall(1));
    }
}
