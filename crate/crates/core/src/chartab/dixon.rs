//! Dixon's modular method: simultaneous eigenvectors of the class
//! multiplication matrices over `F_p`, then exact lifting of every value
//! from its eigenvalue multiplicities.

use super::cyclotomic::{Cyclotomic, CyclotomicField};
use super::modp::{dixon_prime, inv_mod, nullspace, pow_mod, primitive_root};
use super::ChartabError;
use crate::permgroup::{ConjClassSet, Group};

pub(crate) struct ModularCharacters {
    pub prime: u64,
    /// Image of `ζ_e` in `F_p`.
    pub zeta: u64,
    /// `[character][class]`, values in `F_p`.
    pub values: Vec<Vec<u64>>,
    pub degrees: Vec<u64>,
}

/// `c[j][k][l] = #{x ∈ C_j : x⁻¹ z_l ∈ C_k}` for a fixed `z_l ∈ C_l`.
fn class_constants(group: &Group, classes: &ConjClassSet) -> Vec<Vec<Vec<u64>>> {
    let r = classes.len();
    let mut c = vec![vec![vec![0u64; r]; r]; r];
    for j in 0..r {
        for l in 0..r {
            let z = classes.rep(l);
            for &x in classes.class(j) {
                let k = classes.class_of(group.mul(group.inv(x), z));
                c[j][k][l] += 1;
            }
        }
    }
    c
}

fn split(space: &[Vec<u64>], m: &[Vec<u64>], p: u64) -> Option<Vec<Vec<Vec<u64>>>> {
    let r = m.len();
    let d = space.len();
    let images: Vec<Vec<u64>> = space.iter().map(|b| (0..r).map(|k| (0..r).map(|l| m[k][l] * b[l] % p).sum::<u64>() % p).collect()).collect();
    let mut parts = Vec::new();
    let mut found = 0;
    for lambda in 0..p {
        let a: Vec<Vec<u64>> = (0..r).map(|row| (0..d).map(|i| (images[i][row] + p - lambda * space[i][row] % p) % p).collect()).collect();
        let ns = nullspace(&a, d, p);
        if ns.is_empty() {
            continue;
        }
        found += ns.len();
        let vectors = ns.iter().map(|c| (0..r).map(|row| (0..d).map(|i| c[i] * space[i][row] % p).sum::<u64>() % p).collect()).collect();
        parts.push(vectors);
        if found == d {
            return Some(parts);
        }
    }
    None
}

pub(crate) fn modular_characters(group: &Group, classes: &ConjClassSet) -> Result<ModularCharacters, ChartabError> {
    let n = group.order() as u64;
    let e = group.exponent() as u64;
    let p = dixon_prime(e, 2 * n);
    let zeta = pow_mod(primitive_root(p), (p - 1) / e, p);
    let r = classes.len();
    let c = class_constants(group, classes);

    let identity_basis: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|j| u64::from(i == j)).collect()).collect();
    let mut spaces = vec![identity_basis];
    for cj in c.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for s in spaces {
            if s.len() == 1 {
                next.push(s);
                continue;
            }
            next.extend(split(&s, cj, p).ok_or_else(|| ChartabError::SplitFailure(format!("class multiplication matrix does not split over F_{p}")))?);
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(ChartabError::SplitFailure(format!("found {} common eigenspaces, expected {r}", spaces.len())));
    }

    let sizes = classes.sizes();
    let mut values = Vec::with_capacity(r);
    let mut degrees = Vec::with_capacity(r);
    for s in spaces {
        let v = &s[0];
        if v[0] == 0 {
            return Err(ChartabError::SplitFailure("eigenvector vanishes on the identity class".into()));
        }
        let norm = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|x| x * norm % p).collect();
        let s_sum = (0..r).map(|j| omega[j] * omega[classes.inverse_class(j)] % p * inv_mod(sizes[j] as u64 % p, p) % p).sum::<u64>() % p;
        if s_sum == 0 {
            return Err(ChartabError::SplitFailure("degenerate norm".into()));
        }
        let target = n % p * inv_mod(s_sum, p) % p;
        let d = (1..=n).take_while(|d| d * d <= n).find(|&d| d * d % p == target && n.is_multiple_of(d)).ok_or_else(|| ChartabError::LiftingFailure("no admissible degree".into()))?;
        values.push((0..r).map(|j| omega[j] * d % p * inv_mod(sizes[j] as u64 % p, p) % p).collect());
        degrees.push(d);
    }
    Ok(ModularCharacters { prime: p, zeta, values, degrees })
}

/// Exact value of a character from its reductions on the powers of each
/// class: eigenvalue multiplicities `m_k = (1/o) Σ_l χ(g^l) ζ_o^{-kl}`.
pub(crate) fn lift_character(
    field: &CyclotomicField,
    modular: &ModularCharacters,
    index: usize,
    classes: &ConjClassSet,
    power_classes: &[Vec<usize>],
) -> Result<Vec<Cyclotomic>, ChartabError> {
    let p = modular.prime;
    let e = field.order();
    let d = modular.degrees[index];
    let chi = &modular.values[index];
    (0..classes.len())
        .map(|class| {
            let o = classes.element_order(class);
            let step = e / o;
            let z_o = pow_mod(modular.zeta, step as u64, p);
            let z_inv = inv_mod(z_o, p);
            let o_inv = inv_mod(o as u64 % p, p);
            let mut terms = Vec::with_capacity(o);
            let mut total = 0;
            for k in 0..o {
                let mut acc = 0;
                for (l, powers) in power_classes.iter().enumerate().take(o) {
                    acc = (acc + chi[powers[class]] * pow_mod(z_inv, (k * l) as u64, p)) % p;
                }
                let m = acc * o_inv % p;
                if m > d {
                    return Err(ChartabError::LiftingFailure(format!("multiplicity {m} exceeds degree {d} on class {class}")));
                }
                total += m;
                terms.push((step * k, m));
            }
            if total != d {
                return Err(ChartabError::LiftingFailure(format!("multiplicities sum to {total}, not {d}, on class {class}")));
            }
            Ok(field.from_exponent_multiplicities(&terms))
        })
        .collect()
}
