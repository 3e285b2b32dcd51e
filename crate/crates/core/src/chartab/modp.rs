//! Arithmetic and linear algebra over a prime field `F_p`, `p < 2^31`.

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Smallest prime `p ≡ 1 (mod e)` with `p > lower`.
pub fn dixon_prime(e: u64, lower: u64) -> u64 {
    let mut p = (lower / e) * e + 1;
    if p <= lower {
        p += e;
    }
    while !is_prime(p) {
        p += e;
    }
    p
}

/// Smallest generator of `F_p^*`.
pub fn primitive_root(p: u64) -> u64 {
    let factors = crate::permgroup::prime_factors(p - 1);
    (2..p).find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).unwrap_or(1)
}

/// Basis of `{x : A x = 0}` for a `rows × cols` matrix.
pub fn nullspace(a: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut m: Vec<Vec<u64>> = a.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        let Some(pr) = (row..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(row, pr);
        let inv = inv_mod(m[row][c], p);
        for x in m[row].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..m.len() {
            if r != row && m[r][c] != 0 {
                let f = m[r][c];
                for k in 0..cols {
                    m[r][k] = (m[r][k] + p * p - f * m[row][k] % p) % p;
                }
            }
        }
        pivot_cols.push(c);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - m[r][f]) % p;
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_roots() {
        assert_eq!(dixon_prime(30, 120), 151);
        assert_eq!(dixon_prime(60, 240), 241);
        assert_eq!(dixon_prime(3, 6), 7);
        assert_eq!(primitive_root(7), 3);
        assert_eq!(pow_mod(primitive_root(151), 150 / 2, 151), 150);
    }

    #[test]
    fn nullspace_of_rank_one() {
        let p = 7;
        let ns = nullspace(&[vec![1, 2, 3]], 3, p);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert_eq!((v[0] + 2 * v[1] + 3 * v[2]) % p, 0);
        }
        assert!(nullspace(&[vec![1, 0], vec![0, 1]], 2, p).is_empty());
    }
}
