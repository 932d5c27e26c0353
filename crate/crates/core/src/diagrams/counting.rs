//! Exact combinatorial counts.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for t in 0..k {
        acc = acc * BigUint::from(n - t) / BigUint::from(t + 1);
    }
    acc
}

/// Number of surjections from a `q`-set onto an `l`-set, by inclusion–exclusion.
pub fn surjection_count(q: usize, l: usize) -> BigUint {
    let mut total = BigInt::zero();
    for k in 0..=l {
        let term = BigInt::from(binomial(l, k)) * BigInt::from(l - k).pow(q as u32);
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
        .to_biguint()
        .expect("surjection count is non-negative")
}

/// Stirling number of the second kind `S(q, j)`.
pub fn stirling2(q: usize, j: usize) -> BigUint {
    // row-by-row recurrence S(n, k) = k S(n-1, k) + S(n-1, k-1)
    let mut row = vec![BigUint::zero(); j + 1];
    row[0] = BigUint::one();
    for _ in 0..q {
        for k in (1..=j).rev() {
            row[k] = &row[k] * BigUint::from(k) + &row[k - 1];
        }
        row[0] = BigUint::zero();
    }
    row[j].clone()
}

pub fn bell(q: usize) -> BigUint {
    (0..=q).map(|j| stirling2(q, j)).sum()
}

/// Number of partitions of the integer `m` into exactly `n` positive parts.
pub fn partitions_into_parts(m: usize, n: usize) -> BigUint {
    // p(m, n) = p(m-1, n-1) + p(m-n, n)
    let mut table = vec![vec![BigUint::zero(); n + 1]; m + 1];
    table[0][0] = BigUint::one();
    for a in 1..=m {
        for b in 1..=n.min(a) {
            let mut v = table[a - 1][b - 1].clone();
            if a >= b {
                v += &table[a - b][b];
            }
            table[a][b] = v;
        }
    }
    table[m][n].clone()
}

/// `dim 𝓔(q, l) = Σ_m C(q, m) |Surj(m, l)| Bell(q - m)`.
pub fn dimension(q: usize, l: usize) -> BigUint {
    (l..=q)
        .map(|m| binomial(q, m) * surjection_count(m, l) * bell(q - m))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn brute_surjections(q: usize, l: usize) -> u64 {
        let total = (l as u64).pow(q as u32);
        let mut count = 0;
        for code in 0..total {
            let mut hit = vec![false; l];
            let mut c = code;
            for _ in 0..q {
                hit[(c % l as u64) as usize] = true;
                c /= l as u64;
            }
            if hit.iter().all(|&h| h) {
                count += 1;
            }
        }
        if l == 0 && q == 0 {
            1
        } else {
            count
        }
    }

    fn brute_set_partitions(q: usize) -> Vec<usize> {
        // block counts of all restricted growth strings of length q
        fn go(pos: usize, q: usize, max: usize, out: &mut Vec<usize>) {
            if pos == q {
                out.push(max);
                return;
            }
            for b in 0..=max {
                go(pos + 1, q, max.max(b + 1), out);
            }
        }
        let mut out = Vec::new();
        go(0, q, 0, &mut out);
        out
    }

    #[test]
    fn examples() {
        assert_eq!(surjection_count(3, 2), u(6));
        assert_eq!(stirling2(3, 2), u(3));
        assert_eq!(bell(3), u(5));
        assert_eq!(partitions_into_parts(4, 2), u(2));
        assert_eq!(dimension(3, 1), u(10));
        assert_eq!(dimension(3, 0), u(5));
        assert_eq!(dimension(0, 0), u(1));
        assert_eq!(dimension(0, 1), u(0));
    }

    #[test]
    fn surjections_match_brute_force() {
        for q in 0..=6 {
            for l in 0..=4 {
                assert_eq!(
                    surjection_count(q, l),
                    u(brute_surjections(q, l)),
                    "{q} {l}"
                );
            }
        }
    }

    #[test]
    fn stirling_and_bell_match_brute_force() {
        for q in 0..=7 {
            let blocks = brute_set_partitions(q);
            assert_eq!(bell(q), u(blocks.len() as u64));
            for j in 0..=q {
                let c = blocks.iter().filter(|&&b| b == j).count();
                assert_eq!(stirling2(q, j), u(c as u64));
            }
        }
    }

    #[test]
    fn integer_partitions_match_brute_force() {
        fn count(m: usize, n: usize, max: usize) -> u64 {
            if n == 0 {
                return (m == 0) as u64;
            }
            (1..=max.min(m)).map(|p| count(m - p, n - 1, p)).sum()
        }
        for m in 0..=10 {
            for n in 0..=m + 1 {
                assert_eq!(partitions_into_parts(m, n), u(count(m, n, m)), "{m} {n}");
            }
        }
    }

    #[test]
    fn diagonal_and_wheel_only_dimensions() {
        let mut fact = BigUint::one();
        for n in 0..=7 {
            if n > 0 {
                fact *= BigUint::from(n);
            }
            assert_eq!(dimension(n, n), fact);
            assert_eq!(dimension(n, 0), bell(n));
        }
    }
}
