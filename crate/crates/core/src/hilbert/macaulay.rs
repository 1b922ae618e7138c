//! Macaulay's growth bound: `h_{d+1} <= h_d^<d>`.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// The `d`-th binomial expansion `h = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_s, s)`
/// with `k_d > k_{d-1} > ... > k_s >= s >= 1`, as pairs `(k_i, i)`.
///
/// Built greedily from the top: each `k_i` is the largest `k` with `C(k, i)`
/// not exceeding what is left.
pub fn macaulay_representation(h: u64, d: u64) -> Vec<(u64, u64)> {
    let mut rest = BigUint::from(h);
    let mut out = Vec::new();
    let mut i = d;
    while !rest.is_zero() && i >= 1 {
        let mut k = i;
        while binomial(k + 1, i) <= rest {
            k += 1;
        }
        rest -= binomial(k, i);
        out.push((k, i));
        i -= 1;
    }
    out
}

/// `h^<d> = C(k_d + 1, d + 1) + ... + C(k_s + 1, s + 1)`; `0^<d> = 0`.
pub fn macaulay_bound(h: u64, d: u64) -> BigUint {
    macaulay_representation(h, d)
        .into_iter()
        .map(|(k, i)| binomial(k + 1, i + 1))
        .sum()
}

/// Result of an O-sequence test; `first_violation` is the first index whose
/// value breaks the growth bound (or index 0 when `h_0 != 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OSequenceCheck {
    pub valid: bool,
    pub first_violation: Option<usize>,
}

/// Whether `h` is the Hilbert function of some standard graded Artinian
/// algebra. The empty sequence and `(1)` qualify; any other sequence must
/// start with 1, `h_1` is free, and `h_{d+1} <= h_d^<d>` for `d >= 1`.
pub fn is_o_sequence(h: &[usize]) -> OSequenceCheck {
    let fail = |i| OSequenceCheck {
        valid: false,
        first_violation: Some(i),
    };
    if h.is_empty() {
        return OSequenceCheck {
            valid: true,
            first_violation: None,
        };
    }
    if h[0] != 1 {
        return fail(0);
    }
    for d in 1..h.len().saturating_sub(1) {
        let bound = macaulay_bound(h[d] as u64, d as u64);
        if BigUint::from(h[d + 1]) > bound {
            return fail(d + 1);
        }
    }
    OSequenceCheck {
        valid: true,
        first_violation: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    #[test]
    fn representations() {
        assert_eq!(macaulay_representation(1, 1), vec![(1, 1)]);
        assert_eq!(macaulay_representation(2, 2), vec![(2, 2), (1, 1)]);
        assert_eq!(macaulay_representation(5, 2), vec![(3, 2), (2, 1)]);
        assert_eq!(macaulay_representation(0, 3), vec![]);
        for d in 1..6 {
            for h in 0..200u64 {
                let rep = macaulay_representation(h, d);
                let sum: BigUint = rep.iter().map(|&(k, i)| binomial(k, i)).sum();
                assert_eq!(sum, BigUint::from(h));
                assert!(rep.windows(2).all(|w| w[0].0 > w[1].0));
                assert!(rep.iter().all(|&(k, i)| k >= i && i >= 1));
            }
        }
    }

    #[test]
    fn bounds() {
        assert_eq!(macaulay_bound(1, 1), BigUint::from(1u32));
        assert_eq!(macaulay_bound(3, 1), BigUint::from(6u32));
        assert_eq!(macaulay_bound(6, 2), BigUint::from(10u32));
        assert_eq!(macaulay_bound(5, 2), BigUint::from(7u32));
        assert_eq!(macaulay_bound(0, 4), BigUint::from(0u32));
    }

    #[test]
    fn examples() {
        assert!(is_o_sequence(&[1, 2, 3, 4]).valid);
        assert_eq!(
            is_o_sequence(&[1, 1, 2]),
            OSequenceCheck {
                valid: false,
                first_violation: Some(2)
            }
        );
        assert!(is_o_sequence(&[1, 2, 2, 1]).valid);
        assert!(is_o_sequence(&[1, 3, 6, 8, 6, 4, 2]).valid);
        assert!(is_o_sequence(&[1]).valid);
        assert!(is_o_sequence(&[]).valid);
        assert_eq!(is_o_sequence(&[2, 1]).first_violation, Some(0));
        assert_eq!(is_o_sequence(&[1, 3, 5, 8]).first_violation, Some(3));
        assert_eq!(is_o_sequence(&[1, 2, 0, 1]).first_violation, Some(3));
    }

    /// Degree-`d` monomials in `n` variables as exponent vectors.
    fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
        crate::forms::monomial_basis(n, d)
            .into_iter()
            .map(|m| m.exponents().to_vec())
            .collect()
    }

    /// Whether some order ideal of monomials in `h[1]` variables has exactly
    /// `h[d]` monomials in each degree `d`: an exhaustive search that does not
    /// use binomial expansions at all.
    fn realizable(h: &[usize]) -> bool {
        if h.is_empty() {
            return true;
        }
        if h[0] != 1 {
            return false;
        }
        if h.len() == 1 {
            return true;
        }
        let n = h[1];
        let level: BTreeSet<Vec<u32>> = monomials(n, 1).into_iter().collect();
        search(h, 2, n, &level)
    }

    fn search(h: &[usize], d: usize, n: usize, prev: &BTreeSet<Vec<u32>>) -> bool {
        if d == h.len() {
            return true;
        }
        // monomials all of whose divisors one degree down are already present
        let candidates: Vec<Vec<u32>> = monomials(n, d as u32)
            .into_iter()
            .filter(|m| {
                (0..n).all(|v| {
                    m[v] == 0 || {
                        let mut q = m.clone();
                        q[v] -= 1;
                        prev.contains(&q)
                    }
                })
            })
            .collect();
        pick(h, d, n, &candidates, 0, &mut Vec::new())
    }

    fn pick(
        h: &[usize],
        d: usize,
        n: usize,
        candidates: &[Vec<u32>],
        start: usize,
        chosen: &mut Vec<Vec<u32>>,
    ) -> bool {
        if chosen.len() == h[d] {
            return search(h, d + 1, n, &chosen.iter().cloned().collect());
        }
        for i in start..candidates.len() {
            if candidates.len() - i < h[d] - chosen.len() {
                break;
            }
            chosen.push(candidates[i].clone());
            if pick(h, d, n, candidates, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    #[test]
    fn growth_bound_agrees_with_order_ideal_search() {
        let mut checked = 0;
        for h1 in 1..=3usize {
            for h2 in 0..=crate::forms::graded_dim(h1, 2) {
                for h3 in 0..=crate::forms::graded_dim(h1, 3).min(7) {
                    let h = [1, h1, h2, h3];
                    assert_eq!(is_o_sequence(&h).valid, realizable(&h), "{h:?}");
                    checked += 1;
                }
            }
        }
        assert!(checked > 40);
    }
}
