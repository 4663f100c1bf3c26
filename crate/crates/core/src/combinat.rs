//! Small combinatorial helpers: binomials, colex-ordered subsets and
//! multisets, and their rank functions.
//!
//! Colexicographic order is the fixed convention for every induced basis of a
//! wedge or symmetric power in this crate: `S < T` iff the largest element of
//! the symmetric difference lies in `T`. For p-subsets of {0..n-1} written in
//! increasing order this sorts by last element, then second-to-last, and so
//! on, and the rank of `{s_0 < … < s_{p-1}}` is `Σ_i C(s_i, i+1)`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient as `usize`; panics on overflow (dimensions in this
/// crate are tiny).
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i).expect("binomial overflow") / (i + 1);
    }
    acc
}

/// Binomial coefficient with arbitrary precision (used by generating-function
/// closed forms where exponents can be larger).
pub fn binomial_big(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k.min(n - k) {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// All p-element subsets of {0..n-1} in colex order, each written increasingly.
pub fn subsets_colex(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(n, p));
    let mut current = Vec::with_capacity(p);
    fn rec(n: usize, p: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p == 0 {
            let mut s = current.clone();
            s.reverse();
            out.push(s);
            return;
        }
        // Choose the largest element `t` last-to-first: colex equals ordering
        // by largest element, recursively.
        for t in (p - 1)..n {
            current.push(t);
            rec(t, p - 1, current, out);
            current.pop();
        }
    }
    rec(n, p, &mut current, &mut out);
    out
}

/// Colex rank of an increasing p-subset of {0..n-1}.
pub fn subset_colex_rank(s: &[usize]) -> usize {
    s.iter()
        .enumerate()
        .map(|(i, &si)| binomial(si, i + 1))
        .sum()
}

/// All p-element multisets over {0..n-1} in colex order, each written weakly
/// increasingly. Colex on multisets is inherited from the staircase bijection
/// `m_i ↦ m_i + i` with (strict) subsets of {0..n+p-2}.
pub fn multisets_colex(n: usize, p: usize) -> Vec<Vec<usize>> {
    subsets_colex(n + p - 1, p)
        .into_iter()
        .map(|s| s.iter().enumerate().map(|(i, &si)| si - i).collect())
        .collect()
}

/// Colex rank of a weakly increasing p-multiset over {0..n-1}.
pub fn multiset_colex_rank(m: &[usize]) -> usize {
    let staircase: Vec<usize> = m.iter().enumerate().map(|(i, &mi)| mi + i).collect();
    subset_colex_rank(&staircase)
}

/// Number of p-multisets over an n-element set.
pub fn multiset_count(n: usize, p: usize) -> usize {
    if p == 0 {
        1
    } else {
        binomial(n + p - 1, p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(24, 5), 42504);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial_big(10, 5), BigInt::from(252));
    }

    #[test]
    fn colex_subsets_small() {
        let s = subsets_colex(4, 2);
        assert_eq!(
            s,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![1, 2],
                vec![0, 3],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        for (i, sub) in s.iter().enumerate() {
            assert_eq!(subset_colex_rank(sub), i);
        }
    }

    #[test]
    fn colex_multisets_small() {
        let m = multisets_colex(2, 2);
        assert_eq!(m, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        for (i, ms) in m.iter().enumerate() {
            assert_eq!(multiset_colex_rank(ms), i);
        }
        assert_eq!(multisets_colex(3, 2).len(), multiset_count(3, 2));
    }

    #[test]
    fn empty_powers() {
        assert_eq!(subsets_colex(3, 0), vec![Vec::<usize>::new()]);
        assert_eq!(multiset_count(4, 0), 1);
    }
}
