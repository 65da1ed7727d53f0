//! Exact binomials and subset enumeration.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::FormSubset;

/// Binomial coefficient `C(n, k)` over the integers.
///
/// Zero whenever `k < 0`, and zero for `k > n ≥ 0`. A negative upper index
/// with `k ≥ 0` takes the generalized value `n(n−1)⋯(n−k+1)/k!`, so that
/// `C(−1, 0) = 1`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    if n < 0 {
        let b = binomial(k - n - 1, k);
        return if k % 2 == 0 { b } else { -b };
    }
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// [`binomial`] for unsigned arguments.
pub fn choose(n: usize, k: usize) -> BigInt {
    binomial(n as i64, k as i64)
}

/// All `k`-subsets of `{1, …, s}`, lexicographic in their sorted index tuples.
pub fn enumerate_subsets(s: i64, k: i64) -> Result<Vec<FormSubset>> {
    if s < 0 || k < 0 || k > s {
        return Err(Error::InvalidRange {
            what: "subset size k",
            value: k,
            lo: 0,
            hi: s.max(0),
        });
    }
    Ok(subsets_of(&FormSubset::full(s as usize), k as usize))
}

/// All `k`-subsets of `ground`, lexicographic on the members they pick.
pub fn subsets_of(ground: &FormSubset, k: usize) -> Vec<FormSubset> {
    let items = ground.as_slice();
    let n = items.len();
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(FormSubset::from_sorted(
            idx.iter().map(|&i| items[i]).collect(),
        ));
        // advance to the next combination
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] < n - k + pos {
                break;
            }
        }
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(7, -1), BigInt::zero());
        for n in 0..20 {
            assert_eq!(binomial(n, 0), BigInt::one());
        }
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::one());
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(-2, 2), BigInt::from(3));
    }

    #[test]
    fn large_value_is_exact() {
        // C(100, 50)
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }

    #[test]
    fn pascal_rule_up_to_sixty() {
        for n in 1..=60 {
            for k in 1..n {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k) + binomial(n - 1, k - 1),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn subsets_small_cases() {
        let got = enumerate_subsets(3, 2).unwrap();
        let want: Vec<FormSubset> = [[1, 2], [1, 3], [2, 3]]
            .iter()
            .map(|v| FormSubset::new(v.iter().copied()).unwrap())
            .collect();
        assert_eq!(got, want);
        assert_eq!(enumerate_subsets(4, 0).unwrap(), vec![FormSubset::empty()]);
        assert_eq!(enumerate_subsets(5, 5).unwrap(), vec![FormSubset::full(5)]);
        assert!(enumerate_subsets(3, 4).is_err());
        assert!(enumerate_subsets(3, -1).is_err());
    }

    proptest! {
        #[test]
        fn subset_count_matches_binomial(s in 0i64..12, k in 0i64..12) {
            prop_assume!(k <= s);
            let subs = enumerate_subsets(s, k).unwrap();
            prop_assert_eq!(BigInt::from(subs.len()), binomial(s, k));
            let mut sorted = subs.clone();
            sorted.sort();
            sorted.dedup();
            prop_assert_eq!(sorted, subs);
        }
    }
}
