//! Positive solutions of `Σ b_i x_i = m`, optionally with `Σ x_i = t`.

use serde::{Deserialize, Serialize};

use crate::monomial::FormSubset;

/// One positive solution `(x_1, …, x_h)` indexed against `B = {b_1 < … < b_h}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiophantineSolution {
    pub values: Vec<usize>,
}

/// All positive solutions, lexicographic in `(x_1, …, x_h)`.
pub fn diophantine_solutions(
    b: &FormSubset,
    m: usize,
    t: Option<usize>,
) -> Vec<DiophantineSolution> {
    let coeffs = b.as_slice();
    let mut out = Vec::new();
    if coeffs.is_empty() {
        return out;
    }
    let mut cur = Vec::with_capacity(coeffs.len());
    descend(coeffs, m, t, &mut cur, &mut out);
    out
}

fn descend(
    coeffs: &[usize],
    rest: usize,
    len_rest: Option<usize>,
    cur: &mut Vec<usize>,
    out: &mut Vec<DiophantineSolution>,
) {
    let Some((&b, tail)) = coeffs.split_first() else {
        if rest == 0 && len_rest.is_none_or(|l| l == 0) {
            out.push(DiophantineSolution {
                values: cur.clone(),
            });
        }
        return;
    };
    // every later coefficient still needs x ≥ 1
    let reserved: usize = tail.iter().sum();
    if rest < b + reserved {
        return;
    }
    for x in 1..=(rest - reserved) / b {
        let l = match len_rest {
            Some(l) if l < x + tail.len() => break,
            Some(l) => Some(l - x),
            None => None,
        };
        cur.push(x);
        descend(tail, rest - b * x, l, cur, out);
        cur.pop();
    }
}

/// `|S_B|` (or `|S_{t,B}|`) without materializing the solutions.
///
/// Substituting `x_i = y_i + 1` turns it into counting non-negative solutions
/// of `Σ b_i y_i = m − Σ b_i` (with `Σ y_i = t − h`), a coin-change table.
pub fn count_solutions(b: &[usize], m: usize, t: Option<usize>) -> u128 {
    let h = b.len();
    if h == 0 {
        return 0;
    }
    let base: usize = b.iter().sum();
    if base > m {
        return 0;
    }
    let target = m - base;
    match t {
        None => {
            let mut ways = vec![0u128; target + 1];
            ways[0] = 1;
            for &bi in b {
                for v in bi..=target {
                    ways[v] += ways[v - bi];
                }
            }
            ways[target]
        }
        Some(t) => {
            if t < h {
                return 0;
            }
            let extra = t - h;
            // ways[k][v]: k extra units spread so far with weighted sum v
            let mut ways = vec![vec![0u128; target + 1]; extra + 1];
            ways[0][0] = 1;
            for &bi in b {
                for k in 1..=extra {
                    for v in bi..=target {
                        let add = ways[k - 1][v - bi];
                        ways[k][v] += add;
                    }
                }
            }
            ways[extra][target]
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fs(v: &[usize]) -> FormSubset {
        FormSubset::new(v.iter().copied()).unwrap()
    }

    fn vals(sols: &[DiophantineSolution]) -> Vec<Vec<usize>> {
        sols.iter().map(|s| s.values.clone()).collect()
    }

    #[test]
    fn small_systems() {
        assert_eq!(
            vals(&diophantine_solutions(&fs(&[1, 2]), 5, None)),
            vec![vec![1, 2], vec![3, 1]]
        );
        for m in [1, 3, 5, 7, 9] {
            assert!(diophantine_solutions(&fs(&[2]), m, None).is_empty());
        }
        assert_eq!(
            vals(&diophantine_solutions(&fs(&[1]), 7, None)),
            vec![vec![7]]
        );
        assert_eq!(
            vals(&diophantine_solutions(&fs(&[1, 2]), 5, Some(3))),
            vec![vec![1, 2]]
        );
        assert!(diophantine_solutions(&FormSubset::empty(), 0, None).is_empty());
    }

    #[test]
    fn pairs_one_two_give_floor_half() {
        for m in 1..40 {
            assert_eq!(count_solutions(&[1, 2], m, None), ((m - 1) / 2) as u128);
        }
    }

    fn brute(b: &[usize], m: usize, t: Option<usize>) -> u128 {
        // plain nested loops, cut off once the weighted sum overshoots
        fn go(b: &[usize], rest: usize, len: usize, t: Option<usize>) -> u128 {
            match b.split_first() {
                None => u128::from(rest == 0 && t.is_none_or(|t| t == len)),
                Some((&bi, tail)) => (1..=rest / bi)
                    .map(|x| go(tail, rest - bi * x, len + x, t))
                    .sum(),
            }
        }
        go(b, m, 0, t)
    }

    proptest! {
        #[test]
        fn enumeration_count_and_brute_force_agree(
            bits in 1u32..64, m in 1usize..13, t in proptest::option::of(1usize..13)
        ) {
            let b: Vec<usize> = (1..=6).filter(|k| bits & (1 << (k - 1)) != 0).collect();
            let sols = diophantine_solutions(&fs(&b), m, t);
            let want = brute(&b, m, t);
            prop_assert_eq!(sols.len() as u128, want);
            prop_assert_eq!(count_solutions(&b, m, t), want);
            for s in &sols {
                prop_assert!(s.values.iter().all(|&x| x >= 1));
                let w: usize = b.iter().zip(&s.values).map(|(a, y)| a * y).sum();
                prop_assert_eq!(w, m);
            }
        }
    }
}
