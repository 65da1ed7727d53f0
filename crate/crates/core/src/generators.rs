//! Minimal generators of `I_c^{(m)}` and of `I_c^{(m)}/I_c^m`, their counts,
//! and the closed formulas for small `c` and small `m`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{binomial, subsets_of};
use crate::diophantine::count_solutions;
use crate::error::{Error, Result};
use crate::monomial::{FMonomial, FormSubset};
use crate::normal_form::{normal_form, NormalForm};
use crate::order::revlex_sets;
use crate::params::StarParams;
use crate::partition::{enumerate_partitions, Partition};

/// Default cap on the number of generators an enumeration may produce.
pub const DEFAULT_GENERATOR_CAP: u64 = 10_000_000;

/// `G_{c,(m)}` in τ-descending order, refusing to build more than
/// [`DEFAULT_GENERATOR_CAP`] monomials.
pub fn enumerate_generators(params: &StarParams) -> Result<Vec<FMonomial>> {
    enumerate_generators_capped(params, DEFAULT_GENERATOR_CAP)
}

pub fn enumerate_generators_capped(params: &StarParams, cap: u64) -> Result<Vec<FMonomial>> {
    check_cap(&mu(params), cap)?;
    let mut out = Vec::new();
    for p in enumerate_partitions(params, None)? {
        push_chains(params, &p, &mut out);
    }
    Ok(out)
}

/// `G'_{c,(m)}`: the generators with support of size at least `s + 2 − c`,
/// in τ-descending order.
pub fn enumerate_module_generators(params: &StarParams) -> Result<Vec<FMonomial>> {
    enumerate_module_generators_capped(params, DEFAULT_GENERATOR_CAP)
}

pub fn enumerate_module_generators_capped(params: &StarParams, cap: u64) -> Result<Vec<FMonomial>> {
    check_cap(&sdefect(params), cap)?;
    let mut out = Vec::new();
    // the support is the first layer, of size s − c + d_1
    for p in enumerate_partitions(params, None)? {
        if p.part(1) >= 2 {
            push_chains(params, &p, &mut out);
        }
    }
    Ok(out)
}

fn check_cap(count: &BigInt, cap: u64) -> Result<()> {
    if *count > BigInt::from(cap) {
        return Err(Error::ResourceLimit {
            what: "generator enumeration",
            needed: count.to_string(),
            cap: cap.to_string(),
        });
    }
    Ok(())
}

/// Appends every generator with partition `p`, ggrevlex-descending.
fn push_chains(params: &StarParams, p: &Partition, out: &mut Vec<FMonomial>) {
    let floor = params.s() - params.c();
    // distinct parts with multiplicities, largest first
    let mut runs: Vec<(usize, u32)> = Vec::new();
    for &d in p.parts() {
        match runs.last_mut() {
            Some((e, k)) if *e == d => *k += 1,
            _ => runs.push((d, 1)),
        }
    }
    let mut chains: Vec<Vec<FormSubset>> = Vec::new();
    let mut cur = Vec::with_capacity(runs.len());
    grow(
        &FormSubset::full(params.s()),
        &runs,
        floor,
        &mut cur,
        &mut chains,
    );
    chains.sort_by(|a, b| chain_cmp(b, a));
    out.extend(chains.into_iter().map(|chain| {
        let mut e = vec![0u32; params.s()];
        for (layer, &(_, k)) in chain.iter().zip(&runs) {
            for j in layer.iter() {
                e[j - 1] += k;
            }
        }
        FMonomial::new(e)
    }));
}

fn grow(
    parent: &FormSubset,
    runs: &[(usize, u32)],
    floor: usize,
    cur: &mut Vec<FormSubset>,
    out: &mut Vec<Vec<FormSubset>>,
) {
    let Some(&(d, _)) = runs.get(cur.len()) else {
        out.push(cur.clone());
        return;
    };
    for layer in subsets_of(parent, floor + d) {
        cur.push(layer.clone());
        grow(&layer, runs, floor, cur, out);
        cur.pop();
    }
}

/// Positional revlex on chains of equal shape.
fn chain_cmp(a: &[FormSubset], b: &[FormSubset]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| revlex_sets(x, y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Normal form of `m` together with its partition, when `m ∈ G_{c,(m)}`.
pub fn generator_data(m: &FMonomial, params: &StarParams) -> Result<(NormalForm, Partition)> {
    let not_gen = || Error::NotAGenerator(m.to_string());
    if m.num_forms() != params.s() {
        return Err(Error::LengthMismatch {
            expected: params.s(),
            found: m.num_forms(),
        });
    }
    let nf = normal_form(m).map_err(|_| not_gen())?;
    let floor = params.s() - params.c();
    let mut parts = Vec::with_capacity(nf.len());
    for layer in nf.layers() {
        if layer.len() <= floor {
            return Err(not_gen());
        }
        parts.push(layer.len() - floor);
    }
    if parts.iter().sum::<usize>() != params.m() {
        return Err(not_gen());
    }
    Ok((nf, Partition::from_parts_unchecked(parts)))
}

/// The partition `d_j = |S_j| − (s − c)` attached to a generator.
pub fn partition_of(m: &FMonomial, params: &StarParams) -> Result<Partition> {
    generator_data(m, params).map(|(_, p)| p)
}

pub fn is_generator(m: &FMonomial, params: &StarParams) -> bool {
    generator_data(m, params).is_ok()
}

/// `C(s, c − b_h) · Π_{k=h}^{2} C(s − c + b_k, b_k − b_{k−1})` for `B = {b_1 < … < b_h}`.
fn chain_count(b: &[usize], params: &StarParams) -> BigInt {
    let (s, c) = (params.s() as i64, params.c() as i64);
    let top = *b.last().expect("B is nonempty") as i64;
    let mut acc = binomial(s, c - top);
    for w in b.windows(2) {
        let (lo, hi) = (w[0] as i64, w[1] as i64);
        acc *= binomial(s - c + hi, hi - lo);
    }
    acc
}

/// Calls `f` on every nonempty `B ⊆ {1, …, c}` with `Σ B ≤ m`.
fn for_each_subset(params: &StarParams, f: &mut impl FnMut(&[usize])) {
    fn go(next: usize, c: usize, room: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        for b in next..=c.min(room) {
            cur.push(b);
            f(cur);
            go(b + 1, c, room - b, cur, f);
            cur.pop();
        }
    }
    go(1, params.c(), params.m(), &mut Vec::new(), f);
}

fn weighted_sum(params: &StarParams, t: Option<usize>) -> BigInt {
    let mut total = BigInt::zero();
    for_each_subset(params, &mut |b| {
        let n = count_solutions(b, params.m(), t);
        if n > 0 {
            total += BigInt::from(n) * chain_count(b, params);
        }
    });
    total
}

/// Number of generators of degree `δ(t(s−c)+m)`, by summing over `B ⊆ [c]`.
pub fn count_generators_in_degree(params: &StarParams, t: usize) -> Result<BigInt> {
    params.check_length(t)?;
    Ok(weighted_sum(params, Some(t)))
}

/// Closed count for `t > m/2` and for `t = m/2`.
pub fn count_generators_closed(params: &StarParams, t: usize) -> Result<BigInt> {
    params.check_length(t)?;
    let (s, c, m, t) = (
        params.s() as i64,
        params.c() as i64,
        params.m() as i64,
        t as i64,
    );
    if 2 * t > m {
        Ok(binomial(s, c - 1) * binomial(m - t + c - 2, m - t))
    } else if 2 * t == m {
        Ok(
            binomial(s, c - 2)
                + binomial(s, c - 1) * (binomial(c - 2 + t, t) - BigInt::from(c - 1)),
        )
    } else {
        Err(Error::OutOfClosedFormRange(format!(
            "generator count needs t >= m/2, got t={t} with m={m}"
        )))
    }
}

/// `μ(I_c^{(m)})`.
pub fn mu(params: &StarParams) -> BigInt {
    weighted_sum(params, None)
}

/// `μ(I_c^{(m)}/I_c^m) = μ − C(s, c − 1)`.
pub fn sdefect(params: &StarParams) -> BigInt {
    mu(params) - binomial(params.s() as i64, params.c() as i64 - 1)
}

/// Closed `(μ, sdefect)` for codimension 2.
pub fn closed_c2(params: &StarParams) -> Result<(BigInt, BigInt)> {
    if params.c() != 2 {
        return Err(Error::WrongCodimension {
            expected: 2,
            found: params.c(),
        });
    }
    let s = BigInt::from(params.s());
    let m = params.m();
    let half = BigInt::from(m / 2);
    // odd m: the μ count is s + s⌊m/2⌋, which is what the solution counts give
    Ok(if m % 2 == 1 {
        (&s + &s * &half, &s * &half)
    } else {
        (
            BigInt::one() + BigInt::from(m) * &s / 2u32,
            BigInt::one() + &s * (half - 1u32),
        )
    })
}

/// Closed `(μ, sdefect)` for codimension 3, one branch per residue of `m` mod 6.
pub fn closed_c3(params: &StarParams) -> Result<(BigInt, BigInt)> {
    if params.c() != 3 {
        return Err(Error::WrongCodimension {
            expected: 3,
            found: params.c(),
        });
    }
    let s = BigInt::from(params.s());
    let cs2 = binomial(params.s() as i64, 2);
    let m = BigInt::from(params.m());
    let one = BigInt::one();
    let sq = |k: i64| {
        let x = &m - k;
        &x * &x
    };
    // every branch is written as (numerator of the bracket over 6, numerator of
    // the linear term over 6, constant)
    let (bracket6, linear6, constant) = match params.m() % 6 {
        0 => (sq(0) + 2 * &m, &s * &m, one.clone()),
        1 => (sq(1) + 4 * (&m - 1) + 6, &s * (&m - 1), BigInt::zero()),
        2 => (sq(2) + 6 * (&m - 1), &s * (6 + (&m - 2)), BigInt::zero()),
        3 => (sq(3) + 8 * &m - 6, &s * (&m - 3), one.clone()),
        4 => (
            sq(4) + 10 * (&m - 1) - 6,
            &s * (6 + (&m - 4)),
            BigInt::zero(),
        ),
        _ => (sq(5) + 12 * &m - 24, &s * (&m + 1), BigInt::zero()),
    };
    let six = BigInt::from(6);
    let total6: BigInt = &cs2 * bracket6 + linear6 + constant * &six;
    assert!(
        (&total6 % &six).is_zero(),
        "codimension-3 closed form is not integral at {params}"
    );
    let mu = total6 / six;
    let sdef = &mu - cs2;
    Ok((mu, sdef))
}

/// Closed `(μ, sdefect)` for `2 ≤ m ≤ 4`.
pub fn closed_small_m(params: &StarParams) -> Result<(BigInt, BigInt)> {
    let (s, c) = (params.s() as i64, params.c() as i64);
    let b = |k: i64| binomial(s, c - k);
    let mu = match params.m() {
        2 => binomial(s + 1, c - 1),
        3 => b(1) + BigInt::from(s - c + 2) * b(2) + b(3),
        4 => b(1) + b(2) * (s - c + 3) + b(3) * binomial(s - c + 3, 2) + b(4),
        m => {
            return Err(Error::OutOfClosedFormRange(format!(
                "small-m formulas cover 2 <= m <= 4, got m={m}"
            )))
        }
    };
    let sdef = &mu - b(1);
    Ok((mu, sdef))
}
