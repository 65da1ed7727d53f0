//! Brute-force monomial ideals in the variables `x_1, …, x_s`.
//!
//! Generators are packed one exponent per byte into a `u64`, so at most eight
//! variables and exponents below 128 are representable. Divisibility of packed
//! monomials is a single subtraction against a mask of lane top bits.

use std::cmp::Ordering;
use std::collections::HashMap;

use crate::combinat::enumerate_subsets;
use crate::error::{Error, Result};
use crate::monomial::{FMonomial, FormSubset};
use crate::order::TauKey;
use crate::params::StarParams;

const HIGH: u64 = 0x8080_8080_8080_8080;
const MAX_EXP: u32 = 127;

/// Limits that keep the brute-force engine from running away.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCaps {
    pub max_s: usize,
    pub max_m: usize,
    /// Largest candidate set any single step may build before minimalizing.
    pub max_intermediate: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps {
            max_s: 8,
            max_m: 6,
            max_intermediate: 1_000_000,
        }
    }
}

impl OracleCaps {
    fn check(&self, params: &StarParams) -> Result<()> {
        if params.s() > self.max_s {
            return Err(limit("oracle forms", params.s(), self.max_s));
        }
        if params.m() > self.max_m {
            return Err(limit("oracle power", params.m(), self.max_m));
        }
        Ok(())
    }
}

fn limit(what: &'static str, needed: usize, cap: usize) -> Error {
    Error::ResourceLimit {
        what,
        needed: needed.to_string(),
        cap: cap.to_string(),
    }
}

fn pack(m: &FMonomial) -> Result<u64> {
    if m.num_forms() > 8 {
        return Err(limit("packed variables", m.num_forms(), 8));
    }
    let mut w = 0u64;
    for (k, &e) in m.exponents().iter().enumerate() {
        if e > MAX_EXP {
            return Err(limit("packed exponent", e as usize, MAX_EXP as usize));
        }
        w |= u64::from(e) << (8 * k);
    }
    Ok(w)
}

/// Like [`pack`] but saturating, which preserves divisibility by packed generators.
fn pack_clamped(m: &FMonomial) -> u64 {
    m.exponents()
        .iter()
        .take(8)
        .enumerate()
        .fold(0, |w, (k, &e)| w | u64::from(e.min(MAX_EXP)) << (8 * k))
}

fn unpack(w: u64, s: usize) -> FMonomial {
    FMonomial::new((0..s).map(|k| ((w >> (8 * k)) & 0xff) as u32).collect())
}

#[inline]
fn divides(a: u64, b: u64) -> bool {
    ((b | HIGH).wrapping_sub(a)) & HIGH == HIGH
}

#[inline]
fn lanes(w: u64) -> [u8; 8] {
    w.to_le_bytes()
}

fn lane_max(a: u64, b: u64) -> u64 {
    let (x, y) = (lanes(a), lanes(b));
    u64::from_le_bytes(std::array::from_fn(|k| x[k].max(y[k])))
}

fn lane_sat_sub(a: u64, b: u64) -> u64 {
    let (x, y) = (lanes(a), lanes(b));
    u64::from_le_bytes(std::array::from_fn(|k| x[k].saturating_sub(y[k])))
}

fn degree(w: u64) -> u32 {
    lanes(w).iter().map(|&e| u32::from(e)).sum()
}

/// A monomial ideal, kept as its sorted list of minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    s: usize,
    gens: Vec<u64>,
}

impl MonomialIdeal {
    pub fn zero(s: usize) -> Self {
        MonomialIdeal {
            s,
            gens: Vec::new(),
        }
    }

    pub fn unit(s: usize) -> Self {
        MonomialIdeal { s, gens: vec![0] }
    }

    pub fn num_vars(&self) -> usize {
        self.s
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Minimal generators, lexicographic in their exponent vectors.
    pub fn generators(&self) -> Vec<FMonomial> {
        let mut v: Vec<FMonomial> = self.gens.iter().map(|&w| unpack(w, self.s)).collect();
        v.sort();
        v
    }

    fn from_candidates(s: usize, mut cands: Vec<u64>) -> Self {
        cands.sort_unstable_by_key(|&w| (degree(w), w));
        cands.dedup();
        let mut kept: Vec<u64> = Vec::new();
        // a candidate can only be divided by a kept one of strictly lower degree
        let mut start = 0;
        while start < cands.len() {
            let d = degree(cands[start]);
            let end = start + cands[start..].partition_point(|&w| degree(w) == d);
            let below = kept.len();
            for &w in &cands[start..end] {
                if !kept[..below].iter().any(|&g| divides(g, w)) {
                    kept.push(w);
                }
            }
            start = end;
        }
        kept.sort_unstable();
        MonomialIdeal { s, gens: kept }
    }
}

/// Drops every monomial divisible by another one in the list.
pub fn minimalize(s: usize, gens: &[FMonomial]) -> Result<MonomialIdeal> {
    let mut packed = Vec::with_capacity(gens.len());
    for g in gens {
        if g.num_forms() != s {
            return Err(Error::LengthMismatch {
                expected: s,
                found: g.num_forms(),
            });
        }
        packed.push(pack(g)?);
    }
    if s > 8 {
        return Err(limit("packed variables", s, 8));
    }
    Ok(MonomialIdeal::from_candidates(s, packed))
}

/// Packed monomials of degree exactly `k` supported on `j` (0-based lanes).
fn monomials_on(j: &[usize], k: u32) -> Vec<u64> {
    fn go(j: &[usize], k: u32, acc: u64, out: &mut Vec<u64>) {
        match j.split_first() {
            None => {
                if k == 0 {
                    out.push(acc);
                }
            }
            Some((&lane, [])) => out.push(acc | u64::from(k) << (8 * lane)),
            Some((&lane, rest)) => {
                for e in (0..=k).rev() {
                    go(rest, k - e, acc | u64::from(e) << (8 * lane), out);
                }
            }
        }
    }
    let mut out = Vec::new();
    go(j, k, 0, &mut out);
    out
}

fn lanes_of(j: &FormSubset) -> Vec<usize> {
    j.iter().map(|x| x - 1).collect()
}

/// `(x_j : j ∈ J)^m` inside `s` variables.
pub fn ci_power_ideal(j: &FormSubset, m: usize, s: usize) -> Result<MonomialIdeal> {
    if j.is_empty() {
        return Err(Error::EmptySubset);
    }
    if !j.within(s) || s > 8 {
        return Err(limit(
            "packed variables",
            s.max(j.largest().unwrap_or(0)),
            8,
        ));
    }
    if m as u32 > MAX_EXP {
        return Err(limit("packed exponent", m, MAX_EXP as usize));
    }
    let mut gens = monomials_on(&lanes_of(j), m as u32);
    gens.sort_unstable();
    Ok(MonomialIdeal { s, gens })
}

/// `I_1 ∩ I_2` from pairwise least common multiples.
pub fn intersect(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<MonomialIdeal> {
    intersect_capped(a, b, OracleCaps::default().max_intermediate)
}

pub fn intersect_capped(a: &MonomialIdeal, b: &MonomialIdeal, cap: usize) -> Result<MonomialIdeal> {
    debug_assert_eq!(a.s, b.s);
    let n = a.gens.len().saturating_mul(b.gens.len());
    if n > cap {
        return Err(limit("intersection candidates", n, cap));
    }
    let mut cands = Vec::with_capacity(n);
    for &g in &a.gens {
        for &h in &b.gens {
            cands.push(lane_max(g, h));
        }
    }
    Ok(MonomialIdeal::from_candidates(a.s, cands))
}

/// `I ∩ (x_J)^u`: a generator `g` with `deg_J g < u` is lifted by every
/// monomial on `J` of the missing degree.
fn intersect_ci_power(
    ideal: &MonomialIdeal,
    j: &[usize],
    u: u32,
    cap: usize,
) -> Result<MonomialIdeal> {
    let mut lifts: Vec<Option<Vec<u64>>> = vec![None; u as usize + 1];
    let mut cands = Vec::new();
    for &g in &ideal.gens {
        let b = lanes(g);
        let have: u32 = j.iter().map(|&k| u32::from(b[k])).sum();
        if have >= u {
            cands.push(g);
            continue;
        }
        let need = (u - have) as usize;
        let qs = lifts[need].get_or_insert_with(|| monomials_on(j, need as u32));
        cands.extend(qs.iter().map(|&q| g + q));
        if cands.len() > cap {
            return Err(limit("intersection candidates", cands.len(), cap));
        }
    }
    Ok(MonomialIdeal::from_candidates(ideal.s, cands))
}

/// `I^{(m)} = ⋂_{|J| = c} (x_J)^m`, folded over `J` in lexicographic order.
pub fn symbolic_power_oracle(params: &StarParams) -> Result<MonomialIdeal> {
    symbolic_power_oracle_capped(params, &OracleCaps::default())
}

pub fn symbolic_power_oracle_capped(
    params: &StarParams,
    caps: &OracleCaps,
) -> Result<MonomialIdeal> {
    caps.check(params)?;
    let (s, c, m) = (params.s(), params.c(), params.m());
    if m as u32 > MAX_EXP {
        return Err(limit("packed exponent", m, MAX_EXP as usize));
    }
    let subsets = enumerate_subsets(s as i64, c as i64)?;
    let mut acc = ci_power_ideal(&subsets[0], m, s)?;
    for j in &subsets[1..] {
        acc = intersect_ci_power(&acc, &lanes_of(j), m as u32, caps.max_intermediate)?;
    }
    Ok(acc)
}

/// Membership: some generator divides `m`.
pub fn contains(ideal: &MonomialIdeal, m: &FMonomial) -> bool {
    let w = pack_clamped(m);
    ideal.gens.iter().any(|&g| divides(g, w))
}

/// `I^m` by repeated multiplication, minimalizing after every factor.
pub fn ordinary_power(ideal: &MonomialIdeal, m: usize) -> Result<MonomialIdeal> {
    ordinary_power_capped(ideal, m, OracleCaps::default().max_intermediate)
}

pub fn ordinary_power_capped(ideal: &MonomialIdeal, m: usize, cap: usize) -> Result<MonomialIdeal> {
    if m == 0 {
        return Ok(MonomialIdeal::unit(ideal.s));
    }
    let top = ideal
        .gens
        .iter()
        .map(|&g| lanes(g).into_iter().max().unwrap_or(0))
        .max();
    if u32::from(top.unwrap_or(0)) * m as u32 > MAX_EXP {
        return Err(limit("packed exponent", m, MAX_EXP as usize));
    }
    let mut acc = ideal.clone();
    for _ in 1..m {
        let n = acc.gens.len().saturating_mul(ideal.gens.len());
        if n > cap {
            return Err(limit("power candidates", n, cap));
        }
        let mut cands = Vec::with_capacity(n);
        for &a in &acc.gens {
            for &b in &ideal.gens {
                cands.push(a + b);
            }
        }
        acc = MonomialIdeal::from_candidates(ideal.s, cands);
    }
    Ok(acc)
}

/// `I : M`, generated by `g / gcd(g, M)`.
pub fn colon_by_monomial(ideal: &MonomialIdeal, m: &FMonomial) -> MonomialIdeal {
    let w = pack_clamped(m);
    let cands = ideal.gens.iter().map(|&g| lane_sat_sub(g, w)).collect();
    MonomialIdeal::from_candidates(ideal.s, cands)
}

/// Generators of `I` sorted τ-descending.
pub fn tau_sorted(ideal: &MonomialIdeal, params: &StarParams) -> Result<Vec<FMonomial>> {
    let mut keyed = ideal
        .generators()
        .into_iter()
        .map(|g| TauKey::of(&g, params).map(|k| (k, g)))
        .collect::<Result<Vec<_>>>()?;
    keyed.sort_by(|a, b| b.0.cmp(&a.0));
    Ok(keyed.into_iter().map(|(_, g)| g).collect())
}

/// `(N_1, …, N_{i−1}) : N_i` for each `i`, for a list already in the desired order.
pub fn successive_colons(gens: &[FMonomial], s: usize) -> Result<Vec<MonomialIdeal>> {
    let mut earlier: Vec<u64> = Vec::with_capacity(gens.len());
    let mut out = Vec::with_capacity(gens.len());
    for g in gens {
        let w = pack(g)?;
        let cands = earlier.iter().map(|&e| lane_sat_sub(e, w)).collect();
        out.push(MonomialIdeal::from_candidates(s, cands));
        earlier.push(w);
    }
    Ok(out)
}

/// Colon sizes along τ for the oracle's own generators, insisting that every
/// colon is generated by variables.
pub fn set_size_oracle(params: &StarParams) -> Result<Vec<(FMonomial, usize)>> {
    let ideal = symbolic_power_oracle(params)?;
    let gens = tau_sorted(&ideal, params)?;
    let colons = successive_colons(&gens, params.s())?;
    let mut out = Vec::with_capacity(gens.len());
    for (g, colon) in gens.into_iter().zip(colons) {
        if let Some(&bad) = colon.gens.iter().find(|&&w| degree(w) != 1) {
            return Err(Error::NonlinearQuotient {
                generator: g.to_string(),
                degree: u64::from(degree(bad)),
            });
        }
        out.push((g, colon.len()));
    }
    Ok(out)
}

/// Whether `w ∈ I^k`: peel one generator of `I` off at a time.
fn in_power(base: &[u64], w: u64, k: usize, memo: &mut HashMap<(u64, usize), bool>) -> bool {
    if k == 0 {
        return true;
    }
    if let Some(&hit) = memo.get(&(w, k)) {
        return hit;
    }
    let hit = base
        .iter()
        .any(|&g| divides(g, w) && in_power(base, w - g, k - 1, memo));
    memo.insert((w, k), hit);
    hit
}

/// Generators of `I^{(m)}` that do not lie in `I^m`.
///
/// Membership in `I^m` is decided by peeling generators of `I` rather than by
/// building `I^m`, which outgrows the candidate cap long before `I^{(m)}` does.
pub fn sdefect_oracle(params: &StarParams) -> Result<usize> {
    let sym = symbolic_power_oracle(params)?;
    let base = symbolic_power_oracle(&params.with_m(1)?)?;
    let mut memo = HashMap::new();
    Ok(sym
        .gens
        .iter()
        .filter(|&&g| !in_power(&base.gens, g, params.m(), &mut memo))
        .count())
}

/// Degree-then-lex order on packed generators, used to compare ideals in tests.
pub fn compare_generators(a: &FMonomial, b: &FMonomial) -> Ordering {
    a.f_degree().cmp(&b.f_degree()).then_with(|| a.cmp(b))
}
