//! Graded Betti tables of `R/I_c^{(m)}`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{binomial, choose};
use crate::error::{Error, Result};
use crate::order::{index_of_overlap, is_maximal_partition};
use crate::params::StarParams;
use crate::partition::{enumerate_partitions, Partition};

/// Sparse table `(i, j) ↦ β_{i,j}`, with `j` in actual degrees (δ already applied).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    params: StarParams,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl BettiTable {
    /// The table of `R` itself: only `β_{0,0} = 1`.
    pub fn new(params: StarParams) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert((0, 0), BigInt::one());
        BettiTable { params, entries }
    }

    /// Builds a table from raw `(i, j, β)` triples; zero values are dropped.
    pub fn from_entries<I>(params: StarParams, triples: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, BigInt)>,
    {
        let mut t = BettiTable {
            params,
            entries: BTreeMap::new(),
        };
        for (i, j, v) in triples {
            t.add(i, j, v);
        }
        t
    }

    pub fn params(&self) -> &StarParams {
        &self.params
    }

    pub fn add(&mut self, i: usize, j: usize, v: BigInt) {
        if v.is_zero() {
            return;
        }
        let slot = self.entries.entry((i, j)).or_default();
        *slot += v;
        if slot.is_zero() {
            self.entries.remove(&(i, j));
        }
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Degree `δ(t(s−c)+m+i−1)` of the `i`-th entry of strand `t`.
    pub fn strand_degree(&self, t: usize, i: usize) -> usize {
        strand_degree(&self.params, t, i)
    }

    /// `(β_{1,j_1}, …, β_{c,j_c})` along strand `t`, zeros included.
    pub fn strand(&self, t: usize) -> Vec<BigInt> {
        (1..=self.params.c())
            .map(|i| self.get(i, self.strand_degree(t, i)))
            .collect()
    }

    /// Largest `j − i` over the nonzero entries.
    pub fn max_row(&self) -> usize {
        self.entries.keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    /// Column sums `Σ_j β_{i,j}` for `i = 0..=max i`.
    pub fn totals(&self) -> Vec<BigInt> {
        let width = self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0) + 1;
        let mut out = vec![BigInt::zero(); width];
        for (&(i, _), v) in &self.entries {
            out[i] += v;
        }
        out
    }

    /// Macaulay2-style display with rows indexed by `j − i`.
    pub fn render_text(&self) -> String {
        let cols = self.params.c().max(self.totals().len() - 1) + 1;
        let rows = self.max_row() + 1;
        let mut grid = vec![vec![String::from("."); cols]; rows];
        for (&(i, j), v) in &self.entries {
            grid[j - i][i] = v.to_string();
        }
        let mut totals = self.totals();
        totals.resize(cols, BigInt::zero());
        let header: Vec<String> = (0..cols).map(|i| i.to_string()).collect();
        let totals: Vec<String> = totals.iter().map(|v| v.to_string()).collect();
        let widths: Vec<usize> = (0..cols)
            .map(|k| {
                grid.iter()
                    .map(|r| r[k].len())
                    .chain([header[k].len(), totals[k].len()])
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let label = "total:".len().max(format!("{}:", rows - 1).len());
        let mut out = String::new();
        let mut line = |lab: &str, cells: &[String]| {
            let mut l = format!("{lab:>label$}");
            for (cell, w) in cells.iter().zip(&widths) {
                let _ = write!(l, " {cell:>w$}");
            }
            out.push_str(l.trim_end());
            out.push('\n');
        };
        line("", &header);
        line("total:", &totals);
        for (r, cells) in grid.iter().enumerate() {
            line(&format!("{r}:"), cells);
        }
        out
    }
}

fn strand_degree(params: &StarParams, t: usize, i: usize) -> usize {
    params.delta() * (params.generator_f_degree(t) + i - 1)
}

/// Mapping-cone assembly: a generator of F-degree `d` whose colon is generated
/// by `k` forms contributes `C(k, i−1)` to `β_{i, δ(d+i−1)}`.
pub fn betti_from_set_sizes(gens: &[(u64, usize)], params: &StarParams) -> BettiTable {
    let delta = params.delta();
    let mut table = BettiTable::new(*params);
    for &(d, k) in gens {
        for i in 1..=k + 1 {
            table.add(i, delta * (d as usize + i - 1), choose(k, i - 1));
        }
    }
    table
}

/// `A_{i−1}([d]) = Σ_{j=i−1}^{d_{i_0}−d_t} C(c−d_{i_0}+j, i−1) C(s−c+d_t+j−1, j)`.
pub fn a_coefficient(p: &Partition, i: usize, params: &StarParams) -> Result<BigInt> {
    if is_maximal_partition(p, params) {
        return Err(Error::WrongCase(p.clone()));
    }
    let i0 = index_of_overlap(p)?;
    let (top, last) = (p.part(i0), p.last());
    if last == top {
        return Err(Error::WrongCase(p.clone()));
    }
    Ok(a_sum(top, last, i, params))
}

fn a_sum(top: usize, last: usize, i: usize, params: &StarParams) -> BigInt {
    let (s, c) = (params.s() as i64, params.c() as i64);
    let (top, last, i) = (top as i64, last as i64, i as i64);
    let mut acc = BigInt::zero();
    for j in 0..=(top - last) {
        acc += binomial(c - top + j, i - 1) * binomial(s - c + last + j - 1, j);
    }
    acc
}

/// `C(s, s−c+d_1) · Π_{k=2}^{i_0} C(s−c+d_{k−1}, s−c+d_k)`.
fn chain_to(p: &Partition, upto: usize, params: &StarParams) -> BigInt {
    let (s, floor) = (params.s() as i64, (params.s() - params.c()) as i64);
    let mut acc = binomial(s, floor + p.part(1) as i64);
    for k in 2..=upto {
        acc *= binomial(floor + p.part(k - 1) as i64, floor + p.part(k) as i64);
    }
    acc
}

/// The full table, summing partition contributions strand by strand.
pub fn betti_table(params: &StarParams) -> Result<BettiTable> {
    let (s, c, m) = (params.s() as i64, params.c() as i64, params.m());
    let mut table = BettiTable::new(*params);
    let t_min = params.min_length();
    for t in t_min..=m {
        for p in enumerate_partitions(params, Some(t))? {
            for i in 1..=params.c() {
                let ii = i as i64;
                let v = if is_maximal_partition(&p, params) {
                    let r = p.last() as i64;
                    binomial(s, c - r + 1 - ii) * binomial(s - c + r + ii - 2, ii - 1)
                } else {
                    let i0 = index_of_overlap(&p)?;
                    let top = p.part(i0);
                    let chain = chain_to(&p, i0, params);
                    if p.last() == top {
                        binomial(c - top as i64, ii - 1) * chain
                    } else {
                        chain * a_sum(top, p.last(), i, params)
                    }
                };
                table.add(i, strand_degree(params, t, i), v);
            }
        }
    }
    Ok(table)
}

/// Closed value of `β_{i, δ(t(s−c)+m+i−1)}` for `t ≥ ⌈m/2⌉`.
pub fn strand_closed(params: &StarParams, t: usize, i: usize) -> Result<BigInt> {
    let (s, c, m) = (params.s() as i64, params.c() as i64, params.m());
    if c < 2 || m < 2 {
        return Err(Error::OutOfClosedFormRange(format!(
            "strand formulas need c >= 2 and m > 1, got {params}"
        )));
    }
    params.check_length(t)?;
    if i < 1 || i > params.c() {
        return Err(Error::InvalidRange {
            what: "homological index i",
            value: i as i64,
            lo: 1,
            hi: c,
        });
    }
    let half = m.div_ceil(2);
    let (ti, ii, mi) = (t as i64, i as i64, m as i64);
    let generic =
        || binomial(c - 1, ii - 1) * binomial(c - 2 + mi - ti, c - 2) * binomial(s, c - 1);
    if t > half {
        return Ok(generic());
    }
    if t < half {
        return Err(Error::OutOfClosedFormRange(format!(
            "strand formulas need t >= {half}, got t={t}"
        )));
    }
    Ok(if m % 2 == 1 {
        generic() - binomial(c - 2, ii - 2) * binomial(s, c - 2)
    } else if m == 2 {
        binomial(s, c - 1 - ii) * binomial(s - c + ii, ii - 1)
    } else if m == 4 {
        binomial(c - 2, ii - 1) * binomial(s, c - 2)
            + binomial(s, c - 3)
                * (binomial(c - 3, ii - 1)
                    + binomial(c - 2, ii - 1) * (s - c + 1)
                    + binomial(c - 1, ii - 1) * binomial(s - c + 2, 2))
    } else {
        binomial(c - 2, ii - 1) * binomial(s, c - 2)
            + binomial(c - 1, ii - 1)
                * binomial(s, c - 1)
                * (binomial(c - 2 + ti, ti) - BigInt::from(c - 1))
            - binomial(c - 2, ii - 2) * binomial(s, c - 3) * (s - c + 3)
    })
}

/// Closed values `(i, β)` for `i = 1..=c` along the first strand `t = ⌈m/c⌉`.
///
/// Covers `m ≤ c` and, writing `m = qc + r` with `0 ≤ r < c`, the remainders
/// `0`, `c − 1`, `c − 2` and `c − 3`, tried in that order.
pub fn top_strand_closed(params: &StarParams) -> Result<Vec<(usize, BigInt)>> {
    let (s, c, m) = (params.s() as i64, params.c() as i64, params.m() as i64);
    let q = m / c;
    let r = m % c;
    let value = |i: i64| -> BigInt {
        if m <= c {
            return binomial(s, c - m - i + 1) * binomial(s - c + m + i - 2, i - 1);
        }
        // one extra generator family per form once q ≥ 2; the count does not grow with q
        let extra = BigInt::from(s * (q - 1).clamp(0, 1));
        let listed: Vec<BigInt> = if r == 0 {
            vec![BigInt::one()]
        } else if r == c - 1 {
            vec![BigInt::from(s), BigInt::from(s - 1)]
        } else if r == c - 2 {
            vec![
                binomial(s, 2) + s,
                BigInt::from(s * (s - 1)),
                binomial(s - 1, 2),
            ]
        } else {
            vec![
                binomial(s, 3) + s * (s - 1) + &extra,
                binomial(s, 2) * (s - 3) + (2 * s * s - 3 * s) + &extra,
                s * binomial(s - 2, 2) + (s * s - 2 * s),
                binomial(s - 1, 3),
            ]
        };
        listed.get(i as usize - 1).cloned().unwrap_or_default()
    };
    if m > c && r != 0 && r + 3 < c {
        return Err(Error::UnsupportedRemainder {
            remainder: r as usize,
            c: c as usize,
        });
    }
    Ok((1..=c).map(|i| (i as usize, value(i))).collect())
}

/// `δm(s−c+1) + (c−1)(δ−1) − 1`.
pub fn regularity(params: &StarParams) -> usize {
    let (s, c, m, d) = (params.s(), params.c(), params.m(), params.delta());
    d * m * (s - c + 1) + (c - 1) * (d - 1) - 1
}

/// Every entry off `(0, 0)` sits at `i ≤ c` on some strand `j = δ(t(s−c)+m+i−1)`.
pub fn is_koszul_stranded(table: &BettiTable) -> bool {
    let p = table.params();
    let (floor, delta) = (p.s() - p.c(), p.delta());
    table.entries().all(|(i, j, _)| {
        if i == 0 {
            return j == 0;
        }
        if i > p.c() || j % delta != 0 {
            return false;
        }
        let base = j / delta;
        let Some(rest) = base.checked_sub(p.m() + i - 1) else {
            return false;
        };
        rest % floor == 0 && (p.min_length()..=p.m()).contains(&(rest / floor))
    })
}
