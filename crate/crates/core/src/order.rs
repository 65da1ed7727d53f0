//! The total order τ on generators and the colon sets it produces.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::generator_data;
use crate::monomial::{FMonomial, FormSubset};
use crate::normal_form::{normal_form, NormalForm};
use crate::params::StarParams;
use crate::partition::Partition;

/// Anti-graded lex on partitions of the same integer.
pub fn alex_compare(p: &Partition, q: &Partition) -> Result<Ordering> {
    if p.weight() != q.weight() {
        return Err(Error::MismatchedWeight(p.clone(), q.clone()));
    }
    Ok(p.alex_cmp(q))
}

/// Degree-revlex with `F_1 > … > F_s`: at the last index where the exponents
/// differ, the smaller exponent wins.
pub fn revlex_compare(a: &FMonomial, b: &FMonomial) -> Result<Ordering> {
    if a.f_degree() != b.f_degree() {
        return Err(Error::DegreeMismatch(a.f_degree(), b.f_degree()));
    }
    Ok(revlex_exps(a.exponents(), b.exponents()))
}

fn revlex_exps(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// Revlex on two squarefree monomials of the same degree given by their supports.
pub fn revlex_sets(a: &FormSubset, b: &FormSubset) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    for (x, y) in a.as_slice().iter().rev().zip(b.as_slice().iter().rev()) {
        if x != y {
            // the larger top index belongs to the smaller monomial
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// Ordering data of a generator: its partition, then its normal-form layers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TauKey {
    pub partition: Partition,
    pub layer_chain: NormalForm,
}

impl TauKey {
    pub fn of(m: &FMonomial, params: &StarParams) -> Result<Self> {
        let (layer_chain, partition) = generator_data(m, params)?;
        Ok(TauKey {
            partition,
            layer_chain,
        })
    }
}

impl Ord for TauKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.partition
            .alex_cmp(&other.partition)
            .then_with(|| layered_revlex(&self.layer_chain, &other.layer_chain))
    }
}

impl PartialOrd for TauKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn layered_revlex(a: &NormalForm, b: &NormalForm) -> Ordering {
    a.layers()
        .iter()
        .zip(b.layers())
        .map(|(x, y)| revlex_sets(x, y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Tie-break between generators with the same partition, layer by layer.
/// Layer-by-layer revlex. Works for any two monomials whose layers have the
/// same sizes, which for generators means the same partition.
pub fn ggrevlex_compare(m: &FMonomial, n: &FMonomial, _params: &StarParams) -> Result<Ordering> {
    let a = normal_form(m)?;
    let b = normal_form(n)?;
    let sizes = |f: &NormalForm| {
        Partition::from_parts_unchecked(f.layers().iter().map(FormSubset::len).collect())
    };
    let (pa, pb) = (sizes(&a), sizes(&b));
    if pa != pb {
        return Err(Error::PartitionMismatch(pa, pb));
    }
    Ok(layered_revlex(&a, &b))
}

pub fn tau_compare(m: &FMonomial, n: &FMonomial, params: &StarParams) -> Result<Ordering> {
    Ok(TauKey::of(m, params)?.cmp(&TauKey::of(n, params)?))
}

/// Position of the last drop in `d_1, …, d_{t−1}`, counting a drop at 1.
pub fn index_of_overlap(p: &Partition) -> Result<usize> {
    let d = p.parts();
    if d.len() < 2 {
        return Err(Error::LengthOne(p.clone()));
    }
    Ok((2..d.len())
        .rev()
        .find(|&j| d[j - 1] < d[j - 2])
        .unwrap_or(1))
}

/// Whether `p = [c, …, c, r]` with `m = qc + r`, `1 ≤ r ≤ c`.
pub fn is_maximal_partition(p: &Partition, params: &StarParams) -> bool {
    let (c, m) = (params.c(), params.m());
    let q = (m - 1) / c;
    let r = m - q * c;
    p.len() == q + 1 && p.parts()[..q].iter().all(|&d| d == c) && p.last() == r
}

/// Position, within `b` listed increasingly, of the largest form dividing `m`.
pub fn m_index(b: &FormSubset, m: &FMonomial) -> Result<usize> {
    let supp = m.support();
    m_index_of_set(b, &supp)
}

fn m_index_of_set(b: &FormSubset, supp: &FormSubset) -> Result<usize> {
    let top = supp.largest().ok_or(Error::EmptyMonomial)?;
    if !supp.is_subset_of(b) {
        return Err(Error::SupportOutsideSubset);
    }
    Ok(b.position(top).expect("support lies inside b"))
}

enum SetCase {
    Maximal,
    Flat { i0: usize },
    Drop { i0: usize },
}

fn classify(p: &Partition, params: &StarParams) -> SetCase {
    if is_maximal_partition(p, params) {
        return SetCase::Maximal;
    }
    let i0 = index_of_overlap(p).expect("non-maximal partitions have length at least 2");
    if p.last() == p.part(i0) {
        SetCase::Flat { i0 }
    } else {
        SetCase::Drop { i0 }
    }
}

/// `|set(M)|`, the number of forms generating `(N : N >_τ M) : M`.
pub fn set_size(m: &FMonomial, params: &StarParams) -> Result<usize> {
    let (nf, p) = generator_data(m, params)?;
    let (s, c) = (params.s(), params.c());
    let last = nf.layer(nf.len());
    Ok(match classify(&p, params) {
        SetCase::Maximal => last.largest().expect("layers are nonempty") + c - s - p.last(),
        SetCase::Flat { i0 } => c - p.part(i0),
        SetCase::Drop { i0 } => {
            let pos = m_index_of_set(nf.layer(i0), last)?;
            c - p.part(i0) + pos - (s - c + p.last())
        }
    })
}

/// The forms that generate `(N : N >_τ M) : M`.
pub fn set_elements(m: &FMonomial, params: &StarParams) -> Result<FormSubset> {
    let (nf, p) = generator_data(m, params)?;
    let s = params.s();
    let last = nf.layer(nf.len());
    Ok(match classify(&p, params) {
        SetCase::Maximal => {
            let top = last.largest().expect("layers are nonempty");
            last.complement(s)
                .iter()
                .filter(|&j| j < top)
                .collect_subset()
        }
        SetCase::Flat { i0 } => nf.layer(i0).complement(s),
        SetCase::Drop { i0 } => {
            let big = nf.layer(i0);
            let pos = m_index_of_set(big, last)?;
            let extra = big
                .difference(last)
                .iter()
                .filter(|&j| big.position(j).expect("j is in big") < pos)
                .collect_subset();
            big.complement(s).union(&extra)
        }
    })
}

trait CollectSubset {
    fn collect_subset(self) -> FormSubset;
}

impl<I: Iterator<Item = usize>> CollectSubset for I {
    fn collect_subset(self) -> FormSubset {
        FormSubset::new(self).expect("form indices are positive")
    }
}
