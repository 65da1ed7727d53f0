//! Layered normal form `M = M^{(1)} ⋯ M^{(t)}` and the symbolic degree.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{FMonomial, FormSubset};
use crate::params::StarParams;

/// The supports `S_1 ⊇ S_2 ⊇ … ⊇ S_t` of the squarefree layers of a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalForm {
    layers: Vec<FormSubset>,
}

impl NormalForm {
    /// Validates nesting and nonemptiness.
    pub fn new(layers: Vec<FormSubset>) -> Result<Self> {
        check_layers(&layers)?;
        Ok(NormalForm { layers })
    }

    pub fn layers(&self) -> &[FormSubset] {
        &self.layers
    }

    /// `S_i`, 1-based.
    pub fn layer(&self, i: usize) -> &FormSubset {
        &self.layers[i - 1]
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    pub fn to_monomial(&self, s: usize) -> FMonomial {
        let mut e = vec![0u32; s];
        for layer in &self.layers {
            for j in layer.iter() {
                e[j - 1] += 1;
            }
        }
        FMonomial::new(e)
    }
}

/// Renders as a product of layers, e.g. `(F1 F2 F3)(F1)`.
impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for layer in &self.layers {
            f.write_str("(")?;
            for (k, j) in layer.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "F{j}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

fn check_layers(layers: &[FormSubset]) -> Result<()> {
    for (k, layer) in layers.iter().enumerate() {
        if layer.is_empty() {
            return Err(Error::EmptyLayer { index: k + 1 });
        }
        if k > 0 && !layer.is_subset_of(&layers[k - 1]) {
            return Err(Error::NotNested { index: k + 1 });
        }
    }
    Ok(())
}

pub fn support(m: &FMonomial) -> FormSubset {
    m.support()
}

pub fn normal_form(m: &FMonomial) -> Result<NormalForm> {
    if m.is_unit() {
        return Err(Error::EmptyMonomial);
    }
    let t = m.max_exponent();
    let layers = (1..=t)
        .map(|i| {
            let idx = m
                .exponents()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e >= i)
                .map(|(j, _)| j + 1)
                .collect();
            FormSubset::from_sorted(idx)
        })
        .collect();
    Ok(NormalForm { layers })
}

/// Rebuilds the monomial in `s` forms whose normal form is `layers`.
pub fn from_layers(layers: &[FormSubset], s: usize) -> Result<FMonomial> {
    check_layers(layers)?;
    if let Some(bad) = layers.iter().find(|l| !l.within(s)) {
        return Err(Error::InvalidRange {
            what: "form index",
            value: bad.largest().unwrap_or(0) as i64,
            lo: 1,
            hi: s as i64,
        });
    }
    Ok(NormalForm {
        layers: layers.to_vec(),
    }
    .to_monomial(s))
}

/// Length of the normal form, which is the largest exponent.
pub fn lambda(m: &FMonomial) -> Result<usize> {
    if m.is_unit() {
        return Err(Error::EmptyMonomial);
    }
    Ok(m.max_exponent() as usize)
}

/// Symbolic degree `Σ_i max(0, c − s + |S_i|)`; the unit has degree 0.
pub fn sdeg(m: &FMonomial, params: &StarParams) -> u64 {
    sdeg_raw(m.exponents(), params.s(), params.c())
}

pub(crate) fn sdeg_raw(exps: &[u32], s: usize, c: usize) -> u64 {
    let floor = s - c;
    let mut sorted: Vec<u32> = exps.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    // |S_i| is the number of exponents ≥ i; walk the sorted exponents once
    let mut total = 0u64;
    let mut i = 1u32;
    let top = sorted.first().copied().unwrap_or(0);
    let mut k = sorted.len();
    while i <= top {
        while k > 0 && sorted[k - 1] < i {
            k -= 1;
        }
        if k <= floor {
            break;
        }
        total += (k - floor) as u64;
        i += 1;
    }
    total
}
