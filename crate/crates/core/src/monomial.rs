//! Monomials in the forms `F_1, …, F_s` and subsets of form indices.
//!
//! Forms are addressed by 1-based index everywhere in the public surface.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `F_1^{e_1} ⋯ F_s^{e_s}`, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FMonomial(Vec<u32>);

impl FMonomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        FMonomial(exponents)
    }

    pub fn unit(s: usize) -> Self {
        FMonomial(vec![0; s])
    }

    /// The squarefree product of the forms in `subset`.
    pub fn squarefree(s: usize, subset: &FormSubset) -> Self {
        let mut e = vec![0; s];
        for j in subset.iter() {
            e[j - 1] = 1;
        }
        FMonomial(e)
    }

    /// Checks that the vector has the length expected for `s` forms.
    pub fn with_len(exponents: Vec<u32>, s: usize) -> Result<Self> {
        if exponents.len() != s {
            return Err(Error::LengthMismatch {
                expected: s,
                found: exponents.len(),
            });
        }
        Ok(FMonomial(exponents))
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `F_j` (1-based).
    pub fn exponent(&self, j: usize) -> u32 {
        self.0[j - 1]
    }

    pub fn num_forms(&self) -> usize {
        self.0.len()
    }

    /// Number of forms in the product, counted with multiplicity.
    pub fn f_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn max_exponent(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn support(&self) -> FormSubset {
        FormSubset(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i + 1)
                .collect(),
        )
    }

    /// Componentwise divisibility `self | other`.
    pub fn divides(&self, other: &FMonomial) -> bool {
        debug_assert_eq!(self.0.len(), other.0.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &FMonomial) -> FMonomial {
        FMonomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &FMonomial) -> FMonomial {
        FMonomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        )
    }

    /// `self / gcd(self, other)`: the generator of the principal colon `(self) : other`.
    pub fn quotient_by(&self, other: &FMonomial) -> FMonomial {
        FMonomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> FMonomial {
        FMonomial(self.0.iter().map(|&e| e * k).collect())
    }
}

impl Mul for &FMonomial {
    type Output = FMonomial;

    fn mul(self, rhs: &FMonomial) -> FMonomial {
        debug_assert_eq!(self.0.len(), rhs.0.len());
        FMonomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for FMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// A set of 1-based form indices, kept sorted increasingly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FormSubset(Vec<usize>);

impl FormSubset {
    /// Builds a subset from arbitrary indices; duplicates are merged. Index 0 is rejected.
    pub fn new<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let mut v: Vec<usize> = indices.into_iter().collect();
        if v.contains(&0) {
            return Err(Error::InvalidRange {
                what: "form index",
                value: 0,
                lo: 1,
                hi: i64::MAX,
            });
        }
        v.sort_unstable();
        v.dedup();
        Ok(FormSubset(v))
    }

    pub(crate) fn from_sorted(v: Vec<usize>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        FormSubset(v)
    }

    pub fn empty() -> Self {
        FormSubset(Vec::new())
    }

    /// `{1, …, s}`.
    pub fn full(s: usize) -> Self {
        FormSubset((1..=s).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.0.binary_search(&j).is_ok()
    }

    pub fn largest(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// True when every member lies in `{1, …, s}`.
    pub fn within(&self, s: usize) -> bool {
        self.0.last().is_none_or(|&j| j <= s)
    }

    pub fn is_subset_of(&self, other: &FormSubset) -> bool {
        self.0.iter().all(|&j| other.contains(j))
    }

    /// `{1, …, s} ∖ self`.
    pub fn complement(&self, s: usize) -> FormSubset {
        FormSubset((1..=s).filter(|&j| !self.contains(j)).collect())
    }

    pub fn union(&self, other: &FormSubset) -> FormSubset {
        let mut v: Vec<usize> = self.0.iter().chain(&other.0).copied().collect();
        v.sort_unstable();
        v.dedup();
        FormSubset(v)
    }

    pub fn difference(&self, other: &FormSubset) -> FormSubset {
        FormSubset(self.iter().filter(|&j| !other.contains(j)).collect())
    }

    /// 1-based position of `j` among the members listed increasingly.
    pub fn position(&self, j: usize) -> Option<usize> {
        self.0.binary_search(&j).ok().map(|p| p + 1)
    }
}

impl fmt::Display for FormSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, j) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{j}")?;
        }
        f.write_str("}")
    }
}
