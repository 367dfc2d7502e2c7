//! Products of leg-embedded operators evaluated column by column.
//!
//! Residuals such as `Φ12 Φ13 Φ23 − Φ23 Φ12` live on three or four legs, where
//! the dense matrices get large quickly. A [`Word`] never materializes the
//! embedded factors: it pushes each basis vector through the factors as a
//! sparse vector.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::tensor::field::{FieldSpec, Scalar};
use crate::tensor::legs::{total_dim, EmbedPlan, LegMap, Space};
use crate::tensor::matrix::Matrix;

/// Sorted `(index, value)` pairs with no zero values.
pub type SparseVec = Vec<(usize, Scalar)>;

/// One factor `X_{positions}` of a word.
#[derive(Clone, Debug)]
pub struct Embedded {
    plan: EmbedPlan,
    cols: Arc<Vec<Vec<(usize, Scalar)>>>,
    domain: Vec<Space>,
}

impl Embedded {
    pub fn new(x: &LegMap, positions: &[usize], ambient: &[Space]) -> Result<Self> {
        Ok(Embedded {
            plan: EmbedPlan::new(x, positions, ambient)?,
            cols: Arc::new(x.matrix().sparse_columns()),
            domain: ambient.to_vec(),
        })
    }

    pub fn domain(&self) -> &[Space] {
        &self.domain
    }

    pub fn codomain(&self) -> &[Space] {
        &self.plan.out_legs
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (col, coeff) in v {
            for (row, x) in self.plan.apply_basis(*col, &self.cols) {
                let term = coeff * &x;
                acc.entry(row).and_modify(|e| *e = &*e + &term).or_insert(term);
            }
        }
        acc.into_iter().filter(|(_, s)| !s.is_zero()).collect()
    }
}

/// A product of embedded factors, written left to right as in `Φ12 Φ13 Φ23`
/// (the rightmost factor acts first).
#[derive(Clone, Debug)]
pub struct Word {
    field: FieldSpec,
    factors: Vec<Embedded>,
}

impl Word {
    pub fn new(field: FieldSpec, factors: Vec<Embedded>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::ShapeMismatch("empty word".into()));
        }
        for w in factors.windows(2) {
            if w[0].domain() != w[1].codomain() {
                return Err(Error::LegMismatch(format!(
                    "adjacent factors do not compose: {:?} vs {:?}",
                    w[0].domain().iter().map(|s| s.label()).collect::<Vec<_>>(),
                    w[1].codomain().iter().map(|s| s.label()).collect::<Vec<_>>()
                )));
            }
        }
        Ok(Word { field, factors })
    }

    /// Convenience: each entry is `(map, positions)` on the given ambient domain
    /// legs of the rightmost factor; ambients of earlier factors are inferred.
    pub fn build(field: FieldSpec, domain: &[Space], factors: &[(&LegMap, &[usize])]) -> Result<Self> {
        let mut ambient = domain.to_vec();
        let mut out = Vec::with_capacity(factors.len());
        for (map, pos) in factors.iter().rev() {
            if map.field() != field {
                return Err(Error::FieldMismatch(field, map.field()));
            }
            let e = Embedded::new(map, pos, &ambient)?;
            ambient = e.codomain().to_vec();
            out.push(e);
        }
        out.reverse();
        Word::new(field, out)
    }

    pub fn domain(&self) -> &[Space] {
        self.factors.last().unwrap().domain()
    }

    pub fn codomain(&self) -> &[Space] {
        self.factors[0].codomain()
    }

    pub fn column(&self, j: usize) -> SparseVec {
        let start = vec![(j, self.field.one())];
        self.factors.iter().rev().fold(start, |v, f| f.apply(&v))
    }

    pub fn to_legmap(&self) -> LegMap {
        let (rows, cols) = (total_dim(self.codomain()), total_dim(self.domain()));
        let mut m = Matrix::zeros(self.field, rows, cols);
        for j in 0..cols {
            for (i, v) in self.column(j) {
                m.set(i, j, v);
            }
        }
        LegMap::new(self.domain().to_vec(), self.codomain().to_vec(), m).expect("consistent legs")
    }

    /// Number of nonzero entries of `self − other`.
    pub fn residual(&self, other: &Word) -> Result<usize> {
        if self.domain() != other.domain() || self.codomain() != other.codomain() {
            return Err(Error::LegMismatch("words act between different legs".into()));
        }
        Ok((0..total_dim(self.domain()))
            .into_par_iter()
            .map(|j| sparse_diff_count(&self.column(j), &other.column(j)))
            .sum())
    }
}

/// Number of indices where two sparse vectors differ.
pub fn sparse_diff_count(a: &SparseVec, b: &SparseVec) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) if x.0 == y.0 => {
                n += usize::from(x.1 != y.1);
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x.0 < y.0 => {
                n += 1;
                i += 1;
            }
            (Some(_), None) => {
                n += 1;
                i += 1;
            }
            _ => {
                n += 1;
                j += 1;
            }
        }
    }
    n
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rational;

    #[test]
    fn word_matches_dense_product() {
        let (v, m) = (Space::new("V", 2).unwrap(), Space::new("M", 3).unwrap());
        let f = LegMap::new(
            vec![v.clone(), m.clone()],
            vec![v.clone(), v.clone()],
            Matrix::from_fn(Q, 4, 6, |i, j| Q.from_i64(((3 * i + j) % 4) as i64 - 1)),
        )
        .unwrap();
        let amb = [v.clone(), m.clone(), m.clone()];
        let w = Word::build(Q, &amb, &[(&f, &[0, 1]), (&f, &[0, 2])]).unwrap();
        let f13 = f.embed_legs(&[0, 2], &amb).unwrap();
        let f12 = f.embed_legs(&[0, 1], f13.codomain()).unwrap();
        assert_eq!(w.to_legmap(), f12.compose(&f13).unwrap());
    }

    #[test]
    fn diff_count_merges() {
        let q = |n| Q.from_i64(n);
        let a = vec![(0, q(1)), (3, q(2)), (5, q(1))];
        let b = vec![(1, q(1)), (3, q(2)), (5, q(4))];
        assert_eq!(sparse_diff_count(&a, &b), 3);
        assert_eq!(sparse_diff_count(&a, &a), 0);
        assert_eq!(sparse_diff_count(&a, &vec![]), 3);
    }
}
