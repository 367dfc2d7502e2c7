//! Subspaces in canonical reduced-row-echelon form, kernels, and exact solves.

use crate::error::{Error, Result};
use crate::tensor::field::{FieldSpec, Scalar};
use crate::tensor::legs::LegMap;
use crate::tensor::matrix::{rref_rows, Matrix};

/// A subspace of `k^n` stored as the nonzero rows of its RREF basis matrix.
/// Two subspaces are equal iff their `Subspace` values are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldSpec,
    ambient: usize,
    basis: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(field: FieldSpec, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::ShapeMismatch(format!(
                "vector of length {} in a {ambient}-dimensional space",
                v.len()
            )));
        }
        let mut rows = vectors;
        let pivots = rref_rows(&mut rows, ambient);
        rows.truncate(pivots.len());
        Ok(Subspace {
            field,
            ambient,
            basis: rows,
            pivots,
        })
    }

    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace {
            field: m.field(),
            ambient: m.cols(),
            basis,
            pivots,
        }
    }

    /// Null space `{x : m x = 0}`.
    pub fn kernel(m: &Matrix) -> Self {
        let field = m.field();
        let n = m.cols();
        let (r, pivots) = m.rref();
        let free = (0..n).filter(|c| !pivots.contains(c));
        let vectors = free
            .map(|f| {
                let mut v = vec![field.zero(); n];
                v[f] = field.one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f);
                }
                v
            })
            .collect();
        Subspace::span(field, n, vectors).expect("consistent lengths")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the RREF basis, or `None` when `v` is outside.
    /// The coordinate on basis vector `i` is `v[pivot_i]`.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if v.len() != self.ambient {
            return None;
        }
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        (self.combine(&coords) == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_all(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.ambient];
        for (c, b) in coords.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(b) {
                if !x.is_zero() {
                    *o = &*o + &(c * x);
                }
            }
        }
        out
    }

    /// `ambient × dim` matrix whose columns are the basis vectors.
    pub fn inclusion(&self) -> Matrix {
        Matrix::from_fn(self.field, self.ambient, self.dim(), |i, j| {
            self.basis[j][i].clone()
        })
    }

    /// `dim × ambient` matrix reading the pivot entries; a left inverse of
    /// [`Subspace::inclusion`].
    pub fn coordinate_map(&self) -> Matrix {
        Matrix::from_fn(self.field, self.dim(), self.ambient, |i, j| {
            self.field.from_i64((self.pivots[i] == j) as i64)
        })
    }
}

/// RREF representatives of the span of the given maps (all with the same
/// legs), in pivot order.
pub fn image_basis(maps: &[LegMap]) -> Result<Vec<LegMap>> {
    let Some(first) = maps.first() else {
        return Ok(Vec::new());
    };
    for m in maps {
        if m.domain() != first.domain() || m.codomain() != first.codomain() {
            return Err(Error::LegMismatch(
                "image_basis needs maps with equal legs".into(),
            ));
        }
        if m.field() != first.field() {
            return Err(Error::FieldMismatch(first.field(), m.field()));
        }
    }
    let (r, c) = (first.matrix().rows(), first.matrix().cols());
    let vectors = maps.iter().map(|m| m.matrix().data().to_vec()).collect();
    let sub = Subspace::span(first.field(), r * c, vectors)?;
    sub.basis()
        .iter()
        .map(|v| {
            LegMap::new(
                first.domain().to_vec(),
                first.codomain().to_vec(),
                Matrix::new(first.field(), r, c, v.clone())?,
            )
        })
        .collect()
}

/// Basis of the null space of `a`, canonical RREF.
pub fn kernel_basis(a: &LegMap) -> Vec<Vec<Scalar>> {
    Subspace::kernel(a.matrix()).basis().to_vec()
}

/// Some exact solution of `m x = b`, or `None` if the system is inconsistent.
pub fn solve(m: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    if b.len() != m.rows() {
        return Err(Error::ShapeMismatch(format!(
            "right-hand side of length {} for {} rows",
            b.len(),
            m.rows()
        )));
    }
    let n = m.cols();
    let mut rows: Vec<Vec<Scalar>> = (0..m.rows())
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let pivots = rref_rows(&mut rows, n + 1);
    if pivots.last() == Some(&n) {
        return Ok(None);
    }
    let mut x = vec![m.field().zero(); n];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = rows[row][n].clone();
    }
    Ok(Some(x))
}

/// Solves `m x = b` for several right-hand sides with one elimination.
pub fn solve_many(m: &Matrix, rhs: &[Vec<Scalar>]) -> Result<Vec<Option<Vec<Scalar>>>> {
    if let Some(b) = rhs.iter().find(|b| b.len() != m.rows()) {
        return Err(Error::ShapeMismatch(format!(
            "right-hand side of length {} for {} rows",
            b.len(),
            m.rows()
        )));
    }
    let n = m.cols();
    let mut rows: Vec<Vec<Scalar>> = (0..m.rows())
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.extend(rhs.iter().map(|b| b[i].clone()));
            r
        })
        .collect();
    let pivots = rref_rows(&mut rows, n);
    let rank = pivots.len();
    Ok((0..rhs.len())
        .map(|k| {
            let c = n + k;
            if rows[rank..].iter().any(|r| !r[c].is_zero()) {
                return None;
            }
            let mut x = vec![m.field().zero(); n];
            for (row, &p) in pivots.iter().enumerate() {
                x[p] = rows[row][c].clone();
            }
            Some(x)
        })
        .collect())
}

pub fn solve_linear(a: &LegMap, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
    solve(a.matrix(), b)
}
