//! Linear maps between tensor products of labelled spaces.
//!
//! The basis of a leg list `[A, B, C]` is ordered lexicographically with the
//! leftmost leg most significant: `e_a ⊗ e_b ⊗ e_c` has index
//! `(a * dim B + b) * dim C + c`. Every other module inherits this convention.

use std::fmt;

use crate::error::{Error, Result};
use crate::tensor::field::{FieldSpec, Scalar};
use crate::tensor::matrix::Matrix;

/// A finite-dimensional vector space with a label.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    label: String,
    dim: usize,
}

impl Space {
    pub fn new(label: impl Into<String>, dim: usize) -> Result<Self> {
        let label = label.into();
        if dim == 0 {
            return Err(Error::InvalidSpace(format!("{label} has dimension 0")));
        }
        if !is_identifier(&label) {
            return Err(Error::InvalidSpace(format!("bad label {label:?}")));
        }
        Ok(Space { label, dim })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The space `End(self)` with basis `E_ij` at index `i * dim + j`.
    pub fn endomorphisms(&self) -> Space {
        Space {
            label: format!("End_{}", self.label),
            dim: self.dim * self.dim,
        }
    }

    /// A single space standing for `self ⊗ other`.
    pub fn tensor(&self, other: &Space) -> Space {
        Space {
            label: format!("{}_{}", self.label, other.label),
            dim: self.dim * other.dim,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.label, self.dim)
    }
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

pub fn total_dim(legs: &[Space]) -> usize {
    legs.iter().map(Space::dim).product()
}

/// Splits a lexicographic index into per-leg indices.
pub fn unflatten(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = index % d;
        index /= d;
    }
    out
}

pub fn flatten(indices: &[usize], dims: &[usize]) -> usize {
    indices.iter().zip(dims).fold(0, |acc, (&i, &d)| acc * d + i)
}

fn dims(legs: &[Space]) -> Vec<usize> {
    legs.iter().map(Space::dim).collect()
}

fn show(legs: &[Space]) -> String {
    if legs.is_empty() {
        return "k".into();
    }
    legs.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("⊗")
}

/// A dense matrix whose rows are indexed by the codomain legs and columns by
/// the domain legs. An empty leg list is the ground field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegMap {
    domain: Vec<Space>,
    codomain: Vec<Space>,
    matrix: Matrix,
}

impl LegMap {
    pub fn new(domain: Vec<Space>, codomain: Vec<Space>, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != total_dim(&codomain) || matrix.cols() != total_dim(&domain) {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix for {} -> {}",
                matrix.rows(),
                matrix.cols(),
                show(&domain),
                show(&codomain)
            )));
        }
        Ok(LegMap {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn identity(field: FieldSpec, legs: &[Space]) -> Self {
        LegMap {
            domain: legs.to_vec(),
            codomain: legs.to_vec(),
            matrix: Matrix::identity(field, total_dim(legs)),
        }
    }

    pub fn zero(field: FieldSpec, domain: &[Space], codomain: &[Space]) -> Self {
        LegMap {
            domain: domain.to_vec(),
            codomain: codomain.to_vec(),
            matrix: Matrix::zeros(field, total_dim(codomain), total_dim(domain)),
        }
    }

    /// Builds a map from its action on basis vectors: `f(column multi-index)`
    /// yields `(row multi-index, coefficient)` pairs, summed.
    pub fn from_basis_action<I>(
        field: FieldSpec,
        domain: &[Space],
        codomain: &[Space],
        mut f: impl FnMut(&[usize]) -> I,
    ) -> Self
    where
        I: IntoIterator<Item = (Vec<usize>, Scalar)>,
    {
        let (dd, cd) = (dims(domain), dims(codomain));
        let mut m = Matrix::zeros(field, total_dim(codomain), total_dim(domain));
        for col in 0..total_dim(domain) {
            for (row, v) in f(&unflatten(col, &dd)) {
                m.add_at(flatten(&row, &cd), col, &v);
            }
        }
        LegMap {
            domain: domain.to_vec(),
            codomain: codomain.to_vec(),
            matrix: m,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.matrix.field()
    }

    pub fn domain(&self) -> &[Space] {
        &self.domain
    }

    pub fn codomain(&self) -> &[Space] {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn is_endomorphism(&self) -> bool {
        self.domain == self.codomain
    }

    /// Same matrix, new leg description; total dimensions must agree.
    pub fn regroup(&self, domain: Vec<Space>, codomain: Vec<Space>) -> Result<Self> {
        LegMap::new(domain, codomain, self.matrix.clone())
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &LegMap) -> Result<LegMap> {
        if rhs.codomain != self.domain {
            return Err(Error::LegMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                show(&self.domain),
                show(&self.codomain),
                show(&rhs.domain),
                show(&rhs.codomain)
            )));
        }
        Ok(LegMap {
            domain: rhs.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.mul(&rhs.matrix)?,
        })
    }

    /// Composes right to left: `chain(&[a, b, c]) = a ∘ b ∘ c`.
    pub fn chain(maps: &[&LegMap]) -> Result<LegMap> {
        let (last, rest) = maps
            .split_last()
            .ok_or_else(|| Error::ShapeMismatch("empty composition".into()))?;
        rest.iter()
            .rev()
            .try_fold((*last).clone(), |acc, m| m.compose(&acc))
    }

    pub fn add(&self, o: &LegMap) -> Result<LegMap> {
        self.same_legs(o)?;
        Ok(LegMap {
            matrix: self.matrix.add(&o.matrix)?,
            ..self.clone()
        })
    }

    pub fn sub(&self, o: &LegMap) -> Result<LegMap> {
        self.same_legs(o)?;
        Ok(LegMap {
            matrix: self.matrix.sub(&o.matrix)?,
            ..self.clone()
        })
    }

    pub fn scale(&self, s: &Scalar) -> LegMap {
        LegMap {
            matrix: self.matrix.scale(s),
            ..self.clone()
        }
    }

    fn same_legs(&self, o: &LegMap) -> Result<()> {
        if self.domain != o.domain || self.codomain != o.codomain {
            return Err(Error::LegMismatch(format!(
                "{} -> {} vs {} -> {}",
                show(&self.domain),
                show(&self.codomain),
                show(&o.domain),
                show(&o.codomain)
            )));
        }
        Ok(())
    }

    /// Number of entries where two maps with identical legs differ.
    pub fn residual(&self, o: &LegMap) -> Result<usize> {
        self.same_legs(o)?;
        self.matrix.diff_count(&o.matrix)
    }

    pub fn inverse(&self) -> Result<LegMap> {
        let matrix = self.matrix.inverse().map_err(|_| {
            Error::Singular(format!("map {} -> {}", show(&self.domain), show(&self.codomain)))
        })?;
        Ok(LegMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            matrix,
        })
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.is_invertible()
    }

    /// `A ⊗ B`: legs concatenate and entry `[(i,k),(j,l)] = A[i,j]·B[k,l]`.
    pub fn kron(&self, o: &LegMap) -> Result<LegMap> {
        Ok(LegMap {
            domain: [self.domain.clone(), o.domain.clone()].concat(),
            codomain: [self.codomain.clone(), o.codomain.clone()].concat(),
            matrix: self.matrix.kron(&o.matrix)?,
        })
    }

    /// Permutation of tensor factors: input leg `j` is moved to output
    /// position `perm[j]`.
    pub fn permute_legs(field: FieldSpec, perm: &[usize], legs: &[Space]) -> Result<LegMap> {
        if perm.len() != legs.len() {
            return Err(Error::ShapeMismatch(format!(
                "permutation of length {} for {} legs",
                perm.len(),
                legs.len()
            )));
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::IndexOutOfRange(format!("{perm:?} is not a permutation")));
            }
        }
        let mut out_legs = legs.to_vec();
        for (j, &p) in perm.iter().enumerate() {
            out_legs[p] = legs[j].clone();
        }
        let one = field.one();
        Ok(LegMap::from_basis_action(field, legs, &out_legs, |idx| {
            let mut out = vec![0; idx.len()];
            for (j, &p) in perm.iter().enumerate() {
                out[p] = idx[j];
            }
            [(out, one.clone())]
        }))
    }

    /// The flip `t: A ⊗ B → B ⊗ A`.
    pub fn flip(field: FieldSpec, a: &Space, b: &Space) -> LegMap {
        Self::permute_legs(field, &[1, 0], &[a.clone(), b.clone()]).expect("valid permutation")
    }

    /// `X_{positions}` on `ambient`: `X` acts on the legs at `positions`
    /// (strictly increasing, matching `X.domain` in order) and the identity on
    /// the rest. The codomain is `ambient` with `X.codomain` substituted at
    /// `positions`, so `X` may change leg types.
    pub fn embed_legs(&self, positions: &[usize], ambient: &[Space]) -> Result<LegMap> {
        let plan = EmbedPlan::new(self, positions, ambient)?;
        let cols = self.matrix.sparse_columns();
        let mut m = Matrix::zeros(self.field(), total_dim(&plan.out_legs), total_dim(ambient));
        for col in 0..total_dim(ambient) {
            for (row, v) in plan.apply_basis(col, &cols) {
                m.add_at(row, col, &v);
            }
        }
        Ok(LegMap {
            domain: ambient.to_vec(),
            codomain: plan.out_legs,
            matrix: m,
        })
    }

    /// Fixes codomain index `i` on leg `out_leg` and domain index `j` on leg
    /// `in_leg`, leaving a map between the remaining legs. For a two-leg `T`
    /// viewed in `End(A)⊗End(B)`, `slice(T, 0, 0, i, j)` is `(ω_ij ⊗ I)(T)`.
    pub fn slice(&self, out_leg: usize, in_leg: usize, i: usize, j: usize) -> Result<LegMap> {
        let (Some(out_space), Some(in_space)) = (self.codomain.get(out_leg), self.domain.get(in_leg)) else {
            return Err(Error::IndexOutOfRange(format!(
                "legs ({out_leg}, {in_leg}) of {} -> {}",
                show(&self.domain),
                show(&self.codomain)
            )));
        };
        if i >= out_space.dim || j >= in_space.dim {
            return Err(Error::IndexOutOfRange(format!(
                "slice ({i}, {j}) of {out_space} / {in_space}"
            )));
        }
        let mut dom = self.domain.clone();
        dom.remove(in_leg);
        let mut cod = self.codomain.clone();
        cod.remove(out_leg);
        let (fd, fc) = (dims(&self.domain), dims(&self.codomain));
        let (dd, cd) = (dims(&dom), dims(&cod));
        let matrix = Matrix::from_fn(self.field(), total_dim(&cod), total_dim(&dom), |r, c| {
            let mut ri = unflatten(r, &cd);
            ri.insert(out_leg, i);
            let mut ci = unflatten(c, &dd);
            ci.insert(in_leg, j);
            self.matrix.get(flatten(&ri, &fc), flatten(&ci, &fd)).clone()
        });
        Ok(LegMap {
            domain: dom,
            codomain: cod,
            matrix,
        })
    }
}

impl LegMap {
    /// For `X: A⊗B → C⊗D`, the coordinates of `X` in `Hom(A,C) ⊗ Hom(B,D)`,
    /// each factor vectorized row-major (`Hom(A,C)` index `c·dim A + a`).
    pub fn split_pair(&self) -> Result<Vec<Scalar>> {
        let ([a, b], [c, d]) = (&self.domain[..], &self.codomain[..]) else {
            return Err(Error::LegMismatch(
                "split_pair needs a map between two-leg spaces".into(),
            ));
        };
        let (a, b, c, d) = (a.dim, b.dim, c.dim, d.dim);
        let mut out = vec![self.field().zero(); a * b * c * d];
        for r in 0..c * d {
            for col in 0..a * b {
                let x = self.matrix.get(r, col);
                if x.is_zero() {
                    continue;
                }
                let (ci, di, ai, bi) = (r / d, r % d, col / b, col % b);
                out[(ci * a + ai) * (d * b) + di * b + bi] = x.clone();
            }
        }
        Ok(out)
    }

    /// Inverse of [`LegMap::split_pair`].
    pub fn join_pair(
        field: FieldSpec,
        domain: [&Space; 2],
        codomain: [&Space; 2],
        v: &[Scalar],
    ) -> Result<LegMap> {
        let (a, b, c, d) = (domain[0].dim, domain[1].dim, codomain[0].dim, codomain[1].dim);
        if v.len() != a * b * c * d {
            return Err(Error::ShapeMismatch(format!(
                "{} coordinates for a pair operator",
                v.len()
            )));
        }
        let matrix = Matrix::from_fn(field, c * d, a * b, |r, col| {
            let (ci, di, ai, bi) = (r / d, r % d, col / b, col % b);
            v[(ci * a + ai) * (d * b) + di * b + bi].clone()
        });
        LegMap::new(
            vec![domain[0].clone(), domain[1].clone()],
            vec![codomain[0].clone(), codomain[1].clone()],
            matrix,
        )
    }
}

/// Index bookkeeping for applying a map to a subset of legs.
///
/// With equal domain/codomain leg counts any increasing position set is
/// allowed; otherwise the positions must be contiguous and the codomain legs
/// are spliced in their place.
#[derive(Clone, Debug)]
pub(crate) struct EmbedPlan {
    positions: Vec<usize>,
    in_dims: Vec<usize>,
    sel_in_dims: Vec<usize>,
    sel_out_dims: Vec<usize>,
    /// Per output leg: `Ok(k)` = k-th codomain leg of the map, `Err(a)` = ambient leg a.
    slots: Vec<std::result::Result<usize, usize>>,
    out_dims: Vec<usize>,
    pub(crate) out_legs: Vec<Space>,
}

impl EmbedPlan {
    pub(crate) fn new(x: &LegMap, positions: &[usize], ambient: &[Space]) -> Result<Self> {
        if positions.len() != x.domain.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} positions for a map with {} domain legs",
                positions.len(),
                x.domain.len()
            )));
        }
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::IndexOutOfRange(format!(
                "positions {positions:?} must be strictly increasing"
            )));
        }
        for (k, &p) in positions.iter().enumerate() {
            match ambient.get(p) {
                Some(s) if *s == x.domain[k] => {}
                Some(s) => {
                    return Err(Error::LegMismatch(format!(
                        "position {p} holds {s}, map expects {}",
                        x.domain[k]
                    )))
                }
                None => {
                    return Err(Error::IndexOutOfRange(format!(
                        "position {p} outside {} legs",
                        ambient.len()
                    )))
                }
            }
        }
        let slots: Vec<_> = if x.domain.len() == x.codomain.len() {
            (0..ambient.len())
                .map(|a| positions.iter().position(|&p| p == a).ok_or(a))
                .collect()
        } else {
            let contiguous = positions.windows(2).all(|w| w[1] == w[0] + 1);
            if !contiguous && !positions.is_empty() {
                return Err(Error::LegMismatch(
                    "a map that changes the number of legs needs contiguous positions".into(),
                ));
            }
            let start = positions.first().copied().unwrap_or(0);
            let end = start + positions.len();
            (0..start)
                .map(Err)
                .chain((0..x.codomain.len()).map(Ok))
                .chain((end..ambient.len()).map(Err))
                .collect()
        };
        let out_legs: Vec<Space> = slots
            .iter()
            .map(|s| match *s {
                Ok(k) => x.codomain[k].clone(),
                Err(a) => ambient[a].clone(),
            })
            .collect();
        Ok(EmbedPlan {
            positions: positions.to_vec(),
            in_dims: dims(ambient),
            sel_in_dims: dims(&x.domain),
            sel_out_dims: dims(&x.codomain),
            slots,
            out_dims: dims(&out_legs),
            out_legs,
        })
    }

    /// Image of the ambient basis vector `col` as `(row, value)` pairs, given
    /// the sparse columns of the embedded map.
    pub(crate) fn apply_basis<'a>(
        &'a self,
        col: usize,
        x_cols: &'a [Vec<(usize, Scalar)>],
    ) -> impl Iterator<Item = (usize, Scalar)> + 'a {
        let idx = unflatten(col, &self.in_dims);
        let sel: Vec<usize> = self.positions.iter().map(|&p| idx[p]).collect();
        let sel_col = flatten(&sel, &self.sel_in_dims);
        x_cols[sel_col].iter().map(move |(r, v)| {
            let out_sel = unflatten(*r, &self.sel_out_dims);
            let out: Vec<usize> = self
                .slots
                .iter()
                .map(|s| match *s {
                    Ok(k) => out_sel[k],
                    Err(a) => idx[a],
                })
                .collect();
            (flatten(&out, &self.out_dims), v.clone())
        })
    }
}
