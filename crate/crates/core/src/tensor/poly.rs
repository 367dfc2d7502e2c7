//! Characteristic and minimal polynomials. Coefficient vectors are stored
//! lowest degree first.

use crate::error::{Error, Result};
use crate::tensor::field::Scalar;
use crate::tensor::matrix::Matrix;

/// Evaluates `Σ c_k A^k` by Horner's rule.
pub fn eval_poly(coeffs: &[Scalar], a: &Matrix) -> Result<Matrix> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch("polynomial in a non-square matrix".into()));
    }
    let n = a.rows();
    let id = Matrix::identity(a.field(), n);
    let mut acc = Matrix::zeros(a.field(), n, n);
    for c in coeffs.iter().rev() {
        acc = acc.mul(a)?.add(&id.scale(c))?;
    }
    Ok(acc)
}

/// `det(t·I − A)` via reduction to upper Hessenberg form.
pub fn charpoly(a: &Matrix) -> Result<Vec<Scalar>> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(
            "characteristic polynomial of a non-square matrix".into(),
        ));
    }
    let field = a.field();
    let n = a.rows();
    let mut h: Vec<Vec<Scalar>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    for m in 1..n.saturating_sub(1) {
        let Some(p) = (m..n).find(|&i| !h[i][m - 1].is_zero()) else {
            continue;
        };
        if p != m {
            h.swap(p, m);
            for row in h.iter_mut() {
                row.swap(p, m);
            }
        }
        let inv = h[m][m - 1].inv().expect("nonzero pivot");
        for i in m + 1..n {
            if h[i][m - 1].is_zero() {
                continue;
            }
            let u = &h[i][m - 1] * &inv;
            for j in 0..n {
                if !h[m][j].is_zero() {
                    h[i][j] = &h[i][j] - &(&u * &h[m][j]);
                }
            }
            for row in h.iter_mut() {
                if !row[i].is_zero() {
                    row[m] = &row[m] + &(&u * &row[i]);
                }
            }
        }
    }
    // p_k = characteristic polynomial of the leading k×k block.
    let mut ps: Vec<Vec<Scalar>> = vec![vec![field.one()]];
    for k in 1..=n {
        let mut next = shift(&ps[k - 1]);
        sub_scaled(&mut next, &ps[k - 1], &h[k - 1][k - 1]);
        let mut prod = field.one();
        for i in (1..k).rev() {
            prod = &prod * &h[i][i - 1];
            if prod.is_zero() {
                break;
            }
            let coeff = &prod * &h[i - 1][k - 1];
            sub_scaled(&mut next, &ps[i - 1], &coeff);
        }
        ps.push(next);
    }
    Ok(ps.pop().unwrap())
}

fn shift(p: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![p[0].field().zero()];
    out.extend_from_slice(p);
    out
}

fn sub_scaled(acc: &mut [Scalar], p: &[Scalar], c: &Scalar) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(p) {
        *a = &*a - &(c * x);
    }
}

/// Monic minimal polynomial, found as the first linear dependence among
/// `I, A, A², …`.
pub fn minimal_polynomial(a: &Matrix) -> Result<Vec<Scalar>> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(
            "minimal polynomial of a non-square matrix".into(),
        ));
    }
    let field = a.field();
    let n = a.rows();
    // Echelon rows: (pivot, vector, combination of powers it equals).
    let mut rows: Vec<(usize, Vec<Scalar>, Vec<Scalar>)> = Vec::new();
    let mut power = Matrix::identity(field, n);
    for k in 0..=n {
        let mut v = power.data().to_vec();
        let mut combo = vec![field.zero(); k + 1];
        combo[k] = field.one();
        for (p, row, rc) in &rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = &v[*p] * &row[*p].inv().expect("pivot");
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
            for (x, y) in combo.iter_mut().zip(rc) {
                *x = &*x - &(&f * y);
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => return Ok(combo),
            Some(p) => rows.push((p, v, combo)),
        }
        power = power.mul(a)?;
    }
    unreachable!("Cayley-Hamilton bounds the degree by n")
}
