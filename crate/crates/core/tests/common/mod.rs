//! Independent oracles: hand-built matrices and dense reference evaluations
//! that do not go through the library's leg embedding machinery.
#![allow(dead_code)]

use pentagon_core::tensor::{FieldSpec, LegMap, Matrix, Scalar, Space};

pub const Q: FieldSpec = FieldSpec::Rational;

pub fn sp(label: &str, dim: usize) -> Space {
    Space::new(label, dim).unwrap()
}

pub fn perm_matrix(field: FieldSpec, images: &[usize]) -> Matrix {
    let n = images.len();
    Matrix::from_fn(field, n, n, |r, c| field.from_i64((images[c] == r) as i64))
}

/// Plain nested-loop Kronecker product.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let f = a.field();
    Matrix::from_fn(f, a.rows() * b.rows(), a.cols() * b.cols(), |r, c| {
        a.get(r / b.rows(), c / b.cols()) * b.get(r % b.rows(), c % b.cols())
    })
}

/// Flip on `k^n ⊗ k^n`: `e_i⊗e_j ↦ e_j⊗e_i`.
pub fn flip_matrix(field: FieldSpec, n: usize) -> Matrix {
    perm_matrix(
        field,
        &(0..n * n).map(|k| (k % n) * n + k / n).collect::<Vec<_>>(),
    )
}

/// `Φ(e_g⊗e_h) = e_g⊗e_{g+h}` on `k[ℤ/n]⊗k[ℤ/n]`.
pub fn phi_cyclic(field: FieldSpec, n: usize) -> Matrix {
    perm_matrix(
        field,
        &(0..n * n)
            .map(|k| (k / n) * n + (k / n + k % n) % n)
            .collect::<Vec<_>>(),
    )
}

pub fn phi_c2() -> LegMap {
    let m = sp("H", 2);
    LegMap::new(vec![m.clone(), m.clone()], vec![m.clone(), m], phi_cyclic(Q, 2)).unwrap()
}

pub fn flip_map(field: FieldSpec, m: &Space) -> LegMap {
    LegMap::new(
        vec![m.clone(), m.clone()],
        vec![m.clone(), m.clone()],
        flip_matrix(field, m.dim()),
    )
    .unwrap()
}

/// Dense `Φ12Φ13Φ23 − Φ23Φ12` nonzero count, with `Φ13 = (I⊗t)Φ12(I⊗t)`.
pub fn pentagon_residual(phi: &Matrix, n: usize) -> usize {
    let f = phi.field();
    let id = Matrix::identity(f, n);
    let p12 = kron(phi, &id);
    let p23 = kron(&id, phi);
    let t23 = kron(&id, &flip_matrix(f, n));
    let p13 = t23.mul(&p12).unwrap().mul(&t23).unwrap();
    let lhs = p12.mul(&p13).unwrap().mul(&p23).unwrap();
    let rhs = p23.mul(&p12).unwrap();
    lhs.diff_count(&rhs).unwrap()
}

/// Dense `F12F13Φ23 − F23F12` for `F: V⊗M→V⊗V`, with `F13` built entrywise.
pub fn mpe_residual(f_map: &Matrix, phi: &Matrix, v: usize, m: usize) -> usize {
    let fld = f_map.field();
    let f12 = kron(f_map, &Matrix::identity(fld, m)); // V M M -> V V M
    let f23 = kron(&Matrix::identity(fld, v), f_map); // V V M -> V V V
    let p23 = kron(&Matrix::identity(fld, v), phi); // V M M -> V M M
                                                    // F13: V M M -> V M V acting on legs 1 and 3.
    let f13 = Matrix::from_fn(fld, v * m * v, v * m * m, |r, c| {
        let (a, b, cc) = (r / (m * v), (r / v) % m, r % v);
        let (x, y, z) = (c / (m * m), (c / m) % m, c % m);
        if b != y {
            return fld.zero();
        }
        f_map.get(a * v + cc, x * m + z).clone()
    });
    // F12 on V M V -> V V V.
    let f12b = kron(f_map, &Matrix::identity(fld, v));
    let lhs = f12b.mul(&f13).unwrap().mul(&p23).unwrap();
    let rhs = f23.mul(&f12).unwrap();
    lhs.diff_count(&rhs).unwrap()
}

pub fn int(field: FieldSpec, n: i64) -> Scalar {
    field.from_i64(n)
}
