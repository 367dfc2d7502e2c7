use rand::Rng;

use crate::tensor::field::FieldSpec;
use crate::tensor::matrix::Matrix;

/// A uniformly drawn invertible matrix with small entries (resampled until
/// invertible).
pub fn random_invertible<R: Rng + ?Sized>(field: FieldSpec, n: usize, rng: &mut R) -> Matrix {
    loop {
        let m = Matrix::from_fn(field, n, n, |_, _| match field {
            FieldSpec::Rational => field.from_i64(rng.gen_range(-2..=2)),
            FieldSpec::Prime(p) => field.from_i64(rng.gen_range(0..p) as i64),
        });
        if m.is_invertible() {
            return m;
        }
    }
}
