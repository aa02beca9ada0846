use thiserror::Error;

use crate::mat::{Mat, Scalar};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SplitError<T: Scalar> {
    #[error("idempotent must be square, got {0:?}")]
    NotSquare((usize, usize)),
    #[error("e*e - e is nonzero ({} nonzero entries)", .residual.nnz())]
    NotIdempotent { residual: Mat<T> },
}

/// Splits an idempotent `e` as `i * p` with `p * i = 1`.
///
/// The columns of `i` are the reduced column echelon basis of the image of
/// `e`: each has a leading 1 at its pivot (its first nonzero row) and zeros
/// at the other pivots. Since `i` restricted to the pivot rows is the
/// identity, `p` is read off as the pivot rows of `e`.
pub fn split_idempotent<T: Scalar>(e: &Mat<T>) -> Result<(Mat<T>, Mat<T>), SplitError<T>> {
    if !e.is_square() {
        return Err(SplitError::NotSquare(e.shape()));
    }
    let square = e.compose(e).expect("square matrix composes with itself");
    let residual = square.sub(e).expect("same shape");
    if !residual.is_zero() {
        return Err(SplitError::NotIdempotent { residual });
    }
    let basis = e.transpose().row_echelon_basis();
    let pivots: Vec<usize> = basis.iter().map(|b| b[0].0).collect();
    let inclusion = Mat::from_sparse_cols(e.rows(), basis);
    let projection = e.select_rows(&pivots);
    Ok((inclusion, projection))
}
