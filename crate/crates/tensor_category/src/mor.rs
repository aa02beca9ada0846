use exact_linalg::{MatError, Rat, RatMat};
use num_traits::Zero;
use thiserror::Error;

use crate::obj::Obj;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatError {
    #[error("cannot compose: codomain {cod:?} differs from domain {dom:?}")]
    Mismatch { cod: Obj, dom: Obj },
    #[error("matrix of shape {shape:?} does not fit {dom:?} -> {cod:?}")]
    BadShape {
        dom: Obj,
        cod: Obj,
        shape: (usize, usize),
    },
    #[error("morphism {dom:?} -> {cod:?} mixes parities at entry ({row}, {col})")]
    NotEven {
        dom: Obj,
        cod: Obj,
        row: usize,
        col: usize,
    },
    #[error("{0}")]
    Matrix(#[from] MatError),
    #[error("pairing {0:?} is degenerate")]
    Degenerate(Obj),
    #[error("malformed pairing spec: {0}")]
    BadPairing(String),
    #[error("{0}")]
    Invalid(String),
}

/// A parity preserving linear map. The matrix has shape dim(cod) x dim(dom).
#[derive(Clone, PartialEq)]
pub struct Mor {
    dom: Obj,
    cod: Obj,
    mat: RatMat,
}

impl Mor {
    pub fn new(dom: Obj, cod: Obj, mat: RatMat) -> Result<Mor, CatError> {
        if mat.shape() != (cod.dim(), dom.dim()) {
            return Err(CatError::BadShape {
                shape: mat.shape(),
                dom,
                cod,
            });
        }
        if let Some((row, col, _)) = mat
            .entries()
            .find(|(r, c, _)| cod.parity(*r) != dom.parity(*c))
        {
            return Err(CatError::NotEven { dom, cod, row, col });
        }
        Ok(Mor { dom, cod, mat })
    }

    pub fn id(x: &Obj) -> Mor {
        Mor {
            dom: x.clone(),
            cod: x.clone(),
            mat: RatMat::identity(x.dim()),
        }
    }

    pub fn zero(dom: &Obj, cod: &Obj) -> Mor {
        Mor {
            dom: dom.clone(),
            cod: cod.clone(),
            mat: RatMat::zeros(cod.dim(), dom.dim()),
        }
    }

    /// The endomorphism `s * 1` of the unit object.
    pub fn unit_scalar(s: Rat) -> Mor {
        Mor::id(&Obj::unit()).scale(&s)
    }

    pub fn dom(&self) -> &Obj {
        &self.dom
    }

    pub fn cod(&self) -> &Obj {
        &self.cod
    }

    pub fn mat(&self) -> &RatMat {
        &self.mat
    }

    /// Relabels domain and codomain without touching the matrix.
    pub fn retyped(&self, dom: &Obj, cod: &Obj) -> Result<Mor, CatError> {
        Mor::new(dom.clone(), cod.clone(), self.mat.clone())
    }

    /// `self` after `first`.
    pub fn after(&self, first: &Mor) -> Result<Mor, CatError> {
        if first.cod != self.dom {
            return Err(CatError::Mismatch {
                cod: first.cod.clone(),
                dom: self.dom.clone(),
            });
        }
        Ok(Mor {
            dom: first.dom.clone(),
            cod: self.cod.clone(),
            mat: self.mat.compose(&first.mat)?,
        })
    }

    /// Composes a chain given in diagram order: `chain(&[f, g, h]) = h . g . f`.
    pub fn chain(steps: &[&Mor]) -> Result<Mor, CatError> {
        let (first, rest) = steps
            .split_first()
            .ok_or_else(|| CatError::Invalid("empty composition chain".into()))?;
        rest.iter().try_fold((*first).clone(), |acc, next| next.after(&acc))
    }

    pub fn tensor(&self, other: &Mor) -> Mor {
        Mor {
            dom: self.dom.tensor(&other.dom),
            cod: self.cod.tensor(&other.cod),
            mat: self.mat.kron(&other.mat),
        }
    }

    pub fn tensor_all(mors: &[Mor]) -> Mor {
        match mors.split_first() {
            None => Mor::id(&Obj::unit()),
            Some((first, rest)) => rest.iter().fold(first.clone(), |acc, m| acc.tensor(m)),
        }
    }

    pub fn direct_sum(&self, other: &Mor) -> Mor {
        Mor {
            dom: self.dom.direct_sum(&other.dom),
            cod: self.cod.direct_sum(&other.cod),
            mat: self.mat.direct_sum(&other.mat),
        }
    }

    pub fn scale(&self, s: &Rat) -> Mor {
        Mor {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            mat: self.mat.scale(s),
        }
    }

    pub fn add(&self, other: &Mor) -> Result<Mor, CatError> {
        self.check_parallel(other)?;
        Ok(Mor {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            mat: self.mat.add(&other.mat)?,
        })
    }

    pub fn sub(&self, other: &Mor) -> Result<Mor, CatError> {
        self.check_parallel(other)?;
        Ok(Mor {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            mat: self.mat.sub(&other.mat)?,
        })
    }

    /// `self - other` as a bare matrix, for residual reporting.
    pub fn residual(&self, other: &Mor) -> Result<RatMat, CatError> {
        Ok(self.sub(other)?.mat)
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    /// The scalar of an endomorphism of a one dimensional object.
    pub fn as_scalar(&self) -> Option<Rat> {
        (self.mat.shape() == (1, 1)).then(|| self.mat.get(0, 0))
    }

    pub fn is_iso(&self) -> bool {
        self.mat.is_invertible()
    }

    pub fn inverse(&self) -> Result<Mor, CatError> {
        Ok(Mor {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            mat: self.mat.inverse()?,
        })
    }

    /// True when `self = s * 1` for some scalar `s`, which is returned.
    pub fn scalar_multiple_of_identity(&self) -> Option<Rat> {
        if self.dom != self.cod {
            return None;
        }
        let n = self.dom.dim();
        let s = if n == 0 { Rat::zero() } else { self.mat.get(0, 0) };
        let expected = RatMat::identity(n).scale(&s);
        (self.mat == expected).then_some(s)
    }

    fn check_parallel(&self, other: &Mor) -> Result<(), CatError> {
        if self.dom != other.dom {
            return Err(CatError::Mismatch {
                cod: other.dom.clone(),
                dom: self.dom.clone(),
            });
        }
        if self.cod != other.cod {
            return Err(CatError::Mismatch {
                cod: other.cod.clone(),
                dom: self.cod.clone(),
            });
        }
        Ok(())
    }
}

impl std::fmt::Debug for Mor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} -> {:?} {:?}", self.dom, self.cod, self.mat)
    }
}
