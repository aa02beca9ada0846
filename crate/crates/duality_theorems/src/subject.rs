use exact_linalg::Rat;
use power_algebras::{Flavor, PowerAlgebra};
use tensor_category::{DualPair, Model, Obj};

use crate::constants::Constants;
use crate::result::Params;
use crate::DualityError;

/// A dualizable object `V` together with its power algebra of one flavor,
/// precomputed up to the degree cap.
pub struct Subject {
    model: Model,
    even: usize,
    odd: usize,
    algebra: PowerAlgebra,
}

impl Subject {
    /// `V` with the standard pairing `e^a (x) e_b -> delta_ab`.
    pub fn canonical(model: Model, even: usize, odd: usize, flavor: Flavor, cap: usize) -> Result<Subject, DualityError> {
        if model == Model::Plain && odd > 0 {
            return Err(DualityError::OddPlain);
        }
        let obj = match model {
            Model::Plain => Obj::plain(even),
            Model::Super => Obj::superspace(even, odd),
        };
        Subject::with_pair(model, &DualPair::canonical(&obj), flavor, cap)
    }

    /// `V` with an arbitrary nondegenerate pairing.
    pub fn with_pair(model: Model, pair: &DualPair, flavor: Flavor, cap: usize) -> Result<Subject, DualityError> {
        let odd = pair.obj().odd_count();
        if model == Model::Plain && odd > 0 {
            return Err(DualityError::OddPlain);
        }
        Ok(Subject {
            model,
            even: pair.dim() - odd,
            odd,
            algebra: PowerAlgebra::new(pair, flavor, cap)?,
        })
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn even(&self) -> usize {
        self.even
    }

    pub fn odd(&self) -> usize {
        self.odd
    }

    pub fn flavor(&self) -> Flavor {
        self.algebra.flavor()
    }

    pub fn cap(&self) -> usize {
        self.algebra.max_degree()
    }

    pub fn algebra(&self) -> &PowerAlgebra {
        &self.algebra
    }

    /// The categorical rank of `V`, `even - odd`.
    pub fn base_rank(&self) -> Rat {
        self.algebra.base().rank()
    }

    pub fn constants(&self) -> Constants {
        Constants::new(self.flavor(), self.base_rank())
    }

    pub fn params(&self) -> Params {
        Params {
            model: self.model.name().to_string(),
            even: self.even,
            odd: self.odd,
            flavor: Some(self.flavor().name().to_string()),
            degrees: Default::default(),
        }
    }
}
