use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Parity of a tensor product of two homogeneous vectors.
    pub fn plus(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// An object of the category: a finite ordered basis, each vector homogeneous
/// of the given parity. The label is only used in diagnostics; equality
/// compares parities.
#[derive(Clone)]
pub struct Obj {
    parities: Vec<Parity>,
    label: String,
}

impl PartialEq for Obj {
    fn eq(&self, other: &Self) -> bool {
        self.parities == other.parities
    }
}

impl Eq for Obj {}

impl Obj {
    pub fn new(parities: Vec<Parity>, label: impl Into<String>) -> Self {
        Obj {
            parities,
            label: label.into(),
        }
    }

    /// Plain rational vector space of dimension `n`.
    pub fn plain(n: usize) -> Self {
        Obj::new(vec![Parity::Even; n], format!("Q^{n}"))
    }

    /// Super vector space with `even` even basis vectors followed by `odd` odd ones.
    pub fn superspace(even: usize, odd: usize) -> Self {
        let mut parities = vec![Parity::Even; even];
        parities.extend(std::iter::repeat_n(Parity::Odd, odd));
        Obj::new(parities, format!("Q^({even}|{odd})"))
    }

    /// The unit object: one even basis vector.
    pub fn unit() -> Self {
        Obj::new(vec![Parity::Even], "I")
    }

    pub fn zero() -> Self {
        Obj::new(Vec::new(), "0")
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn parity(&self, index: usize) -> Parity {
        self.parities[index]
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(&self, label: impl Into<String>) -> Self {
        Obj::new(self.parities.clone(), label)
    }

    pub fn is_plain(&self) -> bool {
        self.parities.iter().all(|p| !p.is_odd())
    }

    pub fn odd_count(&self) -> usize {
        self.parities.iter().filter(|p| p.is_odd()).count()
    }

    /// Tensor product. The basis vector `e_a (x) f_b` sits at index
    /// `a * dim(other) + b` and has parity `|a| + |b|`.
    pub fn tensor(&self, other: &Obj) -> Obj {
        let parities = self
            .parities
            .iter()
            .flat_map(|&p| other.parities.iter().map(move |&q| p.plus(q)))
            .collect();
        Obj::new(parities, format!("{}⊗{}", self.label, other.label))
    }

    /// Tensor product of a list of objects, the unit for an empty list.
    pub fn tensor_all(objs: &[Obj]) -> Obj {
        match objs.split_first() {
            None => Obj::unit(),
            Some((first, rest)) => rest.iter().fold(first.clone(), |acc, o| acc.tensor(o)),
        }
    }

    /// Direct sum, basis of `self` first.
    pub fn direct_sum(&self, other: &Obj) -> Obj {
        let mut parities = self.parities.clone();
        parities.extend_from_slice(&other.parities);
        Obj::new(parities, format!("{}⊕{}", self.label, other.label))
    }
}

impl fmt::Debug for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let odd = self.odd_count();
        write!(f, "{}[{}|{}]", self.label, self.dim() - odd, odd)
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
