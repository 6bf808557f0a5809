//! Canonical normal-ordered expressions: the universal representation of
//! states in a freely generated vertex superalgebra.
//!
//! A monomial is an ordered list of `(generator, derivative-order)` factors
//! read as the right-nested normal product `:f1 (:f2 (... fn):):`. Canonical
//! monomials are sorted by `(weight, name)` ascending with derivative orders
//! non-increasing among equal generators; the empty monomial is the vacuum.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::scalar::{Q, Scalar};

/// Index of a generator within its presentation.
pub type GenId = usize;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Koszul sign (-1)^{p(a)p(b)} as a scalar multiplier.
    pub fn koszul(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

/// One normally ordered factor: the `der`-th derivative of a generator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Factor {
    pub gen: GenId,
    pub der: u32,
}

impl Factor {
    pub fn new(gen: GenId, der: u32) -> Self {
        Factor { gen, der }
    }
}

/// A normal-ordered monomial; empty means the vacuum.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Monomial(pub Vec<Factor>);

impl Monomial {
    pub fn vacuum() -> Self {
        Monomial(Vec::new())
    }

    pub fn single(gen: GenId, der: u32) -> Self {
        Monomial(vec![Factor::new(gen, der)])
    }

    pub fn is_vacuum(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn head(&self) -> Option<Factor> {
        self.0.first().copied()
    }

    pub fn tail(&self) -> Monomial {
        Monomial(self.0[1..].to_vec())
    }

    pub fn prepended(&self, f: Factor) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.push(f);
        v.extend_from_slice(&self.0);
        Monomial(v)
    }
}

/// Finite linear combination of canonical monomials with scalar coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NormalOrderedExpr {
    pub terms: BTreeMap<Monomial, Scalar>,
}

impl NormalOrderedExpr {
    pub fn zero() -> Self {
        NormalOrderedExpr {
            terms: BTreeMap::new(),
        }
    }

    pub fn vacuum() -> Self {
        NormalOrderedExpr::monomial(Monomial::vacuum(), Scalar::one())
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        NormalOrderedExpr { terms }
    }

    pub fn generator(gen: GenId) -> Self {
        NormalOrderedExpr::monomial(Monomial::single(gen, 0), Scalar::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &NormalOrderedExpr) -> NormalOrderedExpr {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn add_assign(&mut self, other: &NormalOrderedExpr) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &NormalOrderedExpr) -> NormalOrderedExpr {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> NormalOrderedExpr {
        NormalOrderedExpr {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> NormalOrderedExpr {
        if c.is_zero() {
            return NormalOrderedExpr::zero();
        }
        NormalOrderedExpr {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn scale_q(&self, q: &Q) -> NormalOrderedExpr {
        self.scale(&Scalar::from_q(q.clone()))
    }

    /// The vacuum coefficient, if the expression is a pure multiple of `|0>`.
    pub fn as_vacuum_multiple(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            if m.is_vacuum() {
                return Some(c.clone());
            }
        }
        None
    }

    /// Substitute parameter bindings in every coefficient.
    pub fn specialize(
        &self,
        bindings: &BTreeMap<String, Q>,
    ) -> Result<NormalOrderedExpr, crate::Error> {
        let mut out = NormalOrderedExpr::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.specialize(bindings)?);
        }
        Ok(out)
    }
}

impl fmt::Display for NormalOrderedExpr {
    /// Debug-level display with numeric generator ids; presentation-aware
    /// printing lives in `presentation::print_expr`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            for fac in &m.0 {
                write!(f, " g{}'{}", fac.gen, fac.der)?;
            }
        }
        Ok(())
    }
}
