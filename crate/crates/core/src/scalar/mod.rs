//! Exact coefficient arithmetic: multivariate rational functions over
//! arbitrary-precision rationals, with specialization at rational points.
//!
//! Every coefficient in the system is a [`Scalar`]: a reduced fraction of
//! multivariate polynomials in declared formal parameters (`k`, `c`, `h`, ...).
//! Canonical form (gcd-reduced, monic denominator, graded-lex term order)
//! makes equality a syntactic check.

mod gcd;
pub mod parse;
mod uni;

pub use parse::parse_scalar;
pub use uni::{rational_roots, resultant, UniPoly};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational, the ground field.
pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_ratio(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// A monomial in the parameters: sorted `(name, exponent)` pairs, exponents > 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Mono(pub Vec<(Arc<str>, u32)>);

impl Mono {
    pub fn one() -> Self {
        Mono(Vec::new())
    }

    pub fn var(name: &str) -> Self {
        Mono(vec![(Arc::from(name), 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| *e).sum()
    }

    pub fn degree_of(&self, name: &str) -> u32 {
        self.0
            .iter()
            .find(|(v, _)| v.as_ref() == name)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut out: Vec<(Arc<str>, u32)> = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.as_ref().cmp(other.0[j].0.as_ref()) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Mono(out)
    }

    /// Exact monomial quotient, `None` if not divisible.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for (v, e) in &self.0 {
            let mut e = *e;
            while j < other.0.len() && other.0[j].0.as_ref() < v.as_ref() {
                return None; // divisor has a variable we lack
            }
            if j < other.0.len() && other.0[j].0 == *v {
                if other.0[j].1 > e {
                    return None;
                }
                e -= other.0[j].1;
                j += 1;
            }
            if e > 0 {
                out.push((v.clone(), e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Mono(out))
    }
}

/// Graded lexicographic: total degree first, then lex on exponents in name order.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Walk variables in ascending name order; the first variable where the
        // exponents differ decides, higher exponent on the earlier name wins.
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.0.get(i), other.0.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.as_ref().cmp(vb.as_ref()) {
                    Ordering::Less => return Ordering::Greater, // we have the earlier var
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    pub terms: BTreeMap<Mono, Q>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        Poly { terms }
    }

    pub fn one() -> Self {
        Poly::constant(Q::one())
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(name), Q::one());
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.keys().next().unwrap().is_one())
    }

    pub fn as_constant(&self) -> Option<Q> {
        if self.terms.is_empty() {
            return Some(Q::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    /// Leading term under graded lex.
    pub fn leading(&self) -> Option<(&Mono, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn variables(&self) -> Vec<Arc<str>> {
        let mut vars: Vec<Arc<str>> = Vec::new();
        for m in self.terms.keys() {
            for (v, _) in &m.0 {
                if !vars.iter().any(|w| w == v) {
                    vars.push(v.clone());
                }
            }
        }
        vars.sort();
        vars
    }

    fn add_term(&mut self, m: Mono, c: Q) {
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

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Exact multivariate division; `None` when the remainder is nonzero.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&(Q::one() / c)));
        }
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        let (dm, dc) = {
            let (m, c) = d.leading().unwrap();
            (m.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (rm, rc) = {
                let (m, c) = rem.leading().unwrap();
                (m.clone(), c.clone())
            };
            let qm = rm.div(&dm)?;
            let qc = rc / &dc;
            let mut t = Poly::zero();
            t.add_term(qm, qc);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Substitute rational values for a subset of the variables.
    pub fn substitute(&self, bindings: &BTreeMap<String, Q>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (v, e) in &m.0 {
                if let Some(val) = bindings.get(v.as_ref()) {
                    let mut p = Q::one();
                    for _ in 0..*e {
                        p *= val;
                    }
                    coeff *= p;
                } else {
                    rest.push((v.clone(), *e));
                }
            }
            out.add_term(Mono(rest), coeff);
        }
        out
    }

    /// Normalize to leading coefficient 1; returns (monic poly, former lc).
    pub fn monic(&self) -> (Poly, Q) {
        match self.leading() {
            None => (Poly::zero(), Q::one()),
            Some((_, lc)) => {
                let lc = lc.clone();
                (self.scale(&(Q::one() / &lc)), lc)
            }
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", abs)?;
                }
                let mut firstv = true;
                for (v, e) in &m.0 {
                    if !firstv {
                        write!(f, "*")?;
                    }
                    firstv = false;
                    if *e == 1 {
                        write!(f, "{}", v)?;
                    } else {
                        write!(f, "{}^{}", v, e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Rational function in canonical form: `gcd(num, den) = 1`, `den` monic, nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    fn canonical(num: Poly, den: Poly) -> Result<Scalar, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = gcd::poly_gcd(&num, &den);
        let num = num.div_exact(&g).expect("gcd divides numerator");
        let den = den.div_exact(&g).expect("gcd divides denominator");
        let (den, lc) = den.monic();
        let num = num.scale(&(Q::one() / lc));
        Ok(Scalar { num, den })
    }

    pub fn zero() -> Scalar {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Scalar {
        Scalar {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn from_q(q: Q) -> Scalar {
        Scalar {
            num: Poly::constant(q),
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar::from_q(q_int(n))
    }

    pub fn ratio(n: i64, d: i64) -> Scalar {
        Scalar::from_q(q_ratio(n, d))
    }

    pub fn var(name: &str) -> Scalar {
        Scalar {
            num: Poly::var(name),
            den: Poly::one(),
        }
    }

    pub fn from_parts(num: Poly, den: Poly) -> Result<Scalar, Error> {
        Scalar::canonical(num, den)
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == Poly::one() && self.den == Poly::one()
    }

    /// The constant value, if this scalar involves no parameters.
    pub fn as_q(&self) -> Option<Q> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn parameters(&self) -> Vec<Arc<str>> {
        let mut vars = self.num.variables();
        for v in self.den.variables() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
        vars.sort();
        vars
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, Error> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Scalar::canonical(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inverse(&self) -> Result<Scalar, Error> {
        Scalar::one().checked_div(self)
    }

    pub fn pow(&self, n: i64) -> Result<Scalar, Error> {
        if n < 0 {
            return self.inverse()?.pow(-n);
        }
        let mut out = Scalar::one();
        for _ in 0..n {
            out = &out * self;
        }
        Ok(out)
    }

    /// Substitute rational values for parameters; errors if a denominator vanishes.
    pub fn specialize(&self, bindings: &BTreeMap<String, Q>) -> Result<Scalar, Error> {
        let den = self.den.substitute(bindings);
        if den.is_zero() {
            return Err(Error::PoleAtBinding {
                denominator: self.den.to_string(),
            });
        }
        let num = self.num.substitute(bindings);
        Scalar::canonical(num, den)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, other: &Scalar) -> Scalar {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Scalar::canonical(num, den).expect("nonzero denominators")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, other: &Scalar) -> Scalar {
        self + &(-other)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, other: &Scalar) -> Scalar {
        let num = self.num.mul(&other.num);
        let den = self.den.mul(&other.den);
        Scalar::canonical(num, den).expect("nonzero denominators")
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, other: &Scalar) -> Scalar {
        self.checked_div(other).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl std::hash::Hash for Scalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        // canonical form makes structural hashing sound
        for (m, c) in &self.num.terms {
            m.hash(state);
            c.hash(state);
        }
        0xd5_u8.hash(state);
        for (m, c) in &self.den.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> Scalar {
        Scalar::var("k")
    }

    fn bind(pairs: &[(&str, Q)]) -> BTreeMap<String, Q> {
        pairs.iter().map(|(n, q)| (n.to_string(), q.clone())).collect()
    }

    /// c_k = -(3k+8)(8k+17)/(k+4)
    fn central_charge() -> Scalar {
        let three_k8 = &(&Scalar::from_int(3) * &k()) + &Scalar::from_int(8);
        let eight_k17 = &(&Scalar::from_int(8) * &k()) + &Scalar::from_int(17);
        let k4 = &k() + &Scalar::from_int(4);
        &(-&(&three_k8 * &eight_k17)) / &k4
    }

    #[test]
    fn central_charge_specializations() {
        let c = central_charge();
        let at_m1 = c.specialize(&bind(&[("k", q_int(-1))])).unwrap();
        assert_eq!(at_m1, Scalar::from_int(-15));
        let at_m73 = c.specialize(&bind(&[("k", q_ratio(-7, 3))])).unwrap();
        assert_eq!(at_m73, Scalar::from_int(1));
    }

    #[test]
    fn reduced_identity_case() {
        // (3k+8)/4 reduces to the canonical monic-denominator form
        let s = &(&(&Scalar::from_int(3) * &k()) + &Scalar::from_int(8)) / &Scalar::from_int(4);
        assert_eq!(s.to_string(), "3/4*k+2");
        assert_eq!(parse_scalar("(3*k+8)/4").unwrap(), s);
        assert_eq!(parse_scalar(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn pole_at_binding_is_an_error() {
        let k4 = &k() + &Scalar::from_int(4);
        let inv = k4.inverse().unwrap();
        let err = inv.specialize(&bind(&[("k", q_int(-4))])).unwrap_err();
        match err {
            Error::PoleAtBinding { denominator } => assert_eq!(denominator, "k+4"),
            other => panic!("expected pole error, got {other:?}"),
        }
    }

    #[test]
    fn product_specialization() {
        // (k+2)(2k+5)(3k+8) at k = -1 is 15
        let p = &(&(&k() + &Scalar::from_int(2))
            * &(&(&Scalar::from_int(2) * &k()) + &Scalar::from_int(5)))
            * &(&(&Scalar::from_int(3) * &k()) + &Scalar::from_int(8));
        let v = p.specialize(&bind(&[("k", q_int(-1))])).unwrap();
        assert_eq!(v, Scalar::from_int(15));
    }

    #[test]
    fn parafermion_curve_value() {
        // 2(s-1)/(s+2) at s = -5/3 is -16
        let s = Scalar::var("s");
        let c = &(&Scalar::from_int(2) * &(&s - &Scalar::from_int(1))) / &(&s + &Scalar::from_int(2));
        let v = c.specialize(&bind(&[("s", q_ratio(-5, 3))])).unwrap();
        assert_eq!(v, Scalar::from_int(-16));
    }

    #[test]
    fn gcd_reduction_across_ops() {
        // (k^2 - 1)/(k + 1) reduces to k - 1
        let num = &(&k() * &k()) - &Scalar::from_int(1);
        let den = &k() + &Scalar::from_int(1);
        let s = &num / &den;
        assert_eq!(s.to_string(), "k-1");
    }

    #[test]
    fn division_by_zero_scalar() {
        assert!(matches!(
            Scalar::one().checked_div(&Scalar::zero()),
            Err(Error::DivisionByZero)
        ));
    }
}
