//! Univariate views: resultants by Sylvester elimination over the scalar
//! field and exact rational root extraction.

use super::{Poly, Q, Scalar};
use crate::error::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Univariate polynomial over the scalar field, ascending degree order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    pub var: String,
    pub coeffs: Vec<Scalar>,
}

impl UniPoly {
    /// Collect a scalar's numerator as a univariate polynomial in `var`;
    /// coefficients may involve the remaining parameters.
    pub fn from_scalar(s: &Scalar, var: &str) -> Result<UniPoly, Error> {
        if !s.denominator().variables().iter().any(|v| v.as_ref() == var) {
            let den = Scalar::from_parts(s.denominator().clone(), Poly::one())?;
            let mut coeffs: Vec<Scalar> = Vec::new();
            for (m, c) in &s.numerator().terms {
                let d = m.degree_of(var) as usize;
                let rest = super::Mono(
                    m.0.iter()
                        .filter(|(v, _)| v.as_ref() != var)
                        .cloned()
                        .collect(),
                );
                let mut t = Poly::zero();
                t.add_term(rest, c.clone());
                while coeffs.len() <= d {
                    coeffs.push(Scalar::zero());
                }
                let part = Scalar::from_parts(t, Poly::one())?;
                coeffs[d] = &coeffs[d] + &part.checked_div(&den)?;
            }
            let mut p = UniPoly {
                var: var.to_string(),
                coeffs,
            };
            p.trim();
            Ok(p)
        } else {
            Err(Error::NonPolynomial {
                var: var.to_string(),
            })
        }
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, at: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }
}

/// Resultant of two univariate polynomials via the Sylvester determinant,
/// computed by exact Gaussian elimination over the scalar field.
pub fn resultant(a: &UniPoly, b: &UniPoly) -> Result<Scalar, Error> {
    assert_eq!(a.var, b.var);
    let m = a.degree().ok_or(Error::DivisionByZero)?;
    let n = b.degree().ok_or(Error::DivisionByZero)?;
    if m == 0 {
        return a.coeffs[0].pow(n as i64);
    }
    if n == 0 {
        return b.coeffs[0].pow(m as i64);
    }
    let size = m + n;
    let mut mat = vec![vec![Scalar::zero(); size]; size];
    for row in 0..n {
        for (i, c) in a.coeffs.iter().rev().enumerate() {
            mat[row][row + i] = c.clone();
        }
    }
    for row in 0..m {
        for (i, c) in b.coeffs.iter().rev().enumerate() {
            mat[n + row][row + i] = c.clone();
        }
    }
    // determinant by elimination with column pivoting
    let mut det = Scalar::one();
    for col in 0..size {
        let pivot = (col..size).find(|&r| !mat[r][col].is_zero());
        let Some(p) = pivot else {
            return Ok(Scalar::zero());
        };
        if p != col {
            mat.swap(p, col);
            det = -&det;
        }
        let pv = mat[col][col].clone();
        det = &det * &pv;
        for r in col + 1..size {
            if mat[r][col].is_zero() {
                continue;
            }
            let factor = &mat[r][col] / &pv;
            for c2 in col..size {
                let sub = &factor * &mat[col][c2];
                mat[r][c2] = &mat[r][c2] - &sub;
            }
        }
    }
    Ok(det)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut d = BigInt::one();
    loop {
        let d2 = &d * &d;
        if d2 > n {
            break;
        }
        if (&n % &d).is_zero() {
            out.push(d.clone());
            let q = &n / &d;
            if q != d {
                out.push(q);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

/// All rational roots (with multiplicity removed) of a univariate polynomial
/// with constant rational coefficients, by the rational root theorem.
pub fn rational_roots(p: &UniPoly) -> Result<Vec<Q>, Error> {
    let mut coeffs: Vec<Q> = Vec::with_capacity(p.coeffs.len());
    for c in &p.coeffs {
        coeffs.push(c.as_q().ok_or(Error::NonConstant)?);
    }
    while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
    if coeffs.is_empty() {
        return Err(Error::DivisionByZero);
    }
    // clear denominators to integer coefficients
    let mut lcm = BigInt::one();
    for c in &coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = coeffs
        .iter()
        .map(|c| (c * Q::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    // factor out x = 0 roots
    let low = ints.iter().position(|c| !c.is_zero()).unwrap();
    if low > 0 {
        roots.push(Q::zero());
    }
    let ints = &ints[low..];
    if ints.len() == 1 {
        return Ok(roots);
    }
    let a0 = &ints[0];
    let an = ints.last().unwrap();
    for p_div in divisors(a0) {
        for q_div in divisors(an) {
            for sign in [1i64, -1] {
                let cand = Q::new(&p_div * BigInt::from(sign), q_div.clone());
                if roots.contains(&cand) {
                    continue;
                }
                let mut acc = Q::zero();
                for c in ints.iter().rev() {
                    acc = acc * &cand + Q::from_integer(c.clone());
                }
                if acc.is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{parse_scalar, q_int, q_ratio};

    #[test]
    fn resultant_of_common_root() {
        // (x-1)(x-2) and (x-1)(x-3) share x=1 -> resultant 0
        let a = UniPoly::from_scalar(&parse_scalar("x^2-3*x+2").unwrap(), "x").unwrap();
        let b = UniPoly::from_scalar(&parse_scalar("x^2-4*x+3").unwrap(), "x").unwrap();
        assert!(resultant(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn resultant_of_coprime() {
        let a = UniPoly::from_scalar(&parse_scalar("x-1").unwrap(), "x").unwrap();
        let b = UniPoly::from_scalar(&parse_scalar("x-2").unwrap(), "x").unwrap();
        // res(x-1, x-2) = (2) - (1) up to sign = 1... determinant of [[1,-1],[1,-2]] = -1
        assert!(!resultant(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn rational_roots_quadratic() {
        // 4k^2 + 19k + 22 = 0 has roots -2 and -11/4
        let p = UniPoly::from_scalar(&parse_scalar("4*k^2+19*k+22").unwrap(), "k").unwrap();
        let roots = rational_roots(&p).unwrap();
        assert_eq!(roots, vec![q_ratio(-11, 4), q_int(-2)]);
    }

    #[test]
    fn rational_roots_with_zero() {
        let p = UniPoly::from_scalar(&parse_scalar("k^3-k").unwrap(), "k").unwrap();
        let roots = rational_roots(&p).unwrap();
        assert_eq!(roots, vec![q_int(-1), q_int(0), q_int(1)]);
    }
}
