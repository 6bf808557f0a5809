//! Multivariate polynomial gcd over the rationals via primitive
//! pseudo-remainder sequences, recursing on the variable set.

use super::{Mono, Poly};
use std::sync::Arc;

/// View `p` as univariate in `x` with `Poly` coefficients (degree-indexed).
fn as_univariate(p: &Poly, x: &str) -> Vec<Poly> {
    let mut coeffs: Vec<Poly> = Vec::new();
    for (m, c) in &p.terms {
        let d = m.degree_of(x) as usize;
        let rest = Mono(
            m.0.iter()
                .filter(|(v, _)| v.as_ref() != x)
                .cloned()
                .collect(),
        );
        while coeffs.len() <= d {
            coeffs.push(Poly::zero());
        }
        let mut t = Poly::zero();
        t.add_term(rest, c.clone());
        coeffs[d] = coeffs[d].add(&t);
    }
    while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
    coeffs
}

fn from_univariate(coeffs: &[Poly], x: &str) -> Poly {
    let mut out = Poly::zero();
    let xp = Poly::var(x);
    let mut xpow = Poly::one();
    for c in coeffs {
        out = out.add(&c.mul(&xpow));
        xpow = xpow.mul(&xp);
    }
    out
}

/// Pseudo-remainder of univariate polynomials with `Poly` coefficients.
fn pseudo_rem(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    let mut r: Vec<Poly> = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        // r <- lb * r - lr * x^(dr-db) * b
        let mut nr: Vec<Poly> = r.iter().map(|c| c.mul(&lb)).collect();
        for (i, bc) in b.iter().enumerate() {
            let idx = i + dr - db;
            nr[idx] = nr[idx].sub(&bc.mul(&lr));
        }
        while nr.last().map(|c| c.is_zero()).unwrap_or(false) {
            nr.pop();
        }
        r = nr;
    }
    r
}

/// Gcd of the coefficient list (the content w.r.t. the main variable).
fn content(coeffs: &[Poly]) -> Poly {
    let mut g = Poly::zero();
    for c in coeffs {
        g = poly_gcd(&g, c);
        if g == Poly::one() {
            break;
        }
    }
    g
}

/// Polynomial gcd, normalized to leading coefficient 1. `gcd(0, p) = monic(p)`.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic().0;
    }
    if b.is_zero() {
        return a.monic().0;
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    // Main variable: the highest-named variable present in either operand.
    let mut vars: Vec<Arc<str>> = a.variables();
    for v in b.variables() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    vars.sort();
    let x = vars.last().unwrap().clone();

    let ua = as_univariate(a, &x);
    let ub = as_univariate(b, &x);
    if ua.len() == 1 {
        // `a` does not involve x after all; gcd with b's content
        return poly_gcd(&ua[0], &content(&ub));
    }
    if ub.len() == 1 {
        return poly_gcd(&ub[0], &content(&ua));
    }

    let ca = content(&ua);
    let cb = content(&ub);
    let cont = poly_gcd(&ca, &cb);
    let pa: Vec<Poly> = ua
        .iter()
        .map(|c| c.div_exact(&ca).expect("content divides"))
        .collect();
    let pb: Vec<Poly> = ub
        .iter()
        .map(|c| c.div_exact(&cb).expect("content divides"))
        .collect();

    let (mut f, mut g) = if pa.len() >= pb.len() { (pa, pb) } else { (pb, pa) };
    loop {
        let r = pseudo_rem(&f, &g);
        if r.is_empty() {
            break;
        }
        let cr = content(&r);
        let pr: Vec<Poly> = r
            .iter()
            .map(|c| c.div_exact(&cr).expect("content divides"))
            .collect();
        f = g;
        g = pr;
        if g.len() == 1 {
            // coprime up to content
            return cont.monic().0;
        }
    }
    let result = from_univariate(&g, &x).mul(&cont);
    result.monic().0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q_int;

    fn var(n: &str) -> Poly {
        Poly::var(n)
    }

    fn int(n: i64) -> Poly {
        Poly::constant(q_int(n))
    }

    #[test]
    fn univariate_gcd() {
        // gcd((k+1)^2 (k+2), (k+1)(k+3)) = k+1
        let k1 = var("k").add(&int(1));
        let a = k1.mul(&k1).mul(&var("k").add(&int(2)));
        let b = k1.mul(&var("k").add(&int(3)));
        assert_eq!(poly_gcd(&a, &b), k1);
    }

    #[test]
    fn multivariate_gcd() {
        // gcd((h+q)(h-1), (h+q) q) = h+q
        let hq = var("h").add(&var("q"));
        let a = hq.mul(&var("h").sub(&int(1)));
        let b = hq.mul(&var("q"));
        assert_eq!(poly_gcd(&a, &b), hq);
    }

    #[test]
    fn coprime_gcd_is_one() {
        let a = var("k").add(&int(1));
        let b = var("k").add(&int(2));
        assert_eq!(poly_gcd(&a, &b), Poly::one());
    }
}
