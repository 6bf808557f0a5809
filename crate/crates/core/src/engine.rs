//! The n-th product engine: structural rewriting of normal-ordered
//! expressions driven by a presentation's OPE table.
//!
//! Rules implemented (divided powers `d^(j) = d^j/j!` throughout):
//!
//! - `(da)_(n) b = -n a_(n-1) b` and `a_(n) db = d(a_(n) b) + n a_(n-1) b`;
//! - skew-symmetry `b_(n) a = -(-1)^{p(a)p(b)} sum_j (-1)^{n+j} d^(j)(a_(n+j) b)`;
//! - the non-commutative Wick formula for `a_(n) :bc:`;
//! - the left expansion `(:ab:)_(n) = sum_j [a_(-1-j) b_(n+j) + (-1)^{p(a)p(b)} b_(n-1-j) a_(j)]`;
//! - quasi-associativity and quasi-commutativity for reordering into the
//!   canonical monomial basis.
//!
//! Termination: structural induction on (total weight, monomial length);
//! every correction term consumes a positive product, which strictly lowers
//! the weight of the pair being multiplied, and pure swaps reduce inversions.

use std::sync::Arc;

use dashmap::DashMap;
use num_traits::Zero;

use crate::error::Error;
use crate::expr::{Factor, GenId, Monomial, NormalOrderedExpr};
use crate::presentation::{AlgebraPresentation, ExprTree};
use crate::scalar::{q_int, Q, Scalar};

type Key = (Monomial, Monomial, i64);

pub struct Engine {
    pres: Arc<AlgebraPresentation>,
    cache: DashMap<Key, Arc<NormalOrderedExpr>>,
}

fn binom(n: i64, j: u32) -> Q {
    let mut num = Q::from_integer(1.into());
    for t in 0..j {
        num = num * Q::from_integer((n - t as i64).into()) / Q::from_integer(((t + 1) as i64).into());
    }
    num
}

impl Engine {
    pub fn new(pres: Arc<AlgebraPresentation>) -> Self {
        Engine {
            pres,
            cache: DashMap::new(),
        }
    }

    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.pres
    }

    pub fn pres_arc(&self) -> Arc<AlgebraPresentation> {
        self.pres.clone()
    }

    // -- public spec surface -------------------------------------------------

    /// `A_(n) B` for `n >= 0`.
    pub fn nth_product(
        &self,
        a: &NormalOrderedExpr,
        b: &NormalOrderedExpr,
        n: i64,
    ) -> Result<NormalOrderedExpr, Error> {
        if n < 0 {
            return Err(Error::NegativeProductIndex(n));
        }
        Ok(self.nth_any(a, b, n))
    }

    /// The (-1)-st product `:AB:`.
    pub fn normally_ordered(
        &self,
        a: &NormalOrderedExpr,
        b: &NormalOrderedExpr,
    ) -> NormalOrderedExpr {
        self.nth_any(a, b, -1)
    }

    /// Formal derivative.
    pub fn derive(&self, e: &NormalOrderedExpr) -> NormalOrderedExpr {
        let mut out = NormalOrderedExpr::zero();
        for (m, c) in &e.terms {
            out.add_assign(&self.derive_mono(m).scale(c));
        }
        out
    }

    /// `A_(n) B` for any integer `n`, extended bilinearly.
    pub fn nth_any(
        &self,
        a: &NormalOrderedExpr,
        b: &NormalOrderedExpr,
        n: i64,
    ) -> NormalOrderedExpr {
        let mut out = NormalOrderedExpr::zero();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let prod = self.nth_mono(ma, mb, n);
                out.add_assign(&prod.scale(&(ca * cb)));
            }
        }
        out
    }

    // -- core recursion ------------------------------------------------------

    pub fn nth_mono(&self, a: &Monomial, b: &Monomial, n: i64) -> NormalOrderedExpr {
        if let Some(hit) = self.cache.get(&(a.clone(), b.clone(), n)) {
            return (**hit).clone();
        }
        let result = self.nth_mono_uncached(a, b, n);
        self.cache
            .insert((a.clone(), b.clone(), n), Arc::new(result.clone()));
        result
    }

    fn nth_mono_uncached(&self, a: &Monomial, b: &Monomial, n: i64) -> NormalOrderedExpr {
        let p = &*self.pres;
        // products that would land in negative weight vanish
        if n >= 0 {
            let wt = p.monomial_weight(a) + p.monomial_weight(b) - q_int(n + 1);
            if wt < Q::zero() {
                return NormalOrderedExpr::zero();
            }
        }
        if a.is_vacuum() {
            return if n == -1 {
                NormalOrderedExpr::monomial(b.clone(), Scalar::one())
            } else {
                NormalOrderedExpr::zero()
            };
        }
        if b.is_vacuum() {
            if n >= 0 {
                return NormalOrderedExpr::zero();
            }
            // A_(-1-j) |0> = d^(j) A
            let j = (-1 - n) as u32;
            return self.divided_derivative(a, j);
        }
        if n < -1 {
            let j = (-1 - n) as u32;
            let da = self.divided_derivative(a, j);
            return self.nth_any(&da, &NormalOrderedExpr::monomial(b.clone(), Scalar::one()), -1);
        }
        if n == -1 {
            return self.normal_mono(a, b);
        }
        // n >= 0
        let f = a.head().unwrap();
        if a.len() == 1 {
            if f.der > 0 {
                // (da')_(n) = -n a'_(n-1)
                if n == 0 {
                    return NormalOrderedExpr::zero();
                }
                let a2 = Monomial::single(f.gen, f.der - 1);
                return self.nth_mono(&a2, b, n - 1).scale_q(&q_int(-n));
            }
            let h = b.head().unwrap();
            if b.len() == 1 {
                if h.der > 0 {
                    // a_(n) db' = d(a_(n) b') + n a_(n-1) b'
                    let b2 = Monomial::single(h.gen, h.der - 1);
                    let inner = self.nth_mono(a, &b2, n);
                    let mut out = self.derive(&inner);
                    if n > 0 {
                        out.add_assign(&self.nth_mono(a, &b2, n - 1).scale_q(&q_int(n)));
                    }
                    return out;
                }
                return self.gen_pair_product(f.gen, h.gen, n);
            }
            // Wick: a_(n) :h B': with a a plain generator
            let bp = b.tail();
            let ah = self.nth_mono(a, &Monomial::single(h.gen, h.der), n);
            let bp_noe = NormalOrderedExpr::monomial(bp.clone(), Scalar::one());
            let mut out = self.nth_any(&ah, &bp_noe, -1);
            let sign = p.gens[f.gen].parity.koszul(p.gens[h.gen].parity);
            let a_bp = self.nth_mono(a, &bp, n);
            let h_noe = NormalOrderedExpr::monomial(Monomial::single(h.gen, h.der), Scalar::one());
            out.add_assign(&self.nth_any(&h_noe, &a_bp, -1).scale_q(&q_int(sign)));
            for j in 0..n {
                let ajh = self.nth_mono(a, &Monomial::single(h.gen, h.der), j);
                let c = binom(n, j as u32);
                let term = self.nth_any(&ajh, &bp_noe, n - 1 - j);
                out.add_assign(&term.scale_q(&c));
            }
            return out;
        }
        // A composite: left expansion of (:f A':)_(n)
        let ap = a.tail();
        let ap_noe = NormalOrderedExpr::monomial(ap.clone(), Scalar::one());
        let f_mono = Monomial::single(f.gen, f.der);
        let sign = p.gens[f.gen].parity.koszul(p.monomial_parity(&ap));
        let mut out = NormalOrderedExpr::zero();
        // sum_j :d^(j)f (A'_(n+j) B):
        let mut j: i64 = 0;
        loop {
            let limit = p.monomial_weight(&ap) + p.monomial_weight(b) - q_int(n + j + 1);
            if limit < Q::zero() {
                break;
            }
            let inner = self.nth_mono(&ap, b, n + j);
            if !inner.is_zero() {
                let df = self.divided_derivative(&f_mono, j as u32);
                out.add_assign(&self.nth_any(&df, &inner, -1));
            }
            j += 1;
        }
        // sum_j p(f,A') A'_(n-1-j) (f_(j) B)
        let mut j: i64 = 0;
        loop {
            let limit = p.monomial_weight(&f_mono) + p.monomial_weight(b) - q_int(j + 1);
            if limit < Q::zero() {
                break;
            }
            let fb = self.nth_mono(&f_mono, b, j);
            if !fb.is_zero() {
                out.add_assign(&self.nth_any(&ap_noe, &fb, n - 1 - j).scale_q(&q_int(sign)));
            }
            j += 1;
        }
        out
    }

    /// `:AB:` for monomials, reordering into the canonical basis.
    fn normal_mono(&self, a: &Monomial, b: &Monomial) -> NormalOrderedExpr {
        let f = a.head().unwrap();
        if a.len() == 1 {
            return self.canonical_prepend(f, b);
        }
        // quasi-associativity: :(:f A':) B: =
        //   :f (:A' B:): + sum_j :d^(j+1)f (A'_(j) B): + p sum_j :d^(j+1)A' (f_(j) B):
        let p = &*self.pres;
        let ap = a.tail();
        let f_mono = Monomial::single(f.gen, f.der);
        let sign = p.gens[f.gen].parity.koszul(p.monomial_parity(&ap));
        let inner = self.nth_mono(&ap, b, -1);
        let f_noe = NormalOrderedExpr::monomial(f_mono.clone(), Scalar::one());
        let mut out = self.nth_any(&f_noe, &inner, -1);
        let mut j: i64 = 0;
        loop {
            let limit = p.monomial_weight(&ap) + p.monomial_weight(b) - q_int(j + 1);
            if limit < Q::zero() {
                break;
            }
            let apb = self.nth_mono(&ap, b, j);
            if !apb.is_zero() {
                let df = self.divided_derivative(&f_mono, (j + 1) as u32);
                out.add_assign(&self.nth_any(&df, &apb, -1));
            }
            j += 1;
        }
        let mut j: i64 = 0;
        loop {
            let limit = p.monomial_weight(&f_mono) + p.monomial_weight(b) - q_int(j + 1);
            if limit < Q::zero() {
                break;
            }
            let fb = self.nth_mono(&f_mono, b, j);
            if !fb.is_zero() {
                let dap = self.divided_derivative(&ap, (j + 1) as u32);
                out.add_assign(&self.nth_any(&dap, &fb, -1).scale_q(&q_int(sign)));
            }
            j += 1;
        }
        out
    }

    /// `:f B:` with a single factor on the left; sorts `f` into place.
    fn canonical_prepend(&self, f: Factor, b: &Monomial) -> NormalOrderedExpr {
        let p = &*self.pres;
        let Some(h) = b.head() else {
            return NormalOrderedExpr::monomial(Monomial::single(f.gen, f.der), Scalar::one());
        };
        match p.factor_cmp(f, h) {
            std::cmp::Ordering::Less => {
                NormalOrderedExpr::monomial(b.prepended(f), Scalar::one())
            }
            std::cmp::Ordering::Equal => {
                if !p.gens[f.gen].parity.is_odd() {
                    return NormalOrderedExpr::monomial(b.prepended(f), Scalar::one());
                }
                // equal odd factors: 2 :f(:fB':): = :K B': with
                // K = sum_j (-1)^j d^(j+1)(f_(j) f)
                let bp = b.tail();
                let k = self.quasi_comm_correction(f, h);
                self.nth_any(
                    &k,
                    &NormalOrderedExpr::monomial(bp, Scalar::one()),
                    -1,
                )
                .scale(&Scalar::ratio(1, 2))
            }
            std::cmp::Ordering::Greater => {
                // :a(:bc:): = p(a,b) :b(:ac:): + :K c:
                let bp = b.tail();
                let sign = p.gens[f.gen].parity.koszul(p.gens[h.gen].parity);
                let sorted_tail = self.canonical_prepend(f, &bp);
                let h_noe =
                    NormalOrderedExpr::monomial(Monomial::single(h.gen, h.der), Scalar::one());
                let mut out = self.nth_any(&h_noe, &sorted_tail, -1).scale_q(&q_int(sign));
                let k = self.quasi_comm_correction(f, h);
                if !k.is_zero() {
                    out.add_assign(&self.nth_any(
                        &k,
                        &NormalOrderedExpr::monomial(bp, Scalar::one()),
                        -1,
                    ));
                }
                out
            }
        }
    }

    /// `K(a,b) = sum_j (-1)^j d^(j+1)(a_(j) b)`, the quasi-commutativity
    /// correction `:ab: - p :ba:` for single factors.
    fn quasi_comm_correction(&self, a: Factor, b: Factor) -> NormalOrderedExpr {
        let p = &*self.pres;
        let am = Monomial::single(a.gen, a.der);
        let bm = Monomial::single(b.gen, b.der);
        let mut out = NormalOrderedExpr::zero();
        let mut j: i64 = 0;
        loop {
            let limit = p.monomial_weight(&am) + p.monomial_weight(&bm) - q_int(j + 1);
            if limit < Q::zero() {
                break;
            }
            let ab = self.nth_mono(&am, &bm, j);
            if !ab.is_zero() {
                let d = self.divided_derivative_expr(&ab, (j + 1) as u32);
                let sgn = if j % 2 == 0 { 1 } else { -1 };
                out.add_assign(&d.scale_q(&q_int(sgn)));
            }
            j += 1;
        }
        out
    }

    fn derive_mono(&self, m: &Monomial) -> NormalOrderedExpr {
        let mut out = NormalOrderedExpr::zero();
        for i in 0..m.0.len() {
            let mut seq = m.0.clone();
            seq[i].der += 1;
            out.add_assign(&self.assemble(&seq));
        }
        out
    }

    /// `d^(j) A = d^j A / j!`.
    pub fn divided_derivative(&self, m: &Monomial, j: u32) -> NormalOrderedExpr {
        let e = NormalOrderedExpr::monomial(m.clone(), Scalar::one());
        self.divided_derivative_expr(&e, j)
    }

    pub fn divided_derivative_expr(&self, e: &NormalOrderedExpr, j: u32) -> NormalOrderedExpr {
        let mut out = e.clone();
        let mut fact = Q::from_integer(1.into());
        for t in 0..j {
            out = self.derive(&out);
            fact = fact * Q::from_integer(((t + 1) as i64).into());
        }
        out.scale_q(&(Q::from_integer(1.into()) / fact))
    }

    /// Canonicalize a raw factor sequence (right-nested reading).
    pub fn assemble(&self, seq: &[Factor]) -> NormalOrderedExpr {
        let mut acc = NormalOrderedExpr::vacuum();
        for f in seq.iter().rev() {
            let mut out = NormalOrderedExpr::zero();
            for (m, c) in &acc.terms {
                out.add_assign(&self.canonical_prepend(*f, m).scale(c));
            }
            acc = out;
        }
        acc
    }

    /// Base products of plain generators, using the skew rule when only the
    /// opposite orientation is stored.
    fn gen_pair_product(&self, a: GenId, b: GenId, n: i64) -> NormalOrderedExpr {
        let p = &*self.pres;
        if p.has_pair(a, b) {
            return p
                .stored_entry(a, b, n as usize)
                .cloned()
                .unwrap_or_else(NormalOrderedExpr::zero);
        }
        if p.has_pair(b, a) {
            return self.skew_image(b, a, n);
        }
        NormalOrderedExpr::zero()
    }

    /// `b_(n) a` from the stored products `a_(m) b`, via
    /// `b_(n) a = -(-1)^{p(a)p(b)} sum_j (-1)^{n+j} d^(j)(a_(n+j) b)`.
    pub fn skew_image(&self, a: GenId, b: GenId, n: i64) -> NormalOrderedExpr {
        let p = &*self.pres;
        let table = match p.ope.get(&(a, b)) {
            Some(t) => t,
            None => return NormalOrderedExpr::zero(),
        };
        let sign = p.gens[a].parity.koszul(p.gens[b].parity);
        let mut out = NormalOrderedExpr::zero();
        for m in 0..table.len() as i64 {
            let j = m - n;
            if j < 0 {
                continue;
            }
            let entry = &table[m as usize];
            if entry.is_zero() {
                continue;
            }
            let d = self.divided_derivative_expr(entry, j as u32);
            let sgn = if (n + j) % 2 == 0 { 1 } else { -1 };
            out.add_assign(&d.scale_q(&q_int(sgn * -sign)));
        }
        out
    }

    /// Largest `n` for which `A_(n) B` can be nonzero.
    pub fn pole_bound(&self, a: &NormalOrderedExpr, b: &NormalOrderedExpr) -> i64 {
        let p = &*self.pres;
        let mut best: Option<Q> = None;
        for ma in a.terms.keys() {
            for mb in b.terms.keys() {
                let w = p.monomial_weight(ma) + p.monomial_weight(mb);
                if best.as_ref().map(|x| *x < w).unwrap_or(true) {
                    best = Some(w);
                }
            }
        }
        match best {
            None => -1,
            Some(w) => {
                // n <= w - 1
                let f = w - Q::from_integer(1.into());
                f.floor().to_integer().try_into().unwrap_or(-1)
            }
        }
    }

    // -- realization of parsed trees ------------------------------------------

    pub fn realize(&self, tree: &ExprTree) -> Result<NormalOrderedExpr, Error> {
        match tree {
            ExprTree::Vacuum => Ok(NormalOrderedExpr::vacuum()),
            ExprTree::Gen(id) => Ok(NormalOrderedExpr::generator(*id)),
            ExprTree::Der(j, inner) => {
                let mut e = self.realize(inner)?;
                for _ in 0..*j {
                    e = self.derive(&e);
                }
                Ok(e)
            }
            ExprTree::Normal(factors) => {
                let mut acc = self.realize(factors.last().unwrap())?;
                for f in factors[..factors.len() - 1].iter().rev() {
                    let fe = self.realize(f)?;
                    acc = self.nth_any(&fe, &acc, -1);
                }
                Ok(acc)
            }
            ExprTree::Scaled(c, inner) => Ok(self.realize(inner)?.scale(c)),
            ExprTree::Sum(terms) => {
                let mut acc = NormalOrderedExpr::zero();
                for t in terms {
                    acc.add_assign(&self.realize(t)?);
                }
                Ok(acc)
            }
        }
    }

    /// Parse an expression string against this engine's presentation.
    pub fn parse_expr(&self, text: &str) -> Result<NormalOrderedExpr, Error> {
        let mut cur = crate::scalar::parse::Cursor::new(text);
        let tree = crate::presentation::parse_expr_tree(&mut cur, &self.pres)?;
        cur.skip_ws();
        if !cur.at_end() {
            return Err(cur.error("trailing input after expression"));
        }
        self.realize(&tree)
    }

    // -- identity checks -----------------------------------------------------

    /// Left and right side of the commutator-form Borcherds identity
    /// `a_m (b_n c) - p b_n (a_m c) = sum_j C(m,j) (a_j b)_{m+n-j} c`.
    pub fn jacobi_sides(
        &self,
        a: GenId,
        b: GenId,
        c: GenId,
        m: i64,
        n: i64,
    ) -> (NormalOrderedExpr, NormalOrderedExpr) {
        let p = &*self.pres;
        let am = Monomial::single(a, 0);
        let bm = Monomial::single(b, 0);
        let cm = Monomial::single(c, 0);
        let c_noe = NormalOrderedExpr::monomial(cm.clone(), Scalar::one());
        let bnc = self.nth_mono(&bm, &cm, n);
        let lhs1 = self.nth_any(&NormalOrderedExpr::monomial(am.clone(), Scalar::one()), &bnc, m);
        let amc = self.nth_mono(&am, &cm, m);
        let lhs2 = self.nth_any(&NormalOrderedExpr::monomial(bm.clone(), Scalar::one()), &amc, n);
        let sign = p.gens[a].parity.koszul(p.gens[b].parity);
        let lhs = lhs1.sub(&lhs2.scale_q(&q_int(sign)));
        let mut rhs = NormalOrderedExpr::zero();
        let mut j: i64 = 0;
        loop {
            let limit = p.gens[a].weight.clone() + p.gens[b].weight.clone() - q_int(j + 1);
            if limit < Q::zero() {
                break;
            }
            let ajb = self.nth_mono(&am, &bm, j);
            if !ajb.is_zero() {
                let term = self.nth_any(&ajb, &c_noe, m + n - j);
                rhs.add_assign(&term.scale_q(&binom(m, j as u32)));
            }
            j += 1;
        }
        (lhs, rhs)
    }

    /// Check `b_(n) a` against the skew image of the stored `(a, b)` row.
    pub fn skew_consistent(&self, a: GenId, b: GenId, n: i64) -> bool {
        let direct = self.nth_mono(&Monomial::single(b, 0), &Monomial::single(a, 0), n);
        let image = self.skew_image(a, b, n);
        direct == image
    }

    /// Validate the presentation: weight/parity/charge additivity on every
    /// stored entry, then skew consistency for doubly stored pairs. Returns
    /// the minimal failing identity.
    pub fn validate(&self) -> Result<(), Error> {
        let p = &*self.pres;
        let mut gradings: Vec<String> = Vec::new();
        for g in &p.gens {
            for k in g.charges.keys() {
                if !gradings.contains(k) {
                    gradings.push(k.clone());
                }
            }
        }
        let mut items: Vec<(Q, GenId, GenId, usize)> = Vec::new();
        for ((a, b), entries) in &p.ope {
            for n in 0..entries.len() {
                if !entries[n].is_zero() {
                    let w = p.gens[*a].weight.clone() + p.gens[*b].weight.clone();
                    items.push((w, *a, *b, n));
                }
            }
        }
        items.sort_by(|x, y| x.0.cmp(&y.0).then(x.1.cmp(&y.1)).then(x.2.cmp(&y.2)).then(x.3.cmp(&y.3)));
        for (_, a, b, n) in &items {
            let entry = p.stored_entry(*a, *b, *n).unwrap();
            let expect_w =
                p.gens[*a].weight.clone() + p.gens[*b].weight.clone() - q_int(*n as i64 + 1);
            match p.expr_weight(entry) {
                Some(w) if w == expect_w => {}
                Some(w) => {
                    return Err(Error::Validation {
                        identity: format!(
                            "weight additivity fails for {}_({}){}: got weight {}, expected {}",
                            p.gens[*a].name, n, p.gens[*b].name, w, expect_w
                        ),
                    })
                }
                None => {
                    return Err(Error::Validation {
                        identity: format!(
                            "entry {}_({}){} is not weight-homogeneous",
                            p.gens[*a].name, n, p.gens[*b].name
                        ),
                    })
                }
            }
            let expect_p = p.gens[*a].parity.combine(p.gens[*b].parity);
            match p.expr_parity(entry) {
                Some(pp) if pp == expect_p => {}
                _ => {
                    return Err(Error::Validation {
                        identity: format!(
                            "parity additivity fails for {}_({}){}",
                            p.gens[*a].name, n, p.gens[*b].name
                        ),
                    })
                }
            }
            for gr in &gradings {
                let expect_c = p.monomial_charge(&Monomial::single(*a, 0), gr)
                    + p.monomial_charge(&Monomial::single(*b, 0), gr);
                for m in entry.terms.keys() {
                    if p.monomial_charge(m, gr) != expect_c {
                        return Err(Error::Validation {
                            identity: format!(
                                "charge additivity ({}) fails for {}_({}){}",
                                gr, p.gens[*a].name, n, p.gens[*b].name
                            ),
                        });
                    }
                }
            }
        }
        // doubly stored pairs must agree with the skew rule
        for (a, b) in p.ope.keys() {
            if a != b && p.has_pair(*b, *a) {
                let bound = {
                    let w = p.gens[*a].weight.clone() + p.gens[*b].weight.clone();
                    (w - q_int(1)).floor().to_integer()
                };
                let bound: i64 = bound.try_into().unwrap_or(-1);
                for n in 0..=bound.max(0) {
                    if !self.skew_consistent(*a, *b, n) {
                        return Err(Error::Validation {
                            identity: format!(
                                "skew-symmetry fails for {}_({}){}",
                                p.gens[*b].name, n, p.gens[*a].name
                            ),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::GeneratorSymbol;
    use crate::expr::Parity;
    use std::collections::BTreeMap;

    /// Free boson: alpha_(1) alpha = |0>.
    fn heisenberg() -> Engine {
        let mut p = AlgebraPresentation::new("heis", &[], "L");
        p.add_generator(GeneratorSymbol {
            name: "a".into(),
            parity: Parity::Even,
            weight: q_int(1),
            charges: BTreeMap::new(),
            display_weight: q_int(1),
        })
        .unwrap();
        p.set_ope(0, 0, vec![NormalOrderedExpr::zero(), NormalOrderedExpr::vacuum()]);
        Engine::new(Arc::new(p))
    }

    #[test]
    fn vacuum_axioms() {
        let e = heisenberg();
        let a = NormalOrderedExpr::generator(0);
        let vac = NormalOrderedExpr::vacuum();
        assert!(e.nth_product(&vac, &a, 0).unwrap().is_zero());
        assert_eq!(e.nth_any(&vac, &a, -1), a);
        assert_eq!(e.nth_any(&a, &vac, -1), a);
        assert!(e.nth_product(&a, &vac, 2).unwrap().is_zero());
    }

    #[test]
    fn boson_pairing() {
        let e = heisenberg();
        let a = NormalOrderedExpr::generator(0);
        assert_eq!(e.nth_product(&a, &a, 1).unwrap(), NormalOrderedExpr::vacuum());
        assert!(e.nth_product(&a, &a, 0).unwrap().is_zero());
    }

    #[test]
    fn negative_index_is_rejected() {
        let e = heisenberg();
        let a = NormalOrderedExpr::generator(0);
        assert!(matches!(
            e.nth_product(&a, &a, -1),
            Err(Error::NegativeProductIndex(-1))
        ));
    }

    #[test]
    fn sugawara_virasoro_from_boson() {
        // L = :aa:/2 satisfies L_(3)L = (1/2)|0> (c = 1), L_(1)L = 2L.
        let e = heisenberg();
        let a = NormalOrderedExpr::generator(0);
        let aa = e.normally_ordered(&a, &a);
        let l = aa.scale(&Scalar::ratio(1, 2));
        let l3 = e.nth_product(&l, &l, 3).unwrap();
        assert_eq!(l3, NormalOrderedExpr::vacuum().scale(&Scalar::ratio(1, 2)));
        let l1 = e.nth_product(&l, &l, 1).unwrap();
        assert_eq!(l1, l.scale(&Scalar::from_int(2)));
        let l2 = e.nth_product(&l, &l, 2).unwrap();
        assert!(l2.is_zero());
        // L_(0)L = dL
        let l0 = e.nth_product(&l, &l, 0).unwrap();
        assert_eq!(l0, e.derive(&l));
    }

    #[test]
    fn boson_derivative_rules() {
        let e = heisenberg();
        let a = NormalOrderedExpr::generator(0);
        let da = e.derive(&a);
        // (da)_(2) a = -2 a_(1) a = -2 |0>
        let lhs = e.nth_product(&da, &a, 2).unwrap();
        assert_eq!(lhs, NormalOrderedExpr::vacuum().scale(&Scalar::from_int(-2)));
        // a_(2) da = d(a_(2)a) + 2 a_(1)a = 2|0>
        let rhs = e.nth_product(&a, &da, 2).unwrap();
        assert_eq!(rhs, NormalOrderedExpr::vacuum().scale(&Scalar::from_int(2)));
    }
}
