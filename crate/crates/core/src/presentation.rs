//! Algebra presentations: generators with parity/weight/charges plus an OPE
//! table giving `a_(n) b` for `n >= 0`, and the line-oriented text format.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::Error;
use crate::expr::{Factor, GenId, Monomial, NormalOrderedExpr, Parity};
use crate::scalar::parse::{scalar_sum, Cursor};
use crate::scalar::{parse_scalar, Q, Scalar};

/// A strong generator of a presentation.
#[derive(Clone, Debug)]
pub struct GeneratorSymbol {
    pub name: String,
    pub parity: Parity,
    /// Conformal weight under the presentation's grading Virasoro.
    pub weight: Q,
    /// Zero-mode charges, keyed by grading name (e.g. "J" or "H").
    pub charges: BTreeMap<String, Q>,
    /// Weight used for display mode labels `a(n) = a_(n + offset - 1)`.
    pub display_weight: Q,
}

/// A vertex superalgebra presented by generators and a singular-part table.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    pub name: String,
    pub params: Vec<String>,
    pub gens: Vec<GeneratorSymbol>,
    /// Stored table entries: `(a, b) -> [a_(0)b, a_(1)b, ...]`.
    pub ope: BTreeMap<(GenId, GenId), Vec<NormalOrderedExpr>>,
    /// Name of the Virasoro element defining the grading (may be composite).
    pub grading_virasoro: String,
    pub ideal_generators: Vec<NormalOrderedExpr>,
}

impl AlgebraPresentation {
    pub fn new(name: &str, params: &[&str], grading: &str) -> Self {
        AlgebraPresentation {
            name: name.to_string(),
            params: params.iter().map(|s| s.to_string()).collect(),
            gens: Vec::new(),
            ope: BTreeMap::new(),
            grading_virasoro: grading.to_string(),
            ideal_generators: Vec::new(),
        }
    }

    pub fn add_generator(&mut self, g: GeneratorSymbol) -> Result<GenId, Error> {
        if self.gens.iter().any(|h| h.name == g.name) {
            return Err(Error::NameClash(g.name));
        }
        self.gens.push(g);
        Ok(self.gens.len() - 1)
    }

    pub fn gen_id(&self, name: &str) -> Result<GenId, Error> {
        self.gens
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn generator(&self, id: GenId) -> &GeneratorSymbol {
        &self.gens[id]
    }

    pub fn set_ope(&mut self, a: GenId, b: GenId, mut entries: Vec<NormalOrderedExpr>) {
        while entries.last().map(|e| e.is_zero()).unwrap_or(false) {
            entries.pop();
        }
        self.ope.insert((a, b), entries);
    }

    /// Raw table lookup; `None` when the pair is not stored in this direction.
    pub fn stored_entry(&self, a: GenId, b: GenId, n: usize) -> Option<&NormalOrderedExpr> {
        self.ope.get(&(a, b)).map(|v| {
            v.get(n).unwrap_or({
                static ZERO: std::sync::OnceLock<NormalOrderedExpr> = std::sync::OnceLock::new();
                ZERO.get_or_init(NormalOrderedExpr::zero)
            })
        })
    }

    pub fn has_pair(&self, a: GenId, b: GenId) -> bool {
        self.ope.contains_key(&(a, b))
    }

    pub fn factor_weight(&self, f: Factor) -> Q {
        &self.gens[f.gen].weight + Q::from_integer(f.der.into())
    }

    pub fn monomial_weight(&self, m: &Monomial) -> Q {
        m.0.iter()
            .map(|f| self.factor_weight(*f))
            .fold(Q::from_integer(0.into()), |a, b| a + b)
    }

    pub fn monomial_parity(&self, m: &Monomial) -> Parity {
        m.0.iter().fold(Parity::Even, |p, f| {
            p.combine(self.gens[f.gen].parity)
        })
    }

    pub fn monomial_charge(&self, m: &Monomial, grading: &str) -> Q {
        m.0.iter()
            .map(|f| {
                self.gens[f.gen]
                    .charges
                    .get(grading)
                    .cloned()
                    .unwrap_or_else(|| Q::from_integer(0.into()))
            })
            .fold(Q::from_integer(0.into()), |a, b| a + b)
    }

    /// Weight of a homogeneous expression, `None` for 0 or mixed weights.
    pub fn expr_weight(&self, e: &NormalOrderedExpr) -> Option<Q> {
        let mut wt: Option<Q> = None;
        for m in e.terms.keys() {
            let w = self.monomial_weight(m);
            match &wt {
                None => wt = Some(w),
                Some(prev) if *prev == w => {}
                _ => return None,
            }
        }
        wt
    }

    pub fn expr_parity(&self, e: &NormalOrderedExpr) -> Option<Parity> {
        let mut par: Option<Parity> = None;
        for m in e.terms.keys() {
            let p = self.monomial_parity(m);
            match par {
                None => par = Some(p),
                Some(prev) if prev == p => {}
                _ => return None,
            }
        }
        par
    }

    /// Canonical factor order: `(weight, name)` ascending, then derivative
    /// order non-increasing among equal generators.
    pub fn factor_cmp(&self, a: Factor, b: Factor) -> std::cmp::Ordering {
        let ga = &self.gens[a.gen];
        let gb = &self.gens[b.gen];
        ga.weight
            .cmp(&gb.weight)
            .then_with(|| ga.name.cmp(&gb.name))
            .then_with(|| b.der.cmp(&a.der))
    }

    /// A monomial is canonical when its factors are sorted and no odd factor
    /// repeats exactly.
    pub fn is_canonical(&self, m: &Monomial) -> bool {
        for w in m.0.windows(2) {
            match self.factor_cmp(w[0], w[1]) {
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Equal => {
                    if self.gens[w[0].gen].parity.is_odd() {
                        return false;
                    }
                }
                std::cmp::Ordering::Less => {}
            }
        }
        true
    }

    /// All canonical monomials of exact weight `w` (weights are positive for
    /// every factor, so the enumeration is finite).
    pub fn weight_space(&self, w: &Q) -> Vec<Monomial> {
        let mut letters: Vec<Factor> = Vec::new();
        for (id, g) in self.gens.iter().enumerate() {
            let mut d = 0u32;
            loop {
                let fw = &g.weight + Q::from_integer(d.into());
                if fw > *w {
                    break;
                }
                letters.push(Factor::new(id, d));
                d += 1;
            }
        }
        // sort letters in canonical factor order
        letters.sort_by(|a, b| self.factor_cmp(*a, *b));
        let mut out = Vec::new();
        let mut cur: Vec<Factor> = Vec::new();
        self.fill_space(&letters, 0, w.clone(), &mut cur, &mut out);
        out
    }

    fn fill_space(
        &self,
        letters: &[Factor],
        from: usize,
        rem: Q,
        cur: &mut Vec<Factor>,
        out: &mut Vec<Monomial>,
    ) {
        use num_traits::Zero;
        if rem.is_zero() {
            out.push(Monomial(cur.clone()));
            return;
        }
        if rem < Q::zero() {
            return;
        }
        for (i, f) in letters.iter().enumerate().skip(from) {
            let fw = self.factor_weight(*f);
            if fw > rem {
                continue;
            }
            // odd generators: no exact repetition
            if self.gens[f.gen].parity.is_odd() {
                if cur.last() == Some(f) {
                    continue;
                }
            }
            cur.push(*f);
            self.fill_space(letters, i, &rem - &fw, cur, out);
            cur.pop();
        }
    }

    /// Tensor product of two presentations: disjoint generator sets, zero
    /// cross-products, weights and charges inherited.
    pub fn tensor(&self, other: &AlgebraPresentation) -> Result<AlgebraPresentation, Error> {
        let mut out = AlgebraPresentation::new(
            &format!("tensor({},{})", self.name, other.name),
            &[],
            &self.grading_virasoro,
        );
        out.params = self.params.clone();
        for p in &other.params {
            if !out.params.contains(p) {
                out.params.push(p.clone());
            }
        }
        for g in &self.gens {
            out.add_generator(g.clone())?;
        }
        for g in &other.gens {
            out.add_generator(g.clone())?;
        }
        let off = self.gens.len();
        for ((a, b), entries) in &self.ope {
            out.ope.insert((*a, *b), entries.clone());
        }
        let shift = |e: &NormalOrderedExpr| -> NormalOrderedExpr {
            let mut ne = NormalOrderedExpr::zero();
            for (m, c) in &e.terms {
                let nm = Monomial(
                    m.0.iter()
                        .map(|f| Factor::new(f.gen + off, f.der))
                        .collect(),
                );
                ne.add_term(nm, c.clone());
            }
            ne
        };
        for ((a, b), entries) in &other.ope {
            out.ope
                .insert((a + off, b + off), entries.iter().map(shift).collect());
        }
        out.ideal_generators = self.ideal_generators.clone();
        for e in &other.ideal_generators {
            out.ideal_generators.push(shift(e));
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Expression parsing and printing in the context of a presentation
// ---------------------------------------------------------------------------

/// Parse a generator-aware identifier: an optional single trailing `+`/`-`
/// is taken only when the extended name is a declared generator.
fn parse_gen_name(cur: &mut Cursor, p: &AlgebraPresentation) -> Result<Option<GenId>, Error> {
    cur.skip_ws();
    let save = cur.pos;
    let base = match cur.ident() {
        Ok(s) => s,
        Err(_) => return Ok(None),
    };
    if let Some(sign) = cur.peek() {
        if sign == b'+' || sign == b'-' {
            let extended = format!("{}{}", base, sign as char);
            if p.gen_id(&extended).is_ok() {
                cur.bump();
                return Ok(Some(p.gen_id(&extended).unwrap()));
            }
        }
    }
    if let Ok(id) = p.gen_id(&base) {
        Ok(Some(id))
    } else {
        // not a generator; caller decides what to do with the ident
        let _ = save;
        Err(Error::UnknownGenerator(base))
    }
}

/// Unreduced expression tree produced by the parser; `crate::engine`
/// canonicalizes it against a presentation.
#[derive(Clone, Debug)]
pub enum ExprTree {
    Vacuum,
    Gen(GenId),
    Der(u32, Box<ExprTree>),
    /// Right-nested normal ordering of two or more factors.
    Normal(Vec<ExprTree>),
    Scaled(Scalar, Box<ExprTree>),
    Sum(Vec<ExprTree>),
}

fn parse_factor(cur: &mut Cursor, p: &AlgebraPresentation) -> Result<ExprTree, Error> {
    cur.skip_ws();
    match cur.peek() {
        Some(b'|') => {
            cur.bump();
            cur.expect(b'0')?;
            cur.expect(b'>')?;
            Ok(ExprTree::Vacuum)
        }
        Some(b':') => {
            cur.bump();
            cur.expect(b'(')?;
            let mut factors = Vec::new();
            loop {
                cur.skip_ws();
                if cur.peek() == Some(b')') {
                    cur.bump();
                    break;
                }
                factors.push(parse_factor(cur, p)?);
            }
            if factors.is_empty() {
                return Err(cur.error("empty normal-ordered product"));
            }
            Ok(ExprTree::Normal(factors))
        }
        Some(b'd') if cur.peek_at(1) == Some(b'^') => {
            cur.bump();
            cur.bump();
            let j = cur.integer()?;
            let j: u32 = j.try_into().map_err(|_| cur.error("derivative order"))?;
            cur.expect(b'(')?;
            let inner = parse_factor(cur, p)?;
            cur.expect(b')')?;
            Ok(ExprTree::Der(j, Box::new(inner)))
        }
        Some(c) if c.is_ascii_alphabetic() || c == b'_' => match parse_gen_name(cur, p)? {
            Some(id) => Ok(ExprTree::Gen(id)),
            None => Err(cur.error("expected factor")),
        },
        _ => Err(cur.error("expected factor")),
    }
}

fn starts_factor(cur: &Cursor, p: &AlgebraPresentation) -> bool {
    let mut c2 = clone_cursor(cur);
    c2.skip_ws();
    match c2.peek() {
        Some(b'|') | Some(b':') => true,
        Some(b'd') if c2.peek_at(1) == Some(b'^') => true,
        Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
            parse_gen_name(&mut c2, p).map(|o| o.is_some()).unwrap_or(false)
        }
        _ => false,
    }
}

fn clone_cursor<'a>(cur: &Cursor<'a>) -> Cursor<'a> {
    cur.clone()
}

fn parse_term(cur: &mut Cursor, p: &AlgebraPresentation) -> Result<ExprTree, Error> {
    cur.skip_ws();
    if starts_factor(cur, p) {
        return parse_factor(cur, p);
    }
    // scalar coefficient (product level; parenthesized sums allowed inside)
    let coef = parse_coefficient(cur, p)?;
    cur.skip_ws();
    if cur.peek() == Some(b'*') {
        let mut c2 = clone_cursor(cur);
        c2.bump();
        if starts_factor(&c2, p) {
            cur.bump();
            let f = parse_factor(cur, p)?;
            return Ok(ExprTree::Scaled(coef, Box::new(f)));
        }
    }
    Ok(ExprTree::Scaled(coef, Box::new(ExprTree::Vacuum)))
}

/// Scalar sub-parser that stops before a `*` that introduces a factor.
fn parse_coefficient(cur: &mut Cursor, p: &AlgebraPresentation) -> Result<Scalar, Error> {
    let mut acc = parse_coef_power(cur, p)?;
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some(b'*') => {
                let mut c2 = clone_cursor(cur);
                c2.bump();
                if starts_factor(&c2, p) {
                    return Ok(acc);
                }
                cur.bump();
                let rhs = parse_coef_power(cur, p)?;
                acc = &acc * &rhs;
            }
            Some(b'/') => {
                cur.bump();
                let rhs = parse_coef_power(cur, p)?;
                acc = acc
                    .checked_div(&rhs)
                    .map_err(|_| cur.error("division by zero"))?;
            }
            _ => return Ok(acc),
        }
    }
}

fn parse_coef_power(cur: &mut Cursor, p: &AlgebraPresentation) -> Result<Scalar, Error> {
    let base = parse_coef_atom(cur, p)?;
    cur.skip_ws();
    if cur.peek() == Some(b'^') {
        cur.bump();
        cur.skip_ws();
        let neg = cur.eat(b'-');
        let e = cur.integer()?;
        let e: i64 = e.try_into().map_err(|_| cur.error("exponent out of range"))?;
        let e = if neg { -e } else { e };
        return base.pow(e).map_err(|_| cur.error("inverse of zero"));
    }
    Ok(base)
}

fn parse_coef_atom(cur: &mut Cursor, p: &AlgebraPresentation) -> Result<Scalar, Error> {
    cur.skip_ws();
    match cur.peek() {
        Some(b'-') => {
            cur.bump();
            let s = parse_coef_power(cur, p)?;
            Ok(-&s)
        }
        Some(b'(') => {
            cur.bump();
            let s = scalar_sum(cur)?;
            cur.expect(b')')?;
            Ok(s)
        }
        Some(b'0'..=b'9') => {
            let n = cur.integer()?;
            Ok(Scalar::from_q(Q::from_integer(n)))
        }
        Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
            let name = cur.ident()?;
            if !p.params.contains(&name) {
                return Err(cur.error(format!("'{name}' is neither a parameter nor a generator")));
            }
            Ok(Scalar::var(&name))
        }
        _ => Err(cur.error("expected scalar coefficient")),
    }
}

/// Parse a full expression (sum of terms) against a presentation.
pub fn parse_expr_tree(cur: &mut Cursor, p: &AlgebraPresentation) -> Result<ExprTree, Error> {
    let mut terms = Vec::new();
    let first = parse_term(cur, p)?;
    terms.push(first);
    loop {
        cur.skip_ws();
        match cur.peek() {
            Some(b'+') => {
                cur.bump();
                terms.push(parse_term(cur, p)?);
            }
            Some(b'-') => {
                cur.bump();
                let t = parse_term(cur, p)?;
                terms.push(ExprTree::Scaled(-&Scalar::one(), Box::new(t)));
            }
            _ => break,
        }
    }
    Ok(ExprTree::Sum(terms))
}

/// Canonical printing of an expression against a presentation.
pub fn print_expr(p: &AlgebraPresentation, e: &NormalOrderedExpr) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (m, c) in &e.terms {
        let body = print_monomial(p, m);
        if m.is_vacuum() {
            parts.push(format!("({})*|0>", c));
        } else if c.is_one() {
            parts.push(body);
        } else {
            parts.push(format!("({})*{}", c, body));
        }
    }
    parts.join(" + ")
}

pub fn print_monomial(p: &AlgebraPresentation, m: &Monomial) -> String {
    let pf = |f: &Factor| -> String {
        let name = &p.gens[f.gen].name;
        if f.der == 0 {
            name.clone()
        } else {
            format!("d^{}({})", f.der, name)
        }
    };
    match m.0.len() {
        0 => "|0>".to_string(),
        1 => pf(&m.0[0]),
        _ => {
            let inner: Vec<String> = m.0.iter().map(pf).collect();
            format!(":({})", inner.join(" "))
        }
    }
}

// ---------------------------------------------------------------------------
// Presentation files
// ---------------------------------------------------------------------------

/// Parse the line-oriented presentation format. Expressions are returned as
/// trees; the caller canonicalizes them through an engine.
pub struct ParsedPresentation {
    pub presentation: AlgebraPresentation,
    pub ope_trees: Vec<(GenId, GenId, Vec<(usize, ExprTree)>)>,
    pub ideal_trees: Vec<ExprTree>,
}

pub fn parse_presentation_text(text: &str) -> Result<ParsedPresentation, Error> {
    let mut pres: Option<AlgebraPresentation> = None;
    let mut ope_trees = Vec::new();
    let mut ideal_trees = Vec::new();

    let mut lines = text.lines().enumerate().peekable();
    while let Some((lineno, raw)) = lines.next() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: &str| Error::Parse {
            line: lineno + 1,
            col: 1,
            msg: msg.to_string(),
        };
        let mut words = line.split_whitespace();
        match words.next() {
            Some("algebra") => {
                let name = words.next().ok_or_else(|| err("missing algebra name"))?;
                pres = Some(AlgebraPresentation::new(name, &[], "L"));
            }
            Some("param") => {
                let p = pres.as_mut().ok_or_else(|| err("param before algebra"))?;
                for w in words {
                    p.params.push(w.to_string());
                }
            }
            Some("grading") => {
                let p = pres.as_mut().ok_or_else(|| err("grading before algebra"))?;
                p.grading_virasoro = words
                    .next()
                    .ok_or_else(|| err("missing grading name"))?
                    .to_string();
            }
            Some("generator") => {
                let p = pres.as_mut().ok_or_else(|| err("generator before algebra"))?;
                let name = words.next().ok_or_else(|| err("missing generator name"))?;
                let mut parity = Parity::Even;
                let mut weight: Option<Q> = None;
                let mut display: Option<Q> = None;
                let mut charges = BTreeMap::new();
                for w in words {
                    let (key, val) = w
                        .split_once('=')
                        .ok_or_else(|| err("expected key=value attribute"))?;
                    match key {
                        "parity" => {
                            parity = match val {
                                "even" => Parity::Even,
                                "odd" => Parity::Odd,
                                _ => return Err(err("parity must be even|odd")),
                            }
                        }
                        "weight" => {
                            let s = parse_scalar(val)?;
                            weight = Some(s.as_q().ok_or(Error::NonConstant)?);
                        }
                        "display" => {
                            let s = parse_scalar(val)?;
                            display = Some(s.as_q().ok_or(Error::NonConstant)?);
                        }
                        k if k.starts_with("charge.") => {
                            let grading = k.trim_start_matches("charge.").to_string();
                            let s = parse_scalar(val)?;
                            charges.insert(grading, s.as_q().ok_or(Error::NonConstant)?);
                        }
                        _ => return Err(err("unknown generator attribute")),
                    }
                }
                let weight = weight.ok_or_else(|| err("generator needs weight="))?;
                let display_weight = display.unwrap_or_else(|| weight.clone());
                p.add_generator(GeneratorSymbol {
                    name: name.to_string(),
                    parity,
                    weight,
                    charges,
                    display_weight,
                })?;
            }
            Some("ope") => {
                let p = pres.as_mut().ok_or_else(|| err("ope before algebra"))?;
                // syntax: ope A B { n: expr; n: expr; }
                let rest = line.trim_start_matches("ope").trim();
                let brace = rest.find('{').ok_or_else(|| err("expected '{'"))?;
                let names: Vec<&str> = rest[..brace].split_whitespace().collect();
                if names.len() != 2 {
                    return Err(err("ope needs two generator names"));
                }
                let a = p.gen_id(names[0])?;
                let b = p.gen_id(names[1])?;
                let mut body = rest[brace + 1..].to_string();
                while !body.contains('}') {
                    let (_, next) = lines.next().ok_or_else(|| err("unterminated ope block"))?;
                    body.push(' ');
                    body.push_str(next.trim());
                }
                let body = body[..body.find('}').unwrap()].to_string();
                let mut entries = Vec::new();
                for chunk in body.split(';') {
                    let chunk = chunk.trim();
                    if chunk.is_empty() {
                        continue;
                    }
                    let (ns, es) = chunk
                        .split_once(':')
                        .ok_or_else(|| err("ope entry needs 'n: expr'"))?;
                    let n: usize = ns
                        .trim()
                        .parse()
                        .map_err(|_| err("bad product index in ope entry"))?;
                    let mut cur = Cursor::new(es.trim());
                    let tree = parse_expr_tree(&mut cur, p)?;
                    cur.skip_ws();
                    if !cur.at_end() {
                        return Err(err(&format!(
                            "trailing input in ope entry for index {n}"
                        )));
                    }
                    entries.push((n, tree));
                }
                ope_trees.push((a, b, entries));
            }
            Some("ideal") => {
                let p = pres.as_ref().ok_or_else(|| err("ideal before algebra"))?;
                let rest = line.trim_start_matches("ideal").trim();
                let brace = rest.find('{').ok_or_else(|| err("expected '{'"))?;
                let mut body = rest[brace + 1..].to_string();
                while !body.contains('}') {
                    let (_, next) = lines.next().ok_or_else(|| err("unterminated ideal block"))?;
                    body.push(' ');
                    body.push_str(next.trim());
                }
                let body = body[..body.find('}').unwrap()].to_string();
                for chunk in body.split(';') {
                    let chunk = chunk.trim();
                    if chunk.is_empty() {
                        continue;
                    }
                    let mut cur = Cursor::new(chunk);
                    let tree = parse_expr_tree(&mut cur, p)?;
                    ideal_trees.push(tree);
                }
            }
            Some(other) => {
                return Err(err(&format!("unknown directive '{other}'")));
            }
            None => {}
        }
    }
    let presentation = pres.ok_or(Error::Parse {
        line: 1,
        col: 1,
        msg: "no algebra block".to_string(),
    })?;
    Ok(ParsedPresentation {
        presentation,
        ope_trees,
        ideal_trees,
    })
}

/// Canonical text rendering; `parse . print` is the identity on canonical
/// presentations.
pub fn print_presentation(p: &AlgebraPresentation) -> String {
    let mut out = String::new();
    writeln!(out, "algebra {}", p.name).unwrap();
    if !p.params.is_empty() {
        writeln!(out, "param {}", p.params.join(" ")).unwrap();
    }
    writeln!(out, "grading {}", p.grading_virasoro).unwrap();
    for g in &p.gens {
        let mut line = format!(
            "generator {} parity={} weight={}",
            g.name,
            match g.parity {
                Parity::Even => "even",
                Parity::Odd => "odd",
            },
            g.weight
        );
        if g.display_weight != g.weight {
            line.push_str(&format!(" display={}", g.display_weight));
        }
        for (grading, q) in &g.charges {
            use num_traits::Zero;
            if !q.is_zero() {
                line.push_str(&format!(" charge.{}={}", grading, q));
            }
        }
        writeln!(out, "{}", line).unwrap();
    }
    for ((a, b), entries) in &p.ope {
        let mut body = Vec::new();
        for (n, e) in entries.iter().enumerate() {
            if !e.is_zero() {
                body.push(format!("{}: {}", n, print_expr(p, e)));
            }
        }
        writeln!(
            out,
            "ope {} {} {{ {}; }}",
            p.gens[*a].name,
            p.gens[*b].name,
            body.join("; ")
        )
        .unwrap();
    }
    if !p.ideal_generators.is_empty() {
        let body: Vec<String> = p
            .ideal_generators
            .iter()
            .map(|e| print_expr(p, e))
            .collect();
        writeln!(out, "ideal {{ {}; }}", body.join("; ")).unwrap();
    }
    out
}

/// Print an identifier list usable in diagnostics.
pub fn pair_label(p: &AlgebraPresentation, a: GenId, b: GenId) -> String {
    format!("({}, {})", p.gens[a].name, p.gens[b].name)
}

pub type GenName = Arc<str>;
