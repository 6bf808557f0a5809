//! Built-in algebra presentations: Virasoro, Heisenberg, the N=2
//! superconformal algebra, and the subregular W-algebra of sl4 in both
//! first-order-pole coefficient variants, plus named composite fields.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::engine::Engine;
use crate::error::Error;
use crate::expr::{NormalOrderedExpr, Parity};
use crate::presentation::{AlgebraPresentation, GeneratorSymbol};
use crate::scalar::{parse_scalar, q_int, q_ratio, Q, Scalar};

/// A validated preset: presentation, its engine, and named composite fields.
pub struct Preset {
    pub presentation: Arc<AlgebraPresentation>,
    pub engine: Arc<Engine>,
    pub named_fields: BTreeMap<String, NormalOrderedExpr>,
}

impl Preset {
    pub fn field(&self, name: &str) -> Result<&NormalOrderedExpr, Error> {
        self.named_fields
            .get(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }
}

pub const PRESET_NAMES: &[&str] = &["virasoro", "heis", "n2", "wsl4sub", "wsl4sub-altB"];

/// The first-order-pole variant chosen by the adjudication suite; `wsl4sub`
/// carries it, `wsl4sub-altB` carries the other reading.
pub const WSL4SUB_DEFAULT_VARIANT: &str = "wsl4sub";

fn sc(text: &str) -> Scalar {
    parse_scalar(text).expect("preset coefficient parses")
}

fn gen(name: &str, parity: Parity, weight: Q, display: Q, charges: &[(&str, Q)]) -> GeneratorSymbol {
    GeneratorSymbol {
        name: name.to_string(),
        parity,
        weight,
        charges: charges
            .iter()
            .map(|(g, q)| (g.to_string(), q.clone()))
            .collect(),
        display_weight: display,
    }
}

/// Load a preset by name, optionally applying an override file (text in the
/// presentation format containing replacement `ope` blocks).
pub fn load_preset(name: &str, overrides: Option<&str>) -> Result<Preset, Error> {
    let mut preset = match name {
        "virasoro" => virasoro(),
        "heis" => heisenberg(),
        "n2" => n2(),
        "wsl4sub" => wsl4sub(GpGmVariant::Main),
        "wsl4sub-altB" => wsl4sub(GpGmVariant::AltB),
        other => return Err(Error::UnknownPreset(other.to_string())),
    }?;
    if let Some(text) = overrides {
        preset = apply_overrides(preset, text)?;
    }
    preset.engine.validate()?;
    Ok(preset)
}

fn apply_overrides(preset: Preset, text: &str) -> Result<Preset, Error> {
    use crate::presentation::parse_presentation_text;
    let mut pres = (*preset.presentation).clone();
    // Accept either a full presentation file or bare ope blocks wrapped in
    // the preset's own header.
    let wrapped = if text.trim_start().starts_with("algebra") {
        text.to_string()
    } else {
        format!("{}\n{}", crate::presentation::print_presentation(&pres), text)
    };
    let parsed = parse_presentation_text(&wrapped)?;
    let stage = Engine::new(Arc::new(pres.clone()));
    for (a, b, entries) in &parsed.ope_trees {
        let mut row: Vec<NormalOrderedExpr> = Vec::new();
        for (n, tree) in entries {
            let e = stage.realize(tree)?;
            while row.len() <= *n {
                row.push(NormalOrderedExpr::zero());
            }
            row[*n] = e;
        }
        pres.set_ope(*a, *b, row);
    }
    let presentation = Arc::new(pres);
    let engine = Arc::new(Engine::new(presentation.clone()));
    Ok(Preset {
        presentation,
        engine,
        named_fields: preset.named_fields,
    })
}

// ---------------------------------------------------------------------------
// Virasoro and Heisenberg
// ---------------------------------------------------------------------------

fn virasoro() -> Result<Preset, Error> {
    let mut p = AlgebraPresentation::new("virasoro", &["c"], "L");
    let l = p.add_generator(gen("L", Parity::Even, q_int(2), q_int(2), &[]))?;
    let stage = Engine::new(Arc::new(p.clone()));
    let dl = stage.derive(&NormalOrderedExpr::generator(l));
    p.set_ope(
        l,
        l,
        vec![
            dl,
            NormalOrderedExpr::generator(l).scale(&Scalar::from_int(2)),
            NormalOrderedExpr::zero(),
            NormalOrderedExpr::vacuum().scale(&sc("c/2")),
        ],
    );
    finish(p, &[])
}

fn heisenberg() -> Result<Preset, Error> {
    let mut p = AlgebraPresentation::new("heis", &["l"], "L");
    let a = p.add_generator(gen("a", Parity::Even, q_int(1), q_int(1), &[]))?;
    p.set_ope(
        a,
        a,
        vec![
            NormalOrderedExpr::zero(),
            NormalOrderedExpr::vacuum().scale(&Scalar::var("l")),
        ],
    );
    finish(p, &[])
}

// ---------------------------------------------------------------------------
// N=2 superconformal algebra (graded by the shifted Virasoro T~ = T + dH)
// ---------------------------------------------------------------------------

fn n2() -> Result<Preset, Error> {
    let mut p = AlgebraPresentation::new("n2", &["c", "nu"], "Ttilde");
    // weights are T~(0)-weights; display labels follow the unshifted series
    let tt = p.add_generator(gen("T", Parity::Even, q_int(2), q_int(2), &[("H", q_int(0))]))?;
    let h = p.add_generator(gen("H", Parity::Even, q_int(1), q_int(1), &[("H", q_int(0))]))?;
    let e = p.add_generator(gen(
        "E",
        Parity::Odd,
        q_ratio(1, 2),
        q_ratio(3, 2),
        &[("H", q_int(1))],
    ))?;
    let f = p.add_generator(gen(
        "F",
        Parity::Odd,
        q_ratio(5, 2),
        q_ratio(3, 2),
        &[("H", q_int(-1))],
    ))?;
    let stage = Engine::new(Arc::new(p.clone()));
    let g_t = NormalOrderedExpr::generator(tt);
    let g_h = NormalOrderedExpr::generator(h);
    let g_e = NormalOrderedExpr::generator(e);
    let g_f = NormalOrderedExpr::generator(f);
    p.set_ope(
        tt,
        tt,
        vec![
            stage.derive(&g_t),
            g_t.scale(&Scalar::from_int(2)),
            NormalOrderedExpr::zero(),
            NormalOrderedExpr::vacuum().scale(&sc("c/2")),
        ],
    );
    p.set_ope(tt, h, vec![stage.derive(&g_h), g_h.clone()]);
    p.set_ope(tt, e, vec![stage.derive(&g_e), g_e.scale(&sc("3/2"))]);
    p.set_ope(tt, f, vec![stage.derive(&g_f), g_f.scale(&sc("3/2"))]);
    p.set_ope(
        h,
        h,
        vec![
            NormalOrderedExpr::zero(),
            NormalOrderedExpr::vacuum().scale(&sc("c/3")),
        ],
    );
    p.set_ope(h, e, vec![g_e.clone()]);
    p.set_ope(h, f, vec![g_f.neg()]);
    p.set_ope(
        e,
        f,
        vec![
            g_t.scale(&Scalar::from_int(2)).add(&stage.derive(&g_h)),
            g_h.scale(&Scalar::from_int(2)),
            NormalOrderedExpr::vacuum().scale(&sc("2*c/3")),
        ],
    );
    p.set_ope(e, e, vec![]);
    p.set_ope(f, f, vec![]);

    finish_with(p, |eng| {
        let g_t = NormalOrderedExpr::generator(tt);
        let g_h = NormalOrderedExpr::generator(h);
        let hh = eng.normally_ordered(&g_h, &g_h);
        let tperp = g_t.sub(&hh.scale(&sc("3/(2*c)")));
        let ttilde = g_t.add(&eng.derive(&g_h));
        let wn2 = parafermion_state(eng, tt, h, e, f, &Scalar::var("c"), &Scalar::var("nu"))?;
        Ok(vec![
            ("Tperp".to_string(), tperp),
            ("Ttilde".to_string(), ttilde),
            ("Wn2".to_string(), wn2),
        ])
    })
}

/// The parafermionic generator
/// `W = nu (:EF: - dT - (6/c):TH: - ((c-9)/3c) d^2 H + (6/c^2):H^3:)`.
fn parafermion_state(
    eng: &Engine,
    tt: usize,
    h: usize,
    e: usize,
    f: usize,
    c: &Scalar,
    nu: &Scalar,
) -> Result<NormalOrderedExpr, Error> {
    let g_t = NormalOrderedExpr::generator(tt);
    let g_h = NormalOrderedExpr::generator(h);
    let g_e = NormalOrderedExpr::generator(e);
    let g_f = NormalOrderedExpr::generator(f);
    let ef = eng.normally_ordered(&g_e, &g_f);
    let th = eng.normally_ordered(&g_t, &g_h);
    let hhh = eng.normally_ordered(&g_h, &eng.normally_ordered(&g_h, &g_h));
    let six = Scalar::from_int(6);
    let nine = Scalar::from_int(9);
    let three = Scalar::from_int(3);
    let term_th = th.scale(&six.checked_div(c)?);
    let term_d2h = eng
        .derive(&eng.derive(&g_h))
        .scale(&(c - &nine).checked_div(&(&three * c))?);
    let term_h3 = hhh.scale(&six.checked_div(&(c * c))?);
    let w = ef
        .sub(&eng.derive(&g_t))
        .sub(&term_th)
        .sub(&term_d2h)
        .add(&term_h3);
    Ok(w.scale(nu))
}

/// Parafermionic generator at given `c`, `nu`; errors on the excluded
/// central charges `{0, 1, 3/2, -6, -9}`.
pub fn parafermion_generator(c: &Scalar, nu: &Scalar) -> Result<NormalOrderedExpr, Error> {
    if let Some(cv) = c.as_q() {
        for bad in [q_int(0), q_int(1), q_ratio(3, 2), q_int(-6), q_int(-9)] {
            if cv == bad {
                return Err(Error::ExcludedCentralCharge(cv.to_string()));
            }
        }
    }
    let preset = load_preset("n2", None)?;
    let p = &preset.presentation;
    let (tt, h, e, f) = (
        p.gen_id("T")?,
        p.gen_id("H")?,
        p.gen_id("E")?,
        p.gen_id("F")?,
    );
    let w = parafermion_state(&preset.engine, tt, h, e, f, c, nu)?;
    if let Some(cv) = c.as_q() {
        let mut b = BTreeMap::new();
        b.insert("c".to_string(), cv);
        return w.specialize(&b);
    }
    Ok(w)
}

// ---------------------------------------------------------------------------
// Subregular W-algebra of sl4 (graded by the shifted Virasoro L~ = L + dJ)
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq)]
enum GpGmVariant {
    /// `-(k+4)/2 dL` and `8(11k+32)` in the first-order pole.
    Main,
    /// `+(k+4)/2 dL` and `8(k+11)`.
    AltB,
}

fn wsl4sub(variant: GpGmVariant) -> Result<Preset, Error> {
    let name = match variant {
        GpGmVariant::Main => "wsl4sub",
        GpGmVariant::AltB => "wsl4sub-altB",
    };
    let mut p = AlgebraPresentation::new(name, &["k"], "Ltilde");
    // weights under L~ = L + dJ, i.e. L-weight minus J-charge
    let j = p.add_generator(gen("J", Parity::Even, q_int(1), q_int(1), &[("J", q_int(0))]))?;
    let l = p.add_generator(gen("L", Parity::Even, q_int(2), q_int(2), &[("J", q_int(0))]))?;
    let gp = p.add_generator(gen("G+", Parity::Even, q_int(1), q_int(1), &[("J", q_int(1))]))?;
    let gm = p.add_generator(gen("G-", Parity::Even, q_int(3), q_int(3), &[("J", q_int(-1))]))?;
    let w = p.add_generator(gen("W", Parity::Even, q_int(3), q_int(3), &[("J", q_int(0))]))?;

    let g_j = NormalOrderedExpr::generator(j);
    let g_l = NormalOrderedExpr::generator(l);
    let g_gp = NormalOrderedExpr::generator(gp);
    let g_gm = NormalOrderedExpr::generator(gm);
    let g_w = NormalOrderedExpr::generator(w);

    // phase one: rows among J, L, G+, G- and the vanishing pairs
    {
        let stage = Engine::new(Arc::new(p.clone()));
        p.set_ope(
            j,
            j,
            vec![
                NormalOrderedExpr::zero(),
                NormalOrderedExpr::vacuum().scale(&sc("(3*k+8)/4")),
            ],
        );
        p.set_ope(j, gp, vec![g_gp.clone()]);
        p.set_ope(j, gm, vec![g_gm.neg()]);
        p.set_ope(j, w, vec![]);
        p.set_ope(l, j, vec![stage.derive(&g_j), g_j.clone()]);
        p.set_ope(
            l,
            l,
            vec![
                stage.derive(&g_l),
                g_l.scale(&Scalar::from_int(2)),
                NormalOrderedExpr::zero(),
                // c_k/2 with c_k = -(3k+8)(8k+17)/(k+4)
                NormalOrderedExpr::vacuum().scale(&sc("-(3*k+8)*(8*k+17)/(2*(k+4))")),
            ],
        );
        p.set_ope(l, gp, vec![stage.derive(&g_gp), g_gp.scale(&Scalar::from_int(2))]);
        p.set_ope(l, gm, vec![stage.derive(&g_gm), g_gm.scale(&Scalar::from_int(2))]);
        p.set_ope(l, w, vec![stage.derive(&g_w), g_w.scale(&Scalar::from_int(3))]);
        p.set_ope(gp, gp, vec![]);
        p.set_ope(gm, gm, vec![]);
    }

    // phase two: composite rows built with the phase-one engine
    let stage = Engine::new(Arc::new(p.clone()));
    let no = |a: &NormalOrderedExpr, b: &NormalOrderedExpr| stage.normally_ordered(a, b);
    let d = |a: &NormalOrderedExpr| stage.derive(a);

    let jj = no(&g_j, &g_j);
    let jjj = no(&g_j, &jj);
    let lj = no(&g_l, &g_j);
    let djj = no(&d(&g_j), &g_j);

    // G+ G- row
    let gpgm3 = NormalOrderedExpr::vacuum().scale(&sc("(k+2)*(2*k+5)*(3*k+8)"));
    let gpgm2 = g_j.scale(&sc("4*(k+2)*(2*k+5)"));
    let gpgm1 = jj
        .scale(&Scalar::from_int(6))
        .add(&d(&g_j).scale(&sc("2*(2*k+5)")))
        .sub(&g_l.scale(&sc("k+4")))
        .scale(&sc("k+2"));
    let (j3_coef, dl_coef) = match variant {
        GpGmVariant::Main => ("8*(11*k+32)/(3*(3*k+8)^2)", "-(k+4)/2"),
        GpGmVariant::AltB => ("8*(k+11)/(3*(3*k+8)^2)", "(k+4)/2"),
    };
    let gpgm0 = g_w
        .add(&jjj.scale(&sc(j3_coef)))
        .sub(&lj.scale(&sc("4*(k+4)/(3*k+8)")))
        .add(&djj.scale(&Scalar::from_int(6)))
        .add(&d(&g_l).scale(&sc(dl_coef)))
        .add(&d(&d(&g_j)).scale(&sc("4*(3*k^2+17*k+26)/(3*(3*k+8))")))
        .scale(&sc("k+2"));
    p.set_ope(gp, gm, vec![gpgm0, gpgm1, gpgm2, gpgm3]);

    // W G+/- rows
    for (gid, sign) in [(gp, 1i64), (gm, -1i64)] {
        let g = NormalOrderedExpr::generator(gid);
        let sgn = Scalar::from_int(sign);
        let jg = no(&g_j, &g);
        let jdg = no(&g_j, &d(&g));
        let djg = no(&d(&g_j), &g);
        let lg = no(&g_l, &g);
        let jjg = no(&g_j, &no(&g_j, &g));
        let row2 = g.scale(&(&sgn * &sc("2*(k+4)*(3*k+7)*(5*k+16)/(3*k+8)^2")));
        let row1 = d(&g)
            .scale(&(&sgn * &sc("3*(k+4)*(5*k+16)/(2*(3*k+8))")))
            .sub(&jg.scale(&sc("6*(k+4)*(5*k+16)/(3*k+8)^2")));
        let row0 = jdg
            .scale(&sc("-8*(k+4)*(k+3)/((k+2)*(3*k+8))"))
            .add(&djg.scale(&sc("-4*(k+4)*(3*k^2+15*k+16)/((k+2)*(3*k+8)^2)")))
            .add(&d(&d(&g)).scale(&(&sgn * &sc("(k+4)*(k+3)/(k+2)"))))
            .add(&lg.scale(&(&sgn * &sc("-2*(k+4)^2/((k+2)*(3*k+8))"))))
            .add(&jjg.scale(&(&sgn * &sc("4*(k+4)*(5*k+16)/((k+2)*(3*k+8)^2)"))));
        p.set_ope(w, gid, vec![row0, row1, row2]);
    }

    // W W row, via L-perp and the composite Lambda
    let lperp = g_l.sub(&jj.scale(&sc("2/(3*k+8)")));
    let lambda = {
        let gpgm = no(&g_gp, &g_gm);
        let wj = no(&g_w, &g_j);
        let lplp = no(&lperp, &lperp);
        let lpj = no(&lperp, &g_j);
        let lpjj = no(&lperp, &jj);
        let d2jj = no(&d(&d(&g_j)), &g_j);
        let djdj = no(&d(&g_j), &d(&g_j));
        let djjj = no(&d(&g_j), &jj);
        let j4 = no(&g_j, &jjj);
        let inner_peel = d2jj
            .scale(&sc("8/3"))
            .add(&djdj.scale(&Scalar::from_int(2)))
            .add(&djjj.scale(&sc("16/(3*k+8)")))
            .add(&j4.scale(&sc("32/(3*(3*k+8)^2)")))
            .add(&d(&d(&d(&g_j))).scale(&sc("(3*k+8)/6")));
        let bracket = d(&g_w)
            .scale(&sc("-1/2"))
            .sub(&wj.scale(&sc("4/(3*k+8)")))
            .add(&d(&d(&lperp)).scale(&sc(
                "(k+2)*(k+4)*(6*k^2+33*k+46)/(2*(3*k+8)*(20*k^2+93*k+102))",
            )))
            .sub(&lplp.scale(&sc("(k+4)^2*(11*k+26)/(2*(3*k+8)*(20*k^2+93*k+102))")))
            .add(&d(&lpj).scale(&sc("2*(k+4)/(3*k+8)")))
            .add(&lpjj.scale(&sc("8*(k+4)/(3*k+8)^2")))
            .sub(&inner_peel.scale(&sc("(2*k+5)/(3*k+8)")));
        gpgm.add(&bracket.scale(&sc("k+2"))).scale(&sc("1/(k+2)^2"))
    };
    let lplp = no(&lperp, &lperp);
    let dlplp = no(&d(&lperp), &lperp);
    let ww5 = NormalOrderedExpr::vacuum().scale(&sc("2*(k+4)*(2*k+5)*(3*k+7)*(5*k+16)/(3*k+8)"));
    let ww3 = lperp.scale(&sc("-3*(k+4)^2*(5*k+16)/(3*k+8)"));
    let ww2 = d(&lperp).scale(&sc("-3*(k+4)^2*(5*k+16)/(2*(3*k+8))"));
    let ww1 = d(&d(&lperp))
        .scale(&sc(
            "-3*(k+4)^2*(5*k+16)*(12*k^2+59*k+74)/(4*(3*k+8)*(20*k^2+93*k+102))",
        ))
        .add(&lplp.scale(&sc("8*(k+4)^3*(5*k+16)/((3*k+8)*(20*k^2+93*k+102))")))
        .add(&lambda.scale(&sc("4*(k+4)")));
    let ww0 = d(&d(&d(&lperp)))
        .scale(&sc(
            "-(k+4)^2*(5*k+16)*(12*k^2+59*k+74)/(6*(3*k+8)*(20*k^2+93*k+102))",
        ))
        .add(&dlplp.scale(&sc("8*(k+4)^3*(5*k+16)/((3*k+8)*(20*k^2+93*k+102))")))
        .add(&d(&lambda).scale(&sc("2*(k+4)")));
    p.set_ope(
        w,
        w,
        vec![ww0, ww1, ww2, ww3, NormalOrderedExpr::zero(), ww5],
    );

    // ideal generators (G+)^2, (G-)^2 for the k = -1 quotient
    p.ideal_generators = vec![no(&g_gp, &g_gp), no(&g_gm, &g_gm)];

    finish_with(p, move |eng| {
        let g_j = NormalOrderedExpr::generator(j);
        let g_l = NormalOrderedExpr::generator(l);
        let jj = eng.normally_ordered(&g_j, &g_j);
        let lperp = g_l.sub(&jj.scale(&sc("2/(3*k+8)")));
        let ltilde = g_l.add(&eng.derive(&g_j));
        Ok(vec![
            ("Lperp".to_string(), lperp),
            ("Ltilde".to_string(), ltilde),
            ("Lambda".to_string(), lambda.clone()),
        ])
    })
}

fn finish(p: AlgebraPresentation, named: &[(&str, NormalOrderedExpr)]) -> Result<Preset, Error> {
    let presentation = Arc::new(p);
    let engine = Arc::new(Engine::new(presentation.clone()));
    Ok(Preset {
        presentation,
        engine,
        named_fields: named
            .iter()
            .map(|(n, e)| (n.to_string(), e.clone()))
            .collect(),
    })
}

fn finish_with<F>(p: AlgebraPresentation, named: F) -> Result<Preset, Error>
where
    F: FnOnce(&Engine) -> Result<Vec<(String, NormalOrderedExpr)>, Error>,
{
    let presentation = Arc::new(p);
    let engine = Arc::new(Engine::new(presentation.clone()));
    let fields = named(&engine)?;
    Ok(Preset {
        presentation,
        engine,
        named_fields: fields.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::Monomial;

    #[test]
    fn n2_table_lookups() {
        let pr = load_preset("n2", None).unwrap();
        let p = &pr.presentation;
        let e = p.gen_id("E").unwrap();
        let f = p.gen_id("F").unwrap();
        // E_(2)F = (2c/3)|0>
        let prod = pr
            .engine
            .nth_product(
                &NormalOrderedExpr::generator(e),
                &NormalOrderedExpr::generator(f),
                2,
            )
            .unwrap();
        assert_eq!(prod, NormalOrderedExpr::vacuum().scale(&sc("2*c/3")));
    }

    #[test]
    fn n2_skew_gives_fe_row() {
        // F_(0)E = 2T - dH, F_(1)E = -2H, F_(2)E = (2c/3)|0>
        let pr = load_preset("n2", None).unwrap();
        let p = &pr.presentation;
        let e = p.gen_id("E").unwrap();
        let f = p.gen_id("F").unwrap();
        let t = p.gen_id("T").unwrap();
        let h = p.gen_id("H").unwrap();
        let eng = &pr.engine;
        let gf = NormalOrderedExpr::generator(f);
        let ge = NormalOrderedExpr::generator(e);
        let gt = NormalOrderedExpr::generator(t);
        let gh = NormalOrderedExpr::generator(h);
        assert_eq!(
            eng.nth_product(&gf, &ge, 0).unwrap(),
            gt.scale(&Scalar::from_int(2)).sub(&eng.derive(&gh))
        );
        assert_eq!(
            eng.nth_product(&gf, &ge, 1).unwrap(),
            gh.scale(&Scalar::from_int(-2))
        );
        assert_eq!(
            eng.nth_product(&gf, &ge, 2).unwrap(),
            NormalOrderedExpr::vacuum().scale(&sc("2*c/3"))
        );
    }

    #[test]
    fn wsl4sub_basic_rows() {
        let pr = load_preset("wsl4sub", None).unwrap();
        let p = &pr.presentation;
        let eng = &pr.engine;
        let j = p.gen_id("J").unwrap();
        let l = p.gen_id("L").unwrap();
        let w = p.gen_id("W").unwrap();
        let gj = NormalOrderedExpr::generator(j);
        let gl = NormalOrderedExpr::generator(l);
        let gw = NormalOrderedExpr::generator(w);
        // J_(1)J = (3k+8)/4 |0>
        assert_eq!(
            eng.nth_product(&gj, &gj, 1).unwrap(),
            NormalOrderedExpr::vacuum().scale(&sc("(3*k+8)/4"))
        );
        // L_(0)J = dJ
        assert_eq!(eng.nth_product(&gl, &gj, 0).unwrap(), eng.derive(&gj));
        // W_(n)J = 0 for n >= 0 (skew from J W ~ 0)
        for n in 0..4 {
            assert!(eng.nth_product(&gw, &gj, n).unwrap().is_zero(), "W_({n})J");
        }
    }

    #[test]
    fn gplus_products_vanish() {
        let pr = load_preset("wsl4sub", None).unwrap();
        let p = &pr.presentation;
        let gp = NormalOrderedExpr::generator(p.gen_id("G+").unwrap());
        for n in 0..4 {
            assert!(pr.engine.nth_product(&gp, &gp, n).unwrap().is_zero());
        }
    }

    #[test]
    fn gpgm_top_pole_value() {
        let pr = load_preset("wsl4sub", None).unwrap();
        let p = &pr.presentation;
        let gp = NormalOrderedExpr::generator(p.gen_id("G+").unwrap());
        let gm = NormalOrderedExpr::generator(p.gen_id("G-").unwrap());
        let top = pr.engine.nth_product(&gp, &gm, 3).unwrap();
        assert_eq!(
            top,
            NormalOrderedExpr::vacuum().scale(&sc("(k+2)*(2*k+5)*(3*k+8)"))
        );
        // specialization at k = -1 gives 15 |0>
        let mut b = BTreeMap::new();
        b.insert("k".to_string(), q_int(-1));
        assert_eq!(
            top.specialize(&b).unwrap(),
            NormalOrderedExpr::vacuum().scale(&Scalar::from_int(15))
        );
    }

    #[test]
    fn presets_validate() {
        for name in PRESET_NAMES {
            load_preset(name, None).unwrap();
        }
    }

    #[test]
    fn parafermion_commutant_property() {
        // H_(n) W = 0 for n >= 0: W lies in the Heisenberg commutant
        let pr = load_preset("n2", None).unwrap();
        let p = &pr.presentation;
        let h = NormalOrderedExpr::generator(p.gen_id("H").unwrap());
        let w = parafermion_generator(&Scalar::var("c"), &Scalar::var("nu")).unwrap();
        for n in 0..5 {
            let prod = pr.engine.nth_product(&h, &w, n).unwrap();
            assert!(prod.is_zero(), "H_({n})W should vanish, got {prod}");
        }
    }

    #[test]
    fn parafermion_excluded_charges() {
        for c in [0i64, 1, -6, -9] {
            assert!(matches!(
                parafermion_generator(&Scalar::from_int(c), &Scalar::one()),
                Err(Error::ExcludedCentralCharge(_))
            ));
        }
        assert!(parafermion_generator(&Scalar::ratio(3, 2), &Scalar::one()).is_err());
    }

    #[test]
    fn nu_zero_gives_zero() {
        let w = parafermion_generator(&Scalar::from_int(-15), &Scalar::zero()).unwrap();
        assert!(w.is_zero());
    }

    #[test]
    fn vacuum_monomial_is_identity() {
        let pr = load_preset("wsl4sub", None).unwrap();
        let p = &pr.presentation;
        let j = NormalOrderedExpr::generator(p.gen_id("J").unwrap());
        let vac = NormalOrderedExpr::monomial(Monomial::vacuum(), Scalar::one());
        assert_eq!(pr.engine.normally_ordered(&vac, &j), j);
    }
}
