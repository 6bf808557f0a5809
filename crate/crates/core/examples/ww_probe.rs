use voa_core::presets::load_preset;

fn main() {
    let pr = load_preset("wsl4sub", None).unwrap();
    let p = pr.presentation.clone();
    let eng = &pr.engine;
    let w = p.gen_id("W").unwrap();
    let j = p.gen_id("J").unwrap();
    let gp = p.gen_id("G+").unwrap();
    let gm = p.gen_id("G-").unwrap();
    // weight-7 triples touching the WW row and the G+G- row against W
    let triples = [(w, w, j), (w, j, w), (j, w, w), (w, gp, gm), (gp, w, gm), (gp, gm, w)];
    for (a, b, c) in triples {
        let mut bad = 0;
        for m in 0..7 {
            for n in 0..7 {
                let (lhs, rhs) = eng.jacobi_sides(a, b, c, m, n);
                if lhs != rhs {
                    bad += 1;
                    if bad <= 2 {
                        println!("FAIL ({}, {}, {}; m={m}, n={n})", p.gens[a].name, p.gens[b].name, p.gens[c].name);
                    }
                }
            }
        }
        if bad == 0 {
            println!("ok   ({}, {}, {}): all (m,n) pass", p.gens[a].name, p.gens[b].name, p.gens[c].name);
        } else {
            println!(">>>  ({}, {}, {}): {bad} failures", p.gens[a].name, p.gens[b].name, p.gens[c].name);
        }
    }
}
