use std::fmt::Write as _;

use distlat::bipartite::{cover_analysis, gorenstein_and_type, graph_of_poset, recognize_cm, BipartiteGraph, Verdict};
use distlat::resolution::{multiplicity_checks, BettiTable};
use distlat::simplicial::{poset_duality, pure_strong_check, SimplicialComplex};
use distlat::{
    betti_table, boolean_interval_counts, build_hp, koszul_tor_oracle, reisner_cm_check, strand_exactness,
    taylor_tor_oracle, verify_complex, verify_groebner, verify_linear_quotients, with_field, DistributiveLattice,
    Error, FieldChoice, FreeComplex, Guards, MonomialIdeal, Poset, Result,
};
use serde_json::{json, Value};

use crate::input::Input;

pub struct Settings {
    pub field: FieldChoice,
    pub degree_bound: Option<usize>,
    pub seed: u64,
    pub trials: usize,
    pub guards: Guards,
}

pub struct Outcome {
    pub passed: bool,
    pub text: String,
    pub report: Value,
    pub dot: Option<String>,
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILED"
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn expect_poset(input: Input, command: &str) -> Result<Poset> {
    match input {
        Input::Poset(p) => Ok(p),
        other => Err(Error::Usage(format!("`{command}` needs a poset, got a {}", other.kind()))),
    }
}

fn lattice_of(p: &Poset, s: &Settings) -> Result<DistributiveLattice> {
    p.enumerate_ideals(s.guards.lattice_ideals)
}

pub fn lattice(input: Input, s: &Settings) -> Result<Outcome> {
    let p = expect_poset(input, "lattice")?;
    let l = lattice_of(&p, s)?;
    let counts = boolean_interval_counts(&l, &p);
    let mut text = format!("J(P): {} ideals\n", l.len());
    for (i, ideal) in l.ideals().iter().enumerate() {
        let _ = writeln!(text, "  {i:>3} {}", p.format_set(ideal.0));
    }
    let _ = writeln!(text, "boolean intervals: {}", join(&counts));
    let report = json!({
        "ideals": l.ideals().iter().map(|i| p.set_labels(i.0)).collect::<Vec<_>>(),
        "hasse_edges": l.hasse_edges().iter().map(|&(a, b, e)| json!([a, b, p.label(e)])).collect::<Vec<_>>(),
        "boolean_interval_counts": counts,
    });
    Ok(Outcome {
        passed: true,
        text,
        report,
        dot: Some(l.hasse_dot(&p)),
    })
}

pub fn ideal(input: Input, s: &Settings) -> Result<Outcome> {
    let p = expect_poset(input, "ideal")?;
    let l = lattice_of(&p, s)?;
    let hp = build_hp(&p, &l);
    let order: Vec<usize> = (0..hp.len()).collect();
    let lq = verify_linear_quotients(&hp, &order)?;
    let text = format!(
        "H_P = ({})\nvariables: {}\nlinear quotients: {}\n",
        hp.formatted().join(", "),
        join(hp.variables()),
        ok(lq.success)
    );
    let report = json!({ "ideal": hp.to_json(), "linear_quotients": lq });
    Ok(Outcome {
        passed: lq.success,
        text,
        report,
        dot: Some(p.hasse_dot()),
    })
}

fn complex_of(p: &Poset, l: &DistributiveLattice, s: &Settings) -> Result<FreeComplex> {
    FreeComplex::for_poset(p, l, s.guards.basis)
}

pub fn resolution(input: Input, s: &Settings) -> Result<Outcome> {
    let p = expect_poset(input, "resolution")?;
    let l = lattice_of(&p, s)?;
    let c = complex_of(&p, &l, s)?;
    let check = verify_complex(&c, &p, &l);
    let bound = s.degree_bound.unwrap_or(p.len() + c.length() + 2);
    let strands = with_field!(s.field, F => strand_exactness::<F>(&c, bound))?;
    let mut text = format!("ranks: {}\n", join(&c.ranks()));
    let _ = writeln!(text, "d^2 = 0: {}", ok(check.d_squared_zero));
    let _ = writeln!(text, "eps d = 0: {}", ok(check.augmentation_zero));
    let _ = writeln!(text, "minimal and linear: {}", ok(check.minimal_and_linear));
    let _ = writeln!(
        text,
        "Taylor relations: {} checked, {}",
        check.taylor_relations_checked,
        ok(check.taylor_relations_in_image)
    );
    let _ = writeln!(
        text,
        "strands over {} up to degree {bound}: {}",
        s.field,
        if strands.exact { "exact" } else { "NOT exact" }
    );
    for f in &check.failures {
        let _ = writeln!(text, "  {f}");
    }
    for (i, d) in &strands.failures {
        let _ = writeln!(text, "  homology at homological degree {i}, degree {d}");
    }
    let basis: Vec<Vec<Value>> = c
        .bases
        .iter()
        .map(|b| {
            b.iter()
                .map(|e| json!({ "ideal": p.set_labels(e.ideal), "t": p.set_labels(e.tset) }))
                .collect()
        })
        .collect();
    let report = json!({ "ranks": c.ranks(), "basis": basis, "complex": check, "strands": strands });
    Ok(Outcome {
        passed: check.passed && strands.exact,
        text,
        report,
        dot: Some(p.hasse_dot()),
    })
}

pub fn betti(input: Input, s: &Settings) -> Result<Outcome> {
    let p = expect_poset(input, "betti")?;
    let l = lattice_of(&p, s)?;
    let c = complex_of(&p, &l, s)?;
    let r = betti_table(&p, &l, &c, s.guards.poset_elements)?;
    let mut text = r.table.render_text();
    let _ = writeln!(
        text,
        "euler={} pd={} sperner={}\nboolean intervals: {} ({})",
        r.euler_sum,
        r.projective_dimension,
        r.sperner,
        join(&r.boolean_interval_counts),
        if r.matches_boolean_counts { "match" } else { "MISMATCH" }
    );
    Ok(Outcome {
        passed: r.passed,
        text,
        report: json!(r),
        dot: Some(p.hasse_dot()),
    })
}

pub fn multiplicity(input: Input, s: &Settings) -> Result<Outcome> {
    let p = expect_poset(input, "multiplicity")?;
    let l = lattice_of(&p, s)?;
    let c = complex_of(&p, &l, s)?;
    let hp = build_hp(&p, &l);
    let r = multiplicity_checks(&p, &hp, &c.ranks())?;
    let text = format!(
        "pairs={} formula={}\nheight={} top-dimensional components={} decomposition {}\n",
        r.pairs,
        r.formula_value,
        r.height,
        r.top_dimensional_components,
        ok(r.decomposition_matches)
    );
    Ok(Outcome {
        passed: r.passed,
        text,
        report: json!(r),
        dot: Some(p.hasse_dot()),
    })
}

pub fn groebner(input: Input, s: &Settings) -> Result<Outcome> {
    let p = expect_poset(input, "groebner")?;
    let r = verify_groebner(&p, s.trials, s.seed, s.guards.z_variables)?;
    let mut text = format!(
        "basis: {} Hibi and {} exchange relations, {} S-pairs, {} random members (seed {})\n",
        r.hibi_relations, r.exchange_relations, r.s_pairs, r.trials, r.seed
    );
    for c in &r.checks {
        let _ = writeln!(text, "  {}: {}", c.name, ok(c.passed));
        if let Some(w) = &c.witness {
            let _ = writeln!(text, "    {w}");
        }
    }
    Ok(Outcome {
        passed: r.passed,
        text,
        report: json!(r),
        dot: Some(p.hasse_dot()),
    })
}

fn facets_text(c: &SimplicialComplex) -> String {
    c.facets().iter().map(|&f| c.format_set(f)).collect::<Vec<_>>().join(" ")
}

pub fn dual(input: Input, s: &Settings) -> Result<Outcome> {
    match input {
        Input::Poset(p) => {
            let l = lattice_of(&p, s)?;
            let hp = build_hp(&p, &l);
            let d = poset_duality(&p, &hp)?;
            let text = format!(
                "dual facets: {}\ndual ideal: ({})\nexpected {{x_i y_j : p_i <= p_j}}: ({})\nmatch: {}\n",
                facets_text(&d.dual),
                d.dual_ideal.formatted().join(", "),
                d.expected.formatted().join(", "),
                ok(d.matches)
            );
            let report = json!({
                "complex": d.complex.to_json(),
                "dual": d.dual.to_json(),
                "dual_ideal": d.dual_ideal.to_json(),
                "expected": d.expected.to_json(),
                "matches": d.matches,
            });
            Ok(Outcome {
                passed: d.matches,
                text,
                report,
                dot: Some(p.hasse_dot()),
            })
        }
        Input::Complex(c) => complex_dual(c),
        Input::Ideal(i) => complex_dual(distlat::complex_from_ideal(&i)?),
        Input::Graph(_) => Err(Error::Usage("`dual` needs a poset, ideal or complex".into())),
    }
}

fn complex_dual(c: SimplicialComplex) -> Result<Outcome> {
    let d = c.alexander_dual()?;
    let involution = d.alexander_dual()? == c;
    let ideal = d.stanley_reisner_ideal()?;
    let text = format!(
        "dual facets: {}\ndual ideal: ({})\ninvolution: {}\n",
        facets_text(&d),
        ideal.formatted().join(", "),
        ok(involution)
    );
    let report = json!({ "dual": d.to_json(), "dual_ideal": ideal.to_json(), "involution": involution });
    Ok(Outcome {
        passed: involution,
        text,
        report,
        dot: None,
    })
}

pub fn cm(input: Input, s: &Settings) -> Result<Outcome> {
    let g = match input {
        Input::Graph(g) => g,
        Input::Poset(p) => graph_of_poset(&p),
        other => return Err(Error::Usage(format!("`cm` needs a graph or poset, got a {}", other.kind()))),
    };
    let r = recognize_cm(&g, s.guards.matchings)?;
    let covers = cover_analysis(&g, s.guards.graph_vertices)?;
    let mut text = String::new();
    let mut passed = true;
    let gorenstein = match r.verdict {
        Verdict::Cm => {
            let gr = gorenstein_and_type(&g, &r, s.guards.poset_elements)?;
            passed = gr.consistent && covers.unmixed;
            let p = r.poset.as_ref().expect("CM result carries a poset");
            let covers_text: Vec<String> = p.covers().iter().map(|&(a, b)| format!("{}<{}", p.label(a), p.label(b))).collect();
            let _ = writeln!(text, "verdict: CM");
            let _ = writeln!(text, "poset: {} [{}]", join(p.labels()), covers_text.join(" "));
            let _ = writeln!(text, "gorenstein={} type={}", gr.gorenstein, gr.cm_type);
            Some(gr)
        }
        Verdict::NotCm => {
            let _ = writeln!(text, "verdict: not CM");
            if let Some(w) = &r.failure_witness {
                let _ = writeln!(text, "witness: {}", serde_json::to_string(w).expect("serializable"));
            }
            None
        }
    };
    if let Some(m) = &r.matching {
        let pairs: Vec<String> = m.iter().map(|(a, b)| format!("{a}-{b}")).collect();
        let _ = writeln!(text, "matching: {}", pairs.join(" "));
    }
    let _ = writeln!(text, "matchings tried: {}", r.matchings_tried);
    let _ = writeln!(text, "unmixed: {}", covers.unmixed);
    let report = json!({
        "graph": g.to_json(),
        "recognition": r.to_json(),
        "gorenstein": gorenstein,
        "covers": covers,
    });
    Ok(Outcome {
        passed,
        text,
        report,
        dot: Some(g.to_dot()),
    })
}

fn tor_of(ideal: &MonomialIdeal, s: &Settings) -> Result<(BettiTable, &'static str)> {
    if ideal.len() <= s.guards.taylor_generators {
        with_field!(s.field, F => taylor_tor_oracle::<F>(ideal, s.guards.taylor_generators)).map(|t| (t, "taylor"))
    } else {
        with_field!(s.field, F => koszul_tor_oracle::<F>(ideal, s.guards.koszul_variables)).map(|t| (t, "koszul"))
    }
}

pub fn oracle(input: Input, s: &Settings) -> Result<Outcome> {
    match input {
        Input::Poset(p) => {
            let l = lattice_of(&p, s)?;
            let c = complex_of(&p, &l, s)?;
            let hp = build_hp(&p, &l);
            let (tor, method) = tor_of(&hp, s)?;
            let ours = BettiTable::from_complex(&c);
            let agree = ours == tor;
            let text = format!(
                "oracle ({method}, {}): {}\nresolution: {}\nagree: {}\n",
                s.field,
                join(&tor.totals()),
                join(&ours.totals()),
                ok(agree)
            );
            let report = json!({ "method": method, "field": s.field.to_string(), "oracle": tor, "resolution": ours, "agree": agree });
            Ok(Outcome {
                passed: agree,
                text,
                report,
                dot: Some(p.hasse_dot()),
            })
        }
        Input::Ideal(i) => {
            let (tor, method) = tor_of(&i, s)?;
            let text = format!("{}betti ({method}, {}): {}\n", tor.render_text(), s.field, join(&tor.totals()));
            let report = json!({ "method": method, "field": s.field.to_string(), "oracle": tor });
            Ok(Outcome {
                passed: true,
                text,
                report,
                dot: None,
            })
        }
        Input::Complex(c) => {
            let v = with_field!(s.field, F => reisner_cm_check::<F>(&c, s.guards.complex_vertices))?;
            let ps = pure_strong_check(&c);
            let mut text = format!(
                "Reisner over {}: {}\npure={} strongly_connected={}\n",
                v.field,
                if v.cohen_macaulay { "CM" } else { "not CM" },
                ps.pure,
                ps.strongly_connected
            );
            if let Some(w) = &v.witness {
                let _ = writeln!(text, "witness: {w}");
            }
            Ok(Outcome {
                passed: true,
                text,
                report: json!({ "reisner": v, "pure_strong": ps }),
                dot: None,
            })
        }
        Input::Graph(g) => graph_oracle(&g, s),
    }
}

fn graph_oracle(g: &BipartiteGraph, s: &Settings) -> Result<Outcome> {
    let delta = g.independence_complex()?;
    let v = with_field!(s.field, F => reisner_cm_check::<F>(&delta, s.guards.complex_vertices))?;
    let ps = pure_strong_check(&delta);
    let r = recognize_cm(g, s.guards.matchings)?;
    let recognized = r.verdict == Verdict::Cm;
    let agree = recognized == v.cohen_macaulay && recognized == (ps.pure && ps.strongly_connected);
    let text = format!(
        "recognizer: {}\nReisner over {}: {}\npure={} strongly_connected={}\nagree: {}\n",
        if recognized { "CM" } else { "not CM" },
        v.field,
        if v.cohen_macaulay { "CM" } else { "not CM" },
        ps.pure,
        ps.strongly_connected,
        ok(agree)
    );
    let report = json!({
        "recognizer": r.to_json(),
        "reisner": v,
        "pure_strong": ps,
        "independence_complex": delta.to_json(),
        "agree": agree,
    });
    Ok(Outcome {
        passed: agree,
        text,
        report,
        dot: Some(g.to_dot()),
    })
}
