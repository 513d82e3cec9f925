//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::time::{Duration, Instant};

use distlat::bipartite::{
    all_bipartite_graphs, gorenstein_and_type, graph_of_poset, random_bipartite, recognize_cm, BipartiteGraph,
    Verdict,
};
use distlat::catalog::{all_posets_up_to, is_isomorphic, random_poset};
use distlat::groebner::verify_groebner;
use distlat::resolution::{betti_table, multiplicity_checks, strand_exactness, verify_complex, BettiTable, FreeComplex};
use distlat::simplicial::{poset_duality, pure_strong_check, reisner_cm_check};
use distlat::tor::{koszul_tor_oracle, taylor_tor_oracle};
use distlat::{build_hp, verify_linear_quotients, Guards, Poset, Rational, F2, F3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn example() -> Poset {
    Poset::new(&["a", "b", "c", "d"], &[("a", "c"), ("b", "c"), ("b", "d")]).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let p = example();
    let g = Guards::default();
    let l = p.enumerate_ideals(g.lattice_ideals).map_err(|e| e.to_string())?;
    let hp = build_hp(&p, &l);
    let expected = ["uvwx", "avwx", "buwx", "abwx", "bduw", "abcx", "abdw", "abcd"];
    ensure(hp.formatted() == expected, || format!("generators {:?}", hp.formatted()))?;
    let c = FreeComplex::for_poset(&p, &l, g.basis).map_err(|e| e.to_string())?;
    let b = betti_table(&p, &l, &c, g.poset_elements).map_err(|e| e.to_string())?;
    let shape: Vec<(usize, usize, usize)> = b
        .table
        .entries
        .iter()
        .map(|e| (e.homological_degree, e.internal_degree, e.rank))
        .collect();
    ensure(shape == [(0, 4, 8), (1, 5, 10), (2, 6, 3)], || format!("Betti table {shape:?}"))?;
    ensure(b.projective_dimension == 2 && b.euler_sum == 1, || format!("{b:?}"))?;
    let m = multiplicity_checks(&p, &hp, &b.betti).map_err(|e| e.to_string())?;
    ensure(m.pairs == 7 && m.formula_value == 7 && m.passed, || format!("{m:?}"))?;
    Ok("generators, Betti (8,10,3) in degrees (4,5,6), pd 2, euler 1, pairs 7 = formula 7".into())
}

/// `F` is a complex, its strands are exact, and its graded Betti table
/// equals the oracle's. The literal Taylor complex is used up to its guard;
/// above it the oracle computes each Taylor lcm block through the nerve of
/// its lcm-deficient subcomplex (the upper Koszul complex), which has the
/// same homology.
fn resolution_checks(p: &Poset, guards: &Guards, counts: &mut (usize, usize)) -> Result<(), String> {
    let l = p.enumerate_ideals(guards.lattice_ideals).map_err(|e| e.to_string())?;
    let c = FreeComplex::for_poset(p, &l, guards.basis).map_err(|e| e.to_string())?;
    let name = format!("{:?}", p.to_json());
    let v = verify_complex(&c, p, &l);
    ensure(v.passed, || format!("{name}: {:?}", v.failures))?;
    let bound = p.len() + c.length() + 2;
    let s = strand_exactness::<Rational>(&c, bound).map_err(|e| e.to_string())?;
    ensure(s.exact, || format!("{name}: strand homology at {:?}", s.failures))?;
    let b = betti_table(p, &l, &c, guards.poset_elements).map_err(|e| e.to_string())?;
    ensure(b.passed, || format!("{name}: {b:?}"))?;
    let hp = build_hp(p, &l);
    let ours = BettiTable::from_complex(&c);
    let oracle = if hp.len() <= guards.taylor_generators {
        counts.0 += 1;
        taylor_tor_oracle::<Rational>(&hp, guards.taylor_generators)
    } else {
        counts.1 += 1;
        koszul_tor_oracle::<Rational>(&hp, guards.koszul_variables)
    }
    .map_err(|e| e.to_string())?;
    ensure(ours == oracle, || format!("{name}: Betti {:?} vs oracle {:?}", ours.entries, oracle.entries))
}

fn criterion_2() -> Outcome {
    let guards = Guards::default();
    let posets = all_posets_up_to(4);
    let mut counts = (0, 0);
    for p in &posets {
        resolution_checks(p, &guards, &mut counts)?;
    }
    Ok(format!(
        "{} posets; oracle: {} literal Taylor, {} nerve-reduced (more than {} generators)",
        posets.len(),
        counts.0,
        counts.1,
        guards.taylor_generators
    ))
}

fn criterion_3() -> Outcome {
    let guards = Guards::default();
    let mut rng = ChaCha8Rng::seed_from_u64(20240501);
    let mut counts = (0, 0);
    for _ in 0..25 {
        let p = random_poset(5, 0.4, &mut rng);
        resolution_checks(&p, &guards, &mut counts)?;
    }
    Ok(format!(
        "25 random posets (seed 20240501); oracle: {} literal Taylor, {} nerve-reduced",
        counts.0, counts.1
    ))
}

fn criterion_4() -> Outcome {
    let posets = all_posets_up_to(4);
    // the 4-element antichain has 16 lattice elements
    let z_guard = 16;
    for (k, p) in posets.iter().enumerate() {
        let r = verify_groebner(p, 100, k as u64, z_guard).map_err(|e| e.to_string())?;
        ensure(r.passed && r.checks.len() == 5, || {
            format!("{:?}: {:?}", p.to_json(), r.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>())
        })?;
    }
    Ok(format!("{} posets, five checks each, 100 random members", posets.len()))
}

fn criterion_5() -> Outcome {
    let guards = Guards::default();
    let posets = all_posets_up_to(4);
    for p in &posets {
        let l = p.enumerate_ideals(guards.lattice_ideals).map_err(|e| e.to_string())?;
        let hp = build_hp(p, &l);
        let d = poset_duality(p, &hp).map_err(|e| e.to_string())?;
        ensure(d.matches, || format!("{:?}: dual ideal {:?}", p.to_json(), d.dual_ideal.formatted()))?;
        let verdicts = [
            reisner_cm_check::<Rational>(&d.dual, guards.complex_vertices),
            reisner_cm_check::<F2>(&d.dual, guards.complex_vertices),
            reisner_cm_check::<F3>(&d.dual, guards.complex_vertices),
        ];
        for v in verdicts {
            let v = v.map_err(|e| e.to_string())?;
            ensure(v.cohen_macaulay, || format!("{:?}: {v:?}", p.to_json()))?;
        }
    }
    Ok(format!("{} posets; dual ideal and CM over Q, F2, F3", posets.len()))
}

fn classify(g: &BipartiteGraph, guards: &Guards) -> Result<(), String> {
    let r = recognize_cm(g, guards.matchings).map_err(|e| e.to_string())?;
    let delta = g.independence_complex().map_err(|e| e.to_string())?;
    let reisner = reisner_cm_check::<Rational>(&delta, guards.complex_vertices).map_err(|e| e.to_string())?;
    let ps = pure_strong_check(&delta);
    let recognized = r.verdict == Verdict::Cm;
    ensure(
        recognized == reisner.cohen_macaulay && recognized == (ps.pure && ps.strongly_connected),
        || {
            format!(
                "{:?}: recognizer {recognized}, Reisner {}, pure {} strongly connected {}",
                g.to_json(),
                reisner.cohen_macaulay,
                ps.pure,
                ps.strongly_connected
            )
        },
    )
}

fn criterion_6() -> Outcome {
    let guards = Guards::default();
    let mut exhaustive = 0;
    for a in 1..=3 {
        for b in 1..=3 {
            for g in all_bipartite_graphs(a, b) {
                classify(&g, &guards)?;
                exhaustive += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut cm = 0;
    for _ in 0..200 {
        let density = rng.gen_range(0.2..0.7);
        let g = random_bipartite(4, 4, density, &mut rng);
        classify(&g, &guards)?;
        cm += usize::from(recognize_cm(&g, guards.matchings).map_err(|e| e.to_string())?.verdict == Verdict::Cm);
    }
    Ok(format!("{exhaustive} exhaustive graphs, 200 random 4x4 graphs ({cm} CM), zero disagreements"))
}

fn criterion_7() -> Outcome {
    let guards = Guards::default();
    let posets = all_posets_up_to(5);
    for p in &posets {
        let g = graph_of_poset(p);
        let r = recognize_cm(&g, guards.matchings).map_err(|e| e.to_string())?;
        let q = r.poset.as_ref().ok_or_else(|| format!("{:?}: not recognized", p.to_json()))?;
        ensure(is_isomorphic(p, q), || format!("{:?}: recovered {:?}", p.to_json(), q.to_json()))?;
        let gor = gorenstein_and_type(&g, &r, guards.poset_elements).map_err(|e| e.to_string())?;
        let antichain = p.is_antichain(p.all());
        ensure(gor.consistent && gor.gorenstein == antichain, || format!("{:?}: {gor:?}", p.to_json()))?;
    }
    let e = example();
    let g = graph_of_poset(&e);
    let r = recognize_cm(&g, guards.matchings).map_err(|e| e.to_string())?;
    let t = gorenstein_and_type(&g, &r, guards.poset_elements).map_err(|e| e.to_string())?;
    ensure(t.cm_type == 3, || format!("example CM type {}", t.cm_type))?;
    Ok(format!("{} posets recovered; Gorenstein characterizations agree; example type 3", posets.len()))
}

fn criterion_8() -> Outcome {
    let guards = Guards::default();
    let posets = all_posets_up_to(5);
    for p in &posets {
        let l = p.enumerate_ideals(guards.lattice_ideals).map_err(|e| e.to_string())?;
        let hp = build_hp(p, &l);
        // the lattice is listed by cardinality, a linear extension of J(P)
        let order: Vec<usize> = (0..hp.len()).collect();
        let r = verify_linear_quotients(&hp, &order).map_err(|e| e.to_string())?;
        ensure(r.success, || format!("{:?}: fails at {:?}", p.to_json(), r.failed_at))?;
    }
    Ok(format!("{} posets", posets.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("worked example", criterion_1, Duration::from_secs(1)),
        ("resolution, all posets up to 4", criterion_2, Duration::from_secs(120)),
        ("resolution, 25 random 5-element posets", criterion_3, Duration::from_secs(300)),
        ("Groebner basis, all posets up to 4", criterion_4, Duration::from_secs(120)),
        ("Alexander duality and CM", criterion_5, Duration::from_secs(300)),
        ("CM bipartite classification", criterion_6, Duration::from_secs(300)),
        ("poset recovery round trip", criterion_7, Duration::from_secs(300)),
        ("linear quotients, all posets up to 5", criterion_8, Duration::from_secs(300)),
    ];
    let mut failed = 0;
    for (k, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => Err(format!("{detail}; too slow ({elapsed:.2?} > {limit:?})")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name} [{elapsed:.2?}] {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name} [{elapsed:.2?}] {detail}", k + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
