//! End-to-end acceptance checks, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the report prints in order and the
//! process exits nonzero if any check fails.

mod common;

use std::time::{Duration, Instant};

use nmgraph::oracle::{brute_relative_clique, naive_seeing_pairs, sweep};
use nmgraph::{
    absolute_clique_number, all_witnesses, check_tight, chromatic_number, find_exceptional_configuration,
    find_fk, generate_exceptional, generate_tight, girth, homomorphism_exists, is_planar, is_special_2path,
    relative_clique_number, seeing_graph, sees, validate_embedding, verify_homomorphism, FkOccurrence,
    NMGraph, NMParams, SeeWitness, VertexSet,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{params, random_graph, random_params, random_permutation, random_relabel, random_supergraph};

type Check = std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn tightness_p3_p4() -> Check {
    let mut notes = Vec::new();
    for (n, m) in [(1, 1), (0, 3), (2, 0), (1, 2), (0, 4)] {
        let params = params(n, m);
        let p = params.p();
        let t = generate_tight(params);
        let start = Instant::now();
        let (omega, cert) = relative_clique_number(&t.graph);
        let elapsed = start.elapsed();
        ensure!(omega == 2 * p * p + 2, "({n},{m}): omega_r = {omega}, expected {}", 2 * p * p + 2);
        ensure!(cert.size() == omega, "({n},{m}): certificate size {}", cert.size());
        ensure!(elapsed < Duration::from_secs(60), "({n},{m}): solver took {elapsed:?}");
        let report = check_tight(params);
        ensure!(report.passed(), "({n},{m}): {report:?}");
        let expected_line = format!("omega_r = {omega} = 2*{p}^2+2 PASS");
        ensure!(report.summary_line() == expected_line, "({n},{m}): line {:?}", report.summary_line());
        notes.push(format!("({n},{m})={omega} in {:.2}s", elapsed.as_secs_f64()));
    }
    Ok(notes.join(", "))
}

fn tightness_p2() -> Check {
    for (n, m) in [(1, 0), (0, 2)] {
        let t = generate_tight(params(n, m));
        let (omega, _) = relative_clique_number(&t.graph);
        ensure!(omega == 10, "({n},{m}): omega_r = {omega}");
        let brute = brute_relative_clique(&t.graph).map_err(|e| e.to_string())?;
        ensure!(brute == 10, "({n},{m}): brute force gives {brute}");
    }
    Ok("omega_r = 10 for (1,0) and (0,2), brute force agrees".into())
}

fn construction_structure() -> Check {
    let all = [(1, 0), (0, 2), (1, 1), (0, 3), (2, 0), (1, 2), (0, 4)];
    for (n, m) in all {
        let params = params(n, m);
        let p = params.p();
        let t = generate_tight(params);
        let g = &t.graph;
        ensure!(g.vertex_count() == 2 + 3 * p * p, "({n},{m}): {} vertices", g.vertex_count());
        ensure!(g.adjacency_count() == 6 * p * p, "({n},{m}): {} adjacencies", g.adjacency_count());
        ensure!(girth(g) == Some(4), "({n},{m}): girth {:?}", girth(g));
        let found = is_planar(g).ok_or(format!("({n},{m}): reported non-planar"))?;
        for rot in [&t.embedding, &found] {
            let euler = validate_embedding(g, rot).map_err(|e| e.to_string())?;
            ensure!(
                euler.euler_holds && euler.vertices + euler.faces == euler.edges + 2,
                "({n},{m}): {euler:?}"
            );
        }
    }
    Ok(format!("{} parameter pairs", all.len()))
}

fn chromatic_probe() -> Check {
    let t = generate_tight(params(0, 3));
    let start = Instant::now();
    let outcome = chromatic_number(&t.graph, Some(20)).map_err(|e| e.to_string())?;
    ensure!(outcome.lower_bound_used() == 20, "lower bound {}", outcome.lower_bound_used());
    if let nmgraph::ChromaticOutcome::Found(r) = &outcome {
        ensure!(r.value >= 20, "value {} below the clique bound", r.value);
        ensure!(r.target.vertex_count() == r.value, "target has {} vertices", r.target.vertex_count());
        ensure!(
            verify_homomorphism(&t.graph, &r.target, &r.witness.mapping),
            "colouring does not re-verify"
        );
    }
    Ok(format!("lowerBoundUsed = 20, {outcome} in {:.2}s", start.elapsed().as_secs_f64()))
}

fn oracle_equivalence() -> Check {
    let start = Instant::now();
    let handles: Vec<_> = [(1, 0), (0, 2)]
        .into_iter()
        .map(|(n, m)| std::thread::spawn(move || ((n, m), sweep(4, params(n, m)))))
        .collect();
    let mut notes = Vec::new();
    for h in handles {
        let ((n, m), report) = h.join().map_err(|_| "sweep thread panicked".to_string())?;
        let report = report.map_err(|e| e.to_string())?;
        let states = params(n, m).p() as u32 + 1;
        let expected: usize = (1..=4u32).map(|k| states.pow(k * (k - 1) / 2) as usize).sum();
        ensure!(expected == 760, "({n},{m}): expected count {expected}");
        ensure!(report.graphs_checked == expected, "({n},{m}): {} graphs", report.graphs_checked);
        ensure!(report.passed(), "({n},{m}): {report:?}");
        notes.push(format!("({n},{m}) {} graphs", report.graphs_checked));
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    Ok(format!("{}, {:.1}s", notes.join(", "), elapsed.as_secs_f64()))
}

fn check_witness(g: &NMGraph, u: usize, v: usize, w: SeeWitness) -> bool {
    match w {
        SeeWitness::Direct => g.is_adjacent(u, v),
        SeeWitness::Via(x) => is_special_2path(g, u, x, v).unwrap_or(false),
    }
}

fn seeing_properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ee);
    for trial in 0..1000 {
        let params = random_params(&mut rng);
        let n = rng.gen_range(1..=12);
        let density = rng.gen_range(0.1..0.7);
        let g = random_graph(&mut rng, params, n, density);
        let full = seeing_graph(&g, None);
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let a = sees(&g, u, v).unwrap();
                let b = sees(&g, v, u).unwrap();
                ensure!(a.is_some() == b.is_some(), "trial {trial}: sees({u},{v}) asymmetric");
                ensure!(a.is_some() == full.contains_edge(u, v), "trial {trial}: seeing graph at ({u},{v})");
                if let Some(w) = a {
                    ensure!(check_witness(&g, u, v, w), "trial {trial}: bad witness {w} for ({u},{v})");
                }
            }
        }
        let pairs: Vec<(usize, usize)> = full.edges().collect();
        let naive: Vec<(usize, usize)> = naive_seeing_pairs(&g).into_iter().collect();
        ensure!(pairs == naive, "trial {trial}: seeing pairs differ from the oracle");
        for &(u, v) in &pairs {
            let ws = full.witnesses(u, v);
            ensure!(ws == all_witnesses(&g, u, v).unwrap().as_slice(), "trial {trial}: witness lists ({u},{v})");
            for &w in ws {
                ensure!(check_witness(&g, u, v, w), "trial {trial}: bad witness {w} for ({u},{v})");
            }
        }
        let subset = VertexSet::new((0..n).filter(|_| rng.gen_bool(0.5)), n).unwrap();
        let restricted = seeing_graph(&g, Some(&subset));
        let expected: Vec<(usize, usize)> = pairs
            .iter()
            .copied()
            .filter(|&(u, v)| subset.contains(u) && subset.contains(v))
            .collect();
        ensure!(restricted.edges().collect::<Vec<_>>() == expected, "trial {trial}: restriction");
        for &(u, v) in &expected {
            ensure!(restricted.witnesses(u, v) == full.witnesses(u, v), "trial {trial}: restricted witnesses");
        }
    }
    Ok("1000 random graphs".into())
}

fn homomorphism_properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x40e);
    for trial in 0..200 {
        let params = random_params(&mut rng);
        let n = rng.gen_range(1..=12);
        let density = rng.gen_range(0.1..0.6);
        let g = random_graph(&mut rng, params, n, density);
        let identity: Vec<usize> = (0..n).collect();
        ensure!(verify_homomorphism(&g, &g, &identity), "trial {trial}: identity rejected");
        let w = homomorphism_exists(&g, &g).unwrap().ok_or(format!("trial {trial}: no endomorphism"))?;
        ensure!(verify_homomorphism(&g, &g, &w.mapping), "trial {trial}: endomorphism invalid");
    }
    let mut non_injective = 0;
    for trial in 0..200 {
        let params = random_params(&mut rng);
        let n = rng.gen_range(1..=7);
        let density = rng.gen_range(0.2..0.6);
        let g = random_graph(&mut rng, params, n, density);
        // alternate between quotient targets and supergraph targets
        let h = if trial % 2 == 0 {
            let outcome = chromatic_number(&g, None).unwrap();
            match outcome {
                nmgraph::ChromaticOutcome::Found(r) => r.target,
                other => return Err(format!("trial {trial}: {other}")),
            }
        } else {
            let extra = rng.gen_range(0..3);
            random_supergraph(&mut rng, &g, extra, 0.3).0
        };
        let extra = rng.gen_range(0..3);
        let (k, _) = random_supergraph(&mut rng, &h, extra, 0.3);
        let f1 = homomorphism_exists(&g, &h).unwrap().ok_or(format!("trial {trial}: no G -> H"))?;
        let f2 = homomorphism_exists(&h, &k).unwrap().ok_or(format!("trial {trial}: no H -> K"))?;
        ensure!(verify_homomorphism(&g, &h, &f1.mapping), "trial {trial}: G -> H invalid");
        ensure!(verify_homomorphism(&h, &k, &f2.mapping), "trial {trial}: H -> K invalid");
        let composed: Vec<usize> = f1.mapping.iter().map(|&v| f2.mapping[v]).collect();
        ensure!(verify_homomorphism(&g, &k, &composed), "trial {trial}: composition invalid");
        let mut image = composed.clone();
        image.sort_unstable();
        image.dedup();
        non_injective += (image.len() < n) as usize;
    }
    let mixed = params(1, 1);
    let source = NMGraph::new(mixed, 2, [(0, 1, 1)], []).unwrap();
    let clique_edges: Vec<_> = (0..10).flat_map(|a| (a + 1..10).map(move |b| (a, b, 1))).collect();
    let target = NMGraph::new(mixed, 10, [], clique_edges).unwrap();
    ensure!(homomorphism_exists(&source, &target).unwrap().is_none(), "arc mapped onto edges");
    Ok(format!("200 identities, 200 chains ({non_injective} non-injective), negative control rejected"))
}

fn configuration_queries() -> Check {
    for (n, m) in [(1, 0), (0, 2), (1, 1), (0, 3)] {
        let params = params(n, m);
        let p = params.p();
        for alpha in 1..=p {
            for beta in 1..=p {
                let gadget = generate_exceptional(params, alpha, beta).map_err(|e| e.to_string())?;
                let hits = find_exceptional_configuration(&gadget.graph, &gadget.good_set);
                ensure!(hits.len() == 1, "({n},{m}) labels ({alpha},{beta}): {} matches", hits.len());
            }
        }
        let t = generate_tight(params);
        let hits = find_exceptional_configuration(&t.graph, &t.good_set);
        ensure!(hits.is_empty(), "({n},{m}): tight construction matched {} times", hits.len());
        let occ = find_fk(&t.graph, &t.good_set, 2 * p * p);
        let goods: Vec<usize> = t.good_set.iter().filter(|&v| v > 1).collect();
        let expected = vec![FkOccurrence {
            x: 0,
            y: 1,
            good_common_neighbors: goods,
        }];
        ensure!(occ == expected, "({n},{m}): {occ:?}");
        ensure!(occ[0].k() == 2 * p * p, "({n},{m}): k = {}", occ[0].k());
    }
    Ok("exceptional gadget matched once, tight zero times, F_2p^2 at the poles".into())
}

fn invariants(g: &NMGraph) -> (usize, usize, usize) {
    (
        relative_clique_number(g).0,
        absolute_clique_number(g).0,
        chromatic_number(g, None).unwrap().value().unwrap(),
    )
}

fn invariance_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1a7);
    for graph in 0..20 {
        let params: NMParams = random_params(&mut rng);
        let n = rng.gen_range(2..=8);
        let density = rng.gen_range(0.2..0.7);
        let g = random_graph(&mut rng, params, n, density);
        let base = invariants(&g);
        for t in 0..50 {
            let (ap, af, ep) = random_relabel(&mut rng, params);
            let perm = random_permutation(&mut rng, n);
            let h = match t % 3 {
                0 => g.relabel(&ap, &af, &ep).unwrap(),
                1 => g.permute_vertices(&perm).unwrap(),
                _ => g.relabel(&ap, &af, &ep).unwrap().permute_vertices(&perm).unwrap(),
            };
            let got = invariants(&h);
            ensure!(got == base, "graph {graph}, transform {t}: {got:?} != {base:?}");
        }
    }
    Ok("20 graphs x 50 transforms".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("tightness for p = 3, 4", tightness_p3_p4),
        ("tightness for p = 2", tightness_p2),
        ("tight construction structure", construction_structure),
        ("chromatic lower-bound probe", chromatic_probe),
        ("oracle equivalence up to 4 vertices", oracle_equivalence),
        ("seeing relation properties", seeing_properties),
        ("homomorphism properties", homomorphism_properties),
        ("configuration queries", configuration_queries),
        ("invariance under relabelling", invariance_suite),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}) [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why}) [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
