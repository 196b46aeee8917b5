//! Acceptance suite: runs every criterion, prints one PASS/FAIL line each, and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use booktri::analytics::{book_profile, book_size, max_book, triangle_count};
use booktri::constructions::{
    edwards_generalized, theorem1_sharp, Alpha, ConstructionParams, Rounding,
};
use booktri::format::from_graph6;
use booktri::graph::Graph;
use booktri::partition::{
    bipartize_rewire, local_max_cut_traced, split_degree, stability_partition, turan_edges,
};
use booktri::search::{anneal_min_triangles, extremal_scan, AnnealParams};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn random_graph(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Independent count over vertex triples.
fn triangles_by_triples(g: &Graph) -> u64 {
    let n = g.n();
    let mut t = 0;
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                t += (b + 1..n)
                    .filter(|&c| g.has_edge(a, c) && g.has_edge(b, c))
                    .count() as u64;
            }
        }
    }
    t
}

fn closes_triangle(g: &Graph, u: usize, v: usize) -> bool {
    (0..g.n()).any(|w| g.has_edge(u, w) && g.has_edge(v, w))
}

/// Mix of three triangle-free families: random greedy insertion stopped at a random
/// size, random bipartite graphs, and random subgraphs of C5 blow-ups with extra
/// greedy edges.
fn triangle_free(rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.random_range(5..=64);
    let mut g = Graph::new(n).unwrap();
    match rng.random_range(0..3) {
        0 => {}
        1 => {
            let side: Vec<bool> = (0..n).map(|_| rng.random_bool(0.5)).collect();
            let p = rng.random_range(0.3..1.0);
            for u in 0..n {
                for v in u + 1..n {
                    if side[u] != side[v] && rng.random_bool(p) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
        }
        _ => {
            let class: Vec<usize> = (0..n).map(|_| rng.random_range(0..5)).collect();
            let p = rng.random_range(0.5..1.0);
            for u in 0..n {
                for v in u + 1..n {
                    let d = (class[u] + 5 - class[v]) % 5;
                    if (d == 1 || d == 4) && rng.random_bool(p) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    for i in (1..pairs.len()).rev() {
        pairs.swap(i, rng.random_range(0..=i));
    }
    let keep = rng.random_range(0..=pairs.len());
    for &(u, v) in &pairs[..keep] {
        if !g.has_edge(u, v) && !closes_triangle(&g, u, v) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

fn rademacher_and_edwards_scans() -> (Outcome, Outcome) {
    let mut c1 = Vec::new();
    let mut c2 = Vec::new();
    let mut bad1 = Vec::new();
    let mut bad2 = Vec::new();
    for n in 4..=8 {
        let e = n * n / 4 + 1;
        let r = match extremal_scan(n, e) {
            Ok(r) => r,
            Err(err) => {
                let msg = format!("n={n}: {err}");
                return (Err(msg.clone()), Err(msg));
            }
        };
        let (min_t, min_b) = (r.min_t.unwrap(), r.min_b.unwrap());
        c1.push(format!("n={n}:{min_t}"));
        c2.push(format!("n={n}:{min_b}"));
        if min_t != (n / 2) as u64 {
            bad1.push(format!("n={n} min_t={min_t} expected {}", n / 2));
        }
        if (min_b as usize) < n / 6 + 1 {
            bad2.push(format!("n={n} min_b={min_b} below {}", n / 6 + 1));
        }
        for (&(b, t), w) in r.pareto.iter().zip(&r.witnesses) {
            let g = from_graph6(w.as_bytes()).unwrap();
            if (max_book(&g), triangle_count(&g).count, g.m()) != (b, t, e) {
                bad1.push(format!("n={n} witness {w} does not reverify"));
            }
        }
    }
    let wrap = |bad: Vec<String>, ok: Vec<String>| {
        if bad.is_empty() {
            Ok(ok.join(" "))
        } else {
            Err(bad.join("; "))
        }
    };
    (wrap(bad1, c1), wrap(bad2, c2))
}

/// `αn/2` as an exact fraction.
fn half_n(alpha: Alpha, n: usize) -> Ratio<i64> {
    alpha.ratio() * Ratio::from_integer(n as i64) / 2
}

fn alphas_05_step() -> Vec<Alpha> {
    (11..=19).map(|k| Alpha::new(k, 20).unwrap()).collect()
}

/// Violations of criterion 3 under the given rounding.
fn theorem1_violations(rounding: Rounding) -> (usize, Vec<String>) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in (40..=400).step_by(2) {
        for alpha in alphas_05_step() {
            checked += 1;
            let params = ConstructionParams { n, alpha, rounding };
            let g = match theorem1_sharp(&params) {
                Ok(r) => r.graph,
                Err(err) => {
                    bad.push(format!("n={n} alpha={alpha}: {err}"));
                    continue;
                }
            };
            let t = triangle_count(&g).count;
            let b = max_book(&g);
            let quarter = (n * n / 4) as f64;
            let dev = (t as f64 / quarter - alpha.to_f64() * (1.0 - alpha.to_f64())).abs();
            if g.m() != n * n / 4 + 1 {
                bad.push(format!("n={n} alpha={alpha}: e={}", g.m()));
            }
            if !alpha.book_below_cap(b, n) {
                bad.push(format!(
                    "n={n} alpha={alpha}: b={b} not below {}",
                    half_n(alpha, n)
                ));
            }
            if dev > 6.0 / n as f64 {
                bad.push(format!(
                    "n={n} alpha={alpha}: |t/(n^2/4) - a(1-a)| = {dev:.5} > 6/n"
                ));
            }
        }
    }
    (checked, bad)
}

fn theorem1_sharpness() -> Outcome {
    let (checked, bad) = theorem1_violations(Rounding::Floor);
    let (_, bad_alt) = theorem1_violations(Rounding::BelowCap);
    eprintln!(
        "  note: rounding=below_cap leaves {} violation(s): {}",
        bad_alt.len(),
        bad_alt.join("; ")
    );
    if bad.is_empty() {
        Ok(format!("{checked} (n, alpha) pairs"))
    } else {
        Err(format!(
            "{} of {checked} checks violated: {}",
            bad.len(),
            bad.join("; ")
        ))
    }
}

fn edwards_density() -> Outcome {
    let mut bad = Vec::new();
    let mut worst: f64 = 0.0;
    for n in [48, 96, 192] {
        for alpha in [
            Alpha::new(7, 20).unwrap(),
            Alpha::new(2, 5).unwrap(),
            Alpha::new(9, 20).unwrap(),
        ] {
            let g = match edwards_generalized(&ConstructionParams {
                n,
                alpha,
                rounding: Rounding::Floor,
            }) {
                Ok(r) => r.graph,
                Err(err) => {
                    bad.push(format!("n={n} alpha={alpha}: {err}"));
                    continue;
                }
            };
            let t = triangle_count(&g).count;
            let b = max_book(&g);
            let a = alpha.to_f64();
            let dev = (t as f64 / (n as f64).powi(3) - a * (1.0 - a).powi(2) / 16.0).abs();
            worst = worst.max(dev * n as f64);
            if !alpha.book_below_cap(b, n) {
                bad.push(format!(
                    "n={n} alpha={alpha}: b={b} not below {}",
                    half_n(alpha, n)
                ));
            }
            if dev > 2.0 / n as f64 {
                bad.push(format!("n={n} alpha={alpha}: deviation {dev:.6} > 2/n"));
            }
        }
    }
    if bad.is_empty() {
        Ok(format!("9 instances, worst n*deviation {worst:.4}"))
    } else {
        Err(bad.join("; "))
    }
}

fn stability_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut checked = 0;
    let mut nonbipartite = 0;
    let mut bad = Vec::new();
    while checked < 10_000 {
        let g = triangle_free(&mut rng);
        let r = stability_partition(&g).map_err(|e| e.to_string())?;
        if r.deficit_k < 0 {
            bad.push(format!(
                "triangle-free graph above the Turán number: n={} m={}",
                g.n(),
                g.m()
            ));
            continue;
        }
        checked += 1;
        let tag = || format!("n={} m={}", g.n(), g.m());
        if (r.internal_x + r.internal_y) as i64 > r.deficit_k {
            bad.push(format!(
                "{}: internal {} > k {}",
                tag(),
                r.internal_x + r.internal_y,
                r.deficit_k
            ));
        }
        nonbipartite += (r.internal_x > 0) as usize;
        let h = bipartize_rewire(&g).map_err(|e| e.to_string())?;
        let simple = h.is_consistent() && (0..h.n()).all(|v| !h.has_edge(v, v));
        if !simple || !h.is_bipartite_with(&r.partition.side) {
            bad.push(format!("{}: rewired graph not simple bipartite", tag()));
        }
        if h.m() != g.m() + r.internal_x || h.m() > turan_edges(g.n()) {
            bad.push(format!("{}: rewired edge count {}", tag(), h.m()));
        }
        if bad.len() > 5 {
            break;
        }
    }
    if bad.is_empty() {
        Ok(format!(
            "{checked} triangle-free graphs, {nonbipartite} with internal X edges"
        ))
    } else {
        Err(bad.join("; "))
    }
}

fn handshake_and_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let mut bad = Vec::new();
    for _ in 0..10_000 {
        let n = rng.random_range(1..=32);
        let p = rng.random_range(0.0..1.0);
        let g = random_graph(n, p, &mut rng);
        let t = triangle_count(&g).count;
        let books: u64 = g.edges().map(|e| book_size(&g, e).unwrap() as u64).sum();
        if books != 3 * t {
            bad.push(format!(
                "n={n} m={}: sum of books {books} != 3t = {}",
                g.m(),
                3 * t
            ));
        }
        if let Ok(profile) = book_profile(&g) {
            if profile.total() != books {
                bad.push(format!("n={n}: profile total disagrees"));
            }
        }
        let oracle = triangles_by_triples(&g);
        if oracle != t {
            bad.push(format!(
                "n={n} m={}: codegree count {t} != triple count {oracle}",
                g.m()
            ));
        }
        if bad.len() > 5 {
            break;
        }
    }
    if bad.is_empty() {
        Ok("10000 random graphs".into())
    } else {
        Err(bad.join("; "))
    }
}

fn local_cut_contract() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let mut bad = Vec::new();
    let mut max_scans = 0;
    for _ in 0..1_000 {
        let n = rng.random_range(1..=64);
        let p = rng.random_range(0.0..1.0);
        let g = random_graph(n, p, &mut rng);
        let (part, trace) = local_max_cut_traced(&g, None).map_err(|e| e.to_string())?;
        max_scans = max_scans.max(trace.improving_scans);
        if let Some(v) = (0..n).find(|&v| {
            let (across, same) = split_degree(&g, &part, v);
            across < same
        }) {
            bad.push(format!(
                "n={n} m={}: vertex {v} has more neighbours on its own side",
                g.m()
            ));
        }
        if trace.improving_scans > g.m() {
            bad.push(format!(
                "n={n} m={}: {} scans",
                g.m(),
                trace.improving_scans
            ));
        }
        if bad.len() > 5 {
            break;
        }
    }
    if bad.is_empty() {
        Ok(format!(
            "1000 random graphs, at most {max_scans} improving scans"
        ))
    } else {
        Err(bad.join("; "))
    }
}

fn search_consistency() -> Outcome {
    let exact = extremal_scan(6, 10)
        .map_err(|e| e.to_string())?
        .min_t
        .unwrap();
    let params = AnnealParams::new(7, 1_000_000, 1);
    let first = anneal_min_triangles(6, 10, &params).map_err(|e| e.to_string())?;
    let second = anneal_min_triangles(6, 10, &params).map_err(|e| e.to_string())?;
    let (a, b) = (
        serde_json::to_vec(&first).unwrap(),
        serde_json::to_vec(&second).unwrap(),
    );
    match (first.min_t, a == b) {
        (Some(t), true) if t == exact => Ok(format!(
            "annealed t={t}, exhaustive t={exact}, runs byte-identical"
        )),
        (t, same) => Err(format!(
            "annealed t={t:?}, exhaustive t={exact}, byte-identical={same}"
        )),
    }
}

fn main() -> ExitCode {
    let (c1, c2) = {
        let start = Instant::now();
        let r = rademacher_and_edwards_scans();
        eprintln!("  scans for n=4..8 took {:.1?}", start.elapsed());
        r
    };
    let rest: [Criterion; 6] = [
        ("theorem 1 sharpness", theorem1_sharpness),
        ("conjecture construction density", edwards_density),
        ("stability partition and rewire", stability_suite),
        ("handshake and oracle equivalence", handshake_and_oracle),
        ("local max-cut contract", local_cut_contract),
        ("search consistency", search_consistency),
    ];
    let mut results = vec![("rademacher exactness", c1), ("edwards book bound", c2)];
    for (name, run) in rest {
        results.push((name, run()));
    }
    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
