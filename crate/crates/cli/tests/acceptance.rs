//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. All randomness is seeded.

#[path = "../../core/tests/common/mod.rs"]
mod families;

use std::fs;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use families::*;
use recolor_core::density::mad_brute;
use recolor_core::layering::{
    build_degree_partition, validate_partition, LayeredSubgraphRef, SpecialISParams,
};
use recolor_core::oracle::{bfs_distance, count_proper_colorings, exact_diameter};
use recolor_core::recolor::{
    eliminate_color, recolor_theorem_pipeline, sequence_stats, verify_sequence, Palette,
    PipelineOutput, Recolorer, VertexMask, TREE_LENGTH_CONSTANT,
};
use recolor_core::{mad_exact, Color, Coloring, Graph, Rational};

const WALK_TRIPLES: usize = 540;
const WALK_MAX_N: usize = 30;
const WALK_TIME_LIMIT: Duration = Duration::from_secs(120);
const ORACLE_TRIPLES: usize = 210;
const ORACLE_MAX_N: usize = 7;
const ORACLE_TIME_LIMIT: Duration = Duration::from_secs(300);
const LOCALITY_CALLS: usize = 240;
const AUDITED_RUNS: usize = 200;
const PARTITION_GRAPHS: usize = 240;
const PARTITION_MAX_N: usize = 200;
/// Slack on the floating-point evaluation of the layer-count formula.
const LOG_BOUND_SLACK: f64 = 1e-9;
const MAD_GRAPHS: usize = 200;
const MAD_MAX_N: usize = 10;
const TREE_RUNS: usize = 120;
const TREE_MAX_N: usize = 200;
const DETERMINISM_PAIRS: usize = 20;

struct Verdict {
    passed: bool,
    detail: String,
}

fn verdict(passed: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        passed,
        detail: detail.into(),
    }
}

fn half() -> Rational {
    Rational::new(1, 2)
}

/// A graph from the walk families with its `(d, epsilon, k)`.
struct Instance {
    g: Graph,
    params: SpecialISParams,
    k: Color,
}

fn walk_instance(rng: &mut ChaCha8Rng, max_n: usize) -> Instance {
    let n = rng.gen_range(1..=max_n);
    let (g, d) = match rng.gen_range(0..3) {
        0 => (random_small_forest(rng, n, 4), 2),
        1 => (random_tree(rng, n), 3),
        _ => (
            random_mad_bounded(rng, n, n + n / 4, Rational::new(5, 2)),
            3,
        ),
    };
    Instance {
        g,
        params: SpecialISParams::new(d, half()).unwrap(),
        k: d as Color + 1,
    }
}

fn criterion_1(runs: &mut Vec<(PipelineOutput, Color)>) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let start = Instant::now();
    let mut violations = 0;
    for _ in 0..WALK_TRIPLES {
        let inst = walk_instance(&mut rng, WALK_MAX_N);
        let a = random_coloring(&mut rng, &inst.g, inst.k);
        let b = random_coloring(&mut rng, &inst.g, inst.k);
        match recolor_theorem_pipeline(&inst.g, &inst.params, &a, &b, inst.k) {
            Ok(out) => {
                if verify_sequence(&inst.g, &a, &out.sequence.steps, inst.k).as_ref() != Ok(&b) {
                    violations += 1;
                }
                runs.push((out, inst.k));
            }
            Err(_) => violations += 1,
        }
    }
    let elapsed = start.elapsed();
    verdict(
        violations == 0 && elapsed < WALK_TIME_LIMIT,
        format!("{WALK_TRIPLES} triples, {violations} violations, {elapsed:.1?}"),
    )
}

fn criterion_2() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let start = Instant::now();
    let mut violations = 0;
    let mut slack = 0usize;
    for i in 0..ORACLE_TRIPLES {
        let n = rng.gen_range(1..=ORACLE_MAX_N);
        let (g, eps) = if i % 2 == 0 {
            (random_small_forest(&mut rng, n, 4), half())
        } else {
            (random_tree(&mut rng, n), Rational::new(2, n.max(2) as i64))
        };
        let params = SpecialISParams::new(2, eps).unwrap();
        let a = random_coloring(&mut rng, &g, 3);
        let b = random_coloring(&mut rng, &g, 3);
        let Ok(out) = recolor_theorem_pipeline(&g, &params, &a, &b, 3) else {
            violations += 1;
            continue;
        };
        match bfs_distance(&g, 3, a.colors(), b.colors()) {
            Ok(Some(dist)) if out.sequence.len() >= dist => slack += out.sequence.len() - dist,
            _ => violations += 1,
        }
    }
    let elapsed = start.elapsed();
    verdict(
        violations == 0 && elapsed < ORACLE_TIME_LIMIT,
        format!(
            "{ORACLE_TRIPLES} triples, {violations} violations, total excess over BFS {slack}, {elapsed:.1?}"
        ),
    )
}

fn criterion_3() -> Verdict {
    let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
    let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
    let checks = [
        bfs_distance(&k2, 3, &[1, 2], &[2, 1]) == Ok(Some(3)),
        bfs_distance(&p3, 3, &[1, 2, 1], &[2, 1, 2]) == Ok(Some(4)),
        exact_diameter(&k3, 3) == Ok(None),
        count_proper_colorings(&p3, 3) == Ok(12),
    ];
    let ok = checks.iter().filter(|&&c| c).count();
    verdict(
        ok == checks.len(),
        format!("{ok}/{} spot values", checks.len()),
    )
}

fn criterion_4() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut violations = 0;
    let mut recolored = 0;
    for _ in 0..LOCALITY_CALLS {
        let inst = walk_instance(&mut rng, WALK_MAX_N);
        let n = inst.g.n();
        let p = build_degree_partition(&inst.g, &inst.params).unwrap();
        let h = rng.gen_range(1..=p.t());
        let target = rng.gen_range(1..=inst.k);
        let c = random_coloring(&mut rng, &inst.g, inst.k);
        let f = LayeredSubgraphRef::new(h, p.t()).unwrap();
        let palette = Palette::range(inst.k);
        let Ok(seq) = eliminate_color(&inst.g, &p, f, &c, target, &palette, &VertexMask::full(n))
        else {
            violations += 1;
            continue;
        };
        recolored += seq.len();
        let Ok(end) = verify_sequence(&inst.g, &c, &seq.steps, inst.k) else {
            violations += 1;
            continue;
        };
        let counts = sequence_stats(&seq).per_vertex;
        let layer_of = p.layer_of(n);
        let bad = (0..n).any(|v| {
            if layer_of[v] < h {
                end.color(v) == target
            } else {
                counts[v] != 0
            }
        });
        violations += bad as usize;
    }
    verdict(
        violations == 0,
        format!("{LOCALITY_CALLS} calls, {recolored} steps, {violations} violations"),
    )
}

fn criterion_5() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut calls, mut violations, mut errors) = (0, 0, 0);
    for _ in 0..AUDITED_RUNS {
        let inst = walk_instance(&mut rng, WALK_MAX_N);
        let p = build_degree_partition(&inst.g, &inst.params).unwrap();
        let a = random_coloring(&mut rng, &inst.g, inst.k);
        let b = random_coloring(&mut rng, &inst.g, inst.k);
        let run =
            Recolorer::new(&inst.g, &p).and_then(|r| r.audited().recolor_between(&a, &b, inst.k));
        match run {
            Ok(run) => {
                calls += run.audit.clear_calls.len();
                violations += run
                    .audit
                    .clear_calls
                    .iter()
                    .filter(|c| c.max_w_a_recolors > 1 || c.outside_recolors > 0)
                    .count();
            }
            Err(_) => errors += 1,
        }
    }
    verdict(
        violations == 0 && errors == 0 && calls > 0,
        format!("{calls} layer-clearing calls in {AUDITED_RUNS} runs, {violations} violations"),
    )
}

/// `ceil(log n / log(1 / (1 − ε/d²))) + 1` in floating point.
fn layer_formula(n: usize, params: &SpecialISParams) -> usize {
    let eps = *params.epsilon().numer() as f64 / *params.epsilon().denom() as f64;
    let shrink = 1.0 / (1.0 - eps / (params.d() * params.d()) as f64);
    ((n as f64).ln() / shrink.ln() - LOG_BOUND_SLACK)
        .ceil()
        .max(0.0) as usize
        + 1
}

fn criterion_6() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut violations = 0;
    let mut worst = 0.0f64;
    for i in 0..PARTITION_GRAPHS {
        let n = rng.gen_range(1..=PARTITION_MAX_N);
        let (g, params) = match i % 4 {
            0 => (
                random_small_forest(&mut rng, n, 4),
                SpecialISParams::new(2, half()),
            ),
            1 => (random_tree(&mut rng, n), SpecialISParams::new(3, half())),
            2 => {
                let g = random_tree(&mut rng, n);
                (
                    g,
                    SpecialISParams::new(2, Rational::new(2, n.max(2) as i64)),
                )
            }
            _ => {
                let g = random_gnp(&mut rng, n, 2.5 / n as f64);
                let mad = mad_exact(&g);
                let d = mad.floor().to_integer() + 1;
                let eps = (Rational::from_integer(d) - mad).min(half());
                (g, SpecialISParams::new(d as usize, eps))
            }
        };
        let params = params.unwrap();
        let Ok(p) = build_degree_partition(&g, &params) else {
            violations += 1;
            continue;
        };
        let mut residual = n;
        let mut rounds_ok = true;
        for layer in p.layers() {
            rounds_ok &= layer.len() >= params.threshold(residual);
            residual -= layer.len();
        }
        let bound = layer_formula(n, &params);
        worst = worst.max(p.t() as f64 / bound as f64);
        if validate_partition(&g, &p).is_err() || !rounds_ok || p.t() > bound {
            violations += 1;
        }
    }
    verdict(
        violations == 0,
        format!(
            "{PARTITION_GRAPHS} graphs up to n = {PARTITION_MAX_N}, {violations} violations, max t/bound {worst:.3}"
        ),
    )
}

fn criterion_7() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut mismatches = 0;
    for _ in 0..MAD_GRAPHS {
        let n = rng.gen_range(1..=MAD_MAX_N);
        let p = rng.gen_range(0.0..1.0);
        let g = random_gnp(&mut rng, n, p);
        if mad_brute(&g).ok() != Some(mad_exact(&g)) {
            mismatches += 1;
        }
    }
    verdict(
        mismatches == 0,
        format!("{MAD_GRAPHS} graphs, {mismatches} mismatches"),
    )
}

fn criterion_8(runs: &[(PipelineOutput, Color)]) -> Verdict {
    let over = runs
        .iter()
        .filter(|(out, k)| out.stats.max_per_vertex as u128 > out.bound(*k))
        .count();

    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut regressions = 0;
    let mut worst = 0.0f64;
    for _ in 0..TREE_RUNS {
        let n = rng.gen_range(2..=TREE_MAX_N);
        let g = random_tree(&mut rng, n);
        let params = SpecialISParams::new(2, Rational::new(2, n as i64)).unwrap();
        let a = random_coloring(&mut rng, &g, 3);
        let b = random_coloring(&mut rng, &g, 3);
        let Ok(out) = recolor_theorem_pipeline(&g, &params, &a, &b, 3) else {
            regressions += 1;
            continue;
        };
        let scale = n * out.partition.t();
        worst = worst.max(out.sequence.len() as f64 / scale as f64);
        if out.sequence.len() > TREE_LENGTH_CONSTANT * scale {
            regressions += 1;
        }
    }
    verdict(
        over == 0 && regressions == 0 && !runs.is_empty(),
        format!(
            "{} runs over the per-vertex bound of {}; {TREE_RUNS} trees, {regressions} above {TREE_LENGTH_CONSTANT}·n·t, max length/(n·t) {worst:.3}",
            over,
            runs.len()
        ),
    )
}

fn criterion_9() -> Verdict {
    let dir = tempfile::TempDir::new().unwrap();
    let path = |name: String| dir.path().join(name);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut differing = 0;
    let mut failures = 0;
    for i in 0..DETERMINISM_PAIRS {
        let inst = walk_instance(&mut rng, WALK_MAX_N);
        let a = random_coloring(&mut rng, &inst.g, inst.k);
        let b = random_coloring(&mut rng, &inst.g, inst.k);
        let (gp, ap, bp) = (
            path(format!("g{i}")),
            path(format!("a{i}")),
            path(format!("b{i}")),
        );
        fs::write(&gp, inst.g.to_text()).unwrap();
        fs::write(&ap, Coloring::to_text(&a)).unwrap();
        fs::write(&bp, Coloring::to_text(&b)).unwrap();
        let mut outputs = Vec::new();
        for rep in 0..2 {
            let (seq, stats) = (path(format!("s{i}_{rep}")), path(format!("j{i}_{rep}")));
            let status = Command::new(env!("CARGO_BIN_EXE_recolor"))
                .arg("recolor")
                .args([&gp, &ap, &bp])
                .args([
                    "-k",
                    &inst.k.to_string(),
                    "-d",
                    &inst.params.d().to_string(),
                ])
                .args(["--epsilon", "1/2", "--out"])
                .arg(&seq)
                .arg("--stats")
                .arg(&stats)
                .output()
                .unwrap();
            if !status.status.success() {
                failures += 1;
            }
            outputs.push((
                status.stdout,
                fs::read(&seq).unwrap_or_default(),
                fs::read(&stats).unwrap_or_default(),
            ));
        }
        differing += (outputs[0] != outputs[1]) as usize;
    }
    verdict(
        differing == 0 && failures == 0,
        format!("{DETERMINISM_PAIRS} repeated pairs, {differing} differ, {failures} failed runs"),
    )
}

fn main() {
    let mut runs = Vec::new();
    let verdicts = [
        ("walk validity", criterion_1(&mut runs)),
        ("oracle dominance", criterion_2()),
        ("exact oracle spot values", criterion_3()),
        ("elimination locality", criterion_4()),
        ("single recoloring of W_a per call", criterion_5()),
        ("partition guarantees", criterion_6()),
        ("mad cross-check", criterion_7()),
        ("bound conformance", criterion_8(&runs)),
        ("determinism", criterion_9()),
    ];
    let mut failed = 0;
    for (i, (name, v)) in verdicts.iter().enumerate() {
        let tag = if v.passed { "PASS" } else { "FAIL" };
        println!("criterion {}: {tag} {name}: {}", i + 1, v.detail);
        failed += !v.passed as usize;
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
