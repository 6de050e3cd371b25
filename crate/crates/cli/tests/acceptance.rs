//! One line per acceptance criterion; exits non-zero if any fails.

#[path = "../../core/tests/common/oracle.rs"]
mod oracle;

use std::process::Command;
use std::time::{Duration, Instant};

use nbrs_core::{
    are_isomorphic, check_win, classify, enumerate_connected, enumerate_reductions, from_pixels, gallery,
    is_reducible, reduce_fully, verify_reduction, AdjacencyMode, Graph, Level, PixelImage, Placement,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn nbrs(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_nbrs"))
        .args(args)
        .output()
        .map_err(|e| format!("spawn: {e}"))?;
    if !out.status.success() {
        return Err(format!(
            "nbrs {} exited with {}: {}",
            args.join(" "),
            out.status,
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(String::from_utf8_lossy(&out.stdout).into_owned())
}

fn irreducible_count(stdout: &str) -> Result<usize, String> {
    stdout
        .split_whitespace()
        .find_map(|t| t.strip_prefix("irreducible="))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| format!("unexpected output {stdout:?}"))
}

fn within(label: &str, elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed > limit {
        return Err(format!("{label} took {elapsed:?}, limit {limit:?}"));
    }
    Ok(())
}

fn sequence() -> Outcome {
    let expected = [1, 0, 0, 0, 1, 1, 3, 28, 547];
    let started = Instant::now();
    let mut got = Vec::new();
    for n in 1..=7 {
        got.push(irreducible_count(&nbrs(&[
            "enumerate",
            "--order",
            &n.to_string(),
        ])?)?);
    }
    let small = started.elapsed();
    let started = Instant::now();
    for n in 8..=9 {
        got.push(irreducible_count(&nbrs(&[
            "--jobs",
            "1",
            "enumerate",
            "--order",
            &n.to_string(),
        ])?)?);
    }
    let large = started.elapsed();
    if got != expected {
        return Err(format!("counts {got:?}, expected {expected:?}"));
    }
    within("orders 1-7", small, Duration::from_secs(10))?;
    within("orders 8-9", large, Duration::from_secs(30 * 60))?;
    Ok(format!(
        "{got:?}; 1-7 in {small:.2?}, 8-9 single-threaded in {large:.2?}"
    ))
}

fn catalog_fidelity() -> Outcome {
    let matches = |n: usize, expected: Vec<Graph>| -> Result<(), String> {
        let catalog = classify(n).catalog;
        if catalog.len() != expected.len() {
            return Err(format!(
                "order {n}: {} classes, expected {}",
                catalog.len(),
                expected.len()
            ));
        }
        for g in &expected {
            if !catalog.iter().any(|e| are_isomorphic(&e.graph, g)) {
                return Err(format!("order {n}: missing {:?}", g.edges()));
            }
        }
        Ok(())
    };
    matches(5, vec![Graph::cycle(5)])?;
    matches(6, vec![Graph::cycle(6)])?;
    matches(
        7,
        vec![
            Graph::cycle(7),
            gallery::hexagon_with_spoke_pair(),
            gallery::pentagon_with_bridge(),
        ],
    )?;
    Ok("orders 5, 6, 7 hold C5; C6; C7 and the two 7-point graphs".into())
}

fn oracle_equivalence() -> Outcome {
    let started = Instant::now();
    let mut classes = 0;
    for n in 1..=6 {
        for g in enumerate_connected(n) {
            classes += 1;
            if is_reducible(&g) != oracle::is_reducible(&g) {
                return Err(format!("disagreement on {:?}", g.edges()));
            }
        }
    }
    if classes != 143 {
        return Err(format!("{classes} classes, expected 143"));
    }
    within("oracle sweep", started.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{classes} classes agree in {:.2?}", started.elapsed()))
}

fn every_point_moves() -> Outcome {
    let started = Instant::now();
    let g = gallery::twisted_pentagon();
    let all = enumerate_reductions(&g);
    if all.is_empty() {
        return Err("no reductions".into());
    }
    if let Some(f) = all.iter().find(|f| (0..g.n()).any(|x| f[x] == x)) {
        return Err(format!("reduction {f} fixes a point"));
    }
    within("reduction listing", started.elapsed(), Duration::from_secs(1))?;
    Ok(format!("{} reductions, none with a fixed point", all.len()))
}

fn pappy() -> Outcome {
    let image = PixelImage::pappy();
    let g = from_pixels(&image, AdjacencyMode::Eight);
    if g.n() != 38 {
        return Err(format!("{} vertices, expected 38", g.n()));
    }
    let main = g.components().into_iter().max_by_key(|c| c.len()).unwrap();
    let r = reduce_fully(&g.induced_subgraph(&main));
    if is_reducible(&r) {
        return Err("full reduction is still reducible".into());
    }
    if are_isomorphic(&r, &Graph::cycle(10)) {
        Ok("38 vertices; reduces to a 10-cycle".into())
    } else {
        Ok(format!(
            "FLAGGED: 38 vertices; irreducible result with n={} edges={} is not a 10-cycle",
            r.n(),
            r.edge_count()
        ))
    }
}

fn checker_soundness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce);
    let mut wins = 0;
    for i in 0..10_000 {
        let n = rng.random_range(1..=9);
        let level = Level::from_graph(oracle::random_connected(&mut rng, n, 0.3));
        let spot: Vec<usize> = (0..n)
            .map(|v| {
                if rng.random_bool(0.8) {
                    let nbhd = level.graph.closed_neighborhood(v).to_vec();
                    nbhd[rng.random_range(0..nbhd.len())]
                } else {
                    rng.random_range(0..n)
                }
            })
            .collect();
        let placement = Placement::new(spot);
        let won = check_win(&level, &placement).is_reduction();
        if won != verify_reduction(&level.graph, &placement) {
            return Err(format!("pair {i}: {} {placement}", level.id));
        }
        wins += won as usize;
    }
    Ok(format!("10000 pairs agree ({wins} wins)"))
}

fn determinism() -> Outcome {
    let dir = std::env::temp_dir().join(format!("nbrs-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let paths = [dir.join("a.g6"), dir.join("b.g6")];
    for p in &paths {
        nbrs(&["enumerate", "--order", "8", "--catalog", &p.to_string_lossy()])?;
    }
    let read = |p: &std::path::Path| std::fs::read(p).map_err(|e| e.to_string());
    let (a, b) = (read(&paths[0])?, read(&paths[1])?);
    let _ = std::fs::remove_dir_all(&dir);
    if a != b {
        return Err("catalog files differ".into());
    }
    Ok(format!("two catalogs of {} bytes are identical", a.len()))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("irreducible counts by order", sequence),
        ("catalog fidelity", catalog_fidelity),
        ("oracle equivalence", oracle_equivalence),
        ("every point moves", every_point_moves),
        ("pixel image pipeline", pappy),
        ("checker soundness", checker_soundness),
        ("catalog determinism", determinism),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
