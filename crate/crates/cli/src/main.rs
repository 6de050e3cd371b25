use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use nbrs_core::enumerate::{self, MAX_ENUM_ORDER};
use nbrs_core::levels::{self, Selection};
use nbrs_core::reduce::reduce_fully_traced;
use nbrs_core::{graph6, AdjacencyMode, PixelImage, Placement, SolutionRecord, SolutionStore};

/// Graph reducibility toolkit: decide and apply reductions, enumerate the
/// irreducible catalog, and build the puzzle levels.
#[derive(Parser)]
#[command(name = "nbrs", version)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide reducibility of a graph6 string or a pixel file and reduce it fully.
    Reduce {
        /// A graph6 string, or the path of an `x y` pixel file.
        input: String,
        /// Pixel adjacency for image input.
        #[arg(long, default_value = "eight")]
        mode: AdjacencyMode,
    },
    /// Count the connected irreducible graphs of one order.
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Write the catalog (graph6, sorted by canonical key) here.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Classify graphs from this graph6 stream instead of generating them.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Re-check irreducibility and pairwise non-isomorphism of a catalog file.
    VerifyCatalog { file: PathBuf },
    /// Puzzle levels.
    #[command(subcommand)]
    Levels(LevelsCommand),
}

#[derive(Args)]
struct CorpusArgs {
    /// Orders to include: `5`, `2-7` or `2..=7`.
    #[arg(long, default_value = "2-6", value_parser = parse_orders)]
    orders: RangeInclusive<usize>,
    /// Maximum solvable levels per order.
    #[arg(long)]
    limit: Option<usize>,
    /// Also ship irreducible (unsolvable) levels, flagged as such.
    #[arg(long)]
    include_irreducible: bool,
}

impl CorpusArgs {
    fn selection(&self) -> Selection {
        Selection {
            orders: self.orders.clone(),
            limit: self.limit,
            include_irreducible: self.include_irreducible,
        }
    }
}

#[derive(Subcommand)]
enum LevelsCommand {
    /// Write a level corpus as JSON.
    Generate {
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long, default_value = "levels.json")]
        out: PathBuf,
    },
    /// Judge a placement such as `1,2,3,4,0,0` on a level.
    Check {
        level_id: String,
        placement: String,
        #[arg(long, default_value = "levels.json")]
        levels: PathBuf,
        /// Append the placement to this solution file if it wins.
        #[arg(long)]
        record: Option<PathBuf>,
        #[arg(long, default_value = "cli")]
        solver: String,
    },
    /// List recorded solutions for a level.
    Solutions {
        level_id: String,
        #[arg(long, default_value = "solutions.jsonl")]
        store: PathBuf,
    },
    /// Export (level, placement, verdict) fixtures for other win checkers.
    Fixtures {
        #[arg(long, default_value = "levels.json")]
        levels: PathBuf,
        #[arg(long, default_value = "fixtures.json")]
        out: PathBuf,
        /// Random fixtures kept per failure kind and level.
        #[arg(long, default_value_t = 2)]
        per_kind: usize,
    },
    /// Write the static bundle the UI loads: levels.json and fixtures.json.
    ServeDir {
        dir: PathBuf,
        #[command(flatten)]
        corpus: CorpusArgs,
    },
}

fn parse_orders(s: &str) -> Result<RangeInclusive<usize>, String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad order {t:?}"));
    let range = if let Some((a, b)) = s.split_once("..=") {
        parse(a)?..=parse(b)?
    } else if let Some((a, b)) = s.split_once('-') {
        parse(a)?..=parse(b)?
    } else {
        let n = parse(s)?;
        n..=n
    };
    if range.is_empty() || *range.start() < 1 || *range.end() > MAX_ENUM_ORDER {
        return Err(format!("orders must lie within 1..={MAX_ENUM_ORDER}"));
    }
    Ok(range)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match cli.jobs {
        Some(k) => rayon::ThreadPoolBuilder::new().num_threads(k.max(1)).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(cli.command)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Returns the verdict: `Ok(false)` becomes exit code 1.
fn run(command: Command) -> Result<bool> {
    match command {
        Command::Reduce { input, mode } => reduce(&input, mode),
        Command::Enumerate {
            order,
            catalog,
            input,
        } => enumerate(order, catalog.as_deref(), input.as_deref()),
        Command::VerifyCatalog { file } => verify_catalog(&file),
        Command::Levels(cmd) => levels(cmd),
    }
}

fn reduce(input: &str, mode: AdjacencyMode) -> Result<bool> {
    let path = Path::new(input);
    let (graph, image) = if path.is_file() {
        let image = PixelImage::load(path)?;
        (image.to_graph(mode), Some(image))
    } else {
        (graph6::decode(input)?, None)
    };
    println!("graph: n={} edges={}", graph.n(), graph.edge_count());
    let verdict = nbrs_core::find_reduction(&graph);
    match &verdict.witness {
        Some(w) => {
            println!("verdict: reducible");
            println!("witness: {w}");
        }
        None => println!("verdict: irreducible"),
    }
    let full = reduce_fully_traced(&graph);
    println!(
        "reduced: n={} edges={} steps={} components={}",
        full.graph.n(),
        full.graph.edge_count(),
        full.steps,
        full.graph.components().len()
    );
    println!("reduced-graph6: {}", graph6::encode(&full.graph));
    if let Some(image) = image {
        let kept: Vec<String> = full
            .kept
            .iter()
            .map(|&v| {
                let p = image.points()[v];
                format!("({},{})", p.x, p.y)
            })
            .collect();
        println!("kept-pixels: {}", kept.join(" "));
    }
    Ok(verdict.reducible())
}

fn enumerate(order: usize, catalog: Option<&Path>, input: Option<&Path>) -> Result<bool> {
    let started = Instant::now();
    let result = match input {
        Some(path) => {
            let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
            let graphs = graph6::read_all(BufReader::new(file))?;
            let mut by_order = enumerate::classify_graphs(graphs.into_iter().map(|(_, g)| g));
            by_order.remove(&order).unwrap_or(enumerate::Classification {
                order,
                classes: 0,
                catalog: Vec::new(),
            })
        }
        None => {
            if !(1..=MAX_ENUM_ORDER).contains(&order) {
                bail!("--order must lie within 1..={MAX_ENUM_ORDER}");
            }
            enumerate::classify(order)
        }
    };
    println!(
        "order={} connected={} irreducible={}",
        result.order,
        result.classes,
        result.count()
    );
    eprintln!("elapsed: {:.3}s", started.elapsed().as_secs_f64());
    if let Some(path) = catalog {
        enumerate::export_catalog(&result.catalog, order, path)?;
    }
    Ok(true)
}

fn verify_catalog(path: &Path) -> Result<bool> {
    let file = enumerate::read_catalog(path)?;
    let check = enumerate::verify_catalog(&file);
    for problem in &check.problems {
        println!("problem: {problem}");
    }
    println!(
        "entries={} verdict={}",
        check.entries,
        if check.ok() { "ok" } else { "failed" }
    );
    Ok(check.ok())
}

fn write_with(path: &Path, body: impl FnOnce(&mut BufWriter<File>) -> std::io::Result<()>) -> Result<()> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    let mut out = BufWriter::new(file);
    body(&mut out)
        .and_then(|_| out.flush())
        .with_context(|| format!("writing {}", path.display()))
}

fn levels(cmd: LevelsCommand) -> Result<bool> {
    match cmd {
        LevelsCommand::Generate { corpus, out } => {
            let levels = levels::generate_levels(&corpus.selection());
            levels::save_levels(&levels, &out)?;
            println!("levels={} file={}", levels.len(), out.display());
            Ok(true)
        }
        LevelsCommand::Check {
            level_id,
            placement,
            levels,
            record,
            solver,
        } => {
            let corpus = levels::load_levels(&levels)?;
            let level = corpus
                .iter()
                .find(|l| l.id == level_id)
                .with_context(|| format!("no level {level_id} in {}", levels.display()))?;
            let placement: Placement = placement.parse().map_err(anyhow::Error::msg)?;
            let n = level.graph.n();
            if placement.len() != n || placement.as_slice().iter().any(|&s| s >= n) {
                bail!("placement must list {n} spots, each below {n}");
            }
            let report = level.check(&placement);
            println!("vacant: {:?}", report.vacant);
            println!("far-moves: {:?}", report.far_moves);
            println!("red-edges: {:?}", report.broken_edges);
            println!(
                "verdict: {}",
                if report.is_reduction() { "win" } else { "not a win" }
            );
            if let (Some(store), true) = (record, report.is_reduction()) {
                SolutionStore::new(store).record(level, &SolutionRecord::now(level, &placement, solver))?;
            }
            Ok(report.is_reduction())
        }
        LevelsCommand::Solutions { level_id, store } => {
            for rec in SolutionStore::new(store).load(&level_id)? {
                let spot: Vec<String> = rec.spot.iter().map(|s| s.to_string()).collect();
                println!("{} {} {} {}", rec.ts, rec.solver, rec.level, spot.join(","));
            }
            Ok(true)
        }
        LevelsCommand::Fixtures {
            levels,
            out,
            per_kind,
        } => {
            let corpus = levels::load_levels(&levels)?;
            let fixtures = levels::conformance_fixtures(&corpus, per_kind);
            write_with(&out, |w| levels::write_fixtures(&fixtures, w))?;
            println!("fixtures={} file={}", fixtures.len(), out.display());
            Ok(true)
        }
        LevelsCommand::ServeDir { dir, corpus } => {
            std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
            let levels = levels::generate_levels(&corpus.selection());
            levels::save_levels(&levels, dir.join("levels.json"))?;
            let fixtures = levels::conformance_fixtures(&levels, 2);
            write_with(&dir.join("fixtures.json"), |w| {
                levels::write_fixtures(&fixtures, w)
            })?;
            println!(
                "levels={} fixtures={} dir={}",
                levels.len(),
                fixtures.len(),
                dir.display()
            );
            Ok(true)
        }
    }
}
