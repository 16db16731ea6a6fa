use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use tilings::cb::ranks;
use tilings::io::{load_family_dir, load_presentation, load_tileset, pattern_json};
use tilings::lang::{admissible_squares, count_admissible, extensible_squares};
use tilings::order::{hasse, TilingFamily};
use tilings::presentation::{GridPresentation, TilingType};
use tilings::solver::{classify, enumerate_torus, find_weak_witness, ClassifyOutcome};
use tilings::tiles::{Alphabet, TorusTiling, Vec2};
use tilings::Result;

#[derive(Parser)]
#[command(name = "tilings", version, about = "Explore 2D tile-sets and their tilings")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List (or count) admissible n×n squares; with --margin, only those
    /// extending by m cells on every side.
    Patterns {
        tiles: PathBuf,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        margin: Option<usize>,
        #[arg(long)]
        count: bool,
    },
    /// Torus tilings up to the given periods, one per translation class.
    Torus {
        tiles: PathBuf,
        #[arg(long = "max-p")]
        max_p: usize,
        #[arg(long = "max-q")]
        max_q: usize,
    },
    /// Decide emptiness or find a periodic tiling within a size budget.
    Classify {
        tiles: PathBuf,
        #[arg(long)]
        budget: usize,
    },
    /// Search for a tiling periodic in exactly one direction.
    WeakPeriodic {
        tiles: PathBuf,
        #[arg(long = "max-period")]
        max_period: usize,
    },
    /// Check that a presentation is a tiling (exit 1 if not).
    Validate { tiles: PathBuf, pres: PathBuf },
    /// Type and period lattice of a presentation.
    Analyze { tiles: PathBuf, pres: PathBuf },
    /// Extraction order of a directory of presentations.
    Order {
        tiles: PathBuf,
        family: PathBuf,
        #[arg(long)]
        window: usize,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Cantor-Bendixson ranks of a directory of presentations.
    Cb {
        tiles: PathBuf,
        family: PathBuf,
        #[arg(long)]
        window: usize,
    },
}

fn torus_json(t: &TorusTiling, a: &Alphabet) -> Value {
    json!({"p": t.p(), "q": t.q(), "rows": pattern_json(&t.to_pattern(), a)})
}

fn vec_json(v: Vec2) -> Value {
    json!([v.x, v.y])
}

fn presentation_json(g: &GridPresentation) -> Value {
    let a = g.alphabet();
    let mut regions = Vec::new();
    for ix in 0..=g.xcuts().len() {
        for iy in 0..=g.ycuts().len() {
            let rows: Vec<String> = g
                .region(ix, iy)
                .rows()
                .iter()
                .map(|r| r.iter().map(|&s| a.token(s)).collect::<Vec<_>>().join(" "))
                .collect();
            regions.push(json!({"ix": ix, "iy": iy, "rows": rows}));
        }
    }
    json!({"xcuts": g.xcuts(), "ycuts": g.ycuts(), "regions": regions})
}

fn lattice_json(g: &GridPresentation) -> Value {
    let l = g.period_lattice();
    json!({"rank": l.rank(), "generators": l.generators().iter().map(|&v| vec_json(v)).collect::<Vec<_>>()})
}

fn family(tiles: &PathBuf, dir: &PathBuf, window: usize) -> Result<TilingFamily> {
    let ts = load_tileset(tiles)?;
    let members = load_family_dir(dir, ts.alphabet())?;
    TilingFamily::new(&ts, members, window)
}

/// Output text and whether the queried property held.
fn run(cmd: Cmd) -> Result<(String, bool)> {
    let out = match cmd {
        Cmd::Patterns { tiles, size, margin, count } => {
            let ts = load_tileset(tiles)?;
            let a = ts.alphabet();
            if count && margin.is_none() {
                return Ok((count_admissible(&ts, size)?.to_string(), true));
            }
            let set = match margin {
                Some(m) => extensible_squares(&ts, size, m)?,
                None => admissible_squares(&ts, size)?,
            };
            if count {
                return Ok((set.len().to_string(), true));
            }
            let pats: Vec<Value> = set.iter().map(|p| pattern_json(p, a)).collect();
            json!({"size": size, "margin": margin.unwrap_or(0), "count": pats.len(), "patterns": pats})
        }
        Cmd::Torus { tiles, max_p, max_q } => {
            let ts = load_tileset(tiles)?;
            let found = enumerate_torus(&ts, max_p, max_q)?;
            let list: Vec<Value> = found.iter().map(|t| torus_json(t, ts.alphabet())).collect();
            json!({"count": list.len(), "tilings": list})
        }
        Cmd::Classify { tiles, budget } => {
            let ts = load_tileset(tiles)?;
            match classify(&ts, budget)? {
                ClassifyOutcome::Empty(n) => json!({"outcome": "empty", "size": n}),
                ClassifyOutcome::PeriodicFound(t) => {
                    json!({"outcome": "periodic", "torus": torus_json(&t, ts.alphabet())})
                }
                ClassifyOutcome::Unknown(n) => json!({"outcome": "unknown", "budget": n}),
            }
        }
        Cmd::WeakPeriodic { tiles, max_period } => {
            let ts = load_tileset(tiles)?;
            match find_weak_witness(&ts, max_period)? {
                Some(w) => {
                    let g = &w.presentation;
                    let v = json!({
                        "found": true,
                        "height": w.height,
                        "transposed": w.transposed,
                        "lattice": lattice_json(g),
                        "presentation": presentation_json(g),
                    });
                    return Ok((v.to_string(), true));
                }
                None => return Ok((json!({"found": false}).to_string(), false)),
            }
        }
        Cmd::Validate { tiles, pres } => {
            let ts = load_tileset(tiles)?;
            let g = load_presentation(pres, ts.alphabet())?;
            let ok = g.is_valid(&ts)?;
            return Ok((json!({"valid": ok}).to_string(), ok));
        }
        Cmd::Analyze { tiles, pres } => {
            let ts = load_tileset(tiles)?;
            let g = load_presentation(pres, ts.alphabet())?;
            let (kind, witness) = match g.type_of() {
                TilingType::TypeA => ("a", Value::Null),
                TilingType::TypeB(p) => ("b", pattern_json(&p, ts.alphabet())),
            };
            json!({
                "valid": g.is_valid(&ts)?,
                "type": kind,
                "witness": witness,
                "lattice": lattice_json(&g),
            })
        }
        Cmd::Order { tiles, family: dir, window, dot } => {
            let f = family(&tiles, &dir, window)?;
            let h = hasse(&f);
            if let Some(path) = dot {
                fs::write(path, h.to_dot())?;
            }
            let classes: Vec<Value> = (0..h.class_count())
                .map(|c| json!({"name": h.label(c), "members": h.members(c), "level": h.level(c)}))
                .collect();
            let edges: Vec<Value> = h.edges().iter().map(|&(a, b)| json!([h.label(a), h.label(b)])).collect();
            let names = |cs: Vec<usize>| cs.into_iter().map(|c| h.label(c).to_string()).collect::<Vec<_>>();
            json!({
                "window": window,
                "classes": classes,
                "edges": edges,
                "minimal": names(h.minimal()),
                "maximal": names(h.maximal()),
                "height": h.height(),
            })
        }
        Cmd::Cb { tiles, family: dir, window } => {
            let f = family(&tiles, &dir, window)?;
            let r = ranks(&f);
            let per: serde_json::Map<String, Value> =
                r.ranks.iter().map(|(n, k)| (n.clone(), json!(k))).collect();
            json!({
                "window": window,
                "ranks": per,
                "family_rank": r.family_rank,
                "residue": r.residue,
            })
        }
    };
    Ok((out.to_string(), true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok((text, ok)) => {
            println!("{text}");
            ExitCode::from(if ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
