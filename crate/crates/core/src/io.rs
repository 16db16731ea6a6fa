//! Text formats for tile-sets and presentations.
//!
//! Tile-set files:
//!
//! ```text
//! # comment
//! alphabet R G W B
//! mode allowed
//! hpair R G          # (0,0)=R, (1,0)=G
//! vpair G W          # (0,1)=G, (0,0)=W
//! pattern
//! cell 0 0 R
//! cell 1 1 G
//! end
//! ```
//!
//! Presentation files list cuts and one block per region, rows top to
//! bottom:
//!
//! ```text
//! presentation
//! xcuts 0
//! ycuts
//! region 0 0 1 1
//! R
//! region 1 0 1 1
//! G
//! ```

use std::collections::BTreeMap;
use std::fmt::Write;
use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::presentation::{Block, GridPresentation};
use crate::tiles::{Alphabet, Mode, Pattern, State, TileSet, Vec2};

fn perr<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

/// Non-empty lines with comments stripped, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("");
        let words: Vec<&str> = l.split_whitespace().collect();
        (!words.is_empty()).then_some((i + 1, words))
    })
}

fn state(alphabet: &Alphabet, tok: &str, line: usize) -> Result<State> {
    match alphabet.state(tok) {
        Some(s) => Ok(s),
        None => perr(line, format!("unknown state {tok:?}")),
    }
}

fn int(tok: &str, line: usize) -> Result<i64> {
    tok.parse().or_else(|_| perr(line, format!("expected an integer, got {tok:?}")))
}

fn at_line<T>(r: Result<T>, line: usize) -> Result<T> {
    r.map_err(|e| match e {
        Error::Usage(msg) => Error::Parse { line, msg },
        e => e,
    })
}

pub fn parse_tileset(text: &str) -> Result<TileSet> {
    let mut builder = None;
    let mut mode = Mode::Allowed;
    let mut open: Option<(usize, Vec<(Vec2, State)>)> = None;
    let mut last_line = 0;
    for (n, words) in lines(text) {
        last_line = n;
        let directive = words[0];
        if let Some((_, cells)) = open.as_mut() {
            let b: &mut crate::tiles::TileSetBuilder = builder.as_mut().expect("checked at pattern");
            match directive {
                "cell" if words.len() == 4 => {
                    let s = state(b.alphabet(), words[3], n)?;
                    cells.push((Vec2::new(int(words[1], n)?, int(words[2], n)?), s));
                }
                "cell" => return perr(n, "cell takes dx dy state"),
                "end" if words.len() == 1 => {
                    let (_, cells) = open.take().unwrap();
                    let p = at_line(Pattern::new(cells), n)?;
                    at_line(b.add(mode, &p).map(|_| ()), n)?;
                }
                _ => return perr(n, format!("unexpected {directive:?} inside pattern")),
            }
            continue;
        }
        if directive == "alphabet" {
            if builder.is_some() {
                return perr(n, "alphabet declared twice");
            }
            let a = at_line(Alphabet::new(words[1..].iter().copied()), n)?;
            builder = Some(TileSet::builder(a));
            continue;
        }
        let Some(b) = builder.as_mut() else {
            return perr(n, "alphabet must come first");
        };
        match (directive, words.len()) {
            ("mode", 2) => {
                mode = match words[1] {
                    "allowed" => Mode::Allowed,
                    "forbidden" => Mode::Forbidden,
                    m => return perr(n, format!("unknown mode {m:?}")),
                }
            }
            ("hpair", 3) | ("vpair", 3) => {
                let first = state(b.alphabet(), words[1], n)?;
                let second = state(b.alphabet(), words[2], n)?;
                let cells = if directive == "hpair" {
                    [(Vec2::new(0, 0), first), (Vec2::new(1, 0), second)]
                } else {
                    [(Vec2::new(0, 1), first), (Vec2::new(0, 0), second)]
                };
                let p = Pattern::new(cells)?;
                at_line(b.add(mode, &p).map(|_| ()), n)?;
            }
            ("pattern", 1) => open = Some((n, Vec::new())),
            ("shape", _) => {
                // `shape dx dy dx dy …` declares a domain with no patterns yet.
                if words.len() < 3 || words.len() % 2 == 0 {
                    return perr(n, "shape takes pairs of coordinates");
                }
                let coords: Vec<i64> = words[1..].iter().map(|w| int(w, n)).collect::<Result<_>>()?;
                let domain: Vec<Vec2> = coords.chunks(2).map(|c| Vec2::new(c[0], c[1])).collect();
                at_line(b.declare(mode, &domain).map(|_| ()), n)?;
            }
            (d, _) => return perr(n, format!("unknown or malformed directive {d:?}")),
        }
    }
    if let Some((start, _)) = open {
        return perr(start, "pattern without end");
    }
    match builder {
        Some(b) => at_line(b.build(), last_line),
        None => perr(last_line.max(1), "missing alphabet"),
    }
}

pub fn emit_tileset(ts: &TileSet) -> String {
    let a = ts.alphabet();
    let mut out = format!("alphabet {}\n", a.tokens().join(" "));
    let mut mode = Mode::Allowed;
    for shape in ts.shapes() {
        let (want, patterns) = if shape.allowed_count() == 0 {
            (Mode::Forbidden, shape.forbidden_patterns())
        } else {
            (Mode::Allowed, shape.allowed_patterns())
        };
        if want != mode {
            out.push_str(match want {
                Mode::Allowed => "mode allowed\n",
                Mode::Forbidden => "mode forbidden\n",
            });
            mode = want;
        }
        for p in patterns {
            if shape.is_hpair() {
                let _ = writeln!(
                    out,
                    "hpair {} {}",
                    a.token(p.get(Vec2::new(0, 0)).unwrap()),
                    a.token(p.get(Vec2::new(1, 0)).unwrap())
                );
            } else if shape.is_vpair() {
                let _ = writeln!(
                    out,
                    "vpair {} {}",
                    a.token(p.get(Vec2::new(0, 1)).unwrap()),
                    a.token(p.get(Vec2::new(0, 0)).unwrap())
                );
            } else {
                out.push_str("pattern\n");
                for &(v, s) in p.cells() {
                    let _ = writeln!(out, "cell {} {} {}", v.x, v.y, a.token(s));
                }
                out.push_str("end\n");
            }
        }
    }
    out
}

/// Parses a presentation over `alphabet`. An `alphabet` directive in the
/// file, if present, must list the same tokens.
pub fn parse_presentation(text: &str, alphabet: &Alphabet) -> Result<GridPresentation> {
    let mut it = lines(text).peekable();
    let mut header = false;
    let mut xcuts: Option<Vec<i64>> = None;
    let mut ycuts: Option<Vec<i64>> = None;
    let mut blocks: BTreeMap<(usize, usize), (usize, Block)> = BTreeMap::new();
    let mut last_line = 1;
    while let Some((n, words)) = it.next() {
        last_line = n;
        match words[0] {
            "presentation" if words.len() == 1 => {
                if header {
                    return perr(n, "presentation declared twice");
                }
                header = true;
            }
            "alphabet" => {
                if words[1..] != alphabet.tokens().iter().map(String::as_str).collect::<Vec<_>>()[..] {
                    return perr(n, "alphabet differs from the tile-set");
                }
            }
            "xcuts" | "ycuts" => {
                let cuts: Vec<i64> = words[1..].iter().map(|w| int(w, n)).collect::<Result<_>>()?;
                if cuts.windows(2).any(|w| w[0] >= w[1]) {
                    return perr(n, "cuts must be strictly increasing");
                }
                let slot = if words[0] == "xcuts" { &mut xcuts } else { &mut ycuts };
                if slot.replace(cuts).is_some() {
                    return perr(n, format!("{} declared twice", words[0]));
                }
            }
            "region" if words.len() == 5 => {
                let f: Vec<i64> = words[1..].iter().map(|w| int(w, n)).collect::<Result<_>>()?;
                if f.iter().any(|&v| v < 0) || f[2] == 0 || f[3] == 0 {
                    return perr(n, "region indices must be non-negative and periods positive");
                }
                let (ix, iy, u, v) = (f[0] as usize, f[1] as usize, f[2] as usize, f[3] as usize);
                let mut rows = Vec::with_capacity(v);
                for _ in 0..v {
                    let Some((m, row)) = it.next() else {
                        return perr(n, "region ends before all rows were given");
                    };
                    last_line = m;
                    if row.len() != u {
                        return perr(m, format!("expected {u} states, got {}", row.len()));
                    }
                    rows.push(row.iter().map(|t| state(alphabet, t, m)).collect::<Result<Vec<_>>>()?);
                }
                let block = at_line(Block::from_rows(&rows), n)?;
                if blocks.insert((ix, iy), (n, block)).is_some() {
                    return perr(n, format!("region {ix} {iy} defined twice"));
                }
            }
            d => return perr(n, format!("unknown or malformed directive {d:?}")),
        }
    }
    if !header {
        return perr(1, "missing presentation header");
    }
    let xcuts = xcuts.unwrap_or_default();
    let ycuts = ycuts.unwrap_or_default();
    for (&(ix, iy), &(n, _)) in &blocks {
        if ix > xcuts.len() || iy > ycuts.len() {
            return perr(n, format!("region {ix} {iy} out of range"));
        }
    }
    let mut regions = Vec::with_capacity(xcuts.len() + 1);
    for ix in 0..=xcuts.len() {
        let mut col = Vec::with_capacity(ycuts.len() + 1);
        for iy in 0..=ycuts.len() {
            match blocks.remove(&(ix, iy)) {
                Some((_, b)) => col.push(b),
                None => return perr(last_line, format!("region {ix} {iy} missing")),
            }
        }
        regions.push(col);
    }
    at_line(GridPresentation::new(alphabet.clone(), xcuts, ycuts, regions), last_line)
}

fn join(v: &[i64]) -> String {
    v.iter().map(|c| format!(" {c}")).collect()
}

pub fn emit_presentation(g: &GridPresentation) -> String {
    let a = g.alphabet();
    let mut out = String::from("presentation\n");
    let _ = writeln!(out, "xcuts{}", join(g.xcuts()));
    let _ = writeln!(out, "ycuts{}", join(g.ycuts()));
    for ix in 0..=g.xcuts().len() {
        for iy in 0..=g.ycuts().len() {
            let b = g.region(ix, iy);
            let _ = writeln!(out, "region {ix} {iy} {} {}", b.u(), b.v());
            for row in b.rows() {
                let toks: Vec<&str> = row.iter().map(|&s| a.token(s)).collect();
                let _ = writeln!(out, "{}", toks.join(" "));
            }
        }
    }
    out
}

pub fn load_tileset(path: impl AsRef<Path>) -> Result<TileSet> {
    parse_tileset(&fs::read_to_string(path)?)
}

pub fn load_presentation(path: impl AsRef<Path>, alphabet: &Alphabet) -> Result<GridPresentation> {
    parse_presentation(&fs::read_to_string(path)?, alphabet)
}

/// Every `*.pres` file in `dir`, sorted by file name and named by its stem.
pub fn load_family_dir(dir: impl AsRef<Path>, alphabet: &Alphabet) -> Result<Vec<(String, GridPresentation)>> {
    let mut paths: Vec<_> = fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    paths.retain(|p| p.extension().is_some_and(|e| e == "pres"));
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            let g = load_presentation(&p, alphabet).map_err(|e| match e {
                Error::Parse { line, msg } => Error::Parse {
                    line,
                    msg: format!("{}: {msg}", p.display()),
                },
                e => e,
            })?;
            Ok((name, g))
        })
        .collect()
}

/// A pattern as rows of tokens, top to bottom, `.` for holes.
pub fn pattern_json(p: &Pattern, a: &Alphabet) -> serde_json::Value {
    serde_json::Value::from(p.render_rows(a))
}
