//! Brute-force reference implementations, written against the plain
//! definitions and sharing as little code with the library as possible.
//! Each one enumerates everything and is only fit for tiny inputs.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use tilings::presentation::GridPresentation;
use tilings::tiles::{Pattern, State, TileSet, Vec2};

/// Forbidden patterns of every shape, normalized, as plain cell lists.
pub fn forbidden(ts: &TileSet) -> Vec<Vec<(i64, i64, State)>> {
    ts.to_forbidden()
        .into_iter()
        .flatten()
        .map(|p| p.cells().iter().map(|&(v, s)| (v.x, v.y, s)).collect())
        .collect()
}

/// Whether a `w`×`h` array (indexed `[y][x]`, y upward) contains a forbidden
/// pattern, with optional wrap-around in both directions.
pub fn clean(forb: &[Vec<(i64, i64, State)>], grid: &[Vec<State>], wrap: bool) -> bool {
    let h = grid.len() as i64;
    let w = grid[0].len() as i64;
    for f in forb {
        let fw = f.iter().map(|c| c.0).max().unwrap() + 1;
        let fh = f.iter().map(|c| c.1).max().unwrap() + 1;
        let (xs, ys) = if wrap { (w, h) } else { (w - fw + 1, h - fh + 1) };
        for oy in 0..ys.max(0) {
            for ox in 0..xs.max(0) {
                let hit = f.iter().all(|&(dx, dy, s)| {
                    let x = (ox + dx).rem_euclid(w) as usize;
                    let y = (oy + dy).rem_euclid(h) as usize;
                    grid[y][x] == s
                });
                if hit {
                    return false;
                }
            }
        }
    }
    true
}

/// Every `w`×`h` array over `k` states.
pub fn all_grids(k: usize, w: usize, h: usize) -> impl Iterator<Item = Vec<Vec<State>>> {
    let cells = w * h;
    let total = k.pow(cells as u32);
    (0..total).map(move |mut code| {
        let mut g = vec![vec![0 as State; w]; h];
        for i in 0..cells {
            g[i / w][i % w] = (code % k) as State;
            code /= k;
        }
        g
    })
}

pub fn admissible_count(ts: &TileSet, n: usize) -> usize {
    let forb = forbidden(ts);
    all_grids(ts.alphabet().len(), n, n).filter(|g| clean(&forb, g, false)).count()
}

pub fn torus_count(ts: &TileSet, p: usize, q: usize) -> u128 {
    let forb = forbidden(ts);
    all_grids(ts.alphabet().len(), p, q).filter(|g| clean(&forb, g, true)).count() as u128
}

fn shifted(g: &[Vec<State>], dx: usize, dy: usize) -> Vec<Vec<State>> {
    let h = g.len();
    let w = g[0].len();
    (0..h).map(|y| (0..w).map(|x| g[(y + dy) % h][(x + dx) % w]).collect()).collect()
}

/// Least translate of a torus array, comparing rows bottom first.
pub fn canonical(g: &[Vec<State>]) -> Vec<Vec<State>> {
    let (h, w) = (g.len(), g[0].len());
    (0..h)
        .flat_map(|dy| (0..w).map(move |dx| (dx, dy)))
        .map(|(dx, dy)| shifted(g, dx, dy))
        .min()
        .unwrap()
}

/// Valid tori up to `max_p`×`max_q` up to translation, each at its least
/// axis periods, as canonical row arrays keyed by `(p, q)`.
pub fn torus_classes(ts: &TileSet, max_p: usize, max_q: usize) -> BTreeSet<(usize, usize, Vec<Vec<State>>)> {
    let forb = forbidden(ts);
    let mut out = BTreeSet::new();
    for q in 1..=max_q {
        for p in 1..=max_p {
            for g in all_grids(ts.alphabet().len(), p, q) {
                if !clean(&forb, &g, true) {
                    continue;
                }
                let least_p = (1..=p).find(|&d| p % d == 0 && shifted(&g, d, 0) == g).unwrap();
                let least_q = (1..=q).find(|&d| q % d == 0 && shifted(&g, 0, d) == g).unwrap();
                if (least_p, least_q) != (p, q) {
                    continue;
                }
                out.insert((p, q, canonical(&g)));
            }
        }
    }
    out
}

/// Half-width of the box scanned by the presentation oracles.
pub const BOX: i64 = 20;

pub fn window(g: &GridPresentation, x0: i64, y0: i64, w: usize, h: usize) -> Vec<Vec<State>> {
    (0..h as i64)
        .map(|dy| (0..w as i64).map(|dx| g.cell_at(Vec2::new(x0 + dx, y0 + dy))).collect())
        .collect()
}

/// `w`×`h` windows of `g` with corners in the box, as raw arrays.
pub fn windows(g: &GridPresentation, w: usize, h: usize) -> BTreeSet<Vec<Vec<State>>> {
    let mut out = BTreeSet::new();
    for y in -BOX..=BOX {
        for x in -BOX..=BOX {
            out.insert(window(g, x, y, w, h));
        }
    }
    out
}

pub fn preceq(x: &GridPresentation, y: &GridPresentation, n: usize) -> bool {
    windows(x, n, n).is_subset(&windows(y, n, n))
}

/// Library patterns converted to the oracle's raw arrays.
pub fn raw(p: &Pattern) -> Vec<Vec<State>> {
    let (lo, hi) = p.bounds();
    (lo.y..=hi.y)
        .map(|y| (lo.x..=hi.x).map(|x| p.get(Vec2::new(x, y)).expect("rectangular")).collect())
        .collect()
}

/// Translations `v` with `|v| <= r` under which the box contents agree.
pub fn periods(g: &GridPresentation, r: i64) -> Vec<Vec2> {
    let mut out = Vec::new();
    for vy in -r..=r {
        for vx in -r..=r {
            if (vx, vy) == (0, 0) {
                continue;
            }
            let same = (-20..=20).all(|y| {
                (-20..=20).all(|x| g.cell_at(Vec2::new(x, y)) == g.cell_at(Vec2::new(x + vx, y + vy)))
            });
            if same {
                out.push(Vec2::new(vx, vy));
            }
        }
    }
    out
}

/// Whether the configurations seen from `a` and from `b` agree on a box.
fn same_view(g: &GridPresentation, a: Vec2, b: Vec2) -> bool {
    const R: i64 = 16;
    (-R..=R).all(|y| {
        (-R..=R).all(|x| g.cell_at(Vec2::new(a.x + x, a.y + y)) == g.cell_at(Vec2::new(b.x + x, b.y + y)))
    })
}

/// Members of `family` (restricted to `alive`) isolated by some rectangle of
/// size at most `n`×`n`: the rectangle occurs in no member with a different
/// window set, and every occurrence sees the same configuration.
pub fn isolated(family: &[(String, GridPresentation)], alive: &[bool], n: usize) -> Vec<bool> {
    isolated_cached(family, alive, n, &mut BTreeMap::new())
}

type Cache = BTreeMap<(usize, usize, usize), BTreeSet<Vec<Vec<State>>>>;

fn isolated_cached(family: &[(String, GridPresentation)], alive: &[bool], n: usize, rect: &mut Cache) -> Vec<bool> {
    let sets: Vec<BTreeSet<Vec<Vec<State>>>> = family.iter().map(|(_, g)| windows(g, n, n)).collect();
    let mut out = vec![false; family.len()];
    for x in 0..family.len() {
        if !alive[x] {
            continue;
        }
        let others: Vec<usize> = (0..family.len()).filter(|&j| alive[j] && sets[j] != sets[x]).collect();
        'sizes: for w in 1..=n {
            for h in 1..=n {
                for j in others.iter().copied().chain([x]) {
                    rect.entry((j, w, h)).or_insert_with(|| windows(&family[j].1, w, h));
                }
                for p in &rect[&(x, w, h)] {
                    if others.iter().any(|j| rect[&(*j, w, h)].contains(p)) {
                        continue;
                    }
                    let g = &family[x].1;
                    let hits: Vec<Vec2> = (-BOX..=BOX)
                        .flat_map(|y| (-BOX..=BOX).map(move |x| Vec2::new(x, y)))
                        .filter(|t| window(g, t.x, t.y, w, h) == *p)
                        .collect();
                    if hits.iter().all(|&t| same_view(g, hits[0], t)) {
                        out[x] = true;
                        break 'sizes;
                    }
                }
            }
        }
    }
    out
}

/// Rank table by repeated brute-force isolation.
pub fn ranks(family: &[(String, GridPresentation)], n: usize) -> Vec<Option<usize>> {
    let mut alive = vec![true; family.len()];
    let mut rank = vec![None; family.len()];
    let mut step = 0;
    let mut cache = Cache::new();
    loop {
        let iso = isolated_cached(family, &alive, n, &mut cache);
        if !iso.iter().any(|&b| b) {
            return rank;
        }
        step += 1;
        for (i, b) in iso.into_iter().enumerate() {
            if b {
                alive[i] = false;
                rank[i] = Some(step);
            }
        }
    }
}
