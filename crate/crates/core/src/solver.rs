//! Bounded searches: periodic tilings, refutation, classification and
//! weakly periodic witnesses.

use std::collections::VecDeque;

use crate::csp::Grid;
use crate::error::{usage, Result};
use crate::lang::{build_transfer_graph, TransferGraph};
use crate::presentation::{Block, GridPresentation};
use crate::tiles::{State, TileSet, TorusTiling};

/// Simple cycles collected per transfer graph before giving up on the rest.
const MAX_CYCLES: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifyOutcome {
    /// No admissible square of this size: the tile-set tiles nothing.
    Empty(usize),
    PeriodicFound(TorusTiling),
    Unknown(usize),
}

fn torus_grid(ts: &TileSet, p: usize, q: usize) -> Grid<'_> {
    Grid::new(ts, p, q, true, true)
}

fn to_torus(grid: &Grid, p: usize, q: usize, states: &[State]) -> TorusTiling {
    let mut data = Vec::with_capacity(p * q);
    for y in 0..q {
        for x in 0..p {
            data.push(states[grid.index(x, y)]);
        }
    }
    TorusTiling::new(p, q, data).expect("dimensions match")
}

fn is_orbit_representative(t: &TorusTiling) -> bool {
    (0..t.q() as i64).all(|dy| (0..t.p() as i64).all(|dx| *t <= t.shifted(dx, dy)))
}

/// Valid torus tilings up to `max_p`×`max_q`, one per translation class, and
/// only at their least rectangular periods.
pub fn enumerate_torus(ts: &TileSet, max_p: usize, max_q: usize) -> Result<Vec<TorusTiling>> {
    if max_p == 0 || max_q == 0 {
        return usage("torus bounds must be at least 1");
    }
    let mut out = Vec::new();
    for p in 1..=max_p {
        for q in 1..=max_q {
            let grid = torus_grid(ts, p, q);
            for s in grid.all() {
                let t = to_torus(&grid, p, q, &s);
                if t.axis_periods() == (p, q) && is_orbit_representative(&t) {
                    out.push(t);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// True when no `n`×`n` square is admissible, which rules out any tiling.
pub fn refute(ts: &TileSet, n: usize) -> Result<bool> {
    if n == 0 {
        return usage("square size must be at least 1");
    }
    let grid = Grid::new(ts, n, n, false, false);
    Ok(grid.first(&vec![None; grid.len()]).is_none())
}

/// Semi-decision within `budget`: the least refuting square size, else the
/// first torus with both periods at most `budget` (by width, then height,
/// then pattern order).
pub fn classify(ts: &TileSet, budget: usize) -> Result<ClassifyOutcome> {
    if budget == 0 {
        return usage("budget must be at least 1");
    }
    if refute(ts, budget)? {
        for n in 1..=budget {
            if refute(ts, n)? {
                return Ok(ClassifyOutcome::Empty(n));
            }
        }
    }
    for p in 1..=budget {
        for q in 1..=budget {
            let grid = torus_grid(ts, p, q);
            if let Some(s) = grid.first(&vec![None; grid.len()]) {
                return Ok(ClassifyOutcome::PeriodicFound(to_torus(&grid, p, q, &s)));
            }
        }
    }
    Ok(ClassifyOutcome::Unknown(budget))
}

/// A configuration periodic along exactly one direction, with the data it
/// was assembled from. Columns are listed bottom to top in the orientation
/// of the search; `transposed` says the search ran on the transposed
/// tile-set.
#[derive(Clone, Debug)]
pub struct WeakWitness {
    pub presentation: GridPresentation,
    pub height: usize,
    pub transposed: bool,
    pub left_cycle: Vec<Vec<State>>,
    pub right_cycle: Vec<Vec<State>>,
    pub bridge: Vec<Vec<State>>,
}

/// Simple cycles, each starting at its least vertex, sorted by length and
/// then by vertex sequence.
pub(crate) fn simple_cycles(g: &TransferGraph, cap: usize) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    for s in 0..n {
        let mut path = vec![s];
        on_path[s] = true;
        // explicit stack of successor cursors
        let mut cursors = vec![0usize];
        while let Some(&u) = path.last() {
            let top = cursors.len() - 1;
            let succ = g.successors(u);
            if cursors[top] < succ.len() {
                let v = succ[cursors[top]];
                cursors[top] += 1;
                if v == s {
                    out.push(path.clone());
                    if out.len() >= cap {
                        break;
                    }
                } else if v > s && !on_path[v] {
                    on_path[v] = true;
                    path.push(v);
                    cursors.push(0);
                }
            } else {
                on_path[u] = false;
                path.pop();
                cursors.pop();
            }
        }
        path.iter().for_each(|&v| on_path[v] = false);
        if out.len() >= cap {
            break;
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn columns(g: &TransferGraph, cycle: &[usize]) -> Vec<Vec<State>> {
    cycle.iter().map(|&v| g.column(v, 0).to_vec()).collect()
}

/// Whether the two periodic strips agree after some horizontal shift and
/// some vertical rotation.
pub fn rotation_equivalent(a: &[Vec<State>], b: &[Vec<State>]) -> bool {
    let (la, lb) = (a.len(), b.len());
    let q = a[0].len();
    let period = la / crate::presentation::gcd(la as i64, lb as i64) as usize * lb;
    (0..q).any(|r| {
        (0..lb).any(|off| {
            (0..period).all(|i| {
                let ca = &a[i % la];
                let cb = &b[(i + off) % lb];
                (0..q).all(|y| ca[(y + r) % q] == cb[y])
            })
        })
    })
}

/// Shortest path from any vertex of `from` to any vertex of `to`, sources
/// taken in ascending order.
fn bridge(g: &TransferGraph, from: &[usize], to: &[usize]) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut prev = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    let mut sources = from.to_vec();
    sources.sort_unstable();
    for &s in &sources {
        seen[s] = true;
        queue.push_back(s);
    }
    let target = |v: usize| to.contains(&v);
    while let Some(u) = queue.pop_front() {
        if target(u) {
            let mut path = vec![u];
            let mut cur = u;
            while prev[cur] != usize::MAX {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &v in g.successors(u) {
            if !seen[v] {
                seen[v] = true;
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    None
}

fn column_block(cols: &[Vec<State>], height: usize, start: i64) -> Block {
    // block column j holds the strip column at any x with x ≡ j (mod len),
    // where strip column x is cols[(x - start) mod len]
    let len = cols.len() as i64;
    let mut data = Vec::with_capacity(cols.len() * height);
    for y in 0..height {
        for j in 0..len {
            data.push(cols[(j - start).rem_euclid(len) as usize][y]);
        }
    }
    Block::new(cols.len(), height, data).expect("dimensions match")
}

fn assemble(
    ts: &TileSet,
    g: &TransferGraph,
    left: &[usize],
    right: &[usize],
    path: &[usize],
) -> GridPresentation {
    let q = g.height();
    let m = path.len() as i64 - 1;
    let a = path[0];
    let b = *path.last().expect("nonempty path");
    let ia = left.iter().position(|&v| v == a).expect("path starts on the left cycle");
    let ib = right.iter().position(|&v| v == b).expect("path ends on the right cycle");
    // strip column at x = 0 is vertex a, at x = m vertex b
    let rot = |c: &[usize], i: usize| -> Vec<Vec<State>> {
        let mut v = columns(g, c);
        v.rotate_left(i);
        v
    };
    let left_cols = rot(left, ia);
    let right_cols = rot(right, ib);
    let (xcuts, mut bands) = if m == 0 {
        (vec![0], vec![column_block(&left_cols, q, 0)])
    } else {
        ((1..=m).collect(), vec![column_block(&left_cols, q, 0)])
    };
    for &v in &path[1..path.len().saturating_sub(1)] {
        bands.push(column_block(&[g.column(v, 0).to_vec()], q, 0));
    }
    bands.push(column_block(&right_cols, q, m));
    let regions = bands.into_iter().map(|b| vec![b]).collect();
    GridPresentation::new(ts.alphabet().clone(), xcuts, vec![], regions).expect("well-formed witness")
}

fn witness_in(ts: &TileSet, g: &TransferGraph) -> Option<(GridPresentation, Vec<usize>, Vec<usize>, Vec<usize>)> {
    let cycles = simple_cycles(g, MAX_CYCLES);
    let cols: Vec<Vec<Vec<State>>> = cycles.iter().map(|c| columns(g, c)).collect();
    for (i, c1) in cycles.iter().enumerate() {
        for (j, c2) in cycles.iter().enumerate() {
            if i == j || rotation_equivalent(&cols[i], &cols[j]) {
                continue;
            }
            if let Some(path) = bridge(g, c1, c2) {
                let pres = assemble(ts, g, c1, c2, &path);
                return Some((pres, c1.clone(), c2.clone(), path));
            }
        }
    }
    None
}

/// Searches strips of height up to `max_q`, vertical first then horizontal
/// for each height, for two rotation-inequivalent cycles of the transfer
/// graph joined by a path. The result repeats one cycle on the left and
/// the other on the right, so its only periods are along the strip's
/// cyclic direction.
pub fn find_weak_witness(ts: &TileSet, max_q: usize) -> Result<Option<WeakWitness>> {
    if max_q == 0 {
        return usage("height bound must be at least 1");
    }
    let transposed_ts = ts.transpose();
    for q in 1..=max_q {
        for transposed in [false, true] {
            let search_ts = if transposed { &transposed_ts } else { ts };
            let g = build_transfer_graph(search_ts, q, true)?;
            let Some((pres, c1, c2, path)) = witness_in(search_ts, &g) else {
                continue;
            };
            let presentation = if transposed { pres.transpose() } else { pres };
            if !presentation.is_valid(ts)? || presentation.period_lattice().rank() != 1 {
                continue;
            }
            let bridge_cols = path[1..path.len().saturating_sub(1)]
                .iter()
                .map(|&v| g.column(v, 0).to_vec())
                .collect();
            return Ok(Some(WeakWitness {
                presentation,
                height: q,
                transposed,
                left_cycle: columns(&g, &c1),
                right_cycle: columns(&g, &c2),
                bridge: bridge_cols,
            }));
        }
    }
    Ok(None)
}

pub fn weak_periodic_witness(ts: &TileSet, max_q: usize) -> Result<Option<GridPresentation>> {
    Ok(find_weak_witness(ts, max_q)?.map(|w| w.presentation))
}
