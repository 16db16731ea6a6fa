//! Pattern languages of a tile-set: locally admissible squares, squares that
//! extend to larger ones, and the column transfer graph used for counting.

use std::collections::{BTreeSet, HashMap};

use crate::csp::Grid;
use crate::error::{usage, Error, Result};
use crate::tiles::{Pattern, State, TileSet};

/// The `n`×`n` patterns in which every fully contained shape window is
/// allowed, in pattern order.
pub fn admissible_squares(ts: &TileSet, n: usize) -> Result<BTreeSet<Pattern>> {
    if n == 0 {
        return usage("square size must be at least 1");
    }
    let grid = Grid::new(ts, n, n, false, false);
    Ok(grid.all().iter().map(|s| grid.to_pattern(s)).collect())
}

/// Number of admissible `n`×`n` squares, without materializing them.
pub fn count_admissible(ts: &TileSet, n: usize) -> Result<u64> {
    if n == 0 {
        return usage("square size must be at least 1");
    }
    Ok(Grid::new(ts, n, n, false, false).count())
}

/// Admissible `n`×`n` squares that sit at the center of some admissible
/// `(n+2m)`×`(n+2m)` square.
pub fn extensible_squares(ts: &TileSet, n: usize, margin: usize) -> Result<BTreeSet<Pattern>> {
    let squares = admissible_squares(ts, n)?;
    if margin == 0 {
        return Ok(squares);
    }
    let big = n + 2 * margin;
    let grid = Grid::new(ts, big, big, false, false);
    let mut out = BTreeSet::new();
    for p in squares {
        let mut fixed = vec![None; grid.len()];
        for &(v, s) in p.cells() {
            fixed[grid.index(v.x as usize + margin, v.y as usize + margin)] = Some(s);
        }
        if grid.first(&fixed).is_some() {
            out.insert(p);
        }
    }
    Ok(out)
}

/// Directed graph on admissible stacks of adjacent columns.
///
/// Each vertex is `span` columns of height `height`, where `span` is one less
/// than the widest shape (at least 1). An edge joins two vertices whose
/// columns overlap consistently and whose union violates nothing, so
/// bi-infinite walks are exactly the tilings of the horizontal strip of that
/// height (cyclic in `y` when `wrap`).
#[derive(Clone, Debug)]
pub struct TransferGraph {
    height: usize,
    wrap: bool,
    span: usize,
    // column-major, y upward: column c, row y at c * height + y
    vertices: Vec<Vec<State>>,
    adj: Vec<Vec<usize>>,
}

impl TransferGraph {
    pub fn height(&self) -> usize {
        self.height
    }

    pub fn wrap(&self) -> bool {
        self.wrap
    }

    pub fn span(&self) -> usize {
        self.span
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, v: usize) -> &[State] {
        &self.vertices[v]
    }

    /// Column `c` of vertex `v`, bottom to top.
    pub fn column(&self, v: usize, c: usize) -> &[State] {
        &self.vertices[v][c * self.height..(c + 1) * self.height]
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, succ)| succ.iter().map(move |&v| (u, v)))
    }

    /// Number of closed walks of length `len`, i.e. the trace of the
    /// adjacency matrix raised to `len`.
    pub fn closed_walks(&self, len: usize) -> Result<u128> {
        let n = self.vertices.len();
        let mut total: u128 = 0;
        let mut cur = vec![0u128; n];
        let mut next = vec![0u128; n];
        for start in 0..n {
            cur.iter_mut().for_each(|c| *c = 0);
            cur[start] = 1;
            for _ in 0..len {
                next.iter_mut().for_each(|c| *c = 0);
                for (u, &w) in cur.iter().enumerate() {
                    if w == 0 {
                        continue;
                    }
                    for &v in &self.adj[u] {
                        next[v] = next[v].checked_add(w).ok_or(Error::Overflow)?;
                    }
                }
                std::mem::swap(&mut cur, &mut next);
            }
            total = total.checked_add(cur[start]).ok_or(Error::Overflow)?;
        }
        Ok(total)
    }
}

fn reading_to_columns(grid: &Grid, w: usize, h: usize, states: &[State]) -> Vec<State> {
    let mut out = Vec::with_capacity(w * h);
    for x in 0..w {
        for y in 0..h {
            out.push(states[grid.index(x, y)]);
        }
    }
    out
}

pub fn build_transfer_graph(ts: &TileSet, height: usize, wrap: bool) -> Result<TransferGraph> {
    if height == 0 {
        return usage("strip height must be at least 1");
    }
    let span = ts.max_width().max(2) - 1;
    let vgrid = Grid::new(ts, span, height, false, wrap);
    let mut vertices: Vec<Vec<State>> = vgrid
        .all()
        .iter()
        .map(|s| reading_to_columns(&vgrid, span, height, s))
        .collect();
    vertices.sort();

    // vertices grouped by their first span-1 columns
    let overlap = (span - 1) * height;
    let mut by_prefix: HashMap<&[State], Vec<usize>> = HashMap::new();
    for (i, v) in vertices.iter().enumerate() {
        by_prefix.entry(&v[..overlap]).or_default().push(i);
    }
    let egrid = Grid::new(ts, span + 1, height, false, wrap);
    let mut merged_cols = vec![0; (span + 1) * height];
    let mut merged = vec![0; (span + 1) * height];
    let mut adj = vec![Vec::new(); vertices.len()];
    for (u, uv) in vertices.iter().enumerate() {
        let Some(cands) = by_prefix.get(&uv[height..]) else {
            continue;
        };
        merged_cols[..span * height].copy_from_slice(uv);
        for &v in cands {
            merged_cols[span * height..].copy_from_slice(&vertices[v][overlap..]);
            for x in 0..=span {
                for y in 0..height {
                    merged[egrid.index(x, y)] = merged_cols[x * height + y];
                }
            }
            if egrid.check_all(&merged) {
                adj[u].push(v);
            }
        }
    }
    Ok(TransferGraph {
        height,
        wrap,
        span,
        vertices,
        adj,
    })
}

/// Number of valid `p`×`q` torus blocks (every phase counted separately).
pub fn count_torus(ts: &TileSet, p: usize, q: usize) -> Result<u128> {
    if p == 0 {
        return usage("torus width must be at least 1");
    }
    build_transfer_graph(ts, q, true)?.closed_walks(p)
}
