//! Finite descriptions of infinite configurations.
//!
//! A [`GridPresentation`] cuts the plane with finitely many vertical lines
//! (`xcuts`) and horizontal lines (`ycuts`) and fills every resulting region
//! with a periodic [`Block`]. Blocks are anchored at the origin: cell
//! `(x, y)` of a region reads `data[x mod u][y mod v]` whatever the region's
//! position. Every window of such a configuration either sits at one of
//! finitely many positions near the cuts, or recurs with the least common
//! multiple of the block periods along an unbounded band. All the finite
//! checks below rest on that fact.

use std::collections::BTreeSet;

use crate::error::{usage, Result};
use crate::tiles::{Alphabet, Pattern, State, TileSet, Vec2};

/// A `u`×`v` periodic filling.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    u: usize,
    v: usize,
    // row-major, y upward: index y * u + x
    data: Vec<State>,
}

impl Block {
    pub fn new(u: usize, v: usize, data: Vec<State>) -> Result<Self> {
        if u == 0 || v == 0 {
            return usage("block periods must be at least 1");
        }
        if data.len() != u * v {
            return usage("block has the wrong number of cells");
        }
        Ok(Block { u, v, data })
    }

    pub fn constant(s: State) -> Self {
        Block { u: 1, v: 1, data: vec![s] }
    }

    /// Rows listed top to bottom.
    pub fn from_rows(rows: &[Vec<State>]) -> Result<Self> {
        let v = rows.len();
        let u = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != u) {
            return usage("block rows of unequal length");
        }
        let data = rows.iter().rev().flatten().copied().collect();
        Block::new(u, v, data)
    }

    pub fn u(&self) -> usize {
        self.u
    }

    pub fn v(&self) -> usize {
        self.v
    }

    #[inline]
    pub fn get(&self, x: i64, y: i64) -> State {
        let x = x.rem_euclid(self.u as i64) as usize;
        let y = y.rem_euclid(self.v as i64) as usize;
        self.data[y * self.u + x]
    }

    /// Rows top to bottom.
    pub fn rows(&self) -> Vec<Vec<State>> {
        (0..self.v as i64)
            .rev()
            .map(|y| (0..self.u as i64).map(|x| self.get(x, y)).collect())
            .collect()
    }

    fn shifted(&self, dx: i64, dy: i64) -> Block {
        let mut data = Vec::with_capacity(self.data.len());
        for y in 0..self.v as i64 {
            for x in 0..self.u as i64 {
                data.push(self.get(x + dx, y + dy));
            }
        }
        Block { u: self.u, v: self.v, data }
    }

    fn transpose(&self) -> Block {
        let mut data = Vec::with_capacity(self.data.len());
        for y in 0..self.u as i64 {
            for x in 0..self.v as i64 {
                data.push(self.get(y, x));
            }
        }
        Block { u: self.v, v: self.u, data }
    }
}

/// How often a pattern occurs in a configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Occurrences {
    Zero,
    Finite(usize),
    Infinite,
}

/// Type a: every occurring pattern occurs infinitely often. Type b: some
/// pattern occurs exactly once; the witness is such a pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TilingType {
    TypeA,
    TypeB(Pattern),
}

/// The group of translations leaving a configuration unchanged.
///
/// Generators are in Hermite form: rank 2 gives `(a, b), (0, d)` with
/// `a, d > 0` and `0 <= b < d`; rank 1 gives one vector with positive x, or
/// zero x and positive y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodLattice {
    generators: Vec<Vec2>,
}

impl PeriodLattice {
    /// Lattice spanned by arbitrary integer vectors.
    pub fn spanned_by(vectors: impl IntoIterator<Item = Vec2>) -> Self {
        let mut rows: Vec<Vec2> = vectors.into_iter().filter(|v| *v != Vec2::ZERO).collect();
        // Euclid on the x column until at most one row has nonzero x.
        let mut pivot: Option<Vec2> = None;
        loop {
            rows.retain(|v| *v != Vec2::ZERO);
            let Some(i) = rows
                .iter()
                .enumerate()
                .filter(|(_, v)| v.x != 0)
                .min_by_key(|(_, v)| v.x.abs())
                .map(|(i, _)| i)
            else {
                break;
            };
            let p = rows.swap_remove(i);
            let mut reduced = false;
            for r in rows.iter_mut() {
                if r.x != 0 {
                    let k = r.x / p.x;
                    *r = Vec2::new(r.x - k * p.x, r.y - k * p.y);
                    reduced = true;
                }
            }
            if rows.iter().all(|r| r.x == 0) {
                pivot = Some(p);
                rows.retain(|v| *v != Vec2::ZERO);
                break;
            }
            debug_assert!(reduced);
            rows.push(p);
        }
        let d = rows.iter().fold(0i64, |g, r| gcd(g, r.y.abs()));
        let generators = match (pivot, d) {
            (None, 0) => vec![],
            (None, d) => vec![Vec2::new(0, d)],
            (Some(p), 0) => {
                let p = if p.x < 0 { -p } else { p };
                vec![p]
            }
            (Some(p), d) => {
                let p = if p.x < 0 { -p } else { p };
                vec![Vec2::new(p.x, p.y.rem_euclid(d)), Vec2::new(0, d)]
            }
        };
        PeriodLattice { generators }
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Vec2] {
        &self.generators
    }

    pub fn contains(&self, v: Vec2) -> bool {
        match self.generators.as_slice() {
            [] => v == Vec2::ZERO,
            [g] => {
                if v.x * g.y - v.y * g.x != 0 {
                    return false;
                }
                if g.x != 0 {
                    v.x % g.x == 0
                } else {
                    v.y % g.y == 0
                }
            }
            [g, h] => {
                if v.x % g.x != 0 {
                    return false;
                }
                let k = v.x / g.x;
                (v.y - k * g.y) % h.y == 0
            }
            _ => unreachable!(),
        }
    }
}

pub(crate) fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a as i64, b as i64) as usize * b
}

/// Window anchor positions along one axis covering every distinct window.
///
/// With cuts, positions at least `cuts.last()` or at most
/// `cuts.first() - extent` lie in an unbounded band; the range holds two
/// full periods of each.
#[derive(Clone, Copy, Debug)]
pub(crate) struct AxisScan {
    pub lo: i64,
    pub hi: i64,
    first: Option<i64>,
    last: i64,
    extent: i64,
}

impl AxisScan {
    fn new(cuts: &[i64], extent: usize, period: usize, extra: usize) -> Self {
        let (e, p, m) = (extent as i64, period as i64, extra as i64);
        match (cuts.first(), cuts.last()) {
            (Some(&f), Some(&l)) => AxisScan {
                lo: f - e - 2 * p + 1 - m,
                hi: l + 2 * p - 1 + m,
                first: Some(f),
                last: l,
                extent: e,
            },
            _ => AxisScan {
                lo: -m,
                hi: 2 * p - 1 + m,
                first: None,
                last: 0,
                extent: e,
            },
        }
    }

    pub fn range(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }

    /// Whether the window at `t` repeats forever along this axis.
    pub fn unbounded(&self, t: i64) -> bool {
        match self.first {
            None => true,
            Some(f) => t <= f - self.extent || t >= self.last,
        }
    }
}

/// A configuration given by cut lines and periodic region fillings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridPresentation {
    alphabet: Alphabet,
    xcuts: Vec<i64>,
    ycuts: Vec<i64>,
    // index ix * (ycuts.len() + 1) + iy
    regions: Vec<Block>,
}

impl GridPresentation {
    /// `regions[ix][iy]` fills x-band `ix` and y-band `iy`; band 0 is the
    /// unbounded one on the left (resp. bottom).
    pub fn new(alphabet: Alphabet, xcuts: Vec<i64>, ycuts: Vec<i64>, regions: Vec<Vec<Block>>) -> Result<Self> {
        for cuts in [&xcuts, &ycuts] {
            if cuts.windows(2).any(|w| w[0] >= w[1]) {
                return usage("cuts must be strictly increasing");
            }
        }
        if regions.len() != xcuts.len() + 1 || regions.iter().any(|c| c.len() != ycuts.len() + 1) {
            return usage("region grid does not match the cuts");
        }
        let regions: Vec<Block> = regions.into_iter().flatten().collect();
        if let Some(s) = regions.iter().flat_map(|b| b.data.iter()).find(|&&s| !alphabet.contains(s)) {
            return usage(format!("state index {s} outside the alphabet"));
        }
        Ok(GridPresentation {
            alphabet,
            xcuts,
            ycuts,
            regions,
        })
    }

    pub fn constant(alphabet: Alphabet, s: State) -> Result<Self> {
        GridPresentation::new(alphabet, vec![], vec![], vec![vec![Block::constant(s)]])
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn xcuts(&self) -> &[i64] {
        &self.xcuts
    }

    pub fn ycuts(&self) -> &[i64] {
        &self.ycuts
    }

    pub fn region(&self, ix: usize, iy: usize) -> &Block {
        &self.regions[ix * (self.ycuts.len() + 1) + iy]
    }

    /// Least common multiple of the horizontal block periods.
    pub fn h_period(&self) -> usize {
        self.regions.iter().fold(1, |acc, b| lcm(acc, b.u))
    }

    /// Least common multiple of the vertical block periods.
    pub fn v_period(&self) -> usize {
        self.regions.iter().fold(1, |acc, b| lcm(acc, b.v))
    }

    fn span(cuts: &[i64]) -> usize {
        match (cuts.first(), cuts.last()) {
            (Some(f), Some(l)) => (l - f) as usize,
            _ => 0,
        }
    }

    #[inline]
    pub fn cell_at(&self, pos: Vec2) -> State {
        let ix = self.xcuts.partition_point(|&c| c <= pos.x);
        let iy = self.ycuts.partition_point(|&c| c <= pos.y);
        self.region(ix, iy).get(pos.x, pos.y)
    }

    /// The `w`×`h` window whose lower-left cell is `corner`, normalized.
    pub fn window(&self, corner: Vec2, w: usize, h: usize) -> Pattern {
        Pattern::rect(w, h, |x, y| self.cell_at(corner + Vec2::new(x, y)))
    }

    pub fn window_at(&self, corner: Vec2, n: usize) -> Result<Pattern> {
        if n == 0 {
            return usage("window size must be at least 1");
        }
        Ok(self.window(corner, n, n))
    }

    pub(crate) fn scans(&self, w: usize, h: usize, extra: usize) -> (AxisScan, AxisScan) {
        (
            AxisScan::new(&self.xcuts, w, self.h_period(), extra),
            AxisScan::new(&self.ycuts, h, self.v_period(), extra),
        )
    }

    /// All `w`×`h` windows occurring anywhere.
    pub fn rect_windows(&self, w: usize, h: usize) -> BTreeSet<Pattern> {
        self.rect_windows_with_margin(w, h, 0)
    }

    /// Same as [`rect_windows`](Self::rect_windows) with the scanned range
    /// widened by `extra` positions on every side.
    pub fn rect_windows_with_margin(&self, w: usize, h: usize, extra: usize) -> BTreeSet<Pattern> {
        let (sx, sy) = self.scans(w, h, extra);
        let mut out = BTreeSet::new();
        for y in sy.range() {
            for x in sx.range() {
                out.insert(self.window(Vec2::new(x, y), w, h));
            }
        }
        out
    }

    /// All `n`×`n` windows occurring anywhere.
    pub fn pattern_set(&self, n: usize) -> BTreeSet<Pattern> {
        self.rect_windows(n, n)
    }

    pub fn pattern_set_with_margin(&self, n: usize, extra: usize) -> BTreeSet<Pattern> {
        self.rect_windows_with_margin(n, n, extra)
    }

    /// Positions `t` in the scan range where `p` (normalized) occurs, and
    /// whether any of them lies in an unbounded band.
    pub(crate) fn scan_occurrences(&self, p: &Pattern) -> (Vec<Vec2>, bool) {
        let p = p.normalize();
        let (sx, sy) = self.scans(p.width(), p.height(), 0);
        let mut hits = Vec::new();
        let mut unbounded = false;
        for y in sy.range() {
            for x in sx.range() {
                let t = Vec2::new(x, y);
                if p.cells().iter().all(|&(v, s)| self.cell_at(v + t) == s) {
                    unbounded |= sx.unbounded(x) || sy.unbounded(y);
                    hits.push(t);
                }
            }
        }
        (hits, unbounded)
    }

    pub fn occurrences(&self, p: &Pattern) -> Occurrences {
        let (hits, unbounded) = self.scan_occurrences(p);
        if unbounded {
            Occurrences::Infinite
        } else if hits.is_empty() {
            Occurrences::Zero
        } else {
            Occurrences::Finite(hits.len())
        }
    }

    /// Whether every shape window of `ts` anywhere in the configuration is
    /// allowed.
    pub fn is_valid(&self, ts: &TileSet) -> Result<bool> {
        if ts.alphabet() != &self.alphabet {
            return usage("presentation and tile-set use different alphabets");
        }
        for shape in ts.shapes() {
            let (sx, sy) = self.scans(shape.width(), shape.height(), 0);
            for y in sy.range() {
                for x in sx.range() {
                    let t = Vec2::new(x, y);
                    if !shape.allows_with(|v| self.cell_at(t + v)) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// `cell_at(shift(v), x) == cell_at(x + v)`.
    pub fn shift(&self, v: Vec2) -> GridPresentation {
        GridPresentation {
            alphabet: self.alphabet.clone(),
            xcuts: self.xcuts.iter().map(|c| c - v.x).collect(),
            ycuts: self.ycuts.iter().map(|c| c - v.y).collect(),
            regions: self.regions.iter().map(|b| b.shifted(v.x, v.y)).collect(),
        }
    }

    /// Mirror across the diagonal: `cell_at(transpose(), (x, y)) == cell_at((y, x))`.
    pub fn transpose(&self) -> GridPresentation {
        let (r, s) = (self.xcuts.len() + 1, self.ycuts.len() + 1);
        let mut regions = Vec::with_capacity(r * s);
        for iy in 0..s {
            for ix in 0..r {
                regions.push(self.region(ix, iy).transpose());
            }
        }
        GridPresentation {
            alphabet: self.alphabet.clone(),
            xcuts: self.ycuts.clone(),
            ycuts: self.xcuts.clone(),
            regions,
        }
    }

    /// Cellwise equality of the two configurations.
    pub fn same_configuration(&self, other: &GridPresentation) -> bool {
        if self.alphabet != other.alphabet {
            return false;
        }
        let u = lcm(self.h_period(), other.h_period()) as i64;
        let v = lcm(self.v_period(), other.v_period()) as i64;
        let hull = |a: &[i64], b: &[i64]| -> (i64, i64) {
            let all: Vec<i64> = a.iter().chain(b).copied().collect();
            (
                all.iter().copied().min().unwrap_or(0),
                all.iter().copied().max().unwrap_or(0),
            )
        };
        let (x0, x1) = hull(&self.xcuts, &other.xcuts);
        let (y0, y1) = hull(&self.ycuts, &other.ycuts);
        (y0 - v..y1 + v).all(|y| {
            (x0 - u..x1 + u).all(|x| {
                let p = Vec2::new(x, y);
                self.cell_at(p) == other.cell_at(p)
            })
        })
    }

    /// Translations fixing the configuration, searched over vectors bounded
    /// by the cut spans plus the block periods.
    pub fn period_lattice(&self) -> PeriodLattice {
        let bx = (Self::span(&self.xcuts) + self.h_period()) as i64;
        let by = (Self::span(&self.ycuts) + self.v_period()) as i64;
        let mut found = Vec::new();
        for x in 0..=bx {
            for y in -by..=by {
                if x == 0 && y <= 0 {
                    continue;
                }
                let v = Vec2::new(x, y);
                if self.same_configuration(&self.shift(v)) {
                    found.push(v);
                }
            }
        }
        PeriodLattice::spanned_by(found)
    }

    /// Window size beyond which larger windows cannot reveal new finite
    /// occurrences.
    pub fn structure_bound(&self) -> usize {
        let bx = Self::span(&self.xcuts) + 2 * self.h_period();
        let by = Self::span(&self.ycuts) + 2 * self.v_period();
        bx.max(by) + 1
    }

    /// Type b when some square window occurs exactly once; the witness is the
    /// first such window, smallest size first, then in pattern order.
    pub fn type_of(&self) -> TilingType {
        if self.xcuts.is_empty() || self.ycuts.is_empty() {
            return TilingType::TypeA;
        }
        for n in 1..=self.structure_bound() {
            let (sx, sy) = self.scans(n, n, 0);
            let mut candidates = BTreeSet::new();
            for y in sy.range().filter(|&y| !sy.unbounded(y)) {
                for x in sx.range().filter(|&x| !sx.unbounded(x)) {
                    candidates.insert(self.window(Vec2::new(x, y), n, n));
                }
            }
            for p in candidates {
                if self.occurrences(&p) == Occurrences::Finite(1) {
                    return TilingType::TypeB(p);
                }
            }
        }
        TilingType::TypeA
    }
}

/// Cellwise equality; fails on alphabet mismatch.
pub fn equal(a: &GridPresentation, b: &GridPresentation) -> Result<bool> {
    if a.alphabet != b.alphabet {
        return usage("presentations use different alphabets");
    }
    Ok(a.same_configuration(b))
}
