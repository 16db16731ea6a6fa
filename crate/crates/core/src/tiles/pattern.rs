use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::{Alphabet, State};
use crate::error::{usage, Result};

/// A cell of the plane, or a translation. `x` grows rightward, `y` upward.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vec2 {
    pub x: i64,
    pub y: i64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { x: 0, y: 0 };

    pub const fn new(x: i64, y: i64) -> Self {
        Vec2 { x, y }
    }

    pub fn transpose(self) -> Self {
        Vec2::new(self.y, self.x)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Reading order: top row first, left to right.
pub(crate) fn reading_key(v: Vec2) -> (i64, i64) {
    (-v.y, v.x)
}

pub(crate) fn reading_cmp(a: Vec2, b: Vec2) -> Ordering {
    reading_key(a).cmp(&reading_key(b))
}

/// A finite partial configuration: a map from cells to states.
///
/// Cells are kept sorted in reading order, and patterns compare
/// lexicographically in that order. Patterns are never empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    cells: Vec<(Vec2, State)>,
}

impl Pattern {
    pub fn new(cells: impl IntoIterator<Item = (Vec2, State)>) -> Result<Self> {
        let mut cells: Vec<(Vec2, State)> = cells.into_iter().collect();
        if cells.is_empty() {
            return usage("pattern must have at least one cell");
        }
        cells.sort_by(|a, b| reading_cmp(a.0, b.0).then(a.1.cmp(&b.1)));
        for w in cells.windows(2) {
            if w[0].0 == w[1].0 {
                return usage(format!("cell {} defined twice", w[0].0));
            }
        }
        Ok(Pattern { cells })
    }

    /// The `w`×`h` rectangle on `[0,w)×[0,h)` with states given by `f(x, y)`.
    pub fn rect(w: usize, h: usize, mut f: impl FnMut(i64, i64) -> State) -> Pattern {
        assert!(w > 0 && h > 0, "empty rectangle");
        let mut cells = Vec::with_capacity(w * h);
        for y in (0..h as i64).rev() {
            for x in 0..w as i64 {
                cells.push((Vec2::new(x, y), f(x, y)));
            }
        }
        Pattern { cells }
    }

    /// Builds a rectangle from rows listed top to bottom.
    pub fn from_rows(rows: &[Vec<State>]) -> Result<Pattern> {
        let h = rows.len();
        let w = rows.first().map_or(0, Vec::len);
        if h == 0 || w == 0 {
            return usage("pattern must have at least one cell");
        }
        if rows.iter().any(|r| r.len() != w) {
            return usage("rows of unequal length");
        }
        Ok(Pattern::rect(w, h, |x, y| rows[h - 1 - y as usize][x as usize]))
    }

    pub fn cells(&self) -> &[(Vec2, State)] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn domain(&self) -> impl Iterator<Item = Vec2> + '_ {
        self.cells.iter().map(|c| c.0)
    }

    pub fn states(&self) -> impl Iterator<Item = State> + '_ {
        self.cells.iter().map(|c| c.1)
    }

    pub fn get(&self, v: Vec2) -> Option<State> {
        self.cells
            .binary_search_by(|c| reading_cmp(c.0, v))
            .ok()
            .map(|i| self.cells[i].1)
    }

    /// Componentwise minimum and maximum of the domain.
    pub fn bounds(&self) -> (Vec2, Vec2) {
        let mut lo = self.cells[0].0;
        let mut hi = lo;
        for &(v, _) in &self.cells {
            lo = Vec2::new(lo.x.min(v.x), lo.y.min(v.y));
            hi = Vec2::new(hi.x.max(v.x), hi.y.max(v.y));
        }
        (lo, hi)
    }

    pub fn width(&self) -> usize {
        let (lo, hi) = self.bounds();
        (hi.x - lo.x + 1) as usize
    }

    pub fn height(&self) -> usize {
        let (lo, hi) = self.bounds();
        (hi.y - lo.y + 1) as usize
    }

    /// Whether the domain fills its bounding box.
    pub fn is_rect(&self) -> bool {
        self.len() == self.width() * self.height()
    }

    pub fn translate(&self, t: Vec2) -> Pattern {
        Pattern {
            cells: self.cells.iter().map(|&(v, s)| (v + t, s)).collect(),
        }
    }

    /// Translated copy whose minimal x and minimal y are both 0.
    pub fn normalize(&self) -> Pattern {
        let (lo, _) = self.bounds();
        if lo == Vec2::ZERO {
            self.clone()
        } else {
            self.translate(-lo)
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.bounds().0 == Vec2::ZERO
    }

    pub fn transpose(&self) -> Pattern {
        let mut cells: Vec<_> = self.cells.iter().map(|&(v, s)| (v.transpose(), s)).collect();
        cells.sort_by(|a, b| reading_cmp(a.0, b.0));
        Pattern { cells }
    }

    /// Rows of the bounding box, top to bottom; `None` marks cells outside
    /// the domain.
    pub fn rows(&self) -> Vec<Vec<Option<State>>> {
        let (lo, hi) = self.bounds();
        (lo.y..=hi.y)
            .rev()
            .map(|y| (lo.x..=hi.x).map(|x| self.get(Vec2::new(x, y))).collect())
            .collect()
    }

    /// Rows rendered with `alphabet`, top to bottom, `.` for holes.
    pub fn render_rows(&self, alphabet: &Alphabet) -> Vec<String> {
        let sep = if alphabet.is_compact() { "" } else { " " };
        self.rows()
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|c| c.map_or(".", |s| alphabet.token(s)))
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect()
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.render_rows(alphabet).join("/")
    }
}

impl Ord for Pattern {
    fn cmp(&self, other: &Self) -> Ordering {
        let a = self.cells.iter().map(|&(v, s)| (reading_key(v), s));
        let b = other.cells.iter().map(|&(v, s)| (reading_key(v), s));
        a.cmp(b)
    }
}

impl PartialOrd for Pattern {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|c| c.map_or(".".to_string(), |s| s.to_string()))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        let (lo, _) = self.bounds();
        write!(f, "Pattern@{lo}[{}]", rows.join(" / "))
    }
}

/// Whether `needle` occurs somewhere inside `haystack` under translation.
pub fn appears_in(needle: &Pattern, haystack: &Pattern) -> bool {
    let (anchor, _) = needle.cells[0];
    haystack.cells.iter().any(|&(h, _)| {
        let t = h - anchor;
        needle
            .cells
            .iter()
            .all(|&(v, s)| haystack.get(v + t) == Some(s))
    })
}
