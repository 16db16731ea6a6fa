use std::cmp::Ordering;

use super::pattern::reading_key;
use super::{Alphabet, Pattern, State, Vec2};
use crate::error::{usage, Result};

/// A `p`×`q` block repeated over the whole plane.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TorusTiling {
    p: usize,
    q: usize,
    // row-major, y upward: index y * p + x
    data: Vec<State>,
}

impl TorusTiling {
    pub fn new(p: usize, q: usize, data: Vec<State>) -> Result<Self> {
        if p == 0 || q == 0 {
            return usage("torus periods must be at least 1");
        }
        if data.len() != p * q {
            return usage("torus block has the wrong number of cells");
        }
        Ok(TorusTiling { p, q, data })
    }

    /// Rows listed top to bottom.
    pub fn from_rows(rows: &[Vec<State>]) -> Result<Self> {
        let q = rows.len();
        let p = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != p) {
            return usage("rows of unequal length");
        }
        let mut data = Vec::with_capacity(p * q);
        for row in rows.iter().rev() {
            data.extend_from_slice(row);
        }
        TorusTiling::new(p, q, data)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn get(&self, x: i64, y: i64) -> State {
        let x = x.rem_euclid(self.p as i64) as usize;
        let y = y.rem_euclid(self.q as i64) as usize;
        self.data[y * self.p + x]
    }

    pub fn states(&self) -> impl Iterator<Item = State> + '_ {
        self.data.iter().copied()
    }

    /// The block translated so that its new cell `(x, y)` is the old
    /// `(x + dx, y + dy)`.
    pub fn shifted(&self, dx: i64, dy: i64) -> TorusTiling {
        let mut data = Vec::with_capacity(self.data.len());
        for y in 0..self.q as i64 {
            for x in 0..self.p as i64 {
                data.push(self.get(x + dx, y + dy));
            }
        }
        TorusTiling {
            p: self.p,
            q: self.q,
            data,
        }
    }

    /// Least horizontal and vertical periods of the unfolded configuration
    /// along the axes (each divides the block size).
    pub fn axis_periods(&self) -> (usize, usize) {
        let hp = (1..=self.p)
            .find(|&d| self.p % d == 0 && *self == self.shifted(d as i64, 0))
            .unwrap_or(self.p);
        let vp = (1..=self.q)
            .find(|&d| self.q % d == 0 && *self == self.shifted(0, d as i64))
            .unwrap_or(self.q);
        (hp, vp)
    }

    pub fn to_pattern(&self) -> Pattern {
        Pattern::rect(self.p, self.q, |x, y| self.get(x, y))
    }

    pub fn rows(&self) -> Vec<Vec<State>> {
        (0..self.q as i64)
            .rev()
            .map(|y| (0..self.p as i64).map(|x| self.get(x, y)).collect())
            .collect()
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        self.to_pattern().render(alphabet)
    }

    fn reading(&self) -> impl Iterator<Item = State> + '_ {
        let mut cells: Vec<Vec2> = (0..self.q as i64)
            .flat_map(|y| (0..self.p as i64).map(move |x| Vec2::new(x, y)))
            .collect();
        cells.sort_by_key(|&v| reading_key(v));
        cells.into_iter().map(move |v| self.get(v.x, v.y))
    }
}

impl Ord for TorusTiling {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.p, self.q)
            .cmp(&(other.p, other.q))
            .then_with(|| self.reading().cmp(other.reading()))
    }
}

impl PartialOrd for TorusTiling {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
