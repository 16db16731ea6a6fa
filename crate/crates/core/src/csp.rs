//! Backtracking over the cells of a rectangle (optionally wrapped into a
//! torus or cylinder) against a tile-set's window constraints.

use std::ops::ControlFlow;

use crate::tiles::{Pattern, State, TileSet};

struct Check {
    shape: usize,
    cells: Vec<usize>,
}

/// A `w`×`h` rectangle whose cells are indexed in reading order: top row
/// first, left to right.
pub(crate) struct Grid<'a> {
    ts: &'a TileSet,
    w: usize,
    h: usize,
    // checks[i]: windows whose last cell in reading order is i
    checks: Vec<Vec<Check>>,
}

impl<'a> Grid<'a> {
    pub fn new(ts: &'a TileSet, w: usize, h: usize, wrap_x: bool, wrap_y: bool) -> Self {
        let mut checks: Vec<Vec<Check>> = (0..w * h).map(|_| Vec::new()).collect();
        for (si, shape) in ts.shapes().iter().enumerate() {
            let ax_max = if wrap_x { w } else { (w + 1).saturating_sub(shape.width()) };
            let ay_max = if wrap_y { h } else { (h + 1).saturating_sub(shape.height()) };
            for ay in 0..ay_max {
                for ax in 0..ax_max {
                    let cells: Vec<usize> = shape
                        .cells()
                        .iter()
                        .map(|d| {
                            let x = (ax + d.x as usize) % w;
                            let y = (ay + d.y as usize) % h;
                            (h - 1 - y) * w + x
                        })
                        .collect();
                    let last = *cells.iter().max().expect("shapes are nonempty");
                    checks[last].push(Check { shape: si, cells });
                }
            }
        }
        Grid { ts, w, h, checks }
    }

    pub fn index(&self, x: usize, y: usize) -> usize {
        (self.h - 1 - y) * self.w + x
    }

    pub fn len(&self) -> usize {
        self.w * self.h
    }

    pub fn to_pattern(&self, states: &[State]) -> Pattern {
        Pattern::rect(self.w, self.h, |x, y| states[self.index(x as usize, y as usize)])
    }

    fn check_cell(&self, i: usize, states: &[State]) -> bool {
        self.checks[i].iter().all(|c| {
            let shape = &self.ts.shapes()[c.shape];
            shape.allows_code(shape.encode(c.cells.iter().map(|&j| states[j])))
        })
    }

    /// Whether a fully assigned grid satisfies every window.
    pub fn check_all(&self, states: &[State]) -> bool {
        (0..self.len()).all(|i| self.check_cell(i, states))
    }

    /// Visits every completion of `fixed` in lexicographic reading order.
    pub fn solve<F>(&self, fixed: &[Option<State>], mut visit: F) -> ControlFlow<()>
    where
        F: FnMut(&[State]) -> ControlFlow<()>,
    {
        debug_assert_eq!(fixed.len(), self.len());
        let mut states = vec![0; self.len()];
        self.descend(0, fixed, &mut states, &mut visit)
    }

    fn descend<F>(&self, i: usize, fixed: &[Option<State>], states: &mut [State], visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[State]) -> ControlFlow<()>,
    {
        if i == states.len() {
            return visit(states);
        }
        let choices = match fixed[i] {
            Some(s) => s..s + 1,
            None => 0..self.ts.alphabet().len() as State,
        };
        for s in choices {
            states[i] = s;
            if self.check_cell(i, states) {
                self.descend(i + 1, fixed, states, visit)?;
            }
        }
        ControlFlow::Continue(())
    }

    pub fn all(&self) -> Vec<Vec<State>> {
        let mut out = Vec::new();
        let _ = self.solve(&vec![None; self.len()], |s| {
            out.push(s.to_vec());
            ControlFlow::Continue(())
        });
        out
    }

    pub fn first(&self, fixed: &[Option<State>]) -> Option<Vec<State>> {
        let mut found = None;
        let _ = self.solve(fixed, |s| {
            found = Some(s.to_vec());
            ControlFlow::Break(())
        });
        found
    }

    pub fn count(&self) -> u64 {
        let mut n = 0u64;
        let _ = self.solve(&vec![None; self.len()], |_| {
            n += 1;
            ControlFlow::Continue(())
        });
        n
    }
}
