use std::collections::HashMap;

use super::pattern::reading_cmp;
use super::{Alphabet, Pattern, State, TorusTiling, Vec2};
use crate::error::{usage, Result};

/// Upper bound on `|Q|^|D|` for a single shape; allowed sets are stored as
/// dense bitmaps over all patterns of the shape.
const MAX_SHAPE_PATTERNS: usize = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Allowed,
    Forbidden,
}

/// A normalized finite domain together with its allowed patterns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape {
    cells: Vec<Vec2>,
    width: usize,
    height: usize,
    radix: usize,
    allowed: Vec<bool>,
}

impl Shape {
    fn new(mut cells: Vec<Vec2>, radix: usize) -> Result<Self> {
        cells.sort_by(|a, b| reading_cmp(*a, *b));
        cells.dedup();
        let total = (0..cells.len()).try_fold(1usize, |acc, _| acc.checked_mul(radix));
        let total = match total {
            Some(t) if t <= MAX_SHAPE_PATTERNS => t,
            _ => return usage(format!("shape with {} cells is too large", cells.len())),
        };
        let width = cells.iter().map(|c| c.x).max().unwrap_or(0) as usize + 1;
        let height = cells.iter().map(|c| c.y).max().unwrap_or(0) as usize + 1;
        Ok(Shape {
            cells,
            width,
            height,
            radix,
            allowed: vec![false; total],
        })
    }

    /// Cells of the domain in reading order; the minimal x and y are 0.
    pub fn cells(&self) -> &[Vec2] {
        &self.cells
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn is_hpair(&self) -> bool {
        self.cells == [Vec2::new(0, 0), Vec2::new(1, 0)]
    }

    pub fn is_vpair(&self) -> bool {
        self.cells == [Vec2::new(0, 1), Vec2::new(0, 0)]
    }

    pub(crate) fn encode(&self, states: impl IntoIterator<Item = State>) -> usize {
        let mut code = 0;
        let mut mul = 1;
        for s in states {
            code += s as usize * mul;
            mul *= self.radix;
        }
        code
    }

    fn decode(&self, mut code: usize) -> Pattern {
        let cells = self.cells.iter().map(|&v| {
            let s = (code % self.radix) as State;
            code /= self.radix;
            (v, s)
        });
        Pattern::new(cells.collect::<Vec<_>>()).expect("shapes are nonempty")
    }

    /// Whether the window read through `read` (relative cell → state) is allowed.
    #[inline]
    pub fn allows_with(&self, mut read: impl FnMut(Vec2) -> State) -> bool {
        self.allowed[self.encode(self.cells.iter().map(|&v| read(v)))]
    }

    /// Whether `p`, a pattern on exactly this domain, is allowed.
    pub fn allows(&self, p: &Pattern) -> bool {
        let p = p.normalize();
        p.len() == self.cells.len()
            && p.domain().eq(self.cells.iter().copied())
            && self.allowed[self.encode(p.states())]
    }

    pub(crate) fn allows_code(&self, code: usize) -> bool {
        self.allowed[code]
    }

    pub fn allowed_count(&self) -> usize {
        self.allowed.iter().filter(|&&a| a).count()
    }

    pub fn total_count(&self) -> usize {
        self.allowed.len()
    }

    fn patterns_where(&self, want: bool) -> Vec<Pattern> {
        let mut out: Vec<Pattern> = (0..self.allowed.len())
            .filter(|&c| self.allowed[c] == want)
            .map(|c| self.decode(c))
            .collect();
        out.sort();
        out
    }

    pub fn allowed_patterns(&self) -> Vec<Pattern> {
        self.patterns_where(true)
    }

    pub fn forbidden_patterns(&self) -> Vec<Pattern> {
        self.patterns_where(false)
    }
}

/// An alphabet with allowed patterns on one or more finite shapes.
///
/// A configuration is a tiling when, for every shape and every cell, the
/// shape's window anchored at that cell is allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileSet {
    alphabet: Alphabet,
    shapes: Vec<Shape>,
}

impl TileSet {
    pub fn builder(alphabet: Alphabet) -> TileSetBuilder {
        TileSetBuilder {
            alphabet,
            rules: Vec::new(),
            by_domain: HashMap::new(),
        }
    }

    /// Domino tile-set from allowed horizontal pairs `(left, right)` and
    /// vertical pairs `(top, bottom)`, given as tokens.
    pub fn dominoes(alphabet: Alphabet, hpairs: &[(&str, &str)], vpairs: &[(&str, &str)]) -> Result<Self> {
        let lookup = |t: &str| {
            alphabet
                .state(t)
                .ok_or_else(|| crate::Error::Usage(format!("unknown state {t:?}")))
        };
        let mut h = Vec::new();
        for &(l, r) in hpairs {
            h.push((lookup(l)?, lookup(r)?));
        }
        let mut v = Vec::new();
        for &(t, b) in vpairs {
            v.push((lookup(t)?, lookup(b)?));
        }
        let mut b = TileSet::builder(alphabet.clone());
        b.declare(Mode::Allowed, &[Vec2::new(0, 0), Vec2::new(1, 0)])?;
        b.declare(Mode::Allowed, &[Vec2::new(0, 0), Vec2::new(0, 1)])?;
        for (l, r) in h {
            b.hpair(l, r)?;
        }
        for (t, bt) in v {
            b.vpair(t, bt)?;
        }
        b.build()
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn shapes(&self) -> &[Shape] {
        &self.shapes
    }

    pub fn max_width(&self) -> usize {
        self.shapes.iter().map(Shape::width).max().unwrap_or(1)
    }

    pub fn max_height(&self) -> usize {
        self.shapes.iter().map(Shape::height).max().unwrap_or(1)
    }

    /// Largest side of any shape's bounding box.
    pub fn max_extent(&self) -> usize {
        self.max_width().max(self.max_height())
    }

    /// Whether every shape's window anchored at `anchor` is allowed.
    pub fn allows_at(&self, anchor: Vec2, mut read: impl FnMut(Vec2) -> State) -> bool {
        self.shapes
            .iter()
            .all(|s| s.allows_with(|v| read(anchor + v)))
    }

    /// Per shape, the patterns of that shape that are not allowed.
    pub fn to_forbidden(&self) -> Vec<Vec<Pattern>> {
        self.shapes.iter().map(Shape::forbidden_patterns).collect()
    }

    /// Whether the doubly periodic unfolding of `t` is a tiling.
    pub fn check_torus(&self, t: &TorusTiling) -> bool {
        if t.states().any(|s| !self.alphabet.contains(s)) {
            return false;
        }
        (0..t.q() as i64).all(|y| {
            (0..t.p() as i64).all(|x| self.allows_at(Vec2::new(x, y), |v| t.get(v.x, v.y)))
        })
    }

    /// The tile-set obtained by swapping the axes of every shape.
    pub fn transpose(&self) -> TileSet {
        let mut b = TileSet::builder(self.alphabet.clone());
        for s in &self.shapes {
            let domain: Vec<Vec2> = s.cells.iter().map(|v| v.transpose()).collect();
            b.declare(Mode::Allowed, &domain).expect("same domain size");
            for p in s.allowed_patterns() {
                b.allow(&p.transpose()).expect("states already valid");
            }
        }
        b.build().expect("transposed shapes stay valid")
    }
}

/// Collects allowed or forbidden patterns; patterns are grouped into shapes
/// by their normalized domain.
pub struct TileSetBuilder {
    alphabet: Alphabet,
    rules: Vec<(Vec<Vec2>, Mode, Vec<Pattern>)>,
    by_domain: HashMap<Vec<Vec2>, usize>,
}

impl TileSetBuilder {
    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn rule(&mut self, mode: Mode, domain: Vec<Vec2>) -> Result<usize> {
        if let Some(&i) = self.by_domain.get(&domain) {
            if self.rules[i].1 != mode {
                return usage("shape declared both as allowed and as forbidden");
            }
            return Ok(i);
        }
        self.rules.push((domain.clone(), mode, Vec::new()));
        self.by_domain.insert(domain, self.rules.len() - 1);
        Ok(self.rules.len() - 1)
    }

    fn normalized_domain(cells: impl Iterator<Item = Vec2>) -> Vec<Vec2> {
        let cells: Vec<Vec2> = cells.collect();
        let mx = cells.iter().map(|c| c.x).min().unwrap_or(0);
        let my = cells.iter().map(|c| c.y).min().unwrap_or(0);
        let mut d: Vec<Vec2> = cells.iter().map(|c| Vec2::new(c.x - mx, c.y - my)).collect();
        d.sort_by(|a, b| reading_cmp(*a, *b));
        d.dedup();
        d
    }

    /// Declares a shape with no patterns yet. In allowed mode this forbids
    /// everything on the shape until patterns are added.
    pub fn declare(&mut self, mode: Mode, domain: &[Vec2]) -> Result<&mut Self> {
        if domain.is_empty() {
            return usage("shape must have at least one cell");
        }
        let d = Self::normalized_domain(domain.iter().copied());
        self.rule(mode, d)?;
        Ok(self)
    }

    pub fn add(&mut self, mode: Mode, p: &Pattern) -> Result<&mut Self> {
        if let Some(s) = p.states().find(|&s| !self.alphabet.contains(s)) {
            return usage(format!("state index {s} outside the alphabet"));
        }
        let p = p.normalize();
        let d = Self::normalized_domain(p.domain());
        let i = self.rule(mode, d)?;
        self.rules[i].2.push(p);
        Ok(self)
    }

    pub fn allow(&mut self, p: &Pattern) -> Result<&mut Self> {
        self.add(Mode::Allowed, p)
    }

    pub fn forbid(&mut self, p: &Pattern) -> Result<&mut Self> {
        self.add(Mode::Forbidden, p)
    }

    /// Horizontal pair: `left` at (0,0), `right` at (1,0).
    pub fn hpair(&mut self, left: State, right: State) -> Result<&mut Self> {
        let p = Pattern::new([(Vec2::new(0, 0), left), (Vec2::new(1, 0), right)])?;
        self.allow(&p)
    }

    /// Vertical pair: `top` at (0,1), `bottom` at (0,0).
    pub fn vpair(&mut self, top: State, bottom: State) -> Result<&mut Self> {
        let p = Pattern::new([(Vec2::new(0, 1), top), (Vec2::new(0, 0), bottom)])?;
        self.allow(&p)
    }

    pub fn build(&self) -> Result<TileSet> {
        if self.rules.is_empty() {
            return usage("tile-set needs at least one shape");
        }
        let radix = self.alphabet.len();
        let mut shapes = Vec::with_capacity(self.rules.len());
        for (domain, mode, patterns) in &self.rules {
            let mut shape = Shape::new(domain.clone(), radix)?;
            let mut mark = vec![false; shape.allowed.len()];
            for p in patterns {
                mark[shape.encode(p.states())] = true;
            }
            shape.allowed = match mode {
                Mode::Allowed => mark,
                Mode::Forbidden => mark.into_iter().map(|m| !m).collect(),
            };
            shapes.push(shape);
        }
        Ok(TileSet {
            alphabet: self.alphabet.clone(),
            shapes,
        })
    }
}
