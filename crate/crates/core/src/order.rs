//! The extraction preorder on presented tilings at a fixed window size.
//!
//! `x ⪯ y` holds when every pattern of `x` also occurs in `y`. Here patterns
//! are the `n`×`n` windows for a chosen `n`; for grid presentations the
//! relation stops changing once `n` exceeds the structure of both sides, and
//! [`preceq_report`] says whether `n` and `n + 1` agree. Families holding a
//! truncated infinite series (stripes of height `1..=i`) only describe that
//! truncation: a stripe at least as tall as the window looks, through
//! `n`×`n` windows, like its limit.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write;

use crate::error::{usage, Result};
use crate::presentation::GridPresentation;
use crate::tiles::{Pattern, TileSet};

/// Named presented tilings of one tile-set, analysed at window `n`.
#[derive(Clone, Debug)]
pub struct TilingFamily {
    names: Vec<String>,
    members: Vec<GridPresentation>,
    window: usize,
    patterns: Vec<BTreeSet<Pattern>>,
}

impl TilingFamily {
    pub fn new(ts: &TileSet, members: Vec<(String, GridPresentation)>, window: usize) -> Result<Self> {
        if window < ts.max_extent() {
            return usage(format!(
                "window {window} is smaller than the largest shape extent {}",
                ts.max_extent()
            ));
        }
        let mut seen = HashMap::new();
        for (name, g) in &members {
            if seen.insert(name.clone(), ()).is_some() {
                return usage(format!("duplicate family member {name:?}"));
            }
            if !g.is_valid(ts)? {
                return usage(format!("{name} is not a tiling of the tile-set"));
            }
        }
        let (names, members): (Vec<_>, Vec<_>) = members.into_iter().unzip();
        let patterns = members.iter().map(|g| g.pattern_set(window)).collect();
        Ok(TilingFamily {
            names,
            members,
            window,
            patterns,
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn window(&self) -> usize {
        self.window
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn member(&self, i: usize) -> &GridPresentation {
        &self.members[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn pattern_set(&self, i: usize) -> &BTreeSet<Pattern> {
        &self.patterns[i]
    }

    /// `member(i) ⪯ member(j)` at the family's window.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.patterns[i].is_subset(&self.patterns[j])
    }

    /// The members for which `keep` holds, in the same order.
    pub fn subset(&self, keep: impl Fn(usize) -> bool) -> TilingFamily {
        let idx: Vec<usize> = (0..self.len()).filter(|&i| keep(i)).collect();
        TilingFamily {
            names: idx.iter().map(|&i| self.names[i].clone()).collect(),
            members: idx.iter().map(|&i| self.members[i].clone()).collect(),
            window: self.window,
            patterns: idx.iter().map(|&i| self.patterns[i].clone()).collect(),
        }
    }
}

/// Whether every `n`×`n` window of `x` occurs in `y`.
pub fn preceq(x: &GridPresentation, y: &GridPresentation, n: usize) -> Result<bool> {
    if x.alphabet() != y.alphabet() {
        return usage("presentations use different alphabets");
    }
    if n == 0 {
        return usage("window must be at least 1");
    }
    Ok(x.pattern_set(n).is_subset(&y.pattern_set(n)))
}

/// [`preceq`] at `n`, and whether the answer is the same at `n + 1`.
pub fn preceq_report(x: &GridPresentation, y: &GridPresentation, n: usize) -> Result<(bool, bool)> {
    let here = preceq(x, y, n)?;
    let next = preceq(x, y, n + 1)?;
    Ok((here, here == next))
}

/// Members grouped by mutual `⪯`, each class in family order and classes
/// ordered by their first member.
pub fn equivalence_classes(f: &TilingFamily) -> Vec<Vec<usize>> {
    let mut class_of: Vec<Option<usize>> = vec![None; f.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..f.len() {
        if class_of[i].is_some() {
            continue;
        }
        let c = classes.len();
        let members: Vec<usize> = (i..f.len())
            .filter(|&j| class_of[j].is_none() && f.leq(i, j) && f.leq(j, i))
            .collect();
        for &j in &members {
            class_of[j] = Some(c);
        }
        classes.push(members);
    }
    classes
}

/// Classes of a family with their strict order and its covering edges.
#[derive(Clone, Debug)]
pub struct HasseDiagram {
    classes: Vec<Vec<usize>>,
    labels: Vec<String>,
    member_names: Vec<Vec<String>>,
    below: Vec<Vec<bool>>,
    edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Member indices of class `c`.
    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    /// Name of the class representative (its first member).
    pub fn label(&self, c: usize) -> &str {
        &self.labels[c]
    }

    pub fn members(&self, c: usize) -> &[String] {
        &self.member_names[c]
    }

    pub fn class_of(&self, member: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.contains(&member))
            .expect("every member has a class")
    }

    pub fn class_named(&self, name: &str) -> Option<usize> {
        self.member_names.iter().position(|m| m.iter().any(|n| n == name))
    }

    /// Strict order: class `a` lies below class `b`.
    pub fn below(&self, a: usize, b: usize) -> bool {
        self.below[a][b]
    }

    /// Covering pairs `(lower, upper)`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn minimal(&self) -> Vec<usize> {
        let n = self.classes.len();
        (0..n).filter(|&c| (0..n).all(|d| !self.below[d][c])).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        let n = self.classes.len();
        (0..n).filter(|&c| (0..n).all(|d| !self.below[c][d])).collect()
    }

    /// Length of the longest strictly decreasing chain starting at `c`.
    pub fn level(&self, c: usize) -> usize {
        let mut memo = vec![None; self.classes.len()];
        self.level_memo(c, &mut memo)
    }

    fn level_memo(&self, c: usize, memo: &mut Vec<Option<usize>>) -> usize {
        if let Some(l) = memo[c] {
            return l;
        }
        let l = (0..self.classes.len())
            .filter(|&d| self.below[d][c])
            .map(|d| self.level_memo(d, memo) + 1)
            .max()
            .unwrap_or(0);
        memo[c] = Some(l);
        l
    }

    /// Longest strict chain, counted in classes.
    pub fn height(&self) -> usize {
        (0..self.classes.len()).map(|c| self.level(c) + 1).max().unwrap_or(0)
    }

    /// Graphviz source with one node per class and covering edges only,
    /// drawn bottom to top.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n");
        for c in 0..self.classes.len() {
            let label = self.member_names[c].join(", ");
            let _ = writeln!(s, "  \"{}\" [label=\"{}\"];", self.labels[c], label);
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(s, "  \"{}\" -> \"{}\";", self.labels[a], self.labels[b]);
        }
        s.push_str("}\n");
        s
    }
}

pub fn hasse(f: &TilingFamily) -> HasseDiagram {
    let classes = equivalence_classes(f);
    let n = classes.len();
    let rep: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let below: Vec<Vec<bool>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| a != b && f.leq(rep[a], rep[b]))
                .collect()
        })
        .collect();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if below[a][b] && !(0..n).any(|c| below[a][c] && below[c][b]) {
                edges.push((a, b));
            }
        }
    }
    HasseDiagram {
        labels: rep.iter().map(|&i| f.name(i).to_string()).collect(),
        member_names: classes
            .iter()
            .map(|c| c.iter().map(|&i| f.name(i).to_string()).collect())
            .collect(),
        classes,
        below,
        edges,
    }
}

pub fn minimal_classes(f: &TilingFamily) -> Vec<Vec<usize>> {
    let h = hasse(f);
    h.minimal().into_iter().map(|c| h.class(c).to_vec()).collect()
}

pub fn maximal_classes(f: &TilingFamily) -> Vec<Vec<usize>> {
    let h = hasse(f);
    h.maximal().into_iter().map(|c| h.class(c).to_vec()).collect()
}

/// Length of the longest strictly decreasing chain below member `x`.
pub fn level_of(f: &TilingFamily, x: usize) -> usize {
    let h = hasse(f);
    h.level(h.class_of(x))
}
