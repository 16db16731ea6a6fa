//! Isolated points and Cantor-Bendixson ranks of a finite family.
//!
//! A member `x` is isolated when some rectangular pattern `P` of size at most
//! `n`×`n` occurs in `x`, in no member of another class, and only at
//! positions that differ by periods of `x`. Every configuration of the
//! family containing `P` is then a translate of `x`. Removing the isolated
//! classes gives the derivative; repeating until nothing changes assigns
//! ranks.

use std::collections::{BTreeSet, HashMap};

use crate::order::{equivalence_classes, TilingFamily};
use crate::presentation::PeriodLattice;
use crate::tiles::Pattern;

/// Ranks after iterating the derivative to a fixpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    /// Each member with the step at which it became isolated (1-based), or
    /// `None` if it survives in the residue.
    pub ranks: Vec<(String, Option<usize>)>,
    /// Number of derivative steps that removed something.
    pub family_rank: usize,
    /// Members that are never isolated.
    pub residue: Vec<String>,
}

struct Isolator<'a> {
    f: &'a TilingFamily,
    class_of: Vec<usize>,
    windows: HashMap<(usize, usize, usize), BTreeSet<Pattern>>,
    lattices: Vec<Option<PeriodLattice>>,
}

impl<'a> Isolator<'a> {
    fn new(f: &'a TilingFamily) -> Self {
        let mut class_of = vec![0; f.len()];
        for (c, members) in equivalence_classes(f).iter().enumerate() {
            for &i in members {
                class_of[i] = c;
            }
        }
        Isolator {
            f,
            class_of,
            windows: HashMap::new(),
            lattices: vec![None; f.len()],
        }
    }

    fn windows(&mut self, i: usize, w: usize, h: usize) -> &BTreeSet<Pattern> {
        let f = self.f;
        self.windows
            .entry((i, w, h))
            .or_insert_with(|| f.member(i).rect_windows(w, h))
    }

    fn lattice(&mut self, i: usize) -> PeriodLattice {
        let f = self.f;
        self.lattices[i]
            .get_or_insert_with(|| f.member(i).period_lattice())
            .clone()
    }

    fn isolate(&mut self, x: usize, alive: &[bool], n: usize) -> Option<Pattern> {
        let others: Vec<usize> = (0..self.f.len())
            .filter(|&j| alive[j] && self.class_of[j] != self.class_of[x])
            .collect();
        let mut sizes: Vec<(usize, usize)> = (1..=n).flat_map(|w| (1..=n).map(move |h| (w, h))).collect();
        sizes.sort_by_key(|&(w, h)| (w * h, w, h));
        for (w, h) in sizes {
            let candidates: Vec<Pattern> = self.windows(x, w, h).iter().cloned().collect();
            for j in &others {
                self.windows(*j, w, h);
            }
            for p in candidates {
                if others.iter().any(|j| self.windows[&(*j, w, h)].contains(&p)) {
                    continue;
                }
                let (hits, _) = self.f.member(x).scan_occurrences(&p);
                let lattice = self.lattice(x);
                let t0 = hits[0];
                if hits.iter().all(|&t| lattice.contains(t - t0)) {
                    return Some(p);
                }
            }
        }
        None
    }
}

/// The first pattern, smallest area first, that isolates member `x` within
/// `f`, searching rectangles up to `n`×`n`.
pub fn isolating_pattern(f: &TilingFamily, x: usize, n: usize) -> Option<Pattern> {
    let alive = vec![true; f.len()];
    Isolator::new(f).isolate(x, &alive, n)
}

/// `f` without its isolated members, at the family's window.
pub fn derivative(f: &TilingFamily) -> TilingFamily {
    let mut iso = Isolator::new(f);
    let alive = vec![true; f.len()];
    let n = f.window();
    let isolated: Vec<bool> = (0..f.len()).map(|i| iso.isolate(i, &alive, n).is_some()).collect();
    f.subset(|i| !isolated[i])
}

pub fn ranks(f: &TilingFamily) -> RankReport {
    let n = f.window();
    let mut iso = Isolator::new(f);
    let mut alive = vec![true; f.len()];
    let mut rank = vec![None; f.len()];
    let mut step = 0;
    loop {
        let removed: Vec<usize> = (0..f.len())
            .filter(|&i| alive[i])
            .filter(|&i| iso.isolate(i, &alive, n).is_some())
            .collect();
        if removed.is_empty() {
            break;
        }
        step += 1;
        for i in removed {
            alive[i] = false;
            rank[i] = Some(step);
        }
    }
    RankReport {
        ranks: (0..f.len()).map(|i| (f.name(i).to_string(), rank[i])).collect(),
        family_rank: step,
        residue: (0..f.len())
            .filter(|&i| alive[i])
            .map(|i| f.name(i).to_string())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stripes;

    fn family(names: &[&str], window: usize) -> TilingFamily {
        let all = stripes::family(6);
        let members = names
            .iter()
            .map(|n| all.iter().find(|(m, _)| m == n).unwrap().clone())
            .collect();
        TilingFamily::new(&stripes::tileset(), members, window).unwrap()
    }

    #[test]
    fn lone_stripe_needs_a_boundary() {
        // No single cell pins down a row; a vertical pair at the top edge does.
        let f = family(&["b2"], 4);
        let p = isolating_pattern(&f, 0, 4).unwrap();
        assert_eq!((p.width(), p.height()), (1, 2));
    }

    #[test]
    fn stripe_isolated_from_monochromes() {
        let f = family(&["all_black", "all_white", "all_green", "b1"], 4);
        let p = isolating_pattern(&f, 3, 4).unwrap();
        let (hits, _) = f.member(3).scan_occurrences(&p);
        assert!(hits.iter().all(|t| t.y == hits[0].y));
        // A white column taller than the stripe isolates all_white too.
        let d = derivative(&f);
        assert_eq!(d.names(), &["all_black", "all_green"]);
        assert!(isolating_pattern(&f, 0, 4).is_none());
        assert!(isolating_pattern(&d, 0, 4).is_some());
    }

    #[test]
    fn ranks_on_a_chain() {
        let f = family(&["all_green", "all_white", "all_black", "green_white", "white_black", "b1"], 4);
        let r = ranks(&f);
        assert_eq!(r.family_rank, 2);
        assert!(r.residue.is_empty());
        assert_eq!(r.ranks[5].1, Some(1));
        assert_eq!(r.ranks[0].1, Some(2));
    }
}
