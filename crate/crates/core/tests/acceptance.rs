//! End-to-end acceptance checks. Runs without the test harness so every
//! criterion prints its PASS or FAIL line; exits non-zero if any fails.

mod common;
mod oracle;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::TestRunner;

use tilings::cb::{derivative, ranks};
use tilings::lang::{admissible_squares, count_admissible, count_torus, extensible_squares};
use tilings::order::{hasse, TilingFamily};
use tilings::presentation::{GridPresentation, TilingType};
use tilings::solver::{enumerate_torus, refute, weak_periodic_witness};
use tilings::stripes;
use tilings::tiles::{TileSet, Vec2};

use common::*;

fn report(id: u32, what: &str, failures: &[String]) -> bool {
    if failures.is_empty() {
        println!("PASS criterion {id}: {what}");
    } else {
        println!("FAIL criterion {id}: {what}");
        for f in failures {
            println!("    {f}");
        }
    }
    failures.is_empty()
}

fn check(failures: &mut Vec<String>, ok: bool, msg: impl FnOnce() -> String) {
    if !ok {
        failures.push(msg());
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn criterion_1_pattern_language() -> bool {
    let mut fails = Vec::new();
    let s = stripes();
    let c = checkerboard();
    let mut cases = vec![(&s, "stripes", 1, 4), (&s, "stripes", 2, 11)];
    for n in 1..=5 {
        cases.push((&c, "checkerboard", n, 2));
    }
    for (ts, name, n, want) in cases {
        let (got, t) = timed(|| count_admissible(ts, n).unwrap());
        check(&mut fails, got == want as u64, || format!("{name} n={n}: {got}, expected {want}"));
        check(&mut fails, t < Duration::from_secs(1), || format!("{name} n={n} took {t:?}"));
        let set = admissible_squares(ts, n).unwrap();
        check(&mut fails, set.len() as u64 == got, || format!("{name} n={n}: listed {} squares", set.len()));
        if n <= 4 {
            let brute = oracle::admissible_count(ts, n);
            check(&mut fails, brute == want, || format!("oracle {name} n={n}: {brute}"));
        }
    }
    report(1, "admissible square counts (stripes 4, 11; checkerboard 2 for n = 1..5)", &fails)
}

fn criterion_2_periodic_enumeration() -> bool {
    let mut fails = Vec::new();
    let s = stripes();
    let c = checkerboard();

    let found = enumerate_torus(&s, 4, 4).unwrap();
    let mono: BTreeSet<_> = found.iter().filter(|t| t.p() == 1 && t.q() == 1).collect();
    check(&mut fails, found.len() == 4 && mono.len() == 4, || {
        format!("stripes 4x4: {} classes", found.len())
    });
    let found = enumerate_torus(&c, 2, 2).unwrap();
    check(&mut fails, found.len() == 1, || format!("checkerboard 2x2: {} classes", found.len()));

    for (ts, name) in [(&s, "stripes"), (&c, "checkerboard")] {
        for (mp, mq) in [(3, 3), (4, 2), (2, 4)] {
            let lib: BTreeSet<_> = enumerate_torus(ts, mp, mq)
                .unwrap()
                .into_iter()
                .map(|t| {
                    let rows: Vec<Vec<_>> = (0..t.q() as i64)
                        .map(|y| (0..t.p() as i64).map(|x| t.get(x, y)).collect())
                        .collect();
                    (t.p(), t.q(), oracle::canonical(&rows))
                })
                .collect();
            let brute = oracle::torus_classes(ts, mp, mq);
            check(&mut fails, lib == brute, || format!("{name} {mp}x{mq}: library and oracle tori differ"));
        }
    }

    let mut rng = seeded(0x7117);
    let mut sets: Vec<(String, TileSet)> = vec![("stripes".into(), s), ("checkerboard".into(), c)];
    for i in 0..200 {
        sets.push((format!("random #{i}"), random_dominoes(&mut rng)));
    }
    for (name, ts) in &sets {
        for p in 1..=3 {
            for q in 1..=3 {
                let got = count_torus(ts, p, q).unwrap();
                let want = oracle::torus_count(ts, p, q);
                check(&mut fails, got == want, || format!("{name} {p}x{q}: {got} vs brute {want}"));
            }
        }
    }
    report(2, "torus enumeration and transfer-graph counts match brute force", &fails)
}

fn criterion_3_weak_periodic_witness() -> bool {
    let mut fails = Vec::new();
    let s = stripes();
    match weak_periodic_witness(&s, 1).unwrap() {
        None => fails.push("stripes: no witness".into()),
        Some(g) => {
            check(&mut fails, g.is_valid(&s).unwrap(), || "witness is not a tiling".into());
            let l = g.period_lattice();
            check(&mut fails, l.rank() == 1 && l.generators() == [Vec2::new(0, 1)], || {
                format!("lattice {:?}", l.generators())
            });
            let brute = oracle::periods(&g, 6);
            check(&mut fails, brute.iter().all(|v| v.x == 0) && brute.contains(&Vec2::new(0, 1)), || {
                format!("oracle periods {brute:?}")
            });
        }
    }
    check(&mut fails, weak_periodic_witness(&checkerboard(), 4).unwrap().is_none(), || {
        "checkerboard produced a witness".into()
    });
    report(3, "stripes has a tiling with exactly one period direction (0,1); checkerboard none", &fails)
}

fn names(f: &TilingFamily, classes: &[Vec<usize>]) -> BTreeSet<String> {
    classes.iter().map(|c| f.name(c[0]).to_string()).collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn series(prefix: &str, max: usize) -> Vec<String> {
    (1..=max).map(|i| format!("{prefix}{i}")).collect()
}

fn criterion_4_preorder_and_hasse() -> bool {
    let mut fails = Vec::new();
    let window = 6;
    let members = corpus();
    let (f, t) = timed(|| {
        let f = TilingFamily::new(&stripes(), members.clone(), window).unwrap();
        let h = hasse(&f);
        (f, h)
    });
    let (f, h) = f;
    check(&mut fails, t < Duration::from_secs(10), || format!("took {t:?}"));

    for i in 0..f.len() {
        for j in 0..f.len() {
            let brute = oracle::preceq(f.member(i), f.member(j), window);
            check(&mut fails, f.leq(i, j) == brute, || {
                format!("{} <= {}: library {}, oracle {brute}", f.name(i), f.name(j), f.leq(i, j))
            });
        }
    }

    let classes: Vec<Vec<usize>> = (0..h.class_count()).map(|c| h.class(c).to_vec()).collect();
    let minimal = names(&f, &h.minimal().iter().map(|&c| classes[c].clone()).collect::<Vec<_>>());
    let maximal = names(&f, &h.maximal().iter().map(|&c| classes[c].clone()).collect::<Vec<_>>());
    let want_min = set(&["all_red", "all_green", "all_white", "all_black"]);
    check(&mut fails, minimal == want_min, || format!("minimal classes {minimal:?}"));
    let want_max: BTreeSet<String> = series("a", 6).into_iter().collect();
    check(&mut fails, maximal == want_max, || format!("maximal classes {maximal:?}"));

    let white = h.class_named("all_white").unwrap();
    let above: BTreeSet<String> = (0..h.class_count())
        .filter(|&c| h.below(white, c))
        .map(|c| h.label(c).to_string())
        .collect();
    let want_above = set(&["red_white", "green_white", "white_black", "red_green_white", "red_white_black"]);
    check(&mut fails, above == want_above, || format!("all_white lies below {above:?}"));

    for i in 1..=6 {
        let b = h.class_named(&format!("b{i}")).unwrap();
        let a = h.class_named(&format!("a{i}")).unwrap();
        check(&mut fails, h.edges().contains(&(b, a)), || format!("b{i} is not covered by a{i}"));
    }
    report(4, "extraction order on the corpus at window 6 (minima, maxima, all_white, covers)", &fails)
}

fn expected_ranks(max_i: usize) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    for n in series("a", max_i) {
        out.push((n, 1));
    }
    for n in series("b", max_i).into_iter().chain(["red_green_white".into(), "red_white_black".into()]) {
        out.push((n, 2));
    }
    for n in ["red_green", "red_white", "red_black", "green_white", "white_black"] {
        out.push((n.into(), 3));
    }
    for n in ["all_red", "all_green", "all_white", "all_black"] {
        out.push((n.into(), 4));
    }
    out
}

fn rank_table(window: usize, max_i: usize, fails: &mut Vec<String>) -> Vec<(String, Option<usize>)> {
    let members = stripes::family(max_i);
    let f = TilingFamily::new(&stripes(), members.clone(), window).unwrap();
    let r = ranks(&f);

    let brute = oracle::ranks(&members, window);
    for ((name, got), want) in r.ranks.iter().zip(&brute) {
        check(fails, got == want, || format!("n={window} i<={max_i} {name}: library {got:?}, oracle {want:?}"));
    }

    let mut wrong = Vec::new();
    for (name, want) in expected_ranks(max_i) {
        let got = r.ranks.iter().find(|(n, _)| *n == name).unwrap().1;
        if got != Some(want) {
            wrong.push(format!("{name}={}", got.map_or("unranked".into(), |k| k.to_string())));
        }
    }
    check(fails, wrong.is_empty(), || {
        format!("n={window} i<={max_i}: unexpected ranks {}", wrong.join(" "))
    });
    check(fails, r.family_rank == 4 && r.residue.is_empty(), || {
        format!("n={window} i<={max_i}: family rank {}, residue {:?}", r.family_rank, r.residue)
    });

    let d = derivative(&f);
    let removed: BTreeSet<String> = f.names().iter().filter(|n| d.index_of(n).is_none()).cloned().collect();
    let want: BTreeSet<String> = series("a", max_i).into_iter().collect();
    check(fails, removed == want, || format!("n={window} i<={max_i}: first derivative removes {removed:?}"));
    r.ranks
}

fn criterion_5_cantor_bendixson() -> bool {
    let mut fails = Vec::new();
    let small = rank_table(6, 6, &mut fails);
    let large = rank_table(8, 12, &mut fails);
    let common: Vec<_> = large.iter().filter(|(n, _)| small.iter().any(|(m, _)| m == n)).cloned().collect();
    check(&mut fails, common == small, || "rank tables differ between (6, i<=6) and (8, i<=12)".into());
    report(5, "rank table A=1, B/limits=2, half-planes=3, monochromes=4 at (6, i<=6) and (8, i<=12)", &fails)
}

fn criterion_6_rank_anti_monotonicity() -> bool {
    let mut fails = Vec::new();
    for (window, max_i) in [(6, 6), (8, 6), (8, 12)] {
        let f = TilingFamily::new(&stripes(), stripes::family(max_i), window).unwrap();
        let r = ranks(&f);
        let mut pairs = 0;
        for x in 0..f.len() {
            for y in 0..f.len() {
                let strict = f.leq(x, y) && !f.leq(y, x);
                if let (true, Some(rx), Some(ry)) = (strict, r.ranks[x].1, r.ranks[y].1) {
                    pairs += 1;
                    check(&mut fails, rx > ry, || {
                        format!("n={window}: {} (rank {rx}) below {} (rank {ry})", f.name(x), f.name(y))
                    });
                }
            }
        }
        check(&mut fails, pairs > 0, || format!("n={window} i<={max_i}: no ranked pairs to compare"));
    }
    report(6, "x strictly below y implies rank(x) > rank(y)", &fails)
}

fn criterion_7_checkerboard_has_one_class() -> bool {
    let mut fails = Vec::new();
    let c = checkerboard();
    for n in 1..=5 {
        let a = count_admissible(&c, n).unwrap();
        check(&mut fails, a == 2, || format!("admissible({n}) = {a}"));
        let e = extensible_squares(&c, n, 1).unwrap().len();
        check(&mut fails, e == 2, || format!("extensible({n}, 1) = {e}"));
    }
    let classes = enumerate_torus(&c, 5, 5).unwrap();
    check(&mut fails, classes.len() == 1, || format!("{} torus classes up to 5x5", classes.len()));
    report(7, "checkerboard: constant language of size 2 and a single tiling class", &fails)
}

fn suite(name: &str, cases: u32, seed: u64, fails: &mut Vec<String>, body: impl FnOnce(&mut TestRunner) -> Result<(), String>) {
    let mut runner = TestRunner::new(config(cases, seed));
    if let Err(e) = body(&mut runner) {
        fails.push(format!("{name}: {e}"));
    }
}

fn criterion_8_property_suites() -> bool {
    let start = Instant::now();
    let mut fails = Vec::new();
    const CASES: u32 = 256;

    suite("extensibility shrinks with margin", CASES, 1, &mut fails, |r| {
        r.run(&(domino_strategy(2), 1usize..=3, 0usize..=2), |(ts, n, m)| {
            let base = admissible_squares(&ts, n).unwrap();
            let e0 = extensible_squares(&ts, n, m).unwrap();
            let e1 = extensible_squares(&ts, n, m + 1).unwrap();
            prop_assert!(e1.is_subset(&e0) && e0.is_subset(&base));
            Ok(())
        })
        .map_err(|e| e.to_string())
    });

    suite("admissibility is hereditary", CASES, 2, &mut fails, |r| {
        r.run(&(domino_strategy(3), 2usize..=3), |(ts, n)| {
            let small = admissible_squares(&ts, n - 1).unwrap();
            for p in admissible_squares(&ts, n).unwrap() {
                for (dx, dy) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
                    let sub = tilings::tiles::Pattern::rect(n - 1, n - 1, |x, y| {
                        p.get(Vec2::new(x + dx, y + dy)).unwrap()
                    });
                    prop_assert!(small.contains(&sub));
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
    });

    suite("refute excludes tori", CASES, 3, &mut fails, |r| {
        r.run(&(domino_strategy(2), 1usize..=3), |(ts, n)| {
            if refute(&ts, n).unwrap() {
                prop_assert!(enumerate_torus(&ts, 3, 3).unwrap().is_empty());
                for p in 1..=3 {
                    for q in 1..=3 {
                        prop_assert_eq!(count_torus(&ts, p, q).unwrap(), 0);
                    }
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
    });

    suite("shift invariance", CASES, 4, &mut fails, |r| {
        r.run(&(presentation_strategy(), -5i64..=5, -5i64..=5, 1usize..=3), |(g, dx, dy, n)| {
            let s = g.shift(Vec2::new(dx, dy));
            prop_assert_eq!(g.pattern_set(n), s.pattern_set(n));
            prop_assert_eq!(g.type_of(), s.type_of());
            prop_assert_eq!(g.period_lattice(), s.period_lattice());
            Ok(())
        })
        .map_err(|e| e.to_string())
    });

    let members: Vec<GridPresentation> = corpus().into_iter().map(|(_, g)| g).collect();
    let k = members.len();
    suite("preceq is transitive", CASES, 5, &mut fails, |r| {
        r.run(&(0..k, 0..k, 0..k, 1usize..=5), |(a, b, c, n)| {
            let (x, y, z) = (&members[a], &members[b], &members[c]);
            let xy = x.pattern_set(n).is_subset(&y.pattern_set(n));
            let yz = y.pattern_set(n).is_subset(&z.pattern_set(n));
            if xy && yz {
                prop_assert!(x.pattern_set(n).is_subset(&z.pattern_set(n)));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
    });

    suite("pattern sets are stable under a wider scan", CASES, 6, &mut fails, |r| {
        r.run(&(presentation_strategy(), 1usize..=3, 1usize..=4), |(g, n, extra)| {
            prop_assert_eq!(g.pattern_set(n), g.pattern_set_with_margin(n, extra));
            Ok(())
        })
        .map_err(|e| e.to_string())
    });

    suite("type b has no periods", CASES, 7, &mut fails, |r| {
        r.run(&presentation_strategy(), |g| {
            if let TilingType::TypeB(_) = g.type_of() {
                prop_assert_eq!(g.period_lattice().rank(), 0);
            }
            Ok(())
        })
        .map_err(|e| e.to_string())
    });

    let t = start.elapsed();
    check(&mut fails, t < Duration::from_secs(60), || format!("suites took {t:?}"));
    report(8, "structural property suites (256 cases each, fixed seeds)", &fails)
}

fn main() {
    let criteria: [fn() -> bool; 8] = [
        criterion_1_pattern_language,
        criterion_2_periodic_enumeration,
        criterion_3_weak_periodic_witness,
        criterion_4_preorder_and_hasse,
        criterion_5_cantor_bendixson,
        criterion_6_rank_anti_monotonicity,
        criterion_7_checkerboard_has_one_class,
        criterion_8_property_suites,
    ];
    let mut failed = 0;
    for c in criteria {
        if !std::panic::catch_unwind(c).unwrap_or(false) {
            failed += 1;
        }
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
