//! Shared fixtures and random generators for the integration tests.

#![allow(dead_code)]

use std::path::PathBuf;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tilings::io::{load_family_dir, load_tileset};
use tilings::presentation::{Block, GridPresentation};
use tilings::tiles::{Alphabet, State, TileSet};

pub fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(rel)
}

pub fn stripes() -> TileSet {
    load_tileset(data("examples/stripes.tiles")).unwrap()
}

pub fn checkerboard() -> TileSet {
    load_tileset(data("examples/checkerboard.tiles")).unwrap()
}

pub fn corpus() -> Vec<(String, GridPresentation)> {
    load_family_dir(data("corpus"), stripes().alphabet()).unwrap()
}

pub fn config(cases: u32, seed: u64) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

/// Two-letter tile-set whose horizontal and vertical pairs are each allowed
/// with probability one half.
pub fn random_dominoes(rng: &mut ChaCha8Rng) -> TileSet {
    let a = Alphabet::new(["a", "b"]).unwrap();
    let pairs = [("a", "a"), ("a", "b"), ("b", "a"), ("b", "b")];
    let h: Vec<_> = pairs.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
    let v: Vec<_> = pairs.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
    TileSet::dominoes(a, &h, &v).unwrap()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn domino_strategy(states: usize) -> impl Strategy<Value = TileSet> {
    let k = states;
    (prop::collection::vec(any::<bool>(), k * k), prop::collection::vec(any::<bool>(), k * k)).prop_map(
        move |(h, v)| {
            let names: Vec<String> = (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect();
            let pick = |mask: &[bool]| -> Vec<(String, String)> {
                (0..k * k)
                    .filter(|&i| mask[i])
                    .map(|i| (names[i / k].clone(), names[i % k].clone()))
                    .collect()
            };
            let hp = pick(&h);
            let vp = pick(&v);
            let hr: Vec<(&str, &str)> = hp.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            let vr: Vec<(&str, &str)> = vp.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            TileSet::dominoes(Alphabet::new(names.clone()).unwrap(), &hr, &vr).unwrap()
        },
    )
}

fn cuts() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::btree_set(-3i64..=4, 0..=2).prop_map(|s| s.into_iter().collect())
}

fn block(states: usize) -> impl Strategy<Value = Block> {
    (1usize..=2, 1usize..=2).prop_flat_map(move |(u, v)| {
        prop::collection::vec(0..states as State, u * v).prop_map(move |d| Block::new(u, v, d).unwrap())
    })
}

/// Arbitrary presentations over `a b c` with up to two cuts per axis and
/// blocks of period at most 2.
pub fn presentation_strategy() -> impl Strategy<Value = GridPresentation> {
    (cuts(), cuts()).prop_flat_map(|(xc, yc)| {
        let (r, s) = (xc.len() + 1, yc.len() + 1);
        prop::collection::vec(prop::collection::vec(block(3), s), r).prop_map(move |regions| {
            let a = Alphabet::new(["a", "b", "c"]).unwrap();
            GridPresentation::new(a, xc.clone(), yc.clone(), regions).unwrap()
        })
    })
}
