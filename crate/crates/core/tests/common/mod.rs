#![allow(dead_code)]

use std::sync::Arc;

use gforge::corpus;
use gforge::twisted::h2_classes;
use gforge::{Cocycle, Group, Presentation, Subgroup};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn groups() -> Vec<Arc<Group>> {
    corpus::small_groups()
}

pub fn random_group(rng: &mut ChaCha8Rng, max_order: usize) -> Arc<Group> {
    let gs: Vec<_> = groups().into_iter().filter(|g| g.order() <= max_order).collect();
    gs.choose(rng).unwrap().clone()
}

/// Subgroup generated by up to two random elements.
pub fn random_subgroup(rng: &mut ChaCha8Rng, g: &Arc<Group>) -> Arc<Subgroup> {
    let k = rng.gen_range(0..=2);
    let gens: Vec<usize> = (0..k).map(|_| rng.gen_range(0..g.order())).collect();
    let elems = g.closure(&gens);
    Arc::new(Subgroup::new(g.clone(), &elems).unwrap())
}

/// A class representative shifted by a random coboundary.
pub fn random_cocycle(rng: &mut ChaCha8Rng, h: &Arc<Subgroup>) -> Cocycle {
    let m = *[1u32, 2, 3, 4].choose(rng).unwrap();
    let reps = h2_classes(h.clone(), m, 16).unwrap();
    let alpha = reps.choose(rng).unwrap().clone();
    let f: Vec<u32> = (0..h.order()).map(|i| if i == 0 { 0 } else { rng.gen_range(0..m) }).collect();
    alpha.shift(&f)
}

pub fn random_tuple(rng: &mut ChaCha8Rng, g: &Group, max_len: usize) -> Vec<usize> {
    let n = rng.gen_range(1..=max_len);
    (0..n).map(|_| rng.gen_range(0..g.order())).collect()
}

/// Random presentation with `|G| ≤ max_order` and tuple length `≤ max_len`.
pub fn random_presentation(seed: u64, max_order: usize, max_len: usize) -> Presentation {
    let mut r = rng(seed);
    let g = random_group(&mut r, max_order);
    let h = random_subgroup(&mut r, &g);
    let alpha = random_cocycle(&mut r, &h);
    let tuple = random_tuple(&mut r, &g, max_len);
    Presentation::new(alpha, tuple).unwrap()
}

/// Random connected presentation; falls back to `G = H` when the draw is disconnected.
pub fn random_connected(seed: u64, max_order: usize, max_len: usize) -> Presentation {
    for k in 0..32 {
        let p = random_presentation(seed.wrapping_add(k * 0x9e37_79b9), max_order, max_len);
        if p.validate().connected {
            return p;
        }
    }
    corpus::pauli_presentation()
}

pub fn random_move(rng: &mut ChaCha8Rng, p: &Presentation) -> gforge::Move {
    let g = p.group();
    match rng.gen_range(0..3) {
        0 => {
            let hs = p.subgroup().elements();
            gforge::Move::I { pos: rng.gen_range(0..p.len()), h: *hs.choose(rng).unwrap() }
        }
        1 => {
            let mut perm: Vec<usize> = (0..p.len()).collect();
            perm.shuffle(rng);
            gforge::Move::II(perm)
        }
        _ => gforge::Move::III(rng.gen_range(0..g.order())),
    }
}
