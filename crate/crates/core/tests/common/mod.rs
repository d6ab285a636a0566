//! Deterministic module corpora shared by the integration tests.
#![allow(dead_code)]

use gradus::ring::{monomials_of_degree, FieldKind, Monomial, Polynomial, Ring, RingDescriptor};
use gradus::ModulePresentation;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const NAMES: [&str; 3] = ["x", "y", "z"];

pub fn random_ring(rng: &mut ChaCha8Rng, field: FieldKind) -> Ring {
    let n = rng.gen_range(1..=3);
    let vars: Vec<(&str, u32)> = (0..n).map(|i| (NAMES[i], *[1u32, 2, 3].choose(rng).unwrap())).collect();
    RingDescriptor::new(field, &vars).unwrap()
}

/// A random homogeneous polynomial of weighted degree `d`; zero when no monomial has that degree.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, ring: &Ring, d: i64) -> Polynomial {
    let pool = monomials_of_degree(ring.weights(), d);
    if pool.is_empty() {
        return Polynomial::zero(ring);
    }
    let mut terms: Vec<(Monomial, i64)> = Vec::new();
    for m in &pool {
        if rng.gen_bool(0.5) {
            terms.push((m.clone(), *[-3i64, -2, -1, 1, 2, 3].choose(rng).unwrap()));
        }
    }
    if terms.is_empty() {
        terms.push((pool.choose(rng).unwrap().clone(), 1));
    }
    let f = ring.field();
    Polynomial::from_terms(ring, terms.into_iter().map(|(m, c)| (m, f.from_i64(c))))
}

pub fn random_ideal(rng: &mut ChaCha8Rng, ring: &Ring) -> Vec<Polynomial> {
    let count = rng.gen_range(1..=3);
    let mut gens = Vec::new();
    while gens.len() < count {
        let d = rng.gen_range(1..=4);
        let g = random_homogeneous(rng, ring, d);
        if !g.is_zero() {
            gens.push(g);
        }
    }
    gens
}

pub fn random_column(rng: &mut ChaCha8Rng, ring: &Ring, shifts: &[i64]) -> Vec<Polynomial> {
    loop {
        let top = shifts.iter().max().unwrap();
        let delta = rng.gen_range(top + 1..=top + 3);
        let col: Vec<Polynomial> = shifts
            .iter()
            .map(|a| {
                if delta - a <= 4 && rng.gen_bool(0.8) {
                    random_homogeneous(rng, ring, delta - a)
                } else {
                    Polynomial::zero(ring)
                }
            })
            .collect();
        if col.iter().any(|p| !p.is_zero()) {
            return col;
        }
    }
}

/// Thirty modules: free modules with shifts, cyclic quotients by random
/// homogeneous ideals, and rank-two presentations, over at most three
/// variables with weights in {1,2,3}.
pub fn corpus() -> Vec<ModulePresentation> {
    let mut rng = ChaCha8Rng::seed_from_u64(20240601);
    let mut out = Vec::new();
    for i in 0..30 {
        let field = if i % 10 == 9 { FieldKind::Prime(101) } else { FieldKind::Rationals };
        let ring = random_ring(&mut rng, field);
        let m = match i % 5 {
            0 => {
                let rank = rng.gen_range(1..=2);
                let shifts = (0..rank).map(|_| rng.gen_range(-3..=3)).collect();
                ModulePresentation::free(&ring, shifts)
            }
            1..=3 => {
                let ideal = random_ideal(&mut rng, &ring);
                ModulePresentation::cyclic(&ring, &ideal).unwrap().shift(rng.gen_range(-3..=3))
            }
            _ => {
                let shifts: Vec<i64> = (0..2).map(|_| rng.gen_range(-3..=3)).collect();
                let ncols = rng.gen_range(1..=3);
                let cols = (0..ncols).map(|_| random_column(&mut rng, &ring, &shifts)).collect();
                ModulePresentation::new(&ring, shifts, cols).unwrap()
            }
        };
        out.push(m);
    }
    out
}

/// `(ring, monomial generators)` with at most three variables, weights in
/// {1,2,3} and generators of weighted degree at most 4; never the unit ideal.
pub fn monomial_instances(count: usize, seed: u64) -> Vec<(Ring, Vec<Monomial>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let ring = random_ring(&mut rng, FieldKind::Rationals);
        let mut pool: Vec<Monomial> = (1..=4).flat_map(|d| monomials_of_degree(ring.weights(), d)).collect();
        pool.shuffle(&mut rng);
        let k = rng.gen_range(1..=4).min(pool.len());
        if k == 0 {
            continue;
        }
        out.push((ring, pool.into_iter().take(k).collect()));
    }
    out
}
