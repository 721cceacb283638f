//! Deterministic sampling of rings, polynomials and modules for property
//! suites. A fixed seed reproduces the same objects on any platform or
//! thread count, which keeps certificates bit-identical.

use crate::module::{FreeModule, ModuleElement, ModuleMap, PresentedModule};
use crate::poly::Polynomial;
use crate::ring::GradedRing;
use std::sync::Arc;

/// splitmix64; tiny, stable, and good enough for test sampling.
#[derive(Debug, Clone)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `0..n` (n > 0).
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    pub fn flip(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }
}

/// Random homogeneous polynomial of the given weighted degree: a nonempty
/// random subset of the degree's monomials when one exists.
pub fn homogeneous_poly(rng: &mut Rng, ring: &Arc<GradedRing>, degree: i64) -> Polynomial {
    let monos = ring.monomials_of_degree(degree);
    if monos.is_empty() {
        return Polynomial::zero(ring);
    }
    loop {
        let picked: Vec<_> = monos.iter().copied().filter(|_| rng.flip()).collect();
        if !picked.is_empty() {
            return Polynomial::from_monomials(ring, picked);
        }
    }
}

/// Random polynomial with terms in degrees up to `max_degree`.
pub fn poly_up_to(rng: &mut Rng, ring: &Arc<GradedRing>, max_degree: i64) -> Polynomial {
    let mut acc = Polynomial::zero(ring);
    for d in 0..=max_degree {
        if rng.flip() {
            acc = acc.add(&homogeneous_poly(rng, ring, d)).unwrap();
        }
    }
    acc
}

/// Small random graded ring: 2 or 3 variables, degrees in {1, 2}.
pub fn small_ring(rng: &mut Rng) -> Arc<GradedRing> {
    let nvars = 2 + rng.below(2);
    let names: Vec<String> = (0..nvars).map(|i| format!("x{i}")).collect();
    let degrees: Vec<i64> = (0..nvars).map(|_| 1 + rng.below(2) as i64).collect();
    GradedRing::new(names, degrees).unwrap()
}

/// Random graded module presentation: a free ambient with small twists and a
/// handful of homogeneous relation columns.
pub fn presented_module(rng: &mut Rng, ring: &Arc<GradedRing>) -> PresentedModule {
    let rank = 1 + rng.below(3);
    let twists: Vec<i64> = (0..rank).map(|_| rng.below(3) as i64).collect();
    let ambient = FreeModule::new(ring, twists.clone());
    let n_rels = rng.below(4);
    let mut columns = Vec::new();
    for _ in 0..n_rels {
        let col_degree = *twists.iter().max().unwrap() + 1 + rng.below(3) as i64;
        let coords: Vec<Polynomial> = twists
            .iter()
            .map(|&t| {
                if rng.flip() {
                    homogeneous_poly(rng, ring, col_degree - t)
                } else {
                    Polynomial::zero(ring)
                }
            })
            .collect();
        let elem = ModuleElement::new(&ambient, coords).unwrap();
        if !elem.is_zero() {
            columns.push(elem);
        }
    }
    PresentedModule::new(ModuleMap::from_columns(&ambient, columns).unwrap())
}

/// Random homogeneous map between small free modules.
pub fn module_map(rng: &mut Rng, ring: &Arc<GradedRing>) -> ModuleMap {
    let t_rank = 1 + rng.below(2);
    let t_twists: Vec<i64> = (0..t_rank).map(|_| rng.below(2) as i64).collect();
    let target = FreeModule::new(ring, t_twists.clone());
    let s_rank = 1 + rng.below(3);
    let mut columns = Vec::new();
    for _ in 0..s_rank {
        let deg = t_twists.iter().max().unwrap() + 1 + rng.below(3) as i64;
        let coords: Vec<Polynomial> = t_twists
            .iter()
            .map(|&t| homogeneous_poly(rng, ring, deg - t))
            .collect();
        let elem = ModuleElement::new(&target, coords).unwrap();
        if !elem.is_zero() {
            columns.push(elem);
        }
    }
    ModuleMap::from_columns(&target, columns).unwrap()
}
