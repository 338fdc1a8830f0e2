//! Random instances shared by the integration and acceptance tests.
#![allow(dead_code)]

use morse_core::{Simplex, SimplexPool, Stack, Vertex, VertexMap, Weight};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Simplex on the vertices selected by the bits of `mask`.
pub fn from_mask(mask: u32) -> Simplex {
    Simplex::new((0..32).filter(|b| mask & (1 << b) != 0).collect()).expect("non-empty mask")
}

/// Closure of random simplexes on between half of and all of
/// `max_vertices` vertices, mostly of dimension 1 to 3.
pub fn random_complex(rng: &mut impl Rng, max_vertices: u32) -> SimplexPool {
    let n = rng.gen_range(max_vertices.div_ceil(2)..=max_vertices);
    let vertices: Vec<Vertex> = (0..n).collect();
    let generators = rng.gen_range(1..=2 * n as usize);
    SimplexPool::from_generators((0..generators).map(|_| {
        let size = if rng.gen_bool(0.05) {
            n as usize
        } else {
            rng.gen_range(1..=(n as usize).min(4))
        };
        let chosen: Vec<Vertex> = vertices.choose_multiple(rng, size).copied().collect();
        Simplex::new(chosen).expect("distinct vertices")
    }))
}

/// A random stack on a simplicial `k`: each simplex is at least as heavy as
/// its heaviest facet, often equal to it.
pub fn random_stack(rng: &mut impl Rng, k: &SimplexPool, levels: Weight) -> Stack {
    let mut w: Vec<Weight> = Vec::with_capacity(k.len());
    for i in 0..k.len() {
        let floor = k.face_indices(i).iter().map(|&f| w[f]).max();
        w.push(match floor {
            None => rng.gen_range(0..levels),
            Some(m) if rng.gen_bool(0.6) => m,
            Some(m) => m + rng.gen_range(1..=2),
        });
    }
    Stack::new(k, w).expect("monotone by construction")
}

/// A stack with every simplex at one of `levels` values, usually not monotone.
pub fn arbitrary_weights(rng: &mut impl Rng, k: &SimplexPool, levels: Weight) -> Stack {
    Stack::unchecked((0..k.len()).map(|_| rng.gen_range(0..levels)).collect())
}

/// A random injective map on the vertices of `k`.
pub fn random_injective(rng: &mut impl Rng, k: &SimplexPool) -> VertexMap {
    let vertices = k.vertex_ids();
    let mut values: Vec<Weight> = (0..vertices.len() as Weight).map(|x| 3 * x - 7).collect();
    values.shuffle(rng);
    vertices.into_iter().zip(values).collect()
}

/// A random vertex map on `k` drawing from `levels` values, ties allowed.
pub fn random_vertex_map(rng: &mut impl Rng, k: &SimplexPool, levels: Weight) -> VertexMap {
    k.vertex_ids()
        .into_iter()
        .map(|v: Vertex| (v, rng.gen_range(0..levels)))
        .collect()
}

/// A random subcomplex of `k`: the closure of some of its simplexes.
pub fn random_subcomplex(rng: &mut impl Rng, k: &SimplexPool) -> SimplexPool {
    let p = rng.gen_range(0.0..0.4);
    SimplexPool::from_generators(k.iter().filter(|_| rng.gen_bool(p)).cloned())
}
