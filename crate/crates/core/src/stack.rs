//! Stacks: integer weights on a pool that never decrease along face
//! inclusion. Also vertex maps, the stacks they induce, and lower stars.

use std::collections::{BTreeMap, HashMap};

use crate::complex::{CosimplicialComplex, SimplexPool};
use crate::error::Error;
use crate::simplex::{Simplex, Vertex};

pub type Weight = i64;

/// Weights stored densely, aligned with the member indices of one pool.
///
/// A `Stack` does not hold its pool; every operation that reads weights by
/// simplex takes the pool alongside (see [`Stack::on`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stack {
    weights: Vec<Weight>,
}

impl Stack {
    /// Checks size and monotonicity.
    pub fn new(pool: &SimplexPool, weights: Vec<Weight>) -> Result<Self, Error> {
        let stack = Self::unchecked(weights);
        stack.check_size(pool)?;
        if let Some(err) = stack.monotonicity_violation(pool) {
            return Err(err);
        }
        Ok(stack)
    }

    /// Wraps weights without any check.
    pub fn unchecked(weights: Vec<Weight>) -> Self {
        Self { weights }
    }

    /// The constant stack `𝟙_S` (or any other constant).
    pub fn constant(pool: &SimplexPool, value: Weight) -> Self {
        Self::unchecked(vec![value; pool.len()])
    }

    pub fn from_fn(pool: &SimplexPool, f: impl Fn(&Simplex) -> Weight) -> Result<Self, Error> {
        Self::new(pool, pool.iter().map(f).collect())
    }

    /// Fails with [`Error::MissingWeight`] when the map is partial on the pool.
    pub fn from_map(pool: &SimplexPool, map: &HashMap<Simplex, Weight>) -> Result<Self, Error> {
        let weights = pool
            .iter()
            .map(|s| {
                map.get(s)
                    .copied()
                    .ok_or_else(|| Error::MissingWeight(s.clone()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(pool, weights)
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn get(&self, idx: usize) -> Weight {
        self.weights[idx]
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Pairs the stack with its pool for lookups by simplex.
    pub fn on<'a>(&'a self, pool: &'a SimplexPool) -> StackRef<'a> {
        debug_assert_eq!(self.weights.len(), pool.len());
        StackRef { pool, stack: self }
    }

    pub(crate) fn check_size(&self, pool: &SimplexPool) -> Result<(), Error> {
        if self.weights.len() != pool.len() {
            return Err(Error::StackSize {
                expected: pool.len(),
                found: self.weights.len(),
            });
        }
        Ok(())
    }

    /// First pair `σ ⊂ τ` of members with `F(σ) > F(τ)`, over all pairs of
    /// members (not only codimension one).
    pub fn monotonicity_violation(&self, pool: &SimplexPool) -> Option<Error> {
        for (ti, tau) in pool.iter().enumerate() {
            if tau.dim() == 0 {
                continue;
            }
            let full = (1usize << tau.len()) - 1;
            for mask in 1..full {
                let sigma = tau.subset(mask);
                if let Some(si) = pool.index_of(&sigma) {
                    if self.weights[si] > self.weights[ti] {
                        return Some(self.violation(pool, si, ti));
                    }
                }
            }
        }
        None
    }

    /// Codimension-one check through the pool adjacency. Exact for
    /// cosimplicial pools, where any `σ ⊆ τ` is joined by a chain of members.
    pub(crate) fn adjacent_monotonicity_violation(&self, pool: &SimplexPool) -> Option<Error> {
        (0..pool.len()).find_map(|ti| {
            pool.face_indices(ti)
                .iter()
                .find(|&&si| self.weights[si] > self.weights[ti])
                .map(|&si| self.violation(pool, si, ti))
        })
    }

    fn violation(&self, pool: &SimplexPool, si: usize, ti: usize) -> Error {
        Error::NotMonotone {
            face: pool.get(si).clone(),
            face_weight: self.weights[si],
            coface: pool.get(ti).clone(),
            coface_weight: self.weights[ti],
        }
    }

    /// `F_λ = {ν | F(ν) ≤ λ}`.
    pub fn cut(&self, pool: &SimplexPool, lambda: Weight) -> SimplexPool {
        pool.subpool((0..pool.len()).filter(|&i| self.weights[i] <= lambda))
    }

    /// `F[λ] = {ν | F(ν) = λ}`.
    pub fn section(&self, pool: &SimplexPool, lambda: Weight) -> SimplexPool {
        pool.subpool((0..pool.len()).filter(|&i| self.weights[i] == lambda))
    }

    /// Distinct weight values, ascending.
    pub fn levels(&self) -> Vec<Weight> {
        let mut v = self.weights.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// The weights of `pool` members that also belong to `sub`, realigned on `sub`.
    ///
    /// Panics if a member of `sub` is missing from `pool`.
    pub fn restrict(&self, pool: &SimplexPool, sub: &SimplexPool) -> Stack {
        Stack::unchecked(
            sub.iter()
                .map(|s| self.weights[pool.index_of(s).expect("sub-pool member missing from pool")])
                .collect(),
        )
    }
}

/// `true` iff `F` is monotone on `S`. Errors when `F` is not total on `S`.
pub fn validate_stack(f: &Stack, pool: &SimplexPool) -> Result<bool, Error> {
    f.check_size(pool)?;
    Ok(f.monotonicity_violation(pool).is_none())
}

/// A stack borrowed together with the pool it is aligned with.
#[derive(Clone, Copy)]
pub struct StackRef<'a> {
    pool: &'a SimplexPool,
    stack: &'a Stack,
}

impl<'a> StackRef<'a> {
    pub fn weight(&self, s: &Simplex) -> Option<Weight> {
        self.pool.index_of(s).map(|i| self.stack.get(i))
    }

    pub fn pool(&self) -> &'a SimplexPool {
        self.pool
    }

    pub fn stack(&self) -> &'a Stack {
        self.stack
    }
}

/// A map from the vertex set of a complex to the integers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexMap {
    values: BTreeMap<Vertex, Weight>,
}

impl VertexMap {
    pub fn new(values: BTreeMap<Vertex, Weight>) -> Self {
        Self { values }
    }

    pub fn get(&self, v: Vertex) -> Option<Weight> {
        self.values.get(&v).copied()
    }

    pub fn values(&self) -> &BTreeMap<Vertex, Weight> {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Whether the map is a ϑ-map, i.e. injective.
    pub fn is_theta_map(&self) -> bool {
        self.collision().is_none()
    }

    /// Two vertices sharing a value, the smaller value first.
    pub fn collision(&self) -> Option<(Vertex, Vertex, Weight)> {
        let mut seen: BTreeMap<Weight, Vertex> = BTreeMap::new();
        let mut found: Option<(Vertex, Vertex, Weight)> = None;
        for (&v, &w) in &self.values {
            if let Some(&first) = seen.get(&w) {
                if found.is_none_or(|(_, _, fw)| w < fw) {
                    found = Some((first, v, w));
                }
            } else {
                seen.insert(w, v);
            }
        }
        found
    }

    fn require_injective(&self) -> Result<(), Error> {
        match self.collision() {
            Some((first, second, value)) => Err(Error::NotInjective {
                first,
                second,
                value,
            }),
            None => Ok(()),
        }
    }

    /// Checks that the map is defined on exactly `V(K)`.
    pub fn check_domain(&self, k: &SimplexPool) -> Result<(), Error> {
        let vertices = k.vertex_ids();
        if let Some(&v) = vertices.iter().find(|v| !self.values.contains_key(v)) {
            return Err(Error::MissingVertexValue(v));
        }
        if self.values.len() != vertices.len() {
            let extra = self
                .values
                .keys()
                .find(|v| vertices.binary_search(v).is_err())
                .copied()
                .expect("more values than vertices");
            return Err(Error::UnknownVertex(extra));
        }
        Ok(())
    }

    /// Vertices sorted by increasing value, ties by id.
    pub fn vertex_order(&self) -> Vec<Vertex> {
        let mut v: Vec<Vertex> = self.values.keys().copied().collect();
        v.sort_by_key(|&x| (self.values[&x], x));
        v
    }

    fn max_over(&self, s: &Simplex) -> Weight {
        s.vertices()
            .iter()
            .map(|v| self.values[v])
            .max()
            .expect("simplex has a vertex")
    }

    /// The vertex carrying the largest value in `s`.
    fn argmax(&self, s: &Simplex) -> Vertex {
        *s.vertices()
            .iter()
            .max_by_key(|&&v| (self.values[&v], v))
            .expect("simplex has a vertex")
    }
}

impl FromIterator<(Vertex, Weight)> for VertexMap {
    fn from_iter<I: IntoIterator<Item = (Vertex, Weight)>>(iter: I) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

/// `F(τ) = max{f(v) | v ∈ τ}`. Always a stack.
pub fn induced_stack(f: &VertexMap, k: &SimplexPool) -> Result<Stack, Error> {
    if !k.is_simplicial() {
        return Err(Error::NotSimplicial);
    }
    f.check_domain(k)?;
    Ok(Stack::unchecked(k.iter().map(|s| f.max_over(s)).collect()))
}

/// `δ̂(σ) = {τ ∈ K | σ ⊆ τ and F(τ) = F(σ)}` for the stack induced by a ϑ-map.
pub fn lower_star(k: &SimplexPool, f: &VertexMap, vertex: Vertex) -> Result<SimplexPool, Error> {
    if !k.is_simplicial() {
        return Err(Error::NotSimplicial);
    }
    f.check_domain(k)?;
    f.require_injective()?;
    let sigma = Simplex::vertex(vertex);
    if !k.contains(&sigma) {
        return Err(Error::NotInPool(sigma));
    }
    let level = f.values[&vertex];
    Ok(SimplexPool::new(
        k.iter()
            .filter(|t| t.contains_vertex(vertex) && f.max_over(t) == level)
            .cloned(),
    ))
}

/// One block of the lower-star partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerStar {
    pub vertex: Vertex,
    pub star: CosimplicialComplex,
}

/// Member indices of `K` grouped by lower star, blocks in the order induced
/// by `f`. Each simplex belongs to the star of its highest vertex.
pub(crate) fn lower_star_blocks(
    k: &SimplexPool,
    f: &VertexMap,
) -> Result<Vec<(Vertex, Vec<usize>)>, Error> {
    if !k.is_simplicial() {
        return Err(Error::NotSimplicial);
    }
    f.check_domain(k)?;
    f.require_injective()?;
    let order = f.vertex_order();
    let position: HashMap<Vertex, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut blocks: Vec<(Vertex, Vec<usize>)> = order.iter().map(|&v| (v, Vec::new())).collect();
    for (i, s) in k.iter().enumerate() {
        blocks[position[&f.argmax(s)]].1.push(i);
    }
    Ok(blocks)
}

/// The lower stars of every vertex, ordered by increasing `f`.
///
/// They are pairwise disjoint and cover `K`.
pub fn lower_star_partition(k: &SimplexPool, f: &VertexMap) -> Result<Vec<LowerStar>, Error> {
    Ok(lower_star_blocks(k, f)?
        .into_iter()
        .map(|(vertex, idx)| LowerStar {
            vertex,
            star: CosimplicialComplex::new(k.subpool(idx)).expect("a lower star is cosimplicial"),
        })
        .collect())
}
