//! Indexed simplex pools.
//!
//! A [`SimplexPool`] is any finite set of simplexes. Members get a stable
//! index following the canonical simplex order (dimension, then vertex
//! sequence), and the pool precomputes, per member, the indices of its
//! codimension-one faces and cofaces that are themselves members. Those
//! adjacency lists are what the schedulers consume; they cost `O(d)` per query.
//!
//! Two predicates matter: a pool is *simplicial* when it is closed under
//! taking non-empty subsets, and *cosimplicial* when it is closed under
//! betweenness (`σ ⊆ ν ⊆ τ` with `σ, τ` members forces `ν` to be a member).
//! [`CosimplicialComplex`] is the checked newtype for the latter.

use std::collections::{HashMap, HashSet};
use std::ops::Deref;

use crate::error::Error;
use crate::simplex::{Simplex, Vertex};

#[derive(Clone, Default)]
pub struct SimplexPool {
    simplexes: Vec<Simplex>,
    index: HashMap<Simplex, usize>,
    face_offsets: Vec<usize>,
    faces: Vec<usize>,
    coface_offsets: Vec<usize>,
    cofaces: Vec<usize>,
}

impl SimplexPool {
    pub fn new(simplexes: impl IntoIterator<Item = Simplex>) -> Self {
        let mut simplexes: Vec<Simplex> = simplexes.into_iter().collect();
        simplexes.sort_unstable();
        simplexes.dedup();
        let index: HashMap<Simplex, usize> = simplexes
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect();

        let mut face_offsets = Vec::with_capacity(simplexes.len() + 1);
        let mut faces = Vec::new();
        face_offsets.push(0);
        for s in &simplexes {
            let start = faces.len();
            faces.extend(s.facets().filter_map(|f| index.get(&f).copied()));
            faces[start..].sort_unstable();
            face_offsets.push(faces.len());
        }

        // Invert the face lists. Filling in ascending member order keeps every
        // coface list sorted.
        let mut coface_offsets = vec![0usize; simplexes.len() + 1];
        for &f in &faces {
            coface_offsets[f + 1] += 1;
        }
        for i in 0..simplexes.len() {
            coface_offsets[i + 1] += coface_offsets[i];
        }
        let mut cursor = coface_offsets.clone();
        let mut cofaces = vec![0usize; faces.len()];
        for s in 0..simplexes.len() {
            for &f in &faces[face_offsets[s]..face_offsets[s + 1]] {
                cofaces[cursor[f]] = s;
                cursor[f] += 1;
            }
        }

        Self {
            simplexes,
            index,
            face_offsets,
            faces,
            coface_offsets,
            cofaces,
        }
    }

    /// The closure of a list of generating simplexes.
    pub fn from_generators(generators: impl IntoIterator<Item = Simplex>) -> Self {
        let generators: Vec<Simplex> = generators.into_iter().collect();
        closure_of(&generators)
    }

    pub fn len(&self) -> usize {
        self.simplexes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplexes.is_empty()
    }

    /// Largest member dimension, `-1` for the empty pool.
    pub fn dim(&self) -> isize {
        self.simplexes.last().map_or(-1, |s| s.dim() as isize)
    }

    pub fn simplexes(&self) -> &[Simplex] {
        &self.simplexes
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Simplex> {
        self.simplexes.iter()
    }

    pub fn get(&self, idx: usize) -> &Simplex {
        &self.simplexes[idx]
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    fn require(&self, s: &Simplex) -> Result<usize, Error> {
        self.index_of(s).ok_or_else(|| Error::NotInPool(s.clone()))
    }

    /// Indices of the members that are codimension-one faces of member `idx`.
    pub fn face_indices(&self, idx: usize) -> &[usize] {
        &self.faces[self.face_offsets[idx]..self.face_offsets[idx + 1]]
    }

    /// Indices of the members that are codimension-one cofaces of member `idx`.
    pub fn coface_indices(&self, idx: usize) -> &[usize] {
        &self.cofaces[self.coface_offsets[idx]..self.coface_offsets[idx + 1]]
    }

    /// `∂(ν, S)`: the members of dimension `dim ν - 1` contained in `ν`.
    pub fn boundary(&self, nu: &Simplex) -> Result<Vec<Simplex>, Error> {
        let idx = self.require(nu)?;
        Ok(self
            .face_indices(idx)
            .iter()
            .map(|&i| self.get(i).clone())
            .collect())
    }

    /// `δ(ν, S)`: the simplexes of dimension `dim ν + 1` that contain `ν` and
    /// lie in the closure of the pool.
    ///
    /// For a cosimplicial pool every returned simplex is a member.
    pub fn coboundary(&self, nu: &Simplex) -> Result<Vec<Simplex>, Error> {
        self.require(nu)?;
        let mut extra: Vec<Vertex> = self
            .simplexes
            .iter()
            .filter(|m| m.len() > nu.len() && nu.is_face_of(m))
            .flat_map(|m| m.vertices().iter().copied())
            .filter(|&v| !nu.contains_vertex(v))
            .collect();
        extra.sort_unstable();
        extra.dedup();
        let mut out: Vec<Simplex> = extra
            .into_iter()
            .filter_map(|v| nu.with_vertex(v))
            .collect();
        out.sort();
        Ok(out)
    }

    /// `S̄`, the smallest simplicial complex containing the pool.
    pub fn closure(&self) -> SimplexPool {
        closure_of(&self.simplexes)
    }

    /// `S̲ = S̄ \ S`.
    pub fn underline(&self) -> SimplexPool {
        let mut seen: HashSet<Simplex> = HashSet::new();
        let mut stack: Vec<Simplex> = Vec::new();
        for (i, s) in self.simplexes.iter().enumerate() {
            // every facet already a member: nothing to look up
            if s.dim() == 0 || self.face_indices(i).len() == s.len() {
                continue;
            }
            for f in s.facets() {
                if !self.contains(&f) && seen.insert(f.clone()) {
                    stack.push(f);
                }
            }
        }
        while let Some(s) = stack.pop() {
            for f in s.facets() {
                if !self.contains(&f) && seen.insert(f.clone()) {
                    stack.push(f);
                }
            }
        }
        SimplexPool::new(seen)
    }

    /// Every non-empty subset of every member is a member.
    ///
    /// Checking codimension-one faces suffices by induction on dimension.
    pub fn is_simplicial(&self) -> bool {
        (0..self.len()).all(|i| {
            let s = &self.simplexes[i];
            s.dim() == 0 || self.face_indices(i).len() == s.len()
        })
    }

    /// Direct betweenness check.
    pub fn is_cosimplicial(&self) -> bool {
        self.find_betweenness_gap().is_none()
    }

    /// A simplex lying between two members without being one, if any.
    ///
    /// For each member `τ`, the members that are subsets of `τ` must form an
    /// up-closed family in the subset lattice of `τ`. Any violating pair
    /// `σ ⊆ τ` is witnessed inside `τ`, so this per-member check is exact.
    pub fn find_betweenness_gap(&self) -> Option<Simplex> {
        for tau in &self.simplexes {
            let n = tau.len();
            assert!(n < 24, "simplex too large for betweenness enumeration");
            let full = (1usize << n) - 1;
            let member: Vec<bool> = (0..=full)
                .map(|mask| mask != 0 && self.contains(&tau.subset(mask)))
                .collect();
            for a in 1..full {
                if !member[a] {
                    continue;
                }
                for v in 0..n {
                    let b = a | (1 << v);
                    if b != a && !member[b] {
                        return Some(tau.subset(b));
                    }
                }
            }
        }
        None
    }

    /// Sorted vertex ids of the 0-dimensional members.
    pub fn vertex_ids(&self) -> Vec<Vertex> {
        self.simplexes
            .iter()
            .take_while(|s| s.dim() == 0)
            .map(|s| s.vertices()[0])
            .collect()
    }

    /// Member counts per dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut out = vec![0usize; (self.dim() + 1) as usize];
        for s in &self.simplexes {
            out[s.dim()] += 1;
        }
        out
    }

    /// Alternating sum of member counts. For a simplicial pool this is the
    /// Euler characteristic; for a cosimplicial one it is `χ(S̄) - χ(S̲)`.
    pub fn euler_characteristic(&self) -> i64 {
        alternating_sum(&self.f_vector())
    }

    /// The pool made of the members at `indices`.
    pub fn subpool(&self, indices: impl IntoIterator<Item = usize>) -> SimplexPool {
        SimplexPool::new(indices.into_iter().map(|i| self.simplexes[i].clone()))
    }

    /// The members that are not in `other`.
    pub fn difference(&self, other: &SimplexPool) -> SimplexPool {
        SimplexPool::new(
            self.simplexes
                .iter()
                .filter(|s| !other.contains(s))
                .cloned(),
        )
    }

    pub fn is_subset_of(&self, other: &SimplexPool) -> bool {
        self.simplexes.iter().all(|s| other.contains(s))
    }
}

pub(crate) fn alternating_sum(counts: &[usize]) -> i64 {
    counts
        .iter()
        .enumerate()
        .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

fn closure_of(generators: &[Simplex]) -> SimplexPool {
    let mut seen: HashSet<Simplex> = HashSet::new();
    let mut stack: Vec<Simplex> = Vec::new();
    for g in generators {
        if seen.insert(g.clone()) {
            stack.push(g.clone());
        }
    }
    while let Some(s) = stack.pop() {
        for f in s.facets() {
            if seen.insert(f.clone()) {
                stack.push(f);
            }
        }
    }
    SimplexPool::new(seen)
}

impl FromIterator<Simplex> for SimplexPool {
    fn from_iter<I: IntoIterator<Item = Simplex>>(iter: I) -> Self {
        SimplexPool::new(iter)
    }
}

impl PartialEq for SimplexPool {
    fn eq(&self, other: &Self) -> bool {
        self.simplexes == other.simplexes
    }
}

impl Eq for SimplexPool {}

impl std::fmt::Debug for SimplexPool {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.simplexes.iter()).finish()
    }
}

/// A pool known to be closed under betweenness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosimplicialComplex(SimplexPool);

impl CosimplicialComplex {
    pub fn new(pool: SimplexPool) -> Result<Self, Error> {
        match pool.find_betweenness_gap() {
            Some(gap) => Err(Error::NotCosimplicial(gap)),
            None => Ok(Self(pool)),
        }
    }

    pub fn pool(&self) -> &SimplexPool {
        &self.0
    }

    pub fn into_pool(self) -> SimplexPool {
        self.0
    }

    /// `∂(ν, S)` as member indices.
    pub fn boundary_indices(&self, idx: usize) -> &[usize] {
        self.0.face_indices(idx)
    }

    /// `δ(ν, S)` as member indices; for a cosimplicial pool these are all of
    /// `δ(ν, S̄)`.
    pub fn coboundary_indices(&self, idx: usize) -> &[usize] {
        self.0.coface_indices(idx)
    }
}

impl TryFrom<SimplexPool> for CosimplicialComplex {
    type Error = Error;

    fn try_from(pool: SimplexPool) -> Result<Self, Error> {
        Self::new(pool)
    }
}

impl Deref for CosimplicialComplex {
    type Target = SimplexPool;

    fn deref(&self) -> &SimplexPool {
        &self.0
    }
}
