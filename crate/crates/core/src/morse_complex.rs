//! Morse reference and Morse complex of a sequence, over the two-element
//! field.
//!
//! The reference `⋎(σ)` of a simplex is the set of critical simplexes of the
//! same dimension reached from `σ` by an odd number of gradient paths. A
//! single left-to-right pass computes it: a critical `ν` refers to itself;
//! when a pair `(σ, τ)` is appended, every path out of `σ` continues through
//! `τ` into another face of `τ`, all of which are already placed, so
//!
//! ```text
//! ⋎(σ) = Σ { ⋎(μ) | μ ∈ ∂τ, μ ≠ σ }      (sums are symmetric differences)
//! ⋎(τ) = ∅
//! ```
//!
//! The Morse boundary of a critical `ν` is `Σ { ⋎(μ) | μ ∈ ∂ν }`.

use std::collections::{BTreeMap, HashMap};

use crate::complex::SimplexPool;
use crate::error::Error;
use crate::sequence::{validate, MorseItem, MorseSequence};
use crate::simplex::Simplex;

/// Symmetric difference of two sorted index lists.
fn xor_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[derive(Clone, Debug)]
pub struct MorseReference {
    complex: SimplexPool,
    criticals: Vec<usize>,
    refs: Vec<Vec<usize>>,
}

impl MorseReference {
    /// The complex the sequence builds.
    pub fn complex(&self) -> &SimplexPool {
        &self.complex
    }

    /// Critical simplexes in sequence order.
    pub fn criticals(&self) -> impl Iterator<Item = &Simplex> {
        self.criticals.iter().map(|&i| self.complex.get(i))
    }

    /// `⋎(s)`, sorted, or `None` if `s` is not in the complex.
    pub fn get(&self, s: &Simplex) -> Option<Vec<Simplex>> {
        self.complex.index_of(s).map(|i| {
            self.refs[i]
                .iter()
                .map(|&c| self.complex.get(c).clone())
                .collect()
        })
    }

    fn boundary_of(&self, idx: usize) -> Vec<usize> {
        self.complex
            .face_indices(idx)
            .iter()
            .fold(Vec::new(), |acc, &f| xor_sorted(&acc, &self.refs[f]))
    }
}

/// Computes `⋎` for a valid sequence starting from the empty complex.
pub fn morse_reference(seq: &MorseSequence) -> Result<MorseReference, Error> {
    if !seq.base.is_empty() {
        return Err(Error::NonEmptyBase);
    }
    let complex = seq.target();
    validate(seq, &complex)?;
    let idx = |s: &Simplex| complex.index_of(s).expect("target contains every item");
    let mut refs: Vec<Vec<usize>> = vec![Vec::new(); complex.len()];
    let mut criticals = Vec::new();
    for item in &seq.items {
        match item {
            MorseItem::Critical(nu) => {
                let i = idx(nu);
                refs[i] = vec![i];
                criticals.push(i);
            }
            MorseItem::Pair(sigma, tau) => {
                let (s, t) = (idx(sigma), idx(tau));
                let merged = complex
                    .face_indices(t)
                    .iter()
                    .filter(|&&m| m != s)
                    .fold(Vec::new(), |acc, &m| xor_sorted(&acc, &refs[m]));
                refs[s] = merged;
                refs[t] = Vec::new();
            }
        }
    }
    Ok(MorseReference {
        complex,
        criticals,
        refs,
    })
}

/// The boundary operator of the Morse complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorseBoundary {
    /// Critical simplex -> its boundary chain of critical simplexes.
    pub chains: BTreeMap<Simplex, Vec<Simplex>>,
}

impl MorseBoundary {
    /// Critical counts by dimension, up to `top`.
    fn counts(&self, top: usize) -> Vec<usize> {
        let mut c = vec![0; top + 1];
        for s in self.chains.keys() {
            c[s.dim()] += 1;
        }
        c
    }

    /// `∂̃ ∘ ∂̃ = 0`.
    pub fn squares_to_zero(&self) -> bool {
        self.chains.values().all(|chain| {
            chain
                .iter()
                .fold(Vec::<Simplex>::new(), |acc, c| {
                    let mut next: Vec<Simplex> = acc.clone();
                    for x in &self.chains[c] {
                        match next.iter().position(|y| y == x) {
                            Some(p) => {
                                next.remove(p);
                            }
                            None => next.push(x.clone()),
                        }
                    }
                    next
                })
                .is_empty()
        })
    }
}

fn boundary_from(reference: &MorseReference) -> MorseBoundary {
    let chains = reference
        .criticals
        .iter()
        .map(|&c| {
            let chain = reference
                .boundary_of(c)
                .into_iter()
                .map(|i| reference.complex.get(i).clone())
                .collect();
            (reference.complex.get(c).clone(), chain)
        })
        .collect();
    MorseBoundary { chains }
}

pub fn morse_boundary(seq: &MorseSequence) -> Result<MorseBoundary, Error> {
    Ok(boundary_from(&morse_reference(seq)?))
}

fn highest_bit(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .rev()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
}

/// Rank over the two-element field of a set of sparse rows, each a sorted
/// list of column ids, using packed bit rows.
fn rank_gf2(rows: &[Vec<usize>], columns: usize) -> usize {
    let words = columns.div_ceil(64);
    // highest set bit -> reduced row
    let mut pivots: HashMap<usize, Vec<u64>> = HashMap::new();
    for row in rows {
        let mut bits = vec![0u64; words];
        for &c in row {
            bits[c / 64] ^= 1 << (c % 64);
        }
        while let Some(top) = highest_bit(&bits) {
            match pivots.get(&top) {
                Some(p) => {
                    for (a, b) in bits.iter_mut().zip(p) {
                        *a ^= b;
                    }
                }
                None => {
                    pivots.insert(top, bits);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Mod-2 Betti numbers read off the Morse complex of `seq`.
pub fn betti_mod2_from_morse(seq: &MorseSequence) -> Result<Vec<usize>, Error> {
    let reference = morse_reference(seq)?;
    let top = reference.complex.dim();
    if top < 0 {
        return Ok(Vec::new());
    }
    let top = top as usize;
    let boundary = boundary_from(&reference);
    let counts = boundary.counts(top);

    // Column ids: position of each critical among those of its dimension.
    let mut column: HashMap<&Simplex, usize> = HashMap::new();
    let mut seen = vec![0usize; top + 1];
    for s in boundary.chains.keys() {
        column.insert(s, seen[s.dim()]);
        seen[s.dim()] += 1;
    }
    let mut ranks = vec![0usize; top + 2];
    for (d, rank) in ranks.iter_mut().enumerate().take(top + 1).skip(1) {
        let rows: Vec<Vec<usize>> = boundary
            .chains
            .iter()
            .filter(|(s, _)| s.dim() == d)
            .map(|(_, chain)| {
                let mut r: Vec<usize> = chain.iter().map(|c| column[c]).collect();
                r.sort_unstable();
                r
            })
            .collect();
        *rank = rank_gf2(&rows, counts[d - 1]);
    }
    Ok((0..=top)
        .map(|d| counts[d] - ranks[d] - ranks[d + 1])
        .collect())
}
