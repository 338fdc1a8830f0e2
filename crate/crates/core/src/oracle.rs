//! Brute-force ground truth used to check everything else: mod-2 homology of
//! the full complex, exhaustive gradient path enumeration, cycle detection on
//! the gradient digraph and exhaustive move availability.
//!
//! Nothing here is fast and nothing here shares code with the schedulers or
//! the Morse complex.

use std::collections::HashMap;

use crate::complex::SimplexPool;
use crate::error::Error;
use crate::moves::{elementary_collapse, elementary_expansion, FreePair};
use crate::sequence::GradientVectorField;
use crate::simplex::Simplex;
use crate::stack::StackRef;

/// Rank over the two-element field by dense Gaussian elimination.
pub fn rank_mod2(mut rows: Vec<Vec<bool>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] {
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Mod-2 Betti numbers `β_0 ..= β_dim` of a simplicial complex.
///
/// `β_d = n_d - rank ∂_d - rank ∂_{d+1}`. The empty complex gives an empty list.
pub fn betti_mod2(k: &SimplexPool) -> Result<Vec<usize>, Error> {
    if !k.is_simplicial() {
        return Err(Error::NotSimplicial);
    }
    let top = k.dim();
    if top < 0 {
        return Ok(Vec::new());
    }
    let top = top as usize;
    let by_dim: Vec<Vec<&Simplex>> = (0..=top)
        .map(|d| k.iter().filter(|s| s.dim() == d).collect())
        .collect();
    // ranks[d] = rank of ∂_d : C_d -> C_{d-1}; ranks[0] = 0.
    let mut ranks = vec![0usize; top + 2];
    for d in 1..=top {
        let position: HashMap<&Simplex, usize> = by_dim[d - 1]
            .iter()
            .enumerate()
            .map(|(i, &s)| (s, i))
            .collect();
        let rows: Vec<Vec<bool>> = by_dim[d]
            .iter()
            .map(|s| {
                let mut row = vec![false; by_dim[d - 1].len()];
                for f in s.facets() {
                    row[position[&f]] = true;
                }
                row
            })
            .collect();
        ranks[d] = rank_mod2(rows);
    }
    Ok((0..=top)
        .map(|d| by_dim[d].len() - ranks[d] - ranks[d + 1])
        .collect())
}

/// Whether the number of gradient paths from `from` to the critical simplex
/// `to` is odd.
///
/// A gradient path goes from a simplex `σ` paired upward with `τ` to any other
/// codimension-one face of `τ`, and stops at a critical simplex. Simplexes
/// paired downward start no path. Every path is enumerated explicitly, so the
/// cost is exponential in the worst case.
pub fn count_vpaths_mod2(
    gvf: &GradientVectorField,
    k: &SimplexPool,
    from: &Simplex,
    to: &Simplex,
) -> Result<bool, Error> {
    let up: HashMap<&Simplex, &Simplex> = gvf.pairs.iter().map(|(s, t)| (s, t)).collect();
    let down: HashMap<&Simplex, &Simplex> = gvf.pairs.iter().map(|(s, t)| (t, s)).collect();
    for s in [from, to] {
        if !k.contains(s) {
            return Err(Error::NotInPool(s.clone()));
        }
    }
    let mut on_path: Vec<Simplex> = Vec::new();
    let count = paths(&up, &down, from, to, &mut on_path)?;
    Ok(count % 2 == 1)
}

fn paths(
    up: &HashMap<&Simplex, &Simplex>,
    down: &HashMap<&Simplex, &Simplex>,
    at: &Simplex,
    to: &Simplex,
    on_path: &mut Vec<Simplex>,
) -> Result<u64, Error> {
    if down.contains_key(at) {
        return Ok(0);
    }
    let Some(&tau) = up.get(at) else {
        return Ok(u64::from(at == to));
    };
    if on_path.contains(at) {
        return Err(Error::ClosedPath(at.clone()));
    }
    on_path.push(at.clone());
    let mut total = 0u64;
    for next in tau.facets().filter(|f| f != at) {
        total = total.wrapping_add(paths(up, down, &next, to, on_path)?);
    }
    on_path.pop();
    Ok(total)
}

/// `true` iff the gradient digraph has no directed cycle.
///
/// Nodes are the simplexes paired upward; `σ → σ'` when `σ'` is another
/// face of the partner of `σ` and is itself paired upward.
pub fn acyclicity(gvf: &GradientVectorField, k: &SimplexPool) -> bool {
    let up: HashMap<&Simplex, &Simplex> = gvf.pairs.iter().map(|(s, t)| (s, t)).collect();
    if gvf
        .pairs
        .iter()
        .any(|(s, t)| !k.contains(s) || !k.contains(t))
    {
        return false;
    }
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    let mut mark: HashMap<&Simplex, Mark> = up.keys().map(|&s| (s, Mark::New)).collect();
    let nodes: Vec<&Simplex> = gvf.pairs.iter().map(|(s, _)| s).collect();
    for &start in &nodes {
        if mark[start] != Mark::New {
            continue;
        }
        // Iterative DFS: (node, successors, cursor).
        let succ = |s: &Simplex| -> Vec<&Simplex> {
            up[s]
                .facets()
                .filter(|f| f != s)
                .filter_map(|f| up.get_key_value(&f).map(|(&key, _)| key))
                .collect()
        };
        let mut stack = vec![(start, succ(start), 0usize)];
        mark.insert(start, Mark::Open);
        while let Some((node, next, cursor)) = stack.last_mut() {
            if *cursor == next.len() {
                mark.insert(node, Mark::Done);
                stack.pop();
                continue;
            }
            let child = next[*cursor];
            *cursor += 1;
            match mark[child] {
                Mark::Open => return false,
                Mark::Done => {}
                Mark::New => {
                    mark.insert(child, Mark::Open);
                    stack.push((child, succ(child), 0));
                }
            }
        }
    }
    true
}

fn candidate_pairs<'a>(pool: &'a SimplexPool) -> impl Iterator<Item = FreePair> + 'a {
    pool.iter().flat_map(move |tau| {
        tau.facets()
            .map(move |sigma| FreePair::new(sigma, tau.clone()).expect("facet"))
    })
}

/// Some `(σ, τ)` such that `current ∪ {σ, τ} ⊆ k` is an elementary
/// F-expansion of `current`, by exhaustive search.
pub fn find_f_expansion(
    current: &SimplexPool,
    k: &SimplexPool,
    f: StackRef<'_>,
) -> Option<FreePair> {
    let outside = k.difference(current);
    let found = candidate_pairs(&outside).find(|pair| {
        outside.contains(&pair.sigma)
            && same_weight(f, pair)
            && elementary_expansion(current, pair).is_ok()
    });
    found
}

/// Some `(σ, τ)` such that `current \ {σ, τ} ⊇ l` is an elementary F-collapse
/// of `current`, by exhaustive search.
pub fn find_f_collapse(
    current: &SimplexPool,
    l: &SimplexPool,
    f: StackRef<'_>,
) -> Option<FreePair> {
    let removable = current.difference(l);
    let found = candidate_pairs(&removable).find(|pair| {
        removable.contains(&pair.sigma)
            && same_weight(f, pair)
            && elementary_collapse(current, pair).is_ok()
    });
    found
}

fn same_weight(f: StackRef<'_>, pair: &FreePair) -> bool {
    match (f.weight(&pair.sigma), f.weight(&pair.tau)) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    }
}
