//! Whole-complex reference implementations of the maximal and minimal
//! schemes.
//!
//! No counters: after every move the set of admissible F-expansions (or
//! F-collapses) is recomputed from the current complex with the checked
//! moves of [`MembershipView`]. Pending moves are served oldest first, with
//! the same tie-breaking as the fast sweep, so the two produce identical item
//! lists.

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::complex::SimplexPool;
use crate::error::Error;
use crate::moves::MembershipView;
use crate::sequence::{MorseItem, MorseSequence};
use crate::stack::{StackRef, Weight};

struct Setup<'k> {
    k: &'k SimplexPool,
    in_base: Vec<bool>,
    weights: Vec<Weight>,
}

fn setup<'k>(l: &SimplexPool, k: &'k SimplexPool, f: StackRef<'_>) -> Result<Setup<'k>, Error> {
    if !k.is_simplicial() {
        return Err(Error::NotSimplicial);
    }
    if !l.is_simplicial() {
        return Err(Error::NotSimplicial);
    }
    if let Some(s) = l.iter().find(|s| !k.contains(s)) {
        return Err(Error::NotInPool(s.clone()));
    }
    let in_base: Vec<bool> = k.iter().map(|s| l.contains(s)).collect();
    let weights = k
        .iter()
        .zip(&in_base)
        .map(|(s, &base)| match (f.weight(s), base) {
            (Some(w), _) => Ok(w),
            (None, true) => Ok(0),
            (None, false) => Err(Error::MissingWeight(s.clone())),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Setup {
        k,
        in_base,
        weights,
    })
}

/// Orders freshly admissible moves: first by which simplex of the last move
/// they are adjacent to, then by pool order.
fn enqueue(
    queue: &mut VecDeque<usize>,
    known: &mut HashSet<usize>,
    available: &BTreeMap<usize, usize>,
    adjacent_to: impl Fn(usize) -> usize,
) {
    let mut fresh: Vec<usize> = available
        .keys()
        .copied()
        .filter(|x| !known.contains(x))
        .collect();
    fresh.sort_by_key(|&x| (adjacent_to(x), x));
    for x in fresh {
        known.insert(x);
        queue.push_back(x);
    }
}

fn source_rank(sources: &[usize], is_adjacent: impl Fn(usize) -> bool) -> usize {
    sources
        .iter()
        .position(|&s| is_adjacent(s))
        .unwrap_or(sources.len())
}

/// Reference for `max_f(K \ L, F)`: a sequence from `L` to `K` that is maximal
/// for `F`, found by searching the whole complex for admissible moves.
pub fn scheme_max(
    l: &SimplexPool,
    k: &SimplexPool,
    f: StackRef<'_>,
) -> Result<MorseSequence, Error> {
    let Setup { k, weights, .. } = setup(l, k, f)?;
    let mut view = MembershipView::of(k, l)?;
    let n = k.len();

    // upper simplex -> lower simplex of every admissible F-expansion
    let available = |view: &MembershipView<'_>| -> BTreeMap<usize, usize> {
        (0..n)
            .filter(|&t| !view.contains(t))
            .filter_map(|t| {
                k.face_indices(t)
                    .iter()
                    .copied()
                    .find(|&s| weights[s] == weights[t] && view.check_expansion(s, t).is_ok())
                    .map(|s| (t, s))
            })
            .collect()
    };

    let mut items = Vec::new();
    let mut known = HashSet::new();
    let mut queue = VecDeque::new();
    let mut avail = available(&view);
    enqueue(&mut queue, &mut known, &avail, |_| 0);

    while !view.is_full() {
        let mut pair = None;
        while let Some(t) = queue.pop_front() {
            if let Some(&s) = avail.get(&t) {
                pair = Some((s, t));
                break;
            }
        }
        let sources = match pair {
            Some((s, t)) => {
                view.try_expand(s, t)?;
                items.push(MorseItem::Pair(k.get(s).clone(), k.get(t).clone()));
                vec![s, t]
            }
            None => {
                let nu = (0..n)
                    .filter(|&x| view.check_filling(x).is_ok())
                    .min_by_key(|&x| (weights[x], x))
                    .expect("a proper subcomplex admits a filling");
                view.try_fill(nu)?;
                items.push(MorseItem::Critical(k.get(nu).clone()));
                vec![nu]
            }
        };
        avail = available(&view);
        enqueue(&mut queue, &mut known, &avail, |t| {
            source_rank(&sources, |src| k.face_indices(t).contains(&src))
        });
    }
    Ok(MorseSequence::new(l.clone(), items))
}

/// Reference for `min_f(K \ L, F)`: a sequence from `L` to `K` that is minimal
/// for `F`, built right to left by collapses and perforations of `K`.
pub fn scheme_min(
    l: &SimplexPool,
    k: &SimplexPool,
    f: StackRef<'_>,
) -> Result<MorseSequence, Error> {
    let Setup {
        k,
        in_base,
        weights,
    } = setup(l, k, f)?;
    let mut view = MembershipView::full(k);
    let n = k.len();

    // lower simplex -> upper simplex of every admissible F-collapse keeping L
    let available = |view: &MembershipView<'_>| -> BTreeMap<usize, usize> {
        (0..n)
            .filter(|&s| view.contains(s) && !in_base[s])
            .filter_map(|s| {
                k.coface_indices(s)
                    .iter()
                    .copied()
                    .find(|&t| {
                        view.contains(t)
                            && !in_base[t]
                            && weights[s] == weights[t]
                            && view.check_collapse(s, t).is_ok()
                    })
                    .map(|t| (s, t))
            })
            .collect()
    };

    let mut items = Vec::new();
    let mut known = HashSet::new();
    let mut queue = VecDeque::new();
    let mut avail = available(&view);
    enqueue(&mut queue, &mut known, &avail, |_| 0);

    while view.len() > l.len() {
        let mut pair = None;
        while let Some(s) = queue.pop_front() {
            if let Some(&t) = avail.get(&s) {
                pair = Some((s, t));
                break;
            }
        }
        let sources = match pair {
            Some((s, t)) => {
                view.try_collapse(s, t)?;
                items.push(MorseItem::Pair(k.get(s).clone(), k.get(t).clone()));
                vec![s, t]
            }
            None => {
                let nu = (0..n)
                    .filter(|&x| !in_base[x] && view.check_perforation(x).is_ok())
                    .max_by_key(|&x| (weights[x], x))
                    .expect("a complex strictly larger than L has a facet outside L");
                view.try_perforate(nu)?;
                items.push(MorseItem::Critical(k.get(nu).clone()));
                vec![nu]
            }
        };
        avail = available(&view);
        enqueue(&mut queue, &mut known, &avail, |s| {
            source_rank(&sources, |src| k.face_indices(src).contains(&s))
        });
    }
    items.reverse();
    Ok(MorseSequence::new(l.clone(), items))
}
