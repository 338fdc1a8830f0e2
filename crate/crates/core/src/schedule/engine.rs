//! The counter-driven sweep shared by `Max(S, F)` and `Min(S, F)`.
//!
//! Both algorithms are the same loop read in opposite directions. For `Max`
//! the counter `ρ(ν)` is the number of faces of `ν` in `S \ T` and a simplex
//! with `ρ = 1` is the upper half of a coreduction; for `Min` the counter
//! counts cofaces and a simplex with `ρ = 1` is the lower half of a reduction.

use std::collections::VecDeque;

use crate::complex::{CosimplicialComplex, SimplexPool};
use crate::moves::MembershipView;
use crate::sequence::MorseItem;
use crate::stack::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Direction {
    /// `Max`: grows from `S̲` to `S̄` by expansions and fillings.
    Increasing,
    /// `Min`: shrinks from `S̄` to `S̲` by collapses and perforations.
    Decreasing,
}

/// A pool member index, or a pair of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Step {
    Critical(usize),
    Pair(usize, usize),
}

impl Step {
    pub(crate) fn into_item(self, pool: &SimplexPool) -> MorseItem {
        match self {
            Step::Critical(i) => MorseItem::Critical(pool.get(i).clone()),
            Step::Pair(s, t) => MorseItem::Pair(pool.get(s).clone(), pool.get(t).clone()),
        }
    }
}

/// Scratch state of one run: the sorted array, the counters, the worklist
/// and the processed set.
pub struct OrderedPool<'a> {
    pool: &'a CosimplicialComplex,
    weights: &'a [Weight],
    direction: Direction,
    order: Vec<usize>,
    rho: Vec<u32>,
    candidates: VecDeque<usize>,
    removed: Vec<bool>,
}

impl<'a> OrderedPool<'a> {
    pub(crate) fn new(
        pool: &'a CosimplicialComplex,
        weights: &'a [Weight],
        direction: Direction,
    ) -> Self {
        let n = pool.len();
        let mut order: Vec<usize> = (0..n).collect();
        // Pool order is (dimension, vertices), so (weight, index) is the
        // total order (weight, dimension, vertices).
        match direction {
            Direction::Increasing => order.sort_unstable_by_key(|&i| (weights[i], i)),
            Direction::Decreasing => order
                .sort_unstable_by_key(|&i| (std::cmp::Reverse(weights[i]), std::cmp::Reverse(i))),
        }
        let mut this = Self {
            pool,
            weights,
            direction,
            order,
            rho: Vec::new(),
            candidates: VecDeque::new(),
            removed: vec![false; n],
        };
        this.rho = (0..n).map(|i| this.lower(i).len() as u32).collect();
        this.candidates = (0..n).filter(|&i| this.rho[i] == 1).collect();
        this
    }

    /// The neighbours counted by `ρ`.
    fn lower(&self, i: usize) -> &'a [usize] {
        match self.direction {
            Direction::Increasing => self.pool.boundary_indices(i),
            Direction::Decreasing => self.pool.coboundary_indices(i),
        }
    }

    /// The neighbours whose `ρ` drops when `i` is processed.
    fn upper(&self, i: usize) -> &'a [usize] {
        match self.direction {
            Direction::Increasing => self.pool.coboundary_indices(i),
            Direction::Decreasing => self.pool.boundary_indices(i),
        }
    }

    /// The processing order `S[1..N]`.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    fn release(&mut self, i: usize) {
        let upper = self.upper(i);
        for &m in upper {
            self.rho[m] -= 1;
            if self.rho[m] == 1 {
                self.candidates.push_back(m);
            }
        }
    }

    /// Next admissible pair from the worklist, with its members marked removed.
    fn next_pair(&mut self) -> Option<Step> {
        while let Some(x) = self.candidates.pop_front() {
            if self.rho[x] != 1 || self.removed[x] {
                continue;
            }
            let partner = *self
                .lower(x)
                .iter()
                .find(|&&y| !self.removed[y])
                .expect("ρ = 1 leaves one live neighbour");
            if self.weights[partner] != self.weights[x] {
                continue;
            }
            let (sigma, tau) = match self.direction {
                Direction::Increasing => (partner, x),
                Direction::Decreasing => (x, partner),
            };
            self.removed[sigma] = true;
            self.removed[tau] = true;
            self.release(sigma);
            self.release(tau);
            return Some(Step::Pair(sigma, tau));
        }
        None
    }

    fn recount_matches(&self) -> bool {
        (0..self.rho.len()).filter(|&i| !self.removed[i]).all(|i| {
            self.rho[i] as usize == self.lower(i).iter().filter(|&&y| !self.removed[y]).count()
        })
    }

    fn remaining_is_cosimplicial(&self) -> bool {
        self.pool
            .subpool((0..self.removed.len()).filter(|&i| !self.removed[i]))
            .is_cosimplicial()
    }
}

/// Tracks `T ∪ S̲` (increasing) or `S̲ ∪ (S \ T)` (decreasing) as an explicit
/// subcomplex of `S̄` and replays every step through the checked moves.
struct Witness<'c> {
    view: MembershipView<'c>,
    to_closure: Vec<usize>,
}

impl<'c> Witness<'c> {
    fn new(s: &SimplexPool, closure: &'c SimplexPool, direction: Direction) -> Self {
        let view = match direction {
            Direction::Increasing => {
                MembershipView::of(closure, &s.underline()).expect("S̲ is a subcomplex of S̄")
            }
            Direction::Decreasing => MembershipView::full(closure),
        };
        let to_closure = s
            .iter()
            .map(|x| closure.index_of(x).expect("S ⊆ S̄"))
            .collect();
        Self { view, to_closure }
    }

    fn apply(&mut self, step: Step, direction: Direction) {
        let c = &self.to_closure;
        let result = match (step, direction) {
            (Step::Pair(s, t), Direction::Increasing) => self.view.try_expand(c[s], c[t]),
            (Step::Critical(n), Direction::Increasing) => self.view.try_fill(c[n]),
            (Step::Pair(s, t), Direction::Decreasing) => self.view.try_collapse(c[s], c[t]),
            (Step::Critical(n), Direction::Decreasing) => self.view.try_perforate(c[n]),
        };
        if let Err(e) = result {
            panic!("scheduler step {step:?} is not an elementary move: {e}");
        }
    }
}

/// Runs the sweep and returns the steps in emission order.
///
/// With `checks`, every step is replayed as a checked move on an explicit
/// complex, the counters are recounted from scratch and `S \ T` is tested for
/// betweenness; this is quadratic and meant for tests.
pub(crate) fn run(
    pool: &CosimplicialComplex,
    weights: &[Weight],
    direction: Direction,
    checks: bool,
) -> Vec<Step> {
    let closure = if checks { Some(pool.closure()) } else { None };
    let mut witness = closure.as_ref().map(|c| Witness::new(pool, c, direction));
    let mut state = OrderedPool::new(pool, weights, direction);
    let n = pool.len();
    let mut steps = Vec::with_capacity(n);
    let mut i = 0;

    let mut record = |step: Step, state: &OrderedPool<'_>, steps: &mut Vec<Step>| {
        if let Some(w) = witness.as_mut() {
            w.apply(step, direction);
            assert!(
                state.recount_matches(),
                "ρ drifted from its definition after {step:?}"
            );
            assert!(
                state.remaining_is_cosimplicial(),
                "S \\ T lost betweenness after {step:?}"
            );
        }
        steps.push(step);
    };

    while i < n {
        while let Some(step) = state.next_pair() {
            record(step, &state, &mut steps);
        }
        while i < n && state.removed[state.order[i]] {
            i += 1;
        }
        if i < n {
            let nu = state.order[i];
            debug_assert_eq!(state.rho[nu], 0, "swept simplex still has live neighbours");
            state.removed[nu] = true;
            state.release(nu);
            record(Step::Critical(nu), &state, &mut steps);
        }
    }

    if let (Some(w), Some(closure)) = (witness.as_ref(), closure.as_ref()) {
        let end = match direction {
            Direction::Increasing => closure.clone(),
            Direction::Decreasing => pool.underline(),
        };
        assert_eq!(
            w.view.to_pool(),
            end,
            "sweep did not end at the expected complex"
        );
    }
    debug_assert_eq!(
        steps
            .iter()
            .map(|s| match s {
                Step::Critical(_) => 1,
                Step::Pair(..) => 2,
            })
            .sum::<usize>(),
        n
    );
    steps
}
