//! Constructive algorithms for Morse sequences.
//!
//! * [`max_f`]: maximal F-sequence on a cosimplicial complex, built left to
//!   right by coreductions and coperforations.
//! * [`min_f`]: minimal F-sequence, built right to left by reductions and
//!   perforations.
//! * [`max_lower_star`]: for an injective vertex map, `max_f` with a
//!   constant stack on every lower star, run in parallel and concatenated in
//!   vertex order.
//! * [`scheme_max`] / [`scheme_min`]: slow whole-complex versions driven by
//!   explicit move availability, used as references for the fast ones.
//!
//! Ties are broken the same way everywhere. Simplexes are swept in
//! `(weight, dimension, vertices)` order (reversed for `min_f`); pending
//! pairs are served first-in first-out, seeded in pool order and then in
//! discovery order (neighbours of `σ` before neighbours of `τ`, each in pool
//! order).

mod engine;
mod lower_star;
mod scheme;

pub use engine::OrderedPool;
pub use lower_star::{max_lower_star, max_lower_star_with_jobs};
pub use scheme::{scheme_max, scheme_min};

use crate::complex::{CosimplicialComplex, SimplexPool};
use crate::error::Error;
use crate::sequence::{MorseItem, MorseSequence};
use crate::stack::Stack;

use engine::{run, Direction};

fn check_stack(s: &CosimplicialComplex, f: &Stack) -> Result<(), Error> {
    f.check_size(s)?;
    match f.adjacent_monotonicity_violation(s) {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

fn sequence(
    s: &CosimplicialComplex,
    f: &Stack,
    direction: Direction,
    checks: bool,
) -> Result<MorseSequence, Error> {
    check_stack(s, f)?;
    let mut items: Vec<MorseItem> = run(s, f.weights(), direction, checks)
        .into_iter()
        .map(|step| step.into_item(s))
        .collect();
    if direction == Direction::Decreasing {
        items.reverse();
    }
    Ok(MorseSequence::new(s.underline(), items))
}

/// `Max(S, F)`: a maximal simplex-wise F-sequence from `S̲` to `S̄`.
pub fn max_f(s: &CosimplicialComplex, f: &Stack) -> Result<MorseSequence, Error> {
    sequence(s, f, Direction::Increasing, false)
}

/// `Min(S, F)`: a minimal simplex-wise F-sequence from `S̲` to `S̄`.
pub fn min_f(s: &CosimplicialComplex, f: &Stack) -> Result<MorseSequence, Error> {
    sequence(s, f, Direction::Decreasing, false)
}

/// [`max_f`] with every step verified as an elementary move and the
/// counters recounted after each step. Quadratic; panics on a broken
/// invariant.
pub fn max_f_checked(s: &CosimplicialComplex, f: &Stack) -> Result<MorseSequence, Error> {
    sequence(s, f, Direction::Increasing, true)
}

/// [`min_f`] with the same verification as [`max_f_checked`].
pub fn min_f_checked(s: &CosimplicialComplex, f: &Stack) -> Result<MorseSequence, Error> {
    sequence(s, f, Direction::Decreasing, true)
}

/// `Max(S) = Max(S, 𝟙_S)`.
pub fn max_constant(s: &CosimplicialComplex) -> MorseSequence {
    max_f(s, &Stack::constant(s, 1)).expect("a constant stack is valid")
}

/// [`max_f`] on a simplicial complex with a stack aligned on it.
pub fn max_on_complex(k: &SimplexPool, f: &Stack) -> Result<MorseSequence, Error> {
    if !k.is_simplicial() {
        return Err(Error::NotSimplicial);
    }
    max_f(&CosimplicialComplex::new(k.clone())?, f)
}
