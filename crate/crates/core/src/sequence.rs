//! Morse sequences in simplex-wise form.
//!
//! A sequence starts from a base complex `L` and lists, left to right, the
//! simplexes added by each elementary filling (a critical simplex) or each
//! elementary expansion (a regular pair). Replaying it from `L` must yield a
//! chain of simplicial complexes that ends at `K`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::complex::{alternating_sum, SimplexPool};
use crate::moves::{MembershipView, MoveError};
use crate::oracle;
use crate::simplex::Simplex;
use crate::stack::{StackRef, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MorseItem {
    Critical(Simplex),
    Pair(Simplex, Simplex),
}

impl MorseItem {
    pub fn is_critical(&self) -> bool {
        matches!(self, MorseItem::Critical(_))
    }

    /// Number of simplexes the item adds.
    pub fn size(&self) -> usize {
        match self {
            MorseItem::Critical(_) => 1,
            MorseItem::Pair(..) => 2,
        }
    }

    pub fn simplexes(&self) -> impl Iterator<Item = &Simplex> {
        let (a, b) = match self {
            MorseItem::Critical(nu) => (nu, None),
            MorseItem::Pair(s, t) => (s, Some(t)),
        };
        std::iter::once(a).chain(b)
    }

    fn max_dim(&self) -> usize {
        match self {
            MorseItem::Critical(nu) => nu.dim(),
            MorseItem::Pair(_, t) => t.dim(),
        }
    }
}

/// `C v1 .. vk` or `P σ | τ`.
impl fmt::Display for MorseItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorseItem::Critical(nu) => write!(f, "C {nu}"),
            MorseItem::Pair(s, t) => write!(f, "P {s} | {t}"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MorseSequence {
    pub base: SimplexPool,
    pub items: Vec<MorseItem>,
}

impl MorseSequence {
    pub fn new(base: SimplexPool, items: Vec<MorseItem>) -> Self {
        Self { base, items }
    }

    pub fn from_items(items: Vec<MorseItem>) -> Self {
        Self::new(SimplexPool::default(), items)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Number of simplexes the items add, `|K \ L|` for a valid sequence.
    pub fn simplex_count(&self) -> usize {
        self.items.iter().map(MorseItem::size).sum()
    }

    pub fn criticals(&self) -> impl Iterator<Item = &Simplex> {
        self.items.iter().filter_map(|i| match i {
            MorseItem::Critical(nu) => Some(nu),
            MorseItem::Pair(..) => None,
        })
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&Simplex, &Simplex)> {
        self.items.iter().filter_map(|i| match i {
            MorseItem::Pair(s, t) => Some((s, t)),
            MorseItem::Critical(_) => None,
        })
    }

    /// The complex reached after replaying every item.
    pub fn target(&self) -> SimplexPool {
        SimplexPool::new(
            self.base
                .iter()
                .cloned()
                .chain(self.items.iter().flat_map(|i| i.simplexes().cloned())),
        )
    }
}

/// Where and why a sequence fails validation. `index` is `None` for
/// problems with the base or with the final complex.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{}: {kind}", match .index { Some(i) => format!("item {i}"), None => "sequence".to_string() })]
pub struct Violation {
    pub index: Option<usize>,
    pub kind: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ViolationKind {
    #[error("the base is not a simplicial subcomplex of K")]
    BadBase,
    #[error("K is not a simplicial complex")]
    NotSimplicial,
    #[error("{0:?} is not a simplex of K")]
    NotInComplex(Simplex),
    #[error(transparent)]
    Move(#[from] MoveError),
    #[error("replay stops {missing} simplexes short of K")]
    Incomplete { missing: usize },
    #[error("no weight for {0:?}")]
    MissingWeight(Simplex),
    #[error("pair ({sigma:?}, {tau:?}) has weights {sigma_weight} != {tau_weight}")]
    WeightMismatch {
        sigma: Simplex,
        tau: Simplex,
        sigma_weight: Weight,
        tau_weight: Weight,
    },
}

fn violation(index: Option<usize>, kind: ViolationKind) -> Violation {
    Violation { index, kind }
}

/// Replays `seq` on `k`, calling `visit(i, view)` after item `i` is applied
/// and `before(i, view)` right before it.
fn replay<'k>(
    seq: &MorseSequence,
    k: &'k SimplexPool,
    mut before: impl FnMut(usize, &MembershipView<'k>),
    mut visit: impl FnMut(usize, &MembershipView<'k>),
) -> Result<MembershipView<'k>, Violation> {
    if !k.is_simplicial() {
        return Err(violation(None, ViolationKind::NotSimplicial));
    }
    let mut view =
        MembershipView::of(k, &seq.base).map_err(|_| violation(None, ViolationKind::BadBase))?;
    let lookup = |i: usize, s: &Simplex| {
        k.index_of(s)
            .ok_or_else(|| violation(Some(i), ViolationKind::NotInComplex(s.clone())))
    };
    for (i, item) in seq.items.iter().enumerate() {
        before(i, &view);
        let applied = match item {
            MorseItem::Critical(nu) => view.try_fill(lookup(i, nu)?),
            MorseItem::Pair(s, t) => view.try_expand(lookup(i, s)?, lookup(i, t)?),
        };
        applied.map_err(|e| violation(Some(i), e.into()))?;
        visit(i, &view);
    }
    if !view.is_full() {
        return Err(violation(
            None,
            ViolationKind::Incomplete {
                missing: k.len() - view.len(),
            },
        ));
    }
    Ok(view)
}

/// Checks that `seq` is a Morse sequence from its base to `k`: every pair is
/// an elementary expansion, every critical simplex an elementary filling, and
/// the replay ends exactly at `k`.
pub fn validate(seq: &MorseSequence, k: &SimplexPool) -> Result<(), Violation> {
    replay(seq, k, |_, _| {}, |_, _| {}).map(|_| ())
}

/// [`validate`] plus `F(σ) = F(τ)` on every regular pair.
pub fn validate_f(seq: &MorseSequence, k: &SimplexPool, f: StackRef<'_>) -> Result<(), Violation> {
    validate(seq, k)?;
    for (i, item) in seq.items.iter().enumerate() {
        if let MorseItem::Pair(s, t) = item {
            let weight = |x: &Simplex| {
                f.weight(x)
                    .ok_or_else(|| violation(Some(i), ViolationKind::MissingWeight(x.clone())))
            };
            let (ws, wt) = (weight(s)?, weight(t)?);
            if ws != wt {
                return Err(violation(
                    Some(i),
                    ViolationKind::WeightMismatch {
                        sigma: s.clone(),
                        tau: t.clone(),
                        sigma_weight: ws,
                        tau_weight: wt,
                    },
                ));
            }
        }
    }
    Ok(())
}

/// The regular pairs of a sequence.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GradientVectorField {
    pub pairs: BTreeSet<(Simplex, Simplex)>,
}

impl GradientVectorField {
    pub fn new(pairs: impl IntoIterator<Item = (Simplex, Simplex)>) -> Self {
        Self {
            pairs: pairs.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// No simplex appears in two pairs.
    pub fn is_disjoint(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.pairs
            .iter()
            .all(|(s, t)| seen.insert(s.clone()) && seen.insert(t.clone()))
    }

    /// The upper simplex paired with `sigma`, if `sigma` is the lower one.
    pub fn partner_up(&self, sigma: &Simplex) -> Option<&Simplex> {
        self.pairs.iter().find(|(s, _)| s == sigma).map(|(_, t)| t)
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.pairs.iter().any(|(a, b)| a == s || b == s)
    }
}

pub fn gradient_field(seq: &MorseSequence) -> GradientVectorField {
    GradientVectorField::new(seq.pairs().map(|(s, t)| (s.clone(), t.clone())))
}

/// Same gradient vector field.
pub fn equivalent(a: &MorseSequence, b: &MorseSequence) -> bool {
    gradient_field(a) == gradient_field(b)
}

/// Critical counts `c_d`, indexed by dimension up to the largest dimension
/// appearing in the sequence.
pub fn critical_vector(seq: &MorseSequence) -> Vec<usize> {
    let top = seq.items.iter().map(MorseItem::max_dim).max();
    let mut out = vec![0usize; top.map_or(0, |d| d + 1)];
    for nu in seq.criticals() {
        out[nu.dim()] += 1;
    }
    out
}

/// `Σ (-1)^d c_d`.
pub fn critical_euler(seq: &MorseSequence) -> i64 {
    alternating_sum(&critical_vector(seq))
}

/// Checks the maximality condition: right before each critical simplex is
/// added, no elementary F-expansion of the current complex stays inside `k`.
///
/// Exhaustive, test scale only. Returns `false` on invalid sequences.
pub fn audit_maximal(seq: &MorseSequence, k: &SimplexPool, f: StackRef<'_>) -> bool {
    let mut ok = true;
    let result = replay(
        seq,
        k,
        |i, view| {
            if ok && seq.items[i].is_critical() {
                ok = oracle::find_f_expansion(&view.to_pool(), k, f).is_none();
            }
        },
        |_, _| {},
    );
    result.is_ok() && ok
}

/// Checks the minimality condition, mirrored for the decreasing scheme: right
/// after each critical simplex is added, the current complex admits no
/// elementary F-collapse that keeps the base.
///
/// Exhaustive, test scale only. Returns `false` on invalid sequences.
pub fn audit_minimal(seq: &MorseSequence, k: &SimplexPool, f: StackRef<'_>) -> bool {
    let mut ok = true;
    let result = replay(
        seq,
        k,
        |_, _| {},
        |i, view| {
            if ok && seq.items[i].is_critical() {
                ok = oracle::find_f_collapse(&view.to_pool(), &seq.base, f).is_none();
            }
        },
    );
    result.is_ok() && ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplex;
    use crate::stack::Stack;

    use MorseItem::{Critical, Pair};

    fn edge() -> SimplexPool {
        SimplexPool::from_generators([simplex![1, 2]])
    }

    #[test]
    fn validate_examples() {
        let point = SimplexPool::new([simplex![1]]);
        assert!(validate(
            &MorseSequence::from_items(vec![Critical(simplex![1])]),
            &point
        )
        .is_ok());

        let good = MorseSequence::from_items(vec![
            Critical(simplex![1]),
            Pair(simplex![2], simplex![1, 2]),
        ]);
        assert!(validate(&good, &edge()).is_ok());

        let bad = MorseSequence::from_items(vec![
            Pair(simplex![2], simplex![1, 2]),
            Critical(simplex![1]),
        ]);
        let err = validate(&bad, &edge()).unwrap_err();
        assert_eq!(err.index, Some(0));

        let short = MorseSequence::from_items(vec![Critical(simplex![1])]);
        assert!(matches!(
            validate(&short, &edge()).unwrap_err().kind,
            ViolationKind::Incomplete { missing: 2 }
        ));

        let outside = MorseSequence::from_items(vec![Critical(simplex![7])]);
        assert!(matches!(
            validate(&outside, &edge()).unwrap_err().kind,
            ViolationKind::NotInComplex(_)
        ));
    }

    #[test]
    fn validate_f_examples() {
        let k = edge();
        let seq = MorseSequence::from_items(vec![
            Critical(simplex![1]),
            Pair(simplex![2], simplex![1, 2]),
        ]);
        let flat = Stack::constant(&k, 1);
        assert!(validate_f(&seq, &k, flat.on(&k)).is_ok());

        // F({2}) = 1, F({1,2}) = 2
        let f = Stack::new(&k, vec![0, 1, 2]).unwrap();
        let err = validate_f(&seq, &k, f.on(&k)).unwrap_err();
        assert_eq!(err.index, Some(1));
        assert!(matches!(err.kind, ViolationKind::WeightMismatch { .. }));
    }

    #[test]
    fn gradient_field_and_equivalence() {
        // Path 1 - 2 - 3.
        let a = MorseSequence::from_items(vec![
            Critical(simplex![1]),
            Pair(simplex![2], simplex![1, 2]),
            Pair(simplex![3], simplex![2, 3]),
        ]);
        let b = MorseSequence::from_items(vec![
            Critical(simplex![2]),
            Pair(simplex![3], simplex![2, 3]),
            Pair(simplex![1], simplex![1, 2]),
        ]);
        let c = MorseSequence::from_items(vec![
            Critical(simplex![1]),
            Pair(simplex![2], simplex![1, 2]),
            Critical(simplex![3]),
            Critical(simplex![2, 3]),
        ]);
        assert!(equivalent(&a, &a));
        assert!(!equivalent(&a, &b));
        assert!(!equivalent(&a, &c));
        let gvf = gradient_field(&a);
        assert_eq!(gvf.len(), 2);
        assert!(gvf.is_disjoint());
        assert_eq!(gvf.partner_up(&simplex![2]), Some(&simplex![1, 2]));
        assert_eq!(critical_vector(&a), vec![1, 0]);
        assert_eq!(critical_vector(&c), vec![2, 1]);
        assert_eq!(critical_euler(&c), 1);
    }

    #[test]
    fn commuting_items_are_equivalent() {
        // Two independent branches of a star graph, expanded in either order.
        let k = SimplexPool::from_generators([simplex![1, 2], simplex![1, 3]]);
        let a = MorseSequence::from_items(vec![
            Critical(simplex![1]),
            Pair(simplex![2], simplex![1, 2]),
            Pair(simplex![3], simplex![1, 3]),
        ]);
        let b = MorseSequence::from_items(vec![
            Critical(simplex![1]),
            Pair(simplex![3], simplex![1, 3]),
            Pair(simplex![2], simplex![1, 2]),
        ]);
        assert!(validate(&a, &k).is_ok() && validate(&b, &k).is_ok());
        assert!(equivalent(&a, &b));
    }

    #[test]
    fn critical_vector_shapes() {
        let fig = MorseSequence::from_items(vec![
            Critical(simplex![1]),
            Critical(simplex![2]),
            Critical(simplex![1, 2]),
            Critical(simplex![2, 3]),
            Critical(simplex![1, 2, 3]),
        ]);
        assert_eq!(critical_vector(&fig), vec![2, 2, 1]);
        assert_eq!(
            critical_vector(&MorseSequence::from_items(vec![Critical(simplex![4])])),
            vec![1]
        );
        assert!(critical_vector(&MorseSequence::default()).is_empty());
    }

    #[test]
    fn premature_critical_fails_the_maximal_audit() {
        let k = edge();
        let f = Stack::constant(&k, 1);
        let greedy = MorseSequence::from_items(vec![
            Critical(simplex![1]),
            Pair(simplex![2], simplex![1, 2]),
        ]);
        assert!(audit_maximal(&greedy, &k, f.on(&k)));
        let premature = MorseSequence::from_items(vec![
            Critical(simplex![1]),
            Critical(simplex![2]),
            Critical(simplex![1, 2]),
        ]);
        assert!(validate(&premature, &k).is_ok());
        assert!(!audit_maximal(&premature, &k, f.on(&k)));
    }

    #[test]
    fn minimal_audit_on_edge() {
        let k = edge();
        let f = Stack::constant(&k, 1);
        // Collapsing the edge first leaves one vertex to perforate.
        let minimal = MorseSequence::from_items(vec![
            Critical(simplex![1]),
            Pair(simplex![2], simplex![1, 2]),
        ]);
        assert!(audit_minimal(&minimal, &k, f.on(&k)));
        let wasteful = MorseSequence::from_items(vec![
            Critical(simplex![1]),
            Critical(simplex![2]),
            Critical(simplex![1, 2]),
        ]);
        assert!(!audit_minimal(&wasteful, &k, f.on(&k)));
    }
}
