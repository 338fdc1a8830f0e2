//! Elementary moves.
//!
//! On simplicial complexes: collapse / expansion of a free pair and
//! perforation / filling of a facet. On cosimplicial complexes: the set-level
//! counterparts reduction, perforation, coreduction and coperforation, which
//! mirror the simplicial moves on `S̄` and `S̲` respectively.
//!
//! The free functions are checked and return new pools. [`MembershipView`] is
//! the in-place variant over a fixed ambient complex, with `try_*` entry
//! points that verify preconditions locally and `*_unchecked` ones for callers
//! that maintain the invariants themselves.

use thiserror::Error;

use crate::complex::SimplexPool;
use crate::simplex::Simplex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("{sigma:?} is not a codimension-one face of {tau:?}")]
    NotAFacetPair { sigma: Simplex, tau: Simplex },
    #[error("{0:?} is not in the complex")]
    Missing(Simplex),
    #[error("{0:?} is already in the complex")]
    Present(Simplex),
    #[error("the complex is not simplicial")]
    NotSimplicial,
    #[error("the complex is not cosimplicial")]
    NotCosimplicial,
    #[error("the result would not be simplicial: {face:?} (a face of {simplex:?}) is missing")]
    MissingFace { simplex: Simplex, face: Simplex },
    #[error("({sigma:?}, {tau:?}) is not free: {other:?} also contains {sigma:?}")]
    NotFree {
        sigma: Simplex,
        tau: Simplex,
        other: Simplex,
    },
    #[error("{nu:?} is not a facet: it lies in {coface:?}")]
    NotFacet { nu: Simplex, coface: Simplex },
    #[error("coboundary of {sigma:?} is {found:?}, expected exactly {{{tau:?}}}")]
    CoboundaryNotSingleton {
        sigma: Simplex,
        tau: Simplex,
        found: Vec<Simplex>,
    },
    #[error("boundary of {tau:?} is {found:?}, expected exactly {{{sigma:?}}}")]
    BoundaryNotSingleton {
        sigma: Simplex,
        tau: Simplex,
        found: Vec<Simplex>,
    },
    #[error("coboundary of {nu:?} is {found:?}, expected empty")]
    CoboundaryNotEmpty { nu: Simplex, found: Vec<Simplex> },
    #[error("boundary of {nu:?} is {found:?}, expected empty")]
    BoundaryNotEmpty { nu: Simplex, found: Vec<Simplex> },
}

/// `(σ, τ)` with `σ ⊂ τ` and `dim τ = dim σ + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreePair {
    pub sigma: Simplex,
    pub tau: Simplex,
}

impl FreePair {
    pub fn new(sigma: Simplex, tau: Simplex) -> Result<Self, MoveError> {
        if !sigma.is_facet_of(&tau) {
            return Err(MoveError::NotAFacetPair { sigma, tau });
        }
        Ok(Self { sigma, tau })
    }
}

fn require_member(k: &SimplexPool, s: &Simplex) -> Result<(), MoveError> {
    if k.contains(s) {
        Ok(())
    } else {
        Err(MoveError::Missing(s.clone()))
    }
}

fn require_simplicial(k: &SimplexPool) -> Result<(), MoveError> {
    if k.is_simplicial() {
        Ok(())
    } else {
        Err(MoveError::NotSimplicial)
    }
}

fn first_missing_face(k: &SimplexPool) -> Option<MoveError> {
    k.iter().find_map(|s| {
        s.facets()
            .find(|f| !k.contains(f))
            .map(|face| MoveError::MissingFace {
                simplex: s.clone(),
                face,
            })
    })
}

/// Members of `k` strictly containing `sigma`, other than `tau`.
fn other_coface(k: &SimplexPool, sigma: &Simplex, tau: &Simplex) -> Option<Simplex> {
    k.iter()
        .find(|m| m.len() > sigma.len() && *m != tau && sigma.is_face_of(m))
        .cloned()
}

fn free_pair_error(k: &SimplexPool, pair: &FreePair) -> Option<MoveError> {
    other_coface(k, &pair.sigma, &pair.tau).map(|other| MoveError::NotFree {
        sigma: pair.sigma.clone(),
        tau: pair.tau.clone(),
        other,
    })
}

/// `τ` is the only member of `K` strictly containing `σ`.
pub fn is_free_pair(sigma: &Simplex, tau: &Simplex, k: &SimplexPool) -> Result<bool, MoveError> {
    require_simplicial(k)?;
    require_member(k, sigma)?;
    require_member(k, tau)?;
    Ok(sigma.is_facet_of(tau) && other_coface(k, sigma, tau).is_none())
}

/// `K \ {σ, τ}` for a free pair of `K`.
pub fn elementary_collapse(k: &SimplexPool, pair: &FreePair) -> Result<SimplexPool, MoveError> {
    require_simplicial(k)?;
    require_member(k, &pair.sigma)?;
    require_member(k, &pair.tau)?;
    if let Some(e) = free_pair_error(k, pair) {
        return Err(e);
    }
    Ok(SimplexPool::new(
        k.iter()
            .filter(|s| **s != pair.sigma && **s != pair.tau)
            .cloned(),
    ))
}

/// `L ∪ {σ, τ}`, provided the result is simplicial and the pair is free in it.
pub fn elementary_expansion(l: &SimplexPool, pair: &FreePair) -> Result<SimplexPool, MoveError> {
    require_simplicial(l)?;
    for s in [&pair.sigma, &pair.tau] {
        if l.contains(s) {
            return Err(MoveError::Present(s.clone()));
        }
    }
    let k = SimplexPool::new(
        l.iter()
            .cloned()
            .chain([pair.sigma.clone(), pair.tau.clone()]),
    );
    if let Some(e) = first_missing_face(&k) {
        return Err(e);
    }
    if let Some(e) = free_pair_error(&k, pair) {
        return Err(e);
    }
    Ok(k)
}

/// `L ∪ {ν}`, provided the result is simplicial (ν is then a facet of it).
pub fn elementary_filling(l: &SimplexPool, nu: &Simplex) -> Result<SimplexPool, MoveError> {
    require_simplicial(l)?;
    if l.contains(nu) {
        return Err(MoveError::Present(nu.clone()));
    }
    if let Some(face) = nu.facets().find(|f| !l.contains(f)) {
        return Err(MoveError::MissingFace {
            simplex: nu.clone(),
            face,
        });
    }
    Ok(SimplexPool::new(l.iter().cloned().chain([nu.clone()])))
}

/// `K \ {ν}` for a facet `ν` of `K`.
pub fn elementary_perforation(k: &SimplexPool, nu: &Simplex) -> Result<SimplexPool, MoveError> {
    require_simplicial(k)?;
    require_member(k, nu)?;
    if let Some(coface) = k.iter().find(|m| m.len() > nu.len() && nu.is_face_of(m)) {
        return Err(MoveError::NotFacet {
            nu: nu.clone(),
            coface: coface.clone(),
        });
    }
    Ok(SimplexPool::new(k.iter().filter(|s| *s != nu).cloned()))
}

fn require_cosimplicial(s: &SimplexPool) -> Result<(), MoveError> {
    if s.is_cosimplicial() {
        Ok(())
    } else {
        Err(MoveError::NotCosimplicial)
    }
}

fn without(s: &SimplexPool, removed: &[&Simplex]) -> SimplexPool {
    SimplexPool::new(s.iter().filter(|x| !removed.contains(x)).cloned())
}

/// `S \ {σ, τ}` when `δ(σ, S) = {τ}`. Mirrors a collapse of `S̄`.
pub fn reduction(
    s: &SimplexPool,
    sigma: &Simplex,
    tau: &Simplex,
) -> Result<SimplexPool, MoveError> {
    require_cosimplicial(s)?;
    require_member(s, sigma)?;
    require_member(s, tau)?;
    let found = s.coboundary(sigma).expect("member");
    if found.len() != 1 || found[0] != *tau {
        return Err(MoveError::CoboundaryNotSingleton {
            sigma: sigma.clone(),
            tau: tau.clone(),
            found,
        });
    }
    Ok(without(s, &[sigma, tau]))
}

/// `S \ {ν}` when `δ(ν, S) = ∅`. Mirrors a perforation of `S̄`.
pub fn perforation_set(s: &SimplexPool, nu: &Simplex) -> Result<SimplexPool, MoveError> {
    require_cosimplicial(s)?;
    require_member(s, nu)?;
    let found = s.coboundary(nu).expect("member");
    if !found.is_empty() {
        return Err(MoveError::CoboundaryNotEmpty {
            nu: nu.clone(),
            found,
        });
    }
    Ok(without(s, &[nu]))
}

/// `S \ {σ, τ}` when `∂(τ, S) = {σ}`. Mirrors an expansion of `S̲`.
pub fn coreduction(
    s: &SimplexPool,
    sigma: &Simplex,
    tau: &Simplex,
) -> Result<SimplexPool, MoveError> {
    require_cosimplicial(s)?;
    require_member(s, sigma)?;
    require_member(s, tau)?;
    let found = s.boundary(tau).expect("member");
    if found.len() != 1 || found[0] != *sigma {
        return Err(MoveError::BoundaryNotSingleton {
            sigma: sigma.clone(),
            tau: tau.clone(),
            found,
        });
    }
    Ok(without(s, &[sigma, tau]))
}

/// `S \ {ν}` when `∂(ν, S) = ∅`. Mirrors a filling of `S̲`.
pub fn coperforation(s: &SimplexPool, nu: &Simplex) -> Result<SimplexPool, MoveError> {
    require_cosimplicial(s)?;
    require_member(s, nu)?;
    let found = s.boundary(nu).expect("member");
    if !found.is_empty() {
        return Err(MoveError::BoundaryNotEmpty {
            nu: nu.clone(),
            found,
        });
    }
    Ok(without(s, &[nu]))
}

/// A subcomplex of a fixed simplicial ambient pool, held as a membership
/// bitmap over the ambient member indices.
///
/// The current set is kept simplicial by every checked move, so all checks
/// only look at codimension-one neighbours.
#[derive(Clone, Debug)]
pub struct MembershipView<'a> {
    ambient: &'a SimplexPool,
    member: Vec<bool>,
    count: usize,
}

impl<'a> MembershipView<'a> {
    pub fn empty(ambient: &'a SimplexPool) -> Self {
        Self {
            ambient,
            member: vec![false; ambient.len()],
            count: 0,
        }
    }

    pub fn full(ambient: &'a SimplexPool) -> Self {
        Self {
            ambient,
            member: vec![true; ambient.len()],
            count: ambient.len(),
        }
    }

    /// The view holding the members of `sub`, which must be a subcomplex.
    pub fn of(ambient: &'a SimplexPool, sub: &SimplexPool) -> Result<Self, MoveError> {
        let mut view = Self::empty(ambient);
        for s in sub.iter() {
            let i = ambient
                .index_of(s)
                .ok_or_else(|| MoveError::Missing(s.clone()))?;
            view.member[i] = true;
        }
        view.count = sub.len();
        if !sub.is_simplicial() {
            return Err(MoveError::NotSimplicial);
        }
        Ok(view)
    }

    pub fn ambient(&self) -> &'a SimplexPool {
        self.ambient
    }

    pub fn contains(&self, idx: usize) -> bool {
        self.member[idx]
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn is_full(&self) -> bool {
        self.count == self.ambient.len()
    }

    pub fn to_pool(&self) -> SimplexPool {
        self.ambient
            .subpool((0..self.member.len()).filter(|&i| self.member[i]))
    }

    fn simplex(&self, idx: usize) -> Simplex {
        self.ambient.get(idx).clone()
    }

    fn missing_face(&self, idx: usize, except: Option<usize>) -> Option<MoveError> {
        let s = self.ambient.get(idx);
        let present = self.ambient.face_indices(idx);
        if s.dim() > 0 && present.len() != s.len() {
            // The ambient pool itself lacks a face; cannot happen for a
            // simplicial ambient but keeps the check honest.
            let face = s
                .facets()
                .find(|f| !self.ambient.contains(f))
                .expect("missing face");
            return Some(MoveError::MissingFace {
                simplex: s.clone(),
                face,
            });
        }
        present
            .iter()
            .find(|&&f| Some(f) != except && !self.member[f])
            .map(|&f| MoveError::MissingFace {
                simplex: s.clone(),
                face: self.simplex(f),
            })
    }

    fn member_coface(&self, idx: usize, except: Option<usize>) -> Option<usize> {
        self.ambient
            .coface_indices(idx)
            .iter()
            .copied()
            .find(|&c| Some(c) != except && self.member[c])
    }

    fn is_facet_pair(&self, sigma: usize, tau: usize) -> Result<(), MoveError> {
        if self.ambient.face_indices(tau).contains(&sigma) {
            Ok(())
        } else {
            Err(MoveError::NotAFacetPair {
                sigma: self.simplex(sigma),
                tau: self.simplex(tau),
            })
        }
    }

    /// Checks that adding `(σ, τ)` is an elementary expansion.
    pub fn check_expansion(&self, sigma: usize, tau: usize) -> Result<(), MoveError> {
        self.is_facet_pair(sigma, tau)?;
        for i in [sigma, tau] {
            if self.member[i] {
                return Err(MoveError::Present(self.simplex(i)));
            }
        }
        if let Some(e) = self
            .missing_face(sigma, None)
            .or_else(|| self.missing_face(tau, Some(sigma)))
        {
            return Err(e);
        }
        if let Some(other) = self.member_coface(sigma, None) {
            return Err(MoveError::NotFree {
                sigma: self.simplex(sigma),
                tau: self.simplex(tau),
                other: self.simplex(other),
            });
        }
        Ok(())
    }

    /// Checks that adding `ν` is an elementary filling.
    pub fn check_filling(&self, nu: usize) -> Result<(), MoveError> {
        if self.member[nu] {
            return Err(MoveError::Present(self.simplex(nu)));
        }
        match self.missing_face(nu, None) {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }

    /// Checks that removing `(σ, τ)` is an elementary collapse.
    pub fn check_collapse(&self, sigma: usize, tau: usize) -> Result<(), MoveError> {
        self.is_facet_pair(sigma, tau)?;
        for i in [sigma, tau] {
            if !self.member[i] {
                return Err(MoveError::Missing(self.simplex(i)));
            }
        }
        // In a simplicial set, σ has no other coface iff it has no other
        // codimension-one coface, and then τ is necessarily a facet.
        if let Some(other) = self.member_coface(sigma, Some(tau)) {
            return Err(MoveError::NotFree {
                sigma: self.simplex(sigma),
                tau: self.simplex(tau),
                other: self.simplex(other),
            });
        }
        debug_assert!(self.member_coface(tau, None).is_none());
        Ok(())
    }

    /// Checks that removing `ν` is an elementary perforation.
    pub fn check_perforation(&self, nu: usize) -> Result<(), MoveError> {
        if !self.member[nu] {
            return Err(MoveError::Missing(self.simplex(nu)));
        }
        match self.member_coface(nu, None) {
            Some(c) => Err(MoveError::NotFacet {
                nu: self.simplex(nu),
                coface: self.simplex(c),
            }),
            None => Ok(()),
        }
    }

    pub fn try_expand(&mut self, sigma: usize, tau: usize) -> Result<(), MoveError> {
        self.check_expansion(sigma, tau)?;
        self.expand_unchecked(sigma, tau);
        Ok(())
    }

    pub fn try_fill(&mut self, nu: usize) -> Result<(), MoveError> {
        self.check_filling(nu)?;
        self.fill_unchecked(nu);
        Ok(())
    }

    pub fn try_collapse(&mut self, sigma: usize, tau: usize) -> Result<(), MoveError> {
        self.check_collapse(sigma, tau)?;
        self.collapse_unchecked(sigma, tau);
        Ok(())
    }

    pub fn try_perforate(&mut self, nu: usize) -> Result<(), MoveError> {
        self.check_perforation(nu)?;
        self.perforate_unchecked(nu);
        Ok(())
    }

    pub fn expand_unchecked(&mut self, sigma: usize, tau: usize) {
        self.member[sigma] = true;
        self.member[tau] = true;
        self.count += 2;
    }

    pub fn fill_unchecked(&mut self, nu: usize) {
        self.member[nu] = true;
        self.count += 1;
    }

    pub fn collapse_unchecked(&mut self, sigma: usize, tau: usize) {
        self.member[sigma] = false;
        self.member[tau] = false;
        self.count -= 2;
    }

    pub fn perforate_unchecked(&mut self, nu: usize) {
        self.member[nu] = false;
        self.count -= 1;
    }
}
