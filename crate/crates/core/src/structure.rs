//! Moving between completely inverse AG**-groupoids and pairs
//! `(semilattice of abelian groups, involutive idempotent-fixed automorphism)`.
//!
//! `construct` sends `(T, A)` to `a∘b = A(a)•b`; `extract` recovers
//! `T = (S, [•])` and `A(a) = a•(aa⁻¹)`. Both directions work on a fixed
//! carrier, so the round trips are checked as table equality.

use serde::Serialize;

use crate::derived::{clifford_decompose, derive};
use crate::error::{Error, Result};
use crate::groupoid::FiniteGroupoid;
use crate::inverses::{self, completely_inverse_agss_inverses};
use crate::morphisms::{Automorphism, Permutation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructurePair {
    pub sga: FiniteGroupoid,
    pub automorphism: Automorphism,
}

impl StructurePair {
    /// Validates that `sga` is a semilattice of abelian groups and `perm`
    /// an involutive automorphism of it fixing every idempotent.
    pub fn new(sga: FiniteGroupoid, perm: Permutation) -> Result<Self> {
        clifford_decompose(&sga)?;
        let automorphism = Automorphism::new(&sga, perm)?;
        if !automorphism.in_aut2e() {
            return Err(Error::InvalidPermutation(format!(
                "{:?} is an automorphism but not an involution fixing every idempotent",
                automorphism.perm
            )));
        }
        Ok(StructurePair { sga, automorphism })
    }

    pub fn perm(&self) -> &Permutation {
        &self.automorphism.perm
    }
}

fn violation(msg: String) -> Error {
    Error::TheoremViolation(msg)
}

/// `a∘b = A(a)•b`, with every structural claim about the result re-checked.
pub fn construct_thm20(pair: &StructurePair) -> Result<FiniteGroupoid> {
    let t = &pair.sga;
    let a = pair.perm();
    let mut g = FiniteGroupoid::from_fn(t.order(), |x, y| t.product(a.apply(x), y))?;
    if let Some(labels) = t.labels() {
        g = g.with_labels(labels.to_vec())?;
    }

    let inv_t = inverses::inverse_data(t)
        .inverse_map
        .ok_or_else(|| violation("semilattice of abelian groups without unique inverses".into()))?;
    let inv_g = completely_inverse_agss_inverses(&g).map_err(|e| {
        violation(format!("constructed product is not completely inverse AG**: {e}"))
    })?;
    for x in g.elements() {
        if inv_g[x] != a.apply(inv_t[x]) {
            return Err(violation(format!(
                "inverse of {x} under the constructed product is {} rather than A({})",
                inv_g[x], inv_t[x]
            )));
        }
    }
    let d = derive(&g)?;
    if d.derived().table() != t.table() {
        return Err(violation(
            "derived product of the constructed groupoid differs from the input".into(),
        ));
    }
    Ok(g)
}

/// `T = (S, [•])` and `A(a) = a•(aa⁻¹)`, re-verified as a member of
/// `AUT²ₑ(T)` satisfying `a•b = A(a)[•]b`.
pub fn extract_thm21(g: &FiniteGroupoid) -> Result<StructurePair> {
    let d = derive(g)?;
    let sga = d.derived().clone();
    let images: Vec<usize> = g
        .elements()
        .map(|x| g.product(x, g.product(x, d.base_inverse(x))))
        .collect();
    let perm = Permutation::new(images)
        .map_err(|e| violation(format!("extracted map is not a bijection: {e}")))?;
    let automorphism = Automorphism::new(&sga, perm)
        .map_err(|e| violation(format!("extracted map is not a derived automorphism: {e}")))?;
    if !automorphism.in_aut2e() {
        return Err(violation(format!(
            "extracted automorphism {:?} is not an idempotent-fixed involution",
            automorphism.perm
        )));
    }
    for x in g.elements() {
        for y in g.elements() {
            if g.product(x, y) != sga.product(automorphism.perm.apply(x), y) {
                return Err(violation(format!(
                    "{x}·{y} differs from A({x})[•]{y}"
                )));
            }
        }
    }
    Ok(StructurePair { sga, automorphism })
}

/// `construct(extract(g)) == g` for completely inverse AG**-groupoids;
/// false for anything else.
pub fn roundtrip_cor22(g: &FiniteGroupoid) -> Result<bool> {
    let pair = match extract_thm21(g) {
        Ok(pair) => pair,
        Err(Error::NotCompletelyInverse(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    let h = construct_thm20(&pair)?;
    if h.table() != g.table() {
        return Err(violation(
            "reconstructed table differs from the original".into(),
        ));
    }
    Ok(true)
}
