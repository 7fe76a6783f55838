//! Left inverses, inverse sets, strong regularity and the three equivalent
//! characterizations of completely inverse AG**-groupoids.

use serde::Serialize;

use crate::aggroup;
use crate::error::{Error, Result};
use crate::groupoid::FiniteGroupoid;
use crate::laws::{self, Law, LawReport, SemilatticeFailure};
use crate::set::ElementSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InverseData {
    /// `b ∈ left_inverses[a]` iff `(ab)a = a`.
    pub left_inverses: Vec<ElementSet>,
    /// `V(a)`: mutual left inverses.
    pub inverse_sets: Vec<ElementSet>,
    /// Present iff every `V(a)` is a singleton.
    pub inverse_map: Option<Vec<usize>>,
    /// `commuting[a]` iff `V(a) = {b}` and `ab = ba`.
    pub commuting: Vec<bool>,
}

impl InverseData {
    /// Every element has a unique inverse and commutes with it.
    pub fn is_completely_inverse(&self) -> bool {
        self.inverse_map.is_some() && self.commuting.iter().all(|&c| c)
    }

    /// First element that has no unique commuting inverse.
    pub fn completely_inverse_failure(&self) -> Option<usize> {
        (0..self.commuting.len()).find(|&a| !self.commuting[a])
    }
}

pub fn inverse_data(g: &FiniteGroupoid) -> InverseData {
    let left_inverses: Vec<ElementSet> = g
        .elements()
        .map(|a| {
            g.elements()
                .filter(|&b| g.product(g.product(a, b), a) == a)
                .collect()
        })
        .collect();
    let inverse_sets: Vec<ElementSet> = g
        .elements()
        .map(|a| {
            left_inverses[a]
                .iter()
                .filter(|&b| left_inverses[b].contains(a))
                .collect()
        })
        .collect();
    let inverse_map = inverse_sets
        .iter()
        .map(|v| if v.len() == 1 { v.first() } else { None })
        .collect::<Option<Vec<usize>>>();
    let commuting = g
        .elements()
        .map(|a| {
            let v = inverse_sets[a];
            v.len() == 1 && {
                let b = v.first().unwrap();
                g.product(a, b) == g.product(b, a)
            }
        })
        .collect();
    InverseData {
        left_inverses,
        inverse_sets,
        inverse_map,
        commuting,
    }
}

/// Smallest `x` with `(ax)a = a` and `ax = xa`.
pub fn strongly_regular_witness(g: &FiniteGroupoid, a: usize) -> Option<usize> {
    g.elements().find(|&x| is_strongly_regular_witness(g, a, x))
}

fn is_strongly_regular_witness(g: &FiniteGroupoid, a: usize, x: usize) -> bool {
    let ax = g.product(a, x);
    g.product(ax, a) == a && ax == g.product(x, a)
}

/// First element without a strongly regular witness.
pub fn strongly_regular_failure(g: &FiniteGroupoid) -> Option<usize> {
    g.elements().find(|&a| strongly_regular_witness(g, a).is_none())
}

pub fn is_strongly_regular(g: &FiniteGroupoid) -> bool {
    strongly_regular_failure(g).is_none()
}

/// Builds the commuting inverse `y = (xa)x` from a strongly regular witness
/// `x` of `a`.
///
/// In an AG-groupoid `y` is always an inverse of `a` commuting with it; if
/// that fails the result is a [`Error::TheoremViolation`]. Outside
/// AG-groupoids `y` is returned unchecked.
pub fn lemma1_inverse_from_witness(g: &FiniteGroupoid, a: usize, x: usize) -> Result<usize> {
    g.try_product(a, x)?;
    if !is_strongly_regular_witness(g, a, x) {
        return Err(Error::InvalidWitness {
            element: a,
            candidate: x,
        });
    }
    let y = g.product(g.product(x, a), x);
    if laws::holds(g, Law::Invertive) {
        let mutual = g.product(g.product(a, y), a) == a && g.product(g.product(y, a), y) == y;
        if !mutual || g.product(a, y) != g.product(y, a) {
            return Err(Error::TheoremViolation(format!(
                "y = (xa)x = {y} built from witness {x} is not a commuting inverse of {a}"
            )));
        }
    }
    Ok(y)
}

/// The inverse map when `g` is a completely inverse AG**-groupoid, otherwise
/// the reason it is not one.
pub fn completely_inverse_agss_inverses(g: &FiniteGroupoid) -> Result<Vec<usize>> {
    if let Some(c) = laws::check_law(g, Law::Invertive).counterexample {
        return Err(Error::NotCompletelyInverse(format!(
            "invertive law fails at {:?}",
            c.args
        )));
    }
    if let Some(c) = laws::check_law(g, Law::AgStarStar).counterexample {
        return Err(Error::NotCompletelyInverse(format!(
            "x(yz) = y(xz) fails at {:?}",
            c.args
        )));
    }
    let data = inverse_data(g);
    if let Some(a) = data.completely_inverse_failure() {
        return Err(Error::NotCompletelyInverse(format!(
            "element {a} has no unique commuting inverse"
        )));
    }
    Ok(data.inverse_map.expect("all elements commute with a unique inverse"))
}

// The three characterizations below deliberately share no intermediate
// results, so agreement between them is a real measurement.

/// Completely inverse AG**-groupoid.
pub fn is_completely_inverse_agss(g: &FiniteGroupoid) -> bool {
    laws::holds(g, Law::Invertive)
        && laws::holds(g, Law::AgStarStar)
        && inverse_data(g).is_completely_inverse()
}

/// Strongly regular AG-groupoid whose idempotents form a semilattice.
pub fn is_strongly_regular_ag_with_semilattice_e(g: &FiniteGroupoid) -> bool {
    laws::holds(g, Law::Invertive)
        && is_strongly_regular(g)
        && laws::is_semilattice_on(g, g.idempotents()).is_ok_and(|r| r.holds)
}

/// Strongly regular AG**-groupoid.
pub fn is_strongly_regular_agss(g: &FiniteGroupoid) -> bool {
    laws::holds(g, Law::Invertive) && laws::holds(g, Law::AgStarStar) && is_strongly_regular(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Class3 {
    #[serde(rename = "none")]
    None,
    #[serde(rename = "all-three")]
    AllThree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Characterizations {
    pub completely_inverse_agss: bool,
    pub strongly_regular_ag_e_semilattice: bool,
    pub strongly_regular_agss: bool,
}

impl Characterizations {
    pub fn measure(g: &FiniteGroupoid) -> Self {
        Characterizations {
            completely_inverse_agss: is_completely_inverse_agss(g),
            strongly_regular_ag_e_semilattice: is_strongly_regular_ag_with_semilattice_e(g),
            strongly_regular_agss: is_strongly_regular_agss(g),
        }
    }

    /// The common verdict, or `None` when the three disagree.
    pub fn class3(&self) -> Option<Class3> {
        match (
            self.completely_inverse_agss,
            self.strongly_regular_ag_e_semilattice,
            self.strongly_regular_agss,
        ) {
            (true, true, true) => Some(Class3::AllThree),
            (false, false, false) => Some(Class3::None),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    pub ag: LawReport,
    pub ag_star_star: LawReport,
    pub strongly_regular: bool,
    /// First element with no strongly regular witness.
    pub not_strongly_regular: Option<usize>,
    pub idempotents: ElementSet,
    pub e_semilattice: bool,
    pub e_semilattice_failure: Option<SemilatticeFailure>,
    pub completely_inverse: bool,
    /// First element with no unique commuting inverse.
    pub not_completely_inverse: Option<usize>,
    pub left_identities: ElementSet,
    pub left_simple: bool,
    /// A minimal proper left ideal, when one exists.
    pub proper_left_ideal: Option<ElementSet>,
    pub characterizations: Characterizations,
    pub class3: Option<Class3>,
    pub violations: Vec<String>,
}

impl PropertyReport {
    pub fn is_completely_inverse_agss(&self) -> bool {
        self.class3 == Some(Class3::AllThree)
    }
}

/// Measures every property and compares the three characterizations.
///
/// On an AG-groupoid the characterizations must agree; a disagreement is
/// recorded in `violations` and leaves `class3` unset.
pub fn classify(g: &FiniteGroupoid) -> PropertyReport {
    let ag = laws::check_law(g, Law::Invertive);
    let ag_star_star = laws::check_law(g, Law::AgStarStar);
    let not_strongly_regular = strongly_regular_failure(g);
    let idempotents = g.idempotents();
    let e_semilattice_failure = match laws::is_semilattice_on(g, idempotents) {
        Ok(r) => r.failure,
        Err(Error::Closure {
            left,
            right,
            product,
        }) => Some(SemilatticeFailure::NotClosed {
            left,
            right,
            product,
        }),
        Err(e) => unreachable!("semilattice check only fails on closure: {e}"),
    };
    let data = inverse_data(g);
    let not_completely_inverse = data.completely_inverse_failure();
    let left = aggroup::is_left_simple(g);
    let characterizations = Characterizations::measure(g);
    let class3 = characterizations.class3();
    let mut violations = Vec::new();
    if class3.is_none() && ag.holds {
        violations.push(format!(
            "THEOREM-VIOLATION: characterizations of completely inverse AG** disagree on an AG-groupoid: {characterizations:?}"
        ));
    }
    if ag.holds && ag_star_star.holds && not_strongly_regular.is_none() && e_semilattice_failure.is_some() {
        violations.push(
            "THEOREM-VIOLATION: strongly regular AG**-groupoid whose idempotents are not a semilattice"
                .into(),
        );
    }
    PropertyReport {
        strongly_regular: not_strongly_regular.is_none(),
        not_strongly_regular,
        idempotents,
        e_semilattice: e_semilattice_failure.is_none(),
        e_semilattice_failure,
        completely_inverse: not_completely_inverse.is_none(),
        not_completely_inverse,
        left_identities: g.left_identities(),
        left_simple: left.left_simple,
        proper_left_ideal: left.witness,
        ag,
        ag_star_star,
        characterizations,
        class3,
        violations,
    }
}
