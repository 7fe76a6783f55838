//! AG-groups, left simplicity and the principal-ideal lemmas for completely
//! inverse AG**-groupoids.

use serde::Serialize;

use crate::error::Result;
use crate::groupoid::FiniteGroupoid;
use crate::inverses::{self, completely_inverse_agss_inverses};
use crate::laws::{self, Law};
use crate::set::ElementSet;

/// Smallest left ideal (`S·I ⊆ I`) containing `a`.
pub fn left_ideal_closure(g: &FiniteGroupoid, a: usize) -> ElementSet {
    close(ElementSet::singleton(a), |set| {
        g.subset_product(g.carrier(), set)
    })
}

/// Smallest right ideal (`I·S ⊆ I`) containing `a`.
pub fn right_ideal_closure(g: &FiniteGroupoid, a: usize) -> ElementSet {
    close(ElementSet::singleton(a), |set| {
        g.subset_product(set, g.carrier())
    })
}

/// Smallest two-sided ideal containing `a`.
pub fn ideal_closure(g: &FiniteGroupoid, a: usize) -> ElementSet {
    close(ElementSet::singleton(a), |set| {
        g.subset_product(g.carrier(), set)
            .union(g.subset_product(set, g.carrier()))
    })
}

fn close(mut set: ElementSet, step: impl Fn(ElementSet) -> ElementSet) -> ElementSet {
    loop {
        let next = set.union(step(set));
        if next == set {
            return set;
        }
        set = next;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeftSimplicity {
    pub left_simple: bool,
    /// A smallest proper left ideal, when `left_simple` is false.
    pub witness: Option<ElementSet>,
}

/// Left simple: the only nonempty left ideal is `S`. Every nonempty left
/// ideal contains the closure of one of its elements, so it suffices to
/// close each singleton.
pub fn is_left_simple(g: &FiniteGroupoid) -> LeftSimplicity {
    let carrier = g.carrier();
    let mut witness: Option<ElementSet> = None;
    for a in g.elements() {
        let closure = left_ideal_closure(g, a);
        if closure != carrier && witness.is_none_or(|w| closure.len() < w.len()) {
            witness = Some(closure);
        }
    }
    LeftSimplicity {
        left_simple: witness.is_none(),
        witness,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AgGroupReport {
    pub ag: bool,
    pub left_identity: Option<usize>,
    /// AG-group by definition: AG, left identity `e`, and every `a` has
    /// some `a*` with `a*·a = e`.
    pub cond1: bool,
    /// Every `a` has some `a*` with `a·a* = e`.
    pub cond2: bool,
    /// Every `a` has exactly one `b` with `b·a = a·b = e`.
    pub cond3: bool,
    /// `x·a = b` has exactly one solution for all `a, b`.
    pub cond4: bool,
    /// Every `V(a)` is a singleton. Recorded for reference; it is not
    /// equivalent to the other conditions (a semilattice with a top element
    /// satisfies it).
    pub unique_inverses: bool,
    pub left_simple: bool,
    pub proper_left_ideal: Option<ElementSet>,
    pub is_ag_group: bool,
    pub violations: Vec<String>,
}

pub fn ag_group_report(g: &FiniteGroupoid) -> AgGroupReport {
    let ag = laws::holds(g, Law::Invertive);
    let left_identity = g.left_identities().first();
    let p = |a, b| g.product(a, b);

    let (cond1, cond2, cond3) = match left_identity {
        Some(e) => (
            ag && g.elements().all(|a| g.elements().any(|x| p(x, a) == e)),
            g.elements().all(|a| g.elements().any(|x| p(a, x) == e)),
            g.elements().all(|a| {
                g.elements()
                    .filter(|&b| p(b, a) == e && p(a, b) == e)
                    .count()
                    == 1
            }),
        ),
        None => (false, false, false),
    };
    let cond4 = g.elements().all(|a| {
        g.elements()
            .all(|b| g.elements().filter(|&x| p(x, a) == b).count() == 1)
    });
    let unique_inverses = inverses::inverse_data(g).inverse_map.is_some();
    let left = is_left_simple(g);

    let mut violations = Vec::new();
    if ag && left_identity.is_some() && !(cond1 == cond2 && cond2 == cond3 && cond3 == cond4) {
        violations.push(format!(
            "THEOREM-VIOLATION: AG-group conditions disagree on an AG-groupoid with left identity: \
             [{cond1}, {cond2}, {cond3}, {cond4}]"
        ));
    }
    AgGroupReport {
        ag,
        left_identity,
        cond1,
        cond2,
        cond3,
        cond4,
        unique_inverses,
        left_simple: left.left_simple,
        proper_left_ideal: left.witness,
        is_ag_group: cond1,
        violations,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma5Report {
    pub holds: bool,
    /// The common principal ideal `aS` for each `a`.
    pub principal_ideals: Vec<ElementSet>,
    pub failures: Vec<String>,
}

/// For a completely inverse AG**-groupoid: `aS = Sa = a⁻¹S = (aa⁻¹)S` is the
/// smallest left, right and two-sided ideal containing `a`; distinct
/// idempotents generate distinct ideals; `e(ab) = (ea)b` for idempotent `e`.
pub fn lemma5_report(g: &FiniteGroupoid) -> Result<Lemma5Report> {
    let inv = completely_inverse_agss_inverses(g)?;
    let s = g.carrier();
    let right = |a: usize| g.subset_product(ElementSet::singleton(a), s);
    let left = |a: usize| g.subset_product(s, ElementSet::singleton(a));
    let mut failures = Vec::new();
    let mut principal_ideals = Vec::with_capacity(g.order());

    for a in g.elements() {
        let a_s = right(a);
        let candidates = [
            ("Sa", left(a)),
            ("a⁻¹S", right(inv[a])),
            ("(aa⁻¹)S", right(g.product(a, inv[a]))),
            ("left ideal closure", left_ideal_closure(g, a)),
            ("right ideal closure", right_ideal_closure(g, a)),
            ("ideal closure", ideal_closure(g, a)),
        ];
        for (name, set) in candidates {
            if set != a_s {
                failures.push(format!("a = {a}: aS = {a_s:?} but {name} = {set:?}"));
            }
        }
        principal_ideals.push(a_s);
    }

    let e = g.idempotents();
    for x in e {
        for y in e {
            if x != y && right(x) == right(y) {
                failures.push(format!("idempotents {x} ≠ {y} with eS = fS"));
            }
        }
    }
    for x in e {
        for a in g.elements() {
            for b in g.elements() {
                if g.product(x, g.product(a, b)) != g.product(g.product(x, a), b) {
                    failures.push(format!("e(ab) ≠ (ea)b at e = {x}, a = {a}, b = {b}"));
                }
            }
        }
    }
    Ok(Lemma5Report {
        holds: failures.is_empty(),
        principal_ideals,
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma6Report {
    pub holds: bool,
    /// First pair where `aS = bS`, `aa⁻¹ ∈ bS ∧ bb⁻¹ ∈ aS` and `aa⁻¹ = bb⁻¹`
    /// do not evaluate identically.
    pub disagreement: Option<(usize, usize, [bool; 3])>,
}

pub fn lemma6_check(g: &FiniteGroupoid) -> Result<Lemma6Report> {
    let inv = completely_inverse_agss_inverses(g)?;
    let s = g.carrier();
    let ideal = |a: usize| g.subset_product(ElementSet::singleton(a), s);
    for a in g.elements() {
        for b in g.elements() {
            let (ea, eb) = (g.product(a, inv[a]), g.product(b, inv[b]));
            let verdicts = [
                ideal(a) == ideal(b),
                ideal(b).contains(ea) && ideal(a).contains(eb),
                ea == eb,
            ];
            if verdicts[0] != verdicts[1] || verdicts[1] != verdicts[2] {
                return Ok(Lemma6Report {
                    holds: false,
                    disagreement: Some((a, b, verdicts)),
                });
            }
        }
    }
    Ok(Lemma6Report {
        holds: true,
        disagreement: None,
    })
}

/// Pairwise verdicts of the three conditions, for inspection.
pub fn lemma6_verdicts(g: &FiniteGroupoid, a: usize, b: usize) -> Result<[bool; 3]> {
    let inv = completely_inverse_agss_inverses(g)?;
    let ideal = |x: usize| g.subset_product(ElementSet::singleton(x), g.carrier());
    let (ea, eb) = (g.product(a, inv[a]), g.product(b, inv[b]));
    Ok([
        ideal(a) == ideal(b),
        ideal(b).contains(ea) && ideal(a).contains(eb),
        ea == eb,
    ])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma7Report {
    /// AG, has a left identity, and is left simple.
    pub applies: bool,
    /// Vacuously true when the lemma does not apply.
    pub holds: bool,
}

/// A left simple AG-groupoid with left identity `e` is strongly regular with
/// `E(S) = {e}`.
pub fn lemma7_check(g: &FiniteGroupoid) -> Lemma7Report {
    let e = g.left_identities().first();
    let applies = e.is_some() && laws::holds(g, Law::Invertive) && is_left_simple(g).left_simple;
    let holds = !applies
        || (inverses::is_strongly_regular(g)
            && g.idempotents() == ElementSet::singleton(e.unwrap()));
    Lemma7Report { applies, holds }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem8Report {
    pub ag_group: bool,
    pub left_simple_completely_inverse_agss: bool,
    pub left_simple_ag_with_left_identity: bool,
    pub agree: bool,
    /// When all three hold: whether `aa⁻¹` is the left identity for every `a`.
    pub idempotent_is_left_identity: Option<bool>,
    pub violations: Vec<String>,
}

impl Theorem8Report {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn theorem8_check(g: &FiniteGroupoid) -> Theorem8Report {
    let ag_group = ag_group_report(g).is_ag_group;
    let left_simple = is_left_simple(g).left_simple;
    let cia = inverses::is_completely_inverse_agss(g);
    let left_simple_completely_inverse_agss = left_simple && cia;
    let left_simple_ag_with_left_identity =
        left_simple && laws::holds(g, Law::Invertive) && !g.left_identities().is_empty();
    let agree = ag_group == left_simple_completely_inverse_agss
        && ag_group == left_simple_ag_with_left_identity;

    let mut violations = Vec::new();
    if !agree {
        violations.push(format!(
            "THEOREM-VIOLATION: AG-group = {ag_group}, left simple completely inverse AG** = \
             {left_simple_completely_inverse_agss}, left simple AG with left identity = \
             {left_simple_ag_with_left_identity}"
        ));
    }
    let idempotent_is_left_identity = (agree && ag_group).then(|| {
        let e = g.left_identities().first().unwrap();
        match inverses::inverse_data(g).inverse_map {
            Some(inv) => g.elements().all(|a| g.product(a, inv[a]) == e),
            None => false,
        }
    });
    if idempotent_is_left_identity == Some(false) {
        violations.push("THEOREM-VIOLATION: some aa⁻¹ is not the left identity".into());
    }
    Theorem8Report {
        ag_group,
        left_simple_completely_inverse_agss,
        left_simple_ag_with_left_identity,
        agree,
        idempotent_is_left_identity,
        violations,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrincipalIdeals {
    pub element: usize,
    pub right: ElementSet,
    pub left: ElementSet,
}

/// `(aS, Sa)` for every element.
pub fn all_principal_ideals(g: &FiniteGroupoid) -> Vec<PrincipalIdeals> {
    g.elements()
        .map(|a| {
            let (right, left) = g.principal_ideals(a);
            PrincipalIdeals {
                element: a,
                right,
                left,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::fixtures;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn left_simplicity_examples() {
        assert_eq!(
            is_left_simple(&fixtures::ex2()),
            LeftSimplicity {
                left_simple: false,
                witness: Some(set(&[0]))
            }
        );
        assert!(is_left_simple(&fixtures::sub(5)).left_simple);
        assert_eq!(is_left_simple(&fixtures::sl2()).witness, Some(set(&[0])));
    }

    #[test]
    fn ag_group_report_examples() {
        let r = ag_group_report(&fixtures::sub(5));
        assert_eq!(r.left_identity, Some(0));
        assert!(r.cond1 && r.cond2 && r.cond3 && r.cond4 && r.is_ag_group);
        let g = fixtures::sub(5);
        for a in 0..5 {
            assert_eq!(g.product(a, a), 0);
        }

        let r = ag_group_report(&fixtures::ex2());
        assert!(r.left_identity.is_some());
        assert!(!r.is_ag_group);
        assert!(!r.cond4);
        assert!(r.violations.is_empty());

        let r = ag_group_report(&fixtures::sl2());
        assert_eq!(r.left_identity, Some(1));
        assert!(!r.cond1 && !r.cond2 && !r.cond3 && !r.cond4);
        assert!(r.unique_inverses);
        assert!(r.violations.is_empty());
    }

    #[test]
    fn lemma5_examples() {
        let r = lemma5_report(&fixtures::ex2()).unwrap();
        assert!(r.holds, "{:?}", r.failures);
        assert_eq!(r.principal_ideals[0], set(&[0]));

        let g = fixtures::sub(5);
        let r = lemma5_report(&g).unwrap();
        assert!(r.holds);
        assert!(r.principal_ideals.iter().all(|&i| i == g.carrier()));

        let r = lemma5_report(&fixtures::sl2()).unwrap();
        assert!(r.holds);
        assert_eq!(r.principal_ideals, vec![set(&[0]), set(&[0, 1])]);

        assert!(matches!(
            lemma5_report(&fixtures::lz2()),
            Err(Error::NotCompletelyInverse(_))
        ));
    }

    #[test]
    fn lemma6_examples() {
        let g = fixtures::sub(5);
        assert!(lemma6_check(&g).unwrap().holds);
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(lemma6_verdicts(&g, a, b).unwrap(), [true; 3]);
            }
        }
        let sl2 = fixtures::sl2();
        assert_eq!(lemma6_verdicts(&sl2, 0, 1).unwrap(), [false; 3]);
        assert!(lemma6_check(&sl2).unwrap().holds);
        let ex2 = fixtures::ex2();
        for a in ex2.elements() {
            assert_eq!(lemma6_verdicts(&ex2, a, a).unwrap(), [true; 3]);
        }
    }

    #[test]
    fn lemma7_examples() {
        assert_eq!(
            lemma7_check(&fixtures::sub(5)),
            Lemma7Report {
                applies: true,
                holds: true
            }
        );
        assert!(!lemma7_check(&fixtures::ex2()).applies);
        assert!(!lemma7_check(&fixtures::sl2()).applies);
    }

    #[test]
    fn theorem8_examples() {
        let r = theorem8_check(&fixtures::sub(5));
        assert!(r.ag_group && r.left_simple_completely_inverse_agss && r.left_simple_ag_with_left_identity);
        assert_eq!(r.idempotent_is_left_identity, Some(true));
        for g in [fixtures::ex2(), fixtures::lz2()] {
            let r = theorem8_check(&g);
            assert!(!r.ag_group && !r.left_simple_completely_inverse_agss);
            assert!(!r.left_simple_ag_with_left_identity);
            assert!(r.holds());
        }
    }
}
