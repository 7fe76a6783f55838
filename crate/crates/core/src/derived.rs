//! The derived product `a[•]b = (b•bb⁻¹)a` and the Clifford decomposition
//! of the commutative inverse semigroup it produces.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupoid::FiniteGroupoid;
use crate::inverses::{self, Class3};
use crate::laws::{self, Law};
use crate::set::ElementSet;

/// A completely inverse AG**-groupoid together with its derived product.
#[derive(Clone, Debug)]
pub struct DerivedGroupoid {
    base: FiniteGroupoid,
    derived: FiniteGroupoid,
    inverse: Vec<usize>,
}

/// Builds `(S, [•])`, checking that it is commutative and associative.
pub fn derive(g: &FiniteGroupoid) -> Result<DerivedGroupoid> {
    let report = inverses::classify(g);
    match report.class3 {
        Some(Class3::AllThree) => {}
        Some(Class3::None) => {
            return Err(Error::NotCompletelyInverse(
                "classifier reports none of the three characterizations".into(),
            ))
        }
        None => return Err(Error::TheoremViolation(report.violations.join("; "))),
    }
    let inverse = inverses::inverse_data(g)
        .inverse_map
        .expect("completely inverse groupoids have an inverse map");
    let p = |a, b| g.product(a, b);
    let mut derived = FiniteGroupoid::from_fn(g.order(), |a, b| p(p(b, p(b, inverse[b])), a))?;
    if let Some(labels) = g.labels() {
        derived = derived.with_labels(labels.to_vec())?;
    }
    for law in [Law::Commutative, Law::Associative] {
        if let Some(c) = laws::check_law(&derived, law).counterexample {
            return Err(Error::TheoremViolation(format!(
                "derived product is not {law} at {:?}",
                c.args
            )));
        }
    }
    Ok(DerivedGroupoid {
        base: g.clone(),
        derived,
        inverse,
    })
}

impl DerivedGroupoid {
    pub fn base(&self) -> &FiniteGroupoid {
        &self.base
    }

    pub fn derived(&self) -> &FiniteGroupoid {
        &self.derived
    }

    pub fn into_derived(self) -> FiniteGroupoid {
        self.derived
    }

    /// `a⁻¹` in the base groupoid.
    pub fn base_inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn base_inverses(&self) -> &[usize] {
        &self.inverse
    }

    /// `aa⁻¹`: the identity of the derived group containing `a`.
    pub fn group_identity(&self, a: usize) -> usize {
        self.base.product(a, self.inverse[a])
    }

    /// The idempotents of base and derived coincide and the identity map
    /// is an isomorphism between them.
    pub fn prop11_check(&self) -> bool {
        let e = self.base.idempotents();
        e == self.derived.idempotents()
            && e.iter().all(|x| {
                e.iter()
                    .all(|y| self.base.product(x, y) == self.derived.product(x, y))
            })
    }

    /// The derived inverse of `a`, computed in the base as `a•a⁻¹a⁻¹`.
    ///
    /// Checked against the alternative form `a⁻¹•aa⁻¹` and against the
    /// inverse relation in the derived structure.
    pub fn derived_inverse(&self, a: usize) -> Result<usize> {
        let g = &self.base;
        let inv = self.inverse[a];
        let x = g.product(a, g.product(inv, inv));
        let alt = g.product(inv, g.product(a, inv));
        if x != alt {
            return Err(Error::TheoremViolation(format!(
                "a•a⁻¹a⁻¹ = {x} but a⁻¹•aa⁻¹ = {alt} for a = {a}"
            )));
        }
        let d = &self.derived;
        let mutual = d.product(d.product(a, x), a) == a && d.product(d.product(x, a), x) == x;
        if !mutual {
            return Err(Error::TheoremViolation(format!(
                "{x} is not the derived inverse of {a}"
            )));
        }
        Ok(x)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupComponent {
    pub identity: usize,
    pub elements: ElementSet,
    pub abelian: bool,
}

/// The linking homomorphism `G_upper → G_lower`, `a ↦ lower·a`, for
/// `lower < upper`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Link {
    pub lower: usize,
    pub upper: usize,
    pub map: Vec<(usize, usize)>,
}

impl Link {
    pub fn apply(&self, a: usize) -> Option<usize> {
        self.map.iter().find(|(from, _)| *from == a).map(|&(_, to)| to)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliffordDecomposition {
    pub idempotents: ElementSet,
    /// Strict order `e < f` (i.e. `ef = e`, `e ≠ f`) as `(e, f)` pairs.
    pub order: Vec<(usize, usize)>,
    pub groups: Vec<GroupComponent>,
    pub links: Vec<Link>,
}

impl CliffordDecomposition {
    pub fn group_of(&self, a: usize) -> &GroupComponent {
        self.groups
            .iter()
            .find(|c| c.elements.contains(a))
            .expect("groups partition the carrier")
    }

    pub fn link(&self, lower: usize, upper: usize) -> Option<&Link> {
        self.links
            .iter()
            .find(|l| l.lower == lower && l.upper == upper)
    }
}

fn not_sga(msg: impl Into<String>) -> Error {
    Error::NotSemilatticeOfAbelianGroups(msg.into())
}

/// Splits a commutative inverse semigroup into its maximal subgroups
/// `G_e = {a : aa⁻¹ = e}` and linking maps, verifying every structural
/// invariant including `a·b = (ef·a)·(ef·b)` for `a ∈ G_e, b ∈ G_f`.
pub fn clifford_decompose(h: &FiniteGroupoid) -> Result<CliffordDecomposition> {
    for law in [Law::Commutative, Law::Associative] {
        if let Some(c) = laws::check_law(h, law).counterexample {
            return Err(not_sga(format!("{law} fails at {:?}", c.args)));
        }
    }
    let data = inverses::inverse_data(h);
    if let Some(a) = data.completely_inverse_failure() {
        return Err(not_sga(format!("element {a} has no unique commuting inverse")));
    }
    let inv = data.inverse_map.unwrap();
    let p = |a, b| h.product(a, b);
    let idempotents = h.idempotents();

    let mut groups = Vec::new();
    for e in idempotents {
        let elements: ElementSet = h.elements().filter(|&a| p(a, inv[a]) == e).collect();
        if let Some((l, r, prod)) = h.closure_witness(elements) {
            return Err(not_sga(format!("G_{e} not closed: {l}·{r} = {prod}")));
        }
        for a in elements {
            if p(e, a) != a || p(a, e) != a {
                return Err(not_sga(format!("{e} is not the identity of G_{e} at {a}")));
            }
            if !elements.contains(inv[a]) || p(inv[a], a) != e {
                return Err(not_sga(format!("{a} has no inverse in G_{e}")));
            }
        }
        let abelian = elements
            .iter()
            .all(|a| elements.iter().all(|b| p(a, b) == p(b, a)));
        if !abelian {
            return Err(not_sga(format!("G_{e} is not abelian")));
        }
        groups.push(GroupComponent {
            identity: e,
            elements,
            abelian,
        });
    }
    let covered = groups
        .iter()
        .fold(ElementSet::EMPTY, |acc, c| acc.union(c.elements));
    if covered != h.carrier() {
        let a = h.carrier().difference(covered).first().unwrap();
        return Err(not_sga(format!("aa⁻¹ is not idempotent for a = {a}")));
    }

    let mut order = Vec::new();
    let mut links = Vec::new();
    for lower in idempotents {
        for upper in idempotents {
            if lower == upper || p(lower, upper) != lower {
                continue;
            }
            order.push((lower, upper));
            let g_upper = groups.iter().find(|c| c.identity == upper).unwrap().elements;
            let g_lower = groups.iter().find(|c| c.identity == lower).unwrap().elements;
            let map: Vec<(usize, usize)> = g_upper.iter().map(|a| (a, p(lower, a))).collect();
            for &(a, image) in &map {
                if !g_lower.contains(image) {
                    return Err(not_sga(format!(
                        "link {upper}→{lower} sends {a} outside G_{lower}"
                    )));
                }
                for &(b, image_b) in &map {
                    if p(lower, p(a, b)) != p(image, image_b) {
                        return Err(not_sga(format!(
                            "link {upper}→{lower} is not a homomorphism at ({a}, {b})"
                        )));
                    }
                }
            }
            links.push(Link { lower, upper, map });
        }
    }
    let decomposition = CliffordDecomposition {
        idempotents,
        order,
        groups,
        links,
    };

    for outer in &decomposition.links {
        for inner in &decomposition.links {
            if outer.upper != inner.lower {
                continue;
            }
            let direct = decomposition.link(outer.lower, inner.upper).ok_or_else(|| {
                not_sga(format!(
                    "order not transitive: {} < {} < {}",
                    outer.lower, outer.upper, inner.upper
                ))
            })?;
            for &(a, mid) in &inner.map {
                if outer.apply(mid) != direct.apply(a) {
                    return Err(not_sga(format!(
                        "links do not compose at {a} along {} < {} < {}",
                        outer.lower, outer.upper, inner.upper
                    )));
                }
            }
        }
    }

    let through = |meet: usize, e: usize, a: usize| {
        if meet == e {
            a
        } else {
            decomposition.link(meet, e).and_then(|l| l.apply(a)).unwrap()
        }
    };
    for a in h.elements() {
        for b in h.elements() {
            let (e, f) = (p(a, inv[a]), p(b, inv[b]));
            let meet = p(e, f);
            if !idempotents.contains(meet) || (meet != e && decomposition.link(meet, e).is_none()) {
                return Err(not_sga(format!("{meet} is not below {e}")));
            }
            if meet != f && decomposition.link(meet, f).is_none() {
                return Err(not_sga(format!("{meet} is not below {f}")));
            }
            if p(through(meet, e, a), through(meet, f, b)) != p(a, b) {
                return Err(not_sga(format!(
                    "product {a}·{b} does not factor through G_{meet}"
                )));
            }
        }
    }
    Ok(decomposition)
}

/// For a semilattice of abelian groups the derived product reproduces the
/// original table exactly.
pub fn prop14_check(h: &FiniteGroupoid) -> Result<bool> {
    clifford_decompose(h)?;
    Ok(derive(h)?.derived() == h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::morphisms::are_isomorphic;

    #[test]
    fn derive_examples() {
        assert_eq!(derive(&fixtures::sub(5)).unwrap().derived(), &fixtures::add(5));
        assert_eq!(derive(&fixtures::sl2()).unwrap().derived(), &fixtures::sl2());
        assert_eq!(derive(&fixtures::add(5)).unwrap().derived(), &fixtures::add(5));
        assert!(matches!(
            derive(&fixtures::lz2()),
            Err(Error::NotCompletelyInverse(_))
        ));
    }

    #[test]
    fn prop11_examples() {
        for g in [fixtures::ex2(), fixtures::sub(5), fixtures::sl2()] {
            assert!(derive(&g).unwrap().prop11_check());
        }
        assert_eq!(fixtures::ex2().idempotents().to_vec(), vec![0, 1]);
    }

    #[test]
    fn derived_inverse_examples() {
        let d = derive(&fixtures::sub(5)).unwrap();
        assert_eq!(d.derived_inverse(2), Ok(3));
        let ex2 = derive(&fixtures::ex2()).unwrap();
        for e in fixtures::ex2().idempotents() {
            assert_eq!(ex2.derived_inverse(e), Ok(e));
        }
        // Search the derived table directly for c's inverse.
        let t = ex2.derived();
        let searched: Vec<usize> = t
            .elements()
            .filter(|&x| t.product(t.product(2, x), 2) == 2 && t.product(t.product(x, 2), x) == x)
            .collect();
        assert_eq!(searched, vec![ex2.derived_inverse(2).unwrap()]);
    }

    #[test]
    fn decomposition_of_a_group() {
        let c = clifford_decompose(&fixtures::add(5)).unwrap();
        assert_eq!(c.idempotents.to_vec(), vec![0]);
        assert_eq!(c.groups.len(), 1);
        assert_eq!(c.groups[0].elements, fixtures::add(5).carrier());
        assert!(c.links.is_empty());
    }

    #[test]
    fn decomposition_of_a_semilattice() {
        let c = clifford_decompose(&fixtures::sl2()).unwrap();
        assert_eq!(c.idempotents.to_vec(), vec![0, 1]);
        assert_eq!(c.groups.len(), 2);
        assert!(c.groups.iter().all(|g| g.elements.len() == 1));
        assert_eq!(c.order, vec![(0, 1)]);
        assert_eq!(c.link(0, 1).unwrap().map, vec![(1, 0)]);
    }

    #[test]
    fn decomposition_of_derived_example_two() {
        let d = derive(&fixtures::ex2()).unwrap();
        let c = clifford_decompose(d.derived()).unwrap();
        assert_eq!(c.idempotents.to_vec(), vec![0, 1]);
        assert_eq!(c.group_of(0).elements.to_vec(), vec![0]);
        let big = c.group_of(1);
        assert_eq!(big.elements.to_vec(), vec![1, 2, 3, 4]);
        assert!(big.abelian);
        let sub = d.derived().induced(big.elements).unwrap().groupoid;
        let klein = FiniteGroupoid::from_fn(4, |a, b| a ^ b).unwrap();
        let z4 = are_isomorphic(&sub, &fixtures::add(4)).is_some();
        let v4 = are_isomorphic(&sub, &klein).is_some();
        assert!(z4 ^ v4);
    }

    #[test]
    fn decomposition_rejects_non_clifford() {
        assert!(matches!(
            clifford_decompose(&fixtures::sub(5)),
            Err(Error::NotSemilatticeOfAbelianGroups(_))
        ));
        assert!(clifford_decompose(&fixtures::lz2()).is_err());
    }

    #[test]
    fn prop14_examples() {
        assert_eq!(prop14_check(&fixtures::add(5)), Ok(true));
        assert_eq!(prop14_check(&fixtures::sl2()), Ok(true));
        assert!(prop14_check(&fixtures::sub(5)).is_err());
    }

    #[test]
    fn group_identity_is_a_times_inverse() {
        let d = derive(&fixtures::ex2()).unwrap();
        let t = d.derived();
        for a in t.elements() {
            let e = d.group_identity(a);
            assert!(t.is_idempotent(e));
            assert_eq!(t.product(e, a), a);
        }
    }
}
