//! Inflations: groupoids whose products all factor through a retraction
//! onto a subgroupoid.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupoid::{FiniteGroupoid, Subgroupoid};
use crate::inverses::completely_inverse_agss_inverses;
use crate::laws::{self, Law};
use crate::set::ElementSet;
use crate::MAX_ORDER;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fiber {
    pub base: usize,
    pub elements: ElementSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InflationWitness {
    pub base_elements: ElementSet,
    /// `retraction[x]` is the base element whose fiber contains `x`.
    pub retraction: Vec<usize>,
    /// One fiber per base element, in ascending order of base.
    pub fibers: Vec<Fiber>,
}

impl InflationWitness {
    fn from_retraction(base_elements: ElementSet, retraction: Vec<usize>) -> Self {
        let fibers = base_elements
            .iter()
            .map(|u| Fiber {
                base: u,
                elements: retraction
                    .iter()
                    .enumerate()
                    .filter(|&(_, &r)| r == u)
                    .map(|(x, _)| x)
                    .collect(),
            })
            .collect();
        InflationWitness {
            base_elements,
            retraction,
            fibers,
        }
    }

    /// Checks the definition against `g`, returning the first defect.
    pub fn verify(&self, g: &FiniteGroupoid) -> std::result::Result<(), String> {
        let r = &self.retraction;
        if r.len() != g.order() {
            return Err(format!("retraction has {} entries for order {}", r.len(), g.order()));
        }
        if let Some((x, y, p)) = g.closure_witness(self.base_elements) {
            return Err(format!("base is not closed: {x}·{y} = {p}"));
        }
        for x in g.elements() {
            if !self.base_elements.contains(r[x]) {
                return Err(format!("{x} retracts to {} outside the base", r[x]));
            }
            if r[r[x]] != r[x] {
                return Err(format!("retraction is not idempotent at {x}"));
            }
        }
        let mut covered = ElementSet::EMPTY;
        for f in &self.fibers {
            if !f.elements.contains(f.base) {
                return Err(format!("{} is not in its own fiber", f.base));
            }
            if !covered.intersection(f.elements).is_empty() {
                return Err(format!("fiber of {} overlaps an earlier fiber", f.base));
            }
            covered = covered.union(f.elements);
        }
        if covered != g.carrier() || self.fibers.len() != self.base_elements.len() {
            return Err("fibers do not partition the carrier".into());
        }
        for x in g.elements() {
            for y in g.elements() {
                if g.product(x, y) != g.product(r[x], r[y]) {
                    return Err(format!(
                        "{x}·{y} = {} but the base product is {}",
                        g.product(x, y),
                        g.product(r[x], r[y])
                    ));
                }
            }
        }
        Ok(())
    }

    /// The base as a groupoid in its own right.
    pub fn base(&self, g: &FiniteGroupoid) -> Result<Subgroupoid> {
        g.induced(self.base_elements)
    }
}

/// Direct check of the definition against the candidate base `u`.
///
/// Base elements sit in their own fibers. Every other `x` must behave like
/// some `u` in all products with base elements and satisfy `x·x = u·u`;
/// any two such `u` give the same products, so the smallest is taken.
pub fn is_inflation_of(g: &FiniteGroupoid, u: ElementSet) -> Option<InflationWitness> {
    if u.is_empty() || !u.is_subset(g.carrier()) || g.closure_witness(u).is_some() {
        return None;
    }
    let mut retraction = Vec::with_capacity(g.order());
    for x in g.elements() {
        if u.contains(x) {
            retraction.push(x);
            continue;
        }
        let candidate = u.iter().find(|&c| {
            g.product(x, x) == g.product(c, c)
                && u.iter()
                    .all(|v| g.product(x, v) == g.product(c, v) && g.product(v, x) == g.product(v, c))
        })?;
        retraction.push(candidate);
    }
    let witness = InflationWitness::from_retraction(u, retraction);
    witness.verify(g).ok().map(|_| witness)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InflationReport {
    pub medial: bool,
    /// `S²` induces a completely inverse AG**-groupoid.
    pub s2_good: bool,
    pub square: ElementSet,
    /// Built from `r(x) = x²(x²)⁻¹•x` when `medial` and `s2_good`.
    pub witness: Option<InflationWitness>,
    /// `ab = (a²b²)(ab)⁻¹` for all `a, b`, when `medial` and `s2_good`.
    pub product_identity: Option<bool>,
    /// A completely inverse base found by searching every closed superset
    /// of `S²`, when medial.
    pub searched_base: Option<ElementSet>,
    pub violations: Vec<String>,
}

impl InflationReport {
    pub fn is_inflation(&self) -> bool {
        self.witness.is_some()
    }
}

/// Evaluates both directions of the inflation criterion for medial groupoids.
pub fn theorem10_check(g: &FiniteGroupoid) -> InflationReport {
    let medial = laws::holds(g, Law::Medial);
    let (square, sub) = g.square_subgroupoid();
    let s2_inverses = sub
        .as_ref()
        .ok()
        .and_then(|s| completely_inverse_agss_inverses(&s.groupoid).ok().map(|inv| (s, inv)));
    let s2_good = s2_inverses.is_some();
    let mut violations = Vec::new();
    let mut witness = None;
    let mut product_identity = None;

    if let (true, Some((s, inv))) = (medial, &s2_inverses) {
        // inverse of an element of S², computed inside S²
        let inverse = |x: usize| s.embedding[inv[s.index_of(x).expect("element of S²")]];
        let p = |a, b| g.product(a, b);
        let retraction: Vec<usize> = g
            .elements()
            .map(|x| {
                let x2 = p(x, x);
                p(p(x2, inverse(x2)), x)
            })
            .collect();
        let w = InflationWitness::from_retraction(square, retraction);
        match w.verify(g) {
            Ok(()) => witness = Some(w),
            Err(e) => violations.push(format!(
                "THEOREM-VIOLATION: medial with S² completely inverse AG**, but the retraction fails: {e}"
            )),
        }
        let identity = g.elements().all(|a| {
            g.elements()
                .all(|b| p(a, b) == p(p(p(a, a), p(b, b)), inverse(p(a, b))))
        });
        if !identity {
            violations.push("THEOREM-VIOLATION: ab = (a²b²)(ab)⁻¹ fails".into());
        }
        product_identity = Some(identity);
    }

    let mut searched_base = None;
    if medial {
        // Any base contains S², so only supersets of S² can qualify.
        let rest: Vec<usize> = g.carrier().difference(square).iter().collect();
        for mask in 0u32..(1 << rest.len()) {
            let mut u = square;
            for (i, &x) in rest.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    u.insert(x);
                }
            }
            let Some(_) = is_inflation_of(g, u) else { continue };
            let Ok(base) = g.induced(u) else { continue };
            if completely_inverse_agss_inverses(&base.groupoid).is_ok() {
                searched_base = Some(u);
                break;
            }
        }
        match searched_base {
            Some(u) if !s2_good || u != square => violations.push(format!(
                "THEOREM-VIOLATION: inflation of a completely inverse AG**-groupoid on {u:?}, \
                 but S² = {square:?} is not such a base"
            )),
            None if witness.is_some() => violations.push(
                "THEOREM-VIOLATION: retraction verified but the base search found nothing".into(),
            ),
            _ => {}
        }
    }

    InflationReport {
        medial,
        s2_good,
        square,
        witness,
        product_identity,
        searched_base,
        violations,
    }
}

/// Inflates `u` by giving base element `e` a fiber of `sizes[e]` elements.
/// Base elements keep their indices; the extra elements follow, grouped by
/// base element in ascending order.
pub fn inflate(u: &FiniteGroupoid, sizes: &[usize]) -> Result<FiniteGroupoid> {
    if sizes.len() != u.order() {
        return Err(Error::Input(format!(
            "{} fiber sizes given for order {}",
            sizes.len(),
            u.order()
        )));
    }
    if let Some(e) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::Input(format!("fiber of {e} must be nonempty")));
    }
    let total: usize = sizes.iter().sum();
    if total > MAX_ORDER {
        return Err(Error::Size {
            order: total,
            bound: MAX_ORDER,
        });
    }
    let mut base: Vec<usize> = u.elements().collect();
    let mut labels: Vec<String> = u.elements().map(|x| u.label(x)).collect();
    for (e, &s) in sizes.iter().enumerate() {
        for k in 1..s {
            base.push(e);
            labels.push(format!("{}'{k}", u.label(e)));
        }
    }
    let g = FiniteGroupoid::from_fn(total, |x, y| u.product(base[x], base[y]))?;
    Ok(match g.clone().with_labels(labels) {
        Ok(labelled) => labelled,
        Err(_) => g,
    })
}
