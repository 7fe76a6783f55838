//! Permutations, canonical forms, isomorphism and automorphism search, and
//! the bijection conditions relating two groupoids through their derived
//! products.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use serde::Serialize;

use crate::derived::derive;
use crate::error::{Error, Result};
use crate::groupoid::FiniteGroupoid;
use crate::set::ElementSet;

/// A bijection on `{0, .., n-1}` stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn inverse(&self) -> Self {
        let mut out = vec![0; self.0.len()];
        for (x, &y) in self.0.iter().enumerate() {
            out[y] = x;
        }
        Permutation(out)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_involution(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| self.0[x] == i)
    }

    pub fn fixes(&self, set: ElementSet) -> bool {
        set.iter().all(|x| self.0[x] == x)
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl Deref for Permutation {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Whether `map` is a homomorphism from `g` to `h`: `map(a·b) = map(a)·map(b)`.
pub fn is_homomorphism(g: &FiniteGroupoid, h: &FiniteGroupoid, map: &[usize]) -> bool {
    g.elements().all(|a| {
        g.elements()
            .all(|b| map[g.product(a, b)] == h.product(map[a], map[b]))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Least row-major table over all relabelings (unlabeled).
    pub table: FiniteGroupoid,
    /// A relabeling of the input achieving it: `g.relabel(relabeling) == table`.
    pub relabeling: Permutation,
}

const UNSET: usize = usize::MAX;

struct CanonSearch<'a> {
    g: &'a FiniteGroupoid,
    n: usize,
    /// new label -> old element
    order: Vec<usize>,
    /// old element -> new label
    label: Vec<usize>,
    best: Option<Vec<u8>>,
    best_label: Vec<usize>,
}

impl CanonSearch<'_> {
    /// Compares the partially determined relabeled table against the best
    /// table so far, cell by cell in row-major order. A cell whose operands
    /// are labeled but whose product is not yet labeled is known to be at
    /// least `k`; any other undetermined cell stops the comparison.
    fn bound(&self, best: &[u8]) -> Ordering {
        let (n, k) = (self.n, self.order.len());
        for (idx, &b) in best.iter().enumerate() {
            let (i, j) = (idx / n, idx % n);
            if i >= k || j >= k {
                return Ordering::Equal;
            }
            let prod = self.g.product(self.order[i], self.order[j]);
            let l = self.label[prod];
            if l == UNSET {
                return if k > b as usize {
                    Ordering::Greater
                } else {
                    Ordering::Equal
                };
            }
            match (l as u8).cmp(&b) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    fn run(&mut self) {
        let k = self.order.len();
        if k == self.n {
            let table: Vec<u8> = (0..self.n * self.n)
                .map(|idx| {
                    let (i, j) = (idx / self.n, idx % self.n);
                    self.label[self.g.product(self.order[i], self.order[j])] as u8
                })
                .collect();
            if self.best.as_ref().is_none_or(|b| table < *b) {
                self.best = Some(table);
                self.best_label = self.label.clone();
            }
            return;
        }
        if let Some(best) = &self.best {
            if self.bound(best) == Ordering::Greater {
                return;
            }
        }
        for x in 0..self.n {
            if self.label[x] != UNSET {
                continue;
            }
            self.label[x] = k;
            self.order.push(x);
            self.run();
            self.order.pop();
            self.label[x] = UNSET;
        }
    }
}

/// Lexicographically least row-major table over all `n!` relabelings,
/// found by branch and bound on partial relabelings.
pub fn canonical_form(g: &FiniteGroupoid) -> CanonicalForm {
    let n = g.order();
    let mut search = CanonSearch {
        g,
        n,
        order: Vec::with_capacity(n),
        label: vec![UNSET; n],
        best: None,
        best_label: Vec::new(),
    };
    search.run();
    let table = FiniteGroupoid::new(n, search.best.unwrap()).expect("relabeling preserves validity");
    let relabeling = Permutation(search.best_label);
    debug_assert_eq!(g.relabel(&relabeling).without_labels(), table);
    CanonicalForm { table, relabeling }
}

/// An isomorphism `g → h` when one exists, verified before it is returned.
pub fn are_isomorphic(g: &FiniteGroupoid, h: &FiniteGroupoid) -> Option<Permutation> {
    if g.order() != h.order() {
        return None;
    }
    let cg = canonical_form(g);
    let ch = canonical_form(h);
    if cg.table != ch.table {
        return None;
    }
    let iso = ch.relabeling.inverse().compose(&cg.relabeling);
    assert!(
        is_homomorphism(g, h, &iso),
        "canonical forms agree but the composed relabeling is not an isomorphism"
    );
    Some(iso)
}

/// All isomorphisms `g → h` in lexicographic order of their image lists,
/// stopping after `limit`.
pub fn isomorphisms(g: &FiniteGroupoid, h: &FiniteGroupoid, limit: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    if g.order() != h.order() || limit == 0 {
        return out;
    }
    let n = g.order();
    let mut map = vec![UNSET; n];
    extend_isomorphism(g, h, &mut map, ElementSet::EMPTY, 0, &mut out, limit);
    out
}

fn extend_isomorphism(
    g: &FiniteGroupoid,
    h: &FiniteGroupoid,
    map: &mut Vec<usize>,
    used: ElementSet,
    x: usize,
    out: &mut Vec<Permutation>,
    limit: usize,
) -> bool {
    let n = g.order();
    if x == n {
        if is_homomorphism(g, h, map) {
            out.push(Permutation(map.clone()));
        }
        return out.len() >= limit;
    }
    for y in 0..n {
        if used.contains(y) {
            continue;
        }
        map[x] = y;
        let mut used_now = used;
        used_now.insert(y);
        if consistent(g, h, map, used_now, x) && extend_isomorphism(g, h, map, used_now, x + 1, out, limit) {
            map[x] = UNSET;
            return true;
        }
        map[x] = UNSET;
    }
    false
}

/// Checks every product involving the newly mapped `x` and earlier elements.
fn consistent(g: &FiniteGroupoid, h: &FiniteGroupoid, map: &[usize], used: ElementSet, x: usize) -> bool {
    for a in 0..=x {
        for (l, r) in [(a, x), (x, a)] {
            let target = h.product(map[l], map[r]);
            let image = map[g.product(l, r)];
            if image == UNSET {
                if used.contains(target) {
                    return false;
                }
            } else if image != target {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Automorphism {
    pub perm: Permutation,
    pub involutive: bool,
    pub e_fixed: bool,
}

impl Automorphism {
    /// Validates `perm` as an automorphism of `g` and records its flags.
    pub fn new(g: &FiniteGroupoid, perm: Permutation) -> Result<Self> {
        if perm.len() != g.order() {
            return Err(Error::InvalidPermutation(format!(
                "length {} does not match order {}",
                perm.len(),
                g.order()
            )));
        }
        if !is_homomorphism(g, g, &perm) {
            return Err(Error::InvalidPermutation(format!(
                "{perm:?} is not an automorphism"
            )));
        }
        Ok(Self::flagged(g, perm))
    }

    fn flagged(g: &FiniteGroupoid, perm: Permutation) -> Self {
        Automorphism {
            involutive: perm.is_involution(),
            e_fixed: perm.fixes(g.idempotents()),
            perm,
        }
    }

    pub fn in_aut2e(&self) -> bool {
        self.involutive && self.e_fixed
    }
}

pub fn automorphisms(g: &FiniteGroupoid) -> Vec<Automorphism> {
    isomorphisms(g, g, usize::MAX)
        .into_iter()
        .map(|p| Automorphism::flagged(g, p))
        .collect()
}

/// Involutive automorphisms fixing every idempotent.
pub fn aut2e(g: &FiniteGroupoid) -> Vec<Automorphism> {
    automorphisms(g).into_iter().filter(Automorphism::in_aut2e).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    /// `B` is an isomorphism between the derived products.
    pub cond_a: bool,
    /// `B(a•b) = [B(a⁻¹)]⁻¹ ∘ B(b)` for all `a, b`.
    pub cond_b: bool,
    pub violations: Vec<String>,
}

/// Evaluates both sides of the bijection criterion for `B: g → h` between
/// completely inverse AG**-groupoids; they must agree.
pub fn theorem15_check(b: &Permutation, g: &FiniteGroupoid, h: &FiniteGroupoid) -> Result<BijectionReport> {
    if g.order() != h.order() || b.len() != g.order() {
        return Err(Error::InvalidPermutation(format!(
            "bijection of length {} between orders {} and {}",
            b.len(),
            g.order(),
            h.order()
        )));
    }
    let dg = derive(g)?;
    let dh = derive(h)?;
    let cond_a = is_homomorphism(dg.derived(), dh.derived(), b);
    let cond_b = g.elements().all(|x| {
        g.elements().all(|y| {
            let rhs = h.product(dh.base_inverse(b.apply(dg.base_inverse(x))), b.apply(y));
            b.apply(g.product(x, y)) == rhs
        })
    });
    let mut violations = Vec::new();
    if cond_a != cond_b {
        violations.push(format!(
            "THEOREM-VIOLATION: bijection {b:?} is a derived isomorphism = {cond_a} \
             but satisfies the product condition = {cond_b}"
        ));
    }
    Ok(BijectionReport {
        cond_a,
        cond_b,
        violations,
    })
}

/// `B` is an automorphism of `(S, [•])` iff `B(a•b) = [B(a⁻¹)]⁻¹•B(b)`.
pub fn cor16_check(b: &Permutation, g: &FiniteGroupoid) -> Result<BijectionReport> {
    theorem15_check(b, g, g)
}
