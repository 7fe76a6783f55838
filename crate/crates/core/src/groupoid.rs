use std::hash::{Hash, Hasher};
use std::ops::Range;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::set::ElementSet;
use crate::MAX_ORDER;

/// A finite groupoid (magma) given by its Cayley table.
///
/// Elements are the dense indices `0..order`. The table is stored row-major
/// with the row as the left operand, so `table[a * order + b] = a·b`.
/// Labels are for presentation only: equality and hashing ignore them.
#[derive(Clone, Debug)]
pub struct FiniteGroupoid {
    order: usize,
    table: Vec<u8>,
    labels: Option<Vec<String>>,
}

/// A subset closed under the product, together with the induced groupoid on
/// the re-indexed carrier.
#[derive(Clone, Debug)]
pub struct Subgroupoid {
    pub groupoid: FiniteGroupoid,
    /// `embedding[i]` is the element of the parent that became element `i`.
    pub embedding: Vec<usize>,
}

impl Subgroupoid {
    /// Maps an element of the parent back to its index in the subgroupoid.
    pub fn index_of(&self, parent_element: usize) -> Option<usize> {
        self.embedding.iter().position(|&e| e == parent_element)
    }
}

impl FiniteGroupoid {
    pub fn new(order: usize, table: Vec<u8>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Input("order must be positive".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::Size {
                order,
                bound: MAX_ORDER,
            });
        }
        if table.len() != order * order {
            return Err(Error::Input(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if let Some(&bad) = table.iter().find(|&&v| v as usize >= order) {
            return Err(Error::IndexOutOfRange {
                element: bad as usize,
                order,
            });
        }
        Ok(FiniteGroupoid {
            order,
            table,
            labels: None,
        })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::Size {
                order,
                bound: MAX_ORDER,
            });
        }
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let v = f(a, b);
                if v >= order {
                    return Err(Error::IndexOutOfRange { element: v, order });
                }
                table.push(v as u8);
            }
        }
        Self::new(order, table)
    }

    pub fn from_rows(rows: &[&[usize]]) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Input("table is not square".into()));
        }
        Self::from_fn(n, |a, b| rows[a][b])
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::Input(format!(
                "{} labels given for order {}",
                labels.len(),
                self.order
            )));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::Input(format!("duplicate label {l:?}")));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Row-major table, row = left operand.
    pub fn table(&self) -> &[u8] {
        &self.table
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn elements(&self) -> Range<usize> {
        0..self.order
    }

    pub fn carrier(&self) -> ElementSet {
        ElementSet::full(self.order)
    }

    /// `a·b`. Panics when an operand is out of range; see [`Self::try_product`].
    #[inline]
    pub fn product(&self, a: usize, b: usize) -> usize {
        assert!(a < self.order && b < self.order, "element out of range");
        self.table[a * self.order + b] as usize
    }

    pub fn try_product(&self, a: usize, b: usize) -> Result<usize> {
        for x in [a, b] {
            if x >= self.order {
                return Err(Error::IndexOutOfRange {
                    element: x,
                    order: self.order,
                });
            }
        }
        Ok(self.product(a, b))
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u8]> {
        self.table.chunks(self.order)
    }

    pub fn subset_product(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for x in a {
            for y in b {
                out.insert(self.product(x, y));
            }
        }
        out
    }

    /// `E(S) = {x : xx = x}`.
    pub fn idempotents(&self) -> ElementSet {
        self.elements().filter(|&x| self.product(x, x) == x).collect()
    }

    pub fn is_idempotent(&self, x: usize) -> bool {
        self.product(x, x) == x
    }

    /// `(aS, Sa)`.
    pub fn principal_ideals(&self, a: usize) -> (ElementSet, ElementSet) {
        let s = self.carrier();
        let a = ElementSet::singleton(a);
        (self.subset_product(a, s), self.subset_product(s, a))
    }

    /// First pair of members whose product leaves `set`, in lexicographic order.
    pub fn closure_witness(&self, set: ElementSet) -> Option<(usize, usize, usize)> {
        for x in set {
            for y in set {
                let p = self.product(x, y);
                if !set.contains(p) {
                    return Some((x, y, p));
                }
            }
        }
        None
    }

    /// The groupoid induced on a closed subset, re-indexed in ascending order.
    pub fn induced(&self, set: ElementSet) -> Result<Subgroupoid> {
        if set.is_empty() {
            return Err(Error::Input("cannot induce on the empty set".into()));
        }
        if let Some(&bad) = set.to_vec().iter().find(|&&x| x >= self.order) {
            return Err(Error::IndexOutOfRange {
                element: bad,
                order: self.order,
            });
        }
        if let Some((left, right, product)) = self.closure_witness(set) {
            return Err(Error::Closure {
                left,
                right,
                product,
            });
        }
        let embedding = set.to_vec();
        let mut index = vec![usize::MAX; self.order];
        for (i, &e) in embedding.iter().enumerate() {
            index[e] = i;
        }
        let m = embedding.len();
        let mut groupoid =
            FiniteGroupoid::from_fn(m, |i, j| index[self.product(embedding[i], embedding[j])])?;
        if let Some(labels) = &self.labels {
            groupoid = groupoid.with_labels(embedding.iter().map(|&e| labels[e].clone()).collect())?;
        }
        Ok(Subgroupoid {
            groupoid,
            embedding,
        })
    }

    /// `S² = S·S` and, when closed, the groupoid it induces.
    pub fn square_subgroupoid(&self) -> (ElementSet, Result<Subgroupoid>) {
        let s2 = self.subset_product(self.carrier(), self.carrier());
        (s2, self.induced(s2))
    }

    /// The isomorphic copy obtained by renaming every element `x` to `phi[x]`:
    /// the result satisfies `phi(a)·phi(b) = phi(a·b)`.
    pub fn relabel(&self, phi: &[usize]) -> FiniteGroupoid {
        let n = self.order;
        assert_eq!(phi.len(), n, "permutation length must equal the order");
        let mut table = vec![0u8; n * n];
        for a in 0..n {
            for b in 0..n {
                table[phi[a] * n + phi[b]] = phi[self.product(a, b)] as u8;
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for (x, label) in l.iter().enumerate() {
                out[phi[x]] = label.clone();
            }
            out
        });
        FiniteGroupoid {
            order: n,
            table,
            labels,
        }
    }

    /// Left identities: `e` with `e·x = x` for every `x`.
    pub fn left_identities(&self) -> ElementSet {
        self.elements()
            .filter(|&e| self.elements().all(|x| self.product(e, x) == x))
            .collect()
    }
}

/// Serialized as `{order, labels, rows}` with rows as index lists.
impl Serialize for FiniteGroupoid {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let labels: Vec<String> = self.elements().map(|x| self.label(x)).collect();
        let rows: Vec<&[u8]> = self.rows().collect();
        let mut s = serializer.serialize_struct("FiniteGroupoid", 3)?;
        s.serialize_field("order", &self.order)?;
        s.serialize_field("labels", &labels)?;
        s.serialize_field("rows", &rows)?;
        s.end()
    }
}

impl PartialEq for FiniteGroupoid {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroupoid {}

/// By order, then row-major table.
impl Ord for FiniteGroupoid {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.order, &self.table).cmp(&(other.order, &other.table))
    }
}

impl PartialOrd for FiniteGroupoid {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Hash for FiniteGroupoid {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.order.hash(state);
        self.table.hash(state);
    }
}
