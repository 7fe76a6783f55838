//! Helpers shared by the integration tests. The oracles here recompute
//! everything from raw tables and do not call the library's deciders.

#![allow(dead_code)]

use std::collections::BTreeSet;

use aglab::FiniteGroupoid;
use rand::seq::SliceRandom;
use rand::Rng;

/// Every table of order `n`, in lexicographic order.
pub fn all_tables(n: usize) -> impl Iterator<Item = Vec<u8>> {
    let cells = n * n;
    let total = (n as u64).pow(cells as u32);
    (0..total).map(move |mut code| {
        let mut t = vec![0u8; cells];
        for i in (0..cells).rev() {
            t[i] = (code % n as u64) as u8;
            code /= n as u64;
        }
        t
    })
}

pub fn groupoid(n: usize, t: Vec<u8>) -> FiniteGroupoid {
    FiniteGroupoid::new(n, t).unwrap()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Raw table access without going through the library.
pub struct Raw<'a> {
    pub n: usize,
    pub t: &'a [u8],
}

impl<'a> Raw<'a> {
    pub fn new(n: usize, t: &'a [u8]) -> Self {
        Raw { n, t }
    }

    pub fn p(&self, a: usize, b: usize) -> usize {
        self.t[a * self.n + b] as usize
    }

    fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
    }

    pub fn invertive(&self) -> bool {
        self.triples()
            .all(|(x, y, z)| self.p(self.p(x, y), z) == self.p(self.p(z, y), x))
    }

    pub fn agss(&self) -> bool {
        self.triples()
            .all(|(x, y, z)| self.p(x, self.p(y, z)) == self.p(y, self.p(x, z)))
    }

    pub fn associative(&self) -> bool {
        self.triples()
            .all(|(x, y, z)| self.p(self.p(x, y), z) == self.p(x, self.p(y, z)))
    }

    pub fn commutative(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.p(x, y) == self.p(y, x)))
    }

    pub fn medial(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            self.triples().all(|(y, z, w)| {
                self.p(self.p(x, y), self.p(z, w)) == self.p(self.p(x, z), self.p(y, w))
            })
        })
    }

    pub fn paramedial(&self) -> bool {
        let n = self.n;
        (0..n).all(|x| {
            self.triples().all(|(y, z, w)| {
                self.p(self.p(x, y), self.p(z, w)) == self.p(self.p(w, y), self.p(z, x))
            })
        })
    }

    /// `V(a)`: all `b` with `(ab)a = a` and `(ba)b = b`.
    pub fn inverses(&self, a: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&b| self.p(self.p(a, b), a) == a && self.p(self.p(b, a), b) == b)
            .collect()
    }

    pub fn completely_inverse(&self) -> bool {
        (0..self.n).all(|a| match self.inverses(a)[..] {
            [b] => self.p(a, b) == self.p(b, a),
            _ => false,
        })
    }

    pub fn cia(&self) -> bool {
        self.invertive() && self.agss() && self.completely_inverse()
    }

    /// Commutative semigroup in which every element has exactly one inverse.
    pub fn sga(&self) -> bool {
        self.commutative() && self.associative() && (0..self.n).all(|a| self.inverses(a).len() == 1)
    }

    pub fn left_identity(&self) -> Option<usize> {
        (0..self.n).find(|&e| (0..self.n).all(|x| self.p(e, x) == x))
    }

    /// AG with a left identity `e` where every `a` has some `x` with `xa = e`.
    pub fn ag_group(&self) -> bool {
        self.invertive()
            && self.left_identity().is_some_and(|e| {
                (0..self.n).all(|a| (0..self.n).any(|x| self.p(x, a) == e))
            })
    }

    /// Least relabeled table over all permutations.
    pub fn canonical(&self) -> Vec<u8> {
        let n = self.n;
        permutations(n)
            .into_iter()
            .map(|phi| {
                let mut out = vec![0u8; n * n];
                for a in 0..n {
                    for b in 0..n {
                        out[phi[a] * n + phi[b]] = phi[self.p(a, b)] as u8;
                    }
                }
                out
            })
            .min()
            .unwrap()
    }
}

/// Canonical representatives of all tables of order `n` passing `pred`.
pub fn brute_force_census(n: usize, pred: impl Fn(&Raw) -> bool) -> BTreeSet<Vec<u8>> {
    all_tables(n)
        .filter(|t| pred(&Raw::new(n, t)))
        .map(|t| Raw::new(n, &t).canonical())
        .collect()
}
