//! Equational laws, decided exhaustively with lexicographically-first
//! counterexamples.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupoid::FiniteGroupoid;
use crate::set::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Law {
    /// `(xy)z = (zy)x`
    Invertive,
    /// `(xy)(zw) = (xz)(yw)`
    Medial,
    /// `(xy)(zw) = (wy)(zx)`
    Paramedial,
    /// `x(yz) = y(xz)`
    AgStarStar,
    /// `(xy)z = x(yz)`
    Associative,
    /// `xy = yx`
    Commutative,
}

impl Law {
    pub const ALL: [Law; 6] = [
        Law::Invertive,
        Law::Medial,
        Law::Paramedial,
        Law::AgStarStar,
        Law::Associative,
        Law::Commutative,
    ];

    pub fn arity(self) -> usize {
        match self {
            Law::Commutative => 2,
            Law::Invertive | Law::AgStarStar | Law::Associative => 3,
            Law::Medial | Law::Paramedial => 4,
        }
    }

    /// Both sides of the law evaluated at `args` (length = arity).
    #[inline]
    pub fn sides(self, g: &FiniteGroupoid, args: &[usize]) -> (usize, usize) {
        let p = |a, b| g.product(a, b);
        match self {
            Law::Invertive => {
                let [x, y, z] = [args[0], args[1], args[2]];
                (p(p(x, y), z), p(p(z, y), x))
            }
            Law::Medial => {
                let [x, y, z, w] = [args[0], args[1], args[2], args[3]];
                (p(p(x, y), p(z, w)), p(p(x, z), p(y, w)))
            }
            Law::Paramedial => {
                let [x, y, z, w] = [args[0], args[1], args[2], args[3]];
                (p(p(x, y), p(z, w)), p(p(w, y), p(z, x)))
            }
            Law::AgStarStar => {
                let [x, y, z] = [args[0], args[1], args[2]];
                (p(x, p(y, z)), p(y, p(x, z)))
            }
            Law::Associative => {
                let [x, y, z] = [args[0], args[1], args[2]];
                (p(p(x, y), z), p(x, p(y, z)))
            }
            Law::Commutative => (p(args[0], args[1]), p(args[1], args[0])),
        }
    }

    pub fn cli_name(self) -> &'static str {
        match self {
            Law::Invertive => "invertive",
            Law::Medial => "medial",
            Law::Paramedial => "paramedial",
            Law::AgStarStar => "agss",
            Law::Associative => "assoc",
            Law::Commutative => "comm",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for Law {
    type Err = Error;

    fn from_str(s: &str) -> Result<Law> {
        Ok(match s {
            "invertive" => Law::Invertive,
            "medial" => Law::Medial,
            "paramedial" => Law::Paramedial,
            "agss" | "ag_star_star" => Law::AgStarStar,
            "assoc" | "associative" => Law::Associative,
            "comm" | "commutative" => Law::Commutative,
            other => return Err(Error::Input(format!("unknown law {other:?}"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub args: Vec<usize>,
    pub left: usize,
    pub right: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: Law,
    pub holds: bool,
    pub counterexample: Option<Counterexample>,
}

/// Exhaustive scan in lexicographic order of the argument tuple; the first
/// failing tuple is the witness.
pub fn check_law(g: &FiniteGroupoid, law: Law) -> LawReport {
    let counterexample = first_failure(g, law);
    LawReport {
        law,
        holds: counterexample.is_none(),
        counterexample,
    }
}

pub fn holds(g: &FiniteGroupoid, law: Law) -> bool {
    first_failure(g, law).is_none()
}

fn first_failure(g: &FiniteGroupoid, law: Law) -> Option<Counterexample> {
    let n = g.order();
    let k = law.arity();
    let mut args = vec![0usize; k];
    loop {
        let (left, right) = law.sides(g, &args);
        if left != right {
            return Some(Counterexample { args, left, right });
        }
        // odometer, last position fastest
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            args[i] += 1;
            if args[i] < n {
                break;
            }
            args[i] = 0;
        }
    }
}

pub fn left_identities(g: &FiniteGroupoid) -> ElementSet {
    g.left_identities()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SemilatticeFailure {
    /// Only reported where closure is not a precondition.
    NotClosed { left: usize, right: usize, product: usize },
    NotIdempotent { x: usize, square: usize },
    NotCommutative { x: usize, y: usize, xy: usize, yx: usize },
    NotAssociative { x: usize, y: usize, z: usize, left: usize, right: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemilatticeReport {
    pub holds: bool,
    pub failure: Option<SemilatticeFailure>,
}

/// Whether the product restricted to `set` is idempotent, commutative and
/// associative. `set` must be closed.
pub fn is_semilattice_on(g: &FiniteGroupoid, set: ElementSet) -> Result<SemilatticeReport> {
    if let Some((left, right, product)) = g.closure_witness(set) {
        return Err(Error::Closure {
            left,
            right,
            product,
        });
    }
    let failure = semilattice_failure(g, set);
    Ok(SemilatticeReport {
        holds: failure.is_none(),
        failure,
    })
}

fn semilattice_failure(g: &FiniteGroupoid, set: ElementSet) -> Option<SemilatticeFailure> {
    for x in set {
        let square = g.product(x, x);
        if square != x {
            return Some(SemilatticeFailure::NotIdempotent { x, square });
        }
    }
    for x in set {
        for y in set {
            let (xy, yx) = (g.product(x, y), g.product(y, x));
            if xy != yx {
                return Some(SemilatticeFailure::NotCommutative { x, y, xy, yx });
            }
        }
    }
    for x in set {
        for y in set {
            for z in set {
                let (left, right) = Law::Associative.sides(g, &[x, y, z]);
                if left != right {
                    return Some(SemilatticeFailure::NotAssociative { x, y, z, left, right });
                }
            }
        }
    }
    None
}
