//! Named groupoids used throughout the tests, examples and docs.
//!
//! The tables live in `fixtures/*.tbl` and are compiled in, so a fixture is
//! always the checked-in file, never a re-derivation of it.

use crate::format::parse_table;
use crate::groupoid::FiniteGroupoid;

const FILES: &[(&str, &str)] = &[
    ("ex2", include_str!("../fixtures/ex2.tbl")),
    ("sl2", include_str!("../fixtures/sl2.tbl")),
    ("lz2", include_str!("../fixtures/lz2.tbl")),
    ("infl3", include_str!("../fixtures/infl3.tbl")),
    ("trivial", include_str!("../fixtures/trivial.tbl")),
    ("const2", include_str!("../fixtures/const2.tbl")),
    ("add2", include_str!("../fixtures/add2.tbl")),
    ("add3", include_str!("../fixtures/add3.tbl")),
    ("add4", include_str!("../fixtures/add4.tbl")),
    ("add5", include_str!("../fixtures/add5.tbl")),
    ("sub4", include_str!("../fixtures/sub4.tbl")),
    ("sub5", include_str!("../fixtures/sub5.tbl")),
];

pub fn names() -> impl Iterator<Item = &'static str> {
    FILES.iter().map(|(name, _)| *name)
}

/// The checked-in source text of a fixture.
pub fn source(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

pub fn named(name: &str) -> Option<FiniteGroupoid> {
    source(name).map(|text| parse_table(text).expect("checked-in fixture parses"))
}

pub fn all() -> Vec<(&'static str, FiniteGroupoid)> {
    names().map(|n| (n, named(n).unwrap())).collect()
}

pub fn ex2() -> FiniteGroupoid {
    named("ex2").unwrap()
}

pub fn sl2() -> FiniteGroupoid {
    named("sl2").unwrap()
}

pub fn lz2() -> FiniteGroupoid {
    named("lz2").unwrap()
}

pub fn infl3() -> FiniteGroupoid {
    named("infl3").unwrap()
}

/// `Z_n` under `a·b = b − a`.
pub fn sub(n: usize) -> FiniteGroupoid {
    FiniteGroupoid::from_fn(n, |a, b| (b + n - a) % n).expect("order within bounds")
}

/// `Z_n` under addition.
pub fn add(n: usize) -> FiniteGroupoid {
    FiniteGroupoid::from_fn(n, |a, b| (a + b) % n).expect("order within bounds")
}
