//! AG-groups: the four equivalent conditions, left simplicity, and the
//! principal ideals of a groupoid that is not one.

use aglab::aggroup::{ag_group_report, all_principal_ideals, theorem8_check};
use aglab::fixtures;

fn main() {
    for (name, g) in fixtures::all() {
        let r = ag_group_report(&g);
        let t = theorem8_check(&g);
        println!(
            "{name:>8}: AG-group {:<5} conditions [{} {} {} {}] left simple {:<5} agree {}",
            r.is_ag_group, r.cond1, r.cond2, r.cond3, r.cond4, r.left_simple, t.agree
        );
    }

    let g = fixtures::ex2();
    println!("\nprincipal ideals of ex2:");
    for p in all_principal_ideals(&g) {
        let show = |s: aglab::ElementSet| s.iter().map(|x| g.label(x)).collect::<Vec<_>>().join(",");
        println!("  {}S = {{{}}}  S{} = {{{}}}", g.label(p.element), show(p.right), g.label(p.element), show(p.left));
    }
}
