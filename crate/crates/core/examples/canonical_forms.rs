//! Relabels a groupoid at random and shows that the canonical form does not
//! move, then lists its automorphisms.

use aglab::fixtures;
use aglab::format::serialize_table;
use aglab::morphisms::{are_isomorphic, automorphisms, canonical_form};

fn main() {
    let g = fixtures::ex2();
    // a fixed shuffle, so the output is reproducible
    let phi = [2, 0, 4, 1, 3];
    let h = g.relabel(&phi).without_labels();

    let cg = canonical_form(&g);
    let ch = canonical_form(&h);
    print!("canonical form:\n{}", serialize_table(&cg.table));
    println!("relabeling for ex2:      {:?}", cg.relabeling);
    println!("relabeling for shuffled: {:?}", ch.relabeling);
    println!("same table: {}", cg.table.table() == ch.table.table());
    println!("isomorphism ex2 → shuffled: {:?}", are_isomorphic(&g, &h));

    for a in automorphisms(&fixtures::add(5)) {
        println!(
            "add5 automorphism {:?} involutive={} fixes idempotents={}",
            a.perm, a.involutive, a.e_fixed
        );
    }
}
