//! Inflates a completely inverse AG**-groupoid, then finds the base again
//! from the inflated table alone.

use aglab::fixtures;
use aglab::format::serialize_table;
use aglab::inflation::{inflate, theorem10_check};

fn main() -> aglab::Result<()> {
    let base = fixtures::sl2();
    let g = inflate(&base, &[3, 2])?;
    print!("inflated table:\n{}", serialize_table(&g));

    let r = theorem10_check(&g);
    println!("medial: {}, S² completely inverse AG**: {}", r.medial, r.s2_good);
    let w = r.witness.expect("an inflation has a witness");
    for f in &w.fibers {
        let members: Vec<String> = f.elements.iter().map(|x| g.label(x)).collect();
        println!("fiber over {}: {{{}}}", g.label(f.base), members.join(", "));
    }
    print!("recovered base:\n{}", serialize_table(&w.base(&g)?.groupoid));

    let lz2 = fixtures::lz2();
    let r = theorem10_check(&lz2);
    println!("\nlz2: medial {}, S² good {}, inflation {}", r.medial, r.s2_good, r.is_inflation());
    Ok(())
}
