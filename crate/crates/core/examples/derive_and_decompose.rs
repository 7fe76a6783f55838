//! Derives the commutative product of a completely inverse AG**-groupoid
//! and splits it into abelian groups over a semilattice of idempotents.

use aglab::derived::{clifford_decompose, derive};
use aglab::fixtures;
use aglab::format::serialize_table;

fn main() -> aglab::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "ex2".into());
    let g = fixtures::named(&name).ok_or_else(|| aglab::Error::Input(format!("no fixture {name}")))?;

    let d = derive(&g)?;
    println!("inverses:");
    for a in g.elements() {
        println!("  {}⁻¹ = {}", g.label(a), g.label(d.base_inverse(a)));
    }
    println!("\nderived product a[•]b = (b•bb⁻¹)a:");
    print!("{}", serialize_table(d.derived()));
    println!("idempotents agree: {}", d.prop11_check());

    let c = clifford_decompose(d.derived())?;
    println!("\nsemilattice order:");
    for &(e, f) in &c.order {
        println!("  {} < {}", g.label(e), g.label(f));
    }
    for group in &c.groups {
        let members: Vec<String> = group.elements.iter().map(|x| g.label(x)).collect();
        println!("group at {}: {{{}}}", g.label(group.identity), members.join(", "));
    }
    for link in &c.links {
        let pairs: Vec<String> = link.map.iter().map(|&(a, b)| format!("{}→{}", g.label(a), g.label(b))).collect();
        println!("link {} → {}: {}", g.label(link.upper), g.label(link.lower), pairs.join(" "));
    }
    Ok(())
}
