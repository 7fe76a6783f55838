//! Classifies a Cayley table read from a file, or the bundled `ex2`.
//!
//! `cargo run --example classify_table -- path/to/table.tbl`

use aglab::format::parse_table;
use aglab::inverses::classify;
use aglab::{fixtures, FiniteGroupoid};

fn main() -> aglab::Result<()> {
    let g: FiniteGroupoid = match std::env::args().nth(1) {
        Some(path) => {
            let text = std::fs::read_to_string(&path).map_err(|e| aglab::Error::Input(format!("{path}: {e}")))?;
            parse_table(&text)?
        }
        None => fixtures::ex2(),
    };
    let names = |s: aglab::ElementSet| s.iter().map(|x| g.label(x)).collect::<Vec<_>>().join(", ");

    let r = classify(&g);
    println!("order {}", g.order());
    println!("AG (invertive):       {}", r.ag.holds);
    println!("AG**:                 {}", r.ag_star_star.holds);
    println!("strongly regular:     {}", r.strongly_regular);
    println!("idempotents:          {{{}}}", names(r.idempotents));
    println!("E is a semilattice:   {}", r.e_semilattice);
    println!("completely inverse:   {}", r.completely_inverse);
    println!("left identities:      {{{}}}", names(r.left_identities));
    println!("left simple:          {}", r.left_simple);
    if let Some(ideal) = r.proper_left_ideal {
        println!("proper left ideal:    {{{}}}", names(ideal));
    }
    println!("characterizations:    {:?}", r.characterizations);
    for v in &r.violations {
        eprintln!("{v}");
    }
    Ok(())
}
