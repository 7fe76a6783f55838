//! Builds every completely inverse AG**-groupoid over the cyclic group of
//! order 4 (one per involutive idempotent-fixed automorphism), then recovers
//! the group and the automorphism from each result.

use aglab::fixtures;
use aglab::format::serialize_table;
use aglab::morphisms::aut2e;
use aglab::structure::{construct_thm20, extract_thm21, roundtrip_cor22, StructurePair};

fn main() -> aglab::Result<()> {
    let t = fixtures::add(4);
    for a in aut2e(&t) {
        println!("A = {:?}", a.perm);
        let g = construct_thm20(&StructurePair::new(t.clone(), a.perm.clone())?)?;
        print!("{}", serialize_table(&g));

        let back = extract_thm21(&g)?;
        println!(
            "extracted A = {:?}, same group: {}, round trip: {}\n",
            back.perm(),
            back.sga.table() == t.table(),
            roundtrip_cor22(&g)?
        );
    }
    Ok(())
}
