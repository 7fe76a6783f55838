//! Counts groupoids of small order in each class and checks that every
//! completely inverse AG**-groupoid comes from a semilattice of abelian
//! groups and one of its involutive idempotent-fixed automorphisms.
//!
//! Run with `cargo run --release --example census -- 4`.

use aglab::census::{enumerate, omega_cross_check, CensusClass, CensusOptions};

fn main() -> aglab::Result<()> {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let opts = CensusOptions::default();

    println!("{:>5} {:>9} {:>8} {:>10} {:>9}", "order", "class", "count", "nodes", "ms");
    for n in 1..=max {
        for class in CensusClass::ALL {
            if n > class.max_order(false) {
                continue;
            }
            let r = enumerate(n, class, &opts)?;
            println!(
                "{:>5} {:>9} {:>8} {:>10} {:>9}",
                n,
                class.cli_name(),
                r.count,
                r.search_stats.nodes,
                r.search_stats.wall_time.as_millis()
            );
        }
    }

    for n in 1..=max.min(4) {
        let omega = omega_cross_check(n, &opts)?;
        println!(
            "\norder {n}: {} found directly, {} constructed, sets equal: {}",
            omega.direct, omega.constructed, omega.holds
        );
        for m in &omega.per_sga {
            println!(
                "  {:?}: {} automorphisms, {} up to conjugacy, {} groupoids",
                m.sga, m.aut2e, m.conjugacy_classes, m.generated
            );
        }
    }
    Ok(())
}
