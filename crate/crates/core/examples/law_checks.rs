//! Checks every law against every bundled fixture and prints the first
//! counterexample for each failure.

use aglab::fixtures;
use aglab::laws::{check_law, Law};

fn main() {
    print!("{:>8}", "");
    for law in Law::ALL {
        print!(" {:>11}", law.cli_name());
    }
    println!();
    for (name, g) in fixtures::all() {
        print!("{name:>8}");
        for law in Law::ALL {
            print!(" {:>11}", if check_law(&g, law).holds { "yes" } else { "no" });
        }
        println!();
    }

    println!();
    let g = fixtures::lz2();
    for law in Law::ALL {
        if let Some(c) = check_law(&g, law).counterexample {
            let args: Vec<String> = c.args.iter().map(|&x| g.label(x)).collect();
            println!("lz2 breaks {law} at ({}): {} != {}", args.join(", "), g.label(c.left), g.label(c.right));
        }
    }
}
