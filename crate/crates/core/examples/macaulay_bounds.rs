//! i-binomial expansions and Macaulay's growth bound.
//!
//! ```text
//! cargo run --example macaulay_bounds
//! ```

use gorenstein::seqcore::{binomial_expansion, macaulay_bound};

fn main() {
    for (n, i) in [(6, 2), (4, 2), (9, 9), (100, 3), (1_000_000, 4)] {
        let exp = binomial_expansion(n, i).unwrap();
        let bound = macaulay_bound(n, i).unwrap();
        println!("{n}_({i}) = {exp}");
        println!("  {n}^<{i}> = {bound}");
    }

    // The largest h_2 after h_1 = r is C(r+1, 2).
    for r in 1..=6 {
        println!("h_1 = {r}  =>  h_2 <= {}", macaulay_bound(r, 1).unwrap());
    }
}
