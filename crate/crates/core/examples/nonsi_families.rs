//! The two families of unimodal Gorenstein h-vectors without the SI
//! property, and their lifts to higher codimension.
//!
//! ```text
//! cargo run --example nonsi_families
//! ```

use gorenstein::construct::{
    construct_thm_e, construct_thm_r_gorenstein, thm_e_in_codimension, thm_r_in_codimension,
    ConstructError, Parity,
};
use gorenstein::seqcore::si_violation;

fn main() {
    for e in [3, 5, 6, 7, 8] {
        match construct_thm_e(e) {
            Ok(fam) => {
                println!("e = {e}, codimension {}", fam.codimension());
                println!("  level      {}", fam.level_hvector);
                println!("  gorenstein {}", fam.gorenstein_hvector);
                println!("  {}", si_violation(&fam.gorenstein_hvector).unwrap());
            }
            Err(ConstructError::Nonexistent { socle_degree }) => {
                println!("e = {socle_degree}: every unimodal Gorenstein h-vector is SI")
            }
            Err(other) => panic!("{other}"),
        }
    }

    for parity in Parity::BOTH {
        let fam = construct_thm_r_gorenstein(10, parity).unwrap();
        println!("d = 10 ({parity}), socle degree {}", fam.socle_degree());
        println!("  level      {}", fam.level_hvector);
        println!("  gorenstein {}", fam.gorenstein_hvector);
        println!("  {}", si_violation(&fam.gorenstein_hvector).unwrap());
    }

    println!(
        "socle degree 6, codimension 12: {}",
        thm_e_in_codimension(6, 12).unwrap()
    );
    println!(
        "socle degree 20, codimension 7: {}",
        thm_r_in_codimension(10, Parity::Even, 7).unwrap()
    );
}
