//! Build the two generators of the codimension-five level algebra from a
//! random point configuration and compare ranks with the level h-vector.
//!
//! ```text
//! cargo run --release --example verify_codim_five -- 11
//! ```

use gorenstein::construct::{construct_thm_r_level, Parity};
use gorenstein::exact::FieldSpec;
use gorenstein::invsys::{build_codim_five_forms, hilbert_function, verify_construction};
use gorenstein::FamilyKind;

fn main() {
    let d: u64 = std::env::args().nth(1).map_or(10, |s| s.parse().unwrap());
    let field = FieldSpec::new(32003).unwrap();

    let (config, f1, f2) = build_codim_five_forms(d, Parity::Odd, field, 42).unwrap();
    println!(
        "{} general linear forms, {} on the line y1 = 0; generators of degree {}",
        config.general_forms.len(),
        config.line_forms.len(),
        f1.degree()
    );
    println!("Hilbert function {}", hilbert_function(&[f1, f2]).unwrap());
    println!(
        "level table      {}",
        construct_thm_r_level(d, Parity::Odd).unwrap()
    );

    for parity in Parity::BOTH {
        let report = verify_construction(FamilyKind::thm_r(parity), d, field, 42, 3).unwrap();
        println!(
            "{parity}: {} (best of {} trials)",
            report.verdict, report.trials
        );
    }
}
