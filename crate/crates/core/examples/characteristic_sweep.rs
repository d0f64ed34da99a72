//! Verify the socle-degree family across several characteristics and print
//! the JSON reports.
//!
//! ```text
//! cargo run --example characteristic_sweep
//! ```

use gorenstein::invsys::sweep_characteristics;
use gorenstein::FamilyKind;

fn main() {
    let chars = [0, 2, 101, 1009, 32003];
    let reports = sweep_characteristics(FamilyKind::ThmE, 6, &chars, 7, 5).unwrap();
    for r in &reports {
        let computed = r
            .computed
            .as_ref()
            .map_or_else(|| "-".to_string(), ToString::to_string);
        println!(
            "char {:>5}: {:<12} computed {computed}",
            r.characteristic,
            r.verdict.to_string()
        );
    }
    println!("{}", serde_json::to_string_pretty(&reports[0]).unwrap());
}
