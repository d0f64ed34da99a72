//! Classify h-vectors: O-sequence, symmetric, unimodal, differentiable, SI.
//!
//! ```text
//! cargo run --example classify -- 1,10,14,20,14,10,1
//! ```

use gorenstein::seqcore::{
    differentiability_violation, first_growth_violation, is_symmetric, is_unimodal, si_violation,
    HVector,
};

fn report(h: &HVector) {
    println!("{h}");
    match first_growth_violation(h.entries()) {
        None => println!("  O-sequence: yes"),
        Some(v) => println!("  O-sequence: no, {v}"),
    }
    println!("  symmetric: {}", is_symmetric(h));
    println!("  unimodal: {}", is_unimodal(h));
    match differentiability_violation(h) {
        None => println!("  differentiable: yes"),
        Some(v) => println!("  differentiable: no, {v}"),
    }
    match si_violation(h) {
        None => println!("  SI: yes"),
        Some(v) => println!("  SI: no, {v}"),
    }
}

fn main() {
    let from_args: Vec<HVector> = std::env::args()
        .skip(1)
        .map(|a| {
            a.parse()
                .expect("comma-separated positive integers starting with 1")
        })
        .collect();
    let vectors = if from_args.is_empty() {
        [
            "1,3,3,1",
            "1,3,6,10,8,7",
            "1,13,12,13,1",
            "1,10,14,20,14,10,1",
            "1,5,12,22,35,51,70,92,113,122,132,122,113,92,70,51,35,22,12,5,1",
        ]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect()
    } else {
        from_args
    };
    for h in &vectors {
        report(h);
    }
}
