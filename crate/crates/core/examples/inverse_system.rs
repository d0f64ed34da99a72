//! Forms, contraction, and Hilbert functions of inverse systems.
//!
//! ```text
//! cargo run --example inverse_system
//! ```

use gorenstein::construct::compress_level;
use gorenstein::exact::FieldSpec;
use gorenstein::invsys::{
    contract, contraction_matrix, hilbert_function, truncation_generators, Form, Monomial,
};

fn main() {
    let q = FieldSpec::RATIONALS;
    let f = Form::from_terms(
        q,
        2,
        2,
        [
            (Monomial::new(vec![1, 1]), q.from_i64(1)),
            (Monomial::new(vec![2, 0]), q.from_i64(3)),
        ],
    )
    .unwrap();
    let op = Monomial::new(vec![1, 0]);
    println!("x1 o ({f}) = {}", contract(&op, &f).unwrap());

    let gf = FieldSpec::new(32003).unwrap();
    let quartic = Form::random(gf, 3, 4, 1);
    let cat = contraction_matrix(std::slice::from_ref(&quartic), 2).unwrap();
    println!(
        "random ternary quartic: middle catalecticant {}x{} of rank {}",
        cat.rows(),
        cat.cols(),
        cat.rank()
    );
    println!(
        "  Hilbert function {}",
        hilbert_function(&[quartic]).unwrap()
    );
    println!("  compressed bound {}", compress_level(None, 3, 4).unwrap());

    // Truncated k[y1, y2] plus one general ternary quintic.
    let mut gens = truncation_generators(3, 2, 5, gf);
    println!("truncation alone:  {}", hilbert_function(&gens).unwrap());
    gens.push(Form::random(gf, 3, 5, 2));
    println!("plus general form: {}", hilbert_function(&gens).unwrap());
}
