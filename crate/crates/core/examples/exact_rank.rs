//! Rank over Q (fraction-free elimination) and over prime fields.
//!
//! ```text
//! cargo run --example exact_rank
//! ```

use gorenstein::exact::{DenseMatrix, FieldSpec};

fn main() {
    // Vandermonde-like matrix on 1, 2, 3, 4 with a dependent last row.
    let rows: Vec<Vec<i64>> = vec![
        vec![1, 1, 1, 1],
        vec![1, 2, 4, 8],
        vec![1, 3, 9, 27],
        vec![1, 4, 16, 64],
        vec![2, 3, 5, 9],
    ];
    for c in [0, 2, 3, 5, 7, 32003] {
        let field = FieldSpec::new(c).unwrap();
        let m = DenseMatrix::from_i64_rows(field, &rows).unwrap();
        println!("rank over {field}: {}", m.rank());
    }
}
