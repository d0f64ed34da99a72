//! Macaulay bounds, SI classification, and inverse-system verification of
//! h-vectors of graded artinian algebras.
//!
//! * [`seqcore`]: i-binomial expansions, Macaulay's bound `n^<i>`, and the
//!   O-sequence / symmetric / unimodal / differentiable / SI predicates.
//! * [`construct`]: trivial extensions, compressed level vectors, codimension
//!   lifts, and the two explicit families of unimodal non-SI Gorenstein
//!   h-vectors.
//! * [`exact`]: exact scalars over `Q` and `GF(p)`, seeded sampling, rank.
//! * [`invsys`]: forms, contraction, Hilbert functions of inverse systems,
//!   and the verification and characteristic-sweep drivers.
//! * [`cli`]: the `gorenstein` command-line front end.
//!
//! ```
//! use gorenstein::construct::construct_thm_e;
//! use gorenstein::seqcore::{is_si_sequence, is_unimodal};
//!
//! let family = construct_thm_e(6).unwrap();
//! assert_eq!(family.gorenstein_hvector.entries(), &[1, 10, 14, 20, 14, 10, 1]);
//! assert!(is_unimodal(&family.gorenstein_hvector));
//! assert!(!is_si_sequence(&family.gorenstein_hvector));
//! ```

pub mod cli;
pub mod construct;
pub mod exact;
pub mod invsys;
pub mod seqcore;

pub use construct::{FamilyKind, FamilyResult, Parity};
pub use exact::{DenseMatrix, FieldSpec, Scalar};
pub use invsys::{Form, Monomial, Verdict, VerificationReport};
pub use seqcore::{BinomialExpansion, HVector};
