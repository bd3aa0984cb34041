//! Words, finitely presented groups, coset enumeration and the
//! verification protocol shared by all presentation emitters.
//!
//! An equation `L = R` is stored as the relator `L·R⁻¹`. Commutators are
//! `[x,y] = x y x⁻¹ y⁻¹` and exponent conjugation is `x^y = y⁻¹ x y`.

mod presentation;
mod tc;
mod verify;
mod word;

pub use presentation::{parse_expr, parse_file_word, Presentation};
pub use tc::{todd_coxeter, CosetTable, DEFAULT_MAX_COSETS};
pub use verify::{relator_check, verify_presentation, Strategy, VerificationReport};
pub use word::Word;
