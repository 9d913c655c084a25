//! Power residues in finite fields.
//!
//! Builds `F_q = F_p[t]/(m(t))`, decides whether an element is an r-th
//! power through the Euler-type criterion `a^((q-1)/gcd(r, q-1)) = 1`,
//! counts and lists r-th powers, extracts roots, and checks every answer
//! against brute-force enumeration in [`oracle`].

pub mod cli;
pub mod error;
pub mod ext_field;
mod num;
pub mod oracle;
pub mod polynomial;
pub mod power_residues;
pub mod prime_field;

pub use error::{Error, Result};
pub use ext_field::{make_field, parse_element, parse_field, ElementIndex, FieldElement, FieldSpec};
pub use polynomial::{parse_poly, Poly};
pub use prime_field::{PrimeModulus, Residue};
