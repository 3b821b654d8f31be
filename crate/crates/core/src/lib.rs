//! Exact computations for mapping class groups of closed nonorientable
//! surfaces at the level of first homology.
//!
//! The crate provides:
//!
//! * arithmetic in `H_1(N_g; Z) = Z^g / <(2,...,2)>` and its mod 2 and free
//!   quotients ([`homology`]);
//! * formal words over twist and crosscap slide generators, with a strict
//!   text grammar ([`word`]);
//! * the homology representation: exact matrix actions of twists and slides,
//!   the projection to `GL(g-1, Z)`, the level 2 test, and the additive
//!   invariant of level 2 matrices ([`action`]);
//! * `GL(2, Z)` machinery for genus 3: evaluation and decomposition over the
//!   `S`, `T`, `U` presentation, the inverse isomorphism to mapping class
//!   words, and decomposition of level 2 matrices into the four slide
//!   generators — a genuine word problem solver for genus 3 ([`gl2`]);
//! * the level 2 generator catalogs, GF(2) rank certificates for the
//!   `(g-1)^2` lower bound, and a batch identity verification suite
//!   ([`mod@catalog`]).
//!
//! All values are immutable after construction and all operations are pure,
//! so everything can be shared freely across threads.

pub mod action;
pub mod catalog;
pub mod error;
pub mod gf2;
pub mod gl2;
pub mod homology;
pub mod matrix;
pub mod sample;
pub mod word;

pub use action::{
    eta, evaluate, f_map, is_level2, letter_action, rho, slide_action, twist_action, twist_power,
    HomAction, RMatrix,
};
pub use catalog::{
    catalog, catalog_alt, rank_certificate, verify_suite, Catalog, CatalogEntry, CatalogKind,
    RankCertificate, Status, SuiteReport, VerifyReport,
};
pub use error::{Error, Result};
pub use gl2::{
    decompose_gl2, level2_decompose, level2_member, n3_equal, n3_is_trivial, stu_eval, stu_to_mcg,
    StuLetter, StuWord,
};
pub use homology::{intersect_mod2, iota, project_r, CurveIndex, Genus, HomClass};
pub use matrix::{F2Matrix, IntMatrix};
pub use word::{GenLetter, Word};
