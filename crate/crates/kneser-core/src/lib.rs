//! Exact computation of Kneser-hypergraph parameters at desk scale.
//!
//! The crate covers the full pipeline from a ground hypergraph to the
//! parameters that bound the chromatic number of its derived Kneser
//! hypergraphs:
//!
//! - [`hypergraph`] — ground set systems, colorings, multiplicity vectors,
//!   and an exact chromatic-number solver ([`chi`]);
//! - [`kneser`] — construction of the derived hypergraphs `KG^r(H)` and
//!   their multiplicity-bounded generalizations, plus stable vertex sets;
//! - [`defects`] — colorability defects `cd`/`ecd` with extractable
//!   witnesses, and the lower-bound evaluators built on them;
//! - [`alt`] — alternation numbers over vertex orderings;
//! - [`theorems`] — colorful-subhypergraph witnesses, the reduction
//!   hypergraph, and the product-splitting inequality check;
//! - [`families`] — generators and closed-form parameter formulas for the
//!   benchmark families, plus a conjecture explorer.
//!
//! Everything is deterministic: canonical orders fix all outputs, searches
//! are single-threaded, and repeated runs yield identical witnesses. The
//! crate is `no_std` (with `alloc`); IO, file formats, and the CLI live in
//! the companion `kneser-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod alt;
pub mod bits;
pub mod chi;
pub mod defects;
pub mod error;
pub mod families;
pub mod guards;
pub mod hypergraph;
pub mod kneser;
pub mod theorems;

pub use alt::{alt_r, alt_sigma, alt_value, AltReport, AltSigmaReport, AltVector};
pub use bits::{VSet, MAX_VERTICES};
pub use chi::{chromatic_number, chromatic_number_budgeted, is_t_colorable, ChiOutcome, ChiReport};
pub use defects::{
    bound_values, cd, cd_removal_oracle, ecd, ecd_removal_oracle, mu, BoundValues, DefectMethod,
    DefectReport, DisjointFamily,
};
pub use error::{Error, Result};
pub use families::{
    afl_coloring, alt_witness_hnka, cd_hnka_closed, chi_hnka_closed, complete_multipartite,
    ecd_hnka_closed, explore_conjecture, gbar, hnka, independence_number, prop1_coloring,
    verify_gbar_identity, ChiClaim, ChiClosed, ConjectureGrid, ConjecturePoint, GbarReport,
    HnkaParams, Verdict,
};
pub use guards::Guards;
pub use hypergraph::{greedy_upper, BuildStats, Coloring, Hypergraph, SVector};
pub use kneser::{build_kneser, build_kneser_s, is_s_disjoint, s_stable_vertices, MultiHypergraph};
pub use theorems::{
    check_lemma1, check_reduction_coloring, find_colorful, kriz_t, verify_colorful,
    ColorfulVerify, ColorfulWitness, Lemma1Report, ReductionReport,
};
