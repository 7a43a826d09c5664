//! Exact spectral toolkit for pineapple graphs and their cospectral mates.

pub mod bitset;
pub mod canon;
pub mod census;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod line;
pub mod poly;
pub mod spectra;
pub mod text;

pub use bitset::VertexSet;
pub use canon::{canonical_code, canonical_form, isomorphic, CanonCode, CanonicalForm};
pub use census::{
    count_with_filter, enumerate_graphs, glg_variants, lemma4_audit, trees, verify_ds, Census,
    CensusQuery, DsCertificate, DsVerdict, Filters,
};
pub use error::{Error, Result};
pub use graph::{
    add_isolated, build_basic, coalesce, complete_minus_clique, disjoint_union, pineapple,
    BasicKind, Counts, Graph,
};
pub use graph6::{decode_graph6, encode_graph6};
pub use line::{generalized_line_graph_1, line_graph};
pub use poly::{FactoredPoly, IntPolynomial};
