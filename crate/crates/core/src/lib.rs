//! Graphical degree sequences and forcible connectivity.
//!
//! The crate decides whether every simple graph with a given degree sequence
//! is connected or biconnected, checks those answers against a brute-force
//! realization enumerator for small inputs, and counts sequences and
//! partitions by these properties.

pub mod connectivity;
pub mod degseq;
pub mod enumeration;
pub mod error;
pub mod exec;
pub mod multiset;
pub mod oracle;
pub mod random;

pub use connectivity::{
    candidate_orders, find_cut_witnesses, forcibly_biconnected, forcibly_biconnected_basic,
    forcibly_connected, ghh, BiconnectedVerdict, CandidateOrders, ConnectedVerdict, CutSearch,
    CutWitness, Gate, SearchStats, SplitWitness, Tester,
};
pub use degseq::{
    is_graphical, multiset_subtract, normalize, parse_terms, potentially_biconnected,
    potentially_connected, DegreeSequence, MultisetDelta,
};
pub use enumeration::{
    check_unimodal, count_filtered, count_filtered_with, count_tables, enum_partitions,
    enum_sequences, extremal_largest_term, ratio_report, CountTable, ExtremalReport, Filter,
    Itemize,
};
pub use error::{Error, Result};
pub use exec::Exec;
pub use multiset::multiset_combinations;
pub use random::{Generator, RandomSpec};
