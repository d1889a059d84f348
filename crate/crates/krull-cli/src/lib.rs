//! Command line front end for `krull-core`: monoid analysis reports, the
//! dyadic counterexample suite, and seeded random corpus runs.
//!
//! All document output is deterministic — the same invocation always
//! produces the same bytes — so reports can be diffed and frozen in
//! tests. Wall-clock timing is reported on stderr only.

pub mod corpus;
pub mod input;
pub mod report;
pub mod suite;
