//! Enumeration of structures, the bounded completeness oracle, and the case table.

mod cases;
mod symbolic;

pub use cases::{reproduce_case_table, CaseReport, CaseRow, Condition, DegreeSpec, ExponentPair};
pub use symbolic::{SymPoly, Var};
mod structures;

pub use structures::{
    brute_force_admissible, canonical_key, enumerate_structures, existence_warning, CanonicalKey,
    ClassifyError, EnumerateOptions, StructureJson, StructureKind, StructureRecord,
};
