//! Application analyzers over a fixed structure: Γ-linear codes, ternary
//! S-box differential profiles, fuzzy ideals, and path-algebra closures.

pub mod codes;
pub mod fuzzy;
pub mod paths;
pub mod sbox;

pub use codes::{
    check_code, code_generate, weight_report, CheckCodeReport, CheckOperator, GammaLinearCode,
    WeightReport, DEFAULT_CODE_BUDGET,
};
pub use fuzzy::{
    fuzzy_from_chain, fuzzy_ideal_check, grade_to_string, parse_grade, FuzzyIdeal, FuzzyReport,
    Grade, LevelCut,
};
pub use paths::{ternary_path_values, PathMatrices, WeightedGraph};
pub use sbox::{sbox_differential_profile, sbox_lift_report, SBoxLiftReport, SBoxProfile};
