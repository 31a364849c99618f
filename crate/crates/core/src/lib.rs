//! Finite commutative ternary Γ-semirings as explicit tables: axiom
//! verification with witnesses, exhaustive enumeration up to isomorphism,
//! ideal/congruence/radical/spectrum computation, decomposition checks, and
//! application analyzers (codes, S-box profiles, fuzzy ideals, path
//! algebra).
//!
//! Everything here is finite and everything is verified: theorems from the
//! surrounding theory are implemented as *audits* that either confirm a
//! property on a concrete structure or return a witness against it.

#![forbid(unsafe_code)]

pub mod apps;
pub mod axioms;
pub mod congruence;
pub mod decomposition;
pub mod dot;
pub mod enumeration;
pub mod error;
pub mod fileio;
pub mod hom;
pub mod ideals;
pub mod quotient;
pub mod radical;
pub mod spectrum;
pub mod structure;

pub use axioms::{check_axioms, check_axioms_with, AxiomId, AxiomMode, AxiomReport};
pub use congruence::{all_congruences, correspondence_report, Congruence};
pub use decomposition::{
    classify_pattern, is_subdirectly_irreducible, subdirect_decomposition, wedderburn_check,
    PatternKind, SubdirectStrategy,
};
pub use enumeration::{
    are_isomorphic, canonical_form, canonicalize, enumerate_additive_monoids,
    enumerate_structures, Catalog, CatalogEntry, EnumerationParams,
};
pub use error::{Error, Result};
pub use hom::{is_homomorphism, HomVerdict, Homomorphism};
pub use ideals::{all_ideals, ideal_generate, is_ideal, IdealSet, LatticeReport};
pub use quotient::{bourne_congruence, quotient, Quotient, QuotientBy};
pub use radical::{
    all_prime_ideals, cancellation_check, find_identities, invariant_tuple, nilpotents,
    rad_nil_report, radical, InvariantTuple, NilDefinition,
};
pub use spectrum::{
    contract_primes, dimension_audit, krull_dimension, prime_avoidance_check, spec_closed_sets,
    AvoidanceVariant, SpectrumReport,
};
pub use structure::{build_named, direct_product, AddKind, Elem, NamedKind, NamedParams,
    TernaryGammaSemiring};
