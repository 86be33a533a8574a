//! Fuzzy relations over finite universes, consistent functions, and lossless
//! homomorphic compression of fuzzy information systems.
//!
//! The building blocks are [`Grade`] (exact fixed-point membership values),
//! [`FuzzySet`] and [`FuzzyRelation`]. A [`UniverseMapping`] lifts to sets
//! and relations via Zadeh's extension principle; [`consistency`] decides
//! when such a lift loses information and builds the coarsest quotient that
//! does not. [`lawcheck`] evaluates every algebraic law of the theory on
//! seeded random instances, and [`document`] reads and writes the file
//! formats.

pub mod consistency;
pub mod document;
pub mod error;
pub mod fixtures;
pub mod fuzzy;
pub mod grade;
pub mod infosystem;
pub mod lawcheck;
pub mod mapping;
pub mod neighborhood;
pub mod universe;

pub use consistency::{
    classify, classify_approx, classify_via_roundtrip, coarsest_consistent_partition, compress,
    quotient_neighborhood, verify_roundtrip, CompressionResult, ConsistencyReport, Mode, Partition,
    RoundTrip,
};
pub use document::{DocumentError, MappingDocument, RelationDocument};
pub use error::{Error, Result};
pub use fuzzy::{FuzzyRelation, FuzzySet, Lattice, Property, PropertyWitness};
pub use grade::{Grade, GradeError, GradeScale};
pub use infosystem::{
    classify_system, compress_system, homomorphic_image, FuzzyInformationSystem, HomomorphicImage,
    SystemCompression, SystemReport,
};
pub use lawcheck::{check_law, Instance, LawId, Verdict};
pub use mapping::UniverseMapping;
pub use neighborhood::{neighborhood, NeighborhoodKind};
pub use universe::Universe;
