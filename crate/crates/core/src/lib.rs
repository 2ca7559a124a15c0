//! Verification toolkit for hyperbolic floor and tower structures over
//! finitely presented groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`word`]: interned generators, freely reduced words, cyclic words and
//!   the genus-one (Wicks form) commutator test.
//! * [`word_problem`]: presentations and group models (free, infinite cyclic,
//!   C'(1/6) one-relator via Dehn's algorithm, free products).
//! * [`surfaces`]: homeomorphism data of compact surfaces, Euler
//!   characteristic arithmetic, standard presentations and floor profiles.
//! * [`gog`]: graphs of groups with surface-type vertices and their
//!   Bass-Serre presentations.
//! * [`homs`]: generator-image maps, homomorphism and retraction checks.
//! * [`whitehead`]: Whitehead minimisation, primitivity and basis tests.
//! * [`towers`]: verification of (extended) hyperbolic floors and towers.
//! * [`catalog`]: encoded constructions with their expected verdicts.

pub mod catalog;
pub mod gog;
pub mod homs;
pub mod surfaces;
pub mod towers;
pub mod whitehead;
pub mod word;
pub mod word_problem;

pub use gog::{EdgeData, GraphOfGroupsWithSurfaces, StructureReport, VertexData, VertexKind};
pub use homs::{GroupMap, Target};
pub use surfaces::{FloorProfile, SurfaceDatum, SurfacePresentation};
pub use towers::{FloorCandidate, TowerCandidate, VerificationReport};
pub use word::{Alphabet, CyclicWord, Generator, Letter, Word};
pub use word_problem::{GroupModel, Presentation};
