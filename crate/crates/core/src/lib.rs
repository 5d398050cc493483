//! Finite graded commutative rings and graded modules, their graded prime and
//! second spectra with the Zariski topology, graded radicals, second socles
//! and Zariski socles.
//!
//! Everything is computed exactly by enumeration over finite carriers.

pub mod additive;
pub mod bitset;
pub mod construct;
pub mod error;
pub mod group;
pub mod ideal;
pub mod module;
pub mod ring;
pub mod second;
pub mod spectrum;
pub mod submodule;
pub mod topology;

pub use bitset::BitSet;
pub use construct::{build_ring, tables_constructor, ComponentSpec, RingConstructor};
pub use error::AlgebraError;
pub use group::FiniteAbelianGroup;
pub use ideal::{CombineMode, GradedIdeal, IdealLattice, QuotientRing};
pub use module::{build_module, module_tables_constructor, ActionSpec, GradedModule, ModuleConstructor, ModuleGrading, ModuleTables};
pub use ring::{GradedRing, Limits, RingTables};
pub use second::{ModulePredicates, NaturalMap, SecondSpectrum};
pub use spectrum::{graded_prime_spectrum, PrimeSpectrum};
pub use submodule::{GradedSubmodule, SubmoduleLattice};
pub use topology::{chain_bound, BasicOpen, ClosedSet, SpectrumTopology};
