//! Strata censuses for complete graphs on at most five vertices.

pub mod arrangement;
pub mod complex;
pub mod formal;
pub mod lambda4;
pub mod lambda5;
pub mod order_types;
pub mod sphere;
pub mod strata;

pub use complex::{Cell, CellComplex};
pub use formal::{normalize_formal, FormalConfiguration};
pub use lambda4::{classify_k4, lambda4_arrangement, K4Class};
pub use strata::{descriptor_table, strata_table, StrataTable};
pub use lambda5::{lambda5_census, Lambda5Census};
