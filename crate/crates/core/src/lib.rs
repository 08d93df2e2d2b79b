//! Exact enumeration of linear chord diagrams by genus.

pub mod arith;
pub mod asymptotics;
pub mod biseries;
pub mod diagram;
pub mod error;
pub mod genfunc;
pub mod oracle;
pub mod poly;
pub mod recurrences;
pub mod series;
pub mod table;
pub mod verify;

pub use arith::{Integer, Rational};
pub use biseries::BiSeries;
pub use diagram::{ChordDiagram, DiagramStats, PartialDiagram};
pub use error::{Error, Result};
pub use oracle::{EnumerationCaps, Oracle};
pub use poly::ExactPoly;
pub use series::ExactSeries;
pub use table::{GenusTable, TableClass};
pub use recurrences::HZPolyTable;
pub use genfunc::{PgRecord, RationalFunction};

/// Library version, reported in CLI output metadata.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/diagrams.md")]
    mod diagrams {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/shapes-and-macromolecular.md")]
    mod shapes_and_macromolecular {}
    #[doc = include_str!("../../../book/src/asymptotics.md")]
    mod asymptotics {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
