//! First-Fit coloring of Cartesian product graphs under lexicographic and
//! quasi-lexicographic orderings, descents, and greedy defining sets for
//! product graphs and Latin rectangles.

pub mod bridge;
pub mod campaign;
pub mod caps;
pub mod descent;
pub mod error;
pub mod first_fit;
pub mod gds;
pub mod graph;
pub mod hitting_set;
pub mod io;
pub mod latin;
pub mod oracle;
pub mod ordering;

pub use caps::Caps;
pub use error::{Error, Result};
