pub mod budget;
pub mod cert;
pub mod digraph;
pub mod error;
pub mod families;
pub mod ferrers;
pub mod poset;
pub mod rng;
pub mod search;
pub mod sweep;
pub mod tree;

pub use budget::{Meter, SearchBudget};
pub use digraph::{Cell, CellSet, Digraph};
pub use error::{Error, Result, Verdict};
pub use families::{gen_family, Family};
