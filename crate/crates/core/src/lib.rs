//! Linear and cyclic embedding metrics of graphs, specialised to the
//! n-cube: bandwidth, wirelength and cutwidth, exact routing of cyclic
//! layouts, edge-isoperimetric tables, diameter split analysis, closed-form
//! bounds on the cyclic cutwidth of Qₙ, and small exact searches.

pub mod bounds;
pub mod error;
pub mod format;
pub mod hypercube;
pub mod isoperimetric;
pub mod metrics;
pub mod search;
pub mod split;
pub mod verify;

pub use error::{Error, Result};
pub use hypercube::{build_hypercube, facets, gray_numbering, lex_numbering, Facet, Graph, Host, HypercubeLabel, Numbering};
