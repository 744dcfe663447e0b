//! Graph-types, extension counting and regularity conditions.
//!
//! The crate checks combinatorial regularity properties of small graphs:
//! the t-vertex condition, k-isoregularity and (m,n)-regularity, all built
//! on counting extensions of embedded base graphs. Graph-types can be glued
//! (free sums), compared (domination) and tested for irreducibility, which
//! lets the regularity deciders skip every type that is implied by smaller
//! ones. The `geometry` module builds point graphs of generalized and
//! partial quadrangles to test on.
//!
//! ```
//! use graphreg::{geometry, regularity};
//!
//! let clebsch = geometry::catalog("clebsch").unwrap();
//! assert!(regularity::t_vertex_condition(&clebsch, 4).unwrap().holds);
//! ```

pub mod canon;
pub mod cliques;
pub mod connectivity;
pub mod embed;
pub mod enumerate;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod regularity;
pub mod types;

mod par;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use enumerate::TypeTransversal;
pub use error::{Error, Result};
pub use graph::{Graph, Subconstituent, VertexSet};
pub use regularity::{Mode, RegularityReport};
pub use types::GraphType;
