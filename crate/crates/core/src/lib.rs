//! Exact minimum-weight fault-tolerant resolving sets for vertex-weighted
//! cographs.
//!
//! A vertex set `R` resolves a graph when every pair of distinct vertices is
//! told apart by the distance to some member of `R`; it is fault tolerant when
//! that still holds after deleting any single member. On connected cographs
//! this coincides with every pair `u, v` having at least two members of `R` in
//! `(N(u) △ N(v)) ∪ {u, v}`, which is what [`ftdp`] optimises bottom-up over
//! the cotree.
//!
//! ```
//! use ftmd::{solve, Graph, WeightMap};
//!
//! // path 0 - 1 - 2
//! let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
//! let sol = solve(&g, &WeightMap::uniform(3)).unwrap();
//! assert_eq!(sol.weight, 2.0);
//! assert_eq!(sol.set, vec![0, 2]);
//! ```

pub mod bench;
pub mod cotree;
pub mod error;
pub mod format;
pub mod ftdp;
pub mod graph;
pub mod oracle;
pub mod resolving;

pub use cotree::{build_cotree, random_cotree, realize, Cotree, NodeId, NodeKind};
pub use error::{Error, Result};
pub use ftdp::{dp_run, extract_connected_min, solve, DpValue, Solution, StateIndex, StateTable};
pub use graph::{Graph, WeightMap};
