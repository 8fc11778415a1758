// SPDX-License-Identifier: MIT
//! Chain graphs: independence criteria, Markov equivalence, and recovery of
//! the pattern and the largest chain graph from a dependency model.

pub mod complexes;
pub mod depmodel;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod nodeset;
pub mod recovery;
pub mod separation;
pub mod triplet;

pub use complexes::{
    enumerate_complexes, equivalence_class, is_larger, largest_cg_oracle, largest_of_class,
    markov_equivalent, pattern_of, Complex, CLASS_EDGE_BOUND,
};
pub use depmodel::{
    dep_all, dep_plus, graphoid_closure, input_list, CgModel, Conditioning, DependencyModel,
    ExplicitModel,
};
pub use error::{Error, Result};
pub use format::{parse_graph, parse_model, parse_triplet, write_dot, write_graph, ModelFile};
pub use graph::{Chain, EdgeKind, HybridGraph};
pub use nodeset::{NodeSet, MAX_NODES};
pub use recovery::{recover_end_to_end, recover_largest, recover_pattern};
pub use separation::{c_represented, moralization_represented, represented, Criterion};
pub use triplet::{all_triplets, Triplet, TRIPLET_NODE_BOUND};
