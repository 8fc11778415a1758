// SPDX-License-Identifier: MIT
//! From a dependency model to its pattern, and from a pattern to the
//! largest chain graph of its class.

mod largest;
mod pattern;

pub use largest::{
    doublecycle_step, feasible_semislide, feasible_semislide_exists, necessity_step,
    recover_largest, recover_largest_with, transitivity_fixpoint, AnnotatedPattern, Directing,
    LargestRecovery, Rule, RuleOrder, TraceEvent,
};
pub use pattern::{recover_pattern, recover_pattern_levels};

use crate::depmodel::DependencyModel;
use crate::error::Result;
use crate::graph::HybridGraph;

/// The largest chain graph of the class inducing `m`.
pub fn recover_end_to_end<M: DependencyModel + ?Sized>(m: &M) -> Result<HybridGraph> {
    recover_largest(&recover_pattern(m)?)
}
