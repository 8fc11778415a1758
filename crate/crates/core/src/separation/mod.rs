// SPDX-License-Identifier: MIT
//! Independence criteria for chain graphs.

mod csep;
mod moral;

pub(crate) use csep::c_represented_unchecked;
pub use csep::{
    active_trail, c_represented, c_represented_with, enumerate_trails, section_blocked,
    section_blocked_with, sections_of, slides_to, Delimiter, Section, SectionKind, Slide,
    SlideRule, Step, Trail,
};
pub(crate) use moral::moralization_unchecked;
pub use moral::{
    moral_graph, moral_graph_component_variant, moralization_represented, ug_separated,
};

use crate::error::Result;
use crate::graph::HybridGraph;
use crate::triplet::Triplet;

/// Which criterion answers an independence query.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Criterion {
    #[default]
    Moralization,
    CSeparation,
}

/// Whether `g` represents `t` under `criterion`.
pub fn represented(g: &HybridGraph, t: &Triplet, criterion: Criterion) -> Result<bool> {
    match criterion {
        Criterion::Moralization => moralization_represented(g, t),
        Criterion::CSeparation => c_represented(g, t),
    }
}

pub(crate) fn represented_unchecked(g: &HybridGraph, t: &Triplet, criterion: Criterion) -> bool {
    match criterion {
        Criterion::Moralization => moralization_unchecked(g, t),
        Criterion::CSeparation => c_represented_unchecked(g, t, SlideRule::default()),
    }
}
