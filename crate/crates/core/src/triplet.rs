// SPDX-License-Identifier: MIT

use crate::error::{Error, Result};
use crate::nodeset::NodeSet;

/// An independence statement `<X, Y | Z>` over node indices.
///
/// `X` and `Y` are nonempty and the three sets are pairwise disjoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triplet {
    x: NodeSet,
    y: NodeSet,
    z: NodeSet,
}

impl Triplet {
    pub fn new(x: NodeSet, y: NodeSet, z: NodeSet) -> Result<Self> {
        if x.is_empty() || y.is_empty() {
            return Err(Error::InvalidTriplet(
                "first two components must be nonempty",
            ));
        }
        if x.intersects(y) || x.intersects(z) || y.intersects(z) {
            return Err(Error::InvalidTriplet("components must be disjoint"));
        }
        Ok(Triplet { x, y, z })
    }

    /// Builds a triplet the caller knows to be valid.
    #[inline]
    pub(crate) fn new_unchecked(x: NodeSet, y: NodeSet, z: NodeSet) -> Self {
        debug_assert!(Triplet::new(x, y, z).is_ok());
        Triplet { x, y, z }
    }

    /// `<{u}, {v} | z>`
    pub fn pair(u: usize, v: usize, z: NodeSet) -> Result<Self> {
        Triplet::new(NodeSet::singleton(u), NodeSet::singleton(v), z)
    }

    #[inline]
    pub fn x(&self) -> NodeSet {
        self.x
    }

    #[inline]
    pub fn y(&self) -> NodeSet {
        self.y
    }

    #[inline]
    pub fn z(&self) -> NodeSet {
        self.z
    }

    /// `X ∪ Y ∪ Z`
    #[inline]
    pub fn support(&self) -> NodeSet {
        self.x | self.y | self.z
    }

    /// `<Y, X | Z>`
    #[inline]
    pub fn mirrored(&self) -> Triplet {
        Triplet {
            x: self.y,
            y: self.x,
            z: self.z,
        }
    }

    /// Fails when the triplet mentions a node outside `{0, .., n - 1}`.
    pub fn check_universe(&self, n: usize) -> Result<()> {
        if self.support().is_subset(NodeSet::full(n)) {
            Ok(())
        } else {
            Err(Error::InvalidTriplet("triplet mentions an unknown node"))
        }
    }

    /// Renders as `X | Y | Z` with comma-separated labels.
    pub fn display<S: AsRef<str>>(&self, labels: &[S]) -> String {
        let part = |s: NodeSet| {
            s.iter()
                .map(|i| labels[i].as_ref())
                .collect::<Vec<_>>()
                .join(",")
        };
        let mut out = format!("{} | {} | {}", part(self.x), part(self.y), part(self.z));
        out.truncate(out.trim_end().len());
        out
    }
}

/// Every triplet over `n` nodes: each node is assigned one of four roles
/// (outside, X, Y, Z) in base-4 counting order, keeping those with X and Y
/// nonempty.
pub fn all_triplets(n: usize, bound: usize) -> Result<Vec<Triplet>> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "node",
            actual: n,
            bound,
        });
    }
    if n > 15 {
        return Err(Error::BoundExceeded {
            what: "node",
            actual: n,
            bound: 15,
        });
    }
    let mut out = Vec::new();
    let mut roles = vec![0u8; n];
    loop {
        let (mut x, mut y, mut z) = (NodeSet::EMPTY, NodeSet::EMPTY, NodeSet::EMPTY);
        for (i, r) in roles.iter().enumerate() {
            match r {
                1 => x.insert(i),
                2 => y.insert(i),
                3 => z.insert(i),
                _ => {}
            }
        }
        if !x.is_empty() && !y.is_empty() {
            out.push(Triplet::new_unchecked(x, y, z));
        }
        // base-4 increment, least significant digit = node 0
        let mut i = 0;
        while i < n && roles[i] == 3 {
            roles[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        roles[i] += 1;
    }
    Ok(out)
}

/// Default node bound for triplet enumeration.
pub const TRIPLET_NODE_BOUND: usize = 12;
