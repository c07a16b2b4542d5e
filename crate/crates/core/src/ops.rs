//! The four attach operations.
//!
//! * `O1`: attach a single vertex to `v`, where `v` lies in some minimum
//!   total co-independent dominating set.
//! * `O2`: attach a path `P_2` through one of its ends, same condition.
//! * `O3`: attach a path `P_4` through one of its leaves, same condition.
//! * `O4`: attach a path `P_4` through one of its supports, where `v` lies in
//!   some maximum independent set.
//!
//! New vertices get the next free labels. For the `P_4` operations the added
//! path is labeled `h1, u1, u2, h2` in that order; `O3` joins `v` to `h1` and
//! `O4` joins `v` to `u1`.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::solvers::{in_some_optimal_set, Invariant};
use crate::{Error, Result, Tree, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum OpKind {
    O1,
    O2,
    O3,
    O4,
}

impl OpKind {
    pub const ALL: [OpKind; 4] = [OpKind::O1, OpKind::O2, OpKind::O3, OpKind::O4];

    /// Number of vertices the operation adds.
    pub fn added(self) -> usize {
        match self {
            OpKind::O1 => 1,
            OpKind::O2 => 2,
            OpKind::O3 | OpKind::O4 => 4,
        }
    }

    /// The invariant whose optimal sets must contain the attachment vertex.
    pub fn precondition(self) -> Invariant {
        match self {
            OpKind::O4 => Invariant::Beta,
            _ => Invariant::Tcoi,
        }
    }

    /// Edges added when attaching at `v` to a tree of order `n`.
    pub(crate) fn new_edges(self, v: Vertex, n: usize) -> Vec<(Vertex, Vertex)> {
        match self {
            OpKind::O1 => alloc::vec![(v, n)],
            OpKind::O2 => alloc::vec![(v, n), (n, n + 1)],
            OpKind::O3 => alloc::vec![(v, n), (n, n + 1), (n + 1, n + 2), (n + 2, n + 3)],
            OpKind::O4 => alloc::vec![(v, n + 1), (n, n + 1), (n + 1, n + 2), (n + 2, n + 3)],
        }
    }
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self {
            OpKind::O1 => 1,
            OpKind::O2 => 2,
            OpKind::O3 => 3,
            OpKind::O4 => 4,
        };
        write!(f, "O{k}")
    }
}

impl FromStr for OpKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "O1" => Ok(OpKind::O1),
            "O2" => Ok(OpKind::O2),
            "O3" => Ok(OpKind::O3),
            "O4" => Ok(OpKind::O4),
            other => Err(Error::parse(0, alloc::format!("unknown operation {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct OperationStep {
    pub kind: OpKind,
    /// Attachment vertex in the tree before the step.
    pub attach: Vertex,
    /// Labels of the added vertices, in the fixed per-operation order.
    pub new_vertices: Vec<Vertex>,
}

impl OperationStep {
    /// A step on a tree of order `n`, labeling new vertices `n, n + 1, ...`.
    pub fn new(kind: OpKind, attach: Vertex, n: usize) -> Self {
        OperationStep {
            kind,
            attach,
            new_vertices: (n..n + kind.added()).collect(),
        }
    }
}

pub fn precondition_holds(t: &Tree, kind: OpKind, v: Vertex) -> Result<bool> {
    in_some_optimal_set(t, v, kind.precondition())
}

/// Applies `step` after checking its precondition and labels.
pub fn apply_operation(t: &Tree, step: &OperationStep) -> Result<Tree> {
    let n = t.order();
    t.check_vertex(step.attach)?;
    if step.new_vertices.len() != step.kind.added() || step.new_vertices.iter().enumerate().any(|(i, &v)| v != n + i) {
        return Err(Error::BadParameter(alloc::format!(
            "{} on a tree of order {n} must add vertices {:?}",
            step.kind,
            (n..n + step.kind.added()).collect::<Vec<_>>()
        )));
    }
    if !precondition_holds(t, step.kind, step.attach)? {
        return Err(Error::PreconditionViolated {
            op: step.kind,
            vertex: step.attach,
        });
    }
    attach_unchecked(t, step.kind, step.attach)
}

/// Performs the attachment without checking the precondition.
pub fn attach_unchecked(t: &Tree, kind: OpKind, v: Vertex) -> Result<Tree> {
    t.check_vertex(v)?;
    t.extend(kind.added(), &kind.new_edges(v, t.order()))
}

impl fmt::Display for OperationStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<_> = self.new_vertices.iter().map(|v| v.to_string()).collect();
        write!(f, "{} attach={} new={}", self.kind, self.attach, labels.join(","))
    }
}
