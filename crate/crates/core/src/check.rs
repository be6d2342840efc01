//! Exact comparisons of morphisms with a witness entry on failure.

use crate::exactnum::{EntryDiff, Rat, SparseMat};
use crate::gvect::LinMor;

/// Result of comparing two parallel morphisms entry by entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapCheck {
    pub label: String,
    pub pass: bool,
    /// First differing entry when the comparison fails.
    pub witness: Option<EntryDiff>,
    /// Set when the two sides have different sources or targets.
    pub shape_error: Option<String>,
}

impl MapCheck {
    pub fn compare(label: impl Into<String>, lhs: &LinMor, rhs: &LinMor) -> Self {
        let label = label.into();
        if lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod() {
            return MapCheck {
                label,
                pass: false,
                witness: None,
                shape_error: Some(format!(
                    "{:?} -> {:?} vs {:?} -> {:?}",
                    lhs.dom(),
                    lhs.cod(),
                    rhs.dom(),
                    rhs.cod()
                )),
            };
        }
        let witness = lhs.mat().first_difference(rhs.mat());
        MapCheck { label, pass: witness.is_none(), witness, shape_error: None }
    }

    /// Compare two matrices that both represent maps between the same pair of objects.
    pub(crate) fn compare_sparse(label: impl Into<String>, lhs: &SparseMat, rhs: &SparseMat) -> Self {
        let witness = lhs.first_difference(rhs);
        MapCheck { label: label.into(), pass: witness.is_none(), witness, shape_error: None }
    }

    /// A check that holds by a structural argument rather than a computation.
    pub fn holds(label: impl Into<String>) -> Self {
        MapCheck { label: label.into(), pass: true, witness: None, shape_error: None }
    }

    pub fn failed(label: impl Into<String>, why: impl Into<String>) -> Self {
        MapCheck { label: label.into(), pass: false, witness: None, shape_error: Some(why.into()) }
    }

    /// Short human description of the failure, if any.
    pub fn describe_failure(&self) -> Option<String> {
        if self.pass {
            return None;
        }
        Some(match (&self.witness, &self.shape_error) {
            (Some(w), _) => format!("entry ({}, {}): {} vs {}", w.row, w.col, w.left, w.right),
            (None, Some(s)) => s.clone(),
            (None, None) => "unspecified".into(),
        })
    }
}

/// All checks pass.
pub fn all_pass(checks: &[MapCheck]) -> bool {
    checks.iter().all(|c| c.pass)
}

/// Scalar `c` with `lhs = c·rhs`, used to report the measured constant of a failing diagram.
pub fn measured_scalar(lhs: &LinMor, rhs: &LinMor) -> Option<Rat> {
    lhs.ratio_to(rhs)
}
