//! Verdict plumbing: normalized margins, first-order error propagation,
//! and the comparison rule every check shares.

use crate::eval::KiValue;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// Normalized tolerance for inequality verdicts: a check *holds* when its
/// margin is at least `−(VERDICT_TOL + err_budget)`. Chosen so inequalities
/// that are analytically tight (equality cases) cannot flake under
/// quadrature noise, while any real violation would have to out-shout both
/// the tolerance and the propagated error.
pub const VERDICT_TOL: f64 = 1e-9;

/// Normalized tolerance for positive-semidefiniteness verdicts (relative
/// to the matrix trace).
pub const PSD_TOL: f64 = 1e-10;

/// A value with a propagated absolute-error budget, supporting the small
/// arithmetic vocabulary the checks need. Error flows first-order through
/// every operation (the bilinear term is kept in products, making the
/// budget an outer bound).
#[derive(Debug, Clone, Copy)]
pub(crate) struct Val {
    pub v: f64,
    pub e: f64,
}

impl Val {
    #[cfg(test)]
    pub(crate) fn exact(v: f64) -> Val {
        Val { v, e: 0.0 }
    }

    pub(crate) fn add(self, rhs: Val) -> Val {
        Val {
            v: self.v + rhs.v,
            e: self.e + rhs.e,
        }
    }

    pub(crate) fn sub(self, rhs: Val) -> Val {
        Val {
            v: self.v - rhs.v,
            e: self.e + rhs.e,
        }
    }

    /// Product; the error term is symmetric in its operands, so `a.mul(b)`
    /// and `b.mul(a)` are bit-identical.
    pub(crate) fn mul(self, rhs: Val) -> Val {
        Val {
            v: self.v * rhs.v,
            e: (self.e * rhs.v.abs() + rhs.e * self.v.abs()) + self.e * rhs.e,
        }
    }

    pub(crate) fn div(self, rhs: Val) -> Val {
        let q = self.v / rhs.v;
        Val {
            v: q,
            e: (self.e + q.abs() * rhs.e) / rhs.v.abs(),
        }
    }

    pub(crate) fn scale(self, k: f64) -> Val {
        Val {
            v: k * self.v,
            e: k.abs() * self.e,
        }
    }

    pub(crate) fn sq(self) -> Val {
        self.mul(self)
    }
}

impl From<KiValue> for Val {
    fn from(k: KiValue) -> Val {
        Val {
            v: k.value,
            e: k.abs_err_est,
        }
    }
}

/// Ordered parameter list, serialized as a JSON object in insertion order.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamList(pub Vec<(&'static str, f64)>);

impl Serialize for ParamList {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (key, value) in &self.0 {
            map.serialize_entry(key, value)?;
        }
        map.end()
    }
}

/// Outcome of one inequality check at one parameter point.
///
/// `margin = (rhs − lhs) / max(|lhs|, |rhs|, 1e−300)` — positive when the
/// inequality `lhs ≤ rhs` holds with room, zero at equality. `err_budget`
/// is the propagated evaluation error, normalized by the same scale, so
/// `holds ⇔ margin ≥ −(VERDICT_TOL + err_budget)`. Scaling both sides by
/// one positive constant changes neither field.
///
/// `asserted` records whether the underlying statement claims this
/// parameter point: report-only points (`asserted = false`) never count as
/// failures however negative their margin.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InequalityVerdict {
    /// Canonical snake_case check name.
    pub name: &'static str,
    /// Parameter point, in declaration order.
    pub params: ParamList,
    /// Left (smaller-by-claim) side.
    pub lhs: f64,
    /// Right (larger-by-claim) side.
    pub rhs: f64,
    /// Normalized signed slack.
    pub margin: f64,
    /// Normalized propagated evaluation error.
    pub err_budget: f64,
    /// `margin ≥ −(VERDICT_TOL + err_budget)`.
    pub holds: bool,
    /// Whether the statement claims this parameter point.
    pub asserted: bool,
}

impl InequalityVerdict {
    /// Re-evaluates the pass predicate under a caller-chosen tolerance
    /// (which may be negative: a strictness probe demanding positive
    /// margin beyond the error budget).
    pub fn holds_with(&self, tol: f64) -> bool {
        self.margin >= -(tol + self.err_budget)
    }
}

/// Builds the verdict for the claim `lhs ≤ rhs`.
pub(crate) fn compare(
    name: &'static str,
    params: Vec<(&'static str, f64)>,
    lhs: Val,
    rhs: Val,
    asserted: bool,
) -> InequalityVerdict {
    let scale = lhs.v.abs().max(rhs.v.abs()).max(1e-300);
    let margin = (rhs.v - lhs.v) / scale;
    let err_budget = (lhs.e + rhs.e) / scale;
    InequalityVerdict {
        name,
        params: ParamList(params),
        lhs: lhs.v,
        rhs: rhs.v,
        margin,
        err_budget,
        holds: margin >= -(VERDICT_TOL + err_budget),
        asserted,
    }
}

/// Whether `alpha` is (numerically) an integer that is at least `lo` —
/// the scope on which several geometric-concavity consequences are stated.
pub(crate) fn is_integer_at_least(alpha: f64, lo: f64) -> bool {
    (alpha - alpha.round()).abs() <= 1e-12 && alpha.round() >= lo
}
