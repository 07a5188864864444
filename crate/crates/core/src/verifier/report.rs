use std::fmt;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::exactalg::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one exact identity check. `status` is `Pass` iff the residual
/// polynomial is identically zero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub equation_id: String,
    pub n: u32,
    pub order_index: Option<u32>,
    pub status: Status,
    /// Leading term of a nonzero residual, in canonical order.
    pub witness: Option<String>,
    /// Terms in the larger side of the identity before cancellation.
    pub term_count: usize,
    #[serde(with = "duration_secs")]
    pub elapsed: Duration,
    /// Extra context (for example which variant of a recursion was tested).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    /// Builds a report from `lhs - rhs`.
    pub fn from_sides(
        equation_id: impl Into<String>,
        n: u32,
        order_index: Option<u32>,
        lhs: &LaurentPoly,
        rhs: &LaurentPoly,
        started: Instant,
    ) -> Self {
        let residual = lhs - rhs;
        let mut r = Self::from_residual(equation_id, n, order_index, &residual, started);
        r.term_count = lhs.len().max(rhs.len());
        r
    }

    pub fn from_residual(
        equation_id: impl Into<String>,
        n: u32,
        order_index: Option<u32>,
        residual: &LaurentPoly,
        started: Instant,
    ) -> Self {
        let status = if residual.is_zero() {
            Status::Pass
        } else {
            Status::Fail
        };
        Self {
            equation_id: equation_id.into(),
            n,
            order_index,
            status,
            witness: (!residual.is_zero()).then(|| residual.leading_term_string()),
            term_count: residual.len(),
            elapsed: started.elapsed(),
            note: None,
        }
    }

    /// A check whose outcome is a plain boolean fact rather than a residual.
    pub fn from_bool(
        equation_id: impl Into<String>,
        n: u32,
        holds: bool,
        witness: Option<String>,
        started: Instant,
    ) -> Self {
        Self {
            equation_id: equation_id.into(),
            n,
            order_index: None,
            status: if holds { Status::Pass } else { Status::Fail },
            witness: if holds { None } else { witness },
            term_count: 0,
            elapsed: started.elapsed(),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Deterministic ordering key: `(equation_id, n, I)`.
    pub fn sort_key(&self) -> (String, u32, Option<u32>) {
        (self.equation_id.clone(), self.n, self.order_index)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {} n={}", self.equation_id, self.n)?;
        if let Some(i) = self.order_index {
            write!(f, " I={i}")?;
        }
        write!(
            f,
            " terms={} ({:.3}s)",
            self.term_count,
            self.elapsed.as_secs_f64()
        )?;
        if let Some(w) = &self.witness {
            write!(f, " witness: {w}")?;
        }
        if let Some(note) = &self.note {
            write!(f, " [{note}]")?;
        }
        Ok(())
    }
}

mod duration_secs {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let secs = f64::deserialize(d)?;
        Ok(Duration::from_secs_f64(secs.max(0.0)))
    }
}
