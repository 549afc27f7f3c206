use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// Exact residuals travel as strings, numeric ones as floats.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Residual {
    Exact(String),
    Numeric(f64),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub check_id: String,
    pub status: CheckStatus,
    pub residual: Residual,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CheckEntry {
    pub fn exact_pass(check_id: impl Into<String>) -> Self {
        CheckEntry {
            check_id: check_id.into(),
            status: CheckStatus::Pass,
            residual: Residual::Exact("0".into()),
            detail: None,
        }
    }

    pub fn exact_fail(check_id: impl Into<String>, residual: impl Into<String>) -> Self {
        CheckEntry {
            check_id: check_id.into(),
            status: CheckStatus::Fail,
            residual: Residual::Exact(residual.into()),
            detail: None,
        }
    }

    /// Pass iff `residual <= tol`.
    pub fn numeric(check_id: impl Into<String>, residual: f64, tol: f64) -> Self {
        CheckEntry {
            check_id: check_id.into(),
            status: if residual <= tol {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            residual: Residual::Numeric(residual),
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

impl fmt::Display for CheckEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
        };
        write!(f, "{status}  {}", self.check_id)?;
        match &self.residual {
            Residual::Exact(s) if s == "0" => {}
            Residual::Exact(s) => write!(f, "  residual={s}")?,
            Residual::Numeric(v) => write!(f, "  residual={v:.3e}")?,
        }
        if let Some(d) = &self.detail {
            write!(f, "  ({d})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub entries: Vec<CheckEntry>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(CheckEntry::passed)
    }

    pub fn failing_ids(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|e| !e.passed())
            .map(|e| e.check_id.as_str())
            .collect()
    }
}

impl FromIterator<CheckEntry> for VerificationReport {
    fn from_iter<I: IntoIterator<Item = CheckEntry>>(iter: I) -> Self {
        VerificationReport {
            entries: iter.into_iter().collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let r: VerificationReport = [
            CheckEntry::exact_pass("a"),
            CheckEntry::numeric("b", 2e-3, 1e-6),
        ]
        .into_iter()
        .collect();
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(
            s,
            r#"{"entries":[{"check_id":"a","status":"pass","residual":"0"},{"check_id":"b","status":"fail","residual":0.002}]}"#
        );
        assert_eq!(serde_json::from_str::<VerificationReport>(&s).unwrap(), r);
        assert!(!r.all_passed());
        assert_eq!(r.failing_ids(), vec!["b"]);
    }
}
