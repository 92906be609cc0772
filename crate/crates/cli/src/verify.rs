//! Replaying certificates.

use serde::Serialize;

use descent_kit::certificate::{Certificate, SCHEMA_VERSION};

use crate::{CliError, Command, Result};

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub steps: usize,
    /// Steps whose stored digest does not match their content.
    pub corrupted: Vec<String>,
    pub replayed: bool,
    /// Differences between the stored certificate and a fresh run.
    pub mismatches: Vec<String>,
    pub recorded_success: bool,
}

impl VerifyReport {
    pub fn faithful(&self) -> bool {
        self.corrupted.is_empty() && self.mismatches.is_empty()
    }

    /// Faithful and concluding success.
    pub fn verified(&self) -> bool {
        self.faithful() && self.recorded_success
    }
}

/// Checks every step digest and, with `replay`, re-runs the recorded
/// command and compares the result bit-for-bit.
pub fn verify(cert: &Certificate, replay: bool) -> Result<VerifyReport> {
    if cert.schema_version != SCHEMA_VERSION {
        return Err(CliError::Usage(format!(
            "unsupported schema version {} (expected {SCHEMA_VERSION})",
            cert.schema_version
        )));
    }
    let corrupted =
        cert.steps.iter().enumerate().filter(|(_, s)| !s.digest_matches()).map(|(n, s)| format!("#{n} {}", s.operation)).collect();
    let mut report = VerifyReport {
        steps: cert.steps.len(),
        corrupted,
        replayed: replay,
        mismatches: Vec::new(),
        recorded_success: cert.success(),
    };
    if !replay {
        return Ok(report);
    }
    let fresh = Command::from_inputs(&cert.inputs)?.run()?;
    let m = &mut report.mismatches;
    if fresh.kind != cert.kind {
        m.push(format!("kind {:?} != {:?}", cert.kind, fresh.kind));
    }
    if fresh.inputs != cert.inputs {
        m.push("inputs differ".into());
    }
    if fresh.steps.len() != cert.steps.len() {
        m.push(format!("{} steps recorded, {} replayed", cert.steps.len(), fresh.steps.len()));
    }
    for (n, (a, b)) in cert.steps.iter().zip(&fresh.steps).enumerate() {
        if a.operation != b.operation || a.digest != b.digest {
            m.push(format!("step #{n} {}: digest differs on replay", a.operation));
        }
    }
    if fresh.conclusion != cert.conclusion {
        m.push("conclusion differs".into());
    }
    Ok(report)
}
