//! The one report every invocation prints: command echo, verdict, produced
//! matrices, identity checks, optional oracle block, timings. The exit code
//! is a pure function of the verdict string so shell pipelines can branch
//! on mathematical outcomes.

use ginv_core::equivalence::IdentityCheck;
use ginv_core::json::matrix_to_json;
use ginv_core::Matrix;
use serde_json::{json, Map, Value};
use std::path::Path;
use std::time::Instant;

/// Maps a verdict to the process exit code.
///
/// 0 — positive verdict (success, solvable, valid, exists, generated);
/// 2 — negative verdict (a result, not a failure);
/// 3 — a standing hypothesis does not hold, the theory does not apply;
/// 4 — the inputs could not be read or parsed;
/// 1 — an internal invariant failed (a bug, never expected).
pub fn exit_code_for(verdict: &str) -> u8 {
    match verdict {
        "ok" | "exists" | "solvable" | "valid" | "generated" => 0,
        "nonexistent" | "unsolvable" | "invalid" => 2,
        "hypothesis-violated" => 3,
        "input-error" => 4,
        _ => 1,
    }
}

pub struct Report {
    command: Vec<String>,
    mode: String,
    verdict: String,
    detail: String,
    matrices: Vec<(String, Matrix)>,
    identities: Vec<(String, bool)>,
    oracle: Option<Value>,
    extra: Vec<(&'static str, Value)>,
    started: Instant,
}

impl Report {
    pub fn new(command: Vec<String>) -> Report {
        Report {
            command,
            mode: "rational".to_string(),
            verdict: "internal-error".to_string(),
            detail: "the command produced no verdict".to_string(),
            matrices: Vec::new(),
            identities: Vec::new(),
            oracle: None,
            extra: Vec::new(),
            started: Instant::now(),
        }
    }

    pub fn set_mode(&mut self, mode: ginv_core::Mode) {
        self.mode = mode.to_string();
    }

    pub fn conclude(&mut self, verdict: &str, detail: impl Into<String>) {
        self.verdict = verdict.to_string();
        self.detail = detail.into();
    }

    pub fn matrix(&mut self, name: &str, m: &Matrix) {
        self.matrices.push((name.to_string(), m.clone()));
    }

    pub fn identity(&mut self, name: &str, holds: bool) {
        self.identities.push((name.to_string(), holds));
    }

    pub fn identities(&mut self, checks: &[IdentityCheck]) {
        for c in checks {
            self.identities.push((c.name.clone(), c.holds));
        }
    }

    pub fn oracle(&mut self, block: Value) {
        self.oracle = Some(block);
    }

    pub fn extra(&mut self, key: &'static str, value: Value) {
        self.extra.push((key, value));
    }

    pub fn exit_code(&self) -> u8 {
        exit_code_for(&self.verdict)
    }

    pub fn render(&self) -> Value {
        let mut matrices = Map::new();
        for (name, m) in &self.matrices {
            matrices.insert(name.clone(), matrix_to_json(m));
        }
        let identities: Vec<Value> = self
            .identities
            .iter()
            .map(|(name, holds)| json!({ "name": name, "holds": holds }))
            .collect();
        let mut root = json!({
            "command": self.command,
            "mode": self.mode,
            "verdict": self.verdict,
            "detail": self.detail,
            "matrices": Value::Object(matrices),
            "identities": identities,
            "timings": { "total_ms": self.started.elapsed().as_secs_f64() * 1e3 },
        });
        if let Some(oracle) = &self.oracle {
            root["oracle"] = oracle.clone();
        }
        for (key, value) in &self.extra {
            root[*key] = value.clone();
        }
        root
    }

    /// Writes each produced matrix as `<name>.json` plus the full report as
    /// `report.json` into `dir`, creating it if needed.
    pub fn write_out(&self, dir: &Path) -> std::io::Result<()> {
        std::fs::create_dir_all(dir)?;
        for (name, m) in &self.matrices {
            let mut text = serde_json::to_string_pretty(&matrix_to_json(m)).expect("matrix JSON");
            text.push('\n');
            std::fs::write(dir.join(format!("{name}.json")), text)?;
        }
        let mut text = serde_json::to_string_pretty(&self.render()).expect("report JSON");
        text.push('\n');
        std::fs::write(dir.join("report.json"), text)
    }
}
