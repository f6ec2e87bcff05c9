use serde::Serialize;
use sha2::{Digest, Sha256};

use recolor_core::recolor::StatsReport;

/// Everything needed to reproduce and audit one `recolor` run.
#[derive(Debug, Serialize)]
pub struct RunReport<'a> {
    command: Vec<String>,
    inputs: Inputs,
    length: usize,
    s: usize,
    t: usize,
    mad: String,
    stats: &'a StatsReport,
    exit_status: u8,
}

#[derive(Debug, Serialize)]
struct Inputs {
    graph_sha256: String,
    from_sha256: String,
    to_sha256: String,
}

fn sha256(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl<'a> RunReport<'a> {
    pub fn new(
        command: Vec<String>,
        inputs: [&str; 3],
        stats: &'a StatsReport,
        mad: String,
    ) -> Self {
        Self {
            command,
            inputs: Inputs {
                graph_sha256: sha256(inputs[0]),
                from_sha256: sha256(inputs[1]),
                to_sha256: sha256(inputs[2]),
            },
            length: stats.total,
            s: stats.s,
            t: stats.t,
            mad,
            stats,
            exit_status: 0,
        }
    }

    pub fn to_json(&self) -> String {
        let mut json = serde_json::to_string_pretty(self).expect("report serializes");
        json.push('\n');
        json
    }
}
