//! The JSON report printed on stdout. It holds no timing, so identical inputs
//! and seeds give byte-identical output.

use std::io::Write;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub command: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    pub seed: u64,
    pub outputs: Value,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witness_paths: Vec<String>,
}

pub fn digest(bytes: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(bytes)))
}

impl RunReport {
    /// Prints to stdout; a closed pipe is not an error.
    pub fn print(&self) {
        let text = serde_json::to_string_pretty(self).expect("serializable report");
        let _ = writeln!(std::io::stdout().lock(), "{text}");
    }
}
