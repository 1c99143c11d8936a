//! Plain-text run manifests written alongside command outputs.
//!
//! One `key=value` pair per line. With a seed recorded the manifest pins
//! everything needed to reproduce the run; the timestamp is informational
//! and the only field that varies between identical runs.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use chrono::{SecondsFormat, Utc};

pub struct RunManifest {
    entries: Vec<(String, String)>,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        let mut manifest = RunManifest {
            entries: Vec::new(),
        };
        manifest.push("command", command);
        manifest.push(
            "timestamp",
            Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true),
        );
        manifest
    }

    pub fn push(&mut self, key: &str, value: impl ToString) {
        self.entries.push((key.to_string(), value.to_string()));
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.entries {
            out.push_str(key);
            out.push('=');
            out.push_str(value);
            out.push('\n');
        }
        out
    }

    /// Writes `<output>.manifest` next to the output file.
    pub fn write_alongside(&self, output: &Path) -> io::Result<PathBuf> {
        let mut path = output.as_os_str().to_owned();
        path.push(".manifest");
        let path = PathBuf::from(path);
        fs::write(&path, self.render())?;
        Ok(path)
    }
}
