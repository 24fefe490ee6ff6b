use std::io::Write;

use serde_json::{Map, Value};

use crate::job::{Format, Job};

pub const FORMAT_VERSION: u32 = 1;

/// A command's result in all three renderings.
pub struct Output {
    pub json: Map<String, Value>,
    pub text: Vec<String>,
    pub csv: Vec<Vec<String>>,
    /// The first failed check, which makes the process exit with status 1.
    pub failure: Option<String>,
}

impl Output {
    pub fn new() -> Self {
        Output { json: Map::new(), text: Vec::new(), csv: Vec::new(), failure: None }
    }

    pub fn fail(&mut self, name: impl Into<String>) {
        if self.failure.is_none() {
            self.failure = Some(name.into());
        }
    }

    pub fn write(&self, job: &Job, command: &str, out: &mut impl Write) -> std::io::Result<()> {
        match job.format {
            Format::Json => {
                let mut doc = Map::new();
                doc.insert("format_version".into(), FORMAT_VERSION.into());
                doc.insert("command".into(), command.into());
                doc.insert("params".into(), job.params());
                doc.extend(self.json.clone());
                serde_json::to_writer_pretty(&mut *out, &Value::Object(doc))?;
                writeln!(out)
            }
            Format::Text => {
                writeln!(out, "# bmw {command} format_version={FORMAT_VERSION}")?;
                writeln!(out, "# {}", job.params_line())?;
                for line in &self.text {
                    writeln!(out, "{line}")?;
                }
                Ok(())
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().flexible(true).from_writer(&mut *out);
                w.write_record(["#format_version", &FORMAT_VERSION.to_string(), command])?;
                let params = job.params();
                let obj = params.as_object().expect("params are an object");
                w.write_record(std::iter::once("#params".to_string()).chain(obj.iter().map(|(k, v)| format!("{k}={}", plain(v)))))?;
                for rec in &self.csv {
                    w.write_record(rec)?;
                }
                w.flush()
            }
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

pub fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}
