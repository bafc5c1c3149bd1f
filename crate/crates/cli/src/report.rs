//! Human and machine rendering of command results.
//!
//! Machine documents are `key=value` lines in a fixed order: `v=1`,
//! `command`, `status`, then command fields. A raw payload (graph or transit
//! text) follows a `payload` line with its line count.

use std::fmt::Display;
use std::io::Write;
use std::process::ExitCode;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Holds,
    Violated,
}

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Refused(String),
    Internal(String),
}

pub struct Report {
    command: &'static str,
    status: Status,
    fields: Vec<(String, String)>,
    lines: Vec<String>,
    payload: Option<String>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report { command, status: Status::Holds, fields: Vec::new(), lines: Vec::new(), payload: None }
    }

    pub fn field(&mut self, key: &str, value: impl Display) -> &mut Self {
        let v = value.to_string().replace('\n', " ");
        self.fields.push((key.to_string(), v));
        self
    }

    pub fn line(&mut self, l: impl Into<String>) {
        self.lines.push(l.into());
    }

    pub fn status(&mut self, s: Status) {
        self.status = s;
    }

    pub fn payload(&mut self, text: String) {
        self.payload = Some(text);
    }
}

/// Writes to stdout; a reader that closed the pipe early is not an error.
fn out(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn machine_header(command: &str, status: &str) -> String {
    format!("v=1\ncommand={command}\nstatus={status}\n")
}

pub fn emit(command: &'static str, outcome: Result<Report, Failure>, machine: bool) -> ExitCode {
    match outcome {
        Ok(rep) => {
            let (status, code) = match rep.status {
                Status::Holds => ("holds", 0),
                Status::Violated => ("violated", 1),
            };
            if machine {
                let mut buf = machine_header(rep.command, status);
                for (k, v) in &rep.fields {
                    buf.push_str(&format!("{k}={v}\n"));
                }
                if let Some(p) = &rep.payload {
                    buf.push_str(&format!("payload={}\n{p}", p.lines().count()));
                }
                out(&buf);
            } else {
                let mut buf: String = rep.lines.iter().map(|l| format!("{l}\n")).collect();
                if let Some(p) = &rep.payload {
                    buf.push_str(p);
                }
                if rep.lines.is_empty() && rep.payload.is_none() {
                    buf.push_str(&format!("{status}\n"));
                }
                out(&buf);
            }
            ExitCode::from(code)
        }
        Err(f) => {
            let (msg, code) = match &f {
                Failure::Input(m) | Failure::Internal(m) => (m.as_str(), 2),
                Failure::Refused(m) => (m.as_str(), 3),
            };
            if machine {
                out(&format!("{}error={}\n", machine_header(command, "error"), msg.replace('\n', " ")));
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
    }
}
