use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;
use gemkit_core::{validate, write_gem, ColoredGraph, Crystallization, GemError};
use serde::Serialize;

pub const SCHEMA: u32 = 1;

/// Verdict of a run that completed without input errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Ok,
    CheckFailed,
}

impl Verdict {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Verdict::Ok
        } else {
            Verdict::CheckFailed
        }
    }
}

/// Errors that mean a computation ran and a check failed, rather than
/// the input being unusable.
pub fn is_check_failure(err: &anyhow::Error) -> bool {
    matches!(
        err.downcast_ref::<GemError>(),
        Some(GemError::FormulaDisagreement { .. } | GemError::ConstructionCheck(_))
    )
}

#[derive(Args, Debug, Clone, Default)]
pub struct OutArgs {
    /// Emit a JSON record instead of text.
    #[arg(long)]
    pub json: bool,

    /// Write the result to this file instead of standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

impl OutArgs {
    pub fn emit(&self, text: &str) -> Result<()> {
        match &self.output {
            Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    /// Writes either the JSON envelope or the text rendering.
    pub fn report<T: Serialize>(&self, command: &str, input: &str, report: &T, text: impl FnOnce() -> String) -> Result<()> {
        if self.json {
            self.emit(&envelope(command, input, report)?)
        } else {
            self.emit(&text())
        }
    }

    /// Writes a constructed graph: GEM text, or a JSON record holding the
    /// text and its validation.
    pub fn graph<T: Serialize>(&self, command: &str, input: &str, g: &ColoredGraph, extra: &T) -> Result<()> {
        if self.json {
            #[derive(Serialize)]
            struct Built<'a, T> {
                gem: String,
                validation: gemkit_core::ValidationReport,
                #[serde(flatten)]
                extra: &'a T,
            }
            let built = Built {
                gem: write_gem(g),
                validation: validate(g)?,
                extra,
            };
            self.emit(&envelope(command, input, &built)?)
        } else {
            self.emit(&write_gem(g))
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a, T> {
    schema: u32,
    command: &'a str,
    input: &'a str,
    report: &'a T,
}

pub fn envelope<T: Serialize>(command: &str, input: &str, report: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(&Envelope {
        schema: SCHEMA,
        command,
        input,
        report,
    })?;
    s.push('\n');
    Ok(s)
}

pub fn kind(c: Crystallization) -> String {
    match c {
        Crystallization::Closed => "closed crystallization".into(),
        Crystallization::WithBoundary { h } => format!("crystallization with {h} boundary component(s)"),
        Crystallization::No => "not a crystallization".into(),
    }
}

pub fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Left-aligned two-column listing.
pub fn rows(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in pairs {
        let pad = width - k.chars().count();
        writeln!(out, "{k}{}  {v}", " ".repeat(pad)).unwrap();
    }
    out
}
