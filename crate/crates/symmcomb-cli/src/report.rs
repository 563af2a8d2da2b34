//! Report envelope and renderers.
//!
//! Every report embeds the resolved diagram and a version stamp, and the
//! payload structs keep deterministic field and row orders, so identical
//! configs produce byte-identical reports.

use serde::Serialize;

use symmcomb::cartan::Weight;
use symmcomb::satake::SatakeDiagram;

use crate::config::OutputFormat;

#[derive(Debug, Clone, Serialize)]
pub struct DiagramInfo {
    pub preset: Option<String>,
    pub cartan_type: Option<String>,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub symmetrizers: Vec<i64>,
    /// 1-based black node indices.
    pub black: Vec<usize>,
    /// 1-based arrow pairs.
    pub arrows: Vec<[usize; 2]>,
}

impl DiagramInfo {
    pub fn new(diagram: &SatakeDiagram, preset: Option<String>) -> DiagramInfo {
        DiagramInfo {
            preset,
            cartan_type: diagram.datum.name().map(str::to_string),
            cartan_matrix: diagram.datum.matrix().clone(),
            symmetrizers: diagram.datum.symmetrizers().clone(),
            black: diagram.black.iter().map(|b| b + 1).collect(),
            arrows: diagram.arrows.iter().map(|&(a, b)| [a + 1, b + 1]).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Envelope<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    /// The resolved diagram; the all-presets battery instead embeds one
    /// diagram per suite.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagram: Option<DiagramInfo>,
    pub payload: T,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &str, diagram: DiagramInfo, payload: T) -> Envelope<T> {
        Envelope {
            tool: "symmcomb",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            diagram: Some(diagram),
            payload,
        }
    }

    pub fn without_diagram(command: &str, payload: T) -> Envelope<T> {
        Envelope {
            tool: "symmcomb",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            diagram: None,
            payload,
        }
    }
}

/// Exact coordinates of a weight as strings.
pub fn weight_strings(w: &Weight) -> Vec<String> {
    w.coords().iter().map(|c| c.to_string()).collect()
}

/// A payload that knows its text and (optionally) CSV form.
pub trait Render: Serialize {
    fn text(&self) -> String;
    fn csv(&self) -> Option<String> {
        None
    }
}

pub fn render<T: Render>(envelope: &Envelope<T>, format: OutputFormat) -> anyhow::Result<String> {
    Ok(match format {
        OutputFormat::Json => serde_json::to_string_pretty(envelope)? + "\n",
        OutputFormat::Csv => envelope
            .payload
            .csv()
            .ok_or_else(|| anyhow::anyhow!("this report has no tabular form; use json or text"))?,
        OutputFormat::Text => {
            let mut head = format!(
                "# symmcomb {} — {}\n",
                envelope.version, envelope.command
            );
            head.push_str(&envelope.payload.text());
            head
        }
    })
}

pub fn csv_line(fields: &[String]) -> String {
    let quoted: Vec<String> = fields
        .iter()
        .map(|f| {
            if f.contains(',') || f.contains('"') {
                format!("\"{}\"", f.replace('"', "\"\""))
            } else {
                f.clone()
            }
        })
        .collect();
    quoted.join(",") + "\n"
}
