use std::fmt;

use clap::ValueEnum;
use lucaskit::{CoeffSeq, Poly2};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
    Svg,
    Ascii,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.to_possible_value().expect("no skipped variants");
        f.write_str(name.get_name())
    }
}

/// Everything a command can print; each format is optional.
#[derive(Debug, Default)]
pub struct Output {
    pub pretty: String,
    pub json: Option<Value>,
    pub csv: Option<String>,
    pub svg: Option<String>,
    pub ascii: Option<String>,
    /// False when a verification failed or a sweep produced a counterexample.
    pub passed: bool,
}

impl Output {
    pub fn new(pretty: impl Into<String>) -> Self {
        Self { pretty: pretty.into(), passed: true, ..Self::default() }
    }

    pub fn json(mut self, v: Value) -> Self {
        self.json = Some(v);
        self
    }

    pub fn csv(mut self, text: String) -> Self {
        self.csv = Some(text);
        self
    }

    pub fn passed(mut self, ok: bool) -> Self {
        self.passed = ok;
        self
    }

    pub fn poly(p: &Poly2) -> Self {
        let mut out = Output::new(p.to_string()).json(serde_json::to_value(p.to_json_value()).expect("poly json"));
        if let Ok(seq) = CoeffSeq::from_poly(p) {
            let mut csv = String::from("k,a_k\n");
            for (k, a) in seq.coeffs.iter().enumerate() {
                csv.push_str(&format!("{k},{a}\n"));
            }
            out = out.csv(csv);
        }
        out
    }

    pub fn render(&self, format: Format) -> Option<String> {
        let mut text = match format {
            Format::Pretty => Some(self.pretty.clone()),
            Format::Json => self.json.as_ref().map(|v| serde_json::to_string_pretty(v).expect("json value")),
            Format::Csv => self.csv.clone(),
            Format::Svg => self.svg.clone(),
            Format::Ascii => self.ascii.clone(),
        }?;
        if !text.ends_with('\n') {
            text.push('\n');
        }
        Some(text)
    }
}
