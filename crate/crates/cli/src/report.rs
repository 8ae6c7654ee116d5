use serde::{Deserialize, Serialize};

use crate::{Failure, Format};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Effort {
    pub nodes: u64,
    pub budget: u64,
}

/// Outcome of one colouring or solver run. Wall-clock time shows up in the
/// text rendering only, so JSON output is reproducible.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub family: String,
    pub n: usize,
    pub method: String,
    pub m: Option<u32>,
    pub valid: Option<bool>,
    pub check: Option<Check>,
    pub lower: Option<u32>,
    pub upper: Option<u32>,
    pub optimal: Option<bool>,
    pub effort: Option<Effort>,
    #[serde(skip)]
    pub seconds: Option<f64>,
}

impl Report {
    pub fn new(family: &str, n: usize, method: &str) -> Self {
        Report {
            family: family.into(),
            n,
            method: method.into(),
            m: None,
            valid: None,
            check: None,
            lower: None,
            upper: None,
            optimal: None,
            effort: None,
            seconds: None,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("report serialises"),
            Format::Text => self.text(),
        }
    }

    fn text(&self) -> String {
        let mut lines = vec![
            format!("family   {}", self.family),
            format!("n        {}", self.n),
            format!("method   {}", self.method),
        ];
        if let Some(m) = self.m {
            lines.push(format!("colours  {m}"));
        }
        if let Some(valid) = self.valid {
            let how = match self.check {
                Some(Check::Sampled) => " (sampled)",
                Some(Check::Exhaustive) => " (exhaustive)",
                None => "",
            };
            lines.push(format!(
                "valid    {}{how}",
                if valid { "yes" } else { "NO" }
            ));
        }
        if let (Some(lo), Some(hi)) = (self.lower, self.upper) {
            if self.optimal == Some(true) {
                lines.push(format!("chi      {hi} (optimal)"));
            } else {
                lines.push(format!("chi      in [{lo}, {hi}] (budget exhausted)"));
            }
        }
        if let Some(e) = self.effort {
            lines.push(format!("nodes    {} of {}", e.nodes, e.budget));
        }
        if let Some(s) = self.seconds {
            lines.push(format!("time     {s:.3} s"));
        }
        lines.join("\n")
    }
}

#[derive(Serialize)]
struct Row<'a> {
    family: &'a str,
    n: usize,
    method: &'a str,
    m: Option<u32>,
    valid: Option<bool>,
    check: Option<Check>,
    lower: Option<u32>,
    upper: Option<u32>,
    optimal: Option<bool>,
    nodes: Option<u64>,
}

pub fn to_csv(reports: &[Report]) -> Result<String, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in reports {
        w.serialize(Row {
            family: &r.family,
            n: r.n,
            method: &r.method,
            m: r.m,
            valid: r.valid,
            check: r.check,
            lower: r.lower,
            upper: r.upper,
            optimal: r.optimal,
            nodes: r.effort.map(|e| e.nodes),
        })
        .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv is utf-8"))
}
