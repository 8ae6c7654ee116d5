use clap::ValueEnum;
use nestochroma::packing::{greedy_counterexamples, small_instances};
use nestochroma::{
    find_violation, gamma_interval, gamma_upper, Colouring, Facet, FamilyTag, Segment,
};
use serde::Serialize;
use serde_json::Value;

use crate::{Failure, Format};

/// Reference values for the bound tables and the explicit 7-dimensional
/// cyclohedron colourings.
pub const BUNDLED: &str = include_str!("../../../fixtures/paper.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Cyclohedron interval and upper-bound tables.
    PaperTables,
    /// Greedy packing against the exhaustive optimum.
    Lemma7,
    /// The two explicit colourings of the 7-dimensional cyclohedron.
    Example7,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::PaperTables => "paper-tables",
            Suite::Lemma7 => "lemma7",
            Suite::Example7 => "example7",
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Line {
    pub name: String,
    pub expected: String,
    pub got: String,
    pub ok: bool,
}

#[derive(Debug, Serialize)]
pub struct Verdict {
    pub suite: &'static str,
    pub passed: bool,
    pub checks: Vec<Line>,
}

impl Verdict {
    fn new(suite: Suite, checks: Vec<Line>) -> Self {
        Verdict {
            suite: suite.name(),
            passed: checks.iter().all(|c| c.ok),
            checks,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(self).expect("verdict serialises"),
            Format::Text => {
                let mut out: Vec<String> = self
                    .checks
                    .iter()
                    .map(|c| {
                        if c.ok {
                            format!("ok    {}: {}", c.name, c.got)
                        } else {
                            format!("FAIL  {}: expected {}, got {}", c.name, c.expected, c.got)
                        }
                    })
                    .collect();
                let failed = self.checks.iter().filter(|c| !c.ok).count();
                out.push(format!(
                    "{}: {} checks, {failed} failed",
                    self.suite,
                    self.checks.len()
                ));
                out.join("\n")
            }
        }
    }
}

fn line(name: String, expected: impl ToString, got: impl ToString) -> Line {
    let (expected, got) = (expected.to_string(), got.to_string());
    Line {
        ok: expected == got,
        name,
        expected,
        got,
    }
}

fn malformed(what: &str) -> Failure {
    Failure::Usage(format!("fixture: malformed {what}"))
}

pub fn run(
    suite: Suite,
    fixture: &str,
    max_m: usize,
    max_balls: usize,
) -> Result<Verdict, Failure> {
    let checks = match suite {
        Suite::PaperTables => paper_tables(&parse(fixture)?)?,
        Suite::Lemma7 => lemma7(max_m, max_balls)?,
        Suite::Example7 => example7(&parse(fixture)?)?,
    };
    Ok(Verdict::new(suite, checks))
}

fn parse(fixture: &str) -> Result<Value, Failure> {
    serde_json::from_str(fixture).map_err(|e| Failure::Usage(format!("fixture: {e}")))
}

fn by_dimension(v: &Value, key: &str) -> Result<Vec<(usize, Value)>, Failure> {
    let map = v[key].as_object().ok_or_else(|| malformed(key))?;
    let mut out = map
        .iter()
        .map(|(k, v)| {
            k.parse()
                .map(|n| (n, v.clone()))
                .map_err(|_| malformed(key))
        })
        .collect::<Result<Vec<_>, _>>()?;
    out.sort_by_key(|(n, _)| *n);
    Ok(out)
}

fn paper_tables(v: &Value) -> Result<Vec<Line>, Failure> {
    let mut checks = Vec::new();
    for (n, want) in by_dimension(v, "cyclohedron_interval")? {
        let pair = want
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or_else(|| malformed("interval"))?;
        let (lo, hi) = gamma_interval(n)?;
        checks.push(line(
            format!("cyclohedron interval n={n}"),
            format!("[{}, {}]", pair[0], pair[1]),
            format!("[{lo}, {hi}]"),
        ));
    }
    for (n, want) in by_dimension(v, "cyclohedron_upper")? {
        let want = want.as_u64().ok_or_else(|| malformed("upper bound"))?;
        checks.push(line(
            format!("cyclohedron upper n={n}"),
            want,
            gamma_upper(n)?,
        ));
    }
    Ok(checks)
}

fn lemma7(max_m: usize, max_balls: usize) -> Result<Vec<Line>, Failure> {
    let total = small_instances(max_m, max_balls).len();
    let bad = greedy_counterexamples(max_m, max_balls)?;
    let mut checks = vec![line(
        format!(
            "greedy packing optimal, m ≤ {max_m}, at most {max_balls} balls ({total} instances)"
        ),
        "0 counterexamples",
        format!("{} counterexamples", bad.len()),
    )];
    checks.extend(
        bad.iter()
            .map(|i| line(format!("instance {i}"), "optimal", "beaten")),
    );
    Ok(checks)
}

fn colouring(listing: &Value) -> Result<Colouring<Facet>, Failure> {
    let classes = listing["classes"]
        .as_array()
        .ok_or_else(|| malformed("classes"))?;
    let mut facets = Vec::new();
    let mut colours = Vec::new();
    for (c, class) in classes.iter().enumerate() {
        for s in class.as_array().ok_or_else(|| malformed("class"))? {
            let segment: Segment = s.as_str().ok_or_else(|| malformed("segment"))?.parse()?;
            facets.push(Facet::Segment(segment));
            colours.push(c as u32 + 1);
        }
    }
    Ok(Colouring::new(facets, colours)?)
}

fn example7(v: &Value) -> Result<Vec<Line>, Failure> {
    let example = &v["cyclohedron_7"];
    let n = example["n"].as_u64().ok_or_else(|| malformed("n"))? as usize;
    let tag = FamilyTag::cyclohedron(n)?;
    let mut checks = Vec::new();
    for name in ["f", "h"] {
        let listing = &example[name];
        let want = listing["colours"]
            .as_u64()
            .ok_or_else(|| malformed("colours"))?;
        let c = colouring(listing)?;
        checks.push(line(format!("{name}: colours"), want, c.colour_count()));
        let verdict = match find_violation(&c, &tag) {
            Ok(None) => "proper".to_string(),
            Ok(Some((a, b))) => format!("{a} and {b} share a colour and a vertex"),
            Err(e) => e.to_string(),
        };
        checks.push(line(
            format!("{name}: proper on the {tag}"),
            "proper",
            verdict,
        ));
    }
    Ok(checks)
}
