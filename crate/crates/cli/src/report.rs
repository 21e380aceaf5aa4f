//! Reports: the one output shape every command produces.
//!
//! The text form is for people and carries the elapsed time. The JSON form
//! is canonical: fixed field order, sorted inputs upstream, no timing, so
//! identical inputs and flags yield identical bytes.

use std::fmt::Write as _;

use abelian_core::FPAbelianGroup;
use group_core::{abelianize, FiniteGroup};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// A named check. Any false verdict turns the process exit status to 1.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
pub struct Verdict {
    pub name: String,
    pub ok: bool,
}

/// A computed answer as a key and a rendered value.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
pub struct ReportEntry {
    pub key: String,
    pub value: String,
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
pub struct Report {
    /// The subcommand with its flags in canonical order.
    pub command: String,
    /// The instance file as given on the command line.
    pub instance: String,
    /// One line per object the command resolved, in resolution order.
    pub resolved: Vec<String>,
    pub results: Vec<ReportEntry>,
    pub verdicts: Vec<Verdict>,
}

impl Report {
    #[must_use]
    pub fn new(command: String, instance: String) -> Report {
        Report {
            command,
            instance,
            resolved: Vec::new(),
            results: Vec::new(),
            verdicts: Vec::new(),
        }
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.resolved.push(line.into());
    }

    pub fn result(&mut self, key: impl Into<String>, value: impl ToString) {
        self.results.push(ReportEntry {
            key: key.into(),
            value: value.to_string(),
        });
    }

    pub fn verdict(&mut self, name: impl Into<String>, ok: bool) {
        self.verdicts.push(Verdict { name: name.into(), ok });
    }

    #[must_use]
    pub fn all_ok(&self) -> bool {
        self.verdicts.iter().all(|v| v.ok)
    }

    /// 0 when every verdict holds, 1 otherwise.
    #[must_use]
    pub fn exit_code(&self) -> u8 {
        u8::from(!self.all_ok())
    }

    /// The human form: one line per fact, the timing appended when given.
    #[must_use]
    pub fn render_text(&self, elapsed_ms: Option<u128>) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).expect("string writes succeed");
        writeln!(out, "instance: {}", self.instance).expect("string writes succeed");
        for line in &self.resolved {
            writeln!(out, "resolved: {line}").expect("string writes succeed");
        }
        for e in &self.results {
            writeln!(out, "{} = {}", e.key, e.value).expect("string writes succeed");
        }
        for v in &self.verdicts {
            writeln!(out, "{}: {}", v.name, v.ok).expect("string writes succeed");
        }
        if let Some(ms) = elapsed_ms {
            writeln!(out, "time: {ms} ms").expect("string writes succeed");
        }
        out
    }

    /// The canonical JSON form.
    #[must_use]
    pub fn render_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Renders an abelian group by its invariant factors joined with " + ". The
/// factor 0 prints as "Z" and the trivial group prints as "0".
#[must_use]
pub fn render_group(g: &FPAbelianGroup) -> String {
    if g.invariant_factors().is_empty() {
        return "0".to_string();
    }
    g.invariant_factors()
        .iter()
        .map(|f| if f.is_zero() { "Z".to_string() } else { format!("Z/{f}") })
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Renders a finite group from its table: abelian ones by invariant factors,
/// the rest by order.
#[must_use]
pub fn render_finite_group(g: &FiniteGroup) -> String {
    match abelianize(g) {
        Ok(ab) => render_group(ab.group()),
        Err(_) => format!("nonabelian of order {}", g.order()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn groups_render_by_invariant_factors() {
        assert_eq!(render_group(&FPAbelianGroup::trivial()), "0");
        assert_eq!(render_group(&FPAbelianGroup::cyclic(2)), "Z/2");
        assert_eq!(render_group(&FPAbelianGroup::cyclic(0)), "Z");
        let g = FPAbelianGroup::new(vec![BigInt::from(2), BigInt::from(4), BigInt::from(0)]).unwrap();
        assert_eq!(render_group(&g), "Z/2 + Z/4 + Z");
    }

    #[test]
    fn finite_groups_render_by_structure() {
        assert_eq!(render_finite_group(&FiniteGroup::cyclic(4)), "Z/4");
        assert_eq!(render_finite_group(&FiniteGroup::cyclic(1)), "0");
    }

    #[test]
    fn text_rendering_orders_the_sections() {
        let mut r = Report::new("homotopy".into(), "file.json".into());
        r.note("crossed module 'v'");
        r.result("pi0", "Z/2");
        r.verdict("k3 trivial", false);
        let text = r.render_text(Some(7));
        assert_eq!(
            text,
            "command: homotopy\ninstance: file.json\nresolved: crossed module 'v'\npi0 = Z/2\nk3 trivial: false\ntime: 7 ms\n"
        );
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn json_rendering_roundtrips_and_has_no_timing() {
        let mut r = Report::new("validate".into(), "file.json".into());
        r.verdict("all objects valid", true);
        let json = r.render_json();
        assert!(!json.contains("time"));
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
