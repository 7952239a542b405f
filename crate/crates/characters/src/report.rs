//! Outcomes of the character checks.

use std::fmt;

use va_exact::{fmt_rational, Q};

use crate::series::{GradedQSeries, Mismatch};

/// How a sub-check enters the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    /// Two series must agree on the window.
    Identity,
    /// A deliberately broken input must be detected.
    Control,
    /// Recorded for information; never affects the verdict.
    Diagnostic,
}

#[derive(Clone, Debug)]
pub struct SubCheck {
    pub name: String,
    pub kind: CheckKind,
    /// Identities: the series agree. Controls: a difference was found.
    /// Diagnostics: whether the two sides agree.
    pub ok: bool,
    /// Exponent below which the comparison was made.
    pub window: Option<Q>,
    pub mismatch: Option<Mismatch>,
    pub note: String,
}

impl SubCheck {
    fn compare(name: String, kind: CheckKind, a: &GradedQSeries, b: &GradedQSeries, order: &Q) -> SubCheck {
        let window = GradedQSeries::common_window(a, b);
        let short = window.as_ref().is_some_and(|w| w < order);
        let mismatch = GradedQSeries::first_difference(a, b);
        let agree = mismatch.is_none() && !short;
        let note = if short {
            format!("window q^{} is below the requested order", fmt_rational(window.as_ref().unwrap()))
        } else {
            String::new()
        };
        let ok = match kind {
            CheckKind::Identity | CheckKind::Diagnostic => agree,
            CheckKind::Control => mismatch.is_some(),
        };
        SubCheck { name, kind, ok, window, mismatch, note }
    }

    pub fn identity(name: impl Into<String>, a: &GradedQSeries, b: &GradedQSeries, order: &Q) -> SubCheck {
        SubCheck::compare(name.into(), CheckKind::Identity, a, b, order)
    }

    pub fn control(name: impl Into<String>, a: &GradedQSeries, b: &GradedQSeries, order: &Q) -> SubCheck {
        SubCheck::compare(name.into(), CheckKind::Control, a, b, order)
    }

    pub fn diagnostic(name: impl Into<String>, a: &GradedQSeries, b: &GradedQSeries, order: &Q) -> SubCheck {
        SubCheck::compare(name.into(), CheckKind::Diagnostic, a, b, order)
    }

    /// A scalar equality.
    pub fn value(name: impl Into<String>, got: &Q, want: &Q) -> SubCheck {
        let ok = got == want;
        SubCheck {
            name: name.into(),
            kind: CheckKind::Identity,
            ok,
            window: None,
            mismatch: None,
            note: format!("got {}, expected {}", fmt_rational(got), fmt_rational(want)),
        }
    }

    /// A yes/no property.
    pub fn flag(name: impl Into<String>, ok: bool, note: impl Into<String>) -> SubCheck {
        SubCheck { name: name.into(), kind: CheckKind::Identity, ok, window: None, mismatch: None, note: note.into() }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> SubCheck {
        self.note = note.into();
        self
    }

    pub fn counts(&self) -> bool {
        self.kind != CheckKind::Diagnostic
    }
}

/// Verdict of one named character check.
#[derive(Clone, Debug)]
pub struct CharReport {
    pub check: String,
    pub params: Vec<(String, Q)>,
    pub order: Q,
    pub checks: Vec<SubCheck>,
    pub notes: Vec<String>,
}

impl CharReport {
    pub fn new(check: &str, params: Vec<(String, Q)>, order: &Q) -> CharReport {
        CharReport { check: check.into(), params, order: order.clone(), checks: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().filter(|c| c.counts()).all(|c| c.ok)
    }

    /// The first failing identity or control.
    pub fn first_failure(&self) -> Option<&SubCheck> {
        self.checks.iter().find(|c| c.counts() && !c.ok)
    }

    pub fn push(&mut self, c: SubCheck) {
        log::debug!("{}: {} {}", self.check, c.name, if c.ok { "ok" } else { "FAIL" });
        self.checks.push(c);
    }
}

impl fmt::Display for CharReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={}", fmt_rational(v))).collect();
        writeln!(
            f,
            "{} [{}] order {}: {}",
            self.check,
            params.join(", "),
            fmt_rational(&self.order),
            if self.passed() { "pass" } else { "FAIL" }
        )?;
        for c in &self.checks {
            let tag = match (c.kind, c.ok) {
                (CheckKind::Diagnostic, true) => "agrees",
                (CheckKind::Diagnostic, false) => "differs",
                (_, true) => "ok",
                (_, false) => "FAIL",
            };
            write!(f, "  {:<32} {tag}", c.name)?;
            if let Some(m) = &c.mismatch {
                write!(f, "  first difference {}", m.describe())?;
            }
            if !c.note.is_empty() {
                write!(f, "  ({})", c.note)?;
            }
            writeln!(f)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}
