//! Human-readable rendering of reports.

use std::fmt::Write;

use altring_core::{CheckReport, Scalar};

pub fn coords(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn coverage(r: &CheckReport) -> String {
    let q = &r.quantifier_space;
    if q.exhaustive {
        format!("exhaustive, {}", q.total)
    } else {
        match q.seed {
            Some(seed) => format!("sampled {}/{}, seed {seed}", q.checked, q.total),
            None => format!("{}/{}", q.checked, q.total),
        }
    }
}

pub fn reports(out: &mut String, title: &str, reports: &[CheckReport]) {
    let _ = writeln!(out, "{title}:");
    for r in reports {
        let verdict = if r.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "  {verdict} {} [{}]", r.condition, coverage(r));
        if let Some(w) = &r.witness {
            let parts: Vec<String> = w.iter().map(|v| coords(v)).collect();
            let _ = writeln!(out, "       witness {}", parts.join(" "));
        }
        if let Some(d) = &r.detail {
            let _ = writeln!(out, "       {d}");
        }
    }
}
