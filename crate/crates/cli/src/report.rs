//! Text rendering of command results.

use std::fmt::Write;

use spbw_core::automorphisms::{GeneratorImages, ResidualReport};
use spbw_core::{Algebra, CaseLabel, ShapeViolation, SmoothnessCertificate};

pub fn violations(list: &[ShapeViolation]) -> String {
    if list.is_empty() {
        return "valid\n".into();
    }
    let mut s = String::from("invalid presentation\n");
    for v in list {
        let _ = writeln!(s, "  {v}");
    }
    s
}

pub fn classification(labels: &[CaseLabel]) -> String {
    let matched: Vec<_> = labels.iter().filter(|l| l.matched).collect();
    let mut s = String::new();
    if matched.is_empty() {
        let names: Vec<String> = labels
            .iter()
            .flat_map(|l| l.residuals.iter().map(move |r| format!("{} [{}]", r.condition, l.id())))
            .collect();
        if names.is_empty() {
            let _ = writeln!(s, "no match; no row has this shape of sigma");
        } else {
            let _ = writeln!(s, "no match; residuals: {}", names.join(", "));
        }
    } else {
        for l in matched {
            let _ = writeln!(s, "{}", l.id());
        }
    }
    s
}

pub fn images(alg: &Algebra, nu: &GeneratorImages) -> String {
    let parts: Vec<String> = alg
        .letters()
        .into_iter()
        .map(|l| format!("{} -> {}", l.name(alg.m()), nu.image(l)))
        .collect();
    format!("{}: {}", nu.name, parts.join(", "))
}

pub fn residuals(title: &str, rep: &ResidualReport) -> String {
    let mut s = String::new();
    if rep.all_zero {
        let _ = writeln!(s, "{title}: ok");
    } else {
        let _ = writeln!(s, "{title}: FAILED");
        for r in rep.nonzero() {
            let _ = writeln!(s, "    {}: {}", r.relation, r.residual);
        }
    }
    s
}

pub fn certificate(cert: &SmoothnessCertificate) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "verdict: {}", cert.verdict);
    if let Some(stage) = &cert.failed_stage {
        let _ = writeln!(s, "failed stage: {stage}");
    }
    let _ = writeln!(
        s,
        "degree bound: {}, trials: {}, seed: {}",
        cert.degree_bound, cert.trials, cert.rng_seed
    );
    let _ = writeln!(s, "calculus dimension: {}", cert.calculus_dimension);
    if !cert.matched_cases.is_empty() {
        let _ = writeln!(s, "matched: {}", cert.matched_cases.join(", "));
    }
    for st in &cert.stages {
        let _ = writeln!(s, "[{}] {}", if st.pass { "pass" } else { "FAIL" }, st.name);
        for d in &st.details {
            let _ = writeln!(s, "    {d}");
        }
    }
    for a in &cert.assumptions {
        let _ = writeln!(s, "assumption: {a}");
    }
    s
}
