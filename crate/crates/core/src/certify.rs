//! Staged differential-smoothness certification.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::automorphisms::{check_automorphism, check_pairwise_commute, check_respects_relations};
use crate::calculus::Calculus;
use crate::normal_form::Algebra;
use crate::presentation::{classify_case, ExtensionPresentation};
use crate::random::{random_element, random_form};

pub const SCHEMA_VERSION: u32 = 1;
const MAX_DETAILS: usize = 12;

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    pub degree_bound: u32,
    pub trials: usize,
    pub seed: u64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            degree_bound: 6,
            trials: 200,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Smooth,
    NotCertified,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Smooth => "SMOOTH",
            Verdict::NotCertified => "NOT_CERTIFIED",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StageReport {
    pub name: String,
    pub pass: bool,
    pub details: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SmoothnessCertificate {
    pub schema_version: u32,
    pub verdict: Verdict,
    pub failed_stage: Option<String>,
    pub stages: Vec<StageReport>,
    pub degree_bound: u32,
    pub rng_seed: u64,
    pub trials: usize,
    pub calculus_dimension: usize,
    pub matched_cases: Vec<String>,
    pub assumptions: Vec<String>,
}

impl SmoothnessCertificate {
    pub fn stage(&self, name: &str) -> Option<&StageReport> {
        self.stages.iter().find(|s| s.name == name)
    }
}

pub const STAGES: [&str; 10] = [
    "validate-shape",
    "classify",
    "automorphism-extension",
    "automorphism",
    "pairwise-commute",
    "pbw-diamond",
    "dga-axioms",
    "connected",
    "reconstruction",
    "dimension",
];

fn assumptions(d: u32) -> Vec<String> {
    vec![
        "higher-grade differential: d(w_S f) = (-1)^|S| w_S ^ df with closed basis wedges".into(),
        format!("connectedness verified on functions of total degree <= {d} only"),
        "Gelfand-Kirillov dimension taken to be m + n".into(),
    ]
}

fn capped(mut lines: Vec<String>) -> Vec<String> {
    if lines.len() > MAX_DETAILS {
        let extra = lines.len() - MAX_DETAILS;
        lines.truncate(MAX_DETAILS);
        lines.push(format!("... and {extra} more"));
    }
    lines
}

struct Run {
    stages: Vec<StageReport>,
}

impl Run {
    fn push(&mut self, name: &str, pass: bool, details: Vec<String>) -> bool {
        self.stages.push(StageReport {
            name: name.into(),
            pass,
            details: capped(details),
        });
        pass
    }
}

/// Runs every stage in order and stops at the first failure.
pub fn certify(pres: &ExtensionPresentation, opts: &CertifyOptions) -> SmoothnessCertificate {
    let mut run = Run { stages: Vec::new() };
    let mut matched_cases = Vec::new();
    let d = opts.degree_bound;
    let dimension = pres.dimension();
    let finish = |run: Run, matched_cases: Vec<String>| {
        let failed = run.stages.iter().find(|s| !s.pass).map(|s| s.name.clone());
        SmoothnessCertificate {
            schema_version: SCHEMA_VERSION,
            verdict: if failed.is_none() {
                Verdict::Smooth
            } else {
                Verdict::NotCertified
            },
            failed_stage: failed,
            stages: run.stages,
            degree_bound: d,
            rng_seed: opts.seed,
            trials: opts.trials,
            calculus_dimension: dimension,
            matched_cases,
            assumptions: assumptions(d),
        }
    };

    let violations = pres.validate_shape();
    let details = violations.iter().map(|v| v.to_string()).collect();
    if !run.push("validate-shape", violations.is_empty(), details) {
        return finish(run, matched_cases);
    }

    let labels = classify_case(pres);
    let mut details = Vec::new();
    for l in &labels {
        if l.matched {
            matched_cases.push(l.id());
            details.push(format!("matched {}", l.id()));
        }
    }
    if matched_cases.is_empty() {
        let mut names: Vec<String> = labels
            .iter()
            .flat_map(|l| l.residuals.iter().map(move |r| format!("{}: {}", l.id(), r.condition)))
            .collect();
        names.dedup();
        details.push("no match".into());
        details.extend(names);
    }
    run.push("classify", true, details);

    let alg = Algebra::new(pres.clone()).expect("shape validated");
    let calc = Calculus::new(&alg);
    let nus = calc.standard_autos();

    let mut details = Vec::new();
    for nu in nus {
        let rep = check_respects_relations(&alg, nu);
        for r in rep.nonzero() {
            details.push(format!("{} on {}: {}", nu.name, r.relation, r.residual));
        }
    }
    if !run.push("automorphism-extension", details.is_empty(), details) {
        return finish(run, matched_cases);
    }

    let details: Vec<String> = nus
        .iter()
        .filter(|nu| !check_automorphism(&alg, nu))
        .map(|nu| format!("{} has no inverse of triangular shape", nu.name))
        .collect();
    if !run.push("automorphism", details.is_empty(), details) {
        return finish(run, matched_cases);
    }

    let rep = check_pairwise_commute(&alg, nus);
    let details = rep
        .nonzero()
        .map(|r| format!("{}: {}", r.relation, r.residual))
        .collect();
    if !run.push("pairwise-commute", rep.all_zero, details) {
        return finish(run, matched_cases);
    }

    let res = alg.check_pbw_diamond(d as usize);
    let details = res
        .iter()
        .map(|r| format!("{} split at {}: {}", r.word_text(alg.m()), r.split, r.residual))
        .collect();
    if !run.push("pbw-diamond", res.is_empty(), details) {
        return finish(run, matched_cases);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut details = Vec::new();
    for _ in 0..opts.trials {
        let f = random_element(&mut rng, &alg, d, 4);
        let dd = calc.d(&calc.d0(&f));
        if !dd.is_zero() {
            details.push(format!("d(d({f})) = {dd}"));
        }
    }
    let half = opts.trials / 2;
    for _ in 0..half {
        let w = random_form(&mut rng, &calc, 1, 3, 3);
        let dd = calc.d(&calc.d(&w));
        if !dd.is_zero() {
            details.push(format!("d(d({w})) = {dd}"));
        }
    }
    for _ in 0..half {
        let f = random_element(&mut rng, &alg, 3, 3);
        let g = random_element(&mut rng, &alg, 3, 3);
        let r = calc.leibniz_residual(&f, &g);
        if !r.is_zero() {
            details.push(format!("Leibniz on ({f}, {g}): {r}"));
        }
    }
    if !run.push("dga-axioms", details.is_empty(), details) {
        return finish(run, matched_cases);
    }

    let kernel = calc.connected_check(d);
    if !run.push(
        "connected",
        kernel == 1,
        vec![format!("dim ker d on degree <= {d} is {kernel}")],
    ) {
        return finish(run, matched_cases);
    }

    let gens = calc.integral_generators();
    let mut details = Vec::new();
    for k in 0..=calc.top_grade() {
        let mut tests = gens.omega[k].clone();
        for _ in 0..20 {
            tests.push(random_form(&mut rng, &calc, k, 3, 3));
        }
        for test in tests {
            match calc.reconstruct_check(&gens, &test) {
                Ok(r) if r.is_zero() => {}
                Ok(r) => details.push(format!("grade {k}, {test}: residual {r}")),
                Err(e) => details.push(format!("grade {k}: {e}")),
            }
        }
    }
    if !run.push("reconstruction", details.is_empty(), details) {
        return finish(run, matched_cases);
    }

    let vol = calc.pi_omega(&calc.volume()).map(|a| a == alg.one()).unwrap_or(false);
    run.push(
        "dimension",
        vol,
        vec![format!(
            "calculus dimension {} = assumed Gelfand-Kirillov dimension {}",
            dimension, dimension
        )],
    );
    finish(run, matched_cases)
}
