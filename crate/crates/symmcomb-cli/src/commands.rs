//! Subcommand implementations: each builds a payload, wraps it in the
//! envelope, and renders it in the requested format.

use std::collections::BTreeSet;

use anyhow::Context;
use rayon::prelude::*;
use serde::Serialize;

use symmcomb::acceptance;
use symmcomb::cartan::Weight;
use symmcomb::lspath::{self, Path};
use symmcomb::prv;
use symmcomb::satake::{preset, preset_names, Symmetric};
use symmcomb::smt::StandardMonomials;
use symmcomb::{Int, Limits};

use crate::config::Job;
use crate::report::{csv_line, render, weight_strings, Envelope, Render};

/// A rendered report plus whether a verification failed (exit code 1).
pub struct Outcome {
    pub body: String,
    pub failed_verification: bool,
}

fn ok<T: Render>(job: &Job, command: &str, payload: T) -> anyhow::Result<Outcome> {
    let envelope = Envelope::new(command, job.info.clone(), payload);
    Ok(Outcome { body: render(&envelope, job.format)?, failed_verification: false })
}

// ---------------------------------------------------------------- involution

#[derive(Serialize)]
pub struct InvolutionReport {
    sigma_on_weights: Vec<Vec<i64>>,
    /// Row j: simple-root coordinates of the image of the (j+1)-th simple root.
    sigma_of_simple_roots: Vec<Vec<i64>>,
    restricted_type: String,
    reduced: bool,
    restricted_base: Vec<Vec<i64>>,
    doubled: Vec<bool>,
    representatives: Vec<usize>,
    exceptional_roots: Vec<usize>,
    c_values: Vec<i64>,
}

impl Render for InvolutionReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for (j, image) in self.sigma_of_simple_roots.iter().enumerate() {
            out.push_str(&format!("sigma(alpha_{}) = {:?}\n", j + 1, image));
        }
        out.push_str(&format!(
            "restricted type {} ({}), base {:?}\n",
            self.restricted_type,
            if self.reduced { "reduced" } else { "non-reduced" },
            self.restricted_base
        ));
        out.push_str(&format!(
            "representatives {:?}, exceptional {:?}, c = {:?}\n",
            self.representatives, self.exceptional_roots, self.c_values
        ));
        out
    }
}

pub fn involution(job: &Job, sym: &Symmetric) -> anyhow::Result<Outcome> {
    let t = sym.involution();
    let n = sym.rank();
    let payload = InvolutionReport {
        sigma_on_weights: t.sigma_weight_matrix().clone(),
        sigma_of_simple_roots: (0..n)
            .map(|j| (0..n).map(|r| t.sigma_simple_roots()[r][j]).collect())
            .collect(),
        restricted_type: sym.restricted().type_name().to_string(),
        reduced: sym.restricted().is_reduced(),
        restricted_base: sym.restricted().base_root_coords().to_vec(),
        doubled: sym.restricted().doubled().to_vec(),
        representatives: t.representatives().iter().map(|i| i + 1).collect(),
        exceptional_roots: t.exceptional_roots().iter().map(|i| i + 1).collect(),
        c_values: t.c_values().to_vec(),
    };
    ok(job, "involution", payload)
}

// ------------------------------------------------------------------- lattice

#[derive(Serialize)]
pub struct LatticeReport {
    omega_tilde: Vec<Vec<String>>,
    c: Vec<i64>,
    pic_generators: Vec<Vec<String>>,
    theta_basis: Vec<Vec<String>>,
    pic_rank: usize,
}

impl Render for LatticeReport {
    fn text(&self) -> String {
        format!(
            "spherical generators {:?} with c = {:?}\npicard generators {:?}\nbasis {:?} (rank {})\n",
            self.omega_tilde, self.c, self.pic_generators, self.theta_basis, self.pic_rank
        )
    }
}

pub fn lattice(job: &Job, sym: &Symmetric) -> anyhow::Result<Outcome> {
    let l = sym.lattice();
    let payload = LatticeReport {
        omega_tilde: l.omega_tilde().iter().map(weight_strings).collect(),
        c: l.c().to_vec(),
        pic_generators: l.pic_generators().iter().map(weight_strings).collect(),
        theta_basis: l.theta().iter().map(weight_strings).collect(),
        pic_rank: l.pic_rank(),
    };
    ok(job, "lattice", payload)
}

// ----------------------------------------------------------------- spherical

#[derive(Serialize)]
pub struct SphericalReport {
    weight: Vec<String>,
    special: bool,
    spherical: bool,
    dominant: bool,
    in_picard: bool,
}

impl Render for SphericalReport {
    fn text(&self) -> String {
        format!(
            "weight ({}) special={} spherical={} dominant={} in_picard={}\n",
            self.weight.join(","),
            self.special,
            self.spherical,
            self.dominant,
            self.in_picard
        )
    }
}

pub fn spherical(job: &Job, sym: &Symmetric, weight: &Weight) -> anyhow::Result<Outcome> {
    let payload = SphericalReport {
        weight: weight_strings(weight),
        special: sym.involution().is_special(weight),
        spherical: sym.is_spherical(weight),
        dominant: weight.is_dominant(),
        in_picard: sym.lattice().in_pic(weight),
    };
    ok(job, "spherical", payload)
}

// ------------------------------------------------------------------- lspaths

#[derive(Serialize)]
pub struct PathEntry {
    #[serde(skip_serializing_if = "Option::is_none")]
    chain: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cuts: Option<Vec<String>>,
    segments: Vec<SegmentEntry>,
    endpoint: Vec<String>,
}

#[derive(Serialize)]
pub struct SegmentEntry {
    direction: Vec<String>,
    duration: String,
}

#[derive(Serialize)]
pub struct CrystalGraph {
    nodes: Vec<Vec<String>>,
    /// `[from, to, color]` with 1-based colors: lowering along that root.
    edges: Vec<[usize; 3]>,
}

#[derive(Serialize)]
pub struct LspathsReport {
    lambda: Vec<String>,
    method: String,
    count: usize,
    dimension: String,
    paths: Vec<PathEntry>,
    graph: CrystalGraph,
}

impl Render for LspathsReport {
    fn text(&self) -> String {
        format!(
            "shape ({}): {} paths, module dimension {}, {} crystal edges\n",
            self.lambda.join(","),
            self.count,
            self.dimension,
            self.graph.edges.len()
        )
    }

    fn csv(&self) -> Option<String> {
        let mut out = csv_line(&["chain".into(), "cuts".into(), "endpoint".into()]);
        for p in &self.paths {
            out.push_str(&csv_line(&[
                p.chain.as_ref().map(|c| c.join(" ")).unwrap_or_default(),
                p.cuts.as_ref().map(|c| c.join(" ")).unwrap_or_default(),
                p.endpoint.join(" "),
            ]));
        }
        Some(out)
    }
}

fn segment_entries(path: &Path) -> Vec<SegmentEntry> {
    path.segments()
        .iter()
        .map(|(dir, dur)| SegmentEntry { direction: weight_strings(dir), duration: dur.to_string() })
        .collect()
}

pub fn lspaths(
    job: &Job,
    sym: &Symmetric,
    lambda: &Weight,
    method: &str,
) -> anyhow::Result<Outcome> {
    let rs = sym.root_system();
    lspath::path_method(method)
        .with_context(|| format!("unknown enumeration method '{method}'"))?;
    let paths = match method {
        "chains" => {
            let family = lspath::ls_paths(rs, lambda)?;
            family
                .paths
                .iter()
                .zip(&family.realized)
                .map(|(ls, realized)| PathEntry {
                    chain: Some(
                        ls.chain()
                            .iter()
                            .map(|&k| {
                                family.poset.as_ref().map(|p| p.element(k).rep.to_string())
                                    .unwrap_or_else(|| "e".into())
                            })
                            .collect(),
                    ),
                    cuts: Some(ls.cuts().iter().map(|c| c.to_string()).collect()),
                    segments: segment_entries(realized),
                    endpoint: weight_strings(&realized.endpoint()),
                })
                .collect::<Vec<_>>()
        }
        _ => lspath::path_method(method)
            .expect("validated above")
            .enumerate(rs, lambda)?
            .iter()
            .map(|p| PathEntry {
                chain: None,
                cuts: None,
                segments: segment_entries(p),
                endpoint: weight_strings(&p.endpoint()),
            })
            .collect(),
    };
    let crystal = lspath::crystal_generate(rs, &Path::straight(lambda), rs.limits().crystal_cap)?;
    let payload = LspathsReport {
        lambda: weight_strings(lambda),
        method: method.to_string(),
        count: paths.len(),
        dimension: rs.weyl_dim(lambda)?.to_string(),
        paths,
        graph: CrystalGraph {
            nodes: crystal.paths.iter().map(|p| weight_strings(&p.endpoint())).collect(),
            edges: crystal.edges.iter().map(|&(a, b, c)| [a, b, c + 1]).collect(),
        },
    };
    ok(job, "lspaths", payload)
}

// ----------------------------------------------------------------- monomials

#[derive(Serialize)]
pub struct FactorEntry {
    theta: usize,
    chain: Vec<String>,
    cuts: Vec<String>,
}

#[derive(Serialize)]
pub struct MonomialEntry {
    exponents: Vec<i64>,
    factors: Vec<FactorEntry>,
}

#[derive(Serialize)]
pub struct MonomialsReport {
    lambda: Vec<String>,
    orbit_set: Vec<usize>,
    count: usize,
    monomials: Vec<MonomialEntry>,
}

impl Render for MonomialsReport {
    fn text(&self) -> String {
        format!(
            "shape ({}) away from orbits {:?}: {} standard monomials\n",
            self.lambda.join(","),
            self.orbit_set,
            self.count
        )
    }

    fn csv(&self) -> Option<String> {
        let mut out = csv_line(&["exponents".into(), "factors".into()]);
        for m in &self.monomials {
            let exps = m.exponents.iter().map(|n| n.to_string()).collect::<Vec<_>>().join("|");
            let factors = m
                .factors
                .iter()
                .map(|f| format!("theta{}:{};{}", f.theta, f.chain.join(" "), f.cuts.join(" ")))
                .collect::<Vec<_>>()
                .join(" * ");
            out.push_str(&csv_line(&[exps, factors]));
        }
        Some(out)
    }
}

pub fn monomials(
    job: &Job,
    sym: &Symmetric,
    lambda: &Weight,
    orbit_set: &BTreeSet<usize>,
) -> anyhow::Result<Outcome> {
    let smt = StandardMonomials::new(sym)?;
    let list = smt.enumerate_standard(lambda, orbit_set)?;
    let monomials = list
        .iter()
        .map(|m| MonomialEntry {
            exponents: m.vanishing_order().to_vec(),
            factors: m
                .factors()
                .iter()
                .map(|(h, p)| {
                    let poset = smt.family(*h).poset.as_ref().expect("nonzero shape");
                    FactorEntry {
                        theta: h + 1,
                        chain: p.chain().iter().map(|&k| poset.element(k).rep.to_string()).collect(),
                        cuts: p.cuts().iter().map(|c| c.to_string()).collect(),
                    }
                })
                .collect(),
        })
        .collect::<Vec<_>>();
    let payload = MonomialsReport {
        lambda: weight_strings(lambda),
        orbit_set: orbit_set.iter().map(|i| i + 1).collect(),
        count: monomials.len(),
        monomials,
    };
    ok(job, "monomials", payload)
}

// ---------------------------------------------------------------- verify-dim

#[derive(Serialize)]
pub struct VerifyDimReport {
    lambda: Vec<String>,
    orbit_set: Vec<usize>,
    standard_count: usize,
    expected: String,
    terms: Vec<TermEntry>,
    pass: bool,
}

#[derive(Serialize)]
pub struct TermEntry {
    mu: Vec<String>,
    dim: String,
}

impl Render for VerifyDimReport {
    fn text(&self) -> String {
        let sum = self.terms.iter().map(|t| t.dim.clone()).collect::<Vec<_>>().join("+");
        format!(
            "{} = {} {}\n",
            self.standard_count,
            if sum.is_empty() { "0".into() } else { sum },
            if self.pass { "PASS" } else { "FAIL" }
        )
    }

    fn csv(&self) -> Option<String> {
        let mut out = csv_line(&["mu".into(), "dim".into()]);
        for t in &self.terms {
            out.push_str(&csv_line(&[t.mu.join(" "), t.dim.clone()]));
        }
        out.push_str(&csv_line(&[
            "standard_count".into(),
            self.standard_count.to_string(),
        ]));
        out.push_str(&csv_line(&["pass".into(), self.pass.to_string()]));
        Some(out)
    }
}

pub fn verify_dim(
    job: &Job,
    sym: &Symmetric,
    lambda: &Weight,
    orbit_set: &BTreeSet<usize>,
) -> anyhow::Result<Outcome> {
    let smt = StandardMonomials::new(sym)?;
    let report = smt.verify_dimension(lambda, orbit_set)?;
    let payload = VerifyDimReport {
        lambda: weight_strings(lambda),
        orbit_set: report.orbit_set.iter().map(|i| i + 1).collect(),
        standard_count: report.standard_count,
        expected: report.expected.to_string(),
        terms: report
            .terms
            .iter()
            .map(|(mu, dim)| TermEntry { mu: weight_strings(mu), dim: dim.to_string() })
            .collect(),
        pass: report.pass,
    };
    let failed = !report.pass;
    let envelope = Envelope::new("verify-dim", job.info.clone(), payload);
    Ok(Outcome { body: render(&envelope, job.format)?, failed_verification: failed })
}

// -------------------------------------------------------------------- tensor

#[derive(Serialize)]
pub struct TensorReport {
    lambda: Vec<String>,
    mu: Vec<String>,
    engine: String,
    components: Vec<ComponentEntry>,
    dimension_check: DimensionCheck,
}

#[derive(Serialize)]
pub struct ComponentEntry {
    nu: Vec<String>,
    multiplicity: String,
}

#[derive(Serialize)]
pub struct DimensionCheck {
    product: String,
    sum: String,
    pass: bool,
}

impl Render for TensorReport {
    fn text(&self) -> String {
        let mut out = format!(
            "({}) ⊗ ({}) via {}:\n",
            self.lambda.join(","),
            self.mu.join(","),
            self.engine
        );
        for c in &self.components {
            out.push_str(&format!("  ({}) x{}\n", c.nu.join(","), c.multiplicity));
        }
        out.push_str(&format!(
            "dimension check {} = {} {}\n",
            self.dimension_check.product,
            self.dimension_check.sum,
            if self.dimension_check.pass { "PASS" } else { "FAIL" }
        ));
        out
    }

    fn csv(&self) -> Option<String> {
        let mut out = csv_line(&["nu".into(), "multiplicity".into()]);
        for c in &self.components {
            out.push_str(&csv_line(&[c.nu.join(" "), c.multiplicity.clone()]));
        }
        Some(out)
    }
}

pub fn tensor(
    job: &Job,
    sym: &Symmetric,
    lambda: &Weight,
    mu: &Weight,
    engine_name: &str,
) -> anyhow::Result<Outcome> {
    let rs = sym.root_system();
    let engine = prv::tensor_engine(engine_name)
        .with_context(|| format!("unknown tensor engine '{engine_name}'"))?;
    let components = engine.decompose(rs, lambda, mu)?;
    let product = rs.weyl_dim(lambda)? * rs.weyl_dim(mu)?;
    let mut sum = Int::from(0);
    for (nu, mult) in &components {
        sum += mult * rs.weyl_dim(nu)?;
    }
    let pass = sum == product;
    let payload = TensorReport {
        lambda: weight_strings(lambda),
        mu: weight_strings(mu),
        engine: engine_name.to_string(),
        components: components
            .iter()
            .map(|(nu, m)| ComponentEntry { nu: weight_strings(nu), multiplicity: m.to_string() })
            .collect(),
        dimension_check: DimensionCheck {
            product: product.to_string(),
            sum: sum.to_string(),
            pass,
        },
    };
    let envelope = Envelope::new("tensor", job.info.clone(), payload);
    Ok(Outcome { body: render(&envelope, job.format)?, failed_verification: !pass })
}

// ----------------------------------------------------------------------- prv

#[derive(Serialize)]
pub struct WitnessEntry {
    nu: Vec<String>,
    lambda: Vec<String>,
    mu: Vec<String>,
    lambda_prime: Vec<String>,
    mu_prime: Vec<String>,
    multiplicity: String,
}

impl From<&prv::Witness> for WitnessEntry {
    fn from(w: &prv::Witness) -> WitnessEntry {
        WitnessEntry {
            nu: weight_strings(&w.nu),
            lambda: weight_strings(&w.lambda),
            mu: weight_strings(&w.mu),
            lambda_prime: weight_strings(&w.lambda_prime),
            mu_prime: weight_strings(&w.mu_prime),
            multiplicity: w.multiplicity.to_string(),
        }
    }
}

#[derive(Serialize)]
pub struct PrvWitnessReport {
    witness: WitnessEntry,
    verified: bool,
}

impl Render for PrvWitnessReport {
    fn text(&self) -> String {
        format!(
            "nu=({}) <= ({}) + ({}): witness ({}), ({}) with multiplicity {}\n",
            self.witness.nu.join(","),
            self.witness.lambda.join(","),
            self.witness.mu.join(","),
            self.witness.lambda_prime.join(","),
            self.witness.mu_prime.join(","),
            self.witness.multiplicity
        )
    }
}

#[derive(Serialize)]
pub struct PrvSweepReport {
    bound: i64,
    cases: usize,
    witnesses: Vec<WitnessEntry>,
    /// Expected empty; any entry is a counterexample to the sweep.
    failures: Vec<String>,
}

impl Render for PrvSweepReport {
    fn text(&self) -> String {
        format!(
            "sweep bound {}: {} admissible triples, {} failures\n",
            self.bound,
            self.cases,
            self.failures.len()
        )
    }

    fn csv(&self) -> Option<String> {
        let mut out = csv_line(&[
            "nu".into(),
            "lambda".into(),
            "mu".into(),
            "lambda_prime".into(),
            "mu_prime".into(),
            "multiplicity".into(),
        ]);
        for w in &self.witnesses {
            out.push_str(&csv_line(&[
                w.nu.join(" "),
                w.lambda.join(" "),
                w.mu.join(" "),
                w.lambda_prime.join(" "),
                w.mu_prime.join(" "),
                w.multiplicity.clone(),
            ]));
        }
        Some(out)
    }
}

pub fn prv_witness(
    job: &Job,
    sym: &Symmetric,
    nu: &Weight,
    lambda: &Weight,
    mu: &Weight,
) -> anyhow::Result<Outcome> {
    let witness = prv::prv_witness(sym, nu, lambda, mu)?;
    let payload = PrvWitnessReport { witness: WitnessEntry::from(&witness), verified: true };
    ok(job, "prv", payload)
}

#[derive(Serialize)]
pub struct PrvSupportReport {
    lambda: Vec<String>,
    mu: Vec<String>,
    instances: Vec<WitnessEntry>,
}

impl Render for PrvSupportReport {
    fn text(&self) -> String {
        let mut out = format!(
            "support of ({}) + ({}): {} summands, all witnessed\n",
            self.lambda.join(","),
            self.mu.join(","),
            self.instances.len()
        );
        for w in &self.instances {
            out.push_str(&format!(
                "  nu=({}) via ({}), ({})\n",
                w.nu.join(","),
                w.lambda_prime.join(","),
                w.mu_prime.join(",")
            ));
        }
        out
    }

    fn csv(&self) -> Option<String> {
        let mut out = csv_line(&["nu".into(), "lambda_prime".into(), "mu_prime".into(), "multiplicity".into()]);
        for w in &self.instances {
            out.push_str(&csv_line(&[
                w.nu.join(" "),
                w.lambda_prime.join(" "),
                w.mu_prime.join(" "),
                w.multiplicity.clone(),
            ]));
        }
        Some(out)
    }
}

pub fn prv_support(
    job: &Job,
    sym: &Symmetric,
    lambda: &Weight,
    mu: &Weight,
) -> anyhow::Result<Outcome> {
    let report = prv::surjectivity_support_check(sym, lambda, mu)?;
    let payload = PrvSupportReport {
        lambda: weight_strings(lambda),
        mu: weight_strings(mu),
        instances: report.instances.iter().map(WitnessEntry::from).collect(),
    };
    ok(job, "prv", payload)
}

pub fn prv_sweep(job: &Job, sym: &Symmetric, bound: i64) -> anyhow::Result<Outcome> {
    let box_points = prv::omega1_plus_box(sym, bound);
    let mut triples = Vec::new();
    for nu in &box_points {
        for lambda in &box_points {
            for mu in &box_points {
                if sym.leq_sigma(nu, &(lambda + mu)) {
                    triples.push((nu.clone(), lambda.clone(), mu.clone()));
                }
            }
        }
    }
    let results: Vec<_> = triples
        .par_iter()
        .map(|(nu, lambda, mu)| prv::prv_witness(sym, nu, lambda, mu))
        .collect();
    let mut witnesses = Vec::new();
    let mut failures = Vec::new();
    for result in &results {
        match result {
            Ok(w) => witnesses.push(WitnessEntry::from(w)),
            Err(e) => failures.push(e.to_string()),
        }
    }
    let payload = PrvSweepReport {
        bound,
        cases: triples.len(),
        witnesses,
        failures: failures.clone(),
    };
    let envelope = Envelope::new("prv", job.info.clone(), payload);
    Ok(Outcome { body: render(&envelope, job.format)?, failed_verification: !failures.is_empty() })
}

// -------------------------------------------------------------------- accept

#[derive(Serialize)]
pub struct CheckEntry {
    name: String,
    pass: bool,
    details: String,
}

#[derive(Serialize)]
pub struct SuiteEntry {
    name: String,
    diagram: crate::report::DiagramInfo,
    checks: Vec<CheckEntry>,
    pass: bool,
}

#[derive(Serialize)]
pub struct AcceptReport {
    theta_bound: i64,
    box_bound: i64,
    suites: Vec<SuiteEntry>,
    pass: bool,
}

impl Render for AcceptReport {
    fn text(&self) -> String {
        let mut out = String::new();
        for suite in &self.suites {
            out.push_str(&format!("== {} ==\n", suite.name));
            for c in &suite.checks {
                out.push_str(&format!(
                    "{} {} ({})\n",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.details
                ));
            }
        }
        out.push_str(if self.pass { "all checks passed\n" } else { "some checks FAILED\n" });
        out
    }

    fn csv(&self) -> Option<String> {
        let mut out = csv_line(&["diagram".into(), "check".into(), "pass".into(), "details".into()]);
        for suite in &self.suites {
            for c in &suite.checks {
                out.push_str(&csv_line(&[
                    suite.name.clone(),
                    c.name.clone(),
                    c.pass.to_string(),
                    c.details.clone(),
                ]));
            }
        }
        Some(out)
    }
}

fn run_suite(
    name: String,
    info: crate::report::DiagramInfo,
    sym: &Symmetric,
    theta_bound: i64,
    box_bound: i64,
) -> anyhow::Result<SuiteEntry> {
    let checks = acceptance::preset_suite(sym, theta_bound, box_bound)?;
    let pass = checks.iter().all(|c| c.pass);
    Ok(SuiteEntry {
        name,
        diagram: info,
        checks: checks
            .into_iter()
            .map(|c| CheckEntry { name: c.name, pass: c.pass, details: c.details })
            .collect(),
        pass,
    })
}

pub fn accept(
    job: &Job,
    sym: &Symmetric,
    theta_bound: i64,
    box_bound: i64,
    _all: bool,
) -> anyhow::Result<Outcome> {
    let name = job
        .info
        .preset
        .clone()
        .unwrap_or_else(|| job.info.cartan_type.clone().unwrap_or_else(|| "custom".into()));
    let suites = vec![run_suite(name, job.info.clone(), sym, theta_bound, box_bound)?];
    let pass = suites.iter().all(|s| s.pass);
    let payload = AcceptReport { theta_bound, box_bound, suites, pass };
    let envelope = Envelope::new("accept", job.info.clone(), payload);
    Ok(Outcome { body: render(&envelope, job.format)?, failed_verification: !pass })
}

/// The battery over every shipped preset; suites run on the worker pool.
pub fn accept_all(
    output: &crate::config::OutputSettings,
    theta_bound: i64,
    box_bound: i64,
) -> anyhow::Result<Outcome> {
    let names = preset_names();
    let suites = names
        .par_iter()
        .map(|name| {
            let diagram = preset(name)?;
            let info = crate::report::DiagramInfo::new(&diagram, Some(name.to_string()));
            let sym = Symmetric::build(diagram, Limits::default())?;
            run_suite(name.to_string(), info, &sym, theta_bound, box_bound)
        })
        .collect::<anyhow::Result<Vec<_>>>()?;
    let pass = suites.iter().all(|s| s.pass);
    let payload = AcceptReport { theta_bound, box_bound, suites, pass };
    let envelope = Envelope::without_diagram("accept", payload);
    Ok(Outcome {
        body: render(&envelope, output.format)?,
        failed_verification: !pass,
    })
}

