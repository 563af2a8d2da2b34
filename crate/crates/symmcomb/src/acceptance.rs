//! Reusable self-check sweeps over the library invariants.
//!
//! Each check runs an exhaustive sweep at a configurable bound and reports
//! one pass/fail line. The acceptance test suite drives these at the pinned
//! bounds; the CLI exposes them per diagram.

use std::collections::{BTreeMap, BTreeSet};

use num::{Signed, Zero};

use crate::cartan::{self, RootSystem, Weight};
use crate::lspath::{self, path_methods};
use crate::prv;
use crate::satake::Symmetric;
use crate::smt::StandardMonomials;
use crate::{rat, Int, Result};

/// One named check with a one-line summary.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub details: String,
}

impl Check {
    fn new(name: &str, pass: bool, details: String) -> Check {
        Check { name: name.to_string(), pass, details }
    }
}

/// All dominant integral weights with fundamental coordinates up to `bound`.
pub fn dominant_box(rank: usize, bound: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut counters = vec![0i64; rank];
    loop {
        out.push(Weight::from_ints(&counters));
        let mut idx = 0;
        loop {
            if idx == rank {
                return out;
            }
            counters[idx] += 1;
            if counters[idx] <= bound {
                break;
            }
            counters[idx] = 0;
            idx += 1;
        }
    }
}

/// All integral weights with fundamental coordinates in `[-bound, bound]`.
pub fn signed_box(rank: usize, bound: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut counters = vec![-bound; rank];
    loop {
        out.push(Weight::from_ints(&counters));
        let mut idx = 0;
        loop {
            if idx == rank {
                return out;
            }
            counters[idx] += 1;
            if counters[idx] <= bound {
                break;
            }
            counters[idx] = -bound;
            idx += 1;
        }
    }
}

/// Dominant points of the Picard lattice with basis coordinates up to
/// `bound`.
pub fn theta_box(sym: &Symmetric, bound: i64) -> Vec<Weight> {
    let r = sym.lattice().pic_rank();
    let mut out = Vec::new();
    let mut counters = vec![0i64; r];
    loop {
        out.push(sym.lattice().weight_from_theta(&counters));
        let mut idx = 0;
        loop {
            if idx == r {
                out.sort();
                out.dedup();
                return out;
            }
            counters[idx] += 1;
            if counters[idx] <= bound {
                break;
            }
            counters[idx] = 0;
            idx += 1;
        }
    }
}

/// Family cardinality equals the module dimension and the endpoint multiset
/// equals the exact character, over the given shapes.
pub fn check_family_counts(rs: &RootSystem, shapes: &[Weight]) -> Result<Check> {
    let mut failures = Vec::new();
    for lambda in shapes {
        let family = lspath::ls_paths(rs, lambda)?;
        let dim = rs.weyl_dim(lambda)?;
        if Int::from(family.len()) != dim {
            failures.push(format!("|family({lambda})| = {} ≠ {dim}", family.len()));
            continue;
        }
        let mut endpoints: BTreeMap<Weight, Int> = BTreeMap::new();
        for p in &family.realized {
            *endpoints.entry(p.endpoint()).or_insert_with(Int::zero) += 1;
        }
        let character = cartan::full_character(rs, lambda)?;
        if endpoints != character {
            failures.push(format!("endpoint multiset of {lambda} differs from the character"));
        }
    }
    Ok(summarize("family counts and characters", shapes.len(), failures))
}

/// The chain construction and the operator closure produce the same path
/// sets.
pub fn check_two_definitions(rs: &RootSystem, shapes: &[Weight]) -> Result<Check> {
    let methods = path_methods();
    let mut failures = Vec::new();
    for lambda in shapes {
        let results = methods
            .iter()
            .map(|m| m.enumerate(rs, lambda))
            .collect::<Result<Vec<_>>>()?;
        if results.windows(2).any(|w| w[0] != w[1]) {
            failures.push(format!("constructions disagree at {lambda}"));
        }
    }
    Ok(summarize("two-definition agreement", shapes.len(), failures))
}

/// gcds along all maximal chains between comparable pairs agree.
pub fn check_bond_chains(rs: &RootSystem, shapes: &[Weight]) -> Result<Check> {
    let mut pairs = 0usize;
    let mut failures = Vec::new();
    for lambda in shapes.iter().filter(|l| !l.is_zero()) {
        let poset = lspath::bonds_build(rs, lambda)?;
        for x in 0..poset.len() {
            for y in 0..poset.len() {
                if !poset.less(x, y) {
                    continue;
                }
                pairs += 1;
                let gcds = poset.chain_gcds(x, y);
                if gcds.len() != 1 || gcds.iter().next().copied() != poset.bond(x, y) {
                    failures.push(format!("chain gcds differ in the poset of {lambda}"));
                }
            }
        }
    }
    Ok(summarize("bond gcd chain independence", pairs, failures))
}

/// The registered tensor engines agree on every pair of the given shapes.
pub fn check_tensor_engines(rs: &RootSystem, shapes: &[Weight]) -> Result<Check> {
    let engines = prv::tensor_engines();
    let mut failures = Vec::new();
    let mut cases = 0usize;
    for lambda in shapes {
        for mu in shapes {
            cases += 1;
            let results = engines
                .iter()
                .map(|e| e.decompose(rs, lambda, mu))
                .collect::<Result<Vec<_>>>()?;
            if results.windows(2).any(|w| w[0] != w[1]) {
                failures.push(format!("engines disagree at {lambda} ⊗ {mu}"));
            }
        }
    }
    Ok(summarize("tensor engine agreement", cases, failures))
}

/// The structural involution identities, re-verified from the built tables.
pub fn check_involution_validity(sym: &Symmetric) -> Vec<Check> {
    let rs = sym.root_system();
    let table = sym.involution();
    let n = rs.rank();
    let mut checks = Vec::new();

    let squared = (0..n).all(|j| {
        let omega = rs.fundamental_weight(j);
        table.apply(&table.apply(&omega)) == omega
    });
    checks.push(Check::new("sigma squared is the identity", squared, String::new()));

    let form = (0..n).all(|i| {
        (0..n).all(|j| {
            let (a, b) = (rs.fundamental_weight(i), rs.fundamental_weight(j));
            rs.form(&table.apply(&a), &table.apply(&b)) == rs.form(&a, &b)
        })
    });
    checks.push(Check::new("sigma preserves the invariant form", form, String::new()));

    let mut moved = 0usize;
    let negativity = rs.positive_roots().all(|root| {
        let image = table.apply(&root.weight);
        if image == root.weight {
            return true;
        }
        moved += 1;
        let rc = rs.root_coords(&image);
        rc.iter().all(|c| !c.is_positive())
    });
    checks.push(Check::new(
        "sigma sends moved positive roots to negative roots",
        negativity,
        format!("{moved} moved positive roots"),
    ));

    let weights_ok = (0..n).filter(|&j| table.is_white(j)).all(|j| {
        table.apply(&rs.fundamental_weight(j)) == -&rs.fundamental_weight(table.sigma_bar()[j])
    });
    checks.push(Check::new("sigma negates paired fundamental weights", weights_ok, String::new()));

    let beta_ok = (0..n).filter(|&j| table.is_white(j)).all(|j| {
        let bar = table.sigma_bar()[j];
        let beta_of = |k: usize| -> Vec<i64> {
            (0..n)
                .map(|r| -table.sigma_simple_roots()[r][k] - ((r == table.sigma_bar()[k]) as i64))
                .collect()
        };
        let beta = beta_of(j);
        let supported = beta
            .iter()
            .enumerate()
            .all(|(r, &c)| if table.black().contains(&r) { c >= 0 } else { c == 0 });
        supported && beta == beta_of(bar)
    });
    checks.push(Check::new(
        "beta vectors are natural black combinations, symmetrically",
        beta_ok,
        String::new(),
    ));

    let c_ok = (0..n).all(|j| {
        let c = table.c_values()[j];
        let alpha = &rs.simple_root(j).weight;
        let image = table.apply(alpha);
        (0..=4).contains(&c)
            && ((c == 0) == (image == *alpha))
            && ((c == 4) == (image == -alpha))
            && rs.pairing(&image, alpha) == rat(2 - c)
    });
    checks.push(Check::new("c values characterize fixed and negated roots", c_ok, String::new()));

    checks
}

/// Every exceptional root pairs to 1 against its image.
pub fn check_exceptional_values(sym: &Symmetric) -> Check {
    let rs = sym.root_system();
    let table = sym.involution();
    let pass = table.exceptional_roots().iter().all(|&j| {
        let alpha = &rs.simple_root(j).weight;
        rs.pairing(&table.apply(alpha), alpha) == rat(1) && table.c_values()[j] == 1
    });
    Check::new(
        "exceptional roots pair to one",
        pass,
        format!("{} exceptional roots", table.exceptional_roots().len()),
    )
}

/// The pairing matrix of the spherical generators against the restricted
/// base is diagonal with entries matching the doubling pattern.
pub fn check_lattice_pairing(sym: &Symmetric) -> Check {
    let rs = sym.root_system();
    let lattice = sym.lattice();
    let restricted = sym.restricted();
    let mut pass = true;
    for (i, w) in lattice.omega_tilde().iter().enumerate() {
        for (j, alpha) in restricted.base().iter().enumerate() {
            let value = rs.pairing(w, alpha);
            let expected = if i == j { rat(lattice.c()[i]) } else { rat(0) };
            if value != expected {
                pass = false;
            }
        }
        let expected_c = if restricted.doubled()[i] { 2 } else { 1 };
        if lattice.c()[i] != expected_c {
            pass = false;
        }
    }
    Check::new(
        "spherical pairing matrix is diagonal",
        pass,
        format!("c = {:?}", lattice.c()),
    )
}

/// Box checks for the lattices: the Helgason-style criterion agrees with the
/// generated lattice, dominant members decompose naturally over the
/// generators, and restricted orbits stay inside ambient orbits.
pub fn check_lattice_boxes(sym: &Symmetric, bound: i64) -> Check {
    let rs = sym.root_system();
    let n = rs.rank();
    let mut pass = true;
    let mut details = Vec::new();

    let mut agreement = 0usize;
    for mu in signed_box(n, bound) {
        if sym.is_spherical(&mu) != sym.lattice().in_omega1(&mu) {
            pass = false;
            details.push(format!("criterion mismatch at {mu}"));
        } else if sym.is_spherical(&mu) {
            agreement += 1;
        }
    }

    // dominant spherical points are natural combinations of the generators
    let columns: Vec<Vec<crate::Rat>> = (0..n)
        .map(|r| sym.lattice().omega_tilde().iter().map(|w| w.coords()[r].clone()).collect())
        .collect();
    for mu in dominant_box(n, bound) {
        if !sym.lattice().in_omega1(&mu) {
            continue;
        }
        let ok = crate::linalg::solve(&columns, mu.coords())
            .map(|sol| sol.iter().all(|c| c.is_integer() && !c.is_negative()))
            .unwrap_or(false);
        if !ok {
            pass = false;
            details.push(format!("{mu} is not a natural combination of the generators"));
        }
    }

    // restricted orbits are subsets of ambient orbits on special points
    for eta in signed_box(n, bound) {
        if !eta.is_integral() || !sym.involution().is_special(&eta) {
            continue;
        }
        let ambient: BTreeSet<Weight> = rs.orbit(&eta).into_iter().collect();
        if !sym.restricted_orbit(&eta).iter().all(|p| ambient.contains(p)) {
            pass = false;
            details.push(format!("restricted orbit of {eta} escapes the ambient orbit"));
        }
    }

    Check::new(
        "lattice box sweeps",
        pass,
        if details.is_empty() {
            format!("{agreement} spherical points agree")
        } else {
            details.join("; ")
        },
    )
}

/// Dimension identities of the standard monomials over a basis-coordinate
/// box, across every orbit subset.
pub fn check_monomial_dimensions(sym: &Symmetric, theta_bound: i64) -> Result<Check> {
    let smt = StandardMonomials::new(sym)?;
    let ell = sym.restricted_rank();
    let mut cases = 0usize;
    let mut failures = Vec::new();
    for lambda in theta_box(sym, theta_bound) {
        for mask in 0..(1u32 << ell) {
            let orbit_set: BTreeSet<usize> = (0..ell).filter(|i| mask & (1 << i) != 0).collect();
            let report = smt.verify_dimension(&lambda, &orbit_set)?;
            cases += 1;
            if !report.pass {
                failures.push(format!(
                    "{} with orbit set {:?}: {} ≠ {}",
                    lambda, report.orbit_set, report.standard_count, report.expected
                ));
            }
        }
    }
    Ok(summarize("standard monomial dimensions", cases, failures))
}

/// Every admissible triple in the dominant spherical box receives a verified
/// witness.
pub fn check_witness_sweep(sym: &Symmetric, theta_bound: i64) -> Result<Check> {
    let box_points = prv::omega1_plus_box(sym, theta_bound);
    let mut cases = 0usize;
    let mut failures = Vec::new();
    for nu in &box_points {
        for lambda in &box_points {
            for mu in &box_points {
                if !sym.leq_sigma(nu, &(lambda + mu)) {
                    continue;
                }
                cases += 1;
                if let Err(e) = prv::prv_witness(sym, nu, lambda, mu) {
                    failures.push(format!("({nu}; {lambda}, {mu}): {e}"));
                }
            }
        }
    }
    Ok(summarize("witness sweep", cases, failures))
}

fn summarize(name: &str, cases: usize, failures: Vec<String>) -> Check {
    if failures.is_empty() {
        Check::new(name, true, format!("{cases} cases"))
    } else {
        let mut detail = failures[..failures.len().min(3)].join("; ");
        if failures.len() > 3 {
            detail.push_str(&format!(" (+{} more)", failures.len() - 3));
        }
        Check::new(name, false, detail)
    }
}

/// The per-diagram battery run by the command-line driver.
pub fn preset_suite(sym: &Symmetric, theta_bound: i64, box_bound: i64) -> Result<Vec<Check>> {
    let rs = sym.root_system();
    let shapes = theta_box(sym, theta_bound);
    let mut checks = check_involution_validity(sym);
    checks.push(check_exceptional_values(sym));
    checks.push(check_lattice_pairing(sym));
    checks.push(check_lattice_boxes(sym, box_bound));
    checks.push(check_family_counts(rs, &shapes)?);
    checks.push(check_two_definitions(rs, &shapes)?);
    checks.push(check_bond_chains(rs, &shapes)?);
    let small: Vec<Weight> = theta_box(sym, theta_bound.min(1));
    checks.push(check_tensor_engines(rs, &small)?);
    checks.push(check_monomial_dimensions(sym, theta_bound)?);
    // the sweep is cubic in the box, so it gets its own ceiling
    checks.push(check_witness_sweep(sym, theta_bound.min(2))?);
    Ok(checks)
}
