//! Tensor product decomposition and PRV witnesses.
//!
//! Two interchangeable decomposition engines sit behind [`TensorEngine`]:
//! the path-model product rule over the family of the second factor, and
//! exact character arithmetic. They must agree everywhere; the sweeps hold
//! them to it. On top of the path rule sits the witness search for the
//! relative PRV statement over the spherical lattice.

use std::collections::BTreeSet;

use num::{One, Zero};

use crate::cartan::{self, RootSystem, Weight, WeylElement};
use crate::lspath::{self, Path};
use crate::satake::Symmetric;
use crate::{Error, Int, Result};

/// A named tensor decomposition strategy.
pub trait TensorEngine: Sync {
    fn name(&self) -> &'static str;
    fn decompose(&self, rs: &RootSystem, lambda: &Weight, mu: &Weight)
        -> Result<Vec<(Weight, Int)>>;
}

/// Path-model product rule: count family members of the second shape whose
/// concatenation behind the straight first path stays dominant.
pub struct PathModelRule;

impl TensorEngine for PathModelRule {
    fn name(&self) -> &'static str {
        "paths"
    }

    fn decompose(
        &self,
        rs: &RootSystem,
        lambda: &Weight,
        mu: &Weight,
    ) -> Result<Vec<(Weight, Int)>> {
        tensor_decompose(rs, lambda, mu)
    }
}

/// Exact character convolution with iterated subtraction.
pub struct CharacterArithmetic;

impl TensorEngine for CharacterArithmetic {
    fn name(&self) -> &'static str {
        "characters"
    }

    fn decompose(
        &self,
        rs: &RootSystem,
        lambda: &Weight,
        mu: &Weight,
    ) -> Result<Vec<(Weight, Int)>> {
        cartan::decompose_product(rs, lambda, mu)
    }
}

/// The registered decomposition engines, selectable by name.
pub fn tensor_engines() -> Vec<Box<dyn TensorEngine>> {
    vec![Box::new(PathModelRule), Box::new(CharacterArithmetic)]
}

pub fn tensor_engine(name: &str) -> Option<Box<dyn TensorEngine>> {
    tensor_engines().into_iter().find(|e| e.name() == name)
}

/// Decomposes `V_λ ⊗ V_μ` by the path-model rule: the multiplicity of
/// `V_ν` counts the family members `η` of shape `μ` with `π_λ * η` dominant
/// and endpoint `ν`.
pub fn tensor_decompose(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
) -> Result<Vec<(Weight, Int)>> {
    if !lambda.is_integral() || !lambda.is_dominant() {
        return Err(Error::InvalidWeight(format!("{lambda} is not dominant integral")));
    }
    let head = Path::straight(lambda);
    let family = lspath::ls_paths(rs, mu)?;
    let mut counts: std::collections::BTreeMap<Weight, Int> = std::collections::BTreeMap::new();
    for eta in &family.realized {
        let joined = Path::concat(&[&head, eta]);
        if joined.is_dominant() {
            let entry = counts.entry(joined.endpoint()).or_insert_with(Int::zero);
            *entry += Int::one();
        }
    }
    Ok(counts.into_iter().collect())
}

/// Multiplicity of one component in the path-model decomposition.
pub fn tensor_multiplicity(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    nu: &Weight,
) -> Result<Int> {
    Ok(tensor_decompose(rs, lambda, mu)?
        .into_iter()
        .find(|(w, _)| w == nu)
        .map(|(_, m)| m)
        .unwrap_or_else(Int::zero))
}

/// The classical check: `ν = τ(λ) + ε(μ)`; when dominant, its module occurs
/// in the product. Returns the candidate and the verification flag.
pub fn prv_classical(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    tau: &WeylElement,
    epsilon: &WeylElement,
) -> Result<(Weight, bool)> {
    let nu = &tau.apply(lambda) + &epsilon.apply(mu);
    if !nu.is_dominant() {
        return Ok((nu, false));
    }
    let mult = tensor_multiplicity(rs, lambda, mu, &nu)?;
    Ok((nu, mult >= Int::one()))
}

/// The weight set `Ω_η` of the irreducible module of highest weight `η`
/// over the auxiliary group of the restricted system (its reduced part in
/// the non-reduced case), computed by the saturation characterization.
#[derive(Debug, Clone)]
pub struct RestrictedWeightSet {
    pub eta: Weight,
    /// Members ordered by decreasing dominance: increasing height of
    /// `η - ζ`, ties by coordinates.
    pub weights: Vec<Weight>,
}

impl RestrictedWeightSet {
    pub fn contains(&self, zeta: &Weight) -> bool {
        self.weights.contains(zeta)
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// Saturation: all `ζ ≡ η` mod the restricted root lattice whose
/// restricted-dominant representative is `≤_σ η`.
pub fn restricted_weight_set(sym: &Symmetric, eta: &Weight) -> Result<RestrictedWeightSet> {
    if !sym.in_omega1_plus(eta) {
        return Err(Error::InvalidWeight(format!("{eta} is not in the dominant spherical lattice")));
    }
    let rs = sym.root_system();
    let ell = sym.restricted_rank();
    let eta_height = rs.height(eta);
    let bounds: Vec<i64> = sym
        .restricted()
        .base()
        .iter()
        .map(|alpha| {
            num::ToPrimitive::to_i64(&(&eta_height / rs.height(alpha)).floor().to_integer())
                .expect("exponent bound overflow")
                .max(0)
        })
        .collect();
    let mut members: BTreeSet<Weight> = BTreeSet::new();
    let mut counters = vec![0i64; ell];
    loop {
        let mut xi = eta.clone();
        for i in 0..ell {
            if counters[i] != 0 {
                xi = &xi - &sym.restricted().base()[i].scale(&crate::rat(counters[i]));
            }
        }
        if sym.restricted_dominant(&xi) {
            for point in sym.restricted_orbit(&xi) {
                members.insert(point);
            }
        }
        let mut idx = 0;
        loop {
            if idx == ell {
                let mut weights: Vec<Weight> = members.into_iter().collect();
                weights.sort_by_key(|z| (rs.height(&(eta - z)), z.coords().to_vec()));
                return Ok(RestrictedWeightSet { eta: eta.clone(), weights });
            }
            counters[idx] += 1;
            if counters[idx] <= bounds[idx] {
                break;
            }
            counters[idx] = 0;
            idx += 1;
        }
    }
}

/// One verified witness instance.
#[derive(Debug, Clone)]
pub struct Witness {
    pub nu: Weight,
    pub lambda: Weight,
    pub mu: Weight,
    pub lambda_prime: Weight,
    pub mu_prime: Weight,
    pub multiplicity: Int,
}

/// Constructive witness search: find `λ̄ ∈ Ω_λ`, `μ̄ ∈ Ω_μ` summing to `ν`,
/// take dominant representatives, and verify all clauses before returning.
/// The search runs by decreasing dominance of `λ̄`, so the witness closest
/// to the Cartan component is preferred.
pub fn prv_witness(
    sym: &Symmetric,
    nu: &Weight,
    lambda: &Weight,
    mu: &Weight,
) -> Result<Witness> {
    for (name, w) in [("ν", nu), ("λ", lambda), ("μ", mu)] {
        if !sym.in_omega1_plus(w) {
            return Err(Error::InvalidWeight(format!(
                "{name} = {w} is not in the dominant spherical lattice"
            )));
        }
    }
    if !sym.leq_sigma(nu, &(lambda + mu)) {
        return Err(Error::InvalidWeight(format!(
            "ν = {nu} is not below λ + μ in the σ-order"
        )));
    }
    let rs = sym.root_system();
    let omega_lambda = restricted_weight_set(sym, lambda)?;
    let omega_mu = restricted_weight_set(sym, mu)?;
    let mu_members: BTreeSet<&Weight> = omega_mu.weights.iter().collect();
    for lambda_bar in &omega_lambda.weights {
        let mu_bar = nu - lambda_bar;
        if !mu_members.contains(&mu_bar) {
            continue;
        }
        let lambda_prime = rs.dominantize(lambda_bar);
        let mu_prime = rs.dominantize(&mu_bar);
        if !sym.in_omega1_plus(&lambda_prime) || !sym.in_omega1_plus(&mu_prime) {
            continue;
        }
        if !sym.leq_sigma(&lambda_prime, lambda) || !sym.leq_sigma(&mu_prime, mu) {
            continue;
        }
        let multiplicity = tensor_multiplicity(rs, &lambda_prime, &mu_prime, nu)?;
        if multiplicity >= Int::one() {
            return Ok(Witness {
                nu: nu.clone(),
                lambda: lambda.clone(),
                mu: mu.clone(),
                lambda_prime,
                mu_prime,
                multiplicity,
            });
        }
    }
    Err(Error::VerificationFailed(format!(
        "no verified witness for ν = {nu} below λ = {lambda}, μ = {mu}"
    )))
}

/// The support side of the multiplication-map check for non-exceptional
/// varieties: every dominant `ν ≤_σ λ + μ` receives a verified witness.
#[derive(Debug, Clone)]
pub struct SurjectivitySupportReport {
    pub lambda: Weight,
    pub mu: Weight,
    pub instances: Vec<Witness>,
}

pub fn surjectivity_support_check(
    sym: &Symmetric,
    lambda: &Weight,
    mu: &Weight,
) -> Result<SurjectivitySupportReport> {
    if sym.involution().is_exceptional_variety() {
        return Err(Error::InvalidWeight(
            "the variety is exceptional; the support check requires a non-exceptional one".into(),
        ));
    }
    for (name, w) in [("λ", lambda), ("μ", mu)] {
        if !w.is_dominant() || !sym.lattice().in_pic(w) {
            return Err(Error::InvalidWeight(format!(
                "{name} = {w} is not in the dominant cone of the Picard lattice"
            )));
        }
    }
    let sum = lambda + mu;
    let mut instances = Vec::new();
    for (_, nu) in sym.dominant_below(&sum, &BTreeSet::new()) {
        instances.push(prv_witness(sym, &nu, lambda, mu)?);
    }
    instances.sort_by(|a, b| a.nu.cmp(&b.nu));
    Ok(SurjectivitySupportReport { lambda: lambda.clone(), mu: mu.clone(), instances })
}

/// All members of `Ω₁^+` with basis coordinates bounded by `bound`.
pub fn omega1_plus_box(sym: &Symmetric, bound: i64) -> Vec<Weight> {
    let r = sym.lattice().pic_rank();
    let mut out = Vec::new();
    let mut counters = vec![0i64; r];
    loop {
        let w = sym.lattice().weight_from_theta(&counters);
        if sym.in_omega1_plus(&w) && !out.contains(&w) {
            out.push(w);
        }
        let mut idx = 0;
        loop {
            if idx == r {
                out.sort();
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{build_root_system, CartanDatum};
    use crate::satake::{preset, Symmetric};
    use crate::{rat, Limits};

    fn system(name: &str) -> RootSystem {
        build_root_system(CartanDatum::from_name(name).unwrap(), Limits::default()).unwrap()
    }

    fn symmetric(name: &str) -> Symmetric {
        Symmetric::build(preset(name).unwrap(), Limits::default()).unwrap()
    }

    fn expect(items: &[(&[i64], i64)]) -> Vec<(Weight, Int)> {
        let mut v: Vec<(Weight, Int)> =
            items.iter().map(|(c, m)| (Weight::from_ints(c), Int::from(*m))).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    #[test]
    fn path_rule_matches_hand_computations() {
        let rs = system("A1");
        let two = Weight::from_ints(&[2]);
        assert_eq!(
            tensor_decompose(&rs, &two, &two).unwrap(),
            expect(&[(&[4], 1), (&[2], 1), (&[0], 1)])
        );
        let rs = system("A2");
        assert_eq!(
            tensor_decompose(&rs, &Weight::from_ints(&[1, 0]), &Weight::from_ints(&[0, 1]))
                .unwrap(),
            expect(&[(&[1, 1], 1), (&[0, 0], 1)])
        );
        // trivial factors on either side
        let lambda = Weight::from_ints(&[2, 1]);
        assert_eq!(
            tensor_decompose(&rs, &lambda, &Weight::zero(2)).unwrap(),
            expect(&[(&[2, 1], 1)])
        );
        assert_eq!(
            tensor_decompose(&rs, &Weight::zero(2), &lambda).unwrap(),
            expect(&[(&[2, 1], 1)])
        );
    }

    #[test]
    fn engines_agree_on_a2_box() {
        let rs = system("A2");
        let engines = tensor_engines();
        for a in 0..=1i64 {
            for b in 0..=1i64 {
                for c in 0..=1i64 {
                    for d in 0..=1i64 {
                        let l = Weight::from_ints(&[a, b]);
                        let m = Weight::from_ints(&[c, d]);
                        let results: Vec<_> =
                            engines.iter().map(|e| e.decompose(&rs, &l, &m).unwrap()).collect();
                        assert_eq!(results[0], results[1], "engines disagree at {l} ⊗ {m}");
                    }
                }
            }
        }
    }

    #[test]
    fn classical_prv_examples() {
        let rs = system("A1");
        let two = Weight::from_ints(&[2]);
        let e = rs.identity_element();
        let s = rs.simple_reflection(0);
        let (nu, ok) = prv_classical(&rs, &two, &two, &e, &e).unwrap();
        assert_eq!(nu, Weight::from_ints(&[4]));
        assert!(ok);
        let (nu, ok) = prv_classical(&rs, &two, &two, &e, &s).unwrap();
        assert_eq!(nu, Weight::zero(1));
        assert!(ok);

        let rs = system("A2");
        let w0 = rs.longest_element(&[0, 1]);
        let (nu, ok) =
            prv_classical(&rs, &Weight::from_ints(&[1, 0]), &Weight::from_ints(&[0, 1]), &rs.identity_element(), &w0)
                .unwrap();
        assert_eq!(nu, Weight::zero(2));
        assert!(ok);
    }

    #[test]
    fn restricted_weight_sets_for_split_a1() {
        let sym = symmetric("A1-split");
        let set = restricted_weight_set(&sym, &Weight::from_ints(&[2])).unwrap();
        assert_eq!(set.weights.len(), 2);
        assert!(set.contains(&Weight::from_ints(&[2])));
        assert!(set.contains(&Weight::from_ints(&[-2])));
        // highest weight comes first in the dominance order
        assert_eq!(set.weights[0], Weight::from_ints(&[2]));
        assert!(restricted_weight_set(&sym, &Weight::from_ints(&[1])).is_err());
    }

    #[test]
    fn saturation_matches_character_support_over_the_reduced_part() {
        // the auxiliary system is the reduced part of the restricted system;
        // the saturation set must be the support of the exact character there
        for name in ["A1-split", "B3-l1", "A2-swap"] {
            let sym = symmetric(name);
            let rs = sym.root_system();
            let aux_datum = CartanDatum::from_matrix(sym.restricted().cartan_matrix().clone())
                .expect("restricted Cartan matrix is of finite type");
            let aux = build_root_system(aux_datum, Limits::default()).unwrap();
            for eta in omega1_plus_box(&sym, 2) {
                let set = restricted_weight_set(&sym, &eta).unwrap();
                // coordinates of η against the restricted coroots
                let to_aux = |w: &Weight| {
                    Weight::new(
                        sym.restricted()
                            .base()
                            .iter()
                            .map(|alpha| rs.pairing(w, alpha))
                            .collect(),
                    )
                };
                let support = cartan::full_character(&aux, &to_aux(&eta)).unwrap();
                let mapped: BTreeSet<Weight> = set.weights.iter().map(&to_aux).collect();
                let expected: BTreeSet<Weight> = support.keys().cloned().collect();
                assert_eq!(mapped, expected, "saturation mismatch for {name} at {eta}");
                // the coordinate map is injective on the special lattice here
                assert_eq!(mapped.len(), set.weights.len(), "{name} at {eta}");
            }
        }
    }

    #[test]
    fn ambient_and_restricted_representatives_agree_on_special_points() {
        for name in ["A1-split", "B3-l1", "A2-swap", "B2-split"] {
            let sym = symmetric(name);
            let rs = sym.root_system();
            for eta in omega1_plus_box(&sym, 2) {
                for point in sym.restricted_orbit(&eta) {
                    assert_eq!(
                        rs.dominantize(&point),
                        sym.restricted_dominantize(&point),
                        "representatives differ for {name} at {point}"
                    );
                }
            }
        }
    }

    #[test]
    fn cartan_component_witness() {
        let sym = symmetric("B3-l1");
        let lambda = Weight::from_ints(&[0, 1, 0]);
        let mu = Weight::from_ints(&[0, 2, 0]);
        let nu = &lambda + &mu;
        let w = prv_witness(&sym, &nu, &lambda, &mu).unwrap();
        assert_eq!(w.lambda_prime, lambda);
        assert_eq!(w.mu_prime, mu);
    }

    #[test]
    fn split_a1_zero_witness() {
        let sym = symmetric("A1-split");
        let two = Weight::from_ints(&[2]);
        let w = prv_witness(&sym, &Weight::zero(1), &two, &two).unwrap();
        assert_eq!(w.lambda_prime, two);
        assert_eq!(w.mu_prime, two);
        assert!(w.multiplicity >= Int::one());
    }

    #[test]
    fn witness_preconditions_are_named() {
        let sym = symmetric("A1-split");
        let two = Weight::from_ints(&[2]);
        // ω is not spherical
        let err = prv_witness(&sym, &Weight::from_ints(&[1]), &two, &two).unwrap_err();
        assert!(err.to_string().contains("ν"));
        // 2ω is not below 2ω + 2ω − nothing: σ-order violation
        let err = prv_witness(&sym, &two, &Weight::zero(1), &Weight::zero(1)).unwrap_err();
        assert!(err.to_string().contains("σ-order"));
    }

    #[test]
    fn surjectivity_support_for_split_a1() {
        let sym = symmetric("A1-split");
        let two = Weight::from_ints(&[2]);
        let report = surjectivity_support_check(&sym, &two, &two).unwrap();
        let nus: Vec<&Weight> = report.instances.iter().map(|w| &w.nu).collect();
        assert_eq!(nus, vec![&Weight::zero(1), &Weight::from_ints(&[4])]);
        for w in &report.instances {
            assert_eq!(w.lambda_prime, two);
            assert_eq!(w.mu_prime, two);
        }
    }

    #[test]
    fn surjectivity_support_for_b3() {
        let sym = symmetric("B3-l1");
        let omega2 = Weight::from_ints(&[0, 1, 0]);
        let report = surjectivity_support_check(&sym, &omega2, &omega2).unwrap();
        // ν runs over 2ω₂, ω₂, 0
        assert_eq!(report.instances.len(), 3);
    }

    #[test]
    fn surjectivity_rejects_exceptional_varieties() {
        let sym = symmetric("A2-swap");
        let rho = Weight::from_ints(&[1, 1]);
        assert!(surjectivity_support_check(&sym, &rho, &rho).is_err());
    }

    #[test]
    fn omega1_box_contents() {
        let sym = symmetric("A1-split");
        assert_eq!(
            omega1_plus_box(&sym, 2),
            vec![Weight::zero(1), Weight::from_ints(&[2]), Weight::from_ints(&[4])]
        );
        // the exceptional variety has more dominant Picard points than
        // spherical ones
        let sym = symmetric("A2-swap");
        let box_points = omega1_plus_box(&sym, 2);
        assert!(box_points.iter().all(|w| sym.is_spherical(w)));
        assert!(box_points.contains(&Weight::from_ints(&[1, 1])));
        assert!(!box_points.contains(&Weight::from_ints(&[1, 0])));
    }

    #[test]
    fn tensor_rejects_bad_inputs() {
        let rs = system("A2");
        assert!(tensor_decompose(&rs, &Weight::from_ints(&[-1, 0]), &Weight::zero(2)).is_err());
        let half = Weight::new(vec![rat(1) / rat(2), rat(0)]);
        assert!(tensor_decompose(&rs, &Weight::zero(2), &half).is_err());
    }
}
