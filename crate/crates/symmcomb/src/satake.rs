//! Involutions of root systems from Satake diagrams.
//!
//! A Satake diagram is a Dynkin diagram with black nodes (simple roots fixed
//! by the involution) and arrows (an involutive pairing of the white nodes).
//! The induced involution acts as `σ = -w_{Δ₀} ∘ σ̄` on white simple roots
//! and as the identity on black ones. From it we compute the restricted root
//! system, the lattice of spherical weights, the Picard lattice of the
//! wonderful compactification with its distinguished basis, the order
//! `≤_σ`, and section-space dimensions.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num::{Signed, ToPrimitive, Zero};

use crate::cartan::{build_root_system, CartanDatum, RootSystem, Weight, WeylElement};
use crate::linalg::{self, Lattice};
use crate::{rat, Error, Int, Limits, Rat, Result};

/// A Dynkin diagram decorated with black nodes and arrows.
#[derive(Debug, Clone)]
pub struct SatakeDiagram {
    pub datum: CartanDatum,
    /// Indices of black simple roots (0-based).
    pub black: BTreeSet<usize>,
    /// Involutive pairing on white indices; fixed whites are omitted.
    pub arrows: Vec<(usize, usize)>,
}

impl SatakeDiagram {
    pub fn new(
        datum: CartanDatum,
        black: impl IntoIterator<Item = usize>,
        arrows: impl IntoIterator<Item = (usize, usize)>,
    ) -> SatakeDiagram {
        SatakeDiagram {
            datum,
            black: black.into_iter().collect(),
            arrows: arrows.into_iter().collect(),
        }
    }

    pub fn split(datum: CartanDatum) -> SatakeDiagram {
        SatakeDiagram::new(datum, [], [])
    }

    /// The index involution σ̄ (identity on black nodes), after validating
    /// the diagram structure.
    fn sigma_bar(&self) -> Result<Vec<usize>> {
        let n = self.datum.rank();
        for &b in &self.black {
            if b >= n {
                return Err(Error::InvalidSatake(format!("black index {} out of range", b + 1)));
            }
        }
        let mut bar: Vec<usize> = (0..n).collect();
        let mut touched = BTreeSet::new();
        for &(i, j) in &self.arrows {
            if i >= n || j >= n {
                return Err(Error::InvalidSatake(format!(
                    "arrow ({}, {}) out of range",
                    i + 1,
                    j + 1
                )));
            }
            if self.black.contains(&i) || self.black.contains(&j) {
                return Err(Error::InvalidSatake(format!(
                    "arrow ({}, {}) touches a black node",
                    i + 1,
                    j + 1
                )));
            }
            if !touched.insert(i) || (i != j && !touched.insert(j)) {
                return Err(Error::InvalidSatake(format!(
                    "node {} appears in more than one arrow",
                    i + 1
                )));
            }
            bar[i] = j;
            bar[j] = i;
        }
        Ok(bar)
    }
}

/// The computed action of the involution on the weight lattice.
#[derive(Debug, Clone)]
pub struct InvolutionTable {
    /// Action on fundamental-weight coordinates.
    sigma_weights: Vec<Vec<i64>>,
    /// `σ(α_j)` in simple-root coordinates, one column per simple root.
    sigma_roots: Vec<Vec<i64>>,
    /// The index involution σ̄ extended by the identity on black nodes.
    sigma_bar: Vec<usize>,
    black: BTreeSet<usize>,
    /// Chosen white representatives with pairwise distinct `α - σ(α)`,
    /// lexicographically least per class, in increasing order.
    representatives: Vec<usize>,
    exceptional: Vec<usize>,
    /// `c_α = 2 - ⟨σ(α), α^∨⟩` per simple root.
    c_values: Vec<i64>,
    longest_black: WeylElement,
}

impl InvolutionTable {
    pub fn sigma_weight_matrix(&self) -> &Vec<Vec<i64>> {
        &self.sigma_weights
    }

    pub fn sigma_simple_roots(&self) -> &Vec<Vec<i64>> {
        &self.sigma_roots
    }

    pub fn sigma_bar(&self) -> &[usize] {
        &self.sigma_bar
    }

    pub fn black(&self) -> &BTreeSet<usize> {
        &self.black
    }

    pub fn is_white(&self, i: usize) -> bool {
        !self.black.contains(&i)
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn restricted_rank(&self) -> usize {
        self.representatives.len()
    }

    pub fn exceptional_roots(&self) -> &[usize] {
        &self.exceptional
    }

    pub fn is_exceptional_variety(&self) -> bool {
        !self.exceptional.is_empty()
    }

    pub fn c_values(&self) -> &[i64] {
        &self.c_values
    }

    pub fn longest_black_element(&self) -> &WeylElement {
        &self.longest_black
    }

    pub fn apply(&self, mu: &Weight) -> Weight {
        let coords = self
            .sigma_weights
            .iter()
            .map(|row| row.iter().zip(mu.coords()).map(|(&m, c)| c * rat(m)).sum())
            .collect();
        Weight::new(coords)
    }

    /// `σ(μ) = -μ`.
    pub fn is_special(&self, mu: &Weight) -> bool {
        self.apply(mu) == -mu
    }

    /// `α̃ = α - σ(α)` for the i-th simple root, in root coordinates.
    fn restricted_simple_rc(&self, i: usize) -> Vec<i64> {
        let n = self.sigma_bar.len();
        (0..n).map(|r| (r == i) as i64 - self.sigma_roots[r][i]).collect()
    }
}

/// Builds the involution from a diagram, validating every structural
/// property; failures are reported as "not a valid Satake diagram".
pub fn build_involution(rs: &RootSystem, diagram: &SatakeDiagram) -> Result<InvolutionTable> {
    let n = rs.rank();
    let sigma_bar = diagram.sigma_bar()?;
    let black_vec: Vec<usize> = diagram.black.iter().copied().collect();
    let longest_black = rs.longest_element(&black_vec);

    // column j = σ(α_j) in simple-root coordinates
    let mut sigma_roots = vec![vec![0i64; n]; n];
    for j in 0..n {
        if diagram.black.contains(&j) {
            sigma_roots[j][j] = 1;
        } else {
            let mut e = vec![0i64; n];
            e[sigma_bar[j]] = 1;
            let image = apply_mat(longest_black.root_matrix(), &e);
            for r in 0..n {
                sigma_roots[r][j] = -image[r];
            }
        }
    }

    // involution
    let square = mat_mul(&sigma_roots, &sigma_roots);
    for i in 0..n {
        for j in 0..n {
            if square[i][j] != (i == j) as i64 {
                return Err(Error::InvalidSatake("induced map is not an involution".into()));
            }
        }
    }

    // form preservation on the simple roots
    let sigma_images: Vec<Weight> = (0..n)
        .map(|j| {
            let col: Vec<i64> = (0..n).map(|r| sigma_roots[r][j]).collect();
            rs.weight_from_root_coords_int(&col)
        })
        .collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = rs.form(&sigma_images[i], &sigma_images[j]);
            let rhs = rs.form(&rs.simple_root(i).weight, &rs.simple_root(j).weight);
            if lhs != rhs {
                return Err(Error::InvalidSatake("induced map does not preserve the form".into()));
            }
        }
    }

    // σ permutes the roots, and sends moved positive roots to negative ones
    for root in rs.roots() {
        let image = apply_mat(&sigma_roots, &root.root_coords);
        let Some(image_root) = rs.root_with_coords(&image) else {
            return Err(Error::InvalidSatake("induced map does not permute the roots".into()));
        };
        if root.positive && image != root.root_coords && image_root.positive {
            return Err(Error::InvalidSatake(format!(
                "σ sends the moved positive root {:?} to a positive root",
                root.root_coords
            )));
        }
    }

    // action on fundamental-weight coordinates must be integral
    let sigma_rat: Vec<Vec<Rat>> =
        sigma_roots.iter().map(|row| row.iter().map(|&x| rat(x)).collect()).collect();
    let cartan_rat: Vec<Vec<Rat>> = rs
        .datum()
        .matrix()
        .iter()
        .map(|row| row.iter().map(|&x| rat(x)).collect())
        .collect();
    let cartan_inv = linalg::inverse(&cartan_rat).expect("finite type matrix is invertible");
    let prod = linalg::mat_mul(&cartan_rat, &linalg::mat_mul(&sigma_rat, &cartan_inv));
    let mut sigma_weights = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            if !prod[i][j].is_integer() {
                return Err(Error::InvalidSatake("σ does not preserve the weight lattice".into()));
            }
            sigma_weights[i][j] = prod[i][j].to_integer().to_i64().expect("σ entry overflow");
        }
    }

    let table_probe = InvolutionTable {
        sigma_weights,
        sigma_roots,
        sigma_bar: sigma_bar.clone(),
        black: diagram.black.clone(),
        representatives: Vec::new(),
        exceptional: Vec::new(),
        c_values: Vec::new(),
        longest_black,
    };

    // σ(ω_α) = -ω_{σ̄(α)} for white α
    for j in 0..n {
        if table_probe.is_white(j) {
            let image = table_probe.apply(&rs.fundamental_weight(j));
            if image != -&rs.fundamental_weight(sigma_bar[j]) {
                return Err(Error::InvalidSatake(format!(
                    "σ(ω_{}) is not -ω_{}",
                    j + 1,
                    sigma_bar[j] + 1
                )));
            }
        }
    }

    // β_α = -σ(α) - σ̄(α) must be a non-negative combination of black roots,
    // symmetric under σ̄
    let mut betas: Vec<Vec<i64>> = Vec::new();
    for j in 0..n {
        let mut beta = vec![0i64; n];
        if table_probe.is_white(j) {
            for r in 0..n {
                beta[r] = -table_probe.sigma_roots[r][j] - ((r == sigma_bar[j]) as i64);
            }
            for (r, &coefficient) in beta.iter().enumerate() {
                let ok = if diagram.black.contains(&r) { coefficient >= 0 } else { coefficient == 0 };
                if !ok {
                    return Err(Error::InvalidSatake(format!(
                        "β for node {} is not a non-negative combination of black roots",
                        j + 1
                    )));
                }
            }
        }
        betas.push(beta);
    }
    for j in 0..n {
        if table_probe.is_white(j) && betas[j] != betas[sigma_bar[j]] {
            return Err(Error::InvalidSatake(format!("β is not σ̄-symmetric at node {}", j + 1)));
        }
    }

    // c_α = 2 - ⟨σ(α), α^∨⟩ with its characterizing values
    let mut c_values = Vec::with_capacity(n);
    for j in 0..n {
        let pairing = rs.pairing(&sigma_images[j], &rs.simple_root(j).weight);
        debug_assert!(pairing.is_integer());
        let c = 2 - pairing.to_integer().to_i64().expect("pairing overflow");
        if !(0..=4).contains(&c) {
            return Err(Error::InvalidSatake(format!("c value {c} out of range at node {}", j + 1)));
        }
        let fixed = sigma_images[j] == rs.simple_root(j).weight;
        let negated = sigma_images[j] == -&rs.simple_root(j).weight;
        if (c == 0) != fixed || (c == 4) != negated {
            return Err(Error::InvalidSatake(format!(
                "c value {c} inconsistent with σ(α_{})",
                j + 1
            )));
        }
        c_values.push(c);
    }

    // exceptional roots: moved by σ̄ and not orthogonal to their image
    let mut exceptional = Vec::new();
    for j in 0..n {
        if table_probe.is_white(j)
            && sigma_bar[j] != j
            && !rs.form(&rs.simple_root(j).weight, &sigma_images[j]).is_zero()
        {
            if rs.pairing(&sigma_images[j], &rs.simple_root(j).weight) != rat(1) {
                return Err(Error::InvalidSatake(format!(
                    "exceptional root {} violates ⟨σ(α), α^∨⟩ = 1",
                    j + 1
                )));
            }
            exceptional.push(j);
        }
    }

    // representatives: lexicographically least white index per restricted class
    let mut seen: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    let mut representatives = Vec::new();
    for j in 0..n {
        if table_probe.is_white(j) {
            let tilde = table_probe.restricted_simple_rc(j);
            if let std::collections::btree_map::Entry::Vacant(slot) = seen.entry(tilde) {
                slot.insert(j);
                representatives.push(j);
            }
        }
    }
    if representatives.is_empty() {
        return Err(Error::InvalidSatake("all nodes are black, the involution is trivial".into()));
    }

    Ok(InvolutionTable { representatives, exceptional, c_values, ..table_probe })
}

fn apply_mat(mat: &[Vec<i64>], v: &[i64]) -> Vec<i64> {
    mat.iter().map(|row| row.iter().zip(v).map(|(m, x)| m * x).sum()).collect()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// The restricted root system `Φ̃ = {α - σ(α) ≠ 0}` with its base, the
/// doubling pattern, and the type classification.
#[derive(Debug, Clone)]
pub struct RestrictedData {
    /// Restricted roots with multiplicities, keyed by root coordinates.
    multiplicities: BTreeMap<Vec<i64>, usize>,
    /// The base `Δ̃ = {α̃_1, …, α̃_ℓ}` as ambient weights.
    base: Vec<Weight>,
    base_rc: Vec<Vec<i64>>,
    /// Whether `2α̃_i ∈ Φ̃`, per base element.
    doubled: Vec<bool>,
    reduced: bool,
    type_name: String,
    /// Pairings `⟨α̃_j, α̃_i^∨⟩` of the base.
    cartan: Vec<Vec<i64>>,
}

impl RestrictedData {
    pub fn rank(&self) -> usize {
        self.base.len()
    }

    pub fn base(&self) -> &[Weight] {
        &self.base
    }

    pub fn base_root_coords(&self) -> &[Vec<i64>] {
        &self.base_rc
    }

    pub fn doubled(&self) -> &[bool] {
        &self.doubled
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Name of the restricted type, e.g. `"A2"` or `"BC1"`.
    pub fn type_name(&self) -> &str {
        &self.type_name
    }

    pub fn roots_with_multiplicities(&self) -> &BTreeMap<Vec<i64>, usize> {
        &self.multiplicities
    }

    /// Cartan matrix of the base under the ambient form.
    pub fn cartan_matrix(&self) -> &Vec<Vec<i64>> {
        &self.cartan
    }

    pub fn contains_rc(&self, rc: &[i64]) -> bool {
        self.multiplicities.contains_key(rc)
    }
}

/// Computes the restricted root system of a validated involution.
pub fn restricted_system(rs: &RootSystem, table: &InvolutionTable) -> Result<RestrictedData> {
    let mut multiplicities: BTreeMap<Vec<i64>, usize> = BTreeMap::new();
    for root in rs.roots() {
        let image = apply_mat(table.sigma_simple_roots(), &root.root_coords);
        let tilde: Vec<i64> = root.root_coords.iter().zip(&image).map(|(a, b)| a - b).collect();
        if tilde.iter().any(|&x| x != 0) {
            *multiplicities.entry(tilde).or_insert(0) += 1;
        }
    }

    let base_rc: Vec<Vec<i64>> = table
        .representatives()
        .iter()
        .map(|&i| table.restricted_simple_rc(i))
        .collect();
    let base: Vec<Weight> = base_rc.iter().map(|rc| rs.weight_from_root_coords_int(rc)).collect();

    // every restricted root must be a signed natural combination of the base
    let columns: Vec<Vec<Rat>> = (0..rs.rank())
        .map(|r| base_rc.iter().map(|rc| rat(rc[r])).collect())
        .collect();
    for rc in multiplicities.keys() {
        let target: Vec<Rat> = rc.iter().map(|&x| rat(x)).collect();
        let combo = linalg::solve(&columns, &target).ok_or_else(|| {
            Error::Inconsistent(format!("restricted root {rc:?} outside the span of the base"))
        })?;
        let nonneg = combo.iter().all(|c| c.is_integer() && !c.is_negative());
        let nonpos = combo.iter().all(|c| c.is_integer() && !c.is_positive());
        if !(nonneg || nonpos) {
            return Err(Error::Inconsistent(format!(
                "restricted root {rc:?} is not a signed natural combination of the base"
            )));
        }
    }

    let doubled: Vec<bool> = base_rc
        .iter()
        .map(|rc| {
            let twice: Vec<i64> = rc.iter().map(|x| 2 * x).collect();
            multiplicities.contains_key(&twice)
        })
        .collect();
    let reduced = doubled.iter().all(|&d| !d);

    // restricted Cartan matrix and component classification
    let ell = base.len();
    let mut cartan = vec![vec![0i64; ell]; ell];
    for i in 0..ell {
        for j in 0..ell {
            let p = rs.pairing(&base[j], &base[i]);
            if !p.is_integer() {
                return Err(Error::Inconsistent("restricted pairing is not integral".into()));
            }
            cartan[i][j] = p.to_integer().to_i64().expect("restricted pairing overflow");
        }
    }
    let type_name = classify_with_doubling(&cartan, &doubled)?;

    Ok(RestrictedData { multiplicities, base, base_rc, doubled, reduced, type_name, cartan })
}

/// Classifies a restricted Cartan matrix component-wise, naming non-reduced
/// components `BC_k`.
fn classify_with_doubling(cartan: &[Vec<i64>], doubled: &[bool]) -> Result<String> {
    let ell = cartan.len();
    if ell == 0 {
        return Ok("empty".into());
    }
    let mut component = vec![usize::MAX; ell];
    let mut count = 0;
    for start in 0..ell {
        if component[start] != usize::MAX {
            continue;
        }
        let mut queue = VecDeque::from([start]);
        component[start] = count;
        while let Some(i) = queue.pop_front() {
            for j in 0..ell {
                if i != j && cartan[i][j] != 0 && component[j] == usize::MAX {
                    component[j] = count;
                    queue.push_back(j);
                }
            }
        }
        count += 1;
    }
    let mut names = Vec::new();
    for c in 0..count {
        let nodes: Vec<usize> = (0..ell).filter(|&i| component[i] == c).collect();
        let k = nodes.len();
        let doubles = nodes.iter().filter(|&&i| doubled[i]).count();
        if doubles > 1 {
            return Err(Error::Inconsistent(
                "more than one doubled node in an irreducible restricted component".into(),
            ));
        }
        if doubles == 1 {
            names.push(format!("BC{k}"));
            continue;
        }
        let sub: Vec<Vec<i64>> = nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| cartan[i][j]).collect())
            .collect();
        names.push(
            classify_reduced(&sub)
                .ok_or_else(|| Error::Inconsistent("unrecognized reduced restricted component".into()))?,
        );
    }
    Ok(names.join("x"))
}

/// Matches an irreducible Cartan matrix against the finite types, up to a
/// simultaneous permutation of the nodes.
fn classify_reduced(matrix: &[Vec<i64>]) -> Option<String> {
    let k = matrix.len();
    let mut candidates = vec![format!("A{k}")];
    if k >= 2 {
        candidates.push(format!("B{k}"));
        candidates.push(format!("C{k}"));
    }
    if k >= 3 {
        candidates.push(format!("D{k}"));
    }
    if (6..=8).contains(&k) {
        candidates.push(format!("E{k}"));
    }
    if k == 4 {
        candidates.push("F4".into());
    }
    if k == 2 {
        candidates.push("G2".into());
    }
    for name in candidates {
        let Ok(datum) = CartanDatum::from_name(&name) else {
            continue;
        };
        if permutation_equivalent(matrix, datum.matrix()) {
            // canonical aliases for the low-rank coincidences
            return Some(match name.as_str() {
                "C2" => "B2".into(),
                "D3" => "A3".into(),
                other => other.into(),
            });
        }
    }
    None
}

fn permutation_equivalent(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let k = a.len();
    if b.len() != k {
        return false;
    }
    let mut perm: Vec<usize> = (0..k).collect();
    permute_search(&mut perm, 0, a, b)
}

fn permute_search(perm: &mut Vec<usize>, depth: usize, a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let k = perm.len();
    if depth == k {
        return true;
    }
    for i in depth..k {
        perm.swap(depth, i);
        let consistent = (0..=depth)
            .all(|r| a[r][depth] == b[perm[r]][perm[depth]] && a[depth][r] == b[perm[depth]][perm[r]]);
        if consistent && permute_search(perm, depth + 1, a, b) {
            perm.swap(depth, i);
            return true;
        }
        perm.swap(depth, i);
    }
    false
}

/// Generators of the spherical lattice `Ω₁`, the Picard lattice, and its
/// distinguished basis.
#[derive(Debug, Clone)]
pub struct SphericalLattice {
    omega_tilde: Vec<Weight>,
    c: Vec<i64>,
    pic_generators: Vec<Weight>,
    theta: Vec<Weight>,
    pic: Lattice,
    omega1: Lattice,
}

impl SphericalLattice {
    pub fn omega_tilde(&self) -> &[Weight] {
        &self.omega_tilde
    }

    /// The diagonal pairing values `⟨ω̃_i, α̃_i^∨⟩ ∈ {1, 2}`.
    pub fn c(&self) -> &[i64] {
        &self.c
    }

    pub fn pic_generators(&self) -> &[Weight] {
        &self.pic_generators
    }

    /// The basis `θ_1 … θ_r`: a ℤ-basis of the Picard lattice that is an
    /// ℕ-basis of its dominant cone.
    pub fn theta(&self) -> &[Weight] {
        &self.theta
    }

    pub fn pic_rank(&self) -> usize {
        self.theta.len()
    }

    pub fn in_pic(&self, mu: &Weight) -> bool {
        mu.to_int_coords().map(|v| self.pic.contains(&v)).unwrap_or(false)
    }

    pub fn in_omega1(&self, mu: &Weight) -> bool {
        mu.to_int_coords().map(|v| self.omega1.contains(&v)).unwrap_or(false)
    }

    /// Integer coordinates in the θ-basis, or `None` outside the lattice.
    pub fn theta_coordinates(&self, mu: &Weight) -> Option<Vec<Int>> {
        let columns: Vec<Vec<Rat>> = (0..mu.rank())
            .map(|r| self.theta.iter().map(|t| t.coords()[r].clone()).collect())
            .collect();
        let solution = linalg::solve(&columns, mu.coords())?;
        solution.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }

    pub fn weight_from_theta(&self, coords: &[i64]) -> Weight {
        let rank = self.theta.first().map(|t| t.rank()).unwrap_or(0);
        let mut out = Weight::zero(rank);
        for (t, &c) in self.theta.iter().zip(coords) {
            out = &out + &t.scale(&rat(c));
        }
        out
    }
}

/// Assigns the spherical generators by the three-case formula, assembles the
/// Picard lattice, and certifies a θ-basis over a dominant verification box.
pub fn spherical_lattice(
    rs: &RootSystem,
    table: &InvolutionTable,
    restricted: &RestrictedData,
    limits: &Limits,
) -> Result<SphericalLattice> {
    let n = rs.rank();
    let mut omega_tilde = Vec::new();
    for &i in table.representatives() {
        let bar = table.sigma_bar()[i];
        let sigma_alpha = rs.weight_from_root_coords_int(
            &(0..n).map(|r| table.sigma_simple_roots()[r][i]).collect::<Vec<_>>(),
        );
        let w = if bar != i {
            &rs.fundamental_weight(i) + &rs.fundamental_weight(bar)
        } else if sigma_alpha == -&rs.simple_root(i).weight {
            rs.fundamental_weight(i).scale(&rat(2))
        } else {
            rs.fundamental_weight(i)
        };
        omega_tilde.push(w);
    }

    // pairing matrix must be diagonal with the doubling pattern
    let mut c = Vec::new();
    for (i, w) in omega_tilde.iter().enumerate() {
        for (j, alpha) in restricted.base().iter().enumerate() {
            let coroot_pairing = rs.pairing(w, alpha);
            if i == j {
                let expected = if restricted.doubled()[i] { rat(2) } else { rat(1) };
                if coroot_pairing != expected {
                    return Err(Error::Inconsistent(format!(
                        "⟨ω̃_{}, α̃_{}^∨⟩ = {} instead of {}",
                        i + 1,
                        j + 1,
                        coroot_pairing,
                        expected
                    )));
                }
            } else if !coroot_pairing.is_zero() {
                return Err(Error::Inconsistent(format!(
                    "pairing matrix is not diagonal at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
        c.push(if restricted.doubled()[i] { 2 } else { 1 });
    }

    let mut pic_generators = omega_tilde.clone();
    for &j in table.exceptional_roots() {
        pic_generators.push(rs.fundamental_weight(j));
    }

    let int_coords = |w: &Weight| w.to_int_coords().expect("lattice generators are integral");
    let pic =
        Lattice::from_generators(n, &pic_generators.iter().map(int_coords).collect::<Vec<_>>());
    let omega1 =
        Lattice::from_generators(n, &omega_tilde.iter().map(int_coords).collect::<Vec<_>>());
    let rank = pic.rank();

    // candidate θ's of the three allowed shapes that lie in the lattice
    let mut candidates: Vec<Weight> = Vec::new();
    for j in 0..n {
        let one = rs.fundamental_weight(j);
        let bar = table.sigma_bar()[j];
        let mut shapes = vec![one.clone(), one.scale(&rat(2))];
        if bar != j {
            shapes.push(&one + &rs.fundamental_weight(bar));
        }
        for w in shapes {
            if pic.contains(&int_coords(&w)) && !candidates.contains(&w) {
                candidates.push(w);
            }
        }
    }

    // dominant lattice points of the verification box
    let box_points = dominant_box_points(rs, &pic, limits.lattice_box);

    let mut chosen: Vec<usize> = Vec::new();
    if search_theta(&candidates, rank, 0, &mut chosen, &pic, &box_points) {
        let theta: Vec<Weight> = chosen.iter().map(|&k| candidates[k].clone()).collect();
        return Ok(SphericalLattice { omega_tilde, c, pic_generators, theta, pic, omega1 });
    }
    Err(Error::Inconsistent(
        "no basis of the allowed shapes spans the dominant cone of the Picard lattice".into(),
    ))
}

fn dominant_box_points(rs: &RootSystem, pic: &Lattice, bound: i64) -> Vec<Weight> {
    let n = rs.rank();
    let mut points = Vec::new();
    let mut counters = vec![0i64; n];
    loop {
        let w = Weight::from_ints(&counters);
        if pic.contains(&w.to_int_coords().unwrap()) {
            points.push(w);
        }
        let mut idx = 0;
        loop {
            if idx == n {
                return points;
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

fn search_theta(
    candidates: &[Weight],
    rank: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    pic: &Lattice,
    box_points: &[Weight],
) -> bool {
    if chosen.len() == rank {
        return certifies_theta(candidates, chosen, pic, box_points);
    }
    for k in start..candidates.len() {
        chosen.push(k);
        if search_theta(candidates, rank, k + 1, chosen, pic, box_points) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// A subset certifies as θ-basis when it ℤ-spans the Picard lattice and
/// every dominant box point has non-negative integer coordinates in it.
fn certifies_theta(
    candidates: &[Weight],
    chosen: &[usize],
    pic: &Lattice,
    box_points: &[Weight],
) -> bool {
    let n = candidates[chosen[0]].rank();
    let vectors: Vec<Vec<Int>> =
        chosen.iter().map(|&k| candidates[k].to_int_coords().unwrap()).collect();
    if &Lattice::from_generators(n, &vectors) != pic {
        return false;
    }
    let columns: Vec<Vec<Rat>> = (0..n)
        .map(|r| chosen.iter().map(|&k| candidates[k].coords()[r].clone()).collect())
        .collect();
    for point in box_points {
        let Some(solution) = linalg::solve(&columns, point.coords()) else {
            return false;
        };
        if !solution.iter().all(|c| c.is_integer() && !c.is_negative()) {
            return false;
        }
    }
    true
}

/// The full combinatorial model of one symmetric variety: ambient root
/// system, involution, restricted system, and lattices. Immutable after
/// construction and safe to query concurrently.
#[derive(Debug, Clone)]
pub struct Symmetric {
    rs: RootSystem,
    diagram: SatakeDiagram,
    involution: InvolutionTable,
    restricted: RestrictedData,
    lattice: SphericalLattice,
}

impl Symmetric {
    pub fn build(diagram: SatakeDiagram, limits: Limits) -> Result<Symmetric> {
        let rs = build_root_system(diagram.datum.clone(), limits.clone())?;
        Symmetric::from_root_system(rs, diagram)
    }

    /// Builds on top of an already-constructed ambient root system; its
    /// datum must match the diagram's.
    pub fn from_root_system(rs: RootSystem, diagram: SatakeDiagram) -> Result<Symmetric> {
        if rs.datum() != &diagram.datum {
            return Err(Error::InvalidSatake("root system datum differs from the diagram".into()));
        }
        let limits = rs.limits().clone();
        let involution = build_involution(&rs, &diagram)?;
        let restricted = restricted_system(&rs, &involution)?;
        let lattice = spherical_lattice(&rs, &involution, &restricted, &limits)?;
        Ok(Symmetric { rs, diagram, involution, restricted, lattice })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn diagram(&self) -> &SatakeDiagram {
        &self.diagram
    }

    pub fn involution(&self) -> &InvolutionTable {
        &self.involution
    }

    pub fn restricted(&self) -> &RestrictedData {
        &self.restricted
    }

    pub fn lattice(&self) -> &SphericalLattice {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn restricted_rank(&self) -> usize {
        self.restricted.rank()
    }

    /// A weight is spherical when it is special and satisfies the
    /// integrality conditions against the restricted coroots.
    pub fn is_spherical(&self, mu: &Weight) -> bool {
        if !mu.is_integral() || !self.involution.is_special(mu) {
            return false;
        }
        self.restricted.base().iter().zip(self.restricted.doubled()).all(|(alpha, &doubled)| {
            let pairing = if doubled {
                self.rs.pairing(mu, &alpha.scale(&rat(2)))
            } else {
                self.rs.pairing(mu, alpha)
            };
            pairing.is_integer()
        })
    }

    /// Membership in `Ω₁^+`: spherical and dominant.
    pub fn in_omega1_plus(&self, mu: &Weight) -> bool {
        mu.is_dominant() && self.is_spherical(mu)
    }

    /// The unique expression `λ - μ = Σ a_i α̃_i`, if it exists with
    /// non-negative integers.
    pub fn sigma_order_coordinates(&self, mu: &Weight, lambda: &Weight) -> Option<Vec<Int>> {
        let diff = lambda - mu;
        let columns: Vec<Vec<Rat>> = (0..self.rank())
            .map(|r| self.restricted.base().iter().map(|a| a.coords()[r].clone()).collect())
            .collect();
        let combo = linalg::solve(&columns, diff.coords())?;
        combo
            .iter()
            .map(|c| (c.is_integer() && !c.is_negative()).then(|| c.to_integer()))
            .collect()
    }

    /// `μ ≤_σ λ`: the difference is a non-negative integer combination of
    /// the restricted base.
    pub fn leq_sigma(&self, mu: &Weight, lambda: &Weight) -> bool {
        self.sigma_order_coordinates(mu, lambda).is_some()
    }

    /// All dominant `μ ≤_σ λ` obtained without using the base elements in
    /// `skip`, together with the subtraction exponents.
    pub fn dominant_below(&self, lambda: &Weight, skip: &BTreeSet<usize>) -> Vec<(Vec<i64>, Weight)> {
        let ell = self.restricted.rank();
        let lambda_height = self.rs.height(lambda);
        let bounds: Vec<i64> = self
            .restricted
            .base()
            .iter()
            .enumerate()
            .map(|(i, alpha)| {
                if skip.contains(&i) {
                    0
                } else {
                    (&lambda_height / self.rs.height(alpha))
                        .floor()
                        .to_integer()
                        .to_i64()
                        .expect("exponent bound overflow")
                        .max(0)
                }
            })
            .collect();
        let mut out = Vec::new();
        let mut counters = vec![0i64; ell];
        loop {
            let mut mu = lambda.clone();
            for i in 0..ell {
                if counters[i] != 0 {
                    mu = &mu - &self.restricted.base()[i].scale(&rat(counters[i]));
                }
            }
            if mu.is_dominant() {
                out.push((counters.clone(), mu));
            }
            let mut idx = 0;
            loop {
                if idx == ell {
                    out.sort_by(|a, b| a.0.cmp(&b.0));
                    return out;
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

    /// Dimension of the section space of the line bundle attached to `λ`,
    /// with the itemized decomposition over dominant `μ ≤_σ λ`.
    pub fn section_dim(&self, lambda: &Weight) -> Result<(Int, Vec<(Weight, Int)>)> {
        if !self.lattice.in_pic(lambda) {
            return Err(Error::NotInLattice(format!("{lambda} is not in the Picard lattice")));
        }
        let mut items = Vec::new();
        let mut total = Int::zero();
        for (_, mu) in self.dominant_below(lambda, &BTreeSet::new()) {
            let dim = self.rs.weyl_dim(&mu)?;
            total += &dim;
            items.push((mu, dim));
        }
        items.sort_by(|a, b| b.0.cmp(&a.0));
        Ok((total, items))
    }

    /// Reflection in the i-th restricted simple root.
    pub fn restricted_reflect(&self, i: usize, mu: &Weight) -> Weight {
        self.rs.reflect_in(&self.restricted.base()[i], mu)
    }

    /// Is `μ` dominant for the restricted base?
    pub fn restricted_dominant(&self, mu: &Weight) -> bool {
        self.restricted.base().iter().all(|a| !self.rs.pairing(mu, a).is_negative())
    }

    /// Restricted-dominant representative under the restricted Weyl group.
    pub fn restricted_dominantize(&self, mu: &Weight) -> Weight {
        let mut current = mu.clone();
        loop {
            let Some(i) = (0..self.restricted.rank())
                .find(|&i| self.rs.pairing(&current, &self.restricted.base()[i]).is_negative())
            else {
                return current;
            };
            current = self.restricted_reflect(i, &current);
        }
    }

    /// Full restricted Weyl orbit, sorted.
    pub fn restricted_orbit(&self, mu: &Weight) -> Vec<Weight> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([mu.clone()]);
        seen.insert(mu.clone());
        while let Some(w) = queue.pop_front() {
            for i in 0..self.restricted.rank() {
                let r = self.restricted_reflect(i, &w);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        seen.into_iter().collect()
    }
}

impl fmt::Display for Symmetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} with black {:?}, restricted type {}",
            self.diagram.datum.name().unwrap_or("custom"),
            self.diagram.black.iter().map(|b| b + 1).collect::<Vec<_>>(),
            self.restricted.type_name()
        )
    }
}

/// Names of the shipped diagram catalog.
pub fn preset_names() -> Vec<&'static str> {
    vec!["A1-split", "A2-split", "B2-split", "A2-swap", "B3-l1", "B4-l1", "F4", "A1xA1-swap"]
}

/// Looks up a diagram preset by name.
pub fn preset(name: &str) -> Result<SatakeDiagram> {
    let datum = |t: &str| CartanDatum::from_name(t).expect("preset type");
    match name {
        "A1-split" => Ok(SatakeDiagram::split(datum("A1"))),
        "A2-split" => Ok(SatakeDiagram::split(datum("A2"))),
        "B2-split" => Ok(SatakeDiagram::split(datum("B2"))),
        "A2-swap" => Ok(SatakeDiagram::new(datum("A2"), [], [(0, 1)])),
        "B3-l1" => Ok(SatakeDiagram::new(datum("B3"), [0, 2], [])),
        "B4-l1" => Ok(SatakeDiagram::new(datum("B4"), [0, 2, 3], [])),
        // rank-one diagram, white node at the short end
        "F4" => Ok(SatakeDiagram::new(datum("F4"), [0, 1, 2], [])),
        "A1xA1-swap" => Ok(SatakeDiagram::new(datum("A1xA1"), [], [(0, 1)])),
        other => Err(Error::UnknownPreset(other.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn symmetric(name: &str) -> Symmetric {
        Symmetric::build(preset(name).unwrap(), Limits::default()).unwrap()
    }

    #[test]
    fn split_a2_is_minus_identity() {
        let sym = symmetric("A2-split");
        let t = sym.involution();
        for j in 0..2 {
            let col: Vec<i64> = (0..2).map(|r| t.sigma_simple_roots()[r][j]).collect();
            let mut expect = vec![0i64; 2];
            expect[j] = -1;
            assert_eq!(col, expect);
        }
        assert_eq!(t.restricted_rank(), 2);
        assert!(t.exceptional_roots().is_empty());
        assert_eq!(sym.restricted().type_name(), "A2");
        assert!(sym.restricted().is_reduced());
    }

    #[test]
    fn swap_a2_is_exceptional_bc1() {
        let sym = symmetric("A2-swap");
        let t = sym.involution();
        // σ(α1) = -α2
        let col: Vec<i64> = (0..2).map(|r| t.sigma_simple_roots()[r][0]).collect();
        assert_eq!(col, vec![0, -1]);
        assert_eq!(t.exceptional_roots(), &[0, 1]);
        assert_eq!(t.restricted_rank(), 1);
        assert_eq!(t.c_values(), &[1, 1]);
        assert_eq!(sym.restricted().type_name(), "BC1");
        // α̃1 = α1 + α2, and its double is restricted
        assert_eq!(sym.restricted().base_root_coords(), &[vec![1, 1]]);
        assert_eq!(sym.restricted().doubled(), &[true]);
    }

    #[test]
    fn b3_rank_one_family() {
        let sym = symmetric("B3-l1");
        let t = sym.involution();
        // σ(α2) = -(α1 + α2 + 2α3): the trailing coefficient is 2, not 1,
        // because w_{Δ0} = s1·s3 sends α2 = e2-e3 to e1+e3 = α1+α2+2α3
        let col: Vec<i64> = (0..3).map(|r| t.sigma_simple_roots()[r][1]).collect();
        assert_eq!(col, vec![-1, -1, -2]);
        assert_eq!(t.representatives(), &[1]);
        assert!(t.exceptional_roots().is_empty());
        assert_eq!(sym.restricted().type_name(), "BC1");
        assert_eq!(sym.restricted().base_root_coords(), &[vec![1, 2, 2]]);
    }

    #[test]
    fn preset_restricted_types() {
        for (name, expected, reduced) in [
            ("A1-split", "A1", true),
            ("A2-split", "A2", true),
            ("B2-split", "B2", true),
            ("A2-swap", "BC1", false),
            ("B3-l1", "BC1", false),
            ("B4-l1", "BC1", false),
            ("F4", "BC1", false),
            ("A1xA1-swap", "A1", true),
        ] {
            let sym = symmetric(name);
            assert_eq!(sym.restricted().type_name(), expected, "preset {name}");
            assert_eq!(sym.restricted().is_reduced(), reduced, "preset {name}");
        }
    }

    #[test]
    fn sphericity_examples() {
        let sym = symmetric("A1-split");
        assert!(!sym.is_spherical(&Weight::from_ints(&[1])));
        assert!(sym.is_spherical(&Weight::from_ints(&[2])));

        let sym = symmetric("B3-l1");
        assert!(sym.is_spherical(&Weight::from_ints(&[0, 1, 0])));
        assert!(!sym.is_spherical(&Weight::from_ints(&[1, 0, 0])));
    }

    #[test]
    fn lattice_generators() {
        let sym = symmetric("A1-split");
        assert_eq!(sym.lattice().omega_tilde(), &[Weight::from_ints(&[2])]);
        assert_eq!(sym.lattice().theta(), &[Weight::from_ints(&[2])]);
        assert_eq!(sym.lattice().c(), &[1]);

        let sym = symmetric("A2-swap");
        assert_eq!(sym.lattice().omega_tilde(), &[Weight::from_ints(&[1, 1])]);
        assert_eq!(sym.lattice().c(), &[2]);
        assert_eq!(
            sym.lattice().theta(),
            &[Weight::from_ints(&[1, 0]), Weight::from_ints(&[0, 1])]
        );

        let sym = symmetric("B3-l1");
        assert_eq!(sym.lattice().omega_tilde(), &[Weight::from_ints(&[0, 1, 0])]);
        assert_eq!(sym.lattice().theta(), &[Weight::from_ints(&[0, 1, 0])]);
        assert_eq!(sym.lattice().c(), &[2]);
    }

    #[test]
    fn sigma_order_examples() {
        let sym = symmetric("A1-split");
        let zero = Weight::zero(1);
        let two = Weight::from_ints(&[2]);
        let four = Weight::from_ints(&[4]);
        assert!(sym.leq_sigma(&four, &four));
        assert!(sym.leq_sigma(&zero, &four));
        assert!(!sym.leq_sigma(&two, &four));
    }

    #[test]
    fn section_dimensions() {
        let sym = symmetric("A1-split");
        let (total, items) = sym.section_dim(&Weight::from_ints(&[2])).unwrap();
        assert_eq!(total, Int::from(3));
        assert_eq!(items.len(), 1);
        let (total, items) = sym.section_dim(&Weight::from_ints(&[4])).unwrap();
        assert_eq!(total, Int::from(6));
        assert_eq!(items.len(), 2);
        let (total, _) = sym.section_dim(&Weight::zero(1)).unwrap();
        assert_eq!(total, Int::from(1));
        assert!(sym.section_dim(&Weight::from_ints(&[1])).is_err());
    }

    #[test]
    fn rejects_invalid_diagrams() {
        // arrow touching a black node
        let d = SatakeDiagram::new(CartanDatum::from_name("A2").unwrap(), [0], [(0, 1)]);
        assert!(matches!(Symmetric::build(d, Limits::default()), Err(Error::InvalidSatake(_))));
        // pairing nodes of different lengths breaks the form
        let d = SatakeDiagram::new(CartanDatum::from_name("B2").unwrap(), [], [(0, 1)]);
        assert!(matches!(Symmetric::build(d, Limits::default()), Err(Error::InvalidSatake(_))));
        // all-black diagram fixes every root
        let d = SatakeDiagram::new(CartanDatum::from_name("A2").unwrap(), [0, 1], []);
        assert!(Symmetric::build(d, Limits::default()).is_err());
    }

    #[test]
    fn f4_sigma_matches_direct_computation() {
        let sym = symmetric("F4");
        let t = sym.involution();
        // σ(α4) = -α4 - (α1 + 2α2 + 3α3)
        let col: Vec<i64> = (0..4).map(|r| t.sigma_simple_roots()[r][3]).collect();
        assert_eq!(col, vec![-1, -2, -3, -1]);
        assert_eq!(sym.lattice().omega_tilde(), &[Weight::from_ints(&[0, 0, 0, 1])]);
    }

    #[test]
    fn group_case_swap() {
        let sym = symmetric("A1xA1-swap");
        let t = sym.involution();
        assert!(t.exceptional_roots().is_empty());
        assert_eq!(sym.restricted().type_name(), "A1");
        assert_eq!(sym.lattice().omega_tilde(), &[Weight::from_ints(&[1, 1])]);
        assert_eq!(sym.lattice().c(), &[1]);
    }
}
