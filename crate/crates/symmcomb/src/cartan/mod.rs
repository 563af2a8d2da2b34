//! Root systems and Weyl groups over exact rational arithmetic.
//!
//! Weights are stored in fundamental-weight coordinates, roots additionally
//! carry their expansion in simple roots, and all invariant-form evaluations
//! go through the symmetrized Cartan matrix, so there is no floating point
//! anywhere. Weyl group elements are canonicalized by their action matrix.

mod chars;

pub use chars::{decompose_product, dominant_character, full_character};

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num::{One, Signed, ToPrimitive, Zero};

use crate::linalg::{self, RatMat};
use crate::{rat, Error, Int, Limits, Rat, Result};

/// A Cartan matrix together with its symmetrizers.
///
/// Entry `(i, j)` of the matrix is `⟨α_j, α_i^∨⟩`; the symmetrizers are
/// positive integers `d_i` making `d_i · C_ij` symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    matrix: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    name: Option<String>,
}

impl CartanDatum {
    /// Validates an explicit matrix/symmetrizer pair.
    pub fn new(matrix: Vec<Vec<i64>>, symmetrizers: Vec<i64>) -> Result<CartanDatum> {
        let n = matrix.len();
        if n == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        if matrix.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidCartan("matrix is not square".into()));
        }
        if symmetrizers.len() != n {
            return Err(Error::InvalidCartan("need one symmetrizer per row".into()));
        }
        if symmetrizers.iter().any(|&d| d <= 0) {
            return Err(Error::InvalidCartan("symmetrizers must be positive".into()));
        }
        for i in 0..n {
            if matrix[i][i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry ({i},{i}) is not 2")));
            }
            for j in 0..n {
                if i != j {
                    if matrix[i][j] > 0 {
                        return Err(Error::InvalidCartan(format!(
                            "off-diagonal entry ({i},{j}) is positive"
                        )));
                    }
                    if (matrix[i][j] == 0) != (matrix[j][i] == 0) {
                        return Err(Error::InvalidCartan(format!(
                            "zero pattern is not symmetric at ({i},{j})"
                        )));
                    }
                    if symmetrizers[i] * matrix[i][j] != symmetrizers[j] * matrix[j][i] {
                        return Err(Error::InvalidCartan(format!(
                            "symmetrizers do not symmetrize entry ({i},{j})"
                        )));
                    }
                }
            }
        }
        let sym: RatMat = (0..n)
            .map(|i| (0..n).map(|j| rat(symmetrizers[i] * matrix[i][j])).collect())
            .collect();
        for (k, minor) in linalg::principal_minors(&sym).iter().enumerate() {
            if !minor.is_positive() {
                return Err(Error::NotFiniteType(format!(
                    "principal minor of order {} is not positive",
                    k + 1
                )));
            }
        }
        Ok(CartanDatum { matrix, symmetrizers, name: None })
    }

    /// Validates a matrix, deriving minimal positive integer symmetrizers.
    pub fn from_matrix(matrix: Vec<Vec<i64>>) -> Result<CartanDatum> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidCartan("matrix is not square".into()));
        }
        // propagate ratios d_j/d_i = C_ij/C_ji along edges of each component
        let mut d = vec![Rat::zero(); n];
        for start in 0..n {
            if !d[start].is_zero() {
                continue;
            }
            d[start] = rat(1);
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for j in 0..n {
                    if i != j && matrix[i][j] != 0 && d[j].is_zero() {
                        if matrix[j][i] == 0 {
                            return Err(Error::InvalidCartan(format!(
                                "zero pattern is not symmetric at ({i},{j})"
                            )));
                        }
                        d[j] = &d[i] * rat(matrix[i][j]) / rat(matrix[j][i]);
                        queue.push_back(j);
                    }
                }
            }
        }
        let denom_lcm = d
            .iter()
            .map(|x| x.denom().clone())
            .fold(Int::one(), num::integer::lcm);
        let scaled: Vec<Int> = d.iter().map(|x| (x * Rat::from_integer(denom_lcm.clone())).to_integer()).collect();
        let gcd = scaled.iter().fold(Int::zero(), |a, b| num::integer::gcd(a, b.clone()));
        let symmetrizers: Vec<i64> = scaled
            .iter()
            .map(|x| (x / &gcd).to_i64().ok_or_else(|| Error::InvalidCartan("symmetrizer overflow".into())))
            .collect::<Result<_>>()?;
        CartanDatum::new(matrix, symmetrizers)
    }

    /// Builds a datum from a type name like `"A2"`, `"B3"`, `"F4"` or a
    /// product such as `"A1xA1"`.
    pub fn from_name(name: &str) -> Result<CartanDatum> {
        let parts: Vec<&str> = name.split(['x', 'X']).collect();
        let mut blocks = Vec::new();
        for part in &parts {
            blocks.push(simple_type_datum(part.trim())?);
        }
        let mut datum = blocks
            .into_iter()
            .reduce(|a, b| a.direct_sum(&b))
            .ok_or_else(|| Error::InvalidCartan("empty type name".into()))?;
        datum.name = Some(parts.join("x"));
        Ok(datum)
    }

    /// Block-diagonal sum of two data.
    pub fn direct_sum(&self, other: &CartanDatum) -> CartanDatum {
        let n = self.rank();
        let m = other.rank();
        let mut matrix = vec![vec![0i64; n + m]; n + m];
        for i in 0..n {
            matrix[i][..n].copy_from_slice(&self.matrix[i]);
        }
        for i in 0..m {
            matrix[n + i][n..].copy_from_slice(&other.matrix[i]);
        }
        let mut symmetrizers = self.symmetrizers.clone();
        symmetrizers.extend_from_slice(&other.symmetrizers);
        CartanDatum { matrix, symmetrizers, name: None }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &Vec<Vec<i64>> {
        &self.matrix
    }

    pub fn symmetrizers(&self) -> &Vec<i64> {
        &self.symmetrizers
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }
}

fn simple_type_datum(name: &str) -> Result<CartanDatum> {
    let err = || Error::InvalidCartan(format!("unrecognized type name '{name}'"));
    if name.len() < 2 {
        return Err(err());
    }
    let letter = name.chars().next().unwrap().to_ascii_uppercase();
    let n: usize = name[1..].parse().map_err(|_| err())?;
    let chain = |n: usize| -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][i] = 2;
            if i + 1 < n {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        }
        m
    };
    let (matrix, d) = match (letter, n) {
        ('A', n) if n >= 1 => (chain(n), vec![1; n]),
        ('B', n) if n >= 2 => {
            // last node short: ⟨α_{n-1}, α_n^∨⟩ = -2
            let mut m = chain(n);
            m[n - 1][n - 2] = -2;
            let mut d = vec![2; n];
            d[n - 1] = 1;
            (m, d)
        }
        ('C', n) if n >= 2 => {
            // last node long
            let mut m = chain(n);
            m[n - 2][n - 1] = -2;
            let mut d = vec![1; n];
            d[n - 1] = 2;
            (m, d)
        }
        ('D', n) if n >= 3 => {
            let mut m = chain(n - 1);
            m.iter_mut().for_each(|row| row.push(0));
            m.push(vec![0; n]);
            m[n - 1][n - 1] = 2;
            m[n - 3][n - 1] = -1;
            m[n - 1][n - 3] = -1;
            (m, vec![1; n])
        }
        ('E', n) if (6..=8).contains(&n) => {
            // Bourbaki: node 2 attaches to node 4 of the chain 1-3-4-5-...
            let mut m = vec![vec![0i64; n]; n];
            for i in 0..n {
                m[i][i] = 2;
            }
            let mut link = |a: usize, b: usize| {
                m[a - 1][b - 1] = -1;
                m[b - 1][a - 1] = -1;
            };
            link(1, 3);
            link(2, 4);
            link(3, 4);
            for i in 4..n {
                link(i, i + 1);
            }
            (m, vec![1; n])
        }
        ('F', 4) => {
            let mut m = chain(4);
            m[2][1] = -2;
            (m, vec![2, 2, 1, 1])
        }
        ('G', 2) => (vec![vec![2, -3], vec![-1, 2]], vec![1, 3]),
        _ => return Err(err()),
    };
    CartanDatum::new(matrix, d)
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    coords: Vec<Rat>,
}

impl Weight {
    pub fn new(coords: Vec<Rat>) -> Weight {
        Weight { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Weight {
        Weight { coords: coords.iter().map(|&c| rat(c)).collect() }
    }

    pub fn zero(rank: usize) -> Weight {
        Weight { coords: vec![Rat::zero(); rank] }
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|c| !c.is_negative())
    }

    pub fn scale(&self, f: &Rat) -> Weight {
        Weight { coords: self.coords.iter().map(|c| c * f).collect() }
    }

    /// Integer coordinate vector; `None` when some coordinate is fractional.
    pub fn to_int_coords(&self) -> Option<Vec<Int>> {
        self.coords
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl std::ops::Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect() }
    }
}

impl std::ops::Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect() }
    }
}

impl std::ops::Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight { coords: self.coords.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A root: a weight plus its simple-root expansion and squared length.
#[derive(Debug, Clone)]
pub struct Root {
    pub weight: Weight,
    pub root_coords: Vec<i64>,
    pub squared_length: Rat,
    pub positive: bool,
}

/// A Weyl group element, canonicalized by its action matrix.
#[derive(Debug, Clone)]
pub struct WeylElement {
    /// A reduced word in simple reflections (product left to right).
    word: Vec<usize>,
    /// Action on simple-root coordinates: `w(α_j) = Σ_i mat[i][j] α_i`.
    mat: Vec<Vec<i64>>,
    /// Action on fundamental-weight coordinates.
    wmat: Vec<Vec<i64>>,
    length: usize,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}
impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl WeylElement {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Action matrix on simple-root coordinates.
    pub fn root_matrix(&self) -> &Vec<Vec<i64>> {
        &self.mat
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn apply(&self, weight: &Weight) -> Weight {
        let coords = self
            .wmat
            .iter()
            .map(|row| row.iter().zip(weight.coords()).map(|(&m, c)| c * rat(m)).sum())
            .collect();
        Weight::new(coords)
    }

    /// Action on a vector of simple-root coordinates.
    pub fn apply_root_coords(&self, rc: &[i64]) -> Vec<i64> {
        self.mat
            .iter()
            .map(|row| row.iter().zip(rc).map(|(m, x)| m * x).sum())
            .collect()
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "e");
        }
        for &i in &self.word {
            write!(f, "s{}", i + 1)?;
        }
        Ok(())
    }
}

/// The ambient data `(Φ, Λ, W)`: all roots, the invariant form, and a
/// Weyl-group enumerator. Immutable after construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    datum: CartanDatum,
    limits: Limits,
    cartan_rat: RatMat,
    cartan_inv: RatMat,
    /// Gram matrix of the fundamental weights under the invariant form.
    gram: RatMat,
    roots: Vec<Root>,
    positive: Vec<usize>,
    root_index: HashMap<Vec<i64>, usize>,
    simple_mats: Vec<Vec<Vec<i64>>>,
}

/// Closes the simple roots under simple reflections and assembles the
/// ambient root system. Non-finite-type data are rejected with a diagnostic.
pub fn build_root_system(datum: CartanDatum, limits: Limits) -> Result<RootSystem> {
    let n = datum.rank();
    let cartan_rat: RatMat = datum
        .matrix
        .iter()
        .map(|row| row.iter().map(|&x| rat(x)).collect())
        .collect();
    let cartan_inv = linalg::inverse(&cartan_rat)
        .ok_or_else(|| Error::NotFiniteType("Cartan matrix is singular".into()))?;
    let gram: RatMat = (0..n)
        .map(|i| (0..n).map(|j| rat(datum.symmetrizers[j]) * &cartan_inv[j][i]).collect())
        .collect();

    let simple_mats = simple_reflection_matrices(&datum);

    // closure of the simple roots under simple reflections
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
    let mut coords: Vec<Vec<i64>> = Vec::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        seen.insert(e.clone(), coords.len());
        coords.push(e.clone());
        queue.push_back(e);
    }
    while let Some(x) = queue.pop_front() {
        for i in 0..n {
            let mut y = x.clone();
            let s: i64 = (0..n).map(|j| datum.matrix[i][j] * x[j]).sum();
            y[i] -= s;
            if !seen.contains_key(&y) {
                if coords.len() >= limits.max_roots {
                    return Err(Error::NotFiniteType(format!(
                        "root closure exceeded {} vectors",
                        limits.max_roots
                    )));
                }
                seen.insert(y.clone(), coords.len());
                coords.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    assemble_root_system(datum, coords, limits, cartan_rat, cartan_inv, gram, simple_mats)
}

fn simple_reflection_matrices(datum: &CartanDatum) -> Vec<Vec<Vec<i64>>> {
    let n = datum.rank();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| {
                            let id = (r == c) as i64;
                            if r == i {
                                id - datum.matrix[i][c]
                            } else {
                                id
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn assemble_root_system(
    datum: CartanDatum,
    coords: Vec<Vec<i64>>,
    limits: Limits,
    cartan_rat: RatMat,
    cartan_inv: RatMat,
    gram: RatMat,
    simple_mats: Vec<Vec<Vec<i64>>>,
) -> Result<RootSystem> {
    let root_index: HashMap<Vec<i64>, usize> =
        coords.iter().cloned().enumerate().map(|(k, rc)| (rc, k)).collect();
    if root_index.len() != coords.len() {
        return Err(Error::Inconsistent("duplicate root coordinates".into()));
    }
    let mut rs = RootSystem {
        datum,
        limits,
        cartan_rat,
        cartan_inv,
        gram,
        roots: Vec::new(),
        positive: Vec::new(),
        root_index,
        simple_mats,
    };
    for rc in coords {
        let all_nonneg = rc.iter().all(|&x| x >= 0);
        let all_nonpos = rc.iter().all(|&x| x <= 0);
        if !(all_nonneg || all_nonpos) {
            return Err(Error::Inconsistent(format!("mixed-sign root coordinates {rc:?}")));
        }
        let weight = rs.weight_from_root_coords_int(&rc);
        let squared_length = rs.form(&weight, &weight);
        rs.roots.push(Root { weight, root_coords: rc, squared_length, positive: all_nonneg });
    }
    rs.positive = (0..rs.roots.len()).filter(|&k| rs.roots[k].positive).collect();
    Ok(rs)
}

/// Assembles a root system from a previously computed closure, after
/// verifying that the set really is reflection-closed and contains the
/// simple roots; the entry point for on-disk memo layers.
pub fn build_root_system_from_closure(
    datum: CartanDatum,
    closure: Vec<Vec<i64>>,
    limits: Limits,
) -> Result<RootSystem> {
    let n = datum.rank();
    let set: std::collections::HashSet<&Vec<i64>> = closure.iter().collect();
    for i in 0..n {
        let mut e = vec![0i64; n];
        e[i] = 1;
        if !set.contains(&e) {
            return Err(Error::Inconsistent("cached closure misses a simple root".into()));
        }
    }
    for x in &closure {
        if x.len() != n {
            return Err(Error::Inconsistent("cached closure has a wrong rank".into()));
        }
        for i in 0..n {
            let mut y = x.clone();
            let s: i64 = (0..n).map(|j| datum.matrix[i][j] * x[j]).sum();
            y[i] -= s;
            if !set.contains(&y) {
                return Err(Error::Inconsistent("cached closure is not reflection-closed".into()));
            }
        }
    }
    if set.len() != closure.len() {
        return Err(Error::Inconsistent("cached closure has duplicates".into()));
    }
    let cartan_rat: RatMat = datum
        .matrix
        .iter()
        .map(|row| row.iter().map(|&x| rat(x)).collect())
        .collect();
    let cartan_inv = linalg::inverse(&cartan_rat)
        .ok_or_else(|| Error::NotFiniteType("Cartan matrix is singular".into()))?;
    let gram: RatMat = (0..n)
        .map(|i| (0..n).map(|j| rat(datum.symmetrizers[j]) * &cartan_inv[j][i]).collect())
        .collect();
    let simple_mats = simple_reflection_matrices(&datum);
    assemble_root_system(datum, closure, limits, cartan_rat, cartan_inv, gram, simple_mats)
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.positive.iter().map(|&k| &self.roots[k])
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn simple_root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut c = vec![Rat::zero(); self.rank()];
        c[i] = rat(1);
        Weight::new(c)
    }

    pub fn rho(&self) -> Weight {
        Weight::new(vec![rat(1); self.rank()])
    }

    /// Is this integer vector of simple-root coordinates a root?
    pub fn root_with_coords(&self, rc: &[i64]) -> Option<&Root> {
        self.root_index.get(rc).map(|&k| &self.roots[k])
    }

    pub fn weight_from_root_coords_int(&self, rc: &[i64]) -> Weight {
        let coords = self
            .cartan_rat
            .iter()
            .map(|row| row.iter().zip(rc).map(|(a, &x)| a * rat(x)).sum())
            .collect();
        Weight::new(coords)
    }

    pub fn weight_from_root_coords(&self, rc: &[Rat]) -> Weight {
        Weight::new(linalg::mat_vec(&self.cartan_rat, rc))
    }

    /// Simple-root coordinates of an arbitrary weight.
    pub fn root_coords(&self, weight: &Weight) -> Vec<Rat> {
        linalg::mat_vec(&self.cartan_inv, weight.coords())
    }

    /// The invariant form `(μ, ν)`.
    pub fn form(&self, a: &Weight, b: &Weight) -> Rat {
        let gb = linalg::mat_vec(&self.gram, b.coords());
        a.coords().iter().zip(&gb).map(|(x, y)| x * y).sum()
    }

    /// `⟨μ, β^∨⟩ = 2(μ,β)/(β,β)` for any nonzero vector `β`.
    pub fn pairing(&self, mu: &Weight, beta: &Weight) -> Rat {
        rat(2) * self.form(mu, beta) / self.form(beta, beta)
    }

    /// `⟨μ, α_i^∨⟩` — just the i-th fundamental coordinate.
    pub fn pairing_simple(&self, mu: &Weight, i: usize) -> Rat {
        mu.coords()[i].clone()
    }

    pub fn reflect_simple(&self, i: usize, mu: &Weight) -> Weight {
        let c = mu.coords()[i].clone();
        if c.is_zero() {
            return mu.clone();
        }
        let alpha = &self.roots[i].weight;
        let coords = mu
            .coords()
            .iter()
            .zip(alpha.coords())
            .map(|(x, a)| x - &c * a)
            .collect();
        Weight::new(coords)
    }

    /// Reflection in an arbitrary nonzero vector.
    pub fn reflect_in(&self, beta: &Weight, mu: &Weight) -> Weight {
        let c = self.pairing(mu, beta);
        &(mu.clone()) - &beta.scale(&c)
    }

    /// Sum of the simple-root coordinates.
    pub fn height(&self, mu: &Weight) -> Rat {
        self.root_coords(mu).into_iter().sum()
    }

    pub fn identity_element(&self) -> WeylElement {
        self.element_from_word(&[])
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElement {
        self.element_from_word(&[i])
    }

    /// Builds the element `s_{w_1} ⋯ s_{w_m}` and recomputes its canonical
    /// data from the action matrix.
    pub fn element_from_word(&self, word: &[usize]) -> WeylElement {
        let n = self.rank();
        let mut mat: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| (i == j) as i64).collect())
            .collect();
        for &i in word.iter().rev() {
            mat = mul_i64(&self.simple_mats[i], &mat);
        }
        self.element_from_mat(mat, word.to_vec())
    }

    fn element_from_mat(&self, mat: Vec<Vec<i64>>, word: Vec<usize>) -> WeylElement {
        let length = self
            .positive
            .iter()
            .filter(|&&k| {
                let img: Vec<i64> = mat
                    .iter()
                    .map(|row| row.iter().zip(&self.roots[k].root_coords).map(|(m, x)| m * x).sum())
                    .collect();
                img.iter().any(|&x| x < 0)
            })
            .count();
        let wmat = self.weight_action(&mat);
        WeylElement { word, mat, wmat, length }
    }

    fn weight_action(&self, mat: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mat_rat: RatMat = mat.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
        let prod = linalg::mat_mul(&self.cartan_rat, &linalg::mat_mul(&mat_rat, &self.cartan_inv));
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        debug_assert!(prod[i][j].is_integer(), "weight action must be integral");
                        prod[i][j].to_integer().to_i64().expect("weight action entry overflow")
                    })
                    .collect()
            })
            .collect()
    }

    pub fn compose(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        let mat = mul_i64(&a.mat, &b.mat);
        let mut word = a.word.clone();
        word.extend_from_slice(&b.word);
        self.element_from_mat(mat, word)
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let word: Vec<usize> = w.word.iter().rev().copied().collect();
        self.element_from_word(&word)
    }

    /// The dominant representative of the Weyl orbit, together with an
    /// element mapping the input onto it.
    pub fn dominant_representative(&self, eta: &Weight) -> (Weight, WeylElement) {
        let mut current = eta.clone();
        let mut applied: Vec<usize> = Vec::new();
        loop {
            let Some(i) = current.coords().iter().position(|c| c.is_negative()) else {
                break;
            };
            current = self.reflect_simple(i, &current);
            applied.push(i);
        }
        applied.reverse();
        (current, self.element_from_word(&applied))
    }

    /// Dominant representative without tracking the group element.
    pub fn dominantize(&self, eta: &Weight) -> Weight {
        let mut current = eta.clone();
        while let Some(i) = current.coords().iter().position(|c| c.is_negative()) {
            current = self.reflect_simple(i, &current);
        }
        current
    }

    /// Longest element of the parabolic subgroup generated by the given
    /// simple reflections. It sends every positive root supported on the
    /// subset to a negative root.
    pub fn longest_element(&self, subset: &[usize]) -> WeylElement {
        let mut v = Weight::zero(self.rank());
        for &i in subset {
            v = &v + &self.fundamental_weight(i);
        }
        let mut applied = Vec::new();
        loop {
            let Some(&i) = subset.iter().find(|&&i| v.coords()[i].is_positive()) else {
                break;
            };
            v = self.reflect_simple(i, &v);
            applied.push(i);
        }
        applied.reverse();
        self.element_from_word(&applied)
    }

    /// Enumerates the full Weyl group ordered by length, with lexicographic
    /// reduced words breaking ties. The order is a linear extension of the
    /// Bruhat order; exceeding the configured cap is a hard error.
    pub fn weyl_elements(&self) -> Result<Vec<WeylElement>> {
        let mut seen: HashMap<Vec<Vec<i64>>, usize> = HashMap::new();
        let mut out: Vec<WeylElement> = Vec::new();
        let e = self.identity_element();
        seen.insert(e.mat.clone(), 0);
        out.push(e);
        let mut frontier = 0;
        while frontier < out.len() {
            let limit = out.len();
            for idx in frontier..limit {
                for i in 0..self.rank() {
                    // right multiplication keeps BFS words lexicographic
                    let mat = mul_i64(&out[idx].mat, &self.simple_mats[i]);
                    if !seen.contains_key(&mat) {
                        if out.len() >= self.limits.max_group {
                            return Err(Error::GroupTooLarge { cap: self.limits.max_group });
                        }
                        let mut word = out[idx].word.clone();
                        word.push(i);
                        let w = self.element_from_mat(mat.clone(), word);
                        seen.insert(mat, out.len());
                        out.push(w);
                    }
                }
            }
            frontier = limit;
        }
        out.sort_by(|a, b| (a.length, &a.word).cmp(&(b.length, &b.word)));
        Ok(out)
    }

    pub fn weyl_order(&self) -> Result<usize> {
        Ok(self.weyl_elements()?.len())
    }

    /// Full Weyl orbit of a weight, sorted for determinism.
    pub fn orbit(&self, mu: &Weight) -> Vec<Weight> {
        let mut seen = std::collections::BTreeSet::new();
        let mut queue = VecDeque::from([mu.clone()]);
        seen.insert(mu.clone());
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank() {
                let r = self.reflect_simple(i, &w);
                if seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Dimension of the irreducible module of highest weight `λ`, by the
    /// Weyl dimension formula in exact arithmetic.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<Int> {
        if !lambda.is_integral() {
            return Err(Error::InvalidWeight(format!("{lambda} is not integral")));
        }
        if !lambda.is_dominant() {
            return Err(Error::InvalidWeight(format!("{lambda} is not dominant")));
        }
        let rho = self.rho();
        let shifted = lambda + &rho;
        let mut dim = rat(1);
        for alpha in self.positive_roots() {
            dim *= self.form(&shifted, &alpha.weight) / self.form(&rho, &alpha.weight);
        }
        if !dim.is_integer() {
            return Err(Error::Inconsistent(format!("non-integral Weyl dimension for {lambda}")));
        }
        Ok(dim.to_integer())
    }
}

fn mul_i64(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}
