//! Lakshmibai-Seshadri paths, root operators, and crystal graphs.
//!
//! Paths are piecewise linear with exact rational data. The path family of a
//! dominant shape has two interchangeable constructions, both exposed behind
//! [`PathFamilyMethod`]: enumeration of weighted chains in the poset with
//! bonds on the minimal coset representatives, and closure of the straight
//! dominant path under the root operators. The two must agree, and the test
//! suite holds them to it.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num::{Signed, ToPrimitive, Zero};

use crate::cartan::{RootSystem, Weight, WeylElement};
use crate::{rat, Error, Rat, Result};

/// A piecewise-linear path starting at 0, stored as (direction, duration)
/// segments with durations summing to 1. Canonical form merges adjacent
/// segments with equal directions, so structural equality is path equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    rank: usize,
    segments: Vec<(Weight, Rat)>,
}

impl Path {
    pub fn new(rank: usize, segments: Vec<(Weight, Rat)>) -> Path {
        let mut merged: Vec<(Weight, Rat)> = Vec::with_capacity(segments.len());
        for (dir, dur) in segments {
            assert_eq!(dir.rank(), rank);
            if dur.is_zero() {
                continue;
            }
            assert!(dur.is_positive(), "durations must be positive");
            match merged.last_mut() {
                Some((last_dir, last_dur)) if *last_dir == dir => *last_dur += dur,
                _ => merged.push((dir, dur)),
            }
        }
        Path { rank, segments: merged }
    }

    /// The constant path at the origin.
    pub fn zero(rank: usize) -> Path {
        Path { rank, segments: Vec::new() }
    }

    /// The straight path `t ↦ t·λ`.
    pub fn straight(weight: &Weight) -> Path {
        if weight.is_zero() {
            return Path::zero(weight.rank());
        }
        Path { rank: weight.rank(), segments: vec![(weight.clone(), rat(1))] }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn segments(&self) -> &[(Weight, Rat)] {
        &self.segments
    }

    pub fn is_zero(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn endpoint(&self) -> Weight {
        let mut point = Weight::zero(self.rank);
        for (dir, dur) in &self.segments {
            point = &point + &dir.scale(dur);
        }
        point
    }

    /// Cumulative `(time, point)` pairs including the start and the end.
    pub fn turning_points(&self) -> Vec<(Rat, Weight)> {
        let mut out = vec![(Rat::zero(), Weight::zero(self.rank))];
        for (dir, dur) in &self.segments {
            let (time, point) = out.last().unwrap();
            out.push((time + dur, point + &dir.scale(dur)));
        }
        out
    }

    /// Exact evaluation at a rational time in `[0, 1]`.
    pub fn evaluate(&self, t: &Rat) -> Weight {
        let mut point = Weight::zero(self.rank);
        let mut time = Rat::zero();
        for (dir, dur) in &self.segments {
            let next = &time + dur;
            if *t <= next {
                return &point + &dir.scale(&(t - &time));
            }
            point = &point + &dir.scale(dur);
            time = next;
        }
        point
    }

    /// Concatenation with uniform time windows: nonzero factor `j` of `k`
    /// occupies `[(j-1)/k, j/k]`, time-compressed with velocities scaled to
    /// preserve the image. Constant factors are dropped.
    pub fn concat(paths: &[&Path]) -> Path {
        let rank = paths.first().map(|p| p.rank).unwrap_or(0);
        let nonzero: Vec<&&Path> = paths.iter().filter(|p| !p.is_zero()).collect();
        let k = nonzero.len();
        if k == 0 {
            return Path::zero(rank);
        }
        let f = rat(k as i64);
        let mut segments = Vec::new();
        for p in nonzero {
            for (dir, dur) in &p.segments {
                segments.push((dir.scale(&f), dur / &f));
            }
        }
        Path::new(rank, segments)
    }

    /// Does the image lie in the closed dominant chamber?
    pub fn is_dominant(&self) -> bool {
        self.turning_points().iter().all(|(_, p)| p.is_dominant())
    }

    /// The piece between two times, translated to start at the origin and
    /// reparametrized to unit duration with the image preserved.
    pub fn window(&self, from: &Rat, to: &Rat) -> Path {
        assert!(from < to);
        let width = to - from;
        let scale = rat(1) / &width;
        let mut segments = Vec::new();
        let mut time = Rat::zero();
        for (dir, dur) in &self.segments {
            let next = &time + dur;
            let lo = if &time > from { time.clone() } else { from.clone() };
            let hi = if &next < to { next.clone() } else { to.clone() };
            if lo < hi {
                segments.push((dir.scale(&width), (&hi - &lo) * &scale));
            }
            time = next;
        }
        Path::new(self.rank, segments)
    }
}

/// Raise or lower along a simple root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpDirection {
    Raise,
    Lower,
}

/// The root operator `e_i` (raise) or `f_i` (lower). Returns `None` when the
/// defining condition fails; that is a regular outcome, not an error.
pub fn root_op(rs: &RootSystem, path: &Path, i: usize, dir: OpDirection) -> Option<Path> {
    if path.is_zero() {
        return None;
    }
    let turning = path.turning_points();
    let h: Vec<Rat> = turning.iter().map(|(_, p)| rs.pairing_simple(p, i)).collect();
    let minimum = h.iter().min()?.clone();
    let one = rat(1);

    let (t1, t2) = match dir {
        OpDirection::Lower => {
            if h.last().unwrap() - &minimum < one {
                return None;
            }
            // last time at the minimum is a turning point
            let j1 = (0..h.len()).rev().find(|&j| h[j] == minimum).unwrap();
            let t1 = turning[j1].0.clone();
            let target = &minimum + &one;
            let t2 = first_crossing_at_or_after(&turning, &h, j1, &target)?;
            (t1, t2)
        }
        OpDirection::Raise => {
            if minimum > -&one {
                return None;
            }
            // first time at the minimum is a turning point
            let j2 = (0..h.len()).find(|&j| h[j] == minimum).unwrap();
            let t2 = turning[j2].0.clone();
            let target = &minimum + &one;
            let t1 = last_crossing_at_or_before(&turning, &h, j2, &target)?;
            (t1, t2)
        }
    };

    // rebuild: reflect directions inside the window, keep the rest; the
    // translation after the window is implicit in the segment encoding
    let mut segments = Vec::new();
    let mut time = Rat::zero();
    for (dir_w, dur) in path.segments() {
        let next = &time + dur;
        for (lo, hi, inside) in split_segment(&time, &next, &t1, &t2) {
            if lo < hi {
                let d = if inside { rs.reflect_simple(i, dir_w) } else { dir_w.clone() };
                segments.push((d, &hi - &lo));
            }
        }
        time = next;
    }
    Some(Path::new(path.rank(), segments))
}

fn split_segment(start: &Rat, end: &Rat, t1: &Rat, t2: &Rat) -> Vec<(Rat, Rat, bool)> {
    let clamp = |x: &Rat| -> Rat {
        if x < start {
            start.clone()
        } else if x > end {
            end.clone()
        } else {
            x.clone()
        }
    };
    let a = clamp(t1);
    let b = clamp(t2);
    vec![(start.clone(), a.clone(), false), (a, b.clone(), true), (b, end.clone(), false)]
}

fn first_crossing_at_or_after(
    turning: &[(Rat, Weight)],
    h: &[Rat],
    j_start: usize,
    target: &Rat,
) -> Option<Rat> {
    for j in j_start..h.len() {
        if &h[j] == target {
            return Some(turning[j].0.clone());
        }
        if j + 1 < h.len() {
            let (a, b) = (&h[j], &h[j + 1]);
            if a < target && target < b {
                let f = (target - a) / (b - a);
                let (ta, tb) = (&turning[j].0, &turning[j + 1].0);
                return Some(ta + (tb - ta) * f);
            }
        }
    }
    None
}

fn last_crossing_at_or_before(
    turning: &[(Rat, Weight)],
    h: &[Rat],
    j_end: usize,
    target: &Rat,
) -> Option<Rat> {
    for j in (0..=j_end).rev() {
        if &h[j] == target {
            return Some(turning[j].0.clone());
        }
        if j > 0 {
            let (a, b) = (&h[j - 1], &h[j]);
            if b < target && target < a {
                let f = (a - target) / (a - b);
                let (ta, tb) = (&turning[j - 1].0, &turning[j].0);
                return Some(ta + (tb - ta) * f);
            }
        }
    }
    None
}

/// One element of `W^λ`: a minimal coset representative with its orbit
/// weight and quotient length.
#[derive(Debug, Clone)]
pub struct CosetElement {
    pub rep: WeylElement,
    pub weight: Weight,
    pub length: usize,
    /// Rank of the representative in the fixed linear extension of the
    /// Bruhat order on `W` (by length, then lexicographic reduced word).
    pub alphabet_rank: usize,
}

/// The poset with bonds on the minimal coset representatives `W^λ`:
/// Bruhat order, cover bonds `⟨τ(λ), β^∨⟩`, and their gcd extension to
/// comparable pairs.
#[derive(Debug, Clone)]
pub struct PosetWithBonds {
    shape: Weight,
    elements: Vec<CosetElement>,
    covers: Vec<(usize, usize, i64)>,
    strictly_less: Vec<Vec<bool>>,
    pair_bonds: HashMap<(usize, usize), i64>,
    lcm_bonds: i64,
}

impl PosetWithBonds {
    pub fn shape(&self) -> &Weight {
        &self.shape
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn element(&self, k: usize) -> &CosetElement {
        &self.elements[k]
    }

    pub fn elements(&self) -> &[CosetElement] {
        &self.elements
    }

    pub fn covers(&self) -> &[(usize, usize, i64)] {
        &self.covers
    }

    pub fn less(&self, x: usize, y: usize) -> bool {
        self.strictly_less[x][y]
    }

    /// The gcd-extended bond of a comparable pair `x < y`.
    pub fn bond(&self, x: usize, y: usize) -> Option<i64> {
        self.pair_bonds.get(&(x, y)).copied()
    }

    /// Least common multiple of the bond values.
    pub fn n_lambda(&self) -> i64 {
        self.lcm_bonds
    }

    /// gcds along every maximal chain from `x` to `y`; chain-independence
    /// says this set is a singleton.
    pub fn chain_gcds(&self, x: usize, y: usize) -> BTreeSet<i64> {
        let mut out = BTreeSet::new();
        let mut stack = vec![(x, 0i64)];
        while let Some((node, acc)) = stack.pop() {
            if node == y {
                out.insert(acc);
                continue;
            }
            for &(lo, hi, bond) in &self.covers {
                if lo == node && (hi == y || self.strictly_less[hi][y]) {
                    let next = if acc == 0 { bond } else { gcd(acc, bond) };
                    stack.push((hi, next));
                }
            }
        }
        out
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    num::integer::gcd(a, b)
}

/// Builds the poset with bonds for a nonzero dominant integral shape.
pub fn bonds_build(rs: &RootSystem, lambda: &Weight) -> Result<PosetWithBonds> {
    if !lambda.is_integral() || !lambda.is_dominant() {
        return Err(Error::InvalidWeight(format!("{lambda} is not dominant integral")));
    }
    if lambda.is_zero() {
        return Err(Error::InvalidWeight("the zero shape has a trivial poset".into()));
    }
    let group = rs.weyl_elements()?;
    let mut first_seen: HashMap<Weight, usize> = HashMap::new();
    for (rank, w) in group.iter().enumerate() {
        let nu = w.apply(lambda);
        first_seen.entry(nu).or_insert(rank);
    }
    let mut elements: Vec<CosetElement> = first_seen
        .into_iter()
        .map(|(weight, alphabet_rank)| CosetElement {
            rep: group[alphabet_rank].clone(),
            length: group[alphabet_rank].length(),
            weight,
            alphabet_rank,
        })
        .collect();
    elements.sort_by_key(|e| (e.length, e.alphabet_rank));

    // covers: length goes up by one and the orbit weights are linked by a
    // reflection in a positive root with positive pairing
    let mut covers = Vec::new();
    for x in 0..elements.len() {
        for y in 0..elements.len() {
            if elements[y].length != elements[x].length + 1 {
                continue;
            }
            let delta = &elements[x].weight - &elements[y].weight;
            let delta_rc = rs.root_coords(&delta);
            let Some(beta) = positive_root_proportional(rs, &delta_rc) else {
                continue;
            };
            let pairing = rs.pairing(&elements[x].weight, &beta.weight);
            if !pairing.is_positive() {
                continue;
            }
            if rs.reflect_in(&beta.weight, &elements[x].weight) != elements[y].weight {
                continue;
            }
            debug_assert!(pairing.is_integer());
            covers.push((x, y, pairing.to_integer().to_i64().expect("bond overflow")));
        }
    }

    // strict order: transitive closure of the covers
    let n = elements.len();
    let mut strictly_less = vec![vec![false; n]; n];
    for &(x, y, _) in &covers {
        strictly_less[x][y] = true;
    }
    for k in 0..n {
        for x in 0..n {
            if strictly_less[x][k] {
                for y in 0..n {
                    if strictly_less[k][y] {
                        strictly_less[x][y] = true;
                    }
                }
            }
        }
    }

    // gcd extension, by increasing length gap
    let mut pair_bonds: HashMap<(usize, usize), i64> = HashMap::new();
    for &(x, y, b) in &covers {
        pair_bonds.insert((x, y), b);
    }
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|x| (0..n).filter(move |&y| x != y).map(move |y| (x, y)))
        .filter(|&(x, y)| strictly_less[x][y])
        .collect();
    pairs.sort_by_key(|&(x, y)| elements[y].length - elements[x].length);
    for (x, y) in pairs {
        if pair_bonds.contains_key(&(x, y)) {
            continue;
        }
        let mut value: Option<i64> = None;
        for &(lo, hi, bond) in &covers {
            if lo != x || !(hi == y || strictly_less[hi][y]) {
                continue;
            }
            let through = if hi == y { bond } else { gcd(bond, pair_bonds[&(hi, y)]) };
            value = Some(match value {
                None => through,
                Some(v) => gcd(v, through),
            });
        }
        pair_bonds.insert((x, y), value.expect("comparable pair admits a chain"));
    }

    let lcm_bonds = pair_bonds.values().fold(1i64, |acc, &b| num::integer::lcm(acc, b));

    Ok(PosetWithBonds { shape: lambda.clone(), elements, covers, strictly_less, pair_bonds, lcm_bonds })
}

fn positive_root_proportional<'a>(
    rs: &'a RootSystem,
    delta_rc: &[Rat],
) -> Option<&'a crate::cartan::Root> {
    let lead = delta_rc.iter().position(|c| !c.is_zero())?;
    for root in rs.positive_roots() {
        if root.root_coords[lead] == 0 {
            continue;
        }
        let factor = &delta_rc[lead] / rat(root.root_coords[lead]);
        if !factor.is_positive() {
            continue;
        }
        let matches = delta_rc
            .iter()
            .zip(&root.root_coords)
            .all(|(d, &r)| *d == &factor * rat(r));
        if matches {
            return Some(root);
        }
    }
    None
}

/// An LS path of some shape: an increasing chain in `W^λ` with rational
/// turning data satisfying the bond conditions. The chain of the zero shape
/// is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LSPath {
    /// Indices into the poset, strictly increasing in the Bruhat order.
    chain: Vec<usize>,
    /// Interior cut points `a_1 < … < a_{u-1}` in `(0, 1)`.
    cuts: Vec<Rat>,
}

impl LSPath {
    pub fn chain(&self) -> &[usize] {
        &self.chain
    }

    pub fn cuts(&self) -> &[Rat] {
        &self.cuts
    }

    /// The realized piecewise-linear path: the top of the chain moves first,
    /// the cut differences are the durations.
    pub fn realized(&self, poset: &PosetWithBonds) -> Path {
        let u = self.chain.len();
        let mut segments = Vec::with_capacity(u);
        for j in (0..u).rev() {
            let lo = if j == 0 { Rat::zero() } else { self.cuts[j - 1].clone() };
            let hi = if j + 1 == u { rat(1) } else { self.cuts[j].clone() };
            segments.push((poset.element(self.chain[j]).weight.clone(), hi - lo));
        }
        Path::new(poset.shape().rank(), segments)
    }

    pub fn endpoint(&self, poset: &PosetWithBonds) -> Weight {
        self.realized(poset).endpoint()
    }

    /// The word: the chain letters with multiplicities `N_λ(a_i - a_{i-1})`,
    /// spelled as ranks in the fixed alphabet order on `W`.
    pub fn word(&self, poset: &PosetWithBonds) -> Vec<usize> {
        let n = poset.n_lambda();
        let u = self.chain.len();
        let mut letters = Vec::new();
        for j in 0..u {
            let lo = if j == 0 { Rat::zero() } else { self.cuts[j - 1].clone() };
            let hi = if j + 1 == u { rat(1) } else { self.cuts[j].clone() };
            let count = (hi - lo) * rat(n);
            assert!(count.is_integer(), "cut points must clear the bond denominators");
            let count = count.to_integer().to_i64().expect("word exponent overflow");
            for _ in 0..count {
                letters.push(poset.element(self.chain[j]).alphabet_rank);
            }
        }
        letters
    }
}

/// The chain data of the family of a shape, with the realized paths indexed
/// for lookup.
#[derive(Debug, Clone)]
pub struct ShapeFamily {
    pub shape: Weight,
    /// `None` exactly for the zero shape.
    pub poset: Option<PosetWithBonds>,
    pub paths: Vec<LSPath>,
    pub realized: Vec<Path>,
    pub index: HashMap<Path, usize>,
}

impl ShapeFamily {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// The straight dominant path of this shape.
    pub fn head(&self) -> Path {
        Path::straight(&self.shape)
    }
}

/// Enumerates the LS paths of a dominant integral shape via chains and
/// admissible rational subdivisions.
pub fn ls_paths(rs: &RootSystem, lambda: &Weight) -> Result<ShapeFamily> {
    if !lambda.is_integral() || !lambda.is_dominant() {
        return Err(Error::InvalidWeight(format!("{lambda} is not dominant integral")));
    }
    if lambda.is_zero() {
        let path = Path::zero(lambda.rank());
        return Ok(ShapeFamily {
            shape: lambda.clone(),
            poset: None,
            paths: vec![LSPath { chain: vec![], cuts: vec![] }],
            realized: vec![path.clone()],
            index: HashMap::from([(path, 0)]),
        });
    }
    let poset = bonds_build(rs, lambda)?;
    let mut paths = Vec::new();
    for start in 0..poset.len() {
        let mut chain = vec![start];
        let mut cuts = Vec::new();
        extend_chains(&poset, &mut chain, &mut cuts, &mut paths);
    }
    debug_assert_eq!(
        num::BigInt::from(paths.len()),
        rs.weyl_dim(lambda).expect("dominant integral"),
        "family size must match the module dimension for shape {lambda}"
    );
    let realized: Vec<Path> = paths.iter().map(|p| p.realized(&poset)).collect();
    let index = realized.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
    Ok(ShapeFamily { shape: lambda.clone(), poset: Some(poset), paths, realized, index })
}

fn extend_chains(
    poset: &PosetWithBonds,
    chain: &mut Vec<usize>,
    cuts: &mut Vec<Rat>,
    out: &mut Vec<LSPath>,
) {
    out.push(LSPath { chain: chain.clone(), cuts: cuts.clone() });
    let last = *chain.last().unwrap();
    let floor_prev = cuts.last().cloned().unwrap_or_else(Rat::zero);
    for next in 0..poset.len() {
        if !poset.less(last, next) {
            continue;
        }
        let bond = poset.bond(last, next).expect("comparable pair carries a bond");
        // admissible cuts a = k/bond with floor_prev < a < 1
        let start = (&floor_prev * rat(bond)).floor().to_integer().to_i64().unwrap() + 1;
        for k in start..bond {
            let a = rat(k) / rat(bond);
            if a <= floor_prev {
                continue;
            }
            chain.push(next);
            cuts.push(a);
            extend_chains(poset, chain, cuts, out);
            cuts.pop();
            chain.pop();
        }
    }
}

/// A crystal: paths discovered from a seed, with the colored lowering edges.
#[derive(Debug, Clone)]
pub struct Crystal {
    pub paths: Vec<Path>,
    /// `(from, to, color)` meaning `f_color(from) = to`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl Crystal {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn path_set(&self) -> BTreeSet<&Path> {
        self.paths.iter().collect()
    }

    /// Elements with every raising operator undefined.
    pub fn heads(&self, rs: &RootSystem) -> Vec<usize> {
        (0..self.paths.len())
            .filter(|&k| {
                (0..rs.rank()).all(|i| root_op(rs, &self.paths[k], i, OpDirection::Raise).is_none())
            })
            .collect()
    }
}

/// Breadth-first closure of a seed path under all root operators.
pub fn crystal_generate(rs: &RootSystem, seed: &Path, cap: usize) -> Result<Crystal> {
    let mut index: HashMap<Path, usize> = HashMap::new();
    let mut paths = vec![seed.clone()];
    index.insert(seed.clone(), 0);
    let mut edges = BTreeSet::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(at) = queue.pop_front() {
        for i in 0..rs.rank() {
            for dir in [OpDirection::Lower, OpDirection::Raise] {
                let Some(next) = root_op(rs, &paths[at], i, dir) else {
                    continue;
                };
                let to = match index.get(&next) {
                    Some(&k) => k,
                    None => {
                        if paths.len() >= cap {
                            return Err(Error::CrystalCapExceeded { cap });
                        }
                        let k = paths.len();
                        index.insert(next.clone(), k);
                        paths.push(next);
                        queue.push_back(k);
                        k
                    }
                };
                match dir {
                    OpDirection::Lower => edges.insert((at, to, i)),
                    OpDirection::Raise => edges.insert((to, at, i)),
                };
            }
        }
    }
    Ok(Crystal { paths, edges: edges.into_iter().collect() })
}

/// Raises a path to the head of its crystal component, applying `e_i` in
/// index order until none applies.
pub fn raise_to_head(rs: &RootSystem, path: &Path) -> Path {
    let mut current = path.clone();
    'outer: loop {
        for i in 0..rs.rank() {
            if let Some(next) = root_op(rs, &current, i, OpDirection::Raise) {
                current = next;
                continue 'outer;
            }
        }
        return current;
    }
}

/// Lowering-closure of a seed: the full crystal component when the seed is
/// the head.
pub fn lower_closure(rs: &RootSystem, seed: &Path, cap: usize) -> Result<Vec<Path>> {
    let mut index: HashMap<Path, usize> = HashMap::new();
    let mut paths = vec![seed.clone()];
    index.insert(seed.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(at) = queue.pop_front() {
        for i in 0..rs.rank() {
            if let Some(next) = root_op(rs, &paths[at], i, OpDirection::Lower) {
                if let std::collections::hash_map::Entry::Vacant(slot) = index.entry(next.clone()) {
                    if paths.len() >= cap {
                        return Err(Error::CrystalCapExceeded { cap });
                    }
                    slot.insert(paths.len());
                    paths.push(next);
                    queue.push_back(paths.len() - 1);
                }
            }
        }
    }
    Ok(paths)
}

/// A named strategy for producing the path family of a shape.
pub trait PathFamilyMethod: Sync {
    fn name(&self) -> &'static str;
    fn enumerate(&self, rs: &RootSystem, lambda: &Weight) -> Result<Vec<Path>>;
}

/// Chains with admissible subdivisions in the poset with bonds.
pub struct ChainEnumeration;

impl PathFamilyMethod for ChainEnumeration {
    fn name(&self) -> &'static str {
        "chains"
    }

    fn enumerate(&self, rs: &RootSystem, lambda: &Weight) -> Result<Vec<Path>> {
        let mut realized = ls_paths(rs, lambda)?.realized;
        realized.sort();
        Ok(realized)
    }
}

/// Closure of the straight dominant path under the root operators.
pub struct CrystalClosure;

impl PathFamilyMethod for CrystalClosure {
    fn name(&self) -> &'static str {
        "crystal"
    }

    fn enumerate(&self, rs: &RootSystem, lambda: &Weight) -> Result<Vec<Path>> {
        if !lambda.is_integral() || !lambda.is_dominant() {
            return Err(Error::InvalidWeight(format!("{lambda} is not dominant integral")));
        }
        let crystal = crystal_generate(rs, &Path::straight(lambda), rs.limits().crystal_cap)?;
        let mut paths = crystal.paths;
        paths.sort();
        Ok(paths)
    }
}

/// The registered enumeration strategies, selectable by name.
pub fn path_methods() -> Vec<Box<dyn PathFamilyMethod>> {
    vec![Box::new(ChainEnumeration), Box::new(CrystalClosure)]
}

pub fn path_method(name: &str) -> Option<Box<dyn PathFamilyMethod>> {
    path_methods().into_iter().find(|m| m.name() == name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{build_root_system, CartanDatum};
    use crate::Limits;

    fn system(name: &str) -> RootSystem {
        build_root_system(CartanDatum::from_name(name).unwrap(), Limits::default()).unwrap()
    }

    #[test]
    fn bonds_for_a1_twice_omega() {
        let rs = system("A1");
        let poset = bonds_build(&rs, &Weight::from_ints(&[2])).unwrap();
        assert_eq!(poset.len(), 2);
        assert_eq!(poset.covers(), &[(0, 1, 2)]);
        assert_eq!(poset.n_lambda(), 2);
    }

    #[test]
    fn bonds_for_a2_fundamental() {
        let rs = system("A2");
        let poset = bonds_build(&rs, &Weight::from_ints(&[1, 0])).unwrap();
        // chain e < s1 < s2s1 with unit bonds
        assert_eq!(poset.len(), 3);
        let mut covers = poset.covers().to_vec();
        covers.sort();
        assert_eq!(covers, vec![(0, 1, 1), (1, 2, 1)]);
        assert_eq!(poset.n_lambda(), 1);
        assert!(poset.less(0, 2));
        assert_eq!(poset.bond(0, 2), Some(1));
    }

    #[test]
    fn regular_shape_has_full_quotient() {
        let rs = system("A2");
        let poset = bonds_build(&rs, &Weight::from_ints(&[1, 1])).unwrap();
        assert_eq!(poset.len(), 6);
    }

    #[test]
    fn ls_paths_a1() {
        let rs = system("A1");
        let family = ls_paths(&rs, &Weight::from_ints(&[2])).unwrap();
        assert_eq!(family.len(), 3);
        // the bent path subdivides at 1/2 and realizes the reflected
        // direction first
        let bent: Vec<&LSPath> = family.paths.iter().filter(|p| p.chain().len() == 2).collect();
        assert_eq!(bent.len(), 1);
        assert_eq!(bent[0].cuts(), &[rat(1) / rat(2)]);
        let poset = family.poset.as_ref().unwrap();
        let realized = bent[0].realized(poset);
        assert_eq!(
            realized.segments(),
            &[
                (Weight::from_ints(&[-2]), rat(1) / rat(2)),
                (Weight::from_ints(&[2]), rat(1) / rat(2)),
            ]
        );
        assert!(realized.endpoint().is_zero());
    }

    #[test]
    fn ls_paths_a2_fundamental_has_no_subdivisions() {
        let rs = system("A2");
        let family = ls_paths(&rs, &Weight::from_ints(&[1, 0])).unwrap();
        assert_eq!(family.len(), 3);
        assert!(family.paths.iter().all(|p| p.chain().len() == 1));
    }

    #[test]
    fn zero_shape_family() {
        let rs = system("A2");
        let family = ls_paths(&rs, &Weight::zero(2)).unwrap();
        assert_eq!(family.len(), 1);
        assert!(family.realized[0].is_zero());
    }

    #[test]
    fn lowering_the_dominant_path() {
        let rs = system("A1");
        let pi = Path::straight(&Weight::from_ints(&[1]));
        let lowered = root_op(&rs, &pi, 0, OpDirection::Lower).unwrap();
        assert_eq!(lowered, Path::straight(&Weight::from_ints(&[-1])));
        assert!(root_op(&rs, &pi, 0, OpDirection::Raise).is_none());
        assert!(root_op(&rs, &lowered, 0, OpDirection::Lower).is_none());
    }

    #[test]
    fn lowering_twice_passes_through_zero() {
        let rs = system("A1");
        let pi = Path::straight(&Weight::from_ints(&[2]));
        let once = root_op(&rs, &pi, 0, OpDirection::Lower).unwrap();
        assert_eq!(once.endpoint(), Weight::zero(1));
        let twice = root_op(&rs, &once, 0, OpDirection::Lower).unwrap();
        assert_eq!(twice, Path::straight(&Weight::from_ints(&[-2])));
        assert!(root_op(&rs, &twice, 0, OpDirection::Lower).is_none());
    }

    #[test]
    fn raising_is_undefined_on_dominant_paths() {
        let rs = system("B2");
        for lambda in [[1i64, 0], [0, 1], [2, 1]] {
            let pi = Path::straight(&Weight::from_ints(&lambda));
            for i in 0..2 {
                assert!(root_op(&rs, &pi, i, OpDirection::Raise).is_none());
            }
        }
    }

    #[test]
    fn operators_are_mutually_inverse() {
        let rs = system("B2");
        let family = ls_paths(&rs, &Weight::from_ints(&[1, 1])).unwrap();
        for path in &family.realized {
            for i in 0..2 {
                if let Some(lowered) = root_op(&rs, path, i, OpDirection::Lower) {
                    let back = root_op(&rs, &lowered, i, OpDirection::Raise).unwrap();
                    assert_eq!(&back, path);
                }
                if let Some(raised) = root_op(&rs, path, i, OpDirection::Raise) {
                    let back = root_op(&rs, &raised, i, OpDirection::Lower).unwrap();
                    assert_eq!(&back, path);
                }
            }
        }
    }

    #[test]
    fn crystal_sizes() {
        let rs = system("A1");
        let crystal = crystal_generate(&rs, &Path::straight(&Weight::from_ints(&[2])), 1000).unwrap();
        assert_eq!(crystal.len(), 3);
        assert_eq!(crystal.edges.len(), 2);

        let rs = system("A2");
        let crystal =
            crystal_generate(&rs, &Path::straight(&Weight::from_ints(&[1, 1])), 1000).unwrap();
        assert_eq!(crystal.len(), 8);
        assert_eq!(crystal.heads(&rs), vec![0]);

        let zero = crystal_generate(&rs, &Path::zero(2), 1000).unwrap();
        assert_eq!(zero.len(), 1);
    }

    #[test]
    fn crystal_cap_is_enforced() {
        let rs = system("A2");
        let result = crystal_generate(&rs, &Path::straight(&Weight::from_ints(&[1, 1])), 4);
        assert!(matches!(result, Err(Error::CrystalCapExceeded { cap: 4 })));
    }

    #[test]
    fn methods_agree_on_small_shapes() {
        let rs = system("A2");
        let methods = path_methods();
        for lambda in [[0i64, 1], [1, 1], [2, 0]] {
            let w = Weight::from_ints(&lambda);
            let results: Vec<Vec<Path>> =
                methods.iter().map(|m| m.enumerate(&rs, &w).unwrap()).collect();
            assert_eq!(results[0], results[1], "methods disagree at {w}");
        }
    }

    #[test]
    fn words_of_a1_paths() {
        let rs = system("A1");
        let family = ls_paths(&rs, &Weight::from_ints(&[2])).unwrap();
        let poset = family.poset.as_ref().unwrap();
        for path in &family.paths {
            let word = path.word(poset);
            assert_eq!(word.len(), 2);
            match path.chain().len() {
                1 => assert_eq!(word[0], word[1]),
                2 => {
                    // the word spells the chain in increasing order: (e, s)
                    assert_eq!(word, vec![0, 1]);
                }
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn chain_gcd_independence_small() {
        let rs = system("B2");
        let poset = bonds_build(&rs, &Weight::from_ints(&[1, 1])).unwrap();
        for x in 0..poset.len() {
            for y in 0..poset.len() {
                if poset.less(x, y) {
                    let gcds = poset.chain_gcds(x, y);
                    assert_eq!(gcds.len(), 1, "chain gcds differ between {x} and {y}");
                    assert_eq!(gcds.iter().next().copied(), poset.bond(x, y));
                }
            }
        }
    }

    #[test]
    fn window_extraction_inverts_concat() {
        let rs = system("A1");
        let family = ls_paths(&rs, &Weight::from_ints(&[2])).unwrap();
        let half = rat(1) / rat(2);
        for a in &family.realized {
            for b in &family.realized {
                let joined = Path::concat(&[a, b]);
                assert_eq!(joined.endpoint(), &a.endpoint() + &b.endpoint());
                assert_eq!(&joined.window(&Rat::zero(), &half), a);
                assert_eq!(&joined.window(&half, &rat(1)), b);
            }
        }
        let _ = rs;
    }

    #[test]
    fn components_have_a_unique_dominant_head() {
        let rs = system("A2");
        // straight seeds over a small box of shapes
        let mut seeds = Vec::new();
        for a in 0..=2i64 {
            for b in 0..=2i64 {
                if a + b > 0 {
                    seeds.push(Path::straight(&Weight::from_ints(&[a, b])));
                }
            }
        }
        // and some concatenated seeds, from heads and from deeper elements
        let family = ls_paths(&rs, &Weight::from_ints(&[1, 0])).unwrap();
        for a in &family.realized {
            for b in &family.realized {
                seeds.push(Path::concat(&[a, b]));
            }
        }
        for seed in &seeds {
            let crystal = crystal_generate(&rs, seed, 10_000).unwrap();
            let heads = crystal.heads(&rs);
            assert_eq!(heads.len(), 1, "component of {seed:?} has {} heads", heads.len());
            assert!(crystal.paths[heads[0]].is_dominant());
        }
    }

    #[test]
    fn endpoint_multiset_matches_character() {
        let rs = system("A2");
        let lambda = Weight::from_ints(&[1, 1]);
        let family = ls_paths(&rs, &lambda).unwrap();
        let mut counts: HashMap<Weight, i64> = HashMap::new();
        for p in &family.realized {
            *counts.entry(p.endpoint()).or_insert(0) += 1;
        }
        let character = crate::cartan::full_character(&rs, &lambda).unwrap();
        assert_eq!(counts.len(), character.len());
        for (w, m) in character {
            assert_eq!(num::BigInt::from(counts[&w]), m);
        }
    }
}
