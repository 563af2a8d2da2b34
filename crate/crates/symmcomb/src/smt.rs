//! Standard monomials for the ring of sections.
//!
//! A monomial is a vector of boundary-section exponents together with a list
//! of LS paths of basis shapes. Standardness is decided by raising the
//! concatenated path to the head of its crystal component; enumeration
//! generates components by lowering from the head, which is output-sensitive.
//! The monomial order refines vanishing orders by a word comparison.

use std::collections::BTreeSet;

use num::Zero;

use crate::cartan::Weight;
use crate::lspath::{self, LSPath, Path, ShapeFamily};
use crate::satake::Symmetric;
use crate::{rat, Error, Int, Result};

/// Boundary exponents plus LS-path factors of basis shapes, the factors
/// sorted by basis index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: Vec<i64>,
    factors: Vec<(usize, LSPath)>,
}

impl Monomial {
    pub fn new(exponents: Vec<i64>, factors: Vec<(usize, LSPath)>) -> Monomial {
        assert!(factors.windows(2).all(|w| w[0].0 <= w[1].0), "factors must be sorted");
        assert!(exponents.iter().all(|&n| n >= 0));
        Monomial { exponents, factors }
    }

    /// The order of vanishing `v(x)`: the boundary exponents.
    pub fn vanishing_order(&self) -> &[i64] {
        &self.exponents
    }

    pub fn factors(&self) -> &[(usize, LSPath)] {
        &self.factors
    }
}

/// Outcome of the two-stage monomial comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrdering {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// Both sides of a dimension identity, itemized.
#[derive(Debug, Clone)]
pub struct DimensionReport {
    pub lambda: Weight,
    pub orbit_set: Vec<usize>,
    pub standard_count: usize,
    pub expected: Int,
    pub terms: Vec<(Weight, Int)>,
    pub pass: bool,
}

/// Standard-monomial machinery over one symmetric variety; holds the path
/// families of the basis shapes.
pub struct StandardMonomials<'a> {
    sym: &'a Symmetric,
    families: Vec<ShapeFamily>,
}

impl<'a> StandardMonomials<'a> {
    pub fn new(sym: &'a Symmetric) -> Result<StandardMonomials<'a>> {
        let families = sym
            .lattice()
            .theta()
            .iter()
            .map(|theta| lspath::ls_paths(sym.root_system(), theta))
            .collect::<Result<Vec<_>>>()?;
        Ok(StandardMonomials { sym, families })
    }

    pub fn symmetric(&self) -> &Symmetric {
        self.sym
    }

    /// The path family of the h-th basis shape.
    pub fn family(&self, h: usize) -> &ShapeFamily {
        &self.families[h]
    }

    /// `λ(x) = Σ n_i α̃_i + Σ θ_{h_j}`.
    pub fn shape(&self, x: &Monomial) -> Weight {
        let mut out = self.flag_shape(x);
        for (i, &n) in x.exponents.iter().enumerate() {
            if n != 0 {
                out = &out + &self.sym.restricted().base()[i].scale(&rat(n));
            }
        }
        out
    }

    /// `μ(x) = λ(x) - Σ n_i α̃_i`, the shape of the path part.
    pub fn flag_shape(&self, x: &Monomial) -> Weight {
        let mut out = Weight::zero(self.sym.rank());
        for (h, _) in &x.factors {
            out = &out + &self.sym.lattice().theta()[*h];
        }
        out
    }

    fn concat_factors(&self, factors: &[(usize, LSPath)]) -> Path {
        let realized: Vec<Path> = factors
            .iter()
            .map(|(h, p)| p.realized(self.families[*h].poset.as_ref().expect("nonzero shape")))
            .collect();
        Path::concat(&realized.iter().collect::<Vec<_>>())
    }

    fn head_concat(&self, factor_shapes: &[usize]) -> Path {
        let straights: Vec<Path> =
            factor_shapes.iter().map(|&h| self.families[h].head()).collect();
        Path::concat(&straights.iter().collect::<Vec<_>>())
    }

    /// A factor list is standard when its concatenation raises to the
    /// concatenation of the straight basis paths. The raising order does not
    /// matter: a component has a unique fully raised element.
    pub fn is_standard(&self, factors: &[(usize, LSPath)]) -> Result<bool> {
        if !factors.windows(2).all(|w| w[0].0 <= w[1].0) {
            return Err(Error::InvalidWeight("factors must be sorted by basis index".into()));
        }
        let concatenated = self.concat_factors(factors);
        let head = lspath::raise_to_head(self.sym.root_system(), &concatenated);
        let shapes: Vec<usize> = factors.iter().map(|(h, _)| *h).collect();
        Ok(head == self.head_concat(&shapes))
    }

    /// All standard monomials of shape `λ` with zero exponents on the orbit
    /// set `I`.
    pub fn enumerate_standard(
        &self,
        lambda: &Weight,
        orbit_set: &BTreeSet<usize>,
    ) -> Result<Vec<Monomial>> {
        if !self.sym.lattice().in_pic(lambda) {
            return Err(Error::NotInLattice(format!("{lambda} is not in the Picard lattice")));
        }
        let rs = self.sym.root_system();
        let mut out = Vec::new();
        for (exponents, mu) in self.sym.dominant_below(lambda, orbit_set) {
            let theta_coords = self.sym.lattice().theta_coordinates(&mu).ok_or_else(|| {
                Error::Inconsistent(format!("dominant residue {mu} escapes the basis lattice"))
            })?;
            let mut shapes: Vec<usize> = Vec::new();
            for (h, count) in theta_coords.iter().enumerate() {
                let count = i64::try_from(count.clone())
                    .map_err(|_| Error::Inconsistent("basis coordinate overflow".into()))?;
                if count < 0 {
                    return Err(Error::Inconsistent(format!(
                        "dominant residue {mu} has a negative basis coordinate"
                    )));
                }
                shapes.extend(std::iter::repeat(h).take(count as usize));
            }
            let head = self.head_concat(&shapes);
            let component = lspath::lower_closure(rs, &head, rs.limits().crystal_cap)?;
            for path in component {
                out.push(Monomial {
                    exponents: exponents.clone(),
                    factors: self.split_factors(&path, &shapes)?,
                });
            }
        }
        out.sort();
        Ok(out)
    }

    /// Splits a component element at the uniform factor windows and maps
    /// each piece back to its LS path.
    fn split_factors(&self, path: &Path, shapes: &[usize]) -> Result<Vec<(usize, LSPath)>> {
        let u = shapes.len();
        let mut factors = Vec::with_capacity(u);
        for (j, &h) in shapes.iter().enumerate() {
            let from = rat(j as i64) / rat(u as i64);
            let to = rat(j as i64 + 1) / rat(u as i64);
            let piece = path.window(&from, &to);
            let &k = self.families[h].index.get(&piece).ok_or_else(|| {
                Error::Inconsistent("component element does not split into basis paths".into())
            })?;
            factors.push((h, self.families[h].paths[k].clone()));
        }
        Ok(factors)
    }

    /// The word of the path part: juxtaposition of the factor words.
    pub fn word(&self, x: &Monomial) -> Vec<usize> {
        let mut letters = Vec::new();
        for (h, p) in &x.factors {
            letters.extend(p.word(self.families[*h].poset.as_ref().expect("nonzero shape")));
        }
        letters
    }

    fn block_lengths(&self, x: &Monomial) -> Vec<usize> {
        x.factors
            .iter()
            .map(|(h, _)| {
                self.families[*h].poset.as_ref().expect("nonzero shape").n_lambda() as usize
            })
            .collect()
    }

    /// Two-stage partial order on monomials of a common shape: strict
    /// componentwise dominance of vanishing orders first (deeper vanishing
    /// is smaller), then the word comparison against the blockwise minimal
    /// rearrangement.
    pub fn compare(&self, x: &Monomial, y: &Monomial) -> Result<MonomialOrdering> {
        if self.shape(x) != self.shape(y) {
            return Err(Error::InvalidWeight(
                "monomials of different shapes are not compared".into(),
            ));
        }
        if x == y {
            return Ok(MonomialOrdering::Equal);
        }
        let xv = &x.exponents;
        let yv = &y.exponents;
        if xv != yv {
            let x_dominates = xv.iter().zip(yv).all(|(a, b)| a >= b);
            let y_dominates = xv.iter().zip(yv).all(|(a, b)| a <= b);
            return Ok(if x_dominates {
                MonomialOrdering::Less
            } else if y_dominates {
                MonomialOrdering::Greater
            } else {
                MonomialOrdering::Incomparable
            });
        }
        let wx = self.word(x);
        let wy = self.word(y);
        let less = wx <= blockwise_sorted(&wy, &self.block_lengths(y));
        let greater = wy <= blockwise_sorted(&wx, &self.block_lengths(x));
        Ok(match (less, greater) {
            (true, false) => MonomialOrdering::Less,
            (false, true) => MonomialOrdering::Greater,
            (false, false) => MonomialOrdering::Incomparable,
            (true, true) => MonomialOrdering::Equal,
        })
    }

    /// Checks `|standard monomials| = Σ dim V_μ` over the admissible
    /// dominant residues; the central self-check of the construction.
    pub fn verify_dimension(
        &self,
        lambda: &Weight,
        orbit_set: &BTreeSet<usize>,
    ) -> Result<DimensionReport> {
        let standard_count = self.enumerate_standard(lambda, orbit_set)?.len();
        let rs = self.sym.root_system();
        let mut expected = Int::zero();
        let mut terms = Vec::new();
        for (_, mu) in self.sym.dominant_below(lambda, orbit_set) {
            let dim = rs.weyl_dim(&mu)?;
            expected += &dim;
            terms.push((mu, dim));
        }
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let pass = Int::from(standard_count) == expected;
        Ok(DimensionReport {
            lambda: lambda.clone(),
            orbit_set: orbit_set.iter().copied().collect(),
            standard_count,
            expected,
            terms,
            pass,
        })
    }
}

/// Sorts the letters inside each block, producing the lexicographically
/// minimal blockwise rearrangement.
fn blockwise_sorted(word: &[usize], blocks: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(word.len());
    let mut at = 0;
    for &len in blocks {
        let mut block: Vec<usize> = word[at..at + len].to_vec();
        block.sort_unstable();
        out.extend(block);
        at += len;
    }
    debug_assert_eq!(at, word.len());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lspath::{root_op, OpDirection};
    use crate::satake::{preset, Symmetric};
    use crate::Limits;

    fn symmetric(name: &str) -> Symmetric {
        Symmetric::build(preset(name).unwrap(), Limits::default()).unwrap()
    }

    /// The three LS paths of the A1-split basis shape 2ω, by chain length:
    /// straight dominant, straight anti-dominant, bent.
    fn a1_paths(smt: &StandardMonomials) -> (LSPath, LSPath, LSPath) {
        let family = smt.family(0);
        assert_eq!(family.len(), 3);
        let poset = family.poset.as_ref().unwrap();
        let up = family
            .paths
            .iter()
            .find(|p| p.chain().len() == 1 && poset.element(p.chain()[0]).rep.is_identity())
            .unwrap();
        let down = family
            .paths
            .iter()
            .find(|p| p.chain().len() == 1 && !poset.element(p.chain()[0]).rep.is_identity())
            .unwrap();
        let bent = family.paths.iter().find(|p| p.chain().len() == 2).unwrap();
        (up.clone(), down.clone(), bent.clone())
    }

    #[test]
    fn single_factors_are_standard() {
        let sym = symmetric("A1-split");
        let smt = StandardMonomials::new(&sym).unwrap();
        for p in &smt.family(0).paths {
            assert!(smt.is_standard(&[(0, p.clone())]).unwrap());
        }
    }

    #[test]
    fn standard_pairs_of_a1() {
        let sym = symmetric("A1-split");
        let smt = StandardMonomials::new(&sym).unwrap();
        let (up, down, bent) = a1_paths(&smt);
        // the straight dominant pair is the head itself
        assert!(smt.is_standard(&[(0, up.clone()), (0, up.clone())]).unwrap());
        // exactly 5 of the 9 ordered pairs are standard
        let all = [up.clone(), down.clone(), bent.clone()];
        let mut standard = 0;
        for a in &all {
            for b in &all {
                if smt.is_standard(&[(0, a.clone()), (0, b.clone())]).unwrap() {
                    standard += 1;
                }
            }
        }
        assert_eq!(standard, 5);
        // the reversed Cartan pair is not standard
        assert!(!smt.is_standard(&[(0, up), (0, down)]).unwrap());
    }

    #[test]
    fn standardness_is_raising_order_invariant() {
        let sym = symmetric("A2-swap");
        let smt = StandardMonomials::new(&sym).unwrap();
        let rs = sym.root_system();
        // raise with both color priorities and compare termini
        let raise_with = |path: &Path, order: &[usize]| -> Path {
            let mut current = path.clone();
            'outer: loop {
                for &i in order {
                    if let Some(next) = root_op(rs, &current, i, OpDirection::Raise) {
                        current = next;
                        continue 'outer;
                    }
                }
                return current;
            }
        };
        let f0 = smt.family(0);
        let f1 = smt.family(1);
        for a in &f0.realized {
            for b in &f1.realized {
                let concat = Path::concat(&[a, b]);
                let one = raise_with(&concat, &[0, 1]);
                let two = raise_with(&concat, &[1, 0]);
                assert_eq!(one, two);
            }
        }
    }

    #[test]
    fn enumeration_counts_for_a1() {
        let sym = symmetric("A1-split");
        let smt = StandardMonomials::new(&sym).unwrap();
        let lambda = Weight::from_ints(&[4]);
        let all = smt.enumerate_standard(&lambda, &BTreeSet::new()).unwrap();
        assert_eq!(all.len(), 6);
        // one monomial with the boundary exponent, five without
        assert_eq!(all.iter().filter(|m| m.vanishing_order() == [1]).count(), 1);
        assert_eq!(all.iter().filter(|m| m.vanishing_order() == [0]).count(), 5);

        let without = smt.enumerate_standard(&lambda, &BTreeSet::from([0])).unwrap();
        assert_eq!(without.len(), 5);
        assert!(without.iter().all(|m| m.vanishing_order() == [0]));

        let zero_only = smt.enumerate_standard(&Weight::zero(1), &BTreeSet::new()).unwrap();
        assert_eq!(zero_only.len(), 1);
        assert!(zero_only[0].factors().is_empty());

        assert!(smt.enumerate_standard(&Weight::from_ints(&[1]), &BTreeSet::new()).is_err());
    }

    #[test]
    fn enumerated_monomials_are_standard() {
        let sym = symmetric("A1-split");
        let smt = StandardMonomials::new(&sym).unwrap();
        for m in smt.enumerate_standard(&Weight::from_ints(&[4]), &BTreeSet::new()).unwrap() {
            assert!(smt.is_standard(m.factors()).unwrap());
            assert_eq!(smt.shape(&m), Weight::from_ints(&[4]));
        }
    }

    #[test]
    fn dimension_identities_for_a1() {
        let sym = symmetric("A1-split");
        let smt = StandardMonomials::new(&sym).unwrap();
        let lambda = Weight::from_ints(&[4]);
        let report = smt.verify_dimension(&lambda, &BTreeSet::new()).unwrap();
        assert!(report.pass);
        assert_eq!(report.standard_count, 6);
        assert_eq!(report.expected, Int::from(6));
        assert_eq!(report.terms.len(), 2);

        let report = smt.verify_dimension(&lambda, &BTreeSet::from([0])).unwrap();
        assert!(report.pass);
        assert_eq!(report.standard_count, 5);
    }

    #[test]
    fn full_orbit_set_gives_flag_case() {
        // with every boundary index excluded only μ = λ survives
        let sym = symmetric("A2-swap");
        let smt = StandardMonomials::new(&sym).unwrap();
        let all: BTreeSet<usize> = (0..sym.restricted_rank()).collect();
        let lambda = Weight::from_ints(&[2, 1]);
        let report = smt.verify_dimension(&lambda, &all).unwrap();
        assert!(report.pass);
        assert_eq!(
            Int::from(report.standard_count),
            sym.root_system().weyl_dim(&lambda).unwrap()
        );
    }

    #[test]
    fn compare_by_vanishing_order() {
        let sym = symmetric("A1-split");
        let smt = StandardMonomials::new(&sym).unwrap();
        let (up, down, _) = a1_paths(&smt);
        // shape 4ω both ways: s¹ versus a path pair
        let x = Monomial::new(vec![1], vec![]);
        let y = Monomial::new(vec![0], vec![(0, up), (0, down)]);
        assert_eq!(smt.compare(&x, &y).unwrap(), MonomialOrdering::Less);
        assert_eq!(smt.compare(&y, &x).unwrap(), MonomialOrdering::Greater);
        assert_eq!(smt.compare(&x, &x).unwrap(), MonomialOrdering::Equal);
    }

    #[test]
    fn compare_by_words() {
        let sym = symmetric("A1-split");
        let smt = StandardMonomials::new(&sym).unwrap();
        let (up, down, bent) = a1_paths(&smt);
        let x = Monomial::new(vec![0], vec![(0, up), (0, down)]);
        let y = Monomial::new(vec![0], vec![(0, bent.clone()), (0, bent)]);
        // w(x) = (e,e,s,s) against the already-sorted w(y) = (e,s,e,s)
        assert_eq!(smt.compare(&x, &y).unwrap(), MonomialOrdering::Less);
        assert_eq!(smt.compare(&y, &x).unwrap(), MonomialOrdering::Greater);
    }

    #[test]
    fn compare_rejects_shape_mismatch() {
        let sym = symmetric("A1-split");
        let smt = StandardMonomials::new(&sym).unwrap();
        let x = Monomial::new(vec![1], vec![]);
        let y = Monomial::new(vec![0], vec![]);
        assert!(smt.compare(&x, &y).is_err());
    }

    #[test]
    fn order_is_transitive_on_a_shape_class() {
        let sym = symmetric("A1-split");
        let smt = StandardMonomials::new(&sym).unwrap();
        let lambda = Weight::from_ints(&[4]);
        // all monomials of the shape, standard or not
        let family = smt.family(0);
        let mut monomials = vec![Monomial::new(vec![1], vec![])];
        for a in &family.paths {
            for b in &family.paths {
                monomials.push(Monomial::new(vec![0], vec![(0, a.clone()), (0, b.clone())]));
            }
        }
        let less = |x: &Monomial, y: &Monomial| {
            matches!(smt.compare(x, y).unwrap(), MonomialOrdering::Less)
        };
        for x in &monomials {
            assert_eq!(smt.shape(x), lambda);
            for y in &monomials {
                // antisymmetry
                if less(x, y) {
                    assert!(!less(y, x));
                }
                for z in &monomials {
                    if less(x, y) && less(y, z) {
                        assert!(less(x, z), "transitivity failed");
                    }
                }
            }
        }
    }

    #[test]
    fn multidegree_refinement() {
        // for a fixed exponent vector the standard count is the dimension of
        // the residual shape
        let sym = symmetric("A2-swap");
        let smt = StandardMonomials::new(&sym).unwrap();
        let rs = sym.root_system();
        let lambda = Weight::from_ints(&[2, 2]);
        let all = smt.enumerate_standard(&lambda, &BTreeSet::new()).unwrap();
        for n in 0..=2i64 {
            let count = all.iter().filter(|m| m.vanishing_order() == [n]).count();
            let residual = &lambda - &sym.restricted().base()[0].scale(&crate::rat(n));
            assert_eq!(Int::from(count), rs.weyl_dim(&residual).unwrap());
        }
    }

    #[test]
    fn orbit_restriction_is_monotone() {
        let sym = symmetric("A2-swap");
        let smt = StandardMonomials::new(&sym).unwrap();
        let lambda = Weight::from_ints(&[2, 2]);
        let all = smt.enumerate_standard(&lambda, &BTreeSet::new()).unwrap();
        let restricted = smt.enumerate_standard(&lambda, &BTreeSet::from([0])).unwrap();
        let full: BTreeSet<_> = all.iter().collect();
        assert!(restricted.iter().all(|m| full.contains(m)));
        assert!(restricted.len() <= all.len());
    }
}
