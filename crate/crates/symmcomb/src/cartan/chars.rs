//! Exact character arithmetic: Freudenthal weight multiplicities and the
//! brute-force tensor product oracle by iterated subtraction of characters.

use std::collections::{BTreeMap, HashMap};

use num::{Signed, ToPrimitive, Zero};

use crate::cartan::{RootSystem, Weight};
use crate::{rat, Error, Int, Rat, Result};

/// Weight multiplicities of the irreducible module `V_λ`, restricted to the
/// dominant weights of its support, computed by Freudenthal's recursion.
pub fn dominant_character(rs: &RootSystem, lambda: &Weight) -> Result<Vec<(Weight, Int)>> {
    if !lambda.is_integral() || !lambda.is_dominant() {
        return Err(Error::InvalidWeight(format!("{lambda} is not dominant integral")));
    }
    let support = dominant_support(rs, lambda);
    let rho = rs.rho();
    let shifted = lambda + &rho;
    let top_norm = rs.form(&shifted, &shifted);

    // sort by decreasing height so that every μ+kα term is already known
    let mut order: Vec<&Weight> = support.iter().collect();
    order.sort_by(|a, b| {
        (rs.height(b), b.coords()).partial_cmp(&(rs.height(a), a.coords())).unwrap()
    });

    let mut mult: HashMap<Weight, Int> = HashMap::new();
    for mu in order {
        if mu == lambda {
            mult.insert(mu.clone(), Int::from(1));
            continue;
        }
        let mut numerator = Rat::zero();
        for alpha in rs.positive_roots() {
            let mut k = 1i64;
            loop {
                let shifted_mu = mu + &alpha.weight.scale(&rat(k));
                let rep = rs.dominantize(&shifted_mu);
                let Some(m) = mult.get(&rep) else {
                    break;
                };
                numerator += rat(2)
                    * rs.form(&shifted_mu, &alpha.weight)
                    * Rat::from_integer(m.clone());
                k += 1;
            }
        }
        let mu_shift = mu + &rho;
        let denominator = &top_norm - rs.form(&mu_shift, &mu_shift);
        debug_assert!(denominator.is_positive());
        let value = numerator / denominator;
        if !value.is_integer() {
            return Err(Error::Inconsistent(format!(
                "non-integral Freudenthal multiplicity at {mu}"
            )));
        }
        mult.insert(mu.clone(), value.to_integer());
    }

    let mut out: Vec<(Weight, Int)> = support
        .into_iter()
        .map(|mu| {
            let m = mult.remove(&mu).unwrap();
            (mu, m)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// The full character of `V_λ` as an exact multiset of weights.
pub fn full_character(rs: &RootSystem, lambda: &Weight) -> Result<BTreeMap<Weight, Int>> {
    let mut out = BTreeMap::new();
    for (mu, m) in dominant_character(rs, lambda)? {
        for point in rs.orbit(&mu) {
            out.insert(point, m.clone());
        }
    }
    Ok(out)
}

/// Decomposes `V_λ ⊗ V_μ` into irreducibles by convolving exact characters
/// and repeatedly subtracting the character of the highest surviving
/// dominant term. Total dimension is conserved by construction.
pub fn decompose_product(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
) -> Result<Vec<(Weight, Int)>> {
    let ch_l = full_character(rs, lambda)?;
    let ch_m = full_character(rs, mu)?;
    let mut acc: BTreeMap<Weight, Int> = BTreeMap::new();
    for (wl, ml) in &ch_l {
        for (wm, mm) in &ch_m {
            let key = wl + wm;
            let entry = acc.entry(key).or_insert_with(Int::zero);
            *entry += ml * mm;
        }
    }
    acc.retain(|_, v| !v.is_zero());

    let mut char_cache: HashMap<Weight, BTreeMap<Weight, Int>> = HashMap::new();
    let mut components: Vec<(Weight, Int)> = Vec::new();
    while !acc.is_empty() {
        let nu = acc
            .keys()
            .max_by(|a, b| {
                (rs.height(a), a.coords()).partial_cmp(&(rs.height(b), b.coords())).unwrap()
            })
            .unwrap()
            .clone();
        if !nu.is_dominant() {
            return Err(Error::Inconsistent(format!(
                "maximal surviving term {nu} is not dominant"
            )));
        }
        let coeff = acc[&nu].clone();
        if coeff.is_negative() {
            return Err(Error::Inconsistent(format!(
                "negative multiplicity {coeff} at {nu}"
            )));
        }
        let ch_nu = match char_cache.get(&nu) {
            Some(c) => c.clone(),
            None => {
                let c = full_character(rs, &nu)?;
                char_cache.insert(nu.clone(), c.clone());
                c
            }
        };
        for (w, m) in &ch_nu {
            let entry = acc.entry(w.clone()).or_insert_with(Int::zero);
            *entry -= &coeff * m;
        }
        acc.retain(|_, v| !v.is_zero());
        components.push((nu, coeff));
    }
    components.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(components)
}

/// All dominant weights `μ ≤ λ` in the root order.
fn dominant_support(rs: &RootSystem, lambda: &Weight) -> Vec<Weight> {
    let bounds: Vec<i64> = rs
        .root_coords(lambda)
        .iter()
        .map(|c| c.floor().to_integer().to_i64().expect("support bound overflow"))
        .collect();
    let n = rs.rank();
    let mut out = Vec::new();
    let mut counters = vec![0i64; n];
    loop {
        let mut mu = lambda.clone();
        for i in 0..n {
            if counters[i] != 0 {
                mu = &mu - &rs.simple_root(i).weight.scale(&rat(counters[i]));
            }
        }
        if mu.is_dominant() {
            out.push(mu);
        }
        // odometer over the box
        let mut idx = 0;
        loop {
            if idx == n {
                out.sort();
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::{build_root_system, CartanDatum};
    use crate::Limits;

    fn system(name: &str) -> RootSystem {
        build_root_system(CartanDatum::from_name(name).unwrap(), Limits::default()).unwrap()
    }

    fn weights(rs: &RootSystem, items: &[(&[i64], i64)]) -> Vec<(Weight, Int)> {
        let _ = rs;
        let mut v: Vec<(Weight, Int)> = items
            .iter()
            .map(|(c, m)| (Weight::from_ints(c), Int::from(*m)))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }

    #[test]
    fn adjoint_of_a2() {
        let rs = system("A2");
        let ch = dominant_character(&rs, &Weight::from_ints(&[1, 1])).unwrap();
        // the adjoint module: highest weight with multiplicity 1, zero with 2
        assert_eq!(ch, weights(&rs, &[(&[1, 1], 1), (&[0, 0], 2)]));
        let full = full_character(&rs, &Weight::from_ints(&[1, 1])).unwrap();
        let total: Int = full.values().sum();
        assert_eq!(total, rs.weyl_dim(&Weight::from_ints(&[1, 1])).unwrap());
    }

    #[test]
    fn character_size_matches_dimension() {
        let rs = system("B2");
        for a in 0..=2i64 {
            for b in 0..=2i64 {
                let lambda = Weight::from_ints(&[a, b]);
                let full = full_character(&rs, &lambda).unwrap();
                let total: Int = full.values().sum();
                assert_eq!(total, rs.weyl_dim(&lambda).unwrap());
            }
        }
    }

    #[test]
    fn tensor_with_trivial() {
        let rs = system("B2");
        let lambda = Weight::from_ints(&[1, 1]);
        let out = decompose_product(&rs, &lambda, &Weight::zero(2)).unwrap();
        assert_eq!(out, weights(&rs, &[(&[1, 1], 1)]));
    }

    #[test]
    fn clebsch_gordan_a1() {
        let rs = system("A1");
        let two = Weight::from_ints(&[2]);
        let out = decompose_product(&rs, &two, &two).unwrap();
        assert_eq!(out, weights(&rs, &[(&[4], 1), (&[2], 1), (&[0], 1)]));
    }

    #[test]
    fn fundamental_pair_a2() {
        let rs = system("A2");
        let out = decompose_product(
            &rs,
            &Weight::from_ints(&[1, 0]),
            &Weight::from_ints(&[0, 1]),
        )
        .unwrap();
        // dimensions 3·3 = 8+1
        assert_eq!(out, weights(&rs, &[(&[1, 1], 1), (&[0, 0], 1)]));
    }

    #[test]
    fn product_dimension_conserved() {
        let rs = system("A2");
        let l = Weight::from_ints(&[2, 1]);
        let m = Weight::from_ints(&[1, 1]);
        let out = decompose_product(&rs, &l, &m).unwrap();
        let total: Int = out
            .iter()
            .map(|(nu, mult)| mult * rs.weyl_dim(nu).unwrap())
            .sum();
        assert_eq!(total, rs.weyl_dim(&l).unwrap() * rs.weyl_dim(&m).unwrap());
    }
}
