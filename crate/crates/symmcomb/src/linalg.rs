//! Small exact linear algebra helpers: rational Gaussian elimination and
//! integer column Hermite normal forms for lattice membership tests.

use num::{Signed, Zero};

use crate::{rat, Int, Rat};

pub type RatMat = Vec<Vec<Rat>>;

pub fn identity(n: usize) -> RatMat {
    (0..n)
        .map(|i| (0..n).map(|j| rat((i == j) as i64)).collect())
        .collect()
}

pub fn mat_mul(a: &RatMat, b: &RatMat) -> RatMat {
    let n = a.len();
    let m = b[0].len();
    let k = b.len();
    let mut out = vec![vec![Rat::zero(); m]; n];
    for i in 0..n {
        for l in 0..k {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..m {
                out[i][j] += &a[i][l] * &b[l][j];
            }
        }
    }
    out
}

pub fn mat_vec(a: &RatMat, v: &[Rat]) -> Vec<Rat> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

/// Inverse by Gauss-Jordan elimination; `None` on a singular matrix.
pub fn inverse(a: &RatMat) -> Option<RatMat> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a.iter().map(|r| r.to_vec()).collect();
    let mut inv = identity(n);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        inv.swap(col, pivot);
        let p = m[col][col].clone();
        for j in 0..n {
            m[col][j] /= &p;
            inv[col][j] /= &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in 0..n {
                    let t = &f * &m[col][j];
                    m[r][j] -= t;
                    let t = &f * &inv[col][j];
                    inv[r][j] -= t;
                }
            }
        }
    }
    Some(inv)
}

/// Solves `A x = b` exactly for a matrix with full column rank.
/// Returns `None` when the system is inconsistent or underdetermined.
pub fn solve(a: &RatMat, b: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut row = r.to_vec();
            row.push(v.clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let p = m[rank][col].clone();
        for j in col..=cols {
            m[rank][j] /= &p;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..=cols {
                    let t = &f * &m[rank][j];
                    m[r][j] -= t;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if rank < cols {
        return None;
    }
    // inconsistent rows
    for r in rank..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![Rat::zero(); cols];
    for (r, &col) in pivots.iter().enumerate() {
        x[col] = m[r][cols].clone();
    }
    Some(x)
}

/// Leading principal minors, used for the finite-type test.
pub fn principal_minors(a: &RatMat) -> Vec<Rat> {
    (1..=a.len()).map(|k| determinant_sub(a, k)).collect()
}

fn determinant_sub(a: &RatMat, k: usize) -> Rat {
    let mut m: Vec<Vec<Rat>> = a[..k].iter().map(|r| r[..k].to_vec()).collect();
    let mut det = rat(1);
    for col in 0..k {
        let Some(pivot) = (col..k).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot != col {
            m.swap(col, pivot);
            det = -det;
        }
        det *= &m[col][col].clone();
        let p = m[col][col].clone();
        for r in col + 1..k {
            if !m[r][col].is_zero() {
                let f = &m[r][col] / &p;
                for j in col..k {
                    let t = &f * &m[col][j];
                    m[r][j] -= t;
                }
            }
        }
    }
    det
}

/// Column-style Hermite normal form of an integer lattice, supporting
/// membership tests and coordinate solves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    dim: usize,
    /// Echelon basis columns; `pivots[k]` is the pivot row of column `k`.
    cols: Vec<Vec<Int>>,
    pivots: Vec<usize>,
}

impl Lattice {
    /// Builds the lattice spanned by the given integer vectors.
    pub fn from_generators(dim: usize, generators: &[Vec<Int>]) -> Lattice {
        let mut cols: Vec<Vec<Int>> = Vec::new();
        for g in generators {
            assert_eq!(g.len(), dim);
            cols.push(g.clone());
        }
        let (cols, pivots) = hermite(dim, cols);
        Lattice { dim, cols, pivots }
    }

    pub fn rank(&self) -> usize {
        self.cols.len()
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Int]) -> Option<Vec<Int>> {
        assert_eq!(v.len(), self.dim);
        let mut rem: Vec<Int> = v.to_vec();
        let mut coords = Vec::with_capacity(self.cols.len());
        for (k, col) in self.cols.iter().enumerate() {
            let p = self.pivots[k];
            let q = &rem[p] / &col[p];
            if &rem[p] != &(&q * &col[p]) {
                return None;
            }
            for i in 0..self.dim {
                let t = &q * &col[i];
                rem[i] -= t;
            }
            coords.push(q);
        }
        if rem.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        self.coordinates(v).is_some()
    }
}

/// Reduces integer columns to a canonical column echelon form.
fn hermite(dim: usize, mut cols: Vec<Vec<Int>>) -> (Vec<Vec<Int>>, Vec<usize>) {
    let mut done: Vec<Vec<Int>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for row in 0..dim {
        // gcd-sweep all remaining columns on this row
        loop {
            let mut nonzero: Vec<usize> = (0..cols.len()).filter(|&c| !cols[c][row].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            nonzero.sort_by_key(|&c| cols[c][row].abs());
            let small = nonzero[0];
            for &c in &nonzero[1..] {
                let q = &cols[c][row] / &cols[small][row];
                for i in 0..dim {
                    let t = &q * &cols[small][i];
                    cols[c][i] -= t;
                }
            }
        }
        if let Some(c) = (0..cols.len()).find(|&c| !cols[c][row].is_zero()) {
            let mut col = cols.remove(c);
            if col[row].is_negative() {
                for x in col.iter_mut() {
                    *x = -x.clone();
                }
            }
            // reduce earlier columns above this pivot
            for prev in done.iter_mut() {
                let q = div_floor(&prev[row], &col[row]);
                if !q.is_zero() {
                    for i in 0..dim {
                        let t = &q * &col[i];
                        prev[i] -= t;
                    }
                }
            }
            done.push(col);
            pivots.push(row);
        }
    }
    (done, pivots)
}

fn div_floor(a: &Int, b: &Int) -> Int {
    use num::Integer;
    a.div_floor(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    #[test]
    fn inverse_of_cartan_a2() {
        let a = vec![vec![rat(2), rat(-1)], vec![rat(-1), rat(2)]];
        let inv = inverse(&a).unwrap();
        let prod = mat_mul(&a, &inv);
        assert_eq!(prod, identity(2));
    }

    #[test]
    fn solve_unique() {
        let a = vec![vec![rat(1), rat(1)], vec![rat(0), rat(2)], vec![rat(1), rat(3)]];
        let b = vec![rat(3), rat(4), rat(7)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x, vec![rat(1), rat(2)]);
        let bad = vec![rat(3), rat(4), rat(8)];
        assert!(solve(&a, &bad).is_none());
    }

    #[test]
    fn lattice_membership() {
        // sublattice of Z^2 generated by (2,0) and (0,1)
        let l = Lattice::from_generators(2, &[vec![int(2), int(0)], vec![int(0), int(1)]]);
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&[int(4), int(3)]));
        assert!(!l.contains(&[int(1), int(0)]));
        // same lattice from redundant generators hits the same echelon form
        let l2 = Lattice::from_generators(
            2,
            &[vec![int(2), int(1)], vec![int(0), int(1)], vec![int(2), int(3)]],
        );
        assert_eq!(l, l2);
    }
}
