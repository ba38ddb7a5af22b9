//! Exact dense linear algebra over Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::{common_denominator, Rational};

pub type RatVector = Vec<Rational>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> RatMatrix {
        RatMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<RatVector>) -> RatMatrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
        }
        RatMatrix { rows: nrows, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> RatMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        RatMatrix::from_rows(
            cols,
            rows.iter().map(|r| r.iter().map(|&v| Rational::from(v)).collect()).collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> RatVector {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, o: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, o.rows);
        let mut m = RatMatrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let v = m.get(i, j) + &(a * b);
                        m.set(i, j, v);
                    }
                }
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Rows scaled to primitive integer vectors.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| {
                let row = self.row(r);
                let d = common_denominator(row.iter());
                row.iter().map(|v| v.numer() * (&d / v.denom())).collect()
            })
            .collect()
    }

    /// Fraction-free forward elimination. Returns the echelon rows and the
    /// pivot columns; pivot choice is the first nonzero entry in column order.
    fn bareiss(&self) -> (Vec<Vec<BigInt>>, Vec<usize>) {
        let mut a = self.integer_rows();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !a[i][c].is_zero()) else { continue };
            a.swap(r, p);
            for i in r + 1..self.rows {
                for j in c + 1..self.cols {
                    let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                    debug_assert!((&v % &prev).is_zero());
                    a[i][j] = v / &prev;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            pivots.push(c);
            r += 1;
        }
        a.truncate(r);
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.bareiss().1.len()
    }

    /// Reduced row echelon form of the row space (nonzero rows only) and
    /// its pivot columns.
    pub fn rref(&self) -> (Vec<RatVector>, Vec<usize>) {
        let (ech, pivots) = self.bareiss();
        let mut rows: Vec<RatVector> = ech
            .into_iter()
            .map(|row| {
                let g = row.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
                row.into_iter().map(|v| Rational::from(v / &g)).collect()
            })
            .collect();
        for (k, &c) in pivots.iter().enumerate().rev() {
            let inv = rows[k][c].recip();
            rows[k] = rows[k].iter().map(|v| v * &inv).collect();
            for i in 0..k {
                if rows[i][c].is_zero() {
                    continue;
                }
                let f = rows[i][c].clone();
                for j in c..self.cols {
                    if !rows[k][j].is_zero() {
                        let v = &rows[i][j] - &(&f * &rows[k][j]);
                        rows[i][j] = v;
                    }
                }
            }
        }
        (rows, pivots)
    }

    /// Inverse of a square matrix, or `None` when it is singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let aug: Vec<RatVector> = (0..n)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
                r
            })
            .collect();
        let (rows, pivots) = RatMatrix::from_rows(2 * n, aug).rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(RatMatrix::from_rows(n, rows.into_iter().map(|r| r[n..].to_vec()).collect()))
    }

    /// Basis of the right kernel: one vector per free column, with a 1 in
    /// that column and zeros in the other free columns.
    pub fn nullspace(&self) -> Vec<RatVector> {
        let (rows, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (k, &c) in pivots.iter().enumerate() {
                v[c] = -&rows[k][f];
            }
            basis.push(v);
        }
        basis
    }
}

/// Reduced echelon basis of the span of `vecs`; leading entries are 1.
pub fn echelon_basis(vecs: &[RatVector], len: usize) -> Vec<RatVector> {
    if vecs.is_empty() {
        return Vec::new();
    }
    RatMatrix::from_rows(len, vecs.to_vec()).rref().0
}

/// Rank of an integer matrix modulo a word-sized prime.
pub fn rank_mod_p(rows: &[Vec<i64>], cols: usize, p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| (v as i128).rem_euclid(p as i128) as u64).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][c], p - 2, p);
        for j in c..cols {
            a[rank][j] = mul_mod(a[rank][j], inv, p);
        }
        for i in 0..a.len() {
            if i != rank && a[i][c] != 0 {
                let f = a[i][c];
                for j in c..cols {
                    let t = mul_mod(f, a[rank][j], p);
                    a[i][j] = (a[i][j] + p - t) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(RatMatrix::identity(2).nullspace().is_empty());
    }

    #[test]
    fn inverse_times_matrix_is_identity() {
        let a = RatMatrix::from_i64(&[&[2, 1, 0], &[1, 1, 0], &[0, 3, 1]]);
        assert_eq!(a.inverse().unwrap().mul(&a), RatMatrix::identity(3));
        assert!(RatMatrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn zero_map_kernel_is_everything() {
        let k = RatMatrix::zeros(2, 3).nullspace();
        assert_eq!(k.len(), 3);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = RatMatrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, -1, 5]]);
        let k = m.nullspace();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn modular_rank_matches() {
        let rows = vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]];
        assert_eq!(rank_mod_p(&rows, 3, 1_000_000_007), 2);
    }
}
