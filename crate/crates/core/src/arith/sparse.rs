//! Sparse exact matrices for the large, very sparse boundary maps of
//! truncated complexes.

use std::collections::{BTreeMap, HashMap};

use super::int::Int;
use super::rational::{common_denominator, Rational};

/// Row-major sparse matrix over Q; each row is sorted by column with no
/// explicit zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<(usize, Rational)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn from_maps(cols: usize, rows: Vec<BTreeMap<usize, Rational>>) -> SparseMatrix {
        let data: Vec<Vec<(usize, Rational)>> =
            rows.into_iter().map(|r| r.into_iter().filter(|(_, v)| !v.is_zero()).collect()).collect();
        SparseMatrix { rows: data.len(), cols, data }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn mul(&self, o: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, o.rows);
        let rows = self
            .data
            .iter()
            .map(|r| {
                let mut acc: BTreeMap<usize, Rational> = BTreeMap::new();
                for (k, a) in r {
                    for (j, b) in &o.data[*k] {
                        *acc.entry(*j).or_insert_with(Rational::zero) += &(a * b);
                    }
                }
                acc
            })
            .collect();
        SparseMatrix::from_maps(o.cols, rows)
    }

    /// Exact rank by fraction-free incremental row echelon reduction.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<(usize, Int)>> = self.data.iter().filter(|r| !r.is_empty()).map(|r| integral(r)).collect();
        // Short rows first keeps fill-in low.
        rows.sort_by_key(|r| (r.len(), r[0].0));
        let mut pivots: HashMap<usize, Vec<(usize, Int)>> = HashMap::new();
        for mut r in rows {
            loop {
                let Some(&(lead, _)) = r.first() else { break };
                match pivots.get(&lead) {
                    None => {
                        pivots.insert(lead, r);
                        break;
                    }
                    Some(p) => r = eliminate(&r, p),
                }
            }
        }
        pivots.len()
    }
}

fn integral(r: &[(usize, Rational)]) -> Vec<(usize, Int)> {
    let den = common_denominator(r.iter().map(|t| &t.1));
    let mut out: Vec<(usize, Int)> =
        r.iter().map(|(j, v)| (*j, Int::from_big(v.numer() * (&den / v.denom())))).collect();
    primitive(&mut out);
    out
}

fn primitive(r: &mut [(usize, Int)]) {
    let mut g = Int::zero();
    for (_, v) in r.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, v) in r.iter_mut() {
            *v = v.div_exact(&g);
        }
    }
}

/// `p_lead·r − r_lead·p`, which cancels the shared leading column.
fn eliminate(r: &[(usize, Int)], p: &[(usize, Int)]) -> Vec<(usize, Int)> {
    let a = &p[0].1;
    let b = &r[0].1;
    let g = a.gcd(b);
    let (a, b) = (a.div_exact(&g), b.div_exact(&g));
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < r.len() || j < p.len() {
        let ci = r.get(i).map(|t| t.0).unwrap_or(usize::MAX);
        let cj = p.get(j).map(|t| t.0).unwrap_or(usize::MAX);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, a.mul(&r[i - 1].1))
        } else if cj < ci {
            j += 1;
            (cj, b.mul(&p[j - 1].1).neg())
        } else {
            i += 1;
            j += 1;
            (ci, a.mul(&r[i - 1].1).sub(&b.mul(&p[j - 1].1)))
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    primitive(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::RatMatrix;

    #[test]
    fn rank_matches_dense() {
        let rows: Vec<Vec<i64>> = vec![vec![1, 2, 0, 3], vec![2, 4, 0, 6], vec![0, 1, 1, 0], vec![1, 3, 1, 3]];
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let dense = RatMatrix::from_i64(&refs);
        let sparse = SparseMatrix::from_maps(
            4,
            rows.iter()
                .map(|r| r.iter().enumerate().map(|(j, &v)| (j, Rational::from(v))).collect())
                .collect(),
        );
        assert_eq!(sparse.rank(), dense.rank());
        assert_eq!(sparse.rank(), 2);
    }
}
