use serde::{Deserialize, Serialize};

/// Integer matrix, a homomorphism `Z^cols -> Z^rows`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeMap {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<i64>>,
}

impl LatticeMap {
    pub fn new(entries: Vec<Vec<i64>>) -> Self {
        let rows = entries.len();
        let cols = entries.first().map_or(0, |r| r.len());
        assert!(entries.iter().all(|r| r.len() == cols), "ragged matrix");
        Self { rows, cols, entries }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![vec![0; cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i][i] = 1;
        }
        m
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entries[i][k];
                if a == 0 {
                    continue;
                }
                for j in 0..o.cols {
                    out.entries[i][j] += a * o.entries[k][j];
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.entries.iter().map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j][i] = self.entries[i][j];
            }
        }
        out
    }

    /// Determinant of a square matrix by fraction-free elimination.
    pub fn determinant(&self) -> i64 {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return 1;
        }
        let mut m: Vec<Vec<i128>> = self.entries.iter().map(|r| r.iter().map(|x| *x as i128).collect()).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[k][k] == 0 {
                let Some(p) = (k + 1..n).find(|r| m[*r][k] != 0) else {
                    return 0;
                };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
            }
            prev = m[k][k];
        }
        (sign * m[n - 1][n - 1]) as i64
    }

    /// Whether the matrix is square with determinant `+-1`.
    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().abs() == 1
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.entries[i][j] == 0))
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.rows.min(self.cols)).map(|i| self.entries[i][i]).collect()
    }
}

/// `u * m * v = d` with `u`, `v` unimodular and `d` in Smith normal form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmithForm {
    pub u: LatticeMap,
    pub d: LatticeMap,
    pub v: LatticeMap,
}

impl SmithForm {
    /// Nonzero diagonal entries, each dividing the next.
    pub fn invariant_factors(&self) -> Vec<i64> {
        self.d.diagonal().into_iter().filter(|x| *x != 0).collect()
    }

    /// Cokernel `Z^rows / image` as (free rank, torsion factors greater than 1).
    pub fn cokernel(&self) -> (usize, Vec<i64>) {
        let inv = self.invariant_factors();
        let free = self.d.rows - inv.len();
        (free, inv.into_iter().filter(|x| *x > 1).collect())
    }
}

fn swap_rows(m: &mut LatticeMap, a: usize, b: usize) {
    m.entries.swap(a, b);
}

fn swap_cols(m: &mut LatticeMap, a: usize, b: usize) {
    for r in m.entries.iter_mut() {
        r.swap(a, b);
    }
}

/// `row[dst] += k * row[src]`.
fn add_row(m: &mut LatticeMap, dst: usize, src: usize, k: i64) {
    for j in 0..m.cols {
        let v = m.entries[src][j];
        m.entries[dst][j] += k * v;
    }
}

/// `col[dst] += k * col[src]`.
fn add_col(m: &mut LatticeMap, dst: usize, src: usize, k: i64) {
    for r in m.entries.iter_mut() {
        r[dst] += k * r[src];
    }
}

/// Smith normal form with transformation matrices.
pub fn smith_normal_form(m: &LatticeMap) -> SmithForm {
    let mut d = m.clone();
    let mut u = LatticeMap::identity(m.rows);
    let mut v = LatticeMap::identity(m.cols);
    let n = m.rows.min(m.cols);
    for t in 0..n {
        loop {
            // Smallest nonzero entry of the remaining block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..d.rows {
                for j in t..d.cols {
                    let x = d.entries[i][j];
                    if x != 0 && best.is_none_or(|(bi, bj)| x.abs() < d.entries[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(u, d, v);
            };
            swap_rows(&mut d, t, pi);
            swap_rows(&mut u, t, pi);
            swap_cols(&mut d, t, pj);
            swap_cols(&mut v, t, pj);
            let p = d.entries[t][t];
            let mut clean = true;
            for i in t + 1..d.rows {
                let q = d.entries[i][t].div_euclid(p);
                if q != 0 {
                    add_row(&mut d, i, t, -q);
                    add_row(&mut u, i, t, -q);
                }
                clean &= d.entries[i][t] == 0;
            }
            for j in t + 1..d.cols {
                let q = d.entries[t][j].div_euclid(p);
                if q != 0 {
                    add_col(&mut d, j, t, -q);
                    add_col(&mut v, j, t, -q);
                }
                clean &= d.entries[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // Enforce divisibility of the rest of the block by the pivot.
            let bad = (t + 1..d.rows).find(|i| (t + 1..d.cols).any(|j| d.entries[*i][j] % p != 0));
            match bad {
                Some(i) => {
                    add_row(&mut d, t, i, 1);
                    add_row(&mut u, t, i, 1);
                }
                None => break,
            }
        }
        if d.entries[t][t] < 0 {
            for j in 0..d.cols {
                d.entries[t][j] = -d.entries[t][j];
            }
            for j in 0..u.cols {
                u.entries[t][j] = -u.entries[t][j];
            }
        }
    }
    finish(u, d, v)
}

fn finish(u: LatticeMap, d: LatticeMap, v: LatticeMap) -> SmithForm {
    SmithForm { u, d, v }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_small() {
        let m = LatticeMap::new(vec![vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]);
        assert_eq!(m.determinant(), 18);
        assert_eq!(LatticeMap::new(vec![vec![0, 1], vec![1, 0]]).determinant(), -1);
    }

    #[test]
    fn cokernel_of_rectangular_map() {
        let m = LatticeMap::new(vec![vec![2], vec![0]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.cokernel(), (1, vec![2]));
    }
}
