use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{principal_grading2, Weight};

/// Which classical group is doubled: orthogonal or symplectic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BkCase {
    O,
    Sp,
}

impl std::str::FromStr for BkCase {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "o" | "orthogonal" => Ok(Self::O),
            "sp" | "symplectic" => Ok(Self::Sp),
            _ => Err(Error::Parse(format!("case {s:?}"))),
        }
    }
}

/// One irreducible piece of the model of `u_p`: `Lambda^2(std)` or `std`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summand {
    /// `(i, j)` for `v_i ^ v_j` with `i < j`, or `(i, 0)` for `v_i`.
    pub basis: Vec<(usize, usize)>,
    /// Action of `e` in this basis, column `k` is `e(basis[k])`.
    pub e_matrix: Vec<Vec<i64>>,
    pub f_matrix: Vec<Vec<i64>>,
}

/// The principal nilpotent `e = sum E_(i,i+1)` of `gl_n` acting on the model of `u_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilpotentAction {
    pub n: usize,
    pub case: BkCase,
    pub summands: Vec<Summand>,
}

fn lower(i: usize) -> Option<usize> {
    (i > 1).then(|| i - 1)
}

fn raise(i: usize, n: usize) -> Option<usize> {
    (i < n).then(|| i + 1)
}

/// `v_i ^ v_j` with sign, for `i != j`.
fn wedge(i: usize, j: usize) -> Option<((usize, usize), i64)> {
    match i.cmp(&j) {
        std::cmp::Ordering::Less => Some(((i, j), 1)),
        std::cmp::Ordering::Greater => Some(((j, i), -1)),
        std::cmp::Ordering::Equal => None,
    }
}

fn build_summand(basis: Vec<(usize, usize)>, step: impl Fn(usize) -> Option<usize>) -> Vec<Vec<i64>> {
    let dim = basis.len();
    let index = |b: (usize, usize)| basis.iter().position(|x| *x == b).expect("basis element");
    let mut m = vec![vec![0i64; dim]; dim];
    for (k, (i, j)) in basis.iter().enumerate() {
        if *j == 0 {
            if let Some(i2) = step(*i) {
                m[index((i2, 0))][k] += 1;
            }
            continue;
        }
        for (a, b) in [(step(*i), Some(*j)), (Some(*i), step(*j))] {
            if let (Some(a), Some(b)) = (a, b) {
                if let Some((w, s)) = wedge(a, b) {
                    m[index(w)][k] += s;
                }
            }
        }
    }
    m
}

impl NilpotentAction {
    pub fn new(n: usize, case: BkCase) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("n must be positive".into()));
        }
        let mut summands = Vec::new();
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        if !pairs.is_empty() {
            summands.push(Summand {
                e_matrix: build_summand(pairs.clone(), lower),
                f_matrix: build_summand(pairs.clone(), |i| raise(i, n)),
                basis: pairs,
            });
        }
        if case == BkCase::Sp {
            let std: Vec<(usize, usize)> = (1..=n).map(|i| (i, 0)).collect();
            summands.push(Summand {
                e_matrix: build_summand(std.clone(), lower),
                f_matrix: build_summand(std.clone(), |i| raise(i, n)),
                basis: std,
            });
        }
        Ok(Self { n, case, summands })
    }

    pub fn dim(&self) -> usize {
        self.summands.iter().map(|s| s.basis.len()).sum()
    }

    /// Doubled `h`-eigenvalue of a basis vector: `2 s_i` or `2 (s_i + s_j)`.
    pub fn h_eigenvalue(&self, b: (usize, usize)) -> i32 {
        let s2 = |i: usize| principal_grading2(self.n, i);
        if b.1 == 0 {
            s2(b.0)
        } else {
            s2(b.0) + s2(b.1)
        }
    }

    /// Coroot label: `x_i + x_j` for a pair, `x_i` for the standard summand.
    pub fn label(&self, b: (usize, usize)) -> Weight {
        if b.1 == 0 {
            Weight::x(self.n, b.0)
        } else {
            Weight::x(self.n, b.0).add(&Weight::x(self.n, b.1))
        }
    }

    /// Number of irreducible `sl_2`-summands, from the `h`-weights alone.
    pub fn sl2_summand_count(&self) -> usize {
        self.summands
            .iter()
            .flat_map(|s| s.basis.iter())
            .filter(|b| matches!(self.h_eigenvalue(**b), 0 | 1))
            .count()
    }

    /// Whether `e^k = 0` for `k = dim`.
    pub fn e_is_nilpotent(&self) -> bool {
        self.summands.iter().all(|s| {
            let d = s.basis.len();
            let mut p = s.e_matrix.clone();
            for _ in 1..d {
                p = matmul(&p, &s.e_matrix);
            }
            p.iter().all(|r| r.iter().all(|x| *x == 0))
        })
    }
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut out = vec![vec![0; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] != 0 {
                for j in 0..n {
                    out[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    out
}

/// Basis of the kernel of `m` restricted to the columns `cols`, as coefficient vectors over `cols`.
fn kernel(m: &[Vec<i64>], cols: &[usize]) -> Vec<Vec<BigRational>> {
    let rows = m.len();
    let mut a: Vec<Vec<BigRational>> =
        (0..rows).map(|r| cols.iter().map(|c| BigRational::from_integer(m[r][*c].into())).collect()).collect();
    let k = cols.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..rows).find(|i| !a[*i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = BigRational::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= p * &f;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..k)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); k];
            v[free] = BigRational::one();
            for (row, pc) in pivots.iter().enumerate() {
                v[*pc] = -a[row][free].clone();
            }
            v
        })
        .collect()
}

/// A line of `(u_p)^e` (or of the lowest-weight space) with its data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightLine {
    pub label: Weight,
    /// Doubled `h`-eigenvalue, i.e. `2 s_i`.
    pub h2: i32,
    /// Weight of the central `z`: 2 on pair lines, 1 on `x_i` lines.
    pub z_weight: i32,
}

/// Highest-weight (or lowest-weight) lines.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HwvSet {
    pub n: usize,
    pub case: BkCase,
    pub lines: Vec<WeightLine>,
    pub kernel_dimension: usize,
}

impl HwvSet {
    pub fn labels(&self) -> Vec<Weight> {
        self.lines.iter().map(|l| l.label.clone()).collect()
    }
}

/// Kernel of `e` (highest) or `f` (lowest) per `h`-level and summand, labeled by
/// a pivot coordinate: largest first index for `e`, largest second index for `f`.
fn extremal_lines(action: &NilpotentAction, lowest: bool) -> Result<HwvSet> {
    let mut lines = Vec::new();
    let mut kernel_dimension = 0;
    for s in &action.summands {
        let m = if lowest { &s.f_matrix } else { &s.e_matrix };
        let mut levels: Vec<i32> = s.basis.iter().map(|b| action.h_eigenvalue(*b)).collect();
        levels.sort_unstable();
        levels.dedup();
        for level in levels {
            let cols: Vec<usize> = (0..s.basis.len()).filter(|k| action.h_eigenvalue(s.basis[*k]) == level).collect();
            let ker = kernel(m, &cols);
            kernel_dimension += ker.len();
            if ker.len() > 1 {
                return Err(Error::Structural(format!("kernel of dimension {} at h = {level}", ker.len())));
            }
            for v in ker {
                let support: Vec<(usize, usize)> =
                    cols.iter().zip(&v).filter(|(_, c)| !c.is_zero()).map(|(k, _)| s.basis[*k]).collect();
                let key = |b: &(usize, usize)| if lowest && b.1 != 0 { b.1 } else { b.0 };
                let pivot = *support.iter().max_by_key(|b| (key(b), b.0)).expect("nonzero kernel vector");
                if support.iter().filter(|b| key(b) == key(&pivot)).count() > 1 {
                    return Err(Error::Structural(format!("no unique root line at h = {level}")));
                }
                let h2 = action.h_eigenvalue(pivot);
                lines.push(WeightLine {
                    label: action.label(pivot),
                    // the opposite radical carries the negated eigenvalue
                    h2: if lowest { -h2 } else { h2 },
                    z_weight: if pivot.1 == 0 { 1 } else { 2 },
                });
            }
        }
    }
    lines.sort_by_key(|l| (l.z_weight == 1, std::cmp::Reverse(l.h2)));
    Ok(HwvSet { n: action.n, case: action.case, lines, kernel_dimension })
}

/// Highest-weight lines of `e` in `u_p`, labeled by coroots.
pub fn highest_weight_vectors(n: usize, case: BkCase) -> Result<HwvSet> {
    let action = NilpotentAction::new(n, case)?;
    let set = extremal_lines(&action, false)?;
    if set.kernel_dimension != action.sl2_summand_count() {
        return Err(Error::Structural("kernel dimension differs from the number of sl2 summands".into()));
    }
    Ok(set)
}

/// Lowest-weight lines, with the `h`-eigenvalue of the dual line in the opposite radical.
pub fn lowest_weight_vectors(n: usize, case: BkCase) -> Result<HwvSet> {
    let action = NilpotentAction::new(n, case)?;
    extremal_lines(&action, true)
}
