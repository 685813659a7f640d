//! Unit groups of Vinberg monoids through lattice data, and the explicit monoids
//! of the symmetric-power and doubling examples.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{smith_normal_form, CartanType, LatticeMap, RootDatum, Weight};

/// Finite abelian group by its invariant factors (all greater than 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteAbelianGroup {
    pub invariant_factors: Vec<i64>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        Self { invariant_factors: Vec::new() }
    }

    pub fn order(&self) -> i64 {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}

impl std::fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(|k| format!("Z/{k}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Rows: simple roots in the fundamental-weight basis.
fn root_rows(datum: &RootDatum) -> Vec<Vec<i64>> {
    datum
        .simple
        .iter()
        .map(|i| datum.dynkin_labels(&datum.roots[*i]).into_iter().map(i64::from).collect())
        .collect()
}

/// Finite cokernel of the row span inside `Z^rank`.
fn quotient(rows: Vec<Vec<i64>>, rank: usize) -> FiniteAbelianGroup {
    let s = smith_normal_form(&LatticeMap::new(rows).transpose());
    let (free, torsion) = s.cokernel();
    debug_assert_eq!(free, 0);
    debug_assert_eq!(s.d.rows, rank);
    FiniteAbelianGroup { invariant_factors: torsion }
}

/// Center of the simply connected group: weight lattice modulo root lattice.
pub fn center_of_simply_connected(datum: &RootDatum) -> FiniteAbelianGroup {
    quotient(root_rows(datum), datum.rank)
}

/// The dual unit group `G_m x G^sc / ker(omega_lambda)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualGroupDesc {
    pub central_torus_rank: usize,
    /// Label of the simply connected cover, e.g. `A1`.
    pub semisimple_cover: String,
    pub center: FiniteAbelianGroup,
    /// Dynkin labels of `lambda`.
    pub lambda_labels: Vec<i32>,
    /// Order of `omega_lambda`, the class of `lambda` in the weight lattice modulo roots.
    pub omega_order: i64,
    pub kernel_subgroup: FiniteAbelianGroup,
    /// Isomorphism class of the unit group `G^lambda`, when catalogued.
    pub resulting_isomorphism_label: String,
    /// Flatness of the abelianization is assumed, not checked.
    pub flat_assumed: bool,
}

fn catalogue(ty: CartanType, r: usize, full: bool, trivial: bool) -> Option<String> {
    let s = match (ty, full, trivial) {
        // trivial center
        (_, true, true) => return None,
        (CartanType::A, true, _) => format!("GL1 x SL{}", r + 1),
        (CartanType::B, true, _) => format!("GL1 x Sp{}", 2 * r),
        (CartanType::C, true, _) => format!("GL1 x Spin{}", 2 * r + 1),
        (CartanType::D, true, _) => format!("GL1 x Spin{}", 2 * r),
        (CartanType::A, _, true) => format!("GL{}", r + 1),
        (CartanType::B, _, true) => format!("GSp{}", 2 * r),
        (CartanType::C, _, true) => format!("GSpin{}", 2 * r + 1),
        (CartanType::D, _, true) => format!("GSpin{}", 2 * r),
        _ => return None,
    };
    Some(s)
}

/// Dual of the unit group of the Vinberg monoid attached to `lambda`.
///
/// `datum` is the dual group; `lambda` is a dominant weight of it with grading 1.
pub fn unit_group_dual(datum: &RootDatum, lambda: &Weight) -> Result<DualGroupDesc> {
    if lambda.dim() != datum.dim {
        return Err(Error::Invalid(format!("{lambda} is not a weight of {}", datum.label())));
    }
    if lambda.grading != 1 {
        return Err(Error::Invalid(format!("{lambda} must project to 1 under the grading")));
    }
    if !datum.is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let center = center_of_simply_connected(datum);
    let labels = datum.dynkin_labels(lambda);
    let mut rows = root_rows(datum);
    rows.push(labels.iter().map(|x| i64::from(*x)).collect());
    // ker(omega) is dual to P / (Q + Z lambda)
    let kernel = quotient(rows, datum.rank);
    let omega_order = center.order() / kernel.order();
    let label = catalogue(datum.cartan_type, datum.rank, kernel == center, kernel.is_trivial())
        .unwrap_or_else(|| format!("(GL1 x {}^sc) / {}", datum.label(), kernel));
    Ok(DualGroupDesc {
        central_torus_rank: 1,
        semisimple_cover: datum.label(),
        center,
        lambda_labels: labels,
        omega_order,
        kernel_subgroup: kernel,
        resulting_isomorphism_label: label,
        flat_assumed: true,
    })
}

/// Explicit monoid with its abelianization and determinant maps on torus cocharacters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidDesc {
    pub n: u32,
    pub defining_equation: String,
    /// Cocharacters `(k_a, k_1, k_2)` of the diagonal torus of `A x M^+`.
    pub abelianization_map: LatticeMap,
    pub determinant_map: LatticeMap,
    /// Kernel of this row is the cocharacter lattice of the unit torus.
    pub torus_equation: LatticeMap,
    pub units: DualGroupDesc,
}

/// The monoid `{(a, m) : a^n = det m}` in `A^1 x Mat_2`.
pub fn sym_power_monoid(n: u32) -> Result<MonoidDesc> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    let a1 = crate::rootdata::build_root_datum(CartanType::A, 1)?;
    let lambda = Weight::x(2, 1).scale(n as i32).with_grading(1);
    Ok(MonoidDesc {
        n,
        defining_equation: format!("a^{n} = det(m)"),
        abelianization_map: LatticeMap::new(vec![vec![1, 0, 0]]),
        determinant_map: LatticeMap::new(vec![vec![0, 1, 1]]),
        torus_equation: LatticeMap::new(vec![vec![n as i64, -1, -1]]),
        units: unit_group_dual(&a1, &lambda)?,
    })
}

impl MonoidDesc {
    /// Membership of the rational point `(a, m)`.
    pub fn contains(&self, a: &BigRational, m: &[[BigRational; 2]; 2]) -> bool {
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        let mut lhs = BigRational::one();
        for _ in 0..self.n {
            lhs *= a;
        }
        lhs == det
    }

    /// Membership in the unit group.
    pub fn is_unit(&self, a: &BigRational, m: &[[BigRational; 2]; 2]) -> bool {
        self.contains(a, m) && !a.is_zero()
    }
}

/// Orientation of the grading `c` on `M_ab`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CSign {
    /// `c = det`.
    Det,
    /// `c = det^{-1}`, vanishing at the boundary.
    #[default]
    InverseDet,
}

impl CSign {
    pub fn sign(self) -> i64 {
        match self {
            CSign::Det => 1,
            CSign::InverseDet => -1,
        }
    }
}

impl std::str::FromStr for CSign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "det" => Ok(CSign::Det),
            "inverse-det" | "inverse_det" | "det-inverse" => Ok(CSign::InverseDet),
            _ => Err(Error::Parse(format!("c-sign {s:?}"))),
        }
    }
}

/// Units `M_ab x G` of the doubling monoid with the grading on cocharacters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoublingUnits {
    pub n: usize,
    pub g_rank: usize,
    pub c_sign: CSign,
    /// `Z^n (cocharacters of GL_n) + Z^g_rank -> Z`.
    pub grading: LatticeMap,
}

impl DoublingUnits {
    /// Degree of the central cocharacter `t -> t Id` of `GL_n`.
    pub fn central_degree(&self) -> i64 {
        let mut v = vec![1; self.n];
        v.extend(std::iter::repeat_n(0, self.g_rank));
        self.grading.apply(&v)[0]
    }
}

/// `M_ab = GL_n / SL_n ~ GL_1` through `det`, with `c` of the chosen orientation.
pub fn doubling_monoid_units(n: usize, g_rank: usize, c_sign: CSign) -> Result<DoublingUnits> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    let mut row = vec![c_sign.sign(); n];
    row.extend(std::iter::repeat_n(0, g_rank));
    Ok(DoublingUnits { n, g_rank, c_sign, grading: LatticeMap::new(vec![row]) })
}
