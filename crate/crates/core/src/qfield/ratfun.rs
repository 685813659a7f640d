use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::coef::CoefRing;
use super::qpoly::{bi_exact_div, bi_gcd, BiPoly};
use super::series::ZSeries;
use super::zpoly::ZPoly;
use crate::error::{Error, Result};

/// Rational function in `z` over `Q(t)`, always held in canonical form.
///
/// Canonical form: numerator and denominator are coprime Laurent polynomials,
/// the denominator has lowest `z`-exponent `0`, and the lowest `t`-term of
/// that constant coefficient is exactly `1`. Structural equality is therefore
/// equality of rational functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: ZPoly,
    den: ZPoly,
}

fn is_trivial(p: &BiPoly) -> bool {
    p.len() == 1 && p[0].is_constant()
}

impl RatFun {
    pub fn zero() -> Self {
        Self { num: ZPoly::zero(), den: ZPoly::one() }
    }

    pub fn one() -> Self {
        Self { num: ZPoly::one(), den: ZPoly::one() }
    }

    pub fn constant(c: CoefRing) -> Self {
        Self::new(ZPoly::constant(c), ZPoly::one()).expect("nonzero denominator")
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(CoefRing::from_int(c))
    }

    pub fn from_poly(p: ZPoly) -> Self {
        Self::new(p, ZPoly::one()).expect("nonzero denominator")
    }

    /// `z` itself.
    pub fn z() -> Self {
        Self::from_poly(ZPoly::monomial(CoefRing::one(), 1))
    }

    pub fn new(num: ZPoly, den: ZPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (tn, zn) = num.monomial_content();
        let (td, zd) = den.monomial_content();
        let mut a = num.to_bipoly(tn, zn);
        let mut b = den.to_bipoly(td, zd);
        if !is_trivial(&a) && !is_trivial(&b) {
            let g = bi_gcd(&a, &b);
            if !is_trivial(&g) {
                a = bi_exact_div(&a, &g).expect("gcd divides numerator");
                b = bi_exact_div(&b, &g).expect("gcd divides denominator");
            }
        }
        let num = ZPoly::from_bipoly(&a).shift(zn - zd).scale(&CoefRing::t_pow(tn - td));
        let den = ZPoly::from_bipoly(&b);
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: ZPoly, den: ZPoly) -> Self {
        let m = den.min_deg().unwrap();
        let (e, c) = {
            let d0 = den.coeff(m);
            let (e, c) = d0.lowest().unwrap();
            (e, c.clone())
        };
        if m == 0 && e == 0 && c.is_one() {
            return Self { num, den };
        }
        let unit_inv = CoefRing::monomial(c.recip(), -e);
        Self {
            num: num.scale(&unit_inv).shift(-m),
            den: den.scale(&unit_inv).shift(-m),
        }
    }

    pub fn num(&self) -> &ZPoly {
        &self.num
    }

    pub fn den(&self) -> &ZPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone()).unwrap();
        }
        let n = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        Self::new(n, self.den.mul(&o.den)).unwrap()
    }

    pub fn neg(&self) -> Self {
        Self { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        // Cross-cancel first: both inputs are already reduced.
        let (n1, d2) = cancel(&self.num, &o.den);
        let (n2, d1) = cancel(&o.num, &self.den);
        Self::normalized(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &CoefRing) -> Self {
        self.mul(&Self::constant(c.clone()))
    }

    /// Substitute `z -> u * z^p` with `u` a unit; `p = 0` evaluates.
    pub fn substitute_monomial(&self, u: &CoefRing, p: i32) -> Result<Self> {
        let den = self.den.substitute_monomial(u, p);
        if den.is_zero() {
            return Err(Error::Pole(format!("denominator vanishes at z -> ({u})*z^{p}")));
        }
        Self::new(self.num.substitute_monomial(u, p), den)
    }

    /// `s -> -s`, i.e. `z -> 1/z`.
    pub fn negate_s(&self) -> Self {
        self.substitute_monomial(&CoefRing::one(), -1).unwrap()
    }

    /// `s -> s + c` with `c = c2 / 2`, i.e. `z -> t^(-c2) z`.
    pub fn shift_s(&self, c2: i32) -> Self {
        self.substitute_monomial(&CoefRing::t_pow(-c2), 1).unwrap()
    }

    /// `s -> k * s`, `k != 0`.
    pub fn scale_s(&self, k: i32) -> Self {
        assert!(k != 0, "s -> 0*s is an evaluation, use evaluate_s");
        self.substitute_monomial(&CoefRing::one(), k).unwrap()
    }

    /// Evaluate at `s = s2 / 2`.
    pub fn evaluate_s(&self, s2: i32) -> Result<Self> {
        self.substitute_monomial(&CoefRing::t_pow(-s2), 0)
    }

    /// Constant value if the function does not depend on `z`.
    pub fn as_constant(&self) -> Option<CoefRing> {
        if self.num.is_zero() {
            return Some(CoefRing::zero());
        }
        let d = self.den.as_single_constant()?;
        let n = self.num.as_single_constant()?;
        Some(&n * &d.unit_inverse()?)
    }

    /// Laurent expansion at `z = 0` through degree `max_degree`.
    pub fn series(&self, max_degree: i32) -> Result<ZSeries> {
        let d0 = self.den.coeff(0);
        if !d0.is_one() {
            return Err(Error::NonUnitConstant);
        }
        let lo = self.num.min_deg().unwrap_or(0);
        let len = (max_degree - lo + 1).max(0) as usize;
        let mut inv = Vec::with_capacity(len);
        for k in 0..len as i32 {
            if k == 0 {
                inv.push(CoefRing::one());
                continue;
            }
            let mut acc = CoefRing::zero();
            for (j, dj) in self.den.terms() {
                if *j == 0 || *j > k {
                    continue;
                }
                acc = &acc - &(dj * &inv[(k - j) as usize]);
            }
            inv.push(acc);
        }
        let mut out = ZSeries::new(max_degree);
        for (e, c) in self.num.terms() {
            for (k, ik) in inv.iter().enumerate() {
                let d = e + k as i32;
                if d > max_degree {
                    break;
                }
                out.add_term(d, &(c * ik));
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn cancel(a: &ZPoly, b: &ZPoly) -> (ZPoly, ZPoly) {
    let (ta, za) = a.monomial_content();
    let (tb, zb) = b.monomial_content();
    let pa = a.to_bipoly(ta, za);
    let pb = b.to_bipoly(tb, zb);
    let restore = |p: &BiPoly, t: i32, z: i32| ZPoly::from_bipoly(p).shift(z).scale(&CoefRing::t_pow(t));
    if is_trivial(&pa) || is_trivial(&pb) {
        return (a.clone(), b.clone());
    }
    let g = bi_gcd(&pa, &pb);
    if is_trivial(&g) {
        return (a.clone(), b.clone());
    }
    let qa = bi_exact_div(&pa, &g).expect("gcd divides");
    let qb = bi_exact_div(&pb, &g).expect("gcd divides");
    (restore(&qa, ta, za), restore(&qb, tb, zb))
}

impl ZPoly {
    fn as_single_constant(&self) -> Option<CoefRing> {
        if self.terms().len() == 1 {
            let (k, c) = self.terms().iter().next().unwrap();
            (*k == 0).then(|| c.clone())
        } else {
            None
        }
    }
}

impl From<ZPoly> for RatFun {
    fn from(p: ZPoly) -> Self {
        Self::from_poly(p)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "[{}] / [{}]", self.num, self.den)
        }
    }
}

type JsonPoly = Vec<(i32, Vec<(i32, String)>)>;

#[derive(Serialize, Deserialize)]
struct RatFunJson {
    num: JsonPoly,
    den: JsonPoly,
}

fn rational_to_string(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

fn rational_from_str(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

pub(crate) fn coef_to_json(c: &CoefRing) -> Vec<(i32, String)> {
    c.terms().iter().map(|(e, x)| (*e, rational_to_string(x))).collect()
}

pub(crate) fn coef_from_json(v: &[(i32, String)]) -> Result<CoefRing> {
    let mut c = CoefRing::zero();
    for (e, s) in v {
        c.add_term(*e, rational_from_str(s)?);
    }
    Ok(c)
}

fn poly_to_json(p: &ZPoly) -> JsonPoly {
    p.terms().iter().map(|(k, c)| (*k, coef_to_json(c))).collect()
}

fn poly_from_json(v: &JsonPoly) -> Result<ZPoly> {
    let mut p = ZPoly::zero();
    for (k, c) in v {
        p.add_term(*k, &coef_from_json(c)?);
    }
    Ok(p)
}

impl Serialize for RatFun {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RatFunJson { num: poly_to_json(&self.num), den: poly_to_json(&self.den) }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFun {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = RatFunJson::deserialize(d)?;
        let num = poly_from_json(&j.num).map_err(D::Error::custom)?;
        let den = poly_from_json(&j.den).map_err(D::Error::custom)?;
        RatFun::new(num, den).map_err(D::Error::custom)
    }
}

impl Serialize for CoefRing {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        coef_to_json(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for CoefRing {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<(i32, String)>::deserialize(d)?;
        coef_from_json(&v).map_err(serde::de::Error::custom)
    }
}
