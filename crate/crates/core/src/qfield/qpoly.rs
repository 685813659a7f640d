//! Dense polynomials over `Q` and over `Q[t]`, used for gcd computations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense polynomial in one variable over `Q`; index is the exponent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct QPoly(pub Vec<BigRational>);

impl QPoly {
    pub fn zero() -> Self {
        QPoly(Vec::new())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = QPoly(vec![c]);
        p.trim();
        p
    }

    pub fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> &BigRational {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut p = QPoly(self.0.iter().map(|x| x * c).collect());
        p.trim();
        p
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().recip();
        self.scale(&inv)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i).cloned().unwrap_or_else(BigRational::zero);
            let b = o.0.get(i).cloned().unwrap_or_else(BigRational::zero);
            v.push(a + b);
        }
        let mut p = QPoly(v);
        p.trim();
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        QPoly(self.0.iter().map(|x| -x.clone()).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        let mut p = QPoly(v);
        p.trim();
        p
    }

    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let mut r = self.clone();
        let dd = d.degree().unwrap();
        if r.0.len() < d.0.len() {
            return (Self::zero(), r);
        }
        let mut q = vec![BigRational::zero(); r.0.len() - dd];
        let inv = d.lc().recip();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.lc() * &inv;
            let k = rd - dd;
            for (i, x) in d.0.iter().enumerate() {
                r.0[i + k] -= &c * x;
            }
            q[k] = c;
            r.trim();
        }
        let mut q = QPoly(q);
        q.trim();
        (q, r)
    }

    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            if b.is_constant() {
                return QPoly::constant(BigRational::one());
            }
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }
}

/// Polynomial in `z` with coefficients in `Q[t]`; index is the `z` exponent.
pub(crate) type BiPoly = Vec<QPoly>;

fn bi_trim(p: &mut BiPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn bi_content(p: &BiPoly) -> QPoly {
    let mut g = QPoly::zero();
    for c in p {
        if c.is_zero() {
            continue;
        }
        g = g.gcd(c);
        if g.is_constant() && !g.is_zero() {
            break;
        }
    }
    g
}

fn bi_div_coef(p: &BiPoly, c: &QPoly) -> BiPoly {
    p.iter()
        .map(|x| if x.is_zero() { QPoly::zero() } else { x.exact_div(c).expect("content divides") })
        .collect()
}

fn bi_primitive(p: &BiPoly) -> BiPoly {
    let c = bi_content(p);
    if c.is_constant() {
        let inv = if c.is_zero() { BigRational::one() } else { c.lc().recip() };
        return p.iter().map(|x| x.scale(&inv)).collect();
    }
    bi_div_coef(p, &c)
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) a mod b` in `Q[t][z]`.
fn bi_prem(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut steps = (a.len() as i64 - db as i64 + 1).max(0) as u32;
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let k = dr - db;
        for x in r.iter_mut() {
            *x = x.mul(&lb);
        }
        for (i, y) in b.iter().enumerate() {
            r[i + k] = r[i + k].sub(&y.mul(&lr));
        }
        bi_trim(&mut r);
        steps -= 1;
    }
    if steps > 0 {
        let f = qpow(&lb, steps);
        for x in r.iter_mut() {
            *x = x.mul(&f);
        }
    }
    r
}

/// Gcd in `Q[t][z]` by the subresultant remainder sequence, up to a unit of `Q`.
pub(crate) fn bi_gcd_subresultant(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let c = bi_content(a).gcd(&bi_content(b));
    let (mut x, mut y) = if a.len() >= b.len() {
        (bi_primitive(a), bi_primitive(b))
    } else {
        (bi_primitive(b), bi_primitive(a))
    };
    let mut g = QPoly::constant(BigRational::one());
    let mut h = QPoly::constant(BigRational::one());
    loop {
        if y.len() == 1 {
            return vec![c];
        }
        let delta = (x.len() - y.len()) as u32;
        let r = bi_prem(&x, &y);
        if r.is_empty() {
            break;
        }
        let divisor = g.mul(&qpow(&h, delta));
        x = y;
        y = bi_div_coef(&r, &divisor);
        g = x.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            qpow(&g, delta).exact_div(&qpow(&h, delta - 1)).expect("subresultant division")
        };
    }
    bi_primitive(&y).iter().map(|p| p.mul(&c)).collect()
}

fn qpow(p: &QPoly, k: u32) -> QPoly {
    let mut acc = QPoly::constant(BigRational::one());
    for _ in 0..k {
        acc = acc.mul(p);
    }
    acc
}

/// Gcd in `Q[t][z]`, up to a unit of `Q`.
///
/// Tries the heuristic evaluation gcd first; its answer is accepted only after
/// exact division checks, otherwise the subresultant sequence decides.
pub(crate) fn bi_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let (ia, ib) = (to_integer(a), to_integer(b));
    if let Some(g) = heu_gcd_bi(&ia, &ib) {
        let g: BiPoly = g.into_iter().map(|c| int_to_qpoly(&c)).collect();
        if bi_exact_div(a, &g).is_some() && bi_exact_div(b, &g).is_some() {
            return g;
        }
    }
    bi_gcd_subresultant(a, b)
}

type IPoly = Vec<BigInt>;

fn int_trim(p: &mut IPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn int_to_qpoly(p: &IPoly) -> QPoly {
    let mut q = QPoly(p.iter().map(|c| BigRational::from_integer(c.clone())).collect());
    q.trim();
    q
}

/// Clears denominators, giving an integer polynomial indexed `[z][t]`.
fn to_integer(p: &BiPoly) -> Vec<IPoly> {
    let mut l = BigInt::one();
    for c in p.iter().flat_map(|q| q.0.iter()) {
        l = l.lcm(c.denom());
    }
    p.iter()
        .map(|q| q.0.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect())
        .collect()
}

fn int_content(cs: impl Iterator<Item = BigInt>) -> BigInt {
    cs.fold(BigInt::zero(), |g, c| g.gcd(&c))
}

fn norm(cs: impl Iterator<Item = BigInt>) -> BigInt {
    cs.map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
}

fn next_xi(xi: &BigInt) -> BigInt {
    xi * BigInt::from(73794) / BigInt::from(27011)
}

fn start_xi(na: &BigInt, nb: &BigInt) -> BigInt {
    BigInt::from(2) * na.min(nb) + BigInt::from(29)
}

fn eval(p: &IPoly, x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Digits of `g` in the symmetric base-`xi` representation.
fn gen_poly(g: &BigInt, xi: &BigInt) -> IPoly {
    let mut out = Vec::new();
    let mut g = g.clone();
    let half = xi / BigInt::from(2);
    while !g.is_zero() {
        let mut d = g.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        out.push(d.clone());
        g = (g - d) / xi;
    }
    out
}

fn int_divides(d: &IPoly, a: &IPoly) -> bool {
    int_to_qpoly(a).exact_div(&int_to_qpoly(d)).is_some_and(|q| q.0.iter().all(|c| c.is_integer()))
}

fn heu_gcd_uni(a: &IPoly, b: &IPoly) -> Option<IPoly> {
    let ca = int_content(a.iter().cloned());
    let cb = int_content(b.iter().cloned());
    if ca.is_zero() || cb.is_zero() {
        return None;
    }
    let cg = ca.gcd(&cb);
    let pa: IPoly = a.iter().map(|c| c / &ca).collect();
    let pb: IPoly = b.iter().map(|c| c / &cb).collect();
    let mut xi = start_xi(&norm(pa.iter().cloned()), &norm(pb.iter().cloned()));
    for _ in 0..6 {
        let g = eval(&pa, &xi).gcd(&eval(&pb, &xi));
        if !g.is_zero() {
            let mut cand = gen_poly(&g, &xi);
            int_trim(&mut cand);
            let c = int_content(cand.iter().cloned());
            if !c.is_zero() {
                let cand: IPoly = cand.iter().map(|x| x / &c).collect();
                if int_divides(&cand, &pa) && int_divides(&cand, &pb) {
                    return Some(cand.iter().map(|x| x * &cg).collect());
                }
            }
        }
        xi = next_xi(&xi);
    }
    None
}

fn heu_gcd_bi(a: &[IPoly], b: &[IPoly]) -> Option<Vec<IPoly>> {
    let all = |p: &[IPoly]| p.iter().flat_map(|q| q.iter().cloned()).collect::<Vec<_>>();
    let (fa, fb) = (all(a), all(b));
    let ca = int_content(fa.iter().cloned());
    let cb = int_content(fb.iter().cloned());
    if ca.is_zero() || cb.is_zero() {
        return None;
    }
    let pa: Vec<IPoly> = a.iter().map(|q| q.iter().map(|c| c / &ca).collect()).collect();
    let pb: Vec<IPoly> = b.iter().map(|q| q.iter().map(|c| c / &cb).collect()).collect();
    let mut xi = start_xi(&norm(fa.iter().map(|c| c / &ca)), &norm(fb.iter().map(|c| c / &cb)));
    let to_q = |p: &[IPoly]| -> BiPoly { p.iter().map(int_to_qpoly).collect() };
    let (qa, qb) = (to_q(&pa), to_q(&pb));
    for _ in 0..6 {
        let ea: IPoly = pa.iter().map(|q| eval(q, &xi)).collect();
        let eb: IPoly = pb.iter().map(|q| eval(q, &xi)).collect();
        let (mut ea, mut eb) = (ea, eb);
        int_trim(&mut ea);
        int_trim(&mut eb);
        if let Some(g) = heu_gcd_uni(&ea, &eb) {
            let mut cand: Vec<IPoly> = g
                .iter()
                .map(|c| {
                    let mut p = gen_poly(c, &xi);
                    int_trim(&mut p);
                    p
                })
                .collect();
            while cand.last().is_some_and(|p| p.is_empty()) {
                cand.pop();
            }
            let c = int_content(cand.iter().flat_map(|q| q.iter().cloned()));
            if !c.is_zero() {
                let cand: Vec<IPoly> = cand.iter().map(|q| q.iter().map(|x| x / &c).collect()).collect();
                let qc = to_q(&cand);
                if bi_exact_div(&qa, &qc).is_some() && bi_exact_div(&qb, &qc).is_some() {
                    return Some(cand);
                }
            }
        }
        xi = next_xi(&xi);
    }
    None
}

/// Exact quotient `a / b` in `Q[t][z]`, `None` if `b` does not divide `a`.
pub(crate) fn bi_exact_div(a: &BiPoly, b: &BiPoly) -> Option<BiPoly> {
    let mut r = a.clone();
    let db = b.len() - 1;
    if r.len() < b.len() {
        return r.is_empty().then(Vec::new);
    }
    let mut q = vec![QPoly::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr].exact_div(&b[db])?;
        let k = dr - db;
        for (i, y) in b.iter().enumerate() {
            r[i + k] = r[i + k].sub(&y.mul(&c));
        }
        q[k] = c;
        bi_trim(&mut r);
    }
    if !r.is_empty() {
        return None;
    }
    bi_trim(&mut q);
    Some(q)
}
