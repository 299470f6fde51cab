//! Sparse exact Laurent/power-series kernels.
//!
//! Exponents are stored as scaled integers: a series with `denom = 24` stores
//! the monomial q^{e/24} under the integer key `e`. Truncation (`trunc`) is a
//! *strict upper bound on knowable exponents*: every exponent `< trunc` is
//! tracked exactly, everything `>= trunc` is unknown. Exact Laurent
//! polynomials carry the sentinel [`UNBOUNDED`]. Every binary operation
//! computes the tightest sound truncation of its result; precision is never
//! silently extended.
//!
//! Coefficients are arbitrary-precision signed integers. Maps are ordered so
//! iteration, serialization, and golden files are deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

use crate::{Error, Result};

/// Truncation sentinel for exactly-known (polynomial) series.
pub const UNBOUNDED: i64 = i64::MAX / 4;

fn sat(a: i64, b: i64) -> i64 {
    let s = a.saturating_add(b);
    s.min(UNBOUNDED)
}

/// Kronecker symbol (a|n), total in both arguments.
pub fn kronecker(a: i64, n: i64) -> i64 {
    // (a|0) is ±1 only for a = ±1.
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut a = a;
    let mut n = n;
    let mut result = 1i64;
    if n < 0 {
        n = -n;
        if a < 0 {
            result = -result;
        }
    }
    // Pull out the even part of n; (a|2) = 0, ±1 by a mod 8.
    let mut twos = 0;
    while n % 2 == 0 {
        n /= 2;
        twos += 1;
    }
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        let a8 = a.rem_euclid(8);
        if twos % 2 == 1 && (a8 == 3 || a8 == 5) {
            result = -result;
        }
    }
    // Now n odd positive: Jacobi symbol by reciprocity.
    a = a.rem_euclid(n.max(1));
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            let n8 = n.rem_euclid(8);
            if n8 == 3 || n8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a.rem_euclid(4) == 3 && n.rem_euclid(4) == 3 {
            result = -result;
        }
        a = a.rem_euclid(n);
    }
    if n == 1 {
        result
    } else {
        0
    }
}

/// One-variable sparse Laurent series over big integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    /// Exponent scale: key `e` encodes q^{e/denom}.
    pub denom: i64,
    /// Strict upper bound on knowable scaled exponents.
    pub trunc: i64,
    coeffs: BTreeMap<i64, BigInt>,
}

impl QSeries {
    pub fn zero(denom: i64, trunc: i64) -> Self {
        assert!(denom > 0);
        QSeries { denom, trunc, coeffs: BTreeMap::new() }
    }

    pub fn one(denom: i64, trunc: i64) -> Self {
        Self::monomial(denom, trunc, 0, BigInt::one())
    }

    pub fn monomial(denom: i64, trunc: i64, exp: i64, c: BigInt) -> Self {
        let mut s = Self::zero(denom, trunc);
        s.set(exp, c);
        s
    }

    pub fn set(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            self.coeffs.remove(&exp);
        } else {
            assert!(exp < self.trunc, "exponent {} beyond trunc {}", exp, self.trunc);
            self.coeffs.insert(exp, c);
        }
    }

    pub fn add_to(&mut self, exp: i64, c: &BigInt) {
        if c.is_zero() || exp >= self.trunc {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficient lookup that refuses to answer beyond the truncation.
    pub fn coeff_checked(&self, exp: i64) -> Result<BigInt> {
        if exp >= self.trunc {
            return Err(Error::InsufficientPrecision { pos: vec![exp] });
        }
        Ok(self.coeff(exp))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Smallest stored exponent, if any term exists.
    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Lower bound on any exponent that could ever appear (stored or unknown).
    fn support_lb(&self) -> i64 {
        self.min_exp().unwrap_or(self.trunc)
    }

    /// Drop all terms at exponents >= `trunc` and lower the bound.
    pub fn truncate(&self, trunc: i64) -> Self {
        let mut out = Self::zero(self.denom, trunc.min(self.trunc));
        for (&e, c) in &self.coeffs {
            if e < out.trunc {
                out.coeffs.insert(e, c.clone());
            }
        }
        out
    }

    /// Re-express with a new (multiple) exponent denominator.
    pub fn with_denom(&self, denom: i64) -> Self {
        assert!(denom % self.denom == 0, "new denom must be a multiple");
        let f = denom / self.denom;
        let mut out = Self::zero(denom, sat_mul(self.trunc, f));
        for (&e, c) in &self.coeffs {
            out.coeffs.insert(e * f, c.clone());
        }
        out
    }

    /// Re-express with a smaller denominator; every exponent must be divisible.
    pub fn reduce_denom(&self, denom: i64) -> Result<Self> {
        assert!(self.denom % denom == 0);
        let f = self.denom / denom;
        let mut out = Self::zero(denom, self.trunc.div_euclid(f));
        for (&e, c) in &self.coeffs {
            if e % f != 0 {
                return Err(Error::NonDivisible { pos: vec![e] });
            }
            if e / f < out.trunc {
                out.coeffs.insert(e / f, c.clone());
            }
        }
        Ok(out)
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        if a.denom == b.denom {
            (a.clone(), b.clone())
        } else {
            let l = a.denom.lcm(&b.denom);
            (a.with_denom(l), b.with_denom(l))
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = Self::aligned(self, other);
        let trunc = a.trunc.min(b.trunc);
        let mut out = Self::zero(a.denom, trunc);
        for (&e, c) in a.coeffs.iter().chain(b.coeffs.iter()) {
            out.add_to(e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, k: &BigInt) -> Self {
        let mut out = Self::zero(self.denom, self.trunc);
        if k.is_zero() {
            return out;
        }
        for (&e, c) in &self.coeffs {
            out.coeffs.insert(e, c * k);
        }
        out
    }

    /// Exact coefficientwise division by an integer scalar.
    pub fn scalar_div_exact(&self, k: &BigInt) -> Result<Self> {
        assert!(!k.is_zero());
        let mut out = Self::zero(self.denom, self.trunc);
        for (&e, c) in &self.coeffs {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return Err(Error::Exactness { divisor: k.to_string(), pos: vec![e] });
            }
            out.coeffs.insert(e, q);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = Self::aligned(self, other);
        let trunc = sat(a.trunc, b.support_lb()).min(sat(b.trunc, a.support_lb()));
        let mut out = Self::zero(a.denom, trunc);
        for (&ea, ca) in &a.coeffs {
            for (&eb, cb) in &b.coeffs {
                let e = ea + eb;
                if e < trunc {
                    out.add_to(e, &(ca * cb));
                }
            }
        }
        out
    }

    /// Integer power by repeated squaring; negative powers invert a unit
    /// to the stated result precision.
    pub fn pow_int(&self, n: i64, prec_hint: i64) -> Result<Self> {
        if n == 0 {
            return Ok(Self::one(self.denom, self.trunc.min(prec_hint)));
        }
        let base = if n < 0 { self.invert_unit(prec_hint)? } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut result: Option<Self> = None;
        let mut power = base;
        loop {
            if e & 1 == 1 {
                result = Some(match result {
                    None => power.clone(),
                    Some(r) => r.mul(&power),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            power = power.mul(&power);
        }
        Ok(result.unwrap())
    }

    /// Inverse of a unit series (leading coefficient ±1), computed so that
    /// the result's truncation is at least `prec` when the input allows it.
    pub fn invert_unit(&self, prec: i64) -> Result<Self> {
        let d = self.min_exp().ok_or(Error::NotAUnit)?;
        let lead = self.coeff(d);
        if !(lead.magnitude().is_one()) {
            return Err(Error::NotAUnit);
        }
        // f = lead * q^d * (1 + g). Inverse known below min(self.trunc - 2d, prec).
        let sound = sat(self.trunc, -2 * d);
        let trunc = sound.min(prec);
        let rel_trunc = sat(trunc, d); // truncation for u^{-1} where u = f * q^{-d}
        let mut inv_u = Self::zero(self.denom, rel_trunc);
        // Solve u * inv_u = 1 order by order: inv_u[0] = lead (since lead^2 = 1).
        if 0 < rel_trunc {
            inv_u.coeffs.insert(0, lead.clone());
        }
        // u shifted to start at exponent 0.
        let mut u = BTreeMap::new();
        for (&e, c) in &self.coeffs {
            u.insert(e - d, c.clone());
        }
        let mut e = 1i64;
        // Iterate over candidate exponents present in the convolution support.
        // The support of u beyond 0 drives new terms; walk exponents up to
        // rel_trunc, skipping runs with no contributions.
        let u_exps: Vec<i64> = u.keys().copied().filter(|&k| k > 0).collect();
        if !u_exps.is_empty() {
            while e < rel_trunc {
                // coefficient of q^e in u*inv_u must vanish:
                // sum_{k>0} u[k] * inv_u[e-k] + u[0]*inv_u[e] = 0
                let mut acc = BigInt::zero();
                let mut any = false;
                for &k in &u_exps {
                    if k > e {
                        break;
                    }
                    if let Some(c) = inv_u.coeffs.get(&(e - k)) {
                        acc += &u[&k] * c;
                        any = true;
                    }
                }
                if any && !acc.is_zero() {
                    // u[0] = lead with lead^2 = 1, so inv_u[e] = -acc * lead.
                    inv_u.coeffs.insert(e, -(acc * &lead));
                }
                e += 1;
            }
        }
        // Shift back: inverse = q^{-d} * inv_u.
        let mut out = Self::zero(self.denom, trunc);
        for (&e, c) in &inv_u.coeffs {
            if e - d < trunc {
                out.coeffs.insert(e - d, c.clone());
            }
        }
        Ok(out)
    }

    /// Exact division: returns q with q*b = a on the sound common precision;
    /// fails with the first position where coefficientwise division leaves a
    /// remainder. Terminates early if the running remainder empties (both
    /// operands exact polynomials).
    pub fn exact_div(&self, b: &Self) -> Result<Self> {
        let (a, b) = Self::aligned(self, b);
        let db = b.min_exp().ok_or_else(|| Error::InvalidArgument("division by zero series".into()))?;
        let lead = b.coeff(db);
        // Quotient soundly known below:
        let la = a.support_lb();
        let trunc = sat(a.trunc, -db).min(sat(sat(la, -db), sat(b.trunc, -db)));
        let mut rem = a.clone();
        let mut q = Self::zero(a.denom, trunc);
        loop {
            let e = match rem.min_exp() {
                None => break, // exact polynomial quotient
                Some(e) => e,
            };
            let qe = e - db;
            if qe >= trunc {
                break;
            }
            let (c, r) = rem.coeff(e).div_rem(&lead);
            if !r.is_zero() {
                return Err(Error::NonDivisible { pos: vec![e] });
            }
            q.coeffs.insert(qe, c.clone());
            for (&eb, cb) in &b.coeffs {
                rem.add_to(eb + qe, &-(cb * &c));
            }
            // The subtraction must clear the minimal term.
            debug_assert!(rem.min_exp().map_or(true, |m| m > e));
        }
        if rem.is_zero() && rem.trunc >= UNBOUNDED && a.trunc >= UNBOUNDED && b.trunc >= UNBOUNDED {
            q.trunc = UNBOUNDED;
        }
        Ok(q)
    }
}

fn sat_mul(a: i64, f: i64) -> i64 {
    a.saturating_mul(f).min(UNBOUNDED)
}

/// Dedekind eta: q^{1/24} prod (1 - q^n), via the character sum
/// sum_{n>=1} (12|n) q^{n^2/24}. Scale 24; `prec` in units of q^{1/24}.
pub fn eta(prec: i64) -> QSeries {
    let mut s = QSeries::zero(24, prec);
    let mut n = 1i64;
    while n * n < prec {
        let k = kronecker(12, n);
        if k != 0 {
            s.set(n * n, BigInt::from(k));
        }
        n += 1;
    }
    s
}

/// Dedekind eta by the defining product, used as an independent oracle.
pub fn eta_product(prec: i64) -> QSeries {
    let mut s = QSeries::monomial(24, prec, 1, BigInt::one());
    let mut n = 1i64;
    while 24 * n < prec {
        let f = {
            let mut f = QSeries::one(24, prec);
            f.set(24 * n, BigInt::from(-1));
            f
        };
        s = s.mul(&f).truncate(prec);
        n += 1;
    }
    s
}

/// Discriminant cusp form of weight 12: q prod (1-q^n)^24. Scale 1.
pub fn delta12(prec: i64) -> QSeries {
    let mut s = QSeries::monomial(1, prec, 1, BigInt::one());
    let mut n = 1i64;
    while n < prec {
        let mut f = QSeries::one(1, prec);
        f.set(n, BigInt::from(-1));
        s = s.mul(&f.pow_int(24, prec).unwrap()).truncate(prec);
        n += 1;
    }
    s
}

/// Inverse of the discriminant form: q^{-1} sum p24(n) q^n, known below `prec`.
pub fn delta12_inverse(prec: i64) -> QSeries {
    delta12(prec + 2).invert_unit(prec).unwrap()
}

/// Eisenstein series E4 or E6 at scale 1, normalized constant term 1.
pub fn eisenstein(k: u32, prec: i64) -> Result<QSeries> {
    let mult: i64 = match k {
        4 => 240,
        6 => -504,
        _ => return Err(Error::InvalidArgument(format!("eisenstein weight {} not in {{4,6}}", k))),
    };
    let mut s = QSeries::one(1, prec);
    for n in 1..prec.max(1) {
        let mut sigma = BigInt::zero();
        for d in 1..=n {
            if n % d == 0 {
                sigma += BigInt::from(d).pow(k - 1);
            }
        }
        s.set(n, sigma * BigInt::from(mult));
    }
    Ok(s)
}

/// Three-variable sparse Laurent series in (q, r, s). The r-direction is an
/// exact finite Laurent polynomial per (q, s) bidegree; q and s carry
/// truncations with the same semantics as [`QSeries`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriSeries {
    pub denom_q: i64,
    pub denom_r: i64,
    pub denom_s: i64,
    pub trunc_q: i64,
    pub trunc_s: i64,
    coeffs: BTreeMap<(i64, i64, i64), BigInt>,
}

impl TriSeries {
    pub fn zero(denom: (i64, i64, i64), trunc_q: i64, trunc_s: i64) -> Self {
        assert!(denom.0 > 0 && denom.1 > 0 && denom.2 > 0);
        TriSeries {
            denom_q: denom.0,
            denom_r: denom.1,
            denom_s: denom.2,
            trunc_q,
            trunc_s,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(denom: (i64, i64, i64), trunc_q: i64, trunc_s: i64) -> Self {
        let mut s = Self::zero(denom, trunc_q, trunc_s);
        s.set((0, 0, 0), BigInt::one());
        s
    }

    pub fn monomial(denom: (i64, i64, i64), trunc_q: i64, trunc_s: i64, e: (i64, i64, i64), c: BigInt) -> Self {
        let mut s = Self::zero(denom, trunc_q, trunc_s);
        s.set(e, c);
        s
    }

    pub fn denoms(&self) -> (i64, i64, i64) {
        (self.denom_q, self.denom_r, self.denom_s)
    }

    pub fn set(&mut self, e: (i64, i64, i64), c: BigInt) {
        if c.is_zero() {
            self.coeffs.remove(&e);
        } else {
            assert!(e.0 < self.trunc_q && e.2 < self.trunc_s);
            self.coeffs.insert(e, c);
        }
    }

    pub fn add_to(&mut self, e: (i64, i64, i64), c: &BigInt) {
        if c.is_zero() || e.0 >= self.trunc_q || e.2 >= self.trunc_s {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn coeff(&self, e: (i64, i64, i64)) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64, i64), &BigInt)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_q(&self) -> Option<i64> {
        self.coeffs.keys().map(|k| k.0).min()
    }

    pub fn min_s(&self) -> Option<i64> {
        self.coeffs.keys().map(|k| k.2).min()
    }

    fn support_lb_q(&self) -> i64 {
        self.min_q().unwrap_or(self.trunc_q)
    }

    fn support_lb_s(&self) -> i64 {
        self.min_s().unwrap_or(self.trunc_s)
    }

    pub fn truncate(&self, trunc_q: i64, trunc_s: i64) -> Self {
        let mut out = Self::zero(self.denoms(), trunc_q.min(self.trunc_q), trunc_s.min(self.trunc_s));
        for (&e, c) in &self.coeffs {
            if e.0 < out.trunc_q && e.2 < out.trunc_s {
                out.coeffs.insert(e, c.clone());
            }
        }
        out
    }

    pub fn with_denoms(&self, denom: (i64, i64, i64)) -> Self {
        assert!(denom.0 % self.denom_q == 0 && denom.1 % self.denom_r == 0 && denom.2 % self.denom_s == 0);
        let (fq, fr, fs) = (denom.0 / self.denom_q, denom.1 / self.denom_r, denom.2 / self.denom_s);
        let mut out = Self::zero(denom, sat_mul(self.trunc_q, fq), sat_mul(self.trunc_s, fs));
        for (&(eq, er, es), c) in &self.coeffs {
            out.coeffs.insert((eq * fq, er * fr, es * fs), c.clone());
        }
        out
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        if a.denoms() == b.denoms() {
            (a.clone(), b.clone())
        } else {
            let d = (
                a.denom_q.lcm(&b.denom_q),
                a.denom_r.lcm(&b.denom_r),
                a.denom_s.lcm(&b.denom_s),
            );
            (a.with_denoms(d), b.with_denoms(d))
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = Self::aligned(self, other);
        let mut out = Self::zero(a.denoms(), a.trunc_q.min(b.trunc_q), a.trunc_s.min(b.trunc_s));
        for (&e, c) in a.coeffs.iter().chain(b.coeffs.iter()) {
            out.add_to(e, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = Self::aligned(self, other);
        let trunc_q = sat(a.trunc_q, b.support_lb_q()).min(sat(b.trunc_q, a.support_lb_q()));
        let trunc_s = sat(a.trunc_s, b.support_lb_s()).min(sat(b.trunc_s, a.support_lb_s()));
        let mut out = Self::zero(a.denoms(), trunc_q, trunc_s);
        for (&(q1, r1, s1), c1) in &a.coeffs {
            for (&(q2, r2, s2), c2) in &b.coeffs {
                let e = (q1 + q2, r1 + r2, s1 + s2);
                if e.0 < trunc_q && e.2 < trunc_s {
                    out.add_to(e, &(c1 * c2));
                }
            }
        }
        out
    }

    /// Substitution z2 -> d*z2: multiplies every r-exponent by d.
    pub fn rescale_r(&self, d: i64) -> Self {
        assert!(d >= 1);
        let mut out = Self::zero(self.denoms(), self.trunc_q, self.trunc_s);
        for (&(eq, er, es), c) in &self.coeffs {
            out.coeffs.insert((eq, er * d, es), c.clone());
        }
        out
    }

    /// Compare on the intersection of the two truncation boxes (after
    /// denominator alignment); returns the first differing monomial if any.
    pub fn first_mismatch(&self, other: &Self) -> Option<((i64, i64, i64), BigInt, BigInt)> {
        let (a, b) = Self::aligned(self, other);
        let tq = a.trunc_q.min(b.trunc_q);
        let ts = a.trunc_s.min(b.trunc_s);
        let mut keys: Vec<(i64, i64, i64)> = a
            .coeffs
            .keys()
            .chain(b.coeffs.keys())
            .copied()
            .filter(|e| e.0 < tq && e.2 < ts)
            .collect();
        keys.sort();
        keys.dedup();
        for e in keys {
            let ca = a.coeff(e);
            let cb = b.coeff(e);
            if ca != cb {
                return Some((e, ca, cb));
            }
        }
        None
    }
}

/// Serialization of series to the documented JSON shapes.
pub mod json {
    use super::{QSeries, TriSeries};
    use num_bigint::BigInt;
    use serde_json::{json, Value};
    use std::str::FromStr;

    pub fn qseries_to_json(s: &QSeries) -> Value {
        let terms: Vec<Value> = s.terms().map(|(&e, c)| json!([e, c.to_string()])).collect();
        json!({ "denom": s.denom, "trunc": s.trunc, "terms": terms })
    }

    pub fn qseries_from_json(v: &Value) -> Option<QSeries> {
        let denom = v.get("denom")?.as_i64()?;
        let trunc = v.get("trunc")?.as_i64()?;
        let mut s = QSeries::zero(denom, trunc);
        for t in v.get("terms")?.as_array()? {
            let e = t.get(0)?.as_i64()?;
            let c = BigInt::from_str(t.get(1)?.as_str()?).ok()?;
            s.set(e, c);
        }
        Some(s)
    }

    pub fn triseries_to_json(s: &TriSeries) -> Value {
        let terms: Vec<Value> = s
            .terms()
            .map(|(&(eq, er, es), c)| json!([eq, er, es, c.to_string()]))
            .collect();
        json!({
            "denom_q": s.denom_q, "denom_r": s.denom_r, "denom_s": s.denom_s,
            "trunc_q": s.trunc_q, "trunc_s": s.trunc_s, "terms": terms
        })
    }

    pub fn triseries_from_json(v: &Value) -> Option<TriSeries> {
        let d = (
            v.get("denom_q")?.as_i64()?,
            v.get("denom_r")?.as_i64()?,
            v.get("denom_s")?.as_i64()?,
        );
        let mut s = TriSeries::zero(d, v.get("trunc_q")?.as_i64()?, v.get("trunc_s")?.as_i64()?);
        for t in v.get("terms")?.as_array()? {
            let e = (t.get(0)?.as_i64()?, t.get(1)?.as_i64()?, t.get(2)?.as_i64()?);
            let c = BigInt::from_str(t.get(3)?.as_str()?).ok()?;
            s.set(e, c);
        }
        Some(s)
    }
}
