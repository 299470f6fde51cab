//! The exponential (Borcherds) lift of weight-0 index-t Jacobi forms:
//! generalized Weyl vector `(A, B, C)`, truncated product expansion of
//! `B_φ`, lift additivity, Weyl-vector type classification, and
//! imaginary-simple-root extraction from a denominator-identity series.

use crate::hyperbolic::{self, ri, Vec3, R};
use crate::jacobi::{self, JacobiForm, LSCALE, QSCALE};
use crate::reflective::{self, RootClass};
use crate::series::TriSeries;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Common exponent denominators of a lift at index t: `(q, r, s)` scales.
pub fn tri_denom(t: i64) -> (i64, i64, i64) {
    (24i64.lcm(&(4 * t)), LSCALE, 24i64.lcm(&(4 * t)))
}

/// Result of the exponential lift.
#[derive(Debug, Clone)]
pub struct LiftResult {
    pub t: i64,
    /// Generalized Weyl vector (A, B, C), exact.
    pub weyl: (R, R, R),
    /// Half-integer weight f(0,0)/2.
    pub weight: R,
    /// Truncated product expansion, minimal monomial q^A r^B s^C ↦ 1.
    pub expansion: TriSeries,
    /// Divisor multiplicities by root class (empty for non-reflective input).
    pub divisor: Vec<(RootClass, BigInt)>,
}

fn coeff_i64(c: &BigInt, what: &str) -> Result<i64> {
    c.to_i64().ok_or_else(|| Error::InvalidArgument(format!("{what} exponent overflows i64")))
}

/// The q⁰-slice Fourier coefficients f(0, l) of a weight-0 index-t form,
/// as (l, exponent) pairs.
fn q0_slice(phi: &JacobiForm) -> Result<Vec<(i64, i64)>> {
    let mut out = Vec::new();
    for (key2l, c) in phi.slice(0) {
        if key2l.rem_euclid(LSCALE) != 0 {
            return Err(Error::InvalidArgument("half-integral r-support in weight-0 input".into()));
        }
        out.push((key2l / LSCALE, coeff_i64(&c, "f(0,l)")?));
    }
    Ok(out)
}

/// Weyl-vector exponents `A = (1/24)Σf(0,l)`, `B = (1/2)Σ_{l>0} l·f(0,l)`,
/// `C = (1/4t)Σ l²·f(0,l)`.
pub fn lift_exponents(phi: &JacobiForm, t: i64) -> Result<(R, R, R)> {
    let f0 = q0_slice(phi)?;
    let mut sa = 0i64;
    let mut sb = 0i64;
    let mut sc = 0i64;
    for (l, e) in &f0 {
        sa += e;
        if *l > 0 {
            sb += l * e;
        }
        sc += l * l * e;
    }
    Ok((R::new(sa, 24), R::new(sb, 2), R::new(sc, 4 * t)))
}

/// Weight of the lift: f(0,0)/2.
pub fn lift_weight(phi: &JacobiForm) -> Result<R> {
    let c = phi.coeff_int(0, 0);
    Ok(R::new(coeff_i64(&c, "f(0,0)")?, 2))
}

/// Sign class of the generalized Weyl vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WeylType {
    Elliptic,
    Parabolic,
    Hyperbolic,
    Zero,
}

impl std::fmt::Display for WeylType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            WeylType::Elliptic => "elliptic",
            WeylType::Parabolic => "parabolic",
            WeylType::Hyperbolic => "hyperbolic",
            WeylType::Zero => "zero",
        })
    }
}

/// Classify ρ = (A, B, C) by the sign of ρ² = −2AC + B²/2t; the zero vector
/// is reported separately.
pub fn weyl_type(rho: (R, R, R), t: i64) -> WeylType {
    let (a, b, c) = rho;
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return WeylType::Zero;
    }
    let sq = -ri(2) * a * c + b * b / ri(2 * t);
    match sq.cmp(&R::zero()) {
        std::cmp::Ordering::Less => WeylType::Elliptic,
        std::cmp::Ordering::Equal => WeylType::Parabolic,
        std::cmp::Ordering::Greater => WeylType::Hyperbolic,
    }
}

/// Integer-coefficient expansion of one product factor
/// `(1 − qⁿ rˡ sᵐ)^e` as a TriSeries truncated to the working box; the caller
/// guarantees the exponent sum is bounded inside the box.
fn factor_series(
    denom: (i64, i64, i64),
    trunc_q: i64,
    trunc_s: i64,
    n: i64,
    l: i64,
    m: i64,
    e: i64,
) -> Result<TriSeries> {
    let (dq, _dr, ds) = denom;
    let mut out = TriSeries::zero(denom, trunc_q, trunc_s);
    // Maximal power k of the base monomial that can matter.
    let kmax_bound = |step: i64, bound: i64| -> i64 {
        if step <= 0 {
            i64::MAX / 2
        } else {
            (bound - 1).div_euclid(step).max(0)
        }
    };
    let kq = kmax_bound(n * dq, trunc_q);
    let ks = kmax_bound(m * ds, trunc_s);
    let kmax = if e > 0 { e.min(kq.min(ks)) } else { kq.min(ks) };
    if e < 0 && n <= 0 && m <= 0 {
        return Err(Error::Unsupported(format!(
            "negative-power factor (1 - q^{n} r^{l} s^{m})^{e} has an infinite tail"
        )));
    }
    // Binomial coefficients: e > 0 gives (−1)^k C(e,k); e < 0 gives
    // C(k−e−1, −e−1) with sign (+1) since (−1)^k from (−X)^k cancels.
    let mut coef = BigInt::one();
    for k in 0..=kmax {
        if k > 0 {
            if e > 0 {
                // C(e,k) = C(e,k−1)·(e−k+1)/k
                coef = coef * BigInt::from(e - k + 1) / BigInt::from(k);
            } else {
                // C(k−e−1,k) = C(k−e−2,k−1)·(k−e−1)/k
                coef = coef * BigInt::from(k - e - 1) / BigInt::from(k);
            }
        }
        let sign = if e > 0 && k % 2 == 1 { -1 } else { 1 };
        out.add_to((k * n * dq, k * l * LSCALE, k * m * ds), &(BigInt::from(sign) * &coef));
    }
    Ok(out)
}

/// The combined pure-r subproduct `∏_{l<0} (1 − rˡ)^{f(0,l)}` as an exact
/// finite Laurent polynomial.  Negative exponents are handled by exact
/// division of the positive-exponent part by the negative-exponent part;
/// when the division is not exact the subproduct genuinely has an infinite
/// r-tail and the lift is unsupported.
fn pure_r_subproduct(f0: &[(i64, i64)]) -> Result<jacobi::RPoly> {
    let mut num: jacobi::RPoly = BTreeMap::from([(0, BigInt::one())]);
    let mut den: jacobi::RPoly = BTreeMap::from([(0, BigInt::one())]);
    for &(l, e) in f0 {
        if l >= 0 || e == 0 {
            continue;
        }
        let mut base: jacobi::RPoly = BTreeMap::from([(0, BigInt::one())]);
        jacobi::rpoly::add_to(&mut base, l * LSCALE, &BigInt::from(-1));
        for _ in 0..e.abs() {
            if e > 0 {
                num = jacobi::rpoly::mul(&num, &base);
            } else {
                den = jacobi::rpoly::mul(&den, &base);
            }
        }
    }
    jacobi::rpoly::divexact(&num, &den).ok_or_else(|| {
        Error::Unsupported(
            "pure-r factors with negative exponents do not combine to a finite Laurent polynomial"
                .into(),
        )
    })
}

/// The Theorem-2.2.1 exponential lift
/// `B_φ = q^A r^B s^C ∏_{(n,l,m)>0} (1 − qⁿrˡsᵐ)^{f(nm,l)}`
/// truncated at absolute scaled exponents `(prec_q, prec_s)` in the
/// `tri_denom(t)` scale.
pub fn borcherds_product(phi: &JacobiForm, t: i64, prec_q: i64, prec_s: i64) -> Result<LiftResult> {
    let denom = tri_denom(t);
    let dq = denom.0;
    let (a, b, c) = lift_exponents(phi, t)?;
    let weight = lift_weight(phi)?;
    let f0 = q0_slice(phi)?;
    // Prefactor exponents in scaled units.
    let scaled = |x: R, d: i64| -> Result<i64> {
        let v = x * ri(d);
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(Error::InvalidArgument(format!("exponent {x} not representable at scale {d}")))
        }
    };
    let ea = scaled(a, denom.0)?;
    let eb = scaled(b, denom.1)?;
    let ec = scaled(c, denom.2)?;
    // Working box for the bare product (before the prefactor shift).
    let acc_tq0 = (prec_q - ea).max(dq);
    let acc_ts = (prec_s - ec).max(dq);
    let pole = phi.pole_order();
    // Slack for negative-n factors: each (1 − qⁿrˡsᵐ)^e with n < 0 (so
    // nm ≥ −pole, e = f(nm,l) > 0) can contribute at most
    // min(e, s-room)·|n| negative integer q-powers.
    let mut neg_slack = 0i64;
    if pole > 0 {
        for m in 1..=pole {
            for n in -(pole / m)..0 {
                for (key2l, coeff) in phi.slice(n * m * QSCALE) {
                    let e = coeff_i64(&coeff, "f")?;
                    if e < 0 {
                        return Err(Error::Unsupported(format!(
                            "negative exponent on negative-n factor (n={n}, l={}, m={m})",
                            key2l / LSCALE
                        )));
                    }
                    let sroom = (acc_ts - 1).div_euclid(m * dq).max(0);
                    neg_slack += e.min(sroom) * (-n) * dq;
                }
            }
        }
    }
    let acc_tq = acc_tq0 + neg_slack;
    let nq_max = (acc_tq - 1).div_euclid(dq); // largest factor q-power
    let ns_max = (acc_ts - 1).div_euclid(dq); // largest factor s-power
    // φ must supply f(nm, l) for nm up to nq_max·ns_max.
    let need = (nq_max * ns_max + 1) * QSCALE;
    if phi.trunc_q < need {
        return Err(Error::InsufficientPrecision { pos: vec![phi.trunc_q, need] });
    }
    let mut acc = TriSeries::one(denom, acc_tq, acc_ts);
    // (1) pure-r factors: m = n = 0, l < 0.
    let pure_r = pure_r_subproduct(&f0)?;
    {
        let mut fac = TriSeries::zero(denom, acc_tq, acc_ts);
        for (&e2l, coeff) in &pure_r {
            fac.set((0, e2l, 0), coeff.clone());
        }
        acc = acc.mul(&fac);
    }
    // (2) m = 0, n > 0 factors: exponent f(0, l) for every l.
    for n in 1..=nq_max {
        for &(l, e) in &f0 {
            if e == 0 {
                continue;
            }
            let fac = factor_series(denom, acc_tq, acc_ts, n, l, 0, e)?;
            acc = acc.mul(&fac);
        }
    }
    // (3) m > 0 factors, n ranging over nm ≥ −pole up to the q-box.
    for m in 1..=ns_max {
        let n_lo = if pole > 0 { -(pole / m) } else { 0 };
        for n in n_lo..=nq_max {
            for (key2l, coeff) in phi.slice(n * m * QSCALE) {
                if key2l.rem_euclid(LSCALE) != 0 {
                    return Err(Error::InvalidArgument(
                        "half-integral r-support in weight-0 input".into(),
                    ));
                }
                let l = key2l / LSCALE;
                let e = coeff_i64(&coeff, "f")?;
                if e == 0 {
                    continue;
                }
                if e < 0 && n < 0 {
                    return Err(Error::Unsupported(format!(
                        "negative exponent on negative-n factor (n={n}, l={l}, m={m})"
                    )));
                }
                let fac = factor_series(denom, acc_tq, acc_ts, n, l, m, e)?;
                acc = acc.mul(&fac);
            }
        }
    }
    // Prefactor shift and final truncation.
    let pref = TriSeries::monomial(
        denom,
        crate::series::UNBOUNDED,
        crate::series::UNBOUNDED,
        (ea, eb, ec),
        BigInt::one(),
    );
    let expansion = acc.mul(&pref).truncate(prec_q, prec_s);
    if expansion.trunc_q < prec_q.min(acc_tq0 + ea) || expansion.trunc_s < prec_s.min(acc_ts + ec) {
        return Err(Error::InsufficientPrecision {
            pos: vec![expansion.trunc_q, prec_q, expansion.trunc_s, prec_s],
        });
    }
    let divisor = reflective::divisor_multiplicities(phi, t).unwrap_or_default();
    Ok(LiftResult { t, weyl: (a, b, c), weight, expansion, divisor })
}

/// Linear combination of the reflective basis forms at index t.
pub fn combo_form(t: i64, combo: &[i64], prec: i64) -> Result<JacobiForm> {
    let dim = reflective::basis_dim(t);
    if combo.len() != dim {
        return Err(Error::InvalidArgument(format!(
            "combo length {} != basis dimension {dim} at t={t}",
            combo.len()
        )));
    }
    let mut acc: Option<JacobiForm> = None;
    for (j, &cj) in combo.iter().enumerate() {
        if cj == 0 {
            continue;
        }
        let f = reflective::basis_form(t, j + 1, prec)?.scalar_mul(&BigInt::from(cj));
        acc = Some(match acc {
            None => f,
            Some(g) => g.add(&f),
        });
    }
    acc.ok_or_else(|| Error::InvalidArgument("zero combination".into()))
}

/// Lift a basis combination, choosing the Jacobi-form precision needed for
/// the requested box automatically.
pub fn lift_combo(t: i64, combo: &[i64], prec_q: i64, prec_s: i64) -> Result<LiftResult> {
    let dq = tri_denom(t).0;
    // First pass at low precision to learn the exponents and pole structure.
    let probe = combo_form(t, combo, 3 * QSCALE)?;
    let (a, _b, c) = lift_exponents(&probe, t)?;
    let ea = (a * ri(dq)).to_integer();
    let ec = (c * ri(dq)).to_integer();
    let acc_ts = (prec_s - ec).max(dq);
    let pole = probe.pole_order();
    let mut neg_slack = 0i64;
    if pole > 0 {
        for m in 1..=pole {
            for n in -(pole / m)..0 {
                for (_k, coeff) in probe.slice(n * m * QSCALE) {
                    let e = coeff.to_i64().unwrap_or(0);
                    if e > 0 {
                        let sroom = (acc_ts - 1).div_euclid(m * dq).max(0);
                        neg_slack += e.min(sroom) * (-n) * dq;
                    }
                }
            }
        }
    }
    let acc_tq = (prec_q - ea).max(dq) + neg_slack;
    let nq_max = (acc_tq - 1).div_euclid(dq);
    let ns_max = (acc_ts - 1).div_euclid(dq);
    let need = (nq_max * ns_max + 1) * QSCALE;
    let phi = combo_form(t, combo, need.max(3 * QSCALE))?;
    borcherds_product(&phi, t, prec_q, prec_s)
}

/// Check `B_{φ+ψ} = B_φ · B_ψ` on the shared truncation box; also checks
/// that the Weyl vectors add.
pub fn lift_additivity_check(
    phi: &JacobiForm,
    psi: &JacobiForm,
    t: i64,
    prec_q: i64,
    prec_s: i64,
) -> Result<bool> {
    let lp = borcherds_product(phi, t, prec_q, prec_s)?;
    let lq = borcherds_product(psi, t, prec_q, prec_s)?;
    let lsum = borcherds_product(&phi.add(psi), t, prec_q, prec_s)?;
    let (a1, b1, c1) = lp.weyl;
    let (a2, b2, c2) = lq.weyl;
    let (a3, b3, c3) = lsum.weyl;
    if (a1 + a2, b1 + b2, c1 + c2) != (a3, b3, c3) {
        return Ok(false);
    }
    let prod = lp.expansion.mul(&lq.expansion);
    Ok(prod.first_mismatch(&lsum.expansion).is_none())
}

/// Extract imaginary-simple-root multiplicities `m(a)` from a
/// denominator-identity series `Φ = Σ_w ε(w)(e^{wρ} − Σ_a m(a) e^{w(ρ+a)})`.
///
/// Every monomial of `Φ` of the form `ρ + a` with `a` in the closed chamber
/// cone belongs to the `w = 1` term (no other Weyl translate can land
/// there), so `m(a) = −coeff(ρ + a)`, and the coefficient at `ρ` itself must
/// be +1.  All remaining monomials inside the box must be certified as
/// `w ≠ 1` images by reflecting them back into the chamber; otherwise the
/// box is declared too small.
pub fn extract_simple_multiplicities(
    phi: &TriSeries,
    chamber: &hyperbolic::Chamber,
) -> Result<BTreeMap<(i64, i64, i64), BigInt>> {
    let t = chamber.t;
    let rho = chamber
        .weyl
        .ok_or_else(|| Error::InvalidArgument("chamber has no Weyl vector".into()))?;
    let (dq, dr, ds) = phi.denoms();
    let in_cone = |a: &Vec3| -> bool {
        chamber.roots.iter().all(|al| !hyperbolic::inner(t, a, al).is_positive())
    };
    let mut out: BTreeMap<(i64, i64, i64), BigInt> = BTreeMap::new();
    let mut unexplained: Vec<((i64, i64, i64), BigInt)> = Vec::new();
    let mut saw_rho = false;
    for (&(eq, er, es), coeff) in phi.terms() {
        let x = Vec3::new(R::new(eq, dq), R::new(er, dr), R::new(es, ds));
        let a = x.sub(&rho);
        if a.is_zero() {
            if !coeff.is_one() {
                return Err(Error::Mismatch {
                    pos: vec![eq, er, es],
                    lhs: coeff.to_string(),
                    rhs: "1".into(),
                });
            }
            saw_rho = true;
            continue;
        }
        if in_cone(&a) {
            out.insert(
                (eq - (rho.n * ri(dq)).to_integer(),
                 er - (rho.l * ri(dr)).to_integer(),
                 es - (rho.m * ri(ds)).to_integer()),
                -coeff.clone(),
            );
        } else {
            unexplained.push(((eq, er, es), coeff.clone()));
        }
    }
    if !saw_rho {
        return Err(Error::BoxTooSmall);
    }
    // Certify the leftovers: each must reflect back into ρ + cone.
    for ((eq, er, es), _c) in unexplained {
        let mut y = Vec3::new(R::new(eq, dq), R::new(er, dr), R::new(es, ds));
        let mut ok = false;
        for _ in 0..500 {
            if let Some(al) =
                chamber.roots.iter().find(|al| hyperbolic::inner(t, &y, al).is_positive())
            {
                y = hyperbolic::reflect(t, al, &y);
            } else {
                ok = in_cone(&y.sub(&rho));
                break;
            }
        }
        if !ok {
            return Err(Error::BoxTooSmall);
        }
    }
    Ok(out)
}

/// Solve `1 − Σ_{k≥1} m(k)tᵏ = ∏_{n≥1} (1 − tⁿ)^{τ(n)}` for `τ(1..=N)`
/// given `m(1..=N)` (0-indexed input slice).
pub fn tau_from_m(m: &[BigInt]) -> Vec<BigInt> {
    let n_max = m.len();
    // F = 1 − Σ m(k) t^k, maintained mod t^{N+1}.
    let mut f: Vec<BigInt> = vec![BigInt::zero(); n_max + 1];
    f[0] = BigInt::one();
    for (k, mk) in m.iter().enumerate() {
        f[k + 1] = -mk.clone();
    }
    let mut tau = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let tn = -f[n].clone();
        // Divide F by (1−tⁿ)^{τ(n)}: multiply by Σ_k C(τ+k−1, k) t^{nk}.
        let kcap = n_max / n;
        let mut binoms: Vec<BigInt> = Vec::with_capacity(kcap + 1);
        let mut cur = BigInt::one();
        binoms.push(cur.clone());
        for k in 1..=kcap {
            // C(τ+k−1,k) = C(τ+k−2,k−1)·(τ+k−1)/k, exact.
            cur = cur * (&tn + BigInt::from(k as i64 - 1)) / BigInt::from(k as i64);
            binoms.push(cur.clone());
        }
        let mut g = vec![BigInt::zero(); n_max + 1];
        for i in 0..=n_max {
            if f[i].is_zero() {
                continue;
            }
            for (k, bk) in binoms.iter().enumerate() {
                let j = i + k * n;
                if j > n_max {
                    break;
                }
                if !bk.is_zero() {
                    g[j] += &f[i] * bk;
                }
            }
        }
        f = g;
        tau.push(tn);
    }
    tau
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reflective::basis_form;

    fn r2(n: i64, d: i64) -> R {
        R::new(n, d)
    }

    #[test]
    fn lift_exponent_examples() {
        let p = 4 * QSCALE;
        let f = basis_form(1, 1, p).unwrap();
        assert_eq!(lift_exponents(&f, 1).unwrap(), (r2(1, 2), r2(1, 2), r2(1, 2)));
        let f = basis_form(2, 1, p).unwrap();
        assert_eq!(lift_exponents(&f, 2).unwrap(), (r2(1, 4), r2(1, 2), r2(1, 4)));
        let f = basis_form(2, 3, p).unwrap();
        assert_eq!(lift_exponents(&f, 2).unwrap(), (ri(1), ri(0), ri(0)));
        assert_eq!(lift_weight(&basis_form(2, 3, p).unwrap()).unwrap(), ri(12));
        assert_eq!(lift_weight(&basis_form(4, 1, p).unwrap()).unwrap(), r2(1, 2));
    }

    #[test]
    fn weyl_type_examples() {
        assert_eq!(weyl_type((r2(1, 2), r2(1, 2), r2(1, 2)), 1), WeylType::Elliptic);
        assert_eq!(weyl_type((ri(1), ri(0), ri(0)), 2), WeylType::Parabolic);
        assert_eq!(weyl_type((ri(0), ri(0), ri(0)), 12), WeylType::Zero);
        assert_eq!(weyl_type((ri(1), ri(4), ri(1)), 2), WeylType::Hyperbolic);
        // t=12 first basis form has an empty q⁰ slice: ρ = 0.
        let f = basis_form(12, 1, 4 * QSCALE).unwrap();
        let rho = lift_exponents(&f, 12).unwrap();
        assert_eq!(weyl_type(rho, 12), WeylType::Zero);
    }

    #[test]
    fn leading_coefficients_of_phi01_lift() {
        let lift = lift_combo(1, &[1, 0], 3 * 24, 3 * 24).unwrap();
        // q^{1/2} r^{1/2} s^{1/2} ↦ 1 and q^{1/2} r^{−1/2} s^{1/2} ↦ −1.
        assert_eq!(lift.expansion.coeff((12, 1, 12)), BigInt::from(1));
        assert_eq!(lift.expansion.coeff((12, -1, 12)), BigInt::from(-1));
        // Nothing below the prefactor bidegree.
        assert_eq!(lift.expansion.min_q(), Some(12));
        assert_eq!(lift.expansion.min_s(), Some(12));
    }

    #[test]
    fn weights_and_divisor_consistency() {
        let d2 = tri_denom(2).0;
        let lift = lift_combo(2, &[0, 0, 1], 3 * d2, 2 * d2).unwrap();
        assert_eq!(lift.weight, ri(12));
        assert_eq!(lift.weyl, (ri(1), ri(0), ri(0)));
        assert!(!lift.divisor.is_empty());
        let d4 = tri_denom(4).0;
        let lift = lift_combo(4, &[1, 0, 0], 2 * d4, 2 * d4).unwrap();
        assert_eq!(lift.weight, r2(1, 2));
        assert_eq!(lift.weyl, (r2(1, 8), r2(1, 2), r2(1, 8)));
    }

    #[test]
    fn integrality_and_additivity() {
        // All TriSeries coefficients are BigInt by construction; additivity
        // is the real content.
        let p = 30 * QSCALE;
        let f1 = basis_form(1, 1, p).unwrap();
        let f2 = basis_form(1, 2, p).unwrap();
        assert!(lift_additivity_check(&f1, &f2, 1, 5 * 24, 5 * 24).unwrap());
        let g1 = basis_form(2, 1, p).unwrap();
        let g3 = basis_form(2, 3, p).unwrap();
        let d2 = tri_denom(2).0;
        assert!(lift_additivity_check(&g1, &g3, 2, 4 * d2, 3 * d2).unwrap());
    }

    #[test]
    fn unsupported_t36_xi1() {
        // The t=36 first basis form has f(0,−1) = −3 with no compensating
        // pure-r factor: the pure-r subproduct has an infinite tail.
        let err = lift_combo(36, &[1, 0, 0], 288, 288).unwrap_err();
        assert!(matches!(err, Error::Unsupported(_)), "got {err:?}");
    }

    #[test]
    fn tau_recovers_24() {
        // 1 − Σ m(k)tᵏ = ∏ (1−tⁿ)²⁴: build the product, read off m, invert.
        let n_max = 12usize;
        let mut prod = vec![BigInt::zero(); n_max + 1];
        prod[0] = BigInt::one();
        for n in 1..=n_max {
            // multiply by (1−tⁿ)^24 mod t^{N+1}
            for _ in 0..24 {
                let mut next = prod.clone();
                for i in 0..=n_max {
                    if i + n <= n_max {
                        let v = prod[i].clone();
                        next[i + n] -= v;
                    }
                }
                prod = next;
            }
        }
        let m: Vec<BigInt> = (1..=n_max).map(|k| -prod[k].clone()).collect();
        let tau = tau_from_m(&m);
        assert!(tau.iter().all(|x| *x == BigInt::from(24)));
    }

    #[test]
    fn extraction_from_delta5_product() {
        // Φ = B_{ξ⁽¹⁾} at t=1 is the denominator identity series; the
        // chamber is the A_{1,II} triangle.
        let lift = lift_combo(1, &[1, 0], 4 * 24, 4 * 24).unwrap();
        let roots =
            vec![Vec3::int(0, -1, 0), Vec3::int(1, 1, 0), Vec3::int(0, 1, 1)];
        let weyl = hyperbolic::weyl_vector(1, &roots);
        let chamber = hyperbolic::Chamber {
            t: 1,
            roots,
            odd: vec![],
            sym: vec![],
            weyl,
            complete: true,
        };
        let m = extract_simple_multiplicities(&lift.expansion, &chamber).unwrap();
        // Brute-force oracle: every extracted multiplicity equals the negated
        // coefficient at ρ + a.
        for (&(aq, ar, asx), mv) in &m {
            assert_eq!(
                lift.expansion.coeff((aq + 12, ar + 1, asx + 12)),
                -mv.clone()
            );
        }
        assert!(!m.is_empty());
    }
}
