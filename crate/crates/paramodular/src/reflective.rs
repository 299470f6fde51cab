//! Reflective weight-0 Jacobi forms on the paramodular tower.
//!
//! For each of the nine singular indices t the space of reflective forms is
//! finite dimensional; this module builds an explicit basis, enumerates the
//! rational quadratic divisor classes that reflective forms can meet, reads
//! off divisor multiplicities from Fourier coefficients, and searches for the
//! basis combinations whose multiplicities are all 0 or 1 (the candidates for
//! denominator identities of the Lorentzian Kac--Moody algebras).

use crate::jacobi::{
    self, generator, theta_quotient, EisensteinJacobi, Generator, JacobiForm, LSCALE, QSCALE,
};
use crate::series::{self, UNBOUNDED};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::sync::Mutex;

/// The indices t for which a nonzero reflective form exists.
pub const REFLECTIVE_INDICES: [i64; 9] = [1, 2, 3, 4, 8, 9, 12, 16, 36];

/// A class of rational quadratic divisors met by reflective forms: the
/// discriminant invariant `d > 0` together with `lbar = ±l mod 2t`
/// (represented by its smallest nonnegative value, in `[0, t]`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RootClass {
    pub d: i64,
    pub lbar: i64,
}

/// Dimension of the reflective space at index t.
pub fn basis_dim(t: i64) -> usize {
    match t {
        1 | 16 => 2,
        2 | 3 | 4 | 8 | 9 | 36 => 3,
        12 => 4,
        _ => 0,
    }
}

// ---------------------------------------------------------------------------
// Basis expressions.
//
// Each basis form is a polynomial expression in the weight-0 generators and
// the weight-4 Eisenstein--Jacobi series, possibly with one group of terms of
// weight 12 divided by the discriminant form, plus a handful of special
// constructions (index rescalings, theta quotients, references to other basis
// members). The polynomial parts are stored as monomial tables so they can be
// audited against their source and reused by the CLI.
// ---------------------------------------------------------------------------

/// Atoms appearing in basis monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    /// Weight-0 generators of index 1..4.
    P1,
    P2,
    P3,
    P4,
    /// The scalar weight-4 Eisenstein series.
    E4,
    /// Weight-4 index-m Eisenstein--Jacobi series.
    E41,
    E42,
    E43,
    /// The index-6 cusp-like generator (theta/eta)^12.
    D06,
}

use Atom::*;

/// A monomial: integer coefficient times a product of atom powers.
pub type Mono = (i64, &'static [(Atom, u32)]);

/// One basis form: an optional weight-12 numerator divided by the
/// discriminant form, a weight-0 polynomial tail, and optional extra terms
/// handled in code (rescalings, theta quotients, other basis members).
struct FormSpec {
    head: &'static [Mono],
    tail: &'static [Mono],
}

const T1_XI1: FormSpec = FormSpec { head: &[], tail: &[(1, &[(P1, 1)])] };
const T1_XI2: FormSpec = FormSpec {
    head: &[(1, &[(E4, 2), (E41, 1)])],
    tail: &[(-57, &[(P1, 1)])],
};

const T2_XI1: FormSpec = FormSpec { head: &[], tail: &[(1, &[(P2, 1)])] };
const T2_XI2: FormSpec = FormSpec {
    head: &[],
    tail: &[(1, &[(P1, 2)]), (-21, &[(P2, 1)])],
};
const T2_XI3: FormSpec = FormSpec {
    head: &[(1, &[(E4, 2), (E42, 1)])],
    tail: &[(-14, &[(P1, 2)]), (216, &[(P2, 1)])],
};

const T3_XI1: FormSpec = FormSpec { head: &[], tail: &[(1, &[(P3, 1)])] };
const T3_XI2: FormSpec = FormSpec {
    head: &[],
    tail: &[(1, &[(P1, 1), (P2, 1)]), (-15, &[(P3, 1)])],
};
const T3_XI3: FormSpec = FormSpec {
    head: &[(1, &[(E4, 2), (E43, 1)])],
    tail: &[(-2, &[(P1, 3)]), (33, &[(P1, 1), (P2, 1)]), (90, &[(P3, 1)])],
};

const T4_XI1: FormSpec = FormSpec { head: &[], tail: &[(1, &[(P4, 1)])] };
const T4_XI2: FormSpec = FormSpec {
    head: &[],
    tail: &[(1, &[(P2, 2)]), (-9, &[(P4, 1)])],
};
const T4_XI3: FormSpec = FormSpec {
    head: &[(1, &[(E4, 1), (E41, 1), (E43, 1)])],
    tail: &[
        (-2, &[(P1, 2), (P2, 1)]),
        (20, &[(P1, 1), (P3, 1)]),
        (16, &[(P4, 1)]),
    ],
};

const T8_XI1: FormSpec = FormSpec {
    head: &[],
    tail: &[
        (1, &[(P2, 2), (P4, 1)]),
        (-1, &[(P2, 1), (P3, 2)]),
        (-1, &[(P4, 2)]),
    ],
};
const T8_XI2: FormSpec = FormSpec {
    head: &[],
    tail: &[
        (1, &[(P1, 1), (P3, 1), (P4, 1)]),
        (1, &[(P2, 1), (P3, 2)]),
        (-2, &[(P2, 2), (P4, 1)]),
        (-2, &[(P4, 2)]),
    ],
};
const T8_XI3: FormSpec = FormSpec {
    head: &[
        (1, &[(E4, 1), (E42, 1), (E43, 1), (P3, 1)]),
        (-1, &[(E4, 1), (E41, 1), (E43, 1), (P4, 1)]),
    ],
    tail: &[
        (-3, &[(P1, 2), (P3, 2)]),
        (2, &[(P1, 2), (P2, 1), (P4, 1)]),
        // The source prints this coefficient as 1, but only 8 reproduces the
        // printed expansion q^{-1} + 24 + (8r^6 + 256r^5 + ...)q and makes
        // the form reflective.
        (8, &[(P1, 1), (P3, 1), (P4, 1)]),
        (-16, &[(P4, 2)]),
    ],
};

const T9_XI1: FormSpec = FormSpec {
    head: &[],
    tail: &[
        (-1, &[(P1, 1), (P4, 2)]),
        (6, &[(P2, 1), (P3, 1), (P4, 1)]),
        (-5, &[(P3, 3)]),
    ],
};
const T9_XI2: FormSpec = FormSpec {
    head: &[],
    tail: &[
        (1, &[(P1, 1), (P4, 2)]),
        (-5, &[(P2, 1), (P3, 1), (P4, 1)]),
        (4, &[(P3, 3)]),
    ],
};
const T9_XI3: FormSpec = FormSpec {
    head: &[
        (1, &[(E41, 1), (E42, 1), (E43, 1), (P3, 1)]),
        (-1, &[(E4, 1), (E42, 1), (E43, 1), (P4, 1)]),
    ],
    tail: &[
        (-3, &[(P1, 1), (P2, 1), (P3, 2)]),
        (2, &[(P1, 2), (P3, 1), (P4, 1)]),
        (-30, &[(P1, 1), (P4, 2)]),
        (27, &[(P2, 1), (P3, 1), (P4, 1)]),
        (9, &[(P3, 3)]),
    ],
};

const T12_XI2: FormSpec = FormSpec {
    head: &[],
    tail: &[
        (3, &[(P2, 1), (P3, 2), (P4, 1)]),
        (-1, &[(P2, 2), (P4, 2)]),
        (-2, &[(P3, 4)]),
        (-1, &[(P4, 3)]),
    ],
};
const T12_XI3: FormSpec = FormSpec {
    head: &[],
    tail: &[
        (2, &[(P2, 2), (P4, 2)]),
        (-5, &[(P2, 1), (P3, 2), (P4, 1)]),
        (3, &[(P3, 4)]),
        (1, &[(P4, 3)]),
    ],
};
const T12_XI4: FormSpec = FormSpec {
    head: &[
        (1, &[(E41, 1), (E42, 1), (E43, 1), (P3, 2)]),
        (-2, &[(E4, 1), (E42, 1), (E43, 1), (P3, 1), (P4, 1)]),
        (1, &[(E4, 1), (E41, 1), (E43, 1), (P4, 2)]),
    ],
    tail: &[
        (-2, &[(P1, 2), (P2, 1), (P4, 2)]),
        (5, &[(P1, 2), (P3, 2), (P4, 1)]),
        (-3, &[(P1, 1), (P2, 1), (P3, 3)]),
        (-36, &[(P1, 1), (P3, 1), (P4, 2)]),
        (24, &[(P2, 1), (P3, 2), (P4, 1)]),
        (9, &[(P3, 4)]),
        (16, &[(P4, 3)]),
    ],
};

const T16_XI2: FormSpec = FormSpec {
    head: &[
        (1, &[(E4, 1), (E41, 1), (P3, 4)]),
        (-1, &[(E4, 2), (P3, 3), (P4, 1)]),
        (-2, &[(E41, 1), (E42, 1), (P3, 2), (P4, 1)]),
        (1, &[(E4, 1), (E42, 1), (P3, 1), (P4, 2)]),
        (-1, &[(E41, 1), (E42, 1), (P3, 2), (P4, 1)]),
        (2, &[(E4, 1), (E42, 1), (P3, 1), (P4, 2)]),
        (-1, &[(E4, 1), (E41, 1), (P4, 3)]),
    ],
    tail: &[
        (2, &[(P1, 3), (P3, 3), (P4, 1)]),
        (-3, &[(P1, 2), (P2, 1), (P3, 4)]),
        (-7, &[(P1, 2), (P3, 2), (P4, 2)]),
        (-31, &[(P1, 1), (P2, 1), (P3, 3), (P4, 1)]),
        (46, &[(P1, 1), (P3, 5)]),
        (72, &[(P1, 1), (P3, 1), (P4, 3)]),
        (7, &[(P2, 3), (P3, 2), (P4, 1)]),
        (-72, &[(P2, 1), (P3, 2), (P4, 2)]),
        (-197, &[(P3, 4), (P4, 1)]),
        (2, &[(P1, 2), (P2, 1), (P4, 3)]),
        (21, &[(P3, 4), (P4, 1)]),
        (-26, &[(P4, 4)]),
        (2, &[(P1, 1), (P2, 2), (P3, 1), (P4, 2)]),
        (-1, &[(P2, 2), (P3, 4)]),
        (-4, &[(P2, 2), (P4, 3)]),
        (-2, &[(P2, 4), (P4, 2)]),
    ],
};

// The head of the t=16 expression multiplies every bracketed term by the
// index-3 Eisenstein--Jacobi series; the table above lists the bracket, and
// the evaluator appends that common factor.
const T16_HEAD_COMMON: (Atom, u32) = (E43, 1);

const T36_XI3: FormSpec = FormSpec {
    head: &[
        (-36, &[(E4, 2), (P3, 7), (P4, 3)]),
        (56, &[(E4, 2), (P3, 3), (P4, 6)]),
        (45, &[(E4, 1), (E41, 1), (P3, 8), (P4, 2)]),
        (-126, &[(E4, 1), (E41, 1), (P3, 4), (P4, 5)]),
        (1, &[(E4, 1), (E41, 1), (P4, 8)]),
        (-10, &[(E4, 1), (E42, 1), (P3, 9), (P4, 1)]),
        (126, &[(E4, 1), (E42, 1), (P3, 5), (P4, 4)]),
        (-8, &[(E4, 1), (E42, 1), (P3, 1), (P4, 7)]),
        (1, &[(E41, 1), (E42, 1), (P3, 10)]),
        (-84, &[(E41, 1), (E42, 1), (P3, 6), (P4, 3)]),
        (28, &[(E41, 1), (E42, 1), (P3, 2), (P4, 6)]),
    ],
    tail: &[
        // terms proportional to the index-6 generator
        (770, &[(D06, 1), (P4, 6), (P3, 2)]),
        (-731, &[(D06, 1), (P4, 7), (P2, 1)]),
        (-731, &[(D06, 1), (P4, 6), (P2, 3)]),
        (2924, &[(D06, 1), (P4, 5), (P3, 2), (P2, 2)]),
        (-3655, &[(D06, 1), (P4, 4), (P3, 4), (P2, 1)]),
        (-29, &[(D06, 1), (P4, 4), (P3, 2), (P2, 4)]),
        (133, &[(D06, 1), (P4, 3), (P3, 4), (P2, 3)]),
        (1472, &[(D06, 1), (P4, 3), (P3, 6)]),
        (-225, &[(D06, 1), (P4, 2), (P3, 6), (P2, 2)]),
        (167, &[(D06, 1), (P4, 1), (P3, 8), (P2, 1)]),
        (-46, &[(D06, 1), (P3, 10)]),
        // cubic terms in the index-1 generator
        (72, &[(P1, 3), (P3, 7), (P4, 3)]),
        (-112, &[(P1, 3), (P3, 3), (P4, 6)]),
        // quadratic terms in the index-1 generator
        (-731, &[(P1, 2), (P4, 7), (P2, 3)]),
        (1462, &[(P1, 2), (P4, 6), (P3, 2), (P2, 2)]),
        (-126, &[(P1, 2), (P4, 2), (P3, 8), (P2, 1)]),
        (1039, &[(P1, 2), (P4, 5), (P3, 4), (P2, 1)]),
        (-733, &[(P1, 2), (P4, 8), (P2, 1)]),
        (29, &[(P1, 2), (P4, 1), (P3, 10)]),
        (-1615, &[(P1, 2), (P4, 4), (P3, 6)]),
        (-714, &[(P1, 2), (P4, 7), (P3, 2)]),
        // linear terms in the index-1 generator
        (12425, &[(P1, 1), (P4, 6), (P3, 1), (P2, 4)]),
        (-50600, &[(P1, 1), (P4, 5), (P3, 3), (P2, 3)]),
        (67608, &[(P1, 1), (P4, 4), (P3, 5), (P2, 2)]),
        (20633, &[(P1, 1), (P4, 7), (P3, 1), (P2, 2)]),
        (-3, &[(P1, 1), (P3, 11), (P2, 1)]),
        (-37314, &[(P1, 1), (P4, 3), (P3, 7), (P2, 1)]),
        (-35785, &[(P1, 1), (P4, 6), (P3, 3), (P2, 1)]),
        (8144, &[(P1, 1), (P4, 2), (P3, 9)]),
        (17917, &[(P1, 1), (P4, 5), (P3, 5)]),
        (8005, &[(P1, 1), (P4, 8), (P3, 1)]),
        // terms in the generators of index 2..4 only
        (-29, &[(P4, 5), (P2, 8)]),
        (162, &[(P4, 4), (P3, 2), (P2, 7)]),
        (-358, &[(P3, 4), (P4, 3), (P2, 6)]),
        (-10464, &[(P4, 6), (P2, 6)]),
        (392, &[(P3, 6), (P4, 2), (P2, 5)]),
        (45141, &[(P4, 5), (P3, 2), (P2, 5)]),
        (-213, &[(P3, 8), (P4, 1), (P2, 4)]),
        (-66918, &[(P4, 4), (P3, 4), (P2, 4)]),
        (-30811, &[(P4, 7), (P2, 4)]),
        (46, &[(P3, 10), (P2, 3)]),
        (43947, &[(P4, 3), (P3, 6), (P2, 3)]),
        (83053, &[(P4, 6), (P3, 2), (P2, 3)]),
        (-14354, &[(P3, 8), (P4, 2), (P2, 2)]),
        (-64611, &[(P4, 5), (P3, 4), (P2, 2)]),
        (-30093, &[(P4, 8), (P2, 2)]),
        (3426, &[(P3, 10), (P4, 1), (P2, 1)]),
        (-496, &[(P4, 4), (P3, 6), (P2, 1)]),
        (37331, &[(P4, 7), (P3, 2), (P2, 1)]),
        (-569, &[(P3, 12)]),
        (3899, &[(P4, 3), (P3, 8)]),
        (-455, &[(P4, 6), (P3, 4)]),
        (-9861, &[(P4, 9)]),
    ],
};

/// Human-readable description of each basis form's construction.
pub fn basis_descriptions(t: i64) -> Vec<&'static str> {
    match t {
        1 => vec!["phi_{0,1}", "E4^2 E_{4,1}/Delta - 57 phi_{0,1}"],
        2 => vec![
            "phi_{0,2}",
            "phi_{0,1}^2 - 21 phi_{0,2}",
            "E4^2 E_{4,2}/Delta - 14 phi_{0,1}^2 + 216 phi_{0,2}",
        ],
        3 => vec![
            "phi_{0,3}",
            "phi_{0,1} phi_{0,2} - 15 phi_{0,3}",
            "E4^2 E_{4,3}/Delta - 2 phi_{0,1}^3 + 33 phi_{0,1} phi_{0,2} + 90 phi_{0,3}",
        ],
        4 => vec![
            "phi_{0,4}",
            "phi_{0,2}^2 - 9 phi_{0,4}",
            "E4 E_{4,1} E_{4,3}/Delta - 2 phi_{0,1}^2 phi_{0,2} + 20 phi_{0,1} phi_{0,3} + 16 phi_{0,4}",
        ],
        8 => vec![
            "phi_{0,2}^2 phi_{0,4} - phi_{0,2} phi_{0,3}^2 - phi_{0,4}^2",
            "phi_{0,2}(tau, 2z)",
            "E4 E_{4,3}(E_{4,2} phi_{0,3} - E_{4,1} phi_{0,4})/Delta - 3 phi_{0,1}^2 phi_{0,3}^2 + 2 phi_{0,1}^2 phi_{0,2} phi_{0,4} + 8 phi_{0,1} phi_{0,3} phi_{0,4} - 16 phi_{0,4}^2",
        ],
        9 => vec![
            "-phi_{0,1} phi_{0,4}^2 + 6 phi_{0,2} phi_{0,3} phi_{0,4} - 5 phi_{0,3}^3",
            "phi_{0,1} phi_{0,4}^2 - 5 phi_{0,2} phi_{0,3} phi_{0,4} + 4 phi_{0,3}^3",
            "E_{4,2} E_{4,3}(E_{4,1} phi_{0,3} - E4 phi_{0,4})/Delta + weight-0 tail",
        ],
        12 => vec![
            "theta(tau,z)^8 theta(tau,2z)^4 / eta^12",
            "3 phi_{0,2} phi_{0,3}^2 phi_{0,4} - phi_{0,2}^2 phi_{0,4}^2 - 2 phi_{0,3}^4 - phi_{0,4}^3",
            "2 phi_{0,2}^2 phi_{0,4}^2 - 5 phi_{0,2} phi_{0,3}^2 phi_{0,4} + 3 phi_{0,3}^4 + phi_{0,4}^3",
            "E_{4,3}(E_{4,1}E_{4,2} phi_{0,3}^2 - 2 E4 E_{4,2} phi_{0,3} phi_{0,4} + E4 E_{4,1} phi_{0,4}^2)/Delta + weight-0 tail",
        ],
        16 => vec![
            "phi_{0,4}(tau, 2z)",
            "E_{4,3}(...)/Delta + weight-0 tail (15 monomials)",
        ],
        36 => vec![
            "3 xi^(2) - xi_9^(1)(tau, 2z)",
            "theta(tau,10z) theta(tau,z) / (theta(tau,5z) theta(tau,2z))",
            "(...)E_{4,3}/Delta + D_{0,6} and weight-0 tails - 83 xi^(1)",
        ],
        _ => vec![],
    }
}

/// Evaluation context caching atom powers at a fixed working precision.
struct Ctx {
    wp: i64,
    cache: HashMap<(Atom, u32), JacobiForm>,
}

impl Ctx {
    fn new(wp: i64) -> Self {
        Ctx { wp, cache: HashMap::new() }
    }

    fn atom_pow(&mut self, a: Atom, e: u32) -> Result<JacobiForm> {
        if let Some(f) = self.cache.get(&(a, e)) {
            return Ok(f.clone());
        }
        let f = if e == 1 {
            match a {
                P1 => generator(Generator::Phi01, self.wp)?,
                P2 => generator(Generator::Phi02, self.wp)?,
                P3 => generator(Generator::Phi03, self.wp)?,
                P4 => generator(Generator::Phi04, self.wp)?,
                D06 => generator(Generator::D06, self.wp)?,
                E4 => JacobiForm::from_qseries(&series::eisenstein(4, self.wp / QSCALE + 2)?, 8),
                E41 => jacobi::eisenstein_jacobi(EisensteinJacobi::E { k: 4, m: 1 }, self.wp)?,
                E42 => jacobi::eisenstein_jacobi(EisensteinJacobi::E { k: 4, m: 2 }, self.wp)?,
                E43 => jacobi::eisenstein_jacobi(EisensteinJacobi::E { k: 4, m: 3 }, self.wp)?,
            }
        } else {
            let h = self.atom_pow(a, e / 2)?;
            let mut f = h.mul(&h);
            if e % 2 == 1 {
                f = f.mul(&self.atom_pow(a, 1)?);
            }
            f.truncate(self.wp)
        };
        self.cache.insert((a, e), f.clone());
        Ok(f)
    }

    fn mono(&mut self, m: &Mono) -> Result<JacobiForm> {
        let (c, factors) = m;
        let mut acc: Option<JacobiForm> = None;
        for &(a, e) in factors.iter() {
            let f = self.atom_pow(a, e)?;
            acc = Some(match acc {
                None => f,
                Some(g) => g.mul(&f).truncate(self.wp),
            });
        }
        let mut out = acc.expect("empty monomial");
        out = out.scalar_mul(&BigInt::from(*c));
        Ok(out)
    }

    fn sum(&mut self, monos: &[Mono], extra: Option<(Atom, u32)>) -> Result<Option<JacobiForm>> {
        let mut acc: Option<JacobiForm> = None;
        for m in monos {
            let mut f = self.mono(m)?;
            if let Some((a, e)) = extra {
                f = f.mul(&self.atom_pow(a, e)?).truncate(self.wp);
            }
            acc = Some(match acc {
                None => f,
                Some(g) => g.add(&f),
            });
        }
        Ok(acc)
    }
}

fn eval_spec(spec: &FormSpec, head_common: Option<(Atom, u32)>, prec: i64) -> Result<JacobiForm> {
    let wp = prec + 2 * QSCALE;
    let mut ctx = Ctx::new(wp);
    let tail = ctx.sum(spec.tail, None)?;
    let head = match ctx.sum(spec.head, head_common)? {
        Some(h) => Some(h.div_by_delta(1, prec)?),
        None => None,
    };
    let out = match (head, tail) {
        (Some(h), Some(t)) => h.add(&t.truncate(h.trunc_q)),
        (Some(h), None) => h,
        (None, Some(t)) => t,
        (None, None) => unreachable!("empty basis expression"),
    };
    Ok(out.truncate(prec))
}

/// The special first basis form at index 12: a pure theta/eta monomial.
fn t12_form1(prec: i64) -> Result<JacobiForm> {
    let wp = prec + 2 * QSCALE;
    let th = jacobi::theta(wp);
    let prod = th.pow(8).mul(&th.index_rescale(2).pow(4));
    let eta12 = series::eta(wp + QSCALE).pow_int(12, UNBOUNDED)?;
    let inv = eta12.invert_unit(wp)?;
    let mut out = prod.mul_qseries(&inv);
    out.weight_x2 -= 12;
    Ok(out.truncate(prec))
}

static BASIS_CACHE: Lazy<Mutex<HashMap<(i64, usize, i64), JacobiForm>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The j-th basis form (1-based) of the reflective space at index t, with all
/// q-slices below `prec` (scaled by 24) complete.
pub fn basis_form(t: i64, j: usize, prec: i64) -> Result<JacobiForm> {
    if !(1..=basis_dim(t)).contains(&j) {
        return Err(Error::InvalidArgument(format!(
            "no basis form #{j} at index {t}"
        )));
    }
    if let Some(f) = BASIS_CACHE.lock().unwrap().get(&(t, j, prec)) {
        return Ok(f.clone());
    }
    let f = match (t, j) {
        (1, 1) => eval_spec(&T1_XI1, None, prec)?,
        (1, 2) => eval_spec(&T1_XI2, None, prec)?,
        (2, 1) => eval_spec(&T2_XI1, None, prec)?,
        (2, 2) => eval_spec(&T2_XI2, None, prec)?,
        (2, 3) => eval_spec(&T2_XI3, None, prec)?,
        (3, 1) => eval_spec(&T3_XI1, None, prec)?,
        (3, 2) => eval_spec(&T3_XI2, None, prec)?,
        (3, 3) => eval_spec(&T3_XI3, None, prec)?,
        (4, 1) => eval_spec(&T4_XI1, None, prec)?,
        (4, 2) => eval_spec(&T4_XI2, None, prec)?,
        (4, 3) => eval_spec(&T4_XI3, None, prec)?,
        (8, 1) => eval_spec(&T8_XI1, None, prec)?,
        (8, 2) => eval_spec(&T8_XI2, None, prec)?,
        (8, 3) => eval_spec(&T8_XI3, None, prec)?,
        (9, 1) => eval_spec(&T9_XI1, None, prec)?,
        (9, 2) => eval_spec(&T9_XI2, None, prec)?,
        (9, 3) => eval_spec(&T9_XI3, None, prec)?,
        (12, 1) => t12_form1(prec)?,
        (12, 2) => eval_spec(&T12_XI2, None, prec)?,
        (12, 3) => eval_spec(&T12_XI3, None, prec)?,
        (12, 4) => eval_spec(&T12_XI4, None, prec)?,
        (16, 1) => generator(Generator::Phi04, prec)?.index_rescale(2),
        (16, 2) => eval_spec(&T16_XI2, Some(T16_HEAD_COMMON), prec)?,
        (36, 1) => {
            let b2 = basis_form(36, 2, prec)?;
            let r9 = basis_form(9, 1, prec)?.index_rescale(2);
            b2.scalar_mul(&BigInt::from(3)).sub(&r9.truncate(b2.trunc_q))
        }
        (36, 2) => theta_quotient(&[10, 1], &[5, 2], prec)?,
        (36, 3) => {
            // the whole head bracket carries a common index-3 Eisenstein factor
            let poly = eval_spec(&T36_XI3, Some((E43, 1)), prec)?;
            let b1 = basis_form(36, 1, prec)?;
            poly.sub(&b1.scalar_mul(&BigInt::from(83)).truncate(poly.trunc_q))
        }
        _ => unreachable!(),
    };
    BASIS_CACHE
        .lock()
        .unwrap()
        .insert((t, j, prec), f.clone());
    Ok(f)
}

// ---------------------------------------------------------------------------
// Root classes and reflectivity.
// ---------------------------------------------------------------------------

/// All divisor classes (d, lbar) allowed for reflective forms of index t:
/// 0 < d ≡ l^2 (mod 4t) and d | gcd(4t, 2l), with lbar = ±l mod 2t.
pub fn enumerate_root_classes(t: i64) -> Vec<RootClass> {
    let mut out = BTreeSet::new();
    for l in 0..=t {
        let g = (4 * t).gcd(&(2 * l));
        for d in 1..=g {
            if g % d == 0 && (l * l - d).rem_euclid(4 * t) == 0 {
                out.insert(RootClass { d, lbar: l });
            }
        }
    }
    out.into_iter().collect()
}

/// Reflectivity test: every nonzero Fourier coefficient at negative norm
/// `4tn - l^2 < 0` must have `|4tn - l^2|` dividing `gcd(4t, 2l)`. Returns
/// the first violating `(n, l)` in lexicographic order, or `None` if the form
/// is reflective (on its stored support).
pub fn reflectivity_witness(phi: &JacobiForm, t: i64) -> Option<(i64, i64)> {
    let mut worst: Option<(i64, i64)> = None;
    let key = |(n, l): (i64, i64)| (n, l.abs(), if l < 0 { 1 } else { 0 });
    for (n24, l2, c) in phi.terms() {
        if c.is_zero() || n24 % QSCALE != 0 || l2 % LSCALE != 0 {
            continue;
        }
        let (n, l) = (n24 / QSCALE, l2 / LSCALE);
        let norm = 4 * t * n - l * l;
        if norm < 0 {
            let g = (4 * t).gcd(&(2 * l));
            if g % (-norm) != 0 {
                let cand = (n, l);
                if worst.map_or(true, |w| key(cand) < key(w)) {
                    worst = Some(cand);
                }
            }
        }
    }
    worst
}

pub fn is_reflective(phi: &JacobiForm, t: i64) -> bool {
    reflectivity_witness(phi, t).is_none()
}

// ---------------------------------------------------------------------------
// Divisor multiplicities.
// ---------------------------------------------------------------------------

/// Fourier coefficient of a weight-0 index-t form at any (possibly deep)
/// position with norm invariant `norm = 4tn - l^2` and `lbar = ±l mod 2t`,
/// read off from the cheapest stored representative. Relies on the
/// coefficients depending only on the pair of invariants.
pub fn fourier_by_invariant(phi: &JacobiForm, t: i64, norm: i64, lbar: i64) -> Result<BigInt> {
    let lbar = lbar.rem_euclid(2 * t).min((-lbar).rem_euclid(2 * t));
    let mut l = 0i64;
    loop {
        let cls = l.rem_euclid(2 * t).min((-l).rem_euclid(2 * t));
        if cls == lbar && (l * l + norm).rem_euclid(4 * t) == 0 {
            let n = (l * l + norm).div_euclid(4 * t);
            if n * QSCALE >= phi.trunc_q {
                return Err(Error::InsufficientPrecision { pos: vec![n, l] });
            }
            return Ok(phi.coeff_int(n, l));
        }
        l += 1;
        // Smallest |l| gives smallest q-order; once even the candidate
        // q-order exceeds the truncation, give up.
        if (l * l + norm).div_euclid(4 * t) * QSCALE >= phi.trunc_q && l > 2 * t {
            return Err(Error::InsufficientPrecision { pos: vec![0, l] });
        }
    }
}

/// Smallest (most negative) norm on the stored support.
fn min_norm(phi: &JacobiForm, t: i64) -> i64 {
    phi.terms()
        .filter(|(_, _, c)| !c.is_zero())
        .map(|(n24, l2, _)| 4 * t * (n24 / QSCALE) - (l2 / LSCALE) * (l2 / LSCALE))
        .min()
        .unwrap_or(0)
}

/// Multiplicity of the exponential lift of `phi` along the divisor class:
/// the sum over n >= 1 of the coefficients at `(n^2 a, n b)` where
/// `(a, b, 1)` represents the class.
pub fn class_multiplicity(phi: &JacobiForm, t: i64, class: RootClass) -> Result<BigInt> {
    let b = class.lbar;
    debug_assert_eq!((b * b - class.d).rem_euclid(4 * t), 0);
    let lowest = min_norm(phi, t);
    let mut m = BigInt::zero();
    let mut n = 1i64;
    while -(n * n) * class.d >= lowest {
        m += fourier_by_invariant(phi, t, -(n * n) * class.d, (n * b).rem_euclid(2 * t))?;
        n += 1;
    }
    Ok(m)
}

/// All divisor multiplicities of `phi` across the root classes of index t.
pub fn divisor_multiplicities(phi: &JacobiForm, t: i64) -> Result<Vec<(RootClass, BigInt)>> {
    enumerate_root_classes(t)
        .into_iter()
        .map(|c| class_multiplicity(phi, t, c).map(|m| (c, m)))
        .collect()
}

// ---------------------------------------------------------------------------
// The reflective basis and the multiplicity-{0,1} search.
// ---------------------------------------------------------------------------

/// A full basis of the reflective space at one index, with the divisor
/// multiplicity matrix (rows = root classes in ascending order, columns =
/// basis forms).
pub struct ReflectiveBasis {
    pub t: i64,
    pub forms: Vec<JacobiForm>,
    pub classes: Vec<RootClass>,
    pub mul: Vec<Vec<BigInt>>,
}

/// Default scaled q-precision that suffices for the multiplicity matrix at
/// index t (deep classes at t=36 need coefficients up to q^8).
pub fn default_prec(t: i64) -> i64 {
    match t {
        36 => 9 * QSCALE,
        16 => 4 * QSCALE,
        8 | 9 | 12 => 3 * QSCALE,
        _ => 2 * QSCALE,
    }
}

pub fn rj_basis(t: i64, prec: i64) -> Result<ReflectiveBasis> {
    let dim = basis_dim(t);
    if dim == 0 {
        return Err(Error::InvalidArgument(format!(
            "no reflective forms at index {t}; valid indices are {REFLECTIVE_INDICES:?}"
        )));
    }
    let forms: Vec<JacobiForm> = (1..=dim)
        .map(|j| basis_form(t, j, prec))
        .collect::<Result<_>>()?;
    let classes = enumerate_root_classes(t);
    let mut mul = vec![Vec::with_capacity(dim); classes.len()];
    for f in &forms {
        for (row, &c) in mul.iter_mut().zip(classes.iter()) {
            row.push(class_multiplicity(f, t, c)?);
        }
    }
    Ok(ReflectiveBasis { t, forms, classes, mul })
}

/// All nonzero integer combinations `c` of the basis, with every coefficient
/// in `[-bound, bound]`, whose divisor multiplicities are all 0 or 1.
pub fn search_unit_multiplicity(basis: &ReflectiveBasis, bound: i64) -> Result<Vec<Vec<i64>>> {
    let rows: Vec<Vec<i64>> = basis
        .mul
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    x.to_i64().ok_or_else(|| {
                        Error::Unsupported("multiplicity exceeds machine integers".into())
                    })
                })
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<_>>()?;
    let k = basis.forms.len();
    // Rows with a single nonzero entry pin the corresponding coefficient to a
    // small set; use them to shrink the search box.
    let mut allowed: Vec<Vec<i64>> = vec![(-bound..=bound).collect(); k];
    for r in &rows {
        let nz: Vec<usize> = (0..k).filter(|&j| r[j] != 0).collect();
        if let [j] = nz[..] {
            let e = r[j];
            allowed[j].retain(|&v| e * v == 0 || e * v == 1);
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0i64; k];
    fn rec(
        depth: usize,
        allowed: &[Vec<i64>],
        rows: &[Vec<i64>],
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if depth == allowed.len() {
            if cur.iter().all(|&v| v == 0) {
                return;
            }
            for r in rows {
                let s: i64 = r.iter().zip(cur.iter()).map(|(a, b)| a * b).sum();
                if s != 0 && s != 1 {
                    return;
                }
            }
            out.push(cur.clone());
            return;
        }
        for &v in &allowed[depth] {
            cur[depth] = v;
            rec(depth + 1, allowed, rows, cur, out);
        }
        cur[depth] = 0;
    }
    rec(0, &allowed, &rows, &mut cur, &mut out);
    Ok(out)
}

/// Published reference data: the root-class lists and multiplicity matrices
/// of the classification (rows ordered as published, possibly with repeated
/// classes).
pub fn reference_multiplicities(t: i64) -> (Vec<RootClass>, Vec<Vec<i64>>) {
    let (cl, mul): (Vec<(i64, i64)>, Vec<Vec<i64>>) = match t {
        1 => (
            vec![(4, 0), (1, 1), (4, 0)],
            vec![vec![0, 1], vec![1, 0], vec![0, 1]],
        ),
        2 => (
            vec![(4, 2), (1, 1), (8, 0)],
            vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]],
        ),
        3 => (
            vec![(4, 2), (1, 1), (12, 0)],
            vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]],
        ),
        4 => (
            vec![(4, 2), (1, 1), (16, 0)],
            vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]],
        ),
        8 => (
            vec![(4, 2), (1, 1), (32, 0), (4, 6)],
            vec![
                vec![0, 1, 0],
                vec![2, 1, 0],
                vec![0, 0, 1],
                vec![-1, 1, 8],
            ],
        ),
        9 => (
            vec![(4, 2), (1, 1), (36, 0), (9, 9)],
            vec![
                vec![0, 1, 0],
                vec![3, 0, 0],
                vec![0, 0, 1],
                vec![-1, 1, 3],
            ],
        ),
        12 => (
            vec![(4, 2), (1, 1), (48, 0), (16, 8), (4, 10), (1, 7)],
            vec![
                vec![0, 0, 1, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, 0, 1],
                vec![1, 0, 0, 0],
                vec![-4, -1, 2, 12],
                vec![-12, -2, 3, 36],
            ],
        ),
        16 => (
            vec![(4, 2), (1, 1), (64, 0), (64, 0), (4, 14)],
            vec![
                vec![1, 0],
                vec![1, 8],
                vec![0, 1],
                vec![0, 1],
                vec![1, 4],
            ],
        ),
        36 => (
            vec![
                (1, 1),
                (1, 17),
                (4, 2),
                (4, 34),
                (9, 27),
                (16, 32),
                (36, 18),
                (144, 0),
            ],
            vec![
                vec![-3, 0, 0],
                vec![-3, 0, 0],
                vec![0, 1, 0],
                vec![0, 1, 0],
                vec![4, 1, 12],
                vec![3, 1, 9],
                vec![1, 0, 4],
                vec![0, 0, 1],
            ],
        ),
        _ => (vec![], vec![]),
    };
    (
        cl.into_iter()
            .map(|(d, lbar)| RootClass { d, lbar })
            .collect(),
        mul,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Compare a whole symmetric q-slice: `down` lists the coefficients from
    /// the top r-degree down to the constant term (zeros included); the
    /// negative side is the mirror image.
    fn check_slice_full(f: &JacobiForm, n: i64, top: i64, down: &[i64]) {
        let sl = f.slice(n * QSCALE);
        let mut expect = std::collections::BTreeMap::new();
        for (i, &c) in down.iter().enumerate() {
            let l = top - i as i64;
            if c != 0 {
                expect.insert(l * LSCALE, BigInt::from(c));
                if l != 0 {
                    expect.insert(-l * LSCALE, BigInt::from(c));
                }
            }
        }
        assert_eq!(sl, expect, "slice q^{n} of index-{} form", f.index_x2 / 2);
    }

    /// Compare only the top-listed coefficients of a q-slice, and confirm
    /// nothing sits above the top degree.
    fn check_slice_top(f: &JacobiForm, n: i64, top: i64, down: &[i64]) {
        let sl = f.slice(n * QSCALE);
        if let Some((&lmax, _)) = sl.iter().next_back() {
            assert!(lmax <= top * LSCALE, "unexpected high r-degree in q^{n}");
        }
        for (i, &c) in down.iter().enumerate() {
            let l = top - i as i64;
            assert_eq!(
                f.coeff_int(n, l),
                BigInt::from(c),
                "coefficient q^{n} r^{l}"
            );
        }
    }

    fn mul_matches_reference(basis: &ReflectiveBasis) {
        let (classes, mul) = reference_multiplicities(basis.t);
        for (c, row) in classes.iter().zip(mul.iter()) {
            let i = basis
                .classes
                .iter()
                .position(|x| x == c)
                .unwrap_or_else(|| panic!("missing class {c:?} at t={}", basis.t));
            let got: Vec<BigInt> = basis.mul[i].clone();
            let want: Vec<BigInt> = row.iter().map(|&v| BigInt::from(v)).collect();
            assert_eq!(got, want, "multiplicity row for {c:?} at t={}", basis.t);
        }
        // and the class sets agree after deduplication
        let seen: BTreeSet<RootClass> = classes.into_iter().collect();
        let mine: BTreeSet<RootClass> = basis.classes.iter().copied().collect();
        assert_eq!(seen, mine, "class list at t={}", basis.t);
    }

    #[test]
    fn small_indices_match_reference() {
        for t in [1, 2, 3, 4] {
            let b = rj_basis(t, default_prec(t)).unwrap();
            mul_matches_reference(&b);
            for f in &b.forms {
                assert!(is_reflective(f, t), "basis form not reflective at t={t}");
                assert!(f.check_norm_dependence());
            }
        }
        // the printed leading slices
        let b1 = rj_basis(1, default_prec(1)).unwrap();
        check_slice_full(&b1.forms[0], 0, 1, &[1, 10]);
        check_slice_full(&b1.forms[1], -1, 0, &[1]);
        check_slice_full(&b1.forms[1], 0, 2, &[1, -1, 60]);
        let b2 = rj_basis(2, default_prec(2)).unwrap();
        check_slice_full(&b2.forms[0], 0, 1, &[1, 4]);
        check_slice_full(&b2.forms[1], 0, 2, &[1, -1, 18]);
        check_slice_full(&b2.forms[2], -1, 0, &[1]);
        check_slice_full(&b2.forms[2], 0, 0, &[24]);
        let b3 = rj_basis(3, default_prec(3)).unwrap();
        check_slice_full(&b3.forms[0], 0, 1, &[1, 2]);
        check_slice_full(&b3.forms[1], 0, 2, &[1, -1, 12]);
        check_slice_full(&b3.forms[2], -1, 0, &[1]);
        check_slice_full(&b3.forms[2], 0, 0, &[24]);
        let b4 = rj_basis(4, default_prec(4)).unwrap();
        check_slice_full(&b4.forms[0], 0, 1, &[1, 1]);
        check_slice_full(&b4.forms[1], 0, 2, &[1, -1, 9]);
        check_slice_full(&b4.forms[2], -1, 0, &[1]);
        check_slice_full(&b4.forms[2], 0, 0, &[24]);
    }

    #[test]
    fn index8_matches_reference() {
        let b = rj_basis(8, default_prec(8)).unwrap();
        mul_matches_reference(&b);
        check_slice_full(&b.forms[0], 0, 1, &[2, -1]);
        check_slice_full(&b.forms[0], 1, 6, &[-1, -2, 4, -4, 1, 6, -8]);
        check_slice_full(&b.forms[1], 0, 2, &[1, 0, 4]);
        check_slice_full(&b.forms[1], 1, 6, &[1, 0, -8, 0, -1, 0, 16]);
        check_slice_full(&b.forms[2], -1, 0, &[1]);
        check_slice_full(&b.forms[2], 0, 0, &[24]);
        check_slice_full(
            &b.forms[2],
            1,
            6,
            &[8, 256, 2268, 9472, 23608, 39424, 46812],
        );
        // the second form really is the index-2 generator rescaled
        let resc = generator(Generator::Phi02, default_prec(8))
            .unwrap()
            .index_rescale(2);
        assert!(b.forms[1].sub(&resc.truncate(b.forms[1].trunc_q)).is_zero());
        for f in &b.forms {
            assert!(is_reflective(f, 8));
        }
    }

    #[test]
    fn index9_matches_reference() {
        let b = rj_basis(9, default_prec(9)).unwrap();
        mul_matches_reference(&b);
        check_slice_full(&b.forms[0], 0, 1, &[3, -2]);
        check_slice_full(&b.forms[0], 1, 6, &[-4, 6, -12, 22, -30, 36, -36]);
        check_slice_full(
            &b.forms[0],
            2,
            9,
            &[-1, -6, 15, -36, 72, -120, 171, -216, 255, -268],
        );
        check_slice_full(&b.forms[1], 0, 2, &[1, -1, 4]);
        check_slice_full(&b.forms[1], 1, 6, &[3, -8, 9, -24, 31, -32, 42]);
        check_slice_full(
            &b.forms[1],
            2,
            9,
            &[1, 7, -15, 33, -80, 110, -177, 219, -241, 286],
        );
        check_slice_full(&b.forms[2], -1, 0, &[1]);
        check_slice_full(&b.forms[2], 0, 0, &[24]);
        check_slice_full(
            &b.forms[2],
            1,
            6,
            &[33, 486, 3159, 10758, 24057, 37908, 44082],
        );
        check_slice_full(
            &b.forms[2],
            2,
            9,
            &[
                2, 243, 5346, 44055, 204120, 642978, 1483416, 2632905, 3679020, 4109590,
            ],
        );
        for f in &b.forms {
            assert!(is_reflective(f, 9));
        }
    }

    #[test]
    fn index12_matches_reference() {
        let b = rj_basis(12, default_prec(12)).unwrap();
        mul_matches_reference(&b);
        check_slice_full(
            &b.forms[0],
            1,
            8,
            &[1, -8, 24, -24, -36, 120, -88, -88, 198],
        );
        check_slice_full(
            &b.forms[0],
            2,
            10,
            &[-4, 24, -32, -104, 396, -352, -512, 1440, -904, -1008, 2112],
        );
        check_slice_full(&b.forms[1], 0, 1, &[1, -1]);
        check_slice_full(&b.forms[1], 1, 7, &[-1, 1, -1, 1, 0, -1, 2, -2]);
        check_slice_full(
            &b.forms[1],
            2,
            10,
            &[-1, 0, 1, -2, 3, -3, 2, 0, -2, 5, -6],
        );
        check_slice_full(&b.forms[2], 0, 2, &[1, -1, 3]);
        // the source prints the r^2 coefficient of this slice as 3r^3; the
        // parity of (phi_{0,2} phi_{0,4} - phi_{0,3}^2)^2 forces it onto r^2
        check_slice_full(&b.forms[2], 1, 7, &[1, -3, 1, -3, 0, 3, -2, 6]);
        check_slice_full(
            &b.forms[2],
            2,
            10,
            &[2, 0, -3, 2, -9, 3, -6, 0, 7, -5, 18],
        );
        check_slice_full(&b.forms[3], -1, 0, &[1]);
        check_slice_full(&b.forms[3], 0, 0, &[24]);
        check_slice_full(
            &b.forms[3],
            1,
            7,
            &[24, 264, 1608, 5610, 13464, 24312, 34056, 38208],
        );
        check_slice_full(
            &b.forms[3],
            2,
            10,
            &[
                12, 440, 5544, 34104, 135388, 395808, 902352, 1667360, 2550552, 3276240, 3558160,
            ],
        );
        for f in &b.forms {
            assert!(is_reflective(f, 12));
            assert!(f.check_norm_dependence());
        }
    }

    #[test]
    fn index16_matches_reference() {
        let b = rj_basis(16, default_prec(16)).unwrap();
        mul_matches_reference(&b);
        check_slice_full(&b.forms[0], 0, 2, &[1, 0, 1]);
        // the source labels this slice q^2, but it is the q^1 slice of the
        // rescaled index-4 generator (its q^3 slice matches the printed q^3)
        check_slice_full(&b.forms[0], 1, 8, &[-1, 0, -1, 0, 0, 0, 1, 0, 2]);
        check_slice_full(
            &b.forms[0],
            3,
            14,
            &[1, 0, 0, 0, -2, 0, -4, 0, -4, 0, 0, 0, 5, 0, 8],
        );
        check_slice_full(&b.forms[1], -1, 0, &[1]);
        check_slice_full(&b.forms[1], 0, 1, &[8, 14]);
        check_slice_full(
            &b.forms[1],
            1,
            8,
            &[21, 200, 1036, 3360, 8100, 15240, 23604, 30352, 33058],
        );
        check_slice_full(
            &b.forms[1],
            2,
            11,
            &[
                56, 1008, 7336, 32932, 108800, 283504, 610344, 1112832, 1750728, 2401952, 2896688,
                3081400,
            ],
        );
        check_slice_full(
            &b.forms[1],
            3,
            14,
            &[
                4, 560, 8092, 58328, 283784, 1042328, 3082176, 7616904, 16136000, 29802144,
                48582612, 70497736, 91619124, 107054192, 112732002,
            ],
        );
        for f in &b.forms {
            assert!(is_reflective(f, 16));
        }
    }

    #[test]
    fn index36_matches_reference() {
        let b = rj_basis(36, default_prec(36)).unwrap();
        mul_matches_reference(&b);
        check_slice_full(&b.forms[0], 0, 1, &[-3, 5]);
        check_slice_top(&b.forms[0], 1, 12, &[1, 3]);
        check_slice_top(&b.forms[0], 2, 18, &[1, -3, 9]);
        check_slice_top(&b.forms[0], 3, 20, &[6, -3]);
        check_slice_top(&b.forms[0], 4, 24, &[4, 0, -15]);
        check_slice_top(&b.forms[0], 5, 27, &[3, -9, 3]);
        check_slice_top(&b.forms[0], 6, 29, &[3, 6]);
        check_slice_top(&b.forms[0], 7, 32, &[3, 0, -25, 9]);
        check_slice_top(&b.forms[0], 8, 33, &[-3, 33]);
        check_slice_full(&b.forms[1], 0, 2, &[1, -1, 1]);
        check_slice_top(&b.forms[1], 1, 12, &[-1, 1, -1]);
        check_slice_top(&b.forms[1], 2, 17, &[-1, 1, -1]);
        check_slice_top(&b.forms[1], 3, 19, &[-1, 2, -3]);
        check_slice_top(&b.forms[1], 4, 21, &[-1, 2, -4]);
        check_slice_top(&b.forms[1], 5, 27, &[1, -1, 1]);
        check_slice_top(&b.forms[1], 6, 29, &[1, -2, 3]);
        check_slice_top(&b.forms[1], 7, 32, &[1, 0, -1, 3]);
        check_slice_top(&b.forms[1], 8, 34, &[1, -1, 1, 0, -3]);
        check_slice_full(&b.forms[2], -1, 0, &[1]);
        check_slice_full(&b.forms[2], 0, 0, &[24]);
        check_slice_top(&b.forms[2], 1, 12, &[24, 72]);
        check_slice_top(&b.forms[2], 2, 18, &[4, 0, 144, 672]);
        check_slice_top(&b.forms[2], 3, 20, &[144, 1008]);
        check_slice_top(&b.forms[2], 4, 24, &[24, 288]);
        check_slice_top(&b.forms[2], 5, 27, &[8, 216, 3096]);
        check_slice_top(&b.forms[2], 6, 29, &[72, 1584, 15720]);
        check_slice_top(&b.forms[2], 7, 32, &[9, 288, 5304]);
        check_slice_top(&b.forms[2], 8, 33, &[672, 12096]);
        for f in &b.forms {
            assert!(is_reflective(f, 36));
            assert!(f.check_norm_dependence());
        }
    }

    #[test]
    fn class_enumeration_counts() {
        let counts: Vec<usize> = REFLECTIVE_INDICES
            .iter()
            .map(|&t| enumerate_root_classes(t).len())
            .collect();
        assert_eq!(counts, vec![2, 3, 3, 3, 4, 4, 6, 4, 8]);
    }

    #[test]
    fn non_reflective_form_has_witness() {
        // the cube of the index-1 generator, viewed at t=3, has a negative
        // norm coefficient at (n, l) = (0, 3) violating the divisor condition
        let p1 = generator(Generator::Phi01, 2 * QSCALE).unwrap();
        let cube = p1.pow(3);
        assert_eq!(reflectivity_witness(&cube, 3), Some((0, 3)));
        assert!(!is_reflective(&cube, 3));
    }

    #[test]
    fn unit_multiplicity_search_counts() {
        let expected: Vec<usize> = vec![3, 7, 7, 7, 1, 1, 1, 1, 1];
        let mut got = Vec::new();
        for &t in REFLECTIVE_INDICES.iter() {
            let b = rj_basis(t, default_prec(t)).unwrap();
            let sols = search_unit_multiplicity(&b, 20).unwrap();
            // stability under an enlarged box
            let sols2 = search_unit_multiplicity(&b, 40).unwrap();
            assert_eq!(sols, sols2, "solution set unstable at t={t}");
            got.push(sols.len());
        }
        assert_eq!(got, expected);
        assert_eq!(got.iter().sum::<usize>(), 29);
        // the unique solutions at the composite indices
        let b12 = rj_basis(12, default_prec(12)).unwrap();
        assert_eq!(
            search_unit_multiplicity(&b12, 20).unwrap(),
            vec![vec![0, 1, 1, 0]]
        );
        let b16 = rj_basis(16, default_prec(16)).unwrap();
        assert_eq!(search_unit_multiplicity(&b16, 20).unwrap(), vec![vec![1, 0]]);
        let b36 = rj_basis(36, default_prec(36)).unwrap();
        assert_eq!(
            search_unit_multiplicity(&b36, 20).unwrap(),
            vec![vec![0, 1, 0]]
        );
    }
}
