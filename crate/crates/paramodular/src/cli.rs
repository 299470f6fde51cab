//! Command-line surface: generator expansion, basis/classification
//! regeneration, lifting, identity verification, chamber computation, and
//! golden-table emission.
//!
//! Exit codes: 0 success, 2 argument/validation failure, 3 internal
//! mismatch/division failure.  All output is deterministic: identical inputs
//! yield byte-identical output.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::borcherds::{self, lift_combo, tri_denom, LiftResult};
use crate::hyperbolic::{
    self, angles, cartan_matrix, inner, orbit_slice, ri, vinberg_chamber, ChamberDesc,
    Table2Row, Vec3, R,
};
use crate::jacobi::{self, Generator, JacobiForm, RPoly, LSCALE, QSCALE};
use crate::maass::{self, certified_pairs, identity_name};
use crate::reflective::{self, rj_basis, REFLECTIVE_INDICES};
use crate::series::json::triseries_to_json;
use crate::{Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "paramodular",
    version,
    about = "Exact reflective Jacobi forms, Borcherds lifts, and rank-3 hyperbolic root data"
)]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Verb {
    /// Print the weight-0/weak generator catalog (or one generator).
    Gens {
        /// Generator name (phi_0_1..phi_0_4, phi_m2_1, phi_0_3half,
        /// phi_m1_half, D_0_6); omit for the whole catalog.
        #[arg(long)]
        name: Option<String>,
        /// Scaled q-precision (denominator 24 printed in the header).
        #[arg(long, default_value_t = 3 * QSCALE)]
        prec_q: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the reflective basis, root classes, and Mul matrix at index t.
    Basis {
        #[arg(long)]
        t: i64,
        /// Scaled q-precision; defaults to the index-dependent value that
        /// resolves every root class.
        #[arg(long)]
        prec_q: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Borcherds-lift a basis combination and print the leading expansion.
    Lift {
        #[arg(long)]
        t: i64,
        /// Basis combination coefficients, e.g. --combo 1,0,0.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        combo: Vec<i64>,
        /// Scaled q-precision of the product (denominator printed in header).
        #[arg(long)]
        prec_q: Option<i64>,
        /// Scaled s-precision of the product.
        #[arg(long)]
        prec_s: Option<i64>,
        /// Print only the first k monomials.
        #[arg(long)]
        leading: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate multiplicity-{0,1} basis combinations (the classification).
    Classify {
        /// Single index; omit with --all for the whole tower.
        #[arg(long)]
        t: Option<i64>,
        /// Run all nine reflective indices.
        #[arg(long)]
        all: bool,
        /// Coefficient search bound.
        #[arg(long, default_value_t = 2)]
        bound: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a certified product-vs-sum denominator identity.
    Verify {
        /// Identity name (delta5, delta2, delta1, delta_half, d2, d_half,
        /// delta2_t8, delta1_t12, delta_half_t16, delta5_t4); omit for all.
        #[arg(long)]
        id: Option<String>,
        /// Verification box: both scaled |q| and |s| exponents bounded by at
        /// least this (in the lift's scale, lcm(24, 4t); rounded up to whole
        /// integer units).
        #[arg(long, default_value_t = 72)]
        prec: i64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the fundamental chamber at index t.
    Chamber {
        #[arg(long)]
        t: i64,
        /// Print the full chamber report (Gram, Cartan, angles, Weyl).
        #[arg(long)]
        full: bool,
        /// Print the orbit presentation of the infinite (D_inf) chamber of
        /// the classification row at this index, if one exists.
        #[arg(long)]
        orbit: bool,
        /// Vinberg search bound on root discriminants.
        #[arg(long, default_value_t = 200)]
        max_disc: i64,
        /// Element cap for orbit enumeration.
        #[arg(long, default_value_t = 64)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Regenerate the golden table replicas (table1.txt, table2.txt).
    Tables {
        /// Output directory; omit to print both tables to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify non-2-reflectivity of the degree-n tower slices.
    Nonreflective {
        #[arg(long, default_value_t = 5000)]
        n_bound: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

// ---------------------------------------------------------------------------
// formatting helpers
// ---------------------------------------------------------------------------

fn fmt_frac(num: i64, den: i64) -> String {
    let r = R::new(num, den);
    if r.is_integer() {
        format!("{}", r.to_integer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_pow(base: &str, num: i64, den: i64) -> String {
    let r = R::new(num, den);
    if r == ri(1) {
        base.to_string()
    } else {
        format!("{}^{}", base, fmt_frac(num, den))
    }
}

/// One q-slice in the source's bracket notation: descending r-powers, the
/// bracketed value `2·index·n − l²` shown exactly when negative.
fn fmt_slice_bracket(index_x2: i64, n_scaled: i64, slice: &RPoly) -> String {
    let mut out = String::new();
    for (&l2, c) in slice.iter().rev() {
        if c.is_zero() {
            continue;
        }
        let first = out.is_empty();
        if c.is_negative() {
            out.push_str(if first { "-" } else { " - " });
        } else if !first {
            out.push_str(" + ");
        }
        let a = c.abs();
        let term = if l2 == 0 {
            a.to_string()
        } else if a == 1u32.into() {
            fmt_pow("r", l2, LSCALE)
        } else {
            format!("{}{}", a, fmt_pow("r", l2, LSCALE))
        };
        out.push_str(&term);
        // norm 2·(index_x2/2)·n − l² with n = n_scaled/24, l = l2/2
        let v = R::new(index_x2 * n_scaled, QSCALE) - R::new(l2 * l2, LSCALE * LSCALE);
        if v.is_negative() {
            let _ = write!(out, "[{}]", fmt_frac(*v.numer(), *v.denom()));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Text dump of a Jacobi form: one bracketed slice per scaled q-exponent.
fn fmt_jacobi(phi: &JacobiForm) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "  weight {}  index {}  parity {}  trunc q^{} (q-denominator {}, r-denominator {})",
        fmt_frac(phi.weight_x2, 2),
        fmt_frac(phi.index_x2, 2),
        if phi.parity >= 0 { "+" } else { "-" },
        fmt_frac(phi.trunc_q.min(i64::MAX / 8), QSCALE),
        QSCALE,
        LSCALE
    );
    for (&n, slice) in phi.slices() {
        let _ = writeln!(
            out,
            "  {}: {}",
            if n == 0 { "q^0".to_string() } else { fmt_pow("q", n, QSCALE) },
            fmt_slice_bracket(phi.index_x2, n, slice)
        );
    }
    out
}

fn fmt_r(r: R) -> String {
    fmt_frac(*r.numer(), *r.denom())
}

fn fmt_vec3(v: &Vec3) -> String {
    format!("({}, {}, {})", fmt_r(v.n), fmt_r(v.l), fmt_r(v.m))
}

fn r_to_json(r: R) -> Value {
    json!([*r.numer(), *r.denom()])
}

fn vec3_json(v: &Vec3) -> Value {
    json!([fmt_r(v.n), fmt_r(v.l), fmt_r(v.m)])
}

/// Leading monomials of a lift, in the source's q,r,s notation, ordered by
/// total (q+s)-exponent then lexicographically.
fn fmt_lift_leading(lift: &LiftResult, k: usize) -> String {
    let (dq, dl, ds) = lift.expansion.denoms();
    let mut terms: Vec<((i64, i64, i64), &num_bigint::BigInt)> =
        lift.expansion.terms().map(|(&e, c)| (e, c)).collect();
    terms.sort_by_key(|&((q, l, s), _)| (q + s, q, l, s));
    let mut out = String::new();
    for ((q, l, s), c) in terms.into_iter().take(k) {
        let first = out.is_empty();
        if c.is_negative() {
            out.push_str(if first { "-" } else { " - " });
        } else if !first {
            out.push_str(" + ");
        }
        let a = c.abs();
        let mut mono = String::new();
        if q != 0 {
            mono.push_str(&fmt_pow("q", q, dq));
        }
        if l != 0 {
            if !mono.is_empty() {
                mono.push(' ');
            }
            mono.push_str(&fmt_pow("r", l, dl));
        }
        if s != 0 {
            if !mono.is_empty() {
                mono.push(' ');
            }
            mono.push_str(&fmt_pow("s", s, ds));
        }
        if mono.is_empty() {
            out.push_str(&a.to_string());
        } else if a == 1u32.into() {
            out.push_str(&mono);
        } else {
            let _ = write!(out, "{a} {mono}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn lift_to_json(lift: &LiftResult) -> Value {
    json!({
        "t": lift.t,
        "weyl": [r_to_json(lift.weyl.0), r_to_json(lift.weyl.1), r_to_json(lift.weyl.2)],
        "weyl_type": borcherds::weyl_type(lift.weyl, lift.t).to_string(),
        "weight": r_to_json(lift.weight),
        "expansion": triseries_to_json(&lift.expansion),
        "divisor": lift.divisor.iter().map(|(c, m)| json!({
            "d": c.d, "lbar": c.lbar, "multiplicity": m.to_string()
        })).collect::<Vec<_>>(),
    })
}

fn check_t(t: i64) -> Result<()> {
    if REFLECTIVE_INDICES.contains(&t) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "index t={t} is not reflective; supported values: {REFLECTIVE_INDICES:?}"
        )))
    }
}

fn combo_rows(t: i64) -> Vec<Table2Row> {
    hyperbolic::table2_rows().into_iter().filter(|r| r.t == t).collect()
}

// ---------------------------------------------------------------------------
// verbs
// ---------------------------------------------------------------------------

fn run_gens(name: Option<&str>, prec_q: i64, format: Format) -> Result<String> {
    let picked: Vec<Generator> = match name {
        Some(n) => vec![Generator::parse(n).ok_or_else(|| {
            let all: Vec<&str> = Generator::ALL.iter().map(|g| g.name()).collect();
            Error::InvalidArgument(format!("unknown generator {n:?}; supported: {all:?}"))
        })?],
        None => Generator::ALL.to_vec(),
    };
    let forms: Vec<(Generator, JacobiForm)> = picked
        .into_iter()
        .map(|g| jacobi::generator(g, prec_q).map(|f| (g, f)))
        .collect::<Result<_>>()?;
    Ok(match format {
        Format::Json => {
            let v: Vec<Value> = forms
                .iter()
                .map(|(g, f)| json!({"name": g.name(), "form": f.to_json()}))
                .collect();
            serde_json::to_string_pretty(&json!(v)).unwrap() + "\n"
        }
        Format::Text => {
            let mut out = String::new();
            for (g, f) in &forms {
                let _ = writeln!(out, "{}", g.name());
                out.push_str(&fmt_jacobi(f));
            }
            out
        }
    })
}

fn run_basis(t: i64, prec_q: Option<i64>, format: Format) -> Result<String> {
    check_t(t)?;
    let prec = prec_q.unwrap_or_else(|| reflective::default_prec(t));
    let basis = rj_basis(t, prec)?;
    let desc = reflective::basis_descriptions(t);
    Ok(match format {
        Format::Json => {
            let v = json!({
                "t": t,
                "descriptions": desc,
                "forms": basis.forms.iter().map(|f| f.to_json()).collect::<Vec<_>>(),
                "classes": basis.classes.iter().map(|c| json!([c.d, c.lbar])).collect::<Vec<_>>(),
                "mul_matrix": basis.mul.iter().map(|row|
                    row.iter().map(|x| x.to_string()).collect::<Vec<_>>()
                ).collect::<Vec<_>>(),
            });
            serde_json::to_string_pretty(&v).unwrap() + "\n"
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "t = {t}: {} reflective basis forms", basis.forms.len());
            for (j, f) in basis.forms.iter().enumerate() {
                let _ = writeln!(out, "xi^({}) = {}", j + 1, desc[j]);
                out.push_str(&fmt_jacobi(f));
            }
            let _ = writeln!(out, "root classes (D, l mod 2t) and multiplicities:");
            for (c, row) in basis.classes.iter().zip(basis.mul.iter()) {
                let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "  ({}, {}): {}", c.d, c.lbar, cells.join(" "));
            }
            out
        }
    })
}

fn run_lift(
    t: i64,
    combo: &[i64],
    prec_q: Option<i64>,
    prec_s: Option<i64>,
    leading: Option<usize>,
    format: Format,
) -> Result<String> {
    check_t(t)?;
    let dq = tri_denom(t).0;
    let pq = prec_q.unwrap_or(3 * dq);
    let ps = prec_s.unwrap_or(pq);
    let lift = lift_combo(t, combo, pq, ps)?;
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&lift_to_json(&lift)).unwrap() + "\n",
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "lift of combo {:?} at t = {} (q,s-denominator {}, r-denominator {})",
                combo, t, dq, LSCALE
            );
            let _ = writeln!(out, "weight {}", fmt_r(lift.weight));
            let _ = writeln!(
                out,
                "rho = ({}, {}, {})  [{}]",
                fmt_r(lift.weyl.0),
                fmt_r(lift.weyl.1),
                fmt_r(lift.weyl.2),
                borcherds::weyl_type(lift.weyl, t)
            );
            if !lift.divisor.is_empty() {
                let cells: Vec<String> = lift
                    .divisor
                    .iter()
                    .map(|(c, m)| format!("({},{})->{}", c.d, c.lbar, m))
                    .collect();
                let _ = writeln!(out, "divisor multiplicities: {}", cells.join(" "));
            }
            let k = leading.unwrap_or(12);
            let _ = writeln!(out, "expansion: {} + ...", fmt_lift_leading(&lift, k));
            out
        }
    })
}

fn classify_one(t: i64, bound: i64) -> Result<Value> {
    let basis = rj_basis(t, reflective::default_prec(t))?;
    let solutions = reflective::search_unit_multiplicity(&basis, bound)?;
    Ok(json!({
        "t": t,
        "basis_ranks": basis.forms.len(),
        "classes": basis.classes.iter().map(|c| json!([c.d, c.lbar])).collect::<Vec<_>>(),
        "mul_matrix": basis.mul.iter().map(|row|
            row.iter().map(|x| x.to_string()).collect::<Vec<_>>()
        ).collect::<Vec<_>>(),
        "solutions": solutions,
    }))
}

fn run_classify(t: Option<i64>, all: bool, bound: i64, format: Format) -> Result<String> {
    let ts: Vec<i64> = match (t, all) {
        (Some(t), false) => {
            check_t(t)?;
            vec![t]
        }
        (None, true) => REFLECTIVE_INDICES.to_vec(),
        _ => {
            return Err(Error::InvalidArgument(
                "pass exactly one of --t N or --all".into(),
            ))
        }
    };
    let reports: Vec<Value> = ts.iter().map(|&t| classify_one(t, bound)).collect::<Result<_>>()?;
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&json!(reports)).unwrap() + "\n",
        Format::Text => {
            let mut out = String::new();
            let mut total = 0usize;
            for rep in &reports {
                let t = rep["t"].as_i64().unwrap();
                let sols = rep["solutions"].as_array().unwrap();
                total += sols.len();
                let _ = writeln!(out, "t = {t}: {} multiplicity-{{0,1}} solutions", sols.len());
                for s in sols {
                    let c: Vec<i64> =
                        s.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
                    let _ = writeln!(out, "  combo {c:?}");
                }
            }
            let _ = writeln!(out, "total {total}");
            out
        }
    })
}

fn run_verify(id: Option<&str>, prec: i64) -> Result<String> {
    if prec < 1 {
        return Err(Error::InvalidArgument("--prec must be at least 1".into()));
    }
    let pairs = certified_pairs();
    let selected: Vec<(i64, Vec<i64>, String)> = match id {
        Some(name) => {
            let hit = pairs
                .iter()
                .find(|(t, _, s, d)| identity_name(*t, *s, *d) == name)
                .ok_or_else(|| {
                    let all: Vec<String> =
                        pairs.iter().map(|(t, _, s, d)| identity_name(*t, *s, *d)).collect();
                    Error::InvalidArgument(format!(
                        "unknown identity {name:?}; supported: {all:?}"
                    ))
                })?;
            vec![(hit.0, hit.1.clone(), name.to_string())]
        }
        None => pairs
            .iter()
            .map(|(t, c, s, d)| (*t, c.clone(), identity_name(*t, *s, *d)))
            .collect(),
    };
    let mut out = String::new();
    for (t, combo, name) in selected {
        let dq = tri_denom(t).0;
        let units = (prec + dq - 1) / dq;
        let start = Instant::now();
        maass::verify_identity(t, &combo, units, units)?;
        let _ = writeln!(
            out,
            "{name}: OK (t={t}, combo {combo:?}, box {units}x{units} units = {}x{} scaled, {} ms)",
            units * dq,
            units * dq,
            start.elapsed().as_millis()
        );
    }
    Ok(out)
}

fn run_chamber(
    t: i64,
    full: bool,
    orbit: bool,
    max_disc: i64,
    cap: usize,
    format: Format,
) -> Result<String> {
    check_t(t)?;
    if orbit {
        let row = combo_rows(t)
            .into_iter()
            .find_map(|r| match r.chamber {
                ChamberDesc::Orbit { gens, seeds, odd_seeds } => {
                    Some((r.combo, gens, seeds, odd_seeds))
                }
                _ => None,
            })
            .ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "no infinite-chamber classification row at t={t}; use --full"
                ))
            })?;
        let (combo, gens, seeds, odd_seeds) = row;
        let gv: Vec<Vec3> = gens.iter().map(|&(n, l, m)| Vec3::int(n, l, m)).collect();
        let sv: Vec<Vec3> = seeds.iter().map(|&(n, l, m)| Vec3::int(n, l, m)).collect();
        let (slice, complete) = orbit_slice(t, &gv, &sv, cap);
        let v = json!({
            "t": t,
            "combo": combo,
            "generators": gv.iter().map(vec3_json).collect::<Vec<_>>(),
            "seeds": sv.iter().map(vec3_json).collect::<Vec<_>>(),
            "odd_seeds": odd_seeds.iter()
                .map(|&(n, l, m)| vec3_json(&Vec3::int(n, l, m))).collect::<Vec<_>>(),
            "orbit_slice": slice.iter().map(vec3_json).collect::<Vec<_>>(),
            "complete": complete,
            "cap": cap,
        });
        return Ok(match format {
            Format::Json => serde_json::to_string_pretty(&v).unwrap() + "\n",
            Format::Text => {
                let mut out = String::new();
                let _ = writeln!(out, "t = {t} combo {combo:?}: infinite chamber (D_inf)");
                let gl: Vec<String> = gv.iter().map(fmt_vec3).collect();
                let sl: Vec<String> = sv.iter().map(fmt_vec3).collect();
                let _ = writeln!(out, "reflection generators: {}", gl.join(" "));
                let _ = writeln!(out, "orbit seeds: {}", sl.join(" "));
                let _ = writeln!(
                    out,
                    "orbit slice ({}{} elements):",
                    slice.len(),
                    if complete { "" } else { "+, truncated at cap" }
                );
                for x in &slice {
                    let _ = writeln!(out, "  {}", fmt_vec3(x));
                }
                out
            }
        });
    }
    let chamber = vinberg_chamber(t, max_disc)?;
    let gram: Vec<Vec<String>> = chamber
        .roots
        .iter()
        .map(|a| {
            chamber
                .roots
                .iter()
                .map(|b| fmt_r(ri(2 * t) * inner(t, a, b)))
                .collect()
        })
        .collect();
    let cartan: Vec<Vec<String>> =
        cartan_matrix(t, &chamber.roots).iter().map(|r| r.iter().map(|&x| fmt_r(x)).collect()).collect();
    let angle_list = angles(t, &chamber.roots)?;
    let mut v = json!({
        "t": t,
        "roots": chamber.roots.iter().map(vec3_json).collect::<Vec<_>>(),
        "gram_x2t": gram,
        "weyl": chamber.weyl.as_ref().map(vec3_json),
        "angles": angle_list.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
        "symmetry": chamber.sym.iter().map(vec3_json).collect::<Vec<_>>(),
    });
    if full {
        v["cartan"] = json!(cartan);
        v["odd"] = json!(chamber.odd);
        v["complete"] = json!(chamber.complete);
    }
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&v).unwrap() + "\n",
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "t = {t}: {} chamber walls", chamber.roots.len());
            for (x, a) in chamber.roots.iter().zip(angle_list.iter()) {
                let _ = writeln!(out, "  {}  (next angle {})", fmt_vec3(x), a);
            }
            if let Some(w) = &chamber.weyl {
                let _ = writeln!(out, "weyl vector {}", fmt_vec3(w));
            }
            if full {
                let _ = writeln!(out, "gram (x 2t):");
                for row in &gram {
                    let _ = writeln!(out, "  [{}]", row.join(", "));
                }
                let _ = writeln!(out, "cartan:");
                for row in &cartan {
                    let _ = writeln!(out, "  [{}]", row.join(", "));
                }
            }
            out
        }
    })
}

fn run_nonreflective(n_bound: i64, format: Format) -> Result<String> {
    if n_bound < 1 {
        return Err(Error::InvalidArgument("--n-bound must be positive".into()));
    }
    let found = hyperbolic::t_n_non2reflective(n_bound);
    Ok(match format {
        Format::Json => {
            let v: Vec<Value> = found
                .iter()
                .map(|w| json!({"n": w.n, "x": w.x, "u": w.u, "v": w.v}))
                .collect();
            serde_json::to_string_pretty(&json!(v)).unwrap() + "\n"
        }
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "certified non-2-reflective degrees up to {n_bound}:");
            for w in &found {
                let _ = writeln!(out, "  n = {}: x = {}, u = {:?}, v = {:?}", w.n, w.x, w.u, w.v);
            }
            let _ = writeln!(out, "total {}", found.len());
            out
        }
    })
}

// ---------------------------------------------------------------------------
// golden tables
// ---------------------------------------------------------------------------

/// Replica of the per-index catalog table: basis forms with bracketed
/// leading slices, root classes, and the multiplicity matrix.
pub fn render_table1() -> Result<String> {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "Reflective bases on the paramodular tower (q-denominator {QSCALE}, r-denominator {LSCALE})"
    );
    for &t in &REFLECTIVE_INDICES {
        let basis = rj_basis(t, reflective::default_prec(t))?;
        let desc = reflective::basis_descriptions(t);
        let _ = writeln!(out, "\n== t = {t} ==");
        for (j, f) in basis.forms.iter().enumerate() {
            let _ = writeln!(out, "xi^({}) = {}", j + 1, desc[j]);
            let shown = f.truncate(2 * QSCALE);
            out.push_str(&fmt_jacobi(&shown));
        }
        let _ = writeln!(out, "Mul(class, xi):");
        for (c, row) in basis.classes.iter().zip(basis.mul.iter()) {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "  ({}, {}): {}", c.d, c.lbar, cells.join(" "));
        }
    }
    Ok(out)
}

/// Replica of the 29-row classification summary: index, combination, weight,
/// Weyl vector, Cartan name, chamber description.
pub fn render_table2() -> Result<String> {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "The 29 reflective lifts: t | combo | name | weight | rho | chamber"
    );
    for row in hyperbolic::table2_rows() {
        let rho = row.rho_vec();
        let chamber = match &row.chamber {
            ChamberDesc::Finite { roots, odd, cartan_name, .. } => {
                let walls: Vec<String> = roots
                    .iter()
                    .enumerate()
                    .map(|(i, &(n, l, m))| {
                        let tag = if odd.contains(&i) { "odd " } else { "" };
                        format!("{tag}({n},{l},{m})")
                    })
                    .collect();
                format!(
                    "P = {{{}}}{}",
                    walls.join(", "),
                    match cartan_name {
                        Some(name) => format!(", Cartan {name}"),
                        None => String::new(),
                    }
                )
            }
            ChamberDesc::Orbit { gens, seeds, odd_seeds } => {
                let gl: Vec<String> =
                    gens.iter().map(|&(n, l, m)| format!("({n},{l},{m})")).collect();
                let sl: Vec<String> = seeds
                    .iter()
                    .map(|&(n, l, m)| {
                        let tag = if odd_seeds.contains(&(n, l, m)) { "odd " } else { "" };
                        format!("{tag}({n},{l},{m})")
                    })
                    .collect();
                format!("D_inf: gens {{{}}}, seeds {{{}}}", gl.join(", "), sl.join(", "))
            }
        };
        let _ = writeln!(
            out,
            "t={} | {:?} | {} | weight {} | rho = ({}, {}, {}) | {}",
            row.t,
            row.combo,
            row.form_name,
            fmt_frac(row.weight.0, row.weight.1),
            fmt_r(rho.n),
            fmt_r(rho.l),
            fmt_r(rho.m),
            chamber
        );
    }
    Ok(out)
}

fn run_tables(out_dir: Option<&PathBuf>) -> Result<String> {
    let t1 = render_table1()?;
    let t2 = render_table2()?;
    match out_dir {
        Some(dir) => {
            std::fs::create_dir_all(dir)
                .and_then(|()| std::fs::write(dir.join("table1.txt"), &t1))
                .and_then(|()| std::fs::write(dir.join("table2.txt"), &t2))
                .map_err(|e| Error::InvalidArgument(format!("cannot write tables: {e}")))?;
            Ok(format!("wrote {}/table1.txt and table2.txt\n", dir.display()))
        }
        None => Ok(format!("{t1}\n{t2}")),
    }
}

// ---------------------------------------------------------------------------
// dispatch
// ---------------------------------------------------------------------------

fn dispatch(cli: &Cli) -> Result<(String, Option<PathBuf>)> {
    Ok(match &cli.verb {
        Verb::Gens { name, prec_q, format, out } => {
            (run_gens(name.as_deref(), *prec_q, *format)?, out.clone())
        }
        Verb::Basis { t, prec_q, format, out } => {
            (run_basis(*t, *prec_q, *format)?, out.clone())
        }
        Verb::Lift { t, combo, prec_q, prec_s, leading, format, out } => {
            (run_lift(*t, combo, *prec_q, *prec_s, *leading, *format)?, out.clone())
        }
        Verb::Classify { t, all, bound, format, out } => {
            (run_classify(*t, *all, *bound, *format)?, out.clone())
        }
        Verb::Verify { id, prec, out } => (run_verify(id.as_deref(), *prec)?, out.clone()),
        Verb::Chamber { t, full, orbit, max_disc, cap, format, out } => {
            (run_chamber(*t, *full, *orbit, *max_disc, *cap, *format)?, out.clone())
        }
        Verb::Tables { out } => (run_tables(out.as_ref())?, None),
        Verb::Nonreflective { n_bound, format, out } => {
            (run_nonreflective(*n_bound, *format)?, out.clone())
        }
    })
}

/// Parse the process arguments, run the command, and return the exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok((text, out)) => match out {
            Some(path) => match std::fs::write(&path, &text) {
                Ok(()) => 0,
                Err(e) => {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    2
                }
            },
            None => {
                print!("{text}");
                0
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidArgument(_) => 2,
                _ => 3,
            }
        }
    }
}
