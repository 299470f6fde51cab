//! Acceptance suite: ten end-to-end criteria, one test (one pass/fail line)
//! each.  Every check is exact; each test also enforces its runtime budget.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::One;

use paramodular::borcherds::{
    combo_form, lift_additivity_check, lift_exponents, lift_weight, tau_from_m, tri_denom,
};
use paramodular::cli::render_table1;
use paramodular::hyperbolic::{
    self, cartan_matrix, check_witness, inner, is_root, named_cartan, named_cartan_angles,
    reference_gram, reflect, ri, t_n_non2reflective, table2_rows, vinberg_chamber,
    verify_cartan_rank3, ChamberDesc, Vec3, R,
};
use paramodular::jacobi::{self, generator, Generator, JacobiForm, LSCALE, QSCALE};
use paramodular::maass::certified_pairs;
use paramodular::reflective::{
    default_prec, is_reflective, reference_multiplicities, reflectivity_witness, rj_basis,
    search_unit_multiplicity, REFLECTIVE_INDICES,
};
use paramodular::series::{self, QSeries};
use paramodular::Error;

fn finish(criterion: &str, start: Instant, budget_s: f64) {
    let e = start.elapsed().as_secs_f64();
    println!("criterion {criterion}: PASS ({e:.2} s, budget {budget_s} s)");
    assert!(e < budget_s, "criterion {criterion} exceeded its {budget_s} s budget: {e:.2} s");
}

fn bi(x: i64) -> BigInt {
    BigInt::from(x)
}

/// 1. Generator fidelity: printed q⁰ slices of φ₀,₁…φ₀,₄ and the defining
/// relation φ₀,₁φ₀,₃ = 4φ₀,₄ + φ₀,₂², residual zero to scaled q-order 240.
#[test]
fn criterion_01_generator_fidelity() {
    let start = Instant::now();
    let prec = 11 * QSCALE;
    let gens = [Generator::Phi01, Generator::Phi02, Generator::Phi03, Generator::Phi04];
    let mids = [10, 4, 2, 1];
    let forms: Vec<JacobiForm> = gens.iter().map(|&g| generator(g, prec).unwrap()).collect();
    for (f, &mid) in forms.iter().zip(mids.iter()) {
        let sl = f.slice(0);
        let expect: Vec<(i64, BigInt)> = vec![(-LSCALE, bi(1)), (0, bi(mid)), (LSCALE, bi(1))];
        let got: Vec<(i64, BigInt)> = sl.iter().map(|(&l, c)| (l, c.clone())).collect();
        assert_eq!(got, expect, "q^0 slice of index-{} generator", f.index_x2 / 2);
    }
    let residual = forms[3]
        .scalar_mul(&bi(4))
        .sub(&forms[0].mul(&forms[2]))
        .add(&forms[1].pow(2));
    assert!(residual.truncate(10 * QSCALE).is_zero(), "defining-relation residual nonzero");
    finish("1 (generator fidelity)", start, 5.0);
}

/// 2. Table-1 regeneration: the committed replica of every basis form's
/// leading coefficients regenerates byte-identically, and the recomputed
/// multiplicity matrices match the published ones entrywise.
#[test]
fn criterion_02_table1_regeneration() {
    let start = Instant::now();
    assert_eq!(
        render_table1().unwrap(),
        include_str!("golden/table1.txt"),
        "table-1 replica drifted from the committed golden file"
    );
    for &t in &REFLECTIVE_INDICES {
        let basis = rj_basis(t, default_prec(t)).unwrap();
        // Published rows appear in table order, possibly repeating classes;
        // match each against the recomputed row for that class.
        let (classes, mul) = reference_multiplicities(t);
        for (c, refrow) in classes.iter().zip(mul.iter()) {
            let i = basis
                .classes
                .iter()
                .position(|x| x == c)
                .unwrap_or_else(|| panic!("missing class {c:?} at t={t}"));
            let refrow: Vec<BigInt> = refrow.iter().map(|&x| bi(x)).collect();
            assert_eq!(basis.mul[i], refrow, "Mul matrix row for {c:?} at t={t}");
        }
        let published: std::collections::BTreeSet<_> = classes.into_iter().collect();
        let mine: std::collections::BTreeSet<_> = basis.classes.iter().copied().collect();
        assert_eq!(published, mine, "class set at t={t}");
    }
    finish("2 (Table 1 regeneration)", start, 120.0);
}

/// 3. Classification count: (3,7,7,7,1,1,1,1,1) solutions across the tower,
/// 29 in total, stable under doubling the coefficient bound.
#[test]
fn criterion_03_classification_count() {
    let start = Instant::now();
    let expected = [3usize, 7, 7, 7, 1, 1, 1, 1, 1];
    let mut total = 0usize;
    for (&t, &want) in REFLECTIVE_INDICES.iter().zip(expected.iter()) {
        let basis = rj_basis(t, default_prec(t)).unwrap();
        let sols = search_unit_multiplicity(&basis, 2).unwrap();
        let doubled = search_unit_multiplicity(&basis, 4).unwrap();
        assert_eq!(sols, doubled, "solution set unstable under doubled bound at t={t}");
        assert_eq!(sols.len(), want, "solution count at t={t}");
        total += sols.len();
    }
    assert_eq!(total, 29);
    finish("3 (classification count)", start, 10.0);
}

/// 4. Weyl vectors and weights: lift_exponents and f(0,0)/2 match the
/// published ρ and weight for all 29 combinations.
#[test]
fn criterion_04_weyl_vectors_and_weights() {
    let start = Instant::now();
    let rows = table2_rows();
    assert_eq!(rows.len(), 29);
    let published_weights: Vec<R> = [
        (5, 1), (30, 1), (35, 1),
        (2, 1), (9, 1), (11, 1), (12, 1), (14, 1), (21, 1), (23, 1),
        (1, 1), (6, 1), (7, 1), (12, 1), (13, 1), (18, 1), (19, 1),
        (1, 2), (9, 2), (5, 1), (12, 1), (25, 2), (33, 2), (17, 1),
        (2, 1), (2, 1), (1, 1), (1, 2), (1, 2),
    ]
    .iter()
    .map(|&(n, d)| R::new(n, d))
    .collect();
    for (row, want_w) in rows.iter().zip(published_weights.iter()) {
        let phi = combo_form(row.t, &row.combo, 2 * QSCALE).unwrap();
        let (a, b, c) = lift_exponents(&phi, row.t).unwrap();
        let rho = row.rho_vec();
        assert_eq!((a, b, c), (rho.n, rho.l, rho.m), "rho at t={} {:?}", row.t, row.combo);
        let w = lift_weight(&phi).unwrap();
        assert_eq!(w, *want_w, "weight at t={} {:?}", row.t, row.combo);
        assert_eq!(w, row.weight_r());
    }
    finish("4 (Weyl vectors and weights)", start, 30.0);
}

/// 5. Denominator identities: all ten certified product-vs-sum identities
/// hold coefficientwise; the verification box is at least 12×12 in scaled
/// units at every index (one integer unit is ≥ 24 scaled).
#[test]
fn criterion_05_denominator_identities() {
    let start = Instant::now();
    for (t, combo, _, _) in certified_pairs() {
        let units = if t == 16 { 2 } else { 3 };
        assert!(units * tri_denom(t).0 >= 12, "box below 12 scaled units at t={t}");
        paramodular::maass::verify_identity(t, &combo, units, units)
            .unwrap_or_else(|e| panic!("identity at t={t} {combo:?} failed: {e}"));
    }
    finish("5 (denominator identities)", start, 180.0);
}

/// 6. Lift additivity: B_{φ+ψ} = B_φ·B_ψ on a 4×4-unit box for every
/// within-index basis pair.  The t=36 pairs involving the first basis form
/// are the documented unsupported case (its q⁰ slice has an uncompensated
/// negative exponent, so the product has no Fourier expansion at the cusp).
#[test]
fn criterion_06_lift_additivity() {
    let start = Instant::now();
    for &t in &REFLECTIVE_INDICES {
        let prec = 24 * QSCALE;
        let basis = rj_basis(t, prec).unwrap();
        let d = tri_denom(t).0;
        let n = basis.forms.len();
        for i in 0..n {
            for j in (i + 1)..n {
                let res =
                    lift_additivity_check(&basis.forms[i], &basis.forms[j], t, 4 * d, 4 * d);
                if t == 36 && i == 0 {
                    assert!(
                        matches!(res, Err(Error::Unsupported(_))),
                        "t=36 pair ({i},{j}) should be unsupported, got {res:?}"
                    );
                } else {
                    assert_eq!(res, Ok(true), "additivity failed at t={t} pair ({i},{j})");
                }
            }
        }
    }
    finish("6 (lift additivity)", start, 60.0);
}

/// 7. Chamber geometry: Vinberg reproduces all nine Gram matrices; the
/// classification chambers reproduce the named and inline Cartan matrices;
/// the angle lists of all 16 catalog matrices match the published lists.
#[test]
fn criterion_07_chamber_geometry() {
    let start = Instant::now();
    for &t in &REFLECTIVE_INDICES {
        let ch = vinberg_chamber(t, 4 * t).unwrap();
        // Same wall set as the published chamber, compared in its order.
        let reference = hyperbolic::reference_chamber_roots(t).unwrap();
        let mut mine = ch.roots.clone();
        let mut published = reference.clone();
        mine.sort();
        published.sort();
        assert_eq!(mine, published, "wall set at t={t}");
        let want = reference_gram(t).unwrap();
        let got: Vec<Vec<R>> = reference
            .iter()
            .map(|a| reference.iter().map(|b| ri(2 * t) * inner(t, a, b)).collect())
            .collect();
        let want: Vec<Vec<R>> =
            want.iter().map(|r| r.iter().map(|&x| ri(x)).collect()).collect();
        assert_eq!(got, want, "Gram matrix at t={t}");
    }
    let mut named_seen = std::collections::BTreeSet::new();
    for row in table2_rows() {
        if let ChamberDesc::Finite { roots, cartan, cartan_name, .. } = &row.chamber {
            let p: Vec<Vec3> = roots.iter().map(|&(n, l, m)| Vec3::int(n, l, m)).collect();
            let got = cartan_matrix(row.t, &p);
            let want: Vec<Vec<R>> =
                cartan.iter().map(|r| r.iter().map(|&x| ri(x)).collect()).collect();
            assert_eq!(got, want, "Cartan matrix at t={} {:?}", row.t, row.combo);
            if let Some(name) = cartan_name {
                named_seen.insert(*name);
            }
        }
    }
    let expected_names: std::collections::BTreeSet<&str> =
        ["A1,II", "A2,II", "A3,II", "A2,0", "A3,0", "A1,0"].into_iter().collect();
    assert_eq!(named_seen, expected_names);
    for name in hyperbolic::NAMED_CARTAN_LIST {
        let a = named_cartan(name).unwrap();
        let report = verify_cartan_rank3(&a).unwrap();
        assert_eq!(
            report.angles,
            named_cartan_angles(name).unwrap(),
            "angle list of {name}"
        );
    }
    finish("7 (chamber geometry)", start, 30.0);
}

/// 8. Reflectivity criterion: every basis form on the tower is accepted
/// (26 forms across the nine indices); the non-reflective cube φ₀,₁³ at
/// t=3 is rejected with witness (0, 3).
#[test]
fn criterion_08_reflectivity_criterion() {
    let start = Instant::now();
    let mut accepted = 0usize;
    for &t in &REFLECTIVE_INDICES {
        let basis = rj_basis(t, default_prec(t)).unwrap();
        for (j, f) in basis.forms.iter().enumerate() {
            assert!(is_reflective(f, t), "basis form {} at t={t} rejected", j + 1);
            accepted += 1;
        }
    }
    assert_eq!(accepted, 26);
    let cube = generator(Generator::Phi01, 2 * QSCALE).unwrap().pow(3);
    assert!(!is_reflective(&cube, 3));
    assert_eq!(reflectivity_witness(&cube, 3), Some((0, 3)));
    finish("8 (reflectivity criterion)", start, 5.0);
}

/// 9. Non-2-reflectivity certificates: the search at n_bound = 5000
/// certifies n = 1718, and every witness it yields passes the independent
/// recheck of all conditions.
#[test]
fn criterion_09_non2reflectivity_certificates() {
    let start = Instant::now();
    let found = t_n_non2reflective(5000);
    assert!(!found.is_empty());
    assert!(found.iter().any(|w| w.n == 1718), "n = 1718 not certified");
    for w in &found {
        assert!(check_witness(w), "witness for n = {} failed the recheck", w.n);
    }
    finish("9 (non-2-reflectivity certificates)", start, 30.0);
}

/// 10. Property suites (seeded, deterministic): series ring axioms,
/// reflection-isometry invariance, η/θ dual-formula agreement,
/// Eisenstein–Jacobi integrality with constant term 1, and τ(n) = 24
/// recovered from the Δ-product test vector.
#[test]
fn criterion_10_property_suites() {
    let start = Instant::now();

    // xorshift64* — fixed seed for reproducibility
    struct Rng(u64);
    impl Rng {
        fn next(&mut self) -> u64 {
            let mut x = self.0;
            x ^= x >> 12;
            x ^= x << 25;
            x ^= x >> 27;
            self.0 = x;
            x.wrapping_mul(0x2545F4914F6CDD1D)
        }
        fn int(&mut self, lo: i64, hi: i64) -> i64 {
            lo + (self.next() % (hi - lo + 1) as u64) as i64
        }
    }
    let mut rng = Rng(0x5EED_CAFE_F00D_1234);

    // series ring axioms
    let trunc = 5 * QSCALE;
    let rand_series = |rng: &mut Rng| {
        let mut s = QSeries::zero(QSCALE, trunc);
        for _ in 0..12 {
            s.add_to(rng.int(-24, trunc - 1), &bi(rng.int(-9, 9)));
        }
        s
    };
    for _ in 0..20 {
        let a = rand_series(&mut rng);
        let b = rand_series(&mut rng);
        let c = rand_series(&mut rng);
        // Compare on a window every combination is sound on (inputs reach
        // down to q^{-1}, so each product loses at most 24 scaled units).
        let w = 2 * QSCALE;
        assert_eq!(a.add(&b).truncate(w), b.add(&a).truncate(w));
        assert_eq!(a.add(&b).add(&c).truncate(w), a.add(&b.add(&c)).truncate(w));
        assert_eq!(a.mul(&b).truncate(w), b.mul(&a).truncate(w));
        assert_eq!(a.mul(&b).mul(&c).truncate(w), a.mul(&b.mul(&c)).truncate(w));
        assert_eq!(
            a.mul(&b.add(&c)).truncate(w),
            a.mul(&b).add(&a.mul(&c)).truncate(w)
        );
        assert_eq!(a.mul(&QSeries::one(QSCALE, trunc)).truncate(w), a.truncate(w));
    }

    // reflection-isometry invariance: s_α is an involutive isometry
    for &t in &REFLECTIVE_INDICES {
        let mut roots = Vec::new();
        'scan: for n in -3..=3i64 {
            for l in -6..=6 {
                for m in -3..=3 {
                    let a = Vec3::int(n, l, m);
                    if is_root(t, &a) {
                        roots.push(a);
                        if roots.len() >= 8 {
                            break 'scan;
                        }
                    }
                }
            }
        }
        assert!(!roots.is_empty());
        for _ in 0..10 {
            let a = roots[(rng.next() as usize) % roots.len()];
            let x = Vec3::int(rng.int(-9, 9), rng.int(-9, 9), rng.int(-9, 9));
            let y = Vec3::int(rng.int(-9, 9), rng.int(-9, 9), rng.int(-9, 9));
            let (sx, sy) = (reflect(t, &a, &x), reflect(t, &a, &y));
            assert_eq!(inner(t, &sx, &sy), inner(t, &x, &y));
            assert_eq!(reflect(t, &a, &sx), x);
        }
    }

    // η and θ: sum formula equals product formula
    let p = 12 * QSCALE;
    assert_eq!(series::eta(p), series::eta_product(p));
    assert_eq!(jacobi::theta(p), jacobi::theta_product(p));

    // Eisenstein–Jacobi integrality, constant term 1
    use jacobi::EisensteinJacobi;
    for which in [
        EisensteinJacobi::E { k: 4, m: 1 },
        EisensteinJacobi::E { k: 4, m: 2 },
        EisensteinJacobi::E { k: 4, m: 3 },
        EisensteinJacobi::E63Prime,
    ] {
        let f = jacobi::eisenstein_jacobi(which, 2 * QSCALE).unwrap();
        assert_eq!(f.coeff_int(0, 0), BigInt::one(), "{which:?} constant term");
    }

    // τ(n) = 24 from the Δ-product vector: η²⁴/q = ∏(1−qⁿ)²⁴ = 1 − Σ m(k)qᵏ
    let nmax = 20usize;
    let eta24 = series::eta(QSCALE * (nmax as i64 + 2)).pow_int(24, QSCALE * (nmax as i64 + 2)).unwrap();
    let m: Vec<BigInt> = (1..=nmax as i64)
        .map(|k| -eta24.coeff(QSCALE * (k + 1)))
        .collect();
    let tau = tau_from_m(&m);
    assert_eq!(tau, vec![bi(24); nmax]);

    finish("10 (property suites)", start, 60.0);
}
