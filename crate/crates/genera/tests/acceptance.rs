//! Acceptance suite: the eight exit criteria for this crate, each printed
//! as one pass/fail line. All comparisons are exact equality of reduced
//! rationals; there are no tolerances anywhere.
//!
//! Run with `cargo test -p genera --test acceptance -- --nocapture` to see
//! the per-criterion lines.

mod common;

use std::collections::BTreeMap;

use common::{sequence_oracle_chern, sequence_oracle_pontrjagin};
use genera::genus::{
    verify_a2_is_ahat, verify_ak_scaling, verify_exp_identity, verify_todd_decomposition,
    GenusName, GenusSpec,
};
use genera::hattori::{
    admissible_ks, check_theorem, hattori_matrix, solve_vanishing, synthesize_consistent_table,
};
use genera::manifold::{
    cp_table, hypersurface_table, product_table, CharacteristicTable, Hypotheses,
};
use genera::series::{ahat_series, l_series, todd_series};
use genera::symmetric::graded::Monomial;
use genera::symmetric::sequence::multiplicative_sequence;
use genera::symmetric::VarKind;
use genera::{Error, Rational};

fn pass(n: usize, what: &str) {
    println!("criterion {n} ({what}): PASS");
}

fn q(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

#[test]
fn criterion_1_ahat_series_fixture() {
    let s = ahat_series(8);
    let expected = [
        q(1, 1),
        q(0, 1),
        q(-1, 24),
        q(0, 1),
        q(7, 5760),
        q(0, 1),
        q(-31, 967680),
        q(0, 1),
        q(127, 154828800),
    ];
    assert_eq!(s.coeffs(), &expected);
    pass(1, "A-hat series coefficients through degree 8");
}

#[test]
fn criterion_2_identity_suite() {
    for n in 1..=6usize {
        for k in 1..=n {
            assert!(
                verify_todd_decomposition(k, n).unwrap().ok,
                "Todd decomposition k={k} n={n}"
            );
        }
    }
    for k in 2..=10 {
        assert!(verify_exp_identity(k, 12).unwrap().ok, "exp identity k={k}");
    }
    for k in 2..=5 {
        for n in 1..=5 {
            assert!(
                verify_ak_scaling(k, n).unwrap().ok,
                "A_k scaling k={k} n={n}"
            );
        }
    }
    for n in 1..=5 {
        assert!(
            verify_a2_is_ahat(n).unwrap().ok(),
            "A_2 = 2^n A-hat at n={n}"
        );
    }
    // A_s = 2^{4s} A-hat_s realized as the sequence of A-hat(4x).
    let order = 16;
    let ahat = multiplicative_sequence(&ahat_series(order), 3, VarKind::Pontrjagin).unwrap();
    let scaled = multiplicative_sequence(
        &ahat_series(order).scale_arg(&Rational::from(4)),
        3,
        VarKind::Pontrjagin,
    )
    .unwrap();
    for s in 1..=3usize {
        assert_eq!(
            scaled[s - 1],
            ahat[s - 1].scalar_mul(&Rational::from(2).pow(4 * s as i32)),
            "A_s = 2^(4s) A-hat_s at s={s}"
        );
    }
    pass(2, "symbolic identity suite at full bounds");
}

#[test]
fn criterion_3_classical_genus_fixtures() {
    for n in 1..=6 {
        // Residue oracle: x^n coefficient of the (n+1)-st power of the
        // Todd series.
        let residue = todd_series(n).pow(n as u32 + 1).coeff(n).clone();
        assert_eq!(residue, Rational::one());
        let spec = GenusSpec::for_half_dim(GenusName::Todd, n).unwrap();
        assert_eq!(cp_table(n).evaluate_genus(&spec).unwrap(), Rational::one());
    }
    let k3 = hypersurface_table(2, 4);
    let todd2 = GenusSpec::for_half_dim(GenusName::Todd, 2).unwrap();
    let ahat2 = GenusSpec::for_half_dim(GenusName::AHat, 2).unwrap();
    let l2 = GenusSpec::for_half_dim(GenusName::L, 2).unwrap();
    assert_eq!(k3.evaluate_genus(&todd2).unwrap(), Rational::from(2));
    assert_eq!(k3.evaluate_genus(&ahat2).unwrap(), Rational::from(2));
    assert_eq!(cp_table(2).evaluate_genus(&l2).unwrap(), Rational::one());
    pass(3, "Todd/A-hat/L values on CP^n and K3");
}

#[test]
fn criterion_4_genus_multiplicativity() {
    let factors = [cp_table(1), cp_table(2), cp_table(3)];
    let names = [
        GenusName::Todd,
        GenusName::L,
        GenusName::Ak(2),
        GenusName::Ak(3),
    ];
    for a in &factors {
        for b in &factors {
            let ab = product_table(a, b).unwrap();
            for name in names {
                let whole = ab
                    .evaluate_genus(&GenusSpec::for_half_dim(name, ab.half_dim()).unwrap())
                    .unwrap();
                let ga = a
                    .evaluate_genus(&GenusSpec::for_half_dim(name, a.half_dim()).unwrap())
                    .unwrap();
                let gb = b
                    .evaluate_genus(&GenusSpec::for_half_dim(name, b.half_dim()).unwrap())
                    .unwrap();
                assert_eq!(whole, ga * gb, "{}", name.label());
            }
        }
    }
    pass(4, "multiplicativity over the CP^1..CP^3 product grid");
}

#[test]
fn criterion_5_vandermonde_engine() {
    for n in 2..=8usize {
        for bound in n + 2..=n + 6 {
            for k0 in [bound as i64, -(bound as i64)] {
                let ks = admissible_ks(n, k0).unwrap();
                assert_eq!(ks.len(), n / 2 + 1);
                let (_, det) = hattori_matrix(n, &ks).unwrap();
                assert!(!det.is_zero());
                let report = solve_vanishing(n, k0).unwrap();
                // The full conclusion set: all mixed A-hat numbers, all
                // mixed Todd numbers, the Todd genus, and the A_k family.
                let mut expected: Vec<String> = Vec::new();
                for s in 0..=n / 2 {
                    let e = n - 2 * s;
                    let xpart = match e {
                        0 => String::new(),
                        1 => "x ".into(),
                        e => format!("x^{e} "),
                    };
                    expected.push(if s == 0 {
                        format!("{}[M] = 0", xpart.trim_end())
                    } else {
                        format!("{xpart}Ahat_{s}[M] = 0")
                    });
                }
                for i in 0..=n {
                    let e = n - i;
                    let xpart = match e {
                        0 => String::new(),
                        1 => "x ".into(),
                        e => format!("x^{e} "),
                    };
                    expected.push(format!("{xpart}T_{i}[M] = 0"));
                }
                expected.push("Td(M) = 0".into());
                expected.push("A_k(M) = 0 for all k >= 2".into());
                let got: Vec<String> = report
                    .conclusions
                    .iter()
                    .map(|c| c.statement.clone())
                    .collect();
                assert_eq!(got, expected, "n={n} k0={k0}");
            }
        }
    }
    // Sharpness: (4,5) and more generally k0 = n+1 are rejected, matching
    // CP^n (k0 = n+1, Todd genus 1).
    assert!(matches!(
        solve_vanishing(4, 5),
        Err(Error::InsufficientBound(_))
    ));
    for n in 2..=8usize {
        for sign in [1i64, -1] {
            assert!(matches!(
                solve_vanishing(n, sign * (n as i64 + 1)),
                Err(Error::InsufficientBound(_))
            ));
        }
        let spec = GenusSpec::for_half_dim(GenusName::Todd, n.min(6)).unwrap();
        if n <= 6 {
            assert_eq!(cp_table(n).k0(), Some(n as i64 + 1));
            assert_eq!(cp_table(n).evaluate_genus(&spec).unwrap(), Rational::one());
        }
    }
    pass(
        5,
        "Vandermonde engine over the (n, k0) grid with sharp bound",
    );
}

#[test]
fn criterion_6_numeric_theorem_check() {
    for (n, k0) in [(4usize, 6i64), (5, 7), (6, 8)] {
        for seed in [1u64, 2, 3] {
            let t = synthesize_consistent_table(n, k0, seed).unwrap();
            let report = check_theorem(&t, 5).unwrap();
            assert!(report.all_pass(), "n={n} k0={k0} seed={seed}");
            for c in &report.conclusions {
                assert_eq!(
                    c.residual,
                    Some(Rational::zero()),
                    "n={n} seed={seed}: {}",
                    c.statement
                );
            }
        }
    }
    // One perturbed entry must surface as a nonzero residual.
    let t = synthesize_consistent_table(4, 6, 1).unwrap();
    let mut free: BTreeMap<Monomial, Rational> = t
        .numbers()
        .iter()
        .filter(|(m, _)| m.exp(1) == 0)
        .map(|(m, v)| (m.clone(), v.clone()))
        .collect();
    let key = Monomial::new(2, vec![0, 1, 0, 0]); // x^2 c_2
    let bumped = &free[&key] + &Rational::one();
    free.insert(key, bumped);
    let perturbed =
        CharacteristicTable::from_c1_free_numbers(4, 6, Hypotheses::all_assumed(), &free).unwrap();
    let report = check_theorem(&perturbed, 5).unwrap();
    assert!(!report.all_pass());
    pass(
        6,
        "numeric checks on synthetic tables and perturbation detection",
    );
}

#[test]
fn criterion_7_route_agreement() {
    let fixtures: Vec<CharacteristicTable> = vec![
        cp_table(1),
        cp_table(2),
        cp_table(3),
        cp_table(4),
        cp_table(5),
        cp_table(6),
        hypersurface_table(2, 4),
        product_table(&cp_table(1), &cp_table(2)).unwrap(),
        product_table(&cp_table(3), &cp_table(3)).unwrap(),
        synthesize_consistent_table(4, 6, 1).unwrap(),
        synthesize_consistent_table(5, 7, 2).unwrap(),
        synthesize_consistent_table(6, 8, 3).unwrap(),
    ];
    for table in &fixtures {
        let n = table.half_dim();
        for k in 2..=4i64 {
            let direct = table
                .evaluate_genus(&GenusSpec::for_half_dim(GenusName::Ak(k), n).unwrap())
                .unwrap();
            let recip = table
                .evaluate_genus(&GenusSpec::for_half_dim(GenusName::ARecipK(k), n).unwrap())
                .unwrap();
            assert_eq!(
                direct,
                Rational::from(k).pow(n as i32) * recip,
                "half_dim {n}, k {k}"
            );
        }
    }
    pass(7, "A_k = k^n A_(1/k) on every fixture table");
}

#[test]
fn criterion_8_oracle_equivalence() {
    let n = 4;
    let todd = todd_series(n);
    let seq = multiplicative_sequence(&todd, n, VarKind::Chern).unwrap();
    for m in 1..=n {
        assert_eq!(seq[m - 1], sequence_oracle_chern(&todd, n, m as u32));
    }
    for series in [ahat_series(2 * n), l_series(2 * n)] {
        let seq = multiplicative_sequence(&series, n, VarKind::Pontrjagin).unwrap();
        for m in 1..=n {
            assert_eq!(seq[m - 1], sequence_oracle_pontrjagin(&series, n, m as u32));
        }
    }
    pass(8, "generator equals brute-force symbolic-roots expansion");
}
