//! Genus values on classical manifolds and the symbolic identity suite at
//! the full verification bounds.

use genera::genus::{
    ahat_chern_polynomials, chern_to_pontrjagin, verify_a2_is_ahat, verify_ak_scaling,
    verify_exp_identity, verify_todd_decomposition, GenusName, GenusSpec,
};
use genera::manifold::{cp_table, hypersurface_table, product_table, CharacteristicTable};
use genera::series::todd_series;
use genera::symmetric::graded::{Monomial, VarKind};
use genera::Rational;

fn spec(name: GenusName, n: usize) -> GenusSpec {
    GenusSpec::for_half_dim(name, n).unwrap()
}

#[test]
fn todd_genus_of_projective_spaces() {
    // Residue oracle: Td(CP^n) is the x^n coefficient of (x/(1-e^{-x}))^{n+1},
    // frozen here as 1 for every n, and the table evaluation must agree.
    for n in 1..=6 {
        let residue = todd_series(n).pow(n as u32 + 1).coeff(n).clone();
        assert_eq!(residue, Rational::one(), "residue at n = {n}");
        let value = cp_table(n)
            .evaluate_genus(&spec(GenusName::Todd, n))
            .unwrap();
        assert_eq!(value, Rational::one(), "Td(CP^{n})");
    }
}

#[test]
fn k3_and_signature_fixtures() {
    let k3 = hypersurface_table(2, 4);
    assert_eq!(
        k3.evaluate_genus(&spec(GenusName::Todd, 2)).unwrap(),
        Rational::from(2)
    );
    assert_eq!(
        k3.evaluate_genus(&spec(GenusName::AHat, 2)).unwrap(),
        Rational::from(2)
    );
    assert_eq!(
        cp_table(2).evaluate_genus(&spec(GenusName::L, 2)).unwrap(),
        Rational::one()
    );
}

#[test]
fn genus_multiplicativity_grid() {
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
                let lhs = ab.evaluate_genus(&spec(name, ab.half_dim())).unwrap();
                let ga = a.evaluate_genus(&spec(name, a.half_dim())).unwrap();
                let gb = b.evaluate_genus(&spec(name, b.half_dim())).unwrap();
                assert_eq!(
                    lhs,
                    ga * gb,
                    "{} on CP^{} x CP^{}",
                    name.label(),
                    a.half_dim(),
                    b.half_dim()
                );
            }
        }
    }
}

#[test]
fn projective_space_sits_at_the_sharpness_boundary() {
    // CP^n has k0 = n+1, just below the n+2 bound, and nonzero Todd genus.
    for n in 1..=6 {
        let t = cp_table(n);
        assert_eq!(t.k0(), Some(n as i64 + 1));
        assert_eq!(
            t.evaluate_genus(&spec(GenusName::Todd, n)).unwrap(),
            Rational::one()
        );
    }
}

#[test]
fn ahat_evaluation_agrees_both_association_orders() {
    // Route 1: convert Ahat_{n/2} to Chern variables, then evaluate.
    // Route 2: evaluate each Pontrjagin monomial against the table, then
    // combine with the p-coefficients of Ahat_{n/2}.
    for table in [
        cp_table(2),
        cp_table(4),
        hypersurface_table(2, 4),
        product_table(&cp_table(1), &cp_table(3)).unwrap(),
    ] {
        let n = table.half_dim();
        let j = n / 2;
        let route1 = table.evaluate_genus(&spec(GenusName::AHat, n)).unwrap();
        let seq = spec(GenusName::AHat, n).sequence(j).unwrap();
        let conv = chern_to_pontrjagin(n);
        let mut route2 = Rational::zero();
        for (mon, coeff) in seq[j - 1].terms() {
            // Expand the p-monomial into Chern variables and evaluate.
            let mut poly = genera::GradedPolynomial::one(VarKind::Chern, n);
            for (i, &e) in mon.exps().iter().enumerate() {
                for _ in 0..e {
                    poly = &poly * &conv[i];
                }
            }
            route2 += coeff * table.evaluate_poly(&poly).unwrap();
        }
        assert_eq!(route1, route2, "half_dim {n}");
    }
}

#[test]
fn identity_suite_full_bounds() {
    for n in 1..=6usize {
        for k in 1..=n {
            let v = verify_todd_decomposition(k, n).unwrap();
            assert!(v.ok, "Todd decomposition k={k} n={n}");
        }
    }
    for k in 2..=10 {
        assert!(verify_exp_identity(k, 12).unwrap().ok, "exp identity k={k}");
    }
    for k in 2..=5 {
        for n in 1..=5 {
            assert!(verify_ak_scaling(k, n).unwrap().ok, "scaling k={k} n={n}");
        }
    }
    for n in 1..=5 {
        assert!(verify_a2_is_ahat(n).unwrap().ok(), "A_2 vs A-hat n={n}");
    }
}

#[test]
fn ahat_chern_polynomials_low_weight() {
    // Ahat_1 in Chern variables: -(c_1^2 - 2c_2)/24.
    let polys = ahat_chern_polynomials(4).unwrap();
    assert!(polys[0].is_homogeneous_of(0));
    let mut expected = genera::GradedPolynomial::zero(VarKind::Chern, 4);
    expected.add_term(Monomial::new(0, vec![2, 0, 0, 0]), Rational::new(-1, 24));
    expected.add_term(Monomial::new(0, vec![0, 1, 0, 0]), Rational::new(1, 12));
    assert_eq!(polys[1], expected);
}

#[test]
fn point_table_has_unit_genus() {
    let point = CharacteristicTable::point();
    assert_eq!(
        point.evaluate_genus(&spec(GenusName::Todd, 1)).unwrap(),
        Rational::one()
    );
}
