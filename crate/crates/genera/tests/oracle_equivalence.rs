//! The log/exp sequence generator, the Newton conversions and the
//! Chern-to-Pontrjagin formula against the brute-force symbolic-roots
//! oracle.

mod common;

use common::{sequence_oracle_chern, sequence_oracle_pontrjagin, RootPoly};
use genera::genus::chern_to_pontrjagin;
use genera::series::{ahat_series, l_series, todd_series};
use genera::symmetric::sequence::multiplicative_sequence;
use genera::symmetric::{power_sums_to_elementary, VarKind};

#[test]
fn todd_sequence_matches_roots_expansion() {
    let n = 4;
    let seq = multiplicative_sequence(&todd_series(n), n, VarKind::Chern).unwrap();
    for m in 1..=n {
        let oracle = sequence_oracle_chern(&todd_series(n), n, m as u32);
        assert_eq!(seq[m - 1], oracle, "T_{m}");
    }
}

#[test]
fn ahat_sequence_matches_roots_expansion() {
    let n = 4;
    let series = ahat_series(2 * n);
    let seq = multiplicative_sequence(&series, n, VarKind::Pontrjagin).unwrap();
    for m in 1..=n {
        let oracle = sequence_oracle_pontrjagin(&series, n, m as u32);
        assert_eq!(seq[m - 1], oracle, "Ahat_{m}");
    }
}

#[test]
fn l_sequence_matches_roots_expansion() {
    let n = 4;
    let series = l_series(2 * n);
    let seq = multiplicative_sequence(&series, n, VarKind::Pontrjagin).unwrap();
    for m in 1..=n {
        let oracle = sequence_oracle_pontrjagin(&series, n, m as u32);
        assert_eq!(seq[m - 1], oracle, "L_{m}");
    }
}

#[test]
fn newton_conversion_matches_roots_expansion() {
    // ps_j over 3 explicit roots, rewritten in elementary symmetric
    // functions, against the recurrence output.
    let n = 3;
    let conv = power_sums_to_elementary(n);
    for j in 1..=n {
        let oracle = RootPoly::power_sum(n, j as u32).to_elementary(VarKind::Chern);
        assert_eq!(conv[j - 1], oracle, "ps_{j}");
    }
}

#[test]
fn pontrjagin_conversion_matches_roots_expansion() {
    // p_j = e_j(x_1^2, ..., x_n^2) expanded over explicit roots and
    // rewritten in e_i(x).
    for n in 1..=4usize {
        let conv = chern_to_pontrjagin(n);
        for j in 1..=n {
            let mut squared = RootPoly::zero(n);
            // e_j of squared roots: take e_j and double every exponent.
            let e = RootPoly::elementary(n, j);
            for (exps, c) in e.terms() {
                let doubled: Vec<u32> = exps.iter().map(|&a| 2 * a).collect();
                squared.add_term(doubled, c.clone());
            }
            let oracle = squared.to_elementary(VarKind::Chern);
            assert_eq!(conv[j - 1], oracle, "p_{j} over {n} roots");
        }
    }
}
