//! Weyl-module multiplicities in V^{⊗r} computed two ways: by Freudenthal's
//! formula inside the library, and here by the Racah–Speiser rule (tensoring
//! with V one factor at a time and reflecting with the dot action).

use std::collections::BTreeMap;

use bmw_core::combin::{cell_labels, coset_reps_df, std_tableaux, CellLabel};
use bmw_core::qgroup::weights::{weyl_decomposition, weyl_multiplicities};
use bmw_core::qgroup::{Family, LieType};
use bmw_core::repr::decomp::minimal_n;

/// Moves `x` into the dominant chamber by a signed permutation `w`.
/// Returns `None` on a wall, otherwise `(w x, det w)`.
fn to_dominant(family: Family, x: &[i64]) -> Option<(Vec<i64>, i64)> {
    let n = x.len();
    let mut abs: Vec<(i64, usize)> = x.iter().enumerate().map(|(i, v)| (v.abs(), i)).collect();
    abs.sort_by(|a, b| b.cmp(a));
    if abs.windows(2).any(|p| p[0].0 == p[1].0) {
        return None;
    }
    let perm: Vec<usize> = abs.iter().map(|p| p.1).collect();
    let mut inversions = 0;
    for i in 0..n {
        for j in i + 1..n {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    let mut sign = if inversions % 2 == 0 { 1 } else { -1 };
    let negatives = x.iter().filter(|v| **v < 0).count();
    let mut y: Vec<i64> = abs.iter().map(|p| p.0).collect();
    match family {
        Family::D => {
            if negatives % 2 == 1 && y[n - 1] != 0 {
                y[n - 1] = -y[n - 1];
            }
        }
        _ => {
            if y[n - 1] == 0 {
                return None;
            }
            if negatives % 2 == 1 {
                sign = -sign;
            }
        }
    }
    Some((y, sign))
}

fn racah_speiser(ty: &LieType, r: usize) -> BTreeMap<Vec<i64>, i64> {
    let n = ty.n;
    let rho: Vec<i64> = (0..n).map(|k| ty.rho2(k)).collect();
    let weights: Vec<Vec<i64>> = (0..ty.dim()).map(|k| ty.weight_of_basis(k)).collect();
    let mut cur: BTreeMap<Vec<i64>, i64> = BTreeMap::from([(vec![0; n], 1)]);
    for _ in 0..r {
        let mut next: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for (mu, m) in &cur {
            for w in &weights {
                let shifted: Vec<i64> = (0..n).map(|i| mu[i] + w[i] + rho[i]).collect();
                if let Some((d, s)) = to_dominant(ty.family, &shifted) {
                    let lam: Vec<i64> = (0..n).map(|i| d[i] - rho[i]).collect();
                    *next.entry(lam).or_insert(0) += s * m;
                }
            }
        }
        next.retain(|_, m| *m != 0);
        cur = next;
    }
    cur
}

#[test]
fn freudenthal_agrees_with_racah_speiser() {
    for fam in [Family::B, Family::C, Family::D] {
        for r in 2..=4 {
            let ty = LieType::new(fam, minimal_n(fam, r)).unwrap();
            let rs = racah_speiser(&ty, r);
            assert!(rs.values().all(|m| *m > 0), "{ty} r={r}");
            assert_eq!(weyl_decomposition(&ty, r), rs, "{ty} r={r}");
        }
    }
}

#[test]
fn multiplicities_are_cell_dimensions() {
    for fam in [Family::B, Family::C, Family::D] {
        for r in 2..=4 {
            let ty = LieType::new(fam, minimal_n(fam, r)).unwrap();
            let (by_label, others) = weyl_multiplicities(&ty, r);
            assert!(others.is_empty(), "{ty} r={r}");
            assert_eq!(by_label.len(), cell_labels(r).len());
            for label in cell_labels(r) {
                let weight = CellLabel::new(label.f, label.lambda.conjugate());
                let expect = std_tableaux(&label.lambda).len() * coset_reps_df(r, label.f).len();
                assert_eq!(by_label[&weight], expect as i64, "{ty} {label}");
            }
        }
    }
}
