//! Sweep of decomposition reports over all types at minimal n, r ≤ 4 and
//! small e, comparing the heads with both nonvanishing rules.

use bmw_core::qgroup::{Family, LieType};
use bmw_core::repr::decomp::{decomposition_report, minimal_n, Options};
use bmw_core::scalar::ScalarRing;

#[test]
fn heads_follow_the_e_square_rule() {
    let mut xi_mismatch_instances = Vec::new();
    for fam in [Family::B, Family::C, Family::D] {
        for r in 2..=4 {
            let ty = LieType::new(fam, minimal_n(fam, r)).unwrap();
            for e in [0, 2, 3, 4] {
                let rep = decomposition_report(ty, r, ScalarRing::from_e(e).unwrap(), Options::default()).unwrap();
                for (name, ok) in &rep.checks {
                    if name != "xi_criterion" {
                        assert!(ok, "{ty} r={r} e={e}: {name}");
                    }
                }
                if !rep.xi_mismatches.is_empty() {
                    // only the labels (r/2, ∅) ever disagree with the literal rule
                    assert!(rep.xi_mismatches.iter().all(|l| 2 * l.f == r), "{ty} r={r} e={e}");
                    xi_mismatch_instances.push((ty, r, e));
                }
            }
        }
    }
    assert!(!xi_mismatch_instances.is_empty());
}
