//! Structure constants of the algebra in the Enyang basis: associativity on
//! sampled triples, independence from the probe set, and the dimension of
//! the operator span.

use std::sync::OnceLock;

use bmw_core::bmwalg::operator::EXHAUSTIVE_LIMIT;
use bmw_core::bmwalg::{enyang_basis, faithfulness_check_in, OperatorBasis, TensorRep};
use bmw_core::qgroup::{Family, LieType};
use bmw_core::scalar::{Cyclotomic, CyclotomicField, Domain, GenericField, Ring};
use proptest::prelude::*;

type Constants = Vec<Vec<Vec<Cyclotomic>>>;

fn constants() -> &'static Constants {
    static C: OnceLock<Constants> = OnceLock::new();
    C.get_or_init(|| {
        let ty = LieType::new(Family::D, 4).unwrap();
        let rep = TensorRep::new(ty, CyclotomicField::new(3).unwrap(), 3);
        let elems = enyang_basis(3).iter().map(|b| b.element()).collect();
        OperatorBasis::build(rep, elems, EXHAUSTIVE_LIMIT).structure_constants().unwrap()
    })
}

fn product(c: &Constants, x: &[Cyclotomic], y: &[Cyclotomic]) -> Vec<Cyclotomic> {
    let n = x.len();
    let zero = x[0].zero_like();
    let mut out = vec![zero; n];
    for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
            let ab = a.mul(b);
            for (k, v) in c[i][j].iter().enumerate() {
                if !v.is_zero() {
                    out[k] = out[k].add(&ab.mul(v));
                }
            }
        }
    }
    out
}

fn unit(n: usize, i: usize) -> Vec<Cyclotomic> {
    let dom = CyclotomicField::new(3).unwrap();
    (0..n).map(|k| if k == i { dom.one() } else { dom.zero() }).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn structure_constants_are_associative(i in 0usize..15, j in 0usize..15, k in 0usize..15) {
        let c = constants();
        let (x, y, z) = (unit(15, i), unit(15, j), unit(15, k));
        prop_assert_eq!(product(c, &product(c, &x, &y), &z), product(c, &x, &product(c, &y, &z)));
    }
}

#[test]
fn expansions_do_not_depend_on_the_probes() {
    let ty = LieType::new(Family::C, 3).unwrap();
    let rep = TensorRep::new(ty, GenericField, 3);
    let elems: Vec<_> = enyang_basis(3).iter().map(|b| b.element()).collect();
    let probes = OperatorBasis::build(rep.clone(), elems.clone(), 0);
    assert!(!probes.exhaustive);
    let full = OperatorBasis::exhaustive(rep, elems);
    assert!(probes.probes.len() < full.probes.len());
    assert_eq!(probes.structure_constants().unwrap(), full.structure_constants().unwrap());
}

#[test]
fn four_strands_span_the_full_dimension() {
    for fam in [Family::B, Family::C, Family::D] {
        let n = bmw_core::repr::decomp::minimal_n(fam, 4);
        let ty = LieType::new(fam, n).unwrap();
        let rep = faithfulness_check_in(ty, CyclotomicField::new(2).unwrap(), 4);
        assert_eq!((rep.rank, rep.expected), (105, 105), "{ty}");
    }
}
