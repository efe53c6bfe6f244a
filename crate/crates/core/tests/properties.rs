use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use coxeter_core::elements::{acyclic_orientations, CoxeterElementDescriptor, Orientation};
use coxeter_core::{AlgebraicReal, CoxeterMatrix, ExactSystem, FieldContext, Label, RootVector, Word};

fn element(field: &Arc<FieldContext>) -> impl Strategy<Value = AlgebraicReal> {
    let field = Arc::clone(field);
    prop::collection::vec((-20i64..=20, 1i64..=9), field.degree()).prop_map(move |cs| {
        let coeffs = cs
            .into_iter()
            .map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
            .collect();
        AlgebraicReal::from_coeffs(coeffs, &field)
    })
}

fn field12() -> Arc<FieldContext> {
    Arc::new(FieldContext::for_order(12))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_laws(a in element(&field12()), b in element(&field12()), c in element(&field12())) {
        prop_assert_eq!((a.clone() + b.clone()) * c.clone(), a.clone() * c.clone() + b.clone() * c.clone());
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        if !b.is_zero() {
            prop_assert_eq!((a.clone() / b.clone()) * b.clone(), a.clone());
        }
        prop_assert_eq!(a.clone() - a.clone(), AlgebraicReal::zero());
    }

    #[test]
    fn order_is_compatible_with_addition(a in element(&field12()), b in element(&field12())) {
        let shifted = a.clone() + AlgebraicReal::one();
        prop_assert!(shifted > a.clone());
        prop_assert_eq!(a < b, (b.clone() - a.clone()).sign() == std::cmp::Ordering::Greater);
        prop_assert!((a.to_f64() - b.to_f64()).abs() < 1e-9 || (a < b) == (a.to_f64() < b.to_f64()));
    }
}

fn cycle_labels() -> impl Strategy<Value = Vec<Label>> {
    prop::collection::vec(
        prop::sample::select(vec![Label::Finite(3), Label::Finite(4), Label::Infinite]),
        3..=5,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reflections_preserve_the_form_and_trichotomy(labels in cycle_labels(), i in 0usize..5, depth in 2u32..7) {
        let sys = ExactSystem::cyclic(&labels).unwrap();
        let i = i % sys.rank();
        let layers = sys.enumerate_by_depth(depth + 1).unwrap();
        for root in layers.layer(depth) {
            let image = sys.reflect(i, &root.vec);
            prop_assert_eq!(sys.form().pair(&image.0, &image.0), AlgebraicReal::one());
            let expected = match sys.pairing(i, &root.vec).sign() {
                std::cmp::Ordering::Greater => depth - 1,
                std::cmp::Ordering::Equal => depth,
                std::cmp::Ordering::Less => depth + 1,
            };
            prop_assert_eq!(layers.depth_of(&image), Some(expected));
            prop_assert_eq!(sys.depth(&image).unwrap(), expected);
        }
    }

    #[test]
    fn orientations_and_words_correspond(labels in cycle_labels(), pick in any::<prop::sample::Index>()) {
        let sys = ExactSystem::cyclic(&labels).unwrap();
        let n = sys.rank();
        let all = acyclic_orientations(sys.graph());
        prop_assert_eq!(all.len(), (1 << n) - 2);
        let o = pick.get(&all).clone();
        let c = CoxeterElementDescriptor::from_orientation(&sys, o.clone()).unwrap();
        let again = Orientation::from_word(sys.graph(), c.word()).unwrap();
        prop_assert_eq!(&again, &o);
        let from_word = CoxeterElementDescriptor::from_word(&sys, c.word()).unwrap();
        prop_assert_eq!(from_word.element(), c.element());
        // the inversion set of a Coxeter word has exactly n roots
        prop_assert_eq!(sys.inversion_set(c.word(), true).unwrap().len(), n);
    }

    #[test]
    fn standard_decisions_match_enumeration(labels in cycle_labels(), i in 1usize..=5, k in 1usize..=5) {
        let sys = ExactSystem::cyclic(&labels).unwrap();
        let n = sys.rank();
        let (i, k) = ((i - 1) % n + 1, (k - 1) % n + 1);
        prop_assume!(i != k);
        let spec = sys.require_cyclic().unwrap();
        let sf = sys.build_standard(&spec, i, k).unwrap();
        let pc = sys.enumerate_preprojective(&sf.descriptor, 8, 8).unwrap();
        for root in sys.enumerate_by_depth(6).unwrap().iter() {
            let verdict = sys.decide_standard(&root.vec, &sf).unwrap();
            let yes = verdict.status == coxeter_core::preprojective::Status::Yes;
            prop_assert_eq!(yes, pc.contains(&root.vec), "{:?}", root.vec);
        }
    }
}

#[test]
fn path_orientations_are_all_acyclic() {
    for n in 2..=6 {
        let m = CoxeterMatrix::path(&vec![Label::Finite(3); n - 1]).unwrap();
        assert_eq!(acyclic_orientations(&m.graph()).len(), 1 << (n - 1));
    }
}

#[test]
fn coxeter_words_must_use_each_letter_once() {
    let sys = ExactSystem::cyclic(&[Label::Finite(3); 3]).unwrap();
    for bad in [vec![1, 2], vec![1, 2, 2], vec![1, 2, 3, 1]] {
        assert!(CoxeterElementDescriptor::from_word(&sys, &Word::one_based(&bad)).is_err());
    }
    let v = RootVector::<AlgebraicReal>::from_integers(&[1, 1, 0]);
    assert!(v.is_positive_root());
}
