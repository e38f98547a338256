//! Property tests for structural invariants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use packsyz_core::characters::CharacterTables;
use packsyz_core::equivariant::EquivariantComplex;
use packsyz_core::linalg::{laplacian, Echelon};
use packsyz_core::{NPartition, PackingComplex, Partition, Permutation};
use proptest::prelude::*;

const COMPLEXES: [(&[u32], &[u32]); 5] = [
    (&[3, 3], &[1, 1]),
    (&[4, 3], &[1, 1]),
    (&[5], &[2]),
    (&[4, 4], &[2, 1]),
    (&[3, 2, 2], &[1, 1, 1]),
];

fn perm(n: u32) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn group_element(sizes: &'static [u32]) -> BoxedStrategy<Vec<Permutation>> {
    sizes
        .iter()
        .map(|&n| perm(n))
        .collect::<Vec<_>>()
        .boxed()
}

fn case_and_pair() -> impl Strategy<Value = (usize, Vec<Permutation>, Vec<Permutation>)> {
    (0..COMPLEXES.len()).prop_flat_map(|i| {
        let s = COMPLEXES[i].0;
        (Just(i), group_element(s), group_element(s))
    })
}

fn partition(max: u32) -> impl Strategy<Value = Partition> {
    (0..=max).prop_flat_map(|n| {
        let all = Partition::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn action_is_a_homomorphism((i, g, h) in case_and_pair()) {
        let (n, d) = COMPLEXES[i];
        let cx = PackingComplex::build(n, d).unwrap();
        let gh: Vec<Permutation> = g.iter().zip(&h).map(|(a, b)| a.compose(b)).collect();
        for k in -1..=cx.top_dim() {
            let lhs = cx.act(&g, k).unwrap().compose(&cx.act(&h, k).unwrap());
            prop_assert_eq!(lhs, cx.act(&gh, k).unwrap());
        }
    }

    #[test]
    fn action_commutes_with_boundary((i, g, _h) in case_and_pair()) {
        let (n, d) = COMPLEXES[i];
        let cx = PackingComplex::build(n, d).unwrap();
        for k in 0..=cx.top_dim() {
            let b = cx.boundary(k);
            let lhs = b.mul(&cx.act(&g, k).unwrap().to_matrix()).unwrap();
            let rhs = cx.act(&g, k - 1).unwrap().to_matrix().mul(&b).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn laplacian_is_positive_semidefinite(i in 0..COMPLEXES.len(), xs in prop::collection::vec(-5i64..=5, 64)) {
        let (n, d) = COMPLEXES[i];
        let cx = PackingComplex::build(n, d).unwrap();
        for k in -1..cx.top_dim() {
            let lap = laplacian(&cx.boundary(k), &cx.boundary(k + 1)).unwrap();
            prop_assert!(lap.is_symmetric());
            let x: Vec<BigRational> = (0..lap.rows())
                .map(|j| BigRational::from_integer(BigInt::from(xs[j % xs.len()] + j as i64 % 3)))
                .collect();
            prop_assert!(!lap.quadratic_form(&x).unwrap().is_negative());
        }
    }

    #[test]
    fn pad_unpad_round_trip(lambda in partition(9), extra in 0u32..4) {
        let m = lambda.size() + lambda.first() + extra;
        let padded = lambda.pad(m).unwrap();
        prop_assert_eq!(padded.size(), m);
        prop_assert_eq!(padded.unpad(), lambda);
    }

    #[test]
    fn conjugation_is_involutive(lambda in partition(10)) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().dimension(), lambda.dimension());
    }

    #[test]
    fn frobenius_reciprocity(lambda in partition(4), nu in partition(7)) {
        let n = lambda.size();
        let total = nu.size();
        prop_assume!(total >= n);
        let m = total - n;
        let tables = CharacterTables::new(7).unwrap();
        let chi = tables.irreducible(&NPartition::new(vec![lambda.clone()])).unwrap();
        let psi = tables.irreducible(&NPartition::new(vec![nu.clone()])).unwrap();
        let lhs = tables.restrict(&psi, &[n]).unwrap().inner(&chi).unwrap();
        let mut rhs = BigRational::zero();
        for mu in Partition::all(m) {
            let filler = NPartition::new(vec![mu.clone()]);
            let ind = tables.induce(&chi, &[total], &filler).unwrap();
            rhs += ind.inner(&psi).unwrap() * BigRational::from_integer(BigInt::from(mu.dimension()));
        }
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn boundary_squares_to_zero() {
    for (n, d) in COMPLEXES {
        let cx = PackingComplex::build(n, d).unwrap();
        for k in 0..=cx.top_dim() {
            let dd = cx.boundary(k - 1).mul(&cx.boundary(k)).unwrap();
            assert_eq!(dd.nnz(), 0, "{n:?} {d:?} k={k}");
        }
    }
}

#[test]
fn harmonic_rank_is_homology_rank() {
    for (n, d) in COMPLEXES {
        let mut e = EquivariantComplex::build(n, d).unwrap();
        let top = e.complex().top_dim();
        for k in -1..=top {
            let bk = e.complex().boundary(k);
            let bk1 = e.complex().boundary(k + 1);
            let lap = laplacian(&bk, &bk1).unwrap();
            assert_eq!(Echelon::of(&lap).nullity(), e.homology_dim(k), "{n:?} {d:?} k={k}");
        }
    }
}

#[test]
fn hopf_trace_holds() {
    for (n, d) in COMPLEXES {
        let mut e = EquivariantComplex::build(n, d).unwrap();
        assert!(e.hopf_trace_check().unwrap().passed(), "{n:?} {d:?}");
    }
}
