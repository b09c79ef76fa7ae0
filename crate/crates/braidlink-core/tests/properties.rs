//! Randomized invariants for the core modules. The determinant checks use a
//! cofactor-expansion oracle written here, independent of the Bareiss path
//! in the library.

use braidlink_core::braid::{BraidWord, StrandSet};
use braidlink_core::forcing::{forced_set, forces, LRWord};
use braidlink_core::fox::{
    abelianize, change_basis, fox_derivative, magnus_matrix, Basis, Coloring, FreeWord,
};
use braidlink_core::laurent::{LaurentPoly, RingMatrix};
use braidlink_core::linking::{lk_combinatorial, linking_number, TwoComponentSplit};
use proptest::prelude::*;

// ---------------------------------------------------------------- oracles

/// Determinant by cofactor expansion along the first row.
fn det_cofactor(m: &RingMatrix) -> LaurentPoly {
    let n = m.rows();
    assert_eq!(n, m.cols());
    if n == 0 {
        return LaurentPoly::one(m.nvars());
    }
    if n == 1 {
        return m.at(0, 0).clone();
    }
    let mut acc = LaurentPoly::zero(m.nvars());
    for j in 0..n {
        let minor = RingMatrix::from_fn(n - 1, n - 1, m.nvars(), |r, c| {
            m.at(r + 1, if c < j { c } else { c + 1 }).clone()
        });
        let term = m.at(0, j).mul(&det_cofactor(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

// ------------------------------------------------------------- strategies

fn braid_strategy(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec((1..n, proptest::bool::ANY), 0..=max_len).prop_map(
            move |letters| {
                let signed: Vec<i64> = letters
                    .into_iter()
                    .map(|(i, pos)| if pos { i as i64 } else { -(i as i64) })
                    .collect();
                BraidWord::from_signed(n, &signed).unwrap()
            },
        )
    })
}

fn poly_strategy(nvars: usize) -> impl Strategy<Value = LaurentPoly> {
    proptest::collection::vec(
        (proptest::collection::vec(-3i64..=3, nvars), -5i64..=5),
        0..=4,
    )
    .prop_map(move |terms| {
        terms.into_iter().fold(LaurentPoly::zero(nvars), |acc, (e, c)| {
            acc.add(&LaurentPoly::monomial(&e, c))
        })
    })
}

fn matrix_strategy(dim: usize, nvars: usize) -> impl Strategy<Value = RingMatrix> {
    proptest::collection::vec(
        proptest::collection::vec(
            (proptest::collection::vec(-2i64..=2, nvars), -3i64..=3),
            0..=3,
        ),
        dim * dim,
    )
    .prop_map(move |entries| {
        RingMatrix::from_fn(dim, dim, nvars, |i, j| {
            entries[i * dim + j].iter().fold(LaurentPoly::zero(nvars), |acc, (e, c)| {
                acc.add(&LaurentPoly::monomial(e, *c))
            })
        })
    })
}

fn free_word_strategy(rank: usize, basis: Basis) -> impl Strategy<Value = FreeWord> {
    proptest::collection::vec((1..=rank, proptest::bool::ANY), 0..=10).prop_map(move |ls| {
        let letters = ls.into_iter().map(|(i, pos)| (i, if pos { 1 } else { -1 })).collect();
        FreeWord::from_letters(rank, basis, letters).unwrap()
    })
}

fn lr_strategy(max_len: usize) -> impl Strategy<Value = LRWord> {
    proptest::collection::vec(proptest::bool::ANY, 2..=max_len)
        .prop_filter("needs both letters", |v| v.contains(&true) && v.contains(&false))
        .prop_map(|v| {
            let text: String = v.iter().map(|&b| if b { 'L' } else { 'R' }).collect();
            LRWord::parse(&text).unwrap()
        })
}

fn components_coloring(b: &BraidWord) -> Coloring {
    Coloring::from_components(&b.closure_components(), b.n()).unwrap()
}

fn two_component_split(b: &BraidWord) -> Option<TwoComponentSplit> {
    let comps = b.closure_components();
    if comps.len() != 2 {
        return None;
    }
    Some(TwoComponentSplit::new(b.clone(), comps[0].clone()).unwrap())
}

// ------------------------------------------------------------ braid words

proptest! {
    #[test]
    fn permutation_is_a_homomorphism(
        a in braid_strategy(6, 10),
        b_letters in proptest::collection::vec((1usize..6, proptest::bool::ANY), 0..=10),
    ) {
        let signed: Vec<i64> = b_letters
            .into_iter()
            .filter(|(i, _)| *i < a.n())
            .map(|(i, pos)| if pos { i as i64 } else { -(i as i64) })
            .collect();
        let b = BraidWord::from_signed(a.n(), &signed).unwrap();
        let composed = a.compose(&b).unwrap().permutation();
        prop_assert_eq!(composed, a.permutation().compose_after(&b.permutation()));
    }

    #[test]
    fn delete_all_strands_is_identity(b in braid_strategy(6, 12)) {
        let all: StrandSet = (1..=b.n()).collect();
        prop_assert_eq!(b.delete_strands(&all).unwrap(), b);
    }

    #[test]
    fn delete_commutes_with_free_cancel(b in braid_strategy(6, 12)) {
        // deleting from the cancelled word gives the same sub-braid up to
        // free cancellation
        let keep = b.closure_components().into_iter().next().unwrap();
        let direct = b.delete_strands(&keep).unwrap().free_cancel();
        let cancelled_first = b.free_cancel().delete_strands(&keep).unwrap().free_cancel();
        prop_assert_eq!(direct, cancelled_first);
    }

    #[test]
    fn closure_components_partition_strands(b in braid_strategy(6, 12)) {
        let comps = b.closure_components();
        let total: usize = comps.iter().map(|c| c.len()).sum();
        prop_assert_eq!(total, b.n());
        let mut seen = vec![false; b.n()];
        for c in &comps {
            for s in c.iter() {
                prop_assert!(!seen[s - 1], "strand {} in two components", s);
                seen[s - 1] = true;
            }
        }
    }

    #[test]
    fn free_cancel_idempotent_and_permutation_safe(b in braid_strategy(6, 12)) {
        let once = b.free_cancel();
        prop_assert_eq!(once.free_cancel(), once.clone());
        prop_assert_eq!(once.permutation(), b.permutation());
    }
}

// ------------------------------------------------------------ laurent ring

proptest! {
    #[test]
    fn ring_axioms(
        a in poly_strategy(2),
        b in poly_strategy(2),
        c in poly_strategy(2),
    ) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&LaurentPoly::zero(2)), a.clone());
        prop_assert_eq!(a.mul(&LaurentPoly::one(2)), a.clone());
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(
        a in poly_strategy(2),
        b in poly_strategy(2),
    ) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn bareiss_agrees_with_cofactor(m in (0usize..=4).prop_flat_map(|d| matrix_strategy(d, 2))) {
        prop_assert_eq!(m.determinant().unwrap(), det_cofactor(&m));
    }

    #[test]
    fn determinant_is_multiplicative(
        a in matrix_strategy(3, 1),
        b in matrix_strategy(3, 1),
    ) {
        let ab = a.mat_mul(&b).unwrap();
        prop_assert_eq!(
            ab.determinant().unwrap(),
            a.determinant().unwrap().mul(&b.determinant().unwrap())
        );
    }
}

// A plain loop gives better control than prop_flat_map for the dim ≤ 6
// cross-check; proptest drives the entropy.
proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn bareiss_agrees_with_cofactor_large(m in (5usize..=6).prop_flat_map(|d| matrix_strategy(d, 2))) {
        prop_assert_eq!(m.determinant().unwrap(), det_cofactor(&m));
    }
}

// -------------------------------------------------------------- fox module

proptest! {
    #[test]
    fn magnus_bottom_row(b in braid_strategy(6, 12)) {
        let coloring = components_coloring(&b);
        let m = magnus_matrix(&b, &coloring).unwrap();
        let n = m.rows();
        for j in 0..n - 1 {
            prop_assert!(m.at(n - 1, j).is_zero());
        }
        prop_assert!(m.at(n - 1, n - 1).is_one());
    }

    #[test]
    fn single_variable_magnus_is_a_homomorphism(
        a in braid_strategy(5, 8),
        b_letters in proptest::collection::vec((1usize..5, proptest::bool::ANY), 0..=8),
    ) {
        let signed: Vec<i64> = b_letters
            .into_iter()
            .filter(|(i, _)| *i < a.n())
            .map(|(i, pos)| if pos { i as i64 } else { -(i as i64) })
            .collect();
        let b = BraidWord::from_signed(a.n(), &signed).unwrap();
        let c = Coloring::uniform(a.n());
        let ra = magnus_matrix(&a, &c).unwrap();
        let rb = magnus_matrix(&b, &c).unwrap();
        let rab = magnus_matrix(&a.compose(&b).unwrap(), &c).unwrap();
        prop_assert_eq!(ra.mat_mul(&rb).unwrap(), rab);
    }

    #[test]
    fn magnus_of_inverse_is_inverse(a in braid_strategy(5, 8)) {
        let c = Coloring::uniform(a.n());
        let r = magnus_matrix(&a, &c).unwrap();
        let rinv = magnus_matrix(&a.inverse(), &c).unwrap();
        prop_assert_eq!(r.mat_mul(&rinv).unwrap(), RingMatrix::identity(a.n(), 1));
    }

    #[test]
    fn basis_change_round_trip(w in free_word_strategy(5, Basis::X)) {
        prop_assert_eq!(change_basis(&change_basis(&w)), w);
    }

    #[test]
    fn basis_change_round_trip_g(w in free_word_strategy(5, Basis::G)) {
        prop_assert_eq!(change_basis(&change_basis(&w)), w);
    }

    #[test]
    fn fundamental_fox_identity(
        w in free_word_strategy(4, Basis::G),
        colors in proptest::collection::vec(1usize..=2, 4),
    ) {
        // φ(w) - 1 = Σ_j φ(∂w/∂g_j) (φ(g_j) - 1)
        prop_assume!(colors.contains(&1));
        let coloring = Coloring::new(if colors.contains(&2) {
            colors
        } else {
            vec![1, 1, 1, 1]
        })
        .unwrap();
        let mu = coloring.mu();
        let lhs = abelianize(&w, &coloring).unwrap().sub(&LaurentPoly::one(mu));
        let mut rhs = LaurentPoly::zero(mu);
        for j in 1..=4 {
            let d = fox_derivative(&w, j, &coloring).unwrap();
            let gj = abelianize(&FreeWord::g(4, j).unwrap(), &coloring).unwrap();
            rhs = rhs.add(&d.mul(&gj.sub(&LaurentPoly::one(mu))));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn trace_is_conjugation_invariant(
        a in braid_strategy(5, 8),
        b_letters in proptest::collection::vec((1usize..5, proptest::bool::ANY), 0..=8),
    ) {
        let signed: Vec<i64> = b_letters
            .into_iter()
            .filter(|(i, _)| *i < a.n())
            .map(|(i, pos)| if pos { i as i64 } else { -(i as i64) })
            .collect();
        let b = BraidWord::from_signed(a.n(), &signed).unwrap();
        let c = Coloring::uniform(a.n());
        let conj = a.compose(&b).unwrap().compose(&a.inverse()).unwrap();
        let tr = magnus_matrix(&b, &c).unwrap().trace().unwrap();
        let tr_conj = magnus_matrix(&conj, &c).unwrap().trace().unwrap();
        prop_assert_eq!(tr, tr_conj);
    }
}

// ----------------------------------------------------------------- linking

proptest! {
    #[test]
    fn linking_methods_agree(b in braid_strategy(6, 10)) {
        if let Some(split) = two_component_split(&b) {
            // linking_number runs both methods and errors on disagreement
            prop_assert!(linking_number(&split).is_ok());
        }
    }

    #[test]
    fn linking_is_symmetric(b in braid_strategy(6, 10)) {
        if let Some(split) = two_component_split(&b) {
            prop_assert_eq!(
                linking_number(&split).unwrap(),
                linking_number(&split.swapped()).unwrap()
            );
        }
    }

    #[test]
    fn linking_is_conjugation_invariant(
        b in braid_strategy(6, 8),
        c_letters in proptest::collection::vec((1usize..6, proptest::bool::ANY), 0..=6),
    ) {
        if let Some(split) = two_component_split(&b) {
            let signed: Vec<i64> = c_letters
                .into_iter()
                .filter(|(i, _)| *i < b.n())
                .map(|(i, pos)| if pos { i as i64 } else { -(i as i64) })
                .collect();
            let c = BraidWord::from_signed(b.n(), &signed).unwrap();
            let conj = c.compose(&b).unwrap().compose(&c.inverse()).unwrap();
            let image = c.permutation();
            let new_base: StrandSet = split.base().iter().map(|s| image.image_of(s)).collect();
            let conj_split = TwoComponentSplit::new(conj, new_base).unwrap();
            prop_assert_eq!(
                lk_combinatorial(&split).unwrap(),
                lk_combinatorial(&conj_split).unwrap()
            );
            prop_assert_eq!(
                linking_number(&split).unwrap(),
                linking_number(&conj_split).unwrap()
            );
        }
    }

    #[test]
    fn linking_survives_markov_stabilization(
        b in braid_strategy(5, 8),
        positive in proptest::bool::ANY,
    ) {
        if let Some(split) = two_component_split(&b) {
            let n = b.n();
            let mut signed = b.signed_letters();
            signed.push(if positive { n as i64 } else { -(n as i64) });
            let stabilized = BraidWord::from_signed(n + 1, &signed).unwrap();
            let new_base: StrandSet = if split.base().contains(n) {
                split.base().iter().chain([n + 1]).collect()
            } else {
                split.base().clone()
            };
            let stab_split = TwoComponentSplit::new(stabilized, new_base).unwrap();
            prop_assert_eq!(
                linking_number(&split).unwrap(),
                linking_number(&stab_split).unwrap()
            );
        }
    }
}

// ----------------------------------------------------------------- forcing

proptest! {
    #[test]
    fn forcing_is_reflexive_and_length_monotone(w in lr_strategy(10), v in lr_strategy(10)) {
        prop_assert!(forces(&w, &w).unwrap());
        if forces(&w, &v).unwrap() {
            prop_assert!(v.len() <= w.len());
        }
    }

    #[test]
    fn forcing_is_antisymmetric(w in lr_strategy(10), v in lr_strategy(10)) {
        if forces(&w, &v).unwrap() && forces(&v, &w).unwrap() {
            prop_assert_eq!(w, v);
        }
    }

    #[test]
    fn forcing_is_transitive(w in lr_strategy(8)) {
        // spot-check transitivity through the forced set
        let fw = forced_set(&w).unwrap();
        for v in &fw {
            prop_assert!(forces(&w, v).unwrap());
        }
        if let Some(v) = fw.iter().find(|v| v.len() < w.len()) {
            for u in forced_set(v).unwrap() {
                prop_assert!(forces(&w, &u).unwrap());
            }
        }
    }

    #[test]
    fn forced_set_members_are_canonical_pa_and_monotone(w in lr_strategy(7)) {
        let fw = forced_set(&w).unwrap();
        prop_assert!(fw.contains(&w));
        for v in &fw {
            prop_assert!(v.is_pseudo_anosov());
            prop_assert_eq!(&LRWord::parse(&v.to_string()).unwrap(), v);
            let fv = forced_set(v).unwrap();
            prop_assert!(fv.is_subset(&fw), "forced_set not monotone at {}", v);
        }
    }
}
