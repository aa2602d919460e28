use proptest::prelude::*;

use solvcohom_core::arith::{ExactMatrix, GaussianRational, Parity, PeriodSymbols, PeriodValue, PivotRule};
use solvcohom_core::lattice::{select_de_rham, select_dolbeault, LatticeData};
use solvcohom_core::lie::{catalog, ce_complex, nilshadow, LieAlgebraData, RepresentationData};
use solvcohom_core::weights::{build_invariant_complex, infer_weights, Weight};

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-4i64..=4, -4i64..=4, 1i64..=3).prop_map(|(re, im, den)| {
        GaussianRational::from_parts(re, im) * GaussianRational::from_ratio(1, den)
    })
}

fn matrix(max: usize) -> impl Strategy<Value = ExactMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(prop_oneof![3 => Just(GaussianRational::from_integer(0)), 2 => gaussian()], c), r)
            .prop_map(ExactMatrix::from_rows)
    })
}

fn algebras() -> Vec<LieAlgebraData> {
    vec![catalog::heisenberg3(), catalog::complex_semidirect_real(), catalog::complex_semidirect_3()]
}

fn period(symbols: &PeriodSymbols) -> impl Strategy<Value = PeriodValue> {
    let symbols = symbols.clone();
    prop::collection::vec(-3i64..=3, 6).prop_map(move |c| {
        let text = format!(
            "{} + {}*i + {}*pi + {}*i*pi + {}*a + {}*i*a",
            c[0], c[1], c[2], c[3], c[4], c[5]
        );
        symbols.parse(&text).unwrap()
    })
}

fn real_symbols() -> PeriodSymbols {
    let mut s = PeriodSymbols::new();
    s.declare("a", Parity::Real).unwrap();
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_is_transpose_invariant(m in matrix(6)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn pivot_rules_agree(m in matrix(6)) {
        let a = m.row_echelon_with(PivotRule::Sparsest);
        let b = m.row_echelon_with(PivotRule::First);
        prop_assert_eq!(a.reduced, b.reduced);
        prop_assert_eq!(a.pivots, b.pivots);
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in matrix(6)) {
        let (rank, kernel) = m.rank_and_kernel();
        prop_assert_eq!(rank + kernel.len(), m.cols());
        for v in kernel {
            prop_assert!(m.mul_vec(&v).iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn period_conjugation_is_an_involution(v in period(&real_symbols())) {
        prop_assert_eq!(v.conj().conj(), v);
    }

    #[test]
    fn period_lattice_tests_are_closed_under_sums(a in -3i64..=3, b in -3i64..=3) {
        let s = real_symbols();
        let x = s.parse(&format!("{}*i*pi", 2 * a)).unwrap();
        let y = s.parse(&format!("{}*i*pi", 2 * b)).unwrap();
        prop_assert!(x.in_2pi_i_z() && y.in_2pi_i_z());
        prop_assert!((&x + &y).in_2pi_i_z());
        prop_assert!((&x - &y).im_in_pi_z());
    }

    #[test]
    fn ce_complexes_square_to_zero(which in 0usize..3, coords in prop::collection::vec(gaussian(), 2), adjoint in any::<bool>()) {
        let g = &algebras()[which];
        let rep = if adjoint { RepresentationData::adjoint(g) } else { RepresentationData::trivial(g, 2) };
        let mu = Weight::new(coords[..g.complement().len()].to_vec());
        let c = ce_complex(g, &rep, &mu).unwrap();
        prop_assert!(c.check_d_squared().is_ok());
        let betti = c.betti_numbers().unwrap();
        prop_assert_eq!(c.euler_characteristic(), solvcohom_core::lie::alternating_sum(&betti));
    }
}

fn lattice_strategy(complement: usize, conjugate_pairs: bool) -> impl Strategy<Value = LatticeData> {
    let symbols = real_symbols();
    prop::collection::vec(prop::collection::vec((-2i64..=2, -2i64..=2, -2i64..=2), complement), 0..3).prop_map(
        move |gens| {
            let generators = gens
                .into_iter()
                .map(|coords| {
                    let values: Vec<PeriodValue> = coords
                        .iter()
                        .map(|&(a, i, ipi)| symbols.parse(&format!("{a}*a + {i}*i + {ipi}*i*pi")).unwrap())
                        .collect();
                    if conjugate_pairs {
                        vec![values[0].clone(), values[0].conj()]
                    } else {
                        values
                    }
                })
                .collect();
            LatticeData::new(symbols.clone(), generators)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn de_rham_selection_properties(lat in lattice_strategy(2, true), extra in lattice_strategy(2, true), adjoint in any::<bool>()) {
        let g = catalog::complex_semidirect_real();
        let rep = if adjoint { RepresentationData::adjoint(&g) } else { RepresentationData::trivial(&g, 1) };
        let w = infer_weights(&g, &rep).unwrap();
        let ic = build_invariant_complex(&g, &rep, &w).unwrap();
        let sel = select_de_rham(&ic, &lat, &g).unwrap();
        sel.selected.complex().check_d_squared().unwrap();
        prop_assert!(sel.verdicts.iter().filter(|v| v.trivial_on_g).all(|v| v.selected));

        let mut bigger = lat.clone();
        bigger.generators.extend(extra.generators);
        let smaller = select_de_rham(&ic, &bigger, &g).unwrap();
        for (a, b) in smaller.dims().iter().zip(sel.dims()) {
            prop_assert!(a <= b);
        }

        let betti = sel.selected.complex().betti_numbers().unwrap();
        prop_assert_eq!(sel.selected.complex().euler_characteristic(), solvcohom_core::lie::alternating_sum(&betti));
        let only_zero = sel.verdicts.iter().all(|v| v.trivial_on_g == v.trivial_on_lattice);
        if only_zero {
            let zero = ic.restrict(Weight::is_zero).unwrap();
            prop_assert_eq!(betti, zero.complex().betti_numbers().unwrap());
        }
    }

    #[test]
    fn dolbeault_selection_keeps_zero_tags(lat in lattice_strategy(1, false)) {
        let g = catalog::complex_semidirect_3();
        let rep = RepresentationData::trivial(&g, 1);
        let w = infer_weights(&g, &rep).unwrap();
        let ic = build_invariant_complex(&g, &rep, &w).unwrap();
        let sel = select_dolbeault(&ic, &lat, &g).unwrap();
        prop_assert!(sel.verdicts.iter().filter(|v| v.trivial_on_g).all(|v| v.selected));
        prop_assert!(sel.selected.complex().check_d_squared().is_ok());
    }
}

#[test]
fn nilshadows_of_the_catalog_are_certified() {
    for g in algebras() {
        let w = infer_weights(&g, &RepresentationData::adjoint(&g)).unwrap();
        let s = nilshadow(&g, &w).unwrap();
        assert_eq!(s.dim(), g.dim());
        assert!(s.is_nilpotent_on(&(0..s.dim()).collect::<Vec<_>>()));
    }
}
