use solvcohom_core::lie::{catalog, GroundMode, LieAlgebraData, RepresentationData};
use solvcohom_core::oracle::verify_quasi_iso;
use solvcohom_core::weights::{build_invariant_complex, infer_weights, Weight};

fn check(g: &LieAlgebraData, rep: &RepresentationData) -> usize {
    let w = infer_weights(g, rep).unwrap();
    let r = verify_quasi_iso(g, rep, &w).unwrap();
    for s in &r.sectors {
        assert!(s.equal, "sector {}: block {:?} full {:?}", s.tag, s.block_betti, s.full_betti);
        if !s.tag.is_zero() && s.block_dims.iter().all(|&d| d == 0) {
            assert!(s.full_betti.iter().all(|&b| b == 0));
        }
    }
    r.sectors.len()
}

#[test]
fn real_example_adjoint() {
    let g = catalog::complex_semidirect_real();
    let rep = RepresentationData::adjoint(&g);
    assert_eq!(check(&g, &rep), 21);

    let w = infer_weights(&g, &rep).unwrap();
    let ic = build_invariant_complex(&g, &rep, &w).unwrap();
    let mut degree_one: Vec<Weight> = ic.tags(1).to_vec();
    degree_one.sort();
    degree_one.dedup();
    assert_eq!(degree_one.len(), 13);
}

#[test]
fn real_example_trivial() {
    let g = catalog::complex_semidirect_real();
    assert_eq!(check(&g, &RepresentationData::trivial(&g, 1)), 9);
}

#[test]
fn complex_example_and_nilpotent_algebras() {
    let g = catalog::complex_semidirect_3();
    check(&g, &RepresentationData::trivial(&g, 1));
    check(&g, &RepresentationData::adjoint(&g));
    let h = catalog::heisenberg3();
    assert_eq!(check(&h, &RepresentationData::adjoint(&h)), 1);
    let t = catalog::abelian(3, GroundMode::Complex);
    assert_eq!(check(&t, &RepresentationData::trivial(&t, 1)), 1);
}
