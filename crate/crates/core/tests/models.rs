//! The three models of `E(2, G)` have the same reduced homology.

use e2top::catalog::CatalogEntry;
use e2top::homology::{euler_characteristic, homology_all, HomologyGroup};
use e2top::simplicial::{coset_poset_complex, e2_chain_complex, ebar_chain_complex, Budget, ChainComplex};
use e2top::FiniteGroup;

fn group(name: &str) -> FiniteGroup {
    name.parse::<CatalogEntry>().unwrap().build().unwrap()
}

fn reduced(c: &ChainComplex) -> Vec<HomologyGroup> {
    homology_all(c).iter().enumerate().map(|(d, h)| h.reduced(d)).collect()
}

#[test]
fn models_agree_through_degree_two() {
    for entry in CatalogEntry::default_catalog(false) {
        let g = entry.build().unwrap();
        if g.order() > 16 {
            continue;
        }
        let e2 = e2_chain_complex(&g, 3, Budget::default()).unwrap();
        let ebar = ebar_chain_complex(&g, 3, Budget::default()).unwrap();
        let coset = coset_poset_complex(&g);
        for c in [&e2, &ebar, &coset] {
            assert!(c.boundary_defects().is_empty(), "{entry}");
        }
        let (a, b, mut k) = (reduced(&e2), reduced(&ebar), reduced(&coset));
        k.resize(3, HomologyGroup::free(0));
        assert_eq!(a[..3], b[..3], "{entry}: e2 vs ebar");
        assert_eq!(a[..3], k[..3], "{entry}: e2 vs coset poset");
    }
}

#[test]
fn e2_is_connected() {
    for name in ["C1", "C2", "S3", "Q8", "A4"] {
        let c = e2_chain_complex(&group(name), 1, Budget::default()).unwrap();
        assert_eq!(homology_all(&c)[0], HomologyGroup::free(1), "{name}");
    }
}

#[test]
fn s3_first_betti_number() {
    let g = group("S3");
    let coset = coset_poset_complex(&g);
    let chi = euler_characteristic(&coset).unwrap();
    assert_eq!(chi, -7);
    let e2 = homology_all(&e2_chain_complex(&g, 2, Budget::default()).unwrap());
    assert_eq!(e2[1], HomologyGroup::free(8));
    assert_eq!(e2[1].betti as i64, 1 - chi);
}

#[test]
fn transitively_commutative_groups_look_like_bouquets() {
    for name in ["S3", "D4", "Q8", "D6", "A4", "Q16"] {
        let g = group(name);
        assert!(g.is_transitively_commutative() && !g.is_abelian(), "{name}");
        let h = homology_all(&e2_chain_complex(&g, 4, Budget::default()).unwrap());
        assert!(h[1].is_free() && h[1].betti > 0, "{name}");
        assert!(h[2].is_zero(), "{name}: H_2 = {}", h[2]);
        assert!(h[3].is_zero(), "{name}: H_3 = {}", h[3]);
        // The coset poset complex gives the rank directly.
        let chi = euler_characteristic(&coset_poset_complex(&g)).unwrap();
        assert_eq!(h[1].betti as i64, 1 - chi, "{name}");
    }
    assert!(!group("S4").is_transitively_commutative());
}
