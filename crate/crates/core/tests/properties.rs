use proptest::prelude::*;

use predim::alpha::{alpha_delta_bridge_check, closed_family_delta, is_flat_geometry, AlphaTable};
use predim::corpus::{letters, random_matroids};
use predim::gammoid::{cotransversal_check, strict_gammoid, system_to_digraph, transversal_matroid};
use predim::synthesis::{
    alpha_transversal, beta_correspondence_check, claim_checks, self_sufficient_gap_check,
    synthesize_presentation, synthesize_relative,
};
use predim::{Matroid, SetSystem, Subset};

fn system() -> impl Strategy<Value = SetSystem> {
    (0usize..=6).prop_flat_map(|n| {
        let masks = if n == 0 {
            Just(Vec::new()).boxed()
        } else {
            prop::collection::vec(1u32..1 << n, 0..=n).boxed()
        };
        masks.prop_map(move |mut ms| {
            ms.sort_unstable();
            ms.dedup();
            SetSystem::from_parts(letters(n), ms.into_iter().map(Subset).collect()).unwrap()
        })
    })
}

fn class_system() -> impl Strategy<Value = SetSystem> {
    system().prop_filter("negative predimension", |s| s.is_in_class_c())
}

fn matroid() -> impl Strategy<Value = Matroid> {
    any::<u64>().prop_map(|seed| random_matroids(seed, 1, 6).pop().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dimension_is_a_rank_function(sys in class_system()) {
        let d = sys.dimension_table().unwrap();
        // from_rank_table validates normalization, unit increase and submodularity
        let m = sys.induced_matroid().unwrap();
        for x in sys.full().subsets() {
            prop_assert!(d[x.index()] as i32 <= sys.predimension(x));
            prop_assert_eq!(m.rank(x), sys.dimension(x).unwrap());
            let cl = sys.closure(x).unwrap();
            prop_assert!(x.is_subset_of(cl));
            prop_assert_eq!(sys.closure(cl).unwrap(), cl);
            prop_assert_eq!(cl, m.closure(x));
        }
    }

    #[test]
    fn self_sufficiency_routes_agree(sys in class_system()) {
        for x in sys.full().subsets() {
            let ss = sys.is_self_sufficient(x).unwrap();
            prop_assert_eq!(ss, sys.is_self_sufficient_via_transversal(x).unwrap());
            let hull = sys.self_sufficient_closure(x).unwrap();
            prop_assert!(x.is_subset_of(hull));
            prop_assert!(sys.is_self_sufficient(hull).unwrap());
            prop_assert_eq!(sys.predimension(hull) as usize, sys.dimension(x).unwrap());
            prop_assert_eq!(ss, hull == x);
            if ss {
                prop_assert!(sys.restriction_commutes_check(x).unwrap());
                prop_assert!(self_sufficient_gap_check(&sys, x).unwrap().violations.is_empty());
            }
        }
    }

    #[test]
    fn class_membership_matches_transversal(sys in system()) {
        prop_assert_eq!(sys.is_in_class_c(), sys.find_transversal().is_some());
        let rep = sys.in_class_c();
        if let Some(v) = rep.violator {
            prop_assert!(sys.predimension(v) < 0);
        }
    }

    #[test]
    fn induced_matroids_are_flat_and_round_trip(sys in class_system()) {
        let m = sys.induced_matroid().unwrap();
        prop_assert!(is_flat_geometry(&m).verdict);
        let p = synthesize_presentation(&m).unwrap().unwrap();
        prop_assert_eq!(&p.system.induced_matroid().unwrap(), &m);
        prop_assert!(claim_checks(&m, &p).all_pass());
        prop_assert!(beta_correspondence_check(&sys).unwrap().holds());
        prop_assert!(beta_correspondence_check(&p.system).unwrap().holds());
    }

    #[test]
    fn gammoid_views_agree(sys in class_system()) {
        let m = sys.induced_matroid().unwrap();
        prop_assert!(cotransversal_check(&sys).unwrap().holds());
        prop_assert_eq!(transversal_matroid(&sys).unwrap().dual(), m.clone());
        prop_assert_eq!(strict_gammoid(&system_to_digraph(&sys).unwrap()).unwrap(), m);
    }

    #[test]
    fn flatness_matches_transversal_existence(m in matroid()) {
        let flat = is_flat_geometry(&m).verdict;
        prop_assert_eq!(flat, alpha_transversal(&m).is_some());
        prop_assert_eq!(flat, synthesize_presentation(&m).unwrap().is_some());
    }

    #[test]
    fn bridge_and_closed_identity(m in matroid()) {
        let table = AlphaTable::new(&m);
        for (x, a) in table.unions() {
            if m.rank(x) >= 2 {
                let b = alpha_delta_bridge_check(&m, x).unwrap();
                prop_assert!(b.holds);
                prop_assert_eq!(b.alpha, a);
            }
            if m.is_closed(x) && m.rank(x) >= 2 {
                prop_assert_eq!(closed_family_delta(&m, x).unwrap(), 0);
            }
        }
    }

    #[test]
    fn duality_and_minors(m in matroid(), pick in any::<u32>()) {
        let d = m.dual();
        prop_assert_eq!(&d.dual(), &m);
        let total = m.total_rank();
        for x in m.full().subsets() {
            let want = x.len() + m.rank(m.full() - x) - total;
            prop_assert_eq!(d.rank(x), want);
        }
        let b = Subset(pick) & m.full();
        let con = m.contract(b).unwrap();
        let del = m.restrict(m.full() - b).unwrap();
        let rest = m.full() - b;
        for y in Subset::full(rest.len()).subsets() {
            let x = y.expand(rest);
            prop_assert_eq!(con.rank(y), m.rank(x | b) - m.rank(b));
            prop_assert_eq!(del.rank(y), m.rank(x));
        }
    }

    #[test]
    fn relative_presentations_anchor(m in matroid(), pick in any::<u32>()) {
        prop_assume!(is_flat_geometry(&m).verdict);
        let c = Subset(pick) & m.full();
        if let Some(p) = synthesize_relative(&m, c).unwrap() {
            prop_assert!(p.system.is_self_sufficient(c).unwrap());
            prop_assert_eq!(p.system.induced_matroid().unwrap(), m.clone());
        }
        // the empty anchor never obstructs
        prop_assert!(synthesize_relative(&m, Subset::EMPTY).unwrap().is_some());
    }
}
