use predim::amalgam::{free_amalgam, zeta_table, AmalgamResult};
use predim::corpus::amalgam_instances;
use predim::extension::{extend, modular_cuts};
use predim::synthesis::synthesize_relative;
use predim::Matroid;

/// Every matroid on the amalgam's ground set whose restrictions to both
/// factors are the factor pregeometries, built by single-element extensions
/// of the first factor.
fn common_extensions(r: &AmalgamResult) -> Vec<Matroid> {
    let m1 = r.left_system.induced_matroid().unwrap();
    let m2 = r.right_system.induced_matroid().unwrap();
    let ground = r.merged.ground();
    let extra = ground.labels(r.right - r.left);
    let mut layer = vec![m1];
    for label in &extra {
        let mut next = Vec::new();
        for m in &layer {
            let lattice = m.flats();
            for cut in modular_cuts(m, &lattice, usize::MAX).cuts {
                let e = extend(m, &lattice, &cut, label).unwrap();
                // the part of the second factor seen so far must already agree
                let seen = e
                    .ground()
                    .subset(
                        m2.ground()
                            .labels(m2.full())
                            .into_iter()
                            .filter(|l| e.ground().index_of(l).is_some()),
                    )
                    .unwrap();
                let here = e.restrict(seen).unwrap();
                let there = m2.restrict(m2.ground().embed(here.ground()).unwrap()).unwrap();
                if here == there {
                    next.push(e);
                }
            }
        }
        layer = next;
    }
    layer
}

#[test]
fn zeta_is_the_amalgam_dimension_and_an_upper_bound() {
    let instances = amalgam_instances(5, 40, 6);
    assert_eq!(instances.len(), 40);
    let mut compared = 0;
    for r in &instances {
        let zeta = zeta_table(r).unwrap();
        let d = r.merged.dimension_table().unwrap();
        assert!(zeta.iter().zip(&d).all(|(&z, &d)| z == d as i32));
        for c in common_extensions(r) {
            compared += 1;
            for x in r.merged.full().subsets() {
                assert!(c.rank(x) as i32 <= zeta[x.index()]);
            }
        }
    }
    assert!(compared >= instances.len());
}

#[test]
fn amalgam_factors_are_self_sufficient() {
    for r in amalgam_instances(9, 60, 8) {
        assert!(r.merged.is_in_class_c());
        assert!(r.merged.is_self_sufficient(r.left).unwrap());
        assert!(r.merged.is_self_sufficient(r.right).unwrap());
        assert_eq!(r.left & r.right, r.base);
        let m = r.merged.induced_matroid().unwrap();
        assert_eq!(
            m.restrict(r.left).unwrap(),
            r.left_system.induced_matroid().unwrap()
        );
    }
}

/// Re-presents both factors with the base anchored; when the new
/// presentations agree on the base, the amalgam pregeometry is unchanged.
#[test]
fn amalgam_pregeometry_ignores_presentations() {
    let mut compared = 0;
    for r in amalgam_instances(13, 60, 7) {
        let base_labels = r.merged.ground().labels(r.base);
        let re_present = |sys: &predim::SetSystem| {
            let m = sys.induced_matroid().unwrap();
            let base = m.ground().subset(&base_labels).unwrap();
            synthesize_relative(&m, base).unwrap().map(|p| p.system)
        };
        let (Some(p1), Some(p2)) = (re_present(&r.left_system), re_present(&r.right_system)) else {
            continue;
        };
        let Ok(other) = free_amalgam(&p1, &p2, &base_labels) else {
            continue;
        };
        compared += 1;
        assert_eq!(
            other.merged.induced_matroid().unwrap(),
            r.merged.induced_matroid().unwrap()
        );
        assert_eq!(other.merged.ground(), r.merged.ground());
    }
    assert!(compared >= 20, "only {compared} instances compared");
}
