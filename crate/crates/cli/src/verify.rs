//! `verify-all`: every consistency check that applies to a set system.

use serde_json::{json, Value};

use predim::alpha::{alpha_delta_bridge_check, closed_family_delta, is_flat_geometry, AlphaTable};
use predim::amalgam::{closure_embedding_check, flat_meet_check, independence_failures, weak_canonical_base};
use predim::gammoid::{cotransversal_check, strict_gammoid, system_to_digraph};
use predim::io::{parse_set_system, set_system_json};
use predim::synthesis::{
    beta_correspondence_check, claim_checks, relative_condition_check, self_sufficient_gap_check,
    synthesize_presentation, synthesize_relative,
};
use predim::{Result, SetSystem, Subset};

type Check = fn(&SetSystem) -> Result<bool>;

const CHECKS: &[(&str, Check)] = &[
    ("flat", flat),
    ("round_trip", round_trip),
    ("claims", claims),
    ("beta", beta),
    ("self_sufficiency_routes", ss_routes),
    ("restriction_commutes", restriction_commutes),
    ("gap_monotone", gap_monotone),
    ("independence_criterion", independence_criterion),
    ("independence_under_meet", independence_under_meet),
    ("closure_embedding", closure_embedding),
    ("cotransversal", cotransversal),
    ("digraph_round_trip", digraph_round_trip),
    ("relative", relative),
    ("canonical_bases", canonical_bases),
    ("alpha_delta", alpha_delta),
    ("json_round_trip", json_round_trip),
];

fn self_sufficient_sets(sys: &SetSystem) -> Result<Vec<Subset>> {
    let mut out = Vec::new();
    for x in sys.full().subsets() {
        if sys.is_self_sufficient(x)? {
            out.push(x);
        }
    }
    Ok(out)
}

fn flat(sys: &SetSystem) -> Result<bool> {
    Ok(is_flat_geometry(&sys.induced_matroid()?).verdict)
}

fn round_trip(sys: &SetSystem) -> Result<bool> {
    let m = sys.induced_matroid()?;
    Ok(match synthesize_presentation(&m)? {
        Some(p) => p.system.induced_matroid()? == m,
        None => false,
    })
}

fn claims(sys: &SetSystem) -> Result<bool> {
    let m = sys.induced_matroid()?;
    Ok(synthesize_presentation(&m)?.is_some_and(|p| claim_checks(&m, &p).all_pass()))
}

fn beta(sys: &SetSystem) -> Result<bool> {
    Ok(beta_correspondence_check(sys)?.holds())
}

fn ss_routes(sys: &SetSystem) -> Result<bool> {
    for x in sys.full().subsets() {
        if sys.is_self_sufficient(x)? != sys.is_self_sufficient_via_transversal(x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn restriction_commutes(sys: &SetSystem) -> Result<bool> {
    for b in self_sufficient_sets(sys)? {
        if !sys.restriction_commutes_check(b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn gap_monotone(sys: &SetSystem) -> Result<bool> {
    for c in self_sufficient_sets(sys)? {
        if !self_sufficient_gap_check(sys, c)?.violations.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn independence_criterion(sys: &SetSystem) -> Result<bool> {
    Ok(independence_failures(sys)?.is_empty())
}

fn independence_under_meet(sys: &SetSystem) -> Result<bool> {
    Ok(flat_meet_check(sys)?.failures.is_empty())
}

fn closure_embedding(sys: &SetSystem) -> Result<bool> {
    for c in self_sufficient_sets(sys)? {
        if !closure_embedding_check(sys, c)?.holds() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn cotransversal(sys: &SetSystem) -> Result<bool> {
    Ok(cotransversal_check(sys)?.holds())
}

fn digraph_round_trip(sys: &SetSystem) -> Result<bool> {
    Ok(strict_gammoid(&system_to_digraph(sys)?)? == sys.induced_matroid()?)
}

fn relative(sys: &SetSystem) -> Result<bool> {
    let m = sys.induced_matroid()?;
    for c in m.full().subsets() {
        let cond = relative_condition_check(&m, c)?.holds();
        if cond != synthesize_relative(&m, c)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn canonical_bases(sys: &SetSystem) -> Result<bool> {
    let m = sys.induced_matroid()?;
    let lattice = m.flats();
    for &b in lattice.flats() {
        for a in m.full().subsets().filter(|a| a.len() <= 2) {
            weak_canonical_base(&m, b, a)?;
        }
    }
    Ok(true)
}

fn alpha_delta(sys: &SetSystem) -> Result<bool> {
    let m = sys.induced_matroid()?;
    let table = AlphaTable::new(&m);
    for (x, _) in table.unions() {
        if m.rank(x) < 2 {
            continue;
        }
        if !alpha_delta_bridge_check(&m, x)?.holds {
            return Ok(false);
        }
        if m.is_closed(x) && closed_family_delta(&m, x)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn json_round_trip(sys: &SetSystem) -> Result<bool> {
    Ok(parse_set_system(&set_system_json(sys)?)? == *sys)
}

/// Runs every check on every system in class, spreading the work over
/// `threads` workers. The report lists systems and checks in input order.
pub fn verify_all(systems: &[SetSystem], threads: usize) -> (Value, bool) {
    let jobs: Vec<(usize, usize)> = (0..systems.len())
        .filter(|&i| systems[i].is_in_class_c())
        .flat_map(|i| (0..CHECKS.len()).map(move |j| (i, j)))
        .collect();
    let mut results: Vec<Option<std::result::Result<bool, String>>> = vec![None; jobs.len()];
    std::thread::scope(|scope| {
        let chunks: Vec<_> = results
            .chunks_mut(jobs.len().div_ceil(threads).max(1))
            .zip(jobs.chunks(jobs.len().div_ceil(threads).max(1)))
            .map(|(out, work)| {
                scope.spawn(move || {
                    for (slot, &(i, j)) in out.iter_mut().zip(work) {
                        *slot = Some((CHECKS[j].1)(&systems[i]).map_err(|e| e.to_string()));
                    }
                })
            })
            .collect();
        for c in chunks {
            c.join().expect("check panicked");
        }
    });

    let mut all = true;
    let mut reports = Vec::new();
    for (i, sys) in systems.iter().enumerate() {
        let class = sys.in_class_c();
        // the input system must be in class; screening systems outside it are skipped
        if !class.member {
            if i == 0 {
                all = false;
                reports.push(json!({
                    "system": i,
                    "class": false,
                    "violator": class.violator.map(|v| sys.ground().labels(v)),
                }));
            }
            continue;
        }
        let mut checks = serde_json::Map::new();
        for (k, &(ji, jj)) in jobs.iter().enumerate() {
            if ji != i {
                continue;
            }
            let v = match results[k].as_ref().expect("every job ran") {
                Ok(pass) => {
                    all &= *pass;
                    json!(pass)
                }
                Err(e) => {
                    all = false;
                    json!({ "error": e })
                }
            };
            checks.insert(CHECKS[jj].0.to_string(), v);
        }
        reports.push(json!({ "system": i, "class": true, "checks": checks }));
    }
    (json!({ "passed": all, "systems": reports }), all)
}
