//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use burnside_core::{
    artin_exponent, enumerate_subgroups, indicator_vector, verify_main_theorem, BurnsideRing, FamilySpec, FiniteGroup,
    GhostVector, GroupSpec, DEFAULT_LATTICE_CAP,
};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 0x5eed_b0b5;
const RANDOM_VECTORS: usize = 1000;

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn ea_exponent(g: &FiniteGroup) -> u64 {
    let l = enumerate_subgroups(g).unwrap();
    let ring = BurnsideRing::new(&l);
    let r = artin_exponent(&ring, FamilySpec::ElementaryAbelian);
    assert!(r.routes_agree(), "membership routes disagree on {}", g.name());
    r.exponent
}

/// Runs `check` over `cases`, collecting the names of mismatches.
fn expect_all<T>(cases: &[T], check: impl Fn(&T) -> (String, bool)) -> Outcome {
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for c in cases {
        let (label, ok) = check(c);
        if !ok {
            bad.push(label.clone());
        }
        seen.push(label);
    }
    if bad.is_empty() {
        Ok(seen.join(" "))
    } else {
        Err(format!("mismatch: {}", bad.join(" ")))
    }
}

fn cyclic_formula() -> Outcome {
    let mut cases = Vec::new();
    for p in [2usize, 3, 5] {
        let mut n = 1;
        while p.pow(n) <= 64 {
            cases.push((p, n));
            n += 1;
        }
    }
    expect_all(&cases, |&(p, n)| {
        let e = ea_exponent(&group(&GroupSpec::Cyclic { p, n }));
        let want = p.pow(n - 1) as u64;
        (format!("C{}={e}", p.pow(n)), e == want)
    })
}

fn elementary_abelian() -> Outcome {
    let cases = [
        (2, 1),
        (2, 2),
        (2, 3),
        (2, 4),
        (2, 5),
        (3, 1),
        (3, 2),
        (3, 3),
        (5, 1),
        (5, 2),
    ];
    expect_all(&cases, |&(p, k)| {
        let e = ea_exponent(&group(&GroupSpec::ElementaryAbelian { p, k }));
        (format!("EA({p},{k})={e}"), e == 1)
    })
}

fn exceptional_two_groups() -> Outcome {
    let cases = [
        GroupSpec::Quaternion(8),
        GroupSpec::Quaternion(16),
        GroupSpec::Dihedral(8),
        GroupSpec::Dihedral(16),
    ];
    expect_all(&cases, |s| {
        let e = ea_exponent(&group(s));
        (format!("{s}={e} (want 2)"), e == 2)
    })
}

fn semidihedral_verdict() -> Outcome {
    let report = verify_main_theorem(16, DEFAULT_LATTICE_CAP).map_err(|e| e.to_string())?;
    let row = report
        .rows
        .iter()
        .find(|r| r.group == GroupSpec::Semidihedral(16).to_string())
        .ok_or("SD16 missing from the report")?;
    let verdict = if row.agree { "agree" } else { "disagree" };
    let recorded = row.closed_form == 4 && row.agree == (row.brute_force == 4 && row.routes_agree);
    let detail = format!(
        "SD16 brute={} dress={:?} claimed=4 verdict={verdict}",
        row.brute_force, row.dress
    );
    if row.routes_agree && row.dress == Some(row.brute_force) && recorded {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn generic_nonabelian() -> Outcome {
    let cases = [
        (GroupSpec::ModularMaximalCyclic(16), 8),
        (GroupSpec::ExtraspecialPlus(3), 9),
        (GroupSpec::ExtraspecialMinus(3), 9),
    ];
    expect_all(&cases, |(s, want)| {
        let e = ea_exponent(&group(s));
        (format!("{s}={e} (want {want})"), e == *want)
    })
}

/// `|G : Ū|` where `Ū` is counted directly as the solutions of `x^p = 1`.
fn index_of_p_torsion(g: &FiniteGroup) -> u64 {
    let (p, _) = g.prime_power_order().expect("p-group");
    let torsion = g
        .elements()
        .filter(|&x| g.pow(x, p) == burnside_core::ElementId::IDENTITY)
        .count();
    (g.order() / torsion) as u64
}

fn abelian_formula() -> Outcome {
    let groups: Vec<FiniteGroup> = catalog_up_to(32)
        .into_iter()
        .filter(|g| g.is_abelian() && g.order() > 1)
        .collect();
    expect_all(&groups, |g| {
        let e = ea_exponent(g);
        (format!("{}={e}", g.name()), e == index_of_p_torsion(g))
    })
}

fn random_vectors(rank: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
    (0..RANDOM_VECTORS)
        .map(|_| (0..rank).map(|_| rng.random_range(-5..=5)).collect())
        .collect()
}

/// Calls `check` on every random vector for every catalog group of order at
/// most 16, counting how many vectors fail it.
fn over_random_vectors(check: impl Fn(&BurnsideRing<'_>, &GhostVector) -> (bool, bool)) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut failures, mut members, mut total) = (0usize, 0usize, 0usize);
    let groups = catalog_up_to(16);
    for g in &groups {
        let l = enumerate_subgroups(g).unwrap();
        let ring = BurnsideRing::new(&l);
        for v in random_vectors(ring.rank(), &mut rng) {
            let x = ring.ghost_vector(v).unwrap();
            let (ok, member) = check(&ring, &x);
            failures += usize::from(!ok);
            members += usize::from(member);
            total += 1;
        }
    }
    let detail = format!(
        "{} groups, {total} vectors, {members} members, {failures} failures",
        groups.len()
    );
    if failures == 0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn oracle_equivalence() -> Outcome {
    over_random_vectors(|ring, x| {
        let dress = ring.dress_membership(x).unwrap().holds;
        let marks = ring.marks_membership(x).unwrap().integral;
        (dress == marks, dress)
    })
}

fn necessity_chain() -> Outcome {
    over_random_vectors(|ring, x| {
        let dress = ring.dress_membership(x).unwrap().holds;
        (!dress || ring.cfb_check(x).unwrap(), dress)
    })
}

fn order_annihilates_ghost_ring() -> Outcome {
    let groups = catalog_up_to(32);
    let out = expect_all(&groups, |g| {
        let l = enumerate_subgroups(g).unwrap();
        let ring = BurnsideRing::new(&l);
        let lcm = (0..ring.rank())
            .map(|i| ring.minimal_multiplier(&ring.unit_vector(i)).unwrap())
            .fold(1, num_integer::lcm);
        (g.name().to_string(), lcm == g.order() as u64)
    });
    out.map(|_| format!("{} groups", groups.len()))
}

fn lattice_oracle() -> Outcome {
    let groups: Vec<FiniteGroup> = catalog_up_to(16).into_iter().chain(non_p_groups()).collect();
    let out = expect_all(&groups, |g| {
        let lattice = enumerate_subgroups(g).unwrap();
        let expected = oracle_subgroups(g);
        let mut got: Vec<Vec<_>> = lattice.all_subgroups().iter().map(|s| s.elements().to_vec()).collect();
        got.sort();
        let mut got_classes: Vec<Vec<Vec<_>>> = lattice
            .classes()
            .iter()
            .map(|c| c.members.iter().map(|s| s.elements().to_vec()).collect())
            .collect();
        got_classes.sort();
        let ok = got == expected && got_classes == oracle_classes(g, &expected);
        (g.name().to_string(), ok)
    });
    out.map(|_| format!("{} groups", groups.len()))
}

fn scaled_indicator_membership() -> Outcome {
    let groups: Vec<FiniteGroup> = catalog_up_to(64).into_iter().filter(|g| g.order() > 1).collect();
    let out = expect_all(&groups, |g| {
        let l = enumerate_subgroups(g).unwrap();
        let ring = BurnsideRing::new(&l);
        let b = indicator_vector(&ring, FamilySpec::ElementaryAbelian).scaled(g.order() as i64);
        let member = ring.dress_membership(&b).unwrap().holds && ring.marks_membership(&b).unwrap().integral;
        let e = artin_exponent(&ring, FamilySpec::ElementaryAbelian).exponent;
        (g.name().to_string(), member && (g.order() as u64).is_multiple_of(e))
    });
    out.map(|_| format!("{} groups", groups.len()))
}

fn criteria() -> Vec<Criterion> {
    let secs = |s| Some(Duration::from_secs(s));
    vec![
        Criterion {
            id: 1,
            name: "cyclic formula",
            limit: secs(5),
            run: cyclic_formula,
        },
        Criterion {
            id: 2,
            name: "elementary abelian",
            limit: secs(60),
            run: elementary_abelian,
        },
        Criterion {
            id: 3,
            name: "exceptional 2-groups",
            limit: secs(10),
            run: exceptional_two_groups,
        },
        Criterion {
            id: 4,
            name: "semidihedral adjudication",
            limit: None,
            run: semidihedral_verdict,
        },
        Criterion {
            id: 5,
            name: "generic nonabelian",
            limit: secs(60),
            run: generic_nonabelian,
        },
        Criterion {
            id: 6,
            name: "abelian formula",
            limit: secs(60),
            run: abelian_formula,
        },
        Criterion {
            id: 7,
            name: "oracle equivalence",
            limit: secs(60),
            run: oracle_equivalence,
        },
        Criterion {
            id: 8,
            name: "order annihilates ghost ring",
            limit: secs(120),
            run: order_annihilates_ghost_ring,
        },
        Criterion {
            id: 9,
            name: "necessity chain",
            limit: None,
            run: necessity_chain,
        },
        Criterion {
            id: 10,
            name: "lattice oracle",
            limit: None,
            run: lattice_oracle,
        },
        Criterion {
            id: 11,
            name: "scaled indicator membership",
            limit: None,
            run: scaled_indicator_membership,
        },
    ]
}

fn main() -> ExitCode {
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for c in criteria() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(d), Some(limit)) if elapsed > limit => Err(format!("{d}; over time limit {}s", limit.as_secs())),
            (o, _) => o,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failed += usize::from(outcome.is_err());
        println!(
            "[{tag}] {:>2} {}: {detail} ({:.2}s)",
            c.id,
            c.name,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria().len() - failed,
        criteria().len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
