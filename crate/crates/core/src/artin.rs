//! Artin exponents relative to a subgroup family, closed-form formulas for
//! p-groups, and the brute-force versus closed-form comparison harness.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::divisors;
use crate::burnside::{BurnsideRing, GhostVector, Violation};
use crate::catalog::{self, classify_maximal_cyclic_2group, GroupSpec, MaxCyclicType};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::lattice::{maximal_elementary_abelian, FamilySpec, SubgroupLattice};

/// Which membership decider produced a result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MembershipRoute {
    /// Exact rational solve of the marks system.
    Marks,
    /// Dress congruences.
    Dress,
}

/// Why `d · b` is not in the Burnside ring for a divisor `d` of the exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorWitness {
    pub divisor: u64,
    pub violation: Violation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentResult {
    pub exponent: u64,
    pub family_classes: BTreeSet<usize>,
    pub method: MembershipRoute,
    /// Least divisor d of |G| with `d · b` passing every Dress congruence.
    pub dress_exponent: Option<u64>,
    pub certificate: Vec<DivisorWitness>,
}

impl ExponentResult {
    pub fn routes_agree(&self) -> bool {
        self.dress_exponent == Some(self.exponent)
    }
}

/// Indicator vector of `family`: 1 on member classes, 0 elsewhere.
pub fn indicator_vector(ring: &BurnsideRing<'_>, family: FamilySpec) -> GhostVector {
    let values = ring
        .lattice()
        .classes()
        .iter()
        .map(|c| i64::from(c.in_family(family)))
        .collect();
    ring.ghost_vector(values).expect("one value per class")
}

/// The least `n` with `n · b` in the Burnside ring, computed from the marks
/// coefficients and confirmed by an ascending divisor search with the
/// Dress congruences.
pub fn artin_exponent(ring: &BurnsideRing<'_>, family: FamilySpec) -> ExponentResult {
    let b = indicator_vector(ring, family);
    let family_classes = ring.lattice().select_family(family);
    let exponent = if b.is_zero() {
        1
    } else {
        ring.minimal_multiplier(&b)
            .expect("indicator is nonzero and indexed by this lattice")
    };

    let mut dress_exponent = None;
    let mut failures = Vec::new();
    for d in divisors(ring.lattice().group().order()) {
        let first = ring.first_violation(&b.scaled(d as i64)).expect("same lattice");
        match first {
            None => {
                dress_exponent = Some(d as u64);
                break;
            }
            Some(v) => failures.push(DivisorWitness {
                divisor: d as u64,
                violation: v,
            }),
        }
    }
    let certificate = failures.into_iter().filter(|w| exponent % w.divisor == 0).collect();

    ExponentResult {
        exponent,
        family_classes,
        method: MembershipRoute::Marks,
        dress_exponent,
        certificate,
    }
}

fn p_group_prime(group: &FiniteGroup) -> Result<Option<usize>> {
    if group.order() == 1 {
        return Ok(None);
    }
    group
        .prime_power_order()
        .map(|(p, _)| Some(p))
        .ok_or_else(|| Error::NotPGroup {
            name: group.name().to_string(),
            order: group.order(),
        })
}

/// Exponent of a cyclic p-group from the congruence system
/// `p^i x_i + Σ_{j>i} (p^j − p^{j−1}) x_j ≡ 0 (mod p^n)` for `i = 0..=n`,
/// evaluated at `x = e · (1, 1, 0, ..., 0)` for increasing `e`.
pub fn cyclic_exponent_via_lemma35(group: &FiniteGroup) -> Result<u64> {
    let Some(p) = p_group_prime(group)? else {
        return Ok(1);
    };
    if !group.is_cyclic() {
        return Err(Error::NotCyclic {
            name: group.name().to_string(),
        });
    }
    let modulus = group.order() as u128;
    let n = group.prime_power_order().unwrap().1;
    let p = p as u128;
    let holds = |e: u128| {
        let x = |j: u32| if j <= 1 { e } else { 0 };
        (0..=n).all(|i| {
            let tail: u128 = (i + 1..=n).map(|j| (p.pow(j) - p.pow(j - 1)) * x(j)).sum();
            (p.pow(i) * x(i) + tail).is_multiple_of(modulus)
        })
    };
    Ok((1..=modulus).find(|&e| holds(e)).expect("e = p^n always works") as u64)
}

/// `|G : Ū|` with `Ū = {g : g^p = 1}`, for abelian p-groups.
pub fn abelian_exponent_via_prop44(group: &FiniteGroup) -> Result<u64> {
    p_group_prime(group)?;
    let ubar = maximal_elementary_abelian(group)?;
    Ok((group.order() / ubar.order()) as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedFormCase {
    /// Abelian: `|G : Ū|`.
    Abelian,
    /// Quaternion, dihedral or semidihedral 2-group.
    Exceptional(MaxCyclicType),
    /// Everything else: `|G| / p`.
    Generic,
}

impl ClosedFormCase {
    pub fn label(&self) -> &'static str {
        match self {
            ClosedFormCase::Abelian => "a",
            ClosedFormCase::Exceptional(_) => "b",
            ClosedFormCase::Generic => "c",
        }
    }
}

/// The predicted exponent for the elementary abelian family on a p-group.
pub fn closed_form_exponent(group: &FiniteGroup) -> Result<(u64, ClosedFormCase)> {
    let p = p_group_prime(group)?;
    if group.is_abelian() {
        return Ok((abelian_exponent_via_prop44(group)?, ClosedFormCase::Abelian));
    }
    let p = p.expect("nonabelian groups are nontrivial");
    if p == 2 {
        let kind = classify_maximal_cyclic_2group(group)?;
        match kind {
            MaxCyclicType::QuaternionType | MaxCyclicType::DihedralType => {
                return Ok((2, ClosedFormCase::Exceptional(kind)))
            }
            MaxCyclicType::SemidihedralType => return Ok((4, ClosedFormCase::Exceptional(kind))),
            _ => {}
        }
    }
    Ok(((group.order() / p) as u64, ClosedFormCase::Generic))
}

/// If the exponent for `family` is 1, checks that for every `U ⊴ V` with
/// prime-power index, U is in the family iff V is. Vacuously true otherwise.
pub fn check_lemma_41(ring: &BurnsideRing<'_>, family: FamilySpec) -> bool {
    if artin_exponent(ring, family).exponent != 1 {
        return true;
    }
    let lattice = ring.lattice();
    ring.congruences()
        .iter()
        .all(|c| lattice.class(c.u_class).in_family(family) == lattice.class(c.v_class).in_family(family))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremRow {
    pub group: String,
    pub order: usize,
    pub brute_force: u64,
    pub dress: Option<u64>,
    pub closed_form: u64,
    pub case: ClosedFormCase,
    pub routes_agree: bool,
    pub agree: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub rows: Vec<TheoremRow>,
}

impl TheoremReport {
    pub fn disagreements(&self) -> impl Iterator<Item = &TheoremRow> {
        self.rows.iter().filter(|r| !r.agree)
    }

    pub fn all_agree(&self) -> bool {
        self.disagreements().next().is_none()
    }
}

/// Compares brute-force and closed-form exponents for the elementary
/// abelian family on one p-group.
pub fn theorem_row(group: &FiniteGroup, lattice_cap: usize) -> Result<TheoremRow> {
    let (closed_form, case) = closed_form_exponent(group)?;
    let lattice = SubgroupLattice::new(group.clone(), lattice_cap)?;
    let ring = BurnsideRing::new(&lattice);
    let result = artin_exponent(&ring, FamilySpec::ElementaryAbelian);
    let routes_agree = result.routes_agree();
    Ok(TheoremRow {
        group: group.name().to_string(),
        order: group.order(),
        brute_force: result.exponent,
        dress: result.dress_exponent,
        closed_form,
        case,
        routes_agree,
        agree: routes_agree && result.exponent == closed_form,
    })
}

/// Runs [`theorem_row`] over every catalog p-group of order at most
/// `max_order`. Rows come back in catalog order.
pub fn verify_main_theorem(max_order: usize, lattice_cap: usize) -> Result<TheoremReport> {
    let specs: Vec<GroupSpec> = catalog::catalog()
        .into_iter()
        .filter(|s| s.nominal_order().is_some_and(|n| n <= max_order))
        .collect();
    let rows = specs
        .par_iter()
        .map(|spec| {
            let group = catalog::build(spec, crate::group::DEFAULT_ORDER_CAP)?;
            theorem_row(&group, lattice_cap)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TheoremReport { rows })
}
