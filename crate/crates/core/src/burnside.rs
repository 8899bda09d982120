//! Table of marks, ghost vectors and membership in the Burnside ring.
//!
//! A ghost vector assigns one integer to each conjugacy class of
//! subgroups. It lies in the image of the Burnside ring exactly when it
//! satisfies the Dress congruences; equivalently, when solving the
//! triangular marks system yields integer coefficients. Both deciders are
//! implemented here and must always agree.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::group::ElementId;
use crate::lattice::{ElementSet, LatticeId, SubgroupLattice};

/// An element of the ghost ring, one value per subgroup class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GhostVector {
    lattice: LatticeId,
    values: Vec<i64>,
}

impl GhostVector {
    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn lattice_id(&self) -> LatticeId {
        self.lattice
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn scaled(&self, factor: i64) -> GhostVector {
        GhostVector {
            lattice: self.lattice,
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }
}

/// Integer combination of the transitive G-sets `[G/U]`, one coefficient per class.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BurnsideElement {
    pub coefficients: Vec<i64>,
}

/// `entries[i][j]` is the number of fixed points of class `i` on `G/U_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableOfMarks {
    size: usize,
    entries: Vec<u64>,
}

impl TableOfMarks {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.size + j]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u64]> {
        self.entries.chunks(self.size)
    }
}

/// One Dress congruence `Σ_{vU ∈ V/U} x(<v, U>) ≡ 0 (mod (V:U))`, with the
/// coset sum already collected into multiplicities per class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    pub u_class: usize,
    pub v_class: usize,
    /// Positions of U and V in the lattice's subgroup list.
    pub u_subgroup: usize,
    pub v_subgroup: usize,
    pub index: u64,
    /// `(class, number of cosets vU with <v, U> in that class)`.
    pub terms: Vec<(usize, u64)>,
}

impl Congruence {
    pub fn coset_sum(&self, x: &[i64]) -> i128 {
        self.terms.iter().map(|&(c, n)| x[c] as i128 * n as i128).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub u_class: usize,
    pub v_class: usize,
    pub index: u64,
    pub sum: i128,
    pub residue: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CongruenceCertificate {
    pub holds: bool,
    pub violations: Vec<Violation>,
}

/// Exact solution of `M c = x` for the table of marks `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarksSolution {
    pub integral: bool,
    pub coefficients: Vec<BigRational>,
}

/// A lattice together with its table of marks and (lazily) its Dress
/// congruence system.
pub struct BurnsideRing<'a> {
    lattice: &'a SubgroupLattice,
    marks: TableOfMarks,
    /// Nonzero strictly-upper entries of each row as `(column, mark)`.
    upper: Vec<Vec<(usize, u64)>>,
    congruences: OnceLock<Vec<Congruence>>,
}

impl<'a> BurnsideRing<'a> {
    pub fn new(lattice: &'a SubgroupLattice) -> Self {
        let marks = table_of_marks(lattice);
        let upper = (0..marks.size())
            .map(|i| {
                (i + 1..marks.size())
                    .filter_map(|j| Some((j, marks.get(i, j))).filter(|&(_, m)| m != 0))
                    .collect()
            })
            .collect();
        Self {
            lattice,
            marks,
            upper,
            congruences: OnceLock::new(),
        }
    }

    pub fn lattice(&self) -> &'a SubgroupLattice {
        self.lattice
    }

    pub fn marks(&self) -> &TableOfMarks {
        &self.marks
    }

    pub fn rank(&self) -> usize {
        self.marks.size()
    }

    pub fn ghost_vector(&self, values: Vec<i64>) -> Result<GhostVector> {
        if values.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: values.len(),
            });
        }
        Ok(GhostVector {
            lattice: self.lattice.id(),
            values,
        })
    }

    pub fn unit_vector(&self, class: usize) -> GhostVector {
        let mut values = vec![0; self.rank()];
        values[class] = 1;
        GhostVector {
            lattice: self.lattice.id(),
            values,
        }
    }

    fn check(&self, x: &GhostVector) -> Result<()> {
        if x.lattice != self.lattice.id() {
            return Err(Error::ForeignVector);
        }
        if x.values.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: x.values.len(),
            });
        }
        Ok(())
    }

    /// Marks of a Burnside ring element: `values[i] = Σ_j M[i][j] c[j]`.
    pub fn ghost_of(&self, x: &BurnsideElement) -> Result<GhostVector> {
        if x.coefficients.len() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: x.coefficients.len(),
            });
        }
        let values = self
            .marks
            .rows()
            .map(|row| row.iter().zip(&x.coefficients).map(|(&m, &c)| m as i64 * c).sum())
            .collect();
        Ok(GhostVector {
            lattice: self.lattice.id(),
            values,
        })
    }

    /// The Dress congruences, one per pair `U ⊴ V` with `(V:U)` a prime
    /// power greater than one, up to simultaneous conjugation.
    pub fn congruences(&self) -> &[Congruence] {
        self.congruences.get_or_init(|| dress_congruences(self.lattice))
    }

    /// Decides membership by checking every Dress congruence.
    pub fn dress_membership(&self, x: &GhostVector) -> Result<CongruenceCertificate> {
        self.check(x)?;
        let violations: Vec<Violation> = self
            .congruences()
            .iter()
            .filter_map(|c| violation(c, &x.values))
            .collect();
        Ok(CongruenceCertificate {
            holds: violations.is_empty(),
            violations,
        })
    }

    /// First violated congruence in canonical pair order, if any.
    pub fn first_violation(&self, x: &GhostVector) -> Result<Option<Violation>> {
        self.check(x)?;
        Ok(self.congruences().iter().find_map(|c| violation(c, &x.values)))
    }

    /// Decides membership by solving the triangular marks system over Q.
    pub fn marks_membership(&self, x: &GhostVector) -> Result<MarksSolution> {
        self.check(x)?;
        let n = self.rank();
        let mut c = vec![BigRational::zero(); n];
        for j in (0..n).rev() {
            let mut rhs = BigRational::from_integer(BigInt::from(x.values[j]));
            for &(k, m) in &self.upper[j] {
                if !c[k].is_zero() {
                    rhs -= &c[k] * BigInt::from(m);
                }
            }
            c[j] = rhs / BigInt::from(self.marks.get(j, j));
        }
        Ok(MarksSolution {
            integral: c.iter().all(|q| q.is_integer()),
            coefficients: c,
        })
    }

    /// Cauchy–Frobenius–Burnside check: `Σ_{g ∈ G} x(<g>) ≡ 0 (mod |G|)`.
    pub fn cfb_check(&self, x: &GhostVector) -> Result<bool> {
        self.check(x)?;
        let group = self.lattice.group();
        let sum: i128 = group
            .elements()
            .map(|g| x.values[self.lattice.class_of_cyclic(g)] as i128)
            .sum();
        Ok(sum.rem_euclid(group.order() as i128) == 0)
    }

    /// Least `n >= 1` with `n x` in the Burnside ring: the lcm of the
    /// denominators of the marks coefficients.
    pub fn minimal_multiplier(&self, x: &GhostVector) -> Result<u64> {
        if x.is_zero() {
            self.check(x)?;
            return Err(Error::ZeroVector);
        }
        let solution = self.marks_membership(x)?;
        let lcm = solution
            .coefficients
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        Ok(u64::try_from(lcm.abs()).expect("multiplier divides the group order"))
    }

    /// Same quantity as [`Self::minimal_multiplier`], found by trying
    /// `n = 1, 2, ..., |G|` against the Dress congruences.
    pub fn minimal_multiplier_by_dress(&self, x: &GhostVector) -> Result<Option<u64>> {
        if x.is_zero() {
            self.check(x)?;
            return Err(Error::ZeroVector);
        }
        let order = self.lattice.group().order() as i64;
        for n in 1..=order {
            if self.first_violation(&x.scaled(n))?.is_none() {
                return Ok(Some(n as u64));
            }
        }
        Ok(None)
    }

    pub fn mark(&self, i: usize, j: usize) -> u64 {
        self.marks.get(i, j)
    }
}

fn violation(c: &Congruence, x: &[i64]) -> Option<Violation> {
    let sum = c.coset_sum(x);
    let residue = sum.rem_euclid(c.index as i128) as u64;
    (residue != 0).then_some(Violation {
        u_class: c.u_class,
        v_class: c.v_class,
        index: c.index,
        sum,
        residue,
    })
}

/// Number of cosets `g U_j` fixed by the representative of class `i`,
/// i.e. with `U_i ⊆ g U_j g⁻¹`. Counted directly over a transversal.
pub fn mark(lattice: &SubgroupLattice, i: usize, j: usize) -> u64 {
    let transversal = left_transversal(lattice, lattice.representative_index(j));
    mark_with_transversal(lattice, i, j, &transversal)
}

fn left_transversal(lattice: &SubgroupLattice, subgroup: usize) -> Vec<ElementId> {
    let group = lattice.group();
    let members = lattice.all_subgroups()[subgroup].elements();
    let mut covered = ElementSet::empty(group.order());
    let mut reps = Vec::new();
    for g in group.elements() {
        if covered.contains(g) {
            continue;
        }
        reps.push(g);
        for &u in members {
            covered.insert(group.mul(g, u));
        }
    }
    reps
}

fn mark_with_transversal(lattice: &SubgroupLattice, i: usize, j: usize, transversal: &[ElementId]) -> u64 {
    let (ci, cj) = (lattice.class(i), lattice.class(j));
    if cj.order % ci.order != 0 {
        return 0;
    }
    let u_idx = lattice.representative_index(i);
    let u_set = lattice.set(u_idx);
    // cheap necessary condition: U_i lies in some conjugate of U_j
    if !lattice.member_indices(j).any(|v| u_set.is_subset(lattice.set(v))) {
        return 0;
    }
    let group = lattice.group();
    let v_set = lattice.set(lattice.representative_index(j));
    let gens = lattice.subgroup_generators(u_idx);
    // gU_j is fixed by U_i iff g⁻¹ s g ∈ U_j for every generator s of U_i
    transversal
        .iter()
        .filter(|&&g| {
            let g_inv = group.inv(g);
            gens.iter().all(|&s| v_set.contains(group.conjugate(g_inv, s)))
        })
        .count() as u64
}

/// Full table of marks in canonical class order. Rows are computed in parallel.
pub fn table_of_marks(lattice: &SubgroupLattice) -> TableOfMarks {
    let size = lattice.num_classes();
    let transversals: Vec<Vec<ElementId>> = (0..size)
        .into_par_iter()
        .map(|j| left_transversal(lattice, lattice.representative_index(j)))
        .collect();
    let entries = (0..size)
        .into_par_iter()
        .flat_map_iter(|i| {
            let transversals = &transversals;
            (0..size).map(move |j| {
                if i > j {
                    0
                } else {
                    mark_with_transversal(lattice, i, j, &transversals[j])
                }
            })
        })
        .collect();
    TableOfMarks { size, entries }
}

/// Builds the Dress congruence system for `lattice`.
///
/// For each class representative V (ascending class order) and each
/// normal subgroup U of V with prime-power index > 1, taken once per
/// N_G(V)-orbit in ascending subgroup order, the coset sum over V/U is
/// collected into per-class multiplicities.
pub fn dress_congruences(lattice: &SubgroupLattice) -> Vec<Congruence> {
    (0..lattice.num_classes())
        .into_par_iter()
        .flat_map_iter(|v_class| congruences_below(lattice, v_class))
        .collect()
}

fn congruences_below(lattice: &SubgroupLattice, v_class: usize) -> Vec<Congruence> {
    let group = lattice.group();
    let v_idx = lattice.representative_index(v_class);
    let v_set = lattice.set(v_idx);
    let v_gens = lattice.subgroup_generators(v_idx);
    let v_order = lattice.class(v_class).order;
    let normalizer = &lattice.class(v_class).normalizer;
    let v_elements = lattice.all_subgroups()[v_idx].elements();

    let mut seen = vec![false; lattice.all_subgroups().len()];
    let mut out = Vec::new();
    for u_idx in 0..lattice.all_subgroups().len() {
        let u_order = lattice.all_subgroups()[u_idx].order();
        if seen[u_idx]
            || u_order >= v_order
            || !v_order.is_multiple_of(u_order)
            || prime_power(v_order / u_order).is_none()
        {
            continue;
        }
        let u_set = lattice.set(u_idx);
        if !u_set.is_subset(v_set) {
            continue;
        }
        let u_gens = lattice.subgroup_generators(u_idx);
        let normal = v_gens
            .iter()
            .all(|&v| u_gens.iter().all(|&u| u_set.contains(group.conjugate(v, u))));
        if !normal {
            continue;
        }
        for &n in normalizer.elements() {
            let mut image = ElementSet::empty(group.order());
            for u in u_set.iter() {
                image.insert(group.conjugate(n, u));
            }
            if let Some(t) = lattice.lookup_set(&image) {
                seen[t] = true;
            }
        }

        let mut covered = ElementSet::empty(group.order());
        let mut terms: BTreeMap<usize, u64> = BTreeMap::new();
        for &v in v_elements {
            if covered.contains(v) {
                continue;
            }
            for u in u_set.iter() {
                covered.insert(group.mul(v, u));
            }
            // <v, U> is the union of the cosets v^k U since v normalizes U
            let mut generated = u_set.clone();
            let mut x = v;
            while !u_set.contains(x) {
                for u in u_set.iter() {
                    generated.insert(group.mul(x, u));
                }
                x = group.mul(x, v);
            }
            let class = lattice.class_of_subgroup(lattice.lookup_set(&generated).expect("subgroup is enumerated"));
            *terms.entry(class).or_default() += 1;
        }
        out.push(Congruence {
            u_class: lattice.class_of_subgroup(u_idx),
            v_class,
            u_subgroup: u_idx,
            v_subgroup: v_idx,
            index: (v_order / u_order) as u64,
            terms: terms.into_iter().collect(),
        });
    }
    out
}
