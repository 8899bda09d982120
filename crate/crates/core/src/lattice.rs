//! Subgroup lattices: every subgroup of a finite group, grouped into
//! conjugacy classes in a canonical order.
//!
//! Classes are sorted by ascending subgroup order, then by descending
//! class size, then lexicographically by the sorted element list of the
//! representative (the lexicographically least member). Class 0 is the
//! trivial subgroup and the last class is the whole group.

use std::cmp::Reverse;
use std::collections::{BTreeSet, HashMap};
use std::hash::{DefaultHasher, Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::arith::prime_power;
use crate::error::{Error, Result};
use crate::group::{ElementId, FiniteGroup, Subgroup};

/// Default cap on the group order for full subgroup enumeration.
pub const DEFAULT_LATTICE_CAP: usize = 256;

/// Subgroup families with a conjugation-invariant membership predicate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    #[default]
    ElementaryAbelian,
    Cyclic,
    AllSubgroups,
}

/// Bitset over the elements of a group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct ElementSet(Box<[u64]>);

impl ElementSet {
    pub(crate) fn empty(order: usize) -> Self {
        Self(vec![0; order.div_ceil(64)].into_boxed_slice())
    }

    pub(crate) fn from_elements(order: usize, elements: &[ElementId]) -> Self {
        let mut s = Self::empty(order);
        for &e in elements {
            s.insert(e);
        }
        s
    }

    #[inline]
    pub(crate) fn insert(&mut self, e: ElementId) -> bool {
        let (w, b) = (e.index() / 64, e.index() % 64);
        let fresh = self.0[w] & (1 << b) == 0;
        self.0[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub(crate) fn contains(&self, e: ElementId) -> bool {
        self.0[e.index() / 64] & (1 << (e.index() % 64)) != 0
    }

    pub(crate) fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            (0..64)
                .filter(move |b| word & (1 << b) != 0)
                .map(move |b| ElementId((w * 64 + b) as u32))
        })
    }

    fn to_subgroup(&self) -> Subgroup {
        Subgroup::from_unsorted(self.iter().collect())
    }
}

/// Opaque identity of a lattice, carried by ghost vectors indexed against it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LatticeId(u64);

/// One conjugacy class of subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClass {
    pub class_index: usize,
    pub representative: Subgroup,
    /// All conjugates, sorted; the representative is the first.
    pub members: Vec<Subgroup>,
    pub order: usize,
    pub normalizer: Subgroup,
    pub is_cyclic: bool,
    pub is_elementary_abelian: bool,
    pub is_normal: bool,
}

impl SubgroupClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn in_family(&self, family: FamilySpec) -> bool {
        match family {
            FamilySpec::ElementaryAbelian => self.is_elementary_abelian,
            FamilySpec::Cyclic => self.is_cyclic,
            FamilySpec::AllSubgroups => true,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    group: FiniteGroup,
    id: LatticeId,
    classes: Vec<SubgroupClass>,
    /// All subgroups, ordered by class and then by position within the class.
    subgroups: Vec<Subgroup>,
    sets: Vec<ElementSet>,
    generators: Vec<Vec<ElementId>>,
    class_of: Vec<usize>,
    lookup: HashMap<ElementSet, usize>,
    /// Subgroup index of `<g>` for every element `g`.
    cyclic_of: Vec<usize>,
}

/// Enumerates all subgroups with the default order cap.
pub fn enumerate_subgroups(group: &FiniteGroup) -> Result<SubgroupLattice> {
    SubgroupLattice::new(group.clone(), DEFAULT_LATTICE_CAP)
}

impl SubgroupLattice {
    /// Enumerates subgroups of `group`: first the cyclic ones, then joins of
    /// already known subgroups with cyclic ones until nothing new appears.
    pub fn new(group: FiniteGroup, cap: usize) -> Result<Self> {
        let order = group.order();
        if order > cap {
            return Err(Error::LatticeCapExceeded { order, cap });
        }

        let mut sets: Vec<ElementSet> = Vec::new();
        let mut gens: Vec<Vec<ElementId>> = Vec::new();
        let mut lookup: HashMap<ElementSet, usize> = HashMap::new();
        let mut cyclic_of = vec![0; order];

        for g in group.elements() {
            let set = cyclic_set(&group, g);
            let idx = *lookup.entry(set.clone()).or_insert_with(|| {
                sets.push(set);
                gens.push(if g == ElementId::IDENTITY { vec![] } else { vec![g] });
                sets.len() - 1
            });
            cyclic_of[g.index()] = idx;
        }
        let cyclic_count = sets.len();
        let cyclic_gens: Vec<ElementId> = (0..cyclic_count)
            .map(|c| gens[c].first().copied().unwrap_or_default())
            .collect();

        let mut head = 0;
        while head < sets.len() {
            for &c in cyclic_gens.iter().skip(1) {
                if sets[head].contains(c) {
                    continue;
                }
                let mut seed = gens[head].clone();
                seed.push(c);
                let joined = closure_set(&group, &seed);
                if !lookup.contains_key(&joined) {
                    lookup.insert(joined.clone(), sets.len());
                    sets.push(joined);
                    gens.push(seed);
                }
            }
            head += 1;
        }

        Ok(Self::classify(group, sets, gens, cyclic_of))
    }

    fn classify(group: FiniteGroup, sets: Vec<ElementSet>, gens: Vec<Vec<ElementId>>, cyclic_of: Vec<usize>) -> Self {
        let order = group.order();
        let lookup: HashMap<ElementSet, usize> = sets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let abelian = group.is_abelian();

        let mut assigned = vec![false; sets.len()];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for s in 0..sets.len() {
            if assigned[s] {
                continue;
            }
            if abelian {
                assigned[s] = true;
                raw.push(vec![s]);
                continue;
            }
            let mut members = vec![s];
            assigned[s] = true;
            for g in group.elements() {
                let mut image = ElementSet::empty(order);
                for u in sets[s].iter() {
                    image.insert(group.conjugate(g, u));
                }
                let t = lookup[&image];
                if !assigned[t] {
                    assigned[t] = true;
                    members.push(t);
                }
            }
            raw.push(members);
        }

        let mut classes: Vec<Vec<(Subgroup, usize)>> = raw
            .into_iter()
            .map(|members| {
                let mut m: Vec<(Subgroup, usize)> = members.into_iter().map(|i| (sets[i].to_subgroup(), i)).collect();
                m.sort();
                m
            })
            .collect();
        classes.sort_by(|a, b| {
            let key = |m: &Vec<(Subgroup, usize)>| (m[0].0.order(), Reverse(m.len()));
            key(a).cmp(&key(b)).then_with(|| a[0].0.cmp(&b[0].0))
        });

        let mut old_to_new = vec![0; sets.len()];
        let mut subgroups = Vec::with_capacity(sets.len());
        let mut new_sets = Vec::with_capacity(sets.len());
        let mut new_gens = Vec::with_capacity(sets.len());
        let mut class_of = Vec::with_capacity(sets.len());
        let mut out = Vec::with_capacity(classes.len());
        for (class_index, members) in classes.into_iter().enumerate() {
            for (sub, old) in &members {
                old_to_new[*old] = subgroups.len();
                subgroups.push(sub.clone());
                new_sets.push(sets[*old].clone());
                new_gens.push(gens[*old].clone());
                class_of.push(class_index);
            }
            let representative = members[0].0.clone();
            let normalizer = if abelian {
                group.whole()
            } else {
                normalizer(&group, &representative)
            };
            out.push(SubgroupClass {
                class_index,
                order: representative.order(),
                is_cyclic: representative.is_cyclic(&group),
                is_elementary_abelian: is_elementary_abelian(&group, &representative),
                is_normal: members.len() == 1,
                members: members.into_iter().map(|(s, _)| s).collect(),
                representative,
                normalizer,
            });
        }
        let lookup = new_sets.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let cyclic_of = cyclic_of.into_iter().map(|i| old_to_new[i]).collect();

        let mut hasher = DefaultHasher::new();
        group.name().hash(&mut hasher);
        for a in group.elements() {
            for b in group.elements() {
                group.mul(a, b).hash(&mut hasher);
            }
        }
        subgroups.hash(&mut hasher);

        Self {
            id: LatticeId(hasher.finish()),
            group,
            classes: out,
            subgroups,
            sets: new_sets,
            generators: new_gens,
            class_of,
            lookup,
            cyclic_of,
        }
    }

    pub fn id(&self) -> LatticeId {
        self.id
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class(&self, index: usize) -> &SubgroupClass {
        &self.classes[index]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn all_subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    /// Class index of the subgroup at position `subgroup` in [`Self::all_subgroups`].
    pub fn class_of_subgroup(&self, subgroup: usize) -> usize {
        self.class_of[subgroup]
    }

    /// Position of `subgroup` in [`Self::all_subgroups`].
    pub fn index_of(&self, subgroup: &Subgroup) -> Option<usize> {
        let set = ElementSet::from_elements(self.group.order(), subgroup.elements());
        self.lookup.get(&set).copied()
    }

    /// Class index of `<g>`.
    pub fn class_of_cyclic(&self, g: ElementId) -> usize {
        self.class_of[self.cyclic_of[g.index()]]
    }

    pub(crate) fn set(&self, subgroup: usize) -> &ElementSet {
        &self.sets[subgroup]
    }

    pub(crate) fn lookup_set(&self, set: &ElementSet) -> Option<usize> {
        self.lookup.get(set).copied()
    }

    /// A generating set of the subgroup at position `subgroup`.
    pub fn subgroup_generators(&self, subgroup: usize) -> &[ElementId] {
        &self.generators[subgroup]
    }

    /// Position in [`Self::all_subgroups`] of the representative of class `class`.
    pub fn representative_index(&self, class: usize) -> usize {
        self.class_of.partition_point(|&c| c < class)
    }

    /// Positions of all members of class `class`.
    pub fn member_indices(&self, class: usize) -> std::ops::Range<usize> {
        let start = self.representative_index(class);
        start..start + self.classes[class].size()
    }

    pub fn select_family(&self, family: FamilySpec) -> BTreeSet<usize> {
        select_family(self, family)
    }
}

/// Class indices whose subgroups belong to `family`.
pub fn select_family(lattice: &SubgroupLattice, family: FamilySpec) -> BTreeSet<usize> {
    lattice
        .classes()
        .iter()
        .filter(|c| c.in_family(family))
        .map(|c| c.class_index)
        .collect()
}

fn cyclic_set(group: &FiniteGroup, g: ElementId) -> ElementSet {
    let mut set = ElementSet::empty(group.order());
    let mut x = ElementId::IDENTITY;
    while set.insert(x) {
        x = group.mul(x, g);
    }
    set
}

fn closure_set(group: &FiniteGroup, seed: &[ElementId]) -> ElementSet {
    let mut set = ElementSet::empty(group.order());
    set.insert(ElementId::IDENTITY);
    let mut queue = vec![ElementId::IDENTITY];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        for &s in seed {
            let y = group.mul(x, s);
            if set.insert(y) {
                queue.push(y);
            }
        }
        head += 1;
    }
    set
}

/// `{g ∈ G : g U g⁻¹ = U}`.
pub fn normalizer(group: &FiniteGroup, subgroup: &Subgroup) -> Subgroup {
    let elements = group
        .elements()
        .filter(|&g| {
            subgroup
                .elements()
                .iter()
                .all(|&u| subgroup.contains(group.conjugate(g, u)))
        })
        .collect();
    Subgroup::from_unsorted(elements)
}

/// True iff `subgroup` is abelian of prime-power order with every
/// non-identity element of order p. The trivial subgroup qualifies.
pub fn is_elementary_abelian(group: &FiniteGroup, subgroup: &Subgroup) -> bool {
    if subgroup.order() == 1 {
        return true;
    }
    let Some((p, _)) = prime_power(subgroup.order()) else {
        return false;
    };
    subgroup.is_abelian(group)
        && subgroup
            .elements()
            .iter()
            .all(|&g| g == ElementId::IDENTITY || group.element_order(g) == p)
}

/// `{g ∈ G : g^p = 1}` for an abelian p-group.
pub fn maximal_elementary_abelian(group: &FiniteGroup) -> Result<Subgroup> {
    if !group.is_abelian() {
        return Err(Error::NotAbelian {
            name: group.name().to_string(),
        });
    }
    if group.order() == 1 {
        return Ok(Subgroup::trivial());
    }
    let (p, _) = group.prime_power_order().ok_or_else(|| Error::NotPGroup {
        name: group.name().to_string(),
        order: group.order(),
    })?;
    let elements = group
        .elements()
        .filter(|&g| group.pow(g, p) == ElementId::IDENTITY)
        .collect();
    Ok(Subgroup::from_unsorted(elements))
}
