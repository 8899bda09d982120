//! Finite groups materialized as multiplication tables.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// Default cap on the number of elements a constructed group may have.
pub const DEFAULT_ORDER_CAP: usize = 1024;

/// Index of an element in a [`FiniteGroup`]. Index 0 is always the identity.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ElementId(pub u32);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite group given by its full Cayley table.
///
/// Elements are numbered in breadth-first order of the closure from the
/// generators, so the identity is element 0 and the numbering is
/// reproducible for a given generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<ElementId>,
}

/// Which group axiom failed an exhaustive check, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    Identity(ElementId),
    Inverse(ElementId),
    Associativity(ElementId, ElementId, ElementId),
}

impl FiniteGroup {
    /// Builds the group generated by `generators` inside some ambient
    /// multiplicative structure described by `identity` and `mul`.
    ///
    /// The ambient operation must be associative with `identity` as a
    /// two-sided unit and every generator must have finite order.
    pub fn from_generators<T, F>(
        name: impl Into<String>,
        identity: T,
        generators: &[T],
        mul: F,
        cap: usize,
    ) -> Result<Self>
    where
        T: Clone + Eq + Hash,
        F: Fn(&T, &T) -> T,
    {
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<T, u32> = HashMap::new();
        index.insert(identity, 0);

        let mut head = 0;
        while head < elements.len() {
            for gen in generators {
                let product = mul(&elements[head], gen);
                if !index.contains_key(&product) {
                    if elements.len() >= cap {
                        return Err(Error::OrderCapExceeded { cap });
                    }
                    index.insert(product.clone(), elements.len() as u32);
                    elements.push(product);
                }
            }
            head += 1;
        }

        let order = elements.len();
        let mut table = Vec::with_capacity(order * order);
        for a in &elements {
            for b in &elements {
                table.push(index[&mul(a, b)]);
            }
        }
        let gens = generators.iter().map(|g| ElementId(index[g])).collect();
        Ok(Self::from_parts(name.into(), order, table, gens))
    }

    /// Wraps an explicit Cayley table. `table[a * order + b]` is the
    /// product `a * b`; element 0 must be the identity. Axioms are checked.
    pub fn from_table(name: impl Into<String>, order: usize, table: Vec<u32>) -> Result<Self> {
        if order == 0 || table.len() != order * order || table.iter().any(|&x| x as usize >= order) {
            return Err(Error::InvalidSpec("malformed multiplication table".into()));
        }
        let generators = (1..order as u32).map(ElementId).collect();
        let group = Self::from_parts(name.into(), order, table, generators);
        match group.check_axioms() {
            Ok(()) => Ok(group),
            Err(v) => Err(Error::InvalidSpec(format!("table violates group axioms: {v:?}"))),
        }
    }

    fn from_parts(name: String, order: usize, table: Vec<u32>, generators: Vec<ElementId>) -> Self {
        let mut inv = vec![0u32; order];
        for a in 0..order {
            if let Some(b) = (0..order).find(|&b| table[a * order + b] == 0) {
                inv[a] = b as u32;
            }
        }
        Self {
            name,
            order,
            table,
            inv,
            generators,
        }
    }

    pub fn trivial() -> Self {
        Self::from_parts("C1".into(), 1, vec![0], Vec::new())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// The generators this group was built from, as element ids.
    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.order as u32).map(ElementId)
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.table[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        ElementId(self.inv[a.index()])
    }

    /// `g x g⁻¹`.
    #[inline]
    pub fn conjugate(&self, g: ElementId, x: ElementId) -> ElementId {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, g: ElementId, mut k: usize) -> ElementId {
        let mut acc = ElementId::IDENTITY;
        let mut base = g;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Smallest `n >= 1` with `g^n = 1`.
    pub fn element_order(&self, g: ElementId) -> usize {
        let mut n = 1;
        let mut x = g;
        while x != ElementId::IDENTITY {
            x = self.mul(x, g);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements().any(|g| self.element_order(g) == self.order)
    }

    /// `Some((p, n))` when the order is `p^n` with `n >= 1`.
    pub fn prime_power_order(&self) -> Option<(usize, u32)> {
        arith::prime_power(self.order)
    }

    /// True for the trivial group and for groups of prime-power order.
    pub fn is_p_group(&self) -> bool {
        self.order == 1 || self.prime_power_order().is_some()
    }

    /// Exhaustive check of identity, inverse and associativity laws.
    pub fn check_axioms(&self) -> std::result::Result<(), AxiomViolation> {
        let id = ElementId::IDENTITY;
        for x in self.elements() {
            if self.mul(id, x) != x || self.mul(x, id) != x {
                return Err(AxiomViolation::Identity(x));
            }
            let y = self.inv(x);
            if self.mul(x, y) != id || self.mul(y, x) != id {
                return Err(AxiomViolation::Inverse(x));
            }
        }
        for x in self.elements() {
            for y in self.elements() {
                let xy = self.mul(x, y);
                for z in self.elements() {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Err(AxiomViolation::Associativity(x, y, z));
                    }
                }
            }
        }
        Ok(())
    }

    /// Smallest subgroup containing every element of `seed`.
    pub fn generated_subgroup(&self, seed: &[ElementId]) -> Subgroup {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut elements = vec![ElementId::IDENTITY];
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head];
            for &s in seed {
                let y = self.mul(x, s);
                if !member[y.index()] {
                    member[y.index()] = true;
                    elements.push(y);
                }
            }
            head += 1;
        }
        Subgroup::from_unsorted(elements)
    }

    /// `g U g⁻¹`.
    pub fn conjugate_subgroup(&self, subgroup: &Subgroup, g: ElementId) -> Subgroup {
        Subgroup::from_unsorted(subgroup.elements().iter().map(|&u| self.conjugate(g, u)).collect())
    }

    /// The whole group as a subgroup of itself.
    pub fn whole(&self) -> Subgroup {
        Subgroup {
            elements: self.elements().collect(),
        }
    }

    /// Direct product; elements are pairs `(a, b)` and the generators are
    /// those of `self` followed by those of `other`.
    pub fn direct_product(&self, other: &FiniteGroup, cap: usize) -> Result<Self> {
        let id = (ElementId::IDENTITY, ElementId::IDENTITY);
        let gens: Vec<_> = self
            .generators
            .iter()
            .map(|&a| (a, ElementId::IDENTITY))
            .chain(other.generators.iter().map(|&b| (ElementId::IDENTITY, b)))
            .collect();
        if self.order.saturating_mul(other.order) > cap {
            return Err(Error::OrderCapExceeded { cap });
        }
        let name = format!("{}x{}", self.name, other.name);
        Self::from_generators(name, id, &gens, |x, y| (self.mul(x.0, y.0), other.mul(x.1, y.1)), cap)
    }
}

/// A subgroup, stored as its sorted element ids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Subgroup {
    elements: Vec<ElementId>,
}

impl Subgroup {
    pub fn trivial() -> Self {
        Self {
            elements: vec![ElementId::IDENTITY],
        }
    }

    pub(crate) fn from_unsorted(mut elements: Vec<ElementId>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        Self { elements }
    }

    /// Validates that `elements` form a subgroup of `group`.
    pub fn new(group: &FiniteGroup, elements: Vec<ElementId>) -> Option<Self> {
        let s = Self::from_unsorted(elements);
        if s.elements.iter().any(|e| e.index() >= group.order()) {
            return None;
        }
        s.is_subgroup_of(group).then_some(s)
    }

    pub fn elements(&self) -> &[ElementId] {
        &self.elements
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: ElementId) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    /// Closure check: identity, products and inverses stay inside.
    pub fn is_subgroup_of(&self, group: &FiniteGroup) -> bool {
        self.contains(ElementId::IDENTITY)
            && self
                .elements
                .iter()
                .all(|&a| self.contains(group.inv(a)) && self.elements.iter().all(|&b| self.contains(group.mul(a, b))))
    }

    pub fn is_abelian(&self, group: &FiniteGroup) -> bool {
        self.elements
            .iter()
            .all(|&a| self.elements.iter().all(|&b| group.mul(a, b) == group.mul(b, a)))
    }

    pub fn is_cyclic(&self, group: &FiniteGroup) -> bool {
        self.elements.iter().any(|&g| group.element_order(g) == self.order())
    }

    pub fn is_normal_in(&self, group: &FiniteGroup) -> bool {
        group
            .generators()
            .iter()
            .all(|&g| self.elements.iter().all(|&u| self.contains(group.conjugate(g, u))))
    }
}
