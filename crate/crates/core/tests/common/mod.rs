#![allow(dead_code)]

use std::collections::BTreeSet;

use burnside_core::{
    build, catalog, group_from_perm_generators, ElementId, FiniteGroup, GroupSpec, Permutation, DEFAULT_ORDER_CAP,
};

pub fn group(spec: &GroupSpec) -> FiniteGroup {
    build(spec, DEFAULT_ORDER_CAP).unwrap()
}

/// Catalog groups of order at most `max_order`, built.
pub fn catalog_up_to(max_order: usize) -> Vec<FiniteGroup> {
    catalog()
        .iter()
        .filter(|s| s.nominal_order().unwrap() <= max_order)
        .map(group)
        .collect()
}

pub fn perm_group(name: &str, degree: usize, gens: &[&[&[u32]]]) -> FiniteGroup {
    let perms: Vec<Permutation> = gens
        .iter()
        .map(|cycles| {
            let cycles: Vec<Vec<u32>> = cycles.iter().map(|c| c.to_vec()).collect();
            Permutation::from_cycles(degree, &cycles).unwrap()
        })
        .collect();
    group_from_perm_generators(degree, &perms, DEFAULT_ORDER_CAP)
        .unwrap()
        .with_name(name)
}

pub fn s3() -> FiniteGroup {
    perm_group("S3", 3, &[&[&[0, 1, 2]], &[&[0, 1]]])
}

pub fn a4() -> FiniteGroup {
    perm_group("A4", 4, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]])
}

pub fn s4() -> FiniteGroup {
    perm_group("S4", 4, &[&[&[0, 1, 2, 3]], &[&[0, 1]]])
}

/// Groups outside the p-group catalog: S3, C6, D12-like C2xS3, A4.
pub fn non_p_groups() -> Vec<FiniteGroup> {
    vec![
        s3(),
        group(&GroupSpec::cyclic(6)),
        perm_group("C2xS3", 5, &[&[&[0, 1, 2]], &[&[0, 1]], &[&[3, 4]]]),
        a4(),
    ]
}

/// Every subset containing the identity, of size dividing |G|, that is
/// closed under multiplication. Exponential; only for small groups.
pub fn oracle_subgroups(g: &FiniteGroup) -> Vec<Vec<ElementId>> {
    let n = g.order();
    assert!(n <= 20, "oracle is exponential");
    let others: Vec<ElementId> = g.elements().skip(1).collect();
    let mut found = Vec::new();
    for mask in 0u32..(1 << others.len()) {
        let size = mask.count_ones() as usize + 1;
        if !n.is_multiple_of(size) {
            continue;
        }
        let mut member = vec![false; n];
        member[0] = true;
        let mut elems = vec![ElementId::IDENTITY];
        for (i, &e) in others.iter().enumerate() {
            if mask & (1 << i) != 0 {
                member[e.index()] = true;
                elems.push(e);
            }
        }
        let closed = elems
            .iter()
            .all(|&a| elems.iter().all(|&b| member[g.mul(a, b).index()]));
        if closed {
            elems.sort();
            found.push(elems);
        }
    }
    found.sort();
    found
}

/// Conjugacy classes of the given subgroups by direct conjugation, each
/// class sorted, classes sorted.
pub fn oracle_classes(g: &FiniteGroup, subgroups: &[Vec<ElementId>]) -> Vec<Vec<Vec<ElementId>>> {
    let mut remaining: BTreeSet<Vec<ElementId>> = subgroups.iter().cloned().collect();
    let mut classes = Vec::new();
    while let Some(first) = remaining.iter().next().cloned() {
        let mut class = BTreeSet::new();
        for x in g.elements() {
            let mut image: Vec<_> = first.iter().map(|&u| g.conjugate(x, u)).collect();
            image.sort();
            class.insert(image);
        }
        for c in &class {
            remaining.remove(c);
        }
        classes.push(class.into_iter().collect::<Vec<_>>());
    }
    classes.sort();
    classes
}
