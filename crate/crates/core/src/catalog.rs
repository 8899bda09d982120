//! Named groups: cyclic and abelian products, the maximal-cyclic 2-groups
//! (dihedral, generalized quaternion, semidihedral, modular), the two
//! extraspecial groups of order p³, and direct products of these.

use std::fmt;
use std::path::PathBuf;

use serde::Serialize;

use crate::arith::{is_prime, prime_power};
use crate::error::{Error, Result};
use crate::group::{ElementId, FiniteGroup};
use crate::perm::PermGenerators;

/// Description of a group that [`build`] can realize.
///
/// Orders of the 2-group families are given as the group order `2^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyclic {
        p: usize,
        n: u32,
    },
    ElementaryAbelian {
        p: usize,
        k: u32,
    },
    /// Product of cyclic groups of the listed orders; the empty list is the trivial group.
    AbelianProduct(Vec<usize>),
    Dihedral(usize),
    Quaternion(usize),
    Semidihedral(usize),
    ModularMaximalCyclic(usize),
    /// Heisenberg group of order p³ and exponent p.
    ExtraspecialPlus(usize),
    /// Extraspecial group of order p³ and exponent p².
    ExtraspecialMinus(usize),
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    PermFile(PathBuf),
}

impl GroupSpec {
    pub fn cyclic(m: usize) -> Self {
        match prime_power(m) {
            Some((p, n)) => GroupSpec::Cyclic { p, n },
            None if m == 1 => GroupSpec::AbelianProduct(Vec::new()),
            None => GroupSpec::AbelianProduct(vec![m]),
        }
    }

    pub fn product(a: GroupSpec, b: GroupSpec) -> Self {
        GroupSpec::DirectProduct(Box::new(a), Box::new(b))
    }

    /// Checks the family side conditions.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        let two_power = |order: usize, min_n: u32, family: &str| match prime_power(order) {
            Some((2, n)) if n >= min_n => Ok(()),
            _ => bad(format!("{family}({order}) needs order 2^n with n >= {min_n}")),
        };
        match self {
            GroupSpec::Cyclic { p, .. } | GroupSpec::ElementaryAbelian { p, .. } if !is_prime(*p) => {
                bad(format!("{p} is not prime"))
            }
            GroupSpec::Cyclic { .. } | GroupSpec::ElementaryAbelian { .. } => Ok(()),
            GroupSpec::AbelianProduct(orders) => match orders.iter().find(|&&m| m == 0) {
                Some(_) => bad("cyclic factor of order 0".into()),
                None => Ok(()),
            },
            GroupSpec::Dihedral(n) => two_power(*n, 3, "D"),
            GroupSpec::Quaternion(n) => two_power(*n, 3, "Q"),
            GroupSpec::Semidihedral(n) => two_power(*n, 4, "SD"),
            GroupSpec::ModularMaximalCyclic(n) => two_power(*n, 4, "M"),
            GroupSpec::ExtraspecialPlus(p) | GroupSpec::ExtraspecialMinus(p) => {
                if is_prime(*p) && *p > 2 {
                    Ok(())
                } else {
                    bad(format!("extraspecial groups need an odd prime, got {p}"))
                }
            }
            GroupSpec::DirectProduct(a, b) => {
                a.validate()?;
                b.validate()
            }
            GroupSpec::PermFile(_) => Ok(()),
        }
    }

    /// Order of the group described, when it is known without building.
    pub fn nominal_order(&self) -> Option<usize> {
        Some(match self {
            GroupSpec::Cyclic { p, n } => p.pow(*n),
            GroupSpec::ElementaryAbelian { p, k } => p.pow(*k),
            GroupSpec::AbelianProduct(orders) => orders.iter().product(),
            GroupSpec::Dihedral(n)
            | GroupSpec::Quaternion(n)
            | GroupSpec::Semidihedral(n)
            | GroupSpec::ModularMaximalCyclic(n) => *n,
            GroupSpec::ExtraspecialPlus(p) | GroupSpec::ExtraspecialMinus(p) => p.pow(3),
            GroupSpec::DirectProduct(a, b) => a.nominal_order()? * b.nominal_order()?,
            GroupSpec::PermFile(_) => return None,
        })
    }

    fn abelian_orders(&self) -> Option<Vec<usize>> {
        match self {
            GroupSpec::Cyclic { p, n } => Some(vec![p.pow(*n)]),
            GroupSpec::AbelianProduct(orders) => Some(orders.clone()),
            _ => None,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic { p, n } => write!(f, "C{}", p.pow(*n)),
            GroupSpec::ElementaryAbelian { p, k } => write!(f, "EA({p},{k})"),
            GroupSpec::AbelianProduct(orders) if orders.is_empty() => write!(f, "C1"),
            GroupSpec::AbelianProduct(orders) => {
                let parts: Vec<_> = orders.iter().map(|m| format!("C{m}")).collect();
                write!(f, "{}", parts.join("x"))
            }
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Quaternion(n) => write!(f, "Q{n}"),
            GroupSpec::Semidihedral(n) => write!(f, "SD{n}"),
            GroupSpec::ModularMaximalCyclic(n) => write!(f, "M{n}"),
            GroupSpec::ExtraspecialPlus(p) => write!(f, "ES+({p})"),
            GroupSpec::ExtraspecialMinus(p) => write!(f, "ES-({p})"),
            GroupSpec::DirectProduct(a, b) => write!(f, "{a}x{b}"),
            GroupSpec::PermFile(path) => write!(f, "perm:{}", path.display()),
        }
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group_spec(s)
    }
}

/// Realizes `spec` as a multiplication table.
pub fn build(spec: &GroupSpec, cap: usize) -> Result<FiniteGroup> {
    spec.validate()?;
    if let Some(order) = spec.nominal_order() {
        if order > cap {
            return Err(Error::OrderCapExceeded { cap });
        }
    }
    let name = spec.to_string();
    let group = match spec {
        GroupSpec::Cyclic { p, n } => abelian(&[p.pow(*n)], cap)?,
        GroupSpec::ElementaryAbelian { p, k } => abelian(&vec![*p; *k as usize], cap)?,
        GroupSpec::AbelianProduct(orders) => abelian(orders, cap)?,
        GroupSpec::Dihedral(n) => {
            let m = n / 2;
            Metacyclic::new(m, 2, m - 1, 0).build(cap)?
        }
        GroupSpec::Quaternion(n) => {
            let m = n / 2;
            Metacyclic::new(m, 2, m - 1, m / 2).build(cap)?
        }
        GroupSpec::Semidihedral(n) => {
            let m = n / 2;
            Metacyclic::new(m, 2, m / 2 - 1, 0).build(cap)?
        }
        GroupSpec::ModularMaximalCyclic(n) => {
            let m = n / 2;
            Metacyclic::new(m, 2, m / 2 + 1, 0).build(cap)?
        }
        GroupSpec::ExtraspecialMinus(p) => Metacyclic::new(p * p, *p, 1 + p, 0).build(cap)?,
        GroupSpec::ExtraspecialPlus(p) => heisenberg(*p, cap)?,
        GroupSpec::DirectProduct(a, b) => build(a, cap)?.direct_product(&build(b, cap)?, cap)?,
        GroupSpec::PermFile(path) => PermGenerators::read(path)?.build(cap)?,
    };
    Ok(group.with_name(name))
}

fn abelian(orders: &[usize], cap: usize) -> Result<FiniteGroup> {
    let orders: Vec<usize> = orders.iter().copied().filter(|&m| m > 1).collect();
    let gens: Vec<Vec<usize>> = (0..orders.len())
        .map(|i| (0..orders.len()).map(|j| usize::from(i == j)).collect())
        .collect();
    FiniteGroup::from_generators(
        "",
        vec![0; orders.len()],
        &gens,
        |a, b| a.iter().zip(b).zip(&orders).map(|((x, y), m)| (x + y) % m).collect(),
        cap,
    )
}

/// `<g, h | g^m = 1, h^k = g^s, h g h⁻¹ = g^r>` in normal form `g^a h^b`.
struct Metacyclic {
    m: usize,
    k: usize,
    r: usize,
    s: usize,
}

impl Metacyclic {
    fn new(m: usize, k: usize, r: usize, s: usize) -> Self {
        debug_assert!(pow_mod(r, k, m) == 1 % m && (r * s) % m == s % m);
        Self { m, k, r, s }
    }

    fn mul(&self, x: &(usize, usize), y: &(usize, usize)) -> (usize, usize) {
        // g^a1 h^b1 g^a2 h^b2 = g^(a1 + a2 r^b1) h^(b1 + b2)
        let mut a = (x.0 + y.0 * pow_mod(self.r, x.1, self.m)) % self.m;
        let mut b = x.1 + y.1;
        if b >= self.k {
            b -= self.k;
            a = (a + self.s) % self.m;
        }
        (a, b)
    }

    fn build(&self, cap: usize) -> Result<FiniteGroup> {
        FiniteGroup::from_generators("", (0, 0), &[(1, 0), (0, 1)], |x, y| self.mul(x, y), cap)
    }
}

fn pow_mod(base: usize, exp: usize, m: usize) -> usize {
    (0..exp).fold(1 % m, |acc, _| acc * base % m)
}

/// Upper unitriangular 3×3 matrices over `Z/p`, stored as `(a, b, c)`.
fn heisenberg(p: usize, cap: usize) -> Result<FiniteGroup> {
    FiniteGroup::from_generators(
        "",
        (0, 0, 0),
        &[(1, 0, 0), (0, 1, 0)],
        |x: &(usize, usize, usize), y: &(usize, usize, usize)| {
            ((x.0 + y.0) % p, (x.1 + y.1) % p, (x.2 + y.2 + x.0 * y.1) % p)
        },
        cap,
    )
}

/// Shape of a 2-group with a cyclic subgroup of index 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum MaxCyclicType {
    QuaternionType,
    DihedralType,
    ModularType,
    SemidihedralType,
    CyclicType,
    NotMaximalCyclic,
}

/// Decides which maximal-cyclic presentation, if any, a 2-group satisfies
/// by searching for a pair `(g, h)` meeting the defining relations.
pub fn classify_maximal_cyclic_2group(group: &FiniteGroup) -> Result<MaxCyclicType> {
    let order = group.order();
    let n = match prime_power(order) {
        _ if order == 1 => return Ok(MaxCyclicType::CyclicType),
        Some((2, n)) => n,
        _ => return Err(Error::OddOrder { order }),
    };
    if group.is_cyclic() {
        return Ok(MaxCyclicType::CyclicType);
    }
    if group.is_abelian() || n < 3 {
        return Ok(MaxCyclicType::NotMaximalCyclic);
    }
    let half = order / 2;
    let quarter = order / 4;
    for g in group.elements().filter(|&g| group.element_order(g) == half) {
        let cyclic = group.generated_subgroup(&[g]);
        let g_inv = group.inv(g);
        for h in group.elements().filter(|&h| !cyclic.contains(h)) {
            let h_sq = group.mul(h, h);
            let image = group.conjugate(h, g);
            let h_involution = h_sq == ElementId::IDENTITY;
            if image == g_inv && h_sq == group.pow(g, quarter) {
                return Ok(MaxCyclicType::QuaternionType);
            }
            if image == g_inv && h_involution {
                return Ok(MaxCyclicType::DihedralType);
            }
            if n >= 4 && h_involution && image == group.pow(g, 1 + quarter) {
                return Ok(MaxCyclicType::ModularType);
            }
            if n >= 4 && h_involution && image == group.pow(g, quarter + half - 1) {
                return Ok(MaxCyclicType::SemidihedralType);
            }
        }
    }
    Ok(MaxCyclicType::NotMaximalCyclic)
}

/// Parses the group-spec grammar:
///
/// `C(p^n)`, `Cm`, `EA(p,k)`, `D(2^n)`, `Q(2^n)`, `SD(2^n)`, `M(2^n)` (each
/// also as e.g. `D8` or `D(8)`), `ES+(p)`, `ES-(p)`, products joined by `x`,
/// and `perm:<path>` for a generator file (which must come last).
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    let mut parser = Parser { text, pos: 0 };
    let mut factors = vec![parser.factor()?];
    loop {
        parser.skip_ws();
        match parser.peek() {
            None => break,
            Some('x') | Some('X') => {
                parser.pos += 1;
                factors.push(parser.factor()?);
            }
            Some(c) => return Err(parser.error(format!("unexpected `{c}`"))),
        }
    }
    let spec = if factors.len() == 1 {
        factors.pop().unwrap()
    } else if let Some(orders) = factors
        .iter()
        .map(GroupSpec::abelian_orders)
        .collect::<Option<Vec<_>>>()
    {
        GroupSpec::AbelianProduct(orders.concat())
    } else {
        factors.into_iter().reduce(GroupSpec::product).unwrap()
    };
    spec.validate()?;
    Ok(spec)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::SpecSyntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += self.peek().unwrap().len_utf8();
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn integer(&mut self) -> Result<usize> {
        self.skip_ws();
        let digits: String = self.rest().chars().take_while(char::is_ascii_digit).collect();
        if digits.is_empty() {
            return Err(self.error("expected a number"));
        }
        let value = digits.parse().map_err(|_| self.error("number too large"))?;
        self.pos += digits.len();
        Ok(value)
    }

    /// `m` or `b^e`.
    fn power(&mut self) -> Result<usize> {
        let base = self.integer()?;
        if self.eat("^") {
            let start = self.pos;
            let exp = self.integer()?;
            u32::try_from(exp)
                .ok()
                .and_then(|e| base.checked_pow(e))
                .ok_or(Error::SpecSyntax {
                    position: start,
                    message: "power too large".into(),
                })
        } else {
            Ok(base)
        }
    }

    /// Order argument: `(N)`, `(b^e)` or bare digits.
    fn order_arg(&mut self) -> Result<usize> {
        if self.eat("(") {
            let n = self.power()?;
            self.expect(")")?;
            Ok(n)
        } else {
            self.integer()
        }
    }

    fn factor(&mut self) -> Result<GroupSpec> {
        self.skip_ws();
        if self.eat("perm:") {
            let path = self.rest().trim().to_string();
            if path.is_empty() {
                return Err(self.error("missing path after `perm:`"));
            }
            self.pos = self.text.len();
            return Ok(GroupSpec::PermFile(path.into()));
        }
        if self.eat("EA") {
            self.expect("(")?;
            let p = self.integer()?;
            self.expect(",")?;
            let k = self.integer()?;
            self.expect(")")?;
            let k = u32::try_from(k).map_err(|_| self.error("rank too large"))?;
            return Ok(GroupSpec::ElementaryAbelian { p, k });
        }
        for (token, plus) in [("ES+", true), ("ES-", false)] {
            if self.eat(token) {
                let p = self.order_arg()?;
                return Ok(if plus {
                    GroupSpec::ExtraspecialPlus(p)
                } else {
                    GroupSpec::ExtraspecialMinus(p)
                });
            }
        }
        if self.eat("SD") {
            return Ok(GroupSpec::Semidihedral(self.order_arg()?));
        }
        if self.eat("C") {
            return Ok(GroupSpec::cyclic(self.order_arg()?));
        }
        if self.eat("D") {
            return Ok(GroupSpec::Dihedral(self.order_arg()?));
        }
        if self.eat("Q") {
            return Ok(GroupSpec::Quaternion(self.order_arg()?));
        }
        if self.eat("M") {
            return Ok(GroupSpec::ModularMaximalCyclic(self.order_arg()?));
        }
        Err(self.error("expected a group name"))
    }
}

/// The fixed list of named p-groups used by the verification harness,
/// in ascending order.
pub fn catalog() -> Vec<GroupSpec> {
    use GroupSpec::*;
    let ab = |orders: &[usize]| AbelianProduct(orders.to_vec());
    let ea = |p, k| ElementaryAbelian { p, k };
    let prod = |a: GroupSpec, b: GroupSpec| GroupSpec::product(a, b);
    let mut list = vec![
        // order 2..8
        GroupSpec::cyclic(2),
        GroupSpec::cyclic(3),
        GroupSpec::cyclic(4),
        ea(2, 2),
        GroupSpec::cyclic(5),
        GroupSpec::cyclic(7),
        GroupSpec::cyclic(8),
        ab(&[4, 2]),
        ea(2, 3),
        Dihedral(8),
        Quaternion(8),
        GroupSpec::cyclic(9),
        ea(3, 2),
        // 16
        GroupSpec::cyclic(16),
        ab(&[8, 2]),
        ab(&[4, 4]),
        ab(&[4, 2, 2]),
        ea(2, 4),
        Dihedral(16),
        Quaternion(16),
        Semidihedral(16),
        ModularMaximalCyclic(16),
        prod(Dihedral(8), GroupSpec::cyclic(2)),
        prod(Quaternion(8), GroupSpec::cyclic(2)),
        GroupSpec::cyclic(25),
        ea(5, 2),
        GroupSpec::cyclic(27),
        ab(&[9, 3]),
        ea(3, 3),
        ExtraspecialPlus(3),
        ExtraspecialMinus(3),
        // 32
        GroupSpec::cyclic(32),
        ab(&[16, 2]),
        ab(&[8, 4]),
        ab(&[8, 2, 2]),
        ab(&[4, 4, 2]),
        ab(&[4, 2, 2, 2]),
        ea(2, 5),
        Dihedral(32),
        Quaternion(32),
        Semidihedral(32),
        ModularMaximalCyclic(32),
        prod(Dihedral(16), GroupSpec::cyclic(2)),
        prod(Dihedral(8), GroupSpec::cyclic(4)),
        prod(Quaternion(8), GroupSpec::cyclic(4)),
        prod(Dihedral(8), ea(2, 2)),
        GroupSpec::cyclic(49),
        ea(7, 2),
        // 64
        GroupSpec::cyclic(64),
        ab(&[32, 2]),
        ab(&[8, 8]),
        ab(&[4, 4, 4]),
        Dihedral(64),
        Quaternion(64),
        Semidihedral(64),
        ModularMaximalCyclic(64),
        prod(Dihedral(8), Quaternion(8)),
        GroupSpec::cyclic(81),
        ab(&[27, 3]),
        ab(&[9, 9]),
        ab(&[9, 3, 3]),
        prod(ExtraspecialPlus(3), GroupSpec::cyclic(3)),
        prod(ExtraspecialMinus(3), GroupSpec::cyclic(3)),
        GroupSpec::cyclic(125),
        ab(&[25, 5]),
        ExtraspecialPlus(5),
        ExtraspecialMinus(5),
        // 128
        GroupSpec::cyclic(128),
        Dihedral(128),
        Quaternion(128),
        Semidihedral(128),
        ModularMaximalCyclic(128),
    ];
    list.sort_by_key(|s| s.nominal_order().unwrap_or(usize::MAX));
    list
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_ORDER_CAP;

    fn make(spec: GroupSpec) -> FiniteGroup {
        build(&spec, DEFAULT_ORDER_CAP).unwrap()
    }

    fn involutions(g: &FiniteGroup) -> usize {
        g.elements().filter(|&x| g.element_order(x) == 2).count()
    }

    #[test]
    fn cyclic_of_order_eight() {
        let g = make(GroupSpec::Cyclic { p: 2, n: 3 });
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian());
        assert!(g.elements().any(|x| g.element_order(x) == 8));
    }

    #[test]
    fn quaternion_eight_has_one_involution() {
        let g = make(GroupSpec::Quaternion(8));
        assert_eq!(g.order(), 8);
        assert!(!g.is_abelian());
        assert_eq!(involutions(&g), 1);
        // h² = g² with g, h the presentation generators
        let (a, b) = (g.generators()[0], g.generators()[1]);
        assert_eq!(g.element_order(b), 4);
        assert_eq!(g.mul(b, b), g.mul(a, a));
        assert_eq!(g.generated_subgroup(&[a, b]).order(), 8);
    }

    #[test]
    fn semidihedral_sixteen_relation() {
        let g = make(GroupSpec::Semidihedral(16));
        let (a, b) = (g.generators()[0], g.generators()[1]);
        assert_eq!(g.order(), 16);
        assert_eq!(g.element_order(a), 8);
        assert_eq!(g.conjugate(b, a), g.pow(a, 3));
        assert!(!g.is_abelian());
    }

    #[test]
    fn involution_counts_distinguish_families() {
        // D(2m): m + 1 involutions; Q: 1; SD(2^n): 2^(n-2) + 1; M(2^n): 3.
        assert_eq!(involutions(&make(GroupSpec::Dihedral(16))), 9);
        assert_eq!(involutions(&make(GroupSpec::Quaternion(16))), 1);
        assert_eq!(involutions(&make(GroupSpec::Semidihedral(16))), 5);
        assert_eq!(involutions(&make(GroupSpec::ModularMaximalCyclic(16))), 3);
    }

    #[test]
    fn extraspecial_exponents() {
        let plus = make(GroupSpec::ExtraspecialPlus(3));
        let minus = make(GroupSpec::ExtraspecialMinus(3));
        assert_eq!(plus.order(), 27);
        assert_eq!(minus.order(), 27);
        assert!(!plus.is_abelian() && !minus.is_abelian());
        assert_eq!(plus.elements().map(|x| plus.element_order(x)).max(), Some(3));
        assert_eq!(minus.elements().map(|x| minus.element_order(x)).max(), Some(9));
    }

    #[test]
    fn rejects_invalid_parameters() {
        for spec in [
            GroupSpec::Semidihedral(8),
            GroupSpec::ModularMaximalCyclic(8),
            GroupSpec::Dihedral(4),
            GroupSpec::Quaternion(12),
            GroupSpec::ExtraspecialPlus(2),
            GroupSpec::ElementaryAbelian { p: 4, k: 2 },
        ] {
            assert!(
                matches!(build(&spec, DEFAULT_ORDER_CAP), Err(Error::InvalidSpec(_))),
                "{spec}"
            );
        }
    }

    #[test]
    fn classifier_cases() {
        use MaxCyclicType::*;
        let classify = |s| classify_maximal_cyclic_2group(&make(s)).unwrap();
        assert_eq!(classify(GroupSpec::Quaternion(16)), QuaternionType);
        assert_eq!(classify(GroupSpec::ElementaryAbelian { p: 2, k: 3 }), NotMaximalCyclic);
        assert_eq!(classify(GroupSpec::Semidihedral(16)), SemidihedralType);
        assert_eq!(classify(GroupSpec::cyclic(16)), CyclicType);
        assert_eq!(
            classify(GroupSpec::product(GroupSpec::Dihedral(8), GroupSpec::cyclic(2))),
            NotMaximalCyclic
        );
        assert!(matches!(
            classify_maximal_cyclic_2group(&make(GroupSpec::cyclic(9))),
            Err(Error::OddOrder { order: 9 })
        ));
    }

    #[test]
    fn classifier_recovers_every_family() {
        use MaxCyclicType::*;
        for n in 3..=6u32 {
            let order = 1usize << n;
            assert_eq!(
                classify_maximal_cyclic_2group(&make(GroupSpec::Quaternion(order))).unwrap(),
                QuaternionType
            );
            assert_eq!(
                classify_maximal_cyclic_2group(&make(GroupSpec::Dihedral(order))).unwrap(),
                DihedralType
            );
            if n >= 4 {
                assert_eq!(
                    classify_maximal_cyclic_2group(&make(GroupSpec::Semidihedral(order))).unwrap(),
                    SemidihedralType
                );
                assert_eq!(
                    classify_maximal_cyclic_2group(&make(GroupSpec::ModularMaximalCyclic(order))).unwrap(),
                    ModularType
                );
            }
        }
    }

    #[test]
    fn parses_the_grammar() {
        assert_eq!(parse_group_spec("C(2^3)").unwrap(), GroupSpec::Cyclic { p: 2, n: 3 });
        assert_eq!(
            parse_group_spec("C4xC2").unwrap(),
            GroupSpec::AbelianProduct(vec![4, 2])
        );
        assert_eq!(parse_group_spec("SD(16)").unwrap(), GroupSpec::Semidihedral(16));
        assert_eq!(parse_group_spec("SD(2^4)").unwrap(), GroupSpec::Semidihedral(16));
        assert_eq!(
            parse_group_spec("C4xC2x C2").unwrap(),
            GroupSpec::AbelianProduct(vec![4, 2, 2])
        );
        assert_eq!(
            parse_group_spec("EA(3, 2)").unwrap(),
            GroupSpec::ElementaryAbelian { p: 3, k: 2 }
        );
        assert_eq!(parse_group_spec("Q8").unwrap(), GroupSpec::Quaternion(8));
        assert_eq!(parse_group_spec("D8").unwrap(), GroupSpec::Dihedral(8));
        assert_eq!(parse_group_spec("ES-(3)").unwrap(), GroupSpec::ExtraspecialMinus(3));
        assert_eq!(parse_group_spec("C6").unwrap(), GroupSpec::AbelianProduct(vec![6]));
        assert_eq!(
            parse_group_spec("D8xC2").unwrap(),
            GroupSpec::product(GroupSpec::Dihedral(8), GroupSpec::Cyclic { p: 2, n: 1 })
        );
        assert_eq!(
            parse_group_spec("perm: gens.txt").unwrap(),
            GroupSpec::PermFile("gens.txt".into())
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_group_spec("C4xZ2") {
            Err(Error::SpecSyntax { position, .. }) => assert_eq!(position, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_group_spec("EA(2 3)"),
            Err(Error::SpecSyntax { position: 5, .. })
        ));
        assert!(matches!(parse_group_spec("SD(8)"), Err(Error::InvalidSpec(_))));
        assert!(matches!(
            parse_group_spec(""),
            Err(Error::SpecSyntax { position: 0, .. })
        ));
    }

    #[test]
    fn display_reparses() {
        for spec in catalog() {
            assert_eq!(parse_group_spec(&spec.to_string()).unwrap(), spec);
        }
    }

    #[test]
    fn catalog_groups_match_nominal_orders() {
        for spec in catalog().into_iter().filter(|s| s.nominal_order().unwrap() <= 64) {
            let g = make(spec.clone());
            assert_eq!(Some(g.order()), spec.nominal_order(), "{spec}");
            assert!(g.is_p_group(), "{spec}");
        }
    }
}
