//! Permutations in disjoint-cycle notation and groups generated by them.
//!
//! Generator files look like
//!
//! ```text
//! degree 4
//! (0 1 2 3)
//! (1 3)
//! ```
//!
//! Points are zero based and whitespace is insignificant.

use std::fmt;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// A permutation of `{0, .., degree - 1}` stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self((0..degree as u32).collect())
    }

    /// Returns `None` unless `images` is a bijection on `0..images.len()`.
    pub fn from_images(images: Vec<u32>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            let slot = seen.get_mut(x as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Self(images))
    }

    /// Builds a permutation from disjoint cycles. Points not mentioned are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Option<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a as usize >= degree || b as usize >= degree || touched[a as usize] {
                    return None;
                }
                touched[a as usize] = true;
                images[a as usize] = b;
            }
        }
        Some(Self(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.0[x as usize]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut wrote = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.0[x] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Closure of `generators` under composition, as a multiplication table.
pub fn group_from_perm_generators(degree: usize, generators: &[Permutation], cap: usize) -> Result<FiniteGroup> {
    for (index, g) in generators.iter().enumerate() {
        if g.degree() != degree || Permutation::from_images(g.0.clone()).is_none() {
            return Err(Error::NotAPermutation { index, degree });
        }
    }
    FiniteGroup::from_generators(
        format!("Perm({degree})"),
        Permutation::identity(degree),
        generators,
        |a, b| a.compose(b),
        cap,
    )
}

/// Degree and generator list read from a generator file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGenerators {
    pub degree: usize,
    pub generators: Vec<Permutation>,
}

impl PermGenerators {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let syntax = |line: usize, message: &str| Error::PermutationSyntax {
            line,
            message: message.to_string(),
        };

        let (first_no, first) = lines.next().ok_or_else(|| syntax(1, "missing `degree n` line"))?;
        let degree = first
            .strip_prefix("degree")
            .map(str::trim)
            .and_then(|n| n.parse::<usize>().ok())
            .filter(|&n| n > 0)
            .ok_or_else(|| syntax(first_no, "expected `degree n` with n >= 1"))?;

        let mut generators = Vec::new();
        for (line_no, line) in lines {
            let cycles = parse_cycles(line).map_err(|m| syntax(line_no, &m))?;
            let perm = Permutation::from_cycles(degree, &cycles).ok_or(Error::NotAPermutation {
                index: generators.len(),
                degree,
            })?;
            generators.push(perm);
        }
        Ok(Self { degree, generators })
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    pub fn build(&self, cap: usize) -> Result<FiniteGroup> {
        group_from_perm_generators(self.degree, &self.generators, cap)
    }
}

fn parse_cycles(line: &str) -> std::result::Result<Vec<Vec<u32>>, String> {
    let mut cycles = Vec::new();
    let mut rest = line;
    loop {
        rest = rest.trim_start();
        if rest.is_empty() {
            return Ok(cycles);
        }
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| format!("expected `(` at `{rest}`"))?;
        let close = body.find(')').ok_or("unclosed cycle")?;
        let points = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| format!("bad point `{t}`")))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if !points.is_empty() {
            cycles.push(points);
        }
        rest = &body[close + 1..];
    }
}
