//! Finite groups as multiplication tables over element indices.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{GroupError, ParseError};

/// Groups up to this order get a full associativity check; larger ones are
/// spot-checked on random triples.
pub const FULL_ASSOCIATIVITY_CHECK: usize = 64;
const SAMPLED_TRIPLES: usize = 20_000;

/// How to build a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Symmetry group of the regular `n`-gon, order `2n`.
    Dihedral(usize),
    /// Direct product; element `(g_1, ..., g_r)` sits at the mixed-radix index
    /// with `g_r` varying fastest.
    Product(Vec<GroupSpec>),
    /// Explicit multiplication table.
    Table(Vec<Vec<usize>>),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, GroupError> {
        build_group(self)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Product(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str("x")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            GroupSpec::Table(t) => write!(f, "table({})", t.len()),
        }
    }
}

/// Accepts `C6`, `D3`, `C2xC3` (also `cyclic(6)`, `dihedral(3)`).
impl FromStr for GroupSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(['x', '*', '×']).map(str::trim).collect();
        if parts.len() > 1 {
            return Ok(GroupSpec::Product(parts.iter().map(|p| p.parse()).collect::<Result<_, _>>()?));
        }
        let s = s.trim();
        let lower = s.to_ascii_lowercase();
        let (kind, arg) = if let Some(rest) = lower.strip_prefix("cyclic(") {
            ('c', rest.trim_end_matches(')'))
        } else if let Some(rest) = lower.strip_prefix("dihedral(") {
            ('d', rest.trim_end_matches(')'))
        } else if let Some(rest) = lower.strip_prefix('c') {
            ('c', rest)
        } else if let Some(rest) = lower.strip_prefix('d') {
            ('d', rest)
        } else {
            return Err(ParseError::new(format!("unknown group `{s}`")));
        };
        let n: usize = arg
            .trim()
            .parse()
            .map_err(|_| ParseError::new(format!("bad group order in `{s}`")))?;
        if n == 0 {
            return Err(ParseError::new("group order must be positive"));
        }
        Ok(if kind == 'c' { GroupSpec::Cyclic(n) } else { GroupSpec::Dihedral(n) })
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            GroupSpec::Table(t) => t.serialize(s),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Name(String),
            Table(Vec<Vec<usize>>),
        }
        match Raw::deserialize(d)? {
            Raw::Name(s) => s.parse().map_err(serde::de::Error::custom),
            Raw::Table(t) => Ok(GroupSpec::Table(t)),
        }
    }
}

/// A validated finite group with elements `0..order`.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    id: usize,
    name: String,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup, GroupError> {
    let table = match spec {
        GroupSpec::Cyclic(n) => cyclic_table(*n)?,
        GroupSpec::Dihedral(n) => dihedral_table(*n)?,
        GroupSpec::Product(parts) => {
            if parts.is_empty() {
                return Err(GroupError::InvalidSpec("empty product".into()));
            }
            let groups = parts.iter().map(build_group).collect::<Result<Vec<_>, _>>()?;
            let mut acc = groups[0].clone();
            for g in &groups[1..] {
                acc = acc.direct_product(g);
            }
            acc.name = spec.to_string();
            return Ok(acc);
        }
        GroupSpec::Table(t) => t.clone(),
    };
    FiniteGroup::from_table(table, spec.to_string())
}

fn cyclic_table(n: usize) -> Result<Vec<Vec<usize>>, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidSpec("cyclic group of order 0".into()));
    }
    Ok((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
}

/// Element `r^i s^j` at index `j * n + i`, with `s r s = r^{-1}`.
fn dihedral_table(n: usize) -> Result<Vec<Vec<usize>>, GroupError> {
    if n == 0 {
        return Err(GroupError::InvalidSpec("dihedral group of order 0".into()));
    }
    let index = |i: usize, j: usize| j * n + i;
    let mut table = vec![vec![0; 2 * n]; 2 * n];
    for (x, row) in table.iter_mut().enumerate() {
        let (i, j) = (x % n, x / n);
        for (y, out) in row.iter_mut().enumerate() {
            let (k, l) = (y % n, y / n);
            let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
            *out = index(rot, (j + l) % 2);
        }
    }
    Ok(table)
}

impl FiniteGroup {
    /// Validates a multiplication table: Latin square, identity, associativity.
    pub fn from_table(table: Vec<Vec<usize>>, name: impl Into<String>) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::InvalidSpec("empty table".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(GroupError::NotLatin(format!("row {a} has {} entries", row.len())));
            }
            let mut seen = vec![false; order];
            for &x in row {
                if x >= order || std::mem::replace(&mut seen[x], true) {
                    return Err(GroupError::NotLatin(format!("row {a} repeats or overflows with {x}")));
                }
            }
        }
        for b in 0..order {
            let mut seen = vec![false; order];
            for row in &table {
                if std::mem::replace(&mut seen[row[b]], true) {
                    return Err(GroupError::NotLatin(format!("column {b} repeats {}", row[b])));
                }
            }
        }
        let id = (0..order)
            .find(|&e| (0..order).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or(GroupError::NoIdentity)?;
        let mul: Vec<usize> = table.into_iter().flatten().collect();
        let m = |a: usize, b: usize| mul[a * order + b];
        let assoc = |a, b, c| m(m(a, b), c) == m(a, m(b, c));
        if order <= FULL_ASSOCIATIVITY_CHECK {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if !assoc(a, b, c) {
                            return Err(GroupError::NotAssociative(a, b, c));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(order as u64);
            for _ in 0..SAMPLED_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..order), rng.gen_range(0..order), rng.gen_range(0..order));
                if !assoc(a, b, c) {
                    return Err(GroupError::NotAssociative(a, b, c));
                }
            }
        }
        let inv = (0..order)
            .map(|g| (0..order).find(|&h| m(g, h) == id).expect("Latin rows contain the identity"))
            .collect();
        Ok(Self {
            order,
            mul,
            inv,
            id,
            name: name.into(),
        })
    }

    /// Reads the table format: first line the order, then one row per line.
    pub fn parse_table_text(text: &str) -> Result<Self, GroupError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let order: usize = lines
            .next()
            .ok_or_else(|| ParseError::new("empty group table"))?
            .parse()
            .map_err(|_| ParseError::new("first line must be the group order"))?;
        let mut table = Vec::with_capacity(order);
        for (r, line) in lines.enumerate() {
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| ParseError::new(format!("row {r}: expected integers")))?;
            table.push(row);
        }
        if table.len() != order {
            return Err(ParseError::new(format!("expected {order} rows, found {}", table.len())).into());
        }
        Self::from_table(table, format!("table({order})"))
    }

    pub fn to_table_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for a in 0..self.order {
            let row: Vec<String> = (0..self.order).map(|b| self.mul(a, b).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inv[g]
    }

    pub fn identity(&self) -> usize {
        self.id
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order, other.order);
        let order = n * m;
        let mut mul = vec![0; order * order];
        for x in 0..order {
            for y in 0..order {
                mul[x * order + y] = self.mul(x / m, y / m) * m + other.mul(x % m, y % m);
            }
        }
        let inv = (0..order).map(|x| self.inv(x / m) * m + other.inv(x % m)).collect();
        FiniteGroup {
            order,
            mul,
            inv,
            id: self.id * m + other.id,
            name: format!("{}x{}", self.name, other.name),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_two_is_xor() {
        let g = build_group(&GroupSpec::Cyclic(2)).unwrap();
        assert_eq!(g.order(), 2);
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(g.mul(a, b), a ^ b);
            }
        }
    }

    #[test]
    fn dihedral_three_is_nonabelian() {
        let g = build_group(&GroupSpec::Dihedral(3)).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert!((0..6).any(|a| (0..6).any(|b| g.mul(a, b) != g.mul(b, a))));
        for x in 0..6 {
            assert_eq!(g.mul(x, g.inv(x)), g.identity());
        }
    }

    #[test]
    fn repeated_row_rejected() {
        let t = vec![vec![0, 1], vec![0, 1]];
        assert!(matches!(FiniteGroup::from_table(t, "bad"), Err(GroupError::NotLatin(_))));
    }

    #[test]
    fn non_associative_latin_square_rejected() {
        // a Latin square with identity 0 that is not a group (order 5 loop)
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(t, "loop"), Err(GroupError::NotAssociative(..))));
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("C6".parse::<GroupSpec>().unwrap(), GroupSpec::Cyclic(6));
        assert_eq!("dihedral(4)".parse::<GroupSpec>().unwrap(), GroupSpec::Dihedral(4));
        let p: GroupSpec = "C2xC3".parse().unwrap();
        assert_eq!(p, GroupSpec::Product(vec![GroupSpec::Cyclic(2), GroupSpec::Cyclic(3)]));
        assert_eq!(p.to_string(), "C2xC3");
        assert!("Q8".parse::<GroupSpec>().is_err());
        let g = p.build().unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
    }

    #[test]
    fn table_text_round_trip() {
        let g = build_group(&GroupSpec::Dihedral(4)).unwrap();
        let back = FiniteGroup::parse_table_text(&g.to_table_text()).unwrap();
        assert_eq!(back.table(), g.table());
        assert_eq!(back.identity(), g.identity());
    }

    #[test]
    fn serde_accepts_names_and_tables() {
        let s: GroupSpec = serde_json::from_str("\"C4\"").unwrap();
        assert_eq!(s, GroupSpec::Cyclic(4));
        let t: GroupSpec = serde_json::from_str("[[0,1],[1,0]]").unwrap();
        assert_eq!(t.build().unwrap().order(), 2);
    }
}
