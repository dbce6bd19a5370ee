use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};

type Perm = [u8; 5];

const ID: Perm = [0, 1, 2, 3, 4];

fn compose(p: &Perm, q: &Perm) -> Perm {
    // apply q first, then p
    let mut r = [0u8; 5];
    for i in 0..5 {
        r[i] = p[q[i] as usize];
    }
    r
}

fn inverse(p: &Perm) -> Perm {
    let mut r = [0u8; 5];
    for i in 0..5 {
        r[p[i] as usize] = i as u8;
    }
    r
}

fn cycle_lengths(p: &Perm) -> Vec<u8> {
    let mut seen = [false; 5];
    let mut out = Vec::new();
    for s in 0..5 {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = p[i] as usize;
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn is_even(p: &Perm) -> bool {
    cycle_lengths(p).iter().filter(|&&l| l % 2 == 0).count() % 2 == 0
}

fn all_perms() -> Vec<Perm> {
    let mut out = Vec::with_capacity(120);
    let mut p = ID;
    fn rec(k: usize, p: &mut Perm, out: &mut Vec<Perm>) {
        if k == 5 {
            out.push(*p);
            return;
        }
        for i in k..5 {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out.sort_unstable();
    out
}

fn generated_order(gens: &[Perm]) -> usize {
    let mut seen: HashSet<Perm> = HashSet::from([ID]);
    let mut frontier = vec![ID];
    while let Some(g) = frontier.pop() {
        for s in gens {
            let h = compose(s, &g);
            if seen.insert(h) {
                frontier.push(h);
            }
        }
    }
    seen.len()
}

/// A partition of 5 giving the cycle type of a permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleType(Vec<u8>);

impl CycleType {
    /// Cycle lengths in decreasing order, fixed points included.
    pub fn parts(&self) -> &[u8] {
        &self.0
    }

    fn matches(&self, p: &Perm) -> bool {
        cycle_lengths(p) == self.0
    }
}

impl FromStr for CycleType {
    type Err = Error;

    /// Accepts `2^2`, `4`, `2.3`, `2*3`, `2·3`; fixed points may be omitted.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("invalid cycle type {s:?}"));
        let mut parts = Vec::new();
        for tok in s.trim().split(['.', '*', '·']) {
            let tok = tok.trim();
            let (len, mult) = match tok.split_once('^') {
                Some((l, m)) => (l.trim(), m.trim()),
                None => (tok, "1"),
            };
            let len: u8 = len.parse().map_err(|_| bad())?;
            let mult: u8 = mult.parse().map_err(|_| bad())?;
            if len == 0 || len > 5 || mult > 5 {
                return Err(bad());
            }
            parts.extend(std::iter::repeat(len).take(mult as usize));
        }
        let total: u32 = parts.iter().map(|&x| x as u32).sum();
        if total > 5 || parts.is_empty() {
            return Err(bad());
        }
        parts.extend(std::iter::repeat(1).take(5 - total as usize));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType(parts))
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut counts: BTreeMap<std::cmp::Reverse<u8>, usize> = BTreeMap::new();
        for &p in self.0.iter().filter(|&&p| p > 1) {
            *counts.entry(std::cmp::Reverse(p)).or_default() += 1;
        }
        if counts.is_empty() {
            return f.write_str("1");
        }
        let items: Vec<String> = counts
            .into_iter()
            .map(|(std::cmp::Reverse(l), m)| if m == 1 { l.to_string() } else { format!("{l}^{m}") })
            .collect();
        f.write_str(&items.join("."))
    }
}

impl Serialize for CycleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Group {
    S5,
    A5,
}

impl Group {
    pub fn order(self) -> usize {
        match self {
            Group::S5 => 120,
            Group::A5 => 60,
        }
    }
}

impl FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "S5" => Ok(Group::S5),
            "A5" => Ok(Group::A5),
            _ => Err(Error::InvalidInput(format!("unknown group {s:?}"))),
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::S5 => "S5",
            Group::A5 => "A5",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NielsenReport {
    pub group: Group,
    pub types: Vec<CycleType>,
    pub tuples: u64,
    /// Classes under simultaneous conjugation by S5.
    pub classes: u64,
    /// Classes under conjugation by A5; only reported for the A5 group.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes_a5: Option<u64>,
    /// `"free-action"` when the tuple count was divided directly.
    pub method: &'static str,
}

fn generating_tuples(group: Group, types: &[CycleType]) -> Vec<Vec<Perm>> {
    let perms = all_perms();
    let classes: Vec<Vec<Perm>> = types
        .iter()
        .map(|t| perms.iter().filter(|p| t.matches(p)).copied().collect())
        .collect();
    let (last_type, init) = types.split_last().expect("nonempty");
    let target = group.order();
    classes[0]
        .par_iter()
        .flat_map_iter(|first| {
            let mut out = Vec::new();
            let mut stack = vec![*first];
            extend(&classes[1..init.len()], &mut stack, last_type, target, group, &mut out);
            out
        })
        .collect()
}

fn extend(
    rest: &[Vec<Perm>],
    stack: &mut Vec<Perm>,
    last: &CycleType,
    target: usize,
    group: Group,
    out: &mut Vec<Vec<Perm>>,
) {
    match rest.split_first() {
        Some((cls, tail)) => {
            for p in cls {
                stack.push(*p);
                extend(tail, stack, last, target, group, out);
                stack.pop();
            }
        }
        None => {
            let prod = stack.iter().fold(ID, |acc, p| compose(&acc, p));
            let closing = inverse(&prod);
            if !last.matches(&closing) {
                return;
            }
            let mut t = stack.clone();
            t.push(closing);
            if group == Group::A5 && !t.iter().all(is_even) {
                return;
            }
            if generated_order(&t) == target {
                out.push(t);
            }
        }
    }
}

fn count_orbits(tuples: &[Vec<Perm>], conj: &[Perm]) -> u64 {
    let canonical: HashSet<Vec<Perm>> = tuples
        .par_iter()
        .map(|t| {
            conj.iter()
                .map(|g| {
                    let gi = inverse(g);
                    t.iter().map(|p| compose(&compose(g, p), &gi)).collect::<Vec<_>>()
                })
                .min()
                .expect("nonempty group")
        })
        .collect();
    canonical.len() as u64
}

fn classes_under(tuples: &[Vec<Perm>], conj: &[Perm], force_orbits: bool) -> (u64, bool) {
    let n = tuples.len() as u64;
    let k = conj.len() as u64;
    if !force_orbits && n % k == 0 {
        (n / k, true)
    } else {
        (count_orbits(tuples, conj), false)
    }
}

/// Counts generating tuples of `group` with the given cycle types and
/// product 1, up to simultaneous conjugation.
pub fn nielsen_count(group: Group, types: &[CycleType]) -> Result<NielsenReport> {
    nielsen_count_with(group, types, false)
}

pub(crate) fn nielsen_count_with(group: Group, types: &[CycleType], force_orbits: bool) -> Result<NielsenReport> {
    if types.len() < 2 {
        return Err(Error::InvalidInput("need at least two cycle types".into()));
    }
    let tuples = generating_tuples(group, types);
    let s5 = all_perms();
    let (classes, free) = classes_under(&tuples, &s5, force_orbits);
    let classes_a5 = match group {
        Group::A5 => {
            let a5: Vec<Perm> = s5.iter().filter(|p| is_even(p)).copied().collect();
            Some(classes_under(&tuples, &a5, force_orbits).0)
        }
        Group::S5 => None,
    };
    Ok(NielsenReport {
        group,
        types: types.to_vec(),
        tuples: tuples.len() as u64,
        classes,
        classes_a5,
        method: if free { "free-action" } else { "orbits" },
    })
}

pub fn parse_types(s: &[&str]) -> Result<Vec<CycleType>> {
    s.iter().map(|t| t.parse()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(g: Group, t: &[&str], force: bool) -> NielsenReport {
        nielsen_count_with(g, &parse_types(t).unwrap(), force).unwrap()
    }

    #[test]
    fn cycle_type_parsing() {
        let t: CycleType = "2^2".parse().unwrap();
        assert_eq!(t.parts(), &[2, 2, 1]);
        let t: CycleType = "3.2".parse().unwrap();
        assert_eq!(t.to_string(), "3.2");
        assert_eq!("2·3".parse::<CycleType>().unwrap(), t);
        assert!("6".parse::<CycleType>().is_err());
        assert!("2^3".parse::<CycleType>().is_err());
        assert!("x".parse::<CycleType>().is_err());
    }

    #[test]
    fn table_rows() {
        let r = run(Group::S5, &["2^2", "2^2", "4", "2"], false);
        assert_eq!((r.classes, r.tuples % 120), (8, 0));
        let r = run(Group::S5, &["2^2", "2^2", "2.3", "2"], false);
        assert_eq!((r.classes, r.tuples % 120), (6, 0));
        let r = run(Group::S5, &["2^2", "2^2", "2^2", "2", "2"], false);
        assert_eq!((r.classes, r.tuples % 120), (40, 0));
        let r = run(Group::A5, &["2^2", "2^2", "2^2", "3"], false);
        assert_eq!((r.classes, r.classes_a5, r.tuples % 120), (9, Some(18), 0));
    }

    #[test]
    fn orbit_fallback_agrees() {
        let a = run(Group::S5, &["2^2", "2^2", "4", "2"], true);
        assert_eq!((a.classes, a.method), (8, "orbits"));
        let b = run(Group::A5, &["2^2", "2^2", "2^2", "3"], true);
        assert_eq!((b.classes, b.classes_a5), (9, Some(18)));
    }
}
