//! Small finite groups as multiplication tables.
//!
//! Products are read left to right: `a * b` is "apply `a`, then `b`", so the
//! right-regular action of the group on itself is `x -> x * g`.

use std::collections::HashMap;
use std::fmt;

use super::GeometryError;

/// Default bound on the group order (the order of `Sym(6)`).
pub const DEFAULT_CAP: usize = 720;
/// Groups up to this order get an exhaustive associativity check.
const EXHAUSTIVE_ASSOC: usize = 256;
/// Third arguments sampled per `(a, b)` pair above that order.
const ASSOC_SAMPLES: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Notation {
    Index(usize),
    Dihedral(usize),
    Perm { degree: usize, index: HashMap<Vec<u8>, usize> },
    Product(Box<Notation>, Box<Notation>, usize),
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    n: usize,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
    notation: Notation,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.n)
    }
}

impl FiniteGroup {
    fn build(
        name: String,
        n: usize,
        table: Vec<u32>,
        labels: Vec<String>,
        notation: Notation,
        cap: usize,
    ) -> Result<FiniteGroup, GeometryError> {
        if n == 0 {
            return Err(GeometryError::Group("a group has at least one element".into()));
        }
        if n > cap {
            return Err(GeometryError::TooLarge { n, cap });
        }
        if table.len() != n * n || table.iter().any(|&x| x as usize >= n) {
            return Err(GeometryError::Group(format!("table of {name} is not an {n}x{n} table over 0..{n}")));
        }
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| GeometryError::Group(format!("{name} has no identity")))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let b = (0..n)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| GeometryError::Group(format!("element #{a} of {name} has no inverse")))?;
            inverse.push(b);
        }
        let thirds: Vec<usize> = if n <= EXHAUSTIVE_ASSOC {
            (0..n).collect()
        } else {
            (0..ASSOC_SAMPLES).map(|k| k * n / ASSOC_SAMPLES + k % 7).map(|c| c % n).collect()
        };
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for &c in &thirds {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GeometryError::Group(format!("{name} is not associative at (#{a}, #{b}, #{c})")));
                    }
                }
            }
        }
        Ok(FiniteGroup { name, n, table, identity, inverse, labels, notation })
    }

    /// Group from an explicit table over `0..n`; `rows[a][b]` is `a * b`.
    pub fn from_table(rows: &[Vec<usize>], cap: usize) -> Result<FiniteGroup, GeometryError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(GeometryError::Group("multiplication table is not square".into()));
        }
        let table = rows.iter().flatten().map(|&x| u32::try_from(x).unwrap_or(u32::MAX)).collect();
        Self::build(format!("table({n})"), n, table, index_labels(n), Notation::Index(n), cap)
    }

    pub fn cyclic(n: usize, cap: usize) -> Result<FiniteGroup, GeometryError> {
        Self::from_fn(format!("Z({n})"), n, index_labels(n), Notation::Index(n), cap, |a, b| (a + b) % n)
    }

    /// Dihedral group of order `2n`: `r^k` is element `k`, `s r^k` is `n + k`.
    pub fn dihedral(n: usize, cap: usize) -> Result<FiniteGroup, GeometryError> {
        if n == 0 {
            return Err(GeometryError::Group("D(0) is not defined".into()));
        }
        let labels = (0..2 * n)
            .map(|i| {
                let (refl, k) = (i >= n, i % n);
                match (refl, k) {
                    (false, 0) => "e".to_string(),
                    (false, 1) => "r".to_string(),
                    (false, k) => format!("r^{k}"),
                    (true, 0) => "s".to_string(),
                    (true, 1) => "sr".to_string(),
                    (true, k) => format!("sr^{k}"),
                }
            })
            .collect();
        Self::from_fn(format!("D({n})"), 2 * n, labels, Notation::Dihedral(n), cap, |a, b| {
            let (ra, ka, rb, kb) = (a >= n, a % n, b >= n, b % n);
            // r^k s = s r^{-k}
            let k = if rb { (kb + n - ka) % n } else { (ka + kb) % n };
            if ra != rb {
                n + k
            } else {
                k
            }
        })
    }

    pub fn symmetric(degree: usize, cap: usize) -> Result<FiniteGroup, GeometryError> {
        Self::permutations(format!("Sym({degree})"), degree, false, cap)
    }

    pub fn alternating(degree: usize, cap: usize) -> Result<FiniteGroup, GeometryError> {
        Self::permutations(format!("Alt({degree})"), degree, true, cap)
    }

    fn permutations(name: String, degree: usize, even_only: bool, cap: usize) -> Result<FiniteGroup, GeometryError> {
        if !(1..=6).contains(&degree) {
            return Err(GeometryError::Group(format!("{name}: degree must be between 1 and 6")));
        }
        let perms: Vec<Vec<u8>> = all_permutations(degree).into_iter().filter(|p| !even_only || is_even(p)).collect();
        let n = perms.len();
        if n > cap {
            return Err(GeometryError::TooLarge { n, cap });
        }
        let index: HashMap<Vec<u8>, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let labels = perms.iter().map(|p| cycle_notation(p)).collect();
        let table = perms
            .iter()
            .flat_map(|a| perms.iter().map(|b| index[&compose(a, b)] as u32).collect::<Vec<_>>())
            .collect();
        Self::build(name, n, table, labels, Notation::Perm { degree, index }, cap)
    }

    pub fn product(a: &FiniteGroup, b: &FiniteGroup, cap: usize) -> Result<FiniteGroup, GeometryError> {
        let n = a.n * b.n;
        if n > cap {
            return Err(GeometryError::TooLarge { n, cap });
        }
        let labels = (0..n).map(|i| format!("[{},{}]", a.labels[i / b.n], b.labels[i % b.n])).collect();
        let notation = Notation::Product(Box::new(a.notation.clone()), Box::new(b.notation.clone()), b.n);
        let name = format!("{}x{}", a.name, b.name);
        Self::from_fn(name, n, labels, notation, cap, |x, y| a.mul(x / b.n, y / b.n) * b.n + b.mul(x % b.n, y % b.n))
    }

    fn from_fn(
        name: String,
        n: usize,
        labels: Vec<String>,
        notation: Notation,
        cap: usize,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<FiniteGroup, GeometryError> {
        if n > cap {
            return Err(GeometryError::TooLarge { n, cap });
        }
        let table = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| f(a, b) as u32).collect();
        Self::build(name, n, table, labels, notation, cap)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels_of(&self, set: &[usize]) -> Vec<String> {
        set.iter().map(|&x| self.labels[x].clone()).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `g^-1 x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// Element named by `s`: its label, `#k` for index `k`, or any notation
    /// the group's elements accept (cycles in either `(1,2)` or `(12)` form,
    /// `r^k`/`sr^k`, `[a,b]` for products).
    pub fn element(&self, s: &str) -> Result<usize, GeometryError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let found = if let Some(k) = t.strip_prefix('#') {
            k.parse::<usize>().ok().filter(|&k| k < self.n)
        } else {
            self.labels.iter().position(|l| *l == t).or_else(|| lookup(&self.notation, &t))
        };
        found.ok_or_else(|| GeometryError::UnknownElement { group: self.name.clone(), element: s.to_string() })
    }

    /// Subgroup generated by `gens`, sorted.
    pub fn generate(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.n];
        inside[self.identity] = true;
        let mut elems = vec![self.identity];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    pub fn is_subgroup(&self, set: &[usize]) -> bool {
        let mut inside = vec![false; self.n];
        for &x in set {
            if x >= self.n {
                return false;
            }
            inside[x] = true;
        }
        inside[self.identity] && set.iter().all(|&a| inside[self.inv(a)] && set.iter().all(|&b| inside[self.mul(a, b)]))
    }
}

fn index_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn lookup(notation: &Notation, t: &str) -> Option<usize> {
    match notation {
        Notation::Index(n) => t.parse::<usize>().ok().filter(|k| k < n),
        Notation::Dihedral(n) => {
            let (refl, rest) = match t.strip_prefix('s') {
                Some(r) => (true, r),
                None => (false, t),
            };
            let k = match rest {
                "" | "e" | "1" => 0,
                "r" => 1,
                _ => rest.strip_prefix("r^")?.parse::<usize>().ok()? % n,
            };
            Some(if refl { n + k } else { k })
        }
        Notation::Perm { degree, index } => index.get(&parse_perm(t, *degree)?).copied(),
        Notation::Product(a, b, nb) => {
            let inner = t.strip_prefix('[')?.strip_suffix(']')?;
            let (x, y) = split_top_level(inner)?;
            Some(lookup(a, x)? * nb + lookup(b, y)?)
        }
    }
}

/// Splits `x,y` at the single comma outside any brackets.
fn split_top_level(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    let mut cut = None;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                if cut.is_some() {
                    return None;
                }
                cut = Some(i);
            }
            _ => {}
        }
    }
    cut.map(|i| (&s[..i], &s[i + 1..]))
}

/// Parses a product of cycles on `1..=degree`, applied left to right.
fn parse_perm(t: &str, degree: usize) -> Option<Vec<u8>> {
    let mut perm: Vec<u8> = (0..degree as u8).collect();
    if t == "e" || t == "()" {
        return Some(perm);
    }
    let mut rest = t;
    while !rest.is_empty() {
        let body = rest.strip_prefix('(')?;
        let close = body.find(')')?;
        let (inner, tail) = (&body[..close], &body[close + 1..]);
        rest = tail;
        let points: Vec<usize> = if inner.contains(',') {
            inner.split(',').map(|x| x.parse().ok()).collect::<Option<_>>()?
        } else {
            inner.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>()?
        };
        if points.iter().any(|&p| p == 0 || p > degree) {
            return None;
        }
        let mut seen = points.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != points.len() {
            return None;
        }
        let mut cycle: Vec<u8> = (0..degree as u8).collect();
        for (i, &p) in points.iter().enumerate() {
            cycle[p - 1] = (points[(i + 1) % points.len()] - 1) as u8;
        }
        perm = compose(&perm, &cycle);
    }
    Some(perm)
}

/// `a` then `b`.
fn compose(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().map(|&x| b[x as usize]).collect()
}

fn all_permutations(degree: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut p: Vec<u8> = (0..degree as u8).collect();
    loop {
        out.push(p.clone());
        // Next permutation in lexicographic order.
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("a larger element exists");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

fn is_even(p: &[u8]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        transpositions += len.max(1) - 1;
    }
    transpositions % 2 == 0
}

fn cycle_notation(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut s = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x] as usize;
        }
        s += &format!("({})", cycle.join(","));
    }
    if s.is_empty() {
        "()".into()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builders_have_expected_orders() {
        let v4 = FiniteGroup::product(&FiniteGroup::cyclic(2, 720).unwrap(), &FiniteGroup::cyclic(2, 720).unwrap(), 720).unwrap();
        assert_eq!(v4.order(), 4);
        assert!((0..4).all(|x| v4.mul(x, x) == v4.identity()));
        let s3 = FiniteGroup::symmetric(3, 720).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(FiniteGroup::alternating(5, 720).unwrap().order(), 60);
        assert_eq!(FiniteGroup::symmetric(6, 720).unwrap().order(), 720);
        assert_eq!(FiniteGroup::dihedral(4, 720).unwrap().order(), 8);
        assert!(matches!(FiniteGroup::symmetric(6, 100), Err(GeometryError::TooLarge { n: 720, cap: 100 })));
    }

    #[test]
    fn element_notations() {
        let s3 = FiniteGroup::symmetric(3, 720).unwrap();
        assert_eq!(s3.element("(12)").unwrap(), s3.element("(1,2)").unwrap());
        assert_eq!(s3.element("()").unwrap(), s3.identity());
        assert_eq!(s3.element("(1,2)(1,3)").unwrap(), s3.element("(1,2,3)").unwrap());
        assert_eq!(s3.label(s3.element("(132)").unwrap()), "(1,3,2)");
        assert!(s3.element("(14)").is_err());
        let d4 = FiniteGroup::dihedral(4, 720).unwrap();
        let (r, s) = (d4.element("r").unwrap(), d4.element("s").unwrap());
        assert_eq!(d4.mul(s, r), d4.element("sr").unwrap());
        assert_eq!(d4.mul(r, s), d4.element("sr^3").unwrap());
        let p = FiniteGroup::product(&s3, &FiniteGroup::cyclic(3, 720).unwrap(), 720).unwrap();
        let x = p.element("[(1,2),2]").unwrap();
        assert_eq!(p.label(x), "[(1,2),2]");
        assert_eq!(p.element("[(12),2]").unwrap(), x);
        assert_eq!(p.element("#5").unwrap(), 5);
    }

    #[test]
    fn bad_tables_are_rejected() {
        assert!(FiniteGroup::from_table(&[vec![0, 1], vec![1, 1]], 720).is_err());
        assert!(FiniteGroup::from_table(&[vec![0, 1], vec![1, 0]], 720).is_ok());
        // A Latin square without associativity: x*y = (2x - y) mod 3 has no identity.
        let rows: Vec<Vec<usize>> = (0..3).map(|x| (0..3).map(|y| (2 * x + 3 - y) % 3).collect()).collect();
        assert!(FiniteGroup::from_table(&rows, 720).is_err());
    }

    #[test]
    fn generated_subgroups() {
        let s4 = FiniteGroup::symmetric(4, 720).unwrap();
        let gens = [s4.element("(1,2)").unwrap(), s4.element("(1,2,3,4)").unwrap()];
        assert_eq!(s4.generate(&gens).len(), 24);
        let klein = s4.generate(&[s4.element("(12)(34)").unwrap(), s4.element("(13)(24)").unwrap()]);
        assert_eq!(klein.len(), 4);
        assert!(s4.is_subgroup(&klein));
        assert!(!s4.is_subgroup(&[s4.identity(), s4.element("(123)").unwrap()]));
    }
}
