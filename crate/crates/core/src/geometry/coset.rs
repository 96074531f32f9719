//! Point-line geometries on the elements of a group, built from subgroups
//! and their translates.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{FiniteGroup, GeometryError};

/// Points `0..points`; each line is a sorted list of points and the line
/// list is sorted and free of repeats.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceGeometry {
    pub points: usize,
    pub lines: Vec<Vec<usize>>,
}

/// Two points on two different lines, violating the partial-linear-space
/// axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PlsViolation {
    pub points: (usize, usize),
    pub lines: (usize, usize),
}

/// A point off a line that is collinear with `collinear` points of it
/// (a generalised quadrangle needs exactly one).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GqViolation {
    pub point: usize,
    pub line: usize,
    pub collinear: usize,
}

impl IncidenceGeometry {
    pub fn new(points: usize, lines: impl IntoIterator<Item = Vec<usize>>) -> IncidenceGeometry {
        let set: BTreeSet<Vec<usize>> = lines
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        IncidenceGeometry { points, lines: set.into_iter().collect() }
    }

    pub fn lines_through(&self, p: usize) -> Vec<usize> {
        (0..self.lines.len()).filter(|&i| self.lines[i].binary_search(&p).is_ok()).collect()
    }

    pub fn line_index(&self, line: &[usize]) -> Option<usize> {
        let mut l = line.to_vec();
        l.sort_unstable();
        self.lines.binary_search(&l).ok()
    }

    /// `join[a * n + b]`: some line through distinct `a` and `b`, if any.
    fn joins(&self) -> (Vec<Option<u32>>, Option<PlsViolation>) {
        let n = self.points;
        let mut join = vec![None; n * n];
        let mut bad = None;
        for (i, l) in self.lines.iter().enumerate() {
            for &a in l {
                for &b in l {
                    if a == b {
                        continue;
                    }
                    match join[a * n + b] {
                        Some(j) if bad.is_none() && a < b => {
                            bad = Some(PlsViolation { points: (a, b), lines: (j as usize, i) });
                        }
                        Some(_) => {}
                        None => join[a * n + b] = Some(i as u32),
                    }
                }
            }
        }
        (join, bad)
    }

    /// First pair of points on two lines, or `None` for a partial linear space.
    pub fn pls_violation(&self) -> Option<PlsViolation> {
        self.joins().1
    }

    /// Three pairwise collinear points not on a common line.
    pub fn triangle(&self) -> Option<[usize; 3]> {
        let n = self.points;
        let (join, _) = self.joins();
        let nbrs: Vec<Vec<usize>> = (0..n).map(|a| (0..n).filter(|&b| join[a * n + b].is_some()).collect()).collect();
        for a in 0..n {
            for &b in nbrs[a].iter().filter(|&&b| b > a) {
                for &c in nbrs[b].iter().filter(|&&c| c > b) {
                    if let (Some(ab), Some(_)) = (join[a * n + b], join[a * n + c]) {
                        if self.lines[ab as usize].binary_search(&c).is_err() {
                            return Some([a, b, c]);
                        }
                    }
                }
            }
        }
        None
    }

    /// Exhaustive check of the quadrangle axiom over every non-incident
    /// point-line pair.
    pub fn gq_violation(&self) -> Option<GqViolation> {
        let n = self.points;
        let (join, _) = self.joins();
        for point in 0..n {
            for (line, l) in self.lines.iter().enumerate() {
                if l.binary_search(&point).is_ok() {
                    continue;
                }
                let collinear = l.iter().filter(|&&q| join[point * n + q].is_some()).count();
                if collinear != 1 {
                    return Some(GqViolation { point, line, collinear });
                }
            }
        }
        None
    }

    /// Number of lines through each point.
    pub fn point_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.points];
        for l in &self.lines {
            for &p in l {
                deg[p] += 1;
            }
        }
        deg
    }
}

fn right_translate(g: &FiniteGroup, set: &[usize], x: usize) -> Vec<usize> {
    let mut v: Vec<usize> = set.iter().map(|&a| g.mul(a, x)).collect();
    v.sort_unstable();
    v
}

fn left_translate(g: &FiniteGroup, x: usize, set: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = set.iter().map(|&a| g.mul(x, a)).collect();
    v.sort_unstable();
    v
}

fn require_subgroup(g: &FiniteGroup, set: &[usize], what: &str) -> Result<(), GeometryError> {
    if g.is_subgroup(set) {
        Ok(())
    } else {
        Err(GeometryError::NotSubgroup(format!("{what} {{{}}} is not a subgroup of {}", g.labels_of(set).join(";"), g.name())))
    }
}

fn intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.contains(x)).collect()
}

/// A geometry on the elements of a group together with its axiom checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetGeometry {
    pub geometry: IncidenceGeometry,
    pub triangle: Option<[usize; 3]>,
}

/// Lines are all right translates `L g` of the given subgroups.
pub fn coset_geometry(g: &FiniteGroup, subgroups: &[Vec<usize>]) -> Result<CosetGeometry, GeometryError> {
    let subs: Vec<Vec<usize>> = subgroups
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s.dedup();
            s
        })
        .collect();
    for (i, s) in subs.iter().enumerate() {
        require_subgroup(g, s, &format!("line {}", i + 1))?;
    }
    for i in 0..subs.len() {
        for j in i + 1..subs.len() {
            if let Some(&x) = intersection(&subs[i], &subs[j]).iter().find(|&&x| x != g.identity()) {
                return Err(GeometryError::SharedElement { first: i + 1, second: j + 1, element: g.label(x).to_string() });
            }
        }
    }
    let lines = subs.iter().flat_map(|s| (0..g.order()).map(move |x| right_translate(g, s, x)));
    let geometry = IncidenceGeometry::new(g.order(), lines);
    if let Some(v) = geometry.pls_violation() {
        return Err(GeometryError::NotPartialLinear(v));
    }
    let triangle = geometry.triangle();
    Ok(CosetGeometry { geometry, triangle })
}

/// Outcome of checking both parts of the line-stabiliser lemma on one line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabiliserReport {
    pub line: Vec<usize>,
    /// `{m : line * m = line}`.
    pub stabiliser: Vec<usize>,
    pub stabiliser_in_line: bool,
    /// Distinct left cosets `h M_l` for `h` in the line.
    pub left_cosets: Vec<Vec<usize>>,
    pub union_of_left_cosets: bool,
    pub triangle_free: bool,
    pub stabiliser_nontrivial: bool,
    /// Every left multiplication maps lines to lines.
    pub left_closed: bool,
    /// An element whose left multiplication sends some line off the line set.
    pub left_closure_failure: Option<usize>,
    /// Hypotheses of part (ii) that fail; empty when all hold.
    pub unmet: Vec<String>,
    pub stabiliser_equals_line: bool,
}

impl StabiliserReport {
    /// Part (i) holds, and part (ii) holds whenever its hypotheses do.
    pub fn consistent(&self) -> bool {
        self.stabiliser_in_line && self.union_of_left_cosets && (!self.unmet.is_empty() || self.stabiliser_equals_line)
    }
}

pub fn line_stabiliser_check(g: &FiniteGroup, geom: &CosetGeometry, line: usize) -> Result<StabiliserReport, GeometryError> {
    let lines = &geom.geometry.lines;
    let l = lines.get(line).ok_or(GeometryError::NoSuchLine(line))?.clone();
    if l.binary_search(&g.identity()).is_err() {
        return Err(GeometryError::LineMissesIdentity(g.labels_of(&l).join(";")));
    }
    let stabiliser: Vec<usize> = (0..g.order()).filter(|&m| right_translate(g, &l, m) == l).collect();
    let stabiliser_in_line = stabiliser.iter().all(|m| l.binary_search(m).is_ok());
    let left_cosets: Vec<Vec<usize>> =
        l.iter().map(|&h| left_translate(g, h, &stabiliser)).collect::<BTreeSet<_>>().into_iter().collect();
    let mut covered: Vec<usize> = left_cosets.iter().flatten().copied().collect();
    covered.sort_unstable();
    let union_of_left_cosets = covered == l && left_cosets.iter().any(|c| *c == stabiliser);
    let left_closure_failure =
        (0..g.order()).find(|&h| lines.iter().any(|x| geom.geometry.line_index(&left_translate(g, h, x)).is_none()));
    let left_closed = left_closure_failure.is_none();
    let triangle_free = geom.triangle.is_none();
    let stabiliser_nontrivial = stabiliser.len() > 1;
    let mut unmet = Vec::new();
    if !triangle_free {
        unmet.push("the geometry contains a triangle".to_string());
    }
    if !stabiliser_nontrivial {
        unmet.push("the line stabiliser is trivial".to_string());
    }
    if let Some(h) = left_closure_failure {
        unmet.push(format!("hypothesis (ii) unmet: left multiplication by {} does not preserve the line set", g.label(h)));
    }
    Ok(StabiliserReport {
        stabiliser_equals_line: stabiliser == l,
        line: l,
        stabiliser,
        stabiliser_in_line,
        left_cosets,
        union_of_left_cosets,
        triangle_free,
        stabiliser_nontrivial,
        left_closed,
        left_closure_failure,
        unmet,
    })
}

/// The `(s, 1)` grid on the product set of two subgroups.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Grid {
    pub s: usize,
    /// Elements of the product set, in point order.
    pub elements: Vec<usize>,
    /// Lines over point indices `0..(s+1)^2`.
    pub geometry: IncidenceGeometry,
    pub line_sizes_ok: bool,
    pub point_degrees_ok: bool,
    pub gq_violation: Option<GqViolation>,
}

impl Grid {
    pub fn is_grid(&self) -> bool {
        self.line_sizes_ok && self.point_degrees_ok && self.gq_violation.is_none() && self.geometry.lines.len() == 2 * (self.s + 1)
    }
}

fn check_pair(g: &FiniteGroup, l1: &[usize], l2: &[usize]) -> Result<(Vec<usize>, Vec<usize>), GeometryError> {
    let (mut a, mut b) = (l1.to_vec(), l2.to_vec());
    a.sort_unstable();
    a.dedup();
    b.sort_unstable();
    b.dedup();
    require_subgroup(g, &a, "first subgroup")?;
    require_subgroup(g, &b, "second subgroup")?;
    if let Some(&x) = intersection(&a, &b).iter().find(|&&x| x != g.identity()) {
        return Err(GeometryError::SharedElement { first: 1, second: 2, element: g.label(x).to_string() });
    }
    if a.len() != b.len() {
        return Err(GeometryError::Precondition(format!("subgroups have different orders {} and {}", a.len(), b.len())));
    }
    Ok((a, b))
}

pub fn grid_subquadrangle(g: &FiniteGroup, l1: &[usize], l2: &[usize]) -> Result<Grid, GeometryError> {
    let (a, b) = check_pair(g, l1, l2)?;
    let k = a.len();
    let elements: Vec<usize> = a.iter().flat_map(|&x| b.iter().map(move |&y| g.mul(x, y))).collect::<BTreeSet<_>>().into_iter().collect();
    if elements.len() != k * k {
        return Err(GeometryError::Degenerate { product: elements.len(), expected: k * k });
    }
    let point = |x: usize| elements.binary_search(&x).expect("line inside the product set");
    let lines = a
        .iter()
        .map(|&g1| left_translate(g, g1, &b))
        .chain(b.iter().map(|&g2| right_translate(g, &a, g2)))
        .map(|l| l.into_iter().map(point).collect::<Vec<_>>());
    let geometry = IncidenceGeometry::new(elements.len(), lines);
    let line_sizes_ok = geometry.lines.iter().all(|l| l.len() == k);
    let point_degrees_ok = geometry.point_degrees().iter().all(|&d| d == 2);
    let gq_violation = geometry.gq_violation();
    Ok(Grid { s: k - 1, elements, geometry, line_sizes_ok, point_degrees_ok, gq_violation })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleCoset {
    /// Smallest element of the double coset.
    pub representative: usize,
    pub size: usize,
    /// `|l2 ∩ r^-1 l1 r|` for the representative `r`.
    pub conjugate_meet: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleCosetProfile {
    pub cosets: Vec<DoubleCoset>,
    /// Sizes in representative order.
    pub sizes: Vec<usize>,
    pub total: usize,
    pub partition_ok: bool,
    /// Every element `x` lies in a double coset of size
    /// `|l1| |l2| / |l2 ∩ x^-1 l1 x|`.
    pub size_law_ok: bool,
}

pub fn double_coset_profile(g: &FiniteGroup, l1: &[usize], l2: &[usize]) -> Result<DoubleCosetProfile, GeometryError> {
    let (a, b) = check_pair(g, l1, l2)?;
    let n = g.order();
    let mut owner = vec![usize::MAX; n];
    let mut cosets = Vec::new();
    let mut sizes_of = Vec::new();
    let meet = |x: usize| {
        let conj: Vec<usize> = a.iter().map(|&y| g.conj(y, x)).collect();
        b.iter().filter(|z| conj.contains(z)).count()
    };
    for r in 0..n {
        if owner[r] != usize::MAX {
            continue;
        }
        let members: BTreeSet<usize> = a.iter().flat_map(|&x| b.iter().map(move |&y| g.mul(g.mul(x, r), y))).collect();
        let idx = cosets.len();
        let mut overlap = false;
        for &m in &members {
            overlap |= owner[m] != usize::MAX;
            owner[m] = idx;
        }
        if overlap {
            return Err(GeometryError::Precondition("double cosets overlap".into()));
        }
        cosets.push(DoubleCoset { representative: r, size: members.len(), conjugate_meet: meet(r) });
        sizes_of.push(members.len());
    }
    let total: usize = sizes_of.iter().sum();
    let partition_ok = total == n && owner.iter().all(|&o| o != usize::MAX);
    let size_law_ok = (0..n).all(|x| sizes_of[owner[x]] * meet(x) == a.len() * b.len());
    Ok(DoubleCosetProfile { cosets, sizes: sizes_of, total, partition_ok, size_law_ok })
}
