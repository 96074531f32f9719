//! Text formats for groups and subgroups.
//!
//! ```text
//! group    := factor ("x" factor)*
//! factor   := "Z(" n ")" | "D(" n ")" | "Sym(" n ")" | "Alt(" n ")"
//! subgroup := "<" element (";" element)* ">"     generated by the elements
//!           | "{" element (";" element)* "}"     explicit element set
//! ```
//!
//! `D(n)` has order `2n`. Elements are written as the group prints them:
//! integers for `Z(n)` and tables, cycles such as `(1,2,3)` or `(123)` for
//! permutations, `e`, `r^k`, `s`, `sr^k` for dihedral groups and `[a,b]` for
//! products; `#k` names the element with index `k` in any group.
//!
//! A geometry file holds one `group:` line or a `table:` block (rows of
//! integers closed by `end`), followed by `subgroup:` lines. Blank lines and
//! text after `#` at the start of a line are ignored.

use super::{FiniteGroup, GeometryError};

fn parse_factor(s: &str, cap: usize) -> Result<FiniteGroup, GeometryError> {
    let bad = || GeometryError::Parse(format!("unknown group factor {s:?}"));
    let open = s.find('(').ok_or_else(bad)?;
    let arg = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
    let n: usize = arg.trim().parse().map_err(|_| bad())?;
    match s[..open].trim() {
        "Z" | "C" => FiniteGroup::cyclic(n, cap),
        "D" => FiniteGroup::dihedral(n, cap),
        "Sym" | "S" => FiniteGroup::symmetric(n, cap),
        "Alt" | "A" => FiniteGroup::alternating(n, cap),
        _ => Err(bad()),
    }
}

/// Parses a group expression such as `Z(4)xZ(4)` or `Sym(3)`.
pub fn parse_group(spec: &str, cap: usize) -> Result<FiniteGroup, GeometryError> {
    let mut factors = spec.split('x').map(|f| parse_factor(f.trim(), cap));
    let first = factors.next().ok_or_else(|| GeometryError::Parse("empty group expression".into()))??;
    factors.try_fold(first, |acc, f| FiniteGroup::product(&acc, &f?, cap))
}

/// Parses a subgroup of `g`, returned as sorted element indices.
pub fn parse_subgroup(g: &FiniteGroup, spec: &str) -> Result<Vec<usize>, GeometryError> {
    let t = spec.trim();
    let elements = |body: &str| -> Result<Vec<usize>, GeometryError> {
        body.split(';').map(str::trim).filter(|x| !x.is_empty()).map(|x| g.element(x)).collect()
    };
    if let Some(body) = t.strip_prefix('<').and_then(|b| b.strip_suffix('>')) {
        Ok(g.generate(&elements(body)?))
    } else if let Some(body) = t.strip_prefix('{').and_then(|b| b.strip_suffix('}')) {
        let mut set = elements(body)?;
        set.sort_unstable();
        set.dedup();
        Ok(set)
    } else {
        Err(GeometryError::Parse(format!("subgroup {spec:?} must be <gens> or {{elements}}")))
    }
}

/// A group and subgroups read from a geometry file.
#[derive(Debug, Clone)]
pub struct GeometryInput {
    pub group: FiniteGroup,
    pub subgroups: Vec<Vec<usize>>,
}

pub fn parse_geometry_file(text: &str, cap: usize) -> Result<GeometryInput, GeometryError> {
    let mut group = None;
    let mut subgroup_specs = Vec::new();
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    while let Some((no, line)) = lines.next() {
        let err = |m: String| GeometryError::Parse(format!("line {no}: {m}"));
        let (key, value) = line.split_once(':').ok_or_else(|| err(format!("expected `key: value`, found {line:?}")))?;
        match key.trim() {
            "group" | "table" if group.is_some() => return Err(err("group given twice".into())),
            "group" => group = Some(parse_group(value, cap)?),
            "table" => {
                let mut rows = Vec::new();
                loop {
                    let (rno, row) = lines.next().ok_or_else(|| err("table block is not closed by `end`".into()))?;
                    if row == "end" {
                        break;
                    }
                    let parsed: Result<Vec<usize>, _> = row.split_whitespace().map(str::parse).collect();
                    rows.push(parsed.map_err(|_| GeometryError::Parse(format!("line {rno}: table row {row:?} is not integers")))?);
                }
                group = Some(FiniteGroup::from_table(&rows, cap)?);
            }
            "subgroup" => subgroup_specs.push(value.trim().to_string()),
            other => return Err(err(format!("unknown key {other:?}"))),
        }
    }
    let group = group.ok_or_else(|| GeometryError::Parse("no `group:` line or `table:` block".into()))?;
    let subgroups = subgroup_specs.iter().map(|s| parse_subgroup(&group, s)).collect::<Result<_, _>>()?;
    Ok(GeometryInput { group, subgroups })
}
