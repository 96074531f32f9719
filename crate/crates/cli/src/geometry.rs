//! `hgq geometry ...`: grids, line stabilisers and double cosets on groups
//! given in the text format of `hgq::geometry::spec`.

use std::fmt::Write as _;

use clap::{Args, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use hgq::geometry::{
    coset_geometry, double_coset_profile, grid_subquadrangle, line_stabiliser_check, parse_geometry_file, parse_group,
    parse_subgroup, FiniteGroup, GeometryInput, DEFAULT_CAP,
};
use hgq::report::{ReportMode, VerificationReport};

use crate::UsageError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GeometryCmd {
    /// Coset geometry of right translates: axioms and triangles.
    Coset,
    /// The (s,1) grid on the product of two subgroups.
    Grid,
    /// Line stabilisers of the lines through the identity.
    Stabiliser,
    /// Double cosets of two subgroups.
    Doublecosets,
}

#[derive(Args, Debug)]
pub struct GeometryArgs {
    #[arg(value_enum)]
    cmd: GeometryCmd,
    /// Group expression, e.g. `Z(4)xZ(4)` or `Sym(3)`.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    group: Option<String>,
    /// Subgroups as `<g1;g2>` (generated) or `{a;b}` (element set).
    #[arg(long, num_args = 1.., requires = "group")]
    subgroups: Vec<String>,
    /// Geometry file with `group:`/`table:` and `subgroup:` entries.
    #[arg(long)]
    file: Option<std::path::PathBuf>,
    /// Largest group order accepted.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
}

fn load(args: &GeometryArgs) -> Result<GeometryInput, UsageError> {
    match (&args.file, &args.group) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            Ok(parse_geometry_file(&text, args.cap)?)
        }
        (None, Some(spec)) => {
            let group = parse_group(spec, args.cap)?;
            let subgroups = args.subgroups.iter().map(|s| parse_subgroup(&group, s)).collect::<Result<_, _>>()?;
            Ok(GeometryInput { group, subgroups })
        }
        (None, None) => Err(UsageError("give --group or --file".into())),
    }
}

fn two(input: &GeometryInput) -> Result<(&[usize], &[usize]), UsageError> {
    match input.subgroups.as_slice() {
        [a, b] => Ok((a, b)),
        other => Err(UsageError(format!("expected exactly 2 subgroups, got {}", other.len()))),
    }
}

fn names(g: &FiniteGroup, set: &[usize]) -> Vec<String> {
    g.labels_of(set)
}

fn braces(g: &FiniteGroup, set: &[usize]) -> String {
    format!("{{{}}}", names(g, set).join(", "))
}

#[derive(Serialize)]
struct Entry {
    group: String,
    order: usize,
    subgroups: Vec<Vec<String>>,
    result: Value,
}

pub fn run(args: &GeometryArgs) -> Result<VerificationReport, UsageError> {
    let input = load(args)?;
    let g = &input.group;
    let mut text = format!("{} (order {})\n", g.name(), g.order());
    for (i, s) in input.subgroups.iter().enumerate() {
        let _ = writeln!(text, "  subgroup {}: {}", i + 1, braces(g, s));
    }
    let mut failures = Vec::new();
    let result = match args.cmd {
        GeometryCmd::Coset => {
            let cg = coset_geometry(g, &input.subgroups)?;
            let lines: Vec<Vec<String>> = cg.geometry.lines.iter().map(|l| names(g, l)).collect();
            let _ = writeln!(text, "  {} points, {} lines, partial linear space", cg.geometry.points, lines.len());
            match cg.triangle {
                Some(t) => {
                    let _ = writeln!(text, "  triangle: {}", braces(g, &t));
                }
                None => text.push_str("  triangle-free\n"),
            }
            let gq = cg.geometry.gq_violation();
            let _ = writeln!(text, "  quadrangle axiom: {}", if gq.is_none() { "holds" } else { "fails" });
            json!({ "points": cg.geometry.points, "lines": lines, "triangle": cg.triangle.map(|t| names(g, &t)), "gq_axiom": gq.is_none() })
        }
        GeometryCmd::Grid => {
            let (a, b) = two(&input)?;
            let grid = grid_subquadrangle(g, a, b)?;
            let _ = writeln!(
                text,
                "  order ({}, 1): {} points, {} lines; line sizes {}, point degrees {}, quadrangle axiom {}",
                grid.s,
                grid.elements.len(),
                grid.geometry.lines.len(),
                ok(grid.line_sizes_ok),
                ok(grid.point_degrees_ok),
                ok(grid.gq_violation.is_none())
            );
            if !grid.is_grid() {
                failures.push(format!("product of the subgroups is not an ({}, 1) grid", grid.s));
            }
            let lines: Vec<Vec<String>> =
                grid.geometry.lines.iter().map(|l| l.iter().map(|&p| g.label(grid.elements[p]).to_string()).collect()).collect();
            json!({
                "s": grid.s,
                "points": names(g, &grid.elements),
                "lines": lines,
                "line_sizes_ok": grid.line_sizes_ok,
                "point_degrees_ok": grid.point_degrees_ok,
                "gq_violation": grid.gq_violation,
                "is_grid": grid.is_grid(),
            })
        }
        GeometryCmd::Stabiliser => {
            let cg = coset_geometry(g, &input.subgroups)?;
            let mut reports = Vec::new();
            for s in &input.subgroups {
                let line = cg.geometry.line_index(s).expect("each subgroup is a line");
                let r = line_stabiliser_check(g, &cg, line)?;
                let _ = writeln!(
                    text,
                    "  line {}: stabiliser {}; inside the line {}; union of left cosets {}; equals the line {}",
                    braces(g, &r.line),
                    braces(g, &r.stabiliser),
                    ok(r.stabiliser_in_line),
                    ok(r.union_of_left_cosets),
                    ok(r.stabiliser_equals_line)
                );
                for u in &r.unmet {
                    let _ = writeln!(text, "    {u}");
                }
                if !r.consistent() {
                    failures.push(format!("line {}: stabiliser check fails", braces(g, &r.line)));
                }
                reports.push(json!({
                    "line": names(g, &r.line),
                    "stabiliser": names(g, &r.stabiliser),
                    "left_cosets": r.left_cosets.iter().map(|c| names(g, c)).collect::<Vec<_>>(),
                    "stabiliser_in_line": r.stabiliser_in_line,
                    "union_of_left_cosets": r.union_of_left_cosets,
                    "triangle_free": r.triangle_free,
                    "left_closed": r.left_closed,
                    "unmet": r.unmet,
                    "stabiliser_equals_line": r.stabiliser_equals_line,
                }));
            }
            Value::Array(reports)
        }
        GeometryCmd::Doublecosets => {
            let (a, b) = two(&input)?;
            let p = double_coset_profile(g, a, b)?;
            let _ = writeln!(
                text,
                "  {} double cosets, sizes {:?}, total {}; partition {}, size law {}",
                p.cosets.len(),
                p.sizes,
                p.total,
                ok(p.partition_ok),
                ok(p.size_law_ok)
            );
            if !(p.partition_ok && p.size_law_ok) {
                failures.push("double-coset partition or size law fails".into());
            }
            let cosets: Vec<Value> = p
                .cosets
                .iter()
                .map(|c| json!({ "representative": g.label(c.representative), "size": c.size, "conjugate_meet": c.conjugate_meet }))
                .collect();
            json!({ "cosets": cosets, "sizes": p.sizes, "total": p.total, "partition_ok": p.partition_ok, "size_law_ok": p.size_law_ok })
        }
    };
    let _ = writeln!(text, "Result: {}", if failures.is_empty() { "PASS" } else { "FAIL" });
    let entry = Entry {
        group: g.name().to_string(),
        order: g.order(),
        subgroups: input.subgroups.iter().map(|s| names(g, s)).collect(),
        result,
    };
    Ok(VerificationReport::plain(ReportMode::Geometry, &[entry], text, failures))
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAILS"
    }
}
