//! Text, Markdown and JSON renderings of library results.

use flagquot::chowx::{boundary_classes, intersection_table, mori_cone, nef_generators, pic_form, DivClass, BASIS};
use flagquot::cremona::{base_points, RatMapPn};
use flagquot::polyhedra::{normal_fan, Fan2D};
use flagquot::quotfan::{check_geometric_subfan, reference_projection, reference_quotient_fan, ChartSubfan};
use flagquot::ratlin::fmt_rat;
use flagquot::toricsurf::{cone_singularity, surface_invariants, ToricSurfaceReport};
use flagquot::verify::Check;
use flagquot::weylc2::{octagon, BoundaryLabel};
use flagquot::{Rat, RatMat, Result};
use serde_json::{json, Value};

pub const SCHEMA: u32 = 1;

/// A rendered artifact: Markdown/text and JSON forms.
pub struct Artifact {
    pub text: String,
    pub json: Value,
}

fn r(x: &Rat) -> String {
    fmt_rat(x)
}

fn labels() -> Vec<&'static str> {
    BoundaryLabel::ALL.iter().map(|l| l.name()).collect()
}

fn md_table(header: &[String], rows: &[Vec<String>]) -> String {
    let mut s = format!("| {} |\n", header.join(" | "));
    s += &format!("|{}\n", "---|".repeat(header.len()));
    for row in rows {
        s += &format!("| {} |\n", row.join(" | "));
    }
    s
}

fn matrix_rows(m: &RatMat) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|row| row.iter().map(r).collect()).collect()
}

fn labelled(names: &[&str], rows: Vec<Vec<String>>) -> Vec<Vec<String>> {
    names
        .iter()
        .zip(rows)
        .map(|(n, mut row)| {
            row.insert(0, n.to_string());
            row
        })
        .collect()
}

fn class_strings(c: &DivClass) -> Vec<String> {
    c.coords().iter().map(r).collect()
}

fn class_text(c: &DivClass) -> String {
    format!("({})", class_strings(c).join(", "))
}

pub fn intersections() -> Artifact {
    let m = intersection_table();
    let names = labels();
    let mut header = vec!["".to_string()];
    header.extend(names.iter().map(|s| s.to_string()));
    Artifact {
        text: md_table(&header, &labelled(&names, matrix_rows(&m))),
        json: json!({ "schema": SCHEMA, "table": "intersections", "labels": names, "rows": matrix_rows(&m) }),
    }
}

pub fn coordinates() -> Artifact {
    let classes = boundary_classes();
    let names = labels();
    let mut header = vec!["".to_string()];
    header.extend(BASIS.iter().map(|s| s.to_string()));
    let rows: Vec<Vec<String>> = classes.iter().map(|(_, c)| class_strings(c)).collect();
    Artifact {
        text: md_table(&header, &labelled(&names, rows.clone())),
        json: json!({ "schema": SCHEMA, "table": "coordinates", "basis": BASIS, "labels": names, "rows": rows }),
    }
}

pub fn form() -> Artifact {
    let m = pic_form();
    let mut header = vec!["".to_string()];
    header.extend(BASIS.iter().map(|s| s.to_string()));
    Artifact {
        text: md_table(&header, &labelled(&BASIS, matrix_rows(&m))),
        json: json!({ "schema": SCHEMA, "table": "form", "basis": BASIS, "rows": matrix_rows(&m) }),
    }
}

pub fn mori_faces() -> Result<Artifact> {
    let m = mori_cone()?;
    let mut facets: Vec<(Vec<&str>, String)> =
        m.facets.iter().map(|f| (f.labels.iter().map(|l| l.name()).collect(), class_text(&f.support))).collect();
    facets.sort_by(|a, b| (a.0.len(), &a.0).cmp(&(b.0.len(), &b.0)));
    let rows: Vec<Vec<String>> =
        facets.iter().map(|(l, s)| vec![l.join(", "), l.len().to_string(), s.clone()]).collect();
    let (v, e, f) = m.f_vector();
    let mut text = md_table(&["face".into(), "vertices".into(), "supporting nef class".into()], &rows);
    text += &format!("\nV={v} E={e} F={f}\n");
    let json_faces: Vec<Value> = facets.iter().map(|(l, s)| json!({ "labels": l, "support": s })).collect();
    Ok(Artifact {
        text,
        json: json!({ "schema": SCHEMA, "table": "mori-faces", "f_vector": [v, e, f], "faces": json_faces }),
    })
}

pub fn nef_gens() -> Artifact {
    let mut gens: Vec<DivClass> = nef_generators();
    gens.sort_by_key(DivClass::ray);
    let zeros = |d: &DivClass| -> Vec<&'static str> {
        boundary_classes()
            .iter()
            .filter(|(_, c)| d.dot(c) == Rat::from_integer(0.into()))
            .map(|(l, _)| l.name())
            .collect()
    };
    let rows: Vec<Vec<String>> = gens.iter().map(|d| vec![class_text(d), zeros(d).join(", ")]).collect();
    let json_rows: Vec<Value> =
        gens.iter().map(|d| json!({ "class": class_strings(d), "vanishes_on": zeros(d) })).collect();
    Artifact {
        text: md_table(&[format!("class in ({})", BASIS.join(", ")), "vanishes on".into()], &rows),
        json: json!({ "schema": SCHEMA, "table": "nef-gens", "basis": BASIS, "generators": json_rows }),
    }
}

fn fan_lines(f: &Fan2D) -> Result<(Vec<String>, Vec<Value>)> {
    let mut lines = Vec::new();
    let mut cones = Vec::new();
    for (u, v) in f.cone_rays() {
        let t = cone_singularity(u, v)?;
        lines.push(format!("cone {u} {v}: {t}"));
        cones.push(json!({ "rays": [u.to_i64(), v.to_i64()], "type": t.to_string() }));
    }
    Ok((lines, cones))
}

fn fan_artifact(kind: &str, f: &Fan2D, extra: Vec<String>, extra_json: Value) -> Result<Artifact> {
    let rays: Vec<String> = f.rays().iter().map(ToString::to_string).collect();
    let (cone_lines, cones) = fan_lines(f)?;
    let mut text = format!("rays: {}\n", rays.join(" "));
    for l in cone_lines.iter().chain(&extra) {
        text += l;
        text.push('\n');
    }
    let rays_json: Vec<Vec<i64>> = f.rays().iter().map(|p| p.to_i64()).collect();
    Ok(Artifact {
        text,
        json: json!({ "schema": SCHEMA, "fan": kind, "rays": rays_json, "cones": cones, "extra": extra_json }),
    })
}

fn surface_lines(rep: &ToricSurfaceReport) -> (Vec<String>, Value) {
    let selfs: Vec<String> = rep.self_intersections.iter().map(r).collect();
    let mut lines = vec![
        format!("smooth: {}", rep.smooth),
        format!("self-intersections: {}", selfs.join(" ")),
        format!("K^2: {}", r(&rep.canonical_self_intersection)),
        "intersection matrix:".to_string(),
    ];
    for row in matrix_rows(&rep.intersection_matrix) {
        lines.push(format!("  {}", row.join(" ")));
    }
    let j = json!({
        "smooth": rep.smooth,
        "self_intersections": selfs,
        "k_squared": r(&rep.canonical_self_intersection),
        "intersection_matrix": matrix_rows(&rep.intersection_matrix),
    });
    (lines, j)
}

pub fn fan_quotient() -> Result<Artifact> {
    fan_artifact("quotient", &reference_quotient_fan()?, vec![], Value::Null)
}

pub fn fan_xe() -> Result<Artifact> {
    let f = reference_quotient_fan()?;
    let (lines, j) = surface_lines(&surface_invariants(&f)?);
    fan_artifact("xe", &f, lines, j)
}

pub fn fan_octagon() -> Result<Artifact> {
    let p = octagon();
    let f = normal_fan(&p);
    let (mut lines, j) = surface_lines(&surface_invariants(&f)?);
    let verts: Vec<String> = p.to_i64().iter().map(|(x, y)| format!("({x},{y})")).collect();
    lines.insert(0, format!("polygon: {}", verts.join(" ")));
    fan_artifact("octagon", &f, lines, j)
}

pub fn fan_subfan(c: ChartSubfan) -> Result<Artifact> {
    let s = check_geometric_subfan(&c.cones(), &reference_projection())?;
    let cones: Vec<String> = c
        .cones()
        .iter()
        .map(|k| format!("{{{}}}", k.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    let lines = vec![
        format!("subfan {}: {}", c.name(), cones.join(" ")),
        format!("ok: {} injective: {} is_fan: {}", s.ok, s.injective, s.is_fan),
    ];
    let j = json!({ "subfan": c.name(), "ok": s.ok, "injective": s.injective, "is_fan": s.is_fan });
    fan_artifact(c.name(), &s.image, lines, j)
}

pub fn map(word: &str, m: &RatMapPn) -> Result<Artifact> {
    let base: Vec<String> = base_points(m)?
        .iter()
        .map(|p| format!("({})", p.iter().map(ToString::to_string).collect::<Vec<_>>().join(":")))
        .collect();
    let text = format!(
        "map: {m}\ndegree: {}\nbase points: {}\n",
        m.degree(),
        if base.is_empty() { "none".into() } else { base.join(" ") }
    );
    Ok(Artifact {
        text,
        json: json!({ "schema": SCHEMA, "word": word, "components": m.to_texts(), "degree": m.degree(), "base_points": base }),
    })
}

pub fn check_line(c: &Check) -> String {
    let status = if c.pass { "PASS" } else { "FAIL" };
    let time = c.elapsed_us.map(|t| format!(" [{t} us]")).unwrap_or_default();
    if c.pass {
        format!("{status} {}{time}", c.id)
    } else {
        format!("{status} {}{time}\n  expected: {}\n  actual:   {}", c.id, c.expected, c.actual)
    }
}

pub fn verify_text(checks: &[Check]) -> String {
    let mut s: String = checks.iter().map(|c| check_line(c) + "\n").collect();
    let passed = checks.iter().filter(|c| c.pass).count();
    s += &format!("{passed}/{} checks passed\n", checks.len());
    s
}

pub fn verify_json(checks: &[Check]) -> Value {
    let passed = checks.iter().filter(|c| c.pass).count();
    json!({ "schema": SCHEMA, "passed": passed, "total": checks.len(), "checks": checks })
}

/// Everything at once.
pub fn emit(checks: &[Check]) -> Result<(String, Value)> {
    let sections: Vec<(&str, Artifact)> = vec![
        ("Intersection table", intersections()),
        ("Boundary classes", coordinates()),
        ("Intersection form", form()),
        ("Mori cone faces", mori_faces()?),
        ("Nef cone generators", nef_gens()),
        ("Quotient fan", fan_quotient()?),
        ("Toric surface X_e", fan_xe()?),
        ("Octagon", fan_octagon()?),
    ];
    let mut md = String::from("# flagquot report\n\n");
    for (title, a) in &sections {
        md += &format!("## {title}\n\n");
        if a.text.starts_with('|') {
            md += &a.text;
        } else {
            md += &format!("```\n{}```\n", a.text);
        }
        md.push('\n');
    }
    md += "## Checks\n\n```\n";
    md += &verify_text(checks);
    md += "```\n";
    let json = json!({
        "schema": SCHEMA,
        "intersections": sections[0].1.json,
        "coordinates": sections[1].1.json,
        "form": sections[2].1.json,
        "mori_faces": sections[3].1.json,
        "nef_gens": sections[4].1.json,
        "fan_quotient": sections[5].1.json,
        "fan_xe": sections[6].1.json,
        "fan_octagon": sections[7].1.json,
        "verify": verify_json(checks),
    });
    Ok((md, json))
}
