//! One function per subcommand, each producing a report.

use hecke_covers::affine_weyl::{enumerate_ball, graded_counts, AffineWeylGroup, LengthKind};
use hecke_covers::cover_datum::CoverDatum;
use hecke_covers::formal_degree::{
    canonical_measure_constant, degree_with_canonical_measure, formal_degree_inverse, ray_exponents,
    weighted_poincare_series,
};
use hecke_covers::root_datum::RootDatum;
use hecke_covers::whittaker::whittaker_table;
use hecke_covers::{Error, Result};
use num_traits::Zero;
use serde_json::{json, Value};

use crate::job::{CoverSpec, DegreeJob};
use crate::output::{rational, rational_text, rationals, Outcome, Report, Table};

fn header(report: &mut Report, spec: &CoverSpec) {
    report.set("type", json!(spec.spec.letter().as_char().to_string()));
    report.set("rank", json!(spec.spec.rank()));
    report.set("n", json!(spec.n));
    report.set("q_short", json!(spec.q_short));
}

fn word_text(datum: &RootDatum, w: &hecke_covers::root_datum::WeylElement) -> String {
    let word = datum.reduced_word(w);
    if word.is_empty() {
        return "e".into();
    }
    word.iter().map(|i| format!("s{}", i + 1)).collect()
}

fn vector_text(y: &[i64]) -> String {
    y.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn strings(xs: &[num_bigint::BigInt]) -> Value {
    Value::Array(xs.iter().map(|x| json!(x.to_string())).collect())
}

pub fn datum(spec: &CoverSpec) -> Result<Report> {
    let cover = spec.cover()?;
    let mut report = Report::new("datum");
    header(&mut report, spec);
    let basis = cover.y_qn().basis_i64();
    let center = cover.center_group();
    let heart = cover.heart_center_group();
    report.set("n_alpha", json!(cover.n_alpha_simple()));
    report.set("Y_Qn_basis", json!(basis));
    report.set("Y_Qn_index", json!(cover.y_qn().index().to_string()));
    report.set("center_invariant_factors", strings(center.invariant_factors()));
    report.set("heart_invariant_factors", strings(heart.invariant_factors()));
    report.set("oasitic", json!(cover.is_oasitic()));
    report.set("oasitic_condition", json!(cover.oasitic_condition()));
    let mut table = Table::new(&["node", "n_alpha", "Y_Qn_basis_vector"]);
    for (i, (m, b)) in cover.n_alpha_simple().iter().zip(&basis).enumerate() {
        table.push(vec![(i + 1).to_string(), m.to_string(), vector_text(b)]);
    }
    report.table = table;
    Ok(report)
}

pub fn whittaker(spec: &CoverSpec, cap: u64) -> Result<Report> {
    let cover = spec.cover()?;
    let rows = whittaker_table(&cover, cap)?;
    let mut report = Report::new("whittaker");
    header(&mut report, spec);
    report.set("weyl_order", json!(cover.base().weyl_order()));
    report.set("cap", json!(cap));
    let mut table = Table::new(&["sigma", "weyl_character", "brute_force", "closed_form", "agrees"]);
    let mut json_rows = Vec::new();
    for row in &rows {
        json_rows.push(json!({
            "sigma": row.character,
            "weyl_character": row.weyl_character,
            "brute_force_dimension": row.brute_force_dimension,
            "closed_form_dimension": row.closed_form_dimension,
            "agrees": row.agrees(),
        }));
        table.push(vec![
            row.character.clone(),
            row.weyl_character.clone(),
            row.brute_force_dimension.map_or_else(|| "-".into(), |b| b.to_string()),
            row.closed_form_dimension.to_string(),
            row.agrees().map_or_else(|| "-".into(), |a| a.to_string()),
        ]);
    }
    let capped = rows.iter().any(|r| r.brute_force_dimension.is_none());
    report.set("rows", Value::Array(json_rows));
    report.set("brute_force_skipped", json!(capped));
    report.table = table;
    if capped {
        report.outcome = Outcome::Incomplete;
    }
    if rows.iter().any(|r| r.agrees() == Some(false)) {
        return Err(Error::Calibration(format!("{} n = {}: brute force and closed form differ", spec.spec, spec.n)));
    }
    Ok(report)
}

pub fn formal_degree(spec: &CoverSpec, job: &DegreeJob) -> Result<Report> {
    let cover = spec.cover()?;
    let group = AffineWeylGroup::new(cover.clone())?;
    let chi = job.sigma.resolve(&group)?;
    let mut report = Report::new("formal-degree");
    header(&mut report, spec);
    report.set("sigma", json!(chi.name()));
    report.set("q", rational(&job.q));
    report.set("L", json!(job.truncation));
    report.set("tol", rational(&job.tol));
    report.set("ray_exponents", json!(ray_exponents(&group, &chi)?));
    let (series, divergent) = match formal_degree_inverse(&group, &chi, &job.q, job.truncation) {
        Ok(s) => (s, None),
        Err(Error::Divergent(msg)) => (weighted_poincare_series(&group, &chi, &job.q, job.truncation)?, Some(msg)),
        Err(e) => return Err(e),
    };
    report.set("contributions", rationals(&series.contributions));
    report.set("partial_sums", rationals(&series.partial_sums));
    report.set("cover_side_partial_sums", rationals(&series.cover_side_partial_sums));
    report.set("gradings_agree", json!(series.gradings_agree()));
    report.set("last_ratio", series.last_ratio().as_ref().map_or(Value::Null, rational));
    let mut table = Table::new(&["length", "contribution", "partial_sum"]);
    for (l, (c, s)) in series.contributions.iter().zip(&series.partial_sums).enumerate() {
        table.push(vec![l.to_string(), rational_text(c), rational_text(s)]);
    }
    report.table = table;
    if let Some(msg) = divergent {
        report.set("status", json!("divergent"));
        report.set("message", json!(msg));
        report.outcome = Outcome::Incomplete;
        return Ok(report);
    }
    let converged = series.is_converged(&job.tol);
    let estimate = series.limit_estimate();
    report.set("converged", json!(converged));
    report.set("status", json!(if converged { "converged" } else { "not_converged" }));
    report.set("deg_inverse_estimate", rational(&estimate));
    report.set(
        "deg_estimate",
        if estimate.is_zero() { Value::Null } else { rational(&estimate.recip()) },
    );
    let constant = canonical_measure_constant(cover.base(), &job.q)?;
    report.set("canonical_measure_constant", rational(&constant));
    match degree_with_canonical_measure(&series, &constant, &job.tol) {
        Ok(d) => report.set("canonical_degree", rational(&d)),
        Err(Error::NotConverged { .. }) => {
            report.set("canonical_degree", Value::Null);
            report.outcome = Outcome::Incomplete;
        }
        Err(e) => return Err(e),
    }
    Ok(report)
}

fn group_for(spec: &CoverSpec) -> Result<(CoverDatum, AffineWeylGroup)> {
    let cover = spec.cover()?;
    let group = AffineWeylGroup::new(cover.clone())?;
    Ok((cover, group))
}

pub fn lengths(spec: &CoverSpec, radius: u64) -> Result<Report> {
    let (_, group) = group_for(spec)?;
    let mut ball = enumerate_ball(&group, radius, LengthKind::GQn);
    ball.sort_by(|a, b| {
        (a.length_gqn, a.length_g, a.element.translation(), a.element.finite_part().matrix()).cmp(&(
            b.length_gqn,
            b.length_g,
            b.element.translation(),
            b.element.finite_part().matrix(),
        ))
    });
    let mut report = Report::new("lengths");
    header(&mut report, spec);
    report.set("L", json!(radius));
    let mut table = Table::new(&["y", "s", "l_G", "l_GQn"]);
    let mut rows = Vec::new();
    for e in &ball {
        let s = word_text(group.datum(), e.element.finite_part());
        rows.push(json!({
            "y": e.element.translation(),
            "s": s,
            "l_G": e.length_g,
            "l_GQn": e.length_gqn,
        }));
        table.push(vec![vector_text(e.element.translation()), s, e.length_g.to_string(), e.length_gqn.to_string()]);
    }
    report.set("rows", Value::Array(rows));
    report.table = table;
    Ok(report)
}

pub fn poincare(spec: &CoverSpec, radius: u64) -> Result<Report> {
    let (_, group) = group_for(spec)?;
    let by_gqn = graded_counts(&enumerate_ball(&group, radius, LengthKind::GQn), LengthKind::GQn, radius);
    let by_g = graded_counts(&enumerate_ball(&group, radius, LengthKind::G), LengthKind::G, radius);
    let mut report = Report::new("poincare");
    header(&mut report, spec);
    report.set("L", json!(radius));
    report.set("counts_GQn", json!(by_gqn));
    report.set("counts_G", json!(by_g));
    let mut table = Table::new(&["length", "count_GQn", "count_G"]);
    for (l, (a, b)) in by_gqn.iter().zip(&by_g).enumerate() {
        table.push(vec![l.to_string(), a.to_string(), b.to_string()]);
    }
    report.table = table;
    Ok(report)
}
