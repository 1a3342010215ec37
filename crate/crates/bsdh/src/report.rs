//! JSON and TSV renderings. Simple-root indices are 1-based in every
//! report; weights are integer arrays in fundamental-weight coordinates.
//! `serde_json` maps keep keys sorted, so rendering is deterministic.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use bsdh_core::bsdh::KernelReport;
use bsdh_core::{
    AutReport, BsdhWord, Character, RootSystem, TangentMode, TangentReport, Weight, Word,
};
use serde_json::{json, Value};

/// A report in both output formats.
#[derive(Debug, Clone, PartialEq)]
pub struct Rendered {
    pub json: Value,
    pub tsv: String,
}

pub fn weight(w: &Weight) -> Value {
    json!(w.coords())
}

pub fn character(c: &Character) -> Value {
    Value::Array(
        c.iter()
            .map(|(w, k)| json!({ "weight": w.coords(), "coeff": k }))
            .collect(),
    )
}

pub fn one_based(indices: &[usize]) -> Value {
    json!(indices.iter().map(|i| i + 1).collect::<Vec<_>>())
}

pub fn word(w: &Word) -> Value {
    one_based(w.letters())
}

/// Counts that overflow `u64` (large exceptional types) are rendered as
/// decimal strings.
pub fn count_value(count: u128) -> Value {
    match u64::try_from(count) {
        Ok(c) => json!(c),
        Err(_) => json!(count.to_string()),
    }
}

pub fn mode_name(mode: TangentMode) -> &'static str {
    match mode {
        TangentMode::H0Exact => "H0_exact",
        TangentMode::EulerOnly => "Euler_only",
    }
}

fn tsv_header(rank: usize, tail: &[&str]) -> String {
    let mut cols: Vec<String> = (1..=rank).map(|i| format!("w{i}")).collect();
    cols.extend(tail.iter().map(|s| s.to_string()));
    cols.join("\t") + "\n"
}

fn tsv_coords(w: &Weight) -> String {
    w.coords()
        .iter()
        .map(i32::to_string)
        .collect::<Vec<_>>()
        .join("\t")
}

/// One weight per row: coordinates followed by the coefficient.
pub fn character_tsv(rank: usize, c: &Character) -> String {
    let mut out = tsv_header(rank, &["coeff"]);
    for (w, k) in c.iter() {
        let _ = writeln!(out, "{}\t{k}", tsv_coords(w));
    }
    out
}

pub fn roots(rs: &RootSystem) -> Rendered {
    let n = rs.rank();
    let cartan: Vec<Vec<i32>> = (0..n)
        .map(|i| (0..n).map(|j| rs.cartan(i, j)).collect())
        .collect();
    let root_json = |r: &bsdh_core::Root| {
        json!({
            "root_coords": r.root_coords.as_slice(),
            "weight": weight(&r.weight),
            "height": r.height,
        })
    };
    let json = json!({
        "type": rs.cartan_type().to_string(),
        "rank": n,
        "simply_laced": rs.cartan_type().simply_laced(),
        "cartan": cartan,
        "long": (0..n).map(|i| rs.is_long(i)).collect::<Vec<_>>(),
        "rho": weight(rs.rho()),
        "highest_root": root_json(rs.highest_root()),
        "positive_roots": rs.positive_roots().iter().map(root_json).collect::<Vec<_>>(),
    });
    let mut cols: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    cols.push("height".into());
    cols.extend((1..=n).map(|i| format!("w{i}")));
    let mut tsv = cols.join("\t") + "\n";
    for r in rs.positive_roots() {
        let coords: Vec<String> = r.root_coords.iter().map(i32::to_string).collect();
        let _ = writeln!(
            tsv,
            "{}\t{}\t{}",
            coords.join("\t"),
            r.height,
            tsv_coords(&r.weight)
        );
    }
    Rendered { json, tsv }
}

pub fn words(
    rs: &RootSystem,
    element_word: &Word,
    count: u128,
    words: &[Word],
    truncated: bool,
) -> Rendered {
    let json = json!({
        "type": rs.cartan_type().to_string(),
        "element": word(element_word),
        "count": count_value(count),
        "truncated": truncated,
        "words": words.iter().map(word).collect::<Vec<_>>(),
    });
    let mut tsv = String::new();
    for w in words {
        let _ = writeln!(tsv, "{w}");
    }
    Rendered { json, tsv }
}

pub fn tangent(b: &BsdhWord<'_>, t: &TangentReport) -> Rendered {
    let rs = b.root_system();
    let json = json!({
        "type": rs.cartan_type().to_string(),
        "word": word(b.word()),
        "mode": mode_name(t.mode),
        "J": one_based(b.j()),
        "supp": one_based(b.supp()),
        "d": b.d(),
        "char": character(&t.total),
        "zero_mult": t.zero_mult,
        "positive_support": t.positive_support.iter().map(weight).collect::<Vec<_>>(),
        "dim": t.dim(),
    });
    Rendered {
        json,
        tsv: character_tsv(rs.rank(), &t.total),
    }
}

pub fn aut(b: &BsdhWord<'_>, r: &AutReport) -> Rendered {
    let rs = b.root_system();
    let json = json!({
        "type": rs.cartan_type().to_string(),
        "word": word(b.word()),
        "status": r.status.to_string(),
        "J": one_based(&r.j),
        "parabolic_dim": r.parabolic_dim,
        "criterion": r.criterion,
        "semistable_equiv": r.semistable_equiv,
        "rank_bound": r.rank_bound,
        "completions_checked": r.completions_checked,
        "completions_agree": r.completions_agree,
        "tangent": tangent(b, &r.tangent).json,
    });
    let mut tsv = String::new();
    let j: Vec<String> = r.j.iter().map(|i| (i + 1).to_string()).collect();
    let _ = writeln!(tsv, "status\tJ\tparabolic_dim\tcriterion\trank_bound");
    let _ = writeln!(
        tsv,
        "{}\t{}\t{}\t{}\t{}",
        r.status,
        j.join(","),
        r.parabolic_dim,
        r.criterion,
        r.rank_bound
    );
    Rendered { json, tsv }
}

pub fn kernel(b: &BsdhWord<'_>, completion: &Word, k: &KernelReport) -> Rendered {
    let rs = b.root_system();
    let r_w: Vec<Value> = k
        .r_w
        .iter()
        .map(|&i| json!(rs.positive_roots()[i].root_coords.as_slice()))
        .collect();
    let json = json!({
        "type": rs.cartan_type().to_string(),
        "word": word(b.word()),
        "completion": word(completion),
        "predicted": character(&k.predicted),
        "observed": character(&k.observed),
        "agrees": k.agrees(),
        "dim": k.predicted.dim(),
        "R_w": r_w,
        "J1": one_based(&k.j1),
    });
    let mut weights: BTreeMap<&Weight, (i64, i64)> = BTreeMap::new();
    for (w, c) in k.predicted.iter() {
        weights.entry(w).or_default().0 = c;
    }
    for (w, c) in k.observed.iter() {
        weights.entry(w).or_default().1 = c;
    }
    let mut tsv = tsv_header(rs.rank(), &["predicted", "observed"]);
    for (w, (p, o)) in weights {
        let _ = writeln!(tsv, "{}\t{p}\t{o}", tsv_coords(w));
    }
    Rendered { json, tsv }
}
