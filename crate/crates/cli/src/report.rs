//! Text and machine-readable reports for the subcommands.

use serde::Serialize;
use serde_json::json;

use arcband_core::barcode::MatchingWitness;
use arcband_core::{Barcode, Decomposition, ExtDistance, Field, GeomObject, Representation};

use crate::CliError;

#[derive(Serialize)]
struct SummandOut {
    #[serde(flatten)]
    object: GeomObject,
    multiplicity: usize,
    dims: Vec<usize>,
    label: String,
}

pub fn field_name(field: &Field) -> String {
    match field {
        Field::Rational => "Q".into(),
        Field::Prime(p) => format!("F_{p}"),
    }
}

pub fn decompose_text(rep: &Representation, d: &Decomposition) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "field: {}\nquiver: {} on {} vertices\ntotal dimension: {}\n",
        field_name(&rep.field),
        match rep.quiver.kind {
            arcband_core::QuiverKind::LineA => "line".to_string(),
            arcband_core::QuiverKind::CycleAtilde =>
                format!("cycle (p={}, q={})", rep.quiver.p(), rep.quiver.q()),
        },
        rep.quiver.n_vertices,
        rep.total_dim()
    ));
    let total: usize = d.summands.iter().map(|s| s.multiplicity).sum();
    out.push_str(&format!(
        "{} summand{} ({} isomorphism class{}):\n",
        total,
        if total == 1 { "" } else { "s" },
        d.summands.len(),
        if d.summands.len() == 1 { "" } else { "es" }
    ));
    for s in &d.summands {
        out.push_str(&format!(
            "  {}  x{}  dims {:?}  [{}]\n",
            s.object,
            s.multiplicity,
            s.rep.dims.0,
            s.object.dictionary_label()
        ));
    }
    out.push_str("certificate: verified\n");
    out
}

pub fn decompose_json(rep: &Representation, d: &Decomposition) -> serde_json::Value {
    let summands: Vec<SummandOut> = d
        .summands
        .iter()
        .map(|s| SummandOut {
            object: s.object.clone(),
            multiplicity: s.multiplicity,
            dims: s.rep.dims.0.clone(),
            label: s.object.dictionary_label(),
        })
        .collect();
    json!({
        "field": field_name(&rep.field),
        "total_dim": rep.total_dim(),
        "summands": summands,
        "certificate_verified": true,
    })
}

pub fn witness_text(b1: &Barcode, b2: &Barcode, w: &MatchingWitness) -> String {
    let units = |b: &Barcode| -> Vec<GeomObject> {
        b.entries
            .iter()
            .flat_map(|(g, m)| std::iter::repeat_n(g.clone(), *m))
            .collect()
    };
    let (u1, u2) = (units(b1), units(b2));
    let mut out = String::new();
    for (i, j) in &w.pairs {
        out.push_str(&format!("  {}  <->  {}\n", u1[*i], u2[*j]));
    }
    for i in &w.unmatched_left {
        out.push_str(&format!("  {}  <->  (short, unmatched)\n", u1[*i]));
    }
    for j in &w.unmatched_right {
        out.push_str(&format!("  (short, unmatched)  <->  {}\n", u2[*j]));
    }
    if w.pairs.is_empty() && w.unmatched_left.is_empty() && w.unmatched_right.is_empty() {
        out.push_str("  (both barcodes empty)\n");
    }
    out
}

pub fn distance_json(
    distance: &ExtDistance,
    b1: &Barcode,
    b2: &Barcode,
    reason: Option<&str>,
    oracle_rows: &[(u32, bool, bool)],
) -> serde_json::Value {
    let oracle: Vec<serde_json::Value> = oracle_rows
        .iter()
        .map(|(delta, interleaved, matched)| {
            json!({
                "delta": delta,
                "interleaved": interleaved,
                "matched": matched,
                "agree": interleaved == matched,
            })
        })
        .collect();
    json!({
        "distance": distance,
        "isometry_note": "bottleneck distance; equals the interleaving distance by the isometry theorem",
        "infinite_reason": reason,
        "barcode_left": b1,
        "barcode_right": b2,
        "oracle_check": oracle,
    })
}

pub fn write_output(path: &str, value: &serde_json::Value) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value).expect("report serializes");
    std::fs::write(path, text + "\n")
        .map_err(|e| CliError::parse(format!("cannot write {path}: {e}")))
}
