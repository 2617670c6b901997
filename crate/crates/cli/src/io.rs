//! The self-describing JSON input document: field declaration, quiver, and
//! either a representation payload or a level-set diagram payload.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use arcband_core::homology::VertexMap;
use arcband_core::{
    exactnum::is_prime, DimVector, Field, Mat, Quiver, QuiverKind, Representation, Scalar,
    SimplicialComplex, ZigzagDiagram,
};

use crate::CliError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Document {
    pub field: FieldSpec,
    pub quiver: QuiverSpec,
    pub payload: Payload,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum FieldSpec {
    #[serde(rename = "Q")]
    Rational,
    Fp(u64),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuiverSpec {
    pub kind: String,
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Representation {
        representation: RepSpec,
    },
    Diagram {
        diagram: DiagramSpec,
        degree: usize,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepSpec {
    pub dims: Vec<usize>,
    /// One matrix per arrow, rows of scalars; scalars are JSON numbers or,
    /// over the rationals, strings like "2/3".
    pub maps: Vec<Vec<Vec<Value>>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagramSpec {
    pub singular: Vec<ComplexSpec>,
    pub regular: Vec<ComplexSpec>,
    pub a_maps: Vec<Vec<(usize, usize)>>,
    pub b_maps: Vec<Vec<(usize, usize)>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ComplexSpec {
    pub maximal: Vec<Vec<usize>>,
}

impl FieldSpec {
    pub fn to_field(&self) -> Result<Field, CliError> {
        match self {
            FieldSpec::Rational => Ok(Field::Rational),
            FieldSpec::Fp(p) => {
                if *p > 1 << 31 {
                    return Err(CliError::parse(format!("prime {p} exceeds 2^31")));
                }
                if !is_prime(*p) {
                    return Err(CliError::parse(format!("{p} is not prime")));
                }
                Ok(Field::Prime(*p))
            }
        }
    }

    pub fn parse_flag(s: &str) -> Result<FieldSpec, CliError> {
        if s.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rational);
        }
        let p: u64 = s
            .trim_start_matches(['f', 'F'])
            .parse()
            .map_err(|_| CliError::parse(format!("invalid field {s:?}; use Q or a prime")))?;
        Ok(FieldSpec::Fp(p))
    }
}

impl QuiverSpec {
    pub fn to_quiver(&self) -> Result<Quiver, CliError> {
        let quiver = match self.kind.as_str() {
            "line" => Quiver {
                kind: QuiverKind::LineA,
                n_vertices: self.vertices,
                arrows: self.arrows.clone(),
            },
            "cycle" => Quiver {
                kind: QuiverKind::CycleAtilde,
                n_vertices: self.vertices,
                arrows: self.arrows.clone(),
            },
            other => return Err(CliError::parse(format!("unknown quiver kind {other:?}"))),
        };
        quiver.validate().map_err(CliError::math)?;
        Ok(quiver)
    }

    pub fn of(quiver: &Quiver) -> QuiverSpec {
        QuiverSpec {
            kind: match quiver.kind {
                QuiverKind::LineA => "line".into(),
                QuiverKind::CycleAtilde => "cycle".into(),
            },
            vertices: quiver.n_vertices,
            arrows: quiver.arrows.clone(),
        }
    }
}

fn parse_scalar(field: &Field, v: &Value) -> Result<Scalar, CliError> {
    match v {
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| CliError::parse(format!("non-integer scalar {n}")))?;
            Ok(field.from_i64(i))
        }
        Value::String(s) => field.parse_scalar(s).map_err(CliError::parse_err),
        other => Err(CliError::parse(format!("invalid scalar {other}"))),
    }
}

pub fn scalar_to_value(s: &Scalar) -> Value {
    match s {
        Scalar::Fp(v) => Value::from(*v),
        Scalar::Q(_) => {
            let text = s.to_string();
            match text.parse::<i64>() {
                Ok(i) => Value::from(i),
                Err(_) => Value::from(text),
            }
        }
    }
}

pub struct Parsed {
    pub field: Field,
    pub quiver: Quiver,
    pub input: ParsedPayload,
}

pub enum ParsedPayload {
    Representation(Representation),
    Diagram(ZigzagDiagram, usize),
}

pub fn load(path: &str, field_override: Option<&FieldSpec>) -> Result<Parsed, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::parse(format!("cannot read {path}: {e}")))?;
    let doc: Document = serde_json::from_str(&text)
        .map_err(|e| CliError::parse(format!("{path}: {e}")))?;
    parse_document(&doc, field_override)
}

pub fn parse_document(
    doc: &Document,
    field_override: Option<&FieldSpec>,
) -> Result<Parsed, CliError> {
    let spec = field_override.unwrap_or(&doc.field);
    let field = spec.to_field()?;
    let quiver = doc.quiver.to_quiver()?;
    let input = match &doc.payload {
        Payload::Representation { representation } => {
            let dims = DimVector(representation.dims.clone());
            if representation.maps.len() != quiver.n_arrows() {
                return Err(CliError::parse(format!(
                    "expected {} matrices, got {}",
                    quiver.n_arrows(),
                    representation.maps.len()
                )));
            }
            let mut maps = Vec::with_capacity(representation.maps.len());
            for (i, rows) in representation.maps.iter().enumerate() {
                let (s, t) = quiver.arrows[i];
                let (nr, nc) = (dims.at(t), dims.at(s));
                if rows.len() != nr || rows.iter().any(|r| r.len() != nc) {
                    return Err(CliError::parse(format!(
                        "matrix {} must be {}x{}",
                        i + 1,
                        nr,
                        nc
                    )));
                }
                let mut m = Mat::zero(&field, nr, nc);
                for (r, row) in rows.iter().enumerate() {
                    for (c, v) in row.iter().enumerate() {
                        m[(r, c)] = parse_scalar(&field, v)?;
                    }
                }
                maps.push(m);
            }
            let rep = Representation::new(&quiver, field, dims, maps).map_err(CliError::math)?;
            ParsedPayload::Representation(rep)
        }
        Payload::Diagram { diagram, degree } => {
            let complexes = |specs: &[ComplexSpec]| -> Result<Vec<SimplicialComplex>, CliError> {
                specs
                    .iter()
                    .map(|c| SimplicialComplex::from_maximal(&c.maximal).map_err(CliError::math))
                    .collect()
            };
            let maps = |specs: &[Vec<(usize, usize)>]| -> Vec<VertexMap> {
                specs
                    .iter()
                    .map(|pairs| VertexMap(pairs.iter().copied().collect::<BTreeMap<_, _>>()))
                    .collect()
            };
            let d = ZigzagDiagram {
                singular: complexes(&diagram.singular)?,
                regular: complexes(&diagram.regular)?,
                a_maps: maps(&diagram.a_maps),
                b_maps: maps(&diagram.b_maps),
            };
            d.validate().map_err(CliError::math)?;
            if d.quiver() != quiver {
                return Err(CliError::parse(
                    "declared quiver does not match the diagram's zigzag cycle".into(),
                ));
            }
            ParsedPayload::Diagram(d, *degree)
        }
    };
    Ok(Parsed {
        field,
        quiver,
        input,
    })
}

/// Serialize a representation back into a document (for --emit-rep).
pub fn document_of_representation(rep: &Representation, field_spec: &FieldSpec) -> Document {
    let maps = rep
        .maps
        .iter()
        .map(|m| {
            (0..m.rows)
                .map(|r| (0..m.cols).map(|c| scalar_to_value(&m[(r, c)])).collect())
                .collect()
        })
        .collect();
    Document {
        field: field_spec.clone(),
        quiver: QuiverSpec::of(&rep.quiver),
        payload: Payload::Representation {
            representation: RepSpec {
                dims: rep.dims.0.clone(),
                maps,
            },
        },
    }
}
