//! Command-line front end: decompose persistence modules, compute bottleneck
//! and interleaving distances, ingest level-set zigzag diagrams, and render
//! schematic barcode figures.

mod io;
mod render;
mod report;

use clap::{Parser, Subcommand};

use arcband_core::{
    barcode, bottleneck_report, brute_force_interleaved, decompose, delta_matched,
    levelset_representation, Error as CoreError, ExtDistance, OracleConfig, Representation,
};

use io::{FieldSpec, Parsed, ParsedPayload};

#[derive(Debug)]
pub struct CliError {
    message: String,
    code: i32,
}

impl CliError {
    fn parse(message: String) -> CliError {
        CliError { message, code: 2 }
    }

    fn parse_err(e: CoreError) -> CliError {
        CliError {
            message: e.to_string(),
            code: 2,
        }
    }

    fn math(e: CoreError) -> CliError {
        let code = match e {
            CoreError::ResourceBound(_) => 4,
            CoreError::MalformedQuiver(_) | CoreError::CyclicOrientation | CoreError::Dimension(_) => 2,
            _ => 3,
        };
        CliError {
            message: e.to_string(),
            code,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "arcband",
    about = "Barcodes and bottleneck/interleaving distances for zigzag and circle-valued persistence modules",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a representation into indecomposable summands with
    /// geometric labels.
    Decompose {
        /// Input document (JSON).
        input: String,
        /// Write a machine-readable report here.
        #[arg(long)]
        out: Option<String>,
        /// Seed for the randomized decomposition internals.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Override the document's field declaration (Q or a prime).
        #[arg(long)]
        field: Option<String>,
    },
    /// Bottleneck distance between the barcodes of two documents; equals
    /// the interleaving distance by the isometry theorem.
    Distance {
        input1: String,
        input2: String,
        /// Cross-check against the brute-force interleaving oracle for each
        /// delta up to this bound.
        #[arg(long, value_name = "DELTA_MAX")]
        oracle_check: Option<u32>,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        field: Option<String>,
    },
    /// Build the level-set representation of a zigzag diagram, then
    /// decompose it.
    Levelset {
        input: String,
        /// Write the intermediate representation as an input document.
        #[arg(long, value_name = "FILE")]
        emit_rep: Option<String>,
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        field: Option<String>,
    },
    /// Render the barcode on the disc/annulus model as an SVG figure.
    Render {
        input: String,
        output: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        field: Option<String>,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.code);
        }
    }
}

fn field_override(flag: &Option<String>) -> Result<Option<FieldSpec>, CliError> {
    flag.as_deref().map(FieldSpec::parse_flag).transpose()
}

fn representation_of(parsed: &Parsed) -> Result<Representation, CliError> {
    match &parsed.input {
        ParsedPayload::Representation(rep) => Ok(rep.clone()),
        ParsedPayload::Diagram(diagram, degree) => {
            levelset_representation(diagram, *degree, parsed.field).map_err(CliError::math)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Decompose {
            input,
            out,
            seed,
            field,
        } => {
            let parsed = io::load(&input, field_override(&field)?.as_ref())?;
            let rep = representation_of(&parsed)?;
            let d = decompose(&rep, seed).map_err(CliError::math)?;
            print!("{}", report::decompose_text(&rep, &d));
            if let Some(path) = out {
                report::write_output(&path, &report::decompose_json(&rep, &d))?;
            }
            Ok(())
        }
        Command::Distance {
            input1,
            input2,
            oracle_check,
            out,
            seed,
            field,
        } => {
            let override_spec = field_override(&field)?;
            let p1 = io::load(&input1, override_spec.as_ref())?;
            let p2 = io::load(&input2, override_spec.as_ref())?;
            if p1.quiver != p2.quiver || p1.field != p2.field {
                return Err(CliError {
                    message: "documents declare different quivers or fields".into(),
                    code: 3,
                });
            }
            let m = representation_of(&p1)?;
            let n = representation_of(&p2)?;
            let bm = barcode(&m, seed).map_err(CliError::math)?;
            let bn = barcode(&n, seed).map_err(CliError::math)?;
            let report_data = bottleneck_report(&bm, &bn).map_err(CliError::math)?;
            match (&report_data.distance, &report_data.infinite_reason) {
                (ExtDistance::Finite(d), _) => {
                    println!("distance: {d} (bottleneck = interleaving, by the isometry theorem)");
                    if let Some(w) = &report_data.witness {
                        println!("witness matching at delta = {d}:");
                        print!("{}", report::witness_text(&bm, &bn, w));
                    }
                }
                (ExtDistance::Infinity, reason) => {
                    println!(
                        "distance: infinity ({})",
                        reason.as_deref().unwrap_or("no matching at any delta")
                    );
                }
            }
            let mut oracle_rows = Vec::new();
            if let Some(delta_max) = oracle_check {
                let cfg = OracleConfig {
                    seed,
                    ..Default::default()
                };
                for delta in 0..=delta_max {
                    let interleaved =
                        brute_force_interleaved(&m, &n, delta, &cfg).map_err(CliError::math)?;
                    let matched = delta_matched(&bm, &bn, delta).map_err(CliError::math)?;
                    let verdict = if interleaved == matched { "agree" } else { "DISAGREE" };
                    println!(
                        "oracle delta={delta}: interleaved={interleaved} matched={matched} [{verdict}]"
                    );
                    oracle_rows.push((delta, interleaved, matched));
                }
            }
            if let Some(path) = out {
                report::write_output(
                    &path,
                    &report::distance_json(
                        &report_data.distance,
                        &bm,
                        &bn,
                        report_data.infinite_reason.as_deref(),
                        &oracle_rows,
                    ),
                )?;
            }
            Ok(())
        }
        Command::Levelset {
            input,
            emit_rep,
            out,
            seed,
            field,
        } => {
            let override_spec = field_override(&field)?;
            let parsed = io::load(&input, override_spec.as_ref())?;
            let ParsedPayload::Diagram(_, _) = &parsed.input else {
                return Err(CliError::parse(
                    "levelset expects a diagram payload".into(),
                ));
            };
            let rep = representation_of(&parsed)?;
            println!(
                "level-set representation on a cycle with {} vertices",
                rep.quiver.n_vertices
            );
            if let Some(path) = emit_rep {
                let spec = override_spec.unwrap_or(match parsed.field {
                    arcband_core::Field::Rational => FieldSpec::Rational,
                    arcband_core::Field::Prime(p) => FieldSpec::Fp(p),
                });
                let doc = io::document_of_representation(&rep, &spec);
                report::write_output(&path, &serde_json::to_value(&doc).expect("document serializes"))?;
            }
            let d = decompose(&rep, seed).map_err(CliError::math)?;
            print!("{}", report::decompose_text(&rep, &d));
            if let Some(path) = out {
                report::write_output(&path, &report::decompose_json(&rep, &d))?;
            }
            Ok(())
        }
        Command::Render {
            input,
            output,
            seed,
            field,
        } => {
            let parsed = io::load(&input, field_override(&field)?.as_ref())?;
            let rep = representation_of(&parsed)?;
            let b = barcode(&rep, seed).map_err(CliError::math)?;
            let svg = render::render_svg(&rep.quiver, &b);
            std::fs::write(&output, svg)
                .map_err(|e| CliError::parse(format!("cannot write {output}: {e}")))?;
            println!("wrote {output} ({} barcode entries)", b.total());
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn field_flag_parsing() {
        assert_eq!(
            FieldSpec::parse_flag("Q").unwrap(),
            FieldSpec::Rational
        );
        assert_eq!(FieldSpec::parse_flag("5").unwrap(), FieldSpec::Fp(5));
        assert!(FieldSpec::parse_flag("grape").is_err());
    }

    #[test]
    fn document_parses_and_rejects_bad_shapes() {
        let doc = json!({
            "field": {"Fp": 5},
            "quiver": {"kind": "cycle", "vertices": 2, "arrows": [[1,2],[1,2]]},
            "payload": {"representation": {"dims": [1,1], "maps": [[[2]], [[1]]]}}
        });
        let parsed: io::Document = serde_json::from_value(doc).unwrap();
        assert!(io::parse_document(&parsed, None).is_ok());

        let bad = json!({
            "field": {"Fp": 5},
            "quiver": {"kind": "cycle", "vertices": 2, "arrows": [[1,2],[1,2]]},
            "payload": {"representation": {"dims": [1,1], "maps": [[[2, 3]], [[1]]]}}
        });
        let parsed: io::Document = serde_json::from_value(bad).unwrap();
        let err = match io::parse_document(&parsed, None) {
            Err(e) => e,
            Ok(_) => panic!("bad shape accepted"),
        };
        assert_eq!(err.code, 2);
    }
}
