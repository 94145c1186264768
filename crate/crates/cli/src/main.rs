//! Batch command-line calculator for exact plane curve counts, quantum
//! cohomology of projective spaces, and plane-curve interpolation.

mod output;

use clap::{Parser, Subcommand, ValueEnum};
use gwcalc_core::enumerative::{
    elliptic_cover_count, kontsevich_nd, plane_curve_family_dim, plane_genus,
    surface_point_insertions, virtual_dimension, CountTable, DimensionInput,
};
use gwcalc_core::exact::{count_sublattices, sigma1};
use gwcalc_core::plane::{interpolate_curve, PlanePoint};
use gwcalc_core::potential::{
    assemble_potential, nd_from_wdvv, phi_ijk, residual_max_in_window,
};
use gwcalc_core::quantum::{big_qproduct_p2, small_qproduct, QClass};
use gwcalc_core::rational::parse_rational;
use gwcalc_core::series::Series;
use output::{i64_value, int_value, rational_value, CommandResult, Table};
use serde_json::{json, Map, Value};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gwcalc", version, about = "Exact enumerative geometry of the plane", max_term_width = 100)]
struct Cli {
    /// Output format; csv is available for tabular commands only
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write output to a file instead of standard output
    #[arg(long, global = true, value_name = "FILE")]
    output: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Curve counts N_1..N_D from the closed recursion
    Nd {
        #[arg(long)]
        max: u32,
    },
    /// Curve counts N_1..N_D solved degree by degree from the WDVV identity
    NdWdvv {
        #[arg(long)]
        max: u32,
        /// Also run the closed recursion and assert agreement
        #[arg(long)]
        cross_check: bool,
    },
    /// Potential term table, or a third derivative of the potential
    Potential {
        #[arg(long)]
        max: u32,
        /// Indices i j k of the derivative to print instead of the potential
        #[arg(long, num_args = 3, value_names = ["I", "J", "K"])]
        derivative: Option<Vec<usize>>,
    },
    /// Verify the WDVV identity on the truncation window
    WdvvCheck {
        #[arg(long)]
        max: u32,
    },
    /// Quantum product of basis classes H^a * H^b in P^N
    Qprod {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        /// Big quantum product with series coefficients (requires --n 2)
        #[arg(long)]
        big: bool,
        /// Truncation degree for the big product
        #[arg(long, default_value_t = 4)]
        max: u32,
    },
    /// Expected dimension of the moduli space of stable maps
    Vdim {
        #[arg(long)]
        dim: i64,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        c1: i64,
    },
    /// Genus of a smooth degree-d plane curve
    Genus {
        #[arg(long)]
        d: u32,
    },
    /// Point insertions pinning down genus-g curves in a surface
    Points {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        c1: i64,
    },
    /// Dimensions of the full and nodal-rational families of plane curves
    Familydim {
        #[arg(long)]
        d: u32,
    },
    /// Number of index-d sublattices of Z^2
    Sublattices {
        #[arg(long)]
        d: u64,
        /// Also evaluate the divisor-sum formula and report agreement
        #[arg(long)]
        oracle: bool,
    },
    /// Unramified degree-d covers of an elliptic curve with a point condition
    Covers {
        #[arg(long)]
        d: u64,
    },
    /// Conic through five points read from a JSON file
    Conic {
        #[arg(long)]
        points: String,
    },
    /// Degree-d curve through C(d+2,2)-1 points read from a JSON file
    Curve {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        points: String,
    },
}

/// A failed command: `kind` is a stable machine-readable tag.
struct CliError {
    kind: &'static str,
    detail: String,
}

impl CliError {
    fn new(kind: &'static str, detail: impl Into<String>) -> Self {
        CliError {
            kind,
            detail: detail.into(),
        }
    }
}

impl From<gwcalc_core::Error> for CliError {
    fn from(e: gwcalc_core::Error) -> Self {
        use gwcalc_core::Error::*;
        let kind = match &e {
            ZeroDegree => "zero-degree",
            DimensionMismatch(..) => "dimension-mismatch",
            VariableMismatch => "variable-mismatch",
            UnknownVariable(_) => "unknown-variable",
            ExponentOutOfBounds { .. } => "exponent-out-of-bounds",
            NonSquareMatrix => "non-square-matrix",
            WrongPointCount { .. } => "wrong-point-count",
            DegenerateConfiguration => "degenerate-configuration",
            NonIntegerCount(_) => "non-integer-count",
            BadBasisIndex { .. } => "bad-basis-index",
        };
        CliError::new(kind, e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(result) => {
            let rendered = match cli.format {
                Format::Json => output::render_json(&result),
                Format::Text => output::render_text(&result),
                Format::Csv => match &result.table {
                    Some(table) => output::render_csv(table),
                    None => {
                        eprintln!(
                            "error: --format csv is only available for tabular commands (nd, nd-wdvv, potential)"
                        );
                        return ExitCode::from(2);
                    }
                },
            };
            match write_out(cli.output.as_deref(), &rendered) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: cannot write output: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            let obj = json!({"error": e.kind, "detail": e.detail});
            println!("{obj}");
            ExitCode::from(1)
        }
    }
}

fn write_out(path: Option<&str>, rendered: &str) -> std::io::Result<()> {
    match path {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(rendered.as_bytes())
        }
        Some(p) => std::fs::write(p, rendered),
    }
}

fn run(command: &Command) -> Result<CommandResult, CliError> {
    match command {
        Command::Nd { max } => cmd_nd(*max),
        Command::NdWdvv { max, cross_check } => cmd_nd_wdvv(*max, *cross_check),
        Command::Potential { max, derivative } => cmd_potential(*max, derivative.as_deref()),
        Command::WdvvCheck { max } => cmd_wdvv_check(*max),
        Command::Qprod { n, a, b, big, max } => cmd_qprod(*n, *a, *b, *big, *max),
        Command::Vdim { dim, genus, n, c1 } => Ok(CommandResult::new(
            "vdim",
            vec![
                ("dim", dim.to_string()),
                ("genus", genus.to_string()),
                ("n", n.to_string()),
                ("c1", c1.to_string()),
            ],
            i64_value(virtual_dimension(DimensionInput {
                dim_x: *dim,
                genus: *genus,
                marked_points: *n,
                c1_beta: *c1,
            })),
        )),
        Command::Genus { d } => Ok(CommandResult::new(
            "genus",
            vec![("d", d.to_string())],
            i64_value(plane_genus(*d)? as i64),
        )),
        Command::Points { genus, c1 } => Ok(CommandResult::new(
            "points",
            vec![("genus", genus.to_string()), ("c1", c1.to_string())],
            i64_value(surface_point_insertions(*genus, *c1)),
        )),
        Command::Familydim { d } => {
            let (coeff_space, nodal) = plane_curve_family_dim(*d)?;
            Ok(CommandResult::new(
                "familydim",
                vec![("d", d.to_string())],
                json!({"coeff_space": coeff_space, "nodal_rational": nodal}),
            ))
        }
        Command::Sublattices { d, oracle } => cmd_sublattices(*d, *oracle),
        Command::Covers { d } => Ok(CommandResult::new(
            "covers",
            vec![("d", d.to_string())],
            int_value(&elliptic_cover_count(*d)?),
        )),
        Command::Conic { points } => cmd_curve(2, points),
        Command::Curve { d, points } => cmd_curve(*d, points),
    }
}

fn count_table_result(
    command: &'static str,
    parameters: Vec<(&'static str, String)>,
    table: &CountTable,
    max: u32,
) -> CommandResult {
    let mut map = Map::new();
    let mut rows = Vec::new();
    for d in 1..=max {
        let n = table.get(d).expect("computed");
        map.insert(d.to_string(), int_value(n));
        rows.push(vec![d.to_string(), n.to_string()]);
    }
    CommandResult::new(command, parameters, Value::Object(map)).with_table(Table {
        headers: vec!["d", "n_d"],
        rows,
    })
}

fn cmd_nd(max: u32) -> Result<CommandResult, CliError> {
    if max == 0 {
        return Err(gwcalc_core::Error::ZeroDegree.into());
    }
    let mut table = CountTable::new();
    kontsevich_nd(max, &mut table)?;
    Ok(count_table_result(
        "nd",
        vec![("max", max.to_string())],
        &table,
        max,
    ))
}

fn cmd_nd_wdvv(max: u32, cross_check: bool) -> Result<CommandResult, CliError> {
    let table = nd_from_wdvv(max)?;
    if cross_check {
        let mut recursion = CountTable::new();
        kontsevich_nd(max, &mut recursion)?;
        for d in 1..=max {
            if table.get(d) != recursion.get(d) {
                return Err(CliError::new(
                    "cross-check-failed",
                    format!("WDVV and recursion disagree at d = {d}"),
                ));
            }
        }
    }
    let mut params = vec![("max", max.to_string())];
    if cross_check {
        params.push(("cross-check", "true".to_string()));
    }
    Ok(count_table_result("nd-wdvv", params, &table, max))
}

fn series_terms_value(series: &Series) -> Value {
    // Terms of a (t, y2) series as rows (d, y2-exponent, coefficient).
    Value::Array(
        series
            .terms()
            .map(|(exps, coeff)| {
                json!({"d": exps[0], "y2": exps[1], "coeff": rational_value(coeff)})
            })
            .collect(),
    )
}

fn series_rows(series: &Series) -> Vec<Vec<String>> {
    series
        .terms()
        .map(|(exps, coeff)| {
            vec![
                exps[0].to_string(),
                exps[1].to_string(),
                coeff.numer().to_string(),
                coeff.denom().to_string(),
            ]
        })
        .collect()
}

fn cmd_potential(max: u32, derivative: Option<&[usize]>) -> Result<CommandResult, CliError> {
    let mut table = CountTable::new();
    let p = assemble_potential(max, &mut table)?;
    match derivative {
        None => {
            let classical = Value::Array(
                p.classical()
                    .terms()
                    .map(|(exps, coeff)| {
                        json!({
                            "y0": exps[0], "y1": exps[1], "y2": exps[2],
                            "coeff": rational_value(coeff),
                        })
                    })
                    .collect(),
            );
            let result = json!({
                "classical": classical,
                "quantum": series_terms_value(p.quantum()),
            });
            Ok(CommandResult::new(
                "potential",
                vec![("max", max.to_string())],
                result,
            )
            .with_table(Table {
                headers: vec!["d", "y2", "num", "den"],
                rows: series_rows(p.quantum()),
            }))
        }
        Some(indices) => {
            let [i, j, k] = indices else {
                return Err(CliError::new(
                    "bad-derivative",
                    "expected exactly three indices",
                ));
            };
            let phi = phi_ijk(&p, *i, *j, *k)?;
            Ok(CommandResult::new(
                "potential",
                vec![
                    ("max", max.to_string()),
                    ("derivative", format!("{i} {j} {k}")),
                ],
                series_terms_value(&phi),
            )
            .with_table(Table {
                headers: vec!["d", "y2", "num", "den"],
                rows: series_rows(&phi),
            }))
        }
    }
}

fn cmd_wdvv_check(max: u32) -> Result<CommandResult, CliError> {
    let mut table = CountTable::new();
    let p = assemble_potential(max, &mut table)?;
    let max_abs = residual_max_in_window(&p)?;
    let (t_max, y2_max) = p.residual_window();
    let result = json!({
        "t_max": t_max,
        "y2_max": y2_max,
        "max_abs_numerator": max_abs.to_string(),
        "zero": max_abs == gwcalc_core::Int::from(0),
    });
    Ok(CommandResult::new(
        "wdvv-check",
        vec![("max", max.to_string())],
        result,
    ))
}

fn cmd_qprod(n: usize, a: usize, b: usize, big: bool, max: u32) -> Result<CommandResult, CliError> {
    if a > n || b > n {
        return Err(gwcalc_core::Error::BadBasisIndex {
            index: a.max(b),
            size: n + 1,
        }
        .into());
    }
    if big {
        if n != 2 {
            return Err(CliError::new(
                "bad-dimension",
                "--big requires --n 2 (the big product is implemented for the plane)",
            ));
        }
        let mut table = CountTable::new();
        let p = assemble_potential(max, &mut table)?;
        let prod = big_qproduct_p2(a, b, &p)?;
        let basis = ["pt", "L", "1"];
        let coeffs: Vec<Value> = prod
            .coeffs
            .iter()
            .zip(basis)
            .map(|(series, name)| json!({"basis": name, "terms": series_terms_value(series)}))
            .collect();
        Ok(CommandResult::new(
            "qprod",
            vec![
                ("n", n.to_string()),
                ("a", a.to_string()),
                ("b", b.to_string()),
                ("big", "true".to_string()),
                ("max", max.to_string()),
            ],
            Value::Array(coeffs),
        ))
    } else {
        let prod = small_qproduct(&QClass::h_power(n, a)?, &QClass::h_power(n, b)?)?;
        let mut terms = Vec::new();
        for (k, poly) in prod.coeffs().iter().enumerate() {
            if let Some(degree) = poly.degree() {
                for e in 0..=degree {
                    let c = poly.coeff(e);
                    if !num::Zero::is_zero(&c) {
                        terms.push(json!({"h": k, "q": e, "coeff": rational_value(&c)}));
                    }
                }
            }
        }
        Ok(CommandResult::new(
            "qprod",
            vec![
                ("n", n.to_string()),
                ("a", a.to_string()),
                ("b", b.to_string()),
            ],
            Value::Array(terms),
        ))
    }
}

fn cmd_sublattices(d: u64, oracle: bool) -> Result<CommandResult, CliError> {
    let enumeration = count_sublattices(d)?;
    if oracle {
        let formula = sigma1(d)?;
        let agree = formula == enumeration;
        Ok(CommandResult::new(
            "sublattices",
            vec![("d", d.to_string()), ("oracle", "true".to_string())],
            json!({
                "formula": int_value(&formula),
                "enumeration": int_value(&enumeration),
                "agree": agree,
            }),
        ))
    } else {
        Ok(CommandResult::new(
            "sublattices",
            vec![("d", d.to_string())],
            int_value(&enumeration),
        ))
    }
}

/// Point file schema: {"points": [{"x": "num/den", "y": "num/den"}, ...]};
/// rationals as "p/q" or integer strings.
fn read_points(path: &str) -> Result<Vec<PlanePoint>, CliError> {
    let data = std::fs::read_to_string(path)
        .map_err(|e| CliError::new("bad-input", format!("cannot read {path}: {e}")))?;
    let value: Value = serde_json::from_str(&data)
        .map_err(|e| CliError::new("bad-input", format!("{path}: invalid JSON: {e}")))?;
    let points = value
        .get("points")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::new("bad-input", format!("{path}: missing \"points\" array")))?;
    points
        .iter()
        .map(|p| {
            let coord = |axis: &str| {
                p.get(axis)
                    .and_then(Value::as_str)
                    .and_then(parse_rational)
                    .ok_or_else(|| {
                        CliError::new(
                            "bad-input",
                            format!("{path}: every point needs rational \"x\" and \"y\" strings"),
                        )
                    })
            };
            Ok(PlanePoint {
                x: coord("x")?,
                y: coord("y")?,
            })
        })
        .collect()
}

fn cmd_curve(d: u32, path: &str) -> Result<CommandResult, CliError> {
    let points = read_points(path)?;
    let poly = interpolate_curve(d, &points)?;
    let terms: Vec<Value> = poly
        .terms()
        .map(|((i, j), coeff)| json!({"i": i, "j": j, "coeff": rational_value(coeff)}))
        .collect();
    let command = if d == 2 { "conic" } else { "curve" };
    Ok(CommandResult::new(
        command,
        vec![("d", d.to_string()), ("points", path.to_string())],
        json!({"degree": d, "terms": terms}),
    ))
}
