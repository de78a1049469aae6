//! The `hyperlayer` command-line front end.
//!
//! Exit status: 0 on success, 1 on invalid input, 2 when `eig` does not
//! converge (its partial output is still written), 64 on usage errors.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::banerjee::{alpha, banerjee_tensor, compare, partitions_count};
use crate::error::Error;
use crate::hypergraph::Hypergraph;
use crate::layers::decompose;
use crate::polynomial::{dnf_layer_extract, dnf_layer_extract_by_evaluation, homogenize};
use crate::spectral::{
    graph_case_check, layer_bound, power_iteration, DEFAULT_MAX_ITER, DEFAULT_TOL,
};
use crate::symtensor::{
    layer_tensor_degree_normalized, layer_tensor_eigen_normalized, layer_tensor_raw, SymTensor,
};
use crate::uniformization::{
    e_adjacency_tensor, layer_counts_from_tensor, reconstruct, vertex_degrees_from_tensor,
    CoefficientPolicy,
};
use crate::Rational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_NOT_CONVERGED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "hyperlayer",
    version,
    about = "Layered e-adjacency tensors of general hypergraphs"
)]
struct Cli {
    /// Output format; `compare` honours `keyvalue`, `cardinalities` too.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Coo,
    Keyvalue,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Model {
    Layered,
    Banerjee,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Norm {
    Raw,
    Degree,
    Eigen,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Policy {
    Handshake,
    Unit,
}

impl Policy {
    fn resolve(self) -> CoefficientPolicy {
        match self {
            Policy::Handshake => CoefficientPolicy::Handshake,
            Policy::Unit => CoefficientPolicy::Unit,
        }
    }
}

#[derive(Debug, Args)]
struct Input {
    /// Input file; standard input when omitted or `-`.
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Vertex count, edge count, range and layer sizes.
    Info(Input),
    /// Edges of each layer.
    Layers(Input),
    /// Tensor of the whole hypergraph or of one layer, as COO.
    Tensor {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Model::Layered)]
        model: Model,
        /// Export the tensor of layer K only.
        #[arg(long, value_name = "K")]
        layer: Option<usize>,
        /// Normalization of the layer tensor.
        #[arg(long, value_enum, default_value_t = Norm::Degree, requires = "layer")]
        norm: Norm,
    },
    /// Homogenized polynomial, one monomial per line.
    Poly {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Policy::Handshake)]
        policy: Policy,
    },
    /// Vertex degrees read off the layered tensor: `vertex degree` lines.
    Degrees(Input),
    /// Edge counts per size read off the layered tensor: `size count` lines.
    Cardinalities(Input),
    /// Hypergraph (HG v1) from a layered tensor given as COO.
    Reconstruct {
        #[command(flatten)]
        input: Input,
        /// Number of original vertices.
        #[arg(long)]
        n: usize,
    },
    /// Edges of size J extracted from the layered tensor.
    Dnf {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "J")]
        size: usize,
        /// Use polynomial evaluation differences instead of key structure.
        #[arg(long)]
        evaluation: bool,
    },
    /// Number of partitions of M into exactly S parts.
    Partitions {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        s: usize,
    },
    /// Banerjee α(K, S).
    Alpha {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        s: usize,
    },
    /// Banerjee versus layered tensor cost figures.
    Compare(Input),
    /// Δ, Δ* and the eigenvalue bound max(Δ, Δ*).
    Bound(Input),
    /// Dominant H-eigenpair by power iteration.
    Eig {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Model::Layered)]
        model: Model,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
        max_iter: usize,
    },
    /// Checks of the 2-uniform case against the graph adjacency matrix.
    GraphCheck {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
}

/// Formats a float with 12 significant digits, trailing zeros removed.
pub fn format_f64(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    let trim = |s: String| -> String {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    };
    if (-5..12).contains(&exp) {
        trim(format!("{x:.*}", (11 - exp).max(0) as usize))
    } else {
        format!("{}e{exp}", trim(mantissa.to_string()))
    }
}

enum Failure {
    Invalid(String),
    NotConverged(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

fn read_input(input: &Input, stdin: &mut dyn Read) -> std::result::Result<String, Failure> {
    let mut text = String::new();
    match &input.input {
        Some(path) if path.as_os_str() != "-" => {
            text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))?;
        }
        _ => {
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Failure::Invalid(format!("cannot read standard input: {e}")))?;
        }
    }
    Ok(text)
}

fn read_hypergraph(
    input: &Input,
    stdin: &mut dyn Read,
) -> std::result::Result<Hypergraph, Failure> {
    Ok(read_input(input, stdin)?.parse()?)
}

fn check_tol(tol: f64) -> std::result::Result<(), Failure> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(Failure::Invalid(format!(
            "--tol must be positive and finite, got {tol}"
        )))
    }
}

/// Option checks that need no input.
fn validate(command: &Command) -> std::result::Result<(), Failure> {
    match command {
        Command::Tensor {
            model: Model::Banerjee,
            layer: Some(_),
            ..
        } => Err(Failure::Invalid(
            "--layer applies to the layered model only".into(),
        )),
        Command::Tensor { layer: Some(0), .. } => {
            Err(Failure::Invalid("--layer must be at least 1".into()))
        }
        Command::Dnf { size: 0, .. } => Err(Failure::Invalid("--size must be at least 1".into())),
        Command::Eig { tol, max_iter, .. } => {
            check_tol(*tol)?;
            if *max_iter == 0 {
                return Err(Failure::Invalid("--max-iter must be at least 1".into()));
            }
            Ok(())
        }
        Command::GraphCheck { tol, .. } => check_tol(*tol),
        _ => Ok(()),
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn execute(cli: &Cli, stdin: &mut dyn Read, out: &mut String) -> std::result::Result<(), Failure> {
    validate(&cli.command)?;
    match &cli.command {
        Command::Info(input) => {
            let h = read_hypergraph(input, stdin)?;
            let _ = writeln!(out, "n={}", h.n());
            let _ = writeln!(out, "edges={}", h.num_edges());
            match decompose(&h) {
                Ok(d) => {
                    let k = d.k_max();
                    let _ = writeln!(out, "k_max={k}");
                    let _ = writeln!(out, "uniform={}", h.is_uniform(k));
                    let _ = writeln!(out, "layer_sizes={}", join(d.counts(), ","));
                    let _ = writeln!(out, "tensor_order={k}");
                    let _ = writeln!(out, "tensor_dim={}", h.n() + k - 1);
                }
                Err(Error::NoEdges) => {
                    let _ = writeln!(out, "k_max=0");
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Layers(input) => {
            let d = decompose(&read_hypergraph(input, stdin)?)?;
            for (k, layer) in (1..=d.k_max()).zip(d.layers()) {
                let _ = writeln!(out, "layer {k}: {} edges", layer.num_edges());
                for e in layer.edges() {
                    let _ = writeln!(out, "  {e}");
                }
            }
        }
        Command::Tensor {
            input,
            model,
            layer,
            norm,
        } => {
            let h = read_hypergraph(input, stdin)?;
            match (model, layer) {
                (Model::Banerjee, _) => out.push_str(&banerjee_tensor(&h)?.to_coo()),
                (Model::Layered, None) => out.push_str(&e_adjacency_tensor(&h)?.to_coo()),
                (Model::Layered, Some(k)) => {
                    let d = decompose(&h)?;
                    if *k > d.k_max() {
                        return Err(Failure::Invalid(format!(
                            "--layer {k} exceeds k_max = {}",
                            d.k_max()
                        )));
                    }
                    let hk = d.layer(*k);
                    match norm {
                        Norm::Raw => out.push_str(&layer_tensor_raw(hk, *k)?.to_coo()),
                        Norm::Degree => {
                            out.push_str(&layer_tensor_degree_normalized(hk, *k)?.to_coo())
                        }
                        Norm::Eigen => out.push_str(
                            &layer_tensor_eigen_normalized(hk, *k)?.to_coo_with(|v| format_f64(*v)),
                        ),
                    }
                }
            }
        }
        Command::Poly { input, policy } => {
            let h = read_hypergraph(input, stdin)?;
            out.push_str(&homogenize(&h, &policy.resolve())?.render(h.n()));
        }
        Command::Degrees(input) => {
            let h = read_hypergraph(input, stdin)?;
            let degrees = vertex_degrees_from_tensor(&e_adjacency_tensor(&h)?, h.n())?;
            for (v, d) in degrees.iter().enumerate() {
                let _ = writeln!(out, "{} {d}", v + 1);
            }
        }
        Command::Cardinalities(input) => {
            let h = read_hypergraph(input, stdin)?;
            let counts = layer_counts_from_tensor(&e_adjacency_tensor(&h)?, h.n())?;
            if cli.format == Format::Keyvalue {
                for (s, c) in counts.per_size.iter().enumerate() {
                    let _ = writeln!(out, "count_{}={c}", s + 1);
                }
                let (edges, special) = counts.cumulative.split_last().expect("k_max >= 1");
                for (i, d) in special.iter().enumerate() {
                    let _ = writeln!(out, "d_{}={d}", h.n() + i + 1);
                }
                let _ = writeln!(out, "edges={edges}");
            } else {
                for (s, c) in counts.per_size.iter().enumerate() {
                    let _ = writeln!(out, "{} {c}", s + 1);
                }
            }
        }
        Command::Reconstruct { input, n } => {
            let t: SymTensor<Rational> = read_input(input, stdin)?.parse()?;
            out.push_str(&reconstruct(&t, *n)?.to_string());
        }
        Command::Dnf {
            input,
            size,
            evaluation,
        } => {
            let h = read_hypergraph(input, stdin)?;
            let t = e_adjacency_tensor(&h)?;
            let edges = if *evaluation {
                dnf_layer_extract_by_evaluation(&t, h.n(), *size)?
            } else {
                dnf_layer_extract(&t, h.n(), *size)?
            };
            for e in edges {
                let _ = writeln!(out, "{e}");
            }
        }
        Command::Partitions { m, s } => {
            let _ = writeln!(out, "{}", partitions_count(*m, *s));
        }
        Command::Alpha { k, s } => {
            let _ = writeln!(out, "{}", alpha(*k, *s)?);
        }
        Command::Compare(input) => {
            let report = compare(&read_hypergraph(input, stdin)?)?;
            if cli.format == Format::Keyvalue {
                out.push_str(&report.to_key_values());
            } else {
                out.push_str(&report.to_table());
            }
        }
        Command::Bound(input) => {
            let b = layer_bound(&read_hypergraph(input, stdin)?)?;
            let _ = writeln!(out, "delta={}", b.delta);
            let _ = writeln!(out, "delta_star={}", b.delta_star);
            let _ = writeln!(out, "bound={}", b.bound);
        }
        Command::Eig {
            input,
            model,
            tol,
            max_iter,
        } => {
            let h = read_hypergraph(input, stdin)?;
            let t = match model {
                Model::Layered => e_adjacency_tensor(&h)?,
                Model::Banerjee => banerjee_tensor(&h)?,
            };
            let e = power_iteration(&t.to_f64(), *tol, *max_iter)?;
            let _ = writeln!(out, "lambda={}", format_f64(e.lambda));
            let _ = writeln!(out, "bracket_width={}", format_f64(e.bracket_width()));
            let _ = writeln!(out, "iterations={}", e.iterations);
            let _ = writeln!(out, "residual={}", format_f64(e.residual));
            let _ = writeln!(out, "converged={}", e.converged);
            let _ = writeln!(out, "x={}", join(e.x.iter().map(|v| format_f64(*v)), " "));
            if !e.converged {
                return Err(Failure::NotConverged(format!(
                    "power iteration did not converge in {max_iter} iterations"
                )));
            }
        }
        Command::GraphCheck { input, tol } => {
            let r = graph_case_check(&read_hypergraph(input, stdin)?, *tol)?;
            let _ = writeln!(out, "c2={}", r.c2);
            let _ = writeln!(out, "block_structure={}", r.block_structure);
            let _ = writeln!(out, "zero_eigenpair={}", r.zero_eigenpair);
            let _ = writeln!(out, "layered_dominant={}", format_f64(r.layered_dominant));
            let _ = writeln!(out, "graph_dominant={}", format_f64(r.graph_dominant));
            let _ = writeln!(out, "dominant_relation={}", r.dominant_relation);
            let _ = writeln!(out, "passed={}", r.passed());
            if !r.passed() {
                return Err(Failure::Invalid("graph case check failed".into()));
            }
        }
    }
    Ok(())
}

/// Runs the CLI on `args` (program name first) and returns the exit status.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(rendered.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = stderr.write_all(rendered.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let mut out = String::new();
    let result = execute(&cli, stdin, &mut out);
    let _ = stdout.write_all(out.as_bytes());
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Invalid(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_INVALID
        }
        Err(Failure::NotConverged(message)) => {
            let _ = writeln!(stderr, "warning: {message}");
            EXIT_NOT_CONVERGED
        }
    }
}
