//! Command-line front end for heap-hopf.
//!
//! Trees and permutations are passed as canonical-grammar literals, e.g.
//! `heap-hopf mul tree "*(1)" "*(1)"` or `heap-hopf comul perm "(1 3)(2)"`.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use heap_hopf::verify::{render_table, Report};
use heap_hopf::{
    enumerate_perms, enumerate_trees, heap_product, parse_perm_with_degree, perm_antipode,
    perm_coproduct, phi, phi_inv, tree_antipode, tree_coproduct, tree_product, verify_all, Basis,
    CyclePerm, Law, LinComb, StandardTree, Tensor,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "heap-hopf",
    version,
    about = "Heap ordered tree and permutation bialgebras"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Tree,
    Perm,
}

#[derive(Subcommand)]
enum Command {
    /// Product of two basis elements.
    Mul {
        #[command(subcommand)]
        operands: Binary,
    },
    /// Coproduct of a basis element.
    Comul {
        #[command(subcommand)]
        operand: Unary,
    },
    /// Antipode of a basis element.
    Antipode {
        #[command(subcommand)]
        operand: Unary,
    },
    /// Image of a standard tree under the bijection to permutations.
    Phi { tree: String },
    /// Standard tree corresponding to a permutation.
    PhiInv {
        perm: String,
        /// Degree of the permutation, when larger than its largest label.
        #[arg(long)]
        degree: Option<usize>,
    },
    /// List the basis of a given degree.
    Enumerate {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(long = "n")]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Check algebraic laws exhaustively; exits 1 if any law fails.
    Verify {
        /// A law identifier, or `all`.
        #[arg(long)]
        law: String,
        /// Degree bound; defaults to each law's own bound.
        #[arg(long)]
        max_degree: Option<usize>,
        /// Same as `--format json`.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum Binary {
    Tree {
        left: String,
        right: String,
    },
    Perm {
        left: String,
        right: String,
        #[arg(long)]
        left_degree: Option<usize>,
        #[arg(long)]
        right_degree: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Unary {
    Tree {
        tree: String,
    },
    Perm {
        perm: String,
        #[arg(long)]
        degree: Option<usize>,
    },
}

enum Failure {
    /// Bad input; exit status 2.
    Invalid(String),
    /// A law did not hold; exit status 1.
    LawFailed,
}

fn tree(text: &str) -> Result<StandardTree, Failure> {
    text.parse()
        .map_err(|e| Failure::Invalid(format!("invalid tree `{text}`: {e}")))
}

fn perm(text: &str, degree: Option<usize>) -> Result<CyclePerm, Failure> {
    parse_perm_with_degree(text, degree)
        .map_err(|e| Failure::Invalid(format!("invalid permutation `{text}`: {e}")))
}

fn coefficient_json(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(small) => json!(small),
        Err(_) => json!(c.to_string()),
    }
}

fn lincomb_json<B: Basis>(x: &LinComb<B>) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .into_iter()
        .map(|(b, c)| json!({ "coefficient": coefficient_json(c), "basis": b.to_string() }))
        .collect();
    json!({ "terms": terms })
}

fn tensor_json<B: Basis>(x: &LinComb<Tensor<B>>) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .into_iter()
        .map(|(t, c)| {
            json!({
                "coefficient": coefficient_json(c),
                "left": t.left.to_string(),
                "right": t.right.to_string(),
            })
        })
        .collect();
    json!({ "terms": terms })
}

fn emit(format: Format, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) {
    match format {
        Format::Text => println!("{}", text()),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&value()).expect("serializable")
        ),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    match cli.command {
        Command::Mul { operands } => match operands {
            Binary::Tree { left, right } => {
                let p = tree_product(&tree(&left)?, &tree(&right)?);
                emit(format, || p.to_string(), || lincomb_json(&p));
            }
            Binary::Perm {
                left,
                right,
                left_degree,
                right_degree,
            } => {
                let p = heap_product(&perm(&left, left_degree)?, &perm(&right, right_degree)?);
                emit(format, || p.to_string(), || lincomb_json(&p));
            }
        },
        Command::Comul { operand } => match operand {
            Unary::Tree { tree: t } => {
                let d = tree_coproduct(&tree(&t)?);
                emit(format, || d.to_string(), || tensor_json(&d));
            }
            Unary::Perm { perm: p, degree } => {
                let d = perm_coproduct(&perm(&p, degree)?);
                emit(format, || d.to_string(), || tensor_json(&d));
            }
        },
        Command::Antipode { operand } => match operand {
            Unary::Tree { tree: t } => {
                let s = tree_antipode(&tree(&t)?);
                emit(format, || s.to_string(), || lincomb_json(&s));
            }
            Unary::Perm { perm: p, degree } => {
                let s = perm_antipode(&perm(&p, degree)?);
                emit(format, || s.to_string(), || lincomb_json(&s));
            }
        },
        Command::Phi { tree: t } => {
            let image = phi(&tree(&t)?).to_string();
            emit(format, || image.clone(), || json!({ "image": image }));
        }
        Command::PhiInv { perm: p, degree } => {
            let image = phi_inv(&perm(&p, degree)?).to_string();
            emit(format, || image.clone(), || json!({ "image": image }));
        }
        Command::Enumerate {
            kind,
            n,
            count_only,
        } => {
            let items: Vec<String> = match kind {
                Kind::Tree => enumerate_trees(n)
                    .map_err(|e| Failure::Invalid(e.to_string()))?
                    .iter()
                    .map(ToString::to_string)
                    .collect(),
                Kind::Perm => enumerate_perms(n)
                    .map_err(|e| Failure::Invalid(e.to_string()))?
                    .iter()
                    .map(ToString::to_string)
                    .collect(),
            };
            let kind_name = match kind {
                Kind::Tree => "tree",
                Kind::Perm => "perm",
            };
            if count_only {
                emit(
                    format,
                    || items.len().to_string(),
                    || json!({ "kind": kind_name, "n": n, "count": items.len() }),
                );
            } else {
                emit(
                    format,
                    || items.join("\n"),
                    || json!({ "kind": kind_name, "n": n, "count": items.len(), "items": items }),
                );
            }
        }
        Command::Verify {
            law,
            max_degree,
            json,
        } => {
            let format = if json { Format::Json } else { format };
            let invalid = |e: heap_hopf::VerifyError| Failure::Invalid(e.to_string());
            let (reports, single): (Vec<Report>, bool) = if law == "all" {
                (verify_all(max_degree).map_err(invalid)?, false)
            } else {
                let law: Law = law.parse().map_err(invalid)?;
                let d = max_degree.unwrap_or(law.default_degree());
                (vec![heap_hopf::verify(law, d).map_err(invalid)?], true)
            };
            let rendered = match format {
                Format::Text => Ok(render_table(&reports).trim_end().to_string()),
                Format::Json if single => serde_json::to_string_pretty(&reports[0]),
                Format::Json => serde_json::to_string_pretty(&reports),
            }
            .expect("serializable");
            println!("{rendered}");
            if reports.iter().any(|r| !r.passed) {
                return Err(Failure::LawFailed);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::LawFailed) => ExitCode::from(1),
        Err(Failure::Invalid(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
