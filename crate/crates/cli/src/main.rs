//! `lexcone`: command-line front end for the `lexcone` library.
//!
//! Every JSON argument is either inline (starts with `{` or `[`) or a path
//! to a file holding it. Boolean queries print `true`/`false`; everything
//! else prints JSON. Parse, usage and domain errors exit with status 2,
//! failed property checks with status 1.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use lexcone::conelab;
use lexcone::generators;
use lexcone::lattice;
use lexcone::lexvec;
use lexcone::rational;
use lexcone::selfcheck::{self, RunConfig};
use lexcone::{
    classify, Decomposition, Error, FinCone, LexSum, LexVector, Poset, RatMatrix, TensorSpace,
};

#[derive(Parser)]
#[command(
    name = "lexcone",
    version,
    about = "Exact lexicographic cones over finite posets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate or describe a poset.
    #[command(subcommand)]
    Poset(PosetCmd),
    /// Is the vector in the positive cone?
    Positive(VecArgs),
    /// Is f ≤ g?
    Leq(PairArgs),
    /// Supremum of f and g (g defaults to 0). Forests only.
    Sup(SupArgs),
    /// Infimum of f and g (g defaults to 0). Forests only.
    Inf(SupArgs),
    /// Absolute value. Forests only.
    Abs(SingleArgs),
    /// On a non-forest: a vector f such that {f, 0} has no supremum, and a
    /// strictly decreasing chain of upper bounds.
    NosupWitness {
        #[arg(long)]
        poset: String,
        #[arg(long, default_value_t = 50)]
        steps: usize,
    },
    /// Positive combination of canonical generators equal to a positive vector.
    Decompose(VecArgs),
    /// Sum a decomposition back into a vector.
    Recombine {
        #[arg(long)]
        poset: String,
        #[arg(long)]
        decomposition: String,
    },
    /// Generators of the dual cone.
    DualGens {
        #[arg(long)]
        poset: String,
    },
    /// Is the vector (keyed by "s|t") in the projective cone of Lex(S) ⊗ Lex(T)?
    TensorMember(TensorArgs),
    /// Write a positive vector on S × T as a sum of positive elementary tensors.
    TensorDecompose(TensorArgs),
    /// Sum a tensor representation back into a vector on S × T.
    TensorFlatten {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        rep: String,
    },
    /// Finitely generated rational cones.
    #[command(subcommand)]
    Cone(ConeCmd),
    /// Projective cone of two finitely generated cones.
    #[command(subcommand)]
    Kp(KpCmd),
    /// Forests as nested lexicographic-union terms.
    #[command(subcommand)]
    Classify(ClassifyCmd),
    /// Run the seeded property suites and print a JSON report.
    Selfcheck {
        #[arg(long, env = "LEXCONE_SEED", default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        trials: usize,
        #[arg(long, default_value_t = 8)]
        max_poset_size: usize,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        /// Restrict to the named suites (repeatable).
        #[arg(long = "suite")]
        suites: Vec<String>,
    },
}

#[derive(Subcommand)]
enum PosetCmd {
    /// Parse and validate; prints `true`.
    Check { poset: String },
    /// Hasse diagram, minimal elements, forest structure.
    Info { poset: String },
}

#[derive(Subcommand)]
enum ConeCmd {
    Member {
        #[arg(long)]
        cone: String,
        #[arg(long)]
        vec: String,
    },
    Pointed {
        #[arg(long)]
        cone: String,
    },
    /// Nonzero x with ⟨x, g⟩ ≥ 0 for every generator.
    DualVector {
        #[arg(long)]
        cone: String,
    },
    /// Invertible A with every A·g lexicographically positive.
    Embed {
        #[arg(long)]
        cone: String,
    },
}

#[derive(Subcommand)]
enum KpCmd {
    /// Embedding certificate plus sampled two-sided LP checks.
    Check {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, env = "LEXCONE_SEED", default_value_t = 42)]
        seed: u64,
    },
    /// Is the dim(X) × dim(Y) matrix in the projective cone?
    Member {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        matrix: String,
    },
}

#[derive(Subcommand)]
enum ClassifyCmd {
    ToTerm {
        #[arg(long)]
        poset: String,
    },
    ToForest {
        #[arg(long)]
        term: String,
    },
    /// Isomorphism invariant of a forest.
    Canonical {
        #[arg(long)]
        poset: String,
    },
}

#[derive(Args)]
struct VecArgs {
    #[arg(long)]
    poset: String,
    #[arg(long)]
    vec: String,
}

#[derive(Args)]
struct SingleArgs {
    #[arg(long)]
    poset: String,
    #[arg(long)]
    f: String,
}

#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    poset: String,
    #[arg(long)]
    f: String,
    #[arg(long)]
    g: String,
}

#[derive(Args)]
struct SupArgs {
    #[arg(long)]
    poset: String,
    #[arg(long)]
    f: String,
    #[arg(long)]
    g: Option<String>,
}

#[derive(Args)]
struct TensorArgs {
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
    #[arg(long)]
    vec: String,
}

enum Output {
    Bool(bool),
    Json(Value),
    /// Printed like `Json`, but the command exits with status 1.
    Failed(Value),
}

fn load(arg: &str) -> Result<String, Error> {
    let t = arg.trim_start();
    if t.starts_with('{') || t.starts_with('[') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("cannot read `{arg}`: {e}")))
}

fn poset(arg: &str) -> Result<Arc<Poset>, Error> {
    Ok(Arc::new(Poset::from_json(&load(arg)?)?))
}

fn vector(p: &Arc<Poset>, arg: &str) -> Result<LexVector, Error> {
    LexVector::from_json(p, &load(arg)?)
}

fn cone(arg: &str) -> Result<FinCone, Error> {
    FinCone::from_json(&load(arg)?)
}

fn rationals(arg: &str) -> Result<Vec<lexcone::Rat>, Error> {
    let raw: Vec<String> = serde_json::from_str(&load(arg)?)?;
    rational::parse_vec(&raw)
}

fn tensor_space(left: &str, right: &str) -> Result<TensorSpace, Error> {
    Ok(TensorSpace::new(poset(left)?, poset(right)?))
}

fn sup_operands(a: &SupArgs) -> Result<(LexVector, LexVector), Error> {
    let p = poset(&a.poset)?;
    let g = match &a.g {
        Some(g) => vector(&p, g)?,
        None => LexVector::zero(&p),
    };
    Ok((vector(&p, &a.f)?, g))
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("output types serialise")
}

fn run(command: Command) -> Result<Output, Error> {
    use Output::{Bool, Json};
    Ok(match command {
        Command::Poset(PosetCmd::Check { poset: p }) => {
            poset(&p)?;
            Bool(true)
        }
        Command::Poset(PosetCmd::Info { poset: p }) => {
            let p = poset(&p)?;
            let forest = p.classify_forest();
            Json(json!({
                "elements": p.labels(),
                "covers": p.covers(),
                "minimal": p.minimal_elements(),
                "linear_extension": p.linear_extension(),
                "is_forest": forest.is_forest,
                "witness": forest.witness,
                "trees": forest.trees,
            }))
        }
        Command::Positive(a) => Bool(vector(&poset(&a.poset)?, &a.vec)?.is_positive()),
        Command::Leq(a) => {
            let p = poset(&a.poset)?;
            Bool(vector(&p, &a.f)?.leq(&vector(&p, &a.g)?)?)
        }
        Command::Sup(a) => {
            let (f, g) = sup_operands(&a)?;
            Json(lattice::sup(&f, &g)?.to_json())
        }
        Command::Inf(a) => {
            let (f, g) = sup_operands(&a)?;
            Json(lattice::inf(&f, &g)?.to_json())
        }
        Command::Abs(a) => {
            let p = poset(&a.poset)?;
            Json(lattice::abs(&vector(&p, &a.f)?)?.to_json())
        }
        Command::NosupWitness { poset: p, steps } => {
            let p = poset(&p)?;
            let w = lattice::no_sup_witness(&p)?;
            let chain = w.chain(w.start(), steps)?;
            if !chain.verify() {
                return Err(Error::DescentFailed);
            }
            let (s, t, m) = w.labels();
            Json(json!({
                "s": s,
                "t": t,
                "m": m,
                "f": w.f.to_json(),
                "chain": chain.bounds.iter().map(LexVector::to_json).collect::<Vec<_>>(),
            }))
        }
        Command::Decompose(a) => {
            let p = poset(&a.poset)?;
            Json(generators::decompose(&vector(&p, &a.vec)?)?.to_json())
        }
        Command::Recombine {
            poset: p,
            decomposition,
        } => {
            let p = poset(&p)?;
            Json(
                Decomposition::from_json(&p, &load(&decomposition)?)?
                    .recombine()
                    .to_json(),
            )
        }
        Command::DualGens { poset: p } => {
            let gens = lexvec::dual_generators(&poset(&p)?);
            Json(Value::Array(gens.iter().map(LexVector::to_json).collect()))
        }
        Command::TensorMember(a) => {
            let space = tensor_space(&a.left, &a.right)?;
            Bool(space.kp_member(&vector(&space.product, &a.vec)?)?)
        }
        Command::TensorDecompose(a) => {
            let space = tensor_space(&a.left, &a.right)?;
            let rep = space.kp_decompose(&vector(&space.product, &a.vec)?)?;
            Json(space.rep_to_json(&rep))
        }
        Command::TensorFlatten { left, right, rep } => {
            let space = tensor_space(&left, &right)?;
            let rep = space.rep_from_json(&load(&rep)?)?;
            Json(space.flatten(&rep)?.to_json())
        }
        Command::Cone(ConeCmd::Member { cone: c, vec }) => {
            Bool(cone(&c)?.cone_member(&rationals(&vec)?)?)
        }
        Command::Cone(ConeCmd::Pointed { cone: c }) => Bool(cone(&c)?.is_pointed()),
        Command::Cone(ConeCmd::DualVector { cone: c }) => {
            Json(to_value(&rational::format_vec(&cone(&c)?.dual_vector()?)))
        }
        Command::Cone(ConeCmd::Embed { cone: c }) => {
            Json(to_value(&cone(&c)?.lex_embed()?.matrix.to_strings()))
        }
        Command::Kp(KpCmd::Check { x, y, trials, seed }) => {
            let report = conelab::kp_pointedness_check(&cone(&x)?, &cone(&y)?, trials, seed)?;
            if report.passed {
                Json(to_value(&report))
            } else {
                Output::Failed(to_value(&report))
            }
        }
        Command::Kp(KpCmd::Member { x, y, matrix }) => {
            let (x, y) = (cone(&x)?, cone(&y)?);
            let rows: Vec<Vec<String>> = serde_json::from_str(&load(&matrix)?)?;
            if rows.len() != x.dim() {
                return Err(Error::DimensionMismatch {
                    expected: x.dim(),
                    found: rows.len(),
                });
            }
            Bool(conelab::kp_member_general(
                &x,
                &y,
                &RatMatrix::from_strings(&rows, y.dim())?,
            )?)
        }
        Command::Classify(ClassifyCmd::ToTerm { poset: p }) => {
            Json(to_value(&classify::forest_to_term(&*poset(&p)?)?))
        }
        Command::Classify(ClassifyCmd::ToForest { term }) => {
            let term: LexSum = serde_json::from_str(&load(&term)?)?;
            Json(to_value(&classify::term_to_forest(&term).to_spec()))
        }
        Command::Classify(ClassifyCmd::Canonical { poset: p }) => {
            Json(Value::String(classify::canonical_form(&*poset(&p)?)?))
        }
        Command::Selfcheck {
            seed,
            trials,
            max_poset_size,
            max_dim,
            suites,
        } => {
            if trials == 0 || max_poset_size == 0 || max_dim == 0 {
                return Err(Error::Parse(
                    "trials, max-poset-size and max-dim must be positive".into(),
                ));
            }
            let cfg = RunConfig {
                seed,
                trials,
                max_poset_size,
                max_dim,
                suites,
            };
            let report = selfcheck::run(&cfg)?;
            if report.passed {
                Json(to_value(&report))
            } else {
                Output::Failed(to_value(&report))
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Output::Bool(b)) => {
            println!("{b}");
            ExitCode::SUCCESS
        }
        Ok(Output::Json(v)) => {
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            ExitCode::SUCCESS
        }
        Ok(Output::Failed(v)) => {
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
