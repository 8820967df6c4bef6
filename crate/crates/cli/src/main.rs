//! Single entry point wiring the construction, verification, solver, and
//! table emitters, with machine-readable output and deterministic exit
//! codes: 0 when all requested checks pass, 1 on check failure, 2 on usage
//! errors. Identical invocations (including seeds) produce byte-identical
//! output; all JSON keys are sorted and lines end with LF.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use tkklab_core::cartan::{cartan_basis, phi_iso, root_system};
use tkklab_core::exactnum::{Rat, Scalar};
use tkklab_core::jordan::{
    build_jordan, jordan_frame, verify_frame, verify_jordan_axioms, JordanKind,
};
use tkklab_core::report::Report;
use tkklab_core::tkk::build_tkk;
use tkklab_core::ueval::{build_context, hw_eval, q_elements, verify_lemma7};
use tkklab_core::weights::{
    check_report_json, check_weight, check_weight_hw, ehw_tables, equations_for, solve_weights,
    tables_json,
};

#[derive(Parser)]
#[command(
    name = "tkklab",
    about = "Exact construction and verification of simple Euclidean Jordan algebras, their conformal Lie algebras, and the quadratic highest-weight relations",
    long_about = None,
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct AlgebraArgs {
    /// Algebra kind: spin | hermR | hermC | hermH | hermO3 (alias: e7)
    #[arg(long)]
    kind: String,
    /// Size parameter n (defaults to 3 for hermO3/e7)
    #[arg(long)]
    n: Option<usize>,
}

impl AlgebraArgs {
    fn resolve(&self) -> Result<(JordanKind, usize), String> {
        let kind = JordanKind::parse(&self.kind).map_err(|e| e.to_string())?;
        let n = match (kind, self.n) {
            (JordanKind::HermO3, None) => 3,
            (_, Some(n)) => n,
            (_, None) => return Err("--n is required for this kind".into()),
        };
        Ok((kind, n))
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Jordan algebra construction and axioms
    Jordan {
        #[command(subcommand)]
        cmd: JordanCmd,
    },
    /// Conformal (TKK) Lie algebra structure constants
    Tkk {
        #[command(subcommand)]
        cmd: TkkCmd,
    },
    /// Root systems and Cartan bases
    Cartan {
        #[command(subcommand)]
        cmd: CartanCmd,
    },
    /// Enveloping-algebra identities and highest-weight evaluation
    Ueval {
        #[command(subcommand)]
        cmd: UevalCmd,
    },
    /// Weight equation systems, solver, and tables
    Weights {
        #[command(subcommand)]
        cmd: WeightsCmd,
    },
    /// Umbrella verification: jordan | tkk | cartan | all
    Verify {
        target: String,
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
}

#[derive(Subcommand)]
enum JordanCmd {
    /// Emit kind, size, dimensions, and basis labels as JSON
    Info {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Include the full product tensor
        #[arg(long)]
        tensor: bool,
    },
    /// Check the algebra axioms, the trace form, and the frame properties
    Verify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum TkkCmd {
    /// Emit the structure constants of the conformal algebra as JSON
    Build {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Output file (stdout when omitted)
        #[arg(long)]
        out: Option<String>,
    },
    /// Check bracket antisymmetry and the Jacobi identity on all triples
    Verify {
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
}

#[derive(Subcommand)]
enum CartanCmd {
    /// Verify the Cartan basis eigenvalue relations and pairings
    Verify {
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Emit the signed root list as JSON
    Roots {
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
}

#[derive(Subcommand)]
enum UevalCmd {
    /// Verify the nested commutator identities of the avatar element
    Lemma7 {
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Evaluate a quadratic element on a highest weight vector
    Hw {
        #[command(flatten)]
        algebra: AlgebraArgs,
        /// Weight tuple as JSON, e.g. "[0,0,0,0,0,-4,2,-2]" or "[\"-1/2\",...]"
        #[arg(long)]
        weight: String,
        /// Constant of the primary relation, e.g. "15/16"
        #[arg(long)]
        a: String,
        /// Relation: Q1 | Q2 | Q3 | Q4
        #[arg(long, default_value = "Q1")]
        relation: String,
        /// Frame element for Q3/Q4, e.g. "e11" (scaled by sqrt(rank)) or "e11+e22"
        #[arg(long)]
        u: Option<String>,
    },
}

#[derive(Subcommand)]
enum WeightsCmd {
    /// Bounded exhaustive search for weights satisfying the full system
    Solve {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value_t = 2)]
        k_max: i64,
        #[arg(long, default_value_t = 3)]
        bound: i64,
    },
    /// Check one weight/constant pair against the equation system
    Check {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        a: String,
        /// Also run the enveloping-algebra evaluation path
        #[arg(long)]
        hw: bool,
    },
    /// Emit the reference tables
    Tables {
        #[arg(long, default_value = "md")]
        format: String,
    },
}

fn parse_weight(s: &str) -> Result<Vec<Rat>, String> {
    let v: Value = serde_json::from_str(s).map_err(|e| format!("weight: {e}"))?;
    let arr = v.as_array().ok_or("weight must be a JSON array")?;
    arr.iter()
        .map(|x| match x {
            Value::Number(n) => n
                .as_i64()
                .map(|i| Rat::from_integer(i.into()))
                .ok_or_else(|| "weight entries must be integers or \"p/q\" strings".to_string()),
            Value::String(t) => t.parse::<Rat>().map_err(|_| format!("bad rational: {t}")),
            _ => Err("weight entries must be integers or \"p/q\" strings".into()),
        })
        .collect()
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    s.parse::<Rat>().map_err(|_| format!("bad rational: {s}"))
}

/// Parse a frame-element expression: `e11`, `e12`, `e12^2`, `e11+e22`.
fn parse_u(
    alg: &std::sync::Arc<tkklab_core::jordan::JordanAlgebra>,
    spec: &str,
    scale_sqrt_rho: bool,
) -> Result<tkklab_core::jordan::JordanElement, String> {
    let mut total: Option<tkklab_core::jordan::JordanElement> = None;
    for part in spec.split('+') {
        let part = part.trim();
        let (body, mu) = match part.split_once('^') {
            Some((b, m)) => (b, m.parse::<usize>().map_err(|_| "bad unit index")?),
            None => (part, 1),
        };
        let digits: Vec<u32> = body
            .strip_prefix('e')
            .ok_or("element labels start with 'e'")?
            .chars()
            .map(|c| c.to_digit(10).ok_or("bad index digit"))
            .collect::<Result<_, _>>()?;
        if digits.len() != 2 {
            return Err("element labels use two single-digit indices".into());
        }
        let (i, j) = (digits[0] as usize, digits[1] as usize);
        let elem = if i == j {
            alg.diag(i)
        } else {
            alg.off(i.min(j), i.max(j), mu)
        };
        total = Some(match total {
            None => elem,
            Some(t) => t.add(&elem),
        });
    }
    let mut u = total.ok_or("empty element expression")?;
    if scale_sqrt_rho && !spec.contains('+') {
        let (rho, _) = alg.rank_degree().map_err(|e| e.to_string())?;
        u = u.scale(&Scalar::sqrt(rho as u64));
    }
    Ok(u)
}

fn report_lines(section: &str, rep: &Report) -> (Vec<Value>, bool) {
    let mut out = Vec::new();
    for item in &rep.items {
        out.push(json!({
            "section": section,
            "identity": item.label,
            "status": if item.passed { "pass" } else { "fail" },
            "witness": item.witness,
        }));
    }
    (out, rep.all_passed())
}

fn emit(lines: &[Value]) {
    for l in lines {
        println!("{l}");
    }
}

fn tier_is_large() -> bool {
    std::env::var("TKKLAB_TIER")
        .map(|t| t.eq_ignore_ascii_case("large"))
        .unwrap_or(false)
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.cmd {
        Cmd::Jordan { cmd } => match cmd {
            JordanCmd::Info { algebra, tensor } => {
                let (kind, n) = algebra.resolve()?;
                let alg = build_jordan(kind, n).map_err(|e| e.to_string())?;
                let mut info = alg.info_json();
                if tensor {
                    info["product_tensor"] = alg.tensor_json();
                }
                println!("{info}");
                Ok(true)
            }
            JordanCmd::Verify {
                algebra,
                samples,
                seed,
            } => {
                let (kind, n) = algebra.resolve()?;
                let alg = build_jordan(kind, n).map_err(|e| e.to_string())?;
                let axioms = verify_jordan_axioms(&alg, samples, seed);
                let frame = verify_frame(&alg, &jordan_frame(&alg));
                let (mut lines, ok1) = report_lines("axioms", &axioms);
                let (more, ok2) = report_lines("frame", &frame);
                lines.extend(more);
                emit(&lines);
                Ok(ok1 && ok2)
            }
        },
        Cmd::Tkk { cmd } => match cmd {
            TkkCmd::Build { algebra, out } => {
                let (kind, n) = algebra.resolve()?;
                let alg = build_jordan(kind, n).map_err(|e| e.to_string())?;
                let tkk = build_tkk(&alg).map_err(|e| e.to_string())?;
                let payload = tkk.lie.structure_json();
                match out {
                    Some(path) => {
                        std::fs::write(&path, format!("{payload}\n")).map_err(|e| e.to_string())?
                    }
                    None => println!("{payload}"),
                }
                Ok(true)
            }
            TkkCmd::Verify { algebra } => {
                let (kind, n) = algebra.resolve()?;
                let alg = build_jordan(kind, n).map_err(|e| e.to_string())?;
                let tkk = build_tkk(&alg).map_err(|e| e.to_string())?;
                let rep = tkk.lie.verify_jacobi();
                let (lines, ok) = report_lines("tkk", &rep);
                emit(&lines);
                Ok(ok)
            }
        },
        Cmd::Cartan { cmd } => match cmd {
            CartanCmd::Verify { algebra } => {
                let (kind, n) = algebra.resolve()?;
                let mut lines = Vec::new();
                let mut ok = true;
                if kind == JordanKind::SpinFactor {
                    let phi = phi_iso(n).map_err(|e| e.to_string())?;
                    let (more, o) = report_lines("phi", &phi.verify());
                    lines.extend(more);
                    ok &= o;
                }
                let cb = cartan_basis(kind, n).map_err(|e| e.to_string())?;
                let (more, o) = report_lines("cartan", &cb.verify());
                lines.extend(more);
                ok &= o;
                let constants = cb.pairing_constants().map_err(|e| e.to_string())?;
                for (root, c) in constants {
                    lines.push(json!({
                        "section": "pairing",
                        "root": root,
                        "constant": c.to_string(),
                    }));
                }
                for note in &cb.notes {
                    lines.push(json!({"section": "notes", "note": note}));
                }
                emit(&lines);
                Ok(ok)
            }
            CartanCmd::Roots { algebra } => {
                let (kind, n) = algebra.resolve()?;
                let sys = root_system(kind, n).map_err(|e| e.to_string())?;
                let roots: Vec<Value> = sys
                    .roots
                    .iter()
                    .map(|r| {
                        json!({
                            "coords": r.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                            "compact": r.compact,
                            "positive": r.positive,
                        })
                    })
                    .collect();
                println!("{}", json!({ "coord_len": sys.coord_len, "roots": roots }));
                Ok(true)
            }
        },
        Cmd::Ueval { cmd } => match cmd {
            UevalCmd::Lemma7 { algebra } => {
                let (kind, n) = algebra.resolve()?;
                let ctx = build_context(kind, n).map_err(|e| e.to_string())?;
                let rep = verify_lemma7(&ctx).map_err(|e| e.to_string())?;
                let (lines, ok) = report_lines("lemma", &rep);
                emit(&lines);
                Ok(ok)
            }
            UevalCmd::Hw {
                algebra,
                weight,
                a,
                relation,
                u,
            } => {
                let (kind, n) = algebra.resolve()?;
                let lambda = parse_weight(&weight)?;
                let a = parse_rat(&a)?;
                let ctx = build_context(kind, n).map_err(|e| e.to_string())?;
                let u_elem = match &u {
                    Some(spec) => Some(parse_u(&ctx.tkk.jordan, spec, true)?),
                    None => None,
                };
                let q = q_elements(&ctx, &Scalar::from_rat(a.clone()), u_elem.as_ref())
                    .map_err(|e| e.to_string())?;
                let element = match relation.as_str() {
                    "Q1" => q.q1,
                    "Q1'" | "Q1prime" => q.q1_prime,
                    "Q2" => q.q2,
                    "Q3" => q.q3.ok_or("Q3 requires --u")?,
                    "Q4" => q.q4.ok_or("Q4 requires --u")?,
                    other => return Err(format!("unknown relation: {other}")),
                };
                let res = hw_eval(&element, &lambda).map_err(|e| e.to_string())?;
                let payload = json!({
                    "relation": relation,
                    "scalar_part": res.scalar_part.to_json(),
                    "scalar_is_zero": res.scalar_part.is_zero(),
                    "residual_terms": res.residual.terms.len(),
                    "positive_terms": res.positive_part.terms.len(),
                });
                println!("{payload}");
                Ok(res.scalar_part.is_zero())
            }
        },
        Cmd::Weights { cmd } => match cmd {
            WeightsCmd::Solve {
                algebra,
                k_max,
                bound,
            } => {
                let (kind, n) = algebra.resolve()?;
                let system = equations_for(kind, n).map_err(|e| e.to_string())?;
                let sols = solve_weights(&system, k_max, bound).map_err(|e| e.to_string())?;
                for s in &sols {
                    let family = s
                        .family
                        .as_ref()
                        .map(|(name, k)| json!({"name": name, "k": k.to_string()}));
                    println!(
                        "{}",
                        json!({
                            "weight": s.lambda.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                            "a": s.a.to_string(),
                            "family": family,
                        })
                    );
                }
                Ok(true)
            }
            WeightsCmd::Check {
                algebra,
                weight,
                a,
                hw,
            } => {
                let (kind, n) = algebra.resolve()?;
                let lambda = parse_weight(&weight)?;
                let a = parse_rat(&a)?;
                let system = equations_for(kind, n).map_err(|e| e.to_string())?;
                let mut rep = check_weight(&system, &lambda, &a).map_err(|e| e.to_string())?;
                if hw {
                    let ctx = build_context(kind, n).map_err(|e| e.to_string())?;
                    let hw_rep =
                        check_weight_hw(&ctx, &system, &lambda, &a).map_err(|e| e.to_string())?;
                    rep.merge(hw_rep);
                }
                let ok = rep.all_passed();
                println!("{}", check_report_json(&lambda, &a, &rep));
                Ok(ok)
            }
            WeightsCmd::Tables { format } => match format.as_str() {
                "md" => {
                    let (t1, t2, t3, rep) = ehw_tables();
                    print!("{t1}\n{t2}\n{t3}");
                    let (lines, ok) = report_lines("identities", &rep);
                    emit(&lines);
                    Ok(ok)
                }
                "json" => {
                    println!("{}", tables_json());
                    let (_, _, _, rep) = ehw_tables();
                    Ok(rep.all_passed())
                }
                other => Err(format!("unknown format: {other}")),
            },
        },
        Cmd::Verify { target, algebra } => {
            let (kind, n) = algebra.resolve()?;
            if n == 0 {
                return Err("--n must be positive".into());
            }
            let mut lines = Vec::new();
            let mut ok = true;
            let want = |t: &str| target == t || target == "all";
            if want("jordan") {
                let alg = build_jordan(kind, n).map_err(|e| e.to_string())?;
                let (more, o) = report_lines("jordan", &verify_jordan_axioms(&alg, 50, 1));
                lines.extend(more);
                ok &= o;
                let (more, o) = report_lines("frame", &verify_frame(&alg, &jordan_frame(&alg)));
                lines.extend(more);
                ok &= o;
            }
            if want("tkk") {
                let heavy = kind == JordanKind::HermO3;
                if !heavy || tier_is_large() {
                    let alg = build_jordan(kind, n).map_err(|e| e.to_string())?;
                    let tkk = build_tkk(&alg).map_err(|e| e.to_string())?;
                    let (more, o) = report_lines("tkk", &tkk.lie.verify_jacobi());
                    lines.extend(more);
                    ok &= o;
                } else {
                    lines.push(json!({
                        "section": "tkk",
                        "identity": "jacobi identity",
                        "status": "skipped",
                        "witness": "large tier only (set TKKLAB_TIER=large)",
                    }));
                }
            }
            if want("cartan") {
                let heavy = kind == JordanKind::HermO3;
                if !heavy || tier_is_large() {
                    let cb = cartan_basis(kind, n).map_err(|e| e.to_string())?;
                    let (more, o) = report_lines("cartan", &cb.verify());
                    lines.extend(more);
                    ok &= o;
                } else {
                    lines.push(json!({
                        "section": "cartan",
                        "identity": "eigenvalue relations",
                        "status": "skipped",
                        "witness": "large tier only (set TKKLAB_TIER=large)",
                    }));
                }
            }
            if !want("jordan") && !want("tkk") && !want("cartan") {
                return Err(format!("unknown verify target: {target}"));
            }
            emit(&lines);
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
