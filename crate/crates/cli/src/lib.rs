//! Command-line front end for the `deligne` crate.
//!
//! [`run`] takes the argument vector and returns the exit code together with
//! what would be written to stdout and stderr, so it can be tested without
//! spawning a process.

pub mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use deligne::affine::{self, LieFamily};
use deligne::arith::{parse_rat, Poly, Rat, Series, DEFAULT_TRUNC};
use deligne::center;
use deligne::diagrams::{self, DiagElement, Diagram, Family, Object};
use deligne::dims;
use deligne::invariants::{self, KostantRhs, NecklaceFamily, Variant};
use deligne::partitions::{IntegerWeight, Partition};
use deligne::symfunc;
use deligne::verify;
use deligne::Error;

#[derive(Parser, Debug)]
#[command(
    name = "deligne",
    version,
    about = "Exact computations in Rep(GL_t), Rep(O_t) and Rep(Sp_2t)"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Truncation order N of q-series (coefficients through q^N).
    #[arg(long, default_value_t = DEFAULT_TRUNC, global = true)]
    trunc: usize,
    /// Evaluate polynomial results at this rational value of t.
    #[arg(long, global = true, value_parser = rational)]
    at: Option<Rat>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum FamilyArg {
    Gl,
    O,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Gl => Family::Gl,
            FamilyArg::O => Family::O,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension polynomials of simple objects.
    #[command(subcommand)]
    Dim(DimCmd),
    /// Dimension and basis of a hom space between tensor powers.
    Hom {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// `r,s` or a word like `+-+` (GL), `r` (O).
        #[arg(long, allow_hyphen_values = true)]
        source: String,
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        /// Also list the basis diagrams.
        #[arg(long)]
        list: bool,
    },
    /// Diagram calculus.
    #[command(subcommand)]
    Brauer(BrauerCmd),
    /// Kronecker product s_λ * s_μ.
    Kron {
        #[arg(long, value_parser = partition, allow_hyphen_values = true)]
        lam: Partition,
        #[arg(long, value_parser = partition, allow_hyphen_values = true)]
        mu: Partition,
    },
    /// Principal specialization s_λ(q, q², …).
    Spec {
        #[arg(long, value_parser = partition, allow_hyphen_values = true)]
        lam: Partition,
    },
    /// Central characters.
    #[command(subcommand)]
    Center(CenterCmd),
    /// Hilbert series.
    #[command(subcommand)]
    Series(SeriesCmd),
    /// Affine characters and Sugawara constants.
    #[command(subcommand)]
    Affine(AffineCmd),
    /// Run the self-check suites (`all`, a suite name, or 1-10).
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

#[derive(Subcommand, Debug)]
enum DimCmd {
    /// dim X_{λ,μ} in Rep(GL_t).
    Gl {
        #[arg(long, value_parser = partition, allow_hyphen_values = true)]
        lam: Partition,
        #[arg(long, value_parser = partition, allow_hyphen_values = true, default_value = "")]
        mu: Partition,
    },
    /// dim X_λ in Rep(O_t).
    O {
        #[arg(long, value_parser = partition, allow_hyphen_values = true)]
        lam: Partition,
    },
}

#[derive(Args, Debug)]
struct Morphism {
    #[arg(long, value_enum)]
    family: FamilyArg,
}

#[derive(Subcommand, Debug)]
enum BrauerCmd {
    /// g ∘ f for f: source → middle and g: middle → target.
    Compose {
        #[command(flatten)]
        m: Morphism,
        #[arg(long, allow_hyphen_values = true)]
        source: String,
        #[arg(long, allow_hyphen_values = true)]
        middle: String,
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        /// Edges of f, e.g. `1-3,2-4` (endpoints numbered from 1, bottom first).
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    /// f ⊗ g.
    Tensor {
        #[command(flatten)]
        m: Morphism,
        #[arg(long, allow_hyphen_values = true)]
        f_source: String,
        #[arg(long, allow_hyphen_values = true)]
        f_target: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g_source: String,
        #[arg(long, allow_hyphen_values = true)]
        g_target: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
    },
    /// Categorical trace of an endomorphism.
    Trace {
        #[command(flatten)]
        m: Morphism,
        #[arg(long, allow_hyphen_values = true)]
        object: String,
        #[arg(long, allow_hyphen_values = true)]
        d: String,
    },
    /// Gram determinant of the trace form on End(object).
    Gram {
        #[command(flatten)]
        m: Morphism,
        #[arg(long, allow_hyphen_values = true)]
        object: String,
    },
}

#[derive(Subcommand, Debug)]
enum CenterCmd {
    /// χ_{λ,μ}(C_i) for i = 1..imax; entries may be rationals.
    Chi {
        #[arg(long, value_parser = rationals, allow_hyphen_values = true, default_value = "")]
        lam: RatList,
        #[arg(long, value_parser = rationals, allow_hyphen_values = true, default_value = "")]
        mu: RatList,
        #[arg(long, default_value_t = 4)]
        imax: usize,
        /// Also list partition pairs of size ≤ this bound with the same character.
        #[arg(long)]
        probe: Option<usize>,
    },
    /// Modified Bernoulli polynomial P_i.
    Bernoulli {
        #[arg(long)]
        i: usize,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum VariantArg {
    Gl,
    Osp,
}

#[derive(Subcommand, Debug)]
enum SeriesCmd {
    /// Hilbert series of invariants of m matrices.
    Multiinv {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Gl)]
        variant: VariantArg,
    },
    /// Graded multiplicity of X_{λ,μ} in the harmonic part.
    Harmonic {
        #[arg(long, value_parser = partition, allow_hyphen_values = true)]
        lam: Partition,
        #[arg(long, value_parser = partition, allow_hyphen_values = true)]
        mu: Partition,
    },
    /// Compare both sides of the Kostant identity coefficient by coefficient.
    KostantCheck {
        /// Use the right-hand side 1/(1 − q t²) · ∏(1 − q^j) instead.
        #[arg(long)]
        printed_rhs: bool,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum LieArg {
    Sl,
    Gl,
    O,
    Sp,
}

#[derive(Subcommand, Debug)]
enum AffineCmd {
    /// Stable limit C_{λ,μ,∞}(q).
    Cinf {
        #[arg(long, value_parser = partition, allow_hyphen_values = true)]
        lam: Partition,
        #[arg(long, value_parser = partition, allow_hyphen_values = true)]
        mu: Partition,
        /// Multiply by the Fock space character.
        #[arg(long)]
        tilde: bool,
    },
    /// C_{ν,n}(q) for an integral weight ν of sl_n.
    Cn {
        #[arg(long, value_parser = weight, allow_hyphen_values = true)]
        weight: IntegerWeight,
    },
    /// Least rank from which C_{[λ,μ]_n,n} agrees with the limit.
    Stab {
        #[arg(long, value_parser = partition, allow_hyphen_values = true)]
        lam: Partition,
        #[arg(long, value_parser = partition, allow_hyphen_values = true)]
        mu: Partition,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Critical level and central charge.
    Sugawara {
        #[arg(long, value_enum)]
        family: LieArg,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        k: Rat,
    },
}

fn partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn weight(s: &str) -> Result<IntegerWeight, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn rational(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

/// Comma-separated rationals such as `1/2,3`; empty or `-` for none.
#[derive(Clone, Debug)]
struct RatList(Vec<Rat>);

fn rationals(s: &str) -> Result<RatList, String> {
    let s = s.trim();
    if s.is_empty() || s == "-" {
        return Ok(RatList(Vec::new()));
    }
    s.split(',')
        .map(|x| rational(x.trim()))
        .collect::<Result<_, _>>()
        .map(RatList)
}

/// Exit code, stdout and stderr of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(&cli) {
        Ok(Response { code, text, json }) => {
            let stdout = match cli.format {
                Format::Text => text,
                Format::Json => serde_json::to_string_pretty(&json).expect("json values serialize"),
            };
            Outcome {
                code,
                stdout: stdout + "\n",
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

struct Response {
    code: i32,
    text: String,
    json: Value,
}

struct Ctx<'a> {
    cli: &'a Cli,
    query: Map<String, Value>,
}

impl Ctx<'_> {
    fn arg(&mut self, key: &str, v: impl Into<Value>) {
        self.query.insert(key.into(), v.into());
    }

    fn respond(self, text: String, payload: Map<String, Value>) -> Response {
        self.respond_with(0, text, payload)
    }

    fn respond_with(self, code: i32, text: String, payload: Map<String, Value>) -> Response {
        let mut json = Map::new();
        json.insert("query".into(), Value::Object(self.query));
        json.extend(payload);
        Response {
            code,
            text,
            json: Value::Object(json),
        }
    }

    /// A polynomial answer, or its value when `--at` is given.
    fn poly(self, p: &Poly) -> Response {
        let mut payload = Map::new();
        match &self.cli.at {
            Some(x) => {
                let v = p.eval(x);
                payload.insert("value".into(), render::rat(&v));
                self.respond(v.to_string(), payload)
            }
            None => {
                payload.insert("poly".into(), render::poly(p));
                self.respond(p.to_string(), payload)
            }
        }
    }

    fn series_rat(self, s: &Series<Rat>) -> Response {
        let mut payload = Map::new();
        payload.insert("series".into(), render::series(s, render::rat));
        self.respond(s.to_string(), payload)
    }
}

fn obj(family: FamilyArg, s: &str) -> Result<Object, Error> {
    Object::parse(family.into(), s)
}

fn execute(cli: &Cli) -> Result<Response, Error> {
    let mut ctx = Ctx {
        cli,
        query: Map::new(),
    };
    let trunc = cli.trunc;
    match &cli.command {
        Command::Dim(DimCmd::Gl { lam, mu }) => {
            ctx.arg("command", "dim gl");
            ctx.arg("lam", lam.to_string());
            ctx.arg("mu", mu.to_string());
            Ok(ctx.poly(&dims::dim_gl(lam, mu)?))
        }
        Command::Dim(DimCmd::O { lam }) => {
            ctx.arg("command", "dim o");
            ctx.arg("lam", lam.to_string());
            Ok(ctx.poly(&dims::dim_o(lam)?))
        }
        Command::Hom {
            family,
            source,
            target,
            list,
        } => {
            let (a, b) = (obj(*family, source)?, obj(*family, target)?);
            ctx.arg("command", "hom");
            ctx.arg("source", a.to_string());
            ctx.arg("target", b.to_string());
            let dim = diagrams::hom_dim(&a, &b)?;
            let mut text = format!("dim Hom({a}, {b}) = {dim}");
            let mut payload = Map::new();
            payload.insert("dim".into(), render::int(&dim));
            if *list {
                let basis = diagrams::hom_basis(&a, &b)?;
                let edges: Vec<String> = basis.iter().map(edge_list).collect();
                for e in &edges {
                    text.push_str(&format!("\n  {e}"));
                }
                payload.insert("basis".into(), json!(edges));
            }
            Ok(ctx.respond(text, payload))
        }
        Command::Brauer(cmd) => brauer(ctx, cmd),
        Command::Kron { lam, mu } => {
            ctx.arg("command", "kron");
            ctx.arg("lam", lam.to_string());
            ctx.arg("mu", mu.to_string());
            let k = symfunc::kronecker(lam, mu)?;
            let terms: Vec<Value> = k
                .terms()
                .map(|(nu, c)| json!({ "nu": nu.to_string(), "coeff": render::rat(c) }))
                .collect();
            let mut payload = Map::new();
            payload.insert("terms".into(), Value::Array(terms));
            Ok(ctx.respond(k.to_string(), payload))
        }
        Command::Spec { lam } => {
            ctx.arg("command", "spec");
            ctx.arg("lam", lam.to_string());
            ctx.arg("trunc", trunc);
            Ok(ctx.series_rat(&symfunc::principal_spec(lam, trunc)))
        }
        Command::Center(CenterCmd::Bernoulli { i }) => {
            ctx.arg("command", "center bernoulli");
            ctx.arg("i", *i);
            Ok(ctx.poly(&center::bernoulli_p(*i)))
        }
        Command::Center(CenterCmd::Chi {
            lam: RatList(lam),
            mu: RatList(mu),
            imax,
            probe,
        }) => {
            ctx.arg("command", "center chi");
            ctx.arg("lam", lam.iter().map(render::rat).collect::<Vec<_>>());
            ctx.arg("mu", mu.iter().map(render::rat).collect::<Vec<_>>());
            ctx.arg("imax", *imax);
            let chi = center::chi_gl(lam, mu, *imax);
            let mut text = chi.to_string();
            let mut payload = Map::new();
            payload.insert(
                "values".into(),
                chi.values().iter().map(render::poly).collect(),
            );
            if let Some(bound) = probe {
                let hits = center::sigma_probe(&chi, *bound);
                let labels: Vec<Value> = hits
                    .iter()
                    .map(|(l, m)| json!({ "lam": l.to_string(), "mu": m.to_string() }))
                    .collect();
                text.push_str(&format!("\nmatching labels with sizes ≤ {bound}:"));
                if hits.is_empty() {
                    text.push_str(" none");
                }
                for (l, m) in &hits {
                    text.push_str(&format!(" ({l};{m})"));
                }
                payload.insert("probe".into(), Value::Array(labels));
            }
            Ok(ctx.respond(text, payload))
        }
        Command::Series(cmd) => series(ctx, cmd),
        Command::Affine(cmd) => affine_cmd(ctx, cmd),
        Command::Verify { suite } => {
            ctx.arg("command", "verify");
            ctx.arg("suite", suite.clone());
            let results = if suite == "all" {
                verify::run_all()
            } else {
                vec![verify::run_suite(suite)?]
            };
            let all_passed = results.iter().all(|r| r.passed());
            let text = results
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            let rows: Vec<Value> = results
                .iter()
                .map(|r| json!({ "id": r.id, "suite": r.name, "passed": r.passed(), "checks": r.checks, "failures": r.failures }))
                .collect();
            let mut payload = Map::new();
            payload.insert("passed".into(), json!(all_passed));
            payload.insert("suites".into(), Value::Array(rows));
            Ok(ctx.respond_with(if all_passed { 0 } else { 1 }, text, payload))
        }
    }
}

fn edge_list(d: &Diagram) -> String {
    d.edges()
        .iter()
        .map(|(a, b)| format!("{}-{}", a + 1, b + 1))
        .collect::<Vec<_>>()
        .join(",")
}

fn element_json(e: &DiagElement) -> Value {
    let terms: Vec<Value> = e
        .terms()
        .map(|(d, c)| json!({ "edges": edge_list(&d), "coeff": render::ratfunc(c) }))
        .collect();
    json!({ "source": e.source().to_string(), "target": e.target().to_string(), "terms": terms })
}

fn brauer(mut ctx: Ctx<'_>, cmd: &BrauerCmd) -> Result<Response, Error> {
    let mut payload = Map::new();
    match cmd {
        BrauerCmd::Compose {
            m,
            source,
            middle,
            target,
            f,
            g,
        } => {
            let (a, b, c) = (
                obj(m.family, source)?,
                obj(m.family, middle)?,
                obj(m.family, target)?,
            );
            let f = Diagram::parse(a, b.clone(), f)?;
            let g = Diagram::parse(b, c, g)?;
            ctx.arg("command", "brauer compose");
            ctx.arg("f", f.to_string());
            ctx.arg("g", g.to_string());
            let e = DiagElement::from(g).compose(&DiagElement::from(f))?;
            payload.insert("result".into(), element_json(&e));
            Ok(ctx.respond(e.to_string(), payload))
        }
        BrauerCmd::Tensor {
            m,
            f_source,
            f_target,
            f,
            g_source,
            g_target,
            g,
        } => {
            let f = Diagram::parse(obj(m.family, f_source)?, obj(m.family, f_target)?, f)?;
            let g = Diagram::parse(obj(m.family, g_source)?, obj(m.family, g_target)?, g)?;
            ctx.arg("command", "brauer tensor");
            ctx.arg("f", f.to_string());
            ctx.arg("g", g.to_string());
            let d = f.tensor(&g)?;
            payload.insert(
                "result".into(),
                json!({ "diagram": d.to_string(), "edges": edge_list(&d) }),
            );
            Ok(ctx.respond(d.to_string(), payload))
        }
        BrauerCmd::Trace { m, object, d } => {
            let a = obj(m.family, object)?;
            let d = Diagram::parse(a.clone(), a, d)?;
            ctx.arg("command", "brauer trace");
            ctx.arg("d", d.to_string());
            let tr = DiagElement::from(d).closure_trace()?.into_poly()?;
            Ok(ctx.poly(&tr))
        }
        BrauerCmd::Gram { m, object } => {
            let a = obj(m.family, object)?;
            ctx.arg("command", "brauer gram");
            ctx.arg("object", a.to_string());
            let report = diagrams::gram_det(&a)?;
            let roots: Vec<Value> = report
                .roots
                .roots
                .iter()
                .map(|(r, k)| json!({ "root": render::rat(r), "multiplicity": k }))
                .collect();
            let root_text: Vec<String> = report
                .roots
                .roots
                .iter()
                .map(|(r, k)| format!("{r} (x{k})"))
                .collect();
            let text = format!(
                "basis size {}\ndet = {}\nrational roots: {}\nall roots integral: {}",
                report.basis.len(),
                report.det,
                if root_text.is_empty() {
                    "none".to_string()
                } else {
                    root_text.join(", ")
                },
                report.roots.all_integer()
            );
            payload.insert("basis_size".into(), json!(report.basis.len()));
            payload.insert("det".into(), render::poly(&report.det));
            payload.insert("roots".into(), Value::Array(roots));
            payload.insert("cofactor".into(), render::poly(&report.roots.residual));
            payload.insert(
                "all_roots_integral".into(),
                json!(report.roots.all_integer()),
            );
            Ok(ctx.respond(text, payload))
        }
    }
}

fn series(mut ctx: Ctx<'_>, cmd: &SeriesCmd) -> Result<Response, Error> {
    let trunc = ctx.cli.trunc;
    match cmd {
        SeriesCmd::Multiinv { m, variant } => {
            let v = match variant {
                VariantArg::Gl => Variant::Gl,
                VariantArg::Osp => Variant::OSp,
            };
            ctx.arg("command", "series multiinv");
            ctx.arg("m", *m);
            ctx.arg("variant", if v == Variant::Gl { "gl" } else { "osp" });
            ctx.arg("trunc", trunc);
            let s = invariants::hilb_multi_inv(NecklaceFamily::new(v, *m)?, trunc)?;
            Ok(ctx.series_rat(&s))
        }
        SeriesCmd::Harmonic { lam, mu } => {
            ctx.arg("command", "series harmonic");
            ctx.arg("lam", lam.to_string());
            ctx.arg("mu", mu.to_string());
            ctx.arg("trunc", trunc);
            Ok(ctx.series_rat(&invariants::harmonic_hilbert(lam, mu, trunc)?))
        }
        SeriesCmd::KostantCheck { printed_rhs } => {
            let which = if *printed_rhs {
                KostantRhs::Printed
            } else {
                KostantRhs::Corrected
            };
            ctx.arg("command", "series kostant-check");
            ctx.arg("rhs", if *printed_rhs { "printed" } else { "corrected" });
            ctx.arg("trunc", trunc);
            let report = invariants::kostant_report(trunc, which)?;
            let mut payload = Map::new();
            payload.insert("passed".into(), json!(report.passed()));
            payload.insert("first_mismatch".into(), json!(report.first_mismatch));
            payload.insert("lhs".into(), render::series(&report.lhs, render::poly));
            payload.insert("rhs".into(), render::series(&report.rhs, render::poly));
            let text = report.to_string();
            Ok(ctx.respond_with(if report.passed() { 0 } else { 1 }, text, payload))
        }
    }
}

fn affine_cmd(mut ctx: Ctx<'_>, cmd: &AffineCmd) -> Result<Response, Error> {
    let trunc = ctx.cli.trunc;
    match cmd {
        AffineCmd::Cinf { lam, mu, tilde } => {
            ctx.arg(
                "command",
                if *tilde {
                    "affine cinf --tilde"
                } else {
                    "affine cinf"
                },
            );
            ctx.arg("lam", lam.to_string());
            ctx.arg("mu", mu.to_string());
            ctx.arg("trunc", trunc);
            let s = if *tilde {
                affine::c_infinity_tilde(lam, mu, trunc)?
            } else {
                affine::c_infinity(lam, mu, trunc)?
            };
            Ok(ctx.series_rat(&s))
        }
        AffineCmd::Cn { weight } => {
            ctx.arg("command", "affine cn");
            ctx.arg("weight", weight.entries().to_vec());
            ctx.arg("trunc", trunc);
            Ok(ctx.series_rat(&affine::c_finite(weight, trunc)?))
        }
        AffineCmd::Stab { lam, mu, cap } => {
            ctx.arg("command", "affine stab");
            ctx.arg("lam", lam.to_string());
            ctx.arg("mu", mu.to_string());
            ctx.arg("trunc", trunc);
            let n = affine::stabilization_check(lam, mu, trunc, *cap)?;
            let mut payload = Map::new();
            payload.insert("rank".into(), json!(n));
            Ok(ctx.respond(
                format!("stable from n = {n} (checked at n and n+1)"),
                payload,
            ))
        }
        AffineCmd::Sugawara { family, k } => {
            let fam = match family {
                LieArg::Sl => LieFamily::Sl,
                LieArg::Gl => LieFamily::Gl,
                LieArg::O => LieFamily::O,
                LieArg::Sp => LieFamily::Sp,
            };
            ctx.arg("command", "affine sugawara");
            ctx.arg("family", fam.to_string());
            ctx.arg("k", render::rat(k));
            let (crit, c) = affine::sugawara_constants(fam, k)?;
            let mut payload = Map::new();
            payload.insert("critical_level".into(), render::poly(&crit));
            payload.insert("central_charge".into(), render::ratfunc(&c));
            let c_text = match c.is_poly() {
                true => c.num().to_string(),
                false => c.to_string(),
            };
            Ok(ctx.respond(
                format!("critical level: {crit}\ncentral charge: {c_text}"),
                payload,
            ))
        }
    }
}
