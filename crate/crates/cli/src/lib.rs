//! Command dispatch for the `qcoord` binary.
//!
//! [`run`] takes the full argument vector and returns exit code and captured
//! output, so the binary and the tests share one code path. Failures are
//! reported on stderr as a JSON object `{"error": {"kind", "message"}}`.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qcoord::config::{build_preset, parse_param_list, AlgebraSource, OutputFormat, WorkbenchConfig};
use qcoord::expr::{parse_scalar, EvalContext};
use qcoord::grading::{GradingPreset, GradingSpec};
use qcoord::patterns::{
    catalog_data, enumerate_closure_consistent, enumerate_star, quotient_consistency, rank_le1_count,
    verify_parametrization, GridPattern,
};
use qcoord::pbw::{NcPoly, Presentation, PresetKind, QMatrix};
use qcoord::qmatrix::{is_central, MinorIndex, QuantumMatrices};
use qcoord::strata::{center_lattice, primitive_profile, strata_report, CommutationSpec};
use qcoord::twist::prim_map::{
    fibre_equal, point_to_prim, preimage_closed_check, quotient_algebra, quotient_space, QuotientPoint,
};
use qcoord::twist::{standard_cocycle, TwistElement, TwistedAlgebra};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "qcoord", version, about = "Exact computations in quantized coordinate rings")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// TOML workbench configuration.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
struct AlgebraArgs {
    /// quantum-plane, quantum-affine, quantum-affine-multiparam, quantum-matrices.
    #[arg(long)]
    preset: Option<String>,
    /// Number of generators, or matrix size.
    #[arg(short = 'n', long = "size")]
    n: Option<usize>,
    /// Parameter, as an expression over the declared parameters, or `generic`.
    #[arg(short = 'q', long)]
    q: Option<String>,
    /// Parameter declarations, e.g. `p,q=p^2`.
    #[arg(long)]
    params: Option<String>,
    /// Presentation JSON file, instead of a preset.
    #[arg(long, value_name = "FILE")]
    presentation: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Presentation JSON of the selected algebra, for `--presentation`.
    Export {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Normal form of an expression.
    Nf {
        expr: String,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Product of two expressions.
    Mul {
        left: String,
        right: String,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Quantum determinant of O_q(M_n).
    Qdet {
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Quantum minor with the given rows and columns.
    Qminor {
        #[arg(long, value_delimiter = ',', required = true)]
        rows: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        cols: Vec<usize>,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Whether an element commutes with every generator.
    Central {
        expr: String,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Comultiplication in O_q(M_n).
    Delta {
        expr: String,
        /// Also print the counit.
        #[arg(long)]
        counit: bool,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// μ*_q into the tensor of the two rectangular quotients.
    MuStar {
        #[arg(short = 't', long)]
        t: usize,
        expr: String,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Torus weight of a homogeneous element.
    Weight {
        expr: String,
        /// affine, matrix or sl2-style; defaults to the presentation's weights.
        #[arg(long)]
        grading: Option<String>,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Whether the ideal generated by the given elements is torus stable.
    Stable {
        #[arg(required = true)]
        exprs: Vec<String>,
        #[arg(long)]
        grading: Option<String>,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Center of the quantum torus.
    Center {
        /// Commutation spec JSON file.
        #[arg(long, value_name = "FILE")]
        spec: Option<PathBuf>,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Stratum centers for every subset of killed variables.
    Strata {
        #[arg(long, value_name = "FILE")]
        spec: Option<PathBuf>,
        /// Include the primitive-ideal profile of each stratum.
        #[arg(long)]
        profile: bool,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Generator patterns of torus-invariant primes in O_q(M_n).
    Patterns {
        #[command(subcommand)]
        action: PatternAction,
    },
    /// Cocycle twist of the polynomial ring.
    Twist {
        /// Left degree, e.g. `1,0,2`.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        left: Option<Vec<i64>>,
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        right: Option<Vec<i64>>,
        #[command(flatten)]
        alg: AlgebraArgs,
    },
    /// Image of a point of k³ in prim O_q(k³), q = p².
    QuotientMap {
        /// Coordinates, e.g. `l1,0,l3`.
        point: String,
    },
    /// Whether two points of k³ have the same image.
    Fibre { first: String, second: String },
    /// Points whose image contains x_g.
    Preimage { generator: usize },
}

#[derive(Subcommand, Debug)]
enum PatternAction {
    Enumerate {
        #[arg(short = 'n', long = "size")]
        n: usize,
        #[arg(long, value_enum, default_value_t = Condition::Star)]
        condition: Condition,
        /// Also run the quotient consistency check on each pattern.
        #[arg(long)]
        check: bool,
    },
    Verify {
        #[arg(short = 'n', long = "size")]
        n: usize,
    },
    Counts {
        #[arg(short = 'n', long = "size")]
        n: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Condition {
    Star,
    Closure,
}

struct Failure {
    kind: &'static str,
    message: String,
}

fn fail(kind: &'static str, e: impl std::fmt::Display) -> Failure {
    Failure { kind, message: e.to_string() }
}

type Res<T> = Result<T, Failure>;

struct Ctx {
    cfg: WorkbenchConfig,
    json: bool,
}

struct Output {
    text: String,
    json: Value,
}

pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: rendered, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: error_json("usage", &rendered) }
            };
        }
    };
    let cfg = match &cli.config {
        Some(path) => match WorkbenchConfig::load(path) {
            Ok(c) => c,
            Err(e) => return Outcome { code: 1, stdout: String::new(), stderr: error_json("config", &e.to_string()) },
        },
        None => match qcoord::config::default_space() {
            Ok(space) => WorkbenchConfig { space: Arc::new(space), ..WorkbenchConfig::default() },
            Err(e) => return Outcome { code: 1, stdout: String::new(), stderr: error_json("config", &e.to_string()) },
        },
    };
    let json = cli.json || cfg.output == OutputFormat::Json;
    let ctx = Ctx { cfg, json };
    match dispatch(&ctx, cli.command) {
        Ok(out) => {
            let stdout = if ctx.json {
                serde_json::to_string_pretty(&out.json).expect("json values serialize") + "\n"
            } else {
                out.text + "\n"
            };
            Outcome { code: 0, stdout, stderr: String::new() }
        }
        Err(f) => Outcome { code: 1, stdout: String::new(), stderr: error_json(f.kind, &f.message) },
    }
}

fn error_json(kind: &str, message: &str) -> String {
    json!({"error": {"kind": kind, "message": message.trim_end()}}).to_string() + "\n"
}

impl Ctx {
    fn space(&self, a: &AlgebraArgs) -> Res<Arc<qcoord::scalar::ParamSpace>> {
        match &a.params {
            Some(list) => parse_param_list(list).map(Arc::new).map_err(|e| fail("config", e)),
            None => Ok(self.cfg.space.clone()),
        }
    }

    /// Flags override the config file, which overrides `default`.
    fn algebra(&self, a: &AlgebraArgs, default: PresetKind) -> Res<(Arc<Presentation>, Option<usize>)> {
        if let Some(path) = &a.presentation {
            let text = std::fs::read_to_string(path).map_err(|e| fail("io", format!("{}: {e}", path.display())))?;
            let alg = Presentation::from_json_str(&text).map_err(|e| fail("presentation", e))?;
            return Ok((alg, None));
        }
        let space = self.space(a)?;
        let (kind, n, q) = match (&a.preset, &self.cfg.algebra) {
            (None, Some(AlgebraSource::Presentation(_))) if a.n.is_none() && a.q.is_none() => {
                let alg = self.cfg.build_algebra().map_err(|e| fail("config", e))?.expect("configured");
                return Ok((alg, None));
            }
            (None, Some(AlgebraSource::Preset { kind, n, q })) => {
                (*kind, a.n.unwrap_or(*n), a.q.clone().unwrap_or_else(|| q.clone()))
            }
            (p, _) => {
                let kind = match p {
                    Some(p) => p.parse().map_err(|e| fail("usage", e))?,
                    None => default,
                };
                (kind, a.n.unwrap_or(2), a.q.clone().unwrap_or_else(|| "q".into()))
            }
        };
        let alg = build_preset(&space, kind, n, &q).map_err(|e| fail("algebra", e))?;
        Ok((alg, (kind == PresetKind::QuantumMatrices).then_some(n)))
    }

    fn eval(&self, alg: &Arc<Presentation>, n: Option<usize>, text: &str) -> Res<NcPoly> {
        let ctx = match n {
            Some(n) => EvalContext::matrices(alg, n),
            None => EvalContext::new(alg),
        };
        ctx.parse_eval(text).map_err(|e| fail("expression", e))
    }

    fn matrices(&self, a: &AlgebraArgs) -> Res<QuantumMatrices> {
        if a.q.as_deref() == Some("generic") {
            return Err(fail("usage", "quantum matrices take a single parameter"));
        }
        let (alg, n) = self.algebra(a, PresetKind::QuantumMatrices)?;
        let n = match n {
            Some(n) => n,
            None => matrix_size(alg.ngens()).ok_or_else(|| fail("algebra", "not a quantum matrix algebra"))?,
        };
        QuantumMatrices::from_presentation(&alg, n).map_err(|e| fail("algebra", e))
    }

    fn commutation(&self, a: &AlgebraArgs, spec: &Option<PathBuf>) -> Res<CommutationSpec> {
        if let Some(path) = spec {
            let text = std::fs::read_to_string(path).map_err(|e| fail("io", format!("{}: {e}", path.display())))?;
            return CommutationSpec::from_json_str(&text).map_err(|e| fail("spec", e));
        }
        let preset = a.preset.as_deref().map(str::parse::<PresetKind>).transpose().map_err(|e| fail("usage", e))?;
        if matches!(preset, Some(PresetKind::QuantumMatrices)) {
            return Err(fail("usage", "strata and centers are computed for quantum affine spaces"));
        }
        let n = a.n.unwrap_or(2);
        match a.q.as_deref().unwrap_or("q") {
            "generic" => {
                let space = qcoord::pbw::multiparam_space(n);
                let q = QMatrix::generic(&space, n).map_err(|e| fail("algebra", e))?;
                CommutationSpec::from_q_matrix(&space, &q).map_err(|e| fail("algebra", e))
            }
            text => {
                let space = self.space(a)?;
                let q = parse_scalar(text, &space).map_err(|e| fail("expression", e))?;
                let m = QMatrix::single(n, &q).map_err(|e| fail("algebra", e))?;
                CommutationSpec::from_q_matrix(&space, &m).map_err(|e| fail("algebra", e))
            }
        }
    }

    fn grading(&self, alg: &Presentation, name: &Option<String>) -> Res<GradingSpec> {
        let preset = match name {
            Some(g) => Some(g.parse::<GradingPreset>().map_err(|e| fail("usage", e))?),
            None => self.cfg.grading,
        };
        match preset {
            Some(p) => GradingSpec::preset_for(p, alg),
            None => GradingSpec::from_presentation(alg),
        }
        .map_err(|e| fail("grading", e))
    }
}

fn matrix_size(ngens: usize) -> Option<usize> {
    (1..=ngens).find(|n| n * n == ngens)
}

fn poly_out(p: &NcPoly) -> Output {
    Output { text: p.to_string(), json: json!({"result": p.to_expression(), "terms": p.to_json()}) }
}

fn parse_point(text: &str, space: &qcoord::scalar::ParamSpace) -> Res<QuotientPoint> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(fail("usage", format!("a point has three coordinates, got `{text}`")));
    }
    let c = parts
        .iter()
        .map(|s| parse_scalar(s.trim(), space).map_err(|e| fail("expression", e)))
        .collect::<Res<Vec<_>>>()?;
    let [a, b, c]: [_; 3] = c.try_into().expect("three");
    Ok(QuotientPoint::new(a, b, c))
}

fn pattern_list(ps: &[GridPattern]) -> String {
    ps.iter().map(|p| p.to_ascii()).collect::<Vec<_>>().join("\n\n")
}

fn dispatch(ctx: &Ctx, cmd: Command) -> Res<Output> {
    match cmd {
        Command::Export { alg } => {
            let (a, _) = ctx.algebra(&alg, PresetKind::QuantumMatrices)?;
            let j = a.to_json();
            Ok(Output { text: serde_json::to_string_pretty(&j).expect("json values serialize"), json: j })
        }
        Command::Nf { expr, alg } => {
            let (a, n) = ctx.algebra(&alg, PresetKind::QuantumMatrices)?;
            Ok(poly_out(&ctx.eval(&a, n, &expr)?))
        }
        Command::Mul { left, right, alg } => {
            let (a, n) = ctx.algebra(&alg, PresetKind::QuantumMatrices)?;
            let p = ctx.eval(&a, n, &left)?;
            let r = ctx.eval(&a, n, &right)?;
            Ok(poly_out(&(&p * &r)))
        }
        Command::Qdet { alg } => Ok(poly_out(&ctx.matrices(&alg)?.qdet())),
        Command::Qminor { rows, cols, alg } => {
            let m = ctx.matrices(&alg)?;
            let idx = MinorIndex::new(rows, cols, m.n()).map_err(|e| fail("minor", e))?;
            Ok(poly_out(&m.qminor(&idx).map_err(|e| fail("minor", e))?))
        }
        Command::Central { expr, alg } => {
            let (a, n) = ctx.algebra(&alg, PresetKind::QuantumMatrices)?;
            let p = ctx.eval(&a, n, &expr)?;
            let central = is_central(&p).map_err(|e| fail("algebra", e))?;
            let failing: Vec<String> = (0..a.ngens())
                .filter(|&g| !p.commutator(&NcPoly::generator(&a, g)).map(|c| c.is_zero()).unwrap_or(false))
                .map(|g| a.generators()[g].clone())
                .collect();
            Ok(Output {
                text: if central {
                    "central".into()
                } else {
                    format!("not central: fails against {}", failing.join(", "))
                },
                json: json!({"central": central, "fails_against": failing}),
            })
        }
        Command::Delta { expr, counit, alg } => {
            let m = ctx.matrices(&alg)?;
            let p = ctx.eval(m.algebra(), Some(m.n()), &expr)?;
            let d = m.delta(&p).map_err(|e| fail("algebra", e))?;
            let mut out = poly_out(&d);
            if counit {
                let e = m.counit(&p).map_err(|e| fail("algebra", e))?;
                let shown = e.display(m.algebra().space()).to_string();
                out.text = format!("delta: {}\ncounit: {}", out.text, shown);
                out.json["counit"] = json!(shown);
            }
            Ok(out)
        }
        Command::MuStar { t, expr, alg } => {
            let m = ctx.matrices(&alg)?;
            let p = ctx.eval(m.algebra(), Some(m.n()), &expr)?;
            Ok(poly_out(&m.mu_q_star(t, &p).map_err(|e| fail("algebra", e))?))
        }
        Command::Weight { expr, grading, alg } => {
            let (a, n) = ctx.algebra(&alg, PresetKind::QuantumMatrices)?;
            let g = ctx.grading(&a, &grading)?;
            let p = ctx.eval(&a, n, &expr)?;
            Ok(match g.is_homogeneous(&p) {
                Some(w) => Output { text: w.to_string(), json: json!({"homogeneous": true, "weight": w.0}) },
                None => Output { text: "not homogeneous".into(), json: json!({"homogeneous": false}) },
            })
        }
        Command::Stable { exprs, grading, alg } => {
            let (a, n) = ctx.algebra(&alg, PresetKind::QuantumMatrices)?;
            let g = ctx.grading(&a, &grading)?;
            let gens = exprs.iter().map(|e| ctx.eval(&a, n, e)).collect::<Res<Vec<_>>>()?;
            let stable = g.h_stable_by_generators(&gens);
            Ok(Output {
                text: if stable { "stable".into() } else { "not stable".into() },
                json: json!({"stable": stable}),
            })
        }
        Command::Center { spec, alg } => {
            let c = ctx.commutation(&alg, &spec)?;
            let basis = center_lattice(&c).map_err(|e| fail("strata", e))?;
            let text = if basis.is_empty() {
                "center rank 0".to_string()
            } else {
                let rows: Vec<String> = basis.iter().map(|b| format!("{b:?}")).collect();
                format!("center rank {}\n{}", basis.len(), rows.join("\n"))
            };
            Ok(Output { text, json: json!({"n": c.n(), "rank": basis.len(), "basis": basis}) })
        }
        Command::Strata { spec, profile, alg } => {
            let c = ctx.commutation(&alg, &spec)?;
            let report = strata_report(&c).map_err(|e| fail("strata", e))?;
            let mut rows = Vec::new();
            let mut text = Vec::new();
            for r in &report {
                let mut v = serde_json::to_value(r).expect("report serializes");
                let mut line = format!(
                    "w={:?} torus_rank={} center_rank={} basis={:?}",
                    r.w, r.torus_rank, r.center_rank, r.center_basis
                );
                if profile {
                    let pp = primitive_profile(r);
                    line.push_str(&format!("\n  {}", pp.summary));
                    v["profile"] = serde_json::to_value(&pp).expect("profile serializes");
                }
                rows.push(v);
                text.push(line);
            }
            Ok(Output { text: text.join("\n"), json: Value::Array(rows) })
        }
        Command::Patterns { action } => patterns(action),
        Command::Twist { left, right, alg } => {
            let n = alg.n.unwrap_or(2);
            let (space, q) = match alg.q.as_deref().unwrap_or("q") {
                "generic" => {
                    let s = Arc::new(qcoord::pbw::multiparam_space(n));
                    let q = QMatrix::generic(&s, n).map_err(|e| fail("algebra", e))?;
                    (s, q)
                }
                text => {
                    let s = ctx.space(&alg)?;
                    let v = parse_scalar(text, &s).map_err(|e| fail("expression", e))?;
                    let q = QMatrix::single(n, &v).map_err(|e| fail("algebra", e))?;
                    (s, q)
                }
            };
            let c = standard_cocycle(&space, &q).map_err(|e| fail("twist", e))?;
            let t = TwistedAlgebra::polynomial(c.clone());
            let holds = t.twist_relations_hold().map_err(|e| fail("twist", e))?;
            let mut text = format!("forms: {:?}\ntwist relations hold: {}", c.forms(), holds);
            let mut out = json!({"n": n, "params": space.names(), "forms": c.forms(), "relations_hold": holds});
            if let (Some(a), Some(b)) = (left, right) {
                let one = space.one();
                let r = TwistElement::monomial(a.clone(), one.clone());
                let s = TwistElement::monomial(b.clone(), one);
                let prod = t.twist_product(&r, &s).map_err(|e| fail("twist", e))?;
                let (deg, coeff) = prod.terms.iter().next().expect("unit times unit");
                let shown = coeff.display(&space).to_string();
                text.push_str(&format!("\nx^{a:?} * x^{b:?} = {shown} x^{deg:?}"));
                out["product"] = json!({"degree": deg, "coeff": shown});
            }
            Ok(Output { text, json: out })
        }
        Command::QuotientMap { point } => {
            let space = quotient_space();
            let alg = quotient_algebra(&space).map_err(|e| fail("twist", e))?;
            let pt = parse_point(&point, &space)?;
            let d = point_to_prim(&pt);
            let shown = d.display(&alg).map_err(|e| fail("twist", e))?;
            let mut j = d.to_json(&alg).map_err(|e| fail("twist", e))?;
            j["point"] = json!(pt.display(&space));
            Ok(Output { text: format!("{} -> {}", pt.display(&space), shown), json: j })
        }
        Command::Fibre { first, second } => {
            let space = quotient_space();
            let a = parse_point(&first, &space)?;
            let b = parse_point(&second, &space)?;
            let same = fibre_equal(&a, &b).map_err(|e| fail("twist", e))?;
            Ok(Output { text: same.to_string(), json: json!({"same_fibre": same}) })
        }
        Command::Preimage { generator } => {
            let r = preimage_closed_check(generator, &quotient_space()).map_err(|e| fail("twist", e))?;
            let eqs = r.equations_display();
            Ok(Output {
                text: format!("closed: {}\n{}", r.closed, eqs.join("\n")),
                json: json!({"generator": r.generator, "closed": r.closed, "equations": eqs, "members": r.members}),
            })
        }
    }
}

fn patterns(action: PatternAction) -> Res<Output> {
    match action {
        PatternAction::Enumerate { n, condition, check } => {
            let ps = match condition {
                Condition::Star => enumerate_star(n),
                Condition::Closure => enumerate_closure_consistent(n),
            }
            .map_err(|e| fail("patterns", e))?;
            let mut rows: Vec<Value> = ps.iter().map(GridPattern::to_json).collect();
            let mut text = format!("{} patterns\n\n{}", ps.len(), pattern_list(&ps));
            if check {
                let m = QuantumMatrices::generic(n);
                let mut all = true;
                for (p, row) in ps.iter().zip(rows.iter_mut()) {
                    let r = quotient_consistency(&m, p).map_err(|e| fail("patterns", e))?;
                    all &= r.relations_sound && r.faithful;
                    row["quotient"] = serde_json::to_value(&r).expect("check serializes");
                }
                text.push_str(&format!("\n\nquotient checks pass: {all}"));
            }
            Ok(Output { text, json: json!({"n": n, "count": ps.len(), "patterns": rows}) })
        }
        PatternAction::Verify { n } => {
            let r = verify_parametrization(n).map_err(|e| fail("patterns", e))?;
            let text = format!(
                "star patterns: {}\nparametrized images: {} (from {} data)\nequal: {}\nclosure-consistent: {}\nimages equal closure-consistent: {}\nimages failing the star condition: {}\nstar patterns not reached: {}",
                r.star_count, r.image_count, r.data_count, r.equal, r.closure_consistent_count,
                r.images_equal_closure_consistent, r.extra.len(), r.missing.len()
            );
            Ok(Output { text, json: serde_json::to_value(&r).expect("report serializes") })
        }
        PatternAction::Counts { n } => {
            let r = rank_le1_count(n).map_err(|e| fail("patterns", e))?;
            let cat = catalog_data();
            let consistent = cat.consistent();
            let mut text = format!("rank <= 1 family: {} (formula {})", r.count, r.formula);
            if let Some(note) = &r.note {
                text.push_str(&format!("\nnote: {note}"));
            }
            text.push_str(&format!(
                "\nrecorded from the literature: 2x2 total {}, 3x3 by rank {}/{}/{}/{} total {}, 4x4 total {} (internally consistent: {})",
                cat.two_by_two_total, cat.three_by_three.rank0, cat.three_by_three.rank1, cat.three_by_three.rank2,
                cat.three_by_three.rank3, cat.three_by_three.total, cat.four_by_four_total, consistent
            ));
            Ok(Output { text, json: json!({"rank_le1": r, "catalog": cat, "catalog_consistent": consistent}) })
        }
    }
}
