//! `kostant`: JSON front end to the section, goodness and reduction routines.
//!
//! Exit codes: 0 success, 1 unparseable input, 2 failed precondition,
//! 3 internal invariant violation (including a failed `selfcheck`).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use kostant::chevalley::{build_algebra, graded_ad_y, ChevalleyAlgebra, RepFamily, StandardRep};
use kostant::linalg::{is_prime, Matrix, MatrixOps, PrimeField, Rationals, Ring};
use kostant::padic::{parse_rational, rational_string, trace_form};
use kostant::reduction::{check_selfdual, constants, d_g, is_topologically_nilpotent, Reducer};
use kostant::rootdata::{
    datum_from_json, lambda_cocharacter, CartanType, DatumSpec, Isogeny, RootDatum, RootSystem,
};
use kostant::sampling::{conjugated_instance, instance_rng, random_regular_semisimple, section_point};
use kostant::sections::{
    build_section_from, closed_form, excluded_primes, is_g_good, is_n_good, prime_list, section_invert,
    smith_decompose, InvariantSystem,
};

const SCHEMA: &str = "kostant/1";

#[derive(Parser)]
#[command(
    name = "kostant",
    version,
    about = "Integral Kostant sections and reduction of topologically nilpotent elements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Root datum summary: Cartan matrix, positive roots, grading.
    Roots(DatumArgs),
    /// Section basis and the excluded-prime product N.
    Section(DatumArgs),
    /// N and the primes that fail n-goodness or g-goodness.
    Primes(DatumArgs),
    /// Topological nilpotence verdict for a matrix.
    Nilpotent {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        matrix: MatrixArgs,
    },
    /// Conjugate a matrix in Y + g_{x,0+} into the section.
    Reduce {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 20)]
        precision: u32,
        #[command(flatten)]
        matrix: MatrixArgs,
    },
    /// Invariants of a matrix and its preimage coefficients in the section.
    Invariants {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        matrix: MatrixArgs,
    },
    /// m, c_G and optionally the discriminant valuation of a matrix.
    Constants {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        p: u64,
        #[command(flatten)]
        matrix: MatrixArgs,
    },
    /// Run the property checks for one datum.
    Selfcheck {
        #[command(flatten)]
        datum: DatumArgs,
        /// Defaults to the least g-good prime above 2.
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value_t = 20)]
        precision: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        samples: u64,
    },
}

#[derive(Args, Clone)]
struct DatumArgs {
    /// Cartan type A..G.
    #[arg(long = "type")]
    cartan_type: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    /// sc, ad, or GL_n.
    #[arg(long, default_value = "sc")]
    isogeny: String,
    /// gl, sl, sp or adjoint.
    #[arg(long)]
    family: Option<String>,
    /// gl_n and sl_n: matrix size; sp: half the matrix size.
    #[arg(long)]
    n: Option<usize>,
    /// Root datum document in JSON.
    #[arg(long)]
    datum_file: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct MatrixArgs {
    /// JSON array of rows; entries are integers or rational strings.
    #[arg(long)]
    matrix: Option<String>,
    #[arg(long)]
    file: Option<PathBuf>,
}

enum Failure {
    Parse(String),
    Library(kostant::Error),
    Check(Value),
}

impl From<kostant::Error> for Failure {
    fn from(e: kostant::Error) -> Self {
        Failure::Library(e)
    }
}

type Outcome = Result<Value, Failure>;

struct Context {
    algebra: ChevalleyAlgebra,
    rep: StandardRep,
}

impl DatumArgs {
    fn datum(&self) -> Result<(RootDatum, Option<RepFamily>), Failure> {
        let parse = |e: kostant::Error| Failure::Parse(e.to_string());
        if let Some(path) = &self.datum_file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
            let family = self
                .family
                .as_deref()
                .map(RepFamily::parse)
                .transpose()
                .map_err(parse)?;
            return Ok((datum_from_json(&text).map_err(parse)?, family));
        }
        let family = self
            .family
            .as_deref()
            .map(RepFamily::parse)
            .transpose()
            .map_err(parse)?;
        match family {
            Some(f) if f != RepFamily::Adjoint => {
                if self.cartan_type.is_some() {
                    return Err(Failure::Parse(
                        "--family gl/sl/sp fixes the datum; drop --type".into(),
                    ));
                }
                let n = self
                    .n
                    .ok_or_else(|| Failure::Parse("--family needs --n".into()))?;
                let datum = match f {
                    RepFamily::Gl => RootDatum::general_linear(n),
                    RepFamily::Sl if n >= 2 => {
                        DatumSpec::new(CartanType::A, n - 1, Isogeny::SimplyConnected).build()
                    }
                    RepFamily::Sp => DatumSpec::new(CartanType::C, n, Isogeny::SimplyConnected).build(),
                    _ => return Err(Failure::Parse(format!("sl needs --n >= 2, got {n}"))),
                }
                .map_err(parse)?;
                Ok((datum, Some(f)))
            }
            _ => {
                let t = self.cartan_type.as_deref().ok_or_else(|| {
                    Failure::Parse("give --type and --rank, --family and --n, or --datum-file".into())
                })?;
                let rank = self
                    .rank
                    .ok_or_else(|| Failure::Parse("--type needs --rank".into()))?;
                let spec = DatumSpec::new(
                    CartanType::parse(t).map_err(parse)?,
                    rank,
                    Isogeny::parse(&self.isogeny).map_err(parse)?,
                );
                Ok((spec.build().map_err(parse)?, family))
            }
        }
    }

    fn context(&self) -> Result<Context, Failure> {
        let (datum, family) = self.datum()?;
        let algebra = build_algebra(&datum)?;
        let rep = match family {
            Some(f) => StandardRep::new(&algebra, f)?,
            None => StandardRep::for_algebra(&algebra)?,
        };
        Ok(Context { algebra, rep })
    }
}

impl MatrixArgs {
    fn read(&self) -> Result<Option<Matrix<BigRational>>, Failure> {
        let text = match (&self.matrix, &self.file) {
            (Some(m), None) => m.clone(),
            (None, Some(path)) => std::fs::read_to_string(path)
                .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?,
            (None, None) => return Ok(None),
            (Some(_), Some(_)) => return Err(Failure::Parse("give --matrix or --file, not both".into())),
        };
        let value: Value = serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("matrix: {e}")))?;
        let rows = value
            .as_array()
            .ok_or_else(|| Failure::Parse("matrix must be an array of rows".into()))?;
        let rows: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Failure::Parse("matrix rows must be arrays".into()))?
                    .iter()
                    .map(entry)
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Failure::Parse("matrix must be square and nonempty".into()));
        }
        Ok(Some(Matrix::from_rows(rows)))
    }

    fn require(&self) -> Result<Matrix<BigRational>, Failure> {
        self.read()?
            .ok_or_else(|| Failure::Parse("a matrix is required (--matrix or --file)".into()))
    }
}

fn entry(v: &Value) -> Result<BigRational, Failure> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|i| BigRational::from_integer(i.into()))
            .ok_or_else(|| Failure::Parse(format!("matrix entry {n} is not an integer; quote rationals"))),
        Value::String(s) => parse_rational(s).map_err(|e| Failure::Parse(e.to_string())),
        other => Err(Failure::Parse(format!("matrix entry {other} is not a number"))),
    }
}

fn coordinates(ctx: &Context, m: &Matrix<BigRational>) -> Result<Vec<BigRational>, Failure> {
    if m.rows() != ctx.rep.size() {
        return Err(kostant::Error::Dimension(format!("expected a {0}x{0} matrix", ctx.rep.size())).into());
    }
    ctx.rep.coordinates(m).ok_or_else(|| {
        kostant::Error::NotInDomain("matrix is not in the image of the representation".into()).into()
    })
}

fn require_prime(p: u64) -> Result<(), Failure> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(kostant::Error::NotPrime(p).into())
    }
}

fn strings(v: &[BigRational]) -> Vec<String> {
    v.iter().map(rational_string).collect()
}

fn root_label(rs: &RootSystem, i: usize) -> Value {
    json!({ "root": rs.positive_roots()[i], "height": RootSystem::height(&rs.positive_roots()[i]) })
}

fn roots(args: &DatumArgs) -> Outcome {
    let (datum, _) = args.datum()?;
    let algebra = build_algebra(&datum)?;
    let rs = datum.root_system();
    Ok(json!({
        "datum": datum.to_document(),
        "label": datum.to_string(),
        "cartan_matrix": rs.cartan_matrix(),
        "positive_roots": (0..rs.num_positive_roots()).map(|i| root_label(rs, i)).collect::<Vec<_>>(),
        "lambda": lambda_cocharacter(&datum).coordinates,
        "fundamental_group_order": datum.fundamental_group_order(),
        "center_component_order": datum.center_component_order(),
        "dim": algebra.dim(),
        "grading": algebra.grading_dims(),
    }))
}

fn section(args: &DatumArgs) -> Outcome {
    let (datum, _) = args.datum()?;
    let algebra = build_algebra(&datum)?;
    let graded = graded_ad_y(&algebra);
    let smith = smith_decompose(&graded);
    let section = build_section_from(&algebra, &graded, &smith);
    let divisors: serde_json::Map<String, Value> = smith
        .forms
        .keys()
        .map(|&j| {
            (
                j.to_string(),
                json!(smith
                    .divisors(j)
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()),
            )
        })
        .collect();
    let basis: Vec<Value> = section
        .xi_basis
        .iter()
        .zip(&section.weights)
        .map(|(v, w)| json!({ "degree": w, "coordinates": strings(v) }))
        .collect();
    Ok(json!({
        "datum": datum.to_string(),
        "N": section.excluded_n,
        "excluded_primes": prime_list(section.excluded_n),
        "basis_labels": (0..algebra.dim()).map(|b| algebra.label(b)).collect::<Vec<_>>(),
        "basis": basis,
        "smith_divisors": divisors,
    }))
}

/// Primes that can fail g-goodness: those dividing N, the torsion orders, 2 and 3.
fn candidate_primes(datum: &RootDatum, n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = prime_list(n);
    out.extend(prime_list(datum.fundamental_group_order()));
    out.extend(prime_list(datum.center_component_order()));
    out.extend([2, 3]);
    out.sort_unstable();
    out.dedup();
    out
}

fn primes(args: &DatumArgs) -> Outcome {
    let (datum, _) = args.datum()?;
    let algebra = build_algebra(&datum)?;
    let n = excluded_primes(&smith_decompose(&graded_ad_y(&algebra)), &datum);
    let mut n_bad = Vec::new();
    let mut g_bad = Vec::new();
    for p in candidate_primes(&datum, n) {
        if !is_n_good(&algebra, p)? {
            n_bad.push(p);
        }
        if !is_g_good(&algebra, p)? {
            g_bad.push(p);
        }
    }
    Ok(json!({ "datum": datum.to_string(), "N": n, "n_good_excluded": n_bad, "g_good_excluded": g_bad }))
}

fn nilpotent(args: &DatumArgs, p: u64, matrix: &MatrixArgs) -> Outcome {
    let ctx = args.context()?;
    let m = matrix.require()?;
    require_prime(p)?;
    let x = coordinates(&ctx, &m)?;
    let verdict = is_topologically_nilpotent(&ctx.algebra, &ctx.rep, &x, p)?;
    Ok(json!({ "p": p, "verdict": verdict }))
}

fn reduce(args: &DatumArgs, p: u64, precision: u32, matrix: &MatrixArgs) -> Outcome {
    let ctx = args.context()?;
    let m = matrix.require()?;
    let z = coordinates(&ctx, &m)?;
    let section = kostant::sections::build_section(&ctx.algebra);
    let reducer = Reducer::new(&ctx.algebra, &ctx.rep, &section, p, precision)?;
    let cert = reducer.reduce(&z)?;
    let check = cert.verify(&ctx.algebra, &ctx.rep, &InvariantSystem::new(&ctx.rep), &z)?;
    if !check.passed() {
        return Err(kostant::Error::Internal(format!("certificate failed verification: {check:?}")).into());
    }
    Ok(json!({ "certificate": cert, "verified": check }))
}

fn invariants(args: &DatumArgs, matrix: &MatrixArgs) -> Outcome {
    let ctx = args.context()?;
    let m = matrix.require()?;
    let x = coordinates(&ctx, &m)?;
    let inv = InvariantSystem::new(&ctx.rep);
    let values = inv.evaluate(&Rationals, &ctx.rep, &x);
    let mut out = json!({
        "family": ctx.rep.family(),
        "degrees": inv.degrees,
        "invariants": strings(&values),
    });
    if ctx.rep.family() != RepFamily::Adjoint {
        let section = kostant::sections::build_section(&ctx.algebra);
        let u = section_invert(&Rationals, &ctx.algebra, &section, &ctx.rep, &inv, &values)?;
        out["section_coefficients"] = json!(strings(&u));
    }
    Ok(out)
}

fn constants_cmd(args: &DatumArgs, p: u64, matrix: &MatrixArgs) -> Outcome {
    let ctx = args.context()?;
    let mut c = constants(&ctx.algebra, p)?;
    if let Some(m) = matrix.read()? {
        let x = coordinates(&ctx, &m)?;
        c.d_valuation = Some(d_g(&ctx.algebra, &x, p)?);
    }
    Ok(c.to_json())
}

struct Checks(Vec<Value>);

impl Checks {
    fn record(&mut self, name: &str, result: Result<String, String>) {
        let (passed, detail) = match result {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        self.0
            .push(json!({ "name": name, "passed": passed, "detail": detail }));
    }

    fn skip(&mut self, name: &str, why: &str) {
        self.0
            .push(json!({ "name": name, "passed": Value::Null, "detail": why }));
    }

    fn all_passed(&self) -> bool {
        self.0.iter().all(|c| c["passed"] != json!(false))
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn selfcheck(args: &DatumArgs, p: Option<u64>, precision: u32, seed: u64, samples: u64) -> Outcome {
    let ctx = args.context()?;
    let alg = &ctx.algebra;
    let datum = alg.datum();
    let p = match p {
        Some(p) => {
            require_prime(p)?;
            p
        }
        None => (3..)
            .filter(|&q| is_prime(q))
            .find(|&q| is_g_good(alg, q).unwrap_or(false))
            .expect("some prime is g-good"),
    };
    if precision == 0 {
        return Err(Failure::Parse("--precision must be positive".into()));
    }
    let graded = graded_ad_y(alg);
    let smith = smith_decompose(&graded);
    let section = build_section_from(alg, &graded, &smith);
    let inv = InvariantSystem::new(&ctx.rep);
    let mut checks = Checks(Vec::new());
    let err = |e: kostant::Error| e.to_string();

    checks.record("excluded_primes", {
        let n = excluded_primes(&smith, datum);
        let expected = closed_form::excluded_n(datum);
        check(n == expected, || {
            format!("rank computation gives {n}, table gives {expected}")
        })
        .map(|_| format!("N = {n}"))
    });
    checks.record(
        "goodness",
        (|| {
            for q in prime_list(30030) {
                check(
                    is_n_good(alg, q).map_err(err)? == closed_form::is_n_good(datum, q),
                    || format!("n-good at {q}"),
                )?;
                check(
                    is_g_good(alg, q).map_err(err)? == closed_form::is_g_good(datum, q),
                    || format!("g-good at {q}"),
                )?;
            }
            Ok("primes up to 13".to_string())
        })(),
    );
    checks.record("lambda_pairing", {
        let lambda = lambda_cocharacter(datum);
        let pairs: Vec<i64> = datum
            .root_system()
            .simple_roots()
            .iter()
            .map(|a| lambda.pair(&datum.root_character(a)))
            .collect();
        check(pairs.iter().all(|&v| v == 2), || format!("pairings {pairs:?}"))
            .map(|_| format!("{} simple roots", pairs.len()))
    });
    checks.record(
        "section_points_regular",
        (|| {
            for i in 0..samples {
                let mut rng = instance_rng(seed, i);
                let u = kostant::sampling::random_section_coefficients(&mut rng, section.rank(), p, 3);
                let x = section_point(alg, &section, &u).map_err(err)?;
                let k = Rationals.kernel(&alg.ad_matrix(&Rationals, &x)).len();
                check(k == alg.rank(), || format!("centralizer dimension {k}"))?;
            }
            Ok(format!("{samples} points"))
        })(),
    );

    let defining = ctx.rep.family() != RepFamily::Adjoint;
    if defining {
        checks.record(
            "section_round_trip",
            (|| {
                let f = PrimeField::new(p);
                for i in 0..samples {
                    let mut rng = instance_rng(seed, samples + i);
                    let c: Vec<u64> =
                        kostant::sampling::random_section_coefficients(&mut rng, inv.len(), p, 2)
                            .iter()
                            .map(|x| f.from_int(&(x / BigInt::from(p))))
                            .collect();
                    let u = section_invert(&f, alg, &section, &ctx.rep, &inv, &c).map_err(err)?;
                    let xi = section.combine(&f, &u).map_err(err)?;
                    let y = alg.principal_nilpotent().coordinates;
                    let point: Vec<u64> = xi
                        .iter()
                        .zip(&y)
                        .map(|(a, &b)| f.add(a, &f.from_i64(b)))
                        .collect();
                    check(inv.evaluate(&f, &ctx.rep, &point) == c, || {
                        "chi(Y + xi) != c".into()
                    })?;
                }
                Ok(format!("{samples} invariant vectors mod {p}"))
            })(),
        );
    } else {
        checks.skip("section_round_trip", "needs a defining representation");
    }

    let good = p > 2 && is_g_good(alg, p)?;
    if defining && good {
        checks.record(
            "reduction_round_trip",
            (|| {
                let reducer = Reducer::new(alg, &ctx.rep, &section, p, precision).map_err(err)?;
                let modulus = BigInt::from(p).pow(precision);
                for i in 0..samples {
                    let mut rng = instance_rng(seed, 2 * samples + i);
                    let inst =
                        conjugated_instance(&mut rng, alg, &ctx.rep, &section, p, precision).map_err(err)?;
                    let cert = reducer.reduce(&inst.z).map_err(err)?;
                    let got: Vec<BigInt> = cert
                        .xi_coefficients
                        .iter()
                        .map(|c| ((c % &modulus) + &modulus) % &modulus)
                        .collect();
                    check(got == inst.xi_coefficients, || {
                        format!("instance {i}: recovered xi differs")
                    })?;
                    let v = cert.verify(alg, &ctx.rep, &inv, &inst.z).map_err(err)?;
                    check(v.passed(), || format!("instance {i}: {v:?}"))?;
                }
                Ok(format!("{samples} instances at precision {precision}"))
            })(),
        );
    } else {
        checks.skip(
            "reduction_round_trip",
            "needs a defining representation and a g-good p > 2",
        );
    }

    if ctx.rep.family() == RepFamily::Adjoint && !datum.roots_span_characters() {
        checks.skip(
            "section_points_nilpotent",
            "adjoint representation does not detect all characters",
        );
    } else {
        checks.record(
            "section_points_nilpotent",
            (|| {
                for i in 0..samples {
                    let mut rng = instance_rng(seed, 3 * samples + i);
                    let u = kostant::sampling::random_section_coefficients(&mut rng, section.rank(), p, 3);
                    let x = section_point(alg, &section, &u).map_err(err)?;
                    let v = is_topologically_nilpotent(alg, &ctx.rep, &x, p).map_err(err)?;
                    check(v.is_topologically_nilpotent, || {
                        format!("section point {i} judged not nilpotent")
                    })?;
                }
                Ok(format!("{samples} points of Y + L_0+"))
            })(),
        );
    }

    let form = trace_form(alg, &ctx.rep);
    if defining && good && form.is_perfect_at(p) {
        checks.record(
            "selfdual",
            (|| {
                for i in 0..samples {
                    let mut rng = instance_rng(seed, 4 * samples + i);
                    let x = random_regular_semisimple(&mut rng, alg, &ctx.rep, &section, p, precision)
                        .map_err(err)?;
                    let r = check_selfdual(alg, &ctx.rep, &form, &x, p).map_err(err)?;
                    check(r.holds(), || format!("element {i}: {r:?}"))?;
                }
                Ok(format!("{samples} regular semisimple elements"))
            })(),
        );
    } else {
        checks.skip(
            "selfdual",
            "needs a defining representation, a g-good p > 2 and a perfect trace form",
        );
    }

    checks.record(
        "constants",
        (|| {
            let c = constants(alg, p).map_err(err)?;
            if good {
                let expected = -((alg.dim() - alg.rank()) as i64);
                check(
                    c.exponent.is_integer() && c.exponent.to_integer() == expected,
                    || format!("exponent {} expected {expected}", c.exponent),
                )?;
            }
            Ok(format!("m = {}, exponent {}", c.m, c.exponent))
        })(),
    );

    let passed = checks.all_passed();
    let out = json!({
        "datum": datum.to_string(),
        "family": ctx.rep.family(),
        "p": p,
        "seed": seed,
        "samples": samples,
        "checks": checks.0,
        "passed": passed,
    });
    if passed {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

fn emit(mut doc: Value) {
    if let Value::Object(map) = &mut doc {
        map.insert("schema".into(), json!(SCHEMA));
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&doc).expect("JSON values serialize")
    );
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match &cli.command {
        Command::Roots(d) => roots(d),
        Command::Section(d) => section(d),
        Command::Primes(d) => primes(d),
        Command::Nilpotent { datum, p, matrix } => nilpotent(datum, *p, matrix),
        Command::Reduce {
            datum,
            p,
            precision,
            matrix,
        } => reduce(datum, *p, *precision, matrix),
        Command::Invariants { datum, matrix } => invariants(datum, matrix),
        Command::Constants { datum, p, matrix } => constants_cmd(datum, *p, matrix),
        Command::Selfcheck {
            datum,
            p,
            precision,
            seed,
            samples,
        } => selfcheck(datum, *p, *precision, *seed, *samples),
    };
    match outcome {
        Ok(doc) => {
            emit(doc);
            ExitCode::SUCCESS
        }
        Err(Failure::Check(doc)) => {
            emit(doc);
            ExitCode::from(3)
        }
        Err(Failure::Parse(msg)) => {
            emit(json!({ "error": { "kind": "parse", "message": msg } }));
            ExitCode::from(1)
        }
        Err(Failure::Library(e)) => {
            let (kind, code) = if e.is_internal() {
                ("internal", 3)
            } else {
                ("precondition", 2)
            };
            emit(json!({ "error": { "kind": kind, "message": e.to_string() } }));
            ExitCode::from(code)
        }
    }
}
