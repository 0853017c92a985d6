mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use flipcayley::involutions::{check_degree_one_image, involution, Which};
use flipcayley::parse::{parse_element, parse_poly};
use flipcayley::quotient::{quot_mul, quot_star, quotient_algebra, reduce};
use flipcayley::structure::{
    degreewise_set, degreewise_set_bruteforce, left_right_nucleus_discrepancy, z_star_of_b,
    SetKind, MAX_BRUTEFORCE_BOUND,
};
use flipcayley::verify::{run_suite, Suite, SuiteOptions, Target};
use flipcayley::{
    check_axioms, find_zero_divisor, named, tower, AxiomFamily, DoublingSpec, Error, FlipPolyRing,
    NamedAlgebra, Rational, StarAlgebra,
};

const DEFAULT_MAX_DEGREE: usize = 6;
const ZERO_DIVISOR_BUDGET: usize = 1 << 20;

#[derive(Parser)]
#[command(
    name = "flipcayley",
    version,
    about = "Exact arithmetic in Cayley-Dickson algebras and flipped polynomial rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct AlgebraArgs {
    /// Preset algebra: R, C, C', H, H', O, O', S
    #[arg(long, conflicts_with = "mus")]
    algebra: Option<String>,
    /// Doubling parameters of a tower over Q, e.g. -1,-1,1
    #[arg(long, allow_hyphen_values = true)]
    mus: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize an algebra, or export its structure constants with --json
    Algebra {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        json: bool,
    },
    /// Multiply two elements (or two polynomials of A[X;*]^fl with --poly)
    Mul {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        poly: bool,
        #[arg(long)]
        json: bool,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Print the basis multiplication table
    Table {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        json: bool,
    },
    /// Associator (xy)z - x(yz)
    Assoc {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long)]
        poly: bool,
        #[arg(long)]
        json: bool,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Report algebra properties with witnesses
    Check {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// Also run an axiom family (F, N or O) on A[X;*]^fl
        #[arg(long)]
        axioms: Option<String>,
        #[arg(long)]
        bound: Option<usize>,
        /// Search for a pair of zero divisors
        #[arg(long)]
        zero_divisors: bool,
        #[arg(long)]
        json: bool,
    },
    /// Apply alpha or beta to a polynomial, or validate a candidate image of X
    Involution {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, default_value = "alpha")]
        which: String,
        /// Treat the argument as a proposed image of X and check necessary conditions
        #[arg(long)]
        validate: bool,
        #[arg(long)]
        json: bool,
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Work in A[X;*]^fl / <X^2 - mu>
    Quotient {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[command(subcommand)]
        op: QuotientOp,
    },
    /// Degreewise structural sets of A[X;*]^fl
    Analyze {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// commuter, left_right_nucleus, middle_nucleus, nucleus, center or z_star
        #[arg(long, default_value = "center")]
        set: String,
        #[arg(long)]
        bound: Option<usize>,
        /// Compare with the brute-force computation
        #[arg(long)]
        cross_check: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run verification suites
    Verify {
        /// thm1, thm2, props, centers, corollary or axioms
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        suite: Option<String>,
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        alg: AlgebraArgs,
        /// Comma-separated values of mu for thm1
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long)]
        bound: Option<usize>,
    },
}

#[derive(Subcommand)]
enum QuotientOp {
    /// Product of two classes given by representatives
    Mul {
        #[arg(long)]
        json: bool,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Involution of a class
    Star {
        #[arg(long)]
        json: bool,
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Multiplication table of the quotient
    Table {
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Check(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `flipcayley --help` for usage");
            ExitCode::from(2)
        }
    }
}

fn max_degree() -> std::result::Result<usize, Failure> {
    match std::env::var("FLIPCAYLEY_MAX_DEGREE") {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "FLIPCAYLEY_MAX_DEGREE must be an integer, got `{v}`"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_DEGREE),
    }
}

fn capped(bound: Option<usize>, default: usize) -> std::result::Result<usize, Failure> {
    let cap = max_degree()?;
    match bound {
        Some(b) if b > cap => Err(Failure::Usage(format!(
            "bound {b} exceeds FLIPCAYLEY_MAX_DEGREE={cap}"
        ))),
        Some(b) => Ok(b),
        None => Ok(default.min(cap)),
    }
}

impl AlgebraArgs {
    fn target(&self) -> std::result::Result<Option<Target>, Failure> {
        match (&self.algebra, &self.mus) {
            (Some(a), _) => Ok(Some(Target::named(a.parse::<NamedAlgebra>()?))),
            (None, Some(m)) => Ok(Some(Target::from_spec(&m.parse::<DoublingSpec>()?)?)),
            (None, None) => Ok(None),
        }
    }

    fn build(&self) -> std::result::Result<StarAlgebra, Failure> {
        match (&self.algebra, &self.mus) {
            (Some(a), _) => Ok(named(a.parse()?)),
            (None, Some(m)) => Ok(tower(&m.parse()?)?),
            (None, None) => Err(Failure::Usage(
                "one of --algebra or --mus is required".into(),
            )),
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Algebra { alg, json } => {
            let a = alg.build()?;
            if json {
                return Ok(to_json(&a.to_json()));
            }
            Ok(render::summary(&a))
        }
        Command::Mul {
            alg,
            poly,
            json,
            x,
            y,
        } => {
            let a = alg.build()?;
            if poly {
                let ring = FlipPolyRing::star_skew(a.clone());
                let p = ring.mul(&parse_poly(&x, a.dim())?, &parse_poly(&y, a.dim())?)?;
                return Ok(if json {
                    to_json(&p.to_json())
                } else {
                    format!("{p}\n")
                });
            }
            let v = a.mul(&parse_element(&x, a.dim())?, &parse_element(&y, a.dim())?)?;
            Ok(if json {
                to_json(&v.coords())
            } else {
                format!("{v}\n")
            })
        }
        Command::Table { alg, json } => {
            let a = alg.build()?;
            Ok(if json {
                to_json(&a.to_json())
            } else {
                render::table(&a)
            })
        }
        Command::Assoc {
            alg,
            poly,
            json,
            x,
            y,
            z,
        } => {
            let a = alg.build()?;
            let n = a.dim();
            if poly {
                let ring = FlipPolyRing::star_skew(a.clone());
                let (p, q, r) = (parse_poly(&x, n)?, parse_poly(&y, n)?, parse_poly(&z, n)?);
                let left = ring.mul(&ring.mul(&p, &q)?, &r)?;
                let right = ring.mul(&p, &ring.mul(&q, &r)?)?;
                let v = left.sub(&right);
                return Ok(if json {
                    to_json(&v.to_json())
                } else {
                    format!("{v}\n")
                });
            }
            let v = a.associator(
                &parse_element(&x, n)?,
                &parse_element(&y, n)?,
                &parse_element(&z, n)?,
            )?;
            Ok(if json {
                to_json(&v.coords())
            } else {
                format!("{v}\n")
            })
        }
        Command::Check {
            alg,
            axioms,
            bound,
            zero_divisors,
            json,
        } => check(&alg, axioms, bound, zero_divisors, json),
        Command::Involution {
            alg,
            which,
            validate,
            json,
            poly,
        } => {
            let a = alg.build()?;
            let ring = FlipPolyRing::star_skew(a.clone());
            let p = parse_poly(&poly, a.dim())?;
            if validate {
                let report = check_degree_one_image(&ring, &p)?;
                let body = if json {
                    to_json(&json!({
                        "a": report.a.coords(),
                        "b": report.b.coords(),
                        "degree_one": report.degree_one,
                        "b_squared_is_one": report.b_squared_is_one,
                        "a_star_plus_a_b_star_vanishes": report.a_star_plus_a_b_star_vanishes,
                        "twisted_commutation": report.twisted_commutation,
                        "passed": report.passed(),
                    }))
                } else {
                    report.to_string()
                };
                return if report.passed() {
                    Ok(body)
                } else {
                    Err(Failure::Check(body))
                };
            }
            let w: Which = which.parse()?;
            let image = involution(&ring, w, &p)?;
            Ok(if json {
                to_json(&image.to_json())
            } else {
                format!("{image}\n")
            })
        }
        Command::Quotient { alg, mu, op } => quotient(&alg, &mu, op),
        Command::Analyze {
            alg,
            set,
            bound,
            cross_check,
            json,
        } => analyze(&alg, &set, bound, cross_check, json),
        Command::Verify {
            suite,
            all,
            alg,
            mu,
            bound,
        } => verify(suite, all, &alg, mu, bound),
    }
}

fn check(
    alg: &AlgebraArgs,
    axioms: Option<String>,
    bound: Option<usize>,
    zero_divisors: bool,
    json: bool,
) -> Outcome {
    let a = alg.build()?;
    let props = render::properties(&a);
    let axiom_report = match axioms {
        Some(f) => {
            let family: AxiomFamily = f.parse()?;
            let b = capped(bound, 4)?;
            Some(check_axioms(
                &FlipPolyRing::star_skew(a.clone()),
                family,
                b,
            )?)
        }
        None => None,
    };
    let zd = if zero_divisors {
        Some(find_zero_divisor(&a, ZERO_DIVISOR_BUDGET))
    } else {
        None
    };
    if json {
        let mut obj = json!({
            "dim": a.dim(),
            "properties": props
                .iter()
                .map(|(name, w)| (name.to_string(), json!({"holds": w.is_none(), "witness": w})))
                .collect::<serde_json::Map<_, _>>(),
            "involution_axioms": a.check_involution_axioms().is_ok(),
        });
        if let Some(r) = &axiom_report {
            obj["axioms"] = r
                .checks
                .iter()
                .map(|c| {
                    (
                        c.name.clone(),
                        json!({"holds": c.passed(), "counterexample": c.counterexample}),
                    )
                })
                .collect::<serde_json::Map<_, _>>()
                .into();
        }
        if let Some(z) = &zd {
            obj["zero_divisor"] = match z {
                Some((x, y)) => json!({"x": x.to_string(), "y": y.to_string()}),
                None => serde_json::Value::Null,
            };
        }
        return Ok(to_json(&obj));
    }
    let mut out = format!("dim {}\n", a.dim());
    for (name, w) in &props {
        match w {
            None => out.push_str(&format!("{name:<12} yes\n")),
            Some(w) => out.push_str(&format!("{name:<12} no   {w}\n")),
        }
    }
    let inv = if a.check_involution_axioms().is_ok() {
        "yes"
    } else {
        "no"
    };
    out.push_str(&format!("{:<12} {inv}\n", "involution"));
    if let Some(r) = axiom_report {
        out.push_str(&format!(
            "axioms {} on A[X;*]^fl up to degree {}\n",
            r.family, r.bound
        ));
        out.push_str(&r.to_string());
    }
    match zd {
        Some(Some((x, y))) => out.push_str(&format!("zero divisors: [{x}] * [{y}] = 0\n")),
        Some(None) => out.push_str("zero divisors: none found among sparse candidates\n"),
        None => {}
    }
    Ok(out)
}

fn quotient(alg: &AlgebraArgs, mu: &str, op: QuotientOp) -> Outcome {
    let a = alg.build()?;
    let mu: Rational = mu.parse()?;
    let ring = FlipPolyRing::star_skew(a.clone());
    let class = |s: &str| -> std::result::Result<_, Failure> {
        Ok(reduce(&ring, &parse_poly(s, a.dim())?, &mu)?)
    };
    let show = |u: flipcayley::QuotElement, json: bool| {
        if json {
            to_json(&json!({"a": u.a.coords(), "b": u.b.coords()}))
        } else {
            format!("{}\n", u.to_poly())
        }
    };
    match op {
        QuotientOp::Mul { json, x, y } => {
            Ok(show(quot_mul(&a, &mu, &class(&x)?, &class(&y)?)?, json))
        }
        QuotientOp::Star { json, x } => Ok(show(quot_star(&a, &class(&x)?)?, json)),
        QuotientOp::Table { json } => {
            let q = quotient_algebra(&a, &mu)?;
            Ok(if json {
                to_json(&q.to_json())
            } else {
                render::table(&q)
            })
        }
    }
}

fn analyze(
    alg: &AlgebraArgs,
    set: &str,
    bound: Option<usize>,
    cross_check: bool,
    json: bool,
) -> Outcome {
    let a = alg.build()?;
    let bound = capped(bound, 4)?;
    let z_star = set == "z_star";
    let computed = if z_star {
        z_star_of_b(&a, bound)?
    } else {
        degreewise_set(&a, set.parse()?, bound)?
    };
    if !cross_check {
        if !z_star {
            return Ok(if json {
                to_json(&computed)
            } else {
                computed.to_string()
            });
        }
        // z_star is stored as a center-shaped set; relabel it
        return Ok(if json {
            let mut v = serde_json::to_value(&computed).expect("serializable");
            v["kind"] = json!("z_star");
            to_json(&v)
        } else {
            computed
                .to_string()
                .replacen("set: center", "set: z_star", 1)
        });
    }
    if z_star {
        return Err(Failure::Usage(
            "--cross-check is not available for z_star".into(),
        ));
    }
    if bound > MAX_BRUTEFORCE_BOUND {
        return Err(Failure::Usage(format!(
            "--cross-check supports bounds up to {MAX_BRUTEFORCE_BOUND}"
        )));
    }
    let brute = degreewise_set_bruteforce(&a, computed.kind, bound)?;
    let difference = computed.first_difference(&brute);
    let lr = if computed.kind == SetKind::LeftRightNucleus {
        left_right_nucleus_discrepancy(&a, bound)?
    } else {
        None
    };
    let agrees = difference.is_none() && lr.is_none();
    let body = if json {
        to_json(&json!({
            "set": computed,
            "cross_check": {
                "agrees": agrees,
                "first_difference": difference,
                "left_right_discrepancy": lr,
            }
        }))
    } else {
        let mut s = computed.to_string();
        match difference {
            None => s.push_str("cross-check: agrees with brute force\n"),
            Some(d) => s.push_str(&format!(
                "cross-check: MISMATCH at degree {d}\nbrute force:\n{brute}"
            )),
        }
        if let Some(d) = lr {
            s.push_str(&format!("left and right nuclei differ at degree {d}\n"));
        }
        s
    };
    if agrees {
        Ok(body)
    } else {
        Err(Failure::Check(body))
    }
}

fn verify(
    suite: Option<String>,
    all: bool,
    alg: &AlgebraArgs,
    mu: Option<String>,
    bound: Option<usize>,
) -> Outcome {
    let suites: Vec<Suite> = if all {
        Suite::ALL.to_vec()
    } else {
        vec![suite.unwrap_or_default().parse()?]
    };
    let mus = match mu {
        Some(m) => Some(
            m.split(',')
                .map(|s| s.trim().parse::<Rational>())
                .collect::<std::result::Result<Vec<_>, Error>>()?,
        ),
        None => None,
    };
    let env_bound = std::env::var_os("FLIPCAYLEY_MAX_DEGREE")
        .map(|_| max_degree())
        .transpose()?;
    let bound = match bound {
        Some(_) => Some(capped(bound, 0)?),
        None => env_bound,
    };
    let opts = SuiteOptions {
        targets: alg.target()?.map(|t| vec![t]),
        mus,
        bound,
    };
    let mut out = String::new();
    let mut ok = true;
    for s in suites {
        let report = run_suite(s, &opts)?;
        ok &= report.passed();
        out.push_str(&report.to_string());
    }
    if ok {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}
