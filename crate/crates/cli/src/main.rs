//! Command-line surface for the poissonval library: every subcommand
//! parses its polynomial arguments with the shared expression grammar,
//! runs one library operation, and prints the same payload as text or
//! compact JSON (`--json`). Exit codes: 0 success, 1 domain error
//! (reported structurally), 2 usage error.

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use poissonval_core::automorphism::{
    enumerate_fermat, epsilon_check, genus_and_bounds, map_jacobian, PolyMap, Variant,
};
use poissonval_core::catalog::{
    build_named_valuation, distinguisher_report, entry, list_entries, CatalogEntry, Family,
    FieldId, NamedValuationSpec,
};
use poissonval_core::poisson::PoissonStructure;
use poissonval_core::quotient::QuotientRing;
use poissonval_core::sample;
use poissonval_core::singularity::{is_isolated_singularity, linear_syzygy_kernel, milnor_number};
use poissonval_core::valuation::{
    classify_point, FilteredContext, ValuationError, ValuationValue,
};
use poissonval_core::{Poly, Rational, Ring};

const GRAMMAR: &str = "polynomial grammar:\n\
  expr     := ('-')? term (('+' | '-') ('-')? term)*\n\
  term     := factor ('*' factor)*\n\
  factor   := base ('^' int)?\n\
  base     := rational | variable | '(' expr ')'\n\
  rational := uint ('/' posint)?\n\
`*` is mandatory (no juxtaposition); variables are the declared names.";

#[derive(Parser)]
#[command(
    name = "poissonval",
    version,
    about = "Exact Poisson brackets, valuations, singularity tests, and symmetry groups"
)]
struct Cli {
    /// Emit the payload as compact JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Seed for the sampling subcommands
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Bracket {f, g} under the Jacobian structure of a potential
    Bracket {
        #[arg(long, allow_hyphen_values = true)]
        potential: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true, default_value = "x,y,z")]
        vars: String,
    },
    /// Jacobi residual on the generators, plus sampled Leibniz/Jacobi checks
    Jacobi {
        #[arg(long, allow_hyphen_values = true)]
        potential: String,
        /// Number of random (f, g, h) samples; 0 checks generators only
        #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
        samples: u32,
        #[arg(long, allow_hyphen_values = true, default_value = "x,y,z")]
        vars: String,
    },
    /// All generator brackets of the structure of a potential
    PotentialStructure {
        #[arg(long, allow_hyphen_values = true)]
        potential: String,
        #[arg(long, allow_hyphen_values = true, default_value = "x,y,z")]
        vars: String,
    },
    /// Canonical normal form in the quotient by a single modulus
    Nf {
        #[arg(long, allow_hyphen_values = true)]
        modulus: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true, default_value = "x,y,z")]
        vars: String,
    },
    /// Isolated-singularity test for a homogeneous potential
    Singularity {
        #[arg(long, allow_hyphen_values = true)]
        potential: String,
    },
    /// Milnor number of an isolated singularity
    Milnor {
        #[arg(long, allow_hyphen_values = true)]
        potential: String,
    },
    /// Kernel of the linear syzygy map on the partials
    Syzygy {
        #[arg(long, allow_hyphen_values = true)]
        potential: String,
    },
    /// Weighted value of a polynomial (or a fraction with --den)
    Value {
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        den: Option<String>,
        #[arg(long, allow_hyphen_values = true, default_value = "x,y,z")]
        vars: String,
        /// Interpret the variables as Laurent (invertible)
        #[arg(long)]
        laurent: bool,
    },
    /// Minimal admissible weight of a named valuation family
    Wmin {
        /// adams-id | adams-neg-id | nu-c | nu-xi | torus | top
        #[arg(long, allow_hyphen_values = true)]
        family: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        xi: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        w: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        /// Lattice vector, e.g. 1,2
        #[arg(long, allow_hyphen_values = true)]
        v: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        d: Option<i64>,
        /// Alternative to --family: induced weights on a potential structure
        #[arg(long, allow_hyphen_values = true)]
        potential: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        weights: Option<String>,
    },
    /// Classify a rational point of a structure
    ClassifyPoint {
        /// Point coordinates, e.g. 1,1
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Use the two-variable structure {x, y} = 1
        #[arg(long)]
        weyl: bool,
        /// Use the two-variable structure {x, y} = q*x*y
        #[arg(long, allow_hyphen_values = true)]
        skew_q: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        potential: Option<String>,
    },
    /// Value in the two-variable substitution family
    NuXi {
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        #[arg(long, allow_hyphen_values = true)]
        w: i64,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        den: Option<String>,
    },
    /// Order of vanishing along a divisor
    Gadic {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// Structure potential; default is {x, y} = 1 on two variables
        #[arg(long, allow_hyphen_values = true)]
        potential: Option<String>,
    },
    /// Determinant scalars of a polynomial map against a potential
    AutCheck {
        #[arg(long, allow_hyphen_values = true)]
        potential: String,
        /// Semicolon-separated images of the variables, e.g. "y; x; z"
        #[arg(long, allow_hyphen_values = true)]
        map: String,
        #[arg(long, allow_hyphen_values = true, default_value = "x,y,z")]
        vars: String,
    },
    /// Enumerate the monomial symmetry group of a Fermat potential
    AutEnumerate {
        #[arg(long, allow_hyphen_values = true)]
        fermat: i64,
        /// graded | fiber
        #[arg(long, allow_hyphen_values = true)]
        variant: String,
    },
    /// Genus and symmetry-order bounds for a degree
    Hurwitz {
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
    },
    /// Recorded invariants of the named Poisson fields
    Catalog {
        #[arg(long, allow_hyphen_values = true)]
        entry: Option<String>,
    },
    /// Separating lines for a pair of named Poisson fields
    Distinguish {
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Failure {
        Failure::Domain(e.to_string())
    }
}

struct Output {
    json: Value,
    text: String,
}

fn main() {
    let cli = Cli::parse();
    match run(&cli.cmd, cli.seed) {
        Ok(out) => {
            if cli.json {
                emit(&out.json.to_string());
            } else {
                emit(&out.text);
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("{msg}");
            std::process::exit(2);
        }
        Err(Failure::Domain(msg)) => {
            if cli.json {
                emit(&json!({ "error": msg }).to_string());
            } else {
                eprintln!("error: {msg}");
            }
            std::process::exit(1);
        }
    }
}

/// Print a line to stdout, exiting quietly if the reader closed the pipe.
fn emit(line: &str) {
    use std::io::Write;
    if writeln!(std::io::stdout(), "{line}").is_err() {
        std::process::exit(0);
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn ring_from(vars: &str, laurent: bool) -> Result<Ring, Failure> {
    let names: Vec<&str> = vars.split(',').map(str::trim).collect();
    for (i, n) in names.iter().enumerate() {
        let mut chars = n.chars();
        let head_ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic());
        if !head_ok || !chars.all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(usage(format!("--vars: {n:?} is not a valid variable name")));
        }
        if names[..i].contains(n) {
            return Err(usage(format!("--vars: duplicate variable {n:?}")));
        }
    }
    Ok(if laurent {
        Ring::laurent(&names)
    } else {
        Ring::poly(&names)
    })
}

fn parse_poly(ring: &Ring, input: &str, what: &str) -> Result<Poly, Failure> {
    Poly::parse(ring, input).map_err(|e| usage(format!("--{what}: {e}\n{GRAMMAR}")))
}

fn parse_rational(input: &str, what: &str) -> Result<Rational, Failure> {
    input
        .parse::<Rational>()
        .map_err(|e| usage(format!("--{what}: {e}; expected an integer or p/q")))
}

fn parse_ints(input: &str, what: &str) -> Result<Vec<i64>, Failure> {
    input
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|e| usage(format!("--{what}: {e} in {s:?}")))
        })
        .collect()
}

fn parse_rationals(input: &str, what: &str) -> Result<Vec<Rational>, Failure> {
    input
        .split(',')
        .map(|s| parse_rational(s.trim(), what))
        .collect()
}

fn value_json(v: &ValuationValue) -> Value {
    match v.finite() {
        Some(n) => json!(n),
        None => json!("inf"),
    }
}

fn required<'a, T>(opt: &'a Option<T>, what: &str) -> Result<&'a T, Failure> {
    opt.as_ref()
        .ok_or_else(|| usage(format!("--{what} is required here")))
}

fn run(cmd: &Cmd, seed: u64) -> Result<Output, Failure> {
    match cmd {
        Cmd::Bracket {
            potential,
            f,
            g,
            vars,
        } => {
            let ring = ring_from(vars, false)?;
            let s = PoissonStructure::from_potential(&parse_poly(&ring, potential, "potential")?)?;
            let b = s.bracket(&parse_poly(&ring, f, "f")?, &parse_poly(&ring, g, "g")?);
            let text = b.to_string();
            Ok(Output {
                json: json!({ "bracket": text }),
                text,
            })
        }
        Cmd::Jacobi {
            potential,
            samples,
            vars,
        } => {
            let ring = ring_from(vars, false)?;
            let s = PoissonStructure::from_potential(&parse_poly(&ring, potential, "potential")?)?;
            let gens: Vec<Poly> = (0..ring.nvars()).map(|i| Poly::var(&ring, i)).collect();
            let jacobi_zero = s.jacobi_residual(&gens[0], &gens[1], &gens[2]).is_zero();
            let mut leibniz_ok = Value::Null;
            let mut sampled_jacobi = Value::Null;
            if *samples > 0 {
                let mut rng = sample::rng(seed);
                let mut leibniz = true;
                let mut jacobi = true;
                for _ in 0..*samples {
                    let f = sample::poly(&mut rng, &ring, 4, 5);
                    let g = sample::poly(&mut rng, &ring, 4, 5);
                    let h = sample::poly(&mut rng, &ring, 4, 5);
                    let lhs = s.bracket(&f, &(&g * &h));
                    let rhs = &(&s.bracket(&f, &g) * &h) + &(&g * &s.bracket(&f, &h));
                    leibniz &= lhs == rhs;
                    jacobi &= s.jacobi_residual(&f, &g, &h).is_zero();
                }
                leibniz_ok = json!(leibniz);
                sampled_jacobi = json!(jacobi);
            }
            Ok(Output {
                json: json!({
                    "jacobi_zero": jacobi_zero,
                    "leibniz_ok": leibniz_ok,
                    "sampled_jacobi_zero": sampled_jacobi,
                    "samples": samples,
                }),
                text: format!(
                    "jacobi_zero: {jacobi_zero}\nleibniz_ok: {leibniz_ok}\n\
                     sampled_jacobi_zero: {sampled_jacobi}\nsamples: {samples}"
                ),
            })
        }
        Cmd::PotentialStructure { potential, vars } => {
            let ring = ring_from(vars, false)?;
            let s = PoissonStructure::from_potential(&parse_poly(&ring, potential, "potential")?)?;
            let mut brackets = Vec::new();
            let mut lines = Vec::new();
            for (i, j) in [(0, 1), (1, 2), (2, 0)] {
                let pair = format!("{{{}, {}}}", ring.name(i), ring.name(j));
                let value = s.generator_bracket(i, j).to_string();
                lines.push(format!("{pair} = {value}"));
                brackets.push(json!({ "pair": pair, "value": value }));
            }
            Ok(Output {
                json: json!({ "brackets": brackets }),
                text: lines.join("\n"),
            })
        }
        Cmd::Nf { modulus, f, vars } => {
            let ring = ring_from(vars, false)?;
            let q = QuotientRing::with_default_order(parse_poly(&ring, modulus, "modulus")?)?;
            let nf = q.normal_form(&parse_poly(&ring, f, "f")?)?;
            let text = nf.to_string();
            Ok(Output {
                json: json!({ "nf": text }),
                text,
            })
        }
        Cmd::Singularity { potential } => {
            let ring = ring_from("x,y,z", false)?;
            let isolated = is_isolated_singularity(&parse_poly(&ring, potential, "potential")?)?;
            Ok(Output {
                json: json!({ "isolated": isolated }),
                text: format!("isolated: {isolated}"),
            })
        }
        Cmd::Milnor { potential } => {
            let ring = ring_from("x,y,z", false)?;
            let milnor = milnor_number(&parse_poly(&ring, potential, "potential")?)?;
            let isolated = milnor.is_some();
            Ok(Output {
                json: json!({ "milnor": milnor, "isolated": isolated }),
                text: match milnor {
                    Some(n) => format!("milnor: {n}\nisolated: true"),
                    None => "milnor: none\nisolated: false".to_string(),
                },
            })
        }
        Cmd::Syzygy { potential } => {
            let ring = ring_from("x,y,z", false)?;
            let kernel = linear_syzygy_kernel(&parse_poly(&ring, potential, "potential")?)?;
            let empty = kernel.is_empty();
            let rows: Vec<Value> = kernel
                .iter()
                .map(|t| json!([t[0].to_string(), t[1].to_string(), t[2].to_string()]))
                .collect();
            let mut lines = vec![format!("empty: {empty}")];
            for t in &kernel {
                lines.push(format!("({}, {}, {})", t[0], t[1], t[2]));
            }
            Ok(Output {
                json: json!({ "empty": empty, "kernel": rows }),
                text: lines.join("\n"),
            })
        }
        Cmd::Value {
            weights,
            f,
            den,
            vars,
            laurent,
        } => {
            let ring = ring_from(vars, *laurent)?;
            let w = parse_ints(weights, "weights")?;
            if w.len() != ring.nvars() {
                return Err(usage("--weights arity must match --vars"));
            }
            let ctx = FilteredContext::induced(&ring, w, 0)?;
            let fp = parse_poly(&ring, f, "f")?;
            let v = match den {
                Some(d) => ctx.value_fraction(&fp, &parse_poly(&ring, d, "den")?)?,
                None => ctx.value(&fp)?,
            };
            Ok(Output {
                json: json!({ "value": value_json(&v) }),
                text: format!("value: {v}"),
            })
        }
        Cmd::Wmin {
            family,
            lambda,
            xi,
            w,
            q,
            v,
            d,
            potential,
            weights,
        } => {
            let (min_weight, declared): (i64, Value) = match (family, potential) {
                (Some(name), None) => {
                    let ctx = named_context(name, lambda, xi, w, q, v, d)?;
                    (ctx.min_weight_w()?, json!(ctx.declared_w()))
                }
                (None, Some(p)) => {
                    let ring = ring_from("x,y,z", false)?;
                    let ww = parse_ints(required(weights, "weights")?, "weights")?;
                    if ww.len() != 3 {
                        return Err(usage("--weights needs three entries here"));
                    }
                    let s = PoissonStructure::from_potential(&parse_poly(&ring, p, "potential")?)?;
                    let base = FilteredContext::induced(&ring, ww, 0)?;
                    match base.attach_structure(s) {
                        Ok(ctx) => (ctx.min_weight_w()?, Value::Null),
                        Err(ValuationError::DeclaredWeightTooSmall { min_w, .. }) => {
                            (min_w, Value::Null)
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
                _ => {
                    return Err(usage(
                        "wmin needs either --family (with its parameters) or \
                         --potential with --weights",
                    ))
                }
            };
            Ok(Output {
                json: json!({ "declared_w": declared, "min_weight": min_weight }),
                text: format!("declared_w: {declared}\nmin_weight: {min_weight}"),
            })
        }
        Cmd::ClassifyPoint {
            point,
            weyl,
            skew_q,
            potential,
        } => {
            let s = match (weyl, skew_q, potential) {
                (true, None, None) => PoissonStructure::weyl(),
                (false, Some(qs), None) => {
                    PoissonStructure::skew_polynomial(parse_rational(qs, "skew-q")?)
                }
                (false, None, Some(p)) => {
                    let ring = ring_from("x,y,z", false)?;
                    PoissonStructure::from_potential(&parse_poly(&ring, p, "potential")?)?
                }
                _ => {
                    return Err(usage(
                        "choose exactly one of --weyl, --skew-q, --potential",
                    ))
                }
            };
            let p = parse_rationals(point, "point")?;
            let class = classify_point(&s, &p)?;
            Ok(Output {
                json: json!({ "class": class.to_string() }),
                text: format!("class: {class}"),
            })
        }
        Cmd::NuXi { xi, w, f, den } => {
            let ctx = FilteredContext::weyl_nu_xi(parse_rational(xi, "xi")?, *w)?;
            let ring = ctx.source_ring().clone();
            let fp = parse_poly(&ring, f, "f")?;
            let v = match den {
                Some(d) => ctx.value_fraction(&fp, &parse_poly(&ring, d, "den")?)?,
                None => ctx.value(&fp)?,
            };
            Ok(Output {
                json: json!({ "value": value_json(&v) }),
                text: format!("value: {v}"),
            })
        }
        Cmd::Gadic { g, f, potential } => {
            let (s, ring) = match potential {
                Some(p) => {
                    let ring = ring_from("x,y,z", false)?;
                    let s = PoissonStructure::from_potential(&parse_poly(&ring, p, "potential")?)?;
                    (s, ring)
                }
                None => {
                    let s = PoissonStructure::weyl();
                    let ring = s.ring().clone();
                    (s, ring)
                }
            };
            let ctx = FilteredContext::gadic(s, parse_poly(&ring, g, "g")?)?;
            let v = ctx.value(&parse_poly(&ring, f, "f")?)?;
            Ok(Output {
                json: json!({ "value": value_json(&v) }),
                text: format!("value: {v}"),
            })
        }
        Cmd::AutCheck {
            potential,
            map,
            vars,
        } => {
            let ring = ring_from(vars, false)?;
            let images = map
                .split(';')
                .map(|s| parse_poly(&ring, s.trim(), "map"))
                .collect::<Result<Vec<_>, _>>()?;
            if images.len() != ring.nvars() {
                return Err(usage("--map needs one image per variable"));
            }
            let phi = PolyMap::new(&ring, images)?;
            let omega = parse_poly(&ring, potential, "potential")?;
            let rep = epsilon_check(&phi, &omega)?;
            let jac = map_jacobian(&phi)?;
            debug_assert_eq!(jac.as_constant(), Some(rep.jacobian.clone()));
            Ok(Output {
                json: json!({
                    "hdet": rep.hdet.to_string(),
                    "jacobian": rep.jacobian.to_string(),
                    "pdet": rep.pdet.to_string(),
                    "poisson": rep.poisson,
                }),
                text: format!(
                    "hdet: {}\njacobian: {}\npdet: {}\npoisson: {}",
                    rep.hdet, rep.jacobian, rep.pdet, rep.poisson
                ),
            })
        }
        Cmd::AutEnumerate { fermat, variant } => {
            let variant = match variant.as_str() {
                "graded" => Variant::Graded,
                "fiber" => Variant::Fiber,
                other => {
                    return Err(usage(format!(
                        "--variant must be graded or fiber, got {other:?}"
                    )))
                }
            };
            let report = enumerate_fermat(*fermat, variant)?;
            Ok(Output {
                json: json!({
                    "order": report.order,
                    "quotient": report.quotient.to_string(),
                    "split": report.split,
                }),
                text: format!(
                    "order: {}\nquotient: {}\nsplit: {}",
                    report.order, report.quotient, report.split
                ),
            })
        }
        Cmd::Hurwitz { d } => {
            let b = genus_and_bounds(*d)?;
            Ok(Output {
                json: json!({
                    "genus": b.genus,
                    "hurwitz": b.hurwitz,
                    "order_bound": b.order_bound,
                }),
                text: format!(
                    "genus: {}\nhurwitz: {}\norder_bound: {}",
                    b.genus, b.hurwitz, b.order_bound
                ),
            })
        }
        Cmd::Catalog { entry: which } => {
            let entries: Vec<CatalogEntry> = match which {
                Some(name) => {
                    let id = FieldId::parse(name)
                        .ok_or_else(|| usage(format!("unknown catalog entry {name:?}")))?;
                    vec![entry(id)]
                }
                None => list_entries(),
            };
            let payload: Vec<Value> = entries.iter().map(entry_json).collect();
            let text = entries
                .iter()
                .map(entry_text)
                .collect::<Vec<_>>()
                .join("\n\n");
            Ok(Output {
                json: json!({ "entries": payload }),
                text,
            })
        }
        Cmd::Distinguish { left, right } => {
            let a = FieldId::parse(left)
                .ok_or_else(|| usage(format!("unknown catalog entry {left:?}")))?;
            let b = FieldId::parse(right)
                .ok_or_else(|| usage(format!("unknown catalog entry {right:?}")))?;
            let report = distinguisher_report(a, b)?;
            let lines: Vec<Value> = report
                .lines
                .iter()
                .map(|l| {
                    json!({
                        "about": l.about.to_string(),
                        "invariant": l.invariant,
                        "statement": l.statement,
                        "evidence": l.evidence.to_string(),
                        "provenance": l.provenance,
                    })
                })
                .collect();
            let mut text = vec![format!("{} vs {}:", report.left, report.right)];
            for l in &report.lines {
                text.push(format!(
                    "- [{}] {}: {} ({})",
                    l.evidence, l.about, l.statement, l.provenance
                ));
            }
            Ok(Output {
                json: json!({
                    "left": report.left.to_string(),
                    "right": report.right.to_string(),
                    "lines": lines,
                }),
                text: text.join("\n"),
            })
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn named_context(
    family: &str,
    lambda: &Option<String>,
    xi: &Option<String>,
    w: &Option<i64>,
    q: &Option<String>,
    v: &Option<String>,
    d: &Option<i64>,
) -> Result<FilteredContext, Failure> {
    let lam = |what: &Option<String>| -> Result<Rational, Failure> {
        parse_rational(required(what, "lambda")?, "lambda")
    };
    let spec = match family {
        "adams-id" => NamedValuationSpec {
            entry: FieldId::GradedElliptic,
            family: Family::AdamsId { lambda: lam(lambda)? },
        },
        "adams-neg-id" => NamedValuationSpec {
            entry: FieldId::GradedElliptic,
            family: Family::AdamsNegId { lambda: lam(lambda)? },
        },
        "nu-c" => NamedValuationSpec {
            entry: FieldId::Elliptic,
            family: Family::NuC { lambda: lam(lambda)? },
        },
        "nu-xi" => NamedValuationSpec {
            entry: FieldId::Weyl,
            family: Family::WeylNuXi {
                xi: parse_rational(required(xi, "xi")?, "xi")?,
                w: *required(w, "w")?,
            },
        },
        "torus" => {
            let vec = parse_ints(required(v, "v")?, "v")?;
            let &[v0, v1] = vec.as_slice() else {
                return Err(usage("--v needs exactly two entries"));
            };
            NamedValuationSpec {
                entry: FieldId::QSkew,
                family: Family::TorusLattice {
                    q: parse_rational(required(q, "q")?, "q")?,
                    v: [v0, v1],
                },
            }
        }
        "top" => {
            let deg = *required(d, "d")?;
            NamedValuationSpec {
                entry: if deg == 3 {
                    FieldId::Elliptic
                } else {
                    FieldId::HigherGenusFiber
                },
                family: Family::TopVariable {
                    d: deg,
                    xi: parse_rational(required(xi, "xi")?, "xi")?,
                },
            }
        }
        other => {
            return Err(usage(format!(
                "--family must be one of adams-id, adams-neg-id, nu-c, nu-xi, torus, top; \
                 got {other:?}"
            )))
        }
    };
    build_named_valuation(&spec).map_err(Into::into)
}

fn recorded_json(r: &poissonval_core::catalog::Recorded) -> Value {
    json!(r.to_string())
}

fn entry_json(e: &CatalogEntry) -> Value {
    json!({
        "id": e.id.to_string(),
        "name": e.name,
        "presentation": e.presentation,
        "transcendence_degree": e.transcendence_degree,
        "faithful_zero_count": recorded_json(&e.faithful_zero_count),
        "nontrivial_zero_count": recorded_json(&e.nontrivial_zero_count),
        "alpha_neg_one": recorded_json(&e.alpha_neg_one),
        "depth": e.depth,
        "width": e.width,
        "facts": e.facts.iter().map(|f| json!({
            "statement": f.statement,
            "provenance": f.provenance,
        })).collect::<Vec<_>>(),
    })
}

fn entry_text(e: &CatalogEntry) -> String {
    let opt = |v: Option<i64>| v.map_or("not recorded".to_string(), |n| n.to_string());
    let mut lines = vec![
        format!("{} ({})", e.name, e.id),
        format!("  presentation: {}", e.presentation),
        format!("  transcendence degree: {}", e.transcendence_degree),
        format!("  faithful weight-0 valuations: {}", e.faithful_zero_count),
        format!("  nontrivial weight-0 valuations: {}", e.nontrivial_zero_count),
        format!("  weight-(-1) valuations: {}", e.alpha_neg_one),
        format!("  depth: {}  width: {}", opt(e.depth), opt(e.width)),
    ];
    for f in &e.facts {
        lines.push(format!("  fact: {} [{}]", f.statement, f.provenance));
    }
    lines.join("\n")
}
