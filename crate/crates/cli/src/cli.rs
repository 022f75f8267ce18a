use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};
use toric_qh_core::f2ring::{Monomial, QHElement, RingError};
use toric_qh_core::linalg::Rat;
use toric_qh_core::polytope::{validate_delzant, DelzantPolytope, PolytopeError, Rejection};
use toric_qh_core::qh::{
    betti_crosscheck, min_quantum_degree, verify_psi, Flavor, Presentation, QhError, QhRing, SeidelElement, Space,
    Verdict,
};

use crate::expr::{ElementExpr, ExprError};
use crate::file::{convention_name, offset_pi, LoadError, PolytopeFile};
use crate::report::{header, render_text};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpaceArg {
    #[value(name = "L")]
    L,
    #[value(name = "M")]
    M,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FlavorArg {
    Classical,
    Quantum,
}

impl From<SpaceArg> for Space {
    fn from(s: SpaceArg) -> Space {
        match s {
            SpaceArg::L => Space::L,
            SpaceArg::M => Space::M,
        }
    }
}

impl From<FlavorArg> for Flavor {
    fn from(f: FlavorArg) -> Flavor {
        match f {
            FlavorArg::Classical => Flavor::Classical,
            FlavorArg::Quantum => Flavor::Quantum,
        }
    }
}

#[derive(Debug, clap::Args)]
struct RingArgs {
    #[arg(long, value_enum, default_value = "L")]
    space: SpaceArg,
    #[arg(long, value_enum, default_value = "quantum")]
    flavor: FlavorArg,
}

/// Z2 homology and quantum homology of Fano toric manifolds and their real
/// Lagrangians.
///
/// POLYTOPE is a JSON file or one of the built-ins cp<n>, cp1xcp1,
/// blowup_cp3. Facets and variables are numbered from 1.
#[derive(Debug, Parser)]
#[command(name = "toric-qh", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, env = "TORIC_QH_FORMAT", default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the Delzant conditions.
    Validate { polytope: String },
    /// List vertices with tight facets, edges and Morse indices.
    Vertices {
        polytope: String,
        /// Height direction, comma separated; generic by default.
        #[arg(long, allow_hyphen_values = true)]
        xi: Option<String>,
    },
    /// Primitive collections with Batyrev vectors and quantum degrees.
    Primitives { polytope: String },
    /// Generators and relations of one of the four rings.
    Presentation {
        #[command(flatten)]
        ring: RingArgs,
        polytope: String,
    },
    /// Lagrangian Seidel element of a facet or a combination of facets.
    Seidel {
        /// Facet number.
        #[arg(long, conflicts_with = "combo", required_unless_present = "combo")]
        facet: Option<usize>,
        /// Exponents c1,...,cd; negative entries use inverses.
        #[arg(long, allow_hyphen_values = true)]
        combo: Option<String>,
        polytope: String,
    },
    /// Product of two element expressions.
    Mul {
        a: String,
        b: String,
        polytope: String,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Inverse of an element expression.
    Invert {
        a: String,
        polytope: String,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Betti numbers from Morse indices, checked against the Hilbert function.
    Betti {
        polytope: String,
        #[arg(long, allow_hyphen_values = true)]
        xi: Option<String>,
    },
    /// Compare the quantum L and M presentations.
    PsiCheck { polytope: String },
    /// Uniruledness certificate from the first facet's Seidel element.
    Uniruled {
        polytope: String,
        #[arg(long, value_enum, default_value = "quantum")]
        flavor: FlavorArg,
    },
    /// Run every check on one polytope.
    Selfcheck { polytope: String },
}

/// Exit status 1 comes from mathematics, 2 from bad input.
#[derive(Debug)]
struct Failure {
    exit: i32,
    kind: String,
    message: String,
}

impl Failure {
    fn usage(kind: &str, message: impl ToString) -> Self {
        Failure {
            exit: 2,
            kind: kind.into(),
            message: message.to_string(),
        }
    }

    fn math(kind: &str, message: impl ToString) -> Self {
        Failure {
            exit: 1,
            kind: kind.into(),
            message: message.to_string(),
        }
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        let kind = match &e {
            LoadError::Io { .. } => "IoError",
            LoadError::Parse { .. } => "ParseError",
            LoadError::Schema { .. } => "SchemaError",
            LoadError::Polytope(_) => "Malformed",
        };
        Failure::usage(kind, e)
    }
}

impl From<ExprError> for Failure {
    fn from(e: ExprError) -> Self {
        Failure::usage("ParseError", e)
    }
}

impl From<Rejection> for Failure {
    fn from(r: Rejection) -> Self {
        Failure::math(r.code(), r)
    }
}

impl From<PolytopeError> for Failure {
    fn from(e: PolytopeError) -> Self {
        let kind = match &e {
            PolytopeError::Rejected(r) => return r.clone().into(),
            PolytopeError::Malformed(_) => return Failure::usage("Malformed", e),
            PolytopeError::NoBatyrevVector { .. } => "NoBatyrevVector",
            PolytopeError::NonUniqueBatyrevVector { .. } => "NonUniqueBatyrevVector",
            PolytopeError::FanoViolation { .. } => "FanoViolation",
            PolytopeError::NonGenericXi { .. } => "NonGenericXi",
            PolytopeError::NotPrimitive { .. } => "NotPrimitive",
        };
        Failure::math(kind, e)
    }
}

impl From<QhError> for Failure {
    fn from(e: QhError) -> Self {
        match e {
            QhError::Polytope(p) => p.into(),
            QhError::Ring(ref r) => Failure::math(
                match r {
                    RingError::NonHomogeneousGenerator { .. } => "NonHomogeneousGenerator",
                    RingError::VariableCount { .. } => "VariableCount",
                    RingError::InfiniteDimensional { .. } => "InfiniteDimensional",
                },
                e,
            ),
            QhError::NotInvertible(_) => Failure::math("NotInvertible", e),
            QhError::CrosscheckFailed { .. } => Failure::math("CrosscheckFailed", e),
            QhError::FacetOutOfRange { .. } | QhError::ComboLength { .. } => Failure::usage("UsageError", e),
        }
    }
}

type Outcome = Result<(Map<String, Value>, i32), Failure>;

/// Parses `argv`, runs the command and writes its report. Returns the exit
/// status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let (name, polytope_arg) = command_names(&cli.command);
    let (report, code) = match dispatch(&cli.command) {
        Ok((report, code)) => (report, code),
        Err(f) => {
            let mut report = header(name, Some(polytope_arg));
            report.insert("status".into(), "error".into());
            report.insert("error".into(), json!({"kind": f.kind, "message": f.message}));
            let _ = writeln!(err, "error: {}", f.message);
            (report, f.exit)
        }
    };
    let report = Value::Object(report);
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&report).unwrap() + "\n",
        Format::Text => render_text(&report),
    };
    let _ = out.write_all(text.as_bytes());
    code
}

fn command_names(c: &Command) -> (&'static str, &str) {
    match c {
        Command::Validate { polytope } => ("validate", polytope),
        Command::Vertices { polytope, .. } => ("vertices", polytope),
        Command::Primitives { polytope } => ("primitives", polytope),
        Command::Presentation { polytope, .. } => ("presentation", polytope),
        Command::Seidel { polytope, .. } => ("seidel", polytope),
        Command::Mul { polytope, .. } => ("mul", polytope),
        Command::Invert { polytope, .. } => ("invert", polytope),
        Command::Betti { polytope, .. } => ("betti", polytope),
        Command::PsiCheck { polytope } => ("psi-check", polytope),
        Command::Uniruled { polytope, .. } => ("uniruled", polytope),
        Command::Selfcheck { polytope } => ("selfcheck", polytope),
    }
}

fn dispatch(c: &Command) -> Outcome {
    let (name, arg) = command_names(c);
    let file = PolytopeFile::load(arg)?;
    let mut r = header(name, Some(&file.name));
    match c {
        Command::Validate { .. } => return validate(&file, r),
        Command::Vertices { xi, .. } => vertices(&delzant(&file)?, xi.as_deref(), &mut r)?,
        Command::Primitives { .. } => primitives(&delzant(&file)?, &mut r)?,
        Command::Presentation { ring, .. } => presentation(&delzant(&file)?, ring, &mut r)?,
        Command::Seidel { facet, combo, .. } => {
            let ring = QhRing::build(&delzant(&file)?, Space::L, Flavor::Quantum)?;
            let s = match (facet, combo) {
                (Some(j), _) => {
                    let j = one_based(*j, ring.num_facets())?;
                    r.insert("facet".into(), json!(j + 1));
                    ring.seidel_facet(j)?
                }
                (None, Some(c)) => {
                    let c = parse_ints(c, "--combo")?;
                    r.insert("combo".into(), json!(c));
                    ring.seidel_composite(&c)?
                }
                (None, None) => unreachable!("clap requires one of them"),
            };
            seidel_entries(&ring, &s, &mut r);
        }
        Command::Mul { a, b, ring: args, .. } => {
            let ring = build(&delzant(&file)?, args)?;
            let (ea, eb) = (ElementExpr::parse(a)?, ElementExpr::parse(b)?);
            let (xa, xb) = (ea.evaluate(&ring)?, eb.evaluate(&ring)?);
            ring_entries(&ring, &mut r);
            r.insert("a".into(), json!(ring.render(&xa)));
            r.insert("b".into(), json!(ring.render(&xb)));
            r.insert("product".into(), json!(ring.render(&ring.multiply(&xa, &xb))));
        }
        Command::Invert { a, ring: args, .. } => {
            let ring = build(&delzant(&file)?, args)?;
            let x = ElementExpr::parse(a)?.evaluate(&ring)?;
            ring_entries(&ring, &mut r);
            r.insert("element".into(), json!(ring.render(&x)));
            let inv = ring.invert(&x)?;
            r.insert("inverse".into(), json!(ring.render(&inv)));
            r.insert("verified".into(), json!(ring.multiply(&x, &inv) == ring.unit()));
        }
        Command::Betti { xi, .. } => {
            let p = delzant(&file)?;
            let xi = xi.as_deref().map(|s| parse_xi(s, p.dim())).transpose()?;
            let rep = betti_crosscheck(&p, xi.as_deref())?;
            r.insert("xi".into(), json!(rep.xi.iter().map(ToString::to_string).collect::<Vec<_>>()));
            r.insert("betti".into(), json!(rep.betti));
            r.insert("hilbert_l".into(), json!(rep.hilbert_l));
            r.insert("hilbert_m".into(), json!(rep.hilbert_m));
            r.insert("crosscheck".into(), json!("pass"));
        }
        Command::PsiCheck { .. } => {
            let p = delzant(&file)?;
            let pl = Presentation::new(&p, Space::L, Flavor::Quantum)?;
            let pm = Presentation::new(&p, Space::M, Flavor::Quantum)?;
            let pass = verify_psi(&pl, &pm);
            r.insert("ideal_l".into(), json!(render_ideal(&pl)?));
            r.insert("ideal_m".into(), json!(render_ideal(&pm)?));
            r.insert("pass".into(), json!(pass));
            return Ok((r, if pass { 0 } else { 1 }));
        }
        Command::Uniruled { flavor, .. } => {
            let ring = QhRing::build(&delzant(&file)?, Space::L, (*flavor).into())?;
            let cert = ring.uniruled_certificate();
            ring_entries(&ring, &mut r);
            r.insert("witness_facet".into(), json!(cert.witness_facet + 1));
            r.insert("witness".into(), json!(ring.render(&cert.witness)));
            r.insert(
                "inverse".into(),
                cert.inverse.as_ref().map_or(Value::Null, |i| json!(ring.render(i))),
            );
            r.insert(
                "fundamental_coefficient".into(),
                json!(cert.fundamental_coefficient.exponents().collect::<Vec<_>>()),
            );
            let uniruled = cert.verdict == Verdict::Uniruled;
            r.insert("verdict".into(), json!(if uniruled { "uniruled" } else { "inconclusive" }));
            return Ok((r, if uniruled { 0 } else { 1 }));
        }
        Command::Selfcheck { .. } => return Ok(selfcheck(&file, r)),
    }
    Ok((r, 0))
}

fn delzant(file: &PolytopeFile) -> Result<DelzantPolytope, Failure> {
    Ok(DelzantPolytope::new(file.polytope.clone())?)
}

fn build(p: &DelzantPolytope, args: &RingArgs) -> Result<QhRing, Failure> {
    Ok(QhRing::build(p, args.space.into(), args.flavor.into())?)
}

fn one_based(j: usize, d: usize) -> Result<usize, Failure> {
    if j == 0 || j > d {
        return Err(Failure::usage("UsageError", format!("facet {j} out of range 1..{d}")));
    }
    Ok(j - 1)
}

fn parse_ints(s: &str, flag: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::usage("UsageError", format!("{flag}: expected comma-separated integers, got {s:?}")))
}

fn parse_xi(s: &str, dim: usize) -> Result<Vec<BigInt>, Failure> {
    let xi: Vec<BigInt> = s
        .split(',')
        .map(|x| x.trim().parse::<BigInt>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::usage("UsageError", format!("--xi: expected comma-separated integers, got {s:?}")))?;
    if xi.len() != dim {
        return Err(Failure::usage("UsageError", format!("--xi: expected {dim} entries, got {}", xi.len())));
    }
    Ok(xi)
}

fn rat_str(r: &Rat) -> String {
    r.to_string()
}

fn facet_list(file: &PolytopeFile) -> Value {
    let p = &file.polytope;
    json!(p
        .declared_facets()
        .iter()
        .map(|f| json!({
            "normal": f.normal.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "offset": offset_pi(&f.offset),
        }))
        .collect::<Vec<_>>())
}

fn validate(file: &PolytopeFile, mut r: Map<String, Value>) -> Outcome {
    let report = validate_delzant(&file.polytope);
    r.insert("dim".into(), json!(file.polytope.dim()));
    r.insert("convention".into(), json!(convention_name(file.polytope.convention())));
    r.insert("facets".into(), facet_list(file));
    r.insert("vertices".into(), json!(report.vertices.len()));
    r.insert(
        "failures".into(),
        json!(report
            .failures
            .iter()
            .map(|f| json!({"kind": f.code(), "message": f.to_string()}))
            .collect::<Vec<_>>()),
    );
    let passed = report.passed();
    r.insert("status".into(), json!(if passed { "delzant" } else { "rejected" }));
    Ok((r, if passed { 0 } else { 1 }))
}

fn vertices(p: &DelzantPolytope, xi: Option<&str>, r: &mut Map<String, Value>) -> Result<(), Failure> {
    let xi = match xi {
        Some(s) => parse_xi(s, p.dim())?,
        None => p.generic_xi(),
    };
    let mut list = Vec::new();
    for (k, v) in p.vertices().iter().enumerate() {
        list.push(json!({
            "coords": v.coords.iter().map(rat_str).collect::<Vec<_>>(),
            "tight": v.tight.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "edges": v.edge_dirs.iter().map(|w| w.iter().map(ToString::to_string).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "morse_index": p.morse_index(k, &xi)?,
        }));
    }
    r.insert("xi".into(), json!(xi.iter().map(ToString::to_string).collect::<Vec<_>>()));
    r.insert("vertices".into(), json!(list));
    Ok(())
}

fn primitives(p: &DelzantPolytope, r: &mut Map<String, Value>) -> Result<(), Failure> {
    let rels = p.primitive_relations()?;
    let mut list = Vec::new();
    for pc in &rels {
        list.push(json!({
            "indices": pc.indices.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "batyrev": pc.batyrev.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "quantum_degree": pc.quantum_degree()?,
        }));
    }
    r.insert("collections".into(), json!(list));
    r.insert("min_quantum_degree".into(), json!(min_quantum_degree(&rels)?));
    Ok(())
}

fn render_ideal(pres: &Presentation) -> Result<Vec<String>, Failure> {
    Ok(pres.ideal()?.generators().iter().map(|g| pres.render_relation(g)).collect())
}

fn ring_entries(ring: &QhRing, r: &mut Map<String, Value>) {
    r.insert("space".into(), json!(ring.space().fundamental_class()));
    r.insert(
        "flavor".into(),
        json!(match ring.flavor() {
            Flavor::Classical => "classical",
            Flavor::Quantum => "quantum",
        }),
    );
}

fn presentation(p: &DelzantPolytope, args: &RingArgs, r: &mut Map<String, Value>) -> Result<(), Failure> {
    let ring = build(p, args)?;
    let pres = ring.presentation();
    ring_entries(&ring, r);
    r.insert("grading_unit".into(), json!(pres.grading_unit));
    r.insert(
        "generators".into(),
        json!(pres.generators.iter().map(|g| json!({"name": g.name, "cod": g.cod})).collect::<Vec<_>>()),
    );
    let rels = |v: &[_]| v.iter().map(|f| pres.render_relation(f)).collect::<Vec<_>>();
    r.insert("linear_relations".into(), json!(rels(&pres.linear_relations)));
    r.insert("sr_relations".into(), json!(rels(&pres.sr_relations)));
    let gb = ring.quotient().homogeneous_gb();
    r.insert("ideal".into(), json!(rels(gb.generators())));
    let d = ring.num_facets();
    let reduced: Vec<String> = gb
        .generators()
        .iter()
        .filter(|g| g.leading().is_some_and(|m| m.x_degree() > 1 || m.tdeg() > 0))
        .map(|g| ring.render_poly(g))
        .collect();
    r.insert("reduced_ideal".into(), json!(reduced));
    r.insert(
        "generator_normal_forms".into(),
        json!((0..d)
            .map(|j| json!({
                "generator": pres.generators[j].name,
                "normal_form": ring.render(&ring.quotient().reduce_term(&Monomial::var(d, j), 0)),
            }))
            .collect::<Vec<_>>()),
    );
    r.insert("rank".into(), json!(ring.rank()));
    r.insert("hilbert_function".into(), json!(ring.hilbert_function()));
    r.insert(
        "standard_basis".into(),
        json!(ring
            .quotient()
            .standard_basis()
            .iter()
            .map(|m| ring.render(&QHElement::term(m.clone(), 0)))
            .collect::<Vec<_>>()),
    );
    Ok(())
}

fn seidel_entries(ring: &QhRing, s: &SeidelElement, r: &mut Map<String, Value>) {
    r.insert("element".into(), json!(ring.render(&s.element)));
    r.insert("inverse".into(), json!(ring.render(&s.inverse)));
}

struct Check {
    name: &'static str,
    result: Result<String, String>,
    ms: u128,
}

fn selfcheck(file: &PolytopeFile, mut r: Map<String, Value>) -> (Map<String, Value>, i32) {
    let mut checks: Vec<Check> = Vec::new();
    let mut timed = |name: &'static str, f: &mut dyn FnMut() -> Result<String, String>| {
        let t = Instant::now();
        let result = f();
        let ok = result.is_ok();
        checks.push(Check {
            name,
            result,
            ms: t.elapsed().as_millis(),
        });
        ok
    };

    let mut polytope = None;
    timed("delzant", &mut || {
        let p = DelzantPolytope::new(file.polytope.clone()).map_err(|e| e.to_string())?;
        let n = p.vertices().len();
        polytope = Some(p);
        Ok(format!("{n} simple unimodular vertices"))
    });
    let names = ["fano_degrees", "betti_crosscheck", "seidel_relations", "psi", "uniruled"];
    match polytope {
        None => {
            for name in names {
                checks.push(Check {
                    name,
                    result: Err("skipped".into()),
                    ms: 0,
                });
            }
        }
        Some(p) => {
            let mut ring = None;
            timed("fano_degrees", &mut || {
                let rels = p.primitive_relations().map_err(|e| e.to_string())?;
                let m = min_quantum_degree(&rels).map_err(|e| e.to_string())?.unwrap_or(0);
                if m < 2 {
                    return Err(format!("minimal quantum degree {m} < 2"));
                }
                ring = Some(QhRing::build(&p, Space::L, Flavor::Quantum).map_err(|e| e.to_string())?);
                Ok(format!("minimal quantum degree {m}"))
            });
            timed("betti_crosscheck", &mut || {
                betti_crosscheck(&p, None)
                    .map(|rep| format!("betti {:?}", rep.betti))
                    .map_err(|e| e.to_string())
            });
            let ring = ring.as_ref();
            timed("seidel_relations", &mut || {
                let ring = ring.ok_or("no quantum ring")?;
                let bad: Vec<String> = ring
                    .collections()
                    .iter()
                    .filter(|pc| !ring.verify_seidel_relation(pc))
                    .map(|pc| format!("{:?}", pc.indices.iter().map(|i| i + 1).collect::<Vec<_>>()))
                    .collect();
                if bad.is_empty() {
                    Ok(format!("{} relations hold", ring.collections().len()))
                } else {
                    Err(format!("failing collections {}", bad.join(", ")))
                }
            });
            timed("psi", &mut || {
                let pl = Presentation::new(&p, Space::L, Flavor::Quantum).map_err(|e| e.to_string())?;
                let pm = Presentation::new(&p, Space::M, Flavor::Quantum).map_err(|e| e.to_string())?;
                if verify_psi(&pl, &pm) {
                    Ok("ideals agree".into())
                } else {
                    Err("ideals differ".into())
                }
            });
            timed("uniruled", &mut || {
                let ring = ring.ok_or("no quantum ring")?;
                let cert = ring.uniruled_certificate();
                match cert.verdict {
                    Verdict::Uniruled => Ok(format!("witness {}", ring.render(&cert.witness))),
                    Verdict::Inconclusive => Err("inconclusive".into()),
                }
            });
        }
    }
    let all = checks.iter().all(|c| c.result.is_ok());
    r.insert(
        "checks".into(),
        json!(checks
            .iter()
            .map(|c| {
                let (status, detail) = match &c.result {
                    Ok(d) => ("pass", d.as_str()),
                    Err(d) if d == "skipped" => ("skipped", ""),
                    Err(d) => ("fail", d.as_str()),
                };
                json!({"name": c.name, "status": status, "ms": c.ms as u64, "detail": detail})
            })
            .collect::<Vec<_>>()),
    );
    r.insert("status".into(), json!(if all { "pass" } else { "fail" }));
    (r, if all { 0 } else { 1 })
}
