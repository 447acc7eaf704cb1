//! JSON-in, JSON-out command-line front end.
//!
//! Every command reads one problem file and prints one report with sorted
//! keys. Exit codes: 0 when the answer is affirmative (or a group/list was
//! computed), 1 when it is negative, 2 on invalid input.

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::algebra::{Elem, EquivariantMap, FiniteBimodule, FiniteRing, RingHom};
use crate::annfunctor::{
    aut_group, build_sigma_from_structure, classify_exhaustive, classify_functors, functor_exists,
    induced_module, is_functor, obstruction, strong_aut, strong_classify, strong_functor_exists,
    AnnFunctorStructure, Classification, ReducedAnnCategory, StructurePair,
};
use crate::cochain::{tuples, CheckReport, Cochain1, Cochain2, Cochain3, Table};
use crate::hochschild::{hoch_cohomology_group, hoch_d, is_hoch_cocycle, HochCochain};
use crate::linalg::AbelianGroupPresentation;
use crate::maclane::{
    coboundary_witness, d2_unchecked, first_cocycles, is_z3_with, second_cohomology,
    third_cohomology, Z3Convention,
};

#[derive(Debug, Parser)]
#[command(
    name = "ringcoh",
    version,
    about = "Mac Lane and Hochschild cohomology of finite rings; Ann-functor classification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theory {
    Maclane,
    Hochschild,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that `cochain` is a cocycle (Mac Lane degree 2/3 or Hochschild degree 1–3).
    CheckCocycle {
        file: PathBuf,
        #[arg(long, value_enum)]
        theory: Option<Theory>,
        #[arg(long)]
        degree: Option<usize>,
        /// Also require λ and ρ to vanish when an argument is zero.
        #[arg(long)]
        normalize_lambda_rho: bool,
    },
    /// Invariant factors and representatives of a cohomology group of (ring, module).
    Cohomology {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "maclane")]
        theory: Theory,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        normalize_lambda_rho: bool,
    },
    /// The obstruction k = p*h′ − q_*h and whether it is a coboundary.
    Obstruction { file: PathBuf },
    /// Whether an Ann-functor of type (p, q) exists, with a witness.
    Exists {
        file: PathBuf,
        /// Check the given `structure` instead of solving.
        #[arg(long)]
        verify: bool,
    },
    /// One Ann-functor per congruence class.
    Classify {
        file: PathBuf,
        /// Also group every structure by pairwise congruence (tiny carriers only).
        #[arg(long)]
        exhaustive: bool,
    },
    /// The automorphism group of an Ann-functor of type (p, q).
    Aut { file: PathBuf },
    /// Whether a strong Ann-functor of type (p, 0) exists.
    StrongExists { file: PathBuf },
    /// One strong Ann-functor per congruence class, and their automorphism group.
    StrongClassify { file: PathBuf },
    /// σ computed from a structure pair (ξ, η).
    SigmaFromStructure { file: PathBuf },
}

/// Outcome of one command: exit code and report.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
}

#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Result<T> = std::result::Result<T, InputError>;

fn bad<T>(msg: impl Into<String>) -> Result<T> {
    Err(InputError(msg.into()))
}

// ---------------------------------------------------------------- input

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemFile {
    ring: Option<RingSpec>,
    module: Option<ModuleSpec>,
    cochain: Option<Value>,
    source: Option<CategorySpec>,
    target: Option<CategorySpec>,
    p: Option<HomSpec>,
    q: Option<HomSpec>,
    structure: Option<Value>,
    xi: Option<Value>,
    eta: Option<Value>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum RingSpec {
    Preset(String),
    Tables {
        order: usize,
        add: Vec<Vec<Elem>>,
        mul: Vec<Vec<Elem>>,
        zero: Elem,
        one: Elem,
    },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum ModuleSpec {
    Name(String),
    Preset {
        preset: String,
        modulus: Option<usize>,
    },
    Tables {
        invariant_factors: Vec<u64>,
        left: Vec<Vec<Value>>,
        right: Vec<Vec<Value>>,
    },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct CategorySpec {
    ring: RingSpec,
    module: ModuleSpec,
    h: Option<Value>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum HomSpec {
    Name(String),
    Table(Vec<Elem>),
}

fn ring_of(desc: &RingSpec) -> Result<FiniteRing> {
    match desc {
        RingSpec::Preset(name) => FiniteRing::preset(name)
            .ok_or_else(|| InputError(format!("unknown ring preset {name:?}"))),
        RingSpec::Tables {
            order,
            add,
            mul,
            zero,
            one,
        } => Ok(FiniteRing::new(*order, add, mul, *zero, *one)?),
    }
}

fn module_of(desc: &ModuleSpec, ring: &FiniteRing) -> Result<FiniteBimodule> {
    match desc {
        ModuleSpec::Name(name) => preset_module(name, None, ring),
        ModuleSpec::Preset { preset, modulus } => preset_module(preset, *modulus, ring),
        ModuleSpec::Tables {
            invariant_factors,
            left,
            right,
        } => {
            let size: u64 = invariant_factors.iter().product();
            let index = |v: &Value| coords_index(v, invariant_factors);
            let table = |t: &Vec<Vec<Value>>| -> Result<Vec<Vec<Elem>>> {
                if t.iter().any(|row| row.len() as u64 != size) {
                    return bad(format!("action tables must have {size} columns"));
                }
                t.iter()
                    .map(|row| row.iter().map(index).collect())
                    .collect()
            };
            Ok(FiniteBimodule::new(
                ring.clone(),
                invariant_factors.clone(),
                &table(left)?,
                &table(right)?,
            )?)
        }
    }
}

fn preset_module(name: &str, modulus: Option<usize>, ring: &FiniteRing) -> Result<FiniteBimodule> {
    match (name, modulus) {
        ("regular", None) => Ok(FiniteBimodule::regular(ring)),
        ("trivial", None) => Ok(FiniteBimodule::zero_module(ring)),
        ("reduction", Some(k)) => {
            let n = ring.order();
            if *ring != FiniteRing::cyclic(n) {
                return bad("the reduction module needs a cyclic ring Z<n>");
            }
            let p = RingHom::reduction(n, k)?;
            Ok(FiniteBimodule::regular(p.target()).pullback(&p)?)
        }
        ("reduction", None) => bad("the reduction module needs a \"modulus\""),
        _ => bad(format!("unknown module preset {name:?}")),
    }
}

// Module element index from a coordinate tuple (or a bare residue for cyclic modules).
fn coords_index(v: &Value, factors: &[u64]) -> Result<Elem> {
    let coords: Vec<i64> = match v {
        Value::Number(_) if factors.len() == 1 => vec![as_i64(v)?],
        Value::Number(_) if factors.is_empty() && as_i64(v)? == 0 => Vec::new(),
        Value::Array(items) => items.iter().map(as_i64).collect::<Result<_>>()?,
        _ => return bad(format!("expected a coordinate tuple, found {v}")),
    };
    if coords.len() != factors.len() {
        return bad(format!(
            "coordinate tuple {v} must have {} entries",
            factors.len()
        ));
    }
    let mut idx = 0usize;
    for (&c, &d) in coords.iter().zip(factors) {
        if c < 0 || c as u64 >= d {
            return bad(format!("coordinate {c} out of range for Z/{d}"));
        }
        idx = idx * d as usize + c as usize;
    }
    Ok(idx)
}

fn as_i64(v: &Value) -> Result<i64> {
    v.as_i64()
        .ok_or_else(|| InputError(format!("expected an integer, found {v}")))
}

fn table_of(v: &Value, arity: usize, m: &FiniteBimodule, what: &str) -> Result<Table> {
    let n = m.ring().order();
    let mut values = Vec::with_capacity(n.pow(arity as u32));
    fn walk(
        v: &Value,
        depth: usize,
        n: usize,
        m: &FiniteBimodule,
        what: &str,
        out: &mut Vec<Elem>,
    ) -> Result<()> {
        if depth == 0 {
            out.push(coords_index(v, m.invariant_factors())?);
            return Ok(());
        }
        match v {
            Value::Array(items) if items.len() == n => items
                .iter()
                .try_for_each(|x| walk(x, depth - 1, n, m, what, out)),
            _ => bad(format!("{what} must be nested arrays of length {n}")),
        }
    }
    walk(v, arity, n, m, what, &mut values)?;
    Ok(Table::from_values(arity, n, values).expect("walk produces n^arity values"))
}

fn component(
    obj: &Map<String, Value>,
    key: &str,
    arity: usize,
    m: &FiniteBimodule,
) -> Result<Table> {
    match obj.get(key) {
        None => Ok(Table::zeros(arity, m.ring().order())),
        Some(v) => table_of(v, arity, m, key),
    }
}

fn object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| InputError(format!("{what} must be a JSON object")))
}

fn cochain3_of(v: &Value, m: &FiniteBimodule) -> Result<Cochain3> {
    let o = object(v, "a 3-cochain")?;
    check_keys(o, &["sigma", "alpha", "lambda", "rho", "theory", "degree"])?;
    Ok(Cochain3 {
        sigma: component(o, "sigma", 4, m)?,
        alpha: component(o, "alpha", 3, m)?,
        lambda: component(o, "lambda", 3, m)?,
        rho: component(o, "rho", 3, m)?,
    })
}

fn cochain2_of(v: &Value, m: &FiniteBimodule) -> Result<Cochain2> {
    let o = object(v, "a 2-cochain")?;
    check_keys(o, &["mu", "nu", "theory", "degree"])?;
    Ok(Cochain2 {
        mu: component(o, "mu", 2, m)?,
        nu: component(o, "nu", 2, m)?,
    })
}

fn check_keys(o: &Map<String, Value>, allowed: &[&str]) -> Result<()> {
    match o.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => bad(format!("unexpected key {k:?}")),
        None => Ok(()),
    }
}

struct Setup {
    p: RingHom,
    q: EquivariantMap,
    source: ReducedAnnCategory,
    target: ReducedAnnCategory,
}

impl ProblemFile {
    fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| InputError(format!("problem file: {e}")))
    }

    fn ring(&self) -> Result<FiniteRing> {
        ring_of(
            self.ring
                .as_ref()
                .ok_or_else(|| InputError("missing \"ring\"".into()))?,
        )
    }

    fn module(&self) -> Result<FiniteBimodule> {
        let ring = self.ring()?;
        module_of(
            self.module
                .as_ref()
                .unwrap_or(&ModuleSpec::Name("regular".into())),
            &ring,
        )
    }

    fn category(&self, desc: Option<&CategorySpec>) -> Result<ReducedAnnCategory> {
        let (module, h) = match desc {
            Some(c) => (module_of(&c.module, &ring_of(&c.ring)?)?, c.h.as_ref()),
            None => (self.module()?, None),
        };
        match h {
            None => Ok(ReducedAnnCategory::trivial(module)),
            Some(v) => {
                let h = cochain3_of(v, &module)?;
                Ok(ReducedAnnCategory::new(module, h)?)
            }
        }
    }

    fn hom(&self, source: &ReducedAnnCategory, target: &ReducedAnnCategory) -> Result<RingHom> {
        let (r, r2) = (source.ring().clone(), target.ring().clone());
        match self.p.as_ref().unwrap_or(&HomSpec::Name("identity".into())) {
            HomSpec::Name(n) if n == "identity" => {
                if r != r2 {
                    return bad("p = identity needs equal source and target rings");
                }
                Ok(RingHom::identity(&r))
            }
            HomSpec::Name(n) if n == "reduction" => {
                if r != FiniteRing::cyclic(r.order()) || r2 != FiniteRing::cyclic(r2.order()) {
                    return bad("p = reduction needs cyclic rings");
                }
                Ok(RingHom::reduction(r.order(), r2.order())?)
            }
            HomSpec::Name(n) => bad(format!("unknown ring map {n:?}")),
            HomSpec::Table(t) => Ok(RingHom::new(r, r2, t.clone())?),
        }
    }

    fn setup(&self, with_q: bool) -> Result<Setup> {
        let source = self.category(self.source.as_ref())?;
        let target = match &self.target {
            Some(t) => self.category(Some(t))?,
            None => source.clone(),
        };
        let p = self.hom(&source, &target)?;
        let (m, m2) = (source.module().clone(), target.module().clone());
        let q = match (with_q, self.q.as_ref()) {
            (false, _) => EquivariantMap::zero(p.clone(), m, m2)?,
            (true, None) => {
                if m != m2 || p != RingHom::identity(source.ring()) {
                    return bad("\"q\" is required unless p is the identity and the modules agree");
                }
                EquivariantMap::identity(&m)
            }
            (true, Some(HomSpec::Name(n))) if n == "identity" => {
                if m != m2 || p != RingHom::identity(source.ring()) {
                    return bad("q = identity needs p = identity and equal modules");
                }
                EquivariantMap::identity(&m)
            }
            (true, Some(HomSpec::Name(n))) if n == "zero" => {
                EquivariantMap::zero(p.clone(), m, m2)?
            }
            (true, Some(HomSpec::Name(n))) => return bad(format!("unknown module map {n:?}")),
            (true, Some(HomSpec::Table(t))) => EquivariantMap::new(p.clone(), m, m2, t.clone())?,
        };
        Ok(Setup {
            p,
            q,
            source,
            target,
        })
    }
}

// --------------------------------------------------------------- output

fn table_json(t: &Table, m: &FiniteBimodule) -> Value {
    let n = t.ring_order();
    fn build(t: &Table, m: &FiniteBimodule, prefix: &mut Vec<Elem>, n: usize) -> Value {
        if prefix.len() == t.arity() {
            return json!(m.coords(t.get(prefix)));
        }
        Value::Array(
            (0..n)
                .map(|x| {
                    prefix.push(x);
                    let v = build(t, m, prefix, n);
                    prefix.pop();
                    v
                })
                .collect(),
        )
    }
    build(t, m, &mut Vec::new(), n)
}

fn cochain1_json(u: &Cochain1, m: &FiniteBimodule) -> Value {
    json!({ "u": table_json(&u.u, m) })
}

fn cochain2_json(g: &Cochain2, m: &FiniteBimodule) -> Value {
    json!({ "mu": table_json(&g.mu, m), "nu": table_json(&g.nu, m) })
}

fn cochain3_json(h: &Cochain3, m: &FiniteBimodule) -> Value {
    json!({
        "sigma": table_json(&h.sigma, m),
        "alpha": table_json(&h.alpha, m),
        "lambda": table_json(&h.lambda, m),
        "rho": table_json(&h.rho, m),
    })
}

fn hoch_json(f: &HochCochain, m: &FiniteBimodule) -> Value {
    json!({ "theory": "hochschild", "degree": f.degree(), "table": table_json(f.table(), m) })
}

fn group_json(g: &AbelianGroupPresentation) -> Value {
    json!({ "invariant_factors": g.torsion, "order": g.order().to_string() })
}

fn conventions(convention: Z3Convention) -> Value {
    json!({
        "normalized_cochains": true,
        "z3_relations": "M1-M10 (M8 sign-corrected)",
        "coboundary_lambda": "-nu(x,y) - nu(x,z) + nu(x,y+z) - x*mu(y,z) + mu(xy,xz)",
        "coboundary_rho": "nu(x,z) + nu(y,z) - nu(x+y,z) - mu(xz,yz) + mu(x,y)*z",
        "lambda_rho_normalized": convention.normalize_lambda_rho,
    })
}

fn report(command: &str, convention: Z3Convention, fields: Value) -> Value {
    let mut out = match fields {
        Value::Object(o) => o,
        _ => unreachable!("reports are objects"),
    };
    out.insert("command".into(), json!(command));
    out.insert("conventions".into(), conventions(convention));
    Value::Object(out)
}

fn failures_json(r: &CheckReport) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

fn code(affirmative: bool) -> i32 {
    if affirmative {
        0
    } else {
        1
    }
}

fn order_string(o: &BigUint) -> String {
    o.to_string()
}

// ------------------------------------------------------------- commands

/// Runs a parsed command against the problem text.
pub fn execute(command: &Command, problem: &str) -> std::result::Result<Outcome, InputError> {
    let pf = ProblemFile::parse(problem)?;
    let plain = Z3Convention::default();
    match command {
        Command::CheckCocycle {
            theory,
            degree,
            normalize_lambda_rho,
            ..
        } => {
            let convention = Z3Convention {
                normalize_lambda_rho: *normalize_lambda_rho,
            };
            let m = pf.module()?;
            let v = pf
                .cochain
                .as_ref()
                .ok_or_else(|| InputError("missing \"cochain\"".into()))?;
            let o = object(v, "cochain")?;
            let tagged = o.get("theory").and_then(Value::as_str);
            let theory = match (theory, tagged) {
                (Some(t), _) => *t,
                (None, Some("hochschild")) => Theory::Hochschild,
                (None, Some("maclane")) | (None, None) => Theory::Maclane,
                (None, Some(t)) => return bad(format!("unknown theory {t:?}")),
            };
            let degree = match (degree, o.get("degree").and_then(Value::as_u64)) {
                (Some(d), _) => *d,
                (None, Some(d)) => d as usize,
                (None, None) if o.contains_key("mu") || o.contains_key("nu") => 2,
                (None, None) => 3,
            };
            let (cocycle, failures) = match (theory, degree) {
                (Theory::Maclane, 3) => {
                    let r = is_z3_with(&cochain3_of(v, &m)?, &m, convention);
                    (r.passed(), failures_json(&r))
                }
                (Theory::Maclane, 2) => {
                    let g = cochain2_of(v, &m)?;
                    let r = z2_report(&g, &m);
                    (r.passed(), failures_json(&r))
                }
                (Theory::Hochschild, 1..=3) => {
                    check_keys(o, &["theory", "degree", "table"])?;
                    let t = o
                        .get("table")
                        .ok_or_else(|| InputError("missing \"table\"".into()))?;
                    let f = HochCochain::new(table_of(t, degree, &m, "table")?, &m)?;
                    let ok = is_hoch_cocycle(&f, &m);
                    let mut r = CheckReport::default();
                    if !ok {
                        let name = if degree == 3 { "M1" } else { "differential" };
                        let w = first_nonzero_witness(&f, &m);
                        r.push(name, w);
                    }
                    (ok, failures_json(&r))
                }
                _ => {
                    return bad(format!(
                        "check-cocycle does not support degree {degree} for this theory"
                    ))
                }
            };
            let theory_name = if theory == Theory::Maclane {
                "maclane"
            } else {
                "hochschild"
            };
            Ok(Outcome {
                code: code(cocycle),
                report: report(
                    "check-cocycle",
                    convention,
                    json!({ "theory": theory_name, "degree": degree, "cocycle": cocycle, "failures": failures }),
                ),
            })
        }
        Command::Cohomology {
            theory,
            degree,
            normalize_lambda_rho,
            ..
        } => {
            let convention = Z3Convention {
                normalize_lambda_rho: *normalize_lambda_rho,
            };
            let m = pf.module()?;
            let (group, z, b, reps) = match (theory, degree) {
                (Theory::Maclane, 1) => {
                    let g = first_cocycles(&m);
                    let reps = g
                        .representatives
                        .iter()
                        .map(|u| cochain1_json(u, &m))
                        .collect::<Vec<_>>();
                    (g.presentation, g.cocycles_order, g.coboundaries_order, reps)
                }
                (Theory::Maclane, 2) => {
                    let g = second_cohomology(&m)?;
                    let reps = g
                        .representatives
                        .iter()
                        .map(|c| cochain2_json(c, &m))
                        .collect();
                    (g.presentation, g.cocycles_order, g.coboundaries_order, reps)
                }
                (Theory::Maclane, 3) => {
                    let g = third_cohomology(&m, convention)?;
                    let reps = g
                        .representatives
                        .iter()
                        .map(|c| cochain3_json(c, &m))
                        .collect();
                    (g.presentation, g.cocycles_order, g.coboundaries_order, reps)
                }
                (Theory::Hochschild, 1..=3) => {
                    let g = hoch_cohomology_group(&m, *degree)?;
                    let reps = g.representatives.iter().map(|c| hoch_json(c, &m)).collect();
                    (g.presentation, g.cocycles_order, g.coboundaries_order, reps)
                }
                _ => return bad(format!("degree {degree} is not supported")),
            };
            let theory_name = if *theory == Theory::Maclane {
                "maclane"
            } else {
                "hochschild"
            };
            Ok(Outcome {
                code: 0,
                report: report(
                    "cohomology",
                    convention,
                    json!({
                        "theory": theory_name,
                        "degree": degree,
                        "invariant_factors": group.torsion,
                        "order": group.order().to_string(),
                        "cocycles_order": order_string(&z),
                        "coboundaries_order": order_string(&b),
                        "representatives": reps,
                    }),
                ),
            })
        }
        Command::Obstruction { .. } => {
            let s = pf.setup(true)?;
            let m = induced_module(&s.p, &s.target)?;
            let k = obstruction(&s.p, &s.q, &s.source, &s.target)?;
            let witness = coboundary_witness(&k, &m);
            Ok(Outcome {
                code: code(witness.is_some()),
                report: report(
                    "obstruction",
                    plain,
                    json!({
                        "obstruction": cochain3_json(&k, &m),
                        "class_zero": witness.is_some(),
                        "coboundary_witness": witness.map(|g| cochain2_json(&g, &m)),
                    }),
                ),
            })
        }
        Command::Exists { verify, .. } => {
            let s = pf.setup(true)?;
            let m = induced_module(&s.p, &s.target)?;
            if *verify {
                let v = pf
                    .structure
                    .as_ref()
                    .ok_or_else(|| InputError("--verify needs a \"structure\"".into()))?;
                let g = cochain2_of(v, &m)?;
                let f = AnnFunctorStructure {
                    p: s.p.clone(),
                    q: s.q.clone(),
                    g,
                };
                let r = is_functor(&f, &s.source, &s.target)?;
                return Ok(Outcome {
                    code: code(r.passed()),
                    report: report(
                        "exists",
                        plain,
                        json!({ "verified": r.passed(), "failures": failures_json(&r) }),
                    ),
                });
            }
            let found = functor_exists(&s.p, &s.q, &s.source, &s.target)?;
            Ok(Outcome {
                code: code(found.is_some()),
                report: report(
                    "exists",
                    plain,
                    json!({ "exists": found.is_some(), "witness": found.map(|f| cochain2_json(&f.g, &m)) }),
                ),
            })
        }
        Command::Classify { exhaustive, .. } => {
            let s = pf.setup(true)?;
            let m = induced_module(&s.p, &s.target)?;
            let c = classify_functors(&s.p, &s.q, &s.source, &s.target)?;
            let mut fields = classification_json(&c, |f| cochain2_json(&f.g, &m));
            if *exhaustive {
                let classes = classify_exhaustive(&s.p, &s.q, &s.source, &s.target)?;
                fields["exhaustive_class_count"] = json!(classes.len());
                fields["exhaustive_structure_count"] =
                    json!(classes.iter().map(Vec::len).sum::<usize>());
            }
            Ok(Outcome {
                code: code(!c.representatives.is_empty()),
                report: report("classify", plain, fields),
            })
        }
        Command::Aut { .. } => {
            let s = pf.setup(true)?;
            let m = induced_module(&s.p, &s.target)?;
            let f = match &pf.structure {
                Some(v) => AnnFunctorStructure {
                    p: s.p.clone(),
                    q: s.q.clone(),
                    g: cochain2_of(v, &m)?,
                },
                None => match functor_exists(&s.p, &s.q, &s.source, &s.target)? {
                    Some(f) => f,
                    None => {
                        return Ok(Outcome {
                            code: 1,
                            report: report(
                                "aut",
                                plain,
                                json!({ "exists": false, "invariant_factors": Value::Null }),
                            ),
                        })
                    }
                },
            };
            let r = is_functor(&f, &s.source, &s.target)?;
            if !r.passed() {
                return bad(format!(
                    "structure is not an Ann-functor: {}",
                    failures_json(&r)
                ));
            }
            let g = aut_group(&f, &s.source, &s.target)?;
            Ok(Outcome {
                code: 0,
                report: report(
                    "aut",
                    plain,
                    json!({
                        "exists": true,
                        "invariant_factors": g.presentation.torsion,
                        "order": g.order().to_string(),
                        "representatives": g.representatives.iter().map(|u| cochain1_json(u, &m)).collect::<Vec<_>>(),
                    }),
                ),
            })
        }
        Command::StrongExists { .. } => {
            let s = pf.setup(false)?;
            let m = induced_module(&s.p, &s.target)?;
            let r = strong_functor_exists(&s.p, &s.source, &s.target)?;
            let mut fields = serde_json::to_value(&r)?;
            fields["witness"] = r.witness.as_ref().map_or(
                Value::Null,
                |nu| json!({ "nu": table_json(nu.table(), &m) }),
            );
            Ok(Outcome {
                code: code(r.exists),
                report: report("strong-exists", plain, fields),
            })
        }
        Command::StrongClassify { .. } => {
            let s = pf.setup(false)?;
            let m = induced_module(&s.p, &s.target)?;
            let c = strong_classify(&s.p, &s.source, &s.target)?;
            let mut fields = classification_json(&c, |f| json!({ "nu": table_json(&f.g.nu, &m) }));
            let aut = strong_aut(&s.p, &s.target)?;
            fields["aut"] = group_json(&aut.presentation);
            Ok(Outcome {
                code: code(!c.representatives.is_empty()),
                report: report("strong-classify", plain, fields),
            })
        }
        Command::SigmaFromStructure { .. } => {
            let m = pf.module()?;
            let xi = pf
                .xi
                .as_ref()
                .ok_or_else(|| InputError("missing \"xi\"".into()))?;
            let eta = pf
                .eta
                .as_ref()
                .ok_or_else(|| InputError("missing \"eta\"".into()))?;
            let s = StructurePair {
                xi: table_of(xi, 3, &m, "xi")?,
                eta: table_of(eta, 2, &m, "eta")?,
            };
            let sigma = build_sigma_from_structure(&s, &m);
            Ok(Outcome {
                code: 0,
                report: report(
                    "sigma-from-structure",
                    plain,
                    json!({ "sigma": table_json(&sigma, &m) }),
                ),
            })
        }
    }
}

fn classification_json(c: &Classification, rep: impl Fn(&AnnFunctorStructure) -> Value) -> Value {
    json!({
        "group": group_json(&c.group),
        "class_count": c.representatives.len(),
        "representatives": c.representatives.iter().map(rep).collect::<Vec<_>>(),
    })
}

// First nonzero entry of each component of d2(g), named after the component.
fn z2_report(g: &Cochain2, m: &FiniteBimodule) -> CheckReport {
    let mut r = CheckReport::default();
    if let Some((component, args)) = g.normalization_violation(m.ring().zero()) {
        r.push(&format!("{component}-normalization"), args);
        return r;
    }
    let h = d2_unchecked(g, m);
    for (t, name) in h.tables().iter().zip(["sigma", "alpha", "lambda", "rho"]) {
        if let Some(w) = tuples(t.arity(), t.ring_order()).find(|a| t.get(a) != 0) {
            r.push(&format!("d2-{name}"), w);
        }
    }
    r
}

fn first_nonzero_witness(f: &HochCochain, m: &FiniteBimodule) -> Vec<Elem> {
    match hoch_d(f, m) {
        Ok(d) => tuples(d.degree(), d.table().ring_order())
            .find(|a| d.table().get(a) != 0)
            .unwrap_or_default(),
        Err(_) => {
            let h = crate::hochschild::embed_to_maclane(f).expect("degree 3");
            let r = is_z3_with(&h, m, Z3Convention::default());
            r.failures
                .into_iter()
                .find(|x| x.relation == "M1")
                .map(|x| x.witness)
                .unwrap_or_default()
        }
    }
}

/// Parses `args`, runs the command and renders the report; returns the exit code and output text.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    let path = command_file(&cli.command);
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        match std::io::Read::read_to_string(&mut std::io::stdin(), &mut s) {
            Ok(_) => Ok(s),
            Err(e) => Err(e),
        }
    } else {
        fs::read_to_string(path)
    };
    let outcome = match text
        .map_err(InputError::from)
        .and_then(|t| execute(&cli.command, &t))
    {
        Ok(o) => o,
        Err(InputError(msg)) => Outcome {
            code: 2,
            report: json!({ "error": msg }),
        },
    };
    let mut out = serde_json::to_string_pretty(&outcome.report).expect("reports serialize");
    out.push('\n');
    (outcome.code, out)
}

fn command_file(c: &Command) -> &PathBuf {
    match c {
        Command::CheckCocycle { file, .. }
        | Command::Cohomology { file, .. }
        | Command::Obstruction { file }
        | Command::Exists { file, .. }
        | Command::Classify { file, .. }
        | Command::Aut { file }
        | Command::StrongExists { file }
        | Command::StrongClassify { file }
        | Command::SigmaFromStructure { file } => file,
    }
}
