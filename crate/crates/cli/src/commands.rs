use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::{anyhow, Context};
use mkls_core::explore::{explore, ExploreConfig};
use mkls_core::fixtures::freeze;
use mkls_core::formulas::*;
use mkls_core::matroid::{from_elems, size, to_vec};
use mkls_core::report::render_table;
use mkls_core::verify::verify;
use mkls_core::{
    inv_z_y, Flavor, GradedRep, IntPolynomial, Matroid, MatroidSpec, QContext, Ranges, SchurVector, VerifyConfig,
    THEOREM_IDS,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cache::cached_invariants;
use crate::{Cli, Command, Outcome, SpecSource, UsageError, SIZE_CAP};

macro_rules! usage {
    ($($arg:tt)*) => {
        return Err(UsageError(anyhow!($($arg)*)))
    };
}

pub fn run(cli: &Cli) -> Result<Outcome, UsageError> {
    match &cli.command {
        Command::Compute { source } => compute(cli, source),
        Command::Formula { id, params } => formula(cli, id, params),
        Command::Verify {
            ids,
            range,
            seed,
            samples,
            freeze,
        } => match freeze {
            Some(path) => write_fixtures(path),
            None => verify_cmd(cli, ids, range, *seed, *samples),
        },
        Command::Relax { source, hyperplane } => relax(cli, source, hyperplane.as_deref()),
        Command::Explore { seed, count, range } => explore_cmd(cli, *seed, *count, range),
    }
}

fn canonical<T: Serialize>(v: &T) -> String {
    let value = serde_json::to_value(v).expect("serializable");
    serde_json::to_string_pretty(&value).expect("value serializes")
}

fn check_size(cli: &Cli, n: u64, what: &str) -> Result<(), UsageError> {
    if n > u64::from(SIZE_CAP) && !cli.unsafe_large {
        return Err(anyhow!("{what} {n} exceeds the cap of {SIZE_CAP}; pass --unsafe-large to override").into());
    }
    Ok(())
}

fn load_spec(cli: &Cli, source: &SpecSource) -> Result<(MatroidSpec, Matroid), UsageError> {
    let text = match (&source.spec, &source.inline) {
        (Some(path), _) => std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?,
        (None, Some(s)) => s.clone(),
        (None, None) => usage!("one of --spec or --inline is required"),
    };
    let spec: MatroidSpec = serde_json::from_str(&text).context("invalid matroid spec")?;
    if let MatroidSpec::Qniform { n, q, .. } = spec {
        let points = (0..n as u32).try_fold(0u64, |acc, i| q.checked_pow(i).and_then(|p| acc.checked_add(p)));
        check_size(cli, points.unwrap_or(u64::MAX), "ground set size")?;
    }
    let m = spec.build().context("invalid matroid spec")?;
    check_size(cli, m.ground_size() as u64, "ground set size")?;
    Ok((spec, m))
}

fn compute(cli: &Cli, source: &SpecSource) -> Result<Outcome, UsageError> {
    let (spec, m) = load_spec(cli, source)?;
    let inv = match cached_invariants(&spec, &m) {
        Ok(inv) => inv,
        Err(e) => {
            let text = canonical(&json!({ "matroid": spec, "error": e.to_string() }));
            return Ok(Outcome { text, passed: false });
        }
    };
    let predicates = json!({
        "y_palindromic": inv.y.is_palindromic(m.rank_of_matroid()),
        "y_unimodal": inv.y.is_unimodal(),
        "y_strongly_log_concave": inv.y.is_strongly_log_concave(),
        "z_palindromic": inv.z.is_palindromic(m.rank_of_matroid()),
        "z_unimodal": inv.z.is_unimodal(),
        "z_strongly_log_concave": inv.z.is_strongly_log_concave(),
    });
    let profile = m.paving_profile().ok();
    let value = json!({
        "matroid": spec,
        "ground_size": m.ground_size(),
        "rank": m.rank_of_matroid(),
        "invariants": inv,
        "predicates": predicates,
        "paving_profile": profile,
    });
    let text = if cli.json {
        canonical(&value)
    } else {
        let mut t = String::new();
        let _ = writeln!(t, "ground set {}, rank {}", m.ground_size(), m.rank_of_matroid());
        for (name, p) in [
            ("char_poly", &inv.char_poly),
            ("P", &inv.kl_p),
            ("Q", &inv.inv_kl_q),
            ("Z", &inv.z),
            ("Y", &inv.y),
        ] {
            let _ = writeln!(t, "{name:<10} {p}   {}", serde_json::to_string(p).expect("poly"));
        }
        for (k, v) in predicates.as_object().expect("object") {
            let _ = writeln!(t, "{k:<24} {v}");
        }
        if let Some(p) = &profile {
            let _ = writeln!(t, "stressed hyperplanes by size {:?}", p.lambda);
        }
        t
    };
    Ok(Outcome { text, passed: true })
}

const FORMULA_IDS: [&str; 14] = [
    "equiv_mobius_uniform",
    "equiv_Q_uniform",
    "equiv_Y_uniform",
    "equiv_Y_uniform_irreducible",
    "equiv_Y_uniform_via_definition",
    "equiv_Y_qniform",
    "equiv_char_qniform",
    "equiv_Y_stressed_pair",
    "ordinary_Y_qniform",
    "ordinary_Y_uniform",
    "paving_delta",
    "paving_correction_dim",
    "ordinary_paving_Y",
    "sparse_paving_Y",
];

enum FormulaValue {
    Rep(GradedRep),
    Poly(IntPolynomial),
    Schur(SchurVector),
    /// Big integer as its decimal string.
    Int(String),
}

struct Params(BTreeMap<String, String>);

impl Params {
    fn parse(raw: &[String]) -> Result<Self, UsageError> {
        let mut map = BTreeMap::new();
        for p in raw {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| anyhow!("parameter {p:?} is not name=value"))?;
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(Params(map))
    }

    fn num(&self, name: &str) -> Result<u32, UsageError> {
        let v = self.0.get(name).ok_or_else(|| anyhow!("missing parameter {name}"))?;
        Ok(v.parse().with_context(|| format!("parameter {name}={v} is not a non-negative integer"))?)
    }

    fn q(&self) -> Result<QContext, UsageError> {
        Ok(QContext::new(u64::from(self.num("q")?))?)
    }

    /// `lambda=5:1,6:2` as size to count.
    fn lambda(&self) -> Result<BTreeMap<u32, u32>, UsageError> {
        let Some(v) = self.0.get("lambda") else {
            return Ok(BTreeMap::new());
        };
        let mut out = BTreeMap::new();
        for item in v.split(',').filter(|s| !s.is_empty()) {
            let (h, c) = item.split_once(':').ok_or_else(|| anyhow!("lambda entries are size:count"))?;
            let h: u32 = h.parse().context("lambda size")?;
            let c: u32 = c.parse().context("lambda count")?;
            *out.entry(h).or_insert(0) += c;
        }
        Ok(out)
    }
}

fn evaluate(id: &str, p: &Params) -> Result<FormulaValue, UsageError> {
    use FormulaValue::*;
    let kn = || -> Result<(u32, u32), UsageError> { Ok((p.num("k")?, p.num("n")?)) };
    let kh = || -> Result<(u32, u32), UsageError> { Ok((p.num("k")?, p.num("h")?)) };
    Ok(match id {
        "equiv_mobius_uniform" => Schur(kn().and_then(|(k, n)| Ok(equiv_mobius_uniform(k, n)?))?),
        "equiv_Q_uniform" => Rep(kn().and_then(|(k, n)| Ok(equiv_q_uniform(k, n)?))?),
        "equiv_Y_uniform" => Rep(kn().and_then(|(k, n)| Ok(equiv_y_uniform(k, n)?))?),
        "equiv_Y_uniform_irreducible" => Rep(kn().and_then(|(k, n)| Ok(equiv_y_uniform_irreducible(k, n)?))?),
        "equiv_Y_uniform_via_definition" => Rep(kn().and_then(|(k, n)| Ok(equiv_y_uniform_via_definition(k, n)?))?),
        "equiv_Y_qniform" => Rep(kn().and_then(|(k, n)| Ok(equiv_y_qniform(k, n)?))?),
        "equiv_char_qniform" => Rep(kn().and_then(|(k, n)| Ok(equiv_char_qniform(k, n)?))?),
        "equiv_Y_stressed_pair" => Rep(kh().and_then(|(k, h)| Ok(equiv_y_stressed_pair(k, h)?))?),
        "ordinary_Y_qniform" => {
            let (k, n) = kn()?;
            Poly(ordinary_y_qniform(k, n, &p.q()?)?)
        }
        "ordinary_Y_uniform" => {
            let (k, n) = kn()?;
            Poly(ordinary_y_uniform(k, n))
        }
        "paving_delta" => Rep(kh().and_then(|(k, h)| Ok(paving_delta(k, h)?))?),
        "paving_correction_dim" => {
            let (k, h) = kh()?;
            if k > h || k == 0 {
                usage!("need h >= k >= 1");
            }
            Int(paving_correction_dim(k, h)
                .ok_or_else(|| anyhow!("division is not exact"))?
                .to_string())
        }
        "ordinary_paving_Y" => {
            let (k, n) = kn()?;
            let lambda = p.lambda()?;
            if let Some(h) = lambda.keys().find(|&&h| h < k || h >= n) {
                usage!("stressed hyperplane size {h} must satisfy k <= h < n");
            }
            Poly(ordinary_paving_y(k, n, &lambda))
        }
        "sparse_paving_Y" => {
            let (k, n) = kn()?;
            Poly(sparse_paving_y(k, n, p.num("lambda")?))
        }
        _ => usage!("unknown formula {id:?}; known formulas: {}", FORMULA_IDS.join(", ")),
    })
}

fn formula(cli: &Cli, id: &str, raw: &[String]) -> Result<Outcome, UsageError> {
    let p = Params::parse(raw)?;
    for name in ["n", "h"] {
        if p.0.contains_key(name) {
            check_size(cli, u64::from(p.num(name)?), name)?;
        }
    }
    let value = evaluate(id, &p)?;
    let mut out = json!({ "formula": id, "params": p.0 });
    let pretty = match &value {
        FormulaValue::Rep(r) => {
            out["value"] = serde_json::to_value(r).expect("rep");
            match r.flavor() {
                Flavor::SymmetricGroup => {
                    out["dimension"] = serde_json::to_value(r.dimension_poly().expect("sym")).expect("poly");
                }
                Flavor::Unipotent => {
                    if let Ok(ctx) = p.q() {
                        out["q_dimension"] = serde_json::to_value(r.qdimension_poly(&ctx).expect("unipotent")).expect("poly");
                    }
                    if r.has_non_hook_shapes() {
                        out["extrapolation"] = json!(
                            "non-hook unipotent shapes: multiplicities transferred from the symmetric group"
                        );
                    }
                }
            }
            r.to_string()
        }
        FormulaValue::Poly(x) => {
            out["value"] = serde_json::to_value(x).expect("poly");
            x.to_string()
        }
        FormulaValue::Schur(s) => {
            out["value"] = serde_json::to_value(s).expect("schur");
            out["dimension"] = json!(s.dimension().to_string());
            s.to_string()
        }
        FormulaValue::Int(s) => {
            out["value"] = json!(s);
            s.clone()
        }
    };
    out["pretty"] = json!(pretty);
    let text = if cli.json {
        canonical(&out)
    } else {
        let mut t = format!("{id}: {pretty}\n");
        for key in ["dimension", "q_dimension", "extrapolation"] {
            if let Some(v) = out.get(key) {
                let _ = writeln!(t, "{key}: {v}");
            }
        }
        t
    };
    Ok(Outcome { text, passed: true })
}

fn write_fixtures(path: &std::path::Path) -> Result<Outcome, UsageError> {
    let entries = match freeze() {
        Ok(e) => e,
        Err(e) => {
            return Ok(Outcome {
                text: format!("oracle failed while freezing: {e}"),
                passed: false,
            })
        }
    };
    let mut body = serde_json::to_string(&serde_json::to_value(&entries).expect("fixtures")).expect("json");
    body.push('\n');
    std::fs::write(path, body).with_context(|| format!("writing {}", path.display()))?;
    Ok(Outcome {
        text: format!("wrote {} fixtures to {}", entries.len(), path.display()),
        passed: true,
    })
}

fn verify_cmd(cli: &Cli, ids: &[String], range: &str, seed: u64, samples: usize) -> Result<Outcome, UsageError> {
    let ranges: Ranges = range.parse()?;
    if let Some(n) = ranges.largest_size() {
        check_size(cli, u64::from(n), "range bound")?;
    }
    let ids: Vec<&str> = if ids.is_empty() {
        THEOREM_IDS.to_vec()
    } else {
        ids.iter().map(String::as_str).collect()
    };
    if let Some(bad) = ids.iter().find(|id| !THEOREM_IDS.contains(id)) {
        usage!("unknown theorem id {bad:?}; known ids: {}", THEOREM_IDS.join(", "));
    }
    let cfg = VerifyConfig { ranges, seed, samples };
    let reports: Vec<_> = ids.iter().map(|id| verify(id, &cfg).expect("known id")).collect();
    let passed = reports.iter().all(|r| r.passed());
    let text = if cli.json { canonical(&reports) } else { render_table(&reports) };
    Ok(Outcome { text, passed })
}

#[derive(Serialize)]
struct RelaxStep {
    hyperplane: Vec<usize>,
    size: usize,
    predicted: IntPolynomial,
}

fn relax(cli: &Cli, source: &SpecSource, hyperplane: Option<&[usize]>) -> Result<Outcome, UsageError> {
    let (spec, m) = load_spec(cli, source)?;
    let k = m.rank_of_matroid();
    let chosen = match hyperplane {
        Some(elems) => {
            let h = from_elems(elems, m.ground_size())?;
            if size(h) < k.max(1) || !m.is_stressed_hyperplane(h) {
                usage!("{elems:?} is not a stressed hyperplane with at least {k} elements");
            }
            vec![h]
        }
        None => m.stressed_hyperplanes().into_iter().filter(|&h| size(h) >= k.max(1)).collect(),
    };
    let mut current = m.clone();
    let mut steps = Vec::new();
    let mut predicted = IntPolynomial::zero();
    for h in chosen {
        current = current
            .relax(h)
            .with_context(|| format!("{:?} stopped being stressed after earlier relaxations", to_vec(h)))?;
        let delta = paving_delta(k as u32, size(h) as u32)?
            .dimension_poly()
            .expect("symmetric group");
        predicted = &predicted + &delta;
        steps.push(RelaxStep {
            hyperplane: to_vec(h),
            size: size(h),
            predicted: delta,
        });
    }
    let ys = inv_z_y(&m).and_then(|before| Ok((before, inv_z_y(&current)?)));
    let (before, after) = match ys {
        Ok(x) => x,
        Err(e) => {
            let text = canonical(&json!({ "matroid": spec, "error": e.to_string() }));
            return Ok(Outcome { text, passed: false });
        }
    };
    let diff = &after - &before;
    let matches = diff == predicted;
    let value = json!({
        "matroid": spec,
        "steps": steps,
        "y_before": before,
        "y_after": after,
        "difference": diff,
        "predicted_difference": predicted,
        "matches": matches,
    });
    let text = if cli.json {
        canonical(&value)
    } else {
        let mut t = String::new();
        for s in &steps {
            let _ = writeln!(t, "relax {:?} (size {}): predicted change {}", s.hyperplane, s.size, s.predicted);
        }
        if steps.is_empty() {
            let _ = writeln!(t, "no stressed hyperplane to relax");
        }
        let _ = writeln!(t, "Y before     {before}");
        let _ = writeln!(t, "Y after      {after}");
        let _ = writeln!(t, "difference   {diff}");
        let _ = writeln!(t, "predicted    {predicted}");
        let _ = writeln!(t, "matches      {matches}");
        t
    };
    Ok(Outcome { text, passed: matches })
}

fn explore_cmd(cli: &Cli, seed: u64, count: usize, range: &str) -> Result<Outcome, UsageError> {
    let ranges: Ranges = range.parse()?;
    let n_min = ranges.n.lo.unwrap_or(4).max(3);
    let n_max = ranges.n.hi.unwrap_or(9);
    if n_min > n_max {
        usage!("empty range of ground set sizes");
    }
    check_size(cli, u64::from(n_max), "ground set size")?;
    let run = explore(&ExploreConfig {
        seed,
        count,
        n_min: n_min as usize,
        n_max: n_max as usize,
    });
    let value: Value = json!({
        "seed": seed,
        "count": count,
        "n_min": n_min,
        "n_max": n_max,
        "findings": run.findings,
    });
    let text = if cli.json {
        canonical(&value)
    } else {
        let mut t = format!(
            "{count} random sparse paving matroids, seed {seed}, {n_min}<=n<={n_max}: {} findings\n",
            run.findings.len()
        );
        for f in &run.findings {
            let _ = writeln!(
                t,
                "  #{} fails {}: Y = {}  {}",
                f.instance.index,
                f.property,
                f.instance.y,
                serde_json::to_string(&f.instance.matroid).expect("spec")
            );
        }
        t
    };
    Ok(Outcome {
        text,
        passed: run.findings.is_empty(),
    })
}
