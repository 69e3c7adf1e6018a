//! Subcommand bodies. Each builds its JSON document first; plain and csv
//! renderings are derived from the same data.

use anyhow::{Context, Result};
use fsbasis::combinatorics::{enumerate_admissible, parse_monomial, Monomial, Setup, WeightVector};
use fsbasis::oracle::{sector_rank_cached, verify_relations, Oracle, RelationConfig, SectorCache, SectorRecord};
use fsbasis::qseries::{enumerative_character, fermionic_character, full_character, CharacterMethod, QSeries};
use fsbasis::straightening::{straighten_by_elimination, straighten_by_rewriting, LinComb};
use serde_json::{json, Value};

use crate::{Algorithm, CharacterArgs, EnumerateArgs, Format, Method, StraightenArgs, VerifyArgs};

pub struct Outcome {
    pub text: String,
    /// False on a verification mismatch.
    pub ok: bool,
}

fn parse_weight(text: Option<&str>, setup: &Setup) -> Result<Option<WeightVector>> {
    let Some(text) = text else { return Ok(None) };
    let w: WeightVector = text.parse()?;
    w.check_rank(setup)?;
    Ok(Some(w))
}

fn pretty(v: &Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    Ok(String::from_utf8(w.into_inner().context("flushing csv")?)?)
}

fn plain_monomial(m: &Monomial) -> String {
    if m.is_one() {
        "1".into()
    } else {
        m.to_string()
    }
}

pub fn enumerate(a: &EnumerateArgs) -> Result<Outcome> {
    let setup = Setup::new(a.common.rank, a.module)?;
    let weight = parse_weight(a.weight.as_deref(), &setup)?;
    let sectors = enumerate_admissible(&setup, a.cap, weight.as_ref())?;
    let text = match a.common.format {
        Format::Json => pretty(&json!({
            "rank": setup.rank(),
            "module": setup.module(),
            "cap": a.cap,
            "sectors": sectors.iter().map(|s| json!({
                "weight": s.weight.to_string(),
                "degree": s.degree,
                "count": s.monomials.len(),
                "monomials": s.monomials.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        }))?,
        Format::Plain => sectors
            .iter()
            .map(|s| {
                let ms: Vec<String> = s.monomials.iter().map(plain_monomial).collect();
                format!("weight {} degree {} ({}): {}\n", s.weight, s.degree, ms.len(), ms.join(" | "))
            })
            .collect(),
        Format::Csv => csv_text(
            &["weight", "degree", "monomial"],
            sectors.iter().flat_map(|s| {
                s.monomials
                    .iter()
                    .map(|m| vec![s.weight.to_string(), s.degree.to_string(), m.to_string()])
            }),
        )?,
    };
    Ok(Outcome { text, ok: true })
}

fn series(setup: &Setup, weight: Option<&WeightVector>, order: usize, method: CharacterMethod) -> Result<(QSeries, Value)> {
    Ok(match weight {
        Some(w) => {
            let s = match method {
                CharacterMethod::Fermionic => fermionic_character(setup, w, order)?,
                CharacterMethod::Enumerative => enumerative_character(setup, w, order)?,
            };
            (s, Value::Null)
        }
        None => {
            let (s, table) = full_character(setup, order, method)?;
            (s, serde_json::to_value(table)?)
        }
    })
}

pub fn character(a: &CharacterArgs) -> Result<Outcome> {
    let setup = Setup::new(a.common.rank, a.module)?;
    let weight = parse_weight(a.weight.as_deref(), &setup)?;
    let order = a.cap;
    let (primary, table, other) = match a.method {
        Method::Fermionic => {
            let (s, t) = series(&setup, weight.as_ref(), order, CharacterMethod::Fermionic)?;
            (s, t, None)
        }
        Method::Enumerative => {
            let (s, t) = series(&setup, weight.as_ref(), order, CharacterMethod::Enumerative)?;
            (s, t, None)
        }
        Method::Both => {
            let (f, t) = series(&setup, weight.as_ref(), order, CharacterMethod::Fermionic)?;
            let (e, _) = series(&setup, weight.as_ref(), order, CharacterMethod::Enumerative)?;
            (f, t, Some(e))
        }
    };
    let mismatch = other.as_ref().and_then(|e| primary.first_mismatch(e));
    let method = match a.method {
        Method::Fermionic => "fermionic",
        Method::Enumerative => "enumerative",
        Method::Both => "both",
    };
    let text = match a.common.format {
        Format::Json => {
            let mut doc = json!({
                "rank": setup.rank(),
                "module": setup.module(),
                "order": order,
                "weight": weight.as_ref().map(ToString::to_string),
                "method": method,
                "series": primary,
                "table": table,
            });
            if let Some(e) = &other {
                doc["enumerative"] = serde_json::to_value(e)?;
                doc["agree"] = json!(mismatch.is_none());
                doc["first_mismatch"] = json!(mismatch);
            }
            pretty(&doc)?
        }
        Format::Plain => {
            let mut t = format!("{primary}\n");
            if let Some(e) = &other {
                t += &match mismatch {
                    None => format!("fermionic and enumerative agree through q^{order}\n"),
                    Some(k) => format!(
                        "mismatch at q^{k}: fermionic {}, enumerative {}\n",
                        primary.coeff(k),
                        e.coeff(k)
                    ),
                };
            }
            t
        }
        Format::Csv => match &other {
            None => csv_text(
                &["exponent", "coefficient"],
                (0..=order).map(|k| vec![k.to_string(), primary.coeff(k).to_string()]),
            )?,
            Some(e) => csv_text(
                &["exponent", "fermionic", "enumerative"],
                (0..=order).map(|k| vec![k.to_string(), primary.coeff(k).to_string(), e.coeff(k).to_string()]),
            )?,
        },
    };
    Ok(Outcome {
        text,
        ok: mismatch.is_none(),
    })
}

pub fn straighten(a: &StraightenArgs) -> Result<Outcome> {
    let setup = Setup::new(a.common.rank, a.module)?;
    let input = parse_monomial(&a.monomial, &setup)?;
    let v = LinComb::monomial(input.clone());
    let rewritten = || -> Result<LinComb> { Ok(straighten_by_rewriting(&v, &setup)) };
    let eliminated = || -> Result<LinComb> { Ok(straighten_by_elimination(&v, &setup)?) };
    let out = match a.method {
        Algorithm::Rewriting => rewritten()?,
        Algorithm::Elimination => eliminated()?,
    };
    let check = if a.check {
        let other = match a.method {
            Algorithm::Rewriting => eliminated()?,
            Algorithm::Elimination => rewritten()?,
        };
        let oracle = Oracle::new(setup.rank());
        let lhs = oracle.apply_monomial(&input, &setup);
        let rhs = oracle.apply_lincomb(&out, &setup);
        Some((
            other == out,
            lhs == rhs,
            out.monomials().all(|m| m.is_admissible(&setup)),
        ))
    } else {
        None
    };
    let ok = check.is_none_or(|(x, y, z)| x && y && z);
    let text = match a.common.format {
        Format::Json => pretty(&json!({
            "rank": setup.rank(),
            "module": setup.module(),
            "input": input.to_string(),
            "output": out.to_entries(),
            "check": check.map(|(alg, oracle, adm)| json!({
                "algorithms_agree": alg,
                "oracle_agree": oracle,
                "admissible": adm,
            })),
        }))?,
        Format::Plain => {
            let mut t = format!("{out}\n");
            if let Some((alg, oracle, adm)) = check {
                let word = |b: bool| if b { "yes" } else { "NO" };
                t += &format!(
                    "algorithms agree: {}; oracle images agree: {}; admissible support: {}\n",
                    word(alg),
                    word(oracle),
                    word(adm)
                );
            }
            t
        }
        Format::Csv => csv_text(
            &["coefficient", "monomial"],
            out.to_entries().into_iter().map(|e| vec![e.coefficient, e.monomial]),
        )?,
    };
    Ok(Outcome { text, ok })
}

pub fn verify(a: &VerifyArgs) -> Result<Outcome> {
    let rank = a.common.rank;
    let setups = match a.module {
        Some(r) => vec![Setup::new(rank, r)?],
        None => Setup::all_modules(rank)?,
    };
    let weight = parse_weight(a.weight.as_deref(), &setups[0])?;
    let oracle = Oracle::new(rank);

    let relations = (!a.no_relations).then(|| verify_relations(&oracle, RelationConfig::new(a.cap, a.fock_degree)));

    let mut cache = match &a.cache {
        Some(path) => SectorCache::load(path)?,
        None => SectorCache::new(),
    };
    let mut records: Vec<SectorRecord> = Vec::new();
    for setup in &setups {
        for d in 0..=a.degree {
            let weights = match &weight {
                Some(w) => vec![w.clone()],
                None => WeightVector::all_up_to_length(rank, d),
            };
            for w in weights {
                records.push(sector_rank_cached(&oracle, setup, &w, d, &mut cache)?);
            }
        }
    }
    if let Some(path) = &a.cache {
        cache.save(path)?;
    }

    let bad: Vec<&SectorRecord> = records.iter().filter(|r| !r.triple.is_basis()).collect();
    let relations_ok = relations.as_ref().is_none_or(|r| r.passed());
    let ok = relations_ok && bad.is_empty();
    let text = match a.common.format {
        Format::Json => pretty(&json!({
            "rank": rank,
            "passed": ok,
            "relations": relations,
            "sectors": records.iter().map(|r| json!({
                "module": r.key.module,
                "weight": r.key.weight.to_string(),
                "degree": r.key.degree,
                "count_admissible": r.triple.count_admissible,
                "rank_admissible": r.triple.rank_admissible,
                "rank_all_pbw": r.triple.rank_all_pbw,
            })).collect::<Vec<_>>(),
        }))?,
        Format::Plain => {
            let mut t = String::new();
            match &relations {
                None => {}
                Some(r) => match &r.failure {
                    None => {
                        let cs: Vec<String> = r.init2_constants.iter().map(|(m, c)| format!("r={m}: {c}")).collect();
                        t += &format!("relations: pass ({} checks; Init2 constants {})\n", r.checks, cs.join(", "));
                    }
                    Some(f) => t += &format!("relations: FAIL {:?} on {}: {}\n", f.kind, f.state, f.detail),
                },
            }
            for r in records.iter().filter(|r| r.triple.rank_all_pbw > 0 || r.triple.count_admissible > 0) {
                let tr = r.triple;
                t += &format!(
                    "r={} weight {} degree {}: {} {} {}{}\n",
                    r.key.module,
                    r.key.weight,
                    r.key.degree,
                    tr.count_admissible,
                    tr.rank_admissible,
                    tr.rank_all_pbw,
                    if tr.is_basis() { "" } else { "  MISMATCH" }
                );
            }
            t += &format!(
                "sectors: {} checked, {} mismatched\n",
                records.len(),
                bad.len()
            );
            t
        }
        Format::Csv => csv_text(
            &["module", "weight", "degree", "count_admissible", "rank_admissible", "rank_all_pbw"],
            records.iter().map(|r| {
                vec![
                    r.key.module.to_string(),
                    r.key.weight.to_string(),
                    r.key.degree.to_string(),
                    r.triple.count_admissible.to_string(),
                    r.triple.rank_admissible.to_string(),
                    r.triple.rank_all_pbw.to_string(),
                ]
            }),
        )?,
    };
    Ok(Outcome { text, ok })
}
