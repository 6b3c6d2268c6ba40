use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use hws_core::codes::{brute_force_spectra, build_rm22, SpectrumTable};
use hws_core::correspondence::verify_correspondence;
use hws_core::formulas::{
    closed_betti, closed_phi_profile, conic_category_counts, conic_class_counts, fallq_spectra, fixtures,
    gwp_closed, hamming_weights, typo_slots,
};
use hws_core::geometry::{census, maximal_zero_sets};
use hws_core::gwp::{extension_check, gwp_assemble, WeightPolynomial};
use hws_core::matroid::{betti_table, cycle_inventory, BettiTable, InventoryMethod, Matroid};
use hws_core::pipeline::{run_pipeline, Method as PipelineMethod};
use hws_core::resolution::{bs_solve, bs_verify, rm22_minimal_sets, rm22_shape};
use hws_core::{support, Error};

use crate::report::{nested, num, Check, Report};
use crate::{Command, Level, RunConfig, Source, UsageError};

pub(crate) enum Failure {
    Usage(UsageError),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotPrimePower(_) | Error::UnsupportedQ(_) | Error::NoFixtures(_) => Failure::Usage(UsageError {
                flag: "--q",
                message: e.to_string(),
            }),
            Error::DegreeTooLarge { .. } => Failure::Usage(UsageError {
                flag: "--d",
                message: e.to_string(),
            }),
            Error::TooLarge { .. } | Error::OutOfRange(_) => Failure::Usage(UsageError {
                flag: "--q",
                message: e.to_string(),
            }),
            other => Failure::Compute(other),
        }
    }
}

type Outcome<T> = Result<T, Failure>;

pub(crate) fn dispatch(cfg: &RunConfig) -> Outcome<Report> {
    match cfg.command {
        Command::Spectra => spectra(cfg),
        Command::Betti => betti(cfg),
        Command::Gwp => gwp(cfg),
        Command::Conics => conics(cfg),
        Command::Hamming => hamming(cfg),
        Command::Correspondence => correspondence(cfg),
        Command::Verify => verify(cfg),
    }
}

fn code_dimension(q: u32) -> usize {
    if q == 2 {
        4
    } else {
        6
    }
}

fn default_pipeline(q: u32) -> PipelineMethod {
    if q <= 5 {
        PipelineMethod::FullMobius
    } else {
        PipelineMethod::BsAssisted
    }
}

fn method_label(cfg: &RunConfig, default: Source) -> String {
    let source = cfg.source.unwrap_or(default);
    match source {
        Source::Pipeline => {
            let p = cfg.pipeline.unwrap_or_else(|| default_pipeline(cfg.q.unwrap_or(2)));
            format!("pipeline/{p}")
        }
        other => other.name().to_string(),
    }
}

/// Right-aligned grid with a corner label, row labels and column labels.
fn grid(corner: &str, rows: &[String], cols: &[String], cell: impl Fn(usize, usize) -> String) -> String {
    let mut cells: Vec<Vec<String>> = vec![std::iter::once(corner.to_string()).chain(cols.iter().cloned()).collect()];
    for (ri, r) in rows.iter().enumerate() {
        let mut line = vec![r.clone()];
        line.extend((0..cols.len()).map(|ci| cell(ri, ci)));
        cells.push(line);
    }
    let widths: Vec<usize> = (0..=cols.len())
        .map(|c| cells.iter().map(|l| l[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut s = String::new();
    for line in cells {
        let padded: Vec<String> = line
            .iter()
            .zip(&widths)
            .map(|(v, &w)| format!("{v:>w$}"))
            .collect();
        writeln!(s, "{}", padded.join("  ").trim_end()).unwrap();
    }
    s
}

fn spectrum_text(t: &SpectrumTable) -> String {
    let weights: BTreeSet<usize> = t.entries().keys().map(|&(_, w)| w).collect();
    let weights: Vec<usize> = weights.into_iter().collect();
    let rows: Vec<String> = (0..=t.dimension()).map(|r| r.to_string()).collect();
    let cols: Vec<String> = weights.iter().map(|w| w.to_string()).collect();
    grid("r\\w", &rows, &cols, |r, c| {
        let v = t.get(r, weights[c]);
        if v.is_zero() {
            ".".into()
        } else {
            v.to_string()
        }
    })
}

fn betti_text(t: &BettiTable) -> String {
    let p = t.max_homological_degree();
    let offsets: BTreeSet<usize> = t.entries().keys().map(|&(i, j)| j - i).collect();
    let offsets: Vec<usize> = offsets.into_iter().collect();
    let rows: Vec<String> = offsets.iter().map(|r| r.to_string()).collect();
    let cols: Vec<String> = (0..=p).map(|i| i.to_string()).collect();
    grid("j-i\\i", &rows, &cols, |r, i| {
        let v = t.get(i, i + offsets[r]);
        if v.is_zero() {
            "-".into()
        } else {
            v.to_string()
        }
    })
}

fn gaussian_checks(t: &SpectrumTable, rep: &mut Report) {
    rep.checks.push(Check::holds(
        "row sums are Gaussian binomials",
        t.row_sums_are_gaussian(),
        "some row sum differs",
    ));
}

fn spectra(cfg: &RunConfig) -> Outcome<Report> {
    let q = cfg.q.expect("validated");
    let source = cfg.source.unwrap_or(Source::Closed);
    let mut rep = Report::new(Some(q), "spectra", &method_label(cfg, Source::Closed));
    let closed = fallq_spectra(q)?;
    let t = match source {
        Source::Closed => closed.clone(),
        Source::Pipeline => {
            let p = cfg.pipeline.unwrap_or_else(|| default_pipeline(q));
            run_pipeline(q, p)?.spectra
        }
        Source::Brute => {
            let r_max = cfg.r_max.unwrap_or(code_dimension(q));
            brute_force_spectra(&build_rm22(q)?, r_max, &cfg.budget)?
        }
    };
    let complete = t.max_rank().min(cfg.r_max.unwrap_or(t.dimension()));
    let mut a = Map::new();
    for r in 0..=complete {
        let row: Map<String, Value> = t.row(r).iter().map(|(w, v)| (w.to_string(), num(v))).collect();
        a.insert(r.to_string(), Value::Object(row));
    }
    rep.data = json!({
        "n": t.length(),
        "k": t.dimension(),
        "A": a,
        "complete_rows": complete,
        "truncated_at": t.truncated_at(),
    });
    if complete == t.dimension() {
        gaussian_checks(&t, &mut rep);
    }
    if source != Source::Closed {
        rep.checks.push(Check::holds(
            format!("rows 0..={complete} match the closed forms"),
            t.agrees_with(&closed, complete),
            "entries differ",
        ));
    }
    rep.text = spectrum_text(&t);
    if let Some(r) = t.truncated_at() {
        writeln!(rep.text, "truncated: subspace budget exhausted at r = {r}; rows 0..={complete} are complete").unwrap();
    }
    rep.csv_header = vec!["r".into(), "w".into(), "A".into()];
    rep.csv_rows = t
        .entries()
        .iter()
        .filter(|(&(r, _), _)| r <= complete)
        .map(|(&(r, w), v)| vec![r.to_string(), w.to_string(), v.to_string()])
        .collect();
    Ok(rep)
}

fn pipeline_betti(q: u32, ell: usize, method: PipelineMethod) -> Outcome<BettiTable> {
    let k = code_dimension(q);
    if ell == k {
        return Ok(BettiTable::new(k, 0));
    }
    match method {
        PipelineMethod::FullMobius => {
            let m = Matroid::from_code(&build_rm22(q)?)?;
            let inv = cycle_inventory(&m, InventoryMethod::Flats, &Default::default())?;
            Ok(betti_table(&m.elongate(ell)?, &inv)?)
        }
        PipelineMethod::BsAssisted => Ok(bs_solve(&rm22_shape(q, ell)?)?),
    }
}

fn betti_data(t: &BettiTable) -> Value {
    let phi: Map<String, Value> = t.phis().iter().map(|(j, v)| (j.to_string(), num(v))).collect();
    json!({
        "elongation": t.elongation(),
        "beta": nested(t.entries()),
        "phi": phi,
        "regularity": t.regularity(),
    })
}

fn betti(cfg: &RunConfig) -> Outcome<Report> {
    let q = cfg.q.expect("validated");
    let ell = cfg.elongation;
    let k = code_dimension(q);
    if ell > k {
        return Err(Failure::Usage(UsageError {
            flag: "--elongation",
            message: format!("must be at most {k}"),
        }));
    }
    let source = cfg.source.unwrap_or(Source::Closed);
    let mut rep = Report::new(Some(q), "betti", &method_label(cfg, Source::Closed));
    let closed = closed_betti(q, ell)?;
    let t = match source {
        Source::Pipeline => pipeline_betti(q, ell, cfg.pipeline.unwrap_or_else(|| default_pipeline(q)))?,
        _ => closed.clone(),
    };
    let mut data = betti_data(&t);
    if q <= 5 {
        let errata: Vec<Value> = fixtures(q)?
            .errata
            .iter()
            .filter(|e| e.ell == ell)
            .map(|e| json!({"i": e.i, "j": e.j, "printed": e.printed, "corrected": e.corrected, "note": e.note}))
            .collect();
        data["errata"] = Value::Array(errata);
    } else {
        let typos: Vec<Value> = typo_slots(q)?
            .into_iter()
            .filter(|s| s.ell == ell)
            .map(|s| {
                json!({"i": s.i, "j": s.j, "printed": s.printed.to_string(), "confirmed": num(&s.confirmed), "note": s.description})
            })
            .collect();
        data["typo_slots"] = Value::Array(typos);
    }
    rep.data = data;
    let bs = bs_verify(&t, k - ell);
    rep.checks.push(Check::holds(
        format!("Boij-Soderberg identities s < {}", k - ell),
        bs.passed(),
        format!("{:?}", bs.residuals.iter().map(ToString::to_string).collect::<Vec<_>>()),
    ));
    if source == Source::Pipeline {
        let diffs = t.differences(&closed);
        rep.checks.push(Check::holds(
            "table matches the closed forms",
            diffs.is_empty(),
            format!("{diffs:?}"),
        ));
    }
    rep.text = betti_text(&t);
    rep.csv_header = vec!["i".into(), "j".into(), "beta".into()];
    rep.csv_rows = t
        .entries()
        .iter()
        .map(|(&(i, j), v)| vec![i.to_string(), j.to_string(), v.to_string()])
        .collect();
    Ok(rep)
}

fn poly_text(polys: &[WeightPolynomial]) -> String {
    let mut s = String::new();
    for p in polys {
        let terms: Vec<String> = p
            .coeffs()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| match e {
                0 => c.to_string(),
                1 => format!("{c}*Z"),
                _ => format!("{c}*Z^{e}"),
            })
            .collect();
        writeln!(s, "P_{}(Z) = {}", p.w, terms.join(" + ").replace("+ -", "- ")).unwrap();
    }
    s
}

fn closed_polys(q: u32) -> Outcome<Vec<WeightPolynomial>> {
    if q >= 7 {
        Ok(gwp_closed(q)?)
    } else {
        Ok(gwp_assemble(&closed_phi_profile(q)?)?)
    }
}

fn gwp(cfg: &RunConfig) -> Outcome<Report> {
    let q = cfg.q.expect("validated");
    let source = cfg.source.unwrap_or(Source::Closed);
    let mut rep = Report::new(Some(q), "gwp", &method_label(cfg, Source::Closed));
    let closed = closed_polys(q)?;
    let polys = match source {
        Source::Pipeline => run_pipeline(q, cfg.pipeline.unwrap_or_else(|| default_pipeline(q)))?.polys,
        _ => closed.clone(),
    };
    let p: Map<String, Value> = polys
        .iter()
        .map(|p| (p.w.to_string(), Value::Array(p.coeffs().iter().map(num).collect())))
        .collect();
    rep.data = json!({ "P": p });
    let p0_is_one = polys.iter().any(|p| p.w == 0 && p.coeffs() == [BigInt::one()]);
    rep.checks.push(Check::holds("P_0 = 1", p0_is_one, "missing or wrong"));
    let vanish: Vec<usize> = polys
        .iter()
        .filter(|p| p.w > 0 && !p.eval(&BigInt::one()).is_zero())
        .map(|p| p.w)
        .collect();
    rep.checks.push(Check::holds("P_w(1) = 0 for w > 0", vanish.is_empty(), format!("{vanish:?}")));
    if source == Source::Pipeline {
        rep.checks.push(Check::holds("polynomials match the closed forms", polys == closed, "coefficients differ"));
    }
    let ext = extension_check(&build_rm22(q)?, 1, &polys)?;
    rep.checks.push(Check::holds(
        "P_w(q) counts the codewords of weight w",
        ext.passed(),
        format!("{:?}", ext.mismatches),
    ));
    rep.text = poly_text(&polys);
    rep.csv_header = vec!["w".into(), "power".into(), "coefficient".into()];
    rep.csv_rows = polys
        .iter()
        .flat_map(|p| {
            p.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(e, c)| vec![p.w.to_string(), e.to_string(), c.to_string()])
        })
        .collect();
    Ok(rep)
}

fn expected_maximal(q: u32) -> Option<&'static str> {
    match q {
        3 => Some("de"),
        4 => Some("deh"),
        5 => Some("degh"),
        q if q >= 7 => Some("defgh"),
        _ => None,
    }
}

fn conics(cfg: &RunConfig) -> Outcome<Report> {
    let q = cfg.q.expect("validated");
    let mut rep = Report::new(Some(q), "conics", "enumeration");
    let c = census(q)?;
    let classes = conic_class_counts(q)?;
    let cats = conic_category_counts(q)?;
    for (class, expected) in &classes {
        let actual = BigInt::from(c.by_class.get(class).copied().unwrap_or(0));
        rep.checks.push(Check::compare(format!("{} count", class.name()), expected.clone(), actual));
    }
    for (cat, expected) in &cats {
        let actual = BigInt::from(c.by_category.get(cat).copied().unwrap_or(0));
        rep.checks.push(Check::compare(format!("category {} count", cat.letter()), expected.clone(), actual));
    }
    let maximal: String = maximal_zero_sets(q)?.iter().map(|c| c.letter()).collect();
    if let Some(expected) = expected_maximal(q) {
        rep.checks.push(Check::compare("maximal zero-set categories", expected.to_string(), maximal.clone()));
    }
    if let Some(first) = &c.first_spectrum {
        let closed = fallq_spectra(q)?.row(1);
        // the zero form has no zeros removed; skip weight 0
        let enumerated: BTreeMap<usize, BigInt> = first.iter().filter(|(&w, _)| w > 0).map(|(&w, v)| (w, v.clone())).collect();
        rep.checks.push(Check::holds(
            "conic zero counts give the first spectrum",
            enumerated == closed,
            format!("{enumerated:?}"),
        ));
    }
    let by_class: Map<String, Value> = c.by_class.iter().map(|(k, v)| (k.name().to_string(), json!(v))).collect();
    let by_cat: Map<String, Value> = c.by_category.iter().map(|(k, v)| (k.letter().to_string(), json!(v))).collect();
    rep.data = json!({
        "total": c.total,
        "by_class": by_class,
        "by_category": by_cat,
        "maximal": maximal,
        "first_spectrum": c.first_spectrum.as_ref().map(|m| m.iter().map(|(w, v)| (w.to_string(), num(v))).collect::<Map<_, _>>()),
    });
    let mut text = String::new();
    writeln!(text, "total {}", c.total).unwrap();
    for (k, v) in &c.by_class {
        writeln!(text, "{:<16} {v}", k.name()).unwrap();
    }
    for (k, v) in &c.by_category {
        writeln!(text, "category {}  {v}", k.letter()).unwrap();
    }
    writeln!(text, "maximal {maximal}").unwrap();
    rep.text = text;
    rep.csv_header = vec!["kind".into(), "key".into(), "count".into()];
    rep.csv_rows = c
        .by_class
        .iter()
        .map(|(k, v)| vec!["class".into(), k.name().to_string(), v.to_string()])
        .chain(c.by_category.iter().map(|(k, v)| vec!["category".into(), k.letter().to_string(), v.to_string()]))
        .collect();
    Ok(rep)
}

fn shown(v: Option<usize>) -> String {
    v.map_or_else(|| "none".into(), |v| v.to_string())
}

fn hamming(cfg: &RunConfig) -> Outcome<Report> {
    let q = cfg.q.expect("validated");
    let mut rep = Report::new(Some(q), "hamming", "closed");
    let d = hamming_weights(q)?;
    let census = rm22_minimal_sets(q)?;
    let spectra = fallq_spectra(q)?;
    for (idx, &dr) in d.iter().enumerate() {
        let r = idx + 1;
        let least = census.keys().filter(|&&(n, _)| n == r).map(|&(_, s)| s).min();
        rep.checks.push(Check::compare(format!("d_{r} is the least cycle of nullity {r}"), dr.to_string(), shown(least)));
        let from_spectrum = spectra.row(r).keys().next().copied();
        rep.checks.push(Check::compare(format!("d_{r} is the least weight of A^({r})"), dr.to_string(), shown(from_spectrum)));
    }
    rep.data = json!({ "d": d });
    rep.text = d.iter().enumerate().map(|(i, v)| format!("d_{} = {v}\n", i + 1)).collect();
    rep.csv_header = vec!["r".into(), "d".into()];
    rep.csv_rows = d.iter().enumerate().map(|(i, v)| vec![(i + 1).to_string(), v.to_string()]).collect();
    Ok(rep)
}

fn correspondence(cfg: &RunConfig) -> Outcome<Report> {
    let q = cfg.q.unwrap_or(3);
    let mut rep = Report::new(Some(q), "correspondence", "subset-scan");
    let r = verify_correspondence(q, cfg.d, cfg.m)?;
    rep.checks.push(Check::holds(
        "affine cycles arise from projective cycles",
        r.affine_from_projective,
        format!("{:?}", r.counterexample),
    ));
    rep.checks.push(Check::holds(
        "projective cycles restrict to affine cycles",
        r.projective_restricts,
        format!("{:?}", r.counterexample),
    ));
    rep.checks.push(Check::compare("equal dual ranks", r.projective_dual_rank, r.affine_dual_rank));
    let counts = |m: &BTreeMap<usize, Vec<u128>>| -> Map<String, Value> {
        m.iter().map(|(i, v)| (i.to_string(), json!(v.len()))).collect()
    };
    let witnesses: Vec<Value> = r.witnesses.iter().map(|&(i, j)| json!([i, j])).collect();
    rep.data = json!({
        "d": r.d,
        "m": r.m,
        "projective_size": r.projective_size,
        "affine_size": r.affine_size,
        "dual_rank": r.affine_dual_rank,
        "affine_cycles": counts(&r.affine_cycles),
        "projective_cycles": counts(&r.projective_cycles),
        "witnesses": witnesses,
    });
    let mut text = String::new();
    writeln!(text, "PRM_{q}({},{}) on {} points, RM_{q}({},{}) on {} points", r.d, r.m, r.projective_size, r.d, r.m, r.affine_size).unwrap();
    for (i, v) in &r.affine_cycles {
        let p = r.projective_cycles.get(i).map_or(0, Vec::len);
        writeln!(text, "nullity {i}: {} affine, {p} projective cycles", v.len()).unwrap();
    }
    rep.text = text;
    rep.csv_header = vec!["nullity".into(), "affine".into(), "projective".into()];
    rep.csv_rows = r
        .affine_cycles
        .iter()
        .map(|(i, v)| vec![i.to_string(), v.len().to_string(), r.projective_cycles.get(i).map_or(0, Vec::len).to_string()])
        .collect();
    Ok(rep)
}

fn prefixed(q: u32, checks: Vec<Check>) -> impl Iterator<Item = Check> {
    checks.into_iter().map(move |mut c| {
        c.name = format!("q={q}: {}", c.name);
        c
    })
}

fn suite(q: u32, level: Level, cfg: &RunConfig) -> Outcome<Vec<Check>> {
    let mut checks = Vec::new();
    let k = code_dimension(q);
    let sub = |command: Command, source: Option<Source>, pipeline: Option<PipelineMethod>| {
        let mut c = cfg.clone();
        c.command = command;
        c.q = Some(q);
        c.source = source;
        c.pipeline = pipeline;
        c
    };
    let mut methods = vec![PipelineMethod::BsAssisted];
    if q <= 5 || level == Level::Full {
        methods.push(PipelineMethod::FullMobius);
    }
    for &p in &methods {
        let res = run_pipeline(q, p)?;
        for ell in 0..=k {
            let closed = closed_betti(q, ell)?;
            checks.push(Check::holds(
                format!("{p} Betti table at elongation {ell}"),
                res.tables[ell] == closed,
                format!("{:?}", res.tables[ell].differences(&closed)),
            ));
        }
        checks.push(Check::holds(
            format!("{p} φ profile satisfies the identities"),
            res.phi.satisfies_bs(),
            "residuals",
        ));
        let closed = fallq_spectra(q)?;
        checks.push(Check::holds(
            format!("{p} spectra match the closed forms"),
            res.spectra.entries() == closed.entries(),
            "entries differ",
        ));
        checks.push(Check::holds(
            format!("{p} row sums are Gaussian binomials"),
            res.spectra.row_sums_are_gaussian(),
            "row sums differ",
        ));
        if q >= 7 {
            checks.push(Check::holds(
                format!("{p} weight polynomials match the closed forms"),
                res.polys == gwp_closed(q)?,
                "coefficients differ",
            ));
        }
        let ext_m = match q {
            2 => 3,
            3 => 2,
            _ => 0,
        };
        for m in 1..=ext_m {
            let ext = extension_check(&build_rm22(q)?, m, &res.polys)?;
            checks.push(Check::holds(
                format!("{p} extension counts over GF({q}^{m})"),
                ext.passed(),
                format!("{:?}", ext.mismatches),
            ));
        }
    }
    let brute_rows = match (level, q) {
        (_, 2 | 3) => Some(k),
        (Level::Full, 4 | 5) => Some(k),
        (Level::Full, 7) => Some(3),
        _ => None,
    };
    if let Some(r_max) = brute_rows {
        let mut c = sub(Command::Spectra, Some(Source::Brute), None);
        c.r_max = Some(r_max);
        checks.extend(spectra(&c)?.checks);
    }
    checks.extend(conics(&sub(Command::Conics, None, None))?.checks);
    if q >= 3 {
        checks.extend(hamming(&sub(Command::Hamming, None, None))?.checks);
    }
    if q == 3 {
        for d in [2, 1] {
            let mut c = sub(Command::Correspondence, None, None);
            c.d = d;
            checks.extend(correspondence(&c)?.checks);
        }
    }
    checks.push(semimodularity(q, cfg.seed, 1000)?);
    Ok(prefixed(q, checks).collect())
}

/// n(A ∪ B) + n(A ∩ B) ≥ n(A) + n(B) on random pairs.
fn semimodularity(q: u32, seed: u64, pairs: usize) -> Outcome<Check> {
    let m = Matroid::from_code(&build_rm22(q)?)?;
    let full = support::full(m.ground_size());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let failures = (0..pairs)
        .filter(|_| {
            let a = rng.gen::<u128>() & full;
            let b = rng.gen::<u128>() & full;
            !m.is_semimodular_on(a, b)
        })
        .count();
    Ok(Check::compare(format!("nullity semimodular on {pairs} random pairs"), 0, failures))
}

fn verify(cfg: &RunConfig) -> Outcome<Report> {
    let qs: Vec<u32> = match cfg.q {
        Some(q) => vec![q],
        None => vec![2, 3, 4, 5, 7, 8, 9],
    };
    let level_name = match cfg.level {
        Level::Fast => "fast",
        Level::Full => "full",
    };
    let mut rep = Report::new(cfg.q, "verify", level_name);
    let mut per_q = Map::new();
    for &q in &qs {
        let checks = suite(q, cfg.level, cfg)?;
        let failed = checks.iter().filter(|c| c.status == crate::Status::Fail).count();
        per_q.insert(q.to_string(), json!({"checks": checks.len(), "failed": failed}));
        rep.checks.extend(checks);
    }
    rep.data = json!({ "level": level_name, "seed": cfg.seed, "suites": per_q });
    rep.csv_header = vec!["name".into(), "status".into(), "expected".into(), "actual".into()];
    rep.csv_rows = rep
        .checks
        .iter()
        .map(|c| vec![c.name.clone(), c.status.as_str().into(), c.expected.clone(), c.actual.clone()])
        .collect();
    Ok(rep)
}
