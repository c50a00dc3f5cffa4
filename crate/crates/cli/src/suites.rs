use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;
use supermac_core::algebra::{parse_ratfunc, RatFunc, Substitution};
use supermac_core::inner::{kernel_truncated_check, WeightKind, ZWeight};
use supermac_core::macdonald::{
    counterexample, evaluate_sym, evaluation_conjectured, integral_form, integrality_check, norm_conjectured, Family,
};
use supermac_core::special::{
    elementary_dual_check, jack_limit_deviations, jack_schur, limit_diagram_check,
    monomial_limit_check, schur_s, schur_sbar, specialize_family, Flag, KostkaMatrix, KostkaSet, Polys, Specialization,
};
use supermac_core::tables;
use supermac_core::SuperPartition;

use crate::cache::Cache;
use crate::report::{Check, SuiteResult, Witness};
use crate::CliError;

pub const SUITES: &[&str] = &[
    "table1",
    "table2",
    "norms",
    "evaluation",
    "integrality",
    "counterexample",
    "tau-fix",
    "limits",
    "schur-positivity",
    "hl-positivity",
    "kostka-tables",
    "kostka-positivity",
    "kostka-relations",
    "kernel",
];

pub struct Ctx {
    pub cache: Cache,
    pub max_total: u32,
    pub long: bool,
}

type Degree = (u32, u32);

fn new_w() -> ZWeight {
    ZWeight::new(WeightKind::New)
}

fn sp(s: &str) -> SuperPartition {
    s.parse().expect("reference labels parse")
}

fn rf(s: &str) -> RatFunc {
    parse_ratfunc(s).expect("reference values parse")
}

fn admissible(n: u32, m: u32) -> bool {
    m * m.saturating_sub(1) / 2 <= n
}

impl Ctx {
    /// Every admissible degree with `n + m ≤ max_total`, together with the
    /// consistency-table degrees with `n ≤ max_total`.
    pub fn degrees(&self) -> Vec<Degree> {
        let mut out = BTreeSet::new();
        for n in 0..=self.max_total {
            for m in 0..=self.max_total - n {
                if n + m > 0 && admissible(n, m) {
                    out.insert((n, m));
                }
            }
        }
        for &(n, m, _, _, long) in tables::CONSISTENT_DEGREES {
            if n <= self.max_total && !long {
                out.insert((n, m));
            }
        }
        sorted(out)
    }

    fn degrees_within(&self, max_n: u32, max_m: u32) -> Vec<Degree> {
        self.degrees().into_iter().filter(|&(n, m)| n <= max_n && m <= max_m).collect()
    }

    fn family(&self, n: u32, m: u32, w: &ZWeight) -> Result<Result<Family, Check>, CliError> {
        Ok(self.cache.consistent_family(n, m, w)?.map_err(|report| {
            let mut c = Check::new(format!("consistency under {}", w.key()), Some((n, m))).detail("family does not exist");
            for p in report.failing_pairs {
                c = c.witness(Witness::with_residual(&[p.first, p.second], p.residual));
            }
            c
        }))
    }

    fn mac(&self, n: u32, m: u32) -> Result<Result<Family, Check>, CliError> {
        self.family(n, m, &new_w())
    }
}

fn sorted(set: BTreeSet<Degree>) -> Vec<Degree> {
    let mut v: Vec<Degree> = set.into_iter().collect();
    v.sort_by_key(|&(n, m)| (n + m, n, m));
    v
}

/// Runs `f` on every degree, in parallel, keeping the order of `degrees`.
fn per_degree<F>(degrees: &[Degree], f: F) -> Result<(Vec<Check>, BTreeMap<String, f64>), CliError>
where
    F: Fn(u32, u32) -> Result<Vec<Check>, CliError> + Sync,
{
    let results: Vec<Result<(Vec<Check>, f64), CliError>> = degrees
        .par_iter()
        .map(|&(n, m)| {
            let start = Instant::now();
            let checks = f(n, m)?;
            Ok((checks, start.elapsed().as_secs_f64()))
        })
        .collect();
    let mut checks = Vec::new();
    let mut timings = BTreeMap::new();
    for (&(n, m), r) in degrees.iter().zip(results) {
        let (c, secs) = r?;
        checks.extend(c);
        timings.insert(format!("{n}_{m}"), secs);
    }
    Ok((checks, timings))
}

macro_rules! family_or_fail {
    ($e:expr) => {
        match $e? {
            Ok(f) => f,
            Err(check) => return Ok(vec![check]),
        }
    };
}

pub fn run(ctx: &Ctx, suite: &str) -> Result<SuiteResult, CliError> {
    if suite == "all" {
        let mut checks = Vec::new();
        let mut degrees = BTreeSet::new();
        let mut timings = BTreeMap::new();
        for s in SUITES {
            let r = run(ctx, s)?;
            degrees.extend(r.degrees);
            checks.extend(r.checks.into_iter().map(|c| Check { name: format!("{s}/{}", c.name), ..c }));
            for (d, secs) in r.timings {
                *timings.entry(d).or_insert(0.0) += secs;
            }
        }
        return Ok(SuiteResult::new("all", sorted(degrees), checks, timings));
    }
    let (degrees, checks, timings) = match suite {
        "table1" => table1(ctx)?,
        "table2" => table2(ctx)?,
        "norms" => norms(ctx)?,
        "evaluation" => evaluation(ctx)?,
        "integrality" => integrality(ctx)?,
        "counterexample" => (vec![], counterexample_checks(), BTreeMap::new()),
        "tau-fix" => tau_fix(ctx)?,
        "limits" => limits(ctx)?,
        "schur-positivity" => kostka_suite(ctx, |set| {
            Ok(vec![
                flags_check("conj6 monomial-bar positivity", &set.monomial_bar),
                flags_check("conj6 monomial positivity", &set.monomial),
            ])
        })?,
        "hl-positivity" => kostka_suite(ctx, |set| {
            let d = (set.qt.n, set.qt.m);
            let t_one: Vec<Witness> = set.t_one_check()?.into_iter().map(|s| Witness::labels(&[s])).collect();
            Ok(vec![
                flags_check("conj7 t-bar positivity", &set.t_bar),
                flags_check("conj7 t positivity", &set.t),
                Check::from_witnesses("conj7 value at t=1", Some(d), t_one),
            ])
        })?,
        "kostka-tables" => kostka_tables(ctx)?,
        "kostka-positivity" => kostka_suite(ctx, |set| Ok(vec![flags_check("conj8 qt positivity", &set.qt)]))?,
        "kostka-relations" => kostka_suite(ctx, |set| {
            let d = (set.qt.n, set.qt.m);
            let bad: Vec<Witness> = set.relations_check()?.into_iter().map(|s| Witness::labels(&[s])).collect();
            Ok(vec![Check::from_witnesses("conj9 K(0,1)=K and K(0,t)=K(t)", Some(d), bad)])
        })?,
        "kernel" => {
            let ok = kernel_truncated_check(2, 2, 2);
            (vec![], vec![Check::pass_if("kernel identity to x-degree 2 in 2+2 variables", None, ok)], BTreeMap::new())
        }
        other => return Err(CliError::Usage(format!("unknown suite '{other}'"))),
    };
    Ok(SuiteResult::new(suite, degrees, checks, timings))
}

type Outcome = (Vec<Degree>, Vec<Check>, BTreeMap<String, f64>);

fn table1(ctx: &Ctx) -> Result<Outcome, CliError> {
    let rows: Vec<_> = tables::CONSISTENT_DEGREES
        .iter()
        .filter(|&&(n, _, _, _, long)| n <= ctx.max_total && (ctx.long || !long))
        .copied()
        .collect();
    let degrees: Vec<Degree> = rows.iter().map(|&(n, m, ..)| (n, m)).collect();
    let (checks, timings) = per_degree(&degrees, |n, m| {
        let &(_, _, eq, unk, _) = rows.iter().find(|r| (r.0, r.1) == (n, m)).unwrap();
        let (report, _) = ctx.cache.family(n, m, &new_w())?.into_inner();
        let mut c = Check::new("consistency", Some((n, m))).detail(format!(
            "equations {}, unknowns {}, consistent {}",
            report.num_equations, report.num_unknowns, report.consistent
        ));
        if (report.num_equations, report.num_unknowns) != (eq, unk) {
            c = c.witness(Witness::labels(&[format!("expected equations {eq}, unknowns {unk}")]));
        }
        for p in report.failing_pairs {
            c = c.witness(Witness::with_residual(&[p.first, p.second], p.residual));
        }
        if !report.consistent && c.witnesses.is_empty() {
            c = c.witness(Witness::labels(&["inconsistent"]));
        }
        Ok(vec![c])
    })?;
    Ok((degrees, checks, timings))
}

fn table2(ctx: &Ctx) -> Result<Outcome, CliError> {
    let degrees: Vec<Degree> =
        tables::MACDONALD_EXPANSIONS.iter().filter(|e| e.0 <= ctx.max_total).map(|e| (e.0, e.1)).collect();
    let (checks, timings) = per_degree(&degrees, |n, m| {
        let fam = family_or_fail!(ctx.mac(n, m));
        let (_, _, exps) = tables::MACDONALD_EXPANSIONS.iter().find(|e| (e.0, e.1) == (n, m)).unwrap();
        let mut out = Vec::new();
        for (label, terms) in exps.iter() {
            let l = sp(label);
            let mut want: BTreeMap<SuperPartition, RatFunc> = terms.iter().map(|(o, c)| (sp(o), rf(c))).collect();
            want.insert(l.clone(), RatFunc::one());
            let got = fam.poly(&l);
            let mut bad = Vec::new();
            for o in fam.index() {
                let (g, w) = (got.coeff(o), want.get(o).cloned().unwrap_or_else(RatFunc::zero));
                if g != w {
                    bad.push(Witness::with_residual(&[label.to_string(), o.to_string()], g.sub(&w)));
                }
            }
            out.push(Check::from_witnesses(format!("P_({label})"), Some((n, m)), bad));
        }
        Ok(out)
    })?;
    Ok((degrees, checks, timings))
}

fn norms(ctx: &Ctx) -> Result<Outcome, CliError> {
    let degrees = ctx.degrees();
    let (mut checks, timings) = per_degree(&degrees, |n, m| {
        let fam = family_or_fail!(ctx.mac(n, m));
        let bad = fam
            .index()
            .iter()
            .filter_map(|l| {
                let d = fam.norm_direct(l).sub(&norm_conjectured(l));
                (!d.is_zero()).then(|| Witness::with_residual(&[l], d))
            })
            .collect();
        Ok(vec![Check::from_witnesses("conj2 norm", Some((n, m)), bad)])
    })?;
    let bad = tables::NORM_EXAMPLES
        .iter()
        .filter_map(|(l, v)| {
            let d = norm_conjectured(&sp(l)).sub(&rf(v));
            (!d.is_zero()).then(|| Witness::with_residual(&[l], d))
        })
        .collect();
    checks.push(Check::from_witnesses("printed norm values", None, bad));
    Ok((degrees, checks, timings))
}

fn evaluation(ctx: &Ctx) -> Result<Outcome, CliError> {
    let degrees = ctx.degrees();
    let (mut checks, timings) = per_degree(&degrees, |n, m| {
        let fam = family_or_fail!(ctx.mac(n, m));
        let mut bad = Vec::new();
        for l in fam.index() {
            let j = integral_form(&fam, l);
            let ns: BTreeSet<usize> = [l.length(), l.length() + 1, (n + m) as usize].into_iter().collect();
            for nvars in ns.into_iter().filter(|&k| k > 0) {
                let d = evaluate_sym(&j, nvars).sub(&evaluation_conjectured(l, nvars));
                if !d.is_zero() {
                    bad.push(Witness::with_residual(&[l.to_string(), format!("N={nvars}")], d));
                }
            }
        }
        Ok(vec![Check::from_witnesses("conj4 evaluation", Some((n, m)), bad)])
    })?;
    for &(label, nvars, value) in tables::EVALUATION_EXAMPLES {
        let l = sp(label);
        let mut bad = Vec::new();
        let d = evaluation_conjectured(&l, nvars).sub(&rf(value));
        if !d.is_zero() {
            bad.push(Witness::with_residual(&[label.to_string(), "closed form".into()], d));
        }
        let (n, m) = l.degree();
        if n <= ctx.max_total {
            match ctx.mac(n, m)? {
                Ok(fam) => {
                    let d = evaluate_sym(&integral_form(&fam, &l), nvars).sub(&rf(value));
                    if !d.is_zero() {
                        bad.push(Witness::with_residual(&[label.to_string(), "direct".into()], d));
                    }
                }
                Err(c) => checks.push(c),
            }
        }
        checks.push(Check::from_witnesses(format!("printed E_{{{nvars},{m}}}[J_({label})]"), Some((n, m)), bad));
    }
    Ok((degrees, checks, timings))
}

fn integrality(ctx: &Ctx) -> Result<Outcome, CliError> {
    let degrees = ctx.degrees();
    let (checks, timings) = per_degree(&degrees, |n, m| {
        let fam = family_or_fail!(ctx.mac(n, m));
        let bad = fam.index().iter().filter(|l| !integrality_check(&integral_form(&fam, l))).map(|l| Witness::labels(&[l])).collect();
        Ok(vec![Check::from_witnesses("conj3 integrality", Some((n, m)), bad)])
    })?;
    Ok((degrees, checks, timings))
}

fn counterexample_checks() -> Vec<Check> {
    let r = counterexample(WeightKind::InvalidatedF);
    let at_q_eq_t = r.substitute(&Substitution::Other, &Substitution::Keep);
    let labels = ["2;1,1", "0;2,2"];
    let mut nonzero = Check::new("invalidated weight residual is nonzero", Some((4, 1))).detail(r.to_string());
    if r.is_zero() {
        nonzero = nonzero.witness(Witness::with_residual(&labels, &r));
    }
    let vanishes = match at_q_eq_t {
        Ok(v) if v.is_zero() => Check::new("residual vanishes at q=t", Some((4, 1))),
        Ok(v) => Check::new("residual vanishes at q=t", Some((4, 1))).witness(Witness::with_residual(&labels, v)),
        Err(e) => Check::new("residual vanishes at q=t", Some((4, 1))).witness(Witness::with_residual(&labels, e)),
    };
    vec![nonzero, vanishes]
}

fn tau_fix(ctx: &Ctx) -> Result<Outcome, CliError> {
    let w = ZWeight::new(WeightKind::TauAtQInverse);
    let (checks, timings) = per_degree(&[(4, 1)], |n, m| {
        let fam = family_or_fail!(ctx.family(n, m, &w));
        let mut out = vec![Check::new("consistent under tau at 1/q", Some((n, m)))];
        for (a, b) in [("2;1,1", "0;2,2"), ("2;2", "0;3,1")] {
            let r = fam.pair(&sp(a), &sp(b));
            let mut c = Check::new(format!("<P_({a}), P_({b})> = 0"), Some((n, m)));
            if !r.is_zero() {
                c = c.witness(Witness::with_residual(&[a, b], r));
            }
            out.push(c);
        }
        Ok(out)
    })?;
    Ok((vec![(4, 1)], checks, timings))
}

fn labels_witnesses(ls: Vec<SuperPartition>) -> Vec<Witness> {
    ls.into_iter().map(|l| Witness::labels(&[l])).collect()
}

fn expansion_check(name: &str, got: &Polys, label: &str, want: &[(&str, &str)]) -> Check {
    let l = sp(label);
    let want: BTreeMap<SuperPartition, RatFunc> = want.iter().map(|(o, c)| (sp(o), rf(c))).collect();
    let mut bad = Vec::new();
    let got = &got[&l];
    let support: BTreeSet<&SuperPartition> = got.support().chain(want.keys()).collect();
    for o in support {
        let d = got.coeff(o).sub(want.get(o).unwrap_or(&RatFunc::zero()));
        if !d.is_zero() {
            bad.push(Witness::with_residual(&[label.to_string(), o.to_string()], d));
        }
    }
    Check::from_witnesses(name, Some(l.degree()), bad)
}

fn limits(ctx: &Ctx) -> Result<Outcome, CliError> {
    let degrees = ctx.degrees_within(4, 2);
    let jack_w = ZWeight::new(WeightKind::JackAlpha);
    let hl_w = ZWeight::specialized(WeightKind::Primed, Substitution::Zero, Substitution::Keep);
    let (mut checks, timings) = per_degree(&degrees, |n, m| {
        let fam = family_or_fail!(ctx.mac(n, m));
        let d = Some((n, m));
        let mut out = vec![
            Check::from_witnesses("P(q,1) = m", d, labels_witnesses(monomial_limit_check(&fam)?)),
            Check::from_witnesses("P(1,t) = sign e_conj", d, labels_witnesses(elementary_dual_check(&fam)?)),
        ];
        let direct = family_or_fail!(ctx.family(n, m, &hl_w));
        let via_bar = specialize_family(&fam, &Specialization::BarQZero)?;
        let bad = direct.index().iter().filter(|l| via_bar[*l] != direct.poly(l)).map(|l| Witness::labels(&[l])).collect();
        out.push(Check::from_witnesses("conj5 two routes to Pbar(t)", d, bad));
        let jack = family_or_fail!(ctx.family(n, m, &jack_w));
        let bad = limit_diagram_check(&fam, &jack)?.into_iter().map(|s| Witness::labels(&[s])).collect();
        out.push(Check::from_witnesses("limit diagram commutes", d, bad));
        Ok(out)
    })?;
    if ctx.max_total >= 4 {
        match (ctx.mac(4, 2)?, ctx.family(4, 2, &jack_w)?) {
            (Ok(fam), Ok(jack)) => {
                checks.push(expansion_check("s^Jack_(1,0;3)", &jack_schur(&jack)?, "1,0;3", tables::JACK_SCHUR_103));
                checks.push(expansion_check("s_(1,0;3)", &schur_s(&fam)?, "1,0;3", tables::SCHUR_103));
                checks.push(expansion_check("sbar_(1,0;3)", &schur_sbar(&fam)?, "1,0;3", tables::SCHUR_BAR_103));
            }
            (Err(c), _) | (_, Err(c)) => checks.push(c),
        }
    }
    if ctx.max_total >= 2 {
        match (ctx.mac(2, 1)?, ctx.family(2, 1, &jack_w)?) {
            (Ok(fam), Ok(jack)) => {
                let dev = jack_limit_deviations(&fam, &jack, 2, 1, &[2, 3, 4])?;
                let shown: Vec<String> = dev.iter().map(|d| d.to_string()).collect();
                let ok = dev.windows(2).all(|w| w[1] < w[0]);
                checks.push(
                    Check::pass_if("Jack limit deviations decrease, (a,b)=(2,1), k=2,3,4", Some((2, 1)), ok)
                        .detail(shown.join(", ")),
                );
            }
            (Err(c), _) | (_, Err(c)) => checks.push(c),
        }
    }
    Ok((degrees, checks, timings))
}

fn flags_check(name: &str, k: &KostkaMatrix) -> Check {
    let bad = k
        .positivity_flags()
        .into_iter()
        .map(|(l, o, c): Flag| Witness::with_residual(&[l, o], c))
        .collect();
    Check::from_witnesses(name, Some((k.n, k.m)), bad)
}

fn kostka_suite<F>(ctx: &Ctx, f: F) -> Result<Outcome, CliError>
where
    F: Fn(&KostkaSet) -> Result<Vec<Check>, CliError> + Sync,
{
    let degrees: Vec<Degree> = ctx.degrees().into_iter().filter(|&(n, m)| n + m <= ctx.max_total).collect();
    let (checks, timings) = per_degree(&degrees, |n, m| {
        let fam = family_or_fail!(ctx.mac(n, m));
        f(&ctx.cache.kostka(&fam)?)
    })?;
    Ok((degrees, checks, timings))
}

fn kostka_tables(ctx: &Ctx) -> Result<Outcome, CliError> {
    let degrees: Vec<Degree> =
        tables::KOSTKA_QT_TABLES.iter().filter(|t| t.0 <= ctx.max_total).map(|t| (t.0, t.1)).collect();
    let (checks, timings) = per_degree(&degrees, |n, m| {
        let fam = family_or_fail!(ctx.mac(n, m));
        let set = ctx.cache.kostka(&fam)?;
        let (_, _, cols, rows) = tables::KOSTKA_QT_TABLES.iter().find(|t| (t.0, t.1) == (n, m)).unwrap();
        let mut bad = Vec::new();
        let order: Vec<String> = set.qt.index.iter().map(|l| l.to_string()).collect();
        if order != *cols {
            bad.push(Witness::labels(&[format!("column order {}", order.join(" "))]));
        }
        for (row, entries) in rows.iter() {
            for (col, e) in cols.iter().zip(entries.iter()) {
                let d = set.qt.entry(&sp(row), &sp(col)).sub(&rf(e));
                if !d.is_zero() {
                    bad.push(Witness::with_residual(&[row, col], d));
                }
            }
        }
        Ok(vec![Check::from_witnesses("qt Kostka table", Some((n, m)), bad)])
    })?;
    Ok((degrees, checks, timings))
}
