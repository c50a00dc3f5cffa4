//! Acceptance criteria 1-9. Each criterion prints exactly one line
//! `criterion N: PASS|FAIL | what | tolerance | detail`; the process exits
//! non-zero if any criterion fails.

use std::collections::{BTreeMap, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use supermac_core::algebra::{parse_ratfunc, MPoly, RatFunc, Substitution};
use supermac_core::inner::{fermionic_sign, gram_matrix, kernel_truncated_check, zweight, WeightKind, ZWeight};
use supermac_core::macdonald::{
    build_family, consistency_report, counterexample, evaluate_sym, evaluation_conjectured, integral_form,
    integrality_check, norm_conjectured, Family,
};
use supermac_core::special::{
    build_hall_littlewood_bar, build_jack, elementary_dual_check, hall_littlewood, hall_littlewood_bar_routes,
    jack_limit_deviations, jack_schur, limit_diagram_check, monomial_limit_check, schur_s, schur_sbar, KostkaKind,
    KostkaSet,
};
use supermac_core::superpoly::{Basis, SymSuperPoly};
use supermac_core::tables::{KOSTKA_QT_TABLES, MACDONALD_EXPANSIONS};
use supermac_core::SuperPartition;

type Outcome = Result<String, String>;

fn sp(s: &str) -> SuperPartition {
    s.parse().unwrap()
}

fn r(s: &str) -> RatFunc {
    parse_ratfunc(s).unwrap()
}

fn new() -> ZWeight {
    ZWeight::new(WeightKind::New)
}

fn admissible_degrees(max_sum: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for s in 1..=max_sum {
        for m in 0..=s {
            let n = s - m;
            if m * m.saturating_sub(1) / 2 <= n {
                out.push((n, m));
            }
        }
    }
    out
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn mac(n: u32, m: u32) -> Result<Family, String> {
    build_family(n, m, &new()).map_err(|e| format!("({n}|{m}) inconsistent: {e}"))
}

fn criterion_1() -> Outcome {
    let rows = [
        (4, 1, 66, 64),
        (5, 2, 136, 128),
        (5, 1, 171, 163),
        (6, 3, 45, 43),
        (6, 2, 378, 351),
        (6, 1, 435, 401),
        (7, 3, 171, 163),
        (8, 3, 528, 482),
        (9, 4, 45, 43),
    ];
    let start = Instant::now();
    for (n, m, eq, unk) in rows.iter().copied() {
        let (rep, _) = consistency_report(n, m, &new());
        ensure(rep.consistent && (rep.num_equations, rep.num_unknowns) == (eq, unk), || {
            format!("({n}|{m}): got ({}, {}, consistent={})", rep.num_equations, rep.num_unknowns, rep.consistent)
        })?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed <= Duration::from_secs(600), || format!("took {elapsed:?}"))?;
    Ok(format!("{} degrees consistent with printed counts in {:.1}s", rows.len(), elapsed.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let mut count = 0;
    for (n, m, exps) in MACDONALD_EXPANSIONS {
        let fam = mac(*n, *m)?;
        for (label, terms) in exps.iter() {
            let mut want: BTreeMap<SuperPartition, RatFunc> = terms.iter().map(|(o, c)| (sp(o), r(c))).collect();
            want.insert(sp(label), RatFunc::one());
            let got: BTreeMap<SuperPartition, RatFunc> =
                fam.poly(&sp(label)).coeffs().iter().map(|(k, v)| (k.clone(), v.clone())).collect();
            ensure(got == want, || format!("P_({label}) differs"))?;
            count += 1;
        }
    }
    let fam = mac(4, 1)?;
    let c = fam.poly(&sp("0;3,1")).coeff(&sp("0;2,1,1"));
    ensure(c == r("(1-t)(-2q^2t^2-qt^2-2q^3t^2-qt+q^2t+2q+q^2+2)/((1-q^2t^2)(1-qt))"), || format!("P_(0;3,1) at m_(0;2,1,1): {c}"))?;
    Ok(format!("{count} polynomials match coefficient for coefficient"))
}

fn criterion_3() -> Outcome {
    let res = counterexample(WeightKind::InvalidatedF);
    ensure(!res.is_zero(), || "invalidated residual is zero".into())?;
    let at = res.substitute(&Substitution::Other, &Substitution::Keep).map_err(|e| e.to_string())?;
    ensure(at.is_zero(), || format!("residual at q=t is {at}"))?;
    let fam = build_family(4, 1, &ZWeight::new(WeightKind::TauAtQInverse)).map_err(|e| e.to_string())?;
    for (a, b) in [("2;1,1", "0;2,2"), ("2;2", "0;3,1")] {
        let p = fam.pair(&sp(a), &sp(b));
        ensure(p.is_zero(), || format!("<P_({a}), P_({b})> = {p} under tau at 1/q"))?;
    }
    Ok("residual nonzero, vanishes at q=t; both incomparable pairs orthogonal at tau=1/q".into())
}

fn criterion_4() -> Outcome {
    ensure(norm_conjectured(&sp("3,0;1")) == r("q^3(1-q)^2(1+q)/((1-t)(1-q^2t))"), || "closed form at (3,0;1)".into())?;
    ensure(norm_conjectured(&sp("2,1,0;")) == r("q^3"), || "closed form at (2,1,0;)".into())?;
    let mut count = 0;
    for (n, m) in admissible_degrees(7) {
        let fam = mac(n, m)?;
        for l in fam.index() {
            let (d, c) = (fam.norm_direct(l), norm_conjectured(l));
            ensure(d == c, || format!("({l}): direct {d}, closed form {c}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} norms over all degrees with n+m <= 7, plus both printed values"))
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    for (n, m) in admissible_degrees(7).into_iter().filter(|&(n, m)| n <= 5 && m <= 2) {
        let fam = mac(n, m)?;
        for l in fam.index() {
            ensure(integrality_check(&integral_form(&fam, l)), || format!("J_({l}) not polynomial"))?;
            count += 1;
        }
    }
    Ok(format!("{count} integral forms with polynomial coefficients, degrees <= (5|2)"))
}

fn criterion_6() -> Outcome {
    let mut count = 0;
    for (n, m) in admissible_degrees(6) {
        let fam = mac(n, m)?;
        for l in fam.index() {
            let j = integral_form(&fam, l);
            let lo = l.length().max(1);
            let mut ns = vec![lo, lo + 1, (n + m) as usize];
            ns.sort();
            ns.dedup();
            for nv in ns {
                let (e, c) = (evaluate_sym(&j, nv), evaluation_conjectured(l, nv));
                ensure(e == c, || format!("({l}) N={nv}: {e} vs {c}"))?;
                count += 1;
            }
        }
    }
    let l = sp("3,1,0;1,1");
    let want = r("q^-2t^7(1-t^3)(1-t^4)(1-q^3t^7)");
    let fam = mac(6, 3)?;
    let e = evaluate_sym(&integral_form(&fam, &l), 7);
    ensure(e == want && evaluation_conjectured(&l, 7) == want, || format!("E_(7,3)[J_(3,1,0;1,1)] = {e}"))?;
    Ok(format!("{count} evaluations for n+m <= 6, plus the printed E_(7,3) value"))
}

fn expansion(p: &SymSuperPoly) -> BTreeMap<SuperPartition, RatFunc> {
    p.coeffs().iter().map(|(k, v)| (k.clone(), v.clone())).collect()
}

fn literal(terms: &[(&str, &str)]) -> BTreeMap<SuperPartition, RatFunc> {
    terms.iter().map(|(k, v)| (sp(k), r(v))).collect()
}

fn criterion_7() -> Outcome {
    let small: Vec<(u32, u32)> = admissible_degrees(6).into_iter().filter(|&(n, m)| n <= 4 && m <= 2).collect();
    for &(n, m) in &small {
        let fam = mac(n, m)?;
        let bad = monomial_limit_check(&fam).map_err(|e| e.to_string())?;
        ensure(bad.is_empty(), || format!("P(q,1) != m at ({n}|{m}): {bad:?}"))?;
        let bad = elementary_dual_check(&fam).map_err(|e| e.to_string())?;
        ensure(bad.is_empty(), || format!("P(1,t) != sign e at ({n}|{m}): {bad:?}"))?;
        let direct = build_hall_littlewood_bar(n, m).map_err(|e| e.to_string())?;
        let bad = hall_littlewood_bar_routes(&fam, &direct).map_err(|e| e.to_string())?;
        ensure(bad.is_empty(), || format!("two routes disagree at ({n}|{m}): {bad:?}"))?;
        let jack = build_jack(n, m).map_err(|e| e.to_string())?;
        let bad = limit_diagram_check(&fam, &jack).map_err(|e| e.to_string())?;
        ensure(bad.is_empty(), || format!("limit diagram at ({n}|{m}): {bad:?}"))?;
    }
    let fam = mac(4, 2)?;
    let jack = build_jack(4, 2).map_err(|e| e.to_string())?;
    let l = sp("1,0;3");
    let sj = expansion(&jack_schur(&jack).map_err(|e| e.to_string())?[&l]);
    let want = literal(&[
        ("1,0;3", "1"),
        ("2,0;2", "1/2"),
        ("1,0;2,1", "7/8"),
        ("2,0;1,1", "1/4"),
        ("2,1;1", "-1/8"),
        ("1,0;1,1,1", "3/4"),
    ]);
    ensure(sj == want, || "s^Jack_(1,0;3)".into())?;
    let s = expansion(&schur_s(&fam).map_err(|e| e.to_string())?[&l]);
    let want = literal(&[("1,0;3", "1"), ("2,0;2", "1"), ("1,0;2,1", "1"), ("2,0;1,1", "1"), ("1,0;1,1,1", "1")]);
    ensure(s == want, || "s_(1,0;3)".into())?;
    let sb = expansion(&schur_sbar(&fam).map_err(|e| e.to_string())?[&l]);
    ensure(sb == literal(&[("1,0;3", "1"), ("1,0;2,1", "1"), ("1,0;1,1,1", "1")]), || "sbar_(1,0;3)".into())?;

    let dev = jack_limit_deviations(&mac(2, 1)?, &build_jack(2, 1).map_err(|e| e.to_string())?, 2, 1, &[2, 3, 4])
        .map_err(|e| e.to_string())?;
    ensure(dev.windows(2).all(|w| w[1] < w[0]), || format!("deviations not decreasing: {dev:?}"))?;
    let shown: Vec<String> = dev.iter().map(|d| format!("{:.3e}", to_f64(d))).collect();
    Ok(format!("limits at {} degrees <= (4|2); laid/beau/beau2 exact; Jack deviations {}", small.len(), shown.join(" > ")))
}

fn to_f64(x: &BigRational) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
}

fn criterion_8() -> Outcome {
    for (n, m, cols, rows) in KOSTKA_QT_TABLES {
        let set = KostkaSet::compute(&mac(*n, *m)?).map_err(|e| e.to_string())?;
        let order: Vec<String> = set.qt.index.iter().map(|l| l.to_string()).collect();
        ensure(order == *cols, || format!("column order at ({n}|{m}): {order:?}"))?;
        for (row, entries) in rows.iter() {
            for (col, e) in cols.iter().zip(entries.iter()) {
                let got = set.qt.entry(&sp(row), &sp(col));
                ensure(*got == r(e), || format!("({n}|{m}) [{row}][{col}] = {got}, printed {e}"))?;
            }
        }
    }
    let degrees = admissible_degrees(6);
    for &(n, m) in &degrees {
        let set = KostkaSet::compute(&mac(n, m)?).map_err(|e| e.to_string())?;
        for kind in KostkaKind::ALL {
            let flags = set.get(kind).positivity_flags();
            ensure(flags.is_empty(), || format!("{} at ({n}|{m}): {flags:?}", kind.name()))?;
        }
        let bad = set.t_one_check().map_err(|e| e.to_string())?;
        ensure(bad.is_empty(), || format!("({n}|{m}): {bad:?}"))?;
        let bad = set.relations_check().map_err(|e| e.to_string())?;
        ensure(bad.is_empty(), || format!("({n}|{m}): {bad:?}"))?;
    }
    Ok(format!("5 printed tables exact; positivity and K(0,1)=K, K(0,t)=K(t) at {} degrees, n+m <= 6", degrees.len()))
}

// Classical oracle: partitions, power sums expanded in n variables, and
// Gram-Schmidt along reverse lexicographic order.

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn powersum_in_monomials(lambda: &[u32], n: usize, parts: &[Vec<u32>]) -> Vec<BigInt> {
    let mut poly: HashMap<Vec<u32>, BigInt> = HashMap::from([(vec![0; n], BigInt::one())]);
    for &k in lambda {
        let mut next: HashMap<Vec<u32>, BigInt> = HashMap::new();
        for (e, c) in &poly {
            for i in 0..n {
                let mut e2 = e.clone();
                e2[i] += k;
                *next.entry(e2).or_default() += c;
            }
        }
        poly = next;
    }
    parts
        .iter()
        .map(|mu| {
            let mut e = mu.clone();
            e.resize(n, 0);
            poly.get(&e).cloned().unwrap_or_default()
        })
        .collect()
}

fn invert_rational(mut a: Vec<Vec<BigRational>>) -> Vec<Vec<BigRational>> {
    let k = a.len();
    let mut inv: Vec<Vec<BigRational>> =
        (0..k).map(|i| (0..k).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }).collect()).collect();
    for col in 0..k {
        let p = (col..k).find(|&r| !a[r][col].is_zero()).expect("invertible");
        a.swap(col, p);
        inv.swap(col, p);
        let piv = a[col][col].clone();
        for j in 0..k {
            a[col][j] = &a[col][j] / &piv;
            inv[col][j] = &inv[col][j] / &piv;
        }
        for r in 0..k {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..k {
                    let (x, y) = (&a[col][j] * &f, &inv[col][j] * &f);
                    a[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
    }
    inv
}

fn z(lambda: &[u32]) -> BigInt {
    let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
    lambda.iter().for_each(|&p| *counts.entry(p).or_default() += 1);
    counts.iter().fold(BigInt::one(), |acc, (&p, &c)| {
        let fact: BigInt = (1..=c).map(BigInt::from).product();
        acc * BigInt::from(p).pow(c) * fact
    })
}

fn one_minus(a: u32, b: u32) -> MPoly {
    MPoly::one().sub(&MPoly::monomial(BigInt::one(), a, b))
}

/// Classical `P_λ` in monomial coordinates, parts in reverse lex order.
fn classical_gram_schmidt(n: u32, hall_littlewood: bool) -> (Vec<Vec<u32>>, Vec<Vec<RatFunc>>) {
    let parts = partitions(n, n);
    let k = parts.len();
    let pm: Vec<Vec<BigRational>> = parts
        .iter()
        .map(|l| powersum_in_monomials(l, n as usize, &parts).into_iter().map(BigRational::from_integer).collect())
        .collect();
    let mp = invert_rational(pm);
    let weight: Vec<RatFunc> = parts
        .iter()
        .map(|l| {
            let (num, den) = l.iter().fold((MPoly::one(), MPoly::one()), |(a, b), &p| {
                let qa = if hall_littlewood { MPoly::one() } else { one_minus(p, 0) };
                (a.mul(&qa), b.mul(&one_minus(0, p)))
            });
            RatFunc::new(num, den).unwrap().mul(&RatFunc::from_bigint(z(l)))
        })
        .collect();
    let gram: Vec<Vec<RatFunc>> = (0..k)
        .map(|a| {
            (0..k)
                .map(|b| {
                    (0..k).fold(RatFunc::zero(), |acc, l| {
                        let c = &mp[a][l] * &mp[b][l];
                        if c.is_zero() {
                            acc
                        } else {
                            acc.add(&RatFunc::from_rational(&c).mul(&weight[l]))
                        }
                    })
                })
                .collect()
        })
        .collect();
    let pair = |x: &[RatFunc], y: &[RatFunc]| {
        let mut acc = RatFunc::zero();
        for a in 0..k {
            if x[a].is_zero() {
                continue;
            }
            for b in 0..k {
                if !y[b].is_zero() && !gram[a][b].is_zero() {
                    acc = acc.add(&x[a].mul(&y[b]).mul(&gram[a][b]));
                }
            }
        }
        acc
    };
    let mut polys: Vec<Vec<RatFunc>> = vec![Vec::new(); k];
    for i in (0..k).rev() {
        let mut v: Vec<RatFunc> = (0..k).map(|j| if i == j { RatFunc::one() } else { RatFunc::zero() }).collect();
        let unit = v.clone();
        for j in (i + 1)..k {
            let c = pair(&unit, &polys[j]).div(&pair(&polys[j], &polys[j])).unwrap();
            for t in 0..k {
                if !polys[j][t].is_zero() {
                    v[t] = v[t].sub(&c.mul(&polys[j][t]));
                }
            }
        }
        polys[i] = v;
    }
    (parts, polys)
}

fn label(parts: &[u32]) -> SuperPartition {
    SuperPartition::new(vec![], parts.to_vec()).unwrap()
}

fn criterion_9() -> Outcome {
    // power sums are orthogonal for every weight, through the monomial Gram matrix
    for kind in WeightKind::ALL {
        for (n, m) in [(2, 1), (3, 1), (3, 2), (2, 2)] {
            let g = gram_matrix(n, m, &ZWeight::new(kind));
            let coords: Vec<Vec<RatFunc>> = g
                .index
                .iter()
                .map(|l| {
                    let f = SymSuperPoly::single(Basis::PowerSum, l).to_monomial().unwrap();
                    g.index.iter().map(|o| f.coeff(o)).collect()
                })
                .collect();
            for (a, la) in g.index.iter().enumerate() {
                for (b, _) in g.index.iter().enumerate() {
                    let v = g.pair(&coords[a], &coords[b]);
                    let want = if a == b { zweight(kind, la).scale_int(fermionic_sign(m)) } else { RatFunc::zero() };
                    ensure(v == want, || format!("{kind} ({n}|{m}): <p_{a}, p_{b}> = {v}"))?;
                }
            }
        }
    }
    // triangularity and full orthogonality of built families
    let mut built = 0;
    for (n, m) in admissible_degrees(6) {
        for fam in [Some(mac(n, m)?), (n + m <= 5).then(|| build_jack(n, m).unwrap()), (n + m <= 5).then(|| build_hall_littlewood_bar(n, m).unwrap())]
            .into_iter()
            .flatten()
        {
            ensure(fam.triangularity_violations().is_empty(), || format!("({n}|{m}) {} not triangular", fam.weight.key()))?;
            let bad = fam.orthogonality_failures();
            ensure(bad.is_empty(), || format!("({n}|{m}) {}: {:?}", fam.weight.key(), bad.first()))?;
            built += 1;
        }
    }
    // classical slices against the oracle
    for n in 1..=6u32 {
        let fam = mac(n, 0)?;
        let (parts, polys) = classical_gram_schmidt(n, false);
        for (l, row) in parts.iter().zip(&polys) {
            let p = fam.poly(&label(l));
            for (o, c) in parts.iter().zip(row) {
                ensure(p.coeff(&label(o)) == *c, || format!("classical P_{l:?} at m_{o:?}"))?;
            }
        }
        if n <= 4 {
            let hl = hall_littlewood(&fam).map_err(|e| e.to_string())?;
            let (parts, polys) = classical_gram_schmidt(n, true);
            for (l, row) in parts.iter().zip(&polys) {
                for (o, c) in parts.iter().zip(row) {
                    ensure(hl[&label(l)].coeff(&label(o)) == *c, || format!("Hall-Littlewood P_{l:?} at m_{o:?}"))?;
                }
            }
        }
    }
    let fam = mac(6, 0)?;
    for (a, b) in [(";3,1,1,1", ";2,2,2"), (";3,3", ";4,1,1")] {
        let p = fam.pair(&sp(a), &sp(b));
        ensure(p.is_zero(), || format!("<P_({a}), P_({b})> = {p}"))?;
    }
    ensure(kernel_truncated_check(2, 2, 2), || "kernel identity at x-degree 2 with 2+2 variables".into())?;
    // round trips and conjugation
    let mut round = 0;
    for (n, m) in admissible_degrees(8) {
        for l in SuperPartition::enumerate(n, m) {
            ensure(l.conjugate().conjugate() == l && l.conjugate().degree() == (n, m), || format!("conjugate of ({l})"))?;
            if n + m <= 5 {
                let f = SymSuperPoly::single(Basis::Monomial, &l);
                let back = f.to_powersum().and_then(|p| p.to_monomial()).map_err(|e| e.to_string())?;
                ensure(back == f, || format!("m -> p -> m at ({l})"))?;
                let e = SymSuperPoly::single(Basis::Elementary, &l).to_monomial().map_err(|e| e.to_string())?;
                let e_back = e.to_powersum().and_then(|p| p.to_monomial()).map_err(|e| e.to_string())?;
                ensure(e_back == e, || format!("e -> m -> p -> m at ({l})"))?;
                round += 1;
            }
        }
    }
    Ok(format!(
        "p-orthogonality for 7 weights; {built} families triangular and orthogonal; classical oracle n <= 6 (HL n <= 4); kernel; {round} round trips"
    ))
}

type Criterion = (u32, &'static str, &'static str, fn() -> Outcome);

const CRITERIA: &[Criterion] = &[
    (1, "consistency counts", "exact integer counts; all nine degrees within 600 s", criterion_1),
    (2, "monomial expansions at low degree", "exact rational-function equality", criterion_2),
    (3, "invalidated weight and the tau fix", "exact; residual != 0, = 0 at q=t", criterion_3),
    (4, "norm formula", "exact, all superpartitions with n+m <= 7", criterion_4),
    (5, "integral forms are polynomial", "exact, degrees <= (5|2)", criterion_5),
    (6, "evaluation formula", "exact, n+m <= 6 with 2-3 values of N", criterion_6),
    (7, "limits", "exact; Jack sampling exact rationals, strictly decreasing for k=2,3,4", criterion_7),
    (8, "Kostka tables, positivity and relations", "exact polynomial entries, n+m <= 6", criterion_8),
    (9, "property suites", "exact", criterion_9),
];

fn main() {
    // `cargo test -- --list` and filters are ignored; the whole suite always runs
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let mut failed = 0;
    for &(k, what, tol, f) in CRITERIA {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {k}: PASS | {what} | tolerance: {tol} | {detail} ({secs:.1}s)"),
            Err(detail) => {
                failed += 1;
                println!("criterion {k}: FAIL | {what} | tolerance: {tol} | {detail} ({secs:.1}s)");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
