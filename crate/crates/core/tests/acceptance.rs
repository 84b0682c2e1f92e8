//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//! Exact checks assert literal rational equality; numeric checks use the
//! stated absolute tolerances.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use num::bigint::BigInt;
use num::rational::BigRational;
use std::str::FromStr;

use schurzeta::enumerate::{
    lattice_patterns, preceq_set, ssyt_iter, PatternSubset, PreceqVariant, RimKind,
};
use schurzeta::identities::{
    dual_cauchy, diagonal_grids, sweep_dual_cauchy, sweep_giambelli, sweep_jacobi_trudi,
    sweep_rim, sweep_skew_jacobi_trudi,
};
use schurzeta::qsym::{
    antipode, antipode_by_splits, antipode_schur_identity, essential, monomial, quasi_shuffle,
    realize, rho_n, schur_qsym, Composition,
};
use schurzeta::scalar::{Exponent, Scalar};
use schurzeta::shapes::{Partition, RibbonSpec, SkewShape, Tableau};
use schurzeta::specials::smzv_constant_exact;
use schurzeta::words::{
    check_duality_numeric, chen_anti_hook, dual_ribbon, ribbon_limit, ribbons_of_weight,
};
use schurzeta::zeta::{mzv_trunc, smzv_direct, smzv_trunc};

fn pt(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn report(name: &str, pass: bool, start: Instant, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!(
        "criterion {name}: {status} ({:.2}s){}{}",
        start.elapsed().as_secs_f64(),
        if detail.is_empty() { "" } else { " — " },
        detail
    );
    assert!(pass, "criterion {name} failed: {detail}");
}

#[test]
fn criterion_1_exact_pi_power_tables() {
    let start = Instant::now();
    let n3: [(&[usize], [(&str, &str); 4]); 3] = [
        (
            &[3],
            [
                ("31", "15120"),
                ("4009", "3405402000"),
                ("223199", "194896477400625"),
                ("2278383389", "1938427890852062610000"),
            ],
        ),
        (
            &[2, 1],
            [
                ("1", "840"),
                ("493", "5108103000"),
                ("86", "4331032831125"),
                ("116120483", "24230348635650782625000"),
            ],
        ),
        (
            &[1, 1, 1],
            [
                ("1", "5040"),
                ("1", "681080400"),
                ("2", "64965492466875"),
                ("38081", "48460697271301565250000"),
            ],
        ),
    ];
    let n4: [(&[usize], [(&str, &str); 4]); 5] = [
        (
            &[4],
            [
                ("127", "604800"),
                ("13739", "1136785104000"),
                ("1202645051", "1009597859818782609375"),
                ("3467913415992313", "27995618815818008860855350000000"),
            ],
        ),
        (
            &[3, 1],
            [
                ("239", "1814400"),
                ("62191", "62523180720000"),
                ("62572402", "3028793579456347828125"),
                ("2019988202341", "3999374116545429837265050000000"),
            ],
        ),
        (
            &[2, 2],
            [
                ("11", "302400"),
                ("113", "1838917080000"),
                ("14074", "43895559122555765625"),
                ("30650383", "15570422033269192914825000000"),
            ],
        ),
        (
            &[2, 1, 1],
            [
                ("11", "362880"),
                ("29", "1786376592000"),
                ("98642", "3028793579456347828125"),
                ("332561213", "3999374116545429837265050000000"),
            ],
        ),
        (
            &[1, 1, 1, 1],
            [
                ("1", "362880"),
                ("1", "12504636144000"),
                ("4", "432684797065192546875"),
                ("13067", "9331872938606002953618450000000"),
            ],
        ),
    ];
    let mut checked = 0;
    let mut failures = Vec::new();
    for (parts, cells) in n3.iter().chain(n4.iter()) {
        let lambda = pt(parts);
        for (k0, (num, den)) in cells.iter().enumerate() {
            let k = k0 + 1;
            let got = smzv_constant_exact(&lambda, 2 * k).unwrap();
            let want = BigRational::new(
                BigInt::from_str(num).unwrap(),
                BigInt::from_str(den).unwrap(),
            );
            if got.coeff != want || got.power != 2 * k * lambda.weight() {
                failures.push(format!("λ={lambda} k={k}: got {got}"));
            }
            checked += 1;
        }
    }
    let pass = failures.is_empty() && checked == 32 && start.elapsed().as_secs_f64() < 5.0;
    report(
        "1 (pi-power tables)",
        pass,
        start,
        &format!("32 table entries exact; {}", failures.join("; ")),
    );
}

#[test]
fn criterion_2_jacobi_trudi_battery() {
    let start = Instant::now();
    let reports = sweep_jacobi_trudi(6, &[1, 2, 3], 5);
    let failures: Vec<_> = reports.iter().filter(|r| !r.equal).collect();
    let detail = format!(
        "{} instances, {} failures{}",
        reports.len(),
        failures.len(),
        failures
            .first()
            .map(|r| format!("; first: {}", r.to_json()))
            .unwrap_or_default()
    );
    let pass = failures.is_empty() && start.elapsed().as_secs_f64() < 600.0;
    report("2 (straight Jacobi-Trudi, exact)", pass, start, &detail);
}

#[test]
fn criterion_3_skew_giambelli_dual_cauchy_rim() {
    let start = Instant::now();
    let mut failures: Vec<String> = Vec::new();
    let mut total = 0;

    let skew = sweep_skew_jacobi_trudi(&[1, 2, 3], 5);
    total += skew.len();
    failures.extend(skew.iter().filter(|r| !r.equal).map(|r| r.to_json()));

    let gia = sweep_giambelli(6, &[1, 2, 3], 4);
    total += gia.len();
    failures.extend(gia.iter().filter(|r| !r.equal).map(|r| r.to_json()));

    let dc = sweep_dual_cauchy(&[(1, 1), (1, 2), (2, 2), (2, 3)], &[1, 2], 3);
    total += dc.len();
    failures.extend(dc.iter().filter(|r| !r.equal).map(|r| r.to_json()));

    let rim = sweep_rim(5, &[1, 2, 3], 4);
    total += rim.len();
    failures.extend(rim.iter().filter(|r| !r.equal).map(|r| r.to_json()));

    // the §4.5 structure: 10 signed products against the 5×5 determinant
    let a: BTreeMap<i64, Exponent> = [(-1, 2i64), (0, 1), (1, 2), (2, 2)]
        .into_iter()
        .map(|(k, v)| (k, Exponent::Int(v)))
        .collect();
    let b: BTreeMap<i64, Exponent> = [(-2, 2i64), (-1, 1), (0, 2), (1, 1)]
        .into_iter()
        .map(|(k, v)| (k, Exponent::Int(v)))
        .collect();
    for n in 0..=4u32 {
        total += 1;
        let r = dual_cauchy(2, 3, &a, &b, n, n).unwrap();
        if !r.equal {
            failures.push(r.to_json());
        }
    }

    // negative fixture: X²_{(2,2),1} = 1/2^d − 1/2^a on the grid
    let lam = pt(&[2, 2]);
    for a in 1..=3i64 {
        for b in 1..=3i64 {
            for c in 1..=3i64 {
                for d in 1..=3i64 {
                    total += 1;
                    let t = Tableau::from_rows(
                        SkewShape::straight(lam.clone()),
                        &[a, b, c, d].map(Exponent::Int),
                    )
                    .unwrap();
                    let x1 = schurzeta::enumerate::pattern_sum(
                        &lam,
                        &t,
                        2,
                        RimKind::H,
                        PatternSubset::Intersecting,
                        10_000_000,
                    )
                    .unwrap();
                    let expect = Scalar::inv_power(2, &Exponent::Int(d))
                        - Scalar::inv_power(2, &Exponent::Int(a));
                    if x1 != expect || x1.is_zero() != (a == d) {
                        failures.push(format!("X2_(2,2),1 at ({a},{b},{c},{d})"));
                    }
                }
            }
        }
    }

    let detail = format!("{total} instances, {} failures", failures.len());
    let pass = failures.is_empty();
    report("3 (skew JT, Giambelli, dual Cauchy, rim sums)", pass, start, &detail);
}

#[test]
fn criterion_4_preceq_combinatorics() {
    let start = Instant::now();
    let mut ok = true;
    let mut detail = String::new();

    // (3,1): 12 elements matching the worked list, entries 1,10,100,1000
    let hook = SkewShape::straight(pt(&[3, 1]));
    let t31 = Tableau::from_rows(hook.clone(), &[1i64, 10, 100, 1000].map(Exponent::Int)).unwrap();
    let got: BTreeSet<Vec<i64>> = preceq_set(&hook, PreceqVariant::Direct)
        .iter()
        .map(|bs| {
            bs.sums(&t31)
                .iter()
                .map(|e| match e {
                    Exponent::Int(v) => *v,
                    _ => unreachable!(),
                })
                .collect()
        })
        .collect();
    let want: BTreeSet<Vec<i64>> = [
        vec![1, 10, 100, 1000],
        vec![11, 100, 1000],
        vec![1, 110, 1000],
        vec![1, 10, 1100],
        vec![111, 1000],
        vec![11, 1100],
        vec![1, 1110],
        vec![1, 10, 1000, 100],
        vec![11, 1000, 100],
        vec![1, 1010, 100],
        vec![1, 1000, 10, 100],
        vec![1, 1000, 110],
    ]
    .into_iter()
    .collect();
    if got != want {
        ok = false;
        detail.push_str("(3,1) direct list mismatch; ");
    }

    // its signed star expansion, 6 terms
    let star31: BTreeSet<(i8, Vec<i64>)> = preceq_set(&hook, PreceqVariant::Conjugate)
        .iter()
        .map(|bs| {
            let sums: Vec<i64> = bs
                .sums(&t31)
                .iter()
                .map(|e| match e {
                    Exponent::Int(v) => *v,
                    _ => unreachable!(),
                })
                .collect();
            (bs.sign(), sums)
        })
        .collect();
    let want_star31: BTreeSet<(i8, Vec<i64>)> = [
        (1, vec![1, 1000, 10, 100]),
        (-1, vec![1001, 10, 100]),
        (-1, vec![1, 1010, 100]),
        (1, vec![1, 10, 1000, 100]),
        (-1, vec![1, 10, 1100]),
        (1, vec![1, 10, 100, 1000]),
    ]
    .into_iter()
    .collect();
    if star31 != want_star31 {
        ok = false;
        detail.push_str("(3,1) star list mismatch; ");
    }

    // (2,1,1): 6 direct elements and the 12-term star expansion
    let col = SkewShape::straight(pt(&[2, 1, 1]));
    let t211 = Tableau::from_rows(col.clone(), &[1i64, 10, 100, 1000].map(Exponent::Int)).unwrap();
    let got211: BTreeSet<Vec<i64>> = preceq_set(&col, PreceqVariant::Direct)
        .iter()
        .map(|bs| {
            bs.sums(&t211)
                .iter()
                .map(|e| match e {
                    Exponent::Int(v) => *v,
                    _ => unreachable!(),
                })
                .collect()
        })
        .collect();
    let want211: BTreeSet<Vec<i64>> = [
        vec![1, 10, 100, 1000],
        vec![11, 100, 1000],
        vec![1, 110, 1000],
        vec![1, 100, 10, 1000],
        vec![1, 100, 1010],
        vec![1, 100, 1000, 10],
    ]
    .into_iter()
    .collect();
    if got211 != want211 {
        ok = false;
        detail.push_str("(2,1,1) direct list mismatch; ");
    }

    let star211: BTreeSet<(i8, Vec<i64>)> = preceq_set(&col, PreceqVariant::Conjugate)
        .iter()
        .map(|bs| {
            let sums: Vec<i64> = bs
                .sums(&t211)
                .iter()
                .map(|e| match e {
                    Exponent::Int(v) => *v,
                    _ => unreachable!(),
                })
                .collect();
            (bs.sign(), sums)
        })
        .collect();
    let want_star211: BTreeSet<(i8, Vec<i64>)> = [
        (1, vec![1, 100, 1000, 10]),
        (-1, vec![101, 1000, 10]),
        (-1, vec![1, 1100, 10]),
        (-1, vec![1, 100, 1010]),
        (1, vec![1101, 10]),
        (1, vec![101, 1010]),
        (1, vec![1, 1110]),
        (1, vec![1, 100, 10, 1000]),
        (-1, vec![101, 10, 1000]),
        (-1, vec![1, 110, 1000]),
        (1, vec![1, 10, 100, 1000]),
        (-1, vec![1, 10, 1100]),
    ]
    .into_iter()
    .collect();
    if star211 != want_star211 {
        ok = false;
        detail.push_str("(2,1,1) star list mismatch; ");
    }

    report("4 (reading-word combinatorics)", ok, start, detail.trim_end_matches("; "));
}

#[test]
fn criterion_5_qsym_hopf_suite() {
    let start = Instant::now();
    let mut failures: Vec<String> = Vec::new();
    let mut total = 0usize;

    // S² = id and the two antipode formulas agree, weight ≤ 6
    for w in 1..=6u32 {
        for g in Composition::all_of_weight(w) {
            total += 1;
            let m = monomial(&g);
            let s = antipode(&m);
            if antipode(&s) != m {
                failures.push(format!("S² fails at {g}"));
            }
            if s != antipode_by_splits(&m) {
                failures.push(format!("antipode formulas differ at {g}"));
            }
        }
    }

    // three-way antipode identity on ribbons and straight shapes, |ν| ≤ 5
    let mut shapes: Vec<SkewShape> = Vec::new();
    for n in 1..=5usize {
        for spec in ribbons_of_weight(n) {
            shapes.push(spec.shape());
        }
        for p in Partition::all_of_weight(n) {
            shapes.push(SkewShape::straight(p));
        }
    }
    shapes.sort();
    shapes.dedup();
    for shape in &shapes {
        let cells = shape.cell_count();
        let mut idx = vec![0usize; cells];
        loop {
            let entries: Vec<u32> = idx.iter().map(|&v| [1u32, 2, 3][v]).collect();
            let t = Tableau::from_rows(shape.clone(), &entries).unwrap();
            total += 1;
            if !antipode_schur_identity(&t).unwrap() {
                failures.push(format!("antipode identity fails on {shape} {entries:?}"));
            }
            let mut k = 0;
            loop {
                if k == cells {
                    break;
                }
                idx[k] += 1;
                if idx[k] < 3 {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == cells {
                break;
            }
        }
    }

    // φ_N is multiplicative on products of basis elements, weight ≤ 4, N = 4
    let batt: Vec<Composition> = (1..=4u32).flat_map(Composition::all_of_weight).collect();
    for a in &batt {
        for b in &batt {
            total += 1;
            let prod = quasi_shuffle(&monomial(a), &monomial(b));
            if realize(&prod, 4, 8) != realize(&monomial(a), 4, 8).mul(&realize(&monomial(b), 4, 8))
            {
                failures.push(format!("φ_N multiplicativity fails at {a} ∗ {b}"));
            }
        }
    }

    // ρ_N intertwining with truncated zeta values
    for w in 1..=4u32 {
        for g in Composition::all_of_weight(w) {
            let args: Vec<Exponent> = g.parts().iter().map(|&p| Exponent::Int(p as i64)).collect();
            for n in 1..=4usize {
                total += 2;
                if Scalar::Exact(rho_n(&monomial(&g), n)) != mzv_trunc(&args, n as u32) {
                    failures.push(format!("ρ_{n}(M_{g})"));
                }
                if Scalar::Exact(rho_n(&essential(&g), n))
                    != schurzeta::zeta::mzsv_trunc(&args, n as u32)
                {
                    failures.push(format!("ρ_{n}(E_{g})"));
                }
            }
        }
    }
    for w in 1..=4usize {
        for p in Partition::all_of_weight(w) {
            let s = SkewShape::straight(p);
            let vals: Vec<u32> = (0..s.cell_count()).map(|k| [2u32, 1, 3][k % 3]).collect();
            let t = Tableau::from_rows(s.clone(), &vals).unwrap();
            let te = Tableau::from_rows(
                s,
                &vals.iter().map(|&v| Exponent::Int(v as i64)).collect::<Vec<_>>(),
            )
            .unwrap();
            for n in 1..=4u32 {
                total += 1;
                if Scalar::Exact(rho_n(&schur_qsym(&t), n as usize)) != smzv_trunc(&te, n) {
                    failures.push(format!("ρ intertwine fails on {}", te.shape()));
                }
            }
        }
    }

    let elapsed_ok = start.elapsed().as_secs_f64() < 300.0;
    let detail = format!(
        "{total} checks, {} failures{}",
        failures.len(),
        failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
    );
    report("5 (qsym Hopf suite)", failures.is_empty() && elapsed_ok, start, &detail);
}

#[test]
fn criterion_6_duality_numerics() {
    let start = Instant::now();
    let mut failures: Vec<String> = Vec::new();
    let tol = 1e-4;

    let tableau_of = |spec: &RibbonSpec, entries: &[u32]| {
        let path = spec.path_cells();
        let map: BTreeMap<_, _> = path.into_iter().zip(entries.iter().copied()).collect();
        Tableau::new(spec.shape(), map).unwrap()
    };

    // the two displayed dual pairs
    let checks: Vec<(RibbonSpec, Vec<u32>)> = vec![
        (
            RibbonSpec::from_shape(
                &SkewShape::new(pt(&[3, 3, 2]), pt(&[2, 1])).unwrap(),
            )
            .unwrap(),
            vec![2, 2, 1, 2, 2],
        ),
        (
            RibbonSpec::from_shape(
                &SkewShape::new(pt(&[5, 4, 4, 2, 1]), pt(&[3, 3, 1])).unwrap(),
            )
            .unwrap(),
            vec![2, 3, 1, 2, 2, 1, 2, 1, 2],
        ),
        // self-dual square-free example
        (
            RibbonSpec::from_shape(&SkewShape::new(pt(&[2, 2]), pt(&[1])).unwrap()).unwrap(),
            vec![2, 2, 2],
        ),
    ];
    for (spec, entries) in checks {
        let step = Instant::now();
        let t = tableau_of(&spec, &entries);
        let (dspec, dt) = dual_ribbon(&spec, &t).unwrap().expect("dual is ribbon");
        match check_duality_numeric((&spec, &t), (&dspec, &dt), tol) {
            Ok(r) if r.pass && r.n_used <= 1_000_000 => {}
            Ok(r) => failures.push(format!("{spec}: diff {}", r.abs_diff)),
            Err(e) => failures.push(format!("{spec}: {e}")),
        }
        if step.elapsed().as_secs_f64() >= 30.0 {
            failures.push(format!("{spec}: check exceeded 30 s"));
        }
    }

    // the linear relation ζ(3,2)+ζ(5) = ζ(1,4)+ζ(1,2,2)+ζ(3,2)+ζ(2,1,2)
    {
        let step = Instant::now();
        let n = 1_000_000u32;
        let z = |args: &[f64]| {
            mzv_trunc(
                &args.iter().map(|&x| Exponent::Real(x)).collect::<Vec<_>>(),
                n,
            )
            .to_f64()
        };
        let lhs = z(&[3.0, 2.0]) + z(&[5.0]);
        let rhs = z(&[1.0, 4.0]) + z(&[1.0, 2.0, 2.0]) + z(&[3.0, 2.0]) + z(&[2.0, 1.0, 2.0]);
        if (lhs - rhs).abs() > tol {
            failures.push(format!("linear relation off by {}", (lhs - rhs).abs()));
        }
        if step.elapsed().as_secs_f64() >= 30.0 {
            failures.push("linear relation exceeded 30 s".into());
        }
    }

    // Chen values for (p,q) up to (2,2)
    for (p, q) in [(1usize, 1usize), (1, 2), (2, 1), (2, 2)] {
        let step = Instant::now();
        let (_spec, t) = chen_anti_hook(p, q).unwrap();
        let lhs = ribbon_limit(&t, 1_000_000).unwrap();
        let mut binom = 1f64;
        for i in 0..p {
            binom = binom * (p + q - i) as f64 / (i + 1) as f64;
        }
        let zeta = mzv_trunc(&[Exponent::Real((p + q + 1) as f64)], 1_000_000).to_f64();
        if (lhs - binom * zeta).abs() > tol {
            failures.push(format!(
                "Chen ({p},{q}): {lhs} vs {} (diff {:.2e})",
                binom * zeta,
                (lhs - binom * zeta).abs()
            ));
        }
        if step.elapsed().as_secs_f64() >= 30.0 {
            failures.push(format!("Chen ({p},{q}) exceeded 30 s"));
        }
    }

    let detail = failures.join("; ");
    report("6 (duality numerics ≤ 1e-4)", failures.is_empty(), start, &detail);
}

#[test]
fn criterion_7_oracle_equivalences() {
    let start = Instant::now();
    let mut failures: Vec<String> = Vec::new();
    let cap = 100_000_000u128;

    for w in 1..=4usize {
        for p in Partition::all_of_weight(w) {
            let shape = SkewShape::straight(p.clone());
            for n in 1..=3u32 {
                for kind in [RimKind::H, RimKind::E] {
                    let patterns = lattice_patterns(&p, n, kind, cap).unwrap();
                    // non-intersecting assignments coincide with the SSYT
                    // fillings as cell→value maps: equality for EVERY choice
                    // of entries, rational included
                    let mut nonx: Vec<BTreeMap<_, u32>> = patterns
                        .iter()
                        .filter(|pat| !pat.intersecting)
                        .map(|pat| pat.assignment.clone())
                        .collect();
                    nonx.sort();
                    if patterns
                        .iter()
                        .any(|pat| !pat.intersecting && pat.sign != 1)
                    {
                        failures.push(format!("non-crossing sign ≠ +1 on {p}"));
                    }
                    let mut fillings: Vec<BTreeMap<_, u32>> = ssyt_iter(&shape, n)
                        .map(|m| m.entries().clone())
                        .collect();
                    fillings.sort();
                    if nonx != fillings {
                        failures.push(format!("LGV mismatch λ={p} N={n} {kind:?}"));
                    }
                    // intersecting patterns cancel per (content, row) class,
                    // which is the vanishing statement for every diagonal
                    // assignment simultaneously
                    let mut classes: BTreeMap<Vec<(i64, u32)>, i64> = BTreeMap::new();
                    for pat in patterns.iter().filter(|pat| pat.intersecting) {
                        let mut key: Vec<(i64, u32)> = pat
                            .assignment
                            .iter()
                            .map(|(&(i, j), &row)| (j as i64 - i as i64, row))
                            .collect();
                        key.sort();
                        *classes.entry(key).or_insert(0) += pat.sign as i64;
                    }
                    if classes.values().any(|&v| v != 0) {
                        failures.push(format!("intersecting class sum ≠ 0 on λ={p} N={n} {kind:?}"));
                    }
                }
            }

            // scalar cross-checks: exact on integers, float on rationals
            let ints: Vec<Exponent> = (0..shape.cell_count())
                .map(|k| Exponent::Int([2, 1, 3, 1][k % 4]))
                .collect();
            let t = Tableau::from_rows(shape.clone(), &ints).unwrap();
            for n in 1..=3u32 {
                let direct = smzv_direct(&t, n, 1 << 24).unwrap();
                for kind in [RimKind::H, RimKind::E] {
                    let x0 = schurzeta::enumerate::pattern_sum(
                        &p,
                        &t,
                        n,
                        kind,
                        PatternSubset::NonIntersecting,
                        cap,
                    )
                    .unwrap();
                    if x0 != direct {
                        failures.push(format!("exact LGV sum λ={p} N={n} {kind:?}"));
                    }
                }
            }
            let rats: Vec<Exponent> = (0..shape.cell_count())
                .map(|k| Exponent::Real([1.5, 2.25, 7.0 / 3.0, 1.0][k % 4]))
                .collect();
            let tr = Tableau::from_rows(shape.clone(), &rats).unwrap();
            for n in 1..=3u32 {
                let direct = smzv_direct(&tr, n, 1 << 24).unwrap().to_f64();
                for kind in [RimKind::H, RimKind::E] {
                    let x0 = schurzeta::enumerate::pattern_sum(
                        &p,
                        &tr,
                        n,
                        kind,
                        PatternSubset::NonIntersecting,
                        cap,
                    )
                    .unwrap()
                    .to_f64();
                    if (x0 - direct).abs() > 1e-12 * direct.abs().max(1.0) {
                        failures.push(format!("rational LGV sum λ={p} N={n} {kind:?}"));
                    }
                }
            }

            // exact vanishing of the intersecting sums on diagonal grids
            for diag in diagonal_grids(&shape, &[1, 2, 3]).into_iter().take(9) {
                let td = Tableau::diagonal(shape.clone(), &diag).unwrap();
                for n in 1..=3u32 {
                    for kind in [RimKind::H, RimKind::E] {
                        let x1 = schurzeta::enumerate::pattern_sum(
                            &p,
                            &td,
                            n,
                            kind,
                            PatternSubset::Intersecting,
                            cap,
                        )
                        .unwrap();
                        if !x1.is_zero() {
                            failures.push(format!("X/Y vanishing λ={p} N={n} {kind:?}"));
                        }
                    }
                }
            }
        }
    }

    let detail = format!(
        "{}",
        failures.first().cloned().unwrap_or_else(|| "all oracle equivalences exact".into())
    );
    report("7 (lattice-pattern oracles)", failures.is_empty(), start, &detail);
}
