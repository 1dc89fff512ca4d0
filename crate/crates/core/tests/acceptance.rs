//! Acceptance suite: one PASS/FAIL line per criterion, all at exact
//! tolerance. Run with `cargo test -p qpart-core --test acceptance`.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestRunner};
use qpart_core::builders::{
    distinct_even_length_gf, distinct_odd_length_gf, gauss_side, lemma_side, slater_lhs, slater_rhs, theta_product,
    theta_sum, LemmaSide, Side,
};
use qpart_core::classes::{
    andrews_d_table, class_counts, decompose, members_of_weight, signed_count, signed_counts_with, SignConvention,
};
use qpart_core::partition::{enumerate_all, is_initial_k_repetition};
use qpart_core::verify::{parity_check, resolve_slater9};
use qpart_core::{ClassId, QuadraticIndicator, Sign, SignedCount, Status, TheoremId, TruncatedSeries};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn check_theorem(id: TheoremId, order: usize, limit: usize) -> Result<Status, String> {
    let r = qpart_core::verify(id, order, limit).map_err(|e| format!("{id}: {e}"))?;
    ensure(r.status.is_ok(), || format!("{id} failed: {}", r.notes))?;
    Ok(r.status)
}

/// `{n <= max: value}` from evaluating the indicator's quadratic directly.
fn quadratic_support(ind: &QuadraticIndicator, max: i64) -> BTreeMap<u64, i64> {
    let mut out = BTreeMap::new();
    for j in -max..=max {
        let e = ind.exponent(j);
        if (0..=max).contains(&e) {
            *out.entry(e as u64).or_insert(0) += ind.rule().sign(j, e).as_i64();
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

fn nonzero(diffs: impl Iterator<Item = (u64, i64)>) -> BTreeMap<u64, i64> {
    diffs.filter(|&(_, d)| d != 0).collect()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for k in 2..=8 {
        let (l, r) = (slater_lhs(k, 300).unwrap(), slater_rhs(k, 300).unwrap());
        if let Some(m) = l.first_mismatch(&r, 300).unwrap() {
            return Err(format!("slater {k} differs at q^{}", m.exponent));
        }
    }
    let which = match resolve_slater9(200).unwrap() {
        (true, false) => "mixed-sign product",
        (false, true) => "all-minus product",
        (a, b) => return Err(format!("slater 9 must match exactly one variant, got mixed-sign={a} all-minus={b}")),
    };
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("k=2..8 equal to q^299; k=9 sum side matches the {which} to q^199; {} ms", elapsed.as_millis()))
}

fn criterion_2() -> Outcome {
    for (l, r, name) in [(LemmaSide::Lhs12, LemmaSide::Rhs12, "odd"), (LemmaSide::Lhs13, LemmaSide::Rhs13, "even")] {
        let (a, b) = (lemma_side(l, 300).unwrap(), lemma_side(r, 300).unwrap());
        if let Some(m) = a.first_mismatch(&b, 300).unwrap() {
            return Err(format!("{name}-length identity differs at q^{}", m.exponent));
        }
    }
    let (odd, even) = (distinct_odd_length_gf(41), distinct_even_length_gf(41));
    for n in 0..=40u32 {
        let (mut o, mut e) = (0i64, 0i64);
        for p in enumerate_all(n).filter(|p| p.is_distinct()) {
            if p.len() % 2 == 1 {
                o += 1
            } else {
                e += 1
            }
        }
        ensure(odd.coeff(n as usize) == BigInt::from(o) && even.coeff(n as usize) == BigInt::from(e), || {
            format!("length counts differ at n={n}")
        })?;
    }
    Ok("both sides equal to q^299; odd/even length builders match enumeration for n <= 40".into())
}

fn criterion_3() -> Outcome {
    let mut triples = 0;
    for b in 2..=16 {
        for a in 1..b {
            for s in [Sign::Plus, Sign::Minus] {
                let (sum, prod) = (theta_sum(b, a, s, 200).unwrap(), theta_product(b, a, s, 200).unwrap());
                ensure(sum == prod, || format!("theta ({b},{a},{s}) differs"))?;
                triples += 1;
            }
        }
    }
    let (l, r) = (gauss_side(Side::Lhs, 300).unwrap(), gauss_side(Side::Rhs, 300).unwrap());
    ensure(l == r, || "gauss sides differ".into())?;
    Ok(format!("{triples} theta triples equal to q^199; Gauss sides equal to q^299"))
}

fn criterion_4() -> Outcome {
    let mut diffs = Vec::new();
    for n in 0..=50u32 {
        let d: i64 = enumerate_all(n).filter(|p| p.is_distinct()).map(|p| if p.len() % 2 == 0 { 1 } else { -1 }).sum();
        diffs.push((u64::from(n), d));
    }
    let got = nonzero(diffs.into_iter());
    let want = quadratic_support(&TheoremId::LegendrePentagonal.indicator().unwrap(), 50);
    let listed: BTreeSet<u64> = [0, 1, 2, 5, 7, 12, 15, 22, 26, 35, 40].into();
    ensure(got == want, || format!("enumeration {got:?} vs prediction {want:?}"))?;
    ensure(got.keys().copied().collect::<BTreeSet<_>>() == listed, || format!("support {:?}", got.keys()))?;
    check_theorem(TheoremId::LegendrePentagonal, 300, 51)?;
    Ok(format!("d_e - d_o nonzero exactly on {:?} with signs {:?}", listed, got.values().collect::<Vec<_>>()))
}

fn criterion_5() -> Outcome {
    let table = andrews_d_table(40);
    for (&(m, n), &v) in &table {
        let want = if n == (m * (m + 1) / 2) as u64 {
            if m % 2 == 0 {
                1
            } else {
                -1
            }
        } else {
            0
        };
        ensure(v == want, || format!("cell (m={m}, n={n}) is {v}, expected {want}"))?;
    }
    for j in 0..=8usize {
        ensure(table.contains_key(&(j, (j * (j + 1) / 2) as u64)), || format!("cell for j={j} missing"))?;
    }
    check_theorem(TheoremId::AndrewsD, 300, 41)?;
    Ok(format!("{} cells to n=40; statistic: parts of multiplicity one", table.len()))
}

fn criterion_6() -> Outcome {
    let even = class_counts(ClassId::BEven, 40);
    let odd = class_counts(ClassId::BOdd, 40);
    let got = nonzero((0..=40).map(|n| (n as u64, even[n] as i64 - odd[n] as i64)));
    let triangular: BTreeMap<u64, i64> = [0, 1, 3, 6, 10, 15, 21, 28, 36].into_iter().map(|t| (t, 1)).collect();
    ensure(got == triangular, || format!("difference support {got:?}"))?;
    for n in 0..=40u32 {
        let brute = enumerate_all(n).filter(|p| is_initial_k_repetition(p, 2)).count() as u64;
        ensure(brute == even[n as usize] + odd[n as usize], || format!("union count differs at n={n}"))?;
    }
    check_theorem(TheoremId::ThmB, 300, 41)?;
    Ok("difference +1 exactly at triangular numbers <= 40; b-even + b-odd = initial 2-repetitions for n <= 40".into())
}

fn criterion_7() -> Outcome {
    let listed: [&[u64]; 8] = [
        &[0, 1, 11, 14, 34],
        &[0, 1, 7, 10, 22, 27],
        &[0, 1, 3, 6, 10, 15, 21, 28, 36],
        &[0, 1, 4, 7, 13, 18, 27, 34],
        &[0, 1, 3, 6, 10, 15, 21, 28, 36],
        &[0, 5, 7, 22, 26],
        &[0, 4, 12, 24, 40],
        &[0, 1, 11, 14, 34, 39],
    ];
    let mut notes = Vec::new();
    for c in 1..=8u32 {
        let id = TheoremId::ThmC(c);
        let class = id.class().unwrap();
        let status = check_theorem(id, 300, 41)?;
        let convention = if c == 7 { SignConvention::OddTail } else { SignConvention::Structural };
        let counts = signed_counts_with(class, 40, convention);
        let got = nonzero(counts.iter().enumerate().map(|(n, s)| (n as u64, s.difference())));
        let want = quadratic_support(&id.indicator().unwrap(), 40);
        ensure(got == want, || format!("c{c}: enumeration {got:?} vs quadratic {want:?}"))?;
        let support: Vec<u64> = got.keys().copied().collect();
        if support != listed[c as usize - 1] {
            notes.push(format!("c{c} support {support:?} differs from the listed {:?}", listed[c as usize - 1]));
        }
        if status == Status::PassWithErratum {
            notes.push(format!("thm-c{c} pass-with-erratum (odd parts >= 2j+3 carry the sign)"));
        }
    }
    Ok(format!("all eight three-way checks agree; {}", notes.join("; ")))
}

fn listing(class: ClassId, n: u64) -> Vec<String> {
    members_of_weight(class, n).iter().map(|(p, _)| p.to_string()).collect()
}

fn criterion_8() -> Outcome {
    let c4 = listing(ClassId::C4, 7);
    ensure(c4 == ["7", "6,1", "5,2", "5,1^2", "4,3", "4,2,1", "3,2,1^2"], || format!("c4(7) {c4:?}"))?;
    let c4_even: Vec<String> =
        members_of_weight(ClassId::C4, 7).iter().filter(|(_, d)| d.is_even()).map(|(p, _)| p.to_string()).collect();
    ensure(c4_even == ["6,1", "5,2", "4,3", "3,2,1^2"], || format!("c4,e(7) {c4_even:?}"))?;
    ensure(signed_count(ClassId::C4, 7) == SignedCount { even_count: 4, odd_count: 3 }, || "c4(7) counts".into())?;

    let c8 = listing(ClassId::C8, 39);
    ensure(c8 == ["28,3,2^4", "9,5,4^4,2^4,1", "7,5,4^4,3,2^4"], || format!("c8(39) {c8:?}"))?;
    ensure(signed_count(ClassId::C8, 39) == SignedCount { even_count: 2, odd_count: 1 }, || "c8(39) counts".into())?;

    let c2 = signed_count(ClassId::C2, 10);
    ensure(c2.difference() == 1, || format!("c2(10) difference {}", c2.difference()))?;
    let listed = ["10", "8,2", "8,1^2", "6,4", "6,2,1^2", "6,1^4", "5^2", "4,2,1^4", "4,1^6", "2,1^8", "1^10"];
    let missing: Vec<&str> =
        listed.iter().copied().filter(|s| decompose(&s.parse().unwrap(), ClassId::C2).unwrap().is_none()).collect();
    ensure(missing == ["5^2"], || format!("listed c2(10) entries outside the class: {missing:?}"))?;
    Ok(format!(
        "c4(7) list and (4,3); c8(39) list and (2,1); c2(10) difference 1 with {} structural members against {} listed (5^2 is not a member)",
        c2.total(),
        listed.len()
    ))
}

fn criterion_9() -> Outcome {
    let r = parity_check(61);
    ensure(r.status == Status::Pass, || r.notes.clone())?;
    let counts = class_counts(ClassId::C7, 61);
    let odd: Vec<u64> = (1..=61).step_by(2).map(|n| counts[n]).collect();
    ensure(odd.iter().all(|c| c % 2 == 0), || format!("{odd:?}"))?;
    Ok(format!("c7(n) even for odd n <= 61 (c7(61) = {})", counts[61]))
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        rng_seed: RngSeed::Fixed(20_240_611),
        failure_persistence: None,
        ..Config::default()
    })
}

fn series_strategy() -> impl Strategy<Value = (TruncatedSeries, TruncatedSeries, TruncatedSeries)> {
    (1usize..=64)
        .prop_flat_map(|n| {
            let v = || prop::collection::vec(-9i64..=9, n);
            (v(), v(), v())
        })
        .prop_map(|(a, b, c)| {
            (TruncatedSeries::from_i64s(&a), TruncatedSeries::from_i64s(&b), TruncatedSeries::from_i64s(&c))
        })
}

fn criterion_10() -> Outcome {
    let axioms = runner(256)
        .run(&series_strategy(), |(a, b, c)| {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a + &(-&a)).is_zero());
            Ok(())
        })
        .map_err(|e| format!("ring axioms: {e}"));
    let inverse = runner(256)
        .run(&series_strategy(), |(mut a, _, _)| {
            let mut v = a.into_coeffs();
            v[0] = 1.into();
            a = TruncatedSeries::from_coeffs(v);
            prop_assert_eq!(&a * &a.invert().unwrap(), TruncatedSeries::one(a.order()));
            Ok(())
        })
        .map_err(|e| format!("invert: {e}"));
    let neg_q = runner(256)
        .run(&series_strategy(), |(a, b, _)| {
            prop_assert_eq!((&a * &b).substitute_neg_q(), &a.substitute_neg_q() * &b.substitute_neg_q());
            Ok(())
        })
        .map_err(|e| format!("q -> -q: {e}"));
    axioms?;
    inverse?;
    neg_q?;

    let mut classes = ClassId::all();
    classes.push(ClassId::InitK(3));
    let mut members = 0usize;
    for class in &classes {
        for n in 0..=40u32 {
            let mut oracle = BTreeSet::new();
            let mut predicate = BTreeSet::new();
            for p in enumerate_all(n) {
                let f = common::fits(&p, *class);
                ensure(f.len() <= 1, || format!("{class}: {p} fits several parameters"))?;
                oracle.extend(f.first().map(|&(j, s)| (p.parts(), j, s)));
                let d = decompose(&p, *class).map_err(|e| e.to_string())?;
                predicate.extend(d.map(|d| (p.parts(), d.parameter, d.signed_statistic)));
            }
            let generated = members_of_weight(*class, u64::from(n));
            let gen_set: BTreeSet<_> =
                generated.iter().map(|(p, d)| (p.parts(), d.parameter, d.signed_statistic)).collect();
            ensure(gen_set.len() == generated.len(), || format!("{class}({n}) generated twice"))?;
            ensure(oracle == predicate && oracle == gen_set, || format!("{class}({n}) disagrees"))?;
            members += generated.len();
        }
    }
    Ok(format!(
        "ring axioms, invert round-trip, q -> -q homomorphism (256 seeded cases each); generator, predicate and \
         independent oracle agree on {members} members of {} classes for n <= 40 with unique decompositions",
        classes.len()
    ))
}

#[test]
fn acceptance() {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let results: Vec<(u32, Outcome)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria.iter().map(|&(n, f)| (n, s.spawn(f))).collect();
        handles.into_iter().map(|(n, h)| (n, h.join().unwrap_or_else(|_| Err("panicked".into())))).collect()
    });
    // written to the raw handle so the lines show up without --nocapture
    let mut err = std::io::stderr().lock();
    let mut failed = Vec::new();
    for (n, r) in &results {
        let line = match r {
            Ok(detail) => format!("PASS criterion {n}: {detail}"),
            Err(why) => {
                failed.push(*n);
                format!("FAIL criterion {n}: {why}")
            }
        };
        writeln!(err, "{line}").unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
