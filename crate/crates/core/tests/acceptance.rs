//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see them all).
//!
//! Exact criteria compare reduced rationals or canonical polynomials with
//! zero tolerance; quadrature criteria use the tolerances pinned in
//! `mneimneh::quadrature`. The `oracle` module at the bottom re-derives
//! key values by raw direct summation, independent of the library's
//! evaluation paths.

use std::time::Instant;

use mneimneh::identity_catalog::{
    self, conjecture_scan, default_samples, hsq_consistency, lhs_eval, rhs_eval, IdentityId, Mode,
    Params,
};
use mneimneh::nested_sums::{
    chain_sum_stirling_bell, chain_sum_weighted, mhs, mhss, shift_identity_rhs, shifted_mhss,
    IndexVector,
};
use mneimneh::polyalg::series::TruncatedSeries;
use mneimneh::quadrature::{
    check_lemma21, check_lemma22, check_sec5_representation, LEMMA21_TOL, LEMMA22_EXTENSION_TOL,
    LEMMA22_TOL, SEC5_DEFAULT_XY, SEC5_TOL,
};
use mneimneh::rational::{parse_rat, rat, rat_int, Rat};
use mneimneh::report::Status;
use mneimneh::sequences::SequenceTables;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn conclude(criterion: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(info) => println!("ACCEPTANCE {criterion}: PASS ({info})"),
        Err(why) => {
            println!("ACCEPTANCE {criterion}: FAIL ({why})");
            panic!("{criterion} failed: {why}");
        }
    }
}

fn symbolic_suite_ids() -> Vec<IdentityId> {
    let mut ids = vec![IdentityId::MneimnehP, IdentityId::MneimnehXy];
    ids.extend((1..=5).map(IdentityId::ThmBell));
    ids.extend([
        IdentityId::TmgSquare,
        IdentityId::ThmZ,
        IdentityId::CorAlt,
        IdentityId::CorAltP,
        IdentityId::CorH2Ord,
        IdentityId::CorHsq,
    ]);
    ids
}

#[test]
fn criterion_1_symbolic_identity_suite() {
    let started = Instant::now();
    let mut tables = SequenceTables::new();
    let mut checks = 0usize;
    let mut failures: Vec<String> = Vec::new();
    for id in symbolic_suite_ids() {
        for n in 1..=25 {
            let report = identity_catalog::verify(&mut tables, &id, n, Mode::Symbolic, None);
            checks += 1;
            if report.status != Status::Verified {
                failures.push(format!("{id} n={n}"));
            }
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    let outcome = if !failures.is_empty() {
        Err(format!("{} of {checks} failed: {:?}", failures.len(), &failures[..failures.len().min(5)]))
    } else if elapsed > 120.0 {
        Err(format!("all {checks} exact but runtime {elapsed:.1}s exceeds 120s"))
    } else {
        Ok(format!("{checks} structural equalities, {elapsed:.2}s"))
    };
    conclude("criterion 1 (symbolic identity suite, n<=25)", outcome);
}

#[test]
fn criterion_2_conjecture_scan() {
    let mut tables = SequenceTables::new();
    let mut symbolic = 0usize;
    let mut pointwise = 0usize;
    let mut failures: Vec<String> = Vec::new();
    let mut ids: Vec<IdentityId> = (1..=5).map(IdentityId::ThmBell).collect();
    ids.push(IdentityId::ThmZ);
    for id in &ids {
        for report in conjecture_scan(&mut tables, id, 25) {
            match report.mode {
                Mode::Symbolic => symbolic += 1,
                Mode::Pointwise => pointwise += 1,
            }
            if report.status != Status::Verified {
                failures.push(format!(
                    "{} n={} {} [{}]",
                    report.id,
                    report.n,
                    report.mode,
                    report.params.unwrap_or_default()
                ));
            }
        }
    }
    assert_eq!(default_samples().len(), 8, "published sample set must have 8 points");
    let expected_pointwise = ids.len() * 8 * 10;
    let outcome = if !failures.is_empty() {
        Err(format!("{} failed: {:?}", failures.len(), &failures[..failures.len().min(5)]))
    } else if pointwise != expected_pointwise {
        Err(format!("expected {expected_pointwise} pointwise corroborations, ran {pointwise}"))
    } else {
        Ok(format!(
            "per-n symbolic proof instances: {symbolic}; pointwise corroborations at 8 \
             constraint-violating samples, n<=10: {pointwise}"
        ))
    };
    conclude("criterion 2 (conjecture scan, n<=25)", outcome);
}

#[test]
fn criterion_3_chain_sum_reduction() {
    let started = Instant::now();
    let mut tables = SequenceTables::new();
    let weights = [rat_int(0), rat_int(1), rat(1, 2), rat(-1, 3), rat_int(2)];
    let mut checks = 0usize;
    let mut failures: Vec<String> = Vec::new();
    for n in 1..=12 {
        for p in 1..=4 {
            for w in &weights {
                let direct = chain_sum_weighted(n, p, w);
                let expanded = chain_sum_stirling_bell(&mut tables, n, p, w);
                checks += 1;
                if direct != expanded {
                    failures.push(format!("chain n={n} p={p} w={w}"));
                }
                // consistency with the Bell-weighted binomial sum at two
                // (x, y) scalings realizing this w = y/(x+y)
                for scale in [rat_int(1), rat_int(3)] {
                    let x = (Rat::one() - w) * &scale;
                    let y = w * &scale;
                    let params = Params::from_xy(x.clone(), y.clone());
                    let lhs = lhs_eval(&mut tables, &IdentityId::ThmBell(p), n, &params).unwrap();
                    let rhs =
                        rhs_eval(&mut tables, &IdentityId::ChainReduction(p), n, &params).unwrap();
                    let front = Rat::from(tables.factorial(p)) * (&x + &y).pow(n as i32);
                    checks += 1;
                    if lhs != rhs || rhs != front * &direct {
                        failures.push(format!("bell-consistency n={n} p={p} w={w} scale={scale}"));
                    }
                }
            }
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    let outcome = if !failures.is_empty() {
        Err(format!("{} failed: {:?}", failures.len(), &failures[..failures.len().min(5)]))
    } else if elapsed > 60.0 {
        Err(format!("exact but runtime {elapsed:.1}s exceeds 60s"))
    } else {
        Ok(format!("{checks} exact equalities, {elapsed:.2}s"))
    };
    conclude("criterion 3 (chain-sum reduction, n<=12, p<=4)", outcome);
}

#[test]
fn criterion_4_shift_identity_suite() {
    let started = Instant::now();
    let mut vectors: Vec<IndexVector> = Vec::new();
    for r in 1..=3usize {
        let mut stack = vec![Vec::new()];
        for _ in 0..r {
            let mut next = Vec::new();
            for prefix in &stack {
                for part in 1..=3u32 {
                    let mut v = prefix.clone();
                    v.push(part);
                    next.push(v);
                }
            }
            stack = next;
        }
        vectors.extend(stack.into_iter().map(IndexVector::new));
    }
    let mut checks = 0usize;
    let mut failures = 0usize;
    for k in &vectors {
        for n in 1..=10 {
            for l in 0..=5 {
                checks += 1;
                if shifted_mhss(n, k, l) != shift_identity_rhs(n, k, l) {
                    failures += 1;
                }
            }
        }
    }
    let elapsed = started.elapsed().as_secs_f64();
    let outcome = if failures > 0 {
        Err(format!("{failures} of {checks} failed"))
    } else if checks < 2000 {
        Err(format!("only {checks} cases generated, expected ~2340"))
    } else if elapsed > 60.0 {
        Err(format!("exact but runtime {elapsed:.1}s exceeds 60s"))
    } else {
        Ok(format!("{checks} exact equalities over 39 compositions, {elapsed:.2}s"))
    };
    conclude("criterion 4 (shift-identity oracle suite)", outcome);
}

#[test]
fn criterion_5_structural_bridges() {
    let mut tables = SequenceTables::new();
    let mut checks = 0usize;
    let mut failures: Vec<String> = Vec::new();
    let record = |ok: bool, what: String, checks: &mut usize, failures: &mut Vec<String>| {
        *checks += 1;
        if !ok {
            failures.push(what);
        }
    };

    // s(n,k) = (n-1)! * mhs(n-1, {1}_(k-1)) and mhss(n, {1}_m) = Y_m(n)/m!
    for n in 1..=30u32 {
        for k in 1..=6u32 {
            let lhs = Rat::from(tables.stirling1u(n, k));
            let rhs = Rat::from(tables.factorial(n - 1)) * mhs(n - 1, &IndexVector::ones(k - 1));
            record(lhs == rhs, format!("stirling bridge n={n} k={k}"), &mut checks, &mut failures);
        }
        for m in 0..=6u32 {
            let lhs = mhss(n, &IndexVector::ones(m));
            let rhs = tables.bell_number(m, n) / Rat::from(tables.factorial(m));
            record(lhs == rhs, format!("bell bridge n={n} m={m}"), &mut checks, &mut failures);
        }
    }

    // explicit harmonic-number formulas for s(n,k) and Y_k(n), k <= 5
    for n in 1..=50u32 {
        for k in 1..=5u32 {
            let expected = oracle::stirling_explicit(n, k);
            record(
                Rat::from(tables.stirling1u(n, k)) == expected,
                format!("explicit stirling n={n} k={k}"),
                &mut checks,
                &mut failures,
            );
        }
    }
    for n in 0..=50u32 {
        for k in 0..=5u32 {
            let expected = oracle::bell_number_explicit(k, n);
            record(
                tables.bell_number(k, n) == expected,
                format!("explicit bell n={n} k={k}"),
                &mut checks,
                &mut failures,
            );
        }
    }

    // generating product: n! x (1+x)(1+x/2)...(1+x/n) has coefficient of
    // x^(k+1) equal to s(n+1, k+1)
    for n in 0..=20u32 {
        let order = n as usize + 1;
        let mut product = TruncatedSeries::one(order);
        for i in 1..=n {
            let mut factor = TruncatedSeries::one(order);
            let mut coeffs = vec![Rat::zero(); order + 1];
            coeffs[0] = Rat::one();
            coeffs[1] = rat(1, i as i64);
            factor = factor.mul(&TruncatedSeries::from_coeffs(coeffs));
            product = product.mul(&factor);
        }
        // multiply by n! * x
        let factorial = Rat::from(tables.factorial(n));
        for k in 0..=n {
            let coefficient = product.coeff(k as usize) * &factorial;
            let expected = Rat::from(tables.stirling1u(n + 1, k + 1));
            record(
                coefficient == expected,
                format!("generating product n={n} k={k}"),
                &mut checks,
                &mut failures,
            );
        }
    }

    // log-series powers: n! [x^n] log^k(1-x) = (-1)^k k! s(n,k)
    let log_series = TruncatedSeries::log1m(20);
    for k in 0..=4u32 {
        let power = log_series.pow(k);
        for n in 1..=20u32 {
            let lhs = Rat::from(tables.factorial(n)) * power.coeff(n as usize);
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let rhs = Rat::from(tables.factorial(k))
                * Rat::from(tables.stirling1u(n, k))
                * rat_int(sign);
            record(lhs == rhs, format!("log power n={n} k={k}"), &mut checks, &mut failures);
        }
    }

    let outcome = if failures.is_empty() {
        Ok(format!("{checks} exact equalities"))
    } else {
        Err(format!("{} failed: {:?}", failures.len(), &failures[..failures.len().min(5)]))
    };
    conclude("criterion 5 (structural bridges)", outcome);
}

#[test]
fn criterion_6_gencev_suite() {
    let mut tables = SequenceTables::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e6573746564);
    let mut pairs: Vec<(Rat, Rat)> = Vec::new();
    while pairs.len() < 20 {
        let p = rat(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        let z = rat(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        if p.is_one() {
            continue;
        }
        pairs.push((p, z));
    }
    let mut checks = 0usize;
    let mut failures: Vec<String> = Vec::new();
    for r in 1..=3u32 {
        for n in 1..=15u32 {
            for (p, z) in &pairs {
                let params = Params::from_pz(p.clone(), z.clone());
                let id = IdentityId::Gencev(r);
                let lhs = lhs_eval(&mut tables, &id, n, &params).unwrap();
                let rhs = rhs_eval(&mut tables, &id, n, &params).unwrap();
                checks += 1;
                if lhs != rhs {
                    failures.push(format!("gencev r={r} n={n} p={p} z={z}"));
                }
                if r == 1 {
                    // cross-oracle: depth 1 is the z-weighted identity at
                    // (x, y) = (p, 1-p)
                    let z_params = Params::from_xyz(p.clone(), Rat::one() - p, z.clone());
                    let thm_z_rhs =
                        rhs_eval(&mut tables, &IdentityId::ThmZ, n, &z_params).unwrap();
                    checks += 1;
                    if rhs != thm_z_rhs {
                        failures.push(format!("cross-oracle n={n} p={p} z={z}"));
                    }
                }
            }
        }
    }
    let outcome = if failures.is_empty() {
        Ok(format!("{checks} exact equalities at 20 random rational (p, z) pairs"))
    } else {
        Err(format!("{} failed: {:?}", failures.len(), &failures[..failures.len().min(5)]))
    };
    conclude("criterion 6 (nested-sum closed form, r<=3, n<=15)", outcome);
}

#[test]
fn criterion_7_quadrature_suite() {
    let mut tables = SequenceTables::new();
    let mut checks = 0usize;
    let mut failures: Vec<String> = Vec::new();
    let mut nonconvergent = 0usize;
    let mut worst: f64 = 0.0;
    let run = |report: mneimneh::quadrature::QuadCheckReport,
                   checks: &mut usize,
                   failures: &mut Vec<String>,
                   nonconvergent: &mut usize,
                   worst: &mut f64| {
        *checks += 1;
        if !report.converged {
            *nonconvergent += 1;
        }
        *worst = worst.max(report.rel_err);
        if report.status != Status::Verified {
            failures.push(format!("{} {} rel_err={:.3e}", report.check, report.params, report.rel_err));
        }
    };

    for n in 1..=20 {
        for p in 0..=4 {
            let report = check_lemma21(&mut tables, n, p, LEMMA21_TOL);
            run(report, &mut checks, &mut failures, &mut nonconvergent, &mut worst);
        }
    }
    for n in 1..=15 {
        for m in 1..=3 {
            for x_text in ["9/10", "1/2", "-1/2"] {
                let x = parse_rat(x_text).unwrap();
                let report = check_lemma22(n, m, &x, LEMMA22_TOL);
                run(report, &mut checks, &mut failures, &mut nonconvergent, &mut worst);
            }
            for x_text in ["-1", "-3/2"] {
                let x = parse_rat(x_text).unwrap();
                let report = check_lemma22(n, m, &x, LEMMA22_EXTENSION_TOL);
                run(report, &mut checks, &mut failures, &mut nonconvergent, &mut worst);
            }
        }
    }
    for n in 1..=12 {
        for p in 1..=3 {
            for (x_text, y_text) in SEC5_DEFAULT_XY {
                let x = parse_rat(x_text).unwrap();
                let y = parse_rat(y_text).unwrap();
                let report = check_sec5_representation(&mut tables, n, p, &x, &y, SEC5_TOL);
                run(report, &mut checks, &mut failures, &mut nonconvergent, &mut worst);
            }
        }
    }

    let outcome = if nonconvergent > 0 {
        Err(format!("{nonconvergent} non-convergent integrals at the default level cap"))
    } else if !failures.is_empty() {
        Err(format!("{} failed: {:?}", failures.len(), &failures[..failures.len().min(5)]))
    } else {
        Ok(format!("{checks} integrals within tolerance, worst rel_err {worst:.3e}"))
    };
    conclude("criterion 7 (quadrature suite)", outcome);
}

#[test]
fn criterion_8_spot_values() {
    let mut tables = SequenceTables::new();
    let mut failures: Vec<String> = Vec::new();

    // n=2, x=y=1 harmonic binomial sum: both sides 7/2
    let expected = rat(7, 2);
    let lhs = oracle::binomial_sum(2, &rat_int(1), &rat_int(1), |k| oracle::harmonic(k, 1));
    let rhs = oracle::mneimneh_xy_rhs_literal(2, &rat_int(1), &rat_int(1));
    let params = Params::from_xy(rat_int(1), rat_int(1));
    if lhs != expected || rhs != expected {
        failures.push(format!("oracle harmonic spot: lhs={lhs} rhs={rhs}"));
    }
    if lhs_eval(&mut tables, &IdentityId::MneimnehXy, 2, &params).unwrap() != expected
        || rhs_eval(&mut tables, &IdentityId::MneimnehXy, 2, &params).unwrap() != expected
    {
        failures.push("library harmonic spot".into());
    }

    // n=2, p=1 alternating case: both sides 1/2
    let expected = rat(1, 2);
    let lhs = oracle::binomial_sum(2, &rat_int(1), &rat_int(0), oracle::alt_harmonic);
    let rhs = oracle::cor_alt_p_rhs(2, &rat_int(1));
    let params = Params::from_p(rat_int(1));
    if lhs != expected || rhs != expected {
        failures.push(format!("oracle alternating spot: lhs={lhs} rhs={rhs}"));
    }
    if lhs_eval(&mut tables, &IdentityId::CorAltP, 2, &params).unwrap() != expected
        || rhs_eval(&mut tables, &IdentityId::CorAltP, 2, &params).unwrap() != expected
    {
        failures.push("library alternating spot".into());
    }

    // n=2, x=y=1 second-order sum: both sides 13/4
    let expected = rat(13, 4);
    let lhs = oracle::binomial_sum(2, &rat_int(1), &rat_int(1), |k| oracle::harmonic(k, 2));
    let rhs = oracle::cor_h2ord_rhs_literal(2, &rat_int(1), &rat_int(1));
    let params = Params::from_xy(rat_int(1), rat_int(1));
    if lhs != expected || rhs != expected {
        failures.push(format!("oracle second-order spot: lhs={lhs} rhs={rhs}"));
    }
    if lhs_eval(&mut tables, &IdentityId::CorH2Ord, 2, &params).unwrap() != expected
        || rhs_eval(&mut tables, &IdentityId::CorH2Ord, 2, &params).unwrap() != expected
    {
        failures.push("library second-order spot".into());
    }

    // derivation-chain consistency backing the squared-harmonic corollary
    for n in 1..=10 {
        let report = hsq_consistency(&mut tables, n);
        if report.status != Status::Verified {
            failures.push(format!("hsq consistency n={n}"));
        }
    }

    let outcome = if failures.is_empty() {
        Ok("7/2, 1/2 and 13/4 reproduced by the direct-summation oracle and the library".into())
    } else {
        Err(failures.join("; "))
    };
    conclude("criterion 8 (spot values)", outcome);
}

/// Direct-summation oracle: raw loops over definitions, sharing no code with
/// the library's evaluators.
mod oracle {
    use super::*;
    use num_bigint::BigInt;

    pub fn harmonic(n: u32, r: u32) -> Rat {
        let mut sum = Rat::zero();
        for j in 1..=n {
            sum += Rat::new(BigInt::from(1), BigInt::from(j).pow(r));
        }
        sum
    }

    pub fn alt_harmonic(n: u32) -> Rat {
        let mut sum = Rat::zero();
        for j in 1..=n {
            let sign = if j % 2 == 1 { 1 } else { -1 };
            sum += Rat::new(BigInt::from(sign), BigInt::from(j));
        }
        sum
    }

    /// Binomial coefficients straight off Pascal's rule.
    pub fn binomial(n: u32, k: u32) -> Rat {
        if k > n {
            return Rat::zero();
        }
        let mut row = vec![Rat::one()];
        for _ in 0..n {
            let mut next = vec![Rat::one()];
            for i in 1..row.len() {
                next.push(&row[i - 1] + &row[i]);
            }
            next.push(Rat::one());
            row = next;
        }
        row[k as usize].clone()
    }

    pub fn binomial_sum(n: u32, x: &Rat, y: &Rat, weight: impl Fn(u32) -> Rat) -> Rat {
        let mut sum = Rat::zero();
        for k in 0..=n {
            sum += binomial(n, k) * weight(k) * x.pow(k as i32) * y.pow((n - k) as i32);
        }
        sum
    }

    /// `(x+y)^n (H_n - sum_i y^i (x+y)^(-i) / i)`, literal form.
    pub fn mneimneh_xy_rhs_literal(n: u32, x: &Rat, y: &Rat) -> Rat {
        let s = x + y;
        let mut inner = harmonic(n, 1);
        for i in 1..=n {
            inner -= y.pow(i as i32) / s.pow(i as i32) / rat_int(i as i64);
        }
        s.pow(n as i32) * inner
    }

    /// `sum_j ((1-p)^j - (1-2p)^j) / j`.
    pub fn cor_alt_p_rhs(n: u32, p: &Rat) -> Rat {
        let a = Rat::one() - p;
        let b = Rat::one() - rat_int(2) * p;
        let mut sum = Rat::zero();
        for j in 1..=n {
            sum += (a.pow(j as i32) - b.pow(j as i32)) / rat_int(j as i64);
        }
        sum
    }

    /// Literal second-order right-hand side (defined for y != 0, x+y != 0).
    pub fn cor_h2ord_rhs_literal(n: u32, x: &Rat, y: &Rat) -> Rat {
        let s = x + y;
        let mut total = Rat::zero();
        for j in 1..=n {
            let outer = y.pow(j as i32) / s.pow(j as i32) / rat_int(j as i64);
            let mut inner = Rat::zero();
            for i in 1..=j {
                inner += s.pow(i as i32) / y.pow(i as i32) / rat_int(i as i64);
            }
            total += &outer * inner - outer * harmonic(j, 1);
        }
        s.pow(n as i32) * total
    }

    pub fn factorial(n: u32) -> Rat {
        let mut value = Rat::one();
        for i in 2..=n {
            value *= rat_int(i as i64);
        }
        value
    }

    /// The explicit harmonic-number polynomials for s(n,k), k <= 5.
    pub fn stirling_explicit(n: u32, k: u32) -> Rat {
        let m = n - 1;
        let f = factorial(m);
        let h1 = harmonic(m, 1);
        let h2 = harmonic(m, 2);
        let h3 = harmonic(m, 3);
        let h4 = harmonic(m, 4);
        match k {
            1 => f,
            2 => f * h1,
            3 => f / rat_int(2) * (&h1 * &h1 - &h2),
            4 => {
                f / rat_int(6)
                    * (h1.pow(3) - rat_int(3) * &h1 * &h2 + rat_int(2) * &h3)
            }
            5 => {
                f / rat_int(24)
                    * (h1.pow(4) - rat_int(6) * &h4 - rat_int(6) * h1.pow(2) * &h2
                        + rat_int(3) * h2.pow(2)
                        + rat_int(8) * &h1 * &h3)
            }
            _ => unreachable!("explicit forms are listed for k <= 5"),
        }
    }

    /// The explicit harmonic-number polynomials for Y_k(n), k <= 5.
    pub fn bell_number_explicit(k: u32, n: u32) -> Rat {
        let h1 = harmonic(n, 1);
        let h2 = harmonic(n, 2);
        let h3 = harmonic(n, 3);
        let h4 = harmonic(n, 4);
        let h5 = harmonic(n, 5);
        match k {
            0 => Rat::one(),
            1 => h1,
            2 => h1.pow(2) + h2,
            3 => h1.pow(3) + rat_int(3) * &h1 * &h2 + rat_int(2) * h3,
            4 => {
                h1.pow(4)
                    + rat_int(8) * &h1 * &h3
                    + rat_int(6) * h1.pow(2) * &h2
                    + rat_int(3) * h2.pow(2)
                    + rat_int(6) * h4
            }
            5 => {
                h1.pow(5)
                    + rat_int(10) * h1.pow(3) * &h2
                    + rat_int(20) * h1.pow(2) * &h3
                    + rat_int(15) * &h1 * h2.pow(2)
                    + rat_int(30) * &h1 * &h4
                    + rat_int(20) * &h2 * &h3
                    + rat_int(24) * h5
            }
            _ => unreachable!("explicit forms are listed for k <= 5"),
        }
    }
}
