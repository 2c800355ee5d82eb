//! Exit gate: one PASS/FAIL line per acceptance criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use fincat::catalog;
use fincat::certcheck;
use fincat::cover::{ls_category_space, topological_complexity, InvariantResult, InvariantValue};
use fincat::harness::{run_suite, SuiteConfig, SuiteReport};
use fincat::homotopy::is_homotopic;
use fincat::Settings;

/// TC of the pseudocircle, frozen after the first computation.
const TC_PSEUDOCIRCLE: usize = 3;

struct Gate {
    results: Vec<(usize, bool, String)>,
}

impl Gate {
    fn record(&mut self, n: usize, ok: bool, detail: String) {
        println!("criterion {n}: {} ({detail})", if ok { "PASS" } else { "FAIL" });
        self.results.push((n, ok, detail));
    }
}

fn verified(r: &InvariantResult) -> Result<(), String> {
    let n = r.value.finite().ok_or("no finite value")?;
    let cert = r.certificate.as_ref().ok_or("no certificate")?;
    certcheck::check_cover(&cert.to_json(), Some(n + 1))
}

fn suite(properties: Option<&[&str]>, instances: usize, pointed: bool, normality_filter: bool) -> SuiteReport {
    let mut cfg = SuiteConfig {
        instances,
        normality_filter,
        properties: properties.map(|p| p.iter().map(|s| s.to_string()).collect()),
        ..SuiteConfig::default()
    };
    cfg.generator.pointed = pointed;
    run_suite(&cfg).expect("suite config is valid")
}

fn failure_lines(r: &SuiteReport) -> String {
    r.properties
        .iter()
        .flat_map(|p| p.failures.iter().map(move |f| format!("{} #{}: {}", p.id, f.instance.index, f.detail)))
        .map(|l| format!(", {l}"))
        .collect()
}

fn main() -> ExitCode {
    let st = Settings::default();
    let mut gate = Gate { results: Vec::new() };
    let mut certs = 0usize;
    let mut cert_errors = Vec::new();

    // 1. cat(S) = 1 with the cover by the two basic opens
    let s = catalog::pseudocircle();
    let t = Instant::now();
    let cat_s = ls_category_space(&s, false, &st).unwrap();
    let took = t.elapsed();
    let mut parts: Vec<Vec<String>> = cat_s
        .certificate
        .iter()
        .flat_map(|c| c.parts.iter().map(|p| s.set_names(&p.members)))
        .collect();
    parts.sort();
    let check = verified(&cat_s);
    certs += 1;
    if let Err(e) = &check {
        cert_errors.push(format!("cat(S): {e}"));
    }
    let want = vec![vec!["a1", "b1", "b2"], vec!["a2", "b1", "b2"]];
    gate.record(
        1,
        cat_s.value == InvariantValue::Finite(1) && parts == want && check.is_ok() && took < Duration::from_secs(1),
        format!("cat(S) = {}, cover {parts:?}, {took:?}", cat_s.value),
    );

    // 2. cat(S×S) = 3, every cover with ≤ 3 parts refuted
    let s2 = catalog::pseudocircle_squared();
    let t = Instant::now();
    let cat_s2 = ls_category_space(&s2, false, &st).unwrap();
    let took = t.elapsed();
    let check = verified(&cat_s2);
    certs += 1;
    if let Err(e) = &check {
        cert_errors.push(format!("cat(S×S): {e}"));
    }
    gate.record(
        2,
        cat_s2.value == InvariantValue::Finite(3)
            && cat_s2.exhaustion.refuted_parts >= 3
            && check.is_ok()
            && took < Duration::from_secs(300),
        format!(
            "cat(S×S) = {}, {} maximal opens, all covers with {} parts refuted, {took:?}",
            cat_s2.value, cat_s2.exhaustion.maximal_opens, cat_s2.exhaustion.refuted_parts
        ),
    );

    // 3. S is not normal and the product inequality fails on S×S
    let (normal, witness) = s.is_normal();
    let (c1, c2) = (cat_s.value.finite(), cat_s2.value.finite());
    gate.record(
        3,
        !normal && witness.is_some() && c2 == Some(3) && c1.map(|c| 2 * c) == Some(2),
        format!("is_normal(S) = {normal}, cat(S×S) = {c2:?} vs cat(S) + cat(S) = {:?}", c1.map(|c| 2 * c)),
    );

    // 4. op ≤ WG on random inclusions, equality on normal X
    let t = Instant::now();
    let r = suite(Some(&["op-le-wg"]), 220, false, false);
    let p = &r.properties[0];
    certs += r.certificates_checked();
    gate.record(
        4,
        p.failed == 0 && p.passed >= 200 && t.elapsed() < Duration::from_secs(600),
        format!(
            "{} compared, {} failed, {} over budget, {:?}{}",
            p.passed,
            p.failed,
            p.budget_exceeded,
            t.elapsed(),
            failure_lines(&r)
        ),
    );

    // 5. both routes to D agree; TC agrees with D(pr1, pr2)
    let r = suite(Some(&["distance-oracle", "tc-oracle"]), 320, false, false);
    let (d, tc) = (&r.properties[0], &r.properties[1]);
    certs += r.certificates_checked();
    gate.record(
        5,
        d.failed == 0 && tc.failed == 0 && d.passed >= 300 && tc.passed >= 50,
        format!(
            "D: {} pairs agree, {} mismatches; TC: {} spaces agree, {} mismatches{}",
            d.passed,
            d.failed,
            tc.passed,
            tc.failed,
            failure_lines(&r)
        ),
    );

    // 6. the whole property catalog, both flavors
    let t = Instant::now();
    let free = suite(None, 100, false, true);
    let pointed = suite(None, 100, true, true);
    let took = t.elapsed();
    let total = free.instances() + pointed.instances();
    let budget = free.budget_exceeded() + pointed.budget_exceeded();
    let failed = free.failed() + pointed.failed();
    certs += free.certificates_checked() + pointed.certificates_checked();
    println!("{}", free.table());
    println!("{}", pointed.table());
    gate.record(
        6,
        failed == 0 && budget * 20 < total && took < Duration::from_secs(900),
        format!(
            "{} properties, {total} instances, {failed} failed, {budget} over budget, {took:?}{}{}",
            free.properties.len(),
            failure_lines(&free),
            failure_lines(&pointed)
        ),
    );

    // 7. TC(S), inside the bounds cat(S) ≤ TC(S) ≤ cat(S×S)
    let tc_s = topological_complexity(&s, false, &st).unwrap();
    let check = verified(&tc_s);
    certs += 1;
    if let Err(e) = &check {
        cert_errors.push(format!("TC(S): {e}"));
    }
    let v = tc_s.value.finite();
    gate.record(
        7,
        v == Some(TC_PSEUDOCIRCLE) && c1 <= v && v <= c2 && check.is_ok(),
        format!("TC(S) = {}, golden {TC_PSEUDOCIRCLE}, bounds [{c1:?}, {c2:?}]", tc_s.value),
    );

    // 8. every emitted certificate re-validated by the independent checker.
    // Suite runs reject an instance whose certificate fails, so rejected
    // certificates surface there as failures.
    let m = |n: &str| catalog::map(n).unwrap();
    let pairs = [
        (m("const:pseudocircle:b1"), m("const:pseudocircle:a2")),
        (m("id:chain-3"), m("const:chain-3:c0")),
        (m("pr1:diamond"), m("pr2:diamond")),
    ];
    for (f, g) in pairs {
        let v = is_homotopic(&f, &g, false, &st).unwrap();
        certs += 1;
        match v.certificate {
            Some(fence) => {
                if let Err(e) = certcheck::check_fence(&fence.to_json(), Some(&f.to_json()), Some(&g.to_json())) {
                    cert_errors.push(format!("fence: {e}"));
                }
            }
            None => cert_errors.push("homotopic maps without a fence".into()),
        }
    }
    let rejected_in_suites = [&free, &pointed]
        .iter()
        .flat_map(|r| r.properties.iter())
        .flat_map(|p| p.failures.iter())
        .filter(|f| f.detail.contains("rejected") || f.detail.contains("no certificate"))
        .count();
    gate.record(
        8,
        cert_errors.is_empty() && rejected_in_suites == 0 && certs > 0,
        format!("{certs} certificates re-checked, {} rejected {cert_errors:?}", cert_errors.len() + rejected_in_suites),
    );

    let failed: Vec<usize> = gate.results.iter().filter(|r| !r.1).map(|r| r.0).collect();
    println!("acceptance: {}/{} criteria pass", gate.results.len() - failed.len(), gate.results.len());
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failing criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
