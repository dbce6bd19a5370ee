//! Acceptance criteria AC-1 to AC-12. Prints one line per criterion and exits
//! nonzero if any fails. Budgets apply to the wall time of the listed checks.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Duration;

use g2d5::report::CheckReport;
use g2d5::verify::{run_suite, Suite, SuiteReport};

const SEED: u64 = 0;

struct Criterion {
    id: &'static str,
    title: &'static str,
    budget: Duration,
    suites: &'static [Suite],
    checks: &'static [&'static str],
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: "AC-1",
        title: "X*F1^2 - (X-1)*F3^2 - F2^2 vanishes over Q[a,b]",
        budget: secs(1),
        suites: &[Suite::Eq4],
        checks: &["square-identity-symbolic"],
    },
    Criterion {
        id: "AC-2",
        title: "numerator(phi') = c*F1*F3*F4, denominator F2^3",
        budget: secs(1),
        suites: &[Suite::Eq11],
        checks: &["derivative-factorization-symbolic"],
    },
    Criterion {
        id: "AC-3",
        title: "(X-z)^2 divides G(X,z) mod F4 at 20 seeded points",
        budget: secs(10),
        suites: &[Suite::Thm2],
        checks: &["double_root"],
    },
    Criterion {
        id: "AC-4",
        title: "case I lambda equals the displayed closed form",
        budget: secs(5),
        suites: &[Suite::CaseI],
        checks: &["caseI_lambda_literal"],
    },
    Criterion {
        id: "AC-5",
        title: "case I pipeline matches the T-formulas and j(T)",
        budget: secs(30),
        suites: &[Suite::CaseI],
        checks: &["caseI_pipeline"],
    },
    Criterion {
        id: "AC-6",
        title: "case II pipeline, lambda(3) = 123904/81 and the lambda identity",
        budget: secs(30),
        suites: &[Suite::CaseII],
        checks: &["caseII_pipeline", "caseII_lambda_at_3", "caseII_lambda_literal"],
    },
    Criterion {
        id: "AC-7",
        title: "case III j = 702595369/72900 by two routes, model at a = 1",
        budget: secs(5),
        suites: &[Suite::CaseIII],
        checks: &["y3bar_j", "case3_curve_at_1"],
    },
    Criterion {
        id: "AC-8",
        title: "w-relation at 50 seeded points and the discriminant factor",
        budget: secs(60),
        suites: &[Suite::Thm3, Suite::DeltaW],
        checks: &["w_relation", "delta_w"],
    },
    Criterion {
        id: "AC-9",
        title: "Nielsen class counts 40, 8, 6, 9",
        budget: secs(60),
        suites: &[Suite::Nielsen],
        checks: &[
            "nielsen_S5_2^2,2^2,2^2,2,2",
            "nielsen_S5_2^2,2^2,4,2",
            "nielsen_S5_2^2,2^2,2.3,2",
            "nielsen_A5_2^2,2^2,2^2,3",
        ],
    },
    Criterion {
        id: "AC-10",
        title: "classification degrees 36, 25 and V4 at numeric roots",
        budget: secs(60),
        suites: &[Suite::CaseI, Suite::CaseII],
        checks: &[
            "caseI_classification_degree",
            "caseI_v4_numeric",
            "caseII_classification_degree",
            "caseII_v4_numeric",
        ],
    },
    Criterion {
        id: "AC-11",
        title: "resultant derivation recovers every factor of Delta(a,b)",
        budget: secs(600),
        suites: &[Suite::Remark3],
        checks: &["delta_factors"],
    },
    Criterion {
        id: "AC-12",
        title: "recover_parameter inverts the T-formulas at 20 seeded T per case",
        budget: secs(10),
        suites: &[Suite::Roundtrip],
        checks: &["caseI_roundtrip", "caseII_roundtrip"],
    },
];

fn find<'a>(reports: &'a BTreeMap<&'static str, SuiteReport>, name: &str) -> Option<&'a CheckReport> {
    reports.values().find_map(|r| r.check(name))
}

fn main() -> ExitCode {
    let mut reports: BTreeMap<&'static str, SuiteReport> = BTreeMap::new();
    let mut failed = 0;
    for c in CRITERIA {
        let mut elapsed = Duration::ZERO;
        let mut error = None;
        for s in c.suites {
            let name = s.name();
            if !reports.contains_key(name) {
                match run_suite(*s, SEED) {
                    Ok(r) => {
                        reports.insert(name, r);
                    }
                    Err(e) => error = Some(format!("{}: {e}", e.name())),
                }
            }
        }
        let mut missing = Vec::new();
        let mut red = Vec::new();
        for name in c.checks {
            match find(&reports, name) {
                None => missing.push(*name),
                Some(r) => {
                    elapsed += r.elapsed;
                    if !r.passed() {
                        red.push(*name);
                    }
                }
            }
        }
        let over = elapsed > c.budget;
        let ok = error.is_none() && missing.is_empty() && red.is_empty() && !over;
        let mut line = format!(
            "{:<5} {} {} ({} ms, budget {} s)",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            elapsed.as_millis(),
            c.budget.as_secs()
        );
        if let Some(e) = error {
            line += &format!(" error: {e}");
        }
        if !missing.is_empty() {
            line += &format!(" missing: {}", missing.join(", "));
        }
        if !red.is_empty() {
            line += &format!(" failed: {}", red.join(", "));
        }
        if over {
            line += " over budget";
        }
        println!("{line}");
        if !ok {
            failed += 1;
        }
    }
    println!("acceptance: {} of {} criteria pass", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
