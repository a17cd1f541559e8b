//! Acceptance criteria, one line each. Runs without the libtest harness so the
//! lines always show up in `cargo test` output.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use tropical_scheme::cli::{cmd_verify, Command, JobConfig};
use tropical_scheme::poly::{parse_polynomial, MonoidSignature};
use tropical_scheme::scalar::{TropValue, Valuation};
use tropical_scheme::trop::{bend_vs_trop_points, AxisRange};
use tropical_scheme::verify::{run_suite, SuiteResult};

const SEED: u64 = 0;

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_suite(suite: tropical_scheme::Result<SuiteResult>) -> Outcome {
    match suite {
        Ok(s) => Outcome {
            passed: s.passed(),
            detail: if s.passed() {
                format!("{} cases", s.cases)
            } else {
                format!("{} of {} cases failed, e.g. {:?}", s.failures, s.cases, s.examples)
            },
        },
        Err(e) => Outcome { passed: false, detail: format!("error: {e}") },
    }
}

fn criterion(n: usize, title: &str, budget: Option<Duration>, run: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let mut outcome = run();
    let elapsed = start.elapsed();
    if let Some(budget) = budget {
        if elapsed > budget {
            outcome.passed = false;
            outcome.detail = format!("{}; over the {budget:?} budget", outcome.detail);
        }
    }
    let status = if outcome.passed { "PASS" } else { "FAIL" };
    println!("criterion {n} {status}: {title} ({}, {:.0?})", outcome.detail, elapsed);
    outcome.passed
}

/// The p-adic line: T1 + T2 + 3 under the 3-adic valuation on [0,1]^2, step
/// 1/12. Membership means the maximum of x, y, 1/3 occurs twice; counted by
/// hand: x = y >= 1/3 gives 9 points, x = 1/3 > y gives 4, y = 1/3 > x gives 4.
const PADIC_LINE_MEMBERS: usize = 17;

/// The tropical line on [0,4]^2, step 1/4: the three rays from (1,1) carry
/// 4 + 4 + 12 points plus the vertex.
const TROPICAL_LINE_MEMBERS: usize = 21;

fn main() -> ExitCode {
    let mut all = true;

    all &=
        criterion(1, "tropical line agrees with max-twice on [0,4]^2 step 1/4", Some(Duration::from_secs(1)), || {
            let mut out = from_suite(run_suite("tropical_line_grid", SEED));
            let job = JobConfig::new(Command::Sample).with_generators(["T1 + T2 + 1"]);
            let summary = tropical_scheme::cli::run(&job).map(|o| o.summary).unwrap_or_default();
            let expected = format!("{TROPICAL_LINE_MEMBERS} of 289 grid points are 𝕋-points");
            out.passed &= summary == expected;
            out.detail = format!("{}; {summary}", out.detail);
            out
        });

    all &= criterion(2, "leq_T matches the iterated set hypersum on 1000 lists", Some(Duration::from_secs(1)), || {
        from_suite(run_suite("hypersum_relation", SEED))
    });

    all &= criterion(
        3,
        "bend pairs derive and check for every bend relation of 50 random polynomials, trivial and 3-adic",
        Some(Duration::from_secs(10)),
        || from_suite(run_suite("bend_derivations", SEED)),
    );

    all &= criterion(
        4,
        "p-adic valuations for p = 2, 3, 5: axioms on 10^4 pairs, max-twice on 10^3 decompositions",
        None,
        || from_suite(run_suite("valuation_axioms", SEED)),
    );

    all &= criterion(5, "line restriction is nontrivial exactly for T, T + 1 and infinity", None, || {
        from_suite(run_suite("berkovich_line", SEED))
    });

    all &= criterion(6, "idempotent normal form on 500 pairs and the order criterion on 200 pairs", None, || {
        from_suite(run_suite("idempotent_normal_form", SEED))
    });

    all &= criterion(7, "extended tropical semiring laws on 500 triples", None, || {
        from_suite(run_suite("extended_semiring", SEED))
    });

    all &= criterion(
        8,
        "three-way agreement for T1 + T2 + 3, 3-adic, [0,1]^2 step 1/12",
        Some(Duration::from_secs(1)),
        || {
            let sig = MonoidSignature::polynomial(2);
            let axis =
                AxisRange::new(TropValue::zero(), TropValue::one(), tropical_scheme::scalar::Rational::ratio(1, 12))
                    .unwrap();
            let report = parse_polynomial("T1 + T2 + 3", sig)
                .and_then(|p| bend_vs_trop_points(&[p], &Valuation::padic(3)?, &[axis.clone(), axis]));
            match report {
                Ok(r) => Outcome {
                    passed: r.agrees() && r.members == PADIC_LINE_MEMBERS && r.points_checked == 169,
                    detail: format!(
                        "{} points, {} members, {} disagreements",
                        r.points_checked,
                        r.members,
                        r.disagreements.len()
                    ),
                },
                Err(e) => Outcome { passed: false, detail: format!("error: {e}") },
            }
        },
    );

    all &= criterion(9, "two verify runs with the same seed are byte-identical", None, || {
        let job = JobConfig::new(Command::Verify);
        match (cmd_verify(&job), cmd_verify(&job)) {
            (Ok(a), Ok(b)) => Outcome {
                passed: a.content == b.content && a.success,
                detail: format!("{} bytes, {}", a.content.len(), a.summary),
            },
            _ => Outcome { passed: false, detail: "verify failed to run".into() },
        }
    });

    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
