//! End-to-end acceptance criteria. Each criterion runs its named checks,
//! prints one PASS/FAIL line with its runtime, and the test fails if any
//! criterion fails or exceeds its time budget.

use std::io::Write;
use std::time::{Duration, Instant};

use z4codes::analysis::report::Check;
use z4codes::analysis::suite::{run_checks, SuiteConfig};

struct Criterion {
    id: u32,
    title: &'static str,
    checks: &'static [&'static str],
    budget_secs: u64,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "octacode reproduction",
        checks: &["Kerdock(3) equals the octacode", "octacode swe"],
        budget_secs: 1,
    },
    Criterion { id: 2, title: "Kerdock weight distribution m=3,4,5", checks: &["Kerdock weight distribution"], budget_secs: 5 },
    Criterion {
        id: 3,
        title: "MacWilliams duality at m=3",
        checks: &["Lee MacWilliams K(3) -> P(3)", "binary MacWilliams of Gray images"],
        budget_secs: 1,
    },
    Criterion { id: 4, title: "Preparata decoder exhaustive at m=3", checks: &["decoder exhaustive m=3"], budget_secs: 30 },
    Criterion { id: 5, title: "Preparata decoder at m=5", checks: &["decoder random m=5"], budget_secs: 60 },
    Criterion { id: 6, title: "FHT soft decoder equals brute force", checks: &["soft decoder equals brute force"], budget_secs: 10 },
    Criterion {
        id: 7,
        title: "transform membership tests",
        checks: &["transform tests agree with membership"],
        budget_secs: 60,
    },
    Criterion {
        id: 8,
        title: "Goethals and DG(3,1)",
        checks: &["Goethals m=3", "DG(3,1) minimum Lee weight"],
        budget_secs: 5,
    },
    Criterion { id: 9, title: "QRM structure", checks: &["QRM structure", "alpha(QRM) = RM"], budget_secs: 30 },
    Criterion {
        id: 10,
        title: "designs and complete regularity at m=3",
        checks: &[
            "weight-6 design of P(3)",
            "Steiner system from ZRM(1,3) dual",
            "covering radius and outer distribution of P(3)",
        ],
        budget_secs: 60,
    },
    Criterion { id: 11, title: "coset graph of P(3)", checks: &["coset graph parameters"], budget_secs: 30 },
    Criterion {
        id: 12,
        title: "automorphism invariance at m=3",
        checks: &["Kerdock automorphisms", "Preparata automorphisms", "Goethals automorphisms"],
        budget_secs: 30,
    },
    Criterion {
        id: 13,
        title: "Galois ring identities",
        checks: &[
            "dependencies P1-P4",
            "Graeffe lift m=3",
            "Graeffe lift m=5",
            "Kerdock generator polynomial m=5",
            "additive table m=3",
        ],
        budget_secs: 5,
    },
    Criterion {
        id: 14,
        title: "Z4-linearity conditions and Gray identities",
        checks: &[
            "Z4-linearity closure of octacode image",
            "Z4-linearity closure of ZRM(1,3) image",
            "Z4-linearity closure of ZRM(2,3) image",
            "Gray identities exhaustive",
            "Gray identities random",
        ],
        budget_secs: 10,
    },
];

/// Debug builds are allowed a constant factor over the stated budgets.
fn budget(c: &Criterion) -> Duration {
    let factor = if cfg!(debug_assertions) { 4 } else { 1 };
    Duration::from_secs(c.budget_secs * factor)
}

fn run(c: &Criterion, cfg: &SuiteConfig) -> (Vec<Check>, Duration) {
    let t = Instant::now();
    let checks = run_checks(c.checks, cfg);
    (checks, t.elapsed())
}

#[test]
fn acceptance() {
    let cfg = SuiteConfig { workers: 4, seed: 1 };
    let mut failures = Vec::new();
    for c in CRITERIA {
        let (checks, elapsed) = run(c, &cfg);
        let covered = c.checks.iter().all(|name| checks.iter().any(|k| k.check == *name));
        let passed = covered && checks.iter().all(|k| k.pass);
        let in_time = elapsed <= budget(c);
        let ok = passed && in_time;
        let mut so = std::io::stdout().lock();
        let _ = writeln!(
            so,
            "criterion {:>2} {} {} ({} checks, {:.2}s, budget {}s)",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            checks.len(),
            elapsed.as_secs_f64(),
            budget(c).as_secs()
        );
        for k in checks.iter().filter(|k| !k.pass) {
            let _ = writeln!(so, "    {}: expected {} computed {}", k.check, k.expected, k.computed);
        }
        if !ok {
            failures.push(c.id);
        }
    }
    assert_eq!(CRITERIA.len(), 14);
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
