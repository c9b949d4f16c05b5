//! End-to-end acceptance run: one line per criterion, then a single assert.

use std::time::{Duration, Instant};

use num_bigint::BigInt;

use netted_core::conjecture::{verify_conjecture_int, verify_conjecture_symbolic, Method};
use netted_core::fibmat::{
    build_t, build_t_inverse, verify_closed_forms, verify_corollary_identities, verify_power_vector, verify_t3_example,
    FibSpec,
};
use netted_core::genfunc::verify_genfunc;
use netted_core::modular::{verify_entry_point_theorem, verify_root_theorem, verify_up_theorems};
use netted_core::netted::{boundary_check, build_family, sample_tableau, verify_power_netted, FamilyKind, NettedParams};
use netted_core::{Matrix, Report, Ring, Status, ZPoly};

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Outcome { ok, detail: detail.into() }
    }
}

/// Tallies reports, remembering the first few that failed.
#[derive(Default)]
struct Tally {
    reports: usize,
    checks: u64,
    failures: Vec<String>,
}

impl Tally {
    fn add(&mut self, r: &Report) {
        self.reports += 1;
        self.checks += r.checks;
        if r.status == Status::Fail {
            if self.failures.len() < 4 {
                let w = r.witnesses.first().map(|w| format!(" at {}: expected {}, got {}", w.location, w.expected, w.actual));
                self.failures.push(format!("{} {:?}{}", r.claim_id, r.params, w.unwrap_or_default()));
            }
            if self.failures.len() == 4 {
                self.failures.push("...".into());
            }
        }
    }

    fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn summary(&self) -> String {
        if self.ok() {
            format!("{} reports, {} checks", self.reports, self.checks)
        } else {
            format!("{} reports, {} checks; failing: {}", self.reports, self.checks, self.failures.join("; "))
        }
    }
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn criterion_1() -> Outcome {
    let r = verify_t3_example().expect("example");
    Outcome::new(r.passed(), format!("{} entries compared", r.checks))
}

fn netted_family_checks<R: Ring>(tally: &mut Tally, m: &R) {
    for n in 2..=8 {
        for kind in FamilyKind::ALL {
            let (a, params) = build_family(kind, n, m).expect("family");
            tally.add(&verify_power_netted(&a, &params, 6).expect("netted").param("family", kind));
        }
        let t = build_t(&FibSpec::new(n, m.clone()).expect("spec"));
        let params = NettedParams::new(R::one(), m.clone(), R::one().neg(), R::zero()).expect("params");
        tally.add(&verify_power_netted(&t, &params, 6).expect("netted").param("family", "T"));
    }
}

fn criterion_2() -> Outcome {
    let mut tally = Tally::default();
    for m in 1..=3 {
        netted_family_checks(&mut tally, &int(m));
    }
    let ok = tally.ok() && tally.checks >= 5_000;
    Outcome::new(ok, tally.summary())
}

fn criterion_3() -> Outcome {
    let mut tally = Tally::default();
    for n in 2..=8 {
        for m in 1..=5 {
            tally.add(&verify_power_vector(&FibSpec::new(n, int(m)).unwrap(), 6).unwrap());
        }
    }
    for n in 2..=5 {
        tally.add(&verify_power_vector(&FibSpec::new(n, ZPoly::var()).unwrap(), 3).unwrap());
    }
    Outcome::new(tally.ok(), tally.summary())
}

fn criterion_4() -> Outcome {
    let claims = ["cor3.4.1", "cor3.4.2", "cor3.4.3", "cor3.4.4", "rem3.5"];
    let mut tally = Tally::default();
    let mut tuples = [0u64; 5];
    // Identities 1 and 2 depend only on (n, m, i); extra values of m bring
    // them above 100 tuples.
    let ms: Vec<i64> = (-3..=6).collect();
    for n in 2..=6 {
        for &m in &ms {
            let reports = verify_corollary_identities(&FibSpec::new(n, int(m)).unwrap(), 4, 4).unwrap();
            for (k, r) in reports.iter().enumerate() {
                if k < 2 || (1..=3).contains(&m) {
                    tally.add(r);
                    tuples[k] += r.checks;
                }
            }
        }
    }
    let enough = tuples.iter().all(|&t| t >= 100);
    let counts: Vec<String> = claims.iter().zip(tuples).map(|(c, t)| format!("{c}={t}")).collect();
    Outcome::new(tally.ok() && enough, format!("{}; tuples {}", tally.summary(), counts.join(" ")))
}

fn criterion_5() -> Outcome {
    let mut tally = Tally::default();
    for n in 2..=8 {
        for m in 1..=3 {
            for r in verify_closed_forms(&FibSpec::new(n, int(m)).unwrap(), 5).unwrap() {
                if r.claim_id == "prop3.6.col2.printed" {
                    continue;
                }
                tally.add(&r);
            }
        }
    }
    Outcome::new(tally.ok(), tally.summary())
}

fn inverse_ok<R: Ring>(spec: &FibSpec<R>) -> bool {
    let t = build_t(spec);
    let inv = build_t_inverse(spec);
    let id = Matrix::<R>::identity(spec.n);
    t.mat_mul(&inv).unwrap() == id && inv.mat_mul(&t).unwrap() == id
}

fn criterion_6() -> Outcome {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 1..=8 {
        count += 1;
        if !inverse_ok(&FibSpec::new(n, ZPoly::var()).unwrap()) {
            bad.push(format!("symbolic n={n}"));
        }
    }
    for n in 1..=12 {
        for m in 1..=5 {
            count += 1;
            if !inverse_ok(&FibSpec::new(n, int(m)).unwrap()) {
                bad.push(format!("n={n} m={m}"));
            }
        }
    }
    Outcome::new(bad.is_empty(), format!("{count} inverses checked{}", if bad.is_empty() { String::new() } else { format!("; failing {bad:?}") }))
}

fn criterion_7() -> Outcome {
    let mut tally = Tally::default();
    let mut divisions = 0;
    for n in 2..=6 {
        for m in 1..=3 {
            for e in 1..=4 {
                for r in verify_genfunc(&FibSpec::new(n, int(m)).unwrap(), e).unwrap() {
                    divisions += usize::from(r.claim_id == "thm4.1.division");
                    tally.add(&r);
                }
            }
        }
    }
    for n in 2..=3 {
        for e in 1..=3 {
            for r in verify_genfunc(&FibSpec::new(n, ZPoly::var()).unwrap(), e).unwrap() {
                divisions += usize::from(r.claim_id == "thm4.1.division");
                tally.add(&r);
            }
        }
    }
    Outcome::new(tally.ok(), format!("{}; {divisions} series divisions", tally.summary()))
}

fn criterion_8() -> Outcome {
    let mut tally = Tally::default();
    let mut documented = 0;
    let mut applicable_up = 0;
    let mut applicable_root = 0;
    for p in [3u64, 5, 7, 11, 13, 29] {
        for m in 1..=3 {
            for n in 2..=8 {
                for r in verify_entry_point_theorem(n, m, p).unwrap() {
                    match r.claim_id.as_str() {
                        // The printed odd-e forms are tracked, not required.
                        "thm5.1.v" => documented += usize::from(r.status == Status::DiscrepancyDocumented),
                        "thm5.1.iv" if r.status == Status::HypothesisNotSatisfied => {}
                        _ => tally.add(&r),
                    }
                }
                for r in verify_up_theorems(n, m, p).unwrap() {
                    if r.status != Status::HypothesisNotSatisfied {
                        applicable_up += 1;
                        tally.add(&r);
                    }
                }
                for r in verify_root_theorem(n, m, p).unwrap() {
                    if r.status != Status::HypothesisNotSatisfied {
                        applicable_root += 1;
                        tally.add(&r);
                    }
                }
            }
        }
    }
    let witness = verify_entry_point_theorem(2, 1, 5).unwrap().remove(4);
    let w = witness.witnesses.iter().find(|w| w.location == "T^(2e)");
    let witness_ok = witness.status == Status::DiscrepancyDocumented
        && w.is_some_and(|w| w.expected == "3*I" && w.actual == "4*I");
    let spot = {
        let a = verify_up_theorems(2, 1, 11).unwrap();
        let b = verify_up_theorems(2, 1, 7).unwrap();
        let c = verify_up_theorems(3, 1, 7).unwrap();
        a[0].passed() && b[1].passed() && c[1].passed()
    };
    Outcome::new(
        tally.ok() && witness_ok && spot,
        format!(
            "{}; {documented} documented odd-e discrepancies (n=2,m=1,p=5 witness {}), {applicable_up} applicable up-theorem reports, {applicable_root} applicable root-theorem reports",
            tally.summary(),
            if witness_ok { "3*I vs 4*I" } else { "missing" }
        ),
    )
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 1..=20 {
        if !verify_conjecture_symbolic(n).unwrap().equal {
            bad.push(format!("symbolic n={n}"));
        }
    }
    let mut at_60 = Duration::ZERO;
    for n in 1..=100 {
        for m in 1..=3 {
            if !verify_conjecture_int(n, m, Method::Auto).unwrap().equal {
                bad.push(format!("n={n} m={m}"));
            }
        }
        if n == 60 {
            at_60 = start.elapsed();
        }
    }
    let total = start.elapsed();
    let fast = at_60 < Duration::from_secs(120) && total < Duration::from_secs(900);
    Outcome::new(
        bad.is_empty() && fast,
        format!("symbolic n<=20, integer n<=100 at m=1,2,3; n<=60 in {at_60:.1?}, total {total:.1?}{}", if bad.is_empty() { String::new() } else { format!("; failing {bad:?}") }),
    )
}

fn criterion_10() -> Outcome {
    let sets = [(1, 1, 0, 1), (1, 1, -1, 0), (0, 1, -1, 1), (-1, 1, 1, 0), (2, 1, 1, 1)];
    let mut tally = Tally::default();
    let mut sampled = 0;
    let mut trivial = 0;
    for &(a, b, c, d) in &sets {
        let params = NettedParams::<BigInt>::from_i64s(a, b, c, d).unwrap();
        for seed in 0..10u64 {
            let n = 3 + (seed % 2) as usize;
            match sample_tableau(&params, n, seed).unwrap() {
                Some(t) => {
                    sampled += 1;
                    tally.add(&boundary_check(&t));
                    tally.add(&verify_power_netted(&t.window(), &params, 3).unwrap());
                }
                None => trivial += 1,
            }
        }
    }
    Outcome::new(tally.ok() && sampled + trivial == 50, format!("{sampled} tableaux sampled, {trivial} trivial kernels; {}", tally.summary()))
}

type Criterion = (&'static str, Duration, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("example powers of T_3(m)", Duration::from_secs(1), criterion_1),
        ("netted powers", Duration::from_secs(30), criterion_2),
        ("power times seed vector", Duration::from_secs(30), criterion_3),
        ("sum identities", Duration::from_secs(30), criterion_4),
        ("closed-form entries", Duration::from_secs(30), criterion_5),
        ("inverse", Duration::from_secs(10), criterion_6),
        ("generating function", Duration::from_secs(30), criterion_7),
        ("congruences mod p", Duration::from_secs(60), criterion_8),
        ("characteristic polynomial", Duration::from_secs(900), criterion_9),
        ("kernel sampler", Duration::from_secs(30), criterion_10),
    ];
    let mut failed = Vec::new();
    for (k, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        let took = start.elapsed();
        let ok = out.ok && took <= *limit;
        println!(
            "criterion {:>2} {}: {} ({:.2?}, limit {:?}) {}",
            k + 1,
            if ok { "PASS" } else { "FAIL" },
            name,
            took,
            limit,
            out.detail
        );
        if !ok {
            failed.push(k + 1);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
