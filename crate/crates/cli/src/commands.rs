//! Grid construction for each subcommand.

use num_bigint::BigInt;
use serde_json::{json, Value};

use netted_core::conjecture::{verify_conjecture_int, verify_conjecture_symbolic, Method};
use netted_core::exact::modp::is_prime_trial;
use netted_core::fibmat::{
    build_t, build_t_inverse, verify_closed_forms, verify_corollary_identities, verify_fib_recurrence, verify_inverse,
    verify_power_vector, verify_t3_example, verify_uniqueness, FibSpec,
};
use netted_core::genfunc::verify_genfunc;
use netted_core::modular::{
    entry_point, order_mod_p, order_report, verify_entry_point_theorem, verify_root_theorem, verify_up_theorems,
};
use netted_core::netted::{
    boundary_check, build_family, recurrence_check, sample_tableau, verify_coeff_recurrence, verify_power_netted,
    FamilyKind,
};
use netted_core::sequences::{cassini_report, lucas_report};
use netted_core::{Matrix, Report, Ring, ZPoly};

use crate::output::Sink;
use crate::sweep::Task;
use crate::{CliError, GlobalOpts};

const DEFAULT_M: [i64; 3] = [1, 2, 3];
const DEFAULT_P: [u64; 6] = [3, 5, 7, 11, 13, 29];

/// Parameter grid resolved from the global flags.
#[derive(Clone, Debug)]
pub struct Grid {
    n: Vec<usize>,
    n_max: Option<usize>,
    m: Vec<i64>,
    p: Vec<u64>,
    e_max: Option<u64>,
    l_max: Option<u64>,
    seed: u64,
    pub jobs: usize,
    symbolic: bool,
}

fn sorted<T: Ord + Clone>(v: &[T]) -> Vec<T> {
    let mut v = v.to_vec();
    v.sort();
    v.dedup();
    v
}

impl Grid {
    pub fn from_opts(o: &GlobalOpts) -> Result<Self, CliError> {
        if let Some(&p) = o.p.iter().find(|&&p| !is_prime_trial(p)) {
            return Err(CliError::Usage(format!("--p {p} is not prime")));
        }
        if o.jobs == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        if o.n.contains(&0) || o.n_max == Some(0) {
            return Err(CliError::Usage("dimensions start at 1".into()));
        }
        Ok(Grid {
            n: sorted(&o.n),
            n_max: o.n_max,
            m: sorted(&o.m),
            p: sorted(&o.p),
            e_max: o.e_max,
            l_max: o.l_max,
            seed: o.seed,
            jobs: o.jobs,
            symbolic: o.symbolic,
        })
    }

    fn dims(&self, lo: usize, default_hi: usize) -> Vec<usize> {
        if !self.n.is_empty() {
            return self.n.clone();
        }
        (lo..=self.n_max.unwrap_or(default_hi)).collect()
    }

    fn ms(&self) -> Vec<i64> {
        if self.m.is_empty() {
            DEFAULT_M.to_vec()
        } else {
            self.m.clone()
        }
    }

    fn ps(&self) -> Vec<u64> {
        if self.p.is_empty() {
            DEFAULT_P.to_vec()
        } else {
            self.p.clone()
        }
    }

    fn e_max(&self, default: u64) -> u64 {
        self.e_max.unwrap_or(default)
    }

    fn no_symbolic(&self, what: &str) -> Result<(), CliError> {
        if self.symbolic {
            return Err(CliError::Usage(format!("--symbolic is not supported by {what}")));
        }
        Ok(())
    }
}

fn need_dims(dims: &[usize], min: usize) -> Result<(), CliError> {
    match dims.iter().find(|&&n| n < min) {
        Some(n) => Err(CliError::Usage(format!("dimension {n} is below the minimum {min}"))),
        None => Ok(()),
    }
}

fn matrix_json<R: Ring>(a: &Matrix<R>) -> Value {
    Value::Array(
        a.to_rows()
            .into_iter()
            .map(|row| Value::Array(row.into_iter().map(|v| Value::String(v.to_string())).collect()))
            .collect(),
    )
}

fn build_one<R: Ring>(n: usize, m: R, power: Option<u64>, inverse: bool) -> Result<Matrix<R>, CliError> {
    let spec = FibSpec::new(n, m)?;
    Ok(if inverse {
        build_t_inverse(&spec)
    } else {
        build_t(&spec).mat_pow(power.unwrap_or(1))?
    })
}

pub fn build(grid: &Grid, power: Option<u64>, inverse: bool, sink: &mut Sink) -> Result<(), CliError> {
    if grid.n.is_empty() {
        return Err(CliError::Usage("build needs --n".into()));
    }
    let mut rows: Vec<(String, String, Value)> = Vec::new();
    for &n in &grid.n {
        if grid.symbolic {
            let a = build_one(n, ZPoly::var(), power, inverse)?;
            rows.push((format!("n={n} m=symbolic"), a.to_string(), json!({"n": n.to_string(), "m": "symbolic", "matrix": matrix_json(&a)})));
        } else {
            let ms = if grid.m.is_empty() { vec![1] } else { grid.m.clone() };
            for m in ms {
                let a = build_one(n, BigInt::from(m), power, inverse)?;
                rows.push((format!("n={n} m={m}"), a.to_string(), json!({"n": n.to_string(), "m": m.to_string(), "matrix": matrix_json(&a)})));
            }
        }
    }
    let what = if inverse { "inverse".to_string() } else { power.unwrap_or(1).to_string() };
    let single = rows.len() == 1;
    for (label, text, mut value) in rows {
        value[if inverse { "inverse" } else { "power" }] = if inverse { Value::Bool(true) } else { Value::String(what.clone()) };
        let line = if single { text } else { format!("{label}: {text}") };
        sink.record(&line, value)?;
    }
    Ok(())
}

pub fn entry_points(grid: &Grid, sink: &mut Sink) -> Result<(), CliError> {
    grid.no_symbolic("mod")?;
    let (ms, ps) = (grid.ms(), grid.ps());
    let single = ms.len() * ps.len() == 1;
    for &m in &ms {
        for &p in &ps {
            let e = entry_point(m, p);
            let text = if single { e.to_string() } else { format!("m={m} p={p}: {e}") };
            sink.record(&text, json!({"m": m.to_string(), "p": p.to_string(), "entry_point": e.to_string()}))?;
        }
    }
    Ok(())
}

pub fn orders(grid: &Grid, sink: &mut Sink) -> Result<(), CliError> {
    grid.no_symbolic("mod")?;
    let (dims, ms, ps) = (grid.dims(1, 8), grid.ms(), grid.ps());
    let single = dims.len() * ms.len() * ps.len() == 1;
    for &n in &dims {
        for &m in &ms {
            for &p in &ps {
                let t = order_mod_p(n, m, p)?;
                let text = if single { t.to_string() } else { format!("n={n} m={m} p={p}: {t}") };
                sink.record(&text, json!({"n": n.to_string(), "m": m.to_string(), "p": p.to_string(), "order": t.to_string()}))?;
            }
        }
    }
    Ok(())
}

pub fn netted(grid: &Grid) -> Result<Vec<Task>, CliError> {
    let dims = grid.dims(2, 8);
    need_dims(&dims, 2)?;
    let e_max = grid.e_max(6);
    let seed = grid.seed;
    let mut tasks = Vec::new();
    if grid.symbolic {
        for kind in FamilyKind::ALL {
            tasks.push(Task::new(format!("coeff {kind}"), move || {
                let (_, params) = build_family(kind, 2, &ZPoly::var())?;
                Ok(verify_coeff_recurrence(&params, e_max.max(3)).into_iter().map(|r| r.param("m", "m").param("family", kind)).collect())
            }));
        }
        for &n in &dims {
            for kind in FamilyKind::ALL {
                tasks.push(Task::new(format!("netted n={n} {kind}"), move || {
                    let m = ZPoly::var();
                    let (a, params) = build_family(kind, n, &m)?;
                    Ok(vec![verify_power_netted(&a, &params, e_max)?.param("m", &m).param("family", kind)])
                }));
            }
        }
        return Ok(tasks);
    }
    for m in grid.ms() {
        for kind in FamilyKind::ALL {
            tasks.push(Task::new(format!("coeff m={m} {kind}"), move || {
                let (_, params) = build_family(kind, 2, &BigInt::from(m))?;
                Ok(verify_coeff_recurrence(&params, e_max.max(3)).into_iter().map(|r| r.param("m", m).param("family", kind)).collect())
            }));
        }
    }
    for &n in &dims {
        for m in grid.ms() {
            for kind in FamilyKind::ALL {
                tasks.push(Task::new(format!("netted n={n} m={m} {kind}"), move || {
                    let mb = BigInt::from(m);
                    let (a, params) = build_family(kind, n, &mb)?;
                    let tag = |r: Report| r.param("m", m).param("family", kind);
                    let mut out = vec![tag(verify_power_netted(&a, &params, e_max)?)];
                    if let Some(t) = sample_tableau(&params, n, seed)? {
                        let tag = |r: Report| tag(r).param("seed", seed);
                        out.push(tag(boundary_check(&t)));
                        out.push(tag(recurrence_check(&t)));
                        out.push(tag(verify_power_netted(&t.window(), &params, e_max.min(3))?).param("tableau", "sampled"));
                    }
                    Ok(out)
                }));
            }
        }
    }
    Ok(tasks)
}

fn fib_point<R: Ring>(n: usize, m: R, e_max: u64, l_max: u64) -> netted_core::Result<Vec<Report>> {
    let spec = FibSpec::new(n, m)?;
    let mut out = vec![
        verify_power_vector(&spec, e_max)?,
        verify_fib_recurrence(&spec, e_max)?,
        verify_uniqueness(&spec),
    ];
    out.extend(verify_closed_forms(&spec, e_max.max(1))?);
    out.push(verify_inverse(&spec)?);
    out.extend(verify_corollary_identities(&spec, l_max, l_max)?);
    Ok(out)
}

pub fn fib(grid: &Grid) -> Result<Vec<Task>, CliError> {
    let dims = grid.dims(2, 8);
    need_dims(&dims, 2)?;
    let e_max = grid.e_max(6);
    let l_max = grid.l_max.unwrap_or(4);
    let seq_max = (4 * e_max).max(8) as usize;
    let mut tasks = vec![Task::new("example T_3", || Ok(vec![verify_t3_example()?]))];
    if grid.symbolic {
        tasks.push(Task::new("sequences m", move || {
            let m = ZPoly::var();
            Ok(vec![cassini_report(&m, seq_max), lucas_report(&m, seq_max)])
        }));
        for &n in &dims {
            tasks.push(Task::new(format!("fib n={n}"), move || fib_point(n, ZPoly::var(), e_max, l_max)));
        }
        return Ok(tasks);
    }
    for m in grid.ms() {
        tasks.push(Task::new(format!("sequences m={m}"), move || {
            let m = BigInt::from(m);
            Ok(vec![cassini_report(&m, seq_max), lucas_report(&m, seq_max)])
        }));
    }
    for &n in &dims {
        for m in grid.ms() {
            tasks.push(Task::new(format!("fib n={n} m={m}"), move || fib_point(n, BigInt::from(m), e_max, l_max)));
        }
    }
    Ok(tasks)
}

pub fn genfunc(grid: &Grid) -> Result<Vec<Task>, CliError> {
    let dims = grid.dims(2, 6);
    need_dims(&dims, 2)?;
    let e_max = grid.e_max(4);
    let mut tasks = Vec::new();
    for &n in &dims {
        for e in 1..=e_max {
            if grid.symbolic {
                tasks.push(Task::new(format!("genfunc n={n} e={e}"), move || {
                    verify_genfunc(&FibSpec::new(n, ZPoly::var())?, e)
                }));
                continue;
            }
            for m in grid.ms() {
                tasks.push(Task::new(format!("genfunc n={n} m={m} e={e}"), move || {
                    verify_genfunc(&FibSpec::new(n, BigInt::from(m))?, e)
                }));
            }
        }
    }
    Ok(tasks)
}

pub fn modular(grid: &Grid) -> Result<Vec<Task>, CliError> {
    grid.no_symbolic("mod")?;
    let dims = grid.dims(2, 8);
    need_dims(&dims, 1)?;
    let mut tasks = Vec::new();
    for &n in &dims {
        for m in grid.ms() {
            for p in grid.ps() {
                tasks.push(Task::new(format!("mod n={n} m={m} p={p}"), move || {
                    let mut out = verify_entry_point_theorem(n, m, p)?;
                    out.extend(verify_up_theorems(n, m, p)?);
                    out.extend(verify_root_theorem(n, m, p)?);
                    out.push(order_report(n, m, p)?);
                    Ok(out)
                }));
            }
        }
    }
    Ok(tasks)
}

/// `show` adds the computed polynomial to each report.
fn charpoly_tasks(dims: &[usize], ms: Option<Vec<i64>>, show: bool) -> Vec<Task> {
    let mut tasks = Vec::new();
    for &n in dims {
        match &ms {
            None => tasks.push(Task::new(format!("charpoly n={n}"), move || {
                let c = verify_conjecture_symbolic(n)?;
                let r = c.to_report().param("equal", c.equal);
                Ok(vec![if show { r.param("charpoly", &c.computed) } else { r }])
            })),
            Some(ms) => {
                for &m in ms {
                    tasks.push(Task::new(format!("charpoly n={n} m={m}"), move || {
                        let c = verify_conjecture_int(n, m, Method::Auto)?;
                        let r = c.to_report().param("equal", c.equal);
                        Ok(vec![if show { r.param("charpoly", c.computed.display_with("x")) } else { r }])
                    }));
                }
            }
        }
    }
    tasks
}

pub fn charpoly(grid: &Grid) -> Result<Vec<Task>, CliError> {
    if grid.symbolic {
        Ok(charpoly_tasks(&grid.dims(1, 20), None, true))
    } else {
        Ok(charpoly_tasks(&grid.dims(1, 100), Some(grid.ms()), true))
    }
}

/// Integer grids for every verifier, plus the symbolic checks that stay
/// cheap: powers times the seed vector for `n <= 5`, generating functions
/// for `n <= 3`, and characteristic polynomials for `n <= 20`.
pub fn all(grid: &Grid) -> Result<Vec<Task>, CliError> {
    grid.no_symbolic("all")?;
    let mut tasks = netted(grid)?;
    tasks.extend(fib(grid)?);
    tasks.extend(genfunc(grid)?);
    tasks.extend(modular(grid)?);
    let small = |hi: usize| -> Vec<usize> { grid.dims(2, 8).into_iter().filter(|&n| (2..=hi).contains(&n)).collect() };
    for n in small(5) {
        tasks.push(Task::new(format!("symbolic power vector n={n}"), move || {
            Ok(vec![verify_power_vector(&FibSpec::new(n, ZPoly::var())?, 3)?])
        }));
    }
    for n in small(3) {
        for e in 1..=3 {
            tasks.push(Task::new(format!("symbolic genfunc n={n} e={e}"), move || {
                verify_genfunc(&FibSpec::new(n, ZPoly::var())?, e)
            }));
        }
    }
    tasks.extend(charpoly_tasks(&grid.dims(1, 20), None, false));
    tasks.extend(charpoly_tasks(&grid.dims(1, 100), Some(grid.ms()), false));
    Ok(tasks)
}
