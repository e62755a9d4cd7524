//! Registry of named cross-checks between brute-force enumeration, the
//! bijections and the closed-form counts.
//!
//! Each check names its oracle side; `expected` always comes from the
//! oracle and `actual` from the side under test, so a failure points at one
//! side. Rows beyond a check's enumeration cap are reported as skipped,
//! never silently dropped.
//!
//! | check | oracle | under test |
//! |---|---|---|
//! | `bell_count` | Bell triangle | repetition-sequence enumeration |
//! | `catalan_rep021` | binomial Catalan formula | 021-avoiding repetition and ascent enumeration |
//! | `phi_bijection` | Bell triangle, partition enumeration | `phi`: injectivity, image, repetitions to dividers, inverse |
//! | `psi_bijection` | Catalan formula, path enumeration | `psi`: injectivity, image, repetitions to valleys, inverse |
//! | `tau_bijection` | Catalan formula, path enumeration | `tau`: injectivity, inverse, descents to `DDU`, zero runs to good peak runs, final `UD` iff final 0 |
//! | `tau_modes_agree` | recursive `tau` | incremental `tau`; main-value count equals `DD`-component count |
//! | `F_census` | census of `(#0, #isolated 0, #long 0-runs)` over sequences and of the good-peak statistics over paths | closed-form `F` |
//! | `F_catalan` | Catalan formula | `F(x,1,1,1)`; closed form equals fixed point |
//! | `zero_count_dist` | census by number of zeros | `F(x,y,1,1)` |
//! | `u_suite` | convolution recurrence | enumeration without `00`, `F(x,1,1,0)`, prefix counts by first nontrivial maximum |
//! | `v_suite` | convolution recurrence | explicit sum, enumeration without isolated zeros, `F(x,1,0,1)` |
//! | `touchard_runs` | Touchard formula | census by zero runs, `DDU` census over paths; runs-refined counts without isolated zeros |
//! | `descent_021_formula` | `binom(n+k, 3k+1) C_k` | census by descents, `G(x,y)`, descent tops and bottoms |
//! | `uudu_equinumerous` | 021-avoiding descent sequence census | paths avoiding `UUDU` |
//! | `lemma1_equiv` | pattern search for 021 | "nonzero entries weakly increasing", all three families |
//! | `lemma2_ascent_top` | count of 021-avoiding ascent sequences | tight indices are ascent tops |
//!
//! Not checked: the connection to (2+2)-free posets, the alternative
//! bijection from earlier work, a bijection explaining the `UUDU`
//! equinumerosity (only the counts are compared), and the prefix-deletion
//! maps behind the recurrence for sequences without `00` (verified by
//! counting the sets they relate, not as maps).

use std::collections::{BTreeMap, HashSet};
use std::sync::{Arc, Mutex};
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::bijections::{
    main_values, phi, phi_inverse, psi, psi_inverse, tau, tau_inverse, TauMode,
};
use crate::dyck::{
    count_factor, dd_components, parse_steps, peak_run_profile, valleys, visit_paths, DyckPath, Step,
    DEFAULT_PATH_CAP,
};
use crate::error::{Error, Result};
use crate::partitions::{bell_number, enumerate_partitions, DEFAULT_PARTITION_CAP};
use crate::seqcore::{
    avoids_021, descent_count, descent_statistics, nonzero_weakly_increasing, repetition_count,
    tight_indices, zero_statistics, Constraint, Enumerator, Family, IntSequence,
};
use crate::series::{
    catalan, descent_021_count, expand_f_closed, expand_f_fixedpoint, expand_g,
    f_specialized_coefficients, touchard, u_sequence, v_explicit, v_sequence, TruncSeries,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Outcome {
    pub n: u32,
    pub expected: String,
    pub actual: String,
    pub status: Status,
}

/// Result of one check. `passed` is false exactly when some row failed;
/// skipped and not-applicable rows do not fail a check.
#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub max_n: u32,
    pub oracle: String,
    pub outcomes: Vec<Outcome>,
    pub passed: bool,
    pub elapsed_ms: u64,
}

impl CheckReport {
    pub fn failures(&self) -> impl Iterator<Item = &Outcome> {
        self.outcomes.iter().filter(|o| o.status == Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.outcomes.iter().filter(|o| o.status == status).count()
    }

    /// JSON without the timing field, for byte-for-byte comparisons.
    pub fn to_json_untimed(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self).expect("serializable");
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    }
}

struct CheckSpec {
    name: &'static str,
    default_depth: u32,
    /// Largest `n` the check will attempt.
    cap: u32,
    oracle: &'static str,
    run: fn(u32) -> Vec<Outcome>,
}

const REGISTRY: [CheckSpec; 16] = [
    CheckSpec {
        name: "bell_count",
        default_depth: 11,
        cap: 13,
        oracle: "Bell triangle",
        run: bell_count,
    },
    CheckSpec {
        name: "catalan_rep021",
        default_depth: 12,
        cap: 14,
        oracle: "Catalan numbers by binomial difference",
        run: catalan_rep021,
    },
    CheckSpec {
        name: "phi_bijection",
        default_depth: 10,
        cap: 11,
        oracle: "Bell triangle and set partition enumeration",
        run: phi_bijection,
    },
    CheckSpec {
        name: "psi_bijection",
        default_depth: 12,
        cap: 13,
        oracle: "Catalan numbers and Dyck path enumeration",
        run: psi_bijection,
    },
    CheckSpec {
        name: "tau_bijection",
        default_depth: 12,
        cap: 13,
        oracle: "Catalan numbers and Dyck path enumeration",
        run: tau_bijection,
    },
    CheckSpec {
        name: "tau_modes_agree",
        default_depth: 12,
        cap: 13,
        oracle: "recursive tau; 021-avoiding ascent sequence count",
        run: tau_modes_agree,
    },
    CheckSpec {
        name: "F_census",
        default_depth: 10,
        cap: 12,
        oracle: "census of zero statistics over sequences",
        run: f_census,
    },
    CheckSpec {
        name: "F_catalan",
        default_depth: 20,
        cap: 30,
        oracle: "Catalan numbers by binomial difference",
        run: f_catalan,
    },
    CheckSpec {
        name: "zero_count_dist",
        default_depth: 10,
        cap: 12,
        oracle: "census by number of zeros",
        run: zero_count_dist,
    },
    CheckSpec {
        name: "u_suite",
        default_depth: 14,
        cap: 16,
        oracle: "convolution recurrence with u0=u1=u2=1",
        run: u_suite,
    },
    CheckSpec {
        name: "v_suite",
        default_depth: 14,
        cap: 16,
        oracle: "convolution recurrence with v0=1, v1=0, v2=1",
        run: v_suite,
    },
    CheckSpec {
        name: "touchard_runs",
        default_depth: 10,
        cap: 12,
        oracle: "Touchard formula",
        run: touchard_runs,
    },
    CheckSpec {
        name: "descent_021_formula",
        default_depth: 12,
        cap: 14,
        oracle: "binom(n+k, 3k+1) * C_k",
        run: descent_021_formula,
    },
    CheckSpec {
        name: "uudu_equinumerous",
        default_depth: 12,
        cap: DEFAULT_PATH_CAP as u32,
        oracle: "021-avoiding descent sequence census",
        run: uudu_equinumerous,
    },
    CheckSpec {
        name: "lemma1_equiv",
        default_depth: 10,
        cap: 11,
        oracle: "pattern search for 021",
        run: avoidance_tests_agree,
    },
    CheckSpec {
        name: "lemma2_ascent_top",
        default_depth: 10,
        cap: 12,
        oracle: "021-avoiding ascent sequence count",
        run: tight_indices_are_ascent_tops,
    },
];

/// Registered check names, in report order.
pub fn check_names() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.name).collect()
}

pub fn default_depth(name: &str) -> Option<u32> {
    spec(name).map(|c| c.default_depth)
}

pub fn depth_cap(name: &str) -> Option<u32> {
    spec(name).map(|c| c.cap)
}

fn spec(name: &str) -> Option<&'static CheckSpec> {
    REGISTRY.iter().find(|c| c.name == name)
}

/// Which checks to run and how deep.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyConfig {
    /// `None` runs every check; `Some(vec![])` runs none.
    pub filter: Option<Vec<String>>,
    pub depths: BTreeMap<String, u32>,
}

pub fn run_check(name: &str, max_n: u32) -> Result<CheckReport> {
    let spec = spec(name).ok_or_else(|| Error::UnknownCheck(name.to_string()))?;
    Ok(execute(spec, max_n))
}

pub fn run_all(config: &VerifyConfig) -> Result<Vec<CheckReport>> {
    for name in config
        .filter
        .iter()
        .flatten()
        .chain(config.depths.keys())
    {
        if spec(name).is_none() {
            return Err(Error::UnknownCheck(name.clone()));
        }
    }
    let selected: Vec<&CheckSpec> = REGISTRY
        .iter()
        .filter(|c| match &config.filter {
            None => true,
            Some(names) => names.iter().any(|n| n == c.name),
        })
        .collect();
    Ok(selected
        .par_iter()
        .map(|c| {
            let depth = config.depths.get(c.name).copied().unwrap_or(c.default_depth);
            execute(c, depth)
        })
        .collect())
}

/// Runs the named checks at their default depths.
pub fn run_selected(names: &[&str]) -> Result<Vec<CheckReport>> {
    run_all(&VerifyConfig {
        filter: Some(names.iter().map(|s| s.to_string()).collect()),
        depths: BTreeMap::new(),
    })
}

fn execute(spec: &CheckSpec, max_n: u32) -> CheckReport {
    let start = Instant::now();
    let mut outcomes = (spec.run)(max_n.min(spec.cap));
    for n in spec.cap + 1..=max_n {
        outcomes.push(Outcome {
            n,
            expected: String::new(),
            actual: format!("skipped: n exceeds cap {}", spec.cap),
            status: Status::Skipped,
        });
    }
    CheckReport {
        check_name: spec.name.to_string(),
        max_n,
        oracle: spec.oracle.to_string(),
        passed: outcomes.iter().all(|o| o.status != Status::Fail),
        outcomes,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

fn row(n: u32, expected: impl ToString, actual: impl ToString) -> Outcome {
    let (expected, actual) = (expected.to_string(), actual.to_string());
    let status = if expected == actual {
        Status::Pass
    } else {
        Status::Fail
    };
    Outcome {
        n,
        expected,
        actual,
        status,
    }
}

fn not_applicable(n: u32, why: &str) -> Outcome {
    Outcome {
        n,
        expected: String::new(),
        actual: why.to_string(),
        status: Status::NotApplicable,
    }
}

fn error_row(n: u32, expected: impl ToString, err: Error) -> Outcome {
    Outcome {
        n,
        expected: expected.to_string(),
        actual: format!("error: {err}"),
        status: Status::Fail,
    }
}

/// `expected` against `actual`, with `problems` appended to `actual` so any
/// side condition that failed turns the row red.
fn row_with(n: u32, expected: impl ToString, actual: impl ToString, problems: &[String]) -> Outcome {
    let mut actual = actual.to_string();
    for p in problems {
        actual.push_str("; ");
        actual.push_str(p);
    }
    row(n, expected, actual)
}

fn unlimited() -> Enumerator {
    Enumerator::with_cap(usize::MAX)
}

fn each(family: Family, n: u32, constraint: Constraint, visit: impl FnMut(&[u32])) {
    unlimited()
        .visit(family, n as usize, constraint, visit)
        .expect("uncapped enumerator");
}

fn count(family: Family, n: u32, constraint: Constraint) -> u64 {
    let mut total = 0;
    each(family, n, constraint, |_| total += 1);
    total
}

fn each_path(n: u32, visit: impl FnMut(&DyckPath)) {
    visit_paths(n as usize, usize::MAX, visit).expect("uncapped path enumeration");
}

fn join<T: ToString>(values: impl IntoIterator<Item = T>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Dense row `0..=len-1` of a sparse census.
fn dense(census: &BTreeMap<usize, u64>, len: usize) -> Vec<u64> {
    (0..len).map(|k| census.get(&k).copied().unwrap_or(0)).collect()
}

// The 4-variable series is shared between checks; the largest order
// computed so far is kept and truncated on demand.
static F_CACHE: Mutex<Option<Arc<TruncSeries>>> = Mutex::new(None);

fn f_series(order: u32) -> Result<TruncSeries> {
    let mut cache = F_CACHE.lock().unwrap_or_else(|e| e.into_inner());
    if let Some(f) = cache.as_ref() {
        if f.order() >= order {
            return Ok(f.with_order(order));
        }
    }
    let f = Arc::new(expand_f_closed(order)?);
    *cache = Some(f.clone());
    Ok(f.with_order(order))
}

fn f_coefficients(order: u32, y: i64, z: i64, w: i64) -> Result<Vec<BigUint>> {
    let f = f_series(order)?;
    Ok(f_specialized_coefficients(&f, y, z, w)?
        .into_iter()
        .map(|c| c.to_biguint().expect("nonnegative"))
        .collect())
}

fn bell_count(max_n: u32) -> Vec<Outcome> {
    (0..=max_n)
        .map(|n| {
            row(
                n,
                bell_number(n as usize),
                count(Family::Repetition, n, Constraint::none()),
            )
        })
        .collect()
}

fn catalan_rep021(max_n: u32) -> Vec<Outcome> {
    (0..=max_n)
        .map(|n| {
            let r = count(Family::Repetition, n, Constraint::avoiding_021());
            let a = count(Family::Ascent, n, Constraint::avoiding_021());
            let actual = if r == a {
                r.to_string()
            } else {
                format!("repetition {r}, ascent {a}")
            };
            row(n, catalan(n as u64), actual)
        })
        .collect()
}

fn phi_golden(n: u32) -> Vec<String> {
    let cases: &[(&str, &str)] = match n {
        1 => &[("0", "1")],
        2 => &[("00", "1/2")],
        3 => &[("002", "1/23")],
        4 => &[("0020", "14/23"), ("0021", "1/234"), ("0022", "1/23/4")],
        _ => &[],
    };
    cases
        .iter()
        .filter_map(|(s, want)| {
            let got = s
                .parse::<IntSequence>()
                .and_then(|a| phi(&a))
                .map(|p| p.to_string());
            match got {
                Ok(got) if got == *want => None,
                other => Some(format!("phi({s}) = {other:?}, expected {want}")),
            }
        })
        .collect()
}

fn phi_bijection(max_n: u32) -> Vec<Outcome> {
    (0..=max_n)
        .map(|n| {
            if n == 0 {
                return not_applicable(0, "phi is defined for n >= 1");
            }
            let expected = bell_number(n as usize);
            let all: HashSet<_> = match enumerate_partitions(n as usize) {
                Ok(all) => all.into_iter().collect(),
                Err(e) => return error_row(n, expected, e),
            };
            let mut images = HashSet::new();
            let mut problems = Vec::new();
            each(Family::Repetition, n, Constraint::none(), |a| {
                let seq = IntSequence::from(a);
                let ok = phi(&seq).and_then(|p| {
                    let back = phi_inverse(&p)?;
                    Ok((p.divider_count() == repetition_count(a)
                        && back == seq
                        && all.contains(&p))
                    .then_some(p))
                });
                match ok {
                    Ok(Some(p)) => {
                        images.insert(p);
                    }
                    Ok(None) => {}
                    Err(e) if problems.len() < 3 => problems.push(format!("{seq}: {e}")),
                    Err(_) => {}
                }
            });
            problems.extend(phi_golden(n));
            debug_assert!(n as usize <= DEFAULT_PARTITION_CAP);
            row_with(n, expected, images.len(), &problems)
        })
        .collect()
}

fn golden_path(label: &str, got: Result<DyckPath>, want: &DyckPath) -> Option<String> {
    match got {
        Ok(p) if &p == want => None,
        Ok(p) => Some(format!("{label} = {p}, expected {want}")),
        Err(e) => Some(format!("{label}: {e}")),
    }
}

fn psi_golden(n: u32) -> Vec<String> {
    let n_ = n as usize;
    let mut out = Vec::new();
    let zeros = IntSequence::new(vec![0; n_]);
    out.extend(golden_path(&format!("psi({zeros})"), psi(&zeros), &DyckPath::sawtooth(n_)));
    let alternating = IntSequence::new((0..n).map(|i| i % 2).collect());
    out.extend(golden_path(
        &format!("psi({alternating})"),
        psi(&alternating),
        &DyckPath::pyramid(n_),
    ));
    if n == 9 {
        let want = DyckPath::from_steps(parse_steps("UDUUDUUUUDDDUDDDUD").expect("literal"))
            .expect("literal");
        let a: IntSequence = "000223303".parse().expect("literal");
        out.extend(golden_path("psi(000223303)", psi(&a), &want));
    }
    out
}

fn psi_bijection(max_n: u32) -> Vec<Outcome> {
    (0..=max_n)
        .map(|n| {
            if n == 0 {
                return not_applicable(0, "psi is defined for n >= 1");
            }
            let mut all = HashSet::new();
            each_path(n, |p| {
                all.insert(p.clone());
            });
            let mut images = HashSet::new();
            let mut problems = Vec::new();
            each(Family::Repetition, n, Constraint::avoiding_021(), |a| {
                let seq = IntSequence::from(a);
                let ok = psi(&seq).and_then(|p| {
                    let back = psi_inverse(&p)?;
                    Ok((valleys(&p) == repetition_count(a) && back == seq && all.contains(&p))
                        .then_some(p))
                });
                match ok {
                    Ok(Some(p)) => {
                        images.insert(p);
                    }
                    Ok(None) => {}
                    Err(e) if problems.len() < 3 => problems.push(format!("{seq}: {e}")),
                    Err(_) => {}
                }
            });
            problems.extend(psi_golden(n));
            row_with(n, all.len(), images.len(), &problems)
        })
        .collect()
}

fn tau_golden(n: u32) -> Vec<String> {
    let cases: &[(&str, &str)] = match n {
        1 => &[("0", "UD")],
        5 => &[("01011", "UUDDUDUUDD")],
        6 => &[
            ("010110", "UUDDUDUUDDUD"),
            ("010111", "UUDDUDUDUUDD"),
            ("010112", "UUDDUUDUUDDD"),
            ("010113", "UUUDDUDUUDDD"),
        ],
        _ => &[],
    };
    let mut out = Vec::new();
    for (s, want) in cases {
        let want = DyckPath::from_steps(parse_steps(want).expect("literal")).expect("literal");
        let a: IntSequence = s.parse().expect("literal");
        for mode in [TauMode::Recursive, TauMode::Algorithmic] {
            out.extend(golden_path(&format!("tau({s}, {mode})"), tau(&a, mode), &want));
        }
    }
    out
}

fn tau_bijection(max_n: u32) -> Vec<Outcome> {
    let ddu = parse_steps("DDU").expect("literal");
    (0..=max_n)
        .map(|n| {
            let mut all = HashSet::new();
            each_path(n, |p| {
                all.insert(p.clone());
            });
            let mut images = HashSet::new();
            let mut problems = Vec::new();
            each(Family::Ascent, n, Constraint::avoiding_021(), |a| {
                let seq = IntSequence::from(a);
                let ok = tau(&seq, TauMode::Recursive).and_then(|p| {
                    let back = tau_inverse(&p)?;
                    let ends_ud = p.steps().ends_with(&[Step::U, Step::D]);
                    let statistics = count_factor(&p, &ddu) == descent_count(a)
                        && peak_run_profile(&p).good_run_lengths() == zero_statistics(a).run_lengths;
                    let final_peak = n == 0 || ends_ud == (a[a.len() - 1] == 0);
                    Ok((back == seq && statistics && final_peak && all.contains(&p)).then_some(p))
                });
                match ok {
                    Ok(Some(p)) => {
                        images.insert(p);
                    }
                    Ok(None) => {}
                    Err(e) if problems.len() < 3 => problems.push(format!("{seq}: {e}")),
                    Err(_) => {}
                }
            });
            problems.extend(tau_golden(n));
            row_with(n, all.len(), images.len(), &problems)
        })
        .collect()
}

fn tau_modes_agree(max_n: u32) -> Vec<Outcome> {
    (0..=max_n)
        .map(|n| {
            let mut agree = 0u64;
            let mut problems = Vec::new();
            each(Family::Ascent, n, Constraint::avoiding_021(), |a| {
                let seq = IntSequence::from(a);
                let result = (|| -> Result<bool> {
                    let p = tau(&seq, TauMode::Recursive)?;
                    let q = tau(&seq, TauMode::Algorithmic)?;
                    // main values for the next entry vs DD-components of tau(a)
                    let components_match = n == 0
                        || main_values(&seq)?.len() == dd_components(&p)?.components.len();
                    Ok(p == q && components_match)
                })();
                match result {
                    Ok(true) => agree += 1,
                    Ok(false) => {}
                    Err(e) if problems.len() < 3 => problems.push(format!("{seq}: {e}")),
                    Err(_) => {}
                }
            });
            row_with(n, catalan(n as u64), agree, &problems)
        })
        .collect()
}

fn render_census(census: &BTreeMap<[u32; 3], BigUint>) -> String {
    census
        .iter()
        .map(|(e, c)| format!("{}:{}:{}={c}", e[0], e[1], e[2]))
        .collect::<Vec<_>>()
        .join(" ")
}

fn f_census(max_n: u32) -> Vec<Outcome> {
    let f = match f_series(max_n) {
        Ok(f) => f,
        Err(e) => return (0..=max_n).map(|n| error_row(n, "", e.clone())).collect(),
    };
    (0..=max_n)
        .map(|n| {
            let mut sequences: BTreeMap<[u32; 3], BigUint> = BTreeMap::new();
            each(Family::Ascent, n, Constraint::avoiding_021(), |a| {
                let (j, k, l) = zero_statistics(a).exponents();
                *sequences.entry([j as u32, k as u32, l as u32]).or_default() += 1u32;
            });
            let mut paths: BTreeMap<[u32; 3], BigUint> = BTreeMap::new();
            each_path(n, |p| {
                let runs = peak_run_profile(p);
                let key = [
                    runs.good_peaks() as u32,
                    runs.good_single_runs() as u32,
                    runs.good_long_runs() as u32,
                ];
                *paths.entry(key).or_default() += 1u32;
            });
            let series: BTreeMap<[u32; 3], BigUint> = f
                .slice(n)
                .into_iter()
                .flatten()
                .map(|(e, c)| (*e, c.to_integer().to_biguint().expect("nonnegative")))
                .collect();
            let mut problems = Vec::new();
            if paths != sequences {
                problems.push(format!("good-peak census over paths: {}", render_census(&paths)));
            }
            row_with(n, render_census(&sequences), render_census(&series), &problems)
        })
        .collect()
}

fn f_catalan(max_n: u32) -> Vec<Outcome> {
    let closed = f_series(max_n);
    let fixed = expand_f_fixedpoint(max_n);
    let (closed, fixed) = match (closed, fixed) {
        (Ok(c), Ok(f)) => (c, f),
        (Err(e), _) | (_, Err(e)) => {
            return (0..=max_n).map(|n| error_row(n, catalan(n as u64), e.clone())).collect()
        }
    };
    let coefficients = match f_specialized_coefficients(&closed, 1, 1, 1) {
        Ok(c) => c,
        Err(e) => return (0..=max_n).map(|n| error_row(n, catalan(n as u64), e.clone())).collect(),
    };
    (0..=max_n)
        .map(|n| {
            let mut problems = Vec::new();
            if closed.slice(n) != fixed.slice(n) {
                problems.push("closed form and fixed point differ".to_string());
            }
            row_with(n, catalan(n as u64), &coefficients[n as usize], &problems)
        })
        .collect()
}

fn zero_count_dist(max_n: u32) -> Vec<Outcome> {
    let f = match f_series(max_n) {
        Ok(f) => f.specialize([None, Some(1), Some(1)]),
        Err(e) => return (0..=max_n).map(|n| error_row(n, "", e.clone())).collect(),
    };
    (0..=max_n)
        .map(|n| {
            let mut census = BTreeMap::new();
            each(Family::Ascent, n, Constraint::avoiding_021(), |a| {
                *census.entry(zero_statistics(a).total_zeros).or_insert(0u64) += 1;
            });
            let expected = join(dense(&census, n as usize + 1));
            let actual = join((0..=n).map(|j| f.coefficient([n, j, 0, 0]).to_integer()));
            row(n, expected, actual)
        })
        .collect()
}

/// Nontrivial maxima: tight indices from 3 on.
fn first_nontrivial_max(a: &[u32]) -> Option<usize> {
    tight_indices(a).into_iter().find(|&i| i >= 3)
}

fn u_prefix_problems(n: u32, members: &[Vec<u32>], u: &[BigUint]) -> Vec<String> {
    let mut problems = Vec::new();
    if n < 3 {
        return problems;
    }
    let n_ = n as usize;
    let tally = |pred: &dyn Fn(&[u32]) -> bool| -> BigUint {
        BigUint::from(members.iter().filter(|a| pred(a)).count())
    };
    let mut expect = |label: String, got: BigUint, want: BigUint| {
        if got != want {
            problems.push(format!("{label}: {got} vs {want}"));
        }
    };
    expect("a3=1".into(), tally(&|a| a[2] == 1), u[n_ - 1].clone());
    expect("a3=2".into(), tally(&|a| a[2] == 2), u[n_ - 1].clone());
    expect(
        "a3=0, no nontrivial max".into(),
        tally(&|a| a[2] == 0 && first_nontrivial_max(a).is_none()),
        u[n_ - 2].clone(),
    );
    for k in 4..=n_ {
        expect(
            format!("a3=0, first nontrivial max at {k}"),
            tally(&|a| a[2] == 0 && first_nontrivial_max(a) == Some(k)),
            &u[k - 3] * &u[n_ - k + 2],
        );
    }
    problems
}

fn u_suite(max_n: u32) -> Vec<Outcome> {
    let u = u_sequence(max_n as usize);
    let u: Vec<BigUint> = u.series().into_iter().map(|(_, v)| v).collect();
    let specialized = f_coefficients(max_n, 1, 1, 0);
    let constraint = Constraint::avoiding_021().no_double_zero();
    (0..=max_n)
        .map(|n| {
            let expected = &u[n as usize];
            let specialized = match &specialized {
                Ok(s) => &s[n as usize],
                Err(e) => return error_row(n, expected, e.clone()),
            };
            let mut members = Vec::new();
            each(Family::Ascent, n, constraint, |a| members.push(a.to_vec()));
            let brute = BigUint::from(members.len());
            let mut problems = u_prefix_problems(n, &members, &u);
            if specialized != &brute {
                problems.push(format!("F(x,1,1,0) gives {specialized}"));
            }
            if let Some(&initial) = [1u32, 1, 1, 3].get(n as usize) {
                if expected != &BigUint::from(initial) {
                    problems.push(format!("initial value should be {initial}"));
                }
            }
            row_with(n, expected, brute, &problems)
        })
        .collect()
}

fn v_suite(max_n: u32) -> Vec<Outcome> {
    let v = v_sequence(max_n as usize);
    let v: Vec<BigUint> = v.series().into_iter().map(|(_, v)| v).collect();
    let specialized = f_coefficients(max_n, 1, 0, 1);
    let constraint = Constraint::avoiding_021().no_isolated_zero();
    (0..=max_n)
        .map(|n| {
            let expected = &v[n as usize];
            let specialized = match &specialized {
                Ok(s) => &s[n as usize],
                Err(e) => return error_row(n, expected, e.clone()),
            };
            let mut members = Vec::new();
            each(Family::Ascent, n, constraint, |a| members.push(IntSequence::from(a)));
            let brute = BigUint::from(members.len());
            let mut problems = Vec::new();
            if specialized != &brute {
                problems.push(format!("F(x,1,0,1) gives {specialized}"));
            }
            if n >= 1 {
                match v_explicit(n as usize) {
                    Ok(x) if &x == expected => {}
                    Ok(x) => problems.push(format!("explicit sum gives {x}")),
                    Err(e) => problems.push(format!("explicit sum: {e}")),
                }
            }
            if let Some(&initial) = [1u32, 0, 1, 2].get(n as usize) {
                if expected != &BigUint::from(initial) {
                    problems.push(format!("initial value should be {initial}"));
                }
            }
            if n == 8 {
                let three_runs: Vec<String> = members
                    .iter()
                    .filter(|a| zero_statistics(a.entries()).run_lengths.len() == 3)
                    .map(|a| a.to_compact())
                    .collect();
                if three_runs != ["00100100", "00100200"] {
                    problems.push(format!("three zero runs: {}", three_runs.join(" ")));
                }
            }
            row_with(n, expected, brute, &problems)
        })
        .collect()
}

fn touchard_runs(max_n: u32) -> Vec<Outcome> {
    let ddu = parse_steps("DDU").expect("literal");
    // runs[m][k]: 021-avoiding ascent sequences of length m with k zero runs
    let runs: Vec<BTreeMap<usize, u64>> = (0..=max_n)
        .map(|m| {
            let mut census = BTreeMap::new();
            each(Family::Ascent, m, Constraint::avoiding_021(), |a| {
                *census.entry(zero_statistics(a).run_lengths.len()).or_insert(0) += 1;
            });
            census
        })
        .collect();
    (0..=max_n)
        .map(|n| {
            if n == 0 {
                return not_applicable(0, "the Touchard formula starts at n = 1");
            }
            let width = n as usize + 1;
            let n_ = n as i64;
            let expected_b = join((0..width as i64).map(|k| touchard(n_, k - 1)));
            let expected_t = join((0..width as i64).map(|k| touchard(n_, k)));
            let mut paths = BTreeMap::new();
            each_path(n, |p| *paths.entry(count_factor(p, &ddu)).or_insert(0u64) += 1);
            let mut problems = Vec::new();
            let mut no_isolated = BTreeMap::new();
            each(
                Family::Ascent,
                n,
                Constraint::avoiding_021().no_isolated_zero(),
                |a| *no_isolated.entry(zero_statistics(a).run_lengths.len()).or_insert(0u64) += 1,
            );
            for k in 1..=n as usize {
                let lhs = no_isolated.get(&k).copied().unwrap_or(0);
                let rhs = if k <= n as usize {
                    runs[n as usize - k].get(&k).copied().unwrap_or(0)
                } else {
                    0
                };
                if lhs != rhs {
                    problems.push(format!("no isolated zeros, {k} runs: {lhs} vs {rhs}"));
                }
            }
            row_with(
                n,
                format!("runs {expected_b} / DDU {expected_t}"),
                format!(
                    "runs {} / DDU {}",
                    join(dense(&runs[n as usize], width)),
                    join(dense(&paths, width))
                ),
                &problems,
            )
        })
        .collect()
}

/// `1 <= d_i <= i` and weakly increasing.
fn is_catalan_sequence(d: &[u32]) -> bool {
    d.iter().enumerate().all(|(i, &x)| 1 <= x && x as usize <= i + 1)
        && d.windows(2).all(|w| w[0] <= w[1])
}

fn descent_021_formula(max_n: u32) -> Vec<Outcome> {
    let g = expand_g(max_n, true);
    const TOTALS: [u64; 7] = [1, 1, 2, 4, 9, 22, 57];
    (0..=max_n)
        .map(|n| {
            let g = match &g {
                Ok(g) => g,
                Err(e) => return error_row(n, "", e.clone()),
            };
            let mut census = BTreeMap::new();
            let mut problems = Vec::new();
            each(Family::Descent, n, Constraint::avoiding_021(), |a| {
                let stats = descent_statistics(a);
                *census.entry(stats.descent_count).or_insert(0u64) += 1;
                let shape_ok = is_catalan_sequence(&stats.descent_tops)
                    && stats.descent_bottoms.iter().all(|&b| b == 0);
                if !shape_ok && problems.len() < 3 {
                    problems.push(format!("{}: descent tops/bottoms", IntSequence::from(a)));
                }
            });
            let width = n as usize + 1;
            let series_row: Vec<_> = (0..width as u32)
                .map(|k| g.coefficient([n, k, 0, 0]).to_integer())
                .collect();
            let expected: Vec<BigUint> = if n == 0 {
                vec![BigUint::from(1u32)]
            } else {
                (0..width)
                    .map(|k| descent_021_count(n as usize, k).expect("n >= 1"))
                    .collect()
            };
            if join(&series_row) != join(&expected) {
                problems.push(format!("G row {}", join(&series_row)));
            }
            let total: u64 = census.values().sum();
            if let Some(&t) = TOTALS.get(n as usize) {
                if total != t {
                    problems.push(format!("total {total}, expected {t}"));
                }
            }
            row_with(n, join(&expected), join(dense(&census, width)), &problems)
        })
        .collect()
}

fn uudu_equinumerous(max_n: u32) -> Vec<Outcome> {
    let uudu = parse_steps("UUDU").expect("literal");
    const TOTALS: [u64; 7] = [1, 1, 2, 4, 9, 22, 57];
    (0..=max_n)
        .map(|n| {
            let sequences = count(Family::Descent, n, Constraint::avoiding_021());
            let mut avoiding = 0u64;
            each_path(n, |p| avoiding += (count_factor(p, &uudu) == 0) as u64);
            let mut problems = Vec::new();
            if let Some(&t) = TOTALS.get(n as usize) {
                if sequences != t {
                    problems.push(format!("{sequences} sequences, expected {t}"));
                }
            }
            row_with(n, sequences, avoiding, &problems)
        })
        .collect()
}

fn avoidance_tests_agree(max_n: u32) -> Vec<Outcome> {
    (0..=max_n)
        .map(|n| {
            let mut expected = Vec::new();
            let mut actual = Vec::new();
            for family in Family::ALL {
                let (mut total, mut agree) = (0u64, 0u64);
                each(family, n, Constraint::none(), |a| {
                    total += 1;
                    agree += (avoids_021(a) == nonzero_weakly_increasing(a)) as u64;
                });
                expected.push(format!("{family} {total}"));
                actual.push(format!("{family} {agree}"));
            }
            row(n, expected.join(", "), actual.join(", "))
        })
        .collect()
}

fn tight_indices_are_ascent_tops(max_n: u32) -> Vec<Outcome> {
    (0..=max_n)
        .map(|n| {
            let mut good = 0u64;
            each(Family::Ascent, n, Constraint::avoiding_021(), |a| {
                let ok = tight_indices(a).iter().all(|&i| a[i - 2] < a[i - 1]);
                good += ok as u64;
            });
            row(n, catalan(n as u64), good)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(report: &CheckReport) -> Vec<String> {
        report.outcomes.iter().map(|o| o.actual.clone()).collect()
    }

    #[test]
    fn registry_is_complete() {
        assert_eq!(check_names().len(), 16);
        let unique: HashSet<_> = check_names().into_iter().collect();
        assert_eq!(unique.len(), 16);
    }

    #[test]
    fn catalan_census() {
        let r = run_check("catalan_rep021", 8).unwrap();
        assert!(r.passed);
        assert_eq!(values(&r), ["1", "1", "2", "5", "14", "42", "132", "429", "1430"]);
    }

    #[test]
    fn uudu_small() {
        let r = run_check("uudu_equinumerous", 6).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(values(&r), ["1", "1", "2", "4", "9", "22", "57"]);
    }

    #[test]
    fn phi_at_zero_is_not_applicable() {
        let r = run_check("phi_bijection", 0).unwrap();
        assert!(r.passed);
        assert_eq!(r.outcomes[0].status, Status::NotApplicable);
    }

    #[test]
    fn depth_beyond_cap_is_skipped() {
        let r = run_check("bell_count", 15).unwrap();
        assert!(r.passed);
        assert_eq!(r.count(Status::Skipped), 2);
        assert_eq!(r.outcomes.len(), 16);
        assert_eq!(r.outcomes[15].status, Status::Skipped);
    }

    #[test]
    fn filters() {
        assert!(run_selected(&[]).unwrap().is_empty());
        assert!(matches!(run_check("nosuch", 3), Err(Error::UnknownCheck(_))));
        let config = VerifyConfig {
            filter: Some(vec!["lemma2_ascent_top".into(), "bell_count".into()]),
            depths: [("bell_count".to_string(), 5)].into(),
        };
        let reports = run_all(&config).unwrap();
        let names: Vec<_> = reports.iter().map(|r| r.check_name.as_str()).collect();
        assert_eq!(names, ["bell_count", "lemma2_ascent_top"]);
        assert_eq!(reports[0].max_n, 5);
    }

    #[test]
    fn shallow_runs_pass() {
        for name in check_names() {
            let r = run_check(name, 6).unwrap();
            assert!(r.passed, "{name}: {:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn reports_are_reproducible() {
        let a = run_check("touchard_runs", 6).unwrap().to_json_untimed();
        let b = run_check("touchard_runs", 6).unwrap().to_json_untimed();
        assert_eq!(a, b);
    }
}
