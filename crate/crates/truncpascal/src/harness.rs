//! Exhaustive desk-scale verification: sweeps over all selection pairs or
//! all incidence matrices of a given size, evaluating independent routes
//! to the same truth (determinants, dominance, diagonals, the Pólya
//! condition) and reporting any disagreement as data rather than error.

use crate::birkhoff::{extended_system, system_from_incidence};
use crate::incidence::{self, IncidenceMatrix};
use crate::oracle;
use crate::pascal::{diagonal_all_nonzero, is_invertible_fast, truncated};
use crate::selection::Selection;
use crate::ExactRational;
use itertools::Itertools;
use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::time::{Duration, Instant};

/// Default cap on recorded counterexamples; the true disagreement count is
/// always reported even when the list is truncated.
pub const DEFAULT_COUNTEREXAMPLE_CAP: usize = 100;

/// Default seed for the sampled determinant cross-check.
pub const DEFAULT_SEED: u64 = 42;

/// Knobs for a sweep run. `jobs: None` uses the global thread pool;
/// `Some(k)` pins a dedicated pool of `k` threads (1 = sequential).
/// Results are deterministic either way.
#[derive(Debug, Clone)]
pub struct HarnessConfig {
    pub jobs: Option<usize>,
    pub max_counterexamples: usize,
    pub seed: u64,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            jobs: None,
            max_counterexamples: DEFAULT_COUNTEREXAMPLE_CAP,
            seed: DEFAULT_SEED,
        }
    }
}

/// One named predicate evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub predicate: String,
    pub holds: bool,
}

impl Verdict {
    pub fn new(predicate: &str, holds: bool) -> Self {
        Verdict {
            predicate: predicate.to_string(),
            holds,
        }
    }
}

/// An input on which the checked predicates failed to agree (or to hold),
/// together with the full verdict vector for diagnosis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Selection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Selection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub incidence: Option<IncidenceMatrix>,
    pub predicates: Vec<Verdict>,
}

impl Counterexample {
    pub fn for_pair(r: Selection, x: Selection, predicates: Vec<Verdict>) -> Self {
        Counterexample {
            r: Some(r),
            x: Some(x),
            incidence: None,
            predicates,
        }
    }

    pub fn for_incidence(e: IncidenceMatrix, predicates: Vec<Verdict>) -> Self {
        Counterexample {
            r: None,
            x: None,
            incidence: Some(e),
            predicates,
        }
    }

    fn describe(&self) -> String {
        let mut parts = Vec::new();
        if let Some(r) = &self.r {
            parts.push(format!("r=[{r}]"));
        }
        if let Some(x) = &self.x {
            parts.push(format!("x=[{x}]"));
        }
        if let Some(e) = &self.incidence {
            parts.push(format!("E={e}"));
        }
        for v in &self.predicates {
            parts.push(format!("{}={}", v.predicate, v.holds));
        }
        parts.join(" ")
    }
}

/// Outcome of one sweep. `disagreements` is the full count;
/// `counterexamples` holds at most the configured cap of them, in
/// enumeration order. `seed` is present only for sampled runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceReport {
    pub n: usize,
    pub pairs_checked: usize,
    pub disagreements: usize,
    pub counterexamples: Vec<Counterexample>,
    #[serde(rename = "elapsed_ms", with = "duration_ms")]
    pub elapsed: Duration,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl EquivalenceReport {
    pub fn all_agree(&self) -> bool {
        self.disagreements == 0
    }

    /// Human-readable multi-line summary.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n:               {}", self.n).unwrap();
        writeln!(out, "pairs checked:   {}", self.pairs_checked).unwrap();
        writeln!(out, "disagreements:   {}", self.disagreements).unwrap();
        writeln!(out, "elapsed:         {} ms", self.elapsed.as_millis()).unwrap();
        if let Some(seed) = self.seed {
            writeln!(out, "sampling seed:   {seed}").unwrap();
        }
        if self.counterexamples.is_empty() {
            writeln!(out, "counterexamples: none").unwrap();
        } else if self.disagreements > self.counterexamples.len() {
            writeln!(
                out,
                "counterexamples (first {} of {}):",
                self.counterexamples.len(),
                self.disagreements
            )
            .unwrap();
            for ce in &self.counterexamples {
                writeln!(out, "  {}", ce.describe()).unwrap();
            }
        } else {
            writeln!(out, "counterexamples:").unwrap();
            for ce in &self.counterexamples {
                writeln!(out, "  {}", ce.describe()).unwrap();
            }
        }
        out
    }
}

mod duration_ms {
    use serde::{Deserialize, Deserializer, Serializer};
    use std::time::Duration;

    pub fn serialize<S: Serializer>(
        d: &Duration,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(d.as_millis() as u64)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Duration, D::Error> {
        Ok(Duration::from_millis(u64::deserialize(d)?))
    }
}

/// Every pair `(r, x)` of equal-size nonempty selections from `[0..n]`,
/// both in increasing order, in a fixed deterministic order (size
/// ascending, then lexicographic). Total count: C(2n+2, n+1) − 1.
pub fn enumerate_selection_pairs(n: usize) -> impl Iterator<Item = (Selection, Selection)> {
    (1..=n + 1).flat_map(move |k| {
        let subsets: Vec<Selection> = (0..=n)
            .combinations(k)
            .map(|entries| Selection::new(entries).expect("combinations are strictly increasing"))
            .collect();
        subsets.clone().into_iter().cartesian_product(subsets)
    })
}

/// Maps `check` over the items (in parallel when configured), then counts
/// and caps the failures in enumeration order. Deterministic for any
/// thread count because results are collected positionally.
fn sweep<T, F>(items: Vec<T>, cfg: &HarnessConfig, check: F) -> (usize, usize, Vec<Counterexample>)
where
    T: Send + Sync,
    F: Fn(&T) -> Option<Counterexample> + Send + Sync,
{
    let run = || items.par_iter().map(&check).collect::<Vec<_>>();
    let results = match cfg.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool construction")
            .install(run),
        None => run(),
    };
    let checked = results.len();
    let disagreements = results.iter().flatten().count();
    let counterexamples = results
        .into_iter()
        .flatten()
        .take(cfg.max_counterexamples)
        .collect();
    (checked, disagreements, counterexamples)
}

fn equivalence_failure(verdicts: Vec<Verdict>) -> Option<Vec<Verdict>> {
    let unanimous = verdicts.windows(2).all(|w| w[0].holds == w[1].holds);
    (!unanimous).then_some(verdicts)
}

fn conjunction_failure(verdicts: Vec<Verdict>) -> Option<Vec<Verdict>> {
    let all_hold = verdicts.iter().all(|v| v.holds);
    (!all_hold).then_some(verdicts)
}

fn standard_nodes() -> (ExactRational, ExactRational) {
    (ExactRational::zero(), ExactRational::one())
}

/// The four invertibility routes for one selection pair.
fn main_theorem_verdicts(r: &Selection, x: &Selection, n: usize) -> Vec<Verdict> {
    let det = truncated(r, x)
        .det()
        .expect("equal-size selections give a square matrix");
    let e = IncidenceMatrix::from_selection(r, x, n).expect("entries bounded by n");
    vec![
        Verdict::new("det_nonzero", !det.is_zero()),
        Verdict::new(
            "dominates",
            is_invertible_fast(r, x).expect("equal-size selections"),
        ),
        Verdict::new(
            "diagonal_nonzero",
            diagonal_all_nonzero(r, x).expect("equal-size selections"),
        ),
        Verdict::new("polya", e.is_polya()),
    ]
}

/// Sweeps every selection pair from `[0..n]` and checks that the four
/// invertibility criteria — nonzero determinant, dominance, nonzero
/// diagonal, and the Pólya condition of the induced incidence matrix —
/// agree on each.
///
/// # Panics
/// Panics if `n + 1` exceeds [`incidence::MAX_WIDTH`].
pub fn verify_main_theorem(n: usize, cfg: &HarnessConfig) -> EquivalenceReport {
    let start = Instant::now();
    let pairs: Vec<(Selection, Selection)> = enumerate_selection_pairs(n).collect();
    let (checked, disagreements, counterexamples) = sweep(pairs, cfg, |(r, x)| {
        equivalence_failure(main_theorem_verdicts(r, x, n))
            .map(|v| Counterexample::for_pair(r.clone(), x.clone(), v))
    });
    EquivalenceReport {
        n,
        pairs_checked: checked,
        disagreements,
        counterexamples,
        elapsed: start.elapsed(),
        seed: None,
    }
}

/// Sweeps every incidence matrix of width `n + 1` and checks that the
/// Pólya condition coincides with invertibility of the Birkhoff system at
/// nodes (0, 1).
///
/// # Panics
/// Panics if `n + 1` exceeds [`incidence::MAX_WIDTH`].
pub fn verify_polya_theorem(n: usize, cfg: &HarnessConfig) -> EquivalenceReport {
    let start = Instant::now();
    let matrices: Vec<IncidenceMatrix> = incidence::enumerate(n + 1)
        .expect("width within packing limit")
        .collect();
    let (checked, disagreements, counterexamples) = sweep(matrices, cfg, |e| {
        let invertible = system_from_incidence(e, standard_nodes())
            .system_matrix()
            .is_invertible()
            .expect("incidence systems are square");
        let verdicts = vec![
            Verdict::new("polya", e.is_polya()),
            Verdict::new("system_invertible", invertible),
        ];
        equivalence_failure(verdicts).map(|v| Counterexample::for_incidence(*e, v))
    });
    EquivalenceReport {
        n,
        pairs_checked: checked,
        disagreements,
        counterexamples,
        elapsed: start.elapsed(),
        seed: None,
    }
}

/// The clauses every decomposition must satisfy, as named verdicts:
/// reassembly under sum-dot, incidence of both parts, Pólya inheritance,
/// additivity of the row-0 ones and row-1 zeros counts, and the required
/// shape per the row-0 ones count d (d=0 ⇒ (I, I) with E=I; d=1 ⇒ (I, E);
/// d>1 ⇒ E, E1, E2 pairwise distinct).
pub fn decomposition_verdicts(e: &IncidenceMatrix) -> Vec<Verdict> {
    let (e1, e2) = e.decompose();
    let d = e.row_ones(0);
    let zeros = |m: &IncidenceMatrix| m.width() - m.row_ones(1);
    let identity = IncidenceMatrix::identity(e.width()).expect("width already validated");

    let reassembles = e1.as_bool().sum_dot(e2.as_bool()).expect("equal widths") == *e.as_bool();
    let parts_incidence =
        e1.as_bool().ones() == e1.width() && e2.as_bool().ones() == e2.width();
    let polya_inherited = !e.is_polya() || (e1.is_polya() && e2.is_polya());
    let row0_ones_additive = d == e1.row_ones(0) + e2.row_ones(0);
    let row1_zeros_additive = zeros(e) == zeros(&e1) + zeros(&e2);
    let case_shape = match d {
        0 => e1 == identity && e2 == identity && *e == identity,
        1 => e1 == identity && e2 == *e,
        _ => e1 != *e && e2 != *e && e1 != e2,
    };

    vec![
        Verdict::new("reassembles", reassembles),
        Verdict::new("parts_incidence", parts_incidence),
        Verdict::new("polya_inherited", polya_inherited),
        Verdict::new("row0_ones_additive", row0_ones_additive),
        Verdict::new("row1_zeros_additive", row1_zeros_additive),
        Verdict::new("case_shape", case_shape),
    ]
}

/// Sweeps every incidence matrix of width `n + 1` and asserts all
/// decomposition clauses (see [`decomposition_verdicts`]).
///
/// # Panics
/// Panics if `n + 1` exceeds [`incidence::MAX_WIDTH`].
pub fn verify_decomposition(n: usize, cfg: &HarnessConfig) -> EquivalenceReport {
    let start = Instant::now();
    let matrices: Vec<IncidenceMatrix> = incidence::enumerate(n + 1)
        .expect("width within packing limit")
        .collect();
    let (checked, disagreements, counterexamples) = sweep(matrices, cfg, |e| {
        conjunction_failure(decomposition_verdicts(e)).map(|v| Counterexample::for_incidence(*e, v))
    });
    EquivalenceReport {
        n,
        pairs_checked: checked,
        disagreements,
        counterexamples,
        elapsed: start.elapsed(),
        seed: None,
    }
}

/// Compares the production determinant (fraction-free elimination) with
/// the naive cofactor-expansion oracle on a seeded random sample of
/// selection pairs: on the truncated matrix, on the block-extended system,
/// and across the two (the extended determinant must equal the truncated
/// one). `sample_rate` is the inclusion probability per pair; `1.0` checks
/// every pair. Sampling is drawn sequentially from a ChaCha stream seeded
/// by the config, so the sampled set is reproducible and independent of
/// the thread count; the seed is recorded in the report.
pub fn cross_check_determinants(
    n: usize,
    sample_rate: f64,
    cfg: &HarnessConfig,
) -> EquivalenceReport {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let pairs: Vec<(Selection, Selection)> = enumerate_selection_pairs(n)
        .filter(|_| rng.gen::<f64>() < sample_rate)
        .collect();
    let (checked, disagreements, counterexamples) = sweep(pairs, cfg, |(r, x)| {
        let t = truncated(r, x);
        let fast = t.det().expect("square");
        let slow = oracle::det_cofactor(&t).expect("square and within oracle width");
        let ext = extended_system(r, x, n).expect("entries bounded by n");
        let ext_fast = ext.det().expect("square");
        let ext_slow = oracle::det_cofactor(&ext).expect("square and within oracle width");
        let verdicts = vec![
            Verdict::new("det_routes_agree", fast == slow),
            Verdict::new("extended_routes_agree", ext_fast == ext_slow),
            Verdict::new("extended_det_matches_truncated", ext_fast == fast),
        ];
        conjunction_failure(verdicts).map(|v| Counterexample::for_pair(r.clone(), x.clone(), v))
    });
    EquivalenceReport {
        n,
        pairs_checked: checked,
        disagreements,
        counterexamples,
        elapsed: start.elapsed(),
        seed: Some(cfg.seed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sel(entries: &[usize]) -> Selection {
        Selection::new(entries.to_vec()).expect("strictly increasing test data")
    }

    #[test]
    fn pair_enumeration_counts_match_the_closed_form() {
        assert_eq!(enumerate_selection_pairs(0).count(), 1);
        assert_eq!(enumerate_selection_pairs(1).count(), 5);
        assert_eq!(enumerate_selection_pairs(3).count(), 69);
        assert_eq!(enumerate_selection_pairs(8).count(), 48_619);
    }

    #[test]
    fn pair_enumeration_smallest_case_is_the_single_pair() {
        let pairs: Vec<_> = enumerate_selection_pairs(0).collect();
        assert_eq!(pairs, [(sel(&[0]), sel(&[0]))]);
    }

    #[test]
    fn main_theorem_sweep_is_clean_at_small_n() {
        let report = verify_main_theorem(4, &HarnessConfig::default());
        assert_eq!(report.pairs_checked, 251);
        assert_eq!(report.disagreements, 0);
        assert!(report.all_agree());
        assert!(report.counterexamples.is_empty());
        assert_eq!(report.seed, None);
    }

    #[test]
    fn polya_sweep_is_clean_at_small_n() {
        let report = verify_polya_theorem(2, &HarnessConfig::default());
        assert_eq!(report.pairs_checked, 20);
        assert_eq!(report.disagreements, 0);
    }

    #[test]
    fn frozen_example_matrices_appear_in_the_width_six_sweep() {
        let all: Vec<IncidenceMatrix> = incidence::enumerate(6).unwrap().collect();
        let polya: IncidenceMatrix = "010100/101101".parse().unwrap();
        let non_polya: IncidenceMatrix = "010011/011010".parse().unwrap();
        assert!(all.contains(&polya) && polya.is_polya());
        assert!(all.contains(&non_polya) && !non_polya.is_polya());
    }

    #[test]
    fn decomposition_sweep_is_clean_at_small_n() {
        let report = verify_decomposition(3, &HarnessConfig::default());
        assert_eq!(report.pairs_checked, 70);
        assert_eq!(report.disagreements, 0);
    }

    #[test]
    fn cross_check_full_rate_covers_every_pair() {
        let report = cross_check_determinants(3, 1.0, &HarnessConfig::default());
        assert_eq!(report.pairs_checked, 69);
        assert_eq!(report.disagreements, 0);
        assert_eq!(report.seed, Some(DEFAULT_SEED));
    }

    #[test]
    fn cross_check_sampling_is_reproducible() {
        let cfg = HarnessConfig {
            seed: 7,
            ..HarnessConfig::default()
        };
        let mut first = cross_check_determinants(5, 0.3, &cfg);
        let mut second = cross_check_determinants(5, 0.3, &cfg);
        first.elapsed = Duration::ZERO;
        second.elapsed = Duration::ZERO;
        assert_eq!(first, second);
        assert!(first.pairs_checked < 923, "sampling should drop some pairs");
        assert!(first.pairs_checked > 0, "sampling should keep some pairs");
    }

    #[test]
    fn reports_are_identical_across_thread_counts() {
        let single = HarnessConfig {
            jobs: Some(1),
            ..HarnessConfig::default()
        };
        let several = HarnessConfig {
            jobs: Some(4),
            ..HarnessConfig::default()
        };
        let mut a = verify_main_theorem(3, &single);
        let mut b = verify_main_theorem(3, &several);
        a.elapsed = Duration::ZERO;
        b.elapsed = Duration::ZERO;
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn injected_fault_produces_counterexamples() {
        // Self-test of the sweep machinery: replace dominance with strict
        // domination, which wrongly rejects every pair with r = x.
        let n = 2;
        let pairs: Vec<(Selection, Selection)> = enumerate_selection_pairs(n).collect();
        let cfg = HarnessConfig::default();
        let (checked, disagreements, counterexamples) = sweep(pairs, &cfg, |(r, x)| {
            let det = truncated(r, x).det().expect("square");
            let strict = r
                .entries()
                .iter()
                .zip(x.entries())
                .all(|(a, b)| a < b);
            let verdicts = vec![
                Verdict::new("det_nonzero", !det.is_zero()),
                Verdict::new("strictly_dominates", strict),
            ];
            equivalence_failure(verdicts).map(|v| Counterexample::for_pair(r.clone(), x.clone(), v))
        });
        assert_eq!(checked, 19);
        // Every diagonal pair r = x is invertible but not strictly
        // dominated, so all 2^3 − 1 = 7 of them must be flagged.
        assert!(disagreements > 7);
        for k in [&[0usize][..], &[1], &[2], &[0, 1], &[0, 2], &[1, 2], &[0, 1, 2]] {
            let diag = sel(k);
            assert!(
                counterexamples
                    .iter()
                    .any(|ce| ce.r.as_ref() == Some(&diag) && ce.x.as_ref() == Some(&diag)),
                "diagonal pair {diag} not flagged"
            );
        }
    }

    #[test]
    fn counterexample_cap_truncates_but_counts_fully() {
        let cfg = HarnessConfig {
            max_counterexamples: 3,
            ..HarnessConfig::default()
        };
        let pairs: Vec<(Selection, Selection)> = enumerate_selection_pairs(2).collect();
        let (_, disagreements, counterexamples) = sweep(pairs, &cfg, |(r, x)| {
            let verdicts = vec![Verdict::new("always_fails", false)];
            conjunction_failure(verdicts).map(|v| Counterexample::for_pair(r.clone(), x.clone(), v))
        });
        assert_eq!(disagreements, 19);
        assert_eq!(counterexamples.len(), 3);
    }

    #[test]
    fn report_serialization_uses_milliseconds_and_omits_absent_seed() {
        let mut report = verify_main_theorem(1, &HarnessConfig::default());
        report.elapsed = Duration::from_millis(250);
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"elapsed_ms\":250"), "{json}");
        assert!(!json.contains("seed"), "{json}");
        let back: EquivalenceReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);

        let sampled = cross_check_determinants(1, 1.0, &HarnessConfig::default());
        let json = serde_json::to_string(&sampled).unwrap();
        assert!(json.contains("\"seed\":42"), "{json}");
    }

    #[test]
    fn render_text_mentions_the_headline_numbers() {
        let mut report = verify_main_theorem(2, &HarnessConfig::default());
        report.elapsed = Duration::from_millis(8);
        let text = report.render_text();
        assert!(text.contains("pairs checked:   19"));
        assert!(text.contains("disagreements:   0"));
        assert!(text.contains("elapsed:         8 ms"));
        assert!(text.contains("counterexamples: none"));
    }
}
