//! Avoiding-coloring search, exact counting, exact ordered Ramsey numbers and
//! certificate checking.

mod engine;
mod pattern;

use std::sync::atomic::Ordering;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::bounds::{BoundValue, Provenance};
use crate::containment::{all_embeddings, avoids, Embedding};
use crate::error::{Error, Result};
use crate::graph::{pair_count, Color, KOrdering, OrderedColoring};

use engine::{Engine, Mode, Shared, SubtreeResult, Symmetries};
use pattern::Target;

pub use engine::BUDGET_CHECK_INTERVAL as BUDGET_CHECK_NODES;

/// Largest vertex count the bitmask engine handles.
pub const MAX_SEARCH_VERTICES: usize = 64;

/// Pair count above which [`count_avoiding`] refuses to run.
pub const MAX_COUNT_PAIRS: usize = 28;

/// Caps on a search. A node is one edge-color decision.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SearchBudget {
    pub max_nodes: Option<u64>,
    pub max_seconds: Option<f64>,
}

impl SearchBudget {
    pub fn unbounded() -> Self {
        Self::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Self {
            max_nodes: Some(max_nodes),
            max_seconds: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_nodes == Some(0) {
            return Err(Error::OutOfDomain("max_nodes must be positive".into()));
        }
        if let Some(s) = self.max_seconds {
            if s.is_nan() || s <= 0.0 {
                return Err(Error::OutOfDomain("max_seconds must be positive".into()));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub prunes: u64,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SearchStatus {
    FoundAvoiding(OrderedColoring),
    ExhaustedNoAvoiding,
    BudgetExceeded { nodes_explored: u64 },
}

impl SearchStatus {
    pub fn name(&self) -> &'static str {
        match self {
            SearchStatus::FoundAvoiding(_) => "found",
            SearchStatus::ExhaustedNoAvoiding => "exhausted",
            SearchStatus::BudgetExceeded { .. } => "budget_exceeded",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub fn coloring(&self) -> Option<&OrderedColoring> {
        match &self.status {
            SearchStatus::FoundAvoiding(g) => Some(g),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self.status, SearchStatus::FoundAvoiding(_))
    }

    pub fn is_exhausted(&self) -> bool {
        matches!(self.status, SearchStatus::ExhaustedNoAvoiding)
    }

    /// `{"status", "nodes", "prunes", "seconds"}`.
    pub fn stats_json(&self) -> serde_json::Value {
        serde_json::json!({
            "status": self.status.name(),
            "nodes": self.stats.nodes,
            "prunes": self.stats.prunes,
            "seconds": self.stats.seconds,
        })
    }
}

/// Search knobs beyond the budget.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchOptions {
    pub budget: SearchBudget,
    /// Worker threads. The verdict and the witness do not depend on it.
    pub threads: usize,
    /// Fix pair `(1, 2)` to red when the two targets forbid the same thing.
    pub color_swap_breaking: bool,
    /// Discard leaves that are not the least in their reversal orbit.
    pub reversal_breaking: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            budget: SearchBudget::default(),
            threads: 1,
            color_swap_breaking: true,
            reversal_breaking: false,
        }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: SearchBudget) -> Self {
        Self {
            budget,
            ..Self::default()
        }
    }
}

struct Targets {
    red: Target,
    blue: Target,
}

impl Targets {
    fn new(h1: &KOrdering, h2: &KOrdering) -> Self {
        Self {
            red: Target::compile(h1),
            blue: Target::compile(h2),
        }
    }

    /// Every coloring on `n` vertices contains an edgeless target that fits.
    fn trivially_forced(&self, n: usize) -> bool {
        [&self.red, &self.blue]
            .iter()
            .any(|t| t.is_edgeless() && t.order() <= n)
    }

    fn symmetries(&self, h1: &KOrdering, h2: &KOrdering, options: &SearchOptions, skeleton_empty: bool) -> Symmetries {
        if !skeleton_empty {
            return Symmetries::default();
        }
        let s1 = self.red.signature();
        let s2 = self.blue.signature();
        let swap = s1 == s2;
        let (mut reverse, mut swap_reverse) = (false, false);
        if options.reversal_breaking {
            let r1 = Target::compile(&h1.reverse()).signature();
            let r2 = Target::compile(&h2.reverse()).signature();
            reverse = r1 == s1 && r2 == s2;
            swap_reverse = r2 == s1 && r1 == s2;
        }
        Symmetries {
            fix_first_red: options.color_swap_breaking && swap,
            reverse,
            swap_reverse,
        }
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > MAX_SEARCH_VERTICES {
        return Err(Error::TooManyVertices {
            n,
            max: MAX_SEARCH_VERTICES,
        });
    }
    Ok(())
}

/// Looks for a complete coloring on `n` vertices with no red copy of `h1` and
/// no blue copy of `h2`, extending `skeleton` when given.
pub fn find_avoiding(
    n: usize,
    h1: &KOrdering,
    h2: &KOrdering,
    skeleton: Option<&OrderedColoring>,
    budget: SearchBudget,
) -> Result<SearchOutcome> {
    find_avoiding_with(n, h1, h2, skeleton, &SearchOptions::with_budget(budget))
}

pub fn find_avoiding_with(
    n: usize,
    h1: &KOrdering,
    h2: &KOrdering,
    skeleton: Option<&OrderedColoring>,
    options: &SearchOptions,
) -> Result<SearchOutcome> {
    let start = Instant::now();
    options.budget.validate()?;
    check_n(n)?;
    let base = match skeleton {
        Some(s) if s.n() != n => {
            return Err(Error::DimensionMismatch {
                skeleton: s.n(),
                requested: n,
            })
        }
        Some(s) => s.clone(),
        None => OrderedColoring::unknown(n),
    };
    let targets = Targets::new(h1, h2);
    let elapsed = |nodes, prunes| SearchStats {
        nodes,
        prunes,
        seconds: start.elapsed().as_secs_f64(),
    };
    if targets.trivially_forced(n) {
        return Ok(SearchOutcome {
            status: SearchStatus::ExhaustedNoAvoiding,
            stats: elapsed(0, 0),
        });
    }

    let skeleton_empty = base.unknown_count() == pair_count(n);
    let symmetries = targets.symmetries(h1, h2, options, skeleton_empty);
    let deadline = options
        .budget
        .max_seconds
        .map(|s| start + Duration::from_secs_f64(s));
    let shared = Shared::new(options.budget.max_nodes, deadline);

    let mut probe = Engine::new(&base, &targets.red, &targets.blue, Mode::Find, symmetries, &shared);
    if probe.base_has_copy() {
        return Err(Error::SkeletonContainsCopy);
    }

    // split on the first two free pairs; subtree order is DFS order
    let split = probe.free_pairs().min(2);
    let threads = options.threads.max(1);
    let prefixes: Vec<Vec<Color>> = if threads == 1 {
        vec![Vec::new()]
    } else {
        (0..1usize << split)
            .map(|bits| {
                (0..split)
                    .map(|d| if bits >> (split - 1 - d) & 1 == 0 { Color::Red } else { Color::Blue })
                    .collect()
            })
            .collect()
    };

    let results: Vec<(SubtreeResult, u64, u64)> = if threads == 1 {
        let r = probe.run_subtree(0, &prefixes[0]);
        vec![(r, probe.nodes, probe.prunes)]
    } else {
        run_parallel(&base, &targets, symmetries, &shared, &prefixes, threads)
    };

    let nodes: u64 = results.iter().map(|r| r.1).sum();
    let prunes: u64 = results.iter().map(|r| r.2).sum();
    let mut status = SearchStatus::ExhaustedNoAvoiding;
    for (result, _, _) in results {
        match result {
            SubtreeResult::Found(g) => {
                status = SearchStatus::FoundAvoiding(g);
                break;
            }
            SubtreeResult::Interrupted => {
                if shared.budget_hit.load(Ordering::Relaxed) {
                    status = SearchStatus::BudgetExceeded {
                        nodes_explored: nodes,
                    };
                }
            }
            SubtreeResult::Exhausted => {}
        }
    }
    if let SearchStatus::FoundAvoiding(g) = &status {
        assert!(
            g.is_complete() && base.is_extended_by(g) && avoids(g, h1, h2)?,
            "search produced a coloring that fails verification"
        );
    }
    Ok(SearchOutcome {
        status,
        stats: elapsed(nodes, prunes),
    })
}

fn run_parallel(
    base: &OrderedColoring,
    targets: &Targets,
    symmetries: Symmetries,
    shared: &Shared,
    prefixes: &[Vec<Color>],
    threads: usize,
) -> Vec<(SubtreeResult, u64, u64)> {
    use std::sync::atomic::AtomicUsize;
    use std::sync::Mutex;

    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<(SubtreeResult, u64, u64)>>> =
        prefixes.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..threads.min(prefixes.len()) {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                if idx >= prefixes.len() {
                    break;
                }
                let mut engine =
                    Engine::new(base, &targets.red, &targets.blue, Mode::Find, symmetries, shared);
                let result = if shared.found_at.load(Ordering::Relaxed) < idx {
                    SubtreeResult::Interrupted
                } else {
                    engine.run_subtree(idx, &prefixes[idx])
                };
                if matches!(result, SubtreeResult::Found(_)) {
                    shared.found_at.fetch_min(idx, Ordering::Relaxed);
                }
                *slots[idx].lock().expect("slot lock") = Some((result, engine.nodes, engine.prunes));
            });
        }
    });
    slots
        .into_iter()
        .map(|s| s.into_inner().expect("slot lock").expect("every subtree ran"))
        .collect()
}

/// Number of complete colorings on `n` vertices avoiding `(h1, h2)`, with no
/// symmetry reduction. Refuses instances with more than
/// [`MAX_COUNT_PAIRS`] pairs.
pub fn count_avoiding(n: usize, h1: &KOrdering, h2: &KOrdering) -> Result<u64> {
    check_n(n)?;
    let edges = pair_count(n);
    if edges > MAX_COUNT_PAIRS {
        return Err(Error::InstanceTooLarge {
            edges,
            limit: MAX_COUNT_PAIRS,
        });
    }
    let targets = Targets::new(h1, h2);
    if targets.trivially_forced(n) {
        return Ok(0);
    }
    let shared = Shared::new(None, None);
    let base = OrderedColoring::unknown(n);
    let mut engine = Engine::new(
        &base,
        &targets.red,
        &targets.blue,
        Mode::Count,
        Symmetries::default(),
        &shared,
    );
    engine.run_subtree(0, &[]);
    Ok(engine.leaves)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LevelReport {
    pub n: usize,
    pub status: &'static str,
    pub nodes: u64,
    pub seconds: f64,
}

/// Bounds on `R_<(h1, h2)` established by search.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RamseyResult {
    pub value: Option<usize>,
    pub lower: Option<BoundValue>,
    pub upper: Option<BoundValue>,
    pub levels: Vec<LevelReport>,
    /// Avoiding coloring on `lower - 1` vertices, if one was found.
    #[serde(skip)]
    pub witness: Option<OrderedColoring>,
}

/// Searches `n = 1, 2, ...` until some level has no avoiding coloring, `n_max`
/// is passed or the budget runs out. The budget covers all levels together.
pub fn ordered_ramsey(h1: &KOrdering, h2: &KOrdering, n_max: usize, budget: SearchBudget) -> Result<RamseyResult> {
    ordered_ramsey_with(h1, h2, n_max, &SearchOptions::with_budget(budget))
}

pub fn ordered_ramsey_with(
    h1: &KOrdering,
    h2: &KOrdering,
    n_max: usize,
    options: &SearchOptions,
) -> Result<RamseyResult> {
    options.budget.validate()?;
    let start = Instant::now();
    let mut result = RamseyResult {
        value: None,
        lower: None,
        upper: None,
        levels: Vec::new(),
        witness: None,
    };
    let mut used_nodes = 0u64;
    for n in 1..=n_max.min(MAX_SEARCH_VERTICES) {
        let remaining_nodes = options.budget.max_nodes.map(|cap| cap.saturating_sub(used_nodes));
        let remaining_secs = options
            .budget
            .max_seconds
            .map(|s| s - start.elapsed().as_secs_f64());
        if remaining_nodes == Some(0) || remaining_secs.is_some_and(|s| s <= 0.0) {
            break;
        }
        let level_options = SearchOptions {
            budget: SearchBudget {
                max_nodes: remaining_nodes,
                max_seconds: remaining_secs,
            },
            ..*options
        };
        let outcome = find_avoiding_with(n, h1, h2, None, &level_options)?;
        used_nodes += outcome.stats.nodes;
        result.levels.push(LevelReport {
            n,
            status: outcome.status.name(),
            nodes: outcome.stats.nodes,
            seconds: outcome.stats.seconds,
        });
        match outcome.status {
            SearchStatus::FoundAvoiding(g) => {
                result.lower = Some(BoundValue::new(n + 1, Provenance::Search));
                result.witness = Some(g);
            }
            SearchStatus::ExhaustedNoAvoiding => {
                result.upper = Some(BoundValue::new(n, Provenance::Search));
                // every smaller level had an avoider (or n = 1)
                result.lower = Some(BoundValue::new(n, Provenance::Search));
                result.value = Some(n);
                break;
            }
            SearchStatus::BudgetExceeded { .. } => break,
        }
    }
    Ok(result)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CertificateReport {
    pub n: usize,
    pub avoiding: bool,
    /// Red copies of the first target and blue copies of the second.
    pub violations: Vec<Embedding>,
    /// `n + 1` when the coloring avoids both targets.
    pub implied_lower_bound: Option<usize>,
}

/// Checks a complete coloring against `(h1, h2)` and lists every violation.
pub fn verify_certificate(g: &OrderedColoring, h1: &KOrdering, h2: &KOrdering) -> Result<CertificateReport> {
    g.require_complete()?;
    let mut violations = all_embeddings(g, h1, Color::Red)?;
    violations.extend(all_embeddings(g, h2, Color::Blue)?);
    let avoiding = violations.is_empty();
    Ok(CertificateReport {
        n: g.n(),
        avoiding,
        violations,
        implied_lower_bound: avoiding.then_some(g.n() + 1),
    })
}
