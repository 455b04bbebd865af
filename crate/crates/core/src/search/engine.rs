//! Backtracking over uncolored pairs in the fixed order `(1,2), (1,3), (2,3),
//! (1,4), ...`, red before blue. After every decision the new edge is checked
//! for a completed red copy of the first target or blue copy of the second.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::Instant;

use crate::graph::{pair_index, Color, OrderedColoring};

use super::pattern::Target;

/// Budgets are polled once every this many nodes.
pub const BUDGET_CHECK_INTERVAL: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    Find,
    Count,
}

/// Symmetries of the target pair that the search may quotient by.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Symmetries {
    /// Fix the first free pair, `(1, 2)`, to red.
    pub fix_first_red: bool,
    /// Keep only leaves that are lexicographically no larger than their
    /// reversal (and, with `swap_reverse`, than their swapped reversal).
    pub reverse: bool,
    pub swap_reverse: bool,
}

pub(crate) struct Shared {
    pub nodes: AtomicU64,
    pub budget_hit: AtomicBool,
    /// Least subtree index that found an avoiding coloring.
    pub found_at: AtomicUsize,
    pub max_nodes: Option<u64>,
    pub deadline: Option<Instant>,
}

impl Shared {
    pub(crate) fn new(max_nodes: Option<u64>, deadline: Option<Instant>) -> Self {
        Self {
            nodes: AtomicU64::new(0),
            budget_hit: AtomicBool::new(false),
            found_at: AtomicUsize::new(usize::MAX),
            max_nodes,
            deadline,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Flow {
    Continue,
    Stop,
}

pub(crate) enum SubtreeResult {
    Found(OrderedColoring),
    Exhausted,
    /// Stopped because of the budget or because an earlier subtree succeeded.
    Interrupted,
}

pub(crate) struct Engine<'a> {
    n: usize,
    red_target: &'a Target,
    blue_target: &'a Target,
    order: Vec<(usize, usize)>,
    colors: Vec<Option<Color>>,
    red: Vec<u64>,
    blue: Vec<u64>,
    scratch: Vec<usize>,
    mode: Mode,
    symmetries: Symmetries,
    shared: &'a Shared,
    subtree: usize,
    pub nodes: u64,
    pub prunes: u64,
    pub leaves: u64,
    unflushed: u64,
    found: Option<OrderedColoring>,
    interrupted: bool,
}

impl<'a> Engine<'a> {
    /// `base` holds the skeleton colors; its uncolored pairs are searched.
    pub(crate) fn new(
        base: &OrderedColoring,
        red_target: &'a Target,
        blue_target: &'a Target,
        mode: Mode,
        symmetries: Symmetries,
        shared: &'a Shared,
    ) -> Self {
        let n = base.n();
        let mut red = vec![0u64; n];
        let mut blue = vec![0u64; n];
        let mut order = Vec::new();
        for (idx, (i, j)) in crate::graph::pairs(n).enumerate() {
            let (x, y) = (i - 1, j - 1);
            match base.flat()[idx] {
                Some(Color::Red) => {
                    red[x] |= 1 << y;
                    red[y] |= 1 << x;
                }
                Some(Color::Blue) => {
                    blue[x] |= 1 << y;
                    blue[y] |= 1 << x;
                }
                None => order.push((x, y)),
            }
        }
        let m = red_target.order().max(blue_target.order()).max(1);
        Self {
            n,
            red_target,
            blue_target,
            order,
            colors: base.flat().to_vec(),
            red,
            blue,
            scratch: vec![0; m],
            mode,
            symmetries,
            shared,
            subtree: 0,
            nodes: 0,
            prunes: 0,
            leaves: 0,
            unflushed: 0,
            found: None,
            interrupted: false,
        }
    }

    pub(crate) fn free_pairs(&self) -> usize {
        self.order.len()
    }

    /// True when the colored edges already hold a forbidden copy.
    pub(crate) fn base_has_copy(&mut self) -> bool {
        self.red_target.appears_in(&self.red, self.n, &mut self.scratch)
            || self.blue_target.appears_in(&self.blue, self.n, &mut self.scratch)
    }

    fn allowed(&self, depth: usize) -> &'static [Color] {
        if depth == 0 && self.symmetries.fix_first_red {
            &[Color::Red]
        } else {
            &[Color::Red, Color::Blue]
        }
    }

    /// Colors pair `order[depth]`; returns false (and undoes it) on a hit.
    fn assign(&mut self, depth: usize, color: Color) -> bool {
        let (i, j) = self.order[depth];
        let (adj, target) = match color {
            Color::Red => (&mut self.red, self.red_target),
            Color::Blue => (&mut self.blue, self.blue_target),
        };
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
        if target.hits_edge(adj, self.n, i, j, &mut self.scratch) {
            adj[i] &= !(1 << j);
            adj[j] &= !(1 << i);
            return false;
        }
        self.colors[pair_index(i + 1, j + 1)] = Some(color);
        true
    }

    fn unassign(&mut self, depth: usize, color: Color) {
        let (i, j) = self.order[depth];
        let adj = match color {
            Color::Red => &mut self.red,
            Color::Blue => &mut self.blue,
        };
        adj[i] &= !(1 << j);
        adj[j] &= !(1 << i);
        self.colors[pair_index(i + 1, j + 1)] = None;
    }

    fn poll(&mut self) -> Flow {
        let total = self.shared.nodes.fetch_add(self.unflushed, Ordering::Relaxed) + self.unflushed;
        self.unflushed = 0;
        if self.shared.max_nodes.is_some_and(|cap| total >= cap)
            || self.shared.deadline.is_some_and(|d| Instant::now() >= d)
        {
            self.shared.budget_hit.store(true, Ordering::Relaxed);
        }
        if self.shared.budget_hit.load(Ordering::Relaxed)
            || self.shared.found_at.load(Ordering::Relaxed) < self.subtree
        {
            self.interrupted = true;
            return Flow::Stop;
        }
        Flow::Continue
    }

    fn get(&self, i: usize, j: usize) -> Color {
        self.colors[pair_index(i, j)].expect("leaf is complete")
    }

    /// Lexicographic comparison of the leaf against its images.
    fn is_orbit_leader(&self) -> bool {
        let n = self.n;
        let check = |swap: bool| {
            for (i, j) in crate::graph::pairs(n) {
                let own = self.get(i, j);
                let mut img = self.get(n + 1 - j, n + 1 - i);
                if swap {
                    img = img.other();
                }
                if own != img {
                    return own < img;
                }
            }
            true
        };
        (!self.symmetries.reverse || check(false)) && (!self.symmetries.swap_reverse || check(true))
    }

    fn dfs(&mut self, depth: usize) -> Flow {
        if depth == self.order.len() {
            if !self.is_orbit_leader() {
                return Flow::Continue;
            }
            self.leaves += 1;
            return match self.mode {
                Mode::Count => Flow::Continue,
                Mode::Find => {
                    self.found = Some(OrderedColoring::from_flat(self.n, self.colors.clone()));
                    Flow::Stop
                }
            };
        }
        for &color in self.allowed(depth) {
            self.nodes += 1;
            self.unflushed += 1;
            if self.unflushed >= BUDGET_CHECK_INTERVAL && self.poll() == Flow::Stop {
                return Flow::Stop;
            }
            if !self.assign(depth, color) {
                self.prunes += 1;
                continue;
            }
            let flow = self.dfs(depth + 1);
            self.unassign(depth, color);
            if flow == Flow::Stop {
                return Flow::Stop;
            }
        }
        Flow::Continue
    }

    /// Searches the subtree where the first `prefix.len()` free pairs take the
    /// given colors.
    pub(crate) fn run_subtree(&mut self, subtree: usize, prefix: &[Color]) -> SubtreeResult {
        self.subtree = subtree;
        self.interrupted = false;
        let mut applied = 0;
        let mut viable = true;
        for (depth, &color) in prefix.iter().enumerate() {
            if !self.allowed(depth).contains(&color) {
                viable = false;
                break;
            }
            self.nodes += 1;
            self.unflushed += 1;
            if !self.assign(depth, color) {
                self.prunes += 1;
                viable = false;
                break;
            }
            applied += 1;
        }
        if viable {
            self.dfs(prefix.len());
        }
        for depth in (0..applied).rev() {
            let color = self.colors[pair_index(self.order[depth].0 + 1, self.order[depth].1 + 1)]
                .expect("applied");
            self.unassign(depth, color);
        }
        self.shared.nodes.fetch_add(self.unflushed, Ordering::Relaxed);
        self.unflushed = 0;
        if let Some(g) = self.found.take() {
            SubtreeResult::Found(g)
        } else if self.interrupted {
            SubtreeResult::Interrupted
        } else {
            SubtreeResult::Exhausted
        }
    }
}
