//! Exhaustive search over standard-form generators `[I_k | A]`.
//!
//! Completeness: every `[n, k]` code is permutation-equivalent to one with a
//! generator `[I_k | A]`. A coordinate permutation `P` satisfies `P Pᵀ = I`,
//! so it leaves `G Gᵀ` (hence the LCD property) and all codeword weights
//! unchanged. Enumerating every `A ∈ GF(2)^{k × (n-k)}` therefore visits
//! every code up to equivalence, and for these generators
//! `G Gᵀ = I_k + A Aᵀ`.
//!
//! Reduction: permuting the columns of `A` is again a coordinate permutation,
//! so it suffices to enumerate `A` whose columns, read as `k`-bit integers
//! (bit `i` = row `i`), are nondecreasing. This cuts the space from
//! `2^{k(n-k)}` to `C(2^k + n - k - 1, n - k)`.
//!
//! Pruning: columns are placed one at a time while the weight of every one
//! of the `2^k - 1` nonzero codewords is tracked incrementally. The weight of
//! codeword `m` can grow by at most one per remaining column, so a branch
//! dies as soon as some codeword cannot reach the target distance.
//!
//! Order and determinism: candidates are visited in lexicographic order of
//! their column tuple. The search space is cut into units keyed by the first
//! two columns; units are processed in parallel but the winner is always the
//! first unit (in order) holding a hit, and within a unit the DFS is
//! sequential, so the reported witness is the lexicographically smallest
//! qualifying `A` regardless of the number of threads. `visited` counts the
//! leaves of every unit up to and including the winning one, which is also
//! schedule-independent.

use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::code::{CodeParams, LinearCode};
use crate::constructions::{codim_distance_cap, griesmer_length, griesmer_max_distance};
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, Gf2Vector};

/// Projected candidate count above which searches refuse to run without `force`.
pub const DEFAULT_BUDGET: f64 = 2e9;

/// Largest dimension the search kernel handles (it keeps `2^k` weights).
pub const MAX_SEARCH_K: usize = 20;

/// Largest `k (n - k)` accepted by [`naive_oracle`].
pub const ORACLE_MAX_ENTRIES: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    #[default]
    Parallel,
}

/// Order of the two leaf tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CheckOrder {
    /// `det(I + A Aᵀ)` first, then the distance.
    #[default]
    DeterminantFirst,
    DistanceFirst,
}

/// Shard `index` of `total`: the candidates whose first column value is
/// congruent to `index` modulo `total`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Partition {
    pub index: usize,
    pub total: usize,
}

impl Partition {
    pub const WHOLE: Partition = Partition { index: 0, total: 1 };

    pub fn new(index: usize, total: usize) -> Result<Partition> {
        if total == 0 || index >= total {
            return Err(Error::Precondition(format!(
                "partition {index}/{total}: need index < total"
            )));
        }
        Ok(Partition { index, total })
    }

    fn owns(&self, first_column: Option<u32>) -> bool {
        match first_column {
            Some(c) => c as usize % self.total == self.index,
            None => self.index == 0,
        }
    }
}

impl Default for Partition {
    fn default() -> Self {
        Partition::WHOLE
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// `I/T` with a 0-based shard index.
    fn from_str(s: &str) -> Result<Partition> {
        let bad = || Error::Parse(format!("partition must look like I/T, got {s:?}"));
        let (i, t) = s.split_once('/').ok_or_else(bad)?;
        Partition::new(
            i.trim().parse().map_err(|_| bad())?,
            t.trim().parse().map_err(|_| bad())?,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOptions {
    pub reduce_columns: bool,
    pub prune_rows: bool,
    pub check_order: CheckOrder,
    pub partition: Partition,
    /// `None` disables the budget guard.
    pub budget: Option<f64>,
    pub execution: Execution,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            reduce_columns: true,
            prune_rows: true,
            check_order: CheckOrder::default(),
            partition: Partition::WHOLE,
            budget: Some(DEFAULT_BUDGET),
            execution: Execution::default(),
        }
    }
}

impl SearchOptions {
    fn strategy(&self, top: &str) -> String {
        format!(
            "{top}{}{}{}",
            if self.reduce_columns { "+reduce" } else { "" },
            if self.prune_rows { "+prune" } else { "" },
            match self.check_order {
                CheckOrder::DeterminantFirst => "+det-first",
                CheckOrder::DistanceFirst => "+dist-first",
            }
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Largest `d` of an `[n, k]` LCD code.
    MaxDistance,
    /// An `[n, k]` LCD code with distance `≥ d` (or `= d` when `exact`).
    ExistsDistance { d: usize, exact: bool },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpec {
    pub n: usize,
    pub k: usize,
    pub mode: SearchMode,
    /// Known upper bound on the answer (e.g. from neighbouring table cells).
    pub upper_bound: Option<usize>,
    pub options: SearchOptions,
}

impl SearchSpec {
    pub fn max_distance(n: usize, k: usize) -> SearchSpec {
        SearchSpec {
            n,
            k,
            mode: SearchMode::MaxDistance,
            upper_bound: None,
            options: SearchOptions::default(),
        }
    }

    pub fn exists(n: usize, k: usize, d: usize, exact: bool) -> SearchSpec {
        SearchSpec {
            mode: SearchMode::ExistsDistance { d, exact },
            ..SearchSpec::max_distance(n, k)
        }
    }

    pub fn with_options(mut self, options: SearchOptions) -> SearchSpec {
        self.options = options;
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    /// `d = 0` (and no witness) when nothing qualifies.
    pub params: CodeParams,
    /// The `A` block of the witness `[I_k | A]`.
    pub witness: Option<Gf2Matrix>,
    pub visited: u64,
    pub elapsed: Duration,
    pub strategy: String,
}

impl SearchResult {
    pub fn witness_code(&self) -> Option<LinearCode> {
        self.witness.as_ref().map(LinearCode::systematic)
    }

    pub fn to_json(&self) -> SearchResultJson {
        SearchResultJson {
            n: self.params.n,
            k: self.params.k,
            d: self.params.d,
            witness_a: self.witness.as_ref().map(Gf2Matrix::to_bit_rows),
            visited: self.visited,
            elapsed_ms: self.elapsed.as_millis() as u64,
            strategy: self.strategy.clone(),
        }
    }

    /// Combines shard results: larger `d` wins, ties go to the smaller witness.
    pub fn merge(mut self, other: SearchResult) -> SearchResult {
        let visited = self.visited + other.visited;
        let elapsed = self.elapsed.max(other.elapsed);
        let take_other = match other.params.d.cmp(&self.params.d) {
            std::cmp::Ordering::Greater => true,
            std::cmp::Ordering::Less => false,
            std::cmp::Ordering::Equal => match (&self.witness, &other.witness) {
                (None, Some(_)) => true,
                (Some(a), Some(b)) => column_key(b) < column_key(a),
                _ => false,
            },
        };
        if take_other {
            self = other;
        }
        self.visited = visited;
        self.elapsed = elapsed;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResultJson {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub witness_a: Option<Vec<String>>,
    pub visited: u64,
    pub elapsed_ms: u64,
    pub strategy: String,
}

/// Columns of `a` as integers (bit `i` = row `i`): the witness ordering key.
pub fn column_key(a: &Gf2Matrix) -> Vec<u32> {
    (0..a.cols())
        .map(|j| (0..a.rows()).fold(0u32, |acc, i| acc | (u32::from(a.get(i, j)) << i)))
        .collect()
}

fn matrix_from_columns(k: usize, columns: &[u32]) -> Gf2Matrix {
    let rows = (0..k)
        .map(|i| Gf2Vector::from_bits(columns.iter().map(|c| (c >> i) & 1 == 1)))
        .collect();
    Gf2Matrix::from_rows(rows, columns.len()).expect("rows built with equal length")
}

fn binomial_f64(n: f64, r: usize) -> f64 {
    (0..r).fold(1.0, |acc, i| acc * (n - i as f64) / (i as f64 + 1.0))
}

/// Number of leaves one full pass visits before pruning.
pub fn projected_candidates(n: usize, k: usize, options: &SearchOptions) -> f64 {
    let cols = n - k;
    let values = 2f64.powi(k as i32);
    let full = if options.reduce_columns {
        binomial_f64(values + cols as f64 - 1.0, cols)
    } else {
        values.powi(cols as i32)
    };
    full / options.partition.total as f64
}

fn check_dims(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::Precondition(format!(
            "need 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    if n > u8::MAX as usize {
        return Err(Error::Precondition(format!(
            "search kernel supports n <= 255, got {n}"
        )));
    }
    if k > MAX_SEARCH_K {
        return Err(Error::Precondition(format!(
            "search kernel supports k <= {MAX_SEARCH_K}, got {k}"
        )));
    }
    Ok(())
}

fn check_budget(n: usize, k: usize, options: &SearchOptions) -> Result<()> {
    if let Some(budget) = options.budget {
        let estimate = projected_candidates(n, k, options);
        if estimate > budget {
            return Err(Error::SearchBudget { estimate, budget });
        }
    }
    Ok(())
}

/// Depth-first enumeration of column tuples for one `(n, k, d)` target.
struct Kernel {
    k: usize,
    cols: usize,
    target: usize,
    exact: bool,
    options: SearchOptions,
}

/// Mutable DFS state: per-depth codeword weights and Gram rows.
struct Frames {
    weights: Vec<u8>,
    gram: Vec<u32>,
    columns: Vec<u32>,
    candidates: Vec<Vec<u32>>,
}

impl Kernel {
    fn size(&self) -> usize {
        1 << self.k
    }

    fn frames(&self) -> Frames {
        let size = self.size();
        let mut weights = vec![0u8; size * (self.cols + 1)];
        for (m, w) in weights[..size].iter_mut().enumerate() {
            *w = m.count_ones() as u8;
        }
        let mut gram = vec![0u32; self.k * (self.cols + 1)];
        for (i, row) in gram[..self.k].iter_mut().enumerate() {
            *row = 1 << i;
        }
        Frames {
            weights,
            gram,
            columns: Vec::with_capacity(self.cols),
            candidates: vec![Vec::new(); self.cols],
        }
    }

    /// Pushes column `c` at `depth`; returns `false` if the branch is pruned.
    fn place(&self, f: &mut Frames, depth: usize, c: u32) -> bool {
        let size = self.size();
        let (prev, next) = f.weights.split_at_mut((depth + 1) * size);
        let prev = &prev[depth * size..];
        let next = &mut next[..size];
        let mut min = u8::MAX;
        for m in 1..size {
            let w = prev[m] + ((m as u32 & c).count_ones() & 1) as u8;
            next[m] = w;
            min = min.min(w);
        }
        let k = self.k;
        let (gprev, gnext) = f.gram.split_at_mut((depth + 1) * k);
        let gprev = &gprev[depth * k..];
        let gnext = &mut gnext[..k];
        for i in 0..k {
            gnext[i] = gprev[i] ^ if (c >> i) & 1 == 1 { c } else { 0 };
        }
        f.columns.truncate(depth);
        f.columns.push(c);
        let remaining = self.cols - depth - 1;
        !self.options.prune_rows || min as usize + remaining >= self.target
    }

    fn leaf_ok(&self, f: &Frames) -> bool {
        let size = self.size();
        let depth = self.cols;
        let distance_ok = || {
            let w = &f.weights[depth * size + 1..(depth + 1) * size];
            let min = w.iter().copied().min().unwrap_or(u8::MAX) as usize;
            if self.exact {
                min == self.target
            } else {
                min >= self.target
            }
        };
        let det_ok = || nonsingular(&f.gram[depth * self.k..(depth + 1) * self.k]);
        match self.options.check_order {
            CheckOrder::DeterminantFirst => det_ok() && distance_ok(),
            CheckOrder::DistanceFirst => distance_ok() && det_ok(),
        }
    }

    fn dfs(&self, f: &mut Frames, depth: usize, visited: &mut u64) -> bool {
        if depth == self.cols {
            *visited += 1;
            return self.leaf_ok(f);
        }
        let start = if self.options.reduce_columns && depth > 0 {
            f.columns[depth - 1]
        } else {
            0
        };
        let mut candidates = std::mem::take(&mut f.candidates[depth]);
        candidates.clear();
        let feasible = if self.options.prune_rows {
            self.forced_columns(f, depth, start, &mut candidates)
        } else {
            candidates.extend(start..self.size() as u32);
            true
        };
        let mut found = false;
        if feasible {
            for &c in &candidates {
                if self.place(f, depth, c) && self.dfs(f, depth + 1, visited) {
                    found = true;
                    break;
                }
            }
        }
        f.candidates[depth] = candidates;
        found
    }

    /// Columns `≥ start` admissible at `depth`. A codeword `m` whose weight
    /// plus the number of remaining columns equals the target must gain one
    /// from every remaining column, i.e. `m · c = 1`. The admissible columns
    /// are the solutions of that affine system; returns `false` if it has none.
    fn forced_columns(&self, f: &Frames, depth: usize, start: u32, out: &mut Vec<u32>) -> bool {
        let size = self.size();
        let remaining = self.cols - depth;
        let weights = &f.weights[depth * size..(depth + 1) * size];
        // pivots[b]: an equation (mask, rhs) whose highest set bit is b.
        let mut pivots = [(0u32, false); 32];
        let mut rank = 0;
        for (m, &w) in weights.iter().enumerate().skip(1) {
            if w as usize + remaining != self.target {
                continue;
            }
            let (mut eq, mut rhs) = (m as u32, true);
            while eq != 0 {
                let top = 31 - eq.leading_zeros() as usize;
                if pivots[top].0 == 0 {
                    pivots[top] = (eq, rhs);
                    rank += 1;
                    break;
                }
                eq ^= pivots[top].0;
                rhs ^= pivots[top].1;
            }
            if eq == 0 && rhs {
                return false;
            }
            if rank == self.k {
                break;
            }
        }
        if rank == 0 {
            out.extend(start..size as u32);
            return true;
        }
        let free: Vec<usize> = (0..self.k).filter(|&b| pivots[b].0 == 0).collect();
        for assignment in 0u32..1 << free.len() {
            let mut c = 0u32;
            for (i, &b) in free.iter().enumerate() {
                c |= ((assignment >> i) & 1) << b;
            }
            // Back-substitute from the lowest pivot up; lower bits are already fixed.
            for (b, &(eq, rhs)) in pivots.iter().enumerate().take(self.k) {
                if eq != 0 {
                    let lower = eq & !(1 << b);
                    let bit = rhs ^ ((lower & c).count_ones() & 1 == 1);
                    c |= u32::from(bit) << b;
                }
            }
            if c >= start {
                out.push(c);
            }
        }
        out.sort_unstable();
        true
    }

    /// Column prefixes that split the space into independent units, in lexicographic order.
    fn units(&self) -> Vec<Vec<u32>> {
        let depth = self.cols.min(2);
        let size = self.size() as u32;
        let mut out = vec![Vec::new()];
        for level in 0..depth {
            out = out
                .into_iter()
                .flat_map(|p: Vec<u32>| {
                    let start = if self.options.reduce_columns && level > 0 {
                        p[level - 1]
                    } else {
                        0
                    };
                    (start..size).map(move |c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
        }
        out.retain(|p| self.options.partition.owns(p.first().copied()));
        out
    }

    fn run_unit(&self, prefix: &[u32], visited: &mut u64) -> Option<Vec<u32>> {
        let mut f = self.frames();
        for (depth, &c) in prefix.iter().enumerate() {
            if !self.place(&mut f, depth, c) {
                return None;
            }
        }
        if self.dfs(&mut f, prefix.len(), visited) {
            Some(f.columns.clone())
        } else {
            None
        }
    }

    /// First qualifying column tuple in lexicographic order, and the leaf count.
    fn find_first(&self) -> (Option<Vec<u32>>, u64) {
        let units = self.units();
        let counts: Vec<AtomicU64> = units.iter().map(|_| AtomicU64::new(0)).collect();
        let attempt = |idx: usize| {
            let mut visited = 0;
            let hit = self.run_unit(&units[idx], &mut visited);
            counts[idx].store(visited, Ordering::Relaxed);
            hit.map(|cols| (idx, cols))
        };
        let found = match self.options.execution {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                (0..units.len()).into_par_iter().find_map_first(attempt)
            }
            _ => (0..units.len()).find_map(attempt),
        };
        let last = found.as_ref().map_or(units.len(), |(idx, _)| idx + 1);
        let visited = counts[..last]
            .iter()
            .map(|c| c.load(Ordering::Relaxed))
            .sum();
        (found.map(|(_, cols)| cols), visited)
    }
}

/// Gaussian elimination on at most 32 row bitmasks.
fn nonsingular(rows: &[u32]) -> bool {
    let mut work = [0u32; 32];
    let k = rows.len();
    work[..k].copy_from_slice(rows);
    for col in 0..k {
        let bit = 1u32 << col;
        let Some(p) = (col..k).find(|&r| work[r] & bit != 0) else {
            return false;
        };
        work.swap(col, p);
        let pivot = work[col];
        for row in &mut work[col + 1..k] {
            if *row & bit != 0 {
                *row ^= pivot;
            }
        }
    }
    true
}

/// Some `A` with `[I_k | A]` LCD and minimum distance `≥ d` (or `= d` when
/// `exact`), the lexicographically first in column order; plus the number of
/// leaves examined.
pub fn exists_lcd(
    n: usize,
    k: usize,
    d: usize,
    exact: bool,
    options: &SearchOptions,
) -> Result<(Option<Gf2Matrix>, u64)> {
    check_dims(n, k)?;
    if d == 0 || d > n {
        return Err(Error::Precondition(format!(
            "need 1 <= d <= n, got d = {d}"
        )));
    }
    check_budget(n, k, options)?;
    Ok(exists_unchecked(n, k, d, exact, options))
}

fn exists_unchecked(
    n: usize,
    k: usize,
    d: usize,
    exact: bool,
    options: &SearchOptions,
) -> (Option<Gf2Matrix>, u64) {
    let kernel = Kernel {
        k,
        cols: n - k,
        target: d,
        exact,
        options: *options,
    };
    let (hit, visited) = kernel.find_first();
    (hit.map(|cols| matrix_from_columns(k, &cols)), visited)
}

/// Best distance bound available without search.
pub fn distance_upper_bound(n: usize, k: usize) -> usize {
    let mut ub = (n + 1 - k).min(griesmer_max_distance(n, k));
    if n - k >= 2 {
        if let Some(cap) = codim_distance_cap(n, n - k) {
            ub = ub.min(cap);
        }
    }
    ub
}

/// Runs a search described by `spec`.
pub fn search_lcd(spec: &SearchSpec) -> Result<SearchResult> {
    let start = Instant::now();
    let (n, k) = (spec.n, spec.k);
    check_dims(n, k)?;
    check_budget(n, k, &spec.options)?;
    match spec.mode {
        SearchMode::ExistsDistance { d, exact } => {
            let (witness, visited) = exists_lcd(n, k, d, exact, &spec.options)?;
            Ok(SearchResult {
                params: CodeParams {
                    n,
                    k,
                    d: if witness.is_some() { d } else { 0 },
                },
                witness,
                visited,
                elapsed: start.elapsed(),
                strategy: spec
                    .options
                    .strategy(if exact { "exists-exact" } else { "exists" }),
            })
        }
        SearchMode::MaxDistance => {
            let mut ub = distance_upper_bound(n, k);
            if let Some(hint) = spec.upper_bound {
                ub = ub.min(hint);
            }
            let mut visited = 0;
            for d in (1..=ub).rev() {
                let (witness, v) = exists_unchecked(n, k, d, false, &spec.options);
                visited += v;
                if witness.is_some() {
                    return Ok(SearchResult {
                        params: CodeParams { n, k, d },
                        witness,
                        visited,
                        elapsed: start.elapsed(),
                        strategy: spec.options.strategy("top-down"),
                    });
                }
            }
            Ok(SearchResult {
                params: CodeParams { n, k, d: 0 },
                witness: None,
                visited,
                elapsed: start.elapsed(),
                strategy: spec.options.strategy("top-down"),
            })
        }
    }
}

/// Largest `k` for which an `[n, k]` LCD code of minimum distance exactly
/// `d` exists (`k = 0`, no witness, if none). Dimensions are tried from the
/// largest one allowed by the Singleton and Griesmer bounds downwards.
/// `lcd_values`, when given, maps `k` to the known `LCD[n, k]`; dimensions
/// with `LCD[n, k] < d` are skipped.
pub fn search_lck(
    n: usize,
    d: usize,
    options: &SearchOptions,
    lcd_values: Option<&dyn Fn(usize) -> Option<usize>>,
) -> Result<SearchResult> {
    let start = Instant::now();
    if d == 0 || d > n {
        return Err(Error::Precondition(format!(
            "need 1 <= d <= n, got n = {n}, d = {d}"
        )));
    }
    let k_max = (1..=n)
        .rev()
        .find(|&k| n + 1 - k >= d && griesmer_length(k, d) <= n)
        .unwrap_or(0);
    let mut visited = 0;
    for k in (1..=k_max).rev() {
        if let Some(known) = lcd_values.and_then(|f| f(k)) {
            if known < d {
                continue;
            }
        }
        if distance_upper_bound(n, k) < d {
            continue;
        }
        check_dims(n, k)?;
        check_budget(n, k, options)?;
        let (witness, v) = exists_unchecked(n, k, d, true, options);
        visited += v;
        if witness.is_some() {
            return Ok(SearchResult {
                params: CodeParams { n, k, d },
                witness,
                visited,
                elapsed: start.elapsed(),
                strategy: options.strategy("descend-k-exact"),
            });
        }
    }
    Ok(SearchResult {
        params: CodeParams { n, k: 0, d },
        witness: None,
        visited,
        elapsed: start.elapsed(),
        strategy: options.strategy("descend-k-exact"),
    })
}

/// Unreduced, unpruned sweep over every `A ∈ GF(2)^{k × (n-k)}`: keeps the
/// best distance among those with `det(I + A Aᵀ) = 1`. Built from the
/// general matrix routines only, as a reference for [`search_lcd`].
pub fn naive_oracle(n: usize, k: usize) -> Result<usize> {
    if k == 0 || k > n {
        return Err(Error::Precondition(format!(
            "need 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    let cols = n - k;
    let entries = k * cols;
    if entries > ORACLE_MAX_ENTRIES {
        return Err(Error::Precondition(format!(
            "oracle limited to k(n-k) <= {ORACLE_MAX_ENTRIES}, got {entries}"
        )));
    }
    let identity = Gf2Matrix::identity(k);
    let eval = |g: u64| -> usize {
        let mut a = Gf2Matrix::zeros(k, cols);
        for t in 0..entries {
            if (g >> t) & 1 == 1 {
                a.set(t / cols, t % cols, true);
            }
        }
        let gram = identity
            .add(&a.mul(&a.transpose()).expect("conformable"))
            .expect("same shape");
        if gram.det().expect("square") {
            LinearCode::systematic(&a)
                .min_distance()
                .expect("k within enumeration budget")
        } else {
            0
        }
    };
    let total: u64 = 1 << entries;
    #[cfg(feature = "parallel")]
    let best = {
        use rayon::prelude::*;
        (0..total).into_par_iter().map(eval).max()
    };
    #[cfg(not(feature = "parallel"))]
    let best = (0..total).map(eval).max();
    Ok(best.unwrap_or(0))
}
