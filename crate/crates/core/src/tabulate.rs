//! Assembly of the `LCD[n,k]` and `LCK[n,d]` tables.
//!
//! Every cell records its source. Closed-form values are re-confirmed by
//! search at `d` and `d + 1`, and zeros predicted by the parity/Griesmer
//! criterion are re-confirmed by search as well. Cells can be cached on disk,
//! one JSON document per cell; a cached value is pinned and re-verified
//! whenever it is loaded.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use log::{debug, info};
use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::constructions::{
    codim_distance_cap, construct_codim, construct_k1, construct_n2, lck_vanishes, Construction,
};
use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::lcd::is_lcd;
use crate::search::{exists_lcd, search_lcd, search_lck, SearchOptions, SearchSpec};

/// Environment variable naming the default cache directory.
pub const CACHE_ENV: &str = "LCD_TABLE_CACHE";

/// Largest `n` built without `force`.
pub const DEFAULT_MAX_N: usize = 12;

/// `LCK` cells marked with a star in emitted tables, with their values.
pub const STARRED_LCK_CELLS: [(usize, usize, usize); 9] = [
    (4, 3, 1),
    (6, 5, 1),
    (7, 5, 1),
    (8, 3, 4),
    (8, 7, 1),
    (9, 5, 2),
    (10, 9, 1),
    (12, 7, 2),
    (12, 11, 1),
];

/// Reference `LCD[n,k]`, row `n - 1`, column `k - 1`.
pub const REFERENCE_LCD: [&[usize]; 12] = [
    &[1],
    &[1, 1],
    &[3, 2, 1],
    &[3, 2, 1, 1],
    &[5, 2, 2, 2, 1],
    &[5, 3, 2, 2, 1, 1],
    &[7, 4, 3, 2, 2, 2, 1],
    &[7, 5, 3, 3, 2, 2, 1, 1],
    &[9, 6, 4, 4, 3, 2, 2, 2, 1],
    &[9, 6, 5, 4, 3, 3, 2, 2, 1, 1],
    &[11, 6, 5, 4, 4, 4, 3, 2, 2, 2, 1],
    &[11, 7, 6, 5, 4, 4, 3, 2, 2, 2, 1, 1],
];

/// Reference `LCK[n,d]`, row `n - 1`, column `d - 1`.
pub const REFERENCE_LCK: [&[usize]; 12] = [
    &[1],
    &[2, 0],
    &[3, 2, 1],
    &[4, 2, 1, 0],
    &[5, 4, 1, 0, 1],
    &[6, 4, 2, 2, 1, 0],
    &[7, 6, 3, 2, 1, 0, 1],
    &[8, 6, 4, 2, 2, 0, 1, 0],
    &[9, 8, 5, 4, 2, 2, 1, 0, 1],
    &[10, 8, 6, 4, 3, 2, 1, 0, 1, 0],
    &[11, 10, 7, 6, 3, 2, 1, 0, 1, 0, 1],
    &[12, 10, 7, 6, 4, 3, 2, 0, 1, 0, 1, 0],
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    /// Rows `n`, columns `k`, values `d`.
    Lcd,
    /// Rows `n`, columns `d`, values `k`.
    Lck,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::Lcd => "lcd",
            TableKind::Lck => "lck",
        }
    }

    fn column_label(self) -> &'static str {
        match self {
            TableKind::Lcd => "k",
            TableKind::Lck => "d",
        }
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lcd" => Ok(TableKind::Lcd),
            "lck" => Ok(TableKind::Lck),
            other => Err(Error::Parse(format!("unknown table kind {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CellSource {
    Construction(String),
    Search,
    Theorem,
}

impl fmt::Display for CellSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CellSource::Construction(tag) => write!(f, "construction:{tag}"),
            CellSource::Search => f.write_str("search"),
            CellSource::Theorem => f.write_str("theorem"),
        }
    }
}

impl FromStr for CellSource {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "search" => Ok(CellSource::Search),
            "theorem" => Ok(CellSource::Theorem),
            _ => s
                .strip_prefix("construction:")
                .map(|tag| CellSource::Construction(tag.to_string()))
                .ok_or_else(|| Error::Parse(format!("unknown cell source {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub kind: TableKind,
    pub n: usize,
    /// `k` for LCD tables, `d` for LCK tables.
    pub col: usize,
    pub value: usize,
    /// Full generator matrix of a code certifying `value`.
    pub witness: Option<Gf2Matrix>,
    pub source: CellSource,
    pub starred: bool,
    pub elapsed: Duration,
}

/// On-disk and JSON form of a cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntryJson {
    pub kind: TableKind,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub d: Option<usize>,
    pub value: usize,
    pub witness: Option<Vec<String>>,
    pub source: String,
    pub starred: bool,
    pub elapsed_ms: u64,
}

impl TableEntry {
    pub fn key(&self) -> String {
        cell_key(self.kind, self.n, self.col)
    }

    pub fn to_json(&self) -> TableEntryJson {
        let (k, d) = match self.kind {
            TableKind::Lcd => (Some(self.col), None),
            TableKind::Lck => (None, Some(self.col)),
        };
        TableEntryJson {
            kind: self.kind,
            n: self.n,
            k,
            d,
            value: self.value,
            witness: self.witness.as_ref().map(Gf2Matrix::to_bit_rows),
            source: self.source.to_string(),
            starred: self.starred,
            elapsed_ms: self.elapsed.as_millis() as u64,
        }
    }

    pub fn from_json(j: &TableEntryJson) -> Result<TableEntry> {
        let col = match j.kind {
            TableKind::Lcd => j.k,
            TableKind::Lck => j.d,
        }
        .ok_or_else(|| Error::Parse(format!("{} cell without column index", j.kind.name())))?;
        let witness = j
            .witness
            .as_ref()
            .map(|rows| Gf2Matrix::from_bit_rows(rows, j.n))
            .transpose()?;
        Ok(TableEntry {
            kind: j.kind,
            n: j.n,
            col,
            value: j.value,
            witness,
            source: j.source.parse()?,
            starred: j.starred,
            elapsed: Duration::from_millis(j.elapsed_ms),
        })
    }

    /// Re-checks the witness against the claimed value.
    pub fn verify(&self) -> Result<()> {
        let fail = |reason: String| Error::CacheCorrupt {
            key: self.key(),
            reason,
        };
        let Some(w) = &self.witness else {
            return match (self.kind, self.value) {
                (TableKind::Lck, 0) => Ok(()),
                _ => Err(fail("missing witness".into())),
            };
        };
        let code = LinearCode::from_generator(w.clone())
            .map_err(|e| fail(format!("bad generator: {e}")))?;
        if !is_lcd(&code) {
            return Err(fail("witness is not LCD".into()));
        }
        let d = code.min_distance()?;
        let (k_expected, d_expected) = match self.kind {
            TableKind::Lcd => (self.col, self.value),
            TableKind::Lck => (self.value, self.col),
        };
        if code.n() != self.n || code.k() != k_expected || w.rows() != k_expected || d != d_expected
        {
            return Err(fail(format!(
                "witness has parameters [{},{},{d}], expected [{},{k_expected},{d_expected}]",
                code.n(),
                code.k(),
                self.n
            )));
        }
        Ok(())
    }
}

fn cell_key(kind: TableKind, n: usize, col: usize) -> String {
    format!("{}-n{n}-{}{col}", kind.name(), kind.column_label())
}

/// A lower-triangular table (`1 ≤ col ≤ n ≤ max_n`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub kind: TableKind,
    pub max_n: usize,
    cells: BTreeMap<(usize, usize), TableEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
struct TableJson {
    kind: TableKind,
    max_n: usize,
    cells: Vec<TableEntryJson>,
}

impl Table {
    pub fn new(kind: TableKind, max_n: usize) -> Table {
        Table {
            kind,
            max_n,
            cells: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, entry: TableEntry) {
        self.cells.insert((entry.n, entry.col), entry);
    }

    pub fn get(&self, n: usize, col: usize) -> Option<&TableEntry> {
        self.cells.get(&(n, col))
    }

    pub fn get_mut(&mut self, n: usize, col: usize) -> Option<&mut TableEntry> {
        self.cells.get_mut(&(n, col))
    }

    pub fn value(&self, n: usize, col: usize) -> Option<usize> {
        self.get(n, col).map(|e| e.value)
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = &TableEntry> {
        self.cells.values()
    }

    pub fn is_complete(&self) -> bool {
        (1..=self.max_n).all(|n| (1..=n).all(|c| self.cells.contains_key(&(n, c))))
    }

    /// Row `n` as a vector of values (missing cells omitted).
    pub fn row(&self, n: usize) -> Vec<usize> {
        (1..=n).filter_map(|c| self.value(n, c)).collect()
    }

    pub fn to_json_string(&self) -> Result<String> {
        let doc = TableJson {
            kind: self.kind,
            max_n: self.max_n,
            cells: self.entries().map(TableEntry::to_json).collect(),
        };
        Ok(serde_json::to_string_pretty(&doc)? + "\n")
    }

    pub fn from_json_str(s: &str) -> Result<Table> {
        let doc: TableJson = serde_json::from_str(s)?;
        let mut table = Table::new(doc.kind, doc.max_n);
        for cell in &doc.cells {
            table.insert(TableEntry::from_json(cell)?);
        }
        Ok(table)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Markdown,
    Csv,
    Json,
}

impl FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "markdown" | "md" => Ok(TableFormat::Markdown),
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

fn cell_text(e: Option<&TableEntry>) -> String {
    match e {
        Some(e) if e.starred => format!("{}*", e.value),
        Some(e) => e.value.to_string(),
        None => String::new(),
    }
}

/// Renders a table. Output depends only on the table contents.
pub fn emit(table: &Table, format: TableFormat) -> Result<String> {
    let label = format!("n/{}", table.kind.column_label());
    let mut out = String::new();
    match format {
        TableFormat::Markdown => {
            let _ = write!(out, "| {label} |");
            for c in 1..=table.max_n {
                let _ = write!(out, " {c} |");
            }
            out.push_str("\n|---|");
            for _ in 1..=table.max_n {
                out.push_str("---|");
            }
            out.push('\n');
            for n in 1..=table.max_n {
                let _ = write!(out, "| {n} |");
                for c in 1..=table.max_n {
                    let text = if c <= n {
                        cell_text(table.get(n, c))
                    } else {
                        String::new()
                    };
                    let _ = write!(out, " {text} |");
                }
                out.push('\n');
            }
        }
        TableFormat::Csv => {
            out.push_str(&label);
            for c in 1..=table.max_n {
                let _ = write!(out, ",{c}");
            }
            out.push('\n');
            for n in 1..=table.max_n {
                let _ = write!(out, "{n}");
                for c in 1..=table.max_n {
                    let text = if c <= n {
                        cell_text(table.get(n, c))
                    } else {
                        String::new()
                    };
                    let _ = write!(out, ",{text}");
                }
                out.push('\n');
            }
        }
        TableFormat::Json => out = table.to_json_string()?,
    }
    Ok(out)
}

/// One-document-per-cell store. The first value written for a cell is
/// pinned; later writes must agree.
#[derive(Debug, Clone)]
pub struct CellCache {
    dir: PathBuf,
}

impl CellCache {
    pub fn open(dir: impl Into<PathBuf>) -> Result<CellCache> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(CellCache { dir })
    }

    /// Cache at `$LCD_TABLE_CACHE`, if set.
    pub fn from_env() -> Result<Option<CellCache>> {
        match std::env::var_os(CACHE_ENV) {
            Some(dir) if !dir.is_empty() => CellCache::open(PathBuf::from(dir)).map(Some),
            _ => Ok(None),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path(&self, kind: TableKind, n: usize, col: usize) -> PathBuf {
        self.dir.join(format!("{}.json", cell_key(kind, n, col)))
    }

    /// Loads and re-verifies a cell.
    pub fn load(&self, kind: TableKind, n: usize, col: usize) -> Result<Option<TableEntry>> {
        let path = self.path(kind, n, col);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        let json: TableEntryJson = serde_json::from_str(&text)?;
        let entry = TableEntry::from_json(&json)?;
        if entry.kind != kind || entry.n != n || entry.col != col {
            return Err(Error::CacheCorrupt {
                key: cell_key(kind, n, col),
                reason: "document describes a different cell".into(),
            });
        }
        entry.verify()?;
        Ok(Some(entry))
    }

    /// Stores a cell unless one is already present, in which case the
    /// values must match.
    pub fn store(&self, entry: &TableEntry) -> Result<()> {
        let path = self.path(entry.kind, entry.n, entry.col);
        let body = serde_json::to_string_pretty(&entry.to_json())? + "\n";
        let tmp = tempfile_in(&self.dir, &entry.key())?;
        fs::write(&tmp, body)?;
        // hard_link refuses to replace an existing file, which makes the first write win.
        let linked = fs::hard_link(&tmp, &path);
        let _ = fs::remove_file(&tmp);
        match linked {
            Ok(()) => Ok(()),
            Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => {
                let stored = self
                    .load(entry.kind, entry.n, entry.col)?
                    .expect("file exists");
                if stored.value != entry.value {
                    return Err(Error::CacheConflict {
                        key: entry.key(),
                        stored: stored.value,
                        new: entry.value,
                    });
                }
                Ok(())
            }
            Err(e) => Err(e.into()),
        }
    }
}

fn tempfile_in(dir: &Path, stem: &str) -> Result<PathBuf> {
    for attempt in 0u32.. {
        let path = dir.join(format!(".{stem}.{}.{attempt}.tmp", std::process::id()));
        match fs::OpenOptions::new()
            .write(true)
            .create_new(true)
            .open(&path)
        {
            Ok(mut f) => {
                f.flush()?;
                return Ok(path);
            }
            Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => continue,
            Err(e) => return Err(e.into()),
        }
    }
    unreachable!()
}

#[derive(Debug, Clone, Default)]
pub struct BuildOptions {
    pub search: SearchOptions,
    pub cache: Option<CellCache>,
    /// Keep wall-clock timings in emitted cells. Off by default so that
    /// repeated builds are byte-identical.
    pub record_timing: bool,
    /// Allow `max_n` beyond [`DEFAULT_MAX_N`].
    pub force: bool,
}

impl BuildOptions {
    fn finish(&self, mut entry: TableEntry) -> Result<TableEntry> {
        if let Some(cache) = &self.cache {
            cache.store(&entry)?;
        }
        if !self.record_timing {
            entry.elapsed = Duration::ZERO;
        }
        Ok(entry)
    }

    fn cached(&self, kind: TableKind, n: usize, col: usize) -> Result<Option<TableEntry>> {
        let Some(cache) = &self.cache else {
            return Ok(None);
        };
        let hit = cache.load(kind, n, col)?;
        Ok(hit.map(|mut e| {
            debug!("cache hit {}", e.key());
            if !self.record_timing {
                e.elapsed = Duration::ZERO;
            }
            e
        }))
    }

    fn check_size(&self, max_n: usize) -> Result<()> {
        if max_n == 0 {
            return Err(Error::Precondition("max_n must be at least 1".into()));
        }
        if max_n > DEFAULT_MAX_N && !self.force {
            return Err(Error::Precondition(format!(
                "tables beyond n = {DEFAULT_MAX_N} need force"
            )));
        }
        Ok(())
    }
}

/// The closed form covering `(n, k)`, if any.
fn closed_form(n: usize, k: usize) -> Result<Option<Construction>> {
    let i = n - k;
    if k == 1 {
        return construct_k1(n).map(Some);
    }
    if k == 2 {
        return construct_n2(n).map(Some);
    }
    if i >= 2 && codim_distance_cap(n, i).is_some() {
        return construct_codim(n, i).map(Some);
    }
    Ok(None)
}

/// Builds `LCD[n,k]` for `1 ≤ k ≤ n ≤ max_n`.
pub fn build_lcd_table(max_n: usize, opts: &BuildOptions) -> Result<Table> {
    opts.check_size(max_n)?;
    let mut table = Table::new(TableKind::Lcd, max_n);
    for n in 1..=max_n {
        for k in 1..=n {
            let entry = match opts.cached(TableKind::Lcd, n, k)? {
                Some(e) => e,
                None => opts.finish(compute_lcd_cell(n, k, &table, &opts.search)?)?,
            };
            info!("LCD[{n},{k}] = {} ({})", entry.value, entry.source);
            table.insert(entry);
        }
    }
    Ok(table)
}

fn compute_lcd_cell(
    n: usize,
    k: usize,
    table: &Table,
    search: &SearchOptions,
) -> Result<TableEntry> {
    let start = Instant::now();
    if let Some(c) = closed_form(n, k)? {
        let d = c.designed_distance;
        let code_d = c.code.min_distance()?;
        let found = exists_lcd(n, k, d, false, search)?.0.is_some();
        let above = d < n && exists_lcd(n, k, d + 1, false, search)?.0.is_some();
        if !is_lcd(&c.code) || code_d != d || !found || above {
            return Err(Error::Precondition(format!(
                "closed form {} for [{n},{k}] not confirmed by search (d = {d})",
                c.source
            )));
        }
        return Ok(TableEntry {
            kind: TableKind::Lcd,
            n,
            col: k,
            value: d,
            witness: Some(c.code.generator().clone()),
            source: CellSource::Construction(c.source.tag().to_string()),
            starred: false,
            elapsed: start.elapsed(),
        });
    }
    // Deleting one (k odd) or two (k even) generator rows leaves an LCD subcode,
    // so the value cannot exceed the one two columns (or one column) to the left.
    let step = if k % 2 == 1 { 1 } else { 2 };
    let upper_bound = if k > step {
        table.value(n, k - step)
    } else {
        None
    };
    let spec = SearchSpec {
        upper_bound,
        ..SearchSpec::max_distance(n, k).with_options(*search)
    };
    let r = search_lcd(&spec)?;
    Ok(TableEntry {
        kind: TableKind::Lcd,
        n,
        col: k,
        value: r.params.d,
        witness: r.witness_code().map(|c| c.generator().clone()),
        source: CellSource::Search,
        starred: false,
        elapsed: start.elapsed(),
    })
}

/// Builds `LCK[n,d]` for `1 ≤ d ≤ n ≤ max_n`, using `lcd` (built on the fly
/// if not supplied) to skip dimensions whose maximum distance is below `d`.
pub fn build_lck_table(max_n: usize, lcd: Option<&Table>, opts: &BuildOptions) -> Result<Table> {
    opts.check_size(max_n)?;
    let owned;
    let lcd = match lcd {
        Some(t) if t.kind == TableKind::Lcd && t.max_n >= max_n && t.is_complete() => t,
        _ => {
            owned = build_lcd_table(max_n, opts)?;
            &owned
        }
    };
    let mut table = Table::new(TableKind::Lck, max_n);
    for n in 1..=max_n {
        let lookup = |k: usize| lcd.value(n, k);
        for d in 1..=n {
            let starred = STARRED_LCK_CELLS
                .iter()
                .any(|&(sn, sd, _)| sn == n && sd == d);
            let entry = match opts.cached(TableKind::Lck, n, d)? {
                Some(e) => e,
                None => {
                    let start = Instant::now();
                    let r = search_lck(n, d, &opts.search, Some(&lookup))?;
                    let vanishes = lck_vanishes(n, d);
                    if vanishes && r.params.k != 0 {
                        return Err(Error::Precondition(format!(
                            "LCK[{n},{d}] predicted zero but search found k = {}",
                            r.params.k
                        )));
                    }
                    opts.finish(TableEntry {
                        kind: TableKind::Lck,
                        n,
                        col: d,
                        value: r.params.k,
                        witness: r.witness_code().map(|c| c.generator().clone()),
                        source: if vanishes {
                            CellSource::Theorem
                        } else {
                            CellSource::Search
                        },
                        starred,
                        elapsed: start.elapsed(),
                    })?
                }
            };
            info!("LCK[{n},{d}] = {} ({})", entry.value, entry.source);
            table.insert(entry);
        }
    }
    Ok(table)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    /// Cells `(n, k)` with `LCD[n,k] > LCD[n,k-1]`, `k ≥ 2`.
    pub adjacent_violations: Vec<(usize, usize)>,
    /// Odd `k ≥ 3` with `LCD[n,k] > LCD[n,k-1]` (must be empty).
    pub odd_step_violations: Vec<(usize, usize)>,
    /// Even `k ≥ 4` with `LCD[n,k] > LCD[n,k-2]` (must be empty).
    pub even_step_violations: Vec<(usize, usize)>,
}

impl ConjectureReport {
    pub fn is_clean(&self) -> bool {
        self.adjacent_violations.is_empty()
            && self.odd_step_violations.is_empty()
            && self.even_step_violations.is_empty()
    }
}

/// Checks row-wise monotonicity of an LCD table.
pub fn verify_conjecture(table: &Table) -> Result<ConjectureReport> {
    if table.kind != TableKind::Lcd {
        return Err(Error::Precondition("conjecture concerns LCD tables".into()));
    }
    if !table.is_complete() {
        return Err(Error::IncompleteTable(format!(
            "LCD table up to n = {} has missing cells",
            table.max_n
        )));
    }
    let v = |n, k| table.value(n, k).expect("complete");
    let mut report = ConjectureReport::default();
    for n in 1..=table.max_n {
        for k in 2..=n {
            if v(n, k) > v(n, k - 1) {
                report.adjacent_violations.push((n, k));
                if k % 2 == 1 {
                    report.odd_step_violations.push((n, k));
                }
            }
            if k >= 4 && k % 2 == 0 && v(n, k) > v(n, k - 2) {
                report.even_step_violations.push((n, k));
            }
        }
    }
    Ok(report)
}

/// Cells where `table` differs from `reference` (row `n - 1`, column `col - 1`).
pub fn compare_with(table: &Table, reference: &[&[usize]]) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for (row, values) in reference.iter().enumerate().take(table.max_n) {
        let n = row + 1;
        for (c, &expected) in values.iter().enumerate() {
            if let Some(got) = table.value(n, c + 1) {
                if got != expected {
                    out.push((n, c + 1, expected, got));
                }
            }
        }
    }
    out
}

/// Consistency between the two tables: `LCD[n,k] = d` requires
/// `LCK[n,d] ≥ k`, and `LCK[n,d] = k > 0` requires `LCD[n,k] ≥ d`.
/// Returns human-readable issues.
pub fn cross_check(lcd: &Table, lck: &Table) -> Vec<String> {
    let mut issues = Vec::new();
    let max_n = lcd.max_n.min(lck.max_n);
    for n in 1..=max_n {
        for k in 1..=n {
            if let Some(d) = lcd.value(n, k).filter(|&d| d > 0) {
                match lck.value(n, d) {
                    Some(kk) if kk >= k => {}
                    other => issues.push(format!("LCD[{n},{k}]={d} but LCK[{n},{d}]={other:?}")),
                }
            }
        }
        for d in 1..=n {
            if let Some(k) = lck.value(n, d).filter(|&k| k > 0) {
                match lcd.value(n, k) {
                    Some(dd) if dd >= d => {}
                    other => issues.push(format!("LCK[{n},{d}]={k} but LCD[{n},{k}]={other:?}")),
                }
            }
        }
    }
    issues
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lcd_table(max_n: usize) -> Table {
        build_lcd_table(max_n, &BuildOptions::default()).unwrap()
    }

    #[test]
    fn small_lcd_table_rows() {
        let t = lcd_table(3);
        assert_eq!(t.row(1), vec![1]);
        assert_eq!(t.row(2), vec![1, 1]);
        assert_eq!(t.row(3), vec![3, 2, 1]);
        for e in t.entries() {
            e.verify().unwrap();
        }
    }

    #[test]
    fn lcd_cell_nine_four() {
        let t = lcd_table(9);
        assert_eq!(t.value(9, 4), Some(4));
    }

    #[test]
    fn lck_small_cells() {
        let t = build_lck_table(5, None, &BuildOptions::default()).unwrap();
        assert_eq!(t.value(1, 1), Some(1));
        assert_eq!(t.value(2, 2), Some(0));
        assert_eq!(t.value(4, 3), Some(1));
        assert!(t.get(4, 3).unwrap().starred);
        assert_eq!(t.get(5, 4).unwrap().source, CellSource::Theorem);
        for e in t.entries() {
            e.verify().unwrap();
        }
    }

    #[test]
    fn conjecture_detects_injected_violation() {
        let mut t = lcd_table(6);
        assert!(verify_conjecture(&t).unwrap().is_clean());
        t.get_mut(5, 3).unwrap().value = 3;
        let r = verify_conjecture(&t).unwrap();
        assert_eq!(r.adjacent_violations, vec![(5, 3)]);
        assert_eq!(r.odd_step_violations, vec![(5, 3)]);
    }

    #[test]
    fn conjecture_requires_complete_table() {
        let mut t = lcd_table(3);
        t.cells.remove(&(3, 2));
        assert!(matches!(
            verify_conjecture(&t),
            Err(Error::IncompleteTable(_))
        ));
    }

    #[test]
    fn emit_formats() {
        let empty = Table::new(TableKind::Lcd, 0);
        assert_eq!(
            emit(&empty, TableFormat::Markdown).unwrap(),
            "| n/k |\n|---|\n"
        );
        assert_eq!(emit(&empty, TableFormat::Csv).unwrap(), "n/k\n");

        let t = lcd_table(3);
        assert_eq!(
            emit(&t, TableFormat::Markdown).unwrap(),
            "| n/k | 1 | 2 | 3 |\n|---|---|---|---|\n| 1 | 1 |  |  |\n| 2 | 1 | 1 |  |\n| 3 | 3 | 2 | 1 |\n"
        );
        let lck = build_lck_table(4, None, &BuildOptions::default()).unwrap();
        assert_eq!(
            emit(&lck, TableFormat::Csv).unwrap(),
            "n/d,1,2,3,4\n1,1,,,\n2,2,0,,\n3,3,2,1,\n4,4,2,1*,0\n"
        );
        assert!(matches!(
            "xml".parse::<TableFormat>(),
            Err(Error::UnknownFormat(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let t = build_lck_table(5, None, &BuildOptions::default()).unwrap();
        let text = emit(&t, TableFormat::Json).unwrap();
        let back = Table::from_json_str(&text).unwrap();
        assert_eq!(back, t);
        assert_eq!(emit(&back, TableFormat::Json).unwrap(), text);
    }

    #[test]
    fn cache_pins_first_value_and_verifies() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CellCache::open(dir.path()).unwrap();
        let opts = BuildOptions {
            cache: Some(cache.clone()),
            ..BuildOptions::default()
        };
        let first = build_lcd_table(5, &opts).unwrap();
        let files = fs::read_dir(dir.path()).unwrap().count();
        assert_eq!(files, 15);
        let second = build_lcd_table(5, &opts).unwrap();
        assert_eq!(first, second);

        let mut wrong = first.get(5, 3).unwrap().clone();
        wrong.value = 3;
        assert!(matches!(
            cache.store(&wrong),
            Err(Error::CacheConflict { .. })
        ));

        // Tamper with a stored witness: loading must refuse it.
        let path = dir.path().join("lcd-n4-k2.json");
        let text = fs::read_to_string(&path)
            .unwrap()
            .replace("\"value\": 2", "\"value\": 3");
        fs::write(&path, text).unwrap();
        assert!(matches!(
            cache.load(TableKind::Lcd, 4, 2),
            Err(Error::CacheCorrupt { .. })
        ));
    }

    #[test]
    fn size_guard() {
        assert!(build_lcd_table(13, &BuildOptions::default()).is_err());
        assert!(build_lcd_table(0, &BuildOptions::default()).is_err());
    }
}
