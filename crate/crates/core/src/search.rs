//! Exact induced Ramsey numbers by sweeping isomorph-free graph catalogs.
//!
//! A catalog is a directory of files `n1.g6`, `n2.g6`, ... each listing one
//! graph6 line per isomorphism class of that order. `IR(G, H)` is the least
//! order holding a graph that strongly arrows `(G, H)`; orders are swept
//! upward and, within an order, graphs by ascending edge count.

use crate::arrowing::{strongly_arrows_with, ArrowingError, SearchOptions, Verdict};
use crate::coloring::{verify_witness, ColoringFile, EdgeColoring};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, Graph6Error};
use log::warn;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fs::{self, File, OpenOptions};
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;
use thiserror::Error;

/// Default largest order swept.
pub const DEFAULT_N_MAX: usize = 7;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("catalog has no file for order {order} (expected {path})")]
    CatalogGap { order: usize, path: PathBuf },
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
    #[error("{path}:{line}: {source}")]
    BadLine { path: PathBuf, line: usize, source: Graph6Error },
    #[error("{path}:{line}: graph has order {found}, file is for order {expected}")]
    OrderMismatch { path: PathBuf, line: usize, expected: usize, found: usize },
    #[error("orders above {DEFAULT_N_MAX} need an explicit override (asked for {0})")]
    OrderTooLarge(usize),
    #[error(transparent)]
    Arrowing(#[from] ArrowingError),
}

/// One catalog line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub graph6: String,
    pub graph: Graph,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    dir: PathBuf,
}

impl Catalog {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Catalog { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn file_for(&self, order: usize) -> PathBuf {
        self.dir.join(format!("n{order}.g6"))
    }

    /// All graphs of one order, in file order. Every line must parse and have
    /// the declared order.
    pub fn load_order(&self, order: usize) -> Result<Vec<CatalogEntry>, SearchError> {
        let path = self.file_for(order);
        if !path.is_file() {
            return Err(SearchError::CatalogGap { order, path });
        }
        let text = fs::read_to_string(&path).map_err(|e| SearchError::Io { path: path.clone(), message: e.to_string() })?;
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                let graph = parse_graph6(l).map_err(|source| SearchError::BadLine { path: path.clone(), line: i + 1, source })?;
                if graph.order() != order {
                    return Err(SearchError::OrderMismatch { path: path.clone(), line: i + 1, expected: order, found: graph.order() });
                }
                Ok(CatalogEntry { graph6: l.trim().to_string(), graph })
            })
            .collect()
    }
}

/// A cached strong-arrowing verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<ColoringFile>,
}

/// Persistent map from `"g6(F)|g6(G)|g6(H)"` to verdicts, stored as JSON.
///
/// Keys are the literal graph6 lines; relabeled copies of a graph miss.
/// Writes go through to disk under an exclusive lock on `<path>.lock`, merging
/// with whatever other processes wrote in the meantime.
#[derive(Debug)]
pub struct ResultCache {
    path: PathBuf,
    entries: Mutex<BTreeMap<String, CacheEntry>>,
}

pub fn cache_key(f: &str, g: &str, h: &str) -> String {
    format!("{f}|{g}|{h}")
}

fn read_cache_file(path: &Path) -> Option<BTreeMap<String, CacheEntry>> {
    let text = fs::read_to_string(path).ok()?;
    match serde_json::from_str(&text) {
        Ok(map) => Some(map),
        Err(e) => {
            warn!("ignoring corrupt cache {}: {e}", path.display());
            None
        }
    }
}

impl ResultCache {
    /// Opens (or starts) the cache at `path`. A file that does not parse is
    /// ignored entirely and replaced on the next write.
    pub fn open(path: impl Into<PathBuf>) -> Self {
        let path = path.into();
        let entries = if path.exists() { read_cache_file(&path).unwrap_or_default() } else { BTreeMap::new() };
        ResultCache { path, entries: Mutex::new(entries) }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.entries.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, key: &str) -> Option<CacheEntry> {
        self.entries.lock().expect("cache lock").get(key).cloned()
    }

    pub fn put(&self, key: String, entry: CacheEntry) -> std::io::Result<()> {
        self.put_many(vec![(key, entry)])
    }

    pub fn put_many(&self, batch: Vec<(String, CacheEntry)>) -> std::io::Result<()> {
        if batch.is_empty() {
            return Ok(());
        }
        let mut entries = self.entries.lock().expect("cache lock");
        let lock_path = self.path.with_extension("json.lock");
        if let Some(parent) = self.path.parent().filter(|p| !p.as_os_str().is_empty()) {
            fs::create_dir_all(parent)?;
        }
        let lock = OpenOptions::new().create(true).truncate(false).write(true).open(&lock_path)?;
        lock.lock()?;
        if let Some(on_disk) = read_cache_file(&self.path) {
            for (k, v) in on_disk {
                entries.entry(k).or_insert(v);
            }
        }
        entries.extend(batch);
        let tmp = self.path.with_extension("json.tmp");
        {
            let mut out = File::create(&tmp)?;
            serde_json::to_writer(&mut out, &*entries)?;
            out.write_all(b"\n")?;
        }
        fs::rename(&tmp, &self.path)?;
        lock.unlock()
    }
}

/// Result of a successful sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrResult {
    pub pair: (String, String),
    pub value: usize,
    /// First graph of order `value` in scan order that arrows the pair.
    pub witness_arrowing_graph: String,
    /// Graphs of order `value - 1`, all shown not to arrow with a verified witness.
    pub nonarrow_witnesses_verified: usize,
    pub checked_orders: Vec<usize>,
}

/// Export format `{"g", "h", "ir", "witness", "checked_orders"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrExport {
    pub g: String,
    pub h: String,
    pub ir: usize,
    pub witness: String,
    pub checked_orders: Vec<usize>,
}

impl IrResult {
    pub fn export(&self) -> IrExport {
        IrExport {
            g: self.pair.0.clone(),
            h: self.pair.1.clone(),
            ir: self.value,
            witness: self.witness_arrowing_graph.clone(),
            checked_orders: self.checked_orders.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum IrOutcome {
    Found(IrResult),
    /// No catalog graph of order at most `n_max` arrows the pair.
    NotFoundBelow { n_max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Refutation {
    /// A graph of order `claimed - 1` already arrows the pair.
    ArrowsBelow { order: usize, graph: String },
    /// No graph of order `claimed` arrows the pair.
    NoneArrowsAt { order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum ValueCheck {
    Confirmed { witness: String },
    Refuted(Refutation),
}

/// Verdict for one catalog graph.
#[derive(Debug, Clone)]
pub struct HostVerdict {
    pub graph6: String,
    pub verdict: Verdict,
    pub witness: Option<EdgeColoring>,
}

/// Sweep configuration shared by [`IrSearch::ir_exact`] and [`IrSearch::verify_value`].
pub struct IrSearch<'a> {
    pub catalog: &'a Catalog,
    pub cache: Option<&'a ResultCache>,
    pub search: SearchOptions,
    /// Permit `n_max` above [`DEFAULT_N_MAX`].
    pub allow_large: bool,
}

impl<'a> IrSearch<'a> {
    pub fn new(catalog: &'a Catalog) -> Self {
        IrSearch { catalog, cache: None, search: SearchOptions::default(), allow_large: false }
    }

    pub fn with_cache(mut self, cache: &'a ResultCache) -> Self {
        self.cache = Some(cache);
        self
    }

    fn decide(&self, f: &CatalogEntry, g: &Graph, h: &Graph, key: &str) -> Result<(HostVerdict, bool), SearchError> {
        if let Some(hit) = self.cache.and_then(|c| c.get(key)) {
            match (hit.verdict, hit.witness) {
                (Verdict::Arrows, None) => {
                    return Ok((HostVerdict { graph6: f.graph6.clone(), verdict: Verdict::Arrows, witness: None }, false));
                }
                (Verdict::NotArrows, Some(file)) => {
                    if let Ok(w) = EdgeColoring::try_from(file) {
                        if verify_witness(&f.graph, &w, g, h).is_ok_and(|c| c.is_valid()) {
                            let hv = HostVerdict { graph6: f.graph6.clone(), verdict: Verdict::NotArrows, witness: Some(w) };
                            return Ok((hv, false));
                        }
                    }
                    warn!("cached witness for {key} does not verify; recomputing");
                }
                _ => warn!("malformed cache entry for {key}; recomputing"),
            }
        }
        let r = strongly_arrows_with(&f.graph, g, h, self.search)?;
        Ok((HostVerdict { graph6: f.graph6.clone(), verdict: r.verdict, witness: r.witness }, true))
    }

    /// Decides every graph of one order, in scan order (ascending edge count,
    /// then file order).
    pub fn sweep_order(&self, order: usize, g: &Graph, h: &Graph) -> Result<Vec<HostVerdict>, SearchError> {
        let mut entries = self.catalog.load_order(order)?;
        entries.sort_by_key(|e| e.graph.size());
        let (g6, h6) = (g.to_graph6(), h.to_graph6());
        let run = |e: &CatalogEntry| self.decide(e, g, h, &cache_key(&e.graph6, &g6, &h6));
        let decided: Vec<(HostVerdict, bool)> = if self.search.parallel {
            entries.par_iter().map(run).collect::<Result<_, _>>()?
        } else {
            entries.iter().map(run).collect::<Result<_, _>>()?
        };
        if let Some(cache) = self.cache {
            let fresh = decided
                .iter()
                .filter(|(_, fresh)| *fresh)
                .map(|(v, _)| {
                    let entry = CacheEntry { verdict: v.verdict, witness: v.witness.as_ref().map(EdgeColoring::to_file) };
                    (cache_key(&v.graph6, &g6, &h6), entry)
                })
                .collect();
            if let Err(e) = cache.put_many(fresh) {
                warn!("could not write cache {}: {e}", cache.path().display());
            }
        }
        Ok(decided.into_iter().map(|(v, _)| v).collect())
    }

    /// `IR(g, h)` if some catalog graph of order at most `n_max` arrows the pair.
    pub fn ir_exact(&self, g: &Graph, h: &Graph, n_max: usize) -> Result<IrOutcome, SearchError> {
        if n_max > DEFAULT_N_MAX && !self.allow_large {
            return Err(SearchError::OrderTooLarge(n_max));
        }
        if g.size() == 0 {
            return Err(ArrowingError::EdgelessPattern("red").into());
        }
        if h.size() == 0 {
            return Err(ArrowingError::EdgelessPattern("blue").into());
        }
        let mut previous_nonarrowing = 0;
        let mut checked = Vec::new();
        for order in 1..=n_max {
            let verdicts = self.sweep_order(order, g, h)?;
            checked.push(order);
            if let Some(hit) = verdicts.iter().find(|v| v.verdict == Verdict::Arrows) {
                return Ok(IrOutcome::Found(IrResult {
                    pair: (g.to_graph6(), h.to_graph6()),
                    value: order,
                    witness_arrowing_graph: hit.graph6.clone(),
                    nonarrow_witnesses_verified: previous_nonarrowing,
                    checked_orders: checked,
                }));
            }
            previous_nonarrowing = verdicts.len();
        }
        Ok(IrOutcome::NotFoundBelow { n_max })
    }

    /// Checks `IR(g, h) = claimed`: some graph of order `claimed` arrows and
    /// none of order `claimed - 1` does. Padding an arrowing graph with an
    /// isolated vertex keeps it arrowing, so smaller orders need no sweep.
    pub fn verify_value(&self, g: &Graph, h: &Graph, claimed: usize) -> Result<ValueCheck, SearchError> {
        if claimed >= 2 {
            let below = self.sweep_order(claimed - 1, g, h)?;
            if let Some(hit) = below.iter().find(|v| v.verdict == Verdict::Arrows) {
                return Ok(ValueCheck::Refuted(Refutation::ArrowsBelow { order: claimed - 1, graph: hit.graph6.clone() }));
            }
        }
        if claimed == 0 {
            return Ok(ValueCheck::Refuted(Refutation::NoneArrowsAt { order: 0 }));
        }
        let at = self.sweep_order(claimed, g, h)?;
        Ok(match at.iter().find(|v| v.verdict == Verdict::Arrows) {
            Some(hit) => ValueCheck::Confirmed { witness: hit.graph6.clone() },
            None => ValueCheck::Refuted(Refutation::NoneArrowsAt { order: claimed }),
        })
    }
}

/// [`IrSearch::ir_exact`] with default options and no cache.
pub fn ir_exact(g: &Graph, h: &Graph, catalog: &Catalog, n_max: usize) -> Result<IrOutcome, SearchError> {
    IrSearch::new(catalog).ir_exact(g, h, n_max)
}

/// [`IrSearch::verify_value`] with default options and no cache.
pub fn ir_verify_value(g: &Graph, h: &Graph, claimed: usize, catalog: &Catalog) -> Result<ValueCheck, SearchError> {
    IrSearch::new(catalog).verify_value(g, h, claimed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, matching};

    fn write_catalog(dir: &Path, files: &[(usize, &str)]) {
        for (order, body) in files {
            fs::write(dir.join(format!("n{order}.g6")), body).unwrap();
        }
    }

    #[test]
    fn gap_is_an_error() {
        let dir = tempfile::tempdir().unwrap();
        write_catalog(dir.path(), &[(1, "@\n")]);
        let err = ir_exact(&complete(2), &complete(2), &Catalog::new(dir.path()), 3).unwrap_err();
        assert!(matches!(err, SearchError::CatalogGap { order: 2, .. }), "{err}");
    }

    #[test]
    fn bad_lines_are_reported() {
        let dir = tempfile::tempdir().unwrap();
        write_catalog(dir.path(), &[(2, "A?\nA_x\n"), (3, "A_\n")]);
        let cat = Catalog::new(dir.path());
        assert!(matches!(cat.load_order(2), Err(SearchError::BadLine { line: 2, .. })));
        assert!(matches!(cat.load_order(3), Err(SearchError::OrderMismatch { line: 1, found: 2, .. })));
    }

    #[test]
    fn tiny_sweep() {
        let dir = tempfile::tempdir().unwrap();
        write_catalog(dir.path(), &[(1, "@\n"), (2, "A?\nA_\n")]);
        let out = ir_exact(&complete(2), &complete(2), &Catalog::new(dir.path()), 2).unwrap();
        let IrOutcome::Found(r) = out else { panic!("{out:?}") };
        assert_eq!((r.value, r.witness_arrowing_graph.as_str()), (2, "A_"));
        assert_eq!(r.nonarrow_witnesses_verified, 1);
        assert_eq!(r.checked_orders, vec![1, 2]);
        let out = ir_exact(&matching(2), &complete(2), &Catalog::new(dir.path()), 2).unwrap();
        assert_eq!(out, IrOutcome::NotFoundBelow { n_max: 2 });
    }

    #[test]
    fn large_orders_need_override() {
        let cat = Catalog::new("/nonexistent");
        assert!(matches!(ir_exact(&complete(2), &complete(2), &cat, 8), Err(SearchError::OrderTooLarge(8))));
    }

    #[test]
    fn cache_round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("ir-cache.json");
        let cache = ResultCache::open(&path);
        assert!(cache.get("A_|A_|A_").is_none());
        let entry = CacheEntry { verdict: Verdict::Arrows, witness: None };
        cache.put("A_|A_|A_".into(), entry.clone()).unwrap();
        assert_eq!(cache.get("A_|A_|A_"), Some(entry.clone()));
        assert_eq!(ResultCache::open(&path).get("A_|A_|A_"), Some(entry));

        fs::write(&path, "{ not json").unwrap();
        let reopened = ResultCache::open(&path);
        assert!(reopened.is_empty());
        reopened.put("x".into(), CacheEntry { verdict: Verdict::NotArrows, witness: None }).unwrap();
        assert_eq!(ResultCache::open(&path).len(), 1);
    }

    #[test]
    fn export_shape() {
        let r = IrResult {
            pair: ("A_".into(), "A_".into()),
            value: 2,
            witness_arrowing_graph: "A_".into(),
            nonarrow_witnesses_verified: 1,
            checked_orders: vec![1, 2],
        };
        assert_eq!(
            serde_json::to_string(&r.export()).unwrap(),
            r#"{"g":"A_","h":"A_","ir":2,"witness":"A_","checked_orders":[1,2]}"#
        );
    }
}
