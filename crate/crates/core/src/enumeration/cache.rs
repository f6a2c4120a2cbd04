//! On-disk store of finished count tables, one file per table.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use super::{count_filtered_with, CountTable, Filter, Itemize, Mode};
use crate::error::{Error, Result};
use crate::exec::Exec;

/// Bumped whenever a change could alter stored counts.
pub const CACHE_VERSION: u32 = 1;

#[derive(Clone, Debug)]
pub struct ResultsCache {
    dir: PathBuf,
}

impl ResultsCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, mode: Mode, filter: Filter, itemize: Itemize, param: u32) -> PathBuf {
        self.dir.join(format!("{mode}-{filter}-{itemize}-{param}-v{CACHE_VERSION}.tsv"))
    }

    pub fn load(
        &self,
        mode: Mode,
        filter: Filter,
        itemize: Itemize,
        param: u32,
    ) -> Result<Option<CountTable>> {
        let path = self.path_for(mode, filter, itemize, param);
        let text = match fs::read_to_string(&path) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
            Err(e) => return Err(Error::Cache(format!("{}: {e}", path.display()))),
        };
        let bad = |what: &str| Error::Cache(format!("{}: {what}", path.display()));
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| bad("empty file"))?;
        let expected = format!("# {mode} {filter} {param}");
        if header.trim() != expected {
            return Err(bad("header does not match"));
        }
        let mut counts = BTreeMap::new();
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let (k, v) = line.split_once('\t').ok_or_else(|| bad("missing tab"))?;
            let k: u32 = k.trim().parse().map_err(|_| bad("bad key"))?;
            let v: u64 = v.trim().parse().map_err(|_| bad("bad count"))?;
            counts.insert(k, v);
        }
        Ok(Some(CountTable { mode, kind: itemize, filter, fixed_parameter: param, counts }))
    }

    /// Writes through a temporary file so readers never see a partial table.
    pub fn store(&self, table: &CountTable) -> Result<PathBuf> {
        let io = |e: std::io::Error| Error::Cache(e.to_string());
        fs::create_dir_all(&self.dir).map_err(io)?;
        let path = self.path_for(table.mode, table.filter, table.kind, table.fixed_parameter);
        let tmp = path.with_extension(format!("tmp{}", std::process::id()));
        {
            let mut f = fs::File::create(&tmp).map_err(io)?;
            writeln!(f, "# {} {} {}", table.mode, table.filter, table.fixed_parameter)
                .map_err(io)?;
            for (k, v) in &table.counts {
                writeln!(f, "{k}\t{v}").map_err(io)?;
            }
            f.sync_all().map_err(io)?;
        }
        fs::rename(&tmp, &path).map_err(io)?;
        Ok(path)
    }

    /// Cached table if present, otherwise computed and stored.
    pub fn get_or_compute(
        &self,
        param: u32,
        mode: Mode,
        filter: Filter,
        itemize: Itemize,
        exec: Exec,
    ) -> Result<CountTable> {
        if let Some(table) = self.load(mode, filter, itemize, param)? {
            return Ok(table);
        }
        let table = count_filtered_with(param, mode, filter, itemize, exec)?;
        self.store(&table)?;
        Ok(table)
    }
}
