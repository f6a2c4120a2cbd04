//! `enumerate`, `extremal` and `ratios`.

use std::io::Write;
use std::path::PathBuf;

use anyhow::Result;
use serde_json::{json, Map, Value};

use dsf_core::enumeration::{Mode, ResultsCache};
use dsf_core::{
    count_filtered_with, extremal_largest_term, ratio_report, CountTable, Exec, Filter, Itemize,
};

use crate::TableFormat;

fn key_label(table: &CountTable, key: u32) -> String {
    if table.kind == Itemize::Totals {
        "total".to_string()
    } else {
        key.to_string()
    }
}

pub fn render_table(table: &CountTable, format: TableFormat, out: &mut dyn Write) -> Result<()> {
    match format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["key", "count"])?;
            for (&k, &v) in &table.counts {
                w.write_record([key_label(table, k), v.to_string()])?;
            }
            w.flush()?;
        }
        TableFormat::Json => {
            let counts: Map<String, Value> =
                table.counts.iter().map(|(&k, &v)| (key_label(table, k), Value::from(v))).collect();
            let doc = json!({
                "mode": table.mode.as_str(),
                "filter": table.filter.as_str(),
                "itemize": table.kind.as_str(),
                "parameter": table.fixed_parameter,
                "counts": counts,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
    }
    Ok(())
}

pub fn exec_for(workers: Option<usize>) -> Exec {
    match workers {
        Some(k) => Exec::workers(k),
        None => Exec::default(),
    }
}

pub struct EnumerateOptions {
    pub filter: Filter,
    pub itemize: Itemize,
    pub format: TableFormat,
    pub workers: Option<usize>,
    pub cache: Option<PathBuf>,
}

pub fn enumerate(mode: Mode, param: u32, opts: &EnumerateOptions) -> Result<()> {
    let exec = exec_for(opts.workers);
    let table = match &opts.cache {
        Some(dir) => {
            ResultsCache::new(dir).get_or_compute(param, mode, opts.filter, opts.itemize, exec)?
        }
        None => count_filtered_with(param, mode, opts.filter, opts.itemize, exec)?,
    };
    let stdout = std::io::stdout();
    render_table(&table, opts.format, &mut stdout.lock())
}

pub fn extremal(mode: Mode, params: &[u32], format: TableFormat) -> Result<()> {
    let reports = params
        .iter()
        .map(|&p| extremal_largest_term(p, mode))
        .collect::<dsf_core::Result<Vec<_>>>()?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record(["parameter", "forcibly_connected", "forcibly_biconnected"])?;
            for r in &reports {
                w.write_record([
                    r.parameter.to_string(),
                    r.value_forcibly_connected.to_string(),
                    r.value_forcibly_biconnected.to_string(),
                ])?;
            }
            w.flush()?;
        }
        TableFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&reports)?)?,
    }
    Ok(())
}

pub fn ratios(
    mode: Mode,
    params: &[u32],
    format: TableFormat,
    workers: Option<usize>,
) -> Result<()> {
    let rows = ratio_report(params, mode, exec_for(workers))?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match format {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record([
                "parameter",
                "forcibly_biconnected",
                "forcibly_connected",
                "all",
                "fb_over_fc",
                "fb_over_all",
            ])?;
            for r in &rows {
                w.write_record(r.render().split('\t'))?;
            }
            w.flush()?;
        }
        TableFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?,
    }
    Ok(())
}
