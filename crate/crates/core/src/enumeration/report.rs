use serde::{Deserialize, Serialize};

use super::{count_tables, Filter, Itemize, Mode};
use crate::error::Result;
use crate::exec::Exec;

/// True when the nonzero values rise weakly to one peak and then fall
/// weakly.
pub fn check_unimodal(values: &[u64]) -> bool {
    let mut falling = false;
    let mut prev: Option<u64> = None;
    for &v in values.iter().filter(|&&v| v != 0) {
        if let Some(p) = prev {
            if v < p {
                falling = true;
            } else if v > p && falling {
                return false;
            }
        }
        prev = Some(v);
    }
    true
}

/// Counts for one size. For partitions `all` is the number of graphical
/// partitions and `fb_over_all` compares against it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatioRow {
    pub parameter: u32,
    pub forcibly_biconnected: u64,
    pub forcibly_connected: u64,
    pub all: u64,
    pub fb_over_fc: f64,
    pub fb_over_all: f64,
}

impl RatioRow {
    pub fn render(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{:.6}\t{:.6}",
            self.parameter,
            self.forcibly_biconnected,
            self.forcibly_connected,
            self.all,
            self.fb_over_fc,
            self.fb_over_all
        )
    }
}

fn ratio(a: u64, b: u64) -> f64 {
    if b == 0 {
        0.0
    } else {
        a as f64 / b as f64
    }
}

pub fn ratio_report(params: &[u32], mode: Mode, exec: Exec) -> Result<Vec<RatioRow>> {
    let filters = [Filter::ForciblyBiconnected, Filter::ForciblyConnected, Filter::AllZeroFree];
    params
        .iter()
        .map(|&p| {
            let t = count_tables(p, mode, &filters, Itemize::Totals, exec)?;
            let (fb, fc, all) = (t[0].total(), t[1].total(), t[2].total());
            Ok(RatioRow {
                parameter: p,
                forcibly_biconnected: fb,
                forcibly_connected: fc,
                all,
                fb_over_fc: ratio(fb, fc),
                fb_over_all: ratio(fb, all),
            })
        })
        .collect()
}
