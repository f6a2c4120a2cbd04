use std::ops::ControlFlow;

use anyhow::Result;

use dsf_core::oracle::{self, is_biconnected, is_connected, Mode, Property, Realization};

use crate::input::RawSequence;

pub fn run(
    words: &[String],
    property: Property,
    mode: Mode,
    bound: usize,
    edges: bool,
) -> Result<()> {
    let raw = RawSequence::parse(words)?;
    if raw.len() > bound {
        return Err(dsf_core::Error::OracleBoundExceeded { n: raw.len(), bound }.into());
    }
    if raw.zeros > 0 || raw.nonzero.is_empty() {
        let graphical = raw.nonzero.is_empty() || dsf_core::is_graphical(&raw.nonzero);
        if !graphical {
            return Err(dsf_core::Error::NotGraphical.into());
        }
        // a single isolated vertex is trivially connected
        let holds = raw.len() == 1 && property == Property::Connected;
        println!("{holds}");
        return Ok(());
    }

    let d = &raw.nonzero;
    let verdict = oracle::oracle_verdict_bounded(d, property, mode, bound)?;
    println!("{verdict}");
    if edges {
        // a realization showing the verdict: one lacking the property when a
        // forcible claim fails, one having it when a potential claim holds,
        // otherwise any realization
        let wanted = match (mode, verdict) {
            (Mode::Forcibly, false) => Some(false),
            (Mode::Potentially, true) => Some(true),
            _ => None,
        };
        let mut found: Option<Realization> = None;
        oracle::for_each_realization(d, bound, |g| {
            let has = match property {
                Property::Connected => is_connected(g),
                Property::Biconnected => is_biconnected(g),
            };
            if wanted.is_none_or(|w| w == has) {
                found = Some(g.clone());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
        if let Some(g) = found {
            print!("{}", g.edge_list());
        }
    }
    Ok(())
}
