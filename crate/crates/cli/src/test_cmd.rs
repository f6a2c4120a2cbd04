use std::time::Duration;

use anyhow::Result;
use serde_json::{json, Value};

use dsf_core::oracle::{self, Mode, Property};
use dsf_core::{
    is_graphical, potentially_biconnected, potentially_connected, BiconnectedVerdict,
    ConnectedVerdict, CutWitness, SplitWitness, Tester,
};

use crate::input::RawSequence;
use crate::{Format, InvariantViolation};

pub struct TestOptions {
    pub witness: bool,
    pub basic: bool,
    pub oracle: bool,
    pub parallel: bool,
    pub budget: Option<f64>,
    pub bound: usize,
    pub format: Format,
}

#[derive(Default)]
struct Verdicts {
    graphical: bool,
    potentially_connected: bool,
    potentially_biconnected: bool,
    forcibly_connected: bool,
    forcibly_biconnected: bool,
    split: Option<SplitWitness>,
    cut: Option<CutWitness>,
}

fn decide(raw: &RawSequence, opts: &TestOptions) -> Result<Verdicts> {
    let d = &raw.nonzero;
    if d.is_empty() {
        // only isolated vertices
        let single = raw.len() == 1;
        return Ok(Verdicts {
            graphical: true,
            potentially_connected: single,
            forcibly_connected: single,
            ..Verdicts::default()
        });
    }
    let graphical = is_graphical(d);
    if raw.zeros > 0 || !graphical {
        return Ok(Verdicts { graphical, ..Verdicts::default() });
    }

    let mut tester = Tester::new().parallel(opts.parallel);
    if let Some(secs) = opts.budget {
        tester = tester.with_budget(Duration::from_secs_f64(secs));
    }
    let mut v = Verdicts {
        graphical,
        potentially_connected: potentially_connected(d),
        potentially_biconnected: potentially_biconnected(d),
        ..Verdicts::default()
    };
    match tester.forcibly_connected(d)? {
        ConnectedVerdict::Forcibly => v.forcibly_connected = true,
        ConnectedVerdict::Split(w) => v.split = Some(w),
    }
    if opts.basic {
        v.forcibly_biconnected = tester.forcibly_biconnected_basic(d)?;
    } else {
        match tester.forcibly_biconnected(d)? {
            BiconnectedVerdict::Forcibly => v.forcibly_biconnected = true,
            BiconnectedVerdict::Cut(w) => v.cut = Some(w),
            BiconnectedVerdict::NotPotentiallyBiconnected
            | BiconnectedVerdict::NotForciblyConnected(_) => {}
        }
    }
    Ok(v)
}

const CHECKS: [(&str, Property, Mode); 4] = [
    ("potentially_connected", Property::Connected, Mode::Potentially),
    ("potentially_biconnected", Property::Biconnected, Mode::Potentially),
    ("forcibly_connected", Property::Connected, Mode::Forcibly),
    ("forcibly_biconnected", Property::Biconnected, Mode::Forcibly),
];

/// Brute-force answers for the four properties, or `None` when the oracle
/// does not apply (zero terms or a non-graphical input).
fn cross_check(raw: &RawSequence, v: &Verdicts, bound: usize) -> Result<Option<Vec<bool>>> {
    if raw.len() > bound {
        return Err(dsf_core::Error::OracleBoundExceeded { n: raw.len(), bound }.into());
    }
    if raw.zeros > 0 || !v.graphical || raw.nonzero.is_empty() {
        return Ok(None);
    }
    let mine = [
        v.potentially_connected,
        v.potentially_biconnected,
        v.forcibly_connected,
        v.forcibly_biconnected,
    ];
    let mut got = Vec::new();
    for ((name, property, mode), expect) in CHECKS.iter().zip(mine) {
        let answer = oracle::oracle_verdict_bounded(&raw.nonzero, *property, *mode, bound)?;
        if answer != expect {
            return Err(InvariantViolation(format!(
                "{name}: decision procedure says {expect}, brute force says {answer}"
            ))
            .into());
        }
        got.push(answer);
    }
    Ok(Some(got))
}

fn seq_text(terms: &[u32]) -> String {
    terms.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

pub fn run(words: &[String], opts: &TestOptions) -> Result<()> {
    let raw = RawSequence::parse(words)?;
    let v = decide(&raw, opts)?;
    let oracle = if opts.oracle { Some(cross_check(&raw, &v, opts.bound)?) } else { None };

    match opts.format {
        Format::Text => {
            println!("sequence: {}", raw.render());
            println!("graphical: {}", v.graphical);
            println!("potentially_connected: {}", v.potentially_connected);
            println!("potentially_biconnected: {}", v.potentially_biconnected);
            println!("forcibly_connected: {}", v.forcibly_connected);
            println!("forcibly_biconnected: {}", v.forcibly_biconnected);
            if opts.witness {
                if let Some(w) = &v.split {
                    println!("split_witness: side_a={} side_b={}", w.side_a, w.side_b);
                }
                if let Some(w) = &v.cut {
                    println!(
                        "cut_witness: cut_degree={} d_low={} d_high={} s={} s_low={} seq_low={} seq_high={}",
                        w.cut_degree,
                        w.d_low,
                        w.d_high,
                        w.s,
                        seq_text(&w.s_low),
                        w.seq_low,
                        w.seq_high
                    );
                }
            }
            match oracle {
                Some(Some(_)) => println!("oracle: agrees"),
                Some(None) => println!("oracle: not applicable"),
                None => {}
            }
        }
        Format::Json => {
            let mut out = json!({
                "sequence": seq_text(&raw.nonzero.terms().iter().copied()
                    .chain(std::iter::repeat_n(0, raw.zeros)).collect::<Vec<_>>()),
                "graphical": v.graphical,
                "potentially_connected": v.potentially_connected,
                "potentially_biconnected": v.potentially_biconnected,
                "forcibly_connected": v.forcibly_connected,
                "forcibly_biconnected": v.forcibly_biconnected,
            });
            if opts.witness {
                out["split_witness"] = serde_json::to_value(&v.split)?;
                out["cut_witness"] = serde_json::to_value(&v.cut)?;
            }
            if let Some(o) = oracle {
                out["oracle"] = match o {
                    Some(_) => Value::from("agrees"),
                    None => Value::from("not applicable"),
                };
            }
            println!("{}", serde_json::to_string_pretty(&out)?);
        }
    }
    Ok(())
}
