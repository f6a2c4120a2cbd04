use anyhow::{bail, Context};

use dsf_core::{normalize, parse_terms, DegreeSequence};

/// A sequence as typed by the user. Zero terms are kept aside because the
/// core types only hold positive degrees.
pub struct RawSequence {
    pub nonzero: DegreeSequence,
    pub zeros: usize,
}

impl RawSequence {
    pub fn parse(words: &[String]) -> anyhow::Result<Self> {
        let raw = parse_terms(&words.join(" ")).context("could not parse the sequence")?;
        if let Some(&v) = raw.iter().find(|&&v| v < 0) {
            bail!(dsf_core::Error::NonPositiveTerm(v));
        }
        let zeros = raw.iter().filter(|&&v| v == 0).count();
        let positive: Vec<i64> = raw.into_iter().filter(|&v| v > 0).collect();
        let nonzero =
            if positive.is_empty() { DegreeSequence::empty() } else { normalize(&positive)? };
        Ok(Self { nonzero, zeros })
    }

    pub fn len(&self) -> usize {
        self.nonzero.len() + self.zeros
    }

    /// Display form with zeros restored at the end.
    pub fn render(&self) -> String {
        let mut parts: Vec<String> = self.nonzero.terms().iter().map(u32::to_string).collect();
        parts.extend(std::iter::repeat_n("0".to_string(), self.zeros));
        parts.join(" ")
    }
}

/// `a`, `a..b` or `a..=b`, both ends included, every `step`-th value.
pub fn parse_range(text: &str, step: u32) -> anyhow::Result<Vec<u32>> {
    if step == 0 {
        bail!(dsf_core::Error::InvalidParameter("step must be positive".into()));
    }
    let num = |s: &str| -> anyhow::Result<u32> {
        s.trim()
            .parse::<u32>()
            .map_err(|_| dsf_core::Error::Parse(format!("bad range bound {s:?}")).into())
    };
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(text)?;
            (v, v)
        }
    };
    if lo > hi {
        bail!(dsf_core::Error::InvalidParameter(format!("empty range {text}")));
    }
    Ok((lo..=hi).step_by(step as usize).collect())
}
