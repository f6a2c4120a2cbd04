use serde::{Deserialize, Serialize};

use super::{for_each_member, Classify, Mode};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtremalKind {
    MinLargestTermSequences,
    MinLargestTermPartitions,
}

/// Smallest largest term over forcibly connected and over forcibly
/// biconnected members of one size.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub kind: ExtremalKind,
    pub parameter: u32,
    pub value_forcibly_connected: u32,
    pub value_forcibly_biconnected: u32,
}

/// Walks largest terms upward, enumerating only members whose largest term
/// is exactly the current value, and stops once both minima are known.
pub fn extremal_largest_term(param: u32, mode: Mode) -> Result<ExtremalReport> {
    super::validate(mode, param)?;
    let (kind, top) = match mode {
        Mode::Sequences => (ExtremalKind::MinLargestTermSequences, param.saturating_sub(1)),
        Mode::Partitions => (ExtremalKind::MinLargestTermPartitions, param / 2),
    };
    let mut connected = None;
    let mut biconnected = None;
    for largest in 1..=top {
        for_each_member(mode, param, largest, |d| {
            let mut c = Classify::new(d);
            if connected.is_none() && c.forcibly_connected() {
                connected = Some(largest);
            }
            if biconnected.is_none() && c.forcibly_biconnected() {
                biconnected = Some(largest);
            }
            connected.is_none() || biconnected.is_none()
        })?;
        if let (Some(fc), Some(fb)) = (connected, biconnected) {
            return Ok(ExtremalReport {
                kind,
                parameter: param,
                value_forcibly_connected: fc,
                value_forcibly_biconnected: fb,
            });
        }
    }
    Err(Error::NoMember(param))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sequences() {
        let r = extremal_largest_term(4, Mode::Sequences).unwrap();
        assert_eq!((r.value_forcibly_connected, r.value_forcibly_biconnected), (2, 2));
        let r = extremal_largest_term(10, Mode::Sequences).unwrap();
        assert_eq!((r.value_forcibly_connected, r.value_forcibly_biconnected), (4, 4));
    }

    #[test]
    fn partitions_of_thirty() {
        let r = extremal_largest_term(30, Mode::Partitions).unwrap();
        assert_eq!(r.kind, ExtremalKind::MinLargestTermPartitions);
        assert_eq!((r.value_forcibly_connected, r.value_forcibly_biconnected), (4, 4));
    }

    #[test]
    fn too_small_has_no_member() {
        // (1,1) is forcibly connected but nothing of length 2 is biconnected
        assert_eq!(extremal_largest_term(2, Mode::Sequences), Err(Error::NoMember(2)));
        assert_eq!(extremal_largest_term(4, Mode::Partitions), Err(Error::NoMember(4)));
    }
}
