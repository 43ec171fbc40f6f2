use serde::Serialize;

use crate::error::{HkError, Result};
use crate::label::{check_digits, last_nonzero, last_zero, Label};
use crate::params::Params;

/// Role of a vertex in the hierarchy.
///
/// Every label ending in 0 is the root of some embedded copy, every label
/// ending in a nonzero digit is peripheral to some copy. The level `i` is the
/// length of the prefix naming that copy, which has n^(k−i) vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "class", content = "level", rename_all = "snake_case")]
pub enum VertexClass {
    GlobalRoot,
    SubRoot(u32),
    GlobalPeripheral,
    SubPeripheral(u32),
}

impl VertexClass {
    pub fn is_root(&self) -> bool {
        matches!(self, VertexClass::GlobalRoot | VertexClass::SubRoot(_))
    }

    pub fn level(&self) -> u32 {
        match *self {
            VertexClass::GlobalRoot | VertexClass::GlobalPeripheral => 0,
            VertexClass::SubRoot(i) | VertexClass::SubPeripheral(i) => i,
        }
    }

    /// All classes that occur for depth k, in census order: global root,
    /// sub-roots by level, global peripheral, sub-peripherals by level.
    pub fn all(k: u32) -> Vec<VertexClass> {
        let mut v = vec![VertexClass::GlobalRoot];
        v.extend((1..k).map(VertexClass::SubRoot));
        v.push(VertexClass::GlobalPeripheral);
        v.extend((1..k).map(VertexClass::SubPeripheral));
        v
    }

    pub fn name(&self) -> String {
        match *self {
            VertexClass::GlobalRoot => "global root".into(),
            VertexClass::SubRoot(i) => format!("sub-root (level {i})"),
            VertexClass::GlobalPeripheral => "global peripheral".into(),
            VertexClass::SubPeripheral(i) => format!("sub-peripheral (level {i})"),
        }
    }
}

pub(crate) fn classify_digits(x: &[u32]) -> VertexClass {
    let k = x.len();
    if x[k - 1] == 0 {
        match last_nonzero(x) {
            0 => VertexClass::GlobalRoot,
            i => VertexClass::SubRoot(i as u32),
        }
    } else {
        // The maximal all-nonzero suffix starts right after the last zero.
        match last_zero(x) {
            0 => VertexClass::GlobalPeripheral,
            i => VertexClass::SubPeripheral(i as u32),
        }
    }
}

pub fn classify(x: &Label, params: &Params) -> Result<VertexClass> {
    check_digits(x.digits(), params)?;
    Ok(classify_digits(x.digits()))
}

/// The n^(k−i) labels extending a prefix of length i, ascending.
pub fn subgraph_vertices(prefix: &[u32], params: &Params) -> Result<Vec<Label>> {
    let (n, k) = (params.n(), params.k());
    if prefix.is_empty() || prefix.len() >= k as usize {
        return Err(HkError::PrefixLength {
            len: prefix.len(),
            max: k - 1,
        });
    }
    if let Some(&digit) = prefix.iter().find(|&&d| d >= n) {
        return Err(HkError::DigitOutOfRange { digit, n });
    }
    let rest = k as usize - prefix.len();
    let count = u64::from(n)
        .checked_pow(rest as u32)
        .ok_or(HkError::Overflow)?;
    let inner = Params::new(n, rest as u32)?;
    (0..count)
        .map(|j| {
            let mut digits = prefix.to_vec();
            digits.extend(Label::from_id(j, &inner)?.into_digits());
            Ok(Label::from_raw(digits))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn class_of(s: &str, p: &Params) -> VertexClass {
        classify(&Label::parse(s, p).unwrap(), p).unwrap()
    }

    #[test]
    fn classify_examples() {
        let p = Params::new(3, 3).unwrap();
        assert_eq!(class_of("000", &p), VertexClass::GlobalRoot);
        assert_eq!(class_of("120", &p), VertexClass::SubRoot(2));
        assert_eq!(class_of("100", &p), VertexClass::SubRoot(1));
        assert_eq!(class_of("111", &p), VertexClass::GlobalPeripheral);
        assert_eq!(class_of("102", &p), VertexClass::SubPeripheral(2));
    }

    #[test]
    fn census_h33() {
        // 1 root, 2·3^{i−1} sub-roots, 8 peripherals, 2^{3−i}·3^{i−1} sub-peripherals
        let p = Params::new(3, 3).unwrap();
        let mut counts = BTreeMap::new();
        for id in 0..27 {
            let c = classify(&Label::from_id(id, &p).unwrap(), &p).unwrap();
            *counts.entry(c).or_insert(0u32) += 1;
        }
        let expected = BTreeMap::from([
            (VertexClass::GlobalRoot, 1),
            (VertexClass::SubRoot(1), 2),
            (VertexClass::SubRoot(2), 6),
            (VertexClass::GlobalPeripheral, 8),
            (VertexClass::SubPeripheral(1), 4),
            (VertexClass::SubPeripheral(2), 6),
        ]);
        assert_eq!(counts, expected);
    }

    #[test]
    fn subgraph_examples() {
        let p = Params::new(3, 2).unwrap();
        let v: Vec<String> = subgraph_vertices(&[1], &p).unwrap().iter().map(|l| l.render(3)).collect();
        assert_eq!(v, ["10", "11", "12"]);
        let p = Params::new(4, 3).unwrap();
        let v = subgraph_vertices(&[2, 3], &p).unwrap();
        assert_eq!(v.len(), 4);
        assert!(v.iter().all(|l| l.digits()[..2] == [2, 3]));
        assert!(subgraph_vertices(&[], &p).is_err());
        assert!(subgraph_vertices(&[1, 2, 3], &p).is_err());
        assert!(subgraph_vertices(&[4], &p).is_err());
    }
}
