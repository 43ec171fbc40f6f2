//! Adjacency rules evaluated directly on labels, no graph required.
//!
//! Three disjoint families make up the edge set:
//!
//! * [`AdjacencyRule::Block`]: labels agreeing on the first k−1 digits;
//!   every such block of n vertices is a copy of K_n.
//! * [`AdjacencyRule::RootPeripheral`]: `α0…0 ~ αy` where the zero run has
//!   length at least 2 and `y` has no zero digit. The root of each embedded
//!   copy sees every peripheral vertex of that copy.
//! * [`AdjacencyRule::SiblingRoots`]: `αa0…0 ~ αb0…0` with `a ≠ b` both
//!   nonzero; the n−1 nonzero sub-roots under a common prefix form K_{n−1}.

use crate::error::Result;
use crate::label::{check_digits, common_prefix_len, last_nonzero, last_zero, Label};
use crate::params::Params;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AdjacencyRule {
    Block,
    RootPeripheral,
    SiblingRoots,
}

impl AdjacencyRule {
    pub const ALL: [AdjacencyRule; 3] = [
        AdjacencyRule::Block,
        AdjacencyRule::RootPeripheral,
        AdjacencyRule::SiblingRoots,
    ];

    /// Whether this rule alone makes `x` and `y` adjacent. Symmetric.
    pub fn matches(self, x: &[u32], y: &[u32]) -> bool {
        debug_assert_eq!(x.len(), y.len());
        match self {
            AdjacencyRule::Block => block(x, y),
            AdjacencyRule::RootPeripheral => root_peripheral(x, y) || root_peripheral(y, x),
            AdjacencyRule::SiblingRoots => sibling_roots(x, y),
        }
    }
}

fn block(x: &[u32], y: &[u32]) -> bool {
    let k = x.len();
    x[..k - 1] == y[..k - 1] && x[k - 1] != y[k - 1]
}

/// `hub` ends in a zero run starting after position i (k−i ≥ 2), `leaf`
/// shares the first i digits and is nonzero afterwards.
fn root_peripheral(hub: &[u32], leaf: &[u32]) -> bool {
    let k = hub.len();
    if k < 2 {
        return false;
    }
    let lo = last_nonzero(hub).max(last_zero(leaf));
    let hi = common_prefix_len(hub, leaf).min(k - 2);
    lo <= hi
}

fn sibling_roots(x: &[u32], y: &[u32]) -> bool {
    let k = x.len();
    let t = last_nonzero(x);
    t >= 1 && t < k && last_nonzero(y) == t && common_prefix_len(x, y) == t - 1
}

/// Rule-based adjacency on raw digit slices of equal length.
pub fn adjacent_digits(x: &[u32], y: &[u32]) -> bool {
    x != y && AdjacencyRule::ALL.iter().any(|r| r.matches(x, y))
}

pub fn is_adjacent(x: &Label, y: &Label, params: &Params) -> Result<bool> {
    check_digits(x.digits(), params)?;
    check_digits(y.digits(), params)?;
    Ok(adjacent_digits(x.digits(), y.digits()))
}

/// Every neighbor of `x`, produced from the rules and sorted ascending.
pub fn neighbors(x: &Label, params: &Params) -> Result<Vec<Label>> {
    check_digits(x.digits(), params)?;
    let mut out = Vec::new();
    for_each_neighbor(x.digits(), params.n(), |d| out.push(d.to_vec()));
    out.sort_unstable();
    Ok(out.into_iter().map(Label::from_raw).collect())
}

/// Streams the neighbors of `x` in no particular order. The slice passed to
/// `visit` is only valid for the duration of the call.
pub fn for_each_neighbor(x: &[u32], n: u32, mut visit: impl FnMut(&[u32])) {
    let k = x.len();
    let mut buf = x.to_vec();

    for y in (0..n).filter(|&y| y != x[k - 1]) {
        buf[k - 1] = y;
        visit(&buf);
    }
    buf.copy_from_slice(x);

    let t = last_nonzero(x);
    if k >= 2 {
        // x is the hub: prefix of length i followed by ≥ 2 zeros.
        for i in t..=k - 2 {
            buf[i..].fill(1);
            loop {
                visit(&buf);
                if !odometer_nonzero(&mut buf[i..], n) {
                    break;
                }
            }
            buf.copy_from_slice(x);
        }
        // x is a leaf: its nonzero suffix starts at or before i+1.
        if x[k - 1] != 0 {
            for i in last_zero(x)..=k - 2 {
                buf[i..].fill(0);
                visit(&buf);
                buf.copy_from_slice(x);
            }
        }
    }

    if t >= 1 && t < k {
        for y in (1..n).filter(|&y| y != x[t - 1]) {
            buf[t - 1] = y;
            visit(&buf);
        }
    }
}

/// Advances a suffix over digits 1..n−1; false once it wraps around.
fn odometer_nonzero(digits: &mut [u32], n: u32) -> bool {
    for d in digits.iter_mut().rev() {
        if *d + 1 < n {
            *d += 1;
            return true;
        }
        *d = 1;
    }
    false
}
