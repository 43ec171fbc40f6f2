//! Exact distances from labels alone, in O(k).
//!
//! Two vertices in different top-level copies can only meet through the
//! global root (copy 0 is attached to the rest solely through it, and it sees
//! every peripheral vertex) or through the clique on the nonzero copy roots.
//! Vertices in the same copy are as far apart as in that copy. So after
//! stripping the common prefix, one combination of root/periphery distances
//! inside the two copies gives the answer.

use crate::error::Result;
use crate::label::{check_digits, common_prefix_len, Label};
use crate::params::Params;

/// Distances from a vertex of H(n,m), given by its m digits, to that graph's
/// root 0…0 and to its peripheral set (labels without a zero digit).
///
/// Folded from the last digit outward: prepending 0 keeps the root distance
/// and reaches the periphery through the root; prepending a nonzero digit
/// keeps the periphery distance and reaches the root through the periphery.
pub fn root_and_periphery(suffix: &[u32]) -> (u32, u32) {
    suffix.iter().rev().fold((0, 0), |(to_root, to_periphery), &d| {
        if d == 0 {
            (to_root, to_root + 1)
        } else {
            (to_periphery + 1, to_periphery)
        }
    })
}

pub fn dist_to_root(suffix: &[u32]) -> u32 {
    root_and_periphery(suffix).0
}

pub fn dist_to_periphery(suffix: &[u32]) -> u32 {
    root_and_periphery(suffix).1
}

/// Shortest-path distance between two digit sequences of equal length.
pub fn distance_digits(x: &[u32], y: &[u32]) -> u32 {
    debug_assert_eq!(x.len(), y.len());
    let i = common_prefix_len(x, y);
    if i == x.len() {
        return 0;
    }
    let (a, b) = (x[i], y[i]);
    let (xr, xp) = root_and_periphery(&x[i + 1..]);
    let (yr, yp) = root_and_periphery(&y[i + 1..]);
    match (a, b) {
        (0, _) => xr + 1 + yp,
        (_, 0) => xp + 1 + yr,
        _ => (xp + 2 + yp).min(xr + 1 + yr),
    }
}

pub fn distance(x: &Label, y: &Label, params: &Params) -> Result<u32> {
    check_digits(x.digits(), params)?;
    check_digits(y.digits(), params)?;
    Ok(distance_digits(x.digits(), y.digits()))
}

/// The alternating labels 0101… and 1010…, at distance 2k − 1.
pub fn diametral_pair(params: &Params) -> (Label, Label) {
    let k = params.k() as usize;
    let z01: Vec<u32> = (0..k).map(|j| (j % 2) as u32).collect();
    let z10: Vec<u32> = z01.iter().map(|d| 1 - d).collect();
    (Label::from_raw(z01), Label::from_raw(z10))
}
