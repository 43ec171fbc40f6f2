use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{HkError, Result};

/// Default upper bound on the number of vertices of a materialized graph.
pub const DEFAULT_CAP: u64 = 1 << 20;

/// Parameters of the hierarchical graph: the seed complete graph has `n`
/// vertices and the construction is iterated to depth `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Params {
    n: u32,
    k: u32,
}

impl Params {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if n < 2 {
            return Err(HkError::InvalidN(n.into()));
        }
        if k < 1 {
            return Err(HkError::InvalidK(k.into()));
        }
        Ok(Params { n, k })
    }

    /// Validates untyped input, e.g. from a command line.
    pub fn validate(n: u64, k: u64) -> Result<Self> {
        let n32 = u32::try_from(n).map_err(|_| HkError::InvalidN(n))?;
        let k32 = u32::try_from(k).map_err(|_| HkError::InvalidK(k))?;
        if n32 < 2 {
            return Err(HkError::InvalidN(n));
        }
        if k32 < 1 {
            return Err(HkError::InvalidK(k));
        }
        Ok(Params { n: n32, k: k32 })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of vertices, n^k, exact.
    pub fn order(&self) -> BigUint {
        BigUint::from(self.n).pow(self.k)
    }

    /// n^k when it fits in a `u64`.
    pub fn order_u64(&self) -> Option<u64> {
        u64::from(self.n).checked_pow(self.k)
    }

    /// n^k as a vertex count, provided it does not exceed `cap`.
    pub fn materializable(&self, cap: u64) -> Result<usize> {
        match self.order_u64() {
            Some(order) if order <= cap && order <= u64::from(u32::MAX) => Ok(order as usize),
            _ => Err(HkError::BudgetExceeded {
                order: self.order().to_string(),
                cap,
            }),
        }
    }

    /// The same seed with a different depth.
    pub fn with_depth(&self, k: u32) -> Result<Self> {
        Params::new(self.n, k)
    }
}

impl std::fmt::Display for Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "H({},{})", self.n, self.k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_params_accepted() {
        let p = Params::validate(2, 1).unwrap();
        assert_eq!((p.n(), p.k()), (2, 1));
    }

    #[test]
    fn bounds_named_in_errors() {
        let e = Params::validate(1, 3).unwrap_err();
        assert!(e.to_string().contains("n must be ≥ 2"));
        let e = Params::validate(4, 0).unwrap_err();
        assert!(e.to_string().contains("k must be ≥ 1"));
    }

    #[test]
    fn order_is_exact_beyond_u64() {
        let p = Params::new(10, 30).unwrap();
        assert_eq!(p.order_u64(), None);
        assert_eq!(p.order().to_string(), format!("1{}", "0".repeat(30)));
    }

    #[test]
    fn cap_enforced() {
        let p = Params::new(10, 9).unwrap();
        assert!(matches!(p.materializable(DEFAULT_CAP), Err(HkError::BudgetExceeded { .. })));
        assert_eq!(Params::new(4, 3).unwrap().materializable(DEFAULT_CAP).unwrap(), 64);
    }
}
