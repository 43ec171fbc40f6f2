use num_bigint::BigUint;

use crate::error::{HkError, Result};
use crate::params::Params;

/// Vertex name: k base-n digits, most significant first.
///
/// The first digit is the copy index of the outermost decomposition, so
/// `id = Σ x_i · n^(k−i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(Vec<u32>);

impl Label {
    pub fn new(digits: Vec<u32>, params: &Params) -> Result<Self> {
        check_digits(&digits, params)?;
        Ok(Label(digits))
    }

    pub(crate) fn from_raw(digits: Vec<u32>) -> Self {
        Label(digits)
    }

    pub fn zeros(params: &Params) -> Self {
        Label(vec![0; params.k() as usize])
    }

    pub fn from_id(id: u64, params: &Params) -> Result<Self> {
        if params.order_u64().is_some_and(|order| id >= order) {
            return Err(HkError::IdOutOfRange {
                id,
                order: params.order().to_string(),
            });
        }
        let n = u64::from(params.n());
        let mut digits = vec![0u32; params.k() as usize];
        let mut rest = id;
        for d in digits.iter_mut().rev() {
            *d = (rest % n) as u32;
            rest /= n;
        }
        Ok(Label(digits))
    }

    /// Positional value; fails when n^k does not fit in a `u64`.
    pub fn to_id(&self, params: &Params) -> Result<u64> {
        if params.order_u64().is_none() {
            return Err(HkError::Overflow);
        }
        Ok(digits_to_id(&self.0, params.n()))
    }

    pub fn to_big_id(&self, params: &Params) -> BigUint {
        let n = BigUint::from(params.n());
        self.0
            .iter()
            .fold(BigUint::ZERO, |acc, &d| acc * &n + BigUint::from(d))
    }

    /// Parses a bare digit string (only when n ≤ 10) or comma-separated digits.
    pub fn parse(text: &str, params: &Params) -> Result<Self> {
        let text = text.trim();
        let digits: Vec<u32> = if text.contains(',') {
            text.split(',')
                .map(|s| s.trim().parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| HkError::LabelSyntax(text.to_string()))?
        } else {
            if params.n() > 10 && params.k() > 1 {
                return Err(HkError::LabelSyntax(format!(
                    "{text} (comma-separated digits required when n > 10)"
                )));
            }
            if params.n() > 10 {
                vec![text.parse::<u32>().map_err(|_| HkError::LabelSyntax(text.to_string()))?]
            } else {
                text.chars()
                    .map(|c| c.to_digit(10))
                    .collect::<Option<_>>()
                    .ok_or_else(|| HkError::LabelSyntax(text.to_string()))?
            }
        };
        Label::new(digits, params)
    }

    /// Digit string for n ≤ 10, comma-separated otherwise.
    pub fn render(&self, n: u32) -> String {
        render_digits(&self.0, n)
    }

    pub fn digits(&self) -> &[u32] {
        &self.0
    }

    pub fn into_digits(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn common_prefix_len(&self, other: &Label) -> usize {
        common_prefix_len(&self.0, &other.0)
    }
}

pub(crate) fn check_digits(digits: &[u32], params: &Params) -> Result<()> {
    if digits.len() != params.k() as usize {
        return Err(HkError::LabelLength {
            expected: params.k() as usize,
            got: digits.len(),
        });
    }
    if let Some(&digit) = digits.iter().find(|&&d| d >= params.n()) {
        return Err(HkError::DigitOutOfRange { digit, n: params.n() });
    }
    Ok(())
}

pub(crate) fn digits_to_id(digits: &[u32], n: u32) -> u64 {
    let n = u64::from(n);
    digits.iter().fold(0u64, |acc, &d| acc * n + u64::from(d))
}

pub(crate) fn render_digits(digits: &[u32], n: u32) -> String {
    if n <= 10 {
        digits.iter().map(|d| char::from_digit(*d, 10).unwrap()).collect()
    } else {
        digits.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

pub(crate) fn common_prefix_len(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// 1-based position of the last nonzero digit, 0 when all digits are zero.
pub(crate) fn last_nonzero(digits: &[u32]) -> usize {
    digits.iter().rposition(|&d| d != 0).map_or(0, |p| p + 1)
}

/// 1-based position of the last zero digit, 0 when no digit is zero.
pub(crate) fn last_zero(digits: &[u32]) -> usize {
    digits.iter().rposition(|&d| d == 0).map_or(0, |p| p + 1)
}
