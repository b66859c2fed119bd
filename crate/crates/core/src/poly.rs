use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PolyError {
    #[error("division leaves a nonzero remainder")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("value {re}+{im}i is not within {tol} of an integer")]
    NotNearInteger { re: f64, im: f64, tol: f64 },
}

/// Integer polynomial in `q`, coefficients in ascending degree, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    coeffs: Vec<i128>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn one() -> Self {
        IntPolynomial::new(vec![1])
    }

    /// `[m]_q = 1 + q + … + q^{m-1}`.
    pub fn q_integer(m: usize) -> Self {
        IntPolynomial::new(vec![1; m])
    }

    /// `[m]_q! = [1]_q [2]_q ⋯ [m]_q`.
    pub fn q_factorial(m: usize) -> Self {
        (1..=m).fold(IntPolynomial::one(), |acc, i| &acc * &IntPolynomial::q_integer(i))
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval_at_one(&self) -> i128 {
        self.coeffs.iter().sum()
    }

    /// Exact long division; fails unless the remainder is zero.
    pub fn div_exact(&self, divisor: &IntPolynomial) -> Result<IntPolynomial, PolyError> {
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lead = divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() {
                Ok(IntPolynomial::new(Vec::new()))
            } else {
                Err(PolyError::InexactDivision)
            };
        }
        let mut quot = vec![0i128; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = rem[i + dd];
            if c % lead != 0 {
                return Err(PolyError::InexactDivision);
            }
            let f = c / lead;
            quot[i] = f;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= f * d;
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(PolyError::InexactDivision);
        }
        Ok(IntPolynomial::new(quot))
    }

    /// Coefficients folded modulo `q^order - 1`.
    pub fn reduce_cyclic(&self, order: usize) -> Vec<i128> {
        let mut out = vec![0i128; order];
        for (j, &c) in self.coeffs.iter().enumerate() {
            out[j % order] += c;
        }
        out
    }

    /// Value at `exp(2πi·d/order)`.
    pub fn eval_root_of_unity(&self, order: usize, d: usize) -> Complex64 {
        let reduced = self.reduce_cyclic(order);
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, &c) in reduced.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let angle = 2.0 * std::f64::consts::PI * ((j * d) % order) as f64 / order as f64;
            acc += Complex64::from_polar(c as f64, angle);
        }
        acc
    }
}

/// Rounds a complex value to an integer when it lies within `tol` of one.
pub fn round_to_integer(z: Complex64, tol: f64) -> Result<i128, PolyError> {
    let r = z.re.round();
    if (z.re - r).abs() <= tol && z.im.abs() <= tol {
        Ok(r as i128)
    } else {
        Err(PolyError::NotNearInteger { re: z.re, im: z.im, tol })
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::new(Vec::new());
        }
        let mut out = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}q")?,
                _ => write!(f, "{c}q^{j}")?,
            }
        }
        Ok(())
    }
}

/// `[bn]_q! / ∏ [h]_q` over the hook lengths of the `b × n` rectangle.
pub fn q_hook_rectangle(b: usize, n: usize) -> Result<IntPolynomial, PolyError> {
    let mut x = IntPolynomial::q_factorial(b * n);
    for i in 1..=b {
        for j in 1..=n {
            let hook = (b - i) + (n - j) + 1;
            x = x.div_exact(&IntPolynomial::q_integer(hook))?;
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_integers_and_division() {
        let f3 = IntPolynomial::q_factorial(3);
        assert_eq!(f3.coeffs(), &[1, 2, 2, 1]);
        assert_eq!(f3.div_exact(&IntPolynomial::q_integer(3)).unwrap().coeffs(), &[1, 1]);
        assert_eq!(
            IntPolynomial::q_integer(3).div_exact(&IntPolynomial::q_integer(2)),
            Err(PolyError::InexactDivision)
        );
        assert_eq!(f3.to_string(), "1 + 2q + 2q^2 + 1q^3");
    }

    #[test]
    fn rectangle_counts_at_one() {
        assert_eq!(q_hook_rectangle(3, 1).unwrap().eval_at_one(), 1);
        assert_eq!(q_hook_rectangle(3, 2).unwrap().eval_at_one(), 5);
        assert_eq!(q_hook_rectangle(3, 3).unwrap().eval_at_one(), 42);
        assert_eq!(q_hook_rectangle(2, 3).unwrap().eval_at_one(), 5);
        assert_eq!(q_hook_rectangle(2, 2).unwrap().coeffs(), &[1, 0, 1]);
    }

    #[test]
    fn roots_of_unity() {
        let x = q_hook_rectangle(2, 2).unwrap();
        let vals: Vec<i128> = (1..=4)
            .map(|d| round_to_integer(x.eval_root_of_unity(4, d), 1e-6).unwrap())
            .collect();
        assert_eq!(vals, vec![0, 2, 0, 2]);
        assert!(round_to_integer(Complex64::new(0.5, 0.0), 1e-6).is_err());
    }
}
