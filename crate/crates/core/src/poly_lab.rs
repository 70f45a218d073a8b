//! Exact transforms between polynomials, rational generating functions and
//! face-count vectors.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// `C(n, k)` by the multiplicative formula.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// The numerator `W` in `Σ_{n≥0} p(n) t^n = W(t) / (1-t)^D`.
///
/// `w_j = Σ_{i=0}^{j} (-1)^{j-i} C(D, j-i) p(i)` for `j = 0..D`. Requires
/// `deg p ≤ D - 1`.
pub fn w_transform(p: &IntPolynomial, denominator_exp: usize) -> Result<IntPolynomial> {
    if let Some(deg) = p.degree() {
        if deg + 1 > denominator_exp {
            return Err(Error::DegreeTooHigh {
                degree: deg,
                exponent: denominator_exp,
            });
        }
    }
    let values: Vec<BigInt> = (0..=denominator_exp as i64).map(|i| p.eval_i64(i)).collect();
    let coeffs = (0..=denominator_exp)
        .map(|j| {
            (0..=j).fold(BigInt::zero(), |acc, i| {
                let term = binomial(denominator_exp as u64, (j - i) as u64) * &values[i];
                if (j - i) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect();
    Ok(IntPolynomial::new(coeffs))
}

/// The Eulerian polynomial `A_d(t)` with `Σ n^d t^n = A_d(t)/(1-t)^{d+1}`,
/// from `A(n,k) = k A(n-1,k) + (n-k+1) A(n-1,k-1)`.
pub fn eulerian_polynomial(d: usize) -> IntPolynomial {
    let mut row = vec![BigInt::one()];
    for n in 1..=d {
        let mut next = vec![BigInt::zero(); n + 1];
        for (k, slot) in next.iter_mut().enumerate() {
            let stay = row.get(k).map(|a| a * k).unwrap_or_default();
            let step = if k >= 1 {
                row.get(k - 1).map(|a| a * (n - k + 1)).unwrap_or_default()
            } else {
                BigInt::zero()
            };
            *slot = stay + step;
        }
        row = next;
    }
    IntPolynomial::new(row)
}

/// `χ(n) = Σ_{k=0}^{d} C(n+k, d) w_{d-k}` from the coefficients `w_0..w_d`.
pub fn chromatic_from_w(w: &[BigInt], d: usize, n: u64) -> Result<BigInt> {
    if w.len() != d + 1 {
        return Err(Error::LengthMismatch {
            expected: d + 1,
            actual: w.len(),
        });
    }
    Ok((0..=d)
        .map(|k| binomial(n + k as u64, d as u64) * &w[d - k])
        .sum())
}

/// The tail `n^d - χ(n)`.
pub fn tail_polynomial(chi: &IntPolynomial, d: usize) -> Result<IntPolynomial> {
    if chi.degree() != Some(d) || !chi.leading().is_one() {
        return Err(Error::NotMonic(d));
    }
    Ok(&IntPolynomial::monomial(d) - chi)
}

/// Face counts `f_{-1}, f_0, …, f_{e-1}`; empty for the void complex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FVector(pub Vec<BigInt>);

/// `h_0, …, h_e`; empty for the void complex.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct HVector(pub Vec<BigInt>);

macro_rules! int_vector {
    ($t:ident) => {
        impl $t {
            pub fn from_i64(v: &[i64]) -> Self {
                $t(v.iter().map(|&x| BigInt::from(x)).collect())
            }

            pub fn entries(&self) -> &[BigInt] {
                &self.0
            }

            pub fn is_void(&self) -> bool {
                self.0.is_empty()
            }

            pub fn total(&self) -> BigInt {
                self.0.iter().sum()
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for (k, x) in self.0.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
        }

        impl Serialize for $t {
            fn serialize<S: serde::Serializer>(
                &self,
                s: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                crate::json::serialize_bigints(&self.0, s)
            }
        }
    };
}
int_vector!(FVector);
int_vector!(HVector);

impl FVector {
    /// Largest face cardinality `e`.
    pub fn max_face_size(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }
}

/// `h_k = Σ_{i=0}^{k} (-1)^{k-i} C(e-i, k-i) f_{i-1}`.
pub fn f_to_h(f: &FVector, e: usize) -> Result<HVector> {
    if f.0.len() != e + 1 {
        return Err(Error::LengthMismatch {
            expected: e + 1,
            actual: f.0.len(),
        });
    }
    Ok(HVector(
        (0..=e)
            .map(|k| {
                (0..=k).fold(BigInt::zero(), |acc, i| {
                    let term = binomial((e - i) as u64, (k - i) as u64) * &f.0[i];
                    if (k - i) % 2 == 0 {
                        acc + term
                    } else {
                        acc - term
                    }
                })
            })
            .collect(),
    ))
}

/// `f_{k-1} = Σ_{i=0}^{k} C(e-i, k-i) h_i`.
pub fn h_to_f(h: &HVector, e: usize) -> Result<FVector> {
    if h.0.len() != e + 1 {
        return Err(Error::LengthMismatch {
            expected: e + 1,
            actual: h.0.len(),
        });
    }
    Ok(FVector(
        (0..=e)
            .map(|k| {
                (0..=k)
                    .map(|i| binomial((e - i) as u64, (k - i) as u64) * &h.0[i])
                    .sum()
            })
            .collect(),
    ))
}
