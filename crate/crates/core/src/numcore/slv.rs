/// A real number stored as `sign * exp(log_magnitude)`.
///
/// Expansion coefficients multiply gamma functions of arguments near `2n`
/// against powers like `rho^n`; both factors leave the `f64` range near
/// `n ~ 80` even though their product stays modest.  Keeping the logarithm
/// and the sign separately makes those products exact up to rounding in the
/// log, and the final `value()` call is the only place an overflow or
/// underflow can happen, where it is genuine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLogValue {
    /// Natural log of the absolute value; meaningless when `sign == 0`.
    pub log_magnitude: f64,
    /// -1, 0 or +1.
    pub sign: i8,
}

impl SignedLogValue {
    pub fn zero() -> Self {
        SignedLogValue {
            log_magnitude: f64::NEG_INFINITY,
            sign: 0,
        }
    }

    pub fn one() -> Self {
        SignedLogValue {
            log_magnitude: 0.0,
            sign: 1,
        }
    }

    pub fn from_parts(sign: i8, log_magnitude: f64) -> Self {
        debug_assert!(sign == -1 || sign == 0 || sign == 1);
        if sign == 0 {
            Self::zero()
        } else {
            SignedLogValue {
                log_magnitude,
                sign,
            }
        }
    }

    pub fn from_value(v: f64) -> Self {
        if v == 0.0 {
            Self::zero()
        } else {
            SignedLogValue {
                log_magnitude: v.abs().ln(),
                sign: if v < 0.0 { -1 } else { 1 },
            }
        }
    }

    /// `base^exponent` for a strictly positive base, as a log-space factor.
    pub fn from_pow(base: f64, exponent: f64) -> Self {
        debug_assert!(base > 0.0);
        SignedLogValue {
            log_magnitude: exponent * base.ln(),
            sign: 1,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn value(&self) -> f64 {
        if self.sign == 0 {
            0.0
        } else {
            self.sign as f64 * self.log_magnitude.exp()
        }
    }

    pub fn recip(&self) -> Self {
        if self.sign == 0 {
            // 1/0 surfaces as an infinite magnitude rather than a panic; the
            // caller's value() turns it into +/-inf which tests catch.
            SignedLogValue {
                log_magnitude: f64::INFINITY,
                sign: 1,
            }
        } else {
            SignedLogValue {
                log_magnitude: -self.log_magnitude,
                sign: self.sign,
            }
        }
    }
}

impl std::ops::Mul for SignedLogValue {
    type Output = SignedLogValue;
    fn mul(self, rhs: SignedLogValue) -> SignedLogValue {
        if self.sign == 0 || rhs.sign == 0 {
            SignedLogValue::zero()
        } else {
            SignedLogValue {
                log_magnitude: self.log_magnitude + rhs.log_magnitude,
                sign: self.sign * rhs.sign,
            }
        }
    }
}

impl std::ops::Div for SignedLogValue {
    type Output = SignedLogValue;
    fn div(self, rhs: SignedLogValue) -> SignedLogValue {
        self * rhs.recip()
    }
}
