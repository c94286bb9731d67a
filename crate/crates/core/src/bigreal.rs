//! Arbitrary-precision reals with explicit decimal working precision.
//!
//! `BigReal` is a thin wrapper over an MPFR float that carries the number of
//! decimal digits it was requested at. Binary operations round to the coarser
//! operand precision; anything that needs more digits must ask for them up
//! front. Values are immutable in spirit: every operation returns a new value.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::{Constant, Special};
use rug::ops::{CompleteRound, Pow};
use rug::{Float, Integer};

/// log2(10), rounded up a little; used to convert decimal digits to bits.
const LOG2_10: f64 = 3.321928094887363;

/// Extra bits kept beyond the requested decimal precision.
const GUARD_BITS: u32 = 16;

/// Euler–Mascheroni constant to 1,100 decimal places (OEIS A001620).
/// Kept as a literal so the evaluation path does not depend on the float
/// backend's constant tables; a unit test recomputes it independently.
const EULER_GAMMA_1100: &str = "0.5772156649015328606065120900824024310421593359399235988057672348848677267776\
646709369470632917467495146314472498070824809605040144865428362241739976449235\
362535003337429373377376739427925952582470949160087352039481656708532331517766\
115286211995015079847937450857057400299213547861466940296043254215190587755352\
673313992540129674205137541395491116851028079842348775872050384310939973613725\
530608893312676001724795378367592713515772261027349291394079843010341777177808\
815495706610750101619166334015227893586796549725203621287922655595366962817638\
879272680132431010476505963703947394957638906572967929601009015125195950922243\
501409349871228247949747195646976318506676129063811051824197444867836380861749\
455169892792301877391072945781554316005002182844096053772434203285478367015177\
394398700302370339518328690001558193988042707411542227819716523011073565833967\
348717650491941812300040654693142999297779569303100503086303418569803231083691\
640025892970890985486825777364288253954925873629596133298574739302373438847070\
370284412920166417850248733379080562754998434590761643167103146710722370021810\
7450444187";

pub(crate) fn bits_for(digits: u32) -> u32 {
    ((digits as f64) * LOG2_10).ceil() as u32 + GUARD_BITS
}

fn digits_for(bits: u32) -> u32 {
    ((bits.saturating_sub(GUARD_BITS)) as f64 / LOG2_10).floor() as u32
}

/// Arbitrary-precision real with an explicit decimal working precision.
#[derive(Clone, Debug)]
pub struct BigReal {
    value: Float,
    digits: u32,
}

impl BigReal {
    /// Zero at the given working precision.
    pub fn zero(digits: u32) -> Self {
        BigReal {
            value: Float::with_val(bits_for(digits), 0),
            digits,
        }
    }

    /// Positive infinity; used as the radius of an uncertified bound.
    pub fn infinity(digits: u32) -> Self {
        BigReal {
            value: Float::with_val(bits_for(digits), Special::Infinity),
            digits,
        }
    }

    pub fn from_u64(v: u64, digits: u32) -> Self {
        BigReal {
            value: Float::with_val(bits_for(digits), v),
            digits,
        }
    }

    pub fn from_i64(v: i64, digits: u32) -> Self {
        BigReal {
            value: Float::with_val(bits_for(digits), v),
            digits,
        }
    }

    pub fn from_f64(v: f64, digits: u32) -> Self {
        BigReal {
            value: Float::with_val(bits_for(digits), v),
            digits,
        }
    }

    pub fn from_integer(v: &Integer, digits: u32) -> Self {
        BigReal {
            value: Float::with_val(bits_for(digits), v),
            digits,
        }
    }

    /// Parses a decimal string, including `mantissa e exponent` forms.
    pub fn parse(s: &str, digits: u32) -> Option<Self> {
        let parsed = Float::parse(s).ok()?;
        Some(BigReal {
            value: Float::with_val(bits_for(digits), parsed),
            digits,
        })
    }

    pub(crate) fn from_float(value: Float, digits: u32) -> Self {
        BigReal { value, digits }
    }

    /// The circle constant at the given precision.
    pub fn pi(digits: u32) -> Self {
        BigReal {
            value: Float::with_val(bits_for(digits), Constant::Pi),
            digits,
        }
    }

    /// Euler's number e.
    pub fn e(digits: u32) -> Self {
        BigReal {
            value: Float::with_val(bits_for(digits), 1).exp(),
            digits,
        }
    }

    /// Euler–Mascheroni constant, read from the embedded literal
    /// (valid to 1,100 digits; callers above that are rejected upstream).
    pub fn euler_gamma(digits: u32) -> Self {
        debug_assert!(digits <= 1_090, "gamma literal holds 1,100 digits");
        Self::parse(EULER_GAMMA_1100, digits).expect("embedded constant parses")
    }

    /// Declared decimal working precision.
    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub(crate) fn as_float(&self) -> &Float {
        &self.value
    }

    pub(crate) fn prec_bits(&self) -> u32 {
        self.value.prec()
    }

    /// Rounds to a different working precision.
    pub fn with_digits(&self, digits: u32) -> Self {
        let mut v = self.value.clone();
        v.set_prec(bits_for(digits));
        BigReal { value: v, digits }
    }

    pub fn is_finite(&self) -> bool {
        self.value.is_finite()
    }

    pub fn is_infinite(&self) -> bool {
        self.value.is_infinite()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.value.is_sign_negative()
    }

    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }

    /// Truncates toward zero to an exact integer.
    pub fn to_integer_trunc(&self) -> Integer {
        self.value.clone().trunc().to_integer().unwrap_or_default()
    }

    /// Number of decimal digits of the integer part, rounding to nearest
    /// first so that a value representing 10^k exactly is not undercounted
    /// (0 for |x| < 1/2).
    pub fn integer_digit_count(&self) -> usize {
        let t = self
            .value
            .clone()
            .round()
            .to_integer()
            .unwrap_or_default()
            .abs();
        if t.is_zero() {
            0
        } else {
            t.to_string().len()
        }
    }

    pub fn abs(&self) -> Self {
        BigReal {
            value: self.value.clone().abs(),
            digits: self.digits,
        }
    }

    pub fn ln(&self) -> Self {
        BigReal {
            value: self.value.clone().ln(),
            digits: self.digits,
        }
    }

    pub fn exp(&self) -> Self {
        BigReal {
            value: self.value.clone().exp(),
            digits: self.digits,
        }
    }

    pub fn sqrt(&self) -> Self {
        BigReal {
            value: self.value.clone().sqrt(),
            digits: self.digits,
        }
    }

    pub fn recip(&self) -> Self {
        BigReal {
            value: self.value.clone().recip(),
            digits: self.digits,
        }
    }

    pub fn powi(&self, n: i32) -> Self {
        BigReal {
            value: self.value.clone().pow(n),
            digits: self.digits,
        }
    }

    /// General real power; exponent rounds to the coarser precision.
    pub fn pow(&self, exponent: &BigReal) -> Self {
        let digits = self.digits.min(exponent.digits);
        let v = (&self.value).pow(&exponent.value).complete(bits_for(digits));
        BigReal { value: v, digits }
    }

    /// Midpoint of two values, at the coarser precision.
    pub fn midpoint(a: &BigReal, b: &BigReal) -> Self {
        let digits = a.digits.min(b.digits);
        let v = (&a.value + &b.value).complete(bits_for(digits)) / 2u32;
        BigReal { value: v, digits }
    }

    /// Decimal rendering with the given number of significant digits,
    /// in scientific form, e.g. `2.8752718639e32`.
    pub fn to_decimal_sci(&self, sig_digits: usize) -> String {
        if !self.value.is_finite() {
            return self.value.to_string();
        }
        if self.value.is_zero() {
            return "0".into();
        }
        let (sign, digits, exp) = self.sig_parts(sig_digits);
        let mut out = String::new();
        if sign {
            out.push('-');
        }
        out.push(digits.as_bytes()[0] as char);
        if digits.len() > 1 {
            out.push('.');
            out.push_str(&digits[1..]);
        }
        out.push('e');
        out.push_str(&(exp - 1).to_string());
        out
    }

    /// (negative?, significand digit string, decimal exponent) with the
    /// significand rounded to `sig_digits` digits. The value equals
    /// `0.digits * 10^exp` up to sign.
    pub fn sig_parts(&self, sig_digits: usize) -> (bool, String, i64) {
        let raw = self.value.to_string_radix(10, Some(sig_digits.max(1)));
        let neg = raw.starts_with('-');
        let body = raw.trim_start_matches('-');
        let (mantissa, e) = match body.split_once(['e', 'E']) {
            Some((m, ex)) => (m, ex.parse::<i64>().unwrap_or(0)),
            None => (body, 0),
        };
        let (ip, fp) = match mantissa.split_once('.') {
            Some((i, f)) => (i, f),
            None => (mantissa, ""),
        };
        let mut digits = format!("{ip}{fp}");
        let mut exp = ip.len() as i64 + e;
        let lead = digits.len() - digits.trim_start_matches('0').len();
        digits.drain(..lead);
        exp -= lead as i64;
        if digits.is_empty() {
            digits.push('0');
            exp = 0;
        }
        (neg, digits, exp)
    }

    /// `10^k`, correctly rounded at this precision (exact when the
    /// precision covers `k` digits).
    pub fn pow10(k: i64, digits: u32) -> Self {
        let ten = Float::with_val(bits_for(digits), 10);
        BigReal {
            value: ten.pow(k as i64),
            digits,
        }
    }
}

fn bin_digits(a: &BigReal, b: &BigReal) -> u32 {
    a.digits.min(b.digits)
}

macro_rules! bigreal_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                let digits = bin_digits(self, rhs);
                let v = (&self.value $op &rhs.value).complete(bits_for(digits));
                BigReal { value: v, digits }
            }
        }
        impl $trait for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                (&self).$method(rhs)
            }
        }
    };
}

bigreal_binop!(Add, add, +);
bigreal_binop!(Sub, sub, -);
bigreal_binop!(Mul, mul, *);
bigreal_binop!(Div, div, /);

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal {
            value: (-&self.value).complete(self.value.prec()),
            digits: self.digits,
        }
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal {
            value: -self.value,
            digits: self.digits,
        }
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.partial_cmp(&other.value)
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_sci(self.digits as usize))
    }
}

impl From<&BigReal> for f64 {
    fn from(v: &BigReal) -> f64 {
        v.to_f64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_coarsens_to_min() {
        let a = BigReal::from_u64(1, 50);
        let b = BigReal::from_u64(3, 20);
        let q = &a / &b;
        assert_eq!(q.digits(), 20);
        assert_eq!(digits_for(q.prec_bits()), 20);
    }

    #[test]
    fn gamma_literal_matches_backend() {
        let bits = bits_for(1_000);
        let ours = BigReal::euler_gamma(1_000);
        let theirs = Float::with_val(bits, Constant::Euler);
        let diff = (ours.as_float() - &theirs).complete(bits).abs();
        let tol = Float::with_val(64, 10).pow(-995);
        assert!(diff < tol, "gamma literal disagrees with backend: {diff}");
    }

    #[test]
    fn sci_rendering() {
        let x = BigReal::parse("287.52718639e30", 40).unwrap();
        assert_eq!(x.to_decimal_sci(11), "2.8752718639e32");
        assert_eq!(x.integer_digit_count(), 33);
        let neg = BigReal::from_f64(-0.25, 20);
        assert_eq!(neg.to_decimal_sci(3), "-2.50e-1");
    }

    #[test]
    fn pow10_and_pow() {
        let x = BigReal::pow10(100, 110);
        assert_eq!(x.integer_digit_count(), 101);
        let two = BigReal::from_u64(2, 40);
        let half = BigReal::from_f64(0.5, 40);
        let r = two.pow(&half);
        let d = (&r * &r) - BigReal::from_u64(2, 40);
        assert!(d.abs().to_f64() < 1e-38);
    }
}
