//! Exact scalars for the calculus: Gaussian rationals with an optional √2 factor.
//!
//! Every value has the form `(re + im·i) · √2^k` with `re`, `im` rational and
//! `k ∈ {0, 1}` after canonicalization (even powers of √2 fold into the
//! rational parts). This set is closed under multiplication, conjugation and
//! inversion, and under addition of same-parity values — which is the only
//! kind of addition the calculus ever performs: √2 factors enter exclusively
//! through vector normalization, uniformly across the terms of a sum.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::AlgebraError;

/// Exact rational number used throughout the crate.
pub type Rat = BigRational;

/// Build a rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Build the rational `p/q`. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Exact complex scalar `(re + im·i) · √2^k`, `k ∈ {0, 1}`.
///
/// Addition of two nonzero values with different √2 parity is outside the
/// ring and panics; no operation in the calculus produces such a sum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianScalar {
    re: Rat,
    im: Rat,
    sqrt2: bool,
}

impl GaussianScalar {
    pub fn new(re: Rat, im: Rat) -> Self {
        Self {
            re,
            im,
            sqrt2: false,
        }
    }

    /// `(re + im·i) · √2^k`; `k` is folded to parity, even part into `re`/`im`.
    pub fn with_sqrt2_pow(re: Rat, im: Rat, k: i64) -> Self {
        let fold = k.div_euclid(2);
        let parity = k.rem_euclid(2) == 1;
        let scale = if fold >= 0 {
            Rat::from_integer(BigInt::from(2).pow(fold as u32))
        } else {
            Rat::new(BigInt::one(), BigInt::from(2).pow((-fold) as u32))
        };
        Self {
            re: re * &scale,
            im: im * scale,
            sqrt2: parity,
        }
        .canon()
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(rat(n), Rat::zero())
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(rat(re), rat(im))
    }

    pub fn zero() -> Self {
        Self::new(Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    /// `1/√2`, stored as `(1/2)·√2`.
    pub fn inv_sqrt2() -> Self {
        Self {
            re: frac(1, 2),
            im: Rat::zero(),
            sqrt2: true,
        }
    }

    /// `√2`.
    pub fn sqrt2() -> Self {
        Self {
            re: Rat::one(),
            im: Rat::zero(),
            sqrt2: true,
        }
    }

    fn canon(self) -> Self {
        if self.re.is_zero() && self.im.is_zero() {
            Self {
                re: self.re,
                im: self.im,
                sqrt2: false,
            }
        } else {
            self
        }
    }

    pub fn re(&self) -> &Rat {
        &self.re
    }

    pub fn im(&self) -> &Rat {
        &self.im
    }

    /// √2 parity: the value is `(re + im·i)·√2` when true.
    pub fn sqrt2_parity(&self) -> bool {
        self.sqrt2
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero() && !self.sqrt2
    }

    /// True when the value is a plain rational (no imaginary part, no √2).
    pub fn is_rational(&self) -> bool {
        self.im.is_zero() && !self.sqrt2
    }

    pub fn to_rational(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.re.clone())
        } else {
            None
        }
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
            sqrt2: self.sqrt2,
        }
    }

    /// `|z|²`, always a plain rational: `(re² + im²)·2^k`.
    pub fn abs_sq(&self) -> Rat {
        let base = &self.re * &self.re + &self.im * &self.im;
        if self.sqrt2 {
            base * rat(2)
        } else {
            base
        }
    }

    /// Exact division. Errors on a zero divisor; this is the only partial
    /// scalar operation.
    pub fn div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        // 1/(q·√2) = conj(q)/(2·|q|²) · √2, so the parity flag carries over.
        let norm = &rhs.re * &rhs.re + &rhs.im * &rhs.im;
        let norm = if rhs.sqrt2 { norm * rat(2) } else { norm };
        let inv = Self {
            re: &rhs.re / &norm,
            im: -&rhs.im / &norm,
            sqrt2: rhs.sqrt2,
        };
        Ok(self * &inv)
    }

    /// Multiply by a plain rational.
    pub fn scale(&self, r: &Rat) -> Self {
        Self {
            re: &self.re * r,
            im: &self.im * r,
            sqrt2: self.sqrt2,
        }
        .canon()
    }
}

impl Add for &GaussianScalar {
    type Output = GaussianScalar;

    fn add(self, rhs: &GaussianScalar) -> GaussianScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        assert_eq!(
            self.sqrt2, rhs.sqrt2,
            "sum of scalars with mixed √2 parity is outside the ring"
        );
        GaussianScalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
            sqrt2: self.sqrt2,
        }
        .canon()
    }
}

impl Sub for &GaussianScalar {
    type Output = GaussianScalar;

    fn sub(self, rhs: &GaussianScalar) -> GaussianScalar {
        self + &(-rhs)
    }
}

impl Mul for &GaussianScalar {
    type Output = GaussianScalar;

    fn mul(self, rhs: &GaussianScalar) -> GaussianScalar {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        let mut out = GaussianScalar {
            re,
            im,
            sqrt2: false,
        };
        match (self.sqrt2, rhs.sqrt2) {
            (false, false) => {}
            (true, true) => {
                // √2·√2 folds back into the rationals.
                out.re *= rat(2);
                out.im *= rat(2);
            }
            _ => out.sqrt2 = true,
        }
        out.canon()
    }
}

impl Neg for &GaussianScalar {
    type Output = GaussianScalar;

    fn neg(self) -> GaussianScalar {
        GaussianScalar {
            re: -self.re.clone(),
            im: -self.im.clone(),
            sqrt2: self.sqrt2,
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianScalar {
            type Output = GaussianScalar;
            fn $method(self, rhs: GaussianScalar) -> GaussianScalar {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&GaussianScalar> for GaussianScalar {
            type Output = GaussianScalar;
            fn $method(self, rhs: &GaussianScalar) -> GaussianScalar {
                $trait::$method(&self, rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for GaussianScalar {
    type Output = GaussianScalar;
    fn neg(self) -> GaussianScalar {
        -&self
    }
}

fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianScalar {
    /// Canonical wire form: `p/q` rationals, `re±imi` with no spaces
    /// (e.g. `1/2-1/2i`), a trailing `*sqrt2^1` for odd √2 parity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut s = String::new();
        if !self.re.is_zero() {
            s.push_str(&fmt_rat(&self.re));
        }
        if !self.im.is_zero() {
            let mag = self.im.abs();
            let sign = if self.im.is_negative() {
                "-"
            } else if s.is_empty() {
                ""
            } else {
                "+"
            };
            s.push_str(sign);
            if !mag.is_one() {
                s.push_str(&fmt_rat(&mag));
            }
            s.push('i');
        }
        if self.sqrt2 {
            s.push_str("*sqrt2^1");
        }
        write!(f, "{}", s)
    }
}

impl fmt::Debug for GaussianScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn parse_rat(s: &str) -> Result<Rat, AlgebraError> {
    let bad = || AlgebraError::ScalarParse(s.to_string());
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| bad())?;
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(p))
        }
    }
}

impl FromStr for GaussianScalar {
    type Err = AlgebraError;

    /// Parse the canonical form produced by `Display`.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let bad = || AlgebraError::ScalarParse(input.to_string());
        let (body, sqrt2) = match input.strip_suffix("*sqrt2^1") {
            Some(b) => (b, true),
            None => (input, false),
        };
        if body.is_empty() {
            return Err(bad());
        }
        let (re, im) = if let Some(imag) = body.strip_suffix('i') {
            // Split off the real part: the separator is a sign that is not
            // the leading character of either part.
            let sep = imag
                .char_indices()
                .skip(1)
                .find(|&(_, c)| c == '+' || c == '-')
                .map(|(idx, _)| idx);
            match sep {
                Some(idx) => {
                    let re = parse_rat(&imag[..idx])?;
                    let sign = if &imag[idx..idx + 1] == "-" { -1 } else { 1 };
                    let mag = &imag[idx + 1..];
                    let mag = if mag.is_empty() {
                        Rat::one()
                    } else {
                        parse_rat(mag)?
                    };
                    (re, mag * rat(sign))
                }
                None => {
                    let im = match imag {
                        "" => Rat::one(),
                        "-" => -Rat::one(),
                        other => parse_rat(other)?,
                    };
                    (Rat::zero(), im)
                }
            }
        } else {
            (parse_rat(body)?, Rat::zero())
        };
        Ok(GaussianScalar { re, im, sqrt2 }.canon())
    }
}
