//! Exact arithmetic in real quadratic fields and codings of two- and
//! three-interval exchange transformations.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::sturmian::SturmianContext;
use crate::words::{Alphabet, Word};
use crate::{Error, Result};

/// An element `p + q*sqrt(d)` of a real quadratic field, with exact rational
/// coefficients.
///
/// Canonical form: `d` is squarefree and at least 2 whenever `q != 0`, and
/// `d = 0` when `q = 0`, so structural equality is value equality. All numbers
/// mixed in one arithmetic expression must lie in a common field; combining
/// two genuinely irrational numbers with different `d` panics.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QuadraticNumber {
    p: BigRational,
    q: BigRational,
    d: u64,
}

/// Split `n` as `s^2 * rest` with `rest` squarefree.
fn extract_square(n: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut rest = n;
    let mut f = 2u64;
    while f * f <= rest {
        while rest.is_multiple_of(f * f) {
            rest /= f * f;
            s *= f;
        }
        f += 1;
    }
    (s, rest)
}

impl QuadraticNumber {
    fn normalized(p: BigRational, q: BigRational, d: u64) -> Self {
        if q.is_zero() || d == 0 {
            return QuadraticNumber { p, q: BigRational::zero(), d: 0 };
        }
        let (s, rest) = extract_square(d);
        if rest == 1 {
            return QuadraticNumber {
                p: p + q * BigRational::from(BigInt::from(s)),
                q: BigRational::zero(),
                d: 0,
            };
        }
        QuadraticNumber { p, q: q * BigRational::from(BigInt::from(s)), d: rest }
    }

    pub fn new(p: BigRational, q: BigRational, d: u64) -> Self {
        QuadraticNumber::normalized(p, q, d)
    }

    pub fn zero() -> Self {
        QuadraticNumber::from_integer(0)
    }

    pub fn one() -> Self {
        QuadraticNumber::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        QuadraticNumber {
            p: BigRational::from(BigInt::from(n)),
            q: BigRational::zero(),
            d: 0,
        }
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        QuadraticNumber {
            p: BigRational::new(BigInt::from(numer), BigInt::from(denom)),
            q: BigRational::zero(),
            d: 0,
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        QuadraticNumber { p: r, q: BigRational::zero(), d: 0 }
    }

    /// The exact square root of a nonnegative integer.
    pub fn sqrt(n: u64) -> Self {
        QuadraticNumber::normalized(BigRational::zero(), BigRational::one(), n)
    }

    /// The golden ratio `(1 + sqrt(5)) / 2`.
    pub fn golden() -> Self {
        QuadraticNumber::new(
            BigRational::new(BigInt::one(), BigInt::from(2)),
            BigRational::new(BigInt::one(), BigInt::from(2)),
            5,
        )
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.p
    }

    pub fn surd_part(&self) -> (&BigRational, u64) {
        (&self.q, self.d)
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// Exact sign.
    pub fn sign(&self) -> Ordering {
        if self.q.is_zero() {
            return self.p.cmp(&BigRational::zero());
        }
        if self.p.is_zero() {
            return self.q.cmp(&BigRational::zero());
        }
        let d = BigRational::from(BigInt::from(self.d));
        match (self.p.is_positive(), self.q.is_positive()) {
            (true, true) => Ordering::Greater,
            (false, false) => Ordering::Less,
            // p > 0 > q: positive iff p^2 > q^2 d.
            (true, false) => (&self.p * &self.p).cmp(&(&self.q * &self.q * d)),
            // p < 0 < q: positive iff q^2 d > p^2.
            (false, true) => (&self.q * &self.q * d).cmp(&(&self.p * &self.p)),
        }
    }

    pub fn recip(&self) -> Self {
        let d = BigRational::from(BigInt::from(self.d));
        let denom = &self.p * &self.p - &self.q * &self.q * d;
        assert!(!denom.is_zero(), "division by zero quadratic number");
        QuadraticNumber::normalized(&self.p / &denom, -(&self.q) / &denom, self.d)
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        p + q * (self.d as f64).sqrt()
    }

    fn common_field(&self, other: &Self) -> u64 {
        if self.q.is_zero() {
            other.d
        } else if other.q.is_zero() {
            self.d
        } else {
            assert_eq!(self.d, other.d, "mixed quadratic fields");
            self.d
        }
    }
}

impl Add for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn add(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let d = self.common_field(rhs);
        QuadraticNumber::normalized(&self.p + &rhs.p, &self.q + &rhs.q, d)
    }
}

impl Sub for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn sub(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let d = self.common_field(rhs);
        QuadraticNumber::normalized(&self.p - &rhs.p, &self.q - &rhs.q, d)
    }
}

impl Mul for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn mul(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        let d = self.common_field(rhs);
        let dr = BigRational::from(BigInt::from(d));
        QuadraticNumber::normalized(
            &self.p * &rhs.p + &self.q * &rhs.q * dr,
            &self.p * &rhs.q + &self.q * &rhs.p,
            d,
        )
    }
}

impl Div for &QuadraticNumber {
    type Output = QuadraticNumber;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &QuadraticNumber) -> QuadraticNumber {
        self * &rhs.recip()
    }
}

impl Neg for &QuadraticNumber {
    type Output = QuadraticNumber;
    fn neg(self) -> QuadraticNumber {
        QuadraticNumber::normalized(-(&self.p), -(&self.q), self.d)
    }
}

impl PartialOrd for QuadraticNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadraticNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign()
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            return write!(f, "{}", self.p);
        }
        if self.q.is_negative() {
            write!(f, "{} - {}*sqrt({})", self.p, -(&self.q), self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.p, self.q, self.d)
        }
    }
}

/// Interval order of a three-interval exchange: the permutation telling where
/// each of the intervals `A`, `B`, `C` lands.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Permutation {
    /// `(3,2,1)`: full reversal.
    P321,
    /// `(2,3,1)`: `A` last, `B` and `C` keep their relative order.
    P231,
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Permutation::P321 => write!(f, "(3,2,1)"),
            Permutation::P231 => write!(f, "(2,3,1)"),
        }
    }
}

/// An exchange of three intervals of `[0, 1)` together with the starting
/// point whose orbit is coded.
#[derive(Clone, PartialEq, Debug)]
pub struct IetSpec {
    pub len_a: QuadraticNumber,
    pub len_b: QuadraticNumber,
    pub len_c: QuadraticNumber,
    pub permutation: Permutation,
    pub intercept: QuadraticNumber,
}

impl IetSpec {
    pub fn new(
        len_a: QuadraticNumber,
        len_b: QuadraticNumber,
        len_c: QuadraticNumber,
        permutation: Permutation,
        intercept: QuadraticNumber,
    ) -> Result<Self> {
        let one = QuadraticNumber::one();
        let zero = QuadraticNumber::zero();
        if len_a.sign() != Ordering::Greater
            || len_b.sign() != Ordering::Greater
            || len_c.sign() != Ordering::Greater
        {
            return Err(Error::InvalidIet("interval lengths must be positive"));
        }
        if &(&len_a + &len_b) + &len_c != one {
            return Err(Error::InvalidIet("interval lengths must sum to 1"));
        }
        if intercept < zero || intercept >= one {
            return Err(Error::InvalidIet("intercept must lie in [0,1)"));
        }
        Ok(IetSpec { len_a, len_b, len_c, permutation, intercept })
    }

    /// Which interval a point lies in: 0 = A, 1 = B, 2 = C.
    pub fn letter(&self, y: &QuadraticNumber) -> u8 {
        if *y < self.len_a {
            0
        } else if *y < &self.len_a + &self.len_b {
            1
        } else {
            2
        }
    }

    pub fn transform(&self, y: &QuadraticNumber) -> QuadraticNumber {
        let one = QuadraticNumber::one();
        let beta = &self.len_a;
        let gamma = &self.len_b;
        match (self.permutation, self.letter(y)) {
            (Permutation::P321, 0) => &(y + &one) - beta,
            (Permutation::P321, 1) => &(&(y + &one) - beta) - &(beta + gamma),
            (Permutation::P321, _) => &(y - beta) - gamma,
            (Permutation::P231, 0) => &(y + &one) - beta,
            (Permutation::P231, _) => y - beta,
        }
    }

    pub fn inverse_transform(&self, y: &QuadraticNumber) -> QuadraticNumber {
        let one = QuadraticNumber::one();
        let beta = &self.len_a;
        let gamma = &self.len_b;
        let top = &one - beta;
        match self.permutation {
            Permutation::P321 => {
                if *y >= top {
                    y - &top
                } else if *y >= &top - gamma {
                    let back = &(beta + beta) + gamma;
                    &(y + &back) - &one
                } else {
                    y + &(beta + gamma)
                }
            }
            Permutation::P231 => {
                if *y >= top {
                    &(y + beta) - &one
                } else {
                    y + beta
                }
            }
        }
    }
}

/// Code `len` steps of the orbit of `spec.intercept` over `{A, B, C}`.
pub fn iet3_code(spec: &IetSpec, len: usize) -> Word {
    let mut out = Word::empty(Alphabet::Ternary);
    let mut y = spec.intercept.clone();
    for _ in 0..len {
        out.push(spec.letter(&y));
        y = spec.transform(&y);
    }
    out
}

/// Code `len` steps of the rotation by an irrational `alpha` started at
/// `rho`, i.e. the exchange of the two intervals `[0, alpha)` and
/// `[alpha, 1)` with letters `0` and `1`.
pub fn iet2_code(alpha: &QuadraticNumber, rho: &QuadraticNumber, len: usize) -> Result<Word> {
    let zero = QuadraticNumber::zero();
    let one = QuadraticNumber::one();
    if alpha.is_rational() {
        return Err(Error::RationalParameter);
    }
    if *alpha <= zero || *alpha >= one {
        return Err(Error::InvalidIet("alpha must lie in (0,1)"));
    }
    if *rho < zero || *rho >= one {
        return Err(Error::InvalidIet("intercept must lie in [0,1)"));
    }
    let mut out = Word::empty(Alphabet::Binary);
    let mut y = rho.clone();
    for _ in 0..len {
        if y < *alpha {
            out.push(0);
            y = &(&y + &one) - alpha;
        } else {
            out.push(1);
            y = &y - alpha;
        }
    }
    Ok(out)
}

/// Finite-horizon test of the infinite-distinct-orbit condition: the forward
/// and backward orbits of both discontinuity points must avoid the
/// discontinuities for `1 <= n <= horizon` steps.
pub fn idoc_check(spec: &IetSpec, horizon: usize) -> bool {
    let d1 = spec.len_a.clone();
    let d2 = &spec.len_a + &spec.len_b;
    for start in [&d1, &d2] {
        let mut fwd = start.clone();
        let mut bwd = start.clone();
        for _ in 0..horizon {
            fwd = spec.transform(&fwd);
            bwd = spec.inverse_transform(&bwd);
            if fwd == d1 || fwd == d2 || bwd == d1 || bwd == d2 {
                return false;
            }
        }
    }
    true
}

impl SturmianContext {
    /// Exact three-interval-exchange parameters whose natural coding is the
    /// derivated sequence of the Rote sequence at its `n`-th bispecial prefix.
    ///
    /// With `alpha` the slope of the derivated Sturmian sequence (frequency of
    /// the most frequent return word, always above 1/2):
    /// `SU(k)` uses lengths `(alpha, alpha - k(1-alpha), ...)` and order
    /// `(3,2,1)`; `US(k)` uses `(2 alpha - 1, 1 - alpha, ...)` and `(3,2,1)`;
    /// `UU(k)` the same lengths with order `(2,3,1)`. The coded point is
    /// `1 - alpha`.
    pub fn iet3_params(&self, n: usize) -> IetSpec {
        let ty = self.prefix_type(n);
        let alpha = crate::sturmian::slope(&self.normalized_shift(n))
            .expect("context directive is valid, so every shift has a slope");
        let one = QuadraticNumber::one();
        let co = &one - &alpha;
        let (len_a, len_b, permutation) = match ty.kind {
            crate::rote::PrefixKind::SU => {
                let k = QuadraticNumber::from_integer(i64::from(ty.k));
                (alpha.clone(), &alpha - &(&k * &co), Permutation::P321)
            }
            crate::rote::PrefixKind::US => {
                (&(&alpha + &alpha) - &one, co.clone(), Permutation::P321)
            }
            crate::rote::PrefixKind::UU => {
                (&(&alpha + &alpha) - &one, co.clone(), Permutation::P231)
            }
        };
        let len_c = &(&one - &len_a) - &len_b;
        IetSpec::new(len_a, len_b, len_c, permutation, co)
            .expect("derived parameters always partition the unit interval")
    }
}
