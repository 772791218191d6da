//! Exact scalars of the form `a + b√5` with rational `a`, `b`.
//!
//! Crystallographic root systems only ever produce values with `b = 0`;
//! the types built on `m(s,t) = 5` edges (H3, H4, I2(5)) need the golden
//! ratio `(1 + √5)/2`. Keeping a single type for both fields means the
//! arithmetic, comparisons, and serialization never branch on the ambient
//! system. All comparisons are decided by rational arithmetic alone.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// An element of `ℚ(√5)`, stored as `rat + gold·√5`.
#[derive(Clone, PartialEq, Eq)]
pub struct Scalar {
    rat: BigRational,
    gold: BigRational,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { rat: BigRational::zero(), gold: BigRational::zero() }
    }

    pub fn one() -> Self {
        Scalar { rat: BigRational::one(), gold: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { rat: BigRational::from_integer(BigInt::from(n)), gold: BigRational::zero() }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar {
            rat: BigRational::new(BigInt::from(num), BigInt::from(den)),
            gold: BigRational::zero(),
        }
    }

    pub fn from_parts(rat: BigRational, gold: BigRational) -> Self {
        Scalar { rat, gold }
    }

    /// The golden ratio `φ = (1 + √5)/2`, which satisfies `φ² = φ + 1`.
    pub fn golden_ratio() -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        Scalar { rat: half.clone(), gold: half }
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rat
    }

    pub fn golden_part(&self) -> &BigRational {
        &self.gold
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.gold.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.gold.is_zero()
    }

    /// Sign of `rat + gold·√5`, decided without leaving `ℚ`.
    ///
    /// When the two parts disagree in sign the comparison reduces to
    /// `rat² <=> 5·gold²`, which is exact.
    pub fn sign(&self) -> Ordering {
        let sr = rational_sign(&self.rat);
        let sg = rational_sign(&self.gold);
        match (sr, sg) {
            (Ordering::Equal, Ordering::Equal) => Ordering::Equal,
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            (Ordering::Greater, Ordering::Less) | (Ordering::Less, Ordering::Greater) => {
                // rat and gold·√5 compete; compare squares.
                let five = BigRational::from_integer(BigInt::from(5));
                let lhs = &self.rat * &self.rat;
                let rhs = five * &self.gold * &self.gold;
                match lhs.cmp(&rhs) {
                    Ordering::Equal => Ordering::Equal, // impossible: √5 irrational, kept for totality
                    Ordering::Greater => sr,
                    Ordering::Less => sg,
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Ordering::Less
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero scalar");
        // (a + b√5)⁻¹ = (a − b√5) / (a² − 5b²); the norm is nonzero for
        // nonzero elements since √5 is irrational.
        let five = BigRational::from_integer(BigInt::from(5));
        let norm = &self.rat * &self.rat - five * &self.gold * &self.gold;
        Scalar { rat: &self.rat / &norm, gold: -(&self.gold / &norm) }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

fn rational_sign(r: &BigRational) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else if r.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).sign()
    }
}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rat.hash(state);
        self.gold.hash(state);
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                let ($a, $b) = (self, rhs);
                $body
            }
        }
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                let ($a, $b) = (self.clone(), rhs.clone());
                $body
            }
        }
    };
}

forward_binop!(Add, add, |a, b| Scalar { rat: a.rat + b.rat, gold: a.gold + b.gold });
forward_binop!(Sub, sub, |a, b| Scalar { rat: a.rat - b.rat, gold: a.gold - b.gold });
forward_binop!(Mul, mul, |a, b| {
    // (a₀ + a₁√5)(b₀ + b₁√5) = a₀b₀ + 5a₁b₁ + (a₀b₁ + a₁b₀)√5
    let five = BigRational::from_integer(BigInt::from(5));
    Scalar {
        rat: &a.rat * &b.rat + five * &a.gold * &b.gold,
        gold: &a.rat * &b.gold + &a.gold * &b.rat,
    }
});
forward_binop!(Div, div, |a, b| a * b.recip());

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { rat: -self.rat, gold: -self.gold }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { rat: -self.rat.clone(), gold: -self.gold.clone() }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = self.clone() + rhs;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = self.clone() - rhs;
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = self.clone() * rhs;
    }
}

/// Serialized form: `p/q` when rational, `(p/q)+(r/s)√5` otherwise.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gold.is_zero() {
            write!(f, "{}/{}", self.rat.numer(), self.rat.denom())
        } else {
            write!(
                f,
                "({}/{})+({}/{})√5",
                self.rat.numer(),
                self.rat.denom(),
                self.gold.numer(),
                self.gold.denom()
            )
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError(pub String);

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid scalar literal: {}", self.0)
    }
}

impl std::error::Error for ParseScalarError {}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        fn ratio(text: &str, whole: &str) -> Result<BigRational, ParseScalarError> {
            let (num, den) = text
                .split_once('/')
                .ok_or_else(|| ParseScalarError(whole.to_string()))?;
            let num: BigInt = num.parse().map_err(|_| ParseScalarError(whole.to_string()))?;
            let den: BigInt = den.parse().map_err(|_| ParseScalarError(whole.to_string()))?;
            if den.is_zero() {
                return Err(ParseScalarError(whole.to_string()));
            }
            Ok(BigRational::new(num, den))
        }

        if let Some(rest) = s.strip_suffix("√5") {
            // (p/q)+(r/s)√5
            let parts: Vec<&str> = rest.splitn(2, ")+(").collect();
            if parts.len() != 2 {
                return Err(ParseScalarError(s.to_string()));
            }
            let rat_text = parts[0].strip_prefix('(').ok_or_else(|| ParseScalarError(s.to_string()))?;
            let gold_text = parts[1].strip_suffix(')').ok_or_else(|| ParseScalarError(s.to_string()))?;
            Ok(Scalar { rat: ratio(rat_text, s)?, gold: ratio(gold_text, s)? })
        } else {
            Ok(Scalar { rat: ratio(s, s)?, gold: BigRational::zero() })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sc(n: i64, d: i64) -> Scalar {
        Scalar::from_ratio(n, d)
    }

    fn gold(a: (i64, i64), b: (i64, i64)) -> Scalar {
        Scalar::from_parts(
            BigRational::new(BigInt::from(a.0), BigInt::from(a.1)),
            BigRational::new(BigInt::from(b.0), BigInt::from(b.1)),
        )
    }

    #[test]
    fn golden_ratio_satisfies_its_equation() {
        let phi = Scalar::golden_ratio();
        assert_eq!(&phi * &phi, &phi + &Scalar::one());
    }

    #[test]
    fn sign_of_mixed_terms() {
        // 7/3 − (1/1)√5 > 0 since 49/9 > 5
        assert!(gold((7, 3), (-1, 1)).is_positive());
        // 2 − (1/1)√5 < 0 since 4 < 5
        assert!(gold((2, 1), (-1, 1)).is_negative());
        // −2 + √5 > 0
        assert!(gold((-2, 1), (1, 1)).is_positive());
        // −7/3 + √5 < 0
        assert!(gold((-7, 3), (1, 1)).is_negative());
        assert_eq!(Scalar::zero().sign(), Ordering::Equal);
    }

    #[test]
    fn display_round_trip() {
        for v in [sc(-3, 2), sc(0, 1), gold((1, 2), (-5, 7)), Scalar::golden_ratio()] {
            let text = v.to_string();
            let back: Scalar = text.parse().unwrap();
            assert_eq!(v, back, "round-tripping {text}");
        }
        assert_eq!(sc(-3, 2).to_string(), "-3/2");
        assert_eq!(Scalar::golden_ratio().to_string(), "(1/2)+(1/2)√5");
    }

    #[test]
    fn rejects_bad_literals() {
        for text in ["", "1", "1/0", "(1/2)+", "(1/2)+(1/3)", "x/y"] {
            assert!(text.parse::<Scalar>().is_err(), "{text} should not parse");
        }
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(a, b, c, d)| gold((a, b), (c, d)))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
            prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), &a * &b + &a * &c);
            if !a.is_zero() {
                prop_assert_eq!(a.clone() * a.recip(), Scalar::one());
            }
        }

        #[test]
        fn order_is_compatible_with_arithmetic(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
            if a < b {
                prop_assert!(&a + &c < &b + &c);
                if c.is_positive() {
                    prop_assert!(&a * &c < &b * &c);
                }
            }
        }

        #[test]
        fn sign_matches_float_approximation(a in arb_scalar()) {
            let approx = a.rational_part().numer().to_string().parse::<f64>().unwrap()
                / a.rational_part().denom().to_string().parse::<f64>().unwrap()
                + 5f64.sqrt()
                    * (a.golden_part().numer().to_string().parse::<f64>().unwrap()
                        / a.golden_part().denom().to_string().parse::<f64>().unwrap());
            if approx.abs() > 1e-6 {
                prop_assert_eq!(a.is_positive(), approx > 0.0);
            }
        }
    }
}
