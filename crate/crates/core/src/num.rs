//! Exact scalar types and small vector helpers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision integer.
pub type Int = BigInt;
/// Arbitrary-precision rational number.
pub type Rational = BigRational;
/// A point or direction in `Q^r`.
pub type RatVec = Vec<Rational>;
/// A vector of `Z^r`.
pub type IntVec = Vec<Int>;

pub fn int(n: i64) -> Int {
    Int::from(n)
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

pub fn rat_int(n: &Int) -> Rational {
    Rational::from_integer(n.clone())
}

pub fn int_vec(v: &[i64]) -> IntVec {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn rat_vec(v: &[i64]) -> RatVec {
    v.iter().map(|&x| rat(x, 1)).collect()
}

pub fn to_rat_vec(v: &[Int]) -> RatVec {
    v.iter().map(rat_int).collect()
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().ok()?;
            let d: Int = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<Int>().ok().map(Rational::from_integer),
    }
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `<u, x>` for an integer covector and a rational point.
pub fn dot_int_rat(u: &[Int], x: &[Rational]) -> Rational {
    u.iter()
        .zip(x)
        .map(|(a, b)| b * rat_int(a))
        .sum()
}

pub fn gcd_all(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Divides by the gcd of the entries; zero stays zero.
pub fn primitive(v: &[Int]) -> IntVec {
    let g = gcd_all(v);
    if g.is_zero() || g.is_one() {
        v.to_vec()
    } else {
        v.iter().map(|x| x / &g).collect()
    }
}

/// Scales a rational vector by a positive factor to a primitive integer vector.
pub fn primitive_of_rational(v: &[Rational]) -> IntVec {
    let lcm = v
        .iter()
        .fold(Int::one(), |l, x| l.lcm(x.denom()));
    let scaled: IntVec = v.iter().map(|x| (x * rat_int(&lcm)).to_integer()).collect();
    primitive(&scaled)
}

/// Clears denominators with a positive factor, without dividing by the content.
pub fn clear_denominators(v: &[Rational]) -> (IntVec, Int) {
    let lcm = v
        .iter()
        .fold(Int::one(), |l, x| l.lcm(x.denom()));
    let scaled = v.iter().map(|x| (x * rat_int(&lcm)).to_integer()).collect();
    (scaled, lcm)
}

pub fn is_zero_vec<T: Zero>(v: &[T]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Sign of the first nonzero entry: makes `v` and `-v` comparable.
pub fn normalize_sign(v: &mut [Int]) -> bool {
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in v.iter_mut() {
                *x = -x.clone();
            }
            return true;
        }
    }
    false
}

/// `(a, b, c)` using each entry's `Display`.
pub fn format_vec<T: std::fmt::Display>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

pub fn floor_div(a: &Int, b: &Int) -> Int {
    a.div_floor(b)
}

pub fn factorial(n: usize) -> Int {
    (1..=n).fold(Int::one(), |acc, k| acc * Int::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("1/3"), Some(rat(1, 3)));
        assert_eq!(parse_rational("-4/6"), Some(rat(-2, 3)));
        assert_eq!(parse_rational("7"), Some(rat(7, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn primitive_scaling() {
        assert_eq!(primitive_of_rational(&[rat(1, 2), rat(1, 3)]), int_vec(&[3, 2]));
        assert_eq!(primitive(&int_vec(&[4, -6])), int_vec(&[2, -3]));
        assert_eq!(primitive(&int_vec(&[0, 0])), int_vec(&[0, 0]));
    }
}
