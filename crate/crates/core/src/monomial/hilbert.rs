use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::Serialize;

use super::{minimize, MonomialIdeal};
use crate::algebra::Monomial;
use crate::error::{Error, Result};

/// `N(t) / (1-t)^d` in lowest terms: `(1-t)` does not divide `N` unless
/// `N = 0`, in which case `d = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    numerator: Vec<BigInt>,
    pole: usize,
}

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// `p · (1-t)^k`.
fn times_one_minus_t(p: &[BigInt], k: usize) -> Vec<BigInt> {
    let mut out = p.to_vec();
    for _ in 0..k {
        out.push(BigInt::zero());
        for i in (1..out.len()).rev() {
            let prev = out[i - 1].clone();
            out[i] -= prev;
        }
    }
    out
}

/// Binomial coefficient in exact integers.
pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

impl HilbertSeries {
    pub fn new(numerator: Vec<BigInt>, pole: usize) -> Self {
        let mut numerator = numerator;
        let mut pole = pole;
        trim(&mut numerator);
        if numerator.is_empty() {
            return HilbertSeries { numerator, pole: 0 };
        }
        while pole > 0 && numerator.iter().sum::<BigInt>().is_zero() {
            // N = (1-t) Q with Q's coefficients the prefix sums of N.
            let mut q = Vec::with_capacity(numerator.len() - 1);
            let mut acc = BigInt::zero();
            for c in &numerator[..numerator.len() - 1] {
                acc += c;
                q.push(acc.clone());
            }
            numerator = q;
            trim(&mut numerator);
            pole -= 1;
        }
        HilbertSeries { numerator, pole }
    }

    pub fn from_i64(numerator: &[i64], pole: usize) -> Self {
        Self::new(numerator.iter().map(|&c| BigInt::from(c)).collect(), pole)
    }

    pub fn zero() -> Self {
        HilbertSeries {
            numerator: Vec::new(),
            pole: 0,
        }
    }

    /// `1 / (1-t)^k`, the series of a polynomial ring in `k` variables.
    pub fn free(k: usize) -> Self {
        Self::new(vec![BigInt::one()], k)
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    pub fn pole(&self) -> usize {
        self.pole
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// `N(1)`.
    pub fn at_one(&self) -> BigInt {
        self.numerator.iter().sum()
    }

    fn combine(&self, other: &Self, sign: i32) -> Self {
        let d = self.pole.max(other.pole);
        let a = times_one_minus_t(&self.numerator, d - self.pole);
        let b = times_one_minus_t(&other.numerator, d - other.pole);
        let len = a.len().max(b.len());
        let num = (0..len)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_default();
                let y = b.get(i).cloned().unwrap_or_default();
                if sign > 0 {
                    x + y
                } else {
                    x - y
                }
            })
            .collect();
        Self::new(num, d)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    /// First `len` coefficients of the power series expansion.
    pub fn expand(&self, len: usize) -> Vec<BigInt> {
        (0..len)
            .map(|k| {
                self.numerator
                    .iter()
                    .enumerate()
                    .take(k + 1)
                    .map(|(i, c)| {
                        let j = (k - i) as u64;
                        let ways = if self.pole == 0 {
                            BigInt::from((j == 0) as u8)
                        } else {
                            binomial(j + self.pole as u64 - 1, self.pole as u64 - 1)
                        };
                        c * ways
                    })
                    .sum()
            })
            .collect()
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut terms = Vec::new();
        for (i, c) in self.numerator.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match i {
                0 => mag.to_string(),
                1 if mag.is_one() => "t".to_string(),
                1 => format!("{mag}t"),
                _ if mag.is_one() => format!("t^{i}"),
                _ => format!("{mag}t^{i}"),
            };
            let sign = if c.is_negative() { "-" } else { "+" };
            terms.push((sign, body));
        }
        let mut num = String::new();
        for (k, (sign, body)) in terms.iter().enumerate() {
            match (k, *sign) {
                (0, "-") => num.push_str(&format!("-{body}")),
                (0, _) => num.push_str(body),
                (_, s) => num.push_str(&format!(" {s} {body}")),
            }
        }
        write!(f, "({num})/(1-t)^{}", self.pole)
    }
}

/// Coefficient as a JSON number when it fits in an `i64`, a string otherwise.
#[derive(Serialize)]
#[serde(untagged)]
enum Coefficient {
    Small(i64),
    Big(String),
}

impl Serialize for HilbertSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coeffs: Vec<Coefficient> = self
            .numerator
            .iter()
            .map(|c| match c.to_i64() {
                Some(v) => Coefficient::Small(v),
                None => Coefficient::Big(c.to_string()),
            })
            .collect();
        let mut st = s.serialize_struct("HilbertSeries", 2)?;
        st.serialize_field("numerator", &coeffs)?;
        st.serialize_field("pole", &self.pole)?;
        st.end()
    }
}

/// Hilbert series of `S / I`.
///
/// Works on the unreduced numerator `K(I)` over `(1-t)^{#vars}` with
/// `K(I) = K(I + (x)) + t·K(I : x)` for a most frequent variable `x` (ties to
/// the smallest index), stopping when the generators are pairwise coprime
/// (`K = Π (1 - t^{deg g})`), and reduces at the end.
pub fn hilbert_series(i: &MonomialIdeal) -> HilbertSeries {
    let k = kpoly(i.generators().to_vec(), i.nvars());
    HilbertSeries::new(k.into_iter().map(BigInt::from).collect(), i.nvars())
}

/// Unreduced numerator over `(1-t)^{nvars}`, coefficients by degree.
pub(crate) fn kpoly(gens: Vec<Monomial>, nvars: usize) -> Vec<i128> {
    let gens = minimize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return Vec::new();
    }
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(a, g)| gens[a + 1..].iter().all(|h| g.is_coprime(h)));
    if coprime {
        let mut acc = vec![1i128];
        for g in &gens {
            let d = g.degree() as usize;
            let mut next = vec![0i128; acc.len() + d];
            for (i, c) in acc.iter().enumerate() {
                next[i] += c;
                next[i + d] -= c;
            }
            acc = next;
        }
        return acc;
    }
    let mut counts = vec![0usize; nvars];
    for g in &gens {
        for (v, count) in counts.iter_mut().enumerate() {
            if g.exponent(v) > 0 {
                *count += 1;
            }
        }
    }
    // First index among the maxima.
    let pivot = counts
        .iter()
        .enumerate()
        .fold(0, |best, (v, &c)| if c > counts[best] { v } else { best });
    let x = Monomial::var(pivot);

    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|g| g.exponent(pivot) == 0)
        .copied()
        .collect();
    plus.push(x);
    let colon: Vec<Monomial> = gens.iter().map(|g| g.div(&x).unwrap_or(*g)).collect();

    let a = kpoly(plus, nvars);
    let b = kpoly(colon, nvars);
    let mut out = vec![0i128; a.len().max(b.len() + 1)];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i + 1] += c;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// The pole order of a reduced series.
pub fn krull_dimension(h: &HilbertSeries) -> usize {
    h.pole()
}

/// `N(1)` of a reduced series.
pub fn multiplicity(h: &HilbertSeries) -> Result<u64> {
    if h.is_zero() {
        return Err(Error::ZeroModule);
    }
    let e = h.at_one();
    e.to_u64().ok_or(Error::SizeLimit {
        what: "multiplicity",
        size: usize::MAX,
        limit: u64::MAX as usize,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u8]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn principal_quadric() {
        let i = MonomialIdeal::new(4, [mono(&[1, 0, 0, 1])]);
        assert_eq!(hilbert_series(&i), HilbertSeries::from_i64(&[1, 1], 3));
    }

    #[test]
    fn polynomial_ring() {
        let i = MonomialIdeal::new(5, []);
        let h = hilbert_series(&i);
        assert_eq!(h, HilbertSeries::free(5));
        assert_eq!(krull_dimension(&h), 5);
        assert_eq!(multiplicity(&h).unwrap(), 1);
    }

    #[test]
    fn unit_ideal_is_zero() {
        let h = hilbert_series(&MonomialIdeal::new(3, [Monomial::ONE]));
        assert!(h.is_zero());
        assert_eq!(multiplicity(&h), Err(Error::ZeroModule));
    }

    #[test]
    fn reduction_to_lowest_terms() {
        // (1 - t^2) / (1-t)^4 = (1 + t) / (1-t)^3
        let h = HilbertSeries::from_i64(&[1, 0, -1], 4);
        assert_eq!(h.numerator(), &[BigInt::from(1), BigInt::from(1)]);
        assert_eq!(h.pole(), 3);
        assert_eq!(krull_dimension(&h), 3);
        assert_eq!(h.to_string(), "(1 + t)/(1-t)^3");
    }

    #[test]
    fn sums_cancel() {
        let a = HilbertSeries::from_i64(&[1, 3], 5);
        let b = HilbertSeries::free(2);
        assert_eq!(a.add(&b).sub(&b), a);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn expansion_counts_monomials() {
        // k[x, y]: degree d has d + 1 monomials.
        let h = HilbertSeries::free(2);
        let c: Vec<i64> = h.expand(5).iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(c, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn non_squarefree_pivot() {
        // k[x, y] / (x^2, xy): 1, then x, y, then y^2, y^3, ...
        let i = MonomialIdeal::new(2, [mono(&[2, 0]), mono(&[1, 1])]);
        let h = hilbert_series(&i);
        let c: Vec<i64> = h.expand(5).iter().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(c, vec![1, 2, 1, 1, 1]);
        assert_eq!(krull_dimension(&h), 1);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }
}
