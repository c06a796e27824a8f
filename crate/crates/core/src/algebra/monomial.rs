use std::fmt;

/// Largest number of ring variables (grid plus auxiliaries).
pub const MAX_VARS: usize = 48;

/// Dense exponent vector. Unused trailing slots stay zero, so two monomials
/// of the same ring compare and hash by their whole array.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: [u8; MAX_VARS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        exps: [0; MAX_VARS],
    };

    pub fn var(i: usize) -> Self {
        let mut m = Self::ONE;
        m.exps[i] = 1;
        m
    }

    pub fn from_exponents(exps: &[u8]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Self::ONE;
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    /// Squarefree monomial with the variables set in `mask`.
    pub fn from_mask(mut mask: u64) -> Self {
        let mut m = Self::ONE;
        while mask != 0 {
            m.exps[mask.trailing_zeros() as usize] = 1;
            mask &= mask - 1;
        }
        m
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u8 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u8; MAX_VARS] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        out
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for (a, b) in out.exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).max(*b);
        }
        out
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Bitmask of variables with positive exponent.
    pub fn support(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0u64, |acc, (i, _)| acc | 1 << i)
    }

    /// Moves every exponent `shift` slots towards higher indices.
    pub(crate) fn shifted_up(&self, shift: usize) -> Monomial {
        let mut out = Self::ONE;
        out.exps[shift..].copy_from_slice(&self.exps[..MAX_VARS - shift]);
        out
    }

    /// Inverse of [`Monomial::shifted_up`]; `None` if a dropped slot is used.
    pub(crate) fn shifted_down(&self, shift: usize) -> Option<Monomial> {
        if self.exps[..shift].iter().any(|&e| e > 0) {
            return None;
        }
        let mut out = Self::ONE;
        out.exps[..MAX_VARS - shift].copy_from_slice(&self.exps[shift..]);
        Some(out)
    }

    pub(crate) fn highest_used(&self) -> Option<usize> {
        self.exps.iter().rposition(|&e| e > 0)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let used = self.highest_used().map_or(0, |i| i + 1);
        write!(f, "Monomial({:?})", &self.exps[..used])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Monomial::from_exponents(&[1, 2, 0]);
        let b = Monomial::from_exponents(&[0, 1, 1]);
        assert_eq!(a.mul(&b), Monomial::from_exponents(&[1, 3, 1]));
        assert_eq!(a.lcm(&b), Monomial::from_exponents(&[1, 2, 1]));
        assert_eq!(a.div(&b), None);
        assert_eq!(
            a.div(&Monomial::var(1)),
            Some(Monomial::from_exponents(&[1, 1]))
        );
        assert!(!a.is_coprime(&b));
        assert!(Monomial::var(0).is_coprime(&b));
        assert_eq!(b.support(), 0b110);
        assert_eq!(Monomial::from_mask(0b110), b);
        assert!(!a.is_squarefree());
        assert_eq!(a.degree(), 3);
    }

    #[test]
    fn shifting() {
        let a = Monomial::from_exponents(&[1, 2]);
        let up = a.shifted_up(1);
        assert_eq!(up, Monomial::from_exponents(&[0, 1, 2]));
        assert_eq!(up.shifted_down(1), Some(a));
        assert_eq!(a.shifted_down(1), None);
    }
}
