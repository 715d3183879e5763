//! Exact scalars, exterior-word normalization and Koszul sign utilities.
//!
//! Everything downstream works over the integers; no floating point appears
//! anywhere in this crate. Coefficients are arbitrary-precision ([`Int`])
//! because integer normal forms of boundary matrices can produce large
//! intermediate entries even at small arity.

use num::BigInt;
use num::BigRational;

use crate::error::DgopError;

/// Exact integer scalar used for all formal linear combinations.
pub type Int = BigInt;
/// Exact rational scalar, used only inside rank/kernel computations.
pub type Rat = BigRational;

/// Input labels of operad elements. Labels are small positive integers
/// internally; arbitrary finite label sets are handled by explicit bijections
/// onto `1..=n`.
pub type Label = u32;

/// A normalized exterior monomial: strictly increasing labels with a sign,
/// or the distinguished zero value (sign `0`, no labels).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedWord {
    pub labels: Vec<Label>,
    /// `+1`, `-1`, or `0` for the zero word (which carries no labels).
    pub sign: i8,
}

impl SignedWord {
    pub fn zero() -> Self {
        SignedWord { labels: Vec::new(), sign: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }
}

/// Sorts `labels` into increasing order, returning the sign of the sorting
/// permutation, or the zero word if any label repeats.
pub fn normalize_word(labels: &[Label]) -> SignedWord {
    let mut v: Vec<Label> = labels.to_vec();
    // Count inversions while insertion-sorting; words here are short.
    let mut sign = 1i8;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return SignedWord::zero();
    }
    SignedWord { labels: v, sign }
}

/// Parity of the permutation `perm`, where `perm[p]` is the original index of
/// the item now at position `p`. Only pairs whose degrees are both odd count,
/// per the Koszul rule for the graded symmetry isomorphism.
///
/// Rejects non-bijective input.
pub fn koszul_sign(perm: &[usize], degrees: &[usize]) -> Result<i8, DgopError> {
    if perm.len() != degrees.len() {
        return Err(DgopError::NotABijection);
    }
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return Err(DgopError::NotABijection);
        }
        seen[p] = true;
    }
    Ok(koszul_sign_unchecked(perm, degrees))
}

pub(crate) fn koszul_sign_unchecked(perm: &[usize], degrees: &[usize]) -> i8 {
    let mut sign = 1i8;
    for p in 0..perm.len() {
        for q in (p + 1)..perm.len() {
            if perm[p] > perm[q] && degrees[perm[p]] % 2 == 1 && degrees[perm[q]] % 2 == 1 {
                sign = -sign;
            }
        }
    }
    sign
}

/// One interleaving of two sequences: `pattern[p]` is `Side::Left(i)` when
/// position `p` holds the `i`-th left item, `Side::Right(j)` for right items.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left(usize),
    Right(usize),
}

/// Enumerates all `C(p+q, p)` shuffles of two graded sequences, with the
/// Koszul sign of each relative to the concatenation `left · right`.
/// Enumeration is lexicographic in the position pattern (left item first).
pub fn graded_shuffles(
    left_degrees: &[usize],
    right_degrees: &[usize],
) -> Vec<(Vec<Side>, i8)> {
    let (p, q) = (left_degrees.len(), right_degrees.len());
    let mut out = Vec::new();
    let mut pattern: Vec<Side> = Vec::with_capacity(p + q);
    fn rec(
        li: usize,
        ri: usize,
        sign: i8,
        pattern: &mut Vec<Side>,
        ld: &[usize],
        rd: &[usize],
        out: &mut Vec<(Vec<Side>, i8)>,
    ) {
        let (p, q) = (ld.len(), rd.len());
        if li == p && ri == q {
            out.push((pattern.clone(), sign));
            return;
        }
        if li < p {
            pattern.push(Side::Left(li));
            rec(li + 1, ri, sign, pattern, ld, rd, out);
            pattern.pop();
        }
        if ri < q {
            // Right item `ri` jumps ahead of the remaining left items; each
            // odd-odd crossing contributes a sign.
            let mut s = sign;
            if rd[ri] % 2 == 1 {
                for &d in &ld[li..] {
                    if d % 2 == 1 {
                        s = -s;
                    }
                }
            }
            pattern.push(Side::Right(ri));
            rec(li, ri + 1, s, pattern, ld, rd, out);
            pattern.pop();
        }
    }
    rec(0, 0, 1, &mut pattern, left_degrees, right_degrees, &mut out);
    out
}

/// `(-1)^k` as an `i8`.
pub fn neg_one_pow(k: usize) -> i8 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_transposition() {
        let w = normalize_word(&[2, 1]);
        assert_eq!(w.labels, vec![1, 2]);
        assert_eq!(w.sign, -1);
    }

    #[test]
    fn normalize_repeat_is_zero() {
        assert!(normalize_word(&[1, 1]).is_zero());
        assert!(normalize_word(&[3, 1, 3]).is_zero());
    }

    #[test]
    fn normalize_even_permutation() {
        let w = normalize_word(&[3, 1, 2]);
        assert_eq!(w.labels, vec![1, 2, 3]);
        assert_eq!(w.sign, 1);
    }

    #[test]
    fn koszul_swap_of_odd_items() {
        // Two items of degree 1 transposed.
        assert_eq!(koszul_sign(&[1, 0], &[1, 1]).unwrap(), -1);
    }

    #[test]
    fn koszul_trivial_on_even() {
        assert_eq!(koszul_sign(&[2, 0, 1], &[0, 0, 0]).unwrap(), 1);
        assert_eq!(koszul_sign(&[1, 0], &[0, 2]).unwrap(), 1);
    }

    #[test]
    fn koszul_cyclic_shift() {
        // Degrees (1,1,0); item 0 moves past items 1 and 2. One odd-odd
        // crossing (with item 1) remains: sign -1.
        assert_eq!(koszul_sign(&[1, 2, 0], &[1, 1, 0]).unwrap(), -1);
    }

    #[test]
    fn koszul_rejects_non_bijection() {
        assert!(koszul_sign(&[0, 0], &[1, 1]).is_err());
        assert!(koszul_sign(&[0, 3], &[1, 1]).is_err());
    }

    #[test]
    fn shuffles_two_odd_singletons() {
        let sh = graded_shuffles(&[1], &[1]);
        assert_eq!(sh.len(), 2);
        assert_eq!(sh[0].0, vec![Side::Left(0), Side::Right(0)]);
        assert_eq!(sh[0].1, 1);
        assert_eq!(sh[1].0, vec![Side::Right(0), Side::Left(0)]);
        assert_eq!(sh[1].1, -1);
    }

    #[test]
    fn shuffles_two_even_singletons() {
        let sh = graded_shuffles(&[0], &[0]);
        assert_eq!(sh.len(), 2);
        assert!(sh.iter().all(|(_, s)| *s == 1));
    }

    #[test]
    fn shuffle_count_two_one() {
        assert_eq!(graded_shuffles(&[0, 0], &[0]).len(), 3);
    }

    #[test]
    fn koszul_multiplicative() {
        // sign(sigma composed with tau) = sign(sigma on permuted degrees) * sign(tau).
        let degrees = [1usize, 0, 1, 1];
        let tau = [2usize, 0, 3, 1];
        let sigma = [1usize, 3, 0, 2];
        // composite[p] = tau[sigma[p]]: apply tau first, then sigma on top.
        let composite: Vec<usize> = sigma.iter().map(|&p| tau[p]).collect();
        let deg_after_tau: Vec<usize> = tau.iter().map(|&p| degrees[p]).collect();
        let s_tau = koszul_sign(&tau, &degrees).unwrap();
        let s_sigma = koszul_sign(&sigma, &deg_after_tau).unwrap();
        let s_comp = koszul_sign(&composite, &degrees).unwrap();
        assert_eq!(s_comp, s_tau * s_sigma);
    }
}
