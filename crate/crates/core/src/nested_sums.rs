//! Exact evaluation of multiple harmonic sums.
//!
//! `mhs` sums over strictly decreasing index chains, `mhss` over weakly
//! decreasing ones. Both, plus the parameterized star sums and the weighted
//! chain sums, are evaluated by a layered recursion that caches the inner
//! sums per (level, bound), so depth-4 sums at `n = 12` stay fast. The
//! [`naive`] submodule keeps the raw full enumeration as the ultimate oracle;
//! `shifted_mhss` stays enumerative on purpose since it plays the oracle role
//! for the shift identity.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rat;
use crate::sequences::SequenceTables;

/// A composition `(k_1, ..., k_r)` of positive integers indexing a nested
/// sum. The empty vector is allowed and denotes the empty composition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexVector(Vec<u32>);

impl IndexVector {
    /// Panics if any part is zero.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&k| k >= 1), "index vector parts must be >= 1");
        IndexVector(parts)
    }

    pub fn empty() -> Self {
        IndexVector(Vec::new())
    }

    /// `{1}_r`: the all-ones composition of depth `r`.
    pub fn ones(r: u32) -> Self {
        IndexVector(vec![1; r as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(k_1, ..., k_j)` for `0 <= j <= r`.
    pub fn prefix(&self, j: usize) -> IndexVector {
        IndexVector(self.0[..j].to_vec())
    }

    /// `(k_r, ..., k_j)` for `1 <= j <= r + 1`; `j = r + 1` is empty.
    pub fn reversed_suffix(&self, j: usize) -> IndexVector {
        IndexVector(self.0[j - 1..].iter().rev().copied().collect())
    }
}

impl std::fmt::Display for IndexVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, ")")
    }
}

fn inv_pow(i: u32, k: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::from(i).pow(k))
}

/// Layered evaluation shared by `mhs` and `mhss`. `layer[m]` holds the sum
/// over chains bounded by `m` of the levels processed so far, starting from
/// the constant-1 empty chain.
fn chain_layers(n: u32, k: &IndexVector, strict: bool) -> Rat {
    if k.is_empty() {
        return Rat::one();
    }
    let n = n as usize;
    let mut layer = vec![Rat::one(); n + 1];
    for &exponent in k.parts().iter().rev() {
        let mut next = vec![Rat::zero(); n + 1];
        let mut acc = Rat::zero();
        for i in 1..=n {
            let inner = if strict { &layer[i - 1] } else { &layer[i] };
            acc += inv_pow(i as u32, exponent) * inner;
            next[i] = acc.clone();
        }
        layer = next;
    }
    layer[n].clone()
}

/// Multiple harmonic sum over strict chains `n >= n_1 > ... > n_r > 0` of
/// `prod 1/n_j^(k_j)`. Empty composition gives 1; the sum is 0 when `n < r`.
pub fn mhs(n: u32, k: &IndexVector) -> Rat {
    chain_layers(n, k, true)
}

/// Multiple harmonic star sum: as [`mhs`] but over weak chains
/// `n >= n_1 >= ... >= n_r > 0`.
pub fn mhss(n: u32, k: &IndexVector) -> Rat {
    chain_layers(n, k, false)
}

/// Parameterized star sum over weak chains of depth `m` with all exponents 1
/// and weight `x^(n_m)` on the innermost index; depth 0 gives `x^n`.
pub fn star_ones_param(n: u32, m: u32, x: &Rat) -> Rat {
    if m == 0 {
        return x.pow(n as i32);
    }
    let n = n as usize;
    let mut layer = vec![Rat::zero(); n + 1];
    let mut acc = Rat::zero();
    let mut xp = Rat::one();
    for (i, slot) in layer.iter_mut().enumerate().skip(1) {
        xp *= x;
        acc += &xp / Rat::from(BigInt::from(i as u32));
        *slot = acc.clone();
    }
    for _ in 1..m {
        let mut next = vec![Rat::zero(); n + 1];
        let mut acc = Rat::zero();
        for i in 1..=n {
            acc += &layer[i] / Rat::from(BigInt::from(i as u32));
            next[i] = acc.clone();
        }
        layer = next;
    }
    layer[n].clone()
}

/// Weak-chain sum of `prod 1/(n_j + l)^(k_j)` over `n >= n_1 >= ... >= n_r > 0`,
/// by direct enumeration. This is the oracle side of the shift identity;
/// [`shift_identity_rhs`] must agree with it. Requires a nonempty composition.
pub fn shifted_mhss(n: u32, k: &IndexVector, l: u32) -> Rat {
    assert!(!k.is_empty(), "shifted_mhss needs a nonempty composition");
    fn recurse(upper: u32, parts: &[u32], l: u32, weight: &Rat, total: &mut Rat) {
        match parts.split_first() {
            None => *total += weight,
            Some((&k0, rest)) => {
                for i in 1..=upper {
                    let w = weight * inv_pow(i + l, k0);
                    recurse(i, rest, l, &w, total);
                }
            }
        }
    }
    let mut total = Rat::zero();
    recurse(n, k.parts(), l, &Rat::one(), &mut total);
    total
}

/// Alternating-sum expansion of [`shifted_mhss`]:
/// `(-1)^r sum_{j=0}^r (-1)^j mhss(n+l, (k_1..k_j)) mhs(l, (k_r..k_{j+1}))`.
pub fn shift_identity_rhs(n: u32, k: &IndexVector, l: u32) -> Rat {
    assert!(!k.is_empty(), "shift_identity_rhs needs a nonempty composition");
    let r = k.depth();
    let mut total = Rat::zero();
    for j in 0..=r {
        let term = mhss(n + l, &k.prefix(j)) * mhs(l, &k.reversed_suffix(j + 1));
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    if r.is_multiple_of(2) {
        total
    } else {
        -total
    }
}

/// Weak-chain sum of `(1 - w^(k_p)) / (k_1 ... k_p)` over
/// `n >= k_1 >= ... >= k_p >= 1`, evaluated as the difference of two
/// parameterized star sums. Requires `p >= 1`.
pub fn chain_sum_weighted(n: u32, p: u32, w: &Rat) -> Rat {
    assert!(p >= 1, "chain depth must be >= 1");
    star_ones_param(n, p, &Rat::one()) - star_ones_param(n, p, w)
}

/// Stirling/Bell expansion of the same chain sum:
/// `(-1)^(p-1) sum_{j=1}^n (1 - w^j) sum_{i=0}^{p-1} (-1)^i Y_i(n)/i! * s(j,p-i)/j!`.
pub fn chain_sum_stirling_bell(tables: &mut SequenceTables, n: u32, p: u32, w: &Rat) -> Rat {
    assert!(p >= 1, "chain depth must be >= 1");
    let mut outer = Rat::zero();
    let mut wj = Rat::one();
    for j in 1..=n {
        wj *= w;
        let weight = Rat::one() - &wj;
        if weight.is_zero() {
            continue;
        }
        let mut inner = Rat::zero();
        for i in 0..p {
            let term = tables.bell_number(i, n) * Rat::from(tables.stirling1u(j, p - i))
                / Rat::from(tables.factorial(i) * tables.factorial(j));
            if i % 2 == 0 {
                inner += term;
            } else {
                inner -= term;
            }
        }
        outer += weight * inner;
    }
    if (p - 1).is_multiple_of(2) {
        outer
    } else {
        -outer
    }
}

/// Full-enumeration references for the layered evaluators.
pub mod naive {
    use super::*;

    fn enumerate(upper: u32, exponents: &[u32], strict: bool, weight: &Rat, leaf: &mut dyn FnMut(u32, &Rat)) {
        match exponents.split_first() {
            None => leaf(upper, weight),
            Some((&k0, rest)) => {
                for i in 1..=upper {
                    let w = weight * inv_pow(i, k0);
                    let next_upper = if strict { i - 1 } else { i };
                    enumerate(next_upper, rest, strict, &w, leaf);
                }
            }
        }
    }

    pub fn mhs(n: u32, k: &IndexVector) -> Rat {
        let mut total = Rat::zero();
        enumerate(n, k.parts(), true, &Rat::one(), &mut |_, w| total += w);
        total
    }

    pub fn mhss(n: u32, k: &IndexVector) -> Rat {
        let mut total = Rat::zero();
        enumerate(n, k.parts(), false, &Rat::one(), &mut |_, w| total += w);
        total
    }

    /// Weight `x^innermost` applied at the leaves of the weak enumeration.
    pub fn star_ones_param(n: u32, m: u32, x: &Rat) -> Rat {
        if m == 0 {
            return x.pow(n as i32);
        }
        let mut total = Rat::zero();
        enumerate(n, IndexVector::ones(m).parts(), false, &Rat::one(), &mut |inner, w| {
            total += w * x.pow(inner as i32);
        });
        total
    }

    pub fn chain_sum_weighted(n: u32, p: u32, w: &Rat) -> Rat {
        assert!(p >= 1);
        let mut total = Rat::zero();
        enumerate(n, IndexVector::ones(p).parts(), false, &Rat::one(), &mut |inner, c| {
            total += c * (Rat::one() - w.pow(inner as i32));
        });
        total
    }
}
