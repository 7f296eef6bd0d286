//! Exact scalar sequence families: generalized, alternating and power-weighted
//! harmonic numbers, unsigned Stirling numbers of the first kind, partial and
//! complete Bell polynomials, and the harmonic Bell numbers `Y_k(n)` built
//! from them.
//!
//! Stirling numbers are kept as arbitrary-precision integers (they are
//! integral by their recurrence); everything else lives in `Rat`. No floating
//! point enters this module.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::Rat;

/// Memoized tables for the sequence families.
///
/// Tables grow monotonically, filled row-by-row on demand, and are never
/// evicted. `&mut self` on the getters only feeds the caches; the returned
/// values are pure functions of the arguments. The struct is `Send` and
/// cheap to build, so concurrent sweeps construct one instance per worker.
#[derive(Default)]
pub struct SequenceTables {
    /// order r -> [H_0^(r), H_1^(r), ...]
    harmonic: HashMap<u32, Vec<Rat>>,
    alt_harmonic: Vec<Rat>,
    /// row n -> [s(n,0), ..., s(n,n)]
    stirling: Vec<Vec<BigInt>>,
    /// k -> [Y_k(0), Y_k(1), ...]
    bell_numbers: HashMap<u32, Vec<Rat>>,
    factorials: Vec<BigInt>,
}

impl SequenceTables {
    pub fn new() -> Self {
        Self::default()
    }

    /// Generalized harmonic number `H_n^(r) = sum_{j=1}^n 1/j^r`, with
    /// `H_0^(r) = 0`. Requires `r >= 1`.
    pub fn harmonic(&mut self, n: u32, r: u32) -> Rat {
        assert!(r >= 1, "harmonic order must be >= 1");
        let column = self.harmonic.entry(r).or_insert_with(|| vec![Rat::zero()]);
        while column.len() <= n as usize {
            let j = column.len() as u32;
            let term = Rat::new(BigInt::one(), BigInt::from(j).pow(r));
            let next = column.last().unwrap() + term;
            column.push(next);
        }
        column[n as usize].clone()
    }

    /// Alternating harmonic number `sum_{j=1}^n (-1)^(j-1)/j`, zero at `n = 0`.
    pub fn alt_harmonic(&mut self, n: u32) -> Rat {
        if self.alt_harmonic.is_empty() {
            self.alt_harmonic.push(Rat::zero());
        }
        while self.alt_harmonic.len() <= n as usize {
            let j = self.alt_harmonic.len() as i64;
            let sign = if j % 2 == 1 { 1 } else { -1 };
            let term = Rat::new(BigInt::from(sign), BigInt::from(j));
            let next = self.alt_harmonic.last().unwrap() + term;
            self.alt_harmonic.push(next);
        }
        self.alt_harmonic[n as usize].clone()
    }

    /// Unsigned Stirling number of the first kind via
    /// `s(n,k) = s(n-1,k-1) + (n-1) s(n-1,k)` with `s(0,0) = 1` and
    /// `s(n,k) = 0` whenever `n < k` or exactly one of `n`, `k` is zero.
    pub fn stirling1u(&mut self, n: u32, k: u32) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        if self.stirling.is_empty() {
            self.stirling.push(vec![BigInt::one()]);
        }
        while self.stirling.len() <= n as usize {
            let m = self.stirling.len();
            let prev = &self.stirling[m - 1];
            let mut row = vec![BigInt::zero(); m + 1];
            for j in 1..=m {
                let mut value = prev[j - 1].clone();
                if j < m {
                    value += &prev[j] * BigInt::from(m as u64 - 1);
                }
                row[j] = value;
            }
            self.stirling.push(row);
        }
        self.stirling[n as usize][k as usize].clone()
    }

    /// Harmonic Bell number `Y_k(n) = Y_k(H_n, 1!H_n^(2), ..., (k-1)!H_n^(k))`.
    ///
    /// The column for `k` is filled entry-by-entry up to `n`, so lookups are
    /// independent of query order.
    pub fn bell_number(&mut self, k: u32, n: u32) -> Rat {
        loop {
            let len = self.bell_numbers.get(&k).map_or(0, |column| column.len());
            if len > n as usize {
                return self.bell_numbers[&k][n as usize].clone();
            }
            let m = len as u32;
            let args: Vec<Rat> = (1..=k)
                .map(|i| Rat::from(self.factorial(i - 1)) * self.harmonic(m, i))
                .collect();
            let value = bell_complete(&args);
            self.bell_numbers.entry(k).or_default().push(value);
        }
    }

    pub fn factorial(&mut self, n: u32) -> BigInt {
        if self.factorials.is_empty() {
            self.factorials.push(BigInt::one());
        }
        while self.factorials.len() <= n as usize {
            let m = self.factorials.len() as u64;
            let next = self.factorials.last().unwrap() * BigInt::from(m);
            self.factorials.push(next);
        }
        self.factorials[n as usize].clone()
    }
}

/// Binomial coefficient as an arbitrary-precision integer.
pub fn binomial(n: u32, k: u32) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Power-weighted harmonic partial sum `sum_{j=1}^n z^j / j^r`.
///
/// `z = 1` recovers `H_n^(r)`; `z = -1`, `r = 1` gives the negated
/// alternating harmonic number.
pub fn power_weighted_harmonic(n: u32, r: u32, z: &Rat) -> Rat {
    assert!(r >= 1, "order must be >= 1");
    let mut sum = Rat::zero();
    let mut zp = Rat::one();
    for j in 1..=n {
        zp *= z;
        sum += &zp / Rat::from(BigInt::from(j).pow(r));
    }
    sum
}

/// Complete Bell polynomial `Y_n(x_1, ..., x_n)` by the recurrence
/// `Y_n = sum_{j=0}^{n-1} C(n-1,j) x_{n-j} Y_j`, `Y_0 = 1`.
pub fn bell_complete(args: &[Rat]) -> Rat {
    let n = args.len();
    let mut values: Vec<Rat> = Vec::with_capacity(n + 1);
    values.push(Rat::one());
    for m in 1..=n {
        let mut acc = Rat::zero();
        for j in 0..m {
            acc += Rat::from(binomial(m as u32 - 1, j as u32)) * &args[m - j - 1] * &values[j];
        }
        values.push(acc);
    }
    values[n].clone()
}

/// Partial Bell polynomial `B_{n,k}(x_1, ...)` by the recurrence
/// `B_{n,k} = sum_{j=1}^{n-k+1} C(n-1,j-1) x_j B_{n-j,k-1}`, with
/// `B_{0,0} = 1` and `B_{n,0} = B_{0,k} = 0` for `n, k >= 1`.
///
/// Requires `args.len() + k >= n + 1` when `k <= n` (the recurrence reads
/// `x_1 ... x_{n-k+1}`).
pub fn bell_partial(n: u32, k: u32, args: &[Rat]) -> Rat {
    if k > n {
        return Rat::zero();
    }
    if n == 0 {
        return Rat::one(); // B_{0,0}
    }
    if k == 0 {
        return Rat::zero();
    }
    assert!(
        args.len() as u32 > n - k,
        "bell_partial needs x_1..x_{}",
        n - k + 1
    );
    let (n, k) = (n as usize, k as usize);
    let mut table = vec![vec![Rat::zero(); k + 1]; n + 1];
    table[0][0] = Rat::one();
    for m in 1..=n {
        for i in 1..=m.min(k) {
            let mut acc = Rat::zero();
            for j in 1..=(m - i + 1) {
                acc += Rat::from(binomial(m as u32 - 1, j as u32 - 1))
                    * &args[j - 1]
                    * &table[m - j][i - 1];
            }
            table[m][i] = acc;
        }
    }
    table[n][k].clone()
}
