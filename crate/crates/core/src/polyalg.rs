//! Sparse multivariate polynomials over exact rationals in the fixed
//! variables `x`, `y`, `z`, plus truncated univariate power series.
//!
//! Polynomials are canonical: the term map holds no zero coefficients, so two
//! polynomials are equal exactly when their maps are structurally equal.
//! There is no probabilistic equality and no division; negative exponents are
//! unrepresentable by construction.

pub mod series;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{pow_table, Rat};

/// Exponent triple of a monomial `x^x y^y z^z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Exponents {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Exponents {
    pub const fn new(x: u32, y: u32, z: u32) -> Self {
        Exponents { x, y, z }
    }

    pub fn total_degree(&self) -> u32 {
        self.x + self.y + self.z
    }
}

// Graded lexicographic order on (x, y, z); fixes term order everywhere,
// including the serialized form.
impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then(self.x.cmp(&other.x))
            .then(self.y.cmp(&other.y))
            .then(self.z.cmp(&other.z))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `x`, `y`, `z` over `Rat`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, Rat>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut poly = MultiPoly::zero();
        poly.add_term(Exponents::new(0, 0, 0), c);
        poly
    }

    pub fn var_x() -> Self {
        MultiPoly::monomial(Exponents::new(1, 0, 0), Rat::one())
    }

    pub fn var_y() -> Self {
        MultiPoly::monomial(Exponents::new(0, 1, 0), Rat::one())
    }

    pub fn var_z() -> Self {
        MultiPoly::monomial(Exponents::new(0, 0, 1), Rat::one())
    }

    pub fn monomial(e: Exponents, c: Rat) -> Self {
        let mut poly = MultiPoly::zero();
        poly.add_term(e, c);
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rat)> {
        self.terms.iter()
    }

    /// Adds `c * x^e` into the map, dropping the entry if it cancels.
    pub fn add_term(&mut self, e: Exponents, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut result = self.clone();
        for (e, c) in &other.terms {
            result.add_term(*e, c.clone());
        }
        result
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut result = self.clone();
        for (e, c) in &other.terms {
            result.add_term(*e, -c.clone());
        }
        result
    }

    pub fn negate(&self) -> Self {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut result = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = Exponents::new(ea.x + eb.x, ea.y + eb.y, ea.z + eb.z);
                result.add_term(e, ca * cb);
            }
        }
        result
    }

    /// Binary exponentiation; `p^0 = 1` including for the zero polynomial.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut result = MultiPoly::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact substitution. Evaluation is a ring homomorphism.
    pub fn eval(&self, x: &Rat, y: &Rat, z: &Rat) -> Rat {
        let (mut mx, mut my, mut mz) = (0, 0, 0);
        for e in self.terms.keys() {
            mx = mx.max(e.x);
            my = my.max(e.y);
            mz = mz.max(e.z);
        }
        let xs = pow_table(x, mx);
        let ys = pow_table(y, my);
        let zs = pow_table(z, mz);
        let mut total = Rat::zero();
        for (e, c) in &self.terms {
            total += c * &xs[e.x as usize] * &ys[e.y as usize] * &zs[e.z as usize];
        }
        total
    }

    /// Substitutes a rational value for `z`, folding it into coefficients.
    pub fn subst_z(&self, value: &Rat) -> MultiPoly {
        let mz = self.terms.keys().map(|e| e.z).max().unwrap_or(0);
        let zs = pow_table(value, mz);
        let mut result = MultiPoly::zero();
        for (e, c) in &self.terms {
            result.add_term(Exponents::new(e.x, e.y, 0), c * &zs[e.z as usize]);
        }
        result
    }

    /// Deterministic text form: terms in descending graded-lex order, each as
    /// `coef`, `coef*x^a`, `coef*x^a*y^b*z^c`, ... joined by ` + ` with signs
    /// carried by coefficients. The zero polynomial prints as `0`.
    pub fn to_canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut pieces = Vec::with_capacity(self.terms.len());
        for (e, c) in self.terms.iter().rev() {
            let mut s = c.to_string();
            for (name, exp) in [("x", e.x), ("y", e.y), ("z", e.z)] {
                if exp > 0 {
                    s.push('*');
                    s.push_str(name);
                    s.push('^');
                    s.push_str(&exp.to_string());
                }
            }
            pieces.push(s);
        }
        pieces.join(" + ")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, other: Self) -> MultiPoly {
        MultiPoly::add(self, other)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, other: Self) -> MultiPoly {
        MultiPoly::sub(self, other)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, other: Self) -> MultiPoly {
        MultiPoly::mul(self, other)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.negate()
    }
}
