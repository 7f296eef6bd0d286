//! The identity catalog: every catalogued identity is constructed both as a
//! pair of polynomials in `x`, `y`, `z` (symbolic mode) and as a pair of
//! exact pointwise evaluators at rational parameters (pointwise mode).
//!
//! Symbolic equality at a given `n` is structural equality of canonical term
//! maps. Since both sides are polynomials, equality at `n` proves the
//! identity for all real (and complex) parameter values at that `n` — this is
//! what the conjecture scan relies on when it sweeps `n`.
//!
//! # Polynomial rewrites
//!
//! The catalogued right-hand sides are usually stated with negative powers of
//! `(x+y)` or `y`. Polynomials cannot represent those, so each right-hand
//! side is rewritten into a manifestly polynomial form before construction
//! (the unit tests check every rewrite against the literal form pointwise,
//! wherever the literal form is defined):
//!
//! * `(x+y)^n (1 - (y/(x+y))^j)` becomes `(x+y)^(n-j) ((x+y)^j - y^j)`
//!   (`MNEIMNEH_XY`, `THM_BELL`, `TMG_SQUARE`);
//! * the double sum `sum_j y^j (x+y)^(-j)/j sum_{i<=j} y^(-i)(x+y)^i/i`
//!   expands term-by-term into `y^(j-i) (x+y)^(n-j+i) / (j i)` with `i <= j`,
//!   so both exponents stay non-negative (`COR_H2ORD`, `COR_HSQ`).
//!
//! `CHAIN_REDUCTION` and `GENCEV` are pointwise-only: their right-hand sides
//! are nested chain sums whose polynomial form would need unbounded powers
//! cleared. The `GENCEV` weight is evaluated as
//! `(1-p)^(n_1 - n_r) ((1-p+zp)^(n_r) - (1-p)^(n_r))`, which removes the
//! division by `(1-p)^(n_r)`; the point `p = 1` stays excluded because the
//! identity is stated for `p != 1`.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::nested_sums::chain_sum_weighted;
use crate::polyalg::{Exponents, MultiPoly};
use crate::rational::{parse_rat, pow_table, Rat};
use crate::report::Status;
use crate::sequences::{binomial, power_weighted_harmonic, SequenceTables};

/// Identifier of a catalogued identity. The depth parameters are part of the
/// identity (`p >= 1` for the Bell family, `r >= 1` for the Gencev family).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityId {
    /// Binomial harmonic sum at probability weights `p^k (1-p)^(n-k)`.
    MneimnehP,
    /// Its two-variable homogenization with weights `x^k y^(n-k)`.
    MneimnehXy,
    /// Bell-number weights `Y_p(k)` of depth `p`.
    ThmBell(u32),
    /// Weight `H_k^2 + H_k^(2)` (the depth-2 Bell specialization).
    TmgSquare,
    /// Weight `sum_{j<=k} z^j / j` with `z` kept formal.
    ThmZ,
    /// Alternating harmonic weight.
    CorAlt,
    /// Alternating weight at probability parameters.
    CorAltP,
    /// Weight `H_k^(2)`.
    CorH2Ord,
    /// Weight `H_k^2`.
    CorHsq,
    /// The Bell-weighted sum against `p! (x+y)^n` times the weighted chain sum.
    ChainReduction(u32),
    /// Nested-sum closed form for weights `sum_{j<=k} z^j / j^r`.
    Gencev(u32),
}

impl IdentityId {
    pub fn tag(&self) -> String {
        match self {
            IdentityId::MneimnehP => "MNEIMNEH_P".into(),
            IdentityId::MneimnehXy => "MNEIMNEH_XY".into(),
            IdentityId::ThmBell(p) => format!("THM_BELL({p})"),
            IdentityId::TmgSquare => "TMG_SQUARE".into(),
            IdentityId::ThmZ => "THM_Z".into(),
            IdentityId::CorAlt => "COR_ALT".into(),
            IdentityId::CorAltP => "COR_ALT_P".into(),
            IdentityId::CorH2Ord => "COR_H2ORD".into(),
            IdentityId::CorHsq => "COR_HSQ".into(),
            IdentityId::ChainReduction(p) => format!("CHAIN_REDUCTION({p})"),
            IdentityId::Gencev(r) => format!("GENCEV({r})"),
        }
    }

    /// Chain and Gencev sums have no bounded-degree polynomial form.
    pub fn supports_symbolic(&self) -> bool {
        !matches!(self, IdentityId::ChainReduction(_) | IdentityId::Gencev(_))
    }

    fn check_depth(&self) -> Result<(), CatalogError> {
        match self {
            IdentityId::ThmBell(d) | IdentityId::ChainReduction(d) | IdentityId::Gencev(d)
                if *d == 0 =>
            {
                Err(CatalogError::BadDepth { id: self.tag() })
            }
            _ => Ok(()),
        }
    }
}

impl std::fmt::Display for IdentityId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.tag())
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CatalogError {
    #[error("{0} has no polynomial form; verify it pointwise")]
    SymbolicUnsupported(String),
    #[error("{id}: index n must be >= 1")]
    IndexOutOfRange { id: String },
    #[error("{id}: depth parameter must be >= 1")]
    BadDepth { id: String },
    #[error("{id}: missing parameter `{name}`")]
    MissingParam { id: String, name: char },
    #[error("{id}: {why}")]
    ParamDomain { id: String, why: String },
}

/// Rational parameter assignments for pointwise verification.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Params {
    pub x: Option<Rat>,
    pub y: Option<Rat>,
    pub z: Option<Rat>,
    pub p: Option<Rat>,
}

#[derive(Debug, Error, PartialEq)]
pub enum ParamParseError {
    #[error("expected `key=value`, got `{0}`")]
    BadPair(String),
    #[error("unknown parameter `{0}` (expected x, y, z or p)")]
    UnknownKey(String),
    #[error("duplicate parameter `{0}`")]
    Duplicate(String),
    #[error("bad rational for `{key}`: {source}")]
    BadValue {
        key: String,
        source: crate::rational::ParseRatError,
    },
}

impl Params {
    pub fn from_xy(x: Rat, y: Rat) -> Self {
        Params { x: Some(x), y: Some(y), ..Default::default() }
    }

    pub fn from_xyz(x: Rat, y: Rat, z: Rat) -> Self {
        Params { x: Some(x), y: Some(y), z: Some(z), ..Default::default() }
    }

    pub fn from_p(p: Rat) -> Self {
        Params { p: Some(p), ..Default::default() }
    }

    pub fn from_pz(p: Rat, z: Rat) -> Self {
        Params { p: Some(p), z: Some(z), ..Default::default() }
    }

    /// Parses `"x=1,y=-3,z=1/2,p=2/5"`; every key optional, none repeatable.
    pub fn parse(text: &str) -> Result<Self, ParamParseError> {
        let mut params = Params::default();
        for pair in text.split(',') {
            let pair = pair.trim();
            if pair.is_empty() {
                continue;
            }
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| ParamParseError::BadPair(pair.to_string()))?;
            let key = key.trim();
            let value = parse_rat(value).map_err(|source| ParamParseError::BadValue {
                key: key.to_string(),
                source,
            })?;
            let slot = match key {
                "x" => &mut params.x,
                "y" => &mut params.y,
                "z" => &mut params.z,
                "p" => &mut params.p,
                other => return Err(ParamParseError::UnknownKey(other.to_string())),
            };
            if slot.is_some() {
                return Err(ParamParseError::Duplicate(key.to_string()));
            }
            *slot = Some(value);
        }
        Ok(params)
    }

    fn need(&self, id: &IdentityId, name: char) -> Result<&Rat, CatalogError> {
        let slot = match name {
            'x' => &self.x,
            'y' => &self.y,
            'z' => &self.z,
            _ => &self.p,
        };
        slot.as_ref().ok_or_else(|| CatalogError::MissingParam { id: id.tag(), name })
    }
}

impl std::fmt::Display for Params {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (name, value) in [("x", &self.x), ("y", &self.y), ("z", &self.z), ("p", &self.p)] {
            if let Some(v) = value {
                if !first {
                    write!(f, ",")?;
                }
                write!(f, "{name}={v}")?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Verification mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Pointwise,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::Symbolic => "symbolic",
            Mode::Pointwise => "pointwise",
        })
    }
}

/// Outcome record of one verification run. `status` is `Verified` exactly
/// when the two serialized sides agree.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub params: Option<String>,
    pub n: u32,
    pub mode: Mode,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
    pub elapsed_ms: f64,
    pub reason: Option<String>,
}

/// The fixed pointwise sample set used when no parameters are supplied:
/// `(x, y, z, p)` per entry. Most entries violate `x/(x+y) >= 0` or `z < 1`
/// (entry 8 even sits on `x + y = 0`), probing well outside the region the
/// analytic derivations need; `p` is never 1.
pub const DEFAULT_POINTWISE_SAMPLES: [(&str, &str, &str, &str); 8] = [
    ("1", "-3", "3/2", "1/2"),
    ("1", "-3", "1/2", "-1/2"),
    ("-1/2", "2", "2", "2"),
    ("2/3", "1/3", "-5/2", "3/2"),
    ("-2", "3", "-1", "1/3"),
    ("5", "-1", "7/5", "-2"),
    ("-3", "1", "4/3", "2/3"),
    ("1/2", "-1/2", "1/3", "5/3"),
];

pub fn default_samples() -> Vec<Params> {
    DEFAULT_POINTWISE_SAMPLES
        .iter()
        .map(|(x, y, z, p)| Params {
            x: Some(parse_rat(x).unwrap()),
            y: Some(parse_rat(y).unwrap()),
            z: Some(parse_rat(z).unwrap()),
            p: Some(parse_rat(p).unwrap()),
        })
        .collect()
}

/// Whether a sample point lies in the identity's domain. The chain reduction
/// divides by `x + y` and the Gencev family excludes `p = 1`; everything else
/// is polynomial in its parameters. Sweeps use this to pick applicable
/// default samples — an explicitly requested out-of-domain point still gets
/// its distinct error instead of being skipped.
pub fn sample_in_domain(id: &IdentityId, params: &Params) -> bool {
    match id {
        IdentityId::ChainReduction(_) => match (&params.x, &params.y) {
            (Some(x), Some(y)) => !(x + y).is_zero(),
            _ => true,
        },
        IdentityId::Gencev(_) => params.p.as_ref().is_none_or(|p| !p.is_one()),
        _ => true,
    }
}

fn check_n(id: &IdentityId, n: u32) -> Result<(), CatalogError> {
    id.check_depth()?;
    if n == 0 {
        return Err(CatalogError::IndexOutOfRange { id: id.tag() });
    }
    Ok(())
}

fn rat_u32(n: u32) -> Rat {
    Rat::from(BigInt::from(n))
}

fn inv_u32(n: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::from(n))
}

fn poly_powers(base: &MultiPoly, n: u32) -> Vec<MultiPoly> {
    let mut powers = Vec::with_capacity(n as usize + 1);
    powers.push(MultiPoly::one());
    for _ in 0..n {
        powers.push(powers.last().unwrap().mul(base));
    }
    powers
}

fn y_monomial(j: u32) -> MultiPoly {
    MultiPoly::monomial(Exponents::new(0, j, 0), Rat::one())
}

/// `sum_k C(n,k) w(k) x^k y^(n-k)` as a polynomial.
fn weighted_binomial_poly(
    tables: &mut SequenceTables,
    n: u32,
    mut weight: impl FnMut(&mut SequenceTables, u32) -> Rat,
) -> MultiPoly {
    let mut poly = MultiPoly::zero();
    for k in 0..=n {
        let c = Rat::from(binomial(n, k)) * weight(tables, k);
        poly.add_term(Exponents::new(k, n - k, 0), c);
    }
    poly
}

/// `sum_k C(n,k) w(k) x^k (1-x)^(n-k)`: the probability form, with the
/// parameter carried by the variable `x`.
fn weighted_binomial_prob_poly(
    tables: &mut SequenceTables,
    n: u32,
    mut weight: impl FnMut(&mut SequenceTables, u32) -> Rat,
) -> MultiPoly {
    let one_minus_x = &MultiPoly::one() - &MultiPoly::var_x();
    let powers = poly_powers(&one_minus_x, n);
    let mut poly = MultiPoly::zero();
    for k in 0..=n {
        let c = Rat::from(binomial(n, k)) * weight(tables, k);
        let term = MultiPoly::monomial(Exponents::new(k, 0, 0), c);
        poly = poly.add(&term.mul(&powers[(n - k) as usize]));
    }
    poly
}

/// `sum_k C(n,k) w(k) x^k y^(n-k)` at rational `x`, `y`.
fn weighted_binomial_eval(
    tables: &mut SequenceTables,
    n: u32,
    x: &Rat,
    y: &Rat,
    mut weight: impl FnMut(&mut SequenceTables, u32) -> Rat,
) -> Rat {
    let xs = pow_table(x, n);
    let ys = pow_table(y, n);
    let mut total = Rat::zero();
    for k in 0..=n {
        total += Rat::from(binomial(n, k))
            * weight(tables, k)
            * &xs[k as usize]
            * &ys[(n - k) as usize];
    }
    total
}

/// `sum_{i=0}^{p-1} (-1)^i Y_i(n) s(j, p-i) / (i! j!)`: the per-`j`
/// coefficient of the Bell-weighted right-hand side.
fn bell_chain_coefficient(tables: &mut SequenceTables, n: u32, p: u32, j: u32) -> Rat {
    let mut acc = Rat::zero();
    for i in 0..p {
        let term = tables.bell_number(i, n) * Rat::from(tables.stirling1u(j, p - i))
            / Rat::from(tables.factorial(i) * tables.factorial(j));
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn bell_front_factor(tables: &mut SequenceTables, p: u32) -> Rat {
    let factorial = Rat::from(tables.factorial(p));
    if (p - 1).is_multiple_of(2) {
        factorial
    } else {
        -factorial
    }
}

/// The literal left-hand side of an identity as a polynomial.
pub fn lhs_poly(
    tables: &mut SequenceTables,
    id: &IdentityId,
    n: u32,
) -> Result<MultiPoly, CatalogError> {
    check_n(id, n)?;
    match id {
        IdentityId::MneimnehP => {
            Ok(weighted_binomial_prob_poly(tables, n, |t, k| t.harmonic(k, 1)))
        }
        IdentityId::MneimnehXy => Ok(weighted_binomial_poly(tables, n, |t, k| t.harmonic(k, 1))),
        IdentityId::ThmBell(p) => {
            let p = *p;
            Ok(weighted_binomial_poly(tables, n, |t, k| t.bell_number(p, k)))
        }
        IdentityId::TmgSquare => Ok(weighted_binomial_poly(tables, n, |t, k| {
            let h = t.harmonic(k, 1);
            &h * &h + t.harmonic(k, 2)
        })),
        IdentityId::ThmZ => {
            let mut poly = MultiPoly::zero();
            for k in 1..=n {
                let c = Rat::from(binomial(n, k));
                for j in 1..=k {
                    poly.add_term(Exponents::new(k, n - k, j), &c * inv_u32(j));
                }
            }
            Ok(poly)
        }
        IdentityId::CorAlt => Ok(weighted_binomial_poly(tables, n, |t, k| t.alt_harmonic(k))),
        IdentityId::CorAltP => {
            Ok(weighted_binomial_prob_poly(tables, n, |t, k| t.alt_harmonic(k)))
        }
        IdentityId::CorH2Ord => Ok(weighted_binomial_poly(tables, n, |t, k| t.harmonic(k, 2))),
        IdentityId::CorHsq => Ok(weighted_binomial_poly(tables, n, |t, k| {
            let h = t.harmonic(k, 1);
            &h * &h
        })),
        IdentityId::ChainReduction(_) | IdentityId::Gencev(_) => {
            Err(CatalogError::SymbolicUnsupported(id.tag()))
        }
    }
}

/// The right-hand side as a polynomial, in the rewritten (division-free)
/// form; see the module docs for the rewrites.
pub fn rhs_poly(
    tables: &mut SequenceTables,
    id: &IdentityId,
    n: u32,
) -> Result<MultiPoly, CatalogError> {
    check_n(id, n)?;
    let sum_xy = &MultiPoly::var_x() + &MultiPoly::var_y();
    match id {
        IdentityId::MneimnehP => {
            // sum_j (1 - (1-x)^j)/j
            let one_minus_x = &MultiPoly::one() - &MultiPoly::var_x();
            let powers = poly_powers(&one_minus_x, n);
            let mut poly = MultiPoly::zero();
            for j in 1..=n {
                let piece = &MultiPoly::one() - &powers[j as usize];
                poly = poly.add(&piece.scale(&inv_u32(j)));
            }
            Ok(poly)
        }
        IdentityId::MneimnehXy => {
            // (x+y)^n H_n - sum_j y^j (x+y)^(n-j)/j
            let spow = poly_powers(&sum_xy, n);
            let mut poly = spow[n as usize].scale(&tables.harmonic(n, 1));
            for j in 1..=n {
                let term = y_monomial(j).mul(&spow[(n - j) as usize]).scale(&inv_u32(j));
                poly = poly.sub(&term);
            }
            Ok(poly)
        }
        IdentityId::ThmBell(p) => {
            let p = *p;
            let spow = poly_powers(&sum_xy, n);
            let mut acc = MultiPoly::zero();
            for j in 1..=n {
                let c = bell_chain_coefficient(tables, n, p, j);
                if c.is_zero() {
                    continue;
                }
                let difference = &spow[j as usize] - &y_monomial(j);
                acc = acc.add(&spow[(n - j) as usize].mul(&difference).scale(&c));
            }
            Ok(acc.scale(&bell_front_factor(tables, p)))
        }
        IdentityId::TmgSquare => {
            // 2 sum_j (x+y)^(n-j) ((x+y)^j - y^j) (H_n - H_{j-1}) / j
            let spow = poly_powers(&sum_xy, n);
            let hn = tables.harmonic(n, 1);
            let mut poly = MultiPoly::zero();
            for j in 1..=n {
                let c = (&hn - tables.harmonic(j - 1, 1)) * rat_u32(2) * inv_u32(j);
                let difference = &spow[j as usize] - &y_monomial(j);
                poly = poly.add(&spow[(n - j) as usize].mul(&difference).scale(&c));
            }
            Ok(poly)
        }
        IdentityId::ThmZ => {
            // sum_j ((y + zx)^j - y^j) (x+y)^(n-j) / j
            let y_plus_zx = &MultiPoly::var_y()
                + &MultiPoly::monomial(Exponents::new(1, 0, 1), Rat::one());
            let spow = poly_powers(&sum_xy, n);
            let tpow = poly_powers(&y_plus_zx, n);
            let mut poly = MultiPoly::zero();
            for j in 1..=n {
                let difference = &tpow[j as usize] - &y_monomial(j);
                poly = poly.add(&difference.mul(&spow[(n - j) as usize]).scale(&inv_u32(j)));
            }
            Ok(poly)
        }
        IdentityId::CorAlt => {
            // sum_j (y^j - (y-x)^j) (x+y)^(n-j) / j
            let y_minus_x = &MultiPoly::var_y() - &MultiPoly::var_x();
            let spow = poly_powers(&sum_xy, n);
            let dpow = poly_powers(&y_minus_x, n);
            let mut poly = MultiPoly::zero();
            for j in 1..=n {
                let difference = &y_monomial(j) - &dpow[j as usize];
                poly = poly.add(&difference.mul(&spow[(n - j) as usize]).scale(&inv_u32(j)));
            }
            Ok(poly)
        }
        IdentityId::CorAltP => {
            // sum_j ((1-x)^j - (1-2x)^j)/j
            let one_minus_x = &MultiPoly::one() - &MultiPoly::var_x();
            let one_minus_2x = &MultiPoly::one() - &MultiPoly::var_x().scale(&rat_u32(2));
            let apow = poly_powers(&one_minus_x, n);
            let bpow = poly_powers(&one_minus_2x, n);
            let mut poly = MultiPoly::zero();
            for j in 1..=n {
                let difference = &apow[j as usize] - &bpow[j as usize];
                poly = poly.add(&difference.scale(&inv_u32(j)));
            }
            Ok(poly)
        }
        IdentityId::CorH2Ord => {
            let spow = poly_powers(&sum_xy, n);
            let mut poly = MultiPoly::zero();
            for j in 1..=n {
                for i in 1..=j {
                    let c = inv_u32(j) * inv_u32(i);
                    let term = y_monomial(j - i).mul(&spow[(n - j + i) as usize]).scale(&c);
                    poly = poly.add(&term);
                }
                let c = tables.harmonic(j, 1) * inv_u32(j);
                poly = poly.sub(&y_monomial(j).mul(&spow[(n - j) as usize]).scale(&c));
            }
            Ok(poly)
        }
        IdentityId::CorHsq => {
            let spow = poly_powers(&sum_xy, n);
            let hn = tables.harmonic(n, 1);
            let head = &hn * &hn + tables.harmonic(n, 2);
            let mut poly = spow[n as usize].scale(&head);
            for j in 1..=n {
                // -2/j^2 - 2 H_n / j + 3 H_j / j on y^j (x+y)^(n-j)
                let c = -rat_u32(2) * inv_u32(j) * inv_u32(j) - rat_u32(2) * &hn * inv_u32(j)
                    + rat_u32(3) * tables.harmonic(j, 1) * inv_u32(j);
                poly = poly.add(&y_monomial(j).mul(&spow[(n - j) as usize]).scale(&c));
                for i in 1..=j {
                    let c = inv_u32(j) * inv_u32(i);
                    let term = y_monomial(j - i).mul(&spow[(n - j + i) as usize]).scale(&c);
                    poly = poly.sub(&term);
                }
            }
            Ok(poly)
        }
        IdentityId::ChainReduction(_) | IdentityId::Gencev(_) => {
            Err(CatalogError::SymbolicUnsupported(id.tag()))
        }
    }
}

/// Exact left-hand-side value at rational parameters.
pub fn lhs_eval(
    tables: &mut SequenceTables,
    id: &IdentityId,
    n: u32,
    params: &Params,
) -> Result<Rat, CatalogError> {
    check_n(id, n)?;
    match id {
        IdentityId::MneimnehP => {
            let p = params.need(id, 'p')?.clone();
            let q = Rat::one() - &p;
            Ok(weighted_binomial_eval(tables, n, &p, &q, |t, k| t.harmonic(k, 1)))
        }
        IdentityId::MneimnehXy => {
            let (x, y) = (params.need(id, 'x')?.clone(), params.need(id, 'y')?.clone());
            Ok(weighted_binomial_eval(tables, n, &x, &y, |t, k| t.harmonic(k, 1)))
        }
        IdentityId::ThmBell(p) | IdentityId::ChainReduction(p) => {
            let depth = *p;
            let (x, y) = (params.need(id, 'x')?.clone(), params.need(id, 'y')?.clone());
            Ok(weighted_binomial_eval(tables, n, &x, &y, |t, k| t.bell_number(depth, k)))
        }
        IdentityId::TmgSquare => {
            let (x, y) = (params.need(id, 'x')?.clone(), params.need(id, 'y')?.clone());
            Ok(weighted_binomial_eval(tables, n, &x, &y, |t, k| {
                let h = t.harmonic(k, 1);
                &h * &h + t.harmonic(k, 2)
            }))
        }
        IdentityId::ThmZ => {
            let (x, y) = (params.need(id, 'x')?.clone(), params.need(id, 'y')?.clone());
            let z = params.need(id, 'z')?.clone();
            Ok(weighted_binomial_eval(tables, n, &x, &y, |_, k| {
                power_weighted_harmonic(k, 1, &z)
            }))
        }
        IdentityId::CorAlt => {
            let (x, y) = (params.need(id, 'x')?.clone(), params.need(id, 'y')?.clone());
            Ok(weighted_binomial_eval(tables, n, &x, &y, |t, k| t.alt_harmonic(k)))
        }
        IdentityId::CorAltP => {
            let p = params.need(id, 'p')?.clone();
            let q = Rat::one() - &p;
            Ok(weighted_binomial_eval(tables, n, &p, &q, |t, k| t.alt_harmonic(k)))
        }
        IdentityId::CorH2Ord => {
            let (x, y) = (params.need(id, 'x')?.clone(), params.need(id, 'y')?.clone());
            Ok(weighted_binomial_eval(tables, n, &x, &y, |t, k| t.harmonic(k, 2)))
        }
        IdentityId::CorHsq => {
            let (x, y) = (params.need(id, 'x')?.clone(), params.need(id, 'y')?.clone());
            Ok(weighted_binomial_eval(tables, n, &x, &y, |t, k| {
                let h = t.harmonic(k, 1);
                &h * &h
            }))
        }
        IdentityId::Gencev(r) => {
            let depth = *r;
            let p = params.need(id, 'p')?.clone();
            let z = params.need(id, 'z')?.clone();
            if p.is_one() {
                return Err(CatalogError::ParamDomain {
                    id: id.tag(),
                    why: "p = 1 is excluded".into(),
                });
            }
            let q = Rat::one() - &p;
            Ok(weighted_binomial_eval(tables, n, &p, &q, |_, k| {
                power_weighted_harmonic(k, depth, &z)
            }))
        }
    }
}

/// Exact right-hand-side value at rational parameters, using the same
/// division-free rewrites as [`rhs_poly`].
pub fn rhs_eval(
    tables: &mut SequenceTables,
    id: &IdentityId,
    n: u32,
    params: &Params,
) -> Result<Rat, CatalogError> {
    check_n(id, n)?;
    match id {
        IdentityId::MneimnehP => {
            let p = params.need(id, 'p')?.clone();
            let qpow = pow_table(&(Rat::one() - &p), n);
            let mut total = Rat::zero();
            for j in 1..=n {
                total += (Rat::one() - &qpow[j as usize]) * inv_u32(j);
            }
            Ok(total)
        }
        IdentityId::MneimnehXy => {
            let (x, y) = (params.need(id, 'x')?.clone(), params.need(id, 'y')?.clone());
            let spow = pow_table(&(&x + &y), n);
            let ypow = pow_table(&y, n);
            let mut total = &spow[n as usize] * tables.harmonic(n, 1);
            for j in 1..=n {
                total -= &ypow[j as usize] * &spow[(n - j) as usize] * inv_u32(j);
            }
            Ok(total)
        }
        IdentityId::ThmBell(p) => {
            let depth = *p;
            let (x, y) = (params.need(id, 'x')?.clone(), params.need(id, 'y')?.clone());
            let spow = pow_table(&(&x + &y), n);
            let ypow = pow_table(&y, n);
            let mut acc = Rat::zero();
            for j in 1..=n {
                let c = bell_chain_coefficient(tables, n, depth, j);
                acc += c
                    * &spow[(n - j) as usize]
                    * (&spow[j as usize] - &ypow[j as usize]);
            }
            Ok(acc * bell_front_factor(tables, depth))
        }
        IdentityId::TmgSquare => {
            let (x, y) = (params.need(id, 'x')?.clone(), params.need(id, 'y')?.clone());
            let spow = pow_table(&(&x + &y), n);
            let ypow = pow_table(&y, n);
            let hn = tables.harmonic(n, 1);
            let mut total = Rat::zero();
            for j in 1..=n {
                let c = (&hn - tables.harmonic(j - 1, 1)) * rat_u32(2) * inv_u32(j);
                total += c * &spow[(n - j) as usize] * (&spow[j as usize] - &ypow[j as usize]);
            }
            Ok(total)
        }
        IdentityId::ThmZ => {
            let (x, y) = (params.need(id, 'x')?.clone(), params.need(id, 'y')?.clone());
            let z = params.need(id, 'z')?.clone();
            let spow = pow_table(&(&x + &y), n);
            let ypow = pow_table(&y, n);
            let tpow = pow_table(&(&y + &z * &x), n);
            let mut total = Rat::zero();
            for j in 1..=n {
                total += (&tpow[j as usize] - &ypow[j as usize])
                    * &spow[(n - j) as usize]
                    * inv_u32(j);
            }
            Ok(total)
        }
        IdentityId::CorAlt => {
            let (x, y) = (params.need(id, 'x')?.clone(), params.need(id, 'y')?.clone());
            let spow = pow_table(&(&x + &y), n);
            let ypow = pow_table(&y, n);
            let dpow = pow_table(&(&y - &x), n);
            let mut total = Rat::zero();
            for j in 1..=n {
                total += (&ypow[j as usize] - &dpow[j as usize])
                    * &spow[(n - j) as usize]
                    * inv_u32(j);
            }
            Ok(total)
        }
        IdentityId::CorAltP => {
            let p = params.need(id, 'p')?.clone();
            let apow = pow_table(&(Rat::one() - &p), n);
            let bpow = pow_table(&(Rat::one() - rat_u32(2) * &p), n);
            let mut total = Rat::zero();
            for j in 1..=n {
                total += (&apow[j as usize] - &bpow[j as usize]) * inv_u32(j);
            }
            Ok(total)
        }
        IdentityId::CorH2Ord => {
            let (x, y) = (params.need(id, 'x')?.clone(), params.need(id, 'y')?.clone());
            let spow = pow_table(&(&x + &y), n);
            let ypow = pow_table(&y, n);
            let mut total = Rat::zero();
            for j in 1..=n {
                for i in 1..=j {
                    total += &ypow[(j - i) as usize]
                        * &spow[(n - j + i) as usize]
                        * inv_u32(j)
                        * inv_u32(i);
                }
                total -= tables.harmonic(j, 1)
                    * &ypow[j as usize]
                    * &spow[(n - j) as usize]
                    * inv_u32(j);
            }
            Ok(total)
        }
        IdentityId::CorHsq => {
            let (x, y) = (params.need(id, 'x')?.clone(), params.need(id, 'y')?.clone());
            let spow = pow_table(&(&x + &y), n);
            let ypow = pow_table(&y, n);
            let hn = tables.harmonic(n, 1);
            let mut total = &spow[n as usize] * (&hn * &hn + tables.harmonic(n, 2));
            for j in 1..=n {
                let c = -rat_u32(2) * inv_u32(j) * inv_u32(j) - rat_u32(2) * &hn * inv_u32(j)
                    + rat_u32(3) * tables.harmonic(j, 1) * inv_u32(j);
                total += c * &ypow[j as usize] * &spow[(n - j) as usize];
                for i in 1..=j {
                    total -= &ypow[(j - i) as usize]
                        * &spow[(n - j + i) as usize]
                        * inv_u32(j)
                        * inv_u32(i);
                }
            }
            Ok(total)
        }
        IdentityId::ChainReduction(p) => {
            let depth = *p;
            let (x, y) = (params.need(id, 'x')?.clone(), params.need(id, 'y')?.clone());
            let s = &x + &y;
            if s.is_zero() {
                return Err(CatalogError::ParamDomain {
                    id: id.tag(),
                    why: "x + y = 0 makes the chain weight y/(x+y) undefined".into(),
                });
            }
            let w = &y / &s;
            let front = Rat::from(tables.factorial(depth)) * s.pow(n as i32);
            Ok(front * chain_sum_weighted(n, depth, &w))
        }
        IdentityId::Gencev(r) => {
            let depth = *r;
            let p = params.need(id, 'p')?.clone();
            let z = params.need(id, 'z')?.clone();
            if p.is_one() {
                return Err(CatalogError::ParamDomain {
                    id: id.tag(),
                    why: "p = 1 is excluded".into(),
                });
            }
            Ok(gencev_nested_sum(n, depth, &p, &z))
        }
    }
}

/// Weak-chain sum `sum (1-p)^(n_1-n_r) ((1-p+zp)^(n_r) - (1-p)^(n_r)) / (n_1...n_r)`
/// over `n >= n_1 >= ... >= n_r >= 1`.
fn gencev_nested_sum(n: u32, r: u32, p: &Rat, z: &Rat) -> Rat {
    let q = Rat::one() - p;
    let u = &q + z * p;
    let qpow = pow_table(&q, n);
    let upow = pow_table(&u, n);

    fn walk(
        upper: u32,
        remaining: u32,
        first: Option<u32>,
        inv: &Rat,
        qpow: &[Rat],
        upow: &[Rat],
        total: &mut Rat,
    ) {
        for i in 1..=upper {
            let inv_i = inv * inv_u32(i);
            let outermost = first.unwrap_or(i);
            if remaining == 1 {
                *total += &inv_i
                    * &qpow[(outermost - i) as usize]
                    * (&upow[i as usize] - &qpow[i as usize]);
            } else {
                walk(i, remaining - 1, Some(outermost), &inv_i, qpow, upow, total);
            }
        }
    }

    let mut total = Rat::zero();
    walk(n, r, None, &Rat::one(), &qpow, &upow, &mut total);
    total
}

/// Runs one verification and packages the outcome; errors become FAILED
/// reports with a reason rather than aborting a sweep.
pub fn verify(
    tables: &mut SequenceTables,
    id: &IdentityId,
    n: u32,
    mode: Mode,
    params: Option<&Params>,
) -> IdentityReport {
    let start = Instant::now();
    let (status, lhs, rhs, param_string, reason) = match mode {
        Mode::Symbolic => match (lhs_poly(tables, id, n), rhs_poly(tables, id, n)) {
            (Ok(l), Ok(r)) => {
                let status = if l == r { Status::Verified } else { Status::Failed };
                (status, l.to_canonical_string(), r.to_canonical_string(), None, None)
            }
            // sides marked distinct so `verified iff lhs == rhs` holds for
            // errored reports too
            (Err(e), _) | (_, Err(e)) => {
                (Status::Failed, String::new(), "<error>".into(), None, Some(e.to_string()))
            }
        },
        Mode::Pointwise => match params {
            None => (
                Status::Failed,
                String::new(),
                "<error>".into(),
                None,
                Some("pointwise mode requires parameters".into()),
            ),
            Some(ps) => match (lhs_eval(tables, id, n, ps), rhs_eval(tables, id, n, ps)) {
                (Ok(l), Ok(r)) => {
                    let status = if l == r { Status::Verified } else { Status::Failed };
                    (status, l.to_string(), r.to_string(), Some(ps.to_string()), None)
                }
                (Err(e), _) | (_, Err(e)) => (
                    Status::Failed,
                    String::new(),
                    "<error>".into(),
                    Some(ps.to_string()),
                    Some(e.to_string()),
                ),
            },
        },
    };
    IdentityReport {
        id: id.tag(),
        params: param_string,
        n,
        mode,
        status,
        lhs,
        rhs,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        reason,
    }
}

/// Sweeps an identity symbolically for `n = 1..=n_max`. Symbolic equality at
/// each `n` settles the identity for arbitrary real parameters at that `n`;
/// the scan then corroborates pointwise at the published sample set (all of
/// which sit outside the analytically safe region) for `n` up to 10.
///
/// Only the Bell-weighted and z-weighted families participate.
pub fn conjecture_scan(
    tables: &mut SequenceTables,
    id: &IdentityId,
    n_max: u32,
) -> Vec<IdentityReport> {
    assert!(
        matches!(id, IdentityId::ThmBell(_) | IdentityId::ThmZ),
        "conjecture scan applies to THM_BELL and THM_Z only"
    );
    let mut reports = Vec::new();
    for n in 1..=n_max {
        reports.push(verify(tables, id, n, Mode::Symbolic, None));
    }
    for sample in default_samples() {
        for n in 1..=n_max.min(10) {
            reports.push(verify(tables, id, n, Mode::Pointwise, Some(&sample)));
        }
    }
    reports
}

/// Consistency of the squared-harmonic corollary with its derivation chain:
/// the scalar identity `sum_{j<=n} H_j/j = (H_n^2 + H_n^(2))/2`, and the
/// polynomial identity `TMG_SQUARE rhs - COR_H2ORD rhs = COR_HSQ rhs`.
pub fn hsq_consistency(tables: &mut SequenceTables, n: u32) -> IdentityReport {
    let start = Instant::now();
    let report = |status, lhs, rhs, reason| IdentityReport {
        id: "HSQ_CONSISTENCY".into(),
        params: None,
        n,
        mode: Mode::Symbolic,
        status,
        lhs,
        rhs,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        reason,
    };

    let polys = (
        rhs_poly(tables, &IdentityId::TmgSquare, n),
        rhs_poly(tables, &IdentityId::CorH2Ord, n),
        rhs_poly(tables, &IdentityId::CorHsq, n),
    );
    let (tmg, h2ord, hsq) = match polys {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => {
            return report(Status::Failed, String::new(), String::new(), Some(e.to_string()))
        }
    };

    let mut scalar_lhs = Rat::zero();
    for j in 1..=n {
        scalar_lhs += tables.harmonic(j, 1) * inv_u32(j);
    }
    let hn = tables.harmonic(n, 1);
    let scalar_rhs = (&hn * &hn + tables.harmonic(n, 2)) / rat_u32(2);

    let chain_lhs = tmg.sub(&h2ord);
    let lhs = format!("sum H_j/j = {scalar_lhs}; {}", chain_lhs.to_canonical_string());
    let rhs = format!("sum H_j/j = {scalar_rhs}; {}", hsq.to_canonical_string());
    let status = if scalar_lhs == scalar_rhs && chain_lhs == hsq {
        Status::Verified
    } else {
        Status::Failed
    };
    report(status, lhs, rhs, None)
}
