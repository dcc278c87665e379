//! Exact elements of `Z[zeta_e]`, stored as coefficient vectors reduced
//! modulo the `e`-th cyclotomic polynomial.
//!
//! Reduction happens once per operation, so two values with the same
//! conductor are equal iff their coefficient vectors are equal. Operations
//! on mixed conductors lift both sides to the lcm first.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use crate::arith;

struct Basis {
    phi: usize,
    /// `x^j mod Phi_e` for `j` in `0..e`.
    powers: Vec<Vec<i64>>,
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i64; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// Coefficients (low to high) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.read().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = poly_div_exact(&num, &cyclotomic_polynomial(d));
        }
    }
    cache.write().unwrap().insert(n, num.clone());
    num
}

fn basis(e: u32) -> Arc<Basis> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Basis>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(b) = cache.read().unwrap().get(&e) {
        return b.clone();
    }
    let phi_poly = cyclotomic_polynomial(e as u64);
    let phi = phi_poly.len() - 1;
    let mut powers = Vec::with_capacity(e as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..e {
        powers.push(cur.clone());
        // multiply by x and reduce with x^phi = -(lower terms)
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..phi {
                cur[i] -= top * phi_poly[i];
            }
        }
    }
    let b = Arc::new(Basis { phi, powers });
    cache.write().unwrap().insert(e, b.clone());
    b
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<i64>,
}

impl Cyclotomic {
    /// Reduces a polynomial in `zeta_e` given by exponent-indexed
    /// coefficients (any length; exponents are taken mod `e`).
    pub fn from_exponents(e: u32, terms: &[i64]) -> Self {
        assert!(e >= 1, "conductor must be positive");
        let b = basis(e);
        let mut coeffs = vec![0i64; b.phi];
        for (j, &c) in terms.iter().enumerate() {
            if c != 0 {
                for (acc, &v) in coeffs.iter_mut().zip(&b.powers[j % e as usize]) {
                    *acc += c * v;
                }
            }
        }
        Cyclotomic {
            conductor: e,
            coeffs,
        }
    }

    pub fn from_int(e: u32, n: i64) -> Self {
        Cyclotomic::from_exponents(e, &[n])
    }

    pub fn zero(e: u32) -> Self {
        Cyclotomic::from_int(e, 0)
    }

    pub fn one(e: u32) -> Self {
        Cyclotomic::from_int(e, 1)
    }

    /// `zeta_e^k`.
    pub fn root(e: u32, k: u64) -> Self {
        let mut terms = vec![0i64; e as usize];
        terms[(k % e as u64) as usize] = 1;
        Cyclotomic::from_exponents(e, &terms)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs[1..].iter().all(|&c| c == 0).then_some(self.coeffs[0])
    }

    /// Re-expresses the value in `Z[zeta_f]` for a multiple `f` of the
    /// conductor.
    pub fn lift(&self, f: u32) -> Self {
        if f == self.conductor {
            return self.clone();
        }
        assert!(f.is_multiple_of(self.conductor), "{f} is not a multiple of {}", self.conductor);
        let step = (f / self.conductor) as usize;
        let mut terms = vec![0i64; f as usize];
        for (j, &c) in self.coeffs.iter().enumerate() {
            terms[j * step] = c;
        }
        Cyclotomic::from_exponents(f, &terms)
    }

    /// The Galois automorphism `zeta -> zeta^k` (`k` coprime to the
    /// conductor).
    pub fn galois(&self, k: u64) -> Self {
        let e = self.conductor as usize;
        let mut terms = vec![0i64; e];
        for (j, &c) in self.coeffs.iter().enumerate() {
            terms[(j * (k as usize % e)) % e] += c;
        }
        Cyclotomic::from_exponents(self.conductor, &terms)
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(self.conductor as u64 - 1)
    }

    /// Image under the ring map `Z[zeta_e] -> GF(q)` sending `zeta_e` to `z`.
    pub fn reduce_mod(&self, q: u64, z: u64) -> u64 {
        let mut acc = 0u64;
        let mut zp = 1u64;
        for &c in &self.coeffs {
            let cm = c.rem_euclid(q as i64) as u64;
            acc = (acc + cm * zp) % q;
            zp = zp * z % q;
        }
        acc
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.conductor == other.conductor {
            (self.clone(), other.clone())
        } else {
            let f = arith::lcm(self.conductor as u64, other.conductor as u64) as u32;
            (self.lift(f), other.lift(f))
        }
    }

    fn mul_same(&self, other: &Self) -> Self {
        let e = self.conductor as usize;
        let mut buf = vec![0i64; e];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                buf[(i + j) % e] += a * b;
            }
        }
        Cyclotomic::from_exponents(self.conductor, &buf)
    }

    /// `|z|^2 = z * conj(z)`.
    pub fn norm_squared(&self) -> Self {
        self.mul_same(&self.conj())
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == rhs.conductor {
            let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
            return Cyclotomic {
                conductor: self.conductor,
                coeffs,
            };
        }
        let (a, b) = self.aligned(rhs);
        &a + &b
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == rhs.conductor {
            return self.mul_same(rhs);
        }
        let (a, b) = self.aligned(rhs);
        a.mul_same(&b)
    }
}

impl Mul<i64> for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: i64) -> Cyclotomic {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * rhs).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Cyclotomic {
        iter.fold(Cyclotomic::zero(1), |acc, x| &acc + &x)
    }
}

/// Literal grammar: an integer, or terms `c` and `c*z<e>^<k>` joined by
/// `" + "`, in increasing `k`, with zero terms omitted. Coefficients carry
/// their own sign, e.g. `-1 + -1*z3^1`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{n}");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*z{}^{k}", self.conductor)?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseCyclotomicError(pub String);

impl fmt::Display for ParseCyclotomicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bad cyclotomic literal: {}", self.0)
    }
}

impl std::error::Error for ParseCyclotomicError {}

impl Cyclotomic {
    /// Parses a literal in the display grammar. Integer literals need the
    /// conductor from context.
    pub fn parse_with_conductor(s: &str, e: u32) -> Result<Self, ParseCyclotomicError> {
        let bad = || ParseCyclotomicError(s.to_string());
        let mut terms = vec![0i64; e as usize];
        for term in s.split(" + ") {
            let term = term.trim();
            if let Some((c, rest)) = term.split_once("*z") {
                let (cond, k) = rest.split_once('^').ok_or_else(bad)?;
                let cond: u32 = cond.parse().map_err(|_| bad())?;
                let k: usize = k.parse().map_err(|_| bad())?;
                if cond != e || k >= e as usize {
                    return Err(bad());
                }
                terms[k] += c.parse::<i64>().map_err(|_| bad())?;
            } else {
                terms[0] += term.parse::<i64>().map_err(|_| bad())?;
            }
        }
        Ok(Cyclotomic::from_exponents(e, &terms))
    }
}

impl FromStr for Cyclotomic {
    type Err = ParseCyclotomicError;

    /// Integers parse with conductor 1.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let e = s
            .split(" + ")
            .find_map(|t| t.split_once("*z").and_then(|(_, r)| r.split_once('^')))
            .map(|(cond, _)| cond.parse::<u32>())
            .transpose()
            .map_err(|_| ParseCyclotomicError(s.to_string()))?
            .unwrap_or(1);
        Cyclotomic::parse_with_conductor(s, e)
    }
}
