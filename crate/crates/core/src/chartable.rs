//! Irreducible character tables by the Burnside–Dixon method.
//!
//! Central characters are found as common eigenvectors of the class
//! multiplication matrices over a prime field `GF(q)` with `q = 1 mod e`,
//! then each value is lifted to `Z[zeta_e]` by recovering the multiplicity
//! of every root of unity as an eigenvalue of the representing matrix.

use crate::arith;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};

/// Default order bound for the full character pipeline.
pub const DEFAULT_TABLE_BOUND: usize = 512;

const PRIME_SEARCH_LIMIT: u64 = 1 << 31;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    degree: u64,
    values: Vec<Cyclotomic>,
    /// `spectra[c][k]` is the multiplicity of `zeta_o^k` as an eigenvalue
    /// at class `c`, where `o` is the order of the class representative.
    spectra: Vec<Vec<u64>>,
}

impl Character {
    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    pub fn spectra(&self) -> &[Vec<u64>] {
        &self.spectra
    }

    pub fn is_trivial(&self) -> bool {
        self.degree == 1 && self.spectra.iter().all(|s| s[0] == 1)
    }

    /// Whether `chi(g) = chi(1)` on class `c`.
    pub fn is_kernel_class(&self, c: usize) -> bool {
        self.spectra[c][0] == self.degree
    }
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Group,
    exponent: u64,
    prime: u64,
    root: u64,
    rows: Vec<Character>,
}

impl CharacterTable {
    pub fn compute(g: &Group) -> Result<CharacterTable> {
        Self::compute_bounded(g, DEFAULT_TABLE_BOUND)
    }

    pub fn compute_bounded(g: &Group, bound: usize) -> Result<CharacterTable> {
        if g.order() > bound {
            return Err(Error::BoundExceeded {
                order: g.order(),
                bound,
            });
        }
        Dixon::new(g)?.run()
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// The prime used for the modular computation.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// The primitive `e`-th root of unity in `GF(q)` identified with
    /// `zeta_e`.
    pub fn root(&self) -> u64 {
        self.root
    }

    pub fn rows(&self) -> &[Character] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &Character {
        &self.rows[i]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.degree).collect()
    }

    /// Value of a row at an element id.
    pub fn value_at<'a>(&self, chi: &'a Character, x: usize) -> &'a Cyclotomic {
        chi.value(self.group.conjugacy_classes().class_of(x))
    }

    pub fn kernel(&self, chi: &Character) -> Subgroup {
        let cl = self.group.conjugacy_classes();
        let mut elems: Vec<usize> = (0..cl.len())
            .filter(|&c| chi.is_kernel_class(c))
            .flat_map(|c| cl.class(c).iter().copied())
            .collect();
        elems.sort_unstable();
        let k = Subgroup::new(&self.group, &elems).expect("kernel is a subgroup");
        debug_assert!(k.is_normal());
        k
    }

    pub fn is_faithful(&self, chi: &Character) -> bool {
        (1..chi.spectra.len()).all(|c| !chi.is_kernel_class(c))
    }

    /// `<a, b>` for class functions given by their values on classes.
    pub fn inner_product_values(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Result<i64> {
        let sizes = self.group.conjugacy_classes().sizes();
        let total: Cyclotomic = a
            .iter()
            .zip(b)
            .zip(&sizes)
            .map(|((x, y), &h)| &(x * &y.conj()) * h as i64)
            .sum();
        let n = self.group.order() as i64;
        match total.as_integer() {
            Some(v) if v % n == 0 => Ok(v / n),
            _ => Err(Error::NonIntegral),
        }
    }

    pub fn inner_product(&self, chi: &Character, psi: &Character) -> Result<u64> {
        let v = self.inner_product_values(&chi.values, &psi.values)?;
        u64::try_from(v).map_err(|_| Error::NonIntegral)
    }

    /// For each class of `sub`'s table, the class of `self.group()` that
    /// contains it. `sub_table` must be the table of `sub` materialized.
    pub fn fusion(&self, sub: &Subgroup, sub_table: &CharacterTable) -> Vec<usize> {
        let cl = self.group.conjugacy_classes();
        sub_table
            .group
            .conjugacy_classes()
            .reps()
            .into_iter()
            .map(|r| cl.class_of(sub.elements()[r]))
            .collect()
    }

    /// Values of `chi` restricted to `sub`, on the classes of `sub_table`.
    pub fn restricted_values(
        &self,
        chi: &Character,
        sub: &Subgroup,
        sub_table: &CharacterTable,
    ) -> Vec<Cyclotomic> {
        self.fusion(sub, sub_table)
            .into_iter()
            .map(|c| chi.values[c].clone())
            .collect()
    }

    /// Multiplicities of the rows of `sub_table` in the restriction of
    /// `chi` to `sub`.
    pub fn restrict(
        &self,
        chi: &Character,
        sub: &Subgroup,
        sub_table: &CharacterTable,
    ) -> Result<Vec<u64>> {
        let res = self.restricted_values(chi, sub, sub_table);
        let mult = sub_table
            .rows
            .iter()
            .map(|theta| {
                let m = sub_table.inner_product_values(&res, &theta.values)?;
                u64::try_from(m).map_err(|_| Error::NonIntegral)
            })
            .collect::<Result<Vec<u64>>>()?;
        let deg: u64 = mult.iter().zip(&sub_table.rows).map(|(m, t)| m * t.degree).sum();
        if deg != chi.degree {
            return Err(Error::NonIntegral);
        }
        Ok(mult)
    }

    /// Checks both orthogonality relations and the degree identities.
    pub fn verify(&self) -> Result<()> {
        let g = &self.group;
        let cl = g.conjugacy_classes();
        let fail = |m: String| Err(Error::ContractViolation(format!("{}: {m}", g.label())));
        if self.rows.len() != cl.len() {
            return fail("row count differs from class count".into());
        }
        let sq: u64 = self.rows.iter().map(|r| r.degree * r.degree).sum();
        if sq != g.order() as u64 {
            return fail(format!("sum of squared degrees is {sq}"));
        }
        if !self.rows[0].is_trivial() {
            return fail("first row is not trivial".into());
        }
        for (i, a) in self.rows.iter().enumerate() {
            if !(g.order() as u64).is_multiple_of(a.degree) {
                return fail(format!("degree {} does not divide the order", a.degree));
            }
            for (j, b) in self.rows.iter().enumerate().skip(i) {
                let ip = self.inner_product_values(&a.values, &b.values)?;
                if ip != (i == j) as i64 {
                    return fail(format!("<row {i}, row {j}> = {ip}"));
                }
            }
        }
        for c1 in 0..cl.len() {
            for c2 in c1..cl.len() {
                let s: Cyclotomic = self
                    .rows
                    .iter()
                    .map(|r| &r.values[c1] * &r.values[c2].conj())
                    .sum();
                let expect = if c1 == c2 {
                    (g.order() / cl.size(c1)) as i64
                } else {
                    0
                };
                if s.as_integer() != Some(expect) {
                    return fail(format!("column relation fails at classes ({c1}, {c2})"));
                }
            }
        }
        Ok(())
    }
}

/// Smallest prime `q = 1 mod e` with `q > lower`.
pub fn dixon_prime(e: u64, lower: u64) -> Result<u64> {
    let mut q = lower.div_ceil(e) * e + 1;
    while q < PRIME_SEARCH_LIMIT {
        if arith::is_prime(q) {
            return Ok(q);
        }
        q += e;
    }
    Err(Error::NoSuitablePrime {
        exponent: e,
        lower,
    })
}

struct Dixon<'a> {
    g: &'a Group,
    k: usize,
    e: u64,
    q: u64,
    z: u64,
}

/// A subspace of `GF(q)^k` with a basis in reduced row echelon form.
struct Space {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl<'a> Dixon<'a> {
    fn new(g: &'a Group) -> Result<Self> {
        let e = g.exponent();
        let q = dixon_prime(e, 2 * g.order() as u64)?;
        let z = arith::mod_pow(arith::primitive_root(q), (q - 1) / e, q);
        Ok(Dixon {
            g,
            k: g.conjugacy_classes().len(),
            e,
            q,
            z,
        })
    }

    /// `m[a][b] = #{x in C_j : x^-1 r_b in C_a}`; central characters are
    /// right eigenvectors with eigenvalue `omega(C_j)`.
    fn class_matrix(&self, j: usize) -> Vec<Vec<u64>> {
        let cl = self.g.conjugacy_classes();
        let mut m = vec![vec![0u64; self.k]; self.k];
        for b in 0..self.k {
            let r = cl.rep(b);
            for &x in cl.class(j) {
                m[cl.class_of(self.g.mul(self.g.inv(x), r))][b] += 1;
            }
        }
        m
    }

    fn run(self) -> Result<CharacterTable> {
        let cl = self.g.conjugacy_classes();
        let mut order: Vec<usize> = (1..self.k).collect();
        order.sort_by_key(|&j| (cl.size(j), j));
        let mut spaces = vec![Space::full(self.k)];
        for j in order {
            if spaces.iter().all(|s| s.basis.len() == 1) {
                break;
            }
            let m = self.class_matrix(j);
            let mut next = Vec::new();
            for s in spaces {
                if s.basis.len() == 1 {
                    next.push(s);
                } else {
                    next.extend(self.split(s, &m)?);
                }
            }
            spaces = next;
        }
        if spaces.len() != self.k {
            return Err(Error::SplitFailure(format!(
                "{} common eigenspaces for {} classes",
                spaces.len(),
                self.k
            )));
        }
        let mut rows = spaces
            .into_iter()
            .map(|s| self.character(&s.basis[0]))
            .collect::<Result<Vec<_>>>()?;
        rows.sort_by(|a, b| {
            (a.degree, !a.is_trivial(), &a.values).cmp(&(b.degree, !b.is_trivial(), &b.values))
        });
        Ok(CharacterTable {
            group: self.g.clone(),
            exponent: self.e,
            prime: self.q,
            root: self.z,
            rows,
        })
    }

    fn split(&self, s: Space, m: &[Vec<u64>]) -> Result<Vec<Space>> {
        let q = self.q;
        let d = s.basis.len();
        let images: Vec<Vec<u64>> = s.basis.iter().map(|b| mat_vec(m, b, q)).collect();
        // r[t][i]: coordinate of m * b_i along b_t
        let r: Vec<Vec<u64>> = (0..d)
            .map(|t| (0..d).map(|i| images[i][s.pivots[t]]).collect())
            .collect();
        if (0..d).all(|t| (0..d).all(|i| r[t][i] == if t == i { r[0][0] } else { 0 })) {
            return Ok(vec![s]);
        }
        let cp = charpoly(r.clone(), q);
        let mut out = Vec::new();
        let mut found = 0;
        for x in 0..q {
            if eval(&cp, x, q) != 0 {
                continue;
            }
            let mut shifted = r.clone();
            for (t, row) in shifted.iter_mut().enumerate() {
                row[t] = (row[t] + q - x) % q;
            }
            let coords = nullspace(shifted, q);
            found += coords.len();
            let vecs: Vec<Vec<u64>> = coords
                .iter()
                .map(|c| {
                    let mut v = vec![0u64; self.k];
                    for (t, &ct) in c.iter().enumerate() {
                        if ct != 0 {
                            for (vi, &bi) in v.iter_mut().zip(&s.basis[t]) {
                                *vi = (*vi + ct * bi) % q;
                            }
                        }
                    }
                    v
                })
                .collect();
            out.push(Space::from_rows(vecs, q));
            if found == d {
                break;
            }
        }
        if found != d {
            return Err(Error::SplitFailure(format!(
                "eigenspaces of dimension {found} in a space of dimension {d}"
            )));
        }
        Ok(out)
    }

    fn character(&self, w: &[u64]) -> Result<Character> {
        let (g, q, n) = (self.g, self.q, self.g.order() as u64);
        let cl = g.conjugacy_classes();
        if w[0] == 0 {
            return Err(Error::SplitFailure("eigenvector vanishes at the identity".into()));
        }
        let s0 = arith::mod_inv(w[0], q);
        let omega: Vec<u64> = w.iter().map(|&x| x * s0 % q).collect();
        let mut s = 0u64;
        for c in 0..self.k {
            let ci = cl.inverse_class(g, c);
            let term = omega[c] * omega[ci] % q * arith::mod_inv(cl.size(c) as u64 % q, q) % q;
            s = (s + term) % q;
        }
        if s == 0 {
            return Err(Error::SplitFailure("degenerate norm".into()));
        }
        let target = n % q * arith::mod_inv(s, q) % q;
        let degree = match arith::exact_sqrt(target) {
            Some(d) if d >= 1 && target <= n => d,
            _ => return Err(Error::SplitFailure(format!("no degree with square {target}"))),
        };
        let modq: Vec<u64> = (0..self.k)
            .map(|c| omega[c] * degree % q * arith::mod_inv(cl.size(c) as u64 % q, q) % q)
            .collect();
        let mut values = Vec::with_capacity(self.k);
        let mut spectra = Vec::with_capacity(self.k);
        for c in 0..self.k {
            let o = g.elt_order(cl.rep(c)) as u64;
            let zo = arith::mod_pow(self.z, self.e / o, q);
            let zo_inv = arith::mod_inv(zo, q);
            let o_inv = arith::mod_inv(o % q, q);
            let powers: Vec<u64> = (0..o as usize).map(|t| modq[cl.power_class(g, c, t)]).collect();
            let mut mult = Vec::with_capacity(o as usize);
            for j in 0..o {
                let step = arith::mod_pow(zo_inv, j, q);
                let mut acc = 0u64;
                let mut zt = 1u64;
                for &v in &powers {
                    acc = (acc + v * zt) % q;
                    zt = zt * step % q;
                }
                let m = acc * o_inv % q;
                if m > degree {
                    return Err(Error::SplitFailure(format!(
                        "eigenvalue multiplicity {m} exceeds degree {degree}"
                    )));
                }
                mult.push(m);
            }
            if mult.iter().sum::<u64>() != degree {
                return Err(Error::SplitFailure("multiplicities do not sum to the degree".into()));
            }
            let mut terms = vec![0i64; self.e as usize];
            let stride = (self.e / o) as usize;
            for (j, &m) in mult.iter().enumerate() {
                terms[j * stride] = m as i64;
            }
            let v = Cyclotomic::from_exponents(self.e as u32, &terms);
            debug_assert_eq!(v.reduce_mod(q, self.z), modq[c]);
            values.push(v);
            spectra.push(mult);
        }
        Ok(Character {
            degree,
            values,
            spectra,
        })
    }
}

impl Space {
    fn full(k: usize) -> Space {
        let basis = (0..k)
            .map(|i| {
                let mut v = vec![0u64; k];
                v[i] = 1;
                v
            })
            .collect();
        Space {
            basis,
            pivots: (0..k).collect(),
        }
    }

    fn from_rows(rows: Vec<Vec<u64>>, q: u64) -> Space {
        let (basis, pivots) = rref(rows, q);
        Space { basis, pivots }
    }
}

fn mat_vec(m: &[Vec<u64>], v: &[u64], q: u64) -> Vec<u64> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0u64, |acc, (&a, &b)| (acc + a * b) % q))
        .collect()
}

/// Row reduces in place; returns the nonzero rows and their pivot columns.
fn rref(mut rows: Vec<Vec<u64>>, q: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = arith::mod_inv(rows[r][c], q);
        for x in rows[r].iter_mut() {
            *x = *x * inv % q;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + q - f * y % q) % q;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    (rows, pivots)
}

/// Basis of `{x : a x = 0}`.
fn nullspace(a: Vec<Vec<u64>>, q: u64) -> Vec<Vec<u64>> {
    let n = a.first().map_or(0, |r| r.len());
    let (rows, pivots) = rref(a, q);
    let mut out = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = (q - row[free]) % q;
        }
        out.push(v);
    }
    out
}

/// Characteristic polynomial (low to high, monic) via reduction to upper
/// Hessenberg form.
fn charpoly(mut h: Vec<Vec<u64>>, q: u64) -> Vec<u64> {
    let n = h.len();
    for j in 0..n.saturating_sub(2) {
        let Some(p) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if p != j + 1 {
            h.swap(p, j + 1);
            for row in h.iter_mut() {
                row.swap(p, j + 1);
            }
        }
        let inv = arith::mod_inv(h[j + 1][j], q);
        for r in j + 2..n {
            let f = h[r][j] * inv % q;
            if f == 0 {
                continue;
            }
            for c in 0..n {
                let sub = f * h[j + 1][c] % q;
                h[r][c] = (h[r][c] + q - sub) % q;
            }
            for row in h.iter_mut() {
                row[j + 1] = (row[j + 1] + f * row[r]) % q;
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 0..n {
        // (x - h[m][m]) * p_m
        let pm = &polys[m];
        let mut next = vec![0u64; m + 2];
        for (i, &c) in pm.iter().enumerate() {
            next[i + 1] = (next[i + 1] + c) % q;
            next[i] = (next[i] + q - c * h[m][m] % q) % q;
        }
        let mut prod = 1u64;
        for i in (0..m).rev() {
            prod = prod * h[i + 1][i] % q;
            let coef = h[i][m] * prod % q;
            if coef != 0 {
                for (t, &c) in polys[i].iter().enumerate() {
                    next[t] = (next[t] + q - coef * c % q) % q;
                }
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn eval(p: &[u64], x: u64, q: u64) -> u64 {
    p.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % q)
}
