//! Constructors for the group families used by the corpus.

use std::collections::{HashSet, VecDeque};

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{Group, Subgroup};

fn build(label: String, n: usize, f: impl Fn(usize, usize) -> usize) -> Result<Group> {
    let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
    Group::from_table(label, &table)
}

pub fn cyclic(n: usize) -> Group {
    assert!(n >= 1);
    build(format!("C{n}"), n, |a, b| (a + b) % n).expect("cyclic table")
}

/// `C_{d1} x ... x C_{dk}`; the element with coordinates `(x1, ..., xk)`
/// has id `x1 + d1 * (x2 + d2 * (...))`.
pub fn abelian(dims: &[usize]) -> Group {
    assert!(dims.iter().all(|&d| d >= 1));
    let label = if dims.is_empty() {
        "C1".to_string()
    } else {
        dims.iter().map(|d| format!("C{d}")).collect::<Vec<_>>().join("x")
    };
    let n: usize = dims.iter().product();
    build(label, n, |mut a, mut b| {
        let (mut out, mut scale) = (0, 1);
        for &d in dims {
            out += ((a % d + b % d) % d) * scale;
            scale *= d;
            a /= d;
            b /= d;
        }
        out
    })
    .expect("abelian table")
}

/// Dihedral group of order `2n`: `r^a s^b` has id `a + n b`.
pub fn dihedral(n: usize) -> Group {
    assert!(n >= 1);
    build(format!("D{}", 2 * n), 2 * n, |x, y| {
        let (a, b) = (x % n, x / n);
        let (c, d) = (y % n, y / n);
        let c = if b == 1 { (n - c) % n } else { c };
        (a + c) % n + n * ((b + d) % 2)
    })
    .expect("dihedral table")
}

/// Generalized quaternion group of order `order = 2^k`, `k >= 3`:
/// `x^a y^b` has id `a + (order / 2) b`, with `y^2 = x^(order / 4)`.
pub fn generalized_quaternion(order: usize) -> Result<Group> {
    if order < 8 || !order.is_power_of_two() {
        return Err(Error::InvalidGroup(format!(
            "generalized quaternion order must be 2^k with k >= 3, got {order}"
        )));
    }
    let m = order / 2;
    build(format!("Q{order}"), order, |x, y| {
        let (a, b) = (x % m, x / m);
        let (c, d) = (y % m, y / m);
        let c = if b == 1 { (m - c) % m } else { c };
        if b + d == 2 {
            (a + c + m / 2) % m
        } else {
            (a + c) % m + m * (b + d)
        }
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn is_even(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for s in 0..p.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len > 0 {
            transpositions += len - 1;
        }
    }
    transpositions % 2 == 0
}

/// Symmetric group on `n <= 5` points; ids follow lexicographic order of
/// the permutations.
pub fn sym(n: usize) -> Result<Group> {
    if !(1..=5).contains(&n) {
        return Err(Error::InvalidGroup(format!("sym({n}) is outside 1..=5")));
    }
    Group::from_permutation_list(format!("S{n}"), &permutations(n))
}

pub fn alt(n: usize) -> Result<Group> {
    if !(1..=5).contains(&n) {
        return Err(Error::InvalidGroup(format!("alt({n}) is outside 1..=5")));
    }
    let perms: Vec<Vec<usize>> = permutations(n).into_iter().filter(|p| is_even(p)).collect();
    Group::from_permutation_list(format!("A{n}"), &perms)
}

/// `A x B`; `(a, b)` has id `a + |A| b`.
pub fn direct_product(a: &Group, b: &Group) -> Group {
    let (na, nb) = (a.order(), b.order());
    let mut mul = Vec::with_capacity(na * nb * na * nb);
    for x in 0..na * nb {
        for y in 0..na * nb {
            mul.push((a.mul(x % na, y % na) + na * b.mul(x / na, y / na)) as u32);
        }
    }
    Group::from_flat(format!("{}x{}", a.label(), b.label()), na * nb, mul)
        .expect("direct product of groups")
}

fn is_automorphism(a: &Group, f: &[usize]) -> bool {
    let n = a.order();
    if f.len() != n || f[0] != 0 {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in f {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    (0..n).all(|x| (0..n).all(|y| f[a.mul(x, y)] == a.mul(f[x], f[y])))
}

/// `A x| B` where `action[b]` is the automorphism of `A` by which `b`
/// acts, as a table `x -> action[b][x]`. The element `(a, b)` has id
/// `a + |A| b`, so `A` occupies ids `0..|A|`, and
/// `(a1, b1)(a2, b2) = (a1 action[b1](a2), b1 b2)`.
pub fn semidirect_product(a: &Group, b: &Group, action: &[Vec<usize>]) -> Result<Group> {
    let (na, nb) = (a.order(), b.order());
    if action.len() != nb {
        return Err(Error::InvalidAction(format!(
            "expected {nb} automorphisms, got {}",
            action.len()
        )));
    }
    for (i, f) in action.iter().enumerate() {
        if !is_automorphism(a, f) {
            return Err(Error::InvalidAction(format!("image of {i} is not an automorphism")));
        }
    }
    for x in 0..nb {
        for y in 0..nb {
            let xy = &action[b.mul(x, y)];
            if (0..na).any(|t| xy[t] != action[x][action[y][t]]) {
                return Err(Error::InvalidAction(format!(
                    "not a homomorphism at ({x}, {y})"
                )));
            }
        }
    }
    let n = na * nb;
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (a1, b1) = (x % na, x / na);
        for y in 0..n {
            let (a2, b2) = (y % na, y / na);
            mul.push((a.mul(a1, action[b1][a2]) + na * b.mul(b1, b2)) as u32);
        }
    }
    Group::from_flat(format!("{}:{}", a.label(), b.label()), n, mul)
}

/// Extends `gens[i] -> images[i]` to an automorphism of `a`.
pub fn automorphism_from_generators(a: &Group, gens: &[usize], images: &[usize]) -> Result<Vec<usize>> {
    let n = a.order();
    let mut f = vec![usize::MAX; n];
    f[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = a.mul(x, s);
            let fy = a.mul(f[x], t);
            if f[y] == usize::MAX {
                f[y] = fy;
                queue.push_back(y);
            } else if f[y] != fy {
                return Err(Error::InvalidAction("generator images are inconsistent".into()));
            }
        }
    }
    if f.contains(&usize::MAX) || !is_automorphism(a, &f) {
        return Err(Error::InvalidAction("generator map is not an automorphism".into()));
    }
    Ok(f)
}

/// Powers of one automorphism, as the action of a cyclic group of order `k`.
fn cyclic_action(a: &Group, f: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![(0..a.order()).collect::<Vec<usize>>()];
    for _ in 1..k {
        let prev = out.last().unwrap();
        out.push(prev.iter().map(|&x| f[x]).collect());
    }
    out
}

/// Central product of two groups with centres of order 2, amalgamating the
/// central involutions.
pub fn central_product(a: &Group, b: &Group) -> Result<Group> {
    let za = a.center();
    let zb = b.center();
    if za.order() != 2 || zb.order() != 2 {
        return Err(Error::InvalidGroup("central product needs centres of order 2".into()));
    }
    let (za, zb) = (za.elements()[1], zb.elements()[1]);
    let d = direct_product(a, b);
    let diag = d.generated_subgroup(&[za + a.order() * zb]);
    let diag = d.find_normal(diag.elements())?.expect("central subgroup is normal");
    Ok(d.quotient(&diag)?.image().clone())
}

/// Extraspecial 2-group of order `2^(2m+1)`: central product of `m` copies
/// of `D8` (`plus`), or of `m - 1` copies of `D8` with one `Q8`.
pub fn extraspecial_2(m: usize, plus: bool) -> Result<Group> {
    if m == 0 {
        return Err(Error::InvalidGroup("extraspecial_2 needs m >= 1".into()));
    }
    let d8 = dihedral(4);
    let mut g = if plus { d8.clone() } else { generalized_quaternion(8)? };
    for _ in 1..m {
        g = central_product(&g, &d8)?;
    }
    let sign = if plus { '+' } else { '-' };
    Ok(g.with_label(format!("2^(1+{}){sign}", 2 * m)))
}

/// The finite field `GF(p^n)` with elements encoded as integers whose
/// base-`p` digits are polynomial coefficients (constant term least
/// significant), modulo the least irreducible monic polynomial of degree
/// `n` in that same encoding.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: usize,
    n: u32,
    modulus: Vec<usize>,
    add: Vec<u32>,
    mul: Vec<u32>,
}

impl FiniteField {
    pub fn new(q: usize) -> Result<FiniteField> {
        let (p, n) = arith::prime_power(q as u64).ok_or(Error::NotPrimePower(q as u64))?;
        let (p, n) = (p as usize, n);
        let modulus = least_irreducible(p, n as usize);
        let digits = |x: usize| -> Vec<usize> {
            let mut v = Vec::with_capacity(n as usize);
            let mut x = x;
            for _ in 0..n {
                v.push(x % p);
                x /= p;
            }
            v
        };
        let encode = |v: &[usize]| v.iter().rev().fold(0, |acc, &d| acc * p + d);
        let mut add = vec![0u32; q * q];
        let mut mul = vec![0u32; q * q];
        for x in 0..q {
            let dx = digits(x);
            for y in 0..q {
                let dy = digits(y);
                let s: Vec<usize> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
                add[x * q + y] = encode(&s) as u32;
                mul[x * q + y] = encode(&poly_mulmod(&dx, &dy, &modulus, p)) as u32;
            }
        }
        Ok(FiniteField {
            p,
            n,
            modulus,
            add,
            mul,
        })
    }

    pub fn order(&self) -> usize {
        self.p.pow(self.n)
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    /// Coefficients of the defining polynomial, constant term first.
    pub fn modulus(&self) -> &[usize] {
        &self.modulus
    }

    pub fn add(&self, x: usize, y: usize) -> usize {
        self.add[x * self.order() + y] as usize
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.order() + y] as usize
    }
}

fn poly_mulmod(a: &[usize], b: &[usize], modulus: &[usize], p: usize) -> Vec<usize> {
    let n = modulus.len() - 1;
    let mut prod = vec![0usize; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for i in (n..prod.len()).rev() {
        let c = prod[i];
        if c != 0 {
            for (j, &m) in modulus.iter().enumerate() {
                prod[i - n + j] = (prod[i - n + j] + p * p - c * m % p) % p;
            }
        }
    }
    prod.truncate(n);
    prod.resize(n, 0);
    prod
}

fn poly_divides(d: &[usize], f: &[usize], p: usize) -> bool {
    // d monic
    let mut r = f.to_vec();
    let dd = d.len() - 1;
    for i in (dd..r.len()).rev() {
        let c = r[i];
        if c != 0 {
            for (j, &x) in d.iter().enumerate() {
                r[i - dd + j] = (r[i - dd + j] + p * p - c * x % p) % p;
            }
        }
    }
    r[..dd].iter().all(|&x| x == 0)
}

fn monic(p: usize, deg: usize, code: usize) -> Vec<usize> {
    let mut c = Vec::with_capacity(deg + 1);
    let mut x = code;
    for _ in 0..deg {
        c.push(x % p);
        x /= p;
    }
    c.push(1);
    c
}

fn least_irreducible(p: usize, n: usize) -> Vec<usize> {
    (0..p.pow(n as u32))
        .map(|code| monic(p, n, code))
        .find(|f| {
            (1..=n / 2).all(|d| (0..p.pow(d as u32)).all(|c| !poly_divides(&monic(p, d, c), f, p)))
        })
        .expect("irreducible polynomials exist in every degree")
}

/// The affine group `x -> a x + b` over `GF(q)`. The map `(a, b)` has id
/// `(a - 1) q + b` in the field encoding, so the translations occupy ids
/// `0..q`, and `(a1, b1)(a2, b2) = (a1 a2, a1 b2 + b1)`.
pub fn agl1(q: usize) -> Result<Group> {
    let f = FiniteField::new(q)?;
    let n = q * (q - 1);
    build(format!("AGL(1,{q})"), n, |x, y| {
        let (a1, b1) = (x / q + 1, x % q);
        let (a2, b2) = (y / q + 1, y % q);
        (f.mul(a1, a2) - 1) * q + f.add(f.mul(a1, b2), b1)
    })
}

/// `GF(p)^n x| H` for the matrix group `H` generated by `gens` (row-major
/// `n x n` matrices over `GF(p)`). Vectors are encoded as in [`abelian`].
pub fn linear_semidirect(label: &str, p: usize, n: usize, gens: &[Vec<Vec<usize>>]) -> Result<Group> {
    let size = p.pow(n as u32);
    let decode = |mut x: usize| -> Vec<usize> {
        (0..n)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect()
    };
    let encode = |v: &[usize]| v.iter().rev().fold(0, |acc, &d| acc * p + d);
    let as_perm = |m: &Vec<Vec<usize>>| -> Vec<usize> {
        (0..size)
            .map(|x| {
                let v = decode(x);
                let w: Vec<usize> = m
                    .iter()
                    .map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum::<usize>() % p)
                    .collect();
                encode(&w)
            })
            .collect()
    };
    let gen_perms: Vec<Vec<usize>> = gens.iter().map(as_perm).collect();
    let identity: Vec<usize> = (0..size).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in &gen_perms {
            let y: Vec<usize> = x.iter().map(|&t| g[t]).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut perms: Vec<Vec<usize>> = seen.into_iter().collect();
    perms.sort();
    let h = Group::from_permutation_list(format!("{label}-complement"), &perms)?;
    // With left-to-right composition `perms[x]` composes as a right action,
    // so element `x` acts through `perms[x^-1]`.
    let action: Vec<Vec<usize>> = (0..h.order()).map(|x| perms[h.inv(x)].clone()).collect();
    let v = abelian(&vec![p; n]);
    Ok(semidirect_product(&v, &h, &action)?.with_label(label))
}

/// `(C3 x C3) x| Q8`, with `Q8` acting fixed-point-freely through
/// `<[[0,-1],[1,0]], [[1,1],[1,-1]]>` in `GL(2,3)`.
pub fn frobenius72_quaternion() -> Group {
    linear_semidirect("F72", 3, 2, &[vec![vec![0, 2], vec![1, 0]], vec![vec![1, 1], vec![1, 2]]])
        .expect("Q8 in GL(2,3)")
}

/// `C_p x| C_k` with the generator acting as `x -> r x` where `r` has
/// multiplicative order `k` mod `p`.
pub fn cyclic_by_cyclic(p: usize, k: usize, r: usize) -> Result<Group> {
    let cp = cyclic(p);
    let f: Vec<usize> = (0..p).map(|x| x * r % p).collect();
    if (1..k).any(|i| arith::mod_pow(r as u64, i as u64, p as u64) == 1)
        || arith::mod_pow(r as u64, k as u64, p as u64) != 1
    {
        return Err(Error::InvalidAction(format!("{r} does not have order {k} mod {p}")));
    }
    let action = cyclic_action(&cp, &f, k);
    Ok(semidirect_product(&cp, &cyclic(k), &action)?.with_label(format!("C{p}:C{k}")))
}

/// `SL(2,3)` as `Q8 x| C3` with the generator cycling `i -> j -> k`.
pub fn sl23() -> Group {
    let q8 = generalized_quaternion(8).expect("Q8");
    // x = i (id 1), y = j (id 4), xy = k (id 5)
    let f = automorphism_from_generators(&q8, &[1, 4], &[4, 5]).expect("order-3 automorphism");
    let action = cyclic_action(&q8, &f, 3);
    semidirect_product(&q8, &cyclic(3), &action)
        .expect("valid action")
        .with_label("SL(2,3)")
}

/// Heisenberg group of order `p^3`: `(x, y, z)(x', y', z') =
/// (x + x', y + y', z + z' + x y')`, with id `x + p y + p^2 z`.
pub fn heisenberg(p: usize) -> Group {
    let n = p * p * p;
    build(format!("Heis({p})"), n, |a, b| {
        let (x, y, z) = (a % p, a / p % p, a / (p * p));
        let (x2, y2, z2) = (b % p, b / p % p, b / (p * p));
        (x + x2) % p + p * ((y + y2) % p) + p * p * ((z + z2 + x * y2) % p)
    })
    .expect("Heisenberg table")
}

/// `Heis(p) x| C_{p-1}`, the generator acting as `(x, y, z) -> (x, r y, r z)`
/// for the least primitive root `r` mod `p`.
pub fn heisenberg_by_units(p: usize) -> Result<Group> {
    if !arith::is_prime(p as u64) || p < 3 {
        return Err(Error::InvalidGroup(format!("{p} is not an odd prime")));
    }
    let h = heisenberg(p);
    let r = arith::primitive_root(p as u64) as usize;
    let f: Vec<usize> = (0..h.order())
        .map(|a| {
            let (x, y, z) = (a % p, a / p % p, a / (p * p));
            x + p * (r * y % p) + p * p * (r * z % p)
        })
        .collect();
    let action = cyclic_action(&h, &f, p - 1);
    Ok(semidirect_product(&h, &cyclic(p - 1), &action)?.with_label(format!("Heis({p}):C{}", p - 1)))
}

/// Subgroup of `g` consisting of the first `k` ids, which is how the
/// product constructors above lay out their normal factor.
pub fn leading_subgroup(g: &Group, k: usize) -> Result<Subgroup> {
    let elems: Vec<usize> = (0..k).collect();
    let s = Subgroup::new(g, &elems)?;
    Ok(g.find_normal(s.elements())?.unwrap_or(s))
}

/// `(C5 x C5) x| C3`, the generator acting through the companion matrix of
/// `x^2 + x + 1`, which is irreducible over `GF(5)`.
pub fn frobenius75() -> Group {
    linear_semidirect("(C5xC5):C3", 5, 2, &[vec![vec![0, 4], vec![1, 4]]]).expect("order-3 matrix in GL(2,5)")
}

/// Named constructor lookup used by the CLI and the corpus. Factors joined
/// by ` x ` build a direct product.
pub fn by_name(name: &str) -> Result<Group> {
    let name = name.trim();
    if let Some((a, b)) = name.split_once(" x ") {
        return Ok(direct_product(&by_name(a)?, &by_name(b)?));
    }
    let bad = || Error::InvalidGroup(format!("unknown group name {name:?}"));
    let (head, args) = match name.split_once('(') {
        Some((h, rest)) => (h, rest.strip_suffix(')').ok_or_else(bad)?),
        None => (name, ""),
    };
    let nums = || -> Result<Vec<usize>> {
        args.split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| s.trim().parse::<usize>().map_err(|_| bad()))
            .collect()
    };
    let one = || -> Result<usize> {
        match nums()?.as_slice() {
            [x] => Ok(*x),
            _ => Err(bad()),
        }
    };
    match head {
        "cyclic" => Ok(cyclic(one()?.max(1))),
        "abelian" => Ok(abelian(&nums()?)),
        "dihedral" => Ok(dihedral(one()?.max(1))),
        "quaternion" => generalized_quaternion(one()?),
        "sym" => sym(one()?),
        "alt" => alt(one()?),
        "agl1" => agl1(one()?),
        "extraspecial" => {
            let (m, sign) = args.split_once(',').ok_or_else(bad)?;
            let m = m.trim().parse().map_err(|_| bad())?;
            match sign.trim() {
                "+" => extraspecial_2(m, true),
                "-" => extraspecial_2(m, false),
                _ => Err(bad()),
            }
        }
        "frobenius72" => Ok(frobenius72_quaternion()),
        "frobenius75" => Ok(frobenius75()),
        "metacyclic" => match nums()?.as_slice() {
            &[p, k, r] => cyclic_by_cyclic(p, k, r),
            _ => Err(bad()),
        },
        "heisenberg" => {
            let p = one()?;
            if !arith::is_prime(p as u64) {
                return Err(bad());
            }
            Ok(heisenberg(p))
        }
        "sl23" => Ok(sl23()),
        "heisenberg_units" => heisenberg_by_units(one()?),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_class_sizes(g: &Group) -> Vec<usize> {
        let mut s = g.conjugacy_classes().sizes();
        s.sort();
        s
    }

    #[test]
    fn small_families() {
        assert_eq!(cyclic(1).order(), 1);
        let d = dihedral(5);
        d.validate().unwrap();
        assert_eq!(sorted_class_sizes(&d), vec![1, 2, 2, 5]);
        let q = generalized_quaternion(16).unwrap();
        q.validate().unwrap();
        assert_eq!(q.center().order(), 2);
        assert_eq!(q.elements().filter(|&x| q.elt_order(x) == 2).count(), 1);
        assert!(generalized_quaternion(12).is_err());
        let a = abelian(&[2, 4]);
        a.validate().unwrap();
        assert_eq!(a.abelian_invariants(), Some(vec![2, 4]));
        assert_eq!(sym(4).unwrap().order(), 24);
        assert_eq!(alt(5).unwrap().order(), 60);
        assert_eq!(sorted_class_sizes(&alt(4).unwrap()), vec![1, 3, 4, 4]);
    }

    #[test]
    fn semidirect_s3_profile() {
        let c3 = cyclic(3);
        let inversion = vec![vec![0, 1, 2], vec![0, 2, 1]];
        let g = semidirect_product(&c3, &cyclic(2), &inversion).unwrap();
        g.validate().unwrap();
        assert_eq!(sorted_class_sizes(&g), vec![1, 2, 3]);
        let bad = vec![vec![0, 1, 2], vec![0, 1, 2], vec![0, 2, 1]];
        assert!(matches!(
            semidirect_product(&c3, &cyclic(3), &bad),
            Err(Error::InvalidAction(_))
        ));
        let not_aut = vec![vec![0, 1, 2], vec![1, 0, 2]];
        assert!(semidirect_product(&c3, &cyclic(2), &not_aut).is_err());
    }

    #[test]
    fn direct_product_q8_c3() {
        let g = direct_product(&generalized_quaternion(8).unwrap(), &cyclic(3));
        g.validate().unwrap();
        assert_eq!(g.order(), 24);
        assert!(g.is_nilpotent().unwrap());
    }

    #[test]
    fn extraspecial_groups() {
        let q8 = extraspecial_2(1, false).unwrap();
        assert_eq!(q8.table(), generalized_quaternion(8).unwrap().table());
        for m in 1..=3 {
            for plus in [true, false] {
                let g = extraspecial_2(m, plus).unwrap();
                g.validate().unwrap();
                assert_eq!(g.order(), 1 << (2 * m + 1));
                let z = g.center();
                assert_eq!(z.order(), 2);
                assert_eq!(g.derived_subgroup(), z);
                let q = g.quotient(&z).unwrap();
                assert!(q.image().is_elementary_abelian());
            }
        }
        // the two signs differ in their number of involutions
        let inv = |g: &Group| g.elements().filter(|&x| g.elt_order(x) == 2).count();
        assert_eq!(inv(&extraspecial_2(2, true).unwrap()), 19);
        assert_eq!(inv(&extraspecial_2(2, false).unwrap()), 11);
    }

    #[test]
    fn finite_fields() {
        let f4 = FiniteField::new(4).unwrap();
        assert_eq!(f4.modulus(), &[1, 1, 1]);
        let f9 = FiniteField::new(9).unwrap();
        assert_eq!(f9.modulus(), &[1, 0, 1]);
        for f in [f4, f9, FiniteField::new(8).unwrap(), FiniteField::new(16).unwrap()] {
            let q = f.order();
            for x in 1..q {
                assert_eq!((0..q).filter(|&y| f.mul(x, y) == 1).count(), 1);
            }
        }
        assert!(matches!(FiniteField::new(12), Err(Error::NotPrimePower(12))));
    }

    #[test]
    fn affine_groups() {
        assert_eq!(agl1(2).unwrap().order(), 2);
        let g = agl1(4).unwrap();
        assert_eq!(sorted_class_sizes(&g), vec![1, 3, 4, 4]);
        for q in [3, 5, 7, 8, 9] {
            let g = agl1(q).unwrap();
            g.validate().unwrap();
            let n = leading_subgroup(&g, q).unwrap();
            assert!(n.is_normal());
            assert!(g.is_frobenius_with_kernel(&n));
        }
    }

    #[test]
    fn frobenius_72() {
        let g = frobenius72_quaternion();
        g.validate().unwrap();
        assert_eq!(g.order(), 72);
        let n = leading_subgroup(&g, 9).unwrap();
        assert!(g.is_frobenius_with_kernel(&n));
        let h = g.frobenius_complement(&n).unwrap();
        let hg = h.materialize(&g, "H");
        assert_eq!(hg.elements().filter(|&x| hg.elt_order(x) == 2).count(), 1);
        assert!(!hg.is_abelian());
    }

    #[test]
    fn assorted_semidirects() {
        let g = cyclic_by_cyclic(7, 3, 2).unwrap();
        assert_eq!(sorted_class_sizes(&g), vec![1, 3, 3, 7, 7]);
        assert!(cyclic_by_cyclic(7, 3, 3).is_err());
        let g = linear_semidirect("C5xC5:C3", 5, 2, &[vec![vec![0, 4], vec![1, 4]]]).unwrap();
        g.validate().unwrap();
        assert_eq!(g.order(), 75);
        let s = sl23();
        s.validate().unwrap();
        assert_eq!(s.order(), 24);
        assert_eq!(s.center().order(), 2);
        assert_eq!(sorted_class_sizes(&s), vec![1, 1, 4, 4, 4, 4, 6]);
        let h = heisenberg_by_units(3).unwrap();
        h.validate().unwrap();
        assert_eq!(h.order(), 54);
        assert_eq!(h.center().order(), 1);
    }

    #[test]
    fn names() {
        assert_eq!(by_name("cyclic(6)").unwrap().order(), 6);
        assert_eq!(by_name("abelian(2,2,2)").unwrap().order(), 8);
        assert_eq!(by_name("extraspecial(2,-)").unwrap().order(), 32);
        assert_eq!(by_name("frobenius72").unwrap().order(), 72);
        assert!(by_name("nonsense").is_err());
    }
}
