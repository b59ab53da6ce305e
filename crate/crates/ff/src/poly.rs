//! Dense univariate polynomials over a [`FieldSpec`], with factorization by
//! square-free decomposition, distinct-degree splitting and Cantor–Zassenhaus
//! equal-degree splitting.

use rand::Rng;

use crate::field::{Elem, FieldSpec};

/// Coefficients are stored constant term first, without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(f: &FieldSpec, coeffs: Vec<Elem>) -> Self {
        debug_assert!(coeffs.iter().all(|&c| c < f.order()));
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    /// The monomial `X`.
    pub fn x() -> Self {
        Poly { coeffs: vec![0, 1] }
    }

    /// `X - c`.
    pub fn linear(f: &FieldSpec, c: Elem) -> Self {
        Poly { coeffs: vec![f.neg(c), 1] }
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Elem {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn monic(&self, f: &FieldSpec) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = f.inv_nonzero(self.leading());
        self.scale(f, inv)
    }

    pub fn scale(&self, f: &FieldSpec, c: Elem) -> Self {
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn add(&self, f: &FieldSpec, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(f, (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, f: &FieldSpec, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(f, (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn mul(&self, f: &FieldSpec, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    pub fn pow(&self, f: &FieldSpec, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(f, &base);
            }
        }
        acc
    }

    /// Quotient and remainder. Panics if `divisor` is zero.
    pub fn div_rem(&self, f: &FieldSpec, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.deg();
        if self.coeffs.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let inv_lead = f.inv_nonzero(divisor.leading());
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = f.mul(rem[i + dd], inv_lead);
            quot[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = f.sub(rem[i + j], f.mul(c, d));
            }
        }
        rem.truncate(dd);
        (Poly::new(f, quot), Poly::new(f, rem))
    }

    pub fn rem(&self, f: &FieldSpec, divisor: &Self) -> Self {
        self.div_rem(f, divisor).1
    }

    /// Exact division; debug-asserts a zero remainder.
    pub fn div_exact(&self, f: &FieldSpec, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(f, divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, f: &FieldSpec, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(f, &b);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn derivative(&self, f: &FieldSpec) -> Self {
        Poly::new(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| f.mul(f.from_int(i as i64), c))
                .collect(),
        )
    }

    pub fn eval(&self, f: &FieldSpec, x: Elem) -> Elem {
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, f: &FieldSpec, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.rem(f, modulus);
        let mut acc = Poly::one().rem(f, modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(f, &base).rem(f, modulus);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(f, &base).rem(f, modulus);
            }
        }
        acc
    }

    /// Rabin-style test: no factor of degree at most `deg / 2`.
    pub fn is_irreducible(&self, f: &FieldSpec) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let g = self.monic(f);
        let q = f.order() as u64;
        let x = Poly::x();
        let mut h = x.clone();
        for _ in 1..=n / 2 {
            h = h.pow_mod(f, q, &g);
            if !g.gcd(f, &h.sub(f, &x)).is_one() {
                return false;
            }
        }
        true
    }

    /// Monic irreducible factorization, sorted by `(degree, coefficients)`.
    ///
    /// Randomness only drives the equal-degree splitting; the result does not
    /// depend on it.
    pub fn factor<R: Rng + ?Sized>(&self, f: &FieldSpec, rng: &mut R) -> Vec<(Poly, usize)> {
        assert!(!self.is_zero(), "cannot factor the zero polynomial");
        let mut out: Vec<(Poly, usize)> = Vec::new();
        for (sqf, mult) in squarefree_decomposition(f, &self.monic(f)) {
            for (part, d) in distinct_degree(f, &sqf) {
                for irr in equal_degree(f, &part, d, rng) {
                    out.push((irr, mult));
                }
            }
        }
        out.sort_by(|a, b| (a.0.deg(), &a.0.coeffs).cmp(&(b.0.deg(), &b.0.coeffs)));
        // Merge duplicates that arise from the p-th root recursion.
        let mut merged: Vec<(Poly, usize)> = Vec::new();
        for (p, m) in out {
            match merged.last_mut() {
                Some((last, lm)) if *last == p => *lm += m,
                _ => merged.push((p, m)),
            }
        }
        merged
    }
}

/// Square-free decomposition of a monic polynomial: pairs `(g, m)` with
/// `self = prod g^m`, each `g` square-free.
fn squarefree_decomposition(f: &FieldSpec, poly: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if poly.deg() == 0 {
        return out;
    }
    let p = f.characteristic() as usize;
    let d = poly.derivative(f);
    let mut c = poly.gcd(f, &d);
    let mut w = poly.div_exact(f, &c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(f, &c);
        let fac = w.div_exact(f, &y);
        if fac.deg() > 0 {
            out.push((fac, i));
        }
        w = y;
        c = c.div_exact(f, &w);
        i += 1;
    }
    if !c.is_one() {
        let root = pth_root(f, &c);
        for (g, m) in squarefree_decomposition(f, &root) {
            out.push((g, m * p));
        }
    }
    out
}

/// Inverse Frobenius on a polynomial whose exponents are all multiples of `p`.
fn pth_root(f: &FieldSpec, poly: &Poly) -> Poly {
    let p = f.characteristic() as usize;
    let e = (f.order() / f.characteristic()) as u64;
    let coeffs = poly.coeffs.iter().step_by(p).map(|&c| f.pow(c, e)).collect();
    Poly::new(f, coeffs)
}

/// Splits a square-free monic polynomial into products of irreducibles of equal degree.
fn distinct_degree(f: &FieldSpec, poly: &Poly) -> Vec<(Poly, usize)> {
    let q = f.order() as u64;
    let x = Poly::x();
    let mut rest = poly.clone();
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut i = 1;
    while rest.deg() >= 2 * i {
        h = h.pow_mod(f, q, &rest);
        let g = rest.gcd(f, &h.sub(f, &x));
        if !g.is_one() {
            rest = rest.div_exact(f, &g);
            h = h.rem(f, &rest);
            out.push((g, i));
        }
        i += 1;
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

fn equal_degree<R: Rng + ?Sized>(f: &FieldSpec, poly: &Poly, d: usize, rng: &mut R) -> Vec<Poly> {
    let n = poly.deg();
    if n == d {
        return vec![poly.clone()];
    }
    let q = f.order() as u64;
    loop {
        let a = Poly::new(f, (0..n).map(|_| rng.gen_range(0..f.order())).collect());
        if a.deg() == 0 {
            continue;
        }
        let b = if q % 2 == 1 {
            // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
            let mut prod = Poly::one();
            let mut t = a.rem(f, poly);
            for _ in 0..d {
                prod = prod.mul(f, &t).rem(f, poly);
                t = t.pow_mod(f, q, poly);
            }
            prod.pow_mod(f, (q - 1) / 2, poly).sub(f, &Poly::one())
        } else {
            // Absolute trace into GF(2): sum of a^(2^j) for j < k*d.
            let steps = f.degree() as usize * d;
            let mut t = a.rem(f, poly);
            let mut sum = Poly::zero();
            for _ in 0..steps {
                sum = sum.add(f, &t);
                t = t.mul(f, &t).rem(f, poly);
            }
            sum
        };
        let g = poly.gcd(f, &b);
        if g.deg() > 0 && g.deg() < n {
            let other = poly.div_exact(f, &g);
            let mut out = equal_degree(f, &g, d, rng);
            out.extend(equal_degree(f, &other, d, rng));
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn brute_force_irreducible(f: &FieldSpec, p: &Poly) -> bool {
        // No monic divisor of degree 1..=deg/2.
        let n = p.deg();
        let q = f.order() as usize;
        for d in 1..=n / 2 {
            let count = q.pow(d as u32);
            for idx in 0..count {
                let mut c = Vec::with_capacity(d + 1);
                let mut m = idx;
                for _ in 0..d {
                    c.push((m % q) as u32);
                    m /= q;
                }
                c.push(1);
                let div = Poly::new(f, c);
                if p.rem(f, &div).is_zero() {
                    return false;
                }
            }
        }
        n >= 1
    }

    #[test]
    fn irreducibility_matches_brute_force() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
            let f = FieldSpec::new(p, k, None).unwrap();
            let q = f.order() as usize;
            for deg in 1..=4usize {
                let count = q.pow(deg as u32).min(400);
                for idx in 0..count {
                    let mut c = Vec::new();
                    let mut m = idx;
                    for _ in 0..deg {
                        c.push((m % q) as u32);
                        m /= q;
                    }
                    c.push(1);
                    let poly = Poly::new(&f, c);
                    assert_eq!(poly.is_irreducible(&f), brute_force_irreducible(&f, &poly), "{poly:?} over {f}");
                }
            }
        }
    }

    #[test]
    fn factorization_reassembles() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2), (7, 1)] {
            let f = FieldSpec::new(p, k, None).unwrap();
            for _ in 0..60 {
                let deg = rng.gen_range(1..10);
                let mut c: Vec<u32> = (0..deg).map(|_| rng.gen_range(0..f.order())).collect();
                c.push(1);
                // Force repeated factors some of the time.
                let base = Poly::new(&f, c);
                let poly = if rng.gen_bool(0.3) { base.mul(&f, &base) } else { base };
                let factors = poly.factor(&f, &mut rng);
                let mut prod = Poly::one();
                for (g, m) in &factors {
                    assert!(g.is_monic());
                    assert!(g.is_irreducible(&f), "{g:?}");
                    prod = prod.mul(&f, &g.pow(&f, *m as u64));
                }
                assert_eq!(prod, poly.monic(&f));
            }
        }
    }

    #[test]
    fn frobenius_power_factorization() {
        // (X + 1)^4 over GF(2) and (X + 1)^9 over GF(3) need the p-th root step.
        let f2 = FieldSpec::prime(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let p = Poly::new(&f2, vec![1, 1]).pow(&f2, 4);
        assert_eq!(p.factor(&f2, &mut rng), vec![(Poly::new(&f2, vec![1, 1]), 4)]);
        let f3 = FieldSpec::prime(3).unwrap();
        let p = Poly::new(&f3, vec![1, 1]).pow(&f3, 9);
        assert_eq!(p.factor(&f3, &mut rng), vec![(Poly::new(&f3, vec![1, 1]), 9)]);
        // X^6 - 1 = (X - 1)^2 (X + 1)^2 (X^2 + X + 1)^2 ... over GF(3): (X-1)^3 (X+1)^3
        let x6 = Poly::new(&f3, vec![2, 0, 0, 0, 0, 0, 1]);
        let fac = x6.factor(&f3, &mut rng);
        assert_eq!(fac, vec![(Poly::new(&f3, vec![1, 1]), 3), (Poly::new(&f3, vec![2, 1]), 3)]);
    }
}
