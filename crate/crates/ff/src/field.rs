//! Finite fields GF(p^k) with table-driven arithmetic.
//!
//! Elements are encoded as integers in `[0, q)`: the base-`p` digits of the
//! encoding are the coefficients `c_0, c_1, ..., c_{k-1}` of the element
//! `c_0 + c_1 a + ... + c_{k-1} a^{k-1}`, where `a` is a root of the modulus.
//! Zero encodes to 0 and one encodes to 1.

use std::fmt;
use std::sync::Arc;

use crate::error::{FfError, Result};
use crate::poly::Poly;

/// Upper bound on the field order; exp/log tables are allocated eagerly.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Field order up to which extension-field addition is tabulated.
const ADD_TABLE_LIMIT: u32 = 256;

/// A field element, stored as its canonical integer encoding.
pub type Elem = u32;

#[derive(Clone)]
pub struct FieldSpec(Arc<Inner>);

struct Inner {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    /// `exp[i] = g^i` for a fixed generator `g`, stored twice over to skip a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; modulus {:?})", self.0.p, self.0.k, self.0.modulus)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.k)
        }
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl FieldSpec {
    /// Creates GF(p^k). Without an explicit modulus the lexicographically
    /// smallest monic irreducible polynomial of degree `k` is used, comparing
    /// coefficient lists `[c_0, c_1, ..., c_k]` from the constant term up.
    pub fn new(p: u32, k: u32, modulus: Option<&[u32]>) -> Result<Self> {
        if !is_prime(p) {
            return Err(FfError::NotPrime(p));
        }
        if k == 0 {
            return Err(FfError::ZeroDegree);
        }
        let q = (p as u64).checked_pow(k).filter(|&q| q <= MAX_FIELD_ORDER);
        let Some(q) = q else {
            return Err(FfError::FieldTooLarge((p as u64).saturating_pow(k)));
        };
        let prime = Self::build(p, 1, vec![0, 1])?;
        if k == 1 {
            if let Some(m) = modulus {
                if m.len() != 2 || m[1] != 1 || m[0] >= p {
                    return Err(FfError::BadModulus {
                        modulus: m.to_vec(),
                        reason: "expected a monic linear polynomial".into(),
                    });
                }
                // Any monic linear modulus gives the same prime field; keep the given one.
                if m != [0, 1] {
                    return Self::build(p, 1, m.to_vec());
                }
            }
            return Ok(prime);
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() != k as usize + 1 || m[k as usize] != 1 {
                    return Err(FfError::BadModulus {
                        modulus: m.to_vec(),
                        reason: format!("expected a monic polynomial of degree {k}"),
                    });
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(FfError::BadModulus {
                        modulus: m.to_vec(),
                        reason: format!("coefficients must lie in [0, {p})"),
                    });
                }
                if !Poly::new(&prime, m.to_vec()).is_irreducible(&prime) {
                    return Err(FfError::BadModulus {
                        modulus: m.to_vec(),
                        reason: "polynomial is reducible".into(),
                    });
                }
                m.to_vec()
            }
            None => smallest_irreducible(&prime, k, q),
        };
        Self::build(p, k, modulus)
    }

    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    fn build(p: u32, k: u32, modulus: Vec<u32>) -> Result<Self> {
        let q = p.pow(k);
        let slow = SlowArith { p, k, modulus: &modulus };
        let neg: Vec<u32> = (0..q).map(|a| slow.neg(a)).collect();
        let add = (k > 1 && q <= ADD_TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = slow.add(a, b);
                }
            }
            t
        });
        let n = (q - 1) as u64;
        let factors = prime_divisors(n);
        let generator = (1..q)
            .find(|&g| {
                (q == 2 || g != 1) && factors.iter().all(|&l| slow.pow(g, n / l) != 1)
            })
            .ok_or_else(|| FfError::BadModulus {
                modulus: modulus.clone(),
                reason: "multiplicative group is not cyclic; modulus is reducible".into(),
            })?;
        let mut exp = vec![0u32; 2 * (q as usize - 1).max(1)];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..(q - 1) as usize {
            exp[i] = x;
            log[x as usize] = i as u32;
            x = slow.mul(x, generator);
        }
        if x != 1 {
            return Err(FfError::BadModulus {
                modulus,
                reason: "generator order mismatch".into(),
            });
        }
        let half = (q - 1) as usize;
        for i in 0..half {
            exp[half + i] = exp[i];
        }
        Ok(FieldSpec(Arc::new(Inner {
            p,
            k,
            q,
            modulus,
            exp,
            log,
            neg,
            add,
        })))
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.k
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    #[inline]
    pub fn is_gf2(&self) -> bool {
        self.0.q == 2
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.0.q
    }

    pub fn check(&self, a: Elem) -> Result<Elem> {
        if a < self.0.q {
            Ok(a)
        } else {
            Err(FfError::ElementOutOfRange(a, self.0.q))
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        n.rem_euclid(self.0.p as i64) as Elem
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let f = &*self.0;
        if f.k == 1 {
            let s = a + b;
            if s >= f.p {
                s - f.p
            } else {
                s
            }
        } else if let Some(t) = &f.add {
            t[(a * f.q + b) as usize]
        } else {
            SlowArith { p: f.p, k: f.k, modulus: &f.modulus }.add(a, b)
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.0.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let f = &*self.0;
        f.exp[(f.log[a as usize] + f.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(FfError::DivisionByZero);
        }
        Ok(self.inv_nonzero(a))
    }

    /// Inverse of an element known to be nonzero.
    #[inline]
    pub fn inv_nonzero(&self, a: Elem) -> Elem {
        debug_assert!(a != 0, "inversion of zero");
        let f = &*self.0;
        let n = f.q - 1;
        f.exp[((n - f.log[a as usize]) % n) as usize]
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let f = &*self.0;
        let n = (f.q - 1) as u64;
        let l = (f.log[a as usize] as u64 * (e % n)) % n;
        f.exp[l as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: Elem) -> Result<u64> {
        if a == 0 {
            return Err(FfError::DivisionByZero);
        }
        let n = (self.0.q - 1) as u64;
        let l = self.0.log[a as usize] as u64;
        Ok(n / gcd(l, n))
    }

    /// The element of multiplicative order exactly `n` with the smallest encoding.
    pub fn root_of_unity(&self, n: u64) -> Result<Elem> {
        let q1 = (self.0.q - 1) as u64;
        if n == 0 || q1 % n != 0 {
            return Err(FfError::NoRootOfUnity { n, q: self.0.q });
        }
        (1..self.0.q)
            .find(|&a| self.multiplicative_order(a) == Ok(n))
            .ok_or(FfError::NoRootOfUnity { n, q: self.0.q })
    }

    /// Base-`p` coefficient digits of an encoding, constant term first.
    pub fn digits(&self, a: Elem) -> Vec<u32> {
        let mut a = a;
        (0..self.0.k)
            .map(|_| {
                let d = a % self.0.p;
                a /= self.0.p;
                d
            })
            .collect()
    }

    /// Whether `other` has the same characteristic and a degree divisible by ours.
    pub fn embeds_into(&self, other: &FieldSpec) -> bool {
        self.0.p == other.0.p && other.0.k % self.0.k == 0
    }

    /// Encoding table of the canonical embedding of `self` into `big`.
    ///
    /// The generator of `self` is sent to the root of its modulus in `big`
    /// with the smallest encoding.
    pub fn embedding_into(&self, big: &FieldSpec) -> Result<Vec<Elem>> {
        if !self.embeds_into(big) {
            return Err(FfError::IncompatibleFields(format!("{self} does not embed into {big}")));
        }
        if self.0.k == 1 {
            return Ok((0..self.0.q).collect());
        }
        let modulus = &self.0.modulus;
        let root = (0..big.order())
            .find(|&r| {
                let mut acc = 0;
                for &c in modulus.iter().rev() {
                    acc = big.add(big.mul(acc, r), c);
                }
                acc == 0
            })
            .ok_or_else(|| FfError::IncompatibleFields("modulus has no root in the extension".into()))?;
        let powers: Vec<Elem> = (0..self.0.k).map(|i| big.pow(root, i as u64)).collect();
        Ok((0..self.0.q)
            .map(|a| {
                self.digits(a)
                    .iter()
                    .zip(&powers)
                    .fold(0, |acc, (&c, &rp)| big.add(acc, big.mul(c, rp)))
            })
            .collect())
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn smallest_irreducible(prime: &FieldSpec, k: u32, q: u64) -> Vec<u32> {
    let p = prime.order() as u64;
    for n in 0..q {
        // Lexicographic order on [c_0, ..., c_{k-1}]: c_0 is the most significant digit.
        let mut coeffs = vec![0u32; k as usize + 1];
        let mut m = n;
        for i in (0..k as usize).rev() {
            coeffs[i] = (m % p) as u32;
            m /= p;
        }
        coeffs[k as usize] = 1;
        if Poly::new(prime, coeffs.clone()).is_irreducible(prime) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Digit-wise arithmetic used to bootstrap the tables.
struct SlowArith<'a> {
    p: u32,
    k: u32,
    modulus: &'a [u32],
}

impl SlowArith<'_> {
    fn split(&self, mut a: u32) -> Vec<u32> {
        (0..self.k)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    fn join(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        let (x, y) = (self.split(a), self.split(b));
        let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.join(&s)
    }

    fn neg(&self, a: u32) -> u32 {
        let s: Vec<u32> = self.split(a).iter().map(|&u| (self.p - u) % self.p).collect();
        self.join(&s)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p as u64;
        let k = self.k as usize;
        let (x, y) = (self.split(a), self.split(b));
        let mut prod = vec![0u64; 2 * k];
        for (i, &u) in x.iter().enumerate() {
            for (j, &v) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + u as u64 * v as u64) % p;
            }
        }
        // Reduce by the monic modulus from the top degree down.
        for d in (k..2 * k).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for (i, &m) in self.modulus[..k].iter().enumerate() {
                let t = (c * m as u64) % p;
                prod[d - k + i] = (prod[d - k + i] + p - t) % p;
            }
        }
        let digits: Vec<u32> = prod[..k].iter().map(|&c| c as u32).collect();
        self.join(&digits)
    }

    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}
