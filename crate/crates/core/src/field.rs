//! Small finite fields GF(p^k) with table arithmetic.
//!
//! Elements are encoded as integers `0..q` whose base-`p` digits are the
//! coefficients of a polynomial in the generator of the field, lowest degree
//! first. The prime subfield is therefore `0..p` with ordinary residues.

use crate::error::{GroupError, Result};
use crate::numtheory::{is_prime, prime_power};

pub type FieldElem = u16;

/// Largest field order supported by the table representation.
pub const MAX_FIELD_ORDER: u32 = 1024;

#[derive(Debug, Clone)]
pub struct GaloisField {
    p: u32,
    degree: u32,
    q: u32,
    add: Vec<FieldElem>,
    mul: Vec<FieldElem>,
    neg: Vec<FieldElem>,
    inv: Vec<FieldElem>,
    primitive: FieldElem,
}

impl GaloisField {
    pub fn new(q: u32) -> Result<Self> {
        let (p, degree) = prime_power(q as u64)
            .ok_or_else(|| GroupError::InvalidParams(format!("{q} is not a prime power")))?;
        if q > MAX_FIELD_ORDER {
            return Err(GroupError::InvalidParams(format!(
                "field order {q} exceeds {MAX_FIELD_ORDER}"
            )));
        }
        let (p, degree) = (p as u32, degree);
        debug_assert!(is_prime(p as u64));

        let digits = |x: u32| -> Vec<u32> {
            let mut v = Vec::with_capacity(degree as usize);
            let mut x = x;
            for _ in 0..degree {
                v.push(x % p);
                x /= p;
            }
            v
        };
        let encode = |d: &[u32]| -> u32 { d.iter().rev().fold(0, |acc, &c| acc * p + c) };

        let n = q as usize;
        let mut add = vec![0; n * n];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = encode(&s) as FieldElem;
            }
        }

        // Search monic polynomials of the right degree for one whose quotient
        // ring has no zero divisors.
        let mul = if degree == 1 {
            let mut mul = vec![0; n * n];
            for a in 0..q {
                for b in 0..q {
                    mul[(a * q + b) as usize] = ((a * b) % p) as FieldElem;
                }
            }
            mul
        } else {
            let mut found = None;
            for tail in 0..q {
                // modulus x^k + tail(x)
                let modulus = digits(tail);
                if modulus[0] == 0 {
                    continue;
                }
                let table = poly_mul_table(p, degree, q, &modulus, &digits, &encode);
                let zero_divisor = (1..q).any(|a| (1..q).any(|b| table[(a * q + b) as usize] == 0));
                if !zero_divisor {
                    found = Some(table);
                    break;
                }
            }
            found.ok_or_else(|| GroupError::Internal(format!("no irreducible polynomial for GF({q})")))?
        };

        let mut neg = vec![0; n];
        let mut inv = vec![0; n];
        for a in 0..q {
            for b in 0..q {
                if add[(a * q + b) as usize] == 0 {
                    neg[a as usize] = b as FieldElem;
                }
                if a != 0 && mul[(a * q + b) as usize] == 1 {
                    inv[a as usize] = b as FieldElem;
                }
            }
        }

        let mut field = Self {
            p,
            degree,
            q,
            add,
            mul,
            neg,
            inv,
            primitive: 1,
        };
        field.primitive = (1..q)
            .map(|a| a as FieldElem)
            .find(|&a| field.mult_order(a) == q - 1)
            .ok_or_else(|| GroupError::Internal("multiplicative group is not cyclic".into()))?;
        Ok(field)
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// A generator of the multiplicative group.
    pub fn primitive(&self) -> FieldElem {
        self.primitive
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        self.neg[a as usize]
    }

    /// Multiplicative inverse; `inv(0)` is 0.
    #[inline]
    pub fn inv(&self, a: FieldElem) -> FieldElem {
        self.inv[a as usize]
    }

    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn mult_order(&self, a: FieldElem) -> u32 {
        assert!(a != 0);
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_square(&self, a: FieldElem) -> bool {
        a == 0 || (0..self.q).any(|x| self.mul(x as FieldElem, x as FieldElem) == a)
    }

    /// Reduce an integer into the prime subfield.
    pub fn from_int(&self, v: i64) -> FieldElem {
        v.rem_euclid(self.p as i64) as FieldElem
    }

    /// `primitive^j`, convenient for building bases over the prime field.
    pub fn primitive_power(&self, j: u64) -> FieldElem {
        self.pow(self.primitive, j)
    }
}

fn poly_mul_table(
    p: u32,
    degree: u32,
    q: u32,
    modulus: &[u32],
    digits: &dyn Fn(u32) -> Vec<u32>,
    encode: &dyn Fn(&[u32]) -> u32,
) -> Vec<FieldElem> {
    let k = degree as usize;
    let mut table = vec![0; (q * q) as usize];
    for a in 0..q {
        let da = digits(a);
        for b in a..q {
            let db = digits(b);
            let mut prod = vec![0u32; 2 * k - 1];
            for (i, x) in da.iter().enumerate() {
                for (j, y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            // x^k = -tail(x)
            for d in (k..2 * k - 1).rev() {
                let c = prod[d];
                if c == 0 {
                    continue;
                }
                prod[d] = 0;
                for (i, m) in modulus.iter().enumerate() {
                    let sub = (c * m) % p;
                    prod[d - k + i] = (prod[d - k + i] + p - sub) % p;
                }
            }
            let v = encode(&prod[..k]) as FieldElem;
            table[(a * q + b) as usize] = v;
            table[(b * q + a) as usize] = v;
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_field_axioms(f: &GaloisField) {
        let q = f.order() as FieldElem;
        for a in 0..q {
            assert_eq!(f.add(a, 0), a);
            assert_eq!(f.mul(a, 1), a);
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
            for b in 0..q {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in [0, 1, f.primitive(), q - 1] {
                    assert_eq!(
                        f.mul(a, f.add(b, c)),
                        f.add(f.mul(a, b), f.mul(a, c))
                    );
                }
            }
        }
    }

    #[test]
    fn prime_and_extension_fields() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = GaloisField::new(q).unwrap();
            check_field_axioms(&f);
            assert_eq!(f.mult_order(f.primitive()), q - 1);
        }
    }

    #[test]
    fn rejects_non_prime_power() {
        assert!(GaloisField::new(12).is_err());
        assert!(GaloisField::new(1).is_err());
    }

    #[test]
    fn squares_in_gf23() {
        let f = GaloisField::new(23).unwrap();
        let squares = (1..23).filter(|&a| f.is_square(a)).count();
        assert_eq!(squares, 11);
        assert!(!f.is_square(22)); // -1 is a non-square since 23 = 3 mod 4
    }
}
