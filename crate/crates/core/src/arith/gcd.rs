//! Polynomial gcd over `Z[q]`.
//!
//! [`gcd`] is a dense modular algorithm: images over word-sized primes are
//! combined by CRT until the lifted candidate stabilizes and divides both
//! inputs. [`primitive_prs_gcd`] is the textbook primitive remainder sequence,
//! kept as a slow reference.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::IntPolynomial;

/// Gcd in `Z[q]`: the product of the gcd of the contents and the primitive
/// gcd, normalized to a positive leading coefficient.
pub fn gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let Some((c, pa, pb)) = split_contents(a, b) else {
        return normalize_sign(if a.is_zero() { b } else { a });
    };
    if pa.is_constant() || pb.is_constant() {
        return IntPolynomial::constant(c);
    }
    if pa == pb {
        return pa.scale(&c);
    }
    modular_gcd(&pa, &pb).scale(&c)
}

/// Reference gcd via the primitive polynomial remainder sequence.
pub fn primitive_prs_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let Some((c, pa, pb)) = split_contents(a, b) else {
        return normalize_sign(if a.is_zero() { b } else { a });
    };
    let (mut f, mut g) = if pa.degree() >= pb.degree() { (pa, pb) } else { (pb, pa) };
    while !g.is_zero() {
        let r = f.pseudo_rem(&g);
        f = g;
        g = r.primitive_part();
    }
    f.primitive_part().scale(&c)
}

fn normalize_sign(p: &IntPolynomial) -> IntPolynomial {
    if p.leading_coeff().is_some_and(Signed::is_negative) {
        -p
    } else {
        p.clone()
    }
}

fn split_contents(a: &IntPolynomial, b: &IntPolynomial) -> Option<(BigInt, IntPolynomial, IntPolynomial)> {
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let c = a.content().gcd(&b.content());
    Some((c, a.primitive_part(), b.primitive_part()))
}

fn modular_gcd(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let gamma = a.leading_coeff().unwrap().gcd(b.leading_coeff().unwrap());
    let mut best_deg = usize::MAX;
    let mut residues: Vec<BigInt> = Vec::new();
    let mut modulus = BigInt::one();
    let mut last: Option<IntPolynomial> = None;

    for p in Primes::below_2_31() {
        let pb = BigInt::from(p);
        let gamma_p = gamma.mod_floor(&pb).to_u64().unwrap();
        if gamma_p == 0 {
            continue;
        }
        let image = gcd_mod_p(reduce_mod(a, p), reduce_mod(b, p), p);
        let d = image.len() - 1;
        if d == 0 {
            return IntPolynomial::one();
        }
        if d > best_deg {
            continue;
        }
        if d < best_deg {
            best_deg = d;
            residues = vec![BigInt::zero(); d + 1];
            modulus = BigInt::one();
            last = None;
        }
        let scaled: Vec<u64> = image.iter().map(|&c| mul_mod(c, gamma_p, p)).collect();
        crt_combine(&mut residues, &modulus, &scaled, p);
        modulus *= p;

        let half = &modulus >> 1;
        let lifted = IntPolynomial::from_coeffs(
            residues.iter().map(|r| if r > &half { r - &modulus } else { r.clone() }).collect(),
        )
        .primitive_part();
        if last.as_ref() == Some(&lifted) && a.div_exact(&lifted).is_some() && b.div_exact(&lifted).is_some() {
            return lifted;
        }
        last = Some(lifted);
    }
    unreachable!("prime supply below 2^31 exhausted")
}

fn crt_combine(residues: &mut [BigInt], modulus: &BigInt, image: &[u64], p: u64) {
    let pb = BigInt::from(p);
    let m_mod_p = modulus.mod_floor(&pb).to_u64().unwrap();
    let m_inv = pow_mod(m_mod_p, p - 2, p);
    for (r, &g) in residues.iter_mut().zip(image) {
        let r_mod_p = r.mod_floor(&pb).to_u64().unwrap();
        let delta = mul_mod((g + p - r_mod_p) % p, m_inv, p);
        *r += modulus * delta;
    }
}

fn reduce_mod(a: &IntPolynomial, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = a.coeffs().iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    trim(&mut v);
    v
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

/// Monic gcd in `F_p[q]`; at least one input is nonzero.
fn gcd_mod_p(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let factor = mul_mod(*a.last().unwrap(), inv, p);
            for (j, &bc) in b.iter().enumerate() {
                let sub = mul_mod(factor, bc, p);
                a[shift + j] = (a[shift + j] + p - sub) % p;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    let inv = pow_mod(*a.last().unwrap(), p - 2, p);
    a.iter().map(|&c| mul_mod(c, inv, p)).collect()
}

/// Descending primes below `2^31`.
struct Primes {
    next: u64,
}

impl Primes {
    fn below_2_31() -> Self {
        Self { next: (1 << 31) - 1 }
    }
}

impl Iterator for Primes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while self.next > 3 {
            let n = self.next;
            self.next -= 2;
            if is_prime_u32(n) {
                return Some(n);
            }
        }
        None
    }
}

fn is_prime_u32(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    // deterministic for n < 3_215_031_751
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
