//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! Elements are stored on the power basis `1, z, ..., z^(phi(N)-1)` reduced
//! modulo the `N`-th cyclotomic polynomial, so equality of coefficient
//! vectors (after lifting to a common order) decides equality of field
//! elements. Mixed-order arithmetic lifts both operands into
//! `Q(zeta_lcm)`; results are not automatically pushed back down into
//! smaller fields.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational scalar; always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(num: i64) -> Rational {
    Rational::from(BigInt::from(num))
}

/// Euler totient.
pub fn euler_phi(n: u32) -> usize {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as usize
}

/// Integer polynomial, little-endian coefficients, used only to compute
/// cyclotomic polynomials.
fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let q = cyclotomic_polynomial(d);
            p = poly_div_exact_int(&p, &q);
        }
    }
    p
}

/// Exact division of integer polynomials (panics if not exact; callers only
/// divide x^n - 1 by known factors).
fn poly_div_exact_int(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let nd = rem.len() - 1;
    assert!(nd >= dd);
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (i, dc) in den.iter().enumerate() {
            let t = dc * &c;
            rem[k + i] -= t;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division not exact");
    quot
}

/// Cached reduction data for one cyclotomic order.
struct CycloTable {
    phi: usize,
    /// `powers[j]` is `z^j` on the power basis, for `j = 0..n`.
    powers: Vec<Vec<Rational>>,
}

impl CycloTable {
    fn new(n: u32) -> Self {
        let cp = cyclotomic_polynomial(n);
        let phi = cp.len() - 1;
        // x^phi = -(c_0 + c_1 x + ... + c_{phi-1} x^{phi-1})
        let head: Vec<Rational> = cp[..phi]
            .iter()
            .map(|c| -Rational::from(c.clone()))
            .collect();
        let mut powers: Vec<Vec<Rational>> = Vec::with_capacity(n as usize);
        for j in 0..n as usize {
            if j < phi {
                let mut v = vec![Rational::zero(); phi];
                v[j] = Rational::one();
                powers.push(v);
            } else {
                // z^j = z * z^(j-1), reduced.
                let prev = &powers[j - 1];
                let mut v = vec![Rational::zero(); phi];
                let overflow = prev[phi - 1].clone();
                for i in 1..phi {
                    v[i] = prev[i - 1].clone();
                }
                if !overflow.is_zero() {
                    for i in 0..phi {
                        v[i] += &overflow * &head[i];
                    }
                }
                powers.push(v);
            }
        }
        CycloTable { phi, powers }
    }
}

fn table(n: u32) -> Arc<CycloTable> {
    static TABLES: OnceLock<Mutex<HashMap<u32, Arc<CycloTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = tables.lock().unwrap().get(&n) {
        return Arc::clone(t);
    }
    let t = Arc::new(CycloTable::new(n));
    tables
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::clone(&t));
    t
}

/// Exact element of `Q(zeta_N)` on the power basis modulo `Phi_N`.
#[derive(Clone)]
pub struct CycloNum {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CycloNum {
    pub fn zero() -> Self {
        CycloNum {
            order: 1,
            coeffs: vec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        CycloNum {
            order: 1,
            coeffs: vec![Rational::one()],
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        CycloNum {
            order: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(rat_int(k))
    }

    /// The primitive root `zeta_N`.
    pub fn zeta(n: u32) -> Self {
        assert!(n >= 1);
        let t = table(n);
        let mut coeffs = vec![Rational::zero(); t.phi];
        if n == 1 {
            coeffs[0] = Rational::one();
        } else {
            coeffs[1 % t.phi] = Rational::one();
            if t.phi == 1 {
                // n = 2: zeta = -1.
                coeffs[0] = -Rational::one();
            }
        }
        CycloNum { order: n, coeffs }
    }

    /// `zeta_N^k` for any integer `k` (negative powers allowed).
    pub fn zeta_pow(n: u32, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let t = table(n);
        CycloNum {
            order: n,
            coeffs: t.powers[e].clone(),
        }
    }

    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), euler_phi(order));
        CycloNum { order, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// Whether the element lies in `Q` (the power basis makes this a
    /// support check on the constant coefficient).
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn rational_part(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Lift into `Q(zeta_m)`; requires `order | m`.
    pub fn lift(&self, m: u32) -> CycloNum {
        if m == self.order {
            return self.clone();
        }
        assert_eq!(m % self.order, 0, "can only lift into a larger field");
        let t = table(m);
        let step = (m / self.order) as usize;
        let mut coeffs = vec![Rational::zero(); t.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &t.powers[(i * step) % m as usize];
            for (k, rc) in row.iter().enumerate() {
                if !rc.is_zero() {
                    coeffs[k] += c * rc;
                }
            }
        }
        CycloNum { order: m, coeffs }
    }

    fn common_order(&self, other: &CycloNum) -> u32 {
        (self.order as u64).lcm(&(other.order as u64)) as u32
    }

    /// The Galois automorphism `zeta_N -> zeta_N^j`; fixes `Q` pointwise.
    pub fn galois(&self, j: i64) -> Result<CycloNum> {
        let n = self.order;
        let jr = j.rem_euclid(n as i64) as u64;
        if (n as u64).gcd(&jr) != 1 {
            return Err(Error::NotCoprime { j, n });
        }
        let t = table(n);
        let mut coeffs = vec![Rational::zero(); t.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = (i as u64 * jr % n as u64) as usize;
            let row = &t.powers[e];
            for (k, rc) in row.iter().enumerate() {
                if !rc.is_zero() {
                    coeffs[k] += c * rc;
                }
            }
        }
        Ok(CycloNum { order: n, coeffs })
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Phi_N` (irreducible over `Q`, so any nonzero element is a unit).
    pub fn inv(&self) -> Result<CycloNum> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(CycloNum {
                order: self.order,
                coeffs: {
                    let mut v = vec![Rational::zero(); self.coeffs.len()];
                    v[0] = self.coeffs[0].recip();
                    v
                },
            });
        }
        let n = self.order;
        let modulus: Vec<Rational> = cyclotomic_polynomial(n)
            .into_iter()
            .map(Rational::from)
            .collect();
        let a: Vec<Rational> = self.coeffs.clone();
        let (g, u) = poly_half_ext_gcd(&a, &modulus);
        // g is a nonzero constant; inverse = u / g.
        debug_assert!(g.len() == 1 && !g[0].is_zero());
        let ginv = g[0].recip();
        let phi = euler_phi(n);
        let mut coeffs = vec![Rational::zero(); phi];
        for (i, c) in u.iter().enumerate() {
            // deg u < deg Phi, so this fits the basis.
            coeffs[i] = c * &ginv;
        }
        Ok(CycloNum { order: n, coeffs })
    }

    pub fn checked_div(&self, rhs: &CycloNum) -> Result<CycloNum> {
        let m = self.common_order(rhs);
        let b = rhs.lift(m);
        Ok(&self.lift(m) * &b.inv()?)
    }

    /// Integer power, with negative exponents through the inverse.
    pub fn pow(&self, k: i64) -> Result<CycloNum> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = CycloNum::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn scale(&self, r: &Rational) -> CycloNum {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }
}

/// Half-extended GCD over `Q[x]`: returns `(g, u)` with `u*a = g (mod m)`.
fn poly_half_ext_gcd(a: &[Rational], m: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0: Vec<Rational> = m.to_vec();
    let mut r1: Vec<Rational> = a.to_vec();
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    let mut u0: Vec<Rational> = vec![];
    let mut u1: Vec<Rational> = vec![Rational::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divmod(&r0, &r1);
        let u = poly_sub(&u0, &poly_mul(&q, &u1));
        r0 = std::mem::replace(&mut r1, r);
        u0 = std::mem::replace(&mut u1, u);
    }
    (r0, u0)
}

fn poly_trim(p: &mut Vec<Rational>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return (vec![], rem);
    }
    let lead = den[dd].recip();
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] * &lead;
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (i, dc) in den.iter().enumerate() {
            let t = dc * &c;
            rem[k + i] -= t;
        }
    }
    poly_trim(&mut rem);
    (quot, rem)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    poly_trim(&mut out);
    out
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let m = self.common_order(other);
        self.lift(m).coeffs == other.lift(m).coeffs
    }
}

impl Eq for CycloNum {}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        if self.order == rhs.order {
            let coeffs = self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect();
            return CycloNum {
                order: self.order,
                coeffs,
            };
        }
        let m = self.common_order(rhs);
        &self.lift(m) + &rhs.lift(m)
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        self + &(-rhs)
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        CycloNum {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        if self.order != rhs.order {
            let m = self.common_order(rhs);
            return &self.lift(m) * &rhs.lift(m);
        }
        let n = self.order;
        let t = table(n);
        let phi = t.phi;
        // Fast path for rational operands.
        if self.is_rational() {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.is_rational() {
            return self.scale(&rhs.coeffs[0]);
        }
        let mut conv = vec![Rational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        let mut coeffs = conv[..phi.min(conv.len())].to_vec();
        coeffs.resize(phi, Rational::zero());
        for (e, c) in conv.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            let row = &t.powers[e % n as usize];
            for (k, rc) in row.iter().enumerate() {
                if !rc.is_zero() {
                    coeffs[k] += c * rc;
                }
            }
        }
        CycloNum { order: n, coeffs }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: CycloNum) -> CycloNum {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&CycloNum> for CycloNum {
            type Output = CycloNum;
            fn $method(self, rhs: &CycloNum) -> CycloNum {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl AddAssign<&CycloNum> for CycloNum {
    fn add_assign(&mut self, rhs: &CycloNum) {
        if self.order == rhs.order {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a += b;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&CycloNum> for CycloNum {
    fn sub_assign(&mut self, rhs: &CycloNum) {
        if self.order == rhs.order {
            for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *a -= b;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl MulAssign<&CycloNum> for CycloNum {
    fn mul_assign(&mut self, rhs: &CycloNum) {
        *self = &*self * rhs;
    }
}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum(N={}; {})", self.order, self)
    }
}

/// Canonical text form: signed rational coefficients on ascending powers of
/// `z`, e.g. `-1 + 3/2*z^2`; zero prints as `0`.
impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let coef = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("{}/{}", mag.numer(), mag.denom())
            };
            match i {
                0 => write!(f, "{coef}")?,
                1 if mag.is_one() => write!(f, "z")?,
                1 => write!(f, "{coef}*z")?,
                _ if mag.is_one() => write!(f, "z^{i}")?,
                _ => write!(f, "{coef}*z^{i}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Parse the scalar text syntax with an ambient cyclotomic order `n`
/// (`z` denotes `zeta_n`), e.g. `3/2*z^2 - 1`, `-z`, `0`.
pub fn parse_scalar(input: &str, n: u32) -> Result<CycloNum> {
    let mut acc = CycloNum::zero().lift(n);
    let s: Vec<char> = input.chars().collect();
    let mut pos = 0usize;
    let err = |msg: &str| Error::Parse(format!("{msg} in scalar '{input}'"));
    let skip_ws = |pos: &mut usize| {
        while *pos < s.len() && s[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    let parse_uint = |pos: &mut usize| -> Option<BigInt> {
        let start = *pos;
        while *pos < s.len() && s[*pos].is_ascii_digit() {
            *pos += 1;
        }
        if *pos == start {
            return None;
        }
        Some(s[start..*pos].iter().collect::<String>().parse().unwrap())
    };
    skip_ws(&mut pos);
    let mut first = true;
    while pos < s.len() {
        // Sign.
        let mut negative = false;
        if s[pos] == '+' || s[pos] == '-' {
            negative = s[pos] == '-';
            pos += 1;
            skip_ws(&mut pos);
        } else if !first {
            return Err(err("expected '+' or '-'"));
        }
        first = false;
        // Term: [rational] ['*'] ['z' ['^' power]]
        let mut coef = Rational::one();
        let mut saw_number = false;
        if let Some(numer) = parse_uint(&mut pos) {
            saw_number = true;
            let mut denom = BigInt::one();
            skip_ws(&mut pos);
            if pos < s.len() && s[pos] == '/' {
                pos += 1;
                skip_ws(&mut pos);
                denom = parse_uint(&mut pos).ok_or_else(|| err("expected denominator"))?;
                if denom.is_zero() {
                    return Err(err("zero denominator"));
                }
                skip_ws(&mut pos);
            }
            coef = Rational::new(numer, denom);
        }
        skip_ws(&mut pos);
        if pos < s.len() && s[pos] == '*' {
            pos += 1;
            skip_ws(&mut pos);
        }
        let mut power = 0i64;
        if pos < s.len() && s[pos] == 'z' {
            pos += 1;
            power = 1;
            skip_ws(&mut pos);
            if pos < s.len() && s[pos] == '^' {
                pos += 1;
                skip_ws(&mut pos);
                let p = parse_uint(&mut pos).ok_or_else(|| err("expected exponent"))?;
                power = i64::try_from(p).map_err(|_| err("exponent too large"))?;
            }
        } else if !saw_number {
            return Err(err("expected a number or 'z'"));
        }
        if negative {
            coef = -coef;
        }
        let term = CycloNum::zeta_pow(n, power).scale(&coef);
        acc += &term;
        skip_ws(&mut pos);
    }
    Ok(acc)
}
