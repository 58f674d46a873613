//! Exact elements of the cyclotomic field `Q(zeta_N)`, stored in the power
//! basis `1, zeta, ..., zeta^{phi(N)-1}` with rational coefficients and
//! reduced modulo the `N`-th cyclotomic polynomial.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::{BigInt, BigRational, One, Zero};

use super::ArithError;

/// Largest conductor for which a reduction table will be built. Grid runs
/// stay far below this; the CLI order ceiling rejects inputs earlier.
const MAX_CONDUCTOR: u32 = 1 << 14;

/// Euler totient by trial-division factoring.
pub fn euler_phi(n: u64) -> u64 {
    let mut n = n;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    let mut ds = Vec::new();
    for d in 1..=n {
        if n.is_multiple_of(d) {
            ds.push(d);
        }
    }
    ds
}

/// Exact division of integer polynomials; `den` must be monic and divide
/// `num` exactly. Coefficients are little-endian.
fn poly_div_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd] == 1, "divisor must be monic");
    assert!(dn >= dd);
    let mut rem = num.to_vec();
    let mut quot = vec![0i128; dn - dd + 1];
    for i in (0..=dn - dd).rev() {
        let c = rem[i + dd];
        quot[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "division must be exact");
    quot
}

/// Coefficients of the `n`-th cyclotomic polynomial, computed by dividing
/// `x^n - 1` by the cyclotomic polynomials of all proper divisors of `n`.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    assert!(n >= 1);
    let mut known: HashMap<u32, Vec<i128>> = HashMap::new();
    known.insert(1, vec![-1, 1]);
    for d in divisors(n) {
        if d == 1 || known.contains_key(&d) {
            continue;
        }
        let mut poly = vec![0i128; d as usize + 1];
        poly[0] = -1;
        poly[d as usize] = 1;
        for e in divisors(d) {
            if e < d {
                poly = poly_div_exact(&poly, &known[&e]);
            }
        }
        known.insert(d, poly);
    }
    known[&n]
        .iter()
        .map(|&c| i64::try_from(c).expect("cyclotomic coefficient fits i64"))
        .collect()
}

/// Reduction data for a fixed conductor: the minimal polynomial and the
/// power-basis coordinates of every root `zeta_N^e`, `0 <= e < N`.
pub struct CycTable {
    n: u32,
    phi: usize,
    min_poly: Vec<i64>,
    rows: Vec<Vec<i64>>,
}

impl CycTable {
    fn build(n: u32) -> CycTable {
        assert!(
            (1..=MAX_CONDUCTOR).contains(&n),
            "conductor {n} out of supported range"
        );
        let min_poly = cyclotomic_poly(n);
        let phi = min_poly.len() - 1;
        let mut rows: Vec<Vec<i128>> = Vec::with_capacity(n as usize);
        for e in 0..n as usize {
            if e < phi {
                let mut row = vec![0i128; phi];
                row[e] = 1;
                rows.push(row);
            } else {
                let prev = &rows[e - 1];
                let carry = prev[phi - 1];
                let mut row = vec![0i128; phi];
                row[1..phi].copy_from_slice(&prev[..phi - 1]);
                if carry != 0 {
                    for (slot, coeff) in row.iter_mut().zip(&min_poly) {
                        *slot -= carry * *coeff as i128;
                    }
                }
                rows.push(row);
            }
        }
        let rows = rows
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|c| i64::try_from(c).expect("reduced root coordinate fits i64"))
                    .collect()
            })
            .collect();
        CycTable { n, phi, min_poly, rows }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn phi(&self) -> usize {
        self.phi
    }

    pub fn min_poly(&self) -> &[i64] {
        &self.min_poly
    }

    /// Power-basis coordinates of `zeta_N^e` (exponent taken mod `N`).
    pub fn row(&self, e: u64) -> &[i64] {
        &self.rows[(e % self.n as u64) as usize]
    }

    /// Reduce a vector of integer multiplicities per exponent class to
    /// power-basis coordinates: `sum_e counts[e] * zeta^e`.
    pub fn reduce_counts(&self, counts: &[i64]) -> Vec<i64> {
        assert_eq!(counts.len(), self.n as usize);
        let mut acc = vec![0i64; self.phi];
        for (e, &c) in counts.iter().enumerate() {
            if c != 0 {
                for (i, &r) in self.rows[e].iter().enumerate() {
                    acc[i] += c * r;
                }
            }
        }
        acc
    }
}

static TABLES: OnceLock<Mutex<HashMap<u32, Arc<CycTable>>>> = OnceLock::new();

/// Shared reduction table for conductor `n`, built on first use.
pub fn cyc_table(n: u32) -> Arc<CycTable> {
    let tables = TABLES.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = tables.lock().expect("cyclotomic table registry poisoned");
    guard.entry(n).or_insert_with(|| Arc::new(CycTable::build(n))).clone()
}

/// An element of `Q(zeta_N)` in reduced power-basis form.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    n: u32,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(n: u32) -> Cyclotomic {
        let phi = cyc_table(n).phi();
        Cyclotomic { n, coeffs: vec![BigRational::zero(); phi] }
    }

    pub fn one(n: u32) -> Cyclotomic {
        Cyclotomic::from_rational(n, BigRational::one())
    }

    pub fn from_rational(n: u32, r: BigRational) -> Cyclotomic {
        let mut out = Cyclotomic::zero(n);
        out.coeffs[0] = r;
        out
    }

    pub fn from_integer(n: u32, v: i64) -> Cyclotomic {
        Cyclotomic::from_rational(n, BigRational::from_integer(BigInt::from(v)))
    }

    /// The root of unity `zeta_N^e`.
    pub fn root(n: u32, e: u64) -> Cyclotomic {
        let table = cyc_table(n);
        let coeffs = table
            .row(e)
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        Cyclotomic { n, coeffs }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn assert_same_field(&self, rhs: &Cyclotomic) {
        assert_eq!(
            self.n, rhs.n,
            "cyclotomic operands must share one conductor"
        );
    }

    pub fn add(&self, rhs: &Cyclotomic) -> Cyclotomic {
        self.assert_same_field(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Cyclotomic { n: self.n, coeffs }
    }

    pub fn sub(&self, rhs: &Cyclotomic) -> Cyclotomic {
        self.assert_same_field(rhs);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Cyclotomic { n: self.n, coeffs }
    }

    pub fn neg(&self) -> Cyclotomic {
        let coeffs = self.coeffs.iter().map(|a| -a).collect();
        Cyclotomic { n: self.n, coeffs }
    }

    pub fn scale(&self, r: &BigRational) -> Cyclotomic {
        let coeffs = self.coeffs.iter().map(|a| a * r).collect();
        Cyclotomic { n: self.n, coeffs }
    }

    pub fn mul(&self, rhs: &Cyclotomic) -> Cyclotomic {
        self.assert_same_field(rhs);
        let table = cyc_table(self.n);
        let phi = table.phi();
        let mut raw = vec![BigRational::zero(); 2 * phi];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                raw[i + j] += a * b;
            }
        }
        let mut coeffs = raw[..phi].to_vec();
        for (e, c) in raw.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (i, &r) in table.row(e as u64).iter().enumerate() {
                if r != 0 {
                    coeffs[i] += c * BigRational::from_integer(BigInt::from(r));
                }
            }
        }
        Cyclotomic { n: self.n, coeffs }
    }

    /// Complex conjugation, `zeta^e -> zeta^{N-e}`.
    pub fn conj(&self) -> Cyclotomic {
        let table = cyc_table(self.n);
        let mut out = Cyclotomic::zero(self.n);
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e_conj = (self.n as u64 - e as u64) % self.n as u64;
            for (i, &r) in table.row(e_conj).iter().enumerate() {
                if r != 0 {
                    out.coeffs[i] += c * BigRational::from_integer(BigInt::from(r));
                }
            }
        }
        out
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Result<BigRational, ArithError> {
        if self.coeffs[1..].iter().any(|c| !c.is_zero()) {
            return Err(ArithError::NotRational(format!("{self}")));
        }
        Ok(self.coeffs[0].clone())
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Result<BigInt, ArithError> {
        let r = self
            .as_rational()
            .map_err(|_| ArithError::NotAnInteger(format!("{self}")))?;
        if !r.is_integer() {
            return Err(ArithError::NotAnInteger(format!("{self}")));
        }
        Ok(r.to_integer())
    }

    /// Integer power-basis coordinates when every coefficient is an integer
    /// small enough for `i64`.
    pub fn to_int_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| {
                if c.is_integer() {
                    let v = c.to_integer();
                    i64::try_from(&v).ok()
                } else {
                    None
                }
            })
            .collect()
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "z{}^{e}", self.n)?;
            } else {
                write!(f, "{c}*z{}^{e}", self.n)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
