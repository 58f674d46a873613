//! Derived arithmetic constants for the metacyclic family `Z_k x| Z_{ql}`
//! with twist `n`, and the extra bookkeeping needed by the type II
//! indicator formulas.

use super::cyclotomic::Cyclotomic;
use super::modular::{gcd, is_prime, mod_mul, mod_signed, solve_unit_congruence};
use super::ArithError;

/// Invariants of a valid parameter triple `(k, q, n)` together with the
/// cyclic quotient length `l`. The twist satisfies `n^q = 1 mod k` and
/// `n != 1 mod k` with `q` prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupConstants {
    pub k: u64,
    pub q: u64,
    pub n: u64,
    pub l: u64,
    /// `gcd(n - 1, k)`; the order of the central part of `<a>`.
    pub c: u64,
    /// `d = 1 + n + ... + n^{q-1}` reduced modulo `k * q`.
    pub d_mod_kq: u64,
    /// The residue `d'` in `[0, c)` with `(k/c) * d' = d mod k`.
    pub d_prime: u64,
}

impl GroupConstants {
    pub fn new(k: u64, q: u64, n: u64, l: u64) -> Result<GroupConstants, ArithError> {
        if k < 2 {
            return Err(ArithError::InvalidSpec(format!(
                "k = {k} must be at least 2"
            )));
        }
        if !is_prime(q) {
            return Err(ArithError::InvalidSpec(format!("q = {q} must be prime")));
        }
        if l == 0 {
            return Err(ArithError::InvalidSpec("l must be positive".into()));
        }
        let n = n % k;
        if n <= 1 {
            return Err(ArithError::InvalidSpec(format!(
                "twist n = {n} mod {k} must differ from 0 and 1"
            )));
        }
        let mut n_to_q = 1u64;
        for _ in 0..q {
            n_to_q = mod_mul(n_to_q, n, k);
        }
        if n_to_q != 1 {
            return Err(ArithError::InvalidSpec(format!(
                "twist must have order dividing q: {n}^{q} = {n_to_q} mod {k}"
            )));
        }

        let c = gcd(n - 1, k);
        let kq = k
            .checked_mul(q)
            .ok_or_else(|| ArithError::InvalidSpec("k * q overflows".into()))?;
        let mut d_mod_kq = 0u64;
        let mut power = 1u64;
        for _ in 0..q {
            d_mod_kq = (d_mod_kq + power) % kq;
            power = mod_mul(power, n, kq);
        }

        let d_mod_k = d_mod_kq % k;
        assert_eq!(d_mod_k % (k / c), 0, "k/c divides d");
        let d_prime = d_mod_k / (k / c) % c;

        let constants = GroupConstants { k, q, n, l, c, d_mod_kq, d_prime };
        constants.assert_invariants();
        Ok(constants)
    }

    fn assert_invariants(&self) {
        let GroupConstants { k, q, n, c, d_mod_kq, .. } = *self;
        assert_eq!(d_mod_kq % c, q % c, "d = q mod c");
        assert_eq!(k % q, c % q, "k = c mod q");
        if q > 2 {
            let qq = q * q;
            let mut d_mod_qq = 0u64;
            let mut power = 1u64;
            for _ in 0..q {
                d_mod_qq = (d_mod_qq + power) % qq;
                power = mod_mul(power, n, qq);
            }
            assert_ne!(d_mod_qq, 0, "q^2 does not divide d");
            let mut weighted = 0u64;
            let mut power = 1u64;
            for j in 0..q - 1 {
                weighted = (weighted + mod_mul(j + 1, power, q)) % q;
                power = mod_mul(power, n, q);
            }
            let scaled = mod_mul(mod_signed(n as i128 - 1, q), weighted, q);
            assert_eq!((scaled + d_mod_kq) % q, 0, "(n-1) * weighted sum = -d mod q");
            if d_mod_kq % q == 0 {
                assert_eq!(weighted, 0, "q divides the weighted sum when q divides d");
            }
            if d_mod_kq % q == 0 {
                let prod = mod_mul(d_mod_kq, mod_signed(d_mod_kq as i128 - q as i128, k * q), k * q);
                assert_eq!(prod, 0, "kq divides d(d - q) when q divides d");
            }
        }
    }

    /// `d` reduced modulo `k`.
    pub fn d_mod_k(&self) -> u64 {
        self.d_mod_kq % self.k
    }

    /// `h = gcd(d, k)`.
    pub fn h(&self) -> u64 {
        gcd(self.d_mod_k(), self.k)
    }

    /// Whether `v` is divisible by `k * q` for `v` given modulo `k * q`.
    /// Callers pass products already reduced with [`mod_mul`].
    pub fn kq(&self) -> u64 {
        self.k * self.q
    }
}

/// Bookkeeping for the type II indicator formulas at a fixed power `m`
/// (divisible by `q`) and orbit data `(i, r)`.
#[derive(Clone, Debug)]
pub struct TypeIIData {
    pub m: u64,
    /// `gcd((m/q) * (d - q), k)`.
    pub h_m: u64,
    /// A unit `u mod k` with `u * (m/q) * (d - q) = h_m mod k`.
    pub u: u64,
    /// `(m * i / h_m) * u mod k`.
    pub v_i: u64,
    /// The root `zeta_c^{E/(k/c)}` where `E = r * d * (m/q) * v_i mod k`.
    pub xi: Cyclotomic,
    xi_exponent: u64,
    c: u64,
}

impl TypeIIData {
    /// `+1` or `-1` when `xi` is rational, `None` otherwise.
    pub fn xi_sign(&self) -> Option<i64> {
        if self.xi_exponent == 0 {
            Some(1)
        } else if self.c.is_multiple_of(2) && self.xi_exponent == self.c / 2 {
            Some(-1)
        } else {
            None
        }
    }
}

/// The type II constants for `(m, i, r)`, or `None` when `h_m` does not
/// divide `m * i` (no contribution arises in that case).
pub fn type2_constants(
    gc: &GroupConstants,
    m: u64,
    i: u64,
    r: u64,
) -> Result<Option<TypeIIData>, ArithError> {
    if !m.is_multiple_of(gc.q) {
        return Err(ArithError::NotDivisible(format!(
            "power m = {m} must be divisible by q = {}",
            gc.q
        )));
    }
    let k = gc.k;
    let m_over_q = m / gc.q;
    let d_minus_q = mod_signed(gc.d_mod_k() as i128 - gc.q as i128, k);
    let a = mod_mul(m_over_q % k, d_minus_q, k);
    let (h_m, u) = solve_unit_congruence(a, k);
    debug_assert_eq!(mod_mul(u, a, k), h_m % k);

    let mi = m as u128 * i as u128;
    if !mi.is_multiple_of(h_m as u128) {
        return Ok(None);
    }
    let v_i = mod_mul(((mi / h_m as u128) % k as u128) as u64, u, k);

    let e = mod_mul(mod_mul(r % k, gc.d_mod_k(), k), mod_mul(m_over_q % k, v_i, k), k);
    assert_eq!(e % (k / gc.c), 0, "k/c divides the xi exponent");
    let xi_exponent = e / (k / gc.c) % gc.c;
    let xi = Cyclotomic::root(gc.c as u32, xi_exponent);

    Ok(Some(TypeIIData { m, h_m, u, v_i, xi, xi_exponent, c: gc.c }))
}
