//! Character values kept symbolically as multisets of roots of unity.

use num::{BigInt, BigRational};

use crate::exact_arith::{cyc_table, ArithError, Cyclotomic};

/// A sum of roots of unity `sum_t zeta_N^{e_t}`, the exact form taken by
/// every character value in this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSum {
    conductor: u32,
    exponents: Vec<u64>,
}

impl RootSum {
    pub fn zero(conductor: u32) -> RootSum {
        RootSum { conductor, exponents: Vec::new() }
    }

    pub fn root(conductor: u32, exponent: u64) -> RootSum {
        RootSum { conductor, exponents: vec![exponent % conductor as u64] }
    }

    pub fn from_exponents(conductor: u32, exponents: Vec<u64>) -> RootSum {
        let n = conductor as u64;
        let mut exponents: Vec<u64> = exponents.into_iter().map(|e| e % n).collect();
        exponents.sort_unstable();
        RootSum { conductor, exponents }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// The exponents of the constituent roots, ascending.
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    /// Number of constituent roots; for a character value at the identity
    /// this is the degree.
    pub fn terms(&self) -> usize {
        self.exponents.len()
    }

    pub fn conj(&self) -> RootSum {
        let n = self.conductor as u64;
        RootSum::from_exponents(
            self.conductor,
            self.exponents.iter().map(|&e| (n - e) % n).collect(),
        )
    }

    pub fn add(&self, rhs: &RootSum) -> RootSum {
        assert_eq!(self.conductor, rhs.conductor);
        let mut exponents = self.exponents.clone();
        exponents.extend_from_slice(&rhs.exponents);
        RootSum::from_exponents(self.conductor, exponents)
    }

    pub fn mul(&self, rhs: &RootSum) -> RootSum {
        assert_eq!(self.conductor, rhs.conductor);
        let n = self.conductor as u64;
        let mut exponents = Vec::with_capacity(self.exponents.len() * rhs.exponents.len());
        for &e1 in &self.exponents {
            for &e2 in &rhs.exponents {
                exponents.push((e1 + e2) % n);
            }
        }
        RootSum::from_exponents(self.conductor, exponents)
    }

    /// The value of the sum raised into the power basis of `Q(zeta_N)`.
    pub fn reduced_coords(&self) -> Vec<i64> {
        let table = cyc_table(self.conductor);
        let mut counts = vec![0i64; self.conductor as usize];
        for &e in &self.exponents {
            counts[e as usize] += 1;
        }
        table.reduce_counts(&counts)
    }

    pub fn to_cyclotomic(&self) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(self.conductor);
        for &e in &self.exponents {
            acc = acc.add(&Cyclotomic::root(self.conductor, e));
        }
        acc
    }

    /// Equality as field elements rather than as multisets of roots.
    pub fn value_eq(&self, rhs: &RootSum) -> bool {
        self.conductor == rhs.conductor && self.reduced_coords() == rhs.reduced_coords()
    }

    pub fn is_zero_value(&self) -> bool {
        self.exponents.is_empty() || self.reduced_coords().iter().all(|&c| c == 0)
    }

    pub fn as_rational(&self) -> Result<BigRational, ArithError> {
        self.to_cyclotomic().as_rational()
    }

    pub fn as_integer(&self) -> Result<BigInt, ArithError> {
        self.to_cyclotomic().as_integer()
    }
}
