//! Blum-Blum-Shub: `x ← x² mod n` with `n = p·q`, `p ≡ q ≡ 3 (mod 4)`,
//! emitting the parity of each new state.
//!
//! Moduli here fit in 64 bits. That is enough for reproducible traces and
//! for exercising the strategy contract, and nowhere near enough for
//! cryptographic strength.

use super::stream::BitSource;
use crate::{Error, Result};

/// Primes and optional fixed start state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BbsParams {
    pub p: u64,
    pub q: u64,
    /// When set, every stream starts from this state instead of one derived
    /// from the key.
    pub x0: Option<u64>,
}

impl Default for BbsParams {
    fn default() -> Self {
        BbsParams {
            p: 2_147_483_647,
            q: 2_147_483_659,
            x0: None,
        }
    }
}

impl BbsParams {
    pub fn modulus(&self) -> Result<u64> {
        for prime in [self.p, self.q] {
            if !is_prime(prime) {
                return Err(Error::InvalidBbs(format!("{prime} is not prime")));
            }
            if prime % 4 != 3 {
                return Err(Error::InvalidBbs(format!("{prime} is not 3 mod 4")));
            }
        }
        if self.p == self.q {
            return Err(Error::InvalidBbs("p and q must differ".into()));
        }
        self.p
            .checked_mul(self.q)
            .ok_or_else(|| Error::InvalidBbs("p·q overflows 64 bits".into()))
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.modulus()?;
        if let Some(x) = self.x0 {
            check_state(n, x)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BbsState {
    modulus: u64,
    state: u64,
}

fn check_state(n: u64, x: u64) -> Result<()> {
    if x <= 1 || x >= n {
        return Err(Error::InvalidBbs(format!("state {x} outside (1, {n})")));
    }
    if gcd(x, n) != 1 {
        return Err(Error::InvalidBbs(format!(
            "state {x} shares a factor with {n}"
        )));
    }
    Ok(())
}

impl BbsState {
    pub fn new(p: u64, q: u64, x: u64) -> Result<Self> {
        let modulus = BbsParams { p, q, x0: None }.modulus()?;
        check_state(modulus, x)?;
        Ok(BbsState { modulus, state: x })
    }

    /// Start state derived from key material (or `params.x0` when fixed).
    pub fn seeded(params: BbsParams, material: &[u8]) -> Result<Self> {
        if let Some(x0) = params.x0 {
            return Self::new(params.p, params.q, x0);
        }
        let n = params.modulus()?;
        let mut v = material
            .iter()
            .take(16)
            .fold(0u128, |acc, &b| (acc << 8) | u128::from(b))
            % u128::from(n);
        loop {
            let x = (v * v % u128::from(n)) as u64;
            if x > 1 && gcd(x, n) == 1 {
                return Ok(BbsState {
                    modulus: n,
                    state: x,
                });
            }
            v = (v + 1) % u128::from(n);
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn state(&self) -> u64 {
        self.state
    }

    fn square(&self) -> u64 {
        let x = u128::from(self.state);
        (x * x % u128::from(self.modulus)) as u64
    }
}

/// One step: returns the parity of `x² mod n` and the advanced state.
pub fn bbs_next_bit(st: &BbsState) -> (bool, BbsState) {
    let next = st.square();
    (
        next & 1 == 1,
        BbsState {
            modulus: st.modulus,
            state: next,
        },
    )
}

impl BitSource for BbsState {
    fn next_bit(&mut self) -> bool {
        self.state = self.square();
        self.state & 1 == 1
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (u128::from(a) * u128::from(b) % u128::from(m)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for 64-bit inputs.
fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
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
