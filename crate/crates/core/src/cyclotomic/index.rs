use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest index accepted by default.
pub const DEFAULT_LIMIT: u64 = 10_000_000;

/// Primes in `[2, bound]`, ascending (sieve of Eratosthenes).
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let bound = bound as usize;
    let mut composite = vec![false; bound + 1];
    let mut out = Vec::new();
    for i in 2..=bound {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= bound {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Odd primes in `(lo, hi)`, exclusive on both ends.
pub fn odd_primes_between(primes: &[u64], lo: u64, hi: u64) -> impl Iterator<Item = u64> + '_ {
    let start = primes.partition_point(|&p| p <= lo);
    primes[start..]
        .iter()
        .copied()
        .take_while(move |&p| p < hi)
        .filter(|&p| p > 2)
}

/// Trial-division table good for every `n <= limit`.
#[derive(Debug, Clone)]
pub struct Sieve {
    limit: u64,
    small_primes: Vec<u64>,
}

impl Sieve {
    pub fn new(limit: u64) -> Self {
        let root = isqrt(limit) + 1;
        Sieve {
            limit,
            small_primes: primes_up_to(root),
        }
    }

    /// Shared sieve for [`DEFAULT_LIMIT`], built on first use.
    pub fn shared() -> &'static Sieve {
        static SHARED: OnceLock<Sieve> = OnceLock::new();
        SHARED.get_or_init(|| Sieve::new(DEFAULT_LIMIT))
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    fn check(&self, n: u64) -> Result<()> {
        if n == 0 {
            return Err(Error::Parse("index must be a positive integer".into()));
        }
        if n > self.limit {
            return Err(Error::LimitExceeded {
                n,
                limit: self.limit,
            });
        }
        Ok(())
    }

    pub fn factor(&self, n: u64) -> Result<FactoredIndex> {
        self.check(n)?;
        let mut rest = n;
        let mut factors = Vec::new();
        for &p in &self.small_primes {
            if p * p > rest {
                break;
            }
            if rest.is_multiple_of(p) {
                let mut k = 0;
                while rest.is_multiple_of(p) {
                    rest /= p;
                    k += 1;
                }
                factors.push((p, k));
            }
        }
        if rest > 1 {
            factors.push((rest, 1));
        }
        Ok(FactoredIndex::from_factors(n, factors))
    }

    pub fn is_prime(&self, n: u64) -> Result<bool> {
        self.check(n.max(1))?;
        Ok(n >= 2 && self.factor(n)?.prime_factors == [(n, 1)])
    }

    pub fn require_odd_prime(&self, p: u64) -> Result<()> {
        if p == 2 || p > self.limit || !self.is_prime(p)? {
            return Err(Error::NotOddPrime(p));
        }
        Ok(())
    }

    /// Validates `primes` as strictly increasing odd primes.
    pub fn require_odd_prime_chain(&self, primes: &[u64]) -> Result<()> {
        for &p in primes {
            self.require_odd_prime(p)?;
        }
        if primes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotAscending(primes.to_vec()));
        }
        Ok(())
    }

    /// Parses an index given either in decimal (`"105"`) or as an explicit
    /// product of primes (`"3*5*7"`, repeats allowed).
    pub fn parse_index(&self, text: &str) -> Result<FactoredIndex> {
        let text = text.trim();
        if !text.contains('*') {
            let n: u64 = text
                .parse()
                .map_err(|_| Error::Parse(format!("{text:?} is not a positive integer")))?;
            return self.factor(n);
        }
        let mut n: u64 = 1;
        for part in text.split('*') {
            let p: u64 = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad factor {part:?} in {text:?}")))?;
            if p < 2 || p > self.limit || !self.is_prime(p)? {
                return Err(Error::Parse(format!("factor {p} in {text:?} is not prime")));
            }
            n = n.checked_mul(p).ok_or(Error::LimitExceeded {
                n: u64::MAX,
                limit: self.limit,
            })?;
            if n > self.limit {
                return Err(Error::LimitExceeded {
                    n,
                    limit: self.limit,
                });
            }
        }
        self.factor(n)
    }
}

pub(crate) fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// A positive index together with its factorization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactoredIndex {
    pub n: u64,
    /// `(prime, multiplicity)`, primes ascending.
    pub prime_factors: Vec<(u64, u32)>,
    pub radical: u64,
    pub is_squarefree: bool,
    pub is_odd: bool,
    /// Euler's totient, `deg(Φ_n)`.
    pub totient: u64,
}

impl FactoredIndex {
    fn from_factors(n: u64, prime_factors: Vec<(u64, u32)>) -> Self {
        let radical = prime_factors.iter().map(|f| f.0).product();
        let totient = prime_factors
            .iter()
            .map(|&(p, k)| (p - 1) * p.pow(k - 1))
            .product();
        FactoredIndex {
            n,
            is_squarefree: prime_factors.iter().all(|f| f.1 == 1),
            is_odd: n % 2 == 1,
            radical,
            totient,
            prime_factors,
        }
    }

    /// `deg(Ψ_n) = n - φ(n)`.
    pub fn psi_degree(&self) -> u64 {
        self.n - self.totient
    }

    pub fn distinct_primes(&self) -> Vec<u64> {
        self.prime_factors.iter().map(|f| f.0).collect()
    }

    /// Squarefree divisors `d` of `n` with their Möbius values, `d` ascending.
    pub fn mobius_divisors(&self) -> Vec<(u64, i8)> {
        let primes = self.distinct_primes();
        let mut out = Vec::with_capacity(1 << primes.len());
        for mask in 0u32..(1 << primes.len()) {
            let mut d = 1;
            for (i, p) in primes.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    d *= p;
                }
            }
            let mu = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            out.push((d, mu));
        }
        out.sort_unstable();
        out
    }
}
