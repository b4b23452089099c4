//! Exact sparse univariate polynomials over the integers.
//!
//! A [`SparsePoly`] stores only its nonzero terms, ordered by strictly
//! increasing exponent. Every public constructor and operation returns a
//! polynomial in this canonical form, so structural equality is polynomial
//! equality.
//!
//! Coefficients are `i64`; every arithmetic path detects overflow and reports
//! [`Error::OverflowDetected`] instead of wrapping. Exponents are `u64`.
//!
//! Division is done on a dense coefficient window spanning `tdeg..=deg` of the
//! numerator. Division by a binomial `x^k - 1` uses the telescoping recurrence
//! `q[i] = q[i-k] - a[i]`, which is a single linear pass.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Exp = u64;
pub type Coeff = i64;

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "PolyRepr", into = "PolyRepr")]
pub struct SparsePoly {
    terms: Vec<(Exp, Coeff)>,
}

/// Wire form: `{"terms": [[e, c], ...]}` with `e` ascending.
#[derive(Serialize, Deserialize)]
struct PolyRepr {
    terms: Vec<(Exp, Coeff)>,
}

impl TryFrom<PolyRepr> for SparsePoly {
    type Error = Error;

    fn try_from(repr: PolyRepr) -> Result<Self> {
        for w in repr.terms.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::Parse(format!(
                    "exponents must be strictly increasing ({} then {})",
                    w[0].0, w[1].0
                )));
            }
        }
        if let Some(&(e, _)) = repr.terms.iter().find(|t| t.1 == 0) {
            return Err(Error::Parse(format!("zero coefficient at exponent {e}")));
        }
        Ok(SparsePoly { terms: repr.terms })
    }
}

impl From<SparsePoly> for PolyRepr {
    fn from(p: SparsePoly) -> Self {
        PolyRepr { terms: p.terms }
    }
}

impl SparsePoly {
    pub fn zero() -> Self {
        SparsePoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * x^e`; zero when `c == 0`.
    pub fn monomial(e: Exp, c: Coeff) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            SparsePoly { terms: vec![(e, c)] }
        }
    }

    /// `x^k - 1`. For `k == 0` this is the zero polynomial.
    pub fn binomial(k: Exp) -> Self {
        if k == 0 {
            Self::zero()
        } else {
            SparsePoly {
                terms: vec![(0, -1), (k, 1)],
            }
        }
    }

    /// Builds a canonical polynomial from terms in any order; repeated
    /// exponents are summed and zero sums dropped.
    pub fn from_terms<I>(terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exp, Coeff)>,
    {
        let mut raw: Vec<(Exp, Coeff)> = terms.into_iter().collect();
        raw.sort_unstable_by_key(|t| t.0);
        merge_sorted(raw)
    }

    /// Builds from dense coefficients where `coeffs[i]` belongs to `x^(offset+i)`.
    pub fn from_dense(offset: Exp, coeffs: &[Coeff]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (offset + i as Exp, c))
            .collect();
        SparsePoly { terms }
    }

    pub fn terms(&self) -> &[(Exp, Coeff)] {
        &self.terms
    }

    pub fn exponents(&self) -> impl ExactSizeIterator<Item = Exp> + '_ {
        self.terms.iter().map(|t| t.0)
    }

    /// Number of nonzero terms; see [`SparsePoly::is_zero`] for emptiness.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn deg(&self) -> Result<Exp> {
        self.terms.last().map(|t| t.0).ok_or(Error::ZeroPolynomial)
    }

    /// Trailing degree: the smallest exponent present.
    pub fn tdeg(&self) -> Result<Exp> {
        self.terms.first().map(|t| t.0).ok_or(Error::ZeroPolynomial)
    }

    /// Coefficient of `x^e` (zero when absent).
    pub fn coeff(&self, e: Exp) -> Coeff {
        self.terms
            .binary_search_by_key(&e, |t| t.0)
            .map_or(0, |i| self.terms[i].1)
    }

    /// Value at `x = 1`.
    pub fn eval_at_one(&self) -> Result<Coeff> {
        self.terms.iter().try_fold(0i64, |acc, &(_, c)| {
            acc.checked_add(c).ok_or(Error::OverflowDetected)
        })
    }

    pub fn add(&self, other: &SparsePoly) -> Result<SparsePoly> {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let (ea, ca) = a[i];
            let (eb, cb) = b[j];
            if ea < eb {
                out.push(a[i]);
                i += 1;
            } else if eb < ea {
                out.push(b[j]);
                j += 1;
            } else {
                let c = ca.checked_add(cb).ok_or(Error::OverflowDetected)?;
                if c != 0 {
                    out.push((ea, c));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(SparsePoly { terms: out })
    }

    pub fn neg(&self) -> Result<SparsePoly> {
        self.scale(-1)
    }

    pub fn sub(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.add(&other.neg()?)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: Coeff) -> Result<SparsePoly> {
        if c == 0 {
            return Ok(Self::zero());
        }
        let terms = self
            .terms
            .iter()
            .map(|&(e, a)| a.checked_mul(c).map(|v| (e, v)))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::OverflowDetected)?;
        Ok(SparsePoly { terms })
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: Exp) -> Result<SparsePoly> {
        let terms = self
            .terms
            .iter()
            .map(|&(e, c)| e.checked_add(k).map(|e| (e, c)))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::OverflowDetected)?;
        Ok(SparsePoly { terms })
    }

    pub fn mul(&self, other: &SparsePoly) -> Result<SparsePoly> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let (a, b) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let lo = a.terms[0].0 + b.terms[0].0;
        let hi = a.terms[a.len() - 1]
            .0
            .checked_add(b.terms[b.len() - 1].0)
            .ok_or(Error::OverflowDetected)?;
        let span = hi - lo + 1;
        let products = (a.len() as u64).saturating_mul(b.len() as u64);

        if span <= products.saturating_mul(4) {
            let mut acc = vec![0i64; span as usize];
            for &(eb, cb) in &b.terms {
                let base = (eb - b.terms[0].0) as usize;
                for &(ea, ca) in &a.terms {
                    let slot = &mut acc[base + (ea - a.terms[0].0) as usize];
                    let p = ca.checked_mul(cb).ok_or(Error::OverflowDetected)?;
                    *slot = slot.checked_add(p).ok_or(Error::OverflowDetected)?;
                }
            }
            Ok(Self::from_dense(lo, &acc))
        } else {
            let mut raw = Vec::with_capacity(products as usize);
            for &(eb, cb) in &b.terms {
                for &(ea, ca) in &a.terms {
                    let p = ca.checked_mul(cb).ok_or(Error::OverflowDetected)?;
                    raw.push((ea + eb, p));
                }
            }
            raw.sort_unstable_by_key(|t| t.0);
            merge_sorted(raw)
        }
    }

    /// Multiplies by `x^k - 1` directly on the sparse terms.
    pub fn mul_binomial(&self, k: Exp) -> Result<SparsePoly> {
        if k == 0 {
            return Ok(Self::zero());
        }
        self.shift(k)?.sub(self)
    }

    /// `f(x^m)`.
    pub fn compose_power(&self, m: Exp) -> Result<SparsePoly> {
        if m == 0 {
            return Err(Error::Parse("compose_power needs m >= 1".into()));
        }
        let terms = self
            .terms
            .iter()
            .map(|&(e, c)| e.checked_mul(m).map(|e| (e, c)))
            .collect::<Option<Vec<_>>>()
            .ok_or(Error::OverflowDetected)?;
        Ok(SparsePoly { terms })
    }

    /// Exact quotient `self / den` over the integers.
    ///
    /// Long division runs top-down over a dense window of the numerator.
    /// Any nonzero remainder, or a leading coefficient of `den` that does not
    /// divide the running remainder, yields [`Error::NonExactDivision`].
    pub fn exact_div(&self, den: &SparsePoly) -> Result<SparsePoly> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if den.len() == 2 && den.terms[0] == (0, -1) && den.terms[1].1 == 1 {
            return self.div_binomial(den.terms[1].0);
        }
        let (tn, dn) = (self.tdeg()?, self.deg()?);
        let (td, dd) = (den.tdeg()?, den.deg()?);
        // quotient would need a negative exponent, or be too short
        if tn < td || dn < dd || dn - tn < dd - td {
            return Err(Error::NonExactDivision);
        }
        let shift = tn - td;
        let den_deg = (dd - td) as usize;
        let lead = den.terms[den.len() - 1].1;
        let den_rel: Vec<(usize, Coeff)> = den
            .terms
            .iter()
            .map(|&(e, c)| ((e - td) as usize, c))
            .collect();

        let mut rem = vec![0i64; (dn - tn + 1) as usize];
        for &(e, c) in &self.terms {
            rem[(e - tn) as usize] = c;
        }
        if rem.len() <= den_deg {
            return Err(Error::NonExactDivision);
        }
        let q_len = rem.len() - den_deg;
        let mut q = vec![0i64; q_len];
        for pos in (den_deg..rem.len()).rev() {
            let c = rem[pos];
            if c == 0 {
                continue;
            }
            if c % lead != 0 {
                return Err(Error::NonExactDivision);
            }
            let qc = c / lead;
            let qi = pos - den_deg;
            q[qi] = qc;
            for &(de, dc) in &den_rel {
                let slot = &mut rem[qi + de];
                let p = qc.checked_mul(dc).ok_or(Error::OverflowDetected)?;
                *slot = slot.checked_sub(p).ok_or(Error::OverflowDetected)?;
            }
        }
        if rem[..den_deg].iter().any(|&c| c != 0) {
            return Err(Error::NonExactDivision);
        }
        Ok(Self::from_dense(shift, &q))
    }

    /// Exact quotient `self / (x^k - 1)` in a single pass.
    pub fn div_binomial(&self, k: Exp) -> Result<SparsePoly> {
        if k == 0 {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let mut window = DenseWindow::from_sparse(self)?;
        window.div_binomial(k)?;
        Ok(window.to_sparse())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True when every nonzero coefficient has the same sign.
    pub fn is_sign_uniform(&self) -> bool {
        self.terms.iter().all(|t| t.1 > 0) || self.terms.iter().all(|t| t.1 < 0)
    }

    /// True when all coefficients lie in {-1, 0, 1}.
    pub fn is_flat(&self) -> bool {
        self.terms.iter().all(|t| t.1 == 1 || t.1 == -1)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn merge_sorted(raw: Vec<(Exp, Coeff)>) -> Result<SparsePoly> {
    let mut out: Vec<(Exp, Coeff)> = Vec::with_capacity(raw.len());
    for (e, c) in raw {
        match out.last_mut() {
            Some(last) if last.0 == e => {
                last.1 = last.1.checked_add(c).ok_or(Error::OverflowDetected)?;
            }
            _ => {
                if let Some(last) = out.last() {
                    if last.1 == 0 {
                        out.pop();
                    }
                }
                out.push((e, c));
            }
        }
    }
    if out.last().is_some_and(|t| t.1 == 0) {
        out.pop();
    }
    Ok(SparsePoly { terms: out })
}

/// Dense coefficient buffer `coeffs[i]` ↔ `x^(offset + i)`, used for the
/// linear-time binomial kernels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseWindow {
    offset: Exp,
    coeffs: Vec<Coeff>,
}

impl DenseWindow {
    pub fn one() -> Self {
        DenseWindow {
            offset: 0,
            coeffs: vec![1],
        }
    }

    pub fn from_sparse(p: &SparsePoly) -> Result<Self> {
        let (lo, hi) = (p.tdeg()?, p.deg()?);
        let len = usize::try_from(hi - lo + 1).map_err(|_| Error::OverflowDetected)?;
        let mut coeffs = vec![0i64; len];
        for &(e, c) in p.terms() {
            coeffs[(e - lo) as usize] = c;
        }
        Ok(DenseWindow { offset: lo, coeffs })
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn to_sparse(&self) -> SparsePoly {
        SparsePoly::from_dense(self.offset, &self.coeffs)
    }

    /// In-place multiplication by `x^k - 1`.
    pub fn mul_binomial(&mut self, k: Exp) -> Result<()> {
        let k = k as usize;
        let len = self.coeffs.len();
        let a = &self.coeffs;
        let mut out = vec![0i64; len + k];
        let mut ovf = 0i64;
        let split = k.min(len);
        for i in 0..split {
            let (x, r) = (a[i], a[i].wrapping_neg());
            ovf |= x & r;
            out[i] = r;
        }
        if k < len {
            let (low, high) = (&a[..len - k], &a[k..]);
            for ((o, &p), &x) in out[k..len].iter_mut().zip(low).zip(high) {
                let r = p.wrapping_sub(x);
                ovf |= (p ^ x) & (p ^ r);
                *o = r;
            }
        }
        let tail_start = len.max(k);
        out[tail_start..].copy_from_slice(&a[tail_start - k..len]);
        if ovf < 0 {
            return Err(Error::OverflowDetected);
        }
        self.coeffs = out;
        Ok(())
    }

    /// In-place exact division by `x^k - 1`.
    pub fn div_binomial(&mut self, k: Exp) -> Result<()> {
        if k == 0 {
            return Err(Error::DivisionByZero);
        }
        let len = self.coeffs.len();
        let k = usize::try_from(k).map_err(|_| Error::NonExactDivision)?;
        if len <= k {
            return Err(Error::NonExactDivision);
        }
        let c = &mut self.coeffs;
        let mut ovf = 0i64;
        for x in c[..k].iter_mut() {
            let r = x.wrapping_neg();
            ovf |= *x & r;
            *x = r;
        }
        let mut start = k;
        while start < len {
            let end = (start + k).min(len);
            let (head, tail) = c.split_at_mut(start);
            let prev = &head[start - k..start - k + (end - start)];
            for (x, &p) in tail[..end - start].iter_mut().zip(prev) {
                let r = p.wrapping_sub(*x);
                ovf |= (p ^ *x) & (p ^ r);
                *x = r;
            }
            start = end;
        }
        if ovf < 0 {
            return Err(Error::OverflowDetected);
        }
        if c[len - k..].iter().any(|&x| x != 0) {
            return Err(Error::NonExactDivision);
        }
        c.truncate(len - k);
        Ok(())
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, &(e, c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else if c < 0 {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            match (e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => f.write_str("x")?,
                (1, m) => write!(f, "{m}*x")?,
                (e, 1) => write!(f, "x^{e}")?,
                (e, m) => write!(f, "{m}*x^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly({self})")
    }
}

impl FromStr for SparsePoly {
    type Err = Error;

    /// Parses the sparse text form, e.g. `"1 - x + 3*x^4"`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut pieces: Vec<(bool, &str)> = Vec::new();
        let mut start = 0;
        let mut negative = false;
        let bytes = compact.as_bytes();
        for (i, &b) in bytes.iter().enumerate() {
            if b == b'+' || b == b'-' {
                if i == 0 {
                    negative = b == b'-';
                    start = 1;
                    continue;
                }
                pieces.push((negative, &compact[start..i]));
                negative = b == b'-';
                start = i + 1;
            }
        }
        pieces.push((negative, &compact[start..]));

        let mut terms = Vec::with_capacity(pieces.len());
        for (neg, body) in pieces {
            let (e, c) = parse_term(body)?;
            terms.push((e, if neg { -c } else { c }));
        }
        SparsePoly::from_terms(terms)
    }
}

fn parse_term(body: &str) -> Result<(Exp, Coeff)> {
    let bad = || Error::Parse(format!("malformed term {body:?}"));
    if body.is_empty() {
        return Err(bad());
    }
    match body.find('x') {
        None => Ok((0, body.parse().map_err(|_| bad())?)),
        Some(pos) => {
            let coeff_part = &body[..pos];
            let c = match coeff_part {
                "" => 1,
                s => s
                    .strip_suffix('*')
                    .ok_or_else(bad)?
                    .parse()
                    .map_err(|_| bad())?,
            };
            let e = match &body[pos + 1..] {
                "" => 1,
                s => s
                    .strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse()
                    .map_err(|_| bad())?,
            };
            Ok((e, c))
        }
    }
}
