//! Complete, symmetrized, Lee and Hamming weight enumerators with exact
//! coefficients, and their MacWilliams transforms.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_complex::Complex;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::z4::Z4Vector;

type Gaussian = Complex<BigInt>;

/// Which enumerator: complete (W,X,Y,Z), symmetrized (W,X,Y), Lee (W,X) or Hamming (W,X).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Cwe,
    Swe,
    Lee,
    Hamming,
}

impl Flavor {
    pub fn variables(self) -> usize {
        match self {
            Flavor::Cwe => 4,
            Flavor::Swe => 3,
            Flavor::Lee | Flavor::Hamming => 2,
        }
    }

    /// Total degree of every monomial for codes of length n.
    pub fn degree(self, n: usize) -> usize {
        match self {
            Flavor::Lee => 2 * n,
            _ => n,
        }
    }

    fn names(self) -> &'static [&'static str] {
        match self {
            Flavor::Cwe => &["W", "X", "Y", "Z"],
            Flavor::Swe => &["W", "X", "Y"],
            Flavor::Lee | Flavor::Hamming => &["W", "X"],
        }
    }

    /// Exponent tuple contributed by a word with symbol counts `n₀..n₃`.
    fn exponents(self, c: [usize; 4]) -> Vec<u32> {
        let c: Vec<u32> = c.iter().map(|&x| x as u32).collect();
        match self {
            Flavor::Cwe => c,
            Flavor::Swe => vec![c[0], c[1] + c[3], c[2]],
            Flavor::Lee => vec![2 * c[0] + c[1] + c[3], c[1] + c[3] + 2 * c[2]],
            Flavor::Hamming => vec![c[0], c[1] + c[2] + c[3]],
        }
    }

    /// Linear forms substituted for each variable in the MacWilliams identity.
    fn substitution(self) -> Vec<Vec<Gaussian>> {
        let g = |re: i64, im: i64| Complex::new(BigInt::from(re), BigInt::from(im));
        match self {
            Flavor::Cwe => vec![
                vec![g(1, 0), g(1, 0), g(1, 0), g(1, 0)],
                vec![g(1, 0), g(0, 1), g(-1, 0), g(0, -1)],
                vec![g(1, 0), g(-1, 0), g(1, 0), g(-1, 0)],
                vec![g(1, 0), g(0, -1), g(-1, 0), g(0, 1)],
            ],
            Flavor::Swe => vec![
                vec![g(1, 0), g(2, 0), g(1, 0)],
                vec![g(1, 0), g(0, 0), g(-1, 0)],
                vec![g(1, 0), g(-2, 0), g(1, 0)],
            ],
            Flavor::Lee => vec![vec![g(1, 0), g(1, 0)], vec![g(1, 0), g(-1, 0)]],
            Flavor::Hamming => vec![vec![g(1, 0), g(3, 0)], vec![g(1, 0), g(-1, 0)]],
        }
    }
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Cwe => "cwe",
            Flavor::Swe => "swe",
            Flavor::Lee => "lee",
            Flavor::Hamming => "hamming",
        })
    }
}

/// A homogeneous polynomial with nonnegative integer coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct WeightEnumerator {
    flavor: Flavor,
    n: usize,
    terms: BTreeMap<Vec<u32>, BigUint>,
}

impl WeightEnumerator {
    /// The empty sum, the identity of [`WeightEnumerator::merge`].
    pub fn empty(flavor: Flavor, n: usize) -> Self {
        WeightEnumerator { flavor, n, terms: BTreeMap::new() }
    }

    pub fn from_codewords<'a, I>(flavor: Flavor, n: usize, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Z4Vector>,
    {
        let mut e = WeightEnumerator::empty(flavor, n);
        for w in words {
            e.add_word(w)?;
        }
        Ok(e)
    }

    /// Builds a two-variable enumerator from a distribution indexed by weight.
    pub fn from_distribution(flavor: Flavor, n: usize, dist: &[BigUint]) -> Result<Self> {
        if flavor.variables() != 2 {
            return Err(Error::InvalidParameters(format!("{flavor} is not a two-variable enumerator")));
        }
        let deg = flavor.degree(n);
        if dist.len() > deg + 1 {
            return Err(Error::LengthMismatch { expected: deg + 1, actual: dist.len() });
        }
        let mut e = WeightEnumerator::empty(flavor, n);
        for (w, c) in dist.iter().enumerate() {
            if !c.is_zero() {
                e.terms.insert(vec![(deg - w) as u32, w as u32], c.clone());
            }
        }
        Ok(e)
    }

    pub fn add_word(&mut self, w: &Z4Vector) -> Result<()> {
        if w.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, actual: w.len() });
        }
        let key = self.flavor.exponents(w.composition());
        *self.terms.entry(key).or_default() += 1u32;
        Ok(())
    }

    /// Adds the terms of another enumerator of the same flavor and length.
    pub fn merge(&mut self, other: &WeightEnumerator) -> Result<()> {
        if self.flavor != other.flavor {
            return Err(Error::InvalidParameters("cannot merge enumerators of different flavors".into()));
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch { expected: self.n, actual: other.n });
        }
        for (k, v) in &other.terms {
            *self.terms.entry(k.clone()).or_default() += v;
        }
        Ok(())
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.flavor.degree(self.n)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigUint)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigUint {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// Sum of all coefficients; the size of the code for a full enumerator.
    pub fn total(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// For two-variable flavors, the coefficient list indexed by the X exponent.
    pub fn distribution(&self) -> Result<Vec<BigUint>> {
        if self.flavor.variables() != 2 {
            return Err(Error::InvalidParameters(format!("{} has no single weight", self.flavor)));
        }
        let mut d = vec![BigUint::zero(); self.degree() + 1];
        for (k, v) in &self.terms {
            d[k[1] as usize] += v;
        }
        Ok(d)
    }

    /// swe(W,X,Y) = cwe(W,X,Y,X).
    pub fn to_swe(&self) -> Result<Self> {
        match self.flavor {
            Flavor::Swe => Ok(self.clone()),
            Flavor::Cwe => Ok(self.map_terms(Flavor::Swe, |e| vec![e[0], e[1] + e[3], e[2]])),
            f => Err(Error::InvalidParameters(format!("cannot derive swe from {f}"))),
        }
    }

    /// Lee(W,X) = swe(W², WX, X²).
    pub fn to_lee(&self) -> Result<Self> {
        let s = self.to_swe_or_self_if(Flavor::Lee)?;
        if s.flavor == Flavor::Lee {
            return Ok(s);
        }
        Ok(s.map_terms(Flavor::Lee, |e| vec![2 * e[0] + e[1], e[1] + 2 * e[2]]))
    }

    /// Ham(W,X) = swe(W,X,X).
    pub fn to_hamming(&self) -> Result<Self> {
        let s = self.to_swe_or_self_if(Flavor::Hamming)?;
        if s.flavor == Flavor::Hamming {
            return Ok(s);
        }
        Ok(s.map_terms(Flavor::Hamming, |e| vec![e[0], e[1] + e[2]]))
    }

    fn to_swe_or_self_if(&self, target: Flavor) -> Result<Self> {
        if self.flavor == target {
            Ok(self.clone())
        } else {
            self.to_swe()
        }
    }

    fn map_terms(&self, flavor: Flavor, f: impl Fn(&[u32]) -> Vec<u32>) -> Self {
        let mut out = WeightEnumerator::empty(flavor, self.n);
        for (k, v) in &self.terms {
            *out.terms.entry(f(k)).or_default() += v;
        }
        out
    }

    /// The enumerator of the dual code, given the size of this code.
    ///
    /// Coefficients are computed over the Gaussian integers and must come out
    /// as nonnegative integers summing to 4ⁿ/|C|; anything else is an error.
    pub fn macwilliams(&self, code_size: &BigUint) -> Result<Self> {
        if code_size.is_zero() {
            return Err(Error::MacWilliams("code size is zero".into()));
        }
        let vars = self.flavor.variables();
        let deg = self.degree();
        let subs = self.flavor.substitution();
        let mut powers: Vec<Vec<Poly>> = Vec::with_capacity(vars);
        for form in &subs {
            let base = Poly::linear(form);
            let mut p = vec![Poly::one(vars)];
            let max = self.terms.keys().map(|k| k[powers.len()]).max().unwrap_or(0);
            for _ in 0..max {
                let next = p.last().map(|q| q.mul(&base)).unwrap_or_else(|| Poly::one(vars));
                p.push(next);
            }
            powers.push(p);
        }
        let mut acc = Poly::zero();
        for (exps, coeff) in &self.terms {
            let mut term = Poly::constant(vars, Complex::new(BigInt::from(coeff.clone()), BigInt::zero()));
            for (i, &e) in exps.iter().enumerate() {
                term = term.mul(&powers[i][e as usize]);
            }
            acc.add_assign(&term);
        }
        let size = BigInt::from(code_size.clone());
        let mut out = WeightEnumerator::empty(self.flavor, self.n);
        for (k, v) in acc.terms {
            if !v.im.is_zero() {
                return Err(Error::MacWilliams(format!("imaginary part at {k:?}")));
            }
            if v.re.is_zero() {
                continue;
            }
            if v.re.is_negative() {
                return Err(Error::MacWilliams(format!("negative coefficient at {k:?}")));
            }
            if !(&v.re % &size).is_zero() {
                return Err(Error::MacWilliams(format!("coefficient at {k:?} not divisible by {size}")));
            }
            let c = (&v.re / &size).to_biguint().unwrap_or_default();
            debug_assert_eq!(k.iter().sum::<u32>() as usize, deg);
            out.terms.insert(k, c);
        }
        let space = BigUint::from(4u32).pow(self.n as u32);
        let total = self.total();
        if total.is_zero() || &space % &total != BigUint::zero() || out.total() * &total != space {
            return Err(Error::MacWilliams(format!(
                "dual coefficients sum to {}, expected 4^{}/{}",
                out.total(),
                self.n,
                total
            )));
        }
        Ok(out)
    }

    /// JSON form `{flavor, n, terms:[{exps, coeff}]}` with decimal-string coefficients.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(EnumeratorJson::from(self)).unwrap_or_default()
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: EnumeratorJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        j.try_into()
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let j: EnumeratorJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        j.try_into()
    }
}

impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.flavor.names();
        let mut first = true;
        for (k, v) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let mono: Vec<String> = k
                .iter()
                .zip(names)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, n)| if e == 1 { n.to_string() } else { format!("{n}^{e}") })
                .collect();
            match (v.is_one(), mono.is_empty()) {
                (true, true) => f.write_str("1")?,
                (true, false) => f.write_str(&mono.join(" "))?,
                (false, true) => write!(f, "{v}")?,
                (false, false) => write!(f, "{v} {}", mono.join(" "))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightEnumerator[{} n={}]({self})", self.flavor, self.n)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exps: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct EnumeratorJson {
    flavor: Flavor,
    n: usize,
    terms: Vec<TermJson>,
}

impl From<&WeightEnumerator> for EnumeratorJson {
    fn from(e: &WeightEnumerator) -> Self {
        EnumeratorJson {
            flavor: e.flavor,
            n: e.n,
            terms: e
                .terms
                .iter()
                .map(|(k, v)| TermJson { exps: k.clone(), coeff: v.to_str_radix(10) })
                .collect(),
        }
    }
}

impl TryFrom<EnumeratorJson> for WeightEnumerator {
    type Error = Error;

    fn try_from(j: EnumeratorJson) -> Result<Self> {
        let mut e = WeightEnumerator::empty(j.flavor, j.n);
        let deg = j.flavor.degree(j.n);
        for t in j.terms {
            if t.exps.len() != j.flavor.variables() {
                return Err(Error::LengthMismatch { expected: j.flavor.variables(), actual: t.exps.len() });
            }
            if t.exps.iter().map(|&x| x as usize).sum::<usize>() != deg {
                return Err(Error::Parse(format!("term {:?} does not have degree {deg}", t.exps)));
            }
            let c = BigUint::parse_bytes(t.coeff.as_bytes(), 10)
                .ok_or_else(|| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            if !c.is_zero() {
                *e.terms.entry(t.exps).or_default() += c;
            }
        }
        Ok(e)
    }
}

/// Sparse multivariate polynomial over the Gaussian integers.
#[derive(Clone, Default)]
struct Poly {
    terms: HashMap<Vec<u32>, Gaussian>,
}

impl Poly {
    fn zero() -> Self {
        Poly::default()
    }

    fn constant(vars: usize, c: Gaussian) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(vec![0; vars], c);
        }
        p
    }

    fn one(vars: usize) -> Self {
        Poly::constant(vars, Complex::one())
    }

    fn linear(coeffs: &[Gaussian]) -> Self {
        let mut p = Poly::zero();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut k = vec![0; coeffs.len()];
                k[i] = 1;
                p.terms.insert(k, c.clone());
            }
        }
        p
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out: HashMap<Vec<u32>, Gaussian> = HashMap::new();
        for (ka, va) in &self.terms {
            for (kb, vb) in &other.terms {
                let k: Vec<u32> = ka.iter().zip(kb).map(|(a, b)| a + b).collect();
                let prod = va * vb;
                let slot = out.entry(k).or_insert_with(Complex::zero);
                *slot += prod;
            }
        }
        out.retain(|_, v| !v.is_zero());
        Poly { terms: out }
    }

    fn add_assign(&mut self, other: &Poly) {
        for (k, v) in &other.terms {
            let slot = self.terms.entry(k.clone()).or_insert_with(Complex::zero);
            *slot += v;
        }
        self.terms.retain(|_, v| !v.is_zero());
    }
}

/// Binary MacWilliams transform of a Hamming distribution of a binary code of length `len`.
pub fn binary_macwilliams(dist: &[BigUint], len: usize) -> Result<Vec<BigUint>> {
    if dist.len() != len + 1 {
        return Err(Error::LengthMismatch { expected: len + 1, actual: dist.len() });
    }
    let size: BigUint = dist.iter().sum();
    // A binary code of length 2k has the same transform as a Lee enumerator of length k.
    if len % 2 == 0 {
        let e = WeightEnumerator::from_distribution(Flavor::Lee, len / 2, dist)?;
        return e.macwilliams(&size)?.distribution();
    }
    let mut out = vec![BigInt::zero(); len + 1];
    for (i, a) in dist.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, slot) in out.iter_mut().enumerate() {
            *slot += BigInt::from(a.clone()) * krawtchouk(len, j, i);
        }
    }
    let size = BigInt::from(size);
    out.into_iter()
        .map(|v| {
            if v.is_negative() || !(&v % &size).is_zero() {
                Err(Error::MacWilliams(format!("non-integral binary transform value {v}")))
            } else {
                Ok((v / &size).to_biguint().unwrap_or_default())
            }
        })
        .collect()
}

/// Binary Krawtchouk polynomial K_k(x) for length n.
pub fn krawtchouk(n: usize, k: usize, x: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for j in 0..=k.min(x) {
        if k - j > n - x {
            continue;
        }
        let t = binom(x, j) * binom(n - x, k - j);
        if j % 2 == 0 {
            acc += t;
        } else {
            acc -= t;
        }
    }
    acc
}

pub fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// Converts a distribution of small counts into big integers.
pub fn big_distribution(counts: &[u64]) -> Vec<BigUint> {
    counts.iter().map(|&c| BigUint::from(c)).collect()
}

/// Converts a distribution back to machine integers when it fits.
pub fn small_distribution(dist: &[BigUint]) -> Option<Vec<u64>> {
    dist.iter().map(|c| c.to_u64()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn octacode_words() -> Vec<Z4Vector> {
        let rows: Vec<Z4Vector> = ["13121000", "10312100", "10031210", "10003121"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let mut words = Vec::new();
        for u in 0..256u32 {
            let mut w = Z4Vector::zeros(8);
            for (i, r) in rows.iter().enumerate() {
                w += &r.scale((u >> (2 * i) & 3) as u8);
            }
            words.push(w);
        }
        words
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn octacode_swe() {
        let e = WeightEnumerator::from_codewords(Flavor::Swe, 8, &octacode_words()).unwrap();
        let expect: BTreeMap<Vec<u32>, BigUint> = [
            (vec![8, 0, 0], 1),
            (vec![0, 8, 0], 16),
            (vec![0, 0, 8], 1),
            (vec![4, 0, 4], 14),
            (vec![3, 4, 1], 112),
            (vec![1, 4, 3], 112),
        ]
        .into_iter()
        .map(|(k, v)| (k, big(v)))
        .collect();
        assert_eq!(e.terms, expect);
        assert_eq!(e.macwilliams(&big(256)).unwrap(), e);
    }

    #[test]
    fn octacode_lee_distribution() {
        let e = WeightEnumerator::from_codewords(Flavor::Swe, 8, &octacode_words()).unwrap();
        let lee = e.to_lee().unwrap();
        let d = small_distribution(&lee.distribution().unwrap()).unwrap();
        let mut expect = vec![0u64; 17];
        expect[0] = 1;
        expect[6] = 112;
        expect[8] = 30;
        expect[10] = 112;
        expect[16] = 1;
        assert_eq!(d, expect);
    }

    #[test]
    fn single_zero_word() {
        for flavor in [Flavor::Cwe, Flavor::Swe, Flavor::Lee, Flavor::Hamming] {
            let e = WeightEnumerator::from_codewords(flavor, 5, &[Z4Vector::zeros(5)]).unwrap();
            assert_eq!(e.len(), 1);
            let (k, v) = e.terms().next().unwrap();
            assert_eq!(k[0] as usize, flavor.degree(5));
            assert!(v.is_one());
        }
    }

    #[test]
    fn full_space_dual_is_zero_code() {
        let n = 3;
        let words: Vec<Z4Vector> = (0..64u32)
            .map(|x| Z4Vector::from_symbols(&[(x & 3) as u8, (x >> 2 & 3) as u8, (x >> 4 & 3) as u8]).unwrap())
            .collect();
        for flavor in [Flavor::Cwe, Flavor::Swe, Flavor::Lee, Flavor::Hamming] {
            let e = WeightEnumerator::from_codewords(flavor, n, &words).unwrap();
            let d = e.macwilliams(&big(64)).unwrap();
            let zero = WeightEnumerator::from_codewords(flavor, n, &[Z4Vector::zeros(n)]).unwrap();
            assert_eq!(d, zero);
        }
    }

    #[test]
    fn cwe_of_octacode_is_self_dual() {
        let e = WeightEnumerator::from_codewords(Flavor::Cwe, 8, &octacode_words()).unwrap();
        assert_eq!(e.macwilliams(&big(256)).unwrap(), e);
        assert_eq!(e.to_swe().unwrap(), WeightEnumerator::from_codewords(Flavor::Swe, 8, &octacode_words()).unwrap());
    }

    #[test]
    fn macwilliams_rejects_wrong_size() {
        let e = WeightEnumerator::from_codewords(Flavor::Swe, 8, &octacode_words()).unwrap();
        assert!(matches!(e.macwilliams(&big(3)), Err(Error::MacWilliams(_))));
    }

    #[test]
    fn json_round_trip() {
        let e = WeightEnumerator::from_codewords(Flavor::Cwe, 8, &octacode_words()).unwrap();
        let s = e.to_json().to_string();
        assert_eq!(WeightEnumerator::from_json_str(&s).unwrap(), e);
        assert!(WeightEnumerator::from_json_str(r#"{"flavor":"lee","n":2,"terms":[{"exps":[1,1],"coeff":"1"}]}"#).is_err());
        assert!(WeightEnumerator::from_json_str(r#"{"flavor":"lee","n":1,"terms":[{"exps":[1,1],"coeff":"x"}]}"#).is_err());
    }

    #[test]
    fn display_is_readable() {
        let e = WeightEnumerator::from_codewords(Flavor::Hamming, 2, &[Z4Vector::zeros(2)]).unwrap();
        assert_eq!(e.to_string(), "W^2");
    }

    #[test]
    fn krawtchouk_binary_transform_matches_lee() {
        // Repetition code of length 5 and its dual, the even-weight code.
        let rep = vec![big(1), big(0), big(0), big(0), big(0), big(1)];
        let dual = binary_macwilliams(&rep, 5).unwrap();
        let expect: Vec<BigUint> = [1u64, 0, 10, 0, 5, 0].iter().map(|&x| big(x)).collect();
        assert_eq!(dual, expect);
        let rep6 = vec![big(1), big(0), big(0), big(0), big(0), big(0), big(1)];
        let dual6 = binary_macwilliams(&rep6, 6).unwrap();
        let expect6: Vec<BigUint> = [1u64, 0, 15, 0, 15, 0, 1].iter().map(|&x| big(x)).collect();
        assert_eq!(dual6, expect6);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn flavors_are_consistent(rows in proptest::collection::vec(proptest::collection::vec(0u8..4, 5), 1..3)) {
            let gens: Vec<Z4Vector> = rows.iter().map(|r| Z4Vector::from_symbols(r).unwrap()).collect();
            let mut code = std::collections::BTreeSet::new();
            code.insert(Z4Vector::zeros(5));
            for g in &gens {
                let current: Vec<Z4Vector> = code.iter().cloned().collect();
                for c in current {
                    for k in 1..4u8 {
                        code.insert(&c + &g.scale(k));
                    }
                }
            }
            let words: Vec<Z4Vector> = code.into_iter().collect();
            let cwe = WeightEnumerator::from_codewords(Flavor::Cwe, 5, &words).unwrap();
            let swe = WeightEnumerator::from_codewords(Flavor::Swe, 5, &words).unwrap();
            let lee = WeightEnumerator::from_codewords(Flavor::Lee, 5, &words).unwrap();
            let ham = WeightEnumerator::from_codewords(Flavor::Hamming, 5, &words).unwrap();
            prop_assert_eq!(cwe.to_swe().unwrap(), swe.clone());
            prop_assert_eq!(swe.to_lee().unwrap(), lee.clone());
            prop_assert_eq!(swe.to_hamming().unwrap(), ham.clone());
            let size = BigUint::from(words.len());
            prop_assert_eq!(lee.total(), size.clone());
            // Double transform is the identity.
            let dual = lee.macwilliams(&size).unwrap();
            let back = dual.macwilliams(&dual.total()).unwrap();
            prop_assert_eq!(back, lee);
            let cdual = cwe.macwilliams(&size).unwrap();
            prop_assert_eq!(cdual.to_swe().unwrap(), swe.macwilliams(&size).unwrap());
        }
    }
}
