//! Quaternary linear codes in standard form.
//!
//! Any generating set is reduced to the form
//!
//! ```text
//!     [ I_k1   A      B ]
//!     [ 0      2I_k2  2C ]
//! ```
//!
//! up to a recorded column permutation, with `A`, `C` binary and `B` over ℤ₄.
//! The parity-check matrix is then read off directly.

pub mod binary;
pub mod families;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::enumerator::{Flavor, WeightEnumerator};
use crate::error::{Error, Result};
use crate::z4::Z4Vector;

/// Which construction produced a code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Generic,
    Kerdock,
    Preparata,
    Octacode,
    Zrm,
    Qrm,
    Dg,
    Goethals,
}

impl Family {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_lowercase().as_str() {
            "generic" => Family::Generic,
            "kerdock" => Family::Kerdock,
            "preparata" => Family::Preparata,
            "octacode" => Family::Octacode,
            "zrm" => Family::Zrm,
            "qrm" => Family::Qrm,
            "dg" | "delsarte-goethals" => Family::Dg,
            "goethals" => Family::Goethals,
            other => return Err(Error::InvalidParameters(format!("unknown family {other:?}"))),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).ok().and_then(|v| v.as_str().map(str::to_owned));
        f.write_str(s.as_deref().unwrap_or("generic"))
    }
}

/// Family tag and parameters attached to a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeInfo {
    pub family: Family,
    pub m: Option<u32>,
    pub r: Option<u32>,
    pub note: Option<String>,
}

impl CodeInfo {
    pub fn generic() -> Self {
        CodeInfo { family: Family::Generic, m: None, r: None, note: None }
    }

    pub fn new(family: Family, m: Option<u32>, r: Option<u32>) -> Self {
        CodeInfo { family, m, r, note: None }
    }
}

/// A linear code over ℤ₄ of type 4^k₁ 2^k₂.
#[derive(Clone)]
pub struct Z4Code {
    n: usize,
    k1: usize,
    k2: usize,
    // Standard-form column j is original column perm[j].
    perm: Vec<usize>,
    // Standard-form rows, in original coordinates; the last k2 are the order-2 rows.
    generator: Vec<Z4Vector>,
    // Check-matrix rows, in original coordinates.
    parity: Vec<Z4Vector>,
    info: CodeInfo,
}

impl fmt::Debug for Z4Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Z4Code")
            .field("n", &self.n)
            .field("type", &self.type_string())
            .field("info", &self.info)
            .finish()
    }
}

fn rows_to_matrix(rows: &[Z4Vector]) -> Vec<Vec<u8>> {
    rows.iter().map(Z4Vector::symbols).collect()
}

fn matrix_row(row: &[u8]) -> Z4Vector {
    Z4Vector::from_ints(&row.iter().map(|&x| i64::from(x)).collect::<Vec<_>>())
}

impl Z4Code {
    /// Reduces an arbitrary generating set to standard form.
    pub fn from_generators(rows: &[Z4Vector], n: usize, info: CodeInfo) -> Result<Self> {
        for r in rows {
            if r.len() != n {
                return Err(Error::LengthMismatch { expected: n, actual: r.len() });
            }
        }
        let mut g = rows_to_matrix(rows);
        let mut perm: Vec<usize> = (0..n).collect();
        let swap_cols = |g: &mut Vec<Vec<u8>>, perm: &mut Vec<usize>, a: usize, b: usize| {
            if a != b {
                perm.swap(a, b);
                for row in g.iter_mut() {
                    row.swap(a, b);
                }
            }
        };
        let sub_row = |g: &mut Vec<Vec<u8>>, target: usize, src: usize, k: u8| {
            if k & 3 == 0 {
                return;
            }
            let src_row = g[src].clone();
            for (x, s) in g[target].iter_mut().zip(src_row) {
                *x = (*x + 4 * 4 - (k & 3) * s) & 3;
            }
        };

        let mut k1 = 0;
        loop {
            let pivot = (k1..g.len()).find_map(|i| (k1..n).find(|&j| g[i][j] & 1 == 1).map(|j| (i, j)));
            let Some((i, j)) = pivot else { break };
            g.swap(i, k1);
            swap_cols(&mut g, &mut perm, j, k1);
            if g[k1][k1] == 3 {
                for x in g[k1].iter_mut() {
                    *x = (*x * 3) & 3;
                }
            }
            for r in 0..g.len() {
                if r != k1 {
                    let k = g[r][k1];
                    sub_row(&mut g, r, k1, k);
                }
            }
            k1 += 1;
        }

        let mut k2 = 0;
        loop {
            let p = k1 + k2;
            let pivot = (p..g.len()).find_map(|i| (p..n).find(|&j| g[i][j] == 2).map(|j| (i, j)));
            let Some((i, j)) = pivot else { break };
            g.swap(i, p);
            swap_cols(&mut g, &mut perm, j, p);
            for r in 0..g.len() {
                if r == p {
                    continue;
                }
                let e = g[r][p];
                if r < k1 {
                    // Reduce to 0 or 1 so that A is binary.
                    if e >= 2 {
                        sub_row(&mut g, r, p, 1);
                    }
                } else if e == 2 {
                    sub_row(&mut g, r, p, 1);
                }
            }
            k2 += 1;
        }
        g.truncate(k1 + k2);

        let k = k1 + k2;
        let nk = n - k;
        // [−Bᵀ − CᵀAᵀ, Cᵀ, I; 2Aᵀ, 2I, 0] in standard coordinates.
        let a = |i: usize, j: usize| g[i][k1 + j] & 1;
        let b = |i: usize, j: usize| g[i][k + j];
        let c = |i: usize, j: usize| (g[k1 + i][k + j] >> 1) & 1;
        let mut parity_std: Vec<Vec<u8>> = Vec::with_capacity(nk + k2);
        for j in 0..nk {
            let mut row = vec![0u8; n];
            for i in 0..k1 {
                let mut ca = 0u32;
                for l in 0..k2 {
                    ca += u32::from(c(l, j) * a(i, l));
                }
                row[i] = ((8 - u32::from(b(i, j)) - (ca & 3)) & 3) as u8;
            }
            for l in 0..k2 {
                row[k1 + l] = c(l, j);
            }
            row[k + j] = 1;
            parity_std.push(row);
        }
        for l in 0..k2 {
            let mut row = vec![0u8; n];
            for i in 0..k1 {
                row[i] = 2 * a(i, l);
            }
            row[k1 + l] = 2;
            parity_std.push(row);
        }

        let unpermute = |row: &[u8]| {
            let mut out = vec![0u8; n];
            for (j, &p) in perm.iter().enumerate() {
                out[p] = row[j];
            }
            matrix_row(&out)
        };
        let generator: Vec<Z4Vector> = g.iter().map(|r| unpermute(r)).collect();
        let parity: Vec<Z4Vector> = parity_std.iter().map(|r| unpermute(r)).collect();
        let code = Z4Code { n, k1, k2, perm, generator, parity, info };
        debug_assert!(code.generator.iter().all(|r| code.contains(r)));
        Ok(code)
    }

    pub fn from_strings(rows: &[&str], info: CodeInfo) -> Result<Self> {
        let rows: Vec<Z4Vector> = rows.iter().map(|s| s.parse()).collect::<Result<_>>()?;
        let n = rows.first().map(Z4Vector::len).ok_or(Error::Empty)?;
        Z4Code::from_generators(&rows, n, info)
    }

    /// The whole space ℤ₄ⁿ.
    pub fn full_space(n: usize) -> Self {
        let rows: Vec<Z4Vector> = (0..n).map(|i| Z4Vector::unit(n, i, 1)).collect();
        Z4Code::from_generators(&rows, n, CodeInfo::generic()).expect("unit vectors have length n")
    }

    pub fn zero_code(n: usize) -> Self {
        Z4Code::from_generators(&[], n, CodeInfo::generic()).expect("empty generator")
    }

    /// The dual code, generated by this code's check matrix.
    pub fn dual(&self) -> Self {
        Z4Code::from_generators(&self.parity, self.n, CodeInfo::generic()).expect("parity rows have length n")
    }

    pub fn with_info(mut self, info: CodeInfo) -> Self {
        self.info = info;
        self
    }

    pub fn info(&self) -> &CodeInfo {
        &self.info
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn k1(&self) -> usize {
        self.k1
    }

    pub fn k2(&self) -> usize {
        self.k2
    }

    pub fn type_string(&self) -> String {
        format!("4^{} 2^{}", self.k1, self.k2)
    }

    /// log₂ of the number of codewords, 2k₁ + k₂.
    pub fn log2_size(&self) -> usize {
        2 * self.k1 + self.k2
    }

    pub fn size(&self) -> BigUint {
        BigUint::from(1u32) << self.log2_size()
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    /// Standard-form generator rows in original coordinates.
    pub fn generator(&self) -> &[Z4Vector] {
        &self.generator
    }

    /// Check-matrix rows in original coordinates.
    pub fn parity_check(&self) -> &[Z4Vector] {
        &self.parity
    }

    /// Encodes `u` with k₁ symbols in ℤ₄ followed by k₂ bits.
    pub fn encode(&self, u: &[u8]) -> Result<Z4Vector> {
        if u.len() != self.k1 + self.k2 {
            return Err(Error::MalformedInfo(format!(
                "expected {} information symbols, got {}",
                self.k1 + self.k2,
                u.len()
            )));
        }
        let mut w = Z4Vector::zeros(self.n);
        for (i, (&x, row)) in u.iter().zip(&self.generator).enumerate() {
            let limit = if i < self.k1 { 4 } else { 2 };
            if x >= limit {
                return Err(Error::MalformedInfo(format!("symbol {x} at position {i} exceeds {}", limit - 1)));
            }
            if x != 0 {
                w += &row.scale(x);
            }
        }
        Ok(w)
    }

    /// Recovers the information tuple of a codeword.
    pub fn unencode(&self, c: &Z4Vector) -> Result<Vec<u8>> {
        if !self.contains(c) {
            return Err(Error::InvalidParameters("not a codeword".into()));
        }
        let mut u = Vec::with_capacity(self.k1 + self.k2);
        for j in 0..self.k1 {
            u.push(c.get(self.perm[j]));
        }
        let mut rest = c.clone();
        for (j, &x) in u.iter().enumerate() {
            rest = &rest - &self.generator[j].scale(x);
        }
        for l in 0..self.k2 {
            u.push(rest.get(self.perm[self.k1 + l]) >> 1);
        }
        Ok(u)
    }

    pub fn syndrome(&self, v: &Z4Vector) -> Result<Vec<u8>> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, actual: v.len() });
        }
        Ok(self.parity.iter().map(|h| h.dot(v)).collect())
    }

    pub fn contains(&self, v: &Z4Vector) -> bool {
        v.len() == self.n && self.parity.iter().all(|h| h.dot(v) == 0)
    }

    pub fn is_subcode_of(&self, other: &Z4Code) -> bool {
        self.n == other.n && self.generator.iter().all(|g| other.contains(g))
    }

    /// Equality as sets of codewords.
    pub fn same_code(&self, other: &Z4Code) -> bool {
        self.log2_size() == other.log2_size() && self.is_subcode_of(other)
    }

    /// Radix of each information digit: 4 for the first k₁, 2 after.
    fn radices(&self) -> Vec<u8> {
        (0..self.k1 + self.k2).map(|i| if i < self.k1 { 4 } else { 2 }).collect()
    }

    /// Calls `f` on every codeword, in odometer order over information tuples.
    pub fn for_each_codeword(&self, mut f: impl FnMut(&Z4Vector)) {
        self.for_each_in_chunk(0, 1, &mut f);
    }

    /// Visits the codewords whose top information digits select chunk `chunk` of `chunks`.
    fn for_each_in_chunk(&self, chunk: usize, chunks: usize, f: &mut impl FnMut(&Z4Vector)) {
        let radices = self.radices();
        let (split, prefix_count) = split_point(&radices, chunks);
        if chunk >= prefix_count {
            return;
        }
        let mut w = Z4Vector::zeros(self.n);
        let mut rem = chunk;
        for i in split..radices.len() {
            let d = rem % radices[i] as usize;
            rem /= radices[i] as usize;
            if d != 0 {
                w += &self.generator[i].scale(d as u8);
            }
        }
        let mut digits = vec![0u8; split];
        loop {
            f(&w);
            let mut i = 0;
            loop {
                if i == split {
                    return;
                }
                w += &self.generator[i];
                digits[i] += 1;
                if digits[i] == radices[i] {
                    digits[i] = 0;
                    i += 1;
                } else {
                    break;
                }
            }
        }
    }

    /// Folds over all codewords on `workers` threads; `merge` must be commutative.
    pub fn par_fold<T, I, S, M>(&self, workers: usize, init: I, step: S, merge: M) -> T
    where
        T: Send,
        I: Fn() -> T + Sync,
        S: Fn(&mut T, &Z4Vector) + Sync,
        M: Fn(T, T) -> T,
    {
        let radices = self.radices();
        let workers = workers.max(1);
        let (_, chunks) = split_point(&radices, workers * 4);
        let next = std::sync::atomic::AtomicUsize::new(0);
        let results: Vec<T> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers.min(chunks))
                .map(|_| {
                    s.spawn(|| {
                        let mut acc = init();
                        loop {
                            let c = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                            if c >= chunks {
                                break;
                            }
                            self.for_each_in_chunk(c, chunks, &mut |w| step(&mut acc, w));
                        }
                        acc
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        results.into_iter().fold(init(), merge)
    }

    /// All codewords; refuses codes with more than `cap` words.
    pub fn codewords(&self, cap: u128) -> Result<Vec<Z4Vector>> {
        let words = 1u128 << self.log2_size().min(127);
        if words > cap {
            return Err(Error::TooLarge { words, cap });
        }
        let mut out = Vec::with_capacity(words as usize);
        self.for_each_codeword(|w| out.push(w.clone()));
        Ok(out)
    }

    /// Weight enumerator of the given flavor, by exhaustive enumeration.
    pub fn enumerator(&self, flavor: Flavor, workers: usize) -> WeightEnumerator {
        let n = self.n;
        self.par_fold(
            workers,
            || WeightEnumerator::empty(flavor, n),
            |acc, w| acc.add_word(w).expect("codeword length matches"),
            |mut a, b| {
                a.merge(&b).expect("same flavor and length");
                a
            },
        )
    }

    /// Lee weight distribution (equal to the Hamming distribution of the Gray image).
    pub fn lee_distribution(&self, workers: usize) -> Vec<u64> {
        let len = 2 * self.n + 1;
        self.par_fold(
            workers,
            || vec![0u64; len],
            |acc, w| acc[w.lee_weight()] += 1,
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
    }

    /// Minimum nonzero Lee weight, by enumeration.
    pub fn min_lee_weight(&self, workers: usize) -> Option<usize> {
        self.lee_distribution(workers).iter().enumerate().skip(1).find(|(_, &c)| c > 0).map(|(w, _)| w)
    }

    /// Canonical sorted set of codewords, for small codes.
    pub fn codeword_set(&self, cap: u128) -> Result<BTreeSet<Z4Vector>> {
        Ok(self.codewords(cap)?.into_iter().collect())
    }

    /// Applies a coordinate permutation: new coordinate `j` carries old coordinate `perm[j]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, actual: perm.len() });
        }
        let rows: Vec<Z4Vector> = self.generator.iter().map(|r| r.gather(perm)).collect();
        Z4Code::from_generators(&rows, self.n, self.info.clone())
    }

    /// Generator rows as symbol strings.
    pub fn generator_strings(&self) -> Vec<String> {
        self.generator.iter().map(|r| r.to_string()).collect()
    }

    pub fn parity_strings(&self) -> Vec<String> {
        self.parity.iter().map(|r| r.to_string()).collect()
    }
}

/// Index from which the top digits are fixed per chunk, and the number of chunks.
fn split_point(radices: &[u8], want: usize) -> (usize, usize) {
    let mut split = radices.len();
    let mut count = 1usize;
    while split > 0 && count < want {
        split -= 1;
        count *= radices[split] as usize;
    }
    (split, count)
}

/// Checks that every vector of `a` is orthogonal to every vector of `b`.
pub fn orthogonal(a: &[Z4Vector], b: &[Z4Vector]) -> bool {
    a.iter().all(|x| b.iter().all(|y| x.dot(y) == 0))
}
