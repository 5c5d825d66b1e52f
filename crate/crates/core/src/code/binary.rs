//! Binary linear codes and Reed-Muller generators.

use crate::error::{Error, Result};
use crate::z4::BinaryVector;

/// A binary linear code kept as a reduced echelon basis.
#[derive(Clone, Debug)]
pub struct BinaryCode {
    n: usize,
    // Basis rows paired with their pivot column; pivots strictly increase.
    rows: Vec<(usize, BinaryVector)>,
}

impl BinaryCode {
    pub fn from_generators(gens: &[BinaryVector], n: usize) -> Result<Self> {
        let mut c = BinaryCode { n, rows: Vec::new() };
        for g in gens {
            if g.len() != n {
                return Err(Error::LengthMismatch { expected: n, actual: g.len() });
            }
            c.insert(g.clone());
        }
        Ok(c)
    }

    fn reduce(&self, v: &BinaryVector) -> BinaryVector {
        let mut v = v.clone();
        for (p, r) in &self.rows {
            if v.get(*p) {
                v = v.xor(r);
            }
        }
        v
    }

    /// Adds a vector to the span; returns false if it was already there.
    pub fn insert(&mut self, v: BinaryVector) -> bool {
        let v = self.reduce(&v);
        let Some(p) = v.ones().next() else { return false };
        for (_, r) in self.rows.iter_mut() {
            if r.get(p) {
                *r = r.xor(&v);
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, v));
        true
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = &BinaryVector> {
        self.rows.iter().map(|(_, r)| r)
    }

    pub fn contains(&self, v: &BinaryVector) -> bool {
        v.len() == self.n && self.reduce(v).is_zero()
    }

    pub fn same_code(&self, other: &BinaryCode) -> bool {
        self.n == other.n && self.dimension() == other.dimension() && other.basis().all(|b| self.contains(b))
    }

    /// Every codeword; refuses dimensions above `max_dim`.
    pub fn codewords(&self, max_dim: usize) -> Result<Vec<BinaryVector>> {
        let k = self.dimension();
        if k > max_dim {
            return Err(Error::TooLarge { words: 1u128 << k.min(127), cap: 1u128 << max_dim });
        }
        let mut out = Vec::with_capacity(1 << k);
        let mut w = BinaryVector::zeros(self.n);
        out.push(w.clone());
        for i in 1u64..(1u64 << k) {
            // Gray-code order: flip the basis row at the lowest set bit.
            let j = i.trailing_zeros() as usize;
            w = w.xor(&self.rows[j].1);
            out.push(w.clone());
        }
        Ok(out)
    }

    /// Hamming weight distribution.
    pub fn weight_distribution(&self, max_dim: usize) -> Result<Vec<u64>> {
        let mut d = vec![0u64; self.n + 1];
        for w in self.codewords(max_dim)? {
            d[w.weight()] += 1;
        }
        Ok(d)
    }
}

/// Value of variable v_k (1-based) at coordinate `i` of a length-2^m vector;
/// v₁ is the most significant bit of `i`.
pub fn rm_variable(m: u32, k: u32, i: usize) -> bool {
    i >> (m - k) & 1 == 1
}

/// Boolean monomials of degree ≤ r in v₁…v_m, by degree then lexicographically.
pub fn monomials(m: u32, r: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for d in 0..=r.min(m) {
        combos(1, m, d, &mut Vec::new(), &mut out);
    }
    out
}

fn combos(start: u32, m: u32, d: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if d == 0 {
        out.push(cur.clone());
        return;
    }
    for v in start..=m {
        cur.push(v);
        combos(v + 1, m, d - 1, cur, out);
        cur.pop();
    }
}

/// Evaluation vector of a monomial over all 2^m points.
pub fn monomial_vector(m: u32, vars: &[u32]) -> BinaryVector {
    let len = 1usize << m;
    let mut v = BinaryVector::zeros(len);
    for i in 0..len {
        if vars.iter().all(|&k| rm_variable(m, k, i)) {
            v.set(i, true);
        }
    }
    v
}

/// Generator rows of RM(r, m), one per monomial of degree ≤ r.
pub fn rm_generator(r: u32, m: u32) -> Vec<BinaryVector> {
    monomials(m, r).iter().map(|mono| monomial_vector(m, mono)).collect()
}

pub fn reed_muller(r: u32, m: u32) -> BinaryCode {
    BinaryCode::from_generators(&rm_generator(r, m), 1 << m).expect("monomial rows have length 2^m")
}
