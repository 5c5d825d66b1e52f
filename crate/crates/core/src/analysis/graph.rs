//! The graph Γ_m on ℤ₄-cosets of the `Preparata` code, distance-regularity,
//! eigenmatrices, and coset-based covering radius and outer distribution.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::code::Z4Code;
use crate::error::{Error, Result};
use crate::galois::{GaloisRing, RingElement};
use crate::z4::Z4Vector;

/// Intersection numbers of a distance-regular graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DrgParameters {
    pub diameter: usize,
    pub b: Vec<u64>,
    pub c: Vec<u64>,
    pub a: Vec<u64>,
    pub valencies: Vec<u64>,
}

impl DrgParameters {
    /// {b_0, …, b_{d−1}; c_1, …, c_d}.
    pub fn intersection_array(&self) -> (Vec<u64>, Vec<u64>) {
        (self.b[..self.diameter].to_vec(), self.c[1..].to_vec())
    }
}

/// An undirected graph with all-pairs distances.
#[derive(Clone, Debug)]
pub struct Graph {
    pub adj: Vec<Vec<u32>>,
    pub dist: Vec<Vec<u8>>,
}

impl Graph {
    pub fn new(adj: Vec<Vec<u32>>) -> Self {
        let v = adj.len();
        let mut dist = vec![vec![u8::MAX; v]; v];
        let mut queue = VecDeque::new();
        for (s, row) in dist.iter_mut().enumerate() {
            row[s] = 0;
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                let d = row[x];
                for &y in &adj[x] {
                    if row[y as usize] == u8::MAX {
                        row[y as usize] = d + 1;
                        queue.push_back(y as usize);
                    }
                }
            }
        }
        Graph { adj, dist }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn is_connected(&self) -> bool {
        self.dist.iter().all(|r| r.iter().all(|&d| d != u8::MAX))
    }

    pub fn diameter(&self) -> usize {
        self.dist.iter().flat_map(|r| r.iter()).map(|&d| d as usize).max().unwrap_or(0)
    }

    /// Checks that c_j, a_j, b_j depend only on the distance j, over every pair.
    pub fn distance_regular(&self) -> Option<DrgParameters> {
        if !self.is_connected() {
            return None;
        }
        let d = self.diameter();
        let mut b: Vec<Option<u64>> = vec![None; d + 1];
        let mut c: Vec<Option<u64>> = vec![None; d + 1];
        let mut a: Vec<Option<u64>> = vec![None; d + 1];
        let mut val: Vec<Option<u64>> = vec![None; d + 1];
        let set = |slot: &mut Option<u64>, x: u64| match slot {
            None => {
                *slot = Some(x);
                true
            }
            Some(y) => *y == x,
        };
        for u in 0..self.vertex_count() {
            let du = &self.dist[u];
            let mut counts = vec![0u64; d + 1];
            for &x in du {
                counts[x as usize] += 1;
            }
            for (j, &k) in counts.iter().enumerate() {
                if !set(&mut val[j], k) {
                    return None;
                }
            }
            for (v, &j) in du.iter().enumerate() {
                let j = j as usize;
                let (mut cj, mut aj, mut bj) = (0, 0, 0);
                for &w in &self.adj[v] {
                    match du[w as usize] as usize {
                        x if x + 1 == j => cj += 1,
                        x if x == j => aj += 1,
                        _ => bj += 1,
                    }
                }
                if !(set(&mut c[j], cj) && set(&mut a[j], aj) && set(&mut b[j], bj)) {
                    return None;
                }
            }
        }
        let un = |v: Vec<Option<u64>>| v.into_iter().map(|x| x.unwrap_or(0)).collect();
        Some(DrgParameters { diameter: d, b: un(b), c: un(c), a: un(a), valencies: un(val) })
    }

    /// The graph on the same vertices joining pairs whose distance is in `classes`.
    pub fn distance_graph(&self, classes: &[u8]) -> Graph {
        let adj = self
            .dist
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, d)| classes.contains(d)).map(|(v, _)| v as u32).collect())
            .collect();
        Graph::new(adj)
    }

    /// Whether the graph is complete bipartite with the given sides.
    pub fn is_complete_bipartite(&self, side: &[bool]) -> bool {
        let left = side.iter().filter(|&&s| s).count();
        let right = side.len() - left;
        self.adj.iter().enumerate().all(|(u, nb)| {
            let want = if side[u] { right } else { left };
            nb.len() == want && nb.iter().all(|&v| side[v as usize] != side[u])
        })
    }
}

/// Γ_m: vertices are syndromes (t, S) ∈ ℤ₄ × GR(4^m) of ℤ₄-cosets of 𝒫, and
/// two cosets are adjacent when they differ by a word of Lee weight 1.
#[derive(Clone, Debug)]
pub struct CosetGraph {
    pub m: u32,
    pub graph: Graph,
}

/// Largest m for which the coset graph is built (4^{m+1} vertices).
pub const MAX_GRAPH_M: u32 = 5;

impl CosetGraph {
    pub fn new(ring: &GaloisRing) -> Result<Self> {
        let m = ring.m();
        if m % 2 == 0 || m < 3 {
            return Err(Error::InvalidParameters(format!("coset graph needs odd m >= 3, got {m}")));
        }
        if m > MAX_GRAPH_M {
            return Err(Error::TooLarge { words: 1u128 << (2 * m + 2), cap: 1u128 << (2 * MAX_GRAPH_M + 2) });
        }
        let v = 1usize << (2 * m + 2);
        let cols: Vec<RingElement> = std::iter::once(RingElement::ZERO).chain(ring.powers().iter().copied()).collect();
        let adj = (0..v)
            .map(|x| {
                let (t, s) = Self::split(m, x);
                let mut nb = Vec::with_capacity(2 * cols.len());
                for &col in &cols {
                    nb.push(Self::label(m, (t + 1) & 3, s + col) as u32);
                    nb.push(Self::label(m, (t + 3) & 3, s - col) as u32);
                }
                nb
            })
            .collect();
        Ok(CosetGraph { m, graph: Graph::new(adj) })
    }

    pub fn label(m: u32, t: u8, s: RingElement) -> usize {
        usize::from(t) | (s.lo() as usize) << 2 | (s.hi() as usize) << (2 + m)
    }

    pub fn split(m: u32, x: usize) -> (u8, RingElement) {
        let mask = (1usize << m) - 1;
        ((x & 3) as u8, RingElement::from_planes((x >> 2 & mask) as u32, (x >> (2 + m) & mask) as u32))
    }

    /// ν: the low bit of t.
    pub fn bipartition(&self) -> Vec<bool> {
        (0..self.graph.vertex_count()).map(|x| x & 1 == 1).collect()
    }

    pub fn is_bipartite_by_nu(&self) -> bool {
        let side = self.bipartition();
        self.graph.adj.iter().enumerate().all(|(u, nb)| nb.iter().all(|&v| side[v as usize] != side[u]))
    }
}

/// Eigenmatrix P of a distance-regular graph with integral eigenvalues, rows
/// ordered by decreasing eigenvalue; None if some eigenvalue is not an integer.
pub fn eigenmatrix(p: &DrgParameters) -> Option<Vec<Vec<i64>>> {
    let d = p.diameter;
    let k = p.b[0] as i64;
    let eig: Vec<i64> = (-k..=k).rev().filter(|&th| char_poly_vanishes(p, th)).collect();
    if eig.len() != d + 1 {
        return None;
    }
    eig.iter()
        .map(|&th| {
            let mut row = vec![1i64, th];
            for j in 1..d {
                let num = (th - p.a[j] as i64) * row[j] - p.b[j - 1] as i64 * row[j - 1];
                let den = p.c[j + 1] as i64;
                if num % den != 0 {
                    return None;
                }
                row.push(num / den);
            }
            row.truncate(d + 1);
            Some(row)
        })
        .collect()
}

/// Whether θ is an eigenvalue of the tridiagonal intersection matrix.
fn char_poly_vanishes(p: &DrgParameters, th: i64) -> bool {
    // Three-term recurrence for the determinant of (L − θI).
    let d = p.diameter;
    let mut prev = 1i128;
    let mut cur = p.a[0] as i128 - th as i128;
    for j in 1..=d {
        let next = (p.a[j] as i128 - th as i128) * cur - (p.b[j - 1] as i128 * p.c[j] as i128) * prev;
        prev = cur;
        cur = next;
    }
    cur == 0
}

/// The closed-form eigenmatrix of Γ_m for N = 2^{m+1}. The last entry of
/// the eigenvalue-0 row is N/2 − 1, the value forced by orthogonality with
/// the valency row.
pub fn coset_graph_eigenmatrix_formula(n: i64) -> Vec<Vec<i64>> {
    let s = (n as f64).sqrt().round() as i64;
    let c2 = n * (n - 1) / 2;
    vec![
        vec![1, n, c2, n * (n - 2) / 2, (n - 2) / 2],
        vec![1, s, 0, -s, -1],
        vec![1, 0, -n / 2, 0, n / 2 - 1],
        vec![1, -s, 0, s, -1],
        vec![1, -n, c2, -n * (n - 2) / 2, n / 2 - 1],
    ]
}

/// A coset of a code: its syndrome and a minimum-weight representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    pub syndrome: Vec<u8>,
    pub leader: Z4Vector,
    pub weight: usize,
}

/// Coset leaders by breadth-first search over syndromes with Lee-weight-1 steps.
pub fn coset_leaders(code: &Z4Code, cap: usize) -> Result<Vec<Coset>> {
    let n = code.len();
    let units: Vec<Z4Vector> = (0..n).flat_map(|p| [1u8, 3].map(|v| Z4Vector::unit(n, p, v))).collect();
    let unit_syn: Vec<Vec<u8>> = units.iter().map(|u| code.syndrome(u)).collect::<Result<_>>()?;
    let zero = Z4Vector::zeros(n);
    let mut seen: HashMap<Vec<u8>, usize> = HashMap::new();
    let mut out = vec![Coset { syndrome: code.syndrome(&zero)?, leader: zero, weight: 0 }];
    seen.insert(out[0].syndrome.clone(), 0);
    let mut head = 0;
    while head < out.len() {
        let cur = out[head].clone();
        head += 1;
        for (u, us) in units.iter().zip(&unit_syn) {
            let s: Vec<u8> = cur.syndrome.iter().zip(us).map(|(a, b)| (a + b) & 3).collect();
            if !seen.contains_key(&s) {
                if out.len() >= cap {
                    return Err(Error::TooLarge { words: out.len() as u128 + 1, cap: cap as u128 });
                }
                seen.insert(s.clone(), out.len());
                out.push(Coset { syndrome: s, leader: &cur.leader + u, weight: cur.weight + 1 });
            }
        }
    }
    Ok(out)
}

pub fn covering_radius(code: &Z4Code, cap: usize) -> Result<usize> {
    Ok(coset_leaders(code, cap)?.iter().map(|c| c.weight).max().unwrap_or(0))
}

/// One outer-distribution row per coset: the Lee (= Gray-image Hamming)
/// distance distribution from the coset leader to the code.
pub fn outer_distribution(code: &Z4Code, cosets: &[Coset], word_cap: u128) -> Result<Vec<Vec<u64>>> {
    let words = code.codewords(word_cap)?;
    let len = 2 * code.len() + 1;
    Ok(cosets
        .iter()
        .map(|c| {
            let mut row = vec![0u64; len];
            for w in &words {
                row[c.leader.lee_distance(w).expect("same length")] += 1;
            }
            row
        })
        .collect())
}

pub fn distinct_rows(rows: &[Vec<u64>]) -> usize {
    let mut r = rows.to_vec();
    r.sort();
    r.dedup();
    r.len()
}
