//! Dependencies among the powers ξ^j, checked exhaustively.

use std::collections::HashMap;

use super::{GaloisRing, RingElement};

/// ±ξ^j ± ξ^k is a unit for all j < k and all signs.
pub fn p1_sums_invertible(ring: &GaloisRing) -> bool {
    let p = ring.powers();
    (0..p.len()).all(|j| {
        (j + 1..p.len()).all(|k| {
            [(p[j], p[k]), (p[j], -p[k]), (-p[j], p[k]), (-p[j], -p[k])]
                .iter()
                .all(|&(x, y)| ring.is_unit(x + y))
        })
    })
}

/// ξ^j − ξ^k ≠ ±ξ^l for distinct j, k, l.
pub fn p2_differences_not_powers(ring: &GaloisRing) -> bool {
    let p = ring.powers();
    for j in 0..p.len() {
        for k in 0..p.len() {
            if j == k {
                continue;
            }
            let d = p[j] - p[k];
            for (l, &x) in p.iter().enumerate() {
                if l != j && l != k && (d == x || d == -x) {
                    return false;
                }
            }
        }
    }
    true
}

/// The differences ξ^i − ξ^j, i ≠ j, are pairwise distinct.
pub fn p3_differences_distinct(ring: &GaloisRing) -> bool {
    let p = ring.powers();
    let mut seen: HashMap<RingElement, (usize, usize)> = HashMap::new();
    for i in 0..p.len() {
        for j in 0..p.len() {
            if i != j && seen.insert(p[i] - p[j], (i, j)).is_some() {
                return false;
            }
        }
    }
    true
}

/// ξ^i + ξ^j + ξ^k + ξ^l = 0 only when i = j = k = l.
pub fn p4_four_term_relations(ring: &GaloisRing) -> bool {
    let p = ring.powers();
    let n = p.len();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let rest = -(p[i] + p[j] + p[k]);
                if let Some(l) = ring.log_teichmuller(rest) {
                    if !(i == j && j == k && k == l as usize) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn properties_hold_m3_m5() {
        for m in [3u32, 5] {
            let r = GaloisRing::new(m).unwrap();
            assert!(p1_sums_invertible(&r));
            assert!(p2_differences_not_powers(&r));
            assert!(p3_differences_distinct(&r));
            assert!(p4_four_term_relations(&r));
        }
    }

    #[test]
    fn p4_fails_for_even_m() {
        assert!(!p4_four_term_relations(&GaloisRing::new(4).unwrap()));
    }
}
