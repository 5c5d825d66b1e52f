//! Minimum Lee distance by meet-in-the-middle over syndromes.
//!
//! Every codeword c of Lee weight w splits as c = e₁ − e₂ with wt(e₁) = ⌈w/2⌉
//! and wt(e₂) = ⌊w/2⌋, and then e₁ and e₂ share a syndrome.

use std::collections::HashMap;

use crate::code::Z4Code;
use crate::error::{Error, Result};
use crate::z4::Z4Vector;

/// A sparse error pattern: (position, value) pairs in increasing position.
type Pattern = Vec<(u16, u8)>;

/// Syndrome packed as two bit-planes of up to 64 check rows each.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
struct Syn {
    lo: u64,
    hi: u64,
}

impl Syn {
    fn add(self, o: Syn) -> Syn {
        Syn { lo: self.lo ^ o.lo, hi: self.hi ^ o.hi ^ (self.lo & o.lo) }
    }

    fn neg(self) -> Syn {
        Syn { lo: self.lo, hi: self.hi ^ self.lo }
    }
}

/// Calls `f` on every pattern of Lee weight exactly `w` with its syndrome.
fn for_each_pattern(cols: &[Syn], w: usize, f: &mut impl FnMut(&Pattern, Syn)) {
    fn rec(cols: &[Syn], start: usize, left: usize, cur: &mut Pattern, syn: Syn, f: &mut impl FnMut(&Pattern, Syn)) {
        if left == 0 {
            f(cur, syn);
            return;
        }
        for p in start..cols.len() {
            let c = cols[p];
            for (v, cost, s) in [(1u8, 1usize, c), (3, 1, c.neg()), (2, 2, c.add(c))] {
                if cost <= left {
                    cur.push((p as u16, v));
                    rec(cols, p + 1, left - cost, cur, syn.add(s), f);
                    cur.pop();
                }
            }
        }
    }
    rec(cols, 0, w, &mut Vec::new(), Syn::default(), f);
}

fn column_syndromes(code: &Z4Code) -> Result<Vec<Syn>> {
    let h = code.parity_check();
    if h.len() > 64 {
        return Err(Error::InvalidParameters(format!("{} check rows exceed 64", h.len())));
    }
    Ok((0..code.len())
        .map(|p| {
            let mut s = Syn::default();
            for (i, row) in h.iter().enumerate() {
                let v = row.get(p);
                s.lo |= u64::from(v & 1) << i;
                s.hi |= u64::from(v >> 1) << i;
            }
            s
        })
        .collect())
}

fn to_vector(n: usize, p: &Pattern) -> Z4Vector {
    let mut v = Z4Vector::zeros(n);
    for &(pos, val) in p {
        v.set(pos as usize, val);
    }
    v
}

/// Smallest Lee weight w ≤ `max_weight` of a nonzero codeword, with a witness;
/// `None` proves there is no such word. Stops with an error if more than
/// `cap` patterns would be stored.
pub fn min_lee_weight_mitm(code: &Z4Code, max_weight: usize, cap: usize) -> Result<Option<(usize, Z4Vector)>> {
    let n = code.len();
    let cols = column_syndromes(code)?;
    let low = max_weight / 2;
    let high = max_weight - low;
    let mut table: HashMap<Syn, Pattern> = HashMap::new();
    table.insert(Syn::default(), Vec::new());
    for w in 1..=low {
        let mut over = false;
        for_each_pattern(&cols, w, &mut |p, s| {
            if table.len() >= cap {
                over = true;
                return;
            }
            table.entry(s).or_insert_with(|| p.clone());
        });
        if over {
            return Err(Error::TooLarge { words: table.len() as u128 + 1, cap: cap as u128 });
        }
    }
    let mut best: Option<(usize, Z4Vector)> = None;
    for w in 1..=high {
        for_each_pattern(&cols, w, &mut |p, s| {
            if let Some(q) = table.get(&s) {
                if q != p {
                    let c = &to_vector(n, p) - &to_vector(n, q);
                    let cw = c.lee_weight();
                    if cw <= max_weight && best.as_ref().is_none_or(|(b, _)| cw < *b) {
                        best = Some((cw, c));
                    }
                }
            }
        });
    }
    debug_assert!(best.as_ref().is_none_or(|(w, c)| code.contains(c) && c.lee_weight() == *w));
    Ok(best)
}
