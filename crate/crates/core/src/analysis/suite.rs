//! Named verification suites producing [`Check`] records.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde_json::{json, Value};

use super::automorphism::{count_affine_automorphisms, frobenius_invariant, negation_invariant};
use super::distance::min_lee_weight_mitm;
use super::graph::{
    coset_graph_eigenmatrix_formula, coset_leaders, distinct_rows, eigenmatrix, outer_distribution, CosetGraph,
};
use super::report::Check;
use super::{
    blocks_of_weight, design_check, distance_invariance_check, inclusion_chain, kerdock_weight_formula,
    preparata_span_witness, weight_distribution, weight_distribution_via_dual, zrm_to_cyclic, Metric,
};
use crate::code::binary::{reed_muller, BinaryCode};
use crate::code::families::{
    delsarte_goethals, goethals, kerdock, kerdock_codeword, kerdock_shift_rows, kerdock_trace_rows, kerdock_with,
    octacode, preparata, qrm, zrm,
};
use crate::code::Z4Code;
use crate::decode::{
    correlation, kerdock_soft_decode_brute, nearest_codewords, DecodeStatus, KerdockSoftDecoder, PreparataDecoder,
    SoftInput,
};
use crate::enumerator::{binary_macwilliams, big_distribution, Flavor, WeightEnumerator};
use crate::error::{Error, Result};
use crate::galois::poly::{graeffe_lift, kerdock_generator_poly, parse_binary_poly};
use crate::galois::props::{
    p1_sums_invertible, p2_differences_not_powers, p3_differences_distinct, p4_four_term_relations,
};
use crate::galois::{GaloisRing, RingElement};
use crate::linearity::{check_gray_defect_identity, check_gray_sum_identity, z4_linearity_condition};
use crate::xform::{
    goethals_member_binary, goethals_member_z4, preparata_member_binary, preparata_member_classical,
    preparata_member_z4,
};
use crate::z4::{BinaryVector, Z4Vector};

pub const SUITES: [&str; 6] = ["core", "rings", "kerdock", "preparata", "goethals", "graphs"];

/// Options shared by all suites.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub workers: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { workers: 4, seed: 1 }
    }
}

type SuiteFn = fn(&mut Runner);

fn suite_fn(name: &str) -> Option<SuiteFn> {
    Some(match name {
        "core" => core,
        "rings" => rings,
        "kerdock" => kerdock_suite,
        "preparata" => preparata_suite,
        "goethals" => goethals_suite,
        "graphs" => graphs,
        _ => return None,
    })
}

/// Collects checks, skipping those not named in `only`.
struct Runner<'a> {
    cfg: SuiteConfig,
    only: Option<&'a [&'a str]>,
    out: Vec<Check>,
}

impl Runner<'_> {
    fn run(&mut self, name: &str, params: Value, f: impl FnOnce() -> Result<Check>) {
        if self.only.is_some_and(|o| !o.contains(&name)) {
            return;
        }
        self.out.push(f().unwrap_or_else(|e| Check::failed(name, params, e)));
    }
}

/// Runs a named suite, or every suite for "all".
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Vec<Check>> {
    let names: Vec<&str> = if name == "all" { SUITES.to_vec() } else { vec![name] };
    let mut rn = Runner { cfg: *cfg, only: None, out: Vec::new() };
    for n in names {
        let f = suite_fn(n).ok_or_else(|| Error::InvalidParameters(format!("unknown suite '{n}'")))?;
        f(&mut rn);
    }
    Ok(rn.out)
}

/// Runs only the checks with the given names, across all suites.
pub fn run_checks(names: &[&str], cfg: &SuiteConfig) -> Vec<Check> {
    let mut rn = Runner { cfg: *cfg, only: Some(names), out: Vec::new() };
    for s in SUITES {
        suite_fn(s).expect("known suite")(&mut rn);
    }
    rn.out
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn sorted_terms(e: &WeightEnumerator) -> Vec<(Vec<u32>, String)> {
    let mut t: Vec<(Vec<u32>, String)> = e.terms().map(|(k, v)| (k.to_vec(), v.to_string())).collect();
    t.sort();
    t
}

fn all_words(n: usize) -> Vec<Z4Vector> {
    (0..1u64 << (2 * n))
        .map(|x| Z4Vector::from_symbols(&(0..n).map(|i| (x >> (2 * i) & 3) as u8).collect::<Vec<_>>()).expect("symbols"))
        .collect()
}

fn random_word(rng: &mut ChaCha8Rng, n: usize) -> Z4Vector {
    let s: Vec<u8> = (0..n).map(|_| rng.random_range(0..4u8)).collect();
    Z4Vector::from_symbols(&s).expect("symbols")
}

fn gray_images(code: &Z4Code, cap: u128) -> Result<Vec<BinaryVector>> {
    Ok(code.codewords(cap)?.iter().map(|c| c.gray_map()).collect())
}

/// The printed symmetrized enumerator of the octacode.
pub fn octacode_swe_expected() -> Vec<(Vec<u32>, String)> {
    let mut t = vec![
        (vec![8, 0, 0], "1".to_string()),
        (vec![0, 8, 0], "16".to_string()),
        (vec![0, 0, 8], "1".to_string()),
        (vec![4, 0, 4], "14".to_string()),
        (vec![3, 4, 1], "112".to_string()),
        (vec![1, 4, 3], "112".to_string()),
    ];
    t.sort();
    t
}

fn core(rn: &mut Runner) {
    let cfg = rn.cfg;
    let p0 = json!({});
    rn.run("gray map table", p0.clone(), || {
        let got: Vec<String> = (0..4u8).map(|s| Z4Vector::from_symbols(&[s]).map(|v| v.gray_map().to_string())).collect::<Result<_>>()?;
        Ok(Check::new("gray map table", json!({}), ["00", "01", "11", "10"], got))
    });
    rn.run("gray map example", p0.clone(), || {
        let v: Z4Vector = "1230".parse()?;
        Ok(Check::new("gray map example", json!({"v": "1230"}), "01101100", v.gray_map().to_string()))
    });
    rn.run("Kerdock(3) equals the octacode", json!({"m": 3}), || {
        let ring = GaloisRing::new(3)?;
        Ok(Check::new("Kerdock(3) equals the octacode", json!({"m": 3}), true, kerdock(&ring)?.same_code(&octacode())))
    });
    rn.run("octacode swe", p0.clone(), || {
        let e = octacode().enumerator(Flavor::Swe, cfg.workers);
        Ok(Check::new("octacode swe", json!({}), octacode_swe_expected(), sorted_terms(&e)))
    });
    rn.run("octacode Gray image distribution", p0.clone(), || {
        let d = octacode().enumerator(Flavor::Lee, cfg.workers).distribution()?;
        let mut want = vec![BigUint::from(0u32); 17];
        for (w, c) in [(0, 1u32), (6, 112), (8, 30), (10, 112), (16, 1)] {
            want[w] = BigUint::from(c);
        }
        Ok(Check::new("octacode Gray image distribution", json!({}), strings(&want), strings(&d)))
    });
    rn.run("Lee MacWilliams K(3) -> P(3)", json!({"m": 3}), || {
        let ring = GaloisRing::new(3)?;
        let k = kerdock(&ring)?;
        let p = preparata(&ring)?;
        let via = k.enumerator(Flavor::Lee, cfg.workers).macwilliams(&k.size())?;
        let direct = p.enumerator(Flavor::Lee, cfg.workers);
        Ok(Check::new("Lee MacWilliams K(3) -> P(3)", json!({"m": 3}), sorted_terms(&direct), sorted_terms(&via)))
    });
    rn.run("binary MacWilliams of Gray images", json!({"m": 3}), || {
        let ring = GaloisRing::new(3)?;
        let k = kerdock(&ring)?;
        let p = preparata(&ring)?;
        let dk = weight_distribution(&k, Metric::HammingOfImage, cfg.workers, 1 << 20)?;
        let dp = weight_distribution(&p, Metric::HammingOfImage, cfg.workers, 1 << 20)?;
        let t = binary_macwilliams(&dk.0, 16)?;
        Ok(Check::new("binary MacWilliams of Gray images", json!({"m": 3}), strings(&dp.0), strings(&t)))
    });
    rn.run("double MacWilliams", json!({"m": 5}), || {
        let ring = GaloisRing::new(5)?;
        let k = kerdock(&ring)?;
        let e = k.enumerator(Flavor::Lee, cfg.workers);
        let dual_size = (BigUint::from(1u32) << 64) / k.size();
        let back = e.macwilliams(&k.size())?.macwilliams(&dual_size)?;
        Ok(Check::new("double MacWilliams", json!({"m": 5}), sorted_terms(&e), sorted_terms(&back)))
    });
    rn.run("cwe MacWilliams self-dual", json!({}), || {
        let e = octacode().enumerator(Flavor::Cwe, cfg.workers);
        let d = e.macwilliams(&octacode().size())?;
        Ok(Check::new("cwe MacWilliams self-dual", json!({}), sorted_terms(&e), sorted_terms(&d)))
    });
    for (name, code) in [("octacode", octacode()), ("ZRM(1,3)", zrm(1, 3).unwrap()), ("ZRM(2,3)", zrm(2, 3).unwrap())] {
        let check = format!("Z4-linearity closure of {name} image");
        rn.run(&check, json!({"code": name}), || {
            let img = gray_images(&code, 1 << 16)?;
            let w = z4_linearity_condition(&img)?;
            Ok(Check::new(&check, json!({"code": name}), Value::Null, w))
        });
    }
    rn.run("Gray identities exhaustive", json!({"n": [1, 2]}), || {
        let mut bad = 0u64;
        for n in 1..=2 {
            let w = all_words(n);
            for a in &w {
                for b in &w {
                    if !(check_gray_sum_identity(a, b)? && check_gray_defect_identity(a, b)?) {
                        bad += 1;
                    }
                }
            }
        }
        Ok(Check::new("Gray identities exhaustive", json!({"n": [1, 2]}), 0, bad))
    });
    rn.run("Gray identities random", json!({"n": 8, "pairs": 10000, "seed": cfg.seed}), || {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        let mut bad = 0u64;
        for _ in 0..10_000 {
            let a = random_word(&mut rng, 8);
            let b = random_word(&mut rng, 8);
            if !(check_gray_sum_identity(&a, &b)? && check_gray_defect_identity(&a, &b)?) {
                bad += 1;
            }
        }
        Ok(Check::new("Gray identities random", json!({"n": 8, "pairs": 10000, "seed": cfg.seed}), 0, bad))
    });
    rn.run("distance invariance of octacode image", json!({}), || {
        let img = gray_images(&octacode(), 1 << 10)?;
        let all: Vec<usize> = (0..img.len()).collect();
        Ok(Check::new("distance invariance of octacode image", json!({}), true, distance_invariance_check(&img, &all)?))
    });
    rn.run("distance invariance witness", json!({"set": ["000", "100", "011"]}), || {
        let set: Vec<BinaryVector> = ["000", "100", "011"].iter().map(|s| s.parse()).collect::<Result<_>>()?;
        Ok(Check::new("distance invariance witness", json!({"set": ["000", "100", "011"]}), false, distance_invariance_check(&set, &[1])?))
    });
}

pub fn additive_table_m3() -> [&'static str; 7] {
    ["100", "010", "001", "132", "233", "331", "121"]
}

fn rings(rn: &mut Runner) {
    for (m, h2, want) in [(3u32, "1101", "3121"), (5, "101001", "323001")] {
        let name = format!("Graeffe lift m={m}");
        rn.run(&name, json!({"m": m, "h2": h2}), || {
            let h = graeffe_lift(parse_binary_poly(h2)?)?;
            Ok(Check::new(&name, json!({"m": m, "h2": h2}), want, h.to_string()))
        });
    }
    rn.run("Kerdock generator polynomial m=5", json!({"m": 5}), || {
        let ring = GaloisRing::new(5)?;
        let g = kerdock_generator_poly(ring.h())?;
        Ok(Check::new("Kerdock generator polynomial m=5", json!({"m": 5}), "11120122010303133013212213", g.to_string()))
    });
    rn.run("additive table m=3", json!({"m": 3}), || {
        let ring = GaloisRing::new(3)?;
        let got: Vec<String> = ring.powers().iter().map(|&x| ring.format(x)).collect();
        Ok(Check::new("additive table m=3", json!({"m": 3}), additive_table_m3(), got))
    });
    for m in [3u32, 5] {
        let params = json!({"m": m});
        rn.run("dependencies P1-P4", params.clone(), || {
            let ring = GaloisRing::new(m)?;
            let got = [
                p1_sums_invertible(&ring),
                p2_differences_not_powers(&ring),
                p3_differences_distinct(&ring),
                p4_four_term_relations(&ring),
            ];
            Ok(Check::new("dependencies P1-P4", params.clone(), [true; 4], got))
        });
        rn.run("sum of powers and unit character sum", params.clone(), || {
            let ring = GaloisRing::new(m)?;
            let s = ring.powers().iter().fold(RingElement::ZERO, |a, &x| a + x);
            let c = ring.unit_character_sum();
            Ok(Check::new(
                "sum of powers and unit character sum",
                params.clone(),
                json!({"sum": ring.format(RingElement::ZERO), "character": [0, 0]}),
                json!({"sum": ring.format(s), "character": [c.re.to_string().parse::<i64>().unwrap_or(-1), c.im.to_string().parse::<i64>().unwrap_or(-1)]}),
            ))
        });
    }
    rn.run("trace equidistribution m=3", json!({"m": 3}), || {
        let ring = GaloisRing::new(3)?;
        let mut hits = [0u32; 4];
        for c in ring.elements() {
            hits[ring.trace(c) as usize] += 1;
        }
        Ok(Check::new("trace equidistribution m=3", json!({"m": 3}), [16; 4], hits))
    });
}

fn kerdock_suite(rn: &mut Runner) {
    let cfg = rn.cfg;
    rn.run("octacode generator rows", json!({"m": 3}), || {
        let ring = GaloisRing::new(3)?;
        let shift = strings(&kerdock_shift_rows(&ring)?);
        let trace = strings(&kerdock_trace_rows(&ring));
        Ok(Check::new(
            "octacode generator rows",
            json!({"m": 3}),
            json!({"shift": ["13121000", "10312100", "10031210", "10003121"], "trace": ["11111111", "01001231", "00103332", "00012311"]}),
            json!({"shift": shift, "trace": trace}),
        ))
    });
    for m in [3u32, 4, 5] {
        let params = json!({"m": m});
        rn.run("Kerdock weight distribution", params.clone(), || {
            let ring = GaloisRing::new(m)?;
            let k = kerdock_with(&ring, true)?;
            let d = weight_distribution(&k, Metric::HammingOfImage, cfg.workers, 1 << 20)?;
            let f = kerdock_weight_formula(m)?;
            Ok(Check::new("Kerdock weight distribution", params.clone(), f.to_json(), d.to_json()))
        });
    }
    for m in [3u32, 5] {
        let params = json!({"m": m});
        rn.run("family A correlations", params.clone(), || {
            let ring = GaloisRing::new(m)?;
            let n = ring.n() as usize;
            let zero = Z4Vector::zeros(n);
            let mut bad = 0;
            for lambda in ring.elements().filter(|&l| ring.is_unit(l)) {
                let v: Vec<u8> = (0..n).map(|t| ring.trace(ring.mul(lambda, ring.xi_pow(t as i64)))).collect();
                let z = correlation(&Z4Vector::from_symbols(&v)?, &zero)?;
                if (z.re + 1) * (z.re + 1) + z.im * z.im != 1 << m {
                    bad += 1;
                }
            }
            Ok(Check::new("family A correlations", params.clone(), 0, bad))
        });
    }
    let params = json!({"m": 3, "inputs": 1000, "seed": cfg.seed});
    rn.run("soft decoder equals brute force", params.clone(), || {
        let (mismatches, _) = soft_decoder_comparison(3, 1000, cfg.seed, 0.7)?;
        Ok(Check::new("soft decoder equals brute force", params.clone(), 0, mismatches))
    });
    for m in [3u32, 5] {
        let params = json!({"m": m});
        rn.run("QRM structure", params.clone(), || {
            let ring = GaloisRing::new(m)?;
            let mut bad = Vec::new();
            if !qrm(&ring, 1)?.same_code(&kerdock(&ring)?) {
                bad.push("QRM(1,m) != K".to_string());
            }
            for r in 0..m {
                if !qrm(&ring, r)?.dual().same_code(&qrm(&ring, m - r - 1)?) {
                    bad.push(format!("QRM({r},m) dual"));
                }
            }
            Ok(Check::new("QRM structure", params.clone(), Vec::<String>::new(), bad))
        });
    }
    for m in [3u32, 4] {
        let params = json!({"m": m});
        rn.run("alpha(QRM) = RM", params.clone(), || {
            let ring = GaloisRing::new(m)?;
            let bad: Vec<u32> = (0..=m).filter(|&r| !qrm_alpha_is_rm(&ring, r).unwrap_or(false)).collect();
            Ok(Check::new("alpha(QRM) = RM", params.clone(), Vec::<u32>::new(), bad))
        });
    }
    rn.run("Kerdock automorphisms", json!({"m": 3}), || {
        let ring = GaloisRing::new(3)?;
        Ok(automorphism_check("Kerdock automorphisms", &kerdock(&ring)?, &ring)?)
    });
}

/// α(QRM(r,m)) equals RM(r,m) moved to cyclic coordinate order.
pub fn qrm_alpha_is_rm(ring: &GaloisRing, r: u32) -> Result<bool> {
    let m = ring.m();
    let n = 1usize << m;
    let q = qrm(ring, r)?;
    let alpha: Vec<BinaryVector> = q.generator().iter().map(|g| g.alpha()).collect();
    let a = BinaryCode::from_generators(&alpha, n)?;
    let perm = zrm_to_cyclic(ring);
    let rm = reed_muller(r, m);
    let moved: Vec<BinaryVector> = rm.basis().map(|b| b.gather(&perm)).collect();
    Ok(a.same_code(&BinaryCode::from_generators(&moved, n)?))
}

fn automorphism_check(name: &str, code: &Z4Code, ring: &GaloisRing) -> Result<Check> {
    let count = count_affine_automorphisms(code, ring)?;
    let fro = frobenius_invariant(code, ring)?;
    let neg = negation_invariant(code);
    let group = (1usize << ring.m()) * ((1usize << ring.m()) - 1);
    Ok(Check::new(
        name,
        json!({"m": ring.m(), "code": code.info().family.to_string()}),
        json!({"affine": group, "frobenius": true, "negation": true}),
        json!({"affine": count, "frobenius": fro, "negation": neg}),
    ))
}

/// Runs the fast and exhaustive soft decoders on seeded noisy Kerdock words;
/// returns (mismatches, largest score difference).
pub fn soft_decoder_comparison(m: u32, inputs: usize, seed: u64, sigma: f64) -> Result<(usize, f64)> {
    let ring = GaloisRing::new(m)?;
    let dec = KerdockSoftDecoder::new(ring.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let noise = Normal::new(0.0, sigma).map_err(|e| Error::InvalidParameters(e.to_string()))?;
    let elems: Vec<RingElement> = ring.elements().collect();
    let mut mismatches = 0;
    let mut worst = 0f64;
    for _ in 0..inputs {
        let c = kerdock_codeword(&ring, elems[rng.random_range(0..elems.len())], rng.random_range(0..4));
        let samples = SoftInput::from_codeword(&c)
            .samples()
            .iter()
            .map(|z| z + num_complex::Complex64::new(noise.sample(&mut rng), noise.sample(&mut rng)))
            .collect();
        let input = SoftInput::new(samples)?;
        let fast = dec.decode(&input)?;
        let slow = kerdock_soft_decode_brute(&ring, &input)?;
        let diff = (fast.score - slow.score).abs();
        worst = worst.max(diff);
        if (fast.r, fast.s, fast.delta) != (slow.r, slow.s, slow.delta) || diff > 1e-9 {
            mismatches += 1;
        }
    }
    Ok((mismatches, worst))
}

/// Outcome counts of decoding every octacode word plus every error of Lee
/// weight ≤ 3, compared against the nearest-codeword oracle.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct ExhaustiveDecodeReport {
    pub decoded: u64,
    pub weight_le2_wrong: u64,
    pub weight3_silent: u64,
    pub weight3_bad_correction: u64,
    pub oracle_disagreements: u64,
}

/// Error patterns on `n` coordinates with Lee weight exactly `w`.
pub fn error_patterns(n: usize, w: usize) -> Vec<Z4Vector> {
    fn rec(n: usize, start: usize, left: usize, cur: &mut Z4Vector, out: &mut Vec<Z4Vector>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in start..n {
            for (v, cost) in [(1u8, 1usize), (3, 1), (2, 2)] {
                if cost <= left {
                    cur.set(p, v);
                    rec(n, p + 1, left - cost, cur, out);
                    cur.set(p, 0);
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(n, 0, w, &mut Z4Vector::zeros(n), &mut out);
    out
}

pub fn preparata_decoder_exhaustive_m3() -> Result<ExhaustiveDecodeReport> {
    let ring = GaloisRing::new(3)?;
    let code = preparata(&ring)?;
    let words = code.codewords(1 << 10)?;
    let dec = PreparataDecoder::new(ring)?;
    let mut rep = ExhaustiveDecodeReport::default();
    let patterns: Vec<(usize, Z4Vector)> = (1..=3).flat_map(|w| error_patterns(8, w).into_iter().map(move |e| (w, e))).collect();
    for c in &words {
        for (w, e) in &patterns {
            let v = c + e;
            let r = dec.decode(&v)?;
            rep.decoded += 1;
            let (dist, near) = nearest_codewords(&words, &v);
            let decoded = r.codeword(&v);
            if *w <= 2 {
                if r.status != DecodeStatus::Corrected || &r.error != e {
                    rep.weight_le2_wrong += 1;
                }
            } else {
                match r.status {
                    DecodeStatus::NoError => rep.weight3_silent += 1,
                    DecodeStatus::Corrected => {
                        let ok = decoded.as_ref().is_some_and(|d| code.contains(d)) && r.applied_weight == dist;
                        if !ok || r.applied_weight <= 2 && dist > 2 {
                            rep.weight3_bad_correction += 1;
                        }
                    }
                    DecodeStatus::Detected => {}
                }
            }
            if r.status != DecodeStatus::Detected {
                let idx = decoded.and_then(|d| words.iter().position(|x| *x == d));
                if !idx.is_some_and(|i| near.contains(&i)) {
                    rep.oracle_disagreements += 1;
                }
            } else if dist <= 2 {
                rep.oracle_disagreements += 1;
            }
        }
    }
    Ok(rep)
}

/// Decodes single errors (all 3·2^m) and `doubles` random double errors on
/// `words` random codewords at degree m; returns the failure count.
pub fn preparata_decoder_random(m: u32, words: usize, doubles: usize, seed: u64) -> Result<(u64, u64)> {
    let ring = GaloisRing::new(m)?;
    let code = preparata(&ring)?;
    let dec = PreparataDecoder::new(ring)?;
    let n = code.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let singles: Vec<Z4Vector> = (0..n).flat_map(|p| (1..4u8).map(move |v| Z4Vector::unit(n, p, v))).collect();
    let mut fails = 0u64;
    let mut trials = 0u64;
    let mut check = |c: &Z4Vector, e: &Z4Vector| -> Result<()> {
        let r = dec.decode(&(c + e))?;
        trials += 1;
        if r.status != DecodeStatus::Corrected || &r.error != e {
            fails += 1;
        }
        Ok(())
    };
    for i in 0..words {
        let info: Vec<u8> = (0..code.k1()).map(|_| rng.random_range(0..4u8)).collect();
        let c = code.encode(&info)?;
        for e in &singles {
            check(&c, e)?;
        }
        let per_word = doubles / words + usize::from(i < doubles % words);
        for _ in 0..per_word {
            let p = rng.random_range(0..n);
            let mut q = rng.random_range(0..n - 1);
            if q >= p {
                q += 1;
            }
            let mut e = Z4Vector::zeros(n);
            e.set(p, if rng.random::<bool>() { 1 } else { 3 });
            e.set(q, if rng.random::<bool>() { 1 } else { 3 });
            check(&c, &e)?;
        }
    }
    Ok((fails, trials))
}

/// Counts disagreements between the transform-domain tests and syndrome
/// membership over all 4^8 words at m = 3: (ℤ₄ test, binary test, classical test).
pub fn transform_agreement_m3() -> Result<[u64; 3]> {
    let ring = GaloisRing::new(3)?;
    let p = preparata(&ring)?;
    let mut bad = [0u64; 3];
    for x in 0..1u32 << 16 {
        let sym: Vec<u8> = (0..8).map(|i| (x >> (2 * i) & 3) as u8).collect();
        let c = Z4Vector::from_symbols(&sym)?;
        let inp = p.contains(&c);
        let (b, ab) = c.gray_map().halves()?;
        if preparata_member_z4(&ring, &c)? != inp {
            bad[0] += 1;
        }
        if preparata_member_binary(ring.field(), &b, &ab)? != inp {
            bad[1] += 1;
        }
        if preparata_member_classical(ring.field(), &b, &ab)? != inp {
            bad[2] += 1;
        }
    }
    Ok(bad)
}

fn preparata_suite(rn: &mut Runner) {
    let cfg = rn.cfg;
    rn.run("P(3) equals the octacode", json!({"m": 3}), || {
        let ring = GaloisRing::new(3)?;
        Ok(Check::new("P(3) equals the octacode", json!({"m": 3}), true, preparata(&ring)?.same_code(&octacode())))
    });
    rn.run("P(5) type", json!({"m": 5}), || {
        let ring = GaloisRing::new(5)?;
        Ok(Check::new("P(5) type", json!({"m": 5}), "4^26 2^0", preparata(&ring)?.type_string()))
    });
    rn.run("decoder exhaustive m=3", json!({"m": 3, "maxLee": 3}), || {
        let rep = preparata_decoder_exhaustive_m3()?;
        let pass = rep.weight_le2_wrong == 0
            && rep.weight3_silent == 0
            && rep.weight3_bad_correction == 0
            && rep.oracle_disagreements == 0;
        Ok(Check::with_pass("decoder exhaustive m=3", json!({"m": 3, "maxLee": 3}), "no failures", &rep, pass))
    });
    let params = json!({"m": 5, "codewords": 200, "doubles": 2000, "seed": cfg.seed});
    rn.run("decoder random m=5", params.clone(), || {
        let (fails, trials) = preparata_decoder_random(5, 200, 2000, cfg.seed)?;
        Ok(Check::with_pass("decoder random m=5", params.clone(), 0, json!({"failures": fails, "trials": trials}), fails == 0))
    });
    rn.run("transform tests agree with membership", json!({"m": 3}), || {
        Ok(Check::new("transform tests agree with membership", json!({"m": 3}), [0u64; 3], transform_agreement_m3()?))
    });
    rn.run("minimum Lee weight P(5)", json!({"m": 5, "method": "meet-in-the-middle"}), || {
        let ring = GaloisRing::new(5)?;
        let p = preparata(&ring)?;
        let w = min_lee_weight_mitm(&p, 6, 1 << 22)?.map(|(w, _)| w);
        Ok(Check::new("minimum Lee weight P(5)", json!({"m": 5, "method": "meet-in-the-middle"}), Some(6), w))
    });
    rn.run("P(5) distribution via MacWilliams", json!({"m": 5}), || {
        let ring = GaloisRing::new(5)?;
        let p = preparata(&ring)?;
        let d = weight_distribution_via_dual(&p, cfg.workers, 1 << 20)?;
        let from_formula = binary_macwilliams(&kerdock_weight_formula(5)?.0, 64)?;
        Ok(Check::new("P(5) distribution via MacWilliams", json!({"m": 5}), strings(&from_formula), strings(&d.0)))
    });
    rn.run("inclusion chain", json!({"m": 5}), || {
        let ring = GaloisRing::new(5)?;
        let chain = inclusion_chain(&ring)?;
        let failed: Vec<String> = chain.into_iter().filter(|(_, ok)| !ok).map(|(s, _)| s).collect();
        Ok(Check::new("inclusion chain", json!({"m": 5}), Vec::<String>::new(), failed))
    });
    rn.run("weight-2 word in span of P(5) image", json!({"m": 5}), || {
        let ring = GaloisRing::new(5)?;
        let w = preparata_span_witness(&ring).map(|(i, j, v)| json!({"rows": [i, j], "weight": v.weight()}));
        Ok(Check::with_pass("weight-2 word in span of P(5) image", json!({"m": 5}), "witness of weight 2", &w, w.is_some()))
    });
    rn.run("Preparata automorphisms", json!({"m": 3}), || {
        let ring = GaloisRing::new(3)?;
        automorphism_check("Preparata automorphisms", &preparata(&ring)?, &ring)
    });
}

fn goethals_suite(rn: &mut Runner) {
    let cfg = rn.cfg;
    rn.run("Goethals m=3", json!({"m": 3}), || {
        let ring = GaloisRing::new(3)?;
        let g = goethals(&ring)?;
        let size = g.size().to_string();
        let lee = g.min_lee_weight(cfg.workers);
        let img = gray_images(&g, 1 << 10)?;
        let mut dmin = usize::MAX;
        for (i, a) in img.iter().enumerate() {
            for b in &img[i + 1..] {
                dmin = dmin.min(a.hamming_distance(b)?);
            }
        }
        Ok(Check::new(
            "Goethals m=3",
            json!({"m": 3}),
            json!({"size": "32", "minLee": 8, "binaryMinDistance": 8}),
            json!({"size": size, "minLee": lee, "binaryMinDistance": dmin}),
        ))
    });
    rn.run("DG(3,1) minimum Lee weight", json!({"m": 3, "r": 1}), || {
        let ring = GaloisRing::new(3)?;
        let dg = delsarte_goethals(&ring, 1)?;
        Ok(Check::new("DG(3,1) minimum Lee weight", json!({"m": 3, "r": 1}), Some(4), dg.min_lee_weight(cfg.workers)))
    });
    rn.run("DG(5,r) types", json!({"m": 5}), || {
        let ring = GaloisRing::new(5)?;
        let t: Vec<String> = (1..=2).map(|r| delsarte_goethals(&ring, r).map(|c| c.type_string())).collect::<Result<_>>()?;
        Ok(Check::new("DG(5,r) types", json!({"m": 5}), ["4^6 2^5", "4^6 2^10"], t))
    });
    rn.run("minimum Lee weight Goethals(5)", json!({"m": 5, "method": "meet-in-the-middle"}), || {
        let ring = GaloisRing::new(5)?;
        let g = goethals(&ring)?;
        let w = min_lee_weight_mitm(&g, 8, 1 << 23)?.map(|(w, _)| w);
        Ok(Check::new("minimum Lee weight Goethals(5)", json!({"m": 5, "method": "meet-in-the-middle"}), Some(8), w))
    });
    rn.run("Goethals transform tests m=3", json!({"m": 3}), || {
        let ring = GaloisRing::new(3)?;
        let g = goethals(&ring)?;
        let mut bad = [0u64; 2];
        for x in 0..1u32 << 16 {
            let sym: Vec<u8> = (0..8).map(|i| (x >> (2 * i) & 3) as u8).collect();
            let c = Z4Vector::from_symbols(&sym)?;
            let inp = g.contains(&c);
            let (b, ab) = c.gray_map().halves()?;
            if goethals_member_z4(&ring, &c)? != inp {
                bad[0] += 1;
            }
            if goethals_member_binary(ring.field(), &b, &ab)? != inp {
                bad[1] += 1;
            }
        }
        Ok(Check::new("Goethals transform tests m=3", json!({"m": 3}), [0u64; 2], bad))
    });
    rn.run("Goethals automorphisms", json!({"m": 3}), || {
        let ring = GaloisRing::new(3)?;
        automorphism_check("Goethals automorphisms", &goethals(&ring)?, &ring)
    });
}

fn graphs(rn: &mut Runner) {
    let params = json!({"m": 3, "N": 16});
    rn.run("coset graph parameters", params.clone(), || {
        let ring = GaloisRing::new(3)?;
        let g = CosetGraph::new(&ring)?;
        let p = g
            .graph
            .distance_regular()
            .ok_or_else(|| Error::InvalidParameters("graph is not distance regular".into()))?;
        let (b, c) = p.intersection_array();
        let eig = eigenmatrix(&p);
        let r13 = g.graph.distance_graph(&[1, 3]).is_complete_bipartite(&g.bipartition());
        Ok(Check::new(
            "coset graph parameters",
            params.clone(),
            json!({
                "vertices": 256, "bipartite": true, "b": [16, 15, 14, 1], "c": [1, 2, 15, 16],
                "a": [0, 0, 0, 0, 0], "valencies": [1, 16, 120, 112, 7],
                "eigenmatrix": coset_graph_eigenmatrix_formula(16), "r1PlusR3CompleteBipartite": true
            }),
            json!({
                "vertices": g.graph.vertex_count(), "bipartite": g.is_bipartite_by_nu(), "b": b, "c": c,
                "a": p.a, "valencies": p.valencies, "eigenmatrix": eig, "r1PlusR3CompleteBipartite": r13
            }),
        ))
    });
    rn.run("R3 distance regularity (informational)", params.clone(), || {
        let ring = GaloisRing::new(3)?;
        let g = CosetGraph::new(&ring)?;
        let r3 = g.graph.distance_graph(&[3]);
        let p = r3.distance_regular();
        Ok(Check::with_pass("R3 distance regularity (informational)", params.clone(), Value::Null, json!({"distanceRegular": p.is_some(), "parameters": p}), true))
    });
    rn.run("covering radius and outer distribution of P(3)", json!({"m": 3}), || {
        let p = octacode();
        let cosets = coset_leaders(&p, 1 << 12)?;
        let rows = outer_distribution(&p, &cosets, 1 << 10)?;
        let radius = cosets.iter().map(|c| c.weight).max().unwrap_or(0);
        let mut b4: Vec<u64> = cosets.iter().zip(&rows).filter(|(c, _)| c.weight == 4).map(|(_, r)| r[4]).collect();
        b4.sort();
        b4.dedup();
        Ok(Check::new(
            "covering radius and outer distribution of P(3)",
            json!({"m": 3}),
            json!({"coveringRadius": 4, "distinctRows": 5, "Bx4": [20]}),
            json!({"coveringRadius": radius, "distinctRows": distinct_rows(&rows), "Bx4": b4}),
        ))
    });
    rn.run("weight-6 design of P(3)", json!({"m": 3}), || {
        let img = gray_images(&octacode(), 1 << 10)?;
        let blocks = blocks_of_weight(&img, 6);
        let lambda = design_check(&blocks, 3, 16, 6).ok();
        Ok(Check::new("weight-6 design of P(3)", json!({"m": 3}), json!({"blocks": 112, "lambda": 4}), json!({"blocks": blocks.len(), "lambda": lambda})))
    });
    rn.run("Steiner system from ZRM(1,3) dual", json!({"m": 3}), || {
        let img = gray_images(&zrm(1, 3)?.dual(), 1 << 12)?;
        let blocks = blocks_of_weight(&img, 4);
        let lambda = design_check(&blocks, 3, 16, 4).ok();
        Ok(Check::new("Steiner system from ZRM(1,3) dual", json!({"m": 3}), json!({"blocks": 140, "lambda": 1}), json!({"blocks": blocks.len(), "lambda": lambda})))
    });
}

/// Hamming distribution of a binary code given as big integers, for reports.
pub fn distribution_strings(d: &[u64]) -> Vec<String> {
    strings(&big_distribution(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn patterns_count() {
        assert_eq!(error_patterns(8, 1).len(), 16);
        assert_eq!(error_patterns(8, 2).len(), 8 + 28 * 4);
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("", &SuiteConfig::default()).is_err());
    }

    #[test]
    fn fast_suites_pass() {
        for s in ["core", "rings", "graphs"] {
            for c in run_suite(s, &SuiteConfig::default()).unwrap() {
                assert!(c.pass, "{}: {} vs {}", c.check, c.expected, c.computed);
            }
        }
    }
}
