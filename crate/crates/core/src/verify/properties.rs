//! Randomized property checks over constructed tuples. Every check is exact;
//! the RNG only chooses which instances get checked.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::braid::{apply_word, braid_move, Direction};
use crate::construct::{build_family, stabilize, tc_genus0, FamilyKind};
use crate::nielsen::NielsenTuple;
use crate::perm::{product, Perm, StabChain};
use crate::spin::{clifford_mul, even_product, lift_3cycle, lift_transposition, lifting_invariant, CliffordElement};

pub const BRAID_WORDS: usize = 1000;
pub const CONJUGATORS: usize = 100;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: u64,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> SuiteResult {
        SuiteResult { name, checks: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        // keep reports short; the count still tells how many failed
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checks > 0
    }
}

fn tc_samples() -> Vec<NielsenTuple> {
    let mut out = Vec::new();
    for n in 5..=7 {
        out.push(tc_genus0(n).expect("tc_genus0 in range"));
        for g in 1..=2 {
            if let Ok(t) = build_family(n, g, FamilyKind::Tc) {
                out.push(t);
            }
        }
    }
    out
}

fn dt_samples() -> Vec<NielsenTuple> {
    let mut out = Vec::new();
    for n in 5..=7 {
        for g in 1..=2 {
            if let Ok(t) = build_family(n, g, FamilyKind::Dt) {
                out.push(t);
            }
        }
    }
    out
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Perm {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Perm::from_images(&images).expect("shuffle is a bijection")
}

fn random_word(rng: &mut ChaCha8Rng, r: usize, max_len: usize) -> Vec<i32> {
    let len = rng.gen_range(1..=max_len);
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..r) as i32;
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect()
}

/// Random member of a random sample's orbit, so checks do not only see
/// the constructed representatives.
fn scramble(rng: &mut ChaCha8Rng, samples: &[NielsenTuple]) -> NielsenTuple {
    let t = samples.choose(rng).expect("samples are nonempty");
    let w = random_word(rng, t.len(), 12);
    let pi = random_perm(rng, t.degree());
    apply_word(t, &w).expect("valid word").conjugate(&pi).expect("same degree")
}

fn move_seq(t: &NielsenTuple, seq: &[usize]) -> NielsenTuple {
    seq.iter().fold(t.clone(), |acc, &i| braid_move(&acc, i, Direction::Forward).expect("index in range"))
}

fn entry_types(t: &NielsenTuple) -> Vec<Vec<usize>> {
    let mut v: Vec<Vec<usize>> = t.entries().iter().map(|e| e.cycle_structure().cycle_lengths).collect();
    v.sort();
    v
}

fn same_group(a: &NielsenTuple, b: &NielsenTuple) -> bool {
    let ca = StabChain::new(a.entries(), a.degree());
    let cb = StabChain::new(b.entries(), b.degree());
    ca.order() == cb.order() && b.entries().iter().all(|e| ca.contains(e))
}

pub fn braid_relations(seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut res = SuiteResult::new("braid-relations");
    let samples: Vec<NielsenTuple> = tc_samples().into_iter().chain(dt_samples()).collect();
    for _ in 0..300 {
        let t = scramble(&mut rng, &samples);
        let r = t.len();
        let i = rng.gen_range(1..r - 1);
        res.check(move_seq(&t, &[i, i + 1, i]) == move_seq(&t, &[i + 1, i, i + 1]), || {
            format!("Q{i}Q{}Q{i} differs on {t}", i + 1)
        });
        let j = rng.gen_range(1..r);
        if i.abs_diff(j) >= 2 {
            res.check(move_seq(&t, &[i, j]) == move_seq(&t, &[j, i]), || format!("Q{i} and Q{j} do not commute on {t}"));
        }
    }
    res
}

pub fn equivariance(seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut res = SuiteResult::new("conjugation-equivariance");
    let samples: Vec<NielsenTuple> = tc_samples().into_iter().chain(dt_samples()).collect();
    for _ in 0..300 {
        let t = scramble(&mut rng, &samples);
        let pi = random_perm(&mut rng, t.degree());
        let i = rng.gen_range(1..t.len());
        for dir in [Direction::Forward, Direction::Inverse] {
            let left = braid_move(&t.conjugate(&pi).unwrap(), i, dir).unwrap();
            let right = braid_move(&t, i, dir).unwrap().conjugate(&pi).unwrap();
            res.check(left == right, || format!("move {i} {dir:?} not equivariant on {t} by {pi}"));
        }
    }
    res
}

pub fn preservation(seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut res = SuiteResult::new("braid-preservation");
    let samples: Vec<NielsenTuple> = tc_samples().into_iter().chain(dt_samples()).collect();
    for _ in 0..BRAID_WORDS {
        let t = samples.choose(&mut rng).unwrap();
        let w = random_word(&mut rng, t.len(), 30);
        let u = apply_word(t, &w).unwrap();
        let p = |x: &NielsenTuple| product(x.entries().iter()).unwrap();
        res.check(p(&u) == p(t), || format!("product changed by {w:?} on {t}"));
        res.check(u.genus() == t.genus() && u.shape() == t.shape(), || format!("genus or shape changed by {w:?}"));
        res.check(entry_types(&u) == entry_types(t), || format!("entry classes changed by {w:?}"));
        res.check(same_group(t, &u), || format!("generated group changed by {w:?} on {t}"));
    }
    res
}

pub fn invariant_under_braids(seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut res = SuiteResult::new("invariant-braid-words");
    let samples = tc_samples();
    for _ in 0..BRAID_WORDS {
        let t = samples.choose(&mut rng).unwrap();
        let w = random_word(&mut rng, t.len(), 30);
        let before = lifting_invariant(t).unwrap();
        let after = lifting_invariant(&apply_word(t, &w).unwrap()).unwrap();
        res.check(before == after, || format!("invariant {before} became {after} under {w:?} on {t}"));
    }
    res
}

/// Conjugators are uniform in `S_n`, so about half are odd.
pub fn invariant_under_conjugation(seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut res = SuiteResult::new("invariant-conjugation");
    let samples = tc_samples();
    for _ in 0..CONJUGATORS {
        let t = scramble(&mut rng, &samples);
        let pi = random_perm(&mut rng, t.degree());
        let before = lifting_invariant(&t).unwrap();
        let after = lifting_invariant(&t.conjugate(&pi).unwrap()).unwrap();
        res.check(before == after, || format!("invariant {before} became {after} under {pi} on {t}"));
    }
    res
}

pub fn stabilize_keeps_invariant(seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut res = SuiteResult::new("stabilize-invariant");
    let positive: Vec<NielsenTuple> = tc_samples().into_iter().filter(|t| t.genus() > 0).collect();
    for _ in 0..100 {
        let t = scramble(&mut rng, &positive);
        let s = stabilize(&t, FamilyKind::Tc).unwrap();
        let (a, b) = (lifting_invariant(&t).unwrap(), lifting_invariant(&s).unwrap());
        res.check(a == b && s.genus() == t.genus() + 1, || format!("stabilize gave {b} from {a} on {t}"));
    }
    res
}

fn random_element(rng: &mut ChaCha8Rng, n: usize) -> CliffordElement {
    let terms: Vec<(Vec<usize>, BigRational)> = (0..rng.gen_range(1..=4))
        .map(|_| {
            let k = rng.gen_range(0..=3);
            let idx: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=n)).collect();
            let c = BigRational::new(BigInt::from(rng.gen_range(-5i64..=5)), BigInt::from(1i64 << rng.gen_range(0..4)));
            (idx, c)
        })
        .collect();
    let refs: Vec<(&[usize], BigRational)> = terms.iter().map(|(i, c)| (i.as_slice(), c.clone())).collect();
    CliffordElement::from_terms(n, &refs).unwrap()
}

/// Generator relations, associativity and distributivity.
pub fn clifford_relations(seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut res = SuiteResult::new("clifford-relations");
    for n in 1..=10 {
        let one = CliffordElement::one(n).unwrap();
        for i in 1..=n {
            let ei = CliffordElement::generator(i, n).unwrap();
            res.check(clifford_mul(&ei, &ei).unwrap() == one, || format!("e{i}^2 != 1 in degree {n}"));
            for j in i + 1..=n {
                let ej = CliffordElement::generator(j, n).unwrap();
                let (a, b) = (clifford_mul(&ei, &ej).unwrap(), clifford_mul(&ej, &ei).unwrap());
                res.check(a == b.neg(), || format!("e{i}, e{j} do not anticommute"));
            }
        }
    }
    for _ in 0..200 {
        let n = rng.gen_range(1..=10);
        let (a, b, c) = (random_element(&mut rng, n), random_element(&mut rng, n), random_element(&mut rng, n));
        let m = |x: &CliffordElement, y: &CliffordElement| clifford_mul(x, y).unwrap();
        res.check(m(&m(&a, &b), &c) == m(&a, &m(&b, &c)), || format!("not associative: {a}, {b}, {c}"));
        res.check(m(&a, &b.add(&c)) == m(&a, &b).add(&m(&a, &c)), || format!("not distributive: {a}, {b}, {c}"));
    }
    res
}

/// Transpositions whose left-to-right product is `p`, from its cycles.
fn transpositions_of(p: &Perm) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for c in p.cycles() {
        for k in 1..c.len() {
            out.push((c[0], c[k]));
        }
    }
    out
}

/// Random factorizations of the identity into transpositions lift to ±1,
/// and products of 3-cycle lifts over tuples with trivial product are ±1
/// with dyadic coefficients of bounded exponent.
pub fn identity_factorizations(seed: u64) -> SuiteResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut res = SuiteResult::new("identity-factorizations");
    let one = |n| CliffordElement::one(n).unwrap();
    for _ in 0..200 {
        let n = rng.gen_range(2..=9);
        let mut pairs: Vec<(usize, usize)> = (0..rng.gen_range(1..=8))
            .map(|_| {
                let a = rng.gen_range(1..=n);
                let b = (a + rng.gen_range(1..n) - 1) % n + 1;
                (a, b)
            })
            .collect();
        let perms: Vec<Perm> = pairs.iter().map(|&(a, b)| Perm::transposition(a, b, n).unwrap()).collect();
        let p = product(perms.iter()).unwrap();
        pairs.extend(transpositions_of(&p.inverse()));
        let factors: Vec<_> = pairs.iter().map(|&(a, b)| lift_transposition(a.min(b), a.max(b), n).unwrap()).collect();
        let v = even_product(&factors).unwrap();
        let ok = v.as_scalar().map(|s| s.is_one() || (-&s).is_one()).unwrap_or(false);
        res.check(ok, || format!("identity factorization {pairs:?} lifts to {v}"));
    }
    let samples = tc_samples();
    for _ in 0..100 {
        let t = scramble(&mut rng, &samples);
        let n = t.degree();
        let mut acc = one(n);
        for (k, e) in t.entries().iter().enumerate() {
            let c = &e.cycles()[0];
            let w = lift_3cycle(c[0], c[1], c[2], n).unwrap();
            res.check(w.pow(3) == one(n), || format!("lift of {e} is not of order 3"));
            acc = clifford_mul(&acc, &w).unwrap();
            res.check(acc.max_dyadic_exponent().is_some_and(|d| d <= k as u64 + 1), || {
                format!("coefficients of a {}-fold lift product are not dyadic within bound", k + 1)
            });
        }
        let ok = acc.as_scalar().map(|s| s.is_one() || (-&s).is_one()).unwrap_or(false);
        res.check(ok, || format!("lift product of {t} is {acc}"));
    }
    res
}

/// All suites; seeds are derived from `seed` so each suite is reproducible
/// on its own.
pub fn run_all(seed: u64) -> Vec<SuiteResult> {
    let suites: [fn(u64) -> SuiteResult; 8] = [
        braid_relations,
        equivariance,
        preservation,
        invariant_under_braids,
        invariant_under_conjugation,
        stabilize_keeps_invariant,
        clifford_relations,
        identity_factorizations,
    ];
    suites.iter().enumerate().map(|(k, f)| f(seed.wrapping_add(k as u64))).collect()
}
