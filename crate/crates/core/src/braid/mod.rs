//! The braid action on tuples and the decomposition of Nielsen classes
//! into braid orbits.
//!
//! Orbits are taken together with componentwise conjugation, so the engine
//! works on conjugation-canonical forms: braid moves commute with
//! conjugation, hence they act on the canonical forms directly.

mod canon;
mod orbits;
mod sym;
mod table;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::nielsen::{NielsenTuple, TupleError};
use crate::perm::{GroupKind, Perm, PermError};
use crate::spin::{LiftingInvariant, SpinError};

pub use table::count_ambient_tuples;

pub const DEFAULT_CANON_LIMIT: usize = 9;
pub const DEFAULT_MEMORY_CAP: u64 = 2 << 30;
pub const DEFAULT_CANDIDATE_CAP: u128 = 20_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("move index {i} out of range 1..={max}")]
    IndexOutOfRange { i: usize, max: usize },
    #[error("degree {degree} exceeds the canonicalization limit {limit}")]
    DegreeAboveLimit { degree: usize, limit: usize },
    #[error("memory cap exceeded: {forms} forms, about {bytes} bytes (cap {cap})")]
    MemoryCap { forms: usize, bytes: u64, cap: u64 },
    #[error("estimated {estimate} candidates exceeds the cap {cap}")]
    CandidateCap { estimate: u128, cap: u128 },
    #[error("invalid class: {0}")]
    InvalidSpec(String),
    #[error("ambient group of order {0} is too large for table mode (at most 255)")]
    AmbientTooLarge(u128),
    #[error("class is not closed under braid moves: {0}")]
    NotClosed(String),
    #[error("lifting invariant is not constant on an orbit")]
    InvariantNotConstant,
    #[error("thread pool: {0}")]
    Pool(String),
    #[error(transparent)]
    Tuple(#[from] TupleError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Spin(#[from] SpinError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    Forward,
    Inverse,
}

/// `Q_i` (1-based): forward sends `(g_i, g_{i+1})` to
/// `(g_{i+1}, g_{i+1}⁻¹ g_i g_{i+1})`, inverse to `(g_i g_{i+1} g_i⁻¹, g_i)`.
pub fn braid_move(t: &NielsenTuple, i: usize, direction: Direction) -> Result<NielsenTuple, BraidError> {
    let r = t.len();
    if i == 0 || i >= r {
        return Err(BraidError::IndexOutOfRange { i, max: r.saturating_sub(1) });
    }
    let mut entries = t.entries().to_vec();
    let (a, b) = (entries[i - 1].clone(), entries[i].clone());
    match direction {
        Direction::Forward => {
            entries[i] = a.conj(&b);
            entries[i - 1] = b;
        }
        Direction::Inverse => {
            entries[i - 1] = b.conj(&a.inverse());
            entries[i] = a;
        }
    }
    Ok(t.with_entries_unchecked(entries))
}

/// Applies a braid word: positive `k` is `Q_k`, negative `k` is `Q_{|k|}⁻¹`.
pub fn apply_word(t: &NielsenTuple, word: &[i32]) -> Result<NielsenTuple, BraidError> {
    let mut cur = t.clone();
    for &k in word {
        let dir = if k > 0 { Direction::Forward } else { Direction::Inverse };
        cur = braid_move(&cur, k.unsigned_abs() as usize, dir)?;
    }
    Ok(cur)
}

pub(crate) fn encode(entries: &[Perm]) -> Vec<u8> {
    entries.iter().flat_map(|p| p.raw().iter().map(|&x| x as u8)).collect()
}

pub(crate) fn decode(code: &[u8], n: usize) -> Vec<Perm> {
    code.chunks_exact(n).map(Perm::from_bytes).collect()
}

/// Lexicographically least componentwise conjugate of `t` under `S_n`,
/// comparing concatenated image sequences.
pub fn canonical_form(t: &NielsenTuple) -> Result<NielsenTuple, BraidError> {
    canonical_form_with_limit(t, DEFAULT_CANON_LIMIT)
}

pub fn canonical_form_with_limit(t: &NielsenTuple, limit: usize) -> Result<NielsenTuple, BraidError> {
    let n = t.degree();
    if n > limit || n >= u8::MAX as usize {
        return Err(BraidError::DegreeAboveLimit { degree: n, limit });
    }
    let (code, _) = canon::canonicalize(&encode(t.entries()), n);
    Ok(t.with_entries_unchecked(decode(&code, n)))
}

/// [`canonical_form`] for an arbitrary list of permutations of one degree.
pub fn canonical_entries(entries: &[Perm]) -> Result<Vec<Perm>, BraidError> {
    let n = entries.first().ok_or(TupleError::Empty)?.degree();
    if let Some(e) = entries.iter().find(|e| e.degree() != n) {
        return Err(PermError::DegreeMismatch(n, e.degree()).into());
    }
    if n > DEFAULT_CANON_LIMIT {
        return Err(BraidError::DegreeAboveLimit { degree: n, limit: DEFAULT_CANON_LIMIT });
    }
    Ok(decode(&canon::canonicalize(&encode(entries), n).0, n))
}

/// Order of the centralizer of the tuple in `S_n`.
pub fn centralizer_order(t: &NielsenTuple) -> Result<u64, BraidError> {
    let n = t.degree();
    if n > DEFAULT_CANON_LIMIT {
        return Err(BraidError::DegreeAboveLimit { degree: n, limit: DEFAULT_CANON_LIMIT });
    }
    Ok(canon::canonicalize(&encode(t.entries()), n).1)
}

/// Cycle types allowed for the entries. `Multiset` fixes the multiset of
/// entry cycle types, which is what braid moves preserve.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum EntryClasses {
    Uniform(Vec<usize>),
    Multiset(Vec<Vec<usize>>),
}

impl EntryClasses {
    /// Distinct cycle types (sorted lengths) and how many entries use each.
    pub(crate) fn type_counts(&self, r: usize) -> Vec<(Vec<usize>, usize)> {
        let norm = |t: &Vec<usize>| {
            let mut t = t.clone();
            t.sort_unstable();
            t
        };
        match self {
            EntryClasses::Uniform(t) => vec![(norm(t), r)],
            EntryClasses::Multiset(list) => {
                let mut sorted: Vec<Vec<usize>> = list.iter().map(norm).collect();
                sorted.sort();
                let mut out: Vec<(Vec<usize>, usize)> = Vec::new();
                for t in sorted {
                    match out.last_mut() {
                        Some((last, c)) if *last == t => *c += 1,
                        _ => out.push((t, 1)),
                    }
                }
                out
            }
        }
    }

    fn describe(&self) -> Vec<String> {
        let one = |t: &Vec<usize>| t.iter().map(usize::to_string).collect::<Vec<_>>().join("+");
        match self {
            EntryClasses::Uniform(t) => vec![one(t)],
            EntryClasses::Multiset(list) => list.iter().map(one).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum GroupFilter {
    /// Any transitive group (admissibility only).
    Transitive,
    /// The generated group must have this kind.
    Kind(GroupKind),
}

impl GroupFilter {
    pub fn name(self) -> &'static str {
        match self {
            GroupFilter::Transitive => "transitive",
            GroupFilter::Kind(k) => k.name(),
        }
    }
}

/// A fixed finite group the entries are drawn from. Tuples of an ambient
/// class must generate the whole group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ambient {
    pub name: String,
    pub generators: Vec<Perm>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Conjugation {
    /// Conjugation by all of `S_n`.
    Full,
    /// Conjugation by the group the tuple generates only.
    Inner,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassSpec {
    pub degree: usize,
    pub length: usize,
    pub entry_classes: EntryClasses,
    pub product: Perm,
    pub group_filter: GroupFilter,
    pub ambient: Option<Ambient>,
    pub conjugation: Conjugation,
}

impl ClassSpec {
    pub fn new(degree: usize, length: usize, entry_classes: EntryClasses) -> ClassSpec {
        ClassSpec {
            degree,
            length,
            entry_classes,
            product: Perm::identity(degree.max(1)),
            group_filter: GroupFilter::Transitive,
            ambient: None,
            conjugation: Conjugation::Full,
        }
    }

    pub fn transpositions(n: usize, r: usize) -> ClassSpec {
        ClassSpec::new(n, r, EntryClasses::Uniform(vec![2]))
    }

    pub fn three_cycles(n: usize, r: usize) -> ClassSpec {
        ClassSpec::new(n, r, EntryClasses::Uniform(vec![3]))
    }

    pub fn double_transpositions(n: usize, r: usize) -> ClassSpec {
        ClassSpec::new(n, r, EntryClasses::Uniform(vec![2, 2]))
    }

    pub fn with_product(mut self, product: Perm) -> ClassSpec {
        self.product = product;
        self
    }

    pub fn with_filter(mut self, filter: GroupFilter) -> ClassSpec {
        self.group_filter = filter;
        self
    }

    pub fn with_ambient(mut self, name: &str, generators: Vec<Perm>) -> ClassSpec {
        self.ambient = Some(Ambient { name: name.to_string(), generators });
        self
    }

    pub fn with_conjugation(mut self, conjugation: Conjugation) -> ClassSpec {
        self.conjugation = conjugation;
        self
    }

    fn validate(&self, limit: usize) -> Result<(), BraidError> {
        let bad = |m: String| Err(BraidError::InvalidSpec(m));
        if self.degree < 2 {
            return bad(format!("degree {} below 2", self.degree));
        }
        if self.degree > limit {
            return Err(BraidError::DegreeAboveLimit { degree: self.degree, limit });
        }
        if self.length < 2 {
            return bad(format!("length {} below 2", self.length));
        }
        if self.product.degree() != self.degree {
            return bad("product has the wrong degree".into());
        }
        if let EntryClasses::Multiset(list) = &self.entry_classes {
            if list.len() != self.length {
                return bad(format!("{} entry classes for length {}", list.len(), self.length));
            }
        }
        for (t, _) in self.entry_classes.type_counts(self.length) {
            if t.is_empty() || t.iter().any(|&l| l < 2) || t.iter().sum::<usize>() > self.degree {
                return bad(format!("cycle type {t:?} impossible in degree {}", self.degree));
            }
        }
        if let Some(a) = &self.ambient {
            if a.generators.is_empty() || a.generators.iter().any(|g| g.degree() != self.degree) {
                return bad("ambient generators missing or of the wrong degree".into());
            }
            if self.conjugation == Conjugation::Inner {
                return bad("inner conjugation is not supported with an ambient group".into());
            }
        }
        if self.length > 16 && self.ambient.is_some() {
            return bad("ambient classes support length at most 16".into());
        }
        Ok(())
    }

    pub fn echo(&self) -> SpecEcho {
        SpecEcho {
            degree: self.degree,
            length: self.length,
            entry_classes: self.entry_classes.describe(),
            product: self.product.to_cycle_string(),
            group_filter: self.group_filter.name().to_string(),
            ambient: self.ambient.as_ref().map(|a| a.name.clone()),
            conjugation: self.conjugation,
        }
    }
}

/// Serialized form of a [`ClassSpec`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecEcho {
    pub degree: usize,
    pub length: usize,
    pub entry_classes: Vec<String>,
    pub product: String,
    pub group_filter: String,
    pub ambient: Option<String>,
    pub conjugation: Conjugation,
}

#[derive(Debug, Clone)]
pub struct BraidConfig {
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    pub memory_cap: u64,
    pub candidate_cap: u128,
    pub canon_limit: usize,
}

impl Default for BraidConfig {
    fn default() -> Self {
        BraidConfig {
            workers: None,
            memory_cap: DEFAULT_MEMORY_CAP,
            candidate_cap: DEFAULT_CANDIDATE_CAP,
            canon_limit: DEFAULT_CANON_LIMIT,
        }
    }
}

impl BraidConfig {
    pub fn with_workers(workers: usize) -> BraidConfig {
        BraidConfig { workers: Some(workers), ..BraidConfig::default() }
    }

    pub(crate) fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T, BraidError> {
        match self.workers {
            None => Ok(f()),
            Some(w) => rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map(|pool| pool.install(f))
                .map_err(|e| BraidError::Pool(e.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EnumerationMode {
    Exhaustive,
    SeededBFS,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitSummary {
    pub representative: Vec<String>,
    pub size: u64,
    pub lifting_invariant: Option<LiftingInvariant>,
    #[serde(skip)]
    pub entries: Vec<Perm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraidOrbitReport {
    pub spec: SpecEcho,
    pub orbit_count: usize,
    pub orbits: Vec<OrbitSummary>,
    pub total_class_size: u64,
    pub enumeration_mode: EnumerationMode,
}

impl fmt::Display for BraidOrbitReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} orbit(s), {} canonical form(s) [{:?}]",
            self.orbit_count, self.total_class_size, self.enumeration_mode
        )?;
        for o in &self.orbits {
            let inv = o.lifting_invariant.map(|v| format!(", invariant {v}")).unwrap_or_default();
            writeln!(f, "  size {}{}: {}", o.size, inv, o.representative.join(" "))?;
        }
        Ok(())
    }
}

/// Canonical forms of a class, sorted, and the number of raw tuples they
/// stand for.
#[derive(Debug, Clone)]
pub struct ClassEnumeration {
    /// Entry lists; their product is conjugate to the prescribed one.
    pub forms: Vec<Vec<Perm>>,
    /// Tuples with product exactly the prescribed one, before identifying
    /// conjugates.
    pub tuple_count: u128,
}

pub fn enumerate_class(spec: &ClassSpec, config: &BraidConfig) -> Result<ClassEnumeration, BraidError> {
    spec.validate(config.canon_limit)?;
    let n = spec.degree;
    config.run(|| match &spec.ambient {
        Some(_) => {
            let engine = table::TableEngine::new(spec)?;
            let (forms, count) = engine.enumerate(config)?;
            let forms = forms.iter().map(|c| engine.decode(*c)).collect();
            Ok(ClassEnumeration { forms, tuple_count: count })
        }
        None => {
            let engine = sym::SymEngine::new(spec);
            let (forms, count) = engine.enumerate(config)?;
            let forms = forms.iter().map(|c| decode(c, n)).collect();
            Ok(ClassEnumeration { forms, tuple_count: count })
        }
    })?
}

pub fn orbit_decomposition(spec: &ClassSpec, config: &BraidConfig) -> Result<BraidOrbitReport, BraidError> {
    spec.validate(config.canon_limit)?;
    config.run(|| match &spec.ambient {
        Some(_) => {
            let engine = table::TableEngine::new(spec)?;
            let (forms, _) = engine.enumerate(config)?;
            orbits::decompose(&engine, spec, forms, config)
        }
        None => {
            let engine = sym::SymEngine::new(spec);
            let (forms, _) = engine.enumerate(config)?;
            orbits::decompose(&engine, spec, forms, config)
        }
    })?
}

/// The braid orbit of a single tuple, explored by breadth-first search on
/// canonical forms.
pub fn orbit_of(t: &NielsenTuple, conjugation: Conjugation, config: &BraidConfig) -> Result<BraidOrbitReport, BraidError> {
    let spec = spec_of(t, conjugation);
    spec.validate(config.canon_limit)?;
    let engine = sym::SymEngine::new(&spec);
    config.run(|| orbits::seeded(&engine, &spec, engine.code_of(t), config))?
}

/// Seeded orbit inside an ambient group containing every entry of `t`.
pub fn orbit_of_in(t: &NielsenTuple, ambient: &Ambient, config: &BraidConfig) -> Result<BraidOrbitReport, BraidError> {
    let spec = spec_of(t, Conjugation::Full).with_ambient(&ambient.name, ambient.generators.clone());
    spec.validate(config.canon_limit)?;
    let engine = table::TableEngine::new(&spec)?;
    let code = engine.code_of(t.entries())?;
    config.run(|| orbits::seeded(&engine, &spec, code, config))?
}

/// All canonical forms in the orbit of `t`, sorted.
pub fn orbit_members(t: &NielsenTuple, config: &BraidConfig) -> Result<Vec<NielsenTuple>, BraidError> {
    let spec = spec_of(t, Conjugation::Full);
    spec.validate(config.canon_limit)?;
    let engine = sym::SymEngine::new(&spec);
    let codes = config.run(|| orbits::bfs(&engine, vec![engine.code_of(t)], config))??;
    let n = t.degree();
    Ok(codes.into_iter().map(|c| t.with_entries_unchecked(decode(&c, n))).collect())
}

/// Whether `b` lies in the braid orbit of `a` (with conjugation).
pub fn same_orbit(a: &NielsenTuple, b: &NielsenTuple, config: &BraidConfig) -> Result<bool, BraidError> {
    if a.degree() != b.degree() || a.len() != b.len() {
        return Ok(false);
    }
    let class_multiset = |t: &NielsenTuple| {
        let mut v: Vec<Vec<usize>> = t.entries().iter().map(|e| e.cycle_structure().cycle_lengths).collect();
        v.sort();
        v
    };
    if class_multiset(a) != class_multiset(b) {
        return Ok(false);
    }
    let spec = spec_of(a, Conjugation::Full);
    spec.validate(config.canon_limit)?;
    let engine = sym::SymEngine::new(&spec);
    config.run(|| orbits::meet(&engine, engine.code_of(a), engine.code_of(b), config))?
}

fn spec_of(t: &NielsenTuple, conjugation: Conjugation) -> ClassSpec {
    let types = t.entries().iter().map(|e| e.cycle_structure().cycle_lengths).collect();
    ClassSpec::new(t.degree(), t.len(), EntryClasses::Multiset(types)).with_conjugation(conjugation)
}

pub(crate) fn shape_has_invariant(spec: &ClassSpec) -> bool {
    spec.degree >= 4
        && spec.product.is_identity()
        && spec.entry_classes.type_counts(spec.length).iter().all(|(t, _)| t == &[3])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nielsen::make_tuple;
    use crate::perm::parse_perm;

    fn tuple(cycles: &[&str], n: usize) -> NielsenTuple {
        make_tuple(cycles.iter().map(|c| parse_perm(c, n).unwrap()).collect(), n).unwrap()
    }

    #[test]
    fn moves_invert_each_other() {
        let t = tuple(&["(1,2)", "(2,3)", "(2,3)", "(1,2)"], 3);
        for i in 1..4 {
            let f = braid_move(&t, i, Direction::Forward).unwrap();
            assert_eq!(braid_move(&f, i, Direction::Inverse).unwrap(), t);
            let b = braid_move(&t, i, Direction::Inverse).unwrap();
            assert_eq!(braid_move(&b, i, Direction::Forward).unwrap(), t);
        }
        assert!(braid_move(&t, 0, Direction::Forward).is_err());
        assert!(braid_move(&t, 4, Direction::Forward).is_err());
    }

    #[test]
    fn forward_move_formula() {
        let t = tuple(&["(1,2)", "(2,3)", "(2,3)", "(1,2)"], 3);
        let f = braid_move(&t, 1, Direction::Forward).unwrap();
        assert_eq!(f.entries()[0].to_cycle_string(), "(2,3)");
        // (2,3)⁻¹ (1,2) (2,3) = (1,3)
        assert_eq!(f.entries()[1].to_cycle_string(), "(1,3)");
        let b = braid_move(&t, 1, Direction::Inverse).unwrap();
        assert_eq!(b.entries()[0].to_cycle_string(), "(1,3)");
        assert_eq!(b.entries()[1].to_cycle_string(), "(1,2)");
    }

    #[test]
    fn equal_pair_is_fixed() {
        let t = tuple(&["(1,2)", "(1,2)"], 2);
        assert_eq!(braid_move(&t, 1, Direction::Forward).unwrap(), t);
        assert_eq!(braid_move(&t, 1, Direction::Inverse).unwrap(), t);
    }

    #[test]
    fn canonical_of_transposition_pair() {
        let pair = |s: &str| vec![parse_perm(s, 3).unwrap(), parse_perm(s, 3).unwrap()];
        let least = canonical_entries(&pair("(2,3)")).unwrap();
        assert_eq!(least, pair("(2,3)"));
        assert_eq!(canonical_entries(&pair("(1,2)")).unwrap(), least);
        assert_eq!(canonical_entries(&pair("(1,3)")).unwrap(), least);
    }

    fn brute_force_count(n: usize, r: usize, cycle_type: &[usize]) -> u128 {
        let class = crate::perm::conjugacy_class(n, cycle_type).unwrap();
        let mut count = 0;
        let mut idx = vec![0usize; r];
        loop {
            let entries: Vec<Perm> = idx.iter().map(|&i| class[i].clone()).collect();
            if make_tuple(entries, n).is_ok() {
                count += 1;
            }
            let mut k = 0;
            while k < r && idx[k] + 1 == class.len() {
                idx[k] = 0;
                k += 1;
            }
            if k == r {
                return count;
            }
            idx[k] += 1;
        }
    }

    #[test]
    fn class_counts_match_brute_force() {
        let cfg = BraidConfig::default();
        for (n, r, ty) in [(3, 4, vec![2]), (4, 4, vec![2]), (4, 3, vec![2, 2]), (5, 4, vec![3]), (4, 4, vec![3])] {
            let spec = ClassSpec::new(n, r, EntryClasses::Uniform(ty.clone()));
            let e = enumerate_class(&spec, &cfg).unwrap();
            assert_eq!(e.tuple_count, brute_force_count(n, r, &ty), "n={n} r={r} {ty:?}");
        }
    }

    #[test]
    fn a4_triple_is_in_its_class() {
        let spec = ClassSpec::double_transpositions(4, 3);
        let e = enumerate_class(&spec, &BraidConfig::default()).unwrap();
        let t = tuple(&["(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"], 4);
        let c = canonical_form(&t).unwrap();
        assert!(e.forms.iter().any(|f| f.as_slice() == c.entries()));
    }

    #[test]
    fn small_orbit_counts() {
        let cfg = BraidConfig::default();
        let clebsch = orbit_decomposition(&ClassSpec::transpositions(3, 4), &cfg).unwrap();
        assert_eq!(clebsch.orbit_count, 1);
        let tc50 = orbit_decomposition(&ClassSpec::three_cycles(5, 4), &cfg).unwrap();
        assert_eq!(tc50.orbit_count, 1);
        assert_eq!(tc50.orbits[0].lifting_invariant, Some(LiftingInvariant::Plus));
        let tc51 = orbit_decomposition(&ClassSpec::three_cycles(5, 5), &cfg).unwrap();
        assert_eq!(tc51.orbit_count, 2);
        let invs: Vec<_> = tc51.orbits.iter().map(|o| o.lifting_invariant.unwrap()).collect();
        assert!(invs.contains(&LiftingInvariant::Plus) && invs.contains(&LiftingInvariant::Minus));
        assert_eq!(tc51.orbits.iter().map(|o| o.size).sum::<u64>(), tc51.total_class_size);
    }

    #[test]
    fn seeded_orbit_matches_decomposition() {
        let cfg = BraidConfig::default();
        let full = orbit_decomposition(&ClassSpec::three_cycles(5, 5), &cfg).unwrap();
        for o in &full.orbits {
            let t = make_tuple(o.entries.clone(), 5).unwrap();
            let seeded = orbit_of(&t, Conjugation::Full, &cfg).unwrap();
            assert_eq!(seeded.orbits[0].size, o.size);
            assert_eq!(seeded.orbits[0].representative, o.representative);
            assert_eq!(seeded.orbits[0].lifting_invariant, o.lifting_invariant);
        }
        let a = make_tuple(full.orbits[0].entries.clone(), 5).unwrap();
        let b = make_tuple(full.orbits[1].entries.clone(), 5).unwrap();
        assert!(!same_orbit(&a, &b, &cfg).unwrap());
        let moved = apply_word(&a, &[1, 3, -2, 4, 4]).unwrap();
        let pi = parse_perm("(1,4,2)(3,5)", 5).unwrap();
        assert!(same_orbit(&a, &moved.conjugate(&pi).unwrap(), &cfg).unwrap());
    }

    #[test]
    fn worker_count_does_not_change_reports() {
        let spec = ClassSpec::three_cycles(5, 5);
        let one = orbit_decomposition(&spec, &BraidConfig::with_workers(1)).unwrap();
        let four = orbit_decomposition(&spec, &BraidConfig::with_workers(4)).unwrap();
        assert_eq!(serde_json::to_string(&one).unwrap(), serde_json::to_string(&four).unwrap());
    }

    #[test]
    fn inner_conjugation_refines_full() {
        let cfg = BraidConfig::default();
        let full = orbit_decomposition(&ClassSpec::three_cycles(5, 4), &cfg).unwrap();
        let inner = orbit_decomposition(&ClassSpec::three_cycles(5, 4).with_conjugation(Conjugation::Inner), &cfg).unwrap();
        assert!(inner.orbit_count >= full.orbit_count);
        let raw = enumerate_class(&ClassSpec::three_cycles(5, 4), &cfg).unwrap().tuple_count;
        let raw_inner = enumerate_class(&ClassSpec::three_cycles(5, 4).with_conjugation(Conjugation::Inner), &cfg)
            .unwrap()
            .tuple_count;
        assert_eq!(raw, raw_inner);
    }

    #[test]
    fn caps_are_errors() {
        let cfg = BraidConfig { candidate_cap: 10, ..BraidConfig::default() };
        assert!(matches!(
            orbit_decomposition(&ClassSpec::three_cycles(5, 5), &cfg),
            Err(BraidError::CandidateCap { .. })
        ));
        let cfg = BraidConfig { memory_cap: 100, ..BraidConfig::default() };
        assert!(matches!(
            orbit_decomposition(&ClassSpec::three_cycles(5, 5), &cfg),
            Err(BraidError::MemoryCap { .. })
        ));
        assert!(matches!(
            orbit_decomposition(&ClassSpec::three_cycles(10, 4), &BraidConfig::default()),
            Err(BraidError::DegreeAboveLimit { .. })
        ));
    }
}
