//! Admissible tuples, their genus, shape, and the numeric moduli conditions.
//!
//! A tuple `(σ_1, …, σ_r)` in `S_n` is admissible when no entry is the
//! identity, the left-to-right product is the identity, and the entries
//! generate a transitive group. The genus of the covering curve follows
//! from Riemann–Hurwitz: `2g − 2 = −2n + Σ ind(σ_i)`.

use std::fmt;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{self, orbit_partition, parse_perm, Perm, PermError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TupleError {
    #[error("entry {0} is the identity")]
    IdentityEntry(usize),
    #[error("product of entries is {0}, not the identity")]
    ProductNotIdentity(Perm),
    #[error("entries generate an intransitive group with orbits {0:?}")]
    NotTransitive(Vec<Vec<usize>>),
    #[error("empty tuple")]
    Empty,
    #[error("degree must be at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("bad tuple record: {0}")]
    Record(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Shape {
    Transpositions,
    DoubleTranspositions,
    ThreeCycles,
    Mixed,
}

/// A validated admissible tuple.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NielsenTuple {
    degree: usize,
    entries: Vec<Perm>,
    genus: u32,
    shape: Shape,
}

impl std::fmt::Debug for NielsenTuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "S{}{:?}", self.degree, self.entries)
    }
}

/// Genus from Riemann–Hurwitz, given the degree and the entry indices.
/// Panics when the data cannot come from an admissible tuple (odd or
/// negative `2g`), since that is a caller error.
pub fn riemann_hurwitz_genus(degree: usize, index_sum: usize) -> u32 {
    let twice = index_sum as i64 - 2 * degree as i64 + 2;
    assert!(twice >= 0, "negative genus from Riemann-Hurwitz: 2g = {twice}");
    assert!(twice % 2 == 0, "odd 2g from Riemann-Hurwitz: {twice}");
    (twice / 2) as u32
}

fn shape_of_entries(entries: &[Perm]) -> Shape {
    let structures: Vec<_> = entries.iter().map(Perm::cycle_structure).collect();
    if structures.iter().all(|c| c.is_transposition()) {
        Shape::Transpositions
    } else if structures.iter().all(|c| c.is_double_transposition()) {
        Shape::DoubleTranspositions
    } else if structures.iter().all(|c| c.is_three_cycle()) {
        Shape::ThreeCycles
    } else {
        Shape::Mixed
    }
}

/// Validates `perms` as an admissible tuple of the given degree.
pub fn make_tuple(perms: Vec<Perm>, degree: usize) -> Result<NielsenTuple, TupleError> {
    if degree < 2 {
        return Err(TupleError::DegreeTooSmall(degree));
    }
    if perms.is_empty() {
        return Err(TupleError::Empty);
    }
    for p in &perms {
        if p.degree() != degree {
            return Err(PermError::DegreeMismatch(degree, p.degree()).into());
        }
    }
    if let Some(i) = perms.iter().position(Perm::is_identity) {
        return Err(TupleError::IdentityEntry(i + 1));
    }
    let prod = perm::product(&perms).expect("nonempty");
    if !prod.is_identity() {
        return Err(TupleError::ProductNotIdentity(prod));
    }
    let orbits = orbit_partition(&perms, degree);
    if orbits.len() != 1 {
        return Err(TupleError::NotTransitive(orbits));
    }
    let index_sum = perms.iter().map(|p| p.cycle_structure().index).sum();
    let genus = riemann_hurwitz_genus(degree, index_sum);
    let shape = shape_of_entries(&perms);
    Ok(NielsenTuple { degree, entries: perms, genus, shape })
}

impl fmt::Display for NielsenTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(Perm::to_cycle_string).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl NielsenTuple {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Perm] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Perm> {
        self.entries
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// Componentwise conjugation `σ_i ↦ π⁻¹ σ_i π`.
    pub fn conjugate(&self, by: &Perm) -> Result<NielsenTuple, TupleError> {
        if by.degree() != self.degree {
            return Err(PermError::DegreeMismatch(self.degree, by.degree()).into());
        }
        Ok(NielsenTuple {
            degree: self.degree,
            entries: self.entries.iter().map(|e| e.conj(by)).collect(),
            genus: self.genus,
            shape: self.shape,
        })
    }

    /// Rebuilds a tuple from entries known to satisfy the invariants of
    /// `self` (same degree, product, generated group up to conjugacy).
    pub(crate) fn with_entries_unchecked(&self, entries: Vec<Perm>) -> NielsenTuple {
        debug_assert!(make_tuple(entries.clone(), self.degree).is_ok());
        NielsenTuple {
            degree: self.degree,
            shape: shape_of_entries(&entries),
            entries,
            genus: self.genus,
        }
    }

    pub fn moduli_check(&self) -> ModuliCheck {
        moduli_necessary(self)
    }

    pub fn to_record(&self) -> TupleRecord {
        TupleRecord::from_perms(self.degree, &self.entries)
    }
}

pub fn genus(t: &NielsenTuple) -> u32 {
    t.genus
}

pub fn shape_of(t: &NielsenTuple) -> Shape {
    t.shape
}

/// `dim M_g` as used by the necessary conditions.
pub fn moduli_dimension(g: u32) -> i64 {
    match g {
        0 => 0,
        1 => 1,
        g => 3 * g as i64 - 3,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ModuliCheck {
    pub r: usize,
    pub g: u32,
    pub dim_moduli: i64,
    /// `r − 3 ≥ dim M_g`.
    pub necessary_ok: bool,
    /// `r − 3 > dim M_g`.
    pub strict: bool,
    /// `g < 2` or `r ≥ 3g`.
    pub zariski_ok: bool,
}

pub fn moduli_necessary(t: &NielsenTuple) -> ModuliCheck {
    moduli_check_for(t.len(), t.genus())
}

pub fn moduli_check_for(r: usize, g: u32) -> ModuliCheck {
    let dim = moduli_dimension(g);
    let slack = r as i64 - 3;
    ModuliCheck {
        r,
        g,
        dim_moduli: dim,
        necessary_ok: slack >= dim,
        strict: slack > dim,
        zariski_ok: g < 2 || r as i64 >= 3 * g as i64,
    }
}

/// One line of the tuple file format: `{"n": 4, "perms": ["(1,2)(3,4)", …]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleRecord {
    pub n: usize,
    pub perms: Vec<String>,
}

impl TupleRecord {
    pub fn from_perms(n: usize, perms: &[Perm]) -> TupleRecord {
        TupleRecord { n, perms: perms.iter().map(Perm::to_cycle_string).collect() }
    }

    pub fn to_perms(&self) -> Result<Vec<Perm>, TupleError> {
        self.perms
            .iter()
            .map(|s| parse_perm(s, self.n).map_err(TupleError::from))
            .collect()
    }

    pub fn to_tuple(&self) -> Result<NielsenTuple, TupleError> {
        make_tuple(self.to_perms()?, self.n)
    }

    /// Canonical single-line JSON, with entries in canonical cycle notation.
    pub fn to_line(&self) -> Result<String, TupleError> {
        let canonical = TupleRecord::from_perms(self.n, &self.to_perms()?);
        serde_json::to_string(&canonical).map_err(|e| TupleError::Record(e.to_string()))
    }

    pub fn from_line(line: &str) -> Result<TupleRecord, TupleError> {
        serde_json::from_str(line).map_err(|e| TupleError::Record(e.to_string()))
    }
}

pub fn read_records<R: BufRead>(reader: R) -> Result<Vec<TupleRecord>, TupleError> {
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line.map_err(|e| TupleError::Record(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(TupleRecord::from_line(&line)?);
    }
    Ok(out)
}

pub fn write_records<W: Write>(mut writer: W, records: &[TupleRecord]) -> Result<(), TupleError> {
    for rec in records {
        writeln!(writer, "{}", rec.to_line()?).map_err(|e| TupleError::Record(e.to_string()))?;
    }
    Ok(())
}
