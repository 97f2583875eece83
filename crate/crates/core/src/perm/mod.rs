//! Permutations of `{1..n}` and the group queries built on them.
//!
//! Composition is left-to-right everywhere in this crate: `a.compose(&b)`
//! applies `a` first, then `b`. Points are 1-based in every public
//! signature; images are stored 0-based.

mod chain;
mod group;

use std::fmt;

use thiserror::Error;

pub use chain::StabChain;
pub(crate) use group::orbit_partition;
pub use group::{
    classify_group, group_order, point_stabilizer_action, transitivity_and_primitivity, GroupId,
    GroupKind, StabilizerAction, Transitivity,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("malformed cycle notation at byte {pos}: {msg}")]
    Malformed { pos: usize, msg: String },
    #[error("point {point} out of range 1..={degree}")]
    OutOfRange { point: usize, degree: usize },
    #[error("point {0} repeated")]
    RepeatedPoint(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("image list is not a bijection of 1..={0}")]
    NotBijection(usize),
    #[error("degree must be positive")]
    ZeroDegree,
    #[error("empty generator list")]
    NoGenerators,
    #[error("group is not transitive (orbits {0:?})")]
    Intransitive(Vec<Vec<usize>>),
}

/// A permutation of `{1..n}` with value semantics.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u32]>,
}

/// Cycle type with fixed points omitted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleStructure {
    pub degree: usize,
    /// Nontrivial cycle lengths, sorted ascending.
    pub cycle_lengths: Vec<usize>,
    /// `n - (number of cycles, counting fixed points)`.
    pub index: usize,
}

impl CycleStructure {
    pub fn fixed_points(&self) -> usize {
        self.degree - self.cycle_lengths.iter().sum::<usize>()
    }

    pub fn is_transposition(&self) -> bool {
        self.cycle_lengths == [2]
    }

    pub fn is_double_transposition(&self) -> bool {
        self.cycle_lengths == [2, 2]
    }

    pub fn is_three_cycle(&self) -> bool {
        self.cycle_lengths == [3]
    }
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from its 1-based image list.
    pub fn from_images(images: &[usize]) -> Result<Perm, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &im in images {
            if im == 0 || im > n || seen[im - 1] {
                return Err(PermError::NotBijection(n));
            }
            seen[im - 1] = true;
            out.push((im - 1) as u32);
        }
        Ok(Perm { images: out.into() })
    }

    /// Builds a permutation from 0-based images without validation.
    pub(crate) fn from_raw(images: Vec<u32>) -> Perm {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i as u32 == v)
        });
        Perm { images: images.into() }
    }

    pub(crate) fn from_bytes(images: &[u8]) -> Perm {
        Perm::from_raw(images.iter().map(|&x| x as u32).collect())
    }

    pub(crate) fn to_bytes(&self) -> Vec<u8> {
        self.images.iter().map(|&x| x as u8).collect()
    }

    /// Product of disjoint cycles given as 1-based point lists.
    pub fn from_cycles(cycles: &[&[usize]], degree: usize) -> Result<Perm, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &p in cycle.iter() {
                if p == 0 || p > degree {
                    return Err(PermError::OutOfRange { point: p, degree });
                }
                if used[p - 1] {
                    return Err(PermError::RepeatedPoint(p));
                }
                used[p - 1] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                images[p - 1] = (q - 1) as u32;
            }
        }
        Ok(Perm { images: images.into() })
    }

    pub fn transposition(a: usize, b: usize, degree: usize) -> Result<Perm, PermError> {
        Perm::from_cycles(&[&[a, b]], degree)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i as u32 == v)
    }

    /// Left-to-right product: the result maps `x` to `other(self(x))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    /// Unchecked left-to-right product for internal callers that already
    /// know the degrees agree.
    pub(crate) fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u32;
        }
        Perm { images: inv.into() }
    }

    /// `by⁻¹ · self · by`, i.e. the permutation mapping `by(x)` to `by(self(x))`.
    pub fn conjugate(&self, by: &Perm) -> Result<Perm, PermError> {
        if self.degree() != by.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), by.degree()));
        }
        Ok(self.conj(by))
    }

    pub(crate) fn conj(&self, by: &Perm) -> Perm {
        let mut out = vec![0u32; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            out[by.images[x] as usize] = by.images[y as usize];
        }
        Perm { images: out.into() }
    }

    /// Disjoint cycles of length at least two, in canonical order: sorted
    /// by least point, each starting at its least point. 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut x = self.images[start] as usize;
            while x != start {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn cycle_structure(&self) -> CycleStructure {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        lengths.sort_unstable();
        let index = lengths.iter().map(|l| l - 1).sum();
        CycleStructure { degree: self.degree(), cycle_lengths: lengths, index }
    }

    pub fn is_even(&self) -> bool {
        self.cycle_structure().index.is_multiple_of(2)
    }

    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }

    /// Reads the permutation in a larger symmetric group, fixing the new points.
    pub fn extend(&self, degree: usize) -> Perm {
        assert!(degree >= self.degree());
        let mut images = self.images.to_vec();
        images.extend(self.degree() as u32..degree as u32);
        Perm { images: images.into() }
    }

    /// Canonical cycle notation, `"id"` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "id".to_string();
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            let parts: Vec<String> = c.iter().map(usize::to_string).collect();
            s.push_str(&parts.join(","));
            s.push(')');
        }
        s
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.to_cycle_string(), self.degree())
    }
}

/// Parses cycle notation: `"id"` or one or more disjoint cycles such as
/// `"(1,2)(3,4)"`. Whitespace between tokens is ignored.
pub fn parse_perm(text: &str, degree: usize) -> Result<Perm, PermError> {
    if degree == 0 {
        return Err(PermError::ZeroDegree);
    }
    let trimmed = text.trim();
    if trimmed == "id" {
        return Ok(Perm::identity(degree));
    }
    let bytes = text.as_bytes();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let malformed = |pos: usize, msg: &str| PermError::Malformed { pos, msg: msg.to_string() };

    let mut cycles: Vec<Vec<usize>> = Vec::new();
    skip_ws(&mut pos);
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(malformed(pos, "expected '('"));
        }
        pos += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut pos);
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(malformed(pos, "expected a point"));
            }
            let point: usize = text[start..pos]
                .parse()
                .map_err(|_| malformed(start, "point too large"))?;
            cycle.push(point);
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b')') => {
                    pos += 1;
                    break;
                }
                _ => return Err(malformed(pos, "expected ',' or ')'")),
            }
        }
        if cycle.len() < 2 {
            return Err(malformed(pos, "a cycle needs at least two points"));
        }
        cycles.push(cycle);
        skip_ws(&mut pos);
    }
    if cycles.is_empty() {
        return Err(malformed(0, "empty permutation"));
    }
    let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
    Perm::from_cycles(&refs, degree)
}

pub fn format_perm(p: &Perm) -> String {
    p.to_cycle_string()
}

/// Left-to-right product of a nonempty list of permutations of equal degree.
pub fn product<'a, I>(perms: I) -> Option<Perm>
where
    I: IntoIterator<Item = &'a Perm>,
{
    let mut iter = perms.into_iter();
    let first = iter.next()?.clone();
    Some(iter.fold(first, |acc, p| acc.then(p)))
}

/// All permutations of `{1..degree}` whose nontrivial cycle lengths are
/// `cycle_lengths` (any order), sorted.
pub fn conjugacy_class(degree: usize, cycle_lengths: &[usize]) -> Result<Vec<Perm>, PermError> {
    if degree == 0 {
        return Err(PermError::ZeroDegree);
    }
    let mut lengths: Vec<usize> = cycle_lengths.to_vec();
    if lengths.iter().any(|&l| l < 2) || lengths.iter().sum::<usize>() > degree {
        return Err(PermError::Malformed { pos: 0, msg: format!("bad cycle type {cycle_lengths:?}") });
    }
    lengths.sort_unstable();
    let mut out = Vec::new();
    let mut images: Vec<u32> = (0..degree as u32).collect();
    let mut used = vec![false; degree];
    let fixed = degree - lengths.iter().sum::<usize>();
    class_rec(&mut images, &mut used, &mut lengths, fixed, &mut out);
    out.sort();
    Ok(out)
}

// Settles the least unused point: either fixed, or the minimum of a new
// cycle whose other points are an ordered choice of unused points.
fn class_rec(images: &mut [u32], used: &mut [bool], lengths: &mut Vec<usize>, fixed: usize, out: &mut Vec<Perm>) {
    let Some(start) = used.iter().position(|&u| !u) else {
        out.push(Perm::from_raw(images.to_vec()));
        return;
    };
    if fixed > 0 {
        used[start] = true;
        images[start] = start as u32;
        class_rec(images, used, lengths, fixed - 1, out);
        used[start] = false;
    }
    let mut distinct = lengths.clone();
    distinct.dedup();
    for len in distinct {
        let k = lengths.iter().position(|&l| l == len).unwrap();
        lengths.remove(k);
        used[start] = true;
        let mut cycle = vec![start];
        extend_cycle(images, used, lengths, fixed, len, &mut cycle, out);
        used[start] = false;
        lengths.insert(k, len);
    }
}

fn extend_cycle(
    images: &mut [u32],
    used: &mut [bool],
    lengths: &mut Vec<usize>,
    fixed: usize,
    len: usize,
    cycle: &mut Vec<usize>,
    out: &mut Vec<Perm>,
) {
    if cycle.len() == len {
        for w in 0..len {
            images[cycle[w]] = cycle[(w + 1) % len] as u32;
        }
        class_rec(images, used, lengths, fixed, out);
        return;
    }
    for x in 0..used.len() {
        if !used[x] {
            used[x] = true;
            cycle.push(x);
            extend_cycle(images, used, lengths, fixed, len, cycle, out);
            cycle.pop();
            used[x] = false;
        }
    }
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Perm {
        parse_perm(s, n).unwrap()
    }

    #[test]
    fn class_sizes() {
        assert_eq!(conjugacy_class(4, &[2, 2]).unwrap().len(), 3);
        assert_eq!(conjugacy_class(6, &[2, 2]).unwrap().len(), 45);
        assert_eq!(conjugacy_class(7, &[3]).unwrap().len(), 70);
        assert_eq!(conjugacy_class(6, &[3, 2]).unwrap().len(), 120);
        assert_eq!(conjugacy_class(6, &[3, 3]).unwrap().len(), 40);
        assert_eq!(conjugacy_class(5, &[]).unwrap(), vec![Perm::identity(5)]);
        let c = conjugacy_class(6, &[2, 2, 2]).unwrap();
        assert_eq!(c.len(), 15);
        assert!(c.windows(2).all(|w| w[0] < w[1]));
        assert!(c.iter().all(|x| x.cycle_structure().cycle_lengths == [2, 2, 2]));
    }

    #[test]
    fn parse_examples() {
        let a = p("(1,2)(3,4)", 5);
        assert_eq!(a.images(), vec![2, 1, 4, 3, 5]);
        assert!(p("id", 4).is_identity());
        assert_eq!(p("(1,2,3)", 3).images(), vec![2, 3, 1]);
        assert_eq!(p(" (1, 2) ( 3,4 ) ", 4), p("(1,2)(3,4)", 4));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_perm("(1,2", 3), Err(PermError::Malformed { .. })));
        assert!(matches!(parse_perm("(1)", 3), Err(PermError::Malformed { .. })));
        assert!(matches!(parse_perm("", 3), Err(PermError::Malformed { .. })));
        assert!(matches!(parse_perm("1,2", 3), Err(PermError::Malformed { .. })));
        assert!(matches!(parse_perm("(1,x)", 3), Err(PermError::Malformed { .. })));
        assert_eq!(
            parse_perm("(1,4)", 3),
            Err(PermError::OutOfRange { point: 4, degree: 3 })
        );
        assert_eq!(parse_perm("(0,1)", 3), Err(PermError::OutOfRange { point: 0, degree: 3 }));
        assert_eq!(parse_perm("(1,2)(2,3)", 3), Err(PermError::RepeatedPoint(2)));
        assert_eq!(parse_perm("(1,2,1)", 3), Err(PermError::RepeatedPoint(1)));
    }

    #[test]
    fn canonical_format() {
        assert_eq!(p("(4,3)(2,1)", 4).to_string(), "(1,2)(3,4)");
        assert_eq!(p("(3,1,2)", 3).to_string(), "(1,2,3)");
        assert_eq!(p("id", 3).to_string(), "id");
        assert_eq!(p("(5,2,4)", 6).to_string(), "(2,4,5)");
    }

    #[test]
    fn compose_left_to_right() {
        let a = p("(4,3,1)", 4);
        let b = p("(3,4,2)", 4);
        assert_eq!(a.compose(&b).unwrap(), p("(1,2,3)", 4));
        let t = p("(1,2)", 3);
        assert!(t.compose(&t).unwrap().is_identity());
        assert_eq!(
            p("(1,2)", 3).compose(&p("(1,2)", 4)),
            Err(PermError::DegreeMismatch(3, 4))
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("(1,2,3)", 3).inverse(), p("(1,3,2)", 3));
        assert!(p("id", 3).inverse().is_identity());
        assert_eq!(p("(1,2)(3,4)", 4).inverse(), p("(1,2)(3,4)", 4));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("(1,2)", 3).conjugate(&p("(1,3)", 3)).unwrap(), p("(2,3)", 3));
        let x = p("(1,4,2)(3,5)", 5);
        assert_eq!(x.conjugate(&Perm::identity(5)).unwrap(), x);
    }

    #[test]
    fn cycle_structure_examples() {
        let c = p("(1,2)(3,4)", 6).cycle_structure();
        assert_eq!(c.cycle_lengths, vec![2, 2]);
        assert_eq!(c.index, 2);
        assert_eq!(c.fixed_points(), 2);
        let c = p("(1,2,3)", 5).cycle_structure();
        assert_eq!((c.cycle_lengths.clone(), c.index), (vec![3], 2));
        let c = Perm::identity(4).cycle_structure();
        assert!(c.cycle_lengths.is_empty());
        assert_eq!(c.index, 0);
    }

    #[test]
    fn order_and_parity() {
        assert_eq!(p("(1,2)(3,4,5)", 5).order(), 6);
        assert!(!p("(1,2)", 2).is_even());
        assert!(p("(1,2,3)", 3).is_even());
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert_eq!(Perm::from_images(&[1, 1]), Err(PermError::NotBijection(2)));
        assert_eq!(Perm::from_images(&[]), Err(PermError::ZeroDegree));
    }
}
