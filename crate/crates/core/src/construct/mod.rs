//! Deterministic constructors for the tuple families and the exceptional
//! groups.
//!
//! Every constructor validates its output through [`make_tuple`], so an
//! invalid tuple is an error rather than a silent wrong answer.

mod exceptional;
mod linear;

use serde::Serialize;
use thiserror::Error;

use crate::nielsen::{make_tuple, NielsenTuple, Shape, TupleError};
use crate::perm::{classify_group, conjugacy_class, parse_perm, GroupKind, Perm, PermError};

pub use exceptional::{exceptional_genus3, tau_genus2, tau_in_gl32, ExceptionalCase};
pub use linear::{embed_linear_in_affine, linear_group, LinearGroupName, LinearGroupSpec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("invalid parameters: {0}")]
    Parameters(String),
    #[error("stabilization needs a tuple of positive genus")]
    GenusZero,
    #[error("search failed: {0}")]
    SearchFailed(String),
    #[error(transparent)]
    Tuple(#[from] TupleError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FamilyKind {
    /// Double transpositions.
    Dt,
    /// 3-cycles.
    Tc,
}

impl FamilyKind {
    pub fn shape(self) -> Shape {
        match self {
            FamilyKind::Dt => Shape::DoubleTranspositions,
            FamilyKind::Tc => Shape::ThreeCycles,
        }
    }
}

fn tuple_from_strings(cycles: &[&str], n: usize) -> Result<NielsenTuple, ConstructError> {
    let perms = cycles.iter().map(|c| parse_perm(c, n)).collect::<Result<Vec<_>, _>>()?;
    Ok(make_tuple(perms, n)?)
}

const DT4: [&str; 3] = ["(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"];
const DT5: [&str; 4] = ["(1,2)(3,4)", "(1,3)(4,5)", "(2,4)(3,5)", "(1,4)(2,5)"];
const DT6: [&str; 5] = ["(3,4)(5,6)", "(3,5)(4,6)", "(2,3)(4,5)", "(1,4)(3,6)", "(1,4)(2,6)"];

/// The permutation sending `front[k]` to `k + 1` and the remaining points,
/// in increasing order, to the labels after those.
fn relabeling(front: &[usize], n: usize) -> Perm {
    let mut images = vec![0u32; n];
    let mut next = 0u32;
    for &x in front {
        images[x - 1] = next;
        next += 1;
    }
    for x in 1..=n {
        if !front.contains(&x) {
            images[x - 1] = next;
            next += 1;
        }
    }
    Perm::from_raw(images)
}

/// A double-transposition tuple of genus 0 in degree `n`; for `n ≥ 6` it
/// generates `A_n`.
pub fn dt_genus0(n: usize) -> Result<NielsenTuple, ConstructError> {
    if n < 4 {
        return Err(ConstructError::Parameters(format!("dt_genus0 needs n >= 4, got {n}")));
    }
    let mut t = match n {
        4 => return tuple_from_strings(&DT4, 4),
        5 => return tuple_from_strings(&DT5, 5),
        _ => tuple_from_strings(&DT6, 6)?,
    };
    for m in 7..=n {
        let cycles = t.entries().last().unwrap().cycles();
        let pi = relabeling(&[cycles[0][0], cycles[0][1], cycles[1][0], cycles[1][1]], m - 1);
        let t0 = t.conjugate(&pi)?;
        let mut entries: Vec<Perm> = t0.entries().iter().map(|e| e.extend(m)).collect();
        entries.pop();
        entries.push(Perm::from_cycles(&[&[1, 2], &[m - 1, m]], m)?);
        entries.push(Perm::from_cycles(&[&[3, 4], &[m - 1, m]], m)?);
        t = make_tuple(entries, m)?;
    }
    Ok(t)
}

/// A 3-cycle tuple of genus 0 in degree `n`; for `n ≥ 5` it generates `A_n`.
pub fn tc_genus0(n: usize) -> Result<NielsenTuple, ConstructError> {
    if n < 3 {
        return Err(ConstructError::Parameters(format!("tc_genus0 needs n >= 3, got {n}")));
    }
    let mut t = tuple_from_strings(&["(1,2,3)", "(1,3,2)"], 3)?;
    for m in 4..=n {
        let c = t.entries()[0].cycles().remove(0);
        let t0 = t.conjugate(&relabeling(&c, m - 1))?;
        let mut entries = vec![
            Perm::from_cycles(&[&[m, 3, 1]], m)?,
            Perm::from_cycles(&[&[3, m, 2]], m)?,
        ];
        entries.extend(t0.entries()[1..].iter().map(|e| e.extend(m)));
        t = make_tuple(entries, m)?;
    }
    Ok(t)
}

/// Adds a point and raises the genus by one: the entries are read in
/// `S_{n+1}` and a cancelling pair through the new point is appended.
pub fn stabilize(t: &NielsenTuple, kind: FamilyKind) -> Result<NielsenTuple, ConstructError> {
    if t.genus() == 0 {
        return Err(ConstructError::GenusZero);
    }
    stabilize_any_genus(t, kind)
}

fn stabilize_any_genus(t: &NielsenTuple, kind: FamilyKind) -> Result<NielsenTuple, ConstructError> {
    let n = t.degree();
    if n < 3 {
        return Err(ConstructError::Parameters(format!("stabilize needs degree >= 3, got {n}")));
    }
    let m = n + 1;
    let mut entries: Vec<Perm> = t.entries().iter().map(|e| e.extend(m)).collect();
    match kind {
        FamilyKind::Dt => {
            let x = Perm::from_cycles(&[&[1, 2], &[n, m]], m)?;
            entries.push(x.clone());
            entries.push(x);
        }
        FamilyKind::Tc => {
            let x = Perm::from_cycles(&[&[n - 1, n, m]], m)?;
            entries.push(x.clone());
            entries.push(x.inverse());
        }
    }
    Ok(make_tuple(entries, m)?)
}

const DTA5_GENUS1: [&str; 5] = ["(1,2)(3,4)", "(1,2)(3,4)", "(1,2)(4,5)", "(1,4)(2,5)", "(1,5)(2,4)"];

/// A double-transposition tuple of genus 1 and length `n` generating `A_n`.
pub fn dta_genus1(n: usize) -> Result<NielsenTuple, ConstructError> {
    if n < 5 {
        return Err(ConstructError::Parameters(format!("dta_genus1 needs n >= 5, got {n}")));
    }
    let mut t = tuple_from_strings(&DTA5_GENUS1, 5)?;
    for m in 6..=n {
        let mut entries: Vec<Perm> = t.entries().iter().map(|e| e.extend(m)).collect();
        let (s, u) = split_through(entries.pop().unwrap(), m)?;
        entries.push(s);
        entries.push(u);
        t = make_tuple(entries, m)?;
    }
    Ok(t)
}

/// `(a,b)(c,d) = s·t` with `s = (p,m)(a,b)`, `t = (p,m)(c,d)` and `p` the
/// least point off the support.
fn split_through(x: Perm, m: usize) -> Result<(Perm, Perm), ConstructError> {
    let c = x.cycles();
    let support: Vec<usize> = c.iter().flatten().copied().collect();
    let p = (1..m).find(|q| !support.contains(q)).ok_or_else(|| {
        ConstructError::Parameters(format!("no free point below {m} for {x:?}"))
    })?;
    let s = Perm::from_cycles(&[&[p, m], &c[0]], m)?;
    let t = Perm::from_cycles(&[&[p, m], &c[1]], m)?;
    debug_assert_eq!(s.then(&t), x);
    Ok((s, t))
}

/// A tuple of genus `g` in degree `n` of the given kind generating `A_n`,
/// with `r = n + g − 1` entries.
pub fn build_family(n: usize, g: u32, kind: FamilyKind) -> Result<NielsenTuple, ConstructError> {
    let ok = match g {
        0 => false,
        1 => n >= 5,
        2 => n >= 6,
        _ => n > 2 * g as usize,
    };
    if !ok {
        return Err(ConstructError::Parameters(format!(
            "build_family needs (g=1, n>=5), (g=2, n>=6) or (g>2, n>=2g+1); got n={n}, g={g}"
        )));
    }
    if g == 1 {
        return match kind {
            FamilyKind::Dt => dta_genus1(n),
            FamilyKind::Tc => stabilize_any_genus(&tc_genus0(n - 1)?, FamilyKind::Tc),
        };
    }
    stabilize(&build_family(n - 1, g - 1, kind)?, kind)
}

/// Lexicographically least tuple of `n − 1` double transpositions in `S_n`
/// that is admissible (and generates `A_n` when `alternating` is set), with
/// its leading entries pinned to `prefix`. `None` when there is none.
pub fn search_dt_genus0(n: usize, prefix: &[Perm], alternating: bool) -> Result<Option<NielsenTuple>, ConstructError> {
    if n < 4 {
        return Err(ConstructError::Parameters(format!("search needs n >= 4, got {n}")));
    }
    let r = n - 1;
    if prefix.len() >= r {
        return Err(ConstructError::Parameters("prefix too long".into()));
    }
    let class = conjugacy_class(n, &[2, 2])?;
    let mut chosen: Vec<Perm> = prefix.iter().map(|p| p.extend(n)).collect();
    Ok(dfs(&class, n, r, &mut chosen, alternating))
}

fn dfs(class: &[Perm], n: usize, r: usize, chosen: &mut Vec<Perm>, alternating: bool) -> Option<NielsenTuple> {
    if chosen.len() == r - 1 {
        let last = crate::perm::product(chosen.iter()).unwrap().inverse();
        if !last.cycle_structure().is_double_transposition() {
            return None;
        }
        chosen.push(last);
        let found = make_tuple(chosen.clone(), n).ok().filter(|t| {
            !alternating || classify_group(t.entries()).map(|id| id.kind == GroupKind::Alternating).unwrap_or(false)
        });
        chosen.pop();
        return found;
    }
    for x in class {
        chosen.push(x.clone());
        if let Some(t) = dfs(class, n, r, chosen, alternating) {
            return Some(t);
        }
        chosen.pop();
    }
    None
}

/// The seed searches that produced the frozen degree-5 and degree-6 tuples.
pub fn search_dt_seed(n: usize) -> Result<Option<NielsenTuple>, ConstructError> {
    match n {
        5 => {
            let prefix = [parse_perm(DT5[0], 5)?, parse_perm(DT5[1], 5)?];
            search_dt_genus0(5, &prefix, false)
        }
        6 => search_dt_genus0(6, &[], true),
        _ => Err(ConstructError::Parameters(format!("frozen seeds exist for n = 5, 6 only, got {n}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nielsen::moduli_necessary;
    use crate::perm::product;

    fn kind_of(t: &NielsenTuple) -> GroupKind {
        classify_group(t.entries()).unwrap().kind
    }

    #[test]
    fn dt4_seed() {
        let t = dt_genus0(4).unwrap();
        let strs: Vec<String> = t.entries().iter().map(Perm::to_cycle_string).collect();
        assert_eq!(strs, DT4);
        assert_eq!(t.genus(), 0);
    }

    #[test]
    fn dt5_seed_is_reproducible() {
        let t = dt_genus0(5).unwrap();
        let s12 = t.entries()[0].then(&t.entries()[1]);
        assert_eq!(s12.cycle_structure().cycle_lengths, [5]);
        assert_eq!(search_dt_seed(5).unwrap().unwrap(), t);
        assert_eq!(t.genus(), 0);
    }

    #[test]
    fn dt6_seed_is_reproducible() {
        let t = dt_genus0(6).unwrap();
        assert_eq!(search_dt_seed(6).unwrap().unwrap(), t);
        assert_eq!(kind_of(&t), GroupKind::Alternating);
    }

    #[test]
    fn no_alternating_genus0_dt_tuple_in_degree5() {
        assert_eq!(search_dt_genus0(5, &[], true).unwrap(), None);
        assert!(search_dt_genus0(5, &[], false).unwrap().is_some());
    }

    #[test]
    fn dt_genus0_range() {
        assert!(dt_genus0(3).is_err());
        for n in 4..=10 {
            let t = dt_genus0(n).unwrap();
            assert_eq!((t.genus(), t.len()), (0, n - 1), "n = {n}");
            assert_eq!(t.shape(), Shape::DoubleTranspositions);
            if n >= 6 {
                assert_eq!(kind_of(&t), GroupKind::Alternating, "n = {n}");
            }
        }
    }

    #[test]
    fn dt_replacement_pair() {
        let n = 9;
        let a = Perm::from_cycles(&[&[1, 2], &[n - 1, n]], n).unwrap();
        let b = Perm::from_cycles(&[&[3, 4], &[n - 1, n]], n).unwrap();
        assert_eq!(a.then(&b), parse_perm("(1,2)(3,4)", n).unwrap());
    }

    #[test]
    fn tc_genus0_range() {
        let t3 = tc_genus0(3).unwrap();
        assert_eq!(t3.entries()[0].to_cycle_string(), "(1,2,3)");
        assert_eq!(t3.entries()[1].to_cycle_string(), "(1,3,2)");
        assert!(tc_genus0(2).is_err());
        for n in 3..=10 {
            let t = tc_genus0(n).unwrap();
            assert_eq!((t.genus(), t.len()), (0, n - 1));
            assert_eq!(t.shape(), Shape::ThreeCycles);
            if n >= 5 {
                assert_eq!(kind_of(&t), GroupKind::Alternating, "n = {n}");
            }
        }
    }

    #[test]
    fn tc_replacement_pair() {
        for n in 4..=9 {
            let a = Perm::from_cycles(&[&[n, 3, 1]], n).unwrap();
            let b = Perm::from_cycles(&[&[3, n, 2]], n).unwrap();
            assert_eq!(a.then(&b), Perm::from_cycles(&[&[1, 2, 3]], n).unwrap());
        }
    }

    #[test]
    fn dta_genus1_anchor_and_range() {
        let t = dta_genus1(5).unwrap();
        let strs: Vec<String> = t.entries().iter().map(Perm::to_cycle_string).collect();
        assert_eq!(strs, DTA5_GENUS1);
        assert!(product(t.entries()).unwrap().is_identity());
        for n in 5..=9 {
            let t = dta_genus1(n).unwrap();
            assert_eq!((t.genus(), t.len()), (1, n));
            assert_eq!(kind_of(&t), GroupKind::Alternating);
        }
        assert!(dta_genus1(4).is_err());
    }

    #[test]
    fn split_is_a_factorization() {
        let x = parse_perm("(2,5)(3,7)", 8).unwrap();
        let (s, t) = split_through(x.clone(), 8).unwrap();
        assert_eq!(s.to_cycle_string(), "(1,8)(2,5)");
        assert_eq!(t.to_cycle_string(), "(1,8)(3,7)");
        assert_eq!(s.then(&t), x);
    }

    #[test]
    fn stabilize_rules() {
        let anchor = dta_genus1(5).unwrap();
        let s = stabilize(&anchor, FamilyKind::Dt).unwrap();
        assert_eq!((s.degree(), s.len(), s.genus()), (6, 7, 2));
        let tail = &s.entries()[5..];
        assert_eq!(tail[0], tail[1]);
        assert_eq!(tail[0].to_cycle_string(), "(1,2)(5,6)");
        assert_eq!(stabilize(&dt_genus0(6).unwrap(), FamilyKind::Dt), Err(ConstructError::GenusZero));

        let tc = build_family(6, 1, FamilyKind::Tc).unwrap();
        let s = stabilize(&tc, FamilyKind::Tc).unwrap();
        let tail = &s.entries()[s.len() - 2..];
        assert_eq!(tail[0].to_cycle_string(), "(5,6,7)");
        assert!(tail[0].then(&tail[1]).is_identity());
        assert_eq!(s.genus(), 2);
    }

    #[test]
    fn families() {
        for kind in [FamilyKind::Dt, FamilyKind::Tc] {
            for (n, g) in [(5, 1), (6, 1), (6, 2), (7, 2), (7, 3), (9, 4)] {
                let t = build_family(n, g, kind).unwrap();
                assert_eq!(t.genus(), g);
                assert_eq!(t.len(), n + g as usize - 1);
                assert_eq!(t.shape(), kind.shape());
                assert_eq!(kind_of(&t), GroupKind::Alternating, "{kind:?} n={n} g={g}");
            }
        }
        let t = build_family(7, 3, FamilyKind::Dt).unwrap();
        let m = moduli_necessary(&t);
        assert!(m.necessary_ok && !m.strict);
        assert!(build_family(6, 3, FamilyKind::Dt).is_err());
        assert!(build_family(5, 2, FamilyKind::Dt).is_err());
        assert!(build_family(4, 1, FamilyKind::Tc).is_err());
        assert!(build_family(9, 0, FamilyKind::Tc).is_err());
    }

    #[test]
    fn stabilize_preserves_lifting_invariant() {
        use crate::spin::lifting_invariant;
        for n in 5..=8 {
            let t = build_family(n, 1, FamilyKind::Tc).unwrap();
            let s = stabilize(&t, FamilyKind::Tc).unwrap();
            assert_eq!(lifting_invariant(&t).unwrap(), lifting_invariant(&s).unwrap());
        }
    }
}
