use serde::Serialize;

use super::{factorial, Perm, PermError, StabChain};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GroupKind {
    Symmetric,
    Alternating,
    GL32,
    AGL32,
    AGL42,
    Other,
}

impl GroupKind {
    pub fn name(self) -> &'static str {
        match self {
            GroupKind::Symmetric => "symmetric",
            GroupKind::Alternating => "alternating",
            GroupKind::GL32 => "gl32",
            GroupKind::AGL32 => "agl32",
            GroupKind::AGL42 => "agl42",
            GroupKind::Other => "other",
        }
    }
}

/// Classification of a generated permutation group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupId {
    pub degree: usize,
    pub order: u128,
    pub kind: GroupKind,
    pub transitive: bool,
    pub primitive: bool,
    pub block_system: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transitivity {
    pub orbits: Vec<Vec<usize>>,
    pub primitive: bool,
    pub block_system: Option<Vec<Vec<usize>>>,
}

impl Transitivity {
    pub fn is_transitive(&self) -> bool {
        self.orbits.len() == 1
    }
}

/// Point stabilizer and its action on the remaining points.
#[derive(Debug, Clone)]
pub struct StabilizerAction {
    /// Stabilizer generators in the original degree.
    pub generators: Vec<Perm>,
    /// The same generators acting on the other `n - 1` points, relabeled
    /// `1..n-1` by increasing original label.
    pub induced: Vec<Perm>,
    /// `relabel[k - 1]` is the original label of new point `k`.
    pub relabel: Vec<usize>,
}

fn check_gens(gens: &[Perm]) -> Result<usize, PermError> {
    let first = gens.first().ok_or(PermError::NoGenerators)?;
    let n = first.degree();
    for g in gens {
        if g.degree() != n {
            return Err(PermError::DegreeMismatch(n, g.degree()));
        }
    }
    Ok(n)
}

pub fn group_order(gens: &[Perm]) -> Result<u128, PermError> {
    let n = check_gens(gens)?;
    Ok(StabChain::new(gens, n).order())
}

/// `|AGL_m(2)| = 2^m · |GL_m(2)|`.
pub(crate) fn affine_group_order(m: u32) -> u128 {
    let q = 1u128 << m;
    let gl: u128 = (0..m).map(|i| q - (1u128 << i)).product();
    q * gl
}

pub(crate) fn orbit_partition(gens: &[Perm], n: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for (x, &y) in g.raw().iter().enumerate() {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y as usize));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    classes(&mut parent, find)
}

fn classes(parent: &mut [usize], find: fn(&mut [usize], usize) -> usize) -> Vec<Vec<usize>> {
    let n = parent.len();
    let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
    for x in 0..n {
        let r = find(parent, x);
        by_root[r].push(x + 1);
    }
    let mut out: Vec<Vec<usize>> = by_root.into_iter().filter(|c| !c.is_empty()).collect();
    out.sort();
    out
}

/// Finest block system in which `0` and `x` share a block (0-based).
fn minimal_block_system(gens: &[Perm], n: usize, x: usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut queue = vec![(0usize, x)];
    parent[x] = 0;
    while let Some((a, b)) = queue.pop() {
        for g in gens {
            let ga = find(&mut parent, g.raw()[a] as usize);
            let gb = find(&mut parent, g.raw()[b] as usize);
            if ga != gb {
                let (lo, hi) = (ga.min(gb), ga.max(gb));
                parent[hi] = lo;
                queue.push((lo, hi));
            }
        }
    }
    classes(&mut parent, find)
}

pub fn transitivity_and_primitivity(gens: &[Perm]) -> Result<Transitivity, PermError> {
    let n = check_gens(gens)?;
    let orbits = orbit_partition(gens, n);
    if orbits.len() != 1 {
        return Ok(Transitivity { orbits, primitive: false, block_system: None });
    }
    for x in 1..n {
        let blocks = minimal_block_system(gens, n, x);
        if blocks.len() > 1 {
            return Ok(Transitivity { orbits, primitive: false, block_system: Some(blocks) });
        }
    }
    Ok(Transitivity { orbits, primitive: true, block_system: None })
}

pub(crate) fn kind_from_summary(degree: usize, order: u128, transitive: bool, all_even: bool) -> GroupKind {
    let full = factorial(degree);
    if order == full {
        GroupKind::Symmetric
    } else if order * 2 == full && all_even {
        GroupKind::Alternating
    } else if transitive && degree == 7 && order == 168 {
        GroupKind::GL32
    } else if transitive && degree == 8 && order == affine_group_order(3) {
        GroupKind::AGL32
    } else if transitive && degree == 16 && order == affine_group_order(4) {
        GroupKind::AGL42
    } else {
        GroupKind::Other
    }
}

pub fn classify_group(gens: &[Perm]) -> Result<GroupId, PermError> {
    let n = check_gens(gens)?;
    let order = StabChain::new(gens, n).order();
    let tp = transitivity_and_primitivity(gens)?;
    let transitive = tp.is_transitive();
    let kind = kind_from_summary(n, order, transitive, gens.iter().all(Perm::is_even));
    Ok(GroupId {
        degree: n,
        order,
        kind,
        transitive,
        primitive: tp.primitive,
        block_system: tp.block_system,
    })
}

pub fn point_stabilizer_action(gens: &[Perm], point: usize) -> Result<StabilizerAction, PermError> {
    let n = check_gens(gens)?;
    if point == 0 || point > n {
        return Err(PermError::OutOfRange { point, degree: n });
    }
    let orbits = orbit_partition(gens, n);
    if orbits.len() != 1 {
        return Err(PermError::Intransitive(orbits));
    }
    let chain = StabChain::with_base(gens, n, &[point]);
    let mut generators = chain.first_stabilizer_generators();
    if generators.is_empty() {
        generators.push(Perm::identity(n));
    }
    let relabel: Vec<usize> = (1..=n).filter(|&p| p != point).collect();
    let mut new_label = vec![0usize; n + 1];
    for (k, &old) in relabel.iter().enumerate() {
        new_label[old] = k + 1;
    }
    let induced = generators
        .iter()
        .map(|g| {
            let images: Vec<usize> = relabel.iter().map(|&old| new_label[g.apply(old)]).collect();
            Perm::from_images(&images)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(StabilizerAction { generators, induced, relabel })
}
