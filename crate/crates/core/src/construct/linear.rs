//! `GL_3(2)`, `AGL_3(2)` and `AGL_4(2)` as permutation groups.
//!
//! Vectors of `F_2^m` are bitmasks. The linear group acts on the nonzero
//! vectors, vector `v` carrying label `v`; the affine group acts on all
//! vectors, vector `v` carrying label `v + 1`.

use serde::Serialize;

use crate::perm::{Perm, StabChain};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum LinearGroupName {
    GL32,
    AGL32,
    AGL42,
}

impl LinearGroupName {
    pub fn dimension(self) -> u32 {
        match self {
            LinearGroupName::GL32 | LinearGroupName::AGL32 => 3,
            LinearGroupName::AGL42 => 4,
        }
    }

    pub fn is_affine(self) -> bool {
        !matches!(self, LinearGroupName::GL32)
    }

    pub fn degree(self) -> usize {
        let q = 1usize << self.dimension();
        if self.is_affine() {
            q
        } else {
            q - 1
        }
    }
}

#[derive(Debug, Clone)]
pub struct LinearGroupSpec {
    pub name: LinearGroupName,
    pub degree: usize,
    pub generators: Vec<Perm>,
    /// Non-identity elements fixing a linear (resp. affine) hyperplane pointwise.
    pub transvections: Vec<Perm>,
    /// Order from the stabilizer chain of `generators`.
    pub order: u128,
}

/// `x ↦ Ax + b` over `F_2^m`, `A` stored by columns.
#[derive(Debug, Clone, PartialEq, Eq)]
struct AffineMap {
    columns: Vec<u32>,
    shift: u32,
}

impl AffineMap {
    fn apply(&self, x: u32) -> u32 {
        let mut y = self.shift;
        for (j, &col) in self.columns.iter().enumerate() {
            if x >> j & 1 == 1 {
                y ^= col;
            }
        }
        y
    }

    fn is_invertible(&self) -> bool {
        let m = self.columns.len();
        let mut seen = vec![false; 1 << m];
        (0..1u32 << m).all(|x| {
            let y = (self.apply(x) ^ self.shift) as usize;
            !std::mem::replace(&mut seen[y], true)
        })
    }

    fn is_identity(&self) -> bool {
        self.shift == 0 && self.columns.iter().enumerate().all(|(j, &c)| c == 1 << j)
    }
}

fn dot(a: u32, x: u32) -> u32 {
    (a & x).count_ones() & 1
}

fn to_perm(map: &AffineMap, m: u32, affine: bool) -> Perm {
    let q = 1u32 << m;
    let images: Vec<u32> = if affine {
        (0..q).map(|v| map.apply(v)).collect()
    } else {
        debug_assert_eq!(map.shift, 0);
        (1..q).map(|v| map.apply(v) - 1).collect()
    };
    Perm::from_raw(images)
}

/// Whether `map` fixes pointwise some hyperplane: `{x : a·x = 0}` for the
/// linear case, `{x : a·x = c}` for the affine case.
fn fixes_hyperplane(map: &AffineMap, m: u32, affine: bool) -> bool {
    let q = 1u32 << m;
    let offsets: &[u32] = if affine { &[0, 1] } else { &[0] };
    (1..q).any(|a| {
        offsets
            .iter()
            .any(|&c| (0..q).filter(|&x| dot(a, x) == c).all(|x| map.apply(x) == x))
    })
}

fn elementary(m: u32, i: u32, j: u32) -> AffineMap {
    let mut columns: Vec<u32> = (0..m).map(|k| 1 << k).collect();
    columns[j as usize] ^= 1 << i;
    AffineMap { columns, shift: 0 }
}

fn all_affine_maps(m: u32, affine: bool) -> impl Iterator<Item = AffineMap> {
    let q = 1u32 << m;
    let shifts = if affine { q } else { 1 };
    let total = (q as u64).pow(m);
    (0..total).flat_map(move |code| {
        let columns: Vec<u32> = (0..m).map(|j| ((code >> (j * m)) as u32) & (q - 1)).collect();
        (0..shifts).map(move |shift| AffineMap { columns: columns.clone(), shift })
    })
    .filter(AffineMap::is_invertible)
}

pub fn linear_group(name: LinearGroupName) -> LinearGroupSpec {
    let m = name.dimension();
    let affine = name.is_affine();
    let mut maps = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i != j {
                maps.push(elementary(m, i, j));
            }
        }
    }
    if affine {
        let mut translation = elementary(m, 0, 1);
        translation.columns = (0..m).map(|k| 1 << k).collect();
        translation.shift = 1;
        maps.push(translation);
    }
    let generators: Vec<Perm> = maps.iter().map(|a| to_perm(a, m, affine)).collect();
    let degree = name.degree();
    let chain = StabChain::new(&generators, degree);

    let mut transvections: Vec<Perm> = if affine {
        all_affine_maps(m, true)
            .filter(|a| !a.is_identity() && fixes_hyperplane(a, m, true))
            .map(|a| to_perm(&a, m, true))
            .collect()
    } else {
        chain
            .elements()
            .into_iter()
            .filter(|g| {
                !g.is_identity() && {
                    let map = perm_to_linear(g, m);
                    fixes_hyperplane(&map, m, false)
                }
            })
            .collect()
    };
    transvections.sort();
    debug_assert!(transvections.iter().all(|t| chain.contains(t)));

    LinearGroupSpec { name, degree, generators, transvections, order: chain.order() }
}

/// Reads a permutation of the nonzero vectors back as a matrix (images of
/// the unit vectors); only meaningful for elements of the linear group.
fn perm_to_linear(g: &Perm, m: u32) -> AffineMap {
    AffineMap { columns: (0..m).map(|j| g.apply(1 << j) as u32).collect(), shift: 0 }
}

/// Embeds a permutation of the nonzero vectors into the affine action,
/// fixing the zero vector (label 1).
pub fn embed_linear_in_affine(p: &Perm) -> Perm {
    let mut images = vec![0u32];
    images.extend(p.raw().iter().map(|&x| x + 1));
    Perm::from_raw(images)
}
