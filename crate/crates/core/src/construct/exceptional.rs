//! The genus-2 tuple `τ` inside a point stabilizer of `GL_3(2)` and the
//! genus-3 tuples generating `GL_3(2)` and `AGL_3(2)`.

use std::collections::BTreeSet;

use serde::Serialize;

use super::linear::{embed_linear_in_affine, linear_group, LinearGroupName};
use super::ConstructError;
use crate::nielsen::{make_tuple, NielsenTuple};
use crate::perm::{classify_group, point_stabilizer_action, GroupKind, Perm, StabChain};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ExceptionalCase {
    GL32,
    AGL32,
}

/// `τ = (τ1, τ2, τ3, ρ1, ρ1, ρ2, ρ2)` on the 7 points of `GL_3(2)`, all
/// entries fixing point 1. The `τi` form the Klein four-subgroup of the
/// stabilizer `H ≅ S_4`; `ρ1, ρ2` are the least pair of its other
/// involutions with product of order 3.
pub fn tau_in_gl32() -> Result<Vec<Perm>, ConstructError> {
    let g = linear_group(LinearGroupName::GL32);
    let act = point_stabilizer_action(&g.generators, 1)?;
    let h = StabChain::new(&act.generators, 7).elements();
    if h.len() != 24 {
        return Err(ConstructError::SearchFailed(format!("point stabilizer has order {}", h.len())));
    }
    let class_size = |x: &Perm| h.iter().map(|y| x.conj(y)).collect::<BTreeSet<_>>().len();
    let (klein, others): (Vec<&Perm>, Vec<&Perm>) =
        h.iter().filter(|x| x.order() == 2).partition(|x| class_size(x) == 3);
    if klein.len() != 3 {
        return Err(ConstructError::SearchFailed(format!("{} normal involutions in H", klein.len())));
    }
    let (r1, r2) = others
        .iter()
        .enumerate()
        .flat_map(|(i, a)| others[i + 1..].iter().map(move |b| (*a, *b)))
        .find(|(a, b)| a.then(b).order() == 3)
        .ok_or_else(|| ConstructError::SearchFailed("no involution pair of product order 3".into()))?;
    Ok(vec![
        klein[0].clone(),
        klein[1].clone(),
        klein[2].clone(),
        r1.clone(),
        r1.clone(),
        r2.clone(),
        r2.clone(),
    ])
}

/// Drops a fixed point, relabeling the others in increasing order.
fn restrict(p: &Perm, point: usize) -> Perm {
    let images: Vec<u32> = (1..=p.degree())
        .filter(|&x| x != point)
        .map(|x| {
            let y = p.apply(x);
            debug_assert_ne!(y, point);
            (if y > point { y - 2 } else { y - 1 }) as u32
        })
        .collect();
    Perm::from_raw(images)
}

/// `τ` acting on the six points other than 1: a double-transposition
/// tuple of genus 2 generating `S_4`, with three blocks of size 2.
pub fn tau_genus2() -> Result<NielsenTuple, ConstructError> {
    let tau = tau_in_gl32()?;
    Ok(make_tuple(tau.iter().map(|p| restrict(p, 1)).collect(), 6)?)
}

fn expect_kind(t: &NielsenTuple, kind: GroupKind) -> Result<(), ConstructError> {
    let id = classify_group(t.entries())?;
    if id.kind != kind {
        return Err(ConstructError::SearchFailed(format!(
            "constructed tuple generates a group of order {} ({}), expected {}",
            id.order,
            id.kind.name(),
            kind.name()
        )));
    }
    Ok(())
}

/// Genus-3 double-transposition tuples generating `GL_3(2)` on 7 points
/// (9 entries) or `AGL_3(2)` on 8 points (10 entries).
pub fn exceptional_genus3(case: ExceptionalCase) -> Result<NielsenTuple, ConstructError> {
    let g = linear_group(LinearGroupName::GL32);
    let x = StabChain::new(&g.generators, 7)
        .elements()
        .into_iter()
        .find(|x| x.order() == 2 && x.apply(1) != 1)
        .ok_or_else(|| ConstructError::SearchFailed("no involution outside H".into()))?;
    let mut entries = tau_in_gl32()?;
    entries.push(x.clone());
    entries.push(x);
    let t7 = make_tuple(entries, 7)?;
    expect_kind(&t7, GroupKind::GL32)?;
    if case == ExceptionalCase::GL32 {
        return Ok(t7);
    }

    let agl = linear_group(LinearGroupName::AGL32);
    let mut entries: Vec<Perm> = t7.entries().iter().map(embed_linear_in_affine).collect();
    let last = entries.pop().unwrap();
    let outside = |p: &Perm| p.cycle_structure().is_double_transposition() && p.apply(1) != 1;
    let (s, t) = StabChain::new(&agl.generators, 8)
        .elements()
        .into_iter()
        .filter(outside)
        .map(|s| {
            let t = s.inverse().then(&last);
            (s, t)
        })
        .find(|(_, t)| outside(t))
        .ok_or_else(|| ConstructError::SearchFailed("no affine factorization of the last entry".into()))?;
    entries.push(s);
    entries.push(t);
    let t8 = make_tuple(entries, 8)?;
    expect_kind(&t8, GroupKind::AGL32)?;
    Ok(t8)
}
