//! Orbit decomposition over canonical forms, shared by both encodings.

use std::collections::HashSet;
use std::fmt::Debug;
use std::hash::Hash;

use rayon::prelude::*;

use super::{shape_has_invariant, BraidConfig, BraidError, BraidOrbitReport, ClassSpec, EnumerationMode, OrbitSummary};
use crate::spin::{lifting_invariant_of, LiftingInvariant};

pub(crate) trait Engine: Sync {
    type Code: Clone + Ord + Hash + Send + Sync + Debug;

    fn length(&self) -> usize;
    fn canon(&self, code: &Self::Code) -> Self::Code;
    /// Braid move on positions `i, i + 1` (0-based), not canonicalized.
    fn moved(&self, code: &Self::Code, i: usize, forward: bool) -> Self::Code;
    fn entries(&self, code: &Self::Code) -> Vec<crate::perm::Perm>;
    /// Rough bytes per stored form, for the memory cap.
    fn code_bytes(&self) -> u64;
}

pub(crate) fn check_memory(forms: usize, per_form: u64, config: &BraidConfig) -> Result<(), BraidError> {
    let bytes = forms as u64 * per_form;
    if bytes > config.memory_cap {
        return Err(BraidError::MemoryCap { forms, bytes, cap: config.memory_cap });
    }
    Ok(())
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        parent[x as usize] = parent[parent[x as usize] as usize];
        x = parent[x as usize];
    }
    x
}

const CHUNK: usize = 1 << 16;

/// Splits sorted canonical forms into orbits. Forward moves suffice: each
/// acts as a permutation of the finite class, so the undirected move graph
/// has the orbits as its components.
pub(crate) fn decompose<E: Engine>(
    engine: &E,
    spec: &ClassSpec,
    forms: Vec<E::Code>,
    config: &BraidConfig,
) -> Result<BraidOrbitReport, BraidError> {
    check_memory(forms.len(), engine.code_bytes() + 8, config)?;
    let r = engine.length();
    let mut parent: Vec<u32> = (0..forms.len() as u32).collect();
    for start in (0..forms.len()).step_by(CHUNK) {
        let end = (start + CHUNK).min(forms.len());
        let edges: Vec<(u32, u32)> = (start..end)
            .into_par_iter()
            .map(|i| {
                (0..r - 1)
                    .map(|k| {
                        let c = engine.canon(&engine.moved(&forms[i], k, true));
                        match forms.binary_search(&c) {
                            Ok(j) => Ok((i as u32, j as u32)),
                            Err(_) => Err(BraidError::NotClosed(format!("{:?}", engine.entries(&c)))),
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?
            .into_iter()
            .flatten()
            .collect();
        for (a, b) in edges {
            let (x, y) = (find(&mut parent, a), find(&mut parent, b));
            if x != y {
                parent[x.max(y) as usize] = x.min(y);
            }
        }
    }
    // roots are the least index of each component
    let roots: Vec<u32> = (0..forms.len() as u32).map(|i| find(&mut parent, i)).collect();
    let mut reps: Vec<u32> = roots.iter().copied().filter(|&x| roots[x as usize] == x).collect();
    reps.sort_unstable();
    reps.dedup();
    let mut sizes = vec![0u64; forms.len()];
    for &x in &roots {
        sizes[x as usize] += 1;
    }

    let invariants = if shape_has_invariant(spec) {
        let inv: Vec<LiftingInvariant> = forms
            .par_iter()
            .map(|c| lifting_invariant_of(&engine.entries(c), spec.degree))
            .collect::<Result<_, _>>()?;
        let mut per_rep: Vec<Option<LiftingInvariant>> = vec![None; forms.len()];
        for (i, &root) in roots.iter().enumerate() {
            match per_rep[root as usize] {
                None => per_rep[root as usize] = Some(inv[i]),
                Some(v) if v != inv[i] => return Err(BraidError::InvariantNotConstant),
                _ => {}
            }
        }
        Some(per_rep)
    } else {
        None
    };

    let orbits = reps
        .iter()
        .map(|&x| summary(engine, &forms[x as usize], sizes[x as usize], invariants.as_ref().and_then(|v| v[x as usize])))
        .collect::<Vec<_>>();
    Ok(BraidOrbitReport {
        spec: spec.echo(),
        orbit_count: orbits.len(),
        orbits,
        total_class_size: forms.len() as u64,
        enumeration_mode: EnumerationMode::Exhaustive,
    })
}

fn summary<E: Engine>(engine: &E, code: &E::Code, size: u64, inv: Option<LiftingInvariant>) -> OrbitSummary {
    let entries = engine.entries(code);
    OrbitSummary {
        representative: entries.iter().map(|p| p.to_cycle_string()).collect(),
        size,
        lifting_invariant: inv,
        entries,
    }
}

fn neighbours<E: Engine>(engine: &E, code: &E::Code) -> Vec<E::Code> {
    let r = engine.length();
    let mut out = Vec::with_capacity(2 * (r - 1));
    for k in 0..r - 1 {
        for fwd in [true, false] {
            out.push(engine.canon(&engine.moved(code, k, fwd)));
        }
    }
    out
}

fn expand<E: Engine>(
    engine: &E,
    frontier: &[E::Code],
    seen: &mut HashSet<E::Code>,
    config: &BraidConfig,
) -> Result<Vec<E::Code>, BraidError> {
    let found: Vec<E::Code> = frontier.par_iter().flat_map_iter(|c| neighbours(engine, c)).collect();
    let mut next = Vec::new();
    for c in found {
        if seen.insert(c.clone()) {
            next.push(c);
        }
    }
    check_memory(seen.len(), engine.code_bytes() + 16, config)?;
    next.sort_unstable();
    Ok(next)
}

/// Breadth-first search from canonical `starts`; returns the sorted orbit.
pub(crate) fn bfs<E: Engine>(
    engine: &E,
    starts: Vec<E::Code>,
    config: &BraidConfig,
) -> Result<Vec<E::Code>, BraidError> {
    let mut seen: HashSet<E::Code> = starts.iter().cloned().collect();
    let mut frontier = starts;
    while !frontier.is_empty() {
        frontier = expand(engine, &frontier, &mut seen, config)?;
    }
    let mut all: Vec<E::Code> = seen.into_iter().collect();
    all.par_sort_unstable();
    Ok(all)
}

pub(crate) fn seeded<E: Engine>(
    engine: &E,
    spec: &ClassSpec,
    start: E::Code,
    config: &BraidConfig,
) -> Result<BraidOrbitReport, BraidError> {
    let members = bfs(engine, vec![start], config)?;
    let inv = if shape_has_invariant(spec) {
        let all: Vec<LiftingInvariant> = members
            .par_iter()
            .map(|c| lifting_invariant_of(&engine.entries(c), spec.degree))
            .collect::<Result<_, _>>()?;
        if all.iter().any(|v| *v != all[0]) {
            return Err(BraidError::InvariantNotConstant);
        }
        Some(all[0])
    } else {
        None
    };
    let orbit = summary(engine, &members[0], members.len() as u64, inv);
    Ok(BraidOrbitReport {
        spec: spec.echo(),
        orbit_count: 1,
        orbits: vec![orbit],
        total_class_size: members.len() as u64,
        enumeration_mode: EnumerationMode::SeededBFS,
    })
}

/// Bidirectional search: expands the smaller frontier until the two
/// explored sets meet or one orbit is exhausted.
pub(crate) fn meet<E: Engine>(engine: &E, a: E::Code, b: E::Code, config: &BraidConfig) -> Result<bool, BraidError> {
    if a == b {
        return Ok(true);
    }
    let mut seen = [HashSet::from([a.clone()]), HashSet::from([b.clone()])];
    let mut frontier = [vec![a], vec![b]];
    loop {
        let side = if frontier[0].len() <= frontier[1].len() { 0 } else { 1 };
        if frontier[side].is_empty() {
            return Ok(false);
        }
        let current = std::mem::take(&mut frontier[side]);
        let next = expand(engine, &current, &mut seen[side], config)?;
        if next.iter().any(|c| seen[1 - side].contains(c)) {
            return Ok(true);
        }
        frontier[side] = next;
    }
}
