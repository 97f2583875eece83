//! Classes of tuples inside a fixed group of order at most 255.
//!
//! Entries are element indices into the sorted element list, so index order
//! agrees with the order on permutations. Tuples must generate the whole
//! group. Two such tuples are conjugate in `S_n` exactly when they are
//! conjugate under the normalizer `N` of the group, so forms are taken up
//! to `N` only; this gives the same classes as `S_n` canonical forms.
//! Generation is tracked through the lattice of subgroups.

use std::collections::HashMap;

use rayon::prelude::*;

use super::orbits::{check_memory, Engine};
use super::{BraidConfig, BraidError, ClassSpec, EntryClasses, GroupFilter};
use crate::perm::{classify_group, Perm, StabChain};

const MAX_SUBGROUPS: usize = 200_000;

type Bits = [u64; 4];

pub(crate) struct TableEngine {
    r: usize,
    elems: Vec<Perm>,
    index: HashMap<Perm, u8>,
    mul: Vec<u8>,
    inv: Vec<u8>,
    /// Conjugation action of each normalizer element on element indices.
    norm: Vec<Vec<u8>>,
    /// Least conjugate of each element under `N`, and the normalizer
    /// elements attaining it.
    least: Vec<u8>,
    least_by: Vec<Vec<u16>>,
    type_of: Vec<Option<usize>>,
    types: Vec<(Vec<usize>, usize)>,
    product: u8,
    join: Vec<u32>,
    full: u32,
    /// `|C_N(G)|` and `|C_N(c)|`.
    center: u128,
    product_centralizer: u128,
}

fn all_perms(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut p: Vec<u8> = (0..n as u8).collect();
    fn rec(k: usize, p: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

fn get(code: u128, k: usize) -> u8 {
    (code >> (8 * (15 - k))) as u8
}

fn pack(entries: impl Iterator<Item = u8>) -> u128 {
    entries.enumerate().fold(0u128, |acc, (k, e)| acc | (e as u128) << (8 * (15 - k)))
}

impl TableEngine {
    pub(crate) fn new(spec: &ClassSpec) -> Result<TableEngine, BraidError> {
        let ambient = spec.ambient.as_ref().expect("table engine needs an ambient group");
        let n = spec.degree;
        let chain = StabChain::new(&ambient.generators, n);
        let order = chain.order();
        if order > 255 {
            return Err(BraidError::AmbientTooLarge(order));
        }
        if let GroupFilter::Kind(k) = spec.group_filter {
            let kind = classify_group(&ambient.generators)?.kind;
            if kind != k {
                return Err(BraidError::InvalidSpec(format!("ambient group is {}, filter asks for {}", kind.name(), k.name())));
            }
        }
        let elems = chain.elements();
        let g = elems.len();
        let index: HashMap<Perm, u8> = elems.iter().enumerate().map(|(i, p)| (p.clone(), i as u8)).collect();
        let mut mul = vec![0u8; g * g];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                mul[i * g + j] = index[&a.then(b)];
            }
        }
        let inv: Vec<u8> = elems.iter().map(|a| index[&a.inverse()]).collect();

        let norm: Vec<Vec<u8>> = all_perms(n)
            .into_par_iter()
            .filter_map(|pi| {
                let pi = Perm::from_bytes(&pi);
                ambient.generators.iter().all(|s| index.contains_key(&s.conj(&pi))).then(|| {
                    elems.iter().map(|e| index[&e.conj(&pi)]).collect::<Vec<u8>>()
                })
            })
            .collect();
        let mut least = vec![0u8; g];
        let mut least_by = vec![Vec::new(); g];
        for e in 0..g {
            let m = norm.iter().map(|map| map[e]).min().unwrap();
            least[e] = m;
            least_by[e] = (0..norm.len() as u16).filter(|&v| norm[v as usize][e] == m).collect();
        }

        let types = spec.entry_classes.type_counts(spec.length);
        let type_of = elems
            .iter()
            .map(|e| {
                let t = e.cycle_structure().cycle_lengths;
                types.iter().position(|(u, _)| *u == t)
            })
            .collect();
        let product = *index
            .get(&spec.product)
            .ok_or_else(|| BraidError::InvalidSpec("product lies outside the ambient group".into()))?;

        let gen_idx: Vec<u8> = ambient.generators.iter().map(|s| index[s]).collect();
        let center = norm.iter().filter(|map| gen_idx.iter().all(|&s| map[s as usize] == s)).count() as u128;
        let product_centralizer = norm.iter().filter(|map| map[product as usize] == product).count() as u128;

        let mut engine = TableEngine {
            r: spec.length,
            elems,
            index,
            mul,
            inv,
            norm,
            least,
            least_by,
            type_of,
            types,
            product,
            join: Vec::new(),
            full: 0,
            center,
            product_centralizer,
        };
        engine.build_lattice()?;
        Ok(engine)
    }

    fn order(&self) -> usize {
        self.elems.len()
    }

    fn m(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.order() + b as usize]
    }

    fn closure(&self, gens: &[u8]) -> Bits {
        let mut bits: Bits = [0; 4];
        let id = self.index[&Perm::identity(self.elems[0].degree())];
        bits[id as usize / 64] |= 1 << (id % 64);
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            for &s in gens {
                let y = self.m(x, s);
                if bits[y as usize / 64] >> (y % 64) & 1 == 0 {
                    bits[y as usize / 64] |= 1 << (y % 64);
                    queue.push(y);
                }
            }
        }
        bits
    }

    fn build_lattice(&mut self) -> Result<(), BraidError> {
        let g = self.order();
        let mut subs: Vec<(Bits, Vec<u8>)> = vec![(self.closure(&[]), Vec::new())];
        let mut ids: HashMap<Bits, u32> = HashMap::from([(subs[0].0, 0)]);
        let mut join: Vec<u32> = Vec::new();
        let mut i = 0;
        while i < subs.len() {
            let (bits, gens) = subs[i].clone();
            for e in 0..g as u8 {
                if bits[e as usize / 64] >> (e % 64) & 1 == 1 {
                    join.push(i as u32);
                    continue;
                }
                let mut more = gens.clone();
                more.push(e);
                let h = self.closure(&more);
                let id = *ids.entry(h).or_insert_with(|| {
                    subs.push((h, more));
                    (subs.len() - 1) as u32
                });
                join.push(id);
            }
            if subs.len() > MAX_SUBGROUPS {
                return Err(BraidError::InvalidSpec(format!("more than {MAX_SUBGROUPS} subgroups")));
            }
            i += 1;
        }
        let all = subs.iter().position(|(b, _)| b.iter().map(|w| w.count_ones()).sum::<u32>() as usize == g);
        self.full = all.expect("the group itself is a subgroup") as u32;
        self.join = join;
        Ok(())
    }

    fn joined(&self, sub: u32, e: u8) -> u32 {
        self.join[sub as usize * self.order() + e as usize]
    }

    pub(crate) fn code_of(&self, entries: &[Perm]) -> Result<u128, BraidError> {
        let idx = entries
            .iter()
            .map(|p| self.index.get(p).copied())
            .collect::<Option<Vec<u8>>>()
            .ok_or_else(|| BraidError::InvalidSpec("entry outside the ambient group".into()))?;
        Ok(self.canon_with_ties(pack(idx.into_iter())).0)
    }

    pub(crate) fn decode(&self, code: u128) -> Vec<Perm> {
        (0..self.r).map(|k| self.elems[get(code, k) as usize].clone()).collect()
    }

    fn canon_with_ties(&self, code: u128) -> (u128, u64) {
        let first = get(code, 0) as usize;
        let mut best = u128::MAX;
        let mut ties = 0;
        for &v in &self.least_by[first] {
            let map = &self.norm[v as usize];
            let c = pack((0..self.r).map(|k| map[get(code, k) as usize]));
            if c < best {
                best = c;
                ties = 1;
            } else if c == best {
                ties += 1;
            }
        }
        debug_assert_eq!(get(best, 0), self.least[first]);
        (best, ties)
    }

    // Representatives of the orbits of `C_N(c)` on admissible first entries.
    fn first_entries(&self) -> Vec<u8> {
        let cent: Vec<&Vec<u8>> = self.norm.iter().filter(|map| map[self.product as usize] == self.product).collect();
        (0..self.order() as u8)
            .filter(|&e| self.type_of[e as usize].is_some_and(|j| self.types[j].1 > 0))
            .filter(|&e| cent.iter().all(|map| map[e as usize] >= e))
            .collect()
    }

    /// Canonical forms, sorted, and the number of raw tuples with product
    /// exactly `c` generating the group.
    pub(crate) fn enumerate(&self, config: &BraidConfig) -> Result<(Vec<u128>, u128), BraidError> {
        let r = self.r;
        let first = self.first_entries();
        let allowed: Vec<u8> = (0..self.order() as u8).filter(|&e| self.type_of[e as usize].is_some()).collect();
        let estimate = (first.len() as u128).saturating_mul((allowed.len() as u128).saturating_pow((r - 2) as u32));
        if estimate > config.candidate_cap {
            return Err(BraidError::CandidateCap { estimate, cap: config.candidate_cap });
        }
        let mut tasks: Vec<Vec<u8>> = Vec::new();
        for &f in &first {
            if r == 2 {
                tasks.push(vec![f]);
            } else {
                tasks.extend(allowed.iter().map(|&s| vec![f, s]));
            }
        }
        let locals: Vec<HashMap<u128, u64>> = tasks
            .par_iter()
            .map(|prefix| {
                let mut out = HashMap::new();
                let mut counts: Vec<usize> = self.types.iter().map(|(_, c)| *c).collect();
                let (mut prod, mut sub) = (self.index[&Perm::identity(self.elems[0].degree())], 0u32);
                let mut code = Vec::with_capacity(r);
                for &e in prefix {
                    let j = self.type_of[e as usize].unwrap();
                    if counts[j] == 0 {
                        return out;
                    }
                    counts[j] -= 1;
                    prod = self.m(prod, e);
                    sub = self.joined(sub, e);
                    code.push(e);
                }
                self.extend(&allowed, &mut counts, &mut code, prod, sub, &mut out);
                out
            })
            .collect();
        let mut all: HashMap<u128, u64> = HashMap::new();
        for local in locals {
            all.extend(local);
            check_memory(all.len(), 40, config)?;
        }
        let count = all.values().map(|&ties| self.product_centralizer / ties as u128).sum();
        let mut forms: Vec<u128> = all.into_keys().collect();
        forms.par_sort_unstable();
        Ok((forms, count))
    }

    fn extend(&self, allowed: &[u8], counts: &mut [usize], code: &mut Vec<u8>, prod: u8, sub: u32, out: &mut HashMap<u128, u64>) {
        if code.len() == self.r - 1 {
            let last = self.m(self.inv[prod as usize], self.product);
            let Some(j) = self.type_of[last as usize] else { return };
            if counts[j] != 1 || self.joined(sub, last) != self.full {
                return;
            }
            code.push(last);
            let (c, ties) = self.canon_with_ties(pack(code.iter().copied()));
            out.entry(c).or_insert(ties);
            code.pop();
            return;
        }
        for &e in allowed {
            let j = self.type_of[e as usize].unwrap();
            if counts[j] == 0 {
                continue;
            }
            counts[j] -= 1;
            code.push(e);
            self.extend(allowed, counts, code, self.m(prod, e), self.joined(sub, e), out);
            code.pop();
            counts[j] += 1;
        }
    }

    /// Tuples with product exactly `c` generating the group, counted by
    /// dynamic programming over (subgroup generated, partial product).
    fn count(&self) -> Result<u128, BraidError> {
        if self.types.len() != 1 {
            return Err(BraidError::InvalidSpec("counting supports a single entry class".into()));
        }
        let g = self.order();
        let subs = self.join.len() / g;
        let allowed: Vec<u8> = (0..g as u8).filter(|&e| self.type_of[e as usize].is_some()).collect();
        let id = self.index[&Perm::identity(self.elems[0].degree())] as usize;
        let mut cur = vec![0u128; subs * g];
        cur[id] = 1;
        for _ in 0..self.r {
            let mut next = vec![0u128; subs * g];
            for s in 0..subs {
                for p in 0..g {
                    let w = cur[s * g + p];
                    if w == 0 {
                        continue;
                    }
                    for &e in &allowed {
                        let t = self.joined(s as u32, e) as usize;
                        next[t * g + self.m(p as u8, e) as usize] += w;
                    }
                }
            }
            cur = next;
        }
        Ok(cur[self.full as usize * g + self.product as usize])
    }
}

impl Engine for TableEngine {
    type Code = u128;

    fn length(&self) -> usize {
        self.r
    }

    fn canon(&self, code: &u128) -> u128 {
        self.canon_with_ties(*code).0
    }

    fn moved(&self, code: &u128, i: usize, forward: bool) -> u128 {
        let (a, b) = (get(*code, i), get(*code, i + 1));
        let (x, y) = if forward {
            (b, self.m(self.m(self.inv[b as usize], a), b))
        } else {
            (self.m(self.m(a, b), self.inv[a as usize]), a)
        };
        let shift = |k: usize| 8 * (15 - k);
        let mask = !((0xffu128 << shift(i)) | (0xffu128 << shift(i + 1)));
        (code & mask) | (x as u128) << shift(i) | (y as u128) << shift(i + 1)
    }

    fn entries(&self, code: &u128) -> Vec<Perm> {
        self.decode(*code)
    }

    fn code_bytes(&self) -> u64 {
        40
    }
}

/// Exact counts for an ambient class with a single entry class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AmbientCount {
    /// Tuples with product exactly the prescribed one generating the group.
    pub tuples: u128,
    /// Classes of such tuples up to conjugation, i.e. canonical forms.
    pub forms: u128,
}

/// Counts an ambient class without enumerating it.
pub fn count_ambient_tuples(spec: &ClassSpec) -> Result<AmbientCount, BraidError> {
    spec.validate(super::DEFAULT_CANON_LIMIT)?;
    if spec.ambient.is_none() || !matches!(spec.entry_classes, EntryClasses::Uniform(_)) {
        return Err(BraidError::InvalidSpec("counting needs an ambient group and one entry class".into()));
    }
    let e = TableEngine::new(spec)?;
    let tuples = e.count()?;
    // C_N(c) acts on the tuples with stabilizer C_N(G)
    let scaled = tuples * e.center;
    if scaled % e.product_centralizer != 0 {
        return Err(BraidError::InvalidSpec("class count is not divisible by the centralizer".into()));
    }
    Ok(AmbientCount { tuples, forms: scaled / e.product_centralizer })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{linear_group, LinearGroupName};

    fn gl32_spec(r: usize, product: Perm) -> ClassSpec {
        let g = linear_group(LinearGroupName::GL32);
        ClassSpec::double_transpositions(7, r).with_product(product).with_ambient("gl32", g.generators)
    }

    #[test]
    fn tables() {
        let spec = gl32_spec(3, Perm::identity(7));
        let e = TableEngine::new(&spec).unwrap();
        assert_eq!(e.order(), 168);
        // GL_3(2) is self-normalizing in S_7 and has trivial center
        assert_eq!(e.norm.len(), 168);
        assert_eq!(e.center, 1);
        assert_eq!(e.join.len() / 168, 179);
        for a in 0..168u8 {
            assert_eq!(e.m(a, e.inv[a as usize]), e.index[&Perm::identity(7)]);
        }
    }

    #[test]
    fn moves_match_perm_moves() {
        let spec = gl32_spec(4, Perm::identity(7));
        let e = TableEngine::new(&spec).unwrap();
        let code = pack([3u8, 50, 77, 120].into_iter());
        for i in 0..3 {
            for fwd in [true, false] {
                let moved = e.decode(e.moved(&code, i, fwd));
                let perms = e.decode(code);
                let (a, b) = (&perms[i], &perms[i + 1]);
                let expect = if fwd { (b.clone(), a.conj(b)) } else { (b.conj(&a.inverse()), a.clone()) };
                assert_eq!((moved[i].clone(), moved[i + 1].clone()), expect);
            }
        }
    }

    #[test]
    fn enumeration_agrees_with_counting() {
        for r in [3, 4, 5] {
            let spec = gl32_spec(r, Perm::identity(7));
            let e = TableEngine::new(&spec).unwrap();
            let (forms, tuples) = e.enumerate(&BraidConfig::default()).unwrap();
            let c = count_ambient_tuples(&spec).unwrap();
            assert_eq!((forms.len() as u128, tuples), (c.forms, c.tuples), "r = {r}");
        }
    }
}
