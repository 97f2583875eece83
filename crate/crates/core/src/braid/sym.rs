//! Classes of tuples in `S_n` given by entry cycle types, encoded as byte
//! strings of images.

use std::collections::HashMap;

use rayon::prelude::*;

use super::canon::{canonicalize, relabel};
use super::orbits::{check_memory, Engine};
use super::{encode, BraidConfig, BraidError, ClassSpec, Conjugation, GroupFilter};
use crate::nielsen::NielsenTuple;
use crate::perm::{classify_group, conjugacy_class, factorial, Perm, StabChain};

pub(crate) struct SymEngine {
    n: usize,
    r: usize,
    types: Vec<(Vec<usize>, usize)>,
    product: Vec<u8>,
    filter: GroupFilter,
    inner: bool,
}

fn cycle_type(p: &[u8]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        if len > 1 {
            out.push(len);
        }
    }
    out.sort_unstable();
    out
}

/// `|C_{S_n}(p)| = Π_L L^{m_L} m_L!`.
fn centralizer_size(p: &[u8]) -> u128 {
    let mut lengths = cycle_type(p);
    let moved: usize = lengths.iter().sum();
    lengths.extend(std::iter::repeat_n(1, p.len() - moved));
    let mut mult: HashMap<usize, usize> = HashMap::new();
    for l in lengths {
        *mult.entry(l).or_default() += 1;
    }
    mult.into_iter().map(|(l, m)| (l as u128).pow(m as u32) * factorial(m)).product()
}

pub(crate) fn is_transitive(code: &[u8], n: usize) -> bool {
    let mut parent: Vec<u8> = (0..n as u8).collect();
    fn find(parent: &mut [u8], mut x: u8) -> u8 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    let mut components = n;
    for chunk in code.chunks_exact(n) {
        for (x, &y) in chunk.iter().enumerate() {
            let (a, b) = (find(&mut parent, x as u8), find(&mut parent, y));
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
                components -= 1;
            }
        }
    }
    components == 1
}

struct Lists {
    classes: Vec<Vec<Vec<u8>>>,
    type_index: HashMap<Vec<usize>, usize>,
}

impl SymEngine {
    pub(crate) fn new(spec: &ClassSpec) -> SymEngine {
        SymEngine {
            n: spec.degree,
            r: spec.length,
            types: spec.entry_classes.type_counts(spec.length),
            product: encode(std::slice::from_ref(&spec.product)),
            filter: spec.group_filter,
            inner: spec.conjugation == Conjugation::Inner,
        }
    }

    pub(crate) fn code_of(&self, t: &NielsenTuple) -> Vec<u8> {
        self.canon(&encode(t.entries()))
    }

    fn lists(&self) -> Result<Lists, BraidError> {
        let classes = self
            .types
            .iter()
            .map(|(t, _)| Ok(conjugacy_class(self.n, t)?.iter().map(|p| encode(std::slice::from_ref(p))).collect()))
            .collect::<Result<Vec<Vec<Vec<u8>>>, BraidError>>()?;
        let type_index = self.types.iter().enumerate().map(|(j, (t, _))| (t.clone(), j)).collect();
        Ok(Lists { classes, type_index })
    }

    fn canon_weighted(&self, code: &[u8]) -> (Vec<u8>, u128) {
        if self.inner {
            let (c, aut, cent) = self.inner_canon(code);
            (c, cent / aut)
        } else {
            let (c, aut) = canonicalize(code, self.n);
            (c, centralizer_size(&self.product) / aut as u128)
        }
    }

    // Least conjugate under the generated group; also the stabilizer order
    // and the centralizer order of the product inside that group.
    fn inner_canon(&self, code: &[u8]) -> (Vec<u8>, u128, u128) {
        let n = self.n;
        let perms = super::decode(code, n);
        let elements = StabChain::new(&perms, n).elements();
        let product = crate::perm::product(perms.iter()).unwrap();
        let mut best: Option<Vec<u8>> = None;
        let mut ties = 0u128;
        let mut cent = 0u128;
        for g in &elements {
            if product.conj(g) == product {
                cent += 1;
            }
            let c = relabel(code, n, &g.to_bytes());
            match &best {
                Some(b) if c > *b => {}
                Some(b) if c == *b => ties += 1,
                _ => {
                    best = Some(c);
                    ties = 1;
                }
            }
        }
        (best.unwrap(), ties, cent)
    }

    fn passes_filter(&self, code: &[u8]) -> bool {
        match self.filter {
            GroupFilter::Transitive => true,
            GroupFilter::Kind(k) => {
                classify_group(&super::decode(code, self.n)).map(|id| id.kind == k).unwrap_or(false)
            }
        }
    }

    /// Canonical forms of the class, sorted, with the raw tuple count.
    pub(crate) fn enumerate(&self, config: &BraidConfig) -> Result<(Vec<Vec<u8>>, u128), BraidError> {
        let (n, r) = (self.n, self.r);
        let lists = self.lists()?;
        let reduce_first = !self.inner && self.product.iter().enumerate().all(|(x, &y)| x == y as usize);
        let mut first: Vec<(usize, &[u8])> = Vec::new();
        for (j, (_, count)) in self.types.iter().enumerate() {
            if *count == 0 {
                continue;
            }
            if reduce_first {
                // every class tuple is conjugate to one starting with the
                // least element of its first entry's class
                first.push((j, &lists.classes[j][0]));
            } else {
                first.extend(lists.classes[j].iter().map(|c| (j, c.as_slice())));
            }
        }
        let widest: u128 = lists.classes.iter().map(|c| c.len() as u128).sum();
        let estimate = (first.len() as u128).saturating_mul(widest.saturating_pow((r - 2) as u32));
        if estimate > config.candidate_cap {
            return Err(BraidError::CandidateCap { estimate, cap: config.candidate_cap });
        }

        let mut tasks: Vec<Vec<(usize, &[u8])>> = Vec::new();
        for f in &first {
            if r == 2 {
                tasks.push(vec![*f]);
                continue;
            }
            for (j, class) in lists.classes.iter().enumerate() {
                let need = self.types[j].1 - usize::from(f.0 == j);
                if need > 0 {
                    tasks.extend(class.iter().map(|c| vec![*f, (j, c.as_slice())]));
                }
            }
        }

        let locals: Vec<HashMap<Vec<u8>, u128>> = tasks
            .par_iter()
            .map(|prefix| {
                let mut out = HashMap::new();
                let mut counts: Vec<usize> = self.types.iter().map(|(_, c)| *c).collect();
                let mut code = Vec::with_capacity(n * r);
                let mut prod: Vec<u8> = (0..n as u8).collect();
                for &(j, p) in prefix {
                    counts[j] -= 1;
                    code.extend_from_slice(p);
                    prod = prod.iter().map(|&x| p[x as usize]).collect();
                }
                self.extend(&lists, &mut counts, &mut code, &prod, &mut out);
                out
            })
            .collect();

        let mut all: HashMap<Vec<u8>, u128> = HashMap::new();
        for local in locals {
            all.extend(local);
            check_memory(all.len(), (n * r) as u64 + 48, config)?;
        }
        let mut forms: Vec<(Vec<u8>, u128)> = all.into_par_iter().filter(|(c, _)| self.passes_filter(c)).collect();
        forms.par_sort_unstable();
        let count = forms.iter().map(|(_, w)| *w).sum();
        Ok((forms.into_iter().map(|(c, _)| c).collect(), count))
    }

    fn extend(&self, lists: &Lists, counts: &mut [usize], code: &mut Vec<u8>, prod: &[u8], out: &mut HashMap<Vec<u8>, u128>) {
        let n = self.n;
        if code.len() == n * (self.r - 1) {
            // σ_r = P⁻¹ c
            let mut inv = vec![0u8; n];
            for (x, &y) in prod.iter().enumerate() {
                inv[y as usize] = x as u8;
            }
            let last: Vec<u8> = inv.iter().map(|&y| self.product[y as usize]).collect();
            let Some(&j) = lists.type_index.get(&cycle_type(&last)) else { return };
            if counts[j] != 1 {
                return;
            }
            code.extend_from_slice(&last);
            if is_transitive(code, n) {
                let (c, w) = self.canon_weighted(code);
                out.entry(c).or_insert(w);
            }
            code.truncate(n * (self.r - 1));
            return;
        }
        for j in 0..lists.classes.len() {
            if counts[j] == 0 {
                continue;
            }
            counts[j] -= 1;
            for p in &lists.classes[j] {
                let next: Vec<u8> = prod.iter().map(|&x| p[x as usize]).collect();
                code.extend_from_slice(p);
                self.extend(lists, counts, code, &next, out);
                code.truncate(code.len() - n);
            }
            counts[j] += 1;
        }
    }
}

impl Engine for SymEngine {
    type Code = Vec<u8>;

    fn length(&self) -> usize {
        self.r
    }

    fn canon(&self, code: &Vec<u8>) -> Vec<u8> {
        if self.inner {
            self.inner_canon(code).0
        } else {
            canonicalize(code, self.n).0
        }
    }

    fn moved(&self, code: &Vec<u8>, i: usize, forward: bool) -> Vec<u8> {
        let n = self.n;
        let mut out = code.clone();
        let (a, b) = (&code[i * n..(i + 1) * n], &code[(i + 1) * n..(i + 2) * n]);
        if forward {
            // (b, b⁻¹ a b)
            out[i * n..(i + 1) * n].copy_from_slice(b);
            for y in 0..n {
                out[(i + 1) * n + b[y] as usize] = b[a[y] as usize];
            }
        } else {
            // (a b a⁻¹, a)
            let mut ainv = vec![0u8; n];
            for (x, &y) in a.iter().enumerate() {
                ainv[y as usize] = x as u8;
            }
            for x in 0..n {
                out[i * n + ainv[x] as usize] = ainv[b[x] as usize];
            }
            out[(i + 1) * n..(i + 2) * n].copy_from_slice(a);
        }
        out
    }

    fn entries(&self, code: &Vec<u8>) -> Vec<Perm> {
        super::decode(code, self.n)
    }

    fn code_bytes(&self) -> u64 {
        (self.n * self.r) as u64 + 48
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braid_move, Direction};
    use crate::nielsen::make_tuple;
    use crate::perm::parse_perm;

    #[test]
    fn byte_moves_match_tuple_moves() {
        let n = 5;
        let mut entries: Vec<Perm> = ["(1,2,3)", "(3,4,5)", "(1,5,2)"].iter().map(|s| parse_perm(s, n).unwrap()).collect();
        entries.push(crate::perm::product(entries.iter()).unwrap().inverse());
        let t = make_tuple(entries, n).unwrap();
        let spec = ClassSpec::new(n, t.len(), super::super::EntryClasses::Uniform(vec![3]));
        let e = SymEngine::new(&spec);
        let code = encode(t.entries());
        for i in 1..t.len() {
            for (dir, fwd) in [(Direction::Forward, true), (Direction::Inverse, false)] {
                let expect = encode(braid_move(&t, i, dir).unwrap().entries());
                assert_eq!(e.moved(&code, i - 1, fwd), expect);
            }
        }
    }

    #[test]
    fn centralizer_sizes() {
        assert_eq!(centralizer_size(&[0, 1, 2, 3]), 24);
        assert_eq!(centralizer_size(&[1, 0, 2, 3]), 4);
        assert_eq!(centralizer_size(&[1, 0, 3, 2, 4]), 8);
        assert_eq!(centralizer_size(&[1, 2, 0, 3, 4, 5]), 18);
    }
}
