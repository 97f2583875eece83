//! Lex-least conjugate of a tuple under relabeling by `S_n`.
//!
//! A tuple is encoded as the concatenated 0-based image sequences of its
//! entries. Relabeling by `π` sends the image sequence of `σ` to that of
//! `π⁻¹σπ`. The least first entry is forced up to the centralizer of `σ_1`:
//! fixed points take the lowest labels, then the cycles in order of length,
//! each cycle on consecutive labels. Only those relabelings are searched,
//! pruned against the best candidate on the second entry.

const UNSET: u8 = u8::MAX;

struct Search<'a> {
    code: &'a [u8],
    n: usize,
    groups: Vec<Vec<Vec<u8>>>,
    used: Vec<Vec<bool>>,
    label_of: Vec<u8>,
    point_of: Vec<u8>,
    best: Vec<u8>,
    cand: Vec<u8>,
    have_best: bool,
    ties: u64,
}

/// Returns the canonical code and the number of relabelings attaining it,
/// which is the order of the centralizer of the tuple in `S_n`.
pub(crate) fn canonicalize(code: &[u8], n: usize) -> (Vec<u8>, u64) {
    debug_assert!(n < UNSET as usize && code.len().is_multiple_of(n) && !code.is_empty());
    let sigma = &code[..n];
    let mut seen = vec![false; n];
    let mut by_len: Vec<Vec<Vec<u8>>> = vec![Vec::new(); n + 1];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x as u8);
            x = sigma[x] as usize;
        }
        by_len[cycle.len()].push(cycle);
    }
    let groups: Vec<Vec<Vec<u8>>> = by_len.into_iter().filter(|g| !g.is_empty()).collect();
    let used = groups.iter().map(|g| vec![false; g.len()]).collect();
    let mut s = Search {
        code,
        n,
        groups,
        used,
        label_of: vec![UNSET; n],
        point_of: Vec::with_capacity(n),
        best: vec![0; code.len()],
        cand: vec![0; code.len()],
        have_best: false,
        ties: 0,
    };
    s.dfs(0, 0);
    (s.best, s.ties)
}

impl Search<'_> {
    fn dfs(&mut self, g: usize, placed: usize) {
        if self.point_of.len() == self.n {
            self.leaf();
            return;
        }
        if placed == self.groups[g].len() {
            self.dfs(g + 1, 0);
            return;
        }
        let len = self.groups[g][0].len();
        for b in 0..self.groups[g].len() {
            if self.used[g][b] {
                continue;
            }
            self.used[g][b] = true;
            for rot in 0..len {
                let base = self.point_of.len();
                for k in 0..len {
                    let p = self.groups[g][b][(rot + k) % len];
                    self.label_of[p as usize] = (base + k) as u8;
                    self.point_of.push(p);
                }
                if !self.pruned() {
                    self.dfs(g, placed + 1);
                }
                for _ in 0..len {
                    let p = self.point_of.pop().unwrap();
                    self.label_of[p as usize] = UNSET;
                }
            }
            self.used[g][b] = false;
        }
    }

    // Whether the partial relabeling already loses to `best` on entry 2.
    fn pruned(&self) -> bool {
        if !self.have_best || self.code.len() == self.n {
            return false;
        }
        let (n, m) = (self.n, self.point_of.len());
        for x in 0..m {
            let image = self.code[n + self.point_of[x] as usize];
            let l = self.label_of[image as usize];
            let b = self.best[n + x];
            if l == UNSET {
                // its label will be at least m
                return (b as usize) < m;
            }
            if l != b {
                return l > b;
            }
        }
        false
    }

    fn leaf(&mut self) {
        let n = self.n;
        for (k, chunk) in self.code.chunks_exact(n).enumerate() {
            for x in 0..n {
                self.cand[k * n + x] = self.label_of[chunk[self.point_of[x] as usize] as usize];
            }
        }
        let ord = if self.have_best { self.cand[n..].cmp(&self.best[n..]) } else { std::cmp::Ordering::Less };
        match ord {
            std::cmp::Ordering::Less => {
                std::mem::swap(&mut self.best, &mut self.cand);
                self.have_best = true;
                self.ties = 1;
            }
            std::cmp::Ordering::Equal => self.ties += 1,
            std::cmp::Ordering::Greater => {}
        }
    }
}

/// Componentwise relabeling of a tuple code: entry `σ` becomes `π⁻¹σπ`.
pub(crate) fn relabel(code: &[u8], n: usize, pi: &[u8]) -> Vec<u8> {
    let mut out = vec![0u8; code.len()];
    for (k, chunk) in code.chunks_exact(n).enumerate() {
        for x in 0..n {
            out[k * n + pi[x] as usize] = pi[chunk[x] as usize];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

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

    // brute force over all of S_n
    fn oracle(code: &[u8], n: usize) -> (Vec<u8>, u64) {
        let conj: Vec<Vec<u8>> = all_perms(n).iter().map(|pi| relabel(code, n, pi)).collect();
        let min = conj.iter().min().unwrap().clone();
        let count = conj.iter().filter(|c| **c == min).count() as u64;
        (min, count)
    }

    #[test]
    fn transposition_pair_in_s3() {
        // (2,3),(2,3): images [1,3,2] twice, already least
        let code = [0, 2, 1, 0, 2, 1];
        assert_eq!(canonicalize(&code, 3), (code.to_vec(), 2));
        assert_eq!(oracle(&code, 3).0, code.to_vec());
        // (1,2),(1,2) is not least
        assert_eq!(canonicalize(&[1, 0, 2, 1, 0, 2], 3).0, code.to_vec());
    }

    #[test]
    fn matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=6);
            let r = rng.gen_range(1..=4);
            let perms = all_perms(n);
            let code: Vec<u8> = (0..r).flat_map(|_| perms[rng.gen_range(0..perms.len())].clone()).collect();
            assert_eq!(canonicalize(&code, n), oracle(&code, n), "{code:?}");
        }
    }

    #[test]
    fn many_fixed_points() {
        // disjoint transpositions in S_7: each is centralized separately, 2·2·3!
        let mut a: Vec<u8> = (0..7).collect();
        a.swap(0, 1);
        let mut b: Vec<u8> = (0..7).collect();
        b.swap(5, 6);
        let code: Vec<u8> = a.iter().chain(&b).copied().collect();
        assert_eq!(canonicalize(&code, 7), oracle(&code, 7));
        assert_eq!(canonicalize(&code, 7).1, 24);
    }
}
