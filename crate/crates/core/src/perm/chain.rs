use super::Perm;

/// One level of a stabilizer chain: the stabilizer of the earlier base
/// points, its orbit of `point`, and coset representatives.
#[derive(Debug, Clone)]
struct Level {
    point: usize,
    gens: Vec<Perm>,
    /// `transversal[b]` maps `point` to `b`, when `b` is in the orbit.
    transversal: Vec<Option<Perm>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(point: usize, n: usize) -> Level {
        let mut transversal = vec![None; n];
        transversal[point] = Some(Perm::identity(n));
        Level { point, gens: Vec::new(), transversal, orbit: vec![point] }
    }

    fn rebuild_orbit(&mut self, n: usize) {
        self.transversal = vec![None; n];
        self.transversal[self.point] = Some(Perm::identity(n));
        self.orbit = vec![self.point];
        let mut i = 0;
        while i < self.orbit.len() {
            let b = self.orbit[i];
            for s in &self.gens {
                let c = s.raw()[b] as usize;
                if self.transversal[c].is_none() {
                    let u = self.transversal[b].as_ref().unwrap().then(s);
                    self.transversal[c] = Some(u);
                    self.orbit.push(c);
                }
            }
            i += 1;
        }
    }
}

/// Stabilizer chain built by the deterministic Schreier–Sims algorithm over
/// a full base (every point appears once, in the given order).
#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Chain with base `1, 2, …, n`.
    pub fn new(gens: &[Perm], degree: usize) -> StabChain {
        StabChain::with_base(gens, degree, &(1..=degree).collect::<Vec<_>>())
    }

    /// Chain with the given base ordering (1-based points). Points missing
    /// from `base` are appended in increasing order.
    pub fn with_base(gens: &[Perm], degree: usize, base: &[usize]) -> StabChain {
        let mut order: Vec<usize> = base.iter().map(|p| p - 1).collect();
        let mut present = vec![false; degree];
        for &b in &order {
            present[b] = true;
        }
        order.extend((0..degree).filter(|&p| !present[p]));

        let mut levels: Vec<Level> = order.iter().map(|&b| Level::new(b, degree)).collect();
        let mut strong: Vec<Perm> = Vec::new();
        for g in gens {
            assert_eq!(g.degree(), degree, "generator degree mismatch");
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        for (i, level) in levels.iter_mut().enumerate() {
            level.gens = strong
                .iter()
                .filter(|s| order[..i].iter().all(|&b| s.raw()[b] as usize == b))
                .cloned()
                .collect();
            level.rebuild_orbit(degree);
        }

        let mut chain = StabChain { degree, levels };
        if chain.levels.is_empty() {
            return chain;
        }
        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            match chain.find_failing_schreier_generator(lvl) {
                None => i -= 1,
                Some((residue, j)) => {
                    for l in lvl + 1..=j {
                        chain.levels[l].gens.push(residue.clone());
                        chain.levels[l].rebuild_orbit(degree);
                    }
                    i = j as isize;
                }
            }
        }
        chain
    }

    fn find_failing_schreier_generator(&self, lvl: usize) -> Option<(Perm, usize)> {
        let level = &self.levels[lvl];
        for &b in &level.orbit {
            let ub = level.transversal[b].as_ref().unwrap();
            for s in &level.gens {
                let c = s.raw()[b] as usize;
                let uc = level.transversal[c].as_ref().unwrap();
                let h = ub.then(s).then(&uc.inverse());
                if h.is_identity() {
                    continue;
                }
                let (residue, j) = self.strip(h, lvl + 1);
                if !residue.is_identity() {
                    return Some((residue, j));
                }
            }
        }
        None
    }

    /// Sifts `g` from level `from`; returns the residue and the level at
    /// which sifting stopped (`levels.len()` when it went through).
    fn strip(&self, mut g: Perm, from: usize) -> (Perm, usize) {
        for l in from..self.levels.len() {
            let level = &self.levels[l];
            let b = g.raw()[level.point] as usize;
            match &level.transversal[b] {
                None => return (g, l),
                Some(u) => g = g.then(&u.inverse()),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.strip(g.clone(), 0).0.is_identity()
    }

    /// Orbit (1-based, sorted) of the first base point.
    pub fn base_orbit(&self) -> Vec<usize> {
        let mut orbit: Vec<usize> = self
            .levels
            .first()
            .map(|l| l.orbit.iter().map(|p| p + 1).collect())
            .unwrap_or_default();
        orbit.sort_unstable();
        orbit
    }

    /// Strong generators of the stabilizer of the first base point.
    pub fn first_stabilizer_generators(&self) -> Vec<Perm> {
        self.levels.get(1).map(|l| l.gens.clone()).unwrap_or_default()
    }

    /// Every group element, sorted by image sequence. Intended for small groups.
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            if level.orbit.len() == 1 {
                continue;
            }
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for g in &out {
                for &b in &level.orbit {
                    next.push(g.then(level.transversal[b].as_ref().unwrap()));
                }
            }
            out = next;
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_perm;

    fn p(s: &str, n: usize) -> Perm {
        parse_perm(s, n).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(StabChain::new(&[p("(1,2)", 2)], 2).order(), 2);
        assert_eq!(StabChain::new(&[p("(1,2,3)", 5), p("(1,4,5)", 5)], 5).order(), 60);
        assert_eq!(StabChain::new(&[p("(1,2)", 5), p("(1,2,3,4,5)", 5)], 5).order(), 120);
        assert_eq!(StabChain::new(&[p("(1,2)(3,4)", 4), p("(1,3)(2,4)", 4)], 4).order(), 4);
        assert_eq!(StabChain::new(&[], 3).order(), 1);
    }

    #[test]
    fn elements_and_membership() {
        let gens = [p("(1,2,3)", 4), p("(2,3,4)", 4)];
        let chain = StabChain::new(&gens, 4);
        let elts = chain.elements();
        assert_eq!(elts.len(), 12);
        assert!(elts.iter().all(Perm::is_even));
        assert!(chain.contains(&p("(1,2)(3,4)", 4)));
        assert!(!chain.contains(&p("(1,2)", 4)));
    }

    #[test]
    fn custom_base_order() {
        let gens = [p("(1,2,3,4,5,6,7)", 7), p("(1,2)", 7)];
        let chain = StabChain::with_base(&gens, 7, &[4]);
        assert_eq!(chain.order(), 5040);
        let stab = chain.first_stabilizer_generators();
        assert!(stab.iter().all(|g| g.apply(4) == 4));
        assert_eq!(StabChain::new(&stab, 7).order(), 720);
    }
}
