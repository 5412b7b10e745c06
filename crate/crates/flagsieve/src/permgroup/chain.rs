//! Deterministic Schreier-Sims stabilizer chain.
//!
//! Base points are the smallest point moved at each level and transversals
//! are rebuilt by breadth-first search in point order, so repeated runs build
//! identical chains. No random sifting is used.
//!
//! A strong generator stored at level `at` fixes the first `at` base points,
//! so the generating set of level l is the union of everything stored at
//! levels l and deeper.

use super::perm::Permutation;
use std::collections::VecDeque;

struct Level {
    base: u32,
    /// Strong generators first sifted to this level.
    stored: Vec<Permutation>,
    /// transversal[x] = Some(u) with base^u = x.
    transversal: Vec<Option<Permutation>>,
}

pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn build(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabilizerChain {
            degree,
            levels: Vec::new(),
        };
        for g in generators {
            chain.insert(0, g.clone());
        }
        chain.close();
        chain
    }

    /// Generators of the level-l group: everything stored at levels >= l.
    fn level_generators(&self, level: usize) -> Vec<Permutation> {
        self.levels[level..]
            .iter()
            .flat_map(|l| l.stored.iter().cloned())
            .collect()
    }

    fn recompute_transversal(&mut self, level: usize) {
        let gens = self.level_generators(level);
        let base = self.levels[level].base;
        let mut transversal = vec![None; self.degree];
        transversal[base as usize] = Some(Permutation::identity(self.degree));
        let mut queue = VecDeque::from([base]);
        while let Some(x) = queue.pop_front() {
            for g in &gens {
                let y = g.apply(x);
                if transversal[y as usize].is_none() {
                    transversal[y as usize] =
                        Some(transversal[x as usize].as_ref().unwrap().then(g));
                    queue.push_back(y);
                }
            }
        }
        self.levels[level].transversal = transversal;
    }

    /// Sifts `g` through levels `from..`, returning the residue and the level
    /// at which sifting stopped.
    fn sift_from(&self, from: usize, mut g: Permutation) -> (Permutation, usize) {
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            if g.is_identity() {
                return (g, i);
            }
            let x = g.apply(level.base);
            match &level.transversal[x as usize] {
                Some(rep) => g = g.then(&rep.inverse()),
                None => return (g, i),
            }
        }
        (g, self.levels.len())
    }

    /// Sifts and, if a nontrivial residue remains, stores it at the level the
    /// sift stopped at and refreshes every transversal that level feeds.
    /// Returns the insertion level.
    fn insert(&mut self, start: usize, g: Permutation) -> Option<usize> {
        let (residue, at) = self.sift_from(start, g);
        if residue.is_identity() {
            return None;
        }
        if at == self.levels.len() {
            let base = residue.min_moved_point().expect("non-identity residue");
            self.levels.push(Level {
                base,
                stored: Vec::new(),
                transversal: vec![None; self.degree],
            });
        }
        self.levels[at].stored.push(residue);
        // the union generating sets of levels 0..=at all grew
        for level in (0..=at).rev() {
            self.recompute_transversal(level);
        }
        Some(at)
    }

    /// Verifies Schreier generators bottom-up until every one sifts to the
    /// identity, inserting residues as it goes; on insertion, verification
    /// restarts at the insertion level.
    fn close(&mut self) {
        if self.levels.is_empty() {
            return;
        }
        let mut i = self.levels.len() - 1;
        'outer: loop {
            let gens = self.level_generators(i);
            let points: Vec<u32> = (0..self.degree as u32)
                .filter(|&x| self.levels[i].transversal[x as usize].is_some())
                .collect();
            for &x in &points {
                for s in &gens {
                    let schreier = {
                        let level = &self.levels[i];
                        let rep = level.transversal[x as usize].as_ref().unwrap();
                        let rep_img = level.transversal[s.apply(x) as usize]
                            .as_ref()
                            .expect("transversal closed under level generators");
                        rep.then(s).then(&rep_img.inverse())
                    };
                    if let Some(at) = self.insert(i + 1, schreier) {
                        i = at;
                        continue 'outer;
                    }
                }
            }
            if i == 0 {
                break;
            }
            i -= 1;
        }
    }

    pub fn order(&self) -> u128 {
        self.levels
            .iter()
            .map(|l| l.transversal.iter().filter(|t| t.is_some()).count() as u128)
            .product()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (residue, _) = self.sift_from(0, p.clone());
        residue.is_identity()
    }
}
