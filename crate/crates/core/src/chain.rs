//! Deterministic Schreier–Sims stabilizer chains.
//!
//! Base points are taken from an optional prescribed prefix, then extended
//! with the smallest point moved by whichever strong generator needs it.

use std::borrow::Cow;

use num_bigint::BigUint;

use crate::perm::Permutation;

/// Explicit transversals are kept while `orbit length * degree` stays below this.
const EXPLICIT_BUDGET: usize = 1 << 24;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    pub base: usize,
    pub gens: Vec<Permutation>,
    inv_gens: Vec<Permutation>,
    pub orbit: Vec<usize>,
    /// `sv[x] = -1` outside the orbit, `-2` at the base point, otherwise the
    /// index of the generator whose application reached `x` from its parent.
    sv: Vec<i32>,
    reps: Option<Vec<Option<Permutation>>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut lvl = Level {
            base,
            gens: Vec::new(),
            inv_gens: Vec::new(),
            orbit: Vec::new(),
            sv: Vec::new(),
            reps: None,
        };
        lvl.recompute(degree);
        lvl
    }

    fn add_gen(&mut self, g: Permutation, degree: usize) {
        self.inv_gens.push(g.inverse());
        self.gens.push(g);
        self.recompute(degree);
    }

    fn recompute(&mut self, degree: usize) {
        let mut sv = vec![-1i32; degree];
        sv[self.base] = -2;
        let mut orbit = vec![self.base];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for (k, g) in self.gens.iter().enumerate() {
                let y = g.apply(x);
                if sv[y] == -1 {
                    sv[y] = k as i32;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        let reps = if orbit.len().saturating_mul(degree) <= EXPLICIT_BUDGET {
            let mut reps: Vec<Option<Permutation>> = vec![None; degree];
            reps[self.base] = Some(Permutation::identity(degree));
            // orbit is in BFS order, so parents precede children
            for &x in orbit.iter().skip(1) {
                let k = sv[x] as usize;
                let parent = self.inv_gens[k].apply(x);
                let r = reps[parent].as_ref().unwrap().mul_unchecked(&self.gens[k]);
                reps[x] = Some(r);
            }
            Some(reps)
        } else {
            None
        };
        self.sv = sv;
        self.orbit = orbit;
        self.reps = reps;
    }

    #[inline]
    pub fn in_orbit(&self, x: usize) -> bool {
        self.sv[x] != -1
    }

    /// Coset representative `u` with `base^u = x`.
    pub fn rep(&self, x: usize) -> Option<Cow<'_, Permutation>> {
        if !self.in_orbit(x) {
            return None;
        }
        if let Some(reps) = &self.reps {
            return reps[x].as_ref().map(Cow::Borrowed);
        }
        let mut word = Vec::new();
        let mut y = x;
        while self.sv[y] != -2 {
            let k = self.sv[y] as usize;
            word.push(k);
            y = self.inv_gens[k].apply(y);
        }
        let degree = self.sv.len();
        let mut u = Permutation::identity(degree);
        for &k in word.iter().rev() {
            u = u.mul_unchecked(&self.gens[k]);
        }
        Some(Cow::Owned(u))
    }

    /// `h · u_x⁻¹` where `x = base^h`.
    fn strip_step(&self, h: &Permutation, x: usize) -> Permutation {
        if let Some(reps) = &self.reps {
            let u = reps[x].as_ref().unwrap();
            let uinv = u.inverse();
            return h.mul_unchecked(&uinv);
        }
        let mut h = h.clone();
        let mut y = x;
        while self.sv[y] != -2 {
            let k = self.sv[y] as usize;
            h = h.mul_unchecked(&self.inv_gens[k]);
            y = self.inv_gens[k].apply(y);
        }
        h
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    pub degree: usize,
    pub levels: Vec<Level>,
}

impl StabChain {
    /// Builds a chain for `<gens>` whose base starts with `prefix`.
    pub fn build(degree: usize, gens: &[Permutation], prefix: &[usize]) -> StabChain {
        let mut chain = StabChain {
            degree,
            levels: prefix.iter().map(|&b| Level::new(b, degree)).collect(),
        };
        let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        for g in &gens {
            // each generator must move some base point
            if chain.levels.iter().all(|l| g.apply(l.base) == l.base) {
                let b = g.first_moved().unwrap();
                chain.levels.push(Level::new(b, degree));
            }
        }
        for g in gens {
            // g belongs to every level up to the first base point it moves
            for lvl in chain.levels.iter_mut() {
                lvl.inv_gens.push(g.inverse());
                lvl.gens.push(g.clone());
                if g.apply(lvl.base) != lvl.base {
                    break;
                }
            }
        }
        for lvl in chain.levels.iter_mut() {
            lvl.recompute(degree);
        }
        chain.complete_from(chain.levels.len());
        chain
    }

    /// Runs the Schreier generator checks from level `start - 1` downwards.
    fn complete_from(&mut self, start: usize) {
        let mut i = start as isize - 1;
        while i >= 0 {
            let li = i as usize;
            match self.find_missing(li) {
                Some((residue, drop)) => {
                    self.insert(residue, li + 1, drop);
                    i = drop.min(self.levels.len() - 1) as isize;
                }
                None => i -= 1,
            }
        }
    }

    /// First Schreier generator at level `li` that fails to sift below it.
    fn find_missing(&self, li: usize) -> Option<(Permutation, usize)> {
        let lvl = &self.levels[li];
        for &beta in &lvl.orbit {
            let u_beta = lvl.rep(beta).unwrap();
            for (k, s) in lvl.gens.iter().enumerate() {
                let gamma = s.apply(beta);
                // tree edges give the identity
                if lvl.sv[gamma] == k as i32 {
                    continue;
                }
                let us = u_beta.mul_unchecked(s);
                let h = lvl.strip_step(&us, gamma);
                let (res, drop) = self.strip_from(h, li + 1);
                if !res.is_identity() {
                    return Some((res, drop));
                }
            }
        }
        None
    }

    /// Adds a residue that fixes the first `from` base points and dropped out
    /// of the chain at level `drop`.
    fn insert(&mut self, residue: Permutation, from: usize, drop: usize) {
        if drop == self.levels.len() {
            let b = residue.first_moved().unwrap();
            self.levels.push(Level::new(b, self.degree));
        }
        for l in from..=drop {
            self.levels[l].add_gen(residue.clone(), self.degree);
        }
    }

    /// Sifts `h` from level `from`; returns the residue and the level at
    /// which sifting stopped (`levels.len()` if it passed every level).
    pub fn strip_from(&self, mut h: Permutation, from: usize) -> (Permutation, usize) {
        for (l, lvl) in self.levels.iter().enumerate().skip(from) {
            let x = h.apply(lvl.base);
            if !lvl.in_orbit(x) {
                return (h, l);
            }
            h = lvl.strip_step(&h, x);
        }
        (h, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.strip_from(g.clone(), 0).0.is_identity()
    }

    /// Adds a generator to the group; returns false if it was already a member.
    pub fn extend(&mut self, g: &Permutation) -> bool {
        let (res, drop) = self.strip_from(g.clone(), 0);
        if res.is_identity() {
            return false;
        }
        self.insert(res, 0, drop);
        self.complete_from(drop.min(self.levels.len() - 1) + 1);
        true
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.levels.first().map(|l| l.gens.clone()).unwrap_or_default()
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    /// Chain of the stabilizer of the first base point.
    pub fn tail(&self) -> StabChain {
        StabChain {
            degree: self.degree,
            levels: self.levels.iter().skip(1).cloned().collect(),
        }
    }

    /// Every element exactly once, as products `u_{k-1} ⋯ u_1 u_0`.
    pub fn for_each_element(&self, mut f: impl FnMut(&Permutation)) {
        fn rec(
            chain: &StabChain,
            level: usize,
            prefix: &Permutation,
            f: &mut dyn FnMut(&Permutation),
        ) {
            if level == usize::MAX {
                f(prefix);
                return;
            }
            let lvl = &chain.levels[level];
            for &x in &lvl.orbit {
                let u = lvl.rep(x).unwrap();
                let next = prefix.mul_unchecked(&u);
                rec(chain, level.wrapping_sub(1), &next, f);
            }
        }
        let id = Permutation::identity(self.degree);
        if self.levels.is_empty() {
            f(&id);
            return;
        }
        rec(self, self.levels.len() - 1, &id, &mut f);
    }
}
