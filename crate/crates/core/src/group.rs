//! Finitely generated permutation groups backed by a stabilizer chain.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chain::StabChain;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest supported degree.
pub const MAX_DEGREE: usize = 100_000;

/// Desk-scale bounds shared by the enumeration-heavy algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Limits {
    /// Largest group order that may be enumerated element by element.
    pub enum_cap: usize,
    /// Largest vertex count for automorphism and isomorphism searches.
    pub graph_max: usize,
    /// Largest orbit of vertex tuples held in memory.
    pub tuple_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enum_cap: 100_000,
            graph_max: 64,
            tuple_cap: 10_000_000,
        }
    }
}

struct Inner {
    degree: usize,
    gens: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

/// A permutation group given by generators. Cloning is cheap.
#[derive(Clone)]
pub struct Group(Arc<Inner>);

impl Group {
    /// Builds a group and its verified stabilizer chain.
    pub fn new(gens: Vec<Permutation>) -> Result<Group> {
        let first = gens.first().ok_or(Error::NoGenerators)?;
        let degree = first.degree();
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(degree, MAX_DEGREE));
        }
        let g = Group::from_parts(degree, gens, None);
        g.verify_chain()?;
        Ok(g)
    }

    /// Generators from cycle-notation strings.
    pub fn from_cycles(degree: usize, gens: &[&str]) -> Result<Group> {
        let gens = gens
            .iter()
            .map(|t| Permutation::parse_cycles(t, degree))
            .collect::<Result<Vec<_>>>()?;
        Group::new(gens)
    }

    pub fn trivial(degree: usize) -> Group {
        Group::from_parts(degree, vec![Permutation::identity(degree)], None)
    }

    pub(crate) fn from_parts(degree: usize, gens: Vec<Permutation>, chain: Option<StabChain>) -> Group {
        let gens = if gens.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            gens
        };
        let cell = OnceLock::new();
        if let Some(c) = chain {
            let _ = cell.set(c);
        }
        Group(Arc::new(Inner {
            degree,
            gens,
            chain: cell,
        }))
    }

    /// Subgroup generated by `gens` inside a group of the given degree.
    pub(crate) fn generated(degree: usize, gens: Vec<Permutation>) -> Group {
        let gens: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Group::from_parts(degree, gens, None)
    }

    pub(crate) fn chain(&self) -> &StabChain {
        self.0
            .chain
            .get_or_init(|| StabChain::build(self.0.degree, &self.0.gens, &[]))
    }

    /// Sifts the generators and a few deterministic random products.
    fn verify_chain(&self) -> Result<()> {
        let chain = self.chain();
        for g in &self.0.gens {
            if !chain.contains(g) {
                return Err(Error::Internal(format!("generator {g} fails to sift")));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let k = self.0.gens.len();
        for _ in 0..8 {
            let mut x = Permutation::identity(self.0.degree);
            for _ in 0..6 {
                x = x.mul_unchecked(&self.0.gens[rng.gen_range(0..k)]);
            }
            if !chain.contains(&x) {
                return Err(Error::Internal("random product fails to sift".into()));
            }
        }
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.0.gens
    }

    /// Generators with identities removed.
    pub fn nontrivial_generators(&self) -> Vec<Permutation> {
        self.0.gens.iter().filter(|g| !g.is_identity()).cloned().collect()
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// The order if it fits a machine word.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.gens.iter().all(|g| g.is_identity())
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain().base()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch(self.degree(), p.degree()));
        }
        Ok(self.chain().contains(p))
    }

    pub(crate) fn contains_unchecked(&self, p: &Permutation) -> bool {
        self.chain().contains(p)
    }

    /// True when every generator of `self` lies in `other`.
    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree() == other.degree()
            && self.0.gens.iter().all(|g| other.contains_unchecked(g))
    }

    /// Mutual generator membership.
    pub fn same_subgroup(&self, other: &Group) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    /// True when each generator of `by` conjugates `self` into itself.
    pub fn is_normalized_by(&self, by: &[Permutation]) -> bool {
        by.iter().all(|x| {
            self.0
                .gens
                .iter()
                .all(|g| self.contains_unchecked(&g.conjugate_by(x)))
        })
    }

    /// Normal in `parent` (assumes `self ≤ parent`).
    pub fn is_normal_in(&self, parent: &Group) -> bool {
        self.is_normalized_by(parent.generators())
    }

    /// All elements, provided the order does not exceed `cap`.
    pub fn elements(&self, cap: usize) -> Result<Vec<Permutation>> {
        let order = self.order();
        if order > BigUint::from(cap) {
            return Err(Error::GroupTooLarge {
                order: order.to_string(),
                cap,
            });
        }
        let mut out = Vec::with_capacity(order.to_usize().unwrap_or(0));
        self.chain().for_each_element(|g| out.push(g.clone()));
        Ok(out)
    }

    /// Orbit of `alpha`, in breadth-first discovery order.
    pub fn orbit(&self, alpha: usize) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        seen[alpha] = true;
        let mut orbit = vec![alpha];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            for g in &self.0.gens {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
            i += 1;
        }
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree()
    }

    fn check_point(&self, alpha: usize) -> Result<()> {
        if alpha >= self.degree() {
            return Err(Error::PointOutOfRange(alpha, self.degree()));
        }
        Ok(())
    }

    /// Stabilizer `G_α`, with `|G| = |α^G| · |G_α|`.
    pub fn point_stabilizer(&self, alpha: usize) -> Result<Group> {
        self.check_point(alpha)?;
        let chain = StabChain::build(self.degree(), &self.0.gens, &[alpha]);
        let tail = chain.tail();
        Ok(Group::from_parts(
            self.degree(),
            tail.strong_generators(),
            Some(tail),
        ))
    }

    /// Stabilizer chain with a prescribed base prefix; gives transversals.
    pub(crate) fn chain_with_base(&self, prefix: &[usize]) -> StabChain {
        StabChain::build(self.degree(), &self.0.gens, prefix)
    }

    /// Some element mapping `alpha` to `beta`.
    pub fn element_mapping(&self, alpha: usize, beta: usize) -> Result<Option<Permutation>> {
        self.check_point(alpha)?;
        self.check_point(beta)?;
        let chain = self.chain_with_base(&[alpha]);
        if alpha == beta {
            return Ok(Some(Permutation::identity(self.degree())));
        }
        Ok(chain
            .levels
            .first()
            .and_then(|l| l.rep(beta))
            .map(|c| c.into_owned()))
    }

    /// Subgroup generated by `self` and `other`.
    pub fn join(&self, other: &Group) -> Group {
        let mut gens = self.nontrivial_generators();
        let mut chain = self.chain().clone();
        for g in other.generators() {
            if chain.extend(g) {
                gens.push(g.clone());
            }
        }
        Group::from_parts(self.degree(), gens, Some(chain))
    }

    /// Subgroup generated by `self` together with `extra`.
    pub fn with_generators(&self, extra: &[Permutation]) -> Group {
        let mut gens = self.nontrivial_generators();
        let mut chain = self.chain().clone();
        for g in extra {
            if chain.extend(g) {
                gens.push(g.clone());
            }
        }
        Group::from_parts(self.degree(), gens, Some(chain))
    }

    /// Parses `degree N` followed by one generator per line in cycle
    /// notation; `#` starts a comment. No generator lines gives the trivial group.
    pub fn parse_text(text: &str) -> Result<Group> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
            .filter(|(_, l)| !l.is_empty());
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::Parse("missing `degree N` header".into()))?;
        let degree = header
            .strip_prefix("degree")
            .map(str::trim)
            .and_then(|d| d.parse::<usize>().ok())
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::Parse(format!("bad header {header:?}")))?;
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(degree, MAX_DEGREE));
        }
        let mut gens = Vec::new();
        for (lineno, line) in lines {
            let p = Permutation::parse_cycles(line, degree).map_err(|e| match e {
                Error::Parse(m) => Error::Parse(format!("line {lineno}: {m}")),
                other => other,
            })?;
            gens.push(p);
        }
        if gens.is_empty() {
            return Ok(Group::trivial(degree));
        }
        Group::new(gens)
    }

    /// Inverse of [`Group::parse_text`].
    pub fn to_text(&self) -> String {
        let mut s = format!("degree {}\n", self.degree());
        for g in self.generators() {
            s.push_str(&g.to_string());
            s.push('\n');
        }
        s
    }

    /// Action on the right cosets of `h`.
    pub fn coset_action(&self, h: &Group) -> Result<ActionImage> {
        if h.degree() != self.degree() || !h.is_subgroup_of(self) {
            return Err(Error::NotSubgroup("H is not contained in G".into()));
        }
        let n = self.degree();
        // When H contains a point stabilizer, cosets of H are blocks.
        if self.is_transitive() {
            let stab = self.point_stabilizer(0)?;
            if stab.is_subgroup_of(h) {
                let seed = sorted(h.orbit(0));
                let parts = set_orbit(self.generators(), &seed, n);
                let action = ActionImage::on_parts(self, &parts);
                action.verify_point_stabilizer(h)?;
                return Ok(action);
            }
        }
        let hchain = h.chain();
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        let mut reps = vec![canonical_coset_rep(hchain, &Permutation::identity(n))];
        index.insert(reps[0].clone(), 0);
        let mut images: Vec<Vec<u32>> = vec![Vec::new(); self.generators().len()];
        let mut i = 0;
        while i < reps.len() {
            for (k, g) in self.generators().iter().enumerate() {
                let c = canonical_coset_rep(hchain, &reps[i].mul_unchecked(g));
                let j = match index.get(&c) {
                    Some(&j) => j,
                    None => {
                        let j = reps.len();
                        index.insert(c.clone(), j);
                        reps.push(c);
                        j
                    }
                };
                images[k].push(j as u32);
            }
            i += 1;
        }
        let gens = images
            .into_iter()
            .map(Permutation::from_images_unchecked)
            .collect();
        let image = Group::generated(reps.len(), gens);
        let kernel_order = self.order() / image.order();
        let action = ActionImage {
            source: self.clone(),
            image,
            kernel_order,
            point_labels: reps.into_iter().map(PointLabel::Coset).collect(),
            coset_of: Some(h.clone()),
        };
        action.verify_point_stabilizer(h)?;
        Ok(action)
    }

    /// The group induced on an invariant partition.
    pub fn action_on_parts(&self, parts: &[Vec<usize>]) -> ActionImage {
        ActionImage::on_parts(self, parts)
    }
}

/// Least element of `H·g` in the base-image order of `H`'s chain.
fn canonical_coset_rep(hchain: &StabChain, g: &Permutation) -> Permutation {
    let mut c = g.clone();
    for lvl in &hchain.levels {
        let best = *lvl.orbit.iter().min_by_key(|&&b| c.apply(b)).unwrap();
        let u = lvl.rep(best).unwrap();
        c = u.mul_unchecked(&c);
    }
    c
}

pub(crate) fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Orbit of a point set under setwise action, each image sorted.
pub(crate) fn set_orbit(gens: &[Permutation], seed: &[usize], n: usize) -> Vec<Vec<usize>> {
    let mut part_of = vec![usize::MAX; n];
    let mut parts = vec![seed.to_vec()];
    for &x in seed {
        part_of[x] = 0;
    }
    let mut i = 0;
    while i < parts.len() {
        for g in gens {
            let img = sorted(parts[i].iter().map(|&x| g.apply(x)).collect());
            if part_of[img[0]] == usize::MAX {
                let j = parts.len();
                for &x in &img {
                    part_of[x] = j;
                }
                parts.push(img);
            }
        }
        i += 1;
    }
    parts
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(degree {}, order {}, gens [", self.degree(), self.order())?;
        for (i, g) in self.0.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("])")
    }
}

/// Description of a point of an induced action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointLabel {
    /// Right coset `H·rep`.
    Coset(Permutation),
    /// A part of an invariant partition of the source points.
    Block(Vec<usize>),
}

/// The permutation group induced by `source` on a derived point set.
#[derive(Clone, Debug)]
pub struct ActionImage {
    pub source: Group,
    /// Generated by the images of `source`'s generators, in the same order.
    pub image: Group,
    pub kernel_order: BigUint,
    pub point_labels: Vec<PointLabel>,
    coset_of: Option<Group>,
}

impl ActionImage {
    /// Action on the parts of an invariant partition; parts must be listed
    /// so that every point lies in exactly one.
    pub(crate) fn on_parts(source: &Group, parts: &[Vec<usize>]) -> ActionImage {
        let n = source.degree();
        let mut part_of = vec![0usize; n];
        for (j, p) in parts.iter().enumerate() {
            for &x in p {
                part_of[x] = j;
            }
        }
        let m = parts.len();
        let gens: Vec<Permutation> = source
            .generators()
            .iter()
            .map(|g| {
                Permutation::from_images_unchecked(
                    parts.iter().map(|p| part_of[g.apply(p[0])] as u32).collect(),
                )
            })
            .collect();
        let image = Group::from_parts(m, gens, None);
        let kernel_order = source.order() / image.order();
        ActionImage {
            source: source.clone(),
            image,
            kernel_order,
            point_labels: parts.iter().cloned().map(PointLabel::Block).collect(),
            coset_of: None,
        }
    }

    pub fn degree(&self) -> usize {
        self.image.degree()
    }

    /// Image of a source element under the action homomorphism.
    pub fn map_element(&self, g: &Permutation) -> Permutation {
        match &self.point_labels[0] {
            PointLabel::Block(_) => {
                let mut part_of = vec![0usize; self.source.degree()];
                for (j, l) in self.point_labels.iter().enumerate() {
                    if let PointLabel::Block(p) = l {
                        for &x in p {
                            part_of[x] = j;
                        }
                    }
                }
                Permutation::from_images_unchecked(
                    self.point_labels
                        .iter()
                        .map(|l| match l {
                            PointLabel::Block(p) => part_of[g.apply(p[0])] as u32,
                            PointLabel::Coset(_) => unreachable!(),
                        })
                        .collect(),
                )
            }
            PointLabel::Coset(_) => {
                let reps: Vec<&Permutation> = self
                    .point_labels
                    .iter()
                    .map(|l| match l {
                        PointLabel::Coset(r) => r,
                        PointLabel::Block(_) => unreachable!(),
                    })
                    .collect();
                let h = self.coset_of.as_ref().expect("coset labels carry their subgroup");
                let hchain = h.chain();
                let index: HashMap<&Permutation, usize> =
                    reps.iter().enumerate().map(|(i, r)| (*r, i)).collect();
                Permutation::from_images_unchecked(
                    reps.iter()
                        .map(|r| {
                            let c = canonical_coset_rep(hchain, &r.mul_unchecked(g));
                            index[&c] as u32
                        })
                        .collect(),
                )
            }
        }
    }

    /// Checks `|H| = |Stab(point 0)| · |kernel|` and that `H` fixes point 0.
    fn verify_point_stabilizer(&self, h: &Group) -> Result<()> {
        let fixes = h.generators().iter().all(|g| {
            let img = self.map_element(g);
            img.apply(0) == 0
        });
        let stab = self.image.point_stabilizer(0)?;
        if !fixes || stab.order() * &self.kernel_order != h.order() {
            return Err(Error::Internal("coset action stabilizer mismatch".into()));
        }
        Ok(())
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel_order.is_one()
    }
}
