//! Orbits, blocks and primitivity; normal structure; the three basicness
//! predicates and the quasiprimitive type classifier.
//!
//! Quasiprimitivity is decided on minimal normal subgroups alone. Every
//! nontrivial normal subgroup contains a minimal normal subgroup, and a group
//! containing a transitive subgroup is itself transitive, so "every minimal
//! normal subgroup is transitive" is equivalent to "every nontrivial normal
//! subgroup is transitive".

use fixedbitset::FixedBitSet;
use indexmap::IndexSet;
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{set_orbit, sorted, Group};
use crate::perm::Permutation;

/// Largest simple factor for which element projections are computed.
pub const PROJECTION_FACTOR_CAP: usize = 20_000;

/// A partition of (a subset of) the points into equal-sized blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSystem {
    pub degree: usize,
    /// Block index of each point; `None` for points outside the partitioned set.
    pub block_of: Vec<Option<usize>>,
    /// Blocks, each sorted, ordered by least point.
    pub blocks: Vec<Vec<usize>>,
}

impl BlockSystem {
    /// Partition from disjoint parts; parts are sorted and reordered by least point.
    pub fn from_parts(degree: usize, parts: Vec<Vec<usize>>) -> Result<BlockSystem> {
        let mut parts: Vec<Vec<usize>> = parts.into_iter().map(sorted).collect();
        parts.sort_by_key(|p| p[0]);
        let size = parts.first().map_or(0, |p| p.len());
        let mut block_of = vec![None; degree];
        for (j, p) in parts.iter().enumerate() {
            if p.len() != size {
                return Err(Error::Internal("blocks of unequal size".into()));
            }
            for &x in p {
                if x >= degree || block_of[x].replace(j).is_some() {
                    return Err(Error::Internal("parts are not disjoint".into()));
                }
            }
        }
        Ok(BlockSystem {
            degree,
            block_of,
            blocks: parts,
        })
    }

    /// The images of `block` under `group`.
    pub fn generated_by(group: &Group, block: &[usize]) -> Result<BlockSystem> {
        let seed = sorted(block.to_vec());
        let parts = set_orbit(group.generators(), &seed, group.degree());
        let bs = BlockSystem::from_parts(group.degree(), parts)?;
        if !bs.is_invariant_under(group) {
            return Err(Error::Internal("images of a block overlap".into()));
        }
        Ok(bs)
    }

    pub fn block_size(&self) -> usize {
        self.blocks.first().map_or(0, |b| b.len())
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Every generator maps blocks onto blocks.
    pub fn is_invariant_under(&self, group: &Group) -> bool {
        group.generators().iter().all(|g| {
            self.blocks.iter().all(|b| {
                let target = self.block_of[g.apply(b[0])];
                target.is_some() && b.iter().all(|&x| self.block_of[g.apply(x)] == target)
            })
        })
    }

    pub fn block_containing(&self, point: usize) -> Option<&[usize]> {
        self.block_of[point].map(|j| self.blocks[j].as_slice())
    }
}

/// Orbits, each sorted, ordered by least point.
pub fn orbits(group: &Group) -> Vec<Vec<usize>> {
    let n = group.degree();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for a in 0..n {
        if seen[a] {
            continue;
        }
        let orb = sorted(group.orbit(a));
        for &x in &orb {
            seen[x] = true;
        }
        out.push(orb);
    }
    out
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false if already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Smallest block of a transitive group containing `seed` (non-empty).
pub(crate) fn block_closure(group: &Group, seed: &[usize]) -> Vec<usize> {
    let n = group.degree();
    let mut uf = UnionFind::new(n);
    let mut queue = Vec::new();
    for &s in &seed[1..] {
        if uf.union(seed[0], s) {
            queue.push((seed[0], s));
        }
    }
    let gens = group.nontrivial_generators();
    while let Some((a, b)) = queue.pop() {
        for g in &gens {
            let (x, y) = (g.apply(a), g.apply(b));
            let (rx, ry) = (uf.find(x), uf.find(y));
            if rx != ry {
                uf.union(rx, ry);
                queue.push((rx, ry));
            }
        }
    }
    let root = uf.find(seed[0]);
    (0..n).filter(|&x| uf.find(x) == root).collect()
}

/// Smallest block of imprimitivity containing `alpha` and `beta`.
pub fn minimal_block(group: &Group, alpha: usize, beta: usize) -> Result<Vec<usize>> {
    let n = group.degree();
    for p in [alpha, beta] {
        if p >= n {
            return Err(Error::PointOutOfRange(p, n));
        }
    }
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    if alpha == beta {
        return Err(Error::Precondition("alpha and beta must differ".into()));
    }
    Ok(block_closure(group, &[alpha, beta]))
}

/// Representatives of the nontrivial `G_α`-orbits (excluding `α` itself).
pub(crate) fn suborbit_representatives(group: &Group, alpha: usize) -> Result<Vec<usize>> {
    let stab = group.point_stabilizer(alpha)?;
    Ok(orbits(&stab)
        .into_iter()
        .map(|o| o[0])
        .filter(|&b| b != alpha)
        .collect())
}

pub fn is_primitive(group: &Group) -> Result<bool> {
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    if group.degree() < 2 {
        return Err(Error::Precondition("primitivity needs degree at least 2".into()));
    }
    let n = group.degree();
    for beta in suborbit_representatives(group, 0)? {
        if block_closure(group, &[0, beta]).len() != n {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Elements and conjugacy classes of a group of enumerable order.
pub(crate) struct ClassData {
    pub elements: IndexSet<Permutation>,
    /// Element indices per class; the identity class comes first.
    pub classes: Vec<Vec<usize>>,
}

impl ClassData {
    pub fn compute(group: &Group, cap: usize) -> Result<ClassData> {
        let elements: IndexSet<Permutation> = group.elements(cap)?.into_iter().collect();
        let gens = group.nontrivial_generators();
        let mut class_of = vec![usize::MAX; elements.len()];
        let mut classes = Vec::new();
        for start in 0..elements.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = classes.len();
            class_of[start] = c;
            let mut members = vec![start];
            let mut i = 0;
            while i < members.len() {
                let x = &elements[members[i]];
                for g in &gens {
                    let y = x.conjugate_by(g);
                    let j = elements
                        .get_index_of(&y)
                        .ok_or_else(|| Error::Internal("conjugate outside the group".into()))?;
                    if class_of[j] == usize::MAX {
                        class_of[j] = c;
                        members.push(j);
                    }
                }
                i += 1;
            }
            members.sort_unstable();
            classes.push(members);
        }
        Ok(ClassData { elements, classes })
    }

    fn rep(&self, class: usize) -> &Permutation {
        &self.elements[self.classes[class][0]]
    }

    /// Classes contained in a normal subgroup.
    fn class_set(&self, n: &Group) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.classes.len());
        for c in 0..self.classes.len() {
            if n.contains_unchecked(self.rep(c)) {
                bits.insert(c);
            }
        }
        bits
    }
}

/// Conjugacy classes, each listed in element-enumeration order.
pub fn conjugacy_classes(group: &Group, cap: usize) -> Result<Vec<Vec<Permutation>>> {
    let data = ClassData::compute(group, cap)?;
    Ok(data
        .classes
        .iter()
        .map(|c| c.iter().map(|&i| data.elements[i].clone()).collect())
        .collect())
}

/// Smallest normal subgroup of `group` containing `s`.
pub fn normal_closure(group: &Group, s: &[Permutation]) -> Result<Group> {
    for x in s {
        if !group.contains(x)? {
            return Err(Error::NotSubgroup(format!("{x} is not in the group")));
        }
    }
    Ok(normal_closure_unchecked(group, s))
}

pub(crate) fn normal_closure_unchecked(group: &Group, s: &[Permutation]) -> Group {
    let n = group.degree();
    let mut gens: Vec<Permutation> = s.iter().filter(|x| !x.is_identity()).cloned().collect();
    gens.dedup();
    let mut closure = Group::generated(n, gens.clone());
    let conj = group.nontrivial_generators();
    let mut i = 0;
    while i < gens.len() {
        for g in &conj {
            let c = gens[i].conjugate_by(g);
            if !closure.contains_unchecked(&c) {
                closure = closure.with_generators(std::slice::from_ref(&c));
                gens.push(c);
            }
        }
        i += 1;
    }
    closure
}

/// Derived subgroup: normal closure of commutators of generators.
pub fn derived_subgroup(group: &Group) -> Group {
    let gens = group.nontrivial_generators();
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            let c = &(&(&a.inverse() * &b.inverse()) * a) * b;
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure_unchecked(group, &comms)
}

pub fn is_abelian(group: &Group) -> bool {
    let gens = group.nontrivial_generators();
    gens.iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| &(a * b) == &(b * a)))
}

/// Normal subgroups of a parent group.
#[derive(Clone, Debug)]
pub struct NormalSubgroupSet {
    pub parent: Group,
    /// Ordered by (order, class content).
    pub members: Vec<Group>,
    /// `minimal_flags[i]`: member `i` is a minimal normal subgroup.
    pub minimal_flags: Vec<bool>,
}

impl NormalSubgroupSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn minimal(&self) -> impl Iterator<Item = &Group> {
        self.members
            .iter()
            .zip(&self.minimal_flags)
            .filter(|(_, &m)| m)
            .map(|(g, _)| g)
    }

    /// Join of the minimal members.
    pub fn socle(&self) -> Group {
        self.minimal()
            .fold(Group::trivial(self.parent.degree()), |acc, m| acc.join(m))
    }
}

fn build_set(parent: &Group, mut found: Vec<(FixedBitSet, Group)>) -> NormalSubgroupSet {
    found.sort_by(|a, b| {
        a.1.order()
            .cmp(&b.1.order())
            .then_with(|| a.0.ones().collect::<Vec<_>>().cmp(&b.0.ones().collect::<Vec<_>>()))
    });
    // class 0 is the identity class
    let nontrivial = |b: &FixedBitSet| b.count_ones(..) > 1;
    let minimal_flags = found
        .iter()
        .map(|(bits, _)| {
            nontrivial(bits)
                && !found
                    .iter()
                    .any(|(o, _)| nontrivial(o) && o != bits && o.is_subset(bits))
        })
        .collect();
    NormalSubgroupSet {
        parent: parent.clone(),
        members: found.into_iter().map(|(_, g)| g).collect(),
        minimal_flags,
    }
}

/// Normal closures of the nontrivial class representatives, deduplicated.
fn class_closures(group: &Group, data: &ClassData) -> Vec<(FixedBitSet, Group)> {
    let mut found: Vec<(FixedBitSet, Group)> = Vec::new();
    for c in 1..data.classes.len() {
        let rep = data.rep(c);
        let n = normal_closure_unchecked(group, std::slice::from_ref(rep));
        let bits = data.class_set(&n);
        if !found.iter().any(|(b, _)| *b == bits) {
            found.push((bits, n));
        }
    }
    found
}

/// Every normal subgroup, including the trivial and full subgroups.
pub fn normal_subgroups(group: &Group, cap: usize) -> Result<NormalSubgroupSet> {
    let data = ClassData::compute(group, cap)?;
    let mut found = class_closures(group, &data);
    let mut trivial = FixedBitSet::with_capacity(data.classes.len());
    trivial.insert(0);
    found.insert(0, (trivial, Group::trivial(group.degree())));
    // every normal subgroup is a join of class closures
    let mut i = 0;
    while i < found.len() {
        let mut j = 0;
        while j < i {
            if !found[i].0.is_subset(&found[j].0) && !found[j].0.is_subset(&found[i].0) {
                let join = found[i].1.join(&found[j].1);
                let bits = data.class_set(&join);
                if !found.iter().any(|(b, _)| *b == bits) {
                    found.push((bits, join));
                }
            }
            j += 1;
        }
        i += 1;
    }
    Ok(build_set(group, found))
}

/// Minimal normal subgroups (all flags set).
pub fn minimal_normal_subgroups(group: &Group, cap: usize) -> Result<NormalSubgroupSet> {
    let data = ClassData::compute(group, cap)?;
    let found = class_closures(group, &data);
    let set = build_set(group, found);
    let (members, flags): (Vec<Group>, Vec<bool>) = set
        .members
        .into_iter()
        .zip(set.minimal_flags)
        .filter(|(_, m)| *m)
        .unzip();
    Ok(NormalSubgroupSet {
        parent: group.clone(),
        members,
        minimal_flags: flags,
    })
}

/// A nontrivial group is simple iff its only minimal normal subgroup is itself.
pub fn is_simple(group: &Group, cap: usize) -> Result<bool> {
    if group.is_trivial() {
        return Ok(false);
    }
    let mins = minimal_normal_subgroups(group, cap)?;
    Ok(mins.members.len() == 1 && mins.members[0].order() == group.order())
}

fn require_transitive(group: &Group) -> Result<()> {
    if group.is_transitive() {
        Ok(())
    } else {
        Err(Error::NotTransitive)
    }
}

pub fn is_quasiprimitive(group: &Group, cap: usize) -> Result<bool> {
    require_transitive(group)?;
    if group.degree() == 1 {
        return Ok(true);
    }
    let mins = minimal_normal_subgroups(group, cap)?;
    Ok(mins.members.iter().all(|m| m.is_transitive()))
}

pub fn is_innately_transitive(group: &Group, cap: usize) -> Result<bool> {
    require_transitive(group)?;
    if group.degree() == 1 {
        return Ok(true);
    }
    let mins = minimal_normal_subgroups(group, cap)?;
    Ok(mins.members.iter().any(|m| m.is_transitive()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum OnanScottTag {
    HA,
    HS,
    HC,
    AS,
    TW,
    SD,
    CD,
    PA,
    #[serde(rename = "NOT_QUASIPRIMITIVE")]
    NotQuasiprimitive,
}

impl std::fmt::Display for OnanScottTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            OnanScottTag::HA => "HA",
            OnanScottTag::HS => "HS",
            OnanScottTag::HC => "HC",
            OnanScottTag::AS => "AS",
            OnanScottTag::TW => "TW",
            OnanScottTag::SD => "SD",
            OnanScottTag::CD => "CD",
            OnanScottTag::PA => "PA",
            OnanScottTag::NotQuasiprimitive => "NOT_QUASIPRIMITIVE",
        };
        f.write_str(s)
    }
}

/// Structural facts behind a classification.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TypeEvidence {
    pub minimal_normal_count: usize,
    pub minimal_normal_orders: Vec<String>,
    pub minimal_normal_transitive: Vec<bool>,
    pub minimal_normal_regular: Vec<bool>,
    pub minimal_normal_abelian: Vec<bool>,
    pub socle_order: String,
    /// `k` in `M = T^k`, for a nonabelian minimal normal subgroup `M`.
    pub simple_factor_count: Option<usize>,
    pub simple_factor_order: Option<String>,
    /// Order of `M_α = M ∩ G_α`.
    pub socle_point_stabilizer_order: Option<String>,
    /// Orders of the projections of `M_α` onto the simple factors.
    pub projection_orders: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OnanScottType {
    pub tag: OnanScottTag,
    pub evidence: TypeEvidence,
}

/// Simple direct factors of a nonabelian characteristically simple group:
/// its minimal normal subgroups.
pub fn simple_factors(m: &Group, cap: usize) -> Result<Vec<Group>> {
    let factors = minimal_normal_subgroups(m, cap)?.members;
    let product = factors
        .iter()
        .fold(BigUint::one(), |acc, t| acc * t.order());
    if factors.is_empty() || product != m.order() {
        return Err(Error::Internal(
            "minimal normal subgroup is not a direct product of its simple factors".into(),
        ));
    }
    Ok(factors)
}

/// Order of the projection of `sub` onto `factor`, inside `factors`' product.
fn projection_order(sub: &Group, factors: &[Group], i: usize, cap: usize) -> Result<BigUint> {
    let n = sub.degree();
    let factor = &factors[i];
    if factor.order() > BigUint::from(PROJECTION_FACTOR_CAP) {
        return Err(Error::GroupTooLarge {
            order: factor.order().to_string(),
            cap: PROJECTION_FACTOR_CAP,
        });
    }
    let complement = factors
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .fold(Group::trivial(n), |acc, (_, t)| acc.join(t));
    let elems = factor.elements(cap.max(PROJECTION_FACTOR_CAP))?;
    let mut images = Vec::new();
    for x in sub.nontrivial_generators() {
        // the unique t in T_i with t⁻¹x in the complement
        let t = elems
            .iter()
            .find(|t| complement.contains_unchecked(&t.inverse().mul_unchecked(&x)))
            .ok_or_else(|| Error::Internal("element has no projection".into()))?;
        images.push(t.clone());
    }
    Ok(Group::generated(n, images).order())
}

fn is_elementary_abelian_regular(m: &Group) -> bool {
    let order = m.order();
    let Some(ord) = order.to_u64() else {
        return false;
    };
    if !m.is_transitive() || ord != m.degree() as u64 || !is_abelian(m) {
        return false;
    }
    let gens = m.nontrivial_generators();
    let Some(p) = gens.first().map(|g| g.order()) else {
        return ord == 1;
    };
    let mut q = ord;
    while q % p == 0 {
        q /= p;
    }
    q == 1 && gens.iter().all(|g| g.order() == p) && (2..p).all(|d| p % d != 0)
}

/// Quasiprimitive type of a transitive group.
pub fn onan_scott_type(group: &Group, cap: usize) -> Result<OnanScottType> {
    require_transitive(group)?;
    if group.degree() == 1 {
        return Err(Error::Precondition("type is undefined in degree 1".into()));
    }
    let mins = minimal_normal_subgroups(group, cap)?.members;
    let mut ev = TypeEvidence {
        minimal_normal_count: mins.len(),
        minimal_normal_orders: mins.iter().map(|m| m.order().to_string()).collect(),
        minimal_normal_transitive: mins.iter().map(|m| m.is_transitive()).collect(),
        minimal_normal_regular: mins
            .iter()
            .map(|m| m.is_transitive() && m.order() == BigUint::from(group.degree()))
            .collect(),
        minimal_normal_abelian: mins.iter().map(is_abelian).collect(),
        ..Default::default()
    };
    let socle = mins
        .iter()
        .fold(Group::trivial(group.degree()), |acc, m| acc.join(m));
    ev.socle_order = socle.order().to_string();
    if !ev.minimal_normal_transitive.iter().all(|&t| t) {
        return Ok(OnanScottType {
            tag: OnanScottTag::NotQuasiprimitive,
            evidence: ev,
        });
    }
    let tag = match mins.len() {
        2 => {
            if ev.minimal_normal_abelian.iter().any(|&a| a) {
                return Err(Error::Internal(
                    "two minimal normal subgroups, one abelian".into(),
                ));
            }
            let factors = simple_factors(&mins[0], cap)?;
            ev.simple_factor_count = Some(factors.len());
            ev.simple_factor_order = Some(factors[0].order().to_string());
            if factors.len() == 1 {
                OnanScottTag::HS
            } else {
                OnanScottTag::HC
            }
        }
        1 => {
            let m = &mins[0];
            if ev.minimal_normal_abelian[0] {
                if !is_elementary_abelian_regular(m) {
                    return Err(Error::Internal(
                        "abelian minimal normal subgroup is not elementary abelian regular".into(),
                    ));
                }
                OnanScottTag::HA
            } else {
                let factors = simple_factors(m, cap)?;
                let k = factors.len();
                let t_order = factors[0].order();
                ev.simple_factor_count = Some(k);
                ev.simple_factor_order = Some(t_order.to_string());
                let m_alpha = m.point_stabilizer(0)?;
                ev.socle_point_stabilizer_order = Some(m_alpha.order().to_string());
                if k == 1 {
                    OnanScottTag::AS
                } else if m_alpha.is_trivial() || m_alpha.order().is_one() {
                    OnanScottTag::TW
                } else {
                    let projections = (0..k)
                        .map(|i| projection_order(&m_alpha, &factors, i, cap))
                        .collect::<Result<Vec<_>>>()?;
                    ev.projection_orders = projections.iter().map(|p| p.to_string()).collect();
                    if projections.iter().all(|p| *p == t_order) {
                        // M_α ≅ T^ℓ
                        let mut ell = 0;
                        let mut acc = BigUint::one();
                        while acc < m_alpha.order() {
                            acc *= &t_order;
                            ell += 1;
                        }
                        if acc != m_alpha.order() {
                            return Err(Error::Internal(
                                "full projections but |M_α| is not a power of |T|".into(),
                            ));
                        }
                        if ell == 1 {
                            OnanScottTag::SD
                        } else if ell < k {
                            OnanScottTag::CD
                        } else {
                            return Err(Error::Internal("M_α equals M".into()));
                        }
                    } else if projections.iter().all(|p| *p < t_order && !p.is_one()) {
                        OnanScottTag::PA
                    } else {
                        return Err(Error::Internal(format!(
                            "projection pattern {:?} matches no type",
                            ev.projection_orders
                        )));
                    }
                }
            }
        }
        c => {
            return Err(Error::Internal(format!(
                "quasiprimitive group with {c} minimal normal subgroups"
            )))
        }
    };
    Ok(OnanScottType { tag, evidence: ev })
}
