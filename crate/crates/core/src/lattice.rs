//! Lattices of overgroups of a point stabilizer, their cover relations,
//! components, basic components and the iterated wreath embedding.
//!
//! Every node `H` satisfies `G_α ≤ H ≤ G` and is stored together with its
//! block `α^H`. Overgroups of `G_α` correspond one-to-one with blocks of `G`
//! containing `α`, so nodes are compared through their blocks.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{set_orbit, sorted, ActionImage, Group};
use crate::perm::Permutation;
use crate::structure::{
    block_closure, is_innately_transitive, is_primitive, is_quasiprimitive, normal_subgroups,
    onan_scott_type, suborbit_representatives, BlockSystem, OnanScottTag,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LatticeKind {
    /// All overgroups of `G_α`.
    L1,
    /// Products `G_α N` along normal chains from `G`.
    L2,
    /// Products `G_α N` with `N` subnormal in `G` and normalized by `G_α`.
    L3,
}

impl LatticeKind {
    pub const ALL: [LatticeKind; 3] = [LatticeKind::L1, LatticeKind::L2, LatticeKind::L3];
}

impl std::str::FromStr for LatticeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L1" | "l1" | "1" => Ok(LatticeKind::L1),
            "L2" | "l2" | "2" => Ok(LatticeKind::L2),
            "L3" | "l3" | "3" => Ok(LatticeKind::L3),
            _ => Err(Error::Parse(format!("unknown lattice kind {s:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LatticeNode {
    pub group: Group,
    /// The orbit `α^H`, sorted.
    pub block: Vec<usize>,
}

impl LatticeNode {
    pub fn order(&self) -> BigUint {
        self.group.order()
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    pub kind: LatticeKind,
    pub ambient: Group,
    pub base_point: usize,
    pub stabilizer: Group,
    /// Sorted by (order, block).
    pub nodes: Vec<LatticeNode>,
    /// Cover pairs `(lower, upper)` of node ids.
    pub edges: Vec<(usize, usize)>,
    pub bottom: usize,
    pub top: usize,
}

/// Builds `⟨G_α, u_β : β ∈ block⟩` where `α^{u_β} = β`.
struct NodeBuilder {
    stabilizer: Group,
    alpha: usize,
    reps: Vec<Option<Permutation>>,
}

impl NodeBuilder {
    fn new(group: &Group, alpha: usize) -> Result<NodeBuilder> {
        let stabilizer = group.point_stabilizer(alpha)?;
        let chain = group.chain_with_base(&[alpha]);
        let n = group.degree();
        let reps = match chain.levels.first() {
            Some(lvl) if lvl.base == alpha => {
                (0..n).map(|x| lvl.rep(x).map(|c| c.into_owned())).collect()
            }
            _ => {
                let mut r = vec![None; n];
                r[alpha] = Some(Permutation::identity(n));
                r
            }
        };
        Ok(NodeBuilder {
            stabilizer,
            alpha,
            reps,
        })
    }

    /// Setwise stabilizer of a block containing `α`.
    fn node(&self, block: &[usize]) -> LatticeNode {
        let mut h = self.stabilizer.clone();
        let mut covered: BTreeSet<usize> = BTreeSet::from([self.alpha]);
        for &b in block {
            if covered.contains(&b) {
                continue;
            }
            let u = self.reps[b].clone().expect("block point in the orbit");
            h = h.with_generators(std::slice::from_ref(&u));
            covered = h.orbit(self.alpha).into_iter().collect();
        }
        LatticeNode {
            group: h,
            block: block.to_vec(),
        }
    }
}

fn require_transitive(group: &Group, alpha: usize) -> Result<()> {
    if alpha >= group.degree() {
        return Err(Error::PointOutOfRange(alpha, group.degree()));
    }
    if !group.is_transitive() {
        return Err(Error::NotTransitive);
    }
    Ok(())
}

impl SubgroupLattice {
    fn from_blocks(
        kind: LatticeKind,
        group: &Group,
        alpha: usize,
        builder: &NodeBuilder,
        blocks: BTreeMap<Vec<usize>, Option<Group>>,
    ) -> SubgroupLattice {
        let mut nodes: Vec<LatticeNode> = blocks
            .into_iter()
            .map(|(block, g)| match g {
                Some(group) => LatticeNode { group, block },
                None => builder.node(&block),
            })
            .collect();
        // |H| = |G_α| · |α^H|, so ordering by block size orders by group order
        nodes.sort_by(|a, b| a.block.len().cmp(&b.block.len()).then_with(|| a.block.cmp(&b.block)));
        let edges = cover_edges(&nodes);
        let top = nodes.len() - 1;
        SubgroupLattice {
            kind,
            ambient: group.clone(),
            base_point: alpha,
            stabilizer: builder.stabilizer.clone(),
            nodes,
            edges,
            bottom: 0,
            top,
        }
    }

    /// All overgroups of `G_α`, through blocks containing `α`.
    pub fn l1(group: &Group, alpha: usize) -> Result<SubgroupLattice> {
        require_transitive(group, alpha)?;
        let builder = NodeBuilder::new(group, alpha)?;
        let n = group.degree();
        let seeds: Vec<Vec<usize>> = suborbit_representatives(group, alpha)?
            .into_iter()
            .map(|b| block_closure(group, &[alpha, b]))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut blocks: BTreeSet<Vec<usize>> = BTreeSet::new();
        blocks.insert(vec![alpha]);
        blocks.insert((0..n).collect());
        let mut work: Vec<Vec<usize>> = Vec::new();
        for s in &seeds {
            if blocks.insert(s.clone()) {
                work.push(s.clone());
            }
        }
        // every block containing α is a join of seeds
        while let Some(b) = work.pop() {
            for s in &seeds {
                if s.iter().all(|x| b.binary_search(x).is_ok()) {
                    continue;
                }
                let mut seed = b.clone();
                seed.extend(s.iter().copied());
                seed.sort_unstable();
                seed.dedup();
                let j = block_closure(group, &seed);
                if blocks.insert(j.clone()) {
                    work.push(j);
                }
            }
        }
        let mut map: BTreeMap<Vec<usize>, Option<Group>> =
            blocks.into_iter().map(|b| (b, None)).collect();
        map.insert(vec![alpha], Some(builder.stabilizer.clone()));
        map.insert((0..n).collect(), Some(group.clone()));
        Ok(Self::from_blocks(LatticeKind::L1, group, alpha, &builder, map))
    }

    /// Least family containing `G` and closed under `K ↦ G_α N` for `N ⊴ K`.
    pub fn l2(group: &Group, alpha: usize, cap: usize) -> Result<SubgroupLattice> {
        require_transitive(group, alpha)?;
        let builder = NodeBuilder::new(group, alpha)?;
        let n = group.degree();
        let mut map: BTreeMap<Vec<usize>, Option<Group>> = BTreeMap::new();
        map.insert((0..n).collect(), Some(group.clone()));
        let mut work = vec![group.clone()];
        while let Some(k) = work.pop() {
            for nsub in normal_subgroups(&k, cap)?.members {
                let block = sorted(nsub.orbit(alpha));
                if map.contains_key(&block) {
                    continue;
                }
                let h = builder.stabilizer.join(&nsub);
                map.insert(block, Some(h.clone()));
                work.push(h);
            }
        }
        Ok(Self::from_blocks(LatticeKind::L2, group, alpha, &builder, map))
    }

    /// Products `G_α N` over subnormal `N` normalized by `G_α`.
    pub fn l3(group: &Group, alpha: usize, cap: usize) -> Result<SubgroupLattice> {
        require_transitive(group, alpha)?;
        let builder = NodeBuilder::new(group, alpha)?;
        let subnormal = subnormal_subgroups(group, cap)?;
        let stab_gens = builder.stabilizer.nontrivial_generators();
        let mut map: BTreeMap<Vec<usize>, Option<Group>> = BTreeMap::new();
        for nsub in subnormal {
            if !nsub.is_normalized_by(&stab_gens) {
                continue;
            }
            let block = sorted(nsub.orbit(alpha));
            if !map.contains_key(&block) {
                let h = builder.stabilizer.join(&nsub);
                map.insert(block, Some(h));
            }
        }
        Ok(Self::from_blocks(LatticeKind::L3, group, alpha, &builder, map))
    }

    pub fn build(kind: LatticeKind, group: &Group, alpha: usize, cap: usize) -> Result<SubgroupLattice> {
        match kind {
            LatticeKind::L1 => Self::l1(group, alpha),
            LatticeKind::L2 => Self::l2(group, alpha, cap),
            LatticeKind::L3 => Self::l3(group, alpha, cap),
        }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Cover pairs `(H, K)` with `H < K`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `nodes[a] ≤ nodes[b]`.
    pub fn contained(&self, a: usize, b: usize) -> bool {
        is_subset(&self.nodes[a].block, &self.nodes[b].block)
    }

    /// Index `[G : H]` of a node.
    pub fn index(&self, node: usize) -> usize {
        self.ambient.degree() / self.nodes[node].block.len()
    }

    /// Checks the node and edge invariants against generator membership.
    pub fn verify(&self) -> Result<()> {
        for (i, node) in self.nodes.iter().enumerate() {
            if !self.stabilizer.is_subgroup_of(&node.group) || !node.group.is_subgroup_of(&self.ambient) {
                return Err(Error::Internal(format!("node {i} is not between G_α and G")));
            }
            if sorted(node.group.orbit(self.base_point)) != node.block {
                return Err(Error::Internal(format!("node {i} has the wrong block")));
            }
        }
        for a in 0..self.nodes.len() {
            for b in 0..self.nodes.len() {
                let by_groups = self.nodes[a].group.is_subgroup_of(&self.nodes[b].group);
                if by_groups != self.contained(a, b) {
                    return Err(Error::Internal(format!(
                        "containment of nodes {a}, {b} disagrees with their blocks"
                    )));
                }
            }
        }
        let expected = cover_edges(&self.nodes);
        if expected != self.edges {
            return Err(Error::Internal("cover edges are stale".into()));
        }
        Ok(())
    }

    /// `Comp(K, H)` for nodes `lower = H < upper = K`.
    pub fn component(&self, lower: usize, upper: usize) -> Result<Component> {
        let mut c = component(
            &self.ambient,
            &self.nodes[upper].group,
            &self.nodes[lower].group,
            self.base_point,
        )?;
        c.pair = Some((lower, upper));
        Ok(c)
    }

    /// One component per cover pair.
    pub fn basic_components(&self) -> Result<Vec<Component>> {
        self.edges
            .iter()
            .map(|&(h, k)| self.component(h, k))
            .collect()
    }

    /// All maximal chains from `G_α` to `G`, as node ids bottom first.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut path = vec![self.bottom];
        self.extend_chains(&mut path, &mut out);
        out
    }

    fn extend_chains(&self, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let last = *path.last().unwrap();
        if last == self.top {
            out.push(path.clone());
            return;
        }
        for &(h, k) in &self.edges {
            if h == last {
                path.push(k);
                self.extend_chains(path, out);
                path.pop();
            }
        }
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.len() <= b.len() && a.iter().all(|x| b.binary_search(x).is_ok())
}

fn cover_edges(nodes: &[LatticeNode]) -> Vec<(usize, usize)> {
    let m = nodes.len();
    let below = |a: usize, b: usize| a != b && is_subset(&nodes[a].block, &nodes[b].block);
    let mut edges = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if below(a, b) && !(0..m).any(|c| below(a, c) && below(c, b)) {
                edges.push((a, b));
            }
        }
    }
    edges
}

/// Subnormal subgroups, as a fixed point of taking normal subgroups.
pub fn subnormal_subgroups(group: &Group, cap: usize) -> Result<Vec<Group>> {
    let mut found: Vec<Group> = vec![group.clone()];
    let mut i = 0;
    while i < found.len() {
        let current = found[i].clone();
        for nsub in normal_subgroups(&current, cap)?.members {
            if !found.iter().any(|f| f.same_subgroup(&nsub)) {
                found.push(nsub);
            }
        }
        i += 1;
    }
    found.sort_by_key(|g| g.order());
    Ok(found)
}

/// The transitive group induced by `K` on `P(K, H)`.
#[derive(Clone, Debug)]
pub struct Component {
    /// Node ids `(H, K)` when taken from a lattice.
    pub pair: Option<(usize, usize)>,
    /// The `K`-images of `α^H`, a partition of `α^K`.
    pub partition: BlockSystem,
    pub action: ActionImage,
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentFlags {
    pub primitive: bool,
    pub quasiprimitive: bool,
    pub innately_transitive: bool,
    pub onan_scott: Option<OnanScottTag>,
}

impl Component {
    pub fn order(&self) -> BigUint {
        self.action.image.order()
    }

    /// Basicness flags of the induced group.
    pub fn flags(&self, cap: usize) -> Result<ComponentFlags> {
        let img = &self.action.image;
        let quasiprimitive = is_quasiprimitive(img, cap)?;
        Ok(ComponentFlags {
            primitive: is_primitive(img)?,
            quasiprimitive,
            innately_transitive: is_innately_transitive(img, cap)?,
            onan_scott: if quasiprimitive {
                Some(onan_scott_type(img, cap)?.tag)
            } else {
                None
            },
        })
    }
}

/// `Comp(K, H)` for `G_α ≤ H < K ≤ G`.
pub fn component(group: &Group, k: &Group, h: &Group, alpha: usize) -> Result<Component> {
    if alpha >= group.degree() {
        return Err(Error::PointOutOfRange(alpha, group.degree()));
    }
    let stab = group.point_stabilizer(alpha)?;
    if !stab.is_subgroup_of(h) {
        return Err(Error::Containment("G_α is not contained in H".into()));
    }
    if !h.is_subgroup_of(k) {
        return Err(Error::Containment("H is not contained in K".into()));
    }
    if !k.is_subgroup_of(group) {
        return Err(Error::Containment("K is not contained in G".into()));
    }
    if h.order() == k.order() {
        return Err(Error::Containment("H must be a proper subgroup of K".into()));
    }
    let seed = sorted(h.orbit(alpha));
    let parts = set_orbit(k.generators(), &seed, group.degree());
    let partition = BlockSystem::from_parts(group.degree(), parts)?;
    let action = ActionImage::on_parts(k, &partition.blocks);
    let degree = partition.len();
    Ok(Component {
        pair: None,
        partition,
        action,
        degree,
    })
}

/// Lattice and its basic components.
pub fn basic_components(
    group: &Group,
    alpha: usize,
    kind: LatticeKind,
    cap: usize,
) -> Result<(SubgroupLattice, Vec<Component>)> {
    let lattice = SubgroupLattice::build(kind, group, alpha, cap)?;
    let comps = lattice.basic_components()?;
    Ok((lattice, comps))
}

/// Proof that `G` embeds in the iterated wreath product of the components
/// along a maximal chain.
#[derive(Clone, Debug, Serialize)]
pub struct WreathEmbeddingCertificate {
    /// L1 node ids, bottom first.
    pub chain: Vec<usize>,
    /// `[G_i : G_{i-1}]`, bottom level first.
    pub factor_degrees: Vec<usize>,
    pub factor_orders: Vec<String>,
    /// Per point, the coordinates `(a_r, …, a_1)`.
    pub addresses: Vec<Vec<usize>>,
    pub address_bijective: bool,
    pub wreath_order: String,
    /// `|W|` from its own stabilizer chain agrees with the product formula.
    pub wreath_order_consistent: bool,
    pub relabeled_generators: Vec<Permutation>,
    pub generator_membership: Vec<bool>,
}

impl WreathEmbeddingCertificate {
    pub fn is_valid(&self) -> bool {
        self.address_bijective
            && self.wreath_order_consistent
            && self.generator_membership.iter().all(|&m| m)
    }
}

/// Wreath embedding along a maximal L1 chain `G_α = G_0 < … < G_r = G`.
pub fn wreath_embedding(lattice: &SubgroupLattice, chain: &[usize]) -> Result<WreathEmbeddingCertificate> {
    if lattice.kind != LatticeKind::L1 {
        return Err(Error::InvalidChain("chain must come from L1".into()));
    }
    if chain.first() != Some(&lattice.bottom) || chain.last() != Some(&lattice.top) {
        return Err(Error::InvalidChain("chain must run from G_α to G".into()));
    }
    for w in chain.windows(2) {
        if !lattice.edges.contains(&(w[0], w[1])) {
            return Err(Error::InvalidChain(format!(
                "nodes {} < {} is not a cover",
                w[0], w[1]
            )));
        }
    }
    let g = &lattice.ambient;
    let n = g.degree();
    let alpha = lattice.base_point;
    let r = chain.len() - 1;
    let level_blocks: Vec<&Vec<usize>> = chain.iter().map(|&i| &lattice.nodes[i].block).collect();
    let systems = level_blocks
        .iter()
        .map(|b| BlockSystem::generated_by(g, b))
        .collect::<Result<Vec<_>>>()?;
    let base_chain = g.chain_with_base(&[alpha]);
    let rep = |beta: usize| -> Permutation {
        if beta == alpha {
            Permutation::identity(n)
        } else {
            base_chain.levels[0].rep(beta).unwrap().into_owned()
        }
    };

    // parts P_i of B_i, and the component on them
    let mut parts_per_level: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    let mut comps: Vec<Group> = vec![Group::trivial(1)];
    for i in 1..=r {
        let upper = &lattice.nodes[chain[i]].group;
        let parts: Vec<Vec<usize>> = systems[i - 1]
            .blocks
            .iter()
            .filter(|b| level_blocks[i].binary_search(&b[0]).is_ok())
            .cloned()
            .collect();
        comps.push(ActionImage::on_parts(upper, &parts).image);
        parts_per_level.push(parts);
    }
    let degrees: Vec<usize> = (1..=r).map(|i| parts_per_level[i].len()).collect();

    // addresses
    let mut addresses = vec![vec![0usize; r]; n];
    for (i, sys) in systems.iter().enumerate().skip(1) {
        let lower = &systems[i - 1];
        let parts = &parts_per_level[i];
        let part_index: BTreeMap<usize, usize> =
            parts.iter().enumerate().map(|(j, p)| (p[0], j)).collect();
        for (omega, addr) in addresses.iter_mut().enumerate() {
            let c = sys.block_containing(omega).unwrap();
            let t_inv = rep(c[0]).inverse();
            let pulled = t_inv.apply(omega);
            let d = lower.block_containing(pulled).unwrap();
            addr[r - i] = part_index[&d[0]];
        }
    }
    let encode = |addr: &[usize]| -> usize {
        // addr = (a_r, …, a_1); a_1 is least significant
        let mut x = 0;
        for (pos, &a) in addr.iter().enumerate() {
            let level = r - pos;
            x = x * degrees[level - 1] + a;
        }
        x
    };
    let codes: Vec<usize> = addresses.iter().map(|a| encode(a)).collect();
    let mut seen = vec![false; n];
    let mut bijective = true;
    for &c in &codes {
        if c >= n || std::mem::replace(&mut seen[c], true) {
            bijective = false;
        }
    }

    // iterated wreath product
    let mut w_gens: Vec<Permutation> = Vec::new();
    let mut w_size = 1usize;
    let mut w_order = BigUint::one();
    for i in 1..=r {
        let d = degrees[i - 1];
        let new_size = w_size * d;
        let mut next = Vec::new();
        for w in &w_gens {
            // acts on the copy with a_i = 0
            let imgs: Vec<usize> = (0..new_size)
                .map(|x| if x / w_size == 0 { w.apply(x) } else { x })
                .collect();
            next.push(Permutation::from_images(imgs)?);
        }
        for c in comps[i].nontrivial_generators() {
            let imgs: Vec<usize> = (0..new_size)
                .map(|x| c.apply(x / w_size) * w_size + x % w_size)
                .collect();
            next.push(Permutation::from_images(imgs)?);
        }
        w_order = w_order.pow(d as u32) * comps[i].order();
        w_gens = next;
        w_size = new_size;
    }
    let wreath = Group::generated(w_size, w_gens);
    let consistent = wreath.order() == w_order && w_size == n;

    let mut relabeled = Vec::new();
    let mut membership = Vec::new();
    if bijective {
        for gen in g.generators() {
            let mut imgs = vec![0usize; n];
            for omega in 0..n {
                imgs[codes[omega]] = codes[gen.apply(omega)];
            }
            let p = Permutation::from_images(imgs)?;
            membership.push(consistent && wreath.contains_unchecked(&p));
            relabeled.push(p);
        }
    }
    let cert = WreathEmbeddingCertificate {
        chain: chain.to_vec(),
        factor_degrees: degrees,
        factor_orders: comps[1..].iter().map(|c| c.order().to_string()).collect(),
        addresses,
        address_bijective: bijective,
        wreath_order: w_order.to_string(),
        wreath_order_consistent: consistent,
        relabeled_generators: relabeled,
        generator_membership: membership,
    };
    if !cert.is_valid() {
        return Err(Error::Internal(
            "relabeled group does not embed in the wreath product".into(),
        ));
    }
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, gens: &[&str]) -> Group {
        Group::from_cycles(n, gens).unwrap()
    }

    fn orders(l: &SubgroupLattice) -> Vec<u64> {
        l.nodes.iter().map(|x| x.group.order_u64().unwrap()).collect()
    }

    #[test]
    fn primitive_l1_has_two_nodes() {
        let s4 = g(4, &["(1 2)", "(1 2 3 4)"]);
        let l = SubgroupLattice::l1(&s4, 0).unwrap();
        assert_eq!(orders(&l), vec![6, 24]);
        assert_eq!(l.covers(), &[(0, 1)]);
        l.verify().unwrap();
        let comps = l.basic_components().unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].degree, 4);
        assert_eq!(comps[0].order(), BigUint::from(24u32));
    }

    #[test]
    fn c6_diamond() {
        let c6 = g(6, &["(1 2 3 4 5 6)"]);
        let l = SubgroupLattice::l1(&c6, 0).unwrap();
        assert_eq!(orders(&l), vec![1, 2, 3, 6]);
        assert_eq!(l.covers(), &[(0, 1), (0, 2), (1, 3), (2, 3)]);
        let degs: Vec<usize> = l.basic_components().unwrap().iter().map(|c| c.degree).collect();
        assert_eq!(degs, vec![2, 3, 3, 2]);
        assert_eq!(l.maximal_chains().len(), 2);
        let l2 = SubgroupLattice::l2(&c6, 0, 100).unwrap();
        assert_eq!(orders(&l2), vec![1, 2, 3, 6]);
        let l3 = SubgroupLattice::l3(&c6, 0, 100).unwrap();
        assert_eq!(orders(&l3), vec![1, 2, 3, 6]);
    }

    #[test]
    fn d8_square() {
        let d8 = g(4, &["(1 2 3 4)", "(2 4)"]);
        let l = SubgroupLattice::l1(&d8, 0).unwrap();
        // G_0 = <(2 4)> < <(2 4),(1 3)> < D8
        assert_eq!(orders(&l), vec![2, 4, 8]);
        assert_eq!(l.nodes[1].block, vec![0, 2]);
        let c = l.component(1, 2).unwrap();
        assert_eq!(c.degree, 2);
        assert_eq!(c.order(), BigUint::from(2u32));
        let l2 = SubgroupLattice::l2(&d8, 0, 100).unwrap();
        assert_eq!(orders(&l2), vec![2, 4, 8]);
    }

    #[test]
    fn component_rejects_equal_pair() {
        let s4 = g(4, &["(1 2)", "(1 2 3 4)"]);
        assert!(matches!(
            component(&s4, &s4, &s4, 0),
            Err(Error::Containment(_))
        ));
        let c = component(&s4, &s4, &s4.point_stabilizer(0).unwrap(), 0).unwrap();
        assert_eq!(c.partition.blocks, (0..4).map(|i| vec![i]).collect::<Vec<_>>());
        assert_eq!(c.action.image.generators(), s4.generators());
    }

    #[test]
    fn wreath_for_c4() {
        let c4 = g(4, &["(1 2 3 4)"]);
        let l = SubgroupLattice::l1(&c4, 0).unwrap();
        let chains = l.maximal_chains();
        assert_eq!(chains, vec![vec![0, 1, 2]]);
        let cert = wreath_embedding(&l, &chains[0]).unwrap();
        assert_eq!(cert.wreath_order, "8");
        assert!(cert.is_valid());
        assert!(matches!(
            wreath_embedding(&l, &[0, 2]),
            Err(Error::InvalidChain(_))
        ));
    }
}
