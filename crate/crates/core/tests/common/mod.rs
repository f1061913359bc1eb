//! Brute-force oracles shared by the integration tests. Nothing here uses
//! stabilizer chains: elements come from closing the generators under
//! multiplication, and subgroups are plain sets of element indices.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use basicperm::catalog;
use basicperm::{Graph, Group, Permutation};

/// Transitive corpus groups, by catalog name.
pub const CORPUS: &[&str] = &[
    "s4", "a4", "d8", "c4", "a5", "s5", "c6", "d12", "d10", "agl1_5", "a5_coset_c5", "a5xc3_15",
    "pa25", "hs60", "sd60",
];

pub fn corpus() -> Vec<(&'static str, Group)> {
    CORPUS.iter().map(|&n| (n, catalog::group(n).unwrap())).collect()
}

const TABLE_MAX: usize = 5000;

/// A finite group as an explicit multiplication table.
pub struct Brute {
    pub elems: Vec<Permutation>,
    pub index: HashMap<Permutation, usize>,
    /// `mul[i * len + j]` is the index of `elems[i] * elems[j]`.
    mul: Vec<u32>,
    pub identity: usize,
    pub gens: Vec<usize>,
}

impl Brute {
    pub fn new(group: &Group) -> Brute {
        let gens: Vec<Permutation> = group.generators().to_vec();
        let id = Permutation::identity(group.degree());
        let mut elems = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut i = 0;
        while i < elems.len() {
            for g in &gens {
                let p = elems[i].product(g).unwrap();
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            i += 1;
        }
        // a short list of points whose images pin down each element
        let mut points: Vec<usize> = Vec::new();
        for x in 0..group.degree() {
            let keys: HashSet<Vec<usize>> = elems
                .iter()
                .map(|e| points.iter().map(|&b| e.apply(b)).collect())
                .collect();
            if keys.len() == elems.len() {
                break;
            }
            points.push(x);
        }
        let key_index: HashMap<Vec<usize>, usize> = elems
            .iter()
            .enumerate()
            .map(|(i, e)| (points.iter().map(|&b| e.apply(b)).collect(), i))
            .collect();
        let n = elems.len();
        // tables for larger groups are left empty
        let cells = if n <= TABLE_MAX { n * n } else { 0 };
        let mut mul = vec![0u32; cells];
        for (i, a) in elems.iter().enumerate().take(if cells > 0 { n } else { 0 }) {
            let base: Vec<usize> = points.iter().map(|&b| a.apply(b)).collect();
            for (j, b) in elems.iter().enumerate() {
                let key: Vec<usize> = base.iter().map(|&x| b.apply(x)).collect();
                mul[i * n + j] = key_index[&key] as u32;
            }
        }
        let gens = gens.iter().map(|g| index[g]).collect();
        Brute { elems, index, mul, identity: 0, gens }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mul[i * self.len() + j] as usize
    }

    pub fn inv(&self, i: usize) -> usize {
        (0..self.len()).find(|&j| self.mul(i, j) == self.identity).unwrap()
    }

    /// Subgroup generated by the listed elements.
    pub fn closure(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut seen = vec![false; self.len()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        let mut out = BTreeSet::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    out.insert(y);
                    queue.push_back(y);
                }
            }
        }
        out
    }

    /// Element indices of a subgroup given by a group handle.
    pub fn members(&self, h: &Group) -> BTreeSet<usize> {
        (0..self.len())
            .filter(|&i| h.contains(&self.elems[i]).unwrap())
            .collect()
    }

    pub fn stabilizer(&self, alpha: usize) -> BTreeSet<usize> {
        (0..self.len()).filter(|&i| self.elems[i].apply(alpha) == alpha).collect()
    }

    /// Every subgroup containing `base`, found by adding one element at a time.
    pub fn overgroups(&self, base: &BTreeSet<usize>) -> BTreeSet<BTreeSet<usize>> {
        let mut found: BTreeSet<BTreeSet<usize>> = BTreeSet::from([base.clone()]);
        let mut queue = VecDeque::from([base.clone()]);
        while let Some(k) = queue.pop_front() {
            let kv: Vec<usize> = k.iter().copied().collect();
            let mut covered = vec![false; self.len()];
            for &x in &kv {
                covered[x] = true;
            }
            for g in 0..self.len() {
                if covered[g] {
                    continue;
                }
                // ⟨K, g⟩ depends only on the double coset KgK
                for &a in &kv {
                    let ag = self.mul(a, g);
                    for &b in &kv {
                        covered[self.mul(ag, b)] = true;
                    }
                }
                let mut gens = kv.clone();
                gens.push(g);
                let j = self.closure(&gens);
                if found.insert(j.clone()) {
                    queue.push_back(j);
                }
            }
        }
        found
    }

    pub fn conjugacy_classes(&self) -> Vec<BTreeSet<usize>> {
        let invs: Vec<usize> = (0..self.len()).map(|i| self.inv(i)).collect();
        let mut class_of = vec![usize::MAX; self.len()];
        let mut classes = Vec::new();
        for x in 0..self.len() {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c: BTreeSet<usize> = (0..self.len())
                .map(|g| self.mul(self.mul(invs[g], x), g))
                .collect();
            for &y in &c {
                class_of[y] = classes.len();
            }
            classes.push(c);
        }
        classes
    }

    /// Normal subgroups as the unions of classes closed under multiplication.
    pub fn normal_subgroups(&self) -> BTreeSet<BTreeSet<usize>> {
        let classes = self.conjugacy_classes();
        let rest: Vec<&BTreeSet<usize>> = classes.iter().filter(|c| !c.contains(&self.identity)).collect();
        assert!(rest.len() <= 24, "too many classes for a subset scan");
        let mut out = BTreeSet::new();
        for mask in 0u32..(1 << rest.len()) {
            let mut s: BTreeSet<usize> = BTreeSet::from([self.identity]);
            for (i, c) in rest.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    s.extend(c.iter().copied());
                }
            }
            if self.len() % s.len() != 0 {
                continue;
            }
            let closed = s.iter().all(|&a| s.iter().all(|&b| s.contains(&self.mul(a, b))));
            if closed {
                out.insert(s);
            }
        }
        out
    }

    /// Orbits of the subgroup with the given element indices.
    pub fn orbit_count(&self, sub: &BTreeSet<usize>, degree: usize) -> usize {
        let mut seen = vec![false; degree];
        let mut count = 0;
        for a in 0..degree {
            if seen[a] {
                continue;
            }
            count += 1;
            for &i in sub {
                seen[self.elems[i].apply(a)] = true;
            }
        }
        count
    }
}

/// Number of automorphisms of a connected graph, by plain backtracking:
/// vertices are placed in breadth-first order, each next to the image of its
/// parent, checking adjacency against every vertex placed so far.
pub fn count_automorphisms(g: &Graph) -> u64 {
    let n = g.vertex_count();
    let mut order = vec![0usize];
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        for &w in g.neighbors(order[i]) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = order[i];
                order.push(w);
            }
        }
        i += 1;
    }
    assert_eq!(order.len(), n, "graph must be connected");
    fn rec(g: &Graph, order: &[usize], parent: &[usize], k: usize, img: &mut [usize], used: &mut [bool]) -> u64 {
        if k == order.len() {
            return 1;
        }
        let v = order[k];
        let candidates: Vec<usize> = if k == 0 {
            (0..g.vertex_count()).collect()
        } else {
            g.neighbors(img[parent[v]]).to_vec()
        };
        let mut total = 0;
        for w in candidates {
            if used[w] {
                continue;
            }
            let ok = order[..k]
                .iter()
                .all(|&u| g.has_edge(u, v) == g.has_edge(img[u], w));
            if ok {
                img[v] = w;
                used[w] = true;
                total += rec(g, order, parent, k + 1, img, used);
                used[w] = false;
            }
        }
        total
    }
    let mut img = vec![usize::MAX; n];
    let mut used = vec![false; n];
    rec(g, &order, &parent, 0, &mut img, &mut used)
}
