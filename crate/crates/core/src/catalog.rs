//! Named groups and graphs used as a test corpus.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{automorphism_group, Graph};
use crate::group::Group;
use crate::perm::Permutation;

fn cycle_perm(points: &[usize], degree: usize) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    for (i, &p) in points.iter().enumerate() {
        images[p] = points[(i + 1) % points.len()];
    }
    Permutation::from_images(images).unwrap()
}

fn with_gens(degree: usize, gens: Vec<Permutation>) -> Group {
    let gens: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();
    if gens.is_empty() {
        Group::trivial(degree)
    } else {
        Group::new(gens).unwrap()
    }
}

pub fn symmetric(n: usize) -> Group {
    let all: Vec<usize> = (0..n).collect();
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle_perm(&[0, 1], n));
        gens.push(cycle_perm(&all, n));
    }
    with_gens(n.max(1), gens)
}

pub fn alternating(n: usize) -> Group {
    let gens = (2..n).map(|i| cycle_perm(&[0, 1, i], n)).collect();
    with_gens(n.max(1), gens)
}

pub fn cyclic(n: usize) -> Group {
    let all: Vec<usize> = (0..n).collect();
    with_gens(n.max(1), vec![cycle_perm(&all, n.max(1))])
}

/// Symmetries of an n-gon, of order 2n.
pub fn dihedral(n: usize) -> Group {
    let n = n.max(1);
    let all: Vec<usize> = (0..n).collect();
    let flip = Permutation::from_images((0..n).map(|i| (n - i) % n).collect()).unwrap();
    with_gens(n, vec![cycle_perm(&all, n), flip])
}

/// The affine group of the line over the field of order 5.
pub fn agl1_5() -> Group {
    Group::from_cycles(5, &["(1 2 3 4 5)", "(2 3 5 4)"]).unwrap()
}

/// A5 acting on the 12 cosets of a cyclic subgroup of order 5.
pub fn a5_coset_c5() -> Group {
    let a5 = alternating(5);
    let c5 = Group::from_cycles(5, &["(1 2 3 4 5)"]).unwrap();
    a5.coset_action(&c5).unwrap().image
}

/// Elements of `group` with a lookup table.
fn indexed_elements(group: &Group) -> (Vec<Permutation>, HashMap<Permutation, usize>) {
    let elems = group.elements(usize::MAX).unwrap();
    let index = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    (elems, index)
}

fn perm_from_map(n: usize, f: impl Fn(usize) -> usize) -> Permutation {
    Permutation::from_images((0..n).map(f).collect()).unwrap()
}

/// A5 × C3 on the 15 cosets of a Klein four-subgroup: A5 by right
/// multiplication, C3 by left multiplication by an order-3 element
/// normalizing the four-group.
pub fn a5xc3_15() -> Group {
    let a5 = alternating(5);
    let v4 = Group::from_cycles(5, &["(1 2)(3 4)", "(1 3)(2 4)"]).unwrap();
    let t = Permutation::parse_cycles("(1 2 3)", 5).unwrap();
    let (elems, index) = indexed_elements(&a5);
    let v4_elems = v4.elements(4).unwrap();
    // coset of x = least index in V4·x
    let coset_key = |x: &Permutation| -> usize {
        v4_elems.iter().map(|h| index[&h.mul_unchecked(x)]).min().unwrap()
    };
    let mut keys: Vec<usize> = elems.iter().map(coset_key).collect();
    keys.sort_unstable();
    keys.dedup();
    let point = |x: &Permutation| keys.binary_search(&coset_key(x)).unwrap();
    let mut gens: Vec<Permutation> = a5
        .generators()
        .iter()
        .map(|g| perm_from_map(keys.len(), |i| point(&elems[keys[i]].mul_unchecked(g))))
        .collect();
    gens.push(perm_from_map(keys.len(), |i| point(&t.mul_unchecked(&elems[keys[i]]))));
    Group::new(gens).unwrap()
}

/// A5 × A5 on the 60 elements of A5 by `x ↦ s⁻¹·x·t`.
pub fn hs60() -> Group {
    let (gens, _) = hs60_parts();
    Group::new(gens).unwrap()
}

fn hs60_parts() -> (Vec<Permutation>, (Vec<Permutation>, HashMap<Permutation, usize>)) {
    let a5 = alternating(5);
    let (elems, index) = indexed_elements(&a5);
    let mut gens = Vec::new();
    for a in a5.generators() {
        let ainv = a.inverse();
        gens.push(perm_from_map(60, |i| index[&ainv.mul_unchecked(&elems[i])]));
        gens.push(perm_from_map(60, |i| index[&elems[i].mul_unchecked(a)]));
    }
    (gens, (elems, index))
}

/// [`hs60`] extended by inversion.
pub fn sd60() -> Group {
    let (mut gens, (elems, index)) = hs60_parts();
    gens.push(perm_from_map(60, |i| index[&elems[i].inverse()]));
    Group::new(gens).unwrap()
}

/// A5 wr S2 in product action on 25 points.
pub fn pa25() -> Group {
    let a5 = alternating(5);
    let mut gens = Vec::new();
    for g in a5.generators() {
        gens.push(perm_from_map(25, |p| 5 * g.apply(p / 5) + p % 5));
        gens.push(perm_from_map(25, |p| 5 * (p / 5) + g.apply(p % 5)));
    }
    gens.push(perm_from_map(25, |p| 5 * (p % 5) + p / 5));
    Group::new(gens).unwrap()
}

/// A5² acting regularly on itself by right multiplication, extended by the
/// coordinate swap; 3600 points.
pub fn tw3600() -> Group {
    let a5 = alternating(5);
    let (elems, index) = indexed_elements(&a5);
    let mut gens = Vec::new();
    for g in a5.generators() {
        gens.push(perm_from_map(3600, |p| 60 * index[&elems[p / 60].mul_unchecked(g)] + p % 60));
        gens.push(perm_from_map(3600, |p| 60 * (p / 60) + index[&elems[p % 60].mul_unchecked(g)]));
    }
    gens.push(perm_from_map(3600, |p| 60 * (p % 60) + p / 60));
    Group::new(gens).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::new_lossy(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::new_lossy(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    Graph::new_lossy(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
}

pub fn hypercube(d: u32) -> Graph {
    let n = 1usize << d;
    Graph::new_lossy(
        n,
        (0..n).flat_map(|u| (0..d).map(move |b| (u, u ^ (1 << b)))),
    )
}

/// Outer cycle `0..n`, spokes `i ~ n+i`, inner edges `n+i ~ n+(i+k)`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(Error::Precondition(format!(
            "generalized Petersen graph needs n >= 3 and 1 <= k < n/2, got ({n}, {k})"
        )));
    }
    let edges = (0..n).flat_map(|i| [(i, (i + 1) % n), (i, n + i), (n + i, n + (i + k) % n)]);
    Graph::new(2 * n, edges)
}

pub fn petersen() -> Graph {
    generalized_petersen(5, 2).unwrap()
}

pub fn dodecahedron() -> Graph {
    generalized_petersen(10, 2).unwrap()
}

/// Points `0..7` and lines `7..14` of the Fano plane, line `j` being
/// `{j, j+1, j+3} mod 7`.
pub fn heawood() -> Graph {
    Graph::new(14, (0..7).flat_map(|j| [0, 1, 3].map(|d| ((j + d) % 7, 7 + j)))).unwrap()
}

const TUTTE_COXETER_EDGES: [(usize, usize); 45] = [
    (0, 1), (0, 17), (0, 29), (1, 2), (1, 22), (2, 3), (2, 9), (3, 4), (3, 26),
    (4, 5), (4, 13), (5, 6), (5, 18), (6, 7), (6, 23), (7, 8), (7, 28), (8, 9),
    (8, 15), (9, 10), (10, 11), (10, 19), (11, 12), (11, 24), (12, 13), (12, 29),
    (13, 14), (14, 15), (14, 21), (15, 16), (16, 17), (16, 25), (17, 18), (18, 19),
    (19, 20), (20, 21), (20, 27), (21, 22), (22, 23), (23, 24), (24, 25), (25, 26),
    (26, 27), (27, 28), (28, 29),
];

/// The Tutte–Coxeter graph (Tutte 8-cage), checked on load.
pub fn tutte_coxeter() -> Graph {
    let g = Graph::new(30, TUTTE_COXETER_EDGES).expect("fixture is a simple graph");
    assert!(
        g.regular_valency() == Some(3) && g.is_bipartite() && g.girth() == Some(8),
        "Tutte–Coxeter fixture failed validation"
    );
    g
}

/// The full automorphism group of the Petersen graph.
pub fn petersen_group() -> Group {
    automorphism_group(&petersen(), 64).unwrap()
}

pub const GROUP_NAMES: &[&str] = &[
    "s<n>", "a<n>", "c<n>", "d<2n>", "agl1_5", "a5_coset_c5", "a5xc3_15", "hs60", "sd60", "pa25",
    "tw3600", "aut_<graph>",
];

pub const GRAPH_NAMES: &[&str] = &[
    "cycle<n>", "k<n>", "k<m>_<n>", "q<d>", "gp<n>_<k>", "petersen", "dodecahedron", "heawood",
    "tutte_coxeter",
];

fn number(s: &str) -> Option<usize> {
    (!s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()))
        .then(|| s.parse().ok())
        .flatten()
}

fn pair(s: &str) -> Option<(usize, usize)> {
    let (a, b) = s.split_once('_')?;
    Some((number(a)?, number(b)?))
}

/// Looks up a group by name; see [`GROUP_NAMES`] for the accepted forms.
pub fn group(name: &str) -> Result<Group> {
    const MAX_N: usize = 1000;
    let unknown = || Error::UnknownName(name.to_string());
    let sized = |rest: &str| number(rest).filter(|&n| (1..=MAX_N).contains(&n));
    let g = match name {
        "agl1_5" => agl1_5(),
        "a5_coset_c5" => a5_coset_c5(),
        "a5xc3_15" => a5xc3_15(),
        "hs60" => hs60(),
        "sd60" => sd60(),
        "pa25" => pa25(),
        "tw3600" => tw3600(),
        _ => {
            if let Some(rest) = name.strip_prefix("aut_") {
                return automorphism_group(&self::graph(rest)?, 64);
            }
            let (head, rest) = name.split_at(1.min(name.len()));
            match head {
                "s" => symmetric(sized(rest).ok_or_else(unknown)?),
                "a" => alternating(sized(rest).ok_or_else(unknown)?),
                "c" => cyclic(sized(rest).ok_or_else(unknown)?),
                "d" => {
                    let two_n = sized(rest).filter(|m| m % 2 == 0).ok_or_else(unknown)?;
                    dihedral(two_n / 2)
                }
                _ => return Err(unknown()),
            }
        }
    };
    Ok(g)
}

/// Looks up a graph by name; see [`GRAPH_NAMES`] for the accepted forms.
pub fn graph(name: &str) -> Result<Graph> {
    const MAX_N: usize = 4096;
    let unknown = || Error::UnknownName(name.to_string());
    let g = match name {
        "petersen" => petersen(),
        "dodecahedron" => dodecahedron(),
        "heawood" => heawood(),
        "tutte_coxeter" => tutte_coxeter(),
        _ => {
            if let Some(rest) = name.strip_prefix("cycle") {
                cycle(number(rest).filter(|&n| (3..=MAX_N).contains(&n)).ok_or_else(unknown)?)
            } else if let Some(rest) = name.strip_prefix("gp") {
                let (n, k) = pair(rest).filter(|&(n, _)| n <= MAX_N).ok_or_else(unknown)?;
                generalized_petersen(n, k)?
            } else if let Some(rest) = name.strip_prefix('q') {
                let d = number(rest).filter(|&d| (1..=12).contains(&d)).ok_or_else(unknown)?;
                hypercube(d as u32)
            } else if let Some(rest) = name.strip_prefix('k') {
                if let Some((m, n)) = pair(rest) {
                    if m == 0 || n == 0 || m + n > MAX_N {
                        return Err(unknown());
                    }
                    complete_bipartite(m, n)
                } else {
                    complete(number(rest).filter(|&n| (1..=MAX_N).contains(&n)).ok_or_else(unknown)?)
                }
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn order(g: &Group) -> BigUint {
        g.order()
    }

    #[test]
    fn group_orders() {
        let cases: [(&str, u64, usize); 12] = [
            ("s5", 120, 5),
            ("a5", 60, 5),
            ("a3", 3, 3),
            ("c6", 6, 6),
            ("d10", 10, 5),
            ("agl1_5", 20, 5),
            ("a5_coset_c5", 60, 12),
            ("a5xc3_15", 180, 15),
            ("hs60", 3600, 60),
            ("sd60", 7200, 60),
            ("pa25", 7200, 25),
            ("s1", 1, 1),
        ];
        for (name, ord, deg) in cases {
            let g = group(name).unwrap();
            assert_eq!(order(&g), BigUint::from(ord), "{name}");
            assert_eq!(g.degree(), deg, "{name}");
            assert!(g.is_transitive(), "{name}");
        }
        assert!(matches!(group("x5"), Err(Error::UnknownName(_))));
        assert!(group("d7").is_err());
        assert!(group("s0").is_err());
    }

    #[test]
    fn graph_lookup() {
        let p = graph("petersen").unwrap();
        assert_eq!((p.vertex_count(), p.edge_count(), p.regular_valency()), (10, 15, Some(3)));
        assert_eq!(graph("heawood").unwrap().girth(), Some(6));
        assert_eq!(graph("k3_3").unwrap().edge_count(), 9);
        assert_eq!(graph("k4").unwrap().edge_count(), 6);
        assert_eq!(graph("q3").unwrap().edge_count(), 12);
        assert_eq!(graph("cycle7").unwrap().edge_count(), 7);
        assert_eq!(graph("gp10_2").unwrap(), dodecahedron());
        let t = tutte_coxeter();
        assert_eq!((t.vertex_count(), t.edge_count()), (30, 45));
        assert!(graph("gp4_2").is_err());
        assert!(graph("wheel5").is_err());
    }
}
