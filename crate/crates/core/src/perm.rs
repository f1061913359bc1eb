//! Permutations of `{0, …, n-1}`.
//!
//! Composition convention: `p * q` applies `p` first, then `q`, so that
//! `i^(pq) = (i^p)^q`. Text I/O uses 1-based points in disjoint-cycle notation.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A bijection of `{0, …, degree-1}`, stored as its image vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image vector, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {} out of range for degree {}",
                    x + 1,
                    n
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "image {} appears twice",
                    x + 1
                )));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    /// Caller guarantees `images` is a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.iter().map(|&x| x as usize).collect()).is_ok());
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Parses disjoint-cycle notation with 1-based points, e.g. `"(1 2 3)(4 5)"`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let bytes = text.as_bytes();
        let mut pos = 0;
        let err = |msg: String| Err(Error::Parse(msg));
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        skip_ws(&mut pos);
        if pos == bytes.len() {
            return err("empty cycle text".into());
        }
        while pos < bytes.len() {
            if bytes[pos] != b'(' {
                return err(format!("expected '(' but found {:?}", token_at(text, pos)));
            }
            pos += 1;
            let mut cycle: Vec<usize> = Vec::new();
            loop {
                skip_ws(&mut pos);
                if pos == bytes.len() {
                    return err("unclosed '('".into());
                }
                if bytes[pos] == b')' {
                    pos += 1;
                    break;
                }
                // commas are tolerated as separators
                if bytes[pos] == b',' {
                    pos += 1;
                    continue;
                }
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return err(format!("unexpected token {:?}", token_at(text, start)));
                }
                let tok = &text[start..pos];
                let point: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad integer {tok:?}")))?;
                if point == 0 || point > degree {
                    return err(format!("point {point} out of range 1..={degree}"));
                }
                let p = point - 1;
                if used[p] {
                    return err(format!("repeated point {point}"));
                }
                used[p] = true;
                cycle.push(p);
            }
            for (i, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(i + 1) % cycle.len()] as u32;
            }
            skip_ws(&mut pos);
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of point `i`.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` first, then `other`.
    pub fn product(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.mul_unchecked(other))
    }

    #[inline]
    pub(crate) fn mul_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// `other⁻¹ · self · other`.
    pub fn conjugate_by(&self, other: &Permutation) -> Permutation {
        // i^(g^-1 p g): if j = i^(g^-1) then the result maps j^g ↦ (j^p)^g
        let mut out = vec![0u32; self.degree()];
        for (j, &x) in self.images.iter().enumerate() {
            out[other.images[j] as usize] = other.images[x as usize];
        }
        Permutation {
            images: out.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    /// Element order (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc / gcd(acc, c.len() as u64) * c.len() as u64)
    }

    /// Disjoint cycles of length ≥ 2, each starting at its least point,
    /// sorted by least point. Points are 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Smallest point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }
}

fn token_at(text: &str, pos: usize) -> String {
    text[pos..]
        .split(|c: char| c.is_whitespace() || c == '(' || c == ')')
        .next()
        .filter(|s| !s.is_empty())
        .unwrap_or(&text[pos..(pos + 1).min(text.len())])
        .to_string()
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on degree mismatch; use [`Permutation::product`] for a checked version.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.mul_unchecked(rhs)
    }
}

/// 1-based disjoint-cycle notation; the identity renders as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(text, n).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("(1 2 3)(4 5)", 5).images(), &[1, 2, 0, 4, 3]);
        assert!(p("()", 4).is_identity());
        assert_eq!(p("()", 4).degree(), 4);
        let e = Permutation::parse_cycles("(1 2)(2 3)", 3).unwrap_err();
        assert!(e.to_string().contains("repeated point 2"), "{e}");
    }

    #[test]
    fn parse_errors_name_token() {
        let e = Permutation::parse_cycles("(1 7)", 5).unwrap_err();
        assert!(e.to_string().contains("point 7 out of range"), "{e}");
        let e = Permutation::parse_cycles("(1 2", 5).unwrap_err();
        assert!(e.to_string().contains("unclosed"), "{e}");
        let e = Permutation::parse_cycles("(1 x)", 5).unwrap_err();
        assert!(e.to_string().contains("\"x\""), "{e}");
        let e = Permutation::parse_cycles("1 2)", 5).unwrap_err();
        assert!(e.to_string().contains("expected '('"), "{e}");
    }

    #[test]
    fn product_apply_left_first() {
        // (1 2) then (2 3): 1→2→3, 3→3→2, 2→1→1, i.e. (1 3 2)
        let r = p("(1 2)", 3).product(&p("(2 3)", 3)).unwrap();
        assert_eq!(r, p("(1 3 2)", 3));
        assert_eq!(r.apply(0), 2);
        let q = p("(1 3)", 3);
        assert_eq!(Permutation::identity(3).product(&q).unwrap(), q);
        let c = p("(1 2 3)", 3);
        assert!(c.product(&c.inverse()).unwrap().is_identity());
        assert!(matches!(
            c.product(&Permutation::identity(4)),
            Err(Error::DegreeMismatch(3, 4))
        ));
    }

    #[test]
    fn cycle_decomposition_examples() {
        let a = Permutation::from_images(vec![1, 2, 0, 4, 3]).unwrap();
        assert_eq!(a.cycles(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert!(Permutation::identity(5).cycles().is_empty());
        let b = Permutation::from_images(vec![1, 0, 3, 2]).unwrap();
        assert_eq!(b.cycles(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(b.to_string(), "(1 2)(3 4)");
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3]).is_err());
    }

    #[test]
    fn conjugation_and_order() {
        let x = p("(1 2)", 4);
        let g = p("(1 3)(2 4)", 4);
        assert_eq!(x.conjugate_by(&g), p("(3 4)", 4));
        assert_eq!(x.conjugate_by(&g), &(&g.inverse() * &x) * &g);
        assert_eq!(p("(1 2 3)(4 5)", 5).order(), 6);
        assert_eq!(p("(1 2 3)(4 5)", 5).pow(6), Permutation::identity(5));
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_cancels(a in arb_perm(9)) {
            prop_assert!((&a * &a.inverse()).is_identity());
            prop_assert!((&a.inverse() * &a).is_identity());
        }

        #[test]
        fn render_parse_roundtrip(a in arb_perm(12)) {
            prop_assert_eq!(Permutation::parse_cycles(&a.to_string(), 12).unwrap(), a);
        }

        #[test]
        fn product_associative(a in arb_perm(8), b in arb_perm(8), c in arb_perm(8)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }
    }
}
