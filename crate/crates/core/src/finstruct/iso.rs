//! Isomorphism search by backtracking over point assignments.

use super::{mask_iter, BinaryRelation, Lattice, OrderedSpace, Qoset, Topology};

/// The data an isomorphism must preserve: relations as rows of bit masks and
/// set families compared at the leaves of the search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Signature {
    size: usize,
    relations: Vec<Vec<u64>>,
    families: Vec<Vec<u64>>,
}

impl Signature {
    pub fn new(size: usize, relations: Vec<Vec<u64>>, families: Vec<Vec<u64>>) -> Self {
        let families = families
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f
            })
            .collect();
        Signature { size, relations, families }
    }

    /// The same signature with one more relation to preserve.
    pub fn with_relation(mut self, rows: Vec<u64>) -> Self {
        self.relations.push(rows);
        self
    }

    fn colour(&self, x: usize) -> Vec<(u32, u32, bool)> {
        self.relations
            .iter()
            .map(|rows| {
                let out = rows[x].count_ones();
                let inc = rows.iter().filter(|r| *r >> x & 1 == 1).count() as u32;
                (out, inc, rows[x] >> x & 1 == 1)
            })
            .collect()
    }
}

/// Structures that can be compared up to relabelling of their points.
pub trait Structure {
    fn signature(&self) -> Signature;
}

fn rows16(rows: &[super::PointSet]) -> Vec<u64> {
    rows.iter().map(|r| r.bits() as u64).collect()
}

impl Structure for Qoset {
    fn signature(&self) -> Signature {
        Signature::new(self.size(), vec![rows16(self.up_rows())], vec![])
    }
}

impl Structure for Topology {
    fn signature(&self) -> Signature {
        Signature::new(
            self.size(),
            vec![rows16(self.minimal_neighbourhoods())],
            vec![rows16(self.opens())],
        )
    }
}

impl Structure for OrderedSpace {
    fn signature(&self) -> Signature {
        let t = self.topology();
        Signature::new(
            self.size(),
            vec![rows16(self.qoset().up_rows()), rows16(t.minimal_neighbourhoods())],
            vec![rows16(t.opens())],
        )
    }
}

impl Structure for Lattice {
    fn signature(&self) -> Signature {
        Signature::new(self.size(), vec![(0..self.size()).map(|x| self.up(x)).collect()], vec![])
    }
}

impl Structure for BinaryRelation {
    fn signature(&self) -> Signature {
        Signature::new(self.size(), vec![rows16(self.rows())], vec![])
    }
}

/// The lexicographically least bijection `p` (point `i` of `a` goes to `p[i]` of `b`)
/// that carries `a` onto `b`, if one exists.
pub fn isomorphism<T: Structure + ?Sized>(a: &T, b: &T) -> Option<Vec<usize>> {
    find_isomorphism(&a.signature(), &b.signature())
}

pub fn is_isomorphic<T: Structure + ?Sized>(a: &T, b: &T) -> bool {
    isomorphism(a, b).is_some()
}

pub fn find_isomorphism(a: &Signature, b: &Signature) -> Option<Vec<usize>> {
    if a.size != b.size || a.relations.len() != b.relations.len() || a.families.len() != b.families.len()
    {
        return None;
    }
    if a.families.iter().zip(&b.families).any(|(x, y)| x.len() != y.len()) {
        return None;
    }
    let ca: Vec<_> = (0..a.size).map(|x| a.colour(x)).collect();
    let cb: Vec<_> = (0..b.size).map(|x| b.colour(x)).collect();
    let (mut sa, mut sb) = (ca.clone(), cb.clone());
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let mut search = Search { a, b, ca, cb, perm: Vec::with_capacity(a.size), used: 0 };
    search.run().then_some(search.perm)
}

struct Search<'a> {
    a: &'a Signature,
    b: &'a Signature,
    ca: Vec<Vec<(u32, u32, bool)>>,
    cb: Vec<Vec<(u32, u32, bool)>>,
    perm: Vec<usize>,
    used: u64,
}

impl Search<'_> {
    fn run(&mut self) -> bool {
        let i = self.perm.len();
        if i == self.a.size {
            return self.families_match();
        }
        for c in 0..self.b.size {
            if self.used >> c & 1 == 1 || self.ca[i] != self.cb[c] || !self.consistent(i, c) {
                continue;
            }
            self.perm.push(c);
            self.used |= 1 << c;
            if self.run() {
                return true;
            }
            self.used &= !(1 << c);
            self.perm.pop();
        }
        false
    }

    fn consistent(&self, i: usize, c: usize) -> bool {
        self.a.relations.iter().zip(&self.b.relations).all(|(ra, rb)| {
            self.perm.iter().enumerate().all(|(j, &pj)| {
                (ra[i] >> j & 1 == rb[c] >> pj & 1) && (ra[j] >> i & 1 == rb[pj] >> c & 1)
            })
        })
    }

    fn families_match(&self) -> bool {
        self.a.families.iter().zip(&self.b.families).all(|(fa, fb)| {
            let mut mapped: Vec<u64> = fa
                .iter()
                .map(|&s| mask_iter(s).fold(0u64, |acc, x| acc | 1 << self.perm[x]))
                .collect();
            mapped.sort_unstable();
            mapped == *fb
        })
    }
}
