use super::{mask_iter, PointSet, Qoset, ValidationError};

/// Largest lattice the tables support; element sets are `u64` masks.
pub const MAX_ELEMENTS: usize = 64;

/// A set of lattice elements as a bit mask.
pub type ElemSet = u64;

pub fn elem_full(m: usize) -> ElemSet {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

/// A finite lattice with precomputed meet and join tables.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lattice {
    m: usize,
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
    meet: Vec<u8>,
    join: Vec<u8>,
    bottom: usize,
    top: usize,
}

impl Lattice {
    /// Validate an order matrix (`leq[x][y]` means `x <= y`).
    pub fn new(m: usize, leq: &[Vec<bool>]) -> Result<Self, ValidationError> {
        if leq.len() != m {
            return Err(ValidationError::Dimension { expected: m, found: leq.len() });
        }
        if let Some(row) = leq.iter().find(|r| r.len() != m) {
            return Err(ValidationError::Dimension { expected: m, found: row.len() });
        }
        Self::from_fn(m, |x, y| leq[x][y])
    }

    pub fn from_fn(m: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self, ValidationError> {
        if m == 0 {
            return Err(ValidationError::CarrierSize(0));
        }
        if m > MAX_ELEMENTS {
            return Err(ValidationError::LatticeTooLarge(m));
        }
        let up: Vec<ElemSet> = (0..m)
            .map(|x| (0..m).filter(|&y| leq(x, y)).fold(0, |a, y| a | 1 << y))
            .collect();
        if let Some(x) = (0..m).find(|&x| up[x] >> x & 1 == 0) {
            return Err(ValidationError::NotReflexive(x));
        }
        for x in 0..m {
            for y in mask_iter(up[x]) {
                let escape = up[y] & !up[x];
                if escape != 0 {
                    return Err(ValidationError::NotTransitive(x, y, escape.trailing_zeros() as usize));
                }
            }
        }
        for x in 0..m {
            for y in x + 1..m {
                if up[x] >> y & 1 == 1 && up[y] >> x & 1 == 1 {
                    return Err(ValidationError::NotAntisymmetric(x, y));
                }
            }
        }
        let down: Vec<ElemSet> = (0..m)
            .map(|y| (0..m).filter(|&x| up[x] >> y & 1 == 1).fold(0, |a, x| a | 1 << x))
            .collect();
        let mut meet = vec![0u8; m * m];
        let mut join = vec![0u8; m * m];
        for x in 0..m {
            for y in 0..m {
                let lower = down[x] & down[y];
                let g = mask_iter(lower).find(|&z| lower & !down[z] == 0);
                meet[x * m + y] = g.ok_or(ValidationError::NoMeet(x, y))? as u8;
            }
        }
        for x in 0..m {
            for y in 0..m {
                let upper = up[x] & up[y];
                let l = mask_iter(upper).find(|&z| upper & !up[z] == 0);
                join[x * m + y] = l.ok_or(ValidationError::NoJoin(x, y))? as u8;
            }
        }
        let full = elem_full(m);
        let bottom = (0..m).find(|&x| up[x] == full).ok_or(ValidationError::NoMeet(0, 0))?;
        let top = (0..m).find(|&x| down[x] == full).ok_or(ValidationError::NoJoin(0, 0))?;
        Ok(Lattice { m, up, down, meet, join, bottom, top })
    }

    /// The family ordered by inclusion. Returns an error if it is not a lattice.
    pub fn of_family(family: &[PointSet]) -> Result<Self, ValidationError> {
        Self::from_fn(family.len(), |x, y| family[x].is_subset(family[y]))
    }

    /// A poset viewed as a lattice (fails unless all meets and joins exist).
    pub fn of_qoset(q: &Qoset) -> Result<Self, ValidationError> {
        Self::from_fn(q.size(), |x, y| q.leq(x, y))
    }

    /// The chain `0 < 1 < .. < m-1`.
    pub fn chain(m: usize) -> Self {
        Self::from_fn(m, |x, y| x <= y).expect("chains are lattices")
    }

    /// Bottom 0, atoms 1 and 2, top 3.
    pub fn diamond() -> Self {
        Self::from_fn(4, |x, y| x == y || x == 0 || y == 3).expect("2x2 is a lattice")
    }

    /// Bottom 0, three pairwise incomparable atoms 1, 2, 3, top 4.
    pub fn m3() -> Self {
        Self::from_fn(5, |x, y| x == y || x == 0 || y == 4).expect("M3 is a lattice")
    }

    /// Bottom 0, chain 1 < 2 on one side, 3 on the other, top 4.
    pub fn n5() -> Self {
        Self::from_fn(5, |x, y| x == y || x == 0 || y == 4 || (x == 1 && y == 2))
            .expect("N5 is a lattice")
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn full(&self) -> ElemSet {
        elem_full(self.m)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x] >> y & 1 == 1
    }

    pub fn up(&self, x: usize) -> ElemSet {
        self.up[x]
    }

    pub fn down(&self, x: usize) -> ElemSet {
        self.down[x]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.m + y] as usize
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.m + y] as usize
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Join of a set of elements (bottom for the empty set).
    pub fn join_all(&self, set: ElemSet) -> usize {
        mask_iter(set).fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of a set of elements (top for the empty set).
    pub fn meet_all(&self, set: ElemSet) -> usize {
        mask_iter(set).fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn up_closure(&self, set: ElemSet) -> ElemSet {
        mask_iter(set).fold(0, |acc, x| acc | self.up[x])
    }

    pub fn down_closure(&self, set: ElemSet) -> ElemSet {
        mask_iter(set).fold(0, |acc, x| acc | self.down[x])
    }

    pub fn is_lower(&self, set: ElemSet) -> bool {
        self.down_closure(set) == set
    }

    pub fn is_upper(&self, set: ElemSet) -> bool {
        self.up_closure(set) == set
    }

    /// Nonempty, and every pair of members has an upper bound in the set.
    pub fn is_directed(&self, set: ElemSet) -> bool {
        set != 0
            && mask_iter(set).all(|x| mask_iter(set).all(|y| self.up[x] & self.up[y] & set != 0))
    }

    /// Directed lower sets.
    pub fn is_ideal(&self, set: ElemSet) -> bool {
        self.is_lower(set) && self.is_directed(set)
    }

    /// The order dual, on the same element labels.
    pub fn dual(&self) -> Self {
        Self::from_fn(self.m, |x, y| self.leq(y, x)).expect("the dual of a lattice is a lattice")
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        (0..self.m).map(|x| (0..self.m).map(|y| self.leq(x, y)).collect()).collect()
    }

    /// The order as a qoset, for lattices of at most 16 elements.
    pub fn to_qoset(&self) -> Result<Qoset, ValidationError> {
        Qoset::from_fn(self.m, |x, y| self.leq(x, y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond_is_valid_and_antichain_is_not() {
        let d = Lattice::diamond();
        assert_eq!(d.join(1, 2), 3);
        assert_eq!(d.meet(1, 2), 0);
        let err = Lattice::from_fn(2, |x, y| x == y).unwrap_err();
        assert_eq!(err, ValidationError::NoMeet(0, 1));
    }

    #[test]
    fn m3_tables_match_brute_force() {
        let l = Lattice::m3();
        for x in 0..5 {
            for y in 0..5 {
                let lower: Vec<usize> = (0..5).filter(|&z| l.leq(z, x) && l.leq(z, y)).collect();
                let glb = *lower.iter().find(|&&z| lower.iter().all(|&w| l.leq(w, z))).unwrap();
                let upper: Vec<usize> = (0..5).filter(|&z| l.leq(x, z) && l.leq(y, z)).collect();
                let lub = *upper.iter().find(|&&z| upper.iter().all(|&w| l.leq(z, w))).unwrap();
                assert_eq!(l.meet(x, y), glb);
                assert_eq!(l.join(x, y), lub);
            }
        }
    }

    #[test]
    fn antisymmetry_is_enforced() {
        let err = Lattice::from_fn(2, |_, _| true).unwrap_err();
        assert_eq!(err, ValidationError::NotAntisymmetric(0, 1));
    }

    #[test]
    fn bounds_and_big_operations() {
        let n5 = Lattice::n5();
        assert_eq!(n5.bottom(), 0);
        assert_eq!(n5.top(), 4);
        assert_eq!(n5.join_all(0), 0);
        assert_eq!(n5.meet_all(0), 4);
        assert_eq!(n5.join_all(0b01010), 4);
    }
}
