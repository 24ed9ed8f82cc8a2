use std::fmt;

use super::{Carrier, PointSet, ValidationError};

/// An arbitrary binary relation on a finite carrier.
///
/// `post(x)` is `xR = {y : x R y}` and `pre(y)` is `Ry = {x : x R y}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryRelation {
    carrier: Carrier,
    post: Vec<PointSet>,
}

impl BinaryRelation {
    pub fn new(n: usize, matrix: &[Vec<bool>]) -> Result<Self, ValidationError> {
        let carrier = Carrier::new(n)?;
        if matrix.len() != n {
            return Err(ValidationError::Dimension { expected: n, found: matrix.len() });
        }
        if let Some(row) = matrix.iter().find(|r| r.len() != n) {
            return Err(ValidationError::Dimension { expected: n, found: row.len() });
        }
        Ok(Self::from_fn(carrier.size(), |x, y| matrix[x][y]))
    }

    /// Rows are the post-sets `xR`. Panics if `n` is not a valid carrier size.
    pub fn from_rows(n: usize, post: Vec<PointSet>) -> Self {
        let carrier = Carrier::new(n).expect("carrier size");
        assert_eq!(post.len(), n, "one row per point");
        let full = carrier.full();
        BinaryRelation {
            carrier,
            post: post.into_iter().map(|r| r & full).collect(),
        }
    }

    pub fn from_fn(n: usize, rel: impl Fn(usize, usize) -> bool) -> Self {
        Self::from_rows(n, (0..n).map(|x| (0..n).filter(|&y| rel(x, y)).collect()).collect())
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        Self::from_fn(n, |x, y| pairs.contains(&(x, y)))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_rows(n, (0..n).map(PointSet::singleton).collect())
    }

    pub fn full(n: usize) -> Self {
        Self::from_rows(n, vec![PointSet::full(n); n])
    }

    pub fn empty(n: usize) -> Self {
        Self::from_rows(n, vec![PointSet::EMPTY; n])
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.post[x].contains(y)
    }

    /// `xR`.
    pub fn post(&self, x: usize) -> PointSet {
        self.post[x]
    }

    /// `Ry`.
    pub fn pre(&self, y: usize) -> PointSet {
        (0..self.size()).filter(|&x| self.post[x].contains(y)).collect()
    }

    pub fn rows(&self) -> &[PointSet] {
        &self.post
    }

    /// `YR = {z : ∃y ∈ Y, y R z}`.
    pub fn image(&self, set: PointSet) -> PointSet {
        set.iter().fold(PointSet::EMPTY, |acc, y| acc | self.post[y])
    }

    /// `RY = {x : ∃y ∈ Y, x R y}`.
    pub fn preimage(&self, set: PointSet) -> PointSet {
        (0..self.size()).filter(|&x| self.post[x].meets(set)).collect()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.size()).flat_map(move |x| self.post[x].iter().map(move |y| (x, y)))
    }

    pub fn pair_count(&self) -> usize {
        self.post.iter().map(|r| r.len()).sum()
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        (0..self.size())
            .map(|x| (0..self.size()).map(|y| self.contains(x, y)).collect())
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        Self::from_rows(n, (0..n).map(|y| self.pre(y)).collect())
    }

    /// Relational composition: `x (R;S) z` iff `x R y S z` for some `y`.
    pub fn compose(&self, other: &Self) -> Self {
        Self::from_rows(self.size(), self.post.iter().map(|&r| other.image(r)).collect())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self::from_rows(
            self.size(),
            self.post.iter().zip(&other.post).map(|(&a, &b)| a & b).collect(),
        )
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::from_rows(
            self.size(),
            self.post.iter().zip(&other.post).map(|(&a, &b)| a | b).collect(),
        )
    }

    pub fn is_subrelation(&self, other: &Self) -> bool {
        self.post.iter().zip(&other.post).all(|(a, b)| a.is_subset(*b))
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size()).all(|x| self.contains(x, x))
    }

    pub fn is_transitive(&self) -> bool {
        self.compose(self).is_subrelation(self)
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose(self) == *self
    }
}

impl fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_matches_pairwise_definition() {
        let r = BinaryRelation::from_pairs(3, &[(0, 1), (1, 2), (2, 2)]);
        let s = BinaryRelation::from_pairs(3, &[(1, 0), (2, 1)]);
        let rs = r.compose(&s);
        for x in 0..3 {
            for z in 0..3 {
                let expected = (0..3).any(|y| r.contains(x, y) && s.contains(y, z));
                assert_eq!(rs.contains(x, z), expected);
            }
        }
    }

    #[test]
    fn transpose_swaps_pre_and_post() {
        let r = BinaryRelation::from_pairs(3, &[(0, 1), (0, 2), (2, 1)]);
        let t = r.transpose();
        for x in 0..3 {
            assert_eq!(t.post(x), r.pre(x));
        }
        assert_eq!(t.transpose(), r);
    }

    #[test]
    fn image_and_preimage() {
        let r = BinaryRelation::from_pairs(3, &[(0, 1), (2, 1)]);
        assert_eq!(r.image(PointSet::from_iter([0, 2])), PointSet::singleton(1));
        assert_eq!(r.preimage(PointSet::singleton(1)), PointSet::from_iter([0, 2]));
    }
}
