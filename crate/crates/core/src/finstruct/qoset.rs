use super::{BinaryRelation, Carrier, PointSet, ValidationError};

/// A quasi-ordered set: a reflexive, transitive relation on a finite carrier.
///
/// Row `up[x]` holds the principal filter `{y : x <= y}`; `down[x]` the principal ideal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Qoset {
    carrier: Carrier,
    up: Vec<PointSet>,
    down: Vec<PointSet>,
}

impl Qoset {
    /// Validate a boolean matrix (`leq[x][y]` means `x <= y`).
    pub fn new(n: usize, leq: &[Vec<bool>]) -> Result<Self, ValidationError> {
        if leq.len() != n {
            return Err(ValidationError::Dimension { expected: n, found: leq.len() });
        }
        if let Some(row) = leq.iter().find(|r| r.len() != n) {
            return Err(ValidationError::Dimension { expected: n, found: row.len() });
        }
        Self::from_fn(n, |x, y| leq[x][y])
    }

    pub fn from_fn(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self, ValidationError> {
        let carrier = Carrier::new(n)?;
        let up: Vec<PointSet> = (0..n)
            .map(|x| (0..n).filter(|&y| leq(x, y)).collect())
            .collect();
        validate_rows(n, &up)?;
        Ok(Self::from_rows(carrier, up))
    }

    /// Build from principal filters that are already known to be reflexive and transitive.
    pub(crate) fn from_up_rows(n: usize, up: Vec<PointSet>) -> Self {
        debug_assert!(validate_rows(n, &up).is_ok());
        Self::from_rows(Carrier::new(n).expect("carrier size"), up)
    }

    fn from_rows(carrier: Carrier, up: Vec<PointSet>) -> Self {
        let n = carrier.size();
        let down = (0..n)
            .map(|y| (0..n).filter(|&x| up[x].contains(y)).collect())
            .collect();
        Qoset { carrier, up, down }
    }

    pub fn discrete(n: usize) -> Self {
        Self::from_up_rows(n, (0..n).map(PointSet::singleton).collect())
    }

    pub fn indiscrete(n: usize) -> Self {
        Self::from_up_rows(n, vec![PointSet::full(n); n])
    }

    /// The chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        Self::from_up_rows(n, (0..n).map(|x| PointSet::full(n) - PointSet::full(x)).collect())
    }

    pub fn carrier(&self) -> Carrier {
        self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn full(&self) -> PointSet {
        self.carrier.full()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn equivalent(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) && self.leq(y, x)
    }

    /// Principal filter of `x`.
    pub fn up(&self, x: usize) -> PointSet {
        self.up[x]
    }

    /// Principal ideal of `x`.
    pub fn down(&self, x: usize) -> PointSet {
        self.down[x]
    }

    pub fn up_rows(&self) -> &[PointSet] {
        &self.up
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        (0..self.size())
            .map(|x| (0..self.size()).map(|y| self.leq(x, y)).collect())
            .collect()
    }

    pub fn as_relation(&self) -> BinaryRelation {
        BinaryRelation::from_rows(self.size(), self.up.clone())
    }

    pub fn dual(&self) -> Qoset {
        Qoset {
            carrier: self.carrier,
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.antisymmetry_witness().is_none()
    }

    pub fn antisymmetry_witness(&self) -> Option<(usize, usize)> {
        let n = self.size();
        (0..n)
            .flat_map(|x| (x + 1..n).map(move |y| (x, y)))
            .find(|&(x, y)| self.equivalent(x, y))
    }

    /// Number of classes of the equivalence `x <= y <= x`.
    pub fn class_count(&self) -> usize {
        (0..self.size())
            .filter(|&x| (0..x).all(|y| !self.equivalent(x, y)))
            .count()
    }

    pub fn up_closure(&self, set: PointSet) -> PointSet {
        set.iter().fold(PointSet::EMPTY, |acc, x| acc | self.up[x])
    }

    pub fn down_closure(&self, set: PointSet) -> PointSet {
        set.iter().fold(PointSet::EMPTY, |acc, x| acc | self.down[x])
    }

    pub fn is_upper(&self, set: PointSet) -> bool {
        self.up_closure(set) == set
    }

    pub fn is_lower(&self, set: PointSet) -> bool {
        self.down_closure(set) == set
    }

    pub fn is_convex(&self, set: PointSet) -> bool {
        self.up_closure(set) & self.down_closure(set) == set
    }

    /// All upper sets, ascending by membership word.
    pub fn upper_sets(&self) -> Vec<PointSet> {
        self.carrier.subsets().filter(|&s| self.is_upper(s)).collect()
    }

    pub fn lower_sets(&self) -> Vec<PointSet> {
        self.carrier.subsets().filter(|&s| self.is_lower(s)).collect()
    }

    /// Common upper bounds of `set` (the whole carrier for the empty set).
    pub fn upper_bounds(&self, set: PointSet) -> PointSet {
        set.iter().fold(self.full(), |acc, x| acc & self.up[x])
    }

    pub fn lower_bounds(&self, set: PointSet) -> PointSet {
        set.iter().fold(self.full(), |acc, x| acc & self.down[x])
    }

    /// A least upper bound: `y` with `set ⊆ ↓z ⇔ y <= z` for all `z`.
    /// In a proper quasi-order several equivalent points qualify; the smallest index is returned.
    pub fn least_upper_bound(&self, set: PointSet) -> Option<usize> {
        let bounds = self.upper_bounds(set);
        bounds.iter().find(|&y| bounds.is_subset(self.up[y]))
    }

    pub fn greatest_lower_bound(&self, set: PointSet) -> Option<usize> {
        let bounds = self.lower_bounds(set);
        bounds.iter().find(|&y| bounds.is_subset(self.down[y]))
    }

    /// Nonempty, and every two members have an upper bound inside the set.
    pub fn is_directed(&self, set: PointSet) -> bool {
        !set.is_empty()
            && set
                .iter()
                .all(|x| set.iter().all(|y| (self.up[x] & self.up[y]).meets(set)))
    }

    /// Nonempty, and every two members have a lower bound inside the set.
    pub fn is_filtered(&self, set: PointSet) -> bool {
        !set.is_empty()
            && set
                .iter()
                .all(|x| set.iter().all(|y| (self.down[x] & self.down[y]).meets(set)))
    }

    pub fn directed_subsets(&self) -> Vec<PointSet> {
        self.carrier.subsets().filter(|&s| self.is_directed(s)).collect()
    }

    pub fn filtered_subsets(&self) -> Vec<PointSet> {
        self.carrier.subsets().filter(|&s| self.is_filtered(s)).collect()
    }

    /// Directed lower sets.
    pub fn ideals(&self) -> Vec<PointSet> {
        self.carrier
            .subsets()
            .filter(|&s| self.is_lower(s) && self.is_directed(s))
            .collect()
    }

    /// Every directed subset has a least upper bound.
    pub fn is_up_complete(&self) -> bool {
        self.carrier
            .subsets()
            .filter(|&s| self.is_directed(s))
            .all(|d| self.least_upper_bound(d).is_some())
    }

    /// `x ≪ y` iff every directed set with a join above `y` contains a point above `x`.
    pub fn way_below(&self) -> BinaryRelation {
        let n = self.size();
        let directed: Vec<(PointSet, PointSet)> = self
            .directed_subsets()
            .into_iter()
            .filter_map(|d| self.least_upper_bound(d).map(|s| (d, self.down[s])))
            .collect();
        let rows = (0..n)
            .map(|x| {
                (0..n)
                    .filter(|&y| {
                        directed
                            .iter()
                            .filter(|(_, below_join)| below_join.contains(y))
                            .all(|&(d, _)| self.up[x].meets(d))
                    })
                    .collect()
            })
            .collect();
        BinaryRelation::from_rows(n, rows)
    }

    /// Each `y` is a least upper bound of the directed set `{x : x ≪ y}`.
    pub fn is_continuous(&self) -> bool {
        let wb = self.way_below();
        (0..self.size()).all(|y| {
            let approx = wb.pre(y);
            self.is_directed(approx)
                && self
                    .least_upper_bound(approx)
                    .is_some_and(|s| self.equivalent(s, y))
        })
    }

    /// Partial order in which every pair has a greatest lower bound.
    pub fn is_meet_semilattice(&self) -> bool {
        self.is_antisymmetric()
            && (0..self.size()).all(|x| {
                (0..self.size())
                    .all(|y| self.greatest_lower_bound(PointSet::singleton(x).with(y)).is_some())
            })
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.greatest_lower_bound(PointSet::singleton(x).with(y))
    }

    /// Partial order with a least element in which every pair has a least upper bound.
    pub fn is_join_semilattice_with_bottom(&self) -> bool {
        self.is_antisymmetric()
            && self.least_upper_bound(PointSet::EMPTY).is_some()
            && (0..self.size()).all(|x| {
                (0..self.size())
                    .all(|y| self.least_upper_bound(PointSet::singleton(x).with(y)).is_some())
            })
    }
}

fn validate_rows(n: usize, up: &[PointSet]) -> Result<(), ValidationError> {
    if let Some(x) = (0..n).find(|&x| !up[x].contains(x)) {
        return Err(ValidationError::NotReflexive(x));
    }
    for x in 0..n {
        for y in up[x].iter() {
            if let Some(z) = (up[y] - up[x]).first() {
                return Err(ValidationError::NotTransitive(x, y, z));
            }
        }
    }
    Ok(())
}
