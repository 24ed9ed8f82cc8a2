use super::{Carrier, PointSet, Qoset, ValidationError};

/// A topology on a finite carrier, stored as its family of open sets in ascending
/// numeric order of the membership word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Topology {
    carrier: Carrier,
    opens: Vec<PointSet>,
    cores: Vec<PointSet>,
}

impl Topology {
    /// Validate an explicit family of open sets.
    ///
    /// Checks run in this order: carrier membership, duplicates, `∅`, `X`, pairwise unions,
    /// pairwise intersections. The first violating pair (in canonical order) is reported.
    pub fn validate(n: usize, family: &[PointSet]) -> Result<Self, ValidationError> {
        let carrier = Carrier::new(n)?;
        let full = carrier.full();
        if let Some(&bad) = family.iter().find(|s| !s.is_subset(full)) {
            return Err(ValidationError::OutOfCarrier(bad));
        }
        let mut opens = family.to_vec();
        opens.sort_unstable();
        if let Some(w) = opens.windows(2).find(|w| w[0] == w[1]) {
            return Err(ValidationError::Duplicate(w[0]));
        }
        if opens.binary_search(&PointSet::EMPTY).is_err() {
            return Err(ValidationError::MissingEmpty);
        }
        if opens.binary_search(&full).is_err() {
            return Err(ValidationError::MissingFull);
        }
        for (i, &a) in opens.iter().enumerate() {
            for &b in &opens[i + 1..] {
                if opens.binary_search(&(a | b)).is_err() {
                    return Err(ValidationError::NotUnionClosed(a, b));
                }
            }
        }
        for (i, &a) in opens.iter().enumerate() {
            for &b in &opens[i + 1..] {
                if opens.binary_search(&(a & b)).is_err() {
                    return Err(ValidationError::NotIntersectionClosed(a, b));
                }
            }
        }
        Ok(Self::from_sorted(carrier, opens))
    }

    /// The smallest topology containing every member of `subbase`.
    ///
    /// Members are intersected with the carrier first.
    pub fn generate(n: usize, subbase: &[PointSet]) -> Result<Self, ValidationError> {
        let carrier = Carrier::new(n)?;
        let full = carrier.full();
        let cores: Vec<PointSet> = (0..n)
            .map(|x| {
                subbase
                    .iter()
                    .filter(|s| s.contains(x))
                    .fold(full, |acc, &s| acc & s)
            })
            .collect();
        Ok(Self::from_cores_unchecked(carrier, cores))
    }

    /// Topology whose minimal open neighbourhoods are `cores[x]`.
    ///
    /// The cores must satisfy `x ∈ cores[x]` and `y ∈ cores[x] ⇒ cores[y] ⊆ cores[x]`,
    /// which holds for principal filters of a quasi-order and for subbase intersections.
    pub(crate) fn from_cores_unchecked(carrier: Carrier, cores: Vec<PointSet>) -> Self {
        let mut opens = vec![PointSet::EMPTY];
        let mut seen = std::collections::HashSet::new();
        seen.insert(PointSet::EMPTY);
        let mut i = 0;
        while i < opens.len() {
            let u = opens[i];
            for &c in &cores {
                let v = u | c;
                if seen.insert(v) {
                    opens.push(v);
                }
            }
            i += 1;
        }
        opens.sort_unstable();
        Topology { carrier, opens, cores }
    }

    fn from_sorted(carrier: Carrier, opens: Vec<PointSet>) -> Self {
        let n = carrier.size();
        let cores = (0..n)
            .map(|x| {
                opens
                    .iter()
                    .filter(|u| u.contains(x))
                    .fold(carrier.full(), |acc, &u| acc & u)
            })
            .collect();
        Topology { carrier, opens, cores }
    }

    /// All upper sets of `q` (the Alexandroff topology).
    pub fn of_upper_sets(q: &Qoset) -> Self {
        Self::from_cores_unchecked(q.carrier(), q.up_rows().to_vec())
    }

    pub fn discrete(n: usize) -> Self {
        Self::of_upper_sets(&Qoset::discrete(n))
    }

    pub fn indiscrete(n: usize) -> Self {
        Self::of_upper_sets(&Qoset::indiscrete(n))
    }

    /// The Sierpiński space: opens `∅`, `{1}`, `{0,1}`.
    pub fn sierpinski() -> Self {
        Self::of_upper_sets(&Qoset::chain(2))
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

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn open_count(&self) -> usize {
        self.opens.len()
    }

    /// Closed sets in ascending numeric order.
    pub fn closeds(&self) -> Vec<PointSet> {
        let mut c: Vec<PointSet> = self.opens.iter().map(|u| u.complement(self.size())).collect();
        c.sort_unstable();
        c
    }

    pub fn is_open(&self, set: PointSet) -> bool {
        self.opens.binary_search(&set).is_ok()
    }

    pub fn is_closed(&self, set: PointSet) -> bool {
        self.is_open(set.complement(self.size()))
    }

    /// The smallest open set containing `x`.
    pub fn minimal_neighbourhood(&self, x: usize) -> PointSet {
        self.cores[x]
    }

    pub fn minimal_neighbourhoods(&self) -> &[PointSet] {
        &self.cores
    }

    /// Largest open subset of `set`.
    pub fn interior(&self, set: PointSet) -> PointSet {
        (0..self.size()).filter(|&x| self.cores[x].is_subset(set)).collect()
    }

    /// Smallest closed superset of `set`.
    pub fn closure(&self, set: PointSet) -> PointSet {
        (0..self.size()).filter(|&x| self.cores[x].meets(set)).collect()
    }

    /// Every open set of `self` is open in `other`.
    pub fn is_coarser_than(&self, other: &Topology) -> bool {
        self.opens.iter().all(|&u| other.is_open(u))
    }

    /// The open sets of `self` that satisfy `keep`, as a topology (the caller guarantees closure).
    pub(crate) fn filtered(&self, keep: impl Fn(PointSet) -> bool) -> Self {
        let opens: Vec<PointSet> = self.opens.iter().copied().filter(|&u| keep(u)).collect();
        Self::from_sorted(self.carrier, opens)
    }

    /// Join of two topologies: the topology generated by both families.
    pub fn join(&self, other: &Topology) -> Topology {
        let cores = self
            .cores
            .iter()
            .zip(&other.cores)
            .map(|(&a, &b)| a & b)
            .collect();
        Self::from_cores_unchecked(self.carrier, cores)
    }
}

/// A quasi-ordered set together with a topology on the same carrier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedSpace {
    qoset: Qoset,
    topology: Topology,
}

impl OrderedSpace {
    pub fn new(qoset: Qoset, topology: Topology) -> Result<Self, ValidationError> {
        if qoset.size() != topology.size() {
            return Err(ValidationError::Dimension {
                expected: qoset.size(),
                found: topology.size(),
            });
        }
        Ok(OrderedSpace { qoset, topology })
    }

    pub fn qoset(&self) -> &Qoset {
        &self.qoset
    }

    pub fn topology(&self) -> &Topology {
        &self.topology
    }

    pub fn size(&self) -> usize {
        self.qoset.size()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(items: &[&[usize]]) -> Vec<PointSet> {
        items.iter().map(|s| s.iter().copied().collect()).collect()
    }

    /// Closure of a family under pairwise unions and intersections, plus `∅` and `X`.
    fn closure_oracle(n: usize, subbase: &[PointSet]) -> Vec<PointSet> {
        let mut fam: std::collections::BTreeSet<PointSet> = subbase.iter().copied().collect();
        fam.insert(PointSet::EMPTY);
        fam.insert(PointSet::full(n));
        loop {
            let snapshot: Vec<PointSet> = fam.iter().copied().collect();
            let before = fam.len();
            for &a in &snapshot {
                for &b in &snapshot {
                    fam.insert(a | b);
                    fam.insert(a & b);
                }
            }
            if fam.len() == before {
                return fam.into_iter().collect();
            }
        }
    }

    #[test]
    fn sierpinski_is_valid() {
        let t = Topology::validate(2, &sets(&[&[], &[1], &[0, 1]])).unwrap();
        assert_eq!(t, Topology::sierpinski());
    }

    #[test]
    fn missing_full_set() {
        let err = Topology::validate(2, &sets(&[&[], &[0], &[1]])).unwrap_err();
        assert_eq!(err, ValidationError::MissingFull);
    }

    #[test]
    fn missing_union_names_the_pair() {
        let err = Topology::validate(3, &sets(&[&[], &[0], &[1], &[0, 1, 2]])).unwrap_err();
        assert_eq!(
            err,
            ValidationError::NotUnionClosed(PointSet::singleton(0), PointSet::singleton(1))
        );
    }

    #[test]
    fn duplicates_and_empty() {
        let err = Topology::validate(2, &sets(&[&[], &[1], &[1], &[0, 1]])).unwrap_err();
        assert_eq!(err, ValidationError::Duplicate(PointSet::singleton(1)));
        let err = Topology::validate(2, &sets(&[&[1], &[0, 1]])).unwrap_err();
        assert_eq!(err, ValidationError::MissingEmpty);
    }

    #[test]
    fn generation_examples() {
        let t = Topology::generate(3, &sets(&[&[0, 1], &[1, 2]])).unwrap();
        assert_eq!(t.opens(), sets(&[&[], &[1], &[0, 1], &[1, 2], &[0, 1, 2]]).as_slice());
        assert_eq!(Topology::generate(3, &[]).unwrap(), Topology::indiscrete(3));
        let singletons: Vec<PointSet> = (0..3).map(PointSet::singleton).collect();
        assert_eq!(Topology::generate(3, &singletons).unwrap(), Topology::discrete(3));
    }

    #[test]
    fn generation_agrees_with_closure_oracle() {
        let n = 4;
        // A deterministic spread of subbases over the 4-point carrier.
        for seed in 0u32..400 {
            let k = (seed % 4) as usize;
            let subbase: Vec<PointSet> = (0..k)
                .map(|i| PointSet::from_bits(((seed.wrapping_mul(2654435761) >> (i * 4)) & 0xF) as u16))
                .collect();
            let t = Topology::generate(n, &subbase).unwrap();
            assert_eq!(t.opens(), closure_oracle(n, &subbase).as_slice(), "subbase {subbase:?}");
        }
    }

    #[test]
    fn interior_and_closure_in_sierpinski() {
        let s = Topology::sierpinski();
        assert_eq!(s.closure(PointSet::singleton(1)), PointSet::full(2));
        assert_eq!(s.interior(PointSet::singleton(0)), PointSet::EMPTY);
        assert_eq!(s.closeds(), sets(&[&[], &[0], &[0, 1]]));
    }
}
