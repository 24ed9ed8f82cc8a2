use super::{Carrier, PointSet, ValidationError};

/// A total function between two finite carriers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpaceMap {
    source: Carrier,
    target: Carrier,
    value: Vec<usize>,
}

impl SpaceMap {
    pub fn new(source: usize, target: usize, value: Vec<usize>) -> Result<Self, ValidationError> {
        let source = Carrier::new(source)?;
        let target = Carrier::new(target)?;
        if value.len() != source.size() {
            return Err(ValidationError::Dimension {
                expected: source.size(),
                found: value.len(),
            });
        }
        if let Some((position, &value)) = value.iter().enumerate().find(|(_, &v)| v >= target.size()) {
            return Err(ValidationError::ValueOutOfRange { position, value });
        }
        Ok(SpaceMap { source, target, value })
    }

    pub fn identity(n: usize) -> Self {
        Self::new(n, n, (0..n).collect()).expect("identity map")
    }

    pub fn constant(source: usize, target: usize, point: usize) -> Result<Self, ValidationError> {
        Self::new(source, target, vec![point; source])
    }

    pub fn source(&self) -> usize {
        self.source.size()
    }

    pub fn target(&self) -> usize {
        self.target.size()
    }

    pub fn values(&self) -> &[usize] {
        &self.value
    }

    pub fn apply(&self, x: usize) -> usize {
        self.value[x]
    }

    pub fn image(&self, set: PointSet) -> PointSet {
        set.iter().map(|x| self.value[x]).collect()
    }

    pub fn preimage(&self, set: PointSet) -> PointSet {
        (0..self.source()).filter(|&x| set.contains(self.value[x])).collect()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SpaceMap) -> Result<SpaceMap, ValidationError> {
        if other.source() != self.target() {
            return Err(ValidationError::Dimension {
                expected: self.target(),
                found: other.source(),
            });
        }
        SpaceMap::new(
            self.source(),
            other.target(),
            self.value.iter().map(|&y| other.value[y]).collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_values() {
        let err = SpaceMap::new(2, 2, vec![0, 2]).unwrap_err();
        assert_eq!(err, ValidationError::ValueOutOfRange { position: 1, value: 2 });
    }

    #[test]
    fn preimage_of_image_contains_set() {
        let f = SpaceMap::new(3, 2, vec![0, 0, 1]).unwrap();
        let s = PointSet::singleton(0);
        assert!(s.is_subset(f.preimage(f.image(s))));
        assert_eq!(f.preimage(PointSet::singleton(1)), PointSet::singleton(2));
    }
}
