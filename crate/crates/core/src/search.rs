//! Minimum-size searches with lexicographic tie-breaking.

/// Index combinations of size `k` from `0..n`, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut next = (k <= n).then(|| (0..k).collect::<Vec<_>>());
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut c = current.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if c[i] < n - k + i {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                next = Some(c);
                break;
            }
        }
        Some(current)
    })
}

/// The first combination, by size and then lexicographically, accepted by `pred`.
pub fn least_combination(n: usize, mut pred: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    (0..=n).find_map(|k| combinations(n, k).find(|c| pred(c)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combinations_are_lexicographic_and_complete() {
        let all: Vec<_> = combinations(4, 2).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(combinations(3, 0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
        assert_eq!(combinations(2, 3).count(), 0);
        assert_eq!(combinations(7, 3).count(), 35);
    }

    #[test]
    fn least_combination_prefers_size() {
        let found = least_combination(5, |c| c.iter().sum::<usize>() >= 6);
        assert_eq!(found, Some(vec![2, 4]));
    }
}
