//! Duals of discrete groups: every irreducible is one-dimensional and
//! `g (x) h = gh`.

/// Product of two reduced free-group words.
pub fn free_product(left: &[i64], right: &[i64]) -> Vec<i64> {
    let mut out = left.to_vec();
    for &x in right {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

pub fn free_inverse(word: &[i64]) -> Vec<i64> {
    word.iter().rev().map(|x| -x).collect()
}

pub fn abelian_sum(left: &[i64], right: &[i64]) -> Vec<i64> {
    left.iter().zip(right).map(|(a, b)| a + b).collect()
}

/// Cancels adjacent inverse pairs.
pub fn reduce_free(word: &[i64]) -> Vec<i64> {
    free_product(&[], word)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_group_words() {
        assert_eq!(free_product(&[1, 2], &[-2, 1]), vec![1, 1]);
        assert_eq!(free_product(&[1, 2], &[-2, -1]), Vec::<i64>::new());
        assert_eq!(free_product(&[1, -2], &[1]), vec![1, -2, 1]);
        assert_eq!(free_inverse(&[1, -2, 3]), vec![-3, 2, -1]);
        assert_eq!(reduce_free(&[1, 2, -2, -1, 3]), vec![3]);
        let w = vec![2, 1, -3];
        assert!(free_product(&w, &free_inverse(&w)).is_empty());
    }

    #[test]
    fn abelian() {
        assert_eq!(abelian_sum(&[1, -2], &[3, 2]), vec![4, 0]);
    }
}
