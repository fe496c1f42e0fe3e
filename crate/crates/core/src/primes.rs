/// Smallest prime dividing `n`, by trial division; `None` for `n <= 1`.
pub fn smallest_prime_factor(n: usize) -> Option<usize> {
    if n <= 1 {
        return None;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return Some(d);
        }
        d += 1;
    }
    Some(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(smallest_prime_factor(0), None);
        assert_eq!(smallest_prime_factor(1), None);
        assert_eq!(smallest_prime_factor(2), Some(2));
        assert_eq!(smallest_prime_factor(9), Some(3));
        assert_eq!(smallest_prime_factor(35), Some(5));
        assert_eq!(smallest_prime_factor(97), Some(97));
        assert_eq!(smallest_prime_factor(168), Some(2));
    }
}
