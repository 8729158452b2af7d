use num_bigint::BigInt;
use num_traits::One;

use super::ExactRational;

/// Rising factorial `(x)_n = x(x+1)···(x+n−1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: &ExactRational, n: usize) -> ExactRational {
    let mut acc = ExactRational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc *= &term;
        term += BigInt::one();
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use num_traits::Pow;

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(&int(2), 3), int(24));
        assert_eq!(pochhammer(&rat(7, 3), 0), int(1));
        assert_eq!(pochhammer(&int(-1), 3), int(0));
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
    }

    #[test]
    fn pochhammer_step() {
        for x in [rat(-5, 2), rat(1, 3), int(4)] {
            for n in 1..12 {
                let step = pochhammer(&x, n - 1) * (&x + int(n as i64 - 1));
                assert_eq!(pochhammer(&x, n), step);
            }
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 3), BigInt::from(10));
        assert_eq!(binomial(3, 4), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }

    #[test]
    fn quartic_class_sum() {
        // C(m+2,4) + C(m+1,4) = (m^4 - m^2)/12 with m = 5
        let m = 5usize;
        let lhs = binomial(m + 2, 4) + binomial(m + 1, 4);
        assert_eq!(lhs, BigInt::from((m.pow(4) - m.pow(2)) / 12));
        assert_eq!(lhs, BigInt::from(50));
    }

    #[test]
    fn row_sums() {
        for n in 0..=64usize {
            let sum: BigInt = (0..=n).map(|k| binomial(n, k)).sum();
            assert_eq!(sum, BigInt::from(2).pow(n as u32));
        }
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
    }
}
