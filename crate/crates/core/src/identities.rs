//! Both sides of the composition-sum identities, built exactly and compared.
//!
//! * the three second-order identities (`id1`, `id2`, `id3`): a weighted sum
//!   over (restricted) compositions of `n` against a product formula, as
//!   polynomials in `t`;
//! * the first-order identity
//!   `1 + Σ_n Σ_{|p|=n} U_p/s_p · z^n/n = exp(Σ U_k z^k/k)`, to a finite order;
//! * the exponential formula of labelled counting, `h(y,z) = exp(y d(z))`,
//!   with hands counted through ordered hands and compositions.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use petgraph::algo::connected_components;
use petgraph::graph::UnGraph;
use thiserror::Error;

use crate::algebra::{
    binomial, factorial, from_bigint, int, product_of_linear_factors, series_exp,
    CountingPolynomial, ExactRational, Indeterminate, Polynomial, TruncatedSeries,
};
use crate::compositions::{enumerate, reversed_s_weight_of, s_weight_of, PartFilter};
use crate::spectral::{descending_by_two, Family, Potential};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("n must be at least 1")]
    ZeroN,
    #[error("deck knows {have} card weights, {need} needed")]
    DeckTooShort { have: usize, need: usize },
    #[error("brute-force graph enumeration capped at n = {cap}, asked for {n}")]
    BruteForceTooLarge { n: usize, cap: usize },
}

/// Two sides of an identity and how they compare.
#[derive(Clone, PartialEq, Debug)]
pub struct IdentityReport {
    pub name: String,
    /// `n`, or the series order for identities in `z`.
    pub n: usize,
    pub left: CountingPolynomial,
    pub right: CountingPolynomial,
    pub equal: bool,
    pub first_mismatch: Option<usize>,
}

impl IdentityReport {
    pub fn new(
        name: impl Into<String>,
        n: usize,
        left: CountingPolynomial,
        right: CountingPolynomial,
    ) -> Self {
        let first_mismatch = left.first_difference(&right);
        IdentityReport {
            name: name.into(),
            n,
            equal: first_mismatch.is_none(),
            left,
            right,
            first_mismatch,
        }
    }
}

/// `(n−1)!`, with a machine-word copy while it fits.
struct Factorial {
    big: BigInt,
    small: Option<u128>,
}

impl Factorial {
    fn of(m: usize) -> Self {
        let big = factorial(m);
        let small = u128::try_from(&big).ok();
        Factorial { big, small }
    }
}

/// `s_p` and `s_{p'}` in machine words, if neither overflows.
fn small_weights(parts: &[usize]) -> Option<(u128, u128)> {
    let l = parts.len();
    let (mut fwd, mut rev) = (1u128, 1u128);
    let (mut s, mut r) = (0u128, 0u128);
    for i in 0..l.saturating_sub(1) {
        s += parts[i] as u128;
        r += parts[l - 1 - i] as u128;
        fwd = fwd.checked_mul(s)?;
        rev = rev.checked_mul(r)?;
    }
    Some((fwd, rev))
}

/// `((n−1)!/s_p) · ((n−1)!/s_{p'})`, an integer since both `s_p` and
/// `s_{p'}` are products of distinct numbers below `n`.
fn double_weight(parts: &[usize], fact: &Factorial) -> BigInt {
    if let (Some(f), Some((fwd, rev))) = (fact.small, small_weights(parts)) {
        return BigInt::from(f / fwd) * (f / rev);
    }
    (&fact.big / s_weight_of(parts)) * (&fact.big / reversed_s_weight_of(parts))
}

/// Accumulates `weight(p) · t^{exponent(p)}` over admissible compositions.
fn composition_sum(
    n: usize,
    filter: &PartFilter,
    mut term: impl FnMut(&[usize]) -> (BigInt, usize),
) -> CountingPolynomial {
    let mut acc: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    let mut comps = enumerate(n, filter).expect("n >= 1");
    while let Some(parts) = comps.next_parts() {
        let (w, k) = term(parts);
        acc[k] += w;
    }
    Polynomial::new(Indeterminate::T, acc.into_iter().map(from_bigint).collect())
}

fn check_n(n: usize) -> Result<(), IdentityError> {
    if n == 0 {
        Err(IdentityError::ZeroN)
    } else {
        Ok(())
    }
}

/// `Σ_{|p|=n} (n−1)!/s_p · (n−1)!/s_{p'} · (∏ p_i) · t^l`
pub fn lhs_id1(n: usize) -> Result<CountingPolynomial, IdentityError> {
    check_n(n)?;
    let fact = Factorial::of(n - 1);
    Ok(composition_sum(n, &PartFilter::All, |parts| {
        let prod: BigInt = parts.iter().map(|&p| BigInt::from(p)).product();
        (double_weight(parts, &fact) * prod, parts.len())
    }))
}

/// `∏_{j=1}^{n} (t + j(j−1))`
pub fn rhs_id1(n: usize) -> Result<CountingPolynomial, IdentityError> {
    check_n(n)?;
    Ok((1..=n).fold(Polynomial::one(Indeterminate::T), |acc, j| {
        let factor = Polynomial::new(Indeterminate::T, vec![int((j * (j - 1)) as i64), int(1)]);
        &acc * &factor
    }))
}

/// Sum over compositions of `n` by `{1,2}` of
/// `(n−1)!/s_p · (n−1)!/s_{p'} · t^{n−l}`.
pub fn lhs_id2(n: usize) -> Result<CountingPolynomial, IdentityError> {
    check_n(n)?;
    let fact = Factorial::of(n - 1);
    Ok(composition_sum(n, &PartFilter::one_two(), |parts| {
        (double_weight(parts, &fact), n - parts.len())
    }))
}

/// `∏ (1 + k²t)` over `k = n−1, n−3, …` (positive).
pub fn rhs_id2(n: usize) -> Result<CountingPolynomial, IdentityError> {
    check_n(n)?;
    let constants: Vec<ExactRational> = descending_by_two(n - 1)
        .map(|k| int((k * k) as i64))
        .collect();
    Ok(product_of_linear_factors(&constants))
}

/// Sum over odd-part compositions of `n` of
/// `(n−1)!/s_p · (n−1)!/s_{p'} · (∏ p_i) · t^{(n−l)/2}`.
pub fn lhs_id3(n: usize) -> Result<CountingPolynomial, IdentityError> {
    check_n(n)?;
    let fact = Factorial::of(n - 1);
    Ok(composition_sum(n, &PartFilter::OddOnly, |parts| {
        let l = parts.len();
        // odd parts force n ≡ l (mod 2)
        assert_eq!((n - l) % 2, 0, "parity of an odd-part composition");
        let prod: BigInt = parts.iter().map(|&p| BigInt::from(p)).product();
        (double_weight(parts, &fact) * prod, (n - l) / 2)
    }))
}

/// `∏ (1 + (k⁴ − k²)t)` over `k = n−1, n−3, …` (positive).
pub fn rhs_id3(n: usize) -> Result<CountingPolynomial, IdentityError> {
    check_n(n)?;
    let constants: Vec<ExactRational> = descending_by_two(n - 1)
        .map(|k| {
            let k = k as i64;
            int(k.pow(4) - k.pow(2))
        })
        .collect();
    Ok(product_of_linear_factors(&constants))
}

pub fn verify(family: Family, n: usize) -> Result<IdentityReport, IdentityError> {
    let (left, right) = match family {
        Family::Id1 => (lhs_id1(n)?, rhs_id1(n)?),
        Family::Id2 => (lhs_id2(n)?, rhs_id2(n)?),
        Family::Id3 => (lhs_id3(n)?, rhs_id3(n)?),
    };
    Ok(IdentityReport::new(family.name(), n, left, right))
}

/// Coefficient of `z^n` on the composition side of the first-order
/// identity: `(1/n) Σ_{|p|=n} U_p / s_p`.
fn first_order_coefficient<C: crate::algebra::Coefficient>(u: &Potential<C>, n: usize) -> C {
    let mut total = C::zero();
    let mut comps = enumerate(n, &PartFilter::All).expect("n >= 1");
    'comp: while let Some(parts) = comps.next_parts() {
        let mut up = C::one();
        for &p in parts {
            let c = u.coeff(p);
            if c.is_zero() {
                continue 'comp;
            }
            up = up.mul_ref(&c);
        }
        let w = ExactRational::new(BigInt::one(), s_weight_of(parts) * n);
        total = total.add_ref(&up.scale(&w));
    }
    total
}

/// `1 + Σ_{n=1}^{K} Σ_{|p|=n} U_p/s_p · z^n/n` against `exp(Σ_k U_k z^k/k)`,
/// both truncated at `z^K`. The leading `1` is the empty composition.
pub fn first_order_identity(
    u: &Potential<ExactRational>,
    order: usize,
) -> Result<IdentityReport, IdentityError> {
    check_n(order)?;
    let mut left = vec![int(1)];
    left.extend((1..=order).map(|n| first_order_coefficient(u, n)));
    let sigma = TruncatedSeries::new(
        order,
        std::iter::once(int(0))
            .chain((1..=order).map(|k| u.coeff(k) / int(k as i64)))
            .collect(),
    );
    let right = series_exp(&sigma)
        .expect("zero constant term")
        .to_polynomial();
    Ok(IdentityReport::new(
        "first-order",
        order,
        Polynomial::new(Indeterminate::Z, left),
        right,
    ))
}

/// Card counts `d_1, …, d_K` of a deck.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Deck {
    cards: Vec<BigUint>,
}

impl Deck {
    /// `cards[0]` is `d_1`.
    pub fn new(cards: Vec<BigUint>) -> Self {
        Deck { cards }
    }

    /// Connected labelled graphs on `k` vertices, `k = 1..=max`, from
    /// `d_k = 2^{C(k,2)} − Σ_{j<k} C(k−1, j−1) d_j 2^{C(k−j,2)}`.
    pub fn connected_graphs(max: usize) -> Self {
        let all = |k: usize| BigInt::one() << (k * k.saturating_sub(1) / 2);
        let mut d: Vec<BigInt> = Vec::with_capacity(max);
        for k in 1..=max {
            let mut v = all(k);
            for j in 1..k {
                v -= binomial(k - 1, j - 1) * &d[j - 1] * all(k - j);
            }
            d.push(v);
        }
        Deck {
            cards: d
                .into_iter()
                .map(|v| v.to_biguint().expect("counts are nonnegative"))
                .collect(),
        }
    }

    /// `d_k = value` for `k = 1..=max`.
    pub fn constant(max: usize, value: u64) -> Self {
        Deck {
            cards: vec![BigUint::from(value); max],
        }
    }

    pub fn max_weight(&self) -> usize {
        self.cards.len()
    }

    /// `d_k`, one-based.
    pub fn card(&self, k: usize) -> &BigUint {
        &self.cards[k - 1]
    }

    pub fn cards(&self) -> &[BigUint] {
        &self.cards
    }

    fn require(&self, n: usize) -> Result<(), IdentityError> {
        if self.cards.len() < n {
            Err(IdentityError::DeckTooShort {
                have: self.cards.len(),
                need: n,
            })
        } else {
            Ok(())
        }
    }
}

/// `h_{n,l}` for `l = 1..=n` (index `l − 1`) from
/// `h_{nl} = Σ_{|p|=n, l parts} n! / (s_p · n · ∏(p_i−1)!) · ∏ d_{p_i}`.
pub fn hands_by_composition(deck: &Deck, n: usize) -> Result<Vec<BigInt>, IdentityError> {
    check_n(n)?;
    deck.require(n)?;
    let nfact = factorial(n);
    let mut h = vec![ExactRational::zero(); n];
    let mut comps = enumerate(n, &PartFilter::All).expect("n >= 1");
    while let Some(parts) = comps.next_parts() {
        let cards: BigInt = parts
            .iter()
            .map(|&p| BigInt::from(deck.card(p).clone()))
            .product();
        if cards.is_zero() {
            continue;
        }
        let sorts: BigInt = parts.iter().map(|&p| factorial(p - 1)).product();
        let denom = s_weight_of(parts) * n * sorts;
        h[parts.len() - 1] += ExactRational::new(&nfact * cards, denom);
    }
    Ok(h.into_iter()
        .map(|v| {
            assert!(v.is_integer(), "hand counts are integers");
            v.to_integer()
        })
        .collect())
}

/// `n!·[z^n] exp(y d(z))` as a polynomial in `y`, for `n = 1..=n_max`.
pub fn exp_formula_series(
    deck: &Deck,
    n_max: usize,
) -> Result<Vec<CountingPolynomial>, IdentityError> {
    check_n(n_max)?;
    deck.require(n_max)?;
    let sigma = TruncatedSeries::new(
        n_max,
        std::iter::once(Polynomial::zero(Indeterminate::Y))
            .chain((1..=n_max).map(|k| {
                let c = ExactRational::new(BigInt::from(deck.card(k).clone()), factorial(k));
                Polynomial::monomial(Indeterminate::Y, c, 1)
            }))
            .collect(),
    );
    let h = series_exp(&sigma).expect("zero constant term");
    Ok((1..=n_max)
        .map(|n| h.coeff(n).scale(&from_bigint(factorial(n))))
        .collect())
}

fn hands_polynomial(h: &[BigInt]) -> CountingPolynomial {
    let mut coeffs = vec![int(0)];
    coeffs.extend(h.iter().cloned().map(from_bigint));
    Polynomial::new(Indeterminate::Y, coeffs)
}

/// Per `n`, the composition-side hand counts against the series side of
/// `h(y,z) = exp(y d(z))`.
pub fn exp_formula_check(deck: &Deck, n_max: usize) -> Result<Vec<IdentityReport>, IdentityError> {
    let series = exp_formula_series(deck, n_max)?;
    (1..=n_max)
        .map(|n| {
            let left = hands_polynomial(&hands_by_composition(deck, n)?);
            Ok(IdentityReport::new(
                "exp-formula",
                n,
                left,
                series[n - 1].clone(),
            ))
        })
        .collect()
}

/// `n!·[z^n]` of the first-order composition side with
/// `U_k = d_k y / (k−1)!`; reproduces `Σ_l h_{nl} y^l`.
pub fn hands_via_first_order_identity(
    deck: &Deck,
    n: usize,
) -> Result<CountingPolynomial, IdentityError> {
    check_n(n)?;
    deck.require(n)?;
    let u = Potential::new(
        (1..=n)
            .map(|k| {
                let c = ExactRational::new(BigInt::from(deck.card(k).clone()), factorial(k - 1));
                Polynomial::monomial(Indeterminate::Y, c, 1)
            })
            .collect(),
    );
    Ok(first_order_coefficient(&u, n).scale(&from_bigint(factorial(n))))
}

/// Default cap for [`graph_hands_brute_force`]: `2^{C(5,2)} = 1024` graphs.
pub const BRUTE_FORCE_GRAPH_CAP: usize = 5;

/// Labelled graphs on `n` vertices tallied by number of connected
/// components, by enumerating all `2^{C(n,2)}` edge sets. Index `l − 1`.
pub fn graph_hands_brute_force(n: usize, cap: usize) -> Result<Vec<BigInt>, IdentityError> {
    check_n(n)?;
    if n > cap {
        return Err(IdentityError::BruteForceTooLarge { n, cap });
    }
    let pairs: Vec<(u32, u32)> = (0..n as u32)
        .flat_map(|a| (a + 1..n as u32).map(move |b| (a, b)))
        .collect();
    let mut counts = vec![BigInt::zero(); n];
    for mask in 0u64..(1u64 << pairs.len()) {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let mut g = UnGraph::<(), ()>::with_capacity(n, pairs.len());
        for _ in 0..n {
            g.add_node(());
        }
        g.extend_with_edges(edges);
        counts[connected_components(&g) - 1] += 1;
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_poly(c: &[i64]) -> CountingPolynomial {
        Polynomial::new(Indeterminate::T, c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn id1_small() {
        assert_eq!(lhs_id1(1).unwrap(), t_poly(&[0, 1]));
        assert_eq!(lhs_id1(2).unwrap(), t_poly(&[0, 2, 1]));
        assert_eq!(rhs_id1(1).unwrap(), t_poly(&[0, 1]));
        assert_eq!(rhs_id1(2).unwrap(), t_poly(&[0, 2, 1]));
        assert_eq!(lhs_id1(3).unwrap(), rhs_id1(3).unwrap());
        assert_eq!(lhs_id1(3).unwrap(), t_poly(&[0, 12, 8, 1]));
        for n in 1..=8 {
            let lhs = lhs_id1(n).unwrap();
            assert_eq!(lhs.coeff(n), int(1));
            assert_eq!(lhs.coeff(0), int(0));
        }
        assert_eq!(lhs_id1(0), Err(IdentityError::ZeroN));
    }

    #[test]
    fn id2_small() {
        assert_eq!(lhs_id2(2).unwrap(), t_poly(&[1, 1]));
        assert_eq!(rhs_id2(2).unwrap(), t_poly(&[1, 1]));
        assert_eq!(lhs_id2(3).unwrap(), t_poly(&[1, 4]));
        assert_eq!(rhs_id2(3).unwrap(), t_poly(&[1, 4]));
        assert_eq!(lhs_id2(4).unwrap(), &t_poly(&[1, 9]) * &t_poly(&[1, 1]));
        assert_eq!(rhs_id2(4).unwrap(), &t_poly(&[1, 9]) * &t_poly(&[1, 1]));
    }

    #[test]
    fn id2_constant_term_is_all_ones_weight() {
        // l = n only for (1,…,1): s_p = s_{p'} = (n−1)!, weight 1
        for n in 1..=12 {
            let parts = vec![1; n];
            let fact = factorial(n - 1);
            let direct = (&fact / s_weight_of(&parts)).pow(2);
            assert_eq!(lhs_id2(n).unwrap().coeff(0), from_bigint(direct));
        }
    }

    #[test]
    fn word_and_big_weights_agree() {
        let fact = Factorial::of(11);
        let big_only = Factorial {
            big: fact.big.clone(),
            small: None,
        };
        for c in enumerate(12, &PartFilter::All).unwrap() {
            assert_eq!(
                double_weight(c.parts(), &fact),
                double_weight(c.parts(), &big_only)
            );
        }
        assert!(Factorial::of(40).small.is_none());
    }

    #[test]
    fn id3_small() {
        assert_eq!(lhs_id3(1).unwrap(), t_poly(&[1]));
        assert_eq!(rhs_id3(1).unwrap(), t_poly(&[1]));
        assert_eq!(lhs_id3(3).unwrap(), t_poly(&[1, 12]));
        assert_eq!(rhs_id3(3).unwrap(), t_poly(&[1, 12]));
        assert!(verify(Family::Id3, 5).unwrap().equal);
    }

    #[test]
    fn report_mismatch_position() {
        let r = IdentityReport::new("x", 2, t_poly(&[1, 2, 3]), t_poly(&[1, 2, 4]));
        assert!(!r.equal);
        assert_eq!(r.first_mismatch, Some(2));
    }

    #[test]
    fn first_order_exp_of_z() {
        let u = Potential::new(vec![int(1)]);
        let r = first_order_identity(&u, 4).unwrap();
        assert!(r.equal);
        assert_eq!(r.right.coeff(4), crate::algebra::rat(1, 24));
        let zero = first_order_identity(&Potential::new(vec![]), 5).unwrap();
        assert!(zero.equal);
        assert_eq!(zero.left, Polynomial::one(Indeterminate::Z));
    }

    #[test]
    fn first_order_z_squared_coefficient() {
        for u in crate::samples::potentials(crate::samples::DEFAULT_SEED, 5, 2) {
            let r = first_order_identity(&u, 2).unwrap();
            let expected = (u.coeff(2) + u.coeff(1) * u.coeff(1)) / int(2);
            assert_eq!(r.left.coeff(2), expected);
            assert_eq!(r.right.coeff(2), expected);
        }
    }

    #[test]
    fn connected_graph_deck() {
        let d = Deck::connected_graphs(6);
        let expected = [1u64, 1, 4, 38, 728, 26704];
        assert_eq!(d.cards(), expected.map(BigUint::from).as_slice());
    }

    #[test]
    fn hands_small() {
        let d = Deck::connected_graphs(6);
        for n in 1..=6 {
            let h = hands_by_composition(&d, n).unwrap();
            assert_eq!(&h[0], &BigInt::from(d.card(n).clone()));
            let total: BigInt = h.iter().sum();
            assert_eq!(total, BigInt::one() << (n * (n - 1) / 2));
        }
        assert_eq!(hands_by_composition(&d, 2).unwrap()[1], BigInt::one());
        assert_eq!(
            hands_by_composition(&Deck::constant(2, 1), 3),
            Err(IdentityError::DeckTooShort { have: 2, need: 3 })
        );
    }

    #[test]
    fn exp_formula_trivial_decks() {
        for r in exp_formula_check(&Deck::constant(6, 1), 6).unwrap() {
            assert!(r.equal);
            assert_eq!(r.left.coeff(r.n), int(1));
        }
        for r in exp_formula_check(&Deck::constant(4, 0), 4).unwrap() {
            assert!(r.equal && r.left.is_zero());
        }
    }

    #[test]
    fn brute_force_graphs() {
        let h = graph_hands_brute_force(4, BRUTE_FORCE_GRAPH_CAP).unwrap();
        assert_eq!(h, [38, 19, 6, 1].map(BigInt::from).to_vec());
        assert!(graph_hands_brute_force(6, 5).is_err());
    }
}
