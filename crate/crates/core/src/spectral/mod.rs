//! Spectral residues of the parameterized recurrence
//!
//! ```text
//! f_0 = 1,   (ν − n) f_n = Σ_{j<n} a_{jn} f_j
//! ```
//!
//! `ρ_n` is the residue of `f_n(ν)` at `ν = n`. Two independent routes are
//! provided: solving the recurrence symbolically in `ν` and reading off the
//! pole, and summing over compositions of `n`. Arrays coming from first- and
//! second-order potentials, the inverse map from residues back to a
//! second-order potential, and the closed-form residues of the three
//! exactly solvable potentials live here too.
//!
//! Everything is generic over [`Coefficient`], so an array or potential may
//! carry a marker variable and the residues come out as polynomials in it.

mod nu;

use std::collections::BTreeSet;

use thiserror::Error;

use crate::algebra::{
    factorial, from_bigint, int, pochhammer, series_exp, Coefficient, CountingPolynomial,
    ExactRational, Indeterminate, Polynomial, TruncatedSeries,
};
use crate::compositions::{enumerate, PartFilter};

pub use nu::NuRationalFunction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("order {requested} exceeds the array bound {bound}")]
    OrderExceedsBound { requested: usize, bound: usize },
    #[error("entry a[{j}][{k}] is outside 0 <= j < k <= {bound}")]
    BadIndex { j: usize, k: usize, bound: usize },
    #[error("pole at nu = {0}")]
    Pole(ExactRational),
}

/// The constants `a_{jk}`, `0 ≤ j < k ≤ bound`.
#[derive(Clone, PartialEq, Debug)]
pub struct CoefficientArray<C> {
    bound: usize,
    // rows[k - 1][j] = a_{jk}
    rows: Vec<Vec<C>>,
}

impl<C: Coefficient> CoefficientArray<C> {
    pub fn zeros(bound: usize) -> Self {
        Self::from_fn(bound, |_, _| C::zero())
    }

    pub fn from_fn(bound: usize, mut entry: impl FnMut(usize, usize) -> C) -> Self {
        let rows = (1..=bound)
            .map(|k| (0..k).map(|j| entry(j, k)).collect())
            .collect();
        CoefficientArray { bound, rows }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn get(&self, j: usize, k: usize) -> &C {
        &self.rows[k - 1][j]
    }

    pub fn set(&mut self, j: usize, k: usize, value: C) -> Result<(), SpectralError> {
        if j >= k || k > self.bound {
            return Err(SpectralError::BadIndex {
                j,
                k,
                bound: self.bound,
            });
        }
        self.rows[k - 1][j] = value;
        Ok(())
    }

    fn check_order(&self, n_max: usize) -> Result<(), SpectralError> {
        if n_max > self.bound {
            Err(SpectralError::OrderExceedsBound {
                requested: n_max,
                bound: self.bound,
            })
        } else {
            Ok(())
        }
    }
}

/// `U(z) = U_1 z + U_2 z² + …`, truncated. Coefficients past the stored
/// length read as zero.
#[derive(Clone, PartialEq, Debug)]
pub struct Potential<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> Potential<C> {
    /// `coeffs[0]` is `U_1`.
    pub fn new(coeffs: Vec<C>) -> Self {
        Potential { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// `U_k`, one-based.
    pub fn coeff(&self, k: usize) -> C {
        assert!(k >= 1, "potentials have no constant term");
        self.coeffs.get(k - 1).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Zero-extended (or cut) to exactly `order` coefficients.
    pub fn resized(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order, C::zero());
        Potential { coeffs }
    }

    /// `U_p = ∏ U_{p_i}`
    fn product_over(&self, parts: &[usize]) -> C {
        let mut acc = C::one();
        for &p in parts {
            let u = self.coeff(p);
            if u.is_zero() {
                return C::zero();
            }
            acc = acc.mul_ref(&u);
        }
        acc
    }
}

/// `ρ_1, …, ρ_K`.
#[derive(Clone, PartialEq, Debug)]
pub struct ResidueSequence<C>(pub Vec<C>);

impl<C> ResidueSequence<C> {
    /// `ρ_n`, one-based.
    pub fn rho(&self, n: usize) -> &C {
        &self.0[n - 1]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[C] {
        &self.0
    }
}

/// Solves the recurrence identically in `ν`: `f_0 = 1` and
/// `f_n = (Σ_j a_{jn} f_j) / (ν − n)` for `n ≤ n_max`.
pub fn solve_symbolic<C: Coefficient>(
    a: &CoefficientArray<C>,
    n_max: usize,
) -> Result<Vec<NuRationalFunction<C>>, SpectralError> {
    a.check_order(n_max)?;
    let mut f: Vec<NuRationalFunction<C>> = Vec::with_capacity(n_max + 1);
    f.push(NuRationalFunction::one());
    for n in 1..=n_max {
        let mut sum = NuRationalFunction::zero();
        for (j, fj) in f.iter().enumerate() {
            let coeff = a.get(j, n);
            if coeff.is_zero() || fj.is_zero() {
                continue;
            }
            sum = sum.add(&fj.scale_by(coeff));
        }
        f.push(sum.divide_by_pole(n));
    }
    Ok(f)
}

/// `Res(f, ν = n)`.
pub fn residue_at_pole<C: Coefficient>(f: &NuRationalFunction<C>, n: usize) -> C {
    f.residue_at(n)
}

/// Residues through the symbolic solve.
pub fn residues_symbolic<C: Coefficient>(
    a: &CoefficientArray<C>,
    n_max: usize,
) -> Result<ResidueSequence<C>, SpectralError> {
    let f = solve_symbolic(a, n_max)?;
    Ok(ResidueSequence(
        (1..=n_max).map(|n| residue_at_pole(&f[n], n)).collect(),
    ))
}

/// Residues as composition sums,
///
/// ```text
/// ρ_n = Σ_{|p|=n} ∏_{j=0}^{l−1} a_{s_j s_{j+1}} / ∏_{j=1}^{l−1} (n − s_j),   s_0 = 0.
/// ```
///
/// Each chain `0 = s_0 < s_1 < … < s_l = n` picks up `1/(ν − s_j)` at every
/// intermediate step, evaluated at `ν = n`; the denominator is the partial
/// sum product of the reversed composition.
pub fn residues_by_composition<C: Coefficient>(
    a: &CoefficientArray<C>,
    n_max: usize,
) -> Result<ResidueSequence<C>, SpectralError> {
    a.check_order(n_max)?;
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut total = C::zero();
        let mut comps = enumerate(n, &PartFilter::All).expect("n >= 1");
        'comp: while let Some(parts) = comps.next_parts() {
            let mut term = C::one();
            let mut denom = int(1);
            let mut s = 0;
            for &p in parts {
                let next = s + p;
                let entry = a.get(s, next);
                if entry.is_zero() {
                    continue 'comp;
                }
                term = term.mul_ref(entry);
                if next < n {
                    denom *= int((n - next) as i64);
                }
                s = next;
            }
            total = total.add_ref(&term.scale(&denom.recip()));
        }
        out.push(total);
    }
    Ok(ResidueSequence(out))
}

/// `a_{jn} = U_{n−j}` from `(ν − n) φ_n = Σ U_{n−j} φ_j`.
pub fn from_first_order_potential<C: Coefficient>(u: &Potential<C>) -> CoefficientArray<C> {
    CoefficientArray::from_fn(u.order(), |j, n| u.coeff(n - j))
}

/// `a_{jn} = U_{n−j} / n` from `n(ν − n) φ_n = Σ U_{n−j} φ_j`.
pub fn from_second_order_potential<C: Coefficient>(u: &Potential<C>) -> CoefficientArray<C> {
    CoefficientArray::from_fn(u.order(), |j, n| {
        u.coeff(n - j).scale(&int(n as i64).recip())
    })
}

/// `ρ_n = (1/n) Σ_{|p|=n} U_p / (s_p s_{p'})` for a single `n`.
pub fn second_order_residue<C: Coefficient>(u: &Potential<C>, n: usize) -> C {
    assert!(n >= 1);
    let mut total = C::zero();
    let mut comps = enumerate(n, &PartFilter::All).expect("n >= 1");
    while let Some(parts) = comps.next_parts() {
        let up = u.product_over(parts);
        if up.is_zero() {
            continue;
        }
        let weight = crate::compositions::s_weight_of(parts)
            * crate::compositions::reversed_s_weight_of(parts);
        total = total.add_ref(&up.scale(&ExactRational::new(1.into(), weight)));
    }
    total.scale(&int(n as i64).recip())
}

/// Residues of the second-order model equation from the double-weight
/// composition sum, for `n = 1..=n_max`.
pub fn residues_second_order<C: Coefficient>(u: &Potential<C>, n_max: usize) -> ResidueSequence<C> {
    ResidueSequence((1..=n_max).map(|n| second_order_residue(u, n)).collect())
}

/// Recovers the second-order potential from its residues by forward
/// substitution: `ρ_n = U_n/n + (terms in U_1..U_{n−1})`.
pub fn potential_from_residues<C: Coefficient>(rho: &ResidueSequence<C>) -> Potential<C> {
    let mut u = Potential::new(Vec::with_capacity(rho.len()));
    for n in 1..=rho.len() {
        // with U_n still absent the sum holds only the lower-order part
        let lower = second_order_residue(&u, n);
        let un = rho.rho(n).sub_ref(&lower).scale(&int(n as i64));
        u.coeffs.push(un);
    }
    u
}

/// Outcome of comparing a first-order recurrence with its gauge transform
/// `ψ(z) = exp(σ(z)) φ(z)`, `σ = Σ U_k z^k / k`.
#[derive(Clone, PartialEq, Debug)]
pub struct GaugeReport<C> {
    pub order: usize,
    /// From the symbolic solve of `φ`.
    pub direct: ResidueSequence<C>,
    /// From the composition sums of the same array.
    pub by_composition: ResidueSequence<C>,
    /// From `ψ_n = Σ_j [z^{n−j}]exp(σ) · φ_j`.
    pub transformed: ResidueSequence<C>,
    /// Whether every `ψ_n` reduced to `ν e_n / (ν − n)`, the solution of
    /// `zψ' − νψ + ν exp(σ) = 0`.
    pub transformed_closed_form: bool,
    pub equal: bool,
}

pub fn gauge_check_first_order<C: Coefficient>(
    u: &Potential<C>,
    n_max: usize,
) -> Result<GaugeReport<C>, SpectralError> {
    let u = u.resized(n_max);
    let a = from_first_order_potential(&u);
    let phi = solve_symbolic(&a, n_max)?;
    let by_composition = residues_by_composition(&a, n_max)?;

    let sigma = TruncatedSeries::new(
        n_max,
        std::iter::once(C::zero())
            .chain((1..=n_max).map(|k| u.coeff(k).scale(&int(k as i64).recip())))
            .collect(),
    );
    let e = series_exp(&sigma).expect("sigma has no constant term");

    let mut direct = Vec::with_capacity(n_max);
    let mut transformed = Vec::with_capacity(n_max);
    let mut closed_form = true;
    for n in 1..=n_max {
        let psi = (0..=n).fold(NuRationalFunction::zero(), |acc, j| {
            acc.add(&phi[j].scale_by(e.coeff(n - j)))
        });
        let expected = NuRationalFunction::new(
            Polynomial::monomial(Indeterminate::Nu, e.coeff(n).clone(), 1),
            BTreeSet::from([n]),
        );
        closed_form &= psi == expected;
        direct.push(phi[n].residue_at(n));
        transformed.push(psi.residue_at(n));
    }
    let direct = ResidueSequence(direct);
    let transformed = ResidueSequence(transformed);
    let equal = direct == transformed && direct == by_composition;
    Ok(GaugeReport {
        order: n_max,
        direct,
        by_composition,
        transformed,
        transformed_closed_form: closed_form,
        equal,
    })
}

/// The three exactly solvable second-order potentials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `U = t z/(1−z)² = t Σ k z^k`, hypergeometric.
    Id1,
    /// `U = z + t z²`, confluent hypergeometric.
    Id2,
    /// `U = t^{−1/2} Σ_{k odd} k z^k`.
    Id3,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Id1, Family::Id2, Family::Id3];

    pub fn name(self) -> &'static str {
        match self {
            Family::Id1 => "id1",
            Family::Id2 => "id2",
            Family::Id3 => "id3",
        }
    }
}

/// Potential of a solvable family with its marker kept as a polynomial
/// coefficient.
///
/// For [`Family::Id3`] the marker is `s = t^{−1/2}`, so `U_k = k s` for odd
/// `k`; see [`family_residue_rows`] for how the result is brought back to `t`.
pub fn family_potential(family: Family, order: usize) -> Potential<CountingPolynomial> {
    let marker = |c: i64| Polynomial::monomial(Indeterminate::T, int(c), 1);
    let one = Polynomial::one(Indeterminate::T);
    let zero = Polynomial::zero(Indeterminate::T);
    let coeffs = (1..=order)
        .map(|k| match family {
            Family::Id1 => marker(k as i64),
            Family::Id2 => match k {
                1 => one.clone(),
                2 => marker(1),
                _ => zero.clone(),
            },
            Family::Id3 if k % 2 == 1 => marker(k as i64),
            Family::Id3 => zero.clone(),
        })
        .collect();
    Potential::new(coeffs)
}

/// Closed-form `ρ_n` for the solvable families, as a polynomial in `t`.
///
/// `Id1`: `∏_{j=1}^n (t + j(j−1)) / (n!(n−1)!)`.
/// `Id2`: `∏_{k=0}^{⌊(n−1)/2⌋} (1 + t(n−1−2k)²) / (n!(n−1)!)`.
/// `Id3`: `∏_{k=n−1,n−3,…>0} (1 + (k⁴−k²)t)`, without the factorial
/// normalization (it is `n!(n−1)! t^{n/2} ρ_n`).
pub fn closed_form_residue(family: Family, n: usize) -> CountingPolynomial {
    assert!(n >= 1, "residues start at n = 1");
    let norm = || ExactRational::new(1.into(), factorial(n) * factorial(n - 1));
    match family {
        Family::Id1 => {
            let product = (1..=n).fold(Polynomial::one(Indeterminate::T), |acc, j| {
                let factor =
                    Polynomial::new(Indeterminate::T, vec![int((j * (j - 1)) as i64), int(1)]);
                &acc * &factor
            });
            product.scale(&norm())
        }
        Family::Id2 => {
            let constants: Vec<ExactRational> = (0..=(n - 1) / 2)
                .map(|k| {
                    let m = (n - 1 - 2 * k) as i64;
                    int(m * m)
                })
                .collect();
            crate::algebra::product_of_linear_factors(&constants).scale(&norm())
        }
        Family::Id3 => {
            let constants: Vec<ExactRational> = descending_by_two(n - 1)
                .map(|k| {
                    let k = k as i64;
                    int(k.pow(4) - k.pow(2))
                })
                .collect();
            crate::algebra::product_of_linear_factors(&constants)
        }
    }
}

/// `start, start−2, …` down to the last positive value.
pub(crate) fn descending_by_two(start: usize) -> impl Iterator<Item = usize> {
    (1..=start).rev().step_by(2)
}

/// One line of a family residue comparison.
#[derive(Clone, PartialEq, Debug)]
pub struct FamilyResidueRow {
    pub n: usize,
    /// `ρ_n` from the composition sum. For `Id3` this is the normalized
    /// `n!(n−1)! t^{n/2} ρ_n`, matching [`closed_form_residue`].
    pub residue: CountingPolynomial,
    pub closed_form: CountingPolynomial,
    pub matches: bool,
}

/// Residues of a solvable family through [`residues_second_order`] next to
/// their closed forms, `n = 1..=order`.
pub fn family_residue_rows(family: Family, order: usize) -> Vec<FamilyResidueRow> {
    let u = family_potential(family, order);
    let rho = residues_second_order(&u, order);
    (1..=order)
        .map(|n| {
            let raw = rho.rho(n).clone();
            let residue = match family {
                Family::Id1 | Family::Id2 => raw,
                Family::Id3 => {
                    // s^l -> t^{(n−l)/2}, then scale by n!(n−1)!
                    let scaled = raw.scale(&from_bigint(factorial(n) * factorial(n - 1)));
                    let mut coeffs = vec![ExactRational::from_integer(0.into()); n / 2 + 1];
                    for (l, c) in scaled.coeffs().iter().enumerate() {
                        if num_traits::Zero::is_zero(c) {
                            continue;
                        }
                        assert!(l <= n && (n - l) % 2 == 0, "odd-part parity");
                        coeffs[(n - l) / 2] = c.clone();
                    }
                    Polynomial::new(Indeterminate::T, coeffs)
                }
            };
            let closed_form = closed_form_residue(family, n);
            let matches = residue == closed_form;
            FamilyResidueRow {
                n,
                residue,
                closed_form,
                matches,
            }
        })
        .collect()
}

/// `ψ_n = (α)_n (α−ν)_n / (n! (1−ν)_n)`, the hypergeometric series
/// coefficient with `β = α − ν`, `γ = 1 − ν`.
pub fn hypergeom_coefficient(
    alpha: &ExactRational,
    nu: &ExactRational,
    n: usize,
) -> Result<ExactRational, SpectralError> {
    let gamma = int(1) - nu;
    let lower = pochhammer(&gamma, n);
    if num_traits::Zero::is_zero(&lower) {
        return Err(SpectralError::Pole(nu.clone()));
    }
    let beta = alpha - nu;
    Ok(pochhammer(alpha, n) * pochhammer(&beta, n) / (lower * from_bigint(factorial(n))))
}

/// `Res(ψ_n, ν = n)` for the coefficient above, evaluated as
/// `lim_{ν→n} (ν−n) ψ_n(ν)`.
pub fn hypergeom_residue(alpha: &ExactRational, n: usize) -> ExactRational {
    assert!(n >= 1);
    let nq = int(n as i64);
    // (1−ν)_n = −(ν−n) ∏_{k<n} (k−ν)
    let mut rest = -int(1);
    for k in 1..n {
        rest *= int(k as i64) - &nq;
    }
    let beta = alpha - &nq;
    pochhammer(alpha, n) * pochhammer(&beta, n) / (rest * from_bigint(factorial(n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn q_array(bound: usize, entries: &[(usize, usize, i64)]) -> CoefficientArray<ExactRational> {
        let mut a = CoefficientArray::zeros(bound);
        for &(j, k, v) in entries {
            a.set(j, k, int(v)).unwrap();
        }
        a
    }

    fn pot(c: &[i64]) -> Potential<ExactRational> {
        Potential::new(c.iter().map(|&x| int(x)).collect())
    }

    #[test]
    fn one_step_solve() {
        let a = q_array(1, &[(0, 1, 5)]);
        let f = solve_symbolic(&a, 1).unwrap();
        assert_eq!(f[1].denominator_roots(), &BTreeSet::from([1]));
        assert_eq!(f[1].numerator().coeffs(), &[int(5)]);
        assert_eq!(residue_at_pole(&f[1], 1), int(5));
        assert_eq!(residues_by_composition(&a, 1).unwrap().0, vec![int(5)]);
    }

    #[test]
    fn zero_array() {
        let a = CoefficientArray::<ExactRational>::zeros(4);
        let f = solve_symbolic(&a, 4).unwrap();
        assert!(f[1..].iter().all(|fn_| fn_.is_zero()));
        assert!(residues_by_composition(&a, 4)
            .unwrap()
            .0
            .iter()
            .all(|r| r == &int(0)));
    }

    #[test]
    fn two_step_solve() {
        let a = q_array(2, &[(0, 1, 1), (0, 2, 1), (1, 2, 1)]);
        let f = solve_symbolic(&a, 2).unwrap();
        // ν / ((ν−1)(ν−2))
        assert_eq!(f[2].numerator().coeffs(), &[int(0), int(1)]);
        assert_eq!(f[2].denominator_roots(), &BTreeSet::from([1, 2]));
        assert_eq!(residue_at_pole(&f[2], 2), int(2));
        assert_eq!(residue_at_pole(&f[2], 3), int(0));
        assert_eq!(
            residues_by_composition(&a, 2).unwrap().0,
            vec![int(1), int(2)]
        );
    }

    #[test]
    fn asymmetric_array_uses_reversed_weight() {
        // Only the chain 0 -> 1 -> 3 is nonzero. Its residue is
        // a01 a13 / (3 − 1), i.e. divided by s_{p'} = 2 and not s_p = 1.
        let a = q_array(3, &[(0, 1, 1), (1, 3, 1)]);
        let sym = residues_symbolic(&a, 3).unwrap();
        assert_eq!(sym.rho(3), &rat(1, 2));
        assert_eq!(residues_by_composition(&a, 3).unwrap(), sym);
    }

    #[test]
    fn literal_product_without_initial_factor_disagrees() {
        // Dropping a_{0,s_1} makes the single-part composition contribute an
        // empty product 1 instead of a_{01}.
        let a = q_array(1, &[(0, 1, 5)]);
        let literal_rho1 = int(1);
        assert_ne!(residues_symbolic(&a, 1).unwrap().rho(1), &literal_rho1);
    }

    #[test]
    fn order_beyond_bound() {
        let a = CoefficientArray::<ExactRational>::zeros(2);
        assert_eq!(
            solve_symbolic(&a, 3).err(),
            Some(SpectralError::OrderExceedsBound {
                requested: 3,
                bound: 2
            })
        );
        let mut b = a.clone();
        assert!(b.set(2, 2, int(1)).is_err());
    }

    #[test]
    fn first_order_potentials() {
        let a = from_first_order_potential(&pot(&[7]));
        assert_eq!(a.get(0, 1), &int(7));
        let rho = residues_symbolic(&from_first_order_potential(&pot(&[1, 1])), 2).unwrap();
        assert_eq!(rho.rho(2), &int(2));
        let rho =
            residues_by_composition(&from_first_order_potential(&pot(&[1, 0, 0])), 3).unwrap();
        assert_eq!(rho.rho(3), &rat(1, 2));
    }

    #[test]
    fn second_order_potentials() {
        let u = pot(&[1, 1, 1]);
        let sym = residues_symbolic(&from_second_order_potential(&u), 3).unwrap();
        assert_eq!(sym.0, vec![int(1), int(1), rat(3, 4)]);
        assert_eq!(residues_second_order(&u, 3), sym);
        let zero = pot(&[0, 0, 0, 0]);
        assert!(residues_second_order(&zero, 4)
            .0
            .iter()
            .all(|r| r == &int(0)));
        assert_eq!(residues_second_order(&pot(&[9]), 1).0, vec![int(9)]);
    }

    #[test]
    fn inverse_map() {
        let u = pot(&[4]);
        assert_eq!(potential_from_residues(&residues_second_order(&u, 1)), u);
        let u = pot(&[1, 1, 1]);
        assert_eq!(potential_from_residues(&residues_second_order(&u, 3)), u);
    }

    #[test]
    fn gauge_invariance_small() {
        let report = gauge_check_first_order(&pot(&[1]), 4).unwrap();
        assert!(report.equal);
        assert!(report.transformed_closed_form);
        // ρ_n = n·[z^n] e^z = 1/(n−1)!
        assert_eq!(report.direct.0, vec![int(1), int(1), rat(1, 2), rat(1, 6)]);
        let zero = gauge_check_first_order(&pot(&[]), 3).unwrap();
        assert!(zero.equal && zero.direct.0.iter().all(|r| r == &int(0)));
    }

    #[test]
    fn closed_forms() {
        let id1 = closed_form_residue(Family::Id1, 2);
        assert_eq!(id1.coeffs(), &[int(0), int(1), rat(1, 2)]);
        let id2 = closed_form_residue(Family::Id2, 3);
        assert_eq!(id2.coeffs(), &[rat(1, 12), rat(4, 12)]);
        let id3 = closed_form_residue(Family::Id3, 3);
        assert_eq!(id3.coeffs(), &[int(1), int(12)]);
        assert_eq!(closed_form_residue(Family::Id3, 1).coeffs(), &[int(1)]);
    }

    #[test]
    fn family_rows_match() {
        for family in Family::ALL {
            for row in family_residue_rows(family, 8) {
                assert!(row.matches, "{} n={}", family.name(), row.n);
            }
        }
    }

    #[test]
    fn hypergeometric_coefficients() {
        assert_eq!(
            hypergeom_coefficient(&rat(3, 7), &rat(2, 5), 0).unwrap(),
            int(1)
        );
        assert_eq!(
            hypergeom_coefficient(&int(1), &rat(1, 2), 1).unwrap(),
            int(1)
        );
        assert!(matches!(
            hypergeom_coefficient(&int(1), &int(2), 3),
            Err(SpectralError::Pole(_))
        ));
    }

    #[test]
    fn hypergeometric_residue_matches_closed_form() {
        // t = α(1−α); n+1 distinct t values pin a degree-n polynomial.
        for n in 1..=8 {
            let closed = closed_form_residue(Family::Id1, n);
            let composed = residues_second_order(&family_potential(Family::Id1, n), n);
            for step in 0..=n {
                let alpha = rat(2 * step as i64 + 1, 3);
                let t = &alpha * (int(1) - &alpha);
                let value = hypergeom_residue(&alpha, n);
                assert_eq!(closed.eval(&t), value);
                assert_eq!(composed.rho(n).eval(&t), value);
            }
        }
    }

    #[test]
    fn residue_via_limit_of_coefficient() {
        // (ν − n)ψ_n(ν) is regular at n; check the limit against nearby
        // exact evaluation of the polynomial part.
        let alpha = rat(2, 3);
        let n = 3;
        let direct = hypergeom_residue(&alpha, n);
        // (ν−n)ψ_n is a rational function continuous at ν = n; sample at
        // ν = n + ε and compare the exact difference shrinks like ε.
        let eps = rat(1, 1_000_000);
        let nu = int(n as i64) + &eps;
        let near = hypergeom_coefficient(&alpha, &nu, n).unwrap() * &eps;
        let diff = num_traits::Signed::abs(&(near - &direct));
        assert!(diff < rat(1, 1000));
    }
}
