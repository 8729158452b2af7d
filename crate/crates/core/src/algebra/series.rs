use super::{int, AlgebraError, Coefficient, Indeterminate, Polynomial};

/// Power series in `z` known through `z^order`. Nothing past the order is
/// stored or consulted.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<C> {
    order: usize,
    coeffs: Vec<C>,
}

impl<C: Coefficient> TruncatedSeries<C> {
    /// Pads with zeros or drops terms so that exactly `c_0..=c_order` is kept.
    pub fn new(order: usize, mut coeffs: Vec<C>) -> Self {
        coeffs.resize(order + 1, C::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn from_polynomial(order: usize, p: &Polynomial<C>) -> Self {
        Self::new(order, p.coeffs().to_vec())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|k| self.coeffs[k].add_ref(&other.coeffs[k]))
            .collect();
        TruncatedSeries { order, coeffs }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n).fold(C::zero(), |acc, k| {
                    acc.add_ref(&self.coeffs[k].mul_ref(&other.coeffs[n - k]))
                })
            })
            .collect();
        TruncatedSeries { order, coeffs }
    }

    pub fn to_polynomial(&self) -> Polynomial<C> {
        Polynomial::new(Indeterminate::Z, self.coeffs.clone())
    }

    pub fn exp(&self) -> Result<Self, AlgebraError> {
        series_exp(self)
    }
}

/// `exp(σ)` for a series with vanishing constant term, via the differential
/// recurrence `n·g_n = Σ_{k=1..n} k·σ_k·g_{n−k}`, `g_0 = 1`.
pub fn series_exp<C: Coefficient>(
    sigma: &TruncatedSeries<C>,
) -> Result<TruncatedSeries<C>, AlgebraError> {
    if !sigma.coeffs[0].is_zero() {
        return Err(AlgebraError::NonzeroConstantTerm);
    }
    let order = sigma.order;
    // k·σ_k, reused for every n
    let weighted: Vec<C> = (0..=order)
        .map(|k| sigma.coeffs[k].scale(&int(k as i64)))
        .collect();
    let mut g: Vec<C> = Vec::with_capacity(order + 1);
    g.push(C::one());
    for n in 1..=order {
        let sum = (1..=n).fold(C::zero(), |acc, k| {
            if weighted[k].is_zero() {
                acc
            } else {
                acc.add_ref(&weighted[k].mul_ref(&g[n - k]))
            }
        });
        g.push(sum.scale(&int(n as i64).recip()));
    }
    Ok(TruncatedSeries { order, coeffs: g })
}
