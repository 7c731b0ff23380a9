use super::report::{ExpansionKind, ExpansionReport};
use crate::error::{Error, Result};
use crate::exactnum::ntheory::binomial_u128;
use crate::exactnum::{BigScalar, CycloElem};
use crate::mpoly::{mul_linear_form, reduce_coefficients, SparsePoly};
use crate::DEFAULT_TERM_BUDGET;

/// Coefficients `(ζ^(j·α_i))_i` of the `j`-th eigenvalue form, `ζ` of order `d`.
pub fn eigenform(d: usize, alpha: &[u32], j: usize) -> Vec<CycloElem> {
    alpha
        .iter()
        .map(|&a| CycloElem::root_power(d, (j * a as usize) % d))
        .collect()
}

/// Product of the eigenvalue forms with indices `factors`, in that order,
/// without reducing coefficients.
pub fn eigenform_product<I>(d: usize, alpha: &[u32], factors: I, budget: u64) -> Result<SparsePoly<CycloElem>>
where
    I: IntoIterator<Item = usize>,
{
    let nvars = alpha.len();
    check_budget(nvars, d, budget)?;
    let mut p = SparsePoly::constant(nvars, CycloElem::one(d));
    for j in factors {
        p = mul_linear_form(&p, &eigenform(d, alpha, j))?;
    }
    Ok(p)
}

/// Number of monomials of degree `d` in `nvars` variables.
pub fn term_bound(nvars: usize, d: usize) -> u128 {
    if nvars == 0 {
        return u128::from(d == 0);
    }
    binomial_u128((nvars + d - 1) as u64, d as u64)
}

fn check_budget(nvars: usize, d: usize, budget: u64) -> Result<()> {
    let needed = term_bound(nvars, d);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

fn expand_in_order(d: usize, alpha: Vec<u32>, budget: u64) -> Result<ExpansionReport> {
    let p = eigenform_product(d, &alpha, 0..d, budget)?;
    let reduced = reduce_coefficients(&p)?;
    Ok(ExpansionReport::from_poly(ExpansionKind::Det, alpha, &reduced))
}

/// `det(Circ(x_0, …, x_{N-1}))` as the product of its `N` eigenvalue forms.
pub fn det_expand(n: usize) -> Result<ExpansionReport> {
    det_expand_with_budget(n, DEFAULT_TERM_BUDGET)
}

pub fn det_expand_with_budget(n: usize, budget: u64) -> Result<ExpansionReport> {
    if n == 0 {
        return Err(Error::Domain("det_expand requires N >= 1".into()));
    }
    expand_in_order(n, (0..n as u32).collect(), budget)
}

/// Checks that `alpha` is strictly increasing in `[0, d]` with distinct
/// residues mod `d`.
pub fn validate_positions(d: usize, alpha: &[u32]) -> Result<()> {
    if alpha.len() < 2 {
        return Err(Error::InvalidInput("at least two variables are required".into()));
    }
    if d == 0 {
        return Err(Error::InvalidInput("d must be positive".into()));
    }
    if alpha.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidInput(format!(
            "alpha {alpha:?} is not strictly increasing"
        )));
    }
    if alpha.iter().any(|&a| a as usize > d) {
        return Err(Error::InvalidInput(format!(
            "alpha {alpha:?} has an entry above d = {d}"
        )));
    }
    let mut residues: Vec<usize> = alpha.iter().map(|&a| a as usize % d).collect();
    residues.sort_unstable();
    if residues.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput(format!(
            "alpha {alpha:?} places two variables at the same position mod {d}"
        )));
    }
    Ok(())
}

/// Determinant of the `d×d` circulant whose first row carries `x_i` at
/// position `alpha[i]` and zeros elsewhere.
pub fn det_expand_general(d: usize, alpha: &[u32]) -> Result<ExpansionReport> {
    det_expand_general_with_budget(d, alpha, DEFAULT_TERM_BUDGET)
}

pub fn det_expand_general_with_budget(d: usize, alpha: &[u32], budget: u64) -> Result<ExpansionReport> {
    validate_positions(d, alpha)?;
    let residues: Vec<u32> = alpha.iter().map(|&a| a % d as u32).collect();
    let p = eigenform_product(d, &residues, 0..d, budget)?;
    let reduced = reduce_coefficients(&p)?;
    Ok(ExpansionReport::from_poly(ExpansionKind::Det, alpha.to_vec(), &reduced))
}

/// Evaluates an integer polynomial at a floating-point point. Used only for
/// numeric cross-checks.
pub fn evaluate_f64(poly: &SparsePoly<BigScalar>, point: &[f64]) -> f64 {
    poly.iter()
        .map(|(e, c)| {
            e.exps()
                .iter()
                .zip(point)
                .fold(c.to_f64(), |acc, (&k, &x)| acc * x.powi(k as i32))
        })
        .sum()
}
