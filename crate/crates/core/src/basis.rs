//! Shape functions for the trial and test spaces.
//!
//! Trial space: Hermite polynomials on one step `[0, dt]`. The cubic set
//! `N1..N4` interpolates endpoint configuration and velocity; the general
//! order-`n` set interpolates endpoint derivatives up to order `n - 1` with a
//! polynomial of degree `2n - 1`. Test space: shifted Legendre polynomials,
//! orthogonal on `[0, dt]`.
//!
//! All evaluation is done in the normalized variable `tau = t / dt`, with
//! chain-rule factors `1/dt`, `1/dt^2` applied on output, so conditioning does
//! not depend on the step length.

use thiserror::Error;

/// Highest supported Hermite interpolation order.
pub const MAX_ORDER: usize = 4;

#[derive(Debug, Error, PartialEq)]
pub enum BasisError {
    #[error("evaluation time {t} outside step [0, {dt}]")]
    OutOfRange { t: f64, dt: f64 },
    #[error("step length must be positive, got {0}")]
    InvalidStep(f64),
    #[error("interpolation order {0} unsupported (1..={MAX_ORDER})")]
    InvalidOrder(usize),
    #[error("derivative index {j} invalid for order {n}")]
    InvalidIndex { n: usize, j: usize },
    #[error("derivative order {0} unsupported (0..=2)")]
    InvalidDeriv(usize),
}

/// Values and first/second time derivatives of a set of shape functions at
/// one point. Lengths are 4 for the cubic set and `2n` for order `n`.
#[derive(Debug, Clone)]
pub struct ShapeEval {
    pub values: Vec<f64>,
    pub first_derivs: Vec<f64>,
    pub second_derivs: Vec<f64>,
}

/// Shifted Legendre values `P_0..P_k` at one point.
#[derive(Debug, Clone)]
pub struct TestEval {
    pub values: Vec<f64>,
}

/// Dense polynomial in the normalized variable, ascending coefficients.
#[derive(Debug, Clone)]
struct Poly(Vec<f64>);

impl Poly {
    fn eval(&self, x: f64) -> f64 {
        self.0.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    fn derivative(&self) -> Poly {
        if self.0.len() <= 1 {
            return Poly(vec![0.0]);
        }
        Poly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect(),
        )
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = vec![0.0; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly(out)
    }
}

fn binomial(n: usize, k: usize) -> f64 {
    let mut out = 1.0;
    for i in 0..k {
        out = out * (n - i) as f64 / (i + 1) as f64;
    }
    out
}

fn factorial(j: usize) -> f64 {
    (1..=j).map(|k| k as f64).product()
}

/// Coefficients of `h_{n,j}(tau)`, the normalized Hermite basis polynomial:
/// `H_{n,j}(t) = dt^j h_{n,j}(t/dt)`.
fn hermite_poly(n: usize, j: usize) -> Poly {
    // (1 - tau)^n
    let one_minus = Poly(
        (0..=n)
            .map(|k| if k % 2 == 0 { binomial(n, k) } else { -binomial(n, k) })
            .collect(),
    );
    // sum_{s=0}^{n-j-1} C(n+s-1, s) tau^s  (empty sum -> zero polynomial)
    let tail = if n >= j + 1 {
        Poly((0..=(n - j - 1)).map(|s| binomial(n + s - 1, s)).collect())
    } else {
        Poly(vec![0.0])
    };
    let mut p = one_minus.mul(&tail);
    // multiply by tau^j / j!
    let jf = factorial(j);
    let mut coeffs = vec![0.0; j];
    coeffs.extend(p.0.drain(..).map(|c| c / jf));
    Poly(coeffs)
}

/// Precomputed order-`n` Hermite basis: polynomials and their first two
/// derivatives for the `n` left-endpoint functions.
#[derive(Debug, Clone)]
struct HermiteBasis {
    n: usize,
    polys: Vec<[Poly; 3]>,
}

impl HermiteBasis {
    fn new(n: usize) -> Self {
        let polys = (0..n)
            .map(|j| {
                let p = hermite_poly(n, j);
                let d1 = p.derivative();
                let d2 = d1.derivative();
                [p, d1, d2]
            })
            .collect();
        HermiteBasis { n, polys }
    }

    /// Evaluate all `2n` shape functions at `tau`, ordered left block then
    /// right block. The right-end functions are `(-1)^j H_{n,j}(dt - t)` so
    /// that every function controls exactly one endpoint derivative datum.
    fn eval(&self, tau: f64, dt: f64) -> ShapeEval {
        let n = self.n;
        let mut values = vec![0.0; 2 * n];
        let mut first = vec![0.0; 2 * n];
        let mut second = vec![0.0; 2 * n];
        for j in 0..n {
            let [p, d1, d2] = &self.polys[j];
            // dt^{j-k} chain-rule factors
            let s0 = dt.powi(j as i32);
            let s1 = dt.powi(j as i32 - 1);
            let s2 = dt.powi(j as i32 - 2);
            values[j] = s0 * p.eval(tau);
            first[j] = s1 * d1.eval(tau);
            second[j] = s2 * d2.eval(tau);
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            let mirrored = 1.0 - tau;
            values[n + j] = sign * s0 * p.eval(mirrored);
            first[n + j] = -sign * s1 * d1.eval(mirrored);
            second[n + j] = sign * s2 * d2.eval(mirrored);
        }
        ShapeEval {
            values,
            first_derivs: first,
            second_derivs: second,
        }
    }
}

fn basis_for(n: usize) -> Result<&'static HermiteBasis, BasisError> {
    use std::sync::OnceLock;
    static BASES: OnceLock<Vec<HermiteBasis>> = OnceLock::new();
    if n == 0 || n > MAX_ORDER {
        return Err(BasisError::InvalidOrder(n));
    }
    let all = BASES.get_or_init(|| (1..=MAX_ORDER).map(HermiteBasis::new).collect());
    Ok(&all[n - 1])
}

fn check_domain(t: f64, dt: f64) -> Result<(), BasisError> {
    if !(dt > 0.0) {
        return Err(BasisError::InvalidStep(dt));
    }
    if !(0.0..=dt).contains(&t) {
        return Err(BasisError::OutOfRange { t, dt });
    }
    Ok(())
}

/// Cubic Hermite shape functions `N1..N4` and their first two time
/// derivatives at `t` in `[0, dt]`.
///
/// `N1, N3` interpolate endpoint configurations; `N2, N4` endpoint
/// velocities: `values(0) = (1,0,0,0)`, `first_derivs(0) = (0,1,0,0)`,
/// `values(dt) = (0,0,1,0)`, `first_derivs(dt) = (0,0,0,1)`.
pub fn cubic_shape(t: f64, dt: f64) -> Result<ShapeEval, BasisError> {
    hermite_shape(2, t, dt)
}

/// Order-`n` Hermite shape set (all `2n` functions), ordered as the `n`
/// left-endpoint functions for derivatives `0..n-1` followed by the `n`
/// right-endpoint functions.
pub fn hermite_shape(n: usize, t: f64, dt: f64) -> Result<ShapeEval, BasisError> {
    check_domain(t, dt)?;
    Ok(basis_for(n)?.eval(t / dt, dt))
}

/// The `deriv`-th time derivative of the single Hermite basis function
/// `H_{n,j}(t)` (the left-endpoint function controlling the `j`-th
/// derivative at `t = 0`).
pub fn hermite_general(
    n: usize,
    j: usize,
    t: f64,
    dt: f64,
    deriv: usize,
) -> Result<f64, BasisError> {
    if n == 0 || n > MAX_ORDER {
        return Err(BasisError::InvalidOrder(n));
    }
    if j >= n {
        return Err(BasisError::InvalidIndex { n, j });
    }
    if deriv > 2 {
        return Err(BasisError::InvalidDeriv(deriv));
    }
    check_domain(t, dt)?;
    let eval = basis_for(n)?.eval(t / dt, dt);
    Ok(match deriv {
        0 => eval.values[j],
        1 => eval.first_derivs[j],
        _ => eval.second_derivs[j],
    })
}

/// Shifted Legendre polynomials `P_0..P_k_max` at `t` in `[0, dt]`,
/// generated by the three-term recurrence mapped onto the step.
pub fn shifted_legendre(k_max: usize, t: f64, dt: f64) -> Result<TestEval, BasisError> {
    check_domain(t, dt)?;
    let x = (2.0 * t - dt) / dt;
    let mut values = Vec::with_capacity(k_max + 1);
    values.push(1.0);
    if k_max >= 1 {
        values.push(x);
    }
    for k in 1..k_max {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * values[k] - kf * values[k - 1]) / (kf + 1.0);
        values.push(next);
    }
    Ok(TestEval { values })
}
