//! Theta vectors theta_{m,a}, their numerical evaluation, and the 2m x 2m
//! matrices describing how theta components mix under SL2(Z).
//!
//! Two normalizations of the theta series coexist:
//!
//! * [`theta_basis`] carries the exponent 2 pi i m((lambda+a)^2 tau + 2(lambda+a)z).
//!   Writing r = 2m lambda + nu this is the lattice sum
//!   sum_{r = nu (2m)} q^{r^2/4m} zeta^r, the normalization in which the
//!   elliptic slash leaves theta expansions invariant, T acts diagonally,
//!   S acts by a discrete Fourier kernel, and the heat operator annihilates
//!   every component. All structural code (slash actions, pairings,
//!   orthogonality) uses this basis.
//! * [`theta_eval`] carries the exponent pi i m(...), i.e.
//!   theta_eval(m, a, tau, z) = theta_basis(m, a, tau/2, z/2). It is the
//!   half-argument variant exposed on the CLI.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::eta::{chi, Multiplier};
use crate::modgroup::{GroupElement, Token};
use crate::numerics::{series_sum, PrecisionConfig};

const TAU: f64 = 2.0 * std::f64::consts::PI;

/// Index (m, a) with a = nu / (2m) in (2m)^{-1} Z / Z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThetaIndex {
    m: u32,
    nu: u32,
}

impl ThetaIndex {
    pub fn new(m: u32, nu: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("index m must be positive".into()));
        }
        if nu >= 2 * m {
            return Err(Error::InvalidArgument(format!(
                "numerator nu must satisfy 0 <= nu < 2m, got nu={nu}, m={m}"
            )));
        }
        Ok(Self { m, nu })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    /// a = nu / (2m) as a float.
    pub fn a(&self) -> f64 {
        self.nu as f64 / (2.0 * self.m as f64)
    }
}

/// Lattice-normalized theta component (exponent 2 pi i m).
pub fn theta_basis(
    cfg: &PrecisionConfig,
    idx: &ThetaIndex,
    tau: Complex64,
    z: Complex64,
) -> Result<Complex64> {
    if tau.im <= 0.0 {
        return Err(Error::InvalidArgument("theta requires Im tau > 0".into()));
    }
    let m = idx.m as f64;
    let a = idx.a();
    let s = series_sum(cfg, |lambda| {
        let la = lambda as f64 + a;
        let exponent = Complex64::new(0.0, TAU * m) * (la * la * tau + 2.0 * la * z);
        exponent.exp()
    })?;
    Ok(s.value)
}

/// Half-argument theta (exponent pi i m), the normalization in which
/// theta_eval(1, 0, i, 0) = sum e^{-pi lambda^2}.
pub fn theta_eval(
    cfg: &PrecisionConfig,
    idx: &ThetaIndex,
    tau: Complex64,
    z: Complex64,
) -> Result<Complex64> {
    theta_basis(cfg, idx, tau * 0.5, z * 0.5)
}

/// Diagonal T^n phase on component nu: e^{2 pi i n nu^2 / (4m)}.
///
/// Reduced mod 4m in exact integer arithmetic so the phase is an exact
/// root of unity; the nullspace solver depends on this conditioning.
pub(crate) fn t_phase(m: u32, nu: u32, n: i64) -> Complex64 {
    let modulus = 4 * m as i128;
    let num = (n as i128 * (nu as i128) * (nu as i128)).rem_euclid(modulus);
    Complex64::from_polar(1.0, TAU * num as f64 / modulus as f64)
}

/// Constant (2mi)^{-1/2} of the S mixing kernel.
pub(crate) fn s_mix_constant(m: u32) -> Complex64 {
    Complex64::from_polar(1.0 / (2.0 * m as f64).sqrt(), -std::f64::consts::FRAC_PI_4)
}

/// Fourier kernel entry e^{-2 pi i nu nu' / (2m)}.
pub(crate) fn s_mix_kernel(m: u32, nu: u32, nu_prime: u32) -> Complex64 {
    let modulus = 2 * m as i128;
    let num = (nu as i128 * nu_prime as i128).rem_euclid(modulus);
    Complex64::from_polar(1.0, -TAU * num as f64 / modulus as f64)
}

/// Action matrix sending theta-expansion coefficients (f_a) to the
/// coefficients of the slashed expansion, together with its provenance.
#[derive(Debug, Clone)]
pub struct ActionMatrix {
    pub entries: DMatrix<Complex64>,
    pub twice_weight: i32,
    pub mult: Multiplier,
    pub g: GroupElement,
}

impl ActionMatrix {
    /// Largest deviation of M* M from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let m = &self.entries;
        let prod = m.adjoint() * m;
        let n = prod.nrows();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let expect = if i == j { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) };
                worst = worst.max((prod[(i, j)] - expect).norm());
            }
        }
        worst
    }
}

fn token_matrix(
    cfg: &PrecisionConfig,
    m: u32,
    mult: &Multiplier,
    token: Token,
) -> Result<DMatrix<Complex64>> {
    let dim = (2 * m) as usize;
    match token {
        Token::TPow(n) => {
            let chi_t = chi(cfg, mult, &token.matrix())?;
            Ok(DMatrix::from_fn(dim, dim, |r, c| {
                if r == c {
                    chi_t.conj() * t_phase(m, r as u32, n)
                } else {
                    Complex64::new(0.0, 0.0)
                }
            }))
        }
        Token::S => {
            let chi_s = chi(cfg, mult, &GroupElement::s())?;
            let cst = chi_s.conj() * s_mix_constant(m);
            Ok(DMatrix::from_fn(dim, dim, |r, c| {
                cst * s_mix_kernel(m, c as u32, r as u32)
            }))
        }
        Token::SInv => {
            // S^{-1} = S^3
            let s = token_matrix(cfg, m, mult, Token::S)?;
            Ok(&s * &s * s.clone())
        }
    }
}

/// Matrix of the theta-component mixing induced by slashing with g at the
/// given half-integral weight and multiplier.
///
/// Per-generator matrices (diagonal for T, Fourier kernel for S) are
/// composed along the word of g; the defining contract, asserted by a
/// sample-point check rather than by formula, is that slashing a constant
/// theta expansion directly agrees with the matrix-transformed expansion.
pub fn weil_matrix(
    cfg: &PrecisionConfig,
    m: u32,
    twice_weight: i32,
    mult: &Multiplier,
    g: &GroupElement,
) -> Result<ActionMatrix> {
    if twice_weight.rem_euclid(2) != 1 {
        return Err(Error::InvalidArgument(format!(
            "theta mixing matrices exist at half-integral weight only, got twice-weight {twice_weight}"
        )));
    }
    if (mult.idx() as i32 - twice_weight).rem_euclid(4) != 0 {
        return Err(Error::InadmissibleMultiplier { idx: mult.idx(), twice_weight });
    }
    let dim = (2 * m) as usize;
    let mut word = g.decompose();
    if word.negate {
        // -I = S * S
        word.tokens.push(Token::S);
        word.tokens.push(Token::S);
    }
    let mut matrix = DMatrix::from_diagonal_element(dim, dim, Complex64::new(1.0, 0.0));
    for token in &word.tokens {
        // right action: coefficients transform by M(t_k) ... M(t_1)
        matrix = token_matrix(cfg, m, mult, *token)? * matrix;
    }
    let result = ActionMatrix { entries: matrix, twice_weight, mult: *mult, g: *g };
    verify_action_matrix(cfg, &result, m)?;
    Ok(result)
}

/// Sample-point verification of an action matrix against the direct slash.
fn verify_action_matrix(cfg: &PrecisionConfig, am: &ActionMatrix, m: u32) -> Result<()> {
    let dim = (2 * m) as usize;
    let coeffs: Vec<Complex64> = (0..dim)
        .map(|nu| Complex64::new(1.0 + 0.17 * nu as f64, 0.39 - 0.11 * nu as f64))
        .collect();
    let points = [
        (Complex64::new(0.20, 1.10), Complex64::new(0.30, 0.20)),
        (Complex64::new(-0.40, 0.80), Complex64::new(-0.10, 0.45)),
        (Complex64::new(0.15, 1.60), Complex64::new(0.25, -0.30)),
    ];
    let chi_g = chi(cfg, &am.mult, &am.g)?;
    let mixed: Vec<Complex64> = (0..dim)
        .map(|r| (0..dim).map(|c| am.entries[(r, c)] * coeffs[c]).sum())
        .collect();
    let e = (1 - am.twice_weight) / 2;

    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for (tau, z) in points {
        let eval = |t: Complex64, y: Complex64| -> Result<Complex64> {
            let mut acc = Complex64::new(0.0, 0.0);
            for (nu, cval) in coeffs.iter().enumerate() {
                let idx = ThetaIndex::new(m, nu as u32)?;
                acc += cval * theta_basis(cfg, &idx, t, y)?;
            }
            Ok(acc)
        };
        let direct =
            jacobi_slash_point(cfg, &eval, am.twice_weight, chi_g, m, &am.g, (0, 0), tau, z)?;
        let den = am.g.automorphy_denominator(tau);
        let mut side = Complex64::new(0.0, 0.0);
        for (nu, cval) in mixed.iter().enumerate() {
            let idx = ThetaIndex::new(m, nu as u32)?;
            side += cval * theta_basis(cfg, &idx, tau, z)?;
        }
        side *= den.powi(e);
        worst = worst.max((direct - side).norm());
        scale = scale.max(direct.norm());
    }
    let rel = worst / scale.max(1e-300);
    if rel > 1e-8 {
        return Err(Error::VerificationFailure { residual: rel });
    }
    Ok(())
}

/// Pointwise Jacobi slash (F |_{k,m,chi} (gamma, X))(tau, z) of an arbitrary
/// evaluator, used as the ground truth for coefficient-level actions.
pub fn jacobi_slash_point(
    cfg: &PrecisionConfig,
    f: &dyn Fn(Complex64, Complex64) -> Result<Complex64>,
    twice_weight: i32,
    chi_gamma: Complex64,
    m: u32,
    gamma: &GroupElement,
    lattice: (i64, i64),
    tau: Complex64,
    z: Complex64,
) -> Result<Complex64> {
    let _ = cfg;
    let (lambda, mu) = (lattice.0 as f64, lattice.1 as f64);
    // elliptic slash first: evaluate the gamma-slash at (tau, z + lambda tau + mu)
    let zx = z + lambda * tau + mu;
    let den = gamma.automorphy_denominator(tau);
    if den.norm() < 1e-14 {
        return Err(Error::DegeneratePoint);
    }
    let w = twice_weight as f64 / 2.0;
    let mf = m as f64;
    let core = den.powf(-w)
        * chi_gamma.conj()
        * (Complex64::new(0.0, -TAU * mf) * Complex64::new(gamma.c as f64, 0.0) * zx * zx / den)
            .exp()
        * f(gamma.apply(tau), zx / den)?;
    let lattice_factor =
        (Complex64::new(0.0, TAU * mf) * (lambda * lambda * tau + 2.0 * lambda * z + mu * lambda))
            .exp();
    Ok(lattice_factor * core)
}

/// Cusp-width exponents kappa_a of the diagonal action of an upper
/// triangular generator Q = T^lambda, and the set N_chi = {a : kappa_a = 0}.
#[derive(Debug, Clone)]
pub struct KappaExponents {
    pub kappas: Vec<f64>,
    pub n_chi: Vec<u32>,
}

/// Diagonal phases of chi(Q) A_{Q,chi} with (A_{Q,chi})_{a,a} = e^{-2 pi i lambda m a^2},
/// reduced to [0, 1).
pub fn kappa_exponents(
    cfg: &PrecisionConfig,
    m: u32,
    mult: &Multiplier,
    q: &GroupElement,
) -> Result<KappaExponents> {
    if q.c != 0 || q.a != 1 || q.d != 1 {
        return Err(Error::NotParabolic);
    }
    let lambda = q.b;
    let chi_q = chi(cfg, mult, q)?;
    let mut kappas = Vec::with_capacity(2 * m as usize);
    let mut n_chi = Vec::new();
    for nu in 0..2 * m {
        let b = chi_q * t_phase(m, nu, -lambda);
        let kappa = (b.arg() / TAU).rem_euclid(1.0);
        if kappa < 1e-9 || kappa > 1.0 - 1e-9 {
            n_chi.push(nu);
            kappas.push(0.0);
        } else {
            kappas.push(kappa);
        }
    }
    Ok(KappaExponents { kappas, n_chi })
}
