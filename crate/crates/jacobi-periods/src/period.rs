//! The space P_{k-2,m} of polynomial theta expansions, its slash action at
//! weight 5/2 - k, the heat operator on coefficients, conjugation, and the
//! coefficient pairing.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::eta::{chi, Multiplier};
use crate::modgroup::{GroupElement, JacobiGroupElement, Token};
use crate::numerics::PrecisionConfig;
use crate::theta::{s_mix_constant, s_mix_kernel, t_phase, theta_basis, ThetaIndex};

/// Element of P_{k-2,m}: one polynomial coefficient row per theta component,
/// representing G(tau, z) = sum_a f_a(tau) theta_{m,a}(tau, z) with
/// f_a(tau) = sum_n A_{a,n} tau^n of degree at most k - 2.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyThetaVector {
    k: u32,
    m: u32,
    /// 2m rows, each of length k - 1, coefficients in ascending powers.
    rows: Vec<Vec<Complex64>>,
}

#[derive(Serialize, Deserialize)]
struct RowJson {
    nu: u32,
    coeffs: Vec<[f64; 2]>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    k: u32,
    m: u32,
    rows: Vec<RowJson>,
}

impl PolyThetaVector {
    pub fn zero(k: u32, m: u32) -> Result<Self> {
        if k < 2 || m == 0 {
            return Err(Error::InvalidArgument(format!(
                "PolyThetaVector requires k >= 2 and m >= 1, got k={k}, m={m}"
            )));
        }
        Ok(Self {
            k,
            m,
            rows: vec![vec![Complex64::new(0.0, 0.0); (k - 1) as usize]; (2 * m) as usize],
        })
    }

    pub fn from_rows(k: u32, m: u32, rows: Vec<Vec<Complex64>>) -> Result<Self> {
        let mut v = Self::zero(k, m)?;
        if rows.len() != (2 * m) as usize || rows.iter().any(|r| r.len() != (k - 1) as usize) {
            return Err(Error::ShapeMismatch(format!(
                "expected {} rows of length {}",
                2 * m,
                k - 1
            )));
        }
        v.rows = rows;
        Ok(v)
    }

    /// Unit coefficient vector: tau^n on component nu.
    pub fn basis_vector(k: u32, m: u32, nu: u32, n: u32) -> Result<Self> {
        let mut v = Self::zero(k, m)?;
        if nu >= 2 * m || n > k - 2 {
            return Err(Error::InvalidArgument(format!(
                "basis vector (nu={nu}, n={n}) out of range for k={k}, m={m}"
            )));
        }
        v.rows[nu as usize][n as usize] = Complex64::new(1.0, 0.0);
        Ok(v)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn rows(&self) -> &[Vec<Complex64>] {
        &self.rows
    }

    pub fn coeff(&self, nu: u32, n: u32) -> Complex64 {
        self.rows[nu as usize][n as usize]
    }

    pub fn set_coeff(&mut self, nu: u32, n: u32, value: Complex64) {
        self.rows[nu as usize][n as usize] = value;
    }

    pub fn sup_norm(&self) -> f64 {
        self.rows
            .iter()
            .flat_map(|r| r.iter())
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.sup_norm() <= tol
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|c| c * factor).collect())
            .collect();
        Self { k: self.k, m: self.m, rows }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(Self { k: self.k, m: self.m, rows })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x - y).collect())
            .collect();
        Ok(Self { k: self.k, m: self.m, rows })
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.k != other.k || self.m != other.m {
            return Err(Error::ShapeMismatch(format!(
                "(k={}, m={}) vs (k={}, m={})",
                self.k, self.m, other.k, other.m
            )));
        }
        Ok(())
    }

    /// Evaluate the represented function sum_a f_a(tau) theta_{m,a}(tau, z).
    pub fn eval(&self, cfg: &PrecisionConfig, tau: Complex64, z: Complex64) -> Result<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (nu, row) in self.rows.iter().enumerate() {
            let mut poly = Complex64::new(0.0, 0.0);
            for coeff in row.iter().rev() {
                poly = poly * tau + coeff;
            }
            let idx = ThetaIndex::new(self.m, nu as u32)?;
            acc += poly * theta_basis(cfg, &idx, tau, z)?;
        }
        Ok(acc)
    }

    /// Right slash action |_{5/2-k, m, chi} (gamma, X).
    ///
    /// The lattice part X acts trivially on theta expansions and is
    /// accepted as-is. The gamma part is applied token by token along the
    /// word of gamma: a polynomial change of variable expanded exactly by
    /// binomial convolution, then component mixing by the theta kernel.
    pub fn slash(
        &self,
        cfg: &PrecisionConfig,
        twice_weight: i32,
        mult: &Multiplier,
        j: &JacobiGroupElement,
    ) -> Result<Self> {
        let expected = 5 - 2 * self.k as i32;
        if twice_weight != expected {
            return Err(Error::WeightMismatch { expected, got: twice_weight });
        }
        if (mult.idx() as i32 - twice_weight).rem_euclid(4) != 0 {
            return Err(Error::InadmissibleMultiplier { idx: mult.idx(), twice_weight });
        }
        let mut out = self.clone();
        let mut word = j.gamma.decompose();
        if word.negate {
            // -I = S^2
            word.tokens.push(Token::S);
            word.tokens.push(Token::S);
        }
        for token in &word.tokens {
            match token {
                Token::TPow(n) => out.apply_t_pow(cfg, mult, *n)?,
                Token::S => out.apply_s(cfg, mult)?,
                Token::SInv => {
                    out.apply_s(cfg, mult)?;
                    out.apply_s(cfg, mult)?;
                    out.apply_s(cfg, mult)?;
                }
            }
        }
        Ok(out)
    }

    fn apply_t_pow(&mut self, cfg: &PrecisionConfig, mult: &Multiplier, n: i64) -> Result<()> {
        let chi_tn = chi(cfg, mult, &GroupElement::t_pow(n))?;
        let deg = (self.k - 2) as usize;
        for (nu, row) in self.rows.iter_mut().enumerate() {
            // f(tau) -> f(tau + n) by binomial shift
            let mut shifted = vec![Complex64::new(0.0, 0.0); deg + 1];
            for (l, coeff) in row.iter().enumerate() {
                let mut pow = 1.0f64;
                for j in (0..=l).rev() {
                    shifted[j] += coeff * binom(l, j) * pow;
                    pow *= n as f64;
                }
            }
            let phase = chi_tn.conj() * t_phase(self.m, nu as u32, n);
            for c in shifted.iter_mut() {
                *c *= phase;
            }
            *row = shifted;
        }
        Ok(())
    }

    fn apply_s(&mut self, cfg: &PrecisionConfig, mult: &Multiplier) -> Result<()> {
        let chi_s = chi(cfg, mult, &GroupElement::s())?;
        let constant = chi_s.conj() * s_mix_constant(self.m);
        let e = (self.k - 2) as usize;
        let dim = self.rows.len();
        // per-row substitution f(tau) -> tau^{k-2} f(-1/tau)
        let reversed: Vec<Vec<Complex64>> = self
            .rows
            .iter()
            .map(|row| {
                let mut out = vec![Complex64::new(0.0, 0.0); e + 1];
                for (n, coeff) in row.iter().enumerate() {
                    out[e - n] = if n % 2 == 0 { *coeff } else { -coeff };
                }
                out
            })
            .collect();
        // component mixing by the Fourier kernel
        let mut rows = vec![vec![Complex64::new(0.0, 0.0); e + 1]; dim];
        for (nu_prime, out_row) in rows.iter_mut().enumerate() {
            for (nu, rev_row) in reversed.iter().enumerate() {
                let kern = constant * s_mix_kernel(self.m, nu as u32, nu_prime as u32);
                for (dst, src) in out_row.iter_mut().zip(rev_row) {
                    *dst += kern * src;
                }
            }
        }
        self.rows = rows;
        Ok(())
    }

    /// Heat operator on coefficients: each f_a becomes
    /// (-16 pi^2 m) (1/(2 pi i)) f_a', dropping the degree by one.
    ///
    /// For k = 2 the rows are constants and the result is the zero vector,
    /// kept at the same shape.
    pub fn heat(&self) -> Self {
        self.heat_with_constant(heat_constant(self.m))
    }

    fn heat_with_constant(&self, c: Complex64) -> Self {
        if self.k == 2 {
            return Self::zero(self.k, self.m).expect("valid shape");
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                (1..row.len()).map(|n| row[n] * (n as f64) * c).collect::<Vec<_>>()
            })
            .collect();
        Self { k: self.k - 1, m: self.m, rows }
    }

    /// G^c: every coefficient replaced by its complex conjugate, so that
    /// the represented function is sum conj(g_a(conj tau)) theta_{m,a}.
    pub fn conjugate_c(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|c| c.conj()).collect())
            .collect();
        Self { k: self.k, m: self.m, rows }
    }

    /// Coefficient pairing
    /// <P, Q> = sum_a sum_n (-1)^{k-2-n} binom(k-2, n)^{-1} A_{a,n} B_{a,k-2-n}.
    pub fn pair(&self, other: &Self) -> Result<Complex64> {
        self.check_shape(other)?;
        let e = (self.k - 2) as usize;
        let mut acc = Complex64::new(0.0, 0.0);
        for (ra, rb) in self.rows.iter().zip(&other.rows) {
            for n in 0..=e {
                let sign = if (e - n) % 2 == 0 { 1.0 } else { -1.0 };
                acc += ra[n] * rb[e - n] * (sign / binom(e, n));
            }
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> String {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(nu, row)| RowJson {
                nu: nu as u32,
                coeffs: row.iter().map(|c| [c.re, c.im]).collect(),
            })
            .collect();
        serde_json::to_string(&PolyJson { k: self.k, m: self.m, rows }).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let parsed: PolyJson = serde_json::from_str(text)
            .map_err(|e| Error::InvalidArgument(format!("bad PolyThetaVector JSON: {e}")))?;
        let mut v = Self::zero(parsed.k, parsed.m)?;
        for row in parsed.rows {
            if row.nu >= 2 * parsed.m || row.coeffs.len() != (parsed.k - 1) as usize {
                return Err(Error::ShapeMismatch(format!(
                    "row nu={} has {} coefficients",
                    row.nu,
                    row.coeffs.len()
                )));
            }
            for (n, c) in row.coeffs.iter().enumerate() {
                v.rows[row.nu as usize][n] = Complex64::new(c[0], c[1]);
            }
        }
        Ok(v)
    }
}

/// The scalar (-16 pi^2 m) / (2 pi i) = 8 pi m i carried by one heat
/// application on coefficients.
pub fn heat_constant(m: u32) -> Complex64 {
    Complex64::new(0.0, 8.0 * std::f64::consts::PI * m as f64)
}

pub(crate) fn binom(n: usize, k: usize) -> f64 {
    let mut out = 1.0f64;
    for j in 0..k.min(n - k) {
        out = out * (n - j) as f64 / (j + 1) as f64;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theta::jacobi_slash_point;
    use rand::{Rng, SeedableRng};

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::default()
    }

    fn mult_for_k(k: u32) -> Multiplier {
        // eta power 2k+1 mod 24 is always admissible for weight k + 1/2
        Multiplier::new((2 * k + 1) % 24, 2 * k as i32 + 1).unwrap()
    }

    fn random_vector(rng: &mut rand_chacha::ChaCha8Rng, k: u32, m: u32) -> PolyThetaVector {
        let rows = (0..2 * m)
            .map(|_| {
                (0..k - 1)
                    .map(|_| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
                    .collect()
            })
            .collect();
        PolyThetaVector::from_rows(k, m, rows).unwrap()
    }

    #[test]
    fn identity_slash_is_identity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let p = random_vector(&mut rng, 4, 1);
        let id = JacobiGroupElement::from_gamma(GroupElement::identity());
        let q = p.slash(&cfg(), -3, &mult_for_k(4), &id).unwrap();
        assert!(q.sub(&p).unwrap().sup_norm() < 1e-14);
    }

    #[test]
    fn lattice_only_slash_is_identity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        let p = random_vector(&mut rng, 3, 2);
        let j = JacobiGroupElement::new(GroupElement::identity(), (1, 0));
        let q = p.slash(&cfg(), -1, &mult_for_k(3), &j).unwrap();
        assert!(q.sub(&p).unwrap().sup_norm() < 1e-14);
    }

    #[test]
    fn t_slash_scales_constant_rows_by_the_diagonal_phase() {
        let c = cfg();
        let mu = mult_for_k(2);
        let chi_t = chi(&c, &mu, &GroupElement::t()).unwrap();
        let j = JacobiGroupElement::from_gamma(GroupElement::t());
        for nu in 0..2u32 {
            let p = PolyThetaVector::basis_vector(2, 1, nu, 0).unwrap();
            let q = p.slash(&c, 1, &mu, &j).unwrap();
            let expect = chi_t.conj() * t_phase(1, nu, 1);
            assert!((q.coeff(nu, 0) - expect).norm() < 1e-12);
            assert!(q.coeff(1 - nu, 0).norm() < 1e-14);
        }
    }

    #[test]
    fn weight_mismatch_is_rejected() {
        let p = PolyThetaVector::zero(4, 1).unwrap();
        let j = JacobiGroupElement::from_gamma(GroupElement::t());
        let err = p.slash(&cfg(), 1, &mult_for_k(2), &j).unwrap_err();
        assert!(matches!(err, Error::WeightMismatch { expected: -3, got: 1 }));
    }

    #[test]
    fn slash_matches_pointwise_ground_truth() {
        // Evaluating the slashed coefficients must reproduce the directly
        // slashed evaluation of P. This is the module's ground truth.
        let c = cfg();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let elements = [
            JacobiGroupElement::from_gamma(GroupElement::s()),
            JacobiGroupElement::from_gamma(GroupElement::u()),
            JacobiGroupElement::new(GroupElement::new(2, 1, 1, 1).unwrap(), (1, -1)),
            JacobiGroupElement::new(GroupElement::new(1, 0, 2, 1).unwrap(), (0, 2)),
        ];
        let points = [
            (Complex64::new(0.12, 1.05), Complex64::new(0.25, 0.15)),
            (Complex64::new(-0.33, 0.85), Complex64::new(-0.2, 0.35)),
            (Complex64::new(0.41, 1.35), Complex64::new(0.1, -0.28)),
        ];
        for (k, m) in [(2u32, 1u32), (3, 1), (4, 1), (2, 2)] {
            let tw = 5 - 2 * k as i32;
            let mu = mult_for_k(k);
            let p = random_vector(&mut rng, k, m);
            for j in &elements {
                let slashed = p.slash(&c, tw, &mu, j).unwrap();
                let chi_g = chi(&c, &mu, &j.gamma).unwrap();
                for (tau, z) in points {
                    let direct = jacobi_slash_point(
                        &c,
                        &|t, y| p.eval(&c, t, y),
                        tw,
                        chi_g,
                        m,
                        &j.gamma,
                        j.lattice,
                        tau,
                        z,
                    )
                    .unwrap();
                    let via_coeffs = slashed.eval(&c, tau, z).unwrap();
                    let scale = direct.norm().max(1.0);
                    assert!(
                        (direct - via_coeffs).norm() <= 1e-8 * scale,
                        "k={k} m={m} j={j:?} point=({tau},{z}): {direct} vs {via_coeffs}"
                    );
                }
            }
        }
    }

    #[test]
    fn slash_is_a_right_action_on_random_words() {
        let c = cfg();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        for _ in 0..100 {
            let k = *[2u32, 3, 4].iter().nth(rng.random_range(0..3)).unwrap();
            let m = if rng.random_bool(0.7) { 1 } else { 2 };
            let tw = 5 - 2 * k as i32;
            let mu = mult_for_k(k);
            let p = random_vector(&mut rng, k, m);
            let rand_j = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut g = GroupElement::identity();
                for _ in 0..rng.random_range(1..=6) {
                    g = match rng.random_range(0..2) {
                        0 => g.mul(&GroupElement::s()),
                        _ => g.mul(&GroupElement::t_pow(rng.random_range(-3..=3))),
                    };
                }
                JacobiGroupElement::new(g, (rng.random_range(-1..=1), rng.random_range(-1..=1)))
            };
            let j1 = rand_j(&mut rng);
            let j2 = rand_j(&mut rng);
            let lhs = p.slash(&c, tw, &mu, &j1).unwrap().slash(&c, tw, &mu, &j2).unwrap();
            let rhs = p.slash(&c, tw, &mu, &j1.mul(&j2)).unwrap();
            let defect = lhs.sub(&rhs).unwrap().sup_norm();
            assert!(defect <= 1e-9 * p.sup_norm().max(1.0), "defect {defect}");
        }
    }

    #[test]
    fn heat_drops_degree_and_annihilates_after_k_minus_one_steps() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        // constants die immediately
        let p2 = random_vector(&mut rng, 2, 1);
        assert!(p2.heat().is_zero(0.0));
        // k = 4 needs exactly three applications
        let p4 = random_vector(&mut rng, 4, 1);
        let once = p4.heat();
        assert_eq!(once.k(), 3);
        let twice = once.heat();
        assert!(!twice.is_zero(1e-12));
        assert!(twice.heat().is_zero(0.0));
    }

    #[test]
    fn heat_matches_finite_difference_oracle() {
        // f_a(tau) = tau on one component; H_m of the evaluated sum equals
        // the coefficient-level constant 8 pi m i times theta.
        let c = cfg();
        let m = 1u32;
        let p = PolyThetaVector::basis_vector(3, m, 0, 1).unwrap();
        let hp = p.heat();
        let tau = Complex64::new(0.0, 1.0);
        let z = Complex64::new(0.2, 0.1);
        // finite-difference heat operator on the evaluated function
        let h = 1e-4;
        let f = |t: Complex64, y: Complex64| p.eval(&c, t, y).unwrap();
        let du = (f(tau + h, z) - f(tau - h, z)) / (2.0 * h);
        let dv = (f(tau + Complex64::new(0.0, h), z) - f(tau - Complex64::new(0.0, h), z))
            / (2.0 * h);
        let dtau = (du - Complex64::new(0.0, 1.0) * dv) * 0.5;
        let dxx = (f(tau, z + h) - 2.0 * f(tau, z) + f(tau, z - h)) / (h * h);
        let dyy = (f(tau, z + Complex64::new(0.0, h)) - 2.0 * f(tau, z)
            + f(tau, z - Complex64::new(0.0, h)))
            / (h * h);
        let dxy = (f(tau, z + Complex64::new(h, h)) - f(tau, z + Complex64::new(h, -h))
            - f(tau, z + Complex64::new(-h, h))
            + f(tau, z + Complex64::new(-h, -h)))
            / (4.0 * h * h);
        let dzz = (dxx - dyy - Complex64::new(0.0, 2.0) * dxy) * 0.25;
        let heat_fd = Complex64::new(0.0, 8.0 * std::f64::consts::PI * m as f64) * dtau - dzz;
        let heat_coeff = hp.eval(&c, tau, z).unwrap();
        assert!(
            (heat_fd - heat_coeff).norm() <= 1e-5 * heat_coeff.norm().max(1.0),
            "{heat_fd} vs {heat_coeff}"
        );
    }

    #[test]
    fn conjugation_is_an_involution_and_commutes_with_heat_up_to_sign() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        let p = random_vector(&mut rng, 4, 1);
        assert_eq!(p.conjugate_c().conjugate_c(), p);
        let real_rows = PolyThetaVector::from_rows(
            2,
            1,
            vec![vec![Complex64::new(1.5, 0.0)], vec![Complex64::new(-0.25, 0.0)]],
        )
        .unwrap();
        assert_eq!(real_rows.conjugate_c(), real_rows);

        let lhs = p.heat().conjugate_c();
        let rhs = p.conjugate_c().heat_with_constant(heat_constant(p.m()).conj());
        assert!(lhs.sub(&rhs).unwrap().sup_norm() < 1e-12);
    }

    #[test]
    fn pairing_examples_and_symmetry() {
        // k = 2: rows are scalars and the pairing is a plain dot product.
        let p = PolyThetaVector::from_rows(
            2,
            1,
            vec![vec![Complex64::new(2.0, 0.0)], vec![Complex64::new(3.0, 0.0)]],
        )
        .unwrap();
        let q = PolyThetaVector::from_rows(
            2,
            1,
            vec![vec![Complex64::new(5.0, 0.0)], vec![Complex64::new(7.0, 0.0)]],
        )
        .unwrap();
        assert_eq!(p.pair(&q).unwrap(), Complex64::new(31.0, 0.0));

        // k = 4: <tau^2 theta_a, theta_a> = 1
        let a = PolyThetaVector::basis_vector(4, 1, 0, 2).unwrap();
        let b = PolyThetaVector::basis_vector(4, 1, 0, 0).unwrap();
        assert_eq!(a.pair(&b).unwrap(), Complex64::new(1.0, 0.0));

        // <P, Q> = (-1)^k <Q, P>, exactly for integer coefficients at the
        // dyadic-binomial degrees used here.
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(10);
        for k in [2u32, 3, 4] {
            let mk_int = |rng: &mut rand_chacha::ChaCha8Rng| {
                let rows = (0..2)
                    .map(|_| {
                        (0..k - 1)
                            .map(|_| {
                                Complex64::new(
                                    rng.random_range(-6..=6) as f64,
                                    rng.random_range(-6..=6) as f64,
                                )
                            })
                            .collect()
                    })
                    .collect();
                PolyThetaVector::from_rows(k, 1, rows).unwrap()
            };
            let p = mk_int(&mut rng);
            let q = mk_int(&mut rng);
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            assert_eq!(p.pair(&q).unwrap(), q.pair(&p).unwrap() * sign, "k={k}");
        }

        let mismatch = PolyThetaVector::zero(3, 1).unwrap();
        assert!(matches!(p.pair(&mismatch), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn json_round_trip_follows_the_documented_schema() {
        let mut v = PolyThetaVector::zero(4, 1).unwrap();
        v.set_coeff(0, 2, Complex64::new(-1.0, 0.5));
        v.set_coeff(1, 0, Complex64::new(1.0, 0.0));
        let text = v.to_json();
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["k"], 4);
        assert_eq!(value["m"], 1);
        assert_eq!(value["rows"][0]["nu"], 0);
        assert_eq!(value["rows"][0]["coeffs"][2][0], -1.0);
        let round = PolyThetaVector::from_json(&text).unwrap();
        assert_eq!(round, v);
    }
}
