//! SL2(Z) elements, words in the generators S and T, the Jacobi group
//! action on H x C, and coset-representative tables.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer unimodular 2x2 matrix (a b; c d) with ad - bc = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

/// One token of a word in the generators.
///
/// T-powers are stored as single tokens so word length stays O(log ||g||);
/// action matrices are built by multiplying per-token factors and error
/// grows with word length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Token {
    S,
    SInv,
    TPow(i64),
}

/// A word in S, T together with a sign: the token product equals the
/// decomposed element when `negate` is false and its negative otherwise.
/// -I is never absorbed silently; half-integral weights and multiplier
/// systems are sensitive to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word {
    pub tokens: Vec<Token>,
    pub negate: bool,
}

impl Token {
    pub fn matrix(&self) -> GroupElement {
        match self {
            Token::S => GroupElement { a: 0, b: -1, c: 1, d: 0 },
            Token::SInv => GroupElement { a: 0, b: 1, c: -1, d: 0 },
            Token::TPow(n) => GroupElement { a: 1, b: *n, c: 0, d: 1 },
        }
    }
}

impl Word {
    /// Exact integer product of the tokens, with the recorded sign applied.
    pub fn eval(&self) -> GroupElement {
        let mut g = GroupElement::identity();
        for t in &self.tokens {
            g = g.mul(&t.matrix());
        }
        if self.negate {
            g.neg()
        } else {
            g
        }
    }
}

impl GroupElement {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        let det = (a as i128) * (d as i128) - (b as i128) * (c as i128);
        if det != 1 {
            return Err(Error::InvalidArgument(format!(
                "matrix ({a},{b};{c},{d}) has determinant {det}, expected 1"
            )));
        }
        Ok(Self { a, b, c, d })
    }

    pub fn identity() -> Self {
        Self { a: 1, b: 0, c: 0, d: 1 }
    }

    pub fn s() -> Self {
        Self { a: 0, b: -1, c: 1, d: 0 }
    }

    pub fn t() -> Self {
        Self::t_pow(1)
    }

    pub fn t_pow(n: i64) -> Self {
        Self { a: 1, b: n, c: 0, d: 1 }
    }

    /// U = TS, the order-6 element entering the cocycle relations.
    pub fn u() -> Self {
        Self::t().mul(&Self::s())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            a: self.a * rhs.a + self.b * rhs.c,
            b: self.a * rhs.b + self.b * rhs.d,
            c: self.c * rhs.a + self.d * rhs.c,
            d: self.c * rhs.b + self.d * rhs.d,
        }
    }

    pub fn inverse(&self) -> Self {
        Self { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    pub fn neg(&self) -> Self {
        Self { a: -self.a, b: -self.b, c: -self.c, d: -self.d }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// j(g, tau) = c tau + d.
    pub fn automorphy_denominator(&self, tau: Complex64) -> Complex64 {
        Complex64::new(self.c as f64, 0.0) * tau + Complex64::new(self.d as f64, 0.0)
    }

    /// Moebius action on the upper half-plane.
    pub fn apply(&self, tau: Complex64) -> Complex64 {
        let num = Complex64::new(self.a as f64, 0.0) * tau + Complex64::new(self.b as f64, 0.0);
        num / self.automorphy_denominator(tau)
    }

    /// Euclidean word decomposition: returns a word w with eval(w) = g,
    /// the -I factor carried on the sign flag.
    ///
    /// Right factors S * T^n are peeled off while |c| shrinks strictly, so
    /// the loop terminates in O(log ||g||) steps and always succeeds for
    /// unimodular integer matrices.
    pub fn decompose(&self) -> Word {
        let mut h = *self;
        let mut suffix: Vec<Token> = Vec::new();
        while h.c != 0 {
            // n makes |d - n c| <= |c| / 2
            let n = div_round(h.d, h.c);
            // h * T^{-n}
            let h1 = h.mul(&GroupElement::t_pow(-n));
            // h1 * S^{-1}; then h = h2 * S * T^n
            let h2 = h1.mul(&Token::SInv.matrix());
            suffix.push(Token::TPow(n));
            suffix.push(Token::S);
            h = h2;
        }
        // h = (±1, b; 0, ±1)
        let (negate, shift) = if h.a == 1 { (false, h.b) } else { (true, -h.b) };
        let mut tokens = Vec::new();
        if shift != 0 {
            tokens.push(Token::TPow(shift));
        }
        // suffix was collected innermost-last; word order is prefix then
        // reversed suffix
        tokens.extend(suffix.into_iter().rev());
        let word = Word { tokens, negate };
        debug_assert_eq!(word.eval(), *self);
        word
    }
}

fn div_round(d: i64, c: i64) -> i64 {
    // nearest integer to d / c (ties toward zero are fine for Euclid)
    let q = d as f64 / c as f64;
    q.round() as i64
}

/// Element of the Jacobi group: an SL2(Z) part plus an integer lattice
/// translation (lambda, mu).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct JacobiGroupElement {
    pub gamma: GroupElement,
    pub lattice: (i64, i64),
}

impl JacobiGroupElement {
    pub fn new(gamma: GroupElement, lattice: (i64, i64)) -> Self {
        Self { gamma, lattice }
    }

    pub fn from_gamma(gamma: GroupElement) -> Self {
        Self { gamma, lattice: (0, 0) }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        // (g1, X1) (g2, X2) = (g1 g2, X1 g2 + X2) with row vectors X
        let g = self.gamma.mul(&rhs.gamma);
        let (l1, m1) = self.lattice;
        let (l2, m2) = rhs.lattice;
        let l = l1 * rhs.gamma.a + m1 * rhs.gamma.c + l2;
        let m = l1 * rhs.gamma.b + m1 * rhs.gamma.d + m2;
        Self { gamma: g, lattice: (l, m) }
    }

    /// The action (gamma, X) . (tau, z) = (gamma tau, (z + lambda tau + mu) / (c tau + d)).
    pub fn act(&self, tau: Complex64, z: Complex64) -> Result<(Complex64, Complex64)> {
        if tau.im <= 0.0 {
            return Err(Error::InvalidArgument(format!(
                "point must lie in the upper half-plane, got Im tau = {}",
                tau.im
            )));
        }
        let den = self.gamma.automorphy_denominator(tau);
        if den.norm() < 1e-14 {
            return Err(Error::DegeneratePoint);
        }
        let (lambda, mu) = self.lattice;
        let tau2 = self.gamma.apply(tau);
        let z2 = (z + Complex64::new(lambda as f64, 0.0) * tau + Complex64::new(mu as f64, 0.0)) / den;
        Ok((tau2, z2))
    }
}

#[derive(Serialize, Deserialize)]
struct CosetTableJson(Vec<[i64; 4]>);

/// Ordered right-coset representatives for Gamma \ Gamma_1.
///
/// The trivial table {I} covers Gamma = Gamma_1; larger tables are
/// user-supplied (no membership solver is built in) and loadable from a
/// JSON list of integer 4-tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    representatives: Vec<GroupElement>,
}

impl CosetTable {
    pub fn trivial() -> Self {
        Self { representatives: vec![GroupElement::identity()] }
    }

    pub fn from_representatives(reps: Vec<GroupElement>) -> Result<Self> {
        if reps.is_empty() {
            return Err(Error::InvalidArgument("coset table must be non-empty".into()));
        }
        Ok(Self { representatives: reps })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let parsed: CosetTableJson = serde_json::from_str(text)
            .map_err(|e| Error::InvalidArgument(format!("bad coset table JSON: {e}")))?;
        let reps = parsed
            .0
            .into_iter()
            .map(|[a, b, c, d]| GroupElement::new(a, b, c, d))
            .collect::<Result<Vec<_>>>()?;
        Self::from_representatives(reps)
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<[i64; 4]> =
            self.representatives.iter().map(|g| [g.a, g.b, g.c, g.d]).collect();
        serde_json::to_string(&CosetTableJson(rows)).expect("serializable")
    }

    pub fn representatives(&self) -> &[GroupElement] {
        &self.representatives
    }

    pub fn index(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.index() == 1 && self.representatives[0].is_identity()
    }
}
