//! Quaternion algebras `(a,b)_Q`, their regular representation objects, the
//! idempotent `e₋ ∈ ∨²B`, the `±` decomposition of the degree-two power and the
//! motive models `M_k` cut out by restricted Laplace and Dirac operators.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::check::MapCheck;
use crate::dirac::{build_pairings, DiracSuite, KernelReport};
use crate::error::{Error, Result};
use crate::exactnum::{Rat, RatMatrix};
use crate::gvect::{LinMor, SpaceObj};
use crate::laplace::KernelObject;
use crate::powers::{power_map, PowerKind, PowerSpace};
use crate::symalg::{split_idempotent, Splitting};

/// An element `x₀ + x₁i + x₂j + x₃k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quat(pub [Rat; 4]);

impl Quat {
    pub fn from_ints(c: [i64; 4]) -> Quat {
        Quat(c.map(Rat::from_int))
    }

    pub fn coords(&self) -> &[Rat; 4] {
        &self.0
    }

    fn scaled(&self, c: &Rat) -> Quat {
        Quat(self.0.clone().map(|x| &x * c))
    }

    fn plus(&self, other: &Quat) -> Quat {
        Quat([0, 1, 2, 3].map(|k| &self.0[k] + &other.0[k]))
    }
}

impl fmt::Debug for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}i + {}j + {}k", self.0[0], self.0[1], self.0[2], self.0[3])
    }
}

/// The algebra with `i² = a`, `j² = b`, `k = ij = -ji`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuatAlgebra {
    a: Rat,
    b: Rat,
}

pub const BASIS_LABELS: [&str; 4] = ["1", "i", "j", "k"];

pub fn quat_algebra(a: Rat, b: Rat) -> Result<QuatAlgebra> {
    QuatAlgebra::new(a, b)
}

impl QuatAlgebra {
    pub fn new(a: Rat, b: Rat) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::Precondition("quaternion parameters must be nonzero".into()));
        }
        Ok(QuatAlgebra { a, b })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Self::new(Rat::from_int(a), Rat::from_int(b))
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn one(&self) -> Quat {
        Quat::from_ints([1, 0, 0, 0])
    }

    pub fn basis(&self, k: usize) -> Quat {
        let mut c = [0; 4];
        c[k] = 1;
        Quat::from_ints(c)
    }

    pub fn mul(&self, x: &Quat, y: &Quat) -> Quat {
        let (a, b) = (&self.a, &self.b);
        let ab = a * b;
        let [x0, x1, x2, x3] = &x.0;
        let [y0, y1, y2, y3] = &y.0;
        Quat([
            x0 * y0 + a * &(x1 * y1) + b * &(x2 * y2) - &ab * &(x3 * y3),
            x0 * y1 + x1 * y0 - b * &(x2 * y3) + b * &(x3 * y2),
            x0 * y2 + x2 * y0 + a * &(x1 * y3) - a * &(x3 * y1),
            x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
        ])
    }

    /// The main involution `x ↦ x^ι`.
    pub fn conj(&self, x: &Quat) -> Quat {
        let [x0, x1, x2, x3] = &x.0;
        Quat([x0.clone(), -x1, -x2, -x3])
    }

    pub fn trace(&self, x: &Quat) -> Rat {
        &x.0[0] * &Rat::from_int(2)
    }

    pub fn norm(&self, x: &Quat) -> Rat {
        let [x0, x1, x2, x3] = &x.0;
        x0 * x0 - &self.a * &(x1 * x1) - &self.b * &(x2 * x2) + &(&self.a * &self.b) * &(x3 * x3)
    }

    pub fn is_unit(&self, x: &Quat) -> bool {
        !self.norm(x).is_zero()
    }

    /// Matrix of `y ↦ xy` on the basis `1, i, j, k`.
    pub fn left_matrix(&self, x: &Quat) -> RatMatrix {
        let cols: Vec<Quat> = (0..4).map(|c| self.mul(x, &self.basis(c))).collect();
        RatMatrix::from_fn(4, 4, |r, c| cols[c].0[r].clone())
    }

    /// Matrix of `y ↦ yx`.
    pub fn right_matrix(&self, x: &Quat) -> RatMatrix {
        let cols: Vec<Quat> = (0..4).map(|c| self.mul(&self.basis(c), x)).collect();
        RatMatrix::from_fn(4, 4, |r, c| cols[c].0[r].clone())
    }

    /// Matrix of `x ↦ b x b^ι` on `B`.
    pub fn conjugation_matrix(&self, b: &Quat) -> RatMatrix {
        let bi = self.conj(b);
        let cols: Vec<Quat> = (0..4).map(|c| self.mul(&self.mul(b, &self.basis(c)), &bi)).collect();
        RatMatrix::from_fn(4, 4, |r, c| cols[c].0[r].clone())
    }

    /// Whether `B ≅ M₂(Q)`, decided by the local Hilbert symbols of `(a, b)`.
    pub fn is_split(&self) -> Result<bool> {
        Ok(ramified_places(&self.a, &self.b)?.is_empty())
    }

    /// Invertible elements with small coordinates, in a fixed order that
    /// reaches every imaginary direction early.
    pub fn sample_units(&self, count: usize) -> Vec<Quat> {
        let lead = [[2, 1, 0, 0], [2, 0, 1, 0], [2, 0, 0, 1], [3, 1, 1, 1], [1, 2, -1, 1]];
        let vals = [0i64, 1, -1, 2];
        let mut grid = Vec::new();
        for c0 in vals {
            for c1 in vals {
                for c2 in vals {
                    grid.extend(vals.map(|c3| [c0 + 1, c1, c2, c3]));
                }
            }
        }
        let mut out: Vec<Quat> = Vec::new();
        for c in lead.into_iter().chain(grid) {
            let x = Quat::from_ints(c);
            if self.is_unit(&x) && !out.contains(&x) {
                out.push(x);
                if out.len() == count {
                    break;
                }
            }
        }
        out
    }
}

/// Square-free integer in the square class of a nonzero rational.
fn square_class(x: &Rat) -> BigInt {
    x.numer() * x.denom()
}

fn small_factor(n: &BigInt) -> Result<Vec<(u64, u32)>> {
    let mut n = n.abs().to_u64().ok_or_else(|| Error::Precondition("parameter too large to factor".into()))?;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(out)
}

fn valuation(n: &BigInt, p: u64) -> (u32, BigInt) {
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while !n.is_zero() && (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    (v, n)
}

fn legendre(u: &BigInt, p: u64) -> i32 {
    let p = BigInt::from(p);
    let r = u.mod_floor(&p).modpow(&((&p - 1u32) / 2u32), &p);
    if r.is_one() {
        1
    } else {
        -1
    }
}

fn mod8(u: &BigInt) -> u32 {
    u.mod_floor(&BigInt::from(8)).to_u32().expect("residue")
}

/// Hilbert symbol `(a, b)_p` for nonzero integers and a prime `p`, or the real place when `p` is `None`.
pub fn hilbert_symbol(a: &BigInt, b: &BigInt, p: Option<u64>) -> i32 {
    let Some(p) = p else {
        return if a.is_negative() && b.is_negative() { -1 } else { 1 };
    };
    let (alpha, u) = valuation(a, p);
    let (beta, v) = valuation(b, p);
    if p == 2 {
        let eps = |x: &BigInt| u32::from(mod8(x) % 4 == 3);
        let omega = |x: &BigInt| u32::from(matches!(mod8(x), 3 | 5));
        let e = eps(&u) * eps(&v) + alpha * omega(&v) + beta * omega(&u);
        return if e % 2 == 0 { 1 } else { -1 };
    }
    let mut s = if (alpha * beta) % 2 == 1 && p % 4 == 3 { -1 } else { 1 };
    if beta % 2 == 1 {
        s *= legendre(&u, p);
    }
    if alpha % 2 == 1 {
        s *= legendre(&v, p);
    }
    s
}

/// Places where `(a, b)_Q` does not split; `None` stands for the real place.
pub fn ramified_places(a: &Rat, b: &Rat) -> Result<Vec<Option<u64>>> {
    let (x, y) = (square_class(a), square_class(b));
    let mut primes: Vec<u64> = vec![2];
    for (p, _) in small_factor(&x)?.into_iter().chain(small_factor(&y)?) {
        if !primes.contains(&p) {
            primes.push(p);
        }
    }
    primes.sort_unstable();
    let mut out = Vec::new();
    if hilbert_symbol(&x, &y, None) == -1 {
        out.push(None);
    }
    for p in primes {
        if hilbert_symbol(&x, &y, Some(p)) == -1 {
            out.push(Some(p));
        }
    }
    Ok(out)
}

/// A representation `θ: B → End(V)` on a four-dimensional object.
#[derive(Clone, Debug)]
pub struct QuatObject {
    algebra: QuatAlgebra,
    space: SpaceObj,
    kind: PowerKind,
}

/// `B` itself, with `θ(b)` right multiplication by `b^ι` (a unital homomorphism
/// commuting with the left multiplication action of `B^×`).
pub fn regular_object(alg: &QuatAlgebra) -> QuatObject {
    QuatObject::on_parity(alg, 0)
}

/// The same representation on an all-odd four-dimensional object.
pub fn odd_regular_object(alg: &QuatAlgebra) -> QuatObject {
    QuatObject::on_parity(alg, 1)
}

impl QuatObject {
    fn on_parity(alg: &QuatAlgebra, parity: u8) -> QuatObject {
        let (name, kind) = if parity == 0 { ("B", PowerKind::Alt) } else { ("ΠB", PowerKind::Sym) };
        let labels = BASIS_LABELS.iter().map(|s| s.to_string()).collect();
        let space = SpaceObj::new(name, labels, vec![parity; 4]).expect("distinct labels");
        QuatObject { algebra: alg.clone(), space, kind }
    }

    pub fn algebra(&self) -> &QuatAlgebra {
        &self.algebra
    }

    /// Same `θ` on the parity-shifted space, with the other flavor.
    pub fn parity_shifted(&self) -> QuatObject {
        QuatObject { algebra: self.algebra.clone(), space: self.space.parity_shifted(), kind: self.kind.other() }
    }

    pub fn space(&self) -> &SpaceObj {
        &self.space
    }

    /// `Alt` for an alternating quaternionic object, `Sym` for a symmetric one.
    pub fn kind(&self) -> PowerKind {
        self.kind
    }

    fn mor(&self, m: RatMatrix) -> LinMor {
        LinMor::new(self.space.clone(), self.space.clone(), m).expect("4x4 endomorphism")
    }

    pub fn theta(&self, x: &Quat) -> LinMor {
        self.mor(self.algebra.right_matrix(&self.algebra.conj(x)))
    }

    /// The `B^×` action on `V`: left multiplication.
    pub fn act(&self, x: &Quat) -> LinMor {
        self.mor(self.algebra.left_matrix(x))
    }

    /// `θ(1) = 1` and `θ(xy) = θ(x)θ(y)` on basis pairs.
    pub fn verify_homomorphism(&self) -> Vec<MapCheck> {
        let alg = &self.algebra;
        let mut out = vec![MapCheck::compare("θ(1) = 1", &self.theta(&alg.one()), &LinMor::identity(&self.space))];
        for (p, lp) in BASIS_LABELS.iter().enumerate() {
            for (q, lq) in BASIS_LABELS.iter().enumerate() {
                let (x, y) = (alg.basis(p), alg.basis(q));
                let lhs = self.theta(&alg.mul(&x, &y));
                let rhs = self.theta(&x).compose(&self.theta(&y)).expect("endomorphisms");
                out.push(MapCheck::compare(format!("θ({lp}{lq})"), &lhs, &rhs));
            }
        }
        out
    }

    /// `θ⊗θ(s)` on `V⊗V` for `s ∈ B⊗B` given by its 16 coordinates.
    fn theta_tensor(&self, s: &[Rat]) -> LinMor {
        let vv = self.space.tensor(&self.space);
        let mut acc = LinMor::zero(&vv, &vv);
        for p in 0..4 {
            for q in 0..4 {
                let c = &s[p * 4 + q];
                if !c.is_zero() {
                    let term = self.theta(&self.algebra.basis(p)).tensor(&self.theta(&self.algebra.basis(q)));
                    acc = acc.add(&term.scale(c)).expect("same shape");
                }
            }
        }
        acc
    }

    /// `θ⊗θ(s)` compressed to the degree-two power.
    pub fn theta_on_square(&self, s: &[Rat]) -> Result<LinMor> {
        let sq = PowerSpace::new(&self.space, 2, self.kind);
        sq.proj().compose(&self.theta_tensor(s))?.compose(&sq.incl())
    }
}

/// `∨²B ⊂ B⊗B` with the character `χ(b₁∨b₂) = Tr(b₁^ι b₂)/2` and the idempotent `e₋`.
#[derive(Clone, Debug)]
pub struct MinusIdempotent {
    /// Coordinates of `e₋` in `B⊗B`, index `4p + q` for `e_p ⊗ e_q`.
    pub element: Vec<Rat>,
    /// Coordinates of `e₋` on the basis `e_p ∨ e_q`, `p ≤ q`.
    pub sym_coords: Vec<Rat>,
    /// Dimensions of the images of `∨²B` in `End(B₀)` and `End(Q·1)`.
    pub block_ranks: (usize, usize),
    pub idempotent: bool,
    pub chi_multiplicative: bool,
}

fn tensor_mul(alg: &QuatAlgebra, s: &[Rat], t: &[Rat]) -> Vec<Rat> {
    let prods: Vec<Vec<Quat>> = (0..4).map(|p| (0..4).map(|q| alg.mul(&alg.basis(p), &alg.basis(q))).collect()).collect();
    let mut out = vec![Rat::zero(); 16];
    for (ps, sv) in s.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (pt, tv) in t.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            let c = sv * tv;
            let (left, right) = (&prods[ps / 4][pt / 4], &prods[ps % 4][pt % 4]);
            for r1 in 0..4 {
                if left.0[r1].is_zero() {
                    continue;
                }
                for r2 in 0..4 {
                    if !right.0[r2].is_zero() {
                        out[r1 * 4 + r2] += &c * &(&left.0[r1] * &right.0[r2]);
                    }
                }
            }
        }
    }
    out
}

/// Basis `e_p ∨ e_q = (e_p⊗e_q + e_q⊗e_p)/2`, `p ≤ q`, of `∨²B`.
pub fn sym_square_basis() -> Vec<Vec<Rat>> {
    let half = Rat::new(1, 2).expect("nonzero");
    let mut out = Vec::new();
    for p in 0..4 {
        for q in p..4 {
            let mut v = vec![Rat::zero(); 16];
            v[p * 4 + q] += half.clone();
            v[q * 4 + p] += half.clone();
            out.push(v);
        }
    }
    out
}

/// `χ` extended linearly to `B⊗B`.
pub fn chi(alg: &QuatAlgebra, s: &[Rat]) -> Rat {
    let half = Rat::new(1, 2).expect("nonzero");
    let mut acc = Rat::zero();
    for p in 0..4 {
        for q in 0..4 {
            if !s[p * 4 + q].is_zero() {
                let t = alg.trace(&alg.mul(&alg.conj(&alg.basis(p)), &alg.basis(q)));
                acc += &s[p * 4 + q] * &(&t * &half);
            }
        }
    }
    acc
}

/// Matrix of the action `(b₁⊗b₂)·x = b₁ x b₂^ι` of `s ∈ B⊗B` on `W = B`.
pub fn w_action(alg: &QuatAlgebra, s: &[Rat]) -> RatMatrix {
    let mut m = RatMatrix::zeros(4, 4);
    for p in 0..4 {
        for q in 0..4 {
            let c = &s[p * 4 + q];
            if c.is_zero() {
                continue;
            }
            let (bp, bq) = (alg.basis(p), alg.conj(&alg.basis(q)));
            for col in 0..4 {
                let img = alg.mul(&alg.mul(&bp, &alg.basis(col)), &bq);
                for row in 0..4 {
                    let v = m.get(row, col) + &(c * &img.0[row]);
                    m.set(row, col, v);
                }
            }
        }
    }
    m
}

/// Solve `s·e = χ(s)e` over the basis of `∨²B`, normalised by `χ(e) = 1`.
pub fn minus_idempotent(alg: &QuatAlgebra) -> Result<MinusIdempotent> {
    let basis = sym_square_basis();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for s in &basis {
        let c = chi(alg, s);
        let cols: Vec<Vec<Rat>> = basis
            .iter()
            .map(|e| {
                let mut se = tensor_mul(alg, s, e);
                for (x, y) in se.iter_mut().zip(e) {
                    *x -= &(&c * y);
                }
                se
            })
            .collect();
        for r in 0..16 {
            rows.push(cols.iter().map(|c| c[r].clone()).collect());
        }
    }
    let system = RatMatrix::from_rows(&rows)?;
    let ker = system.kernel_matrix();
    if ker.cols() != 1 {
        return Err(Error::Precondition(format!("χ-eigenspace of ∨²B has dimension {}", ker.cols())));
    }
    let coords = ker.column(0);
    let mut element = vec![Rat::zero(); 16];
    for (c, b) in coords.iter().zip(&basis) {
        for (x, y) in element.iter_mut().zip(b) {
            *x += &(c * y);
        }
    }
    let scale = chi(alg, &element).recip().ok_or_else(|| Error::Precondition("χ vanishes on the eigenvector".into()))?;
    let element: Vec<Rat> = element.iter().map(|x| x * &scale).collect();
    let sym_coords: Vec<Rat> = coords.iter().map(|x| x * &scale).collect();
    let idempotent = tensor_mul(alg, &element, &element) == element;

    let mut chi_multiplicative = true;
    for s in &basis {
        for t in &basis {
            chi_multiplicative &= chi(alg, &tensor_mul(alg, s, t)) == &chi(alg, s) * &chi(alg, t);
        }
    }

    // ∨²B preserves B₀ = span(i,j,k) and Q·1 inside W; rank of each block of the image
    let mut b0_block = Vec::new();
    let mut one_block = Vec::new();
    for s in &basis {
        let m = w_action(alg, s);
        b0_block.push((1..4).flat_map(|r| (1..4).map(move |c| (r, c))).map(|(r, c)| m.get(r, c).clone()).collect::<Vec<_>>());
        one_block.push(vec![m.get(0, 0).clone()]);
    }
    let block_ranks = (RatMatrix::from_rows(&b0_block)?.rank(), RatMatrix::from_rows(&one_block)?.rank());
    Ok(MinusIdempotent { element, sym_coords, block_ranks, idempotent, chi_multiplicative })
}

/// `A₂ = X₊ ⊕ X₋` with `X₋ = Im θ⊗θ(e₋)`.
#[derive(Clone, Debug)]
pub struct PlusMinus {
    pub square: SpaceObj,
    /// `θ⊗θ(e₋)` on the degree-two power.
    pub projector: LinMor,
    pub plus: Splitting,
    pub minus: Splitting,
}

pub fn split_pm(q: &QuatObject) -> Result<PlusMinus> {
    let e = minus_idempotent(q.algebra())?;
    let projector = q.theta_on_square(&e.element)?;
    let square = projector.dom().clone();
    let minus = split_idempotent(&projector, "X₋")?;
    let plus = split_idempotent(&LinMor::identity(&square).sub(&projector)?, "X₊")?;
    Ok(PlusMinus { square, projector, plus, minus })
}

impl PlusMinus {
    /// `θ⊗θ(s)` restricted to `X₋` equals `χ(s)` for every basis element `s` of `∨²B`.
    pub fn chi_checks(&self, q: &QuatObject) -> Result<Vec<MapCheck>> {
        let x = self.minus.image.clone();
        sym_square_basis()
            .iter()
            .enumerate()
            .map(|(k, s)| {
                let act = self.minus.proj.compose(&q.theta_on_square(s)?)?.compose(&self.minus.incl)?;
                let on_x = q.theta_on_square(s)?.compose(&self.minus.incl)?;
                let stable = self.minus.incl.compose(&act)?;
                let c = chi(q.algebra(), s);
                let mut check = MapCheck::compare(format!("χ on basis {k}"), &act, &LinMor::scalar_identity(&x, &c));
                if on_x.mat() != stable.mat() {
                    check = MapCheck::compare(format!("X₋ stable under basis {k}"), &on_x, &stable);
                }
                Ok(check)
            })
            .collect()
    }

    /// `θ(b)⊗θ(b)` acts on `X₋` by `Nr(b)`.
    pub fn norm_checks(&self, q: &QuatObject, samples: &[Quat]) -> Result<Vec<MapCheck>> {
        let x = self.minus.image.clone();
        samples
            .iter()
            .map(|b| {
                let bb: Vec<Rat> = (0..16).map(|k| &b.0[k / 4] * &b.0[k % 4]).collect();
                let act = self.minus.proj.compose(&q.theta_on_square(&bb)?)?.compose(&self.minus.incl)?;
                let nr = q.algebra().norm(b);
                Ok(MapCheck::compare(format!("Nr on X₋ for {b:?}"), &act, &LinMor::scalar_identity(&x, &nr)))
            })
            .collect()
    }
}

/// Basis of `{T : T·A = C·T for every pair (A, C)}` with `T: dom A → dom C`.
pub fn intertwiners(pairs: &[(RatMatrix, RatMatrix)]) -> Result<Vec<RatMatrix>> {
    let Some((a0, c0)) = pairs.first() else {
        return Err(Error::Precondition("no actions to intertwine".into()));
    };
    let (m, n) = (c0.rows(), a0.rows());
    let mut blocks: Option<RatMatrix> = None;
    for (a, c) in pairs {
        // row-major vec(T): vec(TA) = (I ⊗ Aᵀ) vec T, vec(CT) = (C ⊗ I) vec T
        let eq = RatMatrix::identity(m).kron(&a.transpose()).sub(&c.kron(&RatMatrix::identity(n)))?;
        blocks = Some(match blocks {
            None => eq,
            Some(b) => b.vstack(&eq)?,
        });
        let (red, pivots) = blocks.as_ref().expect("just set").rref();
        blocks = Some(red.select_rows(&(0..pivots.len()).collect::<Vec<_>>()));
    }
    let ker = blocks.expect("nonempty").kernel_matrix();
    (0..ker.cols()).map(|k| RatMatrix::from_vec(m, n, ker.column(k))).collect()
}

/// The `B^×`-actions on the objects built from a quaternionic object.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    V,
    VDual,
    Line,
    Square,
    Minus,
    Plus,
    MinusPower(usize),
}

/// A quaternionic object with its `±` splitting and the suite restricted to `X₋`.
#[derive(Clone, Debug)]
pub struct MotiveSuite {
    pub object: QuatObject,
    pub pm: PlusMinus,
    pub full: DiracSuite,
    pub minus: DiracSuite,
}

/// One motive model `M_k`.
#[derive(Clone, Debug)]
pub struct MotiveModel {
    pub weight: usize,
    pub ambient: SpaceObj,
    pub projector: LinMor,
    pub incl: LinMor,
    pub proj: LinMor,
    /// Kernel data when `M_k` is cut out by an operator (`k ≥ 3`).
    pub kernel: Option<KernelObject>,
    /// Factors of the ambient object, for the `B^×`-action.
    pub factors: Vec<Factor>,
}

impl MotiveModel {
    pub fn dim(&self) -> usize {
        self.incl.dom().dim()
    }

    pub fn matches_nullspace(&self) -> bool {
        self.kernel.as_ref().is_none_or(|k| k.matches_nullspace)
    }
}

/// Weight multiplicities of the split torus on a motive model.
#[derive(Clone, Debug)]
pub struct WeightReport {
    pub weight: usize,
    pub dim: usize,
    /// `(w, multiplicity)` for `w = -k..=k`, nonzero multiplicities only.
    pub measured: Vec<(i64, usize)>,
    pub expected: Vec<(i64, usize)>,
}

impl WeightReport {
    pub fn pass(&self) -> bool {
        self.measured == self.expected
    }
}

/// The commutant of `B^×` on a motive model, as a quaternion algebra `(α, β)_Q`.
#[derive(Clone, Debug)]
pub struct IntertwinerAlgebra {
    pub dim: usize,
    pub center_dim: usize,
    pub alpha: Option<Rat>,
    pub beta: Option<Rat>,
    pub ramified: Vec<Option<u64>>,
    /// An idempotent of reduced rank one, when one exists.
    pub idempotent: Option<RatMatrix>,
}

impl IntertwinerAlgebra {
    pub fn splits(&self) -> bool {
        self.idempotent.is_some()
    }
}

pub fn motive_suite(q: &QuatObject) -> Result<MotiveSuite> {
    let pm = split_pm(q)?;
    let full = build_pairings(q.space(), 2, q.kind())?;
    let minus = full.restricted(&pm.minus.incl)?;
    Ok(MotiveSuite { object: q.clone(), pm, full, minus })
}

impl MotiveSuite {
    pub fn alg(&self) -> &QuatAlgebra {
        self.object.algebra()
    }

    fn square_action(&self, b: &Quat) -> Result<LinMor> {
        power_map(&self.object.act(b), 2, self.object.kind())
    }

    /// The `B^×`-action of `b` on one factor.
    pub fn factor_action(&self, b: &Quat, f: Factor) -> Result<LinMor> {
        let v = self.object.act(b);
        Ok(match f {
            Factor::V => v,
            Factor::VDual => v.inverse()?.transpose(),
            Factor::Line => {
                let top = power_map(&v, 4, self.object.kind())?;
                let l = self.full.line();
                LinMor::new(l.clone(), l, top.into_mat())?
            }
            Factor::Square => self.square_action(b)?,
            Factor::Minus => self.pm.minus.proj.compose(&self.square_action(b)?)?.compose(&self.pm.minus.incl)?,
            Factor::Plus => self.pm.plus.proj.compose(&self.square_action(b)?)?.compose(&self.pm.plus.incl)?,
            Factor::MinusPower(n) => power_map(&self.factor_action(b, Factor::Minus)?, n, PowerKind::Sym)?,
        })
    }

    /// Action on a tensor product of factors (matrix only).
    pub fn action(&self, b: &Quat, factors: &[Factor]) -> Result<RatMatrix> {
        let mut acc = RatMatrix::identity(1);
        for f in factors {
            acc = acc.kron(self.factor_action(b, *f)?.mat());
        }
        Ok(acc)
    }

    /// `op ∘ ρ_dom(b) = ρ_cod(b) ∘ op` for every sample.
    pub fn equivariance_check(&self, op: &LinMor, dom: &[Factor], cod: &[Factor], samples: &[Quat]) -> Result<bool> {
        for b in samples {
            let (a, c) = (self.action(b, dom)?, self.action(b, cod)?);
            if a.rows() != op.dom().dim() || c.rows() != op.cod().dim() {
                return Err(Error::Shape("action factors do not match the operator".into()));
            }
            if op.mat().mul(&a)? != c.mul(op.mat())? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn report_model(&self, weight: usize, r: KernelReport, factors: Vec<Factor>) -> MotiveModel {
        let k = r.kernel;
        MotiveModel {
            weight,
            ambient: k.projector.dom().clone(),
            projector: k.projector.clone(),
            incl: k.incl.clone(),
            proj: k.proj.clone(),
            kernel: Some(k),
            factors,
        }
    }

    /// `M_k`: `V` for `k = 1`, `X₋` for `k = 2`, the kernel of `Δ₋ⁿ` for `k = 2n ≥ 4`
    /// and of `∂₋ⁿ` for `k = 2n+1 ≥ 3`.
    pub fn motive_model(&self, k: usize) -> Result<MotiveModel> {
        let trivial = |x: &SpaceObj, factors: Vec<Factor>| MotiveModel {
            weight: k,
            ambient: x.clone(),
            projector: LinMor::identity(x),
            incl: LinMor::identity(x),
            proj: LinMor::identity(x),
            kernel: None,
            factors,
        };
        match k {
            0 => Err(Error::Degree("motive models start in weight 1".into())),
            1 => Ok(trivial(self.object.space(), vec![Factor::V])),
            2 => Ok(trivial(&self.pm.minus.image, vec![Factor::Minus])),
            _ if k.is_multiple_of(2) => Ok(self.report_model(k, self.minus.laplace_kernel(k / 2)?, vec![Factor::MinusPower(k / 2)])),
            _ => Ok(self.report_model(k, self.minus.d_kernel(k / 2)?, vec![Factor::MinusPower(k / 2), Factor::V])),
        }
    }

    /// Restricted operators commute with the injections induced by `i₋`.
    pub fn restriction_checks(&self, n: usize) -> Result<Vec<MapCheck>> {
        let flavor = self.full.flavor();
        let incl = &self.pm.minus.incl;
        let mut out = Vec::new();
        if n >= 2 {
            let full = self.full.quadruple_on(n, flavor)?.laplace.expect("n ≥ 2");
            let restricted = self.minus.quadruple_on(n, flavor)?.laplace.expect("n ≥ 2");
            let lhs = full.compose(&power_map(incl, n, flavor)?)?;
            let l = self.full.line();
            let rhs = power_map(incl, n - 2, flavor)?.tensor(&LinMor::identity(&l)).compose_reassociated(&restricted)?;
            out.push(MapCheck::compare(format!("Δ restricts n={n}"), &lhs, &rhs.retag(lhs.dom(), lhs.cod())?));
        }
        let full = self.full.quadruple_on(n, flavor)?.d_low;
        let restricted = self.minus.quadruple_on(n, flavor)?.d_low;
        let v = self.full.v().clone();
        let lhs = full.compose_reassociated(&power_map(incl, n, flavor)?.tensor(&LinMor::identity(&v)))?;
        let tail = LinMor::identity(restricted.cod()).retag(restricted.cod(), restricted.cod())?;
        let lower = power_map(incl, n - 1, flavor)?;
        let rest = SpaceObj::tensor_all(&[&self.full.v_dual(), &self.full.line()]);
        let rhs = lower.tensor(&LinMor::identity(&rest)).compose_reassociated(&tail.compose(&restricted)?)?;
        out.push(MapCheck::compare(format!("∂ restricts n={n}"), &lhs, &rhs.retag(lhs.dom(), lhs.cod())?));
        Ok(out)
    }

    /// Action of `b` on `M_k`, read off through the model's inclusion.
    pub fn model_action(&self, model: &MotiveModel, b: &Quat) -> Result<RatMatrix> {
        let full = self.action(b, &model.factors)?;
        let moved = full.mul(model.incl.mat())?;
        let restricted = model.proj.mat().mul(&moved)?;
        if model.incl.mat().mul(&restricted)? != moved {
            return Err(Error::Precondition(format!("M_{} is not stable under {b:?}", model.weight)));
        }
        Ok(restricted)
    }

    /// An explicit `B^×`-equivariant isomorphism `X₋ → B₀`, if the intertwiner space is a line of isomorphisms.
    pub fn minus_to_trace_zero(&self, samples: &[Quat]) -> Result<Option<RatMatrix>> {
        let mut pairs = Vec::new();
        for b in samples {
            let on_b = self.alg().conjugation_matrix(b);
            let b0 = RatMatrix::from_fn(3, 3, |r, c| on_b.get(r + 1, c + 1).clone());
            pairs.push((self.factor_action(b, Factor::Minus)?.into_mat(), b0));
        }
        let basis = intertwiners(&pairs)?;
        Ok(match basis.as_slice() {
            [t] if t.rank() == 3 => Some(t.clone()),
            _ => None,
        })
    }

    /// Commutant of the `B^×`-action on `M_k`. It is solved against a few
    /// generic units and then certified against a larger sample.
    pub fn intertwiner_algebra(&self, model: &MotiveModel) -> Result<IntertwinerAlgebra> {
        let d = model.dim();
        let units = self.alg().sample_units(16);
        let mats = units.iter().map(|b| self.model_action(model, b)).collect::<Result<Vec<_>>>()?;
        let basis = intertwiners(&mats[..5].iter().map(|m| (m.clone(), m.clone())).collect::<Vec<_>>())?;
        for t in &basis {
            for m in &mats[5..] {
                if t.mul(m)? != m.mul(t)? {
                    return Err(Error::Precondition("commutant of the generating units is too large".into()));
                }
            }
        }
        let dim = basis.len();
        let center_dim = span_intersection_dim(&basis, &intertwiners(&basis.iter().map(|m| (m.clone(), m.clone())).collect::<Vec<_>>())?)?;
        let mut out = IntertwinerAlgebra { dim, center_dim, alpha: None, beta: None, ramified: Vec::new(), idempotent: None };
        if dim != 4 || center_dim != 1 {
            return Ok(out);
        }
        let Some((i, j, alpha, beta)) = normal_form(&basis, d)? else {
            return Ok(out);
        };
        out.ramified = ramified_places(&alpha, &beta)?;
        if out.ramified.is_empty() {
            out.idempotent = find_idempotent(&i, &j, &alpha, &beta, d)?;
        }
        out.alpha = Some(alpha);
        out.beta = Some(beta);
        Ok(out)
    }

    /// Torus weights of `M_k` for a split algebra, using `t = (u+u⁻¹)/2 + (u-u⁻¹)/2·i`
    /// with `u = 2`, which is `diag(u, u⁻¹)` under `e₁₁ = (1+i)/2`.
    pub fn torus_weights(&self, model: &MotiveModel) -> Result<WeightReport> {
        if !self.alg().a().is_one() {
            return Err(Error::Precondition("torus weights need a = 1, so that (1+i)/2 is idempotent".into()));
        }
        let r = self.model_action(model, &split_torus())?;
        let k = model.weight as i64;
        let mut measured = Vec::new();
        for w in -k..=k {
            let ev = Rat::from_int(2).pow(w as i32).expect("nonzero");
            let shifted = r.sub(&RatMatrix::scalar_identity(r.rows(), &ev))?;
            let m = r.rows() - shifted.rank();
            if m > 0 {
                measured.push((w, m));
            }
        }
        let copies = if k % 2 == 1 { 2 } else { 1 };
        let expected = (-k..=k).step_by(2).map(|w| (w, copies)).collect();
        Ok(WeightReport { weight: model.weight, dim: model.dim(), measured, expected })
    }
}

/// Torus weights of `M_{2n}` and `M_{2n+1}` for `(1,1)`, read through the
/// idempotent `e₁₁ = (1+i)/2`.
#[derive(Clone, Debug)]
pub struct SplitCompare {
    pub n: usize,
    pub e11: Quat,
    pub torus: Quat,
    pub even: WeightReport,
    pub odd: WeightReport,
}

impl SplitCompare {
    pub fn pass(&self) -> bool {
        self.even.pass() && self.odd.pass()
    }
}

/// `(u+u⁻¹)/2 + (u-u⁻¹)/2·i` with `u = 2`.
fn split_torus() -> Quat {
    let q = |n, d| Rat::new(n, d).expect("nonzero denominator");
    Quat([q(5, 4), q(3, 4), Rat::zero(), Rat::zero()])
}

/// Builds the split suite on the regular object of `(1,1)`.
pub fn split_suite() -> Result<MotiveSuite> {
    motive_suite(&regular_object(&QuatAlgebra::from_ints(1, 1)?))
}

pub fn split_compare(suite: &MotiveSuite, n: usize) -> Result<SplitCompare> {
    let alg = suite.alg();
    let half = Rat::new(1, 2)?;
    let e11 = alg.one().plus(&alg.basis(1)).scaled(&half);
    if alg.mul(&e11, &e11) != e11 {
        return Err(Error::Precondition("(1+i)/2 is not idempotent".into()));
    }
    let torus = split_torus();
    let even = suite.torus_weights(&suite.motive_model(2 * n)?)?;
    let odd = suite.torus_weights(&suite.motive_model(2 * n + 1)?)?;
    Ok(SplitCompare { n, e11, torus, even, odd })
}

fn span_rank(mats: &[&RatMatrix]) -> Result<usize> {
    if mats.is_empty() {
        return Ok(0);
    }
    Ok(RatMatrix::from_rows(&mats.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>())?.rank())
}

fn span_intersection_dim(a: &[RatMatrix], b: &[RatMatrix]) -> Result<usize> {
    let both: Vec<&RatMatrix> = a.iter().chain(b).collect();
    Ok(span_rank(&a.iter().collect::<Vec<_>>())? + span_rank(&b.iter().collect::<Vec<_>>())? - span_rank(&both)?)
}

fn scalar_of(m: &RatMatrix) -> Option<Rat> {
    let c = m.get(0, 0).clone();
    (*m == RatMatrix::scalar_identity(m.rows(), &c)).then_some(c)
}

/// Trace-zero generators `I, J` with `I² = α`, `J² = β`, `IJ = -JI`.
fn normal_form(basis: &[RatMatrix], d: usize) -> Result<Option<(RatMatrix, RatMatrix, Rat, Rat)>> {
    let dim = Rat::from_int(d as i64);
    let pure: Vec<RatMatrix> = basis
        .iter()
        .map(|m| {
            let tr = m.trace().expect("square");
            m.sub(&RatMatrix::scalar_identity(d, &(&tr / &dim))).expect("same shape")
        })
        .filter(|m| !m.is_zero())
        .collect();
    let Some((i, alpha)) = pure.iter().find_map(|m| {
        let sq = m.mul(m).ok()?;
        scalar_of(&sq).filter(|c| !c.is_zero()).map(|c| (m.clone(), c))
    }) else {
        return Ok(None);
    };
    for y in &pure {
        let anti = i.mul(y)?.add(&y.mul(&i)?)?;
        let Some(s) = scalar_of(&anti) else { continue };
        let j = y.sub(&i.scale(&(&s / &(&alpha * &Rat::from_int(2)))))?;
        if j.is_zero() {
            continue;
        }
        if let Some(beta) = scalar_of(&j.mul(&j)?).filter(|c| !c.is_zero()) {
            return Ok(Some((i, j, alpha, beta)));
        }
    }
    Ok(None)
}

/// `e = (1 + x)/2` with `x = (pI + qJ + rIJ)/s` and `x² = 1`, from a bounded search.
fn find_idempotent(i: &RatMatrix, j: &RatMatrix, alpha: &Rat, beta: &Rat, d: usize) -> Result<Option<RatMatrix>> {
    let ij = i.mul(j)?;
    let ab = alpha * beta;
    for s in 1..=12i64 {
        for p in -12..=12i64 {
            for q in -12..=12i64 {
                for r in -12..=12i64 {
                    let (pr, qr, rr) = (Rat::from_int(p), Rat::from_int(q), Rat::from_int(r));
                    let lhs = alpha * &(&pr * &pr) + beta * &(&qr * &qr) - &ab * &(&rr * &rr);
                    if lhs != Rat::from_int(s * s) {
                        continue;
                    }
                    let x = i.scale(&pr).add(&j.scale(&qr))?.add(&ij.scale(&rr))?.scale(&Rat::new(1, s)?);
                    let e = RatMatrix::identity(d).add(&x)?.scale(&Rat::new(1, 2)?);
                    if e.mul(&e)? == e && e.rank() * 2 == d {
                        return Ok(Some(e));
                    }
                }
            }
        }
    }
    Ok(None)
}
