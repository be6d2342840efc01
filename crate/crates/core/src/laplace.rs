//! Laplace and Dirac operators attached to a pairing, Casimir elements, the
//! commutator identities, spectra of `Δ∘C`, sections and categorical kernels.

use std::fmt;

use rand::Rng;

use crate::check::MapCheck;
use crate::error::{Error, Result};
use crate::exactnum::{annihilation_check, Rat, RatMatrix, SparseMat};
use crate::gvect::{braiding, perm_action_sparse, shuffle_sparse, LinMor, SpaceObj};
use crate::powers::{curry, PowerKind, PowerSpace};
use crate::symalg::{coset_reps_pair, coset_reps_point, split_idempotent, Perm};

/// Behaviour of a pairing `X⊗X → Z` under the braiding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Symmetry {
    /// `ψ∘τ = -ψ`
    Alternating,
    /// `ψ∘τ = ψ`
    Symmetric,
    /// Neither, or the two factors are different objects.
    None,
}

impl Symmetry {
    /// The power on which the matching Laplace operator lives.
    pub fn kind(self) -> Option<PowerKind> {
        match self {
            Symmetry::Alternating => Some(PowerKind::Alt),
            Symmetry::Symmetric => Some(PowerKind::Sym),
            Symmetry::None => None,
        }
    }

    pub fn of_kind(kind: PowerKind) -> Symmetry {
        match kind {
            PowerKind::Alt => Symmetry::Alternating,
            PowerKind::Sym => Symmetry::Symmetric,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Symmetry::Alternating => "alternating",
            Symmetry::Symmetric => "symmetric",
            Symmetry::None => "none",
        }
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A morphism `ψ: X⊗Y → Z` together with its measured symmetry and perfection.
#[derive(Clone, Debug)]
pub struct Pairing {
    mor: LinMor,
    left: SpaceObj,
    right: SpaceObj,
    symmetry: Symmetry,
    perfect: bool,
}

impl Pairing {
    /// Wrap `mor`, whose source must be `left ⊗ right` up to rebracketing.
    pub fn new(mor: LinMor, left: &SpaceObj, right: &SpaceObj) -> Result<Self> {
        let dom = left.tensor(right);
        let mor = if *mor.dom() == dom { mor } else { mor.retag(&dom, &mor.cod().clone())? };
        let symmetry = if left == right {
            let turned = mor.compose(&braiding(left, left))?;
            if turned == mor {
                // the zero pairing lands here as well
                Symmetry::Symmetric
            } else if turned == mor.scale(&-Rat::one()) {
                Symmetry::Alternating
            } else {
                Symmetry::None
            }
        } else {
            Symmetry::None
        };
        let perfect = curry(&mor, left, right)?.is_iso();
        Ok(Pairing { mor, left: left.clone(), right: right.clone(), symmetry, perfect })
    }

    /// The `𝕀`-valued pairing on `X⊗X` with Gram matrix `g[a][b] = ψ(e_a ⊗ e_b)`.
    pub fn from_gram(x: &SpaceObj, g: &RatMatrix) -> Result<Self> {
        let d = x.dim();
        if g.rows() != d || g.cols() != d {
            return Err(Error::Shape(format!("Gram matrix {}x{} on a {d}-dim space", g.rows(), g.cols())));
        }
        let row = RatMatrix::from_fn(1, d * d, |_, c| g.get(c / d, c % d).clone());
        Pairing::new(LinMor::new(x.tensor(x), SpaceObj::unit(), row)?, x, x)
    }

    pub fn mor(&self) -> &LinMor {
        &self.mor
    }

    pub fn left(&self) -> &SpaceObj {
        &self.left
    }

    pub fn right(&self) -> &SpaceObj {
        &self.right
    }

    pub fn target(&self) -> &SpaceObj {
        self.mor.cod()
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    /// The curried map `X → Z ⊗ Y∨` is an isomorphism.
    pub fn is_perfect(&self) -> bool {
        self.perfect
    }

    /// Gram matrix of an `𝕀`-valued pairing on `X⊗X`.
    pub fn gram(&self) -> Option<RatMatrix> {
        if !self.target().is_unit() || self.left != self.right {
            return None;
        }
        let d = self.left.dim();
        Some(RatMatrix::from_fn(d, d, |a, b| self.mor.mat().get(0, a * d + b).clone()))
    }

    /// `σ ∘ ψ` for a map `σ` out of the target.
    pub fn with_target(&self, sigma: &LinMor) -> Result<Pairing> {
        Pairing::new(sigma.compose(&self.mor)?, &self.left, &self.right)
    }

    fn swapped(&self) -> Result<LinMor> {
        if self.left != self.right {
            return Err(Error::Precondition("symmetric and alternating parts need X⊗X".into()));
        }
        self.mor.compose(&braiding(&self.left, &self.left))
    }

    /// `(ψ - ψ∘τ)/2`.
    pub fn alternating_part(&self) -> Result<Pairing> {
        let half = Rat::new(1, 2)?;
        let m = self.mor.sub(&self.swapped()?)?.scale(&half);
        Pairing::new(m, &self.left, &self.right)
    }

    /// `(ψ + ψ∘τ)/2`.
    pub fn symmetric_part(&self) -> Result<Pairing> {
        let half = Rat::new(1, 2)?;
        let m = self.mor.add(&self.swapped()?)?.scale(&half);
        Pairing::new(m, &self.left, &self.right)
    }
}

/// A random perfect `𝕀`-valued pairing on `x` with the requested symmetry.
///
/// Entries are integers in `[-5, 5]`; matrices are resampled until invertible.
/// For odd basis vectors the Koszul sign swaps which Gram block is skew.
pub fn random_perfect_pairing<R: Rng>(x: &SpaceObj, symmetry: Symmetry, rng: &mut R) -> Result<Pairing> {
    let kind = symmetry
        .kind()
        .ok_or_else(|| Error::Precondition("random pairings are alternating or symmetric".into()))?;
    let skew_parity = match kind {
        PowerKind::Alt => 0,
        PowerKind::Sym => 1,
    };
    let d = x.dim();
    let skew_count = x.parities().iter().filter(|&&p| p == skew_parity).count();
    if skew_count % 2 == 1 {
        return Err(Error::Precondition(format!(
            "no perfect {symmetry} pairing: the skew block has odd size {skew_count}"
        )));
    }
    loop {
        let mut g = RatMatrix::zeros(d, d);
        for a in 0..d {
            for b in a..d {
                if x.parity(a) != x.parity(b) {
                    continue;
                }
                let skew = x.parity(a) == skew_parity;
                let v = Rat::from_int(rng.gen_range(-5..=5));
                if a == b {
                    if !skew {
                        g.set(a, a, v);
                    }
                    continue;
                }
                g.set(b, a, if skew { -v.clone() } else { v.clone() });
                g.set(a, b, v);
            }
        }
        if g.rank() == d {
            return Pairing::from_gram(x, &g);
        }
    }
}

fn id_kron(k: usize, m: &SparseMat) -> SparseMat {
    SparseMat::identity(k).kron(m)
}

fn kron_id(m: &SparseMat, k: usize) -> SparseMat {
    m.kron(&SparseMat::identity(k))
}

/// Operators attached to one pairing on the powers of one kind, up to a maximal degree.
#[derive(Clone, Debug)]
pub struct OperatorFamily {
    psi: Pairing,
    psi_sparse: SparseMat,
    kind: PowerKind,
    powers: Vec<PowerSpace>,
}

impl OperatorFamily {
    /// Build the powers `*⁰X, …, *^{max_degree}X` of the left factor.
    pub fn new(psi: &Pairing, kind: PowerKind, max_degree: usize) -> Self {
        let powers = (0..=max_degree).map(|k| PowerSpace::new(psi.left(), k, kind)).collect();
        OperatorFamily { psi: psi.clone(), psi_sparse: SparseMat::from_dense(psi.mor().mat()), kind, powers }
    }

    pub fn pairing(&self) -> &Pairing {
        &self.psi
    }

    pub fn kind(&self) -> PowerKind {
        self.kind
    }

    pub fn max_degree(&self) -> usize {
        self.powers.len() - 1
    }

    pub fn power(&self, n: usize) -> Result<&PowerSpace> {
        self.powers.get(n).ok_or_else(|| {
            Error::Degree(format!("degree {n} beyond the family maximum {}", self.max_degree()))
        })
    }

    fn d(&self) -> usize {
        self.psi.left().dim()
    }

    fn require_square(&self) -> Result<()> {
        if self.psi.left() != self.psi.right() {
            return Err(Error::Precondition("Laplace operators need a pairing on X⊗X".into()));
        }
        Ok(())
    }

    fn dirac_sparse(&self, n: usize) -> Result<SparseMat> {
        if n == 0 {
            return Err(Error::Degree("Dirac operators start in degree 1".into()));
        }
        let (top, low) = (self.power(n)?, self.power(n - 1)?);
        let (dy, dz) = (self.psi.right().dim(), self.psi.target().dim());
        let contract = id_kron(self.d().pow(n as u32 - 1), &self.psi_sparse);
        let lifted = contract.mul(&kron_id(top.incl_sparse(), dy))?;
        kron_id(low.proj_sparse(), dz).mul(&lifted)
    }

    /// `∂ⁿ: *ⁿX ⊗ Y → *ⁿ⁻¹X ⊗ Z`.
    pub fn dirac(&self, n: usize) -> Result<LinMor> {
        let m = self.dirac_sparse(n)?;
        LinMor::from_sparse(
            self.power(n)?.carrier().tensor(self.psi.right()),
            self.power(n - 1)?.carrier().tensor(self.psi.target()),
            &m,
        )
    }

    fn laplace_sparse(&self, n: usize) -> Result<SparseMat> {
        self.require_square()?;
        if n < 2 {
            return Err(Error::Degree("Laplace operators start in degree 2".into()));
        }
        let (top, low) = (self.power(n)?, self.power(n - 2)?);
        let contract = id_kron(self.d().pow(n as u32 - 2), &self.psi_sparse);
        let lifted = contract.mul(top.incl_sparse())?;
        kron_id(low.proj_sparse(), self.psi.target().dim()).mul(&lifted)
    }

    /// `Δⁿ: *ⁿX → *ⁿ⁻²X ⊗ Z`.
    pub fn laplace(&self, n: usize) -> Result<LinMor> {
        let m = self.laplace_sparse(n)?;
        LinMor::from_sparse(
            self.power(n)?.carrier().clone(),
            self.power(n - 2)?.carrier().tensor(self.psi.target()),
            &m,
        )
    }

    /// `(1/n) Σ_p χ(δ_p) (1⊗ψ)(δ_p⊗1_Y)` on `⊗ⁿX ⊗ Y`, for a transversal `reps`.
    fn lifted_dirac_sparse(&self, n: usize, reps: &[Perm]) -> Result<SparseMat> {
        let (dy, d) = (self.psi.right().dim(), self.d());
        let chi = self.kind.character();
        let contract = id_kron(d.pow(n as u32 - 1), &self.psi_sparse);
        let total = d.pow(n as u32) * dy;
        let mut acc = SparseMat::zeros(contract.rows(), total);
        for delta in reps {
            let act = kron_id(&perm_action_sparse(delta, self.psi.left().parities()), dy);
            let term = contract.mul(&act)?.scale(&Rat::from_int(chi.eval(delta)));
            acc = acc.add(&term)?;
        }
        Ok(acc.scale(&Rat::new(1, reps.len() as i64)?))
    }

    /// The lifted Dirac operator followed by the projection agrees with `∂ⁿ` after the projection.
    pub fn lifted_dirac_check(&self, n: usize) -> Result<MapCheck> {
        self.lifted_dirac_check_with(n, &coset_reps_point(n))
    }

    /// As [`Self::lifted_dirac_check`] for another transversal of `S_{n-1}\S_n`.
    pub fn lifted_dirac_check_with(&self, n: usize, reps: &[Perm]) -> Result<MapCheck> {
        let (dy, dz) = (self.psi.right().dim(), self.psi.target().dim());
        let lifted = self.lifted_dirac_sparse(n, reps)?;
        let lhs = kron_id(self.power(n - 1)?.proj_sparse(), dz).mul(&lifted)?;
        let rhs = self.dirac_sparse(n)?.mul(&kron_id(self.power(n)?.proj_sparse(), dy))?;
        Ok(MapCheck::compare_sparse(format!("lifted ∂ n={n} {}", self.kind), &lhs, &rhs))
    }

    /// Lifted Laplace operators: the average over all ordered pairs and the
    /// average over `p<q`, both compared with `Δⁿ` through the projections.
    pub fn lifted_laplace_checks(&self, n: usize) -> Result<Vec<MapCheck>> {
        self.require_square()?;
        let d = self.d();
        let dz = self.psi.target().dim();
        let chi = self.kind.character();
        let contract = id_kron(d.pow(n as u32 - 2), &self.psi_sparse);
        let total = d.pow(n as u32);
        let pairs = coset_reps_pair(n);
        let mut all = SparseMat::zeros(contract.rows(), total);
        let mut ordered = SparseMat::zeros(contract.rows(), total);
        for ((p, q), delta) in &pairs {
            let act = perm_action_sparse(delta, self.psi.left().parities());
            let term = contract.mul(&act)?.scale(&Rat::from_int(chi.eval(delta)));
            if p < q {
                ordered = ordered.add(&term)?;
            }
            all = all.add(&term)?;
        }
        let nn = (n * (n - 1)) as i64;
        let tilde = all.scale(&Rat::new(1, nn)?);
        let hat = ordered.scale(&Rat::new(2, nn)?);
        let proj_low = kron_id(self.power(n - 2)?.proj_sparse(), dz);
        let rhs = self.laplace_sparse(n)?.mul(self.power(n)?.proj_sparse())?;
        Ok(vec![
            MapCheck::compare_sparse(format!("lifted Δ n={n} {}", self.kind), &proj_low.mul(&tilde)?, &rhs),
            MapCheck::compare_sparse(format!("ordered-pair Δ n={n} {}", self.kind), &proj_low.mul(&hat)?, &rhs),
        ])
    }

    fn casimir_sparse(&self) -> Result<SparseMat> {
        let g = self.psi.gram().ok_or_else(|| {
            Error::Precondition("the Casimir element needs an 𝕀-valued pairing on X⊗X".into())
        })?;
        if !self.psi.is_perfect() {
            return Err(Error::NotPerfect);
        }
        let c = g.inverse()?;
        let d = self.d();
        let col = (0..d * d).map(|k| (k, c.get(k / d, k % d).clone())).collect();
        Ok(SparseMat::from_columns(d * d, vec![col]))
    }

    /// `C_ψ: 𝕀 → X⊗X`, the coefficients being the inverse Gram matrix.
    pub fn casimir(&self) -> Result<LinMor> {
        let x = self.psi.left();
        LinMor::from_sparse(SpaceObj::unit(), x.tensor(x), &self.casimir_sparse()?)
    }

    fn casimir_power_sparse(&self, n: usize) -> Result<SparseMat> {
        let c = self.casimir_sparse()?;
        let lifted = id_kron(self.d().pow(n as u32), &c).mul(self.power(n)?.incl_sparse())?;
        self.power(n + 2)?.proj_sparse().mul(&lifted)
    }

    /// `Cⁿ: *ⁿX → *ⁿ⁺²X`.
    pub fn casimir_power(&self, n: usize) -> Result<LinMor> {
        let m = self.casimir_power_sparse(n)?;
        LinMor::from_sparse(self.power(n)?.carrier().clone(), self.power(n + 2)?.carrier().clone(), &m)
    }

    /// `(1⊗C_ψ)` on `⊗ⁿX` followed by the projection equals `Cⁿ` after the projection.
    pub fn casimir_square_check(&self, n: usize) -> Result<MapCheck> {
        let c = self.casimir_sparse()?;
        let full = id_kron(self.d().pow(n as u32), &c);
        let lhs = self.power(n + 2)?.proj_sparse().mul(&full)?;
        let rhs = self.casimir_power_sparse(n)?.mul(self.power(n)?.proj_sparse())?;
        Ok(MapCheck::compare_sparse(format!("C square n={n} {}", self.kind), &lhs, &rhs))
    }

    /// The two Casimir identities `(1⊗ψ)(C⊗1) = 1` and `(ψ⊗1)(1⊗C) = 1` and the value of `ψ∘C`.
    pub fn casimir_identities(&self) -> Result<(MapCheck, MapCheck, Rat)> {
        let x = self.psi.left();
        let c = self.casimir()?;
        let id = LinMor::identity(x);
        let first = id.tensor(self.psi.mor()).compose_reassociated(&c.tensor(&id))?;
        let second = self.psi.mor().tensor(&id).compose_reassociated(&id.tensor(&c))?;
        let value = self.psi.mor().compose(&c)?.as_scalar().expect("endomorphism of 𝕀");
        Ok((
            MapCheck::compare("(1⊗ψ)(C⊗1)", &first, &id),
            MapCheck::compare("(ψ⊗1)(1⊗C)", &second, &id),
            value,
        ))
    }

    fn nu_r(&self) -> Rat {
        self.kind.nu() * self.psi.left().rank()
    }

    fn require_matching(&self) -> Result<()> {
        if self.psi.symmetry().kind() != Some(self.kind) {
            return Err(Error::Precondition(format!(
                "a {} pairing does not match {} powers",
                self.psi.symmetry(),
                self.kind
            )));
        }
        Ok(())
    }

    /// `Δⁿ⁺² ∘ Cⁿ` on `*ⁿX`.
    pub fn laplace_after_casimir(&self, n: usize) -> Result<LinMor> {
        self.laplace(n + 2)?.compose(&self.casimir_power(n)?)
    }

    /// `Cⁿ⁻² ∘ Δⁿ` on `*ⁿX`.
    pub fn casimir_after_laplace(&self, n: usize) -> Result<LinMor> {
        self.casimir_power(n - 2)?.compose(&self.laplace(n)?)
    }

    /// The commutator identity in degree `n`.
    pub fn commutator(&self, n: usize) -> Result<CommutatorCheck> {
        self.require_matching()?;
        let nu_r = self.nu_r();
        let carrier = self.power(n)?.carrier().clone();
        let (lhs, predicted) = match n {
            0 => (self.laplace_after_casimir(0)?, nu_r),
            1 => (self.laplace_after_casimir(1)?.scale(&Rat::from_int(3)), Rat::from_int(2) + nu_r),
            _ => {
                let a = Rat::from_int(((n + 2) * (n + 1) / 2) as i64);
                let b = Rat::from_int((n * (n - 1) / 2) as i64);
                let m = self
                    .laplace_after_casimir(n)?
                    .scale(&a)
                    .sub(&self.casimir_after_laplace(n)?.scale(&b))?;
                (m, Rat::from_int(2 * n as i64) + nu_r)
            }
        };
        let rhs = LinMor::scalar_identity(&carrier, &predicted);
        let measured = if carrier.dim() == 0 { None } else { lhs.ratio_to(&LinMor::identity(&carrier)) };
        let check = MapCheck::compare(format!("commutator n={n} {}", self.kind), &lhs, &rhs);
        Ok(CommutatorCheck { n, predicted, measured, check })
    }

    /// Certify that `Δⁿ⁺²∘Cⁿ` (and `Cⁿ⁻²∘Δⁿ` when `n ≥ 2`) is diagonalizable with spectrum
    /// inside the candidates produced by the commutator recursion.
    pub fn spectrum(&self, n: usize) -> Result<SpectrumCertificate> {
        self.require_matching()?;
        let nu_r = self.nu_r();
        if !nu_r.is_positive() {
            return Err(Error::Precondition(format!(
                "rank {} has the wrong sign for {} powers",
                self.psi.left().rank(),
                self.kind
            )));
        }
        let (forward_roots, backward_roots) = spectrum_candidates(&nu_r, n);
        let forward_diagonalizable = annihilation_check(self.laplace_after_casimir(n)?.mat(), &forward_roots)?;
        let backward_diagonalizable = if n >= 2 {
            annihilation_check(self.casimir_after_laplace(n)?.mat(), &backward_roots)?
        } else {
            true
        };
        Ok(SpectrumCertificate { n, forward_roots, backward_roots, forward_diagonalizable, backward_diagonalizable })
    }

    /// `sⁿ⁻² = Cⁿ⁻² ∘ (Δⁿ∘Cⁿ⁻²)⁻¹`, a section of `Δⁿ`.
    pub fn section(&self, n: usize) -> Result<LinMor> {
        if n < 2 {
            return Err(Error::Degree("Laplace sections start in degree 2".into()));
        }
        let dc = self.laplace_after_casimir(n - 2)?;
        let inv = dc.inverse().map_err(|_| {
            Error::Precondition(format!("Δ{n}∘C{} is not invertible", n - 2))
        })?;
        let s = self.casimir_power(n - 2)?.compose(&inv)?;
        let back = self.laplace(n)?.compose(&s)?;
        if !back.mat().is_identity() {
            return Err(Error::NotSection);
        }
        Ok(s)
    }
}

/// Candidate spectra of `Δⁿ⁺²∘Cⁿ` and of `Cⁿ⁻²∘Δⁿ`, given `νr`.
pub fn spectrum_candidates(nu_r: &Rat, n: usize) -> (Vec<Rat>, Vec<Rat>) {
    fn forward(nu_r: &Rat, n: usize) -> Vec<Rat> {
        match n {
            0 => vec![nu_r.clone()],
            1 => vec![(Rat::from_int(2) + nu_r) * Rat::new(1, 3).expect("nonzero")],
            _ => {
                let a = Rat::from_int(((n + 2) * (n + 1) / 2) as i64);
                let b = Rat::from_int((n * (n - 1) / 2) as i64);
                let shift = Rat::from_int(2 * n as i64) + nu_r;
                let a_inv = a.recip().expect("nonzero");
                let mut out: Vec<Rat> =
                    backward(nu_r, n).iter().map(|mu| (&b * mu + &shift) * &a_inv).collect();
                out.sort();
                out.dedup();
                out
            }
        }
    }
    fn backward(nu_r: &Rat, n: usize) -> Vec<Rat> {
        let mut out = forward(nu_r, n - 2);
        out.push(Rat::zero());
        out.sort();
        out.dedup();
        out
    }
    let back = if n >= 2 { backward(nu_r, n) } else { Vec::new() };
    (forward(nu_r, n), back)
}

/// Outcome of the commutator identity in one degree.
#[derive(Clone, Debug)]
pub struct CommutatorCheck {
    pub n: usize,
    pub predicted: Rat,
    /// Scalar the left side is a multiple of the identity by, if it is one.
    /// `None` on a zero-dimensional power, where every scalar fits.
    pub measured: Option<Rat>,
    pub check: MapCheck,
}

impl CommutatorCheck {
    pub fn pass(&self) -> bool {
        self.check.pass
    }
}

/// Annihilation certificates for `Δ∘C` and `C∘Δ` in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumCertificate {
    pub n: usize,
    /// Candidate eigenvalues of `Δⁿ⁺²∘Cⁿ`.
    pub forward_roots: Vec<Rat>,
    /// Candidate eigenvalues of `Cⁿ⁻²∘Δⁿ`; empty below degree 2.
    pub backward_roots: Vec<Rat>,
    pub forward_diagonalizable: bool,
    pub backward_diagonalizable: bool,
}

impl SpectrumCertificate {
    pub fn forward_positive(&self) -> bool {
        self.forward_roots.iter().all(Rat::is_positive)
    }

    pub fn backward_nonnegative(&self) -> bool {
        self.backward_roots.iter().all(|r| !r.is_negative())
    }

    pub fn pass(&self) -> bool {
        self.forward_diagonalizable
            && self.backward_diagonalizable
            && self.forward_positive()
            && self.backward_nonnegative()
    }
}

/// `∂ⁿ_{ψ,*}`.
pub fn dirac_lift(psi: &Pairing, n: usize, kind: PowerKind) -> Result<LinMor> {
    OperatorFamily::new(psi, kind, n).dirac(n)
}

/// `Δⁿ_{ψ,*}`.
pub fn laplace_lift(psi: &Pairing, n: usize, kind: PowerKind) -> Result<LinMor> {
    OperatorFamily::new(psi, kind, n).laplace(n)
}

/// `C_ψ` of a perfect `𝕀`-valued pairing.
pub fn casimir(psi: &Pairing) -> Result<LinMor> {
    OperatorFamily::new(psi, PowerKind::Sym, 1).casimir()
}

/// `Cⁿ_{ψ,*}`.
pub fn casimir_power(psi: &Pairing, n: usize, kind: PowerKind) -> Result<LinMor> {
    OperatorFamily::new(psi, kind, n + 2).casimir_power(n)
}

pub fn verify_casimir_commutator(psi: &Pairing, n: usize, kind: PowerKind) -> Result<CommutatorCheck> {
    OperatorFamily::new(psi, kind, n + 2).commutator(n)
}

pub fn spectrum_certificate(psi: &Pairing, n: usize, kind: PowerKind) -> Result<SpectrumCertificate> {
    OperatorFamily::new(psi, kind, n + 2).spectrum(n)
}

/// A section of `Δⁿ_{ψ,*}`. Pairings valued in a one-dimensional even object
/// other than `𝕀` are handled by twisting with an even line.
pub fn laplace_section(psi: &Pairing, n: usize, kind: PowerKind) -> Result<LinMor> {
    if psi.target().is_unit() {
        return OperatorFamily::new(psi, kind, n).section(n);
    }
    let line = SpaceObj::even("𝕃", "l", 1);
    let s = twist_pairing(psi, &line)?.laplace_section(n, kind)?;
    let fam = OperatorFamily::new(psi, kind, n);
    let low = fam.power(n - 2)?.carrier().tensor(psi.target());
    s.retag(&low, s.cod())
}

/// The contraction `𝕃⊗𝕃 ⊗ 𝕃⁻¹⊗𝕃⁻¹ → 𝕀` used to untwist.
fn line_contraction(line: &SpaceObj) -> Result<LinMor> {
    let li = line.dual();
    let dom = line.tensor(line).tensor(&li.tensor(&li));
    LinMor::new(dom, SpaceObj::unit(), RatMatrix::identity(1))
}

/// A pairing `φ: X⊗X → 𝕃⊗𝕃` and its twist `φ_{𝕃⁻¹}` on `X⊗𝕃⁻¹`.
#[derive(Clone, Debug)]
pub struct Twist {
    source: Pairing,
    line: SpaceObj,
    twisted: Pairing,
}

/// Twist `phi: X⊗X → Z`, with `Z` one-dimensional and even, by the line `l`.
///
/// `Z` is identified with `l⊗l` by the identity matrix.
pub fn twist_pairing(phi: &Pairing, l: &SpaceObj) -> Result<Twist> {
    if l.dim() != 1 {
        return Err(Error::Precondition("twisting needs a one-dimensional object".into()));
    }
    let x = phi.left();
    if x != phi.right() {
        return Err(Error::Precondition("twisting needs a pairing on X⊗X".into()));
    }
    let ll = l.tensor(l);
    if phi.target().parities() != ll.parities() {
        return Err(Error::Precondition(format!("target {:?} is not a square of a line", phi.target())));
    }
    let sigma = LinMor::canonical_iso(phi.target(), &ll)?;
    let source = phi.with_target(&sigma)?;
    let li = l.dual();
    let xt = x.tensor(&li);
    let swap = Perm::from_images(vec![1, 3, 2, 4])?;
    let middle = LinMor::from_sparse(
        SpaceObj::tensor_all(&[x, &li, x, &li]),
        SpaceObj::tensor_all(&[x, x, &li, &li]),
        &shuffle_sparse(&[x, &li, x, &li], &swap),
    )?;
    let mor = line_contraction(l)?
        .compose_reassociated(&source.mor().tensor(&LinMor::identity(&li.tensor(&li))))?
        .compose_reassociated(&middle)?;
    let twisted = Pairing::new(mor.retag(&xt.tensor(&xt), &SpaceObj::unit())?, &xt, &xt)?;
    Ok(Twist { source, line: l.clone(), twisted })
}

impl Twist {
    /// `φ` with its target identified with `𝕃⊗𝕃`.
    pub fn source(&self) -> &Pairing {
        &self.source
    }

    pub fn line(&self) -> &SpaceObj {
        &self.line
    }

    /// `φ_{𝕃⁻¹}` on `X⊗𝕃⁻¹`.
    pub fn twisted(&self) -> &Pairing {
        &self.twisted
    }

    pub fn line_rank(&self) -> Rat {
        self.line.rank()
    }

    /// Symmetry the twisted pairing should have: that of `φ`, flipped when `r_𝕃 = -1`.
    pub fn expected_symmetry(&self) -> Symmetry {
        match (self.source.symmetry(), self.line_rank().is_positive()) {
            (s, true) => s,
            (Symmetry::Alternating, false) => Symmetry::Symmetric,
            (Symmetry::Symmetric, false) => Symmetry::Alternating,
            (Symmetry::None, false) => Symmetry::None,
        }
    }

    /// Flavor on the twisted side matching `kind` on `X`.
    pub fn twisted_kind(&self, kind: PowerKind) -> PowerKind {
        if self.line_rank().is_positive() {
            kind
        } else {
            kind.other()
        }
    }

    fn line_inv_power(&self, n: usize) -> SpaceObj {
        self.line.dual().tensor_power(n)
    }

    /// `τ_δ: *'ⁿ(X⊗𝕃⁻¹) → (*ⁿX) ⊗ 𝕃^{⊗-n}` induced by moving every `𝕃⁻¹` to the right.
    pub fn tau_delta(&self, n: usize, kind: PowerKind) -> Result<LinMor> {
        let x = self.source.left();
        let li = self.line.dual();
        let twisted_pow = PowerSpace::new(self.twisted.left(), n, self.twisted_kind(kind));
        let plain_pow = PowerSpace::new(x, n, kind);
        let factors: Vec<&SpaceObj> = (0..2 * n).map(|k| if k % 2 == 0 { x } else { &li }).collect();
        let images = (0..2 * n).map(|k| if k % 2 == 0 { k / 2 + 1 } else { n + k / 2 + 1 }).collect();
        let shuffle = shuffle_sparse(&factors, &Perm::from_images(images)?);
        let m = plain_pow.proj_sparse().mul(&shuffle)?.mul(twisted_pow.incl_sparse())?;
        LinMor::from_sparse(
            twisted_pow.carrier().clone(),
            plain_pow.carrier().tensor(&self.line_inv_power(n)),
            &m,
        )
    }

    /// `(1 ⊗ contraction) ∘ (1 ⊗ τ_{𝕃⊗𝕃, 𝕃^{-(n-2)}} ⊗ 1)` from `(*ⁿ⁻²X ⊗ 𝕃⊗𝕃) ⊗ 𝕃^{-n}`
    /// to `*ⁿ⁻²X ⊗ 𝕃^{-(n-2)}`.
    fn untwist(&self, n: usize, kind: PowerKind) -> Result<LinMor> {
        let low = PowerSpace::new(self.source.left(), n - 2, kind);
        let ll = self.line.tensor(&self.line);
        let li = self.line.dual();
        let rest = self.line_inv_power(n - 2);
        let swap = braiding(&ll, &rest).tensor(&LinMor::identity(&li.tensor(&li)));
        let contract = LinMor::identity(&rest).tensor(&line_contraction(&self.line)?);
        let c = contract.compose_reassociated(&swap)?;
        let post = LinMor::identity(low.carrier()).tensor(&c);
        let dom = low.carrier().tensor(&ll).tensor(&self.line_inv_power(n));
        post.retag(&dom, post.cod())
    }

    /// The square relating the twisted Laplace operator to `Δⁿ_φ ⊗ 1` through `τ_δ`.
    pub fn laplace_square(&self, n: usize, kind: PowerKind) -> Result<MapCheck> {
        let tk = self.twisted_kind(kind);
        let twisted_laplace = OperatorFamily::new(&self.twisted, tk, n).laplace(n)?;
        let plain_laplace = OperatorFamily::new(&self.source, kind, n).laplace(n)?;
        let lhs = self.tau_delta(n - 2, kind)?.compose(&twisted_laplace)?;
        let widened = plain_laplace.tensor(&LinMor::identity(&self.line_inv_power(n)));
        let rhs = self.untwist(n, kind)?.compose_reassociated(&widened.compose(&self.tau_delta(n, kind)?)?)?;
        let rhs = rhs.retag(lhs.dom(), lhs.cod())?;
        Ok(MapCheck::compare(format!("twisted Δ square n={n} {kind}"), &lhs, &rhs))
    }

    /// A section of `Δⁿ_{φ,*}` obtained from the Casimir section of the twisted pairing.
    pub fn laplace_section(&self, n: usize, kind: PowerKind) -> Result<LinMor> {
        if n < 2 {
            return Err(Error::Degree("Laplace sections start in degree 2".into()));
        }
        let tk = self.twisted_kind(kind);
        let twisted_section = OperatorFamily::new(&self.twisted, tk, n).section(n)?;
        let wide = LinMor::chain(&[
            &self.tau_delta(n, kind)?,
            &twisted_section,
            &self.tau_delta(n - 2, kind)?.inverse()?,
            &self.untwist(n, kind)?,
        ])?;
        let plain = OperatorFamily::new(&self.source, kind, n);
        let low = plain.power(n - 2)?.carrier().tensor(self.source.target());
        let s = LinMor::new(low, plain.power(n)?.carrier().clone(), wide.into_mat())?;
        if !plain.laplace(n)?.compose(&s)?.mat().is_identity() {
            return Err(Error::NotSection);
        }
        Ok(s)
    }
}

/// Kernel of `f` split off by a section `s` with `f∘s = 1`.
#[derive(Clone, Debug)]
pub struct KernelObject {
    /// `e = 1 - s∘f`.
    pub projector: LinMor,
    pub incl: LinMor,
    pub proj: LinMor,
    pub object: SpaceObj,
    /// The image of `e` spans the same subspace as the nullspace of `f`.
    pub matches_nullspace: bool,
}

impl KernelObject {
    pub fn dim(&self) -> usize {
        self.object.dim()
    }
}

pub fn kernel_object(f: &LinMor, s: &LinMor, name: &str) -> Result<KernelObject> {
    let fs = f.compose(s)?;
    if !fs.mat().is_identity() {
        return Err(Error::NotSection);
    }
    let projector = LinMor::identity(f.dom()).sub(&s.compose(f)?)?;
    let split = split_idempotent(&projector, name)?;
    let null = f.mat().kernel_matrix();
    let matches_nullspace = split.incl.mat().same_column_span(&null);
    Ok(KernelObject { projector, incl: split.incl, proj: split.proj, object: split.image, matches_nullspace })
}

/// Three pairings `ψ₁: X⊗Y → Z`, `ψ₂: X⊗Z → Y⊗W` and `ψ: X⊗X → W`
/// for which `∂_{ψ₂}∘∂_{ψ₁}` is compared with `Δ_ψ`.
#[derive(Clone, Debug)]
pub struct DiracTriple {
    pub first: Pairing,
    pub second: Pairing,
    pub laplace: Pairing,
}

impl DiracTriple {
    pub fn new(first: Pairing, second: Pairing, laplace: Pairing) -> Result<Self> {
        let x = first.left();
        let expect = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(Error::Precondition(format!("triple mismatch: {what}")))
            }
        };
        expect(second.left() == x && laplace.left() == x && laplace.right() == x, "left factors")?;
        expect(second.right().parities() == first.target().parities(), "ψ₂ source")?;
        let yw = first.right().tensor(laplace.target());
        expect(second.target().parities() == yw.parities(), "ψ₂ target")?;
        Ok(DiracTriple { first, second, laplace })
    }

    fn y(&self) -> &SpaceObj {
        self.first.right()
    }

    fn w(&self) -> &SpaceObj {
        self.laplace.target()
    }

    /// `ρ` with `ψ₂(1⊗ψ₁) + ν ψ₂(1⊗ψ₁)(τ⊗1) = ρ τ_{W,Y}(ψ⊗1)`, if the two sides are proportional.
    pub fn measured_rho(&self, kind: PowerKind) -> Result<Option<Rat>> {
        let x = self.first.left();
        let y = self.y();
        let id_x = LinMor::identity(x);
        let base = x.tensor(x).tensor(y);
        let contracted = self
            .second
            .mor()
            .compose_reassociated(&id_x.tensor(self.first.mor()))?
            .retag(&base, self.second.target())?;
        let swapped = contracted.compose(&braiding(x, x).tensor(&LinMor::identity(y)))?;
        let lhs = contracted.add(&swapped.scale(&kind.nu()))?;
        let rhs = braiding(self.w(), y).compose(&self.laplace.mor().tensor(&LinMor::identity(y)))?;
        let lhs = lhs.retag(rhs.dom(), rhs.cod())?;
        Ok(lhs.ratio_to(&rhs))
    }

    /// `∂ⁿ⁻¹_{ψ₂} ∘ ∂ⁿ_{ψ₁} = (ρ/2)(1⊗τ_{W,Y})(Δⁿ_ψ⊗1)`.
    pub fn square(&self, rho: &Rat, n: usize, kind: PowerKind) -> Result<MapCheck> {
        if n < 2 {
            return Err(Error::Degree("the Dirac square needs n ≥ 2".into()));
        }
        let d1 = OperatorFamily::new(&self.first, kind, n).dirac(n)?;
        let d2 = OperatorFamily::new(&self.second, kind, n - 1).dirac(n - 1)?;
        let lhs = d2.compose_reassociated(&d1)?;
        let fam = OperatorFamily::new(&self.laplace, kind, n);
        let delta = fam.laplace(n)?.tensor(&LinMor::identity(self.y()));
        let turn = LinMor::identity(fam.power(n - 2)?.carrier()).tensor(&braiding(self.w(), self.y()));
        let rhs = turn.compose_reassociated(&delta)?.scale(&(rho * &Rat::new(1, 2)?));
        let rhs = rhs.retag(lhs.dom(), lhs.cod())?;
        Ok(MapCheck::compare(format!("∂∂ = ρ/2 Δ n={n} {kind}"), &lhs, &rhs))
    }
}

/// The triple `ψ₁ = 1_{X⊗X}`, `ψ₂ = τ_{W,X}∘(ψ⊗1_X)` built from `ψ: X⊗X → W`; it has `ρ = 2`
/// whenever the symmetry of `ψ` matches the flavor.
pub fn identity_triple(psi: &Pairing) -> Result<DiracTriple> {
    let x = psi.left();
    let xx = x.tensor(x);
    let first = Pairing::new(LinMor::identity(&xx), x, x)?;
    let second_mor = braiding(psi.target(), x).compose(&psi.mor().tensor(&LinMor::identity(x)))?;
    let second = Pairing::new(second_mor.retag(&x.tensor(&xx), second_mor.cod())?, x, &xx)?;
    DiracTriple::new(first, second, psi.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symalg::random_coset_reps_point;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gram(x: &SpaceObj, rows: &[&[i64]]) -> Pairing {
        Pairing::from_gram(x, &RatMatrix::from_i64_rows(rows)).unwrap()
    }

    fn symplectic(x: &SpaceObj) -> Pairing {
        gram(x, &[&[0, 1], &[-1, 0]])
    }

    fn dot3() -> Pairing {
        let x = SpaceObj::even("X", "x", 3);
        gram(&x, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])
    }

    fn odd_plane() -> Pairing {
        let x = SpaceObj::odd("X", "x", 2);
        gram(&x, &[&[1, 0], &[0, 1]])
    }

    #[test]
    fn casimir_values() {
        let x = SpaceObj::even("X", "x", 2);
        let hyperbolic = gram(&x, &[&[0, 1], &[1, 0]]);
        let cases = [
            (symplectic(&x), PowerKind::Alt, -2),
            (dot3(), PowerKind::Sym, 3),
            (hyperbolic, PowerKind::Sym, 2),
        ];
        for (psi, kind, value) in cases {
            assert_eq!(psi.symmetry().kind(), Some(kind));
            let (a, b, v) = OperatorFamily::new(&psi, kind, 2).casimir_identities().unwrap();
            assert!(a.pass && b.pass);
            assert_eq!(v, Rat::from_int(value));
        }
    }

    #[test]
    fn non_perfect_pairing_has_no_casimir() {
        let x = SpaceObj::even("X", "x", 2);
        let psi = gram(&x, &[&[1, 0], &[0, 0]]);
        assert!(!psi.is_perfect());
        assert!(matches!(casimir(&psi), Err(Error::NotPerfect)));
    }

    #[test]
    fn odd_identity_gram_is_alternating() {
        let psi = odd_plane();
        assert_eq!(psi.symmetry(), Symmetry::Alternating);
        assert_eq!(psi.left().rank(), Rat::from_int(-2));
    }

    #[test]
    fn zero_pairing_reads_as_symmetric() {
        let x = SpaceObj::even("X", "x", 2);
        let psi = gram(&x, &[&[0, 0], &[0, 0]]);
        assert_eq!(psi.symmetry(), Symmetry::Symmetric);
        let d = dirac_lift(&psi, 2, PowerKind::Sym).unwrap();
        assert!(d.mat().is_zero());
    }

    #[test]
    fn dirac_degree_one_is_the_pairing() {
        let x = SpaceObj::even("X", "x", 2);
        let psi = symplectic(&x);
        let d = dirac_lift(&psi, 1, PowerKind::Alt).unwrap();
        assert_eq!(d.mat(), psi.mor().mat());
    }

    #[test]
    fn determinant_dirac_rank() {
        let x = SpaceObj::even("X", "x", 2);
        let d = dirac_lift(&symplectic(&x), 2, PowerKind::Alt).unwrap();
        assert_eq!((d.mat().rows(), d.mat().cols()), (2, 2));
        assert_eq!(d.rank(), 2);
    }

    #[test]
    fn mismatched_flavor_laplace_vanishes() {
        let x = SpaceObj::even("X", "x", 3);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let alt = random_perfect_pairing(&SpaceObj::even("X", "x", 4), Symmetry::Alternating, &mut rng).unwrap();
        let sym = random_perfect_pairing(&x, Symmetry::Symmetric, &mut rng).unwrap();
        for n in 2..=4 {
            assert!(laplace_lift(&alt, n, PowerKind::Sym).unwrap().mat().is_zero());
            assert!(laplace_lift(&sym, n, PowerKind::Alt).unwrap().mat().is_zero());
        }
    }

    #[test]
    fn quadratic_form_trace() {
        let d = laplace_lift(&dot3(), 2, PowerKind::Sym).unwrap();
        assert_eq!((d.mat().rows(), d.mat().cols()), (1, 6));
        assert_eq!(d.rank(), 1);
    }

    #[test]
    fn commutator_low_degrees() {
        let x = SpaceObj::even("X", "x", 2);
        let c = verify_casimir_commutator(&symplectic(&x), 0, PowerKind::Alt).unwrap();
        assert!(c.pass());
        assert_eq!(c.measured, Some(Rat::from_int(-2)));
        let c = verify_casimir_commutator(&dot3(), 1, PowerKind::Sym).unwrap();
        assert!(c.pass());
        assert_eq!(c.measured, Some(Rat::from_int(5)));
    }

    #[test]
    fn commutator_random_pairings() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let spaces = [
            SpaceObj::with_parities("X", "x", &[0, 0, 1]),
            SpaceObj::with_parities("X", "x", &[0, 0, 1, 1]),
        ];
        for x in &spaces {
            for sym in [Symmetry::Alternating, Symmetry::Symmetric] {
                let Ok(psi) = random_perfect_pairing(x, sym, &mut rng) else { continue };
                let kind = sym.kind().unwrap();
                let fam = OperatorFamily::new(&psi, kind, 6);
                for n in 0..=4 {
                    let c = fam.commutator(n).unwrap();
                    assert!(c.pass(), "{x:?} {kind} n={n}");
                    assert_eq!(c.measured, Some(c.predicted.clone()));
                }
            }
        }
    }

    #[test]
    fn lifted_squares_commute() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = SpaceObj::with_parities("X", "x", &[0, 0, 1, 1]);
        for sym in [Symmetry::Alternating, Symmetry::Symmetric] {
            let psi = random_perfect_pairing(&x, sym, &mut rng).unwrap();
            let kind = sym.kind().unwrap();
            let fam = OperatorFamily::new(&psi, kind, 5);
            for n in 1..=3 {
                assert!(fam.lifted_dirac_check(n).unwrap().pass);
                let reps = random_coset_reps_point(n, &mut rng);
                assert!(fam.lifted_dirac_check_with(n, &reps).unwrap().pass);
                assert!(fam.casimir_square_check(n).unwrap().pass);
            }
            for n in 2..=3 {
                for c in fam.lifted_laplace_checks(n).unwrap() {
                    assert!(c.pass, "{}", c.label);
                }
            }
        }
    }

    #[test]
    fn spectra_are_certified() {
        let cert = spectrum_certificate(&odd_plane(), 0, PowerKind::Alt).unwrap();
        assert_eq!(cert.forward_roots, vec![Rat::from_int(2)]);
        assert!(cert.pass());
        let cert = spectrum_certificate(&dot3(), 0, PowerKind::Sym).unwrap();
        assert_eq!(cert.forward_roots, vec![Rat::from_int(3)]);
        assert!(cert.pass());
        for n in 1..=4 {
            assert!(spectrum_certificate(&dot3(), n, PowerKind::Sym).unwrap().pass());
            assert!(spectrum_certificate(&odd_plane(), n, PowerKind::Alt).unwrap().pass());
        }
        let x = SpaceObj::even("X", "x", 2);
        assert!(matches!(
            spectrum_certificate(&symplectic(&x), 0, PowerKind::Alt),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn sections_split_laplace() {
        for n in 2..=4 {
            let s = laplace_section(&odd_plane(), n, PowerKind::Alt).unwrap();
            let d = laplace_lift(&odd_plane(), n, PowerKind::Alt).unwrap();
            assert!(d.compose(&s).unwrap().mat().is_identity());
            assert!(laplace_section(&dot3(), n, PowerKind::Sym).is_ok());
        }
    }

    #[test]
    fn decomposition_recovers_pairing() {
        let x = SpaceObj::with_parities("X", "x", &[0, 0, 1]);
        let psi = gram(&x, &[&[1, 2, 0], &[3, 4, 0], &[0, 0, 5]]);
        assert_eq!(psi.symmetry(), Symmetry::None);
        let a = psi.alternating_part().unwrap();
        let s = psi.symmetric_part().unwrap();
        assert_eq!(a.symmetry(), Symmetry::Alternating);
        assert_eq!(s.symmetry(), Symmetry::Symmetric);
        assert_eq!(a.mor().add(s.mor()).unwrap(), *psi.mor());
    }

    fn line_valued(psi: &Pairing, line: &SpaceObj) -> Pairing {
        let sigma = LinMor::canonical_iso(psi.target(), &line.tensor(line)).unwrap();
        psi.with_target(&sigma).unwrap()
    }

    #[test]
    fn twist_symmetry_follows_the_line() {
        let x = SpaceObj::with_parities("X", "x", &[0, 0, 0, 1, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let psi = random_perfect_pairing(&x, Symmetry::Symmetric, &mut rng).unwrap();
        let even = SpaceObj::even("L", "l", 1);
        let odd = SpaceObj::odd("L", "l", 1);
        let t = twist_pairing(&line_valued(&psi, &even), &even).unwrap();
        assert_eq!(t.twisted().symmetry(), Symmetry::Symmetric);
        let t = twist_pairing(&line_valued(&psi, &odd), &odd).unwrap();
        assert_eq!(t.twisted().symmetry(), Symmetry::Alternating);
        assert_eq!(t.twisted().symmetry(), t.expected_symmetry());
        assert!(t.twisted().is_perfect());
    }

    #[test]
    fn twist_by_unit_is_trivial() {
        let t = twist_pairing(&dot3(), &SpaceObj::unit()).unwrap();
        assert_eq!(t.twisted().mor().mat(), dot3().mor().mat());
    }

    #[test]
    fn twisted_laplace_squares_and_sections() {
        let x = SpaceObj::with_parities("X", "x", &[0, 0, 0, 1, 1]);
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let psi = random_perfect_pairing(&x, Symmetry::Symmetric, &mut rng).unwrap();
        for line in [SpaceObj::even("L", "l", 1), SpaceObj::odd("L", "l", 1)] {
            let t = twist_pairing(&line_valued(&psi, &line), &line).unwrap();
            for n in 2..=4 {
                assert!(t.laplace_square(n, PowerKind::Sym).unwrap().pass, "n={n}");
                let s = t.laplace_section(n, PowerKind::Sym).unwrap();
                assert_eq!(s.cod().dim(), PowerSpace::new(&x, n, PowerKind::Sym).dim());
            }
        }
        let odd = SpaceObj::odd("L", "l", 1);
        assert!(laplace_section(&line_valued(&psi, &odd), 2, PowerKind::Sym).is_ok());
    }

    #[test]
    fn kernel_objects() {
        let x = SpaceObj::even("X", "x", 2);
        let f = LinMor::new(x.clone(), x.clone(), RatMatrix::from_i64_rows(&[&[1, 1], &[0, 1]])).unwrap();
        let k = kernel_object(&f, &f.inverse().unwrap(), "K").unwrap();
        assert_eq!(k.dim(), 0);
        assert!(k.matches_nullspace);

        let y = SpaceObj::even("Y", "y", 3);
        let p = LinMor::new(y.clone(), x.clone(), RatMatrix::from_i64_rows(&[&[1, 0, 2], &[0, 1, -1]])).unwrap();
        let s = LinMor::new(x.clone(), y, RatMatrix::from_i64_rows(&[&[1, 0], &[0, 1], &[0, 0]])).unwrap();
        let k = kernel_object(&p, &s, "K").unwrap();
        assert_eq!(k.dim(), 1);
        assert!(k.matches_nullspace);
        assert!(matches!(kernel_object(&p, &s.scale(&Rat::from_int(2)), "K"), Err(Error::NotSection)));
    }

    #[test]
    fn laplace_kernel_is_the_nullspace() {
        let psi = dot3();
        for n in 2..=4 {
            let f = laplace_lift(&psi, n, PowerKind::Sym).unwrap();
            let s = laplace_section(&psi, n, PowerKind::Sym).unwrap();
            let k = kernel_object(&f, &s, "H").unwrap();
            assert!(k.matches_nullspace);
            assert_eq!(k.dim() + f.cod().dim(), f.dom().dim());
        }
    }

    #[test]
    fn identity_triple_squares() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let x = SpaceObj::with_parities("X", "x", &[0, 0, 1]);
        for sym in [Symmetry::Alternating, Symmetry::Symmetric] {
            let Ok(psi) = random_perfect_pairing(&x, sym, &mut rng) else { continue };
            let kind = sym.kind().unwrap();
            let triple = identity_triple(&psi).unwrap();
            let rho = triple.measured_rho(kind).unwrap().expect("proportional");
            assert_eq!(rho, Rat::from_int(2));
            for n in 2..=4 {
                assert!(triple.square(&rho, n, kind).unwrap().pass, "{kind} n={n}");
            }
        }
    }

    #[test]
    fn candidates_follow_the_recursion() {
        let (f, b) = spectrum_candidates(&Rat::from_int(3), 2);
        assert_eq!(b, vec![Rat::zero(), Rat::from_int(3)]);
        assert_eq!(f, vec![Rat::new(7, 6).unwrap(), Rat::new(10, 6).unwrap()]);
        let (f, b) = spectrum_candidates(&Rat::from_int(3), 1);
        assert_eq!(f, vec![Rat::new(5, 3).unwrap()]);
        assert!(b.is_empty());
    }
}
