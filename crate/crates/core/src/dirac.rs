//! Dirac operators on powers of `A_i = ∧ⁱV` or `∨ⁱV` when `g = 2i`: the four
//! pairings built from the duality morphisms, their constants, the squares
//! relating two Dirac operators to the Laplace operator, and kernels.

use crate::check::MapCheck;
use crate::error::{Error, Result};
use crate::exactnum::{binom, Rat};
use crate::gvect::{braiding, LinMor, SpaceObj};
use crate::laplace::{kernel_object, laplace_section, KernelObject, OperatorFamily, Pairing};
use crate::powers::{Duality, PowerKind};

fn int(n: usize) -> Rat {
    Rat::from_int(n as i64)
}

fn inv_binom(g: usize, k: usize) -> Rat {
    binom(&int(g), k as u32).recip().expect("binomial of g over k ≤ g is nonzero")
}

/// Constants attached to the two families of pentagons in degree `i` for a given `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiracConstants {
    /// Scalar on the bottom of the pentagon for `V`.
    pub rho_v: Rat,
    /// Weight of the `ψ̄_{i,i-1}` branch.
    pub nu_v_first: Rat,
    /// Weight of the `ψ̄_{g-i,g-i-1}` branch.
    pub nu_v_second: Rat,
    /// Scalar on the bottom of the pentagon for `V∨`.
    pub rho_vd: Rat,
    /// Weight of the `ψ_{g-i,i-1}` branch.
    pub nu_vd_first: Rat,
    /// Weight of the `ψ_{i,g-i-1}` branch.
    pub nu_vd_second: Rat,
}

/// The pentagon constants for `kind`, `g`, `i`, `r = rank V` and `top = rank A_g`.
pub fn pentagon_constants(kind: PowerKind, g: usize, i: usize, r: &Rat, top: &Rat) -> DiracConstants {
    let gi = g - i;
    let c_g1 = inv_binom(g, g - 1);
    let c_gi = inv_binom(g, gi);
    let c_i = inv_binom(g, i);
    let b = |t: Rat, k: usize| binom(&t, k as u32);
    match kind {
        PowerKind::Alt => {
            let r1 = b(r - &Rat::one(), g - 1);
            let ri = b(r - &int(i), gi);
            let rig = b(r + &int(i) - int(g), i);
            DiracConstants {
                rho_v: Rat::sign_pow(g as i64 - 1) * top * &c_g1 * &c_gi * &r1 * &ri * int(g),
                nu_v_first: Rat::sign_pow(gi as i64) * int(i),
                nu_v_second: Rat::sign_pow((i * gi.saturating_sub(1)) as i64) * int(gi),
                rho_vd: Rat::sign_pow(g as i64 - 1) * &c_g1 * &c_gi * &c_i * &r1 * &ri * &rig * int(g),
                nu_vd_first: Rat::sign_pow(((i + 1) * gi) as i64) * top * &c_i * &rig * int(i),
                nu_vd_second: Rat::sign_pow(i as i64) * &c_gi * &ri * int(gi),
            }
        }
        PowerKind::Sym => {
            let t = r + &int(g - 1);
            let t1 = b(t.clone(), g - 1);
            let tgi = b(t.clone(), gi);
            let ti = b(t, i);
            DiracConstants {
                rho_v: top * &c_g1 * &c_gi * &t1 * &tgi * int(g),
                nu_v_first: int(i),
                nu_v_second: int(gi),
                rho_vd: &c_g1 * &c_gi * &c_i * &t1 * &tgi * &ti * int(g),
                nu_vd_first: top * &c_i * &ti * int(i),
                nu_vd_second: &c_gi * &tgi * int(gi),
            }
        }
    }
}

/// `ρ^i` for `g = 2i`, with `r = rank V` and `r_l = rank L`.
///
/// Binomials of a rational top argument are falling-factorial binomials.
pub fn rho_constant(g: usize, i: usize, r: &Rat, r_l: &Rat, kind: PowerKind) -> Rat {
    let common = r_l * &inv_binom(g, g - 1) * inv_binom(g, i) * int(g) * Rat::new(1, i as i64).expect("i ≥ 1");
    match kind {
        PowerKind::Alt => {
            Rat::sign_pow(i as i64 + 1)
                * common
                * binom(&(r - &Rat::one()), (g - 1) as u32)
                * binom(&(r - &int(i)), i as u32)
        }
        PowerKind::Sym => {
            let t = r + &int(g - 1);
            common * binom(&t, (g - 1) as u32) * binom(&t, i as u32)
        }
    }
}

/// `(φ⊗1_B) ∘ (1_P⊗τ_{B,Q})` on `P⊗B⊗Q`.
fn interleave(phi: &LinMor, p: &SpaceObj, b: &SpaceObj, q: &SpaceObj) -> Result<LinMor> {
    let swap = LinMor::identity(p).tensor(&braiding(b, q));
    phi.tensor(&LinMor::identity(b)).compose_reassociated(&swap)
}

/// The pairings built from the duality morphisms of one `Duality`.
#[derive(Clone, Debug)]
pub struct PairingBuilder<'a> {
    dual: &'a Duality,
}

impl<'a> PairingBuilder<'a> {
    pub fn new(dual: &'a Duality) -> Self {
        PairingBuilder { dual }
    }

    fn a(&self, k: usize) -> &SpaceObj {
        self.dual.a(k).carrier()
    }

    fn a_dual(&self, k: usize) -> SpaceObj {
        self.a(k).dual()
    }

    fn g(&self) -> usize {
        self.dual.g()
    }

    fn need(&self, ok: bool, what: &str) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::Degree(format!("{what} is outside 0..=g = {}", self.g())))
        }
    }

    /// `i_{A_g} ∘ φ_{i,i}: A_i ⊗ A_i → L` (or `A_i ⊗ A_j → L` in general).
    pub fn multiplication(&self, i: usize, j: usize) -> Result<Pairing> {
        self.need(i + j == self.g(), "i + j ≠ g")?;
        let mor = self.dual.top_reflexivity().compose(&self.dual.phi(i, j)?)?;
        Pairing::new(mor, self.a(i), self.a(j))
    }

    /// `ψ_{j,1} = D^{j+1,g} ∘ φ_{j,1}: A_j ⊗ V → A_{g-j-1}∨ ⊗ L`.
    pub fn psi_one(&self, j: usize) -> Result<Pairing> {
        self.need(j < self.g(), "j + 1")?;
        let mor = self.dual.poincare_up(j + 1)?.compose(&self.dual.phi(j, 1)?)?;
        Pairing::new(mor, self.a(j), self.a(1))
    }

    /// `ψ_{j,k} = D^{g-1,g} ∘ φ_{j,k}: A_j ⊗ A_k → V∨ ⊗ L` with `j + k = g - 1`.
    pub fn psi_low(&self, j: usize, k: usize) -> Result<Pairing> {
        self.need(j + k + 1 == self.g(), "j + k + 1")?;
        let mor = self.dual.poincare_up(self.g() - 1)?.compose(&self.dual.phi(j, k)?)?;
        Pairing::new(mor, self.a(j), self.a(k))
    }

    /// Shared tail `A_j ⊗ B → A_{g-j}∨ ⊗ L ⊗ B → A_{g-j+k}∨ ⊗ L → A_{j-k} ⊗ L⁻¹ ⊗ L → A_{j-k}`,
    /// where `B = A_k∨`.
    fn bar(&self, j: usize, k: usize) -> Result<Pairing> {
        let g = self.g();
        self.need(j <= g && k <= j, "j or k")?;
        let b = self.a_dual(k);
        let l = self.dual.line();
        let first = self.dual.poincare_up(j)?.tensor(&LinMor::identity(&b));
        let second = interleave(&self.dual.phi_on_duals(g - j, k)?, &self.a_dual(g - j), &l, &b)?;
        let third = self.dual.poincare_down(g - j + k)?.tensor(&LinMor::identity(&l));
        let fourth = LinMor::identity(self.a(j - k)).tensor(&self.dual.ev_line_tau()?);
        let mor = fourth
            .compose_reassociated(&third)?
            .compose_reassociated(&second)?
            .compose_reassociated(&first)?;
        let mor = mor.retag(&self.a(j).tensor(&b), self.a(j - k))?;
        Pairing::new(mor, self.a(j), &b)
    }

    /// `ψ̄_{j,j-1}: A_j ⊗ A_{j-1}∨ → V`.
    pub fn psi_bar_top(&self, j: usize) -> Result<Pairing> {
        self.need(j >= 1, "j - 1")?;
        self.bar(j, j - 1)
    }

    /// `ψ̄_{j,1}: A_j ⊗ V∨ → A_{j-1}`.
    pub fn psi_bar_one(&self, j: usize) -> Result<Pairing> {
        self.need(j >= 1, "j - 1")?;
        self.bar(j, 1)
    }
}

/// A measured pentagon: the check against the stated scalar and the scalar actually found.
#[derive(Clone, Debug)]
pub struct ScaledCheck {
    pub check: MapCheck,
    pub predicted: Rat,
    /// `c` with `lhs = c · (unscaled rhs)`, if the two sides are proportional.
    pub measured: Option<Rat>,
}

impl ScaledCheck {
    fn new(label: String, lhs: &LinMor, unit_rhs: &LinMor, predicted: Rat) -> Result<Self> {
        let lhs = lhs.retag(unit_rhs.dom(), unit_rhs.cod())?;
        let measured = lhs.ratio_to(unit_rhs);
        let check = MapCheck::compare(label, &lhs, &unit_rhs.scale(&predicted));
        Ok(ScaledCheck { check, predicted, measured })
    }

    pub fn pass(&self) -> bool {
        self.check.pass
    }
}

/// The two unweighted branches of a pentagon and its unscaled bottom edge.
#[derive(Clone, Debug)]
pub struct PentagonBranches {
    pub first: LinMor,
    pub second: LinMor,
    pub bottom: LinMor,
}

impl PentagonBranches {
    fn weighted(&self, a: &Rat, b: &Rat) -> Result<LinMor> {
        self.first.scale(a).add(&self.second.scale(b))
    }
}

fn check_pentagon_degree(g: usize, i: usize) -> Result<()> {
    if i == 0 || i >= g {
        return Err(Error::Degree(format!("the pentagons need 0 < i < g, got i = {i}, g = {g}")));
    }
    Ok(())
}

/// Pentagon relating `ψ_{g-i,1}`, `ψ_{i,1}` and their barred partners to `φ_{i,g-i}`.
pub fn verify_pentagon_v(dual: &Duality, i: usize) -> Result<ScaledCheck> {
    let k = pentagon_constants(dual.kind(), dual.g(), i, &dual.rank(), &dual.top_rank());
    let parts = pentagon_v_branches(dual, i)?;
    let label = format!("pentagon ψ V {} i={i} g={}", dual.kind(), dual.g());
    ScaledCheck::new(label, &parts.weighted(&k.nu_v_first, &k.nu_v_second)?, &parts.bottom, k.rho_v)
}

pub fn pentagon_v_branches(dual: &Duality, i: usize) -> Result<PentagonBranches> {
    let g = dual.g();
    check_pentagon_degree(g, i)?;
    let b = PairingBuilder::new(dual);
    let (ai, agi, v) = (b.a(i), b.a(g - i), b.a(1));
    let l = dual.line();
    let first = b
        .psi_bar_top(i)?
        .mor()
        .tensor(&LinMor::identity(&l))
        .compose_reassociated(&LinMor::identity(ai).tensor(b.psi_one(g - i)?.mor()))?;
    let second = b
        .psi_bar_top(g - i)?
        .mor()
        .tensor(&LinMor::identity(&l))
        .compose_reassociated(&LinMor::identity(agi).tensor(b.psi_one(i)?.mor()))?
        .compose_reassociated(&braiding(ai, agi).tensor(&LinMor::identity(v)))?;
    let second = second.retag(first.dom(), first.cod())?;
    let bottom = LinMor::chain(&[
        &braiding(&l, v),
        &dual.top_reflexivity().tensor(&LinMor::identity(v)),
        &dual.phi(i, g - i)?.tensor(&LinMor::identity(v)),
    ])?;
    let first = first.retag(bottom.dom(), bottom.cod())?;
    let second = second.retag(bottom.dom(), bottom.cod())?;
    Ok(PentagonBranches { first, second, bottom })
}

/// Pentagon relating `ψ̄_{i,1}`, `ψ̄_{g-i,1}` and `ψ_{g-i,i-1}`, `ψ_{i,g-i-1}` to `φ_{g-i,i}`.
pub fn verify_pentagon_dual(dual: &Duality, i: usize) -> Result<ScaledCheck> {
    let k = pentagon_constants(dual.kind(), dual.g(), i, &dual.rank(), &dual.top_rank());
    let parts = pentagon_dual_branches(dual, i)?;
    let label = format!("pentagon ψ̄ V∨ {} i={i} g={}", dual.kind(), dual.g());
    ScaledCheck::new(label, &parts.weighted(&k.nu_vd_first, &k.nu_vd_second)?, &parts.bottom, k.rho_vd)
}

pub fn pentagon_dual_branches(dual: &Duality, i: usize) -> Result<PentagonBranches> {
    let g = dual.g();
    check_pentagon_degree(g, i)?;
    let b = PairingBuilder::new(dual);
    let (ai, agi, vd) = (b.a(i), b.a(g - i), b.a_dual(1));
    let first = b
        .psi_low(g - i, i - 1)?
        .mor()
        .compose_reassociated(&LinMor::identity(agi).tensor(b.psi_bar_one(i)?.mor()))?;
    let second = b
        .psi_low(i, g - i - 1)?
        .mor()
        .compose_reassociated(&LinMor::identity(ai).tensor(b.psi_bar_one(g - i)?.mor()))?
        .compose_reassociated(&braiding(agi, ai).tensor(&LinMor::identity(&vd)))?;
    let top = dual.a(g).carrier();
    let bottom = LinMor::chain(&[
        &LinMor::identity(&vd).tensor(&dual.top_reflexivity()),
        &braiding(top, &vd),
        &dual.phi(g - i, i)?.tensor(&LinMor::identity(&vd)),
    ])?;
    let first = first.retag(bottom.dom(), bottom.cod())?;
    let second = second.retag(bottom.dom(), bottom.cod())?;
    Ok(PentagonBranches { first, second, bottom })
}

/// The data for `g = 2i`: the duality of `V`, the five pairings and the constants.
#[derive(Clone, Debug)]
pub struct DiracSuite {
    dual: Duality,
    i: usize,
    /// `ψ_{g-i,1}: A_i ⊗ V → A_{i-1}∨ ⊗ L`.
    pub psi_one: Pairing,
    /// `ψ̄_{i,i-1}: A_i ⊗ A_{i-1}∨ → V`.
    pub psi_bar_top: Pairing,
    /// `ψ_{g-i,i-1}: A_i ⊗ A_{i-1} → V∨ ⊗ L`.
    pub psi_low: Pairing,
    /// `ψ̄_{i,1}: A_i ⊗ V∨ → A_{i-1}`.
    pub psi_bar_one: Pairing,
    /// `i_{A_g} ∘ φ_{i,i}: A_i ⊗ A_i → L`.
    pub multiplication: Pairing,
    pub constants: DiracConstants,
    pub rho: Rat,
    /// Inclusion `X → A_i` when the pairings have been restricted to a summand.
    restriction: Option<LinMor>,
}

/// Build the suite for `V`, `i ≥ 1` and `g = 2i`.
pub fn build_pairings(v: &SpaceObj, i: usize, kind: PowerKind) -> Result<DiracSuite> {
    if i == 0 {
        return Err(Error::Degree("Dirac suites need i ≥ 1".into()));
    }
    let g = 2 * i;
    let dual = Duality::new(v, g, kind)?;
    if dual.a(g).dim() != 1 {
        return Err(Error::Precondition(format!(
            "{}{} of {:?} has dimension {}, so it is not invertible",
            kind.symbol(),
            g,
            v,
            dual.a(g).dim()
        )));
    }
    let b = PairingBuilder::new(&dual);
    let psi_one = b.psi_one(g - i)?;
    let psi_bar_top = b.psi_bar_top(i)?;
    let psi_low = b.psi_low(g - i, i - 1)?;
    let psi_bar_one = b.psi_bar_one(i)?;
    let multiplication = b.multiplication(i, i)?;
    let constants = pentagon_constants(kind, g, i, &dual.rank(), &dual.top_rank());
    let rho = rho_constant(g, i, &dual.rank(), &dual.line().rank(), kind);
    Ok(DiracSuite {
        dual,
        i,
        psi_one,
        psi_bar_top,
        psi_low,
        psi_bar_one,
        multiplication,
        constants,
        rho,
        restriction: None,
    })
}

/// The four Dirac operators and the Laplace operator in one degree.
#[derive(Clone, Debug)]
pub struct DiracQuadruple {
    pub n: usize,
    pub flavor: PowerKind,
    /// `∂₁ⁿ`
    pub d_one: LinMor,
    /// `∂̄ⁿ_{i-1}`
    pub dbar_top: LinMor,
    /// `∂ⁿ_{i-1}`
    pub d_low: LinMor,
    /// `∂̄₁ⁿ`
    pub dbar_one: LinMor,
    /// `Δⁿ`, present for `n ≥ 2`.
    pub laplace: Option<LinMor>,
}

/// One composite of two Dirac operators compared with the scaled Laplace operator.
#[derive(Clone, Debug)]
pub struct SquareReading {
    pub flavor: PowerKind,
    /// `(∂̄ⁿ⁻¹_{i-1} ⊗ 1_L) ∘ ∂₁ⁿ` against `(ρ/2)(1⊗τ_{L,V})(Δⁿ⊗1_V)`.
    pub first: ScaledCheck,
    /// `∂ⁿ⁻¹_{i-1} ∘ ∂̄₁ⁿ` against `(ρ/2)(1⊗τ_{L,V∨})(Δⁿ⊗1_{V∨})`; present when `r_L = 1`.
    pub second: Option<ScaledCheck>,
}

impl SquareReading {
    pub fn pass(&self) -> bool {
        self.first.pass() && self.second.as_ref().is_none_or(ScaledCheck::pass)
    }
}

/// Both power flavors of the squares in one degree; `flavor` is the one the operators are defined on.
#[derive(Clone, Debug)]
pub struct SquareRootReport {
    pub n: usize,
    pub flavor: PowerKind,
    pub readings: Vec<SquareReading>,
}

impl SquareRootReport {
    /// The reading on the defining flavor.
    pub fn defining(&self) -> &SquareReading {
        self.readings.iter().find(|r| r.flavor == self.flavor).expect("defining flavor is always read")
    }

    /// Flavors whose reading holds.
    pub fn consistent_flavors(&self) -> Vec<PowerKind> {
        self.readings.iter().filter(|r| r.pass()).map(|r| r.flavor).collect()
    }
}

/// Kernel of one operator, split off by a section certified to be one.
#[derive(Clone, Debug)]
pub struct KernelReport {
    pub name: String,
    pub domain_dim: usize,
    pub kernel: KernelObject,
}

impl KernelReport {
    pub fn dim(&self) -> usize {
        self.kernel.dim()
    }
}

/// Kernels of `Δⁿ` (for `n ≥ 2`), `∂̄ⁿ_{i-1}` and `∂ⁿ_{i-1}`.
#[derive(Clone, Debug)]
pub struct KernelSuite {
    pub n: usize,
    pub laplace: Option<KernelReport>,
    pub dbar_top: KernelReport,
    pub d_low: KernelReport,
}

impl DiracSuite {
    pub fn duality(&self) -> &Duality {
        &self.dual
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn g(&self) -> usize {
        2 * self.i
    }

    pub fn kind(&self) -> PowerKind {
        self.dual.kind()
    }

    pub fn v(&self) -> &SpaceObj {
        self.dual.base()
    }

    pub fn v_dual(&self) -> SpaceObj {
        self.dual.base().dual()
    }

    pub fn line(&self) -> SpaceObj {
        self.dual.line()
    }

    /// `A_i` (or the summand it was restricted to), on whose powers the operators live.
    pub fn middle(&self) -> &SpaceObj {
        self.multiplication.left()
    }

    pub fn restriction(&self) -> Option<&LinMor> {
        self.restriction.as_ref()
    }

    /// The same suite with every pairing precomposed with `incl: X → A_i` in
    /// its `A_i` slots.
    pub fn restricted(&self, incl: &LinMor) -> Result<DiracSuite> {
        if incl.cod() != self.dual.a(self.i).carrier() || self.restriction.is_some() {
            return Err(Error::Precondition("restriction must land in the unrestricted A_i".into()));
        }
        let x = incl.dom();
        let one = |p: &Pairing| -> Result<Pairing> {
            let mor = p.mor().compose_reassociated(&incl.tensor(&LinMor::identity(p.right())))?;
            Pairing::new(mor, x, p.right())
        };
        let mult = self.multiplication.mor().compose_reassociated(&incl.tensor(incl))?;
        Ok(DiracSuite {
            dual: self.dual.clone(),
            i: self.i,
            psi_one: one(&self.psi_one)?,
            psi_bar_top: one(&self.psi_bar_top)?,
            psi_low: one(&self.psi_low)?,
            psi_bar_one: one(&self.psi_bar_one)?,
            multiplication: Pairing::new(mult, x, x)?,
            constants: self.constants.clone(),
            rho: self.rho.clone(),
            restriction: Some(incl.clone()),
        })
    }

    /// Powers of `A_i` carrying the operators: alternating for odd `i` in the
    /// alternating algebra, symmetric otherwise.
    pub fn flavor(&self) -> PowerKind {
        match self.kind() {
            PowerKind::Alt if self.i % 2 == 1 => PowerKind::Alt,
            _ => PowerKind::Sym,
        }
    }

    /// Flavor on which the multiplication pairing gives a vanishing Laplace operator.
    pub fn vanishing_flavor(&self) -> PowerKind {
        self.flavor().other()
    }

    /// The stated `ρ^i`.
    pub fn rho(&self) -> &Rat {
        &self.rho
    }

    /// `ρ_V^{i,g-i} / ν_V^{g-i,1}`, which the square-root identity identifies with `ρ^i`.
    pub fn rho_from_pentagon(&self) -> Rat {
        &self.constants.rho_v * &self.constants.nu_v_first.recip().expect("i ≥ 1")
    }

    /// The coincidences `ψ_{i,1} = ψ_{g-i,1}`, `ψ̄_{g-i,g-i-1} = ψ̄_{i,i-1}`,
    /// `ψ_{i,g-i-1} = ψ_{g-i,i-1}` and `ψ̄_{g-i,1} = ψ̄_{i,1}` for `g = 2i`.
    pub fn coincidences(&self) -> Result<Vec<MapCheck>> {
        let b = PairingBuilder::new(&self.dual);
        let (i, g) = (self.i, self.g());
        let cut = |p: Pairing| -> Result<LinMor> {
            match &self.restriction {
                Some(incl) => p.mor().compose_reassociated(&incl.tensor(&LinMor::identity(p.right()))),
                None => Ok(p.mor().clone()),
            }
        };
        let pair = |label: &str, p: Pairing, q: &Pairing| -> Result<MapCheck> {
            let p = cut(p)?.retag(q.mor().dom(), q.mor().cod())?;
            Ok(MapCheck::compare(label, &p, q.mor()))
        };
        Ok(vec![
            pair("ψ_{i,1} = ψ_{g-i,1}", b.psi_one(i)?, &self.psi_one)?,
            pair("ψ̄_{g-i,g-i-1} = ψ̄_{i,i-1}", b.psi_bar_top(g - i)?, &self.psi_bar_top)?,
            pair("ψ_{i,g-i-1} = ψ_{g-i,i-1}", b.psi_low(i, g - i - 1)?, &self.psi_low)?,
            pair("ψ̄_{g-i,1} = ψ̄_{i,1}", b.psi_bar_one(g - i)?, &self.psi_bar_one)?,
        ])
    }

    /// Both pentagons in degree `i`.
    pub fn verify_pentagons(&self) -> Result<Vec<ScaledCheck>> {
        Ok(vec![verify_pentagon_v(&self.dual, self.i)?, verify_pentagon_dual(&self.dual, self.i)?])
    }

    /// The operators of degree `n` on powers of the given flavor.
    pub fn quadruple_on(&self, n: usize, flavor: PowerKind) -> Result<DiracQuadruple> {
        if n == 0 {
            return Err(Error::Degree("Dirac operators start in degree 1".into()));
        }
        let fam = |p: &Pairing| OperatorFamily::new(p, flavor, n);
        Ok(DiracQuadruple {
            n,
            flavor,
            d_one: fam(&self.psi_one).dirac(n)?,
            dbar_top: fam(&self.psi_bar_top).dirac(n)?,
            d_low: fam(&self.psi_low).dirac(n)?,
            dbar_one: fam(&self.psi_bar_one).dirac(n)?,
            laplace: if n >= 2 { Some(fam(&self.multiplication).laplace(n)?) } else { None },
        })
    }

    pub fn dirac_quadruple(&self, n: usize) -> Result<DiracQuadruple> {
        self.quadruple_on(n, self.flavor())
    }

    /// The Laplace operator of the multiplication pairing on the other flavor; it should vanish.
    pub fn vanishing_laplace(&self, n: usize) -> Result<LinMor> {
        OperatorFamily::new(&self.multiplication, self.vanishing_flavor(), n).laplace(n)
    }

    fn square_reading(&self, n: usize, flavor: PowerKind) -> Result<SquareReading> {
        let (v, vd, l) = (self.v(), self.v_dual(), self.line());
        let half = &self.rho * &Rat::new(1, 2)?;
        let top = OperatorFamily::new(&self.multiplication, flavor, n);
        let delta = top.laplace(n)?;
        let low = top.power(n - 2)?.carrier().clone();
        let upper = self.quadruple_on(n, flavor)?;
        let lower = self.quadruple_on(n - 1, flavor)?;

        let lhs = lower.dbar_top.tensor(&LinMor::identity(&l)).compose_reassociated(&upper.d_one)?;
        let rhs = LinMor::identity(&low)
            .tensor(&braiding(&l, v))
            .compose_reassociated(&delta.tensor(&LinMor::identity(v)))?;
        let first = ScaledCheck::new(
            format!("(∂̄⊗1)∘∂₁ n={n} on {flavor}"),
            &lhs,
            &rhs,
            half.clone(),
        )?;

        let second = if self.line().rank().is_one() {
            let lhs = lower.d_low.compose_reassociated(&upper.dbar_one)?;
            let rhs = LinMor::identity(&low)
                .tensor(&braiding(&l, &vd))
                .compose_reassociated(&delta.tensor(&LinMor::identity(&vd)))?;
            Some(ScaledCheck::new(format!("∂∘∂̄₁ n={n} on {flavor}"), &lhs, &rhs, half)?)
        } else {
            None
        };
        Ok(SquareReading { flavor, first, second })
    }

    /// The two squares of degree `n ≥ 2`, read on both power flavors.
    pub fn verify_square_root(&self, n: usize) -> Result<SquareRootReport> {
        if n < 2 {
            return Err(Error::Degree("the squares need n ≥ 2".into()));
        }
        let flavor = self.flavor();
        let readings = vec![self.square_reading(n, flavor)?, self.square_reading(n, flavor.other())?];
        Ok(SquareRootReport { n, flavor, readings })
    }

    /// Rank positivity needed for the Laplace section: `ν·r_{A_i} > 0` and `r_L = 1`.
    pub fn positivity(&self) -> Result<()> {
        let flavor = self.flavor();
        let r = self.middle().rank();
        if !(flavor.nu() * &r).is_positive() {
            return Err(Error::Precondition(format!(
                "rank of {} is {r}, the wrong sign for {flavor} powers",
                self.middle().name()
            )));
        }
        if !self.line().rank().is_one() {
            return Err(Error::Precondition("L is not a square: its rank is not 1".into()));
        }
        Ok(())
    }

    /// Kernel of `Δⁿ` for `n ≥ 2`, split off by the Casimir section.
    pub fn laplace_kernel(&self, n: usize) -> Result<KernelReport> {
        self.positivity()?;
        let flavor = self.flavor();
        let f = OperatorFamily::new(&self.multiplication, flavor, n).laplace(n)?;
        let s = laplace_section(&self.multiplication, n, flavor)?;
        Ok(KernelReport { name: format!("Δ^{n}"), domain_dim: f.dom().dim(), kernel: kernel_object(&f, &s, "kerΔ")? })
    }

    /// The section of `Δⁿ⁺¹`, the degree-`n+1` operators and the measured squares there.
    fn lifted_square(&self, n: usize) -> Result<(LinMor, SpaceObj, DiracQuadruple, SquareReading)> {
        if n == 0 {
            return Err(Error::Degree("kernels start in degree 1".into()));
        }
        self.positivity()?;
        let (flavor, m) = (self.flavor(), n + 1);
        let s_delta = laplace_section(&self.multiplication, m, flavor)?;
        let low = OperatorFamily::new(&self.multiplication, flavor, m).power(m - 2)?.carrier().clone();
        Ok((s_delta, low, self.quadruple_on(m, flavor)?, self.square_reading(m, flavor)?))
    }

    fn nonzero_scalar(c: Option<&ScaledCheck>, what: &str) -> Result<Rat> {
        match c.and_then(|c| c.measured.as_ref()) {
            Some(x) if !x.is_zero() => Ok(x.clone()),
            _ => Err(Error::Precondition(format!("{what}: the square is not a nonzero multiple of Δ"))),
        }
    }

    /// Kernel of `∂̄ⁿ_{i-1}`.
    ///
    /// The section is `∂₁ⁿ⁺¹ ∘ (s_Δ ⊗ 1_V) ∘ α⁻¹` with `α` the measured
    /// multiple of `1⊗τ_{L,V}`, with the factor `L` dropped.
    pub fn dbar_kernel(&self, n: usize) -> Result<KernelReport> {
        let (s_delta, low, upper, reading) = self.lifted_square(n)?;
        let (v, l) = (self.v(), self.line());
        let c = Self::nonzero_scalar(Some(&reading.first), "∂̄ section")?;
        let alpha = LinMor::identity(&low).tensor(&braiding(&l, v)).scale(&c);
        let s = s_delta.tensor(&LinMor::identity(v)).compose_reassociated(&alpha.inverse()?)?;
        let s2 = upper.d_one.compose_reassociated(&s)?;
        let f = self.quadruple_on(n, self.flavor())?.dbar_top;
        let section = LinMor::new(f.cod().clone(), f.dom().clone(), s2.into_mat())?;
        Ok(KernelReport { name: format!("∂̄^{n}"), domain_dim: f.dom().dim(), kernel: kernel_object(&f, &section, "ker∂̄")? })
    }

    /// Kernel of `∂ⁿ_{i-1}`, with section `∂̄₁ⁿ⁺¹ ∘ (s_Δ ⊗ 1_{V∨}) ∘ α⁻¹`.
    pub fn d_kernel(&self, n: usize) -> Result<KernelReport> {
        let (s_delta, low, upper, reading) = self.lifted_square(n)?;
        let (vd, l) = (self.v_dual(), self.line());
        let c = Self::nonzero_scalar(reading.second.as_ref(), "∂ section")?;
        let alpha = LinMor::identity(&low).tensor(&braiding(&l, &vd)).scale(&c);
        let s = s_delta.tensor(&LinMor::identity(&vd)).compose_reassociated(&alpha.inverse()?)?;
        let s2 = upper.dbar_one.compose_reassociated(&s)?;
        let f = self.quadruple_on(n, self.flavor())?.d_low;
        let section = s2.retag(f.cod(), f.dom())?;
        Ok(KernelReport { name: format!("∂^{n}"), domain_dim: f.dom().dim(), kernel: kernel_object(&f, &section, "ker∂")? })
    }

    /// Kernels of `Δⁿ` (for `n ≥ 2`), `∂̄ⁿ_{i-1}` and `∂ⁿ_{i-1}`.
    pub fn kernel_suite(&self, n: usize) -> Result<KernelSuite> {
        let laplace = if n >= 2 { Some(self.laplace_kernel(n)?) } else { None };
        Ok(KernelSuite { n, laplace, dbar_top: self.dbar_kernel(n)?, d_low: self.d_kernel(n)? })
    }
}
