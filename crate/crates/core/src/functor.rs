//! Sign functors between graded realizations: the identity, the parity shift and
//! their composites. Morphisms are carried to the same matrix between the
//! corresponding constructions over `F(V)`, so every sign is a braiding sign.

use crate::dirac::{build_pairings, DiracSuite};
use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::gvect::{braiding, LinMor, SpaceObj};
use crate::powers::{Duality, PowerKind};
use crate::quat::{motive_suite, QuatObject};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorFunctor {
    name: String,
    shifts: usize,
}

pub fn identity_functor() -> TensorFunctor {
    TensorFunctor { name: "id".into(), shifts: 0 }
}

pub fn parity_shift() -> TensorFunctor {
    TensorFunctor { name: "Π".into(), shifts: 1 }
}

impl TensorFunctor {
    pub fn name(&self) -> &str {
        &self.name
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &TensorFunctor) -> TensorFunctor {
        TensorFunctor { name: format!("{}∘{}", other.name, self.name), shifts: self.shifts + other.shifts }
    }

    fn flips(&self) -> bool {
        self.shifts % 2 == 1
    }

    /// Image of a generating object.
    pub fn apply_obj(&self, v: &SpaceObj) -> SpaceObj {
        if self.flips() {
            v.parity_shifted()
        } else {
            v.clone()
        }
    }

    /// `F(f)` as a morphism `dom → cod`, where `dom` and `cod` are the images
    /// of the source and target built over `F(V)`.
    pub fn apply_mor(&self, f: &LinMor, dom: &SpaceObj, cod: &SpaceObj) -> Result<LinMor> {
        LinMor::new(dom.clone(), cod.clone(), f.mat().clone())
    }

    /// Image of a quaternionic object: `F(θ)(b) = F(θ(b))`.
    pub fn apply_quat(&self, q: &QuatObject) -> QuatObject {
        if self.flips() {
            q.parity_shifted()
        } else {
            q.clone()
        }
    }
}

/// `ε` and `η` of a functor relative to a base object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorSigns {
    pub epsilon: Rat,
    pub eta: Rat,
}

impl FunctorSigns {
    /// Power kind on the target side: `Alt` and `Sym` swap when `ε = -1`.
    pub fn map_kind(&self, kind: PowerKind) -> PowerKind {
        if self.epsilon.is_one() {
            kind
        } else {
            kind.other()
        }
    }

    pub fn eta_pow(&self, e: usize) -> Rat {
        if self.eta.is_one() || e.is_multiple_of(2) {
            Rat::one()
        } else {
            -Rat::one()
        }
    }
}

fn braid_sign(f: &TensorFunctor, x: &SpaceObj, y: &SpaceObj, fx: &SpaceObj, fy: &SpaceObj) -> Result<Rat> {
    let image = f.apply_mor(&braiding(x, y), &fx.tensor(fy), &fy.tensor(fx))?;
    let target = braiding(fx, fy);
    match image.mat().scalar_ratio(target.mat()) {
        Some(c) if c.is_one() || (-&c).is_one() => Ok(c),
        _ => Err(Error::NotSignFunctor(format!("F(τ_{{{},{}}}) is not ±τ", x.name(), y.name()))),
    }
}

pub fn measure_signs(f: &TensorFunctor, v: &SpaceObj) -> Result<FunctorSigns> {
    let fv = f.apply_obj(v);
    let (vd, fvd) = (v.dual(), fv.dual());
    let epsilon = braid_sign(f, v, v, &fv, &fv)?;
    if braid_sign(f, &vd, &vd, &fvd, &fvd)? != epsilon {
        return Err(Error::NotSignFunctor("F(τ_{V∨,V∨}) and F(τ_{V,V}) carry different signs".into()));
    }
    let eta = braid_sign(f, &vd, v, &fvd, &fv)?;
    Ok(FunctorSigns { epsilon, eta })
}

/// One line of a functoriality table: `F(source) = predicted · target`.
#[derive(Clone, Debug)]
pub struct SignRow {
    pub label: String,
    pub source_kind: PowerKind,
    pub target_kind: PowerKind,
    pub predicted: Rat,
    /// `None` when `F(source)` is not a scalar multiple of the target.
    pub measured: Option<Rat>,
    /// Both sides vanish, so every sign fits.
    pub vanishes: bool,
}

impl SignRow {
    fn compare(label: String, kinds: (PowerKind, PowerKind), predicted: Rat, src: &LinMor, dst: &LinMor) -> SignRow {
        let vanishes = src.mat().is_zero() && dst.mat().is_zero();
        let measured = if vanishes {
            Some(predicted.clone())
        } else if src.mat().rows() != dst.mat().rows() || src.mat().cols() != dst.mat().cols() {
            None
        } else {
            src.mat().scalar_ratio(dst.mat()).filter(|c| !c.is_zero())
        };
        SignRow { label, source_kind: kinds.0, target_kind: kinds.1, predicted, measured, vanishes }
    }

    /// `F(source)` is `±` the target.
    pub fn is_sign(&self) -> bool {
        self.measured.as_ref().is_some_and(|c| c.is_one() || (-c).is_one())
    }

    pub fn pass(&self) -> bool {
        self.measured.as_ref() == Some(&self.predicted)
    }
}

#[derive(Clone, Debug)]
pub struct FunctorReport {
    pub functor: String,
    pub signs: FunctorSigns,
    pub rows: Vec<SignRow>,
}

impl FunctorReport {
    pub fn pass(&self) -> bool {
        self.rows.iter().all(SignRow::pass)
    }

    pub fn failures(&self) -> Vec<&SignRow> {
        self.rows.iter().filter(|r| !r.pass()).collect()
    }
}

fn has_line(d: &Duality) -> bool {
    d.a(d.g()).dim() == 1
}

/// Compare `F(D^{i,g})` and `F(D_{i,g})` with the duality morphisms of `F(V)`.
///
/// Besides the two individual rows per kind there is a row for the product of
/// the signs of `D^{i,g}` and `D_{g-i,g}`, which is what the composite of the
/// two sees.
pub fn verify_functor_duality(f: &TensorFunctor, v: &SpaceObj, i: usize, g: usize) -> Result<FunctorReport> {
    if i > g {
        return Err(Error::Degree(format!("i = {i} exceeds g = {g}")));
    }
    let signs = measure_signs(f, v)?;
    let fv = f.apply_obj(v);
    let up_exp = |k: usize| (k * k + k) / 2;
    let down_exp = |k: usize| (k * k - k) / 2;
    let mut rows = Vec::new();
    for kind in [PowerKind::Alt, PowerKind::Sym] {
        let target = signs.map_kind(kind);
        let (src, dst) = (Duality::new(v, g, kind)?, Duality::new(&fv, g, target)?);
        if !has_line(&src) || !has_line(&dst) {
            continue;
        }
        let kinds = (kind, target);
        let up = SignRow::compare(format!("D^{{{i},{g}}}"), kinds, signs.eta_pow(up_exp(i)), &src.poincare_up(i)?, &dst.poincare_up(i)?);
        let down = SignRow::compare(
            format!("D_{{{i},{g}}}"),
            kinds,
            signs.eta_pow(down_exp(i)),
            &src.poincare_down(i)?,
            &dst.poincare_down(i)?,
        );
        let partner = SignRow::compare(
            format!("D_{{{},{g}}}", g - i),
            kinds,
            signs.eta_pow(down_exp(g - i)),
            &src.poincare_down(g - i)?,
            &dst.poincare_down(g - i)?,
        );
        let product = SignRow {
            label: format!("D_{{{},{g}}}·D^{{{i},{g}}}", g - i),
            source_kind: kind,
            target_kind: target,
            predicted: signs.eta_pow(up_exp(i) + down_exp(g - i)),
            measured: up.measured.as_ref().zip(partner.measured.as_ref()).map(|(a, b)| a * b),
            vanishes: false,
        };
        rows.extend([up, down, product]);
    }
    Ok(FunctorReport { functor: f.name().into(), signs, rows })
}

/// Operator rows for `F` applied to `src`, compared with `dst` built over `F(V)`.
fn operator_rows(signs: &FunctorSigns, src: &DiracSuite, dst: &DiracSuite, n: usize) -> Result<Vec<SignRow>> {
    let (i, g) = (src.i(), src.g());
    let mut rows = Vec::new();
    for flavor in [PowerKind::Alt, PowerKind::Sym] {
        // Alt^n(A_i) is built on degree-i elements, so it changes flavor with i odd
        let target = if !signs.epsilon.is_one() && i % 2 == 1 { flavor.other() } else { flavor };
        let (a, b) = (src.quadruple_on(n, flavor)?, dst.quadruple_on(n, target)?);
        let tag = |op: &str| format!("{op} on {}^{n}(A_{i})", flavor.symbol());
        let kinds = (flavor, target);
        if let (Some(x), Some(y)) = (&a.laplace, &b.laplace) {
            rows.push(SignRow::compare(tag("Δ"), kinds, Rat::one(), x, y));
        }
        rows.push(SignRow::compare(tag("∂̄_{i-1}"), kinds, signs.eta_pow(i * (i + 1) / 2 + 1), &a.dbar_top, &b.dbar_top));
        rows.push(SignRow::compare(tag("∂_{i-1}"), kinds, signs.eta_pow(g * (g - 1) / 2), &a.d_low, &b.d_low));
    }
    Ok(rows)
}

/// The Laplace and Dirac rows for the suite of `V` against the suite of `F(V)`.
pub fn verify_functor_operators(f: &TensorFunctor, suite: &DiracSuite, n: usize) -> Result<FunctorReport> {
    let signs = measure_signs(f, suite.v())?;
    let dst = build_pairings(&f.apply_obj(suite.v()), suite.i(), signs.map_kind(suite.kind()))?;
    Ok(FunctorReport { functor: f.name().into(), rows: operator_rows(&signs, suite, &dst, n)?, signs })
}

/// `F((A₂)₋) = (A₂')₋`, `F(M_k) = M_k(F)` for `k ≤ k_max`, and the restricted
/// operator rows for `n ≤ n_max`.
#[derive(Clone, Debug)]
pub struct MotiveFunctorReport {
    pub functor: String,
    pub minus_part: bool,
    /// `(k, F(M_k) = M_k(F))`
    pub models: Vec<(usize, bool)>,
    pub operators: FunctorReport,
}

impl MotiveFunctorReport {
    pub fn models_pass(&self) -> bool {
        self.minus_part && self.models.iter().all(|(_, ok)| *ok)
    }
}

pub fn verify_functor_motives(f: &TensorFunctor, q: &QuatObject, k_max: usize, n_max: usize) -> Result<MotiveFunctorReport> {
    let src = motive_suite(q)?;
    let dst = motive_suite(&f.apply_quat(q))?;
    let signs = measure_signs(f, q.space())?;
    let minus_part = src.pm.projector.mat() == dst.pm.projector.mat();
    let mut models = Vec::new();
    for k in 1..=k_max {
        let (a, b) = (src.motive_model(k)?, dst.motive_model(k)?);
        models.push((k, a.incl.mat().same_column_span(b.incl.mat())));
    }
    let mut rows = Vec::new();
    for n in 1..=n_max {
        rows.extend(operator_rows(&signs, &src.minus, &dst.minus, n)?);
    }
    let operators = FunctorReport { functor: f.name().into(), signs, rows };
    Ok(MotiveFunctorReport { functor: f.name().into(), minus_part, models, operators })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(c: i64) -> Rat {
        Rat::from_int(c)
    }

    #[test]
    fn signs_of_identity_and_shift() {
        let v = SpaceObj::even("V", "v", 2);
        let id = measure_signs(&identity_functor(), &v).unwrap();
        assert_eq!((id.epsilon, id.eta), (pm(1), pm(1)));
        let sh = measure_signs(&parity_shift(), &v).unwrap();
        assert_eq!((sh.epsilon.clone(), sh.eta.clone()), (pm(-1), pm(-1)));
        let twice = parity_shift().then(&parity_shift());
        let tw = measure_signs(&twice, &v).unwrap();
        assert_eq!((tw.epsilon.clone(), tw.eta.clone()), (&sh.epsilon * &sh.epsilon, &sh.eta * &sh.eta));
        assert_eq!(twice.apply_obj(&v), v);
        assert_eq!(measure_signs(&parity_shift(), &SpaceObj::odd("V", "v", 3)).unwrap().epsilon, pm(-1));
    }

    #[test]
    fn mixed_parity_is_not_a_sign_functor() {
        let v = SpaceObj::with_parities("V", "v", &[0, 1]);
        assert!(matches!(measure_signs(&parity_shift(), &v), Err(Error::NotSignFunctor(_))));
        assert!(measure_signs(&identity_functor(), &v).is_ok());
    }

    #[test]
    fn identity_rows_are_trivial() {
        let v = SpaceObj::even("V", "v", 2);
        let r = verify_functor_duality(&identity_functor(), &v, 1, 2).unwrap();
        assert!(r.pass() && !r.rows.is_empty());
        let suite = build_pairings(&v, 1, PowerKind::Alt).unwrap();
        assert!(verify_functor_operators(&identity_functor(), &suite, 2).unwrap().pass());
    }

    #[test]
    fn shift_exchanges_kinds_up_to_sign() {
        for g in 1..=4 {
            let v = SpaceObj::even("V", "v", g);
            for i in 0..=g {
                let r = verify_functor_duality(&parity_shift(), &v, i, g).unwrap();
                assert!(!r.rows.is_empty());
                assert!(r.rows.iter().all(|row| row.is_sign() && row.target_kind == row.source_kind.other()));
                for chunk in r.rows.chunks(3) {
                    // the composite only sees the product of the two signs
                    assert!(chunk[2].pass(), "g={g} i={i}");
                    // individually, D^{i,g} picks up (-1)^{g(g-i)+g} from the braiding and reflexivity on A_g
                    assert_eq!(chunk[0].measured, Some(Rat::sign_pow((g * (g - i) + g) as i64)));
                }
            }
        }
    }
}
