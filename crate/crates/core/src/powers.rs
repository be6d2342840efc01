//! Alternating and symmetric powers, their multiplication maps, and the
//! Poincaré duality morphisms built from them.

use std::collections::HashMap;
use std::fmt;

use crate::check::{all_pass, MapCheck};
use crate::error::{Error, Result};
use crate::exactnum::{binom, Rat, SparseMat};
use crate::gvect::{
    braiding, coev, ev, ev_tau, index_tuple, koszul_sign, reflexivity, tuple_index, LinMor,
    Parity, SpaceObj,
};
use crate::symalg::{Character, Perm};

/// Which power: alternating or symmetric.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PowerKind {
    Alt,
    Sym,
}

impl PowerKind {
    pub fn character(self) -> Character {
        match self {
            PowerKind::Alt => Character::Sign,
            PowerKind::Sym => Character::Trivial,
        }
    }

    pub fn other(self) -> PowerKind {
        match self {
            PowerKind::Alt => PowerKind::Sym,
            PowerKind::Sym => PowerKind::Alt,
        }
    }

    /// `-1` for alternating, `+1` for symmetric.
    pub fn nu(self) -> Rat {
        match self {
            PowerKind::Alt => -Rat::one(),
            PowerKind::Sym => Rat::one(),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            PowerKind::Alt => "∧",
            PowerKind::Sym => "∨",
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            PowerKind::Alt => "alt",
            PowerKind::Sym => "sym",
        }
    }
}

impl fmt::Display for PowerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

pub(crate) fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

fn wrap_label(l: &str) -> String {
    if l.contains(['⊗', '∧', '·']) {
        format!("({l})")
    } else {
        l.to_string()
    }
}

fn wrap_name(l: &str) -> String {
    if l.chars().count() > 1 {
        format!("({l})")
    } else {
        l.to_string()
    }
}

/// Enumerate nondecreasing tuples of length `n` over `0..d`.
fn sorted_tuples(d: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(d: usize, n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in start..d {
            cur.push(v);
            rec(d, n, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, n, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Distinct rearrangements of a sorted tuple, each with a permutation producing it.
fn arrangements(sorted: &[usize]) -> Vec<(Vec<usize>, Perm)> {
    fn rec(
        remaining: &mut Vec<(usize, usize)>,
        cur: &mut Vec<usize>,
        n: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for k in 0..remaining.len() {
            if remaining[k].1 == 0 {
                continue;
            }
            remaining[k].1 -= 1;
            cur.push(remaining[k].0);
            rec(remaining, cur, n, out);
            cur.pop();
            remaining[k].1 += 1;
        }
    }
    let n = sorted.len();
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for &v in sorted {
        match counts.last_mut() {
            Some((w, c)) if *w == v => *c += 1,
            _ => counts.push((v, 1)),
        }
    }
    let mut tuples = Vec::new();
    rec(&mut counts, &mut Vec::with_capacity(n), n, &mut tuples);
    tuples
        .into_iter()
        .map(|b| {
            // the m-th occurrence of a value in `sorted` goes to its m-th occurrence in `b`
            let mut seen: HashMap<usize, usize> = HashMap::new();
            let mut images = vec![0; n];
            for (j, &v) in sorted.iter().enumerate() {
                let m = seen.entry(v).or_insert(0);
                let pos = b.iter().enumerate().filter(|(_, &x)| x == v).nth(*m).unwrap().0;
                *m += 1;
                images[j] = pos + 1;
            }
            (b, Perm::from_images(images).expect("bijection"))
        })
        .collect()
}

/// A power `∧ⁿX` or `∨ⁿX` with its canonical inclusion into and projection from `⊗ⁿX`.
///
/// The basis is indexed by nondecreasing multi-indices whose orbit survives the
/// averager; the inclusion and projection are those obtained by splitting the
/// full averager along its pivot columns.
#[derive(Clone)]
pub struct PowerSpace {
    base: SpaceObj,
    kind: PowerKind,
    degree: usize,
    carrier: SpaceObj,
    multis: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
    incl: SparseMat,
    proj: SparseMat,
}

impl fmt::Debug for PowerSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PowerSpace({:?})", self.carrier)
    }
}

impl PowerSpace {
    pub fn new(base: &SpaceObj, degree: usize, kind: PowerKind) -> PowerSpace {
        let d = base.dim();
        let parities = base.parities();
        if degree == 0 {
            let one = SparseMat::identity(1);
            return PowerSpace {
                base: base.clone(),
                kind,
                degree,
                carrier: SpaceObj::unit(),
                multis: vec![vec![]],
                index: [(vec![], 0)].into_iter().collect(),
                incl: one.clone(),
                proj: one,
            };
        }
        if degree == 1 {
            let id = SparseMat::identity(d);
            return PowerSpace {
                base: base.clone(),
                kind,
                degree,
                carrier: base.clone(),
                multis: (0..d).map(|k| vec![k]).collect(),
                index: (0..d).map(|k| (vec![k], k)).collect(),
                incl: id.clone(),
                proj: id,
            };
        }
        let vanishing_parity: Parity = match kind {
            PowerKind::Alt => 0,
            PowerKind::Sym => 1,
        };
        let multis: Vec<Vec<usize>> = sorted_tuples(d, degree)
            .into_iter()
            .filter(|t| !t.windows(2).any(|w| w[0] == w[1] && parities[w[0]] == vanishing_parity))
            .collect();
        let total = d.pow(degree as u32);
        let chi = kind.character();
        let mut incl_cols = Vec::with_capacity(multis.len());
        let mut proj_cols: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); total];
        for (o, a) in multis.iter().enumerate() {
            let arr = arrangements(a);
            let weight = Rat::new(1, arr.len() as i64).expect("nonempty orbit");
            let mut col = Vec::with_capacity(arr.len());
            for (b, sigma) in &arr {
                let neg = koszul_sign(sigma, a, parities) ^ (chi.eval(sigma) < 0);
                let c = if neg { -Rat::one() } else { Rat::one() };
                let idx = tuple_index(b, d);
                col.push((idx, &c * &weight));
                proj_cols[idx].push((o, c));
            }
            incl_cols.push(col);
        }
        let sep = match kind {
            PowerKind::Alt => "∧",
            PowerKind::Sym => "·",
        };
        let labels: Vec<String> = multis
            .iter()
            .map(|a| a.iter().map(|&k| wrap_label(&base.labels()[k])).collect::<Vec<_>>().join(sep))
            .collect();
        let carrier_par: Vec<Parity> =
            multis.iter().map(|a| (a.iter().map(|&k| parities[k] as usize).sum::<usize>() % 2) as Parity).collect();
        let name = format!("{}{}{}", kind.symbol(), superscript(degree), wrap_name(base.name()));
        let carrier = SpaceObj::new(&name, labels, carrier_par).expect("distinct labels");
        let index = multis.iter().cloned().enumerate().map(|(k, a)| (a, k)).collect();
        let proj_rows = multis.len();
        PowerSpace {
            base: base.clone(),
            kind,
            degree,
            carrier,
            multis,
            index,
            incl: SparseMat::from_columns(total, incl_cols),
            proj: SparseMat::from_columns(proj_rows, proj_cols),
        }
    }

    pub fn base(&self) -> &SpaceObj {
        &self.base
    }

    pub fn kind(&self) -> PowerKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn carrier(&self) -> &SpaceObj {
        &self.carrier
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// Sorted multi-indices labelling the basis.
    pub fn multi_indices(&self) -> &[Vec<usize>] {
        &self.multis
    }

    /// Position of the basis vector containing `±e_b`, with that sign, or `None` if `e_b` projects to zero.
    pub fn project_multi(&self, b: &[usize]) -> Option<(usize, Rat)> {
        let idx = tuple_index(b, self.base.dim());
        self.proj.column(idx).first().map(|(r, v)| (*r, v.clone()))
    }

    pub fn index_of(&self, sorted: &[usize]) -> Option<usize> {
        self.index.get(sorted).copied()
    }

    pub(crate) fn incl_sparse(&self) -> &SparseMat {
        &self.incl
    }

    pub(crate) fn proj_sparse(&self) -> &SparseMat {
        &self.proj
    }

    /// Tensor power object `⊗ⁿ base`.
    pub fn tensor_obj(&self) -> SpaceObj {
        self.base.tensor_power(self.degree)
    }

    /// Inclusion into `⊗ⁿ base` as a dense morphism.
    pub fn incl(&self) -> LinMor {
        LinMor::from_sparse(self.carrier.clone(), self.tensor_obj(), &self.incl).expect("even by construction")
    }

    /// Projection from `⊗ⁿ base` as a dense morphism.
    pub fn proj(&self) -> LinMor {
        LinMor::from_sparse(self.tensor_obj(), self.carrier.clone(), &self.proj).expect("even by construction")
    }

    /// The multiplication map `φ_{i,j}: A_i ⊗ A_j → A_{i+j}`.
    pub fn multiply(&self, other: &PowerSpace) -> Result<LinMor> {
        if self.base != other.base || self.kind != other.kind {
            return Err(Error::PowerMismatch(format!("{:?} and {:?}", self.carrier, other.carrier)));
        }
        let target = PowerSpace::new(&self.base, self.degree + other.degree, self.kind);
        let m = target.proj.mul(&self.incl.kron(&other.incl))?;
        LinMor::from_sparse(self.carrier.tensor(&other.carrier), target.carrier.clone(), &m)
    }
}

/// Construct `∧ⁿv` or `∨ⁿv`.
pub fn power(v: &SpaceObj, n: usize, kind: PowerKind) -> PowerSpace {
    PowerSpace::new(v, n, kind)
}

/// `*ⁿf: *ⁿX → *ⁿY` for an even map `f: X → Y`.
pub fn power_map(f: &LinMor, n: usize, kind: PowerKind) -> Result<LinMor> {
    let (px, py) = (PowerSpace::new(f.dom(), n, kind), PowerSpace::new(f.cod(), n, kind));
    let (dx, dy) = (f.dom().dim(), f.cod().dim());
    let fs = SparseMat::from_dense(f.mat());
    let incl = px.incl_sparse();
    let mut cols = Vec::with_capacity(incl.cols());
    for c in 0..incl.cols() {
        let mut acc: HashMap<usize, Rat> = HashMap::new();
        for (idx, coef) in incl.column(c) {
            let mut partial = vec![(0usize, coef.clone())];
            for k in index_tuple(*idx, dx, n) {
                let col = fs.column(k);
                partial = partial
                    .iter()
                    .flat_map(|(p, pv)| col.iter().map(move |(r, v)| (p * dy + r, pv * v)))
                    .collect();
            }
            for (k, v) in partial {
                *acc.entry(k).or_insert_with(Rat::zero) += v;
            }
        }
        let mut col: Vec<(usize, Rat)> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        col.sort_by_key(|(k, _)| *k);
        cols.push(col);
    }
    let lifted = SparseMat::from_columns(dy.pow(n as u32), cols);
    LinMor::from_sparse(px.carrier().clone(), py.carrier().clone(), &py.proj_sparse().mul(&lifted)?)
}

/// `φ_{i,j}` for two powers of the same object.
pub fn multiply(a: &PowerSpace, b: &PowerSpace) -> Result<LinMor> {
    a.multiply(b)
}

/// `X → hom(Y,Z) = Z ⊗ Y∨`, the map corresponding to `phi: X⊗Y → Z`.
pub fn curry(phi: &LinMor, x: &SpaceObj, y: &SpaceObj) -> Result<LinMor> {
    let expected = x.tensor(y);
    if *phi.dom() != expected {
        return Err(Error::ObjectMismatch { expected: format!("{expected:?}"), found: format!("{:?}", phi.dom()) });
    }
    let step = LinMor::identity(x).tensor(&coev(y));
    phi.tensor(&LinMor::identity(&y.dual())).compose(&step)
}

/// Inverse of [`curry`]: `(1⊗ev_Y) ∘ (f⊗1)`.
pub fn uncurry(f: &LinMor, z: &SpaceObj, y: &SpaceObj) -> Result<LinMor> {
    let contract = LinMor::identity(z).tensor(&ev(y));
    contract.compose(&f.tensor(&LinMor::identity(y)))
}

/// Internal duality `hom(X,Y) = Y⊗X∨ → hom(Y∨,X∨) = X∨⊗Y∨∨`.
pub fn internal_duality(x: &SpaceObj, y: &SpaceObj) -> LinMor {
    let xd = x.dual();
    LinMor::identity(&xd)
        .tensor(&reflexivity(y))
        .compose(&braiding(y, &xd))
        .expect("objects match by construction")
}

/// How `⊗ᵏ(V∨)` is identified with `(⊗ᵏV)∨` before restricting to powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualConvention {
    /// `e∨_{a1}⊗…⊗e∨_{ak}` pairs with `e_{ak}⊗…⊗e_{a1}` (nested evaluations).
    Nested,
    /// The nested identification precomposed with the Koszul-signed order reversal.
    Braided,
}

/// Default identification convention.
pub const DEFAULT_DUAL_CONVENTION: DualConvention = DualConvention::Braided;

/// Identification `∧ᵏ(V∨) → (∧ᵏV)∨` (or its symmetric analogue).
pub fn dual_power_identification(
    v_pow: &PowerSpace,
    vd_pow: &PowerSpace,
    conv: DualConvention,
) -> Result<LinMor> {
    let k = v_pow.degree();
    if vd_pow.degree() != k || vd_pow.kind() != v_pow.kind() || *vd_pow.base() != v_pow.base().dual() {
        return Err(Error::PowerMismatch("dual identification needs matching powers of V and V∨".into()));
    }
    let d = v_pow.base().dim();
    let total = d.pow(k as u32);
    let parities = v_pow.base().parities();
    let rev = Perm::from_images((1..=k).rev().collect()).expect("reversal");
    let cols = (0..total)
        .map(|c| {
            let t = index_tuple(c, d, k);
            match conv {
                DualConvention::Nested => {
                    let r: Vec<usize> = t.iter().rev().copied().collect();
                    vec![(tuple_index(&r, d), Rat::one())]
                }
                DualConvention::Braided => {
                    let s = if koszul_sign(&rev, &t, parities) { -Rat::one() } else { Rat::one() };
                    vec![(c, s)]
                }
            }
        })
        .collect();
    let j = SparseMat::from_columns(total, cols);
    let m = v_pow.incl_sparse().transpose().mul(&j)?.mul(vd_pow.incl_sparse())?;
    LinMor::from_sparse(vd_pow.carrier().clone(), v_pow.carrier().dual(), &m)
}

/// Everything needed for the duality morphisms of `V` in degrees up to `g`:
/// powers of `V` and of `V∨`, and the identifications between them.
#[derive(Clone, Debug)]
pub struct Duality {
    v: SpaceObj,
    kind: PowerKind,
    g: usize,
    conv: DualConvention,
    up: Vec<PowerSpace>,
    down: Vec<PowerSpace>,
    iota: Vec<LinMor>,
}

impl Duality {
    pub fn new(v: &SpaceObj, g: usize, kind: PowerKind) -> Result<Self> {
        Self::with_convention(v, g, kind, DEFAULT_DUAL_CONVENTION)
    }

    pub fn with_convention(v: &SpaceObj, g: usize, kind: PowerKind, conv: DualConvention) -> Result<Self> {
        let vd = v.dual();
        let up: Vec<PowerSpace> = (0..=g + 1).map(|k| PowerSpace::new(v, k, kind)).collect();
        let down: Vec<PowerSpace> = (0..=g + 1).map(|k| PowerSpace::new(&vd, k, kind)).collect();
        let iota = (0..=g + 1)
            .map(|k| dual_power_identification(&up[k], &down[k], conv))
            .collect::<Result<Vec<_>>>()?;
        Ok(Duality { v: v.clone(), kind, g, conv, up, down, iota })
    }

    pub fn base(&self) -> &SpaceObj {
        &self.v
    }

    pub fn kind(&self) -> PowerKind {
        self.kind
    }

    pub fn g(&self) -> usize {
        self.g
    }

    pub fn convention(&self) -> DualConvention {
        self.conv
    }

    pub fn rank(&self) -> Rat {
        self.v.rank()
    }

    fn check_degree(&self, k: usize) -> Result<()> {
        if k > self.g + 1 {
            return Err(Error::Degree(format!("degree {k} beyond g+1 = {}", self.g + 1)));
        }
        Ok(())
    }

    /// `A_k`, a power of `V`.
    pub fn a(&self, k: usize) -> &PowerSpace {
        &self.up[k]
    }

    /// The same power of `V∨`.
    pub fn b(&self, k: usize) -> &PowerSpace {
        &self.down[k]
    }

    /// `ι_k: ∧ᵏ(V∨) → (∧ᵏV)∨`.
    pub fn iota(&self, k: usize) -> &LinMor {
        &self.iota[k]
    }

    /// The invertible object `L = A_g∨∨`.
    pub fn line(&self) -> SpaceObj {
        self.up[self.g].carrier().dual().dual()
    }

    /// Its inverse, realized as the top power of `V∨`.
    pub fn line_inv(&self) -> SpaceObj {
        self.down[self.g].carrier().clone()
    }

    pub fn phi(&self, i: usize, j: usize) -> Result<LinMor> {
        self.check_degree(i + j)?;
        self.up[i].multiply(&self.up[j])
    }

    pub fn phi_dual(&self, i: usize, j: usize) -> Result<LinMor> {
        self.check_degree(i + j)?;
        self.down[i].multiply(&self.down[j])
    }

    /// `D^{i,g}: A_i → A_{g-i}∨ ⊗ A_g∨∨`.
    pub fn poincare_up(&self, i: usize) -> Result<LinMor> {
        poincare_up_from(&self.up, i, self.g)
    }

    /// `D_{i,g}: A_i∨ → A_{g-i} ⊗ L⁻¹`.
    pub fn poincare_down(&self, i: usize) -> Result<LinMor> {
        let g = self.g;
        if i > g {
            return Err(Error::Degree(format!("i = {i} exceeds g = {g}")));
        }
        self.poincare_down_dual_power(i)?.compose(&self.iota[i].inverse()?)
    }

    /// `D_{i,g} ∘ ι_i`, defined on the power of `V∨` itself.
    pub fn poincare_down_dual_power(&self, i: usize) -> Result<LinMor> {
        let g = self.g;
        if i > g {
            return Err(Error::Degree(format!("i = {i} exceeds g = {g}")));
        }
        let raw = poincare_up_from(&self.down, i, g)?;
        let a_rest = self.up[g - i].carrier();
        let first = self.iota[g - i].transpose().compose(&reflexivity(a_rest))?.inverse()?;
        let second = reflexivity(self.down[g].carrier()).inverse()?;
        first.tensor(&second).compose(&raw)
    }

    /// Multiplication transported to duals: `A_a∨ ⊗ A_b∨ → A_{a+b}∨`.
    pub fn phi_on_duals(&self, a: usize, b: usize) -> Result<LinMor> {
        let inner = self.phi_dual(a, b)?;
        let pre = self.iota[a].inverse()?.tensor(&self.iota[b].inverse()?);
        LinMor::chain(&[&self.iota[a + b], &inner, &pre])
    }

    /// `ev^{g,τ}: L⁻¹ ⊗ L → 𝕀`.
    pub fn ev_line_tau(&self) -> Result<LinMor> {
        let y = self.line_inv();
        let to_dual = LinMor::identity(&y).tensor(&self.iota[self.g].transpose());
        ev_tau(&y).compose(&to_dual)
    }

    /// `ev^g: L ⊗ L⁻¹ → 𝕀`.
    pub fn ev_line(&self) -> Result<LinMor> {
        let y = self.line_inv();
        let to_dual = self.iota[self.g].transpose().tensor(&LinMor::identity(&y));
        ev(&y).compose(&to_dual)
    }

    /// `i_{A_g}: A_g → L`.
    pub fn top_reflexivity(&self) -> LinMor {
        reflexivity(self.up[self.g].carrier())
    }

    /// The predicted scalars of the two triangles, in order.
    pub fn predicted_triangle_scalars(&self, i: usize) -> (Rat, Rat) {
        triangle_scalars(self.kind, self.g, i, &self.rank())
    }

    /// Compose the two triangles on `A_i` and `A_{g-i}∨` and return the maps.
    pub fn triangles(&self, i: usize) -> Result<(LinMor, LinMor)> {
        let g = self.g;
        let l = self.line();
        let y = self.line_inv();
        let up = self.poincare_up(i)?;
        let down = self.poincare_down(g - i)?;
        let first = LinMor::chain(&[
            &LinMor::identity(self.up[i].carrier()).tensor(&self.ev_line_tau()?),
            &down.tensor(&LinMor::identity(&l)),
            &up,
        ])?;
        let second = LinMor::chain(&[
            &LinMor::identity(&self.up[g - i].carrier().dual()).tensor(&self.ev_line()?),
            &up.tensor(&LinMor::identity(&y)),
            &down,
        ])?;
        Ok((first, second))
    }
}

fn poincare_up_from(powers: &[PowerSpace], i: usize, g: usize) -> Result<LinMor> {
    if i > g {
        return Err(Error::Degree(format!("i = {i} exceeds g = {g}")));
    }
    let (ai, arest, ag) = (&powers[i], &powers[g - i], &powers[g]);
    let phi = ai.multiply(arest)?;
    let f = curry(&phi, ai.carrier(), arest.carrier())?;
    internal_duality(arest.carrier(), ag.carrier()).compose(&f)
}

/// `(-1)^{i(g-i)} C(g,g-i)⁻¹ C(r-i,g-i)` and its dual-side companion (alternating),
/// or `C(g,g-i)⁻¹ C(r+g-1,g-i)` and companion (symmetric).
pub fn triangle_scalars(kind: PowerKind, g: usize, i: usize, r: &Rat) -> (Rat, Rat) {
    let gi = (g - i) as u32;
    let ii = i as u32;
    let gr = Rat::from_int(g as i64);
    let inv = |x: Rat| x.recip().expect("binomial of integers g over k is nonzero");
    match kind {
        PowerKind::Alt => {
            let s = Rat::sign_pow((i * (g - i)) as i64);
            let first = &s * &inv(binom(&gr, gi)) * binom(&(r - &Rat::from_int(i as i64)), gi);
            let second = &s * &inv(binom(&gr, ii)) * binom(&(r + &Rat::from_int(i as i64 - g as i64)), ii);
            (first, second)
        }
        PowerKind::Sym => {
            let t = r + &Rat::from_int(g as i64 - 1);
            let first = inv(binom(&gr, gi)) * binom(&t, gi);
            let second = inv(binom(&gr, ii)) * binom(&t, ii);
            (first, second)
        }
    }
}

/// `D^{i,g}` for the powers of `v`.
pub fn poincare_up(v: &SpaceObj, i: usize, g: usize, kind: PowerKind) -> Result<LinMor> {
    if i > g {
        return Err(Error::Degree(format!("i = {i} exceeds g = {g}")));
    }
    Duality::new(v, g, kind)?.poincare_up(i)
}

/// `D_{i,g}` for the powers of `v`.
pub fn poincare_down(v: &SpaceObj, i: usize, g: usize, kind: PowerKind) -> Result<LinMor> {
    if i > g {
        return Err(Error::Degree(format!("i = {i} exceeds g = {g}")));
    }
    Duality::new(v, g, kind)?.poincare_down(i)
}

/// Outcome of comparing a composite against a predicted scalar multiple of the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarCheck {
    pub predicted: Rat,
    /// `None` when the composite is not a scalar multiple of the identity.
    pub computed: Option<Rat>,
    /// The source is zero-dimensional, so every scalar holds.
    pub vacuous: bool,
}

impl ScalarCheck {
    /// Compare an endomorphism against `predicted · id`.
    pub fn of_endomorphism(map: &LinMor, predicted: Rat) -> Self {
        if map.dom().dim() == 0 {
            return ScalarCheck { computed: Some(predicted.clone()), predicted, vacuous: true };
        }
        let id = LinMor::identity(map.dom());
        ScalarCheck { computed: map.ratio_to(&id), predicted, vacuous: false }
    }

    pub fn pass(&self) -> bool {
        self.vacuous || self.computed.as_ref() == Some(&self.predicted)
    }
}

/// Both triangle checks for one `(V, i, g, kind)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityScalarReport {
    pub first: ScalarCheck,
    pub second: ScalarCheck,
}

impl DualityScalarReport {
    pub fn pass(&self) -> bool {
        self.first.pass() && self.second.pass()
    }
}

pub fn check_triangles(dual: &Duality, i: usize) -> Result<DualityScalarReport> {
    let (p1, p2) = dual.predicted_triangle_scalars(i);
    let (t1, t2) = dual.triangles(i)?;
    Ok(DualityScalarReport {
        first: ScalarCheck::of_endomorphism(&t1, p1),
        second: ScalarCheck::of_endomorphism(&t2, p2),
    })
}

pub fn verify_duality_scalar(v: &SpaceObj, i: usize, g: usize, kind: PowerKind) -> Result<DualityScalarReport> {
    check_triangles(&Duality::new(v, g, kind)?, i)
}

/// `φ¹³: P ⊗ B ⊗ Q ⊗ C → R ⊗ B ⊗ C`, i.e. `(φ⊗1⊗1) ∘ (1⊗τ_{B,Q}⊗1)`.
pub fn phi13(phi: &LinMor, p: &SpaceObj, b: &SpaceObj, q: &SpaceObj, c: &SpaceObj) -> Result<LinMor> {
    let shuffle = LinMor::tensor_all(&[
        &LinMor::identity(p),
        &braiding(b, q),
        &LinMor::identity(c),
    ]);
    let mult = LinMor::tensor_all(&[phi, &LinMor::identity(b), &LinMor::identity(c)]);
    mult.compose(&shuffle)
}

/// Results of the pairing squares and the three-row pentagons for one `(V, i, g, kind)`.
#[derive(Clone, Debug)]
pub struct PairingDiagramReport {
    pub checks: Vec<MapCheck>,
}

impl PairingDiagramReport {
    pub fn pass(&self) -> bool {
        all_pass(&self.checks)
    }
}

impl Duality {
    /// Rank of the top power as a rational (±1 when it is invertible).
    pub fn top_rank(&self) -> Rat {
        self.up[self.g].carrier().rank()
    }

    /// Scalar on the right of the pairing squares.
    pub fn square_scalar(&self, i: usize) -> Rat {
        let g = self.g;
        let gi = (g - i) as u32;
        let r = self.rank();
        let inv = binom(&Rat::from_int(g as i64), gi).recip().expect("nonzero");
        match self.kind {
            PowerKind::Alt => inv * binom(&(&r - &Rat::from_int(i as i64)), gi),
            PowerKind::Sym => inv * binom(&(&r + &Rat::from_int(g as i64 - 1)), gi),
        }
    }

    /// Weights of the two branches of the pentagons.
    pub fn pentagon_weights(&self, i: usize) -> (Rat, Rat) {
        let g = self.g;
        let (ii, gi) = (Rat::from_int(i as i64), Rat::from_int((g - i) as i64));
        match self.kind {
            PowerKind::Alt => (
                Rat::sign_pow((g - i) as i64) * ii,
                Rat::sign_pow((i * (g - i).saturating_sub(1)) as i64) * gi,
            ),
            PowerKind::Sym => (ii, gi),
        }
    }

    /// Square for `V`: `φ¹³→L ∘ (D^{i,g} ⊗ D^{g-i,g}) = c · i_{A_g} ∘ φ_{i,g-i}`.
    pub fn square_up(&self, i: usize) -> Result<MapCheck> {
        let g = self.g;
        let l = self.line();
        let (ai_d, agi_d) = (self.up[i].carrier().dual(), self.up[g - i].carrier().dual());
        let prod = self.phi_on_duals(g - i, i)?;
        let m13 = phi13(&prod, &agi_d, &l, &ai_d, &l)?;
        let ag_d = self.up[g].carrier().dual();
        let close = ev_tau(&ag_d).tensor(&LinMor::identity(&l));
        let lhs = LinMor::chain(&[
            &close,
            &m13,
            &self.poincare_up(i)?.tensor(&self.poincare_up(g - i)?),
        ])?;
        let rhs = self.top_reflexivity().compose(&self.phi(i, g - i)?)?.scale(&self.square_scalar(i));
        Ok(MapCheck::compare(format!("square V i={i}"), &lhs, &rhs))
    }

    /// Square for `V∨`: `φ¹³→L⁻¹ ∘ (D_{i,g} ⊗ D_{g-i,g}) = c · φ^{V∨}_{i,g-i}` on powers of `V∨`.
    pub fn square_down(&self, i: usize) -> Result<MapCheck> {
        let g = self.g;
        let y = self.line_inv();
        let (agi, ai) = (self.up[g - i].carrier(), self.up[i].carrier());
        let m13 = phi13(&self.phi(g - i, i)?, agi, &y, ai, &y)?;
        let ag = self.up[g].carrier();
        let pair = ev_tau(ag).compose(&LinMor::identity(ag).tensor(&self.iota[g]))?;
        let close = pair.tensor(&LinMor::identity(&y));
        let lhs = LinMor::chain(&[
            &close,
            &m13,
            &self.poincare_down_dual_power(i)?.tensor(&self.poincare_down_dual_power(g - i)?),
        ])?;
        let rhs = self.phi_dual(i, g - i)?.scale(&self.square_scalar(i));
        Ok(MapCheck::compare(format!("square V∨ i={i}"), &lhs, &rhs))
    }

    fn pentagon_scalar(&self, i: usize) -> Rat {
        self.top_rank() * Rat::from_int(self.g as i64) * self.square_scalar(i)
    }

    /// Pentagon for `V` on `A_i ⊗ A_{g-i} ⊗ V`.
    pub fn pentagon_up(&self, i: usize) -> Result<MapCheck> {
        let g = self.g;
        let (ai, agi, v) = (self.up[i].carrier(), self.up[g - i].carrier(), &self.v);
        let l = self.line();
        let id = LinMor::identity;
        let top = LinMor::chain(&[
            &LinMor::tensor_all(&[&id(&self.up[g - 1].carrier().dual()), &id(&l), &self.top_reflexivity()]),
            &self.poincare_up(1)?.tensor(&self.phi(i, g - i)?),
            &braiding(&ai.tensor(agi), v),
        ])?
        .scale(&self.pentagon_scalar(i));
        let (w1, w2) = self.pentagon_weights(i);
        let mut left = LinMor::zero(top.dom(), top.cod());
        if i >= 1 {
            let step = id(ai).tensor(&self.phi(g - i, 1)?);
            let dd = self.poincare_up(i)?.tensor(&self.poincare_up(g - i + 1)?);
            let m13 = phi13(
                &self.phi_on_duals(g - i, i - 1)?,
                &agi.dual(),
                &l,
                &self.up[i - 1].carrier().dual(),
                &l,
            )?;
            left = left.add(&LinMor::chain(&[&m13, &dd, &step])?.scale(&w1))?;
        }
        if i < g {
            let swap = braiding(ai, agi).tensor(&id(v));
            let step = id(agi).tensor(&self.phi(i, 1)?);
            let dd = self.poincare_up(g - i)?.tensor(&self.poincare_up(i + 1)?);
            let m13 = phi13(
                &self.phi_on_duals(i, g - i - 1)?,
                &ai.dual(),
                &l,
                &self.up[g - i - 1].carrier().dual(),
                &l,
            )?;
            left = left.add(&LinMor::chain(&[&m13, &dd, &step, &swap])?.scale(&w2))?;
        }
        Ok(MapCheck::compare(format!("pentagon V i={i}"), &left, &top))
    }

    /// Pentagon for `V∨` on powers of `V∨`.
    pub fn pentagon_down(&self, i: usize) -> Result<MapCheck> {
        let g = self.g;
        let (bi, bgi, w) = (self.down[i].carrier(), self.down[g - i].carrier(), self.down[1].carrier());
        let y = self.line_inv();
        let id = LinMor::identity;
        let top = LinMor::chain(&[
            &self.poincare_down_dual_power(1)?.tensor(&self.phi_dual(i, g - i)?),
            &braiding(&bi.tensor(bgi), w),
        ])?
        .scale(&self.pentagon_scalar(i));
        let (w1, w2) = self.pentagon_weights(i);
        let mut left = LinMor::zero(top.dom(), top.cod());
        if i >= 1 {
            let step = id(bi).tensor(&self.phi_dual(g - i, 1)?);
            let dd = self.poincare_down_dual_power(i)?.tensor(&self.poincare_down_dual_power(g - i + 1)?);
            let m13 = phi13(&self.phi(g - i, i - 1)?, self.up[g - i].carrier(), &y, self.up[i - 1].carrier(), &y)?;
            left = left.add(&LinMor::chain(&[&m13, &dd, &step])?.scale(&w1))?;
        }
        if i < g {
            let swap = braiding(bi, bgi).tensor(&id(w));
            let step = id(bgi).tensor(&self.phi_dual(i, 1)?);
            let dd = self.poincare_down_dual_power(g - i)?.tensor(&self.poincare_down_dual_power(i + 1)?);
            let m13 = phi13(&self.phi(i, g - i - 1)?, self.up[i].carrier(), &y, self.up[g - i - 1].carrier(), &y)?;
            left = left.add(&LinMor::chain(&[&m13, &dd, &step, &swap])?.scale(&w2))?;
        }
        Ok(MapCheck::compare(format!("pentagon V∨ i={i}"), &left, &top))
    }

    /// Both squares and both pentagons for degree `i`.
    pub fn pairing_diagrams(&self, i: usize) -> Result<PairingDiagramReport> {
        if i > self.g {
            return Err(Error::Degree(format!("i = {i} exceeds g = {}", self.g)));
        }
        let mut checks = vec![self.square_up(i)?, self.square_down(i)?];
        if self.g >= 1 {
            checks.push(self.pentagon_up(i)?);
            checks.push(self.pentagon_down(i)?);
        }
        Ok(PairingDiagramReport { checks })
    }
}

pub fn verify_pairing_diagrams(v: &SpaceObj, i: usize, g: usize, kind: PowerKind) -> Result<PairingDiagramReport> {
    Duality::new(v, g, kind)?.pairing_diagrams(i)
}
