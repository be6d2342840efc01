//! Finite-dimensional Z/2-graded rational vector spaces with the Koszul braiding,
//! duals, evaluation and coevaluation.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::{Rat, RatMatrix, SparseMat};
use crate::symalg::Perm;

/// Parity of a basis vector: 0 even, 1 odd.
pub type Parity = u8;

/// Graded space with a named, parity-tagged basis.
///
/// Equality compares basis labels and parities; the display name is cosmetic.
#[derive(Clone)]
pub struct SpaceObj {
    name: Arc<str>,
    labels: Arc<[String]>,
    parities: Arc<[Parity]>,
}

impl PartialEq for SpaceObj {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels)
            && self.parities == other.parities
    }
}

impl Eq for SpaceObj {}

const UNIT_LABEL: &str = "1";

fn wrap(label: &str) -> String {
    if label.contains('⊗') {
        format!("({label})")
    } else {
        label.to_string()
    }
}

impl SpaceObj {
    pub fn new(name: &str, labels: Vec<String>, parities: Vec<Parity>) -> Result<Self> {
        if labels.len() != parities.len() {
            return Err(Error::Shape("label and parity counts differ".into()));
        }
        if parities.iter().any(|&p| p > 1) {
            return Err(Error::Shape("parity must be 0 or 1".into()));
        }
        let mut sorted: Vec<&String> = labels.iter().collect();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Shape("basis labels must be distinct".into()));
        }
        Ok(SpaceObj { name: name.into(), labels: labels.into(), parities: parities.into() })
    }

    /// Space with basis `{prefix}1..{prefix}n` and the given parities.
    pub fn with_parities(name: &str, prefix: &str, parities: &[Parity]) -> Self {
        let labels = (1..=parities.len()).map(|k| format!("{prefix}{k}")).collect();
        Self::new(name, labels, parities.to_vec()).expect("generated labels are distinct")
    }

    pub fn even(name: &str, prefix: &str, dim: usize) -> Self {
        Self::with_parities(name, prefix, &vec![0; dim])
    }

    pub fn odd(name: &str, prefix: &str, dim: usize) -> Self {
        Self::with_parities(name, prefix, &vec![1; dim])
    }

    /// The tensor unit: one even basis vector labelled `1`.
    pub fn unit() -> Self {
        SpaceObj {
            name: "𝕀".into(),
            labels: vec![UNIT_LABEL.to_string()].into(),
            parities: vec![0].into(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.labels.len() == 1 && self.labels[0] == UNIT_LABEL && self.parities[0] == 0
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(&self, name: &str) -> Self {
        SpaceObj { name: name.into(), ..self.clone() }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn parity(&self, k: usize) -> Parity {
        self.parities[k]
    }

    pub fn is_invertible(&self) -> bool {
        self.dim() == 1
    }

    pub fn even_count(&self) -> usize {
        self.parities.iter().filter(|&&p| p == 0).count()
    }

    pub fn odd_count(&self) -> usize {
        self.dim() - self.even_count()
    }

    /// Same labels with every parity flipped.
    pub fn parity_shifted(&self) -> Self {
        SpaceObj {
            name: format!("Π{}", self.name).into(),
            labels: self.labels.iter().map(|l| format!("Π{l}")).collect::<Vec<_>>().into(),
            parities: self.parities.iter().map(|p| 1 - p).collect::<Vec<_>>().into(),
        }
    }

    pub fn tensor(&self, other: &SpaceObj) -> SpaceObj {
        if self.is_unit() {
            return other.clone();
        }
        if other.is_unit() {
            return self.clone();
        }
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        let mut parities = Vec::with_capacity(self.dim() * other.dim());
        for (la, pa) in self.labels.iter().zip(self.parities.iter()) {
            for (lb, pb) in other.labels.iter().zip(other.parities.iter()) {
                labels.push(format!("{la}⊗{lb}"));
                parities.push((pa + pb) % 2);
            }
        }
        SpaceObj {
            name: format!("{}⊗{}", wrap(&self.name), wrap(&other.name)).into(),
            labels: labels.into(),
            parities: parities.into(),
        }
    }

    pub fn tensor_all(objs: &[&SpaceObj]) -> SpaceObj {
        objs.iter().fold(SpaceObj::unit(), |acc, x| acc.tensor(x))
    }

    pub fn tensor_power(&self, n: usize) -> SpaceObj {
        (0..n).fold(SpaceObj::unit(), |acc, _| acc.tensor(self))
    }

    pub fn direct_sum(&self, other: &SpaceObj) -> SpaceObj {
        let labels: Vec<String> = self
            .labels
            .iter()
            .map(|l| format!("{l}⊕0"))
            .chain(other.labels.iter().map(|l| format!("0⊕{l}")))
            .collect();
        let parities: Vec<Parity> =
            self.parities.iter().chain(other.parities.iter()).copied().collect();
        SpaceObj {
            name: format!("{}⊕{}", self.name, other.name).into(),
            labels: labels.into(),
            parities: parities.into(),
        }
    }

    /// Dual object; the unit is self-dual.
    pub fn dual(&self) -> SpaceObj {
        if self.is_unit() {
            return self.clone();
        }
        SpaceObj {
            name: format!("{}∨", wrap(&self.name)).into(),
            labels: self.labels.iter().map(|l| format!("{}∨", wrap(l))).collect::<Vec<_>>().into(),
            parities: self.parities.clone(),
        }
    }

    /// Superdimension: even count minus odd count.
    pub fn rank(&self) -> Rat {
        Rat::from_int(self.even_count() as i64 - self.odd_count() as i64)
    }
}

impl fmt::Debug for SpaceObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[dim {}, {}+{}]", self.name, self.dim(), self.even_count(), self.odd_count())
    }
}

impl fmt::Display for SpaceObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Even linear map between graded spaces, stored as a `cod.dim x dom.dim` matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct LinMor {
    dom: SpaceObj,
    cod: SpaceObj,
    mat: RatMatrix,
}

impl fmt::Debug for LinMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinMor {:?} -> {:?}: {:?}", self.dom, self.cod, self.mat)
    }
}

fn mismatch(expected: &SpaceObj, found: &SpaceObj) -> Error {
    Error::ObjectMismatch { expected: format!("{expected:?}"), found: format!("{found:?}") }
}

impl LinMor {
    pub fn new(dom: SpaceObj, cod: SpaceObj, mat: RatMatrix) -> Result<Self> {
        if mat.rows() != cod.dim() || mat.cols() != dom.dim() {
            return Err(Error::Shape(format!(
                "matrix {}x{} for a map {:?} -> {:?}",
                mat.rows(),
                mat.cols(),
                dom,
                cod
            )));
        }
        for r in 0..mat.rows() {
            for c in 0..mat.cols() {
                if cod.parity(r) != dom.parity(c) && !mat.get(r, c).is_zero() {
                    return Err(Error::OddMorphism);
                }
            }
        }
        Ok(LinMor { dom, cod, mat })
    }

    pub(crate) fn from_sparse(dom: SpaceObj, cod: SpaceObj, m: &SparseMat) -> Result<Self> {
        Self::new(dom, cod, m.to_dense())
    }

    pub fn identity(x: &SpaceObj) -> Self {
        LinMor { dom: x.clone(), cod: x.clone(), mat: RatMatrix::identity(x.dim()) }
    }

    pub fn zero(dom: &SpaceObj, cod: &SpaceObj) -> Self {
        LinMor { dom: dom.clone(), cod: cod.clone(), mat: RatMatrix::zeros(cod.dim(), dom.dim()) }
    }

    pub fn scalar_identity(x: &SpaceObj, c: &Rat) -> Self {
        LinMor { dom: x.clone(), cod: x.clone(), mat: RatMatrix::scalar_identity(x.dim(), c) }
    }

    pub fn dom(&self) -> &SpaceObj {
        &self.dom
    }

    pub fn cod(&self) -> &SpaceObj {
        &self.cod
    }

    pub fn mat(&self) -> &RatMatrix {
        &self.mat
    }

    pub fn into_mat(self) -> RatMatrix {
        self.mat
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &LinMor) -> Result<LinMor> {
        if g.cod != self.dom {
            return Err(mismatch(&self.dom, &g.cod));
        }
        Ok(LinMor { dom: g.dom.clone(), cod: self.cod.clone(), mat: self.mat.mul(&g.mat)? })
    }

    /// `self ∘ g` where the codomain of `g` and the domain of `self` agree up to
    /// rebracketing of tensor factors (same basis order and grading).
    pub fn compose_reassociated(&self, g: &LinMor) -> Result<LinMor> {
        if g.cod.parities() != self.dom.parities() {
            return Err(mismatch(&self.dom, &g.cod));
        }
        Ok(LinMor { dom: g.dom.clone(), cod: self.cod.clone(), mat: self.mat.mul(&g.mat)? })
    }

    /// Compose a chain applied right to left: `chain(&[f, g, h]) = f ∘ g ∘ h`.
    pub fn chain(maps: &[&LinMor]) -> Result<LinMor> {
        let (last, rest) = maps.split_last().ok_or_else(|| Error::Shape("empty chain".into()))?;
        let mut acc = (*last).clone();
        for f in rest.iter().rev() {
            acc = f.compose(&acc)?;
        }
        Ok(acc)
    }

    pub fn tensor(&self, g: &LinMor) -> LinMor {
        LinMor {
            dom: self.dom.tensor(&g.dom),
            cod: self.cod.tensor(&g.cod),
            mat: self.mat.kron(&g.mat),
        }
    }

    pub fn tensor_all(maps: &[&LinMor]) -> LinMor {
        maps.iter().fold(LinMor::identity(&SpaceObj::unit()), |acc, f| acc.tensor(f))
    }

    pub fn add(&self, g: &LinMor) -> Result<LinMor> {
        self.check_parallel(g)?;
        Ok(LinMor { dom: self.dom.clone(), cod: self.cod.clone(), mat: self.mat.add(&g.mat)? })
    }

    pub fn sub(&self, g: &LinMor) -> Result<LinMor> {
        self.check_parallel(g)?;
        Ok(LinMor { dom: self.dom.clone(), cod: self.cod.clone(), mat: self.mat.sub(&g.mat)? })
    }

    pub fn scale(&self, c: &Rat) -> LinMor {
        LinMor { dom: self.dom.clone(), cod: self.cod.clone(), mat: self.mat.scale(c) }
    }

    fn check_parallel(&self, g: &LinMor) -> Result<()> {
        if self.dom != g.dom {
            return Err(mismatch(&self.dom, &g.dom));
        }
        if self.cod != g.cod {
            return Err(mismatch(&self.cod, &g.cod));
        }
        Ok(())
    }

    /// Reinterpret the same matrix between other objects of identical shape and grading.
    /// Used for canonical identifications whose matrix is the identity on bases.
    pub fn retag(&self, dom: &SpaceObj, cod: &SpaceObj) -> Result<LinMor> {
        if dom.parities() != self.dom.parities() {
            return Err(mismatch(&self.dom, dom));
        }
        if cod.parities() != self.cod.parities() {
            return Err(mismatch(&self.cod, cod));
        }
        Ok(LinMor { dom: dom.clone(), cod: cod.clone(), mat: self.mat.clone() })
    }

    /// Identity-matrix identification between two objects with equal gradings.
    pub fn canonical_iso(from: &SpaceObj, to: &SpaceObj) -> Result<LinMor> {
        LinMor::identity(from).retag(from, to)
    }

    pub fn inverse(&self) -> Result<LinMor> {
        Ok(LinMor { dom: self.cod.clone(), cod: self.dom.clone(), mat: self.mat.inverse()? })
    }

    pub fn is_iso(&self) -> bool {
        self.dom.dim() == self.cod.dim() && self.mat.rank() == self.dom.dim()
    }

    pub fn rank(&self) -> usize {
        self.mat.rank()
    }

    /// Dual map `Y∨ → X∨`.
    pub fn transpose(&self) -> LinMor {
        LinMor { dom: self.cod.dual(), cod: self.dom.dual(), mat: self.mat.transpose() }
    }

    /// Scalar `c` with `self = c·other`, if one exists.
    pub fn ratio_to(&self, other: &LinMor) -> Option<Rat> {
        if self.dom != other.dom || self.cod != other.cod {
            return None;
        }
        self.mat.scalar_ratio(&other.mat)
    }

    /// For a map between 1-dimensional objects, its single entry.
    pub fn as_scalar(&self) -> Option<Rat> {
        (self.mat.rows() == 1 && self.mat.cols() == 1).then(|| self.mat.get(0, 0).clone())
    }
}

/// Koszul braiding `τ: X⊗Y → Y⊗X`.
pub fn braiding(x: &SpaceObj, y: &SpaceObj) -> LinMor {
    let (dx, dy) = (x.dim(), y.dim());
    let mut m = RatMatrix::zeros(dx * dy, dx * dy);
    for a in 0..dx {
        for b in 0..dy {
            let sign = if x.parity(a) * y.parity(b) == 1 { -Rat::one() } else { Rat::one() };
            m.set(b * dx + a, a * dy + b, sign);
        }
    }
    LinMor { dom: x.tensor(y), cod: y.tensor(x), mat: m }
}

/// Evaluation `X∨ ⊗ X → 𝕀`.
pub fn ev(x: &SpaceObj) -> LinMor {
    let d = x.dim();
    let m = RatMatrix::from_fn(1, d * d, |_, c| {
        if c / d == c % d {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    LinMor { dom: x.dual().tensor(x), cod: SpaceObj::unit(), mat: m }
}

/// Opposite evaluation `X ⊗ X∨ → 𝕀`, i.e. `ev ∘ τ`.
pub fn ev_tau(x: &SpaceObj) -> LinMor {
    ev(x).compose(&braiding(x, &x.dual())).expect("objects match by construction")
}

/// Coevaluation `𝕀 → X ⊗ X∨`.
pub fn coev(x: &SpaceObj) -> LinMor {
    let d = x.dim();
    let m = RatMatrix::from_fn(d * d, 1, |r, _| {
        if r / d == r % d {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    LinMor { dom: SpaceObj::unit(), cod: x.tensor(&x.dual()), mat: m }
}

/// Reflexivity `X → X∨∨`, with the sign `(-1)^{|e|}` on each basis vector.
pub fn reflexivity(x: &SpaceObj) -> LinMor {
    let m = RatMatrix::from_fn(x.dim(), x.dim(), |r, c| {
        if r != c {
            Rat::zero()
        } else if x.parity(r) == 1 {
            -Rat::one()
        } else {
            Rat::one()
        }
    });
    LinMor { dom: x.clone(), cod: x.dual().dual(), mat: m }
}

/// Categorical trace of the identity, `ev ∘ τ ∘ coev`.
pub fn categorical_rank(x: &SpaceObj) -> Rat {
    let t = LinMor::chain(&[&ev(x), &braiding(x, &x.dual()), &coev(x)])
        .expect("objects match by construction");
    t.as_scalar().expect("endomorphism of the unit")
}

/// Rank of an object, computed as the categorical trace and checked against the superdimension.
pub fn rank(x: &SpaceObj) -> Rat {
    let r = categorical_rank(x);
    debug_assert_eq!(r, x.rank());
    r
}

/// Unit constraints `𝕀⊗X = X` are strict, so these are identities kept for readability.
pub fn tensor(x: &SpaceObj, y: &SpaceObj) -> SpaceObj {
    x.tensor(y)
}

pub fn tensor_mor(f: &LinMor, g: &LinMor) -> LinMor {
    f.tensor(g)
}

pub fn dual(x: &SpaceObj) -> SpaceObj {
    x.dual()
}

pub fn transpose(f: &LinMor) -> LinMor {
    f.transpose()
}

/// Column index of a multi-index in the lexicographic basis of `⊗ⁿ` of a `d`-dim space.
pub(crate) fn tuple_index(t: &[usize], d: usize) -> usize {
    t.iter().fold(0, |acc, &a| acc * d + a)
}

pub(crate) fn index_tuple(mut idx: usize, d: usize, n: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for k in (0..n).rev() {
        t[k] = idx % d;
        idx /= d;
    }
    t
}

/// Koszul sign of moving the factor at position `j` to position `σ(j)` on a tuple.
pub(crate) fn koszul_sign(sigma: &Perm, tuple: &[usize], parities: &[Parity]) -> bool {
    let img = sigma.images();
    let mut neg = false;
    for j in 0..tuple.len() {
        if parities[tuple[j]] == 0 {
            continue;
        }
        for k in j + 1..tuple.len() {
            if parities[tuple[k]] == 1 && img[j] > img[k] {
                neg = !neg;
            }
        }
    }
    neg
}

/// Apply σ to a basis tuple: the entry at position `j` moves to `σ(j)`.
pub(crate) fn permute_tuple(sigma: &Perm, tuple: &[usize]) -> Vec<usize> {
    let mut out = vec![0; tuple.len()];
    for (j, &a) in tuple.iter().enumerate() {
        out[sigma.images()[j] - 1] = a;
    }
    out
}

/// Sparse signed permutation matrix of σ acting on `⊗ⁿ` of a space with the given parities.
pub(crate) fn perm_action_sparse(sigma: &Perm, parities: &[Parity]) -> SparseMat {
    let n = sigma.len();
    let d = parities.len();
    let total = d.pow(n as u32);
    let cols = (0..total)
        .map(|c| {
            let t = index_tuple(c, d, n);
            let r = tuple_index(&permute_tuple(sigma, &t), d);
            let v = if koszul_sign(sigma, &t, parities) { -Rat::one() } else { Rat::one() };
            vec![(r, v)]
        })
        .collect();
    SparseMat::from_columns(total, cols)
}

/// Action of σ ∈ S_n on `⊗ⁿx` with Koszul signs.
pub fn perm_action(sigma: &Perm, x: &SpaceObj, n: usize) -> Result<LinMor> {
    if sigma.len() != n {
        return Err(Error::InvalidPerm(format!("permutation of {} points on {n} factors", sigma.len())));
    }
    let obj = x.tensor_power(n);
    LinMor::from_sparse(obj.clone(), obj, &perm_action_sparse(sigma, x.parities()))
}

/// Sparse matrix reordering the factors of `f_1 ⊗ … ⊗ f_m` so that factor `j` lands at
/// position `σ(j)`, with the Koszul sign of the crossings.
pub(crate) fn shuffle_sparse(factors: &[&SpaceObj], sigma: &Perm) -> SparseMat {
    let m = factors.len();
    let dims: Vec<usize> = factors.iter().map(|f| f.dim()).collect();
    let img = sigma.images();
    let mut target_dims = vec![0; m];
    for j in 0..m {
        target_dims[img[j] - 1] = dims[j];
    }
    let total: usize = dims.iter().product();
    let cols = (0..total)
        .map(|c| {
            let mut digits = vec![0; m];
            let mut rest = c;
            for j in (0..m).rev() {
                digits[j] = rest % dims[j];
                rest /= dims[j];
            }
            let mut neg = false;
            for j in 0..m {
                if factors[j].parity(digits[j]) == 0 {
                    continue;
                }
                for k in j + 1..m {
                    if factors[k].parity(digits[k]) == 1 && img[j] > img[k] {
                        neg = !neg;
                    }
                }
            }
            let mut moved = vec![0; m];
            for j in 0..m {
                moved[img[j] - 1] = digits[j];
            }
            let r = moved.iter().zip(&target_dims).fold(0, |acc, (&a, &d)| acc * d + a);
            vec![(r, if neg { -Rat::one() } else { Rat::one() })]
        })
        .collect();
    SparseMat::from_columns(total, cols)
}

/// Reorder tensor factors: factor `j` of the source moves to position `σ(j)`.
pub fn shuffle_factors(factors: &[&SpaceObj], sigma: &Perm) -> Result<LinMor> {
    if sigma.len() != factors.len() {
        return Err(Error::InvalidPerm(format!(
            "permutation of {} points on {} factors",
            sigma.len(),
            factors.len()
        )));
    }
    let mut moved: Vec<&SpaceObj> = factors.to_vec();
    for (j, f) in factors.iter().enumerate() {
        moved[sigma.images()[j] - 1] = f;
    }
    LinMor::from_sparse(
        SpaceObj::tensor_all(factors),
        SpaceObj::tensor_all(&moved),
        &shuffle_sparse(factors, sigma),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_dims_and_parity() {
        let a = SpaceObj::even("A", "a", 2);
        let b = SpaceObj::with_parities("B", "b", &[0, 1, 1]);
        let ab = a.tensor(&b);
        assert_eq!(ab.dim(), 6);
        assert_eq!(ab.parity(1), 1);
        assert_eq!(a.tensor(&SpaceObj::unit()), a);
        assert!(LinMor::identity(&a).tensor(&LinMor::identity(&b)).mat().is_identity());
    }

    #[test]
    fn braiding_signs() {
        let e = SpaceObj::even("E", "e", 1);
        let o = SpaceObj::odd("O", "o", 1);
        assert_eq!(braiding(&e, &e).as_scalar(), Some(Rat::one()));
        assert_eq!(braiding(&o, &o).as_scalar(), Some(-Rat::one()));
        let x = SpaceObj::with_parities("X", "x", &[0, 1]);
        let y = SpaceObj::with_parities("Y", "y", &[1, 1, 0]);
        let back = braiding(&y, &x).compose(&braiding(&x, &y)).unwrap();
        assert!(back.mat().is_identity());
    }

    #[test]
    fn snakes_and_rank() {
        for x in [
            SpaceObj::even("X", "x", 3),
            SpaceObj::odd("X", "x", 2),
            SpaceObj::with_parities("X", "x", &[0, 1, 1]),
        ] {
            let id = LinMor::identity(&x);
            let idd = LinMor::identity(&x.dual());
            let s1 = id.tensor(&ev(&x)).compose(&coev(&x).tensor(&id)).unwrap();
            assert!(s1.mat().is_identity());
            let s2 = ev(&x).tensor(&idd).compose(&idd.tensor(&coev(&x))).unwrap();
            assert!(s2.mat().is_identity());
            assert_eq!(rank(&x), x.rank());
        }
        assert_eq!(rank(&SpaceObj::even("V", "v", 4)), Rat::from_int(4));
        assert_eq!(rank(&SpaceObj::odd("V", "v", 4)), Rat::from_int(-4));
        assert_eq!(rank(&SpaceObj::unit()), Rat::one());
    }

    #[test]
    fn reflexivity_pairs_with_opposite_evaluation() {
        let x = SpaceObj::with_parities("X", "x", &[0, 1, 1]);
        let lhs = ev(&x.dual()).compose(&reflexivity(&x).tensor(&LinMor::identity(&x.dual()))).unwrap();
        assert_eq!(lhs.mat(), ev_tau(&x).mat());
    }

    #[test]
    fn perm_examples() {
        let x = SpaceObj::with_parities("X", "x", &[0, 1]);
        assert!(perm_action(&Perm::identity(3), &x, 3).unwrap().mat().is_identity());
        let e = SpaceObj::even("E", "e", 2);
        let swap = Perm::transposition(2, 1, 2);
        assert_eq!(perm_action(&swap, &e, 2).unwrap().mat(), braiding(&e, &e).mat());
        let o = SpaceObj::odd("O", "o", 1);
        assert_eq!(perm_action(&swap, &o, 2).unwrap().as_scalar(), Some(-Rat::one()));
    }

    #[test]
    fn shuffle_matches_braiding_and_perm_action() {
        let x = SpaceObj::with_parities("X", "x", &[0, 1]);
        let y = SpaceObj::with_parities("Y", "y", &[1, 1, 0]);
        let swap = Perm::transposition(2, 1, 2);
        assert_eq!(shuffle_factors(&[&x, &y], &swap).unwrap(), braiding(&x, &y));
        let sigma = Perm::from_images(vec![3, 1, 2]).unwrap();
        let lhs = shuffle_factors(&[&x, &x, &x], &sigma).unwrap();
        assert_eq!(lhs.mat(), perm_action(&sigma, &x, 3).unwrap().mat());
    }
}
