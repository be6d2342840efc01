//! Symmetric group combinatorics: permutations, coset transversals, group-algebra
//! averagers and splittings of idempotents.

use std::collections::BTreeMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::exactnum::{Rat, RatMatrix, SparseMat};
use crate::gvect::{perm_action_sparse, LinMor, Parity, SpaceObj};

/// Permutation of `{1..n}`; `images[k] = σ(k+1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPerm(format!("{images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Perm { images })
    }

    pub fn identity(n: usize) -> Self {
        Perm { images: (1..=n).collect() }
    }

    /// The transposition `(a, b)` in `S_n`; `a == b` gives the identity.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(a - 1, b - 1);
        Perm { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// σ(k) for 1-based `k`.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.len(), other.len(), "permutations of different degree");
        Perm { images: other.images.iter().map(|&k| self.images[k - 1]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn inversions(&self) -> usize {
        let n = self.len();
        (0..n).map(|j| (j + 1..n).filter(|&k| self.images[j] > self.images[k]).count()).sum()
    }

    /// Sign character `ε(σ) ∈ {±1}`.
    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Extend a permutation of `{1..n}` to `{1..m}` fixing the extra points.
    pub fn extend(&self, m: usize) -> Perm {
        let mut images = self.images.clone();
        images.extend(self.len() + 1..=m);
        Perm { images }
    }

    /// All of `S_n` in lexicographic order of image lists.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Perm { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Perm {
        let mut images: Vec<usize> = (1..=n).collect();
        images.shuffle(rng);
        Perm { images }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

/// Character used to weight group elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Character {
    /// The sign character ε.
    Sign,
    /// The trivial character.
    Trivial,
}

impl Character {
    pub fn eval(self, p: &Perm) -> i64 {
        match self {
            Character::Sign => p.sign(),
            Character::Trivial => 1,
        }
    }
}

/// A set of representatives `R` with a character χ, defining `(1/#R) Σ χ(δ)⁻¹ δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AveragerSpec {
    pub reps: Vec<Perm>,
    pub character: Character,
}

impl AveragerSpec {
    pub fn new(reps: Vec<Perm>, character: Character) -> Result<Self> {
        if reps.is_empty() {
            return Err(Error::InvalidPerm("empty representative set".into()));
        }
        let n = reps[0].len();
        if reps.iter().any(|p| p.len() != n) {
            return Err(Error::InvalidPerm("representatives of mixed degree".into()));
        }
        Ok(AveragerSpec { reps, character })
    }

    pub fn full(n: usize, character: Character) -> Self {
        AveragerSpec { reps: Perm::all(n), character }
    }

    pub fn degree(&self) -> usize {
        self.reps[0].len()
    }
}

/// Transversal `δ_pⁿ = (p, n)` of `S_{n-1}\S_n`, ordered by `p`.
pub fn coset_reps_point(n: usize) -> Vec<Perm> {
    (1..=n).map(|p| Perm::transposition(n, p, n)).collect()
}

/// Transversal of `S_{n-2}\S_n` indexed by ordered pairs `(p, q)`, sending `p ↦ n-1` and `q ↦ n`.
pub fn coset_reps_pair(n: usize) -> BTreeMap<(usize, usize), Perm> {
    let mut out = BTreeMap::new();
    for p in 1..=n {
        for q in 1..=n {
            if p == q {
                continue;
            }
            let last = Perm::transposition(n, q, n);
            let inner = if p == n { q } else { p };
            let second = Perm::transposition(n - 1, inner, n - 1).extend(n);
            out.insert((p, q), second.compose(&last));
        }
    }
    out
}

/// A randomized transversal of `S_{n-1}\S_n`: each coset `{σ : σ(p) = n}` contributes a random member.
pub fn random_coset_reps_point<R: Rng>(n: usize, rng: &mut R) -> Vec<Perm> {
    (1..=n)
        .map(|p| Perm::random(n - 1, rng).extend(n).compose(&Perm::transposition(n, p, n)))
        .collect()
}

pub(crate) fn averager_sparse(spec: &AveragerSpec, parities: &[Parity]) -> SparseMat {
    let d = parities.len();
    let n = spec.degree();
    let total = d.pow(n as u32);
    let weight = Rat::new(1, spec.reps.len() as i64).expect("nonempty");
    let mut acc = SparseMat::zeros(total, total);
    for p in &spec.reps {
        let c = Rat::from_int(spec.character.eval(p)) * &weight;
        acc = acc.add(&perm_action_sparse(p, parities).scale(&c)).expect("same shape");
    }
    acc
}

/// `(1/#R) Σ_{δ∈R} χ(δ)⁻¹ δ` acting on `⊗ⁿx`.
pub fn averager(spec: &AveragerSpec, x: &SpaceObj, n: usize) -> Result<LinMor> {
    if spec.degree() != n {
        return Err(Error::InvalidPerm(format!(
            "representatives in S_{} used on {n} factors",
            spec.degree()
        )));
    }
    let obj = x.tensor_power(n);
    LinMor::from_sparse(obj.clone(), obj, &averager_sparse(spec, x.parities()))
}

/// Splitting of an idempotent into `i: image → X`, `p: X → image` with `p∘i = id`, `i∘p = e`.
#[derive(Clone, Debug)]
pub struct Splitting {
    pub incl: LinMor,
    pub proj: LinMor,
    pub image: SpaceObj,
}

/// Split `e` using the pivot columns of `e` and the nonzero rows of its reduced echelon form.
pub fn split_idempotent(e: &LinMor, image_name: &str) -> Result<Splitting> {
    if e.dom() != e.cod() {
        return Err(Error::NotIdempotent);
    }
    let m = e.mat();
    if m.mul(m)? != *m {
        return Err(Error::NotIdempotent);
    }
    let (red, pivots) = m.rref();
    let k = pivots.len();
    let parities: Vec<Parity> = pivots.iter().map(|&c| e.dom().parity(c)).collect();
    let labels = pivots.iter().map(|&c| format!("{image_name}[{}]", e.dom().labels()[c])).collect();
    let image = SpaceObj::new(image_name, labels, parities)?;
    let incl = LinMor::new(image.clone(), e.cod().clone(), m.select_columns(&pivots))?;
    let rows: Vec<usize> = (0..k).collect();
    let proj = LinMor::new(e.dom().clone(), image.clone(), red.select_rows(&rows))?;
    Ok(Splitting { incl, proj, image })
}

/// Trace of a matrix-valued idempotent, i.e. the rank of its image.
pub fn idempotent_trace(e: &LinMor) -> Result<Rat> {
    e.mat().trace()
}

/// Sum of `χ(σ)σ` over a set, without normalization; handy for group algebra identities.
pub fn group_sum(perms: &[Perm], character: Character, x: &SpaceObj) -> Result<RatMatrix> {
    let n = perms.first().map_or(0, Perm::len);
    let mut acc = SparseMat::zeros(x.dim().pow(n as u32), x.dim().pow(n as u32));
    for p in perms {
        let s = perm_action_sparse(p, x.parities()).scale(&Rat::from_int(character.eval(p)));
        acc = acc.add(&s)?;
    }
    Ok(acc.to_dense())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gvect::perm_action;

    #[test]
    fn point_transversal() {
        assert_eq!(coset_reps_point(1), vec![Perm::identity(1)]);
        assert_eq!(coset_reps_point(2), vec![Perm::transposition(2, 1, 2), Perm::identity(2)]);
        for (k, p) in coset_reps_point(3).iter().enumerate() {
            assert_eq!(p.apply(k + 1), 3);
        }
    }

    #[test]
    fn pair_transversal() {
        let two = coset_reps_pair(2);
        assert_eq!(two[&(1, 2)], Perm::identity(2));
        assert_eq!(two[&(2, 1)], Perm::transposition(2, 1, 2));
        let three = coset_reps_pair(3);
        let s = &three[&(1, 3)];
        assert_eq!((s.apply(1), s.apply(3)), (2, 3));
        for n in 2..=5 {
            let reps = coset_reps_pair(n);
            assert_eq!(reps.len(), n * (n - 1));
            for ((p, q), s) in &reps {
                assert_eq!((s.apply(*p), s.apply(*q)), (n - 1, n));
            }
        }
    }

    #[test]
    fn averager_traces() {
        let x = SpaceObj::even("X", "x", 2);
        let sym = averager(&AveragerSpec::full(2, Character::Trivial), &x, 2).unwrap();
        assert_eq!(idempotent_trace(&sym).unwrap(), Rat::from_int(3));
        let alt = averager(&AveragerSpec::full(2, Character::Sign), &x, 2).unwrap();
        assert_eq!(idempotent_trace(&alt).unwrap(), Rat::one());
        let id = averager(&AveragerSpec::new(vec![Perm::identity(2)], Character::Sign).unwrap(), &x, 2)
            .unwrap();
        assert!(id.mat().is_identity());
    }

    #[test]
    fn splitting_examples() {
        let x = SpaceObj::even("X", "x", 2);
        let s = split_idempotent(&LinMor::identity(&x), "im").unwrap();
        assert!(s.incl.mat().is_identity() && s.proj.mat().is_identity());
        let z = split_idempotent(&LinMor::zero(&x, &x), "im").unwrap();
        assert_eq!(z.image.dim(), 0);
        let sym = averager(&AveragerSpec::full(2, Character::Trivial), &x, 2).unwrap();
        let s = split_idempotent(&sym, "S2").unwrap();
        assert_eq!(s.image.dim(), 3);
        assert!(s.proj.compose(&s.incl).unwrap().mat().is_identity());
        assert_eq!(s.incl.compose(&s.proj).unwrap(), sym);
        let bad = LinMor::scalar_identity(&x, &Rat::from_int(2));
        assert!(matches!(split_idempotent(&bad, "b"), Err(Error::NotIdempotent)));
    }

    #[test]
    fn permutation_group_laws() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        let x = SpaceObj::with_parities("X", "x", &[0, 1]);
        for a in all.iter().step_by(5) {
            for b in all.iter().step_by(7) {
                let lhs = perm_action(&a.compose(b), &x, 4).unwrap();
                let rhs = perm_action(a, &x, 4).unwrap().compose(&perm_action(b, &x, 4).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
            assert!(a.compose(&a.inverse()).is_identity());
        }
    }
}
