//! Weights, highest-weight vectors in `V^{⊗r}`, and Weyl-module
//! multiplicities of the tensor character.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::lie::{Family, LieType};
use super::natural::{Gen, NaturalRep};
use crate::combin::{CellLabel, Partition};
use crate::error::{BmwError, Result};
use crate::scalar::linalg::{left_kernel, SparseVec};
use crate::scalar::{Domain, Field, LaurentDomain, LaurentPoly, Rat, RationalFunction, Ring};
use crate::tensorop::tensor::{SparseTensor, TensorIndex};

/// A weight in ε-coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<Rat>,
}

impl Weight {
    /// From coordinates scaled by [`LieType::weight_scale`].
    pub fn from_scaled(ty: &LieType, v: &[i64]) -> Self {
        let s = ty.weight_scale();
        Weight { coords: v.iter().map(|&x| Rat::new(x, s)).collect() }
    }

    pub fn scaled(&self, ty: &LieType) -> Vec<i64> {
        let s = Rat::int(ty.weight_scale());
        self.coords
            .iter()
            .map(|c| c.mul(&s).to_i64().expect("weight not on the scaled lattice"))
            .collect()
    }

    /// `Σ λ_i ε_i` for a partition with at most `n` parts.
    pub fn from_partition(ty: &LieType, lambda: &Partition) -> Self {
        assert!(ty.family != Family::A);
        assert!(lambda.len() <= ty.n, "{lambda} has more than {} parts", ty.n);
        Weight { coords: (1..=ty.n).map(|i| Rat::int(lambda.part(i) as i64)).collect() }
    }

    pub fn is_dominant(&self, ty: &LieType) -> bool {
        let v = self.scaled(ty);
        (1..=ty.rank()).all(|i| ty.pairing(&v, i) >= 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(Rat::to_string).collect();
        write!(f, "<{}>", c.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which operators cut out highest-weight vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HwMode {
    /// Kernel of every divided power `e_i^{(k)}`.
    DividedPowers,
    /// Kernel of the `e_i` alone.
    RaisingOnly,
}

/// Basis vectors `v_𝐢` of `V^{⊗r}` of a given scaled weight, in lexicographic order.
pub fn weight_space_basis(rep: &NaturalRep, weight: &[i64], r: usize) -> Vec<TensorIndex> {
    let ty = rep.ty;
    let nd = ty.dim();
    let wts: Vec<Vec<i64>> = (0..nd).map(|k| ty.weight_of_basis(k)).collect();
    // remaining ℓ¹ budget prunes the search: each factor moves at most one unit
    let s = ty.weight_scale();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    let mut acc = vec![0i64; ty.weight_len()];
    fn rec(
        nd: usize,
        r: usize,
        wts: &[Vec<i64>],
        target: &[i64],
        bound: i64,
        cur: &mut Vec<usize>,
        acc: &mut Vec<i64>,
        out: &mut Vec<TensorIndex>,
    ) {
        let left = (r - cur.len()) as i64;
        let dist: i64 = acc.iter().zip(target).map(|(a, b)| (a - b).abs()).sum();
        if dist > left * bound {
            return;
        }
        if cur.len() == r {
            if dist == 0 {
                out.push(TensorIndex::from_digits(cur));
            }
            return;
        }
        for k in 0..nd {
            for (a, w) in acc.iter_mut().zip(&wts[k]) {
                *a += w;
            }
            cur.push(k);
            rec(nd, r, wts, target, bound, cur, acc, out);
            cur.pop();
            for (a, w) in acc.iter_mut().zip(&wts[k]) {
                *a -= w;
            }
        }
    }
    // the largest ℓ¹ norm of a single basis weight
    let bound = wts.iter().map(|w| w.iter().map(|x| x.abs()).sum::<i64>()).max().unwrap_or(0).max(s);
    rec(nd, r, &wts, weight, bound, &mut cur, &mut acc, &mut out);
    out
}

/// `e_i^{(k)} v_𝐢` for every `k ≥ 1` until it vanishes, as fractions over
/// ℚ(u) (the quotient by `[k]!` need not be a Laurent polynomial in the
/// natural basis of type B).
pub fn divided_power_images(rep: &NaturalRep, i: usize, idx: TensorIndex, r: usize, max_k: Option<u32>) -> Vec<SparseTensor<RationalFunction>> {
    let dom = LaurentDomain;
    let mut cur = SparseTensor::basis(r, idx, LaurentPoly::one());
    let mut out = Vec::new();
    let mut k = 0u32;
    loop {
        k += 1;
        if max_k.is_some_and(|m| k > m) {
            break;
        }
        cur = rep.act(&dom, Gen::E(i), &cur);
        if cur.is_zero() {
            break;
        }
        let den = rep.divided_power_denominator(i, k);
        out.push(cur.map_coeffs(|c| RationalFunction::new(c.clone(), den.clone())));
    }
    out
}

/// A basis of the highest-weight vectors of the given scaled weight in
/// `V^{⊗r}` over the field of `dom`.
pub fn hw_space<D: Domain>(dom: &D, rep: &NaturalRep, weight: &[i64], r: usize, mode: HwMode) -> Result<Vec<SparseTensor<D::Elem>>>
where
    D::Elem: Field,
{
    let basis = weight_space_basis(rep, weight, r);
    let max_k = match mode {
        HwMode::DividedPowers => None,
        HwMode::RaisingOnly => Some(1),
    };
    let mut keys: BTreeMap<(usize, u32, TensorIndex), usize> = BTreeMap::new();
    let mut rows: Vec<SparseVec<D::Elem>> = Vec::with_capacity(basis.len());
    for &b in &basis {
        let mut row = SparseVec::new();
        for i in 1..=rep.ty.rank() {
            for (k, img) in divided_power_images(rep, i, b, r, max_k).into_iter().enumerate() {
                for (t, c) in img.iter() {
                    let c = dom.embed_fraction(c).ok_or_else(|| {
                        BmwError::Internal(format!("divided power e_{i}^({}) has a pole at {}", k + 1, dom.ring()))
                    })?;
                    if c.is_zero() {
                        continue;
                    }
                    let next = keys.len();
                    let key = *keys.entry((i, k as u32 + 1, *t)).or_insert(next);
                    row.insert(key, c);
                }
            }
        }
        rows.push(row);
    }
    let kernel = left_kernel(&rows, &dom.zero(), &dom.one());
    Ok(kernel
        .into_iter()
        .map(|coeffs| {
            let terms = basis.iter().zip(coeffs).filter(|(_, c)| !c.is_zero()).map(|(b, c)| (*b, c)).collect();
            SparseTensor::from_terms(r, terms)
        })
        .collect())
}

/// The Weyl-module decomposition of the character of `V^{⊗r}`, keyed by
/// scaled dominant weights.
pub fn weyl_decomposition(ty: &LieType, r: usize) -> BTreeMap<Vec<i64>, i64> {
    assert!(ty.family != Family::A, "Weyl multiplicities are implemented for types B, C and D");
    let tensor = tensor_character(ty, r);
    let dominant: Vec<Vec<i64>> = tensor.keys().filter(|w| is_dominant_scaled(ty, w)).cloned().collect();
    let rho = rho_g(ty);
    let mut order = dominant.clone();
    order.sort_by(|a, b| ip(b, &rho).cmp(&ip(a, &rho)).then(b.cmp(a)));
    let mut remaining: BTreeMap<Vec<i64>, i64> = dominant.iter().map(|w| (w.clone(), tensor[w] as i64)).collect();
    let mut out = BTreeMap::new();
    for mu in &order {
        let m = remaining[mu];
        if m == 0 {
            continue;
        }
        assert!(m > 0, "negative Weyl multiplicity at {mu:?}");
        out.insert(mu.clone(), m);
        for (nu, c) in weyl_character(ty, mu, &dominant) {
            if let Some(x) = remaining.get_mut(&nu) {
                *x -= m * c;
            }
        }
    }
    out
}

/// Weyl multiplicities in `V^{⊗r}` labelled by `(f, λ)` with `λ ⊢ r − 2f`.
/// Dominant weights that are not partitions (possible in type D when
/// `λ` has `n` parts) are returned separately.
pub fn weyl_multiplicities(ty: &LieType, r: usize) -> (BTreeMap<CellLabel, i64>, Vec<(Weight, i64)>) {
    let mut labels = BTreeMap::new();
    let mut others = Vec::new();
    for (w, m) in weyl_decomposition(ty, r) {
        let size: i64 = w.iter().sum::<i64>() / 2;
        if w.iter().all(|&x| x >= 0 && x % 2 == 0) && (r as i64 - size) % 2 == 0 {
            let lambda = Partition::new(w.iter().map(|&x| (x / 2) as usize).collect());
            labels.insert(CellLabel::new((r - size as usize) / 2, lambda), m);
        } else {
            others.push((Weight::from_scaled(ty, &w), m));
        }
    }
    (labels, others)
}

fn ip(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Doubled half-sum of positive roots.
fn rho_g(ty: &LieType) -> Vec<i64> {
    (0..ty.n).map(|k| ty.rho2(k)).collect()
}

/// Positive roots in doubled coordinates.
pub fn positive_roots(ty: &LieType) -> Vec<Vec<i64>> {
    let n = ty.n;
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut a = vec![0; n];
            a[i] = 2;
            a[j] = -2;
            out.push(a.clone());
            a[j] = 2;
            out.push(a);
        }
        let mut a = vec![0; n];
        match ty.family {
            Family::B => {
                a[i] = 2;
                out.push(a);
            }
            Family::C => {
                a[i] = 4;
                out.push(a);
            }
            _ => {}
        }
    }
    out
}

/// Weight multiplicities of `V^{⊗r}`.
pub fn tensor_character(ty: &LieType, r: usize) -> BTreeMap<Vec<i64>, u64> {
    let base: Vec<Vec<i64>> = (0..ty.dim()).map(|k| ty.weight_of_basis(k)).collect();
    let mut ch: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    ch.insert(vec![0; ty.weight_len()], 1);
    for _ in 0..r {
        let mut next = BTreeMap::new();
        for (w, m) in &ch {
            for b in &base {
                let s: Vec<i64> = w.iter().zip(b).map(|(x, y)| x + y).collect();
                *next.entry(s).or_insert(0) += m;
            }
        }
        ch = next;
    }
    ch
}

fn is_dominant_scaled(ty: &LieType, w: &[i64]) -> bool {
    (1..=ty.rank()).all(|i| ty.pairing(w, i) >= 0)
}

/// The dominant weight in the Weyl orbit of `w`.
pub fn dominant_rep(ty: &LieType, w: &[i64]) -> Vec<i64> {
    let mut a: Vec<i64> = w.iter().map(|x| x.abs()).collect();
    a.sort_unstable_by(|x, y| y.cmp(x));
    if ty.family == Family::D {
        let negatives = w.iter().filter(|&&x| x < 0).count();
        if negatives % 2 == 1 && !w.contains(&0) {
            let last = a.len() - 1;
            a[last] = -a[last];
        }
    }
    a
}

/// Coefficients of `x` in the simple roots, if they are nonnegative integers.
fn root_coefficients(ty: &LieType, x: &[i64]) -> Option<Vec<i64>> {
    let n = ty.n;
    let mut partial = Vec::with_capacity(n);
    let mut s = 0;
    for &v in x {
        s += v;
        partial.push(s);
    }
    // partial sums are doubled; simple-root coefficients must be integers
    let half = |v: i64| if v % 2 == 0 { Some(v / 2) } else { None };
    let mut c = Vec::with_capacity(n);
    for &p in partial.iter().take(n.saturating_sub(2)) {
        c.push(half(p)?);
    }
    match ty.family {
        Family::B => {
            if n >= 2 {
                c.push(half(partial[n - 2])?);
            }
            c.push(half(partial[n - 1])?);
        }
        Family::C => {
            if n >= 2 {
                c.push(half(partial[n - 2])?);
            }
            if partial[n - 1] % 4 != 0 {
                return None;
            }
            c.push(partial[n - 1] / 4);
        }
        Family::D => {
            let t = partial[n - 2] - x[n - 1];
            if t % 4 != 0 || partial[n - 1] % 4 != 0 {
                return None;
            }
            c.push(t / 4);
            c.push(partial[n - 1] / 4);
        }
        Family::A => unreachable!(),
    }
    c.iter().all(|&v| v >= 0).then_some(c)
}

/// Dominant weight multiplicities of the Weyl module `Δ(λ)` by Freudenthal's
/// formula, restricted to the candidate set `dominant`.
pub fn weyl_character(ty: &LieType, lambda: &[i64], dominant: &[Vec<i64>]) -> BTreeMap<Vec<i64>, i64> {
    let rho = rho_g(ty);
    let roots = positive_roots(ty);
    let mut cands: Vec<(i64, Vec<i64>)> = dominant
        .iter()
        .filter_map(|mu| {
            let diff: Vec<i64> = lambda.iter().zip(mu).map(|(a, b)| a - b).collect();
            root_coefficients(ty, &diff).map(|c| (c.iter().sum::<i64>(), mu.clone()))
        })
        .collect();
    cands.sort();
    let below: BTreeSet<Vec<i64>> = cands.iter().map(|(_, m)| m.clone()).collect();
    let lr: Vec<i64> = lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let norm_lr = ip(&lr, &lr);
    let mut mult: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    for (_, mu) in &cands {
        if mu == lambda {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mr: Vec<i64> = mu.iter().zip(&rho).map(|(a, b)| a + b).collect();
        let den = norm_lr - ip(&mr, &mr);
        let mut num: i64 = 0;
        for a in &roots {
            let mut k = 1;
            loop {
                let w: Vec<i64> = mu.iter().zip(a).map(|(x, y)| x + k * y).collect();
                let d = dominant_rep(ty, &w);
                if !below.contains(&d) {
                    break;
                }
                let m = mult.get(&d).copied().unwrap_or(0);
                num += 2 * ip(&w, a) * m;
                k += 1;
            }
        }
        assert!(den > 0 && num % den == 0, "Freudenthal division failed at {mu:?}");
        mult.insert(mu.clone(), num / den);
    }
    mult.retain(|_, m| *m != 0);
    mult
}
