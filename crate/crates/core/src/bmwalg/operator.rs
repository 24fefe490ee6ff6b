//! The algebra seen through its action on `V^{⊗r}`: operator matrices,
//! faithfulness, and expansion of arbitrary elements in a basis.

use super::basis::algebra_dimension;
use super::element::BmwElement;
use crate::error::{BmwError, Result};
use crate::qgroup::LieType;
use crate::scalar::linalg::{Echelon, Insert, SparseVec};
use crate::scalar::{Domain, Field, LaurentPoly};
use crate::tensorop::{SparseTensor, TensorIndex, TensorOps};

/// The right action of the algebra on `V^{⊗r}` over a coefficient field.
#[derive(Clone, Debug)]
pub struct TensorRep<D: Domain> {
    pub ops: TensorOps<D>,
    pub r: usize,
}

impl<D: Domain> TensorRep<D>
where
    D::Elem: Field,
{
    pub fn new(ty: LieType, dom: D, r: usize) -> Self {
        TensorRep { ops: TensorOps::new(ty, dom), r }
    }

    pub fn dom(&self) -> &D {
        &self.ops.dom
    }

    pub fn ty(&self) -> &LieType {
        &self.ops.ty
    }

    /// `N^r`.
    pub fn space_dim(&self) -> usize {
        self.ty().dim().pow(self.r as u32)
    }

    pub fn embed_element(&self, x: &BmwElement<LaurentPoly>) -> Vec<(D::Elem, crate::tensorop::BmwWord)> {
        x.terms().map(|(w, c)| (self.dom().embed(c), w.clone())).collect()
    }

    pub fn apply(&self, x: &BmwElement<LaurentPoly>, t: &SparseTensor<D::Elem>) -> SparseTensor<D::Elem> {
        self.ops.apply_combination(&self.embed_element(x), t)
    }

    pub fn basis_vector(&self, idx: TensorIndex) -> SparseTensor<D::Elem> {
        SparseTensor::basis(self.r, idx, self.dom().one())
    }

    /// Rows of the matrix of `x`: the image of each `v_𝐢` in lexicographic order.
    pub fn operator_matrix(&self, x: &BmwElement<LaurentPoly>) -> Vec<SparseTensor<D::Elem>> {
        TensorIndex::all(self.ty().dim(), self.r)
            .into_iter()
            .map(|idx| self.apply(x, &self.basis_vector(idx)))
            .collect()
    }

    /// Position of `v_𝐢` in the lexicographic order.
    pub fn lex_position(&self, idx: TensorIndex) -> usize {
        let n = self.ty().dim();
        idx.digits(self.r).into_iter().fold(0, |acc, d| acc * n + d)
    }
}

/// Deterministic probe monomials: each position holds a singleton letter or
/// half of a dual pair, letters numbered by first appearance. Patterns with
/// more pairs come first, since they are the ones `E_i` does not kill.
pub fn probe_candidates(ty: &LieType, r: usize) -> Vec<TensorIndex> {
    fn rec(pos: usize, r: usize, partner: &mut Vec<Option<usize>>, out: &mut Vec<Vec<Option<usize>>>) {
        if pos == r {
            out.push(partner.clone());
            return;
        }
        if partner[pos].is_some() {
            return rec(pos + 1, r, partner, out);
        }
        partner[pos] = Some(pos);
        rec(pos + 1, r, partner, out);
        for j in pos + 1..r {
            if partner[j].is_none() {
                partner[pos] = Some(j);
                partner[j] = Some(pos);
                rec(pos + 1, r, partner, out);
                partner[j] = None;
            }
        }
        partner[pos] = None;
    }
    let mut patterns = Vec::new();
    rec(0, r, &mut vec![None; r], &mut patterns);
    let mut out: Vec<(usize, Vec<usize>)> = Vec::new();
    for p in patterns {
        let pairs: Vec<usize> = (0..r).filter(|&i| p[i].is_some_and(|j| j > i)).collect();
        for mask in 0..(1u32 << pairs.len()) {
            let mut digits = vec![0usize; r];
            let mut letter = 0;
            for i in 0..r {
                let j = p[i].unwrap();
                if j < i {
                    continue;
                }
                if j == i {
                    digits[i] = letter;
                } else {
                    let k = pairs.iter().position(|&x| x == i).unwrap();
                    let (a, b) = if mask >> k & 1 == 0 { (letter, ty.prime(letter)) } else { (ty.prime(letter), letter) };
                    digits[i] = a;
                    digits[j] = b;
                }
                letter += 1;
            }
            out.push((pairs.len(), digits));
        }
    }
    out.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    out.dedup();
    out.into_iter().map(|(_, d)| TensorIndex::from_digits(&d)).collect()
}

/// Images of a family of elements on a probe set, kept in echelon form.
#[derive(Clone, Debug)]
pub struct OperatorBasis<D: Domain>
where
    D::Elem: Field,
{
    pub rep: TensorRep<D>,
    pub probes: Vec<TensorIndex>,
    pub elements: Vec<BmwElement<LaurentPoly>>,
    echelon: Echelon<D::Elem>,
    /// Whether the probe set is all of `V^{⊗r}`.
    pub exhaustive: bool,
}

impl<D: Domain> OperatorBasis<D>
where
    D::Elem: Field,
{
    fn flatten_on(rep: &TensorRep<D>, probes: &[TensorIndex], x: &BmwElement<LaurentPoly>) -> SparseVec<D::Elem> {
        let nr = rep.space_dim();
        let comb = rep.embed_element(x);
        let mut v = SparseVec::new();
        for (pi, p) in probes.iter().enumerate() {
            let img = rep.ops.apply_combination(&comb, &rep.basis_vector(*p));
            for (idx, c) in img.iter() {
                v.insert(pi * nr + rep.lex_position(*idx), c.clone());
            }
        }
        v
    }

    fn with_probes(rep: TensorRep<D>, elements: Vec<BmwElement<LaurentPoly>>, probes: Vec<TensorIndex>, exhaustive: bool) -> Self {
        let mut echelon = Echelon::new(rep.dom().one(), true);
        for x in &elements {
            echelon.insert(Self::flatten_on(&rep, &probes, x));
        }
        OperatorBasis { rep, probes, elements, echelon, exhaustive }
    }

    /// Grows the probe set until the images of `elements` are independent or
    /// no candidates remain. When the candidates run out and `V^{⊗r}` has at
    /// most `exhaustive_limit` basis vectors, every basis vector is used.
    pub fn build(rep: TensorRep<D>, elements: Vec<BmwElement<LaurentPoly>>, exhaustive_limit: usize) -> Self {
        let cands = probe_candidates(rep.ty(), rep.r);
        let target = elements.len();
        let mut k = 1usize.min(cands.len());
        loop {
            let b = Self::with_probes(rep.clone(), elements.clone(), cands[..k].to_vec(), false);
            if b.rank() == target {
                return b;
            }
            if k == cands.len() {
                break;
            }
            k = (2 * k).min(cands.len());
        }
        if rep.space_dim() <= exhaustive_limit {
            return Self::exhaustive(rep, elements);
        }
        Self::with_probes(rep, elements, cands, false)
    }

    /// Uses every basis vector of `V^{⊗r}` as a probe.
    pub fn exhaustive(rep: TensorRep<D>, elements: Vec<BmwElement<LaurentPoly>>) -> Self {
        let all = TensorIndex::all(rep.ty().dim(), rep.r);
        Self::with_probes(rep, elements, all, true)
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn is_independent(&self) -> bool {
        self.rank() == self.elements.len()
    }

    /// Coordinates of `x` in the operator basis; `None` if `x` lies outside
    /// the span on the probes.
    pub fn expand(&self, x: &BmwElement<LaurentPoly>) -> Result<Vec<D::Elem>> {
        if !self.is_independent() {
            return Err(BmwError::Check(format!("operator basis has rank {} < {}", self.rank(), self.elements.len())));
        }
        let v = Self::flatten_on(&self.rep, &self.probes, x);
        let c = self
            .echelon
            .coordinates(v)
            .ok_or_else(|| BmwError::Internal("element outside the span of the operator basis".into()))?;
        let zero = self.rep.dom().zero();
        Ok((0..self.elements.len()).map(|i| c.get(&i).cloned().unwrap_or_else(|| zero.clone())).collect())
    }

    /// `c[i][j][k]` with `b_i b_j = Σ_k c[i][j][k] b_k`.
    pub fn structure_constants(&self) -> Result<Vec<Vec<Vec<D::Elem>>>> {
        let n = self.elements.len();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                row.push(self.expand(&self.elements[i].mul(&self.elements[j]))?);
            }
            out.push(row);
        }
        Ok(out)
    }

    /// Whether `x` acts as zero on the probes.
    pub fn acts_as_zero(&self, x: &BmwElement<LaurentPoly>) -> bool {
        Self::flatten_on(&self.rep, &self.probes, x).is_empty()
    }

    pub fn insert_report(&mut self, x: &BmwElement<LaurentPoly>) -> bool {
        let v = Self::flatten_on(&self.rep, &self.probes, x);
        self.elements.push(x.clone());
        matches!(self.echelon.insert(v), Insert::Independent(_))
    }
}

/// Rank of the span of the Enyang basis operators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaithfulnessReport {
    pub rank: usize,
    pub expected: usize,
    pub probes: usize,
    pub exhaustive: bool,
}

impl FaithfulnessReport {
    pub fn ok(&self) -> bool {
        self.rank == self.expected
    }
}

/// Probe sets up to this many monomials may be replaced by all of `V^{⊗r}`.
pub const EXHAUSTIVE_LIMIT: usize = 50_000;

pub fn faithfulness_check_in<D: Domain>(ty: LieType, dom: D, r: usize) -> FaithfulnessReport
where
    D::Elem: Field,
{
    let rep = TensorRep::new(ty, dom, r);
    let elements = super::basis::enyang_basis(r).iter().map(|b| b.element()).collect();
    let b = OperatorBasis::build(rep, elements, EXHAUSTIVE_LIMIT);
    FaithfulnessReport { rank: b.rank(), expected: algebra_dimension(r), probes: b.probes.len(), exhaustive: b.exhaustive }
}
