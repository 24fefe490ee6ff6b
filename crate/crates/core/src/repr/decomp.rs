//! Decomposition matrices from characters of cell modules and their simple
//! heads, with the consistency checks that accompany them.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::cell::{build_cell_module, hw_cross_check};
use super::matrix;
use super::simple::{simple_head, CellData};
use crate::bmwalg::{enyang_basis, TensorRep};
use crate::combin::{cell_labels, dominance_geq, CellLabel, Partition};
use crate::hecke::HeckeCells;
use crate::error::{BmwError, Result};
use crate::qgroup::{Family, LieType};
use crate::scalar::linalg::{dense_to_sparse, Echelon, Insert};
use crate::scalar::{CyclotomicField, Domain, Field, GenericField, RationalPoint, Ring, ScalarRing};
use crate::tensorop::rmatrix::e_square_scalar;
use crate::tensorop::BmwWord;

/// The smallest `n` for which the tensor representation is faithful on `r`
/// strands: `n = r` in type C, `n = r + 1` in types B and D.
pub fn minimal_n(family: Family, r: usize) -> usize {
    match family {
        Family::C => r.max(1),
        _ => r + 1,
    }
}

/// Rejects `(type, n, r)` outside the range where the tensor representation
/// is an isomorphism.
pub fn check_hypotheses(ty: &LieType, r: usize) -> Result<()> {
    if r < 2 {
        return Err(BmwError::Usage(format!("r = {r}: the algebra needs at least two strands")));
    }
    let ok = match ty.family {
        Family::C => ty.n >= r,
        Family::B | Family::D => ty.n > r,
        Family::A => false,
    };
    if !ok {
        return Err(BmwError::Usage(format!("{ty} with r = {r} violates n >= r (type C) or n > r (types B, D)")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    /// Process labels and character words in reverse order.
    pub reverse_order: bool,
    /// Compare each realization with the highest-weight kernel.
    pub hw_cross_check: bool,
}

/// All cell modules of `B_r` with heads and characters over one field.
pub struct Computation<D: Domain>
where
    D::Elem: Field,
{
    pub rep: TensorRep<D>,
    pub labels: Vec<CellLabel>,
    pub cells: Vec<CellData<D::Elem>>,
    /// Words of the Enyang basis, the points where characters are evaluated.
    pub words: Vec<BmwWord>,
    pub cell_chars: Vec<Vec<D::Elem>>,
    pub simple_chars: Vec<Option<Vec<D::Elem>>>,
    /// `true` per label when the realization spans the highest-weight kernel.
    pub hw_checks: Vec<Option<bool>>,
}

impl<D: Domain> Computation<D>
where
    D::Elem: Field,
{
    pub fn new(ty: LieType, dom: D, r: usize, opts: Options) -> Result<Self> {
        check_hypotheses(&ty, r)?;
        let rep = TensorRep::new(ty, dom, r);
        let mut labels = cell_labels(r);
        let mut words: Vec<BmwWord> = enyang_basis(r).iter().map(|b| b.word()).collect();
        if opts.reverse_order {
            labels.reverse();
            words.reverse();
        }
        let built: Vec<(CellData<D::Elem>, Option<bool>)> = labels
            .par_iter()
            .map(|label| {
                let m = build_cell_module(&rep, label)?;
                let hw = if opts.hw_cross_check { Some(hw_cross_check(&rep, &m)?.ok()) } else { None };
                Ok((simple_head(rep.dom(), m)?, hw))
            })
            .collect::<Result<_>>()?;
        let (cells, hw_checks): (Vec<_>, Vec<_>) = built.into_iter().unzip();
        let cell_chars: Vec<Vec<D::Elem>> = cells
            .par_iter()
            .map(|c| words.iter().map(|w| matrix::trace(&c.module.word_matrix(w), c.module.one())).collect())
            .collect();
        let simple_chars = cells.par_iter().map(|c| c.simple().map(|s| s.character(&words))).collect();
        Ok(Computation { rep, labels, cells, words, cell_chars, simple_chars, hw_checks })
    }

    pub fn dom(&self) -> &D {
        self.rep.dom()
    }

    fn position(&self, label: &CellLabel) -> usize {
        self.labels.iter().position(|l| l == label).expect("known label")
    }

    pub fn cell(&self, label: &CellLabel) -> &CellData<D::Elem> {
        &self.cells[self.position(label)]
    }

    /// Solves `char C = Σ d · char D` for every cell; entries must be
    /// non-negative integers. Rows and columns follow the canonical label order.
    pub fn decomposition_matrix(&self) -> Result<DecompositionMatrix> {
        let canonical = cell_labels(self.rep.r);
        let cols: Vec<CellLabel> = canonical.iter().filter(|l| self.simple_chars[self.position(l)].is_some()).cloned().collect();
        let mut ech = Echelon::new(self.dom().one(), true);
        for l in &cols {
            let ch = self.simple_chars[self.position(l)].as_ref().expect("nonzero simple");
            if !matches!(ech.insert(dense_to_sparse(ch)), Insert::Independent(_)) {
                return Err(BmwError::Check(format!("character of D{l} depends on the other simple characters")));
            }
        }
        let mut entries = Vec::new();
        for row in &canonical {
            let ch = &self.cell_chars[self.position(row)];
            let coords = ech
                .coordinates(dense_to_sparse(ch))
                .ok_or_else(|| BmwError::Check(format!("character of C{row} is not a combination of simple characters")))?;
            let mut out = Vec::with_capacity(cols.len());
            for (k, col) in cols.iter().enumerate() {
                let d = match coords.get(&k) {
                    None => 0,
                    Some(c) => c
                        .as_rational()
                        .and_then(|q| q.to_i64())
                        .filter(|d| *d >= 0)
                        .ok_or_else(|| BmwError::Check(format!("[C{row} : D{col}] = {c} is not a non-negative integer")))?,
                };
                out.push(d);
            }
            entries.push(out);
        }
        Ok(DecompositionMatrix { rows: canonical, cols, entries })
    }

    pub fn varrho_squared_is_one(&self) -> bool {
        let v = self.rep.ops.varrho();
        v.mul(&v).is_one()
    }

    /// Whether the scalar `x` of `E² = xE` vanishes in the field.
    pub fn e_square_vanishes(&self) -> bool {
        self.dom().embed(&e_square_scalar(self.rep.ty())).is_zero()
    }
}

/// `[C(ℓ, μ) : D(f, λ)]` with rows over all labels and columns over the
/// labels whose simple head is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub rows: Vec<CellLabel>,
    pub cols: Vec<CellLabel>,
    pub entries: Vec<Vec<i64>>,
}

impl DecompositionMatrix {
    pub fn entry(&self, row: &CellLabel, col: &CellLabel) -> Option<i64> {
        let i = self.rows.iter().position(|l| l == row)?;
        let j = self.cols.iter().position(|l| l == col)?;
        Some(self.entries[i][j])
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && self.entries.iter().enumerate().all(|(i, r)| r.iter().enumerate().all(|(j, &d)| d == i64::from(i == j)))
    }

    /// Unit diagonal, and `[C(ℓ, μ) : D(f, λ)] ≠ 0` only when
    /// `(ℓ, μ) ⊵ (f, λ)`, the larger label being on the side of the cell ideal.
    pub fn is_unitriangular(&self) -> bool {
        self.cols.iter().all(|c| self.entry(c, c) == Some(1))
            && self.rows.iter().enumerate().all(|(i, row)| {
                self.cols.iter().enumerate().all(|(j, col)| self.entries[i][j] == 0 || dominance_geq(row, col))
            })
    }

    /// The same condition with the two labels exchanged.
    pub fn is_unitriangular_reversed(&self) -> bool {
        self.cols.iter().all(|c| self.entry(c, c) == Some(1))
            && self.rows.iter().enumerate().all(|(i, row)| {
                self.cols.iter().enumerate().all(|(j, col)| self.entries[i][j] == 0 || dominance_geq(col, row))
            })
    }

    /// `dim C = Σ d · dim D` on every row.
    pub fn row_sums_match(&self, cell_dims: &[usize], simple_dims: &BTreeMap<CellLabel, usize>) -> bool {
        self.entries.iter().zip(cell_dims).all(|(row, &c)| {
            let s: i64 = row.iter().zip(&self.cols).map(|(d, l)| d * simple_dims[l] as i64).sum();
            s == c as i64
        })
    }

    pub fn entries_in_zero_one(&self) -> bool {
        self.entries.iter().flatten().all(|&d| d == 0 || d == 1)
    }
}

/// Whether `D(f, λ)` is predicted nonzero: `λ` is `e`-restricted, except
/// for `f = r/2` when `r` is even and `ϱ² = 1`.
pub fn xi_predicts_nonzero(label: &CellLabel, r: usize, e: u32, varrho_squared_one: bool) -> bool {
    label.lambda.is_e_restricted(e) && !(r.is_multiple_of(2) && label.f == r / 2 && varrho_squared_one)
}

/// The nonvanishing pattern observed on every computed instance: `λ` is
/// `e`-restricted, except for `f = r/2` when `r` is even and `x = 0` in
/// `E² = xE`.
pub fn e_square_predicts_nonzero(label: &CellLabel, r: usize, e: u32, e_square_zero: bool) -> bool {
    label.lambda.is_e_restricted(e) && !(r.is_multiple_of(2) && label.f == r / 2 && e_square_zero)
}

/// Everything a caller needs about one decomposition matrix.
#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub ty: LieType,
    pub r: usize,
    pub ring: ScalarRing,
    /// `ϱ` as a Laurent polynomial in `u`.
    pub rho: String,
    pub labels: Vec<CellLabel>,
    pub cell_dims: Vec<usize>,
    pub simple_dims: Vec<usize>,
    pub matrix: DecompositionMatrix,
    pub checks: BTreeMap<String, bool>,
    /// Labels where the computed head disagrees with [`xi_predicts_nonzero`].
    pub xi_mismatches: Vec<CellLabel>,
    /// Labels where it disagrees with [`e_square_predicts_nonzero`].
    pub e_square_mismatches: Vec<CellLabel>,
    /// For the generic ring: whether the answer was computed at a rational
    /// point and certified there, rather than over `ℚ(u)`.
    pub evaluated_at_point: bool,
}

fn report_from<D: Domain>(c: &Computation<D>, ring: ScalarRing) -> Result<DecompositionReport>
where
    D::Elem: Field,
{
    let matrix = c.decomposition_matrix()?;
    let labels = matrix.rows.clone();
    let cell_dims: Vec<usize> = labels.iter().map(|l| c.cell(l).cell_dim()).collect();
    let simple_dims: Vec<usize> = labels.iter().map(|l| c.cell(l).simple_dim()).collect();
    let sd: BTreeMap<CellLabel, usize> = labels.iter().cloned().zip(simple_dims.iter().copied()).collect();
    let v1 = c.varrho_squared_is_one();
    let xi_mismatches: Vec<CellLabel> = labels
        .iter()
        .filter(|l| xi_predicts_nonzero(l, c.rep.r, ring.e(), v1) != (sd[*l] > 0))
        .cloned()
        .collect();
    let x0 = c.e_square_vanishes();
    let e_square_mismatches: Vec<CellLabel> = labels
        .iter()
        .filter(|l| e_square_predicts_nonzero(l, c.rep.r, ring.e(), x0) != (sd[*l] > 0))
        .cloned()
        .collect();
    let mut checks = BTreeMap::new();
    checks.insert("unitriangular".to_string(), matrix.is_unitriangular());
    checks.insert("row_dimension_sums".to_string(), matrix.row_sums_match(&cell_dims, &sd));
    checks.insert("simple_dims_at_most_cell_dims".to_string(), cell_dims.iter().zip(&simple_dims).all(|(c, s)| s <= c));
    checks.insert("xi_criterion".to_string(), xi_mismatches.is_empty());
    checks.insert("head_pattern_e_square".to_string(), e_square_mismatches.is_empty());
    if c.hw_checks.iter().all(Option::is_some) {
        checks.insert("highest_weight_spans".to_string(), c.hw_checks.iter().all(|h| *h == Some(true)));
    }
    Ok(DecompositionReport {
        ty: *c.rep.ty(),
        r: c.rep.r,
        ring,
        rho: c.rep.ty().varrho().to_string(),
        labels,
        cell_dims,
        simple_dims,
        matrix,
        checks,
        xi_mismatches,
        e_square_mismatches,
        evaluated_at_point: false,
    })
}

/// The decomposition matrix of `B_r` for `(type, n)` over `ring`.
///
/// In the generic case the computation runs at a rational point first. If
/// every cell module is simple there, each Gram rank is maximal and so
/// maximal over `ℚ(u)`, and the result is certified; otherwise the
/// computation is repeated over `ℚ(u)`.
pub fn decomposition_report(ty: LieType, r: usize, ring: ScalarRing, opts: Options) -> Result<DecompositionReport> {
    match ring {
        ScalarRing::Generic => {
            let c = Computation::new(ty, RationalPoint::default(), r, opts)?;
            if c.cells.iter().all(|d| d.simple_dim() == d.cell_dim()) {
                let mut rep = report_from(&c, ring)?;
                rep.evaluated_at_point = true;
                return Ok(rep);
            }
            report_from(&Computation::new(ty, GenericField, r, opts)?, ring)
        }
        ScalarRing::RootOfUnity(e) => report_from(&Computation::new(ty, CyclotomicField::new(e)?, r, opts)?, ring),
    }
}

/// Compares the `f = 0` block of `m` with the decomposition matrix of the
/// Hecke algebra `ℋ_r` computed independently from its Specht modules.
/// Columns must agree as sets and every entry must coincide.
pub fn hecke_block_matches(m: &DecompositionMatrix, r: usize, ring: ScalarRing) -> Result<bool> {
    let hecke = match ring {
        ScalarRing::Generic => HeckeCells::new(r, RationalPoint::default())?.decomposition()?,
        ScalarRing::RootOfUnity(e) => HeckeCells::new(r, CyclotomicField::new(e)?)?.decomposition()?,
    };
    let cols: Vec<&CellLabel> = m.cols.iter().filter(|c| c.f == 0).collect();
    let hecke_cols: std::collections::BTreeSet<&Partition> = hecke.keys().map(|(_, nu)| nu).collect();
    if cols.len() != hecke_cols.len() || !cols.iter().all(|c| hecke_cols.contains(&c.lambda)) {
        return Ok(false);
    }
    Ok(m.rows.iter().filter(|l| l.f == 0).all(|row| {
        cols.iter().all(|col| m.entry(row, col) == hecke.get(&(row.lambda.clone(), col.lambda.clone())).copied())
    }))
}

/// One entry `(T(f, λ) : Δ(ℓ, μ))` of the tilting table, labelled by weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TiltingEntry {
    pub tilting: CellLabel,
    pub weyl: CellLabel,
    pub multiplicity: i64,
}

/// Weyl multiplicities of indecomposable tilting modules read off the
/// decomposition matrix: `(T(f, λ) : Δ(ℓ, μ)) = [C(ℓ, μ′) : D(f, λ′)]`.
/// Only `λ` with `D(f, λ′) ≠ 0` appear, which for `f < r/2` are exactly the
/// `e`-regular `λ`. For type B, `−w₀` is the identity on weights, so the
/// twisted labels coincide with these.
pub fn tilting_report(m: &DecompositionMatrix) -> Vec<TiltingEntry> {
    let mut out = Vec::new();
    for col in &m.cols {
        for (i, row) in m.rows.iter().enumerate() {
            let j = m.cols.iter().position(|c| c == col).expect("column");
            out.push(TiltingEntry {
                tilting: CellLabel::new(col.f, col.lambda.conjugate()),
                weyl: CellLabel::new(row.f, row.lambda.conjugate()),
                multiplicity: m.entries[i][j],
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::Partition;

    fn lt(f: Family, n: usize) -> LieType {
        LieType::new(f, n).unwrap()
    }

    #[test]
    fn hypotheses() {
        assert!(check_hypotheses(&lt(Family::C, 2), 2).is_ok());
        assert!(check_hypotheses(&lt(Family::B, 2), 2).is_err());
        assert!(check_hypotheses(&lt(Family::C, 3), 1).is_err());
        assert_eq!(minimal_n(Family::D, 3), 4);
    }

    #[test]
    fn generic_two_strands_is_identity() {
        for fam in [Family::B, Family::C, Family::D] {
            let ty = lt(fam, minimal_n(fam, 2));
            let rep = decomposition_report(ty, 2, ScalarRing::Generic, Options::default()).unwrap();
            assert!(rep.matrix.is_identity(), "{ty}");
            assert!(rep.evaluated_at_point);
            let names: Vec<String> = rep.labels.iter().map(|l| l.to_string()).collect();
            assert_eq!(names.len(), 3);
            assert!(rep.checks.values().all(|&b| b), "{:?}", rep.checks);
        }
    }

    #[test]
    fn small_root_of_unity_matrix() {
        let rep = decomposition_report(lt(Family::C, 2), 2, ScalarRing::RootOfUnity(2), Options::default()).unwrap();
        let p = |v: Vec<usize>| Partition::new(v);
        let row = CellLabel::new(0, p(vec![2]));
        let col = CellLabel::new(0, p(vec![1, 1]));
        assert_eq!(rep.matrix.entry(&row, &col), Some(1));
        assert!(rep.checks["unitriangular"], "{:?}", rep.matrix);
        assert!(rep.checks["row_dimension_sums"]);
    }

    #[test]
    fn reversed_processing_gives_the_same_matrix() {
        let ty = lt(Family::C, 3);
        let ring = ScalarRing::RootOfUnity(3);
        let a = decomposition_report(ty, 3, ring, Options::default()).unwrap();
        let b = decomposition_report(ty, 3, ring, Options { reverse_order: true, ..Options::default() }).unwrap();
        assert_eq!(a.matrix, b.matrix);
        assert_eq!(a.simple_dims, b.simple_dims);
    }

    #[test]
    fn tilting_diagonal() {
        let rep = decomposition_report(lt(Family::D, 4), 3, ScalarRing::RootOfUnity(2), Options::default()).unwrap();
        for t in tilting_report(&rep.matrix) {
            if t.tilting == t.weyl {
                assert_eq!(t.multiplicity, 1);
            }
        }
    }
}
