//! The group algebra `ℂG` and rectangular matrices over it.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElement};

pub(crate) fn same_group(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A finite linear combination `Σ f_x x` of group elements.
///
/// Coefficients that are exactly zero are never stored, so the empty map is
/// the zero vector and structural equality is algebraic equality.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct AlgebraElement {
    coeffs: BTreeMap<GroupElement, Complex64>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The embedded group element `g` (coefficient 1).
    pub fn element(g: GroupElement) -> Self {
        Self::term(Complex64::new(1.0, 0.0), g)
    }

    pub fn term(c: Complex64, g: GroupElement) -> Self {
        let mut out = Self::zero();
        out.add_term(c, g);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Complex64, GroupElement)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (c, g) in terms {
            out.add_term(c, g);
        }
        out
    }

    fn add_term(&mut self, c: Complex64, g: GroupElement) {
        let slot = self.coeffs.entry(g).or_insert(Complex64::new(0.0, 0.0));
        *slot += c;
        if *slot == Complex64::new(0.0, 0.0) {
            self.coeffs.remove(&g);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, g: GroupElement) -> Complex64 {
        self.coeffs.get(&g).copied().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (GroupElement, Complex64)> + '_ {
        self.coeffs.iter().map(|(&g, &c)| (g, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    /// `Some(g)` when the element is exactly the embedded group element `g`.
    pub fn as_group_element(&self) -> Option<GroupElement> {
        match self.coeffs.iter().next() {
            Some((&g, &c)) if self.coeffs.len() == 1 && c == Complex64::new(1.0, 0.0) => Some(g),
            _ => None,
        }
    }

    fn check_in(&self, group: &FiniteGroup) -> Result<()> {
        match self.coeffs.keys().find(|g| !group.contains(**g)) {
            Some(g) => Err(Error::ElementOutOfRange {
                index: g.index(),
                order: group.order(),
            }),
            None => Ok(()),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in other.terms() {
            out.add_term(c, g);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(Complex64::new(-1.0, 0.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_terms(self.terms().map(|(g, x)| (x * c, g)))
    }

    /// Convolution product in `ℂG`.
    pub fn mul(&self, other: &Self, group: &FiniteGroup) -> Result<Self> {
        self.check_in(group)?;
        other.check_in(group)?;
        Ok(self.mul_unchecked(other, group))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self, group: &FiniteGroup) -> Self {
        let mut out = Self::zero();
        for (x, fx) in self.terms() {
            for (y, hy) in other.terms() {
                out.add_term(fx * hy, group.mul(x, y));
            }
        }
        out
    }

    /// `f* = Σ conj(f_x) x⁻¹`.
    pub fn star(&self, group: &FiniteGroup) -> Self {
        Self::from_terms(self.terms().map(|(g, c)| (c.conj(), group.inv(g))))
    }

    pub fn display(&self, group: &FiniteGroup) -> String {
        if self.is_zero() {
            return "0".into();
        }
        if let Some(g) = self.as_group_element() {
            return group.label(g).to_string();
        }
        self.terms()
            .map(|(g, c)| format!("({c})·{}", group.label(g)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Which side a scalar multiplies from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// A dense `rows × cols` matrix with entries in `ℂG`.
#[derive(Clone)]
pub struct CGMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<AlgebraElement>,
    group: Arc<FiniteGroup>,
}

impl PartialEq for CGMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && same_group(&self.group, &other.group)
            && self.entries == other.entries
    }
}

impl fmt::Debug for CGMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CGMatrix {}x{} over {}", self.rows, self.cols, self.group.name())?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.get(i, j).display(&self.group))
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl CGMatrix {
    pub fn zeros(group: Arc<FiniteGroup>, rows: usize, cols: usize) -> Self {
        CGMatrix {
            rows,
            cols,
            entries: vec![AlgebraElement::zero(); rows * cols],
            group,
        }
    }

    /// `diag(1_G, …, 1_G)`.
    pub fn identity(group: Arc<FiniteGroup>, n: usize) -> Self {
        Self::diagonal(group, &vec![AlgebraElement::element(GroupElement::IDENTITY); n])
            .expect("identity lies in every group")
    }

    pub fn diagonal(group: Arc<FiniteGroup>, diag: &[AlgebraElement]) -> Result<Self> {
        let n = diag.len();
        let mut out = Self::zeros(group, n, n);
        for (i, d) in diag.iter().enumerate() {
            out.set(i, i, d.clone())?;
        }
        Ok(out)
    }

    /// Builds a matrix whose entries are pure group elements or zero.
    pub fn from_group_entries(
        group: Arc<FiniteGroup>,
        rows: usize,
        cols: usize,
        entries: &[Option<GroupElement>],
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let mut out = Self::zeros(group, rows, cols);
        for (idx, e) in entries.iter().enumerate() {
            if let Some(g) = e {
                out.set(idx / cols, idx % cols, AlgebraElement::element(*g))?;
            }
        }
        Ok(out)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn get(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: AlgebraElement) -> Result<()> {
        if i >= self.rows || j >= self.cols {
            return Err(Error::DimensionMismatch(format!(
                "index ({i},{j}) outside {}x{}",
                self.rows, self.cols
            )));
        }
        value.check_in(&self.group)?;
        self.entries[i * self.cols + j] = value;
        Ok(())
    }

    /// True if every entry is zero or a single group element.
    pub fn is_group_valued(&self) -> bool {
        self.entries
            .iter()
            .all(|e| e.is_zero() || e.as_group_element().is_some())
    }

    fn check_group(&self, other: &CGMatrix) -> Result<()> {
        if same_group(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn matmul(&self, other: &CGMatrix) -> Result<CGMatrix> {
        self.check_group(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.group.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.entries[idx] = out.entries[idx].add(&a.mul_unchecked(b, &self.group));
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose: `(A*)_{i,j} = (A_{j,i})*`.
    pub fn star(&self) -> CGMatrix {
        let mut out = Self::zeros(self.group.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j).star(&self.group);
            }
        }
        out
    }

    fn zip_with(&self, other: &CGMatrix, f: impl Fn(&AlgebraElement, &AlgebraElement) -> AlgebraElement) -> Result<CGMatrix> {
        self.check_group(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(CGMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| f(a, b))
                .collect(),
            group: self.group.clone(),
        })
    }

    pub fn add(&self, other: &CGMatrix) -> Result<CGMatrix> {
        self.zip_with(other, AlgebraElement::add)
    }

    pub fn sub(&self, other: &CGMatrix) -> Result<CGMatrix> {
        self.zip_with(other, AlgebraElement::sub)
    }

    /// Multiplies every entry by a complex number.
    pub fn scale(&self, c: Complex64) -> CGMatrix {
        CGMatrix {
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
            ..self.clone()
        }
    }

    /// `aA` or `Aa` for `a ∈ ℂG`, entrywise.
    pub fn scalar_mul(&self, a: &AlgebraElement, side: Side) -> Result<CGMatrix> {
        a.check_in(&self.group)?;
        let entries = self
            .entries
            .iter()
            .map(|e| match side {
                Side::Left => a.mul_unchecked(e, &self.group),
                Side::Right => e.mul_unchecked(a, &self.group),
            })
            .collect();
        Ok(CGMatrix {
            entries,
            ..self.clone()
        })
    }
}

/// A diagonal matrix with group-element entries; embeds `Gⁿ` into `Mₙ(ℂG)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalGroupMatrix {
    diag: Vec<GroupElement>,
}

impl DiagonalGroupMatrix {
    pub fn new(diag: Vec<GroupElement>) -> Self {
        DiagonalGroupMatrix { diag }
    }

    pub fn constant(g: GroupElement, n: usize) -> Self {
        DiagonalGroupMatrix { diag: vec![g; n] }
    }

    pub fn entries(&self) -> &[GroupElement] {
        &self.diag
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Entrywise inverse, i.e. the star of the embedded matrix.
    pub fn star(&self, group: &FiniteGroup) -> DiagonalGroupMatrix {
        DiagonalGroupMatrix {
            diag: self.diag.iter().map(|&g| group.inv(g)).collect(),
        }
    }

    pub fn to_matrix(&self, group: Arc<FiniteGroup>) -> Result<CGMatrix> {
        let diag: Vec<_> = self.diag.iter().map(|&g| AlgebraElement::element(g)).collect();
        CGMatrix::diagonal(group, &diag)
    }
}
