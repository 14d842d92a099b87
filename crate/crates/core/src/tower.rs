//! The tower above a group ring `V = R[G]`: matrices and tensors, with the
//! products induced by convolution.
//!
//! An `n x n` matrix over R (n the group order, rows and columns indexed by
//! group elements) carries a second reading as an element of `V[G]`: the
//! coefficient of `|s>` is column `s`. A tensor is a formal sum of matrix
//! slices, an element of `M[G]`. Under these identifications the products
//!
//! * `scalar_product(a, X)`: vector times matrix, `a * X` with columns as
//!   the matrix's coefficients,
//! * `tensor_matrix_product(T, X)`: tensor acting on a matrix,
//! * `tensor_tensor_product(A, B)`: `C_k = sum_{r s = k} A_r . B_s`,
//!
//! are all the same convolution formula, instantiated at different levels.
//! For `G = Z_n` each of them equals a circulant-matrix computation; the
//! [`circulant_matrix`] and `block_circulant_*` functions materialize those
//! matrices and serve as independent oracle routes for the tests.

use rand::RngCore;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::groupring::{GroupRing, GroupRingElement};
use crate::ring::CoefficientRing;

/// A square matrix over `R` indexed by group elements, with a dual view as
/// an element of `V[G]` (the coefficient of `|s>` is column `s`).
#[derive(Debug, Clone)]
pub struct GroupMatrix<R: CoefficientRing> {
    group: FiniteAbelianGroup,
    ring: R,
    /// Row-major `n x n` entry table.
    entries: Vec<R::Elem>,
}

/// A tensor: one frontal matrix slice per group element.
#[derive(Debug, Clone)]
pub struct GroupTensor<R: CoefficientRing> {
    group: FiniteAbelianGroup,
    ring: R,
    slices: Vec<GroupMatrix<R>>,
}

impl<R: CoefficientRing> GroupMatrix<R> {
    pub fn zero(group: &FiniteAbelianGroup, ring: &R) -> Self {
        let n = group.order();
        GroupMatrix {
            group: group.clone(),
            ring: ring.clone(),
            entries: vec![ring.zero(); n * n],
        }
    }

    pub fn identity(group: &FiniteAbelianGroup, ring: &R) -> Self {
        let mut m = Self::zero(group, ring);
        let n = group.order();
        for i in 0..n {
            m.entries[i * n + i] = ring.one();
        }
        m
    }

    /// The outer product `|j><k|`: a single 1 at row `j`, column `k`.
    pub fn unit(group: &FiniteAbelianGroup, ring: &R, j: usize, k: usize) -> Result<Self> {
        let n = group.order();
        if j >= n || k >= n {
            return Err(Error::IndexOutOfRange {
                index: j.max(k),
                order: n,
            });
        }
        let mut m = Self::zero(group, ring);
        m.entries[j * n + k] = ring.one();
        Ok(m)
    }

    pub fn from_entries(
        group: &FiniteAbelianGroup,
        ring: &R,
        entries: Vec<R::Elem>,
    ) -> Result<Self> {
        let n = group.order();
        if entries.len() != n * n {
            return Err(Error::Mismatch(format!(
                "entry table length {} does not match {n}x{n}",
                entries.len()
            )));
        }
        Ok(GroupMatrix {
            group: group.clone(),
            ring: ring.clone(),
            entries,
        })
    }

    pub fn from_ints(group: &FiniteAbelianGroup, ring: &R, ints: &[i64]) -> Result<Self> {
        Self::from_entries(
            group,
            ring,
            ints.iter().map(|&v| ring.from_i64(v)).collect(),
        )
    }

    pub fn sample(group: &FiniteAbelianGroup, ring: &R, rng: &mut dyn RngCore) -> Self {
        let n = group.order();
        GroupMatrix {
            group: group.clone(),
            ring: ring.clone(),
            entries: (0..n * n).map(|_| ring.sample(rng)).collect(),
        }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn entry(&self, row: usize, col: usize) -> &R::Elem {
        &self.entries[row * self.group.order() + col]
    }

    pub fn set_entry(&mut self, row: usize, col: usize, v: R::Elem) {
        let n = self.group.order();
        self.entries[row * n + col] = v;
    }

    pub fn entries(&self) -> &[R::Elem] {
        &self.entries
    }

    /// The vector group ring `V = R[G]` this matrix's rows and columns
    /// live in.
    pub fn vector_ring(&self) -> GroupRing<R> {
        GroupRing::new(self.group.clone(), self.ring.clone())
    }

    /// Column `s` read as an element of `V`: the coefficient of `|s>` in the
    /// dual group-ring view.
    pub fn column_element(&self, s: usize) -> GroupRingElement<R> {
        let n = self.group.order();
        let coeffs = (0..n).map(|j| self.entries[j * n + s].clone()).collect();
        self.vector_ring()
            .from_coeffs(coeffs)
            .expect("column length matches order")
    }

    /// Row `j` read as an element of `V`.
    pub fn row_element(&self, j: usize) -> GroupRingElement<R> {
        let n = self.group.order();
        let coeffs = self.entries[j * n..(j + 1) * n].to_vec();
        self.vector_ring()
            .from_coeffs(coeffs)
            .expect("row length matches order")
    }

    /// Rebuilds a matrix from its column coefficients.
    pub fn from_columns(
        group: &FiniteAbelianGroup,
        ring: &R,
        columns: &[GroupRingElement<R>],
    ) -> Result<Self> {
        let n = group.order();
        if columns.len() != n {
            return Err(Error::Mismatch(format!(
                "expected {n} columns, got {}",
                columns.len()
            )));
        }
        let mut m = Self::zero(group, ring);
        for (s, col) in columns.iter().enumerate() {
            if col.group() != group {
                return Err(Error::Mismatch("column group mismatch".into()));
            }
            for j in 0..n {
                m.entries[j * n + s] = col.coeff_at_index(j).clone();
            }
        }
        Ok(m)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_mat(self, other)?;
        Ok(GroupMatrix {
            group: self.group.clone(),
            ring: self.ring.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| self.ring.add(a, b))
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        GroupMatrix {
            group: self.group.clone(),
            ring: self.ring.clone(),
            entries: self.entries.iter().map(|a| self.ring.neg(a)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Standard contracted product `(AB)_{jk} = sum_i A_{ji} B_{ik}`.
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        check_mat(self, other)?;
        let n = self.group.order();
        let r = &self.ring;
        let mut out = Self::zero(&self.group, r);
        for j in 0..n {
            for i in 0..n {
                let a = &self.entries[j * n + i];
                if r.is_exact() && r.is_zero(a) {
                    continue;
                }
                for k in 0..n {
                    let term = r.mul(a, &other.entries[i * n + k]);
                    out.entries[j * n + k] = r.add(&out.entries[j * n + k], &term);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product with `v` in `V`.
    pub fn matvec(&self, v: &GroupRingElement<R>) -> Result<GroupRingElement<R>> {
        if v.group() != &self.group || v.ring().coeff() != &self.ring {
            return Err(Error::Mismatch("matrix/vector structure mismatch".into()));
        }
        let n = self.group.order();
        let r = &self.ring;
        let coeffs = (0..n)
            .map(|j| {
                let mut acc = r.zero();
                for k in 0..n {
                    acc = r.add(&acc, &r.mul(&self.entries[j * n + k], v.coeff_at_index(k)));
                }
                acc
            })
            .collect();
        self.vector_ring().from_coeffs(coeffs)
    }

    pub fn eq_mat(&self, other: &Self) -> Result<bool> {
        check_mat(self, other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| self.ring.eq_elem(a, b)))
    }

    pub fn residual(&self, other: &Self) -> Result<f64> {
        check_mat(self, other)?;
        Ok(self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.ring.residual(a, b))
            .fold(0.0, f64::max))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|a| self.ring.is_zero(a))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group.to_string(),
            "ring": self.ring.spec_name(),
            "entries": Value::Array(
                self.entries.iter().map(|e| self.ring.elem_to_json(e)).collect()
            ),
        })
    }

    pub fn from_json(group: &FiniteAbelianGroup, ring: &R, v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Decode("expected a matrix object".into()))?;
        if obj.get("group").and_then(Value::as_str) != Some(group.to_string().as_str()) {
            return Err(Error::Mismatch("matrix group header mismatch".into()));
        }
        if obj.get("ring").and_then(Value::as_str) != Some(ring.spec_name().as_str()) {
            return Err(Error::Mismatch("matrix ring header mismatch".into()));
        }
        let entries = obj
            .get("entries")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Decode("missing entries array".into()))?;
        let parsed: Result<Vec<R::Elem>> = entries.iter().map(|e| ring.elem_from_json(e)).collect();
        Self::from_entries(group, ring, parsed?)
    }

    /// Aligned text rendering, for demos.
    pub fn pretty(&self) -> String {
        let n = self.group.order();
        let cells: Vec<String> = self
            .entries
            .iter()
            .map(|e| self.ring.format_elem(e))
            .collect();
        let width = cells.iter().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for j in 0..n {
            out.push_str("[ ");
            for k in 0..n {
                if k > 0 {
                    out.push(' ');
                }
                out.push_str(&format!("{:>width$}", cells[j * n + k]));
            }
            out.push_str(" ]\n");
        }
        out
    }
}

fn check_mat<R: CoefficientRing>(a: &GroupMatrix<R>, b: &GroupMatrix<R>) -> Result<()> {
    if a.group == b.group && a.ring == b.ring {
        Ok(())
    } else {
        Err(Error::Mismatch("matrix structure mismatch".into()))
    }
}

fn check_tensor<R: CoefficientRing>(a: &GroupTensor<R>, b: &GroupTensor<R>) -> Result<()> {
    if a.group == b.group && a.ring == b.ring {
        Ok(())
    } else {
        Err(Error::Mismatch("tensor structure mismatch".into()))
    }
}

impl<R: CoefficientRing> GroupTensor<R> {
    pub fn zero(group: &FiniteAbelianGroup, ring: &R) -> Self {
        GroupTensor {
            group: group.clone(),
            ring: ring.clone(),
            slices: (0..group.order())
                .map(|_| GroupMatrix::zero(group, ring))
                .collect(),
        }
    }

    /// The convolution identity `E`: the identity matrix at `1_G`, zero
    /// slices elsewhere.
    pub fn identity(group: &FiniteAbelianGroup, ring: &R) -> Self {
        let mut t = Self::zero(group, ring);
        t.slices[0] = GroupMatrix::identity(group, ring);
        t
    }

    pub fn from_slices(slices: Vec<GroupMatrix<R>>) -> Result<Self> {
        let first = slices
            .first()
            .ok_or_else(|| Error::Mismatch("tensor needs at least one slice".into()))?;
        let group = first.group.clone();
        let ring = first.ring.clone();
        if slices.len() != group.order() {
            return Err(Error::Mismatch(format!(
                "expected {} slices, got {}",
                group.order(),
                slices.len()
            )));
        }
        for s in &slices {
            if s.group != group || s.ring != ring {
                return Err(Error::Mismatch("tensor slice structure mismatch".into()));
            }
        }
        Ok(GroupTensor {
            group,
            ring,
            slices,
        })
    }

    /// Embeds a vector `a` as the tensor with slices `a_g . I`. The embedded
    /// tensor commutes with everything, which makes the mixed products
    /// `a o X` and `T * a` literal convolutions in `M[G]`.
    pub fn from_vector(a: &GroupRingElement<R>) -> Self {
        let group = a.group().clone();
        let ring = a.ring().coeff().clone();
        let n = group.order();
        let slices = (0..n)
            .map(|g| {
                let mut m = GroupMatrix::zero(&group, &ring);
                for i in 0..n {
                    m.set_entry(i, i, a.coeff_at_index(g).clone());
                }
                m
            })
            .collect();
        GroupTensor {
            group,
            ring,
            slices,
        }
    }

    pub fn sample(group: &FiniteAbelianGroup, ring: &R, rng: &mut dyn RngCore) -> Self {
        GroupTensor {
            group: group.clone(),
            ring: ring.clone(),
            slices: (0..group.order())
                .map(|_| GroupMatrix::sample(group, ring, rng))
                .collect(),
        }
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn slices(&self) -> &[GroupMatrix<R>] {
        &self.slices
    }

    pub fn slice(&self, g: usize) -> &GroupMatrix<R> {
        &self.slices[g]
    }

    pub fn slice_at(&self, g: &GroupElement) -> Result<&GroupMatrix<R>> {
        Ok(&self.slices[self.group.index_of(g)?])
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_tensor(self, other)?;
        let slices: Result<Vec<_>> = self
            .slices
            .iter()
            .zip(&other.slices)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(GroupTensor {
            group: self.group.clone(),
            ring: self.ring.clone(),
            slices: slices?,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_tensor(self, other)?;
        let slices: Result<Vec<_>> = self
            .slices
            .iter()
            .zip(&other.slices)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(GroupTensor {
            group: self.group.clone(),
            ring: self.ring.clone(),
            slices: slices?,
        })
    }

    pub fn eq_tensor(&self, other: &Self) -> Result<bool> {
        check_tensor(self, other)?;
        for (a, b) in self.slices.iter().zip(&other.slices) {
            if !a.eq_mat(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn residual(&self, other: &Self) -> Result<f64> {
        check_tensor(self, other)?;
        let mut worst = 0.0f64;
        for (a, b) in self.slices.iter().zip(&other.slices) {
            worst = worst.max(a.residual(b)?);
        }
        Ok(worst)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group.to_string(),
            "ring": self.ring.spec_name(),
            "slices": Value::Array(
                self.slices
                    .iter()
                    .map(|s| Value::Array(
                        s.entries.iter().map(|e| self.ring.elem_to_json(e)).collect()
                    ))
                    .collect()
            ),
        })
    }

    pub fn from_json(group: &FiniteAbelianGroup, ring: &R, v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Decode("expected a tensor object".into()))?;
        if obj.get("group").and_then(Value::as_str) != Some(group.to_string().as_str()) {
            return Err(Error::Mismatch("tensor group header mismatch".into()));
        }
        if obj.get("ring").and_then(Value::as_str) != Some(ring.spec_name().as_str()) {
            return Err(Error::Mismatch("tensor ring header mismatch".into()));
        }
        let slices = obj
            .get("slices")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Decode("missing slices array".into()))?;
        let parsed: Result<Vec<GroupMatrix<R>>> = slices
            .iter()
            .map(|s| {
                let arr = s
                    .as_array()
                    .ok_or_else(|| Error::Decode("slice must be an array".into()))?;
                let entries: Result<Vec<R::Elem>> =
                    arr.iter().map(|e| ring.elem_from_json(e)).collect();
                GroupMatrix::from_entries(group, ring, entries?)
            })
            .collect();
        Self::from_slices(parsed?)
    }
}

/// The group circulant of `a`: entry `(g, h) = a_{g h^{-1}}`. For `G = Z_n`
/// the first column is `(a_0, ..., a_{n-1})` and each further column shifts
/// cyclically downward.
pub fn circulant_matrix<R: CoefficientRing>(a: &GroupRingElement<R>) -> GroupMatrix<R> {
    let group = a.group().clone();
    let ring = a.ring().coeff().clone();
    let n = group.order();
    let mut m = GroupMatrix::zero(&group, &ring);
    for g in 0..n {
        for h in 0..n {
            m.entries[g * n + h] = a.coeff_at_index(group.sub_idx(g, h)).clone();
        }
    }
    m
}

/// The scalar product `a o X = a * X`: the mixed convolution whose result
/// has column `g` equal to `sum_{r s = g} a_r X_s` (columns `X_s` scaled and
/// shifted by the group law).
pub fn scalar_product<R: CoefficientRing>(
    a: &GroupRingElement<R>,
    x: &GroupMatrix<R>,
) -> Result<GroupMatrix<R>> {
    if a.group() != &x.group || a.ring().coeff() != &x.ring {
        return Err(Error::Mismatch("vector/matrix structure mismatch".into()));
    }
    let n = x.group.order();
    let r = &x.ring;
    let mut out = GroupMatrix::zero(&x.group, r);
    // out[j][g] = sum_s a_{g s^{-1}} x[j][s]
    for g in 0..n {
        for s in 0..n {
            let coeff = a.coeff_at_index(x.group.sub_idx(g, s));
            if r.is_exact() && r.is_zero(coeff) {
                continue;
            }
            for j in 0..n {
                let term = r.mul(coeff, &x.entries[j * n + s]);
                out.entries[j * n + g] = r.add(&out.entries[j * n + g], &term);
            }
        }
    }
    Ok(out)
}

/// The tensor-matrix product `T * X`: column `h` of the result is
/// `sum_g T_{h g^{-1}} . (column g of X)`.
pub fn tensor_matrix_product<R: CoefficientRing>(
    t: &GroupTensor<R>,
    x: &GroupMatrix<R>,
) -> Result<GroupMatrix<R>> {
    if t.group != x.group || t.ring != x.ring {
        return Err(Error::Mismatch("tensor/matrix structure mismatch".into()));
    }
    let n = t.group.order();
    let r = &t.ring;
    let mut out = GroupMatrix::zero(&t.group, r);
    for h in 0..n {
        for g in 0..n {
            let slice = &t.slices[t.group.sub_idx(h, g)];
            // out[., h] += slice . x[., g]
            for j in 0..n {
                let mut acc = out.entries[j * n + h].clone();
                for i in 0..n {
                    acc = r.add(&acc, &r.mul(slice.entry(j, i), &x.entries[i * n + g]));
                }
                out.entries[j * n + h] = acc;
            }
        }
    }
    Ok(out)
}

/// The tensor-tensor product `C = A * B` with `C_k = sum_{r s = k} A_r . B_s`.
pub fn tensor_tensor_product<R: CoefficientRing>(
    a: &GroupTensor<R>,
    b: &GroupTensor<R>,
) -> Result<GroupTensor<R>> {
    check_tensor(a, b)?;
    let n = a.group.order();
    let mut slices: Vec<GroupMatrix<R>> = (0..n)
        .map(|_| GroupMatrix::zero(&a.group, &a.ring))
        .collect();
    for r_idx in 0..n {
        for s_idx in 0..n {
            let k = a.group.compose_idx(r_idx, s_idx);
            let prod = a.slices[r_idx].matmul(&b.slices[s_idx])?;
            slices[k] = slices[k].add(&prod)?;
        }
    }
    Ok(GroupTensor {
        group: a.group.clone(),
        ring: a.ring.clone(),
        slices,
    })
}

/// Oracle route for `T * X`: materializes the block-circulant matrix with
/// block `(h, g) = T_{h g^{-1}}`, applies it to the stacked columns of `X`
/// by plain dense arithmetic, and unstacks the result.
pub fn block_circulant_tensor_matrix<R: CoefficientRing>(
    t: &GroupTensor<R>,
    x: &GroupMatrix<R>,
) -> Result<GroupMatrix<R>> {
    if t.group != x.group || t.ring != x.ring {
        return Err(Error::Mismatch("tensor/matrix structure mismatch".into()));
    }
    let n = t.group.order();
    let r = &t.ring;
    let big = block_circulant(t);
    // stacked columns of x: v[g*n + i] = x[i][g]
    let mut v = Vec::with_capacity(n * n);
    for g in 0..n {
        for i in 0..n {
            v.push(x.entries[i * n + g].clone());
        }
    }
    let mut y = vec![r.zero(); n * n];
    for (row, y_val) in y.iter_mut().enumerate() {
        let mut acc = r.zero();
        for (col, v_val) in v.iter().enumerate() {
            acc = r.add(&acc, &r.mul(&big[row * n * n + col], v_val));
        }
        *y_val = acc;
    }
    let mut out = GroupMatrix::zero(&t.group, r);
    for h in 0..n {
        for i in 0..n {
            out.entries[i * n + h] = y[h * n + i].clone();
        }
    }
    Ok(out)
}

/// Oracle route for `A * B`: the block-circulant of `A` times the vertical
/// stack of `B`'s frontal slices, by plain dense arithmetic.
pub fn block_circulant_tensor_tensor<R: CoefficientRing>(
    a: &GroupTensor<R>,
    b: &GroupTensor<R>,
) -> Result<GroupTensor<R>> {
    check_tensor(a, b)?;
    let n = a.group.order();
    let r = &a.ring;
    let big = block_circulant(a);
    // stacked slices of b: s[g*n + j][k] = B_g[j][k]
    let mut out_slices: Vec<GroupMatrix<R>> =
        (0..n).map(|_| GroupMatrix::zero(&a.group, r)).collect();
    for row in 0..n * n {
        for k in 0..n {
            let mut acc = r.zero();
            for col in 0..n * n {
                let (g, j) = (col / n, col % n);
                acc = r.add(
                    &acc,
                    &r.mul(&big[row * n * n + col], b.slices[g].entry(j, k)),
                );
            }
            out_slices[row / n].entries[(row % n) * n + k] = acc;
        }
    }
    GroupTensor::from_slices(out_slices)
}

/// Dense `(n^2) x (n^2)` block-circulant table of a tensor, row-major, with
/// block `(u, v)` equal to slice `T_{u v^{-1}}`.
fn block_circulant<R: CoefficientRing>(t: &GroupTensor<R>) -> Vec<R::Elem> {
    let n = t.group.order();
    let mut big = vec![t.ring.zero(); n * n * n * n];
    for u in 0..n {
        for v in 0..n {
            let slice = &t.slices[t.group.sub_idx(u, v)];
            for j in 0..n {
                for k in 0..n {
                    big[(u * n + j) * n * n + (v * n + k)] = slice.entry(j, k).clone();
                }
            }
        }
    }
    big
}
