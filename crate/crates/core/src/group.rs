//! Finite abelian groups as explicit direct products of cyclic groups.
//!
//! Every finite abelian group is a product `Z_{n1} x ... x Z_{nk}`, so a
//! group here is just its ordered list of cyclic moduli. Elements are
//! residue tuples, composed componentwise modulo the factors. A canonical
//! mixed-radix index (first factor most significant) gives every element a
//! stable position in `0..order`, which all coefficient tables in the crate
//! share.

use std::fmt;

use crate::error::{Error, Result};

/// A direct product of cyclic groups `Z_{n1} x ... x Z_{nk}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    factors: Vec<usize>,
    /// Mixed-radix strides: `strides[i]` = product of the factors after `i`.
    strides: Vec<usize>,
    order: usize,
}

/// An element of a [`FiniteAbelianGroup`]: one residue per cyclic factor,
/// always stored reduced modulo that factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    residues: Vec<usize>,
}

impl FiniteAbelianGroup {
    /// Builds the group `Z_{moduli[0]} x ... x Z_{moduli[k-1]}`.
    ///
    /// The list must be non-empty and every modulus at least 1; a factor of
    /// 1 contributes a trivial coordinate.
    pub fn new(moduli: &[usize]) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidGroupSpec("empty factor list".into()));
        }
        let mut order: usize = 1;
        for &m in moduli {
            if m == 0 {
                return Err(Error::InvalidGroupSpec(
                    "cyclic modulus must be positive".into(),
                ));
            }
            order = order
                .checked_mul(m)
                .ok_or_else(|| Error::InvalidGroupSpec("group order overflows".into()))?;
        }
        let mut strides = vec![1usize; moduli.len()];
        for i in (0..moduli.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * moduli[i + 1];
        }
        Ok(Self {
            factors: moduli.to_vec(),
            strides,
            order,
        })
    }

    /// Parses the spec grammar `Z<n>` or `Z<n1>xZ<n2>x...` (case-insensitive).
    pub fn parse(spec: &str) -> Result<Self> {
        let err = || Error::InvalidGroupSpec(spec.to_string());
        let lower = spec.trim().to_ascii_lowercase();
        if lower.is_empty() {
            return Err(err());
        }
        let mut moduli = Vec::new();
        for part in lower.split('x') {
            let digits = part.strip_prefix('z').ok_or_else(err)?;
            let m: usize = digits.parse().map_err(|_| err())?;
            if m == 0 {
                return Err(err());
            }
            moduli.push(m);
        }
        Self::new(&moduli)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    /// The identity element: the all-zero residue tuple.
    pub fn identity(&self) -> GroupElement {
        GroupElement {
            residues: vec![0; self.factors.len()],
        }
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        e.residues.len() == self.factors.len()
            && e.residues.iter().zip(&self.factors).all(|(&r, &m)| r < m)
    }

    fn check_member(&self, e: &GroupElement) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::GroupMismatch(format!(
                "element {e} does not belong to {self}"
            )))
        }
    }

    /// Componentwise sum modulo the factors.
    pub fn compose(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check_member(a)?;
        self.check_member(b)?;
        let residues = a
            .residues
            .iter()
            .zip(&b.residues)
            .zip(&self.factors)
            .map(|((&x, &y), &m)| (x + y) % m)
            .collect();
        Ok(GroupElement { residues })
    }

    /// The inverse element: componentwise negation modulo the factors.
    pub fn inverse(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check_member(a)?;
        let residues = a
            .residues
            .iter()
            .zip(&self.factors)
            .map(|(&x, &m)| if x == 0 { 0 } else { m - x })
            .collect();
        Ok(GroupElement { residues })
    }

    /// Canonical index of an element, mixed radix with the first factor most
    /// significant.
    pub fn index_of(&self, e: &GroupElement) -> Result<usize> {
        self.check_member(e)?;
        Ok(e.residues
            .iter()
            .zip(&self.strides)
            .map(|(&r, &s)| r * s)
            .sum())
    }

    /// Inverse of [`index_of`](Self::index_of).
    pub fn element(&self, index: usize) -> Result<GroupElement> {
        if index >= self.order {
            return Err(Error::IndexOutOfRange {
                index,
                order: self.order,
            });
        }
        let mut rem = index;
        let residues = self
            .strides
            .iter()
            .map(|&s| {
                let r = rem / s;
                rem %= s;
                r
            })
            .collect();
        Ok(GroupElement { residues })
    }

    /// Index-level group law. Callers must pass valid indices.
    pub fn compose_idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.order && j < self.order);
        let mut out = 0;
        for (&s, &m) in self.strides.iter().zip(&self.factors) {
            let ri = (i / s) % m;
            let rj = (j / s) % m;
            out += ((ri + rj) % m) * s;
        }
        out
    }

    /// Index-level inversion. Callers must pass a valid index.
    pub fn inverse_idx(&self, i: usize) -> usize {
        debug_assert!(i < self.order);
        let mut out = 0;
        for (&s, &m) in self.strides.iter().zip(&self.factors) {
            let r = (i / s) % m;
            if r != 0 {
                out += (m - r) * s;
            }
        }
        out
    }

    /// Index of `a * b^{-1}`, the difference that drives circulant layouts.
    pub fn sub_idx(&self, a: usize, b: usize) -> usize {
        self.compose_idx(a, self.inverse_idx(b))
    }

    /// Iterates all elements in canonical index order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(move |i| self.element(i).expect("index in range"))
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|m| format!("Z{m}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl GroupElement {
    pub fn new(residues: Vec<usize>) -> Self {
        GroupElement { residues }
    }

    pub fn residues(&self) -> &[usize] {
        &self.residues
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.residues.len() == 1 {
            write!(f, "{}", self.residues[0])
        } else {
            let parts: Vec<String> = self.residues.iter().map(|r| r.to_string()).collect();
            write!(f, "({})", parts.join(","))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(moduli: &[usize]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::new(moduli).unwrap()
    }

    #[test]
    fn construction_orders() {
        assert_eq!(g(&[5]).order(), 5);
        assert_eq!(g(&[4, 2]).order(), 8);
        assert_eq!(g(&[1]).order(), 1);
    }

    #[test]
    fn construction_rejects_bad_specs() {
        assert!(FiniteAbelianGroup::new(&[]).is_err());
        assert!(FiniteAbelianGroup::new(&[4, 0]).is_err());
    }

    #[test]
    fn parse_grammar() {
        assert_eq!(FiniteAbelianGroup::parse("Z4xZ2").unwrap(), g(&[4, 2]));
        assert_eq!(FiniteAbelianGroup::parse("z6").unwrap(), g(&[6]));
        assert_eq!(
            FiniteAbelianGroup::parse("Z2xz2xZ2").unwrap(),
            g(&[2, 2, 2])
        );
        assert!(FiniteAbelianGroup::parse("Z0").is_err());
        assert!(FiniteAbelianGroup::parse("4x2").is_err());
        assert!(FiniteAbelianGroup::parse("Zx").is_err());
        assert!(FiniteAbelianGroup::parse("").is_err());
    }

    #[test]
    fn compose_examples() {
        let z3 = g(&[3]);
        let one = z3.element(1).unwrap();
        assert_eq!(z3.compose(&one, &one).unwrap(), z3.element(2).unwrap());

        let z4z2 = g(&[4, 2]);
        let a = GroupElement::new(vec![3, 1]);
        let b = GroupElement::new(vec![2, 1]);
        assert_eq!(z4z2.compose(&a, &b).unwrap(), GroupElement::new(vec![1, 0]));

        for e in z4z2.elements() {
            assert_eq!(z4z2.compose(&e, &z4z2.identity()).unwrap(), e);
        }
    }

    #[test]
    fn compose_rejects_foreign_elements() {
        let z3 = g(&[3]);
        let alien = GroupElement::new(vec![1, 1]);
        assert!(matches!(
            z3.compose(&z3.identity(), &alien),
            Err(Error::GroupMismatch(_))
        ));
    }

    #[test]
    fn inverse_examples() {
        let z5 = g(&[5]);
        assert_eq!(
            z5.inverse(&z5.element(2).unwrap()).unwrap(),
            z5.element(3).unwrap()
        );
        assert_eq!(z5.inverse(&z5.identity()).unwrap(), z5.identity());

        let z2z2 = g(&[2, 2]);
        let e = GroupElement::new(vec![1, 1]);
        assert_eq!(z2z2.inverse(&e).unwrap(), e);
    }

    #[test]
    fn indexing_examples() {
        let z4z2 = g(&[4, 2]);
        assert_eq!(z4z2.element(0).unwrap(), GroupElement::new(vec![0, 0]));
        assert_eq!(z4z2.element(5).unwrap(), GroupElement::new(vec![2, 1]));
        let z6 = g(&[6]);
        assert_eq!(z6.index_of(&z6.element(4).unwrap()).unwrap(), 4);
        assert!(matches!(
            z6.element(6),
            Err(Error::IndexOutOfRange { index: 6, order: 6 })
        ));
    }

    #[test]
    fn index_element_bijection() {
        for group in [
            g(&[1]),
            g(&[7]),
            g(&[4, 2]),
            g(&[3, 3]),
            g(&[2, 2, 2]),
            g(&[12]),
        ] {
            for i in 0..group.order() {
                let e = group.element(i).unwrap();
                assert_eq!(group.index_of(&e).unwrap(), i);
            }
        }
    }

    /// Group laws, exhaustively over all elements for a catalog of groups of
    /// order at most 64.
    #[test]
    fn group_laws_exhaustive() {
        let catalog = [
            g(&[1]),
            g(&[2]),
            g(&[5]),
            g(&[8]),
            g(&[2, 2]),
            g(&[4, 2]),
            g(&[3, 3]),
            g(&[2, 2, 2]),
            g(&[12]),
            g(&[6, 2]),
            g(&[4, 4, 2]),
            g(&[64]),
        ];
        for group in &catalog {
            let n = group.order();
            let id = 0usize;
            for i in 0..n {
                // identity and inverse
                assert_eq!(group.compose_idx(i, id), i);
                assert_eq!(group.compose_idx(group.inverse_idx(i), i), id);
                for j in 0..n {
                    // commutativity
                    assert_eq!(group.compose_idx(i, j), group.compose_idx(j, i));
                    for k in 0..n {
                        // associativity
                        assert_eq!(
                            group.compose_idx(group.compose_idx(i, j), k),
                            group.compose_idx(i, group.compose_idx(j, k))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn index_and_element_level_ops_agree() {
        let group = g(&[4, 3]);
        for i in 0..group.order() {
            for j in 0..group.order() {
                let a = group.element(i).unwrap();
                let b = group.element(j).unwrap();
                let c = group.compose(&a, &b).unwrap();
                assert_eq!(group.index_of(&c).unwrap(), group.compose_idx(i, j));
            }
        }
    }
}
