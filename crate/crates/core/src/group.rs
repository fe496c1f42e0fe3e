//! Finite groups stored as Cayley tables.
//!
//! Elements are the indices `0..n` and the identity is always `0`. Tables are
//! immutable once built and cheap to clone, so subgroups, automorphisms and
//! homomorphisms all keep a handle to their parent.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{AxiomViolation, Error, Result};

/// Index of an element inside one particular [`GroupTable`].
pub type Elem = usize;

/// The identity element of every table.
pub const IDENTITY: Elem = 0;

#[derive(Clone)]
pub struct GroupTable {
    inner: Arc<Inner>,
}

struct Inner {
    order: usize,
    /// Row-major `order × order` products.
    table: Vec<Elem>,
    inverses: Vec<Elem>,
    orders: Vec<usize>,
    name: Option<String>,
}

impl GroupTable {
    /// Builds a table from untrusted rows, checking every group axiom
    /// including exhaustive associativity.
    pub fn from_rows(rows: &[Vec<Elem>]) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptyGroup);
        }
        let mut table = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::NotSquare {
                    row: r,
                    len: row.len(),
                    order,
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(Error::EntryOutOfRange {
                        row: r,
                        col: c,
                        value: v,
                        order,
                    });
                }
            }
            table.extend_from_slice(row);
        }
        check_identity(order, &table)?;
        let inverses = find_inverses(order, &table)?;
        check_associativity(order, &table)?;
        Ok(Self::assemble(order, table, inverses))
    }

    /// Builds a table from a multiplication rule known to define a group.
    ///
    /// Associativity is not re-checked; identity, range and inverses are,
    /// since they cost `O(n²)`.
    pub fn from_fn(order: usize, mut mul: impl FnMut(Elem, Elem) -> Elem) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyGroup);
        }
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let v = mul(a, b);
                if v >= order {
                    return Err(Error::EntryOutOfRange {
                        row: a,
                        col: b,
                        value: v,
                        order,
                    });
                }
                table.push(v);
            }
        }
        check_identity(order, &table)?;
        let inverses = find_inverses(order, &table)?;
        Ok(Self::assemble(order, table, inverses))
    }

    fn assemble(order: usize, table: Vec<Elem>, inverses: Vec<Elem>) -> Self {
        let mut orders = vec![0; order];
        for (a, slot) in orders.iter_mut().enumerate() {
            let mut k = 1;
            let mut x = a;
            // bounded so a non-associative table from `from_fn` cannot hang
            while x != IDENTITY && k <= order {
                x = table[x * order + a];
                k += 1;
            }
            *slot = k;
        }
        GroupTable {
            inner: Arc::new(Inner {
                order,
                table,
                inverses,
                orders,
                name: None,
            }),
        }
    }

    /// Returns a copy carrying a display label.
    pub fn with_name(self, name: impl Into<String>) -> Self {
        let inner = &self.inner;
        GroupTable {
            inner: Arc::new(Inner {
                order: inner.order,
                table: inner.table.clone(),
                inverses: inner.inverses.clone(),
                orders: inner.orders.clone(),
                name: Some(name.into()),
            }),
        }
    }

    pub fn trivial() -> Self {
        Self::assemble(1, vec![0], vec![0])
    }

    pub fn name(&self) -> Option<&str> {
        self.inner.name.as_deref()
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn elements(&self) -> core::ops::Range<Elem> {
        0..self.inner.order
    }

    pub fn contains(&self, x: Elem) -> bool {
        x < self.inner.order
    }

    /// Fails with [`Error::ForeignElement`] if `x` is not an element of `self`.
    pub fn check(&self, x: Elem) -> Result<Elem> {
        if self.contains(x) {
            Ok(x)
        } else {
            Err(Error::ForeignElement {
                index: x,
                order: self.order(),
            })
        }
    }

    /// Product without bounds checking beyond slice indexing.
    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.inner.table[a * self.inner.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inner.inverses[a]
    }

    /// Least `k ≥ 1` with `a^k = 1`.
    #[inline]
    pub fn order_of(&self, a: Elem) -> usize {
        self.inner.orders[a]
    }

    pub fn multiply(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(self.check(a)?, self.check(b)?))
    }

    pub fn inverse(&self, a: Elem) -> Result<Elem> {
        Ok(self.inv(self.check(a)?))
    }

    pub fn element_order(&self, a: Elem) -> Result<usize> {
        Ok(self.order_of(self.check(a)?))
    }

    /// `x⁻¹ · y`.
    #[inline]
    pub fn left_div(&self, x: Elem, y: Elem) -> Elem {
        self.mul(self.inv(x), y)
    }

    /// `g · x · g⁻¹`.
    #[inline]
    pub fn conjugate(&self, g: Elem, x: Elem) -> Elem {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn pow(&self, a: Elem, k: usize) -> Elem {
        let mut x = IDENTITY;
        for _ in 0..k % self.order_of(a) {
            x = self.mul(x, a);
        }
        x
    }

    pub fn row(&self, a: Elem) -> &[Elem] {
        let n = self.inner.order;
        &self.inner.table[a * n..(a + 1) * n]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Element orders sorted ascending; equal for isomorphic groups.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut p = self.inner.orders.clone();
        p.sort_unstable();
        p
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.inner.orders.iter().fold(1, |acc, &k| lcm(acc, k))
    }

    /// Rows of the table, e.g. for serialization.
    pub fn rows(&self) -> impl Iterator<Item = &[Elem]> + '_ {
        self.inner.table.chunks(self.inner.order)
    }

    /// Re-runs every axiom check, associativity included.
    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        check_identity(n, &self.inner.table)?;
        find_inverses(n, &self.inner.table)?;
        check_associativity(n, &self.inner.table)
    }
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn check_identity(n: usize, table: &[Elem]) -> Result<()> {
    let is_identity = |e: Elem| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x);
    if is_identity(IDENTITY) {
        Ok(())
    } else {
        let candidate = (1..n).find(|&e| is_identity(e));
        Err(AxiomViolation::IdentityNotZero { candidate }.into())
    }
}

fn find_inverses(n: usize, table: &[Elem]) -> Result<Vec<Elem>> {
    let mut inverses = vec![0; n];
    for a in 0..n {
        let b = (0..n)
            .find(|&b| table[a * n + b] == IDENTITY && table[b * n + a] == IDENTITY)
            .ok_or(AxiomViolation::Inverse { element: a })?;
        inverses[a] = b;
    }
    Ok(inverses)
}

fn check_associativity(n: usize, table: &[Elem]) -> Result<()> {
    for a in 0..n {
        for b in 0..n {
            let ab = table[a * n + b];
            for c in 0..n {
                if table[ab * n + c] != table[a * n + table[b * n + c]] {
                    return Err(AxiomViolation::Associativity { a, b, c }.into());
                }
            }
        }
    }
    Ok(())
}

/// Tables compare by content; the name is a label only.
impl PartialEq for GroupTable {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.order == other.inner.order && self.inner.table == other.inner.table)
    }
}

impl Eq for GroupTable {}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("name", &self.inner.name)
            .field("order", &self.inner.order)
            .finish()
    }
}

impl fmt::Display for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name() {
            Some(name) => f.write_str(name),
            None => write!(f, "<group of order {}>", self.order()),
        }
    }
}

/// Component-wise product; the pair `(i1, i2)` has index `i1·|G2| + i2`.
pub fn direct_product(g1: &GroupTable, g2: &GroupTable) -> GroupTable {
    let m = g2.order();
    let table = GroupTable::from_fn(g1.order() * m, |a, b| g1.mul(a / m, b / m) * m + g2.mul(a % m, b % m))
        .expect("product of groups is a group");
    match (g1.name(), g2.name()) {
        (Some(a), Some(b)) => table.with_name(alloc::format!("{a}×{b}")),
        _ => table,
    }
}

pub(crate) fn same_parent(a: &GroupTable, b: &GroupTable) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::ParentMismatch)
    }
}
