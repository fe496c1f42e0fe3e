//! Named families of small groups with canonical element orders.
//!
//! | name        | group                                   | element order                    |
//! |-------------|-----------------------------------------|----------------------------------|
//! | `C(n)`      | cyclic of order n                       | `i` is the residue `i`           |
//! | `D(n)`      | dihedral of order 2n                    | rotations `r^i`, then `r^i s`    |
//! | `Q8`        | quaternions                             | `1, -1, i, -i, j, -j, k, -k`     |
//! | `S(n)`      | symmetric, n ≤ 4                        | one-line notation, lexicographic |
//! | `A(4)`      | alternating                             | even perms of `S(4)`, same order |
//! | `E(p,k)`    | elementary abelian p^k                  | base-p digits, row-major         |
//! | `M16`       | `⟨a,b : a^8 = b^2 = 1, bab = a^5⟩`      | `a^i`, then `a^i b`              |
//! | `Dic(n)`    | dicyclic of order 4n                    | `a^i`, then `a^i x`              |
//! | `X×Y`       | direct product                          | row-major pairs                  |
//!
//! Permutations compose right to left: `(στ)(i) = σ(τ(i))`. Products may be
//! written with `×` or `x`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{direct_product, GroupTable};

pub fn cyclic(n: usize) -> GroupTable {
    GroupTable::from_fn(n, |a, b| (a + b) % n)
        .expect("n > 0")
        .with_name(format!("C({n})"))
}

/// `r^i s^a` has index `a·n + i`; `(r^i s^a)(r^j s^b) = r^(i ± j) s^(a+b)`.
pub fn dihedral(n: usize) -> GroupTable {
    GroupTable::from_fn(2 * n, |x, y| {
        let (i, a) = (x % n, x / n);
        let (j, b) = (y % n, y / n);
        let j = if a == 0 { j } else { (n - j) % n };
        ((a + b) % 2) * n + (i + j) % n
    })
    .expect("n > 0")
    .with_name(format!("D({n})"))
}

/// `a^i x^e` has index `e·2n + i`, with `x² = a^n` and `x a x⁻¹ = a⁻¹`.
pub fn dicyclic(n: usize) -> GroupTable {
    let m = 2 * n;
    GroupTable::from_fn(2 * m, |x, y| {
        let (i, e) = (x % m, x / m);
        let (j, f) = (y % m, y / m);
        let j = if e == 0 { j } else { (m - j) % m };
        let mut k = i + j;
        if e == 1 && f == 1 {
            k += n;
        }
        ((e + f) % 2) * m + k % m
    })
    .expect("n > 0")
    .with_name(format!("Dic({n})"))
}

pub fn quaternion() -> GroupTable {
    // unit u ∈ {1, i, j, k} with sign bit s has index 2u + s
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (1, 0), (2, 0), (3, 0)],
        [(1, 0), (0, 1), (3, 0), (2, 1)],
        [(2, 0), (3, 1), (0, 1), (1, 0)],
        [(3, 0), (2, 0), (1, 1), (0, 1)],
    ];
    GroupTable::from_fn(8, |x, y| {
        let (u, s) = UNIT[x / 2][y / 2];
        2 * u + (s + x % 2 + y % 2) % 2
    })
    .expect("quaternion table")
    .with_name("Q8")
}

/// `a^i b^e` has index `8e + i`; `b a^k = a^(5k) b`.
pub fn modular16() -> GroupTable {
    GroupTable::from_fn(16, |x, y| {
        let (i, e) = (x % 8, x / 8);
        let (j, f) = (y % 8, y / 8);
        let j = if e == 0 { j } else { 5 * j % 8 };
        ((e + f) % 2) * 8 + (i + j) % 8
    })
    .expect("modular group table")
    .with_name("M16")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

fn is_even(p: &[usize]) -> bool {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    inversions % 2 == 0
}

fn permutation_group(perms: Vec<Vec<usize>>) -> GroupTable {
    GroupTable::from_fn(perms.len(), |a, b| {
        let composed: Vec<usize> = perms[b].iter().map(|&i| perms[a][i]).collect();
        perms.binary_search(&composed).expect("closed under composition")
    })
    .expect("permutation group")
}

pub fn symmetric(n: usize) -> GroupTable {
    permutation_group(permutations(n)).with_name(format!("S({n})"))
}

pub fn alternating(n: usize) -> GroupTable {
    let perms = permutations(n).into_iter().filter(|p| is_even(p)).collect();
    permutation_group(perms).with_name(format!("A({n})"))
}

pub fn elementary_abelian(p: usize, k: u32) -> GroupTable {
    let mut g = GroupTable::trivial();
    for _ in 0..k {
        g = direct_product(&g, &cyclic(p));
    }
    g.with_name(format!("E({p},{k})"))
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

fn args(s: &str, family: &str) -> Option<Vec<usize>> {
    let inner = s.strip_prefix(family)?.strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(|a| a.trim().parse().ok()).collect()
}

/// Splits at top-level product signs.
fn factors(name: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in name.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '×' | 'x' | 'X' if depth == 0 => {
                out.push(&name[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&name[start..]);
    out
}

const MAX_FAMILY_ORDER: usize = 4096;

fn build_factor(raw: &str) -> Result<GroupTable> {
    let s: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
    let unknown = || Error::UnknownGroup(raw.trim().to_string());
    let small = |n: usize| (1..=MAX_FAMILY_ORDER).contains(&n);
    match s.as_str() {
        "Q8" => return Ok(quaternion()),
        "M16" => return Ok(modular16()),
        _ => {}
    }
    if let Some(a) = args(&s, "Dic") {
        return match a[..] {
            [n] if n >= 2 && small(4 * n) => Ok(dicyclic(n)),
            _ => Err(unknown()),
        };
    }
    if let Some(a) = args(&s, "C") {
        return match a[..] {
            [n] if small(n) => Ok(cyclic(n)),
            _ => Err(unknown()),
        };
    }
    if let Some(a) = args(&s, "D") {
        return match a[..] {
            [n] if small(2 * n) => Ok(dihedral(n)),
            _ => Err(unknown()),
        };
    }
    if let Some(a) = args(&s, "S") {
        return match a[..] {
            [n] if (1..=4).contains(&n) => Ok(symmetric(n)),
            _ => Err(unknown()),
        };
    }
    if let Some(a) = args(&s, "A") {
        return match a[..] {
            [4] => Ok(alternating(4)),
            _ => Err(unknown()),
        };
    }
    if let Some(a) = args(&s, "E") {
        return match a[..] {
            [p, k] if is_prime(p) && p.checked_pow(k as u32).is_some_and(small) => Ok(elementary_abelian(p, k as u32)),
            _ => Err(unknown()),
        };
    }
    Err(unknown())
}

/// Builds a group from its catalog name, e.g. `"D(4)"` or `"C(2)×C(4)"`.
pub fn build(name: &str) -> Result<GroupTable> {
    let mut parts = factors(name).into_iter();
    let mut g = build_factor(parts.next().unwrap_or_default())?;
    for part in parts {
        g = direct_product(&g, &build_factor(part)?);
        if g.order() > MAX_FAMILY_ORDER {
            return Err(Error::UnknownGroup(name.trim().to_string()));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_validity() {
        let cases = [
            ("C(1)", 1),
            ("C(4)", 4),
            ("D(3)", 6),
            ("D(8)", 16),
            ("Q8", 8),
            ("S(3)", 6),
            ("S(4)", 24),
            ("A(4)", 12),
            ("E(2,3)", 8),
            ("E(3,2)", 9),
            ("M16", 16),
            ("Dic(3)", 12),
            ("C(2)×C(2)×C(2)", 8),
            ("C(2) x D(3)", 12),
        ];
        for (name, order) in cases {
            let g = build(name).unwrap();
            assert_eq!(g.order(), order, "{name}");
            g.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn cyclic_is_residues() {
        let g = build("C(4)").unwrap();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(g.mul(a, b), (a + b) % 4);
            }
        }
    }

    #[test]
    fn klein_four_has_exponent_two() {
        let v = build("C(2)×C(2)").unwrap();
        assert!((1..4).all(|x| v.order_of(x) == 2));
        assert_eq!(v.name(), Some("C(2)×C(2)"));
    }

    #[test]
    fn family_shapes() {
        let q = build("Q8").unwrap();
        assert_eq!(q.order_profile(), [1, 2, 4, 4, 4, 4, 4, 4]);
        assert!(!q.is_abelian());
        let m = build("M16").unwrap();
        assert_eq!(m.exponent(), 8);
        assert!(!m.is_abelian());
        let dic = build("Dic(3)").unwrap();
        assert_eq!(dic.order_profile().iter().filter(|&&k| k == 2).count(), 1);
        let s3 = build("S(3)").unwrap();
        assert!([3, 4].iter().all(|&x| s3.order_of(x) == 3));
        assert_eq!(
            build("A(4)")
                .unwrap()
                .order_profile()
                .iter()
                .filter(|&&k| k == 3)
                .count(),
            8
        );
    }

    #[test]
    fn unknown_names_list_the_grammar() {
        for bad in ["Z(4)", "S(5)", "C(0)", "E(4,2)", "A(5)", "C(2)×", "Dic(1)", ""] {
            let err = build(bad).unwrap_err();
            assert!(matches!(err, Error::UnknownGroup(_)), "{bad}");
            assert!(alloc::format!("{err}").contains("E(p,k)"));
        }
    }
}
