//! Named group families with their canonical element numbering.
//!
//! - `cyclic(n)`: residues `0..n` under addition.
//! - `dihedral(2m)`: `s^f r^i` is index `f*m + i`, rotations first.
//! - `quaternion()`: `1,-1,i,-i,j,-j,k,-k` in that order.
//! - `symmetric(d)`: permutations of `0..d` in lexicographic order of their
//!   one-line notation, composed right to left (`(pq)(x) = p(q(x))`).
//! - `direct_product`: pairs numbered with the first factor most significant.

use crate::error::{Error, Result};
use crate::set::MAX_UNIVERSE;

use super::FiniteGroup;

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::NotAGroup("order must be positive".into()));
    }
    if n > MAX_UNIVERSE {
        return Err(Error::BudgetExceeded {
            what: "group order",
            limit: MAX_UNIVERSE,
            actual: n,
        });
    }
    Ok(())
}

fn build(name: String, n: usize, op: impl Fn(usize, usize) -> usize) -> Result<FiniteGroup> {
    check_order(n)?;
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            mul.push(op(a, b) as u8);
        }
    }
    FiniteGroup::from_raw(name, n, mul)
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    build(format!("Z{n}"), n, |a, b| (a + b) % n)
}

/// Dihedral group of the given order (must be even).
pub fn dihedral(order: usize) -> Result<FiniteGroup> {
    if order == 0 || !order.is_multiple_of(2) {
        return Err(Error::NotAGroup(format!(
            "dihedral order must be a positive even number, got {order}"
        )));
    }
    let m = order / 2;
    build(format!("D{order}"), order, move |a, b| {
        let (f, i) = (a / m, a % m);
        let (g, j) = (b / m, b % m);
        // s^f r^i s^g r^j = s^(f+g) r^((-1)^g i + j)
        let i = if g == 1 { (m - i) % m } else { i };
        ((f + g) % 2) * m + (i + j) % m
    })
}

pub fn quaternion() -> Result<FiniteGroup> {
    // units 1,i,j,k as 0..4; unit products with sign
    const UNIT: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    build("Q8".into(), 8, |a, b| {
        let (ua, na) = (a / 2, a % 2 == 1);
        let (ub, nb) = (b / 2, b % 2 == 1);
        let (u, n) = UNIT[ua][ub];
        2 * u + usize::from(n ^ na ^ nb)
    })
}

/// Symmetric group on `degree` points; degree at most 4 so the order stays within 64.
pub fn symmetric(degree: usize) -> Result<FiniteGroup> {
    if degree == 0 || degree > 4 {
        return Err(Error::Invalid(format!(
            "symmetric groups are supported for degree 1..=4, got {degree}"
        )));
    }
    let perms = permutations(degree);
    let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    let n = perms.len();
    let mut table = vec![vec![0usize; n]; n];
    for (a, p) in perms.iter().enumerate() {
        for (b, q) in perms.iter().enumerate() {
            let pq: Vec<usize> = (0..degree).map(|x| p[q[x]]).collect();
            table[a][b] = index(&pq);
        }
    }
    FiniteGroup::from_table(format!("S{degree}"), &table)
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, d: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == d {
            out.push(prefix.clone());
            return;
        }
        for x in 0..d {
            if !prefix.contains(&x) {
                prefix.push(x);
                go(prefix, d, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), d, &mut out);
    out
}

pub fn direct_product(parts: &[FiniteGroup]) -> Result<FiniteGroup> {
    if parts.is_empty() {
        return Err(Error::Invalid("direct product needs at least one factor".into()));
    }
    let n = parts
        .iter()
        .try_fold(1usize, |acc, g| acc.checked_mul(g.order()))
        .filter(|&n| n <= MAX_UNIVERSE)
        .ok_or(Error::BudgetExceeded {
            what: "group order",
            limit: MAX_UNIVERSE,
            actual: parts.iter().map(|g| g.order()).product(),
        })?;
    let name = parts.iter().map(|g| g.name()).collect::<Vec<_>>().join("x");
    let split = |mut x: usize| {
        let mut coords = vec![0; parts.len()];
        for (i, g) in parts.iter().enumerate().rev() {
            coords[i] = x % g.order();
            x /= g.order();
        }
        coords
    };
    build(name, n, |a, b| {
        let (ca, cb) = (split(a), split(b));
        parts
            .iter()
            .enumerate()
            .fold(0, |acc, (i, g)| acc * g.order() + g.mul(ca[i], cb[i]))
    })
}
