use serde::{Deserialize, Serialize};

use crate::set::ElementSet;

use super::{FiniteGroup, Side};

/// Witness that a set is `{a, ra, ..., r^j a}` (right) or `{a, ar, ..., a r^j}` (left).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Progression {
    pub ratio: usize,
    pub side: Side,
    pub start: usize,
    pub length: usize,
}

impl Progression {
    /// The set the witness describes.
    pub fn members(&self, group: &FiniteGroup) -> ElementSet {
        let mut x = self.start;
        let mut out = ElementSet::EMPTY;
        for _ in 0..self.length {
            out.insert(x);
            x = match self.side {
                Side::Right => group.mul(self.ratio, x),
                Side::Left => group.mul(x, self.ratio),
            };
        }
        out
    }
}

impl FiniteGroup {
    /// Finds a progression structure on `s`, if one exists.
    ///
    /// Sets with at most one element count as (degenerate) progressions with
    /// ratio `e`. For larger sets the start `a` must lie in `s` and so must the
    /// second term, which pins the ratio to `s a^{-1}` (right) or `a^{-1} s`
    /// (left); this covers every `(r, a)` pair that could succeed.
    pub fn is_progression(&self, s: ElementSet) -> Option<Progression> {
        let m = s.len();
        if m <= 1 {
            return Some(Progression {
                ratio: 0,
                side: Side::Right,
                start: s.first().unwrap_or(0),
                length: m,
            });
        }
        for side in [Side::Right, Side::Left] {
            for a in s {
                for b in s.without(a) {
                    let ratio = match side {
                        Side::Right => self.mul(b, self.inv(a)),
                        Side::Left => self.mul(self.inv(a), b),
                    };
                    let p = Progression {
                        ratio,
                        side,
                        start: a,
                        length: m,
                    };
                    if self.walk_matches(&p, s) {
                        return Some(p);
                    }
                }
            }
        }
        None
    }

    fn walk_matches(&self, p: &Progression, s: ElementSet) -> bool {
        let mut seen = ElementSet::EMPTY;
        let mut x = p.start;
        for _ in 0..p.length {
            if !s.contains(x) || seen.contains(x) {
                return false;
            }
            seen.insert(x);
            x = match p.side {
                Side::Right => self.mul(p.ratio, x),
                Side::Left => self.mul(x, p.ratio),
            };
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::super::families::*;
    use super::*;

    /// Tries every ratio, start and length on both sides.
    fn brute_force(g: &FiniteGroup, s: ElementSet) -> bool {
        if s.len() <= 1 {
            return true;
        }
        for side in [Side::Right, Side::Left] {
            for r in 0..g.order() {
                for a in 0..g.order() {
                    let mut acc = ElementSet::EMPTY;
                    let mut x = a;
                    for _ in 0..g.order() {
                        acc.insert(x);
                        if acc == s {
                            return true;
                        }
                        x = match side {
                            Side::Right => g.mul(r, x),
                            Side::Left => g.mul(x, r),
                        };
                    }
                }
            }
        }
        false
    }

    #[test]
    fn examples() {
        let z7 = cyclic(7).unwrap();
        let p = z7.is_progression(z7.set([0, 1, 2]).unwrap()).unwrap();
        assert_eq!(p.members(&z7), z7.set([0, 1, 2]).unwrap());
        assert!(z7.is_progression(z7.set([0, 1, 3]).unwrap()).is_none());

        let z12 = cyclic(12).unwrap();
        let s = z12.set([2, 5, 8]).unwrap();
        let p = z12.is_progression(s).unwrap();
        assert_eq!(p.members(&z12), s);
        assert!(p.ratio == 3 || p.ratio == 9);

        assert_eq!(z7.is_progression(ElementSet::EMPTY).unwrap().length, 0);
        assert_eq!(z7.is_progression(z7.set([4]).unwrap()).unwrap().start, 4);
    }

    #[test]
    fn agrees_with_brute_force() {
        for g in [cyclic(8).unwrap(), dihedral(8).unwrap(), quaternion().unwrap(), cyclic(9).unwrap()] {
            for bits in 0u64..1 << g.order() {
                let s = ElementSet::from_bits(bits);
                let fast = g.is_progression(s);
                assert_eq!(fast.is_some(), brute_force(&g, s), "{} {s}", g.name());
                if let Some(p) = fast {
                    assert_eq!(p.members(&g), s);
                }
            }
        }
    }
}
