//! Exact inverse of a small nonsingular integer matrix.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Frac {
    num: i128,
    den: i128,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Frac {
    fn int(n: i128) -> Self {
        Frac { num: n, den: 1 }
    }

    fn new(num: i128, den: i128) -> Self {
        debug_assert!(den != 0);
        let g = gcd(num, den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        Frac {
            num: s * num / g,
            den: s * den / g,
        }
    }

    fn is_zero(self) -> bool {
        self.num == 0
    }

    fn sub(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den - o.num * self.den, self.den * o.den)
    }

    fn mul(self, o: Frac) -> Frac {
        Frac::new(self.num * o.num, self.den * o.den)
    }

    fn div(self, o: Frac) -> Frac {
        Frac::new(self.num * o.den, self.den * o.num)
    }
}

/// Returns `(adj, det)` with `m^{-1} = adj / det`, where `m` is `n x n`
/// row-major. `None` if `m` is singular.
pub(crate) fn integer_inverse(m: &[i32], n: usize) -> Option<(Vec<i64>, i64)> {
    let mut a: Vec<Frac> = m.iter().map(|&x| Frac::int(x as i128)).collect();
    let mut inv: Vec<Frac> = vec![Frac::int(0); n * n];
    for i in 0..n {
        inv[i * n + i] = Frac::int(1);
    }
    let mut det = Frac::int(1);
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r * n + col].is_zero())?;
        if pivot != col {
            for c in 0..n {
                a.swap(pivot * n + c, col * n + c);
                inv.swap(pivot * n + c, col * n + c);
            }
            det = Frac::int(0).sub(det);
        }
        let p = a[col * n + col];
        det = det.mul(p);
        for c in 0..n {
            a[col * n + c] = a[col * n + c].div(p);
            inv[col * n + c] = inv[col * n + c].div(p);
        }
        for r in 0..n {
            if r == col {
                continue;
            }
            let f = a[r * n + col];
            if f.is_zero() {
                continue;
            }
            for c in 0..n {
                a[r * n + c] = a[r * n + c].sub(f.mul(a[col * n + c]));
                inv[r * n + c] = inv[r * n + c].sub(f.mul(inv[col * n + c]));
            }
        }
    }
    debug_assert_eq!(det.den, 1);
    let d = det.num;
    let adj = inv
        .iter()
        .map(|f| {
            let v = f.mul(Frac::int(d));
            debug_assert_eq!(v.den, 1);
            v.num as i64
        })
        .collect();
    Some((adj, d as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverts_a2_cartan() {
        let (adj, det) = integer_inverse(&[2, -1, -1, 2], 2).unwrap();
        assert_eq!(det, 3);
        assert_eq!(adj, vec![2, 1, 1, 2]);
    }

    #[test]
    fn singular_is_none() {
        assert!(integer_inverse(&[1, 2, 2, 4], 2).is_none());
    }
}
