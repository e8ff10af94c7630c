//! Arithmetic in the prime field F_p for p = 2^61 - 1.

/// The Mersenne prime 2^61 - 1.
pub const P: u64 = (1u64 << 61) - 1;

#[inline]
pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

#[inline]
pub fn mul(a: u64, b: u64) -> u64 {
    (((a as u128) * (b as u128)) % (P as u128)) as u64
}

pub fn pow(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1u64;
    base %= P;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul(acc, base);
        }
        base = mul(base, base);
        exp >>= 1;
    }
    acc
}

pub fn inv(a: u64) -> u64 {
    assert_ne!(a % P, 0, "zero has no inverse");
    pow(a, P - 2)
}

/// Determinant of a square matrix over F_p by Gaussian elimination.
pub fn determinant(mat: &mut Vec<Vec<u64>>) -> u64 {
    let n = mat.len();
    let mut det = 1u64;
    for col in 0..n {
        let pivot = (col..n).find(|&r| mat[r][col] != 0);
        let pivot = match pivot {
            None => return 0,
            Some(r) => r,
        };
        if pivot != col {
            mat.swap(pivot, col);
            det = sub(0, det);
        }
        let pval = mat[col][col];
        det = mul(det, pval);
        let pinv = inv(pval);
        for r in col + 1..n {
            if mat[r][col] == 0 {
                continue;
            }
            let factor = mul(mat[r][col], pinv);
            for c in col..n {
                let t = mul(factor, mat[col][c]);
                mat[r][c] = sub(mat[r][c], t);
            }
        }
    }
    det
}

/// Lagrange interpolation: given d+1 samples (x_i, y_i) of a polynomial of
/// degree <= d with distinct x_i, returns its coefficient vector.
pub fn interpolate(xs: &[u64], ys: &[u64]) -> Vec<u64> {
    let d = xs.len();
    assert_eq!(d, ys.len());
    // master(y) = prod (y - x_i), computed as a coefficient vector.
    let mut master = vec![0u64; d + 1];
    master[0] = 1;
    for (i, &x) in xs.iter().enumerate() {
        // multiply by (y - x)
        let mut next = vec![0u64; d + 1];
        for c in 0..=i {
            next[c + 1] = add(next[c + 1], master[c]);
            next[c] = add(next[c], mul(master[c], sub(0, x)));
        }
        master = next;
    }
    let mut coeffs = vec![0u64; d];
    for (j, (&xj, &yj)) in xs.iter().zip(ys.iter()).enumerate() {
        // basis_j = master / (y - x_j), by synthetic division.
        let mut q = vec![0u64; d];
        let mut carry = 0u64;
        for c in (0..d).rev() {
            q[c] = add(master[c + 1], carry);
            carry = mul(q[c], xj);
        }
        // denominator = prod_{m != j} (x_j - x_m)
        let mut denom = 1u64;
        for (m, &xm) in xs.iter().enumerate() {
            if m != j {
                denom = mul(denom, sub(xj, xm));
            }
        }
        let scale = mul(yj, inv(denom));
        for c in 0..d {
            coeffs[c] = add(coeffs[c], mul(scale, q[c]));
        }
    }
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_identities() {
        assert_eq!(add(P - 1, 1), 0);
        assert_eq!(sub(0, 1), P - 1);
        assert_eq!(mul(inv(12345), 12345), 1);
        assert_eq!(pow(3, P - 1), 1);
    }

    #[test]
    fn determinant_small() {
        let mut m = vec![vec![1, 2], vec![3, 4]];
        // det = -2 mod p
        assert_eq!(determinant(&mut m), P - 2);
        let mut sing = vec![vec![1, 2], vec![2, 4]];
        assert_eq!(determinant(&mut sing), 0);
    }

    #[test]
    fn interpolation_recovers_coefficients() {
        // f(y) = 7 + 5y + 3y^3
        let f = |y: u64| add(add(7, mul(5, y)), mul(3, pow(y, 3)));
        let xs: Vec<u64> = (1..=4).collect();
        let ys: Vec<u64> = xs.iter().map(|&x| f(x)).collect();
        let coeffs = interpolate(&xs, &ys);
        assert_eq!(coeffs, vec![7, 5, 0, 3]);
    }
}
