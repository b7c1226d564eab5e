//! Exact integer linear algebra on small matrices, for the polyhedral fan
//! checks. Vectors are primitive integer vectors; elimination keeps rows
//! integral by cross-multiplying and dividing out gcds. All products go
//! through checked i128 arithmetic and report overflow instead of wrapping;
//! within the supported fan sizes (rank <= 16, entries of small magnitude)
//! overflow does not occur.

use crate::error::{Error, Result};

pub(crate) type Scalar = i128;

pub(crate) fn mul(a: Scalar, b: Scalar) -> Result<Scalar> {
    a.checked_mul(b).ok_or(Error::ArithmeticOverflow)
}

pub(crate) fn sub(a: Scalar, b: Scalar) -> Result<Scalar> {
    a.checked_sub(b).ok_or(Error::ArithmeticOverflow)
}

pub(crate) fn gcd(a: Scalar, b: Scalar) -> Scalar {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: Scalar, b: Scalar) -> Result<Scalar> {
    if a == 0 || b == 0 {
        return Ok(0);
    }
    mul(a / gcd(a, b), b)
}

/// Divides the vector by the gcd of its entries (sign preserved); returns
/// false for the zero vector.
pub(crate) fn normalize_primitive(v: &mut [Scalar]) -> bool {
    let g = v.iter().fold(0, |acc, &x| gcd(acc, x));
    if g == 0 {
        return false;
    }
    if g != 1 {
        for x in v.iter_mut() {
            *x /= g;
        }
    }
    true
}

pub(crate) fn dot(a: &[Scalar], b: &[Scalar]) -> Result<Scalar> {
    debug_assert_eq!(a.len(), b.len());
    let mut total: Scalar = 0;
    for (&x, &y) in a.iter().zip(b) {
        total = total
            .checked_add(mul(x, y)?)
            .ok_or(Error::ArithmeticOverflow)?;
    }
    Ok(total)
}

/// Reduced rows plus their (row, column) pivot positions.
pub(crate) type ReducedSystem = (Vec<Vec<Scalar>>, Vec<(usize, usize)>);

/// Integer Gauss-Jordan form: every pivot is positive and primitive-scaled,
/// and pivot columns are cleared in all other rows.
#[allow(clippy::needless_range_loop)]
pub(crate) fn gauss_jordan(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> Result<ReducedSystem> {
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(choice) = (rank..rows.len())
            .filter(|&r| rows[r][col] != 0)
            .min_by_key(|&r| rows[r][col].unsigned_abs())
        else {
            continue;
        };
        rows.swap(rank, choice);
        if rows[rank][col] < 0 {
            for x in rows[rank].iter_mut() {
                *x = -*x;
            }
        }
        normalize_primitive(&mut rows[rank]);
        let pivot = rows[rank][col];
        for r in 0..rows.len() {
            if r == rank || rows[r][col] == 0 {
                continue;
            }
            let value = rows[r][col];
            let g = gcd(pivot, value);
            let (pa, va) = (pivot / g, value / g);
            for c in 0..ncols {
                let scaled = mul(pa, rows[r][c])?;
                rows[r][c] = sub(scaled, mul(va, rows[rank][c])?)?;
            }
            normalize_primitive(&mut rows[r]);
        }
        pivots.push((rank, col));
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    // clearing later pivot columns may have rescaled earlier pivot rows
    for &(r, c) in &pivots {
        if rows[r][c] < 0 {
            for x in rows[r].iter_mut() {
                *x = -*x;
            }
        }
        normalize_primitive(&mut rows[r]);
    }
    Ok((rows, pivots))
}

pub(crate) fn rank(rows: &[Vec<Scalar>], ncols: usize) -> Result<usize> {
    Ok(gauss_jordan(rows.to_vec(), ncols)?.1.len())
}

/// Primitive integer basis of the kernel `{x : rows * x = 0}` in dimension
/// `ncols`, one vector per free column.
pub(crate) fn kernel_basis(rows: &[Vec<Scalar>], ncols: usize) -> Result<Vec<Vec<Scalar>>> {
    let (reduced, pivots) = gauss_jordan(rows.to_vec(), ncols)?;
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut scale: Scalar = 1;
    for &(r, c) in &pivots {
        scale = lcm(scale, reduced[r][c])?;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![0; ncols];
        v[free] = scale;
        for &(r, c) in &pivots {
            v[c] = -mul(reduced[r][free], scale / reduced[r][c])?;
        }
        normalize_primitive(&mut v);
        basis.push(v);
    }
    Ok(basis)
}
