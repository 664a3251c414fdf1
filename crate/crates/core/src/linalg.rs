//! Gaussian elimination over Q.

use num_traits::{One, Zero};

use crate::rational::Q;
use crate::vector::ExactVector;

/// Reduced row echelon form. Returns the nonzero rows and their pivot columns.
pub fn rref(rows: &[Vec<Q>]) -> (Vec<Vec<Q>>, Vec<usize>) {
    let mut m: Vec<Vec<Q>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Q::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..ncols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(vs: &[ExactVector]) -> usize {
    let rows: Vec<Vec<Q>> = vs.iter().map(|v| v.0.clone()).collect();
    rref(&rows).1.len()
}

/// Basis of {x : ⟨v, x⟩ = 0 for every v in `constraints`} inside Qⁿ.
pub fn nullspace(constraints: &[ExactVector], n: usize) -> Vec<ExactVector> {
    let rows: Vec<Vec<Q>> = constraints.iter().map(|v| v.0.clone()).collect();
    let (red, pivots) = if rows.is_empty() {
        (vec![], vec![])
    } else {
        rref(&rows)
    };
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = ExactVector::zero(n);
            x.0[f] = Q::one();
            for (row, &p) in red.iter().zip(&pivots) {
                x.0[p] = -row[f].clone();
            }
            x
        })
        .collect()
}

/// Basis of the subspace {x ∈ span(space) : ⟨v, x⟩ = 0 for v in `constraints`}.
pub fn kernel_within(space: &[ExactVector], constraints: &[ExactVector]) -> Vec<ExactVector> {
    if space.is_empty() {
        return vec![];
    }
    let n = space[0].dim();
    // x = Σ cⱼ sⱼ; constraint rows become ⟨v, sⱼ⟩.
    let rows: Vec<ExactVector> = constraints
        .iter()
        .map(|v| ExactVector(space.iter().map(|s| v.dot(s)).collect()))
        .collect();
    let coeffs = nullspace(&rows, space.len());
    let out: Vec<ExactVector> = coeffs
        .iter()
        .map(|c| {
            let terms: Vec<(Q, &ExactVector)> = c.0.iter().cloned().zip(space.iter()).collect();
            ExactVector::combination(n, &terms)
        })
        .collect();
    independent_subset(&out)
}

/// Orthogonal complement of `sub` inside span(`space`).
pub fn complement_within(space: &[ExactVector], sub: &[ExactVector]) -> Vec<ExactVector> {
    kernel_within(space, sub)
}

/// Greedy maximal linearly independent subfamily, preserving order.
pub fn independent_subset(vs: &[ExactVector]) -> Vec<ExactVector> {
    let mut out: Vec<ExactVector> = Vec::new();
    for v in vs {
        let mut trial = out.clone();
        trial.push(v.clone());
        if rank(&trial) == trial.len() {
            out = trial;
        }
    }
    out
}

/// Solves a square system `a x = b`; `None` when singular.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    let aug: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (red, pivots) = rref(&aug);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(red.iter().map(|r| r[n].clone()).collect())
}

/// Inverse of a square matrix; `None` when singular.
pub fn inverse(a: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = a.len();
    let aug: Vec<Vec<Q>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    let (red, pivots) = rref(&aug);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(red.iter().map(|r| r[n..].to_vec()).collect())
}

fn gram(basis: &[ExactVector]) -> Vec<Vec<Q>> {
    basis
        .iter()
        .map(|a| basis.iter().map(|b| a.dot(b)).collect())
        .collect()
}

/// Coefficients of the orthogonal projection of `v` onto span(`basis`)
/// with respect to `basis` (which must be independent).
pub fn projection_coeffs(v: &ExactVector, basis: &[ExactVector]) -> Vec<Q> {
    let rhs: Vec<Q> = basis.iter().map(|b| b.dot(v)).collect();
    solve(&gram(basis), &rhs).expect("projection basis must be independent")
}

pub fn project(v: &ExactVector, basis: &[ExactVector]) -> ExactVector {
    if basis.is_empty() {
        return ExactVector::zero(v.dim());
    }
    let c = projection_coeffs(v, basis);
    let terms: Vec<(Q, &ExactVector)> = c.into_iter().zip(basis.iter()).collect();
    ExactVector::combination(v.dim(), &terms)
}

/// Exact coordinates of `v` in `basis`, or `None` if `v` is outside the span.
pub fn coordinates(v: &ExactVector, basis: &[ExactVector]) -> Option<Vec<Q>> {
    if basis.is_empty() {
        return v.is_zero().then(Vec::new);
    }
    let c = projection_coeffs(v, basis);
    let terms: Vec<(Q, &ExactVector)> = c.iter().cloned().zip(basis.iter()).collect();
    (ExactVector::combination(v.dim(), &terms) == *v).then_some(c)
}

pub fn same_span(a: &[ExactVector], b: &[ExactVector]) -> bool {
    let ra = rank(a);
    let rb = rank(b);
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    ra == rb && rank(&both) == ra
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, qi};

    #[test]
    fn nullspace_of_trace() {
        let ones = ExactVector::from_ints(&[1, 1, 1]);
        let ns = nullspace(&[ones.clone()], 3);
        assert_eq!(ns.len(), 2);
        assert!(ns.iter().all(|v| v.dot(&ones).is_zero()));
    }

    #[test]
    fn solve_and_inverse() {
        let a = vec![vec![qi(2), qi(-1)], vec![qi(-1), qi(2)]];
        let inv = inverse(&a).unwrap();
        assert_eq!(inv[0], vec![q(2, 3), q(1, 3)]);
        assert_eq!(solve(&a, &[qi(1), qi(0)]).unwrap(), vec![q(2, 3), q(1, 3)]);
        assert!(inverse(&[vec![qi(1), qi(2)], vec![qi(2), qi(4)]]).is_none());
    }

    #[test]
    fn projection_onto_line() {
        let a = ExactVector::from_ints(&[1, 0, 0, -1]);
        let v = ExactVector::from_ints(&[1, -1, 0, 0]);
        assert_eq!(project(&v, &[a]), ExactVector::from_frac(&[1, 0, 0, -1], 2));
    }

    #[test]
    fn kernel_inside_subspace() {
        let e = |i| ExactVector::unit(3, i);
        let space = vec![e(0), e(1)];
        let k = kernel_within(&space, &[ExactVector::from_ints(&[1, 1, 5])]);
        assert_eq!(k.len(), 1);
        assert!(same_span(&k, &[ExactVector::from_ints(&[1, -1, 0])]));
    }
}
