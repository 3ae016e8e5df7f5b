//! Exact linear algebra over ℚ: reduced row echelon subspaces, kernels and
//! coordinate extraction. Everything here is dense; the algebras this crate
//! works with have dimension well below one hundred.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn zero_vec(n: usize) -> Vec<Rational> {
    vec![Rational::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = zero_vec(n);
    v[i] = Rational::one();
    v
}

pub fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += c * v`
pub fn axpy(acc: &mut [Rational], c: &Rational, v: &[Rational]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

/// Row-reduce `rows` in place, pivoting only on the first `pivot_cols`
/// columns. Returns the pivot column of each surviving row; zero rows are
/// dropped.
fn rref(rows: &mut Vec<Vec<Rational>>, pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..pivot_cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let c = -row[col].clone();
                axpy(row, &c, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// A linear subspace of ℚⁿ kept in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, (0..ambient).map(|i| unit_vec(ambient, i)))
    }

    pub fn span<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let mut rows: Vec<Vec<Rational>> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient, "vector length mismatch"))
            .filter(|v| !is_zero(v))
            .collect();
        let pivots = rref(&mut rows, ambient);
        Subspace { ambient, rows, pivots }
    }

    /// Span of a subset of the standard basis.
    pub fn coordinate<I: IntoIterator<Item = usize>>(ambient: usize, indices: I) -> Self {
        Self::span(ambient, indices.into_iter().map(|i| unit_vec(ambient, i)))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The echelon basis.
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    /// Residue of `v` after eliminating every pivot coordinate. Linear in `v`,
    /// and zero exactly when `v` lies in the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let c = -out[p].clone();
                axpy(&mut out, &c, row);
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        is_zero(&self.reduce(v))
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::span(self.ambient, self.rows.iter().chain(&other.rows).cloned())
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // x ∈ self written as Σ cᵢ bᵢ; require the residue modulo `other` to vanish.
        let images: Vec<Vec<Rational>> = self.rows.iter().map(|b| other.reduce(b)).collect();
        let combos = kernel_of_columns(&images, self.ambient);
        Subspace::span(self.ambient, combos.iter().map(|c| combine(c, &self.rows, self.ambient)))
    }
}

/// Σ cᵢ vᵢ
pub fn combine(coeffs: &[Rational], vectors: &[Vec<Rational>], len: usize) -> Vec<Rational> {
    let mut out = zero_vec(len);
    for (c, v) in coeffs.iter().zip(vectors) {
        axpy(&mut out, c, v);
    }
    out
}

/// Basis of `{c ∈ ℚᵐ : Σ cᵢ columnsᵢ = 0}` where each column has length `len`.
pub fn kernel_of_columns(columns: &[Vec<Rational>], len: usize) -> Vec<Vec<Rational>> {
    let m = columns.len();
    let rows: Vec<Vec<Rational>> = (0..len).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    nullspace(rows, m)
}

/// Basis of the nullspace of the matrix with the given rows and `ncols` columns.
pub fn nullspace(mut rows: Vec<Vec<Rational>>, ncols: usize) -> Vec<Vec<Rational>> {
    rows.retain(|r| !is_zero(r));
    let pivots = rref(&mut rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = zero_vec(ncols);
            v[f] = Rational::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Coordinates with respect to a fixed linearly independent family.
#[derive(Clone, Debug)]
pub struct Coordinates {
    len: usize,
    count: usize,
    // Each row is `[echelon vector | combination of the original family]`.
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Coordinates {
    /// Returns `None` when the family is linearly dependent.
    pub fn new(family: &[Vec<Rational>]) -> Option<Self> {
        let count = family.len();
        let len = family.first().map_or(0, Vec::len);
        let mut rows: Vec<Vec<Rational>> = family
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let mut row = v.clone();
                row.extend(unit_vec(count, i));
                row
            })
            .collect();
        let pivots = rref(&mut rows, len);
        if rows.len() != count {
            return None;
        }
        Some(Coordinates { len, count, rows, pivots })
    }

    /// Coefficients `c` with `Σ cᵢ familyᵢ = v`, or `None` if `v` is outside the span.
    pub fn solve(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let mut residue = v.to_vec();
        let mut coeffs = zero_vec(self.count);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = residue[p].clone();
            if c.is_zero() {
                continue;
            }
            for (r, x) in residue.iter_mut().zip(&row[..self.len]) {
                *r -= &c * x;
            }
            axpy(&mut coeffs, &c, &row[self.len..]);
        }
        is_zero(&residue).then_some(coeffs)
    }
}

pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: num_bigint::BigInt = n.trim().parse().ok()?;
            let d: num_bigint::BigInt = d.trim().parse().ok()?;
            (!d.is_zero()).then(|| Rational::new(n, d))
        }
        None => s.parse::<num_bigint::BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn abs_max(v: &[Rational]) -> Rational {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(Rational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn span_and_membership() {
        let s = Subspace::span(3, [v(&[1, 1, 0]), v(&[2, 2, 0]), v(&[0, 1, 1])]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v(&[1, 2, 1])));
        assert!(!s.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::coordinate(3, [0, 1]);
        let b = Subspace::span(3, [v(&[1, 0, 1]), v(&[0, 1, 0])]);
        let c = a.intersection(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&v(&[0, 1, 0])));
    }

    #[test]
    fn nullspace_dimension() {
        let k = nullspace(vec![v(&[1, 2, 3]), v(&[2, 4, 6])], 3);
        assert_eq!(k.len(), 2);
        for x in &k {
            let dot: Rational = x.iter().zip(v(&[1, 2, 3])).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn coordinates_roundtrip() {
        let fam = vec![v(&[1, -1, 0]), v(&[0, 1, -1])];
        let c = Coordinates::new(&fam).unwrap();
        assert_eq!(c.solve(&v(&[1, 0, -1])).unwrap(), v(&[1, 1]));
        assert!(c.solve(&v(&[1, 0, 0])).is_none());
        assert!(Coordinates::new(&[v(&[1, 0]), v(&[2, 0])]).is_none());
    }

    #[test]
    fn rational_text() {
        assert_eq!(parse_rational("-3/6").unwrap(), Rational::new((-1).into(), 2.into()));
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
        assert!(parse_rational("1/0").is_none());
    }
}
