//! Evaluation codes: RM_q(2,2), RM_q(1,m), PRM_q(d,m), and field extensions.

use crate::error::{Error, Result};
use crate::exactalg::{field_of_order, make_field, FFMatrix, FieldElement, FiniteField};

use super::LinearCode;

const MAX_LENGTH: u64 = 1 << 16;

fn affine_points(field: &FiniteField, m: usize) -> Vec<Vec<FieldElement>> {
    let q = field.order() as usize;
    let total = q.pow(m as u32);
    (0..total)
        .map(|mut idx| {
            let mut pt = vec![FieldElement::ZERO; m];
            for c in (0..m).rev() {
                pt[c] = field.element((idx % q) as u32);
                idx /= q;
            }
            pt
        })
        .collect()
}

/// Representatives of P^m: affine points (x, 1) in lexicographic order, then the
/// hyperplane at infinity recursively.
pub fn projective_points(field: &FiniteField, m: usize) -> Vec<Vec<FieldElement>> {
    if m == 0 {
        return vec![vec![FieldElement::ONE]];
    }
    let mut pts: Vec<Vec<FieldElement>> = affine_points(field, m)
        .into_iter()
        .map(|mut p| {
            p.push(FieldElement::ONE);
            p
        })
        .collect();
    for mut p in projective_points(field, m - 1) {
        p.push(FieldElement::ZERO);
        pts.push(p);
    }
    pts
}

/// Exponent vectors of degree-d monomials in `vars` variables, lexicographically
/// decreasing (x² before xy before xz ...).
pub fn monomials(vars: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(vars: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if vars == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for a in (0..=d).rev() {
            prefix.push(a);
            rec(vars - 1, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(vars, d, &mut Vec::new(), &mut out);
    out
}

fn evaluate(field: &FiniteField, exps: &[u32], pt: &[FieldElement]) -> FieldElement {
    exps.iter()
        .zip(pt)
        .fold(FieldElement::ONE, |acc, (&e, &x)| field.mul(acc, field.pow(x, e as u64)))
}

fn evaluation_code(
    field: &FiniteField,
    monos: &[Vec<u32>],
    points: Vec<Vec<FieldElement>>,
    label: String,
) -> Result<LinearCode> {
    let mut g = FFMatrix::zeros(field, monos.len(), points.len());
    for (r, mono) in monos.iter().enumerate() {
        for (c, pt) in points.iter().enumerate() {
            g.set(r, c, evaluate(field, mono, pt));
        }
    }
    LinearCode::new(g, Some(label), points)
}

/// RM_q(2,2) from the rows x², xy, xz, y², yz, z² at points (x:y:1); for q = 2 the
/// xz and yz rows are dropped.
pub fn build_rm22(q: u32) -> Result<LinearCode> {
    let field = field_of_order(q)?;
    let mut monos = monomials(3, 2);
    if q == 2 {
        monos.retain(|m| !(m[2] == 1 && (m[0] == 1 || m[1] == 1)));
    }
    let points = affine_points(&field, 2)
        .into_iter()
        .map(|mut p| {
            p.push(FieldElement::ONE);
            p
        })
        .collect();
    evaluation_code(&field, &monos, points, format!("RM_{q}(2,2)"))
}

/// RM_q(d,m): polynomials of degree ≤ d in m variables at all points of GF(q)^m,
/// with monomials ordered as the degree-d forms in m+1 variables.
pub fn build_rm(q: u32, d: u32, m: u32) -> Result<LinearCode> {
    let field = field_of_order(q)?;
    if d >= q {
        return Err(Error::DegreeTooLarge { d, q });
    }
    if d == 0 || m == 0 {
        return Err(Error::OutOfRange("d and m must be positive".into()));
    }
    if (q as u64).checked_pow(m).is_none_or(|n| n > MAX_LENGTH) {
        return Err(Error::TooLarge {
            what: format!("length {q}^{m}"),
            limit: MAX_LENGTH,
        });
    }
    let monos = monomials(m as usize + 1, d);
    let points = affine_points(&field, m as usize)
        .into_iter()
        .map(|mut p| {
            p.push(FieldElement::ONE);
            p
        })
        .collect();
    evaluation_code(&field, &monos, points, format!("RM_{q}({d},{m})"))
}

/// RM_q(1,m): evaluations of 1, X_1, ..., X_m at all points of GF(q)^m.
pub fn build_rm1m(q: u32, m: u32) -> Result<LinearCode> {
    let field = field_of_order(q)?;
    if m == 0 {
        return Err(Error::OutOfRange("m must be positive".into()));
    }
    if (q as u64).checked_pow(m).is_none_or(|n| n > MAX_LENGTH) {
        return Err(Error::TooLarge {
            what: format!("length {q}^{m}"),
            limit: MAX_LENGTH,
        });
    }
    let mut monos = vec![vec![0; m as usize]];
    for i in 0..m as usize {
        let mut e = vec![0; m as usize];
        e[i] = 1;
        monos.push(e);
    }
    let points = affine_points(&field, m as usize);
    evaluation_code(&field, &monos, points, format!("RM_{q}(1,{m})"))
}

/// PRM_q(d,m): degree-d forms in m+1 variables at the representatives of P^m.
pub fn build_prm(q: u32, d: u32, m: u32) -> Result<LinearCode> {
    let field = field_of_order(q)?;
    if d >= q {
        return Err(Error::DegreeTooLarge { d, q });
    }
    if d == 0 || m == 0 {
        return Err(Error::OutOfRange("d and m must be positive".into()));
    }
    let len = ((q as u64).pow(m + 1) - 1) / (q as u64 - 1);
    if len > MAX_LENGTH {
        return Err(Error::TooLarge {
            what: format!("length of PRM_{q}({d},{m})"),
            limit: MAX_LENGTH,
        });
    }
    let monos = monomials(m as usize + 1, d);
    let points = projective_points(&field, m as usize);
    evaluation_code(&field, &monos, points, format!("PRM_{q}({d},{m})"))
}

/// The same generator matrix read over GF(q^m).
pub fn extend_code(c: &LinearCode, m: u32) -> Result<LinearCode> {
    if m == 0 {
        return Err(Error::OutOfRange("extension degree must be positive".into()));
    }
    let small = c.field();
    let big = make_field(small.characteristic(), small.degree() * m)?;
    let map = big.embedding_of(small)?;
    let g = c.generator();
    let mut out = FFMatrix::zeros(&big, g.rows(), g.cols());
    for r in 0..g.rows() {
        for col in 0..g.cols() {
            out.set(r, col, map[g.get(r, col).value() as usize]);
        }
    }
    let points = c
        .points()
        .iter()
        .map(|p| p.iter().map(|x| map[x.value() as usize]).collect())
        .collect();
    let label = c.label().map(|l| format!("{l} over GF({})", big.order()));
    LinearCode::new(out, label, points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_order_matches_conic_coefficients() {
        assert_eq!(
            monomials(3, 2),
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![1, 0, 1],
                vec![0, 2, 0],
                vec![0, 1, 1],
                vec![0, 0, 2]
            ]
        );
    }

    #[test]
    fn projective_plane_point_order() {
        let f = field_of_order(2).unwrap();
        let pts: Vec<Vec<u32>> = projective_points(&f, 2)
            .iter()
            .map(|p| p.iter().map(|x| x.value()).collect())
            .collect();
        assert_eq!(
            pts,
            vec![
                vec![0, 0, 1],
                vec![0, 1, 1],
                vec![1, 0, 1],
                vec![1, 1, 1],
                vec![0, 1, 0],
                vec![1, 1, 0],
                vec![1, 0, 0]
            ]
        );
    }

    #[test]
    fn rm22_parameters() {
        let c3 = build_rm22(3).unwrap();
        assert_eq!((c3.length(), c3.dimension()), (9, 6));
        assert_eq!(c3.generator().rank(), 6);
        let c2 = build_rm22(2).unwrap();
        assert_eq!((c2.length(), c2.dimension()), (4, 4));
        assert!(build_rm22(6).is_err());
    }

    #[test]
    fn rm1m_parameters() {
        let c = build_rm1m(3, 1).unwrap();
        assert_eq!((c.length(), c.dimension()), (3, 2));
        assert!(matches!(build_rm1m(2, 17), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn prm_parameters() {
        for (q, n) in [(3, 13), (4, 21), (5, 31)] {
            let c = build_prm(q, 2, 2).unwrap();
            assert_eq!((c.length(), c.dimension()), (n, 6));
        }
        assert_eq!(build_prm(3, 3, 2).unwrap_err(), Error::DegreeTooLarge { d: 3, q: 3 });
    }

    #[test]
    fn extension_keeps_shape() {
        let c = build_rm22(2).unwrap();
        let e1 = extend_code(&c, 1).unwrap();
        assert_eq!(e1.generator(), c.generator());
        let e2 = extend_code(&c, 2).unwrap();
        assert_eq!(e2.field().order(), 4);
        assert_eq!((e2.length(), e2.dimension()), (4, 4));
    }

    #[test]
    fn generic_rm_matches_rm22_and_prm_affine_part() {
        let a = build_rm(3, 2, 2).unwrap();
        let b = build_rm22(3).unwrap();
        assert_eq!(a.generator(), b.generator());
        let prm = build_prm(3, 1, 2).unwrap();
        let rm = build_rm(3, 1, 2).unwrap();
        assert_eq!(rm.dimension(), 3);
        for (c, pt) in rm.points().iter().enumerate() {
            assert_eq!(&prm.points()[c], pt);
        }
        assert_eq!(build_rm(3, 3, 2).unwrap_err(), Error::DegreeTooLarge { d: 3, q: 3 });
    }
}
