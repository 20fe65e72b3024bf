//! Skew Schur functions, Weyl bialternants, the Zelevinsky–Stembridge
//! decomposition, and the rank-generating-function formula it specializes
//! to.
//!
//! Bialternants are computed as weight generating functions of classical GT
//! lattices rather than by determinantal formulas, which keeps everything
//! inside the lattice toolkit and doubles as a cross-check of the builder.

use crate::lattice::build;
use crate::shapes::{Partition, ShapeOp, SkewShape};
use crate::tableaux::{enumerate_tableaux, is_nu_ballot, to_parallelogram, wt};
use crate::weights::{rgf_card_length_type_a, LaurentPoly, QPoly, Weight, WeightsError};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SchurError {
    #[error("weight {0:?} is not dominant")]
    NonDominant(Weight),
    #[error("weight has rank {got}, expected {expected}")]
    RankMismatch { got: usize, expected: usize },
    #[error("chi identity failed for shape {shape} and nu {nu:?}: this signals a ballot bug")]
    IdentityFailure { shape: String, nu: Weight },
    #[error("rank generating function mismatch for shape {shape}")]
    RgfMismatch { shape: String },
    #[error(transparent)]
    Weights(#[from] WeightsError),
}

/// The skew Schur function `theta_{P/Q} = sum_T Z^{wt(T)}`, summed directly
/// over semistandard tableaux.
pub fn theta(s: &SkewShape) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for t in enumerate_tableaux(s) {
        out.add_term(&wt(&t), 1);
    }
    out
}

/// The type-A Weyl bialternant `chi_lambda` with `n` variables, realized as
/// the WGF of the classical GT lattice of the partition with
/// `P_i = lambda_i + ... + lambda_{n-1}`.
pub fn chi(lambda: &Weight, n: usize) -> Result<LaurentPoly, SchurError> {
    if lambda.rank() != n - 1 {
        return Err(SchurError::RankMismatch {
            got: lambda.rank(),
            expected: n - 1,
        });
    }
    if !lambda.is_dominant() {
        return Err(SchurError::NonDominant(lambda.clone()));
    }
    let parts: Vec<i64> = (0..n)
        .map(|i| lambda.0[i..].iter().sum::<i64>())
        .collect();
    let shape = SkewShape::classical(Partition::new(parts).expect("suffix sums decrease"), n)
        .expect("non-skew shapes are always compatible");
    Ok(build(&shape).wgf())
}

/// A ZS-rule decomposition: constituents with multiplicities, keyed by
/// dominant weights in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurDecomposition {
    pub shape: SkewShape,
    pub nu: Weight,
    pub constituents: BTreeMap<Weight, usize>,
}

impl SchurDecomposition {
    pub fn total_multiplicity(&self) -> usize {
        self.constituents.values().sum()
    }
}

/// `true` when every constituent occurs exactly once.
pub fn is_multiplicity_free(d: &SchurDecomposition) -> bool {
    d.constituents.values().all(|&m| m == 1)
}

/// Decompose `chi_nu · theta_{P/Q}` into bialternants: the constituents are
/// `nu + wt(z)` over the `nu`-ballot-admissible elements `z`. The exact
/// Laurent identity `chi_nu · theta = sum chi` is verified before
/// returning; failure is a hard error.
pub fn zs_decompose(s: &SkewShape, nu: &Weight) -> Result<SchurDecomposition, SchurError> {
    let n = s.n();
    if nu.rank() != n - 1 {
        return Err(SchurError::RankMismatch {
            got: nu.rank(),
            expected: n - 1,
        });
    }
    if !nu.is_dominant() {
        return Err(SchurError::NonDominant(nu.clone()));
    }
    let mut constituents: BTreeMap<Weight, usize> = BTreeMap::new();
    for t in enumerate_tableaux(s) {
        let g = to_parallelogram(&t);
        if is_nu_ballot(&g, nu).expect("nu checked dominant") {
            *constituents.entry(nu.add(&wt(&t))).or_insert(0) += 1;
        }
    }
    let mut rhs = LaurentPoly::zero();
    let mut chi_cache: BTreeMap<Weight, LaurentPoly> = BTreeMap::new();
    for (lam, &mult) in &constituents {
        if !chi_cache.contains_key(lam) {
            let c = chi(lam, n)?;
            chi_cache.insert(lam.clone(), c);
        }
        for (mu, c) in chi_cache[lam].terms() {
            rhs.add_term(&mu, c * mult as i64);
        }
    }
    let lhs = chi(nu, n)?.mul(&theta(s));
    if lhs != rhs {
        return Err(SchurError::IdentityFailure {
            shape: s.to_string(),
            nu: nu.clone(),
        });
    }
    Ok(SchurDecomposition {
        shape: s.clone(),
        nu: nu.clone(),
        constituents,
    })
}

/// Rank generating function by the ballot specialization:
/// `sum_z q^{rho(max) - rho(z)} RGF(chi_{wt(z)})`, which must equal the
/// lattice rank generating function exactly.
pub fn rgf_via_zs(s: &SkewShape) -> Result<QPoly, SchurError> {
    let l = build(s);
    let top_rank = l.length();
    let mut out = QPoly::zero();
    for v in 0..l.num_vertices() {
        let g = l.vertex(v);
        let nu = Weight::zero(s.n() - 1);
        if is_nu_ballot(g, &nu).expect("zero weight is dominant") {
            let (rgf, _, _) = rgf_card_length_type_a(&l.weight(v))?;
            let shift = (top_rank - l.rank(v)) as usize;
            out = out.add(&QPoly::monomial(shift).mul(&rgf));
        }
    }
    if out != l.rgf() {
        return Err(SchurError::RgfMismatch {
            shape: s.to_string(),
        });
    }
    Ok(out)
}

/// Dualize a weight generating function along a shape operation:
/// identity, `Z^mu -> Z^{rev mu}` (column complement), `Z^mu -> Z^{-mu}`
/// (dual), or `Z^mu -> Z^{-rev mu}` (rotation).
pub fn dualized_wgf(p: &LaurentPoly, op: ShapeOp) -> LaurentPoly {
    match op {
        ShapeOp::Identity => p.clone(),
        ShapeOp::ColumnComplement => p.sigma0_type_a(),
        ShapeOp::Dual => p.star(),
        ShapeOp::Rotate => p.sigma0_type_a().star(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::{enumerate_shapes, shape_op, SHAPE_OPS};
    use crate::weights::{dynkin_poly, root_data, weyl_dim, Kind};

    fn shape(p: &[i64], q: &[i64], n: usize) -> SkewShape {
        SkewShape::new(
            Partition::new(p.to_vec()).unwrap(),
            Partition::new(q.to_vec()).unwrap(),
            n,
        )
        .unwrap()
    }

    #[test]
    fn theta_basics() {
        let t = theta(&shape(&[1], &[0], 2));
        assert_eq!(t.coeff(&Weight(vec![1])), 1);
        assert_eq!(t.coeff(&Weight(vec![-1])), 1);
        assert_eq!(t.num_terms_with_multiplicity(), 2);

        let t = theta(&shape(&[3, 3], &[2, 0], 3));
        assert_eq!(t.num_terms_with_multiplicity(), 15);
    }

    #[test]
    fn theta_matches_wgf() {
        for s in enumerate_shapes(5, 3) {
            assert_eq!(theta(&s), build(&s).wgf(), "shape {s}");
        }
    }

    #[test]
    fn chi_dimensions() {
        assert_eq!(chi(&Weight(vec![0, 0]), 3).unwrap(), LaurentPoly::one(2));
        let adjoint = chi(&Weight(vec![1, 1]), 3).unwrap();
        assert_eq!(adjoint.num_terms_with_multiplicity(), 8);
        let c = chi(&Weight(vec![1, 2]), 3).unwrap();
        assert_eq!(c.num_terms_with_multiplicity(), 15);
        let rd = root_data(Kind::A, 2).unwrap();
        assert_eq!(weyl_dim(&rd, &Weight(vec![1, 2])).unwrap(), 15);
    }

    #[test]
    fn classical_schur_under_change_of_variables() {
        // s_{P/Q}(x_1..x_n) maps termwise onto theta under
        // x_i = z_{i-1}^{-1} z_i with z_0 = z_n = 1: exponent bookkeeping
        // reduces to the entry-count weight map
        let s = shape(&[2, 1], &[0, 0], 3);
        let mut direct = LaurentPoly::zero();
        for t in enumerate_tableaux(&s) {
            direct.add_term(&crate::tableaux::wt_of_counts(&t.entry_counts()), 1);
        }
        assert_eq!(direct, theta(&s));
    }

    #[test]
    fn decomposition_21() {
        let d = zs_decompose(&shape(&[3, 3, 1], &[2, 0, 0], 3), &Weight::zero(2)).unwrap();
        let expected: BTreeMap<Weight, usize> =
            [(Weight(vec![1, 2]), 1), (Weight(vec![2, 0]), 1)].into();
        assert_eq!(d.constituents, expected);
        assert!(is_multiplicity_free(&d));
    }

    #[test]
    fn decomposition_55() {
        let d = zs_decompose(&shape(&[4, 3, 1], &[2, 0, 0], 3), &Weight::zero(2)).unwrap();
        // partitions (4,2), (3,3), (3,0), (2,1) in omega-coordinates
        let expected: BTreeMap<Weight, usize> = [
            (Weight(vec![2, 2]), 1),
            (Weight(vec![0, 3]), 1),
            (Weight(vec![3, 0]), 1),
            (Weight(vec![1, 1]), 1),
        ]
        .into();
        assert_eq!(d.constituents, expected);
        assert!(is_multiplicity_free(&d));
    }

    #[test]
    fn decomposition_144_has_multiplicities() {
        let d = zs_decompose(&shape(&[5, 4, 2], &[3, 1, 0], 3), &Weight::zero(2)).unwrap();
        let expected: BTreeMap<Weight, usize> = [
            (Weight(vec![3, 2]), 1),
            (Weight(vec![4, 0]), 1),
            (Weight(vec![1, 3]), 2),
            (Weight(vec![2, 1]), 2),
            (Weight(vec![0, 2]), 1),
            (Weight(vec![1, 0]), 1),
        ]
        .into();
        assert_eq!(d.constituents, expected);
        assert!(!is_multiplicity_free(&d));
        let rd = root_data(Kind::A, 2).unwrap();
        let total: i64 = d
            .constituents
            .iter()
            .map(|(lam, &mult)| mult as i64 * weyl_dim(&rd, lam).unwrap())
            .sum();
        assert_eq!(total, 144);
    }

    #[test]
    fn single_cell_decomposition() {
        let d = zs_decompose(&shape(&[1], &[0], 2), &Weight::zero(1)).unwrap();
        assert_eq!(d.constituents, [(Weight(vec![1]), 1)].into());
    }

    #[test]
    fn chi_identity_with_nonzero_nu() {
        let s = shape(&[3, 3], &[2, 0], 3);
        for nu in [Weight::zero(2), Weight::fundamental(1, 2), Weight::rho(2)] {
            zs_decompose(&s, &nu).unwrap();
        }
    }

    #[test]
    fn rgf_via_zs_examples() {
        let p = rgf_via_zs(&shape(&[1], &[0], 2)).unwrap();
        assert_eq!(p, QPoly::new(vec![1, 1]));
        let p = rgf_via_zs(&shape(&[4, 3, 1], &[2, 0, 0], 3)).unwrap();
        assert_eq!(p, QPoly::new(vec![1, 4, 7, 10, 11, 10, 7, 4, 1]));
    }

    #[test]
    fn rgf_three_routes_agree() {
        use crate::weights::rgf_from_decomposition;
        let rd = root_data(Kind::A, 2).unwrap();
        for s in enumerate_shapes(5, 3) {
            let l = build(&s);
            let from_lattice = l.rgf();
            let via_zs = rgf_via_zs(&s).unwrap();
            assert_eq!(from_lattice, via_zs, "shape {s}");
            let d = zs_decompose(&s, &Weight::zero(2)).unwrap();
            let mut lambdas = Vec::new();
            for (lam, mult) in &d.constituents {
                for _ in 0..*mult {
                    lambdas.push(lam.clone());
                }
            }
            let top = l.weight(l.max_vertex().unwrap());
            let via_dynkin = rgf_from_decomposition(&rd, &lambdas, &top).unwrap();
            assert_eq!(from_lattice, via_dynkin, "shape {s}");
        }
    }

    #[test]
    fn rgf_21_matches_two_constituent_sum() {
        use crate::weights::rgf_from_decomposition;
        let rd = root_data(Kind::A, 2).unwrap();
        let l = build(&shape(&[3, 3, 1], &[2, 0, 0], 3));
        let sum = rgf_from_decomposition(
            &rd,
            &[Weight(vec![1, 2]), Weight(vec![2, 0])],
            &Weight(vec![1, 2]),
        )
        .unwrap();
        assert_eq!(l.rgf(), sum);
        assert_eq!(sum.eval_at_one(), 21);
    }

    #[test]
    fn dualized_theta_matches_shape_ops() {
        for s in enumerate_shapes(5, 3) {
            let base = theta(&s);
            for op in SHAPE_OPS {
                assert_eq!(
                    theta(&shape_op(&s, op)),
                    dualized_wgf(&base, op),
                    "shape {s}, op {op:?}"
                );
            }
        }
    }

    #[test]
    fn constituent_count_is_ballot_count() {
        for s in enumerate_shapes(5, 3) {
            let d = zs_decompose(&s, &Weight::zero(2)).unwrap();
            let ballots = enumerate_tableaux(&s)
                .iter()
                .filter(|t| crate::tableaux::is_ballot(&to_parallelogram(t)))
                .count();
            assert_eq!(d.total_multiplicity(), ballots);
        }
    }

    #[test]
    fn constituents_of_dynkin_are_symmetric_unimodal() {
        use crate::weights::poly_props;
        let rd = root_data(Kind::A, 2).unwrap();
        let d = zs_decompose(&shape(&[4, 3, 1], &[2, 0, 0], 3), &Weight::zero(2)).unwrap();
        for lam in d.constituents.keys() {
            let p = dynkin_poly(&rd, lam).unwrap();
            let props = poly_props(&p);
            assert!(props.symmetric && props.unimodal);
        }
    }
}
