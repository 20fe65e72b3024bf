//! Root-system data for types A, B, D, together with the polynomial types
//! used everywhere else: weights in fundamental-weight coordinates, Laurent
//! polynomials over the weight lattice, and single-variable `q`-polynomials.
//!
//! Conventions are Humphreys/Bourbaki numbering. In type B the short root
//! sits at node `n`, so `a[n-2][n-1] = -2` and `a[n-1][n-2] = -1`. Positive
//! coroots are generated by closure from the simple coroots and self-checked
//! against the classical counts, rather than read off hard-coded tables.

use num::rational::Ratio;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeightsError {
    #[error("unsupported root system {kind:?}{rank}")]
    UnsupportedRank { kind: Kind, rank: usize },
    #[error("weight {0:?} is not dominant")]
    NonDominant(Weight),
    #[error("simple-root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("lambda_top is not maximal under the rho-check pairing")]
    TopNotMaximal,
    #[error("rank-shift pairing is not an integer")]
    NonIntegralShift,
    #[error("weight has rank {got}, expected {expected}")]
    RankMismatch { got: usize, expected: usize },
}

/// Classification type of the root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    A,
    B,
    D,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::A => write!(f, "A"),
            Kind::B => write!(f, "B"),
            Kind::D => write!(f, "D"),
        }
    }
}

/// A weight in fundamental-weight coordinates: `coords[i-1]` is the
/// coefficient of `omega_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(i: usize, rank: usize) -> Self {
        let mut w = vec![0; rank];
        w[i - 1] = 1;
        Weight(w)
    }

    pub fn rho(rank: usize) -> Self {
        Weight(vec![1; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&m| m >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    /// `w0`-conjugate in type A: coordinate reversal.
    pub fn reversed(&self) -> Weight {
        let mut v = self.0.clone();
        v.reverse();
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, m) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

/// Cartan matrix, positive coroots (as coefficient vectors over the simple
/// coroots) and their pairings with `rho`.
#[derive(Debug, Clone)]
pub struct RootData {
    pub kind: Kind,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub positive_coroots: Vec<Vec<i64>>,
    pub rho_pairings: Vec<i64>,
    rho_vee: Vec<Ratio<i64>>,
}

/// Construct the root data for `kind`/`rank` with the conventions above.
pub fn root_data(kind: Kind, rank: usize) -> Result<RootData, WeightsError> {
    let ok = match kind {
        Kind::A => rank >= 1,
        Kind::B => rank >= 2,
        Kind::D => rank >= 3,
    };
    if !ok {
        return Err(WeightsError::UnsupportedRank { kind, rank });
    }
    let n = rank;
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match kind {
        Kind::A => {
            for i in 0..n - 1 {
                chain(&mut a, i, i + 1);
            }
        }
        Kind::B => {
            for i in 0..n - 1 {
                chain(&mut a, i, i + 1);
            }
            // short root at node n
            a[n - 2][n - 1] = -2;
            a[n - 1][n - 2] = -1;
        }
        Kind::D => {
            // chain through node n-1, with node n also attached to node n-2
            for i in 0..n - 2 {
                chain(&mut a, i, i + 1);
            }
            chain(&mut a, n - 3, n - 1);
        }
    }
    let positive_coroots = positive_roots_of(&transpose(&a));
    let expected = match kind {
        Kind::A => n * (n + 1) / 2,
        Kind::B => n * n,
        Kind::D => n * (n - 1),
    };
    assert_eq!(
        positive_coroots.len(),
        expected,
        "positive coroot count self-check failed for {kind}{n}"
    );
    let rho_pairings: Vec<i64> = positive_coroots
        .iter()
        .map(|cr| cr.iter().sum::<i64>())
        .collect();
    assert!(rho_pairings.iter().all(|&p| p >= 1));
    let mut rho_vee = vec![Ratio::new(0, 1); n];
    for cr in &positive_coroots {
        for (i, &d) in cr.iter().enumerate() {
            rho_vee[i] += Ratio::new(d, 2);
        }
    }
    Ok(RootData {
        kind,
        rank,
        cartan: a,
        positive_coroots,
        rho_pairings,
        rho_vee,
    })
}

fn transpose(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect()
}

/// Positive roots of the system with Cartan matrix `cartan`, as coefficient
/// vectors over the simple roots, generated by root-string closure.
fn positive_roots_of(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0i64; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut seen: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut frontier = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..n {
                // length of the downward i-string through beta
                let mut q = 0i64;
                let mut probe = beta.clone();
                loop {
                    probe[i] -= 1;
                    if probe.iter().all(|&c| c == 0) || seen.contains(&probe) {
                        q += 1;
                        if probe.iter().all(|&c| c == 0) {
                            break;
                        }
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if q - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        roots.push(up.clone());
                        next.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    roots.sort();
    roots
}

impl RootData {
    /// `<mu, alpha_j^vee>` is just the `j`-th coordinate; this pairs against
    /// an arbitrary positive coroot written over the simple coroots.
    pub fn pair_coroot(&self, mu: &Weight, coroot: &[i64]) -> i64 {
        mu.0.iter().zip(coroot).map(|(m, d)| m * d).sum()
    }

    /// `<mu, rho^vee>`, a half-integer in general.
    pub fn rho_vee_pairing(&self, mu: &Weight) -> Ratio<i64> {
        mu.0.iter()
            .zip(&self.rho_vee)
            .map(|(&m, r)| Ratio::from_integer(m) * r)
            .sum()
    }

    /// Simple root `alpha_i` in fundamental-weight coordinates (row `i` of
    /// the Cartan matrix), `1 <= i <= rank`.
    pub fn simple_root(&self, i: usize) -> Result<Weight, WeightsError> {
        if i < 1 || i > self.rank {
            return Err(WeightsError::IndexOutOfRange {
                index: i,
                rank: self.rank,
            });
        }
        Ok(Weight(self.cartan[i - 1].clone()))
    }

    fn check_rank(&self, w: &Weight) -> Result<(), WeightsError> {
        if w.rank() != self.rank {
            return Err(WeightsError::RankMismatch {
                got: w.rank(),
                expected: self.rank,
            });
        }
        Ok(())
    }
}

/// Dense integer polynomial in `q`, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<i64>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![1] }
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        QPoly { coeffs: c }
    }

    /// The q-integer `[m]_q = 1 + q + ... + q^(m-1)`.
    pub fn q_int(m: i64) -> Self {
        assert!(m >= 1);
        QPoly {
            coeffs: vec![1; m as usize],
        }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        QPoly::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &QPoly) -> QPoly {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::new(out)
    }

    /// Exact division; errors on a nonzero remainder. The divisor must have
    /// constant term +-1 or the leading-coefficient long division is used.
    pub fn div_exact(&self, divisor: &QPoly) -> Result<QPoly, WeightsError> {
        if divisor.is_zero() {
            return Err(WeightsError::InexactDivision);
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        if self.coeffs.len() < divisor.coeffs.len() {
            return Err(WeightsError::InexactDivision);
        }
        let mut rem = self.coeffs.clone();
        let qlen = self.coeffs.len() - divisor.coeffs.len() + 1;
        let mut quot = vec![0i64; qlen];
        if divisor.coeffs[0].abs() == 1 {
            // divide from the low end: constant term is a unit
            let d0 = divisor.coeffs[0];
            for k in 0..qlen {
                let c = rem[k] / d0;
                quot[k] = c;
                if c != 0 {
                    for (j, &d) in divisor.coeffs.iter().enumerate() {
                        rem[k + j] -= c * d;
                    }
                }
            }
        } else {
            let dl = *divisor.coeffs.last().unwrap();
            for k in (0..qlen).rev() {
                let top = rem[k + divisor.coeffs.len() - 1];
                if top % dl != 0 {
                    return Err(WeightsError::InexactDivision);
                }
                let c = top / dl;
                quot[k] = c;
                if c != 0 {
                    for (j, &d) in divisor.coeffs.iter().enumerate() {
                        rem[k + j] -= c * d;
                    }
                }
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(WeightsError::InexactDivision);
        }
        Ok(QPoly::new(quot))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (c, k) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (c, 1) => write!(f, "{c}q")?,
                (1, k) => write!(f, "q^{k}")?,
                (c, k) => write!(f, "{c}q^{k}")?,
            }
        }
        Ok(())
    }
}

/// Symmetry/unimodality flags per the standard definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyProps {
    pub symmetric: bool,
    pub unimodal: bool,
}

pub fn poly_props(p: &QPoly) -> PolyProps {
    if p.is_zero() {
        return PolyProps {
            symmetric: true,
            unimodal: true,
        };
    }
    let c = p.coeffs();
    let l = c.len();
    let symmetric = (0..l).all(|i| c[i] == c[l - 1 - i]);
    let mut k = 0;
    while k + 1 < l && c[k] <= c[k + 1] {
        k += 1;
    }
    while k + 1 < l && c[k] >= c[k + 1] {
        k += 1;
    }
    PolyProps {
        symmetric,
        unimodal: k + 1 >= l,
    }
}

/// Laurent polynomial over the weight lattice: exponent vectors in
/// fundamental-weight coordinates, integer coefficients, no zero terms.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Vec<i64>, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one(rank: usize) -> Self {
        LaurentPoly::monomial(&Weight::zero(rank), 1)
    }

    pub fn monomial(mu: &Weight, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(mu.0.clone(), c);
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms_with_multiplicity(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn coeff(&self, mu: &Weight) -> i64 {
        self.terms.get(&mu.0).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Weight, i64)> + '_ {
        self.terms.iter().map(|(e, &c)| (Weight(e.clone()), c))
    }

    pub fn add_term(&mut self, mu: &Weight, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(mu.0.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&mu.0);
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(&Weight(e.clone()), c);
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(&Weight(e.clone()), -c);
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(&Weight(e), c1 * c2);
            }
        }
        out
    }

    /// Dualize: `Z^mu -> Z^-mu`.
    pub fn star(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, &c) in &self.terms {
            out.add_term(&Weight(e.iter().map(|x| -x).collect()), c);
        }
        out
    }

    /// Type-A `sigma_0` action: `Z^mu -> Z^{-w0.mu}`, with `w0` acting by
    /// coordinate reversal.
    pub fn sigma0_type_a(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, &c) in &self.terms {
            let mut r = e.clone();
            r.reverse();
            out.add_term(&Weight(r), c);
        }
        out
    }
}

/// Simple-reflection action on a Laurent polynomial:
/// `s_i . Z^mu = Z^{mu - <mu,alpha_i^vee> alpha_i}`.
pub fn reflect(p: &LaurentPoly, i: usize, rd: &RootData) -> Result<LaurentPoly, WeightsError> {
    let alpha = rd.simple_root(i)?;
    let mut out = LaurentPoly::zero();
    for (mu, c) in p.terms() {
        let m = mu.0[i - 1];
        let image = Weight(
            mu.0.iter()
                .zip(&alpha.0)
                .map(|(x, a)| x - m * a)
                .collect(),
        );
        out.add_term(&image, c);
    }
    Ok(out)
}

/// The Dynkin polynomial of the Weyl bialternant `chi_lambda`:
/// `prod_{alpha in Phi+} (1 - q^{<lambda+rho,alpha^vee>}) / (1 - q^{<rho,alpha^vee>})`.
///
/// Symmetric and unimodal of degree `2<lambda,rho^vee>`; its value at `q=1`
/// is the Weyl dimension.
pub fn dynkin_poly(rd: &RootData, lambda: &Weight) -> Result<QPoly, WeightsError> {
    rd.check_rank(lambda)?;
    if !lambda.is_dominant() {
        return Err(WeightsError::NonDominant(lambda.clone()));
    }
    let lam_rho = lambda.add(&Weight::rho(rd.rank));
    let mut num = QPoly::one();
    let mut den = QPoly::one();
    for (cr, &rp) in rd.positive_coroots.iter().zip(&rd.rho_pairings) {
        let a = rd.pair_coroot(&lam_rho, cr);
        debug_assert!(a >= rp);
        // (1-q^a)/(1-q^b) = [a]_q/[b]_q
        num = num.mul(&QPoly::q_int(a));
        den = den.mul(&QPoly::q_int(rp));
    }
    num.div_exact(&den)
}

/// Weyl dimension of the irreducible with highest weight `lambda`.
pub fn weyl_dim(rd: &RootData, lambda: &Weight) -> Result<i64, WeightsError> {
    Ok(dynkin_poly(rd, lambda)?.eval_at_one())
}

/// Rank generating function of a connected splitting poset from its
/// decomposition into bialternants: `sum_i q^{<top - lambda_i, rho^vee>}
/// dynkin(lambda_i)`.
pub fn rgf_from_decomposition(
    rd: &RootData,
    lambdas: &[Weight],
    lambda_top: &Weight,
) -> Result<QPoly, WeightsError> {
    let top_pair = rd.rho_vee_pairing(lambda_top);
    if !lambdas.iter().any(|l| l == lambda_top) {
        return Err(WeightsError::TopNotMaximal);
    }
    let mut out = QPoly::zero();
    for lam in lambdas {
        let shift = top_pair - rd.rho_vee_pairing(lam);
        if shift < Ratio::new(0, 1) {
            return Err(WeightsError::TopNotMaximal);
        }
        if !shift.is_integer() {
            return Err(WeightsError::NonIntegralShift);
        }
        let d = dynkin_poly(rd, lam)?;
        out = out.add(&QPoly::monomial(shift.to_integer() as usize).mul(&d));
    }
    Ok(out)
}

/// Type-A closed forms: `(RGF, CARD, LENGTH)` for a splitting poset of the
/// bialternant `chi_lambda`, via hook-content style q-integer products.
pub fn rgf_card_length_type_a(lambda: &Weight) -> Result<(QPoly, i64, i64), WeightsError> {
    if !lambda.is_dominant() {
        return Err(WeightsError::NonDominant(lambda.clone()));
    }
    let r = lambda.rank();
    let mut num = QPoly::one();
    let mut den = QPoly::one();
    let mut length = 0i64;
    for i in 1..=r {
        for j in i..=r {
            let lam_ij: i64 = (i..=j).map(|k| lambda.0[k - 1]).sum();
            let span = (j + 1 - i) as i64;
            num = num.mul(&QPoly::q_int(lam_ij + span));
            den = den.mul(&QPoly::q_int(span));
            length += lam_ij;
        }
    }
    let rgf = num.div_exact(&den)?;
    let card = rgf.eval_at_one();
    Ok((rgf, card, length))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_matrices() {
        let a2 = root_data(Kind::A, 2).unwrap();
        assert_eq!(a2.cartan, vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.positive_coroots.len(), 3);

        let b3 = root_data(Kind::B, 3).unwrap();
        assert_eq!(b3.cartan[1][2], -2);
        assert_eq!(b3.cartan[2][1], -1);
        assert_eq!(b3.positive_coroots.len(), 9);

        let d4 = root_data(Kind::D, 4).unwrap();
        assert_eq!(d4.positive_coroots.len(), 12);
        // nodes 3 and 4 both adjacent to node 2
        assert_eq!(d4.cartan[1][2], -1);
        assert_eq!(d4.cartan[1][3], -1);
        assert_eq!(d4.cartan[2][3], 0);
    }

    #[test]
    fn unsupported_ranks_rejected() {
        assert!(root_data(Kind::B, 1).is_err());
        assert!(root_data(Kind::D, 2).is_err());
        assert!(root_data(Kind::A, 1).is_ok());
    }

    #[test]
    fn dynkin_a1() {
        let rd = root_data(Kind::A, 1).unwrap();
        let p = dynkin_poly(&rd, &Weight(vec![2])).unwrap();
        assert_eq!(p, QPoly::new(vec![1, 1, 1]));
    }

    #[test]
    fn dynkin_degree_and_props() {
        for (kind, rank, lam) in [
            (Kind::A, 2, vec![1, 1]),
            (Kind::A, 3, vec![1, 0, 2]),
            (Kind::B, 3, vec![0, 0, 1]),
            (Kind::B, 3, vec![1, 0, 2]),
            (Kind::D, 4, vec![0, 1, 0, 1]),
        ] {
            let rd = root_data(kind, rank).unwrap();
            let w = Weight(lam);
            let p = dynkin_poly(&rd, &w).unwrap();
            let props = poly_props(&p);
            assert!(props.symmetric && props.unimodal, "{kind}{rank} {w}");
            let deg = Ratio::from_integer(2) * rd.rho_vee_pairing(&w);
            assert_eq!(p.degree() as i64, deg.to_integer());
        }
    }

    #[test]
    fn dynkin_b3_spin_dimension() {
        let rd = root_data(Kind::B, 3).unwrap();
        assert_eq!(weyl_dim(&rd, &Weight(vec![0, 0, 1])).unwrap(), 8);
        assert_eq!(weyl_dim(&rd, &Weight(vec![0, 0, 2])).unwrap(), 35);
    }

    #[test]
    fn dynkin_rejects_non_dominant() {
        let rd = root_data(Kind::A, 2).unwrap();
        assert!(dynkin_poly(&rd, &Weight(vec![-1, 2])).is_err());
    }

    #[test]
    fn poly_props_examples() {
        let p = QPoly::new(vec![1, 1, 1]);
        assert_eq!(
            poly_props(&p),
            PolyProps {
                symmetric: true,
                unimodal: true
            }
        );
        let p = QPoly::new(vec![1, 2, 0, 1]);
        assert_eq!(
            poly_props(&p),
            PolyProps {
                symmetric: false,
                unimodal: false
            }
        );
    }

    #[test]
    fn type_a_closed_forms() {
        let (rgf, card, length) = rgf_card_length_type_a(&Weight(vec![0, 0])).unwrap();
        assert_eq!(rgf, QPoly::one());
        assert_eq!((card, length), (1, 0));

        let (_, card, length) = rgf_card_length_type_a(&Weight(vec![1, 1])).unwrap();
        assert_eq!((card, length), (8, 4));

        let (_, card, _) = rgf_card_length_type_a(&Weight(vec![1, 2])).unwrap();
        assert_eq!(card, 15);
    }

    #[test]
    fn single_summand_decomposition_is_dynkin() {
        let rd = root_data(Kind::A, 2).unwrap();
        let lam = Weight(vec![1, 2]);
        let one = rgf_from_decomposition(&rd, &[lam.clone()], &lam).unwrap();
        assert_eq!(one, dynkin_poly(&rd, &lam).unwrap());
        // closed form agrees too
        let (rgf, _, _) = rgf_card_length_type_a(&lam).unwrap();
        assert_eq!(one, rgf);
    }

    #[test]
    fn reflect_basics() {
        let rd = root_data(Kind::A, 1).unwrap();
        let origin = LaurentPoly::one(1);
        assert_eq!(reflect(&origin, 1, &rd).unwrap(), origin);
        let z1 = LaurentPoly::monomial(&Weight(vec![1]), 1);
        let z1inv = LaurentPoly::monomial(&Weight(vec![-1]), 1);
        assert_eq!(reflect(&z1, 1, &rd).unwrap(), z1inv);
        assert!(reflect(&z1, 2, &rd).is_err());
    }
}
