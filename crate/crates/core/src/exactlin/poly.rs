use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Matrix, Scalar};

/// Dense univariate polynomial, coefficients from degree 0 upward, no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

/// One coprime block of a square matrix: the factor `q` of its minimal
/// polynomial and a basis (as columns) of `ker q(m)`.
#[derive(Clone, Debug)]
pub struct SplitFactor {
    pub factor: Poly,
    pub basis: Matrix,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::new(vec![c])
    }

    /// `x - root`
    pub fn linear(root: &Scalar) -> Self {
        Poly::new(vec![-root, Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn monic(&self) -> Poly {
        match self.coeffs.last() {
            None => Poly::zero(),
            Some(l) => {
                let inv = l.inverse().expect("nonzero lead");
                Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Scalar::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = Scalar::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) - o.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::constant(Scalar::one()), |acc, _| acc.mul(self))
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lead().inverse().expect("nonzero lead");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let c = rem.last().unwrap() * &inv;
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k + i] = &rem[k + i] - &(&c * dc);
                }
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(Scalar::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Scalar::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
    }

    /// `p(m)` by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m).add(&Matrix::identity(n).scale(c));
        }
        acc
    }

    /// Multiplicity of `root`.
    fn root_multiplicity(&self, root: &Scalar) -> usize {
        let lin = Poly::linear(root);
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (q, r) = p.div_rem(&lin);
            if !r.is_zero() {
                return k;
            }
            p = q;
            k += 1;
        }
    }

    fn modulus(&self) -> Option<u64> {
        self.coeffs.iter().find_map(Scalar::modulus)
    }

    /// Distinct roots in the coefficient field, in ascending order for
    /// rationals. Rational coefficients use the rational root theorem on the
    /// squarefree part; prime fields are scanned exhaustively when small.
    pub fn roots(&self) -> Vec<Scalar> {
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        if let Some(p) = self.modulus() {
            if p > 1 << 16 {
                return Vec::new();
            }
            return (0..p as i64)
                .map(|v| Scalar::residue(v, p))
                .filter(|x| self.eval(x).is_zero())
                .collect();
        }
        let sqfree = {
            let g = self.gcd(&self.derivative());
            self.div_rem(&g).0
        };
        let mut roots = rational_roots(&sqfree);
        roots.sort_by(|a, b| a.partial_cmp(b).expect("rational roots"));
        roots
    }
}

const DIVISOR_LIMIT: u64 = 1_000_000_000_000;

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

fn rational_roots(p: &Poly) -> Vec<Scalar> {
    // integer form: multiply out denominators
    let rats: Vec<_> = p
        .coeffs
        .iter()
        .map(|c| c.to_rational().expect("rational"))
        .collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * &lcm).to_integer()).collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(Scalar::zero());
    }
    let ints = &ints[low..];
    if ints.len() < 2 {
        return roots;
    }
    let (Some(a0), Some(an)) = (
        ints[0].abs().to_u64().filter(|&v| v <= DIVISOR_LIMIT),
        ints[ints.len() - 1]
            .abs()
            .to_u64()
            .filter(|&v| v <= DIVISOR_LIMIT),
    ) else {
        return roots;
    };
    let mut seen = std::collections::BTreeSet::new();
    for num in divisors(a0) {
        for den in divisors(an) {
            if num.gcd(&den) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                let (Ok(n), Ok(d)) = (i64::try_from(num), i64::try_from(den)) else {
                    continue;
                };
                let cand = Scalar::ratio(sign * n, d);
                if seen.insert((sign * n, d)) && p.eval(&cand).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    roots
}

/// Minimal polynomial by linear dependence among the powers of `m`.
pub fn minimal_polynomial(m: &Matrix) -> Poly {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return Poly::constant(Scalar::one());
    }
    let mut powers: Vec<Vec<Scalar>> = vec![Matrix::identity(n).to_vec()];
    let mut current = Matrix::identity(n);
    loop {
        current = current.mul(m);
        let target = current.to_vec();
        let basis = Matrix::from_columns(n * n, &powers);
        if let Some(c) = basis.solve(&target) {
            let mut coeffs: Vec<Scalar> = c.into_iter().map(|x| -x).collect();
            coeffs.push(Scalar::one());
            return Poly::new(coeffs);
        }
        powers.push(target);
    }
}

/// Split the space acted on by `m` into kernels of pairwise coprime factors of
/// its minimal polynomial: one factor `(x - r)^k` per root `r` in the field,
/// plus the root-free cofactor when it is nonconstant.
pub fn coprime_split(m: &Matrix) -> Vec<SplitFactor> {
    let minpoly = minimal_polynomial(m);
    let mut factors = Vec::new();
    let mut rest = minpoly.clone();
    for r in minpoly.roots() {
        let k = minpoly.root_multiplicity(&r);
        let f = Poly::linear(&r).pow(k);
        rest = rest.div_rem(&f).0;
        factors.push(f);
    }
    if rest.degree().unwrap_or(0) > 0 {
        factors.push(rest.monic());
    }
    factors
        .into_iter()
        .map(|factor| {
            let basis = factor.eval_matrix(m).kernel_basis();
            SplitFactor { factor, basis }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_i64(n)
    }

    #[test]
    fn division_and_gcd() {
        // (x-1)(x-2) and (x-1)(x+3)
        let a = Poly::linear(&s(1)).mul(&Poly::linear(&s(2)));
        let b = Poly::linear(&s(1)).mul(&Poly::linear(&s(-3)));
        assert_eq!(a.gcd(&b), Poly::linear(&s(1)));
        let (q, r) = a.div_rem(&Poly::linear(&s(2)));
        assert_eq!(q, Poly::linear(&s(1)));
        assert!(r.is_zero());
    }

    #[test]
    fn rational_roots_found() {
        // (2x - 1)(x + 3)^2 (x^2 + 1)
        let p = Poly::new(vec![s(-1), s(2)])
            .mul(&Poly::linear(&s(-3)).pow(2))
            .mul(&Poly::new(vec![s(1), s(0), s(1)]));
        assert_eq!(p.roots(), vec![s(-3), Scalar::ratio(1, 2)]);
        assert_eq!(p.root_multiplicity(&s(-3)), 2);
    }

    #[test]
    fn minimal_polynomial_of_jordan_block() {
        let j = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        assert_eq!(minimal_polynomial(&j), Poly::new(vec![s(0), s(0), s(1)]));
        let d = Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        assert_eq!(minimal_polynomial(&d).degree(), Some(2));
    }

    #[test]
    fn coprime_split_examples() {
        let d = Matrix::from_i64(&[&[0, 0], &[0, 1]]);
        let parts = coprime_split(&d);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].factor, Poly::linear(&s(0)));
        assert_eq!(parts[1].factor, Poly::linear(&s(1)));
        assert!(parts.iter().all(|p| p.basis.cols() == 1));

        let j = Matrix::from_i64(&[&[0, 1], &[0, 0]]);
        let parts = coprime_split(&j);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].factor, Poly::linear(&s(0)).pow(2));
        assert_eq!(parts[0].basis.cols(), 2);

        let d = Matrix::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 2]]);
        let dims: Vec<_> = coprime_split(&d).iter().map(|p| p.basis.cols()).collect();
        assert_eq!(dims, vec![2, 1]);
    }

    #[test]
    fn irreducible_cofactor_is_kept_whole() {
        // rotation by 90 degrees: x^2 + 1 has no rational roots
        let r = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        let parts = coprime_split(&r);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].factor.degree(), Some(2));
    }
}
