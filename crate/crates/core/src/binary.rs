//! Binary forms `F(s, t)` over the rationals.
//!
//! A form of degree `d` is stored as `d + 1` coefficients: entry `k` is the
//! coefficient of `s^(d-k) t^k`.

use num_traits::{One, Zero};

use crate::exactnum::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    /// Panics on an empty coefficient list (there is no form of degree -1).
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "binary form needs at least one coefficient");
        Self { coeffs }
    }

    pub fn constant(value: Rational) -> Self {
        Self::new(vec![value])
    }

    /// `a s + b t`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![a, b])
    }

    /// The linear form vanishing exactly at the parameter `(s0 : t0)`.
    pub fn vanishing_at(s0: &Rational, t0: &Rational) -> Self {
        Self::linear(t0.clone(), -s0.clone())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![Rational::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Sum of two forms of the same degree.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in sum");
        Self::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn eval(&self, s: &Rational, t: &Rational) -> Rational {
        let d = self.degree();
        let mut total = Rational::zero();
        let mut s_pows = vec![Rational::one(); d + 1];
        let mut t_pows = vec![Rational::one(); d + 1];
        for k in 1..=d {
            s_pows[k] = &s_pows[k - 1] * s;
            t_pows[k] = &t_pows[k - 1] * t;
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                total += c * &s_pows[d - k] * &t_pows[k];
            }
        }
        total
    }

    /// Exact division by a linear form, or `None` if it does not divide.
    pub fn divide_linear(&self, linear: &Self) -> Option<Self> {
        assert_eq!(linear.degree(), 1);
        let (alpha, beta) = (&linear.coeffs[0], &linear.coeffs[1]);
        let d = self.degree();
        if d == 0 {
            return self.is_zero().then(|| self.clone());
        }
        let mut q = vec![Rational::zero(); d];
        if alpha.is_zero() {
            // beta * t divides iff the s^d coefficient vanishes
            if !self.coeffs[0].is_zero() {
                return None;
            }
            for k in 0..d {
                q[k] = &self.coeffs[k + 1] / beta;
            }
            return Some(Self::new(q));
        }
        q[0] = &self.coeffs[0] / alpha;
        for k in 1..d {
            q[k] = (&self.coeffs[k] - beta * &q[k - 1]) / alpha;
        }
        let remainder = &self.coeffs[d] - beta * &q[d - 1];
        remainder.is_zero().then(|| Self::new(q))
    }

    /// Order of vanishing at `(s0 : t0)`; `None` for the zero form.
    pub fn root_multiplicity(&self, s0: &Rational, t0: &Rational) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let l = Self::vanishing_at(s0, t0);
        let mut f = self.clone();
        let mut count = 0;
        while f.degree() > 0 {
            match f.divide_linear(&l) {
                Some(q) => {
                    f = q;
                    count += 1;
                }
                None => break,
            }
        }
        Some(count)
    }

    /// Multiplicity of the root `(1 : 0)`, i.e. number of leading zero
    /// coefficients; `None` for the zero form.
    fn multiplicity_at_infinity(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `F(s, 1)` as an ascending-power univariate polynomial, trimmed.
    fn dehomogenize(&self) -> Vec<Rational> {
        let mut p: Vec<Rational> = self.coeffs.iter().rev().cloned().collect();
        trim(&mut p);
        p
    }
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Remainder of `a` modulo nonzero `b` (ascending coefficients).
fn poly_rem(mut a: Vec<Rational>, b: &[Rational]) -> Vec<Rational> {
    let lead = b.last().expect("nonzero divisor");
    while a.len() >= b.len() && !a.is_empty() {
        let shift = a.len() - b.len();
        let f = a.last().unwrap() / lead;
        for (i, c) in b.iter().enumerate() {
            let t = &f * c;
            a[shift + i] -= t;
        }
        a.pop();
        trim(&mut a);
    }
    a
}

fn poly_gcd(mut a: Vec<Rational>, mut b: Vec<Rational>) -> Vec<Rational> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for c in a.iter_mut() {
            *c /= &lead;
        }
    }
    a
}

fn derivative(p: &[Rational]) -> Vec<Rational> {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * Rational::from_integer((k as i64).into()))
        .collect()
}

/// Common zeros `(s : t)` of a family of binary forms that are rational
/// points of the line. Returns `None` when every form is identically zero.
///
/// Zero forms are ignored. Irrational common roots are not reported.
pub fn common_rational_roots(forms: &[BinaryForm]) -> Option<Vec<(Rational, Rational)>> {
    let nonzero: Vec<&BinaryForm> = forms.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return None;
    }
    let mut roots = Vec::new();
    if nonzero
        .iter()
        .all(|f| f.multiplicity_at_infinity().unwrap_or(0) > 0)
    {
        roots.push((Rational::one(), Rational::zero()));
    }
    let g = nonzero
        .iter()
        .fold(Vec::new(), |acc, f| poly_gcd(acc, f.dehomogenize()));
    if g.len() > 1 {
        // squarefree part, then its linear factors over Q
        let d = poly_gcd(g.clone(), derivative(&g));
        let mut sf = g;
        if d.len() > 1 {
            sf = poly_quot(&sf, &d);
        }
        roots.extend(
            rational_roots(&sf)
                .into_iter()
                .map(|r| (r, Rational::one())),
        );
    }
    Some(roots)
}

/// Degree of the greatest common divisor of the nonzero forms in the family,
/// counting the root at `(1 : 0)`; `None` when every form is zero.
pub fn common_factor_degree(forms: &[BinaryForm]) -> Option<usize> {
    let nonzero: Vec<&BinaryForm> = forms.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return None;
    }
    let at_infinity = nonzero
        .iter()
        .map(|f| f.multiplicity_at_infinity().unwrap_or(0))
        .min()
        .unwrap_or(0);
    let g = nonzero
        .iter()
        .fold(Vec::new(), |acc, f| poly_gcd(acc, f.dehomogenize()));
    Some(at_infinity + g.len().saturating_sub(1))
}

fn poly_quot(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut rem = a.to_vec();
    let lead = b.last().unwrap();
    let mut q = vec![Rational::zero(); a.len() + 1 - b.len()];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let f = rem.last().unwrap() / lead;
        for (i, c) in b.iter().enumerate() {
            let t = &f * c;
            rem[shift + i] -= t;
        }
        q[shift] = f;
        rem.pop();
        trim(&mut rem);
    }
    q
}

/// Rational roots of a squarefree polynomial, via the rational root theorem
/// applied to the integer-scaled polynomial. Only linear and small-degree
/// inputs arise in practice; for linear input this is direct.
fn rational_roots(p: &[Rational]) -> Vec<Rational> {
    match p.len() {
        0 | 1 => Vec::new(),
        2 => vec![-&p[0] / &p[1]],
        _ => {
            let ints = crate::exactnum::clear_denominators(p);
            let mut p = ints;
            // strip zero root
            let mut roots = Vec::new();
            if p[0].is_zero() {
                roots.push(Rational::zero());
                let k = p.iter().position(|c| !c.is_zero()).unwrap();
                p.drain(..k);
            }
            let lead = p.last().unwrap().clone();
            let constant = p[0].clone();
            let nums = divisors(&constant);
            let dens = divisors(&lead);
            for a in &nums {
                for b in &dens {
                    for sign in [1i64, -1] {
                        let cand = Rational::new(a * sign, b.clone());
                        let val = p.iter().rev().fold(Rational::zero(), |acc, c| {
                            acc * &cand + Rational::from_integer(c.clone())
                        });
                        if val.is_zero() && !roots.contains(&cand) {
                            roots.push(cand);
                        }
                    }
                }
            }
            roots
        }
    }
}

fn divisors(n: &num_bigint::BigInt) -> Vec<num_bigint::BigInt> {
    use num_traits::Signed;
    let n = n.abs();
    let mut out = Vec::new();
    let mut k = num_bigint::BigInt::one();
    while &k * &k <= n {
        if (&n % &k).is_zero() {
            out.push(k.clone());
            let other = &n / &k;
            if other != k {
                out.push(other);
            }
        }
        k += 1;
    }
    out
}
