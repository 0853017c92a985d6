//! Generalized polynomial rings `R[X; sigma, delta]` and their flipped versions.
//!
//! Monomials multiply by
//!
//! ```text
//! unflipped:  (r X^m)(s X^n) = sum_i  r pi_i^m(s)          X^(i+n)
//! flipped:    (r X^m)(s X^n) = sum_i  tau_n(r, pi_i^m(s))   X^(i+n)
//! ```
//!
//! where `pi_i^m` is the sum of all compositions of `i` copies of `sigma` and
//! `m - i` copies of `delta`, and `tau_n(r, s)` is `rs` for even `n` and `sr`
//! for odd `n`.

use std::collections::HashMap;
use std::fmt;

use crate::algebra::{AlgebraElement, StarAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::Poly;

/// Whether an additive map plays the role of `sigma` (fixes 1) or `delta` (kills 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapKind {
    Sigma,
    Delta,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveMap {
    matrix: Matrix,
    kind: MapKind,
}

impl AdditiveMap {
    pub fn new(matrix: Matrix, kind: MapKind, algebra: &StarAlgebra) -> Result<Self> {
        let n = algebra.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: matrix.rows(),
            });
        }
        let one = algebra.one();
        let image = matrix.apply(one.coords());
        match kind {
            MapKind::Sigma if image != one.coords() => {
                Err(Error::InvalidMap("sigma must map 1 to 1".into()))
            }
            MapKind::Delta if !image.iter().all(|x| x.is_zero()) => {
                Err(Error::InvalidMap("delta must map 1 to 0".into()))
            }
            _ => Ok(AdditiveMap { matrix, kind }),
        }
    }

    pub fn identity(n: usize) -> Self {
        AdditiveMap {
            matrix: Matrix::identity(n),
            kind: MapKind::Sigma,
        }
    }

    pub fn zero(n: usize) -> Self {
        AdditiveMap {
            matrix: Matrix::zero(n, n),
            kind: MapKind::Delta,
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn kind(&self) -> MapKind {
        self.kind
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn apply(&self, x: &AlgebraElement) -> AlgebraElement {
        AlgebraElement::from_coords(self.matrix.apply(x.coords()))
    }
}

/// `tau_n(r, s)`: `rs` for even `n`, `sr` for odd `n`.
pub fn tau(
    algebra: &StarAlgebra,
    n: usize,
    r: &AlgebraElement,
    s: &AlgebraElement,
) -> Result<AlgebraElement> {
    algebra.check(r)?;
    algebra.check(s)?;
    Ok(tau_raw(algebra, n, r, s))
}

pub(crate) fn tau_raw(
    algebra: &StarAlgebra,
    n: usize,
    r: &AlgebraElement,
    s: &AlgebraElement,
) -> AlgebraElement {
    if n.is_multiple_of(2) {
        algebra.product(r, s)
    } else {
        algebra.product(s, r)
    }
}

/// The additive group `A[X]` over a *-algebra with a choice of `sigma`, `delta`
/// and whether the product is flipped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipPolyRing {
    algebra: StarAlgebra,
    sigma: AdditiveMap,
    delta: AdditiveMap,
    flipped: bool,
}

impl FlipPolyRing {
    pub fn new(algebra: StarAlgebra, sigma: Matrix, delta: Matrix, flipped: bool) -> Result<Self> {
        let sigma = AdditiveMap::new(sigma, MapKind::Sigma, &algebra)?;
        let delta = AdditiveMap::new(delta, MapKind::Delta, &algebra)?;
        Ok(FlipPolyRing {
            algebra,
            sigma,
            delta,
            flipped,
        })
    }

    /// `A[X; *]^fl`: `sigma` is the involution, `delta = 0`, flipped product.
    pub fn star_skew(algebra: StarAlgebra) -> Self {
        let n = algebra.dim();
        let sigma = AdditiveMap {
            matrix: algebra.involution().matrix().clone(),
            kind: MapKind::Sigma,
        };
        FlipPolyRing {
            algebra,
            sigma,
            delta: AdditiveMap::zero(n),
            flipped: true,
        }
    }

    /// The ordinary polynomial ring `A[X]`.
    pub fn ordinary(algebra: StarAlgebra) -> Self {
        let n = algebra.dim();
        FlipPolyRing {
            algebra,
            sigma: AdditiveMap::identity(n),
            delta: AdditiveMap::zero(n),
            flipped: false,
        }
    }

    pub fn with_flipped(&self, flipped: bool) -> Self {
        FlipPolyRing {
            flipped,
            ..self.clone()
        }
    }

    pub fn algebra(&self) -> &StarAlgebra {
        &self.algebra
    }

    pub fn sigma(&self) -> &AdditiveMap {
        &self.sigma
    }

    pub fn delta(&self) -> &AdditiveMap {
        &self.delta
    }

    pub fn is_flipped(&self) -> bool {
        self.flipped
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// True when this ring is `A[X; *]^fl` for its coefficient algebra.
    pub fn is_star_skew(&self) -> bool {
        self.flipped
            && self.delta.is_zero()
            && self.sigma.matrix == *self.algebra.involution().matrix()
    }

    pub fn one(&self) -> Poly {
        Poly::constant(self.algebra.one())
    }

    pub fn x(&self) -> Poly {
        Poly::monomial(self.algebra.one(), 1)
    }

    /// `pi_i^m(s)` for `i = 0..=m`, filled in by
    /// `pi_i^(k+1)(s) = sigma(pi_(i-1)^k(s)) + delta(pi_i^k(s))` starting from `pi_0^0 = id`.
    pub fn pi_row(&self, m: usize, s: &AlgebraElement) -> Vec<AlgebraElement> {
        let n = self.dim();
        let mut row = vec![s.clone()];
        let delta_zero = self.delta.is_zero();
        for k in 0..m {
            let mut next = vec![AlgebraElement::zero(n); k + 2];
            for (i, v) in row.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                next[i + 1].add_assign(&self.sigma.apply(v));
                if !delta_zero {
                    next[i].add_assign(&self.delta.apply(v));
                }
            }
            row = next;
        }
        row
    }

    /// `pi_i^m(s)`; zero whenever `i > m`.
    pub fn pi(&self, i: usize, m: usize, s: &AlgebraElement) -> Result<AlgebraElement> {
        self.algebra.check(s)?;
        if i > m {
            return Ok(AlgebraElement::zero(self.dim()));
        }
        Ok(self.pi_row(m, s).swap_remove(i))
    }

    /// Enumerates every placement of `i` sigmas among `m` slots and sums the compositions.
    pub fn pi_oracle(&self, i: usize, m: usize, s: &AlgebraElement) -> Result<AlgebraElement> {
        const MAX_M: usize = 12;
        if m > MAX_M {
            return Err(Error::BoundExceeded {
                got: m,
                limit: MAX_M,
            });
        }
        self.algebra.check(s)?;
        let mut total = AlgebraElement::zero(self.dim());
        if i > m {
            return Ok(total);
        }
        for mask in 0u32..(1 << m) {
            if mask.count_ones() as usize != i {
                continue;
            }
            let mut v = s.clone();
            for slot in 0..m {
                v = if mask & (1 << slot) != 0 {
                    self.sigma.apply(&v)
                } else {
                    self.delta.apply(&v)
                };
            }
            total.add_assign(&v);
        }
        Ok(total)
    }

    pub(crate) fn monomial_product(
        &self,
        m: usize,
        r: &AlgebraElement,
        n: usize,
        s: &AlgebraElement,
    ) -> Poly {
        let mut out = Poly::zero();
        if r.is_zero() || s.is_zero() {
            return out;
        }
        for (i, p) in self.pi_row(m, s).iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let c = if self.flipped {
                tau_raw(&self.algebra, n, r, p)
            } else {
                self.algebra.product(r, p)
            };
            out.add_term(i + n, &c);
        }
        out
    }

    pub fn mul(&self, p: &Poly, q: &Poly) -> Result<Poly> {
        p.check_dim(self.dim())?;
        q.check_dim(self.dim())?;
        Ok(self.product(p, q))
    }

    pub(crate) fn product(&self, p: &Poly, q: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, r) in p.terms() {
            for (n, s) in q.terms() {
                for (d, c) in self.monomial_product(m, r, n, s).terms() {
                    out.add_term(d, c);
                }
            }
        }
        out
    }

    pub(crate) fn assoc(&self, p: &Poly, q: &Poly, r: &Poly) -> Poly {
        self.product(&self.product(p, q), r)
            .sub(&self.product(p, &self.product(q, r)))
    }

    pub(crate) fn comm(&self, p: &Poly, q: &Poly) -> Poly {
        self.product(p, q).sub(&self.product(q, p))
    }

    pub fn is_sigma_endomorphism(&self) -> bool {
        self.basis_pairs().all(|(r, s)| {
            self.sigma.apply(&self.algebra.product(&r, &s))
                == self
                    .algebra
                    .product(&self.sigma.apply(&r), &self.sigma.apply(&s))
        })
    }

    /// `delta(rs) = sigma(r) delta(s) + delta(r) s` on basis pairs.
    pub fn is_delta_left_sigma_derivation(&self) -> bool {
        let a = &self.algebra;
        self.basis_pairs().all(|(r, s)| {
            let lhs = self.delta.apply(&a.product(&r, &s));
            let rhs = &a.product(&self.sigma.apply(&r), &self.delta.apply(&s))
                + &a.product(&self.delta.apply(&r), &s);
            lhs == rhs
        })
    }

    /// `delta(rs) = delta(r) sigma(s) + r delta(s)` on basis pairs.
    pub fn is_delta_right_sigma_derivation(&self) -> bool {
        let a = &self.algebra;
        self.basis_pairs().all(|(r, s)| {
            let lhs = self.delta.apply(&a.product(&r, &s));
            let rhs = &a.product(&self.delta.apply(&r), &self.sigma.apply(&s))
                + &a.product(&r, &self.delta.apply(&s));
            lhs == rhs
        })
    }

    fn basis_pairs(&self) -> impl Iterator<Item = (AlgebraElement, AlgebraElement)> + '_ {
        let n = self.dim();
        (0..n)
            .flat_map(move |i| (0..n).map(move |j| (self.algebra.basis(i), self.algebra.basis(j))))
    }
}

/// Free-function form of [`FlipPolyRing::mul`].
pub fn poly_mul(ring: &FlipPolyRing, p: &Poly, q: &Poly) -> Result<Poly> {
    ring.mul(p, q)
}

/// `Sum_k l_{i,j,k}` for a basis pair, as a polynomial in `X`.
type RuleTable = HashMap<(usize, usize, usize, usize), Poly>;

/// A finite window of a biadditive product rule `(a X^m)(b X^n) = sum_k l_{m,n;k}(a, b) X^k`,
/// tabulated on basis pairs for `m, n <= bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TabulatedRule {
    algebra: StarAlgebra,
    bound: usize,
    entries: RuleTable,
}

impl TabulatedRule {
    /// Builds a table from `f(m, n, i, j) = (e_i X^m)(e_j X^n)`.
    pub fn new<F>(algebra: StarAlgebra, bound: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(usize, usize, usize, usize) -> Result<Poly>,
    {
        let dim = algebra.dim();
        let mut entries = HashMap::new();
        for m in 0..=bound {
            for n in 0..=bound {
                for i in 0..dim {
                    for j in 0..dim {
                        let p = f(m, n, i, j)?;
                        p.check_dim(dim)?;
                        entries.insert((m, n, i, j), p);
                    }
                }
            }
        }
        Ok(TabulatedRule {
            algebra,
            bound,
            entries,
        })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn eval(&self, m: usize, n: usize, a: &AlgebraElement, b: &AlgebraElement) -> Result<Poly> {
        if m > self.bound || n > self.bound {
            return Err(Error::BoundExceeded {
                got: m.max(n),
                limit: self.bound,
            });
        }
        let mut out = Poly::zero();
        for (i, ai) in a.coords().iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coords().iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let k = ai * bj;
                for (d, c) in self.entries[&(m, n, i, j)].terms() {
                    out.add_term(d, &c.scale(&k));
                }
            }
        }
        Ok(out)
    }
}

/// A product rule on `A[X]`: a concrete generalized ring, a finite table, or the flip of another rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductRule {
    Ring(FlipPolyRing),
    Table(TabulatedRule),
    Flip(Box<ProductRule>),
}

impl ProductRule {
    pub fn algebra(&self) -> &StarAlgebra {
        match self {
            ProductRule::Ring(r) => r.algebra(),
            ProductRule::Table(t) => &t.algebra,
            ProductRule::Flip(inner) => inner.algebra(),
        }
    }

    /// `(a X^m)(b X^n)` under this rule.
    pub fn eval(&self, m: usize, n: usize, a: &AlgebraElement, b: &AlgebraElement) -> Result<Poly> {
        self.algebra().check(a)?;
        self.algebra().check(b)?;
        match self {
            ProductRule::Ring(r) => Ok(r.monomial_product(m, a, n, b)),
            ProductRule::Table(t) => t.eval(m, n, a, b),
            ProductRule::Flip(inner) if n % 2 == 1 => inner.eval(m, n, b, a),
            ProductRule::Flip(inner) => inner.eval(m, n, a, b),
        }
    }

    /// Biadditive extension of the rule to whole polynomials.
    pub fn multiply(&self, p: &Poly, q: &Poly) -> Result<Poly> {
        let mut out = Poly::zero();
        for (m, a) in p.terms() {
            for (n, b) in q.terms() {
                out = out.add(&self.eval(m, n, a, b)?);
            }
        }
        Ok(out)
    }

    /// Compares two rules on every basis pair and every `m, n <= bound`.
    pub fn agrees_with(&self, other: &ProductRule, bound: usize) -> Result<bool> {
        let alg = self.algebra();
        for m in 0..=bound {
            for n in 0..=bound {
                for a in alg.basis_elements() {
                    for b in alg.basis_elements() {
                        if self.eval(m, n, &a, &b)? != other.eval(m, n, &a, &b)? {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Spot-checks additivity in each argument on basis sums.
    pub fn is_biadditive_on_basis(&self, bound: usize) -> Result<bool> {
        let alg = self.algebra();
        let basis = alg.basis_elements();
        for m in 0..=bound {
            for n in 0..=bound {
                for a in &basis {
                    for b in &basis {
                        for c in &basis {
                            let left = self.eval(m, n, &(a + c), b)?;
                            if left != self.eval(m, n, a, b)?.add(&self.eval(m, n, c, b)?) {
                                return Ok(false);
                            }
                            let right = self.eval(m, n, a, &(b + c))?;
                            if right != self.eval(m, n, a, b)?.add(&self.eval(m, n, a, c)?) {
                                return Ok(false);
                            }
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn tabulate(&self, bound: usize) -> Result<TabulatedRule> {
        let alg = self.algebra().clone();
        let dim = alg.dim();
        TabulatedRule::new(alg, bound, |m, n, i, j| {
            self.eval(
                m,
                n,
                &AlgebraElement::basis(dim, i),
                &AlgebraElement::basis(dim, j),
            )
        })
    }
}

/// The flipped rule `l_{m,n;k} ∘ tau^n`: arguments are swapped whenever the right degree is odd.
pub fn flip_rule(rule: ProductRule) -> ProductRule {
    ProductRule::Flip(Box::new(rule))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomFamily {
    /// associative Ore extensions
    O,
    /// non-associative Ore extensions
    N,
    /// flipped non-associative Ore extensions
    F,
}

impl std::str::FromStr for AxiomFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "O" | "o" => Ok(AxiomFamily::O),
            "N" | "n" => Ok(AxiomFamily::N),
            "F" | "f" => Ok(AxiomFamily::F),
            _ => Err(Error::Parse(format!("unknown axiom family `{s}`"))),
        }
    }
}

impl fmt::Display for AxiomFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AxiomFamily::O => "O",
            AxiomFamily::N => "N",
            AxiomFamily::F => "F",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: String,
    pub statement: &'static str,
    pub counterexample: Option<String>,
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub family: AxiomFamily,
    pub bound: usize,
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(AxiomCheck::passed)
    }

    pub fn check(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed())
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.counterexample {
                None => writeln!(f, "PASS {:<4} {}", c.name, c.statement)?,
                Some(w) => writeln!(
                    f,
                    "FAIL {:<4} {}\n     counterexample: {w}",
                    c.name, c.statement
                )?,
            }
        }
        Ok(())
    }
}

pub const MAX_AXIOM_BOUND: usize = 8;

/// Checks one axiom family on every basis coefficient and every degree up to `bound`.
pub fn check_axioms(ring: &FlipPolyRing, family: AxiomFamily, bound: usize) -> Result<AxiomReport> {
    if bound > MAX_AXIOM_BOUND {
        return Err(Error::BoundExceeded {
            got: bound,
            limit: MAX_AXIOM_BOUND,
        });
    }
    let tag = family.to_string();
    let mut checks = vec![
        AxiomCheck {
            name: format!("{tag}1"),
            statement: "S is a free left R-module on 1, x, x^2, ...",
            counterexample: free_basis_failure(ring, bound),
        },
        AxiomCheck {
            name: format!("{tag}2"),
            statement: "xr = sigma(r)x + delta(r), so xR lies in Rx + R",
            counterexample: x_commutation_failure(ring),
        },
    ];
    match family {
        AxiomFamily::F => {
            checks.push(AxiomCheck {
                name: "F3a".into(),
                statement: "(rx^(m+1))(sx^n) = ((rx^m)(sigma(s)x^n))x + (rx^m)(delta(s)x^n)",
                counterexample: f3_recursion_failure(ring, bound),
            });
            checks.push(AxiomCheck {
                name: "F3b".into(),
                statement: "r(sx^n) = tau_n(r,s)x^n",
                counterexample: f3_left_action_failure(ring, bound),
            });
        }
        AxiomFamily::N => {
            checks.push(AxiomCheck {
                name: "N3".into(),
                statement: "(S,S,x) = (S,x,S) = 0",
                counterexample: n3_failure(ring, bound),
            });
        }
        AxiomFamily::O => {
            checks.push(AxiomCheck {
                name: "O3".into(),
                statement: "S is associative",
                counterexample: o3_failure(ring, bound),
            });
        }
    }
    Ok(AxiomReport {
        family,
        bound,
        checks,
    })
}

fn mono(r: &AlgebraElement, d: usize) -> Poly {
    Poly::monomial(r.clone(), d)
}

fn free_basis_failure(ring: &FlipPolyRing, bound: usize) -> Option<String> {
    let alg = ring.algebra();
    let x = ring.x();
    let mut power = ring.one();
    for n in 0..=bound {
        if power != Poly::monomial(alg.one(), n) {
            return Some(format!(
                "x^{n} computed as (x^{}) x is {power}",
                n.saturating_sub(1)
            ));
        }
        for r in alg.basis_elements() {
            let lhs = ring.product(&Poly::constant(r.clone()), &power);
            if lhs != mono(&r, n) {
                return Some(format!("[{r}] * x^{n} = {lhs}"));
            }
        }
        power = ring.product(&power, &x);
    }
    None
}

fn x_commutation_failure(ring: &FlipPolyRing) -> Option<String> {
    let x = ring.x();
    ring.algebra().basis_elements().into_iter().find_map(|r| {
        let lhs = ring.product(&x, &Poly::constant(r.clone()));
        let rhs = Poly::from_terms([(1, ring.sigma().apply(&r)), (0, ring.delta().apply(&r))]);
        (lhs != rhs).then(|| format!("x[{r}] = {lhs}, expected {rhs}"))
    })
}

fn f3_recursion_failure(ring: &FlipPolyRing, bound: usize) -> Option<String> {
    let alg = ring.algebra();
    let x = ring.x();
    for m in 0..bound {
        for n in 0..=bound {
            for r in alg.basis_elements() {
                for s in alg.basis_elements() {
                    let lhs = ring.product(&mono(&r, m + 1), &mono(&s, n));
                    let first = ring.product(
                        &ring.product(&mono(&r, m), &mono(&ring.sigma().apply(&s), n)),
                        &x,
                    );
                    let second = ring.product(&mono(&r, m), &mono(&ring.delta().apply(&s), n));
                    let rhs = first.add(&second);
                    if lhs != rhs {
                        return Some(format!("r=[{r}], s=[{s}], m={m}, n={n}: {lhs} vs {rhs}"));
                    }
                }
            }
        }
    }
    None
}

fn f3_left_action_failure(ring: &FlipPolyRing, bound: usize) -> Option<String> {
    let alg = ring.algebra();
    for n in 0..=bound {
        for r in alg.basis_elements() {
            for s in alg.basis_elements() {
                let lhs = ring.product(&Poly::constant(r.clone()), &mono(&s, n));
                let rhs = mono(&tau_raw(alg, n, &r, &s), n);
                if lhs != rhs {
                    return Some(format!("r=[{r}], s=[{s}], n={n}: {lhs} vs {rhs}"));
                }
            }
        }
    }
    None
}

fn n3_failure(ring: &FlipPolyRing, bound: usize) -> Option<String> {
    let alg = ring.algebra();
    let x = ring.x();
    for m in 0..=bound {
        for n in 0..=bound {
            for r in alg.basis_elements() {
                for s in alg.basis_elements() {
                    let (p, q) = (mono(&r, m), mono(&s, n));
                    let right = ring.assoc(&p, &q, &x);
                    if !right.is_zero() {
                        return Some(format!("({p}, {q}, X) = {right}"));
                    }
                    let middle = ring.assoc(&p, &x, &q);
                    if !middle.is_zero() {
                        return Some(format!("({p}, X, {q}) = {middle}"));
                    }
                }
            }
        }
    }
    None
}

fn o3_failure(ring: &FlipPolyRing, bound: usize) -> Option<String> {
    let alg = ring.algebra();
    let basis = alg.basis_elements();
    for m in 0..=bound {
        for n in 0..=bound {
            for k in 0..=bound {
                for r in &basis {
                    for s in &basis {
                        for t in &basis {
                            let (p, q, u) = (mono(r, m), mono(s, n), mono(t, k));
                            let a = ring.assoc(&p, &q, &u);
                            if !a.is_zero() {
                                return Some(format!("({p}, {q}, {u}) = {a}"));
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// Splits `p` into `(even, odd)` with `p = even(X^2) + odd(X^2) X`.
///
/// Requires `sigma delta + delta sigma = 0`, the condition under which the
/// even part is a subring isomorphic to `R[Y; sigma^2, delta^2]`.
pub fn graded_split(ring: &FlipPolyRing, p: &Poly) -> Result<(Poly, Poly)> {
    p.check_dim(ring.dim())?;
    let s = ring.sigma().matrix();
    let d = ring.delta().matrix();
    if !s.compose(d).add(&d.compose(s)).is_zero() {
        return Err(Error::GradingViolated);
    }
    let even = p.filter_degrees(|k| k % 2 == 0).map_degrees(|k| k / 2);
    let odd = p.filter_degrees(|k| k % 2 == 1).map_degrees(|k| k / 2);
    Ok((even, odd))
}

/// Inverse of [`graded_split`].
pub fn graded_merge(even: &Poly, odd: &Poly) -> Poly {
    even.map_degrees(|k| 2 * k)
        .add(&odd.map_degrees(|k| 2 * k + 1))
}

/// `R[Y; sigma^2, delta^2]`, the ring the even part is isomorphic to.
pub fn even_subring(ring: &FlipPolyRing) -> Result<FlipPolyRing> {
    let s = ring.sigma().matrix();
    let d = ring.delta().matrix();
    FlipPolyRing::new(ring.algebra().clone(), s.compose(s), d.compose(d), false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley_dickson::{named, NamedAlgebra};
    use crate::scalars::Rational;
    use crate::test_support::{nilpotent_delta, random_poly};
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn h_star() -> FlipPolyRing {
        FlipPolyRing::star_skew(named(NamedAlgebra::H))
    }

    #[test]
    fn tau_parity() {
        let h = named(NamedAlgebra::H);
        let (i, j, k) = (h.basis(1), h.basis(2), h.basis(3));
        assert_eq!(tau(&h, 0, &i, &j).unwrap(), k);
        assert_eq!(tau(&h, 1, &i, &j).unwrap(), -&k);
        assert_eq!(tau(&h, 7, &h.one(), &j).unwrap(), j);
        assert!(tau(&h, 0, &i, &AlgebraElement::zero(2)).is_err());
    }

    #[test]
    fn pi_special_cases() {
        let ring = h_star();
        let h = ring.algebra();
        let s = AlgebraElement::from_integers(&[1, 2, 3, 4]);
        // delta = 0: only i = m survives, giving sigma^m
        for m in 0..5 {
            for i in 0..=m + 1 {
                let want = if i == m {
                    if m % 2 == 0 {
                        s.clone()
                    } else {
                        h.star(&s).unwrap()
                    }
                } else {
                    AlgebraElement::zero(4)
                };
                assert_eq!(ring.pi(i, m, &s).unwrap(), want, "i={i} m={m}");
            }
        }
        assert_eq!(ring.pi_oracle(0, 0, &s).unwrap(), s);
        assert!(ring.pi_oracle(3, 2, &s).unwrap().is_zero());
        assert!(ring.pi_oracle(1, 13, &s).is_err());
    }

    #[test]
    fn pi_of_one_is_kronecker() {
        let h = named(NamedAlgebra::H);
        let ring = FlipPolyRing::new(
            h.clone(),
            h.involution().matrix().clone(),
            nilpotent_delta(4),
            true,
        )
        .unwrap();
        for m in 0..6 {
            for i in 0..=m {
                let want = if i == m { h.one() } else { h.zero() };
                assert_eq!(ring.pi(i, m, &h.one()).unwrap(), want);
            }
        }
    }

    #[test]
    fn pi_two_three_is_three_compositions() {
        let h = named(NamedAlgebra::H);
        let ring = FlipPolyRing::new(
            h.clone(),
            h.involution().matrix().clone(),
            nilpotent_delta(4),
            true,
        )
        .unwrap();
        let (sg, dl) = (ring.sigma(), ring.delta());
        for s in h.basis_elements() {
            let want = &(&sg.apply(&sg.apply(&dl.apply(&s))) + &sg.apply(&dl.apply(&sg.apply(&s))))
                + &dl.apply(&sg.apply(&sg.apply(&s)));
            assert_eq!(ring.pi(2, 3, &s).unwrap(), want);
        }
    }

    #[test]
    fn pi_inner_recurrence_agrees() {
        // pi_i^(m+1)(s) = pi_(i-1)^m(sigma s) + pi_i^m(delta s)
        let h = named(NamedAlgebra::H);
        let ring = FlipPolyRing::new(
            h.clone(),
            h.involution().matrix().clone(),
            nilpotent_delta(4),
            true,
        )
        .unwrap();
        for s in h.basis_elements() {
            for m in 0..6 {
                for i in 0..=m + 1 {
                    let lhs = ring.pi(i, m + 1, &s).unwrap();
                    let a = if i == 0 {
                        h.zero()
                    } else {
                        ring.pi(i - 1, m, &ring.sigma().apply(&s)).unwrap()
                    };
                    let b = ring.pi(i, m, &ring.delta().apply(&s)).unwrap();
                    assert_eq!(lhs, &a + &b);
                }
            }
        }
    }

    #[test]
    fn sigma_and_delta_unit_constraints() {
        let h = named(NamedAlgebra::H);
        let bad_sigma = Matrix::zero(4, 4);
        assert!(matches!(
            FlipPolyRing::new(h.clone(), bad_sigma, Matrix::zero(4, 4), true),
            Err(Error::InvalidMap(_))
        ));
        assert!(matches!(
            FlipPolyRing::new(h, Matrix::identity(4), Matrix::identity(4), true),
            Err(Error::InvalidMap(_))
        ));
    }

    #[test]
    fn quaternion_monomial_products() {
        let ring = h_star();
        let h = ring.algebra();
        let (i, j, k) = (h.basis(1), h.basis(2), h.basis(3));
        let p = ring
            .mul(&Poly::monomial(j, 1), &Poly::monomial(k, 1))
            .unwrap();
        assert_eq!(p, Poly::monomial(i.clone(), 2));
        // X r = r* X
        for r in h.basis_elements() {
            let xr = ring.mul(&ring.x(), &Poly::constant(r.clone())).unwrap();
            assert_eq!(xr, Poly::monomial(h.star(&r).unwrap(), 1));
        }
        // (r X^m) X = r X^(m+1)
        for r in h.basis_elements() {
            for m in 0..=6 {
                let lhs = ring.mul(&Poly::monomial(r.clone(), m), &ring.x()).unwrap();
                assert_eq!(lhs, Poly::monomial(r.clone(), m + 1));
            }
        }
    }

    #[test]
    fn zero_polynomial_annihilates() {
        let ring = h_star();
        let p = Poly::from_terms([(0, ring.algebra().basis(1)), (3, ring.algebra().basis(2))]);
        let z = ring.mul(&p, &Poly::zero()).unwrap();
        assert!(z.is_zero() && z.num_terms() == 0);
        assert!(ring.mul(&Poly::zero(), &p).unwrap().is_zero());
    }

    #[test]
    fn unit_is_two_sided() {
        let mut rng = StdRng::seed_from_u64(7);
        for name in [NamedAlgebra::C, NamedAlgebra::H, NamedAlgebra::O] {
            let ring = FlipPolyRing::star_skew(named(name));
            for _ in 0..20 {
                let p = random_poly(&mut rng, ring.dim(), 5);
                assert_eq!(ring.mul(&ring.one(), &p).unwrap(), p);
                assert_eq!(ring.mul(&p, &ring.one()).unwrap(), p);
            }
        }
    }

    #[test]
    fn skew_and_differential_specializations() {
        let h = named(NamedAlgebra::H);
        // differential: sigma = id, (r X^m)(s X^n) = sum_i C(m,i) r delta^(m-i)(s) X^(i+n)
        let ring =
            FlipPolyRing::new(h.clone(), Matrix::identity(4), nilpotent_delta(4), false).unwrap();
        let binom = |m: usize, i: usize| -> i64 {
            (0..i).fold(1i64, |acc, t| acc * (m - t) as i64 / (t + 1) as i64)
        };
        for r in h.basis_elements() {
            for s in h.basis_elements() {
                for m in 0..4 {
                    for n in 0..3 {
                        let got = ring
                            .mul(&Poly::monomial(r.clone(), m), &Poly::monomial(s.clone(), n))
                            .unwrap();
                        let mut want = Poly::zero();
                        for i in 0..=m {
                            let mut d = s.clone();
                            for _ in 0..(m - i) {
                                d = ring.delta().apply(&d);
                            }
                            let c = h
                                .mul(&r, &d)
                                .unwrap()
                                .scale(&Rational::from_integer(binom(m, i)));
                            want.add_term(i + n, &c);
                        }
                        assert_eq!(got, want);
                    }
                }
            }
        }
        // skew: delta = 0, (r X^m)(s X^n) = r sigma^m(s) X^(m+n)
        let skew = FlipPolyRing::star_skew(h.clone()).with_flipped(false);
        for r in h.basis_elements() {
            for s in h.basis_elements() {
                let got = skew
                    .mul(&Poly::monomial(r.clone(), 3), &Poly::monomial(s.clone(), 2))
                    .unwrap();
                assert_eq!(
                    got,
                    Poly::monomial(h.mul(&r, &h.star(&s).unwrap()).unwrap(), 5)
                );
            }
        }
    }

    #[test]
    fn rule_flip_is_an_involution() {
        let h = named(NamedAlgebra::H);
        let ring = FlipPolyRing::new(
            h.clone(),
            h.involution().matrix().clone(),
            nilpotent_delta(4),
            false,
        )
        .unwrap();
        let rule = ProductRule::Ring(ring);
        let twice = flip_rule(flip_rule(rule.clone()));
        assert!(twice.agrees_with(&rule, 4).unwrap());
        let table = ProductRule::Table(rule.tabulate(4).unwrap());
        assert!(flip_rule(flip_rule(table.clone()))
            .agrees_with(&table, 4)
            .unwrap());
        assert!(flip_rule(table.clone())
            .agrees_with(&flip_rule(rule.clone()), 4)
            .unwrap());
        assert!(!flip_rule(rule.clone()).agrees_with(&rule, 2).unwrap());
        assert!(rule.is_biadditive_on_basis(2).unwrap());
    }

    #[test]
    fn flipping_plain_polynomials() {
        // R[X]^fl: (r X^m)(s X^n) = tau_n(r, s) X^(m+n)
        let h = named(NamedAlgebra::H);
        let plain = ProductRule::Ring(FlipPolyRing::ordinary(h.clone()));
        let flipped = flip_rule(plain.clone());
        for r in h.basis_elements() {
            for s in h.basis_elements() {
                for m in 0..3 {
                    for n in 0..4 {
                        let got = flipped.eval(m, n, &r, &s).unwrap();
                        assert_eq!(got, Poly::monomial(tau_raw(&h, n, &r, &s), m + n));
                    }
                }
            }
        }
        // and it matches the flipped ring with sigma = id, delta = 0
        let ring_fl = ProductRule::Ring(FlipPolyRing::ordinary(h).with_flipped(true));
        assert!(flipped.agrees_with(&ring_fl, 4).unwrap());
        // over a commutative algebra the flip changes nothing
        let c = ProductRule::Ring(FlipPolyRing::ordinary(named(NamedAlgebra::C)));
        assert!(flip_rule(c.clone()).agrees_with(&c, 4).unwrap());
    }

    #[test]
    fn argument_swap_differs_from_skew_flip_when_sigma_is_nontrivial() {
        // Swapping the arguments of l gives b sigma(a); the flipped ring uses sigma(b) a.
        let h = named(NamedAlgebra::H);
        let skew = FlipPolyRing::star_skew(h.clone()).with_flipped(false);
        let literal = flip_rule(ProductRule::Ring(skew.clone()));
        let ring_fl = ProductRule::Ring(skew.with_flipped(true));
        let (i, one) = (h.basis(1), h.one());
        let swapped = literal.eval(1, 1, &i, &one).unwrap();
        let flipped = ring_fl.eval(1, 1, &i, &one).unwrap();
        assert_eq!(swapped, Poly::monomial(-&i, 2));
        assert_eq!(flipped, Poly::monomial(i, 2));
    }

    #[test]
    fn tabulated_rule_bound() {
        let c = named(NamedAlgebra::C);
        let t = ProductRule::Ring(FlipPolyRing::ordinary(c.clone()))
            .tabulate(2)
            .unwrap();
        let rule = ProductRule::Table(t);
        assert!(matches!(
            rule.eval(3, 0, &c.one(), &c.one()),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn axiom_bound_limit() {
        assert!(matches!(
            check_axioms(&h_star(), AxiomFamily::F, 9),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn axioms_on_quaternion_ring() {
        let ring = h_star();
        let f = check_axioms(&ring, AxiomFamily::F, 3).unwrap();
        assert!(f.passed(), "{f}");
        let n = check_axioms(&ring, AxiomFamily::N, 3).unwrap();
        assert!(!n.passed());
        assert!(n.check("N3").unwrap().counterexample.is_some());
        assert!(n.check("N1").unwrap().passed() && n.check("N2").unwrap().passed());
        let o = check_axioms(
            &FlipPolyRing::star_skew(named(NamedAlgebra::C)).with_flipped(false),
            AxiomFamily::O,
            3,
        )
        .unwrap();
        assert!(o.passed(), "{o}");
    }

    #[test]
    fn axioms_with_nonzero_delta() {
        let h = named(NamedAlgebra::H);
        let ring = FlipPolyRing::new(
            h.clone(),
            h.involution().matrix().clone(),
            nilpotent_delta(4),
            true,
        )
        .unwrap();
        assert!(check_axioms(&ring, AxiomFamily::F, 3).unwrap().passed());
        // in the unflipped ring the left action is not tau_n for odd n
        let unflipped = ring.with_flipped(false);
        let report = check_axioms(&unflipped, AxiomFamily::F, 3).unwrap();
        assert!(report.check("F3a").unwrap().passed());
        assert!(!report.check("F3b").unwrap().passed());
    }

    #[test]
    fn graded_split_reindexes() {
        let ring = h_star();
        let h = ring.algebra();
        let (a, b, c, d) = (h.basis(0), h.basis(1), h.basis(2), h.basis(3));
        let p = Poly::from_terms([
            (0, a.clone()),
            (1, b.clone()),
            (2, c.clone()),
            (3, d.clone()),
        ]);
        let (even, odd) = graded_split(&ring, &p).unwrap();
        assert_eq!(even, Poly::from_terms([(0, a), (1, c)]));
        assert_eq!(odd, Poly::from_terms([(0, b), (1, d)]));
        assert_eq!(graded_merge(&even, &odd), p);
        let (ez, oz) = graded_split(&ring, &Poly::zero()).unwrap();
        assert!(ez.is_zero() && oz.is_zero());
    }

    #[test]
    fn graded_split_requires_anticommuting_maps() {
        let h = named(NamedAlgebra::H);
        let ring = FlipPolyRing::new(h, Matrix::identity(4), nilpotent_delta(4), true).unwrap();
        assert_eq!(
            graded_split(&ring, &Poly::zero()),
            Err(Error::GradingViolated)
        );
    }
}
