//! Verification suites: each one checks a single structural statement on a
//! fixed, deterministic matrix of algebras and reports every case.

use std::fmt;
use std::str::FromStr;

use crate::algebra::StarAlgebra;
use crate::cayley_dickson::{cayley_double, named, tower, DoublingSpec, NamedAlgebra};
use crate::error::{Error, Result};
use crate::flip_poly::{check_axioms, AxiomFamily, FlipPolyRing};
use crate::involutions::alpha;
use crate::poly::Poly;
use crate::quotient::{
    pair_mul, pair_star, phi, phi_inv, psi, psi_inv, quot_mul, quot_star, PolyPair, QuotElement,
};
use crate::scalars::Rational;
use crate::structure::{
    b_alternative_criterion, b_commutative_criterion, b_flexible_criterion, degreewise_set,
    degreewise_set_bruteforce, left_right_nucleus_discrepancy, ring_is_associative_criterion,
    z_star_of_b, SetKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Thm1,
    Thm2,
    Props,
    Centers,
    Corollary,
    Axioms,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Thm1,
        Suite::Thm2,
        Suite::Props,
        Suite::Centers,
        Suite::Corollary,
        Suite::Axioms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Props => "props",
            Suite::Centers => "centers",
            Suite::Corollary => "corollary",
            Suite::Axioms => "axioms",
        }
    }

    /// The statement the suite checks.
    pub fn statement(self) -> &'static str {
        match self {
            Suite::Thm1 => "A[X;*]^fl/<X^2-mu> is *-isomorphic to Cay(A,mu) via [a+bX] -> (a,b)",
            Suite::Thm2 => "Cay(A[t],t) is *-isomorphic to A[X;*]^fl via (p,q) -> p(X^2)+q(X^2)X",
            Suite::Props => "property inheritance: B=A[X;*]^fl is commutative/associative/flexible/alternative iff the criteria on A hold",
            Suite::Centers => "commuter, nuclei and center of A[X;*]^fl are the degreewise sets",
            Suite::Corollary => "for n-fold doublings of Q: C(B)=Z(B)=K[X] (n=0) or K[X^2]; Z_*(B)=K[X^2]; N(B)=B (n<=1) or K[X^2]",
            Suite::Axioms => "A[X;*]^fl satisfies F1-F3; (N3) holds iff A is commutative; flipping changes nothing iff A is commutative",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite `{s}` (expected thm1, thm2, props, centers, corollary or axioms)")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An algebra together with the label used in reports.
#[derive(Clone, Debug)]
pub struct Target {
    pub label: String,
    pub algebra: StarAlgebra,
}

impl Target {
    pub fn named(name: NamedAlgebra) -> Self {
        Target {
            label: name.token().to_string(),
            algebra: named(name),
        }
    }

    pub fn from_spec(spec: &DoublingSpec) -> Result<Self> {
        let mus: Vec<String> = spec.mus().iter().map(Rational::to_string).collect();
        Ok(Target {
            label: format!("mus=[{}]", mus.join(",")),
            algebra: tower(spec)?,
        })
    }
}

/// Overrides for a suite's default matrix. `None` keeps the default.
#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    pub targets: Option<Vec<Target>>,
    pub mus: Option<Vec<Rational>>,
    pub bound: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub label: String,
    pub failure: Option<String>,
}

impl CheckOutcome {
    fn new(label: impl Into<String>, failure: Option<String>) -> Self {
        CheckOutcome {
            label: label.into(),
            failure,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub outcomes: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(CheckOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckOutcome> {
        self.outcomes.iter().find(|o| !o.passed())
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(f, "{status} {}: {}", self.suite, self.suite.statement())?;
        for o in &self.outcomes {
            match &o.failure {
                None => writeln!(f, "  ok   {}", o.label)?,
                Some(w) => writeln!(f, "  FAIL {}\n       counterexample: {w}", o.label)?,
            }
        }
        Ok(())
    }
}

fn targets(opts: &SuiteOptions, default: &[NamedAlgebra]) -> Vec<Target> {
    opts.targets
        .clone()
        .unwrap_or_else(|| default.iter().map(|&n| Target::named(n)).collect())
}

fn mus(opts: &SuiteOptions) -> Vec<Rational> {
    opts.mus
        .clone()
        .unwrap_or_else(|| vec![Rational::from_integer(-1), Rational::one()])
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport> {
    let outcomes = match suite {
        Suite::Thm1 => thm1(opts)?,
        Suite::Thm2 => thm2(opts)?,
        Suite::Props => props(opts)?,
        Suite::Centers => centers(opts)?,
        Suite::Corollary => corollary(opts)?,
        Suite::Axioms => axioms(opts)?,
    };
    Ok(SuiteReport { suite, outcomes })
}

pub fn run_all(opts: &SuiteOptions) -> Result<Vec<SuiteReport>> {
    Suite::ALL.iter().map(|&s| run_suite(s, opts)).collect()
}

/// Quotient-to-double identification for one `(A, mu)`.
pub fn thm1_failure(alg: &StarAlgebra, mu: &Rational) -> Result<Option<String>> {
    let cay = cayley_double(alg, mu)?;
    let n = alg.dim();
    let basis: Vec<QuotElement> = (0..2 * n).map(|k| QuotElement::basis(n, k)).collect();
    if cay.dim() != 2 * n {
        return Ok(Some(format!("dimension {} vs {}", cay.dim(), 2 * n)));
    }
    for (k, u) in basis.iter().enumerate() {
        if phi(u) != cay.basis(k) || phi_inv(&phi(u))? != *u {
            return Ok(Some(format!("phi is not the basis bijection at index {k}")));
        }
    }
    for u in &basis {
        for v in &basis {
            let lhs = phi(&quot_mul(alg, mu, u, v)?);
            let rhs = cay.mul(&phi(u), &phi(v))?;
            if lhs != rhs {
                return Ok(Some(format!(
                    "phi({u} {v}) = [{lhs}] but phi({u}) phi({v}) = [{rhs}]"
                )));
            }
        }
        let lhs = phi(&quot_star(alg, u)?);
        let rhs = cay.star(&phi(u))?;
        if lhs != rhs {
            return Ok(Some(format!("phi({u}*) = [{lhs}] but phi({u})* = [{rhs}]")));
        }
    }
    Ok(None)
}

fn thm1(opts: &SuiteOptions) -> Result<Vec<CheckOutcome>> {
    use NamedAlgebra::*;
    let mut out = Vec::new();
    for t in targets(opts, &[R, C, CSplit, H, HSplit]) {
        for mu in mus(opts) {
            out.push(CheckOutcome::new(
                format!("A={} mu={mu}", t.label),
                thm1_failure(&t.algebra, &mu)?,
            ));
        }
    }
    Ok(out)
}

/// Monomials `a t^d` in either slot of a pair, basis `a`, `d <= t_bound`.
fn pair_monomials(alg: &StarAlgebra, t_bound: usize) -> Vec<PolyPair> {
    let mut out = Vec::new();
    for d in 0..=t_bound {
        for a in alg.basis_elements() {
            out.push(PolyPair::new(Poly::monomial(a.clone(), d), Poly::zero()));
            out.push(PolyPair::new(Poly::zero(), Poly::monomial(a, d)));
        }
    }
    out
}

/// `psi(uv) = psi(u) psi(v)` and `psi(u*) = alpha(psi(u))` on monomial pairs.
pub fn thm2_failure(alg: &StarAlgebra, t_bound: usize) -> Result<Option<String>> {
    let ring = FlipPolyRing::star_skew(alg.clone());
    let monos = pair_monomials(alg, t_bound);
    for u in &monos {
        if psi_inv(&psi(u)) != *u {
            return Ok(Some(format!("psi is not invertible at {u}")));
        }
        for v in &monos {
            let lhs = psi(&pair_mul(alg, u, v)?);
            let rhs = ring.mul(&psi(u), &psi(v))?;
            if lhs != rhs {
                return Ok(Some(format!(
                    "psi({u} {v}) = {lhs} but psi({u}) psi({v}) = {rhs}"
                )));
            }
        }
        let lhs = psi(&pair_star(alg, u)?);
        let rhs = alpha(&ring, &psi(u))?;
        if lhs != rhs {
            return Ok(Some(format!("psi({u}*) = {lhs} but psi({u})* = {rhs}")));
        }
    }
    Ok(None)
}

fn thm2(opts: &SuiteOptions) -> Result<Vec<CheckOutcome>> {
    use NamedAlgebra::*;
    let t_bound = opts.bound.unwrap_or(2).min(2);
    targets(opts, &[C, H])
        .into_iter()
        .map(|t| {
            Ok(CheckOutcome::new(
                format!("A={} t-degree<={t_bound}", t.label),
                thm2_failure(&t.algebra, t_bound)?,
            ))
        })
        .collect()
}

/// `(commutative, associative, alternative, flexible)` with a witness for each failure.
pub fn property_ladder(alg: &StarAlgebra) -> [(bool, Option<String>); 4] {
    let w = |x: Option<crate::algebra::Witness>| (x.is_none(), x.map(|w| w.to_string()));
    [
        w(alg.commutativity_witness()),
        w(alg.associativity_witness()),
        w(alg.alternativity_witness()),
        w(alg.flexibility_witness()),
    ]
}

pub const LADDER: [(NamedAlgebra, [bool; 4]); 5] = [
    (NamedAlgebra::R, [true, true, true, true]),
    (NamedAlgebra::C, [true, true, true, true]),
    (NamedAlgebra::H, [false, true, true, true]),
    (NamedAlgebra::O, [false, false, true, true]),
    (NamedAlgebra::S, [false, false, false, true]),
];

fn props(opts: &SuiteOptions) -> Result<Vec<CheckOutcome>> {
    use NamedAlgebra::*;
    let names = ["commutative", "associative", "alternative", "flexible"];
    let mut out = Vec::new();
    if opts.targets.is_none() {
        for (name, expected) in LADDER {
            let got = property_ladder(&named(name));
            let mut failure = None;
            let mut notes = Vec::new();
            for (k, (ok, witness)) in got.iter().enumerate() {
                if *ok != expected[k] {
                    failure = Some(format!("{} is {ok}, expected {}", names[k], expected[k]));
                    break;
                }
                if !ok && witness.is_none() {
                    failure = Some(format!("{} fails without a witness", names[k]));
                    break;
                }
                if let Some(w) = witness {
                    notes.push(format!("not {}: {w}", names[k]));
                }
            }
            let flags: Vec<&str> = got
                .iter()
                .map(|(ok, _)| if *ok { "T" } else { "F" })
                .collect();
            let mut label = format!(
                "ladder {name} (dim {}) = ({})",
                named(name).dim(),
                flags.join(",")
            );
            for n in notes {
                label.push_str(&format!("\n       {n}"));
            }
            out.push(CheckOutcome::new(label, failure));
        }
    }
    for t in targets(opts, &[R, C, H, O]) {
        let ring = FlipPolyRing::star_skew(t.algebra.clone());
        let bound = opts.bound.unwrap_or(2).min(3);
        let assoc_direct = check_axioms(&ring.with_flipped(true), AxiomFamily::O, bound)?.passed();
        let criterion = ring_is_associative_criterion(&ring);
        out.push(CheckOutcome::new(
            format!("A={}: associativity criterion = {criterion}, direct (degrees<={bound}) = {assoc_direct}", t.label),
            (criterion != assoc_direct).then(|| "criterion disagrees with direct evaluation".to_string()),
        ));
        for mu in mus(opts) {
            let q = crate::quotient::quotient_algebra(&t.algebra, &mu)?;
            let rows = [
                (
                    "commutative",
                    b_commutative_criterion(&t.algebra),
                    q.is_commutative(),
                ),
                (
                    "associative",
                    ring_is_associative_criterion(&ring),
                    q.is_associative(),
                ),
                (
                    "flexible",
                    b_flexible_criterion(&t.algebra),
                    q.is_flexible(),
                ),
                (
                    "alternative",
                    b_alternative_criterion(&t.algebra),
                    q.is_alternative(),
                ),
            ];
            for (what, crit, direct) in rows {
                out.push(CheckOutcome::new(
                    format!(
                        "A={} mu={mu}: {what} criterion = {crit}, quotient = {direct}",
                        t.label
                    ),
                    (crit != direct).then(|| format!("{what} criterion disagrees with B/<X^2-mu>")),
                ));
            }
        }
    }
    Ok(out)
}

/// Compares criterion and brute-force degreewise sets; also checks `N_l(B) = N_r(B)`.
pub fn centers_failures(alg: &StarAlgebra, bound: usize) -> Result<Vec<(SetKind, Option<String>)>> {
    let mut out = Vec::new();
    for kind in SetKind::ALL {
        let crit = degreewise_set(alg, kind, bound)?;
        let brute = degreewise_set_bruteforce(alg, kind, bound)?;
        let failure = crit.first_difference(&brute).map(|d| {
            format!(
                "degree {d}: criterion dim {} vs brute force dim {}",
                crit.degree(d).dim(),
                brute.degree(d).dim()
            )
        });
        out.push((kind, failure));
    }
    Ok(out)
}

fn centers(opts: &SuiteOptions) -> Result<Vec<CheckOutcome>> {
    use NamedAlgebra::*;
    let bound = opts.bound.unwrap_or(4).min(4);
    let mut out = Vec::new();
    for t in targets(opts, &[R, C, H, O]) {
        for (kind, failure) in centers_failures(&t.algebra, bound)? {
            out.push(CheckOutcome::new(
                format!("A={} {kind} degrees<={bound}", t.label),
                failure,
            ));
        }
        let lr = left_right_nucleus_discrepancy(&t.algebra, bound)?;
        out.push(CheckOutcome::new(
            format!(
                "A={} left nucleus = right nucleus degrees<={bound}",
                t.label
            ),
            lr.map(|d| format!("brute-force left and right nuclei differ at degree {d}")),
        ));
    }
    Ok(out)
}

/// Expected degreewise dimensions for an `n`-fold doubling: `K[X]`, `K[X^2]` or all of `B`.
pub fn corollary_failures(n: usize, bound: usize) -> Result<Vec<(String, Option<String>)>> {
    let alg = tower(&DoublingSpec::from_integers(&vec![-1; n])?)?;
    let dim = alg.dim();
    let kx: Vec<usize> = vec![1; bound + 1];
    let kx2: Vec<usize> = (0..=bound).map(|i| usize::from(i % 2 == 0)).collect();
    let full = vec![dim; bound + 1];
    let cases: Vec<(&str, Vec<usize>, Vec<usize>)> = vec![
        (
            "C(B)",
            degreewise_set(&alg, SetKind::Commuter, bound)?.dims(),
            if n == 0 { kx.clone() } else { kx2.clone() },
        ),
        (
            "Z(B)",
            degreewise_set(&alg, SetKind::Center, bound)?.dims(),
            if n == 0 { kx.clone() } else { kx2.clone() },
        ),
        ("Z_*(B)", z_star_of_b(&alg, bound)?.dims(), kx2.clone()),
        (
            "N(B)",
            degreewise_set(&alg, SetKind::Nucleus, bound)?.dims(),
            if n <= 1 { full } else { kx2.clone() },
        ),
    ];
    let mut out = Vec::new();
    for (what, got, want) in cases {
        let unit_span_ok = |set: &[usize]| set == want.as_slice();
        out.push((
            format!("n={n} (dim {dim}) {what} dims {got:?}"),
            (!unit_span_ok(&got)).then(|| format!("expected dims {want:?}")),
        ));
    }
    Ok(out)
}

fn corollary(opts: &SuiteOptions) -> Result<Vec<CheckOutcome>> {
    let bound = opts
        .bound
        .unwrap_or(6)
        .min(crate::structure::MAX_DEGREEWISE_BOUND);
    let mut out = Vec::new();
    for n in 0..=4 {
        for (label, failure) in corollary_failures(n, bound)? {
            out.push(CheckOutcome::new(label, failure));
        }
    }
    Ok(out)
}

/// Whether the flipped and unflipped products agree on all basis monomials of degree `<= bound`.
pub fn flip_changes_nothing(alg: &StarAlgebra, bound: usize) -> Option<String> {
    let ring = FlipPolyRing::star_skew(alg.clone());
    let plain = ring.with_flipped(false);
    for m in 0..=bound {
        for n in 0..=bound {
            for r in alg.basis_elements() {
                for s in alg.basis_elements() {
                    let (p, q) = (Poly::monomial(r.clone(), m), Poly::monomial(s.clone(), n));
                    let (a, b) = (ring.product(&p, &q), plain.product(&p, &q));
                    if a != b {
                        return Some(format!("({p})({q}) is {a} flipped but {b} unflipped"));
                    }
                }
            }
        }
    }
    None
}

fn axioms(opts: &SuiteOptions) -> Result<Vec<CheckOutcome>> {
    use NamedAlgebra::*;
    let bound = opts
        .bound
        .unwrap_or(4)
        .min(crate::flip_poly::MAX_AXIOM_BOUND);
    let mut out = Vec::new();
    for t in targets(opts, &[C, H]) {
        let ring = FlipPolyRing::star_skew(t.algebra.clone());
        let commutative = t.algebra.is_commutative();
        let f = check_axioms(&ring, AxiomFamily::F, bound)?;
        out.push(CheckOutcome::new(
            format!("A={} F1-F3 degrees<={bound}", t.label),
            f.first_failure().map(|c| {
                format!(
                    "{}: {}",
                    c.name,
                    c.counterexample.clone().unwrap_or_default()
                )
            }),
        ));
        let n = check_axioms(&ring, AxiomFamily::N, bound)?;
        let n3 = n.check("N3").and_then(|c| c.counterexample.clone());
        let label = match &n3 {
            Some(w) => format!("A={} (N3) fails with witness {w}", t.label),
            None => format!("A={} (N3) holds", t.label),
        };
        out.push(CheckOutcome::new(
            label,
            (n3.is_none() != commutative)
                .then(|| format!("(N3) outcome does not match commutativity = {commutative}")),
        ));
        let diff = flip_changes_nothing(&t.algebra, bound);
        let label = match &diff {
            Some(w) => format!("A={} flipped != unflipped: {w}", t.label),
            None => format!("A={} flipped = unflipped", t.label),
        };
        out.push(CheckOutcome::new(
            label,
            (diff.is_none() != commutative)
                .then(|| format!("flip coincidence does not match commutativity = {commutative}")),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("thm3".parse::<Suite>().is_err());
    }

    #[test]
    fn thm1_single_case() {
        let h = named(NamedAlgebra::H);
        assert_eq!(thm1_failure(&h, &Rational::from_integer(-1)).unwrap(), None);
    }

    #[test]
    fn axioms_suite_passes() {
        let r = run_suite(
            Suite::Axioms,
            &SuiteOptions {
                bound: Some(3),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn reports_are_deterministic() {
        let opts = SuiteOptions {
            bound: Some(2),
            ..Default::default()
        };
        let a = run_suite(Suite::Thm2, &opts).unwrap().to_string();
        let b = run_suite(Suite::Thm2, &opts).unwrap().to_string();
        assert_eq!(a, b);
    }
}
