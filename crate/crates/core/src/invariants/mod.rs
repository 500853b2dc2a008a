//! Coxeter number, exponents, Fuss–Catalan polynomials and `M(G)` computed
//! from a bare Coxeter diagram by recursion over induced subdiagrams, with
//! no root system involved. Applied to diagrams of infinite type the same
//! recursions give "fake" invariants or fail in characteristic ways.

mod methods;

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::diagram::{classify, CoxeterDiagram};
use crate::exactmath::{fmt_rational, int, rational_roots, rational_to_f64, Poly, Rational};

pub use methods::run_method;

/// Diagrams above this rank are not attempted (the recursions visit every
/// vertex subset).
pub const DEFAULT_MAX_RANK: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Euler,
    Symmetry,
    ReciprocitySimple,
    ReciprocityGeneral,
    Mg,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Euler,
        Method::Symmetry,
        Method::ReciprocitySimple,
        Method::ReciprocityGeneral,
        Method::Mg,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Method::Euler => "euler",
            Method::Symmetry => "symmetry",
            Method::ReciprocitySimple => "reciprocity_simple",
            Method::ReciprocityGeneral => "reciprocity_general",
            Method::Mg => "mg",
        }
    }

    /// Accepts the report keys and the short CLI names `recip`, `recipm`.
    pub fn parse(s: &str) -> Option<Method> {
        Some(match s {
            "euler" => Method::Euler,
            "symmetry" => Method::Symmetry,
            "recip" | "reciprocity_simple" => Method::ReciprocitySimple,
            "recipm" | "reciprocity_general" => Method::ReciprocityGeneral,
            "mg" => Method::Mg,
            _ => return None,
        })
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MethodStatus {
    Ok,
    NonConstantH,
    AsymmetricQ,
    NonPolynomialQ,
    ZeroDenominator,
    NegativeH,
    BudgetExceeded,
    /// Empty or disconnected input.
    NotApplicable,
    /// Some proper connected subdiagram did not come out `Ok`.
    SubdiagramFailed,
}

impl MethodStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            MethodStatus::Ok => "ok",
            MethodStatus::NonConstantH => "non-constant-h",
            MethodStatus::AsymmetricQ => "asymmetric-Q",
            MethodStatus::NonPolynomialQ => "non-polynomial-Q",
            MethodStatus::ZeroDenominator => "zero-denominator",
            MethodStatus::NegativeH => "negative-h",
            MethodStatus::BudgetExceeded => "budget-exceeded",
            MethodStatus::NotApplicable => "not-applicable",
            MethodStatus::SubdiagramFailed => "subdiagram-failed",
        }
    }

    pub fn is_ok(self) -> bool {
        self == MethodStatus::Ok
    }
}

impl fmt::Display for MethodStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Exponents `e = -h mu - 1` for the roots `mu` of `N(G, m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Exponents {
    /// Rational exponents with multiplicity, ascending.
    pub rational: Vec<Rational>,
    /// Primitive polynomial in `e` whose roots are the remaining exponents;
    /// `1` when all are rational.
    pub irrational_poly: Poly,
    /// Real roots of `irrational_poly`, ascending.
    pub irrational_approx: Vec<f64>,
    pub nonreal: usize,
}

impl Exponents {
    pub fn from_n_poly(n_poly: &Poly, h: &Rational) -> Option<Exponents> {
        if n_poly.is_zero() || h.is_zero() {
            return None;
        }
        let roots = rational_roots(n_poly);
        let mut rational: Vec<Rational> = roots
            .rational_roots
            .iter()
            .map(|mu| -(h * mu) - Rational::one())
            .collect();
        rational.sort();
        let inv = -(Rational::one() / h);
        let irrational_poly = roots.residual_factor.compose_linear(&inv, &inv).primitive();
        let hf = rational_to_f64(h);
        let mut irrational_approx: Vec<f64> = roots
            .numeric_residual_roots
            .iter()
            .map(|mu| -hf * mu - 1.0)
            .collect();
        irrational_approx.sort_by(f64::total_cmp);
        Some(Exponents {
            rational,
            irrational_poly,
            irrational_approx,
            nonreal: roots.nonreal_count,
        })
    }

    pub fn all_rational(&self) -> bool {
        self.irrational_poly.degree() == Some(0)
    }

    /// Every real exponent as a float, ascending.
    pub fn approx(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.rational.iter().map(rational_to_f64).collect();
        v.extend(&self.irrational_approx);
        v.sort_by(f64::total_cmp);
        v
    }

    pub fn to_json(&self) -> Value {
        let mut out = json!({
            "rational": self.rational.iter().map(fmt_rational).collect::<Vec<_>>(),
        });
        if !self.all_rational() {
            out["irrational"] = json!({
                "poly": self.irrational_poly.to_strings(),
                "approx": self.irrational_approx,
                "nonreal": self.nonreal,
            });
        }
        out
    }
}

/// What one method produced for one diagram.
#[derive(Clone, Debug, PartialEq)]
pub struct MethodResult {
    pub status: MethodStatus,
    pub h: Option<Rational>,
    /// `N(G, m)`.
    pub n_poly: Option<Poly>,
    /// `N^+(G, m)`.
    pub n_plus_poly: Option<Poly>,
    pub m_value: Option<Rational>,
    pub exponents: Option<Exponents>,
    /// `N(G, 1)` and `N^+(G, 1)` as solved directly, where the method does.
    pub at_one: Option<(Rational, Rational)>,
    pub detail: Option<String>,
}

impl MethodResult {
    pub fn failed(status: MethodStatus, detail: impl Into<Option<String>>) -> Self {
        MethodResult {
            status,
            h: None,
            n_poly: None,
            n_plus_poly: None,
            m_value: None,
            exponents: None,
            at_one: None,
            detail: detail.into(),
        }
    }

    /// Fill `N^+`, `M` and exponents from `N` and `h` where missing.
    pub(crate) fn complete(mut self, rank: usize) -> Self {
        if let (Some(n), None) = (&self.n_poly, &self.n_plus_poly) {
            self.n_plus_poly = Some(crate::formulas::f_plus(n, rank));
        }
        if let (Some(np), None) = (&self.n_plus_poly, &self.m_value) {
            self.m_value = Some(np.coeff(1) * int(rank as i64));
        }
        if let (Some(n), Some(h), None) = (&self.n_poly, &self.h, &self.exponents) {
            self.exponents = Exponents::from_n_poly(n, h);
        }
        self
    }

    /// Same `h` and the same exponent multiset.
    pub fn agrees_with(&self, other: &MethodResult) -> bool {
        self.h == other.h
            && match (&self.exponents, &other.exponents) {
                (Some(a), Some(b)) => {
                    a.rational == b.rational
                        && a.irrational_poly == b.irrational_poly
                        && a.nonreal == b.nonreal
                }
                (None, None) => true,
                _ => false,
            }
    }

    pub fn to_json(&self) -> Value {
        let r = |x: &Option<Rational>| x.as_ref().map(fmt_rational);
        json!({
            "status": self.status.as_str(),
            "h": r(&self.h),
            "N": self.n_poly.as_ref().map(Poly::to_strings),
            "N_plus": self.n_plus_poly.as_ref().map(Poly::to_strings),
            "M": r(&self.m_value),
            "exponents": self.exponents.as_ref().map(Exponents::to_json),
            "at_one": self.at_one.as_ref().map(|(a, b)| json!({"N": fmt_rational(a), "N_plus": fmt_rational(b)})),
            "detail": self.detail,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Consensus {
    /// Every method is ok and all agree.
    Agree,
    /// Two ok methods differ.
    Disagree,
    /// Not every method is ok; those that are agree.
    Partial,
}

impl Consensus {
    pub fn as_str(self) -> &'static str {
        match self {
            Consensus::Agree => "agree",
            Consensus::Disagree => "disagree",
            Consensus::Partial => "partial",
        }
    }
}

#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub diagram: String,
    pub classification: String,
    pub results: Vec<(Method, MethodResult)>,
    pub consensus: Consensus,
}

impl InvariantReport {
    pub fn get(&self, m: Method) -> Option<&MethodResult> {
        self.results.iter().find(|(k, _)| *k == m).map(|(_, r)| r)
    }

    pub fn to_json(&self) -> Value {
        let methods: serde_json::Map<String, Value> = self
            .results
            .iter()
            .map(|(m, r)| (m.key().to_string(), r.to_json()))
            .collect();
        json!({
            "diagram": self.diagram,
            "classification": self.classification,
            "methods": methods,
            "consensus": self.consensus.as_str(),
        })
    }
}

pub fn consensus(results: &[(Method, MethodResult)]) -> Consensus {
    let ok: Vec<&MethodResult> = results
        .iter()
        .map(|(_, r)| r)
        .filter(|r| r.status.is_ok())
        .collect();
    if ok.windows(2).any(|w| !w[0].agrees_with(w[1])) {
        Consensus::Disagree
    } else if ok.len() == results.len() && !ok.is_empty() {
        Consensus::Agree
    } else {
        Consensus::Partial
    }
}

/// Run the given methods on `g`.
pub fn compute(g: &CoxeterDiagram, methods: &[Method], max_rank: usize) -> InvariantReport {
    let results: Vec<(Method, MethodResult)> = methods
        .iter()
        .map(|&m| (m, run_method(g, m, max_rank)))
        .collect();
    InvariantReport {
        diagram: g.canonical_spec(),
        classification: classify(g).describe(),
        consensus: consensus(&results),
        results,
    }
}

/// All five methods with the default rank cap.
pub fn compute_all(g: &CoxeterDiagram) -> InvariantReport {
    compute(g, &Method::ALL, DEFAULT_MAX_RANK)
}

/// `h < 0` gets its own status; the numbers are still reported.
pub(crate) fn sign_status(h: &Rational) -> MethodStatus {
    if h.is_negative() {
        MethodStatus::NegativeH
    } else {
        MethodStatus::Ok
    }
}

#[cfg(test)]
mod tests;
