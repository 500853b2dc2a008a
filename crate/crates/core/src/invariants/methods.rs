//! The five recursions. Each keeps its own memo keyed by vertex subset and
//! only ever consults its own results for proper subdiagrams.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{sign_status, Method, MethodResult, MethodStatus};
use crate::diagram::{CoxeterDiagram, VertexSet};
use crate::exactmath::{int, Poly, Rational, RationalFunction};
use crate::formulas::{convolve, f_polys_with};

use MethodStatus::{
    AsymmetricQ, BudgetExceeded, NonConstantH, NonPolynomialQ, NotApplicable, SubdiagramFailed,
    ZeroDenominator,
};

#[derive(Clone, Debug)]
struct Node<T> {
    status: MethodStatus,
    value: Option<T>,
    detail: Option<String>,
}

impl<T> Node<T> {
    fn ok(value: T) -> Self {
        Node {
            status: MethodStatus::Ok,
            value: Some(value),
            detail: None,
        }
    }

    fn fail(status: MethodStatus, detail: impl Into<String>) -> Self {
        Node {
            status,
            value: None,
            detail: Some(detail.into()),
        }
    }

    fn settle(own: MethodStatus, sub_ok: bool, value: T) -> Self {
        let status = match (own, sub_ok) {
            (MethodStatus::Ok, false) => SubdiagramFailed,
            (s, _) => s,
        };
        Node {
            status,
            value: Some(value),
            detail: None,
        }
    }
}

fn missing<T>() -> Node<T> {
    Node::fail(SubdiagramFailed, "a proper subdiagram has no value")
}

/// Memoized connected components of vertex subsets.
struct Subsets<'a> {
    g: &'a CoxeterDiagram,
    comps: HashMap<VertexSet, Vec<VertexSet>>,
}

impl<'a> Subsets<'a> {
    fn new(g: &'a CoxeterDiagram) -> Self {
        Subsets {
            g,
            comps: HashMap::new(),
        }
    }

    fn components(&mut self, s: VertexSet) -> Vec<VertexSet> {
        let g = self.g;
        self.comps
            .entry(s)
            .or_insert_with(|| g.restrict(s).component_sets())
            .clone()
    }

    /// `h` postulated for a connected subset of rank 1 or 2.
    fn base_h(&self, s: VertexSet) -> Rational {
        let v: Vec<usize> = s.iter().collect();
        match v.as_slice() {
            [_] => int(2),
            [a, b] => int(self.g.label(*a, *b) as i64),
            _ => unreachable!("base case of rank {}", v.len()),
        }
    }
}

/// `[f_0, .., f_r]` for rank 1 (`h = 2`) or a single edge labelled `h`.
fn base_f(h: &Rational, rank: usize) -> Vec<Poly> {
    let one = Rational::one();
    if rank == 1 {
        return vec![Poly::one(), Poly::linear(one.clone(), one)];
    }
    let f1 = Poly::linear(h.clone(), int(2));
    let f2 = (&f1 * &Poly::linear(one.clone(), one)).scale(&Rational::new(1.into(), 2.into()));
    vec![Poly::one(), f1, f2]
}

fn half(x: Rational) -> Rational {
    x / int(2)
}

// ---------------------------------------------------------------- Euler

#[derive(Clone, Debug)]
struct EulerVal {
    h: Rational,
    f: Vec<Poly>,
}

struct Euler<'a> {
    sub: Subsets<'a>,
    memo: HashMap<VertexSet, Node<EulerVal>>,
}

impl Euler<'_> {
    fn node(&mut self, s: VertexSet) -> Node<EulerVal> {
        if let Some(n) = self.memo.get(&s) {
            return n.clone();
        }
        let out = match s.len() {
            1 | 2 => {
                let h = self.sub.base_h(s);
                Node::ok(EulerVal {
                    f: base_f(&h, s.len()),
                    h,
                })
            }
            _ => self.solve(s),
        };
        self.memo.insert(s, out.clone());
        out
    }

    fn f_of(&mut self, s: VertexSet) -> Option<(Vec<Poly>, bool)> {
        let mut acc = vec![Poly::one()];
        let mut ok = true;
        for c in self.sub.components(s) {
            let n = self.node(c);
            ok &= n.status.is_ok();
            acc = convolve(&acc, &n.value?.f);
        }
        Some((acc, ok))
    }

    fn solve(&mut self, s: VertexSet) -> Node<EulerVal> {
        let n = s.len();
        let mut t = vec![Poly::zero(); n];
        let mut sub_ok = true;
        for v in s.iter() {
            let Some((f, ok)) = self.f_of(s.without(v)) else {
                return missing();
            };
            sub_ok &= ok;
            for (tk, fk) in t.iter_mut().zip(&f) {
                *tk = &*tk + fk;
            }
        }
        // sum_k (-1)^(n-k) f_k(m) = f_n(m - 1) with f_k = (mh + 2)/(2k) t_{k-1},
        // rearranged as h * b(m) + c(m) = 0.
        let sign = |k: usize| if (n - k) % 2 == 0 { int(1) } else { int(-1) };
        let mut b = Poly::zero();
        let mut c = Poly::constant(sign(0));
        for k in 1..=n {
            let term = t[k - 1].scale(&(sign(k) / int(2 * k as i64)));
            b = &b + &(&Poly::x() * &term);
            c = &c + &term.scale(&int(2));
        }
        let last = t[n - 1].shift_down().scale(&(Rational::one() / int(2 * n as i64)));
        b = &b - &(&Poly::linear(int(1), int(-1)) * &last);
        c = &c - &last.scale(&int(2));
        if b.is_zero() {
            return Node::fail(ZeroDenominator, "the coefficient of h vanishes identically");
        }
        let h_rf = RationalFunction::new(-c, b).expect("nonzero denominator");
        let h = match h_rf.constant_value() {
            Ok(h) => h,
            Err(_) => return Node::fail(NonConstantH, format!("h = {h_rf}")),
        };
        let mh2 = Poly::linear(h.clone(), int(2));
        let mut f = vec![Poly::one()];
        for k in 1..=n {
            f.push((&mh2 * &t[k - 1]).scale(&(Rational::one() / int(2 * k as i64))));
        }
        Node::settle(sign_status(&h), sub_ok, EulerVal { h, f })
    }
}

// ------------------------------------------------------------- symmetry

#[derive(Clone, Debug)]
struct SymVal {
    h: Rational,
    n: Poly,
}

struct Symmetry<'a> {
    sub: Subsets<'a>,
    memo: HashMap<VertexSet, Node<SymVal>>,
}

impl Symmetry<'_> {
    fn node(&mut self, s: VertexSet) -> Node<SymVal> {
        if let Some(n) = self.memo.get(&s) {
            return n.clone();
        }
        let out = match s.len() {
            1 | 2 => {
                let h = self.sub.base_h(s);
                let n = base_f(&h, s.len()).pop().expect("top face number");
                Node::ok(SymVal { h, n })
            }
            _ => self.solve(s),
        };
        self.memo.insert(s, out.clone());
        out
    }

    fn n_of(&mut self, s: VertexSet) -> Option<(Poly, bool)> {
        let mut acc = Poly::one();
        let mut ok = true;
        for c in self.sub.components(s) {
            let n = self.node(c);
            ok &= n.status.is_ok();
            acc = &acc * &n.value?.n;
        }
        Some((acc, ok))
    }

    fn solve(&mut self, s: VertexSet) -> Node<SymVal> {
        let n = s.len();
        let mut sum = Poly::zero();
        let mut sub_ok = true;
        for v in s.iter() {
            let Some((p, ok)) = self.n_of(s.without(v)) else {
                return missing();
            };
            sub_ok &= ok;
            sum = &sum + &p;
        }
        let one = Rational::one();
        let Ok(q) = sum.divide_exact(&Poly::linear(one.clone(), one.clone())) else {
            return Node::fail(NonPolynomialQ, format!("m + 1 does not divide {sum}"));
        };
        if q.degree() != Some(n - 2) {
            return Node::fail(ZeroDenominator, format!("Q = {q} has degree below {}", n - 2));
        }
        let r = q.coeff(n - 3) / q.coeff(n - 2);
        let den = &r * int(2) - int(n as i64 - 2);
        if den.is_zero() {
            return Node::fail(ZeroDenominator, "root average of Q forces 1/h = 0");
        }
        let h = int(2 * (n as i64 - 2)) / den;
        let n_poly = (&(&Poly::linear(h.clone(), int(2)) * &Poly::linear(one.clone(), one.clone()))
            * &q)
            .scale(&(one / int(2 * n as i64)));
        let c = -(&h + int(2)) / &h;
        let reflected = q.compose_linear(&int(-1), &c);
        let expected = if (n - 2) % 2 == 0 { q.clone() } else { -&q };
        let own = if reflected != expected {
            AsymmetricQ
        } else {
            sign_status(&h)
        };
        Node::settle(own, sub_ok, SymVal { h, n: n_poly })
    }
}

// ------------------------------------------------- reciprocity at m = 1

#[derive(Clone, Debug)]
struct RsVal {
    h: Rational,
    n1: Rational,
    np1: Rational,
}

struct RecipSimple<'a> {
    sub: Subsets<'a>,
    memo: HashMap<VertexSet, Node<RsVal>>,
}

impl RecipSimple<'_> {
    fn node(&mut self, s: VertexSet) -> Node<RsVal> {
        if let Some(n) = self.memo.get(&s) {
            return n.clone();
        }
        let out = match s.len() {
            1 | 2 => {
                let h = self.sub.base_h(s);
                let (n1, np1) = if s.len() == 1 {
                    (int(2), int(1))
                } else {
                    (&h + int(2), &h - int(1))
                };
                Node::ok(RsVal { h, n1, np1 })
            }
            _ => self.solve(s),
        };
        self.memo.insert(s, out.clone());
        out
    }

    fn pair_of(&mut self, s: VertexSet) -> Option<(Rational, Rational, bool)> {
        let (mut a, mut b, mut ok) = (Rational::one(), Rational::one(), true);
        for c in self.sub.components(s) {
            let n = self.node(c);
            ok &= n.status.is_ok();
            let v = n.value?;
            a *= v.n1;
            b *= v.np1;
        }
        Some((a, b, ok))
    }

    fn solve(&mut self, s: VertexSet) -> Node<RsVal> {
        let n = s.len();
        let nn = int(n as i64);
        let (mut sn, mut sp, mut t) = (Rational::zero(), Rational::zero(), Rational::zero());
        let mut sub_ok = true;
        for v in s.iter() {
            let Some((a, b, ok)) = self.pair_of(s.without(v)) else {
                return missing();
            };
            sub_ok &= ok;
            sn += a;
            sp += b;
        }
        for hs in s.subsets().filter(|&h| h != s) {
            let Some((_, b, ok)) = self.pair_of(hs) else {
                return missing();
            };
            sub_ok &= ok;
            t += b;
        }
        // N = (h+2)/(2n) S, N+ = (h-1)/n S+, N = N+ + T.
        let den = &sn - &sp * int(2);
        if den.is_zero() {
            return Node::fail(ZeroDenominator, "the three equations are singular");
        }
        let h = int(2) * (&nn * &t - &sn - &sp) / den;
        let n1 = (&h + int(2)) * &sn / (int(2) * &nn);
        let np1 = (&h - int(1)) * &sp / &nn;
        Node::settle(sign_status(&h), sub_ok, RsVal { h, n1, np1 })
    }
}

// ---------------------------------------------- reciprocity, general m

#[derive(Clone, Debug)]
struct RgVal {
    h: Rational,
    np: Poly,
}

struct RecipGeneral<'a> {
    sub: Subsets<'a>,
    memo: HashMap<VertexSet, Node<RgVal>>,
}

impl RecipGeneral<'_> {
    fn node(&mut self, s: VertexSet) -> Node<RgVal> {
        if let Some(n) = self.memo.get(&s) {
            return n.clone();
        }
        let out = match s.len() {
            1 => Node::ok(RgVal {
                h: int(2),
                np: Poly::from_ints(&[0, 1]),
            }),
            2 => {
                let a = self.sub.base_h(s);
                let np = Poly::new(vec![Rational::zero(), half(&a - int(2)), half(a.clone())]);
                Node::ok(RgVal { h: a, np })
            }
            _ => self.solve(s),
        };
        self.memo.insert(s, out.clone());
        out
    }

    fn np_of(&mut self, s: VertexSet) -> Option<(Poly, bool)> {
        let mut acc = Poly::one();
        let mut ok = true;
        for c in self.sub.components(s) {
            let n = self.node(c);
            ok &= n.status.is_ok();
            acc = &acc * &n.value?.np;
        }
        Some((acc, ok))
    }

    fn solve(&mut self, s: VertexSet) -> Node<RgVal> {
        let n = s.len();
        let mut a = Poly::zero();
        let (mut b1, mut b2) = (Poly::zero(), Poly::zero());
        let mut sub_ok = true;
        for hs in s.subsets() {
            let k = hs.len();
            if k + 1 > n {
                continue;
            }
            let Some((p, ok)) = self.np_of(hs) else {
                return missing();
            };
            sub_ok &= ok;
            if k + 1 == n {
                a = &a + &p;
            } else {
                b1 = &b1 + &p.scale(&int(k as i64));
                b2 = &b2 + &p.scale(&int((n - k) as i64));
            }
        }
        let num = (&a.scale(&int(n as i64 - 2)) + &b1).scale(&int(2));
        let den = &(&Poly::x() * &b2) - &a;
        if den.is_zero() {
            return Node::fail(ZeroDenominator, "the denominator of h vanishes identically");
        }
        let h_rf = RationalFunction::new(num, den).expect("nonzero denominator");
        let h = match h_rf.constant_value() {
            Ok(h) => h,
            Err(_) => return Node::fail(NonConstantH, format!("h = {h_rf}")),
        };
        let factor = Poly::linear(h.clone(), &h - int(2)).scale(&(Rational::one() / int(2 * n as i64)));
        let np = &factor * &a;
        Node::settle(sign_status(&h), sub_ok, RgVal { h, np })
    }
}

// ------------------------------------------------------------------ M(G)

#[derive(Clone, Debug)]
struct MgVal {
    h: Rational,
    m: Rational,
}

struct Mg<'a> {
    sub: Subsets<'a>,
    memo: HashMap<VertexSet, Node<MgVal>>,
}

impl Mg<'_> {
    fn node(&mut self, s: VertexSet) -> Node<MgVal> {
        if let Some(n) = self.memo.get(&s) {
            return n.clone();
        }
        let out = match s.len() {
            1 | 2 => {
                let h = self.sub.base_h(s);
                let m = if s.len() == 1 { int(1) } else { &h - int(2) };
                Node::ok(MgVal { h, m })
            }
            _ => self.solve(s),
        };
        self.memo.insert(s, out.clone());
        out
    }

    /// `M` of any subset: zero unless connected and non-empty.
    fn m_of(&mut self, s: VertexSet) -> Option<(Rational, bool)> {
        if s.is_empty() || self.sub.components(s).len() > 1 {
            return Some((Rational::zero(), true));
        }
        let n = self.node(s);
        Some((n.value?.m, n.status.is_ok()))
    }

    fn solve(&mut self, s: VertexSet) -> Node<MgVal> {
        let n = s.len();
        let (mut s1, mut s2) = (Rational::zero(), Rational::zero());
        let mut sub_ok = true;
        for hs in s.subsets() {
            let k = hs.len();
            if k < 2 || k == n {
                continue;
            }
            let Some((m, ok)) = self.m_of(hs) else {
                return missing();
            };
            sub_ok &= ok;
            if k + 1 == n {
                s1 += &m;
            }
            s2 += m;
        }
        let den = int((n * (n - 1)) as i64) - &s1;
        if den.is_zero() {
            return Node::fail(ZeroDenominator, "sum of M over corank-one subdiagrams is n(n-1)");
        }
        let m = &s1 * &s2 / den;
        let nn = int(n as i64);
        let h = int(2) * (&m + &s2 + &nn) / nn;
        Node::settle(sign_status(&h), sub_ok, MgVal { h, m })
    }
}

// ---------------------------------------------------------------- entry

/// `N(G, m)` by the face-number recursion using the given `h` per
/// connected subset (single vertices need not be listed).
fn n_from_hs(g: &CoxeterDiagram, hs: &HashMap<VertexSet, Rational>) -> Option<Poly> {
    f_polys_with(g, |sub| match hs.get(&sub.vertex_set()) {
        Some(h) => Some(h.clone()),
        None => (sub.rank() == 1).then(|| int(2)),
    })
    .and_then(|mut f| f.pop())
}

fn collect_h<T>(memo: &HashMap<VertexSet, Node<T>>, h: impl Fn(&T) -> Rational) -> HashMap<VertexSet, Rational> {
    memo.iter()
        .filter_map(|(k, n)| n.value.as_ref().map(|v| (*k, h(v))))
        .collect()
}

fn from_node<T>(node: &Node<T>) -> MethodResult {
    MethodResult::failed(node.status, node.detail.clone())
}

pub fn run_method(g: &CoxeterDiagram, method: Method, max_rank: usize) -> MethodResult {
    let n = g.rank();
    if n == 0 || !g.is_connected() {
        return MethodResult::failed(NotApplicable, "empty or disconnected diagram".to_string());
    }
    if n > max_rank {
        return MethodResult::failed(BudgetExceeded, format!("rank {n} above the cap of {max_rank}"));
    }
    let s = g.vertex_set();
    let sub = Subsets::new(g);
    let out = match method {
        Method::Euler => {
            let mut e = Euler { sub, memo: HashMap::new() };
            let node = e.node(s);
            let mut r = from_node(&node);
            if let Some(v) = node.value {
                r.h = Some(v.h);
                r.n_poly = v.f.last().cloned();
            }
            r
        }
        Method::Symmetry => {
            let mut e = Symmetry { sub, memo: HashMap::new() };
            let node = e.node(s);
            let mut r = from_node(&node);
            if let Some(v) = node.value {
                r.h = Some(v.h);
                r.n_poly = Some(v.n);
            }
            r
        }
        Method::ReciprocitySimple => {
            let mut e = RecipSimple { sub, memo: HashMap::new() };
            let node = e.node(s);
            let mut r = from_node(&node);
            if let Some(v) = node.value {
                r.n_poly = n_from_hs(g, &collect_h(&e.memo, |v| v.h.clone()));
                r.h = Some(v.h);
                r.at_one = Some((v.n1, v.np1));
            }
            r
        }
        Method::ReciprocityGeneral => {
            let mut e = RecipGeneral { sub, memo: HashMap::new() };
            let node = e.node(s);
            let mut r = from_node(&node);
            if let Some(v) = node.value {
                let mut total = Poly::zero();
                for hs in s.subsets().filter(|&h| h != s) {
                    let (p, _) = e.np_of(hs).expect("computed during the recursion");
                    total = &total + &p;
                }
                r.n_poly = Some(&total + &v.np);
                r.h = Some(v.h);
                r.n_plus_poly = Some(v.np);
            }
            r
        }
        Method::Mg => {
            let mut e = Mg { sub, memo: HashMap::new() };
            let node = e.node(s);
            let mut r = from_node(&node);
            if let Some(v) = node.value {
                r.n_poly = n_from_hs(g, &collect_h(&e.memo, |v| v.h.clone()));
                r.h = Some(v.h);
                r.m_value = Some(v.m);
            }
            r
        }
    };
    out.complete(n)
}
