//! The free commutative Hopf algebra on a graded set of generators,
//! instantiated for BELL (generators b_k) and DIAG (connected diagrams),
//! with machine checks of the Hopf axioms and of candidate DIAG → BELL
//! morphisms.

use std::collections::BTreeMap;
use std::fmt;

use num::BigInt;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, INTEGER_PARTITION_BOUND};
use crate::diagrams::{connected_diagrams_with_bound, DiagDiagram, DIAGRAM_BOUND};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A graded algebra generator with a JSON descriptor.
pub trait Generator: Clone + Ord + fmt::Display {
    fn grade(&self) -> usize;
    fn descriptor(&self) -> serde_json::Value;
    fn from_descriptor(value: &serde_json::Value) -> Result<Self>;
}

/// The BELL generator b_k: one black dot with k lines from degree-1 whites.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BellGenerator {
    k: usize,
}

impl BellGenerator {
    /// k must be positive; grade-0 generators do not exist.
    pub fn new(k: usize) -> Self {
        assert!(k >= 1, "BellGenerator grade must be positive");
        BellGenerator { k }
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

impl fmt::Display for BellGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b{}", self.k)
    }
}

impl Generator for BellGenerator {
    fn grade(&self) -> usize {
        self.k
    }

    fn descriptor(&self) -> serde_json::Value {
        serde_json::json!({ "bell": self.k })
    }

    fn from_descriptor(value: &serde_json::Value) -> Result<Self> {
        let k = value
            .get("bell")
            .and_then(|v| v.as_u64())
            .ok_or_else(|| Error::BadDescriptor(value.to_string()))?;
        if k == 0 {
            return Err(Error::BadDescriptor(value.to_string()));
        }
        Ok(BellGenerator { k: k as usize })
    }
}

impl Generator for DiagDiagram {
    fn grade(&self) -> usize {
        DiagDiagram::grade(self)
    }

    fn descriptor(&self) -> serde_json::Value {
        serde_json::json!({ "diag": { "mult": self.mult() } })
    }

    fn from_descriptor(value: &serde_json::Value) -> Result<Self> {
        let inner = value
            .get("diag")
            .ok_or_else(|| Error::BadDescriptor(value.to_string()))?;
        serde_json::from_value(inner.clone())
            .map_err(|e| Error::BadDescriptor(format!("{inner}: {e}")))
    }
}

/// A commutative monomial in the generators: sorted factors with positive
/// exponents. The empty monomial is the unit e.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial<G: Generator> {
    factors: Vec<(G, usize)>,
}

impl<G: Generator> Monomial<G> {
    pub fn unit() -> Self {
        Monomial { factors: vec![] }
    }

    pub fn generator(g: G) -> Self {
        Monomial {
            factors: vec![(g, 1)],
        }
    }

    /// Merge duplicate generators, drop zero exponents, sort.
    pub fn from_factors(factors: Vec<(G, usize)>) -> Self {
        let mut merged: BTreeMap<G, usize> = BTreeMap::new();
        for (g, a) in factors {
            if a > 0 {
                *merged.entry(g).or_default() += a;
            }
        }
        Monomial {
            factors: merged.into_iter().collect(),
        }
    }

    pub fn factors(&self) -> &[(G, usize)] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn grade(&self) -> usize {
        self.factors.iter().map(|(g, a)| g.grade() * a).sum()
    }

    /// Number of generator factors counted with multiplicity.
    pub fn factor_count(&self) -> usize {
        self.factors.iter().map(|(_, a)| a).sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Monomial::from_factors(factors)
    }
}

impl<G: Generator> PartialOrd for Monomial<G> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<G: Generator> Ord for Monomial<G> {
    /// Graded order: by total grade, then by factor list.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.grade(), &self.factors).cmp(&(other.grade(), &other.factors))
    }
}

impl<G: Generator> fmt::Display for Monomial<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("e");
        }
        for (i, (g, a)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
            if *a > 1 {
                write!(f, "^{a}")?;
            }
        }
        Ok(())
    }
}

/// A finite rational linear combination of monomials.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HopfElement<G: Generator> {
    terms: BTreeMap<Monomial<G>, Rational>,
}

impl<G: Generator> Default for HopfElement<G> {
    fn default() -> Self {
        HopfElement {
            terms: BTreeMap::new(),
        }
    }
}

impl<G: Generator> HopfElement<G> {
    pub fn zero() -> Self {
        HopfElement::default()
    }

    pub fn unit() -> Self {
        HopfElement::from_monomial(Monomial::unit())
    }

    pub fn from_monomial(m: Monomial<G>) -> Self {
        let mut h = HopfElement::default();
        h.add_term(m, Rational::one());
        h
    }

    pub fn from_generator(g: G) -> Self {
        HopfElement::from_monomial(Monomial::generator(g))
    }

    pub fn terms(&self) -> &BTreeMap<Monomial<G>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial<G>, c: Rational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = HopfElement::default();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), c * v);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = HopfElement::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut out = HopfElement::unit();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }
}

impl<G: Generator> fmt::Display for HopfElement<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            if abs.is_one() {
                write!(f, "{m}")?;
            } else if m.is_unit() {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs} {m}")?;
            }
        }
        Ok(())
    }
}

impl<G: Generator> Serialize for HopfElement<G> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Terms<'a, G: Generator>(&'a HopfElement<G>);
        impl<G: Generator> Serialize for Terms<'_, G> {
            fn serialize<S: serde::Serializer>(
                &self,
                s: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                #[derive(Serialize)]
                struct Term {
                    monomial: Vec<serde_json::Value>,
                    coeff: Rational,
                }
                let mut seq = s.serialize_seq(Some(self.0.terms.len()))?;
                for (m, c) in &self.0.terms {
                    let mut descriptors = Vec::with_capacity(m.factor_count());
                    for (g, a) in m.factors() {
                        for _ in 0..*a {
                            descriptors.push(g.descriptor());
                        }
                    }
                    seq.serialize_element(&Term {
                        monomial: descriptors,
                        coeff: c.clone(),
                    })?;
                }
                seq.end()
            }
        }
        let mut st = s.serialize_struct("HopfElement", 1)?;
        st.serialize_field("terms", &Terms(self))?;
        st.end()
    }
}

impl<'de, G: Generator> Deserialize<'de> for HopfElement<G> {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term {
            monomial: Vec<serde_json::Value>,
            coeff: Rational,
        }
        #[derive(Deserialize)]
        struct Raw {
            terms: Vec<Term>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut out = HopfElement::default();
        for term in raw.terms {
            let mut factors = Vec::with_capacity(term.monomial.len());
            for v in &term.monomial {
                let g = G::from_descriptor(v).map_err(serde::de::Error::custom)?;
                factors.push((g, 1));
            }
            out.add_term(Monomial::from_factors(factors), term.coeff);
        }
        Ok(out)
    }
}

/// An element of the tensor square, keyed by monomial pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElement<G: Generator> {
    terms: BTreeMap<(Monomial<G>, Monomial<G>), Rational>,
}

impl<G: Generator> Default for TensorElement<G> {
    fn default() -> Self {
        TensorElement {
            terms: BTreeMap::new(),
        }
    }
}

impl<G: Generator> TensorElement<G> {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub fn terms(&self) -> &BTreeMap<(Monomial<G>, Monomial<G>), Rational> {
        &self.terms
    }

    pub fn add_term(&mut self, left: Monomial<G>, right: Monomial<G>, c: Rational) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in &other.terms {
            out.add_term(l.clone(), r.clone(), c.clone());
        }
        out
    }

    /// Componentwise product: (a⊗b)(c⊗d) = ac ⊗ bd, bilinearly.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = TensorElement::default();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                out.add_term(l1.mul(l2), r1.mul(r2), c1 * c2);
            }
        }
        out
    }

    pub fn swap(&self) -> Self {
        let mut out = TensorElement::default();
        for ((l, r), c) in &self.terms {
            out.add_term(r.clone(), l.clone(), c.clone());
        }
        out
    }
}

/// a ⊗ b as a TensorElement.
pub fn tensor<G: Generator>(a: &HopfElement<G>, b: &HopfElement<G>) -> TensorElement<G> {
    let mut out = TensorElement::default();
    for (m1, c1) in a.terms() {
        for (m2, c2) in b.terms() {
            out.add_term(m1.clone(), m2.clone(), c1 * c2);
        }
    }
    out
}

pub fn unit<G: Generator>() -> HopfElement<G> {
    HopfElement::unit()
}

pub fn product<G: Generator>(h1: &HopfElement<G>, h2: &HopfElement<G>) -> HopfElement<G> {
    h1.mul(h2)
}

/// Δ, defined on generators by g ↦ g⊗e + e⊗g and extended as an algebra
/// homomorphism: on a monomial Π g^a it is Π (g⊗e + e⊗g)^a with binomial
/// coefficients, then linearly.
pub fn coproduct<G: Generator>(h: &HopfElement<G>) -> TensorElement<G> {
    let mut out = TensorElement::default();
    for (m, c) in h.terms() {
        let mut acc = TensorElement::default();
        acc.add_term(Monomial::unit(), Monomial::unit(), c.clone());
        for (g, a) in m.factors() {
            let mut factor = TensorElement::default();
            for j in 0..=*a {
                let left = Monomial::from_factors(vec![(g.clone(), j)]);
                let right = Monomial::from_factors(vec![(g.clone(), a - j)]);
                factor.add_term(left, right, Rational::from(binomial(*a, j)));
            }
            acc = acc.mul(&factor);
        }
        out = out.add(&acc);
    }
    out
}

/// ε: the coefficient of the unit monomial.
pub fn counit<G: Generator>(h: &HopfElement<G>) -> Rational {
    h.terms()
        .get(&Monomial::unit())
        .cloned()
        .unwrap_or_else(Rational::zero)
}

/// S: a monomial with k generator factors (with multiplicity) maps to
/// (−1)^k times itself; extended linearly.
pub fn antipode<G: Generator>(h: &HopfElement<G>) -> HopfElement<G> {
    let mut out = HopfElement::default();
    for (m, c) in h.terms() {
        let c = if m.factor_count() % 2 == 1 {
            -c.clone()
        } else {
            c.clone()
        };
        out.add_term(m.clone(), c);
    }
    out
}

/// Exact test of Δ(h) == h⊗e + e⊗h.
pub fn is_primitive<G: Generator>(h: &HopfElement<G>) -> bool {
    let expected = tensor(h, &HopfElement::unit()).add(&tensor(&HopfElement::unit(), h));
    coproduct(h) == expected
}

/// Multiply the two tensor legs back together: m∘(Σ c·a⊗b) = Σ c·ab.
fn multiply_legs<G: Generator>(t: &TensorElement<G>) -> HopfElement<G> {
    let mut out = HopfElement::default();
    for ((l, r), c) in t.terms() {
        out.add_term(l.mul(r), c.clone());
    }
    out
}

/// All monomials in the given generators with total grade ≤ max_grade,
/// sorted. Includes the unit.
pub fn spanning_monomials<G: Generator>(generators: &[G], max_grade: usize) -> Vec<Monomial<G>> {
    fn extend<G: Generator>(
        generators: &[G],
        idx: usize,
        budget: usize,
        current: &mut Vec<(G, usize)>,
        out: &mut Vec<Monomial<G>>,
    ) {
        if idx == generators.len() {
            out.push(Monomial::from_factors(current.clone()));
            return;
        }
        let g = &generators[idx];
        let max_exp = budget / g.grade().max(1);
        for a in 0..=max_exp {
            if a > 0 {
                current.push((g.clone(), a));
            }
            extend(generators, idx + 1, budget - a * g.grade(), current, out);
            if a > 0 {
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend(generators, 0, max_grade, &mut current, &mut out);
    out.sort();
    out
}

/// The BELL generators b_1..b_max.
pub fn bell_generators(max_grade: usize) -> Vec<BellGenerator> {
    (1..=max_grade).map(BellGenerator::new).collect()
}

/// The DIAG generators of grade 1..=max: all connected diagrams.
pub fn diag_generators(max_grade: usize) -> Result<Vec<DiagDiagram>> {
    diag_generators_with_bound(max_grade, DIAGRAM_BOUND)
}

pub fn diag_generators_with_bound(max_grade: usize, bound: usize) -> Result<Vec<DiagDiagram>> {
    let mut out = Vec::new();
    for n in 1..=max_grade {
        out.extend(connected_diagrams_with_bound(n, bound)?);
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomCheck {
    pub axiom: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub max_grade: usize,
    pub monomials_checked: usize,
    pub checks: Vec<AxiomCheck>,
    pub all_passed: bool,
}

type Triple<G> = BTreeMap<(Monomial<G>, Monomial<G>, Monomial<G>), Rational>;

fn triple_add<G: Generator>(
    map: &mut Triple<G>,
    key: (Monomial<G>, Monomial<G>, Monomial<G>),
    c: Rational,
) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// Verify the Hopf axioms exactly on every monomial in the generators up to
/// the grade bound: coassociativity, the counit laws, Δ and ε as algebra
/// homomorphisms, the antipode convolution law, and cocommutativity.
/// Failures are reported with a counterexample, never thrown.
pub fn check_hopf_axioms<G: Generator>(generators: &[G], max_grade: usize) -> AxiomReport {
    let monomials = spanning_monomials(generators, max_grade);

    let mut coassoc = AxiomCheck {
        axiom: "coassociativity",
        passed: true,
        counterexample: None,
    };
    let mut counit_laws = AxiomCheck {
        axiom: "counit-laws",
        passed: true,
        counterexample: None,
    };
    let mut coproduct_hom = AxiomCheck {
        axiom: "coproduct-is-algebra-morphism",
        passed: true,
        counterexample: None,
    };
    let mut counit_hom = AxiomCheck {
        axiom: "counit-is-algebra-morphism",
        passed: true,
        counterexample: None,
    };
    let mut antipode_law = AxiomCheck {
        axiom: "antipode-convolution",
        passed: true,
        counterexample: None,
    };
    let mut cocomm = AxiomCheck {
        axiom: "cocommutativity",
        passed: true,
        counterexample: None,
    };

    for m in &monomials {
        let h = HopfElement::from_monomial(m.clone());
        let delta = coproduct(&h);

        // (Δ⊗id)Δ == (id⊗Δ)Δ
        if coassoc.passed {
            let mut left: Triple<G> = BTreeMap::new();
            let mut right: Triple<G> = BTreeMap::new();
            for ((m1, m2), c) in delta.terms() {
                for ((a, b), c1) in coproduct(&HopfElement::from_monomial(m1.clone())).terms() {
                    triple_add(&mut left, (a.clone(), b.clone(), m2.clone()), c * c1);
                }
                for ((a, b), c2) in coproduct(&HopfElement::from_monomial(m2.clone())).terms() {
                    triple_add(&mut right, (m1.clone(), a.clone(), b.clone()), c * c2);
                }
            }
            if left != right {
                coassoc.passed = false;
                coassoc.counterexample = Some(m.to_string());
            }
        }

        // (ε⊗id)Δ == id == (id⊗ε)Δ
        if counit_laws.passed {
            let mut left = HopfElement::zero();
            let mut right = HopfElement::zero();
            for ((m1, m2), c) in delta.terms() {
                let e1 = counit(&HopfElement::from_monomial(m1.clone()));
                let e2 = counit(&HopfElement::from_monomial(m2.clone()));
                left.add_term(m2.clone(), c * &e1);
                right.add_term(m1.clone(), c * &e2);
            }
            if left != h || right != h {
                counit_laws.passed = false;
                counit_laws.counterexample = Some(m.to_string());
            }
        }

        // m(S⊗id)Δ == unit∘ε == m(id⊗S)Δ
        if antipode_law.passed {
            let mut s_left = TensorElement::zero();
            let mut s_right = TensorElement::zero();
            for ((m1, m2), c) in delta.terms() {
                for (sm, sc) in antipode(&HopfElement::from_monomial(m1.clone())).terms() {
                    s_left.add_term(sm.clone(), m2.clone(), c * sc);
                }
                for (sm, sc) in antipode(&HopfElement::from_monomial(m2.clone())).terms() {
                    s_right.add_term(m1.clone(), sm.clone(), c * sc);
                }
            }
            let expected = HopfElement::unit().scale(&counit(&h));
            if multiply_legs(&s_left) != expected || multiply_legs(&s_right) != expected {
                antipode_law.passed = false;
                antipode_law.counterexample = Some(m.to_string());
            }
        }

        // swap∘Δ == Δ
        if cocomm.passed && delta.swap() != delta {
            cocomm.passed = false;
            cocomm.counterexample = Some(m.to_string());
        }
    }

    // homomorphism properties on pairs
    'pairs: for m1 in &monomials {
        let h1 = HopfElement::from_monomial(m1.clone());
        let d1 = coproduct(&h1);
        for m2 in &monomials {
            if m2 < m1 {
                continue;
            }
            let h2 = HopfElement::from_monomial(m2.clone());
            let prod = h1.mul(&h2);
            if coproduct_hom.passed && coproduct(&prod) != d1.mul(&coproduct(&h2)) {
                coproduct_hom.passed = false;
                coproduct_hom.counterexample = Some(format!("{m1}, {m2}"));
            }
            if counit_hom.passed && counit(&prod) != &counit(&h1) * &counit(&h2) {
                counit_hom.passed = false;
                counit_hom.counterexample = Some(format!("{m1}, {m2}"));
            }
            if !coproduct_hom.passed && !counit_hom.passed {
                break 'pairs;
            }
        }
    }

    let checks = vec![
        coassoc,
        counit_laws,
        coproduct_hom,
        counit_hom,
        antipode_law,
        cocomm,
    ];
    let all_passed = checks.iter().all(|c| c.passed);
    AxiomReport {
        max_grade,
        monomials_checked: monomials.len(),
        checks,
        all_passed,
    }
}

/// Which of the two shipped algebras to size.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Algebra {
    Bell,
    Diag,
}

/// Number of basis monomials of exactly grade n. BELL gives the integer
/// partition numbers; DIAG counts multisets of connected diagrams.
pub fn graded_dimension(algebra: Algebra, n: usize) -> Result<usize> {
    let bound = match algebra {
        Algebra::Bell => INTEGER_PARTITION_BOUND,
        Algebra::Diag => DIAGRAM_BOUND,
    };
    graded_dimension_with_bound(algebra, n, bound)
}

pub fn graded_dimension_with_bound(algebra: Algebra, n: usize, bound: usize) -> Result<usize> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "graded dimension",
            n,
            bound,
        });
    }
    let per_grade_counts: Vec<usize> = match algebra {
        Algebra::Bell => vec![1; n],
        Algebra::Diag => (1..=n)
            .map(|g| connected_diagrams_with_bound(g, bound).map(|v| v.len()))
            .collect::<Result<_>>()?,
    };

    // dp over grades; choosing j of the c_g generators at grade g is a
    // multiset: C(c_g + j - 1, j) ways
    let mut dp = vec![BigInt::from(0); n + 1];
    dp[0] = BigInt::from(1);
    for (idx, &c_g) in per_grade_counts.iter().enumerate() {
        let g = idx + 1;
        let mut next = vec![BigInt::from(0); n + 1];
        for m in 0..=n {
            for j in 0..=m / g {
                let ways = if j == 0 {
                    BigInt::from(1)
                } else {
                    binomial(c_g + j - 1, j)
                };
                next[m] += &dp[m - j * g] * ways;
            }
        }
        dp = next;
    }
    Ok(usize::try_from(&dp[n]).expect("desk-scale dimension fits usize"))
}

/// Images of the DIAG generators, keyed by connected diagram.
pub type MorphismTable = BTreeMap<DiagDiagram, HopfElement<BellGenerator>>;

/// φ_bell: D ↦ b_{grade(D)} when every white degree of D is 1, else 0.
pub fn phi_bell_image(d: &DiagDiagram) -> HopfElement<BellGenerator> {
    if d.row_degrees().iter().all(|&deg| deg == 1) {
        HopfElement::from_generator(BellGenerator::new(DiagDiagram::grade(d)))
    } else {
        HopfElement::zero()
    }
}

/// φ_contract: D ↦ Π_b b_{coldeg(b)}, one factor per black spot.
pub fn phi_contract_image(d: &DiagDiagram) -> HopfElement<BellGenerator> {
    let factors = d
        .col_degrees()
        .into_iter()
        .map(|deg| (BellGenerator::new(deg), 1))
        .collect();
    HopfElement::from_monomial(Monomial::from_factors(factors))
}

/// Build a generator table for all connected diagrams of grade ≤ max_grade.
pub fn build_morphism_table(
    max_grade: usize,
    image: impl Fn(&DiagDiagram) -> HopfElement<BellGenerator>,
) -> Result<MorphismTable> {
    let mut table = MorphismTable::new();
    for d in diag_generators(max_grade)? {
        let img = image(&d);
        table.insert(d, img);
    }
    Ok(table)
}

/// Extend the generator table multiplicatively and linearly.
pub fn apply_morphism(
    table: &MorphismTable,
    h: &HopfElement<DiagDiagram>,
) -> Result<HopfElement<BellGenerator>> {
    let mut out = HopfElement::zero();
    for (m, c) in h.terms() {
        let mut image = HopfElement::unit();
        for (d, a) in m.factors() {
            let img = table.get(d).ok_or_else(|| Error::PartialMorphism {
                grade: DiagDiagram::grade(d),
                descriptor: d.to_string(),
            })?;
            image = image.mul(&img.pow(*a));
        }
        out = out.add(&image.scale(c));
    }
    Ok(out)
}

/// Row-reduction basis over the BELL monomial basis, for the surjectivity
/// test.
#[derive(Default)]
struct SpanBasis {
    pivots: Vec<(Monomial<BellGenerator>, HopfElement<BellGenerator>)>,
}

impl SpanBasis {
    fn reduce(&self, mut v: HopfElement<BellGenerator>) -> HopfElement<BellGenerator> {
        for (pivot, row) in &self.pivots {
            if let Some(c) = v.terms().get(pivot).cloned() {
                v = v.sub(&row.scale(&c));
            }
        }
        v
    }

    fn insert(&mut self, v: HopfElement<BellGenerator>) {
        let reduced = self.reduce(v);
        if let Some((pivot, lead)) = reduced
            .terms()
            .last_key_value()
            .map(|(m, c)| (m.clone(), c.clone()))
        {
            let inv = Rational::one() / lead;
            self.pivots.push((pivot, reduced.scale(&inv)));
        }
    }

    fn contains(&self, v: &HopfElement<BellGenerator>) -> bool {
        self.reduce(v.clone()).is_zero()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MorphismReport {
    pub max_grade: usize,
    pub monomials_checked: usize,
    pub checks: Vec<AxiomCheck>,
    pub is_morphism: bool,
    pub surjective: bool,
    /// BELL generator grades not reached by any image.
    pub not_in_image: Vec<usize>,
}

/// Check a candidate DIAG → BELL Hopf morphism on all DIAG monomials of grade
/// ≤ max_grade: compatibility with Δ, ε and S, plus surjectivity onto the
/// BELL generators of grade ≤ max_grade (informational, not a morphism
/// failure).
pub fn check_hopf_morphism(table: &MorphismTable, max_grade: usize) -> Result<MorphismReport> {
    check_hopf_morphism_with_bound(table, max_grade, DIAGRAM_BOUND)
}

pub fn check_hopf_morphism_with_bound(
    table: &MorphismTable,
    max_grade: usize,
    bound: usize,
) -> Result<MorphismReport> {
    let generators = diag_generators_with_bound(max_grade, bound)?;

    // totality up front: every connected generator must have an image
    for d in &generators {
        if !table.contains_key(d) {
            return Err(Error::PartialMorphism {
                grade: DiagDiagram::grade(d),
                descriptor: d.to_string(),
            });
        }
    }

    let monomials = spanning_monomials(&generators, max_grade);

    let mut coproduct_check = AxiomCheck {
        axiom: "coproduct-compatibility",
        passed: true,
        counterexample: None,
    };
    let mut counit_check = AxiomCheck {
        axiom: "counit-compatibility",
        passed: true,
        counterexample: None,
    };
    let mut antipode_check = AxiomCheck {
        axiom: "antipode-compatibility",
        passed: true,
        counterexample: None,
    };

    let mut span = SpanBasis::default();

    for m in &monomials {
        let h = HopfElement::from_monomial(m.clone());
        let image = apply_morphism(table, &h)?;

        // (φ⊗φ)∘Δ == Δ∘φ
        if coproduct_check.passed {
            let mut mapped = TensorElement::zero();
            for ((m1, m2), c) in coproduct(&h).terms() {
                let i1 = apply_morphism(table, &HopfElement::from_monomial(m1.clone()))?;
                let i2 = apply_morphism(table, &HopfElement::from_monomial(m2.clone()))?;
                for ((l, r), tc) in tensor(&i1, &i2).terms() {
                    mapped.add_term(l.clone(), r.clone(), c * tc);
                }
            }
            if mapped != coproduct(&image) {
                coproduct_check.passed = false;
                coproduct_check.counterexample = Some(m.to_string());
            }
        }

        // ε∘φ == ε
        if counit_check.passed && counit(&image) != counit(&h) {
            counit_check.passed = false;
            counit_check.counterexample = Some(m.to_string());
        }

        // S∘φ == φ∘S
        if antipode_check.passed && antipode(&image) != apply_morphism(table, &antipode(&h))? {
            antipode_check.passed = false;
            antipode_check.counterexample = Some(m.to_string());
        }

        if !m.is_unit() {
            span.insert(image);
        }
    }

    let mut not_in_image = Vec::new();
    for k in 1..=max_grade {
        let b_k = HopfElement::from_generator(BellGenerator::new(k));
        if !span.contains(&b_k) {
            not_in_image.push(k);
        }
    }

    let checks = vec![coproduct_check, counit_check, antipode_check];
    let is_morphism = checks.iter().all(|c| c.passed);
    Ok(MorphismReport {
        max_grade,
        monomials_checked: monomials.len(),
        checks,
        is_morphism,
        surjective: not_in_image.is_empty(),
        not_in_image,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_integer_partitions;
    use crate::diagrams::canonicalize;

    fn b(k: usize) -> HopfElement<BellGenerator> {
        HopfElement::from_generator(BellGenerator::new(k))
    }

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn product_basics() {
        let h = b(1).add(&b(2).scale(&rat("3")));
        assert_eq!(product(&unit(), &h), h);
        assert_eq!(product(&b(1), &b(2)), product(&b(2), &b(1)));

        // (b1 + b2)·b1 = b1² + b1 b2
        let lhs = product(&b(1).add(&b(2)), &b(1));
        let b1sq = HopfElement::from_monomial(Monomial::from_factors(vec![(
            BellGenerator::new(1),
            2,
        )]));
        let b1b2 = HopfElement::from_monomial(Monomial::from_factors(vec![
            (BellGenerator::new(1), 1),
            (BellGenerator::new(2), 1),
        ]));
        assert_eq!(lhs, b1sq.add(&b1b2));
    }

    #[test]
    fn coproduct_cases() {
        let e = Monomial::<BellGenerator>::unit();
        let delta_e = coproduct(&unit::<BellGenerator>());
        assert_eq!(delta_e.terms().len(), 1);
        assert_eq!(
            delta_e.terms().get(&(e.clone(), e.clone())),
            Some(&Rational::one())
        );

        let delta_b2 = coproduct(&b(2));
        let m_b2 = Monomial::generator(BellGenerator::new(2));
        assert_eq!(delta_b2.terms().len(), 2);
        assert_eq!(
            delta_b2.terms().get(&(m_b2.clone(), e.clone())),
            Some(&Rational::one())
        );
        assert_eq!(
            delta_b2.terms().get(&(e.clone(), m_b2.clone())),
            Some(&Rational::one())
        );

        // Δ(b1²) = b1²⊗e + 2 b1⊗b1 + e⊗b1²
        let b1sq = b(1).mul(&b(1));
        let delta = coproduct(&b1sq);
        let m_b1 = Monomial::generator(BellGenerator::new(1));
        let m_b1sq = m_b1.mul(&m_b1);
        assert_eq!(delta.terms().len(), 3);
        assert_eq!(
            delta.terms().get(&(m_b1.clone(), m_b1.clone())),
            Some(&rat("2"))
        );
        assert_eq!(
            delta.terms().get(&(m_b1sq.clone(), e.clone())),
            Some(&Rational::one())
        );
    }

    #[test]
    fn counit_cases() {
        assert_eq!(counit(&unit::<BellGenerator>()), Rational::one());
        assert_eq!(counit(&b(3)), Rational::zero());
        let h = unit::<BellGenerator>().scale(&rat("2")).add(&b(1).scale(&rat("3")));
        assert_eq!(counit(&h), rat("2"));
    }

    #[test]
    fn antipode_cases() {
        assert_eq!(antipode(&b(2)), b(2).scale(&rat("-1")));
        let b1b2 = b(1).mul(&b(2));
        assert_eq!(antipode(&b1b2), b1b2);
        assert_eq!(antipode(&unit::<BellGenerator>()), unit());
        // involution
        let h = b(1).mul(&b(1)).add(&b(3).scale(&rat("-5/2"))).add(&unit());
        assert_eq!(antipode(&antipode(&h)), h);
        assert_eq!(counit(&antipode(&h)), counit(&h));
    }

    #[test]
    fn antipode_convolution_on_b2() {
        // m(S⊗id)Δ(b2) = S(b2) + b2 = 0 = ε(b2)·e
        let delta = coproduct(&b(2));
        let mut total = HopfElement::zero();
        for ((m1, m2), c) in delta.terms() {
            let s = antipode(&HopfElement::from_monomial(m1.clone()));
            total = total.add(&s.mul(&HopfElement::from_monomial(m2.clone())).scale(c));
        }
        assert!(total.is_zero());
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&b(1)));
        assert!(is_primitive(&b(4)));
        assert!(!is_primitive(&b(1).mul(&b(1))));
        assert!(is_primitive(&HopfElement::<BellGenerator>::zero()));
        assert!(!is_primitive(&unit::<BellGenerator>()));
    }

    #[test]
    fn spanning_monomial_counts() {
        // grade ≤ 3 over b1..b3: p(0)+p(1)+p(2)+p(3) = 1+1+2+3
        let monomials = spanning_monomials(&bell_generators(3), 3);
        assert_eq!(monomials.len(), 7);
        assert!(monomials.iter().any(|m| m.is_unit()));
        // sorted by grade first
        let grades: Vec<usize> = monomials.iter().map(|m| m.grade()).collect();
        let mut sorted = grades.clone();
        sorted.sort_unstable();
        assert_eq!(grades, sorted);
    }

    #[test]
    fn bell_axioms_pass() {
        let report = check_hopf_axioms(&bell_generators(5), 5);
        assert!(report.all_passed, "{report:?}");
        assert_eq!(report.checks.len(), 6);
        assert!(report.monomials_checked > 0);
    }

    #[test]
    fn diag_axioms_pass() {
        let generators = diag_generators(3).unwrap();
        let report = check_hopf_axioms(&generators, 3);
        assert!(report.all_passed, "{report:?}");
    }

    #[test]
    fn axioms_trivial_grade() {
        let report = check_hopf_axioms(&bell_generators(0), 0);
        assert!(report.all_passed);
        assert_eq!(report.monomials_checked, 1);
    }

    #[test]
    fn graded_dimensions() {
        assert_eq!(graded_dimension(Algebra::Bell, 0).unwrap(), 1);
        assert_eq!(graded_dimension(Algebra::Bell, 5).unwrap(), 7);
        for n in 0..=8 {
            assert_eq!(
                graded_dimension(Algebra::Bell, n).unwrap(),
                enumerate_integer_partitions(n).unwrap().len(),
                "n={n}"
            );
        }
        assert_eq!(graded_dimension(Algebra::Diag, 2).unwrap(), 4);
    }

    #[test]
    fn graded_dimension_matches_direct_enumeration() {
        for n in 0..=4 {
            let generators = diag_generators(n).unwrap();
            let count = spanning_monomials(&generators, n)
                .into_iter()
                .filter(|m| m.grade() == n)
                .count();
            assert_eq!(graded_dimension(Algebra::Diag, n).unwrap(), count, "n={n}");
        }
    }

    #[test]
    fn phi_bell_is_surjective_morphism() {
        let table = build_morphism_table(3, phi_bell_image).unwrap();
        let report = check_hopf_morphism(&table, 3).unwrap();
        assert!(report.is_morphism, "{report:?}");
        assert!(report.surjective, "{report:?}");
        assert!(report.not_in_image.is_empty());
    }

    #[test]
    fn phi_contract_fails_coalgebra() {
        let table = build_morphism_table(2, phi_contract_image).unwrap();
        let report = check_hopf_morphism(&table, 2).unwrap();
        assert!(!report.is_morphism);
        let coproduct_check = report
            .checks
            .iter()
            .find(|c| c.axiom == "coproduct-compatibility")
            .unwrap();
        assert!(!coproduct_check.passed);
        assert!(coproduct_check.counterexample.is_some());
    }

    #[test]
    fn phi_zero_is_morphism_not_surjective() {
        let table = build_morphism_table(2, |_| HopfElement::zero()).unwrap();
        let report = check_hopf_morphism(&table, 2).unwrap();
        assert!(report.is_morphism, "{report:?}");
        assert!(!report.surjective);
        assert_eq!(report.not_in_image, vec![1, 2]);
    }

    #[test]
    fn morphism_requires_total_table() {
        let mut table = build_morphism_table(2, phi_bell_image).unwrap();
        let d2 = canonicalize(vec![vec![2]]).unwrap();
        table.remove(&d2);
        let err = check_hopf_morphism(&table, 2).unwrap_err();
        assert!(matches!(err, Error::PartialMorphism { grade: 2, .. }));
    }

    #[test]
    fn hopf_element_json() {
        let h = b(1)
            .mul(&b(1))
            .mul(&b(2))
            .scale(&rat("1/2"))
            .add(&unit());
        let json = serde_json::to_string(&h).unwrap();
        assert_eq!(
            json,
            r#"{"terms":[{"monomial":[],"coeff":"1"},{"monomial":[{"bell":1},{"bell":1},{"bell":2}],"coeff":"1/2"}]}"#
        );
        let back: HopfElement<BellGenerator> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn diag_element_json() {
        let d = canonicalize(vec![vec![1, 1]]).unwrap();
        let h = HopfElement::from_generator(d);
        let json = serde_json::to_string(&h).unwrap();
        assert_eq!(
            json,
            r#"{"terms":[{"monomial":[{"diag":{"mult":[[1,1]]}}],"coeff":"1"}]}"#
        );
        let back: HopfElement<DiagDiagram> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, h);
        // descriptors canonicalize on the way in
        let shuffled: HopfElement<DiagDiagram> = serde_json::from_str(
            r#"{"terms":[{"monomial":[{"diag":{"mult":[[1],[1]]}}],"coeff":"1"}]}"#,
        )
        .unwrap();
        assert_ne!(shuffled, h);
        let bad: std::result::Result<HopfElement<BellGenerator>, _> =
            serde_json::from_str(r#"{"terms":[{"monomial":[{"bell":0}],"coeff":"1"}]}"#);
        assert!(bad.is_err());
    }

    #[test]
    fn element_rendering() {
        let h = b(2)
            .mul(&b(1))
            .scale(&rat("-3"))
            .add(&unit().scale(&rat("1/2")));
        assert_eq!(h.to_string(), "1/2 - 3 b1 b2");
        assert_eq!(HopfElement::<BellGenerator>::zero().to_string(), "0");
    }
}
