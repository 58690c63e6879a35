//! Boson operator words, normal ordering, coherent-state expectations, and
//! the moments/cumulants machinery.
//!
//! `normal_order` reduces a word by the literal rewrite a a† → a†a + 1;
//! `normal_mul` multiplies already-ordered forms through the closed binomial
//! formula. The two agree, and the test suite leans on having both.

use std::collections::BTreeMap;
use std::fmt;

use num::BigInt;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize};

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Cap on the moment order of [`word_moments`].
pub const WORD_MOMENT_BOUND: usize = 10;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Letter {
    /// a
    Annihilation,
    /// a†
    Creation,
}

/// A product of boson operators, leftmost letter applied last.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Default)]
pub struct BosonWord {
    letters: Vec<Letter>,
}

impl BosonWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        BosonWord { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parse the text syntax: letters 'a' (annihilation) and 'A' (creation),
    /// tokens separated by whitespace, with "a+" accepted for a creation.
    /// "A a A a", "AaAa" and "a+ a a+ a" all denote a†a a†a.
    pub fn parse(input: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let bytes = input.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            match bytes[pos] {
                b' ' | b'\t' | b'\n' | b'\r' => pos += 1,
                b'a' => {
                    if pos + 1 < bytes.len() && bytes[pos + 1] == b'+' {
                        letters.push(Letter::Creation);
                        pos += 2;
                    } else {
                        letters.push(Letter::Annihilation);
                        pos += 1;
                    }
                }
                b'A' => {
                    letters.push(Letter::Creation);
                    pos += 1;
                }
                c => {
                    return Err(Error::WordParse {
                        position: pos,
                        message: format!(
                            "unexpected character {:?}; expected 'a', 'A' or 'a+'",
                            c as char
                        ),
                    });
                }
            }
        }
        Ok(BosonWord { letters })
    }
}

impl fmt::Display for BosonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            f.write_str(match l {
                Letter::Annihilation => "a",
                Letter::Creation => "A",
            })?;
        }
        Ok(())
    }
}

/// A normally ordered operator: Σ c_{ij} (a†)^i a^j with integer
/// coefficients, keyed by (creation power, annihilation power).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NormalForm {
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl NormalForm {
    pub fn zero() -> Self {
        NormalForm::default()
    }

    /// The identity operator.
    pub fn identity() -> Self {
        let mut nf = NormalForm::default();
        nf.add_term(0, 0, BigInt::from(1));
        nf
    }

    /// Single monomial (a†)^i a^j.
    pub fn monomial(i: usize, j: usize, coeff: BigInt) -> Self {
        let mut nf = NormalForm::default();
        nf.add_term(i, j, coeff);
        nf
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), BigInt> {
        &self.terms
    }

    fn add_term(&mut self, i: usize, j: usize, coeff: BigInt) {
        use std::collections::btree_map::Entry;
        if coeff == BigInt::from(0) {
            return;
        }
        match self.terms.entry((i, j)) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == BigInt::from(0) {
                    o.remove();
                }
            }
        }
    }

    /// Formal sum of operators.
    pub fn add(&self, other: &NormalForm) -> NormalForm {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    /// Operator product, renormal-ordered:
    /// (a†^i a^j)(a†^k a^l) = Σ_m C(j,m) k!/(k−m)! a†^{i+k−m} a^{j+l−m}.
    pub fn normal_mul(&self, other: &NormalForm) -> NormalForm {
        let mut out = NormalForm::default();
        for (&(i, j), c1) in &self.terms {
            for (&(k, l), c2) in &other.terms {
                let mut falling = BigInt::from(1);
                for m in 0..=j.min(k) {
                    let coeff = c1 * c2 * binomial(j, m) * &falling;
                    out.add_term(i + k - m, j + l - m, coeff);
                    falling *= k - m;
                }
            }
        }
        out
    }

    /// n-fold normal_mul power; the identity at n = 0.
    pub fn pow(&self, n: usize) -> NormalForm {
        let mut out = NormalForm::identity();
        for _ in 0..n {
            out = out.normal_mul(self);
        }
        out
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Expand back into words: term (i, j) becomes the word a†^i a^j.
    pub fn to_word_terms(&self) -> Vec<(BosonWord, BigInt)> {
        self.terms
            .iter()
            .map(|(&(i, j), c)| {
                let mut letters = vec![Letter::Creation; i];
                letters.extend(std::iter::repeat_n(Letter::Annihilation, j));
                (BosonWord::new(letters), c.clone())
            })
            .collect()
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (&(i, j), c)) in self.terms.iter().enumerate() {
            let neg = c < &BigInt::from(0);
            let abs = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut parts = Vec::new();
            if abs != BigInt::from(1) || (i == 0 && j == 0) {
                parts.push(abs.to_string());
            }
            match i {
                0 => {}
                1 => parts.push("a+".into()),
                _ => parts.push(format!("a+^{i}")),
            }
            match j {
                0 => {}
                1 => parts.push("a".into()),
                _ => parts.push(format!("a^{j}")),
            }
            f.write_str(&parts.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct NormalTerm {
    adag: usize,
    a: usize,
    coeff: String,
}

impl Serialize for NormalForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        struct Terms<'a>(&'a NormalForm);
        impl Serialize for Terms<'_> {
            fn serialize<S: serde::Serializer>(
                &self,
                s: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.terms.len()))?;
                for (&(i, j), c) in &self.0.terms {
                    seq.serialize_element(&NormalTerm {
                        adag: i,
                        a: j,
                        coeff: c.to_string(),
                    })?;
                }
                seq.end()
            }
        }
        let mut st = s.serialize_struct("NormalForm", 1)?;
        st.serialize_field("terms", &Terms(self))?;
        st.end()
    }
}

/// A polynomial in the commuting indeterminates z̄ and z, keyed by
/// (z̄ power, z power). Number-conserving operators give equal powers, making
/// it a polynomial in y = z̄z.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ZPolynomial {
    terms: BTreeMap<(usize, usize), Rational>,
}

impl ZPolynomial {
    pub fn zero() -> Self {
        ZPolynomial::default()
    }

    pub fn one() -> Self {
        ZPolynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = ZPolynomial::default();
        p.add_term(0, 0, c);
        p
    }

    /// The monomial z̄^p z^q.
    pub fn monomial(p: usize, q: usize, coeff: Rational) -> Self {
        let mut poly = ZPolynomial::default();
        poly.add_term(p, q, coeff);
        poly
    }

    /// Polynomial in y = z̄z from coefficients of y^k, k = 0..deg.
    pub fn from_y_coeffs(coeffs: &[Rational]) -> Self {
        let mut poly = ZPolynomial::default();
        for (k, c) in coeffs.iter().enumerate() {
            poly.add_term(k, k, c.clone());
        }
        poly
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), Rational> {
        &self.terms
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    fn add_term(&mut self, p: usize, q: usize, coeff: Rational) {
        use std::collections::btree_map::Entry;
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((p, q)) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &ZPolynomial) -> ZPolynomial {
        let mut out = self.clone();
        for (&(p, q), c) in &other.terms {
            out.add_term(p, q, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ZPolynomial) -> ZPolynomial {
        let mut out = self.clone();
        for (&(p, q), c) in &other.terms {
            out.add_term(p, q, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &ZPolynomial) -> ZPolynomial {
        let mut out = ZPolynomial::default();
        for (&(p1, q1), c1) in &self.terms {
            for (&(p2, q2), c2) in &other.terms {
                out.add_term(p1 + p2, q1 + q2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> ZPolynomial {
        let mut out = ZPolynomial::default();
        for (&(p, q), v) in &self.terms {
            out.add_term(p, q, c * v);
        }
        out
    }
}

impl fmt::Display for ZPolynomial {
    /// Number-conserving polynomials print in y = z̄z ("y + 3y^2 + y^3");
    /// anything else prints in "zb"/"z" monomials.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let diagonal = self.terms.keys().all(|&(p, q)| p == q);
        for (idx, (&(p, q), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut parts = Vec::new();
            if !abs.is_one() || (p == 0 && q == 0) {
                parts.push(abs.to_string());
            }
            if diagonal {
                match p {
                    0 => {}
                    1 => parts.push("y".into()),
                    _ => parts.push(format!("y^{p}")),
                }
            } else {
                match p {
                    0 => {}
                    1 => parts.push("zb".into()),
                    _ => parts.push(format!("zb^{p}")),
                }
                match q {
                    0 => {}
                    1 => parts.push("z".into()),
                    _ => parts.push(format!("z^{q}")),
                }
            }
            f.write_str(&parts.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ZTerm {
    zbar: usize,
    z: usize,
    coeff: Rational,
}

impl Serialize for ZPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        struct Terms<'a>(&'a ZPolynomial);
        impl Serialize for Terms<'_> {
            fn serialize<S: serde::Serializer>(
                &self,
                s: S,
            ) -> std::result::Result<S::Ok, S::Error> {
                let mut seq = s.serialize_seq(Some(self.0.terms.len()))?;
                for (&(p, q), c) in &self.0.terms {
                    seq.serialize_element(&ZTerm {
                        zbar: p,
                        z: q,
                        coeff: c.clone(),
                    })?;
                }
                seq.end()
            }
        }
        let mut st = s.serialize_struct("ZPolynomial", 1)?;
        st.serialize_field("terms", &Terms(self))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for ZPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            terms: Vec<ZTerm>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let mut poly = ZPolynomial::default();
        for t in raw.terms {
            poly.add_term(t.zbar, t.z, t.coeff);
        }
        Ok(poly)
    }
}

/// Normal-order a word by exhaustive rewriting of a a† → a†a + 1.
pub fn normal_order(w: &BosonWord) -> NormalForm {
    let mut pending: Vec<(Vec<Letter>, BigInt)> = vec![(w.letters().to_vec(), BigInt::from(1))];
    let mut out = NormalForm::default();
    while let Some((word, coeff)) = pending.pop() {
        let swap_at = word
            .windows(2)
            .position(|w| w[0] == Letter::Annihilation && w[1] == Letter::Creation);
        match swap_at {
            Some(i) => {
                let mut swapped = word.clone();
                swapped.swap(i, i + 1);
                let mut contracted = word;
                contracted.drain(i..i + 2);
                pending.push((swapped, coeff.clone()));
                pending.push((contracted, coeff));
            }
            None => {
                let creations = word
                    .iter()
                    .filter(|&&l| l == Letter::Creation)
                    .count();
                out.add_term(creations, word.len() - creations, coeff);
            }
        }
    }
    out
}

/// Reorder each word with creations left of annihilations without applying
/// the commutator, keeping coefficients.
pub fn forget_normal_order(terms: &[(BosonWord, BigInt)]) -> NormalForm {
    let mut out = NormalForm::default();
    for (word, coeff) in terms {
        let creations = word
            .letters()
            .iter()
            .filter(|&&l| l == Letter::Creation)
            .count();
        out.add_term(creations, word.letters().len() - creations, coeff.clone());
    }
    out
}

pub fn normal_mul(f: &NormalForm, g: &NormalForm) -> NormalForm {
    f.normal_mul(g)
}

/// Substitute a† → z̄, a → z termwise: ⟨z| a†^i a^j |z⟩ = z̄^i z^j.
pub fn coherent_expectation(f: &NormalForm) -> ZPolynomial {
    let mut poly = ZPolynomial::default();
    for (&(i, j), c) in f.terms() {
        poly.add_term(i, j, Rational::from(c));
    }
    poly
}

/// Moments W_n = ⟨z| w^n |z⟩ for n = 0..N, with W_0 = 1.
pub fn word_moments(w: &BosonWord, n_max: usize) -> Result<Vec<ZPolynomial>> {
    word_moments_with_bound(w, n_max, WORD_MOMENT_BOUND)
}

pub fn word_moments_with_bound(
    w: &BosonWord,
    n_max: usize,
    bound: usize,
) -> Result<Vec<ZPolynomial>> {
    if n_max > bound {
        return Err(Error::BoundExceeded {
            what: "word moments",
            n: n_max,
            bound,
        });
    }
    let nf = normal_order(w);
    let mut out = Vec::with_capacity(n_max + 1);
    let mut power = NormalForm::identity();
    out.push(coherent_expectation(&power));
    for _ in 0..n_max {
        power = power.normal_mul(&nf);
        out.push(coherent_expectation(&power));
    }
    Ok(out)
}

/// Invert [`cumulants_to_moments`]: given W_0..W_N with W_0 = 1, return
/// V_1..V_N with exp(Σ V_n x^n/n!) = Σ W_n x^n/n!.
pub fn moments_to_cumulants(w: &[ZPolynomial]) -> Result<Vec<ZPolynomial>> {
    let first = w.first().ok_or(Error::MomentsNotNormalized)?;
    if !first.is_one() {
        return Err(Error::MomentsNotNormalized);
    }
    let n_max = w.len() - 1;
    let mut v: Vec<ZPolynomial> = Vec::with_capacity(n_max);
    for n in 0..n_max {
        // W_{n+1} = Σ_{k=0}^{n} C(n,k) V_{k+1} W_{n-k}
        let mut rest = ZPolynomial::zero();
        for k in 0..n {
            let c = Rational::from(binomial(n, k));
            rest = rest.add(&v[k].mul(&w[n - k]).scale(&c));
        }
        v.push(w[n + 1].sub(&rest));
    }
    Ok(v)
}

/// W_{n+1} = Σ_{k=0}^{n} C(n,k) V_{k+1} W_{n−k}, seeded with W_0 = 1.
pub fn cumulants_to_moments(v: &[ZPolynomial]) -> Vec<ZPolynomial> {
    let mut w = vec![ZPolynomial::one()];
    for n in 0..v.len() {
        let mut next = ZPolynomial::zero();
        for k in 0..=n {
            let c = Rational::from(binomial(n, k));
            next = next.add(&v[k].mul(&w[n - k]).scale(&c));
        }
        w.push(next);
    }
    w
}

/// Free-boson partition function Z = 1/(1 − e^{−βε}).
pub fn free_boson_partition_function(beta_eps: f64) -> Result<f64> {
    // rejects NaN along with everything ≤ 0
    if beta_eps.is_nan() || beta_eps <= 0.0 {
        return Err(Error::NonpositiveBetaEps(beta_eps));
    }
    Ok(1.0 / (1.0 - (-beta_eps).exp()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::bell_polynomial;

    fn word(s: &str) -> BosonWord {
        BosonWord::parse(s).unwrap()
    }

    fn nf(terms: &[(usize, usize, i64)]) -> NormalForm {
        let mut out = NormalForm::default();
        for &(i, j, c) in terms {
            out.add_term(i, j, BigInt::from(c));
        }
        out
    }

    fn bell_zpoly(n: usize) -> ZPolynomial {
        ZPolynomial::from_y_coeffs(&bell_polynomial(n))
    }

    #[test]
    fn parse_word_forms() {
        assert_eq!(word("A a A a"), word("AaAa"));
        assert_eq!(word("a+ a a+ a"), word("AaAa"));
        assert_eq!(word(""), BosonWord::default());
        assert_eq!(word("AaAa").to_string(), "AaAa");

        let err = BosonWord::parse("aXa").unwrap_err();
        assert_eq!(
            err,
            Error::WordParse {
                position: 1,
                message: "unexpected character 'X'; expected 'a', 'A' or 'a+'".into()
            }
        );
        assert!(BosonWord::parse("x").is_err());
    }

    #[test]
    fn normal_order_single_commutator() {
        // a a† = a†a + 1
        assert_eq!(normal_order(&word("aA")), nf(&[(1, 1, 1), (0, 0, 1)]));
    }

    #[test]
    fn normal_order_number_operator_squared() {
        // (a†a)² = a†²a² + a†a
        assert_eq!(normal_order(&word("AaAa")), nf(&[(2, 2, 1), (1, 1, 1)]));
    }

    #[test]
    fn normal_order_longer_word() {
        // a†²a² · a†a = a†³a³ + 2 a†²a²
        let got = normal_order(&word("AAaaAa"));
        assert_eq!(got, nf(&[(3, 3, 1), (2, 2, 2)]));
        let split = normal_mul(&normal_order(&word("AAaa")), &normal_order(&word("Aa")));
        assert_eq!(got, split);
    }

    #[test]
    fn normal_order_empty_word() {
        assert_eq!(normal_order(&BosonWord::default()), NormalForm::identity());
    }

    #[test]
    fn forget_drops_commutator() {
        let one = BigInt::from(1);
        assert_eq!(
            forget_normal_order(&[(word("aA"), one.clone())]),
            nf(&[(1, 1, 1)])
        );
        assert_eq!(
            forget_normal_order(&[(word("AaAa"), one.clone())]),
            nf(&[(2, 2, 1)])
        );
        // already-normal words are fixed points
        assert_eq!(
            forget_normal_order(&[(word("AAa"), one)]),
            nf(&[(2, 1, 1)])
        );
    }

    #[test]
    fn forget_idempotent_and_sum_preserving() {
        let full = normal_order(&word("aAaA"));
        let once = forget_normal_order(&full.to_word_terms());
        let twice = forget_normal_order(&once.to_word_terms());
        assert_eq!(once, twice);
        assert_eq!(once.coefficient_sum(), full.coefficient_sum());
    }

    #[test]
    fn normal_mul_cases() {
        let a = nf(&[(0, 1, 1)]);
        let adag = nf(&[(1, 0, 1)]);
        assert_eq!(normal_mul(&a, &adag), nf(&[(1, 1, 1), (0, 0, 1)]));

        let num = nf(&[(1, 1, 1)]);
        assert_eq!(normal_mul(&num, &num), nf(&[(2, 2, 1), (1, 1, 1)]));

        let f = nf(&[(2, 1, 3), (0, 0, -1)]);
        assert_eq!(normal_mul(&f, &NormalForm::identity()), f);
        assert_eq!(normal_mul(&NormalForm::identity(), &f), f);
    }

    #[test]
    fn normal_mul_matches_concatenation() {
        let u = word("aAa");
        let v = word("AaA");
        let mut joined = u.letters().to_vec();
        joined.extend_from_slice(v.letters());
        let direct = normal_order(&BosonWord::new(joined));
        let split = normal_mul(&normal_order(&u), &normal_order(&v));
        assert_eq!(direct, split);
    }

    #[test]
    fn coherent_expectation_cases() {
        assert_eq!(
            coherent_expectation(&nf(&[(1, 1, 1)])),
            ZPolynomial::monomial(1, 1, Rational::one())
        );
        assert_eq!(
            coherent_expectation(&normal_order(&word("AaAa"))),
            bell_zpoly(2)
        );
        assert_eq!(
            coherent_expectation(&nf(&[(0, 0, 5)])),
            ZPolynomial::constant(Rational::from_int(5))
        );
    }

    #[test]
    fn number_operator_moments_are_bell_polynomials() {
        let w = word("Aa");
        let moments = word_moments(&w, 8).unwrap();
        for (n, m) in moments.iter().enumerate() {
            assert_eq!(*m, bell_zpoly(n), "n={n}");
        }
    }

    #[test]
    fn moments_of_trivial_words() {
        let empty = word_moments(&BosonWord::default(), 4).unwrap();
        assert!(empty.iter().all(|m| m.is_one()));

        let creation = word_moments(&word("A"), 2).unwrap();
        assert_eq!(creation[2], ZPolynomial::monomial(2, 0, Rational::one()));
    }

    #[test]
    fn word_moments_bound() {
        assert_eq!(
            word_moments(&word("Aa"), 11),
            Err(Error::BoundExceeded {
                what: "word moments",
                n: 11,
                bound: 10
            })
        );
        assert!(word_moments_with_bound(&word("Aa"), 11, 12).is_ok());
    }

    #[test]
    fn bell_moments_have_constant_cumulants() {
        // W_n = B_n(y) comes from exp(y(e^x - 1)), so V_n = y for all n >= 1
        let w: Vec<ZPolynomial> = (0..=6).map(bell_zpoly).collect();
        let v = moments_to_cumulants(&w).unwrap();
        let y = ZPolynomial::monomial(1, 1, Rational::one());
        assert_eq!(v, vec![y; 6]);
    }

    #[test]
    fn unit_moments_have_single_cumulant() {
        let w = vec![ZPolynomial::one(); 5];
        let v = moments_to_cumulants(&w).unwrap();
        assert_eq!(v[0], ZPolynomial::one());
        assert!(v[1..].iter().all(|p| *p == ZPolynomial::zero()));
        assert_eq!(cumulants_to_moments(&v), w);
    }

    #[test]
    fn moments_cumulants_roundtrip() {
        let w = word("AAaa");
        let moments = word_moments(&w, 6).unwrap();
        let v = moments_to_cumulants(&moments).unwrap();
        assert_eq!(cumulants_to_moments(&v), moments);
    }

    #[test]
    fn moments_must_start_at_one() {
        let bad = vec![ZPolynomial::constant(Rational::from_int(2))];
        assert_eq!(
            moments_to_cumulants(&bad),
            Err(Error::MomentsNotNormalized)
        );
        assert_eq!(moments_to_cumulants(&[]), Err(Error::MomentsNotNormalized));
    }

    #[test]
    fn free_boson_values() {
        assert!((free_boson_partition_function(700.0).unwrap() - 1.0).abs() < 1e-12);

        let partial: f64 = (0..=60).map(|n| (-(n as f64)).exp()).sum();
        assert!((free_boson_partition_function(1.0).unwrap() - partial).abs() < 1e-12);

        let z = free_boson_partition_function(std::f64::consts::LN_2).unwrap();
        assert!((z - 2.0).abs() < 1e-12);

        assert!(free_boson_partition_function(0.0).is_err());
        assert!(free_boson_partition_function(-1.0).is_err());
        assert!(free_boson_partition_function(f64::NAN).is_err());
    }

    #[test]
    fn zpolynomial_rendering() {
        assert_eq!(bell_zpoly(3).to_string(), "y + 3 y^2 + y^3");
        assert_eq!(
            ZPolynomial::monomial(2, 0, Rational::one()).to_string(),
            "zb^2"
        );
        assert_eq!(
            ZPolynomial::constant(Rational::from_int(5)).to_string(),
            "5"
        );
        assert_eq!(ZPolynomial::zero().to_string(), "0");
        let mixed = ZPolynomial::monomial(2, 1, Rational::from_int(-3))
            .add(&ZPolynomial::one());
        assert_eq!(mixed.to_string(), "1 - 3 zb^2 z");
    }

    #[test]
    fn normal_form_rendering() {
        assert_eq!(normal_order(&word("aA")).to_string(), "1 + a+ a");
        assert_eq!(
            normal_order(&word("AAaaAa")).to_string(),
            "2 a+^2 a^2 + a+^3 a^3"
        );
        assert_eq!(NormalForm::zero().to_string(), "0");
    }

    #[test]
    fn zpolynomial_json() {
        let p = bell_zpoly(2);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"{"terms":[{"zbar":1,"z":1,"coeff":"1"},{"zbar":2,"z":2,"coeff":"1"}]}"#
        );
        let back: ZPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn normal_form_json() {
        let json = serde_json::to_string(&normal_order(&word("aA"))).unwrap();
        assert_eq!(
            json,
            r#"{"terms":[{"adag":0,"a":0,"coeff":"1"},{"adag":1,"a":1,"coeff":"1"}]}"#
        );
    }
}
