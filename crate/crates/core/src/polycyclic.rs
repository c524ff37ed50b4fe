//! The polycyclic monoid `P_λ` and the bicyclic monoid.
//!
//! A non-zero element is stored in normal form `u⁻¹v` for words `u`, `v`
//! of the free monoid. Written out as generators, `u = u₁…u_k` and
//! `v = v₁…v_m` give `u_k⁻¹ … u₁⁻¹ v₁ … v_m`.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::words::{check_lambda, enumerate_words, same_alphabet, Letters, Word};

/// Normal form `u⁻¹v`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair {
    u: Word,
    v: Word,
}

impl Pair {
    pub fn u(&self) -> &Word {
        &self.u
    }

    pub fn v(&self) -> &Word {
        &self.v
    }

    pub fn lambda(&self) -> u32 {
        self.u.lambda()
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PElement {
    Zero,
    Pair(Pair),
}

impl PElement {
    /// `u⁻¹v`.
    pub fn pair(u: Word, v: Word) -> Result<Self> {
        same_alphabet(u.lambda(), v.lambda())?;
        Ok(PElement::Pair(Pair { u, v }))
    }

    pub(crate) fn pair_unchecked(u: Word, v: Word) -> Self {
        debug_assert_eq!(u.lambda(), v.lambda());
        PElement::Pair(Pair { u, v })
    }

    /// The identity `ε⁻¹ε`.
    pub fn one(lambda: u32) -> Result<Self> {
        let e = Word::empty(lambda)?;
        Ok(PElement::pair_unchecked(e.clone(), e))
    }

    /// The generator `p_g = ε⁻¹p_g`.
    pub fn generator(lambda: u32, g: u32) -> Result<Self> {
        Ok(PElement::pair_unchecked(
            Word::empty(lambda)?,
            Word::generator(lambda, g)?,
        ))
    }

    /// The inverse generator `p_g⁻¹ = p_g⁻¹ε`.
    pub fn inverse_generator(lambda: u32, g: u32) -> Result<Self> {
        Ok(PElement::pair_unchecked(
            Word::generator(lambda, g)?,
            Word::empty(lambda)?,
        ))
    }

    /// The idempotent `w⁻¹w`.
    pub fn idempotent_of(w: &Word) -> Self {
        PElement::pair_unchecked(w.clone(), w.clone())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, PElement::Zero)
    }

    pub fn as_pair(&self) -> Option<&Pair> {
        match self {
            PElement::Zero => None,
            PElement::Pair(p) => Some(p),
        }
    }

    /// Alphabet size; `None` for zero.
    pub fn lambda(&self) -> Option<u32> {
        self.as_pair().map(Pair::lambda)
    }

    pub fn is_one(&self) -> bool {
        self.as_pair()
            .is_some_and(|p| p.u.is_empty() && p.v.is_empty())
    }

    /// Longest of the two words; 0 for zero.
    pub fn max_word_len(&self) -> usize {
        self.as_pair().map_or(0, |p| p.u.len().max(p.v.len()))
    }

    /// The generator expansion `u_k⁻¹ … u₁⁻¹ v₁ … v_m`; `None` for zero.
    pub fn to_gen_string(&self) -> Option<GenString> {
        let p = self.as_pair()?;
        let tokens =
            p.u.letters()
                .iter()
                .rev()
                .map(|&g| Token::inverse(g))
                .chain(p.v.letters().iter().map(|&g| Token::plain(g)))
                .collect();
        Some(GenString {
            lambda: p.lambda(),
            tokens,
        })
    }

    /// Human-oriented form `u^-1 v`, with ε written `e`.
    pub fn pretty(&self) -> String {
        match self {
            PElement::Zero => "0".to_string(),
            PElement::Pair(p) => format!("{}^-1 {}", p.u, p.v),
        }
    }
}

/// Product in `P_λ`:
///
/// ```text
/// a⁻¹b · c⁻¹d = (c₁a)⁻¹d   if c = c₁b
///             = a⁻¹(b₁d)   if b = b₁c
///             = 0          otherwise
/// ```
///
/// When `b = c` both branches give `a⁻¹d`; the first is taken.
pub fn multiply(x: &PElement, y: &PElement) -> Result<PElement> {
    if let (PElement::Pair(p), PElement::Pair(q)) = (x, y) {
        same_alphabet(p.lambda(), q.lambda())?;
    }
    Ok(multiply_unchecked(x, y))
}

pub(crate) fn multiply_unchecked(x: &PElement, y: &PElement) -> PElement {
    let (PElement::Pair(p), PElement::Pair(q)) = (x, y) else {
        return PElement::Zero;
    };
    let (a, b) = (p.u.letters(), p.v.letters());
    let (c, d) = (q.u.letters(), q.v.letters());
    let lambda = p.lambda();
    if c.ends_with(b) {
        let c1 = &c[..c.len() - b.len()];
        let mut left = Letters::with_capacity(c1.len() + a.len());
        left.extend_from_slice(c1);
        left.extend_from_slice(a);
        PElement::pair_unchecked(Word::raw(lambda, left), q.v.clone())
    } else if b.ends_with(c) {
        let b1 = &b[..b.len() - c.len()];
        let mut right = Letters::with_capacity(b1.len() + d.len());
        right.extend_from_slice(b1);
        right.extend_from_slice(d);
        PElement::pair_unchecked(p.u.clone(), Word::raw(lambda, right))
    } else {
        PElement::Zero
    }
}

/// Panics when the operands are over different alphabets; use
/// [`multiply`] to get an error instead.
impl Mul for &PElement {
    type Output = PElement;

    fn mul(self, rhs: &PElement) -> PElement {
        multiply(self, rhs).expect("operands over different alphabets")
    }
}

/// `u⁻¹v ↦ v⁻¹u`, zero fixed.
pub fn invert(x: &PElement) -> PElement {
    match x {
        PElement::Zero => PElement::Zero,
        PElement::Pair(p) => PElement::pair_unchecked(p.v.clone(), p.u.clone()),
    }
}

/// Zero and the elements `u⁻¹u`.
pub fn is_idempotent(x: &PElement) -> bool {
    match x {
        PElement::Zero => true,
        PElement::Pair(p) => p.u == p.v,
    }
}

/// Natural partial order: `x ≤ y` iff `x = (x x⁻¹) y`.
pub fn nat_leq(x: &PElement, y: &PElement) -> Result<bool> {
    let xx = multiply(x, &invert(x))?;
    Ok(multiply(&xx, y)? == *x)
}

/// Every element whose words have length at most `max_len`, zero first.
/// `λ = 2, max_len = 3` gives 15² + 1 = 226 elements.
pub fn ball(lambda: u32, max_len: usize) -> Result<Vec<PElement>> {
    let words = enumerate_words(lambda, max_len)?;
    let mut out = Vec::with_capacity(words.len() * words.len() + 1);
    out.push(PElement::Zero);
    for u in &words {
        for v in &words {
            out.push(PElement::pair_unchecked(u.clone(), v.clone()));
        }
    }
    Ok(out)
}

impl fmt::Display for PElement {
    /// Canonical expression text: `0`, `1`, or the generator expansion
    /// with inverse generators written `P<i>`, e.g. `P2 P1 p1` for
    /// `(p1p2)⁻¹p1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_gen_string() {
            None => f.write_str("0"),
            Some(s) => fmt::Display::fmt(&s, f),
        }
    }
}

impl fmt::Debug for PElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pretty())
    }
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum PElementOut<'a> {
    Zero,
    Pair { u: &'a Word, v: &'a Word },
}

impl Serialize for PElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PElement::Zero => PElementOut::Zero,
            PElement::Pair(p) => PElementOut::Pair { u: &p.u, v: &p.v },
        }
        .serialize(serializer)
    }
}

/// Wire form `{"kind":"zero"} | {"kind":"pair","u":[…],"v":[…]}`. Words
/// carry no alphabet on the wire, so decoding needs `λ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum PElementRepr {
    Zero,
    Pair { u: Vec<u32>, v: Vec<u32> },
}

impl PElementRepr {
    pub fn decode(self, lambda: u32) -> Result<PElement> {
        match self {
            PElementRepr::Zero => Ok(PElement::Zero),
            PElementRepr::Pair { u, v } => {
                PElement::pair(Word::new(lambda, u)?, Word::new(lambda, v)?)
            }
        }
    }
}

/// One generator symbol: `p_index`, or `p_index⁻¹` when `inverted`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Token {
    pub index: u32,
    pub inverted: bool,
}

impl Token {
    pub fn plain(index: u32) -> Self {
        Token {
            index,
            inverted: false,
        }
    }

    pub fn inverse(index: u32) -> Self {
        Token {
            index,
            inverted: true,
        }
    }
}

/// An unreduced product of generators and inverse generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenString {
    lambda: u32,
    tokens: Vec<Token>,
}

impl GenString {
    pub fn new(lambda: u32, tokens: Vec<Token>) -> Result<Self> {
        check_lambda(lambda)?;
        if let Some(t) = tokens.iter().find(|t| t.index == 0 || t.index > lambda) {
            return Err(Error::LetterOutOfRange {
                letter: t.index,
                lambda,
            });
        }
        Ok(Self { lambda, tokens })
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn concat(&self, other: &GenString) -> Result<GenString> {
        same_alphabet(self.lambda, other.lambda)?;
        let mut tokens = self.tokens.clone();
        tokens.extend_from_slice(&other.tokens);
        Ok(GenString {
            lambda: self.lambda,
            tokens,
        })
    }
}

impl fmt::Display for GenString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tokens.is_empty() {
            return f.write_str("1");
        }
        for (i, t) in self.tokens.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let p = if t.inverted { 'P' } else { 'p' };
            write!(f, "{p}{}", t.index)?;
        }
        Ok(())
    }
}

/// Reads off `u⁻¹v` from a redex-free token sequence.
fn read_normal_form(lambda: u32, tokens: &[Token]) -> PElement {
    let split = tokens.iter().take_while(|t| t.inverted).count();
    debug_assert!(tokens[split..].iter().all(|t| !t.inverted));
    let u = tokens[..split].iter().rev().map(|t| t.index).collect();
    let v = tokens[split..].iter().map(|t| t.index).collect();
    PElement::pair_unchecked(Word::raw(lambda, u), Word::raw(lambda, v))
}

/// Normal form of a generator string under `p_i p_i⁻¹ → 1` and
/// `p_i p_j⁻¹ → 0` (`i ≠ j`), rewriting the leftmost redex first.
pub fn reduce(s: &GenString) -> PElement {
    // The stack is always redex-free, so pushing a token can only create a
    // redex at the top: that is the leftmost one.
    let mut stack: Vec<Token> = Vec::with_capacity(s.tokens.len());
    for &t in &s.tokens {
        match stack.last() {
            Some(top) if !top.inverted && t.inverted => {
                if top.index != t.index {
                    return PElement::Zero;
                }
                stack.pop();
            }
            _ => stack.push(t),
        }
    }
    read_normal_form(s.lambda, &stack)
}

/// Same rewriting system, always contracting the rightmost redex. Used to
/// confirm that the result does not depend on strategy.
pub fn reduce_rightmost(s: &GenString) -> PElement {
    let mut tokens = s.tokens.clone();
    loop {
        let redex = (0..tokens.len().saturating_sub(1))
            .rev()
            .find(|&i| !tokens[i].inverted && tokens[i + 1].inverted);
        let Some(i) = redex else {
            return read_normal_form(s.lambda, &tokens);
        };
        if tokens[i].index != tokens[i + 1].index {
            return PElement::Zero;
        }
        tokens.drain(i..i + 2);
    }
}

/// `q^k p^l` in the bicyclic monoid `⟨p, q | pq = 1⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct BicyclicElem {
    pub k: u64,
    pub l: u64,
}

impl BicyclicElem {
    pub const ONE: BicyclicElem = BicyclicElem { k: 0, l: 0 };

    pub fn new(k: u64, l: u64) -> Self {
        Self { k, l }
    }
}

/// `q^k p^l · q^m p^n = q^{k+m−min(l,m)} p^{l+n−min(l,m)}`.
pub fn bicyclic_mul(x: BicyclicElem, y: BicyclicElem) -> BicyclicElem {
    let cancel = x.l.min(y.k);
    BicyclicElem {
        k: x.k + y.k - cancel,
        l: x.l + y.l - cancel,
    }
}

/// `q^k p^l ↦ (p1^k)⁻¹ p1^l` in `P_1`.
pub fn embed_bicyclic(x: BicyclicElem) -> PElement {
    let power = |n: u64| Word::raw(1, std::iter::repeat_n(1, n as usize).collect());
    PElement::pair_unchecked(power(x.k), power(x.l))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(u: &str, v: &str) -> PElement {
        PElement::pair(Word::parse(u, 2).unwrap(), Word::parse(v, 2).unwrap()).unwrap()
    }

    fn gs(tokens: &[(u32, bool)]) -> GenString {
        GenString::new(
            2,
            tokens
                .iter()
                .map(|&(index, inverted)| Token { index, inverted })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn multiply_examples() {
        let y = el("p1p2", "p1");
        assert_eq!(&el("e", "e") * &y, y);
        assert_eq!(&el("e", "p2") * &y, el("p1", "p1"));
        assert_eq!(&el("e", "p1") * &el("p2", "e"), PElement::Zero);
        assert_eq!(&PElement::Zero * &y, PElement::Zero);
        assert_eq!(&y * &PElement::Zero, PElement::Zero);
    }

    #[test]
    fn multiply_rejects_mixed_alphabets() {
        let x = PElement::generator(2, 1).unwrap();
        let y = PElement::generator(3, 1).unwrap();
        assert!(multiply(&x, &y).is_err());
        assert_eq!(multiply(&PElement::Zero, &y).unwrap(), PElement::Zero);
    }

    #[test]
    fn both_branches_agree_when_middle_words_match() {
        // b = c: branch one gives (ε·a)⁻¹d, branch two a⁻¹(ε·d).
        for w in enumerate_words(2, 3).unwrap() {
            let a = Word::parse("p2p1", 2).unwrap();
            let d = Word::parse("p1", 2).unwrap();
            let left = PElement::pair(a.clone(), w.clone()).unwrap();
            let right = PElement::pair(w.clone(), d.clone()).unwrap();
            assert_eq!(&left * &right, PElement::pair(a, d).unwrap());
        }
    }

    #[test]
    fn invert_examples() {
        assert_eq!(invert(&el("p1", "p2")), el("p2", "p1"));
        assert_eq!(invert(&PElement::Zero), PElement::Zero);
        let e = el("p1p2", "p1p2");
        assert_eq!(invert(&e), e);
    }

    #[test]
    fn idempotent_examples() {
        assert!(is_idempotent(&el("p1p2", "p1p2")));
        let x = el("p1", "p2");
        assert!(!is_idempotent(&x));
        assert_eq!(&x * &x, PElement::Zero);
        assert!(is_idempotent(&PElement::Zero));
    }

    #[test]
    fn nat_leq_examples() {
        assert!(nat_leq(&el("p2p1", "p2p1"), &el("p1", "p1")).unwrap());
        assert!(!nat_leq(&el("p1", "p1"), &el("p2", "p2")).unwrap());
        assert!(nat_leq(&PElement::Zero, &el("e", "e")).unwrap());
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&gs(&[(1, false), (1, true)])), el("e", "e"));
        assert_eq!(reduce(&gs(&[(1, false), (2, true)])), PElement::Zero);
        assert_eq!(reduce(&gs(&[(1, true), (1, false)])), el("p1", "p1"));
        assert_eq!(reduce(&gs(&[])), el("e", "e"));
    }

    #[test]
    fn reduce_spot_products() {
        // p2 · p2⁻¹ p1⁻¹ p1 = p1⁻¹p1
        let s = gs(&[(2, false), (2, true), (1, true), (1, false)]);
        assert_eq!(reduce(&s), el("p1", "p1"));
        assert_eq!(reduce_rightmost(&s), el("p1", "p1"));
    }

    #[test]
    fn gen_string_round_trip() {
        for x in ball(2, 3).unwrap().into_iter().skip(1) {
            let s = x.to_gen_string().unwrap();
            assert_eq!(reduce(&s), x);
        }
        assert_eq!(el("p1p2", "p1").to_string(), "P2 P1 p1");
        assert_eq!(el("e", "e").to_string(), "1");
        assert_eq!(PElement::Zero.to_string(), "0");
        assert_eq!(el("p1p2", "e").pretty(), "p1p2^-1 e");
    }

    #[test]
    fn json_forms() {
        assert_eq!(
            serde_json::to_string(&el("p1", "e")).unwrap(),
            r#"{"kind":"pair","u":[1],"v":[]}"#
        );
        assert_eq!(
            serde_json::to_string(&PElement::Zero).unwrap(),
            r#"{"kind":"zero"}"#
        );
        let repr: PElementRepr =
            serde_json::from_str(r#"{"kind":"pair","u":[2,1],"v":[1]}"#).unwrap();
        assert_eq!(repr.decode(2).unwrap(), el("p2p1", "p1"));
        let repr: PElementRepr = serde_json::from_str(r#"{"kind":"pair","u":[3],"v":[]}"#).unwrap();
        assert!(repr.decode(2).is_err());
    }

    #[test]
    fn ball_size() {
        assert_eq!(ball(2, 3).unwrap().len(), 226);
        assert_eq!(ball(1, 2).unwrap().len(), 10);
    }

    #[test]
    fn bicyclic_examples() {
        let b = BicyclicElem::new;
        assert_eq!(bicyclic_mul(b(2, 3), b(1, 1)), b(2, 3));
        assert_eq!(bicyclic_mul(BicyclicElem::ONE, b(4, 7)), b(4, 7));
        assert_eq!(bicyclic_mul(b(0, 1), b(1, 0)), BicyclicElem::ONE);
    }

    #[test]
    fn embedding_examples() {
        let one = PElement::one(1).unwrap();
        assert_eq!(embed_bicyclic(BicyclicElem::ONE), one);
        let x = embed_bicyclic(BicyclicElem::new(2, 3));
        assert_eq!(
            x,
            PElement::pair(Word::power(1, 1, 2).unwrap(), Word::power(1, 1, 3).unwrap()).unwrap()
        );
        let y = embed_bicyclic(BicyclicElem::new(1, 1));
        assert_eq!(&x * &y, x);
    }

    /// Free reduction of `q^k p^l q^m p^n` by deleting `pq` pairs, written
    /// independently of `bicyclic_mul`.
    fn bicyclic_oracle(x: BicyclicElem, y: BicyclicElem) -> BicyclicElem {
        let mut s: Vec<char> = Vec::new();
        let word = std::iter::repeat_n('q', x.k as usize)
            .chain(std::iter::repeat_n('p', x.l as usize))
            .chain(std::iter::repeat_n('q', y.k as usize))
            .chain(std::iter::repeat_n('p', y.l as usize));
        for c in word {
            if c == 'q' && s.last() == Some(&'p') {
                s.pop();
            } else {
                s.push(c);
            }
        }
        let k = s.iter().take_while(|&&c| c == 'q').count() as u64;
        BicyclicElem::new(k, s.len() as u64 - k)
    }

    #[test]
    fn embedding_is_injective_and_multiplicative() {
        let all: Vec<BicyclicElem> = (0..=10)
            .flat_map(|k| (0..=10).map(move |l| BicyclicElem::new(k, l)))
            .collect();
        let images: std::collections::HashSet<PElement> =
            all.iter().map(|&x| embed_bicyclic(x)).collect();
        assert_eq!(images.len(), all.len());
        for &x in &all {
            for &y in &all {
                let product = bicyclic_mul(x, y);
                assert_eq!(product, bicyclic_oracle(x, y));
                assert_eq!(
                    &embed_bicyclic(x) * &embed_bicyclic(y),
                    embed_bicyclic(product)
                );
            }
        }
    }
}
