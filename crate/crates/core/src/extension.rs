//! A topological inverse monoid `S ⊃ P_2` in which `P_2` is dense and
//! discrete.
//!
//! `S` adjoins one point `F[a|b]` for every pair of words `a`, `b` over
//! `{p1, p2}` that do not begin with `p1`. The point is the limit of the
//! elements `(p1^k a)⁻¹ p1^m b` as `k, m → ∞`: its basic neighbourhoods are
//!
//! ```text
//! U_n(F[a|b]) = {F[a|b]} ∪ {(p1^k a)⁻¹ p1^m b : k, m > n}
//! ```
//!
//! and every element of `P_2` is isolated. The filter points together with
//! zero form a copy of the ω×ω matrix units, see [`t_isomorphism`].

use std::fmt;
use std::ops::Mul;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::matrixunits::BElement;
use crate::polycyclic::{invert, multiply_unchecked, PElement};
use crate::report::{CheckReport, Counterexample};
use crate::words::{enumerate_words, Letters, Word};

/// `S` extends `P_2`.
pub const LAMBDA: u32 = 2;
const P1: u32 = 1;

fn check_p2_word(w: &Word) -> Result<()> {
    if w.lambda() != LAMBDA {
        return Err(Error::AlphabetMismatch {
            left: LAMBDA,
            right: w.lambda(),
        });
    }
    Ok(())
}

fn check_p2_element(x: &PElement) -> Result<()> {
    match x.lambda() {
        Some(l) if l != LAMBDA => Err(Error::AlphabetMismatch {
            left: LAMBDA,
            right: l,
        }),
        _ => Ok(()),
    }
}

/// `w` with every leading `p1` removed.
fn strip_p1(w: &Word) -> Word {
    w.strip_head_power_unchecked(P1).1
}

fn p1_power_then(k: usize, w: &Word) -> Word {
    let mut letters = Letters::with_capacity(k + w.len());
    letters.extend(std::iter::repeat_n(P1, k));
    letters.extend_from_slice(w.letters());
    Word::raw(LAMBDA, letters)
}

/// Labels the filter point `F[a|b]`; neither word begins with `p1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FilterDesc {
    a: Word,
    b: Word,
}

impl FilterDesc {
    pub fn new(a: Word, b: Word) -> Result<Self> {
        check_p2_word(&a)?;
        check_p2_word(&b)?;
        for w in [&a, &b] {
            if w.head() == Some(P1) {
                return Err(Error::NotHeadFree(w.to_string()));
            }
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> &Word {
        &self.a
    }

    pub fn b(&self) -> &Word {
        &self.b
    }

    pub fn swapped(&self) -> FilterDesc {
        FilterDesc {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// The base element `(p1^k a)⁻¹ p1^m b`.
    pub fn base_member(&self, k: usize, m: usize) -> PElement {
        PElement::pair_unchecked(p1_power_then(k, &self.a), p1_power_then(m, &self.b))
    }

    /// Parses `F[a|b]`, with words in generator-token syntax (`e` or an
    /// empty slot for ε).
    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        let inner = t
            .strip_prefix("F[")
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Syntax {
                position: 0,
                message: "expected filter literal F[a|b]".into(),
            })?;
        let (a, b) = inner.split_once('|').ok_or_else(|| Error::Syntax {
            position: 2,
            message: "filter literal needs '|' between its words".into(),
        })?;
        FilterDesc::new(Word::parse(a, LAMBDA)?, Word::parse(b, LAMBDA)?)
    }
}

impl fmt::Display for FilterDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F[{}|{}]", self.a, self.b)
    }
}

impl fmt::Debug for FilterDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Strips leading `p1`s from both words. Bases `(p1^k a)⁻¹ p1^m b` with
/// extra leading `p1`s in `a` or `b` are cofinal in those of the stripped
/// pair, so they determine the same point.
pub fn normalize_filter(a: &Word, b: &Word) -> Result<FilterDesc> {
    check_p2_word(a)?;
    check_p2_word(b)?;
    Ok(FilterDesc {
        a: strip_p1(a),
        b: strip_p1(b),
    })
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SElement {
    Finite(PElement),
    Filter(FilterDesc),
}

impl SElement {
    pub fn zero() -> Self {
        SElement::Finite(PElement::Zero)
    }

    pub fn is_filter(&self) -> bool {
        matches!(self, SElement::Filter(_))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, SElement::Finite(PElement::Zero))
    }

    /// Parses `F[a|b]`; anything else is left to the caller.
    pub fn parse_filter(text: &str) -> Result<Self> {
        FilterDesc::parse(text).map(SElement::Filter)
    }
}

impl From<PElement> for SElement {
    fn from(x: PElement) -> Self {
        SElement::Finite(x)
    }
}

impl From<FilterDesc> for SElement {
    fn from(f: FilterDesc) -> Self {
        SElement::Filter(f)
    }
}

impl fmt::Display for SElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SElement::Finite(x) => fmt::Display::fmt(x, f),
            SElement::Filter(d) => fmt::Display::fmt(d, f),
        }
    }
}

impl fmt::Debug for SElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SElement::Finite(x) => fmt::Debug::fmt(x, f),
            SElement::Filter(d) => fmt::Display::fmt(d, f),
        }
    }
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum SElementOut<'a> {
    Finite { elem: &'a PElement },
    Filter { a: &'a Word, b: &'a Word },
}

/// `{"kind":"finite","elem":…} | {"kind":"filter","a":[…],"b":[…]}`.
impl Serialize for SElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SElement::Finite(elem) => SElementOut::Finite { elem },
            SElement::Filter(d) => SElementOut::Filter { a: &d.a, b: &d.b },
        }
        .serialize(serializer)
    }
}

/// `a⁻¹b · F[c|d]`:
/// * `F[e·a | d]` (normalised) if `c = e·b`;
/// * `F[a′ | d]` if `b = p1^t c` with `t ≥ 1`, where `a′` is `a` without
///   its leading `p1`s;
/// * zero otherwise.
fn finite_times_filter(x: &PElement, f: &FilterDesc) -> SElement {
    let PElement::Pair(p) = x else {
        return SElement::zero();
    };
    let (a, b) = (p.u(), p.v());
    if let Some(e) = f.a.strip_suffix_unchecked(b) {
        let left = e.concat_unchecked(a);
        return SElement::Filter(FilterDesc {
            a: strip_p1(&left),
            b: f.b.clone(),
        });
    }
    let (t, rest) = b.strip_head_power_unchecked(P1);
    if t >= 1 && rest == f.a {
        return SElement::Filter(FilterDesc {
            a: strip_p1(a),
            b: f.b.clone(),
        });
    }
    SElement::zero()
}

/// Mirror image: `F[c|d] · a⁻¹b` is `F[c | e·b]` if `d = e·a`, `F[c | b′]`
/// if `a = p1^t d` with `t ≥ 1`, zero otherwise.
fn filter_times_finite(f: &FilterDesc, x: &PElement) -> SElement {
    let PElement::Pair(p) = x else {
        return SElement::zero();
    };
    let (a, b) = (p.u(), p.v());
    if let Some(e) = f.b.strip_suffix_unchecked(a) {
        let right = e.concat_unchecked(b);
        return SElement::Filter(FilterDesc {
            a: f.a.clone(),
            b: strip_p1(&right),
        });
    }
    let (t, rest) = a.strip_head_power_unchecked(P1);
    if t >= 1 && rest == f.b {
        return SElement::Filter(FilterDesc {
            a: f.a.clone(),
            b: strip_p1(b),
        });
    }
    SElement::zero()
}

pub(crate) fn s_multiply_unchecked(x: &SElement, y: &SElement) -> SElement {
    match (x, y) {
        (SElement::Finite(p), SElement::Finite(q)) => SElement::Finite(multiply_unchecked(p, q)),
        (SElement::Finite(p), SElement::Filter(f)) => finite_times_filter(p, f),
        (SElement::Filter(f), SElement::Finite(q)) => filter_times_finite(f, q),
        (SElement::Filter(f), SElement::Filter(g)) => {
            if f.b == g.a {
                SElement::Filter(FilterDesc {
                    a: f.a.clone(),
                    b: g.b.clone(),
                })
            } else {
                SElement::zero()
            }
        }
    }
}

/// Multiplication in `S`: the `P_2` product on finite elements, and the
/// limit of products of base elements whenever a filter point is involved.
pub fn s_multiply(x: &SElement, y: &SElement) -> Result<SElement> {
    for z in [x, y] {
        if let SElement::Finite(p) = z {
            check_p2_element(p)?;
        }
    }
    Ok(s_multiply_unchecked(x, y))
}

/// Panics if a finite operand is not over two generators.
impl Mul for &SElement {
    type Output = SElement;

    fn mul(self, rhs: &SElement) -> SElement {
        s_multiply(self, rhs).expect("finite operands must lie in P_2")
    }
}

pub fn s_invert(x: &SElement) -> SElement {
    match x {
        SElement::Finite(p) => SElement::Finite(invert(p)),
        SElement::Filter(f) => SElement::Filter(f.swapped()),
    }
}

pub fn s_is_idempotent(x: &SElement) -> bool {
    s_multiply_unchecked(x, x) == *x
}

/// The basic neighbourhood `U_n(F)`, `n ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SNbhd {
    center: FilterDesc,
    n: usize,
}

impl SNbhd {
    pub fn new(center: FilterDesc, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition(
                "neighbourhood index n must be at least 1".into(),
            ));
        }
        Ok(Self { center, n })
    }

    pub fn center(&self) -> &FilterDesc {
        &self.center
    }

    pub fn n(&self) -> usize {
        self.n
    }
}

/// Splits a finite element as `(p1^k a)⁻¹ p1^m b` with `a`, `b` not
/// beginning with `p1`. Unique, since leading `p1`s are stripped greedily.
pub fn decompose(x: &PElement) -> Option<(usize, usize, FilterDesc)> {
    let p = x.as_pair()?;
    if p.lambda() != LAMBDA {
        return None;
    }
    let (k, a) = p.u().strip_head_power_unchecked(P1);
    let (m, b) = p.v().strip_head_power_unchecked(P1);
    Some((k, m, FilterDesc { a, b }))
}

pub fn un_member(nb: &SNbhd, x: &SElement) -> bool {
    match x {
        SElement::Filter(f) => *f == nb.center,
        SElement::Finite(p) => match decompose(p) {
            Some((k, m, f)) => k > nb.n && m > nb.n && f == nb.center,
            None => false,
        },
    }
}

/// Index `m` with `x · U_m(F) ⊆ U_n(x·F)` for finite `x = a⁻¹b` and
/// `F = F[c|d]`:
/// * `c = e·b`: `m = n`;
/// * `b = p1^t c`, `t ≥ 1`: `m = n + t`;
/// * product zero: `m = max(n, |b|)`, which makes every product with a base
///   element zero as well (for `k > |b|`, `p1^k c` can neither end `b` nor
///   be ended by it).
pub fn right_continuity_witness(x: &PElement, center: &FilterDesc, n: usize) -> Result<usize> {
    check_p2_element(x)?;
    let Some(p) = x.as_pair() else {
        return Ok(n);
    };
    let b = p.v();
    if b.is_suffix_of(&center.a) {
        return Ok(n);
    }
    let (t, rest) = b.strip_head_power_unchecked(P1);
    if t >= 1 && rest == center.a {
        return Ok(n + t);
    }
    Ok(n.max(b.len()))
}

/// Index `m` with `U_m(F) · x ⊆ U_n(F·x)` for finite `x = a⁻¹b`, mirror of
/// [`right_continuity_witness`].
pub fn left_continuity_witness(center: &FilterDesc, x: &PElement, n: usize) -> Result<usize> {
    check_p2_element(x)?;
    let Some(p) = x.as_pair() else {
        return Ok(n);
    };
    let a = p.u();
    if a.is_suffix_of(&center.b) {
        return Ok(n);
    }
    let (t, rest) = a.strip_head_power_unchecked(P1);
    if t >= 1 && rest == center.b {
        return Ok(n + t);
    }
    Ok(n.max(a.len()))
}

/// Indices `(m, m)` with `U_m(F[a|b]) · U_m(F[c|d]) ⊆ U_n(F[a|b]·F[c|d])`.
///
/// For `b = c` this is `m = n`. For `b ≠ c` the product is zero, but base
/// elements `(p1^k a)⁻¹p1^t b` and `(p1^l c)⁻¹p1^m d` can still multiply to
/// something non-zero when a short `p1^t b` ends `c` (or `p1^l c` ends
/// `b`); `m = max(n, |b|, |c|)` rules that out.
pub fn mul_continuity_witness(f: &FilterDesc, g: &FilterDesc, n: usize) -> (usize, usize) {
    let m = if f.b == g.a {
        n
    } else {
        n.max(f.b.len()).max(g.a.len())
    };
    (m, m)
}

fn render(items: &[&SElement]) -> Vec<String> {
    items.iter().map(|x| x.to_string()).collect()
}

/// Points of `U_m(F)` with exponents in `(m, m + span]`, filter point first.
pub fn neighbourhood_sample(center: &FilterDesc, m: usize, span: usize) -> Vec<SElement> {
    let mut out = vec![SElement::Filter(center.clone())];
    for k in m + 1..=m + span {
        for l in m + 1..=m + span {
            out.push(SElement::Finite(center.base_member(k, l)));
        }
    }
    out
}

/// Checks that `product` lies in `U_n(target)`, or equals zero when the
/// target is zero (zero is isolated).
fn lands_in(product: &SElement, target: &SElement, n: usize) -> bool {
    match target {
        SElement::Filter(f) => un_member(
            &SNbhd {
                center: f.clone(),
                n,
            },
            product,
        ),
        other => product == other,
    }
}

/// Multiplies `x` against the sampled points of `U_m(F)` with `m` from
/// [`right_continuity_witness`] and checks every product lands in
/// `U_n(x·F)`.
pub fn verify_right_continuity(
    x: &PElement,
    center: &FilterDesc,
    n: usize,
    span: usize,
) -> Result<CheckReport> {
    let m = right_continuity_witness(x, center, n)?;
    let xs = SElement::Finite(x.clone());
    let target = s_multiply_unchecked(&xs, &SElement::Filter(center.clone()));
    let sample = neighbourhood_sample(center, m, span);
    let hit = sample.iter().find_map(|y| {
        let product = s_multiply_unchecked(&xs, y);
        (!lands_in(&product, &target, n)).then(|| {
            Counterexample::new(
                format!("x·U_{m}(F) not inside U_{n}({target})"),
                render(&[&xs, y, &product]),
            )
        })
    });
    Ok(CheckReport::from_search(sample.len() as u64, hit))
}

pub fn verify_left_continuity(
    center: &FilterDesc,
    x: &PElement,
    n: usize,
    span: usize,
) -> Result<CheckReport> {
    let m = left_continuity_witness(center, x, n)?;
    let xs = SElement::Finite(x.clone());
    let target = s_multiply_unchecked(&SElement::Filter(center.clone()), &xs);
    let sample = neighbourhood_sample(center, m, span);
    let hit = sample.iter().find_map(|y| {
        let product = s_multiply_unchecked(y, &xs);
        (!lands_in(&product, &target, n)).then(|| {
            Counterexample::new(
                format!("U_{m}(F)·x not inside U_{n}({target})"),
                render(&[y, &xs, &product]),
            )
        })
    });
    Ok(CheckReport::from_search(sample.len() as u64, hit))
}

/// Checks `U_m(F)·U_m(G) ⊆ U_n(F·G)` on sampled neighbourhood points,
/// filter points included.
pub fn verify_mul_continuity(f: &FilterDesc, g: &FilterDesc, n: usize, span: usize) -> CheckReport {
    let (m1, m2) = mul_continuity_witness(f, g, n);
    let target = s_multiply_unchecked(&SElement::Filter(f.clone()), &SElement::Filter(g.clone()));
    let left = neighbourhood_sample(f, m1, span);
    let right = neighbourhood_sample(g, m2, span);
    let hit = left.iter().find_map(|x| {
        right.iter().find_map(|y| {
            let product = s_multiply_unchecked(x, y);
            (!lands_in(&product, &target, n)).then(|| {
                Counterexample::new(
                    format!("U_{m1}(F)·U_{m2}(G) not inside U_{n}({target})"),
                    render(&[x, y, &product]),
                )
            })
        })
    });
    CheckReport::from_search((left.len() * right.len()) as u64, hit)
}

/// Shortlex rank among words not beginning with `p1`: ε ↦ 0, and a word
/// starting with `p2` is read as a binary numeral with `p2 = 1`, `p1 = 0`
/// (`p2 ↦ 1`, `p2p1 ↦ 2`, `p2p2 ↦ 3`, `p2p1p1 ↦ 4`, …).
pub fn filter_word_index(w: &Word) -> Result<u64> {
    check_p2_word(w)?;
    if w.head() == Some(P1) {
        return Err(Error::NotHeadFree(w.to_string()));
    }
    if w.len() > 63 {
        return Err(Error::Precondition(format!(
            "word {w} is too long to index"
        )));
    }
    Ok(w.letters()
        .iter()
        .fold(0u64, |acc, &g| (acc << 1) | u64::from(g == 2)))
}

/// Inverse of [`filter_word_index`].
pub fn filter_word_at(index: u64) -> Word {
    if index == 0 {
        return Word::raw(LAMBDA, Letters::new());
    }
    let bits = 64 - index.leading_zeros();
    let letters = (0..bits)
        .rev()
        .map(|i| if index >> i & 1 == 1 { 2 } else { P1 })
        .collect();
    Word::raw(LAMBDA, letters)
}

/// The isomorphism from the filter points plus zero onto `B_ω`:
/// `F[a|b] ↦ (idx a, idx b)`, zero ↦ zero.
pub fn t_isomorphism(x: &SElement) -> Result<BElement> {
    match x {
        SElement::Finite(PElement::Zero) => Ok(BElement::Zero),
        SElement::Finite(_) => Err(Error::Precondition(
            "only filter points and zero lie in the matrix-unit part".into(),
        )),
        SElement::Filter(f) => Ok(BElement::Unit {
            i: filter_word_index(&f.a)?,
            j: filter_word_index(&f.b)?,
        }),
    }
}

pub fn t_inverse(x: BElement) -> SElement {
    match x {
        BElement::Zero => SElement::zero(),
        BElement::Unit { i, j } => SElement::Filter(FilterDesc {
            a: filter_word_at(i),
            b: filter_word_at(j),
        }),
    }
}

/// Exhibits at least `count` distinct elements of `P_2` inside `U_n(F)`,
/// taken from exponents `(k, m) ∈ (n, n + r]²` with `r² ≥ count`.
pub fn density_check(center: &FilterDesc, n: usize, count: usize) -> Result<bool> {
    if count == 0 {
        return Err(Error::Precondition("count must be at least 1".into()));
    }
    let nb = SNbhd::new(center.clone(), n)?;
    let r = (1..)
        .find(|r: &usize| r * r >= count)
        .expect("unbounded search");
    let mut found = std::collections::HashSet::new();
    for k in n + 1..=n + r {
        for m in n + 1..=n + r {
            let y = SElement::Finite(center.base_member(k, m));
            if un_member(&nb, &y) {
                found.insert(y);
            }
        }
    }
    Ok(found.len() >= count)
}

/// For a filter point `x`, both `x x⁻¹` and `x⁻¹ x` are filter points, so
/// neither lies in `P_2`.
pub fn dichotomy_check(x: &SElement) -> Result<bool> {
    if !x.is_filter() {
        return Err(Error::Precondition(
            "dichotomy check needs a filter point".into(),
        ));
    }
    let inv = s_invert(x);
    Ok(s_multiply_unchecked(x, &inv).is_filter() && s_multiply_unchecked(&inv, x).is_filter())
}

/// Every word of length at most `max_len` over `{p1, p2}` not beginning
/// with `p1`.
pub fn filter_words(max_len: usize) -> Vec<Word> {
    enumerate_words(LAMBDA, max_len)
        .expect("two generators")
        .into_iter()
        .filter(|w| w.head() != Some(P1))
        .collect()
}

/// All filter points with both words of length at most `max_len`.
pub fn filter_points(max_len: usize) -> Vec<FilterDesc> {
    let words = filter_words(max_len);
    words
        .iter()
        .flat_map(|a| {
            words.iter().map(move |b| FilterDesc {
                a: a.clone(),
                b: b.clone(),
            })
        })
        .collect()
}

/// Which branches of `a⁻¹b · F[c|…]` apply: (`c = e·b`, `b = p1^t c` with
/// `t ≥ 1`). At most one is ever true.
pub fn right_rule_cases(b: &Word, c: &Word) -> (bool, bool) {
    let first = b.is_suffix_of(c);
    let (t, rest) = b.strip_head_power_unchecked(P1);
    (first, t >= 1 && rest == *c)
}
