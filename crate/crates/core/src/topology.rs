//! The neighbourhood base at zero of the minimal inverse semigroup topology
//! on `P_λ`.
//!
//! Non-zero elements are isolated. For a finite set `A` of words,
//! `U_A(0) = {0} ∪ {a⁻¹b : a ∉ A, b ∉ A}`, and these sets form a base at
//! zero. The witnesses below produce, for each continuity requirement, a
//! finite set whose neighbourhood is carried into `U_A(0)`; the `verify_*`
//! functions confirm the inclusions by exhaustive enumeration of a ball.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::green::{chain_prefix, ll, rr, ChainSpec};
use crate::par::Exec;
use crate::polycyclic::{ball, invert, multiply_unchecked, PElement};
use crate::report::{CheckReport, Counterexample};
use crate::words::{enumerate_words, same_alphabet, Word, WordSet};

/// The basic open set `U_A(0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BasicNbhd {
    #[serde(rename = "A")]
    excluded: WordSet,
}

/// Wire form `{"A":[[…],[…]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicNbhdRepr {
    #[serde(rename = "A")]
    pub excluded: Vec<Vec<u32>>,
}

impl BasicNbhdRepr {
    pub fn decode(self, lambda: u32) -> Result<BasicNbhd> {
        let words = self
            .excluded
            .into_iter()
            .map(|w| Word::new(lambda, w))
            .collect::<Result<Vec<_>>>()?;
        Ok(BasicNbhd::new(WordSet::from_words(lambda, words)?))
    }
}

impl BasicNbhd {
    pub fn new(excluded: WordSet) -> Self {
        Self { excluded }
    }

    /// `U_∅(0)`, the whole monoid.
    pub fn everything(lambda: u32) -> Result<Self> {
        Ok(Self::new(WordSet::new(lambda)?))
    }

    pub fn excluded(&self) -> &WordSet {
        &self.excluded
    }

    pub fn lambda(&self) -> u32 {
        self.excluded.lambda()
    }

    /// Default radius for ball verification: longest excluded word plus 4.
    pub fn default_radius(&self) -> usize {
        self.excluded.max_word_len() + 4
    }

    pub(crate) fn contains(&self, x: &PElement) -> bool {
        match x {
            PElement::Zero => true,
            PElement::Pair(p) => !self.excluded.contains(p.u()) && !self.excluded.contains(p.v()),
        }
    }
}

/// Membership in `U_A(0)`. Zero always belongs.
pub fn u_member(nb: &BasicNbhd, x: &PElement) -> Result<bool> {
    if let Some(l) = x.lambda() {
        same_alphabet(nb.lambda(), l)?;
    }
    Ok(nb.contains(x))
}

/// `U_{{a,b}}(0)` misses `a⁻¹b`, separating it from zero.
pub fn hausdorff_witness(x: &PElement) -> Result<BasicNbhd> {
    let p = x
        .as_pair()
        .ok_or(Error::ZeroArgument("a Hausdorff witness"))?;
    let set = WordSet::from_words(p.lambda(), [p.u().clone(), p.v().clone()])?;
    Ok(BasicNbhd::new(set))
}

fn translation_witness(
    target: &BasicNbhd,
    fixed: &Word,
    moving: &Word,
    with_target: bool,
) -> Result<BasicNbhd> {
    let lambda = target.lambda();
    same_alphabet(lambda, fixed.lambda())?;
    let mut set = if with_target {
        target.excluded.clone()
    } else {
        WordSet::new(lambda)?
    };
    set.extend(&fixed.suffixes())?;
    // {k·fixed : k·moving ∈ A}: strip `moving` off the end of each A-word.
    for w in target.excluded.iter() {
        if let Some(k) = w.strip_suffix_unchecked(moving) {
            set.insert(k.concat_unchecked(fixed))?;
        }
    }
    Ok(BasicNbhd::new(set))
}

/// For `x = a⁻¹b`, a set `B` with `x · U_B(0) ⊆ U_A(0)`:
/// `B = A ∪ suffixes(b) ∪ {k·b : k·a ∈ A}`.
///
/// The `A` term is required: without it, products `(c₁a)⁻¹d` with `d ∈ A`
/// escape (see [`bare_right_translation_witness`]).
pub fn right_translation_witness(x: &PElement, target: &BasicNbhd) -> Result<BasicNbhd> {
    let p = x
        .as_pair()
        .ok_or(Error::ZeroArgument("a right translation witness"))?;
    translation_witness(target, p.v(), p.u(), true)
}

/// `suffixes(b) ∪ {k·b : k·a ∈ A}` without the `A` term. Kept to exhibit
/// that it is not sufficient.
pub fn bare_right_translation_witness(x: &PElement, target: &BasicNbhd) -> Result<BasicNbhd> {
    let p = x
        .as_pair()
        .ok_or(Error::ZeroArgument("a right translation witness"))?;
    translation_witness(target, p.v(), p.u(), false)
}

/// For `x = a⁻¹b`, a set `D` with `U_D(0) · x ⊆ U_A(0)`:
/// `D = A ∪ suffixes(a) ∪ {t·a : t·b ∈ A}`.
pub fn left_translation_witness(x: &PElement, target: &BasicNbhd) -> Result<BasicNbhd> {
    let p = x
        .as_pair()
        .ok_or(Error::ZeroArgument("a left translation witness"))?;
    translation_witness(target, p.u(), p.v(), true)
}

/// `suffixes(a) ∪ {t·a : t·b ∈ A}` without the `A` term.
pub fn bare_left_translation_witness(x: &PElement, target: &BasicNbhd) -> Result<BasicNbhd> {
    let p = x
        .as_pair()
        .ok_or(Error::ZeroArgument("a left translation witness"))?;
    translation_witness(target, p.u(), p.v(), false)
}

/// `T = A ∪ {suffixes of members of A}`, so that `U_T(0)·U_T(0) ⊆ U_A(0)`.
pub fn multiplication_witness(target: &BasicNbhd) -> BasicNbhd {
    let mut set = target.excluded.clone();
    for w in target.excluded.iter() {
        set.extend(&w.suffixes())
            .expect("suffixes share the alphabet");
    }
    BasicNbhd::new(set)
}

fn render_all(items: &[&PElement]) -> Vec<String> {
    items.iter().map(|x| x.to_string()).collect()
}

/// Checks `x · y ∈ U_A(0)` for every `y ∈ U_B(0)` with words of length at
/// most `max_len`.
pub fn verify_right_inclusion(
    x: &PElement,
    witness: &BasicNbhd,
    target: &BasicNbhd,
    max_len: usize,
    exec: Exec,
) -> Result<CheckReport> {
    verify_translation(x, witness, target, max_len, exec, true)
}

/// Checks `y · x ∈ U_A(0)` for every `y ∈ U_D(0)` in the ball.
pub fn verify_left_inclusion(
    x: &PElement,
    witness: &BasicNbhd,
    target: &BasicNbhd,
    max_len: usize,
    exec: Exec,
) -> Result<CheckReport> {
    verify_translation(x, witness, target, max_len, exec, false)
}

/// [`verify_right_inclusion`] over a prebuilt ball.
pub fn verify_right_inclusion_in(
    x: &PElement,
    witness: &BasicNbhd,
    target: &BasicNbhd,
    elements: &[PElement],
    exec: Exec,
) -> Result<CheckReport> {
    verify_translation_in(x, witness, target, elements, exec, true)
}

/// [`verify_left_inclusion`] over a prebuilt ball.
pub fn verify_left_inclusion_in(
    x: &PElement,
    witness: &BasicNbhd,
    target: &BasicNbhd,
    elements: &[PElement],
    exec: Exec,
) -> Result<CheckReport> {
    verify_translation_in(x, witness, target, elements, exec, false)
}

fn verify_translation(
    x: &PElement,
    witness: &BasicNbhd,
    target: &BasicNbhd,
    max_len: usize,
    exec: Exec,
    x_on_left: bool,
) -> Result<CheckReport> {
    let elements = ball(target.lambda(), max_len)?;
    verify_translation_in(x, witness, target, &elements, exec, x_on_left)
}

fn verify_translation_in(
    x: &PElement,
    witness: &BasicNbhd,
    target: &BasicNbhd,
    elements: &[PElement],
    exec: Exec,
    x_on_left: bool,
) -> Result<CheckReport> {
    let lambda = target.lambda();
    same_alphabet(lambda, witness.lambda())?;
    if let Some(l) = x.lambda() {
        same_alphabet(lambda, l)?;
    }
    let members: Vec<&PElement> = elements.iter().filter(|y| witness.contains(y)).collect();
    let hit = exec.find_map_first(&members, |&y| {
        let product = if x_on_left {
            multiply_unchecked(x, y)
        } else {
            multiply_unchecked(y, x)
        };
        (!target.contains(&product)).then(|| {
            let (l, r) = if x_on_left { (x, y) } else { (y, x) };
            Counterexample::new("product leaves U_A(0)", render_all(&[l, r, &product]))
        })
    });
    Ok(CheckReport::from_search(members.len() as u64, hit))
}

/// Checks `u · v ∈ U_A(0)` for all `u, v ∈ U_T(0)` with words of length at
/// most `max_len`.
///
/// For `u = a⁻¹b` and `v = c⁻¹d` the product is zero unless `b` and `c` are
/// suffix-comparable, and zero lies in every `U_A(0)`. For a comparable
/// pair `(b, c)` the product is `(c₁a)⁻¹d` when `c = c₁b` and `a⁻¹(b₁d)`
/// when `b = b₁c`, so its left word depends on `a` alone and its right word
/// on `d` alone. Each block of `n²` products is therefore decided by `2n`
/// word tests, with the failing product formed explicitly.
pub fn verify_product_inclusion(
    witness: &BasicNbhd,
    target: &BasicNbhd,
    max_len: usize,
    exec: Exec,
) -> Result<CheckReport> {
    let lambda = target.lambda();
    same_alphabet(lambda, witness.lambda())?;
    let words: Vec<Word> = enumerate_words(lambda, max_len)?
        .into_iter()
        .filter(|w| !witness.excluded.contains(w))
        .collect();
    let n = words.len() as u64;
    // Zero factors contribute 2·|U_T| + 1 pairs, all with product zero.
    let total_cases = n * n * n * n + 2 * (n * n) + 1;

    let comparable: Vec<(&Word, &Word)> = words
        .iter()
        .flat_map(|b| {
            words
                .iter()
                .filter(move |c| c.is_suffix_of(b) || b.is_suffix_of(c))
                .map(move |c| (b, c))
        })
        .collect();
    let excluded = &target.excluded;

    let hit = exec.find_map_first(&comparable, |&(b, c)| {
        // Product words are `left_prefix·a` and `right_prefix·d`.
        let empty = Word::raw(lambda, Default::default());
        let (left_prefix, right_prefix) = match c.strip_suffix_unchecked(b) {
            Some(c1) => (c1, empty),
            None => (
                empty,
                b.strip_suffix_unchecked(c).expect("comparable words"),
            ),
        };
        let left_of = |a: &Word| left_prefix.concat_unchecked(a);
        let right_of = |d: &Word| right_prefix.concat_unchecked(d);
        let bad_a = words.iter().find(|a| excluded.contains(&left_of(a)));
        let bad_d = words.iter().find(|d| excluded.contains(&right_of(d)));
        let (a, d) = match (bad_a, bad_d) {
            (None, None) => return None,
            (a, d) => (a.unwrap_or(&words[0]), d.unwrap_or(&words[0])),
        };
        let u = PElement::pair_unchecked(a.clone(), b.clone());
        let v = PElement::pair_unchecked(c.clone(), d.clone());
        let product = multiply_unchecked(&u, &v);
        debug_assert!(!target.contains(&product));
        Some(Counterexample::new(
            "product leaves U_A(0)",
            render_all(&[&u, &v, &product]),
        ))
    });
    Ok(CheckReport::from_search(total_cases, hit))
}

/// `(U_A(0))⁻¹ = U_A(0)` on the ball.
pub fn inversion_witness_report(nb: &BasicNbhd, max_len: usize, exec: Exec) -> Result<CheckReport> {
    let elements = ball(nb.lambda(), max_len)?;
    let hit = exec.find_map_first(&elements, |x| {
        let inv = invert(x);
        (nb.contains(x) != nb.contains(&inv))
            .then(|| Counterexample::new("inversion changes membership", render_all(&[x, &inv])))
    });
    Ok(CheckReport::from_search(elements.len() as u64, hit))
}

pub fn inversion_witness_check(nb: &BasicNbhd, max_len: usize) -> Result<bool> {
    Ok(inversion_witness_report(nb, max_len, Exec::default())?.ok)
}

/// On the ball, `x ∈ U_A(0)` iff neither `x x⁻¹` nor `x⁻¹ x` is one of the
/// idempotents `a⁻¹a`, `a ∈ A`.
pub fn coarseness_identity_report(
    nb: &BasicNbhd,
    max_len: usize,
    exec: Exec,
) -> Result<CheckReport> {
    let excluded_idempotents: Vec<PElement> =
        nb.excluded.iter().map(PElement::idempotent_of).collect();
    let elements = ball(nb.lambda(), max_len)?;
    let hit = exec.find_map_first(&elements, |x| {
        let outside_preimages =
            !excluded_idempotents.contains(&rr(x)) && !excluded_idempotents.contains(&ll(x));
        (nb.contains(x) != outside_preimages).then(|| {
            Counterexample::new(
                "membership differs from preimage description",
                render_all(&[x]),
            )
        })
    });
    Ok(CheckReport::from_search(elements.len() as u64, hit))
}

pub fn coarseness_identity_check(nb: &BasicNbhd, max_len: usize) -> Result<bool> {
    Ok(coarseness_identity_report(nb, max_len, Exec::default())?.ok)
}

/// How many of `e₀ … e_n` lie in `U_A(0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainHits {
    pub hits: usize,
    pub misses: usize,
}

/// Each miss is an idempotent `w⁻¹w` with `w ∈ A`, and chain words are
/// distinct, so `misses ≤ |A|` and infinitely many chain members stay in
/// every basic neighbourhood of zero.
pub fn chain_intersection_check(nb: &BasicNbhd, spec: &ChainSpec, n: usize) -> Result<ChainHits> {
    same_alphabet(nb.lambda(), spec.lambda())?;
    let chain = chain_prefix(spec, n)?;
    let hits = chain.iter().filter(|e| nb.contains(e)).count();
    Ok(ChainHits {
        hits,
        misses: chain.len() - hits,
    })
}
