//! The free monoid on λ generators.
//!
//! Letters are 1-based generator indices, so `p1p2` is stored as `[1, 2]`.
//! Every word remembers the alphabet size it was built over; operations
//! that combine two words refuse to mix alphabets.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest alphabet the library accepts.
pub const MAX_LAMBDA: u32 = 1 << 16;

pub(crate) type Letters = SmallVec<[u32; 6]>;

/// An element of the free monoid `M_λ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    lambda: u32,
    letters: Letters,
}

pub(crate) fn check_lambda(lambda: u32) -> Result<()> {
    if lambda == 0 || lambda > MAX_LAMBDA {
        return Err(Error::InvalidAlphabet(lambda));
    }
    Ok(())
}

pub(crate) fn same_alphabet(left: u32, right: u32) -> Result<()> {
    if left != right {
        return Err(Error::AlphabetMismatch { left, right });
    }
    Ok(())
}

impl Word {
    /// The empty word ε over `lambda` generators.
    pub fn empty(lambda: u32) -> Result<Self> {
        check_lambda(lambda)?;
        Ok(Self::raw(lambda, Letters::new()))
    }

    pub fn new(lambda: u32, letters: impl IntoIterator<Item = u32>) -> Result<Self> {
        check_lambda(lambda)?;
        let letters: Letters = letters.into_iter().collect();
        if let Some(&bad) = letters.iter().find(|&&g| g == 0 || g > lambda) {
            return Err(Error::LetterOutOfRange {
                letter: bad,
                lambda,
            });
        }
        Ok(Self::raw(lambda, letters))
    }

    /// The one-letter word `p_g`.
    pub fn generator(lambda: u32, g: u32) -> Result<Self> {
        Self::new(lambda, [g])
    }

    /// `p_g` repeated `count` times.
    pub fn power(lambda: u32, g: u32, count: usize) -> Result<Self> {
        Self::new(lambda, std::iter::repeat_n(g, count))
    }

    pub(crate) fn raw(lambda: u32, letters: Letters) -> Self {
        Self { lambda, letters }
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// First letter, if any.
    pub fn head(&self) -> Option<u32> {
        self.letters.first().copied()
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        same_alphabet(self.lambda, other.lambda)?;
        Ok(self.concat_unchecked(other))
    }

    pub(crate) fn concat_unchecked(&self, other: &Word) -> Word {
        let mut letters = Letters::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word::raw(self.lambda, letters)
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        self.lambda == other.lambda && other.letters.ends_with(&self.letters)
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        self.lambda == other.lambda && other.letters.starts_with(&self.letters)
    }

    /// Returns `q` with `q · suffix = self`, or `None` when `suffix` does not
    /// end `self`.
    pub fn strip_suffix(&self, suffix: &Word) -> Result<Option<Word>> {
        same_alphabet(self.lambda, suffix.lambda)?;
        Ok(self.strip_suffix_unchecked(suffix))
    }

    pub(crate) fn strip_suffix_unchecked(&self, suffix: &Word) -> Option<Word> {
        self.letters
            .strip_suffix(suffix.letters.as_slice())
            .map(|rest| Word::raw(self.lambda, Letters::from_slice(rest)))
    }

    /// Splits `self = g^count · tail` with `tail` not starting with `g`.
    pub fn strip_head_power(&self, g: u32) -> Result<(usize, Word)> {
        if g == 0 || g > self.lambda {
            return Err(Error::LetterOutOfRange {
                letter: g,
                lambda: self.lambda,
            });
        }
        Ok(self.strip_head_power_unchecked(g))
    }

    pub(crate) fn strip_head_power_unchecked(&self, g: u32) -> (usize, Word) {
        let count = self.letters.iter().take_while(|&&x| x == g).count();
        let tail = Word::raw(self.lambda, Letters::from_slice(&self.letters[count..]));
        (count, tail)
    }

    /// All `|w| + 1` suffixes, ε included.
    pub fn suffixes(&self) -> WordSet {
        let members = (0..=self.len())
            .map(|i| Word::raw(self.lambda, Letters::from_slice(&self.letters[i..])))
            .collect();
        WordSet {
            lambda: self.lambda,
            members,
        }
    }

    /// Letters in reverse order.
    pub fn reversed(&self) -> Word {
        Word::raw(self.lambda, self.letters.iter().rev().copied().collect())
    }

    /// Parses the canonical text form: `e` (or the empty string) for ε,
    /// otherwise generator tokens `p<index>`, optionally separated by
    /// whitespace or `*`.
    pub fn parse(text: &str, lambda: u32) -> Result<Word> {
        check_lambda(lambda)?;
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "e" || trimmed == "ε" {
            return Word::empty(lambda);
        }
        let bytes = trimmed.as_bytes();
        let mut letters = Letters::new();
        let mut pos = 0;
        while pos < bytes.len() {
            match bytes[pos] {
                b' ' | b'\t' | b'*' => pos += 1,
                b'p' => {
                    let start = pos + 1;
                    let mut end = start;
                    while end < bytes.len() && bytes[end].is_ascii_digit() {
                        end += 1;
                    }
                    let index: u32 = trimmed[start..end].parse().map_err(|_| Error::Syntax {
                        position: pos,
                        message: "expected generator index after 'p'".into(),
                    })?;
                    if index == 0 || index > lambda {
                        return Err(Error::LetterOutOfRange {
                            letter: index,
                            lambda,
                        });
                    }
                    letters.push(index);
                    pos = end;
                }
                _ => {
                    return Err(Error::Syntax {
                        position: pos,
                        message: format!(
                            "unexpected character {:?} in word",
                            trimmed[pos..].chars().next().unwrap()
                        ),
                    })
                }
            }
        }
        Ok(Word::raw(lambda, letters))
    }
}

/// Shortlex: alphabet, then length, then lexicographic.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lambda
            .cmp(&other.lambda)
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("e");
        }
        for g in &self.letters {
            write!(f, "p{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.letters.iter())
    }
}

/// All words of length at most `max_len`, shortlex order.
///
/// There are `Σ_{k ≤ max_len} λ^k` of them, so keep `λ` and `max_len` small.
pub fn enumerate_words(lambda: u32, max_len: usize) -> Result<Vec<Word>> {
    check_lambda(lambda)?;
    let mut out = vec![Word::raw(lambda, Letters::new())];
    let mut layer_start = 0;
    for _ in 0..max_len {
        let layer_end = out.len();
        for i in layer_start..layer_end {
            for g in 1..=lambda {
                let mut letters = out[i].letters.clone();
                letters.push(g);
                out.push(Word::raw(lambda, letters));
            }
        }
        layer_start = layer_end;
    }
    Ok(out)
}

/// A finite set of words over one alphabet, iterated in shortlex order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WordSet {
    lambda: u32,
    members: BTreeSet<Word>,
}

impl WordSet {
    pub fn new(lambda: u32) -> Result<Self> {
        check_lambda(lambda)?;
        Ok(Self {
            lambda,
            members: BTreeSet::new(),
        })
    }

    pub fn from_words<I: IntoIterator<Item = Word>>(lambda: u32, words: I) -> Result<Self> {
        let mut set = Self::new(lambda)?;
        for w in words {
            set.insert(w)?;
        }
        Ok(set)
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    /// Returns whether the word was newly added.
    pub fn insert(&mut self, word: Word) -> Result<bool> {
        same_alphabet(self.lambda, word.lambda)?;
        Ok(self.members.insert(word))
    }

    pub fn extend(&mut self, other: &WordSet) -> Result<()> {
        same_alphabet(self.lambda, other.lambda)?;
        self.members.extend(other.members.iter().cloned());
        Ok(())
    }

    pub fn contains(&self, word: &Word) -> bool {
        self.members.contains(word)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.members.iter()
    }

    /// Length of the longest member, 0 for the empty set.
    pub fn max_word_len(&self) -> usize {
        self.members.iter().map(Word::len).max().unwrap_or(0)
    }

    /// Parses a comma-separated list of words, e.g. `p1,p2p1,e`.
    /// An empty string is the empty set.
    pub fn parse(text: &str, lambda: u32) -> Result<Self> {
        let mut set = Self::new(lambda)?;
        if text.trim().is_empty() {
            return Ok(set);
        }
        for part in text.split(',') {
            set.insert(Word::parse(part, lambda)?)?;
        }
        Ok(set)
    }
}

impl fmt::Display for WordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, w) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for WordSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for WordSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.members.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        Word::parse(text, 2).unwrap()
    }

    #[test]
    fn concat_examples() {
        assert_eq!(w("e").concat(&w("p2")).unwrap(), w("p2"));
        assert_eq!(w("p1").concat(&w("p2")).unwrap(), w("p1p2"));
        assert_eq!(w("p1p2").concat(&w("p1")).unwrap(), w("p1p2p1"));
    }

    #[test]
    fn concat_rejects_mixed_alphabets() {
        let a = Word::generator(2, 1).unwrap();
        let b = Word::generator(3, 1).unwrap();
        assert!(matches!(
            a.concat(&b),
            Err(Error::AlphabetMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn strip_suffix_examples() {
        assert_eq!(w("p1p2").strip_suffix(&w("p2")).unwrap(), Some(w("p1")));
        assert_eq!(w("p1p2").strip_suffix(&w("p1")).unwrap(), None);
        for word in enumerate_words(2, 3).unwrap() {
            assert_eq!(word.strip_suffix(&w("e")).unwrap(), Some(word.clone()));
        }
    }

    #[test]
    fn suffixes_examples() {
        let s = w("p1p2").suffixes();
        assert_eq!(
            s,
            WordSet::from_words(2, [w("e"), w("p2"), w("p1p2")]).unwrap()
        );
        assert_eq!(w("e").suffixes().len(), 1);
        let s = w("p1p1").suffixes();
        assert_eq!(
            s,
            WordSet::from_words(2, [w("e"), w("p1"), w("p1p1")]).unwrap()
        );
    }

    #[test]
    fn strip_head_power_examples() {
        assert_eq!(w("p1p1p2").strip_head_power(1).unwrap(), (2, w("p2")));
        assert_eq!(w("p2p1").strip_head_power(1).unwrap(), (0, w("p2p1")));
        assert_eq!(w("p1p1").strip_head_power(1).unwrap(), (2, w("e")));
        assert!(w("p1").strip_head_power(3).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let words = enumerate_words(2, 1).unwrap();
        assert_eq!(words, vec![w("e"), w("p1"), w("p2")]);
        assert_eq!(enumerate_words(2, 2).unwrap().len(), 7);
        let unary = enumerate_words(1, 3).unwrap();
        let expected: Vec<Word> = (0..=3).map(|k| Word::power(1, 1, k).unwrap()).collect();
        assert_eq!(unary, expected);
    }

    #[test]
    fn enumeration_is_sorted_shortlex() {
        let words = enumerate_words(3, 3).unwrap();
        assert_eq!(words.len(), 1 + 3 + 9 + 27);
        assert!(words.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn construction_rejects_bad_letters() {
        assert!(Word::new(2, [1, 3]).is_err());
        assert!(Word::new(2, [0]).is_err());
        assert!(Word::new(0, []).is_err());
        assert!(Word::new(MAX_LAMBDA + 1, []).is_err());
        assert!(Word::new(MAX_LAMBDA, [MAX_LAMBDA]).is_ok());
    }

    #[test]
    fn text_form() {
        assert_eq!(w("e").to_string(), "e");
        assert_eq!(w("p1 p2").to_string(), "p1p2");
        assert_eq!(Word::parse("p10p2", 12).unwrap().letters(), &[10, 2]);
        assert!(Word::parse("p1q", 2).is_err());
        assert!(Word::parse("p", 2).is_err());
    }

    #[test]
    fn word_set_parse() {
        let set = WordSet::parse("p1, e ,p2p1", 2).unwrap();
        assert_eq!(set.len(), 3);
        assert!(set.contains(&w("e")));
        assert_eq!(set.to_string(), "{e, p1, p2p1}");
        assert!(WordSet::parse("", 2).unwrap().is_empty());
        assert_eq!(set.max_word_len(), 2);
    }

    #[test]
    fn json_form_is_integer_array() {
        let json = serde_json::to_string(&w("p1p2")).unwrap();
        assert_eq!(json, "[1,2]");
        assert_eq!(serde_json::to_string(&w("e")).unwrap(), "[]");
    }

    #[test]
    fn ball_laws_exhaustive() {
        let ball = enumerate_words(2, 4).unwrap();
        let eps = w("e");
        for x in &ball {
            assert_eq!(&x.concat(&eps).unwrap(), x);
            assert_eq!(&eps.concat(x).unwrap(), x);
            assert_eq!(x.suffixes().len(), x.len() + 1);
            for g in 1..=2 {
                let (count, tail) = x.strip_head_power(g).unwrap();
                assert_ne!(tail.head(), Some(g));
                let rebuilt = Word::power(2, g, count).unwrap().concat(&tail).unwrap();
                assert_eq!(&rebuilt, x);
            }
            for y in &ball {
                let xy = x.concat(y).unwrap();
                assert_eq!(xy.len(), x.len() + y.len());
                assert_eq!(xy.strip_suffix(y).unwrap().as_ref(), Some(x));
                for z in &ball {
                    assert_eq!(
                        xy.concat(z).unwrap(),
                        x.concat(&y.concat(z).unwrap()).unwrap()
                    );
                }
            }
        }
    }
}
