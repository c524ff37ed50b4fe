//! Green's relations on `P_λ`, explicit D-class witnesses and truncated
//! maximal chains of idempotents.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polycyclic::{is_idempotent, multiply, nat_leq, PElement};
use crate::words::{same_alphabet, Word};

/// `x x⁻¹`; equals `u⁻¹u` for `x = u⁻¹v`.
pub fn rr(x: &PElement) -> PElement {
    match x {
        PElement::Zero => PElement::Zero,
        PElement::Pair(p) => PElement::idempotent_of(p.u()),
    }
}

/// `x⁻¹ x`; equals `v⁻¹v` for `x = u⁻¹v`.
pub fn ll(x: &PElement) -> PElement {
    match x {
        PElement::Zero => PElement::Zero,
        PElement::Pair(p) => PElement::idempotent_of(p.v()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    R,
    L,
    H,
    D,
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "R" | "r" => Ok(Relation::R),
            "L" | "l" => Ok(Relation::L),
            "H" | "h" => Ok(Relation::H),
            "D" | "d" => Ok(Relation::D),
            other => Err(Error::Precondition(format!(
                "unknown Green relation {other:?}"
            ))),
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Relation::R => "R",
            Relation::L => "L",
            Relation::H => "H",
            Relation::D => "D",
        };
        f.write_str(name)
    }
}

fn check_pair(x: &PElement, y: &PElement) -> Result<()> {
    if let (Some(l), Some(r)) = (x.lambda(), y.lambda()) {
        same_alphabet(l, r)?;
    }
    Ok(())
}

pub fn green_r(x: &PElement, y: &PElement) -> Result<bool> {
    check_pair(x, y)?;
    Ok(rr(x) == rr(y))
}

pub fn green_l(x: &PElement, y: &PElement) -> Result<bool> {
    check_pair(x, y)?;
    Ok(ll(x) == ll(y))
}

/// In `P_λ` the H-classes are trivial, but this is computed as R ∩ L rather
/// than assumed.
pub fn green_h(x: &PElement, y: &PElement) -> Result<bool> {
    Ok(green_r(x, y)? && green_l(x, y)?)
}

/// `P_λ` is 0-bisimple: zero forms its own class and all other elements
/// are D-related. [`d_witness`] produces the connecting element.
pub fn green_d(x: &PElement, y: &PElement) -> Result<bool> {
    check_pair(x, y)?;
    Ok(x.is_zero() == y.is_zero())
}

pub fn related(rel: Relation, x: &PElement, y: &PElement) -> Result<bool> {
    match rel {
        Relation::R => green_r(x, y),
        Relation::L => green_l(x, y),
        Relation::H => green_h(x, y),
        Relation::D => green_d(x, y),
    }
}

/// Evidence that `x D y`: an element `b` with `x R b L y`, together with
/// multipliers `x·s = b`, `b·s′ = x`, `t·b = y`, `t′·y = b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DWitness {
    pub b: PElement,
    pub s: PElement,
    pub s_prime: PElement,
    pub t: PElement,
    pub t_prime: PElement,
}

impl DWitness {
    /// Re-multiplies all four identities.
    pub fn verify(&self, x: &PElement, y: &PElement) -> Result<bool> {
        Ok(multiply(x, &self.s)? == self.b
            && multiply(&self.b, &self.s_prime)? == *x
            && multiply(&self.t, &self.b)? == *y
            && multiply(&self.t_prime, y)? == self.b)
    }
}

/// For `x = u⁻¹v` and `y = s⁻¹t`: `b = u⁻¹t`, `s = v⁻¹t`, `s′ = t⁻¹v`,
/// `t = s⁻¹u`, `t′ = u⁻¹s`.
pub fn d_witness(x: &PElement, y: &PElement) -> Result<DWitness> {
    check_pair(x, y)?;
    let (PElement::Pair(p), PElement::Pair(q)) = (x, y) else {
        return Err(Error::ZeroArgument("a D-class witness"));
    };
    let pair = |l: &Word, r: &Word| PElement::pair_unchecked(l.clone(), r.clone());
    Ok(DWitness {
        b: pair(p.u(), q.v()),
        s: pair(p.v(), q.v()),
        s_prime: pair(q.v(), p.v()),
        t: pair(q.u(), p.u()),
        t_prime: pair(p.u(), q.u()),
    })
}

/// An infinite descending chain of idempotents, described by the stream of
/// letters prepended at each step: first `preperiod`, then `period` on
/// repeat.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ChainSpec {
    preperiod: Word,
    period: Word,
}

impl ChainSpec {
    pub fn new(preperiod: Word, period: Word) -> Result<Self> {
        same_alphabet(preperiod.lambda(), period.lambda())?;
        if period.is_empty() {
            return Err(Error::Precondition("chain period must be non-empty".into()));
        }
        Ok(Self { preperiod, period })
    }

    pub fn preperiod(&self) -> &Word {
        &self.preperiod
    }

    pub fn period(&self) -> &Word {
        &self.period
    }

    pub fn lambda(&self) -> u32 {
        self.period.lambda()
    }

    /// The letter prepended at step `k` (0-based).
    pub fn letter(&self, k: usize) -> u32 {
        let pre = self.preperiod.letters();
        if k < pre.len() {
            pre[k]
        } else {
            let per = self.period.letters();
            per[(k - pre.len()) % per.len()]
        }
    }
}

/// Wire form `{"preperiod":[…],"period":[…]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainSpecRepr {
    pub preperiod: Vec<u32>,
    pub period: Vec<u32>,
}

impl ChainSpecRepr {
    pub fn decode(self, lambda: u32) -> Result<ChainSpec> {
        ChainSpec::new(
            Word::new(lambda, self.preperiod)?,
            Word::new(lambda, self.period)?,
        )
    }
}

/// `e₀ = ε⁻¹ε, e₁, …, e_n`, each word one letter longer than the last.
pub fn chain_prefix(spec: &ChainSpec, n: usize) -> Result<Vec<PElement>> {
    if n == 0 {
        return Err(Error::Precondition(
            "chain length must be at least 1".into(),
        ));
    }
    let lambda = spec.lambda();
    let mut word = Word::empty(lambda)?;
    let mut out = Vec::with_capacity(n + 1);
    out.push(PElement::idempotent_of(&word));
    for k in 0..n {
        word = Word::generator(lambda, spec.letter(k))?.concat(&word)?;
        out.push(PElement::idempotent_of(&word));
    }
    Ok(out)
}

/// Starts at the identity, consists of non-zero idempotents, strictly
/// descends, and each step is a cover (word grows by one letter).
pub fn is_omega_chain_prefix(es: &[PElement]) -> bool {
    let Some(first) = es.first() else {
        return false;
    };
    if !first.is_one() {
        return false;
    }
    if es.iter().any(|e| e.is_zero() || !is_idempotent(e)) {
        return false;
    }
    es.windows(2).all(|w| {
        let (upper, lower) = (&w[0], &w[1]);
        let below = matches!(nat_leq(lower, upper), Ok(true));
        let above = matches!(nat_leq(upper, lower), Ok(true));
        below && !above && lower.max_word_len() == upper.max_word_len() + 1
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycyclic::{ball, invert};

    fn w(text: &str) -> Word {
        Word::parse(text, 2).unwrap()
    }

    fn el(u: &str, v: &str) -> PElement {
        PElement::pair(w(u), w(v)).unwrap()
    }

    #[test]
    fn rr_ll_examples() {
        assert_eq!(rr(&el("p1", "p2")), el("p1", "p1"));
        assert_eq!(ll(&el("p1", "p2")), el("p2", "p2"));
        assert_eq!(rr(&PElement::Zero), PElement::Zero);
    }

    #[test]
    fn rr_ll_match_products() {
        for x in ball(2, 3).unwrap() {
            assert_eq!(rr(&x), multiply(&x, &invert(&x)).unwrap());
            assert_eq!(ll(&x), multiply(&invert(&x), &x).unwrap());
        }
    }

    #[test]
    fn relation_examples() {
        assert!(green_r(&el("p1", "p2"), &el("p1", "e")).unwrap());
        assert!(!green_h(&el("p1", "p2"), &el("p1", "e")).unwrap());
        assert!(green_d(&el("p1", "p2"), &el("e", "e")).unwrap());
        assert!(!green_d(&PElement::Zero, &el("e", "e")).unwrap());
        assert!(green_d(&PElement::Zero, &PElement::Zero).unwrap());
        assert_eq!("H".parse::<Relation>().unwrap(), Relation::H);
        assert!("J".parse::<Relation>().is_err());
    }

    /// `x S¹ = y S¹` checked by searching for right multipliers among the
    /// elements with words of length at most 4.
    fn bounded_r_oracle(x: &PElement, y: &PElement, multipliers: &[PElement]) -> bool {
        let reach = |from: &PElement, to: &PElement| {
            from == to || multipliers.iter().any(|s| &(from * s) == to)
        };
        reach(x, y) && reach(y, x)
    }

    #[test]
    fn r_and_l_agree_with_bounded_ideal_search() {
        let elements = ball(2, 2).unwrap();
        let multipliers = ball(2, 4).unwrap();
        for x in &elements {
            for y in &elements {
                assert_eq!(
                    green_r(x, y).unwrap(),
                    bounded_r_oracle(x, y, &multipliers),
                    "R on {x:?}, {y:?}"
                );
                let l_oracle = bounded_r_oracle(&invert(x), &invert(y), &multipliers);
                assert_eq!(green_l(x, y).unwrap(), l_oracle, "L on {x:?}, {y:?}");
            }
        }
    }

    #[test]
    fn h_classes_are_trivial() {
        let elements = ball(2, 3).unwrap();
        for x in &elements {
            for y in &elements {
                if green_h(x, y).unwrap() {
                    assert_eq!(x, y);
                }
            }
        }
    }

    #[test]
    fn d_witness_examples() {
        let one = el("e", "e");
        let wit = d_witness(&one, &one).unwrap();
        assert!(wit.verify(&one, &one).unwrap());
        assert_eq!(wit.b, one);
        assert!([&wit.s, &wit.s_prime, &wit.t, &wit.t_prime]
            .iter()
            .all(|m| **m == one));

        let (x, y) = (el("p1", "p2"), el("p2", "p1"));
        let wit = d_witness(&x, &y).unwrap();
        assert_eq!(wit.b, el("p1", "p1"));
        assert!(wit.verify(&x, &y).unwrap());

        let y = el("p1p2", "e");
        let wit = d_witness(&one, &y).unwrap();
        assert_eq!(wit.b, one);
        assert_eq!(wit.t, el("p1p2", "e"));
        assert!(wit.verify(&one, &y).unwrap());

        assert!(d_witness(&PElement::Zero, &one).is_err());
    }

    #[test]
    fn d_witness_links_r_and_l() {
        let elements = ball(2, 2).unwrap();
        for x in elements.iter().skip(1) {
            for y in elements.iter().skip(1) {
                let wit = d_witness(x, y).unwrap();
                assert!(wit.verify(x, y).unwrap());
                assert!(green_r(x, &wit.b).unwrap());
                assert!(green_l(&wit.b, y).unwrap());
            }
        }
    }

    #[test]
    fn chain_examples() {
        let spec = ChainSpec::new(w("e"), w("p1")).unwrap();
        assert_eq!(
            chain_prefix(&spec, 2).unwrap(),
            vec![el("e", "e"), el("p1", "p1"), el("p1p1", "p1p1")]
        );
        let spec = ChainSpec::new(w("p2"), w("p1")).unwrap();
        let chain = chain_prefix(&spec, 2).unwrap();
        assert_eq!(
            chain,
            vec![el("e", "e"), el("p2", "p2"), el("p1p2", "p1p2")]
        );
        assert!(nat_leq(&chain[2], &chain[1]).unwrap());
        assert!(!nat_leq(&chain[1], &chain[2]).unwrap());
        assert!(chain_prefix(&spec, 0).is_err());
        assert!(ChainSpec::new(w("p1"), w("e")).is_err());
    }

    #[test]
    fn omega_chain_recognition() {
        let spec = ChainSpec::new(w("p1p2"), w("p2p1")).unwrap();
        let chain = chain_prefix(&spec, 12).unwrap();
        assert!(is_omega_chain_prefix(&chain));
        for i in 0..chain.len() {
            for j in 0..chain.len() {
                let comparable = nat_leq(&chain[i], &chain[j]).unwrap()
                    || nat_leq(&chain[j], &chain[i]).unwrap();
                assert!(comparable);
            }
        }

        let repeated = vec![el("e", "e"), el("p1", "p1"), el("p1", "p1")];
        assert!(!is_omega_chain_prefix(&repeated));
        let jump = vec![el("e", "e"), el("p1p1", "p1p1")];
        assert!(!is_omega_chain_prefix(&jump));
        // The skipped element sits strictly between the two.
        let mid = el("p1", "p1");
        assert!(nat_leq(&jump[1], &mid).unwrap() && nat_leq(&mid, &jump[0]).unwrap());
        assert!(mid != jump[0] && mid != jump[1]);

        assert!(!is_omega_chain_prefix(&[]));
        assert!(!is_omega_chain_prefix(&[el("p1", "p1")]));
        assert!(!is_omega_chain_prefix(&[el("e", "e"), PElement::Zero]));
        assert!(!is_omega_chain_prefix(&[el("e", "e"), el("p1", "e")]));
    }

    #[test]
    fn chain_spec_json() {
        let spec = ChainSpec::new(w("p2"), w("p1p2")).unwrap();
        let json = serde_json::to_string(&spec).unwrap();
        assert_eq!(json, r#"{"preperiod":[2],"period":[1,2]}"#);
        let repr: ChainSpecRepr = serde_json::from_str(&json).unwrap();
        assert_eq!(repr.decode(2).unwrap(), spec);
    }
}
