//! Verification suites: inverse-semigroup laws, associativity sampling,
//! 0-E-unitarity, the congruence-saturation oracle, and the exhaustive
//! topology and extension checks.
//!
//! Every sampled suite derives its random stream from a seed and the case
//! index alone, so reports are identical under sequential and parallel
//! execution.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extension::{
    density_check, dichotomy_check, filter_points, filter_words, neighbourhood_sample,
    right_rule_cases, s_invert, s_is_idempotent, s_multiply_unchecked, t_inverse, t_isomorphism,
    un_member, verify_left_continuity, verify_mul_continuity, verify_right_continuity, FilterDesc,
    SElement, SNbhd,
};
use crate::green::{chain_prefix, is_omega_chain_prefix, ChainSpec};
use crate::matrixunits::{b_multiply, BElement};
use crate::par::Exec;
use crate::polycyclic::{
    ball, invert, is_idempotent, multiply_unchecked, nat_leq, reduce, reduce_rightmost, PElement,
};
use crate::report::{CheckReport, Counterexample, SuiteReport};
use crate::topology::{
    bare_right_translation_witness, chain_intersection_check, coarseness_identity_report,
    inversion_witness_report, left_translation_witness, multiplication_witness,
    right_translation_witness, verify_left_inclusion_in, verify_product_inclusion,
    verify_right_inclusion_in, BasicNbhd,
};
use crate::words::{enumerate_words, Letters, Word, WordSet};

pub const DEFAULT_SEED: u64 = 1729;

fn show<T: fmt::Display>(items: &[&T]) -> Vec<String> {
    items.iter().map(|x| x.to_string()).collect()
}

/// Verifies `x x⁻¹ x = x`, `x⁻¹ x x⁻¹ = x⁻¹`, commutation of the idempotents
/// in the sample, and that `x⁻¹` is the only inverse of `x` in the sample.
pub fn check_inverse_axioms<T, M, I>(
    suite: &str,
    elements: &[T],
    mul: M,
    inv: I,
    exec: Exec,
) -> SuiteReport
where
    T: PartialEq + fmt::Display + Sync + Send,
    M: Fn(&T, &T) -> T + Sync + Send,
    I: Fn(&T) -> T + Sync + Send,
{
    let mut report = SuiteReport::new(suite);
    let n = elements.len() as u64;

    let hit = exec.find_map_first(elements, |x| {
        let xi = inv(x);
        (mul(&mul(x, &xi), x) != *x).then(|| Counterexample::new("x x⁻¹ x = x", show(&[x, &xi])))
    });
    report.absorb_check("inverse", CheckReport::from_search(n, hit));

    let hit = exec.find_map_first(elements, |x| {
        let xi = inv(x);
        (mul(&mul(&xi, x), &xi) != xi)
            .then(|| Counterexample::new("x⁻¹ x x⁻¹ = x⁻¹", show(&[x, &xi])))
    });
    report.absorb_check("inverse", CheckReport::from_search(n, hit));

    let idempotents: Vec<&T> = elements.iter().filter(|e| mul(e, e) == **e).collect();
    let hit = exec.find_map_first(&idempotents, |&e| {
        idempotents.iter().find_map(|&f| {
            let (ef, fe) = (mul(e, f), mul(f, e));
            (ef != fe).then(|| Counterexample::new("ef = fe", show(&[e, f, &ef, &fe])))
        })
    });
    let pairs = (idempotents.len() * idempotents.len()) as u64;
    report.absorb_check("idempotents", CheckReport::from_search(pairs, hit));

    let hit = exec.find_map_first(elements, |x| {
        let xi = inv(x);
        elements.iter().find_map(|y| {
            let inverse_pair = mul(&mul(x, y), x) == *x && mul(&mul(y, x), y) == *y;
            (inverse_pair && *y != xi)
                .then(|| Counterexample::new("unique inverse", show(&[x, y, &xi])))
        })
    });
    report.absorb_check("uniqueness", CheckReport::from_search(n * n, hit));
    report
}

/// Checks `(x·y)·z = x·(y·z)` on `count` triples produced by `triple(i)`.
pub fn check_associativity<T, G, M>(
    suite: &str,
    count: usize,
    triple: G,
    mul: M,
    exec: Exec,
) -> SuiteReport
where
    T: PartialEq + fmt::Display + Send,
    G: Fn(usize) -> (T, T, T) + Sync + Send,
    M: Fn(&T, &T) -> T + Sync + Send,
{
    let hit = exec.find_map_first_index(count, |i| {
        let (x, y, z) = triple(i);
        let left = mul(&mul(&x, &y), &z);
        let right = mul(&x, &mul(&y, &z));
        (left != right)
            .then(|| Counterexample::new("(xy)z = x(yz)", show(&[&x, &y, &z, &left, &right])))
    });
    let mut report = SuiteReport::new(suite);
    report.absorb_check("assoc", CheckReport::from_search(count as u64, hit));
    report
}

/// For every non-zero idempotent `e` and element `x` of the sample with
/// `e ≤ x`, checks that `x` is idempotent.
pub fn check_zero_e_unitary<T, L, E, Z>(
    suite: &str,
    elements: &[T],
    leq: L,
    is_idem: E,
    is_zero: Z,
    exec: Exec,
) -> SuiteReport
where
    T: fmt::Display + Sync + Send,
    L: Fn(&T, &T) -> bool + Sync + Send,
    E: Fn(&T) -> bool + Sync + Send,
    Z: Fn(&T) -> bool + Sync + Send,
{
    let idempotents: Vec<&T> = elements
        .iter()
        .filter(|e| is_idem(e) && !is_zero(e))
        .collect();
    let hit = exec.find_map_first(&idempotents, |&e| {
        elements.iter().find_map(|x| {
            (leq(e, x) && !is_idem(x))
                .then(|| Counterexample::new("e ≤ x forces x idempotent", show(&[e, x])))
        })
    });
    let mut report = SuiteReport::new(suite);
    let cases = (idempotents.len() * elements.len()) as u64;
    report.absorb_check("eunitary", CheckReport::from_search(cases, hit));
    report
}

/// Random stream for case `index` of a run seeded with `seed`.
pub fn case_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn random_word<R: Rng>(rng: &mut R, lambda: u32, max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    let letters: Letters = (0..len).map(|_| rng.random_range(1..=lambda)).collect();
    Word::raw(lambda, letters)
}

/// A word likely to be suffix-comparable with `w`: a suffix of it, or `w`
/// with letters prepended, capped at `max_len`.
fn related_word<R: Rng>(rng: &mut R, w: &Word, max_len: usize) -> Word {
    let lambda = w.lambda();
    if rng.random_bool(0.5) {
        let keep = rng.random_range(0..=w.len());
        Word::raw(
            lambda,
            w.letters()[w.len() - keep..].iter().copied().collect(),
        )
    } else {
        let room = max_len.saturating_sub(w.len());
        random_word(rng, lambda, room).concat_unchecked(w)
    }
}

/// A random element of the ball of words `≤ max_len`, zero with
/// probability 1/32. With `link` given, the left word is usually related
/// to it so that products are often non-zero.
fn random_p_element<R: Rng>(
    rng: &mut R,
    lambda: u32,
    max_len: usize,
    link: Option<&Word>,
) -> PElement {
    if rng.random_ratio(1, 32) {
        return PElement::Zero;
    }
    let u = match link {
        Some(w) if rng.random_ratio(3, 4) => related_word(rng, w, max_len),
        _ => random_word(rng, lambda, max_len),
    };
    let v = random_word(rng, lambda, max_len);
    PElement::pair_unchecked(u, v)
}

pub fn random_p_triple<R: Rng>(
    rng: &mut R,
    lambda: u32,
    max_len: usize,
) -> (PElement, PElement, PElement) {
    let x = random_p_element(rng, lambda, max_len, None);
    let y = random_p_element(rng, lambda, max_len, x.as_pair().map(|p| p.v()));
    let z = random_p_element(rng, lambda, max_len, y.as_pair().map(|p| p.v()));
    (x, y, z)
}

/// `p1^k · w` with `k ≤ 3` and `w` a short word not beginning with `p1`.
/// Drawing from this small pool makes the suffix coincidences that give
/// non-zero products with filter points common.
fn pooled_word<R: Rng>(rng: &mut R) -> Word {
    let k = rng.random_range(0..=3);
    let tail = match rng.random_range(0..4) {
        0 => vec![],
        1 => vec![2],
        2 => vec![2, 1],
        _ => vec![2, 2],
    };
    let letters: Letters = std::iter::repeat_n(1, k).chain(tail).collect();
    Word::raw(2, letters)
}

pub fn random_s_element<R: Rng>(rng: &mut R) -> SElement {
    match rng.random_range(0..20) {
        0 => SElement::zero(),
        1..=7 => {
            let strip = |w: Word| w.strip_head_power_unchecked(1).1;
            let f = FilterDesc::new(strip(pooled_word(rng)), strip(pooled_word(rng)))
                .expect("stripped words are head-free");
            SElement::Filter(f)
        }
        _ => SElement::Finite(PElement::pair_unchecked(pooled_word(rng), pooled_word(rng))),
    }
}

pub fn random_s_triple<R: Rng>(rng: &mut R) -> (SElement, SElement, SElement) {
    (
        random_s_element(rng),
        random_s_element(rng),
        random_s_element(rng),
    )
}

/// Call-local disjoint-set forest keyed by the elements it has seen.
#[derive(Default)]
struct Dsu {
    index: HashMap<PElement, usize>,
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl Dsu {
    fn id(&mut self, x: &PElement) -> usize {
        if let Some(&i) = self.index.get(x) {
            return i;
        }
        let i = self.parent.len();
        self.index.insert(x.clone(), i);
        self.parent.push(i);
        self.size.push(1);
        i
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    /// Merges the classes of `x` and `y`; false if they were already one.
    fn union(&mut self, x: &PElement, y: &PElement) -> bool {
        let (i, j) = (self.id(x), self.id(y));
        let (mut ri, mut rj) = (self.find(i), self.find(j));
        if ri == rj {
            return false;
        }
        if self.size[ri] < self.size[rj] {
            std::mem::swap(&mut ri, &mut rj);
        }
        self.parent[rj] = ri;
        self.size[ri] += self.size[rj];
        true
    }

    fn same(&mut self, x: &PElement, y: &PElement) -> bool {
        match (self.index.get(x), self.index.get(y)) {
            (Some(&i), Some(&j)) => self.find(i) == self.find(j),
            _ => false,
        }
    }

    fn classes(mut self) -> Vec<Vec<PElement>> {
        let mut groups: HashMap<usize, Vec<PElement>> = HashMap::new();
        let elements: Vec<(PElement, usize)> = self.index.drain().collect();
        for (x, i) in elements {
            let root = self.find(i);
            groups.entry(root).or_default().push(x);
        }
        let mut out: Vec<Vec<PElement>> = groups
            .into_values()
            .filter(|c| c.len() > 1)
            .map(|mut c| {
                c.sort();
                c
            })
            .collect();
        out.sort();
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CongruenceStatus {
    Collapsed,
    Inconclusive,
}

/// Result of saturating one pair. Only the elements reached by the
/// saturation are tracked; `classes` lists the non-singleton classes among
/// them. Once zero and one are related every element of the ball is.
#[derive(Debug, Clone, Serialize)]
pub struct CongruenceState {
    pub ball_len: usize,
    pub mult_len: usize,
    pub status: CongruenceStatus,
    pub multiplier_depth: usize,
    pub classes: Vec<Vec<PElement>>,
}

impl CongruenceState {
    pub fn related(&self, x: &PElement, y: &PElement) -> bool {
        if x == y {
            return true;
        }
        let in_ball = |z: &PElement| z.max_word_len() <= self.ball_len;
        if self.status == CongruenceStatus::Collapsed {
            return in_ball(x) && in_ball(y);
        }
        self.classes.iter().any(|c| c.contains(x) && c.contains(y))
    }
}

/// Saturates the relation `{(x, y)}` under symmetry, transitivity and
/// `u ~ v ⇒ a·u·b ~ a·v·b` for non-zero multipliers with words of length
/// at most `mult_len`, keeping only products inside the ball of words of
/// length at most `ball_len`.
///
/// Rounds are breadth-first: round 1 is the seed pair, round `k + 1`
/// multiplies out the pairs merged in round `k`. The search stops as soon
/// as zero and one are related, reporting the round in which that
/// happened.
pub fn congruence_saturate(
    x: &PElement,
    y: &PElement,
    ball_len: usize,
    mult_len: usize,
) -> Result<CongruenceState> {
    if x == y {
        return Err(Error::Precondition("the seed pair must be distinct".into()));
    }
    let lambda = match (x.lambda(), y.lambda()) {
        (Some(l), Some(m)) if l != m => return Err(Error::AlphabetMismatch { left: l, right: m }),
        (Some(l), _) | (_, Some(l)) => l,
        (None, None) => unreachable!("two zeros are equal"),
    };
    let zero = PElement::Zero;
    let one = PElement::one(lambda)?;
    let mut multipliers: Vec<PElement> = ball(lambda, mult_len)?
        .into_iter()
        .filter(|m| !m.is_zero())
        .collect();
    multipliers.sort_by_key(|m| {
        let p = m.as_pair().expect("non-zero");
        (m.max_word_len(), p.u().len() + p.v().len())
    });
    let in_ball = |z: &PElement| z.max_word_len() <= ball_len;

    let mut dsu = Dsu::default();
    let finish = |dsu: Dsu, status, depth| CongruenceState {
        ball_len,
        mult_len,
        status,
        multiplier_depth: depth,
        classes: dsu.classes(),
    };

    dsu.union(x, y);
    let mut depth = 1;
    if dsu.same(&zero, &one) {
        return Ok(finish(dsu, CongruenceStatus::Collapsed, depth));
    }
    let mut frontier = vec![(x.clone(), y.clone())];
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for (u, v) in &frontier {
            for a in &multipliers {
                let (au, av) = (multiply_unchecked(a, u), multiply_unchecked(a, v));
                if au == av {
                    continue;
                }
                for b in &multipliers {
                    let p = multiply_unchecked(&au, b);
                    let q = multiply_unchecked(&av, b);
                    if p == q || !in_ball(&p) || !in_ball(&q) {
                        continue;
                    }
                    if dsu.union(&p, &q) {
                        if dsu.same(&zero, &one) {
                            return Ok(finish(dsu, CongruenceStatus::Collapsed, depth));
                        }
                        next.push((p, q));
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(finish(dsu, CongruenceStatus::Inconclusive, depth))
}

/// The named suites run by `check`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Axioms,
    Assoc,
    Oracle,
    Eunitary,
    Congruence,
    Topology,
    Extension,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Axioms,
        Suite::Assoc,
        Suite::Oracle,
        Suite::Eunitary,
        Suite::Congruence,
        Suite::Topology,
        Suite::Extension,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Assoc => "assoc",
            Suite::Oracle => "oracle",
            Suite::Eunitary => "eunitary",
            Suite::Congruence => "congruence",
            Suite::Topology => "topology",
            Suite::Extension => "extension",
        }
    }

    /// Word-length bound used when none is given.
    pub fn default_max_len(self) -> usize {
        match self {
            Suite::Axioms | Suite::Oracle => 3,
            Suite::Eunitary => 4,
            Suite::Congruence => 2,
            Suite::Assoc | Suite::Topology | Suite::Extension => 6,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub max_len: Option<usize>,
    pub samples: usize,
    pub seed: u64,
    pub exec: Exec,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            max_len: None,
            samples: 100_000,
            seed: DEFAULT_SEED,
            exec: Exec::default(),
        }
    }
}

pub fn run_suite(suite: Suite, config: &SuiteConfig) -> SuiteReport {
    let len = config.max_len.unwrap_or(suite.default_max_len());
    let exec = config.exec;
    let mut report = match suite {
        Suite::Axioms => axioms_suite(len, exec),
        Suite::Assoc => assoc_suite(len, config.samples, config.seed, exec),
        Suite::Oracle => oracle_suite(len, exec),
        Suite::Eunitary => eunitary_suite(len, exec),
        Suite::Congruence => congruence_suite(len, 10, 4, exec),
        Suite::Topology => topology_suite(len, exec),
        Suite::Extension => extension_suite(len, exec),
    };
    report.suite = suite.name().to_string();
    report
}

fn p2_ball(max_len: usize) -> Vec<PElement> {
    ball(2, max_len).expect("two generators")
}

/// The ball of `P_2` with words `≤ max_len`, plus all filter points with
/// words `≤ max_len - 1`.
pub fn s_sample(max_len: usize) -> Vec<SElement> {
    let mut out: Vec<SElement> = filter_points(max_len.saturating_sub(1))
        .into_iter()
        .map(SElement::Filter)
        .collect();
    out.extend(p2_ball(max_len).into_iter().map(SElement::Finite));
    out
}

pub fn axioms_suite(max_len: usize, exec: Exec) -> SuiteReport {
    let mut report = SuiteReport::new("axioms");
    report.absorb(check_inverse_axioms(
        "P2",
        &p2_ball(max_len),
        multiply_unchecked,
        invert,
        exec,
    ));
    report.absorb(check_inverse_axioms(
        "S",
        &s_sample(max_len),
        s_multiply_unchecked,
        s_invert,
        exec,
    ));
    report
}

/// Every triple of the ball of words `≤ max_len`.
pub fn assoc_exhaustive(max_len: usize, exec: Exec) -> SuiteReport {
    let elements = p2_ball(max_len);
    let n = elements.len();
    check_associativity(
        "P2 exhaustive",
        n * n * n,
        |i| {
            (
                elements[i / (n * n)].clone(),
                elements[i / n % n].clone(),
                elements[i % n].clone(),
            )
        },
        multiply_unchecked,
        exec,
    )
}

pub fn assoc_p_sampled(max_len: usize, samples: usize, seed: u64, exec: Exec) -> SuiteReport {
    let mut report = check_associativity(
        "P2 sampled",
        samples,
        |i| random_p_triple(&mut case_rng(seed, i), 2, max_len),
        multiply_unchecked,
        exec,
    );
    report.seed = Some(seed);
    report
}

pub fn assoc_s_sampled(samples: usize, seed: u64, exec: Exec) -> SuiteReport {
    let mut report = check_associativity(
        "S sampled",
        samples,
        |i| random_s_triple(&mut case_rng(seed, i)),
        s_multiply_unchecked,
        exec,
    );
    report.seed = Some(seed);
    report
}

pub fn assoc_suite(max_len: usize, samples: usize, seed: u64, exec: Exec) -> SuiteReport {
    let mut report = assoc_exhaustive(max_len.min(2), exec);
    report.absorb(assoc_p_sampled(max_len, samples, seed, exec));
    report.absorb(assoc_s_sampled(samples, seed, exec));
    report.seed = Some(seed);
    report
}

/// Multiplication against both rewriting reducers on every pair of the
/// ball of `P_2`.
pub fn oracle_suite(max_len: usize, exec: Exec) -> SuiteReport {
    let elements = p2_ball(max_len);
    let hit = exec.find_map_first(&elements, |x| {
        elements.iter().find_map(|y| {
            let product = multiply_unchecked(x, y);
            let (left, right) = match (x.to_gen_string(), y.to_gen_string()) {
                (Some(s), Some(t)) => {
                    let joined = s.concat(&t).expect("same alphabet");
                    (reduce(&joined), reduce_rightmost(&joined))
                }
                _ => (PElement::Zero, PElement::Zero),
            };
            (product != left || product != right).then(|| {
                Counterexample::new(
                    "multiply agrees with rewriting",
                    show(&[x, y, &product, &left, &right]),
                )
            })
        })
    });
    let n = elements.len() as u64;
    let mut report = SuiteReport::new("oracle");
    report.absorb_check("oracle", CheckReport::from_search(n * n, hit));
    report
}

pub fn eunitary_suite(max_len: usize, exec: Exec) -> SuiteReport {
    check_zero_e_unitary(
        "eunitary",
        &p2_ball(max_len),
        |e, x| nat_leq(e, x).expect("same alphabet"),
        is_idempotent,
        PElement::is_zero,
        exec,
    )
}

/// Distinct non-zero pairs of `P_2` with words `≤ max_len`, unordered.
pub fn congruence_pairs(max_len: usize) -> Vec<(PElement, PElement)> {
    let elements: Vec<PElement> = p2_ball(max_len)
        .into_iter()
        .filter(|x| !x.is_zero())
        .collect();
    let mut out = Vec::new();
    for (i, x) in elements.iter().enumerate() {
        for y in &elements[i + 1..] {
            out.push((x.clone(), y.clone()));
        }
    }
    out
}

/// Every distinct non-zero pair must collapse, and `(1, 0)` must collapse
/// in the first round.
pub fn congruence_suite(
    max_len: usize,
    ball_len: usize,
    mult_len: usize,
    exec: Exec,
) -> SuiteReport {
    let mut report = SuiteReport::new("congruence");
    let pairs = congruence_pairs(max_len);
    let hit = exec.find_map_first(&pairs, |(x, y)| {
        let state = congruence_saturate(x, y, ball_len, mult_len).expect("distinct pair");
        (state.status != CongruenceStatus::Collapsed)
            .then(|| Counterexample::new("pair generates the universal congruence", show(&[x, y])))
    });
    report.absorb_check(
        "collapse",
        CheckReport::from_search(pairs.len() as u64, hit),
    );

    let one = PElement::one(2).expect("two generators");
    let state = congruence_saturate(&one, &PElement::Zero, ball_len, mult_len).expect("distinct");
    let immediate = state.status == CongruenceStatus::Collapsed && state.multiplier_depth == 1;
    let hit = (!immediate).then(|| {
        Counterexample::new(
            format!(
                "(1, 0) collapses at depth 1, got {}",
                state.multiplier_depth
            ),
            show(&[&one, &PElement::Zero]),
        )
    });
    report.absorb_check("unit pair", CheckReport::from_search(1, hit));
    report
}

/// Every `A` of at most three words of length at most two over `{p1, p2}`.
pub fn small_a_family() -> Vec<WordSet> {
    let words = enumerate_words(2, 2).expect("two generators");
    let mut out = Vec::new();
    let n = words.len();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() <= 3 {
            let chosen = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| words[i].clone());
            out.push(WordSet::from_words(2, chosen).expect("two generators"));
        }
    }
    out.sort_by_key(|a| (a.len(), a.iter().cloned().collect::<Vec<_>>()));
    out
}

/// Every chain spec with preperiod of length at most two and a non-empty
/// period of length at most two over `{p1, p2}`.
pub fn small_chain_specs() -> Vec<ChainSpec> {
    let words = enumerate_words(2, 2).expect("two generators");
    let mut out = Vec::new();
    for pre in &words {
        for per in words.iter().filter(|w| !w.is_empty()) {
            out.push(ChainSpec::new(pre.clone(), per.clone()).expect("non-empty period"));
        }
    }
    out
}

/// Right and left translation witnesses for every `A` in the family and
/// every non-zero `x` with words `≤ 2`, over the ball of words `≤ max_len`.
pub fn translation_report(max_len: usize, exec: Exec) -> CheckReport {
    let elements = p2_ball(max_len);
    let movers: Vec<PElement> = p2_ball(2).into_iter().filter(|x| !x.is_zero()).collect();
    let family = small_a_family();
    let reports: Vec<CheckReport> = exec.map(&family, |a| {
        let target = BasicNbhd::new(a.clone());
        let mut cases = 0;
        for x in &movers {
            let b = right_translation_witness(x, &target).expect("non-zero");
            let d = left_translation_witness(x, &target).expect("non-zero");
            for r in [
                verify_right_inclusion_in(x, &b, &target, &elements, Exec::Sequential),
                verify_left_inclusion_in(x, &d, &target, &elements, Exec::Sequential),
            ] {
                let r = r.expect("same alphabet");
                cases += r.cases;
                if !r.ok {
                    return CheckReport::from_search(cases, r.counterexample);
                }
            }
        }
        CheckReport::from_search(cases, None)
    });
    merge(reports)
}

fn merge(reports: Vec<CheckReport>) -> CheckReport {
    let cases = reports.iter().map(|r| r.cases).sum();
    let first = reports.into_iter().find_map(|r| r.counterexample);
    CheckReport::from_search(cases, first)
}

/// `U_T·U_T ⊆ U_A` for every `A` in the family.
pub fn product_report(max_len: usize, exec: Exec) -> CheckReport {
    let family = small_a_family();
    let reports = exec.map(&family, |a| {
        let target = BasicNbhd::new(a.clone());
        verify_product_inclusion(
            &multiplication_witness(&target),
            &target,
            max_len,
            Exec::Sequential,
        )
        .expect("same alphabet")
    });
    merge(reports)
}

/// The bare right witness (no `A` term) for `x = p1⁻¹p1`, `A = {p2}` lets
/// `y = (p2p1)⁻¹p2` through, with `x·y = y ∉ U_A(0)`.
pub fn recorded_counterexample_report(max_len: usize) -> CheckReport {
    let w = |t: &str| Word::parse(t, 2).expect("valid word");
    let x = PElement::pair_unchecked(w("p1"), w("p1"));
    let y = PElement::pair_unchecked(w("p2p1"), w("p2"));
    let target = BasicNbhd::new(WordSet::from_words(2, [w("p2")]).expect("valid set"));
    let bare = bare_right_translation_witness(&x, &target).expect("non-zero");
    let product = multiply_unchecked(&x, &y);
    let elements = p2_ball(max_len.max(3));
    let full = verify_right_inclusion_in(&x, &bare, &target, &elements, Exec::Sequential)
        .expect("same alphabet");
    let reproduced = bare.contains(&y) && product == y && !target.contains(&product) && !full.ok;
    let hit = (!reproduced)
        .then(|| Counterexample::new("bare witness admits p2p1⁻¹p2", show(&[&x, &y, &product])));
    CheckReport::from_search(1, hit)
}

pub fn coarseness_report(max_len: usize, exec: Exec) -> CheckReport {
    let family = small_a_family();
    let elements_per_set = p2_ball(max_len).len() as u64;
    let reports = exec.map(&family, |a| {
        let nb = BasicNbhd::new(a.clone());
        let mut r = coarseness_identity_report(&nb, max_len, Exec::Sequential).expect("valid");
        let inv = inversion_witness_report(&nb, max_len, Exec::Sequential).expect("valid");
        if r.ok && !inv.ok {
            r = inv;
        }
        r.cases = 2 * elements_per_set;
        r
    });
    merge(reports)
}

/// For every chain spec and `A` in the families, at most `|A|` of the
/// first `n + 1` chain members fall outside `U_A(0)`.
pub fn chain_report(n: usize, exec: Exec) -> CheckReport {
    let family = small_a_family();
    let specs = small_chain_specs();
    let reports = exec.map(&family, |a| {
        let nb = BasicNbhd::new(a.clone());
        let hit = specs.iter().find_map(|spec| {
            let hits = chain_intersection_check(&nb, spec, n).expect("same alphabet");
            (hits.misses > a.len()).then(|| {
                Counterexample::new(
                    format!("{} misses exceed |A| = {}", hits.misses, a.len()),
                    vec![
                        a.to_string(),
                        format!("{}", spec.preperiod()),
                        format!("{}", spec.period()),
                    ],
                )
            })
        });
        CheckReport::from_search(specs.len() as u64, hit)
    });
    merge(reports)
}

/// Chain prefixes of length `n` for the given specs are ω-chain prefixes.
pub fn omega_chain_report(specs: &[ChainSpec], n: usize) -> CheckReport {
    let hit = specs.iter().find_map(|spec| {
        let chain = chain_prefix(spec, n).ok()?;
        (!is_omega_chain_prefix(&chain)).then(|| {
            Counterexample::new(
                "descending chain with covers",
                vec![spec.preperiod().to_string(), spec.period().to_string()],
            )
        })
    });
    CheckReport::from_search(specs.len() as u64, hit)
}

pub fn topology_suite(max_len: usize, exec: Exec) -> SuiteReport {
    let mut report = SuiteReport::new("topology");
    report.absorb_check("translations", translation_report(max_len, exec));
    report.absorb_check("products", product_report(max_len, exec));
    report.absorb_check(
        "recorded counterexample",
        recorded_counterexample_report(max_len),
    );
    report.absorb_check("coarseness", coarseness_report(max_len, exec));
    report.absorb_check("chains", chain_report(50, exec));
    report.absorb_check("omega chains", omega_chain_report(&small_chain_specs(), 20));
    report
}

/// The two branches of rules (I) and (II) never both apply, over all words
/// `b` and head-free words `c` of length at most `max_len`.
pub fn rule_disjointness_report(max_len: usize) -> CheckReport {
    let all = enumerate_words(2, max_len).expect("two generators");
    let heads = filter_words(max_len);
    let hit = all.iter().find_map(|b| {
        heads.iter().find_map(|c| {
            let (first, second) = right_rule_cases(b, c);
            (first && second).then(|| {
                Counterexample::new("rule branches overlap", vec![b.to_string(), c.to_string()])
            })
        })
    });
    CheckReport::from_search((all.len() * heads.len()) as u64, hit)
}

/// Rules (I) and (II) against the products with base elements: for every
/// non-zero finite `x` and filter point with words `≤ max_len`, products
/// with `U_m` (exponents in `(m, m + span]`) land in `U_n` of the rule's
/// output, `m` being the continuity witness.
pub fn limit_consistency_report(
    max_len: usize,
    ns: &[usize],
    span: usize,
    exec: Exec,
) -> CheckReport {
    let finite: Vec<PElement> = p2_ball(max_len)
        .into_iter()
        .filter(|x| !x.is_zero())
        .collect();
    let centers = filter_points(max_len);
    let reports = exec.map(&centers, |f| {
        let mut cases = 0;
        for (x, &n) in finite.iter().flat_map(|x| ns.iter().map(move |n| (x, n))) {
            for r in [
                verify_right_continuity(x, f, n, span),
                verify_left_continuity(f, x, n, span),
            ] {
                let r = r.expect("two generators");
                cases += r.cases;
                if !r.ok {
                    return CheckReport::from_search(cases, r.counterexample);
                }
            }
        }
        CheckReport::from_search(cases, None)
    });
    merge(reports)
}

pub fn mul_continuity_report(max_len: usize, ns: &[usize], span: usize, exec: Exec) -> CheckReport {
    let filters = filter_points(max_len);
    let reports = exec.map(&filters, |f| {
        let mut cases = 0;
        for g in &filters {
            for &n in ns {
                let r = verify_mul_continuity(f, g, n, span);
                cases += r.cases;
                if !r.ok {
                    return CheckReport::from_search(cases, r.counterexample);
                }
            }
        }
        CheckReport::from_search(cases, None)
    });
    merge(reports)
}

/// `U_n(f) ∩ U_n(g) = ∅` for distinct filter points with words
/// `≤ max_len`, on the sampled neighbourhood points.
pub fn hausdorff_report(max_len: usize, ns: &[usize], span: usize, exec: Exec) -> CheckReport {
    let filters = filter_points(max_len);
    let reports = exec.map(&filters, |f| {
        let mut cases = 0;
        for &n in ns {
            let sample = neighbourhood_sample(f, n, span);
            for g in filters.iter().filter(|g| *g != f) {
                let nb = SNbhd::new(g.clone(), n).expect("n ≥ 1");
                cases += sample.len() as u64;
                if let Some(z) = sample.iter().find(|z| un_member(&nb, z)) {
                    let hit = Counterexample::new(
                        format!("neighbourhoods U_{n} overlap"),
                        vec![f.to_string(), g.to_string(), z.to_string()],
                    );
                    return CheckReport::from_search(cases, Some(hit));
                }
            }
        }
        CheckReport::from_search(cases, None)
    });
    merge(reports)
}

/// `x ∈ U_n(F[a|b])` iff `x⁻¹ ∈ U_n(F[b|a])`, for `x` ranging over the
/// finite ball, filter points, and sampled neighbourhood points.
pub fn inversion_continuity_report(max_len: usize, ns: &[usize], exec: Exec) -> CheckReport {
    let filters = filter_points(max_len);
    let mut probes = s_sample(max_len + 1);
    for f in &filters {
        probes.extend(neighbourhood_sample(f, 1, 4));
    }
    let reports = exec.map(&filters, |f| {
        let hit = ns.iter().find_map(|&n| {
            let nb = SNbhd::new(f.clone(), n).expect("n ≥ 1");
            let swapped = SNbhd::new(f.swapped(), n).expect("n ≥ 1");
            probes.iter().find_map(|x| {
                (un_member(&nb, x) != un_member(&swapped, &s_invert(x))).then(|| {
                    Counterexample::new(
                        "inversion maps U_n(F) onto U_n(F⁻¹)",
                        show(&[&SElement::Filter(f.clone()), x]),
                    )
                })
            })
        });
        CheckReport::from_search((ns.len() * probes.len()) as u64, hit)
    });
    merge(reports)
}

/// Idempotents of `S` commute, over idempotent filter points with words
/// `≤ filter_len`, finite idempotents with words `≤ finite_len`, and zero.
pub fn s_idempotent_report(filter_len: usize, finite_len: usize) -> CheckReport {
    let mut idempotents: Vec<SElement> = filter_points(filter_len)
        .into_iter()
        .map(SElement::Filter)
        .chain(p2_ball(finite_len).into_iter().map(SElement::Finite))
        .filter(s_is_idempotent)
        .collect();
    idempotents.dedup();
    let hit = idempotents.iter().find_map(|e| {
        idempotents.iter().find_map(|f| {
            let (ef, fe) = (s_multiply_unchecked(e, f), s_multiply_unchecked(f, e));
            (ef != fe).then(|| Counterexample::new("ef = fe", show(&[e, f, &ef, &fe])))
        })
    });
    CheckReport::from_search((idempotents.len() * idempotents.len()) as u64, hit)
}

/// The filter points with indices `< max_index` plus zero, mapped onto the
/// matrix units: round trips in both directions and multiplicativity on
/// every pair.
pub fn isomorphism_report(max_index: u64, exec: Exec) -> CheckReport {
    let mut units = vec![BElement::Zero];
    for i in 0..max_index {
        for j in 0..max_index {
            units.push(BElement::unit(i, j));
        }
    }
    let points: Vec<SElement> = units.iter().map(|&u| t_inverse(u)).collect();
    let back = |x: &SElement| t_isomorphism(x).expect("filter or zero");

    let mut seen = std::collections::HashSet::new();
    let bijective = points.iter().zip(&units).find_map(|(x, &u)| {
        let round_trip = back(x) == u && t_inverse(back(x)) == *x && seen.insert(x.clone());
        (!round_trip).then(|| Counterexample::new("bijection", vec![u.to_string(), x.to_string()]))
    });
    if bijective.is_some() {
        return CheckReport::from_search(units.len() as u64, bijective);
    }

    let indices: Vec<usize> = (0..points.len()).collect();
    let hit = exec.find_map_first(&indices, |&i| {
        let x = &points[i];
        points.iter().zip(&units).find_map(|(y, &v)| {
            let image = back(&s_multiply_unchecked(x, y));
            let expected = b_multiply(units[i], v);
            (image != expected).then(|| {
                Counterexample::new(
                    "T(xy) = T(x)T(y)",
                    vec![
                        x.to_string(),
                        y.to_string(),
                        image.to_string(),
                        expected.to_string(),
                    ],
                )
            })
        })
    });
    let n = units.len() as u64;
    CheckReport::from_search(n + n * n, hit)
}

/// Density and the idempotent dichotomy at every filter point with words
/// `≤ max_len`.
pub fn density_dichotomy_report(max_len: usize) -> CheckReport {
    let filters = filter_points(max_len);
    let hit = filters.iter().find_map(|f| {
        let dense = (1..=3).all(|n| density_check(f, n, 100).expect("valid arguments"));
        let split = dichotomy_check(&SElement::Filter(f.clone())).expect("filter point");
        (!dense || !split)
            .then(|| Counterexample::new("dense with filter idempotents", vec![f.to_string()]))
    });
    CheckReport::from_search(filters.len() as u64, hit)
}

pub fn extension_suite(max_len: usize, exec: Exec) -> SuiteReport {
    let mut report = SuiteReport::new("extension");
    let ns = [1, 2, 3];
    report.absorb_check("rule disjointness", rule_disjointness_report(max_len));
    report.absorb_check(
        "limits",
        limit_consistency_report(max_len.min(4), &[1], 10, exec),
    );
    report.absorb_check(
        "multiplication",
        mul_continuity_report(max_len.min(2), &ns, 10, exec),
    );
    report.absorb_check("hausdorff", hausdorff_report(max_len.min(3), &ns, 10, exec));
    report.absorb_check(
        "inversion",
        inversion_continuity_report(max_len.min(3), &ns, exec),
    );
    report.absorb_check(
        "idempotents",
        s_idempotent_report(max_len.min(3), max_len.min(4)),
    );
    report.absorb_check("isomorphism", isomorphism_report(50, exec));
    report.absorb_check("density", density_dichotomy_report(max_len.min(3)));
    report
}
