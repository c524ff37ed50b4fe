//! The semigroup `B_λ` of λ×λ matrix units with zero.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BElement {
    Zero,
    Unit { i: u64, j: u64 },
}

impl BElement {
    pub fn unit(i: u64, j: u64) -> Self {
        BElement::Unit { i, j }
    }
}

/// `(a, b)·(c, d) = (a, d)` if `b = c`, else zero.
pub fn b_multiply(x: BElement, y: BElement) -> BElement {
    match (x, y) {
        (BElement::Unit { i: a, j: b }, BElement::Unit { i: c, j: d }) if b == c => {
            BElement::Unit { i: a, j: d }
        }
        _ => BElement::Zero,
    }
}

pub fn b_invert(x: BElement) -> BElement {
    match x {
        BElement::Zero => BElement::Zero,
        BElement::Unit { i, j } => BElement::Unit { i: j, j: i },
    }
}

pub fn b_is_idempotent(x: BElement) -> bool {
    match x {
        BElement::Zero => true,
        BElement::Unit { i, j } => i == j,
    }
}

impl fmt::Display for BElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BElement::Zero => f.write_str("0"),
            BElement::Unit { i, j } => write!(f, "({i},{j})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Vec<BElement> {
        let mut all = vec![BElement::Zero];
        for i in 0..6 {
            for j in 0..6 {
                all.push(BElement::unit(i, j));
            }
        }
        all
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(
            b_multiply(BElement::unit(1, 2), BElement::unit(2, 5)),
            BElement::unit(1, 5)
        );
        assert_eq!(
            b_multiply(BElement::unit(1, 2), BElement::unit(3, 5)),
            BElement::Zero
        );
        assert_eq!(
            b_multiply(BElement::Zero, BElement::unit(1, 1)),
            BElement::Zero
        );
    }

    #[test]
    fn invert_examples() {
        assert_eq!(b_invert(BElement::unit(1, 2)), BElement::unit(2, 1));
        assert_eq!(b_invert(BElement::unit(3, 3)), BElement::unit(3, 3));
        assert_eq!(b_invert(BElement::Zero), BElement::Zero);
    }

    #[test]
    fn associative_and_inverse_on_small_indices() {
        let all = small();
        for &x in &all {
            let xi = b_invert(x);
            assert_eq!(b_multiply(b_multiply(x, xi), x), x);
            assert_eq!(b_is_idempotent(x), b_multiply(x, x) == x);
            for &y in &all {
                if b_is_idempotent(x) && b_is_idempotent(y) {
                    assert_eq!(b_multiply(x, y), b_multiply(y, x));
                }
                for &z in &all {
                    assert_eq!(
                        b_multiply(b_multiply(x, y), z),
                        b_multiply(x, b_multiply(y, z))
                    );
                }
            }
        }
    }

    #[test]
    fn json_form() {
        assert_eq!(
            serde_json::to_string(&BElement::unit(1, 3)).unwrap(),
            r#"{"kind":"unit","i":1,"j":3}"#
        );
        assert_eq!(
            serde_json::to_string(&BElement::Zero).unwrap(),
            r#"{"kind":"zero"}"#
        );
    }
}
