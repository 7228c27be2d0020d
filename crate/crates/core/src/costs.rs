//! Edit cost models: the six cost functions over node and edge labels.

use crate::error::{Error, Result};
use crate::graph::Label;

/// The six edit cost functions. Substitution of identical labels must cost 0
/// and all returned costs must be non-negative.
pub trait CostModel: Send + Sync {
    fn node_sub(&self, a: &Label, b: &Label) -> f64;
    fn node_del(&self, a: &Label) -> f64;
    fn node_ins(&self, b: &Label) -> f64;
    fn edge_sub(&self, a: &Label, b: &Label) -> f64;
    fn edge_del(&self, a: &Label) -> f64;
    fn edge_ins(&self, b: &Label) -> f64;
}

/// Distance-drawing cost model: 2-d vector node labels compared by scaled
/// Euclidean distance, unlabeled edges with flat deletion/insertion costs.
#[derive(Clone, Copy, Debug)]
pub struct LetterCosts {
    pub node_sub_scale: f64,
    pub node_del_ins: f64,
    pub edge_del_ins: f64,
}

impl Default for LetterCosts {
    fn default() -> Self {
        Self {
            node_sub_scale: 0.75,
            node_del_ins: 0.675,
            edge_del_ins: 0.425,
        }
    }
}

impl LetterCosts {
    pub fn new() -> Self {
        Self::default()
    }
}

fn euclidean(a: &Label, b: &Label) -> f64 {
    let (a, b) = match (a.as_vector(), b.as_vector()) {
        (Some(a), Some(b)) => (a, b),
        _ => panic!("LetterCosts requires vector node labels"),
    };
    assert_eq!(a.len(), b.len(), "node label dimensions differ");
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

impl CostModel for LetterCosts {
    fn node_sub(&self, a: &Label, b: &Label) -> f64 {
        self.node_sub_scale * euclidean(a, b)
    }

    fn node_del(&self, _a: &Label) -> f64 {
        self.node_del_ins
    }

    fn node_ins(&self, _b: &Label) -> f64 {
        self.node_del_ins
    }

    fn edge_sub(&self, _a: &Label, _b: &Label) -> f64 {
        // single edge symbol, substitution is always identity
        0.0
    }

    fn edge_del(&self, _a: &Label) -> f64 {
        self.edge_del_ins
    }

    fn edge_ins(&self, _b: &Label) -> f64 {
        self.edge_del_ins
    }
}

/// Constant costs: substitution costs the constant when the labels differ and
/// 0 when they are equal; deletions and insertions always cost their constant.
#[derive(Clone, Copy, Debug)]
pub struct ConstantCosts {
    sub_n: f64,
    del_n: f64,
    ins_n: f64,
    sub_e: f64,
    del_e: f64,
    ins_e: f64,
}

impl ConstantCosts {
    pub fn new(
        sub_n: f64,
        del_n: f64,
        ins_n: f64,
        sub_e: f64,
        del_e: f64,
        ins_e: f64,
    ) -> Result<Self> {
        for (name, c) in [
            ("sub_n", sub_n),
            ("del_n", del_n),
            ("ins_n", ins_n),
            ("sub_e", sub_e),
            ("del_e", del_e),
            ("ins_e", ins_e),
        ] {
            if !c.is_finite() || c < 0.0 {
                return Err(Error::InvalidCosts(format!("{name} = {c} must be >= 0")));
            }
        }
        Ok(Self {
            sub_n,
            del_n,
            ins_n,
            sub_e,
            del_e,
            ins_e,
        })
    }

    /// All six constants set to 1.
    pub fn uniform() -> Self {
        Self::new(1.0, 1.0, 1.0, 1.0, 1.0, 1.0).unwrap()
    }
}

impl CostModel for ConstantCosts {
    fn node_sub(&self, a: &Label, b: &Label) -> f64 {
        if a == b {
            0.0
        } else {
            self.sub_n
        }
    }

    fn node_del(&self, _a: &Label) -> f64 {
        self.del_n
    }

    fn node_ins(&self, _b: &Label) -> f64 {
        self.ins_n
    }

    fn edge_sub(&self, a: &Label, b: &Label) -> f64 {
        if a == b {
            0.0
        } else {
            self.sub_e
        }
    }

    fn edge_del(&self, _a: &Label) -> f64 {
        self.del_e
    }

    fn edge_ins(&self, _b: &Label) -> f64 {
        self.ins_e
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn letter_substitution_matches_hand_value() {
        let costs = LetterCosts::new();
        let a = Label::vector([0.69, 0.27]);
        let b = Label::vector([0.92, 0.32]);
        // 0.75 * sqrt(0.23^2 + 0.05^2)
        assert!((costs.node_sub(&a, &b) - 0.1765).abs() < 0.0005);
        assert_eq!(costs.node_sub(&a, &a), 0.0);
        assert_eq!(costs.edge_del(&Label::symbol("1")), 0.425);
        assert_eq!(costs.edge_ins(&Label::symbol("1")), 0.425);
        assert_eq!(costs.node_del(&a), 0.675);
    }

    #[test]
    fn constant_model_definition() {
        let m = ConstantCosts::uniform();
        let a = Label::symbol("a");
        let b = Label::symbol("b");
        assert_eq!(m.node_sub(&a, &b), 1.0);
        assert_eq!(m.node_sub(&a, &a), 0.0);

        let m = ConstantCosts::new(2.0, 3.0, 4.0, 5.0, 6.0, 7.0).unwrap();
        assert_eq!(m.node_del(&a), 3.0);
        assert_eq!(m.node_del(&b), 3.0);

        let m = ConstantCosts::new(0.0, 1.0, 1.0, 1.0, 1.0, 1.0).unwrap();
        assert_eq!(m.node_sub(&a, &b), 0.0);
    }

    #[test]
    fn negative_constant_is_rejected() {
        assert!(ConstantCosts::new(1.0, -0.5, 1.0, 1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn sampled_costs_are_nonnegative_and_zero_on_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let letter = LetterCosts::new();
        let constant = ConstantCosts::new(0.3, 0.7, 1.1, 0.2, 0.5, 0.9).unwrap();
        for _ in 0..200 {
            let a = Label::vector([rng.gen::<f64>() * 3.0, rng.gen::<f64>() * 3.0]);
            let b = Label::vector([rng.gen::<f64>() * 3.0, rng.gen::<f64>() * 3.0]);
            assert!(letter.node_sub(&a, &b) >= 0.0);
            assert_eq!(letter.node_sub(&b, &b), 0.0);
            let s = Label::symbol(format!("s{}", rng.gen_range(0..5)));
            let t = Label::symbol(format!("s{}", rng.gen_range(0..5)));
            assert!(constant.node_sub(&s, &t) >= 0.0);
            assert_eq!(constant.node_sub(&s, &s), 0.0);
            assert_eq!(constant.edge_sub(&t, &t), 0.0);
        }
    }
}
