use alloc::boxed::Box;
use alloc::vec::Vec;

use super::random::{unit_f64, Rng};
use super::table::project;
use super::check_coordinate;
use crate::{Error, Result, TruthTable};

/// A decision tree over 1-based coordinates. A tree of depth `k` has
/// Fourier degree at most `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecisionTree {
    Leaf(bool),
    Node {
        var: usize,
        zero: Box<DecisionTree>,
        one: Box<DecisionTree>,
    },
}

impl DecisionTree {
    pub fn evaluate(&self, x: usize) -> bool {
        let mut node = self;
        loop {
            match node {
                DecisionTree::Leaf(b) => return *b,
                DecisionTree::Node { var, zero, one } => {
                    node = if x >> (var - 1) & 1 == 1 { one } else { zero };
                }
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            DecisionTree::Leaf(_) => 0,
            DecisionTree::Node { zero, one, .. } => 1 + zero.depth().max(one.depth()),
        }
    }

    fn max_var(&self) -> usize {
        match self {
            DecisionTree::Leaf(_) => 0,
            DecisionTree::Node { var, zero, one } => (*var).max(zero.max_var()).max(one.max_var()),
        }
    }

    pub fn to_table(&self, n: usize) -> Result<TruthTable> {
        let top = self.max_var();
        if top > n {
            return Err(Error::CoordinateOutOfRange { i: top, n });
        }
        TruthTable::from_fn(n, |x| self.evaluate(x))
    }

    /// A complete tree of the given depth over `n` variables. Each internal
    /// node queries a uniformly chosen variable not yet queried on its path;
    /// leaves are fair coin flips.
    pub fn random(n: usize, depth: usize, rng: &mut Rng) -> Result<Self> {
        if depth > n {
            return Err(Error::InvalidArgument(alloc::format!(
                "tree depth {depth} exceeds variable count {n}"
            )));
        }
        let mut used = Vec::with_capacity(depth);
        Ok(Self::grow(n, depth, &mut used, rng))
    }

    fn grow(n: usize, depth: usize, used: &mut Vec<usize>, rng: &mut Rng) -> Self {
        if depth == 0 {
            return DecisionTree::Leaf(unit_f64(rng) < 0.5);
        }
        let free: Vec<usize> = (1..=n).filter(|v| !used.contains(v)).collect();
        let var = free[(unit_f64(rng) * free.len() as f64) as usize];
        used.push(var);
        let zero = Self::grow(n, depth - 1, used, rng);
        let one = Self::grow(n, depth - 1, used, rng);
        used.pop();
        DecisionTree::Node {
            var,
            zero: Box::new(zero),
            one: Box::new(one),
        }
    }
}

/// The function on `n` variables that applies `inner` to the listed
/// coordinates (in order) and ignores the rest.
pub fn junta(n: usize, coords: &[usize], inner: &TruthTable) -> Result<TruthTable> {
    if coords.len() != inner.n() {
        return Err(Error::InvalidArgument(alloc::format!(
            "junta lists {} coordinates for an inner function on {} variables",
            coords.len(),
            inner.n()
        )));
    }
    for &c in coords {
        check_coordinate(c, n)?;
    }
    TruthTable::from_fn(n, |x| inner.bit(project(x, coords)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfn::{dictator, mux3};
    use rand_core::SeedableRng;

    #[test]
    fn mux3_as_tree() {
        let t = DecisionTree::Node {
            var: 1,
            zero: Box::new(DecisionTree::Node {
                var: 3,
                zero: Box::new(DecisionTree::Leaf(false)),
                one: Box::new(DecisionTree::Leaf(true)),
            }),
            one: Box::new(DecisionTree::Node {
                var: 2,
                zero: Box::new(DecisionTree::Leaf(false)),
                one: Box::new(DecisionTree::Leaf(true)),
            }),
        };
        assert_eq!(t.depth(), 2);
        assert_eq!(t.to_table(3).unwrap(), mux3().unwrap());
        assert!(t.to_table(2).is_err());
    }

    #[test]
    fn random_trees_have_requested_depth() {
        let mut rng = Rng::seed_from_u64(3);
        for depth in 0..=4 {
            let t = DecisionTree::random(6, depth, &mut rng).unwrap();
            assert_eq!(t.depth(), depth);
        }
        assert!(DecisionTree::random(2, 3, &mut rng).is_err());
    }

    #[test]
    fn junta_embeds_dictator() {
        let d1 = dictator(1, 1).unwrap();
        assert_eq!(junta(4, &[3], &d1).unwrap(), dictator(4, 3).unwrap());
        assert!(junta(4, &[5], &d1).is_err());
        assert!(junta(4, &[1, 2], &d1).is_err());
    }
}
