//! Rank witness trees over the `dcfl_seq` language.
//!
//! Words of {0,1}* encode tuples of naturals; the parameter word 2·1^i·0^(r+1)
//! tests whether the i-th component from the end of the encoded tuple equals
//! r. Conjunctions of such tests over a tuple σ are therefore satisfiable
//! (any word whose trailing components spell σ reversed realizes them), and
//! two conjunctions that disagree on their last test exclude each other. A
//! full branching tree of verified realizers is finite evidence that the
//! refinement process never bottoms out.

use serde::Serialize;

use crate::alphabet::Word;
use crate::error::{Error, Result};
use crate::oracles::MembershipOracle;

#[derive(Debug, Clone, Serialize)]
pub struct WitnessNode {
    /// The tuple addressing this node: child n of σ is σ⌢n.
    pub sigma: Vec<usize>,
    /// A word satisfying every test in `params`.
    pub realizer: Word,
    /// Parameter words 2·1^i·0^(σ_i + 1) for i < |σ|.
    pub params: Vec<Word>,
    pub children: Vec<WitnessNode>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessTree {
    pub depth: usize,
    pub branching: usize,
    pub node_count: usize,
    pub root: WitnessNode,
}

/// Builds the full `branching`-ary tree of depth `depth` with verified
/// realizers, over the built-in `dcfl_seq` oracle. Requires depth ≥ 1 and
/// branching ≥ 2.
pub fn witness_tree(depth: usize, branching: usize) -> Result<WitnessTree> {
    if depth < 1 {
        return Err(Error::InvalidInput("witness tree depth must be at least 1".into()));
    }
    if branching < 2 {
        return Err(Error::InvalidInput(
            "witness tree branching must be at least 2".into(),
        ));
    }
    let oracle = MembershipOracle::dcfl_seq();
    let root = build_node(&oracle, Vec::new(), depth, branching);
    let node_count = (0..=depth).map(|d| branching.pow(d as u32)).sum();
    let tree = WitnessTree {
        depth,
        branching,
        node_count,
        root,
    };
    debug_assert!(tree.verify());
    Ok(tree)
}

fn build_node(
    oracle: &MembershipOracle,
    sigma: Vec<usize>,
    depth: usize,
    branching: usize,
) -> WitnessNode {
    // Realizer: the tuple σ reversed, so that component i from the end is σ_i.
    let reversed: Vec<usize> = sigma.iter().rev().copied().collect();
    let realizer = MembershipOracle::encode_tuple(&reversed);
    let params = (0..sigma.len())
        .map(|i| param_word(oracle, i, sigma[i]))
        .collect();
    let children = if sigma.len() < depth {
        (0..branching)
            .map(|n| {
                let mut child = sigma.clone();
                child.push(n);
                build_node(oracle, child, depth, branching)
            })
            .collect()
    } else {
        Vec::new()
    };
    WitnessNode {
        sigma,
        realizer,
        params,
        children,
    }
}

/// The word 2·1^i·0^(value + 1).
fn param_word(oracle: &MembershipOracle, i: usize, value: usize) -> Word {
    let mut indices = vec![2u8];
    indices.extend(std::iter::repeat_n(1, i));
    indices.extend(std::iter::repeat_n(0, value + 1));
    Word::from_indices(oracle.alphabet(), indices)
}

impl WitnessTree {
    /// Re-checks the whole tree against the oracle: every realizer satisfies
    /// all of its node's tests, sibling tuples differ in their last
    /// coordinate, and no sibling's realizer satisfies another sibling's
    /// final test.
    pub fn verify(&self) -> bool {
        let oracle = MembershipOracle::dcfl_seq();
        verify_node(&oracle, &self.root, self.depth, self.branching)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("tree serialization cannot fail")
    }
}

fn verify_node(
    oracle: &MembershipOracle,
    node: &WitnessNode,
    depth: usize,
    branching: usize,
) -> bool {
    if node.params.len() != node.sigma.len() {
        return false;
    }
    for param in &node.params {
        match oracle.decide(&node.realizer.concat(param)) {
            Ok(true) => {}
            _ => return false,
        }
    }
    if node.sigma.len() < depth {
        if node.children.len() != branching {
            return false;
        }
        for (n, child) in node.children.iter().enumerate() {
            if child.sigma.last() != Some(&n) {
                return false;
            }
        }
        // Pairwise exclusion: a realizer of one child fails the final test
        // of every other child.
        for a in &node.children {
            for b in &node.children {
                if a.sigma == b.sigma {
                    continue;
                }
                let last = b.params.last().expect("children have at least one test");
                if oracle.decide(&a.realizer.concat(last)) != Ok(false) {
                    return false;
                }
            }
        }
        node.children
            .iter()
            .all(|c| verify_node(oracle, c, depth, branching))
    } else {
        node.children.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn depth_one_tree_has_expected_nodes() {
        let tree = witness_tree(1, 2).unwrap();
        assert_eq!(tree.node_count, 3);
        assert_eq!(tree.root.children.len(), 2);
        let first = &tree.root.children[0];
        assert_eq!(first.sigma, vec![0]);
        assert_eq!(first.realizer.to_string(), "_");
        assert_eq!(first.params[0].to_string(), "20");
        assert!(tree.verify());
    }

    #[test]
    fn depth_one_branch_three_has_four_nodes() {
        let tree = witness_tree(1, 3).unwrap();
        assert_eq!(tree.node_count, 4);
        assert!(tree.verify());
    }

    #[test]
    fn depth_two_leaves_encode_reversed_tuples() {
        let tree = witness_tree(2, 2).unwrap();
        assert_eq!(tree.node_count, 7);
        for child in &tree.root.children {
            for leaf in &child.children {
                // Leaf (σ0, σ1) realizes the word 0^(σ1) 1 0^(σ0).
                let expected =
                    MembershipOracle::encode_tuple(&[leaf.sigma[1], leaf.sigma[0]]);
                assert_eq!(leaf.realizer, expected);
            }
        }
        assert!(tree.verify());
    }

    #[test]
    fn guards_on_degenerate_shapes() {
        assert!(witness_tree(0, 2).is_err());
        assert!(witness_tree(1, 1).is_err());
    }
}
