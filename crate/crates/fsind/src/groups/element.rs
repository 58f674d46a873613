//! Elements written in the normal form `a^i b^j`.

use std::fmt;

/// A group element `a^i b^j`. For metacyclic groups `i` runs modulo `k` and
/// `j` modulo `ql`; for quaternion groups `i` runs modulo `2n` and `j` is 0
/// or 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub i: u64,
    pub j: u64,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { i: 0, j: 0 };

    pub fn new(i: u64, j: u64) -> GroupElement {
        GroupElement { i, j }
    }

    pub fn is_identity(&self) -> bool {
        self.i == 0 && self.j == 0
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.i, self.j) {
            (0, 0) => write!(f, "e"),
            (i, 0) => write!(f, "a{i}"),
            (0, j) => write!(f, "b{j}"),
            (i, j) => write!(f, "a{i}b{j}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_forms() {
        assert_eq!(GroupElement::IDENTITY.to_string(), "e");
        assert_eq!(GroupElement::new(3, 0).to_string(), "a3");
        assert_eq!(GroupElement::new(0, 2).to_string(), "b2");
        assert_eq!(GroupElement::new(3, 2).to_string(), "a3b2");
    }
}
