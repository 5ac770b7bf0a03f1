use crate::lie_core::WeylGroup;

/// Even Betti numbers `b⁰, b², …` of an orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    pub b: Vec<u64>,
}

impl BettiVector {
    pub fn total(&self) -> u64 {
        self.b.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.b.iter().eq(self.b.iter().rev())
    }
}

/// Poincaré polynomial (in `t²`) of `W_S \ W_K`, counting minimal coset
/// representatives by length. `within` generates `W_K`; `subset ⊂ within`.
pub fn coset_poincare(weyl: &WeylGroup, subset: &[usize], within: &[usize]) -> Vec<u64> {
    let mut poly = Vec::new();
    for w in weyl.parabolic(within) {
        let len = weyl.elements[w].length();
        if subset.iter().all(|&s| weyl.elements[weyl.left_mul(s, w)].length() > len) {
            if poly.len() <= len {
                poly.resize(len + 1, 0);
            }
            poly[len] += 1;
        }
    }
    poly
}

/// Betti numbers of `G_μ₀\G` where `vanishing_walls` generate `W(G_μ₀)`.
pub fn betti_from_walls(weyl: &WeylGroup, vanishing_walls: &[usize]) -> BettiVector {
    let all: Vec<usize> = (0..weyl.rank()).collect();
    BettiVector { b: coset_poincare(weyl, vanishing_walls, &all) }
}

pub fn poly_mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}
