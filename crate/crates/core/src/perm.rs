//! Permutations of the four strand labels and the characters θ₁, θ₂.

use std::fmt;

/// A permutation of `{1, 2, 3, 4}`, stored 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation([u8; 4]);

impl Permutation {
    pub const IDENTITY: Permutation = Permutation([0, 1, 2, 3]);

    /// Builds a permutation from its 1-based image list `[σ(1), σ(2), σ(3), σ(4)]`.
    pub fn from_images(images: [u8; 4]) -> Option<Self> {
        let mut seen = [false; 4];
        let mut out = [0u8; 4];
        for (slot, &v) in out.iter_mut().zip(images.iter()) {
            if !(1..=4).contains(&v) || seen[(v - 1) as usize] {
                return None;
            }
            seen[(v - 1) as usize] = true;
            *slot = v - 1;
        }
        Some(Permutation(out))
    }

    /// The transposition of two 1-based labels.
    pub fn transposition(a: u8, b: u8) -> Self {
        assert!((1..=4).contains(&a) && (1..=4).contains(&b));
        let mut img = [0, 1, 2, 3];
        img.swap((a - 1) as usize, (b - 1) as usize);
        Permutation(img)
    }

    /// 1-based image of a 1-based label.
    pub fn apply(&self, label: u8) -> u8 {
        self.0[(label - 1) as usize] + 1
    }

    /// 0-based image of a 0-based index.
    pub fn image(&self, index: usize) -> usize {
        self.0[index] as usize
    }

    pub fn images(&self) -> [u8; 4] {
        self.0.map(|v| v + 1)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.map(|i| self.0[i as usize]))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = [0u8; 4];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation(inv)
    }

    /// +1 for even permutations, −1 for odd.
    pub fn sign(&self) -> i8 {
        let mut inversions = 0;
        for i in 0..4 {
            for j in (i + 1)..4 {
                if self.0[i] > self.0[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// Membership in the Klein four-group `{e, (12)(34), (13)(24), (14)(23)}`.
    pub fn is_klein(&self) -> bool {
        klein_four().contains(self)
    }

    /// All 24 permutations in lexicographic order of image lists.
    pub fn all() -> Vec<Permutation> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4u8 {
            for b in 0..4u8 {
                for c in 0..4u8 {
                    for d in 0..4u8 {
                        let img = [a, b, c, d];
                        let mut seen = [false; 4];
                        if img.iter().all(|&v| !std::mem::replace(&mut seen[v as usize], true)) {
                            out.push(Permutation(img));
                        }
                    }
                }
            }
        }
        out
    }

    /// Parses cycle notation such as `"(1 2)(3 4)"`, `"(1,3)"` or `"e"`.
    pub fn parse_cycles(text: &str) -> Option<Permutation> {
        let t = text.trim();
        if t.is_empty() || t == "e" || t == "id" || t == "()" {
            return Some(Permutation::IDENTITY);
        }
        let mut result = Permutation::IDENTITY;
        let mut rest = t;
        while !rest.is_empty() {
            rest = rest.trim_start();
            let inner_end = rest.find(')')?;
            if !rest.starts_with('(') {
                return None;
            }
            let labels: Vec<u8> = rest[1..inner_end]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<u8>().ok())
                .collect::<Option<_>>()?;
            let mut used = [false; 4];
            for &l in &labels {
                if !(1..=4).contains(&l) || std::mem::replace(&mut used[(l - 1) as usize], true) {
                    return None;
                }
            }
            let mut img = [0u8, 1, 2, 3];
            for (k, &l) in labels.iter().enumerate() {
                let next = labels[(k + 1) % labels.len()];
                img[(l - 1) as usize] = next - 1;
            }
            let cycle = Permutation(img);
            // Cycles written left to right act right to left.
            result = result.compose(&cycle);
            rest = &rest[inner_end + 1..];
        }
        Some(result)
    }
}

impl Default for Permutation {
    fn default() -> Self {
        Permutation::IDENTITY
    }
}

/// The Klein four-group as a list.
pub fn klein_four() -> [Permutation; 4] {
    [
        Permutation::IDENTITY,
        Permutation([1, 0, 3, 2]),
        Permutation([2, 3, 0, 1]),
        Permutation([3, 2, 1, 0]),
    ]
}

impl fmt::Display for Permutation {
    /// Disjoint-cycle notation, `e` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut visited = [false; 4];
        let mut wrote = false;
        for start in 0..4 {
            if visited[start] || self.0[start] as usize == start {
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !visited[i] {
                visited[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.0[i] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "e")?;
        }
        Ok(())
    }
}

/// The pair `(θ₁, θ₂)`, each exactly ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThetaValue {
    pub theta1: i8,
    pub theta2: i8,
}

/// θ₁ is +1 iff σ preserves the unordered partition `{{1,3},{2,4}}`; θ₂ is the sign of σ.
pub fn theta(sigma: &Permutation) -> ThetaValue {
    let a = [sigma.image(0), sigma.image(2)];
    let preserves = matches!(a, [0, 2] | [2, 0] | [1, 3] | [3, 1]);
    ThetaValue {
        theta1: if preserves { 1 } else { -1 },
        theta2: sigma.sign(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(s: &str) -> Permutation {
        Permutation::parse_cycles(s).unwrap()
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&Permutation::IDENTITY), ThetaValue { theta1: 1, theta2: 1 });
        assert_eq!(theta(&cyc("(1 2)(3 4)")), ThetaValue { theta1: 1, theta2: 1 });
        assert_eq!(theta(&cyc("(1 2)")), ThetaValue { theta1: -1, theta2: -1 });
    }

    #[test]
    fn theta_trivial_on_klein_four() {
        for v in klein_four() {
            assert_eq!(theta(&v), ThetaValue { theta1: 1, theta2: 1 }, "{v}");
        }
    }

    #[test]
    fn group_axioms() {
        let all = Permutation::all();
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().filter(|p| p.is_even()).count(), 12);
        for a in &all {
            assert_eq!(a.compose(&a.inverse()), Permutation::IDENTITY);
            for b in &all {
                assert_eq!(a.compose(b).sign(), a.sign() * b.sign());
                for l in 1..=4 {
                    assert_eq!(a.compose(b).apply(l), a.apply(b.apply(l)));
                }
            }
        }
    }

    #[test]
    fn cycle_notation_round_trip() {
        for p in Permutation::all() {
            assert_eq!(cyc(&p.to_string()), p, "{p}");
        }
        assert_eq!(cyc("(1,2)"), Permutation::transposition(1, 2));
        assert_eq!(cyc("(1 2 3)").apply(1), 2);
        assert_eq!(cyc("(1 2 3)").apply(3), 1);
        assert!(Permutation::parse_cycles("(1 5)").is_none());
        assert!(Permutation::parse_cycles("(1 1)").is_none());
    }

    #[test]
    fn from_images_rejects_non_bijections() {
        assert!(Permutation::from_images([1, 1, 3, 4]).is_none());
        assert!(Permutation::from_images([0, 1, 2, 3]).is_none());
        assert_eq!(Permutation::from_images([2, 1, 3, 4]).unwrap(), Permutation::transposition(1, 2));
    }
}
