//! Weyl groups of the supported families as substitution groups on torus
//! variables.

use super::{FiniteGroup, GroupElement, SignedMono};
use crate::algebra::VariableSet;

/// Supported group families. `A` is the symmetric-group action shared by
/// U(n) and SU(n); `B` and `C` share one substitution group (their root
/// systems differ only by long/short exchange); `SpinB`/`SpinD` act on the
/// extended variable set of the double cover; `G2` acts on the rank-3
/// determinant-one torus.
#[derive(Clone, Copy, PartialEq, Eq, Debug, serde::Serialize, serde::Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    SpinB,
    SpinD,
}

impl Family {
    pub fn parse(s: &str) -> Option<Family> {
        match s.to_ascii_lowercase().as_str() {
            "a" | "u" | "su" => Some(Family::A),
            "b" | "so-odd" => Some(Family::B),
            "c" | "sp" => Some(Family::C),
            "d" | "so-even" => Some(Family::D),
            "g2" => Some(Family::G2),
            "spinb" | "spin-odd" => Some(Family::SpinB),
            "spind" | "spin-even" => Some(Family::SpinD),
            _ => None,
        }
    }

    /// Expected group order at rank `n` (used as a construction check).
    pub fn weyl_order(&self, n: usize) -> usize {
        let fact = |k: usize| (1..=k).product::<usize>();
        match self {
            Family::A => fact(n),
            Family::B | Family::C | Family::SpinB => (1 << n) * fact(n),
            Family::D | Family::SpinD => (1 << (n - 1)) * fact(n),
            Family::G2 => 12,
        }
    }
}

#[derive(Debug, thiserror::Error)]
#[error("unsupported family/rank: {family:?} at rank {rank}")]
pub struct UnsupportedFamily {
    pub family: Family,
    pub rank: usize,
}

fn adjacent_transposition(vars: &VariableSet, j: usize) -> GroupElement {
    // Swap z_{j} and z_{j+1}, fix everything else (cover coordinate too).
    let h = vars.holo_count();
    let arity = vars.arity();
    let mut images: Vec<SignedMono> = (0..h).map(|v| SignedMono::var(arity, v)).collect();
    images.swap(j, j + 1);
    GroupElement::from_holo_images(vars, images)
}

fn plain_inversion(vars: &VariableSet, j: usize) -> GroupElement {
    // z_j -> z_j^{-1}.
    let h = vars.holo_count();
    let arity = vars.arity();
    let mut images: Vec<SignedMono> = (0..h).map(|v| SignedMono::var(arity, v)).collect();
    images[j].exps[j] = -1;
    GroupElement::from_holo_images(vars, images)
}

fn spin_inversion(vars: &VariableSet, j: usize) -> GroupElement {
    // (z_j, z) -> (z_j^{-1}, z z_j^{-1}).
    let h = vars.holo_count();
    let arity = vars.arity();
    let spin = vars.spin_index().expect("spin coordinate required");
    let mut images: Vec<SignedMono> = (0..h).map(|v| SignedMono::var(arity, v)).collect();
    images[j].exps[j] = -1;
    images[spin].exps[j] = -1;
    GroupElement::from_holo_images(vars, images)
}

fn full_inversion(vars: &VariableSet) -> GroupElement {
    // z_j -> z_j^{-1} simultaneously for every base coordinate.
    let h = vars.holo_count();
    let arity = vars.arity();
    let mut images: Vec<SignedMono> = (0..h).map(|v| SignedMono::var(arity, v)).collect();
    for (j, im) in images.iter_mut().enumerate().take(vars.n_base()) {
        im.exps[j] = -1;
    }
    GroupElement::from_holo_images(vars, images)
}

/// The deck transformation of the double cover: `z -> -z`, base coordinates
/// fixed. Not a Weyl element; exposed for the spin-model bookkeeping.
pub fn deck_transformation(vars: &VariableSet) -> GroupElement {
    let h = vars.holo_count();
    let arity = vars.arity();
    let spin = vars.spin_index().expect("spin coordinate required");
    let mut images: Vec<SignedMono> = (0..h).map(|v| SignedMono::var(arity, v)).collect();
    images[spin].negative = true;
    GroupElement::from_holo_images(vars, images)
}

/// Builds the Weyl group of the given family at rank `n`, acting on the
/// appropriate variable set. The returned group's order is checked against
/// the classical count.
pub fn build_weyl_group(family: Family, n: usize) -> Result<FiniteGroup, UnsupportedFamily> {
    let fail = || UnsupportedFamily { family, rank: n };
    let group = match family {
        Family::A => {
            if n == 0 {
                return Err(fail());
            }
            let vars = VariableSet::new(n);
            let gens = (0..n.saturating_sub(1))
                .map(|j| adjacent_transposition(&vars, j))
                .collect();
            FiniteGroup::new(vars, gens)
        }
        Family::B | Family::C => {
            if n == 0 {
                return Err(fail());
            }
            let vars = VariableSet::new(n);
            let mut gens: Vec<GroupElement> = (0..n - 1)
                .map(|j| adjacent_transposition(&vars, j))
                .collect();
            gens.extend((0..n).map(|j| plain_inversion(&vars, j)));
            FiniteGroup::new(vars, gens)
        }
        Family::D => {
            if n < 2 {
                return Err(fail());
            }
            let vars = VariableSet::new(n);
            let mut gens: Vec<GroupElement> = (0..n - 1)
                .map(|j| adjacent_transposition(&vars, j))
                .collect();
            // Even sign changes are generated by paired inversions; build
            // the group as the kernel of the sign-product homomorphism via
            // the O(n) generator description.
            for j in 0..n - 1 {
                gens.push(plain_inversion(&vars, j).compose(&plain_inversion(&vars, j + 1)));
            }
            FiniteGroup::new(vars, gens)
        }
        Family::SpinB => {
            if n == 0 {
                return Err(fail());
            }
            let vars = VariableSet::with_spin(n);
            let mut gens: Vec<GroupElement> = (0..n.saturating_sub(1))
                .map(|j| adjacent_transposition(&vars, j))
                .collect();
            gens.extend((0..n).map(|j| spin_inversion(&vars, j)));
            FiniteGroup::new(vars, gens)
        }
        Family::SpinD => {
            if n < 2 {
                return Err(fail());
            }
            let vars = VariableSet::with_spin(n);
            let mut gens: Vec<GroupElement> = (0..n - 1)
                .map(|j| adjacent_transposition(&vars, j))
                .collect();
            for j in 0..n - 1 {
                gens.push(spin_inversion(&vars, j).compose(&spin_inversion(&vars, j + 1)));
            }
            FiniteGroup::new(vars, gens)
        }
        Family::G2 => {
            if n != 3 && n != 2 {
                return Err(fail());
            }
            // Realized on the rank-3 determinant-one torus: the symmetric
            // group on three coordinates extended by the full inversion.
            let vars = VariableSet::new(3);
            let mut gens: Vec<GroupElement> =
                (0..2).map(|j| adjacent_transposition(&vars, j)).collect();
            gens.push(full_inversion(&vars));
            FiniteGroup::new(vars, gens)
        }
    };
    let expected = match family {
        Family::G2 => 12,
        _ => family.weyl_order(n),
    };
    debug_assert_eq!(group.order(), expected, "unexpected group order");
    Ok(group)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_orders() {
        assert_eq!(build_weyl_group(Family::A, 3).unwrap().order(), 6);
        assert_eq!(build_weyl_group(Family::C, 2).unwrap().order(), 8);
        assert_eq!(build_weyl_group(Family::B, 3).unwrap().order(), 48);
        assert_eq!(build_weyl_group(Family::D, 3).unwrap().order(), 24);
        assert_eq!(build_weyl_group(Family::SpinB, 2).unwrap().order(), 8);
        assert_eq!(build_weyl_group(Family::SpinD, 3).unwrap().order(), 24);
        assert_eq!(build_weyl_group(Family::G2, 3).unwrap().order(), 12);
    }

    #[test]
    fn unsupported_ranks_rejected() {
        assert!(build_weyl_group(Family::D, 1).is_err());
        assert!(build_weyl_group(Family::A, 0).is_err());
        assert!(build_weyl_group(Family::G2, 5).is_err());
    }

    #[test]
    fn deck_commutes_with_weyl_generators() {
        let g = build_weyl_group(Family::SpinB, 2).unwrap();
        let deck = deck_transformation(g.vars());
        for gen in g.generators() {
            assert_eq!(deck.compose(gen), gen.compose(&deck));
        }
    }
}
