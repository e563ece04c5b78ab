//! Maps sending pure excedances to cycles.

use crate::error::Result;
use crate::perm::Permutation;

use super::lambda::lambda_map;
use super::phi::phi;

/// `T⁻¹ ∘ λ` on derangements: `cyc ψ(π) = pex π`, and the image is again a
/// derangement.
pub fn psi(p: &Permutation) -> Result<Permutation> {
    Ok(lambda_map(p)?.to_permutation())
}

/// `φ ∘ T⁻¹ ∘ λ`: composing with `φ` as well breaks `cyc = pex`
/// (already for `3 1 2`). Kept as a foil for [`psi`].
pub fn psi_phi_variant(p: &Permutation) -> Result<Permutation> {
    Ok(phi(&psi(p)?))
}

/// Extends [`psi`] to all permutations: strip the fixed points, map the
/// derangement that is left, put the fixed points back.
///
/// `pex π = pcyc ψ̄(π)` and `fix π = fix ψ̄(π)`.
pub fn psi_bar(p: &Permutation) -> Permutation {
    let (core, fixed) = p.strip_fixed_points();
    let image = psi(&core).expect("stripping fixed points leaves a derangement");
    Permutation::insert_fixed_points(&image, &fixed).expect("psi maps derangements to derangements")
}
