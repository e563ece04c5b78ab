//! Bijections on permutations and derangements, addressable by name.

mod foata;
mod lambda;
mod phi;
mod psi;

use std::fmt;
use std::str::FromStr;

pub use foata::{cycle_word, cycle_word_inverse, foata, foata_inverse};
pub use lambda::{
    free_square_grid, lambda_inv, lambda_inv_capped, lambda_map, lambda_with_grid, FreeSquareGrid,
    GridColumn, LambdaTable, LAMBDA_INV_CAP, LAMBDA_TABLE_CAP,
};
pub use phi::{des2_decompose, phi, phi_inv, Des2Block, Des2Decomposition};
pub use psi::{psi, psi_bar, psi_phi_variant};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::transposition::TranspositionArray;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bijection {
    Phi,
    PhiInv,
    Lambda,
    LambdaInv,
    Psi,
    PsiPhi,
    PsiBar,
    Foata,
}

impl Bijection {
    pub const ALL: [Bijection; 8] = [
        Self::Phi,
        Self::PhiInv,
        Self::Lambda,
        Self::LambdaInv,
        Self::Psi,
        Self::PsiPhi,
        Self::PsiBar,
        Self::Foata,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Phi => "phi",
            Self::PhiInv => "phi-inv",
            Self::Lambda => "lambda",
            Self::LambdaInv => "lambda-inv",
            Self::Psi => "psi",
            Self::PsiPhi => "psi-phi",
            Self::PsiBar => "psi-bar",
            Self::Foata => "foata",
        }
    }

    /// Parses `input` (a transposition array for `lambda-inv`, a permutation
    /// otherwise) and applies the map.
    pub fn apply_str(self, input: &str) -> Result<Image> {
        match self {
            Self::LambdaInv => Ok(Image::Permutation(lambda_inv(&input.parse()?)?)),
            other => other.apply(&input.parse()?),
        }
    }

    /// Applies the map to a permutation. `lambda-inv` has no permutation
    /// domain; use [`apply_str`](Self::apply_str) or [`lambda_inv`].
    pub fn apply(self, p: &Permutation) -> Result<Image> {
        use Image::Permutation as P;
        Ok(match self {
            Self::Phi => P(phi(p)),
            Self::PhiInv => P(phi_inv(p)),
            Self::Lambda => Image::Array(lambda_map(p)?),
            Self::LambdaInv => return Err(Error::WrongDomain("lambda-inv", "transposition array")),
            Self::Psi => P(psi(p)?),
            Self::PsiPhi => P(psi_phi_variant(p)?),
            Self::PsiBar => P(psi_bar(p)),
            Self::Foata => P(foata(p)),
        })
    }
}

/// Output of a named bijection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Image {
    Permutation(Permutation),
    Array(TranspositionArray),
}

impl fmt::Display for Image {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Permutation(p) => p.fmt(f),
            Self::Array(t) => t.fmt(f),
        }
    }
}

impl fmt::Display for Bijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Bijection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|b| b.as_str() == s)
            .ok_or_else(|| Error::UnknownBijection(s.to_owned()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for b in Bijection::ALL {
            assert_eq!(b.as_str().parse::<Bijection>(), Ok(b));
        }
        assert!("chi".parse::<Bijection>().is_err());
    }

    #[test]
    fn apply_str_dispatch() {
        let image = |b: Bijection, s: &str| b.apply_str(s).unwrap().to_string();
        assert_eq!(
            image(Bijection::Phi, "1 2 5 3 4 6 8 7 9"),
            "1 2 4 5 3 6 8 7 9"
        );
        assert_eq!(
            image(Bijection::Lambda, "6 8 12 5 4 7 3 2 11 1 9 10"),
            "1 1 2 4 4 2 1 1 9 1 9 10"
        );
        assert_eq!(image(Bijection::LambdaInv, "1 1 2"), "3 1 2");
        // 1 1 2 is not a bijection of 1..3, but it is a valid array
        assert_eq!(image(Bijection::LambdaInv, "1 1 1"), "2 3 1");
        assert_eq!(
            Bijection::Lambda.apply_str("1 3 2"),
            Err(Error::NotDerangement(1))
        );
        assert!(matches!(
            Bijection::LambdaInv.apply(&Permutation::identity(2)),
            Err(Error::WrongDomain(..))
        ));
    }
}
