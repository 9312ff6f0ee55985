pub mod affine;
pub mod equiv;
pub mod error;
pub mod ideals;
pub mod orbits;
pub mod partition;
pub mod rootsys;
pub mod signtypes;
pub mod typea;

pub use error::{Counterexample, Error, Result};

#[cfg(doctest)]
mod guide {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/roots.md")]
    mod roots {}
    #[doc = include_str!("../../../book/src/ideals.md")]
    mod ideals {}
    #[doc = include_str!("../../../book/src/affine.md")]
    mod affine {}
    #[doc = include_str!("../../../book/src/signtypes.md")]
    mod signtypes {}
    #[doc = include_str!("../../../book/src/orbits.md")]
    mod orbits {}
    #[doc = include_str!("../../../book/src/windows.md")]
    mod windows {}
    #[doc = include_str!("../../../book/src/equiv.md")]
    mod equiv {}
}
