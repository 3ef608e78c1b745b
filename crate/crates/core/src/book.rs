// Chapters of the guide in book/, compiled as doctests so the snippets stay
// in step with the library.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}

#[doc = include_str!("../../../book/src/partitions.md")]
mod partitions {}

#[doc = include_str!("../../../book/src/kostant.md")]
mod kostant {}

#[doc = include_str!("../../../book/src/tableaux.md")]
mod tableaux {}

#[doc = include_str!("../../../book/src/lr.md")]
mod lr {}

#[doc = include_str!("../../../book/src/symfunc.md")]
mod symfunc {}

#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}

#[doc = include_str!("../../../README.md")]
mod readme {}
