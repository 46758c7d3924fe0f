//! Doc-test shim for the book: each chapter of `book/src/` is included as a
//! module's documentation so `cargo test` runs every code snippet in it,
//! keeping the guide and the crate in sync.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}

#[doc = include_str!("../../../book/src/potentials.md")]
mod potentials {}

#[doc = include_str!("../../../book/src/radial-quantization.md")]
mod radial_quantization {}

#[doc = include_str!("../../../book/src/angular-momentum.md")]
mod angular_momentum {}

#[doc = include_str!("../../../book/src/wavefunctions.md")]
mod wavefunctions {}

#[doc = include_str!("../../../book/src/oracle.md")]
mod oracle {}

#[doc = include_str!("../../../book/src/routes-and-crosschecks.md")]
mod routes_and_crosschecks {}

#[doc = include_str!("../../../book/src/command-line.md")]
mod command_line {}
