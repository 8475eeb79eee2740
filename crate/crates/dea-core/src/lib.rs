//! Data envelopment analysis on a dense simplex solver.
//!
//! * [`lp`]: linear programs, the two-phase simplex solver and (with the
//!   `oracle` feature) a brute-force vertex enumerator.
//! * [`models`]: the [`Dataset`](models::Dataset) panel and builders for the
//!   CCR, super-efficiency and slack-maximization programs.
//! * [`analysis`]: scores, weights, the CCR / super-efficiency relation
//!   classifier and panel reports.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod analysis;
pub mod lp;
pub mod models;
