//! Report types shared between the `dlv` binary and its end-to-end tests.

pub mod report;
