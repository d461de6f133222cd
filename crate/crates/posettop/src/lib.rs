//! Command-line front end, JSON formats and the reproduction suite for
//! [`posettop_core`].

pub mod cli;
pub mod io;
pub mod verify;
