//! Library surface of the `lpcoh` command line tool: the input file format
//! and the report schema, exposed so integration tests and downstream
//! tooling can parse what the binary emits.

pub mod input;
pub mod report;
