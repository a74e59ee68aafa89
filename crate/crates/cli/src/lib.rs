//! Library surface of the `smallcat` command line tool: the structured text
//! document format, run reports, and the command implementations. The binary
//! is a thin argument-parsing wrapper over these modules; tests use them to
//! build fixtures and to read command outputs back.

pub mod commands;
pub mod docs;
pub mod report;
