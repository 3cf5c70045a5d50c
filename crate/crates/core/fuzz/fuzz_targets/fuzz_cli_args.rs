#![no_main]

use clap::Parser;
use libfuzzer_sys::fuzz_target;
use trisectrix::cli::Cli;

// NUL-separated argument vector; parse only, never execute.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let args = std::iter::once("trisectrix").chain(text.split('\0'));
    let _ = Cli::try_parse_from(args);
});
