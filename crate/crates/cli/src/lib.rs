//! Text formats, a seeded instance generator and solution verification on top
//! of `dualfvs-core`.

pub mod format;
pub mod generate;
pub mod verify;

pub use format::{
    decode_digraph, decode_family, decode_instance, decode_solution, encode_digraph, encode_family,
    encode_instance, encode_reduced, encode_reps, encode_solution, FormatError,
};
pub use generate::{generate_instance, GeneratorConfig};
pub use verify::{verify_solution, ColorCheck, VerifyMode, VerifyReport};
