pub mod cases;
pub mod channel;
pub mod cli;
pub mod code;
pub mod decoder;
pub mod error;
pub mod parallel;
pub mod syndrome;
pub mod verify;
pub mod word;
pub mod worked;
