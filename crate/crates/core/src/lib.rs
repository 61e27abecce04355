//! Thompson's group V acting on Cantor space by prefix replacement, the
//! demonstrative embedding of the modular group `C2 * C3`, and pushdown
//! automata accepting the word problem of demonstrative subgroups.
//!
//! Elements act on the right: `p.compose(&q)` applies `p` first.

pub mod cantor;
pub mod demonstrative;
pub mod modular;
pub mod pda;
pub mod prm;

pub use cantor::{Barrier, BinaryWord, Bit, Dyadic, PrefixRelation};
pub use demonstrative::{DemonstrationReport, PingPongOutcome};
pub use modular::{GenSymbol, GeneratorMap, GroupWord, ModularPresentation};
pub use pda::{Pda, State, Transition};
pub use prm::Prm;
