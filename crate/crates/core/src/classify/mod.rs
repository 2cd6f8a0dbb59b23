pub mod decide;
pub mod profile;
pub mod system;

pub use decide::{
    build_link_system, decide_link, decide_link_profiles, decide_link_z2split, decide_tangle,
    decide_z2split_profiles, Check, Relation, Verdict,
};
pub use profile::InvariantProfile;
pub use system::{solve_congruence, CongruenceSystem, Row, Solution};
