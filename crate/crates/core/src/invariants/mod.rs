pub mod group;
pub mod pi1;
pub mod snf;
pub mod topology;

pub use group::{AbelianGroup, GroupPresentation};
pub use pi1::pi1_presentation;
pub use topology::{euler_char, euler_char_closed, euler_char_relative, h1_closed, h1_spine_relative, homology_4sphere_check, HomologySphereVerdict};
