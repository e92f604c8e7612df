pub mod braidsties;
pub mod combinatorics;
pub mod expr;
pub mod linalg;
pub mod report;
pub mod scalars;
pub mod symgroup;
pub mod tensorrep;
pub mod verify;
pub mod yokonuma;
