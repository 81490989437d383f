//! Graph WBAs, free graded bialgebras, homogeneous quotients, and the RTT
//! family at roots of unity.

mod freemodel;
mod graph;
mod graphwba;
mod quotient;
mod rtt;

pub use freemodel::{free_letter_bialgebra, free_matrix_bialgebra, LetterSpec};
pub(crate) use freemodel::word_of_rank;
pub use graph::{enumerate_paths, DirectedGraph};
pub use graphwba::{build_graph_wba, GraphWba};
pub use quotient::{check_central, impose_relations, GradedQuotient};
pub use rtt::{level_q, quantum_determinant, rtt_coefficient, rtt_relations};
