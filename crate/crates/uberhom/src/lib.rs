//! Überhomology of finite simplicial complexes and bold homology of simple
//! graphs, over exact field coefficients.
//!
//! Given a simplicial complex `X` with `m` ordered vertices, every bi-colouring
//! `ε ∈ {0,1}^m` of the vertices splits the simplicial boundary operator into a
//! weight-preserving part `∂_h` and a weight-dropping part. The homology of
//! `∂_h` is the *horizontal homology* of `(X, ε)`, bigraded by simplex dimension
//! and weight (the number of 0-coloured vertices). Summing horizontal homologies
//! over the Boolean poset of all `2^m` colourings, with signed transition maps
//! along covering relations, yields a chain complex whose homology is the
//! triply-graded *überhomology* `Ḧ^j_{i,k}(X)`.
//!
//! For a graph `G` (viewed as a 1-dimensional complex) the bidegree-(0,0) slice
//! of überhomology is the *bold homology* `𝐇(G)`: the homology of the complex
//! spanned, in degree `i`, by connected components of the subgraphs induced by
//! the 1-coloured vertices of level-`i` colourings. Bold homology retracts onto
//! the much smaller complex spanned by connected dominating sets, its Euler
//! characteristic equals the connected domination polynomial evaluated at `-1`,
//! and it vanishes on trees and on disconnected graphs.
//!
//! The crate provides:
//!
//! * [`linalg`] — exact rank/kernel/coordinate computations over GF(2)
//!   (bit-packed), GF(p) for primes `p < 2^16`, and ℚ;
//! * [`complex`] — graded chain complexes with labelled bases, homology,
//!   induced maps on homology and Euler characteristics;
//! * [`morse`] — algebraic Morse theory: matchings, acyclicity certificates
//!   (including a layered certificate) and zig-zag reduction;
//! * [`simplicial`] — simplicial complexes, bi-colourings, weights, horizontal
//!   complexes and the chain maps induced by injective coloured maps;
//! * [`uber`] — Boolean-poset sign assignments and the überhomology pipeline;
//! * [`bold`] — bold complexes, connected dominating sets, domination
//!   polynomials, the dominating complex, the retraction matching and the
//!   Euler-characteristic identity;
//! * [`graphgen`] — graph families, graph operations (Cartesian product, cone,
//!   neck stretch), graph6 and edge-list interchange, and an
//!   isomorphism-free catalogue of small connected graphs.
//!
//! All arithmetic is exact; there is no floating point anywhere. Every
//! computation is deterministic: matrix eliminations pivot on the leftmost
//! column with the lowest row index, and all parallel code paths merge results
//! in a fixed order. Compiling with `--no-default-features` replaces the
//! rayon-based data-parallel core with a sequential fallback that produces
//! bitwise-identical output.

pub mod bold;
pub mod complex;
pub mod graphgen;
pub mod linalg;
pub mod morse;
pub mod simplicial;
pub mod uber;

mod par;
