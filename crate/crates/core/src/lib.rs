//! Exact computational algebra on decorated combinatorial graphs.
//!
//! The crate is organized around one carrier structure, the combinatorial
//! graph (flags, vertices, boundary map, involution), and builds several
//! layers on top of it:
//!
//! * [`graph`] — graphs, decorations, canonical forms, automorphism
//!   counting, isomorphism-class enumeration, orientation analysis, and
//!   cut machinery.
//! * [`feynman`] — the finite-dimensional Gaussian toy model: Wick
//!   moments, tensor-network graph weights, and the partition / connected
//!   / tree series with exact rational coefficients.
//! * [`prim`] — flowcharts built from composition, bracketing, and
//!   recursion vertices, evaluating primitive recursive functions, plus
//!   the partial-map-to-bijection reductions on finite pointed carriers.
//! * [`hopf`] — the bialgebra of decorated graphs under disjoint union
//!   and the cut coproduct, its gradings and antipode, and the
//!   composition bialgebra of a finite category.
//! * [`renorm`] — minimal-subtraction target algebras, the convolution
//!   group of linear maps out of the graph Hopf algebra, Birkhoff
//!   decomposition, and Rota–Baxter identity testing.
//! * [`seq`] — sequence algebras with their three products and summation
//!   operators, the Γ(1+∂t) singular-part transform, asymptotic fits,
//!   the norm functional, and max-plus running time.
//!
//! Everything except quadrature cross-checks, asymptotic fits, and
//! max-plus timing runs in exact rational arithmetic. All values are
//! immutable after construction and all operations are pure functions.

pub mod feynman;
pub mod graph;
pub mod hopf;
pub mod prim;
pub mod ratio;
pub mod renorm;
pub mod seq;
