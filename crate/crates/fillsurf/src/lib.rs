//! Decision procedures and explicit constructions for filling surfaces in
//! geometric 3-manifolds, together with the scalar bounds that govern them.
//!
//! A surface in a 3-manifold is *filling* when its complement consists of
//! contractible pieces. This crate implements the computable side of that
//! story across three model geometries:
//!
//! - [`hyp3`] — the upper half-space model of hyperbolic 3-space: Möbius
//!   isometries acting on the boundary sphere, geodesic planes, the
//!   separation predicate, plane/geodesic intersection classification, and
//!   Dirichlet bisector planes.
//! - [`flat3`] — the six closed orientable flat 3-manifolds as Bieberbach
//!   groups over exact arithmetic, orbits of plane families, the rank-3
//!   filling criterion with escaping-geodesic witnesses, and a grid
//!   flood-fill that checks complement cells for contractibility.
//! - [`solgrp`] — torus-bundle (Sol) fundamental groups in normal form,
//!   with an exhaustive bounded scan certifying that rank-2 abelian
//!   subgroups only live in the fiber.
//! - [`h2xr`] — regular hyperbolic polygons in the Poincaré disk, slanted
//!   annulus families in polygon prisms, and the fiber-obstruction coverage
//!   check.
//! - [`gmeasure`] — Grassmann 2-plane bundle measures: fiber normalization,
//!   transversal-set lower bounds, induced measures of flat plane-family
//!   surfaces, and an equidistribution demo.
//! - [`bounds`] — closed-form hyperbolic ball volume/area, the
//!   isoperimetric and rank inequalities, and curvature conversions.
//!
//! The `examples/` directory of this crate is the guided tour: one runnable
//! example per capability. A thin `fillsurf` binary exposes the same
//! operations as batch subcommands emitting single-line JSON (see
//! [`cli`]).

pub mod bounds;
pub mod cli;
pub mod flat3;
pub mod gmeasure;
pub mod h2xr;
pub mod hyp3;
pub mod rngs;
pub mod solgrp;
pub mod tol;
