#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ivol/chain.hpp"
#include "ivol/complex.hpp"
#include "ivol/homology.hpp"
#include "ivol/morse.hpp"

namespace ivol {

// Face pairing for gluing top simplices: facet i of simplex a is identified
// with facet j of simplex b, preserving vertex order.
struct FacePairing {
  std::size_t a = 0;
  std::size_t i = 0;
  std::size_t b = 0;
  std::size_t j = 0;
};

// Delta-complex generated by `count` d-simplices under the given pairings.
DeltaComplex glue_simplices(std::size_t d, std::size_t count, const std::vector<FacePairing>& pairings);

// k edges around a loop; edge i runs from vertex i to i + 1 mod k.
DeltaComplex circle(std::size_t k);
// One-vertex m-torus: simplices are sequences of disjoint nonempty subsets of
// {1..m}; face 0 drops the first subset, face n the last, and face i merges
// subsets i and i+1. For m = 2 this is the two-triangle torus.
DeltaComplex torus(std::size_t m);
DeltaComplex klein_bottle();
DeltaComplex projective_plane();
DeltaComplex standard_simplex(std::size_t p);
DeltaComplex sphere2();
// n tetrahedra (N, S, v_i, v_{i+1}) around an axis; upper faces are glued to
// lower faces after one step of rotation.
DeltaComplex lens_triangulation(std::size_t n);
ChainComplex lens_chain_complex(const Integer& n);
DeltaComplex square_chord();
DeltaComplex annulus();
DeltaComplex disk_fan(std::size_t k);
// Seven-vertex torus with triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
DeltaComplex torus7();
DeltaComplex backtrack_circle();
DeltaComplex two_tori();

Presentation gamma_presentation(long n);

struct Space {
  std::string name;
  std::string description;
  std::optional<DeltaComplex> complex;
  ChainComplex chains;
  std::optional<Presentation> presentation;
  std::optional<Matching> gradient;
  // Closed oriented pseudomanifold: a fundamental cycle exists.
  bool closed_oriented = false;
  // Known for the closed manifolds in the catalog; the trajectory bound
  // assumes an aspherical manifold.
  std::optional<bool> aspherical;
};

Space catalog_space(const std::string& name);
std::vector<std::string> catalog_names();

struct NamedCycle {
  std::string name;
  std::string space;
  IntegerChain cycle;
};

// Cycles on catalog complexes used for norm checks.
std::vector<NamedCycle> catalog_cycles();

}  // namespace ivol
