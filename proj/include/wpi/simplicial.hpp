#pragma once

#include <cstdint>
#include <vector>

#include "wpi/monomial.hpp"

namespace wpi {

/// Reisner's criterion is exponential in the vertex count; the oracle
/// refuses polarized universes above this bound unless overridden.
inline constexpr int kDefaultPolarizedGuard = 20;

/// Finite simplicial complex on vertices 1..num_vertices, held by its
/// maximal faces. Vertex v occupies bit v-1 of a mask.
struct SimplicialComplex {
  int num_vertices = 0;
  std::vector<std::uint32_t> facets;
};

/// Faces are the squarefree monomials NOT in the ideal; returned as facets.
/// Rejects non-squarefree input and the unit ideal. The zero ideal gives the
/// full simplex.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& squarefree);

/// Every face (including the empty mask), sorted by (size, mask value).
std::vector<std::uint32_t> all_faces(const SimplicialComplex& c);

/// Ranks of reduced simplicial homology over the rationals for dimensions
/// -1..dim(c), computed by exact integer boundary-matrix reduction after a
/// homotopy-preserving free-pair collapse.
std::vector<long long> reduced_homology_ranks(const SimplicialComplex& c);

/// Reisner test over the rationals: polarize, build the complex of the
/// polarization, and require every face link to have vanishing reduced
/// homology below its own dimension. Polarization preserves the verdict, so
/// the result is reported for the input ideal.
bool is_cm_rational(const MonomialIdeal& i, int polarized_guard = kDefaultPolarizedGuard);

}  // namespace wpi
