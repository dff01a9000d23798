#pragma once

// Euclidean geodesics (one simplex per layer), vertex geodesics threaded
// through them, and measurement of how good a vertex geodesic is.

#include <optional>
#include <vector>

#include "syslab/cat0_path.hpp"
#include "syslab/exact.hpp"

namespace syslab {

enum class DeltaSource { Endpoint, ThinSpan, CharacteristicImage };

struct EuclideanGeodesic {
  VertexId x;
  VertexId y;
  std::vector<Simplex> delta;  // i = 0..n
  std::vector<DeltaSource> source;
  std::vector<ThickInterval> intervals;
  int length() const { return static_cast<int>(delta.size()) - 1; }
};

// With check_reversal the (y, x) geodesic is also built and must be the mirror
// image; a mismatch raises ConditionViolated.
EuclideanGeodesic euclidean_geodesic(const FlagComplex& c, VertexId x, VertexId y, bool check_reversal = true);

using VertexPath = std::vector<VertexId>;

// Lexicographically least v_0..v_n with v_i in delta_i and consecutive
// vertices adjacent. NoSelection if none exists.
VertexPath select_vertex_geodesic(const FlagComplex& c, const EuclideanGeodesic& e);

struct Constants {
  int C = 200;
  int D = 600;
};

struct GoodnessWitness {
  int j = 0;
  int k = 0;
  int i = 0;  // global index into the geodesic
  VertexId u;
};

struct GoodnessReport {
  VertexPath geodesic;
  int constant = 0;  // max d(v_i, u) over sub-pairs j < k, u in delta^{j,k}_i
  std::optional<GoodnessWitness> witness;
  std::size_t pairs = 0;
};

GoodnessReport goodness_constant(const FlagComplex& c, const VertexPath& g);

struct ContractingReport {
  std::size_t checks = 0;
  std::size_t violations = 0;
  double max_slack = 0;  // max of lhs - c*rhs over all checks
  bool has_checks() const { return checks > 0; }
};

// d(v_floor(cn), w_floor(cm)) <= c d(v_n, w_m) + D for both paths leaving a
// common origin, every n, m and every c.
ContractingReport verify_contracting(const FlagComplex& c, const VertexPath& g1, const VertexPath& g2,
                                     const std::vector<Rational>& cs, int D);

// d(v_i, w_i) <= d(v_0, w_0) + 2D + 1 for every i of two paths of equal length.
// max_slack reports max of d(v_i, w_i) - d(v_0, w_0).
ContractingReport verify_doubling(const FlagComplex& c, const VertexPath& g1, const VertexPath& g2, int D);

}  // namespace syslab
