#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctam/amalgam.hpp"
#include "ctam/laurent.hpp"

namespace ctam {

/// Places a k x k matrix M into SL_n(GF(q)[t, t^-1]): entry (coords[a], coords[b])
/// becomes M[a][b] * t^(weights[a] - weights[b]), the rest is the identity.
struct Placement {
  std::vector<int> coords;
  std::vector<int> weights;

  LMat place(const Field& F, int n, const Mat& m) const;
};

struct CompletionWitness {
  int n = 0;
  bool laurent = false;  // target SL_n(GF(q)[t,t^-1]) rather than SL_n(q)
  std::map<int, Placement> vertex;
  std::map<DirectedEdge, Placement> edge;  // keyed by the written edge
};

/// Vertices of a path or cycle diagram in walk order, if every edge is
/// written along the walk (v_k, v_k+1). nullopt otherwise.
std::optional<std::vector<int>> walk_order(const Diagram& d, bool cycle);

/// Path A_{n-1} (n-1 vertices) into SL_n(q). Throws DomainError if the
/// amalgam is not a walk-oriented path with trivial pointing, or n > 8.
CompletionWitness spherical_completion(const CTAmalgam& A);

/// Cycle on n >= 4 vertices into SL_n(GF(q)[t, t^-1]); the last vertex of
/// the walk wraps around through t. Same preconditions as above.
CompletionWitness affine_completion(const CTAmalgam& A);

/// Re-checks every square phi_hat_{i,j} o phi_{i,j} = phi_hat_i on the SL_2
/// generators, determinants, non-edge commutation and injectivity of each
/// phi_hat_i on SL_2(q). With eval_at set, the Laurent target is first
/// specialised at t = eval_at.
CheckReport verify_completion(const CTAmalgam& A, const CompletionWitness& w,
                              std::optional<Elem> eval_at = std::nullopt);

}  // namespace ctam
