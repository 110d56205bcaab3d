#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctam/diagram.hpp"
#include "ctam/field.hpp"

namespace ctam {

/// (omega flip, Frobenius power): an element of Z_2 x Z_m.
struct ACoord {
  int eps = 0;
  int r = 0;

  friend constexpr bool operator==(ACoord, ACoord) = default;
  friend constexpr auto operator<=>(ACoord, ACoord) = default;
};

/// Arithmetic in Z_2 x Z_m.
class CoordGroup {
 public:
  explicit CoordGroup(int m);
  explicit CoordGroup(const Field& F) : CoordGroup(F.degree()) {}

  int degree() const { return m_; }
  int size() const { return 2 * m_; }
  ACoord add(ACoord a, ACoord b) const { return {(a.eps + b.eps) % 2, (a.r + b.r) % m_}; }
  ACoord neg(ACoord a) const { return {a.eps, (m_ - a.r) % m_}; }
  ACoord sub(ACoord a, ACoord b) const { return add(a, neg(b)); }
  /// Throws InputError if out of range.
  ACoord checked(int eps, int r) const;
  /// All elements, eps-major.
  std::vector<ACoord> elements() const;
  /// Position of a in elements().
  int ordinal(ACoord a) const { return a.eps * m_ + a.r; }

 private:
  int m_;
};

std::string format(ACoord a);  // "(eps,r)"

/// Restriction map alpha_e : A_e -> A_from(e). The identity in coordinates.
ACoord alpha(DirectedEdge e, ACoord a);
ACoord alpha_inverse(DirectedEdge e, ACoord a);

/// Checks at the matrix level that omega^eps sigma^r on SL_3 pulls back along
/// both block embeddings to the SL_2 automorphism with the same coordinates.
bool alpha_matrix_check(const Field& F);

/// Alternating word (a_0, e_1, a_1, ..., e_n, a_n); letters.size() == edges.size() + 1.
struct GroupPath {
  int start = 0;
  std::vector<DirectedEdge> edges;
  std::vector<ACoord> letters;

  int end() const { return edges.empty() ? start : edges.back().to; }
  bool closed() const { return end() == start; }
};

/// Throws DomainError if edges do not chain or leave the diagram.
void check_path(const Diagram& d, const GroupPath& p);

struct NormalForm {
  std::vector<DirectedEdge> edgeword;
  ACoord g;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Transport of a along the edge sequence, by explicit composition of
/// alpha maps.
ACoord beta_along(const CoordGroup& G, const std::vector<DirectedEdge>& path, ACoord a);
/// Transport along the BFS tree path between l and m. Throws DomainError if
/// the vertices are not connected.
ACoord beta(const CoordGroup& G, const Diagram& d, int l, int m, ACoord a);

/// Closed form: g is the sum of the letters, each transported to the end.
NormalForm normal_form(const CoordGroup& G, const GroupPath& p);
/// Same result, computed by pushing group letters rightwards across one
/// edge at a time with the defining relation of the path group.
NormalForm normal_form_stepwise(const CoordGroup& G, const GroupPath& p);

struct ReturnStep {
  std::size_t position;  // index j of the removed e_j (0-based)
  ACoord merged;
};

/// Removes every backtrack e, reverse(e), merging the three surrounding letters.
GroupPath reduce_returns(const CoordGroup& G, const GroupPath& p, std::vector<ReturnStep>* trace = nullptr);

/// Solves for h_1..h_n relating two paths with the same edge sequence, or
/// nullopt if they differ in the path group.
std::optional<std::vector<ACoord>> homotopy_witness(const CoordGroup& G, const GroupPath& p1,
                                                    const GroupPath& p2);

class Pointing {
 public:
  /// Zero for unspecified edges.
  ACoord at(DirectedEdge e) const;
  void set(DirectedEdge e, ACoord a);
  bool trivial() const;
  const std::map<DirectedEdge, ACoord>& values() const { return delta_; }

  friend bool operator==(const Pointing&, const Pointing&) = default;

 private:
  std::map<DirectedEdge, ACoord> delta_;  // only nonzero values stored
};

/// Lines "delta <from> <to> <eps> <r>"; "#" comments.
Pointing parse_pointing(std::string_view text, const Diagram& d, const CoordGroup& G);
Pointing load_pointing(const std::string& path, const Diagram& d, const CoordGroup& G);
std::string serialize(const Pointing& p, const Diagram& d);

/// gamma_delta for a closed edge walk: delta_e1 e1 delta_rev(e1)^-1 delta_e2 e2 ...
GroupPath twisted_cycle(const CoordGroup& G, const Pointing& delta, int base,
                        const std::vector<DirectedEdge>& cycle);

/// Phi on an arbitrary closed walk, through the normal form of gamma_delta.
ACoord phi_of_cycle(const CoordGroup& G, const Pointing& delta, int base,
                    const std::vector<DirectedEdge>& cycle);
/// Sum over the walk of delta_e - delta_rev(e).
ACoord phi_by_summation(const CoordGroup& G, const Pointing& delta,
                        const std::vector<DirectedEdge>& cycle);
/// Phi on the free generators given by the H-edges.
std::vector<ACoord> phi_of_pointing(const CoordGroup& G, const Pointing& delta, const SpanningData& sd);

}  // namespace ctam
