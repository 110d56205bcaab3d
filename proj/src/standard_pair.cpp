#include "ctam/standard_pair.hpp"

#include <deque>

#include "ctam/error.hpp"
#include "ctam/slaut.hpp"

namespace ctam {

MatSet closure(const Field& F, const std::vector<Mat>& gens, std::size_t cap) {
  if (gens.empty()) return {};
  MatSet seen;
  std::deque<Mat> queue;
  const Mat id = Mat::identity(F, gens.front().dim());
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    const Mat x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Mat y = mul(F, x, g);
      if (seen.insert(y).second) {
        if (seen.size() > cap) throw BudgetExceeded("subgroup closure exceeded " + std::to_string(cap) + " elements");
        queue.push_back(std::move(y));
      }
    }
  }
  return seen;
}

BorelCertificate common_borel(const Field& F, const std::vector<Mat>& u1_gens,
                              const std::vector<Mat>& u2_gens) {
  BorelCertificate cert;
  std::vector<Mat> gens = u1_gens;
  gens.insert(gens.end(), u2_gens.begin(), u2_gens.end());
  for (const auto& g : gens)
    if (!is_unipotent(F, g)) return cert;
  MatSet group;
  try {
    group = closure(F, gens);
  } catch (const BudgetExceeded&) {
    cert.budget_exceeded = true;
    return cert;
  }
  cert.order = group.size();
  cert.unipotent = true;
  for (const auto& x : group)
    if (!is_unipotent(F, x)) {
      cert.unipotent = false;
      break;
    }
  return cert;
}

bool simple_root_pair(const Field& F, const BorelCertificate& cert) {
  const std::size_t q = F.order();
  return cert.unipotent && cert.order == q * q * q;
}

namespace {

Mat pad(const Field& F, const Mat& m) {
  Mat p = Mat::identity(F, 3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) p(i, j) = m(i, j);
  return p;
}

Mat basis_from(const Field& F, int c0, int c1, int c2) {
  Mat b(3);
  b(c0, 0) = F.one();
  b(c1, 1) = F.one();
  b(c2, 2) = F.one();
  return b;
}

}  // namespace

BlockEmbedding BlockEmbedding::upper_left(const Field& F) { return {basis_from(F, 0, 1, 2)}; }
BlockEmbedding BlockEmbedding::lower_right(const Field& F) { return {basis_from(F, 1, 2, 0)}; }
BlockEmbedding BlockEmbedding::lower_right_reversed(const Field& F) { return {basis_from(F, 2, 1, 0)}; }

Mat BlockEmbedding::embed(const Field& F, const Mat& m) const {
  return mul(F, mul(F, basis, pad(F, m)), inverse(F, basis));
}

std::optional<Mat> BlockEmbedding::extract(const Field& F, const Mat& m) const {
  const Mat local = mul(F, mul(F, inverse(F, basis), m), basis);
  if (local(2, 0) != F.zero() || local(2, 1) != F.zero() || local(0, 2) != F.zero() ||
      local(1, 2) != F.zero() || local(2, 2) != F.one())
    return std::nullopt;
  Mat out(2, {local(0, 0), local(0, 1), local(1, 0), local(1, 1)});
  if (det(F, out) != F.one()) return std::nullopt;
  return out;
}

std::vector<Vec> fixed_space(const Field& F, const std::vector<Mat>& gens) {
  if (gens.empty()) return {};
  const int n = gens.front().dim();
  std::vector<Vec> space;
  for (int i = 0; i < n; ++i) {
    Vec v(n, F.zero());
    v[i] = F.one();
    space.push_back(v);
  }
  const Mat id = Mat::identity(F, n);
  for (const auto& g : gens) {
    auto ker = kernel(F, sub(F, g, id));
    space = intersect(F, space, ker);
  }
  return space;
}

std::vector<Vec> moved_space(const Field& F, const std::vector<Mat>& gens) {
  std::vector<Vec> span;
  if (gens.empty()) return span;
  const Mat id = Mat::identity(F, gens.front().dim());
  for (const auto& g : gens)
    for (const auto& v : image(F, sub(F, g, id))) span.push_back(v);
  return row_reduce(F, span);
}

bool preserves(const Field& F, const Mat& g, const std::vector<Vec>& space) {
  for (const auto& v : space)
    if (!contains(F, space, apply(F, g, v))) return false;
  return true;
}

std::optional<StandardPairWitness> is_standard_pair(const Field& F, const std::vector<Mat>& s1_gens,
                                                    const std::vector<Mat>& s2_gens) {
  StandardPairWitness w;
  w.u1 = fixed_space(F, s1_gens);
  w.v1 = moved_space(F, s1_gens);
  w.u2 = fixed_space(F, s2_gens);
  w.v2 = moved_space(F, s2_gens);
  if (w.u1.size() != 1 || w.u2.size() != 1 || w.v1.size() != 2 || w.v2.size() != 2)
    return std::nullopt;
  for (const auto& g : s1_gens)
    if (!preserves(F, g, w.v1)) return std::nullopt;
  for (const auto& g : s2_gens)
    if (!preserves(F, g, w.v2)) return std::nullopt;
  // Each S_i must act on a complement of its fixed line.
  if (contains(F, w.v1, w.u1[0]) || contains(F, w.v2, w.u2[0])) return std::nullopt;
  if (!contains(F, w.v2, w.u1[0]) || !contains(F, w.v1, w.u2[0])) return std::nullopt;
  const auto middle = intersect(F, w.v1, w.v2);
  if (middle.size() != 1) return std::nullopt;
  w.e1 = w.u2[0];
  w.e2 = middle[0];
  w.e3 = w.u1[0];
  if (rank(F, {w.e1, w.e2, w.e3}) != 3) return std::nullopt;
  return w;
}

Mat standard_d1_generator(const Field& F) {
  const Elem a = F.primitive();
  const std::vector<Elem> d = {a, F.inv(a), F.one()};
  return Mat::diag(d);
}

std::vector<std::vector<Vec>> eigenlines(const Field& F, const Mat& d) {
  const auto cp = charpoly(F, d);
  std::vector<Elem> roots;
  for (Elem x : F.elements()) {
    Elem val = F.zero();
    for (auto it = cp.rbegin(); it != cp.rend(); ++it) val = F.add(F.mul(val, x), *it);
    if (val == F.zero()) roots.push_back(x);
  }
  if (static_cast<int>(roots.size()) != d.dim())
    throw DomainError("torus generator does not have distinct eigenvalues over GF(" + F.name() + ")");
  std::vector<std::vector<Vec>> lines;
  const Mat id = Mat::identity(F, d.dim());
  for (Elem x : roots) lines.push_back(kernel(F, sub(F, d, scale(F, x, id))));
  return lines;
}

std::vector<BlockEmbedding> standard_complements_normalized(const Field& F, const Mat& d1,
                                                            const std::vector<Mat>& s1_gens) {
  const auto fixed = fixed_space(F, s1_gens);
  if (fixed.size() != 1) throw DomainError("S1 does not fix a unique line");
  const auto lines = eigenlines(F, d1);
  std::vector<Vec> others;
  for (const auto& l : lines)
    if (!subspace_le(F, l, fixed)) others.push_back(l[0]);
  if (others.size() != 2) throw DomainError("the fixed line of S1 is not an eigenline of D1");
  // Complement fixing one eigenline and acting on the plane spanned by the
  // other one and the fixed line of S1.
  std::vector<BlockEmbedding> out;
  for (int k = 0; k < 2; ++k) {
    const Vec& u = others[k];
    const Vec& w = others[1 - k];
    out.push_back({from_columns({w, fixed[0], u})});
  }
  return out;
}

std::vector<MatSet> tori_normalized_by(const Field& F, const std::vector<Mat>& d1_gens,
                                       const BlockEmbedding& s2) {
  const auto elements = sl2_elements(F);
  if (elements.size() > 10000) throw BudgetExceeded("SL_2(" + F.name() + ") too large for torus search");
  const Elem a = F.primitive();
  const std::vector<Elem> dv = {a, F.inv(a)};
  const Mat diag_gen = Mat::diag(dv);

  std::vector<MatSet> found;
  MatSet seen_tori_members;
  for (const auto& g : elements) {
    const Mat t = s2.embed(F, conjugate(F, g, diag_gen));
    if (seen_tori_members.count(t)) continue;
    MatSet torus = closure(F, {t});
    for (const auto& x : torus) seen_tori_members.insert(x);
    bool normalized = true;
    for (const auto& d : d1_gens)
      if (!torus.count(conjugate(F, d, t))) {
        normalized = false;
        break;
      }
    if (normalized) found.push_back(std::move(torus));
  }
  return found;
}

MatSet centralizer(const Field& F, const MatSet& group, const std::vector<Mat>& gens) {
  MatSet out;
  for (const auto& x : group) {
    bool ok = true;
    for (const auto& g : gens)
      if (!commute(F, x, g)) {
        ok = false;
        break;
      }
    if (ok) out.insert(x);
  }
  return out;
}

Mat extend_diagonal(const Field& F, Elem a, Elem b, Elem c, Elem d) {
  const std::vector<Elem> v = {F.mul(a, c), F.mul(b, c), F.mul(b, d)};
  return Mat::diag(v);
}

}  // namespace ctam
