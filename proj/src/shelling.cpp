#include "polyshell/shelling.hpp"

#include <algorithm>

namespace polyshell {

namespace {

void check_order(const Complex& c, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != c.cell_count())
    throw std::invalid_argument("order length differs from cell count");
  std::vector<bool> seen(order.size(), false);
  for (int x : order) {
    if (x < 0 || x >= c.cell_count() || seen[x])
      throw std::invalid_argument("order is not a permutation of the cells");
    seen[x] = true;
  }
}

std::string step_msg(int step, const char* what) {
  return "step " + std::to_string(step) + ": " + what;
}

}  // namespace

std::vector<ShellingStep> shelling_steps(const Complex& c, const std::vector<int>& order) {
  check_order(c, order);
  std::vector<ShellingStep> steps;
  std::set<FaceKey> prefix_faces;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    CellLattice lat = c.lattice(order[i]);
    ShellingStep st;
    st.cell = order[i];
    for (int j = 0; j < lat.facet_count(); ++j)
      if (prefix_faces.count(lat.facet_key(j))) st.shared_facets.push_back(j);
    steps.push_back(std::move(st));
    for (const auto& face : lat.faces())
      if (face.dim >= 0) prefix_faces.insert(face.key);
  }
  return steps;
}

ShellingCheck is_shelling(const Complex& c, const std::vector<int>& order) {
  check_order(c, order);
  if (c.dim() == 0) return {};
  std::set<FaceKey> prefix_faces;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    CellLattice lat = c.lattice(order[i]);
    if (i > 0) {
      std::vector<FaceKey> shared_facets;
      std::set<int> shared_idx;
      for (int j = 0; j < lat.facet_count(); ++j)
        if (prefix_faces.count(lat.facet_key(j))) {
          shared_facets.push_back(lat.facet_key(j));
          shared_idx.insert(j);
        }
      bool any_shared_face = false;
      for (const auto& face : lat.faces()) {
        if (face.dim < 0 || !prefix_faces.count(face.key)) continue;
        any_shared_face = true;
        bool covered = false;
        for (const auto& fk : shared_facets)
          if (key_subset(face.key, fk)) {
            covered = true;
            break;
          }
        if (!covered)
          return {false, i + 1, step_msg(i + 1, "intersection is not a union of facets")};
      }
      if (!any_shared_face)
        return {false, i + 1, step_msg(i + 1, "intersection with earlier cells is empty")};
      if (c.kind() == CellKind::cube &&
          shared_idx.size() < static_cast<std::size_t>(lat.facet_count())) {
        bool has_loose_facet = false;
        for (int j : shared_idx)
          if (!shared_idx.count(j ^ 1)) {
            has_loose_facet = true;
            break;
          }
        if (!has_loose_facet)
          return {false, i + 1,
                  step_msg(i + 1, "shared facets cannot start a boundary shelling")};
      }
    }
    for (const auto& face : lat.faces())
      if (face.dim >= 0) prefix_faces.insert(face.key);
  }
  return {};
}

ShellingCheck is_stable_shelling(const Complex& c, const std::vector<int>& order) {
  ShellingCheck base = is_shelling(c, order);
  if (!base.ok) return base;
  auto steps = shelling_steps(c, order);
  for (int i = 0; i < static_cast<int>(steps.size()); ++i) {
    std::set<int> removed(steps[i].shared_facets.begin(), steps[i].shared_facets.end());
    if (!is_stable_removed_set(c.kind(), c.cell(steps[i].cell), c.dim(), removed))
      return {false, i + 1, step_msg(i + 1, "removed facet set is not stable")};
  }
  return {};
}

namespace {

RelativeComplex step_relative(const Complex& c, const ShellingStep& st, bool first) {
  Complex single(c.kind(), c.dim(), {c.cell(st.cell)});
  CellLattice lat = c.lattice(st.cell);
  std::vector<FaceKey> gens;
  for (int j : st.shared_facets) gens.push_back(lat.facet_key(j));
  std::set<FaceKey> removed = face_closure(single, gens);
  // a later cell of a 0-dimensional complex meets the earlier ones in the empty
  // face only, which no facet list can express
  if (!first && c.dim() == 0) removed.insert(FaceKey{});
  return RelativeComplex(single, std::move(removed));
}

}  // namespace

RelativeComplex step_relative_complex(const Complex& c, const std::vector<int>& order, int i) {
  auto steps = shelling_steps(c, order);
  if (i < 0 || i >= static_cast<int>(steps.size())) throw std::out_of_range("step index");
  return step_relative(c, steps[i], i == 0);
}

std::vector<IntPolynomial> step_h_polynomials(const Complex& c, const std::vector<int>& order) {
  std::vector<IntPolynomial> out;
  auto steps = shelling_steps(c, order);
  for (std::size_t i = 0; i < steps.size(); ++i)
    out.push_back(step_relative(c, steps[i], i == 0).h_polynomial());
  return out;
}

}  // namespace polyshell
