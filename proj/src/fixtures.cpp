#include "tropfan/fixtures.hpp"

#include <map>

#include "tropfan/matroid.hpp"

namespace tropfan {

namespace {

FanDescription make(std::size_t n, std::vector<IntVector> rays, std::vector<std::vector<int>> cones,
                    std::optional<std::vector<std::int64_t>> weights = std::nullopt) {
  FanDescription d;
  d.lattice_rank = n;
  d.rays = std::move(rays);
  d.maximal_cones = std::move(cones);
  d.weights = std::move(weights);
  return d;
}

// Ray order: 0, 1, 2, 3, 4, a, b, c, alpha, beta.
FanDescription nm() {
  FanDescription d = make(4,
                          {{-1, -1, -1, -2},
                           {1, 0, 0, 0},
                           {0, 1, 0, 0},
                           {0, 0, 1, 0},
                           {0, 0, 0, 1},
                           {2, 1, 0, 2},
                           {0, 1, 1, 1},
                           {-2, -2, -1, -2},
                           {1, 1, 0, 1},
                           {-1, -1, 0, -1}},
                          {{0, 1}, {0, 2}, {0, 7}, {7, 9}, {3, 9}, {1, 3}, {1, 5},
                           {5, 8}, {2, 8}, {2, 6}, {3, 6}, {4, 5}, {4, 6}, {4, 7}});
  // strictly convex, found by the Kahler search
  d.values = QVector{13, 0, 0, 0, 0, -8, -3, 16, -5, 7};
  return d;
}

// The Bergman fan of U(3,4) refined along the curve of a, b, c, with the
// function whose modification gives nm. Ray order: 0, 1, 2, 3, a, b, c, alpha, beta.
FanDescription u34_refined() {
  FanDescription d = make(3,
                          {{-1, -1, -1},
                           {1, 0, 0},
                           {0, 1, 0},
                           {0, 0, 1},
                           {2, 1, 0},
                           {0, 1, 1},
                           {-2, -2, -1},
                           {1, 1, 0},
                           {-1, -1, 0}},
                          {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {4, 7}, {2, 7}, {2, 5}, {3, 5}, {0, 6}, {6, 8}, {3, 8}});
  d.values = QVector{-2, 0, 0, 0, 2, 1, -2, 1, -1};
  return d;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"rank1", "cross", "elliptic", "line2", "conic2", "p2", "p3", "u34-coarse", "u34-fine", "u34-refined", "nm"};
}

FanDescription fixture_description(const std::string& name) {
  if (name == "rank1") return make(1, {{1}, {-1}}, {{0}, {1}});
  if (name == "cross") return make(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0}, {1}, {2}, {3}});
  if (name == "elliptic") return make(2, {{2, 1}, {-1, 1}, {-1, -2}}, {{0}, {1}, {2}});
  if (name == "line2") return make(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0}, {1}, {2}});
  if (name == "conic2") return make(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0}, {1}, {2}}, std::vector<std::int64_t>{2, 2, 2});
  if (name == "p2") return make(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {0, 2}, {1, 2}});
  if (name == "p3")
    return make(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  if (name == "u34-coarse")
    return make(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  if (name == "u34-fine") return bergman_fan(uniform_matroid(3, 4), BergmanStructure::fine).describe();
  if (name == "u34-refined") return u34_refined();
  if (name == "nm") return nm();
  throw InputError("unknown fixture '" + name + "'");
}

std::string fixture_summary(const std::string& name) {
  static const std::map<std::string, std::string> text = {
      {"rank1", "complete fan in Z^1"},
      {"cross", "the four coordinate half-axes in Z^2"},
      {"elliptic", "tropical line with rays (2,1), (-1,1), (-1,-2)"},
      {"line2", "standard tropical line in Z^2, Bergman fan of U(2,3)"},
      {"conic2", "standard tropical line with all weights 2"},
      {"p2", "complete fan of the projective plane"},
      {"p3", "complete fan of projective 3-space"},
      {"u34-coarse", "Bergman fan of U(3,4), coarse structure"},
      {"u34-fine", "Bergman fan of U(3,4), fine structure"},
      {"u34-refined", "coarse U(3,4) fan refined along the curve a, b, c, with the modifying function"},
      {"nm", "non-matroidal 2-dimensional fan in Z^4 with 10 rays and 14 facets"}};
  const auto it = text.find(name);
  if (it == text.end()) throw InputError("unknown fixture '" + name + "'");
  return it->second;
}

Fan fixture(const std::string& name) { return Fan::validate(fixture_description(name)); }

}  // namespace tropfan
