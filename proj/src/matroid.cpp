#include "tropfan/matroid.hpp"

#include <algorithm>
#include <functional>

namespace tropfan {

namespace {

bool contains_all(const ElementSet& big, const ElementSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

ElementSet set_minus(const ElementSet& a, const ElementSet& b) {
  ElementSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElementSet insert(ElementSet s, int e) {
  s.insert(std::lower_bound(s.begin(), s.end(), e), e);
  return s;
}

}  // namespace

Matroid::Matroid(std::size_t ground, std::vector<ElementSet> bases) : ground_(ground) {
  if (bases.empty()) throw InputError("a matroid needs at least one basis");
  for (auto& b : bases) {
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end()) throw InputError("repeated element in a basis");
    for (int e : b)
      if (e < 0 || static_cast<std::size_t>(e) >= ground) throw InputError("basis element out of range");
  }
  std::sort(bases.begin(), bases.end());
  if (std::adjacent_find(bases.begin(), bases.end()) != bases.end()) throw InputError("repeated basis");
  rank_ = bases.front().size();
  for (const auto& b : bases)
    if (b.size() != rank_) throw InputError("bases have different sizes");
  const std::set<ElementSet> lookup(bases.begin(), bases.end());
  for (const auto& b1 : bases)
    for (const auto& b2 : bases)
      for (int x : set_minus(b1, b2)) {
        bool found = false;
        for (int y : set_minus(b2, b1)) {
          ElementSet c = b1;
          c.erase(std::find(c.begin(), c.end(), x));
          if (lookup.count(insert(c, y))) {
            found = true;
            break;
          }
        }
        if (!found) throw InputError("basis exchange fails for an element of one basis against another");
      }
  bases_ = std::move(bases);
}

std::size_t Matroid::rank(const ElementSet& s) const {
  std::size_t best = 0;
  for (const auto& b : bases_) {
    std::size_t common = 0;
    for (int e : s)
      if (std::binary_search(b.begin(), b.end(), e)) ++common;
    best = std::max(best, common);
  }
  return best;
}

ElementSet Matroid::closure(const ElementSet& s) const {
  const std::size_t r = rank(s);
  ElementSet out;
  for (int e = 0; e < static_cast<int>(ground_); ++e)
    if (std::binary_search(s.begin(), s.end(), e) || rank(insert(s, e)) == r) out.push_back(e);
  return out;
}

ElementSet Matroid::loops() const { return closure({}); }

bool Matroid::is_uniform() const {
  return bases_.size() == binomial(ground_, rank_);
}

Matroid uniform_matroid(std::size_t r, std::size_t n) {
  if (r < 1 || r > n) throw InputError("uniform matroid needs 1 <= r <= n");
  std::vector<ElementSet> bases;
  for (const auto& s : subsets(n, r)) bases.emplace_back(s.begin(), s.end());
  return Matroid(n, std::move(bases));
}

std::vector<std::vector<ElementSet>> flats(const Matroid& m) {
  std::set<ElementSet> seen;
  std::vector<ElementSet> queue{m.closure({})};
  seen.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const ElementSet f = queue[i];
    for (int e = 0; e < static_cast<int>(m.ground()); ++e) {
      if (std::binary_search(f.begin(), f.end(), e)) continue;
      ElementSet g = m.closure(insert(f, e));
      if (seen.insert(g).second) queue.push_back(std::move(g));
    }
  }
  std::vector<std::vector<ElementSet>> out(m.rank() + 1);
  for (const auto& f : seen) out[m.rank(f)].push_back(f);
  return out;
}

std::vector<ElementSet> proper_flats(const Matroid& m) {
  std::vector<ElementSet> out;
  const auto all = flats(m);
  for (std::size_t k = 1; k + 1 < all.size(); ++k)
    for (const auto& f : all[k])
      if (!f.empty()) out.push_back(f);
  return out;
}

IntVector flat_vector(const ElementSet& flat, std::size_t ground) {
  IntVector v(ground - 1, 0);
  const int last = static_cast<int>(ground) - 1;
  const bool has_last = std::binary_search(flat.begin(), flat.end(), last);
  for (std::size_t i = 0; i + 1 < ground; ++i) {
    const bool in = std::binary_search(flat.begin(), flat.end(), static_cast<int>(i));
    v[i] = (in ? 1 : 0) - (has_last ? 1 : 0);
  }
  return v;
}

Fan bergman_fan(const Matroid& m, BergmanStructure structure) {
  if (!m.loops().empty()) throw InputError("the Bergman fan needs a loopless matroid");
  const std::size_t n = m.ground();
  if (n < 1) throw InputError("the Bergman fan needs a nonempty ground set");
  FanDescription d;
  d.lattice_rank = n - 1;

  if (structure == BergmanStructure::coarse) {
    if (!m.is_uniform()) throw InputError("the coarse structure is only available for uniform matroids");
    for (std::size_t i = 0; i < n; ++i) d.rays.push_back(flat_vector({static_cast<int>(i)}, n));
    const std::size_t top = m.rank() - 1;
    if (top == 0) {
      d.rays.clear();
      d.maximal_cones.push_back({});
    } else {
      for (const auto& s : subsets(n, top)) d.maximal_cones.emplace_back(s.begin(), s.end());
    }
  } else {
    const auto rays = proper_flats(m);
    for (const auto& f : rays) d.rays.push_back(flat_vector(f, n));
    // maximal chains of proper nonempty flats
    std::function<void(std::vector<int>&)> extend = [&](std::vector<int>& chain) {
      bool extended = false;
      for (std::size_t j = 0; j < rays.size(); ++j) {
        const ElementSet& g = rays[j];
        if (!chain.empty()) {
          const ElementSet& top = rays[static_cast<std::size_t>(chain.back())];
          if (g.size() <= top.size() || !contains_all(g, top) || m.rank(g) != m.rank(top) + 1) continue;
        } else if (m.rank(g) != 1) {
          continue;
        }
        chain.push_back(static_cast<int>(j));
        extend(chain);
        chain.pop_back();
        extended = true;
      }
      if (!extended) {
        std::vector<int> cone = chain;
        std::sort(cone.begin(), cone.end());
        d.maximal_cones.push_back(cone);
      }
    };
    std::vector<int> chain;
    extend(chain);
  }
  d.weights = std::vector<std::int64_t>(d.maximal_cones.size(), 1);
  return Fan::validate(d);
}

}  // namespace tropfan
