#include "support.hpp"

#include <algorithm>
#include <set>

#include "conscale/io.hpp"

using namespace conscale;

namespace support {

FormalContext load(const std::string& file_name) { return io::load_context(std::string(CONSCALE_DATA_DIR) + "/" + file_name); }
FormalContext living_beings() { return load("living-beings.cxt"); }
FormalContext lb_scale() { return load("living-beings-scale.cxt"); }

FormalContext tiny() {
  return FormalContext({"1", "2", "3"}, {"a", "b"}, std::vector<std::pair<std::size_t, std::size_t>>{{0, 0}, {1, 1}, {2, 0}, {2, 1}});
}

FormalContext chain_context(std::size_t k) {
  std::vector<std::string> objs, attrs;
  std::vector<std::pair<std::size_t, std::size_t>> inc;
  for (std::size_t g = 0; g < k; ++g) objs.push_back("g" + std::to_string(g));
  for (std::size_t i = 1; i < k; ++i) {
    attrs.push_back("m" + std::to_string(i));
    for (std::size_t g = i; g < k; ++g) inc.emplace_back(g, i - 1);
  }
  if (attrs.empty()) {
    attrs.push_back("m");
    inc.emplace_back(0, 0);
  }
  return FormalContext(objs, attrs, inc);
}

FormalContext powerset_context(std::size_t n) {
  std::vector<std::string> objs, attrs;
  std::vector<std::pair<std::size_t, std::size_t>> inc;
  for (std::size_t i = 0; i < n; ++i) {
    objs.push_back(std::to_string(i + 1));
    attrs.push_back("not " + std::to_string(i + 1));
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t m = 0; m < n; ++m)
      if (g != m) inc.emplace_back(g, m);
  return FormalContext(objs, attrs, inc);
}

FormalContext random_context(std::mt19937_64& rng, std::size_t n_obj, std::size_t n_attr, double density) {
  std::vector<std::string> objs, attrs;
  for (std::size_t g = 0; g < n_obj; ++g) objs.push_back("g" + std::to_string(g));
  for (std::size_t m = 0; m < n_attr; ++m) attrs.push_back("m" + std::to_string(m));
  std::bernoulli_distribution cell(density);
  std::vector<std::pair<std::size_t, std::size_t>> inc;
  for (std::size_t g = 0; g < n_obj; ++g)
    for (std::size_t m = 0; m < n_attr; ++m)
      if (cell(rng)) inc.emplace_back(g, m);
  return FormalContext(objs, attrs, inc);
}

Mask to_mask(const ObjectSet& s) {
  Mask m = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.test(i)) m |= Mask{1} << i;
  return m;
}

ObjectSet from_mask(Mask m, std::size_t n) {
  ObjectSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (m >> i & 1) s.set(i);
  return s;
}

ObjectSet objects(const FormalContext& ctx, const std::vector<std::string>& names) { return ctx.object_set(names); }

ClosureFamily family(const FormalContext& ctx, const std::vector<std::vector<std::string>>& members) {
  std::vector<ObjectSet> sets;
  for (const auto& m : members) sets.push_back(ctx.object_set(m));
  return ClosureFamily(ctx.object_count(), sets);
}

ClosureFamily family_of_masks(const std::vector<Mask>& members, std::size_t n) {
  std::vector<ObjectSet> sets;
  for (auto m : members) sets.push_back(from_mask(m, n));
  return ClosureFamily(n, sets);
}

std::vector<Mask> brute_extents(const FormalContext& ctx) {
  const std::size_t n = ctx.object_count(), k = ctx.attribute_count();
  std::set<Mask> out;
  for (Mask a = 0; a < (Mask{1} << n); ++a) {
    std::vector<bool> intent(k, true);
    for (std::size_t g = 0; g < n; ++g)
      if (a >> g & 1)
        for (std::size_t m = 0; m < k; ++m) intent[m] = intent[m] && ctx.incident(g, m);
    Mask ext = 0;
    for (std::size_t g = 0; g < n; ++g) {
      bool all = true;
      for (std::size_t m = 0; m < k; ++m) all = all && (!intent[m] || ctx.incident(g, m));
      if (all) ext |= Mask{1} << g;
    }
    out.insert(ext);
  }
  return {out.begin(), out.end()};
}

std::vector<std::vector<Mask>> brute_ideal(const std::vector<Mask>& extents, Mask ground) {
  std::vector<Mask> rest;
  for (auto e : extents)
    if (e != ground) rest.push_back(e);
  std::vector<std::vector<Mask>> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << rest.size()); ++pick) {
    std::vector<Mask> fam{ground};
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (pick >> i & 1) fam.push_back(rest[i]);
    bool closed = true;
    for (std::size_t i = 0; i < fam.size() && closed; ++i)
      for (std::size_t j = i + 1; j < fam.size() && closed; ++j)
        closed = std::find(fam.begin(), fam.end(), fam[i] & fam[j]) != fam.end();
    if (closed) {
      std::sort(fam.begin(), fam.end());
      out.push_back(std::move(fam));
    }
  }
  return out;
}

}  // namespace support
