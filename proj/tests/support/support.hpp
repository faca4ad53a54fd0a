#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "conscale/closure_family.hpp"
#include "conscale/context.hpp"

namespace support {

using Mask = std::uint32_t;

conscale::FormalContext load(const std::string& file_name);
conscale::FormalContext living_beings();
conscale::FormalContext lb_scale();
/// G = {1,2,3}, M = {a,b}, I = {(1,a),(2,b),(3,a),(3,b)}.
conscale::FormalContext tiny();
/// k objects whose extents form a chain of k members.
conscale::FormalContext chain_context(std::size_t k);
/// Objects 1..n, attribute "not i" on every object but i: every subset is an extent.
conscale::FormalContext powerset_context(std::size_t n);
conscale::FormalContext random_context(std::mt19937_64& rng, std::size_t objects, std::size_t attributes, double density);

Mask to_mask(const conscale::ObjectSet& s);
conscale::ObjectSet from_mask(Mask m, std::size_t n);
conscale::ObjectSet objects(const conscale::FormalContext& ctx, const std::vector<std::string>& names);
conscale::ClosureFamily family(const conscale::FormalContext& ctx, const std::vector<std::vector<std::string>>& members);
conscale::ClosureFamily family_of_masks(const std::vector<Mask>& members, std::size_t n);

/// Extents by brute force: close every subset of G through the raw incidence.
std::vector<Mask> brute_extents(const conscale::FormalContext& ctx);
/// Every subfamily of `extents` that contains G and is intersection-closed.
std::vector<std::vector<Mask>> brute_ideal(const std::vector<Mask>& extents, Mask ground);

}  // namespace support
