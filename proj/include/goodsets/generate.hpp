#pragma once

// Seeded instance generators. Labels on every axis are "0", "1", ...; the
// per-axis budget caps how many distinct labels an axis may use.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "goodsets/point_set.hpp"

namespace goodsets {

enum class GeneratorKind { full, good, random, loop, relatively_full };

GeneratorKind parse_generator_kind(std::string_view name);  // throws InputError
std::string to_string(GeneratorKind kind);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::full;
  std::size_t dimension = 2;
  std::size_t size = 1;
  // One entry per axis, or a single entry applied to every axis. Empty means
  // `size` labels per axis (3 for the loop kind).
  std::vector<std::size_t> budgets;
  std::uint64_t seed = 0;
};

// Throws InputError for an invalid spec and PreconditionError when the
// budgets cannot accommodate the request.
//
//   full             grows from one point; each new point has one fresh
//                    coordinate and n-1 coordinates already in use
//   good             random grid points, dependent candidates rejected
//   random           distinct random grid points
//   loop             random grid points until the first dependency; emits
//                    the loop it closes (size is ignored)
//   relatively_full  a full core plus extra points inside the product of
//                    the core's projections
PointSet generate(const GeneratorSpec& spec);

}  // namespace goodsets
