#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace nnn {

/// Exact group orders; empty digraphs on 64 vertices have order 64!.
using BigCount = boost::multiprecision::cpp_int;

inline std::optional<std::uint64_t> to_u64(const BigCount& c) {
  if (c < 0 || c > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return c.convert_to<std::uint64_t>();
}

inline std::string to_string(const BigCount& c) { return c.str(); }

}  // namespace nnn
