#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace twistbar {

/// Outcome of an exhaustive verification sweep. A failure is a result, not an error.
struct Certificate {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  /// Number of simplices examined per level, when the sweep is levelwise.
  std::vector<std::uint64_t> level_sizes;
  std::optional<std::string> failure;

  void fail(std::string what) {
    if (passed) failure = std::move(what);
    passed = false;
  }
};

}  // namespace twistbar
