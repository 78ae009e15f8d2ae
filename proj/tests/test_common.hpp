#pragma once

#include <functional>
#include <optional>

#include "plancol/errors.hpp"

namespace plancol::test {

// Error code raised by a callable, if any.
inline std::optional<Errc> code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace plancol::test
