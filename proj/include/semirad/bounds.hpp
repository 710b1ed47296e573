#ifndef SEMIRAD_BOUNDS_HPP
#define SEMIRAD_BOUNDS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace semirad {

/// Largest |R|^g a module presentation may enumerate.
inline constexpr std::size_t kDefaultElementBound = 65536;
/// Largest |M| for which the full submodule lattice is built.
inline constexpr std::size_t kDefaultLatticeBound = 256;

struct Bounds {
  std::size_t element_bound = kDefaultElementBound;
  std::size_t lattice_bound = kDefaultLatticeBound;
};

/// Raised when an enumeration would exceed one of the configured bounds.
/// The message names the bound and the CLI flag that raises it.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(std::string bound, std::string flag, std::size_t limit, std::size_t required)
      : std::runtime_error(required_text(bound, flag, limit, required)),
        bound_(std::move(bound)),
        flag_(std::move(flag)),
        limit_(limit),
        required_(required) {}

  const std::string& bound() const noexcept { return bound_; }
  const std::string& flag() const noexcept { return flag_; }
  std::size_t limit() const noexcept { return limit_; }
  std::size_t required() const noexcept { return required_; }

 private:
  static std::string required_text(const std::string& bound, const std::string& flag,
                                   std::size_t limit, std::size_t required) {
    return "needs " + std::to_string(required) + " elements but the " + bound + " is " +
           std::to_string(limit) + "; raise it with " + flag;
  }

  std::string bound_;
  std::string flag_;
  std::size_t limit_;
  std::size_t required_;
};

}  // namespace semirad

#endif  // SEMIRAD_BOUNDS_HPP
