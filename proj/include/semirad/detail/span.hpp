#ifndef SEMIRAD_DETAIL_SPAN_HPP
#define SEMIRAD_DETAIL_SPAN_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace semirad::detail {

// Incrementally maintained R-linear span inside a finite carrier whose
// elements are encoded 0..universe-1 with zero encoded as 0.
//
// Absorbing g replaces the current span S by S + Rg = {s + r*g}, which is
// exactly the submodule generated by the old generators and g. No fixpoint
// loop is needed because S is already closed.
template <class Add, class Scale>
class SpanBuilder {
 public:
  SpanBuilder(std::size_t universe, std::size_t scalars, Add add, Scale scale)
      : scalars_(scalars), add_(add), scale_(scale), in_(universe, 0), members_{0} {
    in_[0] = 1;
  }

  bool contains(std::uint32_t x) const { return in_[x] != 0; }

  // Returns false when g already lies in the span.
  bool absorb(std::uint32_t g) {
    if (in_[g]) return false;
    std::vector<std::uint32_t> multiples;
    multiples.reserve(scalars_);
    for (std::uint32_t r = 0; r < scalars_; ++r) multiples.push_back(scale_(r, g));
    std::sort(multiples.begin(), multiples.end());
    multiples.erase(std::unique(multiples.begin(), multiples.end()), multiples.end());

    const std::size_t before = members_.size();
    for (std::size_t i = 0; i < before; ++i) {
      const std::uint32_t s = members_[i];
      for (std::uint32_t x : multiples) {
        const std::uint32_t y = add_(s, x);
        if (!in_[y]) {
          in_[y] = 1;
          members_.push_back(y);
        }
      }
    }
    return true;
  }

  std::size_t size() const { return members_.size(); }

  std::vector<std::uint32_t> sorted_members() const {
    std::vector<std::uint32_t> out = members_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::size_t scalars_;
  Add add_;
  Scale scale_;
  std::vector<char> in_;
  std::vector<std::uint32_t> members_;
};

template <class Add, class Scale>
SpanBuilder(std::size_t, std::size_t, Add, Scale) -> SpanBuilder<Add, Scale>;

}  // namespace semirad::detail

#endif  // SEMIRAD_DETAIL_SPAN_HPP
