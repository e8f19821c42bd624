#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ksgap {

// A subset of the elements {0, ..., n-1} of a poset, n <= 64, stored as a
// bitmask.  Element i is in the set iff bit i is set.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet single(int z) {
    return ElementSet(std::uint64_t{1} << z);
  }
  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int z) const { return (bits_ >> z) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }

  constexpr ElementSet operator|(ElementSet o) const {
    return ElementSet(bits_ | o.bits_);
  }
  constexpr ElementSet operator&(ElementSet o) const {
    return ElementSet(bits_ & o.bits_);
  }
  // Set difference.
  constexpr ElementSet operator-(ElementSet o) const {
    return ElementSet(bits_ & ~o.bits_);
  }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr bool operator==(const ElementSet&) const = default;

  constexpr ElementSet with(int z) const {
    return ElementSet(bits_ | (std::uint64_t{1} << z));
  }
  constexpr ElementSet without(int z) const {
    return ElementSet(bits_ & ~(std::uint64_t{1} << z));
  }
  constexpr bool subset_of(ElementSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr bool intersects(ElementSet o) const {
    return (bits_ & o.bits_) != 0;
  }

  // Elements in ascending index order.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace ksgap
