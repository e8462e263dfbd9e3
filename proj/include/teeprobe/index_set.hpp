#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace teeprobe {

/// Set of small indices (< 64) stored as a bitmask. The tag keeps party sets
/// and face sets from being mixed up.
template <class Tag>
class IndexSet {
 public:
  using Mask = std::uint64_t;
  static constexpr int kCapacity = 64;

  constexpr IndexSet() noexcept = default;
  constexpr explicit IndexSet(Mask bits) noexcept : bits_(bits) {}

  static constexpr IndexSet single(int index) noexcept { return IndexSet(Mask{1} << index); }
  static constexpr IndexSet first(int count) noexcept {
    return IndexSet(count >= kCapacity ? ~Mask{0} : (Mask{1} << count) - 1);
  }

  constexpr Mask bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool contains(int index) const noexcept { return (bits_ >> index) & 1U; }
  constexpr bool contains(IndexSet other) const noexcept { return (other.bits_ & ~bits_) == 0; }
  constexpr bool intersects(IndexSet other) const noexcept { return (bits_ & other.bits_) != 0; }
  constexpr int lowest() const noexcept { return std::countr_zero(bits_); }
  constexpr int highest() const noexcept { return 63 - std::countl_zero(bits_); }

  constexpr IndexSet with(int index) const noexcept { return IndexSet(bits_ | (Mask{1} << index)); }
  constexpr IndexSet without(int index) const noexcept { return IndexSet(bits_ & ~(Mask{1} << index)); }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (Mask m = bits_; m != 0; m &= m - 1) f(std::countr_zero(m));
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) noexcept { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) noexcept { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) noexcept { return IndexSet(a.bits_ & ~b.bits_); }
  constexpr IndexSet& operator|=(IndexSet o) noexcept { bits_ |= o.bits_; return *this; }
  friend constexpr bool operator==(IndexSet, IndexSet) noexcept = default;

 private:
  Mask bits_ = 0;
};

/// Basis order: by size, then lexicographically on the sorted index lists
/// (A, B, C, AB, AC, BC, ABC, ...).
template <class Tag>
struct CanonicalOrder {
  constexpr bool operator()(IndexSet<Tag> a, IndexSet<Tag> b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    const auto diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    // The set holding the lowest differing index is lexicographically first.
    return (a.bits() & (diff & (~diff + 1))) != 0;
  }
};

}  // namespace teeprobe

template <class Tag>
struct std::hash<teeprobe::IndexSet<Tag>> {
  std::size_t operator()(teeprobe::IndexSet<Tag> s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
