#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace gammalab {

/// Fixed-universe bitset over group element indices.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const { return universe_; }

  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  template <typename Index = std::uint32_t>
  std::vector<Index> members() const {
    std::vector<Index> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        out.push_back(static_cast<Index>(k * 64 + static_cast<std::size_t>(std::countr_zero(w))));
        w &= w - 1;
      }
    }
    return out;
  }

  bool subset_of(const ElementSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend bool operator<(const ElementSet& a, const ElementSet& b) { return a.members() < b.members(); }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const {
    std::size_t h = s.universe();
    for (auto w : s.words()) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }
};

}  // namespace gammalab
