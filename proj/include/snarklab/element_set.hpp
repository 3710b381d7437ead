#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace snarklab {

// Dynamic bitset over element ids of one semi-graph.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }

  void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  // Complement within [0, size).
  ElementSet complement() const {
    ElementSet r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  bool is_subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  // |this \ o| without materialising the difference.
  int count_minus(const ElementSet& o) const {
    int c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & ~o.words_[i]);
    return c;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  static ElementSet from(int size, const std::vector<int>& ids) {
    ElementSet s(size);
    for (int i : ids) s.set(i);
    return s;
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) {
    // Lexicographic by member ids.
    return a.to_vector() <=> b.to_vector();
  }

 private:
  void trim() {
    if (size_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace snarklab
