#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hgdec {

// Fixed-universe bit set. Every vertex set and edge set in this library is a
// Bitset over the dense index space of one hypergraph; identity is by index,
// never by name.
class Bitset {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Bitset() = default;
  explicit Bitset(std::size_t universe)
      : size_(universe), words_((universe + 63) / 64, 0) {}

  static Bitset full(std::size_t universe) {
    Bitset b(universe);
    for (std::size_t i = 0; i < b.words_.size(); ++i) b.words_[i] = ~0ULL;
    b.trim();
    return b;
  }

  std::size_t universe_size() const { return size_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1ULL;
  }
  void set(std::size_t i) { words_[i >> 6] |= 1ULL << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(1ULL << (i & 63)); }

  std::size_t count() const;
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool any() const { return !empty(); }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  Bitset& operator-=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

  bool operator==(const Bitset& o) const { return words_ == o.words_; }
  bool operator!=(const Bitset& o) const { return words_ != o.words_; }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  std::size_t find_first() const;
  std::size_t find_next(std::size_t i) const;

  // Orders sets as ascending index sequences, lexicographically; used for
  // deterministic orderings of subedges and components.
  bool lex_less(const Bitset& o) const;

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h ^ size_);
  }

  class iterator {
   public:
    iterator(const Bitset* b, std::size_t pos) : b_(b), pos_(pos) {}
    std::size_t operator*() const { return pos_; }
    iterator& operator++() {
      pos_ = b_->find_next(pos_);
      return *this;
    }
    bool operator!=(const iterator& o) const { return pos_ != o.pos_; }

   private:
    const Bitset* b_;
    std::size_t pos_;
  };
  iterator begin() const { return iterator(this, find_first()); }
  iterator end() const { return iterator(this, npos); }

  std::vector<std::size_t> to_indices() const {
    std::vector<std::size_t> out;
    for (auto i : *this) out.push_back(i);
    return out;
  }

  std::string to_string() const;

 private:
  void trim() {
    if (size_ % 64 != 0 && !words_.empty())
      words_.back() &= (1ULL << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

using VertexSet = Bitset;
using EdgeSet = Bitset;

}  // namespace hgdec

template <>
struct std::hash<hgdec::Bitset> {
  std::size_t operator()(const hgdec::Bitset& b) const { return b.hash(); }
};
