#include "hgdec/bitset.hpp"

#include <bit>

namespace hgdec {

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::size_t Bitset::find_first() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
  return npos;
}

std::size_t Bitset::find_next(std::size_t i) const {
  ++i;
  if (i >= size_) return npos;
  std::size_t wi = i >> 6;
  std::uint64_t w = words_[wi] & (~0ULL << (i & 63));
  if (w) return wi * 64 + std::countr_zero(w);
  for (++wi; wi < words_.size(); ++wi)
    if (words_[wi]) return wi * 64 + std::countr_zero(words_[wi]);
  return npos;
}

bool Bitset::lex_less(const Bitset& o) const {
  std::size_t a = find_first(), b = o.find_first();
  while (a != npos && b != npos) {
    if (a != b) return a < b;
    a = find_next(a);
    b = o.find_next(b);
  }
  return a == npos && b != npos;
}

std::string Bitset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto i : *this) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  s += "}";
  return s;
}

}  // namespace hgdec
