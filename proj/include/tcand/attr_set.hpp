#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace tcand {

// Set of attribute ids over a fixed universe [0, n). Stored as a bitset with
// one inline word, so sets over universes up to 64 attributes never allocate.
class AttrSet {
public:
  AttrSet() = default;
  explicit AttrSet(int n) : nbits_(n) {
    assert(n >= 0);
    if (nwords() > 1) tail_.assign(nwords() - 1, 0);
  }

  static AttrSet full(int n) {
    AttrSet s(n);
    if (n == 0) return s;
    for (int w = 0; w < s.nwords(); ++w) s.word(w) = ~0ull;
    s.trim();
    return s;
  }

  static AttrSet of(int n, std::initializer_list<int> ids) {
    AttrSet s(n);
    for (int i : ids) s.set(i);
    return s;
  }

  int universe_size() const { return nbits_; }

  bool test(int i) const {
    assert(i >= 0 && i < nbits_);
    return (cword(i >> 6) >> (i & 63)) & 1ull;
  }
  void set(int i) {
    assert(i >= 0 && i < nbits_);
    word(i >> 6) |= 1ull << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < nbits_);
    word(i >> 6) &= ~(1ull << (i & 63));
  }

  int count() const {
    int c = __builtin_popcountll(head_);
    for (uint64_t w : tail_) c += __builtin_popcountll(w);
    return c;
  }

  bool empty() const {
    if (head_) return false;
    for (uint64_t w : tail_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const AttrSet& o) const {
    assert(nbits_ == o.nbits_);
    if (head_ & ~o.head_) return false;
    for (size_t w = 0; w < tail_.size(); ++w)
      if (tail_[w] & ~o.tail_[w]) return false;
    return true;
  }

  bool intersects(const AttrSet& o) const {
    assert(nbits_ == o.nbits_);
    if (head_ & o.head_) return true;
    for (size_t w = 0; w < tail_.size(); ++w)
      if (tail_[w] & o.tail_[w]) return true;
    return false;
  }

  int intersect_count(const AttrSet& o) const {
    assert(nbits_ == o.nbits_);
    int c = __builtin_popcountll(head_ & o.head_);
    for (size_t w = 0; w < tail_.size(); ++w)
      c += __builtin_popcountll(tail_[w] & o.tail_[w]);
    return c;
  }

  AttrSet& operator|=(const AttrSet& o) {
    assert(nbits_ == o.nbits_);
    head_ |= o.head_;
    for (size_t w = 0; w < tail_.size(); ++w) tail_[w] |= o.tail_[w];
    return *this;
  }
  AttrSet& operator&=(const AttrSet& o) {
    assert(nbits_ == o.nbits_);
    head_ &= o.head_;
    for (size_t w = 0; w < tail_.size(); ++w) tail_[w] &= o.tail_[w];
    return *this;
  }
  // Set difference: removes every element of o.
  AttrSet& subtract(const AttrSet& o) {
    assert(nbits_ == o.nbits_);
    head_ &= ~o.head_;
    for (size_t w = 0; w < tail_.size(); ++w) tail_[w] &= ~o.tail_[w];
    return *this;
  }

  friend AttrSet operator|(AttrSet a, const AttrSet& b) { return a |= b; }
  friend AttrSet operator&(AttrSet a, const AttrSet& b) { return a &= b; }

  friend bool operator==(const AttrSet& a, const AttrSet& b) {
    return a.nbits_ == b.nbits_ && a.head_ == b.head_ && a.tail_ == b.tail_;
  }
  friend bool operator!=(const AttrSet& a, const AttrSet& b) { return !(a == b); }

  // Arbitrary strict total order; used only for deterministic dedup maps.
  friend bool operator<(const AttrSet& a, const AttrSet& b) {
    if (a.nbits_ != b.nbits_) return a.nbits_ < b.nbits_;
    for (int w = a.nwords() - 1; w >= 1; --w)
      if (a.tail_[w - 1] != b.tail_[w - 1]) return a.tail_[w - 1] < b.tail_[w - 1];
    return a.head_ < b.head_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (int w = 0; w < nwords(); ++w) {
      uint64_t x = cword(w);
      while (x) {
        int b = __builtin_ctzll(x);
        f(w * 64 + b);
        x &= x - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  // Lowest element, or -1 when empty.
  int first() const {
    for (int w = 0; w < nwords(); ++w)
      if (cword(w)) return w * 64 + __builtin_ctzll(cword(w));
    return -1;
  }

private:
  int nwords() const { return nbits_ <= 64 ? (nbits_ > 0 ? 1 : 0) : (nbits_ + 63) / 64; }
  uint64_t& word(int w) { return w == 0 ? head_ : tail_[w - 1]; }
  uint64_t cword(int w) const { return w == 0 ? head_ : tail_[w - 1]; }
  void trim() {
    int used = nbits_ & 63;
    if (used) word(nwords() - 1) &= ~0ull >> (64 - used);
  }

  int nbits_ = 0;
  uint64_t head_ = 0;
  std::vector<uint64_t> tail_;
};

}  // namespace tcand
