#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "didp/errors.hpp"

namespace didp {

// Fixed-capacity bit set over the universe {0, ..., capacity-1}.
class Set {
 public:
  Set() = default;
  explicit Set(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}
  Set(std::size_t capacity, std::initializer_list<std::int64_t> members) : Set(capacity) {
    for (auto m : members) insert(m);
  }
  template <class It>
  Set(std::size_t capacity, It first, It last) : Set(capacity) {
    for (; first != last; ++first) insert(*first);
  }

  static Set full(std::size_t capacity) {
    Set s(capacity);
    for (std::size_t i = 0; i < capacity; ++i) s.insert(static_cast<std::int64_t>(i));
    return s;
  }

  std::size_t capacity() const { return capacity_; }

  bool contains(std::int64_t e) const {
    if (e < 0 || static_cast<std::size_t>(e) >= capacity_) return false;
    return (words_[e / 64] >> (e % 64)) & 1u;
  }
  void insert(std::int64_t e) {
    check(e);
    words_[e / 64] |= std::uint64_t{1} << (e % 64);
  }
  void erase(std::int64_t e) {
    check(e);
    words_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  std::vector<std::int64_t> members() const {
    std::vector<std::int64_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        int b = std::countr_zero(w);
        out.push_back(static_cast<std::int64_t>(k * 64 + b));
        w &= w - 1;
      }
    }
    return out;
  }

  Set& operator|=(const Set& o) {
    same_universe(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Set& operator&=(const Set& o) {
    same_universe(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Set& operator-=(const Set& o) {
    same_universe(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  Set complement() const {
    Set s(capacity_);
    for (std::size_t k = 0; k < words_.size(); ++k) s.words_[k] = ~words_[k];
    s.trim();
    return s;
  }
  bool is_subset_of(const Set& o) const {
    same_universe(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  friend Set operator|(Set a, const Set& b) { return a |= b; }
  friend Set operator&(Set a, const Set& b) { return a &= b; }
  friend Set operator-(Set a, const Set& b) { return a -= b; }
  friend bool operator==(const Set& a, const Set& b) = default;

  std::size_t hash() const {
    std::size_t h = capacity_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto m : members()) {
      if (!first) s += ", ";
      s += std::to_string(m);
      first = false;
    }
    return s + "}";
  }

 private:
  void check(std::int64_t e) const {
    if (e < 0 || static_cast<std::size_t>(e) >= capacity_)
      throw EvalError("element " + std::to_string(e) + " outside set universe of size " + std::to_string(capacity_));
  }
  void same_universe(const Set& o) const {
    if (o.capacity_ != capacity_)
      throw EvalError("set universes differ (" + std::to_string(capacity_) + " vs " + std::to_string(o.capacity_) + ")");
  }
  void trim() {
    if (capacity_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (capacity_ % 64)) - 1;
  }

  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace didp
