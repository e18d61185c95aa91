#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace torslat {

/// A subset of catalog indices. It stands for the additive, summand-closed
/// subcategory generated by those indecomposables (0 is always implicit).
class Mask {
 public:
  Mask() = default;
  explicit Mask(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  Mask(std::size_t universe, std::initializer_list<int> members) : Mask(universe) {
    for (int i : members) set(i);
  }
  Mask(std::size_t universe, std::span<const int> members) : Mask(universe) {
    for (int i : members) set(i);
  }

  static Mask full(std::size_t universe) {
    Mask m(universe);
    for (std::size_t i = 0; i < universe; ++i) m.set(static_cast<int>(i));
    return m;
  }

  std::size_t universe() const { return universe_; }

  bool test(int i) const { return (words_[std::size_t(i) / 64] >> (std::size_t(i) % 64)) & 1u; }
  void set(int i) { words_[std::size_t(i) / 64] |= std::uint64_t{1} << (std::size_t(i) % 64); }
  void reset(int i) { words_[std::size_t(i) / 64] &= ~(std::uint64_t{1} << (std::size_t(i) % 64)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const Mask& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }
  bool intersects(const Mask& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  Mask& operator|=(const Mask& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Mask& operator&=(const Mask& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Mask& operator-=(const Mask& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend Mask operator|(Mask a, const Mask& b) { return a |= b; }
  friend Mask operator&(Mask a, const Mask& b) { return a &= b; }
  friend Mask operator-(Mask a, const Mask& b) { return a -= b; }

  Mask complement() const { return full(universe_) - *this; }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < universe_; ++i)
      if (test(static_cast<int>(i))) out.push_back(static_cast<int>(i));
    return out;
  }

  friend bool operator==(const Mask&, const Mask&) = default;
  friend auto operator<=>(const Mask&, const Mask&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical node order: by cardinality, then lexicographically on the
/// sorted member lists.
inline bool canonical_less(const Mask& a, const Mask& b) {
  const auto ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.members() < b.members();
}

}  // namespace torslat
