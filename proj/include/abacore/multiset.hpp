#pragma once

// Multiset over an ordered value type, kept sorted ascending so equality,
// union and symmetric difference are the exact multiset operations. This is
// the shape every hook-length identity in this library is stated in.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace abacore {

template <typename T>
class Multiset {
 public:
  Multiset() = default;
  explicit Multiset(std::vector<T> values) : vals_(std::move(values)) {
    std::sort(vals_.begin(), vals_.end());
  }

  void insert(T value) {
    auto pos = std::upper_bound(vals_.begin(), vals_.end(), value);
    vals_.insert(pos, std::move(value));
  }

  // multiset union: multiplicities add
  Multiset united(const Multiset& other) const {
    std::vector<T> out;
    out.reserve(size() + other.size());
    std::merge(vals_.begin(), vals_.end(), other.vals_.begin(),
               other.vals_.end(), std::back_inserter(out));
    Multiset m;
    m.vals_ = std::move(out);  // already sorted
    return m;
  }

  // true iff every element of sub occurs here at least as often
  bool contains(const Multiset& sub) const {
    return std::includes(vals_.begin(), vals_.end(), sub.vals_.begin(),
                         sub.vals_.end());
  }

  Multiset symmetric_difference(const Multiset& other) const {
    std::vector<T> out;
    std::set_symmetric_difference(vals_.begin(), vals_.end(),
                                  other.vals_.begin(), other.vals_.end(),
                                  std::back_inserter(out));
    Multiset m;
    m.vals_ = std::move(out);
    return m;
  }

  template <typename F>
  auto mapped(F f) const {
    std::vector<decltype(f(std::declval<const T&>()))> out;
    out.reserve(vals_.size());
    for (const T& v : vals_) out.push_back(f(v));
    return Multiset<decltype(f(std::declval<const T&>()))>(std::move(out));
  }

  template <typename Pred>
  Multiset filtered(Pred keep) const {
    std::vector<T> out;
    for (const T& v : vals_)
      if (keep(v)) out.push_back(v);
    Multiset m;
    m.vals_ = std::move(out);
    return m;
  }

  const std::vector<T>& values() const { return vals_; }
  std::size_t size() const { return vals_.size(); }
  bool empty() const { return vals_.empty(); }
  auto begin() const { return vals_.begin(); }
  auto end() const { return vals_.end(); }

  friend bool operator==(const Multiset&, const Multiset&) = default;

 private:
  std::vector<T> vals_;
};

template <typename Acc, typename T>
Acc product_as(const Multiset<T>& m) {
  Acc acc = 1;
  for (const T& v : m) acc *= v;
  return acc;
}

}  // namespace abacore
