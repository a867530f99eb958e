#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "orbitheta/error.hpp"

namespace orbitheta {

// Exact vector of half-integers. Entry i is stored as 2*coordinate_i, so all
// arithmetic and comparisons are integer-exact. Used for lambda_O, lambda_L,
// lambda_R, mu, nu and K-type highest weights.
class HalfIntVector {
 public:
  HalfIntVector() = default;
  explicit HalfIntVector(std::vector<std::int64_t> doubled) : d_(std::move(doubled)) {}

  // Builds from doubled entries, e.g. {3, 1} is (3/2, 1/2).
  static HalfIntVector from_doubled(std::vector<std::int64_t> doubled) {
    return HalfIntVector(std::move(doubled));
  }
  // Builds from integer coordinates.
  static HalfIntVector from_ints(const std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> d;
    d.reserve(v.size());
    for (auto x : v) d.push_back(2 * x);
    return HalfIntVector(std::move(d));
  }
  // Parses comma-separated coordinates like "3/2,-1,0".
  static HalfIntVector parse(const std::string& text);

  std::size_t rank() const { return d_.size(); }
  bool empty() const { return d_.empty(); }
  std::int64_t doubled(std::size_t i) const { return d_[i]; }
  const std::vector<std::int64_t>& doubled() const { return d_; }
  std::vector<std::int64_t>& doubled() { return d_; }

  bool is_integral() const {
    for (auto x : d_)
      if (x % 2 != 0) return false;
    return true;
  }
  // All entries in Z+1/2 (e.g. spin weights).
  bool is_strictly_half_integral() const {
    for (auto x : d_)
      if (x % 2 == 0) return false;
    return !d_.empty();
  }

  // Sum of |coordinate_i| doubled (exact height measure without division).
  std::int64_t doubled_height() const {
    std::int64_t s = 0;
    for (auto x : d_) s += x < 0 ? -x : x;
    return s;
  }

  HalfIntVector concat(const HalfIntVector& other) const {
    std::vector<std::int64_t> d = d_;
    d.insert(d.end(), other.d_.begin(), other.d_.end());
    return HalfIntVector(std::move(d));
  }
  HalfIntVector negated() const {
    std::vector<std::int64_t> d = d_;
    for (auto& x : d) x = -x;
    return HalfIntVector(std::move(d));
  }
  HalfIntVector plus(const HalfIntVector& o) const {
    require_same_rank(o);
    std::vector<std::int64_t> d(d_.size());
    for (std::size_t i = 0; i < d_.size(); ++i) d[i] = d_[i] + o.d_[i];
    return HalfIntVector(std::move(d));
  }
  HalfIntVector minus(const HalfIntVector& o) const {
    require_same_rank(o);
    std::vector<std::int64_t> d(d_.size());
    for (std::size_t i = 0; i < d_.size(); ++i) d[i] = d_[i] - o.d_[i];
    return HalfIntVector(std::move(d));
  }
  // Exact halving; fails unless every entry is even-doubled.
  HalfIntVector half() const {
    std::vector<std::int64_t> d(d_.size());
    for (std::size_t i = 0; i < d_.size(); ++i) {
      if (d_[i] % 2 != 0) fail(Errc::NonIntegralMu, "half() of a non-integral vector");
      d[i] = d_[i] / 2;
    }
    return HalfIntVector(std::move(d));
  }

  bool operator==(const HalfIntVector& o) const { return d_ == o.d_; }
  bool operator!=(const HalfIntVector& o) const { return d_ != o.d_; }
  bool operator<(const HalfIntVector& o) const { return d_ < o.d_; }

  // Canonical fraction strings: "3/2", "-1", "0".
  std::string entry_string(std::size_t i) const;
  std::string to_string() const;  // "(3/2,1/2,1/2)"

  void require_same_rank(const HalfIntVector& o) const {
    if (d_.size() != o.d_.size()) fail(Errc::RankMismatch, "rank mismatch");
  }

 private:
  std::vector<std::int64_t> d_;
};

// Descending-by-1 string a, a-1, ..., b (empty when b > a). Arguments are
// doubled coordinates; a and b must have the same parity.
HalfIntVector descending_string(std::int64_t twice_a, std::int64_t twice_b);

}  // namespace orbitheta
