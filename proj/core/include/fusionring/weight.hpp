#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fusionring {

// Expression templates off so that mixed int/Integer expressions deduce to Integer.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline constexpr int kMaxRank = 8;

// Coordinates in the fundamental-weight basis. The rank lives in the
// RootDatum; slots past the rank are always zero.
struct Weight {
  std::array<int32_t, kMaxRank> c{};

  int32_t& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  int32_t operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  Weight& operator+=(const Weight& o) {
    for (int i = 0; i < kMaxRank; ++i) c[i] += o.c[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    for (int i = 0; i < kMaxRank; ++i) c[i] -= o.c[i];
    return *this;
  }
  bool is_zero() const {
    for (int32_t x : c)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

inline Weight operator+(Weight a, const Weight& b) { return a += b; }
inline Weight operator-(Weight a, const Weight& b) { return a -= b; }
inline Weight operator-(Weight a) {
  for (auto& x : a.c) x = -x;
  return a;
}
inline Weight operator*(int32_t s, Weight a) {
  for (auto& x : a.c) x *= s;
  return a;
}

inline Weight make_weight(std::initializer_list<int32_t> xs) {
  Weight w;
  int i = 0;
  for (int32_t x : xs) w.c[static_cast<std::size_t>(i++)] = x;
  return w;
}

// i-th fundamental weight, 0-based node index.
inline Weight fundamental(int i) {
  Weight w;
  w[i] = 1;
  return w;
}

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    uint64_t h = 1469598103934665603ull;
    for (int32_t x : w.c) {
      h ^= static_cast<uint32_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

// "[a,b,c]" with `rank` entries.
std::string to_string(const Weight& w, int rank);

}  // namespace fusionring
