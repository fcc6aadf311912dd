#pragma once

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Group arithmetic on Z_2^n and the Walsh-Hadamard (Fourier) transform.
// Elements are stored as machine integers; bit j of the integer is
// coordinate j+1 of the group element, so larger coordinates live in
// higher bits and a bit string like "110" reads left-to-right from the
// highest coordinate down.

namespace qwm {

using bits_t = std::uint64_t;

inline bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

/// An element of Z_2^n: an n-bit pattern plus its dimension.
struct GroupElement {
  bits_t bits = 0;
  int n = 0;

  GroupElement() = default;
  GroupElement(bits_t b, int dim) : bits(b), n(dim) {
    if (dim < 0 || dim > 62) throw std::invalid_argument("GroupElement: dimension out of range");
    if (dim < 62 && b >= (bits_t{1} << dim))
      throw std::invalid_argument("GroupElement: bits exceed 2^n");
  }

  friend GroupElement operator^(GroupElement a, GroupElement b) {
    if (a.n != b.n) throw std::invalid_argument("GroupElement: dimension mismatch");
    return GroupElement(a.bits ^ b.bits, a.n);
  }
  friend bool operator==(GroupElement a, GroupElement b) {
    return a.n == b.n && a.bits == b.bits;
  }
};

inline int hamming_weight(GroupElement x) { return std::popcount(x.bits); }
inline int hamming_weight(bits_t x) { return std::popcount(x); }

/// Inner product a.b mod 2.
inline int dot_mod2(GroupElement a, GroupElement b) {
  if (a.n != b.n) throw std::invalid_argument("dot_mod2: dimension mismatch");
  return std::popcount(a.bits & b.bits) & 1;
}
inline int dot_mod2(bits_t a, bits_t b) { return std::popcount(a & b) & 1; }

/// Character chi_a(x) = (-1)^(a.x).
inline int character(GroupElement a, GroupElement x) { return dot_mod2(a, x) ? -1 : 1; }
inline int character(bits_t a, bits_t x) { return dot_mod2(a, x) ? -1 : 1; }

/// Parses a bit string, leftmost character = highest coordinate.
GroupElement parse_bits(const std::string& s, int n);
std::string format_bits(bits_t x, int n);

/// A {0,1}-valued function on Z_2^n given by its support.
class BooleanFunctionZ2 {
 public:
  BooleanFunctionZ2(int n, std::vector<bits_t> support);

  int dimension() const { return n_; }
  const std::vector<bits_t>& support() const { return support_; }

  bool operator()(bits_t x) const {
    return std::binary_search(support_.begin(), support_.end(), x);
  }

  /// Dense value table of length 2^n.
  std::vector<double> table() const;
  std::vector<std::int64_t> integer_table() const;

 private:
  int n_;
  std::vector<bits_t> support_;  // sorted, deduplicated
};

/// In-place unnormalized Walsh-Hadamard butterfly:
/// out[a] = sum_x v[x] * (-1)^(a.x).  Self-inverse up to a factor 2^n.
template <typename T>
void fwht_inplace(std::vector<T>& v) {
  const std::size_t n = v.size();
  if (!is_power_of_two(n)) throw std::invalid_argument("fwht: length not a power of two");
  for (std::size_t half = 1; half < n; half <<= 1) {
    for (std::size_t block = 0; block < n; block += half << 1) {
      for (std::size_t i = block; i < block + half; ++i) {
        T lo = v[i], hi = v[i + half];
        v[i] = lo + hi;
        v[i + half] = lo - hi;
      }
    }
  }
}

template <typename T>
std::vector<T> fwht(std::vector<T> v) {
  fwht_inplace(v);
  return v;
}

template <typename T>
std::vector<T> inverse_fwht(std::vector<T> v) {
  fwht_inplace(v);
  const double scale = 1.0 / static_cast<double>(v.size());
  for (auto& x : v) x *= scale;
  return v;
}

/// Exact integer spectrum f_hat of a Boolean function (values in [-2^n, 2^n]).
std::vector<std::int64_t> integer_spectrum(const BooleanFunctionZ2& f);

/// |supp(f_hat)|, counted in exact integer arithmetic.
std::size_t fourier_support_size(const BooleanFunctionZ2& f);

}  // namespace qwm
