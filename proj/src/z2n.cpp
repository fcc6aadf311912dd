#include "qwm/z2n.hpp"

namespace qwm {

GroupElement parse_bits(const std::string& s, int n) {
  if (static_cast<int>(s.size()) != n)
    throw std::invalid_argument("bit string '" + s + "' has length " +
                                std::to_string(s.size()) + ", expected " + std::to_string(n));
  bits_t b = 0;
  for (char c : s) {
    if (c != '0' && c != '1') throw std::invalid_argument("bit string must contain only 0/1");
    b = (b << 1) | static_cast<bits_t>(c - '0');
  }
  return GroupElement(b, n);
}

std::string format_bits(bits_t x, int n) {
  std::string s(static_cast<std::size_t>(n), '0');
  for (int j = 0; j < n; ++j)
    if (x >> j & 1) s[static_cast<std::size_t>(n - 1 - j)] = '1';
  return s;
}

BooleanFunctionZ2::BooleanFunctionZ2(int n, std::vector<bits_t> support)
    : n_(n), support_(std::move(support)) {
  if (n < 0 || n > 30) throw std::invalid_argument("BooleanFunctionZ2: dimension out of range");
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  for (bits_t x : support_)
    if (x >= (bits_t{1} << n))
      throw std::invalid_argument("BooleanFunctionZ2: support element exceeds 2^n");
}

std::vector<double> BooleanFunctionZ2::table() const {
  std::vector<double> t(std::size_t{1} << n_, 0.0);
  for (bits_t x : support_) t[x] = 1.0;
  return t;
}

std::vector<std::int64_t> BooleanFunctionZ2::integer_table() const {
  std::vector<std::int64_t> t(std::size_t{1} << n_, 0);
  for (bits_t x : support_) t[x] = 1;
  return t;
}

std::vector<std::int64_t> integer_spectrum(const BooleanFunctionZ2& f) {
  auto v = f.integer_table();
  fwht_inplace(v);
  return v;
}

std::size_t fourier_support_size(const BooleanFunctionZ2& f) {
  std::size_t count = 0;
  for (std::int64_t v : integer_spectrum(f))
    if (v != 0) ++count;
  return count;
}

}  // namespace qwm
