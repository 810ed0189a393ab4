#include "fcd/catalan.hpp"

#include <stdexcept>
#include <string>

namespace fcd {

namespace {
void check_entry(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("triangle entry (" + std::to_string(n) + "," +
                                std::to_string(k) + ") out of range");
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}
}  // namespace

CatalanTriangle::CatalanTriangle(int max_n) : max_n_(max_n) {
  if (max_n < 0) throw std::invalid_argument("max_n must be >= 0");
  rows_.reserve(static_cast<std::size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (int k = 1; k < n; ++k)
      row[static_cast<std::size_t>(k)] =
          row[static_cast<std::size_t>(k - 1)] + rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k)];
    if (n > 0) row[static_cast<std::size_t>(n)] = row[static_cast<std::size_t>(n - 1)];
    rows_.push_back(std::move(row));
  }
}

const BigInt& CatalanTriangle::at(int n, int k) const {
  check_entry(n, k);
  if (n > max_n_) throw std::invalid_argument("row beyond table size");
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt catalan_entry(int n, int k, CatalanMethod method) {
  check_entry(n, k);
  if (method == CatalanMethod::Recursive) return CatalanTriangle(n).at(n, k);
  // (n+k)! (n-k+1) / (k! (n+1)!) -- the division is exact.
  BigInt numerator = factorial(n + k) * (n - k + 1);
  return numerator / (factorial(k) * factorial(n + 1));
}

BigInt catalan_number(int n) { return catalan_entry(n, n, CatalanMethod::Closed); }

BigInt fc_count_type_d(int n) {
  if (n < 4) throw std::invalid_argument("type D rank must be >= 4");
  // (n+3)/2 * C_n - 1 is an integer for every n: C_n is even when n is even.
  return (catalan_number(n) * (n + 3)) / 2 - 1;
}

BigInt fc_count_type_a(int n) {
  if (n < 1) throw std::invalid_argument("type A rank must be >= 1");
  return catalan_number(n + 1);
}

}  // namespace fcd
