#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace fcd {

using BigInt = boost::multiprecision::cpp_int;

enum class CatalanMethod { Recursive, Closed };

// Catalan triangle C(n, k) for 0 <= k <= n:
//   C(n, 0) = 1,  C(n, k) = C(n, k-1) + C(n-1, k),  C(n, n) = C(n, n-1)
// with closed form C(n, k) = (n+k)! (n-k+1) / (k! (n+1)!).  The diagonal
// entries C(n, n) = C(n, n-1) are the Catalan numbers.
class CatalanTriangle {
public:
  explicit CatalanTriangle(int max_n);

  int max_n() const noexcept { return max_n_; }
  const BigInt& at(int n, int k) const;  // throws std::invalid_argument out of range

private:
  int max_n_;
  std::vector<std::vector<BigInt>> rows_;
};

// Single entry by either method; the two must agree everywhere (tested).
BigInt catalan_entry(int n, int k, CatalanMethod method = CatalanMethod::Recursive);

BigInt catalan_number(int n);

// |FC(D_n)| = (n+3)/2 * Catalan(n) - 1, for n >= 4.
BigInt fc_count_type_d(int n);

// |FC(A_n)| = Catalan(n + 1), for n >= 1.
BigInt fc_count_type_a(int n);

}  // namespace fcd
