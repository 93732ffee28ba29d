#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sqhnn {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

IntMatrix to_big(const std::vector<std::vector<long long>>& m);

// Smith normal form diagonal of an integer matrix: the nonzero invariant
// factors d_1 | d_2 | ... | d_r, all positive. r is the rank.
std::vector<BigInt> smith_diagonal(IntMatrix m);

// Z-basis of {v in Z^cols : m v = 0}, one basis vector per entry.
std::vector<std::vector<BigInt>> integer_kernel(const IntMatrix& m, std::size_t cols);

}  // namespace sqhnn
