#ifndef ARSTAT_COMBINATORICS_HPP
#define ARSTAT_COMBINATORICS_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>

namespace arstat {

namespace detail {

inline constexpr std::array<std::uint64_t, 21> kFactorials = [] {
  std::array<std::uint64_t, 21> f{};
  f[0] = 1;
  for (std::size_t i = 1; i < f.size(); ++i) f[i] = f[i - 1] * i;
  return f;
}();

}  // namespace detail

inline constexpr int kExactFactorialLimit = 20;

inline double log_factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  if (n <= kExactFactorialLimit) return std::log(static_cast<double>(detail::kFactorials[n]));
  return std::lgamma(static_cast<double>(n) + 1.0);
}

/// n! as a double; exact below 21!, log-gamma above.
inline double factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  if (n <= kExactFactorialLimit) return static_cast<double>(detail::kFactorials[n]);
  return std::exp(std::lgamma(static_cast<double>(n) + 1.0));
}

/// prod(num_i!) / prod(den_j!).
///
/// Evaluated as a ratio of exact doubles when every argument is at most 20,
/// otherwise accumulated in log space so large k does not overflow.
template <class NumRange, class DenRange>
double factorial_ratio(const NumRange& num, const DenRange& den) {
  bool small = true;
  for (int n : num) small = small && n >= 0 && n <= kExactFactorialLimit;
  for (int n : den) small = small && n >= 0 && n <= kExactFactorialLimit;
  if (small) {
    double value = 1.0;
    for (int n : num) value *= factorial(n);
    for (int n : den) value /= factorial(n);
    return value;
  }
  double log_value = 0.0;
  for (int n : num) log_value += log_factorial(n);
  for (int n : den) log_value -= log_factorial(n);
  return std::exp(log_value);
}

inline double factorial_ratio(std::initializer_list<int> num, std::initializer_list<int> den) {
  return factorial_ratio<std::initializer_list<int>, std::initializer_list<int>>(num, den);
}

/// Exact binomial coefficient; throws on 64-bit overflow.
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
    if (result > UINT64_MAX / factor) throw std::overflow_error("binomial overflow");
    result = result * factor / static_cast<std::uint64_t>(i);
  }
  return result;
}

/// Rising product a (a+1) ... (a+count-1) as a double.
inline double rising_product(int a, int count) {
  double value = 1.0;
  for (int i = 0; i < count; ++i) value *= static_cast<double>(a + i);
  return value;
}

}  // namespace arstat

#endif  // ARSTAT_COMBINATORICS_HPP
