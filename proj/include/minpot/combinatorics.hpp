#pragma once

#include "minpot/rational.hpp"

#include <vector>

namespace minpot {

/// Stirling number of the second kind: partitions of a d-set into k
/// non-empty blocks. Memoized; throws std::domain_error unless 0 <= k <= d.
BigInt stirling2(int d, int k);

/// Bell number: total partitions of a d-set (d >= 0).
BigInt bell(int d);

/// Falling factorial i(i-1)...(i-j+1); the empty product (j = 0) is 1.
BigInt falling_factorial(long long i, int j);

/// sum_{h=1..y} h^d for y >= 0, d >= 1. Computed both by direct summation
/// and through the Stirling expansion
///   sum_{h=1..y} h^d = sum_{j=1..d} stirling2(d,j) * (y+1)_{j+1} / (j+1);
/// the two routes must agree or a std::logic_error is raised.
BigInt sum_powers(long long y, int d);

/// lambda_d = sum_{j=1..d} ((j+2)/(j+1)) * stirling2(d,j), exact.
Rational lambda_d(int d);

/// lambda_d(y) = sum_j S(d,j) (y^{j+1}/(j+1) + y^j)
///             / sum_j S(d,j) (y+1)_{j+1}/(j+1),       d >= 1, y >= 1.
/// lambda_d_y(d, 1) == lambda_d(d).
Rational lambda_d_y(int d, long long y);

struct SeriesValue {
    double value = 0.0;
    int terms_used = 0; ///< index one past the last term summed
};

/// Truncated evaluation of
///   sum_{x>=0} (sum_{h<=x} h^d) y^x / (x! e^y)  divided by  sum_{h<=y} h^d.
/// Terms are accumulated exactly; truncation stops once the crude per-term
/// bound (sum_{h<=x} h^d <= x^{d+1}) falls below tolerance/10 for five
/// consecutive terms. Throws std::domain_error for d < 1, y < 1 or
/// tolerance <= 0.
SeriesValue rho_truncated(int d, long long y, double tolerance);

struct DobinskiCheck {
    int d = 0;
    Rational lambda_exact;
    double lambda_series = 0.0;
    double lambda_error = 0.0;
    bool lambda_ok = false;
    BigInt bell_exact;
    double bell_series = 0.0;
    double bell_error = 0.0;
    bool bell_ok = false;
};

struct DobinskiReport {
    std::vector<DobinskiCheck> checks;
    bool all_ok = true;
};

/// For each d <= d_max, checks the series identity
///   sum_{x>=0} (sum_{h<=x} h^d) / (x! e) == lambda_d
/// and the classic identity sum_{x>=0} x^d / (x! e) == bell(d), both against
/// the exact values to within `tolerance`.
DobinskiReport verify_dobinski_variant(int d_max, double tolerance);

} // namespace minpot
