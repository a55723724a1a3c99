#include "minpot/combinatorics.hpp"

#include <cmath>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace minpot {

namespace {

std::mutex stirling_mutex;
// row d holds S(d,0..d); a deque keeps references to finished rows valid
// while later rows are appended, so concurrent readers are safe
std::deque<std::vector<BigInt>> stirling_rows;

const std::vector<BigInt>& stirling_row(int d) {
    std::lock_guard<std::mutex> lock(stirling_mutex);
    if (stirling_rows.empty()) stirling_rows.push_back({BigInt(1)}); // S(0,0)=1
    while (static_cast<int>(stirling_rows.size()) <= d) {
        const auto& prev = stirling_rows.back();
        const int n = static_cast<int>(stirling_rows.size());
        std::vector<BigInt> row(n + 1);
        row[0] = 0;
        for (int k = 1; k <= n; ++k) {
            row[k] = BigInt(k) * (k < n ? prev[k] : BigInt(0)) + prev[k - 1];
        }
        stirling_rows.push_back(std::move(row));
    }
    return stirling_rows[d];
}

BigInt int_pow(const BigInt& base, int exp) {
    BigInt out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

// Shared truncation loop for the Poisson-weighted series
//   sum_{x>=0} value(x) * y^x / x!  * e^{-y},
// where value(x) is a non-negative integer bounded by x^{d+1}.
SeriesValue poisson_series(const std::function<BigInt(long long)>& value, int d,
                           long long y, double tolerance) {
    if (d < 1) throw std::domain_error("poisson series: d must be >= 1");
    if (y < 1) throw std::domain_error("poisson series: y must be >= 1");
    if (!(tolerance > 0)) throw std::domain_error("poisson series: tolerance must be positive");

    const double log_y = std::log(static_cast<double>(y));
    const double cutoff = std::log(tolerance / 10.0);
    Rational sum = 0;
    BigInt pow_y = 1;  // y^x
    BigInt fact = 1;   // x!
    int consecutive_small = 0;
    long long x = 0;
    while (true) {
        sum += Rational(value(x) * pow_y, fact);
        // crude bound on the next term: (x+1)^{d+1} y^{x+1} / (x+1)! e^{-y}
        const double xn = static_cast<double>(x + 1);
        const double log_bound =
            (d + 1) * std::log(xn) + xn * log_y - std::lgamma(xn + 1.0) - y;
        consecutive_small = log_bound < cutoff ? consecutive_small + 1 : 0;
        if (consecutive_small >= 5) break;
        ++x;
        pow_y *= y;
        fact *= x;
        if (x > 200000)
            throw std::logic_error("poisson series failed to truncate");
    }
    SeriesValue out;
    out.terms_used = static_cast<int>(x) + 1;
    out.value = to_double(sum) * std::exp(-static_cast<double>(y));
    return out;
}

} // namespace

BigInt stirling2(int d, int k) {
    if (d < 0 || k < 0 || k > d)
        throw std::domain_error("stirling2 requires 0 <= k <= d, got d=" +
                                std::to_string(d) + " k=" + std::to_string(k));
    return stirling_row(d)[k];
}

BigInt bell(int d) {
    if (d < 0) throw std::domain_error("bell requires d >= 0");
    const auto& row = stirling_row(d);
    BigInt sum = 0;
    for (const auto& v : row) sum += v;
    return sum;
}

BigInt falling_factorial(long long i, int j) {
    if (i < 0 || j < 0)
        throw std::domain_error("falling_factorial requires non-negative arguments");
    BigInt out = 1;
    for (int k = 0; k < j; ++k) out *= BigInt(i - k);
    return out;
}

BigInt sum_powers(long long y, int d) {
    if (y < 0 || d < 1)
        throw std::domain_error("sum_powers requires y >= 0 and d >= 1");
    BigInt direct = 0;
    for (long long h = 1; h <= y; ++h) direct += int_pow(BigInt(h), d);
    Rational via_stirling = 0;
    for (int j = 1; j <= d; ++j)
        via_stirling += Rational(stirling2(d, j) * falling_factorial(y + 1, j + 1), j + 1);
    if (Rational(direct) != via_stirling)
        throw std::logic_error("sum_powers: direct sum and Stirling expansion disagree");
    return direct;
}

Rational lambda_d(int d) {
    if (d < 1) throw std::domain_error("lambda_d requires d >= 1");
    Rational sum = 0;
    for (int j = 1; j <= d; ++j)
        sum += Rational(BigInt(j + 2) * stirling2(d, j), j + 1);
    return sum;
}

Rational lambda_d_y(int d, long long y) {
    if (d < 1) throw std::domain_error("lambda_d_y requires d >= 1");
    if (y < 1) throw std::domain_error("lambda_d_y requires y >= 1");
    Rational num = 0;
    Rational den = 0;
    const BigInt ypow_base(y);
    for (int j = 1; j <= d; ++j) {
        const BigInt s = stirling2(d, j);
        num += Rational(s * int_pow(ypow_base, j + 1), j + 1) + Rational(s * int_pow(ypow_base, j));
        den += Rational(s * falling_factorial(y + 1, j + 1), j + 1);
    }
    return num / den;
}

SeriesValue rho_truncated(int d, long long y, double tolerance) {
    // running prefix sum_{h<=x} h^d, advanced as x increases
    auto prefix = std::make_shared<BigInt>(0);
    auto last_x = std::make_shared<long long>(-1);
    auto value = [d, prefix, last_x](long long x) {
        for (long long h = *last_x + 1; h <= x; ++h)
            if (h >= 1) *prefix += int_pow(BigInt(h), d);
        *last_x = x;
        return *prefix;
    };
    SeriesValue series = poisson_series(value, d, y, tolerance);
    series.value /= to_double(Rational(sum_powers(y, d)));
    return series;
}

DobinskiReport verify_dobinski_variant(int d_max, double tolerance) {
    if (d_max < 1) throw std::domain_error("verify_dobinski_variant requires d_max >= 1");
    DobinskiReport report;
    for (int d = 1; d <= d_max; ++d) {
        DobinskiCheck check;
        check.d = d;
        check.lambda_exact = lambda_d(d);
        // at y=1 the denominator sum_{h<=1} h^d is 1, so rho is the raw series
        check.lambda_series = rho_truncated(d, 1, tolerance / 10).value;
        check.lambda_error = std::abs(check.lambda_series - to_double(check.lambda_exact));
        check.lambda_ok = check.lambda_error < tolerance;
        check.bell_exact = bell(d);
        check.bell_series =
            poisson_series([d](long long x) { return int_pow(BigInt(x), d); }, d, 1,
                           tolerance / 10)
                .value;
        check.bell_error = std::abs(check.bell_series - to_double(Rational(check.bell_exact)));
        check.bell_ok = check.bell_error < tolerance;
        report.all_ok = report.all_ok && check.lambda_ok && check.bell_ok;
        report.checks.push_back(std::move(check));
    }
    return report;
}

} // namespace minpot
