#include "orderflow/rational.hpp"

#include <utility>

#include "orderflow/error.hpp"

namespace orderflow {

int sign(const Rational& x) {
    return x.sign();
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    for(const auto& row : m) {
        if(row.size() != n) fail(ErrorCode::invalid_argument, "determinant of a non-square matrix");
    }
    if(n == 0) return 1;

    int swaps = 0;
    BigInt prev = 1;
    for(std::size_t k = 0; k + 1 < n; ++k) {
        if(m[k][k] == 0) {
            std::size_t p = k + 1;
            while(p < n && m[p][k] == 0) ++p;
            if(p == n) return 0;
            std::swap(m[k], m[p]);
            ++swaps;
        }
        for(std::size_t i = k + 1; i < n; ++i) {
            for(std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    BigInt det = m[n - 1][n - 1];
    return swaps % 2 ? BigInt(-det) : det;
}

Rational determinant(const RationalMatrix& m) {
    std::vector<std::vector<BigInt>> scaled;
    scaled.reserve(m.size());
    BigInt scale = 1;
    for(const auto& row : m) {
        BigInt l = 1;
        for(const auto& x : row) {
            const BigInt& d = boost::multiprecision::denominator(x);
            l = l / boost::multiprecision::gcd(l, d) * d;
        }
        std::vector<BigInt> r;
        r.reserve(row.size());
        for(const auto& x : row) {
            r.push_back(boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x)));
        }
        scaled.push_back(std::move(r));
        scale *= l;
    }
    return Rational(bareiss_determinant(std::move(scaled)), scale);
}

} // namespace orderflow
