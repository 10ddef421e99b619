#include "ekm/weight.hpp"

#include <cmath>
#include <sstream>

namespace ekm {

BigInt isqrt(const BigInt& v) {
    if (v < 0) throw std::invalid_argument("isqrt: negative");
    return boost::multiprecision::sqrt(v);
}

int64_t isqrt64(int64_t v) {
    if (v < 0) throw std::invalid_argument("isqrt64: negative");
    auto r = static_cast<int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

void WeightExpr::add_sq(int64_t squared, int64_t count) {
    if (squared < 0) throw std::invalid_argument("WeightExpr: negative squared length");
    if (squared == 0 || count == 0) return;
    terms_[squared] += count;
    if (terms_[squared] == 0) terms_.erase(squared);
}

WeightExpr& WeightExpr::operator+=(const WeightExpr& o) {
    for (auto& [sq, c] : o.terms_) add_sq(sq, c);
    return *this;
}

bool WeightExpr::is_integer() const {
    for (auto& [sq, c] : terms_)
        if (!is_perfect_square(sq)) return false;
    return true;
}

int64_t WeightExpr::exact_value() const {
    int64_t total = 0;
    for (auto& [sq, c] : terms_) {
        int64_t r = isqrt64(sq);
        if (r * r != sq) throw std::logic_error("exact_value on irrational weight");
        total += r * c;
    }
    return total;
}

double WeightExpr::approx() const {
    double total = 0;
    for (auto& [sq, c] : terms_) total += std::sqrt(static_cast<double>(sq)) * c;
    return total;
}

std::pair<BigInt, BigInt> WeightExpr::interval(int digits) const {
    BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
    BigInt scale2 = scale * scale;
    BigInt lo = 0, hi = 0;
    for (auto& [sq, c] : terms_) {
        BigInt root = isqrt(scale2 * sq);  // floor(10^d * sqrt(sq))
        BigInt term_lo = root, term_hi = root;
        if (root * root != scale2 * sq) term_hi += 1;
        lo += term_lo * c;
        hi += term_hi * c;
    }
    return {lo, hi};
}

WeightExpr::Cmp WeightExpr::compare(const Rat& w, int max_digits) const {
    if (is_integer()) {
        Rat v(exact_value());
        if (v < w) return Cmp::less;
        if (w < v) return Cmp::greater;
        return Cmp::equal;
    }
    for (int digits = 18; digits <= max_digits; digits *= 2) {
        auto [lo, hi] = interval(digits);
        BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
        // value in [lo/scale, hi/scale]; threshold num/den
        BigInt rhs = BigInt(w.num) * scale;
        if (hi * w.den < rhs) return Cmp::less;
        if (lo * w.den > rhs) return Cmp::greater;
        if (lo == hi) return Cmp::equal;  // cannot happen for irrational sums
    }
    return Cmp::unknown;
}

WeightExpr::Cmp WeightExpr::order(const WeightExpr& a, const WeightExpr& b, int max_digits) {
    if (a == b) return Cmp::equal;
    for (int digits = 18; digits <= max_digits; digits *= 2) {
        auto [alo, ahi] = a.interval(digits);
        auto [blo, bhi] = b.interval(digits);
        if (ahi < blo) return Cmp::less;
        if (bhi < alo) return Cmp::greater;
    }
    return Cmp::unknown;
}

std::string WeightExpr::str() const {
    if (terms_.empty()) return "0";
    if (is_integer()) return std::to_string(exact_value());
    std::ostringstream os;
    bool first = true;
    for (auto& [sq, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (is_perfect_square(sq)) {
            os << c * isqrt64(sq);
        } else {
            if (c != 1) os << c << "*";
            os << "sqrt(" << sq << ")";
        }
    }
    return os.str();
}

}  // namespace ekm
