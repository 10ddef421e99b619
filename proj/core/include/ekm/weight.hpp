#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

#include "ekm/geom.hpp"

namespace ekm {

using BigInt = boost::multiprecision::cpp_int;

// A nonnegative weight written as a sum of square roots of integers,
// sqrt terms keyed by squared length with multiplicities. Grid-tight
// matchings collapse to a plain integer (all terms perfect squares), which
// keeps the decision arithmetic exact; everything else is compared through
// certified intervals at escalating precision.
class WeightExpr {
  public:
    WeightExpr() = default;

    void add_sq(int64_t squared, int64_t count = 1);
    WeightExpr& operator+=(const WeightExpr& o);

    bool empty() const { return terms_.empty(); }
    const std::map<int64_t, int64_t>& terms() const { return terms_; }

    // True when every term is a perfect square; exact_value() is then valid.
    bool is_integer() const;
    int64_t exact_value() const;

    double approx() const;

    // Certified enclosure [lo, hi] of the value scaled by 10^digits.
    std::pair<BigInt, BigInt> interval(int digits) const;

    enum class Cmp { less, equal, greater, unknown };

    // Compare against an exact rational threshold. "unknown" is only returned
    // when the enclosure still straddles the threshold at max_digits.
    Cmp compare(const Rat& w, int max_digits = 200) const;

    // Total order for solver bookkeeping; ties that survive max precision are
    // declared equal (identical term multisets are detected exactly).
    static Cmp order(const WeightExpr& a, const WeightExpr& b, int max_digits = 200);

    std::string str() const;

    friend bool operator==(const WeightExpr& a, const WeightExpr& b) {
        return a.terms_ == b.terms_;
    }

  private:
    std::map<int64_t, int64_t> terms_;
};

// Floor of the integer square root.
BigInt isqrt(const BigInt& v);
int64_t isqrt64(int64_t v);

inline bool is_perfect_square(int64_t v) {
    int64_t r = isqrt64(v);
    return r * r == v;
}

}  // namespace ekm
