#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ekm {

// Planar point with exact integer coordinates. In path-variant instances the
// coordinates are fixed-point values sharing a global scale of 10^t; grid
// instances use scale 1.
struct Pt {
    int64_t x = 0;
    int64_t y = 0;

    friend bool operator==(const Pt&, const Pt&) = default;
    friend auto operator<=>(const Pt&, const Pt&) = default;

    Pt operator+(const Pt& o) const { return {x + o.x, y + o.y}; }
    Pt operator-(const Pt& o) const { return {x - o.x, y - o.y}; }
    Pt operator*(int64_t s) const { return {x * s, y * s}; }
};

struct PtHash {
    size_t operator()(const Pt& p) const {
        uint64_t h = static_cast<uint64_t>(p.x) * 0x9e3779b97f4a7c15ull;
        h ^= static_cast<uint64_t>(p.y) + 0x7f4a7c15u + (h << 6) + (h >> 2);
        return static_cast<size_t>(h);
    }
};

// Squared Euclidean distance. Coordinates are bounded well below 2^31 by all
// construction paths, so the product fits int64 with room to spare.
inline int64_t dist2(const Pt& a, const Pt& b) {
    int64_t dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// The four axis directions in clockwise order starting north (screen y up).
inline constexpr Pt kDirs[4] = {{0, 1}, {1, 0}, {0, -1}, {-1, 0}};

enum class Dir4 : int { north = 0, east = 1, south = 2, west = 3 };

inline Pt dir_vec(Dir4 d) { return kDirs[static_cast<int>(d)]; }

inline Dir4 dir_of(const Pt& v) {
    for (int i = 0; i < 4; ++i)
        if ((v.x == 0) == (kDirs[i].x == 0) && v.x * kDirs[i].x + v.y * kDirs[i].y > 0 &&
            (v.x == 0 || v.y == 0))
            return static_cast<Dir4>(i);
    throw std::invalid_argument("dir_of: not axis-parallel");
}

inline const char* dir_name(Dir4 d) {
    static const char* names[4] = {"N", "E", "S", "W"};
    return names[static_cast<int>(d)];
}

// Quarter-turn rotations, clockwise. rotate_cw({0,1}) == {1,0}.
inline Pt rotate_cw(const Pt& p) { return {p.y, -p.x}; }
inline Pt mirror_x(const Pt& p) { return {-p.x, p.y}; }

inline Pt rotate_cw(const Pt& p, int quarter_turns) {
    Pt q = p;
    for (int i = 0; i < ((quarter_turns % 4) + 4) % 4; ++i) q = rotate_cw(q);
    return q;
}

// Exact rational over int64 numerator/denominator, normalized with den > 0.
// Comparisons cross-multiply through __int128.
struct Rat {
    int64_t num = 0;
    int64_t den = 1;

    Rat() = default;
    Rat(int64_t n) : num(n), den(1) {}
    Rat(int64_t n, int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        int64_t g = gcd64(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    static int64_t gcd64(int64_t a, int64_t b) {
        while (b) { int64_t t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }

    friend bool operator==(const Rat& a, const Rat& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    Rat operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
    Rat operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
    Rat operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }

    std::string str() const;
};

// Exact orientation/intersection predicates for integer segments; used by the
// embedding validator, which must not rely on floating point.
int orientation(const Pt& a, const Pt& b, const Pt& c);          // sign of cross
bool on_segment(const Pt& a, const Pt& b, const Pt& p);          // p on [a,b]
bool segments_intersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d);

// Points of an axis-parallel polyline walked one grid unit at a time,
// endpoints included. Throws if a leg is not axis-parallel.
std::vector<Pt> walk_polyline(const std::vector<Pt>& corners);

}  // namespace ekm
