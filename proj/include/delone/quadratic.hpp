#pragma once

// Exact arithmetic in Z[φ] and Q(φ), φ = (1+√5)/2, plus rational enclosures of √5.
//
// An element a + bφ equals (u + v√5)/2 with u = 2a + b, v = b, so its sign is decided by
// comparing u² with 5v² whenever u and v have opposite signs; no floating point is involved.

#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <type_traits>

#include "delone/error.hpp"
#include "delone/rational.hpp"

namespace delone {

namespace detail {

inline std::int64_t checked_narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw Error(ErrorCode::Overflow, "Z[phi] coefficient overflow");
    return static_cast<std::int64_t>(v);
}

template <class T>
int sign_of(const T& x) {
    if constexpr (std::is_same_v<T, Rational>) return sgn(x);
    else return (x > 0) - (x < 0);
}

}  // namespace detail

template <class T>
class QuadPhi {
public:
    QuadPhi() = default;
    QuadPhi(T a, T b = T(0)) : a_(std::move(a)), b_(std::move(b)) {}  // NOLINT(google-explicit-constructor)

    static QuadPhi phi() { return QuadPhi(T(0), T(1)); }

    const T& a() const noexcept { return a_; }
    const T& b() const noexcept { return b_; }

    /// Galois conjugate: φ ↦ φ' = 1 - φ, so a + bφ ↦ (a + b) - bφ.
    QuadPhi conj() const { return QuadPhi(add(a_, b_), neg(b_)); }

    friend QuadPhi operator+(const QuadPhi& x, const QuadPhi& y) { return QuadPhi(add(x.a_, y.a_), add(x.b_, y.b_)); }
    friend QuadPhi operator-(const QuadPhi& x, const QuadPhi& y) {
        return QuadPhi(add(x.a_, neg(y.a_)), add(x.b_, neg(y.b_)));
    }
    friend QuadPhi operator-(const QuadPhi& x) { return QuadPhi(neg(x.a_), neg(x.b_)); }
    /// φ² = φ + 1.
    friend QuadPhi operator*(const QuadPhi& x, const QuadPhi& y) {
        const T bd = mul(x.b_, y.b_);
        return QuadPhi(add(mul(x.a_, y.a_), bd), add(add(mul(x.a_, y.b_), mul(x.b_, y.a_)), bd));
    }
    QuadPhi& operator+=(const QuadPhi& y) { return *this = *this + y; }
    QuadPhi& operator-=(const QuadPhi& y) { return *this = *this - y; }

    /// Exact sign of a + bφ.
    int sign() const {
        if constexpr (std::is_same_v<T, Rational>) {
            const Rational u = 2 * a_ + b_;
            const int su = sgn(u), sv = sgn(b_);
            if (su >= 0 && sv >= 0) return (su > 0 || sv > 0) ? 1 : 0;
            if (su <= 0 && sv <= 0) return -1;
            const Rational lhs = u * u;
            const Rational rhs = 5 * b_ * b_;
            return lhs > rhs ? su : sv;  // u² ≠ 5v² unless both vanish
        } else {
            const __int128 u = static_cast<__int128>(a_) * 2 + b_;
            const __int128 v = b_;
            const int su = (u > 0) - (u < 0), sv = (v > 0) - (v < 0);
            if (su >= 0 && sv >= 0) return (su > 0 || sv > 0) ? 1 : 0;
            if (su <= 0 && sv <= 0) return -1;
            constexpr __int128 kSafe = static_cast<__int128>(1) << 61;
            if (u < kSafe && -u < kSafe && v < kSafe && -v < kSafe) return u * u > 5 * v * v ? su : sv;
            const Rational lhs = Rational(to_bigint(u)) * to_bigint(u);
            const Rational rhs = Rational(to_bigint(v)) * to_bigint(v) * 5;
            return lhs > rhs ? su : sv;
        }
    }

    friend bool operator==(const QuadPhi& x, const QuadPhi& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator<(const QuadPhi& x, const QuadPhi& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const QuadPhi& x, const QuadPhi& y) { return (x - y).sign() <= 0; }
    friend bool operator>(const QuadPhi& x, const QuadPhi& y) { return y < x; }
    friend bool operator>=(const QuadPhi& x, const QuadPhi& y) { return y <= x; }

    double to_double() const {
        const double p = (1.0 + std::sqrt(5.0)) / 2.0;
        if constexpr (std::is_same_v<T, Rational>) return a_.get_d() + b_.get_d() * p;
        else return static_cast<double>(a_) + static_cast<double>(b_) * p;
    }

    /// Largest integer ≤ this value (exact).
    std::int64_t floor() const {
        const double approx = to_double();
        if (!std::isfinite(approx) || std::fabs(approx) > 9.0e18) throw Error(ErrorCode::Overflow, "floor out of range");
        auto f = static_cast<std::int64_t>(std::floor(approx));
        while (*this < QuadPhi(T(f))) --f;
        while (QuadPhi(T(f + 1)) <= *this) ++f;
        return f;
    }

    /// Smallest integer ≥ this value (exact).
    std::int64_t ceil() const {
        const auto f = floor();
        return QuadPhi(T(f)) == *this ? f : f + 1;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadPhi& x) { return os << x.str(); }

    std::string str() const {
        auto s = [](const T& v) {
            if constexpr (std::is_same_v<T, Rational>) return v.get_str();
            else return std::to_string(v);
        };
        if (detail::sign_of(b_) == 0) return s(a_);
        std::string out = detail::sign_of(a_) == 0 ? "" : s(a_);
        if (!out.empty()) out += detail::sign_of(b_) < 0 ? "-" : "+";
        else if (detail::sign_of(b_) < 0) out += "-";
        const T mag = detail::sign_of(b_) < 0 ? neg(b_) : b_;
        return out + s(mag) + "*phi";
    }

private:
    static BigInt to_bigint(__int128 v) {
        const bool negative = v < 0;
        unsigned __int128 m = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
        BigInt hi(static_cast<unsigned long>(m >> 64));
        BigInt lo(static_cast<unsigned long>(m & 0xFFFFFFFFFFFFFFFFULL));
        BigInt r = hi * BigInt("18446744073709551616") + lo;
        return negative ? BigInt(-r) : r;
    }

    static T add(const T& x, const T& y) {
        if constexpr (std::is_same_v<T, Rational>) return x + y;
        else return detail::checked_narrow(static_cast<__int128>(x) + y);
    }
    static T neg(const T& x) {
        if constexpr (std::is_same_v<T, Rational>) return -x;
        else return detail::checked_narrow(-static_cast<__int128>(x));
    }
    static T mul(const T& x, const T& y) {
        if constexpr (std::is_same_v<T, Rational>) return x * y;
        else return detail::checked_narrow(static_cast<__int128>(x) * y);
    }

    T a_{};
    T b_{};
};

using ZPhi = QuadPhi<std::int64_t>;
using QPhi = QuadPhi<Rational>;

inline QPhi to_qphi(const ZPhi& z) { return QPhi(Rational(static_cast<long>(z.a())), Rational(static_cast<long>(z.b()))); }
inline QPhi to_qphi(const Rational& r) { return QPhi(r); }

/// Closed rational interval [lo, hi].
struct RationalInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    double mid() const { return Rational((lo + hi) / 2).get_d(); }
};

/// Enclosure lo < √5 < hi with hi - lo ≤ width, by bisection on squares.
inline RationalInterval sqrt5_enclosure(const Rational& width = Rational(1, 1000000000)) {
    if (width <= 0) throw Error(ErrorCode::InvalidElement, "enclosure width must be positive");
    Rational lo(2), hi(3);
    while (hi - lo > width) {
        const Rational mid = (lo + hi) / 2;
        if (mid * mid < 5) lo = mid;
        else hi = mid;
    }
    return {lo, hi};
}

/// Enclosure of a + bφ = a + b/2 + (b/2)√5.
inline RationalInterval enclose(const QPhi& x, const RationalInterval& s5) {
    const Rational base = x.a() + x.b() / 2;
    const Rational half = x.b() / 2;
    Rational p = base + half * s5.lo, q = base + half * s5.hi;
    if (q < p) std::swap(p, q);
    return {p, q};
}

/// Enclosure of x / √5.
inline RationalInterval enclose_over_sqrt5(const QPhi& x, const RationalInterval& s5) {
    const RationalInterval v = enclose(x, s5);
    // both bounds of s5 are positive
    Rational c1 = v.lo / s5.lo, c2 = v.lo / s5.hi, c3 = v.hi / s5.lo, c4 = v.hi / s5.hi;
    Rational lo = c1, hi = c1;
    for (const Rational* c : {&c2, &c3, &c4}) {
        if (*c < lo) lo = *c;
        if (*c > hi) hi = *c;
    }
    return {lo, hi};
}

/// Parses "r", "a+b*phi", "b*phi", "phi", "a-phi" with rational a, b.
inline QPhi parse_qphi(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    const auto pos = s.find("phi");
    if (pos == std::string::npos) return QPhi(parse_rational(s));
    if (pos + 3 != s.size()) throw Error(ErrorCode::Parse, "phi must be the last token in '" + text + "'");
    std::string head = s.substr(0, pos);
    if (!head.empty() && head.back() == '*') head.pop_back();
    // split head into "a" and the signed coefficient of phi
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != 'e' && head[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    std::string a_text = split == std::string::npos ? "" : head.substr(0, split);
    std::string b_text = split == std::string::npos ? head : head.substr(split);
    auto coeff = [&](std::string t) -> Rational {
        if (t.empty() || t == "+") return 1;
        if (t == "-") return -1;
        if (t[0] == '+') t.erase(0, 1);
        return parse_rational(t);
    };
    return QPhi(a_text.empty() ? Rational(0) : parse_rational(a_text), coeff(b_text));
}

}  // namespace delone
