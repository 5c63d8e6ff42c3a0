#include "lprev/rational.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace lprev {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v >= -static_cast<i128>(kMax) && v <= static_cast<i128>(kMax); }

std::uint64_t uabs(std::int64_t v) { return v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v); }

u128 uabs128(i128 v) { return v < 0 ? static_cast<u128>(0) - static_cast<u128>(v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    if ((a >> 64) == 0 && (b >> 64) == 0)
        return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    if (a == 0) return b;
    if (b == 0) return a;
    int shift = 0;
    while (((a | b) & 1) == 0) {
        a >>= 1;
        b >>= 1;
        ++shift;
    }
    while ((a & 1) == 0) a >>= 1;
    do {
        while ((b & 1) == 0) b >>= 1;
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

mpz_class to_mpz(i128 v) {
    u128 mag = uabs128(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    mpz_class out = (hi << 64) + lo;
    return v < 0 ? mpz_class(-out) : out;
}

bool mpz_fits_small(const mpz_class& z) {
    return mpz_fits_slong_p(z.get_mpz_t()) && z != std::numeric_limits<long>::min();
}

}  // namespace

Rational::Rational(long value) {
    if (value == std::numeric_limits<long>::min())
        assign_big(mpq_class(mpz_class(value)));
    else
        num_ = value;
}

Rational::Rational(long long value) : Rational(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    assign_wide(num, den);
}

Rational::Rational(const mpq_class& value) { assign_big(value); }

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this == &other) return *this;
    num_ = other.num_;
    den_ = other.den_;
    if (other.big_) {
        if (big_)
            *big_ = *other.big_;
        else
            big_ = std::make_unique<mpq_class>(*other.big_);
    } else {
        big_.reset();
    }
    return *this;
}

void Rational::assign_big(const mpq_class& value) {
    const mpz_class& n = value.get_num();
    const mpz_class& d = value.get_den();
    if (mpz_fits_small(n) && mpz_fits_small(d)) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    if (big_)
        *big_ = value;
    else
        big_ = std::make_unique<mpq_class>(value);
}

// Reduces num/den (den != 0) and stores it.
void Rational::assign_wide(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    u128 g = gcd128(uabs128(num), static_cast<u128>(den));
    if (g != 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    if (fits(num) && fits(den)) {
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
        big_.reset();
        return;
    }
    mpq_class q(to_mpz(num), to_mpz(den));
    assign_big(q);
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& v) {
        auto b = v.find_first_not_of(" \t\r\n");
        auto e = v.find_last_not_of(" \t\r\n");
        v = b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
    };
    trim(s);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    if (s.front() == '+') s.erase(0, 1);
    auto bad = [&] { return std::invalid_argument("malformed rational literal '" + std::string(text) + "'"); };
    auto all_digits = [](const std::string& v, std::size_t from) {
        if (from >= v.size()) return false;
        for (std::size_t i = from; i < v.size(); ++i)
            if (v[i] < '0' || v[i] > '9') return false;
        return true;
    };
    auto signed_digits = [&](const std::string& v) { return all_digits(v, !v.empty() && v[0] == '-' ? 1 : 0); };

    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot);
        std::string frac = s.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (negative) whole.erase(0, 1);
        if (whole.empty()) whole = "0";
        if (!all_digits(whole, 0) || !all_digits(frac, 0)) throw bad();
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class n(whole + frac, 10);
        mpq_class q(negative ? mpz_class(-n) : n, scale);
        q.canonicalize();
        return Rational(q);
    }
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!signed_digits(num) || !all_digits(den, 0)) throw bad();
    mpz_class d(den, 10);
    if (d == 0) throw std::domain_error("rational with zero denominator");
    mpq_class q(mpz_class(num, 10), d);
    q.canonicalize();
    return Rational(q);
}

std::string Rational::to_string() const {
    if (big_) return big_->get_str(10);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

int Rational::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const noexcept { return big_ ? big_->get_den() == 1 : den_ == 1; }

mpz_class Rational::numerator() const { return big_ ? big_->get_num() : mpz_class(static_cast<long>(num_)); }

mpz_class Rational::denominator() const { return big_ ? big_->get_den() : mpz_class(static_cast<long>(den_)); }

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

double Rational::to_double() const { return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_); }

Rational Rational::operator-() const {
    Rational out;
    if (big_)
        out.assign_big(-*big_);
    else {
        out.num_ = -num_;
        out.den_ = den_;
    }
    return out;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    Rational out;
    if (big_) {
        mpq_class q = 1 / *big_;
        out.assign_big(q);
    } else if (num_ < 0) {
        out.num_ = -den_;
        out.den_ = -num_;
    } else {
        out.num_ = den_;
        out.den_ = num_;
    }
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (big_ || rhs.big_) {
        assign_big(to_mpq() + rhs.to_mpq());
        return *this;
    }
    if (den_ == 1 && rhs.den_ == 1) {
        std::int64_t r;
        if (!__builtin_add_overflow(num_, rhs.num_, &r) && r != std::numeric_limits<std::int64_t>::min())
            num_ = r;
        else
            assign_wide(static_cast<i128>(num_) + rhs.num_, 1);
        return *this;
    }
    std::uint64_t g = std::gcd(static_cast<std::uint64_t>(den_), static_cast<std::uint64_t>(rhs.den_));
    if (g == 1) {
        i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
        i128 d = static_cast<i128>(den_) * rhs.den_;
        if (n == 0) {
            num_ = 0;
            den_ = 1;
        } else if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
        } else {
            assign_wide(n, d);
        }
        return *this;
    }
    const auto gi = static_cast<std::int64_t>(g);
    i128 t = static_cast<i128>(num_) * (rhs.den_ / gi) + static_cast<i128>(rhs.num_) * (den_ / gi);
    if (t == 0) {
        num_ = 0;
        den_ = 1;
        return *this;
    }
    std::uint64_t g2 = std::gcd(static_cast<std::uint64_t>(uabs128(t) % g), g);
    i128 n = t / static_cast<i128>(g2);
    i128 d = static_cast<i128>(den_ / gi) * (rhs.den_ / static_cast<std::int64_t>(g2));
    if (fits(n) && fits(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
    } else {
        assign_wide(n, d);
    }
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    if (big_ || rhs.big_) {
        assign_big(to_mpq() * rhs.to_mpq());
        return *this;
    }
    if (num_ == 0) return *this;
    if (rhs.num_ == 0) {
        num_ = 0;
        den_ = 1;
        return *this;
    }
    const auto g1 = static_cast<std::int64_t>(std::gcd(uabs(num_), static_cast<std::uint64_t>(rhs.den_)));
    const auto g2 = static_cast<std::int64_t>(std::gcd(uabs(rhs.num_), static_cast<std::uint64_t>(den_)));
    const std::int64_t a = num_ / g1, b = rhs.num_ / g2, c = den_ / g2, e = rhs.den_ / g1;
    std::int64_t n, d;
    if (!__builtin_mul_overflow(a, b, &n) && !__builtin_mul_overflow(c, e, &d) &&
        n != std::numeric_limits<std::int64_t>::min()) {
        num_ = n;
        den_ = d;
        return *this;
    }
    // Already coprime after cross-cancellation; only the width is a problem.
    i128 wn = static_cast<i128>(a) * b;
    i128 wd = static_cast<i128>(c) * e;
    assign_big(mpq_class(to_mpz(wn), to_mpz(wd)));
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    return *this *= rhs.inverse();
}

bool operator==(const Rational& lhs, const Rational& rhs) noexcept {
    if (lhs.big_ || rhs.big_) {
        if (lhs.big_ && rhs.big_) return *lhs.big_ == *rhs.big_;
        return false;
    }
    return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    if (lhs.big_ || rhs.big_) {
        int c = cmp(lhs.to_mpq(), rhs.to_mpq());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    if (lhs.den_ == rhs.den_) return lhs.num_ <=> rhs.num_;
    i128 a = static_cast<i128>(lhs.num_) * rhs.den_;
    i128 b = static_cast<i128>(rhs.num_) * lhs.den_;
    return a < b ? std::strong_ordering::less : a > b ? std::strong_ordering::greater : std::strong_ordering::equal;
}

int Rational::compare_abs_numerators(const Rational& lhs, const Rational& rhs) {
    if (lhs.big_ || rhs.big_) { int c = mpz_cmpabs(lhs.numerator().get_mpz_t(), rhs.numerator().get_mpz_t()); return (c > 0) - (c < 0); }
    std::uint64_t a = uabs(lhs.num_), b = uabs(rhs.num_);
    return (a > b) - (a < b);
}

std::size_t Rational::hash() const noexcept {
    if (big_) {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        auto mix = [&h](const mpz_class& z) {
            const std::size_t n = mpz_size(z.get_mpz_t());
            for (std::size_t i = 0; i < n; ++i)
                h ^= mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h ^= static_cast<std::size_t>(sgn(z));
        };
        mix(big_->get_num());
        mix(big_->get_den());
        return h;
    }
    std::size_t h = std::hash<std::int64_t>{}(num_);
    return h ^ (std::hash<std::int64_t>{}(den_) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace lprev
