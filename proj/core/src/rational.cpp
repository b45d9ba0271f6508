#include "braidslice/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <utility>

#include "braidslice/errors.hpp"

namespace braidslice {
namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

constexpr i128 kSmallMax = std::numeric_limits<std::int64_t>::max();
// INT64_MIN is never stored inline so that negation stays in range.
constexpr i128 kSmallMin = -kSmallMax;

u128 uabs(i128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

u128 gcd_u128(u128 a, u128 b) {
  constexpr u128 kWord = std::numeric_limits<std::uint64_t>::max();
  while (b != 0) {
    if (a <= kWord && b <= kWord) {
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    }
    a %= b;
    std::swap(a, b);
  }
  return a;
}

BigInt to_big(i128 x) {
  const bool neg = x < 0;
  u128 mag = uabs(x);
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  BigInt out = (hi << 64) + lo;
  return neg ? BigInt(-out) : out;
}

bool store_small(i128 n, i128 d, std::int64_t& num, std::int64_t& den);

bool fits_small(const BigInt& x) {
  return mpz_fits_slong_p(x.get_mpz_t()) != 0 && x != BigInt(std::numeric_limits<long>::min());
}

}  // namespace

Rat::Rat(std::int64_t n) : num_(n) {
  if (n == std::numeric_limits<std::int64_t>::min()) assign(mpq_class(BigInt(static_cast<long>(n))));
}

Rat::Rat(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("Rat: zero denominator");
  if (!store_small(n, d, num_, den_)) {
    assign(mpq_class(BigInt(static_cast<long>(n)), BigInt(static_cast<long>(d))));
  }
}

Rat::Rat(const BigInt& n) { assign(mpq_class(n)); }

Rat::Rat(const BigInt& n, const BigInt& d) {
  if (d == 0) throw std::domain_error("Rat: zero denominator");
  assign(mpq_class(n, d));
}

Rat::Rat(const Rat& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rat& Rat::operator=(const Rat& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

mpq_class Rat::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(BigInt(static_cast<long>(num_)), BigInt(static_cast<long>(den_)));
}

void Rat::assign(mpq_class value) {
  value.canonicalize();
  const BigInt& n = value.get_num();
  const BigInt& d = value.get_den();
  if (fits_small(n) && fits_small(d)) {
    num_ = n.get_si();
    den_ = d.get_si();
    big_.reset();
  } else {
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(value));
  }
}

namespace {

// Reduces n/d (d != 0) and stores it inline when possible.
// Returns false when the reduced value does not fit.
bool store_small(i128 n, i128 d, std::int64_t& num, std::int64_t& den) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    num = 0;
    den = 1;
    return true;
  }
  if (d != 1) {
    const u128 g = gcd_u128(uabs(n), static_cast<u128>(d));
    if (g != 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
  }
  if (n > kSmallMax || n < kSmallMin || d > kSmallMax) return false;
  num = static_cast<std::int64_t>(n);
  den = static_cast<std::int64_t>(d);
  return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty rational literal");

  auto digits_only = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  auto parse_int = [&](std::string_view t) {
    bool neg = false;
    if (!t.empty() && (t.front() == '+' || t.front() == '-')) {
      neg = t.front() == '-';
      t.remove_prefix(1);
    }
    if (!digits_only(t)) throw ParseError("malformed rational literal: " + s);
    BigInt v(std::string(t), 10);
    return neg ? BigInt(-v) : v;
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    BigInt n = parse_int(std::string_view(s).substr(0, slash));
    BigInt d = parse_int(std::string_view(s).substr(slash + 1));
    if (d == 0) throw ParseError("zero denominator in " + s);
    return Rat(n, d);
  }

  std::string_view body(s);
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    exponent = parse_int(body.substr(e + 1)).get_si();
    body = body.substr(0, e);
  }
  bool neg = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string digits;
  long frac_len = 0;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view ip = body.substr(0, dot);
    std::string_view fp = body.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw ParseError("malformed rational literal: " + s);
    if ((!ip.empty() && !digits_only(ip)) || (!fp.empty() && !digits_only(fp))) {
      throw ParseError("malformed rational literal: " + s);
    }
    digits = std::string(ip) + std::string(fp);
    frac_len = static_cast<long>(fp.size());
  } else {
    if (!digits_only(body)) throw ParseError("malformed rational literal: " + s);
    digits = std::string(body);
  }
  BigInt n(digits, 10);
  if (neg) n = -n;
  const long shift = exponent - frac_len;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  return shift >= 0 ? Rat(BigInt(n * scale)) : Rat(n, scale);
}

BigInt Rat::num() const { return big_ ? BigInt(big_->get_num()) : BigInt(static_cast<long>(num_)); }

BigInt Rat::den() const { return big_ ? BigInt(big_->get_den()) : BigInt(static_cast<long>(den_)); }

int Rat::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rat::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

double Rat::to_double() const {
  if (big_) return big_->get_d();
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rat::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rat Rat::operator-() const {
  Rat out;
  if (big_) {
    out.assign(-*big_);
  } else {
    out.num_ = -num_;
    out.den_ = den_;
  }
  return out;
}

Rat& Rat::operator+=(const Rat& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) {
      const i128 s = static_cast<i128>(num_) + rhs.num_;
      if (s <= kSmallMax && s >= kSmallMin) {
        num_ = static_cast<std::int64_t>(s);
        return *this;
      }
    }
    const i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
    const i128 d = static_cast<i128>(den_) * rhs.den_;
    if (store_small(n, d, num_, den_)) return *this;
    assign(mpq_class(to_big(n), to_big(d)));
    return *this;
  }
  assign(to_mpq() + rhs.to_mpq());
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) {
  if (!rhs.big_) {
    Rat neg;
    neg.num_ = -rhs.num_;
    neg.den_ = rhs.den_;
    return *this += neg;
  }
  assign(to_mpq() - rhs.to_mpq());
  return *this;
}

Rat& Rat::operator*=(const Rat& rhs) {
  if (!big_ && !rhs.big_) {
    const i128 n = static_cast<i128>(num_) * rhs.num_;
    const i128 d = static_cast<i128>(den_) * rhs.den_;
    if (store_small(n, d, num_, den_)) return *this;
    assign(mpq_class(to_big(n), to_big(d)));
    return *this;
  }
  assign(to_mpq() * rhs.to_mpq());
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rat: division by zero");
  if (!big_ && !rhs.big_) {
    const i128 n = static_cast<i128>(num_) * rhs.den_;
    const i128 d = static_cast<i128>(den_) * rhs.num_;
    if (store_small(n, d, num_, den_)) return *this;
    assign(mpq_class(to_big(d < 0 ? -n : n), to_big(d < 0 ? -d : d)));
    return *this;
  }
  assign(to_mpq() / rhs.to_mpq());
  return *this;
}

bool operator==(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  // Canonical forms are unique, and a value is inline iff it fits.
  if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) {
    const i128 l = static_cast<i128>(a.num_) * b.den_;
    const i128 r = static_cast<i128>(b.num_) * a.den_;
    return l <=> r;
  }
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

}  // namespace braidslice
