#include "braidslice/charpoly.hpp"

#include <algorithm>
#include <thread>

#include "braidslice/errors.hpp"
#include "braidslice/linalg.hpp"

namespace braidslice {

Polynomial::Polynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::from_descending(std::span<const long> coeffs) {
  std::vector<BigInt> asc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) asc.emplace_back(*it);
  return Polynomial(std::move(asc));
}

bool Polynomial::alternates_in_sign() const {
  int expected = 0;
  for (int k = degree(); k >= 0; --k) {
    const int s = sgn(coeffs_[static_cast<std::size_t>(k)]);
    if (s == 0) continue;
    const int want = ((degree() - k) % 2 == 0) ? sgn(coeffs_.back()) : -sgn(coeffs_.back());
    if (s != want) return false;
    expected = s;
  }
  (void)expected;
  return true;
}

BigInt Polynomial::evaluate(const BigInt& t) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string Polynomial::str() const {
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0 && !(k == 0 && out.empty())) continue;
    BigInt mag = abs(c);
    if (!out.empty() || c < 0) out += c < 0 ? "-" : "+";
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k >= 1) out += "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

// Counts points on the slice x_1 = 1. Coordinates 0..f-1 (f = m-2) are
// enumerated, coordinate f is counted in closed form, coordinate m-1 is
// minus the sum of the others.
class SliceCounter {
 public:
  SliceCounter(int m, std::uint32_t q, bool augmented)
      : m_(m), f_(m - 2), q_(q), augmented_(augmented), x_(static_cast<std::size_t>(m), 0), stamp_(q, 0) {
    sums_.resize(static_cast<std::size_t>(f_));
    for (int k = 0; k < f_; ++k) sums_[static_cast<std::size_t>(k)].assign(std::size_t{1} << (k + 1), 0);
    x_[0] = 1;
    sums_[0][0] = 0;
    sums_[0][1] = 1;
    inv2_ = (q_ % 2 == 1) ? (q_ + 1) / 2 : 0;
  }

  // Points with coordinate 1 fixed to a (m >= 4), or all points (m == 3).
  std::uint64_t count_branch(std::uint32_t a) {
    if (f_ == 1) return leaf();
    return set_level(1, a) ? descend(2) : 0;
  }

 private:
  bool set_level(int k, std::uint32_t a) {
    if (augmented_) {
      for (int i = 0; i < k; ++i) {
        if (x_[static_cast<std::size_t>(i)] == a) return false;
      }
    }
    const auto& prev = sums_[static_cast<std::size_t>(k - 1)];
    auto& cur = sums_[static_cast<std::size_t>(k)];
    const std::size_t half = prev.size();
    for (std::size_t j = 0; j < half; ++j) {
      const std::uint32_t s = (prev[j] + a) % q_;
      if (s == 0) return false;
      cur[j] = prev[j];
      cur[j | half] = s;
    }
    x_[static_cast<std::size_t>(k)] = a;
    return true;
  }

  std::uint64_t descend(int k) {
    if (k == f_) return leaf();
    std::uint64_t total = 0;
    for (std::uint32_t a = 1; a < q_; ++a) {
      if (set_level(k, a)) total += descend(k + 1);
    }
    return total;
  }

  void mark(std::uint32_t v) {
    if (stamp_[v] != generation_) {
      stamp_[v] = generation_;
      ++marked_;
    }
  }

  std::uint64_t leaf() {
    ++generation_;
    marked_ = 0;
    const auto& sums = sums_[static_cast<std::size_t>(f_ - 1)];
    for (std::uint32_t s : sums) mark(s == 0 ? 0 : q_ - s);
    if (augmented_) {
      const std::uint32_t total = sums.back();
      const std::uint32_t neg_total = total == 0 ? 0 : q_ - total;
      for (int i = 0; i < f_; ++i) {
        const std::uint32_t xi = x_[static_cast<std::size_t>(i)];
        mark(xi);
        mark((neg_total + q_ - xi) % q_);
      }
      if (q_ == 2) {
        // 2t = 0 for every t: x_{m-1} = x_{m-2} iff the fixed total vanishes.
        if (total == 0) return 0;
      } else {
        mark(static_cast<std::uint32_t>((static_cast<std::uint64_t>(neg_total) * inv2_) % q_));
      }
    }
    return q_ - marked_;
  }

  int m_;
  int f_;
  std::uint32_t q_;
  bool augmented_;
  std::uint32_t inv2_ = 0;
  std::vector<std::uint32_t> x_;
  std::vector<std::vector<std::uint32_t>> sums_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 0;
  std::uint32_t marked_ = 0;
};

// Smallest integer strictly above sqrt(n / d).
std::uint64_t ceil_sqrt_ratio(const BigInt& n, const BigInt& d) {
  BigInt quotient = n / d;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), quotient.get_mpz_t());
  return static_cast<std::uint64_t>(root.get_ui()) + 1;
}

std::vector<std::uint64_t> primes_above(std::uint64_t floor, std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = floor + 1; out.size() < count; ++p) {
    if (is_prime(p)) out.push_back(p);
  }
  return out;
}

// Newton interpolation through (x_i, y_i); returns ascending coefficients.
std::vector<Rat> interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rat> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  std::vector<Rat> poly{dd[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // poly = poly * (t - xs[k]) + dd[k]
    std::vector<Rat> next(poly.size() + 1);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] += poly[j];
      next[j] -= poly[j] * xs[k];
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  return poly;
}

}  // namespace

FieldCount count_points(const ArrangementSpec& spec, std::uint64_t q, unsigned threads) {
  if (spec.m < 2 || spec.m > kMaxArrangementSize) throw DimensionMismatch("count_points: m out of range");
  if (spec.cone_restrict) throw DimensionMismatch("count_points: cone restriction has no characteristic polynomial");
  if (!is_prime(q) || q > (1U << 20)) throw DimensionMismatch("count_points: q must be a prime below 2^20");
  const auto qq = static_cast<std::uint32_t>(q);

  std::uint64_t slice = 0;
  if (spec.m == 2) {
    slice = (spec.augment_braid && q == 2) ? 0 : 1;
  } else if (spec.m == 3) {
    slice = SliceCounter(spec.m, qq, spec.augment_braid).count_branch(0);
  } else {
    const unsigned workers = std::max(1U, std::min<unsigned>(threads, qq - 1));
    std::vector<std::uint64_t> partial(workers, 0);
    auto work = [&](unsigned w) {
      SliceCounter counter(spec.m, qq, spec.augment_braid);
      for (std::uint32_t a = 1 + w; a < qq; a += workers) partial[w] += counter.count_branch(a);
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    }
    for (std::uint64_t p : partial) slice += p;
  }
  return {q, slice * (q - 1)};
}

std::uint64_t default_prime_floor(const ArrangementSpec& spec) {
  const auto m = static_cast<unsigned long>(spec.m);
  const unsigned long n = m - 1;
  BigInt num;
  BigInt den;
  if (spec.augment_braid) {
    // Rows have squared norm at most m+2 (the row of x_i - x_m).
    mpz_ui_pow_ui(num.get_mpz_t(), m + 2, n);
    den = 1;
  } else {
    // 0/1 matrices of order k have |det| <= (k+1)^((k+1)/2) / 2^k.
    mpz_ui_pow_ui(num.get_mpz_t(), n + 1, n + 1);
    mpz_ui_pow_ui(den.get_mpz_t(), 4, n);
  }
  return std::max<std::uint64_t>(m, ceil_sqrt_ratio(num, den));
}

CharPolyRun compute_charpoly(const ArrangementSpec& spec, const CharPolyOptions& options) {
  if (spec.cone_restrict) throw DimensionMismatch("charpoly: cone restriction is not an arrangement");
  const int m = spec.m;
  if (m < 2) throw DimensionMismatch("charpoly: m must be at least 2");
  std::uint64_t floor = options.prime_floor == 0 ? default_prime_floor(spec) : options.prime_floor;
  floor = std::max<std::uint64_t>(floor, static_cast<std::uint64_t>(m));
  const auto needed = static_cast<std::size_t>(m + std::max(0, options.validation_primes));

  std::string last_failure;
  for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
    const auto primes = primes_above(floor, needed);
    CharPolyRun run;
    std::vector<Rat> xs, ys;
    for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i) {
      run.interpolation.push_back(count_points(spec, primes[i], options.threads));
      xs.emplace_back(static_cast<std::int64_t>(primes[i]));
      ys.emplace_back(static_cast<std::int64_t>(run.interpolation.back().count));
    }
    const std::vector<Rat> coeffs = interpolate(xs, ys);
    std::vector<BigInt> ints;
    bool integral = true;
    for (const Rat& c : coeffs) {
      if (!c.is_integer()) integral = false;
      ints.push_back(c.num());
    }
    Polynomial poly(ints);
    bool ok = integral && poly.degree() == m - 1 && poly.is_monic() && poly.evaluate(1) == 0;
    if (!ok) last_failure = "interpolant is not a monic integer polynomial of degree m-1 vanishing at 1";
    for (std::size_t i = static_cast<std::size_t>(m); ok && i < primes.size(); ++i) {
      const FieldCount fc = count_points(spec, primes[i], options.threads);
      run.validation.push_back(fc);
      if (poly.evaluate(BigInt(static_cast<unsigned long>(fc.q))) != BigInt(static_cast<unsigned long>(fc.count))) {
        ok = false;
        last_failure = "count at q=" + std::to_string(fc.q) + " disagrees with the interpolant";
      }
    }
    if (ok) {
      run.poly = std::move(poly);
      return run;
    }
    floor = primes.back();
  }
  throw InterpolationInconsistent("characteristic polynomial did not validate: " + last_failure);
}

CharPoly charpoly(const ArrangementSpec& spec, const CharPolyOptions& options) {
  return compute_charpoly(spec, options).poly;
}

BigInt chamber_count(const CharPoly& p) {
  const BigInt v = p.evaluate(-1);
  return p.degree() % 2 == 0 ? v : BigInt(-v);
}

}  // namespace braidslice
