#pragma once

// Integer arithmetic for group orders: factorization, a smallest-prime-factor
// sieve, and the P-number predicates (cyclic, abelian, nilpotent, 2-generated).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace twogen {

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime decomposition of n with primes sorted strictly descending, so that
/// factors[0] is the largest prime divisor.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;

  std::size_t num_primes() const { return factors.size(); }

  unsigned exponent_of(std::uint64_t p) const {
    for (const auto& f : factors)
      if (f.prime == p) return f.exponent;
    return 0;
  }

  bool divisible_by(std::uint64_t p) const { return exponent_of(p) > 0; }
};

enum class FailureKind { None, NotCubeFree, BadPair };

/// Why n fails to be a 2-generated number. For BadPair, p > q, p^2 | n and
/// q | (p - 1); for NotCubeFree, p^3 | n.
struct FailureReason {
  FailureKind kind = FailureKind::None;
  std::uint64_t p = 0;
  std::uint64_t q = 0;

  bool is_none() const { return kind == FailureKind::None; }

  std::string to_string() const {
    switch (kind) {
      case FailureKind::None:
        return "None";
      case FailureKind::NotCubeFree:
        return "NotCubeFree(" + std::to_string(p) + ")";
      case FailureKind::BadPair:
        return "BadPair(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    return "None";
  }

  friend bool operator==(const FailureReason&, const FailureReason&) = default;
};

struct ClassificationRecord {
  std::uint64_t n = 1;
  bool cube_free = true;
  bool square_free = true;
  bool nilpotent_factorization = true;
  bool cyclic_number = true;
  bool abelian_number = true;
  bool nilpotent_number = true;
  bool two_generated_number = true;
  FailureReason failure_reason;

  friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Pollard-Brent; n must be odd composite.
inline std::uint64_t rho_split(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

}  // namespace detail

/// Deterministic Miller-Rabin for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = detail::pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = detail::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

inline void collect_prime_factors(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = rho_split(n);
  collect_prime_factors(d, out);
  collect_prime_factors(n / d, out);
}

inline Factorization from_prime_list(std::uint64_t n, std::vector<std::uint64_t> primes) {
  std::sort(primes.begin(), primes.end(), std::greater<>());
  Factorization f;
  f.n = n;
  for (std::uint64_t p : primes) {
    if (!f.factors.empty() && f.factors.back().prime == p)
      ++f.factors.back().exponent;
    else
      f.factors.push_back({p, 1});
  }
  return f;
}

}  // namespace detail

inline Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = n;
  for (std::uint64_t p = 2; p < 1000 && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    while (rest % p == 0) {
      primes.push_back(p);
      rest /= p;
    }
  }
  detail::collect_prime_factors(rest, primes);
  return detail::from_prime_list(n, std::move(primes));
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

inline bool is_cube_free(const Factorization& f) {
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const PrimePower& pp) { return pp.exponent <= 2; });
}

inline bool is_square_free(const Factorization& f) {
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const PrimePower& pp) { return pp.exponent <= 1; });
}

/// No prime power p_i^a with 1 <= a <= e_i is congruent to 1 modulo another
/// prime divisor p_j.
inline bool has_nilpotent_factorization(const Factorization& f) {
  for (const auto& pi : f.factors) {
    for (const auto& pj : f.factors) {
      if (pi.prime == pj.prime) continue;
      std::uint64_t power = 1;
      for (unsigned a = 1; a <= pi.exponent; ++a) {
        power = detail::mul_mod(power, pi.prime, pj.prime);
        if (power == 1) return false;
      }
    }
  }
  return true;
}

inline bool is_cyclic_number(const Factorization& f) {
  return is_square_free(f) && has_nilpotent_factorization(f);
}

inline bool is_abelian_number(const Factorization& f) {
  return is_cube_free(f) && has_nilpotent_factorization(f);
}

inline bool is_nilpotent_number(const Factorization& f) { return has_nilpotent_factorization(f); }

inline std::uint64_t euler_phi(const Factorization& f) {
  std::uint64_t phi = 1;
  for (const auto& pp : f.factors) phi *= (pp.prime - 1) * ipow(pp.prime, pp.exponent - 1);
  return phi;
}

/// gcd(n, phi(n)) == 1, the classical cyclic-number test.
inline bool euler_phi_coprime(const Factorization& f) { return std::gcd(f.n, euler_phi(f)) == 1; }

inline bool euler_phi_coprime(std::uint64_t n) { return euler_phi_coprime(factorize(n)); }

/// The 2-generated criterion in its unified form: n is cube-free and no pair of
/// primes p > q dividing n has p^2 | n and q | (p - 1). The returned reason picks
/// the smallest offending p (then smallest q); a cube failure takes precedence.
inline FailureReason two_generated_failure(const Factorization& f) {
  for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
    if (it->exponent >= 3) return {FailureKind::NotCubeFree, it->prime, 0};
  }
  for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
    if (it->exponent < 2) continue;
    const std::uint64_t p = it->prime;
    for (auto jt = f.factors.rbegin(); jt != f.factors.rend(); ++jt) {
      const std::uint64_t q = jt->prime;
      if (q >= p) break;
      if ((p - 1) % q == 0) return {FailureKind::BadPair, p, q};
    }
  }
  return {};
}

inline bool is_two_generated_number(const Factorization& f) { return two_generated_failure(f).is_none(); }

/// How the odd-order condition "for every i > j, p_j does not divide p_i - 1 or
/// e_i = 1" is read against the descending prime order p_1 > p_2 > ... .
enum class OddConditionReading {
  /// Constrain pairs p > q with p^2 | n: q must not divide p - 1.
  ProofConsistent,
  /// Subscripts as printed: p_j > p_i, so p_j never divides p_i - 1 and the
  /// condition reduces to cube-freeness.
  Literal,
};

/// The two main theorems taken branch by branch: an odd rule over indexed
/// prime pairs, and an even rule n = 2^a * (odd square-free), a <= 2.
inline bool is_two_generated_by_theorem_split(
    const Factorization& f, OddConditionReading reading = OddConditionReading::ProofConsistent) {
  const unsigned alpha = f.exponent_of(2);
  if (alpha > 0) {
    if (alpha > 2) return false;
    return std::all_of(f.factors.begin(), f.factors.end(), [](const PrimePower& pp) {
      return pp.prime == 2 || pp.exponent == 1;
    });
  }
  if (!is_cube_free(f)) return false;
  const auto& ps = f.factors;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (reading == OddConditionReading::ProofConsistent) {
        // i < j means p_i > p_j.
        if (i < j && ps[i].exponent != 1 && (ps[i].prime - 1) % ps[j].prime == 0) return false;
      } else {
        if (i > j && ps[i].exponent != 1 && (ps[i].prime - 1) % ps[j].prime == 0) return false;
      }
    }
  }
  return true;
}

inline ClassificationRecord classify(const Factorization& f) {
  ClassificationRecord r;
  r.n = f.n;
  r.cube_free = is_cube_free(f);
  r.square_free = is_square_free(f);
  r.nilpotent_factorization = has_nilpotent_factorization(f);
  r.cyclic_number = r.square_free && r.nilpotent_factorization;
  r.abelian_number = r.cube_free && r.nilpotent_factorization;
  r.nilpotent_number = r.nilpotent_factorization;
  r.failure_reason = two_generated_failure(f);
  r.two_generated_number = r.failure_reason.is_none();
  return r;
}

inline ClassificationRecord classify(std::uint64_t n) { return classify(factorize(n)); }

/// Largest sieve limit accepted by SpfSieve and enumerate_two_generated
/// (four bytes per entry).
inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;

/// Smallest-prime-factor table over 0..limit.
class SpfSieve {
 public:
  explicit SpfSieve(std::uint64_t limit) : limit_(limit) {
    if (limit > kMaxSieveLimit)
      throw std::length_error("sieve limit " + std::to_string(limit) + " exceeds cap " +
                              std::to_string(kMaxSieveLimit));
    spf_.assign(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
      if (spf_[i] == 0) {
        spf_[i] = static_cast<std::uint32_t>(i);
        primes.push_back(static_cast<std::uint32_t>(i));
      }
      for (std::uint32_t p : primes) {
        if (p > spf_[i] || i * p > limit) break;
        spf_[i * p] = p;
      }
    }
  }

  std::uint64_t limit() const { return limit_; }

  std::uint32_t smallest_prime_factor(std::uint64_t n) const { return spf_.at(n); }

  Factorization factorize(std::uint64_t n) const {
    if (n == 0 || n > limit_) throw std::out_of_range("SpfSieve::factorize: n outside sieve");
    Factorization f;
    f.n = n;
    while (n > 1) {
      const std::uint32_t p = spf_[n];
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      f.factors.push_back({p, e});
    }
    std::reverse(f.factors.begin(), f.factors.end());
    return f;
  }

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
};

/// Ascending list of all 2-generated numbers in 1..limit.
inline std::vector<std::uint64_t> enumerate_two_generated(std::uint64_t limit) {
  if (limit < 1) throw std::invalid_argument("enumerate_two_generated: limit must be positive");
  SpfSieve sieve(limit);
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= limit; ++n)
    if (is_two_generated_number(sieve.factorize(n))) out.push_back(n);
  return out;
}

}  // namespace twogen
