#include "cyclo/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

namespace cyclo {

bool Factorization::is_squarefree() const {
  return std::all_of(prime_powers.begin(), prime_powers.end(),
                     [](const auto& pe) { return pe.second == 1; });
}

Factorization factorize(std::int64_t n) {
  if (n < 1) throw std::domain_error("factorize requires n >= 1");
  Factorization f;
  f.n = n;
  for (std::int64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    f.prime_powers.emplace_back(d, e);
  }
  if (n > 1) f.prime_powers.emplace_back(n, 1);
  return f;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= n; d += 6)
    if (n % d == 0 || n % (d + 2) == 0) return false;
  return true;
}

int mobius(std::int64_t n) {
  auto f = factorize(n);
  if (!f.is_squarefree()) return 0;
  return f.prime_powers.size() % 2 == 0 ? 1 : -1;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (const auto& [p, e] : factorize(n).prime_powers) result -= result / p;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> d{1};
  for (const auto& [p, e] : factorize(n).prime_powers) {
    std::size_t count = d.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t t = 0; t < count; ++t) d.push_back(d[t] * pk);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

namespace {

std::mutex g_cache_mutex;
std::map<std::int64_t, IntPolynomial> g_phi_cache;

IntPolynomial cached_phi(std::int64_t n);

IntPolynomial compute_phi(std::int64_t n) {
  if (n == 1) return IntPolynomial{-1, 1};  // x - 1
  IntPolynomial result = IntPolynomial::x_power_minus_one(
      static_cast<std::size_t>(n));
  for (std::int64_t d : divisors(n)) {
    if (d == n) continue;
    result = quot_exact(result, cached_phi(d));
  }
  return result;
}

IntPolynomial cached_phi(std::int64_t n) {
  {
    std::lock_guard lock(g_cache_mutex);
    if (auto it = g_phi_cache.find(n); it != g_phi_cache.end())
      return it->second;
  }
  IntPolynomial phi = compute_phi(n);
  std::lock_guard lock(g_cache_mutex);
  return g_phi_cache.emplace(n, std::move(phi)).first->second;
}

}  // namespace

IntPolynomial cyclotomic(std::int64_t n) {
  if (n < 1) throw std::domain_error("cyclotomic requires n >= 1");
  return cached_phi(n);
}

void clear_cyclotomic_cache() {
  std::lock_guard lock(g_cache_mutex);
  g_phi_cache.clear();
}

IntPolynomial inverse_cyclotomic(std::int64_t m) {
  if (m < 1) throw std::domain_error("inverse_cyclotomic requires m >= 1");
  return quot_exact(IntPolynomial::x_power_minus_one(
                        static_cast<std::size_t>(m)),
                    cyclotomic(m));
}

IntPolynomial binary_expand(std::int64_t m, std::int64_t p) {
  if (m < 1) throw std::domain_error("binary_expand requires m >= 1");
  if (!is_prime(p) || m % p == 0)
    throw std::domain_error("binary_expand requires prime p not dividing m");
  IntPolynomial phi_m = cyclotomic(m);
  // Phi_m(x^p) is sparse: phi(m)+1 nonzero coefficients at multiples of p.
  auto c = phi_m.coeffs();
  std::vector<std::int64_t> substituted(
      (c.size() - 1) * static_cast<std::size_t>(p) + 1, 0);
  for (std::size_t k = 0; k < c.size(); ++k)
    substituted[k * static_cast<std::size_t>(p)] = c[k];
  return quot_exact(IntPolynomial(std::move(substituted)), phi_m);
}

std::int64_t oracle_working_degree(std::int64_t p1, std::int64_t p2,
                                   std::int64_t p3) {
  return euler_phi(p1 * p2) * p3;
}

std::int64_t hw_oracle(std::int64_t p1, std::int64_t p2, std::int64_t p3,
                       std::int64_t degree_cap) {
  if (!(is_prime(p1) && is_prime(p2) && is_prime(p3)))
    throw std::domain_error("hw_oracle requires three primes");
  if (!(p1 < p2 && p2 < p3) || p1 == 2)
    throw std::domain_error("hw_oracle requires p1 < p2 < p3 odd");
  if (std::int64_t deg = oracle_working_degree(p1, p2, p3); deg > degree_cap)
    throw OracleInfeasible("oracle infeasible: working degree " +
                           std::to_string(deg) + " exceeds cap " +
                           std::to_string(degree_cap));
  return static_cast<std::int64_t>(
      binary_expand(p1 * p2, p3).hamming_weight());
}

}  // namespace cyclo
