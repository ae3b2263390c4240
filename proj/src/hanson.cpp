#include <algorithm>
#include <thread>

#include "phinewton/certifier.hpp"
#include "phinewton/errors.hpp"
#include "phinewton/primes.hpp"

namespace phinewton {

namespace {

// For fixed n the k-term product gains the factor n-k+2 as k grows, so the
// largest prime dividing it is a running maximum; a witness exists exactly
// when that maximum reaches k+2.
void scan_range(long n_lo, long n_hi, const std::vector<std::uint32_t>& spf,
                std::vector<std::pair<long, long>>& out) {
  auto largest_prime = [&](long m) {
    std::uint32_t last = 0;
    auto v = static_cast<std::uint32_t>(m);
    while (v > 1) {
      last = spf[v];
      v /= spf[v];
    }
    return static_cast<long>(last);
  };
  for (long n = n_lo; n <= n_hi; ++n) {
    long running = largest_prime(n + 1);
    for (long k = 2; k <= n / 2; ++k) {
      running = std::max(running, largest_prime(n - k + 2));
      if (running < k + 2) out.emplace_back(n, k);
    }
  }
}

}  // namespace

std::vector<std::pair<long, long>> hanson_scan(long n_lo, long n_hi, unsigned threads) {
  n_lo = std::max(n_lo, 4L);
  std::vector<std::pair<long, long>> result;
  if (n_hi < n_lo) return result;
  if (n_hi >= (1L << 31)) throw DomainError("hanson_scan: upper bound too large");
  const auto spf = smallest_prime_factor_table(static_cast<std::uint32_t>(n_hi + 1));

  threads = std::max(1U, threads);
  const long span = n_hi - n_lo + 1;
  const long chunk = (span + threads - 1) / threads;
  std::vector<std::vector<std::pair<long, long>>> parts(threads);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    const long lo = n_lo + static_cast<long>(t) * chunk;
    const long hi = std::min(n_hi, lo + chunk - 1);
    if (lo > hi) break;
    if (threads == 1) {
      scan_range(lo, hi, spf, parts[t]);
    } else {
      workers.emplace_back([&, lo, hi, t] { scan_range(lo, hi, spf, parts[t]); });
    }
  }
  for (auto& w : workers) w.join();
  for (auto& part : parts) result.insert(result.end(), part.begin(), part.end());
  return result;
}

}  // namespace phinewton
