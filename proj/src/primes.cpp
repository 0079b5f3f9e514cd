#include "spp/primes.hpp"

#include <algorithm>
#include <string>

#include "spp/errors.hpp"

namespace spp {

PrimeTable::PrimeTable(Int limit, bool two_included)
    : limit_(limit), two_included_(two_included) {
  if (limit < 2) {
    throw UsageError("prime table limit must be >= 2, got " + std::to_string(limit));
  }
  composite_.assign(static_cast<std::size_t>(limit) + 1, 0);
  composite_[0] = composite_[1] = 1;
  for (Int i = 4; i <= limit; i += 2) composite_[i] = 1;
  for (Int i = 3; i * i <= limit; i += 2) {
    if (composite_[i]) continue;
    for (Int j = i * i; j <= limit; j += 2 * i) composite_[j] = 1;
  }
  primes_.push_back(2);
  for (Int i = 3; i <= limit; i += 2) {
    if (!composite_[i]) primes_.push_back(i);
  }
}

bool PrimeTable::is_prime(Int x) const {
  if (x < 0 || x > limit_) {
    throw OutOfRangeError("primality query " + std::to_string(x) +
                          " outside sieved range [0, " + std::to_string(limit_) + "]");
  }
  return composite_[static_cast<std::size_t>(x)] == 0;
}

std::span<const Int> PrimeTable::odd_primes() const noexcept {
  return std::span<const Int>(primes_).subspan(1);
}

std::span<const Int> PrimeTable::primes_up_to(Int cap) const {
  if (cap > limit_) {
    throw OutOfRangeError("prime cap " + std::to_string(cap) + " exceeds table limit " +
                          std::to_string(limit_));
  }
  std::span<const Int> all(primes_);
  if (!two_included_) all = all.subspan(1);
  auto end = std::upper_bound(all.begin(), all.end(), cap);
  return all.first(static_cast<std::size_t>(end - all.begin()));
}

bool PrimeTable::in_universe(Int x) const {
  if (x < 2 || x > limit_) return false;
  if (x == 2) return two_included_;
  return composite_[static_cast<std::size_t>(x)] == 0;
}

std::size_t PrimeTable::prime_count() const noexcept { return primes_.size(); }

PrimeTable build_table(Int limit, bool two_included) { return PrimeTable(limit, two_included); }

bool is_prime(Int x, const PrimeTable& table) { return table.is_prime(x); }

std::span<const Int> primes_up_to(Int cap, const PrimeTable& table) {
  return table.primes_up_to(cap);
}

}  // namespace spp
