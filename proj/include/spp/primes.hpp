#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace spp {

using Int = std::int64_t;

/// Sieved primality oracle over [0, limit] plus the ascending prime
/// sequence used as the enumeration universe.
///
/// The prime 2 is sieved like any other value (is_prime(2) is true), but it
/// joins the enumeration universe only when `two_included` is set. With the
/// default universe every summand is odd, which is what makes the parity
/// filter in forms.hpp exact.
///
/// Immutable after construction; concurrent reads are safe.
class PrimeTable {
 public:
  /// Throws UsageError when limit < 2.
  explicit PrimeTable(Int limit, bool two_included = false);

  Int limit() const noexcept { return limit_; }
  bool two_included() const noexcept { return two_included_; }

  /// Throws OutOfRangeError when x lies outside [0, limit].
  bool is_prime(Int x) const;

  /// Odd primes <= limit, ascending.
  std::span<const Int> odd_primes() const noexcept;

  /// Universe primes <= cap, ascending; 2 is present only when two_included().
  /// Throws OutOfRangeError when cap > limit.
  std::span<const Int> primes_up_to(Int cap) const;

  /// Whether x belongs to the enumeration universe (prime, within limit, and
  /// not the excluded 2).
  bool in_universe(Int x) const;

  /// Number of primes <= limit, counting 2.
  std::size_t prime_count() const noexcept;

 private:
  Int limit_;
  bool two_included_;
  std::vector<std::uint8_t> composite_;  // indexed by x, 1 for non-primes
  std::vector<Int> primes_;              // every prime <= limit, including 2
};

/// Free-function spellings used throughout the engine.
PrimeTable build_table(Int limit, bool two_included = false);
bool is_prime(Int x, const PrimeTable& table);
std::span<const Int> primes_up_to(Int cap, const PrimeTable& table);

}  // namespace spp
