#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bellfowler/exact.hpp"

namespace bellfowler {

// n!; memoized (the table grows on demand and is never evicted; safe for
// concurrent callers).
Int factorial(long n);

// C(n, k) for n >= 0; 0 when k < 0 or k > n. Values outside the triangle are
// 0 rather than an error so that index-driven sums need no guards.
Int binomial(long n, long k);

// x (x+1) ... (x+d-1); 1 when d = 0. x may be negative.
Int rising_factorial(long x, long d);

// Unsigned Lah numbers L(n, k) = C(n-1, k-1) n!/k!; 0 outside 1 <= k <= n.
Int lah(long n, long k);

// Unsigned Stirling numbers of the first kind, |S1(n,k)|, by the triangle
// recurrence |S1(n,k)| = |S1(n-1,k-1)| + (n-1)|S1(n-1,k)|; memoized.
Int stirling1_unsigned(long n, long k);

// Stirling numbers of the second kind, S2(n,k) = S2(n-1,k-1) + k S2(n-1,k);
// memoized.
Int stirling2(long n, long k);

// An occupation multiset {m_l}: m_l systems sit at level l, all m_l >= 1
// (zero entries are omitted). weighted_size = sum l*m_l, count = sum m_l.
class Configuration {
  public:
    Configuration() = default;

    // parts = one level per entry, e.g. {4,1,1} -> {m_1=2, m_4=1}
    static Configuration from_parts(const std::vector<long>& parts);

    const std::map<long, long>& occupations() const { return occ_; }
    long multiplicity(long level) const {
        auto it = occ_.find(level);
        return it == occ_.end() ? 0 : it->second;
    }
    long weighted_size() const { return n_; }
    long count() const { return k_; }
    long max_level() const { return occ_.empty() ? 0 : occ_.rbegin()->first; }

    bool operator==(const Configuration&) const = default;

  private:
    std::map<long, long> occ_;
    long n_ = 0;
    long k_ = 0;
};

// Streams every configuration with sum l*m_l = n and sum m_l = k exactly
// once, in lexicographically decreasing order of the descending part list
// (so the largest part shrinks last to first: (6,3) gives {4,1,1}, {3,2,1},
// {2,2,2}). Yields nothing when infeasible; yields the single empty
// configuration for n = k = 0.
class ConfigurationStream {
  public:
    ConfigurationStream(long n, long k);
    std::optional<Configuration> next();

  private:
    std::vector<long> parts_;
    long n_, k_;
    bool exhausted_;
    bool started_ = false;

    bool advance();
};

// Convenience: materialize the whole stream (tests, small instances).
std::vector<Configuration> all_configurations(long n, long k);

} // namespace bellfowler
