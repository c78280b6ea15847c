#include "bellfowler/combinatorics.hpp"

#include <algorithm>
#include <mutex>

namespace bellfowler {

namespace {

std::mutex fact_mutex;
std::vector<Int> fact_table = {Int(1)}; // fact_table[n] = n!

// Lower-triangular memo table driven by a two-term recurrence.
class Triangle {
  public:
    using Step = Int (*)(long n, long k, const Int& up_left, const Int& up);

    explicit Triangle(Step step) : step_(step) { rows_.push_back({Int(1)}); }

    Int at(long n, long k) {
        if (n < 0 || k < 0 || k > n) return Int(0);
        std::lock_guard<std::mutex> lock(mutex_);
        while (static_cast<long>(rows_.size()) <= n) {
            long m = static_cast<long>(rows_.size());
            std::vector<Int> row(m + 1);
            row[0] = Int(0);
            for (long j = 1; j <= m; ++j)
                row[j] = step_(m, j, rows_[m - 1][j - 1],
                               j < m ? rows_[m - 1][j] : Int(0));
            rows_.push_back(std::move(row));
        }
        return rows_[n][k];
    }

  private:
    Step step_;
    std::vector<std::vector<Int>> rows_;
    std::mutex mutex_;
};

Triangle& stirling1_table() {
    static Triangle t(+[](long n, long /*k*/, const Int& up_left, const Int& up) {
        return up_left + Int(n - 1) * up;
    });
    return t;
}

Triangle& stirling2_table() {
    static Triangle t(+[](long /*n*/, long k, const Int& up_left, const Int& up) {
        return up_left + Int(k) * up;
    });
    return t;
}

} // namespace

Int factorial(long n) {
    if (n < 0) throw DomainError("factorial of negative argument");
    std::lock_guard<std::mutex> lock(fact_mutex);
    while (static_cast<long>(fact_table.size()) <= n) {
        long m = static_cast<long>(fact_table.size());
        fact_table.push_back(fact_table.back() * Int(m));
    }
    return fact_table[n];
}

Int binomial(long n, long k) {
    if (n < 0) throw DomainError("binomial with negative n");
    if (k < 0 || k > n) return Int(0);
    k = std::min(k, n - k);
    // multiplicative form; avoids pinning the factorial table to large n
    Int r(1);
    for (long i = 1; i <= k; ++i) {
        r *= Int(n - k + i);
        r = div_exact(r, Int(i));
    }
    return r;
}

Int rising_factorial(long x, long d) {
    if (d < 0) throw DomainError("rising factorial with negative length");
    Int r(1);
    for (long i = 0; i < d; ++i) r *= Int(x + i);
    return r;
}

Int lah(long n, long k) {
    if (k < 1 || k > n) return Int(0);
    return binomial(n - 1, k - 1) * div_exact(factorial(n), factorial(k));
}

Int stirling1_unsigned(long n, long k) {
    if (n < 0 || k < 0) return Int(0);
    return stirling1_table().at(n, k);
}

Int stirling2(long n, long k) {
    if (n < 0 || k < 0) return Int(0);
    return stirling2_table().at(n, k);
}

Configuration Configuration::from_parts(const std::vector<long>& parts) {
    Configuration c;
    for (long p : parts) {
        if (p < 1) throw DomainError("configuration part below 1");
        ++c.occ_[p];
        c.n_ += p;
        c.k_ += 1;
    }
    return c;
}

ConfigurationStream::ConfigurationStream(long n, long k) : n_(n), k_(k) {
    if (n < 0 || k < 0) throw DomainError("negative enumeration index");
    exhausted_ = (k > n) || (k == 0 && n > 0);
}

// Reverse-lexicographic successor over descending part lists with exactly k
// parts. A suffix of length c summing to s is final iff every scan step sees
// parts_[i] == ceil(s/c); the first position breaking that is lowered by one
// and the tail is refilled greedily from the left.
bool ConfigurationStream::advance() {
    if (parts_.empty()) return false;
    long sum = 0, len = 0;
    std::size_t i = parts_.size();
    while (i > 0) {
        --i;
        sum += parts_[i];
        ++len;
        long ceil_avg = (sum + len - 1) / len;
        if (parts_[i] != ceil_avg) break;
        if (i == 0) return false; // whole list is final
    }
    long cap = parts_[i] - 1;
    for (; len > 0; --len, ++i) {
        parts_[i] = std::min(sum - len + 1, cap);
        cap = parts_[i];
        sum -= parts_[i];
    }
    return true;
}

std::optional<Configuration> ConfigurationStream::next() {
    if (exhausted_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (k_ > 0) {
            parts_.assign(k_, 1);
            parts_[0] = n_ - k_ + 1;
        }
        // k == 0, n == 0: the single empty configuration
        return Configuration::from_parts(parts_);
    }
    if (!advance()) {
        exhausted_ = true;
        return std::nullopt;
    }
    return Configuration::from_parts(parts_);
}

std::vector<Configuration> all_configurations(long n, long k) {
    std::vector<Configuration> out;
    ConfigurationStream stream(n, k);
    while (auto c = stream.next()) out.push_back(std::move(*c));
    return out;
}

} // namespace bellfowler
