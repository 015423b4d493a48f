#pragma once

#include "detcoh/laurent.hpp"

#include <string>
#include <vector>

namespace detcoh {

/// Integer partition: weakly decreasing nonnegative parts, trailing zeros
/// trimmed on construction.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long long> parts);

    const std::vector<long long>& parts() const { return parts_; }
    long long num_parts() const { return static_cast<long long>(parts_.size()); }
    /// i-th part (1-based), 0 beyond the end.
    long long part(long long i) const;
    long long size() const; // |x| = sum of parts

    Partition conjugate() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    /// "(3,1)" with trailing zeros suppressed; "()" for the empty partition.
    std::string str() const;

private:
    std::vector<long long> parts_;
};

/// Integer weight of a fixed declared length.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::vector<long long> entries) : entries_(std::move(entries)) {}

    const std::vector<long long>& entries() const { return entries_; }
    long long length() const { return static_cast<long long>(entries_.size()); }
    long long entry(long long i) const { return entries_.at(static_cast<size_t>(i)); }
    long long size() const; // sum of entries

    bool dominant() const; // weakly decreasing

    /// Entrywise sum with the constant weight (c^len).
    Weight plus_constant(long long c) const;
    static Weight concat(const Weight& a, const Weight& b);

    bool operator==(const Weight& o) const { return entries_ == o.entries_; }
    bool operator<(const Weight& o) const { return entries_ < o.entries_; }

    /// "(3,2,0,-1)".
    std::string str() const;

private:
    std::vector<long long> entries_;
};

/// Outcome of the Borel--Weil--Bott weight calculus: either all cohomology
/// vanishes, or exactly one group survives in the stated degree with the
/// stated dominant weight.
struct BottResult {
    bool vanishes = true;
    long long degree = 0;
    Weight weight;

    static BottResult vanish() { return BottResult{}; }
    static BottResult nonvanishing(long long degree, Weight w) {
        return BottResult{false, degree, std::move(w)};
    }

    bool operator==(const BottResult& o) const {
        if (vanishes != o.vanishes) return false;
        if (vanishes) return true;
        return degree == o.degree && weight == o.weight;
    }

    std::string str() const;
};

/// Gaussian binomial {a choose b}_q by the Pascal recurrence (per-invocation
/// memo table, safe under concurrent calls). Out-of-range arguments yield
/// the zero polynomial, matching the vanishing conventions the closed
/// formulas rely on.
LaurentPoly qbinom(long long a, long long b);

/// Independent oracle: sum of q^{|x|} over partitions x inside the
/// (a-b) x b rectangle. Requires a >= b >= 0.
LaurentPoly qbinom_oracle(long long a, long long b);

/// All partitions with at most `rows` parts, each part <= `cols`, in
/// lexicographic ascending order of the part vector.
std::vector<Partition> partitions_in_rectangle(long long rows, long long cols);

/// delta^{(m)} = (m-1, m-2, ..., 0).
Weight rho_shift(long long m);

/// The tilde calculus: test gamma + delta for a repeat; otherwise return the
/// inversion count and sort(gamma + delta) - delta.
BottResult bott_tilde(const Weight& gamma);

enum class FlagPart { fiberwise, global };

/// Cohomology of S_lambda Q_p (x) L^mu on Flag([p,n];V): the fiberwise part
/// runs the tilde calculus on mu alone (relative version), the global part
/// on the concatenation (lambda | mu).
BottResult bott_flag_cohomology(const Weight& lambda, const Weight& mu, long long n,
                                FlagPart part);

/// Degree-zero direct image along the forgetful map of flags: requires
/// lambda_p >= mu_1 and splices mu_1 onto lambda.
std::pair<Weight, Weight> bott_pushforward_c(const Weight& lambda, const Weight& mu);

/// Same bundle on both flag-variety factors of a product space: the tilde
/// calculus applies to (nu | mu) and the surviving degree doubles.
BottResult product_space_cohomology(const Weight& nu, const Weight& mu, long long n);

} // namespace detcoh
