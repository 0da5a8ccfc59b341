#ifndef SDPDEG_LOCALIZATION_HPP
#define SDPDEG_LOCALIZATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <sdpdeg/exact_core.hpp>

namespace sdpdeg
{

// A validated (m, n, r) inside the Pataki window together with the Segre
// degrees k (quotient side) and l (sub-bundle side). k + l = r (n - r).
struct problem_triple {
    int m = 0;
    int n = 0;
    int r = 0;
    int k = 0;
    int l = 0;

    friend bool operator==(const problem_triple &, const problem_triple &) = default;
};

// Throws parameter_error naming the violated inequality.
problem_triple validate_params(long m, long n, long r);

// The triple (C(n+1,2) - m, n, n - r).
problem_triple dual_triple(const problem_triple &t);

// Pairwise-distinct integer values substituted for the torus weights.
class specialization
{
public:
    // Throws parameter_error on repeated values.
    explicit specialization(std::vector<integer> lambda);

    // (0, 1, ..., n - 1).
    static specialization sequential(int n);

    const std::vector<integer> &values() const
    {
        return m_lambda;
    }
    std::size_t size() const
    {
        return m_lambda.size();
    }
    // 1-based, matching subset_index members.
    const integer &operator[](int i) const
    {
        return m_lambda[static_cast<std::size_t>(i - 1)];
    }
    std::string to_string() const;

    friend bool operator==(const specialization &, const specialization &) = default;

private:
    std::vector<integer> m_lambda;
};

// Source of the specializations used by delta_certified.
//
// - sequential: check j uses lambda_i = (j + 1) * (i - 1) + j, i = 1..n, so
//   check 0 is (0, 1, ..., n - 1).
// - reversed: check j uses lambda_i = (j + 1) * (n - i) + j.
// - random: n distinct integers per check, drawn from [-10000, 10000] with
//   std::mt19937_64 seeded by `seed` (one stream across all checks). Each
//   draw takes a raw 64-bit output x, rejects x >= 20001 * floor(2^64 / 20001),
//   and maps the rest to x mod 20001 - 10000. Draws repeating an earlier value
//   of the same check are discarded.
// - explicit_list: check 0 is the given list; further checks continue with
//   the random rule above.
struct specialization_strategy {
    enum class kind { sequential, reversed, random, explicit_list };

    kind type = kind::sequential;
    std::uint64_t seed = 0;
    std::vector<integer> lambda;

    static specialization_strategy make_sequential()
    {
        return {kind::sequential, 0, {}};
    }
    static specialization_strategy make_reversed()
    {
        return {kind::reversed, 0, {}};
    }
    static specialization_strategy make_random(std::uint64_t seed)
    {
        return {kind::random, seed, {}};
    }
    static specialization_strategy make_explicit(std::vector<integer> lambda, std::uint64_t seed = 0)
    {
        return {kind::explicit_list, seed, std::move(lambda)};
    }

    // `count` pairwise-different specializations of length n.
    std::vector<specialization> generate(int n, std::size_t count) const;
};

struct degree_result {
    integer value;
    problem_triple triple;
    std::size_t specializations_checked = 0;
    bool oracle_checked = false;
};

struct engine_options {
    // Worker threads for the fixed-point sum; 0 means hardware concurrency.
    unsigned jobs = 1;
    // Minimum number of fixed points per chunk before another worker is used.
    std::uint64_t min_chunk = 64;
};

// {lambda_i + lambda_j : i <= j in s}: the doubles 2 lambda_i first, then the
// pairs i < j in lexicographic order.
weight_multiset weights_for(const subset_index &s, const specialization &spec);

// prod_{i in I} prod_{j not in I} (lambda_j - lambda_i).
integer euler_T(const subset_index &fixed_point, const specialization &spec);

// A_{k, I^c} A_{l, I} / T_I, without the global (-1)^l.
exact_rational fixed_point_term(const subset_index &fixed_point, const problem_triple &t, const specialization &spec);

// Sum of fixed_point_term over all r-subsets, folded in colex rank order.
exact_rational fixed_point_sum(const problem_triple &t, const specialization &spec, const engine_options &opts = {});

// (-1)^l fixed_point_sum; throws inconsistency_error if the sum is not an
// integer.
integer delta(const problem_triple &t, const specialization &spec, const engine_options &opts = {});

// delta at `checks` specializations from the strategy, all of which must
// agree (inconsistency_error otherwise).
degree_result delta_certified(const problem_triple &t, const specialization_strategy &strategy, std::size_t checks,
                              const engine_options &opts = {});

} // namespace sdpdeg

#endif // SDPDEG_LOCALIZATION_HPP
