#include <sdpdeg/localization.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include <sdpdeg/errors.hpp>

namespace sdpdeg
{

namespace
{

long choose2(long x)
{
    return x * (x - 1) / 2;
}

std::string window_detail(long lhs, long rhs)
{
    return " (" + std::to_string(lhs) + " > " + std::to_string(rhs) + ")";
}

// Unbiased draw from [-10000, 10000].
long draw_weight(std::mt19937_64 &gen)
{
    constexpr std::uint64_t span = 20001;
    constexpr std::uint64_t limit = (~std::uint64_t{0} / span) * span;
    std::uint64_t x = gen();
    while (x >= limit) {
        x = gen();
    }
    return static_cast<long>(x % span) - 10000;
}

std::vector<integer> draw_distinct(std::mt19937_64 &gen, int n)
{
    std::vector<integer> out;
    std::set<long> seen;
    while (out.size() < static_cast<std::size_t>(n)) {
        const long w = draw_weight(gen);
        if (seen.insert(w).second) {
            out.emplace_back(w);
        }
    }
    return out;
}

exact_rational sum_range(const problem_triple &t, const specialization &spec, std::uint64_t first,
                         std::uint64_t count)
{
    exact_rational acc;
    if (count == 0) {
        return acc;
    }
    auto members = subset_unrank(first, t.n, t.r).members();
    for (std::uint64_t i = 0; i < count; ++i) {
        acc += fixed_point_term(subset_index(members, t.n), t, spec);
        if (i + 1 < count) {
            next_colex(members, t.n);
        }
    }
    return acc;
}

} // namespace

problem_triple validate_params(long m, long n, long r)
{
    if (n < 1) {
        throw parameter_error("n must be positive (got n = " + std::to_string(n) + ")");
    }
    if (n > 62) {
        throw parameter_error("n = " + std::to_string(n) + " is too large (the fixed-point count must fit 64 bits)");
    }
    if (r < 0) {
        throw parameter_error("r must be nonnegative (got r = " + std::to_string(r) + ")");
    }
    if (r > n) {
        throw parameter_error("r <= n fails (r = " + std::to_string(r) + ", n = " + std::to_string(n) + ")");
    }
    if (m < 0) {
        throw parameter_error("m must be nonnegative (got m = " + std::to_string(m) + ")");
    }
    const long quotient_dim = choose2(n - r + 1);
    if (quotient_dim > m) {
        throw parameter_error("Pataki window violated: C(n-r+1,2) <= m fails" + window_detail(quotient_dim, m));
    }
    const long sub_dim = choose2(r + 1);
    const long total = choose2(n + 1);
    if (sub_dim > total - m) {
        throw parameter_error("Pataki window violated: C(r+1,2) <= C(n+1,2) - m fails"
                              + window_detail(sub_dim, total - m));
    }
    problem_triple t;
    t.m = static_cast<int>(m);
    t.n = static_cast<int>(n);
    t.r = static_cast<int>(r);
    t.k = static_cast<int>(m - quotient_dim);
    t.l = static_cast<int>(total - m - sub_dim);
    if (t.k + t.l != t.r * (t.n - t.r)) {
        throw inconsistency_error("k + l != r (n - r) for (" + std::to_string(m) + ", " + std::to_string(n) + ", "
                                  + std::to_string(r) + ")");
    }
    return t;
}

problem_triple dual_triple(const problem_triple &t)
{
    return validate_params(choose2(t.n + 1) - t.m, t.n, t.n - t.r);
}

specialization::specialization(std::vector<integer> lambda) : m_lambda(std::move(lambda))
{
    std::vector<integer> sorted = m_lambda;
    std::sort(sorted.begin(), sorted.end());
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw parameter_error("specialization values must be pairwise distinct (" + dup->get_str()
                              + " is repeated)");
    }
}

specialization specialization::sequential(int n)
{
    std::vector<integer> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        v.emplace_back(i);
    }
    return specialization(std::move(v));
}

std::string specialization::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < m_lambda.size(); ++i) {
        os << (i ? "," : "") << m_lambda[i].get_str();
    }
    os << ')';
    return os.str();
}

std::vector<specialization> specialization_strategy::generate(int n, std::size_t count) const
{
    std::vector<specialization> out;
    out.reserve(count);
    std::mt19937_64 gen(seed);
    auto push_unique = [&](std::vector<integer> values) {
        specialization s(std::move(values));
        if (std::find(out.begin(), out.end(), s) != out.end()) {
            return false;
        }
        out.push_back(std::move(s));
        return true;
    };
    if (type == kind::explicit_list) {
        if (lambda.size() != static_cast<std::size_t>(n)) {
            throw parameter_error("explicit lambda has " + std::to_string(lambda.size()) + " entries, expected n = "
                                  + std::to_string(n));
        }
        if (count > 0) {
            push_unique(lambda);
        }
    }
    for (std::size_t j = 0; out.size() < count; ++j) {
        std::vector<integer> v(static_cast<std::size_t>(n));
        const long scale = static_cast<long>(j) + 1;
        switch (type) {
            case kind::sequential:
                for (int i = 0; i < n; ++i) {
                    v[static_cast<std::size_t>(i)] = scale * i + static_cast<long>(j);
                }
                break;
            case kind::reversed:
                for (int i = 0; i < n; ++i) {
                    v[static_cast<std::size_t>(i)] = scale * (n - 1 - i) + static_cast<long>(j);
                }
                break;
            case kind::random:
            case kind::explicit_list:
                v = draw_distinct(gen, n);
                break;
        }
        push_unique(std::move(v));
    }
    return out;
}

weight_multiset weights_for(const subset_index &s, const specialization &spec)
{
    const auto &idx = s.members();
    weight_multiset w;
    w.weights.reserve(idx.size() * (idx.size() + 1) / 2);
    for (int i : idx) {
        w.weights.push_back(2 * spec[i]);
    }
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            w.weights.push_back(spec[idx[a]] + spec[idx[b]]);
        }
    }
    return w;
}

integer euler_T(const subset_index &fixed_point, const specialization &spec)
{
    integer prod = 1;
    for (int i : fixed_point.members()) {
        for (int j = 1; j <= fixed_point.ambient(); ++j) {
            if (fixed_point.contains(j)) {
                continue;
            }
            const integer factor = spec[j] - spec[i];
            if (factor == 0) {
                throw inconsistency_error("euler_T: zero tangent weight at fixed point "
                                          + (std::ostringstream{} << fixed_point).str());
            }
            prod *= factor;
        }
    }
    return prod;
}

exact_rational fixed_point_term(const subset_index &fixed_point, const problem_triple &t, const specialization &spec)
{
    const auto k = static_cast<std::size_t>(t.k);
    const auto l = static_cast<std::size_t>(t.l);
    // Quotient side: S^2 Q has Chern classes c_{i, I^c}.
    const auto cq = elem_sym_prefix(weights_for(fixed_point.complement(), spec), k);
    // Sub-bundle side: c_i(S^2 U^*) = (-1)^i c_{i, I}; the signs collect into
    // the global (-1)^l applied by delta.
    const auto cu = elem_sym_prefix(weights_for(fixed_point, spec), l);
    const integer numerator = segre_from_chern(cq, k)[k] * segre_from_chern(cu, l)[l];
    return exact_rational(numerator, euler_T(fixed_point, spec));
}

exact_rational fixed_point_sum(const problem_triple &t, const specialization &spec, const engine_options &opts)
{
    if (spec.size() != static_cast<std::size_t>(t.n)) {
        throw parameter_error("specialization has " + std::to_string(spec.size()) + " values, expected n = "
                              + std::to_string(t.n));
    }
    const std::uint64_t total = binomial(t.n, t.r);
    unsigned jobs = opts.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opts.jobs;
    const std::uint64_t min_chunk = std::max<std::uint64_t>(1, opts.min_chunk);
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(1, total / min_chunk)));

    if (jobs <= 1) {
        return sum_range(t, spec, 0, total);
    }
    // Contiguous rank chunks; partials are folded in rank order.
    std::vector<exact_rational> partial(jobs);
    {
        std::vector<std::jthread> workers;
        workers.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) {
            const std::uint64_t first = total * w / jobs;
            const std::uint64_t last = total * (w + 1) / jobs;
            workers.emplace_back([&, w, first, last] { partial[w] = sum_range(t, spec, first, last - first); });
        }
    }
    exact_rational acc;
    for (const auto &p : partial) {
        acc += p;
    }
    return acc;
}

integer delta(const problem_triple &t, const specialization &spec, const engine_options &opts)
{
    const exact_rational sum = fixed_point_sum(t, spec, opts);
    if (!sum.is_integer()) {
        throw inconsistency_error("fixed-point sum for (" + std::to_string(t.m) + ", " + std::to_string(t.n) + ", "
                                  + std::to_string(t.r) + ") at lambda = " + spec.to_string()
                                  + " is not an integer: " + sum.to_string());
    }
    integer value = sum.numerator();
#if defined(SDPDEG_INJECT_SIGN_FLIP)
    // Negative-control build only.
    value = -value;
#endif
    if (t.l % 2 != 0) {
        value = -value;
    }
    return value;
}

degree_result delta_certified(const problem_triple &t, const specialization_strategy &strategy, std::size_t checks,
                              const engine_options &opts)
{
    if (checks < 1) {
        throw parameter_error("at least one specialization check is required");
    }
    const auto specs = strategy.generate(t.n, checks);
    degree_result res;
    res.triple = t;
    res.value = delta(t, specs.front(), opts);
    for (std::size_t i = 1; i < specs.size(); ++i) {
        const integer other = delta(t, specs[i], opts);
        if (other != res.value) {
            throw inconsistency_error("specializations disagree for (" + std::to_string(t.m) + ", "
                                      + std::to_string(t.n) + ", " + std::to_string(t.r) + "): lambda = "
                                      + specs.front().to_string() + " gives " + res.value.get_str() + ", lambda = "
                                      + specs[i].to_string() + " gives " + other.get_str());
        }
    }
    res.specializations_checked = specs.size();
    return res;
}

} // namespace sdpdeg
