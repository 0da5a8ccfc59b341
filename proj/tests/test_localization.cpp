#include <doctest.h>

#include <algorithm>
#include <set>

#include <sdpdeg/errors.hpp>
#include <sdpdeg/localization.hpp>

using namespace sdpdeg;

namespace
{

std::vector<integer> ints(std::initializer_list<long> xs)
{
    return {xs.begin(), xs.end()};
}

specialization spec(std::initializer_list<long> xs)
{
    return specialization(ints(xs));
}

std::vector<problem_triple> valid_triples(int max_n)
{
    std::vector<problem_triple> out;
    for (int n = 1; n <= max_n; ++n) {
        for (int r = 1; r <= n; ++r) {
            for (int m = 0; m <= n * (n + 1) / 2; ++m) {
                try {
                    out.push_back(validate_params(m, n, r));
                } catch (const parameter_error &) {
                }
            }
        }
    }
    return out;
}

// Brute-force evaluation of the residue sum straight from its definition:
// weights by enumerating coefficient vectors a in {0,1,2}^I with sum 2,
// elementary symmetric polynomials by summing over all index subsets, A via
// the Hessenberg determinant. Independent of weights_for/elem_sym_prefix/
// segre_from_chern.
integer brute_force_delta(int m, int n, int r, const std::vector<long> &lambda)
{
    const int k = m - (n - r + 1) * (n - r) / 2;
    const int l = n * (n + 1) / 2 - m - r * (r + 1) / 2;

    auto weights = [&](const std::vector<int> &idx) {
        std::vector<long> w;
        std::vector<int> a(idx.size(), 0);
        const auto sz = idx.size();
        // Odometer over {0,1,2}^|idx|.
        while (true) {
            int sum = 0;
            for (int x : a) {
                sum += x;
            }
            if (sum == 2) {
                long v = 0;
                for (std::size_t i = 0; i < sz; ++i) {
                    v += a[i] * lambda[static_cast<std::size_t>(idx[i] - 1)];
                }
                w.push_back(v);
            }
            std::size_t pos = 0;
            while (pos < sz && a[pos] == 2) {
                a[pos++] = 0;
            }
            if (pos == sz) {
                break;
            }
            ++a[pos];
        }
        return w;
    };
    auto elementary = [](const std::vector<long> &w, int upto) {
        std::vector<integer> e(static_cast<std::size_t>(upto) + 1, 0);
        for (unsigned long mask = 0; mask < (1UL << w.size()); ++mask) {
            const int bits = __builtin_popcountl(mask);
            if (bits > upto) {
                continue;
            }
            integer prod = 1;
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (mask >> i & 1UL) {
                    prod *= w[i];
                }
            }
            e[static_cast<std::size_t>(bits)] += prod;
        }
        return e;
    };
    auto a_value = [&](const std::vector<int> &idx, int deg) -> integer {
        if (deg == 0) {
            return 1;
        }
        return hessenberg_det(elementary(weights(idx), deg), static_cast<std::size_t>(deg));
    };

    mpq_class total = 0;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        if (__builtin_popcount(mask) != r) {
            continue;
        }
        std::vector<int> in, out;
        for (int i = 1; i <= n; ++i) {
            (mask >> (i - 1) & 1U ? in : out).push_back(i);
        }
        integer t = 1;
        for (int i : in) {
            for (int j : out) {
                t *= lambda[static_cast<std::size_t>(j - 1)] - lambda[static_cast<std::size_t>(i - 1)];
            }
        }
        mpq_class term(a_value(out, k) * a_value(in, l), t);
        term.canonicalize();
        total += term;
    }
    total.canonicalize();
    REQUIRE(total.get_den() == 1);
    return l % 2 == 0 ? integer(total.get_num()) : integer(-total.get_num());
}

} // namespace

TEST_CASE("validate_params")
{
    const auto t = validate_params(3, 3, 1);
    CHECK(t.k == 0);
    CHECK(t.l == 2);

    const auto full = validate_params(0, 4, 4);
    CHECK(full.k == 0);
    CHECK(full.l == 0);

    SUBCASE("window violations name the failed inequality")
    {
        try {
            validate_params(2, 3, 1);
            FAIL("expected parameter_error");
        } catch (const parameter_error &e) {
            CHECK(std::string(e.what()).find("C(n-r+1,2) <= m") != std::string::npos);
        }
        try {
            validate_params(6, 3, 1);
            FAIL("expected parameter_error");
        } catch (const parameter_error &e) {
            CHECK(std::string(e.what()).find("C(r+1,2) <= C(n+1,2) - m") != std::string::npos);
        }
        CHECK_THROWS_AS(validate_params(0, 3, 4), parameter_error);
        CHECK_THROWS_AS(validate_params(0, 0, 0), parameter_error);
        CHECK_THROWS_AS(validate_params(-1, 3, 3), parameter_error);
    }

    SUBCASE("k + l = r (n - r) on the whole window")
    {
        for (const auto &v : valid_triples(14)) {
            CHECK(v.k >= 0);
            CHECK(v.l >= 0);
            CHECK(v.k + v.l == v.r * (v.n - v.r));
        }
    }
}

TEST_CASE("specialization rejects repeated values")
{
    CHECK_THROWS_AS(spec({0, 1, 0}), parameter_error);
    CHECK_NOTHROW(spec({5, -5, 0}));
    const auto t = validate_params(3, 3, 1);
    CHECK_THROWS_AS(delta(t, spec({0, 1})), parameter_error);
}

TEST_CASE("weights_for")
{
    const auto lam = spec({0, 1, 2});
    CHECK(weights_for(subset_index({1, 2}, 3), lam).weights == ints({0, 2, 1}));
    CHECK(weights_for(subset_index({3}, 3), lam).weights == ints({4}));
    CHECK(weights_for(subset_index({}, 3), lam).weights.empty());
    CHECK(weights_for(subset_index({1, 2, 3, 4}, 4), spec({1, 2, 3, 4})).weights.size() == 10);
}

TEST_CASE("euler_T")
{
    const auto lam = spec({0, 1, 2});
    CHECK(euler_T(subset_index({1}, 3), lam) == 2);
    CHECK(euler_T(subset_index({1, 3}, 3), lam) == -1);
    CHECK(euler_T(subset_index({1, 2, 3}, 3), lam) == 1);
}

TEST_CASE("fixed_point_term")
{
    const auto lam = spec({0, 1, 2});
    CHECK(fixed_point_term(subset_index({1, 3}, 3), validate_params(1, 3, 2), lam) == exact_rational(-28));
    CHECK(fixed_point_term(subset_index({1}, 3), validate_params(3, 3, 1), lam) == exact_rational(0));
    CHECK(fixed_point_term(subset_index({1, 2, 3, 4}, 4), validate_params(0, 4, 4), spec({3, 1, 4, 5}))
          == exact_rational(1));
}

TEST_CASE("delta golden values")
{
    const auto lam = spec({0, 1, 2});
    CHECK(delta(validate_params(3, 3, 1), lam) == 4);
    CHECK(delta(validate_params(4, 3, 1), lam) == 6);
    CHECK(delta(validate_params(5, 3, 1), lam) == 3);
    CHECK(delta(validate_params(1, 3, 2), lam) == 3);
    CHECK(delta(validate_params(2, 3, 2), lam) == 6);
    CHECK(delta(validate_params(0, 1, 1), spec({42})) == 1);
    for (int n = 1; n <= 5; ++n) {
        CHECK(delta(validate_params(0, n, n), specialization::sequential(n)) == 1);
    }
}

TEST_CASE("delta matches a brute-force evaluation of the residue sum")
{
    const std::vector<std::vector<long>> lambdas{{0, 1, 2, 3}, {7, -3, 2, 11}, {-5, 4, 0, 9}};
    for (const auto &t : valid_triples(4)) {
        for (const auto &lam : lambdas) {
            std::vector<long> head(lam.begin(), lam.begin() + t.n);
            std::vector<integer> li(head.begin(), head.end());
            CAPTURE(t.m);
            CAPTURE(t.n);
            CAPTURE(t.r);
            CHECK(delta(t, specialization(li)) == brute_force_delta(t.m, t.n, t.r, head));
        }
    }
}

TEST_CASE("specialization invariance, integrality and duality up to n = 8")
{
    const auto rnd = specialization_strategy::make_random(2024);
    for (const auto &t : valid_triples(8)) {
        CAPTURE(t.m);
        CAPTURE(t.n);
        CAPTURE(t.r);
        const auto seq = specialization::sequential(t.n);
        const auto sum = fixed_point_sum(t, seq);
        REQUIRE(sum.is_integer());
        const integer value = delta(t, seq);
        for (const auto &s : rnd.generate(t.n, 2)) {
            CHECK(fixed_point_sum(t, s).is_integer());
            CHECK(delta(t, s) == value);
        }
        CHECK(delta(dual_triple(t), specialization::sequential(t.n)) == value);
        if (t.k == 0 && t.l == 0) {
            CHECK(value == 1);
        }
    }
}

TEST_CASE("delta is independent of worker count and chunk size")
{
    const auto t = validate_params(20, 8, 4);
    const auto lam = specialization_strategy::make_random(9).generate(8, 1).front();
    const auto reference = fixed_point_sum(t, lam);
    for (unsigned jobs : {2U, 3U, 4U, 8U}) {
        for (std::uint64_t chunk : {1ULL, 5ULL, 64ULL}) {
            engine_options opts;
            opts.jobs = jobs;
            opts.min_chunk = chunk;
            CHECK(fixed_point_sum(t, lam, opts) == reference);
        }
    }
}

TEST_CASE("specialization strategies")
{
    SUBCASE("sequential starts at (0, ..., n-1)")
    {
        const auto specs = specialization_strategy::make_sequential().generate(4, 3);
        REQUIRE(specs.size() == 3);
        CHECK(specs[0] == specialization::sequential(4));
        CHECK(specs[1].values() == ints({1, 3, 5, 7}));
    }
    SUBCASE("reversed")
    {
        const auto specs = specialization_strategy::make_reversed().generate(3, 1);
        CHECK(specs[0].values() == ints({2, 1, 0}));
    }
    SUBCASE("random is seeded, in range and distinct")
    {
        const auto a = specialization_strategy::make_random(42).generate(12, 5);
        const auto b = specialization_strategy::make_random(42).generate(12, 5);
        const auto c = specialization_strategy::make_random(43).generate(12, 5);
        CHECK(a == b);
        CHECK_FALSE(a == c);
        for (const auto &s : a) {
            for (const auto &v : s.values()) {
                CHECK(v >= -10000);
                CHECK(v <= 10000);
            }
        }
        std::set<std::string> seen;
        for (const auto &s : a) {
            seen.insert(s.to_string());
        }
        CHECK(seen.size() == a.size());
    }
    SUBCASE("explicit list comes first")
    {
        const auto specs = specialization_strategy::make_explicit(ints({5, 3, 9})).generate(3, 2);
        CHECK(specs[0].values() == ints({5, 3, 9}));
        CHECK_THROWS_AS(specialization_strategy::make_explicit(ints({5, 3})).generate(3, 1), parameter_error);
        CHECK_THROWS_AS(specialization_strategy::make_explicit(ints({5, 3, 5})).generate(3, 1), parameter_error);
    }
}

TEST_CASE("delta_certified")
{
    const auto t = validate_params(3, 3, 1);
    auto res = delta_certified(t, specialization_strategy::make_sequential(), 1);
    CHECK(res.value == 4);
    CHECK(res.specializations_checked == 1);
    CHECK_FALSE(res.oracle_checked);

    res = delta_certified(t, specialization_strategy::make_random(42), 3);
    CHECK(res.value == 4);
    CHECK(res.specializations_checked == 3);
    CHECK(res.triple == t);

    for (const auto &v : valid_triples(6)) {
        CHECK(delta_certified(v, specialization_strategy::make_sequential(), 1).value
              == delta_certified(v, specialization_strategy::make_reversed(), 1).value);
    }
    CHECK_THROWS_AS(delta_certified(t, specialization_strategy::make_sequential(), 0), parameter_error);
}
