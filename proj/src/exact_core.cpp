#include <sdpdeg/exact_core.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

#include <sdpdeg/errors.hpp>

namespace sdpdeg
{

exact_rational::exact_rational(const integer &num, const integer &den)
{
    if (den == 0) {
        throw parameter_error("exact_rational: zero denominator");
    }
    m_value = mpq_class(num, den);
    m_value.canonicalize();
}

std::string exact_rational::to_string() const
{
    return m_value.get_str();
}

// mpq_class arithmetic keeps operands canonical, so no extra reduction here.
exact_rational &exact_rational::operator+=(const exact_rational &other)
{
    m_value += other.m_value;
    return *this;
}

exact_rational &exact_rational::operator-=(const exact_rational &other)
{
    m_value -= other.m_value;
    return *this;
}

exact_rational &exact_rational::operator*=(const exact_rational &other)
{
    m_value *= other.m_value;
    return *this;
}

exact_rational &exact_rational::operator/=(const exact_rational &other)
{
    if (other.m_value == 0) {
        throw parameter_error("exact_rational: division by zero");
    }
    m_value /= other.m_value;
    return *this;
}

subset_index::subset_index(std::vector<int> members, int ambient) : m_members(std::move(members)), m_ambient(ambient)
{
    if (ambient < 0) {
        throw parameter_error("subset_index: negative ambient size");
    }
    for (std::size_t i = 0; i < m_members.size(); ++i) {
        if (m_members[i] < 1 || m_members[i] > ambient) {
            throw parameter_error("subset_index: member " + std::to_string(m_members[i]) + " outside [1, "
                                  + std::to_string(ambient) + "]");
        }
        if (i > 0 && m_members[i] <= m_members[i - 1]) {
            throw parameter_error("subset_index: members must be strictly increasing");
        }
    }
}

bool subset_index::contains(int i) const
{
    return std::binary_search(m_members.begin(), m_members.end(), i);
}

subset_index subset_index::complement() const
{
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(m_ambient) - m_members.size());
    auto it = m_members.begin();
    for (int i = 1; i <= m_ambient; ++i) {
        if (it != m_members.end() && *it == i) {
            ++it;
        } else {
            rest.push_back(i);
        }
    }
    return subset_index(std::move(rest), m_ambient);
}

std::ostream &operator<<(std::ostream &os, const subset_index &s)
{
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) {
        os << (i ? "," : "") << s.members()[i];
    }
    return os << '}';
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    integer c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (mpz_sizeinbase(c.get_mpz_t(), 2) > 64) {
        throw parameter_error("binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") exceeds 64 bits");
    }
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, c.get_mpz_t());
    return out;
}

std::vector<integer> elem_sym_prefix(const weight_multiset &weights, std::size_t up_to)
{
    std::vector<integer> e(up_to + 1, 0);
    e[0] = 1;
    std::size_t filled = 0;
    for (const auto &w : weights.weights) {
        // Multiply by (1 + w t); only degrees <= min(filled + 1, up_to) change.
        filled = std::min(filled + 1, up_to);
        for (std::size_t d = filled; d >= 1; --d) {
            e[d] += w * e[d - 1];
        }
    }
    return e;
}

std::vector<integer> segre_from_chern(std::span<const integer> c, std::size_t up_to)
{
    std::vector<integer> a(up_to + 1, 0);
    a[0] = 1;
    const std::size_t top = c.empty() ? 0 : c.size() - 1;
    for (std::size_t i = 1; i <= up_to; ++i) {
        integer acc = 0;
        for (std::size_t j = 1; j <= std::min(i, top); ++j) {
            if (j % 2 == 1) {
                acc += c[j] * a[i - j];
            } else {
                acc -= c[j] * a[i - j];
            }
        }
        a[i] = std::move(acc);
    }
    return a;
}

integer hessenberg_det(std::span<const integer> c, std::size_t i)
{
    auto coeff = [&](long idx) -> mpq_class {
        if (idx < 0 || static_cast<std::size_t>(idx) >= c.size()) {
            return idx == 0 ? mpq_class(1) : mpq_class(0);
        }
        return mpq_class(c[static_cast<std::size_t>(idx)]);
    };
    // Row r, column j holds c_{j - r + 1}: c_1 on the diagonal, 1 below it.
    std::vector<std::vector<mpq_class>> m(i, std::vector<mpq_class>(i));
    for (std::size_t r = 0; r < i; ++r) {
        for (std::size_t j = 0; j < i; ++j) {
            m[r][j] = coeff(static_cast<long>(j) - static_cast<long>(r) + 1);
        }
    }
    mpq_class det = 1;
    for (std::size_t col = 0; col < i; ++col) {
        std::size_t pivot = col;
        while (pivot < i && m[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == i) {
            return 0;
        }
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < i; ++r) {
            if (m[r][col] == 0) {
                continue;
            }
            const mpq_class f = m[r][col] / m[col][col];
            for (std::size_t j = col; j < i; ++j) {
                m[r][j] -= f * m[col][j];
            }
        }
    }
    return det.get_num();
}

std::uint64_t subset_rank(const subset_index &s)
{
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        rank += binomial(s.members()[i] - 1, static_cast<int>(i) + 1);
    }
    return rank;
}

subset_index subset_unrank(std::uint64_t rank, int n, int r)
{
    if (n < 0 || r < 0 || r > n) {
        throw parameter_error("subset_unrank: need 0 <= r <= n");
    }
    if (rank >= binomial(n, r)) {
        throw parameter_error("subset_unrank: rank " + std::to_string(rank) + " outside [0, C(" + std::to_string(n)
                              + ", " + std::to_string(r) + "))");
    }
    std::vector<int> members(static_cast<std::size_t>(r));
    int x = n - 1;
    for (int i = r; i >= 1; --i) {
        while (binomial(x, i) > rank) {
            --x;
        }
        members[static_cast<std::size_t>(i - 1)] = x + 1;
        rank -= binomial(x, i);
        --x;
    }
    return subset_index(std::move(members), n);
}

bool next_colex(std::vector<int> &members, int n)
{
    const std::size_t r = members.size();
    for (std::size_t i = 0; i < r; ++i) {
        const int bound = i + 1 < r ? members[i + 1] : n + 1;
        if (members[i] + 1 < bound) {
            ++members[i];
            for (std::size_t j = 0; j < i; ++j) {
                members[j] = static_cast<int>(j) + 1;
            }
            return true;
        }
    }
    return false;
}

} // namespace sdpdeg
