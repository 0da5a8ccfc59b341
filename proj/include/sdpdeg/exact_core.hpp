#ifndef SDPDEG_EXACT_CORE_HPP
#define SDPDEG_EXACT_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sdpdeg
{

using integer = mpz_class;

// Exact rational kept in lowest terms with a positive denominator.
class exact_rational
{
public:
    exact_rational() = default;
    exact_rational(const integer &n) : m_value(n) {}
    exact_rational(long n) : m_value(n) {}
    // Throws parameter_error on a zero denominator.
    exact_rational(const integer &num, const integer &den);

    integer numerator() const
    {
        return m_value.get_num();
    }
    integer denominator() const
    {
        return m_value.get_den();
    }
    bool is_integer() const
    {
        return m_value.get_den() == 1;
    }
    std::string to_string() const;

    exact_rational &operator+=(const exact_rational &other);
    exact_rational &operator-=(const exact_rational &other);
    exact_rational &operator*=(const exact_rational &other);
    exact_rational &operator/=(const exact_rational &other);

    friend exact_rational operator+(exact_rational a, const exact_rational &b)
    {
        return a += b;
    }
    friend exact_rational operator-(exact_rational a, const exact_rational &b)
    {
        return a -= b;
    }
    friend exact_rational operator*(exact_rational a, const exact_rational &b)
    {
        return a *= b;
    }
    friend exact_rational operator/(exact_rational a, const exact_rational &b)
    {
        return a /= b;
    }
    friend exact_rational operator-(exact_rational a)
    {
        a.m_value = -a.m_value;
        return a;
    }
    friend bool operator==(const exact_rational &a, const exact_rational &b)
    {
        return a.m_value == b.m_value;
    }
    friend std::ostream &operator<<(std::ostream &os, const exact_rational &q)
    {
        return os << q.to_string();
    }

private:
    mpq_class m_value;
};

// Weights whose elementary symmetric polynomials are taken. Duplicates allowed.
struct weight_multiset {
    std::vector<integer> weights;
};

// Strictly increasing subset of {1, ..., n}.
class subset_index
{
public:
    subset_index() = default;
    // Throws parameter_error unless members are strictly increasing in [1, n].
    subset_index(std::vector<int> members, int ambient);

    const std::vector<int> &members() const
    {
        return m_members;
    }
    int ambient() const
    {
        return m_ambient;
    }
    std::size_t size() const
    {
        return m_members.size();
    }
    bool contains(int i) const;
    subset_index complement() const;

    friend bool operator==(const subset_index &, const subset_index &) = default;

private:
    std::vector<int> m_members;
    int m_ambient = 0;
};

std::ostream &operator<<(std::ostream &, const subset_index &);

// Binomial coefficient C(n, k) for small arguments, 0 when k < 0 or k > n.
// Throws parameter_error if the result does not fit in 64 bits.
std::uint64_t binomial(int n, int k);

// e_0..e_up_to of the weights: coefficients of prod (1 + w t) truncated at
// degree up_to. Entries past the number of weights are zero.
std::vector<integer> elem_sym_prefix(const weight_multiset &weights, std::size_t up_to);

// A_0..A_up_to from the recurrence A_i = sum_{j=1..i} (-1)^(j-1) c_j A_{i-j},
// i.e. the coefficients of 1 / c(-t). c[0] must be 1; entries of c beyond
// its length are taken as zero.
std::vector<integer> segre_from_chern(std::span<const integer> c, std::size_t up_to);

// Determinant of the i x i Hessenberg matrix with c_{j-r+1} in row r,
// column j (c_0 = 1 on the subdiagonal, zeros below). Computed by exact
// Gaussian elimination; used to cross-check segre_from_chern.
integer hessenberg_det(std::span<const integer> c, std::size_t i);

// Colexicographic ranking of r-subsets of {1..n}.
std::uint64_t subset_rank(const subset_index &s);
subset_index subset_unrank(std::uint64_t rank, int n, int r);
// Advances s to its colex successor; returns false if s was the last subset.
bool next_colex(std::vector<int> &members, int n);

} // namespace sdpdeg

#endif // SDPDEG_EXACT_CORE_HPP
