#ifndef SDPDEG_SCHUBERT_HPP
#define SDPDEG_SCHUBERT_HPP

#include <cstddef>
#include <map>
#include <ostream>
#include <vector>

#include <sdpdeg/exact_core.hpp>
#include <sdpdeg/localization.hpp>

namespace sdpdeg::schubert
{

// The r x (n - r) box indexing the Schubert basis of G(r, n).
struct grassmannian {
    int rows = 0; // r
    int cols = 0; // n - r

    static grassmannian of(int r, int n)
    {
        return {r, n - r};
    }
    int dimension() const
    {
        return rows * cols;
    }
    friend bool operator==(const grassmannian &, const grassmannian &) = default;
};

// Weakly decreasing positive parts (trailing zeros stripped).
struct partition {
    std::vector<int> parts;

    partition() = default;
    // Throws parameter_error if the parts are not weakly decreasing and
    // nonnegative. Zero parts are dropped.
    explicit partition(std::vector<int> p);

    int size() const;
    bool fits(const grassmannian &g) const;
    partition conjugate() const;
    static partition full_box(const grassmannian &g);

    friend auto operator<=>(const partition &, const partition &) = default;
};

std::ostream &operator<<(std::ostream &, const partition &);

// Integer combination of Schubert classes of one Grassmannian. Zero
// coefficients and out-of-box partitions are never stored.
class schur_class
{
public:
    explicit schur_class(grassmannian g) : m_g(g) {}

    static schur_class unit(grassmannian g);
    static schur_class basis(grassmannian g, partition p);

    const grassmannian &ring() const
    {
        return m_g;
    }
    const std::map<partition, integer> &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }
    integer coefficient(const partition &p) const;

    // Adds c * sigma_p; drops p silently if it does not fit the box.
    void add(const partition &p, const integer &c);

    schur_class &operator+=(const schur_class &other);
    schur_class &operator-=(const schur_class &other);
    schur_class &operator*=(const integer &c);

    friend schur_class operator+(schur_class a, const schur_class &b)
    {
        return a += b;
    }
    friend schur_class operator-(schur_class a, const schur_class &b)
    {
        return a -= b;
    }
    friend schur_class operator*(schur_class a, const integer &c)
    {
        return a *= c;
    }
    friend bool operator==(const schur_class &, const schur_class &) = default;

private:
    grassmannian m_g;
    std::map<partition, integer> m_terms;
};

std::ostream &operator<<(std::ostream &, const schur_class &);

// Product with the one-row class sigma_(i) = c_i(Q): adds horizontal strips.
schur_class pieri_row(const schur_class &x, int i);
// Product with the one-column class sigma_(1^i) = c_i(U^*): adds vertical strips.
schur_class pieri_column(const schur_class &x, int i);

// General product. Each sigma_p of the right factor is expanded by the
// Jacobi-Trudi determinant in one-row classes and applied via pieri_row.
schur_class multiply(const schur_class &x, const schur_class &y);

// Polynomial in formal generators e_1..e_d with integer coefficients.
// Exponent vectors have length d.
class e_polynomial
{
public:
    using exponents = std::vector<int>;

    explicit e_polynomial(int d) : m_d(d) {}

    int generators() const
    {
        return m_d;
    }
    const std::map<exponents, integer> &terms() const
    {
        return m_terms;
    }
    bool is_zero() const
    {
        return m_terms.empty();
    }
    void add(const exponents &e, const integer &c);

    // Substitutes numeric values for e_1..e_d (values[0] is e_1).
    integer evaluate(const std::vector<integer> &values) const;

    friend bool operator==(const e_polynomial &, const e_polynomial &) = default;

private:
    int m_d;
    std::map<exponents, integer> m_terms;
};

// P_0..P_up_to with P_j(e(y)) = e_j({y_a + y_b : a <= b}) for formal roots
// y_1..y_d. Expanded in the roots, then rewritten into the e-basis by
// greedy lex-leading-term elimination.
std::vector<e_polynomial> universal_chern_sym_square(int d, std::size_t up_to);

// Substitutes e_i -> generator(i) and multiplies via the matching Pieri rule.
enum class special_class { row, column };
schur_class evaluate_in_ring(const e_polynomial &p, grassmannian g, special_class gens);

// c_0..c_k of S^2 Q and c_0..c_l of S^2 U^* on G(r, n).
std::vector<schur_class> chern_S2Q(const problem_triple &t);
std::vector<schur_class> chern_S2Udual(const problem_triple &t);

// s_0..s_up_to with s_i = sum_{j=1..i} (-1)^(j-1) c_j s_{i-j}.
std::vector<schur_class> segre_in_ring(const std::vector<schur_class> &chern, std::size_t up_to);

// Coefficient of the full-box class.
integer integrate(const schur_class &x);

// Integral of s_k(S^2 Q) s_l(S^2 U^*) over G(r, n).
integer delta_via_schubert(const problem_triple &t);

} // namespace sdpdeg::schubert

#endif // SDPDEG_SCHUBERT_HPP
