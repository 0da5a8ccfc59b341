#include <sdpdeg/schubert.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>

#include <sdpdeg/errors.hpp>

namespace sdpdeg::schubert
{

namespace
{

// Enumerates mu containing lambda with mu / lambda a horizontal strip of
// size `remaining` inside a rows x cols box. lambda and mu are padded to
// `rows` entries.
void horizontal_strips(const std::vector<int> &lambda, int cols, int remaining, std::size_t row, std::vector<int> &mu,
                       const std::function<void(const std::vector<int> &)> &emit)
{
    if (remaining == 0) {
        emit(mu);
        return;
    }
    if (row >= lambda.size()) {
        return;
    }
    const int base = lambda[row];
    const int cap = row == 0 ? cols : lambda[row - 1];
    for (int add = std::min(remaining, cap - base); add >= 0; --add) {
        mu[row] = base + add;
        horizontal_strips(lambda, cols, remaining - add, row + 1, mu, emit);
    }
    mu[row] = base;
}

schur_class pieri_impl(const schur_class &x, int i, bool transpose)
{
    const grassmannian g = x.ring();
    schur_class out(g);
    if (i < 0) {
        return out;
    }
    const int rows = transpose ? g.cols : g.rows;
    const int cols = transpose ? g.rows : g.cols;
    for (const auto &[p, c] : x.terms()) {
        std::vector<int> lambda = transpose ? p.conjugate().parts : p.parts;
        if (static_cast<int>(lambda.size()) > rows) {
            continue;
        }
        lambda.resize(static_cast<std::size_t>(rows), 0);
        std::vector<int> mu = lambda;
        horizontal_strips(lambda, cols, i, 0, mu, [&](const std::vector<int> &m) {
            partition q{m};
            out.add(transpose ? q.conjugate() : q, c);
        });
    }
    return out;
}

// Multivariate polynomial in formal roots y_1..y_d.
using monomial = std::vector<int>;
using root_poly = std::map<monomial, integer>;

void accumulate(root_poly &into, const monomial &e, const integer &c)
{
    if (c == 0) {
        return;
    }
    auto [it, inserted] = into.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            into.erase(it);
        }
    }
}

root_poly multiply_roots(const root_poly &a, const root_poly &b)
{
    root_poly out;
    for (const auto &[ea, ca] : a) {
        for (const auto &[eb, cb] : b) {
            monomial e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            accumulate(out, e, ca * cb);
        }
    }
    return out;
}

// e_i(y_1..y_d) as a root polynomial.
root_poly elementary_in_roots(int d, int i)
{
    root_poly out;
    std::vector<int> pick(static_cast<std::size_t>(d), 0);
    std::fill(pick.end() - i, pick.end(), 1);
    do {
        accumulate(out, pick, 1);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

class e_basis_rewriter
{
public:
    explicit e_basis_rewriter(int d) : m_d(d)
    {
        for (int i = 1; i <= d; ++i) {
            m_elementary.push_back(elementary_in_roots(d, i));
        }
    }

    e_polynomial rewrite(root_poly p)
    {
        e_polynomial out(m_d);
        while (!p.empty()) {
            // Lex-largest monomial; for a symmetric p its exponents decrease.
            const auto [alpha, c] = *p.rbegin();
            e_polynomial::exponents e(static_cast<std::size_t>(m_d));
            for (int i = 0; i < m_d; ++i) {
                const int next = i + 1 < m_d ? alpha[static_cast<std::size_t>(i) + 1] : 0;
                e[static_cast<std::size_t>(i)] = alpha[static_cast<std::size_t>(i)] - next;
                if (e[static_cast<std::size_t>(i)] < 0) {
                    throw inconsistency_error("e-basis rewrite: input is not symmetric");
                }
            }
            out.add(e, c);
            const integer coeff = c;
            for (const auto &[mono, v] : expand(e)) {
                accumulate(p, mono, -coeff * v);
            }
        }
        return out;
    }

private:
    const root_poly &expand(const e_polynomial::exponents &e)
    {
        if (auto it = m_cache.find(e); it != m_cache.end()) {
            return it->second;
        }
        root_poly acc;
        acc.emplace(monomial(static_cast<std::size_t>(m_d), 0), 1);
        for (int i = 0; i < m_d; ++i) {
            for (int rep = 0; rep < e[static_cast<std::size_t>(i)]; ++rep) {
                acc = multiply_roots(acc, m_elementary[static_cast<std::size_t>(i)]);
            }
        }
        return m_cache.emplace(e, std::move(acc)).first->second;
    }

    int m_d;
    std::vector<root_poly> m_elementary;
    std::map<e_polynomial::exponents, root_poly> m_cache;
};

} // namespace

partition::partition(std::vector<int> p)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || (i > 0 && p[i] > p[i - 1])) {
            throw parameter_error("partition parts must be nonnegative and weakly decreasing");
        }
    }
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
    parts = std::move(p);
}

int partition::size() const
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

bool partition::fits(const grassmannian &g) const
{
    return static_cast<int>(parts.size()) <= g.rows && (parts.empty() || parts.front() <= g.cols);
}

partition partition::conjugate() const
{
    std::vector<int> c(parts.empty() ? 0 : static_cast<std::size_t>(parts.front()), 0);
    for (int p : parts) {
        for (int j = 0; j < p; ++j) {
            ++c[static_cast<std::size_t>(j)];
        }
    }
    return partition(std::move(c));
}

partition partition::full_box(const grassmannian &g)
{
    return partition(std::vector<int>(static_cast<std::size_t>(g.rows), g.cols));
}

std::ostream &operator<<(std::ostream &os, const partition &p)
{
    os << '(';
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        os << (i ? "," : "") << p.parts[i];
    }
    return os << ')';
}

schur_class schur_class::unit(grassmannian g)
{
    return basis(g, partition{});
}

schur_class schur_class::basis(grassmannian g, partition p)
{
    schur_class s(g);
    s.add(p, 1);
    return s;
}

integer schur_class::coefficient(const partition &p) const
{
    const auto it = m_terms.find(p);
    return it == m_terms.end() ? integer(0) : it->second;
}

void schur_class::add(const partition &p, const integer &c)
{
    if (c == 0 || !p.fits(m_g)) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

schur_class &schur_class::operator+=(const schur_class &other)
{
    if (!(other.m_g == m_g)) {
        throw parameter_error("adding classes from different Grassmannians");
    }
    for (const auto &[p, c] : other.m_terms) {
        add(p, c);
    }
    return *this;
}

schur_class &schur_class::operator-=(const schur_class &other)
{
    if (!(other.m_g == m_g)) {
        throw parameter_error("subtracting classes from different Grassmannians");
    }
    for (const auto &[p, c] : other.m_terms) {
        add(p, -c);
    }
    return *this;
}

schur_class &schur_class::operator*=(const integer &c)
{
    if (c == 0) {
        m_terms.clear();
        return *this;
    }
    for (auto &[p, v] : m_terms) {
        v *= c;
    }
    return *this;
}

std::ostream &operator<<(std::ostream &os, const schur_class &x)
{
    if (x.is_zero()) {
        return os << '0';
    }
    bool first = true;
    for (const auto &[p, c] : x.terms()) {
        os << (first ? "" : " + ") << c.get_str() << "*s" << p;
        first = false;
    }
    return os;
}

schur_class pieri_row(const schur_class &x, int i)
{
    return pieri_impl(x, i, false);
}

schur_class pieri_column(const schur_class &x, int i)
{
    return pieri_impl(x, i, true);
}

schur_class multiply(const schur_class &x, const schur_class &y)
{
    if (!(x.ring() == y.ring())) {
        throw parameter_error("multiplying classes from different Grassmannians");
    }
    const grassmannian g = x.ring();
    schur_class out(g);
    for (const auto &[p, c] : y.terms()) {
        // Jacobi-Trudi in rows (h_j = sigma_(j)) or, for tall partitions, the
        // dual form in columns (e_j = sigma_(1^j)) on the conjugate.
        const bool use_columns = !p.parts.empty() && p.parts.front() < static_cast<int>(p.parts.size());
        const std::vector<int> lambda = use_columns ? p.conjugate().parts : p.parts;
        const int len = static_cast<int>(lambda.size());
        const int bound = use_columns ? g.rows : g.cols;
        std::vector<int> perm(static_cast<std::size_t>(len));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> degrees;
            bool vanishes = false;
            for (int a = 0; a < len; ++a) {
                const int j = lambda[static_cast<std::size_t>(a)] - a + perm[static_cast<std::size_t>(a)];
                if (j < 0 || j > bound) {
                    vanishes = true;
                    break;
                }
                degrees.push_back(j);
            }
            if (vanishes) {
                continue;
            }
            int inversions = 0;
            for (int a = 0; a < len; ++a) {
                for (int b = a + 1; b < len; ++b) {
                    inversions += perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)];
                }
            }
            schur_class term = x;
            for (int j : degrees) {
                term = use_columns ? pieri_column(term, j) : pieri_row(term, j);
                if (term.is_zero()) {
                    break;
                }
            }
            term *= (inversions % 2 == 0) ? c : integer(-c);
            out += term;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

void e_polynomial::add(const exponents &e, const integer &c)
{
    if (static_cast<int>(e.size()) != m_d) {
        throw parameter_error("e_polynomial: exponent vector has wrong length");
    }
    if (c == 0) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            m_terms.erase(it);
        }
    }
}

integer e_polynomial::evaluate(const std::vector<integer> &values) const
{
    if (static_cast<int>(values.size()) != m_d) {
        throw parameter_error("e_polynomial::evaluate: expected " + std::to_string(m_d) + " values");
    }
    integer total = 0;
    for (const auto &[e, c] : m_terms) {
        integer term = c;
        for (int i = 0; i < m_d; ++i) {
            integer pw;
            mpz_pow_ui(pw.get_mpz_t(), values[static_cast<std::size_t>(i)].get_mpz_t(),
                       static_cast<unsigned long>(e[static_cast<std::size_t>(i)]));
            term *= pw;
        }
        total += term;
    }
    return total;
}

std::vector<e_polynomial> universal_chern_sym_square(int d, std::size_t up_to)
{
    if (d < 1) {
        throw parameter_error("universal_chern_sym_square: d must be positive");
    }
    const auto ud = static_cast<std::size_t>(d);
    // coeffs[j] = e_j of the weights {y_a + y_b : a <= b}, in the roots.
    std::vector<root_poly> coeffs(up_to + 1);
    coeffs[0].emplace(monomial(ud, 0), 1);
    std::size_t filled = 0;
    for (std::size_t a = 0; a < ud; ++a) {
        for (std::size_t b = a; b < ud; ++b) {
            root_poly weight;
            monomial ya(ud, 0);
            ++ya[a];
            if (a == b) {
                accumulate(weight, ya, 2);
            } else {
                monomial yb(ud, 0);
                ++yb[b];
                accumulate(weight, ya, 1);
                accumulate(weight, yb, 1);
            }
            filled = std::min(filled + 1, up_to);
            for (std::size_t j = filled; j >= 1; --j) {
                for (const auto &[e, c] : multiply_roots(weight, coeffs[j - 1])) {
                    accumulate(coeffs[j], e, c);
                }
            }
        }
    }
    e_basis_rewriter rewriter(d);
    std::vector<e_polynomial> out;
    out.reserve(up_to + 1);
    for (auto &p : coeffs) {
        out.push_back(rewriter.rewrite(std::move(p)));
    }
    return out;
}

schur_class evaluate_in_ring(const e_polynomial &p, grassmannian g, special_class gens)
{
    schur_class out(g);
    for (const auto &[e, c] : p.terms()) {
        schur_class term = schur_class::unit(g);
        for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
            for (int rep = 0; rep < e[i]; ++rep) {
                const int deg = static_cast<int>(i) + 1;
                term = gens == special_class::row ? pieri_row(term, deg) : pieri_column(term, deg);
            }
        }
        out += term * c;
    }
    return out;
}

namespace
{

std::vector<schur_class> chern_sym_square(grassmannian g, int rank, std::size_t up_to, special_class gens)
{
    std::vector<schur_class> out;
    out.reserve(up_to + 1);
    if (rank == 0) {
        out.push_back(schur_class::unit(g));
        for (std::size_t j = 1; j <= up_to; ++j) {
            out.emplace_back(g);
        }
        return out;
    }
    for (const auto &p : universal_chern_sym_square(rank, up_to)) {
        out.push_back(evaluate_in_ring(p, g, gens));
    }
    return out;
}

} // namespace

std::vector<schur_class> chern_S2Q(const problem_triple &t)
{
    return chern_sym_square(grassmannian::of(t.r, t.n), t.n - t.r, static_cast<std::size_t>(t.k), special_class::row);
}

std::vector<schur_class> chern_S2Udual(const problem_triple &t)
{
    return chern_sym_square(grassmannian::of(t.r, t.n), t.r, static_cast<std::size_t>(t.l), special_class::column);
}

std::vector<schur_class> segre_in_ring(const std::vector<schur_class> &chern, std::size_t up_to)
{
    if (chern.empty()) {
        throw parameter_error("segre_in_ring: empty Chern sequence");
    }
    const grassmannian g = chern.front().ring();
    if (!(chern.front() == schur_class::unit(g))) {
        throw parameter_error("segre_in_ring: c_0 must be the unit class");
    }
    std::vector<schur_class> s;
    s.reserve(up_to + 1);
    s.push_back(schur_class::unit(g));
    for (std::size_t i = 1; i <= up_to; ++i) {
        schur_class acc(g);
        for (std::size_t j = 1; j <= i && j < chern.size(); ++j) {
            if (chern[j].is_zero() || s[i - j].is_zero()) {
                continue;
            }
            const schur_class prod = multiply(s[i - j], chern[j]);
            if (j % 2 == 1) {
                acc += prod;
            } else {
                acc -= prod;
            }
        }
        s.push_back(std::move(acc));
    }
    return s;
}

integer integrate(const schur_class &x)
{
    return x.coefficient(partition::full_box(x.ring()));
}

integer delta_via_schubert(const problem_triple &t)
{
    const auto k = static_cast<std::size_t>(t.k);
    const auto l = static_cast<std::size_t>(t.l);
    const auto sq = segre_in_ring(chern_S2Q(t), k);
    const auto su = segre_in_ring(chern_S2Udual(t), l);
    return integrate(multiply(sq[k], su[l]));
}

} // namespace sdpdeg::schubert
