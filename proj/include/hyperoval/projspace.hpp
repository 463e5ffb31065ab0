#ifndef HYPEROVAL_PROJSPACE_HPP
#define HYPEROVAL_PROJSPACE_HPP

// Points and subspaces of PG(N-1, q) over a characteristic-two field.
//
// Vectors are fixed-size arrays of raw field elements. A point is a vector
// normalized so that its first nonzero coordinate is 1; subspaces are kept as
// bases in reduced row-echelon form, which makes equal subspaces compare equal.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "gf2h.hpp"

namespace hyperoval {

template <std::size_t N>
using Vec = std::array<elem, N>;

template <std::size_t N>
bool is_zero(const Vec<N>& v)
{
    return std::all_of(v.begin(), v.end(), [](elem e) { return e == 0; });
}

template <std::size_t N>
Vec<N> operator+(const Vec<N>& a, const Vec<N>& b)
{
    Vec<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] ^ b[i];
    return r;
}

template <std::size_t N>
Vec<N> scale(const Field& f, elem c, const Vec<N>& v)
{
    Vec<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = f.mul(c, v[i]);
    return r;
}

/// a + c*b
template <std::size_t N>
Vec<N> axpy(const Field& f, const Vec<N>& a, elem c, const Vec<N>& b)
{
    Vec<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] ^ f.mul(c, b[i]);
    return r;
}

template <std::size_t N>
elem dot(const Field& f, const Vec<N>& a, const Vec<N>& b)
{
    elem s = 0;
    for (std::size_t i = 0; i < N; ++i) s ^= f.mul(a[i], b[i]);
    return s;
}

template <std::size_t N>
Vec<N> unit_vector(std::size_t i)
{
    Vec<N> v{};
    v[i] = 1;
    return v;
}

/// Scales v so that its first nonzero coordinate is 1.
template <std::size_t N>
Vec<N> normalize(const Field& f, const Vec<N>& v)
{
    for (std::size_t i = 0; i < N; ++i)
        if (v[i] != 0) return v[i] == 1 ? v : scale(f, f.inv(v[i]), v);
    throw std::domain_error("normalize: zero vector is not a projective point");
}

/// Applies x -> x^(2^k) coordinatewise.
template <std::size_t N>
Vec<N> frobenius(const Field& f, const Vec<N>& v, int k)
{
    Vec<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = f.frobenius(v[i], k);
    return r;
}

/// Row-reduces rows in place to reduced echelon form; returns the rank.
/// Zero rows are dropped.
template <std::size_t N>
std::size_t rref(const Field& f, std::vector<Vec<N>>& rows, std::vector<std::size_t>* pivots = nullptr)
{
    std::size_t r = 0;
    if (pivots) pivots->clear();
    for (std::size_t col = 0; col < N && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        rows[r] = scale(f, f.inv(rows[r][col]), rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][col] != 0) rows[i] = axpy(f, rows[i], rows[i][col], rows[r]);
        if (pivots) pivots->push_back(col);
        ++r;
    }
    rows.resize(r);
    return r;
}

/// Basis of {x : <row_i, x> = 0 for all i}.
template <std::size_t N>
std::vector<Vec<N>> null_space(const Field& f, std::vector<Vec<N>> rows)
{
    std::vector<std::size_t> piv;
    rref(f, rows, &piv);
    std::vector<bool> is_piv(N, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<Vec<N>> out;
    for (std::size_t free = 0; free < N; ++free) {
        if (is_piv[free]) continue;
        Vec<N> v{};
        v[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = rows[i][free];  // char 2: -a = a
        out.push_back(v);
    }
    return out;
}

/// Projective subspace of PG(N-1, q), stored as a reduced echelon basis.
template <std::size_t N>
class Subspace {
public:
    Subspace() = default;

    Subspace(const Field& f, std::vector<Vec<N>> generators) : rows_(std::move(generators))
    {
        rref(f, rows_, &pivots_);
    }

    static Subspace empty() { return Subspace(); }

    static Subspace whole(const Field& f)
    {
        std::vector<Vec<N>> rows;
        for (std::size_t i = 0; i < N; ++i) rows.push_back(unit_vector<N>(i));
        return Subspace(f, rows);
    }

    const std::vector<Vec<N>>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    std::size_t rank() const { return rows_.size(); }
    int projdim() const { return static_cast<int>(rows_.size()) - 1; }
    bool is_empty() const { return rows_.empty(); }

    /// Membership by reduction against the echelon basis.
    bool contains(const Field& f, const Vec<N>& v) const
    {
        Vec<N> r = v;
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (r[pivots_[i]] != 0) r = axpy(f, r, r[pivots_[i]], rows_[i]);
        return is_zero(r);
    }

    bool contains(const Field& f, const Subspace& other) const
    {
        return std::all_of(other.rows_.begin(), other.rows_.end(),
                           [&](const Vec<N>& v) { return contains(f, v); });
    }

    /// Coordinates of v (which must lie in the subspace) relative to the basis.
    std::vector<elem> coordinates(const Vec<N>& v) const
    {
        std::vector<elem> c(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
        return c;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.rows_ == b.rows_; }
    friend bool operator<(const Subspace& a, const Subspace& b) { return a.rows_ < b.rows_; }

private:
    std::vector<Vec<N>> rows_;
    std::vector<std::size_t> pivots_;
};

/// PG(N-1, q) over a fixed field: subspace lattice operations and the
/// deterministic lexicographic point order used for indexing.
template <std::size_t N>
class ProjectiveSpace {
public:
    using Point = Vec<N>;
    using Sub = Subspace<N>;

    explicit ProjectiveSpace(const Field& f) : f_(&f)
    {
        block_offset_.fill(0);
        // Points with leading coordinate at position i come after all points
        // whose leading coordinate is further right.
        std::uint64_t off = 0;
        for (std::size_t i = N; i-- > 0;) {
            block_offset_[i] = off;
            off += ipow(f.q(), N - 1 - i);
        }
        num_points_ = off;
    }

    const Field& field() const { return *f_; }
    std::uint64_t num_points() const { return num_points_; }

    /// Number of points of a subspace of the given projective dimension.
    std::uint64_t points_in_dim(int d) const
    {
        if (d < 0) return 0;
        return (ipow(f_->q(), static_cast<std::size_t>(d) + 1) - 1) / (f_->q() - 1);
    }

    /// Position of the (normalized) point in the lexicographic order.
    std::uint64_t rank(const Point& p) const
    {
        std::size_t lead = 0;
        while (lead < N && p[lead] == 0) ++lead;
        if (lead == N) throw std::domain_error("rank: zero vector");
        std::uint64_t tail = 0;
        for (std::size_t i = lead + 1; i < N; ++i) tail = tail * f_->q() + p[i];
        return block_offset_[lead] + tail;
    }

    Point unrank(std::uint64_t r) const
    {
        for (std::size_t lead = N; lead-- > 0;) {
            std::uint64_t size = ipow(f_->q(), N - 1 - lead);
            if (r >= block_offset_[lead] && r < block_offset_[lead] + size) {
                Point p{};
                p[lead] = 1;
                std::uint64_t tail = r - block_offset_[lead];
                for (std::size_t i = N; i-- > lead + 1;) {
                    p[i] = static_cast<elem>(tail % f_->q());
                    tail /= f_->q();
                }
                return p;
            }
        }
        throw std::out_of_range("unrank: index out of range");
    }

    Point normalize(const Point& v) const { return hyperoval::normalize(*f_, v); }

    Sub point(const Point& p) const { return Sub(*f_, {p}); }

    Sub span(const std::vector<Point>& pts) const { return Sub(*f_, pts); }

    Sub span(const Sub& a, const Sub& b) const
    {
        auto rows = a.basis();
        rows.insert(rows.end(), b.basis().begin(), b.basis().end());
        return Sub(*f_, rows);
    }

    Sub span(const Sub& a, const Point& p) const
    {
        auto rows = a.basis();
        rows.push_back(p);
        return Sub(*f_, rows);
    }

    /// Annihilator under the standard dot product.
    Sub annihilator(const Sub& u) const { return Sub(*f_, null_space(*f_, u.basis())); }

    Sub meet(const Sub& a, const Sub& b) const
    {
        auto ra = null_space(*f_, a.basis());
        auto rb = null_space(*f_, b.basis());
        ra.insert(ra.end(), rb.begin(), rb.end());
        return Sub(*f_, null_space(*f_, ra));
    }

    /// Hyperplane {x : sum coeffs_i x_i = 0}.
    Sub hyperplane_from_linear_form(const Point& coeffs) const
    {
        if (is_zero(coeffs)) throw std::domain_error("hyperplane_from_linear_form: zero form");
        return Sub(*f_, null_space<N>(*f_, {coeffs}));
    }

    /// Calls fn(point) for each point of u in lexicographic order.
    void for_each_point(const Sub& u, const std::function<void(const Point&)>& fn) const
    {
        for (const auto& p : enumerate_points(u)) fn(p);
    }

    /// All points of u, normalized, sorted lexicographically.
    std::vector<Point> enumerate_points(const Sub& u) const
    {
        if (u.is_empty()) throw std::domain_error("enumerate_points: empty subspace");
        std::vector<Point> out;
        out.reserve(points_in_dim(u.projdim()));
        const auto& rows = u.basis();
        std::size_t k = rows.size();
        std::vector<elem> c(k, 0);
        // Coefficient vectors with first nonzero entry 1; the combination is
        // then already normalized because the basis is in echelon form.
        for (std::size_t lead = 0; lead < k; ++lead) {
            std::fill(c.begin(), c.end(), 0);
            c[lead] = 1;
            std::uint64_t count = ipow(f_->q(), k - 1 - lead);
            for (std::uint64_t t = 0; t < count; ++t) {
                std::uint64_t tt = t;
                for (std::size_t i = k; i-- > lead + 1;) {
                    c[i] = static_cast<elem>(tt % f_->q());
                    tt /= f_->q();
                }
                Point p{};
                for (std::size_t i = lead; i < k; ++i)
                    if (c[i]) p = axpy(*f_, p, c[i], rows[i]);
                out.push_back(p);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// First point of u (in echelon coefficient order, not lexicographic)
    /// satisfying pred; stops at the first hit.
    template <class Pred>
    std::optional<Point> find_point(const Sub& u, Pred pred) const
    {
        const auto& rows = u.basis();
        std::size_t k = rows.size();
        for (std::size_t lead = 0; lead < k; ++lead) {
            std::uint64_t count = ipow(f_->q(), k - 1 - lead);
            for (std::uint64_t t = 0; t < count; ++t) {
                Point p = rows[lead];
                std::uint64_t tt = t;
                for (std::size_t i = k; i-- > lead + 1;) {
                    elem c = static_cast<elem>(tt % f_->q());
                    tt /= f_->q();
                    if (c) p = axpy(*f_, p, c, rows[i]);
                }
                if (pred(p)) return p;
            }
        }
        return std::nullopt;
    }

    /// The unique point of <l, p> meet target.
    Point project_from(const Sub& l, const Point& p, const Sub& target) const
    {
        if (l.contains(*f_, p)) throw std::domain_error("project_from: point lies in the centre");
        if (!meet(l, target).is_empty()) throw std::domain_error("project_from: centre meets target");
        if (span(l, target).rank() != N) throw std::domain_error("project_from: centre and target do not span");
        Sub m = meet(span(l, p), target);
        if (m.rank() != 1) throw std::logic_error("project_from: projection is not a point");
        return m.basis()[0];
    }

    /// Calls fn for every subspace of projective dimension dim with lower <= X <= upper.
    void for_each_subspace_between(const Sub& lower, const Sub& upper, int dim,
                                   const std::function<void(const Sub&)>& fn) const
    {
        int k = dim - lower.projdim();
        if (k < 0 || dim > upper.projdim()) return;
        std::vector<Point> complement;
        std::vector<Point> acc = lower.basis();
        for (const auto& s : upper.basis()) {
            Sub cur(*f_, acc);
            if (cur.contains(*f_, s)) continue;
            complement.push_back(s);
            acc.push_back(s);
        }
        for_each_rref(static_cast<std::size_t>(k), complement.size(), [&](const std::vector<std::vector<elem>>& m) {
            auto rows = lower.basis();
            for (const auto& row : m) {
                Point v{};
                for (std::size_t j = 0; j < row.size(); ++j)
                    if (row[j]) v = axpy(*f_, v, row[j], complement[j]);
                rows.push_back(v);
            }
            fn(Sub(*f_, rows));
        });
    }

    /// Calls fn for every subspace of projective dimension dim containing u.
    void for_each_subspace_through(const Sub& u, int dim, const std::function<void(const Sub&)>& fn) const
    {
        for_each_subspace_between(u, Sub::whole(*f_), dim, fn);
    }

    /// Calls fn for every subspace of the given projective dimension.
    void for_each_subspace(int dim, const std::function<void(const Sub&)>& fn) const
    {
        for_each_subspace_through(Sub::empty(), dim, fn);
    }

    /// Uniformly random subspace of the given projective dimension.
    template <class Rng>
    Sub random_subspace(int dim, Rng& rng) const
    {
        std::uniform_int_distribution<unsigned> d(0, f_->q() - 1);
        for (;;) {
            std::vector<Point> rows(static_cast<std::size_t>(dim + 1));
            for (auto& r : rows)
                for (auto& e : r) e = static_cast<elem>(d(rng));
            Sub s(*f_, rows);
            if (s.projdim() == dim) return s;
        }
    }

private:
    static std::uint64_t ipow(std::uint64_t b, std::size_t e)
    {
        std::uint64_t r = 1;
        while (e--) r *= b;
        return r;
    }

    // Enumerates all k x m matrices over the field in reduced row-echelon form
    // of full rank k.
    void for_each_rref(std::size_t k, std::size_t m,
                       const std::function<void(const std::vector<std::vector<elem>>&)>& fn) const
    {
        std::vector<std::size_t> piv(k);
        std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t i, std::size_t start) {
            if (i == k) {
                fill_free(piv, m, fn);
                return;
            }
            for (std::size_t c = start; c + (k - i) <= m; ++c) {
                piv[i] = c;
                choose(i + 1, c + 1);
            }
        };
        choose(0, 0);
    }

    void fill_free(const std::vector<std::size_t>& piv, std::size_t m,
                   const std::function<void(const std::vector<std::vector<elem>>&)>& fn) const
    {
        std::size_t k = piv.size();
        std::vector<std::vector<elem>> mat(k, std::vector<elem>(m, 0));
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t i = 0; i < k; ++i) {
            mat[i][piv[i]] = 1;
            for (std::size_t c = piv[i] + 1; c < m; ++c)
                if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(i, c);
        }
        std::vector<unsigned> digit(free.size(), 0);
        for (;;) {
            for (std::size_t t = 0; t < free.size(); ++t)
                mat[free[t].first][free[t].second] = static_cast<elem>(digit[t]);
            fn(mat);
            std::size_t t = 0;
            while (t < digit.size() && ++digit[t] == f_->q()) digit[t++] = 0;
            if (t == digit.size()) break;
        }
    }

    const Field* f_;
    std::array<std::uint64_t, N> block_offset_{};
    std::uint64_t num_points_ = 0;
};

}  // namespace hyperoval

#endif  // HYPEROVAL_PROJSPACE_HPP
