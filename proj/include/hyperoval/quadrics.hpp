#ifndef HYPEROVAL_QUADRICS_HPP
#define HYPEROVAL_QUADRICS_HPP

// Quadratic forms in characteristic two, plane sections and conic nuclei,
// and the fully enumerated Klein quadric Q+(5,q) with its lines and planes.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gf2h.hpp"
#include "projspace.hpp"

namespace hyperoval {

/// Quadratic form sum_{i<=j} a_ij x_i x_j.
template <std::size_t N>
class QuadraticForm {
public:
    using Coeffs = std::array<std::array<elem, N>, N>;

    QuadraticForm() = default;

    /// Only the upper triangle (i <= j) of coeffs is used.
    explicit QuadraticForm(const Coeffs& coeffs) : a_{}
    {
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i; j < N; ++j) a_[i][j] = coeffs[i][j];
    }

    elem coeff(std::size_t i, std::size_t j) const { return i <= j ? a_[i][j] : a_[j][i]; }
    void set_coeff(std::size_t i, std::size_t j, elem v) { (i <= j ? a_[i][j] : a_[j][i]) = v; }

    elem evaluate(const Field& f, const Vec<N>& v) const
    {
        elem s = 0;
        for (std::size_t i = 0; i < N; ++i) {
            if (v[i] == 0) continue;
            elem row = 0;
            for (std::size_t j = i; j < N; ++j)
                if (a_[i][j]) row ^= f.mul(a_[i][j], v[j]);
            s ^= f.mul(v[i], row);
        }
        return s;
    }

    /// B(u,v) = Q(u+v) + Q(u) + Q(v).
    elem bilinear(const Field& f, const Vec<N>& u, const Vec<N>& v) const
    {
        elem s = 0;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = i + 1; j < N; ++j)
                if (a_[i][j]) s ^= f.mul(a_[i][j], f.mul(u[i], v[j]) ^ f.mul(u[j], v[i]));
        return s;
    }

    /// Linear form v -> B(x, v) as a coefficient vector.
    Vec<N> polar_form(const Field& f, const Vec<N>& x) const
    {
        Vec<N> r{};
        for (std::size_t j = 0; j < N; ++j) r[j] = bilinear(f, x, unit_vector<N>(j));
        return r;
    }

    /// Alternating Gram matrix of B.
    std::array<Vec<N>, N> gram(const Field& f) const
    {
        std::array<Vec<N>, N> g{};
        for (std::size_t i = 0; i < N; ++i) g[i] = polar_form(f, unit_vector<N>(i));
        return g;
    }

    /// Rank of B.
    std::size_t polar_rank(const Field& f) const
    {
        auto g = gram(f);
        std::vector<Vec<N>> rows(g.begin(), g.end());
        return rref(f, rows);
    }

    /// Q restricted to span(basis), in basis coordinates.
    template <std::size_t K>
    QuadraticForm<K> restrict_to(const Field& f, const std::array<Vec<N>, K>& basis) const
    {
        QuadraticForm<K> r;
        for (std::size_t i = 0; i < K; ++i) {
            r.set_coeff(i, i, evaluate(f, basis[i]));
            for (std::size_t j = i + 1; j < K; ++j) r.set_coeff(i, j, bilinear(f, basis[i], basis[j]));
        }
        return r;
    }

    /// Q + l^2 for a linear form l.
    QuadraticForm plus_square(const Field& f, const Vec<N>& l) const
    {
        QuadraticForm r = *this;
        for (std::size_t i = 0; i < N; ++i) r.a_[i][i] ^= f.square(l[i]);
        return r;
    }

    /// The Klein form X1X2 + X3X4 + X5X6 (only meaningful for N = 6).
    static QuadraticForm klein()
    {
        static_assert(N == 6, "the Klein form lives on a 6-dimensional space");
        QuadraticForm r;
        r.a_[0][1] = r.a_[2][3] = r.a_[4][5] = 1;
        return r;
    }

    friend bool operator==(const QuadraticForm& x, const QuadraticForm& y) { return x.a_ == y.a_; }

private:
    Coeffs a_{};
};

/// The projective plane PG(2,q) in lexicographic point order, with its lines
/// as lists of local point indices. Every plane of a larger space is
/// identified with this model through its echelon basis.
class PlaneGeometry {
public:
    explicit PlaneGeometry(const Field& f) : pg_(f)
    {
        auto all = pg_.enumerate_points(Subspace<3>::whole(f));
        points_ = all;
        std::size_t n = points_.size();
        line_points_.resize(n);
        point_lines_.resize(n);
        for (std::size_t l = 0; l < n; ++l) {
            for (std::size_t p = 0; p < n; ++p)
                if (dot(f, points_[l], points_[p]) == 0) {
                    line_points_[l].push_back(static_cast<std::uint32_t>(p));
                    point_lines_[p].push_back(static_cast<std::uint32_t>(l));
                }
        }
    }

    const Field& field() const { return pg_.field(); }
    std::size_t size() const { return points_.size(); }
    const std::vector<Vec<3>>& points() const { return points_; }
    const Vec<3>& point(std::size_t i) const { return points_[i]; }
    std::uint32_t index(const Vec<3>& v) const { return static_cast<std::uint32_t>(pg_.rank(pg_.normalize(v))); }

    /// Lines are indexed by the rank of their dual coordinate vector.
    const std::vector<std::uint32_t>& line_points(std::size_t l) const { return line_points_[l]; }
    const std::vector<std::uint32_t>& point_lines(std::size_t p) const { return point_lines_[p]; }
    const Vec<3>& line_coords(std::size_t l) const { return points_[l]; }

    std::uint32_t line_through(std::uint32_t a, std::uint32_t b) const
    {
        if (a == b) throw std::domain_error("line_through: equal points");
        const auto& u = points_[a];
        const auto& v = points_[b];
        const Field& f = field();
        Vec<3> c{static_cast<elem>(f.mul(u[1], v[2]) ^ f.mul(u[2], v[1])),
                 static_cast<elem>(f.mul(u[0], v[2]) ^ f.mul(u[2], v[0])),
                 static_cast<elem>(f.mul(u[0], v[1]) ^ f.mul(u[1], v[0]))};
        return index(c);
    }

    std::uint32_t meet(std::uint32_t l1, std::uint32_t l2) const { return line_through(l1, l2); }

    const ProjectiveSpace<3>& space() const { return pg_; }

private:
    ProjectiveSpace<3> pg_;
    std::vector<Vec<3>> points_;
    std::vector<std::vector<std::uint32_t>> line_points_;
    std::vector<std::vector<std::uint32_t>> point_lines_;
};

/// Ternary form aX^2 + bY^2 + cZ^2 + dXY + eXZ + fYZ in plane coordinates.
struct TernaryForm {
    elem a = 0, b = 0, c = 0, d = 0, e = 0, f = 0;

    elem evaluate(const Field& fld, const Vec<3>& v) const
    {
        return fld.mul(a, fld.square(v[0])) ^ fld.mul(b, fld.square(v[1])) ^ fld.mul(c, fld.square(v[2])) ^
               fld.mul(d, fld.mul(v[0], v[1])) ^ fld.mul(e, fld.mul(v[0], v[2])) ^ fld.mul(f, fld.mul(v[1], v[2]));
    }

    /// Radical of the polar form, (f : e : d); zero when the form is a square.
    Vec<3> nucleus() const { return {f, e, d}; }
};

template <std::size_t N>
TernaryForm section_form(const Field& f, const QuadraticForm<N>& q, const std::array<Vec<N>, 3>& basis)
{
    auto r = q.template restrict_to<3>(f, basis);
    return {r.coeff(0, 0), r.coeff(1, 1), r.coeff(2, 2), r.coeff(0, 1), r.coeff(0, 2), r.coeff(1, 2)};
}

enum class SectionKind { singleton, conic, full_line, line_pair, plane_in_quadric };

inline std::string to_string(SectionKind k)
{
    switch (k) {
    case SectionKind::singleton: return "singleton";
    case SectionKind::conic: return "conic";
    case SectionKind::full_line: return "full-line";
    case SectionKind::line_pair: return "line-pair";
    case SectionKind::plane_in_quadric: return "plane-in-quadric";
    }
    return "?";
}

/// Irreducible conic of a plane together with its nucleus.
template <std::size_t N>
struct Conic {
    Subspace<N> plane;
    std::vector<Vec<N>> points;
    Vec<N> nucleus{};
};

template <std::size_t N>
struct PlaneSection {
    SectionKind kind = SectionKind::singleton;
    std::vector<Vec<N>> points;
    std::optional<Conic<N>> conic;
};

template <std::size_t N>
std::array<Vec<N>, 3> plane_basis(const Subspace<N>& plane)
{
    if (plane.rank() != 3) throw std::domain_error("expected a plane");
    return {plane.basis()[0], plane.basis()[1], plane.basis()[2]};
}

template <std::size_t N>
Vec<N> combine(const Field& f, const std::array<Vec<N>, 3>& basis, const Vec<3>& c)
{
    Vec<N> r{};
    for (std::size_t i = 0; i < 3; ++i)
        if (c[i]) r = axpy(f, r, c[i], basis[i]);
    return r;
}

/// Classifies plane ∩ {q = 0}. An irreducible conic is returned with its
/// nucleus; every other section is returned as a tag plus its point list.
template <std::size_t N>
PlaneSection<N> conic_of_plane_section(const PlaneGeometry& geo, const QuadraticForm<N>& q, const Subspace<N>& plane)
{
    const Field& f = geo.field();
    auto basis = plane_basis(plane);
    TernaryForm t = section_form(f, q, basis);
    PlaneSection<N> out;
    for (const auto& c : geo.points())
        if (t.evaluate(f, c) == 0) out.points.push_back(combine(f, basis, c));
    const std::size_t qq = f.q();
    const std::size_t n = out.points.size();
    if (n == 1) {
        out.kind = SectionKind::singleton;
    } else if (n == qq * qq + qq + 1) {
        out.kind = SectionKind::plane_in_quadric;
    } else if (n == 2 * qq + 1) {
        out.kind = SectionKind::line_pair;
    } else if (n == qq + 1) {
        Vec<3> nuc = t.nucleus();
        if (!is_zero(nuc) && t.evaluate(f, nuc) != 0) {
            out.kind = SectionKind::conic;
            Conic<N> c;
            c.plane = plane;
            c.points = out.points;
            c.nucleus = normalize(f, combine(f, basis, nuc));
            out.conic = std::move(c);
        } else {
            out.kind = SectionKind::full_line;
        }
    } else {
        throw std::logic_error("conic_of_plane_section: impossible section size " + std::to_string(n));
    }
    return out;
}

/// The unique conic through the given points of PG(2,q), if the points are
/// exactly the zero set of an irreducible conic.
inline std::optional<TernaryForm> fit_conic(const PlaneGeometry& geo, const std::vector<Vec<3>>& pts)
{
    const Field& f = geo.field();
    if (pts.size() != f.q() + 1) return std::nullopt;
    std::vector<Vec<6>> rows;
    for (const auto& v : pts)
        rows.push_back({f.square(v[0]), f.square(v[1]), f.square(v[2]), f.mul(v[0], v[1]), f.mul(v[0], v[2]),
                        f.mul(v[1], v[2])});
    auto sol = null_space<6>(f, rows);
    if (sol.size() != 1) return std::nullopt;
    TernaryForm t{sol[0][0], sol[0][1], sol[0][2], sol[0][3], sol[0][4], sol[0][5]};
    Vec<3> nuc = t.nucleus();
    if (is_zero(nuc) || t.evaluate(f, nuc) == 0) return std::nullopt;
    std::size_t zeros = 0;
    for (const auto& c : geo.points()) zeros += t.evaluate(f, c) == 0;
    if (zeros != pts.size()) return std::nullopt;
    return t;
}

enum class SolidSection { elliptic, hyperbolic, cone, degenerate };

inline std::string to_string(SolidSection s)
{
    switch (s) {
    case SolidSection::elliptic: return "elliptic";
    case SolidSection::hyperbolic: return "hyperbolic";
    case SolidSection::cone: return "cone";
    case SolidSection::degenerate: return "degenerate";
    }
    return "?";
}

/// Classifies a solid section by its number of singular points.
template <std::size_t N>
SolidSection classify_solid_section(const ProjectiveSpace<N>& pg, const QuadraticForm<N>& q, const Subspace<N>& solid)
{
    if (solid.projdim() != 3) throw std::domain_error("classify_solid_section: expected a solid");
    const Field& f = pg.field();
    std::size_t n = 0;
    for (const auto& p : pg.enumerate_points(solid))
        if (q.evaluate(f, p) == 0) ++n;
    const std::size_t qq = f.q();
    if (n == qq * qq + 1) return SolidSection::elliptic;
    if (n == (qq + 1) * (qq + 1)) return SolidSection::hyperbolic;
    // A point cone over a conic has q^2+q+1 points; everything else is more degenerate.
    if (n == qq * qq + qq + 1) return SolidSection::cone;
    return SolidSection::degenerate;
}

/// Hyperplane x^zeta = {v : B(x,v) = 0} at a singular point x.
template <std::size_t N>
Subspace<N> tangent_hyperplane(const ProjectiveSpace<N>& pg, const QuadraticForm<N>& q, const Vec<N>& x)
{
    const Field& f = pg.field();
    if (q.evaluate(f, x) != 0) throw std::domain_error("tangent_hyperplane: point is not singular");
    return pg.hyperplane_from_linear_form(q.polar_form(f, x));
}

/// U^zeta = {v : B(u,v) = 0 for all u in U}.
template <std::size_t N>
Subspace<N> polar_subspace(const ProjectiveSpace<N>& pg, const QuadraticForm<N>& q, const Subspace<N>& u)
{
    const Field& f = pg.field();
    std::vector<Vec<N>> forms;
    for (const auto& b : u.basis()) forms.push_back(q.polar_form(f, b));
    return Subspace<N>(f, null_space(f, forms));
}

/// Totally isotropic lines of a solid, each as its sorted point list.
/// For an elliptic solid section these are the lines of W(q).
template <std::size_t N>
std::vector<Subspace<N>> isotropic_lines(const ProjectiveSpace<N>& pg, const QuadraticForm<N>& q,
                                         const Subspace<N>& solid)
{
    const Field& f = pg.field();
    std::vector<Subspace<N>> out;
    auto pts = pg.enumerate_points(solid);
    for (const auto& u : pts) {
        Subspace<N> pu = pg.meet(solid, pg.hyperplane_from_linear_form(q.polar_form(f, u)));
        if (pu.projdim() != 2) throw std::logic_error("isotropic_lines: polarity degenerate on solid");
        Subspace<N> upt = pg.point(u);
        pg.for_each_subspace_between(upt, pu, 1, [&](const Subspace<N>& line) {
            // keep each line once: at its lexicographically smallest point
            if (pg.enumerate_points(line).front() == u) out.push_back(line);
        });
    }
    return out;
}

/// One generator plane of the Klein quadric: its echelon basis and its
/// points listed in local PlaneGeometry order.
struct QuadricPlane {
    Subspace<6> space;
    std::vector<std::uint32_t> points;
};

/// A line of the quadric, referenced as a line of one of its two planes.
struct LineRef {
    std::uint32_t plane;
    std::uint32_t local_line;
};

/// The Klein quadric Q+(5,q) with all singular points, lines and planes.
class KleinModel {
public:
    explicit KleinModel(const Field& f)
        : f_(&f), pg_(f), form_(QuadraticForm<6>::klein()), plane_geo_(f)
    {
        build_points();
        build_planes();
        build_lines();
        check_counts();
    }

    const Field& field() const { return *f_; }
    unsigned q() const { return f_->q(); }
    const ProjectiveSpace<6>& space() const { return pg_; }
    const QuadraticForm<6>& form() const { return form_; }
    const PlaneGeometry& plane_geometry() const { return plane_geo_; }

    std::size_t num_points() const { return points_.size(); }
    const std::vector<Vec<6>>& points() const { return points_; }
    const Vec<6>& point(std::size_t i) const { return points_[i]; }

    /// Model index of a (not necessarily normalized) vector, if singular.
    std::optional<std::uint32_t> index_of(const Vec<6>& v) const
    {
        auto r = pg_.rank(pg_.normalize(v));
        std::int32_t i = rank_to_index_[r];
        if (i < 0) return std::nullopt;
        return static_cast<std::uint32_t>(i);
    }

    std::uint32_t index_or_throw(const Vec<6>& v) const
    {
        auto i = index_of(v);
        if (!i) throw std::domain_error("point is not on the quadric");
        return *i;
    }

    const std::vector<QuadricPlane>& planes() const { return planes_; }
    const std::vector<std::uint32_t>& planes_through(std::size_t point) const { return planes_through_[point]; }

    const std::vector<LineRef>& lines() const { return lines_; }

    /// Model indices of the q+1 points of a line.
    std::vector<std::uint32_t> line_points(const LineRef& l) const
    {
        std::vector<std::uint32_t> out;
        for (auto lp : plane_geo_.line_points(l.local_line)) out.push_back(planes_[l.plane].points[lp]);
        return out;
    }

    elem evaluate(const Vec<6>& v) const { return form_.evaluate(*f_, v); }
    elem bilinear(const Vec<6>& u, const Vec<6>& v) const { return form_.bilinear(*f_, u, v); }

    std::uint64_t expected_points() const
    {
        std::uint64_t qq = q();
        return (qq * qq + 1) * (qq * qq + qq + 1);
    }
    std::uint64_t expected_planes() const
    {
        std::uint64_t qq = q();
        return 2 * (qq + 1) * (qq * qq + 1);
    }
    std::uint64_t expected_lines() const
    {
        std::uint64_t qq = q();
        return (qq + 1) * (qq * qq + 1) * (qq * qq + qq + 1);
    }

private:
    void build_points()
    {
        rank_to_index_.assign(pg_.num_points(), -1);
        for (std::uint64_t r = 0; r < pg_.num_points(); ++r) {
            Vec<6> p = pg_.unrank(r);
            if (form_.evaluate(*f_, p) == 0) {
                rank_to_index_[r] = static_cast<std::int32_t>(points_.size());
                points_.push_back(p);
            }
        }
    }

    template <class Pred>
    std::optional<Vec<6>> search(const std::vector<Vec<6>>& basis, Pred pred) const
    {
        return pg_.find_point(Subspace<6>(*f_, basis), pred);
    }

    // Generators through x: complete x to a hyperbolic pair (x,y); on
    // W = <x,y>^perp (a Q+(3,q)) pick a hyperbolic frame (e,f,g,h) so that
    // Q|W = Y1Y2 + Y3Y4, whose 2(q+1) lines are written down directly.
    std::vector<Subspace<6>> planes_through_point(const Vec<6>& x) const
    {
        const Field& f = *f_;
        std::optional<Vec<6>> y;
        for (const auto& p : points_)
            if (form_.bilinear(f, x, p) != 0) {
                y = p;
                break;
            }
        if (!y) throw std::logic_error("KleinModel: no hyperbolic partner");
        std::vector<Vec<6>> w = null_space<6>(f, {form_.polar_form(f, x), form_.polar_form(f, *y)});
        auto e = search(w, [&](const Vec<6>& v) { return form_.evaluate(f, v) == 0; });
        if (!e) throw std::logic_error("KleinModel: W has no singular point");
        auto g0 = search(w, [&](const Vec<6>& v) {
            return form_.evaluate(f, v) == 0 && form_.bilinear(f, *e, v) != 0;
        });
        if (!g0) throw std::logic_error("KleinModel: W is not hyperbolic");
        Vec<6> fv = scale(f, f.inv(form_.bilinear(f, *e, *g0)), *g0);
        std::vector<Vec<6>> w2 = null_space<6>(f, {form_.polar_form(f, x), form_.polar_form(f, *y),
                                                   form_.polar_form(f, *e), form_.polar_form(f, fv)});
        auto g = search(w2, [&](const Vec<6>& v) { return form_.evaluate(f, v) == 0; });
        if (!g) throw std::logic_error("KleinModel: residual line is not hyperbolic");
        auto h0 = search(w2, [&](const Vec<6>& v) {
            return form_.evaluate(f, v) == 0 && form_.bilinear(f, *g, v) != 0;
        });
        if (!h0) throw std::logic_error("KleinModel: residual line is not hyperbolic");
        Vec<6> hv = scale(f, f.inv(form_.bilinear(f, *g, *h0)), *h0);
        // In coordinates Y over (e, fv, g, hv) the form is Y1Y2 + Y3Y4.
        auto at = [&](elem y1, elem y2, elem y3, elem y4) {
            Vec<6> v{};
            v = axpy(f, v, y1, *e);
            v = axpy(f, v, y2, fv);
            v = axpy(f, v, y3, *g);
            v = axpy(f, v, y4, hv);
            return v;
        };
        std::vector<Subspace<6>> out;
        for (unsigned ti = 0; ti < f.q(); ++ti) {
            elem t = static_cast<elem>(ti);
            out.emplace_back(f, std::vector<Vec<6>>{x, at(1, 0, 0, t), at(0, t, 1, 0)});
            out.emplace_back(f, std::vector<Vec<6>>{x, at(1, 0, t, 0), at(0, t, 0, 1)});
        }
        out.emplace_back(f, std::vector<Vec<6>>{x, at(0, 0, 0, 1), at(0, 1, 0, 0)});
        out.emplace_back(f, std::vector<Vec<6>>{x, at(0, 0, 1, 0), at(0, 1, 0, 0)});
        return out;
    }

    void build_planes()
    {
        const Field& f = *f_;
        std::map<std::vector<Vec<6>>, std::uint32_t> seen;
        planes_through_.assign(points_.size(), {});
        for (const auto& x : points_) {
            for (auto& s : planes_through_point(x)) {
                if (s.projdim() != 2) throw std::logic_error("KleinModel: generator is not a plane");
                if (seen.count(s.basis())) continue;
                auto id = static_cast<std::uint32_t>(planes_.size());
                seen.emplace(s.basis(), id);
                QuadricPlane qp;
                auto basis = plane_basis(s);
                for (const auto& c : plane_geo_.points()) {
                    Vec<6> v = combine(f, basis, c);
                    auto idx = index_of(v);
                    if (!idx) throw std::logic_error("KleinModel: generator plane not totally singular");
                    qp.points.push_back(*idx);
                    planes_through_[*idx].push_back(id);
                }
                qp.space = std::move(s);
                planes_.push_back(std::move(qp));
            }
        }
    }

    void build_lines()
    {
        struct Entry {
            std::uint64_t key;
            std::uint32_t plane;
            std::uint32_t line;
        };
        std::vector<Entry> entries;
        entries.reserve(planes_.size() * plane_geo_.size());
        for (std::uint32_t p = 0; p < planes_.size(); ++p)
            for (std::uint32_t l = 0; l < plane_geo_.size(); ++l) {
                std::uint32_t m1 = UINT32_MAX, m2 = UINT32_MAX;
                for (auto lp : plane_geo_.line_points(l)) {
                    std::uint32_t g = planes_[p].points[lp];
                    if (g < m1) {
                        m2 = m1;
                        m1 = g;
                    } else if (g < m2) {
                        m2 = g;
                    }
                }
                entries.push_back({(std::uint64_t{m1} << 32) | m2, p, l});
            }
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            return a.key != b.key ? a.key < b.key : a.plane < b.plane;
        });
        for (std::size_t i = 0; i < entries.size();) {
            std::size_t j = i;
            while (j < entries.size() && entries[j].key == entries[i].key) ++j;
            if (j - i != 2)
                throw std::logic_error("KleinModel: a quadric line lies on " + std::to_string(j - i) + " planes");
            lines_.push_back({entries[i].plane, entries[i].line});
            i = j;
        }
    }

    void check_counts() const
    {
        if (points_.size() != expected_points())
            throw std::logic_error("KleinModel: point count mismatch");
        if (planes_.size() != expected_planes())
            throw std::logic_error("KleinModel: plane count mismatch");
        if (lines_.size() != expected_lines())
            throw std::logic_error("KleinModel: line count mismatch");
        for (const auto& pl : planes_through_)
            if (pl.size() != 2 * (q() + 1)) throw std::logic_error("KleinModel: point-plane incidence mismatch");
    }

    const Field* f_;
    ProjectiveSpace<6> pg_;
    QuadraticForm<6> form_;
    PlaneGeometry plane_geo_;
    std::vector<Vec<6>> points_;
    std::vector<std::int32_t> rank_to_index_;
    std::vector<QuadricPlane> planes_;
    std::vector<std::vector<std::uint32_t>> planes_through_;
    std::vector<LineRef> lines_;
};

inline KleinModel build_klein_model(const Field& f) { return KleinModel(f); }

}  // namespace hyperoval

#endif  // HYPEROVAL_QUADRICS_HPP
