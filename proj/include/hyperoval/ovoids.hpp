#ifndef HYPEROVAL_OVOIDS_HPP
#define HYPEROVAL_OVOIDS_HPP

// The solid Π = {X5 = X6, X4 = X3 + ωX5} of the Klein model, the generalized
// quadrangle W(q) of tangent lines of Q-(3,q) = Π ∩ Q+(5,q), and ovoids of
// W(q): the base quadric, the classical family sharing its polarity, and the
// Suzuki-Tits ovoid.
//
// Points of Π are addressed by a local index: the PG(3,q) rank of their
// coordinates relative to the echelon basis of Π (the frame). For Π this
// order coincides with the lexicographic order of the 6-vectors.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "frames.hpp"
#include "gf2h.hpp"
#include "projspace.hpp"
#include "quadrics.hpp"

namespace hyperoval {

using IndexList = std::vector<std::uint32_t>;

class EllipticSolid {
public:
    explicit EllipticSolid(const KleinModel& model)
        : model_(&model), f_(&model.field()), pg3_(model.field()), omega_(model.field().omega_irreducible())
    {
        const Field& f = *f_;
        const elem wi = f.inv(omega_);
        frame_ = {unit_vector<6>(0), unit_vector<6>(1), Vec<6>{0, 0, 1, 0, wi, wi}, Vec<6>{0, 0, 0, 1, wi, wi}};
        solid_ = Subspace<6>(f, std::vector<Vec<6>>(frame_.begin(), frame_.end()));
        if (solid_.projdim() != 3) throw std::logic_error("EllipticSolid: frame is degenerate");
        frame_form_ = model.form().restrict_to<4>(f, frame_);
        polar_line_ = polar_subspace(model.space(), model.form(), solid_);

        const std::size_t n = pg3_.num_points();
        points_.resize(n);
        model_index_.assign(n, -1);
        for (std::uint64_t r = 0; r < n; ++r) {
            Vec<4> y = pg3_.unrank(r);
            points_[r] = y;
            if (frame_form_.evaluate(f, y) == 0) {
                model_index_[r] = static_cast<std::int64_t>(model.index_or_throw(from_frame(y)));
                base_.push_back(static_cast<std::uint32_t>(r));
            }
        }
        if (classify_solid_section(model.space(), model.form(), solid_) != SolidSection::elliptic ||
            base_.size() != q() * q() + 1)
            throw std::logic_error("EllipticSolid: Π is not an elliptic section");
        build_lines();
    }

    const KleinModel& model() const { return *model_; }
    const Field& field() const { return *f_; }
    unsigned q() const { return f_->q(); }
    elem omega() const { return omega_; }

    const Subspace<6>& solid() const { return solid_; }
    /// L* = Π^ζ.
    const Subspace<6>& polar_line() const { return polar_line_; }
    const std::array<Vec<6>, 4>& frame() const { return frame_; }
    /// The Klein form in frame coordinates.
    const QuadraticForm<4>& frame_form() const { return frame_form_; }
    const ProjectiveSpace<4>& space() const { return pg3_; }

    std::size_t num_points() const { return points_.size(); }
    const Vec<4>& point(std::size_t local) const { return points_[local]; }
    Vec<6> point6(std::size_t local) const { return from_frame(points_[local]); }

    Vec<6> from_frame(const Vec<4>& y) const
    {
        Vec<6> v{};
        for (std::size_t i = 0; i < 4; ++i)
            if (y[i]) v = axpy(*f_, v, y[i], frame_[i]);
        return v;
    }

    /// Frame coordinates of a vector of Π (throws if it lies outside Π).
    Vec<4> to_frame(const Vec<6>& v) const
    {
        if (!solid_.contains(*f_, v)) throw std::domain_error("to_frame: vector is not in Π");
        return {v[0], v[1], v[2], v[3]};
    }

    std::uint32_t local_index(const Vec<4>& y) const { return static_cast<std::uint32_t>(pg3_.rank(pg3_.normalize(y))); }
    std::optional<std::uint32_t> local_index6(const Vec<6>& v) const
    {
        if (is_zero(v) || !solid_.contains(*f_, v)) return std::nullopt;
        return local_index(to_frame(v));
    }

    /// Model index of a Π point lying on Q-(3,q).
    std::optional<std::uint32_t> model_index(std::size_t local) const
    {
        if (model_index_[local] < 0) return std::nullopt;
        return static_cast<std::uint32_t>(model_index_[local]);
    }
    bool on_base(std::size_t local) const { return model_index_[local] >= 0; }

    /// Q-(3,q) as sorted local indices.
    const IndexList& base_points() const { return base_; }

    /// Every line of Π as sorted local point indices.
    const std::vector<IndexList>& all_lines() const { return lines_; }
    bool is_isotropic(std::size_t line) const { return isotropic_[line]; }
    /// Indices into all_lines() of the lines of W(q).
    const IndexList& wq_lines() const { return wq_; }
    /// W(q) lines through a point (indices into all_lines()).
    const IndexList& wq_lines_through(std::size_t local) const { return wq_through_[local]; }

    /// p* = (1,0,0,0,0,0).
    std::uint32_t p_star() const { return local_index(Vec<4>{1, 0, 0, 0}); }

private:
    void build_lines()
    {
        const Field& f = *f_;
        wq_through_.assign(points_.size(), {});
        pg3_.for_each_subspace(1, [&](const Subspace<4>& line) {
            IndexList pts;
            for (const auto& p : pg3_.enumerate_points(line)) pts.push_back(local_index(p));
            std::sort(pts.begin(), pts.end());
            bool iso = frame_form_.bilinear(f, line.basis()[0], line.basis()[1]) == 0;
            auto id = static_cast<std::uint32_t>(lines_.size());
            if (iso) {
                wq_.push_back(id);
                for (auto p : pts) wq_through_[p].push_back(id);
            }
            lines_.push_back(std::move(pts));
            isotropic_.push_back(iso);
        });
        std::uint64_t qq = q();
        if (wq_.size() != (qq + 1) * (qq * qq + 1)) throw std::logic_error("EllipticSolid: W(q) line count mismatch");
    }

    const KleinModel* model_;
    const Field* f_;
    ProjectiveSpace<4> pg3_;
    elem omega_;
    std::array<Vec<6>, 4> frame_{};
    Subspace<6> solid_;
    Subspace<6> polar_line_;
    QuadraticForm<4> frame_form_;
    std::vector<Vec<4>> points_;
    std::vector<std::int64_t> model_index_;
    IndexList base_;
    std::vector<IndexList> lines_;
    std::vector<bool> isotropic_;
    IndexList wq_;
    std::vector<IndexList> wq_through_;
};

enum class OvoidKind { base, classical, tits, other };

inline std::string to_string(OvoidKind k)
{
    switch (k) {
    case OvoidKind::base: return "base";
    case OvoidKind::classical: return "classical";
    case OvoidKind::tits: return "tits";
    case OvoidKind::other: return "other";
    }
    return "?";
}

/// q^2+1 points of Π, as sorted local indices.
struct Ovoid {
    OvoidKind kind = OvoidKind::other;
    Vec<4> b{};  // classical parameter, frame coordinates
    IndexList points;
    std::size_t base_intersection = 0;

    bool contains(std::uint32_t local) const { return std::binary_search(points.begin(), points.end(), local); }
};

inline IndexList intersection_with_base(const EllipticSolid& s, const Ovoid& o)
{
    IndexList out;
    std::set_intersection(o.points.begin(), o.points.end(), s.base_points().begin(), s.base_points().end(),
                          std::back_inserter(out));
    return out;
}

inline Ovoid make_ovoid(const EllipticSolid& s, OvoidKind kind, IndexList points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    Ovoid o;
    o.kind = kind;
    o.points = std::move(points);
    o.base_intersection = intersection_with_base(s, o).size();
    return o;
}

inline Ovoid base_elliptic(const EllipticSolid& s) { return make_ovoid(s, OvoidKind::base, s.base_points()); }

/// Zero set in Π of Q + (b1 Y1 + ... + b4 Y4)^2 (frame coordinates).
inline Ovoid classical_ovoid(const EllipticSolid& s, const Vec<4>& b)
{
    if (is_zero(b)) throw std::invalid_argument("classical_ovoid: b must be nonzero");
    const Field& f = s.field();
    QuadraticForm<4> qb = s.frame_form().plus_square(f, b);
    IndexList pts;
    for (std::size_t i = 0; i < s.num_points(); ++i)
        if (qb.evaluate(f, s.point(i)) == 0) pts.push_back(static_cast<std::uint32_t>(i));
    if (pts.size() != s.q() * s.q() + 1)
        throw std::domain_error("classical_ovoid: Q + l^2 is not elliptic for this b (" + std::to_string(pts.size()) +
                                " points)");
    Ovoid o = make_ovoid(s, OvoidKind::classical, std::move(pts));
    o.b = b;
    return o;
}

/// Suzuki-Tits ovoid in PG(3,q) coordinates (X0..X3), q = 2^h with h odd >= 3.
inline std::vector<Vec<4>> tits_points(const Field& f)
{
    if (f.h() < 3 || f.h() % 2 == 0) throw std::invalid_argument("tits_ovoid: requires h odd and h >= 3");
    const int s = (f.h() + 1) / 2;  // sigma = 2^s
    std::vector<Vec<4>> out{{0, 1, 0, 0}};
    for (unsigned xi = 0; xi < f.q(); ++xi)
        for (unsigned yi = 0; yi < f.q(); ++yi) {
            elem x = static_cast<elem>(xi), y = static_cast<elem>(yi);
            elem xs = f.frobenius(x, s);
            elem z = f.mul(x, y) ^ f.mul(xs, f.square(x)) ^ f.frobenius(y, s);
            out.push_back({1, z, x, y});
        }
    return out;
}

/// Gram rows of the alternating form whose isotropic lines are the tangent
/// lines of an ovoid (points given in PG(3,q) coordinates).
inline std::array<Vec<4>, 4> ovoid_polarity(const Field& f, const std::vector<Vec<4>>& ovoid)
{
    ProjectiveSpace<4> pg(f);
    std::vector<bool> member(pg.num_points(), false);
    for (const auto& p : ovoid) member[pg.rank(pg.normalize(p))] = true;
    static constexpr std::array<std::pair<int, int>, 6> pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    std::vector<Vec<6>> rows;
    const std::size_t probe = std::min<std::size_t>(ovoid.size(), 12);
    for (std::size_t k = 0; k < probe; ++k) {
        const Vec<4>& p = ovoid[k];
        std::size_t found = 0;
        for (std::uint64_t r = 0; r < pg.num_points() && found < 4; ++r) {
            Vec<4> v = pg.unrank(r);
            if (member[r]) continue;
            bool tangent = true;
            for (unsigned t = 0; t < f.q() && tangent; ++t)
                if (member[pg.rank(pg.normalize(axpy(f, v, static_cast<elem>(t), p)))]) tangent = false;
            if (!tangent) continue;
            Vec<6> row{};
            for (std::size_t i = 0; i < 6; ++i) {
                auto [a, b] = pairs[i];
                row[i] = f.mul(p[a], v[b]) ^ f.mul(p[b], v[a]);
            }
            rows.push_back(row);
            ++found;
        }
    }
    auto sol = null_space<6>(f, rows);
    if (sol.size() != 1) throw std::logic_error("ovoid_polarity: tangent lines do not determine a unique polarity");
    std::array<Vec<4>, 4> g{};
    for (std::size_t i = 0; i < 6; ++i) {
        auto [a, b] = pairs[i];
        g[a][b] = g[b][a] = sol[0][i];
    }
    return g;
}

/// Suzuki-Tits ovoid carried into Π by a collineation matching its polarity
/// with the polarity of Q-(3,q).
inline Ovoid tits_ovoid(const EllipticSolid& s)
{
    const Field& f = s.field();
    auto pts = tits_points(f);
    Mat4 st = symplectic_basis(f, ovoid_polarity(f, pts));
    Mat4 sp = symplectic_basis(f, s.frame_form().gram(f));
    auto sti = inverse(f, st);
    if (!sti) throw std::logic_error("tits_ovoid: singular symplectic basis");
    Mat4 m = multiply(f, sp, *sti);
    IndexList loc;
    for (const auto& p : pts) loc.push_back(s.local_index(apply(f, m, p)));
    Ovoid o = make_ovoid(s, OvoidKind::tits, std::move(loc));
    if (o.points.size() != s.q() * s.q() + 1) throw std::logic_error("tits_ovoid: alignment is not injective");
    return o;
}

struct OvoidReport {
    bool ok = true;
    std::size_t size = 0;
    IndexList bad_wq_lines;          // W(q) lines not met exactly once
    IndexList bad_hyperbolic_lines;  // other lines met in neither 0 nor 2 points
};

inline OvoidReport validate_ovoid(const EllipticSolid& s, const Ovoid& o)
{
    OvoidReport r;
    r.size = o.points.size();
    std::vector<bool> in(s.num_points(), false);
    for (auto p : o.points) in[p] = true;
    const auto& lines = s.all_lines();
    for (std::uint32_t l = 0; l < lines.size(); ++l) {
        std::size_t c = 0;
        for (auto p : lines[l]) c += in[p];
        if (s.is_isotropic(l)) {
            if (c != 1) r.bad_wq_lines.push_back(l);
        } else if (c != 0 && c != 2) {
            r.bad_hyperbolic_lines.push_back(l);
        }
    }
    r.ok = r.size == s.q() * s.q() + 1 && r.bad_wq_lines.empty() && r.bad_hyperbolic_lines.empty();
    return r;
}

/// Image of a point set of Π under a collineation given in frame coordinates.
inline IndexList apply_collineation(const EllipticSolid& s, const Collineation& g, const IndexList& pts)
{
    IndexList out;
    out.reserve(pts.size());
    for (auto p : pts) out.push_back(s.local_index(g.apply(s.field(), s.point(p))));
    std::sort(out.begin(), out.end());
    return out;
}

/// If the points form a quadric Q + l^2 = 0 sharing the polarity of Q,
/// returns l (frame coordinates).
inline std::optional<Vec<4>> recognize_classical(const EllipticSolid& s, const IndexList& pts)
{
    const Field& f = s.field();
    const auto& q0 = s.frame_form();
    if (pts.size() != s.q() * s.q() + 1) return std::nullopt;
    IndexList meet;
    std::set_intersection(pts.begin(), pts.end(), s.base_points().begin(), s.base_points().end(),
                          std::back_inserter(meet));
    Vec<4> lp{};
    if (meet.size() == 1) {
        lp = q0.polar_form(f, s.point(meet[0]));
    } else if (meet.size() == s.q() + 1) {
        std::vector<Vec<4>> rows;
        for (auto p : meet) rows.push_back(s.point(p));
        auto ker = null_space<4>(f, rows);
        if (ker.size() != 1) return std::nullopt;
        lp = ker[0];
    } else {
        return std::nullopt;
    }
    std::optional<Vec<4>> l;
    for (auto p : pts) {
        if (s.on_base(p)) continue;
        elem lv = dot(f, lp, s.point(p));
        if (lv == 0) return std::nullopt;
        elem c = f.sqrt(f.div(q0.evaluate(f, s.point(p)), f.square(lv)));
        l = scale(f, c, lp);
        break;
    }
    if (!l) return std::nullopt;
    QuadraticForm<4> ql = q0.plus_square(f, *l);
    IndexList zero;
    for (std::size_t i = 0; i < s.num_points(); ++i)
        if (ql.evaluate(f, s.point(i)) == 0) zero.push_back(static_cast<std::uint32_t>(i));
    if (zero != pts) return std::nullopt;
    return l;
}

}  // namespace hyperoval

#endif  // HYPEROVAL_OVOIDS_HPP
