#ifndef HYPEROVAL_CONSTRUCTIONS_HPP
#define HYPEROVAL_CONSTRUCTIONS_HPP

// Hyperovals of Q+(5,q): from quadratic sets of type (SC), the H_lambda
// family built from conic nuclei of T_p ∩ Π, and H_O built from an ovoid O
// of W(q).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ovoids.hpp"
#include "parallel.hpp"
#include "quadrics.hpp"

namespace hyperoval {

/// Membership set over the point list of a KleinModel.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::size_t universe) : bits_(universe, 0) {}

    static PointSet from_indices(std::size_t universe, const IndexList& idx)
    {
        PointSet s(universe);
        for (auto i : idx) s.insert(i);
        return s;
    }

    std::size_t universe() const { return bits_.size(); }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(std::size_t i) const { return bits_.at(i) != 0; }

    void insert(std::size_t i)
    {
        if (!bits_.at(i)) {
            bits_[i] = 1;
            ++count_;
        }
    }

    void erase(std::size_t i)
    {
        if (bits_.at(i)) {
            bits_[i] = 0;
            --count_;
        }
    }

    IndexList indices() const
    {
        IndexList out;
        out.reserve(count_);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) out.push_back(static_cast<std::uint32_t>(i));
        return out;
    }

    friend bool operator==(const PointSet& a, const PointSet& b) { return a.bits_ == b.bits_; }

private:
    std::vector<std::uint8_t> bits_;
    std::size_t count_ = 0;
};

struct SCPlane {
    std::uint32_t plane = 0;
    std::uint32_t kernel = 0;  // model index of the nucleus of the oval
    bool conic = false;        // oval is an irreducible conic
};

struct SCDecomposition {
    PointSet a1;
    PointSet a2;
    IndexList planes_s;
    std::vector<SCPlane> planes_c;
    std::vector<std::int8_t> plane_type;  // 0 = S, 1 = C
};

/// Kernel of an oval of a plane of PG(2,q), q even, given as local indices;
/// nullopt when the points are not an oval.
inline std::optional<std::uint32_t> oval_kernel(const PlaneGeometry& geo, const std::vector<bool>& in_oval)
{
    IndexList tangents;
    for (std::uint32_t l = 0; l < geo.size(); ++l) {
        std::size_t c = 0;
        for (auto p : geo.line_points(l)) c += in_oval[p];
        if (c > 2) return std::nullopt;
        if (c == 1) tangents.push_back(l);
    }
    if (tangents.size() < 2) return std::nullopt;
    std::uint32_t k = geo.meet(tangents[0], tangents[1]);
    for (auto l : tangents) {
        const auto& lp = geo.line_points(l);
        if (!std::binary_search(lp.begin(), lp.end(), k)) return std::nullopt;
    }
    return k;
}

/// Splits the planes of the model into type (S) and type (C) with respect to
/// X; throws std::domain_error naming the first plane of neither type.
inline SCDecomposition sc_decompose(const KleinModel& m, const PointSet& x)
{
    if (x.empty()) throw std::invalid_argument("sc_decompose: empty point set");
    const auto& geo = m.plane_geometry();
    const std::size_t np = m.planes().size();
    const unsigned q = m.q();
    SCDecomposition d{PointSet(m.num_points()), PointSet(m.num_points()), {}, {}, std::vector<std::int8_t>(np, -1)};
    std::vector<std::optional<SCPlane>> c(np);
    std::vector<std::int64_t> bad(np, -1);
    parallel_for(0, np, [&](std::size_t pi) {
        const auto& pl = m.planes()[pi];
        std::vector<bool> in(pl.points.size(), false);
        std::size_t cnt = 0;
        for (std::size_t i = 0; i < pl.points.size(); ++i)
            if (x.contains(pl.points[i])) {
                in[i] = true;
                ++cnt;
            }
        if (cnt == 1) {
            d.plane_type[pi] = 0;
            return;
        }
        if (cnt == q + 1) {
            if (auto k = oval_kernel(geo, in)) {
                std::vector<Vec<3>> pts;
                for (std::size_t i = 0; i < in.size(); ++i)
                    if (in[i]) pts.push_back(geo.point(i));
                c[pi] = SCPlane{static_cast<std::uint32_t>(pi), pl.points[*k], fit_conic(geo, pts).has_value()};
                d.plane_type[pi] = 1;
                return;
            }
        }
        bad[pi] = static_cast<std::int64_t>(cnt);
    });
    for (std::size_t pi = 0; pi < np; ++pi)
        if (bad[pi] >= 0)
            throw std::domain_error("sc_decompose: plane " + std::to_string(pi) + " meets X in " +
                                    std::to_string(bad[pi]) + " points, neither a singleton nor an oval");
    for (std::uint32_t pi = 0; pi < np; ++pi) {
        if (d.plane_type[pi] == 0) {
            d.planes_s.push_back(pi);
            for (auto p : m.planes()[pi].points)
                if (x.contains(p)) d.a1.insert(p);
        } else {
            d.planes_c.push_back(*c[pi]);
            d.a2.insert(c[pi]->kernel);
        }
    }
    if (d.planes_s.empty() || d.planes_c.empty())
        throw std::domain_error("sc_decompose: X is not of type (SC): only one plane type occurs");
    return d;
}

/// Property (1): planes through A1 have type (S). Property (2): every plane
/// through a point of A2 has type (C) with that point as kernel. Returns a
/// description of the first violation, or nullopt.
inline std::optional<std::string> sc_property_violation(const KleinModel& m, const SCDecomposition& d)
{
    std::vector<std::int64_t> kernel(m.planes().size(), -1);
    for (const auto& c : d.planes_c) kernel[c.plane] = c.kernel;
    for (auto a : d.a1.indices())
        for (auto pl : m.planes_through(a))
            if (d.plane_type[pl] != 0)
                return "property (1): plane " + std::to_string(pl) + " through A1 point " + std::to_string(a) +
                       " has type (C)";
    for (auto a : d.a2.indices())
        for (auto pl : m.planes_through(a))
            if (d.plane_type[pl] != 1 || kernel[pl] != a)
                return "property (2): plane " + std::to_string(pl) + " through A2 point " + std::to_string(a) +
                       " is not a type (C) plane with that kernel";
    return std::nullopt;
}

/// Checks |A2| = q^2+1-|A1|, |X| = (q^2+1)(q+1) - q|A1| and
/// |(X \ A1) ∪ A2| = (q^2+1-|A1|)(q+2).
inline bool sc_size_identities(const KleinModel& m, const SCDecomposition& d, const PointSet& x, const PointSet& h)
{
    const std::size_t q = m.q(), a1 = d.a1.size();
    return d.a2.size() == q * q + 1 - a1 && x.size() == (q * q + 1) * (q + 1) - q * a1 &&
           h.size() == (q * q + 1 - a1) * (q + 2);
}

/// (X \ A1) ∪ A2, after verifying properties (1) and (2).
inline PointSet sc_hyperoval(const KleinModel& m, const SCDecomposition& d, const PointSet& x)
{
    if (auto v = sc_property_violation(m, d)) throw std::domain_error("sc_hyperoval: " + *v);
    PointSet h = x;
    for (auto a : d.a1.indices()) h.erase(a);
    for (auto a : d.a2.indices()) {
        if (x.contains(a)) throw std::logic_error("sc_hyperoval: A2 meets X");
        h.insert(a);
    }
    if (!sc_size_identities(m, d, x, h)) throw std::logic_error("sc_hyperoval: size identities fail");
    return h;
}

/// A(v) = B(v*, v)^(q-3) Q(v) with v* = (1,0,0,0,0,0); zero on T_{p*}. q >= 4.
inline elem a_value(const KleinModel& m, const Vec<6>& v)
{
    const Field& f = m.field();
    if (f.q() < 4) throw std::invalid_argument("A(p) is undefined for q = 2");
    elem b = v[1];  // B(v*, v)
    if (b == 0) return 0;
    return f.mul(f.pow(b, static_cast<long long>(f.q()) - 3), m.evaluate(v));
}

/// Nucleus of the conic T_p ∩ Π ∩ Q+(5,q), found geometrically.
inline Vec<6> k_p_geometric(const EllipticSolid& s, const Vec<6>& p)
{
    const KleinModel& m = s.model();
    Subspace<6> beta = m.space().meet(tangent_hyperplane(m.space(), m.form(), p), s.solid());
    auto sec = conic_of_plane_section(m.plane_geometry(), m.form(), beta);
    if (sec.kind != SectionKind::conic) throw std::logic_error("k_p_geometric: T_p ∩ Π is not a secant plane");
    return sec.conic->nucleus;
}

/// p' = (ωy1, ωy2, y5+y6+ωy3, y5+y6+ωy4, y3+y4, y3+y4).
inline Vec<6> k_p_direct(const EllipticSolid& s, const Vec<6>& p)
{
    const KleinModel& m = s.model();
    const Field& f = m.field();
    if (m.evaluate(p) != 0) throw std::domain_error("k_p_direct: point is not on the quadric");
    if (s.solid().contains(f, p)) throw std::domain_error("k_p_direct: point lies in Π");
    if (p[1] == 0) throw std::domain_error("k_p_direct: point lies in T_{p*}");
    const elem w = s.omega();
    elem y56 = p[4] ^ p[5], y34 = p[2] ^ p[3];
    return normalize(f, Vec<6>{f.mul(w, p[0]), f.mul(w, p[1]), static_cast<elem>(y56 ^ f.mul(w, p[2])),
                               static_cast<elem>(y56 ^ f.mul(w, p[3])), y34, y34});
}

/// B(p) = A(k_p) for every model point; 0 on T_{p*} and on Π.
inline std::vector<elem> lambda_values(const EllipticSolid& s, int jobs = 0)
{
    const KleinModel& m = s.model();
    std::vector<elem> out(m.num_points(), 0);
    parallel_for(jobs, m.num_points(), [&](std::size_t i) {
        const Vec<6>& p = m.point(i);
        if (p[1] == 0 || s.solid().contains(m.field(), p)) return;
        out[i] = a_value(m, k_p_geometric(s, p));
    });
    return out;
}

/// H_lambda = (Q-(3,q) \ {p*}) ∪ {p : B(p) = lambda}.
inline PointSet h_lambda(const EllipticSolid& s, elem lambda, int jobs = 0)
{
    const KleinModel& m = s.model();
    if (m.q() < 4) throw std::invalid_argument("h_lambda: requires q >= 4 (use h_q2_complement)");
    if (lambda == 0 || !m.field().contains(lambda)) throw std::invalid_argument("h_lambda: lambda must be nonzero");
    auto bv = lambda_values(s, jobs);
    PointSet h(m.num_points());
    for (std::size_t i = 0; i < bv.size(); ++i)
        if (bv[i] == lambda) h.insert(i);
    const auto pstar = *s.model_index(s.p_star());
    for (auto b : s.base_points()) {
        auto mi = *s.model_index(b);
        if (mi != pstar) h.insert(mi);
    }
    return h;
}

/// λω²X2² + X3² + X4² + X5² + X6² + ω²X5X6 + ω(X3+X4)(X5+X6).
inline elem eq1_value(const Field& f, elem lambda, elem w, const Vec<6>& v)
{
    elem w2 = f.square(w);
    return f.mul(f.mul(lambda, w2), f.square(v[1])) ^ f.square(v[2]) ^ f.square(v[3]) ^ f.square(v[4]) ^
           f.square(v[5]) ^ f.mul(w2, f.mul(v[4], v[5])) ^ f.mul(w, f.mul(v[2] ^ v[3], v[4] ^ v[5]));
}

/// Q+(5,q) ∩ {eq1 = 0}.
inline PointSet eq1_point_set(const KleinModel& m, elem lambda, elem w)
{
    if (m.q() < 4) throw std::invalid_argument("eq1_point_set: requires q >= 4");
    if (lambda == 0) throw std::invalid_argument("eq1_point_set: lambda must be nonzero");
    PointSet x(m.num_points());
    for (std::size_t i = 0; i < m.num_points(); ++i)
        if (eq1_value(m.field(), lambda, w, m.point(i)) == 0) x.insert(i);
    return x;
}

/// C_x = <L*, x> ∩ Q+(5,q) for a point x of Π off Q-(3,q), as model indices.
inline IndexList conic_c_x(const EllipticSolid& s, std::uint32_t local)
{
    const KleinModel& m = s.model();
    Subspace<6> pl = m.space().span(s.polar_line(), s.point6(local));
    auto sec = conic_of_plane_section(m.plane_geometry(), m.form(), pl);
    if (sec.kind != SectionKind::conic) throw std::logic_error("conic_c_x: <L*, x> ∩ Q+ is not a conic");
    IndexList out;
    for (const auto& p : sec.points) out.push_back(m.index_or_throw(p));
    return out;
}

/// (∪_{x ∈ O \ Q-} C_x) ∪ (Q- \ O).
inline PointSet h_from_ovoid(const EllipticSolid& s, const Ovoid& o)
{
    if (o.kind == OvoidKind::base || o.points == s.base_points())
        throw std::invalid_argument("h_from_ovoid: O must differ from Q-(3,q)");
    const KleinModel& m = s.model();
    PointSet h(m.num_points());
    for (auto x : o.points)
        if (!s.on_base(x))
            for (auto i : conic_c_x(s, x)) h.insert(i);
    for (auto b : s.base_points())
        if (!o.contains(b)) h.insert(*s.model_index(b));
    return h;
}

/// (∪_{x ∈ O \ Q-} C_x) ∪ (O ∩ Q-), the generalized (SC)-set behind H_O.
inline PointSet sc_set_from_ovoid(const EllipticSolid& s, const Ovoid& o)
{
    const KleinModel& m = s.model();
    PointSet x(m.num_points());
    for (auto p : o.points) {
        if (s.on_base(p))
            x.insert(*s.model_index(p));
        else
            for (auto i : conic_c_x(s, p)) x.insert(i);
    }
    return x;
}

/// Q+(5,2) \ T_{p*}.
inline PointSet h_q2_complement(const KleinModel& m)
{
    if (m.q() != 2) throw std::invalid_argument("h_q2_complement: requires q = 2");
    PointSet h(m.num_points());
    for (std::size_t i = 0; i < m.num_points(); ++i)
        if (m.point(i)[1] != 0) h.insert(i);
    return h;
}

}  // namespace hyperoval

#endif  // HYPEROVAL_CONSTRUCTIONS_HPP
