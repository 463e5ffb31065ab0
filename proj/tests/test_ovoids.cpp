#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"

using namespace hyperoval;
using hyperoval::test::b_from_int;
using hyperoval::test::solid;

namespace {

// Classical ovoids for every nonzero b (or a sample), skipping non-elliptic b.
struct Sweep {
    std::size_t elliptic = 0, non_elliptic = 0;
    std::map<std::size_t, std::size_t> intersections;
};

Sweep sweep(const EllipticSolid& s, const std::vector<std::uint64_t>& bs)
{
    Sweep out;
    const std::size_t q = s.q();
    for (auto v : bs) {
        Vec<4> b = b_from_int(s.q(), v);
        Ovoid o;
        try {
            o = classical_ovoid(s, b);
        } catch (const std::domain_error&) {
            ++out.non_elliptic;
            continue;
        }
        ++out.elliptic;
        ++out.intersections[o.base_intersection];
        auto r = validate_ovoid(s, o);
        EXPECT_TRUE(r.ok) << "b=" << v;
        EXPECT_EQ(o.points.size(), q * q + 1);
        EXPECT_EQ(o.b, b);
    }
    return out;
}

std::vector<std::uint64_t> all_b(unsigned q)
{
    std::vector<std::uint64_t> v;
    for (std::uint64_t i = 1; i < std::uint64_t(q) * q * q * q; ++i) v.push_back(i);
    return v;
}

}  // namespace

TEST(BaseOvoid, Basics)
{
    for (int h : {1, 2, 3}) {
        const EllipticSolid& s = solid(h);
        Ovoid o = base_elliptic(s);
        EXPECT_EQ(o.points.size(), s.q() * s.q() + 1);
        EXPECT_TRUE(o.contains(s.p_star()));
        EXPECT_EQ(o.base_intersection, o.points.size());
        EXPECT_TRUE(validate_ovoid(s, o).ok);
    }
    EXPECT_EQ(base_elliptic(solid(1)).points.size(), 5u);
    EXPECT_EQ(base_elliptic(solid(2)).points.size(), 17u);
}

TEST(BaseOvoid, MissingPointFails)
{
    const EllipticSolid& s = solid(2);
    IndexList pts = s.base_points();
    pts.erase(pts.begin() + 3);
    Ovoid o = make_ovoid(s, OvoidKind::other, pts);
    auto r = validate_ovoid(s, o);
    EXPECT_FALSE(r.ok);
    EXPECT_EQ(r.size, 16u);
    EXPECT_EQ(r.bad_wq_lines.size(), s.q() + 1);  // the lines through the removed point
}

TEST(ClassicalOvoid, InvalidParameters)
{
    const EllipticSolid& s = solid(2);
    EXPECT_THROW(classical_ovoid(s, Vec<4>{}), std::invalid_argument);
    // b = (0,0,0,1) gives a hyperbolic quadric in this frame
    EXPECT_THROW(classical_ovoid(s, Vec<4>{0, 0, 0, 1}), std::domain_error);
    EXPECT_NO_THROW(classical_ovoid(s, Vec<4>{1, 0, 0, 0}));
    EXPECT_NO_THROW(classical_ovoid(s, Vec<4>{0, 0, 1, 1}));
}

TEST(ClassicalOvoid, SweepQ2)
{
    const EllipticSolid& s = solid(1);
    auto r = sweep(s, all_b(2));
    EXPECT_GT(r.elliptic, 0u);
    EXPECT_EQ(r.elliptic + r.non_elliptic, 15u);
    ASSERT_EQ(r.intersections.size(), 1u);
    EXPECT_EQ(r.intersections.begin()->first, 1u);
}

TEST(ClassicalOvoid, SweepQ4)
{
    const EllipticSolid& s = solid(2);
    auto r = sweep(s, all_b(4));
    EXPECT_EQ(r.elliptic + r.non_elliptic, 255u);
    EXPECT_GT(r.non_elliptic, 0u);
    EXPECT_EQ(r.intersections.size(), 2u);
    EXPECT_TRUE(r.intersections.count(1));
    EXPECT_TRUE(r.intersections.count(5));
}

TEST(ClassicalOvoid, SweepQ8)
{
    const EllipticSolid& s = solid(3);
    auto r = sweep(s, all_b(8));
    EXPECT_EQ(r.elliptic + r.non_elliptic, 4095u);
    for (const auto& [i, n] : r.intersections) EXPECT_TRUE(i == 1 || i == 9) << i;
}

TEST(ClassicalOvoid, SampleQ16)
{
    const EllipticSolid& s = solid(4);
    std::mt19937_64 rng(16);
    std::uniform_int_distribution<std::uint64_t> d(1, 65535);
    std::vector<std::uint64_t> bs;
    for (int i = 0; i < 100; ++i) bs.push_back(d(rng));
    auto r = sweep(s, bs);
    EXPECT_GT(r.elliptic, 0u);
    for (const auto& [i, n] : r.intersections) EXPECT_TRUE(i == 1 || i == 17) << i;
}

TEST(ClassicalOvoid, IntersectionIsAPlaneSection)
{
    // O ∩ Q- is the section of Q- by the plane b.Y = 0
    const EllipticSolid& s = solid(2);
    const Field& f = s.field();
    for (std::uint64_t v = 1; v < 256; ++v) {
        Vec<4> b = b_from_int(4, v);
        Ovoid o;
        try {
            o = classical_ovoid(s, b);
        } catch (const std::domain_error&) {
            continue;
        }
        std::size_t n = 0;
        for (auto p : s.base_points()) n += dot(f, b, s.point(p)) == 0;
        EXPECT_EQ(o.base_intersection, n);
        for (auto p : intersection_with_base(s, o)) EXPECT_EQ(dot(f, b, s.point(p)), 0);
    }
}

TEST(ClassicalOvoid, ScalingBChangesTheOvoid)
{
    // Q + (mu b.Y)^2 is a different quadric for mu^2 != 1, so b is not projective
    const EllipticSolid& s = solid(2);
    Vec<4> b{1, 0, 0, 0};
    Ovoid o1 = classical_ovoid(s, b);
    Ovoid o2 = classical_ovoid(s, scale(s.field(), 2, b));
    EXPECT_NE(o1.points, o2.points);
    EXPECT_TRUE(validate_ovoid(s, o2).ok);
}

TEST(ClassicalOvoid, TangentLines)
{
    // through each point of O exactly q+1 W(q) lines, each meeting O only there
    const EllipticSolid& s = solid(2);
    Ovoid o = classical_ovoid(s, Vec<4>{1, 0, 0, 0});
    for (auto p : o.points) {
        const auto& ls = s.wq_lines_through(p);
        ASSERT_EQ(ls.size(), s.q() + 1);
        for (auto l : ls)
            for (auto x : s.all_lines()[l]) ASSERT_EQ(o.contains(x), x == p);
    }
    // every other line meets O in 0 or 2 points
    for (std::size_t l = 0; l < s.all_lines().size(); ++l) {
        if (s.is_isotropic(l)) continue;
        int n = 0;
        for (auto x : s.all_lines()[l]) n += o.contains(x);
        ASSERT_TRUE(n == 0 || n == 2);
    }
}

TEST(ClassicalOvoid, RecognizeClassical)
{
    const EllipticSolid& s = solid(2);
    for (std::uint64_t v : {1u, 5u, 17u, 64u, 200u}) {
        Ovoid o;
        try {
            o = classical_ovoid(s, b_from_int(4, v));
        } catch (const std::domain_error&) {
            continue;
        }
        auto b = recognize_classical(s, o.points);
        ASSERT_TRUE(b.has_value());
        EXPECT_EQ(classical_ovoid(s, *b).points, o.points);
    }
    IndexList junk(s.base_points().begin(), s.base_points().begin() + 5);
    EXPECT_FALSE(recognize_classical(s, junk).has_value());
}

TEST(TitsOvoid, Q8)
{
    const EllipticSolid& s = solid(3);
    Ovoid o = tits_ovoid(s);
    EXPECT_EQ(o.kind, OvoidKind::tits);
    EXPECT_EQ(o.points.size(), 65u);
    auto r = validate_ovoid(s, o);
    EXPECT_TRUE(r.ok);
    EXPECT_LE(o.base_intersection, 28u);
    // no three points collinear
    for (const auto& line : s.all_lines()) {
        int n = 0;
        for (auto x : line) n += o.contains(x);
        ASSERT_LE(n, 2);
    }
    EXPECT_FALSE(recognize_classical(s, o.points).has_value());

    // some plane section with q+1 points is not a conic
    const Field& f = s.field();
    PlaneGeometry geo(f);
    int secants = 0, non_conic = 0;
    s.space().for_each_subspace(2, [&](const Subspace<4>& pl) {
        std::vector<Vec<3>> pts;
        for (auto p : o.points)
            if (pl.contains(f, s.point(p))) {
                auto c = pl.coordinates(s.point(p));
                pts.push_back(Vec<3>{c[0], c[1], c[2]});
            }
        if (pts.size() != s.q() + 1) return;
        ++secants;
        non_conic += !fit_conic(geo, pts).has_value();
    });
    EXPECT_EQ(secants, 585 - 65);
    EXPECT_GT(non_conic, 0);
}

TEST(TitsOvoid, RequiresOddH)
{
    EXPECT_THROW(tits_points(Field::standard(2)), std::invalid_argument);
    EXPECT_THROW(tits_points(Field::standard(4)), std::invalid_argument);
    EXPECT_THROW(tits_points(Field::standard(1)), std::invalid_argument);
    EXPECT_EQ(tits_points(Field::standard(5)).size(), 32u * 32 + 1);
}

TEST(Stabilizer, OrderAndAction)
{
    const EllipticSolid& s = solid(2);
    const Field& f = s.field();
    EXPECT_EQ(elliptic_stabilizer_order(f), 16320u);
    std::uint64_t n = 0;
    Ovoid base = base_elliptic(s);
    Ovoid cl = classical_ovoid(s, Vec<4>{1, 0, 0, 0});
    for_each_quadric_stabilizer(f, s.frame_form(), [&](const Collineation& g) {
        ++n;
        if (n % 97 == 0) {
            EXPECT_EQ(apply_collineation(s, g, base.points), base.points);
            Ovoid img = make_ovoid(s, OvoidKind::other, apply_collineation(s, g, cl.points));
            EXPECT_TRUE(validate_ovoid(s, img).ok);
        }
        return true;
    });
    EXPECT_EQ(n, 16320u);
    EXPECT_THROW(for_each_quadric_stabilizer(f, s.frame_form().plus_square(f, Vec<4>{0, 0, 0, 1}),
                                             [](const Collineation&) { return true; }),
                 std::domain_error);
}

TEST(Stabilizer, ComposeMatchesSequentialApplication)
{
    const EllipticSolid& s = solid(2);
    const Field& f = s.field();
    std::vector<Collineation> gs;
    std::uint64_t n = 0;
    for_each_quadric_stabilizer(f, s.frame_form(), [&](const Collineation& g) {
        if (++n % 1000 == 7) gs.push_back(g);
        return gs.size() < 6;
    });
    ASSERT_EQ(gs.size(), 6u);
    for (const auto& a : gs)
        for (const auto& b : gs) {
            auto ab = Collineation::compose(f, a, b);
            for (std::size_t p = 0; p < s.num_points(); p += 11)
                ASSERT_EQ(normalize(f, ab.apply(f, s.point(p))), normalize(f, a.apply(f, b.apply(f, s.point(p)))));
        }
}

TEST(Polarity, OfBaseOvoid)
{
    const EllipticSolid& s = solid(2);
    const Field& f = s.field();
    std::vector<Vec<4>> pts;
    for (auto p : s.base_points()) pts.push_back(s.point(p));
    auto g = ovoid_polarity(f, pts);
    auto want = s.frame_form().gram(f);
    // equal up to a nonzero scalar
    elem c = 0;
    for (std::size_t i = 0; i < 4 && !c; ++i)
        for (std::size_t j = 0; j < 4 && !c; ++j)
            if (want[i][j]) c = f.div(g[i][j], want[i][j]);
    ASSERT_NE(c, 0);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(g[i][j], f.mul(c, want[i][j]));
}
