#ifndef HYPEROVAL_ANALYSIS_HPP
#define HYPEROVAL_ANALYSIS_HPP

// Verification of hyperovals and ovoids, the kernel span K of a hyperoval
// H_O with recovery of O, and isomorphism classification of the H_O.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "constructions.hpp"
#include "frames.hpp"
#include "ovoids.hpp"
#include "parallel.hpp"

namespace hyperoval {

struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
    IndexList witness;
    std::vector<std::pair<std::string, std::uint64_t>> counts;
};

struct VerificationReport {
    std::string subject;
    std::vector<Check> checks;
    double seconds = 0;

    bool passed() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }
    const Check* find(const std::string& name) const
    {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

inline Check make_check(std::string name, bool ok, std::string detail = {}, IndexList witness = {})
{
    return Check{std::move(name), ok, std::move(detail), std::move(witness), {}};
}

// ---------------------------------------------------------------- hyperovals

/// Every line of Q+(5,q) meets H in 0 or 2 points; records the plane profile.
inline VerificationReport verify_hyperoval(const KleinModel& m, const PointSet& h, int jobs = 0,
                                           std::string subject = "hyperoval")
{
    auto t0 = std::chrono::steady_clock::now();
    VerificationReport r;
    r.subject = std::move(subject);
    r.checks.push_back(make_check("nonempty", !h.empty()));
    r.checks.back().counts.push_back({"size", h.size()});

    const auto& lines = m.lines();
    std::vector<std::uint8_t> line_count(lines.size());
    parallel_for(jobs, lines.size(), [&](std::size_t l) {
        std::uint8_t c = 0;
        for (auto lp : m.plane_geometry().line_points(lines[l].local_line))
            c += h.contains(m.planes()[lines[l].plane].points[lp]);
        line_count[l] = c;
    });
    Check lc{"lines meet in 0 or 2 points", true, {}, {}, {}};
    std::uint64_t zero = 0, two = 0;
    for (std::size_t l = 0; l < lines.size(); ++l) {
        if (line_count[l] == 0)
            ++zero;
        else if (line_count[l] == 2)
            ++two;
        else if (lc.passed) {
            lc.passed = false;
            lc.detail = "line " + std::to_string(l) + " meets H in " + std::to_string(line_count[l]) + " points";
            lc.witness = m.line_points(lines[l]);
        }
    }
    lc.counts = {{"lines", lines.size()}, {"empty", zero}, {"secant", two}};
    r.checks.push_back(std::move(lc));

    const std::size_t q = m.q();
    Check pc{"planes meet in 0 or q+2 points", true, {}, {}, {}};
    std::uint64_t disjoint = 0, hyper = 0;
    for (std::size_t p = 0; p < m.planes().size(); ++p) {
        std::size_t c = 0;
        for (auto i : m.planes()[p].points) c += h.contains(i);
        if (c == 0)
            ++disjoint;
        else if (c == q + 2)
            ++hyper;
        else if (pc.passed) {
            pc.passed = false;
            pc.detail = "plane " + std::to_string(p) + " meets H in " + std::to_string(c) + " points";
            pc.witness = m.planes()[p].points;
        }
    }
    pc.counts = {{"planes", m.planes().size()}, {"disjoint", disjoint}, {"hyperoval", hyper}};
    r.checks.push_back(std::move(pc));
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

/// (q+2)(q^2+q+2)/2.
inline std::uint64_t hyperoval_min_size(std::uint64_t q) { return (q + 2) * (q * q + q + 2) / 2; }

inline Check min_size_check(unsigned q, std::size_t size)
{
    auto bound = hyperoval_min_size(q);
    Check c = make_check("size at least (q+2)(q^2+q+2)/2", size >= bound);
    c.counts = {{"size", size}, {"bound", bound}};
    return c;
}

/// Planes of Q+(5,q) disjoint from H are exactly those through O ∩ Q-(3,q).
inline Check plane_disjointness_check(const EllipticSolid& s, const PointSet& h, const Ovoid& o)
{
    const KleinModel& m = s.model();
    std::vector<bool> through(m.planes().size(), false);
    for (auto b : intersection_with_base(s, o))
        for (auto pl : m.planes_through(*s.model_index(b))) through[pl] = true;
    Check c{"disjoint planes are the planes through O ∩ Q-", true, {}, {}, {}};
    std::uint64_t disjoint = 0;
    for (std::uint32_t p = 0; p < m.planes().size(); ++p) {
        bool dis = std::none_of(m.planes()[p].points.begin(), m.planes()[p].points.end(),
                                [&](std::uint32_t i) { return h.contains(i); });
        disjoint += dis;
        if (dis != through[p] && c.passed) {
            c.passed = false;
            c.detail = "plane " + std::to_string(p) + (dis ? " is disjoint but misses O ∩ Q-" : " meets H but contains a point of O ∩ Q-");
            c.witness = {p};
        }
    }
    c.counts = {{"disjoint", disjoint},
                {"through", static_cast<std::uint64_t>(std::count(through.begin(), through.end(), true))}};
    return c;
}

// ------------------------------------------------------ plane hyperovals

/// Points p of a (q+2)-set of PG(2,q) such that the remaining q+1 points form
/// an irreducible conic (plane-local indices).
inline IndexList conic_deletion_points(const PlaneGeometry& geo, const IndexList& set)
{
    IndexList out;
    for (std::size_t skip = 0; skip < set.size(); ++skip) {
        std::vector<Vec<3>> pts;
        for (std::size_t i = 0; i < set.size(); ++i)
            if (i != skip) pts.push_back(geo.point(set[i]));
        if (fit_conic(geo, pts)) out.push_back(set[skip]);
    }
    return out;
}

/// No three collinear and q+2 points.
inline bool is_plane_hyperoval(const PlaneGeometry& geo, const IndexList& set)
{
    if (set.size() != geo.field().q() + 2) return false;
    std::vector<bool> in(geo.size(), false);
    for (auto p : set) in[p] = true;
    for (std::uint32_t l = 0; l < geo.size(); ++l) {
        std::size_t c = 0;
        for (auto p : geo.line_points(l)) c += in[p];
        if (c != 0 && c != 2) return false;
    }
    return true;
}

/// Through every point off the hyperoval some line meets X in exactly two points.
inline bool help1_holds(const PlaneGeometry& geo, const IndexList& hyperoval, const IndexList& x)
{
    std::vector<bool> in_h(geo.size(), false), in_x(geo.size(), false);
    for (auto p : hyperoval) in_h[p] = true;
    for (auto p : x) in_x[p] = true;
    for (std::uint32_t p = 0; p < geo.size(); ++p) {
        if (in_h[p]) continue;
        bool found = false;
        for (auto l : geo.point_lines(p)) {
            std::size_t c = 0;
            for (auto r : geo.line_points(l)) c += in_x[r];
            if (c == 2) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

/// All hyperovals of PG(2,q) containing the arc x (|x| >= q-1), by brute force.
inline std::vector<IndexList> hyperoval_completions(const PlaneGeometry& geo, const IndexList& x)
{
    const std::size_t need = geo.field().q() + 2 - x.size();
    std::vector<IndexList> out;
    std::vector<bool> in(geo.size(), false);
    for (auto p : x) in[p] = true;
    // candidates: points on no secant of x
    IndexList cand;
    for (std::uint32_t p = 0; p < geo.size(); ++p) {
        if (in[p]) continue;
        bool ok = true;
        for (auto l : geo.point_lines(p)) {
            std::size_t c = 0;
            for (auto r : geo.line_points(l)) c += in[r];
            if (c >= 2) {
                ok = false;
                break;
            }
        }
        if (ok) cand.push_back(p);
    }
    IndexList pick;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (pick.size() == need) {
            IndexList h = x;
            h.insert(h.end(), pick.begin(), pick.end());
            std::sort(h.begin(), h.end());
            if (is_plane_hyperoval(geo, h)) out.push_back(h);
            return;
        }
        for (std::size_t i = start; i < cand.size(); ++i) {
            pick.push_back(cand[i]);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

/// Every plane meeting H in q+2 points is a regular hyperoval whose unique
/// special point lies in Q- \ O, and the special points fill Q- \ O. q >= 8.
inline Check regular_sections_check(const EllipticSolid& s, const PointSet& h, const Ovoid& o, int jobs = 0)
{
    const KleinModel& m = s.model();
    if (m.q() < 8) throw std::invalid_argument("regular_sections_check: requires q >= 8");
    const auto& geo = m.plane_geometry();
    const std::size_t np = m.planes().size();
    std::vector<std::int64_t> special(np, -2);  // -2: not a hyperoval plane, -1: bad
    parallel_for(jobs, np, [&](std::size_t p) {
        const auto& pts = m.planes()[p].points;
        IndexList loc;
        for (std::uint32_t i = 0; i < pts.size(); ++i)
            if (h.contains(pts[i])) loc.push_back(i);
        if (loc.size() != m.q() + 2) return;
        auto sp = conic_deletion_points(geo, loc);
        special[p] = sp.size() == 1 ? static_cast<std::int64_t>(pts[sp[0]]) : -1;
    });
    std::vector<bool> expected(m.num_points(), false);
    for (auto b : s.base_points())
        if (!o.contains(b)) expected[*s.model_index(b)] = true;
    Check c{"regular hyperoval sections with special point in Q- \\ O", true, {}, {}, {}};
    std::set<std::uint32_t> seen;
    std::uint64_t planes = 0;
    for (std::uint32_t p = 0; p < np; ++p) {
        if (special[p] == -2) continue;
        ++planes;
        if (special[p] < 0 || !expected[static_cast<std::size_t>(special[p])]) {
            if (c.passed) {
                c.passed = false;
                c.detail = "plane " + std::to_string(p) + (special[p] < 0 ? " has no unique conic-deletion point"
                                                                          : " has its special point outside Q- \\ O");
                c.witness = {p};
            }
            continue;
        }
        seen.insert(static_cast<std::uint32_t>(special[p]));
    }
    std::size_t want = static_cast<std::size_t>(std::count(expected.begin(), expected.end(), true));
    if (c.passed && seen.size() != want) {
        c.passed = false;
        c.detail = "special points cover " + std::to_string(seen.size()) + " of " + std::to_string(want) +
                   " points of Q- \\ O";
    }
    c.counts = {{"hyperoval planes", planes}, {"special points", seen.size()}};
    return c;
}

// --------------------------------------------------- construction steps

/// The nine intermediate claims behind H_O being a hyperoval, checked on
/// the actual sets.
inline std::vector<Check> theorem_steps(const EllipticSolid& s, const Ovoid& o, const PointSet& h)
{
    const KleinModel& m = s.model();
    const Field& f = m.field();
    const std::size_t q = m.q();
    const auto& pg = m.space();
    std::vector<Check> out;

    std::vector<std::int8_t> role(m.num_points(), 0);  // 1: O ∩ Q-, 2: Q- \ O, 3: in some C_x
    for (auto b : s.base_points()) role[*s.model_index(b)] = o.contains(b) ? 1 : 2;

    Check s1 = make_check("step 1: T_y ∩ Π = π_x for y in C_x", true);
    Check s2 = make_check("step 2: C_x disjoint from Q-", true);
    Check s3 = make_check("step 3: T_y ∩ Π is secant with nucleus x", true);
    Check s4 = make_check("step 4: the C_x are pairwise disjoint", true);
    std::size_t off_base = 0, union_size = 0;
    for (auto x : o.points) {
        if (s.on_base(x)) continue;
        ++off_base;
        Vec<6> x6 = s.point6(x);
        Subspace<6> pix = pg.meet(s.solid(), pg.hyperplane_from_linear_form(m.form().polar_form(f, x6)));
        auto cx = conic_c_x(s, x);
        for (auto y : cx) {
            if (role[y] == 1 || role[y] == 2) {
                s2.passed = false;
                s2.witness = {x, y};
            }
            if (role[y] == 3) {
                s4.passed = false;
                s4.witness = {x, y};
            }
            role[y] = 3;
            ++union_size;
            Subspace<6> ty = pg.meet(s.solid(), tangent_hyperplane(pg, m.form(), m.point(y)));
            if (!(ty == pix)) {
                s1.passed = false;
                s1.witness = {x, y};
            }
            auto sec = conic_of_plane_section(m.plane_geometry(), m.form(), ty);
            if (sec.kind != SectionKind::conic || sec.conic->nucleus != normalize(f, x6)) {
                s3.passed = false;
                s3.witness = {x, y};
            }
        }
    }
    s4.counts = {{"union", union_size}, {"expected", off_base * (q + 1)}};
    if (union_size != off_base * (q + 1)) s4.passed = false;
    out.push_back(s1);
    out.push_back(s2);
    out.push_back(s3);
    out.push_back(s4);

    const std::size_t inter = o.base_intersection;
    Check s5 = make_check("step 5: |H| = ((q^2+1) - |O ∩ Q-|)(q+2)", h.size() == (q * q + 1 - inter) * (q + 2));
    s5.counts = {{"size", h.size()}, {"expected", (q * q + 1 - inter) * (q + 2)}};
    out.push_back(s5);

    Check s6 = make_check("step 6: planes through O ∩ Q- miss H", true);
    Check s9 = make_check("step 9: planes through Q- \\ O meet H in a hyperoval", true);
    for (std::uint32_t p = 0; p < m.planes().size(); ++p) {
        const auto& pts = m.planes()[p].points;
        bool has1 = false, has2 = false;
        IndexList loc;
        for (std::uint32_t i = 0; i < pts.size(); ++i) {
            has1 |= role[pts[i]] == 1;
            has2 |= role[pts[i]] == 2;
            if (h.contains(pts[i])) loc.push_back(i);
        }
        if (has1 && !loc.empty() && s6.passed) {
            s6.passed = false;
            s6.witness = {p};
        }
        if (has2 && !is_plane_hyperoval(m.plane_geometry(), loc) && s9.passed) {
            s9.passed = false;
            s9.witness = {p};
        }
    }

    Check s7 = make_check("step 7: lines missing Q- carry at most two points of H", true);
    Check s8 = make_check("step 8: lines through u in Q- \\ O carry one point of the C_x besides u", true);
    const auto& lines = m.lines();
    for (std::uint32_t l = 0; l < lines.size(); ++l) {
        auto pts = m.line_points(lines[l]);
        std::size_t base = 0, minus = 0, hc = 0, cx = 0;
        for (auto p : pts) {
            base += role[p] == 1 || role[p] == 2;
            minus += role[p] == 2;
            hc += h.contains(p);
            cx += role[p] == 3;
        }
        if (base == 0 && hc > 2 && s7.passed) {
            s7.passed = false;
            s7.witness = pts;
        }
        if (minus == 1 && cx != 1 && s8.passed) {
            s8.passed = false;
            s8.witness = pts;
        }
    }
    out.push_back(s6);
    out.push_back(s7);
    out.push_back(s8);
    out.push_back(s9);
    return out;
}

// ------------------------------------------------------------ kernel span

enum class ScanLevel { exhaustive, classes, sample };

inline std::string to_string(ScanLevel s)
{
    switch (s) {
    case ScanLevel::exhaustive: return "exhaustive";
    case ScanLevel::classes: return "classes";
    case ScanLevel::sample: return "sample";
    }
    return "?";
}

struct UPlane {
    Subspace<6> plane;
    Vec<6> kernel{};
};

struct KernelSpan {
    std::vector<UPlane> u;
    Subspace<6> k;
    std::string coverage;
    std::uint64_t scanned = 0;
    std::uint64_t sampled = 0;
    bool pi_in_k = false;
};

/// If π ∩ Q+ is an irreducible conic lying inside H, its nucleus.
inline std::optional<Vec<6>> u_kernel(const KleinModel& m, const PointSet& h, const Subspace<6>& plane)
{
    const Field& f = m.field();
    auto basis = plane_basis(plane);
    TernaryForm t = section_form(f, m.form(), basis);
    Vec<3> n = t.nucleus();
    if (is_zero(n) || t.evaluate(f, n) == 0) return std::nullopt;
    for (const auto& c : m.plane_geometry().points())
        if (t.evaluate(f, c) == 0 && !h.contains(m.index_or_throw(combine(f, basis, c)))) return std::nullopt;
    return normalize(f, combine(f, basis, n));
}

/// Default scan level per q: exhaustive up to q = 4, structured classes plus
/// a random sample above.
inline ScanLevel default_scan(unsigned q) { return q <= 4 ? ScanLevel::exhaustive : ScanLevel::sample; }

/// U = planes π of PG(5,q) with π ∩ Q+ = π ∩ H an irreducible conic, and K
/// the span of their nuclei. exhaustive scans every plane; classes scans the
/// planes through L* and the planes of Π; sample adds `samples` seeded
/// uniform random planes to the classes.
inline KernelSpan kernel_span(const EllipticSolid& s, const PointSet& h, ScanLevel level, std::uint64_t seed = 0,
                              std::uint64_t samples = 100000)
{
    const KleinModel& m = s.model();
    const auto& pg = m.space();
    KernelSpan ks;
    std::set<std::vector<Vec<6>>> seen;
    auto consider = [&](const Subspace<6>& pl) {
        ++ks.scanned;
        if (auto k = u_kernel(m, h, pl)) {
            if (!seen.insert(pl.basis()).second) return;
            ks.u.push_back({pl, *k});
            if (!ks.k.contains(m.field(), *k)) ks.k = pg.span(ks.k, *k);
        }
    };
    if (level == ScanLevel::exhaustive) {
        pg.for_each_subspace(2, consider);
        ks.coverage = "exhaustive";
    } else {
        pg.for_each_subspace_through(s.polar_line(), 2, consider);
        pg.for_each_subspace_between(Subspace<6>::empty(), s.solid(), 2, consider);
        ks.coverage = "classes";
        if (level == ScanLevel::sample) {
            std::mt19937_64 rng(seed);
            for (std::uint64_t i = 0; i < samples; ++i) consider(pg.random_subspace(2, rng));
            ks.sampled = samples;
            ks.coverage = "classes+sample(partial)";
        }
    }
    ks.pi_in_k = !ks.k.is_empty() && ks.k.contains(m.field(), s.solid());
    return ks;
}

/// The structural claims about U: membership of planes through L* (U1),
/// planes meeting L* in a point (U2), planes off L* (U3-U5), U planes
/// avoiding O on Q- (help4), Π ⊆ K and, for nonclassical O, K = Π.
inline std::vector<Check> kernel_span_checks(const EllipticSolid& s, const Ovoid& o, const KernelSpan& ks,
                                             bool classical)
{
    const KleinModel& m = s.model();
    const Field& f = m.field();
    const auto& pg = m.space();
    const unsigned q = m.q();
    std::vector<Check> out;

    std::set<std::vector<Vec<6>>> predicted;
    for (auto x : o.points)
        if (!s.on_base(x)) predicted.insert(pg.span(s.polar_line(), s.point6(x)).basis());
    std::set<std::vector<Vec<6>>> found;
    std::vector<bool> minus(s.num_points(), false);  // Q- \ O
    for (auto b : s.base_points()) minus[b] = !o.contains(b);
    Check u2 = make_check("no U plane meets L* in a single point", true);
    Check u3 = make_check("no U plane misses both Q- \\ O and L*", true);
    Check u45 = make_check("no U plane off L* meets Q- \\ O in one or two points", true);
    Check h4 = make_check("U planes meet Q- only outside O", true);
    std::uint64_t in_pi = 0, other = 0;
    for (std::uint32_t i = 0; i < ks.u.size(); ++i) {
        const auto& pl = ks.u[i].plane;
        auto meet_l = pg.meet(pl, s.polar_line());
        std::size_t on_minus = 0;
        auto in_solid = pg.meet(pl, s.solid());
        if (!in_solid.is_empty())
            for (const auto& p : pg.enumerate_points(in_solid)) {
                if (m.evaluate(p) != 0) continue;
                auto loc = *s.local_index6(p);
                on_minus += minus[loc];
                if (o.contains(loc) && h4.passed) {
                    h4.passed = false;
                    h4.witness = {i};
                }
            }
        if (meet_l.rank() == 2) {
            found.insert(pl.basis());
            continue;
        }
        if (meet_l.rank() == 1) {
            if (u2.passed) {
                u2.passed = false;
                u2.witness = {i};
            }
            continue;
        }
        s.solid().contains(f, pl) ? ++in_pi : ++other;
        if (on_minus == 0 && u3.passed) {
            u3.passed = false;
            u3.witness = {i};
        }
        if ((on_minus == 1 || on_minus == 2) && u45.passed) {
            u45.passed = false;
            u45.witness = {i};
        }
    }
    Check u1 = make_check("planes through L* in U are exactly <L*, x>, x in O \\ Q-", found == predicted);
    u1.counts = {{"found", found.size()}, {"predicted", predicted.size()}};
    u45.counts = {{"inside Π", in_pi}, {"elsewhere", other}};
    out.push_back(u1);
    if (q >= 8) out.push_back(u2);
    if (!classical) out.push_back(u3);
    if (q >= 8) out.push_back(u45);
    out.push_back(h4);
    Check e10 = make_check("Π is contained in K", ks.pi_in_k);
    e10.counts = {{"dim K", static_cast<std::uint64_t>(std::max(ks.k.projdim(), 0))}};
    out.push_back(e10);
    if (!classical) out.push_back(make_check("K = Π", ks.k == s.solid()));
    return out;
}

// -------------------------------------------------------------- recovery

/// O = (Q- \ X1) ∪ X2 with X1 = K ∩ H and X2 the projection of H \ K from
/// K^ζ onto K, for a solid K meeting Q+ in an elliptic quadric (K must be Π).
inline Ovoid recover_from_solid(const EllipticSolid& s, const PointSet& h, const Subspace<6>& k)
{
    const KleinModel& m = s.model();
    const auto& pg = m.space();
    if (k.projdim() != 3) throw std::domain_error("recover_ovoid: K is not a solid");
    if (!(k == s.solid())) throw std::logic_error("recover_ovoid: K differs from Π");
    Subspace<6> kz = polar_subspace(pg, m.form(), k);
    IndexList pts;
    std::vector<bool> x1(s.num_points(), false);
    for (auto i : h.indices()) {
        const Vec<6>& p = m.point(i);
        if (k.contains(m.field(), p))
            x1[*s.local_index6(p)] = true;
        else
            pts.push_back(*s.local_index6(pg.project_from(kz, p, k)));
    }
    for (auto b : s.base_points())
        if (!x1[b]) pts.push_back(b);
    Ovoid o = make_ovoid(s, OvoidKind::other, std::move(pts));
    if (auto l = recognize_classical(s, o.points)) {
        o.kind = OvoidKind::classical;
        o.b = *l;
    }
    return o;
}

inline Ovoid recover_ovoid(const EllipticSolid& s, const PointSet& h, const KernelSpan& ks)
{
    if (ks.k.projdim() != 3) throw std::domain_error("recover_ovoid: dim K is not 3");
    return recover_from_solid(s, h, ks.k);
}

/// Solid spanned by the special points of the regular hyperoval sections of H
/// (q >= 8); nullopt when they do not span a solid.
inline std::optional<Subspace<6>> special_points_solid(const KleinModel& m, const PointSet& h)
{
    if (m.q() < 8) return std::nullopt;
    const auto& geo = m.plane_geometry();
    Subspace<6> span;
    for (const auto& pl : m.planes()) {
        IndexList loc;
        for (std::uint32_t i = 0; i < pl.points.size(); ++i)
            if (h.contains(pl.points[i])) loc.push_back(i);
        if (loc.size() != m.q() + 2) continue;
        auto sp = conic_deletion_points(geo, loc);
        if (sp.size() != 1) return std::nullopt;
        const Vec<6>& p = m.point(pl.points[sp[0]]);
        if (!span.contains(m.field(), p)) span = m.space().span(span, p);
    }
    if (span.projdim() != 3) return std::nullopt;
    return span;
}

enum class RecoveryRoute { kernel_span, special_points, known_solid };

inline std::string to_string(RecoveryRoute r)
{
    switch (r) {
    case RecoveryRoute::kernel_span: return "kernel-span";
    case RecoveryRoute::special_points: return "special-points";
    case RecoveryRoute::known_solid: return "known-solid";
    }
    return "?";
}

struct Recovery {
    Ovoid ovoid;
    RecoveryRoute route = RecoveryRoute::known_solid;
    int dim_k = -1;
};

/// Recovers O from H: through K when it is a solid, otherwise through the
/// special points of regular sections (q >= 8), otherwise from Π itself.
/// ks may be null to skip the kernel-span route.
inline Recovery recover_ovoid_from(const EllipticSolid& s, const PointSet& h, const KernelSpan* ks)
{
    Recovery r;
    if (ks) {
        r.dim_k = ks->k.projdim();
        if (r.dim_k == 3) {
            r.ovoid = recover_ovoid(s, h, *ks);
            r.route = RecoveryRoute::kernel_span;
            return r;
        }
    }
    if (auto sp = special_points_solid(s.model(), h)) {
        r.ovoid = recover_from_solid(s, h, *sp);
        r.route = RecoveryRoute::special_points;
        return r;
    }
    r.ovoid = recover_from_solid(s, h, s.solid());
    r.route = RecoveryRoute::known_solid;
    return r;
}

inline Recovery recover_ovoid_auto(const EllipticSolid& s, const PointSet& h, ScanLevel level, std::uint64_t seed = 0)
{
    KernelSpan ks = kernel_span(s, h, level, seed);
    return recover_ovoid_from(s, h, &ks);
}

// --------------------------------------------------------- classification

struct OrbitCount {
    std::size_t n = 0;
    std::vector<elem> representatives;  // orbit minima, ascending
};

/// Orbits of x -> x^2 on the nonzero trace-zero elements.
inline OrbitCount orbit_count_trace_zero(const Field& f)
{
    OrbitCount oc;
    for (unsigned a = 1; a < f.q(); ++a) {
        elem e = static_cast<elem>(a);
        if (f.trace(e) != 0) continue;
        elem mn = e;
        for (int k = 1; k < f.h(); ++k) mn = std::min(mn, f.frobenius(e, k));
        if (mn == e) oc.representatives.push_back(e);
    }
    oc.n = oc.representatives.size();
    return oc;
}

inline elem frobenius_orbit_min(const Field& f, elem e)
{
    elem mn = e;
    for (int k = 1; k < f.h(); ++k) mn = std::min(mn, f.frobenius(e, k));
    return mn;
}

struct ClassTuple {
    unsigned q = 0;
    std::size_t i = 0;
    std::optional<elem> rep;  // none: tangent class

    std::string to_string() const
    {
        return "(" + std::to_string(q) + ", " + std::to_string(i) + ", " + (rep ? to_hex(*rep) : "tangent") + ")";
    }
    friend auto operator<=>(const ClassTuple&, const ClassTuple&) = default;
};

/// The frame carrying Q- to Y1Y2 + Y3^2 + Y3Y4 + δY4^2 and the secant plane
/// l = 0 to Y4 = 0, built from the two lexicographically first conic points.
inline Mat4 canonical_secant_frame(const EllipticSolid& s, const Vec<4>& l)
{
    const Field& f = s.field();
    const auto& q0 = s.frame_form();
    IndexList conic;
    for (auto b : s.base_points())
        if (dot(f, l, s.point(b)) == 0) conic.push_back(b);
    if (conic.size() != s.q() + 1) throw std::domain_error("canonical_secant_frame: plane is not secant");
    const Vec<4>& u1 = s.point(conic[0]);
    const Vec<4>& u2 = s.point(conic[1]);
    auto w3 = null_space<4>(f, {l, q0.polar_form(f, u1), q0.polar_form(f, u2)});
    if (w3.size() != 1) throw std::logic_error("canonical_secant_frame: P ∩ <e1,e2>^perp is not a point");
    auto mtx = elliptic_frame(f, q0, u1, u2, w3[0], f.delta_trace_one());
    if (!mtx) throw std::logic_error("canonical_secant_frame: frame completion failed");
    return *mtx;
}

/// (q, |O ∩ Q-|, Frobenius-orbit minimum of the canonical parameter) for a
/// classical ovoid; the parameter is "tangent" when |O ∩ Q-| = 1.
inline ClassTuple classify_classical(const EllipticSolid& s, const Ovoid& o)
{
    if (o.kind == OvoidKind::base) throw std::invalid_argument("classify_classical: O is Q- itself");
    auto l = recognize_classical(s, o.points);
    if (!l) throw std::invalid_argument("classify_classical: O is not classical");
    const Field& f = s.field();
    ClassTuple t{s.q(), o.base_intersection, std::nullopt};
    if (t.i == 1) return t;
    Mat4 mtx = canonical_secant_frame(s, *l);
    elem c = dot(f, *l, column(mtx, 3));
    t.rep = frobenius_orbit_min(f, f.square(c));
    return t;
}

struct ClassSweep {
    std::map<ClassTuple, std::uint64_t> classes;  // tuple -> number of b
    std::uint64_t elliptic = 0;
    std::uint64_t non_elliptic = 0;
};

/// Classifies the classical ovoid of every nonzero b in F_q^4.
inline ClassSweep classify_sweep(const EllipticSolid& s, int jobs = 0)
{
    const Field& f = s.field();
    const std::uint64_t q = f.q();
    const std::uint64_t n = q * q * q * q;
    std::vector<std::optional<ClassTuple>> res(n);
    parallel_for(jobs, n - 1, [&](std::size_t i) {
        std::uint64_t v = i + 1;
        Vec<4> b{};
        for (std::size_t k = 4; k-- > 0;) {
            b[k] = static_cast<elem>(v % q);
            v /= q;
        }
        try {
            res[i] = classify_classical(s, classical_ovoid(s, b));
        } catch (const std::domain_error&) {
        }
    });
    ClassSweep cs;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (res[i]) {
            ++cs.elliptic;
            ++cs.classes[*res[i]];
        } else {
            ++cs.non_elliptic;
        }
    }
    return cs;
}

enum class Isomorphism { yes, no, undecided };

inline std::string to_string(Isomorphism i)
{
    switch (i) {
    case Isomorphism::yes: return "isomorphic";
    case Isomorphism::no: return "not-isomorphic";
    case Isomorphism::undecided: return "undecided-by-search";
    }
    return "?";
}

/// Searches the stabilizer of Q- in PGammaL(4,q) for an element mapping O1 to O2.
inline std::optional<Collineation> find_stabilizer_map(const EllipticSolid& s, const IndexList& o1, const IndexList& o2)
{
    const Field& f = s.field();
    std::vector<bool> in2(s.num_points(), false);
    for (auto p : o2) in2[p] = true;
    std::optional<Collineation> hit;
    for_each_quadric_stabilizer(f, s.frame_form(), [&](const Collineation& g) {
        for (auto p : o1)
            if (!in2[s.local_index(g.apply(f, s.point(p)))]) return true;
        hit = g;
        return false;
    });
    return hit;
}

/// Whether some collineation of Π stabilizing Q- maps O1 to O2.
inline Isomorphism are_isomorphic(const EllipticSolid& s, const Ovoid& o1, const Ovoid& o2, unsigned search_limit = 8)
{
    if (o1.points == o2.points) return Isomorphism::yes;
    if (o1.base_intersection != o2.base_intersection) return Isomorphism::no;
    bool c1 = recognize_classical(s, o1.points).has_value();
    bool c2 = recognize_classical(s, o2.points).has_value();
    if (c1 != c2) return Isomorphism::no;
    if (c1) return classify_classical(s, o1) == classify_classical(s, o2) ? Isomorphism::yes : Isomorphism::no;
    if (s.q() > search_limit) return Isomorphism::undecided;
    return find_stabilizer_map(s, o1.points, o2.points) ? Isomorphism::yes : Isomorphism::no;
}

}  // namespace hyperoval

#endif  // HYPEROVAL_ANALYSIS_HPP
