// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <iostream>
#include <map>
#include <memory>
#include <random>
#include <sstream>

#include "hyperoval/analysis.hpp"

using namespace hyperoval;

namespace {

struct Level {
    std::unique_ptr<KleinModel> m;
    std::unique_ptr<EllipticSolid> s;
    std::map<std::size_t, Ovoid> classical;  // by |O ∩ Q-|
};

Level& level(int h)
{
    static std::map<int, Level> cache;
    Level& l = cache[h];
    if (!l.m) {
        l.m = std::make_unique<KleinModel>(Field::standard(h));
        l.s = std::make_unique<EllipticSolid>(*l.m);
        const std::uint64_t q = l.s->q();
        for (std::uint64_t v = 1; v < q * q * q * q && l.classical.size() < (q == 2 ? 1u : 2u); ++v) {
            Vec<4> b{};
            for (std::size_t k = 4, t = v; k-- > 0; t /= q) b[k] = static_cast<elem>(t % q);
            try {
                Ovoid o = classical_ovoid(*l.s, b);
                l.classical.try_emplace(o.base_intersection, std::move(o));
            } catch (const std::domain_error&) {
            }
        }
    }
    return l;
}

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            note.str("");
            note << "first failure: " << what;
        }
    }
};

void report(int n, const std::string& title, Outcome& o, double secs, bool& all)
{
    std::cout << "criterion " << n << " [" << (o.ok ? "PASS" : "FAIL") << "] " << title;
    std::cout.precision(1);
    if (secs >= 0)
        std::cout << " (" << std::fixed << secs << " s)";
    else
        std::cout << " (timed with criterion 1)";
    if (!o.note.str().empty()) std::cout << ": " << o.note.str();
    std::cout << std::endl;
    all = all && o.ok;
}

bool hyperoval_ok(const KleinModel& m, const PointSet& h) { return verify_hyperoval(m, h).passed(); }

// ------------------------------------------------------------------ 1, 2, 3

void sizes_and_properties(Outcome& c1, Outcome& c2, Outcome& c3)
{
    const std::map<unsigned, std::vector<std::size_t>> want{
        {2, {16}}, {4, {96, 72}}, {8, {640, 560}}, {16, {4608, 4320}}};
    std::ostringstream sizes;
    std::uint64_t lambdas = 0, lines = 0;
    for (int h : {1, 2, 3, 4}) {
        Level& l = level(h);
        const KleinModel& m = *l.m;
        const EllipticSolid& s = *l.s;
        const unsigned q = m.q();
        sizes << "q=" << q << ":";
        lines += m.lines().size();
        if (q == 2) {
            PointSet h2 = h_q2_complement(m);
            c1.require(h2.size() == 16, "q=2 complement size");
            c2.require(hyperoval_ok(m, h2), "q=2 complement");
            sizes << " " << h2.size();
        }
        std::size_t k = 0;
        for (auto i : q == 2 ? std::vector<std::size_t>{1} : std::vector<std::size_t>{1, q + 1}) {
            auto it = l.classical.find(i);
            c1.require(it != l.classical.end(), "classical ovoid with |O ∩ Q-| = " + std::to_string(i));
            if (it == l.classical.end()) continue;
            PointSet h = h_from_ovoid(s, it->second);
            if (q != 2) {
                c1.require(h.size() == want.at(q)[k], "|H_O| at q=" + std::to_string(q));
                sizes << " " << h.size();
            }
            ++k;
            c2.require(hyperoval_ok(m, h), "H_O at q=" + std::to_string(q));
            c3.require(plane_disjointness_check(s, h, it->second).passed, "disjoint planes at q=" + std::to_string(q));
        }
        if (q >= 4) {
            for (unsigned lam = 1; lam < q; ++lam) {
                PointSet hl = h_lambda(s, static_cast<elem>(lam));
                c1.require(hl.size() == std::size_t(q) * q * (q + 2), "|H_lambda|");
                c2.require(hyperoval_ok(m, hl), "H_lambda at q=" + std::to_string(q));
                ++lambdas;
            }
        }
        sizes << "; ";
    }
    if (c1.ok) c1.note << sizes.str() << "all sets line-scanned";
    if (c2.ok) c2.note << lambdas << " H_lambda and every H_O; " << lines << " quadric lines per pass over q=2..16";
    if (c3.ok) c3.note << "all planes of Q+(5,q), q=2..16";
}

// ------------------------------------------------------------------ 4

void classification(Outcome& c)
{
    const std::vector<std::size_t> classes{1, 2, 2, 4}, orbits{0, 1, 1, 3};
    std::ostringstream note;
    for (int h : {1, 2, 3, 4}) {
        Level& l = level(h);
        auto oc = orbit_count_trace_zero(l.m->field());
        auto cs = classify_sweep(*l.s);
        const auto k = static_cast<std::size_t>(h - 1);
        c.require(oc.n == orbits[k], "trace-zero orbits at q=" + std::to_string(l.m->q()));
        c.require(cs.classes.size() == classes[k], "class count at q=" + std::to_string(l.m->q()));
        note << "q=" << l.m->q() << ": " << cs.classes.size() << " classes, N=" << oc.n << "; ";
    }
    if (c.ok) c.note << note.str();
}

// ------------------------------------------------------------------ 5

void cross_construction(Outcome& c)
{
    std::uint64_t rows = 0;
    for (int h : {2, 3}) {
        Level& l = level(h);
        const KleinModel& m = *l.m;
        const EllipticSolid& s = *l.s;
        for (unsigned lam = 1; lam < m.q(); ++lam) {
            const elem e = static_cast<elem>(lam);
            const std::string tag = "q=" + std::to_string(m.q()) + " lambda=" + to_hex(e);
            PointSet x = eq1_point_set(m, e, s.omega());
            PointSet from_eq1 = sc_hyperoval(m, sc_decompose(m, x), x);
            PointSet hl = h_lambda(s, e);
            auto level = m.q() <= 4 ? ScanLevel::exhaustive : ScanLevel::classes;
            Recovery r = recover_ovoid_auto(s, hl, level);
            c.require(from_eq1 == hl, "eq1 route differs from h_lambda at " + tag);
            c.require(h_from_ovoid(s, r.ovoid) == hl, "h_from_ovoid(recovered) differs at " + tag);
            ++rows;
        }
    }
    if (c.ok) c.note << rows << " (q, lambda) pairs, equal as index sets";
}

// ------------------------------------------------------------------ 6

void tits(Outcome& c)
{
    Level& l = level(3);
    const KleinModel& m = *l.m;
    const EllipticSolid& s = *l.s;
    Ovoid o = tits_ovoid(s);
    c.require(validate_ovoid(s, o).ok, "Tits ovoid is not an ovoid of W(8)");
    PointSet h = h_from_ovoid(s, o);
    c.require(hyperoval_ok(m, h), "H_O is not a hyperoval");
    c.require(plane_disjointness_check(s, h, o).passed, "disjoint planes");
    const std::size_t i = o.base_intersection;
    c.require(i <= 28, "|O ∩ Q-| exceeds 28");
    c.require(h.size() == (65 - i) * 10, "size formula");
    auto ks = kernel_span(s, h, ScanLevel::sample, 0, 100000);
    c.require(ks.k == s.solid(), "K differs from Π");
    Recovery r = recover_ovoid_from(s, h, &ks);
    c.require(r.ovoid.points == o.points, "recovery round-trip");
    if (c.ok)
        c.note << "|O ∩ Q-|=" << i << ", |H|=" << h.size() << ", K = Π from " << ks.scanned
               << " planes (" << ks.sampled << " sampled), route " << to_string(r.route);
}

// ------------------------------------------------------------------ 7

void property_suites(Outcome& c)
{
    std::mt19937_64 rng(7);
    std::uint64_t cases = 0;
    // field axioms, trace counts, Artin-Schreier
    for (int h : {1, 2, 3, 4, 5}) {
        const Field& f = Field::standard(h);
        const unsigned q = f.q();
        unsigned zero_trace = 0;
        for (unsigned a = 0; a < q; ++a) {
            const elem x = static_cast<elem>(a);
            zero_trace += f.trace(x) == 0;
            if (x) c.require(f.mul(x, f.inv(x)) == 1, "inverse");
            bool root = false;
            for (unsigned b = 0; b < q; ++b) {
                const elem y = static_cast<elem>(b);
                root |= (f.square(y) ^ y) == x;
                c.require(f.mul(x, y) == f.mul(y, x), "commutativity");
                if (q <= 8)
                    for (unsigned d = 0; d < q; ++d) {
                        const elem z = static_cast<elem>(d);
                        c.require(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)), "associativity");
                        c.require(f.mul(x, y ^ z) == (f.mul(x, y) ^ f.mul(x, z)), "distributivity");
                        ++cases;
                    }
            }
            c.require(root == (f.trace(x) == 0), "Artin-Schreier criterion");
        }
        if (q > 8) {
            std::uniform_int_distribution<unsigned> d(0, q - 1);
            for (int t = 0; t < 100000; ++t, ++cases) {
                elem x = static_cast<elem>(d(rng)), y = static_cast<elem>(d(rng)), z = static_cast<elem>(d(rng));
                c.require(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)), "associativity");
                c.require(f.mul(x, y ^ z) == (f.mul(x, y) ^ f.mul(x, z)), "distributivity");
            }
        }
        c.require(zero_trace == q / 2, "trace count");
    }
    // nucleus concurrency on the conic sections of Π
    for (int h : {2, 3, 4}) {
        Level& l = level(h);
        const KleinModel& m = *l.m;
        const Field& f = m.field();
        l.s->space().for_each_subspace(2, [&](const Subspace<4>& p4) {
            std::vector<Vec<6>> gens;
            for (const auto& b : p4.basis()) gens.push_back(l.s->from_frame(b));
            auto sec = conic_of_plane_section(m.plane_geometry(), m.form(), Subspace<6>(f, gens));
            if (sec.kind != SectionKind::conic) return;
            const auto& nuc = sec.conic->nucleus;
            for (const auto& p : sec.points) {
                auto t = m.space().span(m.space().point(nuc), p);
                std::size_t on = 0;
                for (const auto& r : sec.points) on += t.contains(f, r);
                c.require(on == 1, "tangent through nucleus is not a tangent");
                ++cases;
            }
        });
    }
    // modular dimension law
    for (int h : {1, 2, 3}) {
        ProjectiveSpace<6> pg(Field::standard(h));
        std::uniform_int_distribution<int> dim(0, 5);
        for (int t = 0; t < 1000; ++t, ++cases) {
            auto u = pg.random_subspace(dim(rng), rng), w = pg.random_subspace(dim(rng), rng);
            c.require(pg.meet(u, w).projdim() + pg.span(u, w).projdim() == u.projdim() + w.projdim(), "modular law");
        }
    }
    // (SC) size identities
    for (int h : {2, 3}) {
        Level& l = level(h);
        const KleinModel& m = *l.m;
        for (unsigned lam = 1; lam < m.q(); ++lam) {
            PointSet x = eq1_point_set(m, static_cast<elem>(lam), l.s->omega());
            auto d = sc_decompose(m, x);
            c.require(sc_size_identities(m, d, x, sc_hyperoval(m, d, x)), "(SC) size identities (eq1)");
            ++cases;
        }
        for (const auto& [i, o] : l.classical) {
            PointSet x = sc_set_from_ovoid(*l.s, o);
            auto d = sc_decompose(m, x);
            c.require(sc_size_identities(m, d, x, sc_hyperoval(m, d, x)), "(SC) size identities (ovoid)");
            ++cases;
        }
    }
    if (c.ok) c.note << cases << " cases, 0 counterexamples";
}

template <class F>
void timed(int n, const std::string& title, F fn, bool& all)
{
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        fn(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    report(n, title, o, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), all);
}

}  // namespace

int main()
{
    bool all = true;
    Outcome c1, c2, c3;
    auto t0 = std::chrono::steady_clock::now();
    try {
        sizes_and_properties(c1, c2, c3);
    } catch (const std::exception& e) {
        c1.require(false, std::string("exception: ") + e.what());
        c2.require(false, "not run");
        c3.require(false, "not run");
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(1, "hyperoval sizes q=2..16", c1, secs, all);
    report(2, "hyperoval property of every H_lambda and H_O", c2, -1, all);
    report(3, "disjoint planes are those through O ∩ Q-", c3, -1, all);
    timed(4, "classification counts", classification, all);
    timed(5, "cross-construction equality q=4,8", cross_construction, all);
    timed(6, "Tits ovoid at q=8", tits, all);
    timed(7, "property suites", property_suites, all);
    std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
    return all ? 0 : 1;
}
