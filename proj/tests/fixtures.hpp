#ifndef HYPEROVAL_TEST_FIXTURES_HPP
#define HYPEROVAL_TEST_FIXTURES_HPP

#include <array>
#include <memory>
#include <mutex>
#include <random>

#include "hyperoval/analysis.hpp"

namespace hyperoval::test {

// Models are expensive; build each at most once per test process.
inline const KleinModel& klein(int h)
{
    static std::array<std::unique_ptr<KleinModel>, 6> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache.at(static_cast<std::size_t>(h));
    if (!slot) slot = std::make_unique<KleinModel>(Field::standard(h));
    return *slot;
}

inline const EllipticSolid& solid(int h)
{
    static std::array<std::unique_ptr<EllipticSolid>, 6> cache;
    static std::mutex mu;
    const KleinModel& m = klein(h);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache.at(static_cast<std::size_t>(h));
    if (!slot) slot = std::make_unique<EllipticSolid>(m);
    return *slot;
}

inline int h_of(unsigned q)
{
    int h = 0;
    while ((1u << h) < q) ++h;
    return h;
}

/// b in F_q^4 from its base-q digits (most significant first).
inline Vec<4> b_from_int(unsigned q, std::uint64_t v)
{
    Vec<4> b{};
    for (std::size_t k = 4; k-- > 0;) {
        b[k] = static_cast<elem>(v % q);
        v /= q;
    }
    return b;
}

/// First classical ovoid (by b order) with the given intersection size.
inline Ovoid first_classical(const EllipticSolid& s, std::size_t intersection)
{
    const std::uint64_t q = s.q();
    for (std::uint64_t v = 1; v < q * q * q * q; ++v) {
        try {
            Ovoid o = classical_ovoid(s, b_from_int(s.q(), v));
            if (o.base_intersection == intersection) return o;
        } catch (const std::domain_error&) {
        }
    }
    throw std::logic_error("no classical ovoid with that intersection size");
}

template <std::size_t N>
Vec<N> random_vec(const Field& f, std::mt19937_64& rng)
{
    std::uniform_int_distribution<unsigned> d(0, f.q() - 1);
    Vec<N> v;
    for (auto& x : v) x = static_cast<elem>(d(rng));
    return v;
}

}  // namespace hyperoval::test

#endif
