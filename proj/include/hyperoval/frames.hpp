#ifndef HYPEROVAL_FRAMES_HPP
#define HYPEROVAL_FRAMES_HPP

// Semilinear maps of PG(3,q) and the coordinate frames used to normalize
// elliptic quadrics and symplectic polarities.

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gf2h.hpp"
#include "projspace.hpp"
#include "quadrics.hpp"

namespace hyperoval {

/// 4x4 matrix, row-major.
using Mat4 = std::array<Vec<4>, 4>;

inline Mat4 identity4()
{
    Mat4 m{};
    for (std::size_t i = 0; i < 4; ++i) m[i][i] = 1;
    return m;
}

/// Matrix whose columns are the given vectors.
inline Mat4 from_columns(const std::array<Vec<4>, 4>& cols)
{
    Mat4 m{};
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) m[r][c] = cols[c][r];
    return m;
}

inline Vec<4> column(const Mat4& m, std::size_t c) { return {m[0][c], m[1][c], m[2][c], m[3][c]}; }

inline Vec<4> apply(const Field& f, const Mat4& m, const Vec<4>& v)
{
    Vec<4> r{};
    for (std::size_t i = 0; i < 4; ++i) r[i] = dot(f, m[i], v);
    return r;
}

inline Mat4 multiply(const Field& f, const Mat4& a, const Mat4& b)
{
    Mat4 r{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            elem s = 0;
            for (std::size_t k = 0; k < 4; ++k) s ^= f.mul(a[i][k], b[k][j]);
            r[i][j] = s;
        }
    return r;
}

inline Mat4 frobenius(const Field& f, const Mat4& m, int k)
{
    Mat4 r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = frobenius(f, m[i], k);
    return r;
}

inline std::optional<Mat4> inverse(const Field& f, Mat4 a)
{
    Mat4 inv = identity4();
    for (std::size_t col = 0; col < 4; ++col) {
        std::size_t piv = col;
        while (piv < 4 && a[piv][col] == 0) ++piv;
        if (piv == 4) return std::nullopt;
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        elem s = f.inv(a[col][col]);
        a[col] = scale(f, s, a[col]);
        inv[col] = scale(f, s, inv[col]);
        for (std::size_t r = 0; r < 4; ++r)
            if (r != col && a[r][col] != 0) {
                elem c = a[r][col];
                a[r] = axpy(f, a[r], c, a[col]);
                inv[r] = axpy(f, inv[r], c, inv[col]);
            }
    }
    return inv;
}

/// x -> matrix * x^(2^frob), acting on PG(3,q).
struct Collineation {
    Mat4 matrix = identity4();
    int frob = 0;

    Vec<4> apply(const Field& f, const Vec<4>& v) const
    {
        return hyperoval::apply(f, matrix, frob ? frobenius(f, v, frob) : v);
    }

    /// (a ∘ b)(x) = a(b(x)).
    static Collineation compose(const Field& f, const Collineation& a, const Collineation& b)
    {
        return {multiply(f, a.matrix, frobenius(f, b.matrix, a.frob)), (a.frob + b.frob) % f.h()};
    }

    friend bool operator==(const Collineation& a, const Collineation& b)
    {
        return a.matrix == b.matrix && a.frob == b.frob;
    }
};

/// Y1Y2 + Y3^2 + Y3Y4 + delta Y4^2, the normal form of an elliptic quadric.
inline QuadraticForm<4> canonical_elliptic_form(elem delta)
{
    QuadraticForm<4> c;
    c.set_coeff(0, 1, 1);
    c.set_coeff(2, 2, 1);
    c.set_coeff(2, 3, 1);
    c.set_coeff(3, 3, delta);
    return c;
}

/// Completes (e1, u2, e3-direction) to a frame M (columns e1..e4) with
/// Q(M y) = canonical_elliptic_form(delta)(y).
///
/// e1 and u2 must be singular with B(e1,u2) != 0; w3 must be a nonzero
/// vector of <e1,u2>^perp. Returns nullopt when the data do not fit an
/// elliptic quadric.
inline std::optional<Mat4> elliptic_frame(const Field& f, const QuadraticForm<4>& q, const Vec<4>& e1,
                                          const Vec<4>& u2, const Vec<4>& w3, elem delta)
{
    if (q.evaluate(f, e1) != 0 || q.evaluate(f, u2) != 0) return std::nullopt;
    elem b12 = q.bilinear(f, e1, u2);
    if (b12 == 0) return std::nullopt;
    Vec<4> e2 = scale(f, f.inv(b12), u2);
    if (q.bilinear(f, e1, w3) != 0 || q.bilinear(f, e2, w3) != 0 || is_zero(w3)) return std::nullopt;
    elem q3 = q.evaluate(f, w3);
    if (q3 == 0) return std::nullopt;
    Vec<4> e3 = scale(f, f.sqrt(f.inv(q3)), w3);
    auto w = null_space<4>(f, {q.polar_form(f, e1), q.polar_form(f, e2)});
    if (w.size() != 2) return std::nullopt;
    Vec<4> e4{};
    bool found = false;
    for (const auto& cand : w) {
        elem b = q.bilinear(f, e3, cand);
        if (b != 0) {
            e4 = scale(f, f.inv(b), cand);
            found = true;
            break;
        }
    }
    if (!found) return std::nullopt;
    auto t = f.artin_schreier_root(q.evaluate(f, e4) ^ delta);
    if (!t) return std::nullopt;
    e4 = axpy(f, e4, *t, e3);
    return from_columns({e1, e2, e3, e4});
}

/// Symplectic basis (e1, f1, e2, f2) of an alternating form given by its
/// Gram rows, chosen lexicographically first; returned as matrix columns.
inline Mat4 symplectic_basis(const Field& f, const std::array<Vec<4>, 4>& gram)
{
    ProjectiveSpace<4> pg(f);
    auto bil = [&](const Vec<4>& u, const Vec<4>& v) { return dot(f, apply(f, gram, u), v); };
    auto all = pg.enumerate_points(Subspace<4>::whole(f));
    Vec<4> e1 = all.front();
    std::optional<Vec<4>> f1;
    for (const auto& v : all)
        if (bil(e1, v) != 0) {
            f1 = scale(f, f.inv(bil(e1, v)), v);
            break;
        }
    if (!f1) throw std::domain_error("symplectic_basis: form is degenerate");
    auto w = null_space<4>(f, {apply(f, gram, e1), apply(f, gram, *f1)});
    Subspace<4> ws(f, w);
    auto wp = pg.enumerate_points(ws);
    Vec<4> e2 = wp.front();
    std::optional<Vec<4>> f2;
    for (const auto& v : wp)
        if (bil(e2, v) != 0) {
            f2 = scale(f, f.inv(bil(e2, v)), v);
            break;
        }
    if (!f2) throw std::domain_error("symplectic_basis: form is degenerate");
    return from_columns({e1, *f1, e2, *f2});
}

/// Gram rows of the polar form of q.
inline std::array<Vec<4>, 4> gram_rows(const Field& f, const QuadraticForm<4>& q) { return q.gram(f); }

/// Enumerates the stabilizer of the quadric {q = 0} in PGammaL(4,q): every
/// element is M' * A_tau * (M0^-1)^tau composed with the field automorphism
/// tau, where M0 is a fixed frame, M' ranges over all frames and A_tau
/// repairs the normal form after tau. fn may return false to stop early.
inline void for_each_quadric_stabilizer(const Field& f, const QuadraticForm<4>& q,
                                        const std::function<bool(const Collineation&)>& fn)
{
    const elem delta = f.delta_trace_one();
    ProjectiveSpace<4> pg(f);
    auto all = pg.enumerate_points(Subspace<4>::whole(f));
    std::vector<Vec<4>> sing;
    for (const auto& p : all)
        if (q.evaluate(f, p) == 0) sing.push_back(p);
    if (sing.size() != f.q() * f.q() + 1) throw std::domain_error("for_each_quadric_stabilizer: quadric is not elliptic");

    auto first_frame = [&]() -> Mat4 {
        const Vec<4>& u1 = sing[0];
        const Vec<4>& u2 = sing[1];
        auto w = null_space<4>(f, {q.polar_form(f, u1), q.polar_form(f, u2)});
        auto m = elliptic_frame(f, q, u1, u2, w[0], delta);
        if (!m) throw std::logic_error("for_each_quadric_stabilizer: no base frame");
        return *m;
    };
    const Mat4 m0 = first_frame();
    const Mat4 m0inv = *inverse(f, m0);

    std::vector<Mat4> tails;  // A_tau * (M0^-1)^tau for tau = 2^k
    for (int k = 0; k < f.h(); ++k) {
        elem dt = f.frobenius(delta, k);
        auto b = f.artin_schreier_root(delta ^ dt);
        if (!b) throw std::logic_error("for_each_quadric_stabilizer: trace criterion violated");
        Mat4 a = identity4();
        a[2][3] = *b;
        tails.push_back(multiply(f, a, frobenius(f, m0inv, k)));
    }

    for (std::size_t i = 0; i < sing.size(); ++i) {
        for (std::size_t j = 0; j < sing.size(); ++j) {
            if (i == j) continue;
            auto w = null_space<4>(f, {q.polar_form(f, sing[i]), q.polar_form(f, sing[j])});
            Subspace<4> ws(f, w);
            // all vectors of W with Q = 1
            std::vector<Vec<4>> unit;
            for (unsigned a = 0; a < f.q(); ++a)
                for (unsigned b = 0; b < f.q(); ++b) {
                    Vec<4> v = axpy(f, scale(f, static_cast<elem>(a), w[0]), static_cast<elem>(b), w[1]);
                    if (q.evaluate(f, v) == 1) unit.push_back(v);
                }
            for (unsigned s = 1; s < f.q(); ++s) {
                Vec<4> e1 = scale(f, static_cast<elem>(s), sing[i]);
                for (const auto& e3 : unit) {
                    auto m = elliptic_frame(f, q, e1, sing[j], e3, delta);
                    if (!m) throw std::logic_error("for_each_quadric_stabilizer: frame completion failed");
                    // both completions of e4: t and t + 1
                    Mat4 alt = *m;
                    for (std::size_t r = 0; r < 4; ++r) alt[r][3] ^= alt[r][2];
                    for (const Mat4* mm : {&*m, &alt})
                        for (int k = 0; k < f.h(); ++k)
                            if (!fn({multiply(f, *mm, tails[static_cast<std::size_t>(k)]), k})) return;
                }
            }
        }
    }
}

/// Order of the stabilizer of an elliptic quadric of PG(3,q) in PGammaL(4,q).
inline std::uint64_t elliptic_stabilizer_order(const Field& f)
{
    std::uint64_t q = f.q();
    return 2 * q * q * (q * q * q * q - 1) * static_cast<std::uint64_t>(f.h());
}

}  // namespace hyperoval

#endif  // HYPEROVAL_FRAMES_HPP
