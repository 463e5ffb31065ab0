#ifndef HYPEROVAL_GF2H_HPP
#define HYPEROVAL_GF2H_HPP

// Arithmetic in GF(2^h), 1 <= h <= 5.
//
// Elements are stored as their h-bit coefficient vector relative to a fixed
// modulus polynomial. All tables are built once per field; after construction
// a Field is immutable and may be shared freely between threads.

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperoval {

/// Raw field element: the bit value of the residue polynomial.
using elem = std::uint8_t;

class Field {
public:
    static constexpr int max_h = 5;

    /// Field with an explicit modulus (bit i = coefficient of x^i).
    Field(int h, unsigned modulus) : h_(h), modulus_(modulus)
    {
        if (h < 1 || h > max_h)
            throw std::invalid_argument("Field: h must lie in 1..5");
        if ((modulus >> h) != 1u)
            throw std::invalid_argument("Field: modulus must have degree h");
        if (!irreducible(modulus))
            throw std::invalid_argument("Field: modulus is reducible over GF(2)");
        q_ = 1u << h;
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b < q_; ++b)
                mul_[a * 32 + b] = static_cast<elem>(poly_mulmod(a, b));
        for (unsigned a = 1; a < q_; ++a)
            for (unsigned b = 1; b < q_; ++b)
                if (mul_[a * 32 + b] == 1) inv_[a] = static_cast<elem>(b);
        for (unsigned a = 0; a < q_; ++a) {
            elem t = 0, x = static_cast<elem>(a);
            for (int i = 0; i < h_; ++i) {
                t ^= x;
                x = mul(x, x);
            }
            trace_[a] = t;
            elem r = static_cast<elem>(a);
            for (int i = 0; i < h_ - 1; ++i) r = mul(r, r);
            sqrt_[a] = r;
        }
    }

    /// The fixed standard field of order 2^h.
    static const Field& standard(int h)
    {
        static const std::array<Field, max_h> fields{
            Field(1, 0b10),       // x
            Field(2, 0b111),      // x^2+x+1
            Field(3, 0b1011),     // x^3+x+1
            Field(4, 0b10011),    // x^4+x+1
            Field(5, 0b100101)};  // x^5+x^2+1
        if (h < 1 || h > max_h)
            throw std::invalid_argument("Field::standard: h must lie in 1..5");
        return fields[static_cast<std::size_t>(h - 1)];
    }

    /// Standard field of order q (q a power of two, 2..32).
    static const Field& of_order(unsigned q)
    {
        for (int h = 1; h <= max_h; ++h)
            if ((1u << h) == q) return standard(h);
        throw std::invalid_argument("Field::of_order: q must be one of 2,4,8,16,32");
    }

    int h() const { return h_; }
    unsigned q() const { return q_; }
    unsigned modulus() const { return modulus_; }

    bool contains(elem a) const { return a < q_; }

    static elem add(elem a, elem b) { return a ^ b; }
    elem mul(elem a, elem b) const { return mul_[a * 32u + b]; }

    elem inv(elem a) const
    {
        if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
        return inv_[a];
    }

    elem div(elem a, elem b) const { return mul(a, inv(b)); }

    /// a^k; for nonzero a the exponent is reduced mod q-1 (negative k allowed).
    elem pow(elem a, long long k) const
    {
        if (a == 0) {
            if (k < 0) throw std::domain_error("Field::pow: zero to a negative power");
            return k == 0 ? 1 : 0;
        }
        long long n = static_cast<long long>(q_) - 1;
        k %= n;
        if (k < 0) k += n;
        elem r = 1, base = a;
        while (k > 0) {
            if (k & 1) r = mul(r, base);
            base = mul(base, base);
            k >>= 1;
        }
        return r;
    }

    elem square(elem a) const { return mul(a, a); }

    /// Absolute trace to GF(2); the result is 0 or 1.
    elem trace(elem a) const { return trace_[a]; }

    /// The unique square root a^(2^(h-1)).
    elem sqrt(elem a) const { return sqrt_[a]; }

    /// a^(2^k); k is taken mod h.
    elem frobenius(elem a, int k) const
    {
        k %= h_;
        if (k < 0) k += h_;
        for (int i = 0; i < k; ++i) a = mul(a, a);
        return a;
    }

    /// Smallest b with b^2 + b = delta, or nullopt when Tr(delta) = 1.
    std::optional<elem> artin_schreier_root(elem delta) const
    {
        if (trace(delta) != 0) return std::nullopt;
        for (unsigned b = 0; b < q_; ++b)
            if ((mul(static_cast<elem>(b), static_cast<elem>(b)) ^ b) == delta)
                return static_cast<elem>(b);
        throw std::logic_error("Field::artin_schreier_root: trace criterion violated");
    }

    /// Smallest element of trace one.
    elem delta_trace_one() const
    {
        for (unsigned a = 0; a < q_; ++a)
            if (trace(static_cast<elem>(a)) == 1) return static_cast<elem>(a);
        throw std::logic_error("Field: no trace-one element");
    }

    /// Smallest nonzero w such that X^2 + wX + 1 has no root in the field.
    elem omega_irreducible() const
    {
        for (unsigned w = 1; w < q_; ++w) {
            bool has_root = false;
            for (unsigned x = 0; x < q_ && !has_root; ++x) {
                elem ex = static_cast<elem>(x);
                has_root = (mul(ex, ex) ^ mul(static_cast<elem>(w), ex) ^ 1) == 0;
            }
            if (!has_root) return static_cast<elem>(w);
        }
        throw std::logic_error("Field: no irreducible X^2+wX+1");
    }

    std::vector<elem> elements() const
    {
        std::vector<elem> out(q_);
        for (unsigned a = 0; a < q_; ++a) out[a] = static_cast<elem>(a);
        return out;
    }

    bool operator==(const Field& o) const { return h_ == o.h_ && modulus_ == o.modulus_; }

private:
    static int degree(unsigned p)
    {
        int d = -1;
        while (p) {
            ++d;
            p >>= 1;
        }
        return d;
    }

    static unsigned poly_mod(unsigned a, unsigned m)
    {
        int dm = degree(m);
        for (int d = degree(a); d >= dm; d = degree(a)) a ^= m << (d - dm);
        return a;
    }

    unsigned poly_mulmod(unsigned a, unsigned b) const
    {
        unsigned r = 0;
        for (int i = 0; i < h_; ++i)
            if (b >> i & 1u) r ^= a << i;
        return poly_mod(r, modulus_);
    }

    // No factor of degree 1..h/2.
    static bool irreducible(unsigned m)
    {
        int d = degree(m);
        for (unsigned f = 2; degree(f) <= d / 2; ++f)
            if (poly_mod(m, f) == 0) return false;
        return true;
    }

    int h_;
    unsigned modulus_;
    unsigned q_ = 0;
    std::array<elem, 32 * 32> mul_{};
    std::array<elem, 32> inv_{};
    std::array<elem, 32> trace_{};
    std::array<elem, 32> sqrt_{};
};

/// Field element bound to its field. Operations between elements of
/// different fields throw std::invalid_argument.
class FieldElement {
public:
    FieldElement(const Field& f, elem bits) : field_(&f), bits_(bits)
    {
        if (!f.contains(bits)) throw std::out_of_range("FieldElement: value exceeds field size");
    }

    const Field& field() const { return *field_; }
    elem bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b)
    {
        check_same(a, b);
        return {*a.field_, Field::add(a.bits_, b.bits_)};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + b; }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b)
    {
        check_same(a, b);
        return {*a.field_, a.field_->mul(a.bits_, b.bits_)};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b)
    {
        check_same(a, b);
        return {*a.field_, a.field_->div(a.bits_, b.bits_)};
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b)
    {
        check_same(a, b);
        return a.bits_ == b.bits_;
    }

    FieldElement inv() const { return {*field_, field_->inv(bits_)}; }
    FieldElement pow(long long k) const { return {*field_, field_->pow(bits_, k)}; }
    FieldElement trace() const { return {*field_, field_->trace(bits_)}; }
    FieldElement sqrt() const { return {*field_, field_->sqrt(bits_)}; }
    FieldElement frobenius(int k) const { return {*field_, field_->frobenius(bits_, k)}; }

    std::optional<FieldElement> artin_schreier_root() const
    {
        auto r = field_->artin_schreier_root(bits_);
        if (!r) return std::nullopt;
        return FieldElement(*field_, *r);
    }

private:
    static void check_same(const FieldElement& a, const FieldElement& b)
    {
        if (a.field_ != b.field_ && !(*a.field_ == *b.field_))
            throw std::invalid_argument("FieldElement: operands from different fields");
    }

    const Field* field_;
    elem bits_;
};

/// Lowercase hex of the bit value.
inline std::string to_hex(elem a)
{
    static const char* digits = "0123456789abcdef";
    std::string s;
    if (a >= 16) s.push_back(digits[a >> 4]);
    s.push_back(digits[a & 15]);
    return s;
}

inline elem from_hex(const std::string& s, const Field& f)
{
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &pos, 16);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid hex field element '" + s + "'");
    }
    if (pos != s.size() || v >= f.q())
        throw std::invalid_argument("invalid hex field element '" + s + "' for q=" + std::to_string(f.q()));
    return static_cast<elem>(v);
}

}  // namespace hyperoval

#endif  // HYPEROVAL_GF2H_HPP
