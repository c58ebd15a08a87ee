#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "fo52/rat.hpp"

namespace fo52 {

// Exponent vector of a monomial in x0..x4.
using Exp = std::array<std::uint8_t, 5>;

// Monomial order: lex with x0 > x1 > x2 > x3 > x4, largest first. All
// coefficient flattening and pivot bookkeeping uses this order.
struct MonoBefore {
    bool operator()(const Exp& a, const Exp& b) const { return a > b; }
};

// Degree-d monomials in enumeration order, with position lookup. Cached.
struct MonoTable {
    std::vector<Exp> list;
    std::map<Exp, std::size_t, MonoBefore> pos;

    static const MonoTable& get(unsigned degree);
};

// Sparse exact polynomial in Q[x0..x4].
class Poly {
public:
    Poly() = default;

    static Poly monomial(const Exp& e, const Rat& c);
    static Poly var(unsigned i);
    static Poly constant(const Rat& c);

    const std::map<Exp, Rat, MonoBefore>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    Rat coeff(const Exp& e) const;
    void add_term(const Exp& e, const Rat& c);

    // Max total degree over the support; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous(unsigned d) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    Poly operator-() const;

    Poly derivative(unsigned var) const;
    Rat eval(const std::vector<Rat>& x) const;

    bool operator==(const Poly& o) const { return t_ == o.t_; }

private:
    std::map<Exp, Rat, MonoBefore> t_;
};

} // namespace fo52
