#include "fo52/poly.hpp"

#include <mutex>
#include <stdexcept>

namespace fo52 {

const MonoTable& MonoTable::get(unsigned degree) {
    static std::map<unsigned, MonoTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> g(mu);
    auto it = cache.find(degree);
    if (it != cache.end()) return it->second;
    MonoTable t;
    // Enumerate compositions of `degree` into 5 parts, largest-lex first.
    Exp e{};
    for (int a0 = degree; a0 >= 0; --a0)
        for (int a1 = degree - a0; a1 >= 0; --a1)
            for (int a2 = degree - a0 - a1; a2 >= 0; --a2)
                for (int a3 = degree - a0 - a1 - a2; a3 >= 0; --a3) {
                    const int a4 = degree - a0 - a1 - a2 - a3;
                    e = {static_cast<std::uint8_t>(a0), static_cast<std::uint8_t>(a1),
                         static_cast<std::uint8_t>(a2), static_cast<std::uint8_t>(a3),
                         static_cast<std::uint8_t>(a4)};
                    t.pos.emplace(e, t.list.size());
                    t.list.push_back(e);
                }
    return cache.emplace(degree, std::move(t)).first->second;
}

Poly Poly::monomial(const Exp& e, const Rat& c) {
    Poly p;
    p.add_term(e, c);
    return p;
}

Poly Poly::var(unsigned i) {
    if (i >= 5) throw std::invalid_argument("Poly::var: index out of range");
    Exp e{};
    e[i] = 1;
    return monomial(e, Rat(1));
}

Poly Poly::constant(const Rat& c) { return monomial(Exp{}, c); }

Rat Poly::coeff(const Exp& e) const {
    const auto it = t_.find(e);
    return it == t_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Exp& e, const Rat& c) {
    if (sgn(c) == 0) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
        t_.emplace(e, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) {
        int s = 0;
        for (auto a : e) s += a;
        if (s > d) d = s;
    }
    return d;
}

bool Poly::is_homogeneous(unsigned d) const {
    for (const auto& [e, c] : t_) {
        unsigned s = 0;
        for (auto a : e) s += a;
        if (s != d) return false;
    }
    return true;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly p = *this;
    p += o;
    return p;
}

Poly Poly::operator-(const Poly& o) const {
    Poly p = *this;
    p -= o;
    return p;
}

Poly Poly::operator*(const Poly& o) const {
    Poly p;
    for (const auto& [ea, ca] : t_) {
        for (const auto& [eb, cb] : o.t_) {
            Exp e;
            for (unsigned i = 0; i < 5; ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

Poly Poly::operator*(const Rat& s) const {
    Poly p;
    if (sgn(s) == 0) return p;
    for (const auto& [e, c] : t_) p.t_.emplace(e, c * s);
    return p;
}

Poly Poly::operator-() const { return *this * Rat(-1); }

Poly Poly::derivative(unsigned var) const {
    Poly p;
    for (const auto& [e, c] : t_) {
        if (e[var] == 0) continue;
        Exp d = e;
        d[var] -= 1;
        p.add_term(d, c * e[var]);
    }
    return p;
}

Rat Poly::eval(const std::vector<Rat>& x) const {
    if (x.size() != 5) throw std::invalid_argument("Poly::eval: need 5 coordinates");
    Rat acc(0);
    for (const auto& [e, c] : t_) {
        Rat term = c;
        for (unsigned i = 0; i < 5; ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= x[i];
        acc += term;
    }
    return acc;
}

} // namespace fo52
