#include "tdcodes/poly.hpp"

#include <algorithm>
#include <utility>

#include "tdcodes/error.hpp"

namespace tdcodes {

Polynomial::Polynomial(std::vector<Symbol> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::constant(Symbol c) { return Polynomial(std::vector<Symbol>{c}); }

Polynomial Polynomial::monomial(std::size_t degree, Symbol c) {
    std::vector<Symbol> v(degree + 1, 0);
    v[degree] = c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::x_n_minus_1(std::size_t n) {
    std::vector<Symbol> v(n + 1, 0);
    v[0] ^= 1;
    v[n] ^= 1;
    return Polynomial(std::move(v));
}

Polynomial add(const BaseField&, const Polynomial& a, const Polynomial& b) {
    std::vector<Symbol> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) out[i] ^= a.coeffs()[i];
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) out[i] ^= b.coeffs()[i];
    return Polynomial(std::move(out));
}

Polynomial mul(const BaseField& f, const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& k = kernels::active_kernels();
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<Symbol> out(ac.size() + bc.size() - 1, 0);
    for (std::size_t i = 0; i < ac.size(); ++i)
        if (ac[i] != 0) k.mul_add_region(out.data() + i, bc.data(), f.table(ac[i]), bc.size());
    return Polynomial(std::move(out));
}

Polynomial scale(const BaseField& f, const Polynomial& a, Symbol c) {
    std::vector<Symbol> out(a.coeffs().size());
    kernels::active_kernels().mul_region(out.data(), a.coeffs().data(), f.table(c), out.size());
    return Polynomial(std::move(out));
}

PolyDivision divmod(const BaseField& f, const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw ParameterError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    const auto& k = kernels::active_kernels();
    std::vector<Symbol> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const Symbol lead_inv = f.inv(b.leading());
    std::vector<Symbol> quot(rem.size() - db, 0);
    for (std::size_t d = rem.size(); d-- > db;) {
        const Symbol c = rem[d];
        if (c == 0) continue;
        const Symbol factor = f.mul(c, lead_inv);
        quot[d - db] = factor;
        k.mul_add_region(rem.data() + (d - db), bc.data(), f.table(factor), bc.size());
    }
    rem.resize(db);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial make_monic(const BaseField& f, const Polynomial& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return scale(f, a, f.inv(a.leading()));
}

Polynomial gcd(const BaseField& f, Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(f, a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(f, a);
}

Polynomial reciprocal(const Polynomial& a) {
    std::vector<Symbol> v(a.coeffs().rbegin(), a.coeffs().rend());
    return Polynomial(std::move(v));
}

Symbol evaluate(const BaseField& f, const Polynomial& a, Symbol x) {
    Symbol acc = 0;
    for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) acc = f.mul(acc, x) ^ *it;
    return acc;
}

std::string render(const BaseField& f, const Polynomial& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (int d = a.degree(); d >= 0; --d) {
        const Symbol c = a.coeff(static_cast<std::size_t>(d));
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        std::string mono;
        if (d == 1) mono = "x";
        else if (d > 1) mono = "x^" + std::to_string(d);
        if (mono.empty()) out += f.render(c);
        else if (c == 1) out += mono;
        else out += f.render(c) + " " + mono;
    }
    return out;
}

}  // namespace tdcodes
