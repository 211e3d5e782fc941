#include "mzv/symbol.hpp"

#include <algorithm>

#include "mzv/errors.hpp"

namespace mzv {

SymbolMonomial::SymbolMonomial(std::vector<Index> g) : gens(std::move(g)) {
    for (const auto& idx : gens)
        if (idx.empty() || !idx.admissible())
            throw Error("BadGenerator", "symbol generators must be nonempty admissible indices");
    std::sort(gens.begin(), gens.end());
}

int SymbolMonomial::weight() const {
    int w = 0;
    for (const auto& idx : gens) w += idx.weight();
    return w;
}

std::string SymbolMonomial::str() const {
    if (gens.empty()) return "1";
    std::string out;
    size_t i = 0;
    while (i < gens.size()) {
        size_t j = i;
        while (j < gens.size() && gens[j] == gens[i]) ++j;
        if (!out.empty()) out += "*";
        out += "zeta" + gens[i].str();
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

SymbolMonomial SymbolMonomial::operator*(const SymbolMonomial& other) const {
    SymbolMonomial out;
    out.gens = gens;
    out.gens.insert(out.gens.end(), other.gens.begin(), other.gens.end());
    std::sort(out.gens.begin(), out.gens.end());
    return out;
}

SymbolPoly SymbolPoly::constant(const Rational& c) {
    SymbolPoly p;
    p.add(SymbolMonomial(), c);
    return p;
}

SymbolPoly SymbolPoly::generator(const Index& idx) {
    SymbolPoly p;
    p.add(SymbolMonomial({idx}), 1);
    return p;
}

bool SymbolPoly::is_homogeneous(int weight) const {
    for (const auto& [m, c] : terms)
        if (m.weight() != weight) return false;
    return true;
}

SymbolPoly& SymbolPoly::add(const SymbolMonomial& m, const Rational& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
    return *this;
}

SymbolPoly SymbolPoly::operator+(const SymbolPoly& o) const {
    SymbolPoly out = *this;
    for (const auto& [m, c] : o.terms) out.add(m, c);
    return out;
}

SymbolPoly SymbolPoly::operator-(const SymbolPoly& o) const {
    SymbolPoly out = *this;
    for (const auto& [m, c] : o.terms) out.add(m, -c);
    return out;
}

SymbolPoly SymbolPoly::operator*(const SymbolPoly& o) const {
    SymbolPoly out;
    for (const auto& [m1, c1] : terms)
        for (const auto& [m2, c2] : o.terms) out.add(m1 * m2, c1 * c2);
    return out;
}

SymbolPoly SymbolPoly::operator*(const Rational& c) const {
    SymbolPoly out;
    if (c == 0) return out;
    for (const auto& [m, c0] : terms) out.terms.emplace(m, c0 * c);
    return out;
}

SymbolPoly SymbolPoly::operator-() const { return *this * Rational(-1); }

std::string SymbolPoly::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms) {
        std::string cs = rational_to_string(c);
        if (out.empty()) {
            out = (cs == "1" && !m.gens.empty()) ? "" : cs;
            if (cs == "-1" && !m.gens.empty()) out = "-";
        } else {
            if (c > 0) {
                out += " + " + ((cs == "1" && !m.gens.empty()) ? std::string() : cs);
            } else {
                std::string abs = rational_to_string(-c);
                out += " - " + ((abs == "1" && !m.gens.empty()) ? std::string() : abs);
            }
        }
        if (!m.gens.empty()) {
            if (!out.empty() && out.back() != ' ' && out.back() != '-') out += "*";
            out += m.str();
        }
    }
    return out;
}

RegValue RegValue::constant(const Rational& c) {
    RegValue v;
    v.add(0, SymbolPoly::constant(c));
    return v;
}

RegValue RegValue::generator(const Index& idx) {
    RegValue v;
    v.add(0, SymbolPoly::generator(idx));
    return v;
}

RegValue RegValue::t_power(int n, const Rational& c) {
    RegValue v;
    v.add(n, SymbolPoly::constant(c));
    return v;
}

const SymbolPoly& RegValue::coeff(int t_power) const {
    static const SymbolPoly zero;
    auto it = coeffs.find(t_power);
    return it == coeffs.end() ? zero : it->second;
}

bool RegValue::is_homogeneous(int weight) const {
    for (const auto& [t, p] : coeffs)
        if (!p.is_homogeneous(weight - t)) return false;
    return true;
}

RegValue& RegValue::add(int t_power, const SymbolPoly& p) {
    if (p.is_zero()) return *this;
    auto [it, inserted] = coeffs.emplace(t_power, p);
    if (!inserted) {
        it->second = it->second + p;
        if (it->second.is_zero()) coeffs.erase(it);
    }
    return *this;
}

RegValue RegValue::operator+(const RegValue& o) const {
    RegValue out = *this;
    for (const auto& [t, p] : o.coeffs) out.add(t, p);
    return out;
}

RegValue RegValue::operator-(const RegValue& o) const {
    RegValue out = *this;
    for (const auto& [t, p] : o.coeffs) out.add(t, -p);
    return out;
}

RegValue RegValue::operator*(const RegValue& o) const {
    RegValue out;
    for (const auto& [t1, p1] : coeffs)
        for (const auto& [t2, p2] : o.coeffs) out.add(t1 + t2, p1 * p2);
    return out;
}

RegValue RegValue::operator*(const Rational& c) const {
    RegValue out;
    if (c == 0) return out;
    for (const auto& [t, p] : coeffs) out.coeffs.emplace(t, p * c);
    return out;
}

RegValue RegValue::operator-() const { return *this * Rational(-1); }

std::string RegValue::str() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (const auto& [t, p] : coeffs) {
        if (!out.empty()) out += " + ";
        std::string ps = p.str();
        if (t == 0) {
            out += ps;
        } else {
            std::string ts = t == 1 ? "T" : "T^" + std::to_string(t);
            if (ps == "1")
                out += ts;
            else if (ps == "-1")
                out += "-" + ts;
            else
                out += "(" + ps + ")*" + ts;
        }
    }
    return out;
}

}  // namespace mzv
