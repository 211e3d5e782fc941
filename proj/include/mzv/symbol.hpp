#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "mzv/rational.hpp"
#include "mzv/words.hpp"

namespace mzv {

// Commutative monomial in the MZV symbol ring: a multiset of admissible
// index generators, kept sorted. The empty monomial is 1.
struct SymbolMonomial {
    std::vector<Index> gens;  // sorted, each admissible

    SymbolMonomial() = default;
    explicit SymbolMonomial(std::vector<Index> g);

    int weight() const;
    int degree() const { return static_cast<int>(gens.size()); }
    std::string str() const;  // e.g. "zeta(1,2)^2*zeta(3)", "1" for empty

    SymbolMonomial operator*(const SymbolMonomial& other) const;

    friend bool operator==(const SymbolMonomial&, const SymbolMonomial&) = default;
    friend std::strong_ordering operator<=>(const SymbolMonomial& a, const SymbolMonomial& b) {
        if (int wa = a.weight(), wb = b.weight(); wa != wb) return wa <=> wb;
        if (a.gens.size() != b.gens.size()) return a.gens.size() <=> b.gens.size();
        return a.gens <=> b.gens;
    }
};

// Element of the symbol ring: rational combination of monomials.
class SymbolPoly {
public:
    std::map<SymbolMonomial, Rational> terms;

    SymbolPoly() = default;
    static SymbolPoly constant(const Rational& c);
    static SymbolPoly generator(const Index& idx);  // requires admissible, nonempty

    bool is_zero() const { return terms.empty(); }
    bool is_homogeneous(int weight) const;

    SymbolPoly& add(const SymbolMonomial& m, const Rational& c);
    SymbolPoly operator+(const SymbolPoly&) const;
    SymbolPoly operator-(const SymbolPoly&) const;
    SymbolPoly operator*(const SymbolPoly&) const;
    SymbolPoly operator*(const Rational&) const;
    SymbolPoly operator-() const;

    friend bool operator==(const SymbolPoly&, const SymbolPoly&) = default;

    std::string str() const;
};

// Polynomial in the formal variable T (weight 1) with SymbolPoly coefficients.
class RegValue {
public:
    std::map<int, SymbolPoly> coeffs;  // t_power -> coefficient, no zero entries

    RegValue() = default;
    static RegValue zero() { return RegValue(); }
    static RegValue constant(const Rational& c);
    static RegValue generator(const Index& idx);
    static RegValue t_power(int n, const Rational& c);  // c * T^n

    bool is_zero() const { return coeffs.empty(); }
    int t_degree() const { return coeffs.empty() ? -1 : coeffs.rbegin()->first; }
    const SymbolPoly& coeff(int t_power) const;  // zero poly if absent
    // homogeneous of the given total weight, with T of weight 1
    bool is_homogeneous(int weight) const;

    RegValue& add(int t_power, const SymbolPoly& p);
    RegValue operator+(const RegValue&) const;
    RegValue operator-(const RegValue&) const;
    RegValue operator*(const RegValue&) const;
    RegValue operator*(const Rational&) const;
    RegValue operator-() const;

    friend bool operator==(const RegValue&, const RegValue&) = default;

    std::string str() const;
};

}  // namespace mzv
