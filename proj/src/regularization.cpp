#include "mzv/regularization.hpp"

#include <map>

#include "mzv/errors.hpp"

namespace mzv {

namespace {

int leading_bs(const Word& w) {
    int a = 0;
    for (char c : w.letters) {
        if (c != 'B') break;
        ++a;
    }
    return a;
}

int trailing_ones(const Index& idx) {
    int l = 0;
    for (auto it = idx.entries.rbegin(); it != idx.entries.rend() && *it == 1; ++it) ++l;
    return l;
}

RegValue reg_integral_rec(const Word& w, std::map<Word, RegValue>& memo) {
    if (w.empty()) return RegValue::constant(1);
    if (auto it = memo.find(w); it != memo.end()) return it->second;

    RegValue out;
    int a = leading_bs(w);
    if (a == 0) {
        out = RegValue::generator(word_to_index(w));
    } else if (w.letters == "B") {
        out = RegValue::t_power(1, -1);
    } else {
        // w = B^a v.  B sh (B^{a-1} v) = a*w + words with fewer leading B's;
        // solve for reg(w).
        Word rest(w.letters.substr(1));
        WordCombination sh = shuffle(Word("B"), rest);
        RegValue acc = reg_integral_rec(Word("B"), memo) * reg_integral_rec(rest, memo);
        Rational lead;
        for (const auto& [u, c] : sh) {
            if (u == w) {
                lead = c;
                continue;
            }
            acc = acc - reg_integral_rec(u, memo) * c;
        }
        if (lead != a) throw Error("Internal", "leading-B elimination: unexpected multiplicity");
        out = acc * Rational(Rational(1) / lead);
    }
    memo.emplace(w, out);
    return out;
}

RegValue reg_series_rec(const Index& idx, std::map<Index, RegValue>& memo) {
    if (idx.empty()) return RegValue::constant(1);
    if (auto it = memo.find(idx); it != memo.end()) return it->second;

    RegValue out;
    if (idx.admissible()) {
        out = RegValue::generator(idx);
    } else if (idx.entries == std::vector<int>{1}) {
        out = RegValue::t_power(1, -1);
    } else {
        // idx = (n_1,...,n_k,1^l), l >= 1.  (1) * (n_1,...,n_k,1^{l-1})
        // = l*idx + terms with fewer trailing ones; solve for reg(idx).
        Index one({1});
        Index prefix(std::vector<int>(idx.entries.begin(), idx.entries.end() - 1));
        IndexCombination st = stuffle(one, prefix);
        RegValue acc = reg_series_rec(one, memo) * reg_series_rec(prefix, memo);
        Rational lead;
        for (const auto& [j, c] : st) {
            if (j == idx) {
                lead = c;
                continue;
            }
            acc = acc - reg_series_rec(j, memo) * c;
        }
        if (lead != trailing_ones(idx)) throw Error("Internal", "trailing-1 recursion: unexpected multiplicity");
        out = acc * Rational(Rational(1) / lead);
    }
    memo.emplace(idx, out);
    return out;
}

}  // namespace

RegValue reg_integral(const Word& word) {
    if (!word.empty() && !word.ends_in_b()) throw word_ends_in_a(word.letters);
    std::map<Word, RegValue> memo;
    return reg_integral_rec(word, memo);
}

RegValue reg_integral(const WordCombination& words) {
    std::map<Word, RegValue> memo;
    RegValue out;
    for (const auto& [w, c] : words) {
        if (!w.empty() && !w.ends_in_b()) throw word_ends_in_a(w.letters);
        out = out + reg_integral_rec(w, memo) * c;
    }
    return out;
}

RegValue reg_series(const Index& index) {
    std::map<Index, RegValue> memo;
    return reg_series_rec(index, memo);
}

RegValue reg_series(const IndexCombination& indices) {
    std::map<Index, RegValue> memo;
    RegValue out;
    for (const auto& [i, c] : indices) out = out + reg_series_rec(i, memo) * c;
    return out;
}

RegValue l_map(const RegValue& value) {
    int tmax = value.t_degree();
    if (tmax <= 0) return value;  // SymbolRing-linear, identity below T^1

    // E(u) = exp(T u - sum_{n>=2} zeta(n) u^n / n), truncated at u^tmax.
    // L(T^n) = n! [u^n] E(u).
    std::vector<RegValue> s(static_cast<size_t>(tmax) + 1);  // the exponent series
    s[1] = RegValue::t_power(1, 1);
    for (int n = 2; n <= tmax; ++n)
        s[static_cast<size_t>(n)] = RegValue::generator(Index({n})) * Rational(Rational(-1) / n);

    std::vector<RegValue> e(static_cast<size_t>(tmax) + 1);
    e[0] = RegValue::constant(1);
    std::vector<RegValue> pow = e;  // s^k / k!, accumulated
    for (int k = 1; k <= tmax; ++k) {
        std::vector<RegValue> next(static_cast<size_t>(tmax) + 1);
        for (int d = 0; d <= tmax; ++d)
            for (int n = 1; n + d <= tmax; ++n)
                next[static_cast<size_t>(d + n)] =
                    next[static_cast<size_t>(d + n)] + pow[static_cast<size_t>(d)] * s[static_cast<size_t>(n)];
        for (int d = 0; d <= tmax; ++d) {
            next[static_cast<size_t>(d)] = next[static_cast<size_t>(d)] * Rational(Rational(1) / k);
            e[static_cast<size_t>(d)] = e[static_cast<size_t>(d)] + next[static_cast<size_t>(d)];
        }
        pow = std::move(next);
    }

    std::vector<RegValue> l_of_t(static_cast<size_t>(tmax) + 1);
    Rational factorial(1);
    for (int n = 0; n <= tmax; ++n) {
        if (n > 0) factorial *= n;
        l_of_t[static_cast<size_t>(n)] = e[static_cast<size_t>(n)] * factorial;
    }

    RegValue out;
    for (const auto& [t, p] : value.coeffs) {
        RegValue lt = l_of_t[static_cast<size_t>(t)];
        for (const auto& [tt, pp] : lt.coeffs) out.add(tt, pp * p);
    }
    return out;
}

RegRelationReport check_regularization_relation(const Index& index) {
    RegRelationReport rep;
    rep.series_side = reg_series(index);
    rep.integral_side_mapped = l_map(reg_integral(index_to_word(index)));
    rep.holds = rep.series_side == rep.integral_side_mapped;
    return rep;
}

}  // namespace mzv
