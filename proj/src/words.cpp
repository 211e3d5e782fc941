#include "mzv/words.hpp"

#include <algorithm>
#include <functional>

#include "mzv/errors.hpp"

namespace mzv {

Word::Word(std::string s) : letters(std::move(s)) {
    for (char c : letters)
        if (c != 'A' && c != 'B')
            throw Error("BadWord", "word may contain only 'A' and 'B'");
}

int Word::depth() const {
    return static_cast<int>(std::count(letters.begin(), letters.end(), 'B'));
}

Index::Index(std::vector<int> e) : entries(std::move(e)) {
    for (int n : entries)
        if (n < 1) throw Error("BadIndex", "index entries must be >= 1");
}

int Index::weight() const {
    int w = 0;
    for (int n : entries) w += n;
    return w;
}

std::string Index::str() const {
    std::string out = "(";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(entries[i]);
    }
    out += ')';
    return out;
}

Index Index::parse(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw Error("BadIndex", "unbalanced parentheses in index '" + text + "'");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> entries;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw Error("BadIndex", "empty entry in index '" + text + "'");
        tok = tok.substr(b, e - b + 1);
        try {
            entries.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw Error("BadIndex", "cannot parse index entry '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Index(std::move(entries));
}

Word index_to_word(const Index& index) {
    std::string w;
    const auto& e = index.entries;
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        w.append(static_cast<size_t>(*it - 1), 'A');
        w.push_back('B');
    }
    return Word(std::move(w));
}

Index word_to_index(const Word& word) {
    if (!word.empty() && !word.ends_in_b()) throw word_ends_in_a(word.letters);
    // Parse blocks A^{a-1}B left to right; they are k_l, k_{l-1}, ..., k_1.
    std::vector<int> blocks;
    int run_a = 0;
    for (char c : word.letters) {
        if (c == 'A') {
            ++run_a;
        } else {
            blocks.push_back(run_a + 1);
            run_a = 0;
        }
    }
    std::reverse(blocks.begin(), blocks.end());
    return Index(std::move(blocks));
}

void add_term(WordCombination& c, const Word& w, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = c.emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) c.erase(it);
    }
}

void add_term(IndexCombination& c, const Index& i, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = c.emplace(i, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) c.erase(it);
    }
}

WordCombination shuffle(const Word& u, const Word& v) {
    WordCombination out;
    // Build interleavings back to front: shuffle(ua, vb) = shuffle(u, vb)a + shuffle(ua, v)b.
    std::function<void(size_t, size_t, std::string&)> rec = [&](size_t i, size_t j, std::string& suffix) {
        if (i == 0 && j == 0) {
            std::string w(suffix.rbegin(), suffix.rend());
            add_term(out, Word(std::move(w)), 1);
            return;
        }
        if (i > 0) {
            suffix.push_back(u.letters[i - 1]);
            rec(i - 1, j, suffix);
            suffix.pop_back();
        }
        if (j > 0) {
            suffix.push_back(v.letters[j - 1]);
            rec(i, j - 1, suffix);
            suffix.pop_back();
        }
    };
    std::string suffix;
    rec(u.letters.size(), v.letters.size(), suffix);
    return out;
}

WordCombination shuffle(const WordCombination& u, const WordCombination& v) {
    WordCombination out;
    for (const auto& [uw, uc] : u)
        for (const auto& [vw, vc] : v) {
            WordCombination part = shuffle(uw, vw);
            for (const auto& [w, c] : part) add_term(out, w, c * uc * vc);
        }
    return out;
}

std::vector<OrderedSurjection> enumerate_ordered_surjections(int r, int s) {
    if (r < 1 || s < 1) throw Error("BadArgument", "enumerate_ordered_surjections requires r,s >= 1");
    // Walk the two chains 1..r and r+1..r+s in target order; at each target
    // value consume the next element of the left chain, the right chain, or
    // both at once.
    std::vector<OrderedSurjection> out;
    std::vector<int> assign(static_cast<size_t>(r + s), 0);
    std::function<void(int, int, int)> rec = [&](int i, int j, int next) {
        if (i == r && j == s) {
            OrderedSurjection sigma;
            sigma.r = r;
            sigma.s = s;
            sigma.target_size = next - 1;
            sigma.assignment = assign;
            out.push_back(std::move(sigma));
            return;
        }
        if (i < r) {
            assign[static_cast<size_t>(i)] = next;
            rec(i + 1, j, next + 1);
        }
        if (i < r && j < s) {
            assign[static_cast<size_t>(i)] = next;
            assign[static_cast<size_t>(r + j)] = next;
            rec(i + 1, j + 1, next + 1);
            assign[static_cast<size_t>(r + j)] = 0;
        }
        if (j < s) {
            assign[static_cast<size_t>(r + j)] = next;
            rec(i, j + 1, next + 1);
            assign[static_cast<size_t>(r + j)] = 0;
        }
    };
    rec(0, 0, 1);
    return out;
}

Index stuffle_contract(const OrderedSurjection& sigma, const Index& left, const Index& right) {
    if (left.depth() != sigma.r || right.depth() != sigma.s)
        throw arity_mismatch("stuffle_contract: |left|=" + std::to_string(left.depth()) +
                             ", |right|=" + std::to_string(right.depth()) + " vs sigma(r=" +
                             std::to_string(sigma.r) + ",s=" + std::to_string(sigma.s) + ")");
    std::vector<int> c(static_cast<size_t>(sigma.target_size), 0);
    for (int m = 0; m < sigma.r; ++m) c[static_cast<size_t>(sigma.assignment[static_cast<size_t>(m)] - 1)] += left.entries[static_cast<size_t>(m)];
    for (int l = 0; l < sigma.s; ++l) c[static_cast<size_t>(sigma.assignment[static_cast<size_t>(sigma.r + l)] - 1)] += right.entries[static_cast<size_t>(l)];
    return Index(std::move(c));
}

IndexCombination stuffle(const Index& left, const Index& right) {
    IndexCombination out;
    if (left.empty()) {
        add_term(out, right, 1);
        return out;
    }
    if (right.empty()) {
        add_term(out, left, 1);
        return out;
    }
    for (const auto& sigma : enumerate_ordered_surjections(left.depth(), right.depth()))
        add_term(out, stuffle_contract(sigma, left, right), 1);
    return out;
}

std::vector<Index> all_indices_of_weight(int w) {
    std::vector<Index> out;
    if (w == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int rem) {
        if (rem == 0) {
            out.push_back(Index(cur));
            return;
        }
        for (int n = 1; n <= rem; ++n) {
            cur.push_back(n);
            rec(rem - n);
            cur.pop_back();
        }
    };
    rec(w);
    return out;
}

std::vector<Index> admissible_indices_of_weight(int w) {
    std::vector<Index> out;
    for (auto& idx : all_indices_of_weight(w))
        if (idx.admissible()) out.push_back(std::move(idx));
    return out;
}

IndexCombination stuffle(const IndexCombination& left, const IndexCombination& right) {
    IndexCombination out;
    for (const auto& [li, lc] : left)
        for (const auto& [ri, rc] : right) {
            IndexCombination part = stuffle(li, ri);
            for (const auto& [idx, c] : part) add_term(out, idx, c * lc * rc);
        }
    return out;
}

}  // namespace mzv
