#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mzv/errors.hpp"
#include "mzv/words.hpp"

using namespace mzv;

namespace {

Word random_word(std::mt19937& rng, int max_weight) {
    std::uniform_int_distribution<int> len(0, max_weight);
    std::uniform_int_distribution<int> letter(0, 1);
    int n = len(rng);
    std::string s;
    for (int i = 0; i < n; ++i) s.push_back(letter(rng) ? 'B' : 'A');
    return Word(s);
}

Index random_index(std::mt19937& rng, int max_weight) {
    std::uniform_int_distribution<int> wdist(1, max_weight);
    int w = wdist(rng);
    std::vector<int> entries;
    while (w > 0) {
        std::uniform_int_distribution<int> e(1, w);
        int n = e(rng);
        entries.push_back(n);
        w -= n;
    }
    return Index(entries);
}

Rational binomial(int n, int k) {
    Rational b = 1;
    for (int i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

// Independent oracle: enumerate strictly increasing value tuples for the two
// chains and keep the onto ones.
int count_surjections_brute(int r, int s) {
    int total = 0;
    for (int n = std::max(r, s); n <= r + s; ++n) {
        std::vector<int> left(static_cast<size_t>(r)), right(static_cast<size_t>(s));
        std::function<bool(std::vector<int>&, int, int, const std::function<bool()>&)> chains =
            [&](std::vector<int>& v, int pos, int lo, const std::function<bool()>& k) -> bool {
            if (pos == static_cast<int>(v.size())) return k();
            for (int val = lo; val <= n; ++val) {
                v[static_cast<size_t>(pos)] = val;
                if (chains(v, pos + 1, val + 1, k)) return false;
            }
            return false;
        };
        auto count_if_onto = [&]() -> bool {
            std::vector<bool> hit(static_cast<size_t>(n) + 1, false);
            for (int x : left) hit[static_cast<size_t>(x)] = true;
            for (int x : right) hit[static_cast<size_t>(x)] = true;
            for (int i = 1; i <= n; ++i)
                if (!hit[static_cast<size_t>(i)]) return false;
            ++total;
            return false;
        };
        chains(left, 0, 1, [&]() -> bool { return chains(right, 0, 1, count_if_onto); });
    }
    return total;
}

}  // namespace

TEST_CASE("index/word conversion follows the W_a convention") {
    CHECK(index_to_word(Index({2})).letters == "AB");
    CHECK(index_to_word(Index()).letters == "");
    CHECK(index_to_word(Index({1, 2})).letters == "ABB");
    CHECK(index_to_word(Index({3, 1})).letters == "BAAB");

    CHECK(word_to_index(Word("AB")) == Index({2}));
    CHECK(word_to_index(Word("ABB")) == Index({1, 2}));
    CHECK(word_to_index(Word("")) == Index());
    CHECK_THROWS_AS(word_to_index(Word("BA")), Error);

    for (int w = 0; w <= 8; ++w)
        for (const auto& idx : all_indices_of_weight(w)) {
            Word word = index_to_word(idx);
            CHECK(word.weight() == idx.weight());
            CHECK(word.depth() == idx.depth());
            CHECK(word_to_index(word) == idx);
        }
}

TEST_CASE("shuffle product basics") {
    WordCombination bb = shuffle(Word("B"), Word("B"));
    REQUIRE(bb.size() == 1);
    CHECK(bb.at(Word("BB")) == 2);

    WordCombination abb = shuffle(Word("AB"), Word("B"));
    REQUIRE(abb.size() == 2);
    CHECK(abb.at(Word("ABB")) == 2);
    CHECK(abb.at(Word("BAB")) == 1);

    WordCombination unit = shuffle(Word("AAB"), Word(""));
    REQUIRE(unit.size() == 1);
    CHECK(unit.at(Word("AAB")) == 1);
}

TEST_CASE("shuffle mass, commutativity, associativity") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 60; ++trial) {
        Word u = random_word(rng, 6), v = random_word(rng, 6);
        WordCombination uv = shuffle(u, v);
        Rational mass = 0;
        for (const auto& [w, c] : uv) {
            CHECK(w.weight() == u.weight() + v.weight());
            mass += c;
        }
        CHECK(mass == binomial(u.weight() + v.weight(), u.weight()));
        CHECK(uv == shuffle(v, u));
    }
    for (int trial = 0; trial < 15; ++trial) {
        Word u = random_word(rng, 3), v = random_word(rng, 3), w = random_word(rng, 3);
        WordCombination uv = shuffle(u, v), vw = shuffle(v, w);
        WordCombination single_w{{w, Rational(1)}}, single_u{{u, Rational(1)}};
        CHECK(shuffle(uv, single_w) == shuffle(single_u, vw));
    }
}

TEST_CASE("ordered surjections: counts and structure") {
    CHECK(enumerate_ordered_surjections(1, 1).size() == 3);
    CHECK(enumerate_ordered_surjections(2, 1).size() == 5);
    CHECK(enumerate_ordered_surjections(1, 2).size() == 5);

    for (int r = 1; r <= 4; ++r)
        for (int s = 1; s <= 4; ++s) {
            auto sigmas = enumerate_ordered_surjections(r, s);
            // closed form sum_k (r+s-k)!/((r-k)!(s-k)!k!)
            Rational expected = 0;
            for (int k = 0; k <= std::min(r, s); ++k) {
                Rational term = 1;
                for (int i = 2; i <= r + s - k; ++i) term *= i;
                for (int i = 2; i <= r - k; ++i) term /= i;
                for (int i = 2; i <= s - k; ++i) term /= i;
                for (int i = 2; i <= k; ++i) term /= i;
                expected += term;
            }
            CHECK(Rational(static_cast<long>(sigmas.size())) == expected);
            CHECK(static_cast<int>(sigmas.size()) == count_surjections_brute(r, s));

            std::set<std::vector<int>> seen;
            for (const auto& sig : sigmas) {
                CHECK(seen.insert(sig.assignment).second);  // no duplicates
                std::vector<int> hits(static_cast<size_t>(sig.target_size) + 1, 0);
                for (int x : sig.assignment) hits[static_cast<size_t>(x)]++;
                for (int i = 1; i <= sig.target_size; ++i) {
                    CHECK(hits[static_cast<size_t>(i)] >= 1);
                    CHECK(hits[static_cast<size_t>(i)] <= 2);
                }
                for (int i = 1; i < r; ++i) CHECK(sig.assignment[static_cast<size_t>(i - 1)] < sig.assignment[static_cast<size_t>(i)]);
                for (int j = 1; j < s; ++j) CHECK(sig.assignment[static_cast<size_t>(r + j - 1)] < sig.assignment[static_cast<size_t>(r + j)]);
                // every doubled target value pairs one left with one right slot
                for (int t = 1; t <= sig.target_size; ++t) {
                    if (hits[static_cast<size_t>(t)] == 2) {
                        int in_left = 0, in_right = 0;
                        for (int q = 0; q < r; ++q) in_left += sig.assignment[static_cast<size_t>(q)] == t;
                        for (int q = r; q < r + s; ++q) in_right += sig.assignment[static_cast<size_t>(q)] == t;
                        CHECK(in_left == 1);
                        CHECK(in_right == 1);
                    }
                }
            }
        }
}

TEST_CASE("stuffle contraction") {
    auto sigmas = enumerate_ordered_surjections(1, 1);
    OrderedSurjection id_sigma, merge_sigma, rev_sigma;
    for (const auto& sig : sigmas) {
        if (sig.target_size == 1) merge_sigma = sig;
        else if (sig.assignment == std::vector<int>{1, 2}) id_sigma = sig;
        else rev_sigma = sig;
    }
    CHECK(stuffle_contract(id_sigma, Index({4}), Index({7})) == Index({4, 7}));
    CHECK(stuffle_contract(merge_sigma, Index({2}), Index({3})) == Index({5}));
    CHECK(stuffle_contract(rev_sigma, Index({1}), Index({2})) == Index({2, 1}));
    CHECK_THROWS_AS(stuffle_contract(id_sigma, Index({1, 2}), Index({3})), Error);
}

TEST_CASE("stuffle product basics") {
    IndexCombination st = stuffle(Index({1}), Index({2}));
    REQUIRE(st.size() == 3);
    CHECK(st.at(Index({1, 2})) == 1);
    CHECK(st.at(Index({2, 1})) == 1);
    CHECK(st.at(Index({3})) == 1);

    IndexCombination unit = stuffle(Index({1}), Index());
    REQUIRE(unit.size() == 1);
    CHECK(unit.at(Index({1})) == 1);

    IndexCombination oo = stuffle(Index({1}), Index({1}));
    REQUIRE(oo.size() == 2);
    CHECK(oo.at(Index({1, 1})) == 2);
    CHECK(oo.at(Index({2})) == 1);
}

TEST_CASE("stuffle weight/depth, commutativity, associativity") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        Index a = random_index(rng, 5), b = random_index(rng, 5);
        IndexCombination ab = stuffle(a, b);
        for (const auto& [idx, c] : ab) {
            CHECK(idx.weight() == a.weight() + b.weight());
            CHECK(idx.depth() >= std::max(a.depth(), b.depth()));
            CHECK(idx.depth() <= a.depth() + b.depth());
            CHECK(c > 0);
        }
        CHECK(ab == stuffle(b, a));
    }
    for (int trial = 0; trial < 15; ++trial) {
        Index a = random_index(rng, 2), b = random_index(rng, 2), c = random_index(rng, 2);
        IndexCombination ab = stuffle(a, b), bc = stuffle(b, c);
        IndexCombination single_c{{c, Rational(1)}}, single_a{{a, Rational(1)}};
        CHECK(stuffle(ab, single_c) == stuffle(single_a, bc));
    }
}
