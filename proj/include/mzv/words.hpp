#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv {

// Word over the alphabet {A,B}. A is the dt/t letter, B the dt/(1-t) letter.
struct Word {
    std::string letters;  // characters 'A' and 'B' only

    Word() = default;
    explicit Word(std::string s);

    int weight() const { return static_cast<int>(letters.size()); }
    int depth() const;  // number of B's
    bool empty() const { return letters.empty(); }
    bool ends_in_b() const { return !letters.empty() && letters.back() == 'B'; }

    Word concat(const Word& other) const { return Word(letters + other.letters); }

    friend bool operator==(const Word&, const Word&) = default;
    // graded-lexicographic: by weight, then by letters
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (a.letters.size() != b.letters.size())
            return a.letters.size() <=> b.letters.size();
        return a.letters <=> b.letters;
    }
};

// Index (n_1,...,n_m), entries >= 1. Admissible iff last entry >= 2
// (the empty index is admissible by convention).
struct Index {
    std::vector<int> entries;

    Index() = default;
    explicit Index(std::vector<int> e);

    int weight() const;
    int depth() const { return static_cast<int>(entries.size()); }
    bool empty() const { return entries.empty(); }
    bool admissible() const { return entries.empty() || entries.back() >= 2; }

    std::string str() const;                       // "(1,2)"
    static Index parse(const std::string& text);   // accepts "(1,2)" or "1,2"

    friend bool operator==(const Index&, const Index&) = default;
    // graded-lexicographic: by weight, then depth, then entries
    friend std::strong_ordering operator<=>(const Index& a, const Index& b) {
        if (int wa = a.weight(), wb = b.weight(); wa != wb) return wa <=> wb;
        if (a.entries.size() != b.entries.size())
            return a.entries.size() <=> b.entries.size();
        return a.entries <=> b.entries;
    }
};

using WordCombination = std::map<Word, Rational>;
using IndexCombination = std::map<Index, Rational>;

// Order-preserving surjection sigma: {1..r+s} -> {1..N} with
// sigma(1)<...<sigma(r) and sigma(r+1)<...<sigma(r+s); fibers of size <= 2,
// a size-2 fiber pairing one element of each chain.
struct OrderedSurjection {
    int r = 0;
    int s = 0;
    int target_size = 0;
    std::vector<int> assignment;  // assignment[i-1] = sigma(i), values in 1..target_size

    friend bool operator==(const OrderedSurjection&, const OrderedSurjection&) = default;
};

// W_(k_1,...,k_l) = A^{k_l-1}B A^{k_{l-1}-1}B ... A^{k_1-1}B  (blocks in
// reversed index order).
Word index_to_word(const Index& index);
// Inverse of index_to_word; throws WordEndsInA unless the word is empty or
// ends with B.
Index word_to_index(const Word& word);

// Sum over all interleavings of u and v (Sh(|u|,|v|) at the word level).
WordCombination shuffle(const Word& u, const Word& v);
WordCombination shuffle(const WordCombination& u, const WordCombination& v);

// All of Sh^<=(r,s), in a deterministic order.
std::vector<OrderedSurjection> enumerate_ordered_surjections(int r, int s);

// sigma(left,right): c_i = n_m + n_l if sigma^{-1}(i) = {m,l}, c_i = n_m if {m}.
Index stuffle_contract(const OrderedSurjection& sigma, const Index& left, const Index& right);

// Quasi-shuffle product: sum of stuffle_contract over Sh^<=(|left|,|right|).
IndexCombination stuffle(const Index& left, const Index& right);
IndexCombination stuffle(const IndexCombination& left, const IndexCombination& right);

// Combination plumbing.
void add_term(WordCombination& c, const Word& w, const Rational& coeff);
void add_term(IndexCombination& c, const Index& i, const Rational& coeff);

// All compositions of w (indices of weight w), in lexicographic order;
// w = 0 gives the empty index only.
std::vector<Index> all_indices_of_weight(int w);
std::vector<Index> admissible_indices_of_weight(int w);

}  // namespace mzv
