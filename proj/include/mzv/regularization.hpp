#pragma once

#include "mzv/symbol.hpp"
#include "mzv/words.hpp"

namespace mzv {

// Integral regularization: the linear map on words ending in B determined by
// admissible word -> its generator, B -> -T, computed by leading-B
// elimination through the shuffle product. Throws WordEndsInA otherwise.
RegValue reg_integral(const Word& word);
RegValue reg_integral(const WordCombination& words);

// Series regularization: admissible index -> its generator, (1) -> -T,
// computed by the trailing-1 recursion through the stuffle product.
RegValue reg_series(const Index& index);
RegValue reg_series(const IndexCombination& indices);

// The comparison map: SymbolRing-linear, with
//   sum_{n>=0} L(T^n) u^n / n! = exp(-sum_{n>=1} zeta^I(n) u^n / n),
// zeta^I(1) = -T, zeta^I(n) = zeta(n) for n >= 2.
RegValue l_map(const RegValue& value);

struct RegRelationReport {
    bool holds = false;
    RegValue series_side;
    RegValue integral_side_mapped;  // l_map(reg_integral(word(index)))
};

// reg_series(index) == l_map(reg_integral(index_to_word(index))), exactly.
RegRelationReport check_regularization_relation(const Index& index);

}  // namespace mzv
