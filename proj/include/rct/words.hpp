#ifndef RCT_WORDS_HPP
#define RCT_WORDS_HPP
//
// Project     : rct
// Module      : words
// Description : free words, commuting multi-indices, and the growth
//               counts that bound defect sequences
//

#include <cstdint>
#include <vector>

#include <rct/types.hpp>

namespace rct {

enum class Mode { non_commuting, commuting };

/// A word over the alphabet {1,...,d}; the empty word is allowed.
struct Word {
    std::vector<int> letters;

    int length() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }
    auto operator<=>(const Word&) const = default;
};

/// A commuting exponent alpha in N^d.
struct MultiIndex {
    std::vector<int> exponents;

    int arity() const { return static_cast<int>(exponents.size()); }
    int degree() const;
    auto operator<=>(const MultiIndex&) const = default;
};

/// All words of length <= max_length in length-then-lexicographic order;
/// the empty word comes first.
std::vector<Word> enumerate_words(int arity, int max_length);

/// All alpha with |alpha| <= max_degree in degree-then-lexicographic
/// order (within a degree, the first exponent decreases).
std::vector<MultiIndex> enumerate_multi_indices(int arity, int max_degree);

/// 1 + d + ... + d^n
long long words_up_to(int arity, int max_length);

/// sum_{k=0}^{n} C(k+d-1, d-1)
long long monomials_up_to(int arity, int max_degree);

long long binomial(int n, int k);

/// Largest possible n-th defect index for a tuple with the given arity
/// and first defect index, per mode.
long long max_defect_index(int arity, int steps, long long first_defect, Mode mode);

} // namespace rct

#endif
