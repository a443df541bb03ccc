#ifndef LIE_PFAFFIAN_HPP
#define LIE_PFAFFIAN_HPP

// Pfaffians of skew-symmetric rational matrices. Sign convention:
// Pf [[0,1],[-1,0]] = +1, extended by first-row expansion.

#include <lie/linalg.hpp>

namespace lie {

// Production route: skew elimination by congruence transvections
// (Parlett-Reid style), O(n^3) exact rational operations.
Rat pfaffian(const RatMat& skew);

// Reference route: literal recursive expansion along the first row,
// O(n!!); kept for cross-checking the elimination.
Rat pfaffian_expansion(const RatMat& skew);

}  // namespace lie

#endif
