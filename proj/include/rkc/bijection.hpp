#ifndef RKC_BIJECTION_HPP
#define RKC_BIJECTION_HPP

#include <string>
#include <vector>

#include "rkc/colored_partition.hpp"
#include "rkc/kronecker_tableaux.hpp"
#include "rkc/partition.hpp"

namespace rkc {

// The column of height a+1 attached to a letter. The top blue_height cells
// belong to alpha; `entries` fill the rest, top to bottom.
//   1̄          : blue 1,   entries 1, 3, 4, ..., a+1
//   i  (2..a)  : blue i,   entries i+1, i+2, ..., a+1
//   ī  (2..a)  : blue i,   entries 1, i+2, ..., a+1
//   (a+1)‾     : blue a+1, no entries
struct ColumnTemplate {
    Symbol symbol;
    int blue_height = 0;
    std::vector<int> entries;

    friend bool operator==(const ColumnTemplate&, const ColumnTemplate&) = default;
};

ColumnTemplate column_template(int a, const Symbol& s);

// Left-to-right column order of T(beta): taller blue part first, and at equal
// height the barred letter first (its 1 must sit left of the unbarred i+1).
std::vector<ColumnTemplate> ordered_columns(const ColoredPartition& beta);

// alpha_{a+1} = m_{(a+1)‾}, alpha_i = alpha_{i+1} + m_i + m_ī, alpha_1 = alpha_2 + m_1̄.
Partition read_alpha(const ColoredPartition& beta);

// The shape (3k, k^a); empty when k == 0.
Partition bijection_shape(int a, int k);

struct BijectionResult {
    ColoredPartition beta;
    Partition alpha;
    KroneckerTableau tableau;
};

// T(beta): the ordered columns form the left block, row i (i >= 2) is padded
// with i's to width k, and row 1 is completed with the rest of the content of
// type (3k, k^a)/alpha in weakly increasing order. Throws PreconditionError
// when weight(beta) != k.
BijectionResult colored_to_tableau(const ColoredPartition& beta, int k);

// Inverse: reads the left block of alpha_1 columns back into letters and
// checks that rebuilding gives T. Throws NotInImageError otherwise.
ColoredPartition tableau_to_colored(const KroneckerTableau& t, int a);

// ASCII grid, one row per line, alpha cells drawn as '*'.
std::string render_ascii(const SkewTableau& t);

} // namespace rkc

#endif
