#pragma once

#include "deq/combinat.hpp"
#include "deq/tableau.hpp"

namespace deq {

/// True when the letter i sits positionally between i-1 and i+1 in w; this
/// is the common fixed-point condition of all three involution families.
bool letter_between_neighbours(int i, const Permutation& w);

/// True when the letters i-1, i, i+1 occupy three adjacent positions of w.
bool neighbours_consecutive(int i, const Permutation& w);

/// Haiman's elementary dual equivalence: unless i lies between i-1 and i+1,
/// interchanges i with whichever of i-1, i+1 is positionally farther away.
/// Requires 2 <= i <= n-1 (std::out_of_range otherwise).
Permutation haiman_d(int i, const Permutation& w);

/// Twisted variant: unless i lies between i-1 and i+1, rotates the three
/// letters cyclically within their positions so that i crosses to the other
/// side of the pair.
Permutation twisted_d(int i, const Permutation& w);

/// Twisted move when i-1, i, i+1 occupy adjacent positions, Haiman's move
/// otherwise.
Permutation hybrid_phi(int i, const Permutation& w);

/// Applies haiman_d to the reading word of t and writes the result back into
/// the same cells.
StandardYoungTableau lift_to_tableaux(int i, const StandardYoungTableau& t);

}  // namespace deq
