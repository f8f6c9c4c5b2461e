#include "deq/involutions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace deq {

namespace {

void check_index(int i, const Permutation& w) {
  if (i < 2 || i > w.size() - 1)
    throw std::out_of_range("involution index " + std::to_string(i) + " outside [2, " +
                            std::to_string(w.size() - 1) + "]");
}

}  // namespace

bool letter_between_neighbours(int i, const Permutation& w) {
  const int a = w.position_of(i - 1), b = w.position_of(i), c = w.position_of(i + 1);
  return (a < b && b < c) || (c < b && b < a);
}

bool neighbours_consecutive(int i, const Permutation& w) {
  std::array<int, 3> p{w.position_of(i - 1), w.position_of(i), w.position_of(i + 1)};
  std::sort(p.begin(), p.end());
  return p[2] - p[0] == 2;
}

Permutation haiman_d(int i, const Permutation& w) {
  check_index(i, w);
  if (letter_between_neighbours(i, w)) return w;
  const int here = w.position_of(i);
  const int below = std::abs(w.position_of(i - 1) - here);
  const int above = std::abs(w.position_of(i + 1) - here);
  return w.swap_values(i, below > above ? i - 1 : i + 1);
}

Permutation twisted_d(int i, const Permutation& w) {
  check_index(i, w);
  if (letter_between_neighbours(i, w)) return w;
  std::array<int, 3> pos{w.position_of(i - 1), w.position_of(i), w.position_of(i + 1)};
  std::sort(pos.begin(), pos.end());
  std::array<int, 3> vals{w.at(pos[0]), w.at(pos[1]), w.at(pos[2])};
  // i is outermost; shift it to the opposite end keeping the other two in order.
  if (vals[0] == i)
    std::rotate(vals.begin(), vals.begin() + 1, vals.end());
  else
    std::rotate(vals.begin(), vals.begin() + 2, vals.end());
  std::vector<int> out = w.word();
  for (int k = 0; k < 3; ++k) out[pos[k] - 1] = vals[k];
  return Permutation(std::move(out));
}

Permutation hybrid_phi(int i, const Permutation& w) {
  check_index(i, w);
  return neighbours_consecutive(i, w) ? twisted_d(i, w) : haiman_d(i, w);
}

StandardYoungTableau lift_to_tableaux(int i, const StandardYoungTableau& t) {
  const Permutation w = haiman_d(i, reading_word(t));
  try {
    return tableau_from_reading_word(t.shape(), w);
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("lifted involution left SYT: ") + e.what());
  }
}

}  // namespace deq
