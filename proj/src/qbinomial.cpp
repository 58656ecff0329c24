#include "hopfforge/qbinomial.hpp"

#include <vector>

namespace hopfforge {

Cyc q_integer(unsigned j, const Cyc& q) {
  Cyc acc(0), p(1);
  for (unsigned t = 0; t < j; ++t) {
    acc += p;
    p *= q;
  }
  return acc;
}

Cyc q_factorial(unsigned m, const Cyc& q) {
  Cyc acc(1);
  for (unsigned j = 1; j <= m; ++j) acc *= q_integer(j, q);
  return acc;
}

Cyc gauss_binomial(unsigned n, unsigned i, const Cyc& q) {
  if (i > n) throw input_error("gauss_binomial: i > n");
  std::vector<Cyc> row(n + 1, Cyc(0));
  row[0] = Cyc(1);
  for (unsigned r = 1; r <= n; ++r) {
    Cyc qp(1);
    std::vector<Cyc> next(n + 1, Cyc(0));
    next[0] = Cyc(1);
    for (unsigned c = 1; c <= r; ++c) {
      qp *= q;  // q^c
      next[c] = row[c - 1] + qp * row[c];
    }
    row = std::move(next);
  }
  return row[i];
}

}  // namespace hopfforge
