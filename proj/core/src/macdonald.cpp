#include "hlq/macdonald.hpp"

#include <stdexcept>

namespace hlq {

namespace {

void require_strip(const Partition& lambda, const Partition& mu) {
  if (!is_horizontal_strip(lambda, mu)) {
    throw std::invalid_argument(lambda.to_string() + " / " + mu.to_string() + " is not a horizontal strip");
  }
}

bool in_diagram(const Partition& lambda, int i, int j) {
  return i >= 1 && j >= 1 && lambda.part(static_cast<std::size_t>(i)) >= j;
}

BiRational column_product(const Partition& lambda, const Partition& mu, bool inverted) {
  require_strip(lambda, mu);
  BiRational r = BiPoly(1);
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(static_cast<std::size_t>(i)); ++j) {
      if (lambda.column(j) == mu.column(j)) continue;
      const BiRational bl = macdonald_b(lambda, i, j);
      const BiRational bm = macdonald_b(mu, i, j);
      r *= inverted ? bm / bl : bl / bm;
    }
  }
  return r;
}

}  // namespace

SquareData square_data(const Partition& lambda, int i, int j) {
  if (!in_diagram(lambda, i, j)) throw std::invalid_argument("square outside the diagram");
  return {i, j, lambda.part(static_cast<std::size_t>(i)) - j, lambda.column(j) - i};
}

BiPoly macdonald_cprime(const Partition& lambda) {
  BiPoly c(1);
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.part(static_cast<std::size_t>(i)); ++j) {
      const auto s = square_data(lambda, i, j);
      c *= BiPoly::one_minus(s.arm + 1, s.leg);
    }
  }
  return c;
}

BiRational macdonald_b(const Partition& lambda, int i, int j) {
  if (!in_diagram(lambda, i, j)) return BiRational(BiPoly(1));
  const auto s = square_data(lambda, i, j);
  return BiRational(BiPoly::one_minus(s.arm, s.leg + 1), BiPoly::one_minus(s.arm + 1, s.leg));
}

BiRational macdonald_psi(const Partition& lambda, const Partition& mu) {
  require_strip(lambda, mu);
  BiRational r = BiPoly(1);
  for (int i = 1; i <= mu.length(); ++i) {
    if (lambda.part(static_cast<std::size_t>(i)) == mu.part(static_cast<std::size_t>(i))) continue;
    for (int j = 1; j <= mu.part(static_cast<std::size_t>(i)); ++j) {
      if (lambda.column(j) != mu.column(j)) continue;
      r *= macdonald_b(mu, i, j) / macdonald_b(lambda, i, j);
    }
  }
  return r;
}

BiRational macdonald_phi(const Partition& lambda, const Partition& mu) { return column_product(lambda, mu, false); }

BiRational macdonald_phi_inverted(const Partition& lambda, const Partition& mu) {
  return column_product(lambda, mu, true);
}

}  // namespace hlq
