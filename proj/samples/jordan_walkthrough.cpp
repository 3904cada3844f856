// Walks through the library on x^5 - 7x^2 + 6 and x^n - 1.

#include <iostream>

#include "polyjordan/polyjordan.hpp"

using namespace polyjordan;

int main() {
  const Poly f = parse_poly("x^5 - 7*x^2 + 6").dense();
  std::cout << "f = " << format_poly(f) << "\n";

  const auto seq = sturm_sequence(f);
  std::cout << "Sturm chain:\n";
  for (const auto& p : seq.chain()) std::cout << "  " << format_poly(p) << "\n";

  const auto zero = ExtendedBound(Rational(0));
  std::cout << "positive real roots: " << sturm_count(seq, zero, ExtendedBound::positive_infinity()) << "\n"
            << "negative real roots: " << sturm_count(seq, ExtendedBound::negative_infinity(), zero) << "\n"
            << "distinct complex roots: " << distinct_root_count(f) << "\n";

  // Nilpotent f(X) for 6x6 X: eigenvalues of X are roots of f.
  const auto nil = nilpotency_report(f, 6);
  std::cout << "nilpotency, m = 6:\n";
  for (const auto& [k, count] : nil.per_k) std::cout << "  K = " << k << ": " << count << "\n";
  std::cout << "  total: " << nil.total << "\n";

  // Diagonalizable f(X) for g(x) = x^4 - 1: only eigenvalue 0 is flat.
  const Poly g = parse_poly("x^4 - 1").dense();
  const auto flat = locus(g, 2);
  std::cout << "flat points of " << format_poly(g) << ": h = " << format_poly(flat.h)
            << ", h_sf = " << format_poly(flat.h_sf) << ", count = " << flat.count << "\n";
  const auto diag = diagonalizability_report(g, 3, 2);
  std::cout << "diagonalizable classes for m = 3: " << diag.total << "\n";

  const auto block = f_of_jordan_block(g, Rational(0), 3);
  std::cout << "first row of g(J_3(0)):";
  for (const auto& c : block.first_row) std::cout << " " << c;
  std::cout << "\n";
  return 0;
}
