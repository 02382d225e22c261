// Walks through the jump computation for z1^11 + z2^6 + z3^5 and compares
// the inductive algorithm with the brute-force oracle.

#include <iostream>

#include "milnor_jump/milnor_jump.hpp"

int main() {
  using namespace milnor_jump;

  const BrieskornPham f0{11, 6, 5};
  std::cout << "mu(f0)          = " << milnor_number(f0) << '\n';
  std::cout << "nu(supp f0)     = " << newton_number(bp_support(f0)) << '\n';

  const LambdaHyp hyp = lambda_hyp(f0);
  std::cout << "lambda_hyp      = " << hyp.value << " (axis " << hyp.k0 + 1 << ", point " << hyp.realizer_embedded.str()
            << ")\n";

  const JumpReport report = lambda_nd(f0);
  for (const InteriorStep& step : report.interior_trace) {
    std::cout << "  l = " << step.l << ": ";
    if (!step.solution) {
      std::cout << "no solution in the box\n";
      continue;
    }
    std::cout << "i_tilde = " << step.solution->i_tilde << (step.admissible ? " (admissible)\n" : " (too large)\n");
  }
  std::cout << "lambda_nd       = " << report.lambda_nd << " realised by z^" << report.realizer.str() << '\n';

  const OracleResult brute = lambda_nd_oracle(f0);
  std::cout << "oracle          = " << brute.value << " at " << brute.realizer.str() << '\n';
  return brute.value == report.lambda_nd ? 0 : 1;
}
