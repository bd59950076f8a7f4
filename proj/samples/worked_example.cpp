/*
   Copyright 2026 The hallzero Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Computes the constant term of the Hall polynomial for
// alpha = (2,1), beta = (2), gamma = (3,1^2) two ways: in the degenerate
// Hall algebra, and from the interpolated Hall polynomial.

#include <iostream>

#include "hallzero/hallzero.hpp"

int main() {
  using namespace hallzero;
  const auto alpha = parse("(2,1)");
  const auto beta = parse("(2)");
  const auto gamma = parse("(3,1^2)");

  std::cout << "u" << alpha << " u" << beta << " = " << basis_product(alpha, beta) << '\n';
  std::cout << "F(M" << alpha << ") F(M" << beta << ") = "
            << h0_multiply(f_map(alpha), f_map(beta)) << '\n';

  const auto poly = interpolate_hall_poly(alpha, beta, gamma);
  std::cout << "Hall polynomial: " << format(poly) << '\n';
  std::cout << "constant term (algebra): " << constant_term(alpha, beta, gamma) << '\n';
  std::cout << "constant term (interpolation): " << poly.coefficient(0) << '\n';
}
