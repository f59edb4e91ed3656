#pragma once

#include "bispec/dsl.hpp"

namespace bispec {

// The three bundled example problems (also shipped as fixtures/*.bsp).
// 1: the 2x2 pair with Theta = x^3 I;
// 2: its 3x3 step-up with the order-2 partner identity;
// 3: the two-sided 2x2 pair L Psi = Psi F, Psi B = Theta Psi.
const std::string& example_text(int n);

ProblemFile load_example(int n);

}  // namespace bispec
