#include "bispec/fixtures.hpp"

namespace bispec {

namespace {

const std::string kExample1 = R"(# 2x2 pair: L Psi = -z^2 Psi and Psi B = Theta Psi with Theta = x^3 I.
field Q;
fun Psi = expxz * [[z - 1/x, x^-2],
                   [0,       z - 1/x]];
op L = -Dx^2 + 2*[[x^-2, -2*x^-3],
                  [0,    x^-2]];
let p = -z^2;
op B = Dz^3 - 3*Dz^2*(1/z) + 3*Dz*(1/z^2) + 3*[[0, z^-2],[0, 0]];
mat Theta = [[x^3, 0],[0, x^3]];
)";

const std::string kExample2 = R"(# 3x3 step-up of the first pair, with an order-2 partner identity.
field Q;
fun Psi = expxz * [[z - 1/x, x^-2,    -x^-3],
                   [0,       z - 1/x, x^-2],
                   [0,       0,       z - 1/x]];
op L = -Dx^2 + 2*[[x^-2, -2*x^-3, 3*x^-4],
                  [0,    x^-2,    -2*x^-3],
                  [0,    0,       x^-2]];
let p = -z^2;
op B = Dz^2*[[0,0,0],[0,0,0],[1,0,0]]
     + Dz*[[0,0,0],[1,0,0],[-2/z,1,0]]
     + [[1,0,0],[-2/z,2,0],[0,0,1]];
mat Theta = [[1,0,0],[x,2,0],[x^2,x,1]];
)";

const std::string kExample3 = R"(# 2x2 two-sided pair: L Psi = Psi F and Psi B = Theta Psi.
field Q;
fun Psi = expxz * (1/((x-2)*x*z)) *
  [[(x^3*z^2 - 2*x^2*z^2 - 2*x^2*z + 3*x*z + 2*x - 2)/(x*z), 1/x],
   [(x*z - 2)/z, x^2*z - 2*x*z - x + 1]];
op L = [[0,0],[0,1]]*Dx^2
     + [[0, 1/((x-2)*x^2)],[-1/(x-2), 0]]*Dx
     + [[-1/(x^2*(x-2)^2), (x-1)/(x^3*(x-2)^2)],
        [(2*x-1)/(x*(x-2)^2), -(2*x^2-4*x+3)/(x^2*(x-2)^2)]];
mat F = [[0,0],[0,z^2]];
op B = Dz^3*[[0,0],[1,0]]
     + Dz^2*[[0,0],[-(2*z+1)/z,0]]
     + Dz*[[1,0],[2*(z-1)/z^2,1]]
     + [[-1/z,0],[6/z^3,1/z]];
mat Theta = [[x,0],[x^2*(x-2),x]];
)";

}  // namespace

const std::string& example_text(int n) {
    switch (n) {
        case 1: return kExample1;
        case 2: return kExample2;
        case 3: return kExample3;
        default: throw DomainError("examples are numbered 1..3");
    }
}

ProblemFile load_example(int n) { return parse_problem(example_text(n)); }

}  // namespace bispec
