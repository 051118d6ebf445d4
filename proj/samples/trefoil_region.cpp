// Lambda between the trefoil and the unknot over Z, with its staircase.
#include "gordian/lambda.hpp"
#include "gordian/pairing.hpp"

#include <iostream>

int main() {
    using namespace gordian;
    RingTag Z = RingTag::Z();
    Decomposition trefoil = decompose(zero_closure(Slope(-3, 1)));
    Decomposition unknot = decompose(torus_complex(2, 0, 0, Z));
    LambdaResult r = lambda_region_structured(trefoil, unknot);
    std::cout << "Lambda(T(2,3), U; Z) = " << r.region.to_string() << "\n";
    std::cout << "lambda = " << lambda_to_string(small_lambda(r.region))
              << ", lambda0 = " << lambda_to_string(small_lambda0(r.region)) << "\n\n";
    std::cout << r.region.render(-2, 4, -2, 4);
}
