/*
   Copyright 2026 The parcubic Authors

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

// Walks one five-dimensional catalog algebra through the library: validation, semi-canonical
// form, the associated hypersurface and a seeded check of its PDE.

#include <cstdlib>
#include <iostream>

#include <parcubic/parcubic.hpp>

using namespace parcubic;

int main(int argc, char** argv) {
    const std::string key = argc > 1 ? argv[1] : "algebras5.7";
    const MetrisedAlgebra m = builtin(CatalogKey{key, key == "algebras5.3" || key == "algebras5.6" ? std::optional<Rational>(1) : std::nullopt});

    std::cout << std::boolalpha;
    const ValidationReport v = validate(m);
    std::cout << key << ": jordan " << v.jordan << ", trace form " << v.trace_form << ", nilpotent " << v.nilpotent
              << ", signature (" << v.signature.positives << "," << v.signature.negatives << ")\n";

    const CanonicalResult c = semi_canonicalize(m);
    std::cout << "semi-canonical form has " << c.partition.two_blocks() << " hyperbolic 2-block(s)\n";

    const Surface s = generate_surface(m, SurfaceMode::hatC);
    std::cout << "F = " << to_string(s.F()) << "\n";

    const HypersphereCheck h = is_improper_hypersphere(s);
    std::cout << "det F'' = " << to_string(h.det) << "\n";

    const VerificationReport r = verify_pde(s, PdeKind::hatC, 10, 2026);
    std::cout << "PDE residual zero at " << r.points.size() << " seeded points: " << (r.passed() ? "yes" : "no") << "\n";

    const Vector origin(m.dim(), Rational(0));
    std::cout << "algebra recovered at the origin: " << (algebra_at_point(s.F(), origin) == m ? "yes" : "no") << "\n";
    return r.passed() ? EXIT_SUCCESS : EXIT_FAILURE;
}
