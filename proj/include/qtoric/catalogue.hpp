#pragma once

// Named example inputs shipped with the tool: products of two-spheres
// (cubes with the identity-block matrix), complex projective spaces
// (simplices), the Hirzebruch-type twists over the square, and a few
// product mixes. Every bundle passes the nondegeneracy check at load.

#include "qtoric/charalg.hpp"
#include "qtoric/io.hpp"
#include "qtoric/polytope.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qtoric {

// cube(n) with column e_i on facets i and i+n.
inline InputBundle standard_sphere_product(int n) {
    InputBundle b;
    b.name = "cube" + std::to_string(n);
    b.polytope = cube(n);
    b.lambda.lambda = IMatrix(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        b.lambda.lambda(i, i) = 1;
        b.lambda.lambda(i, i + n) = 1;
    }
    return b;
}

// simplex(n) with the standard projective-space data [I | -1].
inline InputBundle projective_space(int n) {
    InputBundle b;
    b.name = "cp" + std::to_string(n);
    b.polytope = simplex(n);
    b.lambda.lambda = IMatrix(n, n + 1);
    for (int i = 0; i < n; ++i) {
        b.lambda.lambda(i, i) = 1;
        b.lambda.lambda(i, n) = -1;
    }
    return b;
}

// cube(2) with the twist parameter a on the fourth facet.
inline InputBundle hirzebruch_twist(int a) {
    InputBundle b;
    b.name = "hirzebruch_a" + std::to_string(a);
    b.polytope = cube(2);
    b.lambda.lambda = IMatrix{{Integer(1), Integer(0), Integer(-1), Integer(a)},
                              {Integer(0), Integer(1), Integer(0), Integer(-1)}};
    return b;
}

// Product bundle: polytope product with block-diagonal characteristic data.
inline InputBundle bundle_product(const InputBundle& a, const InputBundle& b,
                                  const std::string& name) {
    InputBundle out;
    out.name = name;
    out.polytope = product(a.polytope, b.polytope);
    const int n = out.polytope.dim_n;
    const int m = out.polytope.num_facets;
    out.lambda.lambda = IMatrix(n, m);
    for (int r = 0; r < a.polytope.dim_n; ++r)
        for (int c = 0; c < a.polytope.num_facets; ++c)
            out.lambda.lambda(r, c) = a.lambda.lambda(r, c);
    for (int r = 0; r < b.polytope.dim_n; ++r)
        for (int c = 0; c < b.polytope.num_facets; ++c)
            out.lambda.lambda(r + a.polytope.dim_n, c + a.polytope.num_facets) =
                b.lambda.lambda(r, c);
    return out;
}

inline std::vector<InputBundle> catalogue() {
    std::vector<InputBundle> out;
    for (int n = 1; n <= 4; ++n) out.push_back(standard_sphere_product(n));
    for (int n = 1; n <= 4; ++n) out.push_back(projective_space(n));
    for (int a = -3; a <= 3; ++a) out.push_back(hirzebruch_twist(a));

    const InputBundle s2 = standard_sphere_product(1);
    const InputBundle cp1 = projective_space(1);
    const InputBundle cp2 = projective_space(2);
    out.push_back(bundle_product(s2, s2, "s2xs2"));
    out.push_back(bundle_product(bundle_product(s2, s2, ""), s2, "s2xs2xs2"));
    out.push_back(bundle_product(s2, cp2, "s2xcp2"));
    out.push_back(bundle_product(cp2, cp2, "cp2xcp2"));
    out.push_back(bundle_product(cp1, cp1, "cp1xcp1"));
    out.push_back(bundle_product(cp1, cp2, "cp1xcp2"));

    for (const auto& b : out) {
        if (!check_nondegeneracy(b.polytope, b.lambda).ok)
            throw std::logic_error("catalogue bundle " + b.name + " is degenerate");
    }
    return out;
}

inline const InputBundle& find_bundle(const std::vector<InputBundle>& bundles,
                                      const std::string& name) {
    for (const auto& b : bundles)
        if (b.name == name) return b;
    throw std::invalid_argument("no catalogue bundle named \"" + name + "\"");
}

}  // namespace qtoric
