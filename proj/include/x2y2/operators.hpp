#pragma once

#include "x2y2/types.hpp"

namespace x2y2 {

// Flattened layout: scalar index = ix*interior_y + iy; spinor operators
// interleave the C^2 component as the fastest index (2*node + s).

// Second-order 5-point stencil for -Laplace with Dirichlet boundary.
SparseHermitianOperator assemble_laplacian(const Box2D& box);

// supersymmetric: -Lap (x) I2 + x^2y^2 (x) I2 + x (x) g1 - y (x) g2,
// otherwise the scalar bosonic H_B = -Lap + x^2y^2.
SparseHermitianOperator assemble_hamiltonian(const Box2D& box, bool supersymmetric = true);

// Q = -i(dx g1 + dy g2) + xy g3, centered differences.
SparseHermitianOperator assemble_supercharge(const Box2D& box);

// Diagonal weight rho(x,y) = (1+x^2+y^2)^(-alpha/2).
SparseHermitianOperator assemble_weight(const Box2D& box, const WeightSpec& spec,
                                        int spinor_components = 1);

// H - lambda * rho on the spinor space.
SparseHermitianOperator assemble_shifted(const Box2D& box, const WeightSpec& spec);

// Nodal values of the scalar potential x^2y^2 on the interior grid (layout as above).
Vector potential_values(const Box2D& box);

}  // namespace x2y2
