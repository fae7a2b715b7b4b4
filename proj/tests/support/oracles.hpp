#pragma once

// Test-side reference computations. Each one takes a different route from the
// library so that agreement is evidence, not tautology.

#include "canred/rootsys.hpp"

#include <set>
#include <vector>

namespace oracle {

using canred::IndexSet;
using canred::IntMatrix;
using canred::Rational;
using canred::RootVec;
using canred::WeightVec;

/// All roots (both signs) as the orbit of the simple roots under the simple
/// reflections s_i(b) = b - <b, a_i^vee> a_i.
std::set<std::vector<int>> reflection_orbit(const IntMatrix& cartan);

/// Positive roots from reflection_orbit.
std::set<std::vector<int>> positive_roots(const IntMatrix& cartan);

/// <lambda, a_i^vee> = sum_j lambda_j C[i][j] with C read directly.
Rational pairing(const IntMatrix& cartan, const WeightVec& lambda, int i);

/// n_L(lambda) via the dual root system: positive coroots are the positive
/// roots of C^T, and <lambda, sum c_i a_i^vee> = sum c_i <lambda, a_i^vee>.
Rational n_levi_dual(const IntMatrix& cartan, const IndexSet& levi, const WeightVec& lambda);

/// Fundamental weights by solving <omega_i, a_j^vee> = delta_ij one column
/// at a time with fraction-free elimination.
std::vector<WeightVec> fundamental_weights(const IntMatrix& cartan);

/// Weight of G2 with both coordinates as integers, shorthand for tests.
WeightVec w(std::initializer_list<long> coords);

}  // namespace oracle
