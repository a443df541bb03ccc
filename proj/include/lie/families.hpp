#pragma once

// Constructors for the algebra families the test corpus is built from:
// Heisenberg algebras, (special) linear algebras and their seaweeds, the
// symplectic rank-2 parabolic, Takiff extensions, low-dimensional solvable
// examples, and the two affine seaweed models q(a,b), r(a,b) together with
// their traceless variants.

#include <string>
#include <vector>

#include <lie/lie_algebra.hpp>
#include <lie/semidirect.hpp>

namespace lie {

// [x_i, y_i] = z; dim 2n+1
LieAlgebra heisenberg(int n);

// basis h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h
LieAlgebra sl2();

LieAlgebra gl(int n);
LieAlgebra sl(int n);

// Borel subalgebra of sl3 in the basis h = diag(1,-2,1), h1 = diag(1,0,-1),
// x = E12, y = E23, z = E13
LieAlgebra borel_sl3();

// stabiliser of a line in sp4 (antidiagonal form), dim 7
LieAlgebra sp4_parabolic();

// E_ij kept when block_top(i) <= block_top(j) and block_bot(i) >= block_bot(j),
// plus the traceless diagonal; compositions must sum to n
LieAlgebra seaweed_sl(int n, const std::vector<int>& top, const std::vector<int>& bottom);

// base tensor k[t]/(t^k)
LieAlgebra takiff(const LieAlgebra& base, int k);

// solvable dim 3: [t,x] = lambda x, [t,y] = mu y
LieAlgebra k_two_characters(const Rat& lambda, const Rat& mu);

// sl2 in the (h,e,f) basis acting naturally on m copies of k^2
SemidirectDecomposition sl2_natural_copies(int m);

// sl_n acting diagonally on m copies of k^n
SemidirectDecomposition sl_copies(int n, int m);

// (sl_{2n+2} + 4-dimensional torus) acting on four copies of the natural
// module, the i-th torus coordinate scaling the i-th copy
SemidirectDecomposition sl_plus_torus_4copies(int n = 0);

// (gl_a + gl_b) x| (k^a tensor k^b)^2 with (X,Y).w = Xw - wY
SemidirectDecomposition q_family(int a, int b);
// Levi cut to s(gl_a + gl_b)
SemidirectDecomposition q_bar(int a, int b);

// (gl_a + gl_b) x| ((gl_a^ab + W) + V), W,V copies of k^a tensor k^b,
// gl_a adjoint on the abelian copy gl_a^ab and [m, w] = m w into V;
// presented with levi (gl_a + gl_b) x| gl_a^ab and abelian ideal W + V
SemidirectDecomposition r_family(int a, int b);
SemidirectDecomposition r_bar(int a, int b);

int expected_index_q(int a, int b);    // gcd(2a, a+b)
int expected_index_r(int a, int b);    // gcd(2a, b)

// partition used by the contact analysis: the first tensor copy joins the
// levi, the second is the abelian ideal
Splitting analysis_splitting_q_bar(int a, int b);
// a <= b: levi s + W, ideal m + V; a > b: levi s + m, ideal W + V
Splitting analysis_splitting_r_bar(int a, int b);

// parameter reduction chain down to a product-of-smaller or terminal case
std::vector<std::string> reduction_chain(bool bar_q, int a, int b);

// image of the basis of r(a, b-a) under the embedding onto the stabiliser
// in q(a,b) of the dual point [I_a | 0] of the second copy; a <= b
std::vector<Vec> stabiliser_embedding(int a, int b);

}  // namespace lie
