#pragma once

#include "knotlab/bigfloat.hpp"

namespace knotlab::geom {

// Element [alpha, beta; z] of the C*-bundle E(dM) over the boundary
// character variety, considered modulo the G-action below.
struct CSBundleElement {
    BigComplex alpha, beta, z;
};

enum class BundleGen { x, y, b };

// x.[a,b;z] = [a+1, b; z e^{2 pi i b}],  y.[a,b;z] = [a, b+1; z e^{-2 pi i a}],
// b.[a,b;z] = [-a, -b; z].
CSBundleElement bundle_act(BundleGen g, const CSBundleElement& e);

// integer lattice translation x^j y^k
CSBundleElement bundle_translate(const CSBundleElement& e, long j, long k);

// equality in (Hom(pi_1, C) x C*)/G: some word in G carries e1 to e2.
bool bundle_eq(const CSBundleElement& e1, const CSBundleElement& e2);
bool bundle_eq(const CSBundleElement& e1, const CSBundleElement& e2, const BigReal& tol);

// Kirk-Klassen gluing: product of z-components once both elements are
// expressed over the same boundary character (up to the b-involution and
// lattice translation); throws if the characters do not match.
BigComplex cs_glue(const CSBundleElement& e1, const CSBundleElement& e2);

// cs_K([rho]) = [u/(4 pi i), v(u)/(4 pi i); exp((i/2pi) f(u))] for the
// figure-eight.
CSBundleElement cs_kk_fig8(const BigComplex& u);

}  // namespace knotlab::geom
