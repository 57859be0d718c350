#pragma once

#include "polya/bigrational.hpp"
#include "polya/real.hpp"

#include <string>

namespace polya {

enum class Kind { Sphere, Hemisphere, Wedge };

// Closed sphere S^n, Dirichlet hemisphere S^n_+, or the wedge W^n_{pi/p}
// (p copies of which tile the hemisphere; p = 1 is the hemisphere itself).
struct Manifold {
  Kind kind = Kind::Hemisphere;
  int n = 2;
  int p = 1;

  static Manifold sphere(int n);
  static Manifold hemisphere(int n);
  static Manifold wedge(int n, int p);

  // Lowest chain index: 0 on the sphere, 1 otherwise.
  long first_K() const { return kind == Kind::Sphere ? 0 : 1; }
  // Lowest eigenvalue order: 0 on the sphere, 1 otherwise.
  long first_k() const { return kind == Kind::Sphere ? 0 : 1; }
  std::string name() const;
};

// The K-th distinct eigenvalue with its multiplicity and order window.
struct Chain {
  long K = 0;
  BigInt lambda;
  BigInt mult;
  BigInt k_minus;
  BigInt k_plus;
};

struct OrderLookup {
  Chain chain;
  // k = k_minus + j - 1, so j runs over [1, mult].
  BigInt j;
};

struct CountResult {
  BigInt count;
  Chain last_chain;
};

struct WeylConstant {
  // C_W = base^(2/n).
  BigRational base;
  Real value;
};

WeylConstant weyl_constant(const Manifold& m, const RealCtx& ctx);
Real unit_ball_volume(int n, const RealCtx& ctx);
// Riemannian volume of the hemisphere S^n_+.
Real hemisphere_volume(int n, const RealCtx& ctx);

BigInt distinct_eigenvalue(const Manifold& m, long K);
BigInt multiplicity(const Manifold& m, long K);
// Number of eigenvalues (with multiplicity) in chains up to and including K.
// Sphere accepts K >= -1 with sigma(-1) = 0; hemisphere K >= 0 with sigma(0) = 0.
BigInt sigma(const Manifold& m, long K);
// sigma extended to real arguments by the same polynomial.
Real sigma_real(const Manifold& m, const Real& y);
Chain chain(const Manifold& m, long K);
OrderLookup chain_of_order(const Manifold& m, const BigInt& k);
BigInt eigenvalue(const Manifold& m, const BigInt& k);

enum class InverseMethod { Auto, ClosedForm, RootFinder };

// Real y with sigma(y) = x. Closed forms for n in {2, 3, 4}; otherwise a
// bracketed bisection followed by Newton. Sphere: sigma_inverse(0) = -1.
// Hemisphere: sigma_inverse(0) = 0.
Real sigma_inverse(const Manifold& m, const Real& x, const RealCtx& ctx,
                   InverseMethod method = InverseMethod::Auto);

CountResult counting_function(const Manifold& m, const BigInt& threshold);

}  // namespace polya
