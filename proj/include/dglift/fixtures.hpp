// Reference signatures and modules used by the self-test suite, the
// acceptance runner and the unit tests.
#ifndef DGLIFT_FIXTURES_HPP
#define DGLIFT_FIXTURES_HPP

#include "dglift/module.hpp"

namespace dglift::fixtures {

/// K[a,b]<W1, W2 | dW1 = a, dW2 = b>.
SignaturePtr koszul_ab(const Field& field);
/// koszul_ab<X : 2 | dX = b*W1 - a*W2>.
SignaturePtr s1(const Field& field);
/// K[a,b,c]<X1, X2 : 1 | dX1 = ab, dX2 = ac><Y : 2 | dY = c*X1 - b*X2>.
SignaturePtr s2(const Field& field);
/// K[a]<X : 1 | dX = a>.
SignaturePtr s3(const Field& field);

struct DGModule {
  ModulePtr module;
  Differential differential;
};

/// Builds a module from (name, degree) pairs and (column, row, expression)
/// entries.
DGModule build(const SignaturePtr& sig, const std::vector<BasisEntry>& basis,
               const std::vector<std::tuple<std::string, std::string, std::string>>& entries);

/// Over s3: f0:0, f1:1, f2:2 with d f1 = f0 a, d f2 = f1 a - f0 X a.
DGModule n3(const Field& field);
/// Over s1: e0:0, e1:3 with d e1 = e0 (X + W1 W2).
DGModule n1(const Field& field);

struct ConjugatedLift {
  DGModule lifted;     // M, entries over A
  GradedMap u0;        // identity + e2 -> e0 X W1
  DGModule conjugated; // u0 M u0^{-1}
};

/// Over s1: M with e0:0, e1:1, e2:3, d e1 = e0 a,
/// d e2 = e1 (b W1 - a W2) + e0 a W1 W2, conjugated by u0.
ConjugatedLift n1_prime(const Field& field);

}  // namespace dglift::fixtures

#endif  // DGLIFT_FIXTURES_HPP
