#pragma once

#include <optional>

#include "seif/jordan.hpp"

namespace seif {

// Seifert form L(a,b) = a^T G b on a real space, nondegenerate.
struct SeifertForm {
  Mat gram;
  std::optional<MatrixQ> exact;

  static SeifertForm from_exact(const MatrixQ& g);
  static SeifertForm from_numeric(const Mat& g);
  int dim() const { return int(gram.rows()); }
  SeifertForm scaled(int sign) const;
};

// Triple (H, M, S): S is (-1)^sym-symmetric, nondegenerate, M an S-isometry.
struct IsometricTriple {
  Mat s;
  Mat m;
  int sym = 0;
  int dim() const { return int(s.rows()); }
};

void validate_seifert(const SeifertForm& l, double tol);
void validate_triple(const IsometricTriple& t, double tol);

// M with L(Ma, b) = L(b, a): M = G^{-T} G.
Mat monodromy_of(const SeifertForm& l);
MatrixQ monodromy_exact(const MatrixQ& g);

// Restriction of a bilinear form to an M-invariant real subspace.
struct RestrictedForm {
  Mat basis;  // real orthonormal columns
  Mat gram;
  int dim() const { return int(basis.cols()); }
};

struct DerivedForms {
  Mat i_s, i_a;             // on H
  RestrictedForm i_s2;      // on H_{!=-1}
  RestrictedForm i_a2;      // on H_{!=1}
  RestrictedForm i_s3;      // on H_1
  RestrictedForm i_a3;      // on H_{-1}
  AutomorphismParts parts;  // of M
};

DerivedForms derived_forms(const SeifertForm& l, const Tolerances& tol = {});

// Seifert form built from a triple: 1: S((M+d)^{-1}a,b), 2: S(a,(M+d)b),
// 3: S(a,(M-d)/N b) with d = (-1)^sym.
SeifertForm seifert_from_triple(const IsometricTriple& t, int variant, const Tolerances& tol = {});

struct DualPair {
  SeifertForm dual;  // Gram G^{-T}
  Mat m_dual;        // M^{-T}
  Mat iso;           // H -> H^dual in dual-basis coordinates, equal to G^T
};
DualPair dual_pair(const SeifertForm& l);

// I = -L + (-1)^{m+1} L^T, as a Gram matrix.
Mat intersection_form(const SeifertForm& l, int m);
std::optional<MatrixQ> intersection_form_exact(const SeifertForm& l, int m);

// Change of basis: columns of c are the new basis vectors.
IsometricTriple transform(const IsometricTriple& t, const Mat& c);
SeifertForm transform(const SeifertForm& l, const Mat& c);

}  // namespace seif
