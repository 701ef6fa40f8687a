#pragma once

#include <optional>

#include "seif/forms.hpp"
#include "seif/types.hpp"

namespace seif {

// Real-form model of an irreducible triple; N a_k = a_{k+1} on each chain.
IsometricTriple model_triple(const IsoType& t);
// Model Seifert form pair built from the matching triple via variant 1.
SeifertForm model_seifert(const SeifType& t);

// Permuted identity E[j][k] = (-1)^j when j + k = n - 1 (0-based).
Mat permuted_identity(int n);
// Lower shift J_n: J e_k = e_{k+1}.
Mat shift_matrix(int n);

Decomposition<IsoType> classify_triple(const IsometricTriple& t, const Tolerances& tol = {});
Decomposition<SeifType> classify_seifert(const SeifertForm& l, const Tolerances& tol = {});

// The triple type underlying a Seifert type (the summand and form used).
struct SeifOrigin {
  IsoType triple;
  int sym;  // 0: I_s on H_{!=-1}, 1: I_a on H_{-1}
};
SeifOrigin seif_origin(const SeifType& t);

// Inertia of I_s and the triple type of (H, M, I_s) when I_s is nondegenerate.
struct SignatureRow {
  Inertia inertia;
  std::optional<IsoType> triple;
};
SignatureRow seif_signature_table(const SeifType& t);

}  // namespace seif
