#pragma once

#include <memory>
#include <string>
#include <vector>

#include "milnor/chow_model.hpp"
#include "milnor/correspondence.hpp"

namespace milnor {

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

bool all_pass(const std::vector<Verdict>& verdicts);
// Throws VerificationError naming the first failing identity.
void require_all(const std::vector<Verdict>& verdicts);

struct ManinSystem {
  int n;
  OracleRings rings;
  Correspondence pullback;           // pi^*: P -> X
  std::vector<Correspondence> f;     // f_i: X -> P, shift -i, i = 0..n-2
  std::vector<Correspondence> g;     // g_i: P -> X, shift i
  std::vector<Correspondence> p;     // p_k = g_{n-2-k} o f_{n-2-k}
  std::vector<Verdict> verdicts;
};

// With strict set, a failing identity throws VerificationError.
ManinSystem manin_system(int n, bool strict = true);

struct RestrictedSystem {
  int n;
  std::shared_ptr<const ChowModel> Y;
  Correspondence restriction;        // i^*: X -> Y
  Correspondence gysin;              // i_* = transpose of i^*
  std::vector<Correspondence> fbar;  // f_i o i_*, i = 0..n-2
  std::vector<Correspondence> gbar;  // i^* o g_i, i = 0..n-2
  std::vector<Correspondence> pbar;  // gbar_i o fbar_{i+1}, i = 0..n-3
  Correspondence rest;               // Delta_Y - sum pbar_i
  std::vector<Verdict> verdicts;
};

RestrictedSystem restricted_system(const ManinSystem& manin, int jobs = 1, bool strict = true);

struct ArtinIdempotent {
  int n;
  std::shared_ptr<const ChowModel> Y;
  std::shared_ptr<const ChowModel> L;
  Correspondence p;                       // sum_l eps gamma_l x gamma_l
  std::vector<Correspondence> terms;      // eps gamma_l x gamma_l
  Correspondence f_L;                     // Spec L -> Y: e_sigma -> sigma gamma_1
  Correspondence g_L;                     // Y -> Spec L: x -> (eps <x, tau gamma_1>)_tau
  std::vector<Correspondence> monodromy;  // action of eta^k on CH(Y_L)
  std::vector<Verdict> verdicts;
};

ArtinIdempotent artin_idempotent(int n, int jobs = 1, bool strict = true);

// Coordinates-level matrix of eta^k acting on CH(Y_L).
Correspondence monodromy_action(int n, int k, int jobs = 1);

// h-family Gram <h^{i+1} H^{n-3-i}, h^{i'+1} H^{n-3-i'}>_Y by localization.
IntMatrix h_family_gram(int n, int jobs = 1);
// Cross block <gamma_l, h^{i+1} H^{n-3-i}>_Y by localization.
IntMatrix cross_gram(int n, int jobs = 1);

std::vector<Verdict> orthogonality_check(const RestrictedSystem& restricted, const ArtinIdempotent& artin,
                                         int jobs = 1, bool strict = true);

}  // namespace milnor
