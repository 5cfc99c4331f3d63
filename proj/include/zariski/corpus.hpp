#pragma once

#include <string>
#include <vector>

#include "zariski/curves.hpp"

namespace zariski {

struct CorpusCurve {
  std::string name;
  CurveSpec curve;
  RootOfUnity predicted;  // half-plane class
};

/// One Kummer construction per realizable stratum, found by scanning tau choices.
inline std::vector<CorpusCurve> stratum_representatives(int d) {
  std::vector<CorpusCurve> out;
  for (const auto& s : enumerate_strata(d)) {
    if (!s.realizable) continue;
    bool found = false;
    for (int variant = 1; variant <= 2 && !found; ++variant)
      for (int a = 0; a < d && !found; ++a)
        for (int b = 0; b < d && !found; ++b) {
          if (variant == 2 && a == b) continue;
          std::array<RootOfUnity, 3> taus{RootOfUnity(2 * d, 2 * a + 1), RootOfUnity(2 * d, 2 * b + 1), RootOfUnity(2 * d, 1)};
          auto k = kummer_construct(d, taus, variant);
          if (half_plane_class(k.predicted, d) != s.zeta) continue;
          out.push_back({"kummer" + std::to_string(variant) + "_d" + std::to_string(d) + "_" + s.zeta.to_string(), k.curve,
                         s.zeta});
          found = true;
        }
    // Even d, zeta = 1: only the degeneration family with t > 0 reaches it.
    for (int den : {1, 2, 4, 10}) {
      if (found || s.zeta != RootOfUnity(1, 0) || d < 3) break;
      std::array<RootOfUnity, 3> taus{RootOfUnity(2 * d, 1), RootOfUnity(2 * d, 3), RootOfUnity(2 * d, 5)};
      CurveSpec c = degeneration_member(d, taus, Rational(1, den));
      try {
        if (verify_hat(c).label.zeta != s.zeta) continue;
      } catch (const Error&) {
        continue;
      }
      out.push_back({"degeneration_d" + std::to_string(d) + "_t1/" + std::to_string(den), c, s.zeta});
      found = true;
    }
    if (!found) raise(ErrorCode::PrecondViolation, "no Kummer construction reaches stratum " + s.zeta.to_string());
  }
  return out;
}

/// Hat curves for d = 2..max_d plus the conic obtained from the tricuspidal quartic.
inline std::vector<CorpusCurve> hat_corpus(int max_d) {
  std::vector<CorpusCurve> out;
  for (int d = 2; d <= max_d; ++d)
    for (auto& c : stratum_representatives(d)) out.push_back(std::move(c));
  out.push_back({"cremona_quartic_conic", cremona_map(as_tilde(tricuspidal_quartic())), RootOfUnity(2, 1)});
  return out;
}

}  // namespace zariski
