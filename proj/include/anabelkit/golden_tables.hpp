#pragma once

#include <string>
#include <vector>

namespace anabelkit {

// Radicand a (polynomial in z = zeta_9) of Q_3(zeta_9, a^{1/9}) and v_3 of
// its discriminant over Q_3.
struct GoldenDiscRow {
  std::string radicand;
  long v_disc;
};

// Curve over the common cyclotomic base, the two fields, and the expected
// quadruples [v(disc_min), f, Kodaira, c] over each.
struct GoldenCurveRow {
  std::string curve;
  std::string field_k;
  std::string field_l;
  std::string expected_k;
  std::string expected_l;
  std::string note;
};

const std::vector<GoldenDiscRow>& discriminant_rows();
// Worked examples first (two p=3 pairs over rad 3 / rad 2, two over
// rad 3 / rad 4, two at p=2), then the additive-reduction fragment.
const std::vector<GoldenCurveRow>& additive_rows();
const std::vector<GoldenCurveRow>& semistable_rows();

}  // namespace anabelkit
