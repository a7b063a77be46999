#include "anabelkit/golden_tables.hpp"

namespace anabelkit {

const std::vector<GoldenDiscRow>& discriminant_rows() {
  static const std::vector<GoldenDiscRow> rows = {
      {"3", 165},
      {"4", 121},
      {"-7", 121},
      {"10*z^4 + 5*z^2 - 25*z + 5", 189},
      {"-15*z^5 - 5*z^4 - 25*z + 5", 165},
      {"15*z^2 - 10*z", 189},
      {"-10*z^5 + 10*z^4 - 5*z^3 - 70*z^2 + 15*z - 5", 181},
      {"-20*z^5 - 5*z^4 + 10*z^3 - 15*z^2 + 5*z + 10", 197},
      {"-5*z^5 + 105*z^4 + 5*z^2 + 20*z - 15", 189},
      {"10*z^5 + 20*z^2 + 5*z - 5", 197},
      {"-5*z^5 - 5*z^4 - 150*z^3 - 10*z^2 + 5*z - 25", 157},
      {"-5*z^4 + 5*z^2 - 20*z + 15", 181},
      {"-30*z^5 + 5*z^4 + 5*z^3 - 5*z", 165},
      {"-3*z^4 + z^3 - 3*z^2 + 33*z - 4", 145},
      {"-6*z^2 - 2", 141},
      {"22*z^5 + 2*z^4 + 6*z^3 + 2*z + 6", 181},
      {"2*z^4 - 26*z^3 + 2*z^2 - 12", 181},
      {"2*z^5 - 2*z^4 - 2*z^2 + 4*z - 2", 197},
      {"-6*z^5 + 10*z^2 - 2*z + 2", 181},
      {"-3*z^4 - 6*z + 3", 157},
      {"39*z^5 + 87*z^4 - 9*z^3 - 15*z - 12", 197},
      {"-3*z^5 + 6*z^4 - 24*z^3 + 21*z^2 + 18*z - 3", 189},
      {"6*z^5 + 3*z^4 + 3*z^3 - 3*z^2 + 3*z - 3", 197},
      {"3*z^5 - 3*z^4 + 6*z - 48", 181},
      {"-3*z^5 + 6*z^4 - 3*z^3 - 12*z^2 - 3", 189},
  };
  return rows;
}

const std::vector<GoldenCurveRow>& additive_rows() {
  static const std::vector<GoldenCurveRow> rows = {
      {"[0,3,0,0,9]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=2",
       "[6, 4, IV, 1]", "[6, 2, I0*, 4]", "first worked example"},
      {"[0,3,0,0,3]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=2",
       "[12, 6, IV*, 3]", "[12, 10, IV, 1]", "second worked example"},
      {"[0, 0, 0, -z^5 + 8*z^4 - z^3 + z^2 - 2*z - 11, -408*z^5 - 6*z^4 + 201*z^3 + 37*z^2 - 38*z + 1348]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[15, 15, II, 1]", "[39, 37, IV, 3]", "all four differ"},
      {"[0, 0, 0, -2*z^5 + z^4 + z^3 - z^2 + 2*z + 5, 869*z^5 + 159*z^4 - 47*z^3 - 125*z^2 + 354*z + 713]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[15, 9, IV*, 3]", "[27, 19, II*, 1]", "all four differ"},
      {"[0, 0, 0, -2*z^7 + 2*z^6 - 2*z^5 + 2*z^4 - 2*z^3 + 4*z^2 + 6*z + 30, 32*z^7 - 76*z^6 - 8*z^5 + 32*z^4 - 24*z^3 - 20*z^2 + 16*z - 28]",
       "p=2\ncyclotomic 16 name=z\nkummer 2 rad=z^2-1 name=u\nkummer 2 rad=z^6-1 name=w",
       "p=2\ncyclotomic 16 name=z\nkummer 4 rad=z^4-1 name=u",
       "[64, 60, I0*, 2]", "[52, 52, II, 1]", "p=2"},
      {"[0, 0, 0, -2*z^6 - 2*z^4 + 4*z^2 + 2, 28*z^6 - 40*z^5 - 24*z^4 + 8*z^3 + 16*z^2 - 40*z + 60]",
       "p=2\ncyclotomic 16 name=z\nkummer 2 rad=z^2-1 name=u\nkummer 2 rad=z^6-1 name=w",
       "p=2\ncyclotomic 16 name=z\nkummer 4 rad=z^4-1 name=u",
       "[68, 60, II*, 1]", "[56, 52, I0*, 2]", "p=2"},
      {"[0, -z^5 + z^4 - 6*z^3 - z^2 + 3*z - 11, 0, -3*z^4 - z^2 + 2*z - 418, z^5 - 3*z^4 - z^2 - z + 22]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[6, 6, II, 1]", "[18, 10, II*, 1]", "additive fragment"},
      {"[0, 2*z^5 - 4*z^4 + z^3 + 8*z^2 + 2*z + 204, 0, 4*z^5 - z^4 - 4*z^3 - z^2 + z + 7, -54*z^5 + z^4 + z^3 - z^2 - 106]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[15, 7, II*, 1]", "[15, 13, IV, 1]", "additive fragment"},
      {"[0, -z^5 - z^3 - z^2 + z + 47, 0, z^5 - 4*z^4 - 11*z^3 - 4*z - 30, 62*z^5 - z^2 + 3*z + 131]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[6, 6, II, 1]", "[18, 10, II*, 1]", "additive fragment"},
      {"[0, 2*z^4 - z^2 - 3*z - 7, 0, -2*z^5 - z^4 - z^3 - z^2 + z - 11, z^5 - 4*z^4 + z^3 - 2*z^2 - 2*z - 12]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[15, 7, II*, 1]", "[15, 13, IV, 3]", "additive fragment"},
      {"[0, -9*z^5 - 8*z^4 - z^3 + 5*z^2 + z - 21, 0, 2*z^5 - 4*z^3 - 6*z^2 + 23*z + 33, -2*z^5 - z^3 + 28*z^2 + 3*z + 53]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[6, 6, II, 1]", "[18, 10, II*, 1]", "additive fragment"},
      {"[0, -z^5 + z^4 + z^3 - 11*z^2 - 12*z - 47, 0, -78*z^5 - z^4 - z^3 + z^2 - z - 160, 2*z^5 - z^4 - z^3 - 2*z^2 - 10]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[12, 4, II*, 1]", "[0, 0, I0, 1]", "additive fragment"},
      {"[0, -z^5 + 2*z^4 + 8*z^3 - z^2 + 22, 0, -z^4 - 7*z^3 + z^2 - z - 19, 12*z^5 + z^4 - 2*z^3 - 2*z^2 - z + 31]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[12, 4, II*, 1]", "[0, 0, I0, 1]", "additive fragment"},
      {"[0, -62*z^5 - 2*z^4 + 2*z^3 + 4*z^2 + 4*z - 96, 0, 7*z^4 + z^3 + z^2 - 3, z^5 - z^4 - 4*z^3 + z^2 + z - 4]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[6, 6, II, 1]", "[18, 10, II*, 1]", "additive fragment"},
      {"[0, z^5 - 39*z^3 - z^2 - 81, 0, -z^5 + z^4 - z^3 + z^2 - z - 2, -35*z^5 + 102*z^4 - 19*z^3 - 24*z^2 - 8*z + 80]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 7, IV, 3]", "[21, 13, II*, 1]", "additive fragment"},
      {"[0, z^5 + 3*z^4 - z^2 - 6, 0, z^5 + 85*z^4 - 34*z^2 + 2*z + 108, 6*z^5 - 84*z^4 + 103*z^3 + 22*z^2 - 119*z + 63]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 7, IV, 3]", "[21, 13, II*, 1]", "additive fragment"},
      {"[0, 3*z^5 - z^4 + z^3 - z^2 - 87*z - 179, 0, -z^5 + z^4 + z^3 - z^2 + 3, 225*z^5 + 39*z^4 + 276*z^3 + 1222*z^2 + 238*z + 2215]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[6, 4, IV, 3]", "[6, 4, IV, 1]", "additive fragment"},
      {"[0, -z^5 + 4*z^3 + 5*z^2 + z + 24, 0, 14*z^4 - z^3 + 5*z^2 + 3*z + 54, 48*z^5 - 661*z^4 + 572*z^3 + 229*z^2 - 721*z + 122]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[6, 4, IV, 3]", "[6, 2, I0*, 1]", "additive fragment"},
      {"[0, -z^4 + 3*z^3 - z^2 + 6*z + 14, 0, 7*z^5 + 6*z^4 + 5*z^3 + 2*z^2 - 18*z + 1, -13*z^5 + 6*z^4 - 5*z^3 - 5*z^2 + 6*z - 1]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[6, 4, IV, 1]", "[6, 2, I0*, 1]", "additive fragment"},
      {"[0, -2*z^5 - z^4 - 6*z^3 + 2*z^2 + z - 12, 0, 2*z^5 - 18*z^4 + 5*z^3 + z^2 - 6*z - 35, 185*z^5 - 7*z^4 + 79*z^3 - 79*z^2 + 86*z + 198]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 7, IV, 3]", "[21, 13, II*, 1]", "additive fragment"},
      {"[0, -z^4 - 4*z^3 - 10*z^2 - 297, 0, z^5 - z^4 - z^3 + 2*z^2 + z + 10, -3*z^5 + 174*z^4 - 8*z^2 + 58*z + 841]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[12, 6, IV*, 1]", "[12, 10, IV, 1]", "additive fragment"},
      {"[0, 2*z^5 - z^4 + z^3 - 29, 0, -2*z^5 - z^3 - z^2 - 9*z - 20, 631*z^5 + 260*z^4 + 52*z^3 - 21*z^2 + 65*z + 858]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[12, 6, IV*, 1]", "[12, 10, IV, 1]", "additive fragment"},
      {"[0, z^5 - 4*z^4 + z^3 + 2*z + 3, 0, -z^5 - 9*z^4 - z^3 - z - 24, -14*z^5 - 21*z^4 + 75*z^3 - 21*z^2 + 10*z + 28]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[6, 4, IV, 3]", "[6, 2, I0*, 1]", "additive fragment"},
      {"[0, -z^5 - z^4 - 3*z^2 + 6*z + 2, 0, -3*z^5 + z^3 + 14*z^2 - 4*z + 19, -31*z^5 + 20*z^4 + 126*z^3 + 8*z^2 - 43*z + 304]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[6, 4, IV, 3]", "[6, 2, I0*, 1]", "additive fragment"},
      {"[0, -2*z^5 - 13*z^4 - z^2 - 5*z - 45, 0, -z^4 - 2*z^3 - z^2 - 3*z - 11, -837*z^5 - 100*z^4 - 123*z^3 - 53*z^2 + 194*z - 44]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[6, 4, IV, 3]", "[6, 2, I0*, 4]", "additive fragment"},
  };
  return rows;
}

const std::vector<GoldenCurveRow>& semistable_rows() {
  static const std::vector<GoldenCurveRow> rows = {
      {"[0, z^5 + z^4 - 6*z^3 - z - 9, 0, z^5 - z^4 + 8*z^2 - z + 12, z^5 + z^2 + 1]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 1, I9, 9]", "[9, 1, I9, 9]", "semistable fragment"},
      {"[0, 2*z^5 - 2*z^4 - z^3 + z - 5, 0, -z^4 + z^3 - 3*z^2 + 8*z + 11, z^5 + z^4 - 2*z^3 + 3*z^2 - z + 1]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[18, 1, I18, 18]", "[18, 1, I18, 18]", "semistable fragment"},
      {"[0, z^5 + z^4 + 24*z^3 + 11*z^2 + 75, 0, -z^5 + 3*z^4 - z^2 + z + 8, z^5 - 3*z^4 + z^3 + z^2 - 2*z - 1]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[18, 1, I18, 18]", "[18, 1, I18, 18]", "semistable fragment"},
      {"[0, z^5 + 2*z^4 + z^3 + 10*z^2 + z + 31, 0, -z^5 + 3*z^4 - z^2 - z - 2, z^5 - 4*z^3 - 7*z - 23]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[18, 1, I18, 18]", "[18, 1, I18, 18]", "semistable fragment"},
      {"[0, -8*z^5 + 8*z^4 - z^2 + z + 4, 0, 2*z^5 + z^3 - 5*z^2 - 2*z - 10, -3*z^5 + z^4 - z^3 - z^2 + 5*z - 22]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 1, I9, 9]", "[9, 1, I9, 9]", "semistable fragment"},
      {"[0, 3*z^4 + 7*z^2 - 4*z + 16, 0, 2*z^5 + z^4 + 8*z^3 - z^2 + 21, z^5 + 3*z^2 - z + 3]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 1, I9, 9]", "[9, 1, I9, 9]", "semistable fragment"},
      {"[0, -z^5 - 7*z^4 + 2*z^2 - 2*z - 12, 0, z^5 - z^4 + z^3 - z + 4, -z^4 - 3*z^2 + z + 3]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 1, I9, 9]", "[9, 1, I9, 9]", "semistable fragment"},
      {"[0, z^5 - z^4 - 6*z^3 - z^2 + 17, 0, 3*z^4 + z^3 + z^2 + 11, 2*z^5 + z^3 - z^2 + 3*z + 1]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[18, 1, I18, 18]", "[18, 1, I18, 18]", "semistable fragment"},
      {"[0, z^4 + 2*z^3 - z^2 - 10*z - 9, 0, z^4 + 2*z^2 + 4, z^5 - 17*z^4 - z^3 + z^2 + 2*z - 34]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 1, I9, 9]", "[9, 1, I9, 9]", "semistable fragment"},
      {"[0, z^5 + 9*z^4 - 6*z^3 + 3*z^2 + z + 17, 0, -z^5 - 274*z^4 + z^3 + z^2 + 2*z - 553, 2*z^5 + z^4 + 6*z^3 - 4*z^2 + 22]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 1, I9, 9]", "[9, 1, I9, 9]", "semistable fragment"},
      {"[0, -2*z^5 + z^3 + 2*z + 45, 0, 3*z^5 - z^4 + 3*z + 11, 2*z^5 - z^4 - 2*z^3 - 8*z^2 + 8*z + 4]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 1, I9, 9]", "[9, 1, I9, 9]", "semistable fragment"},
      {"[0, 2*z^5 + 7*z^3 + z^2 + 27, 0, z^5 - z^3 - 6*z + 1, 11*z^5 + 2*z^4 + 2*z^3 - 8*z^2 + 17]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 1, I9, 9]", "[9, 1, I9, 9]", "semistable fragment"},
      {"[0, -z^5 - z^4 - z^3 - 2*z^2 - z - 14, 0, z^5 - z^4 + z^3 + 7*z^2 - z + 6, 2*z^5 + z^4 + 2*z^2 - 11*z]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 1, I9, 9]", "[9, 1, I9, 9]", "semistable fragment"},
      {"[0, -z^5 - z^4 - z^3 + z^2 - 3, 0, -z^4 - 2*z^3 - 3*z^2 - z - 16, 31*z^5 - 3*z^4 - z^3 + z + 53]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[27, 1, I27, 27]", "[27, 1, I27, 27]", "semistable fragment"},
      {"[0, -4*z^5 - 2*z^4 + z^3 + z^2 - z - 3, 0, 3*z^3 - 10*z^2 - z - 12, z^5 + z^4 + 2*z^3 - z^2 - 10*z - 14]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[18, 1, I18, 18]", "[18, 1, I18, 18]", "semistable fragment"},
      {"[0, z^4 + 2*z^3 - z^2 + 2*z + 12, 0, -z^5 - z^4 - 70*z^2 + z - 129, z^5 - 3*z^4 - 3*z^3 - 13]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 1, I9, 9]", "[9, 1, I9, 9]", "semistable fragment"},
      {"[0, z^5 - 2*z^3 - z^2 + z + 8, 0, -z^4 + 4*z^3 + z^2 + z + 8, 11*z^5 - z^4 + 84*z^3 - 4*z^2 + 183]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 1, I9, 9]", "[9, 1, I9, 9]", "semistable fragment"},
      {"[0, -4*z^5 + 10*z^4 - 8*z^3 - 4*z - 23, 0, -9*z^5 + z^4 - z^3 + z^2 - z - 20, -z^5 + z^4 - z^3 - z^2 - 7]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[27, 1, I27, 27]", "[27, 1, I27, 27]", "semistable fragment"},
      {"[0, 4*z^5 + 3*z^4 - 2*z^2 + 10*z + 40, 0, z^5 - z^4 + 41*z^3 + 86, z^2 + z + 10]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[27, 1, I27, 27]", "[27, 1, I27, 27]", "semistable fragment"},
      {"[0, z^5 + 4*z^4 - 3*z^3 + 3*z^2 + z + 7, 0, -191*z^5 - 3*z^4 + z^3 + z^2 - z - 379, z^5 + 7*z^4 + z^3 + 21]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 1, I9, 9]", "[9, 1, I9, 9]", "semistable fragment"},
      {"[0, -z^4 - 141*z^3 - z^2 + z - 283, 0, -6*z^4 - z^3 - 4*z^2 + z - 16, -z^5 - z^4 + z^2 - z + 11]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 1, I9, 9]", "[9, 1, I9, 9]", "semistable fragment"},
      {"[0, -6*z^5 - z^4 - 4*z^3 + z^2 - 13, 0, 403*z^5 + z^3 - 11*z^2 + 778, 3*z^5 - z^4 - z^2 - z - 75]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 1, I9, 9]", "[9, 1, I9, 9]", "semistable fragment"},
      {"[0, 6*z^5 + 83*z^4 + 8*z^3 - z^2 - z + 194, 0, -9*z^4 + 2*z^3 + z^2 + z - 6, -z^5 + z^4 + 2*z^3 - 2*z^2 - 4*z - 5]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 1, I9, 9]", "[9, 1, I9, 9]", "semistable fragment"},
      {"[0, 24*z^5 + z^4 - 14*z^3 - z^2 + z + 17, 0, -2*z^5 - 2*z^4 + z^3 + 2*z^2 + z + 1, -z^5 + 2*z^4 + 2*z^3 - z + 4]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 1, I9, 9]", "[9, 1, I9, 9]", "semistable fragment"},
      {"[0, -z^5 - z^3 - 5*z^2 - 7, 0, -2*z^5 + z^4 - z^2 - 54*z - 114, 3*z^5 - 4*z^4 - z^2 - 1]",
       "p=3 r=2 rad=3",
       "p=3 r=2 rad=4",
       "[9, 1, I9, 9]", "[9, 1, I9, 9]", "semistable fragment"},
  };
  return rows;
}

}  // namespace anabelkit
