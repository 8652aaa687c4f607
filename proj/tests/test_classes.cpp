#include "detvar/classes.hpp"

#include <gtest/gtest.h>

using namespace detvar;

namespace {

ProjClass pl(std::initializer_list<long long> coeffs) {
  std::vector<Integer> v;
  for (long long c : coeffs) v.emplace_back(c);
  return ProjClass::from_coefficients(v);
}

// Power series quotient num / den mod H^{len}, by long division.
std::vector<Integer> series_divide(std::vector<Integer> num, const std::vector<Integer>& den, std::size_t len) {
  num.resize(len);
  std::vector<Integer> q(len);
  for (std::size_t i = 0; i < len; ++i) {
    q[i] = num[i] / den[0];
    for (std::size_t j = 0; j < den.size() && i + j < len; ++j) num[i + j] -= q[i] * den[j];
  }
  return q;
}

} // namespace

TEST(ProjClass, HPowerConversionReverses) {
  ProjClass x = pl({1, 2, 3});
  EXPECT_EQ(x.h_powers(), (std::vector<Integer>{3, 2, 1}));
  EXPECT_EQ(ProjClass::from_h_powers(x.h_powers()), x);
  EXPECT_EQ(x.dimension(), 2);
  EXPECT_EQ(ProjClass(4).dimension(), -1);
}

TEST(ProjClass, HyperplaneShiftTruncates) {
  EXPECT_EQ(pl({1, 2, 3}).times_h_power(1), pl({2, 3, 0}));
  EXPECT_EQ(pl({1, 2, 3}).times_h_power(5), pl({0, 0, 0}));
}

TEST(ProjClass, AmbientMismatchIsContractViolation) {
  EXPECT_THROW(ProjClass(3) + ProjClass(4), ContractViolation);
}

TEST(ProjClass, HStringRendering) {
  EXPECT_EQ(ProjClass::from_h_powers({0, 3, -1, 1}).to_h_string(), "3H - H^2 + H^3");
}

TEST(BMatrix, Entries) {
  IntMatrix b = b_matrix(3, 3, 1);
  EXPECT_EQ(b.rows(), 7);
  EXPECT_EQ(b(0, 0), 1);
  EXPECT_EQ(b(3, 1), 10);
  for (int i = 0; i < 7; ++i)
    for (int p = i + 1; p < 7; ++p) EXPECT_EQ(b(i, p), 0);
  EXPECT_THROW(b_matrix(2, 3, 1), DomainError);
}

TEST(CmClass, TableRowsThreeByThree) {
  EXPECT_EQ(cm_class(3, 3, 0), pl({9, 36, 84, 126, 126, 84, 36, 9, 1}));
  EXPECT_EQ(cm_class(3, 3, 1), pl({18, 54, 102, 126, 102, 54, 18, 3, 0}));
  EXPECT_EQ(cm_class(3, 3, 2), pl({9, 18, 24, 18, 6, 0, 0, 0, 0}));
}

TEST(CmClass, TableRowsFourByThree) {
  EXPECT_EQ(cm_class(4, 3, 0), pl({12, 66, 220, 495, 792, 924, 792, 495, 220, 66, 12, 1}));
  EXPECT_EQ(cm_class(4, 3, 1), pl({24, 96, 248, 444, 564, 514, 336, 153, 44, 6, 0, 0}));
  EXPECT_EQ(cm_class(4, 3, 2), pl({12, 30, 52, 57, 36, 10, 0, 0, 0, 0, 0, 0}));
}

TEST(CmClass, TableRowsFourByFour) {
  EXPECT_EQ(cm_class(4, 4, 1), pl({48, 288, 1128, 3168, 6672, 10816, 13716, 13716, 10816, 6672, 3168,
                                   1128, 288, 48, 4, 0}));
  EXPECT_EQ(cm_class(4, 4, 2),
            pl({48, 216, 672, 1524, 2592, 3368, 3376, 2602, 1504, 616, 160, 20, 0, 0, 0, 0}));
  EXPECT_EQ(cm_class(4, 4, 3), pl({16, 48, 104, 152, 144, 80, 20, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(CmClass, RejectsBadParameters) {
  EXPECT_THROW(cm_class(3, 3, 3), DomainError);
  EXPECT_THROW(cm_class(2, 3, 1), DomainError);
  EXPECT_THROW(cm_class(3, 3, -1), DomainError);
}

TEST(CmClass, ThreeRoutesAgreeForSmallCases) {
  for (int m = 1; m <= 16; ++m)
    for (int n = 2; n <= m && m * n <= 16; ++n)
      for (int k = 1; k <= n - 1; ++k) {
        ProjClass c = cm_class(m, n, k);
        EXPECT_EQ(cm_class_trace(m, n, k), c) << m << n << k;
        EXPECT_EQ(cm_class_alpha(m, n, k), c) << m << n << k;
      }
}

TEST(CmClass, HypersurfaceLowHPowers) {
  // gamma_0 = 0 and gamma_1 = n for tau_{n,n,1}
  for (int n = 2; n <= 6; ++n) {
    auto gamma = cm_class(n, n, 1).h_powers();
    EXPECT_EQ(gamma[0], 0);
    EXPECT_EQ(gamma[1], n);
  }
}

TEST(CmClass, SupportedInDimension) {
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= m; ++n)
      for (int k = 1; k <= n - 1; ++k) {
        const int d = variety_dimension(m, n, k);
        EXPECT_EQ(cm_class(m, n, k).dimension(), d);
        EXPECT_EQ(csm_class(m, n, k).dimension(), d);
        EXPECT_EQ(cm_class(m, n, k)[d], csm_class(m, n, k)[d]);
      }
  EXPECT_EQ(cm_class(3, 3, 2)[4], 6);
}

TEST(CmClass, CacheSnapshotAndSeed) {
  ProjClass c = cm_class(3, 3, 1);
  ASSERT_TRUE(cm_cache_snapshot().count({3, 3, 1}));
  cm_cache_clear();
  EXPECT_TRUE(cm_cache_snapshot().empty());
  cm_cache_seed(3, 3, 1, c);
  EXPECT_EQ(cm_class(3, 3, 1), c);
  EXPECT_THROW(cm_cache_seed(3, 3, 1, ProjClass(3)), ContractViolation);
}

TEST(CsmClass, TableRows) {
  EXPECT_EQ(csm_class(3, 3, 0), pl({9, 36, 84, 126, 126, 84, 36, 9, 1}));
  EXPECT_EQ(csm_class(3, 3, 1), pl({9, 36, 78, 108, 96, 54, 18, 3, 0}));
  EXPECT_EQ(csm_class(3, 3, 2), pl({9, 18, 24, 18, 6, 0, 0, 0, 0}));
  // [P^14] is the degree of the quartic hypersurface, 4 (the printed table has 1 there,
  // which also breaks additivity with the printed open-stratum rows).
  EXPECT_EQ(csm_class(4, 4, 1), pl({16, 120, 560, 1796, 4224, 7528, 10360, 11114, 9312, 6056, 3008,
                                    1108, 288, 48, 4, 0}));
  EXPECT_EQ(csm_class(4, 4, 2),
            pl({16, 120, 464, 1220, 2304, 3208, 3336, 2602, 1504, 616, 160, 20, 0, 0, 0, 0}));
  EXPECT_EQ(csm_class(4, 4, 3), pl({16, 48, 104, 152, 144, 80, 20, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(CsmOpen, TableRows) {
  EXPECT_EQ(csm_open(3, 3, 0), pl({0, 0, 6, 18, 30, 30, 18, 6, 1}));
  EXPECT_EQ(csm_open(3, 3, 1), pl({0, 18, 54, 90, 90, 54, 18, 3, 0}));
  EXPECT_EQ(csm_open(3, 3, 2), pl({9, 18, 24, 18, 6, 0, 0, 0, 0}));
  EXPECT_EQ(csm_open(4, 4, 0), pl({0, 0, 0, 24, 144, 480, 1080, 1756, 2128, 1952, 1360, 712, 272, 72,
                                   12, 1}));
  EXPECT_EQ(csm_open(4, 4, 1), pl({0, 0, 96, 576, 1920, 4320, 7024, 8512, 7808, 5440, 2848, 1088,
                                   288, 48, 4, 0}));
  EXPECT_EQ(csm_open(4, 4, 2),
            pl({0, 72, 360, 1068, 2160, 3128, 3316, 2602, 1504, 616, 160, 20, 0, 0, 0, 0}));
  EXPECT_EQ(csm_open(4, 4, 3), csm_class(4, 4, 3));
}

TEST(CsmClass, EulerCharacteristicOfSquareCase) {
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k <= n - 1; ++k) EXPECT_EQ(csm_class(n, n, k)[0], n * n) << n << "," << k;
}

TEST(CsmClass, StratumAdditivityAndEulerObstruction) {
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= m; ++n)
      for (int k = 0; k <= n - 1; ++k) {
        ProjClass sum(ambient_dimension(m, n)), eu(ambient_dimension(m, n));
        for (int i = k; i <= n - 1; ++i) {
          sum += csm_open(m, n, i);
          eu += binomial(i, k) * csm_open(m, n, i);
        }
        EXPECT_EQ(sum, csm_class(m, n, k));
        EXPECT_EQ(eu, cm_class(m, n, k));
      }
}

TEST(EulerObstruction, Values) {
  EXPECT_EQ(euler_obstruction(3, 3, 1), StrataVector(1, {1, 2}));
  EXPECT_EQ(euler_obstruction(4, 4, 1), StrataVector(1, {1, 2, 3}));
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= n - 1; ++k) EXPECT_EQ(euler_obstruction(n + 1, n, k)[k], 1);
  EXPECT_THROW(euler_obstruction(3, 3, 0), DomainError);
}

TEST(StratumChange, BinomialMatricesAreInverse) {
  for (int n = 1; n <= 12; ++n)
    for (int k = 0; k <= n - 1; ++k)
      EXPECT_EQ(stratum_change_matrix(n, k) * stratum_change_inverse(n, k), IntMatrix::identity(n - k));
}

TEST(ChernFulton, ThreeByThree) {
  ProjClass cf = chern_fulton_hypersurface(3);
  EXPECT_EQ(cf.h_powers(), (std::vector<Integer>{0, 3, 18, 54, 90, 108, 54, 90, -162}));
}

TEST(ChernFulton, MatchesLongDivision) {
  for (int n = 2; n <= 5; ++n) {
    const std::size_t len = static_cast<std::size_t>(n * n);
    std::vector<Integer> num(len + 1);
    for (std::size_t a = 0; a < len; ++a) num[a + 1] = n * binomial(n * n, static_cast<long long>(a));
    auto expected = series_divide(num, {1, n}, len);
    EXPECT_EQ(chern_fulton_hypersurface(n).h_powers(), expected);
  }
  EXPECT_EQ(chern_fulton_hypersurface(2).h_powers(), (std::vector<Integer>{0, 2, 4, 4}));
}

TEST(MilnorClass, ThreeByThree) {
  ProjClass mc = milnor_class(3);
  EXPECT_EQ(mc.h_powers(), (std::vector<Integer>{0, 0, 0, 0, 6, 0, 24, -54, 171}));
  EXPECT_EQ(mc.to_h_string(), "6H^4 + 24H^6 - 54H^7 + 171H^8");
}

TEST(MilnorClass, SmoothQuadricIsZero) { EXPECT_TRUE(milnor_class(2).is_zero()); }

TEST(MilnorClass, SupportedOnSingularLocus) {
  for (int n = 3; n <= 5; ++n)
    EXPECT_LE(milnor_class(n).dimension(), variety_dimension(n, n, 2)) << n;
}
