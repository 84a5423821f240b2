#include <array>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "sgsim/analytic.hpp"

using namespace sgsim;

// reference values computed with 30-digit arithmetic

TEST_CASE("q_factor closed form and quadrature agree with references") {
  CHECK(q_factor(0.5, 2.0) == doctest::Approx(0.643501108793284387).epsilon(1e-14));
  CHECK(q_factor(0.5, 2.0, 3.0) == doctest::Approx(0.667096239298596349).epsilon(1e-9));
  CHECK(q_factor(0.5, 2.0, 6.0) == doctest::Approx(0.604599788078072617).epsilon(1e-9));
  CHECK(q_factor(0.0, 1e9) == doctest::Approx(1.5707963267948966).epsilon(1e-9));
  CHECK(q_factor(1.0, 1.0) == doctest::Approx(0.0));
}

TEST_CASE("q_factor validates its domain") {
  CHECK_THROWS_AS(q_factor(2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(q_factor(-0.1, 1.0), std::domain_error);
  CHECK_THROWS_AS(q_factor(0.5, 2.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(q_factor(0.5, 2.0, 1.5), std::domain_error);
}

TEST_CASE("density and distribution match references") {
  CHECK(levy_pdf(1.0, 1.0) == doctest::Approx(0.219695644733861199).epsilon(1e-14));
  CHECK(levy_pdf(2.0, 0.7) == doctest::Approx(0.0656670607104641287).epsilon(1e-14));
  CHECK(levy_cdf(1.0, 1.0) == doctest::Approx(0.479500122186953462).epsilon(1e-14));
  CHECK(levy_cdf(3.0, 0.7) == doctest::Approx(0.775051373670082333).epsilon(1e-14));
  CHECK(levy_pdf(1e-300, 1.0) == 0.0);  // essential singularity at the origin
  CHECK(levy_cdf(1e9, 0.3) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(levy_pdf(0.0, 1.0) == 0.0);
  CHECK(levy_cdf(0.0, 1.0) == 0.0);
  CHECK_THROWS_AS(levy_pdf(1.0, -1.0), std::domain_error);
}

TEST_CASE("quantiles invert the distribution") {
  CHECK(levy_quantile(0.25, 1.0) == doctest::Approx(0.377842215025486366).epsilon(1e-13));
  CHECK(levy_quantile(0.9, 1.0) == doctest::Approx(31.6640588385083719).epsilon(1e-13));
  for (double p : {0.05, 0.3, 0.5, 0.77, 0.99})
    CHECK(levy_cdf(levy_quantile(p, 0.8), 0.8) == doctest::Approx(p).epsilon(1e-12));
  CHECK_THROWS_AS(levy_quantile(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(levy_quantile(1.0, 1.0), std::domain_error);
}

TEST_CASE("median matches references and the p=1/2 quantile") {
  CHECK(levy_median(1.0) == doctest::Approx(1.09905466915886620).epsilon(1e-14));
  const double half_pi = 1.5707963267948966;
  CHECK(levy_median(half_pi) == doctest::Approx(2.71180869994203871).epsilon(1e-14));
  CHECK(levy_median(0.37) == doctest::Approx(levy_quantile(0.5, 0.37)).epsilon(1e-14));
}

TEST_CASE("transform closed form matches the reference and limits") {
  CHECK(mgf(1.0, 0.643501108793284387, 1.0) ==
        doctest::Approx(0.132440954941034295).epsilon(1e-14));
  CHECK(mgf(0.0, 0.5, 1.0) == doctest::Approx(1.0));
  CHECK(mgf(1e6, 0.5, 1.0) < 1e-100);
  CHECK_THROWS_AS(mgf(-1.0, 0.5, 1.0), std::domain_error);
}

TEST_CASE("tier aggregation and the product form") {
  const std::array<Tier, 1> one = {Tier{2.0, 4.0, 0.25}};
  CHECK(tier_aggregate(one) == doctest::Approx(2.0).epsilon(1e-15));

  const std::array<Tier, 2> equal = {Tier{1.0, 1.0, 1.0}, Tier{1.0, 1.0, 1.0}};
  CHECK(mgf_tiers(1.0, 0.643501108793284387, equal) ==
        doctest::Approx(0.0175406065456930765).epsilon(1e-14));

  const std::array<Tier, 2> mixed = {Tier{0.3, 9.0, 0.5}, Tier{1.1, 0.25, 2.0}};
  const std::array<Tier, 1> first = {mixed[0]};
  const std::array<Tier, 1> second = {mixed[1]};
  const double q = 0.41;
  const double s = 2.7;
  CHECK(mgf_tiers(s, q, mixed) ==
        doctest::Approx(mgf_tiers(s, q, first) * mgf_tiers(s, q, second)).epsilon(1e-14));
  CHECK(mgf_tiers(s, q, mixed) ==
        doctest::Approx(mgf(s, q, tier_aggregate(mixed))).epsilon(1e-13));
}

TEST_CASE("truncated mean matches references and grows with the bound") {
  CHECK(mean_truncated(1.0, 1.0) == doctest::Approx(0.199641228374245666).epsilon(1e-13));
  CHECK(mean_truncated(2.2, 5.0) == doctest::Approx(1.00127001976423733).epsilon(1e-13));
  double prev = 0.0;
  for (double bound : {0.1, 0.5, 2.0, 10.0, 1e4}) {
    const double m = mean_truncated(0.9, bound);
    CHECK(m > prev);
    prev = m;
  }
  CHECK(mean_truncated(1.0, 0.0) == 0.0);
  CHECK_THROWS_AS(mean_truncated(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(mean_truncated(1.0, -1.0), std::domain_error);
}

TEST_CASE("inference inverts the median map exactly") {
  for (double lam : {0.05, 0.3, 1.0, 4.0})
    for (double beta : {1.0, 0.25, 16.0}) {
      const double q = q_factor(0.01, 120.0);
      const double med = levy_median(levy_scale(q, lam / std::sqrt(beta)));
      CHECK(infer_density(med, q, beta) == doctest::Approx(lam).epsilon(1e-12));
      CHECK(infer_aggregate(med, q) ==
            doctest::Approx(lam / std::sqrt(beta)).epsilon(1e-12));
    }
  CHECK_THROWS_AS(infer_aggregate(-1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(infer_aggregate(1.0, 0.0), std::domain_error);
}

TEST_CASE("median prediction rescales by the zone factor") {
  const double d = 0.04;
  const double R = 100.0;
  const double m = 0.37;
  CHECK(predict_median_at(d, m, d, R) == doctest::Approx(m).epsilon(1e-14));
  CHECK(predict_median_at(2.0, m, d, R) < m);
  const double q_r = q_factor(2.0, R);
  const double q_d = q_factor(d, R);
  CHECK(predict_median_at(2.0, m, d, R) ==
        doctest::Approx(m * (q_r / q_d) * (q_r / q_d)).epsilon(1e-13));
}

TEST_CASE("transmit rule: strict threshold, free pass without interference") {
  // signal r^-4 / beta = 1; denominator 0.5; ratio exactly eps stays silent
  CHECK_FALSE(transmit_decision(1.0, 0.25, 0.25, 2.0, 1.0));
  CHECK(transmit_decision(1.0, 0.25, 0.25, 1.999999, 1.0));
  CHECK(transmit_decision(1.0, 0.0, 0.0, 1e9, 1.0));  // nothing to lose
  CHECK_FALSE(transmit_decision(10.0, 1.0, 0.0, 1.0, 1.0));
  CHECK_THROWS_AS(transmit_decision(-1.0, 0.1, 0.0, 1.0, 1.0), std::domain_error);
}

TEST_CASE("decibel conversions round trip") {
  CHECK(db_to_linear(-6.0) == doctest::Approx(0.251188643150958).epsilon(1e-14));
  CHECK(db_to_linear(0.0) == doctest::Approx(1.0));
  CHECK(linear_to_db(db_to_linear(7.3)) == doctest::Approx(7.3).epsilon(1e-13));
}
