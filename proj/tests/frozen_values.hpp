#pragma once

// Reference values from tests/oracle/frozen_values.py (mpmath, 40 digits,
// direct rectangle summation).

namespace frozen {

constexpr double bivariate_08_06_12_15_re = 0.91926697867968765469;
constexpr double prabhakar_05_1_1_025 = 1.3586423701047221152;
constexpr double laplace_05_08_12_2_03_01_s2 = 0.81583658478866011186;
constexpr double bound_all_ones_L1 = 3.1945280494653251136;
constexpr double bound_07_12_05_15_06_m04_L2 = 13.716899393301151425;
constexpr double univariate_07_13_1_1_05_m05_t1 = 1.1442003423650263748;
constexpr double correction_06_09_g06_dm1_t05 = 0.013044903733267593215;
constexpr double shifted_06_08_g04_d1_t07 = 0.8114969550545305763;
constexpr double fig1d_at_2_1 = 7.9458837749791879115;
constexpr double fig1a_at_2_1 = 20.085536923187667741;
constexpr double complex_bivariate_re = 1.1006073678310018304;
constexpr double complex_bivariate_im = -0.055786686613976057413;
constexpr double loggamma_35_2_re = 0.58073321208126816934;
constexpr double loggamma_35_2_im = 2.3353168419161627716;
constexpr double loggamma_m25_05_re = -0.93508562129827747868;
constexpr double loggamma_m25_05_im = -8.8709628852474591986;
constexpr double rgamma_m37 = 3.9738679097583537247;
constexpr double rgamma_4025 = 1.9539790522453672782e-47;
constexpr double laguerre_gf_ones_t05 = 1.3406400920712786015;
constexpr double laguerre_gf_07_13_09_15_t06 = 2.6426297654279211377;

}  // namespace frozen
