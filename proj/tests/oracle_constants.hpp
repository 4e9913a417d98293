// Generated by tools/oracle_gen.py (mpmath, dps=60). Do not edit.
// Each literal carries >= 30 significant digits; doubles round them.
#pragma once

namespace oracle {

inline constexpr double euler_gamma = 0.5772156649015328606065120900824024310422;  // Euler-Mascheroni constant
inline constexpr double log_two_pi = 1.837877066409345483560659472811235279723;
inline constexpr double a_one = 1.260661401507812622954147382728832848681;  // log(2*pi) - gamma
inline constexpr double half_a_one = 0.6303307007539063114770736913644164243403;
inline constexpr double two_exp_neg_a_one = 0.5669329586555487655578751724044205247024;  // moment ratio limit
inline constexpr double pi_sq_over_36 = 0.2741556778080377394120691944410041982032;
inline constexpr double pi_sq_over_72 = 0.1370778389040188697060345972205020991016;
inline constexpr double ln2 = 0.6931471805599453094172321214581765680755;
inline constexpr double golden_frac = 0.6180339887498948482045868343656381177203;  // (sqrt(5)-1)/2, fixed point of the Gauss map
inline constexpr double wilton_golden = 0.2974052636752033248629120844760725702131;  // W((sqrt5-1)/2)
inline constexpr double wilton_sqrt2m1 = 0.6232252401402305133940200802505680026507;  // W(sqrt2-1)
inline constexpr double log_29_over_13 = 0.8023464725249372911297845907965930006892;  // gamma_0 of 13/29
inline constexpr double t1_l_at_7_10 = 0.5931085022710425295970752545644578174927;  // (T l)(7/10) = (7/10) log(7/3)
inline constexpr double c0_one_third = 0.1924500897298752548363829268339858185492;
inline constexpr double c0_4_7 = 0.6129819184119794356695530742768588858114;
inline constexpr double c0_5_7 = -0.1751593035241762036688669033433271013992;
inline constexpr double c0_6_7 = -1.857610089128434951163195776019074438500;
inline constexpr double a_one_first_summand = 0.1137056388801093811655357570836468638490;  // n=1 term of the A(1) series
inline constexpr double gauss_measure_half = 0.5849625007211561814537389439478165087598;  // m((0,1/2)) = log2(3/2)
inline constexpr double tailint_one_identity = 0.006747138150112558228960905856085674761261;  // int_1^inf phi2(t)/t^3 dt
inline constexpr double phi2_one_third = -0.05076956996445143322445725822981559225984;

// float-route oracles (accurate to ~1e-8; from brute-force series)
inline constexpr double a_half = 0.7722092559908538;
inline constexpr double f_half = 0.346573590279992;
inline constexpr double f_three_tenths = 0.4822972330679983;
inline constexpr double tailint_two = 0.000512349252090441;
inline constexpr double phi2_golden = -0.07116249236438248;
inline constexpr double f_golden = 0.3358307734832757;
inline constexpr double g_fast_golden = -0.11770440128645931;

// Philox4x32-10 known answers (independent python implementation)
inline constexpr unsigned philox_zero_ctr[4] = {0x00000000u, 0x00000000u, 0x00000000u, 0x00000000u};
inline constexpr unsigned philox_zero_key[2] = {0x00000000u, 0x00000000u};
inline constexpr unsigned philox_zero_out[4] = {0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u};
inline constexpr unsigned philox_ones_ctr[4] = {0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu};
inline constexpr unsigned philox_ones_key[2] = {0xffffffffu, 0xffffffffu};
inline constexpr unsigned philox_ones_out[4] = {0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu};
inline constexpr unsigned philox_custom_ctr[4] = {0x00000001u, 0x00000002u, 0x00000003u, 0x00000004u};
inline constexpr unsigned philox_custom_key[2] = {0x00000005u, 0x00000006u};
inline constexpr unsigned philox_custom_out[4] = {0xc0c839bcu, 0x889c87c5u, 0x61986739u, 0x2d4623d0u};

}  // namespace oracle
