#pragma once

// Published reference values for frequency-weighted dictionary PINs
// (SUBTLEXus / opensub / SUBTLEXnl corpora). Used only to print deltas next to
// computed values; nothing in the pipeline reads them.
//
// Bits are rounded to 2 decimals, success rates are percentages.

#include <array>
#include <cstddef>
#include <string_view>

namespace dictpin::published {

struct Row {
    double entropy_bits;
    double guesswork_bits;
    double marginal_guesswork_bits;
    double lambda6_percent;
};

// n = 4 and n = 5, indexed [pin_length - 4].
using ByLength = std::array<Row, 2>;

// Straightforward translation, standard mapping.
inline constexpr ByLength subtlexus_basic{{{7.23, 7.18, 5.52, 23.93}, {8.42, 8.63, 6.58, 19.24}}};
inline constexpr ByLength opensub_basic{{{7.42, 7.49, 5.64, 22.80}, {8.88, 9.45, 6.92, 17.34}}};

// Construction variants on SUBTLEXus.
inline constexpr ByLength subtlexus_stretched{{{7.28, 7.28, 5.52, 24.04}, {8.43, 8.67, 6.58, 19.31}}};
inline constexpr ByLength subtlexus_prefix{{{9.03, 8.89, 7.56, 11.30}, {10.36, 10.39, 8.77, 8.01}}};
inline constexpr ByLength subtlexus_morph{{{11.08, 10.73, 9.88, 2.77}, {12.96, 12.84, 11.53, 2.17}}};

// PIN blacklist of size 0, 10, 20 on top of prefix / morphing (SUBTLEXus).
struct BlacklistRow {
    std::size_t k;
    double entropy_bits[2];     // n = 4, 5
    double lambda6_percent[2];  // n = 4, 5
};
inline constexpr std::array<BlacklistRow, 3> prefix_blacklisted{{
    {0, {9.03, 10.36}, {11.30, 8.01}},
    {10, {9.37, 10.68}, {6.62, 4.28}},
    {20, {9.53, 10.82}, {4.69, 2.95}},
}};
inline constexpr std::array<BlacklistRow, 3> morph_blacklisted{{
    {0, {11.08, 12.96}, {2.77, 2.17}},
    {10, {11.15, 13.06}, {1.74, 0.97}},
    {20, {11.19, 13.09}, {1.56, 0.85}},
}};

// SUBTLEXus + SUBTLEXnl, each chosen with probability 1/2.
inline constexpr ByLength two_dict_basic{{{7.84, 7.72, 6.24, 18.00}, {9.35, 9.41, 7.63, 11.07}}};
inline constexpr ByLength two_dict_prefix{{{9.62, 9.37, 8.27, 7.78}, {11.21, 11.09, 9.68, 4.37}}};
inline constexpr ByLength two_dict_prefix_bl10{{{9.84, 9.50, 8.55, 4.09}, {11.37, 11.17, 9.85, 2.32}}};

// Most frequent SUBTLEXus PINs with their probability in percent.
struct TopPin {
    std::string_view pin;
    double percent;
};
inline constexpr std::array<TopPin, 6> subtlexus_top_n4{{
    {"8428", 6.65}, {"9428", 4.64}, {"8447", 3.76}, {"4283", 3.14}, {"9687", 3.04}, {"5669", 2.70},
}};
inline constexpr std::array<TopPin, 6> subtlexus_top_n5{{
    {"84373", 5.12}, {"74448", 3.95}, {"22688", 3.54}, {"84465", 2.62}, {"46464", 2.07}, {"46662", 1.94},
}};

// Reference only, from external datasets this tool does not process:
// uniform-dictionary and RockYou-derived dictionary PINs, RockYou and iPhone
// 4-digit PINs, and the NIST entropy estimates (9 and 10 bits for n = 4, 5).
inline constexpr ByLength uniform_dictionary{{{11.28, 10.94, 10.61, 0.85}, {13.37, 13.08, 12.68, 0.33}}};
inline constexpr Row rockyou_pins{10.74, 11.50, 9.11, 12.29};
inline constexpr Row iphone_pins{11.42, 11.83, 10.37, 12.39};
inline constexpr std::array<double, 2> nist_entropy_bits{9.0, 10.0};

}  // namespace dictpin::published
